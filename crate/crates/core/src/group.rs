//! Finite permutation groups, stored as full multiplication tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Upper bound on group orders we are willing to enumerate.
pub const MAX_GROUP_ORDER: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("generator {label} has degree {got}, expected {expected}")]
    DegreeMismatch { label: String, got: usize, expected: usize },
    #[error("group order exceeds {MAX_GROUP_ORDER}")]
    TooLarge,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("the assignment does not extend to a homomorphism ({0})")]
    NotHomomorphism(String),
    #[error("{0}")]
    NotSubgroup(String),
}

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    /// The `n`-cycle `i -> i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Self((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self * other`, acting as `other` first: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = GroupError;
    fn try_from(v: Vec<usize>) -> Result<Self, GroupError> {
        Self::from_images(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Index of an element in its group's canonical (sorted) element list.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elem(usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite permutation group with named generators.
///
/// Elements are enumerated once, sorted by image list, and indexed; the
/// identity is always `Elem(0)`.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<(String, Elem)>,
    elements: Vec<Perm>,
    index: HashMap<Perm, Elem>,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Closes the generators under composition.
    pub fn generate(degree: usize, generators: Vec<(String, Perm)>) -> Result<Self, GroupError> {
        for (label, g) in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    label: label.clone(),
                    got: g.degree(),
                    expected: degree,
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (_, g) in &generators {
                let y = g.compose(&x);
                if !seen.contains_key(&y) {
                    if seen.len() >= MAX_GROUP_ORDER {
                        return Err(GroupError::TooLarge);
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::from_sorted(degree, elements, generators))
    }

    /// The group with one element acting on one point.
    pub fn trivial() -> Self {
        Self::from_sorted(1, vec![Perm::identity(1)], Vec::new())
    }

    /// Cyclic group generated by the `n`-cycle, with one generator `c`.
    pub fn cyclic(n: usize) -> Self {
        Self::generate(n, vec![("c".into(), Perm::cycle(n))]).expect("cyclic group")
    }

    fn from_sorted(degree: usize, elements: Vec<Perm>, generators: Vec<(String, Perm)>) -> Self {
        let index: HashMap<Perm, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), Elem(i)))
            .collect();
        let n = elements.len();
        let mut table = vec![0; n * n];
        let mut inverses = vec![0; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&a.compose(b)].0;
            }
            inverses[i] = index[&a.inverse()].0;
        }
        let generators = generators
            .into_iter()
            .map(|(l, p)| {
                let e = index[&p];
                (l, e)
            })
            .collect();
        Self {
            degree,
            generators,
            elements,
            index,
            table,
            inverses,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> {
        (0..self.elements.len()).map(Elem)
    }

    pub fn perm(&self, e: Elem) -> &Perm {
        &self.elements[e.0]
    }

    pub fn elem(&self, p: &Perm) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.0 * self.elements.len() + b.0])
    }

    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.0])
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    pub fn generators(&self) -> &[(String, Elem)] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<Elem> {
        self.generators.iter().find(|(l, _)| l == label).map(|(_, e)| *e)
    }

    /// True when `self` and `other` contain the same permutations.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.index.contains_key(p))
    }

    /// Stabiliser of `point`, generated by its own elements' sorted list.
    pub fn stabilizer(&self, point: usize) -> Self {
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|p| p.apply(point) == point)
            .cloned()
            .collect();
        Self::with_generating_set(self.degree, elements)
    }

    /// Subgroup consisting of the given elements, which must be closed.
    pub fn subgroup(&self, members: &[Elem]) -> Result<Self, GroupError> {
        let mut elements: Vec<Perm> = members.iter().map(|&e| self.perm(e).clone()).collect();
        elements.sort();
        elements.dedup();
        let set: std::collections::HashSet<&Perm> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(GroupError::NotSubgroup("subset is not closed".into()));
                }
            }
        }
        if elements.first() != Some(&Perm::identity(self.degree)) {
            return Err(GroupError::NotSubgroup("subset lacks the identity".into()));
        }
        Ok(Self::with_generating_set(self.degree, elements))
    }

    /// Group on a sorted, closed element list, with generators `h0, h1, ...`
    /// picked greedily in element order.
    fn with_generating_set(degree: usize, elements: Vec<Perm>) -> Self {
        let mut gens: Vec<(String, Perm)> = Vec::new();
        let mut reached: std::collections::HashSet<Perm> = [Perm::identity(degree)].into_iter().collect();
        for p in &elements {
            if reached.contains(p) {
                continue;
            }
            gens.push((format!("h{}", gens.len()), p.clone()));
            // Re-close under the enlarged generating set.
            let mut frontier: Vec<Perm> = reached.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for (_, g) in &gens {
                    let y = g.compose(&x);
                    if reached.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
        }
        Self::from_sorted(degree, elements, gens)
    }

    /// Extends an assignment on generators to every element by breadth-first
    /// search, verifying consistency. `mul` combines images as `img(g) * img(h)`.
    pub fn extend_homomorphism<T: Clone + PartialEq>(
        &self,
        images: &[(String, T)],
        identity: T,
        mul: impl Fn(&T, &T) -> T,
    ) -> Result<Vec<T>, GroupError> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (label, e) in &self.generators {
            let img = images
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, t)| t.clone())
                .ok_or_else(|| GroupError::UnknownGenerator(label.clone()))?;
            gens.push((*e, img));
        }
        for (l, _) in images {
            if self.generator(l).is_none() {
                return Err(GroupError::UnknownGenerator(l.clone()));
            }
        }
        let mut out: Vec<Option<T>> = vec![None; self.order()];
        out[0] = Some(identity);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            let tx = out[x.0].clone().expect("visited");
            for (g, tg) in &gens {
                let y = self.mul(*g, x);
                let ty = mul(tg, &tx);
                match &out[y.0] {
                    Some(prev) if *prev != ty => {
                        return Err(GroupError::NotHomomorphism(format!(
                            "conflicting images for element {:?}",
                            self.perm(y)
                        )));
                    }
                    Some(_) => {}
                    None => {
                        out[y.0] = Some(ty);
                        queue.push_back(y);
                    }
                }
            }
        }
        // Every (generator, element) pair was checked above, which is
        // exactly the homomorphism condition.
        Ok(out.into_iter().map(|t| t.expect("generated")).collect())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::generate(
            3,
            vec![
                ("s".into(), Perm::from_images(vec![1, 0, 2]).unwrap()),
                ("t".into(), Perm::cycle(3)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn symmetric_group_tables() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.perm(g.identity()).is_identity());
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
        let stab = g.stabilizer(0);
        assert_eq!(stab.order(), 2);
        assert!(stab.is_subgroup_of(&g));
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::from_images(vec![1, 0, 2]).unwrap();
        let b = Perm::cycle(3);
        assert_eq!(a.compose(&b).apply(0), a.apply(b.apply(0)));
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn homomorphism_extension() {
        let g = s3();
        let sign = g
            .extend_homomorphism(&[("s".into(), -1i64), ("t".into(), 1)], 1, |a, b| a * b)
            .unwrap();
        assert_eq!(sign.iter().filter(|&&s| s == -1).count(), 3);
        let bad = g.extend_homomorphism(&[("s".into(), 1i64), ("t".into(), -1)], 1, |a, b| a * b);
        assert!(bad.is_err());
    }
}
