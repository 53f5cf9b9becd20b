//! Triangle presentations and the one-vertex complexes they define.
//!
//! A triangle presentation is a set `T` of point triples with `(x, y, z)`
//! in `T` only if `y` lies on `lambda(x)`, `z` on `lambda(y)` and `x` on
//! `lambda(z)`; every incident pair `(x, y)` has exactly one completion; and
//! `T` is closed under cyclic shifts. Triples `(x, x, x)` are excluded since
//! they produce torsion. The group `<a_x | a_x a_y a_z = 1>` then acts simply
//! transitively on the vertices of the building.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::plane::build_projective_plane;
use super::{BuildError, ProjectivePlane};
use crate::complex::{from_parts, Chamber, Edge, EdgeType, Link, QuotientComplex};
use crate::group::{Elem, FiniteGroup, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePresentation {
    plane: ProjectivePlane,
    lambda: Vec<usize>,
    triples: Vec<[usize; 3]>,
}

impl TrianglePresentation {
    /// Checks the presentation axioms and sorts the triples.
    pub fn new(plane: ProjectivePlane, lambda: Vec<usize>, mut triples: Vec<[usize; 3]>) -> Result<Self, BuildError> {
        check_bijection(&plane, &lambda)?;
        triples.sort();
        triples.dedup();
        let n = plane.len();
        let mut completions: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &triples {
            let [x, y, z] = *t;
            if x >= n || y >= n || z >= n {
                return Err(BuildError::InvalidPresentation(format!("triple {t:?} out of range")));
            }
            if x == y && y == z {
                return Err(BuildError::InvalidPresentation(format!("triple {t:?} has torsion")));
            }
            if !plane.incident(y, lambda[x]) {
                return Err(BuildError::InvalidPresentation(format!("triple {t:?}: y not on lambda(x)")));
            }
            if triples.binary_search(&[y, z, x]).is_err() {
                return Err(BuildError::InvalidPresentation(format!("triple {t:?}: not cyclically closed")));
            }
            if completions.insert((x, y), z).is_some() {
                return Err(BuildError::InvalidPresentation(format!("pair ({x}, {y}) has two completions")));
            }
        }
        for x in 0..n {
            for y in plane.points_on(lambda[x]) {
                if !completions.contains_key(&(x, y)) {
                    return Err(BuildError::InvalidPresentation(format!("pair ({x}, {y}) has no completion")));
                }
            }
        }
        Ok(Self { plane, lambda, triples })
    }

    pub fn plane(&self) -> &ProjectivePlane {
        &self.plane
    }

    pub fn q(&self) -> u32 {
        self.plane.q()
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// Orbit representatives: the lexicographically least rotation.
    pub fn orbit_representatives(&self) -> Vec<[usize; 3]> {
        self.triples
            .iter()
            .copied()
            .filter(|&[x, y, z]| [x, y, z] <= [y, z, x] && [x, y, z] <= [z, x, y])
            .collect()
    }

    /// Generator label of point `x`.
    pub fn generator_label(x: usize) -> String {
        format!("a{x}")
    }

    pub fn to_data(&self) -> PresentationData {
        PresentationData {
            q: self.q(),
            lambda: self.lambda.clone(),
            triples: self.triples.clone(),
        }
    }

    pub fn from_data(data: &PresentationData) -> Result<Self, BuildError> {
        let plane = build_projective_plane(data.q)?;
        Self::new(plane, data.lambda.clone(), data.triples.clone())
    }
}

/// JSON shape of a presentation.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationData {
    pub q: u32,
    pub lambda: Vec<usize>,
    pub triples: Vec<[usize; 3]>,
}

fn check_bijection(plane: &ProjectivePlane, lambda: &[usize]) -> Result<(), BuildError> {
    let n = plane.len();
    let mut seen = vec![false; n];
    if lambda.len() != n || lambda.iter().any(|&l| l >= n || std::mem::replace(&mut seen[l], true)) {
        return Err(BuildError::NotABijection);
    }
    Ok(())
}

/// Depth-first search over completions of incident pairs, in lexicographic
/// order. Returns the first presentation found.
pub fn search_triangle_presentation(
    plane: &ProjectivePlane,
    lambda: &[usize],
) -> Result<Option<TrianglePresentation>, BuildError> {
    check_bijection(plane, lambda)?;
    let n = plane.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| plane.points_on(lambda[x]).into_iter().map(move |y| (x, y)))
        .collect();
    let pair_index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    // Candidate z for (x, y): on lambda(y), with x on lambda(z).
    let candidates: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(x, y)| {
            (0..n)
                .filter(|&z| plane.incident(z, lambda[y]) && plane.incident(x, lambda[z]) && !(x == y && y == z))
                .collect()
        })
        .collect();
    // Each cyclic orbit uses three distinct pairs.
    if pairs.len() % 3 != 0 {
        return Ok(None);
    }
    let mut assigned: Vec<Option<usize>> = vec![None; pairs.len()];

    fn go(
        pairs: &[(usize, usize)],
        pair_index: &HashMap<(usize, usize), usize>,
        candidates: &[Vec<usize>],
        assigned: &mut [Option<usize>],
    ) -> bool {
        let Some(i) = assigned.iter().position(Option::is_none) else {
            return true;
        };
        let (x, y) = pairs[i];
        for &z in &candidates[i] {
            let (Some(&j), Some(&k)) = (pair_index.get(&(y, z)), pair_index.get(&(z, x))) else {
                continue;
            };
            if assigned[j].is_some() || assigned[k].is_some() || j == i || k == i || j == k {
                continue;
            }
            assigned[i] = Some(z);
            assigned[j] = Some(x);
            assigned[k] = Some(y);
            if go(pairs, pair_index, candidates, assigned) {
                return true;
            }
            assigned[i] = None;
            assigned[j] = None;
            assigned[k] = None;
        }
        false
    }

    if !go(&pairs, &pair_index, &candidates, &mut assigned) {
        return Ok(None);
    }
    let triples = pairs
        .iter()
        .zip(&assigned)
        .map(|(&(x, y), z)| [x, y, z.expect("complete assignment")])
        .collect();
    TrianglePresentation::new(plane.clone(), lambda.to_vec(), triples).map(Some)
}

/// Point-line bijections in lexicographic order of their image lists.
///
/// The bijection need not come from a correlation of the plane; the
/// cyclic presentation `(i, i + 1, i + 3)` over `Z/7` for instance uses
/// `lambda(i) = i + {1, 2, 4}`.
pub fn correspondences(plane: &ProjectivePlane) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((0..plane.len()).collect());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut p = cur.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
            p.swap(i - 1, j);
            p[i..].reverse();
            next = Some(p);
        }
        Some(cur)
    })
}

/// First presentation found over [`correspondences`]. Returns `None` at
/// once when the incident pairs cannot be split into cyclic orbits.
pub fn find_presentation(plane: &ProjectivePlane) -> Option<TrianglePresentation> {
    let q = plane.q() as usize;
    if ((q + 1) * plane.len()) % 3 != 0 {
        return None;
    }
    correspondences(plane).find_map(|lambda| search_triangle_presentation(plane, &lambda).ok().flatten())
}

/// A homomorphism from the presentation group to a finite permutation
/// group, given by the images of the generators `a_x`.
#[derive(Clone, Debug)]
pub struct VoltageAssignment {
    group: FiniteGroup,
    images: Vec<Elem>,
}

impl VoltageAssignment {
    /// Generates the voltage group from the images, labelled `a0, a1, ...`,
    /// and checks every relation `a_x a_y a_z = 1`.
    pub fn new(t: &TrianglePresentation, images: Vec<Perm>) -> Result<Self, BuildError> {
        if images.len() != t.plane().len() {
            return Err(BuildError::InvalidVoltages(format!(
                "{} images for {} generators",
                images.len(),
                t.plane().len()
            )));
        }
        let degree = images[0].degree();
        let gens = images
            .iter()
            .enumerate()
            .map(|(x, p)| (TrianglePresentation::generator_label(x), p.clone()))
            .collect();
        let group = FiniteGroup::generate(degree, gens).map_err(|e| BuildError::InvalidVoltages(e.to_string()))?;
        let images: Vec<Elem> = images.iter().map(|p| group.elem(p).expect("generator")).collect();
        for &[x, y, z] in t.triples() {
            if group.product([images[x], images[y], images[z]]) != group.identity() {
                return Err(BuildError::RelationViolated([x, y, z]));
            }
        }
        Ok(Self { group, images })
    }

    /// All generators to the identity of the one-point group.
    pub fn trivial(t: &TrianglePresentation) -> Self {
        Self::new(t, vec![Perm::identity(1); t.plane().len()]).expect("trivial voltages satisfy every relation")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn image(&self, x: usize) -> Elem {
        self.images[x]
    }
}

/// The one-vertex complex of `t`, with voltages from `phi`.
///
/// Edge `a{x}` is `1 -> a_x` (type 1); edge `a{x}^-1` is `a_x -> 1` (type
/// 2), the translate of `1 -> a_x^-1`. For an orbit representative
/// `(x, y, z)` the chambers are `C(1, a_x, a_z^-1)`, `C(a_x, a_z^-1, 1)` and
/// `C(a_z^-1, 1, a_x)`, each the rotation of the previous.
pub fn complex_from_presentation(t: &TrianglePresentation, phi: &VoltageAssignment) -> QuotientComplex {
    let g = phi.group();
    let id = g.identity();
    let n = t.plane().len();
    let a = |x: usize| phi.image(x);
    let ainv = |x: usize| g.inv(phi.image(x));
    let plus = |x: usize| x;
    let minus = |x: usize| n + x;

    let mut edges = Vec::with_capacity(2 * n);
    for x in 0..n {
        edges.push(Edge {
            id: TrianglePresentation::generator_label(x),
            ty: EdgeType::One,
            tail: Link::new(0, id),
            head: Link::new(0, a(x)),
            opp: Link::new(minus(x), id),
        });
    }
    for x in 0..n {
        edges.push(Edge {
            id: format!("{}^-1", TrianglePresentation::generator_label(x)),
            ty: EdgeType::Two,
            tail: Link::new(0, a(x)),
            head: Link::new(0, id),
            opp: Link::new(plus(x), id),
        });
    }

    let orbits = t.orbit_representatives();
    let mut chambers = Vec::with_capacity(3 * orbits.len());
    // Where the chamber C(1, a_w, a_w a_v) of triple (w, v, s) sits.
    let mut chamber_of_triple: HashMap<[usize; 3], Link> = HashMap::new();
    for (k, &[x, y, z]) in orbits.iter().enumerate() {
        let base = 3 * k;
        let name = |r: usize| format!("t{x}.{y}.{z}/{r}");
        chambers.push(Chamber {
            id: name(0),
            rot: Link::new(base + 1, id),
            e01: Link::new(plus(x), id),
            e12: Link::new(plus(y), a(x)),
            e02: Link::new(minus(z), ainv(z)),
        });
        chambers.push(Chamber {
            id: name(1),
            rot: Link::new(base + 2, id),
            e01: Link::new(plus(y), a(x)),
            e12: Link::new(plus(z), ainv(z)),
            e02: Link::new(minus(x), id),
        });
        chambers.push(Chamber {
            id: name(2),
            rot: Link::new(base, id),
            e01: Link::new(plus(z), ainv(z)),
            e12: Link::new(plus(x), id),
            e02: Link::new(minus(y), a(x)),
        });
        chamber_of_triple.insert([x, y, z], Link::new(base, id));
        chamber_of_triple.insert([y, z, x], Link::new(base + 1, ainv(x)));
        chamber_of_triple.insert([z, x, y], Link::new(base + 2, a(z)));
    }

    let lambda = t.lambda();
    let plane = t.plane();
    let mut edge_out = Vec::with_capacity(2 * n);
    for x in 0..n {
        edge_out.push(
            (0..n)
                .filter(|&y| !plane.incident(y, lambda[x]))
                .map(|y| Link::new(plus(y), a(x)))
                .collect(),
        );
    }
    for x in 0..n {
        edge_out.push(
            (0..n)
                .filter(|&y| !plane.incident(x, lambda[y]))
                .map(|y| Link::new(minus(y), ainv(y)))
                .collect(),
        );
    }

    let chamber_out = chambers
        .iter()
        .map(|ch| {
            let w = ch.e12.target;
            t.triples()
                .iter()
                .filter(|tr| tr[0] == w)
                .map(|tr| {
                    let l = chamber_of_triple[tr];
                    Link::new(l.target, g.mul(ch.e12.voltage, l.voltage))
                })
                .filter(|l| l.target != ch.rot.target)
                .collect()
        })
        .collect();

    from_parts(t.q(), g.clone(), vec!["v".into()], edges, chambers, edge_out, chamber_out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_search_finds_21_triples() {
        let plane = build_projective_plane(2).unwrap();
        let t = find_presentation(&plane).expect("a presentation exists for q = 2");
        assert_eq!(t.triples().len(), 21);
        assert_eq!(t.orbit_representatives().len(), 7);
        for &[x, y, z] in t.triples() {
            assert!(t.triples().contains(&[y, z, x]));
        }
    }

    #[test]
    fn q3_has_no_torsion_free_presentation() {
        // 52 incident pairs cannot split into cyclic orbits of size 3.
        let plane = build_projective_plane(3).unwrap();
        let lambda = correspondences(&plane).next().unwrap();
        assert_eq!(search_triangle_presentation(&plane, &lambda).unwrap(), None);
        assert!(find_presentation(&plane).is_none());
    }

    #[test]
    fn rejects_non_bijection() {
        let plane = build_projective_plane(2).unwrap();
        assert_eq!(
            search_triangle_presentation(&plane, &[0; 7]),
            Err(BuildError::NotABijection)
        );
    }
}
