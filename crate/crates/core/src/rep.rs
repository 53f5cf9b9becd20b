//! Finite-dimensional representations of voltage groups.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::numeric::CMatrix;
use crate::algebra::{parse_rational, QMatrix};
use crate::complex::GroupData;
use crate::group::{Elem, FiniteGroup, GroupError, Perm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generator {label} image has shape {rows}x{cols}, expected {dim}x{dim}")]
    Shape { label: String, rows: usize, cols: usize, dim: usize },
    #[error("representation group is not a subgroup of the target group")]
    NotSubgroup,
    #[error("representation is not defined on voltage {0:?}")]
    UndefinedOn(Perm),
    #[error("representation file: {0}")]
    Data(String),
}

/// How a representation was specified; kept for serialisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Trivial,
    Permutation,
    Matrix,
}

/// A rational matrix representation `rho: H -> GL_d(Q)`, tabulated on every
/// element of `H`.
#[derive(Clone, Debug)]
pub struct Representation {
    group: FiniteGroup,
    dim: usize,
    kind: RepKind,
    matrices: Vec<QMatrix>,
}

impl Representation {
    pub fn trivial(group: FiniteGroup) -> Self {
        let matrices = vec![QMatrix::identity(1); group.order()];
        Self {
            group,
            dim: 1,
            kind: RepKind::Trivial,
            matrices,
        }
    }

    /// Builds `rho` from images of the named generators, rejecting
    /// assignments that violate a relation of the group.
    pub fn from_generator_images(
        group: FiniteGroup,
        dim: usize,
        images: Vec<(String, QMatrix)>,
    ) -> Result<Self, RepError> {
        for (label, m) in &images {
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Shape {
                    label: label.clone(),
                    rows: m.rows(),
                    cols: m.cols(),
                    dim,
                });
            }
        }
        let matrices = group.extend_homomorphism(&images, QMatrix::identity(dim), QMatrix::mul)?;
        Ok(Self {
            group,
            dim,
            kind: RepKind::Matrix,
            matrices,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn matrix(&self, g: Elem) -> &QMatrix {
        &self.matrices[g.index()]
    }

    pub fn matrix_of_perm(&self, p: &Perm) -> Option<&QMatrix> {
        self.group.elem(p).map(|e| self.matrix(e))
    }

    pub fn character(&self) -> Vec<BigRational> {
        self.matrices.iter().map(QMatrix::trace).collect()
    }

    /// `g -> rho(g^-1)^T`.
    pub fn dual(&self) -> Self {
        let matrices = self
            .group
            .elements()
            .map(|g| self.matrix(self.group.inv(g)).transpose())
            .collect();
        Self {
            group: self.group.clone(),
            dim: self.dim,
            kind: self.kind,
            matrices,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.group != other.group {
            return Err(RepError::NotSubgroup);
        }
        let d = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = QMatrix::zeros(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Self {
            group: self.group.clone(),
            dim: d,
            kind: RepKind::Matrix,
            matrices,
        })
    }

    /// Converts to floating point.
    pub fn to_complex(&self) -> ComplexRepresentation {
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let mut c = CMatrix::zeros(self.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let v = m.get(i, j);
                        if !v.is_zero() {
                            c.add_to(i, j, Complex64::new(rat_to_f64(v), 0.0));
                        }
                    }
                }
                c
            })
            .collect();
        ComplexRepresentation {
            group: self.group.clone(),
            dim: self.dim,
            matrices,
        }
    }
}

fn rat_to_f64(v: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

/// JSON shape of a representation file. `matrices` maps generator labels
/// to rows of rational strings and is only read for `"matrix"`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RepresentationData {
    pub group: GroupData,
    pub rep: RepSpec,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    #[serde(rename = "type")]
    pub kind: RepKind,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

impl Representation {
    /// `"permutation"` is the action of the group on the points it permutes.
    pub fn from_data(data: &RepresentationData) -> Result<Self, RepError> {
        let gens = data.group.generators.iter().map(|(l, p)| (l.clone(), p.clone())).collect();
        let group = FiniteGroup::generate(data.group.degree, gens)?;
        match data.rep.kind {
            RepKind::Trivial => Ok(Self::trivial(group)),
            RepKind::Permutation => Ok(natural_representation(&group)),
            RepKind::Matrix => {
                let mut images = Vec::new();
                for (label, rows) in &data.rep.matrices {
                    let rows = rows
                        .iter()
                        .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| RepError::Data(format!("{label}: {e}")))?;
                    let m = QMatrix::from_rows(rows).map_err(|e| RepError::Data(format!("{label}: {e}")))?;
                    images.push((label.clone(), m));
                }
                let dim = images
                    .first()
                    .map(|(_, m)| m.rows())
                    .ok_or_else(|| RepError::Data("matrix representation without matrices".into()))?;
                Self::from_generator_images(group, dim, images)
            }
        }
    }

    /// Permutation representations other than the natural action are
    /// written as matrices.
    pub fn to_data(&self) -> RepresentationData {
        let g = &self.group;
        let generators = g.generators().iter().map(|(l, e)| (l.clone(), g.perm(*e).clone())).collect();
        let kind = match self.kind {
            RepKind::Permutation if natural_representation(g).matrices != self.matrices => RepKind::Matrix,
            k => k,
        };
        let matrices = match kind {
            RepKind::Matrix => g
                .generators()
                .iter()
                .map(|(l, e)| {
                    let rows = self.matrix(*e).to_rows();
                    (l.clone(), rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
                })
                .collect(),
            _ => BTreeMap::new(),
        };
        RepresentationData {
            group: GroupData {
                degree: g.degree(),
                generators,
            },
            rep: RepSpec {
                kind,
                matrices,
            },
        }
    }
}

/// Permutation representation for an action of `group` on `n` points,
/// given by the images of the group's generators.
pub fn permutation_representation(
    group: &FiniteGroup,
    action: &[(String, Perm)],
) -> Result<Representation, RepError> {
    let n = action.first().map_or(1, |(_, p)| p.degree());
    if let Some((label, p)) = action.iter().find(|(_, p)| p.degree() != n) {
        return Err(GroupError::DegreeMismatch {
            label: label.clone(),
            got: p.degree(),
            expected: n,
        }
        .into());
    }
    let perms = group.extend_homomorphism(action, Perm::identity(n), Perm::compose)?;
    Ok(Representation {
        group: group.clone(),
        dim: n,
        kind: RepKind::Permutation,
        matrices: perms.iter().map(|p| QMatrix::permutation(p.images())).collect(),
    })
}

/// The action of `group` on the points it permutes.
pub fn natural_representation(group: &FiniteGroup) -> Representation {
    Representation {
        group: group.clone(),
        dim: group.degree(),
        kind: RepKind::Permutation,
        matrices: group
            .elements()
            .map(|g| QMatrix::permutation(group.perm(g).images()))
            .collect(),
    }
}

/// The action of `group` on itself by left multiplication.
pub fn regular_representation(group: &FiniteGroup) -> Representation {
    let n = group.order();
    Representation {
        group: group.clone(),
        dim: n,
        kind: RepKind::Permutation,
        matrices: group
            .elements()
            .map(|g| {
                let images: Vec<usize> = group.elements().map(|h| group.mul(g, h).index()).collect();
                QMatrix::permutation(&images)
            })
            .collect(),
    }
}

/// `g -> rho(g^-1)^T`.
pub fn dual_representation(rho: &Representation) -> Representation {
    rho.dual()
}

/// Left coset representatives of `sub` in `group`: the first element of
/// each coset in canonical order.
pub fn coset_representatives(group: &FiniteGroup, sub: &FiniteGroup) -> Result<Vec<Elem>, RepError> {
    if !sub.is_subgroup_of(group) {
        return Err(RepError::NotSubgroup);
    }
    let members: Vec<Elem> = sub
        .elements()
        .map(|h| group.elem(sub.perm(h)).expect("subgroup member"))
        .collect();
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if covered[g.index()] {
            continue;
        }
        reps.push(g);
        for &h in &members {
            covered[group.mul(g, h).index()] = true;
        }
    }
    Ok(reps)
}

/// `Ind_{H'}^{H} rho'` in the left-coset basis.
pub fn induce(rho_sub: &Representation, group: &FiniteGroup) -> Result<Representation, RepError> {
    let sub = rho_sub.group();
    let reps = coset_representatives(group, sub)?;
    let m = reps.len();
    let d = rho_sub.dim();
    let matrices = group
        .elements()
        .map(|g| {
            let mut out = QMatrix::zeros(m * d, m * d);
            for (i, &ri) in reps.iter().enumerate() {
                for (j, &rj) in reps.iter().enumerate() {
                    let x = group.product([group.inv(ri), g, rj]);
                    if let Some(block) = rho_sub.matrix_of_perm(group.perm(x)) {
                        for a in 0..d {
                            for b in 0..d {
                                out.set(i * d + a, j * d + b, block.get(a, b).clone());
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(Representation {
        group: group.clone(),
        dim: m * d,
        kind: RepKind::Matrix,
        matrices,
    })
}

/// A complex matrix representation, for characters that are not rational.
#[derive(Clone, Debug)]
pub struct ComplexRepresentation {
    group: FiniteGroup,
    dim: usize,
    matrices: Vec<CMatrix>,
}

const CONSISTENCY_TOL: f64 = 1e-9;

#[derive(Clone)]
struct Approx(CMatrix);

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        let n = self.0.size();
        n == other.0.size()
            && (0..n).all(|i| (0..n).all(|j| (self.0.get(i, j) - other.0.get(i, j)).norm() < CONSISTENCY_TOL))
    }
}

impl ComplexRepresentation {
    pub fn from_generator_images(
        group: FiniteGroup,
        dim: usize,
        images: Vec<(String, CMatrix)>,
    ) -> Result<Self, RepError> {
        for (label, m) in &images {
            if m.size() != dim {
                return Err(RepError::Shape {
                    label: label.clone(),
                    rows: m.size(),
                    cols: m.size(),
                    dim,
                });
            }
        }
        let images: Vec<(String, Approx)> = images.into_iter().map(|(l, m)| (l, Approx(m))).collect();
        let table = group.extend_homomorphism(&images, Approx(CMatrix::identity(dim)), |a, b| Approx(a.0.mul(&b.0)))?;
        Ok(Self {
            group,
            dim,
            matrices: table.into_iter().map(|a| a.0).collect(),
        })
    }

    /// One-dimensional character with the given generator values.
    pub fn character(group: FiniteGroup, values: &[(String, Complex64)]) -> Result<Self, RepError> {
        let images = values
            .iter()
            .map(|(l, z)| {
                let mut m = CMatrix::zeros(1);
                m.add_to(0, 0, *z);
                (l.clone(), m)
            })
            .collect();
        Self::from_generator_images(group, 1, images)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: Elem) -> &CMatrix {
        &self.matrices[g.index()]
    }

    pub fn matrix_of_perm(&self, p: &Perm) -> Option<&CMatrix> {
        self.group.elem(p).map(|e| self.matrix(e))
    }

    /// `g -> rho(g^-1)^T`.
    pub fn dual(&self) -> Self {
        let matrices = self
            .group
            .elements()
            .map(|g| {
                let m = self.matrix(self.group.inv(g));
                m.transpose()
            })
            .collect();
        Self {
            group: self.group.clone(),
            dim: self.dim,
            matrices,
        }
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
    fn induced_trivial_is_coset_permutation() {
        let g = s3();
        let h = g.stabilizer(0);
        let ind = induce(&Representation::trivial(h), &g).unwrap();
        assert_eq!(ind.dim(), 3);
        let nat = natural_representation(&g);
        assert_eq!(ind.character(), nat.character());
    }

    #[test]
    fn regular_character() {
        let g = s3();
        let reg = regular_representation(&g);
        let chi = reg.character();
        assert_eq!(chi[0], BigRational::from_integer(6.into()));
        assert!(chi[1..].iter().all(Zero::is_zero));
        let ind = induce(&Representation::trivial(FiniteGroup::generate(3, vec![]).unwrap()), &g).unwrap();
        assert_eq!(ind.character(), chi);
    }

    #[test]
    fn dual_of_permutation_is_itself() {
        let g = s3();
        let nat = natural_representation(&g);
        for e in g.elements() {
            assert_eq!(nat.dual().matrix(e), nat.matrix(e));
        }
    }

    #[test]
    fn complex_character_rejects_bad_values() {
        let g = FiniteGroup::cyclic(3);
        let zeta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!(ComplexRepresentation::character(g.clone(), &[("c".into(), zeta)]).is_ok());
        assert!(ComplexRepresentation::character(g, &[("c".into(), Complex64::new(0.0, 1.0))]).is_err());
    }
}
