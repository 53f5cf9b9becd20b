//! Brute-force model of lattices near a base vertex.
//!
//! Lattices between `L0 = O^3` and `t^3 L0` are the `t`-stable subspaces of
//! `M = (F_q[t]/t^3)^3 = F_q^9`. Coordinate `3k + i` is `t^k e_i`. The
//! oracle counts neighbours straight from the lattice criteria, with no
//! reference to presentations or voltages.

use super::{build_projective_plane, BuildError};

type Vector = Vec<u32>;

/// Subspace of `F_q^9` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Space {
    basis: Vec<Vector>,
}

struct Field {
    q: u32,
}

impl Field {
    fn inv(&self, a: u32) -> u32 {
        (1..self.q).find(|&k| (k * a) % self.q == 1).expect("nonzero element of a prime field")
    }

    fn rref(&self, mut rows: Vec<Vector>) -> Space {
        let q = self.q;
        let width = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for col in 0..width {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = self.inv(rows[r][col]);
            for x in rows[r].iter_mut() {
                *x = (*x * inv) % q;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..width {
                        rows[i][j] = (rows[i][j] + q * q - f * rows[r][j]) % q;
                    }
                }
            }
            r += 1;
        }
        rows.truncate(r);
        Space { basis: rows }
    }

    fn sum(&self, a: &Space, b: &Space) -> Space {
        self.rref(a.basis.iter().chain(&b.basis).cloned().collect())
    }

    fn contains(&self, big: &Space, small: &Space) -> bool {
        self.sum(big, small).dim() == big.dim()
    }

    fn times_t(&self, a: &Space) -> Space {
        self.rref(a.basis.iter().map(|v| shift(v)).collect())
    }

    /// All `b` with `a > b > t a` and `dim(a / b) = codim`. `a` must be a
    /// lattice, so that `a / t a` is 3-dimensional.
    fn sublattices(&self, a: &Space, codim: usize) -> Vec<Space> {
        let ta = self.times_t(a);
        // Lift a basis of a / ta.
        let mut lift = Vec::new();
        let mut acc = ta.clone();
        for v in &a.basis {
            let next = self.sum(&acc, &Space { basis: vec![v.clone()] });
            if next.dim() > acc.dim() {
                lift.push(v.clone());
                acc = next;
            }
        }
        assert_eq!(lift.len(), 3, "a / ta must be 3-dimensional");
        let plane = build_projective_plane(self.q).expect("supported q");
        let combine = |c: &[u32; 3]| -> Vector {
            (0..9)
                .map(|j| (0..3).map(|i| c[i] * lift[i][j]).sum::<u32>() % self.q)
                .collect()
        };
        let subspaces: Vec<Vec<[u32; 3]>> = match codim {
            2 => plane.points().iter().map(|p| vec![*p]).collect(),
            1 => (0..plane.len())
                .map(|l| plane.points_on(l).into_iter().take(2).map(|p| plane.points()[p]).collect())
                .collect(),
            _ => Vec::new(),
        };
        subspaces
            .iter()
            .map(|w| {
                let extra = Space {
                    basis: w.iter().map(combine).collect(),
                };
                self.sum(&ta, &extra)
            })
            .collect()
    }
}

impl Space {
    fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn shift(v: &[u32]) -> Vector {
    let mut out = vec![0; 9];
    for k in 0..2 {
        for i in 0..3 {
            out[3 * (k + 1) + i] = v[3 * k + i];
        }
    }
    out
}

/// Neighbour counts computed from the lattice model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub q: u32,
    /// Pointed edges leaving the base vertex, by type.
    pub edges_by_type: [usize; 2],
    /// Out-neighbours of each pointed edge at the base vertex, by type,
    /// using `a3 + pi a1 = a2`.
    pub edge_out_counts: [Vec<usize>; 2],
    /// The same, counted as "`a1, a2, a3` do not span a chamber".
    pub edge_out_counts_non_chamber: [Vec<usize>; 2],
    /// Out-neighbours of each pointed chamber based at the base vertex,
    /// using `a4 + pi a1 = a3`.
    pub chamber_out_counts: Vec<usize>,
    /// For each type-2 edge `a0 -> c`, the chambers `a0 > b > c`.
    pub chambers_on_type2_edge: Vec<usize>,
    /// For each type-1 edge `a0 -> b`, the chambers `a0 > b > c`.
    pub chambers_on_type1_edge: Vec<usize>,
}

impl OracleReport {
    /// True when every count equals its building value.
    pub fn matches_building(&self) -> bool {
        let q = self.q as usize;
        let all = |v: &[usize], n: usize| !v.is_empty() && v.iter().all(|&x| x == n);
        self.edges_by_type == [q * q + q + 1; 2]
            && self.edge_out_counts.iter().all(|v| all(v, q * q))
            && self.edge_out_counts_non_chamber.iter().all(|v| all(v, q * q))
            && all(&self.chamber_out_counts, q)
            && all(&self.chambers_on_type2_edge, q + 1)
            && all(&self.chambers_on_type1_edge, q + 1)
    }
}

pub fn local_lattice_oracle(q: u32) -> Result<OracleReport, BuildError> {
    build_projective_plane(q)?;
    let f = Field { q };
    let l0 = f.rref(
        (0..9)
            .map(|j| {
                let mut v = vec![0; 9];
                v[j] = 1;
                v
            })
            .collect(),
    );
    let tl0 = f.times_t(&l0);

    let mut edges_by_type = [0; 2];
    let mut edge_out_counts = [Vec::new(), Vec::new()];
    let mut edge_out_counts_non_chamber = [Vec::new(), Vec::new()];
    for codim in [1usize, 2] {
        for a2 in f.sublattices(&l0, codim) {
            edges_by_type[codim - 1] += 1;
            let mut by_sum = 0;
            let mut by_chamber = 0;
            for a3 in f.sublattices(&a2, codim) {
                if f.sum(&a3, &tl0) == a2 {
                    by_sum += 1;
                }
                let chamber = f.contains(&a3, &tl0) || f.contains(&tl0, &a3);
                if !chamber {
                    by_chamber += 1;
                }
            }
            edge_out_counts[codim - 1].push(by_sum);
            edge_out_counts_non_chamber[codim - 1].push(by_chamber);
        }
    }

    let mut chamber_out_counts = Vec::new();
    let mut chambers_on_type1_edge = Vec::new();
    for a2 in f.sublattices(&l0, 1) {
        let ta2 = f.times_t(&a2);
        let mut on_edge = 0;
        for a3 in f.sublattices(&a2, 1) {
            if !f.contains(&a3, &tl0) {
                continue;
            }
            on_edge += 1;
            let count = f
                .sublattices(&a3, 1)
                .into_iter()
                .filter(|a4| f.contains(a4, &ta2))
                .filter(|a4| f.sum(a4, &tl0) == a3)
                .count();
            chamber_out_counts.push(count);
        }
        chambers_on_type1_edge.push(on_edge);
    }

    let chambers_on_type2_edge = f
        .sublattices(&l0, 2)
        .iter()
        .map(|c| f.sublattices(&l0, 1).iter().filter(|b| f.contains(b, c)).count())
        .collect();

    Ok(OracleReport {
        q,
        edges_by_type,
        edge_out_counts,
        edge_out_counts_non_chamber,
        chamber_out_counts,
        chambers_on_type2_edge,
        chambers_on_type1_edge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_counts() {
        let r = local_lattice_oracle(2).unwrap();
        assert_eq!(r.edges_by_type, [7, 7]);
        assert!(r.edge_out_counts.iter().flatten().all(|&n| n == 4));
        assert!(r.chamber_out_counts.iter().all(|&n| n == 2));
        assert!(r.matches_building());
    }

    #[test]
    fn q3_counts() {
        let r = local_lattice_oracle(3).unwrap();
        assert!(r.chambers_on_type2_edge.iter().all(|&n| n == 4));
        assert!(r.matches_building());
    }
}
