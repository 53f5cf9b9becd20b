//! Block operators on cochains twisted by a representation.
//!
//! An operator is a list of terms `coeff * u^power * rho(voltage)` placed in
//! block `(row, col)`; rows and columns index representatives in canonical
//! order. Materialising against a `d`-dimensional representation gives a
//! `(rows d) x (cols d)` polynomial matrix.
//!
//! Conventions: `A_i` sums over type-`i` edges leaving a vertex; `M_E` and
//! `M_C` follow out-neighbours with weight `u^type` and `u`; `d0 f(e) =
//! u^type f(head) - f(tail)`; `d1 f(c) = u f(e12) - f(e02) + f(e01)`;
//! `delta1` sums over edges ending at a vertex with weight
//! `(-q)^(2 - type) u^(3 - type)`; `delta2` is `u^2` times the sum over
//! chambers with `e12 = e` on type-1 rows and `-u` times the sum over
//! chambers with `e12 = opp(e)` on type-2 rows.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::algebra::numeric::CMatrix;
use crate::algebra::{AlgebraError, PolyMatrix, Polynomial, QMatrix};
use crate::complex::{EdgeType, QuotientComplex};
use crate::group::Elem;
use crate::rep::{ComplexRepresentation, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("representation is not defined on voltage {0}")]
    RepMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub row: usize,
    pub col: usize,
    pub voltage: Elem,
    pub coeff: i64,
    pub power: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockOperator {
    pub rows: usize,
    pub cols: usize,
    pub terms: Vec<Term>,
}

impl BlockOperator {
    fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            terms: Vec::new(),
        }
    }

    fn push(&mut self, row: usize, col: usize, voltage: Elem, coeff: i64, power: usize) {
        self.terms.push(Term {
            row,
            col,
            voltage,
            coeff,
            power,
        });
    }

    /// `coeff * u^power * I` with identity voltages.
    pub fn identity(n: usize, identity: Elem, coeff: i64, power: usize) -> Self {
        let mut op = Self::new(n, n);
        for i in 0..n {
            op.push(i, i, identity, coeff, power);
        }
        op
    }

    /// `coeff * u^power * self`.
    pub fn scaled(&self, coeff: i64, power: usize) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff * coeff,
                    power: t.power + power,
                    ..*t
                })
                .collect(),
        }
    }

    /// Formal sum; shapes must agree.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "operator shapes differ");
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self {
            rows: self.rows,
            cols: self.cols,
            terms,
        }
    }

    pub fn materialize(&self, table: &RepTable) -> PolyMatrix {
        let d = table.dim;
        let mut m = PolyMatrix::zeros(self.rows * d, self.cols * d);
        for t in &self.terms {
            let p = Polynomial::monomial(BigRational::from_integer(t.coeff.into()), t.power);
            m.add_block(t.row, t.col, &table.matrices[t.voltage.index()], &p);
        }
        m
    }

    /// Numerical value at `u` for a square operator.
    pub fn eval_complex(&self, table: &ComplexRepTable, u: Complex64) -> CMatrix {
        let d = table.dim;
        let mut m = CMatrix::zeros(self.rows * d);
        for t in &self.terms {
            let w = u.powu(t.power as u32) * t.coeff as f64;
            let block = &table.matrices[t.voltage.index()];
            for a in 0..d {
                for b in 0..d {
                    let v = block.get(a, b);
                    if v != Complex64::new(0.0, 0.0) {
                        m.add_to(t.row * d + a, t.col * d + b, w * v);
                    }
                }
            }
        }
        m
    }

    /// Largest power of `u` per block row, summed: a bound on the degree of
    /// the determinant divided by the block dimension.
    pub fn degree_bound(&self) -> usize {
        let mut per_row = vec![0; self.rows];
        for t in &self.terms {
            per_row[t.row] = per_row[t.row].max(t.power);
        }
        per_row.iter().sum()
    }
}

/// Matrices of a rational representation, indexed by the complex's voltages.
#[derive(Clone, Debug)]
pub struct RepTable {
    pub dim: usize,
    pub matrices: Vec<QMatrix>,
}

impl RepTable {
    pub fn new(c: &QuotientComplex, rho: &Representation) -> Result<Self, OperatorError> {
        let g = c.group();
        let matrices = g
            .elements()
            .map(|e| {
                rho.matrix_of_perm(g.perm(e))
                    .cloned()
                    .ok_or_else(|| OperatorError::RepMismatch(format!("{:?}", g.perm(e))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            dim: rho.dim(),
            matrices,
        })
    }
}

/// Matrices of a complex representation, indexed by the complex's voltages.
#[derive(Clone, Debug)]
pub struct ComplexRepTable {
    pub dim: usize,
    pub matrices: Vec<CMatrix>,
}

impl ComplexRepTable {
    pub fn new(c: &QuotientComplex, rho: &ComplexRepresentation) -> Result<Self, OperatorError> {
        let g = c.group();
        let matrices = g
            .elements()
            .map(|e| {
                rho.matrix_of_perm(g.perm(e))
                    .cloned()
                    .ok_or_else(|| OperatorError::RepMismatch(format!("{:?}", g.perm(e))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            dim: rho.dim(),
            matrices,
        })
    }
}

fn type_len(t: EdgeType) -> usize {
    t.as_u8() as usize
}

/// `(A_1, A_2)`.
pub fn vertex_operators(c: &QuotientComplex) -> [BlockOperator; 2] {
    let g = c.group();
    let n = c.vertices().len();
    let mut ops = [BlockOperator::new(n, n), BlockOperator::new(n, n)];
    for e in c.edges() {
        let v = g.mul(g.inv(e.tail.voltage), e.head.voltage);
        ops[type_len(e.ty) - 1].push(e.tail.target, e.head.target, v, 1, 0);
    }
    ops
}

/// `I - A_1 u + q A_2 u^2 - q^3 u^3 I`, whose determinant is `P0`.
pub fn vertex_polynomial_operator(c: &QuotientComplex) -> BlockOperator {
    let q = i64::from(c.q());
    let id = c.group().identity();
    let n = c.vertices().len();
    let [a1, a2] = vertex_operators(c);
    BlockOperator::identity(n, id, 1, 0)
        .plus(&a1.scaled(-1, 1))
        .plus(&a2.scaled(q, 2))
        .plus(&BlockOperator::identity(n, id, -q * q * q, 3))
}

pub fn edge_operator(c: &QuotientComplex) -> BlockOperator {
    let n = c.edges().len();
    let mut op = BlockOperator::new(n, n);
    for (i, e) in c.edges().iter().enumerate() {
        for l in c.edge_out(i) {
            op.push(i, l.target, l.voltage, 1, type_len(e.ty));
        }
    }
    op
}

pub fn chamber_operator(c: &QuotientComplex) -> BlockOperator {
    let n = c.chambers().len();
    let mut op = BlockOperator::new(n, n);
    for i in 0..n {
        for l in c.chamber_out(i) {
            op.push(i, l.target, l.voltage, 1, 1);
        }
    }
    op
}

/// `I - op`.
pub fn one_minus(c: &QuotientComplex, op: &BlockOperator) -> BlockOperator {
    BlockOperator::identity(op.rows, c.group().identity(), 1, 0).plus(&op.scaled(-1, 0))
}

/// `[d0, d1, delta1, delta2]`.
pub fn cochain_operators(c: &QuotientComplex) -> [BlockOperator; 4] {
    let g = c.group();
    let q = i64::from(c.q());
    let (n0, n1, n2) = (c.vertices().len(), c.edges().len(), c.chambers().len());
    let mut d0 = BlockOperator::new(n1, n0);
    let mut d1 = BlockOperator::new(n2, n1);
    let mut delta1 = BlockOperator::new(n0, n1);
    let mut delta2 = BlockOperator::new(n1, n2);
    for (i, e) in c.edges().iter().enumerate() {
        let k = type_len(e.ty);
        d0.push(i, e.head.target, e.head.voltage, 1, k);
        d0.push(i, e.tail.target, e.tail.voltage, -1, 0);
        delta1.push(e.head.target, i, g.inv(e.head.voltage), (-q).pow(2 - k as u32), 3 - k);
    }
    for (x, ch) in c.chambers().iter().enumerate() {
        d1.push(x, ch.e12.target, ch.e12.voltage, 1, 1);
        d1.push(x, ch.e02.target, ch.e02.voltage, -1, 0);
        d1.push(x, ch.e01.target, ch.e01.voltage, 1, 0);
        delta2.push(ch.e12.target, x, g.inv(ch.e12.voltage), 1, 2);
    }
    for (s, e) in c.edges().iter().enumerate() {
        if e.ty != EdgeType::Two {
            continue;
        }
        for (x, ch) in c.chambers().iter().enumerate() {
            if ch.e12.target == e.opp.target {
                delta2.push(s, x, g.mul(e.opp.voltage, g.inv(ch.e12.voltage)), -1, 1);
            }
        }
    }
    [d0, d1, delta1, delta2]
}

/// `[J_E, Q, N, J_C]`.
pub fn auxiliary_operators(c: &QuotientComplex) -> [BlockOperator; 4] {
    let g = c.group();
    let id = g.identity();
    let (n1, n2) = (c.edges().len(), c.chambers().len());
    let mut je = BlockOperator::new(n1, n1);
    let mut q_op = BlockOperator::identity(n1, id, 1, 0);
    let mut n_op = BlockOperator::new(n1, n1);
    let mut jc = BlockOperator::new(n2, n2);
    for (s, e) in c.edges().iter().enumerate() {
        je.push(s, e.opp.target, e.opp.voltage, 1, type_len(e.ty));
        match e.ty {
            EdgeType::Two => {
                for ch in c.chambers().iter().filter(|ch| ch.e02.target == s) {
                    let v = g.mul(g.inv(ch.e02.voltage), ch.e12.voltage);
                    q_op.push(s, ch.e12.target, v, 1, 1);
                }
            }
            EdgeType::One => {
                for (r, f) in c.edges().iter().enumerate() {
                    if f.ty == EdgeType::Two && f.head.target == e.tail.target && r != e.opp.target {
                        n_op.push(s, r, g.mul(e.tail.voltage, g.inv(f.head.voltage)), 1, 1);
                    }
                }
            }
        }
    }
    for (x, ch) in c.chambers().iter().enumerate() {
        jc.push(x, ch.rot.target, ch.rot.voltage, 1, 0);
    }
    [je, q_op, n_op, jc]
}

/// Every operator materialised against one representation.
#[derive(Clone, Debug)]
pub struct OperatorSet {
    pub q: u32,
    pub d: usize,
    pub a1: PolyMatrix,
    pub a2: PolyMatrix,
    pub m_e: PolyMatrix,
    pub m_c: PolyMatrix,
    pub d0: PolyMatrix,
    pub d1: PolyMatrix,
    pub delta1: PolyMatrix,
    pub delta2: PolyMatrix,
    pub j_e: PolyMatrix,
    pub q_op: PolyMatrix,
    pub n_op: PolyMatrix,
    pub j_c: PolyMatrix,
}

pub fn build_operators(c: &QuotientComplex, rho: &Representation) -> Result<OperatorSet, OperatorError> {
    let table = RepTable::new(c, rho)?;
    let [a1, a2] = vertex_operators(c);
    let [d0, d1, delta1, delta2] = cochain_operators(c);
    let [je, q_op, n_op, jc] = auxiliary_operators(c);
    Ok(OperatorSet {
        q: c.q(),
        d: rho.dim(),
        a1: a1.materialize(&table),
        a2: a2.materialize(&table),
        m_e: edge_operator(c).materialize(&table),
        m_c: chamber_operator(c).materialize(&table),
        d0: d0.materialize(&table),
        d1: d1.materialize(&table),
        delta1: delta1.materialize(&table),
        delta2: delta2.materialize(&table),
        j_e: je.materialize(&table),
        q_op: q_op.materialize(&table),
        n_op: n_op.materialize(&table),
        j_c: jc.materialize(&table),
    })
}

fn one_minus_u3() -> Polynomial {
    Polynomial::from_ints(&[1, 0, 0, -1])
}

impl OperatorSet {
    /// `[Delta_0, Delta_1, Delta_2]`.
    pub fn laplacians(&self) -> Result<[PolyMatrix; 3], AlgebraError> {
        Ok([
            self.delta1.mul(&self.d0)?,
            self.delta2.mul(&self.d1)?.add(&self.d0.mul(&self.delta1)?)?,
            self.d1.mul(&self.delta2)?,
        ])
    }

    /// `Phi_i = Delta_i + (1 - u^3) I`.
    pub fn phis(&self) -> Result<[PolyMatrix; 3], AlgebraError> {
        let [l0, l1, l2] = self.laplacians()?;
        let shift = |m: PolyMatrix| m.add(&PolyMatrix::scalar(m.rows(), one_minus_u3()));
        Ok([shift(l0)?, shift(l1)?, shift(l2)?])
    }

    /// `I - A_1 u + q A_2 u^2 - q^3 u^3 I`.
    pub fn vertex_polynomial(&self) -> Result<PolyMatrix, AlgebraError> {
        let n = self.a1.rows();
        let q = i64::from(self.q);
        let u = Polynomial::u();
        PolyMatrix::identity(n)
            .sub(&self.a1.scale(&u))?
            .add(&self.a2.scale(&Polynomial::monomial(BigRational::from_integer(q.into()), 2)))?
            .sub(&PolyMatrix::scalar(n, Polynomial::monomial(BigRational::from_integer((q * q * q).into()), 3)))
    }

    /// `J_E M J_E^-1`, using `J_E^2 = u^3`.
    pub fn je_conjugate(&self, m: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.j_e.mul(m)?.mul(&self.j_e)?.unshift(3)
    }

    /// `W = I + J_E`.
    pub fn w(&self) -> Result<PolyMatrix, AlgebraError> {
        PolyMatrix::identity(self.j_e.rows()).add(&self.j_e)
    }
}
