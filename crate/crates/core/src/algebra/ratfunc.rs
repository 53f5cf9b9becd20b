//! Rational functions in `u`, used for identities that hold only after
//! clearing denominators.

use num_rational::BigRational;
use num_traits::One;

use super::{poly_gcd, AlgebraError, Polynomial};

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: Polynomial::one(),
            });
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().cloned().unwrap_or_else(BigRational::one).recip();
        Ok(Self {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, n: i64) -> Result<Self, AlgebraError> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        Self::new(base.num.pow(k), base.den.pow(k))
    }

    /// `f(s u)`.
    pub fn scale_var(&self, s: &BigRational) -> Self {
        Self::new(self.num.scale_var(s), self.den.scale_var(s)).expect("nonzero denominator")
    }

    /// `f(c / u)` for a nonzero constant `c`.
    pub fn substitute_reciprocal(&self, c: &BigRational) -> Self {
        let (n, dn) = reciprocal_parts(&self.num, c);
        let (d, dd) = reciprocal_parts(&self.den, c);
        Self::new(n.shift(dd), d.shift(dn)).expect("nonzero denominator")
    }
}

/// Writes `p(c / u) = r(u) / u^deg p` and returns `(r, deg p)`.
fn reciprocal_parts(p: &Polynomial, c: &BigRational) -> (Polynomial, usize) {
    let d = p.degree().unwrap_or(0);
    let mut pow = BigRational::one();
    let mut out = vec![BigRational::from_integer(0.into()); d + 1];
    for k in 0..=d {
        out[d - k] = p.coeff(k) * &pow;
        pow *= c;
    }
    (Polynomial::from_coeffs(out), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let a = Polynomial::from_ints(&[1, 0, 0, -1]);
        let b = Polynomial::from_ints(&[2, -2]);
        let f = RationalFunction::new(a, b).unwrap();
        assert_eq!(f.den(), &Polynomial::one());
        assert_eq!(f.num(), &Polynomial::from_ints(&[1, 1, 1]).scale(&BigRational::new(1.into(), 2.into())));
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn reciprocal_substitution_is_an_involution() {
        let f = RationalFunction::new(Polynomial::from_ints(&[1, -3, 2]), Polynomial::from_ints(&[1, 5])).unwrap();
        let c = BigRational::new(1.into(), 4.into());
        assert_eq!(f.substitute_reciprocal(&c).substitute_reciprocal(&c), f);
        let g = f.powi(-2).unwrap().mul(&f.powi(2).unwrap());
        assert_eq!(g, RationalFunction::from_poly(Polynomial::one()));
    }
}
