//! Laurent polynomials in one variable over arbitrary-precision integers.
//!
//! Exponents may be negative; coefficients are `BigInt` because bracket
//! state sums overflow fixed-width integers well below the crossing
//! counts this crate handles. The zero polynomial has no terms; all
//! operations keep the term map free of zero coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(1, 0)
    }

    /// The single term `coeff * A^exp`.
    pub fn term(coeff: i64, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, BigInt::from(coeff));
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(coeff, exp) in terms {
            p.add_term(BigInt::from(coeff), exp);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// (lowest, highest) exponent, if nonzero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    fn add_term(&mut self, coeff: BigInt, exp: i64) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(c.clone(), e);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(-c.clone(), e);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Multiplies by the single term `coeff * A^exp`.
    pub fn mul_term(&self, coeff: i64, exp: i64) -> LaurentPoly {
        if coeff == 0 {
            return LaurentPoly::zero();
        }
        let c = BigInt::from(coeff);
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, v)| (e + exp, v * &c)).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `A -> A^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Substitutes `A -> A^k` (`k` may be negative, not zero).
    pub fn inflate(&self, k: i64) -> LaurentPoly {
        assert!(k != 0, "exponent scale must be nonzero");
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. `-A^4 + 2 - A^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let var = "A";
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit_coeff = mag.is_one() && e != 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        let a = LaurentPoly::from_terms(&[(1, 1), (1, -1)]);
        let b = LaurentPoly::from_terms(&[(1, 1), (-1, -1)]);
        assert_eq!(a.mul(&b), LaurentPoly::from_terms(&[(1, 2), (-1, -2)]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.add(&a.neg()), LaurentPoly::zero());
        assert_eq!(a.mul(&LaurentPoly::zero()), LaurentPoly::zero());
        assert_eq!(a.mul(&LaurentPoly::one()), a);
        assert_eq!(a.pow(2), a.mul(&a));
        assert_eq!(a.pow(0), LaurentPoly::one());
        // Cancellation inside from_terms.
        assert!(LaurentPoly::from_terms(&[(2, 3), (-2, 3)]).is_zero());
    }

    #[test]
    fn variable_substitutions() {
        let p = LaurentPoly::from_terms(&[(-1, 3), (5, 0), (2, -2)]);
        assert_eq!(p.invert_variable().invert_variable(), p);
        assert_eq!(p.invert_variable().coeff(-3), BigInt::from(-1));
        assert_eq!(p.inflate(4).degree_range(), Some((-8, 12)));
        assert_eq!(p.mul_term(3, 2).coeff(2), BigInt::from(15));
    }

    #[test]
    fn display_formats() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let p = LaurentPoly::from_terms(&[(-1, 4), (2, 0), (-1, -4)]);
        assert_eq!(p.to_string(), "-A^4 + 2 - A^-4");
        assert_eq!(LaurentPoly::from_terms(&[(1, 1), (-3, 0)]).to_string(), "A - 3");
        assert_eq!(LaurentPoly::term(-1, -3).to_string(), "-A^-3");
    }
}
