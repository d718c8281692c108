//! Sparse univariate polynomials in the equivariant parameter `u`, with
//! [`Rational`] coefficients. Sector components of inertial classes are
//! typically single monomials, so the representation is a sorted sparse map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::rational::Rational;

/// A polynomial in canonical form: no zero coefficients are stored, so the
/// zero polynomial is the empty map and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::monomial(0, c)
    }

    /// `c * u^exp`; the zero polynomial when `c` is zero.
    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        UPoly { coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, Rational)>>(pairs: I) -> Self {
        let mut p = UPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: u32) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Drop every term of exponent >= `bound`.
    pub fn truncate_at(&self, bound: u32) -> Self {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e < bound)
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    /// Sorted `[exponent, coefficient-string]` pairs, the serialization form.
    pub fn to_pairs(&self) -> Vec<(u32, String)> {
        self.coeffs.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }

    pub fn parse_pairs(pairs: &[(u32, String)]) -> Result<Self, Error> {
        let mut p = UPoly::zero();
        for (e, c) in pairs {
            p.add_term(*e, c.parse()?);
        }
        Ok(p)
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{mag}*u")?,
                (_, true) => write!(f, "u^{e}")?,
                (_, false) => write!(f, "{mag}*u^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn upoly(exp: u32, n: i64, d: i64) -> UPoly {
        UPoly::monomial(exp, Rational::new(n, d))
    }

    #[test]
    fn add_examples() {
        // (u^2 + 1) + (-u^2) = 1
        let a = &upoly(2, 1, 1) + &upoly(0, 1, 1);
        let b = upoly(2, -1, 1);
        assert_eq!(&a + &b, UPoly::one());
        // 0 + p = p
        let p = &upoly(3, 2, 5) + &upoly(0, -1, 1);
        assert_eq!(&UPoly::zero() + &p, p);
        // 2u + 2u = 4u
        assert_eq!(&upoly(1, 2, 1) + &upoly(1, 2, 1), upoly(1, 4, 1));
    }

    #[test]
    fn mul_examples() {
        // u * (-u) = -u^2
        assert_eq!(&upoly(1, 1, 1) * &upoly(1, -1, 1), upoly(2, -1, 1));
        // (-u^2) * (-u^2) = u^4
        assert_eq!(&upoly(2, -1, 1) * &upoly(2, -1, 1), upoly(4, 1, 1));
        // 1 * p = p
        let p = &upoly(5, 3, 2) + &upoly(1, -7, 1);
        assert_eq!(&UPoly::one() * &p, p);
    }

    #[test]
    fn degree_and_truncation() {
        assert_eq!(UPoly::zero().degree(), None);
        let p = &upoly(4, 1, 1) + &upoly(1, 2, 1);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.truncate_at(4), upoly(1, 2, 1));
        assert_eq!(p.truncate_at(1), UPoly::zero());
        assert_eq!(p.shift(2).degree(), Some(6));
    }

    #[test]
    fn display_forms() {
        let p = &(&upoly(3, -1, 1) + &upoly(1, 5, 2)) + &upoly(0, 1, 1);
        assert_eq!(p.to_string(), "-u^3 + 5/2*u + 1");
        assert_eq!(UPoly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = UPoly> {
        proptest::collection::vec((0u32..8, -9i64..=9, 1i64..=6), 0..5)
            .prop_map(|terms| UPoly::from_pairs(terms.into_iter().map(|(e, n, d)| (e, Rational::new(n, d)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, UPoly::zero());
        }

        #[test]
        fn canonical_form_no_zero_coeffs(a in arb_poly(), b in arb_poly()) {
            let sum = &a + &b;
            for (_, c) in sum.terms() {
                prop_assert!(!c.is_zero());
            }
            let pairs = sum.to_pairs();
            prop_assert_eq!(UPoly::parse_pairs(&pairs).unwrap(), sum);
        }
    }
}
