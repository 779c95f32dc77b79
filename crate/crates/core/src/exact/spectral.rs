//! Spectral parameters: the multiplicative group {±1} × (-q)^ℤ.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::{rat, LaurentQ};

/// An element ε(-q)^p.  Uniqueness holds because q is transcendental.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SpectralParam {
    pub sign: i8,
    pub exponent: i64,
}

impl SpectralParam {
    pub fn new(sign: i8, exponent: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        SpectralParam { sign, exponent }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// (-q)^p.
    pub fn neg_q_pow(p: i64) -> Self {
        Self::new(1, p)
    }

    /// Rewrites `sign * q^m` as ε(-q)^p: p = m, ε = sign·(-1)^m.
    pub fn canonicalize_signed_q_power(sign: i8, m: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        let eps = if m.rem_euclid(2) == 0 { sign } else { -sign };
        Self::new(eps, m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.sign * o.sign, self.exponent + o.exponent)
    }

    pub fn inv(&self) -> Self {
        Self::new(self.sign, -self.exponent)
    }

    /// self / o.
    pub fn ratio(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    /// Flip the sign ε (multiplication by -1).
    pub fn negate(&self) -> Self {
        Self::new(-self.sign, self.exponent)
    }

    /// Value as an element of ℚ[q^{±1}]: ε(-1)^p q^p.
    pub fn to_laurent(&self) -> LaurentQ {
        let s = if self.exponent.rem_euclid(2) == 0 {
            self.sign
        } else {
            -self.sign
        };
        LaurentQ::term(rat(s as i64), self.exponent)
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == 1 { "+" } else { "-" };
        write!(f, "{s}(-q)^{}", self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization() {
        // -q^4 = (-1)(-q)^4
        assert_eq!(
            SpectralParam::canonicalize_signed_q_power(-1, 4),
            SpectralParam::new(-1, 4)
        );
        // -q^3 = (+1)(-q)^3
        assert_eq!(
            SpectralParam::canonicalize_signed_q_power(-1, 3),
            SpectralParam::new(1, 3)
        );
        assert_eq!(
            SpectralParam::canonicalize_signed_q_power(1, 0),
            SpectralParam::one()
        );
    }

    #[test]
    fn group_law_and_laurent_value() {
        let a = SpectralParam::new(-1, 3);
        let b = SpectralParam::new(-1, -1);
        assert_eq!(a.mul(&b), SpectralParam::new(1, 2));
        assert_eq!(a.mul(&a.inv()), SpectralParam::one());
        // (+1)(-q)^3 has value -q^3
        assert_eq!(
            SpectralParam::new(1, 3).to_laurent(),
            LaurentQ::term(rat(-1), 3)
        );
        // round trip through canonicalize
        for sign in [1i8, -1] {
            for m in -5..=5 {
                let p = SpectralParam::canonicalize_signed_q_power(sign, m);
                assert_eq!(p.to_laurent(), LaurentQ::term(rat(sign as i64), m));
            }
        }
    }
}
