//! Denominator polynomials of normalized R-matrices between fundamental
//! representations, for the untwisted (A1) and twisted (A2) type-A families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{linear_factor, LaurentQ, Poly, PolyZ, SpectralParam};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A1,
    A2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A1 => write!(f, "A1"),
            Family::A2 => write!(f, "A2"),
        }
    }
}

/// The algebra of affine type A^(1)_{N-1} or A^(2)_{N-1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraTag {
    pub family: Family,
    pub n: i64,
}

impl AlgebraTag {
    pub fn new(family: Family, n: i64) -> Result<Self, Error> {
        let min_n = match family {
            Family::A1 => 2,
            Family::A2 => 3,
        };
        if n < min_n {
            return Err(Error::IndexOutOfRange(format!(
                "N = {n} too small for {family}"
            )));
        }
        Ok(AlgebraTag { family, n })
    }

    /// Valid node indices: 1..=N-1 (A1), 1..=⌊N/2⌋ (A2).
    pub fn max_node(&self) -> i64 {
        match self.family {
            Family::A1 => self.n - 1,
            Family::A2 => self.n / 2,
        }
    }

    pub fn check_node(&self, k: i64) -> Result<(), Error> {
        if k < 1 || k > self.max_node() {
            return Err(Error::IndexOutOfRange(format!(
                "node {k} outside 1..={} for {} with N = {}",
                self.max_node(),
                self.family,
                self.n
            )));
        }
        Ok(())
    }
}

/// Zeros of the denominator d_{k,l}(z), pre-canonicalized.
pub fn denom_zeros(tag: &AlgebraTag, k: i64, l: i64) -> Result<Vec<SpectralParam>, Error> {
    tag.check_node(k)?;
    tag.check_node(l)?;
    let n = tag.n;
    let mut zeros = Vec::new();
    match tag.family {
        Family::A1 => {
            let smax = k.min(l).min(n - k).min(n - l);
            for s in 1..=smax {
                zeros.push(SpectralParam::neg_q_pow((k - l).abs() + 2 * s));
            }
        }
        Family::A2 => {
            for s in 1..=k.min(l) {
                zeros.push(SpectralParam::neg_q_pow((k - l).abs() + 2 * s));
                // -q^N (-q)^{-k-l+2s} = ±q^{N-k-l+2s}
                let m = -k - l + 2 * s;
                let sign = if m.rem_euclid(2) == 0 { -1 } else { 1 };
                zeros.push(SpectralParam::canonicalize_signed_q_power(sign, n + m));
            }
        }
    }
    Ok(zeros)
}

/// The denominator polynomial ∏ (z - zero).
pub fn denom(tag: &AlgebraTag, k: i64, l: i64) -> Result<PolyZ, Error> {
    let mut p = Poly::<LaurentQ>::one();
    for z in denom_zeros(tag, k, l)? {
        p = p.mul(&linear_factor(&z.to_laurent()));
    }
    Ok(p)
}

/// Order of the zero of the denominator at the given parameter ratio.
pub fn pole_order(
    tag: &AlgebraTag,
    k: i64,
    l: i64,
    ratio: &SpectralParam,
) -> Result<u32, Error> {
    Ok(denom_zeros(tag, k, l)?
        .iter()
        .filter(|z| *z == ratio)
        .count() as u32)
}

/// Factored rendering like "(z-q^2)(z+q^3)"; the empty product is "1".
pub fn factored_string(zeros: &[SpectralParam]) -> String {
    if zeros.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for z in zeros {
        let (sign_ch, p) = if z.to_laurent().lowest_term().unwrap().0 > crate::exact::rat(0) {
            ('-', z.exponent)
        } else {
            ('+', z.exponent)
        };
        let qs = match p {
            0 => "1".to_string(),
            1 => "q".to_string(),
            p => format!("q^{p}"),
        };
        out.push_str(&format!("(z{sign_ch}{qs})"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(f: Family, n: i64) -> AlgebraTag {
        AlgebraTag::new(f, n).unwrap()
    }

    #[test]
    fn hand_checked_zero_sets() {
        // A1, N=4, k=l=1: z - q^2
        let z = denom_zeros(&tag(Family::A1, 4), 1, 1).unwrap();
        assert_eq!(z, vec![SpectralParam::neg_q_pow(2)]);
        assert_eq!(factored_string(&z), "(z-q^2)");

        // A2, N=3, k=l=1: (z-q^2)(z+q^3)
        let z = denom_zeros(&tag(Family::A2, 3), 1, 1).unwrap();
        assert_eq!(factored_string(&z), "(z-q^2)(z+q^3)");

        // A2, N=5, k=l=2: (z-q^2)(z+q^3)(z-q^4)(z+q^5)
        let z = denom_zeros(&tag(Family::A2, 5), 2, 2).unwrap();
        assert_eq!(factored_string(&z), "(z-q^2)(z+q^3)(z-q^4)(z+q^5)");
    }

    #[test]
    fn pole_orders() {
        let t = tag(Family::A2, 4);
        assert_eq!(
            pole_order(&t, 1, 1, &SpectralParam::canonicalize_signed_q_power(1, 2)).unwrap(),
            1
        );
        assert_eq!(
            pole_order(&t, 1, 1, &SpectralParam::canonicalize_signed_q_power(-1, 4)).unwrap(),
            1
        );
        let t1 = tag(Family::A1, 4);
        assert_eq!(
            pole_order(&t1, 1, 1, &SpectralParam::canonicalize_signed_q_power(1, 4)).unwrap(),
            0
        );
    }

    #[test]
    fn zeros_agree_with_polynomial_orders() {
        // every listed zero is a simple zero of the polynomial, and the
        // degree law holds
        for n in 3..=8 {
            for (fam, t) in [(Family::A1, tag(Family::A1, n)), (Family::A2, tag(Family::A2, n))]
            {
                for k in 1..=t.max_node() {
                    for l in 1..=t.max_node() {
                        let zeros = denom_zeros(&t, k, l).unwrap();
                        let p = denom(&t, k, l).unwrap();
                        let expect_deg = match fam {
                            Family::A1 => k.min(l).min(n - k).min(n - l),
                            Family::A2 => 2 * k.min(l),
                        };
                        assert_eq!(p.degree().map(|d| d as i64), Some(expect_deg));
                        for z in &zeros {
                            assert_eq!(
                                crate::exact::rfunc::poly_zero_order(&p, z),
                                1,
                                "repeated zero for {fam} N={n} k={k} l={l}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_indices_rejected() {
        assert!(denom_zeros(&tag(Family::A1, 4), 0, 1).is_err());
        assert!(denom_zeros(&tag(Family::A1, 4), 1, 4).is_err());
        assert!(denom_zeros(&tag(Family::A2, 5), 3, 1).is_err());
        assert!(AlgebraTag::new(Family::A2, 2).is_err());
    }
}
