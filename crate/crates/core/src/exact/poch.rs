//! q-Pochhammer ratio calculus with telescoping reduction.
//!
//! Symbols relative to a fixed even modulus M:
//!   [a]  = ((-q)^a z ; q^M)_∞   with rung factors 1 - (-1)^t q^t z,
//!   [a]' = (-q^a z ; q^M)_∞     with rung factors 1 + q^t z,
//! where the rungs t run over a + Mℤ≥0.  A product of such symbols with
//! integer exponents reduces to a rational function exactly when every
//! residue-class ladder is balanced (exponents sum to zero).

use std::collections::BTreeMap;

use super::factored::LinFactored;
use super::laurent::LaurentQ;
use super::rfunc::{PolyZ, QFrac, RatFuncZ};
use super::ring::Poly;
use super::spectral::SpectralParam;
use crate::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct PochhammerExpr {
    modulus: i64,
    bracket: BTreeMap<i64, i64>,
    bracket_prime: BTreeMap<i64, i64>,
    prefactor: LaurentQ,
    z_power: i64,
}

fn merge(map: &mut BTreeMap<i64, i64>, idx: i64, exp: i64) {
    let e = map.entry(idx).or_insert(0);
    *e += exp;
    if *e == 0 {
        map.remove(&idx);
    }
}

impl PochhammerExpr {
    pub fn one(modulus: i64) -> Self {
        assert!(modulus > 0 && modulus % 2 == 0, "modulus must be even and positive");
        PochhammerExpr {
            modulus,
            bracket: BTreeMap::new(),
            bracket_prime: BTreeMap::new(),
            prefactor: LaurentQ::one(),
            z_power: 0,
        }
    }

    /// `[a]^exp`.
    pub fn bracket(modulus: i64, a: i64, exp: i64) -> Self {
        let mut e = Self::one(modulus);
        merge(&mut e.bracket, a, exp);
        e
    }

    /// `[a]'^exp`.
    pub fn bracket_prime(modulus: i64, a: i64, exp: i64) -> Self {
        let mut e = Self::one(modulus);
        merge(&mut e.bracket_prime, a, exp);
        e
    }

    /// `c * z^k` as a prefactor.
    pub fn scalar(modulus: i64, c: LaurentQ, k: i64) -> Self {
        let mut e = Self::one(modulus);
        e.prefactor = c;
        e.z_power = k;
        e
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.modulus, o.modulus, "modulus mismatch");
        let mut r = self.clone();
        for (a, e) in &o.bracket {
            merge(&mut r.bracket, *a, *e);
        }
        for (a, e) in &o.bracket_prime {
            merge(&mut r.bracket_prime, *a, *e);
        }
        r.prefactor = r.prefactor.mul(&o.prefactor);
        r.z_power += o.z_power;
        r
    }

    pub fn inv(&self) -> Self {
        PochhammerExpr {
            modulus: self.modulus,
            bracket: self.bracket.iter().map(|(a, e)| (*a, -e)).collect(),
            bracket_prime: self.bracket_prime.iter().map(|(a, e)| (*a, -e)).collect(),
            prefactor: {
                use super::ring::Coeff;
                LaurentQ::inv_unit(&self.prefactor)
            },
            z_power: -self.z_power,
        }
    }

    /// Substitute z -> q^{2k} z (the shift law `[a](q^{2k}z) = [a+2k](z)`).
    pub fn shift_z_by_q2(&self, k: i64) -> Self {
        PochhammerExpr {
            modulus: self.modulus,
            bracket: self.bracket.iter().map(|(a, e)| (a + 2 * k, *e)).collect(),
            bracket_prime: self
                .bracket_prime
                .iter()
                .map(|(a, e)| (a + 2 * k, *e))
                .collect(),
            prefactor: self.prefactor.mul(&LaurentQ::q_pow(2 * k * self.z_power)),
            z_power: self.z_power,
        }
    }

    /// Rung factor of `[·]` at rung t: 1 - (-1)^t q^t z.
    fn factor_plain(t: i64) -> PolyZ {
        Poly::new(vec![
            LaurentQ::one(),
            SpectralParam::neg_q_pow(t).to_laurent().neg(),
        ])
    }

    /// Rung factor of `[·]'` at rung t: 1 + q^t z.
    fn factor_prime(t: i64) -> PolyZ {
        Poly::new(vec![LaurentQ::one(), LaurentQ::q_pow(t)])
    }

    /// Net exponent of each surviving rung after telescoping, as
    /// `(rung index t, prime flag, exponent)`.
    fn telescoped_rungs(&self) -> Result<Vec<(i64, bool, i64)>, Error> {
        let mut out = Vec::new();
        for (map, prime) in [(&self.bracket, false), (&self.bracket_prime, true)] {
            let mut classes: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
            for (a, e) in map {
                classes
                    .entry(a.rem_euclid(self.modulus))
                    .or_default()
                    .push((*a, *e));
            }
            for (_, entries) in classes {
                if entries.iter().map(|(_, e)| e).sum::<i64>() != 0 {
                    return Err(Error::NonTelescoping);
                }
                let mut cum = 0i64;
                for w in entries.windows(2) {
                    cum += w[0].1;
                    if cum == 0 {
                        continue;
                    }
                    let mut t = w[0].0;
                    while t < w[1].0 {
                        out.push((t, prime, cum));
                        t += self.modulus;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Telescope every residue-class ladder to a finite product.
    pub fn reduce(&self) -> Result<RatFuncZ, Error> {
        let mut num = PolyZ::one();
        let mut den = PolyZ::one();
        for (t, prime, e) in self.telescoped_rungs()? {
            let f = if prime {
                Self::factor_prime(t)
            } else {
                Self::factor_plain(t)
            };
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    num = num.mul(&f);
                } else {
                    den = den.mul(&f);
                }
            }
        }
        Ok(RatFuncZ::monomial(self.prefactor.clone(), self.z_power)
            .mul(&RatFuncZ::new(num, den)))
    }

    /// Like `reduce`, but into factored form: each rung factor is a unit
    /// times a monic linear factor (1 - (-1)^t q^t z = -(-1)^t q^t (z - (-1)^t q^{-t}),
    /// 1 + q^t z = q^t (z + q^{-t})).  Requires a nonzero monomial prefactor.
    pub fn reduce_factored(&self) -> Result<LinFactored, Error> {
        let mut r = LinFactored::monomial(
            QFrac::from_laurent(self.prefactor.clone()),
            self.z_power,
        );
        for (t, prime, e) in self.telescoped_rungs()? {
            let (unit, beta) = if prime {
                (LaurentQ::q_pow(t), LaurentQ::q_pow(-t))
            } else {
                let s = if t.rem_euclid(2) == 0 { 1 } else { -1 };
                (
                    LaurentQ::term(super::laurent::rat(-s), t),
                    LaurentQ::term(super::laurent::rat(-s), -t),
                )
            };
            r = r
                .mul(&LinFactored::linear(beta, e))
                .mul(&LinFactored::scalar(QFrac::from_laurent(unit).pow(e)));
        }
        Ok(r)
    }

    /// Reduce and cross-check against the defining infinite products.
    ///
    /// For a balanced expression the rung factors beyond a common cutoff T
    /// cancel exactly within each residue class, so the infinite product
    /// equals the product of the ladders truncated at T, as formal series to
    /// every order.  Taking T at least `order` steps past the last symbol
    /// index therefore certifies the series expansion through `z^order` (and
    /// in fact exactly); the truncated product is recomputed directly from
    /// the definition, independently of the telescoping in `reduce`.
    pub fn reduce_verified(&self, order: usize) -> Result<RatFuncZ, Error> {
        let r = self.reduce()?;
        let mut expected = RatFuncZ::one();
        for (map, prime) in [(&self.bracket, false), (&self.bracket_prime, true)] {
            if map.is_empty() {
                continue;
            }
            let cutoff =
                map.keys().max().unwrap() + self.modulus * (order as i64 + 1);
            for (a, e) in map {
                let mut ladder = PolyZ::one();
                let mut t = *a;
                while t < cutoff {
                    let f = if prime {
                        Self::factor_prime(t)
                    } else {
                        Self::factor_plain(t)
                    };
                    ladder = ladder.mul(&f);
                    t += self.modulus;
                }
                expected = expected.mul(&RatFuncZ::from_poly(ladder).pow(*e as i32));
            }
        }
        let plain = r.div(&RatFuncZ::monomial(self.prefactor.clone(), self.z_power));
        if plain != expected {
            return Err(Error::SeriesMismatch);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat;

    #[test]
    fn one_step_ladder() {
        // [a]/[a+2N] = 1 - (-q)^a z
        for (n, a) in [(3i64, 0i64), (3, 1), (4, -3), (5, 7)] {
            let m = 2 * n;
            let e = PochhammerExpr::bracket(m, a, 1)
                .mul(&PochhammerExpr::bracket(m, a + m, -1));
            let r = e.reduce_verified(10).unwrap();
            let expected = RatFuncZ::from_poly(Poly::new(vec![
                LaurentQ::one(),
                SpectralParam::neg_q_pow(a).to_laurent().neg(),
            ]));
            assert_eq!(r, expected);
        }
    }

    #[test]
    fn empty_expression_is_one() {
        assert_eq!(PochhammerExpr::one(6).reduce_verified(10).unwrap(), RatFuncZ::one());
    }

    #[test]
    fn unbalanced_is_an_error() {
        let e = PochhammerExpr::bracket(6, 0, 1);
        assert!(matches!(e.reduce(), Err(Error::NonTelescoping)));
    }

    #[test]
    fn prime_ladder_and_multi_step() {
        // [a]'/[a+4N]' = (1+q^a z)(1+q^{a+2N} z)
        let n = 3i64;
        let m = 2 * n;
        let a = 1i64;
        let e = PochhammerExpr::bracket_prime(m, a, 1)
            .mul(&PochhammerExpr::bracket_prime(m, a + 2 * m, -1));
        let r = e.reduce_verified(10).unwrap();
        let f1 = Poly::new(vec![LaurentQ::one(), LaurentQ::q_pow(a)]);
        let f2 = Poly::new(vec![LaurentQ::one(), LaurentQ::q_pow(a + m)]);
        assert_eq!(r, RatFuncZ::from_poly(f1.mul(&f2)));
    }

    #[test]
    fn shift_law() {
        // [a] at q^{2k}z equals [a+2k] at z, including a z-prefactor picking up q^{2k}
        let m = 8;
        let e = PochhammerExpr::scalar(m, LaurentQ::term(rat(3), 1), 2)
            .mul(&PochhammerExpr::bracket(m, 0, 1))
            .mul(&PochhammerExpr::bracket(m, m, -1));
        let shifted = e.shift_z_by_q2(1);
        let direct = e.reduce().unwrap().subst_scale(&LaurentQ::q_pow(2));
        assert_eq!(shifted.reduce().unwrap(), direct);
    }
}
