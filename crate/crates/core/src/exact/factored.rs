//! Rational functions kept in factored form.
//!
//! Every function appearing in the commuting-family identities is a unit of
//! ℚ(q) times a power of z times a product of monic linear factors z + β
//! with β ∈ ℚ[q^{±1}].  Products and quotients of such functions cancel
//! syntactically (linear factors are irreducible, so by unique factorization
//! two of them agree iff they are identical), which avoids the polynomial
//! gcds a dense representation would need at every step.

use std::collections::BTreeMap;
use std::fmt;

use super::laurent::LaurentQ;
use super::rfunc::{PolyZ, QFrac, RatFuncZ};
use super::ring::{Coeff, Poly};

/// `scalar · z^zexp · ∏ (z + β)^e` with β nonzero; canonical as stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinFactored {
    scalar: QFrac,
    zexp: i64,
    factors: BTreeMap<LaurentQ, i64>,
}

impl LinFactored {
    pub fn one() -> Self {
        LinFactored {
            scalar: QFrac::one(),
            zexp: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn scalar(c: QFrac) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: QFrac, zexp: i64) -> Self {
        assert!(!c.is_zero(), "zero scalar");
        LinFactored {
            scalar: c,
            zexp,
            factors: BTreeMap::new(),
        }
    }

    /// `(z + beta)^e`; a zero β folds into the z-power.
    pub fn linear(beta: LaurentQ, e: i64) -> Self {
        let mut r = Self::one();
        r.push(beta, e);
        r
    }

    fn push(&mut self, beta: LaurentQ, e: i64) {
        if e == 0 {
            return;
        }
        if beta.is_zero() {
            self.zexp += e;
            return;
        }
        use std::collections::btree_map::Entry;
        match self.factors.entry(beta) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += e;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(e);
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.scalar = r.scalar.mul(&o.scalar);
        r.zexp += o.zexp;
        for (b, e) in &o.factors {
            r.push(b.clone(), *e);
        }
        r
    }

    pub fn inv(&self) -> Self {
        LinFactored {
            scalar: self.scalar.inv(),
            zexp: -self.zexp,
            factors: self.factors.iter().map(|(b, e)| (b.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn pow(&self, n: i64) -> Self {
        let mut r = LinFactored {
            scalar: self.scalar.pow(n),
            zexp: self.zexp * n,
            factors: self
                .factors
                .iter()
                .map(|(b, e)| (b.clone(), e * n))
                .collect(),
        };
        if n == 0 {
            r.factors.clear();
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        r.scalar = r.scalar.neg();
        r
    }

    /// Value at z = 0: `scalar · ∏ β^e`.  Requires no z-power.
    pub fn eval0(&self) -> QFrac {
        assert_eq!(self.zexp, 0, "zero or pole at z = 0");
        let mut r = self.scalar.clone();
        for (b, e) in &self.factors {
            r = r.mul(&QFrac::from_laurent(b.clone()).pow(*e));
        }
        r
    }

    /// Substitute z -> a·z + b with `a` a q-monomial; each factor
    /// z + β becomes a·(z + (b+β)/a).
    pub fn subst_affine_monomial(&self, a: &LaurentQ, b: &LaurentQ) -> Self {
        assert!(a.is_monomial(), "scale must be a q-monomial");
        let ai = LaurentQ::inv_unit(a);
        let mut r = Self::monomial(self.scalar.clone(), 0);
        let mut apow = self.zexp;
        r.push(b.mul(&ai), self.zexp);
        for (beta, e) in &self.factors {
            apow += e;
            r.push(b.add(beta).mul(&ai), *e);
        }
        r.scalar = r.scalar.mul(&QFrac::from_laurent(a.clone()).pow(apow));
        r
    }

    /// Expand into a dense rational function (for cross-checks and output).
    pub fn expand(&self) -> RatFuncZ {
        let mut num = PolyZ::constant(self.scalar.numer().clone());
        let mut den = PolyZ::constant(self.scalar.denom().clone());
        for (b, e) in &self.factors {
            let f = Poly::new(vec![b.clone(), LaurentQ::one()]);
            for _ in 0..e.unsigned_abs() {
                if *e > 0 {
                    num = num.mul(&f);
                } else {
                    den = den.mul(&f);
                }
            }
        }
        RatFuncZ::new(num, den).mul(&RatFuncZ::monomial(LaurentQ::one(), self.zexp))
    }
}

impl fmt::Display for LinFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        if self.zexp != 0 {
            write!(f, " z^{}", self.zexp)?;
        }
        for (b, e) in &self.factors {
            if *e == 1 {
                write!(f, " (z + {b})")?;
            } else {
                write!(f, " (z + {b})^{e}")?;
            }
        }
        Ok(())
    }
}

/// A rational function of (u,v) that splits as f(u)·g(v), kept factored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitBivar {
    pub in_u: LinFactored,
    pub in_v: LinFactored,
}

impl SplitBivar {
    pub fn one() -> Self {
        SplitBivar {
            in_u: LinFactored::one(),
            in_v: LinFactored::one(),
        }
    }

    /// Canonical form: the whole scalar lives on the v-part.
    fn canonical(mut self) -> Self {
        let s = self.in_u.scalar.clone();
        self.in_u.scalar = QFrac::one();
        self.in_v.scalar = self.in_v.scalar.mul(&s);
        self
    }

    pub fn from_u(f: LinFactored) -> Self {
        SplitBivar {
            in_u: f,
            in_v: LinFactored::one(),
        }
        .canonical()
    }

    pub fn from_v(f: LinFactored) -> Self {
        SplitBivar {
            in_u: LinFactored::one(),
            in_v: f,
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn mul(&self, o: &Self) -> Self {
        SplitBivar {
            in_u: self.in_u.mul(&o.in_u),
            in_v: self.in_v.mul(&o.in_v),
        }
        .canonical()
    }

    pub fn inv(&self) -> Self {
        SplitBivar {
            in_u: self.in_u.inv(),
            in_v: self.in_v.inv(),
        }
        .canonical()
    }

    /// (u,v) -> (v,u).
    pub fn swap_uv(&self) -> Self {
        SplitBivar {
            in_u: self.in_v.clone(),
            in_v: self.in_u.clone(),
        }
        .canonical()
    }

    /// Substitute u -> 0, leaving a function of v (renamed to z).
    pub fn subst_u_zero(&self) -> LinFactored {
        self.in_v
            .mul(&LinFactored::scalar(self.in_u.eval0()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat;

    fn lin(p: i64) -> LinFactored {
        LinFactored::linear(LaurentQ::q_pow(p), 1)
    }

    #[test]
    fn cancellation_and_equality() {
        let f = lin(2).mul(&lin(3)).mul(&lin(2).inv());
        assert_eq!(f, lin(3));
        assert!(f.div(&lin(3)).is_one());
        // expansion agrees with the dense representation
        assert_eq!(
            f.expand(),
            RatFuncZ::from_poly(Poly::new(vec![LaurentQ::q_pow(3), LaurentQ::one()]))
        );
    }

    #[test]
    fn zero_beta_folds_into_z_power() {
        let f = LinFactored::linear(LaurentQ::zero(), 3);
        assert_eq!(f, LinFactored::monomial(QFrac::one(), 3));
        assert_eq!(f.expand(), RatFuncZ::monomial(LaurentQ::one(), 3));
    }

    #[test]
    fn eval0_and_subst() {
        // (z + q)(z + q^2)^{-1} at 0 is q^{-1}
        let f = lin(1).mul(&lin(2).inv());
        assert_eq!(f.eval0(), QFrac::from_laurent(LaurentQ::q_pow(-1)));
        // substitution matches the dense computation
        let a = LaurentQ::q_pow(4);
        let b = LaurentQ::from_terms([(0, rat(1)), (4, rat(1))]);
        let g = lin(1).mul(&LinFactored::monomial(QFrac::one(), -2)).mul(&lin(3).inv());
        assert_eq!(
            g.subst_affine_monomial(&a, &b).expand(),
            g.expand().subst_affine(&a, &b)
        );
    }

    #[test]
    fn split_bivar_ops() {
        let f = SplitBivar::from_u(lin(1).inv()).mul(&SplitBivar::from_v(lin(2)));
        assert!(f.mul(&f.inv()).is_one());
        assert_eq!(f.swap_uv().swap_uv(), f);
        // u -> 0: (0 + q)^{-1} (z + q^2)
        assert_eq!(
            f.subst_u_zero(),
            lin(2).mul(&LinFactored::scalar(QFrac::from_laurent(LaurentQ::q_pow(-1))))
        );
    }
}
