//! Laurent polynomials in q over arbitrary-precision rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{Coeff, Poly};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, o: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(o) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn unit_part(&self) -> Self {
        if Zero::is_zero(self) {
            One::one()
        } else {
            self.clone()
        }
    }
    fn inv_unit(u: &Self) -> Self {
        u.recip()
    }
}

/// Laurent polynomial in q: exponent -> nonzero rational coefficient.
/// The ordering is the lexicographic one on the coefficient maps; it is
/// used only to key collections, not for anything semantic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct LaurentQ {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn q_pow(p: i64) -> Self {
        Self::term(Coeff::one(), p)
    }

    /// `c * q^p`.
    pub fn term(c: Rat, p: i64) -> Self {
        let mut m = BTreeMap::new();
        if !Zero::is_zero(&c) {
            m.insert(p, c);
        }
        LaurentQ { coeffs: m }
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut r = Self::zero();
        for (p, c) in terms {
            r.add_term(p, &c);
        }
        r
    }

    fn add_term(&mut self, p: i64, c: &Rat) {
        if Zero::is_zero(c) {
            return;
        }
        let e = self.coeffs.entry(p).or_insert_with(|| <Rat as Coeff>::zero());
        *e += c;
        if Zero::is_zero(e) {
            self.coeffs.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: i64) -> Rat {
        self.coeffs.get(&p).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when this is `c * q^p` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (p, c) in &o.coeffs {
            r.add_term(*p, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentQ {
            coeffs: self.coeffs.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (p, c) in &self.coeffs {
            for (p2, c2) in &o.coeffs {
                r.add_term(p + p2, &(c * c2));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Substitute q -> -q: negates odd-exponent coefficients.
    pub fn subst_neg_q(&self) -> Self {
        LaurentQ {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (*p, if p.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Lowest term as `(coefficient, exponent)`.
    pub fn lowest_term(&self) -> Option<(Rat, i64)> {
        self.coeffs
            .iter()
            .next()
            .map(|(p, c)| (c.clone(), *p))
    }

    /// `(shift, poly part)` with the poly part having nonzero constant term.
    fn to_shifted_poly(&self) -> (i64, Poly<Rat>) {
        match self.min_exp() {
            None => (0, Poly::zero()),
            Some(lo) => {
                let hi = self.max_exp().unwrap();
                let mut v = vec![<Rat as Coeff>::zero(); (hi - lo + 1) as usize];
                for (p, c) in &self.coeffs {
                    v[(p - lo) as usize] = c.clone();
                }
                (lo, Poly::new(v))
            }
        }
    }

    fn from_shifted_poly(shift: i64, p: &Poly<Rat>) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i64, c.clone())),
        )
    }

    /// Coefficient-wise serialization as exponent -> numerator/denominator strings.
    pub fn json_coeffs(&self) -> BTreeMap<i64, (String, String)> {
        self.coeffs
            .iter()
            .map(|(p, c)| (*p, (c.numer().to_string(), c.denom().to_string())))
            .collect()
    }
}

impl Coeff for LaurentQ {
    fn zero() -> Self {
        LaurentQ::zero()
    }
    fn one() -> Self {
        LaurentQ::one()
    }
    fn is_zero(&self) -> bool {
        LaurentQ::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentQ::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentQ::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentQ::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentQ::neg(self)
    }
    fn gcd(&self, o: &Self) -> Self {
        let (_, a) = self.to_shifted_poly();
        let (_, b) = o.to_shifted_poly();
        let g = a.gcd(&b);
        let r = LaurentQ::from_shifted_poly(0, &g);
        if r.is_zero() {
            return r;
        }
        let u = r.unit_part();
        r.mul(&LaurentQ::inv_unit(&u))
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentQ::zero());
        }
        let (sa, a) = self.to_shifted_poly();
        let (sb, b) = o.to_shifted_poly();
        let q = a.exact_div(&b)?;
        Some(LaurentQ::from_shifted_poly(sa - sb, &q))
    }
    fn unit_part(&self) -> Self {
        match self.lowest_term() {
            None => LaurentQ::one(),
            Some((c, p)) => LaurentQ::term(c, p),
        }
    }
    fn inv_unit(u: &Self) -> Self {
        let (c, p) = u.lowest_term().expect("nonzero unit");
        assert!(u.is_monomial(), "unit must be a monomial");
        LaurentQ::term(c.recip(), -p)
    }
}

impl serde::Serialize for LaurentQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(
            self.json_coeffs()
                .into_iter()
                .map(|(p, nd)| (p.to_string(), nd)),
        )
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let qpart = match *p {
                0 => String::new(),
                1 => "q".to_string(),
                p => format!("q^{p}"),
            };
            if qpart.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{qpart}")?;
            } else {
                write!(f, "{} {qpart}", fmt_rat(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_ascending() {
        let f = LaurentQ::from_terms([(-1, rat(1)), (0, rat(2)), (1, rat(1))]);
        assert_eq!(f.to_string(), "q^-1 + 2 + q");
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let f = LaurentQ::q_pow(3).sub(&LaurentQ::q_pow(3));
        assert!(f.is_zero());
        let g = LaurentQ::from_terms([(2, rat(1)), (2, rat(-1)), (0, rat(5))]);
        assert_eq!(g, LaurentQ::int(5));
    }

    #[test]
    fn subst_neg_q_flips_odd_terms() {
        let f = LaurentQ::from_terms([(1, rat(1)), (2, rat(3))]);
        let g = LaurentQ::from_terms([(1, rat(-1)), (2, rat(3))]);
        assert_eq!(f.subst_neg_q(), g);
    }

    #[test]
    fn gcd_and_exact_div() {
        // (q - q^-1) and (q^2 - q^-2) share the factor (q^2 - 1) up to units.
        let a = LaurentQ::from_terms([(1, rat(1)), (-1, rat(-1))]);
        let b = LaurentQ::from_terms([(2, rat(1)), (-2, rat(-1))]);
        let g = a.gcd(&b);
        assert!(!g.is_zero());
        let qa = <LaurentQ as Coeff>::exact_div(&a, &g).unwrap();
        let qb = <LaurentQ as Coeff>::exact_div(&b, &g).unwrap();
        assert_eq!(qa.mul(&g), a);
        assert_eq!(qb.mul(&g), b);
        // cofactors are coprime
        assert!(qa.gcd(&qb).is_monomial());
    }
}
