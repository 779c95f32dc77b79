//! Generic dense polynomials over a coefficient ring with gcd.
//!
//! The coefficient tower used in this crate is
//! `Rat` -> `LaurentQ` -> `Poly<LaurentQ>` (polynomials in z or u)
//! -> `Poly<Poly<LaurentQ>>` (bivariate), and gcds are computed by a
//! primitive pseudo-remainder sequence at every level.

use std::fmt::Debug;

/// Coefficient ring with enough structure for primitive-PRS gcds.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Unit-normalized gcd; `gcd(0,0) = 0`.
    fn gcd(&self, o: &Self) -> Self;
    /// `Some(self/o)` when `o` divides `self` exactly.
    fn exact_div(&self, o: &Self) -> Option<Self>;
    /// A unit `u` such that `self / u` is in normal form; `1` for zero.
    fn unit_part(&self) -> Self;
    /// Inverse of a unit of the ring.
    fn inv_unit(u: &Self) -> Self;
}

/// Dense polynomial with no trailing zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, C::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Lowest-index nonzero coefficient.
    pub fn trailing(&self) -> Option<&C> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k).add(&o.coeff(k)));
        }
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// gcd of all coefficients.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|a| a.exact_div(&c).expect("content divides"))
                .collect(),
        )
    }

    /// Pseudo-remainder of `self` by `o` (`o` nonzero).
    fn prem(&self, o: &Self) -> Self {
        let d = o.degree().expect("nonzero divisor");
        let lc = o.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let t = Self::monomial(r.lead().unwrap().clone(), dr - d);
            r = r.scale(&lc).sub(&o.mul(&t));
        }
        r
    }

    /// Unit-normalized gcd via primitive PRS.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.canonical_assoc();
        }
        if o.is_zero() {
            return self.canonical_assoc();
        }
        let cg = self.content().gcd(&o.content());
        let mut p = self.primitive();
        let mut q = o.primitive();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            // stripping content and normalizing each remainder keeps
            // coefficients small: over a field the next divisor becomes
            // monic and pseudo-division is then ordinary division
            let r = p.prem(&q).normalize_or_zero();
            p = q;
            q = r;
        }
        // p is primitive; restore the content gcd
        p.canonical_assoc().scale(&cg)
    }

    fn normalize_or_zero(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            self.primitive().canonical_assoc()
        }
    }

    /// Canonical associate: the unit multiple with unit-normalized leading
    /// coefficient.  Unlike `primitive`, the content is kept.
    fn canonical_assoc(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let u = self.lead().unwrap().unit_part();
        self.scale(&C::inv_unit(&u))
    }

    /// `Some(self/o)` when the division is exact.
    pub fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = o.degree().unwrap();
        let mut r = self.clone();
        let mut q = vec![C::zero(); self.coeffs.len()];
        while let Some(dr) = r.degree() {
            if dr < d {
                return None;
            }
            let c = r.lead().unwrap().exact_div(o.lead().unwrap())?;
            q[dr - d] = c.clone();
            r = r.sub(&o.mul(&Self::monomial(c, dr - d)));
        }
        Some(Self::new(q))
    }

    /// Substitute the variable by another polynomial.
    pub fn compose(&self, x: &Self) -> Self {
        let mut r = Self::zero();
        for c in self.coeffs.iter().rev() {
            r = r.mul(x).add(&Self::constant(c.clone()));
        }
        r
    }

    /// Evaluate at a coefficient value.
    pub fn eval(&self, x: &C) -> C {
        let mut r = C::zero();
        for c in self.coeffs.iter().rev() {
            r = r.mul(x).add(c);
        }
        r
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Poly::gcd(self, o)
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        Poly::exact_div(self, o)
    }
    fn unit_part(&self) -> Self {
        match self.lead() {
            Some(l) => Self::constant(l.unit_part()),
            None => Self::one(),
        }
    }
    fn inv_unit(u: &Self) -> Self {
        assert_eq!(u.degree(), Some(0), "unit must be constant");
        Self::constant(C::inv_unit(&u.coeffs[0]))
    }
}
