//! Rational functions in z (and in u,v) over Laurent polynomials in q.

use super::laurent::LaurentQ;
use super::ring::{Coeff, Poly};
use super::spectral::SpectralParam;
use crate::Error;

/// Polynomial in z with LaurentQ coefficients.
pub type PolyZ = Poly<LaurentQ>;

/// `z - c`.
pub fn linear_factor(c: &LaurentQ) -> PolyZ {
    Poly::new(vec![c.neg(), LaurentQ::one()])
}

/// z-adic valuation of a nonzero polynomial at z = value of `x`.
pub fn poly_zero_order(p: &PolyZ, x: &SpectralParam) -> usize {
    assert!(!p.is_zero(), "zero polynomial");
    let c = x.to_laurent();
    let lin = linear_factor(&c);
    let mut ord = 0;
    let mut cur = p.clone();
    while cur.eval(&c).is_zero() {
        cur = cur.exact_div(&lin).expect("root divides");
        ord += 1;
    }
    ord
}

fn div_content(p: &PolyZ, c: &LaurentQ) -> PolyZ {
    p.map(|a| a.exact_div(c).expect("content divides"))
}

/// Rational function in z, stored in canonical form: numerator and
/// denominator coprime with no common q-content, and the denominator's
/// trailing z-coefficient's lowest q-term equal to +1.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFuncZ {
    num: PolyZ,
    den: PolyZ,
}

impl RatFuncZ {
    pub fn new(num: PolyZ, den: PolyZ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFuncZ {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let cg = num.content().gcd(&den.content());
        num = div_content(&num, &cg);
        den = div_content(&den, &cg);
        let u = den.trailing().expect("nonzero").unit_part();
        let ui = LaurentQ::inv_unit(&u);
        num = num.scale(&ui);
        den = den.scale(&ui);
        RatFuncZ { num, den }
    }

    pub fn from_poly(p: PolyZ) -> Self {
        Self::new(p, Poly::one())
    }

    pub fn constant(c: LaurentQ) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn constant_frac(n: LaurentQ, d: LaurentQ) -> Self {
        Self::new(Poly::constant(n), Poly::constant(d))
    }

    pub fn one() -> Self {
        Self::constant(LaurentQ::one())
    }

    pub fn zero() -> Self {
        RatFuncZ {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// `c * z^k` for integer k of either sign.
    pub fn monomial(c: LaurentQ, k: i64) -> Self {
        if k >= 0 {
            Self::new(Poly::monomial(c, k as usize), Poly::one())
        } else {
            Self::new(
                Poly::constant(c),
                Poly::monomial(LaurentQ::one(), (-k) as usize),
            )
        }
    }

    pub fn num(&self) -> &PolyZ {
        &self.num
    }

    pub fn den(&self) -> &PolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFuncZ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..n.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    /// Substitute z -> a*z + b.
    pub fn subst_affine(&self, a: &LaurentQ, b: &LaurentQ) -> Self {
        let arg = Poly::new(vec![b.clone(), a.clone()]);
        Self::new(self.num.compose(&arg), self.den.compose(&arg))
    }

    /// Substitute z -> c*z.
    pub fn subst_scale(&self, c: &LaurentQ) -> Self {
        self.subst_affine(c, &LaurentQ::zero())
    }

    /// Value at z = 0 as a constant rational function; the point must be regular.
    pub fn eval0(&self) -> Self {
        let d = self.den.coeff(0);
        assert!(!d.is_zero(), "pole at z = 0");
        Self::constant_frac(self.num.coeff(0), d)
    }

    /// z-adic valuation at z = value of `x` (negative for poles).
    pub fn zero_order(&self, x: &SpectralParam) -> Result<i64, Error> {
        if self.is_zero() {
            return Err(Error::UndefinedOrder);
        }
        Ok(poly_zero_order(&self.num, x) as i64 - poly_zero_order(&self.den, x) as i64)
    }

    /// Power-series coefficients up to `z^order`; requires regularity at 0.
    pub fn series(&self, order: usize) -> Vec<QFrac> {
        let d0 = self.den.coeff(0);
        assert!(!d0.is_zero(), "pole at z = 0");
        let d0 = QFrac::from_laurent(d0);
        let mut out: Vec<QFrac> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut s = QFrac::from_laurent(self.num.coeff(k));
            for j in 1..=k {
                let dj = self.den.coeff(j);
                if dj.is_zero() {
                    continue;
                }
                s = s.sub(&QFrac::from_laurent(dj).mul(&out[k - j]));
            }
            out.push(s.div(&d0));
        }
        out
    }
}

fn fmt_polyz(p: &PolyZ) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => format!("({c})"),
            1 => format!("({c}) z"),
            k => format!("({c}) z^{k}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl std::fmt::Display for RatFuncZ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", fmt_polyz(&self.num))
        } else {
            write!(f, "[{}] / [{}]", fmt_polyz(&self.num), fmt_polyz(&self.den))
        }
    }
}

/// Element of the field ℚ(q) as an unreduced num/den pair.  The pair is
/// only normalized when that is cheap (monomial denominators); equality is
/// by cross-multiplication.  Full polynomial gcds are deliberately avoided:
/// the scalars arising from the factored calculus are long products of
/// binomials 1 ± q^k, which stay small under plain multiplication but make
/// remainder sequences explode.
#[derive(Clone, Debug)]
pub struct QFrac {
    num: LaurentQ,
    den: LaurentQ,
}

impl PartialEq for QFrac {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for QFrac {}

impl QFrac {
    pub fn new(num: LaurentQ, den: LaurentQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QFrac {
                num: LaurentQ::zero(),
                den: LaurentQ::one(),
            };
        }
        if den.is_monomial() {
            let ui = LaurentQ::inv_unit(&den);
            return QFrac {
                num: num.mul(&ui),
                den: LaurentQ::one(),
            };
        }
        let ui = LaurentQ::inv_unit(&den.unit_part());
        QFrac {
            num: num.mul(&ui),
            den: den.mul(&ui),
        }
    }

    pub fn from_laurent(x: LaurentQ) -> Self {
        QFrac {
            num: x,
            den: LaurentQ::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentQ::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        QFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn inv(&self) -> Self {
        Self::one().div(self)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..n.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }
}

impl std::fmt::Display for QFrac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == LaurentQ::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Bivariate polynomial: outer index = power of v, inner = polynomial in u.
pub type BivarPoly = Poly<PolyZ>;

/// Rational function in (u,v) over ℚ[q^{±1}], canonical as in `RatFuncZ`.
#[derive(Clone, PartialEq, Debug)]
pub struct BivarRatFunc {
    num: BivarPoly,
    den: BivarPoly,
}

fn bivar_scale_q(p: &BivarPoly, c: &LaurentQ) -> BivarPoly {
    p.map(|inner| inner.scale(c))
}

fn bivar_div_content_q(p: &BivarPoly, c: &LaurentQ) -> BivarPoly {
    p.map(|inner| div_content(inner, c))
}

impl BivarRatFunc {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return BivarRatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let cg = num.content().gcd(&den.content());
        num = num.map(|inner| inner.exact_div(&cg).expect("content divides"));
        den = den.map(|inner| inner.exact_div(&cg).expect("content divides"));
        // remaining common unit is c·q^m: normalize via the denominator's
        // trailing v-coefficient's trailing u-coefficient
        let qc = num.content().content().gcd(&den.content().content());
        num = bivar_div_content_q(&num, &qc);
        den = bivar_div_content_q(&den, &qc);
        let u = den
            .trailing()
            .expect("nonzero")
            .trailing()
            .expect("nonzero")
            .unit_part();
        let ui = LaurentQ::inv_unit(&u);
        num = bivar_scale_q(&num, &ui);
        den = bivar_scale_q(&den, &ui);
        BivarRatFunc { num, den }
    }

    pub fn one() -> Self {
        BivarRatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Embed f(z) as a function of v alone.
    pub fn from_rfz_in_v(f: &RatFuncZ) -> Self {
        let lift = |p: &PolyZ| -> BivarPoly { p.map(|c| Poly::constant(c.clone())) };
        Self::new(lift(f.num()), lift(f.den()))
    }

    /// Embed f(z) as a function of u alone.
    pub fn from_rfz_in_u(f: &RatFuncZ) -> Self {
        Self::new(
            Poly::constant(f.num().clone()),
            Poly::constant(f.den().clone()),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// The function (u,v) -> self(v,u).
    pub fn swap_uv(&self) -> Self {
        Self::new(transpose(&self.num), transpose(&self.den))
    }

    /// Substitute u -> 0; the result is a rational function of v.
    pub fn subst_u_zero(&self) -> RatFuncZ {
        let cut = |p: &BivarPoly| -> PolyZ { p.map(|inner| inner.coeff(0)) };
        let den = cut(&self.den);
        assert!(!den.is_zero(), "pole along u = 0");
        RatFuncZ::new(cut(&self.num), den)
    }
}

fn transpose(p: &BivarPoly) -> BivarPoly {
    let vdeg = p.coeffs().len();
    let udeg = p
        .coeffs()
        .iter()
        .map(|inner| inner.coeffs().len())
        .max()
        .unwrap_or(0);
    let mut out: Vec<Vec<LaurentQ>> = vec![vec![LaurentQ::zero(); vdeg]; udeg];
    for (j, inner) in p.coeffs().iter().enumerate() {
        for (i, c) in inner.coeffs().iter().enumerate() {
            out[i][j] = c.clone();
        }
    }
    Poly::new(out.into_iter().map(Poly::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat;

    fn zq(p: i64) -> LaurentQ {
        LaurentQ::q_pow(p)
    }

    #[test]
    fn zero_order_examples() {
        // (z-q^2)(z+q^4)
        let f = RatFuncZ::from_poly(
            linear_factor(&zq(2)).mul(&linear_factor(&LaurentQ::term(rat(-1), 4))),
        );
        let at = |s, m| SpectralParam::canonicalize_signed_q_power(s, m);
        assert_eq!(f.zero_order(&at(1, 2)).unwrap(), 1);
        assert_eq!(f.zero_order(&at(1, 4)).unwrap(), 0);
        let sq = RatFuncZ::from_poly(linear_factor(&zq(2)).pow(2));
        assert_eq!(sq.zero_order(&at(1, 2)).unwrap(), 2);
        assert!(matches!(
            RatFuncZ::zero().zero_order(&at(1, 0)),
            Err(Error::UndefinedOrder)
        ));
    }

    #[test]
    fn zero_order_additive_over_products() {
        let f = RatFuncZ::from_poly(linear_factor(&zq(2)));
        let g = RatFuncZ::new(Poly::one(), linear_factor(&zq(2)).mul(&linear_factor(&zq(6))));
        let x = SpectralParam::new(1, 2);
        let fo = f.zero_order(&x).unwrap();
        let go = g.zero_order(&x).unwrap();
        assert_eq!(f.mul(&g).zero_order(&x).unwrap(), fo + go);
        assert_eq!(fo, 1);
        assert_eq!(go, -1);
    }

    #[test]
    fn canonical_idempotent_and_cross_mul() {
        let num = linear_factor(&zq(1)).mul(&linear_factor(&zq(3))).scale(&zq(-2));
        let den = linear_factor(&zq(3)).mul(&linear_factor(&zq(5)));
        let f = RatFuncZ::new(num.clone(), den.clone());
        let again = RatFuncZ::new(f.num().clone(), f.den().clone());
        assert_eq!(f, again);
        // cross-multiplication equality agrees with canonical equality
        assert_eq!(f.num().mul(&den), num.mul(f.den()));
        // scaled copies are equal
        let g = RatFuncZ::new(num.scale(&LaurentQ::term(rat(-7), 3)), den.scale(&LaurentQ::term(rat(-7), 3)));
        assert_eq!(f, g);
    }

    #[test]
    fn series_inverts_geometric() {
        // 1/(1-z): all series coefficients are 1
        let f = RatFuncZ::new(
            Poly::one(),
            Poly::new(vec![LaurentQ::one(), LaurentQ::int(-1)]),
        );
        let s = f.series(5);
        assert!(s.iter().all(|c| *c == QFrac::one()));
    }

    #[test]
    fn bivar_swap_and_cancel() {
        // f = (u - q v)/(u + v); f * swap(f)^{-1} has both factors nontrivial
        let u = BivarPoly::constant(Poly::monomial(LaurentQ::one(), 1));
        let v = BivarPoly::monomial(Poly::one(), 1);
        let f = BivarRatFunc::new(u.sub(&bivar_scale_q(&v, &zq(1))), u.add(&v));
        let g = f.swap_uv().swap_uv();
        assert_eq!(f, g);
        assert!(f.mul(&f.inv()).is_one());
    }

    #[test]
    fn subst_u_zero_projects() {
        // (u + v)/(1 - u v) at u=0 -> v
        let u = BivarPoly::constant(Poly::monomial(LaurentQ::one(), 1));
        let v = BivarPoly::monomial(Poly::one(), 1);
        let f = BivarRatFunc::new(u.add(&v), BivarPoly::one().sub(&u.mul(&v)));
        let z = RatFuncZ::monomial(LaurentQ::one(), 1);
        assert_eq!(f.subst_u_zero(), z);
    }
}
