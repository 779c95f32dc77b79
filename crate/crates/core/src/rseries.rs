//! The commuting-family normalization data: the monomials f_{a,j}, the
//! rational function g(z), the a₁₁ telescoping identity, the families ψ_a,
//! φ_k, c_{ij}, and exact verification of the identities tying them
//! together.
//!
//! Everything here is a product of linear factors in z (or u, v), so the
//! computations run in the factored representation; `expand` recovers the
//! dense rational function where needed.

use std::collections::HashMap;

use serde::Serialize;

use crate::exact::{LaurentQ, LinFactored, PochhammerExpr, QFrac, RatFuncZ, SplitBivar};

/// Which displayed definition of ψ_a to use.  `ViaG` (through g) is
/// normative; `DisplayedProduct` is the simplified product form, retained
/// for cross-checking.  The two appear to differ by a factor q^{-N}; the
/// comparison is surfaced in reports, never silently reconciled.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PsiDefinition {
    ViaG,
    DisplayedProduct,
}

fn qf(c: LaurentQ) -> QFrac {
    QFrac::from_laurent(c)
}

/// g(z) = q^N (z - q^{-2N})(z + q^{-N-2}) / ((z - q^{-2})(z + q^{-N})),
/// in factored form.
pub fn g_lin(n: i64) -> LinFactored {
    assert!(n >= 2, "need N >= 2");
    LinFactored::scalar(qf(LaurentQ::q_pow(n)))
        .mul(&LinFactored::linear(LaurentQ::q_pow(-2 * n).neg(), 1))
        .mul(&LinFactored::linear(LaurentQ::q_pow(-n - 2), 1))
        .mul(&LinFactored::linear(LaurentQ::q_pow(-2).neg(), -1))
        .mul(&LinFactored::linear(LaurentQ::q_pow(-n), -1))
}

/// Dense form of g(z).
pub fn g_of_z(n: i64) -> RatFuncZ {
    g_lin(n).expand()
}

/// f_{a,j}(z) = (-1)^{δ_{j,a+N}} z^{-δ(a ≤ j < a+N-1) - δ_{j,a+N}}.
pub fn f_aj(a: i64, j: i64, n: i64) -> LinFactored {
    assert!(n >= 2, "need N >= 2");
    let sign = if j == a + n { -1 } else { 1 };
    let zpow = -i64::from(a <= j && j < a + n - 1) - i64::from(j == a + n);
    LinFactored::monomial(qf(LaurentQ::int(sign)), zpow)
}

/// a₁₁(z) as a Pochhammer-symbol ratio with modulus 2N:
/// q [N+2]'[N-2]' / [N]'^2 · [0][2N] / ([2][2N-2]).
pub fn a11_expr(n: i64) -> PochhammerExpr {
    assert!(n >= 2, "need N >= 2");
    let m = 2 * n;
    PochhammerExpr::scalar(m, LaurentQ::q_pow(1), 0)
        .mul(&PochhammerExpr::bracket_prime(m, n + 2, 1))
        .mul(&PochhammerExpr::bracket_prime(m, n - 2, 1))
        .mul(&PochhammerExpr::bracket_prime(m, n, -2))
        .mul(&PochhammerExpr::bracket(m, 0, 1))
        .mul(&PochhammerExpr::bracket(m, 2 * n, 1))
        .mul(&PochhammerExpr::bracket(m, 2, -1))
        .mul(&PochhammerExpr::bracket(m, 2 * n - 2, -1))
}

/// ψ_a(z): either through g (normative) or the displayed product form.
pub fn psi(a: i64, n: i64, def: PsiDefinition) -> LinFactored {
    assert!(n >= 2, "need N >= 2");
    let sign_flip = 1 - n <= a && a <= -1;
    match def {
        PsiDefinition::ViaG => {
            // (-1)^{δ(1-N ≤ a ≤ -1)} z^{δ(a=0)-δ(a=1-N)} g(q^{2(-a-N)}(z+1))^{-1}
            let c = LaurentQ::q_pow(2 * (-a - n));
            let zpow = i64::from(a == 0) - i64::from(a == 1 - n);
            let sign = if sign_flip { -1 } else { 1 };
            g_lin(n)
                .subst_affine_monomial(&c, &c)
                .inv()
                .mul(&LinFactored::monomial(qf(LaurentQ::int(sign)), zpow))
        }
        PsiDefinition::DisplayedProduct => {
            // (z+1+q^{2a+N})(z+1-q^{2a+2N-2})^{δ(a≠1-N)}
            // over (z+1+q^{2a+N-2})(z+1-q^{2a})^{δ(a≠0)}
            let w = |c: LaurentQ, e: i64| LinFactored::linear(LaurentQ::one().add(&c), e);
            let mut r = w(LaurentQ::q_pow(2 * a + n), 1)
                .mul(&w(LaurentQ::q_pow(2 * a + n - 2), -1));
            if a != 1 - n {
                r = r.mul(&w(LaurentQ::q_pow(2 * a + 2 * n - 2).neg(), 1));
            }
            if a != 0 {
                r = r.mul(&w(LaurentQ::q_pow(2 * a).neg(), -1));
            }
            if sign_flip {
                r.neg()
            } else {
                r
            }
        }
    }
}

/// The ψ/φ/c family for a fixed N and ψ-definition, with a memoized φ
/// recursion.  The memo is thread-confined; clone the struct per thread.
#[derive(Clone, Debug)]
pub struct RSeries {
    pub n: i64,
    pub def: PsiDefinition,
    phi_memo: HashMap<i64, LinFactored>,
}

impl RSeries {
    pub fn new(n: i64, def: PsiDefinition) -> Self {
        assert!(n >= 2, "need N >= 2");
        RSeries {
            n,
            def,
            phi_memo: HashMap::new(),
        }
    }

    pub fn psi(&self, a: i64) -> LinFactored {
        psi(a, self.n, self.def)
    }

    /// φ_k(z) by the displayed recursion: φ_0 = 1; φ_k = ψ_{k-N}^{-1} for
    /// 1 ≤ k ≤ N-2; φ_{N-1} = ψ_0 ∏_{t=1}^{N-2} φ_t^{-1}; shift rules for
    /// k ≥ N and k ≤ -1.
    pub fn phi(&mut self, k: i64) -> LinFactored {
        if let Some(r) = self.phi_memo.get(&k) {
            return r.clone();
        }
        let n = self.n;
        let r = if k == 0 {
            LinFactored::one()
        } else if 1 <= k && k <= n - 2 {
            self.psi(k - n).inv()
        } else if k == n - 1 {
            let mut r = self.psi(0);
            for t in 1..=n - 2 {
                r = r.div(&self.phi(t));
            }
            r
        } else if k >= n {
            self.psi(k - n + 1).div(&self.psi(k - n)).mul(&self.phi(k - n))
        } else {
            self.psi(k).div(&self.psi(k + 1)).mul(&self.phi(k + n))
        };
        self.phi_memo.insert(k, r.clone());
        r
    }

    /// c_{ij}(u,v) = φ_{i-j}(v) / φ_{j-i}(u) · φ_{j-i}(0).
    pub fn c_ij(&mut self, i: i64, j: i64) -> SplitBivar {
        let pv = SplitBivar::from_v(self.phi(i - j));
        let pu = SplitBivar::from_u(self.phi(j - i)).inv();
        let at0 = SplitBivar::from_v(LinFactored::scalar(self.phi(j - i).eval0()));
        pv.mul(&pu).mul(&at0)
    }

    /// P_{k,j}(0,z) = c_{k,j}(0,z) (-z)^{δ(j=k+1)}.
    pub fn p_kj_at_zero(&mut self, k: i64, j: i64) -> LinFactored {
        let c = self.c_ij(k, j).subst_u_zero();
        if j == k + 1 {
            c.mul(&LinFactored::monomial(qf(LaurentQ::int(-1)), 1))
        } else {
            c
        }
    }
}

/// One checked identity.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub params: String,
    pub pass: bool,
    /// On failure: the left/right ratio (or an error message).
    pub residual: Option<String>,
}

impl CheckItem {
    fn pass(name: &str, params: String) -> Self {
        CheckItem {
            name: name.to_string(),
            params,
            pass: true,
            residual: None,
        }
    }

    fn fail(name: &str, params: String, residual: String) -> Self {
        CheckItem {
            name: name.to_string(),
            params,
            pass: false,
            residual: Some(residual),
        }
    }

    fn is_one(name: &str, params: String, lhs: &LinFactored) -> Self {
        if lhs.is_one() {
            Self::pass(name, params)
        } else {
            Self::fail(name, params, lhs.to_string())
        }
    }

    fn ratio(name: &str, params: String, lhs: &LinFactored, rhs: &LinFactored) -> Self {
        Self::is_one(name, params, &lhs.div(rhs))
    }
}

/// Aggregate report for one (N, ψ-definition) suite.
#[derive(Clone, Debug, Serialize)]
pub struct RSeriesReport {
    pub n: i64,
    pub psi_def: PsiDefinition,
    pub items: Vec<CheckItem>,
}

impl RSeriesReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }
}

/// ∏_{k=1}^{N} a₁₁(q^{2k} z) = g(z)^{-1}, by exact telescoping.
pub fn verify_a11_telescoping(n: i64) -> CheckItem {
    let a11 = a11_expr(n);
    let mut prod = PochhammerExpr::one(2 * n);
    for k in 1..=n {
        prod = prod.mul(&a11.shift_z_by_q2(k));
    }
    let params = format!("N={n}");
    match prod.reduce_factored() {
        Ok(r) => CheckItem::ratio("a11_telescoping", params, &r, &g_lin(n).inv()),
        Err(e) => CheckItem::fail("a11_telescoping", params, e.to_string()),
    }
}

/// The two defining conditions on ψ: ψ_a(0)ψ_{-a-N+1}(0) = 1 for |a| ≤ amax
/// and ∏_{k=1-N}^{0} ψ_k(0) = 1.
pub fn psi_condition_items(n: i64, def: PsiDefinition, amax: i64) -> Vec<CheckItem> {
    let mut items = Vec::new();
    for a in -amax..=amax {
        let lhs = psi(a, n, def).eval0().mul(&psi(-a - n + 1, n, def).eval0());
        items.push(CheckItem::is_one(
            "psi_reciprocity",
            format!("N={n} a={a}"),
            &LinFactored::scalar(lhs),
        ));
    }
    let mut prod = QFrac::one();
    for k in 1 - n..=0 {
        prod = prod.mul(&psi(k, n, def).eval0());
    }
    items.push(CheckItem::is_one(
        "psi_window_product",
        format!("N={n}"),
        &LinFactored::scalar(prod),
    ));
    items
}

/// The φ conclusions: φ_a(0)φ_{-a}(0) = 1 and ∏_{k=a}^{a+N-1} φ_k = ψ_a.
pub fn phi_lemma_items(n: i64, def: PsiDefinition, amax: i64) -> Vec<CheckItem> {
    let mut s = RSeries::new(n, def);
    let mut items = Vec::new();
    for a in -amax..=amax {
        let lhs = s.phi(a).eval0().mul(&s.phi(-a).eval0());
        items.push(CheckItem::is_one(
            "phi_reciprocity",
            format!("N={n} a={a}"),
            &LinFactored::scalar(lhs),
        ));
        let mut prod = LinFactored::one();
        for k in a..a + n {
            prod = prod.mul(&s.phi(k));
        }
        items.push(CheckItem::ratio(
            "phi_product_is_psi",
            format!("N={n} a={a}"),
            &prod,
            &s.psi(a),
        ));
    }
    items
}

/// The c conditions: c_{ii} = 1, c_{ij}(u,v)c_{ji}(v,u) = 1, and shift
/// invariance c_{i+1,j+1} = c_{ij}, for |i-j| ≤ dmax.
pub fn cij_condition_items(n: i64, def: PsiDefinition, dmax: i64) -> Vec<CheckItem> {
    let mut s = RSeries::new(n, def);
    let mut items = Vec::new();
    items.push(CheckItem {
        name: "c_diagonal".to_string(),
        params: format!("N={n}"),
        pass: s.c_ij(0, 0).is_one(),
        residual: None,
    });
    for d in -dmax..=dmax {
        let unitary = s.c_ij(d, 0).mul(&s.c_ij(0, d).swap_uv()).is_one();
        items.push(CheckItem {
            name: "c_unitarity".to_string(),
            params: format!("N={n} i-j={d}"),
            pass: unitary,
            residual: None,
        });
        let shift = s.c_ij(d + 1, 1) == s.c_ij(d, 0);
        items.push(CheckItem {
            name: "c_shift_invariance".to_string(),
            params: format!("N={n} i-j={d}"),
            pass: shift,
            residual: None,
        });
    }
    items
}

/// f_{a,j}(z) g(q^{2(j-a-N)}(z+1)) ∏_{k=a}^{a+N-1} P_{k,j}(0,z) = 1.
pub fn verify_main_identity(s: &mut RSeries, a: i64, j: i64) -> CheckItem {
    let n = s.n;
    let c = LaurentQ::q_pow(2 * (j - a - n));
    let mut lhs = f_aj(a, j, n).mul(&g_lin(n).subst_affine_monomial(&c, &c));
    for k in a..a + n {
        lhs = lhs.mul(&s.p_kj_at_zero(k, j));
    }
    CheckItem::is_one("main_identity", format!("N={n} a={a} j={j}"), &lhs)
}

/// Run the full identity suite for one (N, ψ-definition) pair.
pub fn run_suite(n: i64, def: PsiDefinition) -> RSeriesReport {
    let mut items = Vec::new();
    items.push(verify_a11_telescoping(n));
    items.extend(psi_condition_items(n, def, 12));
    items.extend(phi_lemma_items(n, def, 8));
    items.extend(cij_condition_items(n, def, 2 * n));
    let mut s = RSeries::new(n, def);
    for d in -2 * n..=2 * n {
        items.push(verify_main_identity(&mut s, d, 0));
    }
    RSeriesReport {
        n,
        psi_def: def,
        items,
    }
}
