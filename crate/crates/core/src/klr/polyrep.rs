//! Faithful polynomial representation of the A_∞ quiver Hecke algebra on
//! ⊕_ν ℚ[x_1..x_n] e(ν), used as an independent oracle for the defining
//! relations: the τ-operators are built from divided differences and
//! variable swaps, not from the rewriting rules, so the two constructions
//! cross-validate each other.

use std::collections::{BTreeMap, HashMap};

use crate::exact::laurent::{rat, Rat};
use crate::exact::ring::Coeff;

/// Multivariate polynomial over ℚ: exponent vector -> coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Coeff::one())
    }

    pub fn var(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, Coeff::one());
        p
    }

    pub fn monomial(n: usize, exps: Vec<u32>) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exps, Coeff::one());
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Coeff::zero);
        *entry = (&*entry) + &c;
        if entry.is_zero() {
            let key: Vec<u32> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Swap the variables x_k and x_{k+1}.
    pub fn swap(&self, k: usize) -> Self {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(k, k + 1);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by (x_k - x_{k+1}); panics if not divisible.
    /// Synthetic division in x_k with remainder x_k -> x_{k+1}.
    pub fn div_diff_denominator(&self, k: usize) -> Self {
        // collect as polynomial in x_k: degree -> MPoly without x_k
        let mut by_deg: HashMap<u32, MPoly> = HashMap::new();
        let mut maxd = 0;
        for (e, c) in &self.terms {
            let d = e[k];
            maxd = maxd.max(d);
            let mut e0 = e.clone();
            e0[k] = 0;
            by_deg
                .entry(d)
                .or_insert_with(|| Self::zero(self.n))
                .add_term(e0, c.clone());
        }
        let coeff = |d: u32| by_deg.get(&d).cloned().unwrap_or_else(|| Self::zero(self.n));
        let xk1 = Self::var(self.n, k + 1);
        let mut quotient = Self::zero(self.n);
        let mut carry = Self::zero(self.n);
        for d in (1..=maxd).rev() {
            carry = coeff(d).add(&carry);
            // carry is the x_k^{d-1} coefficient of the quotient
            let xk_pow = {
                let mut e = vec![0; self.n];
                e[k] = d - 1;
                Self::monomial(self.n, e)
            };
            quotient = quotient.add(&carry.mul(&xk_pow));
            carry = carry.mul(&xk1);
        }
        let remainder = coeff(0).add(&carry);
        assert!(remainder.is_zero(), "not divisible by x_k - x_{{k+1}}");
        quotient
    }
}

/// Element of the polynomial representation: label -> polynomial.
pub type RepElem = HashMap<Vec<i64>, MPoly>;

/// The representation, for a fixed number of strands.
pub struct PolyRep {
    pub n: usize,
}

impl PolyRep {
    pub fn new(n: usize) -> Self {
        PolyRep { n }
    }

    pub fn elem(&self, nu: &[i64], f: MPoly) -> RepElem {
        let mut m = HashMap::new();
        if !f.is_zero() {
            m.insert(nu.to_vec(), f);
        }
        m
    }

    fn merge(acc: &mut RepElem, nu: Vec<i64>, f: MPoly) {
        if f.is_zero() {
            return;
        }
        match acc.remove(&nu) {
            None => {
                acc.insert(nu, f);
            }
            Some(g) => {
                let s = g.add(&f);
                if !s.is_zero() {
                    acc.insert(nu, s);
                }
            }
        }
    }

    pub fn apply_e(&self, nu: &[i64], v: &RepElem) -> RepElem {
        v.iter()
            .filter(|(l, _)| l.as_slice() == nu)
            .map(|(l, f)| (l.clone(), f.clone()))
            .collect()
    }

    pub fn apply_x(&self, m: usize, v: &RepElem) -> RepElem {
        let xm = MPoly::var(self.n, m);
        v.iter().map(|(l, f)| (l.clone(), f.mul(&xm))).collect()
    }

    /// τ_k: the divided difference (s_k f - f)/(x_k - x_{k+1}) on equal
    /// adjacent residues; otherwise λ·s_k with λ = 1 on ascents and the
    /// transposed Q-polynomial on descents.
    pub fn apply_tau(&self, k: usize, v: &RepElem) -> RepElem {
        let mut out = RepElem::new();
        for (nu, f) in v {
            let (i, j) = (nu[k], nu[k + 1]);
            if i == j {
                let g = f.swap(k).sub(f).div_diff_denominator(k);
                Self::merge(&mut out, nu.clone(), g);
            } else {
                let mut nu2 = nu.clone();
                nu2.swap(k, k + 1);
                let lam = if i < j {
                    MPoly::one(self.n)
                } else {
                    // Q_{ν_{k+1}, ν_k}(x_k, x_{k+1})
                    q_poly(self.n, j, i, k)
                };
                Self::merge(&mut out, nu2, lam.mul(&f.swap(k)));
            }
        }
        out
    }

    pub fn equal(a: &RepElem, b: &RepElem) -> bool {
        if a.len() != b.len() {
            return false;
        }
        a.iter().all(|(l, f)| b.get(l) == Some(f))
    }
}

/// Q_{ij}(x_k, x_{k+1}) for A_∞ as a polynomial.
pub fn q_poly(n: usize, i: i64, j: i64, k: usize) -> MPoly {
    if i == j {
        MPoly::zero(n)
    } else if j == i + 1 {
        MPoly::var(n, k).sub(&MPoly::var(n, k + 1))
    } else if j == i - 1 {
        MPoly::var(n, k + 1).sub(&MPoly::var(n, k))
    } else {
        MPoly::one(n)
    }
}

/// All distinct arrangements of a residue multiset.
pub fn label_orbit(residues: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = residues.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    permute(&mut sorted.clone(), 0, &mut out);
    out.sort();
    out.dedup();
    out
}

fn permute(v: &mut Vec<i64>, k: usize, out: &mut Vec<Vec<i64>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Check every defining relation on the span of monomials of degree up to
/// `max_deg` over every arrangement of the residues.  The operators act
/// exactly on polynomials, so each verified instance is an exact identity.
pub fn check_relations(residues: &[i64], max_deg: u32) -> Result<(), String> {
    let n = residues.len();
    let rep = PolyRep::new(n);
    let labels = label_orbit(residues);
    let monomials = monomials_up_to(n, max_deg);
    for nu in &labels {
        for mono in &monomials {
            let v = rep.elem(nu, mono.clone());
            for k in 0..n - 1 {
                let tk = rep.apply_tau(k, &v);
                // τ_k e(ν) = e(s_k ν) τ_k
                let mut snu = nu.clone();
                snu.swap(k, k + 1);
                if !PolyRep::equal(&rep.apply_e(&snu, &tk), &tk) {
                    return Err(format!("label covariance fails at ν={nu:?}, k={k}"));
                }
                // τ_k² = Q_{ν_k,ν_{k+1}}(x_k, x_{k+1})
                let sq = rep.apply_tau(k, &tk);
                let q = q_poly(n, nu[k], nu[k + 1], k);
                let expect = rep.elem(nu, q.mul(mono));
                if !PolyRep::equal(&sq, &expect) {
                    return Err(format!("τ² ≠ Q at ν={nu:?}, k={k}"));
                }
                // τ_k x_m - x_{s_k(m)} τ_k = (-δ_{m,k} + δ_{m,k+1}) δ_{ν_k,ν_{k+1}}
                for m in 0..n {
                    let lhs = rep.apply_tau(k, &rep.apply_x(m, &v));
                    let skm = if m == k {
                        k + 1
                    } else if m == k + 1 {
                        k
                    } else {
                        m
                    };
                    let mut rhs = rep.apply_x(skm, &tk);
                    if nu[k] == nu[k + 1] {
                        let c = if m == k {
                            rat(-1)
                        } else if m == k + 1 {
                            rat(1)
                        } else {
                            rat(0)
                        };
                        if !c.is_zero() {
                            let corr = rep.elem(nu, MPoly::constant(n, c).mul(mono));
                            for (l, f) in corr {
                                PolyRep::merge(&mut rhs, l, f);
                            }
                        }
                    }
                    if !PolyRep::equal(&lhs, &rhs) {
                        return Err(format!("τx relation fails at ν={nu:?}, k={k}, m={m}"));
                    }
                }
                // far commutations
                for l in k + 2..n - 1 {
                    let a = rep.apply_tau(l, &tk);
                    let b = rep.apply_tau(k, &rep.apply_tau(l, &v));
                    if !PolyRep::equal(&a, &b) {
                        return Err(format!("far ττ fails at ν={nu:?}, k={k}, l={l}"));
                    }
                }
                // braid relation with its Q-difference quotient
                if k + 2 < n {
                    let l = k + 1;
                    let lhs = rep.apply_tau(l, &rep.apply_tau(k, &rep.apply_tau(l, &v)));
                    let mut rhs = rep.apply_tau(k, &rep.apply_tau(l, &rep.apply_tau(k, &v)));
                    if nu[k] == nu[k + 2] {
                        // (Q(x_k,x_{k+1}) - Q(x_{k+2},x_{k+1}))/(x_k - x_{k+2})
                        // is ±1 for adjacent residues and 0 otherwise
                        let c = if nu[k + 1] == nu[k] + 1 {
                            rat(1)
                        } else if nu[k + 1] == nu[k] - 1 {
                            rat(-1)
                        } else {
                            rat(0)
                        };
                        if !c.is_zero() {
                            let corr = rep.elem(nu, MPoly::constant(n, c).mul(mono));
                            for (lab, f) in corr {
                                PolyRep::merge(&mut rhs, lab, f);
                            }
                        }
                    }
                    if !PolyRep::equal(&lhs, &rhs) {
                        return Err(format!("braid fails at ν={nu:?}, k={k}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn monomials_up_to(n: usize, max_deg: u32) -> Vec<MPoly> {
    let mut exps = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &exps {
            let used: u32 = e.iter().sum();
            for d in 0..=(max_deg - used) {
                let mut e2 = e.clone();
                e2.push(d);
                next.push(e2);
            }
        }
        exps = next;
    }
    exps.into_iter().map(|e| MPoly::monomial(n, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_difference_basics() {
        let n = 2;
        // ∂ of x_0 x_1 (symmetric): zero
        let f = MPoly::var(n, 0).mul(&MPoly::var(n, 1));
        assert!(f.swap(0).sub(&f).div_diff_denominator(0).is_zero());
        // (x_1² - x_0²)/(x_0 - x_1) = -(x_0 + x_1)
        let g = MPoly::var(n, 0).mul(&MPoly::var(n, 0));
        let d = g.swap(0).sub(&g).div_diff_denominator(0);
        assert_eq!(d, MPoly::var(n, 0).add(&MPoly::var(n, 1)).neg());
    }

    #[test]
    fn relations_hold_in_polynomial_model() {
        for residues in [
            vec![0, 0],
            vec![0, 1],
            vec![0, 0, 1],
            vec![0, 1, 2],
            vec![0, 1, 1, 2],
            vec![0, 0, 1, 1],
        ] {
            check_relations(&residues, 2).unwrap_or_else(|e| panic!("{e}"));
        }
    }
}
