//! Classification of ordered segment pairs and verification of the
//! expected structure of the renormalized map in each case.

use serde::Serialize;

use super::engine::ShuffleModule;
use super::perm::WordPolicy;
use super::rmatrix::{CompositionReport, RMatrixPair};
use crate::exact::laurent::LaurentQ;
use crate::exact::ring::Coeff;
use crate::segments::Segment;

/// The six positional cases for an ordered pair L(a,b), L(a',b').
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PairCase {
    /// a = a', b = b'.
    Equal,
    /// a ≤ a' ≤ b ≤ b', not equal and not nested.
    Overlap,
    /// a ≤ a' ≤ b' ≤ b, not equal.
    Nested,
    /// b' < a - 1 (no interaction).
    Unlinked,
    /// a' < a ≤ b' < b (properly linked).
    Linked,
    /// a = b' + 1 (segments concatenate).
    Adjacent,
}

pub fn classify(l: Segment, r: Segment) -> Option<PairCase> {
    let (a, b, ap, bp) = (l.a, l.b, r.a, r.b);
    if (a, b) == (ap, bp) {
        Some(PairCase::Equal)
    } else if a <= ap && bp <= b {
        Some(PairCase::Nested)
    } else if a <= ap && ap <= b && b <= bp {
        Some(PairCase::Overlap)
    } else if bp < a - 1 {
        Some(PairCase::Unlinked)
    } else if a == bp + 1 {
        Some(PairCase::Adjacent)
    } else if ap < a && a <= bp && bp < b {
        Some(PairCase::Linked)
    } else {
        None
    }
}

fn q_shift(g: &LaurentQ, d: i64) -> LaurentQ {
    LaurentQ::from_terms(g.terms().map(|(p, c)| (p + d, c.clone())))
}

fn gdim(segs: &[Segment], policy: WordPolicy) -> LaurentQ {
    let m: ShuffleModule<crate::exact::laurent::Rat> =
        ShuffleModule::new(segs, vec![Coeff::zero(); segs.len()], policy);
    m.graded_dim()
}

/// Check the renormalized map of the pair against the structure predicted
/// for its case (grade shifts, kernel/cokernel graded dimensions).
pub fn check_pair_case(l: Segment, r: Segment, policy: WordPolicy) -> Result<PairCase, String> {
    let case = classify(l, r).ok_or_else(|| format!("({l},{r}) not in a listed case"))?;
    let rep = CompositionReport::compute(l, r, policy);
    let shift = rep
        .degree_shift
        .ok_or_else(|| format!("({l},{r}): r is not homogeneous"))?;
    if shift != rep.lambda {
        return Err(format!(
            "({l},{r}): degree shift {shift} disagrees with Λ = {}",
            rep.lambda
        ));
    }
    let (a, b, ap, bp) = (l.a, l.b, r.a, r.b);
    let fail = |msg: &str| Err(format!("({l},{r}) case {case:?}: {msg}"));
    match case {
        PairCase::Equal => {
            let rm = RMatrixPair::compute(l, r, policy);
            let id: Vec<Vec<_>> = (0..rm.dom.dim())
                .map(|j| {
                    (0..rm.dom.dim())
                        .map(|i| if i == j { Coeff::one() } else { Coeff::zero() })
                        .collect()
                })
                .collect();
            if rm.renormalized != id {
                return fail("r is not the identity");
            }
            if rep.lambda != 0 {
                return fail("Λ ≠ 0");
            }
        }
        PairCase::Overlap => {
            let expected = i64::from(a == ap) + i64::from(b == bp) - 2;
            if rep.lambda != expected {
                return fail("Λ ≠ δ_{a,a'} + δ_{b,b'} - 2");
            }
            if rep.im_gdim.is_zero() {
                return fail("r vanishes");
            }
        }
        PairCase::Nested => {
            if !rep.is_isomorphism {
                return fail("product not simple: r not iso");
            }
            let expected = i64::from(a == ap) - i64::from(b == bp);
            if rep.lambda != expected {
                return fail("Λ ≠ δ_{a,a'} - δ_{b,b'}");
            }
        }
        PairCase::Unlinked => {
            if !rep.is_isomorphism {
                return fail("unlinked pair: r not iso");
            }
            if rep.s != 0 {
                return fail("unlinked pair: s ≠ 0");
            }
        }
        PairCase::Linked => {
            // 0 -> q L(a',b)∘L(a,b') -> L(a,b)∘L(a',b') -> L(a',b')∘L(a,b)
            //   -> q⁻¹ L(a',b)∘L(a,b') -> 0
            let aux = gdim(&[Segment::new(ap, b), Segment::new(a, bp)], policy);
            if rep.ker_gdim != q_shift(&aux, 1) {
                return fail("kernel ≠ q · L(a',b)∘L(a,b')");
            }
            if rep.coker_gdim != q_shift(&aux, -1) {
                return fail("cokernel ≠ q⁻¹ · L(a',b)∘L(a,b')");
            }
        }
        PairCase::Adjacent => {
            // 0 -> q L(a',b) -> L(a,b)∘L(a',b') -> q⁻¹ L(a',b')∘L(a,b)
            //   -> q⁻¹ L(a',b) -> 0
            let aux = gdim(&[Segment::new(ap, b)], policy);
            if rep.ker_gdim != q_shift(&aux, 1) {
                return fail("kernel ≠ q · L(a',b)");
            }
            if rep.coker_gdim != aux {
                return fail("cokernel mismatch");
            }
            if rep.lambda != -1 {
                return fail("Λ ≠ -1");
            }
        }
    }
    Ok(case)
}
