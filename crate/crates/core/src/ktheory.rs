//! Class arithmetic at q = 1 in the localized category cut off at length N:
//! canonical simple classes, images of segments under the two evaluation
//! functors, dimension functionals, and two-segment product decompositions.

use std::fmt;

use serde::Serialize;

use crate::denom::{AlgebraTag, Family};
use crate::exact::SpectralParam;
use crate::klr::{classify, PairCase};
use crate::quiver::{pi2, VertexClass};
use crate::segments::{Multisegment, Segment};
use crate::Error;

/// A simple class: zero, or a canonical multisegment with every segment
/// length in 1..N.  The unit is the empty multisegment.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum SimpleClassTN {
    Zero,
    Class { n: i64, ms: Multisegment },
}

impl SimpleClassTN {
    pub fn unit(n: i64) -> Self {
        SimpleClassTN::Class {
            n,
            ms: Multisegment::empty(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SimpleClassTN::Zero)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, SimpleClassTN::Class { ms, .. } if ms.is_empty())
    }
}

impl fmt::Display for SimpleClassTN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleClassTN::Zero => write!(f, "0"),
            SimpleClassTN::Class { ms, .. } if ms.is_empty() => write!(f, "1"),
            SimpleClassTN::Class { ms, .. } => write!(f, "{ms}"),
        }
    }
}

/// Normalize a multisegment into a class: segments of length N are units
/// and drop out; any segment of length > N kills the whole class.
pub fn canonicalize_class(ms: &Multisegment, n: i64) -> SimpleClassTN {
    assert!(n >= 2, "localization requires N >= 2");
    if ms.segments().iter().any(|s| s.len() > n) {
        return SimpleClassTN::Zero;
    }
    let kept: Vec<Segment> = ms
        .segments()
        .iter()
        .copied()
        .filter(|s| s.len() < n)
        .collect();
    SimpleClassTN::Class {
        n,
        ms: Multisegment::new(kept),
    }
}

/// Image of a segment module under an evaluation functor.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FundImage {
    Zero,
    Trivial,
    Vertex(VertexClass),
}

/// Image of L(a,b): a fundamental representation V(ϖ_ℓ) at parameter
/// (-q)^{a+b}, folded through π² on the twisted side; trivial for
/// lengths 0 and N, zero beyond.
pub fn fund_image(family: Family, seg: Segment, n: i64) -> Result<FundImage, Error> {
    let tag = AlgebraTag::new(family, n)?;
    let l = seg.len();
    if l == 0 || l == n {
        return Ok(FundImage::Trivial);
    }
    if l > n {
        return Ok(FundImage::Zero);
    }
    let x = SpectralParam::neg_q_pow(seg.a + seg.b);
    Ok(FundImage::Vertex(match family {
        Family::A1 => VertexClass::new(&tag, l, x),
        Family::A2 => pi2(n, l, x)?,
    }))
}

/// Classical dimension of the ℓ-th fundamental representation: C(N, ℓ).
pub fn dim_fund(l: i64, n: i64) -> Result<u64, Error> {
    if l < 0 || l > n {
        return Err(Error::IndexOutOfRange(format!(
            "fundamental label {l} outside 0..={n}"
        )));
    }
    let mut r: u64 = 1;
    for s in 0..l.min(n - l) {
        r = r * (n - s) as u64 / (s + 1) as u64;
    }
    Ok(r)
}

/// Orient an unordered pair into one of the listed positional cases:
/// reversed overlaps are re-read as nested/linked/adjacent the other way.
fn oriented_case(x: Segment, y: Segment) -> Option<(PairCase, Segment, Segment)> {
    match classify(x, y) {
        Some(PairCase::Overlap) | None => match classify(y, x) {
            Some(PairCase::Overlap) | None => None,
            Some(c) => Some((c, y, x)),
        },
        Some(c) => Some((c, x, y)),
    }
}

fn convolution_simple(x: Segment, y: Segment) -> bool {
    matches!(
        oriented_case(x, y),
        Some((PairCase::Equal | PairCase::Nested | PairCase::Unlinked, _, _))
    )
}

/// For a linked or adjacent pair in orientation l = (a,b), r = (a',b'),
/// the non-head constituent of [l][r]: the exchanged pair resp. the fusion.
fn complementary_segments(case: PairCase, l: Segment, r: Segment) -> Vec<Segment> {
    match case {
        PairCase::Linked => vec![Segment::new(r.a, l.b), Segment::new(l.a, r.b)],
        PairCase::Adjacent => vec![Segment::new(r.a, l.b)],
        _ => unreachable!("no complementary class"),
    }
}

fn check_seg_len(s: Segment, n: i64) -> Result<(), Error> {
    if s.len() < 1 || s.len() > n - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "segment {s} has length {} outside 1..={}",
            s.len(),
            n - 1
        )));
    }
    Ok(())
}

/// [s1][s2] as a multiset of simple classes with multiplicities, at q = 1.
/// Classes that canonicalize to zero are dropped.
pub fn decompose_two_segment_product(
    s1: Segment,
    s2: Segment,
    n: i64,
) -> Result<Vec<(SimpleClassTN, u32)>, Error> {
    check_seg_len(s1, n)?;
    check_seg_len(s2, n)?;
    let (case, l, r) = oriented_case(s1, s2).ok_or_else(|| {
        Error::IndexOutOfRange(format!("pair ({s1},{s2}) not in a listed case"))
    })?;
    let head = canonicalize_class(&Multisegment::new(vec![s1, s2]), n);
    let mut out = vec![(head, 1u32)];
    if matches!(case, PairCase::Linked | PairCase::Adjacent) {
        let c = canonicalize_class(&Multisegment::new(complementary_segments(case, l, r)), n);
        if !c.is_zero() {
            match out.iter_mut().find(|(k, _)| *k == c) {
                Some((_, m)) => *m += 1,
                None => out.push((c, 1)),
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Dimension of the image of a simple class under either functor; the two
/// agree, so `family` only selects which statement is being exercised.
/// Decidable classes: unit, single segments, pairwise nested-or-unlinked
/// multisegments (products of simples), and two-segment heads.
pub fn dim_class(family: Family, c: &SimpleClassTN) -> Result<u64, Error> {
    let (n, ms) = match c {
        SimpleClassTN::Zero => return Ok(0),
        SimpleClassTN::Class { n, ms } => (*n, ms),
    };
    AlgebraTag::new(family, n)?;
    let segs = ms.segments();
    let simple = (0..segs.len())
        .all(|i| (i + 1..segs.len()).all(|j| convolution_simple(segs[i], segs[j])));
    if simple {
        let mut d = 1u64;
        for s in segs {
            d *= dim_fund(s.len(), n)?;
        }
        return Ok(d);
    }
    if let [x, y] = segs {
        if let Some((case @ (PairCase::Linked | PairCase::Adjacent), l, r)) =
            oriented_case(*x, *y)
        {
            let comp =
                canonicalize_class(&Multisegment::new(complementary_segments(case, l, r)), n);
            let prod = dim_fund(x.len(), n)? * dim_fund(y.len(), n)?;
            return Ok(prod - dim_class(family, &comp)?);
        }
    }
    Err(Error::Undecidable)
}

/// Whether the twisted functor kills or preserves the simple with this label.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ImageStatus {
    Zero,
    Simple,
}

pub fn simple_image_status(ms: &Multisegment, n: i64) -> ImageStatus {
    if ms.segments().iter().any(|s| s.len() > n) {
        ImageStatus::Zero
    } else {
        ImageStatus::Simple
    }
}

/// Outcome of the fusion-parameter test on a triple of fundamental labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FusionCondition {
    ConditionI,
    ConditionII,
    None,
}

/// Detect the two parameter patterns under which V(ϖ_k)_z is a quotient of
/// V(ϖ_i)_x ⊗ V(ϖ_j)_y:
/// (I)  i+j < N, k = i+j,   x/z = (-q)^{-j},   y/z = (-q)^{i};
/// (II) i+j > N, k = i+j-N, x/z = (-q)^{j-N},  y/z = (-q)^{N-i}.
pub fn hom_fusion_check(
    i: i64,
    x: SpectralParam,
    j: i64,
    y: SpectralParam,
    k: i64,
    z: SpectralParam,
    n: i64,
) -> FusionCondition {
    assert!(
        (1..n).contains(&i) && (1..n).contains(&j) && (1..n).contains(&k),
        "labels must lie in 1..=N-1"
    );
    let (xz, yz) = (x.ratio(&z), y.ratio(&z));
    if i + j < n
        && k == i + j
        && xz == SpectralParam::neg_q_pow(-j)
        && yz == SpectralParam::neg_q_pow(i)
    {
        FusionCondition::ConditionI
    } else if i + j > n
        && k == i + j - n
        && xz == SpectralParam::neg_q_pow(j - n)
        && yz == SpectralParam::neg_q_pow(n - i)
    {
        FusionCondition::ConditionII
    } else {
        FusionCondition::None
    }
}
