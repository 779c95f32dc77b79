//! Segments, multisegments, and the A_∞ root-lattice forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer interval (a,b) with a ≤ b+1; length 0 only as the unit (a, a-1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Segment {
    pub a: i64,
    pub b: i64,
}

impl Segment {
    pub fn new(a: i64, b: i64) -> Self {
        assert!(a <= b + 1, "segment requires a <= b+1");
        Segment { a, b }
    }

    /// The length-0 unit segment (a, a-1).
    pub fn unit(a: i64) -> Self {
        Segment { a, b: a - 1 }
    }

    pub fn len(&self) -> i64 {
        self.b - self.a + 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Residue word (a, a+1, ..., b).
    pub fn residues(&self) -> Vec<i64> {
        (self.a..=self.b).collect()
    }
}

/// Total order: (a1,b1) > (a2,b2) iff a1 > a2, or a1 = a2 and b1 > b2.
pub fn compare_segments(s1: &Segment, s2: &Segment) -> Ordering {
    (s1.a, s1.b).cmp(&(s2.a, s2.b))
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_segments(self, other)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Descending-sorted list of nonempty segments.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    /// Normalize: drop unit segments and sort descending.
    pub fn new(mut segs: Vec<Segment>) -> Self {
        segs.retain(|s| !s.is_empty());
        segs.sort_by(|x, y| compare_segments(y, x));
        Multisegment { segs }
    }

    pub fn empty() -> Self {
        Multisegment { segs: Vec::new() }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Sum of ε_a - ε_{b+1} over the segments.
    pub fn weight(&self) -> RootVec {
        self.segs
            .iter()
            .fold(RootVec::zero(), |acc, s| acc.add(&RootVec::segment_weight(s)))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, s) in self.segs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Finite-support integer vector in the ε-basis of the A_∞ weight lattice.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RootVec {
    eps: BTreeMap<i64, i64>,
}

impl RootVec {
    pub fn zero() -> Self {
        RootVec::default()
    }

    pub fn eps(a: i64) -> Self {
        Self::from_eps([(a, 1)])
    }

    /// α_i = ε_i - ε_{i+1}.
    pub fn alpha(i: i64) -> Self {
        Self::from_eps([(i, 1), (i + 1, -1)])
    }

    /// ε_a - ε_{b+1} for a segment (a,b).
    pub fn segment_weight(s: &Segment) -> Self {
        Self::from_eps([(s.a, 1), (s.b + 1, -1)])
    }

    pub fn from_eps(coords: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut v = RootVec::zero();
        for (a, c) in coords {
            v.add_eps(a, c);
        }
        v
    }

    fn add_eps(&mut self, a: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.eps.entry(a).or_insert(0);
        *e += c;
        if *e == 0 {
            self.eps.remove(&a);
        }
    }

    pub fn eps_coords(&self) -> &BTreeMap<i64, i64> {
        &self.eps
    }

    pub fn is_zero(&self) -> bool {
        self.eps.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, c) in &o.eps {
            r.add_eps(*a, *c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, c) in &o.eps {
            r.add_eps(*a, -*c);
        }
        r
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return RootVec::zero();
        }
        RootVec {
            eps: self.eps.iter().map(|(a, x)| (*a, x * c)).collect(),
        }
    }

    /// Shift S^k: ε_a -> ε_{a+kN}.
    pub fn shift(&self, k: i64, n: i64) -> Self {
        RootVec {
            eps: self.eps.iter().map(|(a, c)| (a + k * n, *c)).collect(),
        }
    }

    /// Coefficients in the α-basis; defined when ε-coordinates sum to zero.
    pub fn alpha_coords(&self) -> Option<BTreeMap<i64, i64>> {
        if self.eps.values().sum::<i64>() != 0 {
            return None;
        }
        // coefficient of α_i is the partial sum of ε-coordinates up to i
        let mut out = BTreeMap::new();
        let mut run = 0i64;
        let mut keys = self.eps.keys();
        let (first, last) = match (keys.next(), self.eps.keys().next_back()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Some(out),
        };
        for i in first..last {
            run += self.eps.get(&i).copied().unwrap_or(0);
            if run != 0 {
                out.insert(i, run);
            }
        }
        Some(out)
    }
}

/// Cartan pairing of A_∞ extended to the weight lattice: (ε_a, ε_b) = δ_{ab}.
pub fn sym_form(x: &RootVec, y: &RootVec) -> i64 {
    x.eps_coords()
        .iter()
        .map(|(a, c)| c * y.eps_coords().get(a).copied().unwrap_or(0))
        .sum()
}

/// ⟨α_i, α_j⟩ = δ_{ij} on the root lattice.
pub fn inner_form(x: &RootVec, y: &RootVec) -> i64 {
    let xa = x.alpha_coords().expect("root-lattice element");
    let ya = y.alpha_coords().expect("root-lattice element");
    xa.iter()
        .map(|(i, c)| c * ya.get(i).copied().unwrap_or(0))
        .sum()
}

/// B(x,y) = -Σ_{k>0} (S^k x, y) with S(ε_a) = ε_{a+N}.
pub fn b_form(x: &RootVec, y: &RootVec, n: i64) -> i64 {
    assert!(n >= 1, "shift step must be positive");
    let (Some(xmin), Some(ymax)) = (
        x.eps_coords().keys().next(),
        y.eps_coords().keys().next_back(),
    ) else {
        return 0;
    };
    let mut total = 0;
    let mut k = 1;
    while xmin + k * n <= *ymax {
        total += sym_form(&x.shift(k, n), y);
        k += 1;
    }
    -total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_order() {
        assert_eq!(
            compare_segments(&Segment::new(2, 3), &Segment::new(1, 5)),
            Ordering::Greater
        );
        assert_eq!(
            compare_segments(&Segment::new(1, 3), &Segment::new(1, 5)),
            Ordering::Less
        );
        assert_eq!(
            compare_segments(&Segment::new(1, 3), &Segment::new(1, 3)),
            Ordering::Equal
        );
    }

    #[test]
    fn multisegment_normalization() {
        let m = Multisegment::new(vec![
            Segment::new(0, 2),
            Segment::unit(5),
            Segment::new(1, 1),
            Segment::new(0, 4),
        ]);
        assert_eq!(
            m.segments(),
            &[Segment::new(1, 1), Segment::new(0, 4), Segment::new(0, 2)]
        );
        // idempotent
        assert_eq!(Multisegment::new(m.segments().to_vec()), m);
    }

    #[test]
    fn forms() {
        let a1 = RootVec::alpha(1);
        let a2 = RootVec::alpha(2);
        assert_eq!(sym_form(&a1, &a2), -1);
        assert_eq!(sym_form(&a1, &a1), 2);
        assert_eq!(inner_form(&a1, &a2), 0);
        assert_eq!(inner_form(&a1, &a1), 1);
        // β = weight of (1,2) = α_1 + α_2
        let beta = RootVec::segment_weight(&Segment::new(1, 2));
        assert_eq!(beta, a1.add(&a2));
        assert_eq!(sym_form(&beta, &beta), 2);
    }

    #[test]
    fn b_form_examples() {
        for n in 2..=6 {
            // only the k=1 term survives for N >= 2
            assert_eq!(b_form(&RootVec::alpha(1), &RootVec::alpha(1 + n), n), -2);
        }
        for n in 1..=6 {
            assert_eq!(b_form(&RootVec::eps(0), &RootVec::eps(n), n), -1);
        }
        for n in 3..=6 {
            assert_eq!(b_form(&RootVec::alpha(1), &RootVec::alpha(2), n), 0);
        }
        // shift invariance
        let x = RootVec::from_eps([(0, 2), (3, -1), (7, 1)]);
        let y = RootVec::from_eps([(1, 1), (5, 4)]);
        for n in 1..=5 {
            assert_eq!(b_form(&x.shift(1, n), &y.shift(1, n), n), b_form(&x, &y, n));
        }
    }
}
