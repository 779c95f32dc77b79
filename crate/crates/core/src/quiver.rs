//! Pole quivers on finite spectral-parameter windows, the folding
//! correspondence between the untwisted and twisted families, and the
//! generic (J, X, S) seed-quiver construction.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::denom::{denom_zeros, pole_order, AlgebraTag, Family};
use crate::exact::{BivarPoly, LaurentQ, Poly, PolyZ, SpectralParam};
use crate::Error;

/// A vertex (node index, spectral parameter), canonical under the one
/// identification the twisted family carries: for A2 with N = 2n even, the
/// middle node's parameter sign is normalized to +1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct VertexClass {
    pub node: i64,
    pub param: SpectralParam,
}

impl VertexClass {
    pub fn new(tag: &AlgebraTag, node: i64, param: SpectralParam) -> Self {
        let param = if tag.family == Family::A2 && tag.n % 2 == 0 && node == tag.n / 2 {
            SpectralParam::new(1, param.exponent)
        } else {
            param
        };
        VertexClass { node, param }
    }

    pub fn label(&self) -> String {
        format!(
            "{}:{}(-q)^{}",
            self.node,
            if self.param.sign == 1 { "+" } else { "-" },
            self.param.exponent
        )
    }
}

/// A pole quiver restricted to a parameter-exponent window.
#[derive(Clone, Debug, Serialize)]
pub struct QuiverWindow {
    pub tag: AlgebraTag,
    pub pmin: i64,
    pub pmax: i64,
    pub vertices: Vec<VertexClass>,
    /// (source index, target index) -> arrow multiplicity (only nonzero kept).
    #[serde(serialize_with = "arrows_as_triples")]
    pub arrows: BTreeMap<(usize, usize), u32>,
}

/// Tuple keys don't survive JSON; flatten to (source, target, multiplicity).
fn arrows_as_triples<S: serde::Serializer>(
    arrows: &BTreeMap<(usize, usize), u32>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    ser.collect_seq(arrows.iter().map(|(&(a, b), &m)| (a, b, m)))
}

impl QuiverWindow {
    pub fn multiplicity(&self, s: usize, t: usize) -> u32 {
        self.arrows.get(&(s, t)).copied().unwrap_or(0)
    }

    /// Deterministic DOT rendering with parallel edges for multiplicity.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", v.label());
        }
        for ((s, t), m) in &self.arrows {
            for _ in 0..*m {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    self.vertices[*s].label(),
                    self.vertices[*t].label()
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The folding map on vertices: (i,x) for i ≤ ⌊N/2⌋, else (N-i, (-1)^{N-1}x).
pub fn pi2(n: i64, i: i64, x: SpectralParam) -> Result<VertexClass, Error> {
    if i < 1 || i > n - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "node {i} outside 1..={} for N = {n}",
            n - 1
        )));
    }
    let tag = AlgebraTag::new(Family::A2, n)?;
    if i <= n / 2 {
        Ok(VertexClass::new(&tag, i, x))
    } else {
        let x = if (n - 1) % 2 == 0 { x } else { x.negate() };
        Ok(VertexClass::new(&tag, n - i, x))
    }
}

/// Vertices of the standard parameter set 𝒮₀ with exponent in [pmin, pmax].
fn s0_vertices(tag: &AlgebraTag, pmin: i64, pmax: i64) -> Vec<VertexClass> {
    let mut vs = Vec::new();
    match tag.family {
        Family::A1 => {
            for i in 1..=tag.max_node() {
                for p in pmin..=pmax {
                    if (p - (i + 1)).rem_euclid(2) == 0 {
                        vs.push(VertexClass::new(tag, i, SpectralParam::new(1, p)));
                    }
                }
            }
        }
        Family::A2 if tag.n % 2 == 0 => {
            // N = 2n: signed parameters, parity-locked, middle node collapsed
            for i in 1..=tag.max_node() {
                for p in pmin..=pmax {
                    if (p - (i + 1)).rem_euclid(2) != 0 {
                        continue;
                    }
                    for sign in [1i8, -1] {
                        let v = VertexClass::new(tag, i, SpectralParam::new(sign, p));
                        if !vs.contains(&v) {
                            vs.push(v);
                        }
                    }
                }
            }
        }
        Family::A2 => {
            // N odd: every integer exponent, positive sign
            for i in 1..=tag.max_node() {
                for p in pmin..=pmax {
                    vs.push(VertexClass::new(tag, i, SpectralParam::new(1, p)));
                }
            }
        }
    }
    vs.sort();
    vs.dedup();
    vs
}

/// Build the pole quiver on the 𝒮₀ window.
pub fn build_s0_window(tag: &AlgebraTag, pmin: i64, pmax: i64) -> Result<QuiverWindow, Error> {
    assert!(pmin <= pmax, "empty window");
    let vertices = s0_vertices(tag, pmin, pmax);
    let mut arrows = BTreeMap::new();
    for (s, u) in vertices.iter().enumerate() {
        for (t, v) in vertices.iter().enumerate() {
            let ratio = v.param.ratio(&u.param);
            let m = pole_order(tag, u.node, v.node, &ratio)?;
            if m > 0 {
                arrows.insert((s, t), m);
            }
        }
    }
    Ok(QuiverWindow {
        tag: *tag,
        pmin,
        pmax,
        vertices,
        arrows,
    })
}

/// Result of checking that the folding map is a quiver isomorphism on a window.
#[derive(Clone, Debug, Serialize)]
pub struct Pi2Report {
    pub n: i64,
    pub pmin: i64,
    pub pmax: i64,
    pub vertices_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
}

impl Pi2Report {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_pi2_isomorphism(n: i64, pmin: i64, pmax: i64) -> Result<Pi2Report, Error> {
    let t1 = AlgebraTag::new(Family::A1, n)?;
    let t2 = AlgebraTag::new(Family::A2, n)?;
    let w1 = build_s0_window(&t1, pmin, pmax)?;
    let w2 = build_s0_window(&t2, pmin, pmax)?;
    let mut violations = Vec::new();

    let images: Vec<VertexClass> = w1
        .vertices
        .iter()
        .map(|v| pi2(n, v.node, v.param))
        .collect::<Result<_, _>>()?;

    let mut sorted = images.clone();
    sorted.sort();
    let dups = sorted.windows(2).filter(|w| w[0] == w[1]).count();
    if dups > 0 {
        violations.push(format!("folding map not injective: {dups} collisions"));
    }
    if sorted != w2.vertices {
        violations.push(format!(
            "image vertex set differs from the twisted window ({} vs {} vertices)",
            sorted.len(),
            w2.vertices.len()
        ));
    }

    let index2: BTreeMap<VertexClass, usize> = w2
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (*v, k))
        .collect();
    let mut pairs = 0;
    for (s, _) in w1.vertices.iter().enumerate() {
        for (t, _) in w1.vertices.iter().enumerate() {
            let (Some(is), Some(it)) = (index2.get(&images[s]), index2.get(&images[t])) else {
                continue;
            };
            pairs += 1;
            let m1 = w1.multiplicity(s, t);
            let m2 = w2.multiplicity(*is, *it);
            if m1 != m2 {
                violations.push(format!(
                    "arrow multiplicity mismatch {} -> {}: {m1} vs {m2}",
                    w1.vertices[s].label(),
                    w1.vertices[t].label()
                ));
            }
        }
    }

    Ok(Pi2Report {
        n,
        pmin,
        pmax,
        vertices_checked: w1.vertices.len(),
        pairs_checked: pairs,
        violations,
    })
}

/// The seed-quiver data attached to a family (J, X, S): arrow counts d_ij,
/// the symmetrized Cartan matrix, and the polynomials Q_ij(u,v).
#[derive(Clone, Debug)]
pub struct GammaJ {
    pub indices: Vec<i64>,
    pub d: BTreeMap<(i64, i64), u32>,
    pub cartan: BTreeMap<(i64, i64), i64>,
    pub q_polys: BTreeMap<(i64, i64), BivarPoly>,
}

/// `(u - v)` as a bivariate polynomial (outer variable v, inner u).
pub fn u_minus_v() -> BivarPoly {
    Poly::new(vec![
        Poly::monomial(LaurentQ::one(), 1),
        PolyZ::constant(LaurentQ::int(-1)),
    ])
}

/// Build Γ^J for a window J of indices, parameters X, and a pole oracle
/// giving the zero-order of the relevant denominator at a parameter ratio.
pub fn build_gamma_j(
    indices: &[i64],
    x: impl Fn(i64) -> SpectralParam,
    pole: impl Fn(&SpectralParam) -> u32,
) -> GammaJ {
    let mut d = BTreeMap::new();
    let mut cartan = BTreeMap::new();
    let mut q_polys = BTreeMap::new();
    for &i in indices {
        for &j in indices {
            let dij = if i == j { 0 } else { pole(&x(j).ratio(&x(i))) };
            if dij > 0 {
                d.insert((i, j), dij);
            }
        }
    }
    for &i in indices {
        for &j in indices {
            let dij = d.get(&(i, j)).copied().unwrap_or(0) as i64;
            let dji = d.get(&(j, i)).copied().unwrap_or(0) as i64;
            let a = if i == j { 2 } else { -dij - dji };
            if a != 0 {
                cartan.insert((i, j), a);
            }
            if i != j {
                let q = u_minus_v()
                    .pow(dij as u32)
                    .mul(&u_minus_v().neg().pow(dji as u32));
                q_polys.insert((i, j), q);
            }
        }
    }
    GammaJ {
        indices: indices.to_vec(),
        d,
        cartan,
        q_polys,
    }
}

/// The seed family of the twisted functor: J ⊂ ℤ, X(j) = q^{2j},
/// S(j) the first fundamental representation of the twisted algebra.
pub fn seed_gamma_j(jmin: i64, jmax: i64, n: i64) -> Result<GammaJ, Error> {
    let tag = AlgebraTag::new(Family::A2, n)?;
    // surface index errors eagerly, then hand a plain oracle to the builder
    denom_zeros(&tag, 1, 1)?;
    let indices: Vec<i64> = (jmin..=jmax).collect();
    Ok(build_gamma_j(
        &indices,
        |j| SpectralParam::canonicalize_signed_q_power(1, 2 * j),
        |ratio| pole_order(&tag, 1, 1, ratio).expect("validated indices"),
    ))
}
