//! R-matrices between convolutions of segment modules: the intertwiner
//! construction, its spectral deformation over ℚ[z,t] (t = z' - z), the
//! order of vanishing s, and the renormalized map r = ((z'-z)^{-s} R)|_{z=z'=0}.

use serde::Serialize;

use super::engine::ShuffleModule;
use super::perm::{Perm, WordPolicy};
use crate::exact::laurent::{rat, LaurentQ, Rat};
use crate::exact::ring::{Coeff, Poly};
use crate::segments::{inner_form, sym_form, RootVec, Segment};

/// ℚ[z,t]: inner variable z, outer variable t.
pub type ZT = Poly<Poly<Rat>>;

pub fn zt_z() -> ZT {
    Poly::constant(Poly::monomial(<Rat as Coeff>::one(), 1))
}

pub fn zt_t() -> ZT {
    Poly::monomial(Poly::one(), 1)
}

/// t-adic valuation; None for zero.
fn t_valuation(p: &ZT) -> Option<usize> {
    p.coeffs().iter().position(|c| !c.is_zero())
}

/// Coefficient of t^s with z set to 0.
fn residue_at(p: &ZT, s: usize) -> Rat {
    p.coeff(s).coeff(0)
}

/// Column-major matrix: `cols[j][i]` is the (i,j) entry.
pub type Cols<C> = Vec<Vec<C>>;

pub fn mat_mul_rat(g: &Cols<Rat>, f: &Cols<Rat>) -> Cols<Rat> {
    f.iter()
        .map(|col| {
            let mut out = vec![<Rat as Coeff>::zero(); g.first().map_or(0, Vec::len)];
            for (k, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    for (i, gk) in g[k].iter().enumerate() {
                        out[i] = (&out[i]) + &(gk * c);
                    }
                }
            }
            out
        })
        .collect()
}

/// Rank over ℚ by Gaussian elimination on the columns.
pub fn rank_rat(cols: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let nrows = cols.first().map_or(0, Vec::len);
    for i in 0..nrows {
        rows.push(cols.iter().map(|c| c[i].clone()).collect());
    }
    let mut rank = 0;
    let ncols = cols.len();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let pivot = rows[row][col].clone();
        for r in row + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    rows[r][c] = &rows[r][c] - &(&f * &rows[row][c]);
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// The block-swap permutation w[n,m] (0-indexed): the first n positions move
/// up by m, the rest down by n.
pub fn block_swap(n: usize, m: usize) -> Perm {
    let total = n + m;
    Perm::from_images(
        (0..total)
            .map(|i| if i < n { i + m } else { i - n })
            .collect(),
    )
}

/// R-matrix data for a pair of segment modules M, N.
pub struct RMatrixPair {
    pub left: Segment,
    pub right: Segment,
    pub policy: WordPolicy,
    /// Deformed domain M_z ∘ N_{z+t} and codomain N_{z+t} ∘ M_z.
    pub dom: ShuffleModule<ZT>,
    pub cod: ShuffleModule<ZT>,
    /// Unnormalized R over ℚ[z,t], column-major.
    pub unnormalized: Cols<ZT>,
    /// Order of vanishing along t = z' - z.
    pub s: i64,
    /// Λ = (β,γ) - 2⟨β,γ⟩ + 2s.
    pub lambda: i64,
    /// r = (t^{-s} R)|_{z=t=0}, column-major over ℚ.
    pub renormalized: Cols<Rat>,
}

impl RMatrixPair {
    pub fn compute(left: Segment, right: Segment, policy: WordPolicy) -> Self {
        let z = zt_z();
        let zp = zt_z().add(&zt_t());
        let dom = ShuffleModule::new(&[left, right], vec![z.clone(), zp.clone()], policy);
        let cod = ShuffleModule::new(&[right, left], vec![zp, z], policy);
        let (m, n) = (left.len() as usize, right.len() as usize);
        // u ⊗ v -> φ_{w[n,m]}(v ⊗ u), extended R-linearly to the basis
        let phi_word = block_swap(n, m).canonical_word(policy);
        let xi = cod.apply_phi_word(&phi_word, &cod.unit_vec());
        let unnormalized: Cols<ZT> = (0..dom.dim())
            .map(|b| cod.apply_word(dom.word(b), &xi))
            .collect();
        let s = unnormalized
            .iter()
            .flatten()
            .filter_map(t_valuation)
            .min()
            .expect("nonvanishing R-matrix") as i64;
        let beta = RootVec::segment_weight(&left);
        let gamma = RootVec::segment_weight(&right);
        let pairing = inner_form(&beta, &gamma);
        assert!(s <= pairing.max(0), "zero order exceeds ⟨β,γ⟩");
        let lambda = sym_form(&beta, &gamma) - 2 * pairing + 2 * s;
        let renormalized = unnormalized
            .iter()
            .map(|col| col.iter().map(|p| residue_at(p, s as usize)).collect())
            .collect();
        RMatrixPair {
            left,
            right,
            policy,
            dom,
            cod,
            unnormalized,
            s,
            lambda,
            renormalized,
        }
    }

    /// The image of the cyclic vector u ⊗ v under the renormalized map,
    /// in the codomain basis.
    pub fn renormalized_cyclic_image(&self) -> Vec<Rat> {
        self.renormalized[self.dom.unit_index()].clone()
    }

    /// Degree shift observed on the nonzero entries of r:
    /// deg_dom(j) - deg_cod(i), constant when r is homogeneous.
    pub fn observed_shift(&self) -> Option<i64> {
        let mut shift = None;
        for (j, col) in self.renormalized.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    let d = self.dom.degree(j) - self.cod.degree(i);
                    match shift {
                        None => shift = Some(d),
                        Some(s) if s == d => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        shift
    }
}

/// Graded dimensions of kernel, image, and cokernel of the renormalized map.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionReport {
    pub left: Segment,
    pub right: Segment,
    pub s: i64,
    pub lambda: i64,
    pub dim_dom: usize,
    pub dim_cod: usize,
    /// deg_dom - deg_cod on the support of r (None if not homogeneous).
    pub degree_shift: Option<i64>,
    pub gdim_dom: LaurentQ,
    pub gdim_cod: LaurentQ,
    /// Graded in domain degrees.
    pub ker_gdim: LaurentQ,
    /// Graded in codomain degrees.
    pub im_gdim: LaurentQ,
    pub coker_gdim: LaurentQ,
    pub is_isomorphism: bool,
}

impl CompositionReport {
    pub fn compute(left: Segment, right: Segment, policy: WordPolicy) -> Self {
        let r = RMatrixPair::compute(left, right, policy);
        let shift = r.observed_shift();
        // group domain columns by degree and take ranks per block
        let mut degrees: Vec<i64> = (0..r.dom.dim()).map(|b| r.dom.degree(b)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut ker = LaurentQ::zero();
        let mut im = LaurentQ::zero();
        for d in degrees {
            let cols: Vec<Vec<Rat>> = (0..r.dom.dim())
                .filter(|&b| r.dom.degree(b) == d)
                .map(|b| r.renormalized[b].clone())
                .collect();
            let rk = rank_rat(&cols) as i64;
            let kd = cols.len() as i64 - rk;
            if kd != 0 {
                ker = ker.add(&LaurentQ::term(rat(kd), d));
            }
            if rk != 0 {
                // image of degree-d columns sits in codomain degree d - shift
                let cod_deg = d - shift.unwrap_or(0);
                im = im.add(&LaurentQ::term(rat(rk), cod_deg));
            }
        }
        let gdim_dom = r.dom.graded_dim();
        let gdim_cod = r.cod.graded_dim();
        let coker = gdim_cod.sub(&im);
        let is_isomorphism = ker.is_zero() && coker.is_zero();
        CompositionReport {
            left,
            right,
            s: r.s,
            lambda: r.lambda,
            dim_dom: r.dom.dim(),
            dim_cod: r.cod.dim(),
            degree_shift: shift,
            gdim_dom,
            gdim_cod,
            ker_gdim: ker,
            im_gdim: im,
            coker_gdim: coker,
            is_isomorphism,
        }
    }
}

/// Renormalized r computed under both canonical-word policies agrees as a
/// linear map (compared through the change of basis between the two
/// canonical bases).
pub fn word_choice_independent(left: Segment, right: Segment) -> bool {
    let rmin = RMatrixPair::compute(left, right, WordPolicy::MinDescent);
    let rmax = RMatrixPair::compute(left, right, WordPolicy::MaxDescent);
    let zero = <Rat as Coeff>::zero();
    let dom_min: ShuffleModule<Rat> = ShuffleModule::new(
        &[left, right],
        vec![zero.clone(), zero.clone()],
        WordPolicy::MinDescent,
    );
    let cod_min: ShuffleModule<Rat> = ShuffleModule::new(
        &[right, left],
        vec![zero.clone(), zero.clone()],
        WordPolicy::MinDescent,
    );
    // columns: the max-policy basis vectors expanded in the min-policy basis
    let t_dom: Cols<Rat> = (0..rmax.dom.dim())
        .map(|b| dom_min.ev_word(rmax.dom.word(b)))
        .collect();
    let t_cod: Cols<Rat> = (0..rmax.cod.dim())
        .map(|b| cod_min.ev_word(rmax.cod.word(b)))
        .collect();
    mat_mul_rat(&rmin.renormalized, &t_dom) == mat_mul_rat(&t_cod, &rmax.renormalized)
}

/// One renormalized r applied on two adjacent factors inside a triple
/// convolution: the image of the cyclic vector, lifted by shifting the
/// internal words, determines the whole map.
fn lifted_map(
    dom: &ShuffleModule<Rat>,
    cod: &ShuffleModule<Rat>,
    pair: &RMatrixPair,
    pair_cod_basis: &ShuffleModule<Rat>,
    offset: usize,
) -> Cols<Rat> {
    let img = pair.renormalized_cyclic_image();
    let mut xi = cod.zero_vec();
    for (b, c) in img.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let word: Vec<usize> = pair_cod_basis.word(b).iter().map(|&k| k + offset).collect();
        let v = cod.ev_word(&word);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                xi[i] = (&xi[i]) + &(x * c);
            }
        }
    }
    (0..dom.dim()).map(|b| cod.apply_word(dom.word(b), &xi)).collect()
}

/// Both hexagon composites of renormalized r-matrices from
/// M1∘M2∘M3 to M3∘M2∘M1; returns the pair of composite matrices.
pub fn hexagon_composites(
    s1: Segment,
    s2: Segment,
    s3: Segment,
    policy: WordPolicy,
) -> (Cols<Rat>, Cols<Rat>) {
    let zero = <Rat as Coeff>::zero();
    let triple = |a: Segment, b: Segment, c: Segment| -> ShuffleModule<Rat> {
        ShuffleModule::new(&[a, b, c], vec![zero.clone(); 3], policy)
    };
    let pair_basis = |a: Segment, b: Segment| -> ShuffleModule<Rat> {
        ShuffleModule::new(&[a, b], vec![zero.clone(); 2], policy)
    };
    let r12 = RMatrixPair::compute(s1, s2, policy);
    let r13 = RMatrixPair::compute(s1, s3, policy);
    let r23 = RMatrixPair::compute(s2, s3, policy);
    let n1 = s1.len() as usize;
    let n2 = s2.len() as usize;
    let n3 = s3.len() as usize;

    let t123 = triple(s1, s2, s3);
    let t213 = triple(s2, s1, s3);
    let t231 = triple(s2, s3, s1);
    let t321 = triple(s3, s2, s1);
    let t132 = triple(s1, s3, s2);
    let t312 = triple(s3, s1, s2);

    // path A: r12 on the left pair, r13 on the right pair, r23 on the left
    let f1 = lifted_map(&t123, &t213, &r12, &pair_basis(s2, s1), 0);
    let f2 = lifted_map(&t213, &t231, &r13, &pair_basis(s3, s1), n2);
    let f3 = lifted_map(&t231, &t321, &r23, &pair_basis(s3, s2), 0);
    let path_a = mat_mul_rat(&f3, &mat_mul_rat(&f2, &f1));
    // path B: r23 on the right pair, r13 on the left pair, r12 on the right
    let g1 = lifted_map(&t123, &t132, &r23, &pair_basis(s3, s2), n1);
    let g2 = lifted_map(&t132, &t312, &r13, &pair_basis(s3, s1), 0);
    let g3 = lifted_map(&t312, &t321, &r12, &pair_basis(s2, s1), n3);
    let path_b = mat_mul_rat(&g3, &mat_mul_rat(&g2, &g1));
    (path_a, path_b)
}

/// Yang–Baxter check: the two hexagon composites coincide.
pub fn yang_baxter_holds(s1: Segment, s2: Segment, s3: Segment, policy: WordPolicy) -> bool {
    let (a, b) = hexagon_composites(s1, s2, s3, policy);
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: i64, b: i64) -> Segment {
        Segment::new(a, b)
    }

    fn identity_cols(n: usize) -> Cols<Rat> {
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { <Rat as Coeff>::one() } else { <Rat as Coeff>::zero() })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn zero_order_examples() {
        // equal one-box segments: R already nonzero at t = 0
        let r = RMatrixPair::compute(seg(2, 2), seg(2, 2), WordPolicy::MinDescent);
        assert_eq!(r.s, 0);
        // equal two-box segments: simple pole structure gives s = 1
        let r = RMatrixPair::compute(seg(0, 1), seg(0, 1), WordPolicy::MinDescent);
        assert_eq!(r.s, 1);
    }

    #[test]
    fn equal_segments_renormalize_to_identity() {
        for s in [seg(0, 0), seg(0, 1), seg(1, 3)] {
            let r = RMatrixPair::compute(s, s, WordPolicy::MinDescent);
            assert_eq!(r.renormalized, identity_cols(r.dom.dim()), "segment {s}");
            assert_eq!(r.lambda, 0);
        }
    }

    #[test]
    fn unlinked_pair_is_isomorphism() {
        // b' < a - 1: widely separated residues
        let rep = CompositionReport::compute(seg(4, 5), seg(0, 1), WordPolicy::MinDescent);
        assert!(rep.is_isomorphism);
        assert_eq!(rep.s, 0);
    }

    #[test]
    fn linked_pair_kernel_matches_exchanged_product() {
        // a' < a <= b' < b: (2,3) against (1,2)
        let rep = CompositionReport::compute(seg(2, 3), seg(1, 2), WordPolicy::MinDescent);
        assert!(!rep.is_isomorphism);
        let aux: ShuffleModule<Rat> = ShuffleModule::new(
            &[seg(1, 3), seg(2, 2)],
            vec![<Rat as Coeff>::zero(); 2],
            WordPolicy::MinDescent,
        );
        let aux_g = aux.graded_dim();
        // kernel and cokernel are shifts of L(a',b)∘L(a,b'); see the exact
        // sequence tests in the integration suite for the precise shifts
        let ker_total: i64 = count(&rep.ker_gdim);
        let coker_total: i64 = count(&rep.coker_gdim);
        assert_eq!(ker_total, count(&aux_g));
        assert_eq!(coker_total, count(&aux_g));
        // graded match up to a uniform shift
        assert!(uniform_shift(&rep.ker_gdim, &aux_g).is_some());
        assert!(uniform_shift(&rep.coker_gdim, &aux_g).is_some());
    }

    fn count(g: &LaurentQ) -> i64 {
        g.terms().map(|(_, c)| c.numer().clone()).sum::<num_bigint::BigInt>()
            .try_into()
            .unwrap()
    }

    fn uniform_shift(a: &LaurentQ, b: &LaurentQ) -> Option<i64> {
        let (la, lb) = (a.min_exp()?, b.min_exp()?);
        let d = la - lb;
        let shifted = LaurentQ::from_terms(b.terms().map(|(p, c)| (p + d, c.clone())));
        (&shifted == a).then_some(d)
    }

    #[test]
    fn r_is_homogeneous() {
        for (l, r) in [
            (seg(0, 1), seg(0, 1)),
            (seg(2, 3), seg(1, 2)),
            (seg(1, 2), seg(2, 3)),
            (seg(0, 2), seg(1, 1)),
        ] {
            let m = RMatrixPair::compute(l, r, WordPolicy::MinDescent);
            assert!(m.observed_shift().is_some(), "({l},{r}) not homogeneous");
        }
    }

    #[test]
    fn yang_baxter_small() {
        assert!(yang_baxter_holds(
            seg(0, 0),
            seg(1, 1),
            seg(2, 2),
            WordPolicy::MinDescent
        ));
        assert!(yang_baxter_holds(
            seg(0, 1),
            seg(1, 1),
            seg(0, 0),
            WordPolicy::MinDescent
        ));
    }

    #[test]
    fn word_policy_agreement() {
        for (l, r) in [(seg(0, 1), seg(1, 2)), (seg(0, 1), seg(0, 1)), (seg(2, 3), seg(1, 2))] {
            assert!(word_choice_independent(l, r), "({l},{r})");
        }
    }
}
