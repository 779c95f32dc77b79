//! Symmetric-group combinatorics: one-line permutations, reduced words,
//! canonical word policies, and minimal-length coset representatives for
//! block (parabolic) subgroups.

use std::collections::HashMap;

/// Permutation of {0,..,n-1} in one-line notation: `images[i] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

/// How to pick the canonical reduced word of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordPolicy {
    /// Greedy on the smallest left descent (lexicographically minimal word).
    MinDescent,
    /// Greedy on the largest left descent.
    MaxDescent,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(v < images.len() && !seen[v], "not a permutation");
            seen[v] = true;
        }
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Perm { images: inv }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// s_k ∘ self: swap the values k, k+1.
    pub fn left_mul_s(&self, k: usize) -> Self {
        let mut v = self.images.clone();
        for x in v.iter_mut() {
            if *x == k {
                *x = k + 1;
            } else if *x == k + 1 {
                *x = k;
            }
        }
        Perm { images: v }
    }

    /// self ∘ s_k: swap the entries at positions k, k+1.
    pub fn right_mul_s(&self, k: usize) -> Self {
        let mut v = self.images.clone();
        v.swap(k, k + 1);
        Perm { images: v }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// k is a left descent iff l(s_k w) < l(w) iff w^{-1}(k) > w^{-1}(k+1).
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.n().saturating_sub(1))
            .filter(|&k| inv.images[k] > inv.images[k + 1])
            .collect()
    }

    /// Canonical reduced word under the given policy: repeatedly strip the
    /// chosen left descent.
    pub fn canonical_word(&self, policy: WordPolicy) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::new();
        loop {
            let ds = w.left_descents();
            let Some(&d) = (match policy {
                WordPolicy::MinDescent => ds.first(),
                WordPolicy::MaxDescent => ds.last(),
            }) else {
                break;
            };
            out.push(d);
            w = w.left_mul_s(d);
        }
        out
    }

    /// The permutation of a word (product of the s_k left to right).
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Perm::identity(n);
        for &k in word.iter().rev() {
            w = w.left_mul_s(k);
        }
        w
    }

    /// Word is reduced iff its length equals the permutation length.
    pub fn word_is_reduced(n: usize, word: &[usize]) -> bool {
        Self::from_word(n, word).length() == word.len()
    }
}

/// Partition of {0,..,n-1} into consecutive blocks; the parabolic subgroup
/// is the product of the symmetric groups of the blocks.
#[derive(Clone, Debug)]
pub struct Blocks {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
}

impl Blocks {
    pub fn new(sizes: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut n = 0;
        for &s in &sizes {
            offsets.push(n);
            n += s;
        }
        Blocks { sizes, offsets, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Which block a position belongs to.
    pub fn block_of(&self, pos: usize) -> usize {
        assert!(pos < self.n);
        self.offsets
            .iter()
            .rposition(|&o| o <= pos)
            .expect("position in some block")
    }

    /// Generator s_k is internal iff k and k+1 are in the same block.
    pub fn is_internal(&self, k: usize) -> bool {
        self.block_of(k) == self.block_of(k + 1)
    }

    /// Minimal-length representatives of the cosets w·(S_{b_1}×…×S_{b_t}):
    /// permutations increasing within each block, in sorted order.
    pub fn min_coset_reps(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images = vec![0usize; self.n];
        self.shuffle_rec(0, &mut vec![false; self.n], &mut images, &mut out);
        out.sort();
        out
    }

    fn shuffle_rec(
        &self,
        pos: usize,
        used: &mut Vec<bool>,
        images: &mut Vec<usize>,
        out: &mut Vec<Perm>,
    ) {
        if pos == self.n {
            out.push(Perm::from_images(images.clone()));
            return;
        }
        let b = self.block_of(pos);
        let lower = if pos > self.offsets[b] {
            images[pos - 1] + 1
        } else {
            0
        };
        for v in lower..self.n {
            if !used[v] {
                used[v] = true;
                images[pos] = v;
                self.shuffle_rec(pos + 1, used, images, out);
                used[v] = false;
            }
        }
    }

    /// Factor p = w·π with w a minimal coset representative and π in the
    /// block subgroup.
    pub fn coset_factor(&self, p: &Perm) -> (Perm, Perm) {
        let mut pi = vec![0usize; self.n];
        for (b, &o) in self.offsets.iter().enumerate() {
            let s = self.sizes[b];
            let mut idx: Vec<usize> = (o..o + s).collect();
            idx.sort_by_key(|&i| p.apply(i));
            for (rank, &i) in idx.iter().enumerate() {
                pi[i] = o + rank;
            }
        }
        let pi = Perm::from_images(pi);
        let w = p.compose(&pi.inverse());
        (w, pi)
    }

    /// Canonical word of an internal permutation (concatenated canonical
    /// words of its block components — all letters internal).
    pub fn internal_word(&self, pi: &Perm, policy: WordPolicy) -> Vec<usize> {
        let word = pi.canonical_word(policy);
        for &k in &word {
            debug_assert!(self.is_internal(k), "internal permutation expected");
        }
        word
    }
}

/// Memoized canonical words for one (n, policy) context.
#[derive(Debug, Default)]
pub struct WordCache {
    map: HashMap<Perm, Vec<usize>>,
}

impl WordCache {
    pub fn get(&mut self, p: &Perm, policy: WordPolicy) -> Vec<usize> {
        if let Some(w) = self.map.get(p) {
            return w.clone();
        }
        let w = p.canonical_word(policy);
        self.map.insert(p.clone(), w.clone());
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        for images in [vec![2, 0, 1], vec![1, 0, 2], vec![2, 1, 0]] {
            let p = Perm::from_images(images);
            for policy in [WordPolicy::MinDescent, WordPolicy::MaxDescent] {
                let w = p.canonical_word(policy);
                assert_eq!(w.len(), p.length());
                assert_eq!(Perm::from_word(3, &w), p);
            }
        }
    }

    #[test]
    fn lex_min_word_for_longest_s3() {
        // s_0 s_1 s_0 = s_1 s_0 s_1: the min-descent policy picks (0,1,0)
        let p = Perm::from_images(vec![2, 1, 0]);
        assert_eq!(p.canonical_word(WordPolicy::MinDescent), vec![0, 1, 0]);
        assert_eq!(p.canonical_word(WordPolicy::MaxDescent), vec![1, 0, 1]);
    }

    #[test]
    fn coset_reps_and_factorization() {
        let blocks = Blocks::new(vec![2, 2]);
        let reps = blocks.min_coset_reps();
        assert_eq!(reps.len(), 6); // C(4,2)
        for r in &reps {
            assert!(r.apply(0) < r.apply(1) && r.apply(2) < r.apply(3));
        }
        // factorization is exact and length-additive on every element of S_4
        let mut all = Vec::new();
        perms_rec(4, &mut vec![], &mut all);
        for p in all {
            let (w, pi) = blocks.coset_factor(&p);
            assert_eq!(w.compose(&pi), p);
            assert!(reps.contains(&w));
            assert_eq!(w.length() + pi.length(), p.length());
        }
    }

    fn perms_rec(n: usize, acc: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if acc.len() == n {
            out.push(Perm::from_images(acc.clone()));
            return;
        }
        for v in 0..n {
            if !acc.contains(&v) {
                acc.push(v);
                perms_rec(n, acc, out);
                acc.pop();
            }
        }
    }

    #[test]
    fn block_membership() {
        let blocks = Blocks::new(vec![1, 3, 2]);
        assert_eq!(blocks.block_of(0), 0);
        assert_eq!(blocks.block_of(1), 1);
        assert_eq!(blocks.block_of(3), 1);
        assert_eq!(blocks.block_of(4), 2);
        assert!(!blocks.is_internal(0));
        assert!(blocks.is_internal(1));
        assert!(blocks.is_internal(2));
        assert!(!blocks.is_internal(3));
        assert!(blocks.is_internal(4));
    }
}
