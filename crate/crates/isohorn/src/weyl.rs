//! Signed permutations: Weyl groups of types B and C.
//!
//! An element of rank `n` is stored as its window `(a_1, ..., a_n)` with
//! values in `1..=2n`; a value `a > n` stands for the barred letter
//! `-(2n + 1 - a)`. Simple reflections: `s_i` swaps positions `i, i+1`
//! for `i < n`, and `s_n` bars the last entry.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BcType {
    B,
    C,
}

impl fmt::Display for BcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BcType::B => write!(f, "B"),
            BcType::C => write!(f, "C"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    ty: BcType,
    window: Vec<usize>,
}

impl SignedPerm {
    pub fn from_window(ty: BcType, window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; 2 * n + 1];
        for &a in &window {
            if a == 0 || a > 2 * n {
                return Err(Error::InvalidIndex(format!("window entry {a} outside 1..={}", 2 * n)));
            }
            let b = 2 * n + 1 - a;
            if seen[a] || seen[b] {
                return Err(Error::InvalidIndex(format!("window {window:?} repeats a letter up to sign")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        Ok(SignedPerm { ty, window })
    }

    pub fn identity(ty: BcType, n: usize) -> Self {
        SignedPerm { ty, window: (1..=n).collect() }
    }

    /// The element sending every letter to its negative.
    pub fn longest(ty: BcType, n: usize) -> Self {
        SignedPerm { ty, window: (1..=n).map(|i| 2 * n + 1 - i).collect() }
    }

    /// Longest element of the parabolic subgroup generated by `s_i`, `i != r`.
    pub fn longest_parabolic(ty: BcType, n: usize, r: usize) -> Self {
        let mut w: Vec<usize> = (1..=r).rev().collect();
        w.extend((r + 1..=n).map(|i| 2 * n + 1 - i));
        SignedPerm { ty, window: w }
    }

    pub fn ty(&self) -> BcType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn with_type(&self, ty: BcType) -> Self {
        SignedPerm { ty, window: self.window.clone() }
    }

    /// Image of `i` as a signed integer in `±1..=±n`.
    pub fn signed(&self, i: usize) -> i64 {
        let n = self.rank();
        let a = self.window[i - 1];
        if a <= n {
            a as i64
        } else {
            -((2 * n + 1 - a) as i64)
        }
    }

    fn from_signed(ty: BcType, s: &[i64]) -> Self {
        let n = s.len();
        let window = s
            .iter()
            .map(|&v| if v > 0 { v as usize } else { 2 * n + 1 - (-v) as usize })
            .collect();
        SignedPerm { ty, window }
    }

    /// One-line notation in the symmetric group on `2n` letters.
    pub fn embed_even(&self) -> Vec<usize> {
        let n = self.rank();
        let mut full = vec![0; 2 * n];
        for i in 0..n {
            full[i] = self.window[i];
            full[2 * n - 1 - i] = 2 * n + 1 - self.window[i];
        }
        full
    }

    /// One-line notation in the symmetric group on `2n + 1` letters, fixing `n + 1`.
    pub fn embed_odd(&self) -> Vec<usize> {
        let n = self.rank();
        let mut out = Vec::with_capacity(2 * n + 1);
        for (pos, a) in self.embed_even().into_iter().enumerate() {
            if pos == n {
                out.push(n + 1);
            }
            out.push(if a > n { a + 1 } else { a });
        }
        out
    }

    /// Embedding matching the type: `2n` letters for C, `2n + 1` for B.
    pub fn embed(&self) -> Vec<usize> {
        match self.ty {
            BcType::C => self.embed_even(),
            BcType::B => self.embed_odd(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let s: Vec<i64> = (1..=self.rank())
            .map(|i| {
                let v = other.signed(i);
                let w = self.signed(v.unsigned_abs() as usize);
                if v > 0 {
                    w
                } else {
                    -w
                }
            })
            .collect();
        SignedPerm::from_signed(self.ty, &s)
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut s = vec![0i64; n];
        for i in 1..=n {
            let v = self.signed(i);
            s[v.unsigned_abs() as usize - 1] = if v > 0 { i as i64 } else { -(i as i64) };
        }
        SignedPerm::from_signed(self.ty, &s)
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank();
        if i < n {
            self.window[i - 1] > self.window[i]
        } else {
            self.window[n - 1] > n
        }
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// `self * s_i`.
    pub fn mul_simple(&self, i: usize) -> SignedPerm {
        let n = self.rank();
        let mut w = self.window.clone();
        if i < n {
            w.swap(i - 1, i);
        } else {
            w[n - 1] = 2 * n + 1 - w[n - 1];
        }
        SignedPerm { ty: self.ty, window: w }
    }

    /// `s_i * self`.
    pub fn simple_mul(&self, i: usize) -> SignedPerm {
        SignedPerm::simple(self.ty, self.rank(), i).compose(self)
    }

    pub fn simple(ty: BcType, n: usize, i: usize) -> SignedPerm {
        SignedPerm::identity(ty, n).mul_simple(i)
    }

    pub fn from_word(ty: BcType, n: usize, word: &[usize]) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(ty, n), |w, &i| w.mul_simple(i))
    }

    /// A reduced word `(i_1, ..., i_k)` with `self = s_{i_1} ... s_{i_k}`,
    /// found by stripping right descents greedily.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..=n {
                if w.has_right_descent(i) {
                    w = w.mul_simple(i);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// Number of barred entries in the window.
    pub fn negatives(&self) -> usize {
        let n = self.rank();
        self.window.iter().filter(|&&a| a > n).count()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &a)| a == i + 1)
    }

    /// True when no right descent lies in the parabolic subgroup of node `r`.
    pub fn is_min_coset_rep(&self, r: usize) -> bool {
        (1..=self.rank()).filter(|&i| i != r).all(|i| !self.has_right_descent(i))
    }

    /// Action on a vector of epsilon coordinates: `w(ε_i) = ±ε_{|w(i)|}`.
    pub fn act<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for i in 1..=self.rank() {
            let v = self.signed(i);
            let j = v.unsigned_abs() as usize - 1;
            out[j] = if v > 0 { x[i - 1].clone() } else { -x[i - 1].clone() };
        }
        out
    }

    /// All `2^n n!` elements, in lexicographic window order.
    pub fn all(ty: BcType, n: usize) -> Vec<SignedPerm> {
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for a in 1..=2 * n {
                let k = a.min(2 * n + 1 - a);
                if used[k] {
                    continue;
                }
                used[k] = true;
                cur.push(a);
                rec(n, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out.into_iter().map(|window| SignedPerm { ty, window }).collect()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.ty)?;
        for i in 1..=self.rank() {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.signed(i))?;
        }
        write!(f, ")")
    }
}

/// Inversion count of a one-line permutation.
pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::Cap(format!("rank {n} outside 1..={MAX_RANK}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(SignedPerm::all(BcType::C, 1).len(), 2);
        assert_eq!(SignedPerm::all(BcType::C, 2).len(), 8);
        assert_eq!(SignedPerm::all(BcType::C, 3).len(), 48);
    }

    #[test]
    fn embedding_symmetry() {
        for w in SignedPerm::all(BcType::C, 3) {
            let e = w.embed_even();
            for i in 1..=6 {
                assert_eq!(e[6 - i], 7 - e[i - 1]);
            }
            let o = w.with_type(BcType::B).embed_odd();
            assert_eq!(o[3], 4);
            for i in 1..=7 {
                assert_eq!(o[7 - i], 8 - o[i - 1]);
            }
        }
    }

    #[test]
    fn simple_reflections_embed_as_transposition_pairs() {
        let n = 3;
        for i in 1..n {
            let e = SignedPerm::simple(BcType::C, n, i).embed_even();
            let mut expect: Vec<usize> = (1..=2 * n).collect();
            expect.swap(i - 1, i);
            expect.swap(2 * n - i - 1, 2 * n - i);
            assert_eq!(e, expect);
        }
        let e = SignedPerm::simple(BcType::C, n, n).embed_even();
        let mut expect: Vec<usize> = (1..=2 * n).collect();
        expect.swap(n - 1, n);
        assert_eq!(e, expect);
        let o = SignedPerm::simple(BcType::B, n, n).embed_odd();
        let mut expect: Vec<usize> = (1..=2 * n + 1).collect();
        expect.swap(n - 1, n + 1);
        assert_eq!(o, expect);
    }

    #[test]
    fn reduced_words_rebuild_the_element() {
        for w in SignedPerm::all(BcType::C, 3) {
            let word = w.reduced_word();
            assert_eq!(SignedPerm::from_word(BcType::C, 3, &word), w);
        }
    }

    #[test]
    fn length_matches_breadth_first_distance() {
        use std::collections::HashMap;
        let n = 3;
        let mut dist = HashMap::new();
        let e = SignedPerm::identity(BcType::C, n);
        dist.insert(e.clone(), 0usize);
        let mut frontier = vec![e];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                let d = dist[&w];
                for i in 1..=n {
                    let v = w.mul_simple(i);
                    if !dist.contains_key(&v) {
                        dist.insert(v.clone(), d + 1);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        for (w, d) in dist {
            assert_eq!(w.length(), d, "{w}");
        }
        assert_eq!(SignedPerm::longest(BcType::C, n).length(), 9);
    }

    #[test]
    fn inverse_and_compose() {
        for u in SignedPerm::all(BcType::C, 2) {
            assert!(u.compose(&u.inverse()).is_identity());
            for v in SignedPerm::all(BcType::C, 2) {
                let uv = u.compose(&v);
                let x = [5i64, 3];
                assert_eq!(uv.act(&x), u.act(&v.act(&x)));
            }
        }
    }

    #[test]
    fn parabolic_longest_has_all_parabolic_descents() {
        for r in 1..=3 {
            let w = SignedPerm::longest_parabolic(BcType::C, 3, r);
            for i in 1..=3 {
                assert_eq!(w.has_right_descent(i), i != r, "r={r} i={i}");
            }
        }
    }
}
