//! Index sets of Schubert cells in ordinary, symplectic and odd orthogonal
//! Grassmannians, and the numbers attached to them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weyl::{BcType, SignedPerm};

/// `|A > B|`: pairs `(a, b)` with `a > b`.
pub fn dominance_count(a: &[usize], b: &[usize]) -> usize {
    a.iter().map(|&x| b.iter().filter(|&&y| x > y).count()).sum()
}

/// `|A >= B|`: pairs `(a, b)` with `a >= b`.
pub fn dominance_count_ge(a: &[usize], b: &[usize]) -> usize {
    a.iter().map(|&x| b.iter().filter(|&&y| x >= y).count()).sum()
}

fn check_increasing(elems: &[usize], ambient: usize) -> Result<()> {
    if elems.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndex(format!("{elems:?} is not strictly increasing")));
    }
    if elems.iter().any(|&a| a == 0 || a > ambient) {
        return Err(Error::InvalidIndex(format!("{elems:?} leaves 1..={ambient}")));
    }
    Ok(())
}

fn fmt_set(f: &mut fmt::Formatter<'_>, elems: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, a) in elems.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    write!(f, "]")
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=n {
            if n - a + 1 < k - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cell of the Grassmannian of `m`-planes in an `N`-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AIndex {
    elems: Vec<usize>,
    ambient: usize,
}

impl AIndex {
    pub fn new(elems: Vec<usize>, ambient: usize) -> Result<Self> {
        check_increasing(&elems, ambient)?;
        Ok(AIndex { elems, ambient })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn grassmannian_dim(m: usize, ambient: usize) -> usize {
        m * (ambient - m)
    }

    pub fn dim(&self) -> usize {
        self.elems.iter().enumerate().map(|(i, &a)| a - i - 1).sum()
    }

    pub fn codim(&self) -> usize {
        Self::grassmannian_dim(self.len(), self.ambient) - self.dim()
    }

    pub fn point(m: usize, ambient: usize) -> Self {
        AIndex { elems: (1..=m).collect(), ambient }
    }

    pub fn top(m: usize, ambient: usize) -> Self {
        AIndex { elems: (ambient - m + 1..=ambient).collect(), ambient }
    }

    pub fn all(m: usize, ambient: usize) -> Vec<AIndex> {
        subsets(ambient, m).into_iter().map(|elems| AIndex { elems, ambient }).collect()
    }

    /// One-line permutation `(a_1, ..., a_m, complement ascending)`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut p = self.elems.clone();
        p.extend((1..=self.ambient).filter(|x| !self.elems.contains(x)));
        p
    }

    /// Codimension partition: `mu_a = N - m + a - a_a`.
    pub fn to_partition(&self) -> Partition {
        let (m, n) = (self.len(), self.ambient);
        Partition::new(self.elems.iter().enumerate().map(|(i, &a)| n - m + i + 1 - a).collect())
            .expect("codimension partition is decreasing")
    }

    pub fn from_partition(mu: &Partition, m: usize, ambient: usize) -> Result<Self> {
        if m > ambient {
            return Err(Error::InvalidPartition(format!("{m} rows exceed ambient {ambient}")));
        }
        let mu = mu.with_len(m)?;
        if mu.width() > ambient - m {
            return Err(Error::InvalidPartition(format!("{mu} does not fit in a {m}x{} box", ambient - m)));
        }
        let elems = (0..m).map(|i| ambient - m + i + 1 - mu.get(i)).collect();
        AIndex::new(elems, ambient)
    }
}

impl fmt::Display for AIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_set(f, &self.elems)
    }
}

/// Numbers attached to an isotropic cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub mu: usize,
    pub sym2: usize,
    pub wedge2: usize,
    pub cosym2: usize,
    pub cowedge2: usize,
    pub dim: usize,
    pub codim: usize,
}

impl CellStats {
    pub fn mubar(&self, r: usize) -> usize {
        r - self.mu
    }
}

/// Dimension of the isotropic Grassmannian of `r`-planes in a symplectic `2n`-space.
pub fn ig_dim(r: usize, n: usize) -> usize {
    r * (4 * n + 1 - 3 * r) / 2
}

/// Dimension of the isotropic Grassmannian of `r`-planes in an orthogonal `(2n+1)`-space.
pub fn og_dim(r: usize, n: usize) -> usize {
    r * r.saturating_sub(1) / 2 + r * (2 * n + 1 - 2 * r)
}

/// Cell of the Grassmannian of isotropic `r`-planes in a symplectic `2n`-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CIndex {
    elems: Vec<usize>,
    n: usize,
}

impl CIndex {
    pub fn new(elems: Vec<usize>, n: usize) -> Result<Self> {
        check_increasing(&elems, 2 * n)?;
        if elems.iter().any(|&i| elems.contains(&(2 * n + 1 - i))) {
            return Err(Error::InvalidIndex(format!("{elems:?} meets its mirror in 1..={}", 2 * n)));
        }
        Ok(CIndex { elems, n })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn r(&self) -> usize {
        self.elems.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_aindex(&self) -> AIndex {
        AIndex { elems: self.elems.clone(), ambient: 2 * self.n }
    }

    /// `{2n + 1 - i}` sorted.
    pub fn bar(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.elems.iter().map(|&i| 2 * self.n + 1 - i).collect();
        b.sort_unstable();
        b
    }

    /// The rest of `1..=2n`.
    pub fn tilde(&self) -> Vec<usize> {
        let bar = self.bar();
        (1..=2 * self.n).filter(|x| !self.elems.contains(x) && !bar.contains(x)).collect()
    }

    pub fn complements(&self) -> (Vec<usize>, Vec<usize>) {
        (self.bar(), self.tilde())
    }

    pub fn cell_stats(&self) -> CellStats {
        let (r, n) = (self.r(), self.n);
        let mu = self.elems.iter().filter(|&&i| i > n).count();
        let cross = dominance_count(&self.elems, &self.bar());
        let sym2 = (cross + mu) / 2;
        let wedge2 = cross - sym2;
        let dim = dominance_count(&self.elems, &self.tilde()) + sym2;
        CellStats {
            mu,
            sym2,
            wedge2,
            cosym2: r * (r + 1) / 2 - sym2,
            cowedge2: r * r.saturating_sub(1) / 2 - wedge2,
            dim,
            codim: ig_dim(r, n) - dim,
        }
    }

    /// Minimal coset representative: window `(i_1, ..., i_r, tilde ∩ [n] ascending)`.
    pub fn weyl_element(&self) -> SignedPerm {
        let mut w = self.elems.clone();
        w.extend(self.tilde().into_iter().filter(|&x| x <= self.n));
        SignedPerm::from_window(BcType::C, w).expect("cell window is a signed permutation")
    }

    pub fn from_weyl(w: &SignedPerm, r: usize) -> Self {
        let mut elems = w.window()[..r].to_vec();
        elems.sort_unstable();
        CIndex { elems, n: w.rank() }
    }

    /// `t_a = |bar ≥ i_a|`.
    pub fn t_data(&self) -> Vec<usize> {
        let bar = self.bar();
        self.elems.iter().map(|&i| bar.iter().filter(|&&b| b >= i).count()).collect()
    }

    /// `lambda_a = |i_a ≥ tilde|`.
    pub fn lambda_data(&self) -> Vec<usize> {
        let tilde = self.tilde();
        self.elems.iter().map(|&i| tilde.iter().filter(|&&t| i >= t).count()).collect()
    }

    /// Order-preserving compression of the index and its mirror onto `1..=2r`.
    pub fn reindex_io(&self) -> CIndex {
        let mut support = self.elems.clone();
        support.extend(self.bar());
        support.sort_unstable();
        let elems = self
            .elems
            .iter()
            .map(|i| support.iter().position(|s| s == i).unwrap() + 1)
            .collect();
        CIndex { elems, n: self.r() }
    }

    pub fn all(r: usize, n: usize) -> Vec<CIndex> {
        subsets(2 * n, r)
            .into_iter()
            .filter(|s| s.iter().all(|&i| !s.contains(&(2 * n + 1 - i))))
            .map(|elems| CIndex { elems, n })
            .collect()
    }

    pub fn point(r: usize, n: usize) -> Self {
        CIndex { elems: (1..=r).collect(), n }
    }

    pub fn top(r: usize, n: usize) -> Self {
        CIndex { elems: (2 * n - r + 1..=2 * n).collect(), n }
    }
}

impl fmt::Display for CIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_set(f, &self.elems)
    }
}

/// Cell of the Grassmannian of isotropic `r`-planes in an orthogonal `(2n+1)`-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BIndex {
    elems: Vec<usize>,
    n: usize,
}

impl BIndex {
    pub fn new(elems: Vec<usize>, n: usize) -> Result<Self> {
        check_increasing(&elems, 2 * n + 1)?;
        if elems.contains(&(n + 1)) {
            return Err(Error::InvalidIndex(format!("{elems:?} contains the middle letter {}", n + 1)));
        }
        if elems.iter().any(|&j| elems.contains(&(2 * n + 2 - j))) {
            return Err(Error::InvalidIndex(format!("{elems:?} meets its mirror in 1..={}", 2 * n + 1)));
        }
        Ok(BIndex { elems, n })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn r(&self) -> usize {
        self.elems.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_aindex(&self) -> AIndex {
        AIndex { elems: self.elems.clone(), ambient: 2 * self.n + 1 }
    }

    /// `{2n + 2 - j}` sorted.
    pub fn bar(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.elems.iter().map(|&j| 2 * self.n + 2 - j).collect();
        b.sort_unstable();
        b
    }

    /// The rest of `1..=2n+1`; always contains `n + 1`.
    pub fn tilde(&self) -> Vec<usize> {
        let bar = self.bar();
        (1..=2 * self.n + 1).filter(|x| !self.elems.contains(x) && !bar.contains(x)).collect()
    }

    pub fn complements(&self) -> (Vec<usize>, Vec<usize>) {
        (self.bar(), self.tilde())
    }

    /// The same pattern read in `1..=2n` (letters above the middle shift down).
    pub fn c_pattern(&self) -> CIndex {
        let n = self.n;
        CIndex { elems: self.elems.iter().map(|&j| if j > n + 1 { j - 1 } else { j }).collect(), n }
    }

    pub fn from_c_pattern(i: &CIndex) -> Self {
        let n = i.n();
        BIndex { elems: i.elements().iter().map(|&a| if a > n { a + 1 } else { a }).collect(), n }
    }

    pub fn cell_stats(&self) -> CellStats {
        let (r, n) = (self.r(), self.n);
        let mu = self.elems.iter().filter(|&&j| j > n + 1).count();
        let cross = dominance_count(&self.elems, &self.bar());
        let sym2 = (cross + mu) / 2;
        let wedge2 = (cross - mu) / 2;
        let dim = dominance_count(&self.elems, &self.tilde()) + wedge2;
        CellStats {
            mu,
            sym2,
            wedge2,
            cosym2: r * (r + 1) / 2 - sym2,
            cowedge2: r * r.saturating_sub(1) / 2 - wedge2,
            dim,
            codim: og_dim(r, n) - dim,
        }
    }

    pub fn weyl_element(&self) -> SignedPerm {
        self.c_pattern().weyl_element().with_type(BcType::B)
    }

    pub fn from_weyl(w: &SignedPerm, r: usize) -> Self {
        BIndex::from_c_pattern(&CIndex::from_weyl(w, r))
    }

    /// `t_a = |bar ≥ j_a|`.
    pub fn t_data(&self) -> Vec<usize> {
        let bar = self.bar();
        self.elems.iter().map(|&j| bar.iter().filter(|&&b| b >= j).count()).collect()
    }

    /// `lambda_a = |j_a ≥ tilde|`.
    pub fn lambda_data(&self) -> Vec<usize> {
        let tilde = self.tilde();
        self.elems.iter().map(|&j| tilde.iter().filter(|&&t| j >= t).count()).collect()
    }

    /// Drops the pair `{a, 2n+2-a}` with `a` the largest letter `≤ n` of the index
    /// and its mirror, then compresses onto `1..=2r-2`.
    pub fn reindex_jo(&self) -> CIndex {
        let r = self.r();
        let mut support = self.elems.clone();
        support.extend(self.bar());
        support.sort_unstable();
        let a = *support.iter().filter(|&&x| x <= self.n).max().expect("nonempty index");
        let b = 2 * self.n + 2 - a;
        support.retain(|&x| x != a && x != b);
        let elems = self
            .elems
            .iter()
            .filter(|&&j| j != a && j != b)
            .map(|j| support.iter().position(|s| s == j).unwrap() + 1)
            .collect();
        CIndex { elems, n: r.saturating_sub(1) }
    }

    pub fn all(r: usize, n: usize) -> Vec<BIndex> {
        CIndex::all(r, n).iter().map(BIndex::from_c_pattern).collect()
    }
}

impl fmt::Display for BIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_set(f, &self.elems)
    }
}

/// Sends `I ⊂ [2r]` (disjoint from its mirror, `|I ∩ [r]| ≡ r mod 2`) to
/// `I ∖ {r, r+1}` compressed onto `[2r-2]`.
pub fn og_triple_bijection(i: &CIndex) -> Result<CIndex> {
    let r = i.r();
    if i.n() != r || r == 0 {
        return Err(Error::InvalidIndex(format!("{i} is not a Lagrangian index")));
    }
    let low = i.elements().iter().filter(|&&x| x <= r).count();
    if (r - low) % 2 != 0 {
        return Err(Error::InvalidIndex(format!("{i} has the wrong parity for the component")));
    }
    let elems = i
        .elements()
        .iter()
        .filter(|&&x| x != r && x != r + 1)
        .map(|&x| if x > r + 1 { x - 2 } else { x })
        .collect();
    CIndex::new(elems, r - 1)
}

pub fn og_triple_bijection_inverse(k: &CIndex) -> CIndex {
    let r = k.r() + 1;
    let mut elems: Vec<usize> = k.elements().iter().map(|&x| if x >= r { x + 2 } else { x }).collect();
    let low = elems.iter().filter(|&&x| x < r).count();
    elems.push(if (r - low) % 2 == 1 { r } else { r + 1 });
    elems.sort_unstable();
    CIndex { elems, n: r }
}

/// Twice the half-sum of positive roots in epsilon coordinates.
pub fn rho2(ty: BcType, n: usize) -> Vec<i64> {
    match ty {
        BcType::C => (1..=n).rev().map(|i| 2 * i as i64).collect(),
        BcType::B => (1..=n).rev().map(|i| 2 * i as i64 - 1).collect(),
    }
}

/// Fundamental coweight of node `r` in epsilon-bar coordinates.
pub fn fundamental_coweight(ty: BcType, r: usize, n: usize) -> Vec<BigRational> {
    let half = BigRational::new(1.into(), 2.into());
    (1..=n)
        .map(|i| {
            if i > r {
                BigRational::zero()
            } else if ty == BcType::C && r == n {
                half.clone()
            } else {
                BigRational::from_integer(1.into())
            }
        })
        .collect()
}

fn pair(weight: &[BigRational], coweight: &[BigRational]) -> BigRational {
    weight.iter().zip(coweight).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
}

/// `rho + w^{-1} rho` in epsilon coordinates.
pub fn chi(w: &SignedPerm) -> Vec<BigRational> {
    let r2 = rho2(w.ty(), w.rank());
    let moved = w.inverse().act(&r2);
    r2.iter()
        .zip(&moved)
        .map(|(a, b)| BigRational::new(BigInt::from(a + b), 2.into()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaValues {
    pub theta_c: BigRational,
    pub theta_b: BigRational,
    pub mubar: usize,
    pub mubar_context: usize,
}

/// Evaluates `theta` for both types at the fundamental coweight of node `r`,
/// and checks the relation between them.
pub fn theta_values(i: &CIndex, context: &[CIndex], r: usize, n: usize) -> Result<ThetaValues> {
    for j in std::iter::once(i).chain(context) {
        if j.r() != r || j.n() != n {
            return Err(Error::Mismatch(format!("{j} is not in FS({r},{})", 2 * n)));
        }
    }
    if r == 0 || r > n {
        return Err(Error::Mismatch(format!("node {r} outside 1..={n}")));
    }
    let theta = |ty: BcType| {
        let x = fundamental_coweight(ty, r, n);
        let mut t = pair(&chi(&i.weyl_element().with_type(ty)), &x);
        for j in context {
            t -= pair(&chi(&j.weyl_element().with_type(ty)), &x);
        }
        t
    };
    let theta_c = theta(BcType::C);
    let theta_b = theta(BcType::B);
    let mubar = r - i.cell_stats().mu;
    let mubar_context: usize = context.iter().map(|j| r - j.cell_stats().mu).sum();
    let lhs = if r < n { &theta_c - &theta_b } else { &theta_c * BigRational::from_integer(2.into()) - &theta_b };
    let rhs = BigRational::from_integer(BigInt::from(mubar as i64 - mubar_context as i64));
    if lhs != rhs {
        return Err(Error::Inconsistency(format!("theta relation fails for {i}: {lhs} != {rhs}")));
    }
    Ok(ThetaValues { theta_c, theta_b, mubar, mubar_context })
}

/// `(w_I^{-1} ε)(x_r)` with `ε = ε_1 + ... + ε_n` and `x_r = ε̄_1 + ... + ε̄_r`.
pub fn mu_function_value(i: &CIndex) -> i64 {
    let n = i.n();
    let moved = i.weyl_element().inverse().act(&vec![1i64; n]);
    moved[..i.r()].iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize], n: usize) -> CIndex {
        CIndex::new(v.to_vec(), n).unwrap()
    }

    fn b(v: &[usize], n: usize) -> BIndex {
        BIndex::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_count(&[2], &[1, 4]), 1);
        assert_eq!(dominance_count(&[1, 2, 3], &[]), 0);
        assert_eq!(dominance_count(&[3, 4], &[1, 2]), 4);
        assert_eq!(dominance_count_ge(&[2, 3], &[2]), 2);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(c(&[2], 2).complements(), (vec![3], vec![1, 4]));
        assert_eq!(c(&[1, 3], 2).complements(), (vec![2, 4], vec![]));
        assert_eq!(b(&[1, 4], 2).complements(), (vec![2, 5], vec![3]));
        assert!(CIndex::new(vec![1, 4], 2).is_err());
        assert!(BIndex::new(vec![3], 2).is_err());
        assert!(BIndex::new(vec![2, 4], 2).is_err());
    }

    #[test]
    fn cell_stats_examples() {
        let s = c(&[1, 2], 2).cell_stats();
        assert_eq!((s.dim, s.mu, s.sym2), (0, 0, 0));
        let s = c(&[2, 4], 2).cell_stats();
        assert_eq!((s.mu, s.sym2, s.wedge2, s.dim, s.codim), (1, 2, 1, 2, 1));
        assert_eq!(c(&[3, 4], 2).cell_stats().dim, ig_dim(2, 2));
        assert_eq!(ig_dim(2, 2), 3);
    }

    #[test]
    fn cell_stats_b_examples() {
        assert_eq!(b(&[1, 2], 2).cell_stats().dim, 0);
        assert_eq!(b(&[5], 2).cell_stats().dim, 3);
        assert_eq!(og_dim(1, 2), 3);
        assert_eq!(b(&[2], 2).cell_stats().dim, 1);
        assert_eq!(b(&[2], 2).weyl_element().length(), 1);
        assert_eq!(b(&[5], 2).weyl_element().length(), 3);
    }

    #[test]
    fn weyl_element_examples() {
        assert!(c(&[1, 2], 2).weyl_element().is_identity());
        assert_eq!(c(&[2, 4], 2).weyl_element().length(), 2);
        let w = c(&[3, 4], 2).weyl_element();
        assert_eq!(w.reduced_word().iter().filter(|&&i| i == 2).count(), 2);
    }

    #[test]
    fn partition_subset_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(AIndex::from_partition(&p(&[0, 0]), 2, 4).unwrap().elements(), &[3, 4]);
        assert_eq!(AIndex::from_partition(&p(&[2, 2]), 2, 4).unwrap().elements(), &[1, 2]);
        let a = AIndex::from_partition(&p(&[1, 0]), 2, 4).unwrap();
        assert_eq!(a.elements(), &[2, 4]);
        assert_eq!(a.to_partition(), p(&[1, 0]));
        assert!(AIndex::from_partition(&p(&[3]), 2, 4).is_err());
    }

    #[test]
    fn reindex_examples() {
        assert_eq!(c(&[2, 4], 2).reindex_io(), c(&[2, 4], 2));
        assert_eq!(c(&[1, 4], 3).reindex_io(), c(&[1, 3], 2));
        assert_eq!(c(&[2, 3], 3).reindex_io(), c(&[1, 2], 2));
    }

    #[test]
    fn og_bijection_examples() {
        assert_eq!(og_triple_bijection(&c(&[1, 2, 3], 3)).unwrap(), c(&[1, 2], 2));
        assert_eq!(og_triple_bijection(&c(&[2, 4, 6], 3)).unwrap(), c(&[2, 4], 2));
        assert!(og_triple_bijection(&c(&[1, 2, 4], 3)).is_err());
        for r in 1..=4 {
            for k in CIndex::all(r - 1, r - 1) {
                assert_eq!(og_triple_bijection(&og_triple_bijection_inverse(&k)).unwrap(), k);
            }
        }
    }

    #[test]
    fn theta_examples() {
        let i = c(&[2, 4], 2);
        let t = theta_values(&i, std::slice::from_ref(&i), 2, 2).unwrap();
        assert!(t.theta_c.is_zero() && t.theta_b.is_zero());
        assert_eq!(mu_function_value(&i), 0);
        let ctx = [c(&[2], 3), c(&[5], 3), c(&[6], 3)];
        theta_values(&c(&[3], 3), &ctx, 1, 3).unwrap();
    }

    #[test]
    fn grassmannian_counts() {
        assert_eq!(AIndex::all(2, 4).len(), 6);
        assert_eq!(CIndex::all(2, 2).len(), 4);
        assert_eq!(CIndex::all(1, 2).len(), 4);
        assert_eq!(BIndex::all(2, 3).len(), 12);
        assert_eq!(AIndex::top(2, 4).dim(), 4);
        assert_eq!(AIndex::point(2, 4).codim(), 4);
    }
}
