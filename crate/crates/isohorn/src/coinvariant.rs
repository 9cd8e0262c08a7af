//! Divided differences on the coinvariant algebra of types B and C, Schubert
//! class representatives, and products in the cohomology of full and isotropic
//! flag varieties.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{chi, fundamental_coweight, ig_dim, og_dim, BIndex, CIndex};
pub use crate::index::{og_triple_bijection, og_triple_bijection_inverse};
use crate::partition::Partition;
use crate::poly::{int, MultiPoly};
use crate::schubert_a::{horn_inequality_check, sl_invariant_dim};
use crate::weyl::{check_rank, BcType, SignedPerm};

pub type CohomClassBC<K> = BTreeMap<K, BigInt>;

/// `(f - s_i f) / α_i`.
pub fn divided_difference(f: &MultiPoly, i: usize, ty: BcType) -> Result<MultiPoly> {
    if i == 0 || i > f.rank() {
        return Err(Error::Mismatch(format!("simple root {i} outside 1..={}", f.rank())));
    }
    Ok(f.divided_difference(i, ty))
}

/// `A_{i_1} ... A_{i_k} f` for the word `(i_1, ..., i_k)`.
pub fn apply_word(f: &MultiPoly, word: &[usize], ty: BcType) -> MultiPoly {
    word.iter().rev().fold(f.clone(), |g, &i| g.divided_difference(i, ty))
}

/// Representative of the point class.
pub fn top_representative(ty: BcType, n: usize) -> MultiPoly {
    let mut p = MultiPoly::one(n);
    for i in 1..=n {
        p = p.mul(&MultiPoly::var(n, i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let d = MultiPoly::var(n, i).pow(2).sub(&MultiPoly::var(n, j).pow(2));
            p = p.mul(&d);
        }
    }
    let order: i64 = (1..=n as i64).product::<i64>() << n;
    let mut scale = BigRational::new(1.into(), order.into());
    if ty == BcType::C {
        scale *= int(1 << n);
    }
    p.scale(&scale)
}

/// Schubert representatives `p_w = A_{w^{-1}} p_e` for every Weyl element.
#[derive(Debug)]
pub struct FlagRing {
    ty: BcType,
    n: usize,
    reps: HashMap<SignedPerm, MultiPoly>,
    longest: SignedPerm,
}

type FlagKey = (BcType, usize);

fn flag_cache() -> &'static Mutex<HashMap<FlagKey, Arc<FlagRing>>> {
    static CACHE: OnceLock<Mutex<HashMap<FlagKey, Arc<FlagRing>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FlagRing {
    fn build(ty: BcType, n: usize) -> FlagRing {
        let e = SignedPerm::identity(ty, n);
        let mut reps = HashMap::new();
        reps.insert(e.clone(), top_representative(ty, n));
        let mut frontier = vec![e];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                for i in 1..=n {
                    if w.has_right_descent(i) {
                        continue;
                    }
                    let v = w.mul_simple(i);
                    if !reps.contains_key(&v) {
                        let p = reps[&w].divided_difference(i, ty);
                        reps.insert(v.clone(), p);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        FlagRing { ty, n, reps, longest: SignedPerm::longest(ty, n) }
    }

    /// Shared, lazily built ring for `(ty, n)`.
    pub fn get(ty: BcType, n: usize) -> Result<Arc<FlagRing>> {
        check_rank(n)?;
        if let Some(hit) = flag_cache().lock().unwrap().get(&(ty, n)) {
            return Ok(hit.clone());
        }
        let ring = Arc::new(FlagRing::build(ty, n));
        flag_cache().lock().unwrap().entry((ty, n)).or_insert(ring.clone());
        Ok(ring)
    }

    pub fn ty(&self) -> BcType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn longest(&self) -> &SignedPerm {
        &self.longest
    }

    pub fn longest_length(&self) -> usize {
        self.n * self.n
    }

    pub fn rep(&self, w: &SignedPerm) -> &MultiPoly {
        &self.reps[&w.with_type(self.ty)]
    }

    pub fn elements(&self) -> impl Iterator<Item = &SignedPerm> {
        self.reps.keys()
    }

    /// `A_x f` along a reduced word of `x`.
    pub fn apply(&self, f: &MultiPoly, x: &SignedPerm) -> MultiPoly {
        apply_word(f, &x.reduced_word(), self.ty)
    }

    /// Coefficient of `p_w` in `f`, read off as the constant `A_{w0 w}(f)`.
    pub fn coefficient(&self, f: &MultiPoly, w: &SignedPerm) -> BigRational {
        let w = w.with_type(self.ty);
        let deg = self.longest_length() - w.length();
        let x = self.longest.compose(&w);
        self.apply(&f.homogeneous_part(deg), &x).constant_term()
    }

    /// Expansion of `f` in the Schubert basis.
    pub fn expand(&self, f: &MultiPoly) -> Result<CohomClassBC<SignedPerm>> {
        let mut out = BTreeMap::new();
        for w in self.reps.keys() {
            let c = self.coefficient(f, w);
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(Error::Inconsistency(format!("non-integral coefficient {c} at {w}")));
            }
            out.insert(w.clone(), c.to_integer());
        }
        Ok(out)
    }
}

/// Representative of the Schubert class indexed by `w`.
pub fn schubert_rep(w: &SignedPerm) -> Result<MultiPoly> {
    Ok(FlagRing::get(w.ty(), w.rank())?.rep(w).clone())
}

/// Checks `p^C_w = 2^{n - mu(w)} p^B_w` for every Weyl element.
pub fn grain_check(n: usize) -> Result<bool> {
    let b = FlagRing::get(BcType::B, n)?;
    let c = FlagRing::get(BcType::C, n)?;
    Ok(SignedPerm::all(BcType::C, n).iter().all(|w| {
        let k = n - w.negatives();
        c.rep(w) == &b.rep(w).scale(&int(1 << k))
    }))
}

/// `[Λ_u] [Λ_v] = Σ c^w_{u,v} [Λ_w]` in the cohomology of the full flag variety.
pub fn flag_structure_constants(u: &SignedPerm, v: &SignedPerm) -> Result<CohomClassBC<SignedPerm>> {
    if u.ty() != v.ty() || u.rank() != v.rank() {
        return Err(Error::Mismatch(format!("{u} and {v} lie in different groups")));
    }
    let ring = FlagRing::get(u.ty(), u.rank())?;
    let l = ring.longest_length();
    if u.length() + v.length() < l {
        return Ok(BTreeMap::new());
    }
    ring.expand(&ring.rep(u).mul(ring.rep(v)))
}

/// Cohomology of `G/P` for a maximal parabolic, with the basis indexed by
/// minimal coset representatives (in the order of `CIndex::all(r, n)`).
#[derive(Debug)]
pub struct ParabolicRing {
    ty: BcType,
    n: usize,
    r: usize,
    flag: Arc<FlagRing>,
    mins: Vec<SignedPerm>,
    codims: Vec<usize>,
    position: HashMap<SignedPerm, usize>,
    pairs: Mutex<HashMap<(usize, usize), Arc<Vec<(usize, BigInt)>>>>,
}

type ParabolicKey = (BcType, usize, usize);

fn parabolic_cache() -> &'static Mutex<HashMap<ParabolicKey, Arc<ParabolicRing>>> {
    static CACHE: OnceLock<Mutex<HashMap<ParabolicKey, Arc<ParabolicRing>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl ParabolicRing {
    pub fn get(ty: BcType, n: usize, r: usize) -> Result<Arc<ParabolicRing>> {
        check_rank(n)?;
        if r == 0 || r > n {
            return Err(Error::Mismatch(format!("node {r} outside 1..={n}")));
        }
        if let Some(hit) = parabolic_cache().lock().unwrap().get(&(ty, n, r)) {
            return Ok(hit.clone());
        }
        let flag = FlagRing::get(ty, n)?;
        let dim = ig_dim(r, n);
        let mins: Vec<SignedPerm> = CIndex::all(r, n).iter().map(|i| i.weyl_element().with_type(ty)).collect();
        let codims = mins.iter().map(|w| dim - w.length()).collect();
        let position = mins.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let ring = Arc::new(ParabolicRing {
            ty,
            n,
            r,
            flag,
            mins,
            codims,
            position,
            pairs: Mutex::new(HashMap::new()),
        });
        parabolic_cache().lock().unwrap().entry((ty, n, r)).or_insert(ring.clone());
        Ok(ring)
    }

    pub fn dim(&self) -> usize {
        ig_dim(self.r, self.n)
    }

    pub fn len(&self) -> usize {
        self.mins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mins.is_empty()
    }

    pub fn codim(&self, k: usize) -> usize {
        self.codims[k]
    }

    pub fn element(&self, k: usize) -> &SignedPerm {
        &self.mins[k]
    }

    pub fn position(&self, w: &SignedPerm) -> Option<usize> {
        self.position.get(&w.with_type(self.ty)).copied()
    }

    /// Position of the point class (identity coset).
    pub fn point(&self) -> usize {
        self.position(&SignedPerm::identity(self.ty, self.n)).unwrap()
    }

    fn lift(&self, k: usize) -> SignedPerm {
        self.mins[k].compose(&SignedPerm::longest_parabolic(self.ty, self.n, self.r))
    }

    /// Representative of the pulled-back class of basis element `k`.
    pub fn rep(&self, k: usize) -> MultiPoly {
        self.flag.rep(&self.lift(k)).clone()
    }

    /// Coefficient of basis element `k` in a pulled-back class `f`.
    pub fn coefficient(&self, f: &MultiPoly, k: usize) -> BigRational {
        self.flag.coefficient(f, &self.lift(k))
    }

    /// Product of two basis elements as sparse `(position, coefficient)` pairs.
    pub fn pair(&self, a: usize, b: usize) -> Result<Arc<Vec<(usize, BigInt)>>> {
        let key = (a.min(b), a.max(b));
        if let Some(hit) = self.pairs.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let deg = self.codims[a] + self.codims[b];
        let mut out = Vec::new();
        if deg <= self.dim() {
            let f = self.rep(a).mul(&self.rep(b));
            for k in 0..self.len() {
                if self.codims[k] != deg {
                    continue;
                }
                let c = self.coefficient(&f, k);
                if !c.is_integer() {
                    return Err(Error::Inconsistency(format!("non-integral structure constant {c}")));
                }
                if !c.is_zero() {
                    out.push((k, c.to_integer()));
                }
            }
        }
        let out = Arc::new(out);
        self.pairs.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Product of basis elements, as a dense coefficient vector.
    pub fn product(&self, factors: &[usize]) -> Result<Vec<BigInt>> {
        let mut acc = vec![BigInt::zero(); self.len()];
        let unit = (0..self.len()).find(|&k| self.codims[k] == 0).expect("fundamental class");
        acc[unit] = BigInt::one();
        let mut deg = 0;
        for &f in factors {
            deg += self.codims[f];
            if deg > self.dim() {
                return Ok(vec![BigInt::zero(); self.len()]);
            }
            let mut next = vec![BigInt::zero(); self.len()];
            for (k, c) in acc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (m, d) in self.pair(k, f)?.iter() {
                    next[*m] += c * d;
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn point_coefficient(&self, factors: &[usize]) -> Result<BigInt> {
        let total: usize = factors.iter().map(|&f| self.codims[f]).sum();
        if total != self.dim() {
            return Ok(BigInt::zero());
        }
        Ok(self.product(factors)?[self.point()].clone())
    }

    pub fn nonvanishing(&self, factors: &[usize]) -> Result<bool> {
        Ok(self.product(factors)?.iter().any(|c| !c.is_zero()))
    }
}

fn c_positions(indices: &[CIndex]) -> Result<(Arc<ParabolicRing>, Vec<usize>)> {
    let first = indices.first().ok_or_else(|| Error::Mismatch("empty index tuple".into()))?;
    let (r, n) = (first.r(), first.n());
    if indices.iter().any(|i| i.r() != r || i.n() != n) {
        return Err(Error::Mismatch("indices from different isotropic Grassmannians".into()));
    }
    let ring = ParabolicRing::get(BcType::C, n, r)?;
    let pos = indices.iter().map(|i| ring.position(&i.weyl_element()).unwrap()).collect();
    Ok((ring, pos))
}

fn b_positions(indices: &[BIndex]) -> Result<(Arc<ParabolicRing>, Vec<usize>)> {
    let first = indices.first().ok_or_else(|| Error::Mismatch("empty index tuple".into()))?;
    let (r, n) = (first.r(), first.n());
    if indices.iter().any(|i| i.r() != r || i.n() != n) {
        return Err(Error::Mismatch("indices from different orthogonal Grassmannians".into()));
    }
    let ring = ParabolicRing::get(BcType::B, n, r)?;
    let pos = indices.iter().map(|i| ring.position(&i.weyl_element()).unwrap()).collect();
    Ok((ring, pos))
}

/// Product of cell classes in the cohomology of `IG(r, 2n)`.
pub fn ig_product(indices: &[CIndex]) -> Result<CohomClassBC<CIndex>> {
    let (ring, pos) = c_positions(indices)?;
    let r = indices[0].r();
    Ok(ring
        .product(&pos)?
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (CIndex::from_weyl(ring.element(k), r), c))
        .collect())
}

pub fn ig_point_coefficient(indices: &[CIndex]) -> Result<BigInt> {
    let (ring, pos) = c_positions(indices)?;
    ring.point_coefficient(&pos)
}

pub fn ig_nonvanishing(indices: &[CIndex]) -> Result<bool> {
    let (ring, pos) = c_positions(indices)?;
    ring.nonvanishing(&pos)
}

/// Product of cell classes in the cohomology of `OG(r, 2n+1)`.
pub fn og_product(indices: &[BIndex]) -> Result<CohomClassBC<BIndex>> {
    let (ring, pos) = b_positions(indices)?;
    let r = indices[0].r();
    Ok(ring
        .product(&pos)?
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (BIndex::from_weyl(ring.element(k), r), c))
        .collect())
}

pub fn og_point_coefficient(indices: &[BIndex]) -> Result<BigInt> {
    let (ring, pos) = b_positions(indices)?;
    ring.point_coefficient(&pos)
}

pub fn og_nonvanishing(indices: &[BIndex]) -> Result<bool> {
    let (ring, pos) = b_positions(indices)?;
    ring.nonvanishing(&pos)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiEval {
    /// `(ρ + w^{-1}ρ)` at `ε̄_1 + ... + ε̄_r`.
    pub direct: BigRational,
    /// The same character at the fundamental coweight of node `r`.
    pub at_fundamental: BigRational,
    pub codim_sum: usize,
}

/// Compares `(ρ + w_I^{-1} ρ)(ε̄_1 + ... + ε̄_r)` with
/// `codim(I) + codim(I_o)`; errors if they differ.
pub fn chi_eval(i: &CIndex) -> Result<ChiEval> {
    let (r, n) = (i.r(), i.n());
    if r == 0 {
        return Err(Error::Mismatch("empty index".into()));
    }
    let c = chi(&i.weyl_element());
    let direct = c[..r].iter().fold(BigRational::zero(), |a, b| a + b);
    let at_fundamental = c
        .iter()
        .zip(fundamental_coweight(BcType::C, r, n))
        .fold(BigRational::zero(), |a, (x, y)| a + x * y);
    let codim_sum = i.cell_stats().codim + i.reindex_io().cell_stats().codim;
    if direct != BigRational::from_integer(codim_sum.into()) {
        return Err(Error::Inconsistency(format!("chi relation fails at {i}: {direct} != {codim_sum}")));
    }
    Ok(ChiEval { direct, at_fundamental, codim_sum })
}

fn check_c_tuple(indices: &[CIndex], r: usize, n: usize) -> Result<()> {
    if indices.is_empty() {
        return Err(Error::Mismatch("empty index tuple".into()));
    }
    for i in indices {
        if i.r() != r || i.n() != n {
            return Err(Error::Mismatch(format!("{i} is not in FS({r},{})", 2 * n)));
        }
    }
    Ok(())
}

fn check_b_tuple(indices: &[BIndex], r: usize, n: usize) -> Result<()> {
    if indices.is_empty() {
        return Err(Error::Mismatch("empty index tuple".into()));
    }
    for j in indices {
        if j.r() != r || j.n() != n {
            return Err(Error::Mismatch(format!("{j} is not in FS'({r},{})", 2 * n + 1)));
        }
    }
    Ok(())
}

fn require_complementary_c(indices: &[CIndex], r: usize, n: usize) -> Result<()> {
    let total: usize = indices.iter().map(|i| i.cell_stats().codim).sum();
    if total != ig_dim(r, n) {
        return Err(Error::Precondition(format!(
            "codimensions add to {total}, not dim IG({r},{}) = {}",
            2 * n,
            ig_dim(r, n)
        )));
    }
    Ok(())
}

fn require_complementary_b(indices: &[BIndex], r: usize, n: usize) -> Result<()> {
    let total: usize = indices.iter().map(|j| j.cell_stats().codim).sum();
    if total != og_dim(r, n) {
        return Err(Error::Precondition(format!(
            "codimensions add to {total}, not dim OG({r},{}) = {}",
            2 * n + 1,
            og_dim(r, n)
        )));
    }
    Ok(())
}

/// Nonvanishing of the deformed product in complementary degree: ordinary
/// nonvanishing together with `Σ cosym² = r(r+1)/2`.
pub fn deformed_nonvanishing(indices: &[CIndex], r: usize, n: usize) -> Result<bool> {
    check_c_tuple(indices, r, n)?;
    require_complementary_c(indices, r, n)?;
    let cosym: usize = indices.iter().map(|i| i.cell_stats().cosym2).sum();
    Ok(cosym == r * (r + 1) / 2 && !ig_point_coefficient(indices)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornRecord {
    pub alpha: bool,
    pub beta1: bool,
    pub beta2: bool,
    pub beta3: bool,
    /// Inequality form of the second condition, evaluated when `beta1` holds.
    pub beta2_inequalities: Option<bool>,
    /// The partitions fed to the second condition.
    pub mu: Vec<Partition>,
}

impl HornRecord {
    pub fn consistent(&self) -> bool {
        self.alpha == (self.beta1 && self.beta2 && self.beta3)
            && self.beta2_inequalities.is_none_or(|b| b == self.beta2)
    }
}

fn mu_data(lambda: &[usize], top: usize) -> Partition {
    Partition::new(lambda.iter().map(|&l| top - l).collect()).expect("lambda data is increasing")
}

/// Evaluates the deformed-product criterion for `IG(r, 2n)` and its three
/// conditions on smaller groups.
pub fn horn_c_check(indices: &[CIndex], r: usize, n: usize) -> Result<HornRecord> {
    check_c_tuple(indices, r, n)?;
    require_complementary_c(indices, r, n)?;
    let alpha = deformed_nonvanishing(indices, r, n)?;
    let cosym: usize = indices.iter().map(|i| i.cell_stats().cosym2).sum();
    let beta1 = cosym == r * (r + 1) / 2;
    let mu: Vec<Partition> = indices.iter().map(|i| mu_data(&i.lambda_data(), 2 * (n - r))).collect();
    let beta2 = !sl_invariant_dim(&mu, r)?.is_zero();
    let beta2_inequalities = if beta1 {
        Some(horn_inequality_check(&mu, 2 * (n - r), r, 1..=r)?.holds)
    } else {
        None
    };
    let reduced: Vec<CIndex> = indices.iter().map(|i| i.reindex_io()).collect();
    let beta3 = ig_nonvanishing(&reduced)?;
    Ok(HornRecord { alpha, beta1, beta2, beta3, beta2_inequalities, mu })
}

/// The orthogonal counterpart of [`horn_c_check`] on `OG(r, 2n+1)`.
pub fn horn_b_check(indices: &[BIndex], r: usize, n: usize) -> Result<HornRecord> {
    check_b_tuple(indices, r, n)?;
    require_complementary_b(indices, r, n)?;
    let cowedge: usize = indices.iter().map(|j| j.cell_stats().cowedge2).sum();
    let beta1 = cowedge == r * (r - 1) / 2;
    let alpha = beta1 && !og_point_coefficient(indices)?.is_zero();
    let mu: Vec<Partition> = indices.iter().map(|j| mu_data(&j.lambda_data(), 2 * n + 1 - 2 * r)).collect();
    let beta2 = !sl_invariant_dim(&mu, r)?.is_zero();
    let beta2_inequalities = if beta1 {
        Some(horn_inequality_check(&mu, 2 * n + 1 - 2 * r, r, 1..=r)?.holds)
    } else {
        None
    };
    let beta3 = if r == 1 {
        true
    } else {
        let reduced: Vec<CIndex> = indices.iter().map(|j| j.reindex_jo()).collect();
        ig_nonvanishing(&reduced)?
    };
    Ok(HornRecord { alpha, beta1, beta2, beta3, beta2_inequalities, mu })
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
    fn rank_one_representatives() {
        let e = SignedPerm::identity(BcType::B, 1);
        let s = SignedPerm::simple(BcType::B, 1, 1);
        let x = MultiPoly::var(1, 1);
        assert_eq!(schubert_rep(&e).unwrap(), x.scale(&BigRational::new(1.into(), 2.into())));
        assert_eq!(schubert_rep(&e.with_type(BcType::C)).unwrap(), x);
        assert_eq!(schubert_rep(&s).unwrap(), MultiPoly::one(1));
        assert_eq!(schubert_rep(&s.with_type(BcType::C)).unwrap(), MultiPoly::one(1));
    }

    #[test]
    fn longest_element_gives_one() {
        for n in 1..=3 {
            for ty in [BcType::B, BcType::C] {
                assert_eq!(schubert_rep(&SignedPerm::longest(ty, n)).unwrap(), MultiPoly::one(n));
            }
        }
    }

    #[test]
    fn degrees_follow_length() {
        for w in SignedPerm::all(BcType::C, 2) {
            let p = schubert_rep(&w).unwrap();
            assert!(p.is_homogeneous());
            assert_eq!(p.degree(), Some(4 - w.length()));
        }
    }

    #[test]
    fn grain_small_ranks() {
        assert!(grain_check(1).unwrap());
        assert!(grain_check(2).unwrap());
    }

    #[test]
    fn unit_and_overflow() {
        let w0 = SignedPerm::longest(BcType::C, 2);
        for u in SignedPerm::all(BcType::C, 2) {
            let prod = flag_structure_constants(&u, &w0).unwrap();
            assert_eq!(prod.into_iter().collect::<Vec<_>>(), vec![(u.clone(), BigInt::one())]);
        }
        let e = SignedPerm::identity(BcType::C, 2);
        assert!(flag_structure_constants(&e, &e).unwrap().is_empty());
    }

    #[test]
    fn lagrangian_four_examples() {
        let x = c(&[2, 4], 2);
        let sq = ig_product(&[x.clone(), x.clone()]).unwrap();
        assert_eq!(sq.into_iter().collect::<Vec<_>>(), vec![(c(&[1, 3], 2), BigInt::from(2))]);
        let pr = ig_product(&[x, c(&[1, 3], 2)]).unwrap();
        assert_eq!(pr.into_iter().collect::<Vec<_>>(), vec![(c(&[1, 2], 2), BigInt::one())]);
        let h = c(&[3], 2);
        assert_eq!(ig_point_coefficient(&[h.clone(), h.clone(), h]).unwrap(), BigInt::one());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_eval(&c(&[3, 4], 2)).unwrap().codim_sum, 0);
        assert_eq!(chi_eval(&c(&[2, 4], 2)).unwrap().codim_sum, 2);
        assert_eq!(chi_eval(&c(&[1, 2], 2)).unwrap().codim_sum, 6);
        for r in 1..=3 {
            for i in CIndex::all(r, 3) {
                let e = chi_eval(&i).unwrap();
                if r < 3 {
                    assert_eq!(e.at_fundamental, e.direct);
                }
            }
        }
    }

    #[test]
    fn deformed_examples() {
        let h = c(&[3], 2);
        assert!(!deformed_nonvanishing(&[h.clone(), h.clone(), h.clone()], 1, 2).unwrap());
        assert!(ig_nonvanishing(&[h.clone(), h.clone(), h]).unwrap());
        assert!(deformed_nonvanishing(&[c(&[2], 2), c(&[3], 2), c(&[4], 2)], 1, 2).unwrap());
        assert!(matches!(
            deformed_nonvanishing(&[c(&[4], 2), c(&[4], 2)], 1, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn horn_c_examples() {
        let rec = horn_c_check(&[c(&[2], 2), c(&[3], 2), c(&[4], 2)], 1, 2).unwrap();
        assert!(rec.alpha && rec.beta1 && rec.beta2 && rec.beta3);
        let mus: Vec<usize> = rec.mu.iter().map(|m| m.get(0)).collect();
        assert_eq!(mus, vec![1, 1, 0]);
        let h = c(&[3], 2);
        let rec = horn_c_check(&[h.clone(), h.clone(), h], 1, 2).unwrap();
        assert!(!rec.alpha && !rec.beta1 && rec.consistent());
    }

    #[test]
    fn horn_b_rank_one() {
        let rec = horn_b_check(&[b(&[2], 2), b(&[4], 2), b(&[5], 2)], 1, 2).unwrap();
        assert!(rec.beta1 && rec.beta3);
        assert!(rec.consistent());
    }
}
