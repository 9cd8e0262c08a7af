//! Characters of irreducible representations, tensor-product decomposition and
//! invariant dimensions for `SL(N)`, `Sp(2n)`, `SO(2n+1)` and `Spin(2n+1)`.
//!
//! Weights are stored with doubled epsilon coordinates so that spin weights
//! stay integral.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schubert_a::sl_invariant_dim;
use crate::weight::{restrict_weight, Group, Weight};
use crate::weyl::MAX_RANK;

/// Largest number of weights (with multiplicity classes) kept in one character.
pub const MAX_WEIGHTS: usize = 400_000;

pub type Point = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    A,
    B,
    C,
}

fn kind(g: Group) -> Kind {
    match g {
        Group::SL(_) => Kind::A,
        Group::Sp(_) => Kind::C,
        Group::SO(_) | Group::Spin(_) => Kind::B,
    }
}

#[derive(Debug)]
struct Roots {
    kind: Kind,
    positive: Vec<Point>,
    rho: Point,
}

impl Roots {
    fn new(g: Group) -> Self {
        let n = g.coords();
        let kind = kind(g);
        let unit = |i: usize, c: i64| -> Point {
            let mut v = vec![0; n];
            v[i] = c;
            v
        };
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = unit(i, 2);
                v[j] = -2;
                positive.push(v);
                if kind != Kind::A {
                    let mut w = unit(i, 2);
                    w[j] = 2;
                    positive.push(w);
                }
            }
            match kind {
                Kind::A => {}
                Kind::B => positive.push(unit(i, 2)),
                Kind::C => positive.push(unit(i, 4)),
            }
        }
        let rho = (0..n)
            .map(|i| match kind {
                Kind::A | Kind::C => 2 * (n - i) as i64 - if kind == Kind::A { 2 } else { 0 },
                Kind::B => 2 * (n - i) as i64 - 1,
            })
            .collect();
        Roots { kind, positive, rho }
    }

    fn is_dominant(&self, x: &[i64]) -> bool {
        x.windows(2).all(|w| w[0] >= w[1]) && (self.kind == Kind::A || x.last().is_none_or(|&l| l >= 0))
    }

    fn dominant(&self, x: &[i64]) -> Point {
        let mut v: Point = match self.kind {
            Kind::A => x.to_vec(),
            _ => x.iter().map(|c| c.abs()).collect(),
        };
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Dominant representative of a shifted weight with the sign of the Weyl
    /// element reaching it; `None` on a wall.
    fn straighten(&self, x: &[i64]) -> Option<(Point, bool)> {
        let mut negative = false;
        let mut v: Point = match self.kind {
            Kind::A => x.to_vec(),
            _ => x
                .iter()
                .map(|&c| {
                    if c < 0 {
                        negative = !negative;
                    }
                    c.abs()
                })
                .collect(),
        };
        if self.kind != Kind::A && v.contains(&0) {
            return None;
        }
        let mut odd = negative;
        // insertion sort, tracking the parity of the swaps
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] < v[j] {
                v.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((v, odd))
    }

    fn orbit(&self, x: &[i64]) -> Vec<Point> {
        let mut seen: HashSet<Point> = HashSet::new();
        let mut stack = vec![x.to_vec()];
        seen.insert(x.to_vec());
        let n = x.len();
        while let Some(v) = stack.pop() {
            for i in 0..n {
                let mut w = v.clone();
                if i + 1 < n {
                    w.swap(i, i + 1);
                } else if self.kind != Kind::A {
                    w[i] = -w[i];
                } else {
                    continue;
                }
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        let mut out: Vec<Point> = seen.into_iter().collect();
        out.sort();
        out
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn roots(g: Group) -> Arc<Roots> {
    static CACHE: OnceLock<Mutex<HashMap<Group, Arc<Roots>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    cache.lock().unwrap().entry(g).or_insert_with(|| Arc::new(Roots::new(g))).clone()
}

fn check_group(g: Group) -> Result<()> {
    if g.coords() == 0 || g.rank() > MAX_RANK {
        return Err(Error::Cap(format!("{g} is outside ranks 1..={MAX_RANK}")));
    }
    Ok(())
}

fn check_weight(g: Group, w: &Weight) -> Result<Point> {
    if w.group() != g {
        return Err(Error::Mismatch(format!("weight {w} belongs to {}, not {g}", w.group())));
    }
    if !w.is_dominant() {
        return Err(Error::InvalidWeight(format!("{w} is not dominant for {g}")));
    }
    Ok(w.doubled())
}

/// Multiplicities of the dominant weights of the irreducible representation
/// with highest weight `lambda` (doubled), by Freudenthal's recursion.
fn dominant_multiplicities(g: Group, lambda: &[i64]) -> Result<BTreeMap<Point, BigInt>> {
    let rd = roots(g);
    let mut found: HashSet<Point> = HashSet::new();
    let mut queue = vec![lambda.to_vec()];
    found.insert(lambda.to_vec());
    while let Some(mu) = queue.pop() {
        for a in &rd.positive {
            let nu = sub(&mu, a);
            if rd.is_dominant(&nu) && found.insert(nu.clone()) {
                if found.len() > MAX_WEIGHTS {
                    return Err(Error::Cap(format!("character of {lambda:?} is too large")));
                }
                queue.push(nu);
            }
        }
    }
    let shifted_norm = |mu: &[i64]| {
        let v = add(mu, &rd.rho);
        dot(&v, &v)
    };
    let mut order: Vec<Point> = found.iter().cloned().collect();
    order.sort_by_key(|mu| (std::cmp::Reverse(shifted_norm(mu)), mu.clone()));
    let top = shifted_norm(lambda);
    let mut mult: HashMap<Point, BigInt> = HashMap::new();
    for mu in order {
        if mu == lambda {
            mult.insert(mu, BigInt::one());
            continue;
        }
        let mut num = BigInt::zero();
        for a in &rd.positive {
            let mut k = 1;
            loop {
                let nu: Point = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let Some(m) = mult.get(&rd.dominant(&nu)) else {
                    break;
                };
                num += m * BigInt::from(dot(&nu, a));
                k += 1;
            }
        }
        num *= 2;
        let den = BigInt::from(top - shifted_norm(&mu));
        if (&num % &den) != BigInt::zero() {
            return Err(Error::Inconsistency(format!("Freudenthal quotient not integral at {mu:?}")));
        }
        mult.insert(mu, num / den);
    }
    Ok(mult.into_iter().filter(|(_, m)| !m.is_zero()).collect())
}

/// A finite formal sum of weights with integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCharacter {
    group: Group,
    terms: BTreeMap<Point, BigInt>,
}

impl LaurentCharacter {
    pub fn zero(group: Group) -> Self {
        LaurentCharacter { group, terms: BTreeMap::new() }
    }

    /// Character of the irreducible representation with highest weight `w`.
    pub fn irreducible(w: &Weight) -> Result<Self> {
        let g = w.group();
        check_group(g)?;
        let lambda = check_weight(g, w)?;
        let rd = roots(g);
        let mut terms = BTreeMap::new();
        for (mu, m) in dominant_multiplicities(g, &lambda)? {
            for x in rd.orbit(&mu) {
                terms.insert(x, m.clone());
            }
            if terms.len() > MAX_WEIGHTS {
                return Err(Error::Cap(format!("character of {w} is too large")));
            }
        }
        Ok(LaurentCharacter { group: g, terms })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// `(doubled weight, multiplicity)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Point, &BigInt)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, doubled: &[i64]) -> BigInt {
        self.terms.get(doubled).cloned().unwrap_or_default()
    }

    /// Total mass, the dimension for an honest representation.
    pub fn dim(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_weyl_invariant(&self) -> bool {
        let rd = roots(self.group);
        self.terms.iter().all(|(x, m)| rd.orbit(x).iter().all(|y| self.terms.get(y) == Some(m)))
    }

    pub fn add(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut terms = self.terms.clone();
        for (x, m) in &other.terms {
            let e = terms.entry(x.clone()).or_insert_with(BigInt::zero);
            *e += m;
            if e.is_zero() {
                terms.remove(x);
            }
        }
        LaurentCharacter { group: self.group, terms }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentCharacter {
        if k.is_zero() {
            return LaurentCharacter::zero(self.group);
        }
        LaurentCharacter { group: self.group, terms: self.terms.iter().map(|(x, m)| (x.clone(), m * k)).collect() }
    }

    /// Character of the tensor product.
    pub fn mul(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let mut terms: BTreeMap<Point, BigInt> = BTreeMap::new();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                *terms.entry(add(x, y)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        terms.retain(|_, m| !m.is_zero());
        LaurentCharacter { group: self.group, terms }
    }

    /// Irreducible decomposition by repeatedly removing the character of the
    /// highest remaining dominant weight.
    pub fn decompose(&self) -> Result<BTreeMap<Point, BigInt>> {
        let rd = roots(self.group);
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some(top) = rest
            .terms
            .keys()
            .filter(|x| rd.is_dominant(x))
            .max_by_key(|x| {
                let v = add(x, &rd.rho);
                (dot(&v, &v), (*x).clone())
            })
            .cloned()
        {
            let m = rest.terms[&top].clone();
            let w = weight_from_doubled(self.group, &top)?;
            rest = rest.add(&LaurentCharacter::irreducible(&w)?.scale(&-m.clone()));
            out.insert(top, m);
        }
        if !rest.terms.is_empty() {
            return Err(Error::Inconsistency("character is not Weyl invariant".into()));
        }
        Ok(out)
    }
}

pub fn weight_from_doubled(g: Group, x: &[i64]) -> Result<Weight> {
    Weight::new(g, x.iter().map(|&c| BigRational::new(c.into(), 2.into())).collect())
}

fn character_cached(g: Group, lambda: &[i64]) -> Result<Arc<Vec<(Point, BigInt)>>> {
    type Cache = Mutex<HashMap<(Group, Point), Arc<Vec<(Point, BigInt)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().unwrap().get(&(g, lambda.to_vec())) {
        return Ok(c.clone());
    }
    let w = weight_from_doubled(g, lambda)?;
    let ch = Arc::new(LaurentCharacter::irreducible(&w)?.terms.into_iter().collect::<Vec<_>>());
    cache.lock().unwrap().insert((g, lambda.to_vec()), ch.clone());
    Ok(ch)
}

/// Weyl dimension formula.
pub fn weyl_dimension(w: &Weight) -> Result<BigInt> {
    let g = w.group();
    check_group(g)?;
    let lambda = check_weight(g, w)?;
    let rd = roots(g);
    let shifted = add(&lambda, &rd.rho);
    let mut q = BigRational::one();
    for a in &rd.positive {
        q *= BigRational::new(dot(&shifted, a).into(), dot(&rd.rho, a).into());
    }
    if !q.is_integer() {
        return Err(Error::Inconsistency(format!("dimension of {w} is not integral")));
    }
    Ok(q.to_integer())
}

/// Brauer–Klimyk: decomposition of `(⊕ c_κ V_κ) ⊗ V_λ`.
fn tensor_with(g: Group, dec: &BTreeMap<Point, BigInt>, lambda: &[i64]) -> Result<BTreeMap<Point, BigInt>> {
    let rd = roots(g);
    let ch = character_cached(g, lambda)?;
    let mut out: BTreeMap<Point, BigInt> = BTreeMap::new();
    for (kappa, c) in dec {
        let base = add(kappa, &rd.rho);
        for (nu, m) in ch.iter() {
            if let Some((dom, odd)) = rd.straighten(&add(&base, nu)) {
                let e = out.entry(sub(&dom, &rd.rho)).or_insert_with(BigInt::zero);
                if odd {
                    *e -= c * m;
                } else {
                    *e += c * m;
                }
            }
        }
        if out.len() > MAX_WEIGHTS {
            return Err(Error::Cap("tensor product decomposition is too large".into()));
        }
    }
    out.retain(|_, m| !m.is_zero());
    if out.values().any(|m| m.is_negative()) {
        return Err(Error::Inconsistency("negative multiplicity in a tensor product".into()));
    }
    Ok(out)
}

/// Irreducible decomposition of `V_{λ^1} ⊗ ... ⊗ V_{λ^s}`, keyed by doubled
/// highest weights. For `SL(N)` the keys are `GL(N)` weights.
pub fn tensor_decompose(group: Group, weights: &[Weight]) -> Result<BTreeMap<Point, BigInt>> {
    check_group(group)?;
    let pts: Vec<Point> = weights.iter().map(|w| check_weight(group, w)).collect::<Result<_>>()?;
    let mut dec = BTreeMap::new();
    dec.insert(vec![0; group.coords()], BigInt::one());
    for p in &pts {
        dec = tensor_with(group, &dec, p)?;
    }
    Ok(dec)
}

/// Doubled highest weight of the dual representation.
fn dual_point(g: Group, x: &[i64]) -> Point {
    match kind(g) {
        Kind::A => x.iter().rev().map(|c| -c).collect(),
        _ => x.to_vec(),
    }
}

fn same_class(g: Group, a: &[i64], b: &[i64]) -> bool {
    match kind(g) {
        // GL weights differing by a multiple of the determinant
        Kind::A => {
            let d = a[0] - b[0];
            a.iter().zip(b).all(|(x, y)| x - y == d)
        }
        _ => a == b,
    }
}

/// `dim (V_{λ^1} ⊗ ... ⊗ V_{λ^s})^G`.
pub fn invariant_dim(group: Group, weights: &[Weight]) -> Result<BigInt> {
    check_group(group)?;
    let mut pts: Vec<Point> = weights.iter().map(|w| check_weight(group, w)).collect::<Result<_>>()?;
    let Some(last) = pts.iter().enumerate().max_by_key(|(_, p)| p.iter().map(|c| c.abs()).sum::<i64>()).map(|(k, _)| k)
    else {
        return Ok(BigInt::one());
    };
    let target = dual_point(group, &pts.remove(last));
    let mut dec = BTreeMap::new();
    dec.insert(vec![0; group.coords()], BigInt::one());
    for p in &pts {
        dec = tensor_with(group, &dec, p)?;
    }
    Ok(dec.iter().filter(|(k, _)| same_class(group, k, &target)).map(|(_, m)| m.clone()).sum())
}

/// Partition as an `SL(r)` weight.
pub fn sl_weight(p: &Partition, r: usize) -> Result<Weight> {
    let p = p.with_len(r)?;
    Weight::from_ints(Group::SL(r), &p.parts().iter().map(|&x| x as i64).collect::<Vec<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub source: BigInt,
    /// `None` when the source invariant vanishes and the check does not apply.
    pub target: Option<BigInt>,
    pub restricted: Vec<Weight>,
}

impl TransferReport {
    pub fn applicable(&self) -> bool {
        self.target.is_some()
    }
}

/// Restricts `SL(2n)` (resp. `SL(2n+1)`) weights with a nonzero invariant to
/// `Sp(2n)` (resp. `SO(2n+1)`) and confirms the restricted invariant is nonzero.
pub fn clef_transfer_check(weights: &[Weight]) -> Result<TransferReport> {
    let group = weights.first().map(|w| w.group()).ok_or_else(|| Error::Mismatch("empty weight tuple".into()))?;
    let Group::SL(size) = group else {
        return Err(Error::Mismatch(format!("transfer starts from SL weights, got {group}")));
    };
    if size < 2 {
        return Err(Error::Mismatch("transfer needs SL(N) with N >= 2".into()));
    }
    let source = invariant_dim(group, weights)?;
    let restricted: Vec<Weight> = weights.iter().map(restrict_weight).collect::<Result<_>>()?;
    if source.is_zero() {
        return Ok(TransferReport { source, target: None, restricted });
    }
    let target = invariant_dim(restricted[0].group(), &restricted)?;
    if target.is_zero() {
        return Err(Error::Inconsistency(format!(
            "restriction lost the invariant: {} -> {}",
            fmt_weights(weights),
            fmt_weights(&restricted)
        )));
    }
    Ok(TransferReport { source, target: Some(target), restricted })
}

fn fmt_weights(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkReport {
    pub sl_invariant: BigInt,
    /// `None` when the `SL(r)` invariant vanishes.
    pub sp_invariant: Option<BigInt>,
    pub flipped: Vec<Partition>,
    pub restricted: Vec<Weight>,
}

impl WalkReport {
    pub fn applicable(&self) -> bool {
        self.sp_invariant.is_some()
    }
}

/// Partitions in an `r x 2n` box with total `2nr`: a nonzero `SL(r)` invariant
/// forces a nonzero `Sp(2n)` invariant for the restricted `2n`-flips.
pub fn walk_check(mu: &[Partition], n: usize) -> Result<WalkReport> {
    let r = mu.first().map_or(0, |m| m.len());
    if r == 0 || n == 0 {
        return Err(Error::Precondition("need r >= 1 and n >= 1".into()));
    }
    if mu.iter().any(|m| m.len() != r || m.width() > 2 * n) {
        return Err(Error::Precondition(format!("partitions must fit in an {r} x {} box", 2 * n)));
    }
    let total: usize = mu.iter().map(|m| m.size()).sum();
    if total != 2 * n * r {
        return Err(Error::Precondition(format!("sizes sum to {total}, expected {}", 2 * n * r)));
    }
    let mut flipped = Vec::with_capacity(mu.len());
    for m in mu {
        let lambda = m.flip(2 * n)?;
        // flipping back inside the transposed box recovers the partition
        if lambda.flip(r)? != *m {
            return Err(Error::Inconsistency(format!("flip of {m} is not an involution")));
        }
        flipped.push(lambda);
    }
    let sl_invariant = sl_invariant_dim(mu, r)?;
    let restricted: Vec<Weight> =
        flipped.iter().map(|l| sl_weight(l, 2 * n).and_then(|w| restrict_weight(&w))).collect::<Result<_>>()?;
    if sl_invariant.is_zero() {
        return Ok(WalkReport { sl_invariant, sp_invariant: None, flipped, restricted });
    }
    let sp = invariant_dim(Group::Sp(n), &restricted)?;
    if sp.is_zero() {
        return Err(Error::Inconsistency(format!("no Sp({}) invariant for {}", 2 * n, fmt_weights(&restricted))));
    }
    Ok(WalkReport { sl_invariant, sp_invariant: Some(sp), flipped, restricted })
}

/// Saturation factor: `4` for spin groups, `2` for the others.
pub fn saturation_factor(g: Group) -> usize {
    match g {
        Group::Spin(_) => 4,
        _ => 2,
    }
}

/// Dominant weights whose coordinates are at most `bound`; spin groups also
/// get the half-integral ones.
pub fn dominant_weights_in_box(g: Group, bound: usize) -> Result<Vec<Weight>> {
    check_group(g)?;
    let n = g.coords();
    let rd = roots(g);
    let top = 2 * bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, hi: i64, step: i64, start: i64, cur: &mut Vec<i64>, out: &mut Vec<Point>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let mut v = start;
        while v <= hi {
            cur[i] = v;
            rec(i + 1, v, step, start, cur, out);
            v += step;
        }
    }
    let mut pts = Vec::new();
    rec(0, top, 2, 0, &mut cur, &mut pts);
    if matches!(g, Group::Spin(_)) {
        rec(0, top, 2, 1, &mut cur, &mut pts);
    }
    for p in pts {
        if rd.is_dominant(&p) {
            out.push(weight_from_doubled(g, &p)?);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationCase {
    pub weights: Vec<Weight>,
    /// Invariant dimensions at `ν, 2ν, ...` up to the last multiple computed.
    pub invariants: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub group: Group,
    pub bound: usize,
    pub n_max: usize,
    pub factor: usize,
    pub triples: usize,
    /// Triples with an invariant at some `Nν`, `N <= n_max`, but none at `factor · ν`.
    pub violations: Vec<SaturationCase>,
    /// Triples with no invariant at `ν` but one at `factor · ν`.
    pub witnesses: Vec<SaturationCase>,
}

impl SaturationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scans unordered triples of dominant weights with coordinates at most `bound`.
pub fn saturation_scan(group: Group, bound: usize, n_max: usize) -> Result<SaturationReport> {
    if matches!(group, Group::SL(_)) {
        return Err(Error::Mismatch("saturation scans run on Sp, SO or Spin".into()));
    }
    let factor = saturation_factor(group);
    let weights = dominant_weights_in_box(group, bound)?;
    let mut violations = Vec::new();
    let mut witnesses = Vec::new();
    let mut triples = 0;
    for i in 0..weights.len() {
        for j in i..weights.len() {
            for k in j..weights.len() {
                triples += 1;
                let nu = [weights[i].clone(), weights[j].clone(), weights[k].clone()];
                let at = |t: usize| -> Result<BigInt> {
                    let scaled: Vec<Weight> = nu.iter().map(|w| w.scaled(t as i64)).collect();
                    invariant_dim(group, &scaled)
                };
                let mut invariants = vec![at(1)?];
                for t in 2..=factor {
                    invariants.push(at(t)?);
                }
                let case = |inv: Vec<BigInt>| SaturationCase { weights: nu.to_vec(), invariants: inv };
                if !invariants[factor - 1].is_zero() {
                    if invariants[0].is_zero() {
                        witnesses.push(case(invariants));
                    }
                    continue;
                }
                for t in factor + 1..=n_max {
                    invariants.push(at(t)?);
                }
                if invariants.iter().take(n_max).any(|m| !m.is_zero()) {
                    violations.push(case(invariants));
                }
            }
        }
    }
    Ok(SaturationReport { group, bound, n_max, factor, triples, violations, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: Group, c: &[i64]) -> Weight {
        Weight::from_ints(g, c).unwrap()
    }

    #[test]
    fn small_invariants() {
        assert_eq!(invariant_dim(Group::SL(2), &[w(Group::SL(2), &[1, 0]), w(Group::SL(2), &[1, 0])]).unwrap(), 1.into());
        assert_eq!(invariant_dim(Group::Sp(2), &[w(Group::Sp(2), &[1, 0]), w(Group::Sp(2), &[1, 0])]).unwrap(), 1.into());
        let v = w(Group::SO(2), &[1, 0]);
        assert_eq!(invariant_dim(Group::SO(2), &[v.clone(), v.clone(), v]).unwrap(), 0.into());
        assert_eq!(invariant_dim(Group::Sp(2), &[]).unwrap(), 1.into());
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for g in [Group::SL(3), Group::Sp(2), Group::SO(2), Group::Sp(3), Group::SO(3)] {
            for lam in dominant_weights_in_box(g, 2).unwrap() {
                let ch = LaurentCharacter::irreducible(&lam).unwrap();
                assert_eq!(ch.dim(), weyl_dimension(&lam).unwrap(), "{g} {lam}");
                assert!(ch.is_weyl_invariant());
            }
        }
        let spin = weight_from_doubled(Group::Spin(2), &[1, 1]).unwrap();
        assert_eq!(weyl_dimension(&spin).unwrap(), 4.into());
        assert_eq!(LaurentCharacter::irreducible(&spin).unwrap().dim(), 4.into());
    }

    #[test]
    fn known_dimensions() {
        // adjoint representations
        assert_eq!(weyl_dimension(&w(Group::Sp(2), &[2, 0])).unwrap(), 10.into());
        assert_eq!(weyl_dimension(&w(Group::SO(2), &[1, 1])).unwrap(), 10.into());
        assert_eq!(weyl_dimension(&w(Group::SL(3), &[2, 1, 0])).unwrap(), 8.into());
    }

    #[test]
    fn brauer_klimyk_matches_peeling() {
        for g in [Group::Sp(2), Group::SO(2), Group::SL(3)] {
            let ws = dominant_weights_in_box(g, 1).unwrap();
            for a in &ws {
                for b in &ws {
                    let bk = tensor_decompose(g, &[a.clone(), b.clone()]).unwrap();
                    let prod = LaurentCharacter::irreducible(a).unwrap().mul(&LaurentCharacter::irreducible(b).unwrap());
                    assert_eq!(bk, prod.decompose().unwrap(), "{g} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn saturation_witnesses_exist() {
        let r = saturation_scan(Group::Sp(2), 1, 2).unwrap();
        assert!(r.passed());
        let odd = [w(Group::Sp(2), &[1, 0]), w(Group::Sp(2), &[1, 0]), w(Group::Sp(2), &[1, 0])];
        assert!(r.witnesses.iter().any(|c| c.weights == odd));
    }

    #[test]
    fn transfer_examples() {
        let g = Group::SL(4);
        let w2 = w(g, &[1, 1, 0, 0]);
        let rep = clef_transfer_check(&[w2.clone(), w2]).unwrap();
        assert_eq!(rep.source, 1.into());
        assert_eq!(rep.target, Some(1.into()));
        let z = Weight::zero(g);
        let rep = clef_transfer_check(&[z.clone(), z]).unwrap();
        assert_eq!(rep.target, Some(1.into()));
        let rep = clef_transfer_check(&[w(g, &[1, 0, 0, 0])]).unwrap();
        assert!(!rep.applicable());
    }

    #[test]
    fn walk_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let rep = walk_check(&[p(&[1]), p(&[1]), p(&[2])], 2).unwrap();
        assert!(rep.applicable());
        let rep = walk_check(&[p(&[2, 2]), p(&[2, 2])], 2).unwrap();
        assert!(rep.applicable());
        assert!(walk_check(&[p(&[1]), p(&[1])], 2).is_err());
    }
}
