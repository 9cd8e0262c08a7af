//! Linear inequality systems cutting out the eigencone of `SU(N)`, `Sp(2n)`
//! and `SO(2n+1)`, membership tests, and the comparison of the isotropic
//! cones with the ambient `SU` cone.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coinvariant::ParabolicRing;
use crate::error::{Error, Result};
use crate::index::{AIndex, BIndex, CIndex};
use crate::rep::invariant_dim;
use crate::schubert_a::{gr_nonvanishing, gr_product};
use crate::weight::{Group, Weight};
use crate::weyl::{BcType, SignedPerm, MAX_RANK};

/// Schubert cell attached to one factor of an inequality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    A(AIndex),
    C(CIndex),
    B(BIndex),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::A(a) => write!(f, "{a}"),
            Cell::C(i) => write!(f, "{i}"),
            Cell::B(j) => write!(f, "{j}"),
        }
    }
}

/// `scale · Σ_j ⟨coeffs[j], h_j⟩ ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenInequality {
    /// Node of the maximal parabolic.
    pub node: usize,
    pub cells: Vec<Cell>,
    /// Integer coefficients per coordinate of each factor.
    pub coeffs: Vec<Vec<i64>>,
    /// Positive factor turning the integer form into the fundamental weight.
    pub scale: BigRational,
    /// Coefficient of the point class in the product (zero when generated
    /// from a nonvanishing product of lower degree).
    pub degree: BigInt,
}

impl EigenInequality {
    /// Exact value of the functional at `h`.
    pub fn value(&self, h: &[Vec<BigRational>]) -> BigRational {
        let mut acc = BigRational::zero();
        for (c, x) in self.coeffs.iter().zip(h) {
            for (a, b) in c.iter().zip(x) {
                if *a != 0 {
                    acc += b * BigRational::from_integer((*a).into());
                }
            }
        }
        acc * &self.scale
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generation {
    /// Products equal to a nonzero multiple of the point class.
    PointClass,
    /// Any nonvanishing product.
    Nonvanishing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSystem {
    pub group: Group,
    pub s: usize,
    pub mode: Generation,
    pub inequalities: Vec<EigenInequality>,
}

fn cone_group(g: Group) -> Result<Group> {
    let g = match g {
        Group::Spin(n) => Group::SO(n),
        g => g,
    };
    if g.rank() == 0 || g.rank() > MAX_RANK + 2 || (!matches!(g, Group::SL(_)) && g.rank() > MAX_RANK) {
        return Err(Error::Cap(format!("eigencone of {g} is outside the supported ranks")));
    }
    Ok(g)
}

fn tuples(len: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..len).map(move |k| {
                    let mut u = t.clone();
                    u.push(k);
                    u
                })
            })
            .collect();
    }
    out
}

fn su_inequalities(size: usize, s: usize, mode: Generation) -> Result<Vec<EigenInequality>> {
    let mut out = Vec::new();
    for m in 1..size {
        let cells = AIndex::all(m, size);
        let dim = m * (size - m);
        let coeff = |a: &AIndex| -> Vec<i64> {
            (1..=size).map(|i| i64::from(a.elements().contains(&i))).collect()
        };
        let push = |out: &mut Vec<EigenInequality>, t: Vec<AIndex>, degree: BigInt| {
            out.push(EigenInequality {
                node: m,
                coeffs: t.iter().map(coeff).collect(),
                cells: t.into_iter().map(Cell::A).collect(),
                scale: BigRational::one(),
                degree,
            })
        };
        match mode {
            Generation::PointClass => {
                // the last factor is read off as the dual of each term of the rest
                for head in tuples(cells.len(), s - 1) {
                    let factors: Vec<AIndex> = head.iter().map(|&k| cells[k].clone()).collect();
                    let prod = if factors.is_empty() {
                        BTreeMap::from([(AIndex::top(m, size), BigInt::one())])
                    } else {
                        gr_product(&factors, m, size)?
                    };
                    for (term, d) in prod {
                        let dual = AIndex::from_partition(&term.to_partition().dual(size - m)?, m, size)?;
                        if term.codim() + dual.codim() != dim {
                            continue;
                        }
                        let mut t = factors.clone();
                        t.push(dual);
                        push(&mut out, t, d);
                    }
                }
            }
            Generation::Nonvanishing => {
                for t in tuples(cells.len(), s) {
                    let factors: Vec<AIndex> = t.iter().map(|&k| cells[k].clone()).collect();
                    if gr_nonvanishing(&factors, m, size)? {
                        push(&mut out, factors, BigInt::zero());
                    }
                }
            }
        }
    }
    Ok(out)
}

fn bc_inequalities(ty: BcType, n: usize, s: usize, mode: Generation) -> Result<Vec<EigenInequality>> {
    let mut out = Vec::new();
    for m in 1..=n {
        let ring = ParabolicRing::get(ty, n, m)?;
        let omega: Vec<i64> = (0..n).map(|i| i64::from(i < m)).collect();
        let scale = if ty == BcType::B && m == n { BigRational::new(1.into(), 2.into()) } else { BigRational::one() };
        let coeff: Vec<Vec<i64>> = (0..ring.len()).map(|k| ring.element(k).act(&omega)).collect();
        let cell = |k: usize| -> Cell {
            let w = ring.element(k);
            match ty {
                BcType::C => Cell::C(CIndex::from_weyl(w, m)),
                BcType::B => Cell::B(BIndex::from_weyl(w, m)),
            }
        };
        // Poincaré duals
        let point = ring.point();
        let mut dual = vec![None; ring.len()];
        for a in 0..ring.len() {
            for b in 0..ring.len() {
                if ring.codim(a) + ring.codim(b) == ring.dim()
                    && ring.pair(a, b)?.iter().any(|(k, c)| *k == point && !c.is_zero())
                {
                    dual[a] = Some(b);
                }
            }
        }
        let push = |out: &mut Vec<EigenInequality>, t: &[usize], degree: BigInt| {
            out.push(EigenInequality {
                node: m,
                cells: t.iter().map(|&k| cell(k)).collect(),
                coeffs: t.iter().map(|&k| coeff[k].clone()).collect(),
                scale: scale.clone(),
                degree,
            })
        };
        match mode {
            Generation::PointClass => {
                for head in tuples(ring.len(), s - 1) {
                    let prod = ring.product(&head)?;
                    for (k, d) in prod.into_iter().enumerate() {
                        if d.is_zero() {
                            continue;
                        }
                        let last = dual[k].ok_or_else(|| Error::Inconsistency("missing Poincaré dual".into()))?;
                        let mut t = head.clone();
                        t.push(last);
                        push(&mut out, &t, d);
                    }
                }
            }
            Generation::Nonvanishing => {
                for t in tuples(ring.len(), s) {
                    if ring.nonvanishing(&t)? {
                        push(&mut out, &t, BigInt::zero());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Inequalities of the eigencone for `s` factors, one per tuple of cells of a
/// maximal parabolic whose product is a nonzero multiple of the point class.
pub fn generate_inequalities(group: Group, s: usize) -> Result<Arc<EigenSystem>> {
    generate_system(group, s, Generation::PointClass)
}

pub fn generate_system(group: Group, s: usize, mode: Generation) -> Result<Arc<EigenSystem>> {
    type Cache = Mutex<HashMap<(Group, usize, Generation), Arc<EigenSystem>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let group = cone_group(group)?;
    if s == 0 {
        return Err(Error::Precondition("need at least one factor".into()));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(group, s, mode)) {
        return Ok(hit.clone());
    }
    let inequalities = match group {
        Group::SL(size) => su_inequalities(size, s, mode)?,
        Group::Sp(n) => bc_inequalities(BcType::C, n, s, mode)?,
        Group::SO(n) | Group::Spin(n) => bc_inequalities(BcType::B, n, s, mode)?,
    };
    let sys = Arc::new(EigenSystem { group, s, mode, inequalities });
    cache.lock().unwrap().insert((group, s, mode), sys.clone());
    Ok(sys)
}

/// Checks that each `h_j` lies in the dominant chamber: decreasing and
/// traceless for `SU(N)`, decreasing and nonnegative otherwise.
pub fn check_dominant(group: Group, h: &[Vec<BigRational>]) -> Result<()> {
    let group = cone_group(group)?;
    for x in h {
        if x.len() != group.coords() {
            return Err(Error::Mismatch(format!("{} coordinates given, {group} needs {}", x.len(), group.coords())));
        }
        let decreasing = x.windows(2).all(|w| w[0] >= w[1]);
        let ok = match group {
            Group::SL(_) => decreasing && x.iter().sum::<BigRational>().is_zero(),
            _ => decreasing && x.last().is_none_or(|l| !l.is_negative()),
        };
        if !ok {
            return Err(Error::InvalidWeight(format!("{} is not in the dominant chamber of {group}", fmt_point(x))));
        }
    }
    Ok(())
}

fn fmt_point(x: &[BigRational]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Clears denominators; the cone is invariant under positive scaling.
fn integral(h: &[Vec<BigRational>]) -> Result<Vec<Vec<i128>>> {
    let mut l = BigInt::one();
    for c in h.iter().flatten() {
        l = l.lcm(c.denom());
    }
    h.iter()
        .map(|x| {
            x.iter()
                .map(|c| {
                    (c.numer() * (&l / c.denom()))
                        .to_i128()
                        .filter(|v| v.unsigned_abs() < 1 << 60)
                        .ok_or_else(|| Error::Cap("coordinates too large".into()))
                })
                .collect()
        })
        .collect()
}

impl EigenSystem {
    /// Index of the first violated inequality, if any.
    pub fn first_violation(&self, h: &[Vec<BigRational>]) -> Result<Option<usize>> {
        check_dominant(self.group, h)?;
        if h.len() != self.s {
            return Err(Error::Mismatch(format!("{} factors given, system has {}", h.len(), self.s)));
        }
        let z = integral(h)?;
        Ok(self.inequalities.iter().position(|q| {
            let v: i128 = q
                .coeffs
                .iter()
                .zip(&z)
                .map(|(c, x)| c.iter().zip(x).map(|(a, b)| *a as i128 * b).sum::<i128>())
                .sum();
            v > 0
        }))
    }

    pub fn contains(&self, h: &[Vec<BigRational>]) -> Result<bool> {
        Ok(self.first_violation(h)?.is_none())
    }
}

/// Membership in the eigencone of `group` for `s = h.len()` factors.
pub fn membership(group: Group, h: &[Vec<BigRational>]) -> Result<bool> {
    generate_inequalities(group, h.len())?.contains(h)
}

/// The Cartan of `Sp(2n)` (resp. `SO(2n+1)`) inside that of `SU(2n)`
/// (resp. `SU(2n+1)`): `(t_1, ..., t_n[, 0], -t_n, ..., -t_1)`.
pub fn embed_cartan(ty: BcType, x: &[BigRational]) -> Vec<BigRational> {
    let mut out = x.to_vec();
    if ty == BcType::B {
        out.push(BigRational::zero());
    }
    out.extend(x.iter().rev().map(|c| -c.clone()));
    out
}

/// `ω_m(v^{-1} h)` with `v` the permutation of the subset `a` and `h` a
/// diagonal `SU` element.
pub fn su_pairing(a: &AIndex, h: &[BigRational]) -> BigRational {
    let v = a.permutation();
    (0..a.len()).map(|i| h[v[i] - 1].clone()).sum()
}

/// `(ε_1 + ... + ε_m)(w^{-1} h)`.
pub fn bc_pairing(w: &SignedPerm, m: usize, h: &[BigRational]) -> BigRational {
    w.inverse().act(h).into_iter().take(m).sum()
}

/// Checks `ω_m(v_I^{-1} h̃) = ω_m(w_I^{-1} h)` for every cell of every node.
pub fn omega_identity(ty: BcType, h: &[BigRational]) -> Result<usize> {
    let n = h.len();
    let big = embed_cartan(ty, h);
    let mut checked = 0;
    for m in 1..=n {
        match ty {
            BcType::C => {
                for i in CIndex::all(m, n) {
                    let lhs = su_pairing(&i.to_aindex(), &big);
                    let rhs = bc_pairing(&i.weyl_element(), m, h);
                    if lhs != rhs {
                        return Err(Error::Inconsistency(format!("pairings differ at {i}: {lhs} vs {rhs}")));
                    }
                    checked += 1;
                }
            }
            BcType::B => {
                for j in BIndex::all(m, n) {
                    let lhs = su_pairing(&j.to_aindex(), &big);
                    let rhs = bc_pairing(&j.weyl_element(), m, h);
                    if lhs != rhs {
                        return Err(Error::Inconsistency(format!("pairings differ at {j}: {lhs} vs {rhs}")));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub point: Vec<Vec<BigRational>>,
    pub isotropic: bool,
    pub ambient: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub ty: BcType,
    pub n: usize,
    pub s: usize,
    pub seed: u64,
    pub samples: usize,
    pub members: usize,
    /// Points on the boundary of the isotropic cone.
    pub boundary: usize,
    /// Points with repeated or vanishing coordinates.
    pub degenerate: usize,
    pub isotropic_inequalities: usize,
    pub ambient_inequalities: usize,
    pub identity_checks: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn random_chamber_point<R: Rng>(rng: &mut R, n: usize, degenerate: bool) -> Vec<BigRational> {
    let den: i64 = rng.random_range(1..=4);
    let mut v: Vec<i64> = (0..n).map(|_| rng.random_range(0..=12)).collect();
    if degenerate {
        match rng.random_range(0..3) {
            0 if n > 1 => {
                let i = rng.random_range(0..n - 1);
                v[i + 1] = v[i];
            }
            1 => v[rng.random_range(0..n)] = 0,
            _ => v.iter_mut().for_each(|x| *x = 6),
        }
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.into_iter().map(|x| BigRational::new(x.into(), den.into())).collect()
}

fn has_degeneracy(h: &[Vec<BigRational>]) -> bool {
    h.iter().any(|x| x.windows(2).any(|w| w[0] == w[1]) || x.last().is_some_and(|l| l.is_zero()))
}

/// A member: sum of rotated copies of `(x, x, 0, ...)`, each of which is in
/// the cone since `-x` is conjugate to `x`.
fn random_member<R: Rng>(rng: &mut R, n: usize, s: usize) -> Vec<Vec<BigRational>> {
    let mut h = vec![vec![BigRational::zero(); n]; s];
    if s < 2 {
        return h;
    }
    for k in 0..s {
        let degenerate = rng.random_bool(0.3);
        let x = random_chamber_point(rng, n, degenerate);
        for j in [k, (k + 1) % s] {
            for (a, b) in h[j].iter_mut().zip(&x) {
                *a += b;
            }
        }
    }
    h
}

fn lerp(x: &[Vec<BigRational>], y: &[Vec<BigRational>], t: &BigRational) -> Vec<Vec<BigRational>> {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p + (q - p) * t).collect())
        .collect()
}

/// Point where the segment from a member `x` to a non-member `y` leaves the cone.
fn exit_point(sys: &EigenSystem, x: &[Vec<BigRational>], y: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut t = BigRational::one();
    for q in &sys.inequalities {
        let (lx, ly) = (q.value(x), q.value(y));
        if ly.is_positive() {
            let cross = -&lx / (&ly - &lx);
            if cross < t {
                t = cross;
            }
        }
    }
    lerp(x, y, &t)
}

/// Samples points of the dominant chamber of `Sp(2n)` (type C) or `SO(2n+1)`
/// (type B) and compares membership in that cone with membership of the
/// embedded points in the `SU` cone.
pub fn compare_cones(ty: BcType, n: usize, s: usize, samples: usize, seed: u64) -> Result<CompareReport> {
    if n == 0 || n > 3 {
        return Err(Error::Cap("cone comparison runs for 1 <= n <= 3".into()));
    }
    let (small, big) = match ty {
        BcType::C => (Group::Sp(n), Group::SL(2 * n)),
        BcType::B => (Group::SO(n), Group::SL(2 * n + 1)),
    };
    let iso = generate_inequalities(small, s)?;
    let amb = generate_inequalities(big, s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CompareReport {
        ty,
        n,
        s,
        seed,
        samples,
        members: 0,
        boundary: 0,
        degenerate: 0,
        isotropic_inequalities: iso.inequalities.len(),
        ambient_inequalities: amb.inequalities.len(),
        identity_checks: 0,
        disagreements: Vec::new(),
    };
    for k in 0..samples {
        let h: Vec<Vec<BigRational>> = match k % 4 {
            0 => random_member(&mut rng, n, s),
            1 => (0..s).map(|_| random_chamber_point(&mut rng, n, false)).collect(),
            2 => (0..s).map(|_| random_chamber_point(&mut rng, n, true)).collect(),
            _ => {
                let x = random_member(&mut rng, n, s);
                let mut y: Vec<Vec<BigRational>> = (0..s).map(|_| random_chamber_point(&mut rng, n, false)).collect();
                y[0].iter_mut().for_each(|c| *c *= BigRational::from_integer(4.into()));
                if iso.contains(&y)? {
                    y
                } else {
                    exit_point(&iso, &x, &y)
                }
            }
        };
        let a = iso.contains(&h)?;
        let embedded: Vec<Vec<BigRational>> = h.iter().map(|x| embed_cartan(ty, x)).collect();
        let b = amb.contains(&embedded)?;
        if a {
            report.members += 1;
            if iso.inequalities.iter().any(|q| q.value(&h).is_zero() && q.coeffs.iter().flatten().any(|&c| c != 0))
                && h.iter().flatten().any(|c| !c.is_zero())
            {
                report.boundary += 1;
            }
        }
        if has_degeneracy(&h) {
            report.degenerate += 1;
        }
        for x in &h {
            report.identity_checks += omega_identity(ty, x)?;
        }
        if a != b {
            report.disagreements.push(Disagreement { point: h, isotropic: a, ambient: b });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightConeReport {
    pub member: bool,
    /// Smallest `N <= n_max` with a nonzero invariant at `Nν`.
    pub first_invariant: Option<usize>,
}

impl WeightConeReport {
    /// An invariant at some multiple forces membership; a member without an
    /// invariant in range is allowed.
    pub fn consistent(&self) -> bool {
        self.first_invariant.is_none() || self.member
    }
}

/// Dominant weights read as dominant Cartan elements. The identification is
/// fixed only up to a positive factor per group, which membership ignores.
pub fn weights_to_cartan(weights: &[Weight]) -> Vec<Vec<BigRational>> {
    weights
        .iter()
        .map(|w| match w.group() {
            Group::SL(size) => {
                let mean: BigRational = w.coords().iter().sum::<BigRational>() / BigRational::from_integer(size.into());
                w.coords().iter().map(|c| c - &mean).collect()
            }
            _ => w.coords().to_vec(),
        })
        .collect()
}

pub fn weight_cone_cross_check(weights: &[Weight], n_max: usize) -> Result<WeightConeReport> {
    let group = weights.first().map(|w| w.group()).ok_or_else(|| Error::Mismatch("empty weight tuple".into()))?;
    if weights.iter().any(|w| w.group() != group) {
        return Err(Error::Mismatch("weights from different groups".into()));
    }
    let member = membership(group, &weights_to_cartan(weights))?;
    let mut first_invariant = None;
    for t in 1..=n_max {
        let scaled: Vec<Weight> = weights.iter().map(|w| w.scaled(t as i64)).collect();
        if !invariant_dim(group, &scaled)?.is_zero() {
            first_invariant = Some(t);
            break;
        }
    }
    let report = WeightConeReport { member, first_invariant };
    if !report.consistent() {
        return Err(Error::Inconsistency("invariant found outside the eigencone".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn su2_triangle() {
        let sys = generate_inequalities(Group::SL(2), 3).unwrap();
        assert_eq!(sys.inequalities.len(), 3);
        let tri = |a: i64, b: i64, c: i64| membership(Group::SL(2), &[q(&[a, -a]), q(&[b, -b]), q(&[c, -c])]).unwrap();
        assert!(tri(1, 1, 2));
        assert!(!tri(1, 1, 3));
        assert!(tri(0, 0, 0));
    }

    #[test]
    fn sp2_matches_su2() {
        let a = generate_inequalities(Group::Sp(1), 3).unwrap();
        let b = generate_inequalities(Group::SL(2), 3).unwrap();
        let key = |s: &EigenSystem| {
            let mut v: Vec<Vec<i64>> =
                s.inequalities.iter().map(|q| q.coeffs.iter().map(|c| if c.len() == 2 { c[0] - c[1] } else { c[0] }).collect()).collect();
            v.sort();
            v
        };
        assert_eq!(key(&a), key(&b));
    }

    #[test]
    fn omega_identity_small() {
        assert!(omega_identity(BcType::C, &q(&[5, 2, 1])).unwrap() > 0);
        assert!(omega_identity(BcType::B, &q(&[5, 2, 1])).unwrap() > 0);
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(membership(Group::Sp(2), &[q(&[1, 2]), q(&[0, 0])]).is_err());
        assert!(membership(Group::SL(2), &[q(&[1, 1]), q(&[0, 0])]).is_err());
    }
}
