//! Littlewood-Richardson coefficients, Grassmannian cohomology products,
//! Horn lists and the dualities between `SL(r)` and `SL(k)` invariants.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::AIndex;
use crate::partition::Partition;

pub type CohomClassA = BTreeMap<AIndex, BigInt>;

struct LrSearch<'a> {
    cells: Vec<(usize, usize)>,
    inner: &'a [usize],
    outer: &'a [usize],
    content: &'a [usize],
    fill: Vec<Vec<u8>>,
    count: Vec<usize>,
}

impl LrSearch<'_> {
    fn run(&mut self, k: usize) -> u64 {
        if k == self.cells.len() {
            return 1;
        }
        let (row, col) = self.cells[k];
        let mut hi = self.content.len().min(row + 1);
        if col + 1 < self.outer[row] {
            hi = hi.min(self.fill[row][col + 1] as usize);
        }
        let mut lo = 1;
        if row > 0 && col < self.outer[row - 1] && col >= self.inner[row - 1] {
            lo = self.fill[row - 1][col] as usize + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            if self.count[v] >= self.content[v - 1] || (v > 1 && self.count[v] + 1 > self.count[v - 1]) {
                continue;
            }
            self.count[v] += 1;
            self.fill[row][col] = v as u8;
            total += self.run(k + 1);
            self.count[v] -= 1;
        }
        self.fill[row][col] = 0;
        total
    }
}

/// `c^nu_{lambda, mu}` by counting LR skew tableaux of shape `nu / lambda`
/// and content `mu`. Returns 0 on any size or containment mismatch.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let outer: Vec<usize> = nu.trimmed().parts().to_vec();
    let inner: Vec<usize> = (0..outer.len()).map(|i| lambda.get(i)).collect();
    let content: Vec<usize> = mu.trimmed().parts().to_vec();
    // reading order: rows top to bottom, each row right to left
    let cells = (0..outer.len())
        .flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c)))
        .collect();
    let mut search = LrSearch {
        cells,
        inner: &inner,
        outer: &outer,
        content: &content,
        fill: outer.iter().map(|&w| vec![0u8; w]).collect(),
        count: vec![0; content.len() + 1],
    };
    search.run(0)
}

/// All partitions `nu` with `c^nu_{lambda,mu} != 0`, at most `rows` parts and
/// (optionally) at most `width` columns, padded to `rows`.
pub fn lr_product(lambda: &Partition, mu: &Partition, rows: usize, width: Option<usize>) -> BTreeMap<Partition, u64> {
    let size = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    if lambda.nonzero_len() > rows || mu.nonzero_len() > rows {
        return out;
    }
    let max_first = lambda.width() + mu.width();
    let cap = width.map_or(max_first, |w| w.min(max_first));
    fn rec(
        i: usize,
        rows: usize,
        rem: usize,
        prev: usize,
        lambda: &Partition,
        mu: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let lo = lambda.get(i).max(mu.get(i));
        let hi = prev.min(rem).min(lambda.get(i) + mu.width());
        if lo > hi {
            return;
        }
        for p in (lo..=hi).rev() {
            if p * (rows - i) < rem {
                break;
            }
            cur.push(p);
            rec(i + 1, rows, rem - p, p, lambda, mu, cur, out);
            cur.pop();
        }
    }
    let mut cands = Vec::new();
    rec(0, rows, size, cap, lambda, mu, &mut Vec::new(), &mut cands);
    for nu in cands {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

fn strip_columns(p: &Partition) -> Partition {
    let last = p.get(p.len().saturating_sub(1));
    Partition::new(p.parts().iter().map(|&x| x - last).collect()).unwrap()
}

/// `dim (V_{mu^1} ⊗ ... ⊗ V_{mu^s})^{SL(r)}` by iterated LR expansion.
pub fn sl_invariant_dim(mu: &[Partition], r: usize) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::Mismatch("SL(0) has no representations".into()));
    }
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    acc.insert(Partition::zero(r), BigInt::one());
    let mut total = 0;
    for m in mu {
        let m = m.with_len(r)?;
        total += m.size();
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (lam, mult) in &acc {
            for (nu, c) in lr_product(lam, &m, r, None) {
                *next.entry(strip_columns(&nu)).or_insert_with(BigInt::zero) += mult * BigInt::from(c);
            }
        }
        acc = next;
    }
    if total % r != 0 {
        return Ok(BigInt::zero());
    }
    Ok(acc.get(&Partition::zero(r)).cloned().unwrap_or_else(BigInt::zero))
}

fn check_same_grassmannian(indices: &[AIndex], m: usize, ambient: usize) -> Result<()> {
    for a in indices {
        if a.len() != m || a.ambient() != ambient {
            return Err(Error::Mismatch(format!("{a} is not a cell of Gr({m},{ambient})")));
        }
    }
    Ok(())
}

fn multiply_in_box(acc: &BTreeMap<Partition, BigInt>, p: &Partition, m: usize, w: usize) -> BTreeMap<Partition, BigInt> {
    let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (lam, mult) in acc {
        for (nu, c) in lr_product(lam, p, m, Some(w)) {
            *next.entry(nu).or_insert_with(BigInt::zero) += mult * BigInt::from(c);
        }
    }
    next
}

/// Product of cell classes in the cohomology of `Gr(m, N)`.
pub fn gr_product(indices: &[AIndex], m: usize, ambient: usize) -> Result<CohomClassA> {
    check_same_grassmannian(indices, m, ambient)?;
    let w = ambient - m;
    let mut acc = BTreeMap::new();
    acc.insert(Partition::zero(m), BigInt::one());
    let mut codim = 0;
    for a in indices {
        codim += a.codim();
        if codim > m * w {
            return Ok(CohomClassA::new());
        }
        acc = multiply_in_box(&acc, &a.to_partition(), m, w);
    }
    Ok(acc
        .into_iter()
        .map(|(p, c)| (AIndex::from_partition(&p, m, ambient).unwrap(), c))
        .collect())
}

pub fn gr_nonvanishing(indices: &[AIndex], m: usize, ambient: usize) -> Result<bool> {
    check_same_grassmannian(indices, m, ambient)?;
    if indices.iter().map(|a| a.codim()).sum::<usize>() > m * (ambient - m) {
        return Ok(false);
    }
    Ok(!gr_product(indices, m, ambient)?.is_empty())
}

/// Coefficient of the point class; 0 unless codimensions add up to the dimension.
pub fn point_coefficient(indices: &[AIndex], m: usize, ambient: usize) -> Result<BigInt> {
    check_same_grassmannian(indices, m, ambient)?;
    let w = ambient - m;
    if indices.iter().map(|a| a.codim()).sum::<usize>() != m * w {
        return Ok(BigInt::zero());
    }
    let Some((last, rest)) = indices.split_last() else {
        return Ok(if m * w == 0 { BigInt::one() } else { BigInt::zero() });
    };
    let mut acc = BTreeMap::new();
    acc.insert(Partition::zero(m), BigInt::one());
    for a in rest {
        acc = multiply_in_box(&acc, &a.to_partition(), m, w);
    }
    let target = last.to_partition().dual(w)?;
    Ok(acc.get(&target).cloned().unwrap_or_else(BigInt::zero))
}

type HornKey = (usize, usize, usize, bool);
type HornTable = HashMap<HornKey, Arc<Vec<Vec<AIndex>>>>;

fn horn_cache() -> &'static Mutex<HornTable> {
    static CACHE: OnceLock<Mutex<HornTable>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn tuples(cells: &[AIndex], s: usize) -> Vec<Vec<AIndex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|t| {
                cells.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn horn_list_impl(d: usize, r: usize, s: usize, point_only: bool) -> Arc<Vec<Vec<AIndex>>> {
    let key = (d, r, s, point_only);
    if let Some(hit) = horn_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let cells = AIndex::all(d, r);
    let dim = d * (r - d);
    let mut list = Vec::new();
    for t in tuples(&cells, s) {
        let codim: usize = t.iter().map(|a| a.codim()).sum();
        let keep = if point_only {
            codim == dim && !point_coefficient(&t, d, r).unwrap().is_zero()
        } else {
            codim <= dim && gr_nonvanishing(&t, d, r).unwrap()
        };
        if keep {
            list.push(t);
        }
    }
    let list = Arc::new(list);
    horn_cache().lock().unwrap().insert(key, list.clone());
    list
}

/// Ordered `s`-tuples of `d`-subsets of `[r]` whose cell classes have nonzero
/// product in `Gr(d, r)`.
pub fn horn_list(d: usize, r: usize, s: usize) -> Arc<Vec<Vec<AIndex>>> {
    assert!(1 <= d && d <= r, "need 1 <= d <= r");
    horn_list_impl(d, r, s, false)
}

/// Tuples whose product is a nonzero multiple of the point class.
pub fn horn_list_point(d: usize, r: usize, s: usize) -> Arc<Vec<Vec<AIndex>>> {
    assert!(1 <= d && d <= r, "need 1 <= d <= r");
    horn_list_impl(d, r, s, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornVerdict {
    pub holds: bool,
    /// First violated inequality: `(d, tuple)`.
    pub witness: Option<(usize, Vec<AIndex>)>,
}

/// Checks `Σ_j Σ_{a ∈ B^j} mu^j_a <= d * bound` over every `d` in `d_range`
/// and every tuple of `horn_list(d, r, s)`.
pub fn horn_inequality_check(
    mu: &[Partition],
    bound: usize,
    r: usize,
    d_range: std::ops::RangeInclusive<usize>,
) -> Result<HornVerdict> {
    let mu: Vec<Partition> = mu.iter().map(|m| m.with_len(r)).collect::<Result<_>>()?;
    for d in d_range {
        if d == 0 || d > r {
            continue;
        }
        for t in horn_list(d, r, mu.len()).iter() {
            let lhs: usize = t
                .iter()
                .zip(&mu)
                .map(|(b, m)| b.elements().iter().map(|&a| m.get(a - 1)).sum::<usize>())
                .sum();
            if lhs > d * bound {
                return Ok(HornVerdict { holds: false, witness: Some((d, t.clone())) });
            }
        }
    }
    Ok(HornVerdict { holds: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check_box(mu: &[Partition], r: usize, k: usize) -> Result<Vec<Partition>> {
    mu.iter()
        .map(|m| {
            let m = m.with_len(r)?;
            if m.width() > k {
                return Err(Error::InvalidPartition(format!("{m} does not fit in a {r}x{k} box")));
            }
            Ok(m)
        })
        .collect()
}

/// `SL(r)` invariants of the `mu^j` against `SL(k)` invariants of their conjugates.
pub fn grassmann_duality_check(mu: &[Partition], r: usize, k: usize) -> Result<DualityReport> {
    let mu = check_box(mu, r, k)?;
    let total: usize = mu.iter().map(|m| m.size()).sum();
    if total != k * r {
        return Err(Error::Precondition(format!("sizes add to {total}, expected {}", k * r)));
    }
    let conj: Vec<Partition> = mu.iter().map(|m| m.conjugate().with_len(k)).collect::<Result<_>>()?;
    Ok(DualityReport { lhs: sl_invariant_dim(&mu, r)?, rhs: sl_invariant_dim(&conj, k)? })
}

/// `SL(r)` invariants of the `mu^j` against those of `dual(mu^j, k)`.
pub fn ordinary_duality_check(mu: &[Partition], r: usize, k: usize) -> Result<DualityReport> {
    let mu = check_box(mu, r, k)?;
    let duals: Vec<Partition> = mu.iter().map(|m| m.dual(k)).collect::<Result<_>>()?;
    Ok(DualityReport { lhs: sl_invariant_dim(&mu, r)?, rhs: sl_invariant_dim(&duals, r)? })
}
