//! The ten acceptance criteria, shared by the `acceptance` test target and the
//! `verify-all` subcommand.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coinvariant::{
    flag_structure_constants, grain_check, horn_b_check, horn_c_check, ig_nonvanishing, ig_product, og_nonvanishing,
};
use crate::eigencone::compare_cones;
use crate::error::Result;
use crate::field::PrimeField;
use crate::flag::{multisets, properness_scan, theorem_key_check, FormKind};
use crate::index::{dominance_count, mu_function_value, theta_values, AIndex, BIndex, CIndex};
use crate::partition::{partitions_in_box, Partition};
use crate::rep::{clef_transfer_check, saturation_scan, sl_weight, walk_check};
use crate::schubert_a::{gr_nonvanishing, grassmann_duality_check, lr_coefficient, lr_product, ordinary_duality_check};
use crate::weight::Group;
use crate::weyl::{BcType, SignedPerm};

#[derive(Clone, Debug)]
pub struct Settings {
    pub seed: u64,
    pub prime: PrimeField,
    /// Trials per tuple in the properness scans.
    pub properness_trials: usize,
    /// Random sequence tuples per `(r, n)` in the Hom-space check.
    pub key_samples: usize,
    pub cone_samples: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { seed: 1, prime: PrimeField::default(), properness_trials: 20, key_samples: 100, cone_samples: 1000 }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

pub const TITLES: [&str; 10] = [
    "grain identity for Schubert representatives",
    "LG(2,4) structure constants",
    "isotropic nonvanishing implies Grassmannian nonvanishing",
    "deformed product criterion on IG",
    "deformed product criterion on OG",
    "Hom-space dimension versus Horn inequalities",
    "restriction of invariants and the flip walk",
    "saturation factors",
    "isotropic eigencones versus SU eigencones",
    "invariant suites",
];

struct Log {
    ok: bool,
    lines: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Log { ok: true, lines: Vec::new() }
    }

    fn check(&mut self, cond: bool, line: String) {
        if !cond {
            self.ok = false;
            self.lines.push(format!("FAILED: {line}"));
        }
    }

    fn note(&mut self, line: String) {
        self.lines.push(line);
    }
}

/// Runs one criterion (numbered from 1).
pub fn run(id: usize, settings: &Settings) -> Outcome {
    let start = Instant::now();
    let mut log = Log::new();
    let result = match id {
        1 => grain(&mut log),
        2 => lagrangian(&mut log),
        3 => isotropic_implies_ordinary(&mut log),
        4 => deformed_c(&mut log),
        5 => deformed_b(&mut log),
        6 => hom_key(&mut log, settings),
        7 => transfer(&mut log),
        8 => saturation(&mut log),
        9 => cones(&mut log, settings),
        10 => suites(&mut log, settings),
        _ => {
            log.check(false, format!("no criterion {id}"));
            Ok(())
        }
    };
    if let Err(e) = result {
        log.check(false, format!("error: {e}"));
    }
    Outcome {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed: log.ok,
        details: log.lines,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(settings: &Settings) -> Vec<Outcome> {
    (1..=10).map(|id| run(id, settings)).collect()
}

fn grain(log: &mut Log) -> Result<()> {
    for n in 1..=3 {
        let ok = grain_check(n)?;
        log.check(ok, format!("grain identity at n={n}"));
    }
    log.note("n=1..3: every Weyl element checked".into());
    Ok(())
}

fn c(v: &[usize], n: usize) -> CIndex {
    CIndex::new(v.to_vec(), n).expect("valid literal")
}

fn lagrangian(log: &mut Log) -> Result<()> {
    let (top, mid, low) = (c(&[2, 4], 2), c(&[1, 3], 2), c(&[1, 2], 2));
    let sq = ig_product(&[top.clone(), top.clone()])?;
    log.check(sq.len() == 1 && sq.get(&mid) == Some(&BigInt::from(2)), format!("[2,4]^2 = {sq:?}"));
    let pr = ig_product(&[top, mid])?;
    log.check(pr.len() == 1 && pr.get(&low) == Some(&BigInt::one()), format!("[2,4][1,3] = {pr:?}"));
    log.note("[2,4]^2 = 2[1,3], [2,4][1,3] = [1,2]".into());
    Ok(())
}

fn isotropic_implies_ordinary(log: &mut Log) -> Result<()> {
    let mut checked = 0;
    for n in 1..=3 {
        for m in 1..=n {
            let cells = CIndex::all(m, n);
            for t in multisets(cells.len(), 3) {
                let idx: Vec<CIndex> = t.iter().map(|&k| cells[k].clone()).collect();
                if ig_nonvanishing(&idx)? {
                    checked += 1;
                    let a: Vec<AIndex> = idx.iter().map(|i| i.to_aindex()).collect();
                    log.check(gr_nonvanishing(&a, m, 2 * n)?, format!("IG counterexample {idx:?}"));
                }
            }
            let cells = BIndex::all(m, n);
            for t in multisets(cells.len(), 3) {
                let idx: Vec<BIndex> = t.iter().map(|&k| cells[k].clone()).collect();
                if og_nonvanishing(&idx)? {
                    checked += 1;
                    let a: Vec<AIndex> = idx.iter().map(|j| j.to_aindex()).collect();
                    log.check(gr_nonvanishing(&a, m, 2 * n + 1)?, format!("OG counterexample {idx:?}"));
                }
            }
        }
    }
    log.note(format!("{checked} nonvanishing isotropic triples checked"));
    Ok(())
}

fn deformed_c(log: &mut Log) -> Result<()> {
    let mut checked = 0;
    for n in 1..=3 {
        for r in 1..=n {
            let cells = CIndex::all(r, n);
            let dim = crate::index::ig_dim(r, n);
            for t in multisets(cells.len(), 3) {
                let idx: Vec<CIndex> = t.iter().map(|&k| cells[k].clone()).collect();
                if idx.iter().map(|i| i.cell_stats().codim).sum::<usize>() != dim {
                    continue;
                }
                checked += 1;
                let rec = horn_c_check(&idx, r, n)?;
                log.check(rec.consistent(), format!("IG({r},{}) {idx:?}: {rec:?}", 2 * n));
            }
        }
    }
    let three = vec![c(&[3], 2); 3];
    let rec = horn_c_check(&three, 1, 2)?;
    let ordinary = !crate::coinvariant::ig_point_coefficient(&three)?.is_zero();
    log.check(ordinary && !rec.alpha && !rec.beta1, format!("IG(1,4) [3]^3 should vanish only when deformed: {rec:?}"));
    log.note(format!("{checked} complementary triples; IG(1,4) [3]^3 deformed product vanishes"));
    Ok(())
}

fn deformed_b(log: &mut Log) -> Result<()> {
    let mut checked = 0;
    for n in 1..=3 {
        for r in 1..=n {
            let cells = BIndex::all(r, n);
            let dim = crate::index::og_dim(r, n);
            for t in multisets(cells.len(), 3) {
                let idx: Vec<BIndex> = t.iter().map(|&k| cells[k].clone()).collect();
                if idx.iter().map(|j| j.cell_stats().codim).sum::<usize>() != dim {
                    continue;
                }
                checked += 1;
                let rec = horn_b_check(&idx, r, n)?;
                log.check(rec.consistent(), format!("OG({r},{}) {idx:?}: {rec:?}", 2 * n + 1));
            }
        }
    }
    log.note(format!("{checked} complementary triples"));
    Ok(())
}

/// Random sequence tuples for `r x 2n` boxes; half of them are drawn close to
/// the balanced total `2nr` where both outcomes occur.
pub fn sample_mu<R: Rng>(rng: &mut R, r: usize, n: usize, s: usize) -> Vec<Partition> {
    let draw = |rng: &mut R| {
        let mut v: Vec<usize> = (0..r).map(|_| rng.random_range(0..=2 * n)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted")
    };
    let balanced = rng.random_bool(0.5);
    for _ in 0..200 {
        let mu: Vec<Partition> = (0..s).map(|_| draw(rng)).collect();
        let total: usize = mu.iter().map(|m| m.size()).sum();
        if !balanced || total.abs_diff(2 * n * r) <= r {
            return mu;
        }
    }
    (0..s).map(|_| draw(rng)).collect()
}

fn hom_key(log: &mut Log, st: &Settings) -> Result<()> {
    let mut total = 0;
    let mut both = [0usize; 2];
    for k in 0..3u64 {
        let seed = st.seed.wrapping_add(1000 * k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in 1..=3 {
            for n in 1..=3 {
                for i in 0..st.key_samples {
                    let mu = sample_mu(&mut rng, r, n, 3);
                    let rec = theorem_key_check(&mu, n, 3, seed ^ ((r * 100 + n * 10) as u64) << 20 ^ i as u64, &st.prime)?;
                    total += 1;
                    both[usize::from(rec.b_holds)] += 1;
                    log.check(rec.agrees(), format!("r={r} n={n} mu={mu:?}: {rec:?}"));
                }
            }
        }
    }
    log.note(format!(
        "{total} tuples over 3 seeds (prime {}): {} with the inequalities, {} without",
        st.prime.modulus(),
        both[1],
        both[0]
    ));
    Ok(())
}

fn transfer(log: &mut Log) -> Result<()> {
    let parts: Vec<Partition> = partitions_in_box(4, 6).into_iter().filter(|p| p.size() <= 6).collect();
    let (mut tuples, mut applicable) = (0, 0);
    for i in 0..parts.len() {
        for j in i..parts.len() {
            for k in j..parts.len() {
                if parts[i].size() + parts[j].size() + parts[k].size() > 6 {
                    continue;
                }
                let ws = [&parts[i], &parts[j], &parts[k]].map(|p| sl_weight(p, 4)).into_iter().collect::<Result<Vec<_>>>()?;
                tuples += 1;
                match clef_transfer_check(&ws) {
                    Ok(rep) => applicable += usize::from(rep.applicable()),
                    Err(e) => log.check(false, format!("{e}")),
                }
            }
        }
    }
    log.note(format!("SL4 -> Sp4: {tuples} triples, {applicable} with an invariant, all transferred"));
    for r in 1..=3 {
        let ps = partitions_in_box(r, 4);
        let (mut count, mut app) = (0, 0);
        for i in 0..ps.len() {
            for j in i..ps.len() {
                for k in j..ps.len() {
                    if ps[i].size() + ps[j].size() + ps[k].size() != 4 * r {
                        continue;
                    }
                    count += 1;
                    match walk_check(&[ps[i].clone(), ps[j].clone(), ps[k].clone()], 2) {
                        Ok(rep) => app += usize::from(rep.applicable()),
                        Err(e) => log.check(false, format!("{e}")),
                    }
                }
            }
        }
        log.note(format!("walk r={r}: {count} triples, {app} with an SL{r} invariant"));
    }
    Ok(())
}

fn saturation(log: &mut Log) -> Result<()> {
    for (g, bound) in [(Group::Sp(2), 2), (Group::SO(2), 2), (Group::Spin(2), 1)] {
        let rep = saturation_scan(g, bound, 4)?;
        for v in &rep.violations {
            log.check(false, format!("{g}: {:?}", v));
        }
        let first = rep.witnesses.first().map(|w| {
            let ws: Vec<String> = w.weights.iter().map(|x| x.to_string()).collect();
            let inv: Vec<String> = w.invariants.iter().map(|x| x.to_string()).collect();
            format!("{} invariants {}", ws.join(" "), inv.join(","))
        });
        if g == Group::Sp(2) {
            log.check(!rep.witnesses.is_empty(), "no factor-2 witness for Sp4".into());
        }
        log.note(format!(
            "{g}: {} triples, factor {}, {} witnesses{}",
            rep.triples,
            rep.factor,
            rep.witnesses.len(),
            first.map(|f| format!(", e.g. {f}")).unwrap_or_default()
        ));
    }
    Ok(())
}

fn cones(log: &mut Log, st: &Settings) -> Result<()> {
    for ty in [BcType::C, BcType::B] {
        for n in 2..=3 {
            let rep = compare_cones(ty, n, 3, st.cone_samples, st.seed)?;
            for d in rep.disagreements.iter().take(5) {
                log.check(false, format!("{ty:?} n={n}: {d:?}"));
            }
            log.check(rep.passed(), format!("{ty:?} n={n}: {} disagreements", rep.disagreements.len()));
            log.note(format!(
                "{ty} n={n}: {} points ({} members, {} on the boundary, {} degenerate), {} identity checks",
                rep.samples, rep.members, rep.boundary, rep.degenerate, rep.identity_checks
            ));
        }
    }
    Ok(())
}

fn suites(log: &mut Log, st: &Settings) -> Result<()> {
    // cell statistics
    let mut cells = 0;
    for n in 1..=4 {
        for r in 1..=n {
            for i in CIndex::all(r, n) {
                cells += 1;
                let stats = i.cell_stats();
                let w = i.weyl_element();
                let letters = w.reduced_word().iter().filter(|&&k| k == n).count();
                log.check(stats.mu == letters, format!("{i}: mu {} vs {letters} letters", stats.mu));
                log.check(w.length() == stats.dim, format!("{i}: length {} vs dim {}", w.length(), stats.dim));
                log.check(
                    stats.sym2 + stats.wedge2 == dominance_count(i.elements(), &i.bar()),
                    format!("{i}: sym2 + wedge2"),
                );
                log.check(
                    stats.cosym2 as i64 - stats.cowedge2 as i64 == stats.mubar(r) as i64,
                    format!("{i}: cosym2 - cowedge2"),
                );
                log.check(
                    mu_function_value(&i) == r as i64 - 2 * stats.mu as i64,
                    format!("{i}: mu function"),
                );
            }
        }
    }
    log.note(format!("{cells} isotropic cells, n <= 4"));

    // theta relation and the three inequalities on nonvanishing triples
    let mut tuples = 0;
    for n in 1..=3 {
        for r in 1..=n {
            let all = CIndex::all(r, n);
            let ig_rr = crate::index::ig_dim(r, r) as i64;
            for t in multisets(all.len(), 3) {
                let idx: Vec<CIndex> = t.iter().map(|&k| all[k].clone()).collect();
                for i in &all {
                    if let Err(e) = theta_values(i, &idx, r, n) {
                        log.check(false, format!("{e}"));
                    }
                }
                if !ig_nonvanishing(&idx)? {
                    continue;
                }
                tuples += 1;
                let cosym: i64 = idx.iter().map(|i| i.cell_stats().cosym2 as i64).sum();
                let cowedge: i64 = idx.iter().map(|i| i.cell_stats().cowedge2 as i64).sum();
                let mubar: i64 = idx.iter().map(|i| i.cell_stats().mubar(r) as i64).sum();
                let r = r as i64;
                log.check(r * (r + 1) / 2 - cosym >= 0, format!("{idx:?}: first inequality"));
                log.check(mubar >= r - (ig_rr - cosym), format!("{idx:?}: second inequality"));
                log.check(r * (r - 1) / 2 - cowedge >= 0, format!("{idx:?}: third inequality"));
            }
        }
    }
    log.note(format!("theta relation on all triples, inequalities on {tuples} nonvanishing triples"));

    // Poincaré duality in the full flag varieties
    for ty in [BcType::B, BcType::C] {
        for n in 1..=3 {
            let w0 = SignedPerm::longest(ty, n);
            let e = SignedPerm::identity(ty, n);
            for u in SignedPerm::all(ty, n) {
                let prod = flag_structure_constants(&u, &w0.compose(&u))?;
                log.check(prod.get(&e) == Some(&BigInt::one()), format!("{ty:?} {u}: dual pairing"));
            }
        }
    }
    log.note("Poincaré duality pairings equal 1 for B and C, n <= 3".into());

    // LR symmetry and associativity
    let small: Vec<Partition> = (0..=4).flat_map(|k| crate::partition::partitions_of(k, 4)).collect();
    let mut triples = 0;
    for a in &small {
        for b in &small {
            for cc in &small {
                if a.size() + b.size() + cc.size() > 8 {
                    continue;
                }
                triples += 1;
                let nu_all = crate::partition::partitions_of(a.size() + b.size(), 8);
                for nu in &nu_all {
                    if lr_coefficient(a, b, nu) != lr_coefficient(b, a, nu) {
                        log.check(false, format!("LR symmetry at {a} {b} {nu}"));
                    }
                }
                let left = times(&times(&single(a), b), cc);
                let bc = times(&single(b), cc);
                let mut right = Expansion::new();
                for (q, k) in &bc {
                    for (nu, d) in lr_product(a, q, 12, None) {
                        *right.entry(nu.trimmed()).or_default() += k * d;
                    }
                }
                log.check(left == right, format!("LR associativity at {a} {b} {cc}"));
            }
        }
    }
    log.note(format!("LR symmetry and associativity on {triples} triples of total size <= 8"));

    // duality equalities
    let mut dual_checks = 0;
    for r in 1..=3 {
        for k in 1..=3 {
            let ps = partitions_in_box(r, k);
            for t in multisets(ps.len(), 3) {
                let mu: Vec<Partition> = t.iter().map(|&i| ps[i].clone()).collect();
                let total: usize = mu.iter().map(|m| m.size()).sum();
                if total > 12 {
                    continue;
                }
                dual_checks += 1;
                log.check(ordinary_duality_check(&mu, r, k)?.holds(), format!("ordinary duality {mu:?} r={r} k={k}"));
                if total == r * k {
                    log.check(
                        grassmann_duality_check(&mu, r, k)?.holds(),
                        format!("Grassmann duality {mu:?} r={r} k={k}"),
                    );
                }
            }
        }
    }
    log.note(format!("{dual_checks} duality instances, r, k <= 3"));

    // properness of Schubert intersections for isotropic flags
    for n in 1..=3 {
        for m in 1..=n {
            for (form, ambient) in [(FormKind::Symplectic, 2 * n), (FormKind::OddOrthogonal, 2 * n + 1)] {
                let rep = properness_scan(form, ambient, m, 3, st.properness_trials, st.seed, &st.prime)?;
                for fl in rep.failures.iter().take(3) {
                    log.check(false, format!("{form} Gr({m},{ambient}): {fl:?}"));
                }
            }
        }
    }
    log.note(format!("properness: symplectic and symmetric forms, n <= 3, {} trials", st.properness_trials));
    let a = AIndex::new(vec![3], 6)?;
    let neg = crate::flag::mc_properness(&[a.clone(), a], FormKind::EvenOrthogonal, 5, st.seed, &st.prime)?;
    log.check(!neg.passed(), format!("even orthogonal control unexpectedly proper: {neg:?}"));
    log.note(format!(
        "even orthogonal control Gr(1,6) [3][3]: expected {}, observed {:?}",
        neg.expected, neg.observed
    ));
    Ok(())
}

type Expansion = std::collections::BTreeMap<Partition, u64>;

fn single(p: &Partition) -> Expansion {
    Expansion::from([(p.trimmed(), 1)])
}

fn times(x: &Expansion, p: &Partition) -> Expansion {
    let mut out = Expansion::new();
    for (q, c) in x {
        for (nu, d) in lr_product(q, p, 12, None) {
            *out.entry(nu.trimmed()).or_default() += c * d;
        }
    }
    out
}
