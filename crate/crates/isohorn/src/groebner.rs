//! Buchberger's algorithm over a prime field, used to measure the dimension
//! of small affine varieties.

use std::cmp::Ordering;

use rand::Rng;

use crate::field::{Field, PrimeField};

pub const MAX_VARS: usize = 12;

/// Monomial packed so that integer order is graded reverse lexicographic order:
/// the degree sits in the top bits and variable `k` occupies byte `k` as
/// `255 - exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(u128);

const DEG_SHIFT: u32 = 96;
const ONES: u128 = (1 << DEG_SHIFT) - 1;

impl Mono {
    pub fn one() -> Self {
        Mono(ONES)
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable {i} out of range");
        Mono(ONES - (1 << (8 * i)) + (1 << DEG_SHIFT))
    }

    pub fn exponent(&self, k: usize) -> u8 {
        255 - (self.0 >> (8 * k)) as u8
    }

    pub fn degree(&self) -> u16 {
        (self.0 >> DEG_SHIFT) as u16
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0 + o.0 - ONES)
    }

    fn divides(&self, o: &Mono) -> bool {
        self.degree() <= o.degree() && (0..MAX_VARS).all(|k| self.exponent(k) <= o.exponent(k))
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0 - o.0 + ONES)
    }

    fn lcm(&self, o: &Mono) -> Mono {
        let mut key = ONES;
        let mut d: u128 = 0;
        for k in 0..MAX_VARS {
            let e = self.exponent(k).max(o.exponent(k)) as u128;
            key -= e << (8 * k);
            d += e;
        }
        Mono(key + (d << DEG_SHIFT))
    }

    fn coprime(&self, o: &Mono) -> bool {
        (0..MAX_VARS).all(|k| self.exponent(k) == 0 || o.exponent(k) == 0)
    }

    /// Variables appearing in the monomial, as a bit mask.
    fn support(&self) -> u32 {
        (0..MAX_VARS).filter(|&k| self.exponent(k) > 0).fold(0, |m, k| m | (1 << k))
    }
}

/// Polynomial with terms sorted by decreasing monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<(Mono, u64)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: u64) -> Self {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        Poly { terms: vec![(Mono::var(i), 1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::one()
    }

    fn lead(&self) -> &(Mono, u64) {
        &self.terms[0]
    }

    fn normalize(mut terms: Vec<(Mono, u64)>) -> Poly {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        terms.retain(|t| t.1 != 0);
        Poly { terms }
    }

    pub fn add(&self, o: &Poly, f: &PrimeField) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&self.terms[i].1, &o.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: u64, f: &PrimeField) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, &c))).collect() }
    }

    fn mul_term(&self, m: &Mono, c: u64, f: &PrimeField) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, a)| (n.mul(m), f.mul(a, &c))).collect() }
    }

    pub fn mul(&self, o: &Poly, f: &PrimeField) -> Poly {
        let (small, big) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut acc: Vec<(Mono, u64)> = Vec::new();
        let mut scratch = Vec::new();
        for (m, c) in &small.terms {
            sub_shifted(&acc, &big.terms, *m, f.neg(c), f, &mut scratch);
            std::mem::swap(&mut acc, &mut scratch);
        }
        Poly { terms: acc }
    }

    pub fn sub(&self, o: &Poly, f: &PrimeField) -> Poly {
        self.add(&o.scale(f.neg(&1), f), f)
    }

    /// Affine-linear form `c + Σ a_i x_i`.
    pub fn linear(constant: u64, coeffs: &[u64]) -> Poly {
        let mut terms: Vec<(Mono, u64)> = coeffs.iter().enumerate().map(|(i, &a)| (Mono::var(i), a)).collect();
        terms.push((Mono::one(), constant));
        Poly::normalize(terms)
    }

    fn monic(&self, f: &PrimeField) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(&self.lead().1);
        self.scale(inv, f)
    }
}

/// `out = p - c * q * g` for sorted term lists; `q` preserves the order.
fn sub_shifted(p: &[(Mono, u64)], g: &[(Mono, u64)], q: Mono, c: u64, f: &PrimeField, out: &mut Vec<(Mono, u64)>) {
    out.clear();
    let neg = f.neg(&c);
    let (mut i, mut j) = (0, 0);
    while i < p.len() || j < g.len() {
        let gm = g.get(j).map(|t| t.0.mul(&q));
        let ord = match (p.get(i), gm) {
            (Some(a), Some(b)) => a.0.cmp(&b),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), f.mul(&g[j].1, &neg)));
                j += 1;
            }
            Ordering::Equal => {
                let v = f.add(&p[i].1, &f.mul(&g[j].1, &neg));
                if v != 0 {
                    out.push((p[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
}

/// Full reduction modulo a list of monic polynomials.
fn reduce(p: &Poly, basis: &[Poly], f: &PrimeField) -> Poly {
    let mut cur = p.terms.clone();
    let mut head = 0;
    let mut scratch = Vec::new();
    let mut rem = Vec::new();
    while head < cur.len() {
        let (lm, lc) = cur[head];
        match basis.iter().find(|g| g.lead().0.divides(&lm)) {
            Some(g) => {
                let q = lm.div(&g.lead().0);
                let c = f.mul(&lc, &f.inv(&g.lead().1));
                sub_shifted(&cur[head + 1..], &g.terms[1..], q, c, f, &mut scratch);
                std::mem::swap(&mut cur, &mut scratch);
                head = 0;
            }
            None => {
                rem.push((lm, lc));
                head += 1;
            }
        }
    }
    Poly { terms: rem }
}

fn s_poly(a: &Poly, b: &Poly, f: &PrimeField) -> Poly {
    let l = a.lead().0.lcm(&b.lead().0);
    let pa = a.mul_term(&l.div(&a.lead().0), f.inv(&a.lead().1), f);
    let pb = b.mul_term(&l.div(&b.lead().0), f.inv(&b.lead().1), f);
    pa.sub(&pb, f)
}

/// Reduced Groebner basis for grevlex. A basis `[1]` means the ideal is the unit ideal.
pub fn groebner(input: &[Poly], f: &PrimeField) -> Vec<Poly> {
    let mut g: Vec<Poly> = Vec::new();
    for p in input {
        let r = reduce(p, &g, f);
        if !r.is_zero() {
            if r.is_constant() {
                return vec![Poly::constant(1)];
            }
            g.push(r.monic(f));
        }
    }
    let pair = |g: &[Poly], i: usize, j: usize| (g[i].lead().0.lcm(&g[j].lead().0), i, j);
    let mut pairs: Vec<(Mono, usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| pair(&g, i, j)).collect();
    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let k = (0..pairs.len()).min_by_key(|&k| pairs[k].0).unwrap();
        let (l, i, j) = pairs.swap_remove(k);
        let (li, lj) = (g[i].lead().0, g[j].lead().0);
        if li.coprime(&lj) {
            continue;
        }
        let pending = |a: usize, b: usize| pairs.iter().any(|p| (p.1, p.2) == (a.min(b), a.max(b)));
        let chain = (0..g.len()).any(|m| m != i && m != j && g[m].lead().0.divides(&l) && !pending(i, m) && !pending(j, m));
        if chain {
            continue;
        }
        let r = reduce(&s_poly(&g[i], &g[j], f), &g, f);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Poly::constant(1)];
        }
        let idx = g.len();
        g.push(r.monic(f));
        pairs.extend((0..idx).map(|m| pair(&g, m, idx)));
    }
    // minimal, then reduced
    let mut keep: Vec<Poly> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lm = p.lead().0;
        let redundant = g.iter().enumerate().any(|(m, q)| {
            m != k && q.lead().0.divides(&lm) && (q.lead().0 != lm || m < k)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Poly> = keep.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, p)| p.clone()).collect();
        let lead = Poly { terms: vec![keep[k].terms[0]] };
        let tail = Poly { terms: keep[k].terms[1..].to_vec() };
        out.push(lead.add(&reduce(&tail, &others, f), f).monic(f));
    }
    out.sort_by(|a, b| b.lead().0.cmp(&a.lead().0));
    out
}

/// Krull dimension of `F_p[x_1..x_nvars] / I`, or -1 for the unit ideal.
pub fn affine_dimension(input: &[Poly], nvars: usize, f: &PrimeField) -> i64 {
    assert!(nvars <= MAX_VARS, "too many variables");
    if input.iter().all(|p| p.is_zero()) {
        return nvars as i64;
    }
    let g = groebner(input, f);
    if g.iter().any(|p| p.is_constant()) {
        return -1;
    }
    let supports: Vec<u32> = g.iter().map(|p| p.lead().0.support()).collect();
    let mut best = 0;
    for set in 0u32..(1 << nvars) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Whether the variety has dimension above `d`: cuts with `d + 1` random affine
/// hyperplanes and tests for the unit ideal.
pub fn dimension_above<R: Rng>(input: &[Poly], nvars: usize, d: i64, f: &PrimeField, rng: &mut R) -> bool {
    if d >= nvars as i64 {
        return false;
    }
    let mut all = input.to_vec();
    for _ in 0..=d {
        let coeffs: Vec<u64> = (0..nvars).map(|_| rng.random_range(0..f.modulus())).collect();
        all.push(Poly::linear(rng.random_range(0..f.modulus()), &coeffs));
    }
    !groebner(&all, f).iter().any(|p| p.is_constant())
}

/// Dimension by repeated slicing; agrees with [`affine_dimension`] outside a
/// set of slices of probability about `degree / p`.
pub fn sliced_dimension<R: Rng>(input: &[Poly], nvars: usize, f: &PrimeField, rng: &mut R) -> i64 {
    let mut d = -1;
    while dimension_above(input, nvars, d, f, rng) {
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn linear_systems() {
        let f = f();
        let x = Poly::var(0);
        let y = Poly::var(1);
        // x = y, x = 2: a point
        let eqs = vec![x.sub(&y, &f), x.sub(&Poly::constant(2), &f)];
        assert_eq!(affine_dimension(&eqs, 2, &f), 0);
        // x = 1, x = 2: empty
        let eqs = vec![x.sub(&Poly::constant(1), &f), x.sub(&Poly::constant(2), &f)];
        assert_eq!(affine_dimension(&eqs, 2, &f), -1);
        assert_eq!(affine_dimension(&[Poly::zero()], 3, &f), 3);
    }

    #[test]
    fn curves_and_unions() {
        let f = f();
        let x = Poly::var(0);
        let y = Poly::var(1);
        let z = Poly::var(2);
        // xy = 0 in 3-space: dimension 2
        assert_eq!(affine_dimension(&[x.mul(&y, &f)], 3, &f), 2);
        // twisted cubic: y = x^2, z = x^3
        let eqs = vec![y.sub(&x.mul(&x, &f), &f), z.sub(&x.mul(&y, &f), &f)];
        assert_eq!(affine_dimension(&eqs, 3, &f), 1);
        // x^2 + 1 = 0 and x = 0 -> empty
        let eqs = vec![x.mul(&x, &f).add(&Poly::constant(1), &f), x.clone()];
        assert_eq!(affine_dimension(&eqs, 1, &f), -1);
        // xy - 1, x: empty (hyperbola avoids the axis)
        let eqs = vec![x.mul(&y, &f).sub(&Poly::constant(1), &f), x];
        assert_eq!(affine_dimension(&eqs, 2, &f), -1);
    }

    #[test]
    fn slicing_matches_elimination() {
        use rand::SeedableRng;
        let f = PrimeField::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let x = Poly::var(0);
        let y = Poly::var(1);
        let z = Poly::var(2);
        let systems = vec![
            vec![x.mul(&y, &f)],
            vec![y.sub(&x.mul(&x, &f), &f), z.sub(&x.mul(&y, &f), &f)],
            vec![x.mul(&y, &f).sub(&Poly::constant(1), &f), x.clone()],
            vec![x.mul(&z, &f), y.mul(&z, &f)],
            vec![Poly::zero()],
        ];
        for eqs in systems {
            assert_eq!(sliced_dimension(&eqs, 3, &f, &mut rng), affine_dimension(&eqs, 3, &f));
        }
    }

    #[test]
    fn grevlex_order() {
        let x = Mono::var(0);
        let y = Mono::var(1);
        let z = Mono::var(2);
        assert!(x > y && y > z);
        // x*z vs y^2: same degree, last differing variable z; x*z has more z so is smaller
        assert!(y.mul(&y) > x.mul(&z));
    }
}
