use std::collections::BTreeMap;

use isohorn::coinvariant::{ig_nonvanishing, ig_product, og_product, ParabolicRing};
use isohorn::field::PrimeField;
use isohorn::flag::{sym2_condition, wedge2_condition};
use isohorn::index::{BIndex, CIndex};
use isohorn::partition::{partitions_in_box, Partition};
use isohorn::schubert_a::lr_product;
use isohorn::weyl::BcType;
use num_bigint::BigInt;

type Poly = BTreeMap<Vec<usize>, i64>;

fn tableaux(shape: &[usize], vars: usize) -> Vec<Vec<Vec<usize>>> {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(i, &l)| (0..l).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut t: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    fn rec(k: usize, cells: &[(usize, usize)], vars: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { t[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars {
            t[i][j] = v;
            rec(k + 1, cells, vars, t, out);
        }
    }
    rec(0, &cells, vars, &mut t, &mut out);
    out
}

fn schur(shape: &[usize], vars: usize) -> Poly {
    let mut p = Poly::new();
    for t in tableaux(shape, vars) {
        let mut e = vec![0; vars];
        for v in t.iter().flatten() {
            e[*v] += 1;
        }
        *p.entry(e).or_default() += 1;
    }
    p
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

// peel off Schur functions by lex-largest monomial
fn peel(mut p: Poly, vars: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = p.iter().next_back() {
        let lead = lead.clone();
        let s = schur(&lead, vars);
        for (e, k) in s {
            *p.entry(e).or_default() -= c * k;
        }
        p.retain(|_, x| *x != 0);
        out.insert(lead, c);
    }
    out
}

#[test]
fn lr_matches_schur_polynomials() {
    let vars = 3;
    let shapes = partitions_in_box(3, 3);
    for a in &shapes {
        for b in &shapes {
            if a.size() + b.size() > 7 {
                continue;
            }
            let expected = peel(mul(&schur(a.parts(), vars), &schur(b.parts(), vars)), vars);
            let got: BTreeMap<Vec<usize>, i64> = lr_product(a, b, vars, None)
                .into_iter()
                .map(|(p, c)| (p.with_len(vars).unwrap().parts().to_vec(), c as i64))
                .collect();
            assert_eq!(got, expected, "{a} * {b}");
        }
    }
}

#[test]
fn symplectic_line_space_is_projective_space() {
    for n in 1..=4 {
        let cells = CIndex::all(1, n);
        let top = 2 * n - 1;
        for a in &cells {
            for b in &cells {
                let prod = ig_product(&[a.clone(), b.clone()]).unwrap();
                let k = a.cell_stats().codim + b.cell_stats().codim;
                if k > top {
                    assert!(prod.is_empty());
                    continue;
                }
                assert_eq!(prod.len(), 1, "{a} {b}");
                let (c, coeff) = prod.iter().next().unwrap();
                assert_eq!(c.cell_stats().codim, k);
                assert_eq!(*coeff, BigInt::from(1));
            }
        }
    }
}

// odd quadric of dimension 2n-1: h^k = 2 e_k once k reaches n
#[test]
fn orthogonal_line_space_is_a_quadric() {
    for n in 1..=4 {
        let cells = BIndex::all(1, n);
        let top = 2 * n - 1;
        for a in &cells {
            for b in &cells {
                let (p, q) = (a.cell_stats().codim, b.cell_stats().codim);
                let prod = og_product(&[a.clone(), b.clone()]).unwrap();
                if p + q > top {
                    assert!(prod.is_empty());
                    continue;
                }
                let expected = if p < n && q < n && p + q >= n { 2 } else { 1 };
                assert_eq!(prod.len(), 1);
                let (c, coeff) = prod.iter().next().unwrap();
                assert_eq!(c.cell_stats().codim, p + q);
                assert_eq!(*coeff, BigInt::from(expected), "{a} {b}");
            }
        }
    }
}

#[test]
fn parabolic_products_commute_and_associate() {
    for (ty, n, r) in [(BcType::C, 3, 2), (BcType::B, 3, 1), (BcType::C, 2, 1), (BcType::B, 2, 2)] {
        let ring = ParabolicRing::get(ty, n, r).unwrap();
        let len = ring.len();
        for a in 0..len {
            for b in 0..len {
                assert_eq!(ring.product(&[a, b]).unwrap(), ring.product(&[b, a]).unwrap());
                for c in 0..len {
                    let abc = ring.product(&[a, b, c]).unwrap();
                    let bca = ring.product(&[b, c, a]).unwrap();
                    assert_eq!(abc, bca);
                }
            }
        }
    }
}

#[test]
fn lagrangian_nonvanishing_matches_symmetric_forms() {
    let f = PrimeField::new(1_000_003).unwrap();
    for r in 1..=3 {
        let cells = CIndex::all(r, r);
        let dim = r * (r + 1) / 2;
        for a in &cells {
            for b in &cells {
                for c in &cells {
                    let t = [a.clone(), b.clone(), c.clone()];
                    let codim: usize = t.iter().map(|i| i.cell_stats().codim).sum();
                    if codim != dim {
                        continue;
                    }
                    let cond = sym2_condition(&t, 3, 7, &f).unwrap();
                    assert_eq!(ig_nonvanishing(&t).unwrap(), cond.holds(), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn single_factor_constraints_have_expected_size() {
    let f = PrimeField::new(1_000_003).unwrap();
    for n in 1..=3 {
        for r in 1..=n {
            for i in CIndex::all(r, n) {
                let c = sym2_condition(std::slice::from_ref(&i), 2, 3, &f).unwrap();
                assert!(c.holds(), "{i}");
            }
            for j in BIndex::all(r, n) {
                let c = wedge2_condition(std::slice::from_ref(&j), 2, 3, &f).unwrap();
                assert!(c.holds(), "{j}");
            }
        }
    }
}

#[test]
fn dual_cells_pair_to_one() {
    for (ty, n, r) in [(BcType::C, 3, 2), (BcType::B, 3, 2), (BcType::C, 3, 3)] {
        let ring = ParabolicRing::get(ty, n, r).unwrap();
        for a in 0..ring.len() {
            let mates: Vec<usize> = (0..ring.len())
                .filter(|&b| ring.codim(a) + ring.codim(b) == ring.dim())
                .filter(|&b| ring.point_coefficient(&[a, b]).unwrap() != BigInt::from(0))
                .collect();
            assert_eq!(mates.len(), 1);
            assert_eq!(ring.point_coefficient(&[a, mates[0]]).unwrap(), BigInt::from(1));
        }
    }
}

#[test]
fn partition_box_counts() {
    let p = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(partitions_in_box(2, 2).len(), 6);
    assert!(partitions_in_box(2, 2).contains(&p));
}
