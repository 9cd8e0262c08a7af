use isohorn::field::{identity, PrimeField, Rationals};
use isohorn::flag::{
    hom_dim, mc_properness, properness_scan, random_flag, random_flags, schubert_position, theorem_key_check, FormKind,
};
use isohorn::index::AIndex;
use isohorn::partition::Partition;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fp() -> PrimeField {
    PrimeField::new(1_000_003).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

// for lines, Hom(M, V) with conditions is an intersection of generic subspaces
#[test]
fn line_hom_spaces_are_generic_intersections() {
    let f = fp();
    for form in [FormKind::Plain, FormKind::Symplectic] {
        for n in 1..=3 {
            let big = 2 * n;
            for a in 0..=big {
                for b in 0..=big {
                    for c in 0..=big {
                        let mu = [p(&[a]), p(&[b]), p(&[c])];
                        let (flags, _) = random_flags(&f, form, big, 3, (a * 100 + b * 10 + c) as u64).unwrap();
                        let mflags = vec![identity(&f, 1); 3];
                        let d = hom_dim(&f, &mu, &mflags, &flags).unwrap();
                        assert_eq!(d, big.saturating_sub(a + b + c), "{form} n={n} {a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn key_check_examples() {
    let f = fp();
    let zero = theorem_key_check(&[p(&[0]), p(&[0]), p(&[0])], 2, 2, 1, &f).unwrap();
    assert!(zero.a_holds && zero.b_holds);
    assert_eq!(zero.hom_dim, 4);
    let edge = theorem_key_check(&[p(&[2]), p(&[1]), p(&[1])], 2, 2, 1, &f).unwrap();
    assert!(edge.a_holds && edge.b_holds && edge.hom_dim == 0);
    // first row sum exceeds the bound: both sides fail
    let bad = theorem_key_check(&[p(&[4, 4, 0]), p(&[4, 0, 0]), p(&[0, 0, 0])], 2, 3, 1, &f).unwrap();
    assert!(bad.agrees());
    let bad = theorem_key_check(&[p(&[4, 4, 4]), p(&[0, 0, 0]), p(&[0, 0, 0])], 2, 3, 1, &f).unwrap();
    assert!(bad.agrees());
    assert!(!bad.b_holds || bad.hom_dim as i64 == bad.expected);
}

#[test]
fn positions_of_adapted_subspaces() {
    let f = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 5;
    let flag = random_flag(&f, FormKind::Plain, n, 17).unwrap();
    for m in 1..=3 {
        for a in AIndex::all(m, n) {
            // column k: the basis vector at a_k plus lower ones
            let mut x = vec![vec![BigRational::from_integer(0.into()); m]; n];
            for (k, &e) in a.elements().iter().enumerate() {
                for j in 0..e {
                    let c: i64 = if j + 1 == e { 1 } else { rng.random_range(-3..=3) };
                    for i in 0..n {
                        x[i][k] += &flag.basis()[i][j] * BigRational::from_integer(c.into());
                    }
                }
            }
            assert_eq!(schubert_position(&f, &x, &flag).unwrap(), a);
        }
    }
}

#[test]
fn small_scans_are_proper() {
    let f = fp();
    for (form, ambient) in [(FormKind::Symplectic, 4), (FormKind::OddOrthogonal, 5), (FormKind::Plain, 4)] {
        let rep = properness_scan(form, ambient, 2, 3, 1, 4, &f).unwrap();
        assert!(rep.passed(), "{form} {ambient}: {:?}", rep.failures.first());
        assert!(rep.tuples > 0);
    }
}

#[test]
fn even_orthogonal_lines_are_not_proper() {
    let f = fp();
    let a = AIndex::new(vec![3], 6).unwrap();
    let rep = mc_properness(&[a.clone(), a], FormKind::EvenOrthogonal, 3, 2, &f).unwrap();
    assert_eq!(rep.expected, -1);
    assert!(!rep.passed());
}
