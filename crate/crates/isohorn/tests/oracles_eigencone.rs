use isohorn::eigencone::{
    compare_cones, generate_inequalities, generate_system, membership, omega_identity, weight_cone_cross_check,
    weights_to_cartan, Generation,
};
use isohorn::partition::partitions_in_box;
use isohorn::rep::sl_weight;
use isohorn::schubert_a::sl_invariant_dim;
use isohorn::weight::{Group, Weight};
use isohorn::weyl::BcType;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

// integral points of the SU(r) cone are exactly the triples with an invariant
#[test]
fn su_cone_points_carry_invariants() {
    for r in [2, 3, 4] {
        let width = if r == 4 { 3 } else { 4 };
        let boxes = partitions_in_box(r, width);
        for (ia, a) in boxes.iter().enumerate() {
            for (ib, b) in boxes.iter().enumerate().skip(ia) {
                for c in boxes.iter().skip(ib) {
                    if (a.size() + b.size() + c.size()) % r != 0 {
                        continue;
                    }
                    let mu = [a.clone(), b.clone(), c.clone()];
                    let ws: Vec<Weight> = mu.iter().map(|p| sl_weight(p, r).unwrap()).collect();
                    let inside = membership(Group::SL(r), &weights_to_cartan(&ws)).unwrap();
                    let inv = sl_invariant_dim(&mu, r).unwrap() > 0.into();
                    assert_eq!(inside, inv, "SU({r}) {a} {b} {c}");
                }
            }
        }
    }
}

fn triangle(a: i64, b: i64, c: i64) -> bool {
    a <= b + c && b <= a + c && c <= a + b
}

#[test]
fn rank_one_cones_are_triangles() {
    for g in [Group::Sp(1), Group::SO(1), Group::Spin(1)] {
        for a in 0..=6 {
            for b in 0..=6 {
                for c in 0..=6 {
                    let h = [q(&[a]), q(&[b]), q(&[c])];
                    assert_eq!(membership(g, &h).unwrap(), triangle(a, b, c), "{g} {a} {b} {c}");
                }
            }
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.random_range(0..=9)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    q(&v)
}

#[test]
fn cone_points_satisfy_every_nonvanishing_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in [Group::Sp(2), Group::SO(2)] {
        let full = generate_system(g, 3, Generation::Nonvanishing).unwrap();
        let point = generate_inequalities(g, 3).unwrap();
        assert!(full.inequalities.len() >= point.inequalities.len());
        for _ in 0..300 {
            let h: Vec<Vec<BigRational>> = (0..3).map(|_| random_point(&mut rng, 2)).collect();
            assert_eq!(point.contains(&h).unwrap(), full.contains(&h).unwrap(), "{g} {h:?}");
        }
    }
}

#[test]
fn membership_ignores_positive_scaling_and_factor_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in [Group::Sp(2), Group::SO(2), Group::Sp(3)] {
        for _ in 0..100 {
            let h: Vec<Vec<BigRational>> = (0..3).map(|_| random_point(&mut rng, g.rank())).collect();
            let base = membership(g, &h).unwrap();
            let k = BigRational::new(rng.random_range(1..=7).into(), rng.random_range(1..=5).into());
            let scaled: Vec<Vec<BigRational>> = h.iter().map(|x| x.iter().map(|c| c * &k).collect()).collect();
            assert_eq!(membership(g, &scaled).unwrap(), base);
            let rotated = vec![h[1].clone(), h[2].clone(), h[0].clone()];
            assert_eq!(membership(g, &rotated).unwrap(), base);
        }
    }
}

#[test]
fn isotropic_and_ambient_cones_agree() {
    for (ty, n) in [(BcType::C, 2), (BcType::B, 2), (BcType::C, 3)] {
        let rep = compare_cones(ty, n, 3, 120, 9).unwrap();
        assert!(rep.passed(), "{ty:?} {n}: {:?}", rep.disagreements.first());
        assert!(rep.members > 0 && rep.members < rep.samples);
    }
}

#[test]
fn pairings_agree_after_embedding() {
    for ty in [BcType::B, BcType::C] {
        for h in [[3, 2, 0], [7, 7, 1], [4, 1, 1]] {
            assert!(omega_identity(ty, &q(&h)).unwrap() > 0);
        }
    }
}

#[test]
fn weight_cross_check_examples() {
    let g = Group::Sp(2);
    let w2 = Weight::fundamental(g, 2).unwrap();
    let rep = weight_cone_cross_check(&[w2.clone(), w2.clone(), w2], 3).unwrap();
    assert!(rep.member);
    assert_eq!(rep.first_invariant, Some(2));

    let zero = Weight::zero(Group::SO(2));
    let rep = weight_cone_cross_check(&[zero.clone(), zero.clone(), zero], 1).unwrap();
    assert!(rep.member && rep.first_invariant == Some(1));

    let g = Group::SL(2);
    let one = Weight::from_ints(g, &[1, 0]).unwrap();
    let two = Weight::from_ints(g, &[2, 0]).unwrap();
    let rep = weight_cone_cross_check(&[one.clone(), one.clone(), two], 2).unwrap();
    assert!(rep.member && rep.first_invariant == Some(1));
    let three = Weight::from_ints(g, &[3, 0]).unwrap();
    let rep = weight_cone_cross_check(&[one.clone(), one, three], 3).unwrap();
    assert!(!rep.member && rep.first_invariant.is_none());
}
