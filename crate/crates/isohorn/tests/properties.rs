use isohorn::eigencone::membership;
use isohorn::index::{BIndex, CIndex};
use isohorn::parse::{parse_index_list, parse_partition_list, parse_rational_list};
use isohorn::partition::Partition;
use isohorn::rep::{invariant_dim, sl_weight};
use isohorn::schubert_a::lr_product;
use isohorn::weight::{Group, Weight};
use isohorn::weyl::{BcType, SignedPerm};
use num_rational::BigRational;
use proptest::prelude::*;

fn partition(rows: usize, width: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=width, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn cindex(r: usize, n: usize) -> impl Strategy<Value = CIndex> {
    let all = CIndex::all(r, n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn chamber(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(0i64..20, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.into_iter().map(|x| BigRational::from_integer(x.into())).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flip_and_conjugate_are_involutions(p in partition(4, 5)) {
        prop_assert_eq!(p.conjugate().conjugate().trimmed(), p.trimmed());
        let f = p.flip(5).unwrap();
        prop_assert_eq!(f.flip(4).unwrap(), p.clone());
        prop_assert_eq!(p.dual(5).unwrap().dual(5).unwrap(), p);
    }

    #[test]
    fn lr_products_commute(a in partition(3, 3), b in partition(3, 3)) {
        prop_assert_eq!(lr_product(&a, &b, 3, None), lr_product(&b, &a, 3, None));
        let total: u64 = lr_product(&a, &b, 3, Some(3)).values().sum();
        let wide: u64 = lr_product(&a, &b, 3, None).values().sum();
        prop_assert!(total <= wide);
    }

    #[test]
    fn isotropic_cell_counts(i in (1usize..=4).prop_flat_map(|n| (1..=n).prop_flat_map(move |r| cindex(r, n)))) {
        let st = i.cell_stats();
        let r = i.r();
        prop_assert_eq!(st.sym2 + st.cosym2, r * (r + 1) / 2);
        prop_assert_eq!(st.wedge2 + st.cowedge2, r * (r - 1) / 2);
        prop_assert_eq!(i.weyl_element().length(), st.dim);
        prop_assert_eq!(CIndex::from_weyl(&i.weyl_element(), r), i.clone());
        let j = BIndex::from_c_pattern(&i);
        prop_assert_eq!(j.c_pattern(), i);
    }

    #[test]
    fn signed_permutations_form_a_group(seed in 0usize..384, other in 0usize..384) {
        let all = SignedPerm::all(BcType::C, 4);
        let (u, v) = (&all[seed % all.len()], &all[other % all.len()]);
        prop_assert!(u.compose(&u.inverse()).is_identity());
        let uv = u.compose(v);
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!(SignedPerm::from_word(BcType::C, 4, &u.reduced_word()), u.clone());
    }

    #[test]
    fn invariants_ignore_factor_order(a in partition(3, 3), b in partition(3, 3), c in partition(3, 3)) {
        let ws: Vec<Weight> = [&a, &b, &c].iter().map(|p| sl_weight(p, 3).unwrap()).collect();
        let g = Group::SL(3);
        let base = invariant_dim(g, &ws).unwrap();
        prop_assert_eq!(invariant_dim(g, &[ws[2].clone(), ws[0].clone(), ws[1].clone()]).unwrap(), base.clone());
        prop_assert_eq!(invariant_dim(g, &[ws[1].clone(), ws[0].clone(), ws[2].clone()]).unwrap(), base);
    }

    #[test]
    fn cone_is_closed_under_scaling(h in prop::collection::vec(chamber(2), 3), k in 1i64..6) {
        for g in [Group::Sp(2), Group::SO(2)] {
            let base = membership(g, &h).unwrap();
            let scaled: Vec<Vec<BigRational>> =
                h.iter().map(|x| x.iter().map(|c| c * BigRational::from_integer(k.into())).collect()).collect();
            prop_assert_eq!(membership(g, &scaled).unwrap(), base);
        }
        // sums of members stay members
        let zero = vec![BigRational::from_integer(0.into()); 2];
        let pair = vec![h[0].clone(), h[0].clone(), zero];
        prop_assert!(membership(Group::Sp(2), &pair).unwrap());
    }

    #[test]
    fn parsers_round_trip(lists in prop::collection::vec(prop::collection::vec(1usize..30, 0..4), 1..4),
                          nums in prop::collection::vec((-50i64..50, 1i64..9), 1..5)) {
        let text: Vec<String> = lists.iter()
            .map(|l| format!("[{}]", l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        prop_assert_eq!(parse_index_list(&text.join(" ")).unwrap(), lists);
        let qs: Vec<BigRational> = nums.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect();
        let text = format!("({})", qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(","));
        prop_assert_eq!(parse_rational_list(&text).unwrap(), vec![qs]);
    }

    #[test]
    fn partition_text_round_trips(p in partition(4, 9)) {
        let text = format!("({})", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        prop_assert_eq!(parse_partition_list(&text).unwrap(), vec![p]);
    }
}
