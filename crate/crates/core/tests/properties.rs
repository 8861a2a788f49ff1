mod common;

use proptest::prelude::*;
use utorsion_core::cobordism::{self, BandKind, Move, MoveSequence};
use utorsion_core::fumod::{homology, invariant_factors, smith_normal_form, torsion_order};
use utorsion_core::knots::{self, parse_knot, KnotExpr};
use utorsion_core::laurent::{gap_sequence, lspace_exponents, torus_alexander};
use utorsion_core::staircase::{mirror_complex, staircase_complex, tensor_complex};
use utorsion_core::{FUMatrix, GapSequence, LaurentPoly, UPoly};

use common::{fraction_free_rank, homology_oracle, naive_product};

fn gap_seq() -> impl Strategy<Value = GapSequence> {
    prop::collection::vec((1u32..5, 1u32..5), 0..4).prop_map(|pairs| {
        GapSequence::new(pairs.into_iter().flat_map(|(a, b)| [a, b]).collect()).unwrap()
    })
}

fn palindrome() -> impl Strategy<Value = GapSequence> {
    prop::collection::vec(1u32..5, 0..4).prop_map(|half| {
        let mut v = half.clone();
        v.extend(half.iter().rev());
        GapSequence::new(v).unwrap()
    })
}

fn small_knot() -> impl Strategy<Value = KnotExpr> {
    let leaf = prop_oneof![
        Just(KnotExpr::Unknot),
        (2u32..6).prop_map(|n| KnotExpr::torus(n, n + 1)),
        Just(KnotExpr::torus(2, 5)),
        Just(KnotExpr::torus(3, 5)),
    ];
    (leaf, any::<bool>()).prop_map(|(k, m)| if m { k.mirror() } else { k })
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(any::<bool>(), 0..6).prop_map(|bits| {
        UPoly::from_exponents(bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    })
}

fn matrix() -> impl Strategy<Value = FUMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(upoly(), c), r)
            .prop_map(|rows| FUMatrix::from_rows(rows).unwrap())
    })
}

fn moves() -> impl Strategy<Value = MoveSequence> {
    prop::collection::vec(0u8..5, 0..16).prop_map(|choices| {
        let mut count = 1u32;
        let mut out = Vec::new();
        for c in choices {
            let mv = match c {
                0 => Move::Birth,
                1 if count > 1 => Move::Death,
                2 => Move::Band(BandKind::Split),
                3 if count > 1 => Move::Band(BandKind::Merge),
                _ => Move::Band(BandKind::NonorientableSelf),
            };
            count = match mv {
                Move::Birth | Move::Band(BandKind::Split) => count + 1,
                Move::Death | Move::Band(BandKind::Merge) => count - 1,
                _ => count,
            };
            out.push(mv);
        }
        out.extend(std::iter::repeat_n(
            Move::Band(BandKind::Merge),
            count as usize - 1,
        ));
        MoveSequence::new(out)
    })
}

proptest! {
    #[test]
    fn staircase_homology_matches_oracle(g in gap_seq()) {
        let c = staircase_complex(&g).unwrap();
        let h = homology(&c).unwrap();
        let (free, exps) = homology_oracle(&c);
        prop_assert_eq!(free, 1);
        prop_assert_eq!(h.free_rank, 1);
        prop_assert_eq!(h.torsion_exponents, exps);
    }

    #[test]
    fn reversed_palindrome_same_complex(g in palindrome()) {
        prop_assert_eq!(g.reversed(), g.clone());
        let a = homology(&staircase_complex(&g).unwrap()).unwrap();
        let b = homology(&staircase_complex(&g.reversed()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reversal_preserves_torsion(g in gap_seq()) {
        let a = homology(&staircase_complex(&g).unwrap()).unwrap();
        let b = homology(&staircase_complex(&g.reversed()).unwrap()).unwrap();
        prop_assert_eq!(a.torsion_exponents, b.torsion_exponents);
    }

    #[test]
    fn mirror_preserves_torsion(g in gap_seq()) {
        let c = staircase_complex(&g).unwrap();
        let d = mirror_complex(&c).unwrap();
        prop_assert_eq!(homology(&c).unwrap().torsion_exponents, homology(&d).unwrap().torsion_exponents);
        prop_assert_eq!(mirror_complex(&d).unwrap(), c);
    }

    #[test]
    fn kunneth_max(a in small_knot(), b in small_knot()) {
        let ca = knots::complex_of(&a).unwrap();
        let cb = knots::complex_of(&b).unwrap();
        let t = tensor_complex(&ca, &cb).unwrap();
        let h = homology(&t).unwrap();
        prop_assert_eq!(h.free_rank, 1);
        let oa = torsion_order(&homology(&ca).unwrap());
        let ob = torsion_order(&homology(&cb).unwrap());
        prop_assert_eq!(torsion_order(&h), oa.max(ob));
        prop_assert_eq!(homology_oracle(&t).1, h.torsion_exponents);
    }

    #[test]
    fn snf_transforms(m in matrix()) {
        let f = smith_normal_form(&m).unwrap();
        let prod = naive_product(&naive_product(&f.left_transform, &m), &f.right_transform);
        prop_assert_eq!(prod, f.diagonal());
        prop_assert_eq!(f.rank, fraction_free_rank(&m));
        prop_assert!(f.invariant_factors.windows(2).all(|w| w[0].divides(&w[1])));
        prop_assert_eq!(invariant_factors(&m).unwrap(), f.invariant_factors.clone());
        prop_assert_eq!(invariant_factors(&m.transpose()).unwrap(), f.invariant_factors);
    }

    #[test]
    fn upoly_division(a in upoly(), b in upoly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn laurent_division(
        a in prop::collection::vec(-3i64..4, 1..6),
        b in prop::collection::vec(-3i64..4, 1..4),
        shift in -3i64..3,
    ) {
        let pa = LaurentPoly::from_terms(a.iter().enumerate().map(|(i, &c)| (c, i as i64 + shift)));
        let pb = LaurentPoly::from_terms(b.iter().enumerate().map(|(i, &c)| (c, i as i64)));
        prop_assume!(!pb.is_zero());
        let prod = &pa * &pb;
        prop_assert_eq!(prod.div_exact(&pb).unwrap(), pa);
    }

    #[test]
    fn stats_identities(s in moves()) {
        let st = cobordism::stats(&s).unwrap();
        prop_assert_eq!(st.chi, st.m as i64 - st.b as i64 + st.big_m as i64);
        prop_assert_eq!(st.gamma, -st.chi);
        prop_assert_eq!(st.norm, st.m.max(st.big_m) as i64 - st.chi);
        prop_assert_eq!(st.nonorientable, s.moves.contains(&Move::Band(BandKind::NonorientableSelf)));
    }

    #[test]
    fn normalize_preserves_counts(s in moves()) {
        let st = cobordism::stats(&s).unwrap();
        if let Ok(n) = cobordism::normalize(&s) {
            let ns = cobordism::stats(&n).unwrap();
            prop_assert_eq!((ns.m, ns.b, ns.big_m, ns.chi), (st.m, st.b, st.big_m, st.chi));
            // births first, deaths last
            let first_non_birth = n.moves.iter().position(|m| *m != Move::Birth).unwrap_or(n.moves.len());
            prop_assert!(n.moves[first_non_birth..].iter().all(|m| *m != Move::Birth));
            prop_assert_eq!(cobordism::normalize(&n).unwrap(), n);
        }
    }

    #[test]
    fn move_file_round_trip(s in moves()) {
        let back = MoveSequence::parse_move_file(&s.to_move_file()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn knot_display_round_trip(a in small_knot(), b in small_knot()) {
        let k = a.sum(b);
        let back = parse_knot(&k.to_string()).unwrap();
        prop_assert_eq!(knots::signature(&back), knots::signature(&k));
        prop_assert_eq!(back.to_string(), k.to_string());
    }
}

#[test]
fn torus_gaps_palindromic() {
    for q in 3..=11u32 {
        for p in 2..q {
            if (1..=p).filter(|d| p % d == 0 && q % d == 0).count() != 1 {
                continue;
            }
            let d = torus_alexander(p as i64, q as i64).unwrap();
            let g = gap_sequence(&lspace_exponents(&d).unwrap());
            assert!(g.is_palindromic(), "T({p},{q})");
            assert_eq!(
                g.as_slice(),
                common::gaps_oracle(p as usize, q as usize).as_slice()
            );
        }
    }
}
