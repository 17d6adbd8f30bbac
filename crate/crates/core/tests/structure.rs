mod common;

use common::{bracket_jones, corpus_upto, random_knot};
use knotkh::corpus::lookup;
use knotkh::invariants::{jones, jones_from_complex};
use knotkh::kh::build_face_complex;
use knotkh::{build_complex, homology, homology_fast, Diagram, RankTable};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn kh(d: &Diagram) -> RankTable {
    homology_fast(d, true).unwrap()
}

fn convolve(a: &RankTable, b: &RankTable) -> RankTable {
    RankTable::new(
        true,
        a.iter().flat_map(|((i, j), x)| b.iter().map(move |((k, l), y)| ((i + k, j + l), x * y))),
    )
}

fn braid_knot() -> impl Strategy<Value = Diagram> {
    (2usize..=4)
        .prop_flat_map(|s| (Just(s), prop::collection::vec((1..s as i32, any::<bool>()), s - 1..=8)))
        .prop_filter_map("closure is a knot", |(s, w)| {
            let word: Vec<i32> = w.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
            Diagram::from_braid(s, &word).ok().filter(Diagram::is_knot)
        })
}

#[test]
fn d_squared_vanishes_on_corpus() {
    for e in corpus_upto(10) {
        for reduced in [false, true] {
            build_complex(&e.diagram, reduced).unwrap().check_d_squared().unwrap();
        }
    }
}

#[test]
fn reidemeister_variants_agree() {
    for group in [
        &["U", "unknot_kink", "unknot_kink_neg", "unknot_two_kinks", "unknot_kinks_mixed", "unknot_r2"][..],
        &["trefoil", "3_1", "3_1_kink"],
        &["4_1", "4_1_kink", "4_1_kink_neg", "4_1_shift"],
    ] {
        let first = kh(&lookup(group[0]).unwrap().diagram);
        for name in &group[1..] {
            assert_eq!(kh(&lookup(name).unwrap().diagram), first, "{name}");
        }
    }
}

#[test]
fn mirror_reverse_and_basepoint() {
    for e in corpus_upto(8) {
        let d = &e.diagram;
        let t = kh(d);
        assert_eq!(kh(&d.mirror()), t.flipped(), "{}", e.name);
        assert_eq!(kh(&d.reverse().unwrap()), t, "{}", e.name);
        for b in 1..=d.edge_count() {
            assert_eq!(kh(&d.with_basepoint(b).unwrap()), t, "{} base {b}", e.name);
        }
    }
}

#[test]
fn kunneth_for_connected_sums() {
    let names = ["trefoil", "4_1", "5_2", "unknot_kink"];
    for a in names {
        for b in names {
            let (x, y) = (lookup(a).unwrap().diagram, lookup(b).unwrap().diagram);
            let sum = x.connected_sum(&y).unwrap();
            assert_eq!(kh(&sum), convolve(&kh(&x), &kh(&y)), "{a} # {b}");
        }
    }
    let t = lookup("trefoil").unwrap().diagram;
    let granny = t.connected_sum(&t).unwrap();
    let square = t.connected_sum(&t.mirror()).unwrap();
    assert_eq!(kh(&granny).total_rank(), 9);
    assert_eq!(kh(&square).total_rank(), 9);
    assert_ne!(kh(&granny), kh(&square));
}

#[test]
fn skein_triangle() {
    // the two faces of the cube at a crossing fit into a long exact sequence
    // with the whole complex
    for e in corpus_upto(8) {
        let d = &e.diagram;
        let whole = build_complex(d, true).unwrap();
        let rank = homology(&whole).unwrap().total_rank();
        for k in 0..d.crossing_count() {
            let f0 = build_face_complex(d, true, k, false).unwrap();
            let f1 = build_face_complex(d, true, k, true).unwrap();
            let (r0, r1) = (homology(&f0).unwrap().total_rank(), homology(&f1).unwrap().total_rank());
            assert!(rank <= r0 + r1 && r0 <= rank + r1 && r1 <= rank + r0, "{} crossing {k}", e.name);
            let chi = knotkh::LaurentPoly::new(jones_from_complex(&f0).terms().chain(jones_from_complex(&f1).terms()));
            assert_eq!(chi, jones_from_complex(&whole), "{} crossing {k}", e.name);
        }
    }
}

#[test]
fn unreduced_is_reduced_doubled() {
    for e in corpus_upto(9) {
        let r = kh(&e.diagram);
        let u = homology_fast(&e.diagram, false).unwrap();
        let expect = RankTable::new(false, r.shifted(0, 1).iter().chain(r.shifted(0, -1).iter()));
        assert_eq!(u, expect, "{}", e.name);
    }
}

#[test]
fn fast_matches_naive_on_links() {
    for (s, w) in [(2, &[1, 1][..]), (2, &[1, 1, 1, 1]), (3, &[1, 2, 1, 2, 1, 2]), (3, &[1, -2, 1, 1, -2])] {
        let d = Diagram::from_braid(s, w).unwrap();
        assert!(!d.is_knot());
        assert_eq!(homology_fast(&d, false).unwrap(), homology(&build_complex(&d, false).unwrap()).unwrap());
    }
}

#[test]
fn random_knots_seeded() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let d = random_knot(&mut rng, 8);
        let naive = homology(&build_complex(&d, true).unwrap()).unwrap();
        assert_eq!(homology_fast(&d, true).unwrap(), naive, "{d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fast_equals_naive(d in braid_knot()) {
        for reduced in [false, true] {
            let c = build_complex(&d, reduced).unwrap();
            c.check_d_squared().unwrap();
            prop_assert_eq!(homology_fast(&d, reduced).unwrap(), homology(&c).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_is_jones(d in braid_knot()) {
        let t = kh(&d);
        prop_assert_eq!(jones(&t), bracket_jones(&d));
        prop_assert_eq!(jones(&t), jones_from_complex(&build_complex(&d, true).unwrap()));
        prop_assert_eq!(jones(&t).at_one(), 1);
    }

    #[test]
    fn mirror_flips(d in braid_knot()) {
        prop_assert_eq!(kh(&d.mirror()), kh(&d).flipped());
        prop_assert_eq!(jones(&kh(&d.mirror())), jones(&kh(&d)).invert());
    }

    #[test]
    fn determinant_is_odd_and_bounded(d in braid_knot()) {
        let t = kh(&d);
        let det = knotkh::invariants::determinant(&t).unwrap();
        prop_assert_eq!(det % 2, 1);
        prop_assert!(det as usize <= t.total_rank());
        prop_assert_eq!(det, common::goeritz_det(&d));
    }
}
