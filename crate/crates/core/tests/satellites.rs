use knotkh::corpus::{builtin, lookup};
use knotkh::invariants::check_satellite_bound;
use knotkh::satellite::satellite_crossings;
use knotkh::{build_satellite, homology_fast, Diagram, PatternSpec};

#[test]
fn valid_for_every_fixture() {
    for e in builtin() {
        for n in -2..=2 {
            let p = PatternSpec { n };
            let s = build_satellite(&e.diagram, p).unwrap();
            assert!(s.is_knot(), "{} n={n}", e.name);
            if !s.is_crossingless() {
                assert_eq!(s.crossing_count(), satellite_crossings(&e.diagram, p), "{} n={n}", e.name);
            }
            let again: Diagram = s.to_string().parse().unwrap();
            assert_eq!(again, s);
        }
    }
}

#[test]
fn untwisted_pattern_is_unknot() {
    for e in builtin().into_iter().filter(|e| e.diagram.crossing_count() <= 6) {
        let s = build_satellite(&e.diagram, PatternSpec { n: 0 }).unwrap();
        assert_eq!(homology_fast(&s, true).unwrap().total_rank(), 1, "{}", e.name);
    }
}

#[test]
fn unknot_companion_gives_unknot() {
    for n in -2..=2 {
        let s = build_satellite(&Diagram::unknot(), PatternSpec { n }).unwrap();
        assert_eq!(homology_fast(&s, true).unwrap().total_rank(), 1, "n={n}");
    }
}

#[test]
fn framing_independence() {
    for group in [&["trefoil", "3_1", "3_1_kink"][..], &["4_1", "4_1_kink", "4_1_kink_neg", "4_1_shift"]] {
        for n in [-1, 1, 2] {
            let tables: Vec<_> = group
                .iter()
                .map(|name| {
                    let s = build_satellite(&lookup(name).unwrap().diagram, PatternSpec { n }).unwrap();
                    homology_fast(&s, true).unwrap()
                })
                .collect();
            for (t, name) in tables.iter().zip(group.iter()) {
                assert_eq!(t, &tables[0], "{name} n={n}");
            }
        }
    }
}

#[test]
fn rank_bounds_for_nontrivial_companions() {
    for name in ["trefoil", "4_1", "5_2"] {
        let d = lookup(name).unwrap().diagram;
        for n in [1, 2] {
            let s = build_satellite(&d, PatternSpec { n }).unwrap();
            let report = check_satellite_bound(&homology_fast(&s, true).unwrap(), n, true);
            assert!(report.holds, "{name} n={n}: {report:?}");
        }
    }
}

#[test]
fn pinned_trefoil_satellites() {
    let t = lookup("trefoil").unwrap().diagram;
    for (n, crossings, rank) in [(-2, 20, 47), (-1, 19, 23), (0, 18, 1), (1, 19, 25), (2, 20, 49)] {
        let s = build_satellite(&t, PatternSpec { n }).unwrap();
        assert_eq!(s.crossing_count(), crossings, "n={n}");
        assert_eq!(homology_fast(&s, true).unwrap().total_rank(), rank, "n={n}");
    }
}
