mod common;

use common::{bracket_jones, corpus_upto, goeritz_det};
use knotkh::corpus::lookup;
use knotkh::invariants::{determinant, jones};
use knotkh::{homology_fast, Diagram, LaurentPoly};

#[test]
fn goeritz_known_values() {
    let det = |name: &str| goeritz_det(&lookup(name).unwrap().diagram);
    assert_eq!(det("U"), 1);
    assert_eq!(det("unknot_r2"), 1);
    assert_eq!(det("trefoil"), 3);
    assert_eq!(det("4_1"), 5);
    assert_eq!(det("10_124"), 1);
    assert_eq!(det("8_19"), 3);
}

#[test]
fn bracket_known_values() {
    let left = LaurentPoly::new([(-2, 1), (-6, 1), (-8, -1)]);
    assert_eq!(bracket_jones(&lookup("trefoil").unwrap().diagram), left);
    assert_eq!(bracket_jones(&lookup("trefoil").unwrap().diagram.mirror()), left.invert());
    assert_eq!(bracket_jones(&lookup("unknot_two_kinks").unwrap().diagram), LaurentPoly::one());
    let fig8 = LaurentPoly::new([(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]);
    assert_eq!(bracket_jones(&lookup("4_1").unwrap().diagram), fig8);
}

#[test]
fn determinant_matches_goeritz() {
    for e in corpus_upto(10) {
        let t = homology_fast(&e.diagram, true).unwrap();
        assert_eq!(determinant(&t).unwrap(), goeritz_det(&e.diagram), "{}", e.name);
        assert_eq!(Some(determinant(&t).unwrap()), e.expected_det, "{}", e.name);
    }
}

#[test]
fn jones_matches_bracket() {
    for e in corpus_upto(10) {
        let t = homology_fast(&e.diagram, true).unwrap();
        let j = jones(&t);
        assert_eq!(j, bracket_jones(&e.diagram), "{}", e.name);
        assert_eq!(j.at_one(), 1, "{}", e.name);
    }
}

#[test]
fn unreduced_jones_has_unknot_factor() {
    let d: Diagram = lookup("5_2").unwrap().diagram;
    let unreduced = jones(&homology_fast(&d, false).unwrap());
    let factor = LaurentPoly::new([(1, 1), (-1, 1)]);
    assert_eq!(unreduced, bracket_jones(&d).mul(&factor));
}
