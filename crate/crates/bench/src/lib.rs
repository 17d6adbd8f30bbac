//! Fixtures shared by the benchmarks.

use knotkh::corpus::lookup;
use knotkh::f2::F2Matrix;
use knotkh::{build_satellite, Diagram, PatternSpec};

pub fn knot(name: &str) -> Diagram {
    lookup(name).unwrap_or_else(|| panic!("{name} is in the corpus")).diagram
}

pub fn trefoil_satellite(n: i32) -> Diagram {
    build_satellite(&knot("trefoil"), PatternSpec { n }).expect("trefoil satellites build")
}

/// A pseudo-random square matrix with roughly a quarter of its entries set.
pub fn scrambled(n: usize, seed: u64) -> F2Matrix {
    F2Matrix::from_fn(n, n, |r, c| {
        let mut x = seed ^ ((r as u64) << 32 | c as u64);
        x = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        x ^= x >> 29;
        x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        (x >> 62) == 0
    })
}
