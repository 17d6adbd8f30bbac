//! Khovanov chain complexes and their homology over GF(2).
//!
//! Gradings: for a state of weight `w` with generator labels,
//! `i = w - n_minus` and `j = (#one - #x) + w + n_plus - 2 n_minus`.
//! The reduced complex is the subcomplex in which the circle through the
//! basepoint edge is labelled `x`, shifted by `+1` in `j` so the unknot sits at
//! `(0, 0)`.

mod cob;
mod naive;
mod scan;
mod table;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cube::Bits;
use crate::error::{Error, Result};
use crate::f2::{homology_rank, F2Matrix};
use crate::pd::Diagram;

pub use naive::{build_complex, build_face_complex};
pub use scan::homology_fast;
pub use table::RankTable;

/// Generator labels for a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    X,
}

/// A chain generator: a state and a label for each of its circles.
///
/// `x_mask` has bit `k` set when the `k`-th circle (circles ordered by their
/// smallest edge) is labelled `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub state: Bits,
    pub x_mask: u64,
}

impl Generator {
    /// Labels keyed by circle (smallest edge), for the given diagram.
    pub fn labeling(&self, d: &Diagram) -> Result<Vec<(u32, Label)>> {
        let s = crate::cube::resolve_bits(d, self.state)?;
        Ok(s.circles()
            .iter()
            .enumerate()
            .map(|(k, c)| (c[0], if self.x_mask >> k & 1 == 1 { Label::X } else { Label::One }))
            .collect())
    }
}

/// Generators of one bigrading and the differential into `(i + 1, j)`.
///
/// The differential has one column per generator here and one row per
/// generator of the target block.
#[derive(Debug, Clone)]
pub struct Block {
    pub generators: Vec<Generator>,
    pub differential: F2Matrix,
}

#[derive(Debug, Clone)]
pub struct GradedComplex {
    blocks: BTreeMap<(i32, i32), Block>,
    n_plus: usize,
    n_minus: usize,
    reduced: bool,
}

impl GradedComplex {
    pub fn blocks(&self) -> &BTreeMap<(i32, i32), Block> {
        &self.blocks
    }

    pub fn block(&self, i: i32, j: i32) -> Option<&Block> {
        self.blocks.get(&(i, j))
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Total number of generators.
    pub fn dimension(&self) -> usize {
        self.blocks.values().map(|b| b.generators.len()).sum()
    }

    fn block_dim(&self, i: i32, j: i32) -> usize {
        self.blocks.get(&(i, j)).map_or(0, |b| b.generators.len())
    }

    /// Checks that every composite of consecutive differentials vanishes.
    pub fn check_d_squared(&self) -> Result<()> {
        self.blocks.par_iter().try_for_each(|(&(i, j), b)| {
            if let Some(next) = self.blocks.get(&(i + 1, j)) {
                if !next.differential.mul(&b.differential)?.is_zero() {
                    return Err(Error::MalformedComplex(format!("d^2 != 0 at ({i}, {j})")));
                }
            }
            Ok(())
        })
    }

    /// Signed generator counts `(i, j) -> (-1)^i dim`, summed over `i`, keyed by `j`.
    pub fn euler_terms(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(i, j), b) in &self.blocks {
            let s = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(j).or_insert(0) += s * b.generators.len() as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// Homology dimensions of every bigrading.
pub fn homology(c: &GradedComplex) -> Result<RankTable> {
    let entries = c
        .blocks
        .par_iter()
        .map(|(&(i, j), b)| {
            let dim = b.generators.len();
            let zero_in;
            let d_in = match c.blocks.get(&(i - 1, j)) {
                Some(prev) => &prev.differential,
                None => {
                    zero_in = F2Matrix::zeros(dim, 0);
                    &zero_in
                }
            };
            debug_assert_eq!(b.differential.rows(), c.block_dim(i + 1, j));
            homology_rank(d_in, &b.differential).map(|r| ((i, j), r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankTable::new(c.reduced, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    fn trefoil() -> Diagram {
        parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]").unwrap()
    }

    #[test]
    fn trefoil_dimensions() {
        let d = trefoil();
        assert_eq!(build_complex(&d, false).unwrap().dimension(), 30);
        assert_eq!(build_complex(&d, true).unwrap().dimension(), 15);
    }

    #[test]
    fn trefoil_reduced_table() {
        let c = build_complex(&trefoil(), true).unwrap();
        c.check_d_squared().unwrap();
        let t = homology(&c).unwrap();
        assert_eq!(t, RankTable::new(true, [((0, -2), 1), ((-2, -6), 1), ((-3, -8), 1)]));
    }

    #[test]
    fn trefoil_unreduced_table() {
        let t = homology(&build_complex(&trefoil(), false).unwrap()).unwrap();
        assert_eq!(t.total_rank(), 6);
        assert_eq!(t.get(0, -1), 1);
        assert_eq!(t.get(0, -3), 1);
    }

    #[test]
    fn fast_matches_naive() {
        for d in [
            "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]",
            "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]",
        ]
        .map(|s| parse_pd(s).unwrap())
        .into_iter()
        .chain([Diagram::from_braid(2, &[1]).unwrap(), Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap()])
        {
            let s = d.to_string();
            for reduced in [false, true] {
                let slow = homology(&build_complex(&d, reduced).unwrap()).unwrap();
                assert_eq!(homology_fast(&d, reduced).unwrap(), slow, "{s} reduced={reduced}");
            }
        }
    }

    #[test]
    fn unknot() {
        let u = Diagram::unknot();
        assert_eq!(homology_fast(&u, true).unwrap().total_rank(), 1);
        assert_eq!(homology(&build_complex(&u, false).unwrap()).unwrap().total_rank(), 2);
    }
}
