//! Dense linear algebra over the two-element field.

use std::fmt;

use crate::error::{Error, Result};

/// Row-major bit matrix; each row is packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        F2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// Adds 1 to the entry (mod 2).
    pub fn toggle(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Column indices of the nonzero entries of row `r`.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = F2Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            let dst = r * out.stride;
            for k in self.row_ones(r) {
                let src = rhs.row(k);
                for (o, s) in out.data[dst..dst + out.stride].iter_mut().zip(src) {
                    *o ^= s;
                }
            }
        }
        Ok(out)
    }

    /// Rank by row elimination. The pivot of each row is its lowest set bit,
    /// and rows are reduced in order.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        let stride = self.stride;
        let mut rank = 0;
        for r in 0..self.rows {
            let row = &data[r * stride..(r + 1) * stride];
            let Some(w) = row.iter().position(|&x| x != 0) else { continue };
            let bit = row[w] & row[w].wrapping_neg();
            rank += 1;
            let (head, tail) = data.split_at_mut((r + 1) * stride);
            let pivot = &head[r * stride + w..];
            for other in tail.chunks_exact_mut(stride) {
                if other[w] & bit != 0 {
                    for (o, p) in other[w..].iter_mut().zip(pivot) {
                        *o ^= p;
                    }
                }
            }
        }
        rank
    }

    /// `cols - rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let line: String = (0..self.cols.min(64)).map(|c| if self.get(r, c) { '1' } else { '.' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Dimension of `ker(d_out) / im(d_in)` for `V --d_in--> W --d_out--> X`.
/// Matrices act on column vectors, so `d_in` is `dim W x dim V`.
pub fn homology_rank(d_in: &F2Matrix, d_out: &F2Matrix) -> Result<usize> {
    if d_in.rows != d_out.cols {
        return Err(Error::Dimension(format!(
            "incoming map lands in dimension {}, outgoing map starts in {}",
            d_in.rows, d_out.cols
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::MalformedComplex("composite of consecutive differentials is nonzero".into()));
    }
    let kernel = d_out.kernel_dim();
    let image = d_in.rank();
    debug_assert!(kernel >= image);
    Ok(kernel - image)
}
