//! Dense matrices over Laurent polynomials.
//!
//! Composite spaces are ordered leftmost-factor-major: in `V₁ ⊗ V₂ ⊗ …` the
//! row index of `(a₁, a₂, …)` is `Σ aᵢ · Π_{j>i} dim Vⱼ` (zero-based).

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::scalars::{CycloNum, LaurentPoly, Rational, Symbol};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ScalarMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> LaurentPoly>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ScalarMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        ScalarMatrix {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix::from_fn(rows, cols, |_, _| LaurentPoly::zero())
    }

    pub fn identity(n: usize) -> Self {
        ScalarMatrix::from_fn(n, n, |r, c| {
            if r == c {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn diag(entries: Vec<LaurentPoly>) -> Self {
        let n = entries.len();
        let mut m = ScalarMatrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.entries[i * n + i] = e;
        }
        m
    }

    /// `P(a ⊗ b) = b ⊗ a` on `V ⊗ V`, `dim V = d`.
    pub fn swap(d: usize) -> Self {
        ScalarMatrix::from_fn(d * d, d * d, |r, c| {
            let (a, b) = (r / d, r % d);
            if c == b * d + a {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<ScalarMatrix> {
        let mut acc = ScalarMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn kron(&self, other: &ScalarMatrix) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                return LaurentPoly::zero();
            }
            a * other.get(r % other.rows, c % other.cols)
        })
    }

    pub fn scale(&self, p: &LaurentPoly) -> ScalarMatrix {
        self.map(|e| e * p)
    }

    pub fn map<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<F: Fn(&LaurentPoly) -> Result<LaurentPoly>>(
        &self,
        f: F,
    ) -> Result<ScalarMatrix> {
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip<F: Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly>(
        &self,
        other: &ScalarMatrix,
        f: F,
    ) -> Result<ScalarMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn evaluate(&self, sym: Symbol, value: &Rational) -> Result<ScalarMatrix> {
        self.try_map(|e| e.evaluate(sym, value))
    }

    pub fn with_symbol(&self, sym: Symbol) -> Result<ScalarMatrix> {
        self.try_map(|e| e.with_symbol(sym))
    }

    pub fn substitute_ratio(&self) -> Result<ScalarMatrix> {
        self.try_map(LaurentPoly::substitute_ratio)
    }

    pub fn limit_at_zero(&self, sym: Symbol) -> Result<ScalarMatrix> {
        self.try_map(|e| e.limit_at_zero(sym))
    }

    /// First differing entry in row-major order.
    pub fn first_difference(&self, other: &ScalarMatrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.cols, i % self.cols))
    }

    /// Places an operator on legs `(i, j)` of a three-fold product with
    /// dimensions `dims`, acting as the identity on the remaining leg. The
    /// operator's own row index is ordered leg `i` first.
    pub fn embed_two_leg(&self, dims: [usize; 3], legs: (usize, usize)) -> Result<ScalarMatrix> {
        let (i, j) = legs;
        if i >= 3 || j >= 3 || i == j {
            return Err(Error::InvalidLeg(if i >= 3 { i } else { j }));
        }
        let k = 3 - i - j;
        let (di, dj) = (dims[i], dims[j]);
        if self.rows != di * dj || self.cols != di * dj {
            return Err(Error::ShapeMismatch(format!(
                "operator {}x{} does not act on {di}x{dj}",
                self.rows, self.cols
            )));
        }
        let n = dims.iter().product();
        let split = |idx: usize| {
            [
                idx / (dims[1] * dims[2]),
                (idx / dims[2]) % dims[1],
                idx % dims[2],
            ]
        };
        Ok(ScalarMatrix::from_fn(n, n, |r, c| {
            let (a, b) = (split(r), split(c));
            if a[k] != b[k] {
                return LaurentPoly::zero();
            }
            self.get(a[i] * dj + a[j], b[i] * dj + b[j]).clone()
        }))
    }

    /// Constant entries as field elements, if every entry is constant.
    pub fn constant_entries(&self) -> Option<Vec<CycloNum>> {
        self.entries.iter().map(LaurentPoly::as_constant).collect()
    }
}

/// Rank of a matrix over Q(ω) by exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<CycloNum>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot_row: Vec<CycloNum> = rows[rank].iter().map(|v| v * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &(&f * p);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
