use std::fmt;

use rayon::prelude::*;

use crate::double::AlgebraElement;
use crate::error::{Error, Result};
use crate::matrix::ScalarMatrix;
use crate::scalars::{Rational, Symbol};

/// Where a Lax operator's matrix leg sits in `End(V ⊗ V) ⊗ D(D₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaxPlacement {
    P13,
    P23,
}

/// Matrix with entries in D(D₃), i.e. an element of `End(V) ⊗ D(D₃)`.
///
/// Products combine algebra factors left to right in operand order:
/// `(A ⊗ a)(B ⊗ b) = AB ⊗ ab`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraValuedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<AlgebraElement>,
}

impl AlgebraValuedMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(AlgebraValuedMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> AlgebraElement>(
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
        AlgebraValuedMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        AlgebraValuedMatrix::from_fn(rows, cols, |_, _| AlgebraElement::zero())
    }

    /// `I ⊗ e`.
    pub fn identity(n: usize) -> Self {
        AlgebraValuedMatrix::from_scalar(&ScalarMatrix::identity(n))
    }

    /// `M ⊗ e`.
    pub fn from_scalar(m: &ScalarMatrix) -> Self {
        AlgebraValuedMatrix::from_fn(m.rows(), m.cols(), |r, c| {
            AlgebraElement::scalar(m.get(r, c))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    fn check_inner(&self, rows: usize, cols: usize) -> Result<()> {
        if self.cols != rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rows, cols
            )));
        }
        Ok(())
    }

    /// Matrix product with algebra entries multiplied in operand order.
    pub fn product(&self, other: &AlgebraValuedMatrix) -> Result<AlgebraValuedMatrix> {
        self.check_inner(other.rows, other.cols)?;
        let entries = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / other.cols, idx % other.cols);
                let mut acc = AlgebraElement::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.elem_mul(b);
                    }
                }
                acc
            })
            .collect();
        Ok(AlgebraValuedMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `(M ⊗ e) · self`.
    pub fn scalar_left(&self, m: &ScalarMatrix) -> Result<AlgebraValuedMatrix> {
        if m.cols() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                m.rows(),
                m.cols(),
                self.rows,
                self.cols
            )));
        }
        Ok(AlgebraValuedMatrix::from_fn(m.rows(), self.cols, |r, c| {
            let mut acc = AlgebraElement::zero();
            for k in 0..m.cols() {
                let s = m.get(r, k);
                if !s.is_zero() {
                    acc = &acc + &self.get(k, c).scale(s);
                }
            }
            acc
        }))
    }

    /// `self · (M ⊗ e)`.
    pub fn scalar_right(&self, m: &ScalarMatrix) -> Result<AlgebraValuedMatrix> {
        self.check_inner(m.rows(), m.cols())?;
        Ok(AlgebraValuedMatrix::from_fn(self.rows, m.cols(), |r, c| {
            let mut acc = AlgebraElement::zero();
            for k in 0..self.cols {
                let s = m.get(k, c);
                if !s.is_zero() {
                    acc = &acc + &self.get(r, k).scale(s);
                }
            }
            acc
        }))
    }

    /// Inserts an identity factor of size `other_dim` on the unused matrix leg:
    /// `P13` gives `L ⊗ I`, `P23` gives `I ⊗ L`; the algebra leg is untouched.
    pub fn lax_embed(&self, placement: LaxPlacement, other_dim: usize) -> AlgebraValuedMatrix {
        let (n, d) = (self.rows, other_dim);
        let size = n * d;
        AlgebraValuedMatrix::from_fn(size, size, |r, c| match placement {
            LaxPlacement::P13 => {
                if r % d == c % d {
                    self.get(r / d, c / d).clone()
                } else {
                    AlgebraElement::zero()
                }
            }
            LaxPlacement::P23 => {
                if r / n == c / n {
                    self.get(r % n, c % n).clone()
                } else {
                    AlgebraElement::zero()
                }
            }
        })
    }

    pub fn try_map<F>(&self, f: F) -> Result<AlgebraValuedMatrix>
    where
        F: Fn(&AlgebraElement) -> Result<AlgebraElement>,
    {
        Ok(AlgebraValuedMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn with_symbol(&self, sym: Symbol) -> Result<AlgebraValuedMatrix> {
        self.try_map(|e| e.with_symbol(sym))
    }

    pub fn evaluate(&self, sym: Symbol, value: &Rational) -> Result<AlgebraValuedMatrix> {
        self.try_map(|e| e.evaluate(sym, value))
    }

    /// Limit `sym → 0` entrywise; fails if any entry has a negative power of `sym`.
    pub fn limit_at_zero(&self, sym: Symbol) -> Result<AlgebraValuedMatrix> {
        self.try_map(|e| e.limit_at_zero(sym))
    }

    /// First differing entry in row-major order.
    pub fn first_difference(&self, other: &AlgebraValuedMatrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.cols, i % self.cols))
    }
}

impl fmt::Debug for AlgebraValuedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                writeln!(f, "  ({r},{c}): {:?}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}
