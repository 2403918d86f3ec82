//! Exact checkers for the spectral Yang–Baxter equation, the universal Lax
//! relation `R₁₂(x/y)𝔏₁₃(x)𝔏₂₃(y) = 𝔏₂₃(y)𝔏₁₃(x)R₁₂(x/y)` and its matrix
//! image `RLL = LLR`.
//!
//! Inputs are single-symbol objects in `x`. Leg 13 keeps `x`, leg 23 is
//! renamed to `y`, and `R₁₂` is transported to `x/y`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{AlgebraValuedMatrix, LaxPlacement};
use crate::error::{Error, Result};
use crate::matrix::ScalarMatrix;
use crate::scalars::{Rational, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First differing position (row-major) and the two values there.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: String,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl RelationReport {
    pub fn pass(relation: impl Into<String>) -> Self {
        RelationReport {
            relation: relation.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(relation: impl Into<String>, witness: Witness) -> Self {
        RelationReport {
            relation: relation.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    pub fn from_witness(relation: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => RelationReport::pass(relation),
            Some(w) => RelationReport::fail(relation, w),
        }
    }

    /// Compares two values at a known position (e.g. basis index, entry).
    pub fn compare<T: PartialEq + Serialize>(
        relation: impl Into<String>,
        row: usize,
        col: usize,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        RelationReport::from_witness(relation, witness_if_differs(row, col, lhs, rhs))
    }

    pub fn compare_scalar(
        relation: impl Into<String>,
        lhs: &ScalarMatrix,
        rhs: &ScalarMatrix,
    ) -> Self {
        let witness = lhs.first_difference(rhs).map(|(r, c)| {
            entry_witness(r, c, lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols(), || {
                (to_value(lhs.get(r, c)), to_value(rhs.get(r, c)))
            })
        });
        RelationReport::from_witness(relation, witness)
    }

    pub fn compare_algebra(
        relation: impl Into<String>,
        lhs: &AlgebraValuedMatrix,
        rhs: &AlgebraValuedMatrix,
    ) -> Self {
        let witness = lhs.first_difference(rhs).map(|(r, c)| {
            entry_witness(r, c, lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols(), || {
                (to_value(lhs.get(r, c)), to_value(rhs.get(r, c)))
            })
        });
        RelationReport::from_witness(relation, witness)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("exact types serialize")
}

pub(crate) fn witness_if_differs<T: PartialEq + Serialize>(
    row: usize,
    col: usize,
    lhs: &T,
    rhs: &T,
) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        row,
        col,
        lhs: to_value(lhs),
        rhs: to_value(rhs),
    })
}

fn entry_witness<F>(
    r: usize,
    c: usize,
    lr: usize,
    lc: usize,
    rr: usize,
    rc: usize,
    values: F,
) -> Witness
where
    F: FnOnce() -> (Value, Value),
{
    if (lr, lc) != (rr, rc) {
        return Witness {
            row: 0,
            col: 0,
            lhs: Value::String(format!("shape {lr}x{lc}")),
            rhs: Value::String(format!("shape {rr}x{rc}")),
        };
    }
    let (lhs, rhs) = values();
    Witness {
        row: r,
        col: c,
        lhs,
        rhs,
    }
}

fn square_root_dim(m: &ScalarMatrix, what: &str) -> Result<usize> {
    let n = m.rows();
    let d = (1..=n).find(|d| d * d >= n).unwrap_or(0);
    if !m.is_square() || d * d != n {
        return Err(Error::ShapeMismatch(format!(
            "{what} must act on V ⊗ V, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(d)
}

fn specialize(m: &ScalarMatrix, x: &Rational, y: &Rational) -> Result<ScalarMatrix> {
    m.evaluate(Symbol::X, x)?.evaluate(Symbol::Y, y)
}

fn specialize_algebra(
    m: &AlgebraValuedMatrix,
    x: &Rational,
    y: &Rational,
) -> Result<AlgebraValuedMatrix> {
    m.evaluate(Symbol::X, x)?.evaluate(Symbol::Y, y)
}

/// `R₁₂(x/y)`, `R₁₃(x)`, `R₂₃(y)` on `V ⊗ V ⊗ V`.
#[derive(Clone, Debug)]
pub struct YbeFactors {
    pub r12: ScalarMatrix,
    pub r13: ScalarMatrix,
    pub r23: ScalarMatrix,
}

impl YbeFactors {
    pub fn new(r: &ScalarMatrix) -> Result<Self> {
        let d = square_root_dim(r, "R")?;
        let dims = [d, d, d];
        Ok(YbeFactors {
            r12: r.substitute_ratio()?.embed_two_leg(dims, (0, 1))?,
            r13: r.embed_two_leg(dims, (0, 2))?,
            r23: r.with_symbol(Symbol::Y)?.embed_two_leg(dims, (1, 2))?,
        })
    }

    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<Self> {
        Ok(YbeFactors {
            r12: specialize(&self.r12, x, y)?,
            r13: specialize(&self.r13, x, y)?,
            r23: specialize(&self.r23, x, y)?,
        })
    }

    /// `(R₁₂R₁₃R₂₃, R₂₃R₁₃R₁₂)`.
    pub fn sides(&self) -> Result<(ScalarMatrix, ScalarMatrix)> {
        let lhs = self.r12.mul(&self.r13)?.mul(&self.r23)?;
        let rhs = self.r23.mul(&self.r13)?.mul(&self.r12)?;
        Ok((lhs, rhs))
    }
}

/// `R₁₂(x/y)`, `L₁₃(x)`, `L₂₃(y)` on `V ⊗ V ⊗ W`.
#[derive(Clone, Debug)]
pub struct RllFactors {
    pub r12: ScalarMatrix,
    pub l13: ScalarMatrix,
    pub l23: ScalarMatrix,
}

impl RllFactors {
    pub fn new(r: &ScalarMatrix, l: &ScalarMatrix, rep_dim: usize) -> Result<Self> {
        let d = square_root_dim(r, "R")?;
        if !l.is_square() || l.rows() != d * rep_dim {
            return Err(Error::ShapeMismatch(format!(
                "L must be {0}x{0} for V of dim {d} and W of dim {rep_dim}, got {1}x{2}",
                d * rep_dim,
                l.rows(),
                l.cols()
            )));
        }
        let dims = [d, d, rep_dim];
        Ok(RllFactors {
            r12: r.substitute_ratio()?.embed_two_leg(dims, (0, 1))?,
            l13: l.embed_two_leg(dims, (0, 2))?,
            l23: l.with_symbol(Symbol::Y)?.embed_two_leg(dims, (1, 2))?,
        })
    }

    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<Self> {
        Ok(RllFactors {
            r12: specialize(&self.r12, x, y)?,
            l13: specialize(&self.l13, x, y)?,
            l23: specialize(&self.l23, x, y)?,
        })
    }

    /// `(R₁₂L₁₃L₂₃, L₂₃L₁₃R₁₂)`.
    pub fn sides(&self) -> Result<(ScalarMatrix, ScalarMatrix)> {
        let lhs = self.r12.mul(&self.l13)?.mul(&self.l23)?;
        let rhs = self.l23.mul(&self.l13)?.mul(&self.r12)?;
        Ok((lhs, rhs))
    }
}

/// `R₁₂(x/y)`, `𝔏₁₃(x)`, `𝔏₂₃(y)` in `End(V ⊗ V) ⊗ D(D₃)`.
#[derive(Clone, Debug)]
pub struct LaxFactors {
    pub r12: ScalarMatrix,
    pub l13: AlgebraValuedMatrix,
    pub l23: AlgebraValuedMatrix,
}

impl LaxFactors {
    pub fn new(r: &ScalarMatrix, lax: &AlgebraValuedMatrix) -> Result<Self> {
        let d = square_root_dim(r, "R")?;
        if lax.rows() != d || lax.cols() != d {
            return Err(Error::ShapeMismatch(format!(
                "Lax operator must be {d}x{d} to match R, got {}x{}",
                lax.rows(),
                lax.cols()
            )));
        }
        Ok(LaxFactors {
            r12: r.substitute_ratio()?,
            l13: lax.lax_embed(LaxPlacement::P13, d),
            l23: lax.with_symbol(Symbol::Y)?.lax_embed(LaxPlacement::P23, d),
        })
    }

    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<Self> {
        Ok(LaxFactors {
            r12: specialize(&self.r12, x, y)?,
            l13: specialize_algebra(&self.l13, x, y)?,
            l23: specialize_algebra(&self.l23, x, y)?,
        })
    }

    /// `(R₁₂𝔏₁₃𝔏₂₃, 𝔏₂₃𝔏₁₃R₁₂)`.
    pub fn sides(&self) -> Result<(AlgebraValuedMatrix, AlgebraValuedMatrix)> {
        let lhs = self.l13.product(&self.l23)?.scalar_left(&self.r12)?;
        let rhs = self.l23.product(&self.l13)?.scalar_right(&self.r12)?;
        Ok((lhs, rhs))
    }
}

pub fn check_parametric_ybe(relation: &str, r: &ScalarMatrix) -> Result<RelationReport> {
    let (lhs, rhs) = YbeFactors::new(r)?.sides()?;
    Ok(RelationReport::compare_scalar(relation, &lhs, &rhs))
}

pub fn check_rll(
    relation: &str,
    r: &ScalarMatrix,
    l: &ScalarMatrix,
    rep_dim: usize,
) -> Result<RelationReport> {
    let (lhs, rhs) = RllFactors::new(r, l, rep_dim)?.sides()?;
    Ok(RelationReport::compare_scalar(relation, &lhs, &rhs))
}

pub fn check_universal_lax(
    relation: &str,
    r: &ScalarMatrix,
    lax: &AlgebraValuedMatrix,
) -> Result<RelationReport> {
    let (lhs, rhs) = LaxFactors::new(r, lax)?.sides()?;
    Ok(RelationReport::compare_algebra(relation, &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lax::{r_matrix_2, r_matrix_3};
    use crate::scalars::LaurentPoly;

    #[test]
    fn spectral_ybe_holds_for_both_r_matrices() {
        assert!(check_parametric_ybe("R21", &r_matrix_2(Symbol::X))
            .unwrap()
            .passed());
        assert!(check_parametric_ybe("R3p", &r_matrix_3(Symbol::X))
            .unwrap()
            .passed());
    }

    #[test]
    fn zeroed_entry_breaks_ybe() {
        let mut r = r_matrix_2(Symbol::X);
        r.set(1, 2, LaurentPoly::zero());
        let report = check_parametric_ybe("R21-corrupt", &r).unwrap();
        assert_eq!(report.status, Status::Fail);
        let w = report.witness.unwrap();
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn shape_checks() {
        let r = r_matrix_2(Symbol::X);
        assert!(check_parametric_ybe("bad", &ScalarMatrix::identity(3)).is_err());
        assert!(check_rll("bad", &r, &ScalarMatrix::identity(5), 2).is_err());
        assert!(check_universal_lax("bad", &r, &AlgebraValuedMatrix::identity(3)).is_err());
    }

    #[test]
    fn scalar_twist_breaks_rll() {
        // A constant diagonal twist commutes with the weight-preserving R, but a
        // spectral one, L(x) = diag(1, x), does not get past the (ω−1)x block.
        let r = r_matrix_2(Symbol::X);
        let constant = ScalarMatrix::diag(vec![LaurentPoly::one(), LaurentPoly::omega_pow(1)]);
        assert!(check_rll("constant", &r, &constant, 1).unwrap().passed());
        let l = ScalarMatrix::diag(vec![LaurentPoly::one(), LaurentPoly::x()]);
        let report = check_rll("twist", &r, &l, 1).unwrap();
        assert_eq!(report.status, Status::Fail);
        // the identity always satisfies it
        assert!(check_rll("id", &r, &ScalarMatrix::identity(2), 1)
            .unwrap()
            .passed());
    }

    #[test]
    fn report_json_shape() {
        let report = RelationReport::pass("x");
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"relation":"x","status":"pass","witness":null}"#
        );
    }
}
