//! Numeric spot checks for `eval`: both sides of a relation at a rational point.

use std::fmt;
use std::str::FromStr;

use dd3_core::lax::{derived_l, LaxFactors, LaxFamily, RllFactors, YbeFactors};
use dd3_core::{IrrepLabel, Rational, Symbol};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalRelation {
    Ybe(LaxFamily),
    Lax(LaxFamily),
    Rll(LaxFamily, IrrepLabel),
}

impl FromStr for EvalRelation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let family = |t: &str| match t {
            "R21" | "2" | "L2" => Ok(LaxFamily::Two),
            "R3p" | "3" | "L3" => Ok(LaxFamily::Three),
            other => Err(format!("unknown R-matrix or Lax operator `{other}`")),
        };
        match parts.as_slice() {
            ["ybe-parametric", r] => Ok(EvalRelation::Ybe(family(r)?)),
            ["lax-universal", l] => Ok(EvalRelation::Lax(family(l)?)),
            ["rll", l, label] => {
                let label = label.parse::<IrrepLabel>().map_err(|_| format!("unknown irrep label `{label}`"))?;
                Ok(EvalRelation::Rll(family(l)?, label))
            }
            _ => Err(format!(
                "unknown relation `{s}`; expected ybe-parametric:<R21|R3p>, lax-universal:<2|3> or rll:<2|3>:<label>"
            )),
        }
    }
}

impl fmt::Display for EvalRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r_name = |family: LaxFamily| match family {
            LaxFamily::Two => "R21",
            LaxFamily::Three => "R3p",
        };
        match self {
            EvalRelation::Ybe(family) => write!(f, "ybe-parametric:{}", r_name(*family)),
            EvalRelation::Lax(family) => write!(f, "lax-universal:{family}"),
            EvalRelation::Rll(family, label) => write!(f, "rll:{family}:{}", label.name()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("exact types serialize")
}

/// Returns `(equal, report)` where the report holds both sides.
pub fn evaluate(
    relation: EvalRelation,
    x: &Rational,
    y: &Rational,
) -> dd3_core::Result<(bool, Value)> {
    let (lhs, rhs, equal) = match relation {
        EvalRelation::Ybe(family) => {
            let (l, r) = YbeFactors::new(&family.r_matrix(Symbol::X))?
                .specialize(x, y)?
                .sides()?;
            (to_json(&l), to_json(&r), l == r)
        }
        EvalRelation::Lax(family) => {
            let lax = family.lax(Symbol::X);
            let (l, r) = LaxFactors::new(&family.r_matrix(Symbol::X), &lax)?
                .specialize(x, y)?
                .sides()?;
            (to_json(&l), to_json(&r), l == r)
        }
        EvalRelation::Rll(family, label) => {
            let factors = RllFactors::new(
                &family.r_matrix(Symbol::X),
                &derived_l(family, label),
                label.dim(),
            )?;
            let (l, r) = factors.specialize(x, y)?.sides()?;
            (to_json(&l), to_json(&r), l == r)
        }
    };
    Ok((equal, json!({ "lhs": lhs, "rhs": rhs, "equal": equal })))
}
