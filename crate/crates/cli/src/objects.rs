//! Object selectors for `emit` and their JSON / LaTeX rendering.

use std::str::FromStr;

use dd3_core::double::{casimir, universal_r, Casimir};
use dd3_core::latex::{algebra_latex, algebra_matrix_latex, matrix_latex, tensor_latex};
use dd3_core::lax::{derived_l, r_matrix_2, r_matrix_3, LaxFamily};
use dd3_core::{GroupElement, IrrepLabel, Rational, Representation, Symbol};
use serde_json::{json, Value};

use crate::Substitution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Object {
    R21,
    R3p,
    L2,
    L3,
    UniversalR,
    C1,
    C2,
    Rep(IrrepLabel),
    DerivedL(LaxFamily, IrrepLabel),
}

impl FromStr for Object {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let label = |l: &str| {
            l.parse::<IrrepLabel>()
                .map_err(|_| format!("unknown irrep label `{l}`"))
        };
        match s {
            "R21" => Ok(Object::R21),
            "R3p" => Ok(Object::R3p),
            "L2" => Ok(Object::L2),
            "L3" => Ok(Object::L3),
            "UR" => Ok(Object::UniversalR),
            "c1" => Ok(Object::C1),
            "c2" => Ok(Object::C2),
            _ => {
                if let Some(l) = s.strip_prefix("rep:") {
                    return Ok(Object::Rep(label(l)?));
                }
                if let Some(rest) = s.strip_prefix("derivedL:") {
                    let (lax, l) = rest
                        .split_once(':')
                        .ok_or_else(|| format!("expected derivedL:<lax>:<label>, got `{s}`"))?;
                    let family = lax
                        .parse::<LaxFamily>()
                        .map_err(|_| format!("unknown Lax operator `{lax}`"))?;
                    return Ok(Object::DerivedL(family, label(l)?));
                }
                Err(format!(
                    "unknown object `{s}`; expected one of R21, R3p, L2, L3, UR, c1, c2, rep:<label>, derivedL:<lax>:<label>"
                ))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
}

fn evaluate_all<T, F>(value: T, subst: &Substitution, f: F) -> dd3_core::Result<T>
where
    F: Fn(&T, Symbol, &Rational) -> dd3_core::Result<T>,
{
    let mut out = value;
    for (sym, q) in subst.iter() {
        out = f(&out, sym, q)?;
    }
    Ok(out)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("exact types serialize")
}

fn rep_json(rep: &Representation) -> Value {
    let duals: Vec<Value> = GroupElement::all()
        .map(|h| json!({ "h": h.name(), "image": to_json(rep.dual_image(h)) }))
        .collect();
    json!({
        "label": rep.label().map(|l| l.name()),
        "dim": rep.dim(),
        "sigma": to_json(rep.sigma_image()),
        "tau": to_json(rep.tau_image()),
        "duals": duals,
    })
}

fn rep_latex(rep: &Representation) -> String {
    let name = rep.label().map(|l| l.latex()).unwrap_or_default();
    let mut lines = vec![
        format!(
            "\\pi_{{{name}}}(\\sigma) = {}",
            matrix_latex(rep.sigma_image())
        ),
        format!("\\pi_{{{name}}}(\\tau) = {}", matrix_latex(rep.tau_image())),
    ];
    for h in GroupElement::all() {
        let dual = dd3_core::DoubleBasis::dual_only(h).latex();
        lines.push(format!(
            "\\pi_{{{name}}}({dual}) = {}",
            matrix_latex(rep.dual_image(h))
        ));
    }
    lines.join("\n")
}

/// Renders the object, evaluating any substituted symbols first.
pub fn emit(object: Object, format: Format, subst: &Substitution) -> dd3_core::Result<String> {
    let scalar = |m: dd3_core::ScalarMatrix| -> dd3_core::Result<String> {
        let m = evaluate_all(m, subst, |m, s, q| m.evaluate(s, q))?;
        Ok(match format {
            Format::Json => to_json(&m).to_string(),
            Format::Latex => matrix_latex(&m),
        })
    };
    match object {
        Object::R21 => scalar(r_matrix_2(Symbol::X)),
        Object::R3p => scalar(r_matrix_3(Symbol::X)),
        Object::DerivedL(family, label) => scalar(derived_l(family, label)),
        Object::L2 | Object::L3 => {
            let family = if object == Object::L2 {
                LaxFamily::Two
            } else {
                LaxFamily::Three
            };
            let m = evaluate_all(family.lax(Symbol::X), subst, |m, s, q| m.evaluate(s, q))?;
            Ok(match format {
                Format::Json => to_json(&m).to_string(),
                Format::Latex => algebra_matrix_latex(&m),
            })
        }
        Object::C1 | Object::C2 => {
            let c = casimir(if object == Object::C1 {
                Casimir::C1
            } else {
                Casimir::C2
            });
            let c = evaluate_all(c, subst, |c, s, q| c.evaluate(s, q))?;
            Ok(match format {
                Format::Json => to_json(&c).to_string(),
                Format::Latex => algebra_latex(&c),
            })
        }
        Object::UniversalR => {
            let r = universal_r();
            Ok(match format {
                Format::Json => to_json(&r).to_string(),
                Format::Latex => tensor_latex(&r),
            })
        }
        Object::Rep(label) => {
            let rep = Representation::irrep(label);
            Ok(match format {
                Format::Json => rep_json(&rep).to_string(),
                Format::Latex => rep_latex(&rep),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_selectors() {
        assert_eq!("R21".parse::<Object>().unwrap(), Object::R21);
        assert_eq!(
            "rep:3-".parse::<Object>().unwrap(),
            Object::Rep(IrrepLabel::ThreeMinus)
        );
        assert_eq!(
            "derivedL:3:21".parse::<Object>().unwrap(),
            Object::DerivedL(LaxFamily::Three, IrrepLabel::Two(1))
        );
        assert!("rep:4".parse::<Object>().is_err());
        assert!("derivedL:2".parse::<Object>().is_err());
        assert!("R22".parse::<Object>().is_err());
    }
}
