//! JSON forms of the exact types.
//!
//! * `CycloNum`: `{"a": "p/q", "b": "p/q"}`
//! * `LaurentPoly`: `[{"xe", "ye", "a", "b"}, …]` sorted by `(xe, ye)`
//! * `AlgebraElement`: `[{"g", "h", "coeff"}, …]` sorted by `(g, h)`
//! * `TensorElement`: `{"arity", "terms": [{"legs": [{"g", "h"}, …], "coeff"}, …]}`
//! * matrices: `{"rows", "cols", "entries": [row-major …]}`

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::double::{AlgebraElement, DoubleBasis, Legs, TensorElement};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::lax::AlgebraValuedMatrix;
use crate::matrix::ScalarMatrix;
use crate::scalars::{format_rational, parse_rational, CycloNum, LaurentPoly};

#[derive(Serialize, Deserialize)]
struct CycloJson {
    a: String,
    b: String,
}

impl From<&CycloNum> for CycloJson {
    fn from(c: &CycloNum) -> Self {
        CycloJson {
            a: format_rational(c.a()),
            b: format_rational(c.b()),
        }
    }
}

impl TryFrom<CycloJson> for CycloNum {
    type Error = Error;
    fn try_from(j: CycloJson) -> Result<Self> {
        Ok(CycloNum::new(parse_rational(&j.a)?, parse_rational(&j.b)?))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    xe: i32,
    ye: i32,
    a: String,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct BasisJson {
    g: String,
    h: String,
}

impl From<DoubleBasis> for BasisJson {
    fn from(u: DoubleBasis) -> Self {
        BasisJson {
            g: u.grp.name().into(),
            h: u.dual.name().into(),
        }
    }
}

impl TryFrom<BasisJson> for DoubleBasis {
    type Error = Error;
    fn try_from(j: BasisJson) -> Result<Self> {
        Ok(DoubleBasis::new(
            j.g.parse::<GroupElement>()?,
            j.h.parse::<GroupElement>()?,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraTermJson {
    g: String,
    h: String,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    legs: Vec<BasisJson>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    arity: usize,
    terms: Vec<TensorTermJson>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl Serialize for DoubleBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisJson::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DoubleBasis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        DoubleBasis::try_from(BasisJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CycloNum::try_from(CycloJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(&(xe, ye), c)| TermJson {
                xe,
                ye,
                a: format_rational(c.a()),
                b: format_rational(c.b()),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let parsed: Result<Vec<_>> = terms
            .into_iter()
            .map(|t| {
                Ok((
                    (t.xe, t.ye),
                    CycloNum::new(parse_rational(&t.a)?, parse_rational(&t.b)?),
                ))
            })
            .collect();
        Ok(LaurentPoly::from_terms(parsed.map_err(D::Error::custom)?))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<AlgebraTermJson> = self
            .terms()
            .map(|(u, c)| AlgebraTermJson {
                g: u.grp.name().into(),
                h: u.dual.name().into(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<AlgebraTermJson>::deserialize(d)?;
        let parsed: Result<Vec<_>> = terms
            .into_iter()
            .map(|t| {
                Ok((
                    DoubleBasis::try_from(BasisJson { g: t.g, h: t.h })?,
                    t.coeff,
                ))
            })
            .collect();
        Ok(AlgebraElement::from_terms(
            parsed.map_err(D::Error::custom)?,
        ))
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorJson {
            arity: self.arity(),
            terms: self
                .terms()
                .map(|(l, c)| TensorTermJson {
                    legs: l.iter().map(|u| BasisJson::from(*u)).collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TensorJson::deserialize(d)?;
        if !(1..=3).contains(&j.arity) {
            return Err(D::Error::custom(format!("unsupported arity {}", j.arity)));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.legs.len() != j.arity {
                return Err(D::Error::custom(Error::ArityMismatch(
                    t.legs.len(),
                    j.arity,
                )));
            }
            let legs: Legs = t
                .legs
                .into_iter()
                .map(DoubleBasis::try_from)
                .collect::<Result<_>>()
                .map_err(D::Error::custom)?;
            terms.push((legs, t.coeff));
        }
        Ok(TensorElement::from_terms(j.arity, terms))
    }
}

impl Serialize for ScalarMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            entries: self.entries().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScalarMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::<LaurentPoly>::deserialize(d)?;
        ScalarMatrix::new(j.rows, j.cols, j.entries).map_err(D::Error::custom)
    }
}

impl Serialize for AlgebraValuedMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            entries: self.entries().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraValuedMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::<AlgebraElement>::deserialize(d)?;
        AlgebraValuedMatrix::new(j.rows, j.cols, j.entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{casimir, universal_r, Casimir};
    use crate::scalars::Symbol;
    use proptest::prelude::*;

    #[test]
    fn cyclo_form() {
        let c = CycloNum::new(
            parse_rational("-2/6").unwrap(),
            parse_rational("5").unwrap(),
        );
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"a":"-1/3","b":"5/1"}"#
        );
    }

    #[test]
    fn laurent_form_is_sorted() {
        let p = &LaurentPoly::omega_pow(1)
            - &LaurentPoly::var_pow(Symbol::X, 2)
                .substitute_ratio()
                .unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"xe":0,"ye":0,"a":"0/1","b":"1/1"},{"xe":2,"ye":-2,"a":"-1/1","b":"0/1"}]"#
        );
    }

    #[test]
    fn algebra_and_tensor_round_trip() {
        let c1 = casimir(Casimir::C1);
        let s = serde_json::to_string(&c1).unwrap();
        assert!(
            s.starts_with(r#"[{"g":"e","h":"s","coeff":[{"xe":0,"ye":0,"a":"2/3","b":"0/1"}]}"#)
        );
        assert_eq!(serde_json::from_str::<AlgebraElement>(&s).unwrap(), c1);
        let r = universal_r();
        let s = serde_json::to_string(&r).unwrap();
        let back: TensorElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(serde_json::from_str::<CycloNum>(r#"{"a":"1/0","b":"0/1"}"#).is_err());
        assert!(
            serde_json::from_str::<AlgebraElement>(r#"[{"g":"q","h":"e","coeff":[]}]"#).is_err()
        );
        assert!(
            serde_json::from_str::<ScalarMatrix>(r#"{"rows":2,"cols":2,"entries":[]}"#).is_err()
        );
        assert!(serde_json::from_str::<TensorElement>(
            r#"{"arity":2,"terms":[{"legs":[{"g":"e","h":"e"}],"coeff":[]}]}"#
        )
        .is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            ((-3i32..=3, -3i32..=3), (-9i64..=9, -9i64..=9, 1i64..=7)),
            0..6,
        )
        .prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|(e, (a, b, d))| {
                (
                    e,
                    CycloNum::new(
                        crate::Rational::new(a.into(), d.into()),
                        crate::Rational::new(b.into(), 1.into()),
                    ),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn laurent_round_trip_is_bit_exact(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            let back: LaurentPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
    }
}
