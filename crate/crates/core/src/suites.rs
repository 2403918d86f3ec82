//! Named verification suites. Each suite is a fixed, ordered list of checks;
//! checks run in parallel and their reports come back in declaration order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::double::{
    antipode, basis_mul, casimir, coproduct, counit, universal_r, AlgebraElement, Casimir,
    DoubleBasis, Placement, TensorElement,
};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::lax::{
    check_parametric_ybe, check_rll, check_universal_lax, derived_l, golden_l_tables, r_matrix_2,
    r_matrix_3, universal_lax_2, universal_lax_3, AlgebraValuedMatrix, LaxFactors, LaxFamily,
    LaxSource, RelationReport, RllFactors, Witness, YbeFactors,
};
use crate::matrix::ScalarMatrix;
use crate::reps::{apply_to_tensor_leg, IrrepLabel, Representation};
use crate::scalars::{rational::rat, CycloNum, LaurentPoly, Rational, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hopf,
    Quasitriangular,
    YbeConstant,
    Reps,
    Casimirs,
    YbeParametric,
    LaxUniversal,
    LaxGolden,
    Rll,
    Limits,
    All,
}

impl Suite {
    /// Every individual suite, in the order `all` runs them.
    pub const ORDER: [Suite; 10] = [
        Suite::Hopf,
        Suite::Quasitriangular,
        Suite::YbeConstant,
        Suite::Reps,
        Suite::Casimirs,
        Suite::YbeParametric,
        Suite::LaxUniversal,
        Suite::LaxGolden,
        Suite::Rll,
        Suite::Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Quasitriangular => "quasitriangular",
            Suite::YbeConstant => "ybe-constant",
            Suite::Reps => "reps",
            Suite::Casimirs => "casimirs",
            Suite::YbeParametric => "ybe-parametric",
            Suite::LaxUniversal => "lax-universal",
            Suite::LaxGolden => "lax-golden",
            Suite::Rll => "rll",
            Suite::Limits => "limits",
            Suite::All => "all",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Suite::ORDER
            .iter()
            .map(|s| s.name())
            .chain(["all"])
            .collect()
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ORDER.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ORDER
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

type CheckFn = Box<dyn Fn() -> Result<RelationReport> + Send + Sync>;

struct Check {
    name: String,
    run: CheckFn,
}

fn check<F>(name: impl Into<String>, run: F) -> Check
where
    F: Fn(&str) -> Result<RelationReport> + Send + Sync + 'static,
{
    let name = name.into();
    let captured = name.clone();
    Check {
        name,
        run: Box::new(move || run(&captured)),
    }
}

/// Runs a suite (or all of them) on the current rayon pool.
pub fn run_suite(suite: Suite) -> Result<Vec<RelationReport>> {
    let checks: Vec<Check> = suite.expand().into_iter().flat_map(checks_for).collect();
    checks
        .par_iter()
        .map(|c| {
            let mut report = (c.run)()?;
            report.relation = c.name.clone();
            Ok(report)
        })
        .collect()
}

fn checks_for(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Hopf => hopf_checks(),
        Suite::Quasitriangular => quasitriangular_checks(),
        Suite::YbeConstant => ybe_constant_checks(),
        Suite::Reps => reps_checks(),
        Suite::Casimirs => casimir_checks(),
        Suite::YbeParametric => ybe_parametric_checks(),
        Suite::LaxUniversal => lax_universal_checks(),
        Suite::LaxGolden => lax_golden_checks(),
        Suite::Rll => rll_checks(),
        Suite::Limits => limit_checks(),
        Suite::All => unreachable!("expanded"),
    }
}

// ---------------------------------------------------------------------------
// Exhaustive helpers

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("exact types serialize")
}

fn mismatch<T: PartialEq + Serialize>(row: usize, col: usize, lhs: T, rhs: T) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        row,
        col,
        lhs: to_value(&lhs),
        rhs: to_value(&rhs),
    })
}

/// First failure (by basis index) of `f` over all 36 basis elements.
pub fn over_basis<F>(relation: &str, f: F) -> RelationReport
where
    F: Fn(DoubleBasis) -> Option<Witness> + Sync,
{
    let witness = (0..DoubleBasis::COUNT)
        .into_par_iter()
        .find_map_first(|i| f(DoubleBasis::from_index(i)));
    RelationReport::from_witness(relation, witness)
}

/// First failure (row-major by basis indices) of `f` over all 1296 pairs.
pub fn over_pairs<F>(relation: &str, f: F) -> RelationReport
where
    F: Fn(DoubleBasis, DoubleBasis) -> Option<Witness> + Sync,
{
    let n = DoubleBasis::COUNT;
    let witness = (0..n * n).into_par_iter().find_map_first(|k| {
        f(
            DoubleBasis::from_index(k / n),
            DoubleBasis::from_index(k % n),
        )
    });
    RelationReport::from_witness(relation, witness)
}

/// Compares two tensors coefficient by coefficient; the witness row is the
/// position of the first differing leg tuple in the mixed-radix basis order.
pub fn compare_tensors(relation: &str, lhs: &TensorElement, rhs: &TensorElement) -> RelationReport {
    if lhs.arity() != rhs.arity() {
        return RelationReport::fail(
            relation,
            Witness {
                row: 0,
                col: 0,
                lhs: format!("arity {}", lhs.arity()).into(),
                rhs: format!("arity {}", rhs.arity()).into(),
            },
        );
    }
    let mut keys: Vec<_> = lhs
        .terms()
        .map(|(l, _)| l.clone())
        .chain(rhs.terms().map(|(l, _)| l.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let witness = keys.into_iter().find_map(|legs| {
        let row = legs
            .iter()
            .fold(0, |acc, u| acc * DoubleBasis::COUNT + u.index());
        mismatch(row, 0, lhs.coeff(&legs), rhs.coeff(&legs))
    });
    RelationReport::from_witness(relation, witness)
}

fn single(u: DoubleBasis) -> TensorElement {
    TensorElement::pure(&[&AlgebraElement::basis(u)])
}

/// Checks that a relation is violated; the report passes when it is.
fn expect_violation(relation: &str, report: RelationReport) -> RelationReport {
    if report.passed() {
        RelationReport::fail(
            relation,
            Witness {
                row: 0,
                col: 0,
                lhs: "relation holds".into(),
                rhs: "expected a violation".into(),
            },
        )
    } else {
        RelationReport::pass(relation)
    }
}

// ---------------------------------------------------------------------------
// hopf

fn hopf_checks() -> Vec<Check> {
    vec![
        check("hopf:coassociativity", |name| {
            Ok(over_basis(name, |u| {
                let d = coproduct(u);
                let left = d.expand_leg(0, coproduct).expect("leg 0");
                let right = d.expand_leg(1, coproduct).expect("leg 1");
                mismatch(u.index(), 0, left, right)
            }))
        }),
        check("hopf:counit-left", |name| {
            Ok(over_basis(name, |u| {
                let lhs = coproduct(u).contract_leg(0, counit).expect("leg 0");
                mismatch(u.index(), 0, lhs, single(u))
            }))
        }),
        check("hopf:counit-right", |name| {
            Ok(over_basis(name, |u| {
                let lhs = coproduct(u).contract_leg(1, counit).expect("leg 1");
                mismatch(u.index(), 0, lhs, single(u))
            }))
        }),
        check("hopf:antipode-left", |name| {
            Ok(over_basis(name, |u| {
                let lhs = coproduct(u)
                    .map_leg(0, antipode)
                    .and_then(|t| t.multiply_legs())
                    .expect("arity 2");
                let rhs = AlgebraElement::unit().scale(&counit(u));
                mismatch(u.index(), 0, lhs, rhs)
            }))
        }),
        check("hopf:antipode-right", |name| {
            Ok(over_basis(name, |u| {
                let lhs = coproduct(u)
                    .map_leg(1, antipode)
                    .and_then(|t| t.multiply_legs())
                    .expect("arity 2");
                let rhs = AlgebraElement::unit().scale(&counit(u));
                mismatch(u.index(), 0, lhs, rhs)
            }))
        }),
        check("hopf:antipode-involutive", |name| {
            Ok(over_basis(name, |u| {
                mismatch(u.index(), 0, antipode(antipode(u)), u)
            }))
        }),
        check("hopf:antipode-antimultiplicative", |name| {
            Ok(over_pairs(name, |u, v| {
                let lhs = product(u, v).antipode();
                let rhs = AlgebraElement::basis(antipode(v))
                    .elem_mul(&AlgebraElement::basis(antipode(u)));
                mismatch(u.index(), v.index(), lhs, rhs)
            }))
        }),
        check("hopf:coproduct-multiplicative", |name| {
            Ok(over_pairs(name, |u, v| {
                let lhs = product(u, v).coproduct();
                let rhs = coproduct(u).tensor_mul(&coproduct(v)).expect("arity 2");
                mismatch(u.index(), v.index(), lhs, rhs)
            }))
        }),
        check("hopf:counit-multiplicative", |name| {
            Ok(over_pairs(name, |u, v| {
                let lhs = product(u, v).counit();
                let rhs = &counit(u) * &counit(v);
                mismatch(u.index(), v.index(), lhs, rhs)
            }))
        }),
        check("hopf:unit", |name| {
            let one = AlgebraElement::unit();
            let lhs = one.coproduct();
            let rhs = TensorElement::pure(&[&one, &one]);
            let mut report = compare_tensors(name, &lhs, &rhs);
            if report.passed() {
                report = RelationReport::compare(name, 0, 0, &one.counit(), &LaurentPoly::one());
            }
            Ok(report)
        }),
    ]
}

fn product(u: DoubleBasis, v: DoubleBasis) -> AlgebraElement {
    basis_mul(u, v).map_or_else(AlgebraElement::zero, AlgebraElement::basis)
}

// ---------------------------------------------------------------------------
// quasitriangular and constant YBE

fn embedded_r() -> Result<[TensorElement; 3]> {
    let r = universal_r();
    Ok([
        r.embed_leg(Placement::P12)?,
        r.embed_leg(Placement::P13)?,
        r.embed_leg(Placement::P23)?,
    ])
}

fn quasitriangular_checks() -> Vec<Check> {
    vec![
        check("quasitriangular:intertwines-coproducts", |name| {
            let r = universal_r();
            Ok(over_basis(name, |u| {
                let d = coproduct(u);
                let lhs = r.tensor_mul(&d).expect("arity 2");
                let rhs = d.flip().tensor_mul(&r).expect("arity 2");
                mismatch(u.index(), 0, lhs, rhs)
            }))
        }),
        check("quasitriangular:coproduct-first-leg", |name| {
            let [_, r13, r23] = embedded_r()?;
            let lhs = universal_r().expand_leg(0, coproduct)?;
            Ok(compare_tensors(name, &lhs, &r13.tensor_mul(&r23)?))
        }),
        check("quasitriangular:coproduct-second-leg", |name| {
            let [r12, r13, _] = embedded_r()?;
            let lhs = universal_r().expand_leg(1, coproduct)?;
            Ok(compare_tensors(name, &lhs, &r13.tensor_mul(&r12)?))
        }),
    ]
}

fn ybe_constant_checks() -> Vec<Check> {
    vec![check("ybe-constant:universal-r", |name| {
        let [r12, r13, r23] = embedded_r()?;
        let (lhs, rhs) = rayon::join(
            || r12.tensor_mul(&r13).and_then(|t| t.tensor_mul(&r23)),
            || r23.tensor_mul(&r13).and_then(|t| t.tensor_mul(&r12)),
        );
        Ok(compare_tensors(name, &lhs?, &rhs?))
    })]
}

// ---------------------------------------------------------------------------
// reps

/// Homomorphism check with a concrete witness for the first failing pair.
pub fn homomorphism_report(relation: &str, rep: &Representation) -> RelationReport {
    let zero = ScalarMatrix::zeros(rep.dim(), rep.dim());
    let mut report = over_pairs(relation, |u, v| {
        let lhs = rep.image(u).mul(rep.image(v)).expect("square images");
        let rhs = basis_mul(u, v).map_or(zero.clone(), |w| rep.image(w).clone());
        mismatch(u.index(), v.index(), lhs, rhs)
    });
    if report.passed() {
        let unit = rep.image_of(&AlgebraElement::unit());
        report =
            RelationReport::compare_scalar(relation, &unit, &ScalarMatrix::identity(rep.dim()));
    }
    report
}

fn reps_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for label in IrrepLabel::all() {
        checks.push(check(
            format!("reps:homomorphism:{}", label.name()),
            move |name| Ok(homomorphism_report(name, &Representation::irrep(label))),
        ));
    }
    for label in IrrepLabel::all() {
        checks.push(check(
            format!("reps:dual-support-is-a-class:{}", label.name()),
            move |name| {
                let support = Representation::irrep(label).dual_support();
                let is_class = GroupElement::conjugacy_classes()
                    .into_iter()
                    .any(|class| class == support);
                Ok(RelationReport::compare(
                    name,
                    0,
                    0,
                    &(is_class, !support.is_empty()),
                    &(true, true),
                ))
            },
        ));
    }
    for label in IrrepLabel::all() {
        checks.push(check(
            format!("reps:irreducible:{}", label.name()),
            move |name| {
                let commutant = Representation::irrep(label).commutant_dimension();
                Ok(RelationReport::compare(name, 0, 0, &commutant, &1))
            },
        ));
    }
    checks.push(check("reps:dimension-count", |name| {
        let total: usize = IrrepLabel::all().iter().map(|l| l.dim() * l.dim()).sum();
        Ok(RelationReport::compare(
            name,
            0,
            0,
            &total,
            &DoubleBasis::COUNT,
        ))
    }));
    checks
}

// ---------------------------------------------------------------------------
// casimirs

fn reflection_sum() -> AlgebraElement {
    (0..3).fold(AlgebraElement::zero(), |acc, k| {
        let g = GroupElement::reflection(k);
        &acc + &AlgebraElement::group(g).elem_mul(&AlgebraElement::dual(g))
    })
}

fn casimir_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (tag, which) in [("c1", Casimir::C1), ("c2", Casimir::C2)] {
        checks.push(check(format!("casimirs:central:{tag}"), move |name| {
            let c = casimir(which);
            Ok(over_basis(name, |u| {
                let comm = c.commutator(&AlgebraElement::basis(u));
                mismatch(u.index(), 0, comm, AlgebraElement::zero())
            }))
        }));
    }
    checks.push(check("casimirs:difference", |name| {
        let diff = &casimir(Casimir::C2) - &casimir(Casimir::C1);
        Ok(RelationReport::compare(
            name,
            0,
            0,
            &diff,
            &reflection_sum(),
        ))
    }));
    checks
}

// ---------------------------------------------------------------------------
// parametric YBE and regularity

/// The rational points used for specialization cross-checks.
pub fn specialization_points() -> Vec<(Rational, Rational)> {
    let xs = [2, 3, -1];
    let ys = [5, 7];
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (rat(x), rat(y))))
        .collect()
}

fn specialized_ybe(name: &str, r: &ScalarMatrix) -> Result<RelationReport> {
    let factors = YbeFactors::new(r)?;
    for (x, y) in specialization_points() {
        let (lhs, rhs) = factors.specialize(&x, &y)?.sides()?;
        let report = RelationReport::compare_scalar(name, &lhs, &rhs);
        if !report.passed() {
            return Ok(report);
        }
    }
    Ok(RelationReport::pass(name))
}

fn ybe_parametric_checks() -> Vec<Check> {
    vec![
        check("ybe-parametric:R21", |name| {
            check_parametric_ybe(name, &r_matrix_2(Symbol::X))
        }),
        check("ybe-parametric:R3p", |name| {
            check_parametric_ybe(name, &r_matrix_3(Symbol::X))
        }),
        check("ybe-parametric:R21:specialized", |name| {
            specialized_ybe(name, &r_matrix_2(Symbol::X))
        }),
        check("ybe-parametric:R3p:specialized", |name| {
            specialized_ybe(name, &r_matrix_3(Symbol::X))
        }),
        check("ybe-parametric:R21:regularity", |name| {
            let at_one = r_matrix_2(Symbol::X).evaluate(Symbol::X, &rat(1))?;
            let expected = ScalarMatrix::swap(2).scale(&LaurentPoly::constant(
                &CycloNum::omega() - &CycloNum::from_ints(1, 0),
            ));
            Ok(RelationReport::compare_scalar(name, &at_one, &expected))
        }),
        check("ybe-parametric:R3p:regularity", |name| {
            let at_one = r_matrix_3(Symbol::X).evaluate(Symbol::X, &rat(1))?;
            Ok(RelationReport::compare_scalar(
                name,
                &at_one,
                &ScalarMatrix::swap(3),
            ))
        }),
    ]
}

// ---------------------------------------------------------------------------
// universal Lax relation

fn specialized_lax(
    name: &str,
    r: &ScalarMatrix,
    lax: &AlgebraValuedMatrix,
) -> Result<RelationReport> {
    let factors = LaxFactors::new(r, lax)?;
    for (x, y) in specialization_points() {
        let (lhs, rhs) = factors.specialize(&x, &y)?.sides()?;
        let report = RelationReport::compare_algebra(name, &lhs, &rhs);
        if !report.passed() {
            return Ok(report);
        }
    }
    Ok(RelationReport::pass(name))
}

fn source_tag(source: LaxSource) -> &'static str {
    match source {
        LaxSource::Summation => "summation",
        LaxSource::Matrix => "matrix",
    }
}

fn lax_universal_checks() -> Vec<Check> {
    let mut checks = vec![
        check("lax-universal:L2", |name| {
            check_universal_lax(
                name,
                &r_matrix_2(Symbol::X),
                &universal_lax_2(Symbol::X, Casimir::C1),
            )
        }),
        check("lax-universal:L2:specialized", |name| {
            specialized_lax(
                name,
                &r_matrix_2(Symbol::X),
                &universal_lax_2(Symbol::X, Casimir::C1),
            )
        }),
        check("lax-universal:L3", |name| {
            check_universal_lax(
                name,
                &r_matrix_3(Symbol::X),
                &LaxFamily::Three.lax(Symbol::X),
            )
        }),
        check("lax-universal:L3:specialized", |name| {
            specialized_lax(
                name,
                &r_matrix_3(Symbol::X),
                &LaxFamily::Three.lax(Symbol::X),
            )
        }),
    ];
    // The three-dimensional operator is written both as a closed sum and entry
    // by entry, with different Casimirs. Each combination gets a definite verdict.
    for source in [LaxSource::Summation, LaxSource::Matrix] {
        for (tag, which, satisfies) in [("c1", Casimir::C1, false), ("c2", Casimir::C2, true)] {
            let verdict = if satisfies { "satisfies" } else { "violates" };
            let name = format!("lax-universal:L3:{}-{tag}:{verdict}", source_tag(source));
            checks.push(check(name, move |name| {
                let report = check_universal_lax(
                    name,
                    &r_matrix_3(Symbol::X),
                    &universal_lax_3(Symbol::X, which, source),
                )?;
                Ok(if satisfies {
                    report
                } else {
                    expect_violation(name, report)
                })
            }));
        }
    }
    for (tag, which) in [("c1", Casimir::C1), ("c2", Casimir::C2)] {
        checks.push(check(
            format!("lax-universal:L3:summation-equals-matrix:{tag}"),
            move |name| {
                let sum = universal_lax_3(Symbol::X, which, LaxSource::Summation);
                let mat = universal_lax_3(Symbol::X, which, LaxSource::Matrix);
                Ok(RelationReport::compare_algebra(name, &sum, &mat))
            },
        ));
    }
    // In the two-dimensional operator the Casimir only enters through c²σ^{±1}
    // on the rotation duals, where the reflection part of c₂ vanishes.
    checks.push(check("lax-universal:L2:c1-and-c2-coincide", |name| {
        let l1 = universal_lax_2(Symbol::X, Casimir::C1);
        let l2 = universal_lax_2(Symbol::X, Casimir::C2);
        Ok(RelationReport::compare_algebra(name, &l1, &l2))
    }));
    checks
}

// ---------------------------------------------------------------------------
// derived L tables, RLL and limits

fn lax_golden_checks() -> Vec<Check> {
    let mut checks: Vec<Check> = golden_l_tables()
        .into_iter()
        .map(|table| {
            check(format!("lax-golden:{}", table.name()), move |name| {
                Ok(RelationReport::compare_scalar(
                    name,
                    &derived_l(table.family, table.label),
                    &table.printed,
                ))
            })
        })
        .collect();
    // Conjugating by I ⊗ diag(1, −1) replaces π(τ) by −π(τ) in a two-dimensional
    // irrep with rotation fluxes: an equivalent representation.
    for table in golden_l_tables() {
        if table.family != LaxFamily::Three || !matches!(table.label, IrrepLabel::Two(_)) {
            continue;
        }
        checks.push(check(
            format!("lax-golden:{}:with-opposite-tau-sign", table.name()),
            move |name| {
                let flip = ScalarMatrix::identity(3).kron(&ScalarMatrix::diag(vec![
                    LaurentPoly::one(),
                    LaurentPoly::int(-1),
                ]));
                let regauged = flip
                    .mul(&derived_l(table.family, table.label))?
                    .mul(&flip)?;
                Ok(RelationReport::compare_scalar(
                    name,
                    &regauged,
                    &table.printed,
                ))
            },
        ));
    }
    checks
}

fn rll_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for family in LaxFamily::all() {
        for label in IrrepLabel::all() {
            checks.push(check(
                format!("rll:L{family}:{}", label.name()),
                move |name| {
                    check_rll(
                        name,
                        &family.r_matrix(Symbol::X),
                        &derived_l(family, label),
                        label.dim(),
                    )
                },
            ));
        }
    }
    for family in LaxFamily::all() {
        checks.push(check(format!("rll:L{family}:specialized"), move |name| {
            for label in IrrepLabel::all() {
                let factors = RllFactors::new(
                    &family.r_matrix(Symbol::X),
                    &derived_l(family, label),
                    label.dim(),
                )?;
                for (x, y) in specialization_points() {
                    let (lhs, rhs) = factors.specialize(&x, &y)?.sides()?;
                    let report = RelationReport::compare_scalar(name, &lhs, &rhs);
                    if !report.passed() {
                        return Ok(report);
                    }
                }
            }
            Ok(RelationReport::pass(name))
        }));
    }
    for table in golden_l_tables() {
        checks.push(check(
            format!("rll:printed:{}", table.name()),
            move |name| {
                check_rll(
                    name,
                    &table.family.r_matrix(Symbol::X),
                    &table.printed,
                    table.label.dim(),
                )
            },
        ));
    }
    checks
}

fn limit_checks() -> Vec<Check> {
    LaxFamily::all()
        .into_iter()
        .map(|family| {
            check(format!("limits:L{family}"), move |name| {
                let limit = family.lax(Symbol::X).limit_at_zero(Symbol::X)?;
                let expected = apply_to_tensor_leg(
                    &universal_r(),
                    0,
                    &Representation::irrep(family.auxiliary()),
                )?;
                Ok(RelationReport::compare_algebra(name, &limit, &expected))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::names() {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Hopf, Suite::Casimirs, Suite::Reps, Suite::Limits] {
            for report in run_suite(suite).unwrap() {
                assert!(report.passed(), "{report:?}");
            }
        }
    }

    #[test]
    fn report_order_is_declaration_order() {
        let names: Vec<_> = run_suite(Suite::Casimirs)
            .unwrap()
            .into_iter()
            .map(|r| r.relation)
            .collect();
        assert_eq!(
            names,
            [
                "casimirs:central:c1",
                "casimirs:central:c2",
                "casimirs:difference"
            ]
        );
    }

    #[test]
    fn corrupted_tau_sign_gives_pair_witness() {
        let good = Representation::irrep(IrrepLabel::ThreePlus);
        let duals = GroupElement::all()
            .map(|h| good.dual_image(h).clone())
            .collect();
        let bad = Representation::from_generators(
            "bad",
            good.sigma_image().clone(),
            good.tau_image()
                .scale(&LaurentPoly::int(-1))
                .kron(&ScalarMatrix::identity(1)),
            duals,
        );
        // flipping τ alone gives π(3,-), which is still a representation
        assert!(homomorphism_report("flip", &bad.unwrap()).passed());
        let mut tau = good.tau_image().clone();
        tau.set(0, 0, LaurentPoly::int(-1));
        let duals = GroupElement::all()
            .map(|h| good.dual_image(h).clone())
            .collect();
        let bad =
            Representation::from_generators("bad", good.sigma_image().clone(), tau, duals).unwrap();
        let report = homomorphism_report("bad", &bad);
        assert!(!report.passed());
        assert!(report.witness.is_some());
    }

    #[test]
    fn tensor_witness_locates_first_difference() {
        let r = universal_r();
        let mut other = r.clone();
        let legs = r.terms().next().unwrap().0.clone();
        other = &other - &TensorElement::from_terms(2, [(legs.clone(), LaurentPoly::one())]);
        let report = compare_tensors("t", &r, &other);
        let w = report.witness.unwrap();
        assert_eq!(
            w.row,
            legs[0].index() * DoubleBasis::COUNT + legs[1].index()
        );
    }
}
