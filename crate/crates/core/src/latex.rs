//! LaTeX rendering in the usual notation: `\sigma`, `\tau`, `\omega` and
//! starred duals.
//!
//! Polynomials are printed with a few presentational normalisations so that
//! output can be compared with hand-written displays: a common unit factor
//! `±ω^{±1}` is pulled out when it makes the remaining coefficients rational,
//! a common power of `x` is pulled out of rational polynomials, and terms with
//! irrational coefficients lead.

use std::cmp::Reverse;

use num::{One, Signed, Zero};

use crate::double::{AlgebraElement, DoubleBasis, TensorElement};
use crate::lax::AlgebraValuedMatrix;
use crate::matrix::ScalarMatrix;
use crate::scalars::{CycloNum, LaurentPoly, Rational};

/// A signed piece of output: `negative` is carried separately so terms can be
/// joined with ` + ` / ` - `.
struct Signed_ {
    negative: bool,
    body: String,
}

fn rational_body(q: &Rational) -> String {
    let q = q.abs();
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn unit_body(c: &CycloNum) -> Option<Signed_> {
    for (k, body) in [(1, "\\omega"), (-1, "\\omega^{-1}")] {
        let u = CycloNum::omega_pow(k);
        if c == &u {
            return Some(Signed_ {
                negative: false,
                body: body.into(),
            });
        }
        if c == &-&u {
            return Some(Signed_ {
                negative: true,
                body: body.into(),
            });
        }
    }
    None
}

/// `(sign, body, body_is_one)` for a coefficient.
fn cyclo_parts(c: &CycloNum) -> (Signed_, bool) {
    if c.is_rational() {
        let body = rational_body(c.a());
        let is_one = c.a().abs().is_one();
        return (
            Signed_ {
                negative: c.a().is_negative(),
                body,
            },
            is_one,
        );
    }
    if let Some(u) = unit_body(c) {
        return (u, false);
    }
    // a + bω with b ≠ 0, written ω-first and normalised so that b > 0.
    let negative = c.b().is_negative();
    let (a, b) = if negative {
        (-c.a().clone(), -c.b().clone())
    } else {
        (c.a().clone(), c.b().clone())
    };
    let mut inner = if b.is_one() {
        "\\omega".to_string()
    } else {
        format!("{}\\omega", rational_body(&b))
    };
    if !a.is_zero() {
        inner.push_str(if a.is_negative() { " - " } else { " + " });
        inner.push_str(&rational_body(&a));
    }
    (
        Signed_ {
            negative,
            body: format!("({inner})"),
        },
        false,
    )
}

pub fn cyclo_latex(c: &CycloNum) -> String {
    let (s, _) = cyclo_parts(c);
    join(vec![s])
}

fn power(var: &str, k: i32) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        k if (0..10).contains(&k) => format!("{var}^{k}"),
        k => format!("{var}^{{{k}}}"),
    }
}

fn monomial(ex: i32, ey: i32) -> String {
    format!("{}{}", power("x", ex), power("y", ey))
}

fn term(c: &CycloNum, ex: i32, ey: i32) -> Signed_ {
    let mono = monomial(ex, ey);
    let (mut s, is_one) = cyclo_parts(c);
    if !mono.is_empty() {
        s.body = if is_one {
            mono
        } else {
            format!("{}{mono}", s.body)
        };
    }
    s
}

fn join(parts: Vec<Signed_>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        match (i, p.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&p.body);
    }
    out
}

/// Terms in display order: irrational coefficients first, then by descending
/// degree; if that would start with a minus sign, the first positive term is
/// moved to the front.
fn ordered_terms(p: &LaurentPoly) -> Vec<Signed_> {
    let mut terms: Vec<(&(i32, i32), &CycloNum)> = p.terms().collect();
    terms.sort_by_key(|((ex, ey), c)| (c.is_rational(), Reverse(ex + ey), Reverse(*ex)));
    let mut parts: Vec<Signed_> = terms
        .into_iter()
        .map(|(&(ex, ey), c)| term(c, ex, ey))
        .collect();
    if parts.first().is_some_and(|p| p.negative) {
        if let Some(i) = parts.iter().position(|p| !p.negative) {
            let first = parts.remove(i);
            parts.insert(0, first);
        }
    }
    parts
}

fn unit_content(p: &LaurentPoly) -> Option<(CycloNum, LaurentPoly)> {
    if p.len() < 2 || p.terms().all(|(_, c)| c.is_rational()) {
        return None;
    }
    let (_, lead) = p.terms().max_by_key(|((ex, ey), _)| (ex + ey, *ex))?;
    for k in [1, -1] {
        let u = CycloNum::omega_pow(k);
        let inv = u.inverse().ok()?;
        let q = p.scale(&inv);
        if q.terms().all(|(_, c)| c.is_rational()) {
            let lead_q = lead * &inv;
            return Some(if lead_q.a().is_negative() {
                (-&u, -&q)
            } else {
                (u, q)
            });
        }
    }
    None
}

fn x_content(p: &LaurentPoly) -> Option<(i32, LaurentPoly)> {
    if p.len() < 2 || p.terms().any(|(&(_, ey), c)| ey != 0 || !c.is_rational()) {
        return None;
    }
    let k = p.terms().map(|(&(ex, _), _)| ex).min()?;
    (k > 0).then(|| {
        (
            k,
            LaurentPoly::from_terms(p.terms().map(|(&(ex, ey), c)| ((ex - k, ey), c.clone()))),
        )
    })
}

fn poly_signed(p: &LaurentPoly) -> Signed_ {
    if let Some((u, q)) = unit_content(p) {
        let us = unit_body(&u).expect("unit");
        return Signed_ {
            negative: us.negative,
            body: format!("{}({})", us.body, join(ordered_terms(&q))),
        };
    }
    if let Some((k, q)) = x_content(p) {
        return Signed_ {
            negative: false,
            body: format!("{}({})", power("x", k), join(ordered_terms(&q))),
        };
    }
    let mut parts = ordered_terms(p);
    if parts.len() == 1 {
        return parts.pop().expect("one term");
    }
    Signed_ {
        negative: false,
        body: join(parts),
    }
}

pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    join(vec![poly_signed(p)])
}

/// `coefficient · symbol`, with the coefficient parenthesised when it is a sum.
fn scaled(p: &LaurentPoly, symbol: &str) -> Signed_ {
    if p.is_one() {
        return Signed_ {
            negative: false,
            body: symbol.into(),
        };
    }
    if p.len() == 1 {
        let (&(ex, ey), c) = p.terms().next().expect("one term");
        let mut s = term(c, ex, ey);
        if s.body == "1" {
            s.body.clear();
        }
        s.body.push_str(symbol);
        return s;
    }
    let s = poly_signed(p);
    let body = if s.body.contains(' ') && !s.body.ends_with(')') {
        format!("({})", s.body)
    } else {
        s.body
    };
    Signed_ {
        negative: s.negative,
        body: format!("{body}{symbol}"),
    }
}

pub fn algebra_latex(a: &AlgebraElement) -> String {
    join(a.terms().map(|(u, c)| scaled(c, &u.latex())).collect())
}

pub fn tensor_latex(t: &TensorElement) -> String {
    join(
        t.terms()
            .map(|(legs, c)| {
                let symbol = legs
                    .iter()
                    .map(|u: &DoubleBasis| u.latex())
                    .collect::<Vec<_>>()
                    .join(" \\otimes ");
                scaled(c, &symbol)
            })
            .collect(),
    )
}

fn pmatrix<F: Fn(usize, usize) -> String>(rows: usize, cols: usize, entry: F) -> String {
    let body = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| entry(r, c))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect::<Vec<_>>()
        .join(" \\\\\n");
    format!("\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}")
}

pub fn matrix_latex(m: &ScalarMatrix) -> String {
    pmatrix(m.rows(), m.cols(), |r, c| poly_latex(m.get(r, c)))
}

pub fn algebra_matrix_latex(m: &AlgebraValuedMatrix) -> String {
    pmatrix(m.rows(), m.cols(), |r, c| algebra_latex(m.get(r, c)))
}
