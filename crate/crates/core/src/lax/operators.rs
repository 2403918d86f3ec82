//! The universal Lax operators in `End(V(2,1)) ⊗ D(D₃)` and
//! `End(V(3,+)) ⊗ D(D₃)`.

use super::AlgebraValuedMatrix;
use crate::double::{casimir, AlgebraElement, Casimir};
use crate::group::GroupElement;
use crate::scalars::rational::rat_frac;
use crate::scalars::{CycloNum, LaurentPoly, Symbol};

/// Which construction of the three-dimensional operator to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaxSource {
    /// The closed sum over matrix units `E^i_j`.
    Summation,
    /// The nine entries written out one by one.
    Matrix,
}

fn grp(k: i64, s: i64) -> AlgebraElement {
    AlgebraElement::group(GroupElement::new(k, s))
}

fn dual(k: i64, s: i64) -> AlgebraElement {
    AlgebraElement::dual(GroupElement::new(k, s))
}

fn poly_w(k: i64) -> LaurentPoly {
    LaurentPoly::omega_pow(k)
}

/// `𝔏(x)` attached to `V(2,1)`:
///
/// ```text
/// (1,1) = Σ_j ωx σ⁻¹(σʲτ)* + (ωʲ − ωx²c²σ⁻¹)(σʲ)*
/// (1,2) = Σ_j ωʲ(σʲτ)* + ⅓(ω−1) c x ωʲ σʲτ σ*
/// (2,1) = Σ_j ωʲ(σ⁻ʲτ)* + ⅓(ω−1) c x ωʲ σ⁻ʲτ (σ⁻¹)*
/// (2,2) = Σ_j ωx σ(σʲτ)* + (ωʲ − ωx²c²σ)(σ⁻ʲ)*
/// ```
pub fn universal_lax_2(sym: Symbol, which: Casimir) -> AlgebraValuedMatrix {
    let x = LaurentPoly::var(sym);
    let c = casimir(which);
    let c_sq = c.elem_mul(&c);
    let wx = &poly_w(1) * &x;
    let wx2 = &wx * &x;
    let third = CycloNum::rational(rat_frac(1, 3));
    // ⅓(ω − 1) x
    let off_coeff = (&(&poly_w(1) - &LaurentPoly::one()) * &x).scale(&third);

    let mut e = vec![AlgebraElement::zero(); 4];
    for j in 0..3i64 {
        let wj = poly_w(j);
        e[0] = &e[0] + &grp(-1, 0).elem_mul(&dual(j, 1)).scale(&wx);
        let diag_l = &AlgebraElement::scalar(&wj) - &c_sq.elem_mul(&grp(-1, 0)).scale(&wx2);
        e[0] = &e[0] + &diag_l.elem_mul(&dual(j, 0));

        e[1] = &e[1] + &dual(j, 1).scale(&wj);
        let twisted = c.elem_mul(&grp(j, 1)).elem_mul(&dual(1, 0));
        e[1] = &e[1] + &twisted.scale(&(&off_coeff * &wj));

        e[2] = &e[2] + &dual(-j, 1).scale(&wj);
        let twisted = c.elem_mul(&grp(-j, 1)).elem_mul(&dual(-1, 0));
        e[2] = &e[2] + &twisted.scale(&(&off_coeff * &wj));

        e[3] = &e[3] + &grp(1, 0).elem_mul(&dual(j, 1)).scale(&wx);
        let diag_r = &AlgebraElement::scalar(&wj) - &c_sq.elem_mul(&grp(1, 0)).scale(&wx2);
        e[3] = &e[3] + &diag_r.elem_mul(&dual(-j, 0));
    }
    AlgebraValuedMatrix::new(2, 2, e).expect("2x2")
}

/// `𝔏(x)` attached to `V(3,+)`, built from either the matrix-unit sum or the
/// written-out entries, with the given Casimir in the diagonal `x(x−1)` term.
pub fn universal_lax_3(sym: Symbol, which: Casimir, source: LaxSource) -> AlgebraValuedMatrix {
    match source {
        LaxSource::Summation => lax_3_summation(sym, which),
        LaxSource::Matrix => lax_3_entries(sym, which),
    }
}

/// `Σ_{i,j} E^i_j ⊗ [(1−x)((σ^{j−i})* + (σ^{2−i−j}τ)*) + x(x−1) c δ_ij σ^{i−1}τ + x σ^{i−j}(σ^{i−1}τ)*]`
/// with `i, j` in 1..=3 and exponents of σ reduced mod 3.
fn lax_3_summation(sym: Symbol, which: Casimir) -> AlgebraValuedMatrix {
    let x = LaurentPoly::var(sym);
    let one_minus_x = &LaurentPoly::one() - &x;
    let quad = &x * &(&x - &LaurentPoly::one());
    let c = casimir(which);
    AlgebraValuedMatrix::from_fn(3, 3, |r, col| {
        let (i, j) = (r as i64 + 1, col as i64 + 1);
        let mut entry = (&dual(j - i, 0) + &dual(2 - (i + j), 1)).scale(&one_minus_x);
        if i == j {
            entry = &entry + &c.elem_mul(&grp(i - 1, 1)).scale(&quad);
        }
        &entry + &grp(i - j, 0).elem_mul(&dual(i - 1, 1)).scale(&x)
    })
}

fn lax_3_entries(sym: Symbol, which: Casimir) -> AlgebraValuedMatrix {
    let x = LaurentPoly::var(sym);
    let one_minus_x = &LaurentPoly::one() - &x;
    let quad = &x * &(&x - &LaurentPoly::one());
    let c = casimir(which);
    // (1 − x)[a* + b*]
    let pair =
        |a: (i64, i64), b: (i64, i64)| (&dual(a.0, a.1) + &dual(b.0, b.1)).scale(&one_minus_x);
    // x g h*
    let shifted = |g: (i64, i64), h: (i64, i64)| grp(g.0, g.1).elem_mul(&dual(h.0, h.1)).scale(&x);
    // c x(x − 1) g
    let cas = |g: (i64, i64)| c.elem_mul(&grp(g.0, g.1)).scale(&quad);
    // x g* (pure dual)
    let xdual = |h: (i64, i64)| dual(h.0, h.1).scale(&x);

    const E: (i64, i64) = (0, 0);
    const S: (i64, i64) = (1, 0);
    const SI: (i64, i64) = (-1, 0);
    const T: (i64, i64) = (0, 1);
    const ST: (i64, i64) = (1, 1);
    const SIT: (i64, i64) = (-1, 1);

    let entries = vec![
        &(&pair(E, T) + &cas(T)) + &xdual(T),
        &pair(S, SIT) + &shifted(SI, T),
        &pair(SI, ST) + &shifted(S, T),
        &pair(SI, SIT) + &shifted(S, ST),
        &(&pair(E, ST) + &cas(ST)) + &xdual(ST),
        &pair(S, T) + &shifted(SI, ST),
        &pair(S, ST) + &shifted(SI, SIT),
        &pair(SI, T) + &shifted(S, SIT),
        &(&pair(E, SIT) + &cas(SIT)) + &xdual(SIT),
    ];
    AlgebraValuedMatrix::new(3, 3, entries).expect("3x3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::DoubleBasis;

    fn g(name: &str) -> GroupElement {
        name.parse().unwrap()
    }

    #[test]
    fn both_constructions_agree() {
        for which in [Casimir::C1, Casimir::C2] {
            assert_eq!(
                universal_lax_3(Symbol::X, which, LaxSource::Summation),
                universal_lax_3(Symbol::X, which, LaxSource::Matrix),
                "{which:?}"
            );
        }
    }

    #[test]
    fn matrix_form_top_left_entry() {
        let l = universal_lax_3(Symbol::X, Casimir::C2, LaxSource::Matrix);
        let x = LaurentPoly::x();
        let one_minus_x = &LaurentPoly::one() - &x;
        let expected = &(&(&dual(0, 0) + &dual(0, 1)).scale(&one_minus_x)
            + &casimir(Casimir::C2)
                .elem_mul(&grp(0, 1))
                .scale(&(&x * &(&x - &LaurentPoly::one()))))
            + &dual(0, 1).scale(&x);
        assert_eq!(l.get(0, 0), &expected);
    }

    #[test]
    fn casimir_choice_is_invisible_in_the_two_dimensional_operator() {
        assert_eq!(
            universal_lax_2(Symbol::X, Casimir::C1),
            universal_lax_2(Symbol::X, Casimir::C2)
        );
    }

    #[test]
    fn lax_2_entry_shapes() {
        let l = universal_lax_2(Symbol::X, Casimir::C1);
        // constant part of (1,2) is Σ_j ωʲ (σʲτ)*
        let constant = l.get(0, 1).limit_at_zero(Symbol::X).unwrap();
        let expected = AlgebraElement::from_terms((0..3).map(|j| {
            (
                DoubleBasis::dual_only(GroupElement::reflection(j)),
                poly_w(j),
            )
        }));
        assert_eq!(constant, expected);
        assert!(
            l.get(0, 0).coeff(DoubleBasis::new(g("s2"), g("t")))
                == LaurentPoly::monomial(CycloNum::omega(), 1, 0)
        );
    }
}
