//! Hopf structure, universal R-matrix and the two Casimir elements.

use super::{AlgebraElement, DoubleBasis, Legs, TensorElement};
use crate::group::GroupElement;
use crate::scalars::rational::rat_frac;
use crate::scalars::LaurentPoly;

fn pair(a: DoubleBasis, b: DoubleBasis) -> Legs {
    [a, b].into_iter().collect()
}

/// `Δ(g h*) = Σ_k g(k⁻¹h)* ⊗ g k*`.
pub fn coproduct(u: DoubleBasis) -> TensorElement {
    TensorElement::from_terms(
        2,
        GroupElement::all().map(|k| {
            let left = DoubleBasis::new(u.grp, k.inverse().mul(u.dual));
            let right = DoubleBasis::new(u.grp, k);
            (pair(left, right), LaurentPoly::one())
        }),
    )
}

/// `Δᵀ(g h*) = Σ_k g k* ⊗ g(k⁻¹h)*`.
pub fn coproduct_opposite(u: DoubleBasis) -> TensorElement {
    TensorElement::from_terms(
        2,
        GroupElement::all().map(|k| {
            let left = DoubleBasis::new(u.grp, k);
            let right = DoubleBasis::new(u.grp, k.inverse().mul(u.dual));
            (pair(left, right), LaurentPoly::one())
        }),
    )
}

/// `S(g h*) = g⁻¹ (g h⁻¹ g⁻¹)*`.
pub fn antipode(u: DoubleBasis) -> DoubleBasis {
    let g_inv = u.grp.inverse();
    DoubleBasis::new(g_inv, u.grp.mul(u.dual.inverse()).mul(g_inv))
}

/// `ε(g h*) = δ(h, e)`.
pub fn counit(u: DoubleBasis) -> LaurentPoly {
    if u.dual.is_identity() {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

/// `𝓡 = Σ_g g ⊗ g*` with the group-like first leg expanded.
pub fn universal_r() -> TensorElement {
    let mut terms = Vec::with_capacity(DoubleBasis::COUNT);
    for g in GroupElement::all() {
        for h in GroupElement::all() {
            terms.push((
                pair(DoubleBasis::new(g, h), DoubleBasis::dual_only(g)),
                LaurentPoly::one(),
            ));
        }
    }
    TensorElement::from_terms(2, terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Casimir {
    C1,
    C2,
}

/// `c₁ = ⅓(2e − σ − σ⁻¹)(σ* + (σ⁻¹)*)`, and `c₂ = c₁ + Σ_k σᵏτ (σᵏτ)*`.
pub fn casimir(which: Casimir) -> AlgebraElement {
    let sigma = GroupElement::sigma();
    let rot = &(&AlgebraElement::unit().scale(&LaurentPoly::int(2))
        - &AlgebraElement::group(sigma))
        - &AlgebraElement::group(sigma.inverse());
    let duals = &AlgebraElement::dual(sigma) + &AlgebraElement::dual(sigma.inverse());
    let c1 = rot.elem_mul(&duals).scale_rational(&rat_frac(1, 3));
    match which {
        Casimir::C1 => c1,
        Casimir::C2 => (0..3).fold(c1, |acc, k| {
            let refl = GroupElement::reflection(k);
            &acc + &AlgebraElement::group(refl).elem_mul(&AlgebraElement::dual(refl))
        }),
    }
}

impl AlgebraElement {
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (u, c) in self.terms() {
            for (l, _) in coproduct(*u).terms() {
                out.add_term(l.clone(), c);
            }
        }
        out
    }

    pub fn coproduct_opposite(&self) -> TensorElement {
        self.coproduct().flip()
    }

    pub fn antipode(&self) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms().map(|(u, c)| (antipode(*u), c.clone())))
    }

    pub fn counit(&self) -> LaurentPoly {
        self.terms()
            .filter(|(u, _)| u.dual.is_identity())
            .fold(LaurentPoly::zero(), |acc, (_, c)| &acc + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::basis_mul;

    fn g(name: &str) -> GroupElement {
        name.parse().unwrap()
    }

    fn b(gr: &str, h: &str) -> DoubleBasis {
        DoubleBasis::new(g(gr), g(h))
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct(b("s", "t"));
        assert_eq!(d.len(), 6);
        assert_eq!(d.coeff(&[b("s", "t"), b("s", "e")]), LaurentPoly::one());
        let pure = coproduct(b("e", "s"));
        for k in GroupElement::all() {
            assert_eq!(
                pure.coeff(&[b("e", k.inverse().mul(g("s")).name()), b("e", k.name())]),
                LaurentPoly::one()
            );
        }
        assert!(coproduct_opposite(b("s", "t"))
            .coeff(&[b("s", "e"), b("s", "t")])
            .is_one());
        for u in DoubleBasis::all() {
            assert_eq!(coproduct_opposite(u), coproduct(u).flip());
            let basis = AlgebraElement::basis(u);
            assert_eq!(
                coproduct(u)
                    .contract_leg(0, counit)
                    .unwrap()
                    .to_algebra()
                    .unwrap(),
                basis
            );
            assert_eq!(
                coproduct_opposite(u)
                    .contract_leg(0, counit)
                    .unwrap()
                    .to_algebra()
                    .unwrap(),
                basis
            );
        }
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(b("e", "s")), b("e", "s2"));
        assert_eq!(antipode(b("e", "t")), b("e", "t"));
        for u in DoubleBasis::all() {
            assert_eq!(antipode(antipode(u)), u);
        }
    }

    #[test]
    fn counit_examples() {
        assert!(counit(b("s", "e")).is_one());
        assert!(counit(b("s", "t")).is_zero());
        for u in DoubleBasis::all() {
            for v in DoubleBasis::all() {
                let lhs = basis_mul(u, v).map(counit).unwrap_or_default();
                assert_eq!(lhs, &counit(u) * &counit(v));
            }
        }
    }

    #[test]
    fn universal_r_terms() {
        let r = universal_r();
        assert_eq!(r.len(), 36);
        assert!(r.coeff(&[b("s", "t"), b("e", "s")]).is_one());
        assert!(r.coeff(&[b("s", "t"), b("e", "t")]).is_zero());
        assert_eq!(
            r.contract_leg(0, counit).unwrap().to_algebra().unwrap(),
            AlgebraElement::unit()
        );
    }

    #[test]
    fn casimir_expansions() {
        let c1 = casimir(Casimir::C1);
        let two_thirds = LaurentPoly::rational(rat_frac(2, 3));
        assert_eq!(c1.coeff(DoubleBasis::dual_only(g("s"))), two_thirds);
        assert_eq!(c1.len(), 6);
        let diff = &casimir(Casimir::C2) - &c1;
        let expected = AlgebraElement::from_terms((0..3).map(|k| {
            (
                DoubleBasis::new(GroupElement::reflection(k), GroupElement::reflection(k)),
                LaurentPoly::one(),
            )
        }));
        assert_eq!(diff, expected);
        for which in [Casimir::C1, Casimir::C2] {
            let c = casimir(which);
            for u in DoubleBasis::all() {
                assert!(
                    c.commutator(&AlgebraElement::basis(u)).is_zero(),
                    "{which:?} vs {u:?}"
                );
            }
        }
    }
}
