use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{basis_mul, DoubleBasis};
use crate::error::Result;
use crate::group::GroupElement;
use crate::scalars::{CycloNum, LaurentPoly, Rational, Symbol};

/// Finite linear combination of basis elements `g h*` with Laurent-polynomial
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<DoubleBasis, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(u: DoubleBasis) -> Self {
        AlgebraElement::term(u, LaurentPoly::one())
    }

    pub fn term(u: DoubleBasis, c: LaurentPoly) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(u, &c);
        out
    }

    /// The identity `e = Σ_h h*`.
    pub fn unit() -> Self {
        AlgebraElement::group(GroupElement::identity())
    }

    /// The group-like element `g = Σ_h g h*`.
    pub fn group(g: GroupElement) -> Self {
        AlgebraElement::from_terms(
            GroupElement::all().map(|h| (DoubleBasis::new(g, h), LaurentPoly::one())),
        )
    }

    /// The pure dual `h*`.
    pub fn dual(h: GroupElement) -> Self {
        AlgebraElement::basis(DoubleBasis::dual_only(h))
    }

    /// `p · e`.
    pub fn scalar(p: &LaurentPoly) -> Self {
        AlgebraElement::unit().scale(p)
    }

    pub fn from_terms<I: IntoIterator<Item = (DoubleBasis, LaurentPoly)>>(iter: I) -> Self {
        let mut out = AlgebraElement::zero();
        for (u, c) in iter {
            out.add_term(u, &c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, u: DoubleBasis, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn add_product_term(&mut self, u: DoubleBasis, a: &LaurentPoly, b: &LaurentPoly) {
        match self.terms.entry(u) {
            btree_map::Entry::Vacant(v) => {
                let prod = a * b;
                if !prod.is_zero() {
                    v.insert(prod);
                }
            }
            btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_product(a, b);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DoubleBasis, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, u: DoubleBasis) -> LaurentPoly {
        self.terms.get(&u).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement::from_terms(self.terms.iter().map(|(u, p)| (*u, p * c)))
    }

    pub fn scale_cyclo(&self, c: &CycloNum) -> Self {
        AlgebraElement::from_terms(self.terms.iter().map(|(u, p)| (*u, p.scale(c))))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale_cyclo(&CycloNum::rational(q.clone()))
    }

    /// Bilinear extension of [`basis_mul`]. For each left term `g h*` only the
    /// right terms `k (k⁻¹hk)*` survive, so those are looked up directly.
    pub fn elem_mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (u, a) in &self.terms {
            for k in GroupElement::all() {
                let v = DoubleBasis::new(k, GroupElement::conjugate(u.dual, k));
                if let Some(b) = other.terms.get(&v) {
                    let w = basis_mul(*u, v).expect("surviving term");
                    out.add_product_term(w, a, b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> AlgebraElement {
        (0..k).fold(AlgebraElement::unit(), |acc, _| acc.elem_mul(self))
    }

    pub fn commutator(&self, other: &AlgebraElement) -> AlgebraElement {
        &self.elem_mul(other) - &other.elem_mul(self)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn try_map_coeffs<F>(&self, f: F) -> Result<AlgebraElement>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let mut out = AlgebraElement::zero();
        for (u, c) in &self.terms {
            out.add_term(*u, &f(c)?);
        }
        Ok(out)
    }

    pub fn with_symbol(&self, sym: Symbol) -> Result<AlgebraElement> {
        self.try_map_coeffs(|c| c.with_symbol(sym))
    }

    pub fn evaluate(&self, sym: Symbol, value: &Rational) -> Result<AlgebraElement> {
        self.try_map_coeffs(|c| c.evaluate(sym, value))
    }

    pub fn limit_at_zero(&self, sym: Symbol) -> Result<AlgebraElement> {
        self.try_map_coeffs(|c| c.limit_at_zero(sym))
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (u, c) in &o.terms {
            out.add_term(*u, c);
        }
        out
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (u, c) in &o.terms {
            out.add_term(*u, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::elem_mul(self, o)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(u, c)| (*u, -c)))
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: AlgebraElement) -> AlgebraElement {
        &self + &o
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: AlgebraElement) -> AlgebraElement {
        &self - &o
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: AlgebraElement) -> AlgebraElement {
        AlgebraElement::elem_mul(&self, &o)
    }
}

impl From<DoubleBasis> for AlgebraElement {
    fn from(u: DoubleBasis) -> Self {
        AlgebraElement::basis(u)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (u, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]{u:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::counit;

    fn g(name: &str) -> GroupElement {
        name.parse().unwrap()
    }

    /// Plain double loop over both term sets.
    fn brute_mul(p: &AlgebraElement, q: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                if let Some(w) = basis_mul(*u, *v) {
                    out.add_term(w, &(a * b));
                }
            }
        }
        out
    }

    #[test]
    fn unit_laws() {
        let q = AlgebraElement::basis(DoubleBasis::new(g("s"), g("t")));
        assert_eq!(AlgebraElement::unit().elem_mul(&q), q);
        let sd = AlgebraElement::dual(g("s"));
        assert_eq!(AlgebraElement::unit().elem_mul(&sd), sd);
        assert_eq!(sd.elem_mul(&AlgebraElement::unit()), sd);
        for u in DoubleBasis::all() {
            let b = AlgebraElement::basis(u);
            assert_eq!(AlgebraElement::unit().elem_mul(&b), b);
            assert_eq!(b.elem_mul(&AlgebraElement::unit()), b);
        }
        let e = AlgebraElement::unit();
        let counit_e: LaurentPoly = e
            .terms()
            .map(|(u, c)| c * &counit(*u))
            .fold(LaurentPoly::zero(), |a, b| &a + &b);
        assert_eq!(counit_e, LaurentPoly::one());
    }

    #[test]
    fn group_embedding_is_a_homomorphism() {
        assert_eq!(AlgebraElement::group(g("e")), AlgebraElement::unit());
        for a in GroupElement::all() {
            for b in GroupElement::all() {
                assert_eq!(
                    AlgebraElement::group(a).elem_mul(&AlgebraElement::group(b)),
                    AlgebraElement::group(a.mul(b))
                );
            }
        }
    }

    #[test]
    fn rotation_sum_times_dual() {
        let p = &AlgebraElement::group(g("s")) + &AlgebraElement::group(g("s2"));
        let sd = AlgebraElement::dual(g("s"));
        let prod = p.elem_mul(&sd);
        assert_eq!(prod, brute_mul(&p, &sd));
        assert_eq!(prod.len(), 2);
        assert_eq!(
            prod.coeff(DoubleBasis::new(g("s"), g("s"))),
            LaurentPoly::one()
        );
        assert_eq!(
            prod.coeff(DoubleBasis::new(g("s2"), g("s"))),
            LaurentPoly::one()
        );
    }

    #[test]
    fn order_of_factors_matters() {
        let td = AlgebraElement::dual(g("t"));
        let s = AlgebraElement::group(g("s"));
        assert_eq!(
            td.elem_mul(&s),
            AlgebraElement::basis(DoubleBasis::new(g("s"), g("st")))
        );
        assert_eq!(
            s.elem_mul(&td),
            AlgebraElement::basis(DoubleBasis::new(g("s"), g("t")))
        );
    }

    #[test]
    fn lookup_product_matches_brute_force() {
        let x = LaurentPoly::x();
        let p = AlgebraElement::from_terms(
            DoubleBasis::all()
                .step_by(5)
                .map(|u| (u, &x + &LaurentPoly::int(u.index() as i64))),
        );
        let q = AlgebraElement::from_terms(
            DoubleBasis::all()
                .step_by(3)
                .map(|u| (u, LaurentPoly::omega_pow(u.index() as i64))),
        );
        assert_eq!(p.elem_mul(&q), brute_mul(&p, &q));
        assert_eq!(q.elem_mul(&p), brute_mul(&q, &p));
    }
}
