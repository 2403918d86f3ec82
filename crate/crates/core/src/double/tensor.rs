use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Sub};

use arrayvec::ArrayVec;

use super::{basis_mul, AlgebraElement, DoubleBasis};
use crate::error::{Error, Result};
use crate::scalars::LaurentPoly;

/// Basis tuple of a tensor term, leftmost leg first.
pub type Legs = ArrayVec<DoubleBasis, 3>;

/// Where a two-leg object sits inside a three-fold tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    P12,
    P13,
    P23,
}

impl Placement {
    pub fn legs(self) -> (usize, usize) {
        match self {
            Placement::P12 => (0, 1),
            Placement::P13 => (0, 2),
            Placement::P23 => (1, 2),
        }
    }
}

/// Element of D(D₃)^{⊗n} stored as flat basis tuples. Arity is 1 to 3; arity 1
/// only appears as an intermediate when contracting legs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Legs, LaurentPoly>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        assert!((1..=3).contains(&arity), "unsupported tensor arity {arity}");
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Legs, LaurentPoly)>>(arity: usize, iter: I) -> Self {
        let mut out = TensorElement::zero(arity);
        for (legs, c) in iter {
            out.add_term(legs, &c);
        }
        out
    }

    /// `a₁ ⊗ a₂ ⊗ …` expanded into basis tuples.
    pub fn pure(factors: &[&AlgebraElement]) -> Self {
        let mut acc = vec![(Legs::new(), LaurentPoly::one())];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (legs, c) in &acc {
                for (u, p) in f.terms() {
                    let mut l = legs.clone();
                    l.push(*u);
                    next.push((l, c * p));
                }
            }
            acc = next;
        }
        TensorElement::from_terms(factors.len(), acc)
    }

    pub(crate) fn add_term(&mut self, legs: Legs, c: &LaurentPoly) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Legs, &LaurentPoly)> {
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

    pub fn coeff(&self, legs: &[DoubleBasis]) -> LaurentPoly {
        let key: Legs = legs.iter().copied().collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Legwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = TensorElement::zero(self.arity);
        for (l1, c1) in &self.terms {
            'pair: for (l2, c2) in &other.terms {
                let mut legs = Legs::new();
                for (u, v) in l1.iter().zip(l2) {
                    match basis_mul(*u, *v) {
                        Some(w) => legs.push(w),
                        None => continue 'pair,
                    }
                }
                out.add_term(legs, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Swaps the two legs of an arity-2 tensor.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.arity, 2, "flip needs arity 2");
        TensorElement::from_terms(
            2,
            self.terms
                .iter()
                .map(|(l, c)| ([l[1], l[0]].into_iter().collect(), c.clone())),
        )
    }

    /// Places an arity-2 tensor on two legs of a triple product, with the unit
    /// `Σ_h h*` on the omitted leg.
    pub fn embed_leg(&self, placement: Placement) -> Result<TensorElement> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch(self.arity, 2));
        }
        let (i, j) = placement.legs();
        let unit = AlgebraElement::unit();
        let mut out = TensorElement::zero(3);
        for (l, c) in &self.terms {
            for (h, _) in unit.terms() {
                let mut slots = [*h; 3];
                slots[i] = l[0];
                slots[j] = l[1];
                out.add_term(slots.into_iter().collect(), c);
            }
        }
        Ok(out)
    }

    /// Replaces leg `leg` by the two legs of `f(u)`, raising the arity by one.
    pub fn expand_leg<F>(&self, leg: usize, f: F) -> Result<TensorElement>
    where
        F: Fn(DoubleBasis) -> TensorElement,
    {
        if leg >= self.arity {
            return Err(Error::InvalidLeg(leg));
        }
        let mut out = TensorElement::zero(self.arity + 1);
        for (l, c) in &self.terms {
            let image = f(l[leg]);
            for (il, ic) in image.terms() {
                let mut legs = Legs::new();
                legs.extend(l[..leg].iter().copied());
                legs.extend(il.iter().copied());
                legs.extend(l[leg + 1..].iter().copied());
                out.add_term(legs, &(c * ic));
            }
        }
        Ok(out)
    }

    /// Applies a scalar-valued functional to leg `leg`, lowering the arity.
    pub fn contract_leg<F>(&self, leg: usize, f: F) -> Result<TensorElement>
    where
        F: Fn(DoubleBasis) -> LaurentPoly,
    {
        if leg >= self.arity || self.arity == 1 {
            return Err(Error::InvalidLeg(leg));
        }
        let mut out = TensorElement::zero(self.arity - 1);
        for (l, c) in &self.terms {
            let w = f(l[leg]);
            if w.is_zero() {
                continue;
            }
            let mut legs = l.clone();
            legs.remove(leg);
            out.add_term(legs, &(c * &w));
        }
        Ok(out)
    }

    /// Applies a basis-to-basis map on one leg.
    pub fn map_leg<F>(&self, leg: usize, f: F) -> Result<TensorElement>
    where
        F: Fn(DoubleBasis) -> DoubleBasis,
    {
        if leg >= self.arity {
            return Err(Error::InvalidLeg(leg));
        }
        Ok(TensorElement::from_terms(
            self.arity,
            self.terms.iter().map(|(l, c)| {
                let mut legs = l.clone();
                legs[leg] = f(legs[leg]);
                (legs, c.clone())
            }),
        ))
    }

    /// Multiplication map `a ⊗ b ↦ ab` on an arity-2 tensor.
    pub fn multiply_legs(&self) -> Result<AlgebraElement> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch(self.arity, 2));
        }
        let mut out = AlgebraElement::zero();
        for (l, c) in &self.terms {
            if let Some(w) = basis_mul(l[0], l[1]) {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Reads an arity-1 tensor as an algebra element.
    pub fn to_algebra(&self) -> Result<AlgebraElement> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch(self.arity, 1));
        }
        Ok(AlgebraElement::from_terms(
            self.terms.iter().map(|(l, c)| (l[0], c.clone())),
        ))
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, o.arity);
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, o.arity);
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), &-c);
        }
        out
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{}]{{", self.arity)?;
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]{:?}", l.as_slice())?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::counit;
    use crate::group::GroupElement;

    fn b(g: &str, h: &str) -> DoubleBasis {
        DoubleBasis::new(g.parse().unwrap(), h.parse().unwrap())
    }

    #[test]
    fn single_tuple_product_is_legwise() {
        let (u, v, u2, v2) = (b("s", "t"), b("t", "e"), b("s2", "t"), b("e", "s"));
        let p = TensorElement::pure(&[&u.into(), &v.into()]);
        let q = TensorElement::pure(&[&u2.into(), &v2.into()]);
        let expected = match (basis_mul(u, u2), basis_mul(v, v2)) {
            (Some(a), Some(c)) => TensorElement::pure(&[&a.into(), &c.into()]),
            _ => TensorElement::zero(2),
        };
        assert_eq!(p.tensor_mul(&q).unwrap(), expected);
    }

    #[test]
    fn arity_mismatch() {
        let p = TensorElement::zero(2);
        let q = TensorElement::zero(3);
        assert_eq!(p.tensor_mul(&q), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn embedding_inserts_unit() {
        let (u, v) = (b("s", "t"), b("t", "e"));
        let p = TensorElement::pure(&[&u.into(), &v.into()]);
        let e = p.embed_leg(Placement::P12).unwrap();
        assert_eq!(e.len(), 6);
        for h in GroupElement::all() {
            assert_eq!(
                e.coeff(&[u, v, DoubleBasis::dual_only(h)]),
                LaurentPoly::one()
            );
        }
        for placement in [Placement::P12, Placement::P13, Placement::P23] {
            let omitted = 3 - placement.legs().0 - placement.legs().1;
            let back = p
                .embed_leg(placement)
                .unwrap()
                .contract_leg(omitted, counit)
                .unwrap();
            assert_eq!(back, p);
        }
    }
}
