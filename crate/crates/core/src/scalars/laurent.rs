use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::cyclo::CycloNum;
use super::rational::{rat_pow, Rational};
use crate::error::{Error, Result};

/// One of the two spectral symbols. Single-symbol objects live in `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    X,
    Y,
}

/// Sparse Laurent polynomial in `x`, `y` over Q(ω).
///
/// Terms are keyed by the exponent pair `(ex, ey)` in lexicographic order and
/// no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), CycloNum>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(CycloNum::one())
    }

    pub fn constant(c: CycloNum) -> Self {
        LaurentPoly::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(CycloNum::from(n))
    }

    pub fn rational(q: Rational) -> Self {
        LaurentPoly::constant(CycloNum::rational(q))
    }

    pub fn omega_pow(k: i64) -> Self {
        LaurentPoly::constant(CycloNum::omega_pow(k))
    }

    pub fn monomial(c: CycloNum, ex: i32, ey: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ex, ey), c);
        }
        LaurentPoly { terms }
    }

    pub fn var(sym: Symbol) -> Self {
        LaurentPoly::var_pow(sym, 1)
    }

    pub fn var_pow(sym: Symbol, k: i32) -> Self {
        match sym {
            Symbol::X => LaurentPoly::monomial(CycloNum::one(), k, 0),
            Symbol::Y => LaurentPoly::monomial(CycloNum::one(), 0, k),
        }
    }

    pub fn x() -> Self {
        LaurentPoly::var(Symbol::X)
    }

    pub fn y() -> Self {
        LaurentPoly::var(Symbol::Y)
    }

    /// Sums duplicate exponents and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), CycloNum)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: (i32, i32), c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &CycloNum)> {
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

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, ex: i32, ey: i32) -> CycloNum {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    /// The coefficient if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<CycloNum> {
        match self.terms.len() {
            0 => Some(CycloNum::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Adds `a · b` into `self` without materializing the product.
    pub fn add_product(&mut self, a: &LaurentPoly, b: &LaurentPoly) {
        for ((ax, ay), ac) in &a.terms {
            for ((bx, by), bc) in &b.terms {
                self.add_term((ax + bx, ay + by), &(ac * bc));
            }
        }
    }

    fn require_single_symbol(&self) -> Result<()> {
        match self.terms.keys().find(|(_, ey)| *ey != 0) {
            Some((_, ey)) => Err(Error::NotSingleSymbol(*ey)),
            None => Ok(()),
        }
    }

    /// `z ↦ x·y⁻¹` for a polynomial in the single symbol `z` (stored in the x slot).
    pub fn substitute_ratio(&self) -> Result<Self> {
        self.require_single_symbol()?;
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(k, _), c)| ((k, -k), c.clone()))
                .collect(),
        })
    }

    /// Moves a single-symbol polynomial onto `sym`.
    pub fn with_symbol(&self, sym: Symbol) -> Result<Self> {
        self.require_single_symbol()?;
        Ok(match sym {
            Symbol::X => self.clone(),
            Symbol::Y => LaurentPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(&(k, _), c)| ((0, k), c.clone()))
                    .collect(),
            },
        })
    }

    /// Substitutes a rational value for one symbol.
    pub fn evaluate(&self, sym: Symbol, value: &Rational) -> Result<Self> {
        let mut out = LaurentPoly::zero();
        for (&(ex, ey), c) in &self.terms {
            let (k, rest) = match sym {
                Symbol::X => (ex, (0, ey)),
                Symbol::Y => (ey, (ex, 0)),
            };
            out.add_term(rest, &c.scale(&rat_pow(value, k)?));
        }
        Ok(out)
    }

    /// Limit as `sym → 0`: keeps the terms free of `sym`.
    pub fn limit_at_zero(&self, sym: Symbol) -> Result<Self> {
        let exp = |e: &(i32, i32)| match sym {
            Symbol::X => e.0,
            Symbol::Y => e.1,
        };
        if let Some(e) = self.terms.keys().map(exp).find(|k| *k < 0) {
            return Err(Error::NegativeExponent(e));
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| exp(e) == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, o);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<CycloNum> for LaurentPoly {
    fn from(c: CycloNum) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(ex, ey), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if ex != 0 {
                write!(f, "·x^{ex}")?;
            }
            if ey != 0 {
                write!(f, "·y^{ey}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(a: i64, b: i64) -> CycloNum {
        CycloNum::from_ints(a, b)
    }

    #[test]
    fn monomial_cancellation() {
        let p = &LaurentPoly::x() * &LaurentPoly::var_pow(Symbol::X, -1);
        assert_eq!(p, LaurentPoly::one());
    }

    #[test]
    fn unit_law() {
        let p = &LaurentPoly::omega_pow(1) - &LaurentPoly::var_pow(Symbol::X, 2);
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn cube_roots_product() {
        let x = LaurentPoly::x();
        let f = |k| &x - &LaurentPoly::omega_pow(k);
        let p = &(&f(0) * &f(1)) * &f(2);
        let expected = &LaurentPoly::var_pow(Symbol::X, 3) - &LaurentPoly::one();
        assert_eq!(p, expected);
    }

    #[test]
    fn ratio_substitution() {
        let z2 = LaurentPoly::var_pow(Symbol::X, 2);
        assert_eq!(
            z2.substitute_ratio().unwrap(),
            LaurentPoly::monomial(c(1, 0), 2, -2)
        );
        let p = &LaurentPoly::omega_pow(1) - &z2;
        assert_eq!(
            p.substitute_ratio().unwrap(),
            LaurentPoly::from_terms([((0, 0), c(0, 1)), ((2, -2), c(-1, 0))])
        );
        let q = &(&z2 - &LaurentPoly::x()) + &LaurentPoly::one();
        assert_eq!(
            q.substitute_ratio().unwrap(),
            LaurentPoly::from_terms([((2, -2), c(1, 0)), ((1, -1), c(-1, 0)), ((0, 0), c(1, 0))])
        );
        assert_eq!(
            LaurentPoly::y().substitute_ratio(),
            Err(Error::NotSingleSymbol(1))
        );
    }

    #[test]
    fn limits_and_evaluation() {
        let p = LaurentPoly::from_terms([((0, 0), c(1, 0)), ((2, 0), c(0, 1))]);
        assert_eq!(p.limit_at_zero(Symbol::X).unwrap(), LaurentPoly::one());
        let q = LaurentPoly::monomial(c(1, 0), -1, 0);
        assert_eq!(q.limit_at_zero(Symbol::X), Err(Error::NegativeExponent(-1)));
        let two = Rational::from_integer(2.into());
        assert_eq!(
            q.evaluate(Symbol::X, &two).unwrap(),
            LaurentPoly::rational(Rational::new(1.into(), 2.into()))
        );
        assert!(q.evaluate(Symbol::X, &Rational::zero()).is_err());
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNum> {
        (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| {
            CycloNum::new(
                Rational::new(a.into(), d.into()),
                Rational::from_integer(b.into()),
            )
        })
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i32..=3, -3i32..=3), arb_cyclo()), 0..5)
            .prop_map(LaurentPoly::from_terms)
    }

    fn is_canonical(p: &LaurentPoly) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
            && LaurentPoly::from_terms(p.terms().map(|(e, c)| (*e, c.clone()))) == *p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!(is_canonical(&(&p * &q)));
            prop_assert!(is_canonical(&(&p - &p)));
            prop_assert!((&p - &p).is_zero());
        }
    }
}
