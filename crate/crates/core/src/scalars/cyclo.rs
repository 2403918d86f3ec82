use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// An element `a + bω` of Q(ω), where ω is a primitive cube root of unity.
///
/// Every product is reduced with `ω² = −1 − ω`, so the pair `(a, b)` is
/// canonical and equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloNum {
    a: Rational,
    b: Rational,
}

impl CycloNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycloNum { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        CycloNum::new(rat(a), rat(b))
    }

    pub fn rational(a: Rational) -> Self {
        CycloNum::new(a, Rational::zero())
    }

    pub fn omega() -> Self {
        CycloNum::from_ints(0, 1)
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycloNum::one(),
            1 => CycloNum::from_ints(0, 1),
            _ => CycloNum::from_ints(-1, -1),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, ω ↦ ω².
    pub fn conj(&self) -> Self {
        CycloNum::new(&self.a - &self.b, -&self.b)
    }

    /// `p · conj(p) = a² − ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycloNum::new(c.a / &n, c.b / &n))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloNum::new(&self.a * q, &self.b * q)
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycloNum {
    fn one() -> Self {
        CycloNum::from_ints(1, 0)
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_ints(n, 0)
    }
}

impl From<Rational> for CycloNum {
    fn from(q: Rational) -> Self {
        CycloNum::rational(q)
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        CycloNum::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        CycloNum::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², with ω² = −1 − ω
    fn mul(self, o: &CycloNum) -> CycloNum {
        let bd = &self.b * &o.b;
        CycloNum::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, o: CycloNum) -> CycloNum {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, o: &CycloNum) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, o: &CycloNum) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}ω)",
            format_rational(&self.a),
            format_rational(&self.b)
        )
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}ω", self.b),
            (false, false) => write!(f, "({} + {}ω)", self.a, self.b),
        }
    }
}
