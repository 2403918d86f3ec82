//! The dihedral group D₃ = ⟨σ, τ | σ³ = τ² = e, τσ = σ²τ⟩ in canonical form σ^r τ^s.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Element σ^r τ^s with `r` in 0..3 and `s` in 0..2.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    r: u8,
    s: u8,
}

const NAMES: [&str; 6] = ["e", "s", "s2", "t", "st", "s2t"];

impl GroupElement {
    pub const ORDER: usize = 6;

    pub fn new(r: i64, s: i64) -> Self {
        GroupElement {
            r: r.rem_euclid(3) as u8,
            s: s.rem_euclid(2) as u8,
        }
    }

    pub fn identity() -> Self {
        GroupElement::new(0, 0)
    }

    pub fn sigma() -> Self {
        GroupElement::new(1, 0)
    }

    pub fn tau() -> Self {
        GroupElement::new(0, 1)
    }

    /// σ^k for any integer k.
    pub fn rotation(k: i64) -> Self {
        GroupElement::new(k, 0)
    }

    /// σ^k τ for any integer k.
    pub fn reflection(k: i64) -> Self {
        GroupElement::new(k, 1)
    }

    pub fn r(self) -> u8 {
        self.r
    }

    pub fn s(self) -> u8 {
        self.s
    }

    pub fn is_identity(self) -> bool {
        self.r == 0 && self.s == 0
    }

    /// Position in the canonical order e, σ, σ², τ, στ, σ²τ.
    pub fn index(self) -> usize {
        self.r as usize + 3 * self.s as usize
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < Self::ORDER, "group index {i} out of range");
        GroupElement::new((i % 3) as i64, (i / 3) as i64)
    }

    pub fn all() -> impl Iterator<Item = GroupElement> + Clone {
        (0..Self::ORDER).map(GroupElement::from_index)
    }

    // (r₁, s₁)(r₂, s₂) = (r₁ + (−1)^{s₁} r₂, s₁ + s₂)
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: GroupElement) -> GroupElement {
        let r2 = if self.s == 0 {
            other.r as i64
        } else {
            -(other.r as i64)
        };
        GroupElement::new(self.r as i64 + r2, (self.s + other.s) as i64)
    }

    pub fn inverse(self) -> GroupElement {
        if self.s == 0 {
            GroupElement::new(-(self.r as i64), 0)
        } else {
            self
        }
    }

    /// `g⁻¹ h g`, written `conjugate(h, g)`.
    pub fn conjugate(h: GroupElement, g: GroupElement) -> GroupElement {
        g.inverse().mul(h).mul(g)
    }

    pub fn pow(self, k: u32) -> GroupElement {
        (0..k).fold(GroupElement::identity(), |acc, _| acc.mul(self))
    }

    pub fn conjugacy_class(self) -> Vec<GroupElement> {
        let mut class: Vec<_> = GroupElement::all()
            .map(|g| GroupElement::conjugate(self, g))
            .collect();
        class.sort();
        class.dedup();
        class
    }

    pub fn conjugacy_classes() -> Vec<Vec<GroupElement>> {
        let mut classes: Vec<Vec<GroupElement>> = Vec::new();
        for g in GroupElement::all() {
            if !classes.iter().any(|c| c.contains(&g)) {
                classes.push(g.conjugacy_class());
            }
        }
        classes
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    /// LaTeX in the σ/τ notation.
    pub fn latex(self) -> String {
        let rot = match self.r {
            0 => "",
            1 => "\\sigma",
            _ => "\\sigma^{-1}",
        };
        match (self.r, self.s) {
            (0, 0) => "e".into(),
            (_, 0) => rot.into(),
            _ => format!("{rot}\\tau"),
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for GroupElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NAMES
            .iter()
            .position(|n| *n == s)
            .map(GroupElement::from_index)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
