//! The 36-dimensional Drinfeld double D(D₃) with basis `g h*`.

mod element;
mod hopf;
mod tensor;

use std::fmt;

use crate::group::GroupElement;

pub use element::AlgebraElement;
pub use hopf::{antipode, casimir, coproduct, coproduct_opposite, counit, universal_r, Casimir};
pub use tensor::{Legs, Placement, TensorElement};

/// Basis element `g h*` of D(D₃); `grp` is `g`, `dual` is `h`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleBasis {
    pub grp: GroupElement,
    pub dual: GroupElement,
}

impl DoubleBasis {
    pub const COUNT: usize = GroupElement::ORDER * GroupElement::ORDER;

    pub fn new(grp: GroupElement, dual: GroupElement) -> Self {
        DoubleBasis { grp, dual }
    }

    /// The pure dual `h*`, identified with `e h*`.
    pub fn dual_only(h: GroupElement) -> Self {
        DoubleBasis::new(GroupElement::identity(), h)
    }

    pub fn index(self) -> usize {
        self.grp.index() * GroupElement::ORDER + self.dual.index()
    }

    pub fn from_index(i: usize) -> Self {
        DoubleBasis::new(
            GroupElement::from_index(i / GroupElement::ORDER),
            GroupElement::from_index(i % GroupElement::ORDER),
        )
    }

    pub fn all() -> impl Iterator<Item = DoubleBasis> + Clone {
        (0..Self::COUNT).map(DoubleBasis::from_index)
    }

    pub fn latex(self) -> String {
        let h = self.dual.latex();
        let dual = if matches!(h.as_str(), "e" | "\\sigma" | "\\tau") {
            format!("{h}^*")
        } else {
            format!("({h})^*")
        };
        if self.grp.is_identity() {
            dual
        } else {
            format!("{}{dual}", self.grp.latex())
        }
    }
}

impl fmt::Debug for DoubleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}*", self.grp, self.dual)
    }
}

/// `(g h*)(k l*) = δ(l, k⁻¹hk) (gk) l*`, from sliding `h*` past `k`.
pub fn basis_mul(u: DoubleBasis, v: DoubleBasis) -> Option<DoubleBasis> {
    let slid = GroupElement::conjugate(u.dual, v.grp);
    (slid == v.dual).then(|| DoubleBasis::new(u.grp.mul(v.grp), v.dual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> GroupElement {
        name.parse().unwrap()
    }

    /// A word in D(D₃) as a product of group letters and dual letters, reduced
    /// only with the two sliding rules `g*h* = δ(g,h)g*` and `h*g = g(g⁻¹hg)*`.
    #[derive(Clone, Copy)]
    enum Letter {
        G(GroupElement),
        D(GroupElement),
    }

    fn rewrite(mut word: Vec<Letter>) -> Option<DoubleBasis> {
        loop {
            let mut changed = false;
            for i in 0..word.len().saturating_sub(1) {
                match (word[i], word[i + 1]) {
                    (Letter::G(a), Letter::G(b)) => {
                        word.splice(i..i + 2, [Letter::G(a.mul(b))]);
                    }
                    (Letter::D(a), Letter::D(b)) => {
                        if a != b {
                            return None;
                        }
                        word.remove(i + 1);
                    }
                    (Letter::D(h), Letter::G(k)) => {
                        word.splice(
                            i..i + 2,
                            [Letter::G(k), Letter::D(GroupElement::conjugate(h, k))],
                        );
                    }
                    (Letter::G(_), Letter::D(_)) => continue,
                }
                changed = true;
                break;
            }
            if !changed {
                break;
            }
        }
        match word.as_slice() {
            [Letter::G(a), Letter::D(h)] => Some(DoubleBasis::new(*a, *h)),
            other => panic!("unexpected normal form of length {}", other.len()),
        }
    }

    #[test]
    fn closed_form_matches_rewriting_on_all_pairs() {
        for u in DoubleBasis::all() {
            for v in DoubleBasis::all() {
                let word = vec![
                    Letter::G(u.grp),
                    Letter::D(u.dual),
                    Letter::G(v.grp),
                    Letter::D(v.dual),
                ];
                assert_eq!(basis_mul(u, v), rewrite(word), "{u:?} * {v:?}");
            }
        }
    }

    #[test]
    fn dual_products() {
        let sd = DoubleBasis::dual_only(g("s"));
        assert_eq!(basis_mul(sd, sd), Some(sd));
        assert_eq!(basis_mul(sd, DoubleBasis::dual_only(g("t"))), None);
        // τ* σ = σ(στ)*
        let sigma_at_st = DoubleBasis::new(g("s"), g("st"));
        assert_eq!(
            basis_mul(
                DoubleBasis::dual_only(g("t")),
                DoubleBasis::new(g("s"), g("st"))
            ),
            Some(sigma_at_st)
        );
    }

    #[test]
    fn indexing() {
        let all: Vec<_> = DoubleBasis::all().collect();
        assert_eq!(all.len(), 36);
        for (i, u) in all.iter().enumerate() {
            assert_eq!(u.index(), i);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
