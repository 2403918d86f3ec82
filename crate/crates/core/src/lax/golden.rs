//! The derived matrix Lax operators `L_Λ(x) = (id ⊗ π_Λ)𝔏(x)` as printed for
//! both universal operators, kept verbatim for exact comparison.

use std::fmt;
use std::str::FromStr;

use super::{universal_lax_2, universal_lax_3, LaxSource};
use crate::double::Casimir;
use crate::error::Error;
use crate::lax::{r_matrix_2, r_matrix_3};
use crate::matrix::ScalarMatrix;
use crate::reps::{apply_to_lax, IrrepLabel, Representation};
use crate::scalars::{LaurentPoly, Symbol};

/// The two universal Lax operators, named by the dimension of their matrix leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LaxFamily {
    /// `𝔏 ∈ End(V(2,1)) ⊗ D(D₃)`, paired with `R(2,1)`.
    Two,
    /// `𝔏 ∈ End(V(3,+)) ⊗ D(D₃)` in its written-out matrix form, paired with `R(3,+)`.
    Three,
}

impl LaxFamily {
    pub fn all() -> [LaxFamily; 2] {
        [LaxFamily::Two, LaxFamily::Three]
    }

    pub fn dim(self) -> usize {
        match self {
            LaxFamily::Two => 2,
            LaxFamily::Three => 3,
        }
    }

    pub fn lax(self, sym: Symbol) -> super::AlgebraValuedMatrix {
        match self {
            LaxFamily::Two => universal_lax_2(sym, Casimir::C1),
            LaxFamily::Three => universal_lax_3(sym, Casimir::C2, LaxSource::Matrix),
        }
    }

    pub fn r_matrix(self, sym: Symbol) -> ScalarMatrix {
        match self {
            LaxFamily::Two => r_matrix_2(sym),
            LaxFamily::Three => r_matrix_3(sym),
        }
    }

    /// The representation on the matrix leg.
    pub fn auxiliary(self) -> IrrepLabel {
        match self {
            LaxFamily::Two => IrrepLabel::Two(1),
            LaxFamily::Three => IrrepLabel::ThreePlus,
        }
    }
}

impl fmt::Display for LaxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dim())
    }
}

impl FromStr for LaxFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "2" | "L2" => Ok(LaxFamily::Two),
            "3" | "L3" => Ok(LaxFamily::Three),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// `(id ⊗ π_Λ)𝔏(x)` computed from the universal operator.
pub fn derived_l(family: LaxFamily, label: IrrepLabel) -> ScalarMatrix {
    apply_to_lax(&family.lax(Symbol::X), &Representation::irrep(label))
}

/// One printed derived-L matrix.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub family: LaxFamily,
    pub label: IrrepLabel,
    pub printed: ScalarMatrix,
}

impl GoldenTable {
    pub fn name(&self) -> String {
        format!("L{}:{}", self.family, self.label.name())
    }
}

fn w(k: i64) -> LaurentPoly {
    LaurentPoly::omega_pow(k)
}

fn scalar_diag(entries: Vec<LaurentPoly>) -> ScalarMatrix {
    ScalarMatrix::diag(entries)
}

fn two_dim_tables() -> Vec<GoldenTable> {
    let x = LaurentPoly::x();
    let x2 = x.pow(2);
    let o = LaurentPoly::zero();
    let one = LaurentPoly::one();
    let wx = &w(1) * &x;
    let a = &w(1) - &(&w(-1) * &x2);
    let b = &w(-1) - &x2;
    #[rustfmt::skip]
    let three = ScalarMatrix::from_rows(vec![
        vec![o.clone(), o.clone(), wx.clone(), one.clone(), o.clone(), o.clone()],
        vec![wx.clone(), o.clone(), o.clone(), o.clone(), w(1), o.clone()],
        vec![o.clone(), wx.clone(), o.clone(), o.clone(), o.clone(), w(-1)],
        vec![one, o.clone(), o.clone(), o.clone(), wx.clone(), o.clone()],
        vec![o.clone(), w(-1), o.clone(), o.clone(), o.clone(), wx.clone()],
        vec![o.clone(), o.clone(), w(1), wx, o.clone(), o],
    ]);
    let table = |label, printed| GoldenTable {
        family: LaxFamily::Two,
        label,
        printed,
    };
    vec![
        table(IrrepLabel::TwoE, ScalarMatrix::identity(4)),
        table(
            IrrepLabel::Two(0),
            scalar_diag(vec![w(1), w(-1), w(-1), w(1)]),
        ),
        table(IrrepLabel::Two(1), r_matrix_2(Symbol::X)),
        table(
            IrrepLabel::Two(2),
            scalar_diag(vec![a.clone(), b.clone(), b, a]),
        ),
        table(IrrepLabel::ThreePlus, three.clone()),
        table(IrrepLabel::ThreeMinus, three),
    ]
}

/// `(1−x)·M_j` with the `(1−δ^j₀)x` pattern of the printed 6×6 display.
fn three_dim_two_j(j: u8) -> ScalarMatrix {
    let x = LaurentPoly::x();
    let d = if j == 0 {
        LaurentPoly::zero()
    } else {
        x.clone()
    };
    let jp = i64::from(j);
    let dp = &d * &w(jp);
    let dm = &d * &w(-jp);
    let o = LaurentPoly::zero();
    let one = LaurentPoly::one();
    #[rustfmt::skip]
    let m = ScalarMatrix::from_rows(vec![
        vec![o.clone(), d.clone(), one.clone(), o.clone(), o.clone(), o.clone()],
        vec![d, o.clone(), o.clone(), o.clone(), o.clone(), one.clone()],
        vec![o.clone(), o.clone(), o.clone(), dp.clone(), one.clone(), o.clone()],
        vec![o.clone(), one.clone(), dm.clone(), o.clone(), o.clone(), o.clone()],
        vec![one.clone(), o.clone(), o.clone(), o.clone(), o.clone(), dm],
        vec![o.clone(), o.clone(), o.clone(), one, dp, o],
    ]);
    m.scale(&(&LaurentPoly::one() - &x))
}

fn three_dim_tables() -> Vec<GoldenTable> {
    let one_minus_x = &LaurentPoly::one() - &LaurentPoly::x();
    let table = |label, printed| GoldenTable {
        family: LaxFamily::Three,
        label,
        printed,
    };
    vec![
        table(IrrepLabel::ThreePlus, r_matrix_3(Symbol::X)),
        table(IrrepLabel::ThreeMinus, r_matrix_3(Symbol::X)),
        table(
            IrrepLabel::TwoE,
            ScalarMatrix::identity(6).scale(&one_minus_x),
        ),
        table(IrrepLabel::Two(0), three_dim_two_j(0)),
        table(IrrepLabel::Two(1), three_dim_two_j(1)),
        table(IrrepLabel::Two(2), three_dim_two_j(2)),
    ]
}

/// Every printed derived-L matrix, two-dimensional family first.
pub fn golden_l_tables() -> Vec<GoldenTable> {
    let mut tables = two_dim_tables();
    tables.extend(three_dim_tables());
    tables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycloNum;

    fn find(family: LaxFamily, label: IrrepLabel) -> GoldenTable {
        golden_l_tables()
            .into_iter()
            .find(|t| t.family == family && t.label == label)
            .unwrap()
    }

    #[test]
    fn printed_sample_entries() {
        let t = find(LaxFamily::Two, IrrepLabel::ThreePlus);
        assert_eq!(
            t.printed.get(0, 2),
            &LaurentPoly::monomial(CycloNum::omega(), 1, 0)
        );
        let t = find(LaxFamily::Three, IrrepLabel::ThreeMinus);
        assert_eq!(t.printed, r_matrix_3(Symbol::X));
        let t = find(LaxFamily::Three, IrrepLabel::Two(1));
        let x = LaurentPoly::x();
        assert_eq!(t.printed.get(0, 1), &(&(&LaurentPoly::one() - &x) * &x));
        let t = find(LaxFamily::Three, IrrepLabel::Two(0));
        assert!(t.printed.get(0, 1).is_zero());
    }

    #[test]
    fn twelve_tables() {
        assert_eq!(golden_l_tables().len(), 12);
    }

    #[test]
    fn two_dimensional_family_matches_print() {
        for t in golden_l_tables()
            .into_iter()
            .filter(|t| t.family == LaxFamily::Two)
        {
            assert_eq!(derived_l(t.family, t.label), t.printed, "{}", t.name());
        }
    }

    #[test]
    fn three_dimensional_family_known_matches() {
        for label in [
            IrrepLabel::ThreePlus,
            IrrepLabel::ThreeMinus,
            IrrepLabel::TwoE,
            IrrepLabel::Two(0),
        ] {
            let t = find(LaxFamily::Three, label);
            assert_eq!(derived_l(t.family, t.label), t.printed, "{}", t.name());
        }
    }

    #[test]
    fn no_single_tau_sign_reproduces_both_lists() {
        let flip = |n: usize| {
            ScalarMatrix::identity(n).kron(&ScalarMatrix::diag(vec![
                LaurentPoly::one(),
                LaurentPoly::int(-1),
            ]))
        };
        let regauge = |family: LaxFamily, n: usize| {
            let f = flip(n);
            f.mul(&derived_l(family, IrrepLabel::Two(1)))
                .unwrap()
                .mul(&f)
                .unwrap()
        };
        let two = find(LaxFamily::Two, IrrepLabel::Two(1));
        let three = find(LaxFamily::Three, IrrepLabel::Two(1));
        // π(τ) = +swap matches the two-dimensional list only
        assert_eq!(derived_l(LaxFamily::Two, IrrepLabel::Two(1)), two.printed);
        assert_ne!(
            derived_l(LaxFamily::Three, IrrepLabel::Two(1)),
            three.printed
        );
        // π(τ) = −swap matches the three-dimensional list only
        assert_ne!(regauge(LaxFamily::Two, 2), two.printed);
        assert_eq!(regauge(LaxFamily::Three, 3), three.printed);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("2".parse::<LaxFamily>().unwrap(), LaxFamily::Two);
        assert_eq!("L3".parse::<LaxFamily>().unwrap(), LaxFamily::Three);
        assert!("4".parse::<LaxFamily>().is_err());
    }
}
