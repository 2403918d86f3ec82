//! The eight irreducible representations of D(D₃) and their application to
//! tensor legs and algebra-valued matrices.
//!
//! Group elements act through `π(σ^r τ^s) = π(σ)^r π(τ)^s`. Dual elements act
//! by diagonal projectors onto the flux of each basis vector, supported on a
//! single conjugacy class: for the `(2,i)` family `π(σ*) = E₁₁` and
//! `π((σ²)*) = E₂₂`; for `(3,±)`, `π((σⁱτ)*) = E_{i+1,i+1}`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::double::{AlgebraElement, DoubleBasis, TensorElement};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::lax::AlgebraValuedMatrix;
use crate::matrix::rank;
use crate::scalars::{CycloNum, LaurentPoly};

pub use crate::matrix::ScalarMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    OnePlus,
    OneMinus,
    TwoE,
    /// `(2, i)` for `i` in 0..3.
    Two(u8),
    ThreePlus,
    ThreeMinus,
}

impl IrrepLabel {
    pub fn all() -> [IrrepLabel; 8] {
        use IrrepLabel::*;
        [
            OnePlus,
            OneMinus,
            TwoE,
            Two(0),
            Two(1),
            Two(2),
            ThreePlus,
            ThreeMinus,
        ]
    }

    pub fn dim(self) -> usize {
        match self {
            IrrepLabel::OnePlus | IrrepLabel::OneMinus => 1,
            IrrepLabel::TwoE | IrrepLabel::Two(_) => 2,
            IrrepLabel::ThreePlus | IrrepLabel::ThreeMinus => 3,
        }
    }

    /// CLI syntax: `1+ 1- 2e 20 21 22 3+ 3-`.
    pub fn name(self) -> String {
        match self {
            IrrepLabel::OnePlus => "1+".into(),
            IrrepLabel::OneMinus => "1-".into(),
            IrrepLabel::TwoE => "2e".into(),
            IrrepLabel::Two(i) => format!("2{i}"),
            IrrepLabel::ThreePlus => "3+".into(),
            IrrepLabel::ThreeMinus => "3-".into(),
        }
    }

    pub fn latex(self) -> String {
        match self {
            IrrepLabel::OnePlus => "(1,+)".into(),
            IrrepLabel::OneMinus => "(1,-)".into(),
            IrrepLabel::TwoE => "(2,e)".into(),
            IrrepLabel::Two(i) => format!("(2,{i})"),
            IrrepLabel::ThreePlus => "(3,+)".into(),
            IrrepLabel::ThreeMinus => "(3,-)".into(),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IrrepLabel::all()
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A matrix representation of D(D₃), stored as the images of all 36 basis
/// elements.
#[derive(Clone)]
pub struct Representation {
    name: String,
    label: Option<IrrepLabel>,
    dim: usize,
    sigma: ScalarMatrix,
    tau: ScalarMatrix,
    duals: Vec<ScalarMatrix>,
    images: Vec<ScalarMatrix>,
}

fn w(k: i64) -> LaurentPoly {
    LaurentPoly::omega_pow(k)
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

fn projector(n: usize, i: usize) -> ScalarMatrix {
    ScalarMatrix::from_fn(n, n, |r, c| if r == i && c == i { int(1) } else { int(0) })
}

impl Representation {
    /// Builds the images of all basis elements from `π(σ)`, `π(τ)` and the six
    /// dual images (indexed in canonical group order).
    pub fn from_generators(
        name: impl Into<String>,
        sigma: ScalarMatrix,
        tau: ScalarMatrix,
        duals: Vec<ScalarMatrix>,
    ) -> Result<Self> {
        let dim = sigma.rows();
        let square = |m: &ScalarMatrix| m.rows() == dim && m.cols() == dim;
        if !square(&sigma)
            || !square(&tau)
            || duals.len() != GroupElement::ORDER
            || !duals.iter().all(square)
        {
            return Err(Error::ShapeMismatch(
                "representation generators must be square of one size".into(),
            ));
        }
        let mut images = Vec::with_capacity(DoubleBasis::COUNT);
        for u in DoubleBasis::all() {
            let g = sigma
                .pow(u.grp.r() as u32)?
                .mul(&tau.pow(u.grp.s() as u32)?)?;
            images.push(g.mul(&duals[u.dual.index()])?);
        }
        Ok(Representation {
            name: name.into(),
            label: None,
            dim,
            sigma,
            tau,
            duals,
            images,
        })
    }

    pub fn irrep(label: IrrepLabel) -> Representation {
        let zero_or_id = |n: usize, on: bool| {
            if on {
                ScalarMatrix::identity(n)
            } else {
                ScalarMatrix::zeros(n, n)
            }
        };
        let identity_flux = |n: usize| {
            GroupElement::all()
                .map(|h| zero_or_id(n, h.is_identity()))
                .collect::<Vec<_>>()
        };
        let swap2 = ScalarMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        let (sigma, tau, duals) = match label {
            IrrepLabel::OnePlus | IrrepLabel::OneMinus => {
                let sign = if label == IrrepLabel::OnePlus { 1 } else { -1 };
                (
                    ScalarMatrix::identity(1),
                    ScalarMatrix::diag(vec![int(sign)]),
                    identity_flux(1),
                )
            }
            IrrepLabel::TwoE => (
                ScalarMatrix::diag(vec![w(1), w(-1)]),
                swap2,
                identity_flux(2),
            ),
            IrrepLabel::Two(i) => {
                let i = i as i64;
                let duals = GroupElement::all()
                    .map(|h| match (h.s(), h.r()) {
                        (0, 1) => projector(2, 0),
                        (0, 2) => projector(2, 1),
                        _ => ScalarMatrix::zeros(2, 2),
                    })
                    .collect();
                (ScalarMatrix::diag(vec![w(i), w(-i)]), swap2, duals)
            }
            IrrepLabel::ThreePlus | IrrepLabel::ThreeMinus => {
                let sign = if label == IrrepLabel::ThreePlus {
                    1
                } else {
                    -1
                };
                let sigma = ScalarMatrix::from_rows(vec![
                    vec![int(0), int(1), int(0)],
                    vec![int(0), int(0), int(1)],
                    vec![int(1), int(0), int(0)],
                ]);
                let tau = ScalarMatrix::from_rows(vec![
                    vec![int(sign), int(0), int(0)],
                    vec![int(0), int(0), int(sign)],
                    vec![int(0), int(sign), int(0)],
                ]);
                let duals = GroupElement::all()
                    .map(|h| {
                        if h.s() == 1 {
                            projector(3, h.r() as usize)
                        } else {
                            ScalarMatrix::zeros(3, 3)
                        }
                    })
                    .collect();
                (sigma, tau, duals)
            }
        };
        let mut rep =
            Representation::from_generators(format!("pi{}", label.latex()), sigma, tau, duals)
                .expect("irrep tables are well-formed");
        rep.label = Some(label);
        rep
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn label(&self) -> Option<IrrepLabel> {
        self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma_image(&self) -> &ScalarMatrix {
        &self.sigma
    }

    pub fn tau_image(&self) -> &ScalarMatrix {
        &self.tau
    }

    pub fn dual_image(&self, h: GroupElement) -> &ScalarMatrix {
        &self.duals[h.index()]
    }

    pub fn image(&self, u: DoubleBasis) -> &ScalarMatrix {
        &self.images[u.index()]
    }

    pub fn group_image(&self, g: GroupElement) -> ScalarMatrix {
        self.image_of(&AlgebraElement::group(g))
    }

    /// `π(a)` for a general element, coefficients carried into the entries.
    pub fn image_of(&self, a: &AlgebraElement) -> ScalarMatrix {
        let mut out = ScalarMatrix::zeros(self.dim, self.dim);
        for (u, c) in a.terms() {
            let img = self.image(*u);
            for r in 0..self.dim {
                for col in 0..self.dim {
                    let e = img.get(r, col);
                    if !e.is_zero() {
                        let mut v = out.get(r, col).clone();
                        v.add_product(e, c);
                        out.set(r, col, v);
                    }
                }
            }
        }
        out
    }

    /// Checks `π(u)π(v) = π(uv)` on all 1296 ordered basis pairs and `π(e) = I`.
    pub fn check_homomorphism(&self) -> HomomorphismReport {
        let zero = ScalarMatrix::zeros(self.dim, self.dim);
        let pairs: Vec<(DoubleBasis, DoubleBasis)> = DoubleBasis::all()
            .flat_map(|u| DoubleBasis::all().map(move |v| (u, v)))
            .collect();
        let failures: Vec<_> = pairs
            .par_iter()
            .filter(|(u, v)| {
                let lhs = self.image(*u).mul(self.image(*v)).expect("square images");
                let rhs = crate::double::basis_mul(*u, *v).map_or(&zero, |w| self.image(w));
                &lhs != rhs
            })
            .copied()
            .collect();
        let unit_preserved =
            self.image_of(&AlgebraElement::unit()) == ScalarMatrix::identity(self.dim);
        HomomorphismReport {
            pairs_checked: pairs.len(),
            failures,
            unit_preserved,
        }
    }

    /// Group elements whose dual image is nonzero.
    pub fn dual_support(&self) -> Vec<GroupElement> {
        GroupElement::all()
            .filter(|h| !self.dual_image(*h).is_zero())
            .collect()
    }

    /// Dimension of `{X : π(u)X = Xπ(u) for all basis u}` over Q(ω); 1 iff
    /// the representation is irreducible.
    pub fn commutant_dimension(&self) -> usize {
        let n = self.dim;
        let mut rows: Vec<Vec<CycloNum>> = Vec::new();
        for img in &self.images {
            let a = img.constant_entries().expect("constant representation");
            let at = |r: usize, c: usize| &a[r * n + c];
            // (AX − XA)_{rc} = Σ_k A_{rk} X_{kc} − X_{rk} A_{kc}, unknowns X_{kc} at k·n + c
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![CycloNum::default(); n * n];
                    for k in 0..n {
                        row[k * n + c] += at(r, k);
                        row[r * n + k] -= at(k, c);
                    }
                    rows.push(row);
                }
            }
        }
        n * n - rank(rows)
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({}, dim {})", self.name, self.dim)
    }
}

#[derive(Clone, Debug)]
pub struct HomomorphismReport {
    pub pairs_checked: usize,
    pub failures: Vec<(DoubleBasis, DoubleBasis)>,
    pub unit_preserved: bool,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.unit_preserved
    }
}

/// `(id ⊗ π)L`: entry `((a,b),(a',b')) = π(L_{aa'})_{bb'}`, matrix legs first.
pub fn apply_to_lax(lax: &AlgebraValuedMatrix, rep: &Representation) -> ScalarMatrix {
    let d = rep.dim();
    let blocks: Vec<ScalarMatrix> = lax.entries().iter().map(|e| rep.image_of(e)).collect();
    ScalarMatrix::from_fn(lax.rows() * d, lax.cols() * d, |r, c| {
        blocks[(r / d) * lax.cols() + c / d]
            .get(r % d, c % d)
            .clone()
    })
}

/// Applies `rep` to one leg of an arity-2 tensor, leaving an algebra-valued
/// matrix in the other leg.
pub fn apply_to_tensor_leg(
    t: &TensorElement,
    leg: usize,
    rep: &Representation,
) -> Result<AlgebraValuedMatrix> {
    if t.arity() != 2 {
        return Err(Error::ArityMismatch(t.arity(), 2));
    }
    if leg > 1 {
        return Err(Error::InvalidLeg(leg));
    }
    let d = rep.dim();
    let mut entries = vec![AlgebraElement::zero(); d * d];
    for (legs, c) in t.terms() {
        let (applied, kept) = (legs[leg], legs[1 - leg]);
        let img = rep.image(applied);
        for (i, e) in img.entries().iter().enumerate() {
            if !e.is_zero() {
                entries[i] = &entries[i] + &AlgebraElement::term(kept, e * c);
            }
        }
    }
    AlgebraValuedMatrix::new(d, d, entries)
}

/// Applies one representation per leg, producing the operator on
/// `V₁ ⊗ … ⊗ Vₙ`.
pub fn apply_to_tensor(t: &TensorElement, reps: &[&Representation]) -> Result<ScalarMatrix> {
    if reps.len() != t.arity() {
        return Err(Error::ArityMismatch(t.arity(), reps.len()));
    }
    let n: usize = reps.iter().map(|r| r.dim()).product();
    let mut out = ScalarMatrix::zeros(n, n);
    for (legs, c) in t.terms() {
        let mut m = ScalarMatrix::identity(1);
        for (u, rep) in legs.iter().zip(reps) {
            m = m.kron(rep.image(*u));
        }
        out = out.add(&m.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::universal_r;

    fn g(name: &str) -> GroupElement {
        name.parse().unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(
            IrrepLabel::all()
                .iter()
                .map(|l| l.dim() * l.dim())
                .sum::<usize>(),
            36
        );
        for l in IrrepLabel::all() {
            assert_eq!(l.name().parse::<IrrepLabel>().unwrap(), l);
        }
        assert!("2x".parse::<IrrepLabel>().is_err());
    }

    #[test]
    fn generator_images() {
        let two_e = Representation::irrep(IrrepLabel::TwoE);
        assert_eq!(
            two_e.group_image(g("s")),
            ScalarMatrix::diag(vec![w(1), w(-1)])
        );
        let one_minus = Representation::irrep(IrrepLabel::OneMinus);
        assert_eq!(
            one_minus.group_image(g("t")),
            ScalarMatrix::diag(vec![int(-1)])
        );
        assert!(two_e.image(DoubleBasis::new(g("s"), g("t"))).is_zero());
    }

    #[test]
    fn all_irreps_are_homomorphisms() {
        for l in IrrepLabel::all() {
            let report = Representation::irrep(l).check_homomorphism();
            assert_eq!(report.pairs_checked, 1296);
            assert!(
                report.passed(),
                "{l}: {:?}",
                &report.failures[..report.failures.len().min(3)]
            );
        }
    }

    #[test]
    fn flipped_sign_in_tau_is_caught() {
        let rep = Representation::irrep(IrrepLabel::ThreePlus);
        let mut tau = rep.tau_image().clone();
        tau.set(0, 0, int(-1));
        let duals = GroupElement::all()
            .map(|h| rep.dual_image(h).clone())
            .collect();
        let bad = Representation::from_generators("corrupt", rep.sigma_image().clone(), tau, duals)
            .unwrap();
        assert!(!bad.check_homomorphism().failures.is_empty());
    }

    /// Reading the printed dual tables literally, with the identity on every
    /// element of the class, breaks `σ*(σ²)* = 0`.
    #[test]
    fn class_wide_identity_duals_are_not_a_representation() {
        let rep = Representation::irrep(IrrepLabel::Two(1));
        let duals = GroupElement::all()
            .map(|h| {
                if h.s() == 0 && h.r() != 0 {
                    ScalarMatrix::identity(2)
                } else {
                    ScalarMatrix::zeros(2, 2)
                }
            })
            .collect();
        let literal = Representation::from_generators(
            "literal",
            rep.sigma_image().clone(),
            rep.tau_image().clone(),
            duals,
        )
        .unwrap();
        let report = literal.check_homomorphism();
        assert!(report.failures.contains(&(
            DoubleBasis::dual_only(g("s")),
            DoubleBasis::dual_only(g("s2"))
        )));
    }

    #[test]
    fn dual_supports_are_conjugacy_classes() {
        let classes = GroupElement::conjugacy_classes();
        for l in IrrepLabel::all() {
            let support = Representation::irrep(l).dual_support();
            assert!(classes.contains(&support), "{l}: {support:?}");
        }
    }

    #[test]
    fn commutants_are_scalar() {
        for l in IrrepLabel::all() {
            assert_eq!(Representation::irrep(l).commutant_dimension(), 1, "{l}");
        }
        let direct_sum_like = Representation::from_generators(
            "trivial2",
            ScalarMatrix::identity(2),
            ScalarMatrix::identity(2),
            GroupElement::all()
                .map(|h| {
                    if h.is_identity() {
                        ScalarMatrix::identity(2)
                    } else {
                        ScalarMatrix::zeros(2, 2)
                    }
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(direct_sum_like.commutant_dimension(), 4);
    }

    #[test]
    fn double_application_of_r() {
        let p = Representation::irrep(IrrepLabel::Two(1));
        let m = apply_to_tensor(&universal_r(), &[&p, &p]).unwrap();
        assert_eq!(m, ScalarMatrix::diag(vec![w(1), w(-1), w(-1), w(1)]));
    }
}
