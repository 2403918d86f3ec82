//! Inputs shared by the benchmarks.

use dd3_core::double::{universal_r, Placement};
use dd3_core::{AlgebraElement, DoubleBasis, TensorElement};

/// Every basis element as an algebra element, in canonical order.
pub fn basis_elements() -> Vec<AlgebraElement> {
    DoubleBasis::all().map(AlgebraElement::basis).collect()
}

/// `𝓡₁₂, 𝓡₁₃, 𝓡₂₃` in the triple tensor product.
pub fn embedded_universal_r() -> [TensorElement; 3] {
    let r = universal_r();
    [Placement::P12, Placement::P13, Placement::P23].map(|p| r.embed_leg(p).expect("arity 2"))
}
