//! The two parametric R-matrices: the six-vertex model at a cube root of unity
//! on `V(2,1) ⊗ V(2,1)`, and the 9×9 solution on `V(3,+) ⊗ V(3,+)`.

use crate::matrix::ScalarMatrix;
use crate::scalars::{LaurentPoly, Symbol};

/// `R(2,1)(z)`, 4×4, in the spectral symbol `sym`.
pub fn r_matrix_2(sym: Symbol) -> ScalarMatrix {
    let x = LaurentPoly::var(sym);
    let x2 = x.pow(2);
    let w = LaurentPoly::omega_pow(1);
    let w_inv = LaurentPoly::omega_pow(-1);
    let a = &w - &x2;
    let b = -&(&w_inv * &(&x2 - &LaurentPoly::one()));
    let c = &(&w - &LaurentPoly::one()) * &x;
    let o = LaurentPoly::zero();
    ScalarMatrix::from_rows(vec![
        vec![a.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), b.clone(), c.clone(), o.clone()],
        vec![o.clone(), c, b, o.clone()],
        vec![o.clone(), o.clone(), o, a],
    ])
}

/// `R(3,+)(z)`, 9×9, in the spectral symbol `sym`.
pub fn r_matrix_3(sym: Symbol) -> ScalarMatrix {
    let x = LaurentPoly::var(sym);
    let one = LaurentPoly::one();
    let a = &(&x.pow(2) - &x) + &one;
    let b = &x * &(&x - &one);
    let c = &one - &x;
    let o = LaurentPoly::zero();
    #[rustfmt::skip]
    let rows = vec![
        vec![a.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), b.clone(), x.clone(), o.clone(), o.clone(), o.clone(), c.clone(), o.clone()],
        vec![o.clone(), b.clone(), o.clone(), o.clone(), o.clone(), c.clone(), x.clone(), o.clone(), o.clone()],
        vec![o.clone(), x.clone(), o.clone(), o.clone(), o.clone(), b.clone(), c.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), a.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), c.clone(), b.clone(), o.clone(), o.clone(), o.clone(), x.clone(), o.clone()],
        vec![o.clone(), o.clone(), x.clone(), c.clone(), o.clone(), o.clone(), o.clone(), b.clone(), o.clone()],
        vec![o.clone(), c.clone(), o.clone(), o.clone(), o.clone(), x.clone(), b.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o, a],
    ];
    ScalarMatrix::from_rows(rows)
}
