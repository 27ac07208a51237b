//! Small algebras shipped with the library.

use crate::algebra::Algebra;
use crate::braid::{braiding_embed_lie, identity_bxmod, BraidedXMod, LieBraidedXMod};
use crate::nat::tensor_braiding;

/// One-dimensional abelian.
pub fn a1() -> Algebra {
    Algebra::abelian("A1", 1)
}

/// `[e1, e1] = e0`: Leibniz, not Lie.
pub fn l2() -> Algebra {
    Algebra::from_brackets("L2", 2, &[(1, 1, &[(0, 1)])])
}

/// `[e0, e1] = e0 = −[e1, e0]`: the non-abelian two-dimensional Lie algebra.
pub fn r2() -> Algebra {
    Algebra::from_brackets("R2", 2, &[(0, 1, &[(0, 1)]), (1, 0, &[(0, -1)])])
}

/// Heisenberg: `[e0, e1] = e2 = −[e1, e0]`.
pub fn heisenberg() -> Algebra {
    Algebra::from_brackets("H3", 3, &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])])
}

/// `sl2` in the basis `(h, e, f)`.
pub fn sl2() -> Algebra {
    Algebra::from_brackets(
        "sl2",
        3,
        &[
            (0, 1, &[(1, 2)]),
            (1, 0, &[(1, -2)]),
            (0, 2, &[(2, -2)]),
            (2, 0, &[(2, 2)]),
            (1, 2, &[(0, 1)]),
            (2, 1, &[(0, -1)]),
        ],
    )
}

/// Three-dimensional non-Lie Leibniz algebra: `[e2, e2] = e0`, `[e1, e2] = e0`.
pub fn l3() -> Algebra {
    Algebra::from_brackets("L3", 3, &[(2, 2, &[(0, 1)]), (1, 2, &[(0, 1)])])
}

/// Every shipped algebra, small to large.
pub fn all_algebras() -> Vec<Algebra> {
    vec![a1(), l2(), r2(), heisenberg(), sl2(), l3()]
}

/// The braided crossed modules used as seeds for the functor suites:
/// trivial-A1, identity-L2, embedded-R2 and tensor-L2.
pub fn standard_seeds() -> Vec<(String, BraidedXMod)> {
    let a = a1();
    vec![
        ("trivial-A1".into(), BraidedXMod::trivial(&a, &a)),
        ("identity-L2".into(), identity_bxmod(&l2()).expect("L2 is Leibniz")),
        (
            "embedded-R2".into(),
            braiding_embed_lie(&LieBraidedXMod::identity(&r2())).expect("R2 is Lie"),
        ),
        ("tensor-L2".into(), tensor_braiding(&l2()).expect("tensor square of L2")),
    ]
}
