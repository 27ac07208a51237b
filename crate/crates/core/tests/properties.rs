//! Property tests for the invariants the library promises.

use proptest::prelude::*;

use lbraid::algebra::{
    check_antisymmetry, check_hom, check_leibniz, ideal_closure, is_ideal, lieization, quotient_algebra,
};
use lbraid::braid::{
    braiding_embed_lie, check_braiding_leibniz, check_braiding_lie, detect_lie_collapse, identity_bxmod,
    lieize_bxmod,
};
use lbraid::equiv::{alpha_iso, functor_c, functor_x, m_slice};
use lbraid::exactla::{is_zero_vec, kernel, quotient, rref, vec_neg, vec_sub, Subspace};
use lbraid::fixtures::{a1, heisenberg, l2, l3, r2, sl2};
use lbraid::intcat::{derive_k, kernels_commute};
use lbraid::lmcat::{bipsi, biphi, bxphi, bxpsi, check_lm_morphism, iphi, ipsi, lm_tensor, phi, psi, xphi, xpsi, LMMorphism, LMObject};
use lbraid::nat::{check_boundary_on_symbols, check_collapse_identities, lie_collapse_residuals, tensor_self_xmod_in, Regime};
use lbraid::xmod::{check_xmod, semidirect, CrossedModule, LeibnizAction};
use lbraid::{Algebra, Matrix, Scalar, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::new(n, d))
}

fn vector(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), d)
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), r * c).prop_map(move |e| Matrix::from_entries(r, c, e))
}

fn invertible(d: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, d * d)
        .prop_map(move |e| Matrix::from_entries(d, d, e.into_iter().map(Scalar::from_int).collect()))
        .prop_filter("invertible", Matrix::is_bijective)
}

/// Leibniz algebras of dim ≤ `max` in a random basis.
fn leibniz(max: usize) -> impl Strategy<Value = Algebra> {
    let mut pool = vec![a1(), l2(), r2(), heisenberg(), sl2(), l3(), a1().direct_sum(&l2()), a1().direct_sum(&r2())];
    if max >= 4 {
        pool.extend([l2().direct_sum(&r2()), l2().direct_sum(&l2()), a1().direct_sum(&l3())]);
    }
    pool.retain(|a| a.dim() <= max);
    prop::sample::select(pool).prop_flat_map(|a| {
        let d = a.dim();
        invertible(d).prop_map(move |p| a.change_basis(&p).expect("invertible"))
    })
}

fn leibniz_identity(a: &Algebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> bool {
    a.bracket(x, &a.bracket(y, z)) == vec_sub(&a.bracket(&a.bracket(x, y), z), &a.bracket(&a.bracket(x, z), y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let (r, _) = rref(&m);
        prop_assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn rank_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(kernel(&m).dim() + m.rank(), m.cols());
    }

    #[test]
    fn quotient_membership(gens in prop::collection::vec(vector(4), 0..3), v in vector(4)) {
        let rel = Subspace::span(4, &gens);
        let q = quotient(4, &rel);
        prop_assert_eq!(is_zero_vec(&q.proj().apply(&v)), rel.contains(&v));
    }

    #[test]
    fn rationals_add_exactly(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        prop_assert_eq!(&Scalar::new(a, b) + &Scalar::new(c, d), Scalar::new(a * d + b * c, b * d));
    }

    #[test]
    fn basis_check_implies_identity_on_vectors(
        (a, x, y, z) in leibniz(3).prop_flat_map(|a| { let d = a.dim(); (Just(a), vector(d), vector(d), vector(d)) })
    ) {
        prop_assert!(check_leibniz(&a).passed());
        prop_assert!(leibniz_identity(&a, &x, &y, &z));
    }

    #[test]
    fn random_constants_checker_agrees_with_sampling(
        coeff in prop::collection::vec(-1i64..=1, 8),
        (x, y, z) in (vector(2), vector(2), vector(2)),
    ) {
        let sc = lbraid::BilinearMap::from_coeff(2, 2, 2, coeff.into_iter().map(Scalar::from_int).collect()).unwrap();
        let a = Algebra::new("rand", sc).unwrap();
        if check_leibniz(&a).passed() {
            prop_assert!(leibniz_identity(&a, &x, &y, &z));
        }
    }

    #[test]
    fn lieization_is_antisymmetric(a in leibniz(4)) {
        let q = lieization(&a).unwrap();
        prop_assert!(check_antisymmetry(&q.algebra).passed());
    }

    #[test]
    fn quotient_projection_is_surjective_hom((a, seed) in leibniz(4).prop_flat_map(|a| { let d = a.dim(); (Just(a), vector(d)) })) {
        let ideal = ideal_closure(&a, &Subspace::span(a.dim(), &[seed]));
        prop_assert!(is_ideal(&a, &ideal));
        let q = quotient_algebra(&a, &ideal).unwrap();
        prop_assert!(check_hom(q.proj(), &a, &q.algebra).passed());
        prop_assert_eq!(q.proj().rank(), q.algebra.dim());
        prop_assert_eq!(kernel(q.proj()), ideal);
    }

    #[test]
    fn ideal_closure_idempotent_and_monotone(
        (a, u, v) in leibniz(4).prop_flat_map(|a| { let d = a.dim(); (Just(a), vector(d), vector(d)) })
    ) {
        let small = ideal_closure(&a, &Subspace::span(a.dim(), &[u.clone()]));
        prop_assert_eq!(ideal_closure(&a, &small), small.clone());
        let big = ideal_closure(&a, &Subspace::span(a.dim(), &[u, v]));
        prop_assert!(small.is_subspace_of(&big));
    }

    #[test]
    fn semidirect_slices(a in leibniz(3)) {
        let sd = semidirect(&LeibnizAction::adjoint(&a)).unwrap();
        prop_assert!(check_hom(&sd.incl_m, &a, &sd.algebra).passed());
        prop_assert!(check_hom(&sd.incl_n, &a, &sd.algebra).passed());
    }

    #[test]
    fn identity_xmod_passes(a in leibniz(3)) {
        prop_assert!(check_xmod(&CrossedModule::identity(&a)).passed());
    }

    #[test]
    fn braided_lieization_is_lie(a in leibniz(3)) {
        let z = identity_bxmod(&a).unwrap();
        prop_assert!(check_braiding_leibniz(&z).passed());
        let q = lieize_bxmod(&z).unwrap();
        prop_assert!(check_braiding_lie(&q.lie).passed());
        if let Some(lie) = detect_lie_collapse(&z).extracted {
            prop_assert_eq!(braiding_embed_lie(&lie).unwrap(), z);
        }
    }

    #[test]
    fn functor_c_shape(a in leibniz(3)) {
        let z = identity_bxmod(&a).unwrap();
        let d = functor_c(&z).unwrap();
        let dk = derive_k(&d.cat);
        prop_assert!(dk.report.passed());
        prop_assert!(kernels_commute(&d.cat));
        prop_assert_eq!(kernel(&d.cat.s), m_slice(a.dim(), a.dim()));
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let t = d.braiding.tau.get(i, j);
                prop_assert_eq!(d.cat.s.apply(t), a.bracket_basis(i, j).to_vec());
                prop_assert_eq!(d.cat.t.apply(t), vec_neg(a.bracket_basis(i, j)));
            }
        }
        prop_assert_eq!(functor_x(&d).unwrap().braiding, z.braiding.clone());
        let al = alpha_iso(&z).unwrap();
        prop_assert!(al.report.passed());
    }

    #[test]
    fn loday_pirashvili_round_trips(a in leibniz(3)) {
        prop_assert_eq!(psi(&phi(&a).unwrap()).unwrap(), a.clone());
        let z = identity_bxmod(&a).unwrap();
        prop_assert_eq!(xpsi(&xphi(&z.xmod).unwrap()).unwrap(), z.xmod.clone());
        let (x, t) = bxphi(&z).unwrap();
        prop_assert_eq!(bxpsi(&x, &t).unwrap(), z.clone());
        let d = functor_c(&z).unwrap();
        prop_assert_eq!(ipsi(&iphi(&d.cat).unwrap()).unwrap(), d.cat.clone());
        let (o, b) = biphi(&d).unwrap();
        prop_assert_eq!(bipsi(&o, &b).unwrap(), d);
    }

    #[test]
    fn lm_braiding_is_an_involution(
        (f, g) in (1usize..3, 1usize..3, 1usize..3, 1usize..3)
            .prop_flat_map(|(m, n, l, h)| (matrix(n, m), matrix(h, l)))
    ) {
        let (a, b) = (LMObject::new(f), LMObject::new(g));
        let ab = lm_tensor(&a, &b);
        let ba = lm_tensor(&b, &a);
        prop_assert!(check_lm_morphism(&ab.braid, &ab.obj, &ba.obj).passed());
        let twice: LMMorphism = ba.braid.compose(&ab.braid);
        prop_assert!(twice.top.is_identity() && twice.bottom.is_identity());
    }

    #[test]
    fn tensor_square_of_two_dim(a in leibniz(2)) {
        let (x, t) = tensor_self_xmod_in(&a, Regime::Leibniz).unwrap();
        prop_assert!(t.certificate().passed());
        prop_assert!(check_xmod(&x).passed());
        prop_assert!(check_boundary_on_symbols(&x, &t).passed());
        prop_assert!(check_collapse_identities(&t).passed());
    }
}

#[test]
fn lie_regime_residuals_vanish() {
    for a in [a1(), r2(), heisenberg()] {
        let (_, t) = tensor_self_xmod_in(&a, Regime::Lie).unwrap();
        assert!(lie_collapse_residuals(&t).iter().all(|v| is_zero_vec(v)), "{}", a.name);
    }
}
