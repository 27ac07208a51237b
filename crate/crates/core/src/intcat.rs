//! Categorical (internal) Leibniz and Lie algebras and their braidings.
//!
//! The composition `k` is never stored. On `C₁ ×_{C₀} C₁ = {(x, y) : t x = s y}`
//! it is forced to be `k(x, y) = x − e(t x) + y = x − e(s y) + y`.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_hom, check_leibniz, check_lie, ideal_closure, induce_linear, lieization, quotient_algebra,
    square_generators, Algebra, BilinearMap,
};
use crate::error::{gate, Error, Result};
use crate::exactla::{
    kernel, pullback_subspace, unit_vec, vec_add, vec_concat, vec_neg, vec_sub, Matrix, Scalar, Subspace, Vector,
};
use crate::report::Report;

/// `(C₁, C₀, s, t, e)`; `s`, `t`: `C₁ → C₀`, `e`: `C₀ → C₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatAlgebra {
    pub c1: Algebra,
    pub c0: Algebra,
    pub s: Matrix,
    pub t: Matrix,
    pub e: Matrix,
}

/// Structural checks: shapes, `s e = id = t e`, and `s`, `t`, `e` homomorphisms.
pub fn check_cat_structure(c: &CatAlgebra) -> Report {
    let mut rep = Report::new(format!("cat({} => {})", c.c1.name, c.c0.name));
    let (d1, d0) = (c.c1.dim(), c.c0.dim());
    let shaped = rep.expect("Shape", c.s.rows() == d0 && c.s.cols() == d1, || "s has the wrong shape".into())
        & rep.expect("Shape", c.t.rows() == d0 && c.t.cols() == d1, || "t has the wrong shape".into())
        & rep.expect("Shape", c.e.rows() == d1 && c.e.cols() == d0, || "e has the wrong shape".into());
    if !shaped {
        return rep;
    }
    rep.push_section(check_leibniz(&c.c1));
    rep.push_section(check_leibniz(&c.c0));
    rep.expect("Section", c.s.mul(&c.e).is_identity(), || "s∘e ≠ id".into());
    rep.expect("Section", c.t.mul(&c.e).is_identity(), || "t∘e ≠ id".into());
    rep.push_section(check_hom(&c.s, &c.c1, &c.c0));
    rep.push_section(check_hom(&c.t, &c.c1, &c.c0));
    rep.push_section(check_hom(&c.e, &c.c0, &c.c1));
    rep
}

impl CatAlgebra {
    pub fn new(c1: Algebra, c0: Algebra, s: Matrix, t: Matrix, e: Matrix) -> Result<Self> {
        let c = CatAlgebra { c1, c0, s, t, e };
        gate(check_cat_structure(&c), Error::InvalidCatAlgebra)?;
        Ok(c)
    }

    /// `C₁ = C₀ = A` with `s = t = e = id`.
    pub fn discrete(a: &Algebra) -> Self {
        let id = Matrix::identity(a.dim());
        CatAlgebra { c1: a.clone(), c0: a.clone(), s: id.clone(), t: id.clone(), e: id }
    }

    /// `x − e(t x) + y` as a map on all of `C₁ ⊕ C₁`.
    pub fn k_matrix(&self) -> Matrix {
        let d1 = self.c1.dim();
        Matrix::identity(d1).sub(&self.e.mul(&self.t)).hstack(&Matrix::identity(d1))
    }

    pub fn compose(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_add(&vec_sub(x, &self.e.apply(&self.t.apply(x))), y)
    }

    /// `{(x, y) : t x = s y}`.
    pub fn pullback(&self) -> Subspace {
        pullback_subspace(&self.t, &self.s)
    }
}

/// The derived composition on the pullback.
#[derive(Clone, Debug)]
pub struct DerivedK {
    pub pullback: Subspace,
    /// `dim C₁ × dim pullback`, in the pullback's basis coordinates.
    pub k: Matrix,
    pub report: Report,
}

pub fn derive_k(c: &CatAlgebra) -> DerivedK {
    let mut rep = Report::new(format!("k({} => {})", c.c1.name, c.c0.name));
    let d1 = c.c1.dim();
    let pb = c.pullback();
    let kmat = c.k_matrix();
    let incl = pb.inclusion();
    let k = kmat.mul(&incl);
    let basis = pb.basis_vectors();
    let split = |v: &Vector| (v[..d1].to_vec(), v[d1..].to_vec());

    for (p, v) in basis.iter().enumerate() {
        let (x, y) = split(v);
        // x − e t x + y = x − e s y + y
        let diff = vec_sub(&c.e.apply(&c.t.apply(&x)), &c.e.apply(&c.s.apply(&y)));
        rep.expect_zero("KDoubleFormula", 0, &[p], &diff);
        let kxy = c.compose(&x, &y);
        rep.expect_eq("KSourceTarget", 1, &[p], &c.s.apply(&kxy), &c.s.apply(&x));
        rep.expect_eq("KSourceTarget", 2, &[p], &c.t.apply(&kxy), &c.t.apply(&y));
    }
    // componentwise bracket on the pullback
    for (p, u) in basis.iter().enumerate() {
        for (q, v) in basis.iter().enumerate() {
            let (x, y) = split(u);
            let (x2, y2) = split(v);
            let br = vec_concat(&c.c1.bracket(&x, &x2), &c.c1.bracket(&y, &y2));
            if !rep.expect("PullbackClosed", pb.contains(&br), || format!("pullback basis pair ({p}, {q})")) {
                continue;
            }
            let lhs = kmat.apply(&br);
            let rhs = c.c1.bracket(&c.compose(&x, &y), &c.compose(&x2, &y2));
            rep.expect_eq("KHom", 0, &[p, q], &lhs, &rhs);
        }
    }
    for i in 0..d1 {
        let x = unit_vec(d1, i);
        let left = c.compose(&c.e.apply(&c.s.apply(&x)), &x);
        let right = c.compose(&x, &c.e.apply(&c.t.apply(&x)));
        rep.expect_eq("KUnit", 1, &[i], &left, &x);
        rep.expect_eq("KUnit", 2, &[i], &right, &x);
    }
    DerivedK { pullback: pb, k, report: rep }
}

/// Whether `[ker s, ker t] = 0 = [ker t, ker s]` inside `C₁`.
pub fn kernels_commute(c: &CatAlgebra) -> bool {
    let ks = kernel(&c.s).basis_vectors();
    let kt = kernel(&c.t).basis_vectors();
    ks.iter().all(|u| {
        kt.iter().all(|v| {
            c.c1.bracket(u, v).iter().all(Scalar::is_zero) && c.c1.bracket(v, u).iter().all(Scalar::is_zero)
        })
    })
}

/// `(τ, ψ)`, both `C₀ × C₀ → C₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatBraiding {
    pub tau: BilinearMap,
    pub psi: BilinearMap,
}

impl CatBraiding {
    pub fn zero(d0: usize, d1: usize) -> Self {
        CatBraiding { tau: BilinearMap::zeros(d0, d0, d1), psi: BilinearMap::zeros(d0, d0, d1) }
    }
}

fn braiding_shape_ok(rep: &mut Report, c: &CatAlgebra, b: &BilinearMap, name: &str) -> bool {
    let want = (c.c0.dim(), c.c0.dim(), c.c1.dim());
    rep.expect("Shape", b.dims() == want, || format!("{name} is {:?}, expected {want:?}", b.dims()))
}

/// The images of `x` and `y` under `s` and `t`, as columns.
fn st_columns(c: &CatAlgebra) -> (Vec<Vector>, Vec<Vector>) {
    let d1 = c.c1.dim();
    ((0..d1).map(|i| c.s.column(i)).collect(), (0..d1).map(|i| c.t.column(i)).collect())
}

pub fn check_cat_braiding_leibniz(c: &CatAlgebra, b: &CatBraiding) -> Report {
    let mut rep = Report::new(format!("cat braiding({} => {})", c.c1.name, c.c0.name));
    let st = check_cat_structure(c);
    let ok = st.passed();
    rep.push_section(st);
    if !ok || !(braiding_shape_ok(&mut rep, c, &b.tau, "tau") & braiding_shape_ok(&mut rep, c, &b.psi, "psi")) {
        return rep;
    }
    rep.push_section(derive_k(c).report);
    let (c0, c1) = (&c.c0, &c.c1);
    let (d0, d1) = (c0.dim(), c1.dim());

    for a in 0..d0 {
        for bb in 0..d0 {
            let br = c0.bracket_basis(a, bb);
            let neg = vec_neg(br);
            for (clause, m) in [(1u8, &b.tau), (3, &b.psi)] {
                rep.expect_eq("LeibT1", clause, &[a, bb], &c.s.apply(m.get(a, bb)), br);
                rep.expect_eq("LeibT1", clause + 1, &[a, bb], &c.t.apply(m.get(a, bb)), &neg);
            }
        }
    }

    let (sc, tc) = st_columns(c);
    for x in 0..d1 {
        for y in 0..d1 {
            let xy = c1.bracket_basis(x, y);
            for (clause, m) in [(1u8, &b.tau), (2, &b.psi)] {
                let lhs = c.compose(xy, &m.eval(&tc[x], &tc[y]));
                let rhs = c.compose(&m.eval(&sc[x], &sc[y]), &vec_neg(xy));
                rep.expect_eq("LeibT2", clause, &[x, y], &lhs, &rhs);
            }
        }
    }

    let (t, p) = (&b.tau, &b.psi);
    for a in 0..d0 {
        for bb in 0..d0 {
            for cc in 0..d0 {
                let bc = c0.bracket_basis(bb, cc);
                let ab = c0.bracket_basis(a, bb);
                let ac = c0.bracket_basis(a, cc);
                let tr = [a, bb, cc];
                let t_a_bc = t.eval_right(a, bc);
                let p_a_bc = p.eval_right(a, bc);
                let t_ab_c = t.eval_left(ab, cc);
                let p_ab_c = p.eval_left(ab, cc);
                let t_ac_b = t.eval_left(ac, bb);
                let p_ac_b = p.eval_left(ac, bb);
                rep.expect_eq("LeibT3", 0, &tr, &t_a_bc, &vec_sub(&t_ab_c, &t_ac_b));
                rep.expect_eq("LeibT4", 0, &tr, &p_a_bc, &vec_sub(&t_ab_c, &p_ac_b));
                rep.expect_eq("LeibT5", 0, &tr, &t_a_bc, &vec_sub(&t_ab_c, &p_ac_b));
                rep.expect_eq("LeibT6", 0, &tr, &p_a_bc, &vec_sub(&p_ab_c, &p_ac_b));
            }
        }
    }
    rep
}

pub fn check_cat_braiding_lie(c: &CatAlgebra, tau: &BilinearMap) -> Report {
    let mut rep = Report::new(format!("lie cat braiding({} => {})", c.c1.name, c.c0.name));
    let st = check_cat_structure(c);
    let ok = st.passed();
    rep.push_section(st);
    if !ok || !braiding_shape_ok(&mut rep, c, tau, "tau") {
        return rep;
    }
    rep.push_section(check_lie(&c.c1));
    rep.push_section(check_lie(&c.c0));
    rep.push_section(derive_k(c).report);
    let (c0, c1) = (&c.c0, &c.c1);
    let (d0, d1) = (c0.dim(), c1.dim());

    for a in 0..d0 {
        for b in 0..d0 {
            rep.expect_eq("LieT1", 1, &[a, b], &c.s.apply(tau.get(a, b)), c0.bracket_basis(a, b));
            rep.expect_eq("LieT1", 2, &[a, b], &c.t.apply(tau.get(a, b)), c0.bracket_basis(b, a));
        }
    }
    let (sc, tc) = st_columns(c);
    for x in 0..d1 {
        for y in 0..d1 {
            let lhs = c.compose(c1.bracket_basis(x, y), &tau.eval(&tc[x], &tc[y]));
            let rhs = c.compose(&tau.eval(&sc[x], &sc[y]), c1.bracket_basis(y, x));
            rep.expect_eq("LieT2", 0, &[x, y], &lhs, &rhs);
        }
    }
    for a in 0..d0 {
        for b in 0..d0 {
            for cc in 0..d0 {
                let tr = [a, b, cc];
                let lhs = tau.eval_left(c0.bracket_basis(a, b), cc);
                let rhs = vec_sub(&tau.eval_right(a, c0.bracket_basis(b, cc)), &tau.eval_right(b, c0.bracket_basis(a, cc)));
                rep.expect_eq("LieT3", 0, &tr, &lhs, &rhs);
                let lhs = tau.eval_right(a, c0.bracket_basis(b, cc));
                let rhs =
                    vec_sub(&tau.eval_left(c0.bracket_basis(a, b), cc), &tau.eval_left(c0.bracket_basis(a, cc), b));
                rep.expect_eq("LieT4", 0, &tr, &lhs, &rhs);
            }
        }
    }
    rep
}

/// `(τ, τ⁻)` with `τ⁻_{a,b} = −τ_{b,a}`.
pub fn cat_braiding_embed_lie(c: &CatAlgebra, tau: &BilinearMap) -> Result<CatBraiding> {
    gate(check_cat_braiding_lie(c, tau), Error::NotLieCatBraiding)?;
    Ok(CatBraiding { tau: tau.clone(), psi: tau.flip().neg() })
}

/// `τ_{a,[b,c]} = [e(a), τ_{b,c}]` and `τ_{[b,c],a} = [τ_{b,c}, e(a)]`.
pub fn check_tau_bracket_identity(c: &CatAlgebra, tau: &BilinearMap) -> Report {
    let mut rep = Report::new(format!("tau bracket({} => {})", c.c1.name, c.c0.name));
    if !braiding_shape_ok(&mut rep, c, tau, "tau") {
        return rep;
    }
    let d0 = c.c0.dim();
    let ecols: Vec<Vector> = (0..d0).map(|i| c.e.column(i)).collect();
    for a in 0..d0 {
        for b in 0..d0 {
            for cc in 0..d0 {
                let bc = c.c0.bracket_basis(b, cc);
                let lhs = tau.eval_right(a, bc);
                rep.expect_eq("TauBracket", 1, &[a, b, cc], &lhs, &c.c1.bracket(&ecols[a], tau.get(b, cc)));
                let lhs = tau.eval_left(bc, a);
                rep.expect_eq("TauBracket", 2, &[a, b, cc], &lhs, &c.c1.bracket(tau.get(b, cc), &ecols[a]));
            }
        }
    }
    rep
}

/// Internal-functor laws for `(F₁, F₀)`, plus `LeibHT1–2` when braidings are given.
pub fn check_cat_functor(
    f1: &Matrix,
    f0: &Matrix,
    src: &CatAlgebra,
    dst: &CatAlgebra,
    braidings: Option<(&CatBraiding, &CatBraiding)>,
) -> Report {
    let mut rep = Report::new(format!("functor({} => {})", src.c1.name, dst.c1.name));
    let h1 = check_hom(f1, &src.c1, &dst.c1);
    let h0 = check_hom(f0, &src.c0, &dst.c0);
    let shaped = !h1.fails("Shape") && !h0.fails("Shape");
    rep.push_section(h1);
    rep.push_section(h0);
    if !shaped {
        return rep;
    }
    rep.expect("IFunctor", dst.s.mul(f1) == f0.mul(&src.s), || "s'∘F₁ ≠ F₀∘s".into());
    rep.expect("IFunctor", dst.t.mul(f1) == f0.mul(&src.t), || "t'∘F₁ ≠ F₀∘t".into());
    rep.expect("IFunctor", dst.e.mul(f0) == f1.mul(&src.e), || "e'∘F₀ ≠ F₁∘e".into());
    let d1 = src.c1.dim();
    for (p, v) in src.pullback().basis_vectors().iter().enumerate() {
        let (x, y) = (&v[..d1], &v[d1..]);
        let lhs = f1.apply(&src.compose(x, y));
        let rhs = dst.compose(&f1.apply(x), &f1.apply(y));
        rep.expect_eq("IFunctorK", 0, &[p], &lhs, &rhs);
    }
    if let Some((b, b2)) = braidings {
        let d0 = src.c0.dim();
        let f0c: Vec<Vector> = (0..d0).map(|i| f0.column(i)).collect();
        for a in 0..d0 {
            for bb in 0..d0 {
                let lhs = f1.apply(b.tau.get(a, bb));
                rep.expect_eq("LeibHT1", 0, &[a, bb], &lhs, &b2.tau.eval(&f0c[a], &f0c[bb]));
                let lhs = f1.apply(b.psi.get(a, bb));
                rep.expect_eq("LeibHT2", 0, &[a, bb], &lhs, &b2.psi.eval(&f0c[a], &f0c[bb]));
            }
        }
    }
    rep
}

/// `τ(e_a, e_b) + ψ(e_b, e_a)`.
pub fn cat_braiding_generators(b: &CatBraiding) -> Vec<Vector> {
    let d0 = b.tau.left_dim();
    let mut out = Vec::new();
    for a in 0..d0 {
        for bb in 0..d0 {
            out.push(vec_add(b.tau.get(a, bb), b.psi.get(bb, a)));
        }
    }
    out
}

/// `[τ_{C₀,C₀}]`: the ideal of `C₁` generated by squares and `τ_{a,b} + ψ_{b,a}`.
pub fn cat_lie_ideal(c: &CatAlgebra, b: &CatBraiding) -> Subspace {
    let mut gens = square_generators(&c.c1);
    gens.extend(cat_braiding_generators(b));
    ideal_closure(&c.c1, &Subspace::span(c.c1.dim(), &gens))
}

/// `(C₁/[τ_{C₀,C₀}], Lie(C₀), s̄, t̄, ē, τ²)` and the two projections.
#[derive(Clone, Debug)]
pub struct LieizedCat {
    pub cat: CatAlgebra,
    pub tau2: BilinearMap,
    pub proj1: Matrix,
    pub proj0: Matrix,
    pub ideal1: Subspace,
    pub ideal0: Subspace,
    /// `KExtension`: `x + y − e(s y)` and `x + y − e(t x)` agree in the quotient.
    pub report: Report,
}

pub fn cat_lieization(c: &CatAlgebra, b: &CatBraiding) -> Result<LieizedCat> {
    let ideal1 = cat_lie_ideal(c, b);
    let q1 = quotient_algebra(&c.c1, &ideal1)?;
    let q0 = lieization(&c.c0)?;
    let s = induce_linear(&c.s, &q1.pres, &q0.pres)?;
    let t = induce_linear(&c.t, &q1.pres, &q0.pres)?;
    let e = induce_linear(&c.e, &q0.pres, &q1.pres)?;
    let tau2 = b.tau.induce(&q0.pres, &q0.pres, &q1.pres)?;
    let c1 = q1.algebra.clone().with_name(format!("{}/[tau]", c.c1.name));
    let cat = CatAlgebra::new(c1, q0.algebra.clone(), s, t, e)?;

    let mut rep = Report::new(format!("k extension({})", c.c1.name));
    let d1 = c.c1.dim();
    let p0 = q0.proj();
    let composable = pullback_subspace(&p0.mul(&c.t), &p0.mul(&c.s));
    for (p, v) in composable.basis_vectors().iter().enumerate() {
        let (x, y) = (&v[..d1], &v[d1..]);
        let diff = vec_sub(&c.e.apply(&c.t.apply(x)), &c.e.apply(&c.s.apply(y)));
        rep.expect_zero("KExtension", 0, &[p], &q1.proj().apply(&diff));
    }
    Ok(LieizedCat {
        cat,
        tau2,
        proj1: q1.pres.proj().clone(),
        proj0: q0.pres.proj().clone(),
        ideal1,
        ideal0: q0.pres.relations().clone(),
        report: rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a1, heisenberg, l2, l3, r2};

    #[test]
    fn discrete_category() {
        for a in [a1(), l2(), r2(), l3()] {
            let c = CatAlgebra::discrete(&a);
            let k = derive_k(&c);
            assert!(k.report.passed(), "{}", k.report);
            assert_eq!(k.pullback.dim(), a.dim());
            // k(x, x) = x
            for i in 0..a.dim() {
                let x = unit_vec(a.dim(), i);
                assert_eq!(c.compose(&x, &x), x);
            }
            assert!(kernels_commute(&c));
        }
    }

    #[test]
    fn rejects_non_section() {
        let a = l2();
        let twice = Matrix::identity(2).scale(&Scalar::from_int(2));
        let r = CatAlgebra::new(a.clone(), a.clone(), Matrix::identity(2), Matrix::identity(2), twice);
        assert!(matches!(r, Err(Error::InvalidCatAlgebra(_))));
    }

    /// One object: `C₀ = 0`, so `k(x, y) = x + y`, a homomorphism only for abelian `C₁`.
    fn one_object(a: &Algebra) -> CatAlgebra {
        let n = a.dim();
        CatAlgebra {
            c1: a.clone(),
            c0: Algebra::abelian("0", 0),
            s: Matrix::zeros(0, n),
            t: Matrix::zeros(0, n),
            e: Matrix::zeros(n, 0),
        }
    }

    #[test]
    fn k_homomorphism_tracks_commuting_kernels() {
        for a in [a1(), l2(), r2(), heisenberg()] {
            let c = one_object(&a);
            assert!(check_cat_structure(&c).passed());
            let k = derive_k(&c);
            assert_eq!(k.report.passed(), kernels_commute(&c), "{}", a.name);
            assert_eq!(k.report.passed(), a.is_abelian(), "{}", a.name);
        }
        // A ⊕ A over A with the two projections: kernels always commute
        let a = l2();
        let (id, z) = (Matrix::identity(2), Matrix::zeros(2, 2));
        let pair = CatAlgebra::new(a.direct_sum(&a), a.clone(), id.hstack(&z), z.hstack(&id), id.vstack(&id)).unwrap();
        assert!(kernels_commute(&pair) && derive_k(&pair).report.passed());
    }

    #[test]
    fn zero_braiding_on_abelian_discrete() {
        let c = CatAlgebra::discrete(&Algebra::abelian("A2", 2));
        let b = CatBraiding::zero(2, 2);
        assert!(check_cat_braiding_leibniz(&c, &b).passed());
        assert!(check_cat_braiding_lie(&c, &b.tau).passed());
        assert!(check_tau_bracket_identity(&c, &b.tau).passed());
        let l = cat_lieization(&c, &b).unwrap();
        assert_eq!(l.ideal1.dim(), 0);
    }

    #[test]
    fn discrete_lie_braiding() {
        // on a discrete category LieT1 forces τ_{a,b} = [a,b] = [b,a]
        let c = CatAlgebra::discrete(&a1());
        assert!(check_cat_braiding_lie(&c, a1().sc()).passed());
        let c = CatAlgebra::discrete(&r2());
        assert!(check_cat_braiding_lie(&c, r2().sc()).fails("LieT1"));
    }

    #[test]
    fn identity_functor() {
        let c = CatAlgebra::discrete(&l2());
        let id = Matrix::identity(2);
        let b = CatBraiding { tau: l2().sc().clone(), psi: l2().sc().clone() };
        assert!(check_cat_functor(&id, &id, &c, &c, Some((&b, &b))).passed());
    }
}
