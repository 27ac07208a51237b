//! The Loday–Pirashvili category `𝓛𝓜_K` of linear maps, Lie objects in it,
//! their crossed modules and categorical objects, braidings on both, and the
//! functor pairs relating them to the Leibniz side.
//!
//! Every `*phi` goes from Leibniz data to `𝓛𝓜_K` data and every `*psi` comes
//! back; `*psi ∘ *phi` is the identity on stored tensors.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_hom, induce_linear, lieization, quotient_algebra, Algebra, BilinearMap, Quotient,
};
use crate::braid::{braided_lie_ideal, check_braiding_leibniz, check_braiding_lie, BraidedXMod, LeibnizBraiding, LieBraidedXMod};
use crate::equiv::BraidedCatAlgebra;
use crate::error::{gate, Error, Result};
use crate::exactla::{
    pullback_subspace, unit_vec, vec_add, vec_neg, vec_sub, Matrix, QuotientPresentation, Scalar, Subspace, Vector,
};
use crate::intcat::{
    cat_lie_ideal, check_cat_braiding_lie, check_cat_structure, derive_k, CatAlgebra, CatBraiding,
};
use crate::report::Report;
use crate::xmod::{check_lie_action, check_lie_xmod, check_xmod, xmod_lie_ideal, CrossedModule, LeibnizAction};

/// An object `f: M → N` of `𝓛𝓜_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LMObject {
    pub f: Matrix,
}

impl LMObject {
    pub fn new(f: Matrix) -> Self {
        LMObject { f }
    }

    pub fn zero(top: usize, bottom: usize) -> Self {
        LMObject { f: Matrix::zeros(bottom, top) }
    }

    pub fn top_dim(&self) -> usize {
        self.f.cols()
    }

    pub fn bottom_dim(&self) -> usize {
        self.f.rows()
    }
}

/// A morphism `(α₁, α₂)` of `𝓛𝓜_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LMMorphism {
    pub top: Matrix,
    pub bottom: Matrix,
}

impl LMMorphism {
    pub fn new(top: Matrix, bottom: Matrix) -> Self {
        LMMorphism { top, bottom }
    }

    pub fn identity(o: &LMObject) -> Self {
        LMMorphism { top: Matrix::identity(o.top_dim()), bottom: Matrix::identity(o.bottom_dim()) }
    }

    pub fn compose(&self, first: &LMMorphism) -> LMMorphism {
        LMMorphism { top: self.top.mul(&first.top), bottom: self.bottom.mul(&first.bottom) }
    }
}

/// `g ∘ α₁ = α₂ ∘ f`.
pub fn check_lm_morphism(a: &LMMorphism, src: &LMObject, dst: &LMObject) -> Report {
    let mut rep = Report::new("lm morphism");
    let shaped = a.top.cols() == src.top_dim()
        && a.top.rows() == dst.top_dim()
        && a.bottom.cols() == src.bottom_dim()
        && a.bottom.rows() == dst.bottom_dim();
    if !rep.expect("Shape", shaped, || "morphism does not fit its objects".into()) {
        return rep;
    }
    let lhs = dst.f.mul(&a.top);
    let rhs = a.bottom.mul(&src.f);
    for j in 0..src.top_dim() {
        rep.expect_eq("LMSquare", 0, &[j], &lhs.column(j), &rhs.column(j));
    }
    rep
}

/// `(M⊗H) ⊕ (N⊗L) → N⊗H` together with the braiding `𝒯_{f,g}` into the
/// tensor taken in the other order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMTensor {
    pub obj: LMObject,
    pub braid: LMMorphism,
}

pub fn lm_tensor(a: &LMObject, b: &LMObject) -> LMTensor {
    let (m, n) = (a.top_dim(), a.bottom_dim());
    let (l, h) = (b.top_dim(), b.bottom_dim());
    let f = a.f.kron(&Matrix::identity(h)).hstack(&Matrix::identity(n).kron(&b.f));

    // m⊗h ↦ h⊗m in the second block, n⊗l ↦ l⊗n in the first.
    let mut top = Matrix::zeros(l * n + h * m, m * h + n * l);
    for i in 0..m {
        for j in 0..h {
            top.set(l * n + j * m + i, i * h + j, Scalar::one());
        }
    }
    for i in 0..n {
        for j in 0..l {
            top.set(j * n + i, m * h + i * l + j, Scalar::one());
        }
    }
    let mut bottom = Matrix::zeros(h * n, n * h);
    for i in 0..n {
        for j in 0..h {
            bottom.set(j * n + i, i * h + j, Scalar::one());
        }
    }
    LMTensor { obj: LMObject { f }, braid: LMMorphism { top, bottom } }
}

/// A Lie object `(f: M → N, *, [−,−]_N)` of `𝓛𝓜_K`; `star` is `*: M × N → M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieObjectLM {
    pub name: String,
    pub obj: LMObject,
    pub bottom: Algebra,
    pub star: BilinearMap,
}

impl LieObjectLM {
    pub fn top_dim(&self) -> usize {
        self.obj.top_dim()
    }

    pub fn f(&self) -> &Matrix {
        &self.obj.f
    }

    fn star_basis(&self, i: usize, n: &[Scalar]) -> Vector {
        self.star.eval_right(i, n)
    }
}

pub fn check_lie_object(o: &LieObjectLM) -> Report {
    let mut rep = Report::new(format!("lie object({})", o.name));
    let (m, n) = (o.top_dim(), o.bottom.dim());
    let shaped = o.obj.bottom_dim() == n && o.star.dims() == (m, n, m);
    if !rep.expect("Shape", shaped, || "star must be M × N → M over f: M → N".into()) {
        return rep;
    }
    rep.push_section(crate::algebra::check_lie(&o.bottom));
    for i in 0..m {
        for a in 0..n {
            for b in 0..n {
                // m * [n, n'] = (m * n) * n' − (m * n') * n
                let lhs = o.star.eval_right(i, o.bottom.bracket_basis(a, b));
                let rhs = vec_sub(
                    &o.star.eval_left(o.star.get(i, a), b),
                    &o.star.eval_left(o.star.get(i, b), a),
                );
                rep.expect_eq("Module", 0, &[i, a, b], &lhs, &rhs);
            }
            // f(m * n) = [f(m), n]
            let lhs = o.f().apply(o.star.get(i, a));
            let rhs = o.bottom.sc().eval_left(&o.f().column(i), a);
            rep.expect_eq("Equivariant", 0, &[i, a], &lhs, &rhs);
        }
    }
    rep
}

/// `(α₁, α₂)` is an `𝓛𝓜_K` morphism, `α₂` a Lie homomorphism and
/// `α₁(m * n) = α₁(m) * α₂(n)`.
pub fn check_lie_morphism(a: &LMMorphism, src: &LieObjectLM, dst: &LieObjectLM) -> Report {
    let mut rep = Report::new(format!("lie morphism({} -> {})", src.name, dst.name));
    let sq = check_lm_morphism(a, &src.obj, &dst.obj);
    let shaped = !sq.fails("Shape");
    rep.push_section(sq);
    if !shaped {
        return rep;
    }
    rep.push_section(check_hom(&a.bottom, &src.bottom, &dst.bottom));
    for i in 0..src.top_dim() {
        for b in 0..src.bottom.dim() {
            let lhs = a.top.apply(src.star.get(i, b));
            let rhs = dst.star.eval(&a.top.column(i), &a.bottom.column(b));
            rep.expect_eq("LieMorphism", 0, &[i, b], &lhs, &rhs);
        }
    }
    rep
}

fn trivial(n: usize) -> QuotientPresentation {
    QuotientPresentation::trivial(n)
}

/// `(π: A → A/I, m * n̄ = [m, n])`.
fn over_quotient(a: &Algebra, q: &Quotient) -> Result<LieObjectLM> {
    let star = a.sc().induce(&trivial(a.dim()), &q.pres, &trivial(a.dim()))?;
    Ok(LieObjectLM {
        name: a.name.clone(),
        obj: LMObject::new(q.proj().clone()),
        bottom: q.algebra.clone(),
        star,
    })
}

/// `Φ(A) = (π_A: A → Lie(A), m * m̄' = [m, m'])`.
pub fn phi(a: &Algebra) -> Result<LieObjectLM> {
    let q = lieization(a)?;
    over_quotient(a, &q)
}

fn psi_unchecked(o: &LieObjectLM) -> Result<Algebra> {
    let m = o.top_dim();
    let sc = BilinearMap::from_fn(m, m, m, |i, j| o.star_basis(i, &o.f().column(j)));
    Algebra::new(o.name.clone(), sc)
}

/// `Ψ(o) = (M, [m, m'] = m * f(m'))`.
pub fn psi(o: &LieObjectLM) -> Result<Algebra> {
    gate(check_lie_object(o), Error::InvalidLieObject)?;
    psi_unchecked(o)
}

/// A crossed module of Lie objects of `𝓛𝓜_K`: `top = (f: M → N)`,
/// `bot = (g: L → H)`, the action `(·₁, ·₂, ξ)` and `∂ = (∂₁, ∂₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XLieLM {
    pub top: LieObjectLM,
    pub bot: LieObjectLM,
    /// `H × M → M`
    pub act1: BilinearMap,
    /// `H × N → N`
    pub act2: BilinearMap,
    /// `L × N → M`
    pub xi: BilinearMap,
    pub d1: Matrix,
    pub d2: Matrix,
}

impl XLieLM {
    fn dims(&self) -> (usize, usize, usize, usize) {
        (self.top.top_dim(), self.top.bottom.dim(), self.bot.top_dim(), self.bot.bottom.dim())
    }

    pub fn boundary(&self) -> LMMorphism {
        LMMorphism::new(self.d1.clone(), self.d2.clone())
    }
}

pub fn check_xlielm(x: &XLieLM) -> Report {
    let (dm, dn, dl, dh) = x.dims();
    let mut rep = Report::new(format!("lie object xmod({} -> {})", x.top.name, x.bot.name));
    let shaped = x.act1.dims() == (dh, dm, dm)
        && x.act2.dims() == (dh, dn, dn)
        && x.xi.dims() == (dl, dn, dm)
        && (x.d1.rows(), x.d1.cols()) == (dl, dm)
        && (x.d2.rows(), x.d2.cols()) == (dh, dn);
    if !rep.expect("Shape", shaped, || "action or boundary does not fit the objects".into()) {
        return rep;
    }
    let top = check_lie_object(&x.top);
    let bot = check_lie_object(&x.bot);
    let objects_ok = !top.fails("Shape") && !bot.fails("Shape");
    rep.push_section(top);
    rep.push_section(bot);
    if !objects_ok {
        return rep;
    }
    let h_alg = &x.bot.bottom;
    let n_alg = &x.top.bottom;
    let (f, g) = (x.top.f(), x.bot.f());

    for a in 0..dh {
        for b in 0..dh {
            for i in 0..dm {
                let lhs = x.act1.eval_left(h_alg.bracket_basis(a, b), i);
                let rhs = vec_sub(
                    &x.act1.eval_right(a, x.act1.get(b, i)),
                    &x.act1.eval_right(b, x.act1.get(a, i)),
                );
                rep.expect_eq("LeftModule", 0, &[a, b, i], &lhs, &rhs);
            }
        }
    }
    rep.push_section(check_lie_action(h_alg, n_alg, &x.act2));

    for a in 0..dh {
        for i in 0..dm {
            for j in 0..dn {
                // h ·₁ (m * n) = (h ·₁ m) * n + m * (h ·₂ n)
                let lhs = x.act1.eval_right(a, x.top.star.get(i, j));
                let rhs = vec_add(
                    &x.top.star.eval_left(x.act1.get(a, i), j),
                    &x.top.star.eval_right(i, x.act2.get(a, j)),
                );
                rep.expect_eq("Compat", 0, &[a, i, j], &lhs, &rhs);
            }
            let lhs = f.apply(x.act1.get(a, i));
            let rhs = x.act2.eval_right(a, &f.column(i));
            rep.expect_eq("FEquivariant", 0, &[a, i], &lhs, &rhs);
        }
    }

    for l in 0..dl {
        let gl = g.column(l);
        for j in 0..dn {
            let lhs = f.apply(x.xi.get(l, j));
            let rhs = x.act2.eval_left(&gl, j);
            rep.expect_eq("Xi", 1, &[l, j], &lhs, &rhs);
            for a in 0..dh {
                // ξ(l * h, n) = ξ(l, h ·₂ n) − h ·₁ ξ(l, n)
                let lhs = x.xi.eval_left(x.bot.star.get(l, a), j);
                let rhs = vec_sub(&x.xi.eval_right(l, x.act2.get(a, j)), &x.act1.eval_right(a, x.xi.get(l, j)));
                rep.expect_eq("Xi", 2, &[l, a, j], &lhs, &rhs);
            }
            for k in 0..dn {
                let lhs = x.xi.eval_right(l, n_alg.bracket_basis(j, k));
                let rhs = vec_sub(
                    &x.top.star.eval_left(x.xi.get(l, j), k),
                    &x.top.star.eval_left(x.xi.get(l, k), j),
                );
                rep.expect_eq("Xi", 3, &[l, j, k], &lhs, &rhs);
            }
            // ∂₁ ξ(l, n) = l * ∂₂(n)
            let lhs = x.d1.apply(x.xi.get(l, j));
            let rhs = x.bot.star.eval_right(l, &x.d2.column(j));
            rep.expect_eq("XiBoundary", 0, &[l, j], &lhs, &rhs);
        }
    }

    rep.push_section(check_lie_morphism(&x.boundary(), &x.top, &x.bot));
    rep.push_section(check_lie_xmod(n_alg, h_alg, &x.act2, &x.d2));

    for i in 0..dm {
        let d1m = x.d1.column(i);
        for a in 0..dh {
            // ∂₁(h ·₁ m) = −∂₁(m) * h
            let lhs = x.d1.apply(x.act1.get(a, i));
            let rhs = vec_neg(&x.bot.star.eval_left(&d1m, a));
            rep.expect_eq("D1Equivariant", 0, &[a, i], &lhs, &rhs);
        }
        for j in 0..dn {
            let mn = x.top.star.get(i, j);
            rep.expect_eq("XiPeiffer", 1, &[i, j], &x.xi.eval_left(&d1m, j), mn);
            let rhs = vec_neg(&x.act1.eval_left(&x.d2.column(j), i));
            rep.expect_eq("XiPeiffer", 2, &[i, j], mn, &rhs);
        }
    }
    rep
}

fn xphi_over(z: &CrossedModule, ideal: &Subspace) -> Result<(XLieLM, Quotient, Quotient)> {
    let (m, n) = (z.m(), z.n());
    let a = &z.action;
    let qm = quotient_algebra(m, ideal)?;
    let qn = lieization(n)?;
    let (tm, tn) = (trivial(m.dim()), trivial(n.dim()));
    let x = XLieLM {
        top: over_quotient(m, &qm)?,
        bot: over_quotient(n, &qn)?,
        act1: a.act2.flip().neg().induce(&qn.pres, &tm, &tm)?,
        act2: a.act1.induce(&qn.pres, &qm.pres, &qm.pres)?,
        xi: a.act1.induce(&tn, &qm.pres, &tm)?,
        d1: z.bdry.clone(),
        d2: induce_linear(&z.bdry, &qm.pres, &qn.pres)?,
    };
    Ok((x, qm, qn))
}

/// `XΦ(z) = (π_M: M → M/[M,N]_x, π_N: N → Lie(N), (·̄₁, ·̄₂, ξ), ∂̄)`.
pub fn xphi(z: &CrossedModule) -> Result<XLieLM> {
    gate(check_xmod(z), Error::InvalidXMod)?;
    Ok(xphi_over(z, &xmod_lie_ideal(&z.action))?.0)
}

fn xpsi_unchecked(x: &XLieLM) -> Result<CrossedModule> {
    let (dm, _, dl, _) = x.dims();
    let (f, g) = (x.top.f(), x.bot.f());
    let m = psi_unchecked(&x.top)?;
    let l = psi_unchecked(&x.bot)?;
    let act1 = BilinearMap::from_fn(dl, dm, dm, |i, j| x.xi.eval_right(i, &f.column(j)));
    let act2 = BilinearMap::from_fn(dm, dl, dm, |i, j| vec_neg(&x.act1.eval_left(&g.column(j), i)));
    CrossedModule::new(LeibnizAction::new(l, m, act1, act2)?, x.d1.clone())
}

/// `XΨ(x) = (M, L, (l ·̃₁ m = ξ(l, f m), m ·̃₂ l = −g(l) ·₁ m), ∂₁)`.
pub fn xpsi(x: &XLieLM) -> Result<CrossedModule> {
    gate(check_xlielm(x), Error::InvalidXLieLM)?;
    xpsi_unchecked(x)
}

/// `T = ({−,−}_{LH}, {−,−}_{HL}, {−,−}₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LMBraidingTriple {
    /// `L × H → M`
    pub lh: BilinearMap,
    /// `H × L → M`
    pub hl: BilinearMap,
    /// `H × H → N`
    pub b2: BilinearMap,
}

impl LMBraidingTriple {
    pub fn zero(x: &XLieLM) -> Self {
        let (dm, dn, dl, dh) = x.dims();
        LMBraidingTriple {
            lh: BilinearMap::zeros(dl, dh, dm),
            hl: BilinearMap::zeros(dh, dl, dm),
            b2: BilinearMap::zeros(dh, dh, dn),
        }
    }
}

pub fn check_triple(x: &XLieLM, t: &LMBraidingTriple) -> Report {
    let (dm, dn, dl, dh) = x.dims();
    let mut rep = Report::new(format!("braiding triple({} -> {})", x.top.name, x.bot.name));
    let shaped = t.lh.dims() == (dl, dh, dm) && t.hl.dims() == (dh, dl, dm) && t.b2.dims() == (dh, dh, dn);
    if !rep.expect("Shape", shaped, || "triple does not fit the crossed module".into()) {
        return rep;
    }
    let base = check_xlielm(x);
    let base_ok = !base.fails("Shape");
    rep.push_section(base);
    if !base_ok {
        return rep;
    }
    rep.push_section(check_braiding_lie(&LieBraidedXMod {
        m: x.top.bottom.clone(),
        n: x.bot.bottom.clone(),
        dot: x.act2.clone(),
        bdry: x.d2.clone(),
        curly: t.b2.clone(),
    }));
    let (f, g) = (x.top.f(), x.bot.f());
    let h_alg = &x.bot.bottom;
    let lstar = &x.bot.star;

    for l in 0..dl {
        let gl = g.column(l);
        for a in 0..dh {
            rep.expect_eq("TripleF", 1, &[l, a], &f.apply(t.lh.get(l, a)), &t.b2.eval_left(&gl, a));
            rep.expect_eq("TripleF", 2, &[a, l], &f.apply(t.hl.get(a, l)), &t.b2.eval_right(a, &gl));
            let lh_ = lstar.get(l, a);
            rep.expect_eq("TripleD", 1, &[l, a], &x.d1.apply(t.lh.get(l, a)), lh_);
            rep.expect_eq("TripleD", 2, &[a, l], &x.d1.apply(t.hl.get(a, l)), &vec_neg(lh_));
        }
        for j in 0..dn {
            let d2n = x.d2.column(j);
            rep.expect_eq("TripleXi", 1, &[l, j], &t.lh.eval_right(l, &d2n), x.xi.get(l, j));
            rep.expect_eq("TripleXi", 2, &[j, l], &t.hl.eval_left(&d2n, l), &vec_neg(x.xi.get(l, j)));
        }
        for a in 0..dh {
            for b in 0..dh {
                let lhs_lh = t.lh.eval_right(l, h_alg.bracket_basis(a, b));
                let lhs_hl = t.hl.eval_left(h_alg.bracket_basis(a, b), l);
                let lh_a_b = t.lh.eval_left(lstar.get(l, a), b);
                let lh_b_a = t.lh.eval_left(lstar.get(l, b), a);
                let hl_a_lb = t.hl.eval_right(a, lstar.get(l, b));
                let hl_b_la = t.hl.eval_right(b, lstar.get(l, a));
                let ix = [l, a, b];
                rep.expect_eq("TripleBracket", 1, &ix, &lhs_lh, &vec_sub(&lh_a_b, &lh_b_a));
                rep.expect_eq("TripleBracket", 2, &ix, &lhs_hl, &vec_neg(&vec_add(&hl_a_lb, &lh_a_b)));
                rep.expect_eq("TripleBracket", 3, &ix, &lhs_lh, &vec_add(&lh_a_b, &hl_a_lb));
                rep.expect_eq("TripleBracket", 4, &ix, &lhs_hl, &vec_sub(&hl_b_la, &hl_a_lb));
            }
        }
    }
    for i in 0..dm {
        let d1m = x.d1.column(i);
        for j in 0..dn {
            let d2n = x.d2.column(j);
            let mn = x.top.star.get(i, j);
            rep.expect_eq("TriplePeiffer", 1, &[i, j], &t.lh.eval(&d1m, &d2n), mn);
            rep.expect_eq("TriplePeiffer", 2, &[j, i], &t.hl.eval(&d2n, &d1m), &vec_neg(mn));
        }
        for a in 0..dh {
            let hm = x.act1.get(a, i);
            rep.expect_eq("TripleAct", 1, &[i, a], &t.lh.eval_left(&d1m, a), &vec_neg(hm));
            rep.expect_eq("TripleAct", 2, &[a, i], &t.hl.eval_right(a, &d1m), hm);
        }
    }
    rep
}

/// `BXΦ(z)`: the crossed module over `M/{M,N}_x` and the triple
/// `{n, n̄'}_{LH} = {n, n'}`, `{n̄, n'}_{HL} = −⟨n', n⟩`, `{n̄, n̄'}₂ = \overline{{n, n'}}`.
pub fn bxphi(z: &BraidedXMod) -> Result<(XLieLM, LMBraidingTriple)> {
    gate(check_braiding_leibniz(z), Error::InvalidBraidedXMod)?;
    let (x, qm, qn) = xphi_over(&z.xmod, &braided_lie_ideal(z))?;
    let (tm, tn) = (trivial(z.m().dim()), trivial(z.n().dim()));
    let b = &z.braiding;
    let t = LMBraidingTriple {
        lh: b.curly.induce(&tn, &qn.pres, &tm)?,
        hl: b.angle.flip().neg().induce(&qn.pres, &tn, &tm)?,
        b2: b.curly.induce(&qn.pres, &qn.pres, &qm.pres)?,
    };
    Ok((x, t))
}

/// `BXΨ(x, T)` with `{l, l'} = {l, g l'}_{LH}` and `⟨l, l'⟩ = −{g l', l}_{HL}`.
pub fn bxpsi(x: &XLieLM, t: &LMBraidingTriple) -> Result<BraidedXMod> {
    gate(check_triple(x, t), Error::InvalidTriple)?;
    let xmod = xpsi_unchecked(x)?;
    let (dm, _, dl, _) = x.dims();
    let g = x.bot.f();
    let curly = BilinearMap::from_fn(dl, dl, dm, |i, j| t.lh.eval_right(i, &g.column(j)));
    let angle = BilinearMap::from_fn(dl, dl, dm, |i, j| vec_neg(&t.hl.eval_left(&g.column(j), i)));
    BraidedXMod::new(xmod, LeibnizBraiding { curly, angle })
}

/// A categorical Lie object of `𝓛𝓜_K` over `obj1 = (f₁: C₁ → D₁)` and
/// `obj0 = (f₀: C₀ → D₀)`. Composition is derived in both components as
/// `x − e(t x) + y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatLieObjectLM {
    pub obj1: LieObjectLM,
    pub obj0: LieObjectLM,
    pub s: LMMorphism,
    pub t: LMMorphism,
    pub e: LMMorphism,
}

impl CatLieObjectLM {
    /// `(D₁, D₀, s₂, t₂, e₂)`.
    pub fn bottom_cat(&self) -> CatAlgebra {
        CatAlgebra {
            c1: self.obj1.bottom.clone(),
            c0: self.obj0.bottom.clone(),
            s: self.s.bottom.clone(),
            t: self.t.bottom.clone(),
            e: self.e.bottom.clone(),
        }
    }

    fn k_top(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_add(&vec_sub(x, &self.e.top.apply(&self.t.top.apply(x))), y)
    }

    fn k_bottom(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_add(&vec_sub(x, &self.e.bottom.apply(&self.t.bottom.apply(x))), y)
    }
}

pub fn check_cat_lie_object(c: &CatLieObjectLM) -> Report {
    let mut rep = Report::new(format!("categorical lie object({})", c.obj1.name));
    let o1 = check_lie_object(&c.obj1);
    let o0 = check_lie_object(&c.obj0);
    let objects_ok = !o1.fails("Shape") && !o0.fails("Shape");
    rep.push_section(o1);
    rep.push_section(o0);
    if !objects_ok {
        return rep;
    }
    let ms = [
        check_lie_morphism(&c.s, &c.obj1, &c.obj0),
        check_lie_morphism(&c.t, &c.obj1, &c.obj0),
        check_lie_morphism(&c.e, &c.obj0, &c.obj1),
    ];
    let maps_ok = ms.iter().all(|r| r.all_violations().iter().all(|(_, v)| v.axiom != "Shape"));
    for r in ms {
        rep.push_section(r);
    }
    if !maps_ok {
        return rep;
    }
    let d0 = c.obj0.top_dim();
    for a in 0..d0 {
        let ea = c.e.top.column(a);
        let unit = unit_vec(d0, a);
        rep.expect_eq("Section", 1, &[a], &c.s.top.apply(&ea), &unit);
        rep.expect_eq("Section", 2, &[a], &c.t.top.apply(&ea), &unit);
    }
    let bottom = c.bottom_cat();
    rep.push_section(check_cat_structure(&bottom));
    rep.push_section(derive_k(&bottom).report);

    let d1 = c.obj1.top_dim();
    let e1 = c.obj1.bottom.dim();
    let top_pb = pullback_subspace(&c.t.top, &c.s.top);
    let bot_pb = pullback_subspace(&c.t.bottom, &c.s.bottom);
    for (q, w) in bot_pb.basis_vectors().iter().enumerate() {
        let (u, v) = (&w[..e1], &w[e1..]);
        let ring = vec_add(&vec_sub(u, &c.e.bottom.apply(&c.s.bottom.apply(v))), v);
        rep.expect_eq("KRing", 0, &[q], &ring, &c.k_bottom(u, v));
        let kuv = c.k_bottom(u, v);
        for (p, z) in top_pb.basis_vectors().iter().enumerate() {
            let (x, y) = (&z[..d1], &z[d1..]);
            // k₁((x, y) * (u, v)) = k₁(x, y) * k₂(u, v)
            let lhs = c.k_top(&c.obj1.star.eval(x, u), &c.obj1.star.eval(y, v));
            let rhs = c.obj1.star.eval(&c.k_top(x, y), &kuv);
            rep.expect_eq("KEquivariant", 0, &[p, q], &lhs, &rhs);
        }
    }
    rep
}

fn cat_over(c: &CatAlgebra, q1: &Quotient, q0: &Quotient) -> Result<CatLieObjectLM> {
    Ok(CatLieObjectLM {
        obj1: over_quotient(&c.c1, q1)?,
        obj0: over_quotient(&c.c0, q0)?,
        s: LMMorphism::new(c.s.clone(), induce_linear(&c.s, &q1.pres, &q0.pres)?),
        t: LMMorphism::new(c.t.clone(), induce_linear(&c.t, &q1.pres, &q0.pres)?),
        e: LMMorphism::new(c.e.clone(), induce_linear(&c.e, &q0.pres, &q1.pres)?),
    })
}

fn cat_precheck(c: &CatAlgebra) -> Report {
    let mut rep = Report::new(format!("categorical algebra({})", c.c1.name));
    let st = check_cat_structure(c);
    let ok = st.passed();
    rep.push_section(st);
    if ok {
        rep.push_section(derive_k(c).report);
    }
    rep
}

/// `IΦ(c) = (π: C₁ → Lie(C₁), π: C₀ → Lie(C₀), (s, Lie s), (t, Lie t), (e, Lie e))`.
pub fn iphi(c: &CatAlgebra) -> Result<CatLieObjectLM> {
    gate(cat_precheck(c), Error::InvalidCatAlgebra)?;
    cat_over(c, &lieization(&c.c1)?, &lieization(&c.c0)?)
}

fn ipsi_unchecked(c: &CatLieObjectLM) -> Result<CatAlgebra> {
    CatAlgebra::new(
        psi_unchecked(&c.obj1)?,
        psi_unchecked(&c.obj0)?,
        c.s.top.clone(),
        c.t.top.clone(),
        c.e.top.clone(),
    )
}

/// `IΨ(c) = (C₁, C₀, s₁, t₁, e₁)` with `[x, y] = x * f₁(y)`.
pub fn ipsi(c: &CatLieObjectLM) -> Result<CatAlgebra> {
    gate(check_cat_lie_object(c), Error::InvalidCatLieObjectLM)?;
    ipsi_unchecked(c)
}

/// `τ = (τ^{C₀,D₀}, τ^{D₀,C₀}, τ²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatLMBraiding {
    /// `C₀ × D₀ → C₁`
    pub tau_cd: BilinearMap,
    /// `D₀ × C₀ → C₁`
    pub tau_dc: BilinearMap,
    /// `D₀ × D₀ → D₁`
    pub tau2: BilinearMap,
}

impl CatLMBraiding {
    pub fn zero(c: &CatLieObjectLM) -> Self {
        let (c1, c0) = (c.obj1.top_dim(), c.obj0.top_dim());
        let (d1, d0) = (c.obj1.bottom.dim(), c.obj0.bottom.dim());
        CatLMBraiding {
            tau_cd: BilinearMap::zeros(c0, d0, c1),
            tau_dc: BilinearMap::zeros(d0, c0, c1),
            tau2: BilinearMap::zeros(d0, d0, d1),
        }
    }
}

pub fn check_cat_lm_braiding(c: &CatLieObjectLM, b: &CatLMBraiding) -> Report {
    let (c1, c0) = (c.obj1.top_dim(), c.obj0.top_dim());
    let (d1, d0) = (c.obj1.bottom.dim(), c.obj0.bottom.dim());
    let mut rep = Report::new(format!("categorical lm braiding({})", c.obj1.name));
    let shaped = b.tau_cd.dims() == (c0, d0, c1) && b.tau_dc.dims() == (d0, c0, c1) && b.tau2.dims() == (d0, d0, d1);
    if !rep.expect("Shape", shaped, || "braiding does not fit the categorical object".into()) {
        return rep;
    }
    let base = check_cat_lie_object(c);
    let base_ok = base.passed();
    rep.push_section(base);
    if !base_ok {
        return rep;
    }
    rep.push_section(check_cat_braiding_lie(&c.bottom_cat(), &b.tau2));
    let (f1, f0) = (c.obj1.f(), c.obj0.f());
    let star0 = &c.obj0.star;
    let star1 = &c.obj1.star;
    let (s, t) = (&c.s, &c.t);

    for a in 0..c0 {
        let fa = f0.column(a);
        for d in 0..d0 {
            rep.expect_eq("BraidF", 1, &[a, d], &f1.apply(b.tau_cd.get(a, d)), &b.tau2.eval_left(&fa, d));
            rep.expect_eq("BraidF", 2, &[d, a], &f1.apply(b.tau_dc.get(d, a)), &b.tau2.eval_right(d, &fa));
            let cd = star0.get(a, d);
            let ncd = vec_neg(cd);
            rep.expect_eq("BraidST", 1, &[a, d], &s.top.apply(b.tau_cd.get(a, d)), cd);
            rep.expect_eq("BraidST", 2, &[a, d], &t.top.apply(b.tau_cd.get(a, d)), &ncd);
            rep.expect_eq("BraidST", 3, &[d, a], &s.top.apply(b.tau_dc.get(d, a)), &ncd);
            rep.expect_eq("BraidST", 4, &[d, a], &t.top.apply(b.tau_dc.get(d, a)), cd);
            for d2 in 0..d0 {
                let bracket = c.obj0.bottom.bracket_basis(d, d2);
                let cd1 = star0.get(a, d);
                let cd2 = star0.get(a, d2);
                let lhs_cd = b.tau_cd.eval_right(a, bracket);
                let lhs_dc = b.tau_dc.eval_left(bracket, a);
                let cd_c_d1_d2 = b.tau_cd.eval_left(cd1, d2);
                let cd_c_d2_d1 = b.tau_cd.eval_left(cd2, d);
                let dc_d1_cd2 = b.tau_dc.eval_right(d, cd2);
                let dc_d2_cd1 = b.tau_dc.eval_right(d2, cd1);
                let ix = [a, d, d2];
                rep.expect_eq("BraidBracket", 1, &ix, &lhs_cd, &vec_sub(&cd_c_d1_d2, &cd_c_d2_d1));
                rep.expect_eq("BraidBracket", 2, &ix, &lhs_dc, &vec_neg(&vec_add(&dc_d1_cd2, &cd_c_d1_d2)));
                rep.expect_eq("BraidBracket", 3, &ix, &lhs_cd, &vec_add(&cd_c_d1_d2, &dc_d1_cd2));
                rep.expect_eq("BraidBracket", 4, &ix, &lhs_dc, &vec_sub(&dc_d2_cd1, &dc_d1_cd2));
            }
        }
    }

    let k = |x: &[Scalar], y: &[Scalar]| vec_add(&vec_sub(x, &c.e.top.apply(&t.top.apply(x))), y);
    for x in 0..c1 {
        let (sx, tx) = (s.top.column(x), t.top.column(x));
        for y in 0..d1 {
            let (sy, ty) = (s.bottom.column(y), t.bottom.column(y));
            let xy = star1.get(x, y);
            let nxy = vec_neg(xy);
            let lhs = k(xy, &b.tau_cd.eval(&tx, &ty));
            let rhs = k(&b.tau_cd.eval(&sx, &sy), &nxy);
            rep.expect_eq("BraidSquare", 1, &[x, y], &lhs, &rhs);
            let lhs = k(&nxy, &b.tau_dc.eval(&ty, &tx));
            let rhs = k(&b.tau_dc.eval(&sy, &sx), xy);
            rep.expect_eq("BraidSquare", 2, &[x, y], &lhs, &rhs);
        }
    }
    rep
}

/// `BIΦ(d)`: the categorical object over `C₁/[τ_{C₀,C₀}]` and `Lie(C₀)` with
/// `τ̄^{C₀,Lie}_{a,b̄} = τ_{a,b}`, `τ̄^{Lie,C₀}_{ā,b} = −ψ_{b,a}`, `τ̄²_{ā,b̄} = \overline{τ_{a,b}}`.
pub fn biphi(d: &BraidedCatAlgebra) -> Result<(CatLieObjectLM, CatLMBraiding)> {
    gate(d.check(), Error::InvalidBraidedCat)?;
    let (c, b) = (&d.cat, &d.braiding);
    let q1 = quotient_algebra(&c.c1, &cat_lie_ideal(c, b))?;
    let q0 = lieization(&c.c0)?;
    let cat = cat_over(c, &q1, &q0)?;
    let (t1, t0) = (trivial(c.c1.dim()), trivial(c.c0.dim()));
    let braiding = CatLMBraiding {
        tau_cd: b.tau.induce(&t0, &q0.pres, &t1)?,
        tau_dc: b.psi.flip().neg().induce(&q0.pres, &t0, &t1)?,
        tau2: b.tau.induce(&q0.pres, &q0.pres, &q1.pres)?,
    };
    Ok((cat, braiding))
}

/// `BIΨ(c, τ)` with `τ̄_{a,b} = τ^{C₀,D₀}_{a,f₀ b}` and `ψ̄_{a,b} = −τ^{D₀,C₀}_{f₀ b,a}`.
pub fn bipsi(c: &CatLieObjectLM, b: &CatLMBraiding) -> Result<BraidedCatAlgebra> {
    gate(check_cat_lm_braiding(c, b), Error::InvalidCatLMBraiding)?;
    let cat = ipsi_unchecked(c)?;
    let (c1, c0) = (c.obj1.top_dim(), c.obj0.top_dim());
    let f0 = c.obj0.f();
    let tau = BilinearMap::from_fn(c0, c0, c1, |i, j| b.tau_cd.eval_right(i, &f0.column(j)));
    let psi = BilinearMap::from_fn(c0, c0, c1, |i, j| vec_neg(&b.tau_dc.eval_left(&f0.column(j), i)));
    BraidedCatAlgebra::new(cat, CatBraiding { tau, psi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braiding_embed_lie, braiding_generators, identity_bxmod};
    use crate::equiv::functor_c;
    use crate::fixtures::{a1, l2, r2, sl2};
    use crate::intcat::cat_braiding_generators;
    use crate::xmod::{lie_xmod_embed, mixed_generators};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn tensor_dimensions_and_braiding() {
        let z = LMObject::zero(0, 0);
        let t = lm_tensor(&z, &z);
        assert_eq!((t.obj.top_dim(), t.obj.bottom_dim()), (0, 0));

        let a = LMObject::zero(1, 0);
        let b = LMObject::zero(0, 1);
        let t = lm_tensor(&a, &b);
        assert_eq!((t.obj.top_dim(), t.obj.bottom_dim()), (1, 0));

        let a = LMObject::new(Matrix::from_i64(&[&[1, 2], &[0, 1], &[3, 0]]));
        let b = LMObject::new(Matrix::from_i64(&[&[1, -1]]));
        let ab = lm_tensor(&a, &b);
        let ba = lm_tensor(&b, &a);
        assert_eq!(ab.obj.top_dim(), 2 * 1 + 3 * 2);
        assert!(check_lm_morphism(&ab.braid, &ab.obj, &ba.obj).passed());
        assert!(check_lm_morphism(&ba.braid, &ba.obj, &ab.obj).passed());
        let round = ba.braid.compose(&ab.braid);
        assert!(round.top.is_identity() && round.bottom.is_identity());
    }

    #[test]
    fn phi_psi() {
        let o = phi(&l2()).unwrap();
        assert!(check_lie_object(&o).passed());
        assert_eq!(o.bottom.dim(), 1);
        // star(e1, ē1) = [e1, e1] = e0
        assert_eq!(o.star.get(1, 0), &[s(1), s(0)]);
        assert!(phi(&r2()).unwrap().f().is_identity());
        for a in [a1(), l2(), r2(), sl2()] {
            assert_eq!(psi(&phi(&a).unwrap()).unwrap(), a);
        }
        let zero = LieObjectLM {
            name: "z".into(),
            obj: LMObject::new(Matrix::identity(2)),
            bottom: Algebra::abelian("A2", 2),
            star: BilinearMap::zeros(2, 2, 2),
        };
        assert!(psi(&zero).unwrap().is_abelian());
    }

    #[test]
    fn xphi_xpsi() {
        let z = CrossedModule::identity(&l2());
        let x = xphi(&z).unwrap();
        let rep = check_xlielm(&x);
        assert!(rep.passed(), "{rep}");
        assert_eq!(xpsi(&x).unwrap(), z);

        let r = r2();
        let lie = lie_xmod_embed(&r, &r, r.sc(), &Matrix::identity(2)).unwrap();
        assert!(mixed_generators(&lie.action).iter().all(|v| v.iter().all(Scalar::is_zero)));
        let x = xphi(&lie).unwrap();
        assert_eq!(x.top.bottom.dim(), 2);
        assert_eq!(xpsi(&x).unwrap(), lie);

        let t = CrossedModule::trivial(&a1(), &a1());
        let x = xphi(&t).unwrap();
        assert!(x.act1.is_zero() && x.xi.is_zero() && x.d1.is_zero());
        assert_eq!(xpsi(&x).unwrap(), t);
    }

    #[test]
    fn bxphi_bxpsi() {
        let z = identity_bxmod(&l2()).unwrap();
        let (x, t) = bxphi(&z).unwrap();
        let rep = check_triple(&x, &t);
        assert!(rep.passed(), "{rep}");
        assert_eq!(bxpsi(&x, &t).unwrap(), z);

        let e = braiding_embed_lie(&LieBraidedXMod::identity(&r2())).unwrap();
        assert!(braiding_generators(&e.braiding).iter().all(|v| v.iter().all(Scalar::is_zero)));
        let (x, t) = bxphi(&e).unwrap();
        assert!(check_triple(&x, &t).passed());
        assert_eq!(bxpsi(&x, &t).unwrap(), e);

        let triv = BraidedXMod::trivial(&a1(), &a1());
        let (x, t) = bxphi(&triv).unwrap();
        assert_eq!(t, LMBraidingTriple::zero(&x));
        assert_eq!(bxpsi(&x, &t).unwrap(), triv);
    }

    #[test]
    fn triple_rejects_bad_lh() {
        let (x, mut t) = bxphi(&identity_bxmod(&l2()).unwrap()).unwrap();
        t.lh = BilinearMap::zeros(t.lh.left_dim(), t.lh.right_dim(), t.lh.out_dim());
        let rep = check_triple(&x, &t);
        assert!(!rep.passed());
        assert!(matches!(bxpsi(&x, &t), Err(Error::InvalidTriple(_))));
    }

    #[test]
    fn iphi_ipsi() {
        let c = CatAlgebra::discrete(&l2());
        let o = iphi(&c).unwrap();
        let rep = check_cat_lie_object(&o);
        assert!(rep.passed(), "{rep}");
        assert_eq!(o.bottom_cat(), CatAlgebra::discrete(&phi(&l2()).unwrap().bottom));
        assert_eq!(ipsi(&o).unwrap(), c);

        let o = iphi(&CatAlgebra::discrete(&r2())).unwrap();
        assert_eq!(o.bottom_cat(), CatAlgebra::discrete(&r2()));

        let d = functor_c(&identity_bxmod(&l2()).unwrap()).unwrap();
        let o = iphi(&d.cat).unwrap();
        assert!(check_cat_lie_object(&o).passed());
        assert_eq!(ipsi(&o).unwrap(), d.cat);
    }

    #[test]
    fn biphi_bipsi() {
        let d = functor_c(&identity_bxmod(&l2()).unwrap()).unwrap();
        let (c, b) = biphi(&d).unwrap();
        let rep = check_cat_lm_braiding(&c, &b);
        assert!(rep.passed(), "{rep}");
        assert_eq!(bipsi(&c, &b).unwrap(), d);

        let e = braiding_embed_lie(&LieBraidedXMod::identity(&r2())).unwrap();
        let d = functor_c(&e).unwrap();
        assert!(cat_braiding_generators(&d.braiding).iter().all(|v| v.iter().all(Scalar::is_zero)));
        let (c, b) = biphi(&d).unwrap();
        assert!(check_cat_lm_braiding(&c, &b).passed());
        assert_eq!(bipsi(&c, &b).unwrap(), d);

        let a = Algebra::abelian("A1", 1);
        let d = BraidedCatAlgebra::new(CatAlgebra::discrete(&a), CatBraiding::zero(1, 1)).unwrap();
        let (c, b) = biphi(&d).unwrap();
        assert_eq!(b, CatLMBraiding::zero(&c));
        assert_eq!(bipsi(&c, &b).unwrap(), d);
    }
}
