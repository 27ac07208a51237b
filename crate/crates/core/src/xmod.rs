//! Leibniz actions, crossed modules, semidirect products and the Lie
//! embedding `m ·⁻ n = −n · m`.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_hom, check_leibniz, check_lie, induce_linear, lieization, quotient_algebra, square_generators, Algebra,
    BilinearMap,
};
use crate::error::{gate, Error, Result};
use crate::exactla::{unit_vec, vec_add, vec_sub, zero_vec, Matrix, Scalar, Subspace, Vector};
use crate::report::Report;

/// An action of `N` on `M`: `act1: N × M → M` and `act2: M × N → M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizAction {
    pub n: Algebra,
    pub m: Algebra,
    pub act1: BilinearMap,
    pub act2: BilinearMap,
}

impl LeibnizAction {
    pub fn new(n: Algebra, m: Algebra, act1: BilinearMap, act2: BilinearMap) -> Result<Self> {
        let (dn, dm) = (n.dim(), m.dim());
        if act1.dims() != (dn, dm, dm) {
            return Err(Error::Shape(format!("act1 is {:?}, expected ({dn}, {dm}, {dm})", act1.dims())));
        }
        if act2.dims() != (dm, dn, dm) {
            return Err(Error::Shape(format!("act2 is {:?}, expected ({dm}, {dn}, {dm})", act2.dims())));
        }
        Ok(LeibnizAction { n, m, act1, act2 })
    }

    /// `([−,−], [−,−])`: `A` acting on itself.
    pub fn adjoint(a: &Algebra) -> Self {
        LeibnizAction { n: a.clone(), m: a.clone(), act1: a.sc().clone(), act2: a.sc().clone() }
    }

    pub fn zero(n: &Algebra, m: &Algebra) -> Self {
        let (dn, dm) = (n.dim(), m.dim());
        LeibnizAction {
            n: n.clone(),
            m: m.clone(),
            act1: BilinearMap::zeros(dn, dm, dm),
            act2: BilinearMap::zeros(dm, dn, dm),
        }
    }

    /// `n ·₁ m`
    pub fn dot1(&self, n: &[Scalar], m: &[Scalar]) -> Vector {
        self.act1.eval(n, m)
    }

    /// `m ·₂ n`
    pub fn dot2(&self, m: &[Scalar], n: &[Scalar]) -> Vector {
        self.act2.eval(m, n)
    }

    /// The operators `e_a ·₁ −` and `− ·₂ e_a` on `M`, for every basis `e_a` of `N`.
    pub fn action_ops(&self) -> Vec<Matrix> {
        let dn = self.n.dim();
        (0..dn)
            .flat_map(|a| {
                let e = unit_vec(dn, a);
                [self.act1.left_op(&e), self.act2.right_op(&e)]
            })
            .collect()
    }

    /// Whether `act2(m, n) = −act1(n, m)` coordinatewise.
    pub fn is_lie_shaped(&self) -> bool {
        self.act2 == self.act1.flip().neg()
    }
}

/// Evaluates the six action axioms on every basis tuple.
pub fn check_action(a: &LeibnizAction) -> Report {
    let mut rep = Report::new(format!("action({} on {})", a.n.name, a.m.name));
    rep.push_section(check_leibniz(&a.m));
    rep.push_section(check_leibniz(&a.n));
    let (dm, dn) = (a.m.dim(), a.n.dim());
    let (bm, bn) = (a.m.sc(), a.n.sc());
    let (d1, d2) = (&a.act1, &a.act2);

    // two elements of M, one of N
    for n in 0..dn {
        for m in 0..dm {
            for m2 in 0..dm {
                // n·₁[m,m'] = [n·₁m,m'] − [n·₁m',m]
                let lhs = d1.eval_right(n, bm.get(m, m2));
                let rhs = vec_sub(&bm.eval_left(d1.get(n, m), m2), &bm.eval_left(d1.get(n, m2), m));
                rep.expect_eq("ALeib1", 0, &[n, m, m2], &lhs, &rhs);

                // [m,n·₁m'] = [m·₂n,m'] − [m,m']·₂n
                let lhs = bm.eval_right(m, d1.get(n, m2));
                let rhs = vec_sub(&bm.eval_left(d2.get(m, n), m2), &d2.eval_left(bm.get(m, m2), n));
                rep.expect_eq("ALeib2", 0, &[m, n, m2], &lhs, &rhs);

                // [m,m'·₂n] = [m,m']·₂n − [m·₂n,m']
                let lhs = bm.eval_right(m, d2.get(m2, n));
                let rhs = vec_sub(&d2.eval_left(bm.get(m, m2), n), &bm.eval_left(d2.get(m, n), m2));
                rep.expect_eq("ALeib3", 0, &[m, m2, n], &lhs, &rhs);
            }
        }
    }

    // one element of M, two of N
    for m in 0..dm {
        for n in 0..dn {
            for n2 in 0..dn {
                // m·₂[n,n'] = (m·₂n)·₂n' − (m·₂n')·₂n
                let lhs = d2.eval_right(m, bn.get(n, n2));
                let rhs = vec_sub(&d2.eval_left(d2.get(m, n), n2), &d2.eval_left(d2.get(m, n2), n));
                rep.expect_eq("ALeib4", 0, &[m, n, n2], &lhs, &rhs);

                // n·₁(m·₂n') = (n·₁m)·₂n' − [n,n']·₁m
                let lhs = d1.eval_right(n, d2.get(m, n2));
                let rhs = vec_sub(&d2.eval_left(d1.get(n, m), n2), &d1.eval_left(bn.get(n, n2), m));
                rep.expect_eq("ALeib5", 0, &[n, m, n2], &lhs, &rhs);

                // n·₁(n'·₁m) = [n,n']·₁m − (n·₁m)·₂n'
                let lhs = d1.eval_right(n, d1.get(n2, m));
                let rhs = vec_sub(&d1.eval_left(bn.get(n, n2), m), &d2.eval_left(d1.get(n, m), n2));
                rep.expect_eq("ALeib6", 0, &[n, n2, m], &lhs, &rhs);
            }
        }
    }
    rep
}

/// `(M, N, (·₁, ·₂), ∂)` with `bdry` of shape `dim N × dim M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModule {
    pub action: LeibnizAction,
    pub bdry: Matrix,
}

impl CrossedModule {
    pub fn new(action: LeibnizAction, bdry: Matrix) -> Result<Self> {
        if bdry.rows() != action.n.dim() || bdry.cols() != action.m.dim() {
            return Err(Error::Shape(format!(
                "boundary is {}x{}, expected {}x{}",
                bdry.rows(),
                bdry.cols(),
                action.n.dim(),
                action.m.dim()
            )));
        }
        Ok(CrossedModule { action, bdry })
    }

    /// `(A, A, ([−,−], [−,−]), Id)`.
    pub fn identity(a: &Algebra) -> Self {
        CrossedModule { action: LeibnizAction::adjoint(a), bdry: Matrix::identity(a.dim()) }
    }

    /// Zero action and zero boundary.
    pub fn trivial(m: &Algebra, n: &Algebra) -> Self {
        CrossedModule { action: LeibnizAction::zero(n, m), bdry: Matrix::zeros(n.dim(), m.dim()) }
    }

    pub fn m(&self) -> &Algebra {
        &self.action.m
    }

    pub fn n(&self) -> &Algebra {
        &self.action.n
    }
}

pub fn check_xmod(x: &CrossedModule) -> Report {
    let a = &x.action;
    let mut rep = Report::new(format!("xmod({} -> {})", a.m.name, a.n.name));
    rep.push_section(check_action(a));
    rep.push_section(check_hom(&x.bdry, &a.m, &a.n));
    let (dm, dn) = (a.m.dim(), a.n.dim());
    let d = &x.bdry;
    let dcols: Vec<Vector> = (0..dm).map(|i| d.column(i)).collect();

    for n in 0..dn {
        for m in 0..dm {
            let lhs = d.apply(a.act1.get(n, m));
            let rhs = a.n.sc().eval_right(n, &dcols[m]);
            rep.expect_eq("Equivariance", 1, &[n, m], &lhs, &rhs);

            let lhs = d.apply(a.act2.get(m, n));
            let rhs = a.n.sc().eval_left(&dcols[m], n);
            rep.expect_eq("Equivariance", 2, &[m, n], &lhs, &rhs);
        }
    }
    for m in 0..dm {
        for m2 in 0..dm {
            let br = a.m.bracket_basis(m, m2);
            rep.expect_eq("Peiffer", 1, &[m, m2], &a.act1.eval_left(&dcols[m], m2), br);
            rep.expect_eq("Peiffer", 2, &[m, m2], &a.act2.eval_right(m, &dcols[m2]), br);
        }
    }
    rep
}

/// `M ⋊ N` with its two inclusions; `M` coordinates come first.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub algebra: Algebra,
    pub incl_m: Matrix,
    pub incl_n: Matrix,
}

/// `[(m,n),(m',n')] = ([m,m'] + n·₁m' + m·₂n', [n,n'])`.
pub fn semidirect(a: &LeibnizAction) -> Result<Semidirect> {
    gate(check_action(a), Error::ActionInvalid)?;
    let (dm, dn) = (a.m.dim(), a.n.dim());
    let d = dm + dn;
    let sc = BilinearMap::from_fn(d, d, d, |p, q| {
        let mut v = zero_vec(d);
        match (p < dm, q < dm) {
            (true, true) => v[..dm].clone_from_slice(a.m.bracket_basis(p, q)),
            (true, false) => v[..dm].clone_from_slice(a.act2.get(p, q - dm)),
            (false, true) => v[..dm].clone_from_slice(a.act1.get(p - dm, q)),
            (false, false) => v[dm..].clone_from_slice(a.n.bracket_basis(p - dm, q - dm)),
        }
        v
    });
    let algebra = Algebra::new(format!("{}x|{}", a.m.name, a.n.name), sc)?;
    let incl_m = Matrix::identity(dm).vstack(&Matrix::zeros(dn, dm));
    let incl_n = Matrix::zeros(dm, dn).vstack(&Matrix::identity(dn));
    Ok(Semidirect { algebra, incl_m, incl_n })
}

/// `n·[m,m'] = [n·m,m'] + [m,n·m']` and `[n,n']·m = n·(n'·m) − n'·(n·m)`,
/// with `M`, `N` required to be Lie.
pub fn check_lie_action(n: &Algebra, m: &Algebra, dot: &BilinearMap) -> Report {
    let mut rep = Report::new(format!("lie action({} on {})", n.name, m.name));
    rep.push_section(check_lie(m));
    rep.push_section(check_lie(n));
    let (dn, dm) = (n.dim(), m.dim());
    if !rep.expect("Shape", dot.dims() == (dn, dm, dm), || format!("action of shape {:?}", dot.dims())) {
        return rep;
    }
    for a in 0..dn {
        for i in 0..dm {
            for j in 0..dm {
                let lhs = dot.eval_right(a, m.bracket_basis(i, j));
                let rhs = vec_add(&m.sc().eval_left(dot.get(a, i), j), &m.sc().eval_right(i, dot.get(a, j)));
                rep.expect_eq("LieAct", 1, &[a, i, j], &lhs, &rhs);
            }
        }
    }
    for a in 0..dn {
        for b in 0..dn {
            for i in 0..dm {
                let lhs = dot.eval_left(n.bracket_basis(a, b), i);
                let rhs = vec_sub(&dot.eval_right(a, dot.get(b, i)), &dot.eval_right(b, dot.get(a, i)));
                rep.expect_eq("LieAct", 2, &[a, b, i], &lhs, &rhs);
            }
        }
    }
    rep
}

/// `(·, ·⁻)` with `m ·⁻ n = −n · m`.
pub fn lie_action_embed(n: &Algebra, m: &Algebra, dot: &BilinearMap) -> Result<LeibnizAction> {
    gate(check_lie_action(n, m, dot), Error::NotLieAction)?;
    LeibnizAction::new(n.clone(), m.clone(), dot.clone(), dot.flip().neg())
}

/// Crossed module of Lie algebras: `∂(n·m) = [n,∂m]` and `∂(m)·m' = [m,m']`.
pub fn check_lie_xmod(m: &Algebra, n: &Algebra, dot: &BilinearMap, bdry: &Matrix) -> Report {
    let mut rep = Report::new(format!("lie xmod({} -> {})", m.name, n.name));
    let act = check_lie_action(n, m, dot);
    let shaped = !act.fails("Shape");
    rep.push_section(act);
    let hom = check_hom(bdry, m, n);
    let shaped = shaped && !hom.fails("Shape");
    rep.push_section(hom);
    if !shaped {
        return rep;
    }
    let (dm, dn) = (m.dim(), n.dim());
    let dcols: Vec<Vector> = (0..dm).map(|i| bdry.column(i)).collect();
    for a in 0..dn {
        for i in 0..dm {
            let lhs = bdry.apply(dot.get(a, i));
            let rhs = n.sc().eval_right(a, &dcols[i]);
            rep.expect_eq("LieXMod", 1, &[a, i], &lhs, &rhs);
        }
    }
    for i in 0..dm {
        for j in 0..dm {
            let lhs = dot.eval_left(&dcols[i], j);
            rep.expect_eq("LieXMod", 2, &[i, j], &lhs, m.bracket_basis(i, j));
        }
    }
    rep
}

pub fn lie_xmod_embed(m: &Algebra, n: &Algebra, dot: &BilinearMap, bdry: &Matrix) -> Result<CrossedModule> {
    gate(check_lie_xmod(m, n, dot, bdry), Error::NotLieXMod)?;
    let action = LeibnizAction::new(n.clone(), m.clone(), dot.clone(), dot.flip().neg())?;
    CrossedModule::new(action, bdry.clone())
}

/// `f₁(n·₁m) = f₂(n)*₁f₁(m)`, `f₁(m·₂n) = f₁(m)*₂f₂(n)`, `∂'f₁ = f₂∂`.
pub fn check_xmod_hom(f1: &Matrix, f2: &Matrix, src: &CrossedModule, dst: &CrossedModule) -> Report {
    let mut rep = Report::new(format!("xmod hom({} -> {})", src.m().name, dst.m().name));
    let h1 = check_hom(f1, src.m(), dst.m());
    let h2 = check_hom(f2, src.n(), dst.n());
    let shaped = !h1.fails("Shape") && !h2.fails("Shape");
    rep.push_section(h1);
    rep.push_section(h2);
    if !shaped {
        return rep;
    }
    let (dm, dn) = (src.m().dim(), src.n().dim());
    let f1c: Vec<Vector> = (0..dm).map(|i| f1.column(i)).collect();
    let f2c: Vec<Vector> = (0..dn).map(|i| f2.column(i)).collect();
    for a in 0..dn {
        for i in 0..dm {
            let lhs = f1.apply(src.action.act1.get(a, i));
            rep.expect_eq("XModHom", 1, &[a, i], &lhs, &dst.action.dot1(&f2c[a], &f1c[i]));
            let lhs = f1.apply(src.action.act2.get(i, a));
            rep.expect_eq("XModHom", 2, &[i, a], &lhs, &dst.action.dot2(&f1c[i], &f2c[a]));
        }
    }
    for i in 0..dm {
        let lhs = dst.bdry.apply(&f1c[i]);
        let rhs = f2.apply(&src.bdry.column(i));
        rep.expect_eq("XModHom", 3, &[i], &lhs, &rhs);
    }
    rep
}

/// `n·₁m + m·₂n` on basis pairs.
pub fn mixed_generators(a: &LeibnizAction) -> Vec<Vector> {
    let mut out = Vec::new();
    for n in 0..a.n.dim() {
        for m in 0..a.m.dim() {
            out.push(vec_add(a.act1.get(n, m), a.act2.get(m, n)));
        }
    }
    out
}

/// Smallest subspace of `M` containing `seed` and stable under both
/// multiplications of `M` and both actions of `N`.
pub fn action_ideal_closure(a: &LeibnizAction, seed: &Subspace) -> Subspace {
    let mut ops = a.m.multiplication_ops();
    ops.extend(a.action_ops());
    seed.close_under(&ops)
}

/// `[M,N]_x`: generated by the squares of `M` and `n·₁m + m·₂n`.
pub fn xmod_lie_ideal(a: &LeibnizAction) -> Subspace {
    let mut gens = square_generators(&a.m);
    gens.extend(mixed_generators(a));
    action_ideal_closure(a, &Subspace::span(a.m.dim(), &gens))
}

/// `(M/[M,N]_x, Lie(N), ·̄, ∂̄)` with its projections.
#[derive(Clone, Debug)]
pub struct LieizedXMod {
    pub m: Algebra,
    pub n: Algebra,
    pub dot: BilinearMap,
    pub bdry: Matrix,
    pub proj_m: Matrix,
    pub proj_n: Matrix,
    pub ideal_m: Subspace,
}

pub fn lieize_xmod(z: &CrossedModule) -> Result<LieizedXMod> {
    let ideal_m = xmod_lie_ideal(&z.action);
    let qm = quotient_algebra(z.m(), &ideal_m)?;
    let qn = lieization(z.n())?;
    let dot = z.action.act1.induce(&qn.pres, &qm.pres, &qm.pres)?;
    let bdry = induce_linear(&z.bdry, &qm.pres, &qn.pres)?;
    Ok(LieizedXMod {
        m: qm.algebra.clone().with_name(format!("{}/[M,N]", z.m().name)),
        n: qn.algebra.clone(),
        dot,
        bdry,
        proj_m: qm.pres.proj().clone(),
        proj_n: qn.pres.proj().clone(),
        ideal_m,
    })
}
