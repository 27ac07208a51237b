//! Braidings (Peiffer liftings) on crossed modules, Leibniz and Lie.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_antisymmetry, check_leibniz, induce_linear, lieization, quotient_algebra, square_generators, Algebra,
    BilinearMap,
};
use crate::error::{gate, Error, Result};
use crate::exactla::{vec_add, vec_neg, vec_sub, Matrix, Subspace, Vector};
use crate::report::Report;
use crate::xmod::{
    action_ideal_closure, check_lie_xmod, check_xmod, check_xmod_hom, mixed_generators, CrossedModule, LeibnizAction,
};

/// `({−,−}, ⟨−,−⟩)`, both `N × N → M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizBraiding {
    pub curly: BilinearMap,
    pub angle: BilinearMap,
}

impl LeibnizBraiding {
    pub fn zero(dn: usize, dm: usize) -> Self {
        LeibnizBraiding { curly: BilinearMap::zeros(dn, dn, dm), angle: BilinearMap::zeros(dn, dn, dm) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedXMod {
    pub xmod: CrossedModule,
    pub braiding: LeibnizBraiding,
}

impl BraidedXMod {
    pub fn new(xmod: CrossedModule, braiding: LeibnizBraiding) -> Result<Self> {
        let (dn, dm) = (xmod.n().dim(), xmod.m().dim());
        for (name, b) in [("curly", &braiding.curly), ("angle", &braiding.angle)] {
            if b.dims() != (dn, dn, dm) {
                return Err(Error::Shape(format!("{name} braiding is {:?}, expected ({dn}, {dn}, {dm})", b.dims())));
            }
        }
        Ok(BraidedXMod { xmod, braiding })
    }

    pub fn m(&self) -> &Algebra {
        self.xmod.m()
    }

    pub fn n(&self) -> &Algebra {
        self.xmod.n()
    }

    pub fn trivial(m: &Algebra, n: &Algebra) -> Self {
        BraidedXMod { xmod: CrossedModule::trivial(m, n), braiding: LeibnizBraiding::zero(n.dim(), m.dim()) }
    }
}

/// `(A, A, ([−,−], [−,−]), Id, ([−,−], [−,−]))`.
pub fn identity_bxmod(a: &Algebra) -> Result<BraidedXMod> {
    gate(check_leibniz(a), Error::NotLeibniz)?;
    Ok(BraidedXMod {
        xmod: CrossedModule::identity(a),
        braiding: LeibnizBraiding { curly: a.sc().clone(), angle: a.sc().clone() },
    })
}

pub fn check_braiding_leibniz(b: &BraidedXMod) -> Report {
    let x = &b.xmod;
    let mut rep = Report::new(format!("braiding({} -> {})", x.m().name, x.n().name));
    rep.push_section(check_xmod(x));
    let (c, a) = (&b.braiding.curly, &b.braiding.angle);
    let (m, n, d) = (x.m(), x.n(), &x.bdry);
    let (dm, dn) = (m.dim(), n.dim());
    let dcols: Vec<Vector> = (0..dm).map(|i| d.column(i)).collect();

    for i in 0..dn {
        for j in 0..dn {
            let br = n.bracket_basis(i, j);
            rep.expect_eq("BLeib1", 1, &[i, j], &d.apply(c.get(i, j)), br);
            rep.expect_eq("BLeib1", 2, &[i, j], &d.apply(a.get(i, j)), br);
        }
    }
    for i in 0..dm {
        for j in 0..dm {
            let br = m.bracket_basis(i, j);
            rep.expect_eq("BLeib2", 1, &[i, j], &c.eval(&dcols[i], &dcols[j]), br);
            rep.expect_eq("BLeib2", 2, &[i, j], &a.eval(&dcols[i], &dcols[j]), br);
        }
    }
    for i in 0..dm {
        for k in 0..dn {
            let act2 = x.action.act2.get(i, k);
            rep.expect_eq("BLeib3", 1, &[i, k], &c.eval_left(&dcols[i], k), act2);
            rep.expect_eq("BLeib3", 2, &[i, k], &a.eval_left(&dcols[i], k), act2);
            let act1 = x.action.act1.get(k, i);
            rep.expect_eq("BLeib4", 1, &[k, i], &c.eval_right(k, &dcols[i]), act1);
            rep.expect_eq("BLeib4", 2, &[k, i], &a.eval_right(k, &dcols[i]), act1);
        }
    }
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dn {
                let c_n_br = c.eval_right(i, n.bracket_basis(j, k));
                let a_n_br = a.eval_right(i, n.bracket_basis(j, k));
                let c_ij_k = c.eval_left(n.bracket_basis(i, j), k);
                let a_ij_k = a.eval_left(n.bracket_basis(i, j), k);
                let c_ik_j = c.eval_left(n.bracket_basis(i, k), j);
                let a_ik_j = a.eval_left(n.bracket_basis(i, k), j);
                let t = [i, j, k];
                rep.expect_eq("BLeib5", 0, &t, &c_n_br, &vec_sub(&c_ij_k, &c_ik_j));
                rep.expect_eq("BLeib6", 0, &t, &a_n_br, &vec_sub(&c_ij_k, &a_ik_j));
                rep.expect_eq("BLeib7", 0, &t, &c_n_br, &vec_sub(&c_ij_k, &a_ik_j));
                rep.expect_eq("BLeib8", 0, &t, &a_n_br, &vec_sub(&a_ij_k, &a_ik_j));
            }
        }
    }
    rep
}

/// `f₁{n,n'} = {f₂n, f₂n'}'` and likewise for `⟨−,−⟩`.
pub fn check_bxmod_hom(f1: &Matrix, f2: &Matrix, src: &BraidedXMod, dst: &BraidedXMod) -> Report {
    let mut rep = Report::new(format!("bxmod hom({} -> {})", src.m().name, dst.m().name));
    let h = check_xmod_hom(f1, f2, &src.xmod, &dst.xmod);
    let shaped = !h.fails("Shape");
    rep.push_section(h);
    if !shaped {
        return rep;
    }
    let dn = src.n().dim();
    let f2c: Vec<Vector> = (0..dn).map(|i| f2.column(i)).collect();
    for i in 0..dn {
        for j in 0..dn {
            let lhs = f1.apply(src.braiding.curly.get(i, j));
            rep.expect_eq("LeibHB1", 0, &[i, j], &lhs, &dst.braiding.curly.eval(&f2c[i], &f2c[j]));
            let lhs = f1.apply(src.braiding.angle.get(i, j));
            rep.expect_eq("LeibHB2", 0, &[i, j], &lhs, &dst.braiding.angle.eval(&f2c[i], &f2c[j]));
        }
    }
    rep
}

/// A braided crossed module of Lie algebras `(M, N, ·, ∂, {−,−})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieBraidedXMod {
    pub m: Algebra,
    pub n: Algebra,
    pub dot: BilinearMap,
    pub bdry: Matrix,
    pub curly: BilinearMap,
}

impl LieBraidedXMod {
    /// `(A, A, [−,−], Id, [−,−])`.
    pub fn identity(a: &Algebra) -> Self {
        LieBraidedXMod {
            m: a.clone(),
            n: a.clone(),
            dot: a.sc().clone(),
            bdry: Matrix::identity(a.dim()),
            curly: a.sc().clone(),
        }
    }
}

pub fn check_braiding_lie(b: &LieBraidedXMod) -> Report {
    let mut rep = Report::new(format!("lie braiding({} -> {})", b.m.name, b.n.name));
    let x = check_lie_xmod(&b.m, &b.n, &b.dot, &b.bdry);
    let shaped = !x.fails("Shape");
    rep.push_section(x);
    let (dm, dn) = (b.m.dim(), b.n.dim());
    if !shaped || !rep.expect("Shape", b.curly.dims() == (dn, dn, dm), || format!("braiding {:?}", b.curly.dims())) {
        return rep;
    }
    let (c, n, d) = (&b.curly, &b.n, &b.bdry);
    let dcols: Vec<Vector> = (0..dm).map(|i| d.column(i)).collect();
    for i in 0..dn {
        for j in 0..dn {
            rep.expect_eq("BLie1", 0, &[i, j], &d.apply(c.get(i, j)), n.bracket_basis(i, j));
        }
    }
    for i in 0..dm {
        for j in 0..dm {
            rep.expect_eq("BLie2", 0, &[i, j], &c.eval(&dcols[i], &dcols[j]), b.m.bracket_basis(i, j));
        }
    }
    for i in 0..dm {
        for k in 0..dn {
            let dot = b.dot.get(k, i);
            rep.expect_eq("BLie3", 0, &[i, k], &c.eval_left(&dcols[i], k), &vec_neg(dot));
            rep.expect_eq("BLie4", 0, &[k, i], &c.eval_right(k, &dcols[i]), dot);
        }
    }
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dn {
                let t = [i, j, k];
                let lhs = c.eval_right(i, n.bracket_basis(j, k));
                let rhs = vec_sub(&c.eval_left(n.bracket_basis(i, j), k), &c.eval_left(n.bracket_basis(i, k), j));
                rep.expect_eq("BLie5", 0, &t, &lhs, &rhs);
                let lhs = c.eval_left(n.bracket_basis(i, j), k);
                let rhs = vec_sub(&c.eval_right(i, n.bracket_basis(j, k)), &c.eval_right(j, n.bracket_basis(i, k)));
                rep.expect_eq("BLie6", 0, &t, &lhs, &rhs);
            }
        }
    }
    rep
}

/// `(·, ·⁻)` and `({−,−}, {−,−}⁻)` with `{n,n'}⁻ = −{n',n}`.
pub fn braiding_embed_lie(b: &LieBraidedXMod) -> Result<BraidedXMod> {
    gate(check_braiding_lie(b), Error::NotLieBraiding)?;
    let action = LeibnizAction::new(b.n.clone(), b.m.clone(), b.dot.clone(), b.dot.flip().neg())?;
    let xmod = CrossedModule::new(action, b.bdry.clone())?;
    BraidedXMod::new(xmod, LeibnizBraiding { curly: b.curly.clone(), angle: b.curly.flip().neg() })
}

/// Outcome of testing `{n,n'} = −⟨n',n⟩`.
#[derive(Clone, Debug)]
pub struct LieCollapse {
    pub detected: bool,
    /// `Collapse` violations list the pairs where the condition fails; when
    /// it holds, the sections carry the consequences.
    pub report: Report,
    pub extracted: Option<LieBraidedXMod>,
}

pub fn detect_lie_collapse(b: &BraidedXMod) -> LieCollapse {
    let mut rep = Report::new(format!("collapse({} -> {})", b.m().name, b.n().name));
    let (c, a) = (&b.braiding.curly, &b.braiding.angle);
    let dn = b.n().dim();
    for i in 0..dn {
        for j in 0..dn {
            rep.expect_zero("Collapse", 0, &[i, j], &vec_add(c.get(i, j), a.get(j, i)));
        }
    }
    if !rep.passed() {
        return LieCollapse { detected: false, report: rep, extracted: None };
    }

    let mut cons = Report::new("consequences");
    cons.expect("ActionSign", b.xmod.action.is_lie_shaped(), || "m·₂n ≠ −n·₁m".into());
    cons.push_section(check_antisymmetry(b.m()));
    cons.push_section(check_antisymmetry(b.n()));
    let n = b.n();
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dn {
                let lhs = c.eval_left(n.bracket_basis(i, j), k);
                let rhs = vec_neg(&c.eval_right(k, n.bracket_basis(i, j)));
                cons.expect_eq("CollapseSwap", 0, &[i, j, k], &lhs, &rhs);
            }
        }
    }
    let lie = LieBraidedXMod {
        m: b.m().clone(),
        n: b.n().clone(),
        dot: b.xmod.action.act1.clone(),
        bdry: b.xmod.bdry.clone(),
        curly: c.clone(),
    };
    cons.push_section(check_braiding_lie(&lie));
    rep.push_section(cons);
    LieCollapse { detected: true, report: rep, extracted: Some(lie) }
}

/// `{M,N}_x`: squares, `n·₁m + m·₂n` and `{n,n'} + ⟨n',n⟩`, closed up to an ideal.
pub fn braided_lie_ideal(b: &BraidedXMod) -> Subspace {
    let a = &b.xmod.action;
    let mut gens = square_generators(&a.m);
    gens.extend(mixed_generators(a));
    gens.extend(braiding_generators(&b.braiding));
    action_ideal_closure(a, &Subspace::span(a.m.dim(), &gens))
}

/// `{e_i,e_j} + ⟨e_j,e_i⟩`.
pub fn braiding_generators(b: &LeibnizBraiding) -> Vec<Vector> {
    let dn = b.curly.left_dim();
    let mut out = Vec::new();
    for i in 0..dn {
        for j in 0..dn {
            out.push(vec_add(b.curly.get(i, j), b.angle.get(j, i)));
        }
    }
    out
}

/// The bottom Lieization `(M/{M,N}_x, Lie(N), ·̄, ∂̄, {−,−}₂)` with its projections.
#[derive(Clone, Debug)]
pub struct LieizedBXMod {
    pub lie: LieBraidedXMod,
    pub proj_m: Matrix,
    pub proj_n: Matrix,
    pub ideal_m: Subspace,
    pub ideal_n: Subspace,
}

pub fn lieize_bxmod(b: &BraidedXMod) -> Result<LieizedBXMod> {
    let ideal_m = braided_lie_ideal(b);
    let qm = quotient_algebra(b.m(), &ideal_m)?;
    let qn = lieization(b.n())?;
    let m = qm.algebra.with_name(format!("{}/{{M,N}}", b.m().name));
    let dot = b.xmod.action.act1.induce(&qn.pres, &qm.pres, &qm.pres)?;
    let bdry = induce_linear(&b.xmod.bdry, &qm.pres, &qn.pres)?;
    let curly = b.braiding.curly.induce(&qn.pres, &qn.pres, &qm.pres)?;
    Ok(LieizedBXMod {
        lie: LieBraidedXMod { m, n: qn.algebra.clone(), dot, bdry, curly },
        proj_m: qm.pres.proj().clone(),
        proj_n: qn.pres.proj().clone(),
        ideal_m,
        ideal_n: qn.pres.relations().clone(),
    })
}
