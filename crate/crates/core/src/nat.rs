//! The non-abelian tensor product `M ⋆ N` as a quotient of
//! `(M⊗N) ⊕ (N⊗M)`, the crossed module `(M ⋆ M, M)` and its tensor braiding.
//!
//! Coordinates: `m_i ⊗ n_j` sits at `i·dim N + j`, `n_j ⊛ m_i` at
//! `dim M·dim N + j·dim M + i`.

use serde::{Deserialize, Serialize};

use crate::algebra::{check_leibniz, induce_linear, Algebra, BilinearMap};
use crate::braid::{BraidedXMod, LeibnizBraiding};
use crate::error::{Error, Result};
use crate::exactla::{
    axpy, quotient, unit_vec, vec_add, vec_sub, zero_vec, Matrix, QuotientPresentation, Scalar, Subspace, Vector,
};
use crate::report::Report;
use crate::xmod::{CrossedModule, LeibnizAction};

/// With `Lie`, the relations `n ⊛ m + m ⊗ n` are appended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum Regime {
    #[default]
    Leibniz,
    Lie,
}

/// Symbol coordinates on the ambient space.
#[derive(Clone, Copy, Debug)]
struct Symbols {
    dm: usize,
    dn: usize,
}

impl Symbols {
    fn ambient(&self) -> usize {
        2 * self.dm * self.dn
    }

    /// `u ⊗ v` for `u ∈ M`, `v ∈ N`.
    fn ot(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.ambient());
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[i * self.dn + j] = &out[i * self.dn + j] + &(a * b);
            }
        }
        out
    }

    /// `v ⊛ u` for `v ∈ N`, `u ∈ M`.
    fn oast(&self, v: &[Scalar], u: &[Scalar]) -> Vector {
        let off = self.dm * self.dn;
        let mut out = zero_vec(self.ambient());
        for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                out[off + j * self.dm + i] = &out[off + j * self.dm + i] + &(a * b);
            }
        }
        out
    }

    /// The generator at ambient index `k`.
    fn generator(&self, k: usize) -> Generator {
        let split = self.dm * self.dn;
        if k < split {
            Generator::Ot(k / self.dn, k % self.dn)
        } else {
            let k = k - split;
            Generator::Oast(k / self.dm, k % self.dm)
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Generator {
    /// `m_i ⊗ n_j`
    Ot(usize, usize),
    /// `n_j ⊛ m_i`
    Oast(usize, usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorProduct {
    pub m: Algebra,
    pub n: Algebra,
    pub regime: Regime,
    /// Bracket on the ambient space given by RTLeib5 on generators.
    pub ambient_bracket: BilinearMap,
    pub pres: QuotientPresentation,
    pub algebra: Algebra,
    /// `M × N → T`, `(m, n) ↦ m ⊗ n`
    pub emb_ot: BilinearMap,
    /// `N × M → T`, `(n, m) ↦ n ⊛ m`
    pub emb_oast: BilinearMap,
}

impl TensorProduct {
    pub fn ambient_dim(&self) -> usize {
        self.pres.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn relations(&self) -> &Subspace {
        self.pres.relations()
    }

    /// For every relation basis vector `r` and ambient generator `g`, both
    /// `[r, g]` and `[g, r]` lie in the relation space.
    pub fn certificate(&self) -> Report {
        let mut rep = Report::new(format!("tensor certificate({} * {})", self.m.name, self.n.name));
        let rel = self.relations();
        for (p, r) in rel.basis_vectors().iter().enumerate() {
            for g in 0..self.ambient_dim() {
                let left = self.ambient_bracket.eval_left(r, g);
                let right = self.ambient_bracket.eval_right(g, r);
                rep.expect("WellDefined", rel.contains(&left), || format!("[r{p}, g{g}] escapes"));
                rep.expect("WellDefined", rel.contains(&right), || format!("[g{g}, r{p}] escapes"));
            }
        }
        rep.push_section(check_leibniz(&self.algebra));
        rep
    }
}

/// `M ⋆ N` for a left-and-right action `mn` of `M` on `N` (written `·`) and
/// `nm` of `N` on `M` (written `*`).
pub fn nonabelian_tensor(
    m: &Algebra,
    n: &Algebra,
    mn: &LeibnizAction,
    nm: &LeibnizAction,
    regime: Regime,
) -> Result<TensorProduct> {
    let (dm, dn) = (m.dim(), n.dim());
    let sy = Symbols { dm, dn };
    let amb = sy.ambient();
    let em = |i: usize| unit_vec(dm, i);
    let en = |j: usize| unit_vec(dn, j);
    // m ·₁ n, n ·₂ m, n *₁ m, m *₂ n on basis elements
    let dot1 = |i: usize, j: usize| mn.act1.get(i, j).to_vec();
    let dot2 = |j: usize, i: usize| mn.act2.get(j, i).to_vec();
    let star1 = |j: usize, i: usize| nm.act1.get(j, i).to_vec();
    let star2 = |i: usize, j: usize| nm.act2.get(i, j).to_vec();

    let mut rel = Subspace::zero(amb);
    let mut push = |v: Vector| {
        rel.insert(&v);
    };
    for i in 0..dm {
        for j in 0..dn {
            for j2 in 0..dn {
                // m ⊗ [n, n'] = (m *₂ n) ⊗ n' − (m *₂ n') ⊗ n
                let lhs = sy.ot(&em(i), n.bracket_basis(j, j2));
                let rhs = vec_sub(&sy.ot(&star2(i, j), &en(j2)), &sy.ot(&star2(i, j2), &en(j)));
                push(vec_sub(&lhs, &rhs));
                // [n, n'] ⊛ m = (n *₁ m) ⊗ n' − n ⊛ (m *₂ n')
                let lhs = sy.oast(n.bracket_basis(j, j2), &em(i));
                let rhs = vec_sub(&sy.ot(&star1(j, i), &en(j2)), &sy.oast(&en(j), &star2(i, j2)));
                push(vec_sub(&lhs, &rhs));
                // n ⊛ (n' *₁ m) = −n ⊛ (m *₂ n')
                push(vec_add(&sy.oast(&en(j), &star1(j2, i)), &sy.oast(&en(j), &star2(i, j2))));
            }
            for i2 in 0..dm {
                // n ⊛ [m, m'] = (n ·₂ m) ⊛ m' − (n ·₂ m') ⊛ m
                let lhs = sy.oast(&en(j), m.bracket_basis(i, i2));
                let rhs = vec_sub(&sy.oast(&dot2(j, i), &em(i2)), &sy.oast(&dot2(j, i2), &em(i)));
                push(vec_sub(&lhs, &rhs));
                // [m, m'] ⊗ n = (m ·₁ n) ⊛ m' − m ⊗ (n ·₂ m')
                let lhs = sy.ot(m.bracket_basis(i, i2), &en(j));
                let rhs = vec_sub(&sy.oast(&dot1(i, j), &em(i2)), &sy.ot(&em(i), &dot2(j, i2)));
                push(vec_sub(&lhs, &rhs));
                // m ⊗ (m' ·₁ n) = −m ⊗ (n ·₂ m')
                push(vec_add(&sy.ot(&em(i), &dot1(i2, j)), &sy.ot(&em(i), &dot2(j, i2))));
            }
        }
    }

    // RTLeib5: the bracket is the left expression, the right one must agree.
    let mut bracket = BilinearMap::zeros(amb, amb, amb);
    for a in 0..amb {
        for b in 0..amb {
            let (left, right) = match (sy.generator(a), sy.generator(b)) {
                (Generator::Ot(i, j), Generator::Ot(i2, j2)) => {
                    (sy.ot(&star2(i, j), &dot1(i2, j2)), sy.oast(&dot1(i, j), &star2(i2, j2)))
                }
                (Generator::Ot(i, j), Generator::Oast(j2, i2)) => {
                    (sy.ot(&star2(i, j), &dot2(j2, i2)), sy.oast(&dot1(i, j), &star1(j2, i2)))
                }
                (Generator::Oast(j, i), Generator::Oast(j2, i2)) => {
                    (sy.ot(&star1(j, i), &dot2(j2, i2)), sy.oast(&dot2(j, i), &star1(j2, i2)))
                }
                (Generator::Oast(j, i), Generator::Ot(i2, j2)) => {
                    (sy.ot(&star1(j, i), &dot1(i2, j2)), sy.oast(&dot2(j, i), &star2(i2, j2)))
                }
            };
            push(vec_sub(&left, &right));
            bracket.set(a, b, &left);
        }
    }
    if regime == Regime::Lie {
        for i in 0..dm {
            for j in 0..dn {
                push(vec_add(&sy.oast(&en(j), &em(i)), &sy.ot(&em(i), &en(j))));
            }
        }
    }

    let pres = quotient(amb, &rel);
    let sc = bracket
        .induce(&pres, &pres, &pres)
        .map_err(|e| Error::BracketNotWellDefined(e.to_string()))?;
    let algebra = Algebra::new(format!("{}*{}", m.name, n.name), sc)?;
    let proj = pres.proj().clone();
    let emb_ot = BilinearMap::from_fn(dm, dn, amb, |i, j| sy.ot(&em(i), &en(j))).compose_out(&proj);
    let emb_oast = BilinearMap::from_fn(dn, dm, amb, |j, i| sy.oast(&en(j), &em(i))).compose_out(&proj);
    Ok(TensorProduct {
        m: m.clone(),
        n: n.clone(),
        regime,
        ambient_bracket: bracket,
        pres,
        algebra,
        emb_ot,
        emb_oast,
    })
}

/// `M ⋆ M` with both actions the bracket.
pub fn tensor_square(m: &Algebra, regime: Regime) -> Result<TensorProduct> {
    let ad = LeibnizAction::adjoint(m);
    nonabelian_tensor(m, m, &ad, &ad, regime)
}

/// `(M ⋆ M, M, (·₁, ·₂), ∂)` together with the tensor product it lives on.
pub fn tensor_self_xmod_in(m: &Algebra, regime: Regime) -> Result<(CrossedModule, TensorProduct)> {
    let t = tensor_square(m, regime)?;
    let d = m.dim();
    let sy = Symbols { dm: d, dn: d };
    let amb = sy.ambient();
    let em = |i: usize| unit_vec(d, i);
    let br = |i: usize, j: usize| m.bracket_basis(i, j).to_vec();

    let mut act1 = BilinearMap::zeros(d, amb, amb);
    let mut act2 = BilinearMap::zeros(amb, d, amb);
    let mut bdry = Matrix::zeros(d, amb);
    for g in 0..amb {
        let (left, right, db) = match sy.generator(g) {
            Generator::Ot(i, j) => (
                // m ·₁ (m₁ ⊗ m₂) = [m, m₁] ⊗ m₂ − [m, m₂] ⊛ m₁
                (0..d)
                    .map(|k| vec_sub(&sy.ot(&br(k, i), &em(j)), &sy.oast(&br(k, j), &em(i))))
                    .collect::<Vec<_>>(),
                // (m₁ ⊗ m₂) ·₂ m = [m₁, m] ⊗ m₂ + m₁ ⊗ [m₂, m]
                (0..d)
                    .map(|k| vec_add(&sy.ot(&br(i, k), &em(j)), &sy.ot(&em(i), &br(j, k))))
                    .collect::<Vec<_>>(),
                br(i, j),
            ),
            // the ⊛ generator at (j, i) is m_j ⊛ m_i
            Generator::Oast(j, i) => (
                (0..d)
                    .map(|k| vec_sub(&sy.oast(&br(k, j), &em(i)), &sy.ot(&br(k, i), &em(j))))
                    .collect(),
                (0..d)
                    .map(|k| vec_add(&sy.oast(&br(j, k), &em(i)), &sy.oast(&em(j), &br(i, k))))
                    .collect(),
                br(j, i),
            ),
        };
        for k in 0..d {
            act1.set(k, g, &left[k]);
            act2.set(g, k, &right[k]);
        }
        for (r, x) in db.into_iter().enumerate() {
            bdry.set(r, g, x);
        }
    }
    let triv = QuotientPresentation::trivial(d);
    let descend = |e: Error| Error::ActionNotDescending(e.to_string());
    let act1 = act1.induce(&triv, &t.pres, &t.pres).map_err(descend)?;
    let act2 = act2.induce(&t.pres, &triv, &t.pres).map_err(descend)?;
    let bdry = induce_linear(&bdry, &t.pres, &triv).map_err(descend)?;
    let action = LeibnizAction::new(m.clone(), t.algebra.clone(), act1, act2)?;
    Ok((CrossedModule::new(action, bdry)?, t))
}

pub fn tensor_self_xmod(m: &Algebra) -> Result<CrossedModule> {
    Ok(tensor_self_xmod_in(m, Regime::Leibniz)?.0)
}

/// `{m₁, m₂} = m₁ ⊗ m₂`, `⟨m₁, m₂⟩ = m₁ ⊛ m₂`.
pub fn tensor_braiding_in(m: &Algebra, regime: Regime) -> Result<BraidedXMod> {
    let (xmod, t) = tensor_self_xmod_in(m, regime)?;
    BraidedXMod::new(xmod, LeibnizBraiding { curly: t.emb_ot.clone(), angle: t.emb_oast.clone() })
}

pub fn tensor_braiding(m: &Algebra) -> Result<BraidedXMod> {
    tensor_braiding_in(m, Regime::Leibniz)
}

/// `[m₁, m₃] ⊗ m₂ = [m₁, m₃] ⊛ m₂` and `m₁ ⊗ [m₂, m₃] = m₁ ⊛ [m₂, m₃]` in
/// the quotient, for a tensor square.
pub fn check_collapse_identities(t: &TensorProduct) -> Report {
    let mut rep = Report::new(format!("collapse identities({})", t.algebra.name));
    let d = t.m.dim();
    if !rep.expect("Shape", t.m == t.n && t.m.dim() == d, || "not a tensor square".into()) {
        return rep;
    }
    let m = &t.m;
    let sy = Symbols { dm: d, dn: d };
    let rel = t.relations();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let ej = unit_vec(d, j);
                let ik = m.bracket_basis(i, k);
                let diff = vec_sub(&sy.ot(ik, &ej), &sy.oast(ik, &ej));
                rep.expect("CollapseIdentity", rel.contains(&diff), || format!("[e{i},e{k}] (x) e{j}"));
                let ei = unit_vec(d, i);
                let jk = m.bracket_basis(j, k);
                let diff = vec_sub(&sy.ot(&ei, jk), &sy.oast(&ei, jk));
                rep.expect("CollapseIdentity", rel.contains(&diff), || format!("e{i} (x) [e{j},e{k}]"));
            }
        }
    }
    rep
}

/// `∂ ∘ emb_ot = [−,−] = ∂ ∘ emb_oast`.
pub fn check_boundary_on_symbols(x: &CrossedModule, t: &TensorProduct) -> Report {
    let mut rep = Report::new("boundary on symbols");
    let d = t.m.dim();
    for i in 0..d {
        for j in 0..d {
            let br = t.m.bracket_basis(i, j);
            rep.expect_eq("SymbolBoundary", 1, &[i, j], &x.bdry.apply(t.emb_ot.get(i, j)), br);
            rep.expect_eq("SymbolBoundary", 2, &[i, j], &x.bdry.apply(t.emb_oast.get(i, j)), br);
        }
    }
    rep
}

/// `n ⊛ m + m ⊗ n` for every basis pair, as an element of the quotient.
pub fn lie_collapse_residuals(t: &TensorProduct) -> Vec<Vector> {
    let (dm, dn) = (t.m.dim(), t.n.dim());
    let mut out = Vec::new();
    for i in 0..dm {
        for j in 0..dn {
            let mut v = t.emb_oast.get(j, i).to_vec();
            axpy(&mut v, &Scalar::one(), t.emb_ot.get(i, j));
            out.push(v);
        }
    }
    out
}
