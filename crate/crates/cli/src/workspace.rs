//! The workspace document: named algebras, actions, crossed modules,
//! braidings and categorical algebras, with exact rationals and sparse
//! structure constants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use lbraid::{
    Algebra, BilinearMap, BraidedXMod, CatAlgebra, CatBraiding, CrossedModule, LeibnizAction, LeibnizBraiding,
    Matrix, Scalar,
};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unresolved reference: {0}")]
    UnresolvedReference(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

/// `[e_i, e_j] = Σ coeffs[k] e_k`, or any bilinear map alike.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Scalar>,
}

/// The image of basis vector `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearEntry {
    pub i: usize,
    pub coeffs: BTreeMap<usize, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<BilinearEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub acting: String,
    pub on: String,
    #[serde(default)]
    pub act1: Vec<BilinearEntry>,
    #[serde(default)]
    pub act2: Vec<BilinearEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XModDoc {
    pub action: String,
    #[serde(default)]
    pub boundary: Vec<LinearEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingDoc {
    pub xmod: String,
    #[serde(default)]
    pub curly: Vec<BilinearEntry>,
    #[serde(default)]
    pub angle: Vec<BilinearEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatBraidingDoc {
    #[serde(default)]
    pub tau: Vec<BilinearEntry>,
    #[serde(default)]
    pub psi: Vec<BilinearEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub c1: String,
    pub c0: String,
    #[serde(default)]
    pub s: Vec<LinearEntry>,
    #[serde(default)]
    pub t: Vec<LinearEntry>,
    #[serde(default)]
    pub e: Vec<LinearEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<CatBraidingDoc>,
}

/// The on-disk form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub actions: BTreeMap<String, ActionDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub xmods: BTreeMap<String, XModDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub braidings: BTreeMap<String, BraidingDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub categories: BTreeMap<String, CategoryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionEntry {
    pub acting: String,
    pub on: String,
    pub action: LeibnizAction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModEntry {
    pub action: String,
    pub xmod: CrossedModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingEntry {
    pub xmod: String,
    pub bxmod: BraidedXMod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryEntry {
    pub c1: String,
    pub c0: String,
    pub cat: CatAlgebra,
    pub braiding: Option<CatBraiding>,
}

/// A resolved document. Objects are stored as given; no axiom is checked
/// on load.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Algebra>,
    pub actions: BTreeMap<String, ActionEntry>,
    pub xmods: BTreeMap<String, XModEntry>,
    pub braidings: BTreeMap<String, BraidingEntry>,
    pub categories: BTreeMap<String, CategoryEntry>,
}

pub fn parse(text: &str) -> Result<Workspace, InputError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Workspace::from_document(&doc)
}

pub fn serialize(ws: &Workspace) -> String {
    let mut s = serde_json::to_string_pretty(&ws.to_document()).expect("workspace documents serialize");
    s.push('\n');
    s
}

fn bilinear(
    what: &str,
    entries: &[BilinearEntry],
    (l, r, o): (usize, usize, usize),
) -> Result<BilinearMap, InputError> {
    let mut b = BilinearMap::zeros(l, r, o);
    let mut seen = std::collections::BTreeSet::new();
    for e in entries {
        if e.i >= l || e.j >= r {
            return Err(InputError::DimensionMismatch(format!("{what}: entry ({}, {}) outside {l}x{r}", e.i, e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(InputError::DimensionMismatch(format!("{what}: entry ({}, {}) given twice", e.i, e.j)));
        }
        for (&k, c) in &e.coeffs {
            if k >= o {
                return Err(InputError::DimensionMismatch(format!("{what}: coefficient index {k} outside {o}")));
            }
            b.set_entry(e.i, e.j, k, c.clone());
        }
    }
    Ok(b)
}

fn linear(what: &str, entries: &[LinearEntry], rows: usize, cols: usize) -> Result<Matrix, InputError> {
    let mut m = Matrix::zeros(rows, cols);
    let mut seen = std::collections::BTreeSet::new();
    for e in entries {
        if e.i >= cols {
            return Err(InputError::DimensionMismatch(format!("{what}: column {} outside {cols}", e.i)));
        }
        if !seen.insert(e.i) {
            return Err(InputError::DimensionMismatch(format!("{what}: column {} given twice", e.i)));
        }
        for (&k, c) in &e.coeffs {
            if k >= rows {
                return Err(InputError::DimensionMismatch(format!("{what}: row {k} outside {rows}")));
            }
            m.set(k, e.i, c.clone());
        }
    }
    Ok(m)
}

pub fn sparse_bilinear(b: &BilinearMap) -> Vec<BilinearEntry> {
    let (l, r, _) = b.dims();
    let mut out = Vec::new();
    for i in 0..l {
        for j in 0..r {
            let coeffs: BTreeMap<usize, Scalar> =
                b.get(i, j).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            if !coeffs.is_empty() {
                out.push(BilinearEntry { i, j, coeffs });
            }
        }
    }
    out
}

fn sparse_linear(m: &Matrix) -> Vec<LinearEntry> {
    (0..m.cols())
        .filter_map(|i| {
            let coeffs: BTreeMap<usize, Scalar> = (0..m.rows())
                .filter(|&k| !m.get(k, i).is_zero())
                .map(|k| (k, m.get(k, i).clone()))
                .collect();
            (!coeffs.is_empty()).then_some(LinearEntry { i, coeffs })
        })
        .collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str, from: &str) -> Result<&'a T, InputError> {
    map.get(name).ok_or_else(|| InputError::UnresolvedReference(format!("{from} refers to unknown {kind} `{name}`")))
}

impl Workspace {
    pub fn from_document(doc: &Document) -> Result<Self, InputError> {
        let mut ws = Workspace::default();
        for (name, a) in &doc.algebras {
            let sc = bilinear(&format!("algebra {name}"), &a.bracket, (a.dim, a.dim, a.dim))?;
            let alg = Algebra::new(name.clone(), sc).map_err(|e| InputError::DimensionMismatch(e.to_string()))?;
            ws.algebras.insert(name.clone(), alg);
        }
        for (name, a) in &doc.actions {
            let from = format!("action {name}");
            let n = lookup(&ws.algebras, "algebra", &a.acting, &from)?.clone();
            let m = lookup(&ws.algebras, "algebra", &a.on, &from)?.clone();
            let (dn, dm) = (n.dim(), m.dim());
            let act1 = bilinear(&format!("{from} act1"), &a.act1, (dn, dm, dm))?;
            let act2 = bilinear(&format!("{from} act2"), &a.act2, (dm, dn, dm))?;
            let action = LeibnizAction { n, m, act1, act2 };
            ws.actions.insert(name.clone(), ActionEntry { acting: a.acting.clone(), on: a.on.clone(), action });
        }
        for (name, x) in &doc.xmods {
            let from = format!("xmod {name}");
            let action = lookup(&ws.actions, "action", &x.action, &from)?.action.clone();
            let bdry = linear(&format!("{from} boundary"), &x.boundary, action.n.dim(), action.m.dim())?;
            ws.xmods.insert(name.clone(), XModEntry { action: x.action.clone(), xmod: CrossedModule { action, bdry } });
        }
        for (name, b) in &doc.braidings {
            let from = format!("braiding {name}");
            let xmod = lookup(&ws.xmods, "xmod", &b.xmod, &from)?.xmod.clone();
            let shape = (xmod.n().dim(), xmod.n().dim(), xmod.m().dim());
            let curly = bilinear(&format!("{from} curly"), &b.curly, shape)?;
            let angle = bilinear(&format!("{from} angle"), &b.angle, shape)?;
            let bxmod = BraidedXMod { xmod, braiding: LeibnizBraiding { curly, angle } };
            ws.braidings.insert(name.clone(), BraidingEntry { xmod: b.xmod.clone(), bxmod });
        }
        for (name, c) in &doc.categories {
            let from = format!("category {name}");
            let c1 = lookup(&ws.algebras, "algebra", &c.c1, &from)?.clone();
            let c0 = lookup(&ws.algebras, "algebra", &c.c0, &from)?.clone();
            let (d1, d0) = (c1.dim(), c0.dim());
            let s = linear(&format!("{from} s"), &c.s, d0, d1)?;
            let t = linear(&format!("{from} t"), &c.t, d0, d1)?;
            let e = linear(&format!("{from} e"), &c.e, d1, d0)?;
            let braiding = match &c.braiding {
                Some(b) => Some(CatBraiding {
                    tau: bilinear(&format!("{from} tau"), &b.tau, (d0, d0, d1))?,
                    psi: bilinear(&format!("{from} psi"), &b.psi, (d0, d0, d1))?,
                }),
                None => None,
            };
            let cat = CatAlgebra { c1, c0, s, t, e };
            ws.categories.insert(name.clone(), CategoryEntry { c1: c.c1.clone(), c0: c.c0.clone(), cat, braiding });
        }
        Ok(ws)
    }

    pub fn to_document(&self) -> Document {
        Document {
            algebras: self
                .algebras
                .iter()
                .map(|(k, a)| (k.clone(), AlgebraDoc { dim: a.dim(), bracket: sparse_bilinear(a.sc()) }))
                .collect(),
            actions: self
                .actions
                .iter()
                .map(|(k, a)| {
                    let doc = ActionDoc {
                        acting: a.acting.clone(),
                        on: a.on.clone(),
                        act1: sparse_bilinear(&a.action.act1),
                        act2: sparse_bilinear(&a.action.act2),
                    };
                    (k.clone(), doc)
                })
                .collect(),
            xmods: self
                .xmods
                .iter()
                .map(|(k, x)| (k.clone(), XModDoc { action: x.action.clone(), boundary: sparse_linear(&x.xmod.bdry) }))
                .collect(),
            braidings: self
                .braidings
                .iter()
                .map(|(k, b)| {
                    let doc = BraidingDoc {
                        xmod: b.xmod.clone(),
                        curly: sparse_bilinear(&b.bxmod.braiding.curly),
                        angle: sparse_bilinear(&b.bxmod.braiding.angle),
                    };
                    (k.clone(), doc)
                })
                .collect(),
            categories: self
                .categories
                .iter()
                .map(|(k, c)| {
                    let doc = CategoryDoc {
                        c1: c.c1.clone(),
                        c0: c.c0.clone(),
                        s: sparse_linear(&c.cat.s),
                        t: sparse_linear(&c.cat.t),
                        e: sparse_linear(&c.cat.e),
                        braiding: c.braiding.as_ref().map(|b| CatBraidingDoc {
                            tau: sparse_bilinear(&b.tau),
                            psi: sparse_bilinear(&b.psi),
                        }),
                    };
                    (k.clone(), doc)
                })
                .collect(),
        }
    }

    /// Adds `a` under its own name, or reuses an equal algebra already
    /// stored under that name. A clash gets a numeric suffix.
    pub fn add_algebra(&mut self, a: &Algebra) -> String {
        let name = fresh_name(&self.algebras, &a.name, |b| b == a);
        self.algebras.entry(name.clone()).or_insert_with(|| a.clone().with_name(name.clone()));
        name
    }

    /// Reuses any stored action equal to `a`.
    pub fn add_action(&mut self, name: &str, a: &LeibnizAction) -> String {
        if let Some((k, _)) = self.actions.iter().find(|(_, e)| e.action == *a) {
            return k.clone();
        }
        let acting = self.add_algebra(&a.n);
        let on = self.add_algebra(&a.m);
        let name = fresh_name(&self.actions, name, |e| e.action == *a);
        self.actions
            .entry(name.clone())
            .or_insert_with(|| ActionEntry { acting, on, action: a.clone() });
        name
    }

    /// Reuses any stored crossed module equal to `x`.
    pub fn add_xmod(&mut self, name: &str, x: &CrossedModule) -> String {
        if let Some((k, _)) = self.xmods.iter().find(|(_, e)| e.xmod == *x) {
            return k.clone();
        }
        let action = self.add_action(&format!("{name}.action"), &x.action);
        let name = fresh_name(&self.xmods, name, |e| e.xmod == *x);
        self.xmods.entry(name.clone()).or_insert_with(|| XModEntry { action, xmod: x.clone() });
        name
    }

    pub fn add_braiding(&mut self, name: &str, b: &BraidedXMod) -> String {
        let xmod = self.add_xmod(&format!("{name}.xmod"), &b.xmod);
        let name = fresh_name(&self.braidings, name, |e| e.bxmod == *b);
        self.braidings.entry(name.clone()).or_insert_with(|| BraidingEntry { xmod, bxmod: b.clone() });
        name
    }

    pub fn add_category(&mut self, name: &str, c: &CatAlgebra, b: Option<&CatBraiding>) -> String {
        let c1 = self.add_algebra(&c.c1);
        let c0 = self.add_algebra(&c.c0);
        let braiding = b.cloned();
        let name = fresh_name(&self.categories, name, |e| e.cat == *c && e.braiding == braiding);
        self.categories
            .entry(name.clone())
            .or_insert_with(|| CategoryEntry { c1, c0, cat: c.clone(), braiding });
        name
    }
}

/// `base` if free or holding an equal object, else the first free `base#k`.
fn fresh_name<T>(map: &BTreeMap<String, T>, base: &str, same: impl Fn(&T) -> bool) -> String {
    let mut k = 1;
    let mut name = base.to_string();
    while let Some(v) = map.get(&name) {
        if same(v) {
            return name;
        }
        k += 1;
        name = format!("{base}#{k}");
    }
    name
}
