//! Command dispatch. Every command returns one [`Report`]; a command passes
//! iff its report does.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use lbraid::algebra::{check_antisymmetry, check_leibniz, check_lie, lieization};
use lbraid::braid::{
    braiding_embed_lie, check_braiding_leibniz, check_braiding_lie, detect_lie_collapse, lieize_bxmod,
};
use lbraid::equiv::{functor_c, functor_x, roundtrip_check, BraidedCatAlgebra, Seed};
use lbraid::exactla::Scalar;
use lbraid::intcat::{
    cat_braiding_embed_lie, cat_lieization, check_cat_braiding_leibniz, check_cat_braiding_lie, check_cat_structure,
    check_tau_bracket_identity, derive_k,
};
use lbraid::lmcat::{
    bipsi, biphi, bxphi, bxpsi, check_cat_lie_object, check_cat_lm_braiding, check_lie_object, check_triple,
    check_xlielm, iphi, ipsi, phi, psi, xphi, xpsi,
};
use lbraid::nat::{check_collapse_identities, tensor_braiding, tensor_self_xmod_in, tensor_square, Regime};
use lbraid::xmod::{check_action, check_lie_xmod, check_xmod, lie_xmod_embed, lieize_xmod, semidirect};
use lbraid::{Algebra, CatBraiding, Report};

use crate::workspace::{InputError, Workspace};

/// Selects every object except the negative fixtures.
pub const ALL_FIXTURES: &str = "all-fixtures";
const NEGATIVE_PREFIX: &str = "corrupted-";

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub golden: Option<PathBuf>,
    pub seed: Option<u64>,
}

#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    /// The workspace after `construct` or `lieize`.
    pub workspace: Option<Workspace>,
    /// Golden documents produced by `tensor`, keyed by file name.
    pub golden: BTreeMap<String, String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }
}

fn select<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, target: &str) -> Result<Vec<(&'a String, &'a T)>, InputError> {
    if target == ALL_FIXTURES {
        return Ok(map.iter().filter(|(k, _)| !k.starts_with(NEGATIVE_PREFIX)).collect());
    }
    map.get_key_value(target)
        .map(|kv| vec![kv])
        .ok_or_else(|| InputError::UnresolvedReference(format!("no {kind} named `{target}`")))
}

fn args<'a, const N: usize>(cmd: &str, rest: &'a [String], usage: &str) -> Result<[&'a str; N], InputError> {
    if rest.len() != N {
        return Err(InputError::Usage(format!("{cmd} {usage}")));
    }
    Ok(std::array::from_fn(|i| rest[i].as_str()))
}

fn failed(subject: &str, axiom: &str, msg: String) -> Report {
    let mut r = Report::new(subject);
    r.expect(axiom, false, || msg);
    r
}

pub fn run(command: &str, rest: &[String], ws: &Workspace, opts: &Options) -> Result<Outcome, InputError> {
    let mut out = Outcome { report: Report::new(format!("{command} {}", rest.join(" "))), workspace: None, golden: BTreeMap::new() };
    match command {
        "check" => {
            let [verifier, target] = args(command, rest, "<verifier> <target>")?;
            check(&mut out.report, ws, verifier, target, opts)?;
        }
        "construct" => {
            let [functor, target] = args(command, rest, "<functor> <target>")?;
            let mut next = ws.clone();
            construct(&mut out.report, &mut next, functor, target)?;
            out.workspace = Some(next);
        }
        "roundtrip" => {
            let [target] = args(command, rest, "<target>")?;
            let mut seeds = Vec::new();
            let (bs, cs) = (select_or_empty(&ws.braidings, target), select_or_empty(&ws.categories, target));
            if bs.is_empty() && cs.is_empty() {
                return Err(InputError::UnresolvedReference(format!("no braiding or category named `{target}`")));
            }
            for (name, b) in bs {
                seeds.push(Seed::XMod(name.clone(), b.bxmod.clone()));
            }
            for (name, c) in cs {
                let braiding = c.braiding.clone().unwrap_or_else(|| CatBraiding::zero(c.cat.c0.dim(), c.cat.c1.dim()));
                seeds.push(Seed::Cat(name.clone(), BraidedCatAlgebra { cat: c.cat.clone(), braiding }));
            }
            out.report.push_section(roundtrip_check(&seeds));
        }
        "tensor" => {
            let [target] = args(command, rest, "<algebra>")?;
            for (name, a) in select(&ws.algebras, "algebra", target)? {
                let (sec, doc) = tensor(name, a, opts.golden.as_deref());
                out.report.push_section(sec);
                if let Some(doc) = doc {
                    out.golden.insert(golden_file(name), doc);
                }
            }
        }
        "lieize" => {
            let [kind, target] = args(command, rest, "<algebra|xmod|bxmod|cat> <target>")?;
            let mut next = ws.clone();
            lieize(&mut out.report, &mut next, kind, target)?;
            out.workspace = Some(next);
        }
        other => return Err(InputError::UnknownCommand(other.to_string())),
    }
    Ok(out)
}

fn select_or_empty<'a, T>(map: &'a BTreeMap<String, T>, target: &str) -> Vec<(&'a String, &'a T)> {
    select(map, "", target).unwrap_or_default()
}

pub const VERIFIERS: &[&str] =
    &["leibniz", "lie", "action", "xmod", "bleib", "collapse", "cat", "catbraid", "tau", "all"];

fn check(rep: &mut Report, ws: &Workspace, verifier: &str, target: &str, opts: &Options) -> Result<(), InputError> {
    let all = verifier == "all";
    if !VERIFIERS.contains(&verifier) {
        return Err(InputError::Usage(format!("unknown verifier `{verifier}`; expected one of {}", VERIFIERS.join(", "))));
    }
    let mut hits = 0;
    if all || verifier == "leibniz" || verifier == "lie" {
        for (name, a) in select_for(&ws.algebras, "algebra", target, all)? {
            hits += 1;
            if all || verifier == "leibniz" {
                let mut sec = check_leibniz(a);
                if let Some(seed) = opts.seed {
                    sec.push_section(random_triples(a, seed, 100));
                }
                rep.push_section(named(name, sec));
            }
            if verifier == "lie" {
                rep.push_section(named(name, check_lie(a)));
            }
        }
    }
    if all || verifier == "action" {
        for (name, a) in select_for(&ws.actions, "action", target, all)? {
            hits += 1;
            rep.push_section(named(name, check_action(&a.action)));
        }
    }
    if all || verifier == "xmod" {
        for (name, x) in select_for(&ws.xmods, "xmod", target, all)? {
            hits += 1;
            rep.push_section(named(name, check_xmod(&x.xmod)));
        }
    }
    if all || verifier == "bleib" || verifier == "collapse" {
        for (name, b) in select_for(&ws.braidings, "braiding", target, all)? {
            hits += 1;
            if all || verifier == "bleib" {
                rep.push_section(named(name, check_braiding_leibniz(&b.bxmod)));
            }
            if verifier == "collapse" {
                let c = detect_lie_collapse(&b.bxmod);
                let mut sec = Report::new(name.clone());
                sec.note(format!("lie collapse detected: {}", c.detected));
                if c.detected {
                    sec.push_section(c.report);
                }
                rep.push_section(sec);
            }
        }
    }
    if all || verifier == "cat" || verifier == "catbraid" || verifier == "tau" {
        for (name, c) in select_for(&ws.categories, "category", target, all)? {
            hits += 1;
            if all || verifier == "cat" {
                let mut sec = check_cat_structure(&c.cat);
                sec.push_section(derive_k(&c.cat).report);
                rep.push_section(named(name, sec));
            }
            let Some(b) = &c.braiding else {
                if !all && verifier != "cat" {
                    return Err(InputError::UnresolvedReference(format!("category `{name}` carries no braiding")));
                }
                continue;
            };
            if all || verifier == "catbraid" {
                rep.push_section(named(name, check_cat_braiding_leibniz(&c.cat, b)));
            }
            if all || verifier == "tau" {
                let lie = check_cat_braiding_lie(&c.cat, &b.tau).passed() && b.psi == b.tau.flip().neg();
                let mut sec = Report::new(format!("{name} tau identity"));
                if lie {
                    sec.push_section(check_tau_bracket_identity(&c.cat, &b.tau));
                } else if verifier == "tau" && target != ALL_FIXTURES {
                    sec.expect("LieCatBraiding", false, || "not a Lie categorical braiding".into());
                } else {
                    sec.note("skipped: not a Lie categorical braiding");
                }
                rep.push_section(sec);
            }
        }
    }
    if hits == 0 && target != ALL_FIXTURES {
        return Err(InputError::UnresolvedReference(format!("`{target}` is not a target of verifier `{verifier}`")));
    }
    Ok(())
}

/// Like [`select`], but under `all` a kind without the target yields nothing.
fn select_for<'a, T>(
    map: &'a BTreeMap<String, T>,
    kind: &str,
    target: &str,
    all: bool,
) -> Result<Vec<(&'a String, &'a T)>, InputError> {
    if all {
        Ok(select_or_empty(map, target))
    } else {
        select(map, kind, target)
    }
}

fn named(name: &str, mut r: Report) -> Report {
    r.subject = format!("{name}: {}", r.subject);
    r
}

/// Evaluates `[x,[y,z]] = [[x,y],z] − [[x,z],y]` on seeded random rational
/// vectors.
fn random_triples(a: &Algebra, seed: u64, count: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new(format!("random triples (seed {seed})"));
    let d = a.dim();
    let vec = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
        (0..d).map(|_| Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()
    };
    for p in 0..count {
        let (x, y, z) = (vec(&mut rng), vec(&mut rng), vec(&mut rng));
        let lhs = a.bracket(&x, &a.bracket(&y, &z));
        let rhs = lbraid::exactla::vec_sub(&a.bracket(&a.bracket(&x, &y), &z), &a.bracket(&a.bracket(&x, &z), &y));
        rep.expect_eq("LeibnizIdentity", 0, &[p], &lhs, &rhs);
    }
    rep
}

pub const FUNCTORS: &[&str] = &[
    "C", "X", "semidirect", "tensor", "phi", "psi", "xphi", "xpsi", "bxphi", "bxpsi", "iphi", "ipsi", "biphi", "bipsi",
];

fn construct(rep: &mut Report, ws: &mut Workspace, functor: &str, target: &str) -> Result<(), InputError> {
    match functor {
        "C" => {
            for (name, b) in select(&ws.clone().braidings, "braiding", target)? {
                let mut sec = Report::new(format!("C({name})"));
                match functor_c(&b.bxmod) {
                    Ok(d) => {
                        sec.push_section(d.check());
                        ws.add_category(&format!("C({name})"), &d.cat, Some(&d.braiding));
                    }
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "X" => {
            for (name, c) in select(&ws.clone().categories, "category", target)? {
                let mut sec = Report::new(format!("X({name})"));
                let braiding = c.braiding.clone().unwrap_or_else(|| CatBraiding::zero(c.cat.c0.dim(), c.cat.c1.dim()));
                match functor_x(&BraidedCatAlgebra { cat: c.cat.clone(), braiding }) {
                    Ok(z) => {
                        sec.push_section(check_braiding_leibniz(&z));
                        ws.add_braiding(&format!("X({name})"), &z);
                    }
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "semidirect" => {
            for (name, a) in select(&ws.clone().actions, "action", target)? {
                let mut sec = Report::new(format!("semidirect({name})"));
                match semidirect(&a.action) {
                    Ok(sd) => {
                        sec.push_section(check_leibniz(&sd.algebra));
                        ws.add_algebra(&sd.algebra);
                    }
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "tensor" => {
            for (name, a) in select(&ws.clone().algebras, "algebra", target)? {
                let mut sec = Report::new(format!("tensor-{name}"));
                match tensor_braiding(a) {
                    Ok(b) => {
                        sec.push_section(check_braiding_leibniz(&b));
                        ws.add_braiding(&format!("tensor-{name}"), &b);
                    }
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "phi" | "psi" => {
            for (name, a) in select(&ws.clone().algebras, "algebra", target)? {
                let mut sec = Report::new(format!("{functor}({name})"));
                match phi(a) {
                    Ok(o) if functor == "phi" => {
                        sec.note(format!("f: {} -> {}", o.top_dim(), o.f().rows()));
                        sec.push_section(check_lie_object(&o));
                    }
                    Ok(o) => match psi(&o) {
                        Ok(b) => {
                            sec.expect("RoundTrip", b == *a, || "psi(phi(A)) differs from A".into());
                            ws.add_algebra(&b.with_name(format!("psi(phi({name}))")));
                        }
                        Err(e) => construct_error(&mut sec, e),
                    },
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "xphi" | "xpsi" => {
            for (name, x) in select(&ws.clone().xmods, "xmod", target)? {
                let mut sec = Report::new(format!("{functor}({name})"));
                match xphi(&x.xmod) {
                    Ok(o) if functor == "xphi" => sec.push_section(check_xlielm(&o)),
                    Ok(o) => match xpsi(&o) {
                        Ok(z) => {
                            sec.expect("RoundTrip", z == x.xmod, || "xpsi(xphi(z)) differs from z".into());
                            ws.add_xmod(&format!("xpsi(xphi({name}))"), &z);
                        }
                        Err(e) => construct_error(&mut sec, e),
                    },
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "bxphi" | "bxpsi" => {
            for (name, b) in select(&ws.clone().braidings, "braiding", target)? {
                let mut sec = Report::new(format!("{functor}({name})"));
                match bxphi(&b.bxmod) {
                    Ok((x, t)) if functor == "bxphi" => {
                        sec.push_section(check_xlielm(&x));
                        sec.push_section(check_triple(&x, &t));
                    }
                    Ok((x, t)) => match bxpsi(&x, &t) {
                        Ok(z) => {
                            sec.expect("RoundTrip", z == b.bxmod, || "bxpsi(bxphi(z)) differs from z".into());
                            ws.add_braiding(&format!("bxpsi(bxphi({name}))"), &z);
                        }
                        Err(e) => construct_error(&mut sec, e),
                    },
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "iphi" | "ipsi" => {
            for (name, c) in select(&ws.clone().categories, "category", target)? {
                let mut sec = Report::new(format!("{functor}({name})"));
                match iphi(&c.cat) {
                    Ok(o) if functor == "iphi" => sec.push_section(check_cat_lie_object(&o)),
                    Ok(o) => match ipsi(&o) {
                        Ok(d) => {
                            sec.expect("RoundTrip", d == c.cat, || "ipsi(iphi(C)) differs from C".into());
                            ws.add_category(&format!("ipsi(iphi({name}))"), &d, None);
                        }
                        Err(e) => construct_error(&mut sec, e),
                    },
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "biphi" | "bipsi" => {
            for (name, c) in select(&ws.clone().categories, "category", target)? {
                let mut sec = Report::new(format!("{functor}({name})"));
                let braiding = c.braiding.clone().unwrap_or_else(|| CatBraiding::zero(c.cat.c0.dim(), c.cat.c1.dim()));
                let d = BraidedCatAlgebra { cat: c.cat.clone(), braiding };
                match biphi(&d) {
                    Ok((o, b)) if functor == "biphi" => {
                        sec.push_section(check_cat_lie_object(&o));
                        sec.push_section(check_cat_lm_braiding(&o, &b));
                    }
                    Ok((o, b)) => match bipsi(&o, &b) {
                        Ok(e) => {
                            sec.expect("RoundTrip", e == d, || "bipsi(biphi(D)) differs from D".into());
                            ws.add_category(&format!("bipsi(biphi({name}))"), &e.cat, Some(&e.braiding));
                        }
                        Err(e) => construct_error(&mut sec, e),
                    },
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        other => {
            return Err(InputError::Usage(format!("unknown functor `{other}`; expected one of {}", FUNCTORS.join(", "))))
        }
    }
    Ok(())
}

fn construct_error(sec: &mut Report, e: lbraid::Error) {
    sec.expect("Construct", false, || e.to_string());
}

fn lieize(rep: &mut Report, ws: &mut Workspace, kind: &str, target: &str) -> Result<(), InputError> {
    match kind {
        "algebra" => {
            for (name, a) in select(&ws.clone().algebras, "algebra", target)? {
                let mut sec = Report::new(format!("Lie({name})"));
                match lieization(a) {
                    Ok(q) => {
                        sec.note(format!("ideal dim {}", q.ideal().dim()));
                        sec.push_section(check_antisymmetry(&q.algebra));
                        ws.add_algebra(&q.algebra.with_name(format!("Lie({name})")));
                    }
                    Err(e) => construct_error(&mut sec, e),
                }
                rep.push_section(sec);
            }
        }
        "xmod" => {
            for (name, x) in select(&ws.clone().xmods, "xmod", target)? {
                let mut sec = Report::new(format!("Lie({name})"));
                let embedded = lieize_xmod(&x.xmod)
                    .map_err(|e| e.to_string())
                    .and_then(|q| {
                        sec.note(format!("ideal dim {}", q.ideal_m.dim()));
                        sec.push_section(check_lie_xmod(&q.m, &q.n, &q.dot, &q.bdry));
                        lie_xmod_embed(&q.m, &q.n, &q.dot, &q.bdry).map_err(|e| e.to_string())
                    });
                match embedded {
                    Ok(z) => {
                        ws.add_xmod(&format!("Lie({name})"), &z);
                    }
                    Err(e) => {
                        sec.expect("Construct", false, || e);
                    }
                }
                rep.push_section(sec);
            }
        }
        "bxmod" => {
            for (name, b) in select(&ws.clone().braidings, "braiding", target)? {
                let mut sec = Report::new(format!("Lie({name})"));
                let embedded = lieize_bxmod(&b.bxmod).map_err(|e| e.to_string()).and_then(|q| {
                    sec.note(format!("ideal dim {}", q.ideal_m.dim()));
                    sec.push_section(check_braiding_lie(&q.lie));
                    braiding_embed_lie(&q.lie).map_err(|e| e.to_string())
                });
                match embedded {
                    Ok(z) => {
                        ws.add_braiding(&format!("Lie({name})"), &z);
                    }
                    Err(e) => {
                        sec.expect("Construct", false, || e);
                    }
                }
                rep.push_section(sec);
            }
        }
        "cat" => {
            for (name, c) in select(&ws.clone().categories, "category", target)? {
                let mut sec = Report::new(format!("Lie({name})"));
                let braiding = c.braiding.clone().unwrap_or_else(|| CatBraiding::zero(c.cat.c0.dim(), c.cat.c1.dim()));
                let embedded = cat_lieization(&c.cat, &braiding).map_err(|e| e.to_string()).and_then(|q| {
                    sec.note(format!("ideal dim {}", q.ideal1.dim()));
                    sec.push_section(q.report.clone());
                    sec.push_section(check_cat_braiding_lie(&q.cat, &q.tau2));
                    cat_braiding_embed_lie(&q.cat, &q.tau2).map(|b| (q.cat, b)).map_err(|e| e.to_string())
                });
                match embedded {
                    Ok((cat, b)) => {
                        ws.add_category(&format!("Lie({name})"), &cat, Some(&b));
                    }
                    Err(e) => {
                        sec.expect("Construct", false, || e);
                    }
                }
                rep.push_section(sec);
            }
        }
        other => return Err(InputError::Usage(format!("unknown lieization `{other}`; expected algebra, xmod, bxmod or cat"))),
    }
    Ok(())
}

/// `tensor-<name>.json`, with characters outside `[A-Za-z0-9_-]` replaced by `_`.
pub fn golden_file(algebra: &str) -> String {
    let safe: String =
        algebra.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
    format!("tensor-{safe}.json")
}

/// The tensor-square pipeline on one algebra, and its golden document.
fn tensor(name: &str, a: &Algebra, golden: Option<&Path>) -> (Report, Option<String>) {
    let mut sec = Report::new(format!("tensor {name}"));
    let (x, t) = match tensor_self_xmod_in(a, Regime::Leibniz) {
        Ok(v) => v,
        Err(e) => return (failed(&format!("tensor {name}"), "Construct", e.to_string()), None),
    };
    sec.push_section(t.certificate());
    sec.push_section(check_xmod(&x));
    match tensor_braiding(a) {
        Ok(b) => sec.push_section(check_braiding_leibniz(&b)),
        Err(e) => construct_error(&mut sec, e),
    }
    sec.push_section(check_collapse_identities(&t));
    let mut computed = json!({
        "algebra": name,
        "ambient_dim": t.ambient_dim(),
        "dim": t.dim(),
        "relation_rank": t.relations().dim(),
        "structure_constants": crate::workspace::sparse_bilinear(t.algebra.sc()),
    });
    match tensor_square(a, Regime::Lie) {
        Ok(l) => computed["lie_regime_dim"] = json!(l.dim()),
        Err(e) => construct_error(&mut sec, e),
    }
    if let Some(dir) = golden {
        compare_golden(&mut sec, &dir.join(golden_file(name)), &computed);
    }
    let mut doc = serde_json::to_string_pretty(&computed).expect("json values serialize");
    doc.push('\n');
    (sec, Some(doc))
}

/// Every key of the golden document that this pipeline computes must agree.
fn compare_golden(sec: &mut Report, path: &Path, computed: &Value) {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(_) => {
            sec.note(format!("no golden file {}", path.display()));
            return;
        }
    };
    let golden: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            sec.expect("Golden", false, || format!("{}: {e}", path.display()));
            return;
        }
    };
    let Some(obj) = golden.as_object() else {
        sec.expect("Golden", false, || format!("{} is not an object", path.display()));
        return;
    };
    for (key, want) in obj {
        match computed.get(key) {
            Some(got) => {
                sec.expect("Golden", got == want, || format!("{key}: computed {got}, golden {want}"));
            }
            None => sec.note(format!("golden key `{key}` not computed here")),
        }
    }
}
