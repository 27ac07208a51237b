//! The shipped fixture suite. `fixtures/fixtures.json` is generated from
//! [`fixture_workspace`] and is the default input of the binary.

use lbraid::braid::identity_bxmod;
use lbraid::equiv::functor_c;
use lbraid::fixtures::{a1, all_algebras, r2, standard_seeds};
use lbraid::intcat::CatAlgebra;
use lbraid::xmod::{CrossedModule, LeibnizAction};
use lbraid::{CatBraiding, Scalar};

use crate::workspace::Workspace;

pub const FIXTURES_JSON: &str = include_str!("../fixtures/fixtures.json");

pub fn fixture_workspace() -> Workspace {
    let mut ws = Workspace::default();
    for a in all_algebras() {
        let name = ws.add_algebra(&a);
        ws.add_action(&format!("ad-{name}"), &LeibnizAction::adjoint(&a));
        ws.add_xmod(&format!("id-{name}"), &CrossedModule::identity(&a));
    }
    let seeds = standard_seeds();
    for (name, b) in &seeds {
        ws.add_braiding(name, b);
    }
    ws.add_braiding("identity-R2", &identity_bxmod(&r2()).expect("R2 is Leibniz"));
    for (name, b) in &seeds {
        let d = functor_c(b).expect("seeds are braided crossed modules");
        ws.add_category(&format!("C({name})"), &d.cat, Some(&d.braiding));
    }
    let a = a1();
    ws.add_category("discrete-A1", &CatAlgebra::discrete(&a), Some(&CatBraiding::zero(1, 1)));

    // {e1, e1} doubled: breaks the boundary condition.
    let mut bad = identity_bxmod(&lbraid::fixtures::l2()).expect("L2 is Leibniz");
    bad.braiding.curly.set_entry(1, 1, 0, Scalar::from_int(2));
    ws.add_braiding("corrupted-fixture", &bad);
    ws
}

pub fn builtin() -> Workspace {
    crate::workspace::parse(FIXTURES_JSON).expect("shipped fixtures parse")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workspace::{parse, serialize};

    /// Set `UPDATE_FIXTURES=1` to rewrite the shipped file.
    #[test]
    fn shipped_file_is_current() {
        let text = serialize(&fixture_workspace());
        if std::env::var_os("UPDATE_FIXTURES").is_some() {
            std::fs::write(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fixtures.json"), &text).unwrap();
            return;
        }
        assert_eq!(FIXTURES_JSON, text, "fixtures/fixtures.json is stale; rerun with UPDATE_FIXTURES=1");
        assert_eq!(parse(&text).unwrap(), fixture_workspace());
    }
}
