//! The functors `𝒞` and `𝒳` between braided crossed modules and braided
//! categorical Leibniz algebras, and the natural isomorphisms `α`, `β`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BilinearMap};
use crate::braid::{check_braiding_leibniz, check_bxmod_hom, BraidedXMod, LeibnizBraiding};
use crate::error::{gate, Error, Result};
use crate::exactla::{kernel, vec_concat, vec_scale, vec_sub, zero_vec, Matrix, Scalar, Subspace, Vector};
use crate::intcat::{check_cat_braiding_leibniz, check_cat_functor, CatAlgebra, CatBraiding};
use crate::report::Report;
use crate::xmod::{semidirect, CrossedModule, LeibnizAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedCatAlgebra {
    pub cat: CatAlgebra,
    pub braiding: CatBraiding,
}

impl BraidedCatAlgebra {
    pub fn new(cat: CatAlgebra, braiding: CatBraiding) -> Result<Self> {
        gate(check_cat_braiding_leibniz(&cat, &braiding), Error::InvalidBraidedCat)?;
        Ok(BraidedCatAlgebra { cat, braiding })
    }

    pub fn check(&self) -> Report {
        check_cat_braiding_leibniz(&self.cat, &self.braiding)
    }
}

/// `𝒞(z) = (M ⋊ N, N, s̄, t̄, ē, (τ̄, ψ̄))` with `τ̄_{n,n'} = (−2{n,n'}, [n,n'])`.
pub fn functor_c(z: &BraidedXMod) -> Result<BraidedCatAlgebra> {
    gate(check_braiding_leibniz(z), Error::InvalidBraidedXMod)?;
    let x = &z.xmod;
    let (dm, dn) = (x.m().dim(), x.n().dim());
    let sd = semidirect(&x.action)?;
    let id_n = Matrix::identity(dn);
    let s = Matrix::zeros(dn, dm).hstack(&id_n);
    let t = x.bdry.hstack(&id_n);
    let e = sd.incl_n.clone();
    let minus_two = Scalar::from_int(-2);
    let lift = |b: &BilinearMap| {
        BilinearMap::from_fn(dn, dn, dm + dn, |i, j| {
            vec_concat(&vec_scale(&minus_two, b.get(i, j)), x.n().bracket_basis(i, j))
        })
    };
    let braiding = CatBraiding { tau: lift(&z.braiding.curly), psi: lift(&z.braiding.angle) };
    let cat = CatAlgebra { c1: sd.algebra, c0: x.n().clone(), s, t, e };
    Ok(BraidedCatAlgebra { cat, braiding })
}

/// `𝒳(d) = (ker s, C₀, (ᵉ·, ·ᵉ), ∂_t, ({−,−}_τ, ⟨−,−⟩_ψ))`, written in the
/// reduced-echelon basis of `ker s`.
pub fn functor_x(d: &BraidedCatAlgebra) -> Result<BraidedXMod> {
    gate(d.check(), Error::InvalidBraidedCat)?;
    let c = &d.cat;
    let ks = kernel(&c.s);
    let basis = ks.basis_vectors();
    let (k, d0) = (ks.dim(), c.c0.dim());
    let not_in_kernel = |what: &str| Error::InvalidBraidedCat(Box::new(outside_kernel(what)));
    let coords = |v: &Vector, what: &str| ks.coords(v).ok_or_else(|| not_in_kernel(what));
    let ecols: Vec<Vector> = (0..d0).map(|a| c.e.column(a)).collect();

    let mut sc = BilinearMap::zeros(k, k, k);
    let mut act1 = BilinearMap::zeros(d0, k, k);
    let mut act2 = BilinearMap::zeros(k, d0, k);
    for i in 0..k {
        for j in 0..k {
            sc.set(i, j, &coords(&c.c1.bracket(&basis[i], &basis[j]), "bracket")?);
        }
        for a in 0..d0 {
            act1.set(a, i, &coords(&c.c1.bracket(&ecols[a], &basis[i]), "left action")?);
            act2.set(i, a, &coords(&c.c1.bracket(&basis[i], &ecols[a]), "right action")?);
        }
    }
    let half = |m: &BilinearMap, what: &str| -> Result<BilinearMap> {
        let mut out = BilinearMap::zeros(d0, d0, k);
        for a in 0..d0 {
            for b in 0..d0 {
                let v = vec_sub(&c.e.apply(c.c0.bracket_basis(a, b)), m.get(a, b));
                let v: Vector = v.iter().map(Scalar::half).collect();
                out.set(a, b, &coords(&v, what)?);
            }
        }
        Ok(out)
    };
    let curly = half(&d.braiding.tau, "curly braiding")?;
    let angle = half(&d.braiding.psi, "angle braiding")?;

    let m = Algebra::new(format!("ker s({})", c.c1.name), sc)?;
    let action = LeibnizAction::new(c.c0.clone(), m, act1, act2)?;
    let bdry = c.t.mul(&ks.inclusion());
    let xmod = CrossedModule::new(action, bdry)?;
    BraidedXMod::new(xmod, LeibnizBraiding { curly, angle })
}

fn outside_kernel(what: &str) -> Report {
    let mut rep = Report::new("functor X");
    rep.expect("KernelS", false, || format!("{what} leaves ker s"));
    rep
}

/// A morphism pair together with the object it lands in and its report.
#[derive(Clone, Debug)]
pub struct Iso<T> {
    pub top: Matrix,
    pub bottom: Matrix,
    pub target: T,
    pub report: Report,
}

/// `α_z = (α_M, Id_N)` with `α_M(m) = (m, 0)`, into `𝒳(𝒞(z))`.
pub fn alpha_iso(z: &BraidedXMod) -> Result<Iso<BraidedXMod>> {
    let cz = functor_c(z)?;
    let target = functor_x(&cz)?;
    let ks = kernel(&cz.cat.s);
    let (dm, dn) = (z.m().dim(), z.n().dim());
    let cols: Vec<Vector> = (0..dm)
        .map(|i| {
            let mut v = zero_vec(dm + dn);
            v[i] = Scalar::one();
            ks.coords(&v).expect("(m, 0) lies in ker s̄")
        })
        .collect();
    let top = Matrix::from_cols(ks.dim(), &cols);
    let bottom = Matrix::identity(dn);
    let mut rep = Report::new(format!("alpha({})", z.m().name));
    rep.push_section(check_bxmod_hom(&top, &bottom, z, &target));
    rep.expect("Bijective", top.is_bijective(), || format!("α_M has rank {} of {dm}", top.rank()));
    rep.expect("Bijective", bottom.is_bijective(), || "Id_N".into());
    Ok(Iso { top, bottom, target, report: rep })
}

/// `β_d = (β_{C₁}, Id_{C₀})` with `β_{C₁}(x) = (x − e(s x), s x)`, into `𝒞(𝒳(d))`.
pub fn beta_iso(d: &BraidedCatAlgebra) -> Result<Iso<BraidedCatAlgebra>> {
    let xd = functor_x(d)?;
    let target = functor_c(&xd)?;
    let c = &d.cat;
    let ks = kernel(&c.s);
    let d1 = c.c1.dim();
    let cols: Vec<Vector> = (0..d1)
        .map(|i| {
            let mut xi = zero_vec(d1);
            xi[i] = Scalar::one();
            let sx = c.s.apply(&xi);
            let rest = vec_sub(&xi, &c.e.apply(&sx));
            let kc = ks.coords(&rest).expect("x − e(s x) lies in ker s");
            vec_concat(&kc, &sx)
        })
        .collect();
    let top = Matrix::from_cols(ks.dim() + c.c0.dim(), &cols);
    let bottom = Matrix::identity(c.c0.dim());
    let mut rep = Report::new(format!("beta({})", c.c1.name));
    rep.push_section(check_cat_functor(
        &top,
        &bottom,
        c,
        &target.cat,
        Some((&d.braiding, &target.braiding)),
    ));
    rep.expect("Bijective", top.is_bijective(), || format!("β has rank {} of {d1}", top.rank()));
    Ok(Iso { top, bottom, target, report: rep })
}

/// An object fed to [`roundtrip_check`].
#[derive(Clone, Debug)]
pub enum Seed {
    XMod(String, BraidedXMod),
    Cat(String, BraidedCatAlgebra),
}

impl Seed {
    pub fn name(&self) -> &str {
        match self {
            Seed::XMod(n, _) | Seed::Cat(n, _) => n,
        }
    }
}

/// Runs `α` on every crossed-module seed (and `β` on its image under `𝒞`)
/// and `β` on every categorical seed. Seeds failing their own axioms are
/// reported under `Precheck` and skipped.
pub fn roundtrip_check(seeds: &[Seed]) -> Report {
    let mut rep = Report::new("roundtrip");
    for seed in seeds {
        let mut sec = Report::new(seed.name());
        match seed {
            Seed::XMod(_, z) => {
                let pre = check_braiding_leibniz(z);
                if !sec.expect("Precheck", pre.passed(), || pre.summary()) {
                    rep.push_section(sec);
                    continue;
                }
                match alpha_iso(z) {
                    Ok(a) => sec.push_section(a.report),
                    Err(e) => {
                        sec.expect("Construct", false, || e.to_string());
                    }
                }
                match functor_c(z).and_then(|d| beta_iso(&d)) {
                    Ok(b) => sec.push_section(b.report),
                    Err(e) => {
                        sec.expect("Construct", false, || e.to_string());
                    }
                }
            }
            Seed::Cat(_, d) => {
                let pre = d.check();
                if !sec.expect("Precheck", pre.passed(), || pre.summary()) {
                    rep.push_section(sec);
                    continue;
                }
                match beta_iso(d) {
                    Ok(b) => sec.push_section(b.report),
                    Err(e) => {
                        sec.expect("Construct", false, || e.to_string());
                    }
                }
            }
        }
        rep.push_section(sec);
    }
    rep
}

/// `{(m, 0)}` inside `M ⋊ N`.
pub fn m_slice(dm: usize, dn: usize) -> Subspace {
    let vs: Vec<Vector> = (0..dm)
        .map(|i| {
            let mut v = zero_vec(dm + dn);
            v[i] = Scalar::one();
            v
        })
        .collect();
    Subspace::span(dm + dn, &vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braiding_embed_lie, detect_lie_collapse, identity_bxmod, LieBraidedXMod};
    use crate::exactla::vec_neg;
    use crate::fixtures::{a1, l2, r2};
    use crate::intcat::check_cat_braiding_leibniz;

    fn embedded_r2() -> BraidedXMod {
        braiding_embed_lie(&LieBraidedXMod::identity(&r2())).unwrap()
    }

    #[test]
    fn functor_c_on_l2() {
        let d = functor_c(&identity_bxmod(&l2()).unwrap()).unwrap();
        assert_eq!(d.cat.c1.dim(), 4);
        assert_eq!(d.cat.c0.dim(), 2);
        assert!(check_cat_braiding_leibniz(&d.cat, &d.braiding).passed());
        // τ̄(e1, e1) = (−2 e0, e0)
        let want: Vector = [-2, 0, 1, 0].iter().map(|&x| Scalar::from_int(x)).collect();
        assert_eq!(d.braiding.tau.get(1, 1), want.as_slice());
        assert_eq!(kernel(&d.cat.s), m_slice(2, 2));
    }

    #[test]
    fn functor_c_trivial_and_lie() {
        let d = functor_c(&BraidedXMod::trivial(&a1(), &a1())).unwrap();
        assert_eq!(d.cat.c1.dim(), 2);
        assert!(d.braiding.tau.is_zero());

        let d = functor_c(&embedded_r2()).unwrap();
        assert!(d.check().passed());
        // τ̄_{n,n'} = −ψ̄_{n',n}
        assert_eq!(d.braiding.tau, d.braiding.psi.flip().neg());
    }

    #[test]
    fn functor_x_examples() {
        // discrete category with τ = ψ = e∘bracket on an abelian algebra
        let a = Algebra::abelian("A2", 2);
        let d = BraidedCatAlgebra::new(CatAlgebra::discrete(&a), CatBraiding::zero(2, 2)).unwrap();
        let z = functor_x(&d).unwrap();
        assert_eq!(z.m().dim(), 0);

        let d = functor_c(&identity_bxmod(&l2()).unwrap()).unwrap();
        let z = functor_x(&d).unwrap();
        assert_eq!(z.m().dim(), 2);
        assert!(check_braiding_leibniz(&z).passed());
        assert_eq!(z, identity_bxmod(&l2()).unwrap());

        // Lie case: ⟨a,b⟩_ψ = −{b,a}_τ
        let z = functor_x(&functor_c(&embedded_r2()).unwrap()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(z.braiding.angle.get(i, j), vec_neg(z.braiding.curly.get(j, i)).as_slice());
            }
        }
    }

    #[test]
    fn alpha_and_beta() {
        for z in [BraidedXMod::trivial(&a1(), &a1()), identity_bxmod(&l2()).unwrap(), embedded_r2()] {
            let a = alpha_iso(&z).unwrap();
            assert!(a.report.passed(), "{}", a.report);
            assert!(a.top.is_identity());
            let d = functor_c(&z).unwrap();
            let b = beta_iso(&d).unwrap();
            assert!(b.report.passed(), "{}", b.report);
            // β ∘ e = ē
            assert_eq!(b.top.mul(&d.cat.e), b.target.cat.e);
        }
        let a = alpha_iso(&embedded_r2()).unwrap();
        assert!(detect_lie_collapse(&a.target).detected);
    }

    #[test]
    fn beta_on_discrete() {
        let a = Algebra::abelian("A2", 2);
        let d = BraidedCatAlgebra::new(CatAlgebra::discrete(&a), CatBraiding::zero(2, 2)).unwrap();
        let b = beta_iso(&d).unwrap();
        assert!(b.report.passed());
    }

    #[test]
    fn roundtrip_gate() {
        assert!(roundtrip_check(&[]).passed());
        let mut bad = identity_bxmod(&l2()).unwrap();
        bad.braiding.angle = BilinearMap::zeros(2, 2, 2);
        let rep = roundtrip_check(&[Seed::XMod("corrupted".into(), bad)]);
        assert!(rep.fails("Precheck"));
        assert_eq!(rep.sections[0].sections.len(), 0);
        let rep = roundtrip_check(&[
            Seed::XMod("identity-L2".into(), identity_bxmod(&l2()).unwrap()),
            Seed::XMod("embedded-R2".into(), embedded_r2()),
        ]);
        assert!(rep.passed(), "{rep}");
    }
}
