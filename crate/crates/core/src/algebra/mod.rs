//! Structure-constant algebras, Leibniz/Lie verification, ideals, quotients
//! and Lieization.

mod bilinear;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bilinear::{induce_linear, BilinearMap, LinearMap};

use crate::error::{Error, Result};
use crate::exactla::{quotient, unit_vec, vec_add, Matrix, QuotientPresentation, Scalar, Subspace, Vector};
use crate::report::Report;

/// A finite-dimensional algebra, `[e_i, e_j] = Σ_k sc[i][j][k] e_k`.
///
/// No axiom is assumed; equality ignores the name.
#[derive(Clone, Serialize, Deserialize)]
pub struct Algebra {
    pub name: String,
    sc: BilinearMap,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.sc == other.sc
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.dim())
    }
}

impl Algebra {
    pub fn new(name: impl Into<String>, sc: BilinearMap) -> Result<Self> {
        let (l, r, o) = sc.dims();
        if l != r || r != o {
            return Err(Error::Shape(format!("structure constants of shape {l}x{r}x{o}")));
        }
        Ok(Algebra { name: name.into(), sc })
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        Algebra { name: name.into(), sc: BilinearMap::zeros(dim, dim, dim) }
    }

    /// Sparse constructor: `(i, j, [(k, c)])` sets `[e_i, e_j] = Σ c e_k`.
    pub fn from_brackets(name: impl Into<String>, dim: usize, entries: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let mut sc = BilinearMap::zeros(dim, dim, dim);
        for &(i, j, coeffs) in entries {
            for &(k, c) in coeffs {
                sc.set_entry(i, j, k, Scalar::from_int(c));
            }
        }
        Algebra { name: name.into(), sc }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.sc.left_dim()
    }

    pub fn sc(&self) -> &BilinearMap {
        &self.sc
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.sc.eval(u, v)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.sc.get(i, j)
    }

    /// `y ↦ [e_i, y]`
    pub fn left_mul(&self, i: usize) -> Matrix {
        self.sc.left_op(&unit_vec(self.dim(), i))
    }

    /// `x ↦ [x, e_i]`
    pub fn right_mul(&self, i: usize) -> Matrix {
        self.sc.right_op(&unit_vec(self.dim(), i))
    }

    /// All left and right multiplications by basis elements.
    pub fn multiplication_ops(&self) -> Vec<Matrix> {
        (0..self.dim()).flat_map(|i| [self.left_mul(i), self.right_mul(i)]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.is_zero()
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        let inv = p.inverse().ok_or_else(|| Error::Shape("change of basis is not invertible".into()))?;
        let sc = self.sc.precompose(p, p).compose_out(&inv);
        Algebra::new(self.name.clone(), sc)
    }

    /// `A ⊕ B` with `A`'s basis first.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let (a, b) = (self.dim(), other.dim());
        let n = a + b;
        let sc = BilinearMap::from_fn(n, n, n, |i, j| {
            let mut v = vec![Scalar::zero(); n];
            if i < a && j < a {
                v[..a].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= a && j >= a {
                v[a..].clone_from_slice(other.bracket_basis(i - a, j - a));
            }
            v
        });
        Algebra { name: format!("{}+{}", self.name, other.name), sc }
    }
}

/// Leibniz identity `[x,[y,z]] = [[x,y],z] − [[x,z],y]` on all basis triples.
pub fn check_leibniz(a: &Algebra) -> Report {
    let mut rep = Report::new(format!("leibniz({})", a.name));
    rep.check("Leibniz");
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.sc.eval_right(i, a.bracket_basis(j, k));
                let xy_z = a.sc.eval_left(a.bracket_basis(i, j), k);
                let xz_y = a.sc.eval_left(a.bracket_basis(i, k), j);
                let rhs = crate::exactla::vec_sub(&xy_z, &xz_y);
                rep.expect_eq("Leibniz", 0, &[i, j, k], &lhs, &rhs);
            }
        }
    }
    rep
}

/// `[e_i, e_j] = −[e_j, e_i]` for `i ≤ j`.
pub fn check_antisymmetry(a: &Algebra) -> Report {
    let mut rep = Report::new(format!("antisymmetry({})", a.name));
    rep.check("Antisymmetry");
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let s = vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i));
            rep.expect_zero("Antisymmetry", 0, &[i, j], &s);
        }
    }
    rep
}

/// Leibniz and antisymmetry together.
pub fn check_lie(a: &Algebra) -> Report {
    let mut rep = Report::new(format!("lie({})", a.name));
    rep.push_section(check_leibniz(a));
    rep.push_section(check_antisymmetry(a));
    rep
}

pub fn is_leibniz(a: &Algebra) -> bool {
    check_leibniz(a).passed()
}

pub fn is_lie(a: &Algebra) -> bool {
    check_antisymmetry(a).passed() && check_leibniz(a).passed()
}

/// `f[e_i, e_j] = [f e_i, f e_j]` on all basis pairs.
pub fn check_hom(f: &Matrix, src: &Algebra, dst: &Algebra) -> Report {
    let mut rep = Report::new(format!("hom({} -> {})", src.name, dst.name));
    if !rep.expect("Shape", f.cols() == src.dim() && f.rows() == dst.dim(), || {
        format!("{}x{} map between dims {} and {}", f.rows(), f.cols(), src.dim(), dst.dim())
    }) {
        return rep;
    }
    rep.check("Hom");
    let cols: Vec<Vector> = (0..src.dim()).map(|i| f.column(i)).collect();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply(src.bracket_basis(i, j));
            let rhs = dst.bracket(&cols[i], &cols[j]);
            rep.expect_eq("Hom", 0, &[i, j], &lhs, &rhs);
        }
    }
    rep
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_closure(a: &Algebra, seed: &Subspace) -> Subspace {
    assert_eq!(seed.ambient_dim(), a.dim(), "seed lives in another space");
    seed.close_under(&a.multiplication_ops())
}

pub fn is_ideal(a: &Algebra, i: &Subspace) -> bool {
    a.multiplication_ops().iter().all(|op| i.maps_into(op, i))
}

/// A quotient algebra together with its presentation.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub pres: QuotientPresentation,
}

impl Quotient {
    pub fn proj(&self) -> &Matrix {
        self.pres.proj()
    }

    pub fn section(&self) -> &Matrix {
        self.pres.section()
    }

    pub fn ideal(&self) -> &Subspace {
        self.pres.relations()
    }
}

pub fn quotient_algebra(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if !is_ideal(a, ideal) {
        return Err(Error::NotAnIdeal(format!("subspace of dim {} in {}", ideal.dim(), a.name)));
    }
    let pres = quotient(a.dim(), ideal);
    let sc = a.sc.induce(&pres, &pres, &pres)?;
    let name = if ideal.is_zero() { a.name.clone() } else { format!("{}/I", a.name) };
    Ok(Quotient { algebra: Algebra::new(name, sc)?, pres })
}

/// `[e_i, e_i]` and `[e_i, e_j] + [e_j, e_i]`: spans the squares `[x, x]`.
pub fn square_generators(a: &Algebra) -> Vec<Vector> {
    let n = a.dim();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(a.bracket_basis(i, i).to_vec());
        for j in i + 1..n {
            out.push(vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i)));
        }
    }
    out
}

/// `Lie(A) = A / I_A`.
pub fn lieization(a: &Algebra) -> Result<Quotient> {
    let rep = check_leibniz(a);
    if !rep.passed() {
        return Err(Error::NotLeibniz(Box::new(rep)));
    }
    let seed = Subspace::span(a.dim(), &square_generators(a));
    let q = quotient_algebra(a, &ideal_closure(a, &seed))?;
    let name = if q.ideal().is_zero() { a.name.clone() } else { format!("Lie({})", a.name) };
    Ok(Quotient { algebra: q.algebra.with_name(name), pres: q.pres })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a1, l2, r2};

    #[test]
    fn leibniz_fixtures() {
        assert!(check_leibniz(&a1()).passed());
        assert!(check_leibniz(&l2()).passed());
        assert!(check_leibniz(&r2()).passed());
    }

    #[test]
    fn leibniz_failure_lists_triples() {
        // [e0,e0] = e1, [e1,e0] = e0
        let bad = Algebra::from_brackets("bad", 2, &[(0, 0, &[(1, 1)]), (1, 0, &[(0, 1)])]);
        let rep = check_leibniz(&bad);
        assert!(!rep.passed());
        // (e1,e0,e0): both sides vanish
        assert!(!rep.violations.iter().any(|v| v.indices == [1, 0, 0]));
        // (e0,e1,e0): [e0,[e1,e0]] = e1, [[e0,e1],e0] − [[e0,e0],e1] = 0
        let v = rep.violations.iter().find(|v| v.indices == [0, 1, 0]).unwrap();
        assert_eq!(v.residual, vec![Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn antisymmetry_fixtures() {
        assert!(check_antisymmetry(&a1()).passed());
        let rep = check_antisymmetry(&l2());
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].indices, vec![1, 1]);
        assert!(check_antisymmetry(&r2()).passed());
    }

    #[test]
    fn hom_examples() {
        let l = l2();
        assert!(check_hom(&Matrix::identity(2), &l, &l).passed());
        assert!(check_hom(&Matrix::zeros(1, 2), &l, &a1()).passed());
        let q = lieization(&l).unwrap();
        assert!(check_hom(q.proj(), &l, &q.algebra).passed());
        // doubling is not a hom of L2: 2e0 ≠ 4e0
        assert!(!check_hom(&Matrix::identity(2).scale(&Scalar::from_int(2)), &l, &l).passed());
    }

    #[test]
    fn ideal_closure_examples() {
        let e0 = Subspace::span(2, &[unit_vec(2, 0)]);
        assert!(ideal_closure(&l2(), &Subspace::zero(2)).is_zero());
        assert_eq!(ideal_closure(&l2(), &e0), e0);
        assert_eq!(ideal_closure(&r2(), &e0), e0);
        // e1 generates everything in R2
        let e1 = Subspace::span(2, &[unit_vec(2, 1)]);
        assert_eq!(ideal_closure(&r2(), &e1), Subspace::full(2));
    }

    #[test]
    fn quotient_examples() {
        let l = l2();
        let q = quotient_algebra(&l, &Subspace::zero(2)).unwrap();
        assert_eq!(q.algebra, l);
        assert!(q.proj().is_identity());
        let q = quotient_algebra(&l, &Subspace::span(2, &[unit_vec(2, 0)])).unwrap();
        assert_eq!(q.algebra, Algebra::abelian("", 1));
        let q = quotient_algebra(&l, &Subspace::full(2)).unwrap();
        assert_eq!(q.algebra.dim(), 0);
        assert!(matches!(
            quotient_algebra(&r2(), &Subspace::span(2, &[unit_vec(2, 1)])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn lieization_examples() {
        let q = lieization(&r2()).unwrap();
        assert!(q.ideal().is_zero());
        assert_eq!(q.algebra, r2());
        let q = lieization(&l2()).unwrap();
        assert_eq!(q.algebra, Algebra::abelian("", 1));
        assert_eq!(q.ideal(), &Subspace::span(2, &[unit_vec(2, 0)]));
        assert_eq!(lieization(&a1()).unwrap().algebra, a1());
        let bad = Algebra::from_brackets("bad", 2, &[(0, 0, &[(1, 1)]), (1, 0, &[(0, 1)])]);
        assert!(matches!(lieization(&bad), Err(Error::NotLeibniz(_))));
    }

    #[test]
    fn change_basis_preserves_leibniz() {
        let p = Matrix::from_i64(&[&[1, 2], &[1, 3]]);
        let b = l2().change_basis(&p).unwrap();
        assert!(check_leibniz(&b).passed());
        assert!(check_hom(&p, &b, &l2()).passed());
    }
}
