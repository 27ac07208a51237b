//! Subspaces in reduced row-echelon form, kernels, quotients and pullbacks.

use serde::{Deserialize, Serialize};

use super::matrix::{axpy, is_zero_vec, rref_with_pivots, unit_vec, zero_vec, Matrix, Vector};
use super::scalar::Scalar;

/// A subspace of `K^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon basis. Two subspaces are equal iff their stored bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec());
        Self::row_space(&m)
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let rows = r.row_vectors().into_iter().take(pivots.len()).collect();
        Subspace { ambient_dim: m.cols(), basis: Matrix::from_rows(m.cols(), rows), pivots }
    }

    /// Column space (image) of a matrix.
    pub fn image(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Reduces `v` against the basis; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "vector is not in the ambient space");
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = -&w[p];
                axpy(&mut w, &c, self.basis.row(r));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the stored basis.
    pub fn from_coords(&self, c: &[Scalar]) -> Vector {
        assert_eq!(c.len(), self.dim());
        let mut v = zero_vec(self.ambient_dim);
        for (r, x) in c.iter().enumerate() {
            axpy(&mut v, x, self.basis.row(r));
        }
        v
    }

    /// Inclusion map `K^dim → K^ambient_dim`.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Adds `v` to the subspace, keeping the basis reduced. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip().expect("nonzero");
        let w: Vector = w.iter().map(|x| x * &inv).collect();
        let mut rows = self.basis.row_vectors();
        for row in rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &w);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        rows.insert(at, w);
        self.pivots.insert(at, p);
        self.basis = Matrix::from_rows(self.ambient_dim, rows);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut s = self.clone();
        for v in other.basis_vectors() {
            s.insert(&v);
        }
        s
    }

    /// Smallest subspace containing `self` and stable under every operator in `ops`.
    pub fn close_under(&self, ops: &[Matrix]) -> Subspace {
        for op in ops {
            assert!(
                op.rows() == self.ambient_dim && op.cols() == self.ambient_dim,
                "operator shape does not match ambient space"
            );
        }
        let mut s = self.clone();
        let mut queue = s.basis_vectors();
        while let Some(v) = queue.pop() {
            for op in ops {
                let w = op.apply(&v);
                if s.insert(&w) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// `op(self) ⊆ target`
    pub fn maps_into(&self, op: &Matrix, target: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| target.contains(&op.apply(v)))
    }
}

/// Right null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = unit_vec(n, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// `{(x, y) : f x = g y}` inside `K^(f.cols) ⊕ K^(g.cols)`.
pub fn pullback_subspace(f: &Matrix, g: &Matrix) -> Subspace {
    assert_eq!(f.rows(), g.rows(), "pullback maps must share a codomain");
    kernel(&f.hstack(&g.neg()))
}

/// A quotient `K^ambient_dim / relations` with a projection and a section.
///
/// Quotient coordinates are the non-pivot coordinates of the reduced relation
/// basis, in increasing order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientPresentation {
    ambient_dim: usize,
    relations: Subspace,
    proj: Matrix,
    section: Matrix,
}

impl QuotientPresentation {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Identity presentation (zero relations).
    pub fn trivial(n: usize) -> Self {
        quotient(n, &Subspace::zero(n))
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.proj.apply(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vector {
        self.section.apply(q)
    }
}

pub fn quotient(ambient_dim: usize, rel: &Subspace) -> QuotientPresentation {
    assert_eq!(rel.ambient_dim(), ambient_dim, "relation subspace lives elsewhere");
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !rel.pivots().contains(c)).collect();
    let qdim = free.len();
    let mut proj = Matrix::zeros(qdim, ambient_dim);
    for j in 0..ambient_dim {
        let r = rel.reduce(&unit_vec(ambient_dim, j));
        for (i, &f) in free.iter().enumerate() {
            proj.set(i, j, r[f].clone());
        }
    }
    let mut section = Matrix::zeros(ambient_dim, qdim);
    for (i, &f) in free.iter().enumerate() {
        section.set(f, i, Scalar::one());
    }
    QuotientPresentation { ambient_dim, relations: rel.clone(), proj, section }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::matrix::rref;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        assert!(kernel(&Matrix::identity(3)).is_zero());
        let k = kernel(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k, Subspace::span(2, &[v(&[1, -1])]));
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(2, &Subspace::span(2, &[v(&[1, 0])]));
        assert_eq!(q.dim(), 1);
        assert_eq!(q.proj(), &Matrix::from_i64(&[&[0, 1]]));

        let q = quotient(3, &Subspace::zero(3));
        assert!(q.proj().is_identity());

        let rel = Subspace::span(3, &[v(&[1, 1, 0])]);
        let q = quotient(3, &rel);
        assert_eq!(q.dim(), 2);
        assert!(q.proj().mul(q.section()).is_identity());
        assert!(is_zero_vec(&q.project(&v(&[1, 1, 0]))));
        assert!(!is_zero_vec(&q.project(&v(&[1, 0, 0]))));
    }

    #[test]
    fn pullback_examples() {
        let one = Matrix::identity(1);
        assert_eq!(pullback_subspace(&one, &one), Subspace::span(2, &[v(&[1, 1])]));
        let z = Matrix::zeros(1, 1);
        assert_eq!(pullback_subspace(&z, &z), Subspace::full(2));
        let f = Matrix::from_i64(&[&[1, 0]]);
        let g = Matrix::from_i64(&[&[0, 1]]);
        let p = pullback_subspace(&f, &g);
        assert_eq!(p.dim(), 3);
        for b in p.basis_vectors() {
            assert_eq!(f.apply(&b[..2]), g.apply(&b[2..]));
        }
    }

    #[test]
    fn insert_matches_span() {
        let vs = [v(&[0, 2, 4]), v(&[1, 1, 1]), v(&[1, 2, 3]), v(&[0, 0, 5])];
        let mut s = Subspace::zero(3);
        for x in &vs {
            s.insert(x);
        }
        assert_eq!(s, Subspace::span(3, &vs));
        let full = rref(&Matrix::from_rows(3, vs.to_vec())).0;
        assert_eq!(s.basis_vectors(), full.row_vectors()[..s.dim()].to_vec());
    }

    #[test]
    fn close_under_shift() {
        // nilpotent shift e2 -> e1 -> e0
        let shift = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let s = Subspace::span(3, &[v(&[0, 0, 1])]).close_under(&[shift]);
        assert_eq!(s, Subspace::full(3));
        let coords = s.coords(&v(&[3, -1, 2])).unwrap();
        assert_eq!(s.from_coords(&coords), v(&[3, -1, 2]));
    }
}
