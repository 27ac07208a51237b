use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, zero_vec, Matrix, QuotientPresentation, Scalar, Vector};

/// Linear maps are plain matrices acting on column vectors; source and target
/// are carried by the caller.
pub type LinearMap = Matrix;

/// A bilinear map `K^l × K^r → K^o` stored as `b[i][j][k]` at `(i*r + j)*o + k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BilinearMap {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    coeff: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zeros(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        BilinearMap { left_dim, right_dim, out_dim, coeff: zero_vec(left_dim * right_dim * out_dim) }
    }

    pub fn from_coeff(left_dim: usize, right_dim: usize, out_dim: usize, coeff: Vec<Scalar>) -> Result<Self> {
        if coeff.len() != left_dim * right_dim * out_dim {
            return Err(Error::Shape(format!(
                "bilinear tensor {left_dim}x{right_dim}x{out_dim} given {} coefficients",
                coeff.len()
            )));
        }
        Ok(BilinearMap { left_dim, right_dim, out_dim, coeff })
    }

    /// Builds the map from its values on basis pairs.
    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut b = Self::zeros(left_dim, right_dim, out_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                let v = f(i, j);
                b.set(i, j, &v);
            }
        }
        b
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }

    pub fn coeff(&self) -> &[Scalar] {
        &self.coeff
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(i < self.left_dim && j < self.right_dim, "basis index out of range");
        (i * self.right_dim + j) * self.out_dim
    }

    /// `B(e_i, e_j)`.
    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.coeff[o..o + self.out_dim]
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.get(i, j)[k]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.out_dim, "value has the wrong dimension");
        let o = self.offset(i, j);
        self.coeff[o..o + self.out_dim].clone_from_slice(v);
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let o = self.offset(i, j);
        self.coeff[o + k] = x;
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeff)
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        assert_eq!(u.len(), self.left_dim, "left argument has the wrong dimension");
        assert_eq!(v.len(), self.right_dim, "right argument has the wrong dimension");
        let mut out = zero_vec(self.out_dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ui * vj), self.get(i, j));
            }
        }
        out
    }

    /// `B(u, e_j)` for a basis vector on the right.
    pub fn eval_left(&self, u: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vec(self.out_dim);
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                axpy(&mut out, ui, self.get(i, j));
            }
        }
        out
    }

    /// `B(e_i, v)` for a basis vector on the left.
    pub fn eval_right(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.out_dim);
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                axpy(&mut out, vj, self.get(i, j));
            }
        }
        out
    }

    /// The operator `y ↦ B(u, y)`.
    pub fn left_op(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.right_dim).map(|j| self.eval_left(u, j)).collect();
        Matrix::from_cols(self.out_dim, &cols)
    }

    /// The operator `x ↦ B(x, v)`.
    pub fn right_op(&self, v: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.left_dim).map(|i| self.eval_right(i, v)).collect();
        Matrix::from_cols(self.out_dim, &cols)
    }

    /// `(y, x) ↦ B(x, y)`.
    pub fn flip(&self) -> BilinearMap {
        BilinearMap::from_fn(self.right_dim, self.left_dim, self.out_dim, |j, i| self.get(i, j).to_vec())
    }

    fn zip(&self, rhs: &BilinearMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> BilinearMap {
        assert_eq!(self.dims(), rhs.dims(), "bilinear maps of different shapes");
        self.with_coeff(self.coeff.iter().zip(&rhs.coeff).map(|(a, b)| f(a, b)).collect())
    }

    fn with_coeff(&self, coeff: Vec<Scalar>) -> BilinearMap {
        BilinearMap { left_dim: self.left_dim, right_dim: self.right_dim, out_dim: self.out_dim, coeff }
    }

    pub fn add(&self, rhs: &BilinearMap) -> BilinearMap {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &BilinearMap) -> BilinearMap {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> BilinearMap {
        self.with_coeff(self.coeff.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> BilinearMap {
        self.with_coeff(self.coeff.iter().map(|x| -x).collect())
    }

    /// `m ∘ B`.
    pub fn compose_out(&self, m: &Matrix) -> BilinearMap {
        assert_eq!(m.cols(), self.out_dim, "output map has the wrong source");
        BilinearMap::from_fn(self.left_dim, self.right_dim, m.rows(), |i, j| m.apply(self.get(i, j)))
    }

    /// `(x, y) ↦ B(a x, b y)`.
    pub fn precompose(&self, a: &Matrix, b: &Matrix) -> BilinearMap {
        assert_eq!(a.rows(), self.left_dim, "left map has the wrong target");
        assert_eq!(b.rows(), self.right_dim, "right map has the wrong target");
        let acols: Vec<Vector> = (0..a.cols()).map(|i| a.column(i)).collect();
        let bcols: Vec<Vector> = (0..b.cols()).map(|j| b.column(j)).collect();
        BilinearMap::from_fn(a.cols(), b.cols(), self.out_dim, |i, j| self.eval(&acols[i], &bcols[j]))
    }

    /// The map induced on quotients, `(x̄, ȳ) ↦ π(B(σx̄, σȳ))`. Fails unless
    /// `B(rel_l, ·)` and `B(·, rel_r)` land in `rel_o`.
    pub fn induce(
        &self,
        ql: &QuotientPresentation,
        qr: &QuotientPresentation,
        qo: &QuotientPresentation,
    ) -> Result<BilinearMap> {
        assert_eq!(ql.ambient_dim(), self.left_dim);
        assert_eq!(qr.ambient_dim(), self.right_dim);
        assert_eq!(qo.ambient_dim(), self.out_dim);
        let rel_o = qo.relations();
        for (n, r) in ql.relations().basis_vectors().iter().enumerate() {
            for j in 0..self.right_dim {
                if !rel_o.contains(&self.eval_left(r, j)) {
                    return Err(Error::NotWellDefined(format!(
                        "left relation {n} against right basis {j} leaves the target relations"
                    )));
                }
            }
        }
        for (n, r) in qr.relations().basis_vectors().iter().enumerate() {
            for i in 0..self.left_dim {
                if !rel_o.contains(&self.eval_right(i, r)) {
                    return Err(Error::NotWellDefined(format!(
                        "right relation {n} against left basis {i} leaves the target relations"
                    )));
                }
            }
        }
        Ok(self.precompose(ql.section(), qr.section()).compose_out(qo.proj()))
    }

    /// Flattened `o × (l·r)` matrix; column `i*r + j` is `B(e_i, e_j)`.
    pub fn as_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.out_dim, self.left_dim * self.right_dim);
        for i in 0..self.left_dim {
            for j in 0..self.right_dim {
                for (k, x) in self.get(i, j).iter().enumerate() {
                    if !x.is_zero() {
                        m.set(k, i * self.right_dim + j, x.clone());
                    }
                }
            }
        }
        m
    }
}

/// The map induced by a linear map on quotients, `x̄ ↦ π(f σx̄)`. Fails unless
/// `f(rel_src) ⊆ rel_dst`.
pub fn induce_linear(f: &Matrix, src: &QuotientPresentation, dst: &QuotientPresentation) -> Result<Matrix> {
    assert_eq!(f.cols(), src.ambient_dim());
    assert_eq!(f.rows(), dst.ambient_dim());
    if !src.relations().maps_into(f, dst.relations()) {
        return Err(Error::NotWellDefined("linear map does not preserve the relations".into()));
    }
    Ok(dst.proj().mul(f).mul(src.section()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{quotient, unit_vec, Subspace};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn sample() -> BilinearMap {
        // 2×3 → 2
        BilinearMap::from_fn(2, 3, 2, |i, j| vec![s((i + j) as i64), s(i as i64 * 2 - j as i64)])
    }

    #[test]
    fn eval_matches_basis() {
        let b = sample();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(b.eval(&unit_vec(2, i), &unit_vec(3, j)), b.get(i, j));
            }
        }
        let u = vec![s(1), s(-2)];
        let v = vec![s(3), s(0), s(1)];
        assert_eq!(b.left_op(&u).apply(&v), b.eval(&u, &v));
        assert_eq!(b.right_op(&v).apply(&u), b.eval(&u, &v));
    }

    #[test]
    fn flip_twice() {
        let b = sample();
        assert_eq!(b.flip().flip(), b);
        assert_eq!(b.flip().get(2, 1), b.get(1, 2));
        assert!(b.add(&b.neg()).is_zero());
    }

    #[test]
    fn induce_rejects_bad_relations() {
        // B(x, y) = x0*y0 e0 on K^2 × K^2 → K^2
        let mut b = BilinearMap::zeros(2, 2, 2);
        b.set_entry(0, 0, 0, s(1));
        let kill0 = quotient(2, &Subspace::span(2, &[unit_vec(2, 0)]));
        let triv = QuotientPresentation::trivial(2);
        assert!(b.induce(&kill0, &triv, &triv).is_err());
        let ok = b.induce(&kill0, &triv, &kill0).unwrap();
        assert!(ok.is_zero());
    }
}
