//! Exact dense linear algebra over a `FieldSpec`.
//!
//! Reduced row echelon form is canonical (leftmost pivots, pivot entries
//! 1, pivot columns cleared), so row spaces are compared by comparing
//! canonical bases byte for byte.

use crate::field::{FieldElement, FieldError, FieldSpec};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let entries = self.entries.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = self.field.add(&acc, self.at(i, i));
        }
        acc
    }

    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Applies the matrix to a column vector given as a slice.
    pub fn apply(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch("apply".into()));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] = f.add(&out[i], &f.mul(a, &v[j]));
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &Matrix) -> Result<(), LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Canonical reduced row echelon form: (rref, rank, pivot columns).
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pivot_row = None;
            for i in r..m.rows {
                if !m.at(i, col).is_zero() {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(p) = pivot_row else { continue };
            // Swap into place.
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = f.inv(m.at(r, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let v = f.mul(m.at(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let adj = f.mul(&factor, m.at(r, j));
                    let v = f.sub(m.at(i, j), &adj);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right kernel {x : M x = 0}, returned as a subspace of row vectors
    /// of length `cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, rank, pivots) = self.rref();
        let f = &self.field;
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (row_idx, &p) in pivots.iter().enumerate().take(rank) {
                vec[p] = f.neg(r.at(row_idx, free));
            }
            basis.push(vec);
        }
        Subspace::span(f, self.cols, basis)
    }

    /// Solves self * X = b columnwise. Returns the unique particular
    /// solution with free coordinates zero, plus the kernel.
    pub fn solve(&self, b: &Matrix) -> Result<AffineSolution, LinAlgError> {
        if b.rows != self.rows {
            return Err(LinAlgError::DimensionMismatch("rhs rows".into()));
        }
        let f = &self.field;
        // Augment.
        let mut aug = Matrix::zero(f, self.rows, self.cols + b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            for j in 0..b.cols {
                aug.set(i, self.cols + j, b.at(i, j).clone());
            }
        }
        let (r, rank, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(LinAlgError::InconsistentSystem);
        }
        let mut particular = Matrix::zero(f, self.cols, b.cols);
        for (row_idx, &p) in pivots.iter().enumerate().take(rank) {
            for j in 0..b.cols {
                particular.set(p, j, r.at(row_idx, self.cols + j).clone());
            }
        }
        Ok(AffineSolution { particular, kernel: self.kernel() })
    }

    /// Determinant by fraction-free-ish Gaussian elimination (exact
    /// field arithmetic, row swaps tracked).
    pub fn determinant(&self) -> Result<FieldElement, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::DimensionMismatch("determinant of non-square".into()));
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..m.cols {
            let mut pivot_row = None;
            for i in col..m.rows {
                if !m.at(i, col).is_zero() {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(p) = pivot_row else { return Ok(f.zero()) };
            if p != col {
                for j in 0..m.cols {
                    let a = m.at(col, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = f.neg(&det);
            }
            let piv = m.at(col, col).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).expect("nonzero pivot");
            for i in col + 1..m.rows {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let factor = f.mul(m.at(i, col), &inv);
                for j in col..m.cols {
                    let adj = f.mul(&factor, m.at(col, j));
                    let v = f.sub(m.at(i, j), &adj);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Stacks rows of several matrices (all with the same column count).
    pub fn vstack(field: &FieldSpec, parts: &[&Matrix]) -> Result<Matrix, LinAlgError> {
        let cols = parts.first().map(|m| m.cols).unwrap_or(0);
        let mut rows = Vec::new();
        for m in parts {
            if m.cols != cols {
                return Err(LinAlgError::DimensionMismatch("vstack".into()));
            }
            for i in 0..m.rows {
                rows.push(m.row(i).to_vec());
            }
        }
        Matrix::from_rows(field, rows)
    }

    /// Row-major flattening, for treating matrices as vectors.
    pub fn flatten(&self) -> Vec<FieldElement> {
        self.entries.clone()
    }

    pub fn from_flat(field: &FieldSpec, rows: usize, cols: usize, v: Vec<FieldElement>) -> Result<Matrix, LinAlgError> {
        if v.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch("from_flat".into()));
        }
        Ok(Matrix { field: field.clone(), rows, cols, entries: v })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Matrix,
    pub kernel: Subspace,
}

/// A subspace of row vectors, stored by its canonical RREF basis.
/// Equality of subspaces is literal equality of the stored bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &FieldSpec, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        let basis = (0..ambient).map(|i| id.row(i).to_vec()).collect();
        Subspace { field: field.clone(), ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(field: &FieldSpec, ambient: usize, vectors: Vec<Vec<FieldElement>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors).expect("validated");
        let (r, rank, pivots) = m.rref();
        let basis = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { field: field.clone(), ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zero(&self.field, 0, self.ambient)
        } else {
            Matrix::from_rows(&self.field, self.basis.clone()).expect("canonical basis")
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.clone());
        Ok(Subspace::span(&self.field, self.ambient, vecs))
    }

    /// Intersection via the kernel of [U^T | -V^T].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let f = &self.field;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        let r = self.dim();
        let s = other.dim();
        let mut m = Matrix::zero(f, self.ambient, r + s);
        for (k, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, k, v[i].clone());
            }
        }
        for (k, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, r + k, f.neg(&v[i]));
            }
        }
        let ker = m.kernel();
        let mut vecs = Vec::new();
        for coeffs in ker.basis() {
            let mut v = vec![f.zero(); self.ambient];
            for (k, basis_vec) in self.basis.iter().enumerate() {
                if coeffs[k].is_zero() {
                    continue;
                }
                for i in 0..self.ambient {
                    v[i] = f.add(&v[i], &f.mul(&coeffs[k], &basis_vec[i]));
                }
            }
            vecs.push(v);
        }
        Ok(Subspace::span(f, self.ambient, vecs))
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        self.reduce_vector(v).iter().all(|c| c.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Reduces v modulo the subspace: subtracts the unique combination
    /// of basis rows matching v on pivot columns. The result is zero
    /// iff v belongs to the subspace.
    pub fn reduce_vector(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut w: Vec<FieldElement> = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for i in 0..self.ambient {
                let adj = f.mul(&c, &row[i]);
                w[i] = f.sub(&w[i], &adj);
            }
        }
        w
    }

    /// Coordinates of v in the canonical basis; None when v is outside.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let f = &self.field;
        let mut w: Vec<FieldElement> = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].clone();
            coords.push(c.clone());
            if !c.is_zero() {
                for i in 0..self.ambient {
                    let adj = f.mul(&c, &row[i]);
                    w[i] = f.sub(&w[i], &adj);
                }
            }
        }
        if w.iter().all(|c| c.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    /// Representatives completing `sub` to `self` (requires sub ⊆ self):
    /// the canonical basis rows of `self` whose pivots are not pivots of
    /// `sub`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<Vec<FieldElement>>, LinAlgError> {
        self.check_ambient(sub)?;
        if !self.contains(sub) {
            return Err(LinAlgError::DimensionMismatch(
                "quotient_basis requires a contained subspace".into(),
            ));
        }
        let out = self
            .basis
            .iter()
            .zip(&self.pivots)
            .filter(|(_, p)| !sub.pivots.contains(p))
            .map(|(v, _)| v.clone())
            .collect();
        Ok(out)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(LinAlgError::DimensionMismatch("ambient mismatch".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
        let f = q();
        let data = (0..rows)
            .map(|_| (0..cols).map(|_| f.from_int(rng.gen_range(-bound..=bound))).collect())
            .collect();
        Matrix::from_rows(&f, data).unwrap()
    }

    /// Independent rank oracle: the largest k with a nonzero k x k minor,
    /// determinants by cofactor expansion.
    fn rank_by_minors(m: &Matrix) -> usize {
        fn det_cofactor(f: &FieldSpec, m: &Vec<Vec<FieldElement>>) -> FieldElement {
            let n = m.len();
            if n == 0 {
                return f.one();
            }
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = f.zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<FieldElement>> = (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
                    .collect();
                let term = f.mul(&m[0][j], &det_cofactor(f, &minor));
                acc = if j % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
            }
            acc
        }
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = Vec::new();
            for rest in combinations(n - 1, k - 1) {
                let mut v = rest.clone();
                v.push(n - 1);
                out.push(v);
            }
            out.extend(combinations(n - 1, k));
            out
        }
        let f = &m.field;
        for k in (1..=m.rows.min(m.cols)).rev() {
            for rows in combinations(m.rows, k) {
                for cols in combinations(m.cols, k) {
                    let sub: Vec<Vec<FieldElement>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m.at(i, j).clone()).collect())
                        .collect();
                    if !det_cofactor(f, &sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_rank_matches_minor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..12 {
            let m = rand_matrix(&mut rng, 5, 5, 3);
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
        // Fixed instances with forced rank deficiency.
        let f = q();
        let mut rng2 = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..6 {
            let a = rand_matrix(&mut rng2, 3, 5, 3);
            // Duplicate and combine rows to force rank <= 3.
            let mut rows: Vec<Vec<FieldElement>> = (0..3).map(|i| a.row(i).to_vec()).collect();
            let combo: Vec<FieldElement> = (0..5)
                .map(|j| f.add(a.at(0, j), a.at(2, j)))
                .collect();
            rows.push(combo);
            rows.push(a.row(1).to_vec());
            let m = Matrix::from_rows(&f, rows).unwrap();
            assert!(m.rank() <= 3);
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let m = rand_matrix(&mut rng, 4, 6, 4);
            let (r1, rank1, p1) = m.rref();
            let (r2, rank2, p2) = r1.rref();
            assert_eq!(r1, r2);
            assert_eq!(rank1, rank2);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn solve_identity_and_residual() {
        let f = q();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let id = Matrix::identity(&f, 4);
        let v = rand_matrix(&mut rng, 4, 1, 9);
        let sol = id.solve(&v).unwrap();
        assert_eq!(sol.particular, v);
        assert_eq!(sol.kernel.dim(), 0);

        for _ in 0..10 {
            let a = rand_matrix(&mut rng, 4, 6, 3);
            let x = rand_matrix(&mut rng, 6, 2, 3);
            let b = a.mul(&x).unwrap();
            let sol = a.solve(&b).unwrap();
            // Residual check: a * particular == b exactly.
            assert_eq!(a.mul(&sol.particular).unwrap(), b);
            // Kernel vectors annihilate a.
            for k in sol.kernel.basis() {
                let kv = Matrix::from_rows(&f, vec![k.clone()]).unwrap().transpose();
                assert!(a.mul(&kv).unwrap().is_zero());
            }
            // rank-nullity
            assert_eq!(a.rank() + sol.kernel.dim(), 6);
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = q();
        // x + y = 1, x + y = 2
        let a = Matrix::from_rows(&f, vec![vec![f.one(), f.one()], vec![f.one(), f.one()]]).unwrap();
        let b = Matrix::from_rows(&f, vec![vec![f.one()], vec![f.from_int(2)]]).unwrap();
        assert_eq!(a.solve(&b).unwrap_err(), LinAlgError::InconsistentSystem);
    }

    #[test]
    fn grassmann_identity_seeded_sample() {
        let f = q();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let n = 6;
            let du = rng.gen_range(0..=4);
            let dv = rng.gen_range(0..=4);
            let mk = |rng: &mut ChaCha8Rng, d: usize| {
                let vecs = (0..d)
                    .map(|_| (0..n).map(|_| f.from_int(rng.gen_range(-3..=3))).collect())
                    .collect();
                Subspace::span(&f, n, vecs)
            };
            let u = mk(&mut rng, du);
            let v = mk(&mut rng, dv);
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            assert!(s.contains(&u) && s.contains(&v));
            assert!(u.contains(&i) && v.contains(&i));
        }
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let f = q();
        // Same plane described by different spanning sets.
        let a = Subspace::span(
            &f,
            3,
            vec![
                vec![f.one(), f.zero(), f.one()],
                vec![f.zero(), f.one(), f.one()],
            ],
        );
        let b = Subspace::span(
            &f,
            3,
            vec![
                vec![f.one(), f.one(), f.from_int(2)],
                vec![f.from_int(2), f.one(), f.from_int(3)],
                vec![f.from_int(3), f.from_int(2), f.from_int(5)],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_basis_completes() {
        let f = q();
        let u = Subspace::full(&f, 4);
        let v = Subspace::span(
            &f,
            4,
            vec![vec![f.one(), f.zero(), f.zero(), f.one()]],
        );
        let reps = u.quotient_basis(&v).unwrap();
        assert_eq!(reps.len(), 3);
        let mut all = reps;
        all.extend(v.basis().to_vec());
        assert_eq!(Subspace::span(&f, 4, all).dim(), 4);
        // Membership test.
        assert!(v.contains_vector(&[f.from_int(2), f.zero(), f.zero(), f.from_int(2)]));
        assert!(!v.contains_vector(&[f.from_int(2), f.zero(), f.zero(), f.one()]));
    }

    #[test]
    fn determinant_multiplicative_seeded() {
        let f = q();
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..8 {
            let a = rand_matrix(&mut rng, 4, 4, 3);
            let b = rand_matrix(&mut rng, 4, 4, 3);
            let ab = a.mul(&b).unwrap();
            assert_eq!(
                ab.determinant().unwrap(),
                f.mul(&a.determinant().unwrap(), &b.determinant().unwrap())
            );
        }
    }
}
