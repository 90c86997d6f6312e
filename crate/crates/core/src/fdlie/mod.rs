//! Finite-dimensional Lie algebras presented by sparse structure
//! constants over an exact field.
//!
//! Antisymmetry is structural: brackets are stored for basis pairs
//! i < j only and the i > j values are derived. The Jacobi identity is
//! validated at construction; `from_sc_unchecked` exists so that raw
//! antisymmetric tensors can be probed for their Jacobi defect.

pub mod cohomology;
pub mod derivations;
pub mod radical;
pub mod standard;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::linalg::{LinAlgError, Matrix, Subspace};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

pub type SparseVec = Vec<(usize, FieldElement)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("Jacobi identity fails at basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("action is not by derivations or not a homomorphism")]
    NotADerivationAction,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure constant index out of range")]
    BadIndex,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimLie {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub defect: Vec<FieldElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutantKind {
    Centralizer,
    Normalizer,
}

/// Quotient bookkeeping: representatives are the standard basis vectors
/// at the non-pivot columns of the ideal's canonical basis.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub ideal: Subspace,
    pub rep_cols: Vec<usize>,
}

impl QuotientMap {
    pub fn project(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        let reduced = self.ideal.reduce_vector(x);
        self.rep_cols.iter().map(|&c| reduced[c].clone()).collect()
    }

    pub fn lift(&self, q: &[FieldElement], field: &FieldSpec, ambient: usize) -> Vec<FieldElement> {
        let mut out = vec![field.zero(); ambient];
        for (k, &c) in self.rep_cols.iter().enumerate() {
            out[c] = q[k].clone();
        }
        out
    }
}

impl FinDimLie {
    /// Builds an algebra from sparse structure constants (pairs i < j
    /// only) and validates the Jacobi identity.
    pub fn from_sc(
        field: FieldSpec,
        dim: usize,
        labels: Vec<String>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, LieError> {
        let g = Self::from_sc_unchecked(field, dim, labels, brackets)?;
        if let Some(w) = g.jacobi_defect() {
            return Err(LieError::JacobiViolation(w.triple.0, w.triple.1, w.triple.2));
        }
        Ok(g)
    }

    /// Same as `from_sc` but skips Jacobi validation. Antisymmetry is
    /// still structural.
    pub fn from_sc_unchecked(
        field: FieldSpec,
        dim: usize,
        labels: Vec<String>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, LieError> {
        let labels = if labels.is_empty() {
            (0..dim).map(|i| format!("x{i}")).collect()
        } else {
            labels
        };
        if labels.len() != dim {
            return Err(LieError::DimensionMismatch("labels".into()));
        }
        for ((i, j), v) in &brackets {
            if *i >= *j || *j >= dim {
                return Err(LieError::BadIndex);
            }
            if v.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::BadIndex);
            }
        }
        Ok(FinDimLie { field, dim, labels, brackets })
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        FinDimLie::from_sc(field, dim, Vec::new(), BTreeMap::new()).expect("abelian is a Lie algebra")
    }

    /// Bracket of basis vectors, any index order.
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, self.field.neg(c))).collect())
                .unwrap_or_default()
        }
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.brackets
    }

    pub fn zero_vec(&self) -> Vec<FieldElement> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<FieldElement> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn bracket_eval(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let f = &self.field;
        let mut out = self.zero_vec();
        for ((i, j), v) in &self.brackets {
            // coefficient x_i y_j - x_j y_i
            let a = f.mul(&x[*i], &y[*j]);
            let b = f.mul(&x[*j], &y[*i]);
            let c = f.sub(&a, &b);
            if c.is_zero() {
                continue;
            }
            for (k, s) in v {
                out[*k] = f.add(&out[*k], &f.mul(&c, s));
            }
        }
        out
    }

    /// First basis triple i < j < k with nonzero Jacobi sum, with the
    /// defect vector; None when the tensor satisfies Jacobi.
    pub fn jacobi_defect(&self) -> Option<JacobiWitness> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let d = self.jacobi_sum(i, j, k);
                    if d.iter().any(|c| !c.is_zero()) {
                        return Some(JacobiWitness { triple: (i, j, k), defect: d });
                    }
                }
            }
        }
        None
    }

    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<FieldElement> {
        let f = &self.field;
        let mut out = self.zero_vec();
        let add_term = |ab: &SparseVec, c: usize, out: &mut Vec<FieldElement>| {
            for (m, coef) in ab {
                for (t, coef2) in self.basis_bracket(*m, c) {
                    out[t] = f.add(&out[t], &f.mul(coef, &coef2));
                }
            }
        };
        let ij = self.basis_bracket(i, j);
        let jk = self.basis_bracket(j, k);
        let ki = self.basis_bracket(k, i);
        add_term(&ij, k, &mut out);
        add_term(&jk, i, &mut out);
        add_term(&ki, j, &mut out);
        out
    }

    /// Matrix of ad(x) acting on column vectors.
    pub fn ad(&self, x: &[FieldElement]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zero(f, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket_eval(x, &self.basis_vec(j));
            for i in 0..self.dim {
                if !col[i].is_zero() {
                    m.set(i, j, col[i].clone());
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&self.basis_vec(i))
    }

    /// Span of brackets of basis vectors of two subspaces.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                vecs.push(self.bracket_eval(a, b));
            }
        }
        Subspace::span(&self.field, self.dim, vecs)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = self.full_space();
        self.bracket_subspaces(&full, &full)
    }

    /// Derived or lower central series, strictly decreasing, including
    /// the stable term.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let full = self.full_space();
        let mut chain = vec![full.clone()];
        loop {
            let cur = chain.last().unwrap();
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(cur, cur),
                SeriesKind::LowerCentral => self.bracket_subspaces(&full, cur),
            };
            if &next == cur {
                break;
            }
            chain.push(next);
        }
        chain
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).last().unwrap().dim() == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).last().unwrap().dim() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = self.bracket_subspaces(s, s);
        s.contains(&b)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let b = self.bracket_subspaces(&self.full_space(), s);
        s.contains(&b)
    }

    pub fn commutant(&self, kind: CommutantKind, s: &Subspace) -> Subspace {
        let f = &self.field;
        match kind {
            CommutantKind::Centralizer => {
                let mut parts = Vec::new();
                for b in s.basis() {
                    parts.push(self.ad(b));
                }
                if parts.is_empty() {
                    return self.full_space();
                }
                let refs: Vec<&Matrix> = parts.iter().collect();
                Matrix::vstack(f, &refs).expect("same width").kernel()
            }
            CommutantKind::Normalizer => {
                // Projection modulo s as a matrix.
                let mut proj = Matrix::zero(f, self.dim, self.dim);
                for j in 0..self.dim {
                    let col = s.reduce_vector(&self.basis_vec(j));
                    for i in 0..self.dim {
                        proj.set(i, j, col[i].clone());
                    }
                }
                let mut parts = Vec::new();
                for b in s.basis() {
                    // condition: reduce([x, b]) = 0, and [x,b] = -ad(b) x.
                    let m = proj.mul(&self.ad(b)).expect("square");
                    parts.push(m);
                }
                if parts.is_empty() {
                    return self.full_space();
                }
                let refs: Vec<&Matrix> = parts.iter().collect();
                Matrix::vstack(f, &refs).expect("same width").kernel()
            }
        }
    }

    pub fn center(&self) -> Subspace {
        self.commutant(CommutantKind::Centralizer, &self.full_space())
    }

    /// Gram matrix of the Killing form in the given basis.
    pub fn killing_form(&self) -> Matrix {
        let f = &self.field;
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zero(f, self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].mul(&ads[j]).expect("square").trace();
                k.set(i, j, t.clone());
                if i != j {
                    k.set(j, i, t);
                }
            }
        }
        k
    }

    pub fn killing_pairing(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        let kx = self.killing_form().apply(y).expect("square");
        let mut acc = f.zero();
        for i in 0..self.dim {
            acc = f.add(&acc, &f.mul(&x[i], &kx[i]));
        }
        acc
    }

    /// Smallest subalgebra containing the given vectors.
    pub fn subalgebra_generated(&self, vectors: &[Vec<FieldElement>]) -> Subspace {
        let mut cur = Subspace::span(&self.field, self.dim, vectors.to_vec());
        loop {
            let grown = cur.sum(&self.bracket_subspaces(&cur, &cur)).expect("same ambient");
            if grown.dim() == cur.dim() {
                return cur;
            }
            cur = grown;
        }
    }

    /// Smallest ideal containing the given vectors.
    pub fn ideal_generated(&self, vectors: &[Vec<FieldElement>]) -> Subspace {
        let full = self.full_space();
        let mut cur = Subspace::span(&self.field, self.dim, vectors.to_vec());
        loop {
            let grown = cur.sum(&self.bracket_subspaces(&full, &cur)).expect("same ambient");
            if grown.dim() == cur.dim() {
                return cur;
            }
            cur = grown;
        }
    }

    /// Quotient by an ideal, with the projection bookkeeping.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(FinDimLie, QuotientMap), LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let f = &self.field;
        let rep_cols: Vec<usize> =
            (0..self.dim).filter(|c| !ideal.pivots().contains(c)).collect();
        let map = QuotientMap { ideal: ideal.clone(), rep_cols: rep_cols.clone() };
        let qdim = rep_cols.len();
        let mut brackets = BTreeMap::new();
        for a in 0..qdim {
            for b in (a + 1)..qdim {
                let va = self.basis_vec(rep_cols[a]);
                let vb = self.basis_vec(rep_cols[b]);
                let w = self.bracket_eval(&va, &vb);
                let proj = map.project(&w);
                let sv: SparseVec = proj
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sv.is_empty() {
                    brackets.insert((a, b), sv);
                }
            }
        }
        let labels = rep_cols.iter().map(|&c| self.labels[c].clone()).collect();
        let q = FinDimLie::from_sc(f.clone(), qdim, labels, brackets)?;
        Ok((q, map))
    }

    /// Restriction of the bracket to a bracket-closed subspace, in the
    /// coordinates of its canonical basis.
    pub fn restrict_to_subalgebra(&self, s: &Subspace) -> Result<FinDimLie, LieError> {
        if !self.is_subalgebra(s) {
            return Err(LieError::NotASubalgebra);
        }
        let d = s.dim();
        let mut brackets = BTreeMap::new();
        for a in 0..d {
            for b in (a + 1)..d {
                let w = self.bracket_eval(&s.basis()[a], &s.basis()[b]);
                let coords = s.coordinates(&w).ok_or(LieError::NotASubalgebra)?;
                let sv: SparseVec = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !sv.is_empty() {
                    brackets.insert((a, b), sv);
                }
            }
        }
        FinDimLie::from_sc(self.field.clone(), d, Vec::new(), brackets)
    }

    /// Direct sum; the left summand occupies indices 0..a.dim.
    pub fn direct_sum(a: &FinDimLie, b: &FinDimLie) -> Result<FinDimLie, LieError> {
        if a.field != b.field {
            return Err(LieError::DimensionMismatch("field mismatch".into()));
        }
        let dim = a.dim + b.dim;
        let mut brackets = BTreeMap::new();
        for ((i, j), v) in &a.brackets {
            brackets.insert((*i, *j), v.clone());
        }
        for ((i, j), v) in &b.brackets {
            let shifted: SparseVec = v.iter().map(|(k, c)| (k + a.dim, c.clone())).collect();
            brackets.insert((i + a.dim, j + a.dim), shifted);
        }
        let mut labels = a.labels.clone();
        labels.extend(b.labels.iter().cloned());
        FinDimLie::from_sc(a.field.clone(), dim, labels, brackets)
    }

    /// Semidirect product s ⋉ r for an action of s on r by derivations.
    /// `action[i]` is the matrix by which the i-th basis vector of s
    /// acts on r. The action must consist of derivations of r and be a
    /// Lie algebra homomorphism.
    pub fn semidirect(s: &FinDimLie, r: &FinDimLie, action: &[Matrix]) -> Result<FinDimLie, LieError> {
        if s.field != r.field || action.len() != s.dim {
            return Err(LieError::DimensionMismatch("semidirect shape".into()));
        }
        let f = &s.field;
        for m in action {
            if m.rows != r.dim || m.cols != r.dim {
                return Err(LieError::DimensionMismatch("action matrix shape".into()));
            }
            if !is_derivation_of(r, m) {
                return Err(LieError::NotADerivationAction);
            }
        }
        // Homomorphism check on basis pairs.
        for i in 0..s.dim {
            for j in (i + 1)..s.dim {
                let mut lhs = Matrix::zero(f, r.dim, r.dim);
                for (k, c) in s.basis_bracket(i, j) {
                    lhs = lhs.add(&action[k].scale(&c)).expect("shape");
                }
                let rhs = action[i].commutator(&action[j]).expect("shape");
                if lhs != rhs {
                    return Err(LieError::NotADerivationAction);
                }
            }
        }
        let dim = s.dim + r.dim;
        let mut brackets = BTreeMap::new();
        for ((i, j), v) in &s.brackets {
            brackets.insert((*i, *j), v.clone());
        }
        for ((i, j), v) in &r.brackets {
            let shifted: SparseVec = v.iter().map(|(k, c)| (k + s.dim, c.clone())).collect();
            brackets.insert((i + s.dim, j + s.dim), shifted);
        }
        for i in 0..s.dim {
            for jr in 0..r.dim {
                let col: SparseVec = (0..r.dim)
                    .filter(|&k| !action[i].at(k, jr).is_zero())
                    .map(|k| (k + s.dim, action[i].at(k, jr).clone()))
                    .collect();
                if !col.is_empty() {
                    brackets.insert((i, jr + s.dim), col);
                }
            }
        }
        let mut labels = s.labels.clone();
        labels.extend(r.labels.iter().cloned());
        FinDimLie::from_sc(f.clone(), dim, labels, brackets)
    }

    /// Views an algebra over Q[x]/(p) as an algebra over Q of dimension
    /// dim * deg, basis e_i, x e_i, x^2 e_i, ... per original basis
    /// vector (generator powers vary fastest).
    pub fn restrict_scalars(&self) -> Result<FinDimLie, LieError> {
        let deg = self.field.degree();
        if deg == 1 {
            return Ok(self.clone());
        }
        let q = FieldSpec::rationals();
        let ext = &self.field;
        let gen = ext.generator()?;
        let dim = self.dim * deg;
        // index (i, p) -> i*deg + p  for basis x^p e_i
        let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for i in 0..self.dim {
            for pi in 0..deg {
                for j in 0..self.dim {
                    for pj in 0..deg {
                        let a = i * deg + pi;
                        let b = j * deg + pj;
                        if a >= b {
                            continue;
                        }
                        // [x^pi e_i, x^pj e_j] = x^(pi+pj) [e_i, e_j]
                        let factor = ext.mul(&ext.pow(&gen, pi as u32), &ext.pow(&gen, pj as u32));
                        let mut sv: SparseVec = Vec::new();
                        for (k, c) in self.basis_bracket(i, j) {
                            let val = ext.mul(&factor, &c);
                            for (p, coeff) in val.coeffs.iter().enumerate() {
                                if !coeff.is_zero() {
                                    sv.push((k * deg + p, q.from_rational(coeff.clone())));
                                }
                            }
                        }
                        if !sv.is_empty() {
                            sv.sort_by_key(|(k, _)| *k);
                            brackets.insert((a, b), sv);
                        }
                    }
                }
            }
        }
        let labels = (0..self.dim)
            .flat_map(|i| {
                let base = self.labels[i].clone();
                (0..deg).map(move |p| if p == 0 { base.clone() } else { format!("x^{p}.{base}") })
            })
            .collect();
        FinDimLie::from_sc(q, dim, labels, brackets)
    }
}

/// Leibniz check of a single matrix against the bracket of g.
pub fn is_derivation_of(g: &FinDimLie, d: &Matrix) -> bool {
    for i in 0..g.dim {
        for j in (i + 1)..g.dim {
            let bij = dense(g, &g.basis_bracket(i, j));
            let lhs = d.apply(&bij).expect("shape");
            let dei = d.apply(&g.basis_vec(i)).expect("shape");
            let dej = d.apply(&g.basis_vec(j)).expect("shape");
            let rhs1 = g.bracket_eval(&dei, &g.basis_vec(j));
            let rhs2 = g.bracket_eval(&g.basis_vec(i), &dej);
            for k in 0..g.dim {
                let r = g.field.add(&rhs1[k], &rhs2[k]);
                if lhs[k] != r {
                    return false;
                }
            }
        }
    }
    true
}

pub fn dense(g: &FinDimLie, sv: &SparseVec) -> Vec<FieldElement> {
    let mut v = g.zero_vec();
    for (k, c) in sv {
        v[*k] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use crate::field::rat_int;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn sl2_relations() {
        // basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
        let g = sl2(&q());
        let e = g.basis_vec(0);
        let h = g.basis_vec(1);
        let f = g.basis_vec(2);
        assert_eq!(g.bracket_eval(&h, &e), {
            let mut v = g.zero_vec();
            v[0] = g.field.from_int(2);
            v
        });
        assert_eq!(g.bracket_eval(&h, &f), {
            let mut v = g.zero_vec();
            v[2] = g.field.from_int(-2);
            v
        });
        assert_eq!(g.bracket_eval(&e, &f), h);
        assert!(g.jacobi_defect().is_none());
        assert!(g.is_perfect());
    }

    #[test]
    fn sl2_killing_values() {
        let g = sl2(&q());
        let k = g.killing_form();
        // kappa(h,h) = 8, kappa(e,f) = 4, kappa(e,e) = 0.
        assert_eq!(*k.at(1, 1), g.field.from_int(8));
        assert_eq!(*k.at(0, 2), g.field.from_int(4));
        assert_eq!(*k.at(0, 0), g.field.from_int(0));
    }

    #[test]
    fn jacobi_defect_detects_non_lie_tensor() {
        // [x,y] = z, [y,z] = x, [z,x] = x: J(x,y,z) = [x,y] = z != 0.
        let f = q();
        let mut b = BTreeMap::new();
        b.insert((0, 1), vec![(2, f.one())]);
        b.insert((1, 2), vec![(0, f.one())]);
        b.insert((0, 2), vec![(0, f.from_int(-1))]); // [z,x] = x means [x,z] = -x
        let g = FinDimLie::from_sc_unchecked(f.clone(), 3, Vec::new(), b.clone()).unwrap();
        let w = g.jacobi_defect().expect("non-Lie tensor");
        assert_eq!(w.triple, (0, 1, 2));
        let mut expect = g.zero_vec();
        expect[2] = f.one();
        assert_eq!(w.defect, expect);
        assert!(matches!(
            FinDimLie::from_sc(f, 3, Vec::new(), b),
            Err(LieError::JacobiViolation(0, 1, 2))
        ));
    }

    #[test]
    fn solvable_tensor_passes_jacobi() {
        // [x,y] = z, [y,z] = x, [z,x] = 0 satisfies Jacobi: the Jacobi
        // sum is [z,z] + [x,x] + [0,y] = 0.
        let f = q();
        let mut b = BTreeMap::new();
        b.insert((0, 1), vec![(2, f.one())]);
        b.insert((1, 2), vec![(0, f.one())]);
        let g = FinDimLie::from_sc(f, 3, Vec::new(), b).unwrap();
        assert!(g.jacobi_defect().is_none());
        assert!(g.is_solvable());
    }

    #[test]
    fn derived_series_of_2dim_solvable() {
        let g = solvable2(&q());
        let chain = g.series(SeriesKind::Derived);
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0].dim(), 2);
        assert_eq!(chain[1].dim(), 1);
        // The derived subalgebra is span(y).
        assert!(chain[1].contains_vector(&g.basis_vec(1)));
        assert_eq!(chain[2].dim(), 0);
        assert!(g.is_solvable());
        assert!(!g.is_nilpotent());
    }

    #[test]
    fn heisenberg_series_and_center() {
        let g = heisenberg(&q());
        assert!(g.is_nilpotent());
        let c = g.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains_vector(&g.basis_vec(2)));
        let lc = g.series(SeriesKind::LowerCentral);
        assert_eq!(lc.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![3, 1, 0]);
    }

    #[test]
    fn gl2_quotient_by_center_is_sl2_like() {
        let g = gl(&q(), 2);
        let c = g.center();
        assert_eq!(c.dim(), 1);
        let (qa, _) = g.quotient(&c).unwrap();
        assert_eq!(qa.dim, 3);
        assert!(qa.is_perfect());
        // Quotient by a non-ideal is rejected.
        let f = q();
        let not_ideal = Subspace::span(&f, 4, vec![g.basis_vec(1)]);
        assert!(matches!(g.quotient(&not_ideal), Err(LieError::NotAnIdeal)));
    }

    #[test]
    fn subalgebra_and_ideal_closure() {
        let g = sl2(&q());
        // e generates span(e) as a subalgebra, all of sl2 as an ideal.
        let sub = g.subalgebra_generated(&[g.basis_vec(0)]);
        assert_eq!(sub.dim(), 1);
        let ideal = g.ideal_generated(&[g.basis_vec(0)]);
        assert_eq!(ideal.dim(), 3);
        // e, f generate sl2 as a subalgebra.
        let sub2 = g.subalgebra_generated(&[g.basis_vec(0), g.basis_vec(2)]);
        assert_eq!(sub2.dim(), 3);
    }

    #[test]
    fn direct_sum_and_centralizer_decomposition() {
        let f = q();
        let g = FinDimLie::direct_sum(&sl2(&f), &solvable2(&f)).unwrap();
        assert_eq!(g.dim, 5);
        assert!(g.jacobi_defect().is_none());
        // Lemma-style decomposition: centralizer of the semisimple ideal
        // complements it.
        let a = Subspace::span(&f, 5, vec![g.basis_vec(0), g.basis_vec(1), g.basis_vec(2)]);
        let cent = g.commutant(CommutantKind::Centralizer, &a);
        assert_eq!(cent.dim(), 2);
        let total = cent.sum(&a).unwrap();
        assert_eq!(total.dim(), 5);
        assert_eq!(cent.intersect(&a).unwrap().dim(), 0);
    }

    #[test]
    fn normalizer_of_cartan_is_cartan() {
        let g = sl2(&q());
        let h = Subspace::span(&g.field.clone(), 3, vec![g.basis_vec(1)]);
        let n = g.commutant(CommutantKind::Normalizer, &h);
        assert_eq!(n.dim(), 1);
        assert!(n.contains_vector(&g.basis_vec(1)));
    }

    #[test]
    fn semidirect_sl2_on_adjoint() {
        let f = q();
        let s = sl2(&f);
        let r = FinDimLie::abelian(f.clone(), 3);
        let action: Vec<Matrix> = (0..3).map(|i| s.ad_basis(i)).collect();
        let g = FinDimLie::semidirect(&s, &r, &action).unwrap();
        assert_eq!(g.dim, 6);
        assert!(g.jacobi_defect().is_none());
        let ideal = Subspace::span(&f, 6, (3..6).map(|i| g.basis_vec(i)).collect());
        assert!(g.is_ideal(&ideal));
        // Bad action: swap two matrices so the homomorphism fails.
        let bad = vec![action[1].clone(), action[0].clone(), action[2].clone()];
        assert!(matches!(
            FinDimLie::semidirect(&s, &r, &bad),
            Err(LieError::NotADerivationAction)
        ));
    }

    #[test]
    fn restriction_of_scalars_doubles_dimension() {
        let ext = FieldSpec::extension(vec![rat_int(1), rat_int(0), rat_int(1)]).unwrap();
        let g = sl2(&ext);
        let r = g.restrict_scalars().unwrap();
        assert_eq!(r.dim, 6);
        assert!(r.jacobi_defect().is_none());
        assert!(r.is_perfect());
        // [h, x e] = 2 x e: check the bracket respects the module
        // structure of the scalar extension.
        let h = r.basis_vec(2); // order: e, xe, h, xh, f, xf
        let xe = r.basis_vec(1);
        let out = r.bracket_eval(&h, &xe);
        let mut expect = r.zero_vec();
        expect[1] = r.field.from_int(2);
        assert_eq!(out, expect);
    }
}
