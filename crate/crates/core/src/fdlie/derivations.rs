//! Derivation algebras, characteristic ideals, centroids, and the
//! associative closure of the adjoint image.

use super::{FinDimLie, LieError};
use crate::field::rational_roots;
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct DerivationReport {
    /// Basis of the derivation algebra as matrices acting on the left.
    pub basis: Vec<Matrix>,
    pub inner_dim: usize,
}

impl DerivationReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn out_dim(&self) -> usize {
        self.basis.len() - self.inner_dim
    }
}

#[derive(Clone, Debug)]
pub struct CharWitness {
    pub derivation: Matrix,
    pub vector: Vec<crate::field::FieldElement>,
    pub image: Vec<crate::field::FieldElement>,
}

#[derive(Clone, Debug)]
pub struct CharacteristicReport {
    pub characteristic: bool,
    pub witness: Option<CharWitness>,
}

#[derive(Clone, Debug)]
pub struct CentroidReport {
    pub basis: Vec<Matrix>,
    pub commutative: bool,
    /// Established by an exact zero-divisor sweep: minimal polynomials
    /// of basis elements, pairwise sums, and pairwise products are
    /// checked for rational roots and repeated factors. A hit yields a
    /// zero divisor; a clean sweep certifies a field at desk scale.
    pub is_field: bool,
}

impl CentroidReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct AssociativeClosureReport {
    pub dim: usize,
    pub basis: Vec<Matrix>,
}

impl FinDimLie {
    /// Basis of all derivations: solutions D of
    /// D[x, y] = [Dx, y] + [x, Dy] over the structure constants.
    /// Unknowns are the n^2 entries of D in row-major order.
    pub fn derivations(&self) -> DerivationReport {
        let f = &self.field;
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let cij = dense_bracket(self, i, j);
                for m in 0..n {
                    let mut row = vec![f.zero(); n * n];
                    // D([e_i, e_j]) coordinate m: sum_k c_ij^k D[m, k]
                    for k in 0..n {
                        if !cij[k].is_zero() {
                            row[m * n + k] = f.add(&row[m * n + k], &cij[k]);
                        }
                    }
                    // -[D e_i, e_j] coordinate m: -sum_k D[k, i] c_kj^m
                    for k in 0..n {
                        let ckj = dense_bracket(self, k, j);
                        if !ckj[m].is_zero() {
                            row[k * n + i] = f.sub(&row[k * n + i], &ckj[m]);
                        }
                    }
                    // -[e_i, D e_j] coordinate m: -sum_k D[k, j] c_ik^m
                    for k in 0..n {
                        let cik = dense_bracket(self, i, k);
                        if !cik[m].is_zero() {
                            row[k * n + j] = f.sub(&row[k * n + j], &cik[m]);
                        }
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Subspace::full(f, n * n)
        } else {
            Matrix::from_rows(f, rows).expect("rows").kernel()
        };
        let basis: Vec<Matrix> = kernel
            .basis()
            .iter()
            .map(|flat| Matrix::from_flat(f, n, n, flat.clone()).expect("shape"))
            .collect();
        debug_assert!(basis.iter().all(|d| super::is_derivation_of(self, d)));
        let inner_dim = n - self.center().dim();
        debug_assert!(inner_dim <= basis.len());
        DerivationReport { basis, inner_dim }
    }

    /// Whether the given ideal is stable under every derivation. A
    /// failure comes with the offending derivation, a vector of the
    /// ideal, and its image outside the ideal.
    pub fn is_characteristic(&self, ideal: &Subspace) -> Result<CharacteristicReport, LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let report = self.derivations();
        for d in &report.basis {
            for v in ideal.basis() {
                let image = d.apply(v)?;
                if !ideal.contains_vector(&image) {
                    return Ok(CharacteristicReport {
                        characteristic: false,
                        witness: Some(CharWitness {
                            derivation: d.clone(),
                            vector: v.clone(),
                            image,
                        }),
                    });
                }
            }
        }
        Ok(CharacteristicReport { characteristic: true, witness: None })
    }

    /// Basis of the centroid: all operators commuting with every ad(x).
    pub fn centroid(&self) -> CentroidReport {
        let f = &self.field;
        let n = self.dim;
        let mut rows = Vec::new();
        for b in 0..n {
            let a = self.ad_basis(b);
            // theta * a - a * theta = 0, entry (m, k):
            // sum_l theta[m, l] a[l, k] - a[m, l] theta[l, k] = 0
            for m in 0..n {
                for k in 0..n {
                    let mut row = vec![f.zero(); n * n];
                    for l in 0..n {
                        let alk = a.at(l, k);
                        if !alk.is_zero() {
                            row[m * n + l] = f.add(&row[m * n + l], alk);
                        }
                        let aml = a.at(m, l);
                        if !aml.is_zero() {
                            row[l * n + k] = f.sub(&row[l * n + k], aml);
                        }
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Subspace::full(f, n * n)
        } else {
            Matrix::from_rows(f, rows).expect("rows").kernel()
        };
        let basis: Vec<Matrix> = kernel
            .basis()
            .iter()
            .map(|flat| Matrix::from_flat(f, n, n, flat.clone()).expect("shape"))
            .collect();
        let mut commutative = true;
        'comm: for (i, a) in basis.iter().enumerate() {
            for b in basis.iter().skip(i + 1) {
                if !a.commutator(b).expect("square").is_zero() {
                    commutative = false;
                    break 'comm;
                }
            }
        }
        let is_field = commutative && !basis.is_empty() && centroid_sweep_clean(f, &basis, n);
        CentroidReport { basis, commutative, is_field }
    }

    /// The associative subalgebra of End(g) generated by the adjoint
    /// image, computed as a left-multiplication closure. The identity is
    /// not adjoined; it appears exactly when the generators produce it.
    pub fn associative_closure(&self) -> AssociativeClosureReport {
        let f = &self.field;
        let n = self.dim;
        let gens: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut span = Subspace::span(f, n * n, gens.iter().map(|m| m.flatten()).collect());
        loop {
            let mut vecs: Vec<Vec<_>> = span.basis().to_vec();
            let before = span.dim();
            for flat in span.basis() {
                let m = Matrix::from_flat(f, n, n, flat.clone()).expect("shape");
                for g in &gens {
                    vecs.push(g.mul(&m).expect("square").flatten());
                }
            }
            span = Subspace::span(f, n * n, vecs);
            if span.dim() == before {
                break;
            }
        }
        let basis: Vec<Matrix> = span
            .basis()
            .iter()
            .map(|flat| Matrix::from_flat(f, n, n, flat.clone()).expect("shape"))
            .collect();
        AssociativeClosureReport { dim: basis.len(), basis }
    }
}

fn dense_bracket(g: &FinDimLie, i: usize, j: usize) -> Vec<crate::field::FieldElement> {
    super::dense(g, &g.basis_bracket(i, j))
}

/// Sweeps candidate centroid elements for zero divisors. Returns true
/// when no candidate's minimal polynomial has a rational root (other
/// than one turning the element into a scalar) or a repeated factor.
fn centroid_sweep_clean(f: &crate::field::FieldSpec, basis: &[Matrix], n: usize) -> bool {
    if !f.is_rationals() {
        // Minimal polynomial extraction is implemented over the
        // rationals; centroids over extension fields restrict scalars
        // first.
        return false;
    }
    let mut candidates: Vec<Matrix> = basis.to_vec();
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i + 1) {
            candidates.push(a.add(b).expect("shape"));
            candidates.push(a.mul(b).expect("square"));
        }
    }
    for theta in &candidates {
        if theta.is_zero() {
            continue;
        }
        let mp = super::radical::matrix_min_poly(theta);
        if !squarefree_over_q(&mp) {
            return false;
        }
        for root in rational_roots(&mp) {
            let shift = theta
                .sub(&Matrix::identity(f, n).scale(&f.from_rational(root)))
                .expect("square");
            if !shift.is_zero() {
                // shift is singular and nonzero: a zero divisor.
                return false;
            }
        }
    }
    true
}

fn squarefree_over_q(p: &[crate::field::Rational]) -> bool {
    use crate::field::Rational;
    if p.len() <= 2 {
        return true;
    }
    let dp: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(k.into()))
        .collect();
    // gcd(p, p') constant <=> squarefree
    poly_gcd_degree(p.to_vec(), dp) == 0
}

fn poly_gcd_degree(
    mut a: Vec<crate::field::Rational>,
    mut b: Vec<crate::field::Rational>,
) -> usize {
    use num_traits::Zero;
    let deg = |v: &Vec<crate::field::Rational>| v.iter().rposition(|c| !c.is_zero());
    loop {
        match (deg(&a), deg(&b)) {
            (_, None) => return deg(&a).unwrap_or(0),
            (None, Some(db)) => return db,
            (Some(da), Some(db)) if da < db => std::mem::swap(&mut a, &mut b),
            (Some(da), Some(db)) => {
                let lead = a[da].clone() / b[db].clone();
                for k in 0..=db {
                    let t = &b[k] * &lead;
                    a[k + da - db] -= t;
                }
                a[da] = crate::field::Rational::zero();
            }
        }
    }
}
