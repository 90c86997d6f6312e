//! Second cohomology with trivial coefficients, via antisymmetric pair
//! coordinates, and one-dimensional central extensions built from
//! cocycle representatives.

use super::{FinDimLie, LieError};
use crate::field::FieldElement;
use crate::linalg::{Matrix, Subspace};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct H2Report {
    /// Pair coordinates (i, j) with i < j indexing cochain entries.
    pub pairs: Vec<(usize, usize)>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub dim: usize,
    /// Cocycles completing a coboundary basis, in pair coordinates.
    pub representatives: Vec<Vec<FieldElement>>,
}

impl FinDimLie {
    /// Dimension and representatives of the degree two cohomology with
    /// trivial coefficients. Cocycles are antisymmetric forms w with
    ///   w([x,y],z) + w([y,z],x) + w([z,x],y) = 0,
    /// coboundaries are w(x,y) = f([x,y]) for functionals f.
    pub fn h2_trivial(&self) -> H2Report {
        let f = &self.field;
        let n = self.dim;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let npairs = pairs.len();
        let pair_index: BTreeMap<(usize, usize), usize> =
            pairs.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        // Adds w(v, e_k) for a dense v to a row of pair unknowns.
        let add_eval = |row: &mut Vec<FieldElement>, v: &[FieldElement], k: usize| {
            for (l, c) in v.iter().enumerate() {
                if c.is_zero() || l == k {
                    continue;
                }
                if l < k {
                    let idx = pair_index[&(l, k)];
                    row[idx] = f.add(&row[idx], c);
                } else {
                    let idx = pair_index[&(k, l)];
                    row[idx] = f.sub(&row[idx], c);
                }
            }
        };
        let mut rows = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut row = vec![f.zero(); npairs];
                    add_eval(&mut row, &super::dense(self, &self.basis_bracket(i, j)), k);
                    add_eval(&mut row, &super::dense(self, &self.basis_bracket(j, k)), i);
                    add_eval(&mut row, &super::dense(self, &self.basis_bracket(k, i)), j);
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let cocycles = if rows.is_empty() {
            Subspace::full(f, npairs)
        } else {
            Matrix::from_rows(f, rows).expect("rows").kernel()
        };
        let mut cob_rows = Vec::new();
        for m in 0..n {
            // The functional dual to e_m, evaluated on brackets.
            let mut row = vec![f.zero(); npairs];
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                let v = super::dense(self, &self.basis_bracket(i, j));
                row[idx] = v[m].clone();
            }
            cob_rows.push(row);
        }
        let coboundaries = Subspace::span(f, npairs, cob_rows);
        debug_assert!(cocycles.contains(&coboundaries));
        let representatives = cocycles.quotient_basis(&coboundaries).expect("containment");
        H2Report {
            pairs,
            cocycle_dim: cocycles.dim(),
            coboundary_dim: coboundaries.dim(),
            dim: cocycles.dim() - coboundaries.dim(),
            representatives,
        }
    }
}

/// One-dimensional central extension along an antisymmetric form given
/// in the pair coordinates of `pairs`. The new basis vector sits last.
pub fn central_extension(
    g: &FinDimLie,
    pairs: &[(usize, usize)],
    omega: &[FieldElement],
) -> Result<FinDimLie, LieError> {
    let f = &g.field;
    let n = g.dim;
    let mut brackets = BTreeMap::new();
    let pair_value: BTreeMap<(usize, usize), FieldElement> = pairs
        .iter()
        .cloned()
        .zip(omega.iter().cloned())
        .filter(|(_, c)| !c.is_zero())
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut sv = g.basis_bracket(i, j);
            if let Some(c) = pair_value.get(&(i, j)) {
                sv.push((n, c.clone()));
            }
            if !sv.is_empty() {
                brackets.insert((i, j), sv);
            }
        }
    }
    let mut labels = g.labels.clone();
    labels.push("c".into());
    FinDimLie::from_sc(f.clone(), n + 1, labels, brackets)
}
