//! Standard finite-dimensional algebras used as fixtures and as inputs
//! to the affine machinery.

use super::{FinDimLie, LieError, SparseVec};
use crate::field::{FieldElement, FieldSpec, Rational};
use crate::linalg::{Matrix, Subspace};
use std::collections::BTreeMap;

/// Builds a Lie algebra from a list of linearly independent matrices
/// closed under commutators; structure constants are solved exactly.
pub fn lie_from_matrices(field: &FieldSpec, mats: &[Matrix], labels: Vec<String>) -> FinDimLie {
    let dim = mats.len();
    let flat: Vec<Vec<FieldElement>> = mats.iter().map(|m| m.flatten()).collect();
    let ambient = flat.first().map(|v| v.len()).unwrap_or(0);
    let space = Subspace::span(field, ambient, flat.clone());
    assert_eq!(space.dim(), dim, "matrices must be linearly independent");
    // Coordinates with respect to the original (not canonicalized) list:
    // solve B^T c = v for the stacked flat matrix B.
    let b = Matrix::from_rows(field, flat).expect("flat rows");
    let bt = b.transpose();
    let coords = |m: &Matrix| -> Vec<FieldElement> {
        let v = Matrix::from_rows(field, vec![m.flatten()]).expect("flat").transpose();
        let sol = bt.solve(&v).expect("closed under commutator");
        (0..dim).map(|i| sol.particular.at(i, 0).clone()).collect()
    };
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let c = mats[i].commutator(&mats[j]).expect("square matrices");
            let sv: SparseVec = coords(&c)
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            if !sv.is_empty() {
                brackets.insert((i, j), sv);
            }
        }
    }
    FinDimLie::from_sc(field.clone(), dim, labels, brackets).expect("matrix algebra satisfies Jacobi")
}

pub fn elementary(field: &FieldSpec, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zero(field, n, n);
    m.set(i, j, field.one());
    m
}

/// Chevalley bookkeeping for sl_n in the basis produced by `sl`.
#[derive(Clone, Debug)]
pub struct ChevalleySimple {
    pub n: usize,
    pub algebra: FinDimLie,
    /// The defining matrices, aligned with the basis.
    pub matrices: Vec<Matrix>,
    /// Indices of H_1..H_{n-1}.
    pub cartan: Vec<usize>,
    /// Indices of the simple raising vectors E_{k,k+1}.
    pub raise: Vec<usize>,
    /// Indices of the simple lowering vectors E_{k+1,k}.
    pub lower: Vec<usize>,
    /// Index of the highest root vector E_{1,n}.
    pub highest: usize,
}

impl ChevalleySimple {
    /// Weight of each basis vector under ad(H_k), read off the diagonal
    /// action of the Cartan on the root basis.
    pub fn basis_weights(&self) -> Vec<Vec<Rational>> {
        let g = &self.algebra;
        let f = &g.field;
        let mut out = vec![vec![]; g.dim];
        for (bi, w) in out.iter_mut().enumerate() {
            for &h in &self.cartan {
                let v = g.bracket_eval(&g.basis_vec(h), &g.basis_vec(bi));
                // v is a rational multiple of basis vector bi.
                let lam = if v[bi].is_zero() {
                    Rational::from_integer(0.into())
                } else {
                    v[bi].as_rational().expect("integral weight").clone()
                };
                debug_assert!({
                    let mut chk = g.zero_vec();
                    chk[bi] = f.from_rational(lam.clone());
                    chk == v
                });
                w.push(lam);
            }
        }
        out
    }

    /// Weight of the highest root vector.
    pub fn highest_weight(&self) -> Vec<Rational> {
        self.basis_weights()[self.highest].clone()
    }
}

/// sl_n with basis: E_ij (i < j, lexicographic), then H_1..H_{n-1},
/// then E_ij (i > j, lexicographic).
pub fn sl(field: &FieldSpec, n: usize) -> ChevalleySimple {
    assert!(n >= 2);
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    let mut upper_idx = BTreeMap::new();
    let mut lower_idx = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            upper_idx.insert((i, j), mats.len());
            mats.push(elementary(field, n, i, j));
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    let cartan_start = mats.len();
    for k in 0..(n - 1) {
        let mut m = Matrix::zero(field, n, n);
        m.set(k, k, field.one());
        m.set(k + 1, k + 1, field.from_int(-1));
        mats.push(m);
        labels.push(format!("h{}", k + 1));
    }
    for i in 0..n {
        for j in 0..i {
            lower_idx.insert((i, j), mats.len());
            mats.push(elementary(field, n, i, j));
            labels.push(format!("f{}{}", i + 1, j + 1));
        }
    }
    let algebra = lie_from_matrices(field, &mats, labels);
    ChevalleySimple {
        n,
        algebra,
        matrices: mats,
        cartan: (cartan_start..cartan_start + n - 1).collect(),
        raise: (0..n - 1).map(|k| upper_idx[&(k, k + 1)]).collect(),
        lower: (0..n - 1).map(|k| lower_idx[&(k + 1, k)]).collect(),
        highest: upper_idx[&(0, n - 1)],
    }
}

/// sl2 with the (e, h, f) basis convention.
pub fn sl2(field: &FieldSpec) -> FinDimLie {
    sl(field, 2).algebra
}

/// gl_n with basis E_ij in row-major order.
pub fn gl(field: &FieldSpec, n: usize) -> FinDimLie {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(elementary(field, n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    lie_from_matrices(field, &mats, labels)
}

/// The 3-dimensional Heisenberg algebra: [x, y] = z.
pub fn heisenberg(field: &FieldSpec) -> FinDimLie {
    let mut b = BTreeMap::new();
    b.insert((0, 1), vec![(2, field.one())]);
    FinDimLie::from_sc(
        field.clone(),
        3,
        vec!["x".into(), "y".into(), "z".into()],
        b,
    )
    .expect("heisenberg")
}

/// The nonabelian 2-dimensional algebra: [x, y] = y.
pub fn solvable2(field: &FieldSpec) -> FinDimLie {
    let mut b = BTreeMap::new();
    b.insert((0, 1), vec![(1, field.one())]);
    FinDimLie::from_sc(field.clone(), 2, vec!["x".into(), "y".into()], b).expect("solvable2")
}

/// Semidirect sum of s with an abelian module: action[i] is the matrix
/// of basis vector i on the module. Jacobi validation at construction
/// rejects any action that is not a homomorphism.
pub fn semidirect(s: &FinDimLie, action: &[Matrix]) -> Result<FinDimLie, LieError> {
    if action.len() != s.dim {
        return Err(LieError::DimensionMismatch(
            "one action matrix per basis vector".into(),
        ));
    }
    let m = action.first().map(|a| a.rows).unwrap_or(0);
    if action.iter().any(|a| a.rows != m || a.cols != m) {
        return Err(LieError::DimensionMismatch("square action matrices".into()));
    }
    let f = &s.field;
    let mut labels = s.labels.clone();
    for k in 0..m {
        labels.push(format!("v{k}"));
    }
    let mut brackets = BTreeMap::new();
    for i in 0..s.dim {
        for j in (i + 1)..s.dim {
            let sv = s.basis_bracket(i, j);
            if !sv.is_empty() {
                brackets.insert((i, j), sv);
            }
        }
        for k in 0..m {
            let col: SparseVec = (0..m)
                .filter(|&r| !action[i].at(r, k).is_zero())
                .map(|r| (s.dim + r, action[i].at(r, k).clone()))
                .collect();
            if !col.is_empty() {
                brackets.insert((i, s.dim + k), col);
            }
        }
    }
    FinDimLie::from_sc(f.clone(), s.dim + m, labels, brackets)
}

/// Rewrite g in the basis given by the columns of u. Structure
/// constants transform by conjugation; Jacobi is re-validated.
pub fn change_basis(g: &FinDimLie, u: &Matrix) -> Result<FinDimLie, LieError> {
    let f = &g.field;
    let n = g.dim;
    if u.rows != n || u.cols != n || u.rank() != n {
        return Err(LieError::DimensionMismatch("invertible n x n basis matrix".into()));
    }
    let inv = u.solve(&Matrix::identity(f, n))?.particular;
    let cols: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| (0..n).map(|i| u.at(i, j).clone()).collect())
        .collect();
    let mut brackets = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let z = g.bracket_eval(&cols[i], &cols[j]);
            let coords = inv.apply(&z)?;
            let sv: SparseVec = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !sv.is_empty() {
                brackets.insert((i, j), sv);
            }
        }
    }
    let labels = (0..n).map(|k| format!("b{k}")).collect();
    FinDimLie::from_sc(f.clone(), n, labels, brackets)
}

/// A deterministic corpus of semidirect sums of sl2/sl3 factors with
/// nilpotent modules and solvable summands, each scrambled by a random
/// unimodular change of basis.
pub fn random_corpus(field: &FieldSpec, seed: u64, count: usize) -> Vec<(String, FinDimLie)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let sl2c = sl(field, 2);
    let sl3c = sl(field, 3);
    let sl2 = &sl2c.algebra;
    let sl3 = &sl3c.algebra;
    let ad_of = |g: &FinDimLie| -> Vec<Matrix> { (0..g.dim).map(|i| g.ad_basis(i)).collect() };
    // Defining action extended by a trivial line.
    let padded: Vec<Matrix> = sl2c
        .matrices
        .iter()
        .map(|a| {
            let mut b = Matrix::zero(field, 3, 3);
            for i in 0..2 {
                for j in 0..2 {
                    b.set(i, j, a.at(i, j).clone());
                }
            }
            b
        })
        .collect();
    let templates: Vec<(String, FinDimLie)> = vec![
        ("sl2:standard-module".into(), semidirect(sl2, &sl2c.matrices).expect("rep")),
        ("sl2:adjoint-module".into(), semidirect(sl2, &ad_of(sl2)).expect("rep")),
        ("sl2:padded-module".into(), semidirect(sl2, &padded).expect("rep")),
        ("sl3:standard-module".into(), semidirect(sl3, &sl3c.matrices).expect("rep")),
        ("sl3:adjoint-module".into(), semidirect(sl3, &ad_of(sl3)).expect("rep")),
        (
            "sl2:standard-module+heisenberg".into(),
            FinDimLie::direct_sum(
                &semidirect(sl2, &sl2c.matrices).expect("rep"),
                &heisenberg(field),
            )
            .expect("sum"),
        ),
        (
            "sl2:adjoint-module+solvable2".into(),
            FinDimLie::direct_sum(&semidirect(sl2, &ad_of(sl2)).expect("rep"), &solvable2(field))
                .expect("sum"),
        ),
        (
            "sl2+sl3:standard-module".into(),
            FinDimLie::direct_sum(sl2, &semidirect(sl3, &sl3c.matrices).expect("rep"))
                .expect("sum"),
        ),
    ];
    let mut out = Vec::with_capacity(count);
    let mut round = 0usize;
    while out.len() < count {
        for (name, g) in &templates {
            if out.len() == count {
                break;
            }
            // Random unimodular matrix from unit shears; unit coefficients
            // keep the scrambled structure constants small enough for the
            // exact radical computations downstream.
            let mut u = Matrix::identity(field, g.dim);
            for _ in 0..2 * g.dim {
                let a = rng.gen_range(0..g.dim);
                let b = rng.gen_range(0..g.dim);
                if a == b {
                    continue;
                }
                let c = field.from_int(if rng.gen_range(0..2) == 0 { -1 } else { 1 });
                for j in 0..g.dim {
                    let v = field.add(u.at(a, j), &field.mul(&c, u.at(b, j)));
                    u.set(a, j, v);
                }
            }
            let scrambled = change_basis(g, &u).expect("unimodular scramble");
            out.push((format!("{name}#{round}"), scrambled));
        }
        round += 1;
    }
    out
}
