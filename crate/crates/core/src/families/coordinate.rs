//! Unital coordinate algebras given by structure constants, and the
//! tensor construction pairing them with a Lie algebra.
//!
//! The product table is arbitrary bilinear data up front; whether it is
//! commutative or associative is computed at construction, never
//! declared by the caller.

use super::FamilyError;
use crate::fdlie::{FinDimLie, SparseVec};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{LinAlgError, Matrix, Subspace};
use std::collections::BTreeMap;

/// Solves for the coordinates of `target` in an independent spanning
/// set; errors when the target lies outside the span.
pub(crate) fn coords_in(
    field: &FieldSpec,
    basis: &[Vec<FieldElement>],
    target: &[FieldElement],
) -> Result<Vec<FieldElement>, LinAlgError> {
    let m = Matrix::from_rows(field, basis.to_vec())?.transpose();
    let rhs = Matrix::from_flat(field, target.len(), 1, target.to_vec())?;
    Ok(m.solve(&rhs)?.particular.flatten())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Index of the basis vector acting as 1.
    pub unit: usize,
    /// table[i][j] = coordinates of a_i a_j.
    table: Vec<Vec<Vec<FieldElement>>>,
    pub commutative: bool,
    pub associative: bool,
}

impl CoordinateAlgebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        unit: usize,
        table: Vec<Vec<Vec<FieldElement>>>,
    ) -> Result<Self, FamilyError> {
        let dim = labels.len();
        if dim == 0 || unit >= dim {
            return Err(FamilyError::BadInput("empty algebra or unit out of range".into()));
        }
        if table.len() != dim
            || table.iter().any(|row| row.len() != dim)
            || table
                .iter()
                .any(|row| row.iter().any(|v| v.len() != dim))
        {
            return Err(FamilyError::BadInput("product table shape".into()));
        }
        let mut alg = CoordinateAlgebra {
            field,
            dim,
            labels,
            unit,
            table,
            commutative: false,
            associative: false,
        };
        for i in 0..dim {
            let e = alg.basis_vec(i);
            if alg.table[unit][i] != e || alg.table[i][unit] != e {
                return Err(FamilyError::BadInput(format!(
                    "unit law fails on basis vector {i}"
                )));
            }
        }
        alg.commutative = (0..dim)
            .all(|i| (0..dim).all(|j| alg.table[i][j] == alg.table[j][i]));
        alg.associative = (0..dim).all(|i| {
            (0..dim).all(|j| {
                (0..dim).all(|k| {
                    let left = alg.mul(&alg.table[i][j].clone(), &alg.basis_vec(k));
                    let right = alg.mul(&alg.basis_vec(i), &alg.table[j][k].clone());
                    left == right
                })
            })
        });
        Ok(alg)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn unit_vec(&self) -> Vec<FieldElement> {
        self.basis_vec(self.unit)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[FieldElement] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x.
    pub fn left_mul(&self, x: &[FieldElement]) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zero(f, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(x, &self.basis_vec(j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Nilpotent radical of an associative algebra over the rationals:
    /// the kernel of the trace form (a, b) -> tr(L_a L_b), which in
    /// characteristic zero is exactly the Jacobson radical.
    pub fn nilradical(&self) -> Result<Subspace, FamilyError> {
        if !self.associative {
            return Err(FamilyError::BadInput(
                "nilradical requires an associative algebra".into(),
            ));
        }
        let f = &self.field;
        let left: Vec<Matrix> = (0..self.dim).map(|i| self.left_mul(&self.basis_vec(i))).collect();
        let mut gram = Matrix::zero(f, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                gram.set(i, j, left[i].mul(&left[j])?.trace());
            }
        }
        Ok(gram.kernel())
    }

    /// Least k with N^k = 0 for a nil subspace N, where N^{k+1} is
    /// spanned by products of N^k with N.
    pub fn nilpotency_index(&self, n: &Subspace) -> Result<usize, FamilyError> {
        let f = &self.field;
        let mut k = 1;
        let mut power = n.clone();
        while power.dim() > 0 {
            if k > self.dim + 1 {
                return Err(FamilyError::BadInput("subspace is not nil".into()));
            }
            let mut prods = Vec::new();
            for x in power.basis() {
                for y in n.basis() {
                    prods.push(self.mul(x, y));
                }
            }
            power = Subspace::span(f, self.dim, prods);
            k += 1;
        }
        Ok(k)
    }

    /// Two-sided ideal generated by a set of elements.
    pub fn two_sided_ideal(&self, gens: &[Vec<FieldElement>]) -> Subspace {
        let f = &self.field;
        let mut acc = Subspace::span(f, self.dim, gens.to_vec());
        loop {
            let mut next = acc.basis().to_vec();
            for x in acc.basis() {
                for i in 0..self.dim {
                    next.push(self.mul(x, &self.basis_vec(i)));
                    next.push(self.mul(&self.basis_vec(i), x));
                }
            }
            let bigger = Subspace::span(f, self.dim, next);
            if bigger == acc {
                return acc;
            }
            acc = bigger;
        }
    }
}

/// The quotient of the polynomial ring by a monic polynomial, with
/// basis 1, t, ..., t^{deg-1}.
pub fn quotient_ring(field: &FieldSpec, monic: &[FieldElement]) -> Result<CoordinateAlgebra, FamilyError> {
    let deg = monic.len().checked_sub(1).filter(|d| *d >= 1).ok_or_else(|| {
        FamilyError::BadInput("modulus must have degree at least 1".into())
    })?;
    if monic[deg] != field.one() {
        return Err(FamilyError::BadInput("modulus must be monic".into()));
    }
    // t^deg = -(lower coefficients).
    let head: Vec<FieldElement> = (0..deg).map(|i| field.neg(&monic[i])).collect();
    // reductions[p] = coordinates of t^{deg+p}.
    let mut reductions: Vec<Vec<FieldElement>> = vec![head.clone()];
    for _ in 1..deg {
        let prev = reductions.last().unwrap().clone();
        // Multiply by t: shift up, reduce the overflow by head.
        let mut next = vec![field.zero(); deg];
        for i in 0..deg - 1 {
            next[i + 1] = prev[i].clone();
        }
        let top = prev[deg - 1].clone();
        for i in 0..deg {
            next[i] = field.add(&next[i], &field.mul(&top, &head[i]));
        }
        reductions.push(next);
    }
    let mut table = vec![vec![vec![field.zero(); deg]; deg]; deg];
    for i in 0..deg {
        for j in 0..deg {
            if i + j < deg {
                table[i][j][i + j] = field.one();
            } else {
                table[i][j] = reductions[i + j - deg].clone();
            }
        }
    }
    let labels = (0..deg)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    CoordinateAlgebra::new(field.clone(), labels, 0, table)
}

/// Q[t]/(t^k).
pub fn poly_quotient(field: &FieldSpec, k: usize) -> Result<CoordinateAlgebra, FamilyError> {
    let mut monic = vec![field.zero(); k + 1];
    monic[k] = field.one();
    quotient_ring(field, &monic)
}

/// The ground field as a one-dimensional coordinate algebra.
pub fn scalar_algebra(field: &FieldSpec) -> CoordinateAlgebra {
    CoordinateAlgebra::new(
        field.clone(),
        vec!["1".to_string()],
        0,
        vec![vec![vec![field.one()]]],
    )
    .expect("scalars form an algebra")
}

/// A full matrix algebra together with an explicit matrix realization
/// of its basis. Because the unit must be a basis vector, the basis is
/// I together with all matrix units except E11 (which equals I minus
/// the other diagonal units).
pub struct MatrixCoordinates {
    pub algebra: CoordinateAlgebra,
    pub basis: Vec<Matrix>,
}

pub fn matrix_algebra(field: &FieldSpec, n: usize) -> Result<MatrixCoordinates, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadInput("matrix algebra needs n >= 1".into()));
    }
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let mut eye = Matrix::zero(field, n, n);
    for p in 0..n {
        eye.set(p, p, field.one());
    }
    basis.push(eye);
    labels.push("I".to_string());
    for p in 0..n {
        for q in 0..n {
            if (p, q) == (0, 0) {
                continue;
            }
            let mut e = Matrix::zero(field, n, n);
            e.set(p, q, field.one());
            basis.push(e);
            labels.push(format!("E{}{}", p + 1, q + 1));
        }
    }
    let flat: Vec<Vec<FieldElement>> = basis.iter().map(|m| m.flatten()).collect();
    let dim = basis.len();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = basis[i].mul(&basis[j])?;
            table[i][j] = coords_in(field, &flat, &prod.flatten())?;
        }
    }
    let algebra = CoordinateAlgebra::new(field.clone(), labels, 0, table)?;
    Ok(MatrixCoordinates { algebra, basis })
}

/// The traceless symmetric product on sl_n:
/// x·y = (xy + yx)/2 - tr(xy)/n · I.
pub fn symmetric_product(n: usize, x: &Matrix, y: &Matrix) -> Result<Matrix, FamilyError> {
    let f = x.field.clone();
    if !x.trace().is_zero() || !y.trace().is_zero() {
        return Err(FamilyError::NotTraceless);
    }
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    let half = f.div(&f.one(), &f.from_int(2))?;
    let mut out = xy.add(&yx)?.scale(&half);
    let shift = f.div(&xy.trace(), &f.from_int(n as i64))?;
    for p in 0..n {
        let v = f.sub(out.at(p, p), &shift);
        out.set(p, p, v);
    }
    Ok(out)
}

/// The Lie algebra s ⊗ A for commutative associative A, with bracket
/// [x⊗a, y⊗b] = [x,y]⊗ab. Jacobi is validated. Basis order is
/// s-major: x_i ⊗ a_p at flat index i·dim(A) + p.
pub fn tensor_algebra(s: &FinDimLie, a: &CoordinateAlgebra) -> Result<FinDimLie, FamilyError> {
    if !a.commutative || !a.associative {
        return Err(FamilyError::NotCommutativeAssociative);
    }
    let f = &s.field;
    if *f != a.field {
        return Err(FamilyError::BadInput("mismatched scalar fields".into()));
    }
    let dim = s.dim * a.dim;
    let labels = (0..s.dim)
        .flat_map(|i| {
            (0..a.dim).map(move |p| format!("{}({})", s.labels[i], a.labels[p]))
        })
        .collect();
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for i in 0..s.dim {
        for j in i..s.dim {
            let sv = s.basis_bracket(i, j);
            if sv.is_empty() {
                continue;
            }
            for p in 0..a.dim {
                let q0 = if i == j { p + 1 } else { 0 };
                for q in q0..a.dim {
                    let (fi, fj) = (i * a.dim + p, j * a.dim + q);
                    if fi >= fj {
                        continue;
                    }
                    let prod = a.basis_product(p, q);
                    let mut out: SparseVec = Vec::new();
                    for (k, c) in &sv {
                        for (r, m) in prod.iter().enumerate() {
                            if !m.is_zero() {
                                out.push((k * a.dim + r, f.mul(c, m)));
                            }
                        }
                    }
                    out.sort_by_key(|(k, _)| *k);
                    if !out.is_empty() {
                        brackets.insert((fi, fj), out);
                    }
                }
            }
        }
    }
    Ok(FinDimLie::from_sc(f.clone(), dim, labels, brackets)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdlie::standard;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn poly_quotient_is_commutative_associative_with_nilradical() {
        let f = q();
        let a = poly_quotient(&f, 3).unwrap();
        assert_eq!(a.dim, 3);
        assert!(a.commutative && a.associative);
        // t * t^2 = 0, t * t = t^2.
        assert_eq!(a.basis_product(1, 2), &vec![f.zero(); 3][..]);
        assert_eq!(a.basis_product(1, 1), &a.basis_vec(2)[..]);
        let n = a.nilradical().unwrap();
        assert_eq!(n.dim(), 2);
        assert!(n.contains_vector(&a.basis_vec(1)));
        assert!(n.contains_vector(&a.basis_vec(2)));
        assert!(!n.contains_vector(&a.unit_vec()));
        assert_eq!(a.nilpotency_index(&n).unwrap(), 3);
    }

    #[test]
    fn split_quadratic_ring_is_semisimple() {
        let f = q();
        // Q[t]/(t^2 - t) = Q x Q.
        let modulus = vec![f.zero(), f.neg(&f.one()), f.one()];
        let a = quotient_ring(&f, &modulus).unwrap();
        assert!(a.commutative && a.associative);
        assert_eq!(a.basis_product(1, 1), &a.basis_vec(1)[..]);
        assert_eq!(a.nilradical().unwrap().dim(), 0);
    }

    #[test]
    fn matrix_algebra_flags_and_products() {
        let f = q();
        let m = matrix_algebra(&f, 2).unwrap();
        let a = &m.algebra;
        assert_eq!(a.dim, 4);
        assert!(!a.commutative);
        assert!(a.associative);
        assert_eq!(a.nilradical().unwrap().dim(), 0);
        // E12 E21 = E11 = I - E22.
        let i12 = a.labels.iter().position(|l| l == "E12").unwrap();
        let i21 = a.labels.iter().position(|l| l == "E21").unwrap();
        let i22 = a.labels.iter().position(|l| l == "E22").unwrap();
        let prod = a.basis_product(i12, i21);
        let mut expect = vec![f.zero(); 4];
        expect[a.unit] = f.one();
        expect[i22] = f.neg(&f.one());
        assert_eq!(prod, &expect[..]);
        // E21 E12 = E22.
        assert_eq!(a.basis_product(i21, i12), &a.basis_vec(i22)[..]);
    }

    #[test]
    fn flags_are_computed_not_declared() {
        let f = q();
        // Basis 1, x, y with xx = y, xy = x, yx = 0, yy = 0:
        // noncommutative and nonassociative.
        let z = || vec![f.zero(); 3];
        let mut table = vec![vec![z(); 3]; 3];
        for i in 0..3 {
            table[0][i][i] = f.one();
            table[i][0][i] = f.one();
        }
        table[1][1][2] = f.one();
        table[1][2][1] = f.one();
        let a = CoordinateAlgebra::new(
            f.clone(),
            vec!["1".into(), "x".into(), "y".into()],
            0,
            table,
        )
        .unwrap();
        assert!(!a.commutative);
        assert!(!a.associative);
        assert!(a.nilradical().is_err());
    }

    #[test]
    fn unit_law_is_enforced() {
        let f = q();
        let z = || vec![f.zero(); 2];
        // 1 * x = 0 breaks the unit law.
        let mut table = vec![vec![z(); 2]; 2];
        table[0][0][0] = f.one();
        table[1][0][1] = f.one();
        let err = CoordinateAlgebra::new(f, vec!["1".into(), "x".into()], 0, table);
        assert!(matches!(err, Err(FamilyError::BadInput(_))));
    }

    #[test]
    fn symmetric_product_example_on_sl3() {
        let f = q();
        let mut e12 = Matrix::zero(&f, 3, 3);
        e12.set(0, 1, f.one());
        let mut e21 = Matrix::zero(&f, 3, 3);
        e21.set(1, 0, f.one());
        let p = symmetric_product(3, &e12, &e21).unwrap();
        // (E11 + E22)/2 - I/3.
        let half = f.div(&f.one(), &f.from_int(2)).unwrap();
        let third = f.div(&f.one(), &f.from_int(3)).unwrap();
        let mut expect = Matrix::zero(&f, 3, 3);
        expect.set(0, 0, f.sub(&half, &third));
        expect.set(1, 1, f.sub(&half, &third));
        expect.set(2, 2, f.neg(&third));
        assert_eq!(p, expect);
        assert!(p.trace().is_zero());
    }

    #[test]
    fn symmetric_product_on_sl2_cartan_vanishes() {
        let f = q();
        let mut h = Matrix::zero(&f, 2, 2);
        h.set(0, 0, f.one());
        h.set(1, 1, f.neg(&f.one()));
        let p = symmetric_product(2, &h, &h).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn symmetric_product_rejects_traceful_input() {
        let f = q();
        let mut e11 = Matrix::zero(&f, 2, 2);
        e11.set(0, 0, f.one());
        let mut x = Matrix::zero(&f, 2, 2);
        x.set(0, 1, f.one());
        assert!(matches!(
            symmetric_product(2, &e11, &x),
            Err(FamilyError::NotTraceless)
        ));
    }

    #[test]
    fn symmetric_product_is_symmetric_and_equivariant_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let f = q();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EED_05_01);
        let traceless = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut m = Matrix::zero(&f, 3, 3);
            for p in 0..3 {
                for r in 0..3 {
                    m.set(p, r, f.from_int(rng.gen_range(-3..=3)));
                }
            }
            let shift = f.div(&m.trace(), &f.from_int(3)).unwrap();
            for p in 0..3 {
                let v = f.sub(m.at(p, p), &shift);
                m.set(p, p, v);
            }
            m
        };
        for _ in 0..10 {
            let x = traceless(&mut rng);
            let y = traceless(&mut rng);
            let z = traceless(&mut rng);
            let xy = symmetric_product(3, &x, &y).unwrap();
            let yx = symmetric_product(3, &y, &x).unwrap();
            assert_eq!(xy, yx);
            // [z, x·y] = [z,x]·y + x·[z,y].
            let lhs = z.commutator(&xy).unwrap();
            let rhs = symmetric_product(3, &z.commutator(&x).unwrap(), &y)
                .unwrap()
                .add(&symmetric_product(3, &x, &z.commutator(&y).unwrap()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tensor_with_scalars_is_the_base_algebra() {
        let f = q();
        let s = standard::sl2(&f);
        let g = tensor_algebra(&s, &scalar_algebra(&f)).unwrap();
        assert_eq!(g.dim, 3);
        assert_eq!(g.brackets(), s.brackets());
    }

    #[test]
    fn tensor_with_dual_numbers_has_expected_radical() {
        let f = q();
        let s = standard::sl2(&f);
        let a = poly_quotient(&f, 2).unwrap();
        let g = tensor_algebra(&s, &a).unwrap();
        assert_eq!(g.dim, 6);
        let rad = g.solvable_radical();
        assert_eq!(rad.dim(), 3);
        // The radical is sl2 ⊗ (t): flat indices i*2 + 1.
        for i in 0..3 {
            assert!(rad.contains_vector(&g.basis_vec(i * 2 + 1)));
        }
        assert_eq!(g.labels[1], "e12(t)");
    }

    #[test]
    fn tensor_with_split_pair_splits_into_two_ideals() {
        let f = q();
        let s = standard::sl2(&f);
        let modulus = vec![f.zero(), f.neg(&f.one()), f.one()];
        let a = quotient_ring(&f, &modulus).unwrap();
        let g = tensor_algebra(&s, &a).unwrap();
        assert_eq!(g.dim, 6);
        assert_eq!(g.solvable_radical().dim(), 0);
        let reports = g.simple_quotients().unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.codim, 3);
        }
    }

    #[test]
    fn tensor_rejects_noncommutative_coordinates() {
        let f = q();
        let s = standard::sl2(&f);
        let m = matrix_algebra(&f, 2).unwrap();
        assert!(matches!(
            tensor_algebra(&s, &m.algebra),
            Err(FamilyError::NotCommutativeAssociative)
        ));
    }

    #[test]
    fn two_sided_ideals_of_quotient_rings() {
        let f = q();
        let a = poly_quotient(&f, 3).unwrap();
        let i = a.two_sided_ideal(&[a.basis_vec(1)]);
        assert_eq!(i.dim(), 2);
        let j = a.two_sided_ideal(&[a.unit_vec()]);
        assert_eq!(j.dim(), 3);
        let m = matrix_algebra(&f, 2).unwrap();
        let full = m.algebra.two_sided_ideal(&[m.algebra.basis_vec(1)]);
        assert_eq!(full.dim(), 4);
    }
}
