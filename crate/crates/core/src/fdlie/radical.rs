//! Radicals, maximal ideals of codimension > 1, and the canonical
//! descending filtration built from them.

use super::{FinDimLie, LieError};
use crate::field::rational_roots;
use crate::linalg::{Matrix, Subspace};

/// Which radical: the intersection-of-maximal-ideals radical, or its
/// finite variant. For finite-dimensional algebras every maximal ideal
/// of codimension > 1 qualifies for both, so the two agree here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalKind {
    Radical,
    FiniteRadical,
}

#[derive(Clone, Debug)]
pub struct IdealReport {
    /// The maximal ideal, as a subspace of the input algebra.
    pub ideal: Subspace,
    pub codim: usize,
    /// The simple quotient by the ideal.
    pub quotient: FinDimLie,
    pub quotient_centroid_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FiltrationStep {
    pub subspace: Subspace,
    pub certificates: Vec<Certificate>,
}

impl FinDimLie {
    /// The maximal solvable ideal, computed as the Killing-orthogonal
    /// complement of the derived subalgebra (Cartan's criterion).
    pub fn solvable_radical(&self) -> Subspace {
        let f = &self.field;
        let derived = self.derived_subalgebra();
        if derived.dim() == 0 {
            return self.full_space();
        }
        let k = self.killing_form();
        let rows: Vec<Vec<_>> = derived
            .basis()
            .iter()
            .map(|v| k.apply(v).expect("square"))
            .collect();
        Matrix::from_rows(f, rows).expect("rows").kernel()
    }

    /// The largest perfect ideal: the stable term of the derived series.
    pub fn largest_perfect_ideal(&self) -> Subspace {
        self.series(super::SeriesKind::Derived).last().unwrap().clone()
    }

    /// Killing-orthogonal complement of a subspace.
    pub fn killing_complement(&self, s: &Subspace) -> Subspace {
        let f = &self.field;
        if s.dim() == 0 {
            return self.full_space();
        }
        let k = self.killing_form();
        let rows: Vec<Vec<_>> = s.basis().iter().map(|v| k.apply(v).expect("square")).collect();
        Matrix::from_rows(f, rows).expect("rows").kernel()
    }

    /// All maximal ideals of codimension > 1, one per simple factor of
    /// the quotient by the solvable radical.
    pub fn simple_quotients(&self) -> Result<Vec<IdealReport>, LieError> {
        let rad = self.solvable_radical();
        let (q, qmap) = self.quotient(&rad)?;
        let factors = split_semisimple(&q)?;
        let mut out = Vec::new();
        for i in 0..factors.len() {
            // Preimage of the sum of all the other factors.
            let mut vecs: Vec<Vec<_>> = rad.basis().to_vec();
            for (j, other) in factors.iter().enumerate() {
                if i == j {
                    continue;
                }
                for v in other.basis() {
                    vecs.push(qmap.lift(v, &self.field, self.dim));
                }
            }
            let ideal = Subspace::span(&self.field, self.dim, vecs);
            debug_assert!(self.is_ideal(&ideal));
            let (simple, _) = self.quotient(&ideal)?;
            let centroid_dim = simple.centroid().basis.len();
            out.push(IdealReport {
                codim: self.dim - ideal.dim(),
                ideal,
                quotient_centroid_dim: centroid_dim,
                quotient: simple,
            });
        }
        Ok(out)
    }

    /// Intersection of all maximal ideals of codimension > 1; the whole
    /// algebra when there are none.
    pub fn paper_radical(&self, _kind: RadicalKind) -> Result<Subspace, LieError> {
        let reports = self.simple_quotients()?;
        let mut acc = self.full_space();
        for r in reports {
            acc = acc.intersect(&r.ideal)?;
        }
        Ok(acc)
    }

    /// The descending filtration: step 0 is the largest perfect ideal of
    /// the finite radical, and each successor is the derived subalgebra
    /// of the radical of the previous step. Every step carries
    /// certificates: the step is a perfect ideal, and the quotient to
    /// the next step is a central extension of the step's semisimple
    /// part.
    pub fn filtration(&self) -> Result<Vec<FiltrationStep>, LieError> {
        let f = &self.field;
        let radf = self.paper_radical(RadicalKind::FiniteRadical)?;
        let rad_alg = self.restrict_to_subalgebra(&radf)?;
        let perfect_core = rad_alg.largest_perfect_ideal();
        let mut cur = map_subspace(f, self.dim, &radf, &perfect_core);
        let mut steps = Vec::new();
        loop {
            let mut certs = Vec::new();
            let bb = {
                let b = self.bracket_subspaces(&cur, &cur);
                b
            };
            certs.push(Certificate {
                name: "perfect".into(),
                passed: bb == cur,
                detail: format!("[step, step] dim {} vs step dim {}", bb.dim(), cur.dim()),
            });
            certs.push(Certificate {
                name: "ideal".into(),
                passed: self.is_ideal(&cur),
                detail: "bracket with the whole algebra stays inside".into(),
            });
            if cur.dim() == 0 {
                steps.push(FiltrationStep { subspace: cur, certificates: certs });
                break;
            }
            let alg = self.restrict_to_subalgebra(&cur)?;
            let rad = alg.paper_radical(RadicalKind::Radical)?;
            let next_local = alg.bracket_subspaces(&rad, &rad);
            let next = map_subspace(f, self.dim, &cur, &next_local);
            let rad_global = map_subspace(f, self.dim, &cur, &rad);
            // Central extension certificate: [step, rad(step)] lands in
            // the successor, so rad/successor is central in
            // step/successor.
            let br = self.bracket_subspaces(&cur, &rad_global);
            certs.push(Certificate {
                name: "central_extension".into(),
                passed: next.contains(&br),
                detail: format!(
                    "[step, rad] dim {} inside successor dim {}",
                    br.dim(),
                    next.dim()
                ),
            });
            steps.push(FiltrationStep { subspace: cur.clone(), certificates: certs });
            if next == cur {
                break;
            }
            cur = next;
        }
        Ok(steps)
    }
}

/// Maps a subspace given in the coordinates of `frame`'s basis back to
/// ambient coordinates.
pub fn map_subspace(
    field: &crate::field::FieldSpec,
    ambient: usize,
    frame: &Subspace,
    local: &Subspace,
) -> Subspace {
    let mut vecs = Vec::new();
    for coords in local.basis() {
        let mut v = vec![field.zero(); ambient];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..ambient {
                v[i] = field.add(&v[i], &field.mul(c, &frame.basis()[k][i]));
            }
        }
        vecs.push(v);
    }
    Subspace::span(field, ambient, vecs)
}

/// Splits a semisimple algebra into its simple ideals.
///
/// Primary route: the minimal ideal generated by a single basis vector,
/// split off by its Killing-orthogonal complement. When every basis
/// vector generates the whole algebra, centroid elements with rational
/// eigenvalues provide the splitting; a centroid of dimension 1
/// certifies simplicity outright. Rational-eigenvalue extraction keeps
/// the procedure factorization-free; it is complete at desk scale.
pub fn split_semisimple(q: &FinDimLie) -> Result<Vec<Subspace>, LieError> {
    if q.dim == 0 {
        return Ok(Vec::new());
    }
    debug_assert_eq!(q.solvable_radical().dim(), 0, "input must be semisimple");
    let f = &q.field;
    let mut best: Option<Subspace> = None;
    for i in 0..q.dim {
        let ideal = q.ideal_generated(&[q.basis_vec(i)]);
        if ideal.dim() < q.dim {
            let better = match &best {
                None => true,
                Some(b) => ideal.dim() < b.dim(),
            };
            if better {
                best = Some(ideal);
            }
        }
    }
    if best.is_none() {
        // Secondary probe through the centroid.
        let cent = q.centroid();
        if cent.basis.len() == 1 {
            return Ok(vec![q.full_space()]);
        }
        'outer: for theta in &cent.basis {
            let mp = matrix_min_poly(theta);
            for root in rational_roots(&mp) {
                let shift = theta
                    .sub(&Matrix::identity(f, q.dim).scale(&f.from_rational(root.clone())))
                    .expect("square");
                if shift.is_zero() {
                    continue;
                }
                let ker = shift.kernel();
                if ker.dim() > 0 && ker.dim() < q.dim {
                    best = Some(ker);
                    break 'outer;
                }
            }
        }
        if best.is_none() {
            // No rational splitting visible: simple with a nontrivial
            // centroid field (complete for desk-scale inputs).
            return Ok(vec![q.full_space()]);
        }
    }
    let m = best.unwrap();
    let comp = q.killing_complement(&m);
    if m.intersect(&comp)?.dim() != 0 || m.sum(&comp)?.dim() != q.dim || !q.is_ideal(&comp) {
        return Err(LieError::NotAnIdeal);
    }
    let mut out = Vec::new();
    for part in [m, comp] {
        let alg = q.restrict_to_subalgebra(&part)?;
        for sub in split_semisimple(&alg)? {
            out.push(map_subspace(f, q.dim, &part, &sub));
        }
    }
    Ok(out)
}

/// Minimal polynomial of a square matrix, coefficients constant term
/// upward, monic.
pub fn matrix_min_poly(m: &Matrix) -> Vec<crate::field::Rational> {
    let f = &m.field;
    assert!(f.is_rationals(), "minimal polynomial extraction over Q");
    let n = m.rows;
    let mut powers: Vec<Vec<crate::field::FieldElement>> = vec![Matrix::identity(f, n).flatten()];
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(m).expect("square");
        let target = Matrix::from_rows(f, vec![cur.flatten()]).expect("row").transpose();
        let stacked = Matrix::from_rows(f, powers.clone()).expect("rows").transpose();
        match stacked.solve(&target) {
            Ok(sol) => {
                let k = powers.len();
                let mut coeffs = Vec::with_capacity(k + 1);
                for i in 0..k {
                    let c = sol.particular.at(i, 0).as_rational().expect("over Q").clone();
                    coeffs.push(-c);
                }
                coeffs.push(crate::field::Rational::from_integer(1.into()));
                return coeffs;
            }
            Err(_) => powers.push(cur.flatten()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::standard::*;
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn radical_of_solvable_is_everything() {
        let g = solvable2(&q());
        assert_eq!(g.solvable_radical().dim(), 2);
        assert_eq!(g.paper_radical(RadicalKind::Radical).unwrap().dim(), 2);
        assert!(g.simple_quotients().unwrap().is_empty());
    }

    #[test]
    fn radical_of_semisimple_is_zero() {
        let g = sl2(&q());
        assert_eq!(g.solvable_radical().dim(), 0);
        let reports = g.simple_quotients().unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].codim, 3);
        assert_eq!(reports[0].ideal.dim(), 0);
        assert_eq!(g.paper_radical(RadicalKind::Radical).unwrap().dim(), 0);
    }

    #[test]
    fn gl2_has_one_maximal_ideal_the_center() {
        let g = gl(&q(), 2);
        let reports = g.simple_quotients().unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].codim, 3);
        assert_eq!(reports[0].ideal, g.center());
        let rad = g.paper_radical(RadicalKind::Radical).unwrap();
        assert_eq!(rad, g.center());
        assert_eq!(rad, g.solvable_radical());
    }

    #[test]
    fn direct_sum_splits_into_two_factors() {
        let f = q();
        let g = FinDimLie::direct_sum(&sl2(&f), &sl2(&f)).unwrap();
        let reports = g.simple_quotients().unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.codim, 3);
            assert_eq!(r.quotient.dim, 3);
            assert!(r.quotient.is_perfect());
        }
        assert_eq!(g.paper_radical(RadicalKind::Radical).unwrap().dim(), 0);
    }

    #[test]
    fn rotated_direct_sum_still_splits() {
        // sl2 + sl2 in a basis where every basis vector has nonzero
        // projection to both factors: the centroid eigenvalue route.
        let f = q();
        let g = FinDimLie::direct_sum(&sl2(&f), &sl2(&f)).unwrap();
        // Change of basis: b_i = e_i + e_{i+3}, b_{i+3} = e_{i+3} for the
        // first copy mixed into the second.
        let mut rows = Vec::new();
        for i in 0..3 {
            let mut v = g.zero_vec();
            v[i] = f.one();
            v[i + 3] = f.one();
            rows.push(v);
        }
        for i in 0..3 {
            let mut v = g.zero_vec();
            v[i] = f.one();
            v[i + 3] = f.from_int(-1);
            rows.push(v);
        }
        // Build the algebra in the rotated basis.
        let basis = Subspace::span(&f, 6, rows.clone());
        assert_eq!(basis.dim(), 6);
        let rot = {
            use std::collections::BTreeMap;
            let mut brackets = BTreeMap::new();
            let m = Matrix::from_rows(&f, rows.clone()).unwrap();
            let minv_cols = m.transpose();
            for i in 0..6 {
                for j in (i + 1)..6 {
                    let w = g.bracket_eval(&rows[i], &rows[j]);
                    // coordinates of w in the rotated basis
                    let target = Matrix::from_rows(&f, vec![w]).unwrap().transpose();
                    let sol = minv_cols.solve(&target).unwrap();
                    let sv: Vec<(usize, _)> = (0..6)
                        .map(|k| (k, sol.particular.at(k, 0).clone()))
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                    if !sv.is_empty() {
                        brackets.insert((i, j), sv);
                    }
                }
            }
            FinDimLie::from_sc(f.clone(), 6, Vec::new(), brackets).unwrap()
        };
        // In the rotated basis every basis vector generates everything.
        assert!((0..6).all(|i| rot.ideal_generated(&[rot.basis_vec(i)]).dim() == 6));
        let factors = split_semisimple(&rot).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|s| s.dim() == 3));
    }

    #[test]
    fn semidirect_radical_agrees_with_module_part() {
        let f = q();
        let s = sl2(&f);
        let r = FinDimLie::abelian(f.clone(), 3);
        let action: Vec<Matrix> = (0..3).map(|i| s.ad_basis(i)).collect();
        let g = FinDimLie::semidirect(&s, &r, &action).unwrap();
        let rad = g.solvable_radical();
        assert_eq!(rad.dim(), 3);
        assert!((3..6).all(|i| rad.contains_vector(&g.basis_vec(i))));
        assert_eq!(g.paper_radical(RadicalKind::Radical).unwrap(), rad);
    }

    #[test]
    fn filtration_of_finite_dimensional_terminates_at_zero() {
        let f = q();
        for g in [
            sl2(&f),
            gl(&f, 2),
            heisenberg(&f),
            FinDimLie::direct_sum(&sl2(&f), &solvable2(&f)).unwrap(),
        ] {
            let steps = g.filtration().unwrap();
            assert_eq!(steps.last().unwrap().subspace.dim(), 0);
            assert!(steps.iter().all(|s| s.certificates.iter().all(|c| c.passed)));
        }
    }

    #[test]
    fn largest_perfect_ideal_examples() {
        let f = q();
        assert_eq!(sl2(&f).largest_perfect_ideal().dim(), 3);
        assert_eq!(solvable2(&f).largest_perfect_ideal().dim(), 0);
        assert_eq!(gl(&f, 2).largest_perfect_ideal().dim(), 3);
    }

    #[test]
    fn min_poly_of_nilpotent_and_projection() {
        let f = q();
        let mut n = Matrix::zero(&f, 2, 2);
        n.set(0, 1, f.one());
        let mp = matrix_min_poly(&n);
        // x^2
        assert_eq!(mp.len(), 3);
        assert!(mp[0].numer().bits() == 0 && mp[1].numer().bits() == 0);
        let mut p = Matrix::zero(&f, 2, 2);
        p.set(0, 0, f.one());
        // x^2 - x
        let mp2 = matrix_min_poly(&p);
        assert_eq!(mp2.len(), 3);
        assert_eq!(rational_roots(&mp2).len(), 2);
    }
}
