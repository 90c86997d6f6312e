//! Constructors for the graded families the rest of the crate probes:
//! Witt-type vector-field algebras, loop and current algebras, abelian
//! towers, direct sums with lattice concatenation, and regradings of
//! finite-dimensional algebras.
//!
//! The `simple` flag in attached metadata means graded-simple: no
//! proper nonzero graded ideal. For the Witt variants over a field of
//! characteristic zero this agrees with ordinary simplicity of the
//! full vector-field algebras, which is carried as metadata rather
//! than recomputed.

use crate::fdlie::{FinDimLie, LieError, SparseVec};
use crate::field::{FieldError, FieldSpec};
use crate::graded::{Component, ExplicitGraded, FamilyMeta, GradedError, GradedLie};
use crate::linalg::LinAlgError;
use thiserror::Error;

pub mod affine;
pub mod coordinate;
pub mod kn;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("coordinate algebra must be commutative and associative here")]
    NotCommutativeAssociative,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("case (a) requires s = sl_n with n >= 3")]
    CaseARequiresSlN,
    #[error("module is not a direct sum of adjoint copies: {0}")]
    NotAffine(String),
    #[error("derivation does not split as inner plus coordinate part: {0}")]
    SplitFailed(String),
    #[error("punctures must be pairwise distinct")]
    DuplicatePuncture,
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WittVariant {
    /// Basis L_n, n ∈ ℤ.
    Laurent,
    /// n ≥ -1.
    Polynomial,
    /// n ≥ 1.
    Positive,
}

/// Rank-1 graded algebra with [L_n, L_m] = (m - n) L_{n+m}.
#[derive(Clone, Debug)]
pub struct Witt {
    field: FieldSpec,
    variant: WittVariant,
    meta: FamilyMeta,
}

pub fn witt(field: FieldSpec, variant: WittVariant) -> Witt {
    let (name, simple, perfect) = match variant {
        WittVariant::Laurent => ("witt:laurent", true, true),
        WittVariant::Polynomial => ("witt:polynomial", true, true),
        // L_1 and L_2 are missed by every bracket, so the positive
        // variant is neither perfect nor simple.
        WittVariant::Positive => ("witt:positive", false, false),
    };
    Witt {
        field,
        variant,
        meta: FamilyMeta { name: name.to_string(), simple, perfect },
    }
}

impl Witt {
    fn supports(&self, n: i64) -> bool {
        match self.variant {
            WittVariant::Laurent => true,
            WittVariant::Polynomial => n >= -1,
            WittVariant::Positive => n >= 1,
        }
    }
}

impl GradedLie for Witt {
    fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn lattice_rank(&self) -> usize {
        1
    }

    fn component(&self, deg: &[i64]) -> Component {
        if self.supports(deg[0]) {
            Component::new(vec![format!("L{}", deg[0])])
        } else {
            Component::empty()
        }
    }

    fn hom_bracket(&self, d1: &[i64], i: usize, d2: &[i64], j: usize) -> SparseVec {
        let (n, m) = (d1[0], d2[0]);
        if i != 0 || j != 0 || n == m || !self.supports(n) || !self.supports(m) {
            return Vec::new();
        }
        // The degree sum stays in support for every variant when the
        // inputs are distinct supported degrees.
        debug_assert!(self.supports(n + m));
        vec![(0, self.field.from_int(m - n))]
    }

    fn meta(&self) -> Option<&FamilyMeta> {
        Some(&self.meta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopSupport {
    /// g ⊗ t^n, n ∈ ℤ.
    Laurent,
    /// n ≥ 0.
    Current,
    /// n ≥ 1.
    PositiveCurrent,
}

/// Loop-type algebra of a finite-dimensional base: fiber at n is a
/// copy of the base, bracket [x ⊗ t^n, y ⊗ t^m] = [x, y] ⊗ t^{n+m}.
#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    base: FinDimLie,
    support: LoopSupport,
    meta: FamilyMeta,
}

pub fn loop_algebra(base: &FinDimLie, support: LoopSupport) -> LoopAlgebra {
    let derived = base.bracket_subspaces(&base.full_space(), &base.full_space());
    let base_perfect = derived.dim() == base.dim;
    let base_simple = base.dim > 0
        && base.solvable_radical().dim() == 0
        && crate::fdlie::radical::split_semisimple(base)
            .map(|factors| factors.len() == 1)
            .unwrap_or(false);
    let (name, simple, perfect) = match support {
        // A graded ideal restricts to an ideal of the base on each
        // fiber, so the Laurent loop of a simple base is graded-simple.
        LoopSupport::Laurent => ("loop:laurent", base_simple, base_perfect),
        // g ⊗ (t) is a proper graded ideal.
        LoopSupport::Current => ("loop:current", false, base_perfect),
        // The degree-1 fiber is missed by every bracket.
        LoopSupport::PositiveCurrent => ("loop:positive", false, false),
    };
    LoopAlgebra {
        base: base.clone(),
        support,
        meta: FamilyMeta { name: name.to_string(), simple, perfect },
    }
}

impl LoopAlgebra {
    pub fn base(&self) -> &FinDimLie {
        &self.base
    }

    fn supports(&self, n: i64) -> bool {
        match self.support {
            LoopSupport::Laurent => true,
            LoopSupport::Current => n >= 0,
            LoopSupport::PositiveCurrent => n >= 1,
        }
    }
}

impl GradedLie for LoopAlgebra {
    fn field(&self) -> &FieldSpec {
        &self.base.field
    }

    fn lattice_rank(&self) -> usize {
        1
    }

    fn component(&self, deg: &[i64]) -> Component {
        if !self.supports(deg[0]) {
            return Component::empty();
        }
        Component::new(
            self.base
                .labels
                .iter()
                .map(|l| format!("{l}@t^{}", deg[0]))
                .collect(),
        )
    }

    fn hom_bracket(&self, d1: &[i64], i: usize, d2: &[i64], j: usize) -> SparseVec {
        if !self.supports(d1[0]) || !self.supports(d2[0]) {
            return Vec::new();
        }
        debug_assert!(self.supports(d1[0] + d2[0]));
        if d1[0] == d2[0] && i == j {
            return Vec::new();
        }
        self.base.basis_bracket(i, j)
    }

    fn meta(&self) -> Option<&FamilyMeta> {
        Some(&self.meta)
    }
}

/// One-dimensional fiber at every integer degree, zero bracket.
#[derive(Clone, Debug)]
pub struct AbelianTower {
    field: FieldSpec,
    meta: FamilyMeta,
}

pub fn abelian_tower(field: FieldSpec) -> AbelianTower {
    AbelianTower {
        field,
        meta: FamilyMeta { name: "abelian_tower".to_string(), simple: false, perfect: false },
    }
}

impl GradedLie for AbelianTower {
    fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn lattice_rank(&self) -> usize {
        1
    }

    fn component(&self, deg: &[i64]) -> Component {
        Component::new(vec![format!("a{}", deg[0])])
    }

    fn hom_bracket(&self, _: &[i64], _: usize, _: &[i64], _: usize) -> SparseVec {
        Vec::new()
    }

    fn meta(&self) -> Option<&FamilyMeta> {
        Some(&self.meta)
    }
}

/// Direct sum with concatenated degree lattices: the left summand
/// lives on degrees (d, 0), the right on (0, e), and the summands
/// commute. The degree-0 fiber concatenates left then right.
pub struct GradedSum<'a> {
    left: &'a dyn GradedLie,
    right: &'a dyn GradedLie,
}

pub fn graded_sum<'a>(left: &'a dyn GradedLie, right: &'a dyn GradedLie) -> GradedSum<'a> {
    assert_eq!(
        left.field(),
        right.field(),
        "summands must share a scalar field"
    );
    GradedSum { left, right }
}

enum SumSide {
    Left(Vec<i64>, usize),
    Right(Vec<i64>, usize),
}

impl<'a> GradedSum<'a> {
    fn split_entry(&self, deg: &[i64], idx: usize) -> Option<SumSide> {
        let (l, r) = deg.split_at(self.left.lattice_rank());
        let left_zero = l.iter().all(|&c| c == 0);
        let right_zero = r.iter().all(|&c| c == 0);
        let left_dim = if right_zero { self.left.component(l).dim } else { 0 };
        if right_zero && idx < left_dim {
            return Some(SumSide::Left(l.to_vec(), idx));
        }
        if left_zero {
            let j = idx - left_dim;
            if j < self.right.component(r).dim {
                return Some(SumSide::Right(r.to_vec(), j));
            }
        }
        None
    }

    fn left_offset_at(&self, deg: &[i64]) -> usize {
        let (l, r) = deg.split_at(self.left.lattice_rank());
        if r.iter().all(|&c| c == 0) {
            self.left.component(l).dim
        } else {
            0
        }
    }
}

impl<'a> GradedLie for GradedSum<'a> {
    fn field(&self) -> &FieldSpec {
        self.left.field()
    }

    fn lattice_rank(&self) -> usize {
        self.left.lattice_rank() + self.right.lattice_rank()
    }

    fn component(&self, deg: &[i64]) -> Component {
        let (l, r) = deg.split_at(self.left.lattice_rank());
        let mut labels = Vec::new();
        if r.iter().all(|&c| c == 0) {
            labels.extend(self.left.component(l).labels);
        }
        if l.iter().all(|&c| c == 0) {
            labels.extend(self.right.component(r).labels);
        }
        Component::new(labels)
    }

    fn hom_bracket(&self, d1: &[i64], i: usize, d2: &[i64], j: usize) -> SparseVec {
        let (Some(a), Some(b)) = (self.split_entry(d1, i), self.split_entry(d2, j)) else {
            return Vec::new();
        };
        let target: Vec<i64> = d1.iter().zip(d2).map(|(x, y)| x + y).collect();
        match (a, b) {
            (SumSide::Left(da, ia), SumSide::Left(db, ib)) => {
                self.left.hom_bracket(&da, ia, &db, ib)
            }
            (SumSide::Right(da, ia), SumSide::Right(db, ib)) => {
                let off = self.left_offset_at(&target);
                self.right
                    .hom_bracket(&da, ia, &db, ib)
                    .into_iter()
                    .map(|(k, c)| (off + k, c))
                    .collect()
            }
            _ => Vec::new(),
        }
    }
}

/// The loop construction applied to an already graded algebra: one
/// extra lattice axis for the loop degree, brackets acting fiberwise.
pub struct LoopOfGraded<'a> {
    inner: &'a dyn GradedLie,
}

pub fn loop_of_graded<'a>(inner: &'a dyn GradedLie) -> LoopOfGraded<'a> {
    LoopOfGraded { inner }
}

impl<'a> GradedLie for LoopOfGraded<'a> {
    fn field(&self) -> &FieldSpec {
        self.inner.field()
    }

    fn lattice_rank(&self) -> usize {
        self.inner.lattice_rank() + 1
    }

    fn component(&self, deg: &[i64]) -> Component {
        let (d, n) = deg.split_at(self.inner.lattice_rank());
        let inner = self.inner.component(d);
        Component::new(
            inner
                .labels
                .into_iter()
                .map(|l| format!("{l}@t^{}", n[0]))
                .collect(),
        )
    }

    fn hom_bracket(&self, d1: &[i64], i: usize, d2: &[i64], j: usize) -> SparseVec {
        let (a, n) = d1.split_at(self.inner.lattice_rank());
        let (b, m) = d2.split_at(self.inner.lattice_rank());
        if a == b && n == m && i == j {
            return Vec::new();
        }
        self.inner.hom_bracket(a, i, b, j)
    }
}

/// Regrades a finite-dimensional algebra by a per-basis-vector degree
/// assignment, rejecting assignments the bracket is not homogeneous
/// for.
pub fn finite_graded(g: &FinDimLie, degrees: &[i64]) -> Result<ExplicitGraded, GradedError> {
    ExplicitGraded::from_findim(g, degrees)
}

/// Central extension of the Laurent Witt algebra by the cocycle the
/// degree-0 cohomology solver produces at the construction window. The
/// cocycle values are cached, never hard-coded, and the family's
/// support is capped at the construction radius: beyond it the cocycle
/// is unknown, so no component is offered there.
#[derive(Clone, Debug)]
pub struct VirasoroHat {
    field: FieldSpec,
    radius: i64,
    /// omega[m] = cocycle value on (L_{-m}, L_m) for m >= 1.
    omega: std::collections::BTreeMap<i64, crate::field::FieldElement>,
    meta: FamilyMeta,
}

pub fn virasoro_hat(field: FieldSpec, radius: i64) -> Result<VirasoroHat, FamilyError> {
    if radius < 2 {
        return Err(FamilyError::BadInput(
            "cocycle normalization needs radius at least 2".into(),
        ));
    }
    let base = witt(field.clone(), WittVariant::Laurent);
    let window = crate::graded::Window::symmetric(1, radius, crate::graded::WindowMode::Discard);
    let report = crate::graded::graded_h2_degree0(&base, window)?;
    if report.dim != 1 || report.representative.is_none() {
        return Err(FamilyError::BadInput(format!(
            "expected a one-dimensional degree-0 cohomology at radius {radius}, got {}",
            report.dim
        )));
    }
    let mut omega = std::collections::BTreeMap::new();
    for m in 1..=radius {
        let v = report.value_at(m).ok_or_else(|| {
            FamilyError::BadInput(format!("missing cocycle value at degree {m}"))
        })?;
        omega.insert(m, v.clone());
    }
    Ok(VirasoroHat {
        field,
        radius,
        omega,
        meta: FamilyMeta { name: "virasoro_hat".to_string(), simple: false, perfect: true },
    })
}

impl VirasoroHat {
    /// Cached cocycle value on (L_{-m}, L_m), m >= 1.
    pub fn omega(&self, m: i64) -> Option<&crate::field::FieldElement> {
        self.omega.get(&m)
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }
}

impl GradedLie for VirasoroHat {
    fn field(&self) -> &FieldSpec {
        &self.field
    }

    fn lattice_rank(&self) -> usize {
        1
    }

    fn component(&self, deg: &[i64]) -> Component {
        let n = deg[0];
        if n == 0 {
            Component::new(vec!["L0".to_string(), "c".to_string()])
        } else if n.abs() <= self.radius {
            Component::new(vec![format!("L{n}")])
        } else {
            Component::empty()
        }
    }

    fn hom_bracket(&self, d1: &[i64], i: usize, d2: &[i64], j: usize) -> SparseVec {
        let (m, n) = (d1[0], d2[0]);
        // The central element annihilates everything.
        if (m == 0 && i == 1) || (n == 0 && j == 1) {
            return Vec::new();
        }
        if m == n || m.abs() > self.radius || n.abs() > self.radius {
            return Vec::new();
        }
        let mut out: SparseVec = Vec::new();
        if (m + n).abs() <= self.radius {
            out.push((0, self.field.from_int(n - m)));
        }
        if m + n == 0 {
            let w = if m < 0 {
                self.omega[&n].clone()
            } else {
                self.field.neg(&self.omega[&m])
            };
            if !w.is_zero() {
                out.push((1, w));
            }
        }
        out
    }

    fn meta(&self) -> Option<&FamilyMeta> {
        Some(&self.meta)
    }
}
