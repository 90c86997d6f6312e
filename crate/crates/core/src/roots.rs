//! Split-torus weight decompositions, root data with lattice rank for
//! window-truncated graded algebras, root strings, and quasi-minuscule
//! weight machinery for type-A factors.

use crate::fdlie::radical::matrix_min_poly;
use crate::fdlie::{FinDimLie, LieError};
use crate::field::{
    format_rational, rational_roots, FieldElement, FieldError, FieldSpec, Rational,
};
use crate::graded::{FamilyMeta, GradedError, Window, WindowedView};
use crate::linalg::{LinAlgError, Matrix, Subspace};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RootsError {
    #[error("torus elements {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("torus element {element} is not split: minimal polynomial has factor {factor}")]
    NotSplit { element: usize, factor: String },
    #[error("torus element {0} is not concentrated in degree zero")]
    NotDegreeZero(usize),
    #[error("root lattice has rank {0}, not one")]
    RankNotOne(usize),
    #[error("no quasi-minuscule tables for type {0}")]
    UnsupportedType(String),
    #[error("module dimension {0} exceeds the desk bound {1}")]
    BoundExceeded(usize, usize),
    #[error("split-torus analysis runs over the rationals")]
    UnsupportedField,
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

fn fmt_rat(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

fn fmt_poly(coeffs: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = fmt_rat(&c.abs());
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let body = if k > 0 && mag == "1" { var } else if k > 0 { format!("{mag}{var}") } else { mag };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

/// Divide a polynomial by (x - r); the remainder must be zero.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = coeffs.len() - 1;
    let mut q = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for k in (0..n).rev() {
        carry = &coeffs[k + 1] + r * &carry;
        q[k] = carry.clone();
    }
    debug_assert!((&coeffs[0] + r * &carry).is_zero(), "nonzero remainder");
    q
}

/// Rational eigenvalues when the polynomial splits into distinct
/// linear factors over Q; otherwise the offending factor, formatted.
fn distinct_linear_roots(minpoly: &[Rational]) -> Result<Vec<Rational>, String> {
    let mut rest = minpoly.to_vec();
    let mut found = Vec::new();
    for root in rational_roots(minpoly) {
        let mut mult = 0usize;
        loop {
            // Horner evaluation at the candidate root.
            let mut acc = Rational::zero();
            for c in rest.iter().rev() {
                acc = acc * &root + c;
            }
            if !acc.is_zero() {
                break;
            }
            rest = deflate(&rest, &root);
            mult += 1;
        }
        if mult > 1 {
            let sign = if root.is_negative() { "+" } else { "-" };
            return Err(format!("(x {sign} {})^{mult}", fmt_rat(&root.abs())));
        }
        found.push(root);
    }
    if rest.len() > 1 {
        return Err(fmt_poly(&rest));
    }
    found.sort();
    Ok(found)
}

/// Commuting elements whose adjoint actions are simultaneously
/// diagonalizable over the ground field, verified at construction.
#[derive(Clone, Debug)]
pub struct TorusSpec {
    pub elements: Vec<Vec<FieldElement>>,
    pub split: bool,
    eigenvalues: Vec<Vec<Rational>>,
}

impl TorusSpec {
    pub fn new(g: &FinDimLie, elements: Vec<Vec<FieldElement>>) -> Result<Self, RootsError> {
        if !g.field.is_rationals() {
            return Err(RootsError::UnsupportedField);
        }
        if elements.iter().any(|e| e.len() != g.dim) {
            return Err(RootsError::BadInput("torus element has the wrong length".into()));
        }
        for i in 0..elements.len() {
            for j in (i + 1)..elements.len() {
                let b = g.bracket_eval(&elements[i], &elements[j]);
                if b.iter().any(|c| !c.is_zero()) {
                    return Err(RootsError::NotCommuting(i, j));
                }
            }
        }
        let mut eigenvalues = Vec::new();
        for (i, x) in elements.iter().enumerate() {
            let mp = matrix_min_poly(&g.ad(x));
            match distinct_linear_roots(&mp) {
                Ok(evs) => eigenvalues.push(evs),
                Err(factor) => return Err(RootsError::NotSplit { element: i, factor }),
            }
        }
        Ok(TorusSpec { elements, split: true, eigenvalues })
    }

    /// Torus inside a window: elements must live in the degree-zero
    /// fiber, so their adjoint actions preserve every fiber.
    pub fn in_view(v: &WindowedView, elements: Vec<Vec<FieldElement>>) -> Result<Self, RootsError> {
        let zero_deg = vec![0i64; v.window.rank()];
        for (i, e) in elements.iter().enumerate() {
            if e.len() != v.dim() {
                return Err(RootsError::BadInput("torus element has the wrong length".into()));
            }
            for (k, c) in e.iter().enumerate() {
                if !c.is_zero() && v.degrees[k] != zero_deg {
                    return Err(RootsError::NotDegreeZero(i));
                }
            }
        }
        Self::new(&v.algebra, elements)
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn eigenvalues_of(&self, i: usize) -> &[Rational] {
        &self.eigenvalues[i]
    }
}

/// Refine a starting subspace into joint eigenspaces of the torus.
fn refine(
    g: &FinDimLie,
    t: &TorusSpec,
    start: Subspace,
) -> Result<Vec<(Vec<Rational>, Subspace)>, RootsError> {
    let f = &g.field;
    let total = start.dim();
    let mut parts = vec![(Vec::new(), start)];
    for (x, evs) in t.elements.iter().zip(&t.eigenvalues) {
        let ad = g.ad(x);
        let mut next = Vec::new();
        for (w, s) in &parts {
            for lam in evs {
                let shifted = ad.sub(
                    &Matrix::identity(f, g.dim).scale(&f.from_rational(lam.clone())),
                )?;
                let cap = shifted.kernel().intersect(s)?;
                if cap.dim() > 0 {
                    let mut wn = w.clone();
                    wn.push(lam.clone());
                    next.push((wn, cap));
                }
            }
        }
        parts = next;
    }
    if parts.iter().map(|(_, s)| s.dim()).sum::<usize>() != total {
        // Splitness of the torus makes the refinement exhaustive on
        // every invariant subspace; anything else is a logic error.
        return Err(RootsError::BadInput("eigenspace refinement lost dimensions".into()));
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts)
}

/// Simultaneous eigenspace decomposition under a split torus. The
/// result is a direct sum, and brackets add weights; both facts are
/// verified before returning.
pub fn weight_decomposition(
    g: &FinDimLie,
    t: &TorusSpec,
) -> Result<Vec<(Vec<Rational>, Subspace)>, RootsError> {
    let parts = refine(g, t, g.full_space())?;
    let index: BTreeMap<&Vec<Rational>, usize> =
        parts.iter().enumerate().map(|(i, (w, _))| (w, i)).collect();
    for (wa, sa) in &parts {
        for (wb, sb) in &parts {
            let target: Vec<Rational> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            let img = g.bracket_subspaces(sa, sb);
            let ok = match index.get(&target) {
                Some(&k) => parts[k].1.contains(&img),
                None => img.dim() == 0,
            };
            if !ok {
                return Err(RootsError::BadInput(
                    "bracket escaped the weight grading".into(),
                ));
            }
        }
    }
    Ok(parts)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub alpha: Vec<Rational>,
    pub degree: i64,
    pub mult: usize,
    /// Real means the weight part is nonzero.
    pub real: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub torus_rank: usize,
    /// Sorted lexicographically by (weight, degree).
    pub roots: Vec<Root>,
    /// Basis of the Q-span of observed roots as vectors (alpha, n);
    /// the lattice they generate is torsion free, so its rank is the
    /// dimension of this span.
    pub lattice_basis: Vec<Vec<Rational>>,
    pub rank: usize,
    pub has_real_root: bool,
}

impl RootDatum {
    pub fn contains(&self, alpha: &[Rational], degree: i64) -> bool {
        self.roots.iter().any(|r| r.alpha == alpha && r.degree == degree)
    }
}

fn assemble_datum(
    torus_rank: usize,
    observed: Vec<(Vec<Rational>, i64, usize)>,
) -> Result<RootDatum, RootsError> {
    let f = FieldSpec::rationals();
    let mut roots: Vec<Root> = observed
        .into_iter()
        .map(|(alpha, degree, mult)| {
            let real = alpha.iter().any(|c| !c.is_zero());
            Root { alpha, degree, mult, real }
        })
        .collect();
    roots.sort_by(|a, b| (&a.alpha, a.degree).cmp(&(&b.alpha, b.degree)));
    let rows: Vec<Vec<FieldElement>> = roots
        .iter()
        .map(|r| {
            let mut row: Vec<FieldElement> =
                r.alpha.iter().map(|c| f.from_rational(c.clone())).collect();
            row.push(f.from_int(r.degree));
            row
        })
        .collect();
    let (lattice_basis, rank) = if rows.is_empty() {
        (Vec::new(), 0)
    } else {
        let (rref, rank, _) = Matrix::from_rows(&f, rows)?.rref();
        let basis = (0..rank)
            .map(|i| {
                (0..rref.cols)
                    .map(|j| rref.at(i, j).as_rational().expect("over Q").clone())
                    .collect()
            })
            .collect();
        (basis, rank)
    };
    let has_real_root = roots.iter().any(|r| r.real);
    Ok(RootDatum { torus_rank, roots, lattice_basis, rank, has_real_root })
}

/// Roots of a Z-graded window under a degree-zero split torus: weight
/// decomposition fiber by fiber, with degrees attached.
pub fn root_data(v: &WindowedView, t: &TorusSpec) -> Result<RootDatum, RootsError> {
    if v.window.rank() != 1 {
        return Err(RootsError::BadInput("root data needs a Z-graded window".into()));
    }
    let zero_deg = vec![0i64];
    for (i, e) in t.elements.iter().enumerate() {
        for (k, c) in e.iter().enumerate() {
            if !c.is_zero() && v.degrees[k] != zero_deg {
                return Err(RootsError::NotDegreeZero(i));
            }
        }
    }
    let f = &v.algebra.field;
    let mut observed = Vec::new();
    for (deg, &(off, fdim)) in &v.fibers {
        let units: Vec<Vec<FieldElement>> =
            (off..off + fdim).map(|k| v.algebra.basis_vec(k)).collect();
        let fiber = Subspace::span(f, v.algebra.dim, units);
        for (alpha, sub) in refine(&v.algebra, t, fiber)? {
            observed.push((alpha, deg[0], sub.dim()));
        }
    }
    assemble_datum(t.rank(), observed)
}

/// Roots of an ungraded algebra, placed at degree zero.
pub fn root_data_findim(g: &FinDimLie, t: &TorusSpec) -> Result<RootDatum, RootsError> {
    let observed = weight_decomposition(g, t)?
        .into_iter()
        .map(|(alpha, sub)| (alpha, 0i64, sub.dim()))
        .collect();
    assemble_datum(t.rank(), observed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank1Class {
    AllReal,
    AllImaginary,
}

#[derive(Clone, Debug)]
pub struct Rank1Report {
    pub class: Rank1Class,
    pub report: String,
    /// Some(true/false) when family metadata predicts a class.
    pub metadata_consistent: Option<bool>,
}

/// The rank-one dichotomy: a rank-one root lattice is generated by a
/// single vector, so either its weight part is nonzero and every root
/// off the origin is real, or it vanishes and all roots are imaginary.
pub fn rank1_classify(
    v: &WindowedView,
    t: &TorusSpec,
    meta: Option<&FamilyMeta>,
) -> Result<Rank1Report, RootsError> {
    let datum = root_data(v, t)?;
    if datum.rank != 1 {
        return Err(RootsError::RankNotOne(datum.rank));
    }
    let gen = &datum.lattice_basis[0];
    let weight_part_zero = gen[..datum.torus_rank].iter().all(|c| c.is_zero());
    let class = if weight_part_zero { Rank1Class::AllImaginary } else { Rank1Class::AllReal };
    let gen_str: Vec<String> = gen.iter().map(fmt_rat).collect();
    let report = format!(
        "lattice generator ({}); {}",
        gen_str.join(", "),
        match class {
            Rank1Class::AllReal => "all roots off the origin are real",
            Rank1Class::AllImaginary => "all roots are imaginary",
        }
    );
    let metadata_consistent = meta.and_then(|m| {
        if m.name.starts_with("witt") || m.name == "virasoro_hat" {
            Some(class == Rank1Class::AllReal)
        } else {
            None
        }
    });
    Ok(Rank1Report { class, report, metadata_consistent })
}

#[derive(Clone, Debug)]
pub struct StringReport {
    /// Contiguous offsets k (including 0) with beta + k*alpha a root.
    pub ks: Vec<i64>,
    pub members: Vec<(Vec<Rational>, i64)>,
    pub boundary_hit_up: bool,
    pub boundary_hit_down: bool,
}

impl StringReport {
    /// The walk left the window while still on roots, so termination
    /// could not be certified from this window alone.
    pub fn unbounded_in_window(&self) -> bool {
        self.boundary_hit_up || self.boundary_hit_down
    }
}

/// The alpha-string through beta: maximal run of consecutive k around
/// zero with beta + k*alpha a root. Alpha must have a nonzero weight
/// part; beta must be an observed root.
pub fn alpha_string(
    datum: &RootDatum,
    alpha: (&[Rational], i64),
    beta: (&[Rational], i64),
    window: &Window,
) -> Result<StringReport, RootsError> {
    if alpha.0.len() != datum.torus_rank || beta.0.len() != datum.torus_rank {
        return Err(RootsError::BadInput("weight length does not match the torus".into()));
    }
    if alpha.0.iter().all(|c| c.is_zero()) {
        return Err(RootsError::BadInput("alpha must be real (nonzero weight part)".into()));
    }
    if !datum.contains(beta.0, beta.1) {
        return Err(RootsError::BadInput("beta is not an observed root".into()));
    }
    let set: BTreeSet<(Vec<Rational>, i64)> = datum
        .roots
        .iter()
        .map(|r| (r.alpha.clone(), r.degree))
        .collect();
    let candidate = |k: i64| -> (Vec<Rational>, i64) {
        let w = beta
            .0
            .iter()
            .zip(alpha.0)
            .map(|(b, a)| b + a * Rational::from_integer(k.into()))
            .collect();
        (w, beta.1 + k * alpha.1)
    };
    let mut ks = vec![0i64];
    let mut members = vec![(beta.0.to_vec(), beta.1)];
    // A real alpha makes all candidates distinct, so each direction
    // stops within |roots| steps or at the window boundary.
    let cap = datum.roots.len() as i64 + 1;
    let mut walk = |dir: i64| -> bool {
        for step in 1..=cap {
            let (w, n) = candidate(dir * step);
            if !window.contains(&[n]) {
                return true;
            }
            if !set.contains(&(w.clone(), n)) {
                return false;
            }
            ks.push(dir * step);
            members.push((w, n));
        }
        false
    };
    let boundary_hit_up = walk(1);
    let boundary_hit_down = walk(-1);
    ks.sort();
    members.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(StringReport { ks, members, boundary_hit_up, boundary_hit_down })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// One simple factor of a semisimple algebra, named by type and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorTag {
    pub series: Series,
    pub rank: usize,
}

impl FactorTag {
    pub fn a(rank: usize) -> Self {
        FactorTag { series: Series::A, rank }
    }
}

fn check_type_a(tag: FactorTag) -> Result<(), RootsError> {
    if tag.series == Series::A && (tag.rank == 1 || tag.rank == 2) {
        Ok(())
    } else {
        Err(RootsError::UnsupportedType(format!("{:?}{}", tag.series, tag.rank)))
    }
}

/// Simple root rows in eigenvalue coordinates (the i-th coordinate of
/// a weight is its pairing with the i-th simple coroot).
fn simple_roots(tag: FactorTag) -> Vec<Vec<i64>> {
    match tag.rank {
        1 => vec![vec![2]],
        _ => vec![vec![2, -1], vec![-1, 2]],
    }
}

/// Weyl dimension via the positive-coroot product; for type A all
/// roots are coroot-sums of consecutive simple ranges.
pub fn weyl_dim(tag: FactorTag, hw: &[i64]) -> Result<usize, RootsError> {
    check_type_a(tag)?;
    if hw.len() != tag.rank || hw.iter().any(|&c| c < 0) {
        return Err(RootsError::BadInput("highest weight must be dominant integral".into()));
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for lo in 0..tag.rank {
        for hi in lo..tag.rank {
            let pairing: i64 = hw[lo..=hi].iter().sum();
            let height = (hi - lo + 1) as u128;
            num *= pairing as u128 + height;
            den *= height;
        }
    }
    Ok((num / den) as usize)
}

/// Orbit of a weight under the Weyl group, by reflection closure.
pub fn weyl_orbit(tag: FactorTag, weight: &[i64]) -> Result<BTreeSet<Vec<i64>>, RootsError> {
    check_type_a(tag)?;
    let alphas = simple_roots(tag);
    let mut orbit = BTreeSet::new();
    let mut queue = vec![weight.to_vec()];
    while let Some(w) = queue.pop() {
        if !orbit.insert(w.clone()) {
            continue;
        }
        for (i, alpha) in alphas.iter().enumerate() {
            let refl: Vec<i64> = w.iter().zip(alpha).map(|(c, a)| c - w[i] * a).collect();
            if !orbit.contains(&refl) {
                queue.push(refl);
            }
        }
    }
    Ok(orbit)
}

/// A simple highest-weight module with explicit weights and actions.
#[derive(Clone, Debug)]
pub struct WeightedModule {
    pub tag: FactorTag,
    pub highest: Vec<i64>,
    pub dim: usize,
    /// Weight of each basis vector, in eigenvalue coordinates.
    pub weights: Vec<Vec<i64>>,
    pub raise: Vec<Matrix>,
    pub cartan: Vec<Matrix>,
    pub lower: Vec<Matrix>,
}

const DESK_DIM_BOUND: usize = 200;

/// Monomials of fixed total degree over a small variable set, with a
/// derivation action induced from a linear action on the variables.
struct SymFactor {
    monos: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
    /// Weight of each variable.
    var_weights: Vec<Vec<i64>>,
}

impl SymFactor {
    fn new(nvars: usize, degree: usize, var_weights: Vec<Vec<i64>>) -> Self {
        let mut monos = Vec::new();
        let mut cur = vec![0usize; nvars];
        fn emit(cur: &mut Vec<usize>, pos: usize, left: usize, out: &mut Vec<Vec<usize>>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(cur.clone());
                return;
            }
            for take in (0..=left).rev() {
                cur[pos] = take;
                emit(cur, pos + 1, left - take, out);
            }
        }
        emit(&mut cur, 0, degree, &mut monos);
        let index = monos.iter().cloned().zip(0..).collect();
        SymFactor { monos, index, var_weights }
    }

    fn mono_weight(&self, mono: &[usize]) -> Vec<i64> {
        let rank = self.var_weights[0].len();
        let mut w = vec![0i64; rank];
        for (i, &m) in mono.iter().enumerate() {
            for (k, c) in self.var_weights[i].iter().enumerate() {
                w[k] += m as i64 * c;
            }
        }
        w
    }
}

/// Derivation action of a variable-level operator on a product of
/// symmetric powers, as one ambient matrix.
fn derivation_matrix(
    f: &FieldSpec,
    factors: &[SymFactor],
    reps: &[Vec<Vec<i64>>],
) -> Matrix {
    let sizes: Vec<usize> = factors.iter().map(|s| s.monos.len()).collect();
    let total: usize = sizes.iter().product();
    let mut m = Matrix::zero(f, total, total);
    for col in 0..total {
        // Mixed-radix decomposition, last factor fastest.
        let mut rem = col;
        let mut mono_ids = vec![0usize; factors.len()];
        for fi in (0..factors.len()).rev() {
            mono_ids[fi] = rem % sizes[fi];
            rem /= sizes[fi];
        }
        for (fi, fac) in factors.iter().enumerate() {
            let mono = &fac.monos[mono_ids[fi]];
            let rep = &reps[fi];
            for (v, &mv) in mono.iter().enumerate() {
                if mv == 0 {
                    continue;
                }
                for l in 0..rep.len() {
                    let c = rep[l][v];
                    if c == 0 {
                        continue;
                    }
                    let mut target = mono.clone();
                    target[v] -= 1;
                    target[l] += 1;
                    let tid = fac.index[&target];
                    let mut row = 0usize;
                    for (fj, &sz) in sizes.iter().enumerate() {
                        let id = if fj == fi { tid } else { mono_ids[fj] };
                        row = row * sz + id;
                    }
                    let add = f.from_int(mv as i64 * c);
                    let cur = m.at(row, col).clone();
                    m.set(row, col, f.add(&cur, &add));
                }
            }
        }
    }
    m
}

/// Induced action on wedge squares of a 3-dimensional space, in the
/// basis e1^e2, e1^e3, e2^e3.
fn lambda2(rep: &[Vec<i64>; 3]) -> Vec<Vec<i64>> {
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut out = vec![vec![0i64; 3]; 3];
    for (col, &(j, k)) in pairs.iter().enumerate() {
        let mut add = |a: usize, b: usize, c: i64| {
            if a == b || c == 0 {
                return;
            }
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            let row = pairs.iter().position(|&p| p == (lo, hi)).unwrap();
            out[row][col] += sign * c;
        };
        for i in 0..3 {
            add(i, k, rep[i][j]);
            add(j, i, rep[i][k]);
        }
    }
    out
}

struct TypeAData {
    factors: Vec<SymFactor>,
    raise: Vec<Vec<Vec<Vec<i64>>>>,
    cartan: Vec<Vec<Vec<Vec<i64>>>>,
    lower: Vec<Vec<Vec<Vec<i64>>>>,
}

fn type_a_data(tag: FactorTag, hw: &[i64]) -> TypeAData {
    match tag.rank {
        1 => {
            let e = vec![vec![0, 1], vec![0, 0]];
            let fm = vec![vec![0, 0], vec![1, 0]];
            let h = vec![vec![1, 0], vec![0, -1]];
            let factors = vec![SymFactor::new(2, hw[0] as usize, vec![vec![1], vec![-1]])];
            TypeAData { factors, raise: vec![vec![e]], cartan: vec![vec![h]], lower: vec![vec![fm]] }
        }
        _ => {
            let unit = |i: usize, j: usize| -> [Vec<i64>; 3] {
                let mut m = [vec![0i64; 3], vec![0i64; 3], vec![0i64; 3]];
                m[i][j] = 1;
                m
            };
            let diag = |a: i64, b: i64, c: i64| -> [Vec<i64>; 3] {
                [vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]]
            };
            let gens = [
                unit(0, 1),
                unit(1, 2),
                diag(1, -1, 0),
                diag(0, 1, -1),
                unit(1, 0),
                unit(2, 1),
            ];
            let v_weights = vec![vec![1, 0], vec![-1, 1], vec![0, -1]];
            let w_weights = vec![vec![0, 1], vec![1, -1], vec![-1, 0]];
            let factors = vec![
                SymFactor::new(3, hw[0] as usize, v_weights),
                SymFactor::new(3, hw[1] as usize, w_weights),
            ];
            let pair = |g: &[Vec<i64>; 3]| vec![g.to_vec(), lambda2(g)];
            TypeAData {
                factors,
                raise: vec![pair(&gens[0]), pair(&gens[1])],
                cartan: vec![pair(&gens[2]), pair(&gens[3])],
                lower: vec![pair(&gens[4]), pair(&gens[5])],
            }
        }
    }
}

/// Simple module by lowering closure from the highest-weight monomial
/// inside a product of symmetric powers, with exact dependence
/// pruning, then restriction of the generator actions to the closure.
pub fn simple_module(tag: FactorTag, hw: &[i64]) -> Result<WeightedModule, RootsError> {
    check_type_a(tag)?;
    let expected = weyl_dim(tag, hw)?;
    if expected > DESK_DIM_BOUND {
        return Err(RootsError::BoundExceeded(expected, DESK_DIM_BOUND));
    }
    let f = FieldSpec::rationals();
    let data = type_a_data(tag, hw);
    let raise: Vec<Matrix> =
        data.raise.iter().map(|r| derivation_matrix(&f, &data.factors, r)).collect();
    let cartan: Vec<Matrix> =
        data.cartan.iter().map(|r| derivation_matrix(&f, &data.factors, r)).collect();
    let lower: Vec<Matrix> =
        data.lower.iter().map(|r| derivation_matrix(&f, &data.factors, r)).collect();
    let ambient: usize = data.factors.iter().map(|s| s.monos.len()).product();
    let alphas = simple_roots(tag);

    // Highest-weight monomial: first variable to the full degree in
    // every factor, which is index 0 in each factor's ordering.
    let mut start = vec![f.zero(); ambient];
    start[0] = f.one();
    let mut basis: Vec<Vec<FieldElement>> = Vec::new();
    let mut weights: Vec<Vec<i64>> = Vec::new();
    let mut span = Subspace::zero(&f, ambient);
    let sizes: Vec<usize> = data.factors.iter().map(|s| s.monos.len()).collect();
    let mut queue = vec![(start, hw.to_vec())];
    while let Some((vec, w)) = queue.pop() {
        if span.contains_vector(&vec) {
            continue;
        }
        // Lowering from a weight vector stays weight-homogeneous, so
        // every support monomial must carry the tracked weight; this
        // pins the derivation matrices to the weight grading.
        for (k, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut rem = k;
            let mut wsum = vec![0i64; tag.rank];
            for fi in (0..sizes.len()).rev() {
                let id = rem % sizes[fi];
                rem /= sizes[fi];
                let mw = data.factors[fi].mono_weight(&data.factors[fi].monos[id]);
                for (x, y) in wsum.iter_mut().zip(mw) {
                    *x += y;
                }
            }
            if wsum != w {
                return Err(RootsError::BadInput(
                    "closure vector is not weight-homogeneous".into(),
                ));
            }
        }
        basis.push(vec.clone());
        weights.push(w.clone());
        span = Subspace::span(&f, ambient, basis.clone());
        for (i, lo) in lower.iter().enumerate() {
            let img = lo.apply(&vec)?;
            if img.iter().any(|c| !c.is_zero()) {
                let wn: Vec<i64> = w.iter().zip(&alphas[i]).map(|(c, a)| c - a).collect();
                queue.push((img, wn));
            }
        }
    }
    if basis.len() != expected {
        return Err(RootsError::BadInput(format!(
            "closure found {} vectors but the dimension recursion says {}",
            basis.len(),
            expected
        )));
    }
    // Restrict each generator to the closure by solving in the frame.
    let frame = Matrix::from_rows(&f, basis.clone())?.transpose();
    let restrict = |g: &Matrix| -> Result<Matrix, RootsError> {
        let target = g.mul(&frame)?;
        let sol = frame.solve(&target)?;
        Ok(sol.particular)
    };
    let raise = raise.iter().map(&restrict).collect::<Result<Vec<_>, _>>()?;
    let cartan = cartan.iter().map(&restrict).collect::<Result<Vec<_>, _>>()?;
    let lower = lower.iter().map(&restrict).collect::<Result<Vec<_>, _>>()?;
    Ok(WeightedModule {
        tag,
        highest: hw.to_vec(),
        dim: basis.len(),
        weights,
        raise,
        cartan,
        lower,
    })
}

/// Quasi-minuscule weights of one simple factor, derived by scanning
/// small dominant weights for the orbit property: the weight set of
/// L(w) equals the Weyl orbit of w, possibly together with zero.
///
/// The scan box has coefficients at most two. This is exhaustive: if
/// some coefficient c_i of w exceeds one then w - alpha_i is a weight
/// of L(w) of different length, which forces w = alpha_i, and simple
/// roots have coefficients at most two in type A.
pub fn factor_qm_weights(tag: FactorTag) -> Result<Vec<Vec<i64>>, RootsError> {
    check_type_a(tag)?;
    let mut out = Vec::new();
    let mut candidates = Vec::new();
    let mut cur = vec![0i64; tag.rank];
    loop {
        if cur.iter().any(|&c| c > 0) {
            candidates.push(cur.clone());
        }
        let mut pos = tag.rank;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] <= 2 {
                break;
            }
            cur[pos] = 0;
        }
        if cur.iter().all(|&c| c == 0) {
            break;
        }
    }
    for cand in candidates {
        let m = simple_module(tag, &cand)?;
        let wset: BTreeSet<Vec<i64>> = m.weights.iter().cloned().collect();
        let orbit = weyl_orbit(tag, &cand)?;
        let mut with_zero = orbit.clone();
        with_zero.insert(vec![0; tag.rank]);
        if wset == orbit || wset == with_zero {
            out.push(cand);
        }
    }
    out.sort();
    Ok(out)
}

/// Quasi-minuscule weights of a semisimple list: pick a nonempty set
/// of factors and one quasi-minuscule weight for each chosen factor,
/// zero elsewhere; coordinates are concatenated per factor.
pub fn qm_weights(factors: &[FactorTag]) -> Result<Vec<Vec<i64>>, RootsError> {
    if factors.is_empty() {
        return Err(RootsError::BadInput("need at least one factor".into()));
    }
    let per: Vec<Vec<Vec<i64>>> =
        factors.iter().map(|&t| factor_qm_weights(t)).collect::<Result<_, _>>()?;
    let mut combos: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for (tag, choices) in factors.iter().zip(&per) {
        let mut next = Vec::new();
        for prefix in &combos {
            let mut with_zero = prefix.clone();
            with_zero.push(vec![0; tag.rank]);
            next.push(with_zero);
            for c in choices {
                let mut with_c = prefix.clone();
                with_c.push(c.clone());
                next.push(with_c);
            }
        }
        combos = next;
    }
    let mut out: Vec<Vec<i64>> = combos
        .into_iter()
        .map(|blocks| blocks.concat())
        .filter(|w| w.iter().any(|&c| c != 0))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CoverReport {
    pub trivial: bool,
    pub covered: bool,
    /// A quasi-minuscule weight found among the module's weights.
    pub matched: Option<Vec<i64>>,
}

/// A nontrivial simple module must support some quasi-minuscule
/// weight; trivial modules pass vacuously.
pub fn qm_cover_check(m: &WeightedModule) -> Result<CoverReport, RootsError> {
    let trivial = m.weights.iter().all(|w| w.iter().all(|&c| c == 0));
    if trivial {
        return Ok(CoverReport { trivial, covered: true, matched: None });
    }
    let wset: BTreeSet<&Vec<i64>> = m.weights.iter().collect();
    for mu in factor_qm_weights(m.tag)? {
        if wset.contains(&mu) {
            return Ok(CoverReport { trivial, covered: true, matched: Some(mu) });
        }
    }
    Ok(CoverReport { trivial, covered: false, matched: None })
}
