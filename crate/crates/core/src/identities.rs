//! Noncommutative and Lie polynomial evaluation over exact matrices:
//! the degree-4 central identity of 2x2 matrices, standard identities,
//! and polynomial-identity testing of Lie algebras.

use crate::fdlie::FinDimLie;
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::linalg::{LinAlgError, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("argument shapes do not match the polynomial")]
    ShapeMismatch,
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A polynomial in noncommuting variables x_0..x_{nvars-1}. Terms are
/// kept merged with words in lexicographic order, so equal polynomials
/// have identical representations.
#[derive(Clone, Debug, PartialEq)]
pub struct NcPolynomial {
    pub field: FieldSpec,
    pub nvars: usize,
    terms: BTreeMap<Vec<usize>, FieldElement>,
}

impl NcPolynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        NcPolynomial { field, nvars, terms: BTreeMap::new() }
    }

    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Result<Self, IdentityError> {
        if i >= nvars {
            return Err(IdentityError::BadInput(format!("variable {i} out of range")));
        }
        let one = field.one();
        let mut p = Self::zero(field, nvars);
        p.terms.insert(vec![i], one);
        Ok(p)
    }

    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        terms: Vec<(FieldElement, Vec<usize>)>,
    ) -> Result<Self, IdentityError> {
        let mut p = Self::zero(field, nvars);
        for (c, w) in terms {
            if w.iter().any(|&v| v >= nvars) {
                return Err(IdentityError::BadInput("word uses an out-of-range variable".into()));
            }
            p.add_term(c, w);
        }
        Ok(p)
    }

    fn add_term(&mut self, c: FieldElement, w: Vec<usize>) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = f.add(e.get(), &c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &FieldElement)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (w, x) in &self.terms {
            out.add_term(f.mul(x, c), w.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&other.field.from_int(-1)))
    }

    /// Product by word concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars.max(other.nvars));
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(f.mul(c1, c2), w);
            }
        }
        out
    }
}

/// Exact evaluation on square matrices; the empty word contributes a
/// multiple of the identity.
pub fn nc_eval(p: &NcPolynomial, args: &[Matrix]) -> Result<Matrix, IdentityError> {
    if args.len() != p.nvars {
        return Err(IdentityError::ShapeMismatch);
    }
    let f = &p.field;
    let d = match args.first() {
        Some(m) => {
            if m.rows != m.cols {
                return Err(IdentityError::ShapeMismatch);
            }
            m.rows
        }
        // A polynomial in zero variables is evaluated in 1x1 matrices.
        None => 1,
    };
    if args.iter().any(|m| m.rows != d || m.cols != d || m.field != *f) {
        return Err(IdentityError::ShapeMismatch);
    }
    let mut out = Matrix::zero(f, d, d);
    // Words arrive in lexicographic order, so consecutive words share
    // prefixes; keep a stack of prefix products to reuse them.
    let mut prev: &[usize] = &[];
    let mut stack: Vec<Matrix> = Vec::new();
    for (w, c) in p.terms() {
        let common = prev.iter().zip(w.iter()).take_while(|(a, b)| a == b).count();
        stack.truncate(common);
        for &v in &w[common..] {
            let next = match stack.last() {
                Some(m) => m.mul(&args[v])?,
                None => args[v].clone(),
            };
            stack.push(next);
        }
        match stack.last() {
            Some(m) => out = out.add(&m.scale(c))?,
            None => {
                // Empty word: a multiple of the identity.
                out = out.add(&Matrix::identity(f, d).scale(c))?;
            }
        }
        prev = w;
    }
    Ok(out)
}

/// λ such that m = λ·I exactly, when one exists.
pub fn is_central_value(m: &Matrix) -> Option<FieldElement> {
    if m.rows != m.cols || m.rows == 0 {
        return None;
    }
    let lam = m.at(0, 0).clone();
    for i in 0..m.rows {
        for j in 0..m.cols {
            let want = if i == j { lam.clone() } else { m.field.zero() };
            if *m.at(i, j) != want {
                return None;
            }
        }
    }
    Some(lam)
}

/// A Lie polynomial as a bracket-expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiePolynomial {
    Var(usize),
    Bracket(Box<LiePolynomial>, Box<LiePolynomial>),
    Sum(Box<LiePolynomial>, Box<LiePolynomial>),
    IntScale(i64, Box<LiePolynomial>),
}

impl LiePolynomial {
    pub fn var(i: usize) -> Self {
        LiePolynomial::Var(i)
    }

    pub fn bracket(a: LiePolynomial, b: LiePolynomial) -> Self {
        LiePolynomial::Bracket(Box::new(a), Box::new(b))
    }

    pub fn nvars(&self) -> usize {
        match self {
            LiePolynomial::Var(i) => i + 1,
            LiePolynomial::Bracket(a, b) | LiePolynomial::Sum(a, b) => a.nvars().max(b.nvars()),
            LiePolynomial::IntScale(_, a) => a.nvars(),
        }
    }

    fn leaf_counts(&self) -> Option<BTreeMap<usize, usize>> {
        match self {
            LiePolynomial::Var(i) => {
                let mut m = BTreeMap::new();
                m.insert(*i, 1);
                Some(m)
            }
            LiePolynomial::Bracket(a, b) => {
                let mut m = a.leaf_counts()?;
                for (k, v) in b.leaf_counts()? {
                    *m.entry(k).or_insert(0) += v;
                }
                Some(m)
            }
            // A sum is multilinear only when both sides use the same
            // variable multiset.
            LiePolynomial::Sum(a, b) => {
                let ma = a.leaf_counts()?;
                let mb = b.leaf_counts()?;
                if ma == mb {
                    Some(ma)
                } else {
                    None
                }
            }
            LiePolynomial::IntScale(_, a) => a.leaf_counts(),
        }
    }

    /// Each variable 0..nvars appears exactly once in every monomial.
    pub fn is_multilinear(&self) -> bool {
        let n = self.nvars();
        match self.leaf_counts() {
            None => false,
            Some(m) => (0..n).all(|i| m.get(&i) == Some(&1)),
        }
    }

    /// Expand into associative words via [u, v] -> uv - vu.
    pub fn expand(&self, field: &FieldSpec) -> NcPolynomial {
        match self {
            LiePolynomial::Var(i) => {
                NcPolynomial::var(field.clone(), i + 1, *i).expect("in range")
            }
            LiePolynomial::Bracket(a, b) => {
                let pa = a.expand(field);
                let pb = b.expand(field);
                pa.mul(&pb).sub(&pb.mul(&pa))
            }
            LiePolynomial::Sum(a, b) => a.expand(field).add(&b.expand(field)),
            LiePolynomial::IntScale(c, a) => a.expand(field).scale(&field.from_int(*c)),
        }
    }

    /// Evaluate inside a Lie algebra on dense argument vectors.
    pub fn eval(&self, g: &FinDimLie, args: &[Vec<FieldElement>]) -> Result<Vec<FieldElement>, IdentityError> {
        if args.len() < self.nvars() {
            return Err(IdentityError::ShapeMismatch);
        }
        let f = &g.field;
        Ok(match self {
            LiePolynomial::Var(i) => args[*i].clone(),
            LiePolynomial::Bracket(a, b) => {
                g.bracket_eval(&a.eval(g, args)?, &b.eval(g, args)?)
            }
            LiePolynomial::Sum(a, b) => {
                let mut out = a.eval(g, args)?;
                for (x, y) in out.iter_mut().zip(b.eval(g, args)?) {
                    *x = f.add(x, &y);
                }
                out
            }
            LiePolynomial::IntScale(c, a) => {
                let s = f.from_int(*c);
                a.eval(g, args)?.into_iter().map(|x| f.mul(&x, &s)).collect()
            }
        })
    }
}

/// [x_0, x_1]² — the central identity of 2x2 matrices.
pub fn central_identity_p2(field: &FieldSpec) -> NcPolynomial {
    let c = LiePolynomial::bracket(LiePolynomial::var(0), LiePolynomial::var(1)).expand(field);
    c.mul(&c)
}

/// S_k = Σ_σ sign(σ) x_{σ(1)} … x_{σ(k)}.
pub fn standard_polynomial(field: &FieldSpec, k: usize) -> NcPolynomial {
    assert!(k >= 1);
    let mut terms = Vec::new();
    let mut word: Vec<usize> = (0..k).collect();
    // Lexicographic permutation walk with explicit sign tracking via
    // inversion count.
    loop {
        let invs = word
            .iter()
            .enumerate()
            .map(|(i, &a)| word[i + 1..].iter().filter(|&&b| b < a).count())
            .sum::<usize>();
        let sign = if invs % 2 == 0 { field.one() } else { field.from_int(-1) };
        terms.push((sign, word.clone()));
        // Next permutation.
        let Some(i) = (0..k - 1).rev().find(|&i| word[i] < word[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| word[j] > word[i]).expect("successor");
        word.swap(i, j);
        word[i + 1..].reverse();
    }
    NcPolynomial::from_terms(field.clone(), k, terms).expect("valid words")
}

/// Evaluate S_k(args) without expanding the k! words, by the subset
/// recursion S(A) = Σ_p (-1)^{p-1} x_{a_p} S(A \ a_p) over bitmasks.
pub fn standard_eval(args: &[Matrix]) -> Result<Matrix, IdentityError> {
    let k = args.len();
    if k == 0 || k > 16 {
        return Err(IdentityError::BadInput("need 1 <= k <= 16 arguments".into()));
    }
    let f = &args[0].field;
    let d = args[0].rows;
    if args.iter().any(|m| m.rows != d || m.cols != d || m.field != *f) {
        return Err(IdentityError::ShapeMismatch);
    }
    let mut table: Vec<Matrix> = Vec::with_capacity(1 << k);
    table.push(Matrix::identity(f, d));
    for mask in 1usize..(1 << k) {
        let mut acc = Matrix::zero(f, d, d);
        let mut p = 0usize;
        for i in 0..k {
            if mask & (1 << i) == 0 {
                continue;
            }
            let term = args[i].mul(&table[mask & !(1 << i)])?;
            acc = if p % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
            p += 1;
        }
        table.push(acc);
    }
    Ok(table.pop().expect("full mask"))
}

/// Sweep S_k over Mat_d tuples checking exact vanishing, using the
/// subset evaluator.
pub fn verify_standard_vanishing(
    k: usize,
    d: usize,
    strategy: SweepStrategy,
) -> Result<VanishReport, IdentityError> {
    let f = FieldSpec::rationals();
    let mut report = VanishReport { vanishes: true, checked: 0, witness: None };
    let mut consider = |args: Vec<Matrix>| -> Result<bool, IdentityError> {
        let v = standard_eval(&args)?;
        report.checked += 1;
        if v.is_zero() {
            Ok(true)
        } else {
            report.vanishes = false;
            report.witness = Some((args, v));
            Ok(false)
        }
    };
    match strategy {
        SweepStrategy::Exhaustive => {
            let units = matrix_units(&f, d);
            let mut idx = vec![0usize; k];
            'outer: loop {
                let args: Vec<Matrix> = idx.iter().map(|&i| units[i].clone()).collect();
                if !consider(args)? {
                    break;
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < units.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        SweepStrategy::Randomized { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let args: Vec<Matrix> = (0..k).map(|_| random_matrix(&f, d, &mut rng)).collect();
                if !consider(args)? {
                    break;
                }
            }
        }
    }
    Ok(report)
}

/// The d² matrix units of Mat_d in row-major order.
pub fn matrix_units(field: &FieldSpec, d: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut m = Matrix::zero(field, d, d);
            m.set(i, j, field.one());
            out.push(m);
        }
    }
    out
}

/// How argument tuples are swept. Exhaustive sweeps enumerate matrix
/// units (or basis vectors, for Lie algebras); randomized sweeps are
/// deterministic in the seed.
#[derive(Clone, Copy, Debug)]
pub enum SweepStrategy {
    Exhaustive,
    Randomized { trials: usize, seed: u64 },
}

fn random_matrix(f: &FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zero(f, d, d);
    for i in 0..d {
        for j in 0..d {
            m.set(i, j, f.from_int(rng.gen_range(-3..=3)));
        }
    }
    m
}

/// Verdict of a centrality sweep on Mat_d.
pub struct CentralityReport {
    pub central: bool,
    pub checked: usize,
    /// Arguments and value at the first non-central tuple.
    pub non_central_witness: Option<(Vec<Matrix>, Matrix)>,
    /// Arguments where the value is exactly 1·I, when the sweep finds
    /// one; absence is inconclusive, not a refutation.
    pub attainment: Option<Vec<Matrix>>,
}

/// Sweep p over Mat_d tuples: certify centrality of every value and
/// search for a tuple attaining the value 1.
pub fn verify_central_identity(
    p: &NcPolynomial,
    d: usize,
    strategy: SweepStrategy,
) -> Result<CentralityReport, IdentityError> {
    if d < 1 {
        return Err(IdentityError::BadInput("need d >= 1".into()));
    }
    let f = &p.field;
    let one = f.one();
    let mut report = CentralityReport {
        central: true,
        checked: 0,
        non_central_witness: None,
        attainment: None,
    };
    let consider = |args: Vec<Matrix>, report: &mut CentralityReport| -> Result<bool, IdentityError> {
        let v = nc_eval(p, &args)?;
        report.checked += 1;
        match is_central_value(&v) {
            None => {
                report.central = false;
                report.non_central_witness = Some((args, v));
                Ok(false)
            }
            Some(lam) => {
                if lam == one && report.attainment.is_none() {
                    report.attainment = Some(args);
                }
                Ok(true)
            }
        }
    };
    match strategy {
        SweepStrategy::Exhaustive => {
            let units = matrix_units(f, d);
            let mut idx = vec![0usize; p.nvars];
            loop {
                let args: Vec<Matrix> = idx.iter().map(|&i| units[i].clone()).collect();
                if !consider(args, &mut report)? {
                    return Ok(report);
                }
                // Odometer.
                let mut pos = p.nvars;
                loop {
                    if pos == 0 {
                        return Ok(report);
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < units.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        SweepStrategy::Randomized { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let args: Vec<Matrix> =
                    (0..p.nvars).map(|_| random_matrix(f, d, &mut rng)).collect();
                if !consider(args, &mut report)? {
                    return Ok(report);
                }
            }
            Ok(report)
        }
    }
}

/// Verdict of a vanishing sweep on Mat_d.
pub struct VanishReport {
    pub vanishes: bool,
    pub checked: usize,
    pub witness: Option<(Vec<Matrix>, Matrix)>,
}

/// Sweep p over Mat_d tuples checking that every value is exactly 0.
pub fn verify_vanishing(
    p: &NcPolynomial,
    d: usize,
    strategy: SweepStrategy,
) -> Result<VanishReport, IdentityError> {
    let f = &p.field;
    let mut report = VanishReport { vanishes: true, checked: 0, witness: None };
    let mut tuples: Vec<Vec<Matrix>> = Vec::new();
    match strategy {
        SweepStrategy::Exhaustive => {
            let units = matrix_units(f, d);
            let mut idx = vec![0usize; p.nvars];
            'outer: loop {
                tuples.push(idx.iter().map(|&i| units[i].clone()).collect());
                let mut pos = p.nvars;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < units.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        SweepStrategy::Randomized { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                tuples.push((0..p.nvars).map(|_| random_matrix(f, d, &mut rng)).collect());
            }
        }
    }
    for args in tuples {
        let v = nc_eval(p, &args)?;
        report.checked += 1;
        if !v.is_zero() {
            report.vanishes = false;
            report.witness = Some((args, v));
            return Ok(report);
        }
    }
    Ok(report)
}

/// Verdict of identity testing on a Lie algebra.
pub struct IdentityVerdict {
    pub holds: bool,
    /// True only when the sweep proves the identity: exhaustive basis
    /// tuples on a multilinear polynomial.
    pub conclusive: bool,
    pub mode: &'static str,
    pub checked: usize,
    pub witness: Option<(Vec<Vec<FieldElement>>, Vec<FieldElement>)>,
}

/// Test whether g satisfies the Lie polynomial identity lp ≡ 0.
/// Exhaustive mode sweeps basis tuples, which proves the identity for
/// multilinear lp; otherwise a pass is only evidence.
pub fn satisfies_identity(
    g: &FinDimLie,
    lp: &LiePolynomial,
    strategy: SweepStrategy,
) -> Result<IdentityVerdict, IdentityError> {
    let f = &g.field;
    let n = lp.nvars();
    let multilinear = lp.is_multilinear();
    let (tuples, mode): (Vec<Vec<Vec<FieldElement>>>, &'static str) = match strategy {
        SweepStrategy::Exhaustive => {
            let mut out = Vec::new();
            let mut idx = vec![0usize; n];
            'outer: loop {
                out.push(idx.iter().map(|&i| g.basis_vec(i)).collect());
                let mut pos = n;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < g.dim {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
            let mode = if multilinear {
                "basis-exhaustive (multilinear => identity)"
            } else {
                "sampled"
            };
            (out, mode)
        }
        SweepStrategy::Randomized { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            for _ in 0..trials {
                out.push(
                    (0..n)
                        .map(|_| {
                            (0..g.dim).map(|_| f.from_int(rng.gen_range(-3..=3))).collect()
                        })
                        .collect(),
                );
            }
            (out, "sampled")
        }
    };
    let exhaustive = matches!(strategy, SweepStrategy::Exhaustive);
    let mut verdict = IdentityVerdict {
        holds: true,
        conclusive: false,
        mode,
        checked: 0,
        witness: None,
    };
    for args in tuples {
        let v = lp.eval(g, &args)?;
        verdict.checked += 1;
        if v.iter().any(|c| !c.is_zero()) {
            verdict.holds = false;
            verdict.witness = Some((args, v));
            return Ok(verdict);
        }
    }
    verdict.conclusive = exhaustive && multilinear;
    Ok(verdict)
}

/// A fixed catalog of bracket-monomial identity candidates of degree
/// at most four, used to probe that simple algebras admit none.
pub fn identity_catalog_deg_le4() -> Vec<LiePolynomial> {
    use LiePolynomial as L;
    let v = L::var;
    vec![
        L::bracket(v(0), v(1)),
        L::bracket(L::bracket(v(0), v(1)), v(2)),
        L::bracket(L::bracket(v(0), v(1)), v(0)),
        L::bracket(L::bracket(v(0), v(1)), L::bracket(v(2), v(3))),
        L::bracket(L::bracket(L::bracket(v(0), v(1)), v(2)), v(3)),
        L::bracket(L::bracket(L::bracket(v(0), v(1)), v(0)), v(1)),
        L::bracket(L::bracket(L::bracket(v(0), v(1)), v(2)), v(0)),
    ]
}
