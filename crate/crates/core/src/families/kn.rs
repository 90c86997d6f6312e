//! Genus-zero Krichever-Novikov algebras: vector fields f(t) d/dt with
//! f rational and poles confined to a finite puncture set.
//!
//! Elements are kept in partial-fraction canonical form (a polynomial
//! part plus, per puncture, coefficients of (t-a)^{-j}), which makes
//! equality decidable and keeps every operation exact. The pole-order
//! filtration lives at the point at infinity, so it reads off the
//! polynomial degree.

use super::FamilyError;
use crate::field::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

fn rat(n: i64) -> Rational {
    Rational::from(num_bigint::BigInt::from(n))
}

/// A rational vector field f(t) d/dt in partial-fraction form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVectorField {
    /// Coefficient of t^i.
    pub poly: Vec<Rational>,
    /// poles[a][j-1] = coefficient of (t - a)^{-j}.
    pub poles: BTreeMap<Rational, Vec<Rational>>,
}

impl RationalVectorField {
    pub fn zero() -> Self {
        RationalVectorField { poly: Vec::new(), poles: BTreeMap::new() }
    }

    /// t^k d/dt.
    pub fn monomial(k: usize) -> Self {
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        RationalVectorField { poly, poles: BTreeMap::new() }
    }

    /// (t - a)^{-j} d/dt.
    pub fn pole(a: Rational, j: usize) -> Self {
        assert!(j >= 1);
        let mut coeffs = vec![Rational::zero(); j];
        coeffs[j - 1] = Rational::one();
        let mut poles = BTreeMap::new();
        poles.insert(a, coeffs);
        RationalVectorField { poly: Vec::new(), poles }
    }

    fn normalized(mut self) -> Self {
        while self.poly.last().is_some_and(|c| c.is_zero()) {
            self.poly.pop();
        }
        self.poles.retain(|_, coeffs| {
            while coeffs.last().is_some_and(|c| c.is_zero()) {
                coeffs.pop();
            }
            !coeffs.is_empty()
        });
        self
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.poles.is_empty()
    }

    /// Degree of the polynomial part; None when it vanishes.
    pub fn poly_deg(&self) -> Option<usize> {
        if self.poly.is_empty() {
            None
        } else {
            Some(self.poly.len() - 1)
        }
    }

    pub fn poly_coeff(&self, k: usize) -> Rational {
        self.poly.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// The set of punctures actually carrying a pole.
    pub fn pole_support(&self) -> Vec<Rational> {
        self.poles.keys().cloned().collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut poly = vec![Rational::zero(); self.poly.len().max(other.poly.len())];
        for (i, c) in self.poly.iter().enumerate() {
            poly[i] += c;
        }
        for (i, c) in other.poly.iter().enumerate() {
            poly[i] += c;
        }
        let mut poles = self.poles.clone();
        for (a, coeffs) in &other.poles {
            let entry = poles.entry(a.clone()).or_default();
            if entry.len() < coeffs.len() {
                entry.resize(coeffs.len(), Rational::zero());
            }
            for (j, c) in coeffs.iter().enumerate() {
                entry[j] += c;
            }
        }
        RationalVectorField { poly, poles }.normalized()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalVectorField {
            poly: self.poly.iter().map(|x| x * c).collect(),
            poles: self
                .poles
                .iter()
                .map(|(a, v)| (a.clone(), v.iter().map(|x| x * c).collect()))
                .collect(),
        }
        .normalized()
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Coefficients of p(t) rewritten in powers of (t - a).
    fn taylor_shift(poly: &[Rational], a: &Rational) -> Vec<Rational> {
        // Horner against (t - a): repeatedly divide by (t - a), the
        // remainders are the shifted coefficients.
        let mut rest = poly.to_vec();
        let mut out = Vec::with_capacity(poly.len());
        while !rest.is_empty() {
            // Divide rest by (t - a): synthetic division at a.
            let mut quot = vec![Rational::zero(); rest.len().saturating_sub(1)];
            let mut carry = Rational::zero();
            for i in (0..rest.len()).rev() {
                let cur = &rest[i] + &carry * a;
                if i > 0 {
                    quot[i - 1] = cur.clone();
                    carry = cur;
                } else {
                    out.push(cur);
                }
            }
            rest = quot;
        }
        out
    }

    /// p(t) / (t - a)^j split into polynomial and pole parts.
    fn poly_times_pole(poly: &[Rational], a: &Rational, j: usize, scale: &Rational) -> Self {
        let shifted = Self::taylor_shift(poly, a);
        let mut out = Self::zero();
        // (t - a)^k / (t - a)^j.
        for (k, c) in shifted.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c * scale;
            if k >= j {
                // Polynomial (t - a)^{k-j}, expanded back.
                let mut mono = vec![Rational::zero(); 1];
                mono[0] = Rational::one();
                for _ in 0..(k - j) {
                    // Multiply by (t - a).
                    let mut next = vec![Rational::zero(); mono.len() + 1];
                    for (i, m) in mono.iter().enumerate() {
                        next[i + 1] += m;
                        next[i] -= m * a;
                    }
                    mono = next;
                }
                let part = RationalVectorField {
                    poly: mono.into_iter().map(|m| m * &c).collect(),
                    poles: BTreeMap::new(),
                };
                out = out.add(&part.normalized());
            } else {
                out = out.add(&Self::pole(a.clone(), j - k).scale(&c));
            }
        }
        out
    }

    /// 1 / ((t - a)^j (t - b)^k) for distinct a, b, by the two-pole
    /// splitting recursion.
    fn cross_pole(a: &Rational, j: usize, b: &Rational, k: usize) -> Self {
        if j == 0 {
            return Self::pole(b.clone(), k);
        }
        if k == 0 {
            return Self::pole(a.clone(), j);
        }
        let inv = Rational::one() / (a - b);
        let left = Self::cross_pole(a, j, b, k - 1);
        let right = Self::cross_pole(a, j - 1, b, k);
        left.sub(&right).scale(&inv)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        // poly x poly.
        if !self.poly.is_empty() && !other.poly.is_empty() {
            let mut conv = vec![Rational::zero(); self.poly.len() + other.poly.len() - 1];
            for (i, x) in self.poly.iter().enumerate() {
                for (j, y) in other.poly.iter().enumerate() {
                    conv[i + j] += x * y;
                }
            }
            out = out.add(&RationalVectorField { poly: conv, poles: BTreeMap::new() }.normalized());
        }
        // poly x pole, both ways.
        for (a, coeffs) in &other.poles {
            for (idx, c) in coeffs.iter().enumerate() {
                if !c.is_zero() && !self.poly.is_empty() {
                    out = out.add(&Self::poly_times_pole(&self.poly, a, idx + 1, c));
                }
            }
        }
        for (a, coeffs) in &self.poles {
            for (idx, c) in coeffs.iter().enumerate() {
                if !c.is_zero() && !other.poly.is_empty() {
                    out = out.add(&Self::poly_times_pole(&other.poly, a, idx + 1, c));
                }
            }
        }
        // pole x pole.
        for (a, ca) in &self.poles {
            for (ia, x) in ca.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, cb) in &other.poles {
                    for (ib, y) in cb.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let c = x * y;
                        let part = if a == b {
                            Self::pole(a.clone(), ia + ib + 2)
                        } else {
                            Self::cross_pole(a, ia + 1, b, ib + 1)
                        };
                        out = out.add(&part.scale(&c));
                    }
                }
            }
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let mut poly = Vec::new();
        for (i, c) in self.poly.iter().enumerate().skip(1) {
            poly.push(c * rat(i as i64));
        }
        let mut poles = BTreeMap::new();
        for (a, coeffs) in &self.poles {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (idx, c) in coeffs.iter().enumerate() {
                // d/dt (t-a)^{-j} = -j (t-a)^{-j-1}.
                let j = (idx + 1) as i64;
                next[idx + 1] = c * rat(-j);
            }
            poles.insert(a.clone(), next);
        }
        RationalVectorField { poly, poles }.normalized()
    }

    /// [f d/dt, g d/dt] = (f g' - g f') d/dt.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(&other.derivative()).sub(&other.mul(&self.derivative()))
    }
}

/// The genus-zero Krichever-Novikov algebra on the affine line with a
/// fixed puncture set: vector fields with poles confined to the
/// punctures, filtered by pole order at infinity.
pub struct KnAlgebra {
    punctures: Vec<Rational>,
}

pub fn kn_genus0(punctures: &[Rational]) -> Result<KnAlgebra, FamilyError> {
    if punctures.is_empty() {
        return Err(FamilyError::BadInput("need at least one puncture".into()));
    }
    for (i, a) in punctures.iter().enumerate() {
        if punctures[i + 1..].contains(a) {
            return Err(FamilyError::DuplicatePuncture);
        }
    }
    Ok(KnAlgebra { punctures: punctures.to_vec() })
}

impl KnAlgebra {
    pub fn punctures(&self) -> &[Rational] {
        &self.punctures
    }

    /// Membership: poles confined to the puncture set.
    pub fn contains(&self, f: &RationalVectorField) -> bool {
        f.pole_support().iter().all(|a| self.punctures.contains(a))
    }

    /// Membership in the filtration term g(n), n >= 0: pole order at
    /// most n - 1 at infinity. In the coordinate t this reads off as
    /// polynomial degree at most n + 1; pole parts at the finite
    /// punctures vanish at infinity, so they sit in every term. The
    /// bottom term g(0) is the fields vanishing at infinity.
    pub fn in_filtration(&self, f: &RationalVectorField, n: i64) -> bool {
        n >= 0
            && self.contains(f)
            && match f.poly_deg() {
                None => true,
                Some(d) => d as i64 <= n + 1,
            }
    }

    /// A spanning set for g(n) modulo depth: monomials up to t^{n+1}
    /// and pole parts up to the given order at each puncture.
    pub fn filtration_spanning(&self, n: i64, pole_depth: usize) -> Vec<RationalVectorField> {
        assert!(n >= 0);
        let mut out = Vec::new();
        for k in 0..=(n + 1) as usize {
            out.push(RationalVectorField::monomial(k));
        }
        for a in &self.punctures {
            for j in 1..=pole_depth {
                out.push(RationalVectorField::pole(a.clone(), j));
            }
        }
        out
    }

    /// The symbol of f in gr_n = g(n)/g(n-1): its leading polynomial
    /// coefficient when the degree is exactly n + 1, else zero. Under
    /// t^{n+1} d/dt -> L_n this is the bracket-preserving map into the
    /// positive Witt algebra.
    pub fn symbol(&self, f: &RationalVectorField, n: i64) -> Rational {
        if n >= 1 && f.poly_deg() == Some((n + 1) as usize) {
            f.poly_coeff((n + 1) as usize)
        } else {
            Rational::zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_bracket_matches_product_rule() {
        // [t^a d/dt, t^b d/dt] = (b - a) t^{a+b-1} d/dt.
        for a in 0..5usize {
            for b in 0..5usize {
                let f = RationalVectorField::monomial(a);
                let g = RationalVectorField::monomial(b);
                let out = f.bracket(&g);
                let expect = if a + b == 0 {
                    // (b - a) t^{-1} with a = b = 0 has coefficient 0.
                    RationalVectorField::zero()
                } else {
                    RationalVectorField::monomial(a + b - 1).scale(&rat(b as i64 - a as i64))
                };
                assert_eq!(out, expect, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn laurent_monomials_at_one_puncture_follow_witt() {
        // t^a d/dt with a < 0 is the pole of order -a at 0; bracket
        // exponent arithmetic must still follow (b - a) t^{a+b-1}.
        let t = |a: i64| -> RationalVectorField {
            if a >= 0 {
                RationalVectorField::monomial(a as usize)
            } else {
                RationalVectorField::pole(Rational::zero(), (-a) as usize)
            }
        };
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                let out = t(a).bracket(&t(b));
                let expect = t(a + b - 1).scale(&rat(b - a));
                assert_eq!(out, expect, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn partial_fractions_multiply_exactly() {
        // 1/(t(t-1)) = 1/(t-1) - 1/t.
        let zero = Rational::zero();
        let one = Rational::one();
        let p0 = RationalVectorField::pole(zero.clone(), 1);
        let p1 = RationalVectorField::pole(one.clone(), 1);
        let prod = p0.mul(&p1);
        let expect = p1.sub(&p0);
        assert_eq!(prod, expect);
        // (t - 1) * 1/(t-1) = 1.
        let lin = RationalVectorField {
            poly: vec![-one.clone(), one.clone()],
            poles: BTreeMap::new(),
        };
        assert_eq!(lin.mul(&p1), RationalVectorField::monomial(0));
        // t^2 * t^{-1} = t.
        let m2 = RationalVectorField::monomial(2);
        assert_eq!(m2.mul(&p0), RationalVectorField::monomial(1));
    }

    #[test]
    fn derivative_of_poles() {
        let p = RationalVectorField::pole(Rational::one(), 2);
        let d = p.derivative();
        let expect = RationalVectorField::pole(Rational::one(), 3).scale(&rat(-2));
        assert_eq!(d, expect);
    }

    #[test]
    fn duplicate_punctures_rejected() {
        let a = vec![Rational::zero(), Rational::one(), Rational::zero()];
        assert!(matches!(
            kn_genus0(&a),
            Err(FamilyError::DuplicatePuncture)
        ));
        assert!(kn_genus0(&[]).is_err());
    }

    #[test]
    fn filtration_is_compatible_with_brackets() {
        // [g(n), g(m)] subset of g(n+m) checked on a spanning set with
        // two punctures and pole depth 3.
        let kn = kn_genus0(&[Rational::zero(), Rational::one()]).unwrap();
        for n in 0..=3i64 {
            for m in 0..=3i64 {
                for f in kn.filtration_spanning(n, 3) {
                    for g in kn.filtration_spanning(m, 3) {
                        assert!(kn.in_filtration(&f, n));
                        assert!(kn.in_filtration(&g, m));
                        let b = f.bracket(&g);
                        assert!(kn.contains(&b), "poles stay at punctures");
                        assert!(
                            kn.in_filtration(&b, n + m),
                            "[g({n}), g({m})] escapes g({})",
                            n + m
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn graded_pieces_are_one_dimensional_above_zero() {
        // gr_n = g(n)/g(n-1) is spanned by t^{n+1} alone for n >= 1:
        // anything in g(n) minus its symbol multiple of t^{n+1} drops
        // to g(n-1).
        let kn = kn_genus0(&[Rational::zero()]).unwrap();
        for n in 1..=5i64 {
            let lead = RationalVectorField::monomial((n + 1) as usize);
            for f in kn.filtration_spanning(n, 2) {
                let s = kn.symbol(&f, n);
                let reduced = f.sub(&lead.scale(&s));
                assert!(kn.in_filtration(&reduced, n - 1));
            }
        }
    }

    #[test]
    fn symbol_map_preserves_brackets_into_positive_witt() {
        // sigma_{n+m}([f, g]) = (m - n) sigma_n(f) sigma_m(g), the
        // structure constant of [L_n, L_m].
        let kn = kn_genus0(&[Rational::zero(), rat(2)]).unwrap();
        // Representatives with lower-order noise.
        let rep = |n: i64| -> RationalVectorField {
            RationalVectorField::monomial((n + 1) as usize)
                .add(&RationalVectorField::monomial(0).scale(&rat(3)))
                .add(&RationalVectorField::pole(Rational::zero(), 1).scale(&rat(-2)))
        };
        for n in 1..=4i64 {
            for m in 1..=4i64 {
                let f = rep(n);
                let g = rep(m);
                let b = f.bracket(&g);
                let lhs = kn.symbol(&b, n + m);
                let rhs = rat(m - n) * kn.symbol(&f, n) * kn.symbol(&g, m);
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn one_puncture_matches_laurent_witt_under_reindexing() {
        // t^{n+1} d/dt -> L_n: check the full structure constants over
        // a window of exponents, including negative ones through the
        // pole at 0.
        let t = |n: i64| -> RationalVectorField {
            let k = n + 1;
            if k >= 0 {
                RationalVectorField::monomial(k as usize)
            } else {
                RationalVectorField::pole(Rational::zero(), (-k) as usize)
            }
        };
        for n in -4..=4i64 {
            for m in -4..=4i64 {
                let out = t(n).bracket(&t(m));
                let expect = t(n + m).scale(&rat(m - n));
                assert_eq!(out, expect, "L{n}, L{m}");
            }
        }
    }
}
