//! Exact scalars: arbitrary-precision rationals and a single finite
//! extension field Q[x]/(p) for a monic minimal polynomial p.
//!
//! Every element is stored in canonical form (coefficient vector of
//! length equal to the field degree, each rational in lowest terms with
//! positive denominator), so equality of elements is equality of
//! representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("minimal polynomial is reducible: it has rational root {0}")]
    Reducible(String),
    #[error("minimal polynomial must have degree at least 2")]
    DegreeTooSmall,
    #[error("cannot invert zero")]
    DivisionByZero,
    #[error("malformed rational literal: {0}")]
    BadRational(String),
    #[error("element does not belong to this field")]
    WrongField,
}

/// Parses "num/den" (or a bare integer) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Formats a rational as "num/den" in lowest terms, denominator positive.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// A ground field: the rationals, or Q[x]/(p) for an irreducible monic p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    /// Minimal polynomial coefficients, constant term upward, including
    /// the leading 1. Empty for the rationals.
    minpoly: Vec<Rational>,
}

/// An element of a `FieldSpec`: coefficients of 1, x, x^2, ... of length
/// equal to the field degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    pub coeffs: Vec<Rational>,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { minpoly: Vec::new() }
    }

    /// Builds Q[x]/(p). The polynomial must be monic of degree >= 2.
    /// Irreducibility is decided by the rational-root test, which is
    /// complete for degrees 2 and 3; for higher degrees irreducibility
    /// beyond the absence of rational roots is the caller's
    /// responsibility.
    pub fn extension(minpoly: Vec<Rational>) -> Result<Self, FieldError> {
        if minpoly.len() < 3 {
            return Err(FieldError::DegreeTooSmall);
        }
        match minpoly.last() {
            Some(c) if c.is_one() => {}
            _ => return Err(FieldError::NotMonic),
        }
        if let Some(root) = rational_roots(&minpoly).first() {
            return Err(FieldError::Reducible(format_rational(root)));
        }
        Ok(FieldSpec { minpoly })
    }

    pub fn is_rationals(&self) -> bool {
        self.minpoly.is_empty()
    }

    /// Field degree over Q (1 for the rationals).
    pub fn degree(&self) -> usize {
        if self.minpoly.is_empty() {
            1
        } else {
            self.minpoly.len() - 1
        }
    }

    pub fn minpoly(&self) -> Option<&[Rational]> {
        if self.minpoly.is_empty() {
            None
        } else {
            Some(&self.minpoly)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = r;
        FieldElement { coeffs }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(rat_int(n))
    }

    /// The class of x in Q[x]/(p); errors on the rationals.
    pub fn generator(&self) -> Result<FieldElement, FieldError> {
        if self.is_rationals() {
            return Err(FieldError::WrongField);
        }
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[1] = Rational::one();
        Ok(FieldElement { coeffs })
    }

    fn check(&self, e: &FieldElement) -> Result<(), FieldError> {
        if e.coeffs.len() == self.degree() {
            Ok(())
        } else {
            Err(FieldError::WrongField)
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        if self.is_rationals() {
            return FieldElement { coeffs: vec![&a.coeffs[0] * &b.coeffs[0]] };
        }
        let d = self.degree();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    pub fn scale(&self, a: &FieldElement, r: &Rational) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| x * r).collect() }
    }

    /// Reduces a raw polynomial (any length) mod the minimal polynomial.
    fn reduce(&self, mut poly: Vec<Rational>) -> FieldElement {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = poly.len() - d; // degree of x^k * minpoly remainder shift
            for i in 0..d {
                let adj = &top * &self.minpoly[i];
                poly[k + i] -= adj;
            }
        }
        poly.resize(d, Rational::zero());
        FieldElement { coeffs: poly }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// Q[x]; errors on zero.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rationals() {
            return Ok(FieldElement { coeffs: vec![a.coeffs[0].recip()] });
        }
        // gcd(a, p) = 1 since p is irreducible and deg a < deg p.
        let (g, s, _) = poly_ext_gcd(&a.coeffs, &self.minpoly);
        // g is a nonzero constant.
        debug_assert!(poly_degree(&g) == Some(0));
        let c = g[0].recip();
        let scaled: Vec<Rational> = s.iter().map(|x| x * &c).collect();
        Ok(self.reduce(scaled))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut n: u32) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Serializes an element: the rational itself over Q, else the
    /// coefficient list constant-term upward.
    pub fn format_element(&self, e: &FieldElement) -> String {
        if self.is_rationals() {
            format_rational(&e.coeffs[0])
        } else {
            let parts: Vec<String> = e.coeffs.iter().map(format_rational).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value of an element of Q; None for proper extension
    /// elements with nonzero higher coefficients.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

/// Division with remainder in Q[x]; returns (quotient, remainder).
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<Rational> = a.to_vec();
    poly_trim(&mut rem);
    let mut quot = vec![Rational::zero(); a.len().max(1)];
    loop {
        let da = match poly_degree(&rem) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let coef = &rem[da] / &lead;
        let shift = da - db;
        quot[shift] = coef.clone();
        for i in 0..=db {
            let adj = &coef * &b[i];
            rem[shift + i] -= adj;
        }
        poly_trim(&mut rem);
        if rem.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g.
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    let mut t0 = vec![Rational::zero()];
    let mut t1 = vec![Rational::one()];
    while !r1.iter().all(|c| c.is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let qt = poly_mul(&q, &t1);
        let ns = poly_sub(&s0, &qs);
        let nt = poly_sub(&t0, &qt);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    (r0, s0, t0)
}

/// All rational roots of a polynomial with rational coefficients
/// (constant term upward), found by the rational-root test on the
/// denominator-cleared primitive integer polynomial. Roots are listed
/// without multiplicity, ascending.
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let deg = match poly_degree(poly) {
        Some(d) if d >= 1 => d,
        _ => return Vec::new(),
    };
    let mut p: Vec<Rational> = poly[..=deg].to_vec();
    let mut roots = Vec::new();
    // Factor out x^k first.
    while p[0].is_zero() {
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
        p.remove(0);
        if poly_degree(&p).unwrap_or(0) == 0 {
            roots.sort();
            return roots;
        }
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in &p {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].magnitude().clone();
    let an = ints.last().unwrap().magnitude().clone();
    let eval = |r: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in p.iter().rev() {
            acc = acc * r + c;
        }
        acc.is_zero()
    };
    for num in divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, a0)) {
        for den in divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, an.clone())) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&num * BigInt::from(sign), den.clone());
                if !roots.contains(&cand) && eval(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Checks whether a polynomial splits into distinct linear factors over
/// Q; returns the roots if so, or the first non-splitting residual
/// factor otherwise.
pub fn split_into_distinct_linear(poly: &[Rational]) -> Result<Vec<Rational>, Vec<Rational>> {
    let mut p: Vec<Rational> = poly.to_vec();
    poly_trim(&mut p);
    let roots = rational_roots(&p);
    let mut seen = Vec::new();
    for r in &roots {
        // Deflate once per distinct root.
        let linear = vec![-r.clone(), Rational::one()];
        let (q, rem) = poly_divmod(&p, &linear);
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        p = q;
        seen.push(r.clone());
        // A repeated root means the minimal polynomial is not
        // square-free, hence not a product of distinct linear factors.
        if !p.is_empty() && rational_roots(&p).contains(r) {
            return Err(p);
        }
    }
    if poly_degree(&p).unwrap_or(0) == 0 {
        Ok(seen)
    } else {
        Err(p)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.magnitude();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let n: u128 = n.try_into().unwrap_or_else(|_| {
        panic!("coefficient too large for divisor enumeration at desk scale")
    });
    let mut out = Vec::new();
    let mut i: u128 = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i != n / i {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    out.sort();
    out
}
