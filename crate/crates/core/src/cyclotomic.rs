//! Exact arithmetic in cyclotomic fields `Q(z_e)`.
//!
//! A [`Cyclo`] stores coordinates in the power basis `1, z, ..., z^(phi(e)-1)`
//! of `Q(z_e)`, i.e. a polynomial reduced modulo the cyclotomic polynomial
//! `Phi_e`. Binary operations first embed both operands into the field of
//! the lcm conductor, so values from different fields mix freely; equality
//! is coefficient equality after that embedding.
//!
//! Text form: `3/2 - z11^3 + 2*z11^7`, where `zE^a` is `z_E^a`. Rendering
//! always uses the smallest field containing the value, which makes
//! `render(parse(render(x))) == render(x)` hold byte for byte.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type Poly = Vec<BigRational>;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (constant term first) of the `e`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(e: u32) -> Arc<Vec<i64>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&e) {
        return Arc::clone(p);
    }
    // x^e - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_divide(&num, &div);
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(e, Arc::clone(&p));
    p
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        q[i] = c;
        for (k, &dk) in den.iter().enumerate() {
            rem[i + k] -= c * dk;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(e: u32) -> usize {
    cyclotomic_polynomial(e).len() - 1
}

fn reduce(mut p: Poly, e: u32) -> Poly {
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    for i in (deg..p.len()).rev() {
        if p[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut p[i], BigRational::zero());
        for (k, &pk) in phi.iter().enumerate().take(deg) {
            if pk != 0 {
                p[i - deg + k] -= &c * BigRational::from_integer(BigInt::from(pk));
            }
        }
    }
    p.resize(deg, BigRational::zero());
    p
}

#[derive(Clone)]
pub struct Cyclo {
    conductor: u32,
    coeffs: Poly,
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo::from_rational(BigRational::zero())
    }

    pub fn one() -> Cyclo {
        Cyclo::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyclo {
        Cyclo::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Cyclo {
        Cyclo {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `z_e^a`.
    pub fn root_of_unity(e: u32, a: i64) -> Cyclo {
        assert!(e >= 1, "conductor must be positive");
        let a = a.rem_euclid(e as i64) as usize;
        let mut p = vec![BigRational::zero(); a + 1];
        p[a] = BigRational::one();
        Cyclo {
            conductor: e,
            coeffs: reduce(p, e),
        }
    }

    /// Builds `sum_a c_a z_e^a` from a coefficient list indexed by exponent.
    pub fn from_exponent_coeffs(e: u32, coeffs: &[BigRational]) -> Cyclo {
        let mut p = vec![BigRational::zero(); e as usize];
        for (a, c) in coeffs.iter().enumerate() {
            p[a % e as usize] += c;
        }
        Cyclo {
            conductor: e,
            coeffs: reduce(p, e),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates at the stored conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The same value in `Q(z_e)`; `e` must be a multiple of the conductor.
    pub fn embed(&self, e: u32) -> Cyclo {
        assert!(e.is_multiple_of(self.conductor), "embedding needs a multiple conductor");
        if e == self.conductor {
            return self.clone();
        }
        let step = (e / self.conductor) as usize;
        let mut p = vec![BigRational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            p[j * step] = c.clone();
        }
        Cyclo {
            conductor: e,
            coeffs: reduce(p, e),
        }
    }

    fn aligned(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        let e = self.conductor.lcm(&other.conductor);
        (self.embed(e), other.embed(e))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Applies the automorphism `z_e -> z_e^k`; `k` must be coprime to the
    /// conductor.
    pub fn galois(&self, k: i64) -> Cyclo {
        let e = self.conductor as i64;
        assert_eq!(k.rem_euclid(e).gcd(&e), 1, "k must be a unit mod the conductor");
        let mut p = vec![BigRational::zero(); e as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            p[(j as i64 * k).rem_euclid(e) as usize] += c;
        }
        Cyclo {
            conductor: self.conductor,
            coeffs: reduce(p, self.conductor),
        }
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conjugate(&self) -> Cyclo {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let (d, c) = self.minimal_form();
        (d == 1).then(|| c[0].clone())
    }

    pub fn is_rational_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| q.to_integer().to_i64())
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Poly = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let u = poly_inverse_mod(&self.coeffs, &phi);
        Ok(Cyclo {
            conductor: self.conductor,
            coeffs: reduce(u, self.conductor),
        })
    }

    pub fn checked_div(&self, rhs: &Cyclo) -> Result<Cyclo> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclo {
        Cyclo {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// The smallest conductor whose field contains the value, with the
    /// coordinates there.
    pub fn minimal_form(&self) -> (u32, Vec<BigRational>) {
        let e = self.conductor;
        for d in 1..e {
            if !e.is_multiple_of(d) {
                continue;
            }
            if let Some(c) = self.coordinates_in(d) {
                return (d, c);
            }
        }
        (e, self.coeffs.clone())
    }

    fn coordinates_in(&self, d: u32) -> Option<Vec<BigRational>> {
        if d == 1 {
            // rationals are exactly the multiples of the basis vector 1
            return self.coeffs[1..]
                .iter()
                .all(|c| c.is_zero())
                .then(|| vec![self.coeffs[0].clone()]);
        }
        let n = euler_phi(d);
        // fixed by z -> z^k for every unit k = 1 mod d is necessary
        let e = self.conductor as i64;
        let mut k = 1 + d as i64;
        while k < e {
            if k.gcd(&e) == 1 && self.galois(k) != *self {
                return None;
            }
            k += d as i64;
        }
        // solve sum_j c_j embed(z_d^j) = self
        let cols: Vec<Cyclo> = (0..n)
            .map(|j| Cyclo::root_of_unity(d, j as i64).embed(self.conductor))
            .collect();
        let rows = self.coeffs.len();
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=n {
                        let v = &m[row][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[n].is_zero()) {
            return None;
        }
        let mut out = vec![BigRational::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            out[c] = m[r][n].clone();
        }
        Some(out)
    }

    /// Floating-point value, for display and numeric cross-checks only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                let t = std::f64::consts::TAU * j as f64 / e;
                (re + v * t.cos(), im + v * t.sin())
            })
    }
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("nonzero divisor");
    let mut r = a.clone();
    let mut q = vec![BigRational::zero(); a.len().max(1)];
    let lead = b[db].recip();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead;
        for k in 0..=db {
            let v = &c * &b[k];
            r[dr - db + k] -= v;
        }
        q[dr - db] = c;
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
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

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// `u` with `a u = 1 mod m`, for `a` coprime to the irreducible `m`.
fn poly_inverse_mod(a: &Poly, m: &Poly) -> Poly {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while degree(&r1).is_some_and(|d| d > 0) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let c = r1[0].recip();
    s1.iter().map(|x| x * &c).collect()
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }
}

impl From<BigRational> for Cyclo {
    fn from(q: BigRational) -> Cyclo {
        Cyclo::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.aligned(rhs);
        Cyclo {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.aligned(rhs);
        Cyclo {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.aligned(rhs);
        let e = a.conductor;
        Cyclo {
            conductor: e,
            coeffs: reduce(poly_mul(&a.coeffs, &b.coeffs), e),
        }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclo {
    /// Terms `c*zE^a` at the smallest conductor. For a prime conductor `p`
    /// the coefficients of all `p` powers are shifted by a multiple of
    /// `1 + z + ... + z^(p-1) = 0` so that as many as possible vanish.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, mut coeffs) = self.minimal_form();
        if d > 2 && euler_phi(d) == d as usize - 1 {
            coeffs.push(BigRational::zero());
            let mut counts: Vec<(&BigRational, usize)> = Vec::new();
            for c in &coeffs {
                match counts.iter_mut().find(|(v, _)| *v == c) {
                    Some((_, k)) => *k += 1,
                    None => counts.push((c, 1)),
                }
            }
            let zero = BigRational::zero();
            let shift = counts
                .iter()
                .max_by(|(a, x), (b, y)| x.cmp(y).then_with(|| (*b == &zero).cmp(&(*a == &zero))).then_with(|| b.cmp(a)))
                .map(|(v, _)| (*v).clone())
                .unwrap_or_default();
            coeffs = coeffs.iter().map(|c| c - &shift).collect();
        }
        let mut first = true;
        for (a, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if d == 1 || a == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z{d}^{a}")?;
            } else {
                write!(f, "{mag}*z{d}^{a}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn column(&mut self, len: usize) -> usize {
        self.chars.peek().map(|(i, _)| i + 1).unwrap_or(len + 1)
    }

    fn number(&mut self) -> Option<BigInt> {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s.parse().ok()
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.chars.peek().is_some_and(|&(_, c)| c == ch) {
            self.chars.next();
            true
        } else {
            false
        }
    }
}

impl FromStr for Cyclo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cyclo> {
        let err = |column: usize, message: &str| Error::ParseError {
            line: 1,
            column,
            message: message.to_string(),
        };
        let mut lx = Lexer {
            chars: s.char_indices().peekable(),
        };
        let mut total = Cyclo::zero();
        let mut first = true;
        loop {
            lx.skip_ws();
            if lx.chars.peek().is_none() {
                if first {
                    return Err(err(1, "empty expression"));
                }
                break;
            }
            let negative = if lx.eat('-') {
                true
            } else if lx.eat('+') {
                false
            } else if first {
                false
            } else {
                return Err(err(lx.column(s.len()), "expected '+' or '-'"));
            };
            first = false;
            lx.skip_ws();
            let mut coef = BigRational::one();
            let mut have_coef = false;
            if lx.chars.peek().is_some_and(|(_, c)| c.is_ascii_digit()) {
                let num = lx.number().ok_or_else(|| err(lx.column(s.len()), "bad number"))?;
                coef = BigRational::from_integer(num);
                if lx.eat('/') {
                    lx.skip_ws();
                    let col = lx.column(s.len());
                    let den = lx.number().ok_or_else(|| err(col, "bad denominator"))?;
                    if den.is_zero() {
                        return Err(err(col, "zero denominator"));
                    }
                    coef /= BigRational::from_integer(den);
                }
                have_coef = true;
            }
            let mut term = Cyclo::one();
            let wants_root = if have_coef { lx.eat('*') } else { true };
            if wants_root {
                lx.skip_ws();
                let col = lx.column(s.len());
                if !lx.eat('z') {
                    return Err(err(col, "expected zE^a"));
                }
                let col = lx.column(s.len());
                let e = lx
                    .number()
                    .and_then(|n| n.to_u32())
                    .filter(|&e| e >= 1)
                    .ok_or_else(|| err(col, "bad conductor"))?;
                let mut a: i64 = 1;
                if lx.eat('^') {
                    let paren = lx.eat('(');
                    let neg = lx.eat('-');
                    lx.skip_ws();
                    let col = lx.column(s.len());
                    a = lx
                        .number()
                        .and_then(|n| n.to_i64())
                        .ok_or_else(|| err(col, "bad exponent"))?;
                    if neg {
                        a = -a;
                    }
                    if paren && !lx.eat(')') {
                        return Err(err(lx.column(s.len()), "expected ')'"));
                    }
                }
                term = Cyclo::root_of_unity(e, a);
            }
            let mut term = term.scale(&coef);
            if negative {
                term = -term;
            }
            total = total + term;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(e: u32, a: i64) -> Cyclo {
        Cyclo::root_of_unity(e, a)
    }

    fn q(n: i64, d: i64) -> Cyclo {
        Cyclo::from_rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(euler_phi(11), 10);
        assert_eq!(euler_phi(12), 4);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(1, 0), Cyclo::one());
        assert_eq!(z(2, 1), Cyclo::from_int(-1));
        assert!((z(4, 1) + z(4, 3)).is_zero());
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(12, 4), z(3, 1));
    }

    #[test]
    fn field_arithmetic_examples() {
        let one = Cyclo::one();
        let half = one.checked_div(&(&one - &Cyclo::from_int(-1))).unwrap();
        assert_eq!(half, q(1, 2));
        assert_eq!((&one - &z(3, 1)) * (&one - &z(3, 2)), Cyclo::from_int(3));
        let s: Cyclo = (1..=10).map(|a| z(11, a)).sum();
        assert_eq!(s, Cyclo::from_int(-1));
        assert_eq!(one.checked_div(&Cyclo::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation_and_reality() {
        assert_eq!(z(5, 1).conjugate(), z(5, 4));
        let w = z(3, 1) + z(3, 2);
        assert!(w.is_real());
        assert_eq!(w, Cyclo::from_int(-1));
        assert!(w.is_rational_integer());
        assert!(!z(4, 1).is_real());
        assert!(!q(1, 2).is_rational_integer());
    }

    #[test]
    fn lefschetz_style_sum_is_not_real() {
        let one = Cyclo::one();
        let term = |a| one.checked_div(&(&one - &z(11, a))).unwrap();
        let v = &one - &(term(6) + term(3) + term(9));
        assert!(!v.is_real());
        let (_, im) = v.to_complex_f64();
        assert!((im - 0.416_651_867_213_675_5).abs() < 1e-12);
    }

    #[test]
    fn rendering() {
        let x: Cyclo = q(3, 2) - z(11, 3) + Cyclo::from_int(2) * z(11, 7);
        assert_eq!(x.to_string(), "3/2 - z11^3 + 2*z11^7");
        assert_eq!(Cyclo::zero().to_string(), "0");
        assert_eq!(z(2, 1).to_string(), "-1");
        assert_eq!(z(6, 1).embed(12).to_string(), "-z3^2");
        assert_eq!(z(11, 10).to_string(), "z11^10");
        assert_eq!((Cyclo::one() + z(5, 1)).to_string(), "1 + z5^1");
        assert_eq!(z(4, 1).to_string(), "z4^1");
        assert_eq!(z(4, 3).to_string(), "-z4^1");
    }

    #[test]
    fn parsing() {
        let x: Cyclo = "3/2 - z11^3 + 2*z11^7".parse().unwrap();
        assert_eq!(x, q(3, 2) - z(11, 3) + Cyclo::from_int(2) * z(11, 7));
        assert_eq!("z5^-1".parse::<Cyclo>().unwrap(), z(5, 4));
        assert_eq!("z5^(2)".parse::<Cyclo>().unwrap(), z(5, 2));
        assert_eq!("-z4".parse::<Cyclo>().unwrap(), z(4, 3));
        assert!("".parse::<Cyclo>().is_err());
        assert!("3 +".parse::<Cyclo>().is_err());
        assert!("1/0".parse::<Cyclo>().is_err());
        assert!("z0^1".parse::<Cyclo>().is_err());
        assert!("2 z3".parse::<Cyclo>().is_err());
    }

    #[test]
    fn real_part_of_inverse_is_one_half() {
        let one = Cyclo::one();
        for e in 2..=13u32 {
            for a in 1..e as i64 {
                let w = z(e, a);
                let s = one.checked_div(&(&one - &w)).unwrap()
                    + one.checked_div(&(&one - &w.conjugate())).unwrap();
                assert_eq!(s, one, "e={e} a={a}");
            }
        }
    }

    fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
        (
            prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]),
            prop::collection::vec((-5i64..=5, 1i64..=4), 1..6),
        )
            .prop_map(|(e, terms)| {
                terms
                    .iter()
                    .enumerate()
                    .map(|(a, &(n, d))| q(n, d) * z(e, a as i64))
                    .sum()
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }

        #[test]
        fn conjugation_properties(a in arb_cyclo()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert!((&a * &a.conjugate()).is_real());
        }

        #[test]
        fn text_round_trip(a in arb_cyclo(), k in prop::sample::select(vec![1u32, 2, 3])) {
            let wide = a.embed(a.conductor() * k);
            let text = wide.to_string();
            let back: Cyclo = text.parse().unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
