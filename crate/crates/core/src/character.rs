//! Class functions, irreducible character tables and decompositions.
//!
//! Tables are computed by the modular Dixon method. The class-algebra
//! structure constants give commuting matrices whose common eigenvectors
//! are the central characters; these are found over a prime field `F_p`
//! with `p = 1 mod exp(G)` and lifted to exact cyclotomic values through
//! eigenvalue multiplicities of each class representative.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{prime_factors, FiniteGroup, GSet};
use crate::perm::Perm;

/// A function on conjugacy classes, one value per class in the order of
/// [`FiniteGroup::conjugacy_classes`].
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclo>,
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclo>) -> ClassFunction {
        assert_eq!(values.len(), group.num_classes(), "one value per class");
        ClassFunction { group, values }
    }

    pub fn from_ints(group: Arc<FiniteGroup>, values: &[i64]) -> ClassFunction {
        ClassFunction::new(group, values.iter().map(|&v| Cyclo::from_int(v)).collect())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn at_class(&self, j: usize) -> &Cyclo {
        &self.values[j]
    }

    pub fn at(&self, x: crate::group::Elem) -> &Cyclo {
        &self.values[self.group.class_of(x)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclo {
        &self.values[0]
    }

    pub fn same_group(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }

    fn zip_with(&self, other: &ClassFunction, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Result<ClassFunction> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scaled(&self, k: i64) -> ClassFunction {
        let k = Cyclo::from_int(k);
        ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|v| v * &k).collect(),
        }
    }

    pub fn conjugate(&self) -> ClassFunction {
        ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(Cyclo::conjugate).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(Cyclo::is_real)
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.iter().all(Cyclo::is_rational_integer)
    }

    /// Integer values, when every value is a rational integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.values.iter().map(Cyclo::to_i64).collect()
    }

    pub fn rendered_values(&self) -> Vec<String> {
        self.values.iter().map(|v| v.to_string()).collect()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &ClassFunction) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction[{}]", self.rendered_values().join(", "))
    }
}

/// `(1/|G|) sum_classes |C| a(C) conj(b(C))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclo> {
    if !a.same_group(b) {
        return Err(Error::GroupMismatch);
    }
    let g = &a.group;
    let total: Cyclo = g
        .conjugacy_classes()
        .iter()
        .zip(a.values.iter().zip(&b.values))
        .map(|(c, (x, y))| &(x * &y.conjugate()) * &Cyclo::from_int(c.size() as i64))
        .sum();
    Ok(total.scale(&BigRational::new(1.into(), (g.order() as i64).into())))
}

/// Trivial, regular, and regular-minus-trivial characters.
pub fn standard_characters(group: &Arc<FiniteGroup>) -> (ClassFunction, ClassFunction, ClassFunction) {
    let r = group.num_classes();
    let triv = ClassFunction::from_ints(Arc::clone(group), &vec![1; r]);
    let mut reg = vec![0i64; r];
    reg[0] = group.order() as i64;
    let reg = ClassFunction::from_ints(Arc::clone(group), &reg);
    let z = reg.try_sub(&triv).expect("same group");
    (triv, reg, z)
}

/// Number of fixed points of each class representative.
pub fn permutation_character(x: &GSet) -> ClassFunction {
    let group = x.group();
    let values: Vec<i64> = group
        .conjugacy_classes()
        .iter()
        .map(|c| x.fixed_points(c.representative) as i64)
        .collect();
    ClassFunction::from_ints(Arc::clone(group), &values)
}

pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterTable")
            .field("degrees", &self.degrees)
            .finish()
    }
}

fn table_cache() -> &'static Mutex<HashMap<Vec<Perm>, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<Perm>, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Computes the full table; rows are sorted by degree, then by the
/// eigenvalue exponents of each class representative.
pub fn character_table(group: &Arc<FiniteGroup>) -> CharacterTable {
    let rows = dixon(group);
    let degrees = rows.iter().map(|r| r.degree).collect();
    let irreducibles = rows
        .into_iter()
        .map(|r| ClassFunction::new(Arc::clone(group), r.values))
        .collect();
    CharacterTable {
        group: Arc::clone(group),
        irreducibles,
        degrees,
    }
}

impl CharacterTable {
    /// Shared table for `group`, computed once per generating set.
    pub fn of(group: &Arc<FiniteGroup>) -> Arc<CharacterTable> {
        let key = group.generator_perms().to_vec();
        if let Some(t) = table_cache().lock().unwrap().get(&key) {
            if t.group.as_ref() == group.as_ref() {
                return Arc::clone(t);
            }
        }
        let t = Arc::new(character_table(group));
        table_cache().lock().unwrap().insert(key, Arc::clone(&t));
        t
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Multiplicities `<chi, chi_i>`; fails unless all are nonnegative
    /// integers.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<ModuleExpr> {
        let mut mult = Vec::with_capacity(self.len());
        for (i, irr) in self.irreducibles.iter().enumerate() {
            let m = inner_product(chi, irr)?;
            let value = m
                .as_rational()
                .filter(|q| q.is_integer() && !q.is_negative())
                .and_then(|q| q.to_integer().to_u64());
            match value {
                Some(v) => mult.push(v),
                None => {
                    return Err(Error::NotACharacter {
                        index: i,
                        value: m.to_string(),
                    })
                }
            }
        }
        Ok(ModuleExpr::new(mult, self.degrees.clone()))
    }

    /// The class function `sum_i m_i chi_i`.
    pub fn character_of(&self, module: &ModuleExpr) -> ClassFunction {
        let mut values = vec![Cyclo::zero(); self.group.num_classes()];
        for (irr, &m) in self.irreducibles.iter().zip(&module.multiplicities) {
            if m == 0 {
                continue;
            }
            let m = Cyclo::from_int(m as i64);
            for (v, x) in values.iter_mut().zip(irr.values()) {
                *v = &*v + &(x * &m);
            }
        }
        ClassFunction::new(Arc::clone(&self.group), values)
    }

    /// Class list followed by an aligned grid: one column per class, one
    /// row per irreducible.
    pub fn render(&self) -> String {
        let g = &self.group;
        let mut out = String::new();
        let mut header = vec!["".to_string()];
        for (j, c) in g.conjugacy_classes().iter().enumerate() {
            out.push_str(&format!(
                "class c{}: size {}, order {}, representative {}\n",
                j + 1,
                c.size(),
                g.elem_order(c.representative),
                g.perm(c.representative)
            ));
            header.push(format!("c{}", j + 1));
        }
        let mut grid = vec![header];
        for (i, irr) in self.irreducibles.iter().enumerate() {
            let mut row = vec![format!("chi_{i}")];
            row.extend(irr.rendered_values());
            grid.push(row);
        }
        let cols = grid[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn dump(&self) -> TableDump {
        let g = &self.group;
        TableDump {
            order: g.order(),
            classes: g
                .conjugacy_classes()
                .iter()
                .map(|c| ClassDump {
                    size: c.size(),
                    representative: g.perm(c.representative).to_string(),
                    element_order: g.elem_order(c.representative),
                })
                .collect(),
            characters: self
                .irreducibles
                .iter()
                .zip(&self.degrees)
                .map(|(chi, &d)| CharacterDump {
                    degree: d,
                    values: chi.rendered_values(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassDump {
    pub size: usize,
    pub representative: String,
    pub element_order: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CharacterDump {
    pub degree: u64,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableDump {
    pub order: usize,
    pub classes: Vec<ClassDump>,
    pub characters: Vec<CharacterDump>,
}

/// A module given by its multiplicity of each irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleExpr {
    pub multiplicities: Vec<u64>,
    pub degrees: Vec<u64>,
    pub dim: u64,
}

impl ModuleExpr {
    pub fn new(multiplicities: Vec<u64>, degrees: Vec<u64>) -> ModuleExpr {
        assert_eq!(multiplicities.len(), degrees.len());
        let dim = multiplicities.iter().zip(&degrees).map(|(m, d)| m * d).sum();
        ModuleExpr {
            multiplicities,
            degrees,
            dim,
        }
    }

    /// `a rho_R + b 1` over a table with the given degrees.
    pub fn regular_plus_trivial(a: u64, b: u64, degrees: &[u64]) -> ModuleExpr {
        let mut mult: Vec<u64> = degrees.iter().map(|d| a * d).collect();
        mult[0] += b;
        ModuleExpr::new(mult, degrees.to_vec())
    }

    pub fn trivial_multiplicity(&self) -> u64 {
        self.multiplicities[0]
    }

    /// Splits off as many copies of the regular representation as fit.
    pub fn regular_part(&self) -> u64 {
        if self.degrees.len() < 2 {
            return 0;
        }
        self.multiplicities
            .iter()
            .zip(&self.degrees)
            .map(|(m, d)| m / d)
            .min()
            .unwrap_or(0)
    }
}

impl fmt::Display for ModuleExpr {
    /// Renders as `a*rho_R + b*1 + c*chi_i`, omitting zero terms and unit
    /// coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.regular_part();
        let mut terms = Vec::new();
        let term = |c: u64, name: &str| if c == 1 { name.to_string() } else { format!("{c}*{name}") };
        if a > 0 {
            terms.push(term(a, "rho_R"));
        }
        for (i, (m, d)) in self.multiplicities.iter().zip(&self.degrees).enumerate() {
            let rest = m - a * d;
            if rest == 0 {
                continue;
            }
            if i == 0 {
                terms.push(if rest == 1 { "1".to_string() } else { format!("{rest}*1") });
            } else {
                terms.push(term(rest, &format!("chi_{i}")));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn decompose(chi: &ClassFunction) -> Result<ModuleExpr> {
    CharacterTable::of(chi.group()).decompose(chi)
}

/// Real dimension of the unitary commutant `prod_V U(i dim V)` of `i`
/// copies of the regular representation; equals `i^2 |G|`.
pub fn commutant_unitary_dim(group: &Arc<FiniteGroup>, i: u64) -> Result<u64> {
    let table = CharacterTable::of(group);
    let found: u64 = table.degrees().iter().map(|d| (i * d) * (i * d)).sum();
    let expected = i * i * group.order() as u64;
    if found != expected {
        return Err(Error::CommutantMismatch { found, expected });
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// modular Dixon

struct IrrRow {
    degree: u64,
    values: Vec<Cyclo>,
    key: Vec<Vec<u64>>,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p = 1 mod e` with `p > 2 sqrt(n)`.
fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * n) {
        p += e;
    }
    p
}

fn primitive_root_of_unity(e: u64, p: u64) -> u64 {
    let primes = prime_factors(e);
    (2..p)
        .map(|a| pow_mod(a, (p - 1) / e, p))
        .find(|&z| primes.iter().all(|&q| pow_mod(z, e / q, p) != 1))
        .expect("p = 1 mod e has a primitive e-th root of unity")
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref_mod(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + p - f * m[r][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the null space of a square matrix.
fn nullspace_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m = a.to_vec();
    let pivots = rref_mod(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial via Hessenberg reduction; constant term first.
fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for k in j + 2..n {
            let t = h[k][j] * inv % p;
            if t == 0 {
                continue;
            }
            for c in 0..n {
                h[k][c] = (h[k][c] + p - t * h[j + 1][c] % p) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + t * row[k]) % p;
            }
        }
    }
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_{i<m} h[i-1][m-1] prod_{k=i}^{m-1} h[k][k-1] p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - c * h[m - 1][m - 1] % p) % p;
        }
        let mut prod = 1u64;
        for i in (1..m).rev() {
            prod = prod * h[i][i - 1] % p;
            let coef = h[i - 1][m - 1] * prod % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn dixon(group: &FiniteGroup) -> Vec<IrrRow> {
    let n = group.order() as u64;
    let r = group.num_classes();
    let e = group.exponent();
    let p = dixon_prime(e, n);
    let classes = group.conjugacy_classes();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();

    // consts[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
    let mut consts = vec![vec![vec![0u64; r]; r]; r];
    for (l, cl) in classes.iter().enumerate() {
        let z = cl.representative;
        for (j, cj) in classes.iter().enumerate() {
            for &x in &cj.members {
                let k = group.class_of(group.mul(group.inv(x), z));
                consts[j][k][l] += 1;
            }
        }
    }

    // each space: basis vectors in reduced form plus their pivot positions
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![(identity, (0..r).collect())];
    for (j, cj) in consts.iter().enumerate().skip(1) {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            // images M_j b_i, then coordinates at the pivots
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|k| (0..r).fold(0u64, |acc, l| (acc + cj[k][l] % p * b[l]) % p))
                        .collect()
                })
                .collect();
            let a: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][pivots[row]]).collect())
                .collect();
            let poly = charpoly_mod(&a, p);
            let mut found = 0;
            for lambda in 0..p {
                if eval_poly(&poly, lambda, p) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = a
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, &v)| if c == i { (v + p - lambda) % p } else { v })
                            .collect()
                    })
                    .collect();
                let null = nullspace_mod(&shifted, p);
                found += null.len();
                let mut vectors: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coords| {
                        (0..r)
                            .map(|pos| {
                                coords
                                    .iter()
                                    .zip(&basis)
                                    .fold(0, |acc, (c, b)| (acc + c * b[pos]) % p)
                            })
                            .collect()
                    })
                    .collect();
                let piv = rref_mod(&mut vectors, p);
                vectors.truncate(piv.len());
                next.push((vectors, piv));
            }
            assert_eq!(found, d, "class matrix {j} is not diagonalizable mod {p}");
        }
        spaces = next;
    }
    assert_eq!(spaces.len(), r, "central characters did not separate");

    let z = primitive_root_of_unity(e, p);
    let inv_class: Vec<usize> = (0..r).map(|j| group.inverse_class(j)).collect();
    // class of rep^t for each class and each t < order
    let powers: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let x = c.representative;
            let o = group.elem_order(x);
            let mut out = Vec::with_capacity(o);
            let mut y = group.identity();
            for _ in 0..o {
                out.push(group.class_of(y));
                y = group.mul(y, x);
            }
            out
        })
        .collect();
    let root = (n as f64).sqrt().floor() as u64 + 1;

    let mut rows: Vec<IrrRow> = spaces
        .into_iter()
        .map(|(basis, _)| {
            let v = &basis[0];
            let scale = inv_mod(v[0], p);
            let w: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
            let s = (0..r).fold(0u64, |acc, j| {
                (acc + w[j] * w[inv_class[j]] % p * inv_mod(sizes[j] % p, p)) % p
            });
            let d2 = n % p * inv_mod(s, p) % p;
            let degree = (1..=root)
                .find(|d| d * d % p == d2)
                .expect("degree squared has a root below sqrt|G|");
            let chi: Vec<u64> = (0..r)
                .map(|j| degree * w[j] % p * inv_mod(sizes[j] % p, p) % p)
                .collect();
            let mut values = Vec::with_capacity(r);
            let mut key = Vec::with_capacity(r);
            for pw in &powers {
                let o = pw.len() as u64;
                let step = e / o;
                let inv_o = inv_mod(o, p);
                let mut mult = Vec::with_capacity(o as usize);
                let mut exps = Vec::new();
                for k in 0..o {
                    let sum = (0..o).fold(0u64, |acc, t| {
                        let ex = (e - (step * k * t) % e) % e;
                        (acc + chi[pw[t as usize]] * pow_mod(z, ex, p)) % p
                    });
                    let m = sum * inv_o % p;
                    assert!(m <= degree, "eigenvalue multiplicity {m} exceeds degree {degree}");
                    exps.extend(std::iter::repeat_n(k * step, m as usize));
                    mult.push(BigRational::from_integer(BigInt::from(m)));
                }
                values.push(Cyclo::from_exponent_coeffs(o as u32, &mult));
                key.push(exps);
            }
            IrrRow { degree, values, key }
        })
        .collect();
    rows.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.key.cmp(&b.key)));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ints(chi: &ClassFunction) -> Vec<i64> {
        chi.to_ints().expect("integer valued")
    }

    #[test]
    fn cyclic_three() {
        let g = catalog::cyclic(3);
        let t = character_table(&g);
        let z = |a| Cyclo::root_of_unity(3, a);
        let one = Cyclo::one();
        assert_eq!(t.irreducibles()[0].values(), &[one.clone(), one.clone(), one.clone()]);
        assert_eq!(t.irreducibles()[1].values(), &[one.clone(), z(1), z(2)]);
        assert_eq!(t.irreducibles()[2].values(), &[one, z(2), z(1)]);
    }

    #[test]
    fn symmetric_three() {
        let g = catalog::symmetric(3);
        let t = character_table(&g);
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(ints(&t.irreducibles()[2]), vec![2, 0, -1]);
        assert_eq!(ints(&t.irreducibles()[1]), vec![1, -1, 1]);
    }

    #[test]
    fn quaternion_degrees() {
        let t = character_table(&catalog::quaternion());
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn larger_tables_have_the_right_shape() {
        for (g, degrees) in [
            (catalog::symmetric(4), vec![1, 1, 2, 3, 3]),
            (catalog::alternating(4), vec![1, 1, 1, 3]),
            (catalog::alternating(5), vec![1, 3, 3, 4, 5]),
            (catalog::dihedral(4), vec![1, 1, 1, 1, 2]),
        ] {
            let t = character_table(&g);
            assert_eq!(t.degrees(), degrees.as_slice());
        }
    }

    #[test]
    fn inner_products() {
        let g = catalog::symmetric(3);
        let (triv, reg, _) = standard_characters(&g);
        assert_eq!(inner_product(&triv, &triv).unwrap(), Cyclo::one());
        assert_eq!(inner_product(&reg, &triv).unwrap(), Cyclo::one());
        assert_eq!(inner_product(&reg, &reg).unwrap(), Cyclo::from_int(6));
        let (other, _, _) = standard_characters(&catalog::cyclic(6));
        assert_eq!(inner_product(&triv, &other), Err(Error::GroupMismatch));
    }

    #[test]
    fn decompositions() {
        let s3 = catalog::symmetric(3);
        let (_, reg, z) = standard_characters(&s3);
        assert_eq!(decompose(&reg).unwrap().multiplicities, vec![1, 1, 2]);
        assert_eq!(decompose(&z).unwrap().multiplicities, vec![0, 1, 2]);

        let z2 = catalog::cyclic(2);
        let (triv, reg, z) = standard_characters(&z2);
        let chi = reg.scaled(2).try_sub(&triv).unwrap();
        assert_eq!(decompose(&chi).unwrap().multiplicities, vec![1, 2]);
        let four = ClassFunction::from_ints(Arc::clone(&z2), &[4, 0]);
        assert_eq!(decompose(&four).unwrap().multiplicities, vec![2, 2]);
        assert_eq!(ints(&z), vec![1, -1]);
        let bad = ClassFunction::from_ints(z2, &[1, 0]);
        assert!(matches!(decompose(&bad), Err(Error::NotACharacter { .. })));
    }

    #[test]
    fn permutation_characters() {
        let s3 = catalog::symmetric(3);
        let t = s3.conjugacy_classes()[1].representative;
        let natural = s3.coset_action(&s3.subgroup(&[t])).unwrap();
        assert_eq!(ints(&permutation_character(&natural)), vec![3, 1, 0]);
        let reg = permutation_character(&s3.regular_action());
        assert_eq!(ints(&reg), vec![6, 0, 0]);
        let point = permutation_character(&s3.coset_action(&s3.whole()).unwrap());
        assert_eq!(ints(&point), vec![1, 1, 1]);
    }

    #[test]
    fn commutant_dimensions() {
        assert_eq!(commutant_unitary_dim(&catalog::cyclic(2), 1).unwrap(), 2);
        assert_eq!(commutant_unitary_dim(&catalog::symmetric(3), 2).unwrap(), 24);
        assert_eq!(commutant_unitary_dim(&catalog::alternating(4), 1).unwrap(), 12);
    }

    #[test]
    fn module_rendering() {
        let d = vec![1, 1, 2];
        assert_eq!(ModuleExpr::regular_plus_trivial(2, 2, &d).to_string(), "2*rho_R + 2*1");
        assert_eq!(ModuleExpr::regular_plus_trivial(1, 1, &d).to_string(), "rho_R + 1");
        assert_eq!(ModuleExpr::new(vec![0, 1, 2], d.clone()).to_string(), "chi_1 + 2*chi_2");
        assert_eq!(ModuleExpr::new(vec![0, 0, 0], d).to_string(), "0");
        assert_eq!(ModuleExpr::new(vec![3], vec![1]).to_string(), "3*1");
    }

    #[test]
    fn text_grid_is_aligned() {
        let t = character_table(&catalog::symmetric(3));
        let text = t.render();
        assert!(text.starts_with("class c1: size 1, order 1, representative ()"));
        assert_eq!(text.lines().count(), 7);
        assert!(text.contains("chi_2  2   0   -1"));
    }
}
