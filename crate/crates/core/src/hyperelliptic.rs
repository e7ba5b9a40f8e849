//! Cyclic covers `y^2 = sum a_i x'^(m i)` of the hyperelliptic curve
//! `y^2 = sum a_i x^i`, via `x = x'^m`, and the action of `Z/m` on their
//! holomorphic differentials.
//!
//! The curve is never evaluated: everything here is bookkeeping of the
//! exponents in the basis `x'^l dx'/y`, on which the generator acts by
//! `zeta_m^(l+1)`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog;
use crate::character::ClassFunction;
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct HyperellipticCyclicCover {
    base_genus: usize,
    cyclic_degree: usize,
    coefficients: Vec<BigRational>,
    group: Arc<FiniteGroup>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialBasisElement {
    pub exponent: usize,
    pub modulus: usize,
    pub character_value: Cyclo,
}

impl DifferentialBasisElement {
    pub fn symbol(&self) -> String {
        format!("x'^{} dx'/y", self.exponent)
    }
}

impl fmt::Display for DifferentialBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [chi = z{}^({})]", self.symbol(), self.modulus, self.exponent + 1)
    }
}

/// Character of the forms vanishing on the ramification, with the degree
/// bookkeeping `deg(K - B) = deg K - deg B`.
#[derive(Clone, Debug, PartialEq)]
pub struct KMinusB {
    pub character: ClassFunction,
    pub dimension: usize,
    pub degree_k: i64,
    pub degree_b: i64,
    pub degree: i64,
}

impl HyperellipticCyclicCover {
    /// `coefficients` are `a_0, ..., a_{2g+2}`.
    pub fn new(base_genus: usize, cyclic_degree: usize, coefficients: Vec<BigRational>) -> Result<Self> {
        if base_genus < 2 {
            return Err(Error::InvalidCurve(format!("base genus {base_genus} is below 2")));
        }
        if cyclic_degree == 0 {
            return Err(Error::InvalidCurve("cyclic degree must be positive".into()));
        }
        if coefficients.len() != 2 * base_genus + 3 {
            return Err(Error::InvalidCurve(format!(
                "expected {} coefficients, got {}",
                2 * base_genus + 3,
                coefficients.len()
            )));
        }
        if coefficients[0].is_zero() {
            return Err(Error::InvalidCurve("a_0 must be nonzero".into()));
        }
        Ok(HyperellipticCyclicCover {
            base_genus,
            cyclic_degree,
            coefficients,
            group: catalog::cyclic(cyclic_degree),
        })
    }

    /// All coefficients equal to one.
    pub fn generic(base_genus: usize, cyclic_degree: usize) -> Result<Self> {
        Self::new(base_genus, cyclic_degree, vec![BigRational::one(); 2 * base_genus + 3])
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn cyclic_degree(&self) -> usize {
        self.cyclic_degree
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Genus of the cover as counted by its differential basis.
    pub fn genus(&self) -> usize {
        self.cyclic_degree * self.base_genus
    }

    pub fn differential_basis(&self) -> Vec<DifferentialBasisElement> {
        let m = self.cyclic_degree as u32;
        (0..self.genus())
            .map(|l| DifferentialBasisElement {
                exponent: l,
                modulus: self.cyclic_degree,
                character_value: Cyclo::root_of_unity(m, l as i64 + 1),
            })
            .collect()
    }

    /// `k` with `x = t^k` for the generator `t`.
    fn exponent_of(&self, x: Elem) -> usize {
        let g = &self.group;
        let t = g.generators()[0];
        (0..self.cyclic_degree)
            .find(|&k| g.pow(t, k as i64) == x)
            .expect("cyclic group")
    }

    fn character_of(&self, exponents: impl Iterator<Item = usize> + Clone) -> ClassFunction {
        let m = self.cyclic_degree as u32;
        let values = self
            .group
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let k = self.exponent_of(c.representative) as i64;
                exponents
                    .clone()
                    .map(|l| Cyclo::root_of_unity(m, k * (l as i64 + 1)))
                    .sum()
            })
            .collect();
        ClassFunction::new(Arc::clone(&self.group), values)
    }

    pub fn h0k_character(&self) -> ClassFunction {
        self.character_of(0..self.genus())
    }

    /// Restriction to the forms `x'^l dx'/y` with `l >= m - 1`.
    pub fn h0k_minus_b(&self) -> KMinusB {
        let m = self.cyclic_degree;
        let g = self.base_genus;
        let exponents = m - 1..self.genus();
        let dimension = exponents.len();
        let degree_k = 2 * (m * g) as i64 - 2;
        let degree_b = 2 * (m as i64 - 1);
        KMinusB {
            character: self.character_of(exponents),
            dimension,
            degree_k,
            degree_b,
            degree: degree_k - degree_b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum Obstruction {
    Obstructed(String),
    NotObstructed(String),
    Unknown(String),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Obstructed(r) => write!(f, "Obstructed: {r}"),
            Obstruction::NotObstructed(r) => write!(f, "NotObstructed: {r}"),
            Obstruction::Unknown(r) => write!(f, "Unknown: {r}"),
        }
    }
}

/// Largest order for which the exact test runs: a central extension of
/// order at most 2 of the icosahedral group.
pub const EXACT_OBSTRUCTION_LIMIT: usize = 120;

/// Whether `G` can act on a hyperelliptic curve with the quotient by the
/// hyperelliptic involution acting on the line.
pub fn hyperelliptic_obstruction(group: &FiniteGroup) -> Obstruction {
    if let Some(rank) = group.abelian_rank() {
        if rank >= 6 {
            return Obstruction::Obstructed(format!("abelian of rank {rank} >= 6"));
        }
    }
    if group.order() > EXACT_OBSTRUCTION_LIMIT {
        return Obstruction::Unknown(format!(
            "order {} exceeds {EXACT_OBSTRUCTION_LIMIT} and the rank criterion does not apply",
            group.order()
        ));
    }
    let mut kernels = vec![group.trivial_subgroup()];
    kernels.extend(
        group
            .elements()
            .filter(|&z| group.elem_order(z) == 2 && group.is_central(z))
            .map(|z| group.subgroup(&[z])),
    );
    for n in &kernels {
        if let Some(name) = projective_type(group, n) {
            let how = if n.order() == 1 {
                format!("G is {name}")
            } else {
                format!("G modulo a central involution is {name}")
            };
            return Obstruction::NotObstructed(format!("{how}, a finite subgroup of PGL2"));
        }
    }
    Obstruction::Obstructed(
        "no quotient by a central subgroup of order <= 2 is cyclic, dihedral, A4, S4 or A5".into(),
    )
}

/// Recognizes `G/N` among the finite subgroups of `PGL_2(C)` by von Dyck
/// relations modulo `N` plus generation and order.
fn projective_type(group: &FiniteGroup, n: &Subgroup) -> Option<String> {
    let q = group.order() / n.order();
    let elements: Vec<Elem> = group.elements().collect();
    let generates = |gens: &[Elem]| {
        let mut all = gens.to_vec();
        all.extend_from_slice(n.generators());
        group.subgroup(&all).order() == group.order()
    };
    let in_n = |x: Elem| n.contains(x);
    let pow = |x: Elem, k: usize| group.pow(x, k as i64);

    if elements.iter().any(|&x| group.order_modulo(x, n) == q) {
        return Some(format!("cyclic of order {q}"));
    }
    if q.is_multiple_of(2) {
        let k = q / 2;
        for &r in &elements {
            if !in_n(pow(r, k)) {
                continue;
            }
            for &s in &elements {
                if in_n(pow(s, 2)) && in_n(pow(group.mul(s, r), 2)) && generates(&[r, s]) {
                    return Some(format!("dihedral of order {q}"));
                }
            }
        }
    }
    let triangle = match q {
        12 => Some((3, "A4")),
        24 => Some((4, "S4")),
        60 => Some((5, "A5")),
        _ => None,
    };
    if let Some((k, name)) = triangle {
        for &a in &elements {
            if !in_n(pow(a, 2)) {
                continue;
            }
            for &b in &elements {
                if in_n(pow(b, 3)) && in_n(pow(group.mul(a, b), k)) && generates(&[a, b]) {
                    return Some(name.to_string());
                }
            }
        }
    }
    None
}
