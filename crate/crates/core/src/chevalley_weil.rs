//! Characters of `G` on the homology of a cover, computed from the
//! branching data alone, and the holomorphic/antiholomorphic split of the
//! closed cover.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::character::{
    permutation_character, standard_characters, CharacterTable, ClassFunction, ModuleExpr,
};
use crate::cover::{Base, CoverSpec};
use crate::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

/// Sign convention for the local rotation of `l_i` at its fixed points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `l_i` rotates by `zeta_{n_i}`.
    #[default]
    Pos,
    /// `l_i` rotates by `zeta_{n_i}^-1`.
    Neg,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Pos => "pos",
            Orientation::Neg => "neg",
        })
    }
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pos" | "positive" => Ok(Orientation::Pos),
            "neg" | "negative" => Ok(Orientation::Neg),
            _ => Err(format!("orientation must be 'pos' or 'neg', not '{s}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HodgeCharacterPair {
    pub chi_10: ClassFunction,
    pub chi_01: ClassFunction,
    pub orientation: Orientation,
}

impl HodgeCharacterPair {
    pub fn is_real(&self) -> bool {
        self.chi_10 == self.chi_01
    }
}

/// `(2g+m-2) chi_reg + chi_triv` for a closed base, `(m-1) chi_reg +
/// chi_triv` for a disk.
pub fn punctured_homology_character(spec: &CoverSpec) -> Result<ClassFunction> {
    spec.validate()?;
    let m = spec.num_branch_points() as i64;
    if m == 0 {
        return Err(Error::NoPunctures);
    }
    let copies = match spec.base() {
        Base::Closed { genus } => 2 * genus as i64 + m - 2,
        Base::Disk => m - 1,
    };
    let (triv, reg, _) = standard_characters(spec.group());
    reg.scaled(copies).try_add(&triv)
}

/// `(2g+m-2) chi_reg + 2 chi_triv - sum_i chi_{G/<l_i>}`.
pub fn closed_homology_character(spec: &CoverSpec) -> Result<ClassFunction> {
    spec.validate()?;
    let genus = match spec.base() {
        Base::Closed { genus } => genus as i64,
        Base::Disk => return Err(Error::NotClosed),
    };
    let m = spec.num_branch_points() as i64;
    let (triv, reg, _) = standard_characters(spec.group());
    let mut chi = reg.scaled(2 * genus + m - 2).try_add(&triv.scaled(2))?;
    for fiber in spec.branch_fibers() {
        chi = chi.try_sub(&permutation_character(&fiber.fiber))?;
    }
    let dim = spec.closed_h1_dim()? as i64;
    if chi.degree().to_i64() != Some(dim) {
        return Err(Error::InconsistentCounts {
            formula: dim,
            riemann_hurwitz: chi.degree().to_i64().unwrap_or(i64::MIN),
        });
    }
    if let Err(e) = CharacterTable::of(spec.group()).decompose(&chi) {
        return Err(Error::NegativeMultiplicity(e.to_string()));
    }
    Ok(chi)
}

/// Decomposition of the closed homology character.
pub fn closed_homology_module(spec: &CoverSpec) -> Result<ModuleExpr> {
    let chi = closed_homology_character(spec)?;
    CharacterTable::of(spec.group()).decompose(&chi)
}

/// Decomposition of the punctured homology character.
pub fn punctured_homology_module(spec: &CoverSpec) -> Result<ModuleExpr> {
    let chi = punctured_homology_character(spec)?;
    CharacterTable::of(spec.group()).decompose(&chi)
}

/// The holomorphic Lefschetz formula
/// `chi_01(g) = 1 - sum_{g z = z} 1 / (1 - g'(z))`, where at the fixed
/// coset `x<l_i>` with `x^-1 g x = l_i^a` the rotation is `zeta_{n_i}^{+-a}`.
pub fn hodge_split(spec: &CoverSpec, orientation: Orientation) -> Result<HodgeCharacterPair> {
    let h1 = closed_homology_character(spec)?;
    let group = spec.group();
    let genus = spec.cover_genus()? as i64;
    let fibers = spec.branch_fibers();
    let sign = match orientation {
        Orientation::Pos => 1,
        Orientation::Neg => -1,
    };
    let mut inverses: HashMap<(usize, usize), Cyclo> = HashMap::new();
    let mut values = Vec::with_capacity(group.num_classes());
    for (j, class) in group.conjugacy_classes().iter().enumerate() {
        if j == 0 {
            values.push(Cyclo::from_int(genus));
            continue;
        }
        let g = class.representative;
        let mut total = Cyclo::zero();
        for (fiber, &l) in fibers.iter().zip(spec.parabolic()) {
            let n_i = fiber.ramification_order;
            for &x in fiber.fiber.representatives() {
                let y = group.mul(group.mul(group.inv(x), g), x);
                if !fiber.stabilizer.contains(y) {
                    continue;
                }
                let a = (1..n_i)
                    .find(|&a| group.pow(l, a as i64) == y)
                    .expect("a non-identity element of <l> is a power of l");
                let term = inverses.entry((n_i, a)).or_insert_with(|| {
                    let rotation = Cyclo::root_of_unity(n_i as u32, sign * a as i64);
                    (&Cyclo::one() - &rotation)
                        .inv()
                        .expect("a nontrivial root of unity differs from 1")
                });
                total = &total + term;
            }
        }
        values.push(&Cyclo::one() - &total);
    }
    let chi_01 = ClassFunction::new(Arc::clone(group), values);
    let chi_10 = chi_01.conjugate();
    let sum = chi_10.try_add(&chi_01)?;
    if let Some(j) = (0..group.num_classes()).find(|&j| sum.at_class(j) != h1.at_class(j)) {
        return Err(Error::HodgeSumMismatch(j));
    }
    if let Err(e) = CharacterTable::of(group).decompose(&chi_01) {
        return Err(Error::NegativeMultiplicity(format!("chi_01: {e}")));
    }
    Ok(HodgeCharacterPair {
        chi_10,
        chi_01,
        orientation,
    })
}

pub fn hodge_is_real(spec: &CoverSpec) -> Result<bool> {
    Ok(hodge_split(spec, Orientation::Pos)?.is_real())
}

/// Comparison of the homology of a double cover with the printed
/// expression `2g rho_R + (n-1) rho_z + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCoverReport {
    pub base_genus: usize,
    pub branch_points: usize,
    pub cover_genus: usize,
    /// Module computed from the branching data and confirmed by the cell
    /// complex.
    pub module: ModuleExpr,
    pub printed_expression: String,
    pub printed_module: ModuleExpr,
    pub discrepancy: Option<String>,
}

/// The `Z/2` cover of a genus-`g` surface branched over `n_branch` points,
/// all handle images trivial.
pub fn double_cover_spec(g: usize, n_branch: usize) -> Result<CoverSpec> {
    if n_branch % 2 == 1 {
        return Err(Error::OddBranchCount(n_branch));
    }
    if n_branch == 0 {
        return Err(Error::NoPunctures);
    }
    let group = crate::catalog::cyclic(2);
    let t = group.generators()[0];
    let e = group.identity();
    let spec = CoverSpec::closed(Arc::clone(&group), vec![(e, e); g], vec![t; n_branch]);
    spec.validate()?;
    Ok(spec)
}

pub fn pa_double_cover_module(g: usize, n_branch: usize) -> Result<DoubleCoverReport> {
    let spec = double_cover_spec(g, n_branch)?;
    let chi = closed_homology_character(&spec)?;
    let oracle = crate::oracle::oracle_characters(&spec)?;
    if oracle.closed.as_ref() != Some(&chi) {
        return Err(Error::OracleMismatch(format!(
            "double cover g={g} n={n_branch}: formula {:?}, cell complex {:?}",
            chi, oracle.closed
        )));
    }
    let table = CharacterTable::of(spec.group());
    let module = table.decompose(&chi)?;
    // rho_z of Z/2 is the sign character
    let printed_module = ModuleExpr::new(
        vec![2 * g as u64 + 1, 2 * g as u64 + n_branch as u64 - 1],
        table.degrees().to_vec(),
    );
    let printed_expression = format!("{}*rho_R + {}*rho_z + 1", 2 * g, n_branch - 1);
    let discrepancy = (printed_module != module).then(|| {
        format!(
            "printed expression has dimension {} but H1 of the genus-{} cover has dimension {}; \
             it exceeds the computed module {} by {}",
            printed_module.dim,
            spec.cover_genus().unwrap_or(0),
            module.dim,
            module,
            difference(&printed_module, &module)
        )
    });
    Ok(DoubleCoverReport {
        base_genus: g,
        branch_points: n_branch,
        cover_genus: spec.cover_genus()?,
        module,
        printed_expression,
        printed_module,
        discrepancy,
    })
}

fn difference(a: &ModuleExpr, b: &ModuleExpr) -> String {
    if a.multiplicities.iter().zip(&b.multiplicities).all(|(x, y)| x >= y) {
        let diff = a.multiplicities.iter().zip(&b.multiplicities).map(|(x, y)| x - y).collect();
        ModuleExpr::new(diff, a.degrees.clone()).to_string()
    } else {
        "a non-effective difference".into()
    }
}

/// Decides whether `chi` is the permutation character of a branch fiber,
/// i.e. of `G/H` with `H` cyclic. Returns the cyclic `H` when it is,
/// `None` when `chi` is only realized by noncyclic stabilizers.
pub fn is_topological_perm_rep(group: &Arc<FiniteGroup>, chi: &ClassFunction) -> Result<Option<Subgroup>> {
    let not_perm = |why: &str| Err(Error::NotAPermutationCharacter(why.to_string()));
    if !Arc::ptr_eq(chi.group(), group) && chi.group().as_ref() != group.as_ref() {
        return Err(Error::GroupMismatch);
    }
    let Some(values) = chi.to_ints() else {
        return not_perm("values are not integers");
    };
    let n = group.order() as i64;
    let degree = values[0];
    if degree <= 0 || n % degree != 0 {
        return not_perm("degree does not divide the group order");
    }
    if values.iter().any(|&v| v < 0 || v > degree) {
        return not_perm("fixed-point counts out of range");
    }
    let module = match CharacterTable::of(group).decompose(chi) {
        Ok(m) => m,
        Err(_) => return not_perm("not a character"),
    };
    if module.trivial_multiplicity() != 1 {
        return not_perm("not transitive");
    }
    let index = (n / degree) as usize;
    let matches = |h: &Subgroup| {
        h.order() == index && group.coset_action(h).map(|x| &permutation_character(&x) == chi).unwrap_or(false)
    };
    if let Some(h) = group.cyclic_subgroups_up_to_conjugacy().into_iter().find(|h| matches(h)) {
        return Ok(Some(h));
    }
    match group.all_subgroups(SUBGROUP_SCAN_LIMIT) {
        Some(all) if all.iter().any(matches) => Ok(None),
        Some(_) => not_perm("no transitive G-set has this character"),
        None => Ok(None),
    }
}

const SUBGROUP_SCAN_LIMIT: usize = 20_000;

/// Finds handle images `(a_i, b_i)` with `prod [a_i, b_i] = l_1 ... l_m`
/// that, together with the `l_i`, generate `G`.
pub fn extend_to_closed_surface(
    group: &Arc<FiniteGroup>,
    parabolic: &[Elem],
    genus: usize,
) -> Option<Vec<(Elem, Elem)>> {
    let target = group.product(parabolic.iter().copied());
    let start = group.subgroup(parabolic);
    let reachable: Vec<BTreeSet<Elem>> = (0..=genus).map(|k| group.commutator_product_set(k)).collect();
    let mut search = Extension {
        group,
        target,
        genus,
        reachable,
        failed: HashSet::new(),
        pairs: Vec::with_capacity(genus),
    };
    search.run(group.identity(), &start).then_some(search.pairs)
}

struct Extension<'a> {
    group: &'a Arc<FiniteGroup>,
    target: Elem,
    genus: usize,
    reachable: Vec<BTreeSet<Elem>>,
    failed: HashSet<(usize, Elem, Vec<u64>)>,
    pairs: Vec<(Elem, Elem)>,
}

impl Extension<'_> {
    fn run(&mut self, product: Elem, generated: &Subgroup) -> bool {
        let g = self.group;
        let level = self.pairs.len();
        let remaining = self.genus - level;
        let needed = g.mul(g.inv(product), self.target);
        if !self.reachable[remaining].contains(&needed) {
            return false;
        }
        if remaining == 0 {
            return generated.order() == g.order();
        }
        let key = (level, product, generated.mask().to_vec());
        if self.failed.contains(&key) {
            return false;
        }
        let elements: Vec<Elem> = g.elements().collect();
        for &a in &elements {
            for &b in &elements {
                let next_product = g.mul(product, g.comm(a, b));
                let next = if generated.contains(a) && generated.contains(b) {
                    generated.clone()
                } else {
                    let mut gens = generated.generators().to_vec();
                    gens.extend([a, b]);
                    g.subgroup(&gens)
                };
                self.pairs.push((a, b));
                if self.run(next_product, &next) {
                    return true;
                }
                self.pairs.pop();
            }
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn z11(ls: &[i64]) -> CoverSpec {
        let g = catalog::cyclic(11);
        let t = g.generators()[0];
        let par = ls.iter().map(|&k| g.pow(t, k)).collect();
        CoverSpec::closed(Arc::clone(&g), vec![(g.identity(), g.identity())], par)
    }

    fn z2_torus() -> CoverSpec {
        double_cover_spec(1, 2).unwrap()
    }

    #[test]
    fn punctured_and_closed_z2() {
        let spec = z2_torus();
        assert_eq!(punctured_homology_character(&spec).unwrap().to_ints().unwrap(), vec![5, 1]);
        assert_eq!(closed_homology_character(&spec).unwrap().to_ints().unwrap(), vec![4, 0]);
        assert_eq!(closed_homology_module(&spec).unwrap().to_string(), "2*rho_R");
    }

    #[test]
    fn degree_eleven_example() {
        let spec = z11(&[2, 4, 5]);
        let chi = closed_homology_character(&spec).unwrap().to_ints().unwrap();
        assert_eq!(chi[0], 32);
        assert!(chi[1..].iter().all(|&v| v == -1));
        let pair = hodge_split(&spec, Orientation::Pos).unwrap();
        assert!(!pair.is_real());
        let t = spec.group().generators()[0];
        let z = |a| Cyclo::root_of_unity(11, a);
        let inv = |a| (&Cyclo::one() - &z(a)).inv().unwrap();
        let expected = &Cyclo::one() - &(&(&inv(6) + &inv(3)) + &inv(9));
        assert_eq!(pair.chi_01.at(t), &expected);
        assert_eq!(pair.chi_01.degree(), &Cyclo::from_int(16));
        let flipped = hodge_split(&spec, Orientation::Neg).unwrap();
        assert_eq!(flipped.chi_01, pair.chi_10);
        assert_eq!(flipped.chi_10, pair.chi_01);
    }

    #[test]
    fn hodge_examples() {
        let pair = hodge_split(&z2_torus(), Orientation::Pos).unwrap();
        assert_eq!(pair.chi_01.to_ints().unwrap(), vec![2, 0]);
        let g = catalog::cyclic(6);
        let t = g.generators()[0];
        let e = g.identity();
        let spec = CoverSpec::closed(Arc::clone(&g), vec![(e, e)], vec![t, g.inv(t)]);
        assert!(hodge_is_real(&spec).unwrap());
        let unramified = CoverSpec::closed(Arc::clone(&g), vec![(t, e), (e, e)], vec![]);
        let pair = hodge_split(&unramified, Orientation::Pos).unwrap();
        assert!(pair.is_real());
        assert_eq!(pair.chi_01.to_ints().unwrap()[1..], [1; 5]);
    }

    #[test]
    fn double_cover_reports() {
        let r = pa_double_cover_module(1, 2).unwrap();
        assert_eq!(r.module.dim, 4);
        assert_eq!(r.printed_module.dim, 6);
        assert!(r.discrepancy.is_some());
        let r = pa_double_cover_module(0, 6).unwrap();
        assert_eq!(r.module.multiplicities, vec![0, 4]);
        assert_eq!(pa_double_cover_module(1, 3), Err(Error::OddBranchCount(3)));
    }

    #[test]
    fn topological_classification() {
        let s3 = catalog::symmetric(3);
        let (triv, reg, _) = standard_characters(&s3);
        assert_eq!(is_topological_perm_rep(&s3, &reg).unwrap().unwrap().order(), 1);
        assert!(is_topological_perm_rep(&s3, &triv).unwrap().is_none());
        let z4 = catalog::cyclic(4);
        let (triv, _, _) = standard_characters(&z4);
        assert_eq!(is_topological_perm_rep(&z4, &triv).unwrap().unwrap().order(), 4);
        let v4 = catalog::dihedral(2);
        let (triv, _, z) = standard_characters(&v4);
        assert!(is_topological_perm_rep(&v4, &triv).unwrap().is_none());
        assert!(matches!(
            is_topological_perm_rep(&v4, &z),
            Err(Error::NotAPermutationCharacter(_))
        ));
    }

    #[test]
    fn closed_extensions() {
        let s3 = catalog::symmetric(3);
        let t = s3.generators()[0];
        let r = s3.generators()[1];
        let pairs = extend_to_closed_surface(&s3, &[r], 1).unwrap();
        let spec = CoverSpec::closed(Arc::clone(&s3), pairs, vec![r]);
        spec.validate().unwrap();
        assert!(extend_to_closed_surface(&s3, &[t], 1).is_none());
        assert!(extend_to_closed_surface(&s3, &[t], 3).is_none());

        let z6 = catalog::cyclic(6);
        let a = z6.generators()[0];
        assert!(extend_to_closed_surface(&z6, &[a, z6.inv(a)], 1).is_some());
        assert!(extend_to_closed_surface(&z6, &[a, a], 2).is_none());
        assert!(extend_to_closed_surface(&z6, &[a, z6.inv(a)], 0).is_some());
    }
}
