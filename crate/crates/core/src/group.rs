//! Finite permutation groups with full element enumeration.
//!
//! A [`FiniteGroup`] stores every element, so everything downstream
//! (conjugacy classes, subgroups, coset actions) is computed by direct
//! scans. Elements are addressed by [`Elem`] indices into the
//! breadth-first enumeration; index 0 is always the identity.
//!
//! Multiplication follows the permutation convention of [`Perm::then`]:
//! `mul(a, b)` applies `a` first.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::{Perm, MAX_DEGREE};

pub const DEFAULT_ORDER_LIMIT: usize = 1_000_000;
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Elem {
        Elem(i as u32)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Elem,
    pub members: Vec<Elem>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    gen_elems: Vec<Elem>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    exponent: u64,
    table: Option<Vec<u32>>,
    classes: OnceLock<ClassData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.order())
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

/// Closure of `generators` under composition, enumerated breadth-first
/// from the identity with generators tried in the given order.
pub fn enumerate_group(generators: &[Perm]) -> Result<FiniteGroup> {
    FiniteGroup::generate_with_limit(generators, DEFAULT_ORDER_LIMIT)
}

impl FiniteGroup {
    pub fn generate(generators: &[Perm]) -> Result<Arc<FiniteGroup>> {
        enumerate_group(generators).map(Arc::new)
    }

    pub fn generate_with_limit(generators: &[Perm], limit: usize) -> Result<FiniteGroup> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }

        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let y = elements[i].then(g);
                if !index.contains_key(&y) {
                    if elements.len() >= limit {
                        return Err(Error::OrderLimitExceeded(limit));
                    }
                    index.insert(y.clone(), elements.len() as u32);
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }

        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders: Vec<u32> = elements
            .iter()
            .map(|p| p.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64))) as u32)
            .collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)));
        let gen_elems = generators.iter().map(|g| Elem(index[g])).collect();

        let mut group = FiniteGroup {
            degree,
            generators: generators.to_vec(),
            gen_elems,
            elements,
            index,
            inverses,
            orders,
            exponent,
            table: None,
            classes: OnceLock::new(),
        };
        let n = group.order();
        if n <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let p = group.elements[a].then(&group.elements[b]);
                    table.push(group.index[&p]);
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generator_perms(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gen_elems
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem::from_index)
    }

    pub fn perm(&self, x: Elem) -> &Perm {
        &self.elements[x.index()]
    }

    pub fn elem(&self, p: &Perm) -> Option<Elem> {
        self.index.get(p).map(|&i| Elem(i))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => Elem(t[a.index() * self.order() + b.index()]),
            None => Elem(self.index[&self.elements[a.index()].then(&self.elements[b.index()])]),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.index()])
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        self.orders[a.index()] as usize
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.elem_order(a) as i64;
        let k = k.rem_euclid(o);
        let mut acc = Elem::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `x a x^-1`.
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(x, a), self.inv(x))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn comm(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(ab, self.inv(ba))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(Elem::IDENTITY, |acc, x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_elems;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.gen_elems
            .iter()
            .all(|&g| self.mul(a, g) == self.mul(g, a))
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut members = vec![Elem(start as u32)];
                class_of[start] = id;
                let mut head = 0;
                while head < members.len() {
                    let y = members[head];
                    head += 1;
                    for &s in &self.gen_elems {
                        let z = self.conj(y, self.inv(s));
                        if class_of[z.index()] == u32::MAX {
                            class_of[z.index()] = id;
                            members.push(z);
                        }
                    }
                }
                members.sort();
                classes.push(ConjugacyClass {
                    representative: Elem(start as u32),
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes ordered by least member index; the identity class
    /// comes first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn num_classes(&self) -> usize {
        self.conjugacy_classes().len()
    }

    pub fn class_of(&self, a: Elem) -> usize {
        self.class_data().class_of[a.index()] as usize
    }

    /// Index of the class containing the inverses of class `j`.
    pub fn inverse_class(&self, j: usize) -> usize {
        self.class_of(self.inv(self.conjugacy_classes()[j].representative))
    }

    pub fn subgroup(&self, generators: &[Elem]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![0u64; n.div_ceil(64)];
        let mut elements = vec![Elem::IDENTITY];
        mask[0] |= 1;
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            head += 1;
            for &g in generators {
                let y = self.mul(x, g);
                let (w, b) = (y.index() / 64, y.index() % 64);
                if mask[w] & (1 << b) == 0 {
                    mask[w] |= 1 << b;
                    elements.push(y);
                }
            }
        }
        elements.sort();
        let order = elements.len();
        let is_cyclic = elements.iter().any(|&x| self.elem_order(x) == order);
        let is_central = elements.iter().all(|&x| self.is_central(x));
        Subgroup {
            generators: generators.to_vec(),
            elements,
            mask,
            is_cyclic,
            is_central,
        }
    }

    /// Builds a subgroup from an explicit element list, checking closure.
    pub fn subgroup_from_elements(&self, elements: &[Elem]) -> Result<Subgroup> {
        let h = self.subgroup(elements);
        let given: BTreeSet<Elem> = elements.iter().copied().collect();
        if h.order() != given.len() || !h.elements.iter().all(|x| given.contains(x)) {
            return Err(Error::NotASubgroup(
                "element list is not closed under composition".into(),
            ));
        }
        Ok(h)
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup(&self.gen_elems)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup(&[])
    }

    pub fn center(&self) -> Subgroup {
        let central: Vec<Elem> = self.elements().filter(|&x| self.is_central(x)).collect();
        self.subgroup(&central)
    }

    /// One representative for each conjugacy class of cyclic subgroups,
    /// ordered by the least class index among their generators.
    pub fn cyclic_subgroups_up_to_conjugacy(&self) -> Vec<Subgroup> {
        let r = self.num_classes();
        let mut done = vec![false; r];
        let mut out = Vec::new();
        for j in 0..r {
            if done[j] {
                continue;
            }
            let x = self.conjugacy_classes()[j].representative;
            let o = self.elem_order(x);
            // <x> and <y> are conjugate iff y is conjugate to a generator of <x>
            for k in 1..=o {
                if k.gcd(&o) == 1 {
                    done[self.class_of(self.pow(x, k as i64))] = true;
                }
            }
            out.push(self.subgroup(&[x]));
        }
        out
    }

    /// Every subgroup, found by repeatedly joining cyclic subgroups.
    /// Returns `None` when more than `limit` subgroups turn up.
    pub fn all_subgroups(&self, limit: usize) -> Option<Vec<Subgroup>> {
        let mut cyclic: Vec<Subgroup> = Vec::new();
        let mut seen_cyclic = BTreeSet::new();
        for x in self.elements() {
            let h = self.subgroup(&[x]);
            if seen_cyclic.insert(h.mask.clone()) {
                cyclic.push(h);
            }
        }
        let mut seen: BTreeSet<Vec<u64>> = seen_cyclic;
        let mut all = cyclic.clone();
        let mut frontier = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.elements.iter().all(|&x| h.contains(x)) {
                        continue;
                    }
                    let mut gens = h.generators.clone();
                    gens.extend(c.generators.iter().copied());
                    let j = self.subgroup(&gens);
                    if seen.insert(j.mask.clone()) {
                        if seen.len() > limit {
                            return None;
                        }
                        next.push(j.clone());
                        all.push(j);
                    }
                }
            }
            frontier = next;
        }
        all.sort_by(|a, b| a.order().cmp(&b.order()).then(a.elements.cmp(&b.elements)));
        Some(all)
    }

    /// The action of the group on left cosets `xH`.
    pub fn coset_action(self: &Arc<Self>, h: &Subgroup) -> Result<GSet> {
        let n = self.order();
        if h.mask.len() != n.div_ceil(64) || h.elements.iter().any(|x| x.index() >= n) {
            return Err(Error::NotASubgroup("subgroup belongs to another group".into()));
        }
        for &a in &h.generators {
            for &b in &h.elements {
                if !h.contains(self.mul(b, a)) {
                    return Err(Error::NotASubgroup("subgroup is not closed".into()));
                }
            }
        }
        let mut point_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if point_of[x.index()] != u32::MAX {
                continue;
            }
            let p = reps.len() as u32;
            reps.push(x);
            for &y in &h.elements {
                point_of[self.mul(x, y).index()] = p;
            }
        }
        Ok(GSet {
            group: Arc::clone(self),
            reps,
            point_of,
        })
    }

    pub fn regular_action(self: &Arc<Self>) -> GSet {
        self.coset_action(&self.trivial_subgroup())
            .expect("trivial subgroup is a subgroup")
    }

    /// All commutators `[a, b]`, as a union of conjugacy classes.
    pub fn commutators(&self) -> BTreeSet<Elem> {
        let mut out = BTreeSet::new();
        let mut hit_class = vec![false; self.num_classes()];
        for class in self.conjugacy_classes() {
            let a = class.representative;
            for b in self.elements() {
                let c = self.comm(a, b);
                let j = self.class_of(c);
                if !hit_class[j] {
                    hit_class[j] = true;
                    out.extend(self.conjugacy_classes()[j].members.iter().copied());
                }
            }
        }
        out
    }

    /// `{ c_1 ... c_g : each c_j a commutator }`; `{e}` for `g = 0`.
    ///
    /// Since `[e, e] = e` this is also the set of products of at most `g`
    /// commutators.
    pub fn commutator_product_set(&self, g: usize) -> BTreeSet<Elem> {
        let mut current = BTreeSet::from([Elem::IDENTITY]);
        if g == 0 {
            return current;
        }
        let comms = self.commutators();
        for _ in 0..g {
            let next: BTreeSet<Elem> = current
                .iter()
                .flat_map(|&x| comms.iter().map(move |&c| (x, c)))
                .map(|(x, c)| self.mul(x, c))
                .collect();
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let comms: Vec<Elem> = self.commutators().into_iter().collect();
        self.subgroup(&comms)
    }

    /// Minimal number of generators of an abelian group, from the number of
    /// elements of order dividing `p` in each Sylow subgroup: that count is
    /// `p^r` with `r` the number of invariant factors divisible by `p`.
    pub fn abelian_rank(&self) -> Option<usize> {
        if !self.is_abelian() {
            return None;
        }
        let mut rank = 0;
        for p in prime_factors(self.order() as u64) {
            let torsion = self
                .elements()
                .filter(|&x| self.elem_order(x) as u64 <= p && (p % self.elem_order(x) as u64) == 0)
                .count() as u64;
            let mut r = 0;
            let mut t = torsion;
            while t > 1 {
                t /= p;
                r += 1;
            }
            rank = rank.max(r);
        }
        Some(rank)
    }

    /// Minimal number of generators of an abelian group by greedy basis
    /// construction in each Sylow subgroup: repeatedly adjoin an element of
    /// largest order modulo what has been generated so far.
    pub fn abelian_rank_greedy(&self) -> Option<usize> {
        if !self.is_abelian() {
            return None;
        }
        let mut rank = 0;
        for p in prime_factors(self.order() as u64) {
            let sylow: Vec<Elem> = self
                .elements()
                .filter(|&x| is_power_of(self.elem_order(x) as u64, p))
                .collect();
            let mut gens: Vec<Elem> = Vec::new();
            let mut span = self.subgroup(&gens);
            let mut steps = 0;
            while span.order() < sylow.len() {
                let best = sylow
                    .iter()
                    .copied()
                    .max_by_key(|&x| (self.order_modulo(x, &span), std::cmp::Reverse(x)))
                    .expect("nonempty");
                gens.push(best);
                span = self.subgroup(&gens);
                steps += 1;
            }
            rank = rank.max(steps);
        }
        Some(rank)
    }

    /// Least `k >= 1` with `x^k` in `h`.
    pub fn order_modulo(&self, x: Elem, h: &Subgroup) -> usize {
        let mut y = x;
        let mut k = 1;
        while !h.contains(y) {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    generators: Vec<Elem>,
    elements: Vec<Elem>,
    mask: Vec<u64>,
    is_cyclic: bool,
    is_central: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic
    }

    pub fn is_central(&self) -> bool {
        self.is_central
    }

    pub(crate) fn mask(&self) -> &[u64] {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        let i = x.index();
        i / 64 < self.mask.len() && self.mask[i / 64] & (1 << (i % 64)) != 0
    }
}

/// A transitive G-set realized as left cosets of a subgroup.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    reps: Vec<Elem>,
    point_of: Vec<u32>,
}

impl GSet {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coset representative of each point; point `i` is `reps[i] H`.
    pub fn representatives(&self) -> &[Elem] {
        &self.reps
    }

    /// The point containing group element `x` (i.e. the coset `xH`).
    pub fn point_of(&self, x: Elem) -> usize {
        self.point_of[x.index()] as usize
    }

    pub fn act(&self, g: Elem, point: usize) -> usize {
        self.point_of(self.group.mul(g, self.reps[point]))
    }

    pub fn fixed_points(&self, g: Elem) -> usize {
        (0..self.len()).filter(|&p| self.act(g, p) == p).count()
    }

    /// The permutation of the points induced by `g`.
    pub fn permutation(&self, g: Elem) -> Vec<usize> {
        (0..self.len()).map(|p| self.act(g, p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm::parse_generators;

    fn group(gens: &[&str]) -> Arc<FiniteGroup> {
        FiniteGroup::generate(&parse_generators(gens).unwrap()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(&["(1 2)"]).order(), 2);
        assert_eq!(group(&["(1 2)", "(1 2 3)"]).order(), 6);
        assert_eq!(group(&["(1 2 3 4)", "(1 3)"]).order(), 8);
    }

    #[test]
    fn enumeration_errors() {
        assert_eq!(FiniteGroup::generate(&[]).unwrap_err(), Error::NoGenerators);
        let a: Perm = "(1 2)".parse().unwrap();
        let b: Perm = "(1 2 3)".parse().unwrap();
        assert!(matches!(
            FiniteGroup::generate(&[a, b]),
            Err(Error::DegreeMismatch { .. })
        ));
        let s6 = parse_generators(&["(1 2)", "(1 2 3 4 5 6)"]).unwrap();
        assert_eq!(
            FiniteGroup::generate_with_limit(&s6, 100).unwrap_err(),
            Error::OrderLimitExceeded(100)
        );
    }

    #[test]
    fn breadth_first_order_is_deterministic() {
        let g = group(&["(1 2)", "(1 2 3)"]);
        assert_eq!(g.perm(Elem::IDENTITY).to_string(), "()");
        assert_eq!(g.perm(Elem::from_index(1)).to_string(), "(1 2)");
        assert_eq!(g.perm(Elem::from_index(2)).to_string(), "(1 2 3)");
    }

    #[test]
    fn class_structure() {
        let z4 = catalog::cyclic(4);
        assert!(z4.conjugacy_classes().iter().all(|c| c.size() == 1));
        assert_eq!(z4.num_classes(), 4);

        let s3 = group(&["(1 2)", "(1 2 3)"]);
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(s3.conjugacy_classes()[0].representative, Elem::IDENTITY);
    }

    #[test]
    fn quaternion_classes_by_brute_force() {
        let q8 = catalog::quaternion();
        // brute-force conjugation scan, independent of the generator BFS
        let mut classes: BTreeSet<Vec<Elem>> = BTreeSet::new();
        for a in q8.elements() {
            let c: BTreeSet<Elem> = q8.elements().map(|x| q8.conj(a, x)).collect();
            classes.insert(c.into_iter().collect());
        }
        assert_eq!(classes.len(), 5);
        assert_eq!(q8.num_classes(), 5);
    }

    #[test]
    fn cyclic_subgroup_orders() {
        let orders = |g: &FiniteGroup| -> Vec<usize> {
            let mut o: Vec<usize> = g
                .cyclic_subgroups_up_to_conjugacy()
                .iter()
                .map(|h| h.order())
                .collect();
            o.sort();
            o
        };
        assert_eq!(orders(&catalog::cyclic(6)), vec![1, 2, 3, 6]);
        assert_eq!(orders(&catalog::symmetric(3)), vec![1, 2, 3]);
        assert_eq!(orders(&catalog::alternating(4)), vec![1, 2, 3]);
        assert!(catalog::cyclic(6)
            .cyclic_subgroups_up_to_conjugacy()
            .iter()
            .all(|h| h.is_cyclic()));
    }

    #[test]
    fn coset_actions() {
        let s3 = group(&["(1 2)", "(1 2 3)"]);
        let whole = s3.coset_action(&s3.whole()).unwrap();
        assert_eq!(whole.len(), 1);
        let reg = s3.regular_action();
        assert_eq!(reg.len(), 6);
        assert_eq!(reg.fixed_points(Elem::IDENTITY), 6);
        assert!(s3.elements().skip(1).all(|g| reg.fixed_points(g) == 0));
        let t = s3.elem(&"(1 2)".parse::<Perm>().unwrap().extended(3)).unwrap();
        let natural = s3.coset_action(&s3.subgroup(&[t])).unwrap();
        assert_eq!(natural.len(), 3);
        assert_eq!(natural.fixed_points(t), 1);
    }

    #[test]
    fn coset_action_rejects_foreign_subgroup() {
        let s3 = group(&["(1 2)", "(1 2 3)"]);
        let z8 = catalog::cyclic(8);
        let h = z8.subgroup(&[Elem::from_index(7)]);
        assert!(matches!(s3.coset_action(&h), Err(Error::NotASubgroup(_))));
        assert!(s3
            .subgroup_from_elements(&[Elem::IDENTITY, Elem::from_index(2)])
            .is_err());
    }

    #[test]
    fn commutator_products() {
        let z6 = catalog::cyclic(6);
        for g in 0..4 {
            assert_eq!(z6.commutator_product_set(g), BTreeSet::from([Elem::IDENTITY]));
        }
        let s3 = catalog::symmetric(3);
        // brute force over all pairs
        let brute: BTreeSet<Elem> = s3
            .elements()
            .flat_map(|a| s3.elements().map(move |b| (a, b)))
            .map(|(a, b)| s3.comm(a, b))
            .collect();
        assert_eq!(brute.len(), 3);
        assert_eq!(s3.commutator_product_set(1), brute);
        let derived = s3.derived_subgroup();
        assert_eq!(derived.order(), 3);
    }

    #[test]
    fn commutator_sets_grow_into_derived_subgroup() {
        for g in [catalog::symmetric(4), catalog::alternating(4), catalog::quaternion()] {
            let derived = g.derived_subgroup();
            let mut prev = g.commutator_product_set(0);
            for k in 1..=4 {
                let cur = g.commutator_product_set(k);
                assert!(prev.is_subset(&cur));
                assert!(cur.iter().all(|&x| derived.contains(x)));
                prev = cur;
            }
            assert_eq!(prev.len(), derived.order());
        }
    }

    #[test]
    fn abelian_rank_two_ways() {
        for (g, r) in [
            (catalog::cyclic(12), 1),
            (catalog::elementary_abelian(2, 3), 3),
            (catalog::direct_product(&[catalog::cyclic(2), catalog::cyclic(4), catalog::cyclic(6)]), 3),
            (catalog::direct_product(&[catalog::cyclic(3), catalog::cyclic(9)]), 2),
            (catalog::direct_product(&[catalog::cyclic(2), catalog::cyclic(3)]), 1),
        ] {
            assert_eq!(g.abelian_rank(), Some(r));
            assert_eq!(g.abelian_rank_greedy(), Some(r));
        }
        assert_eq!(catalog::symmetric(3).abelian_rank(), None);
    }

    #[test]
    fn all_subgroups_of_small_groups() {
        assert_eq!(catalog::symmetric(3).all_subgroups(100).unwrap().len(), 6);
        assert_eq!(catalog::symmetric(4).all_subgroups(100).unwrap().len(), 30);
        assert_eq!(catalog::elementary_abelian(2, 3).all_subgroups(100).unwrap().len(), 16);
    }
}
