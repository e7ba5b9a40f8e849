#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use cw_core::catalog::{alternating, cyclic, dihedral, direct_product, elementary_abelian, quaternion, symmetric};
use cw_core::perm::parse_generators;
use cw_core::{extend_to_closed_surface, CoverSpec, Elem, FiniteGroup, Perm};

pub fn from_cycles(gens: &[&str]) -> Arc<FiniteGroup> {
    FiniteGroup::generate(&parse_generators(gens).unwrap()).unwrap()
}

/// Regular representation of `<a, b | a^n, b^m = a^s, b a b^-1 = a^r>`,
/// elements `a^i b^j` numbered `i + n j`.
pub fn metacyclic(n: usize, m: usize, s: usize, r: usize) -> Arc<FiniteGroup> {
    let pow_r = |j: usize| (0..j).fold(1usize, |acc, _| acc * r % n);
    assert_eq!(pow_r(m) % n, 1 % n, "r^m = 1 mod n");
    assert_eq!(r * s % n, s % n, "b fixes b^m");
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| {
        let wrap = if j + l >= m { s } else { 0 };
        ((i + pow_r(j) * k + wrap) % n, (j + l) % m)
    };
    let index = |(i, j): (usize, usize)| i + n * j;
    // right multiplication by a generator permutes the elements
    let right = |g: (usize, usize)| {
        let images: Vec<usize> = (0..n * m).map(|x| index(mul((x % n, x / n), g))).collect();
        Perm::from_images(images).unwrap()
    };
    FiniteGroup::generate(&[right((1 % n, 0)), right((0, 1 % m))]).unwrap()
}

fn product(factors: &[Arc<FiniteGroup>]) -> Arc<FiniteGroup> {
    direct_product(factors)
}

/// One group of every isomorphism type of order at most 24.
pub fn all_groups_up_to_24() -> Vec<(String, Arc<FiniteGroup>)> {
    let c = cyclic;
    let mut out: Vec<(String, Arc<FiniteGroup>)> = Vec::new();
    for n in 1..=24 {
        out.push((format!("C{n}"), c(n)));
    }
    let mut add = |name: &str, order: usize, g: Arc<FiniteGroup>| {
        assert_eq!(g.order(), order, "{name}");
        out.push((name.to_string(), g))
    };
    add("C2xC2", 4, elementary_abelian(2, 2));
    add("S3", 6, symmetric(3));
    add("C4xC2", 8, product(&[c(4), c(2)]));
    add("C2^3", 8, elementary_abelian(2, 3));
    add("D4", 8, dihedral(4));
    add("Q8", 8, quaternion());
    add("C3xC3", 9, elementary_abelian(3, 2));
    add("D5", 10, dihedral(5));
    add("C6xC2", 12, product(&[c(6), c(2)]));
    add("D6", 12, dihedral(6));
    add("A4", 12, alternating(4));
    add("Dic3", 12, metacyclic(6, 2, 3, 5));
    add("D7", 14, dihedral(7));
    add("C8xC2", 16, product(&[c(8), c(2)]));
    add("C4xC4", 16, product(&[c(4), c(4)]));
    add("C4xC2xC2", 16, product(&[c(4), c(2), c(2)]));
    add("C2^4", 16, elementary_abelian(2, 4));
    add("D8", 16, dihedral(8));
    add("Q16", 16, metacyclic(8, 2, 4, 7));
    add("SD16", 16, metacyclic(8, 2, 0, 3));
    add("M16", 16, metacyclic(8, 2, 0, 5));
    add("C4:C4", 16, metacyclic(4, 4, 0, 3));
    add("C2^2:C4", 16, from_cycles(&["(5 6)", "(7 8)", "(1 2 3 4)(5 7)(6 8)"]));
    add("D4xC2", 16, product(&[dihedral(4), c(2)]));
    add("Q8xC2", 16, product(&[quaternion(), c(2)]));
    // Pauli group on the vectors i^k e_b, point 2k + b + 1
    add("C4oD4", 16, from_cycles(&["(1 2)(3 4)(5 6)(7 8)", "(2 6)(4 8)", "(1 3 5 7)(2 4 6 8)"]));
    add("C6xC3", 18, product(&[c(6), c(3)]));
    add("D9", 18, dihedral(9));
    add("C3xS3", 18, product(&[c(3), symmetric(3)]));
    add("C3^2:C2", 18, from_cycles(&["(1 2 3)", "(4 5 6)", "(1 2)(4 5)"]));
    add("C10xC2", 20, product(&[c(10), c(2)]));
    add("D10", 20, dihedral(10));
    add("Dic5", 20, metacyclic(10, 2, 5, 9));
    add("F20", 20, metacyclic(5, 4, 0, 2));
    add("C7:C3", 21, metacyclic(7, 3, 0, 2));
    add("D11", 22, dihedral(11));
    add("C12xC2", 24, product(&[c(12), c(2)]));
    add("C6xC2xC2", 24, product(&[c(6), c(2), c(2)]));
    add("C3:C8", 24, metacyclic(3, 8, 0, 2));
    add("SL(2,3)", 24, from_cycles(&["(1 4 7)(2 8 5)", "(1 6 2 3)(4 7 8 5)"]));
    add("Dic6", 24, metacyclic(12, 2, 6, 11));
    add("C4xS3", 24, product(&[c(4), symmetric(3)]));
    add("D12", 24, dihedral(12));
    add("C2xDic3", 24, product(&[c(2), metacyclic(6, 2, 3, 5)]));
    add("C3:D4", 24, from_cycles(&["(1 2 3)", "(1 2)(4 5 6 7)", "(4 6)"]));
    add("C3xD4", 24, product(&[c(3), dihedral(4)]));
    add("C3xQ8", 24, product(&[c(3), quaternion()]));
    add("S4", 24, symmetric(4));
    add("C2xA4", 24, product(&[c(2), alternating(4)]));
    add("C2^2xS3", 24, product(&[c(2), c(2), symmetric(3)]));
    out
}

/// Groups used for the cover grid.
pub fn grid_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out: Vec<(String, Arc<FiniteGroup>)> = (2..=12).map(|n| (format!("Z/{n}"), cyclic(n))).collect();
    out.push(("S3".into(), symmetric(3)));
    out.push(("D4".into(), dihedral(4)));
    out.push(("Q8".into(), quaternion()));
    out.push(("A4".into(), alternating(4)));
    out.push(("S4".into(), symmetric(4)));
    out
}

pub struct GridSpec {
    pub name: String,
    pub spec: CoverSpec,
}

/// Deterministic search for branching data `(g, m)` over `group`: the
/// first `m` parabolic images come from a fixed stride through the
/// non-identity elements, and handle images are completed by search.
pub fn find_spec(group: &Arc<FiniteGroup>, g: usize, m: usize, seed: usize) -> Option<CoverSpec> {
    let nonid: Vec<Elem> = group.elements().skip(1).collect();
    if nonid.is_empty() {
        return None;
    }
    let strides = [1usize, 3, 7, 11];
    for attempt in 0..400 {
        let mut ls: Vec<Elem> = (0..m)
            .map(|i| nonid[(seed + attempt * strides[i % 4] + i * i * 5 + i) % nonid.len()])
            .collect();
        if g == 0 {
            if m < 2 {
                return None;
            }
            let head = group.product(ls[..m - 1].iter().copied());
            let last = group.inv(head);
            if last == group.identity() {
                continue;
            }
            ls[m - 1] = last;
            let spec = CoverSpec::closed(Arc::clone(group), vec![], ls);
            if spec.validate().is_ok() {
                return Some(spec);
            }
            continue;
        }
        if let Some(pairs) = extend_to_closed_surface(group, &ls, g) {
            let spec = CoverSpec::closed(Arc::clone(group), pairs, ls);
            spec.validate().expect("extension yields a valid spec");
            return Some(spec);
        }
        if m == 0 {
            return None;
        }
    }
    None
}

/// At least 25 closed specs across the grid groups with base genus <= 2
/// and at most 4 branch points.
pub fn closed_grid() -> Vec<GridSpec> {
    let configs = [(0, 3), (1, 2), (1, 0), (2, 1), (0, 4), (1, 3), (2, 0), (1, 4), (2, 2), (1, 1)];
    let mut out = Vec::new();
    for (gi, (name, group)) in grid_groups().into_iter().enumerate() {
        let per_group = if group.order() >= 24 { 3 } else { 4 };
        let mut found = 0;
        for k in 0..configs.len() {
            let (g, m) = configs[(k + gi) % configs.len()];
            if let Some(spec) = find_spec(&group, g, m, gi * 17 + k) {
                let orders: Vec<usize> = spec.parabolic().iter().map(|&l| group.elem_order(l)).collect();
                out.push(GridSpec {
                    name: format!("{name} g={g} m={m} orders={orders:?}"),
                    spec,
                });
                found += 1;
                if found == per_group {
                    break;
                }
            }
        }
    }
    out
}

/// Subgroup generated by `gens`, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut set: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn is_cyclic_set(h: &HashSet<Perm>) -> bool {
    h.iter().any(|x| {
        let mut y = x.clone();
        let mut k = 1;
        while !y.is_identity() {
            y = y.then(x);
            k += 1;
        }
        k == h.len()
    })
}

/// Brute-force list of all subgroups, as sets of permutations.
pub fn brute_force_subgroups(group: &FiniteGroup) -> Vec<HashSet<Perm>> {
    let elements: Vec<Perm> = group.elements().map(|x| group.perm(x).clone()).collect();
    let close = |gens: &[Perm]| closure(group.degree(), gens);
    let mut seen: Vec<HashSet<Perm>> = vec![close(&[])];
    let mut frontier: Vec<Vec<Perm>> = vec![vec![]];
    while let Some(gens) = frontier.pop() {
        let current = close(&gens);
        for x in &elements {
            if current.contains(x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x.clone());
            let next = close(&next_gens);
            if !seen.contains(&next) {
                seen.push(next);
                frontier.push(next_gens);
            }
        }
    }
    seen
}

/// `|{x : x^-1 g x in H}| / |H|`, the number of cosets `xH` fixed by `g`.
pub fn brute_force_fixed_cosets(group: &FiniteGroup, h: &HashSet<Perm>, g: &Perm) -> i64 {
    let hits = group
        .elements()
        .filter(|&x| {
            let x = group.perm(x);
            h.contains(&x.inverse().then(g).then(x))
        })
        .count();
    (hits / h.len()) as i64
}
