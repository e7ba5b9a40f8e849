//! Standard small permutation groups.

use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::perm::Perm;

fn build(degree: usize, gens: Vec<Vec<Vec<usize>>>) -> Arc<FiniteGroup> {
    let degree = degree.max(1);
    let mut perms: Vec<Perm> = gens
        .iter()
        .map(|cycles| Perm::from_cycles(degree, cycles).expect("catalog cycles are valid"))
        .collect();
    if perms.is_empty() {
        perms.push(Perm::identity(degree));
    }
    FiniteGroup::generate(&perms).expect("catalog groups are small")
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    if n <= 1 {
        return build(1, vec![]);
    }
    build(n, vec![vec![(1..=n).collect()]])
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    match n {
        0 | 1 => cyclic(2),
        2 => build(4, vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]),
        _ => {
            let reflection: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
            build(n, vec![vec![(1..=n).collect()], reflection])
        }
    }
}

pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    match n {
        0 | 1 => build(1, vec![]),
        2 => build(2, vec![vec![vec![1, 2]]]),
        _ => build(n, vec![vec![vec![1, 2]], vec![(1..=n).collect()]]),
    }
}

pub fn alternating(n: usize) -> Arc<FiniteGroup> {
    if n < 3 {
        return build(1, vec![]);
    }
    build(n, (1..=n - 2).map(|i| vec![vec![i, i + 1, i + 2]]).collect())
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion() -> Arc<FiniteGroup> {
    build(
        8,
        vec![
            vec![vec![1, 2, 4, 7], vec![3, 6, 8, 5]],
            vec![vec![1, 3, 4, 8], vec![2, 5, 7, 6]],
        ],
    )
}

/// `(Z/p)^k`.
pub fn elementary_abelian(p: usize, k: usize) -> Arc<FiniteGroup> {
    direct_product(&vec![cyclic(p); k])
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[Arc<FiniteGroup>]) -> Arc<FiniteGroup> {
    let degree: usize = factors.iter().map(|g| g.degree()).sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in factors {
        for p in g.generator_perms() {
            let mut images: Vec<usize> = (0..degree).collect();
            for i in 0..g.degree() {
                images[offset + i] = offset + p.apply(i);
            }
            gens.push(Perm::from_images(images).expect("valid"));
        }
        offset += g.degree();
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree));
    }
    FiniteGroup::generate(&gens).expect("catalog groups are small")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(cyclic(11).order(), 11);
        assert_eq!(dihedral(2).order(), 4);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(elementary_abelian(2, 6).order(), 64);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        assert!(!q.is_abelian());
        assert_eq!(q.elements().filter(|&x| q.elem_order(x) == 2).count(), 1);
    }
}
