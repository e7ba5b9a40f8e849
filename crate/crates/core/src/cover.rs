//! Branching data of a Galois cover and its numerical invariants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GSet, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Closed { genus: usize },
    Disk,
}

/// Monodromy of a cover of a closed surface or a disk, punctured at the
/// branch points: images `(a_i, b_i)` of the handle generators and `l_i`
/// of the loops around the punctures.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    base: Base,
    group: Arc<FiniteGroup>,
    hyperbolic: Vec<(Elem, Elem)>,
    parabolic: Vec<Elem>,
}

pub struct BranchFiber {
    pub index: usize,
    pub stabilizer: Subgroup,
    pub ramification_order: usize,
    pub fiber: GSet,
}

impl CoverSpec {
    pub fn new(
        base: Base,
        group: Arc<FiniteGroup>,
        hyperbolic: Vec<(Elem, Elem)>,
        parabolic: Vec<Elem>,
    ) -> Result<CoverSpec> {
        let genus = match base {
            Base::Closed { genus } => genus,
            Base::Disk => 0,
        };
        if hyperbolic.len() != genus {
            return Err(Error::HyperbolicCountMismatch {
                genus,
                found: hyperbolic.len(),
            });
        }
        let n = group.order();
        if hyperbolic
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(parabolic.iter().copied())
            .any(|x| x.index() >= n)
        {
            return Err(Error::NotASubgroup("image outside the group".into()));
        }
        Ok(CoverSpec {
            base,
            group,
            hyperbolic,
            parabolic,
        })
    }

    /// Closed base whose genus is the number of hyperbolic pairs.
    pub fn closed(group: Arc<FiniteGroup>, hyperbolic: Vec<(Elem, Elem)>, parabolic: Vec<Elem>) -> CoverSpec {
        let genus = hyperbolic.len();
        CoverSpec::new(Base::Closed { genus }, group, hyperbolic, parabolic).expect("genus matches by construction")
    }

    pub fn disk(group: Arc<FiniteGroup>, parabolic: Vec<Elem>) -> CoverSpec {
        CoverSpec::new(Base::Disk, group, Vec::new(), parabolic).expect("disk has no hyperbolic images")
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.base, Base::Closed { .. })
    }

    pub fn base_genus(&self) -> usize {
        self.hyperbolic.len()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn hyperbolic(&self) -> &[(Elem, Elem)] {
        &self.hyperbolic
    }

    pub fn parabolic(&self) -> &[Elem] {
        &self.parabolic
    }

    pub fn num_branch_points(&self) -> usize {
        self.parabolic.len()
    }

    /// Order of the deck group.
    pub fn degree(&self) -> usize {
        self.group.order()
    }

    /// All images conjugated by `x` (a change of base point).
    pub fn conjugated(&self, x: Elem) -> CoverSpec {
        let g = &self.group;
        CoverSpec {
            base: self.base,
            group: Arc::clone(g),
            hyperbolic: self.hyperbolic.iter().map(|&(a, b)| (g.conj(a, x), g.conj(b, x))).collect(),
            parabolic: self.parabolic.iter().map(|&l| g.conj(l, x)).collect(),
        }
    }

    pub fn commutator_product(&self) -> Elem {
        let g = &self.group;
        g.product(self.hyperbolic.iter().map(|&(a, b)| g.comm(a, b)))
    }

    pub fn parabolic_product(&self) -> Elem {
        self.group.product(self.parabolic.iter().copied())
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        if let Some(i) = self.parabolic.iter().position(|&l| l == g.identity()) {
            return Err(Error::TrivialBranch(i + 1));
        }
        let m = self.parabolic.len();
        match self.base {
            Base::Closed { genus: 0 } if m < 2 => {
                return Err(Error::DegenerateBase(format!(
                    "a sphere with {m} branch point(s) has no nontrivial connected covers"
                )))
            }
            Base::Disk if m == 0 => {
                return Err(Error::DegenerateBase("a disk without punctures".into()));
            }
            _ => {}
        }
        if self.is_closed() {
            let lhs = self.commutator_product();
            let rhs = self.parabolic_product();
            if lhs != rhs {
                return Err(Error::RelationViolated {
                    lhs: g.perm(lhs).to_string(),
                    rhs: g.perm(rhs).to_string(),
                });
            }
        }
        let images: Vec<Elem> = self
            .hyperbolic
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.parabolic.iter().copied())
            .collect();
        let image = g.subgroup(&images);
        if image.order() != g.order() {
            return Err(Error::NotGenerating {
                image_order: image.order(),
                group_order: g.order(),
            });
        }
        Ok(())
    }

    /// The fiber over each branch point as the coset space `G/<l_i>`.
    pub fn branch_fibers(&self) -> Vec<BranchFiber> {
        self.parabolic
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let stabilizer = self.group.subgroup(&[l]);
                let fiber = self
                    .group
                    .coset_action(&stabilizer)
                    .expect("cyclic subgroup of the same group");
                BranchFiber {
                    index: i + 1,
                    ramification_order: stabilizer.order(),
                    stabilizer,
                    fiber,
                }
            })
            .collect()
    }

    /// `k = sum_i n / n_i`, the number of points over the branch locus.
    pub fn branch_point_count(&self) -> usize {
        let n = self.degree();
        self.parabolic.iter().map(|&l| n / self.group.elem_order(l)).sum()
    }

    fn closed_genus(&self) -> Result<usize> {
        match self.base {
            Base::Closed { genus } => Ok(genus),
            Base::Disk => Err(Error::NotClosed),
        }
    }

    /// Genus of the closed cover by Riemann–Hurwitz.
    pub fn cover_genus(&self) -> Result<usize> {
        let g = self.closed_genus()? as i64;
        let n = self.degree() as i64;
        let ramification: i64 = self
            .parabolic
            .iter()
            .map(|&l| {
                let ni = self.group.elem_order(l) as i64;
                (n / ni) * (ni - 1)
            })
            .sum();
        let euler = n * (2 - 2 * g) - ramification;
        if euler % 2 != 0 || euler > 2 {
            return Err(Error::NonIntegerGenus(euler));
        }
        Ok(((2 - euler) / 2) as usize)
    }

    /// Free rank of the fundamental group of the punctured cover.
    pub fn punctured_rank(&self) -> Result<usize> {
        let n = self.degree() as i64;
        let m = self.parabolic.len() as i64;
        if m == 0 {
            return Err(Error::NoPunctures);
        }
        let base_rank = match self.base {
            Base::Closed { genus } => 2 * genus as i64 + m - 1,
            Base::Disk => m,
        };
        Ok((n * (base_rank - 1) + 1) as usize)
    }

    /// `n(2g+m-2) + 2 - k`, checked against twice the Riemann–Hurwitz genus.
    pub fn closed_h1_dim(&self) -> Result<usize> {
        let g = self.closed_genus()? as i64;
        let n = self.degree() as i64;
        let m = self.parabolic.len() as i64;
        let formula = n * (2 * g + m - 2) + 2 - self.branch_point_count() as i64;
        let riemann_hurwitz = 2 * self.cover_genus()? as i64;
        if formula != riemann_hurwitz {
            return Err(Error::InconsistentCounts {
                formula,
                riemann_hurwitz,
            });
        }
        Ok(formula as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn z(n: usize, k: usize) -> (Arc<FiniteGroup>, Elem) {
        let g = catalog::cyclic(n);
        let t = g.generators()[0];
        let x = g.pow(t, k as i64);
        (g, x)
    }

    fn z11(ls: &[i64]) -> CoverSpec {
        let g = catalog::cyclic(11);
        let t = g.generators()[0];
        let par = ls.iter().map(|&k| g.pow(t, k)).collect();
        CoverSpec::closed(Arc::clone(&g), vec![(g.identity(), g.identity())], par)
    }

    #[test]
    fn degree_eleven_torus() {
        let spec = z11(&[2, 4, 5]);
        spec.validate().unwrap();
        assert_eq!(spec.cover_genus().unwrap(), 16);
        assert_eq!(spec.closed_h1_dim().unwrap(), 32);
        assert_eq!(spec.punctured_rank().unwrap(), 34);
        assert!(spec.branch_fibers().iter().all(|f| f.fiber.len() == 1 && f.ramification_order == 11));
        assert!(matches!(z11(&[2, 4, 6]).validate(), Err(Error::RelationViolated { .. })));
    }

    #[test]
    fn errors() {
        let (g, t) = z(2, 1);
        let e = g.identity();
        let spec = CoverSpec::closed(Arc::clone(&g), vec![], vec![t]);
        assert!(matches!(spec.validate(), Err(Error::DegenerateBase(_))));
        let spec = CoverSpec::closed(Arc::clone(&g), vec![(t, e)], vec![e]);
        assert_eq!(spec.validate(), Err(Error::TrivialBranch(1)));
        let spec = CoverSpec::closed(Arc::clone(&g), vec![(e, e)], vec![]);
        assert!(matches!(spec.validate(), Err(Error::NotGenerating { .. })));
        assert_eq!(CoverSpec::disk(Arc::clone(&g), vec![t]).cover_genus(), Err(Error::NotClosed));
        assert!(matches!(
            CoverSpec::new(Base::Closed { genus: 2 }, g, vec![], vec![]),
            Err(Error::HyperbolicCountMismatch { genus: 2, found: 0 })
        ));
    }

    #[test]
    fn genus_examples() {
        let (g, t) = z(2, 1);
        let sphere = CoverSpec::closed(Arc::clone(&g), vec![], vec![t; 6]);
        sphere.validate().unwrap();
        assert_eq!(sphere.cover_genus().unwrap(), 2);
        let torus = CoverSpec::closed(Arc::clone(&g), vec![(g.identity(), g.identity())], vec![t, t]);
        assert_eq!(torus.closed_h1_dim().unwrap(), 4);
        assert_eq!(torus.punctured_rank().unwrap(), 5);

        let (g, t) = z(3, 1);
        let e = g.identity();
        let unramified = CoverSpec::closed(Arc::clone(&g), vec![(t, e), (e, e)], vec![]);
        unramified.validate().unwrap();
        assert_eq!(unramified.cover_genus().unwrap(), 3 + 1);
        assert_eq!(unramified.closed_h1_dim().unwrap(), 8);
    }

    #[test]
    fn fibers_of_s3() {
        let g = catalog::symmetric(3);
        let t = g.generators()[0];
        let r = g.generators()[1];
        let spec = CoverSpec::disk(Arc::clone(&g), vec![t, r]);
        spec.validate().unwrap();
        let fibers = spec.branch_fibers();
        assert_eq!(fibers[0].fiber.len(), 3);
        assert_eq!(fibers[0].ramification_order, 2);
        assert_eq!(fibers[1].fiber.len(), 2);
        assert_eq!(spec.branch_point_count(), 5);
        assert_eq!(spec.punctured_rank().unwrap(), 7);
    }

    #[test]
    fn validation_is_conjugation_invariant() {
        let g = catalog::symmetric(3);
        let t = g.generators()[0];
        let r = g.generators()[1];
        let good = CoverSpec::closed(Arc::clone(&g), vec![], vec![t, t, r, g.inv(r)]);
        let bad = CoverSpec::closed(Arc::clone(&g), vec![], vec![t, r, r]);
        for x in g.elements() {
            assert!(good.conjugated(x).validate().is_ok());
            assert!(bad.conjugated(x).validate().is_err());
        }
    }
}
