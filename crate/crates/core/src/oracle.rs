//! Brute-force homology of the cover as a finite cell complex.
//!
//! The base is a one-vertex complex: a loop per generator of the
//! presentation `<a_1, b_1, ..., a_g, b_g, l_1, ..., l_m>` plus, for a closed
//! base, the relator 2-cell. Its cover has vertices `G`, edges `(x, s)`
//! running from `x` to `x.phi(s)`, and `G` acts by left translation.
//! Characters on `H_1` come from exact rational elimination.

use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character::ClassFunction;
use crate::cover::CoverSpec;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GSet};

#[derive(Clone, Debug)]
enum Face {
    /// The relator traced from vertex `x`.
    Relator(Elem),
    /// The disk filling the puncture `i` at the coset with index `point`.
    Disk { branch: usize, point: usize },
}

#[derive(Clone, Debug)]
pub struct CellComplex {
    group: Arc<FiniteGroup>,
    letters: Vec<Elem>,
    fibers: Vec<GSet>,
    faces: Vec<Face>,
    /// Sparse columns of the second boundary map.
    boundary2: Vec<Vec<(usize, i64)>>,
}

impl CellComplex {
    pub fn num_vertices(&self) -> usize {
        self.group.order()
    }

    pub fn num_edges(&self) -> usize {
        self.letters.len() * self.group.order()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    fn edge(&self, x: Elem, letter: usize) -> usize {
        letter * self.group.order() + x.index()
    }

    /// Source and target vertex of an edge.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let n = self.group.order();
        let (letter, x) = (edge / n, Elem::from_index(edge % n));
        (x.index(), self.group.mul(x, self.letters[letter]).index())
    }

    pub fn act_vertex(&self, g: Elem, v: usize) -> usize {
        self.group.mul(g, Elem::from_index(v)).index()
    }

    pub fn act_edge(&self, g: Elem, e: usize) -> usize {
        let n = self.group.order();
        (e / n) * n + self.act_vertex(g, e % n)
    }

    pub fn act_face(&self, g: Elem, f: usize) -> usize {
        match self.faces[f] {
            Face::Relator(x) => self.face_of_relator(self.group.mul(g, x)),
            Face::Disk { branch, point } => {
                let target = self.fibers[branch].act(g, point);
                self.faces
                    .iter()
                    .position(|face| matches!(face, Face::Disk { branch: b, point: p } if *b == branch && *p == target))
                    .expect("fiber cells are complete")
            }
        }
    }

    fn face_of_relator(&self, x: Elem) -> usize {
        // relator cells, when present, come first and are indexed by element
        x.index()
    }

    /// Boundary of a face as a sparse list of (edge, coefficient).
    pub fn face_boundary(&self, f: usize) -> &[(usize, i64)] {
        &self.boundary2[f]
    }

    fn add_face(&mut self, face: Face, boundary: Vec<(usize, i64)>) {
        let mut merged: Vec<(usize, i64)> = Vec::new();
        let mut sorted = boundary;
        sorted.sort();
        for (e, c) in sorted {
            match merged.last_mut() {
                Some((last, acc)) if *last == e => *acc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        self.faces.push(face);
        self.boundary2.push(merged);
    }

    /// `d1 d2 = 0`.
    pub fn check_boundary_squared(&self) -> bool {
        self.boundary2.iter().all(|col| {
            let mut acc = vec![0i64; self.num_vertices()];
            for &(e, c) in col {
                let (s, t) = self.endpoints(e);
                acc[t] += c;
                acc[s] -= c;
            }
            acc.iter().all(|&v| v == 0)
        })
    }

    /// Both boundary maps commute with every generator's action.
    pub fn check_equivariance(&self) -> bool {
        self.group.generators().iter().all(|&g| {
            let edges_ok = (0..self.num_edges()).all(|e| {
                let (s, t) = self.endpoints(e);
                self.endpoints(self.act_edge(g, e)) == (self.act_vertex(g, s), self.act_vertex(g, t))
            });
            let faces_ok = (0..self.num_faces()).all(|f| {
                let mut moved: Vec<(usize, i64)> =
                    self.boundary2[f].iter().map(|&(e, c)| (self.act_edge(g, e), c)).collect();
                moved.sort();
                moved == self.boundary2[self.act_face(g, f)]
            });
            edges_ok && faces_ok
        })
    }

    fn boundary1_dense(&self) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![BigRational::zero(); self.num_edges()]; self.num_vertices()];
        for e in 0..self.num_edges() {
            let (s, t) = self.endpoints(e);
            m[t][e] += BigRational::one();
            m[s][e] -= BigRational::one();
        }
        m
    }

    fn boundary2_transposed_dense(&self) -> Vec<Vec<BigRational>> {
        self.boundary2
            .iter()
            .map(|col| {
                let mut row = vec![BigRational::zero(); self.num_edges()];
                for &(e, c) in col {
                    row[e] = BigRational::from_integer(c.into());
                }
                row
            })
            .collect()
    }

    /// Ranks of the two boundary maps.
    pub fn boundary_ranks(&self) -> (usize, usize) {
        (
            rref(&mut self.boundary1_dense()).len(),
            rref(&mut self.boundary2_transposed_dense()).len(),
        )
    }

    pub fn betti_numbers(&self) -> [usize; 3] {
        let (r1, r2) = self.boundary_ranks();
        [
            self.num_vertices() - r1,
            self.num_edges() - r1 - r2,
            self.num_faces() - r2,
        ]
    }

    /// Boundary matrices as `row col value` triplets, one matrix per block.
    pub fn sparse_dump(&self) -> String {
        let mut out = String::new();
        let d1: usize = 2 * (0..self.num_edges()).filter(|&e| {
            let (s, t) = self.endpoints(e);
            s != t
        }).count();
        let _ = writeln!(out, "boundary1 {} {} {}", self.num_vertices(), self.num_edges(), d1);
        for e in 0..self.num_edges() {
            let (s, t) = self.endpoints(e);
            if s != t {
                let _ = writeln!(out, "{s} {e} -1");
                let _ = writeln!(out, "{t} {e} 1");
            }
        }
        let nnz: usize = self.boundary2.iter().map(Vec::len).sum();
        let _ = writeln!(out, "boundary2 {} {} {}", self.num_edges(), self.num_faces(), nnz);
        for (f, col) in self.boundary2.iter().enumerate() {
            for &(e, c) in col {
                let _ = writeln!(out, "{e} {f} {c}");
            }
        }
        out
    }
}

/// Reduced row echelon form over the rationals; returns pivot columns.
fn rref(m: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

fn letters(spec: &CoverSpec) -> Vec<Elem> {
    spec.hyperbolic()
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .chain(spec.parabolic().iter().copied())
        .collect()
}

/// The cover of the punctured base. A closed base keeps its relator
/// 2-cell, so the complex is homotopy equivalent to the punctured cover
/// surface; a disk base gives a graph.
pub fn build_punctured_cover(spec: &CoverSpec) -> Result<CellComplex> {
    let group = Arc::clone(spec.group());
    let mut complex = CellComplex {
        group: Arc::clone(&group),
        letters: letters(spec),
        fibers: Vec::new(),
        faces: Vec::new(),
        boundary2: Vec::new(),
    };
    if spec.is_closed() {
        let g = spec.base_genus();
        let m = spec.num_branch_points();
        // a1 b1 a1^-1 b1^-1 ... then lm^-1 ... l1^-1
        let mut word: Vec<(usize, bool)> = Vec::new();
        for i in 0..g {
            word.extend([(2 * i, true), (2 * i + 1, true), (2 * i, false), (2 * i + 1, false)]);
        }
        word.extend((0..m).rev().map(|i| (2 * g + i, false)));
        for x in group.elements() {
            let mut cur = x;
            let mut boundary = Vec::with_capacity(word.len());
            for &(letter, positive) in &word {
                let image = complex.letters[letter];
                if positive {
                    boundary.push((complex.edge(cur, letter), 1));
                    cur = group.mul(cur, image);
                } else {
                    cur = group.mul(cur, group.inv(image));
                    boundary.push((complex.edge(cur, letter), -1));
                }
            }
            if cur != x {
                return Err(Error::RelationViolated {
                    lhs: group.perm(spec.commutator_product()).to_string(),
                    rhs: group.perm(spec.parabolic_product()).to_string(),
                });
            }
            complex.add_face(Face::Relator(x), boundary);
        }
    }
    Ok(complex)
}

/// Glues a disk into every lift of every puncture.
pub fn fill_cover(spec: &CoverSpec, complex: &CellComplex) -> Result<CellComplex> {
    if !spec.is_closed() {
        return Err(Error::NotClosed);
    }
    let mut filled = complex.clone();
    let group = Arc::clone(spec.group());
    let g = spec.base_genus();
    for fiber in spec.branch_fibers() {
        let branch = fiber.index - 1;
        let letter = 2 * g + branch;
        let l = spec.parabolic()[branch];
        for (point, &x) in fiber.fiber.representatives().iter().enumerate() {
            let mut cur = x;
            let mut boundary = Vec::with_capacity(fiber.ramification_order);
            for _ in 0..fiber.ramification_order {
                boundary.push((filled.edge(cur, letter), 1));
                cur = group.mul(cur, l);
            }
            filled.add_face(Face::Disk { branch, point }, boundary);
        }
        filled.fibers.push(fiber.fiber);
    }
    Ok(filled)
}

/// Character of `G` on `H_1(complex; Q)`, as trace on cycles minus trace
/// on boundaries.
pub fn h1_character(complex: &CellComplex) -> Result<ClassFunction> {
    let group = complex.group();
    let ne = complex.num_edges();

    let mut d1 = complex.boundary1_dense();
    let pivots1 = rref(&mut d1);
    let free: Vec<usize> = (0..ne).filter(|c| !pivots1.contains(c)).collect();
    // kernel vector for free column f: 1 at f, -R[r][f] at pivot r
    let cycles: Vec<Vec<(usize, BigRational)>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![(f, BigRational::one())];
            for (r, &pc) in pivots1.iter().enumerate() {
                if !d1[r][f].is_zero() {
                    v.push((pc, -d1[r][f].clone()));
                }
            }
            v
        })
        .collect();

    let mut d2t = complex.boundary2_transposed_dense();
    let pivots2 = rref(&mut d2t);

    let mut values = Vec::with_capacity(group.num_classes());
    for class in group.conjugacy_classes() {
        let g = class.representative;
        let perm: Vec<usize> = (0..ne).map(|e| complex.act_edge(g, e)).collect();
        let mut inverse = vec![0; ne];
        for (e, &t) in perm.iter().enumerate() {
            inverse[t] = e;
        }

        let mut trace_z = BigRational::zero();
        let mut is_free = vec![false; ne];
        for &f in &free {
            is_free[f] = true;
        }
        for (idx, v) in cycles.iter().enumerate() {
            // the image must still be a cycle
            let mut acc = vec![BigRational::zero(); complex.num_vertices()];
            for (e, c) in v {
                let (s, t) = complex.endpoints(perm[*e]);
                acc[t] += c;
                acc[s] -= c;
            }
            if acc.iter().any(|x| !x.is_zero()) {
                return Err(Error::NonInvariantSubspace("cycle space".into()));
            }
            let f = free[idx];
            for (e, c) in v {
                if perm[*e] == f {
                    trace_z += c;
                }
            }
        }

        let mut trace_b = BigRational::zero();
        for (r, row) in d2t.iter().enumerate() {
            // (P b)[e] = b[P^-1 e]
            let moved: Vec<&BigRational> = (0..ne).map(|e| &row[inverse[e]]).collect();
            trace_b += moved[pivots2[r]];
            let mut rebuilt = vec![BigRational::zero(); ne];
            for (s, &ps) in pivots2.iter().enumerate() {
                let coef = moved[ps];
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in rebuilt.iter_mut().zip(&d2t[s]) {
                    if !y.is_zero() {
                        *x += coef * y;
                    }
                }
            }
            if rebuilt.iter().zip(&moved).any(|(a, b)| a != *b) {
                return Err(Error::NonInvariantSubspace("boundary space".into()));
            }
        }

        let chi = trace_z - trace_b;
        if !chi.is_integer() {
            return Err(Error::NonInvariantSubspace(format!("non-integral trace {chi}")));
        }
        values.push(chi.to_integer().try_into().map_err(|_| Error::NonInvariantSubspace("trace overflow".into()))?);
    }
    Ok(ClassFunction::from_ints(Arc::clone(group), &values))
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub punctured: ClassFunction,
    pub closed: Option<ClassFunction>,
    pub punctured_betti: usize,
    pub closed_betti: Option<usize>,
}

/// Punctured and (for a closed base) filled characters with structural
/// checks on both complexes.
pub fn oracle_characters(spec: &CoverSpec) -> Result<OracleReport> {
    let punctured = build_punctured_cover(spec)?;
    check_complex(&punctured)?;
    let punctured_betti = punctured.betti_numbers()[1];
    let punctured_chi = h1_character(&punctured)?;
    let (closed, closed_betti) = if spec.is_closed() {
        let filled = fill_cover(spec, &punctured)?;
        check_complex(&filled)?;
        (Some(h1_character(&filled)?), Some(filled.betti_numbers()[1]))
    } else {
        (None, None)
    };
    Ok(OracleReport {
        punctured: punctured_chi,
        closed,
        punctured_betti,
        closed_betti,
    })
}

fn check_complex(c: &CellComplex) -> Result<()> {
    if !c.check_boundary_squared() {
        return Err(Error::OracleMismatch("boundary of a boundary is nonzero".into()));
    }
    if !c.check_equivariance() {
        return Err(Error::OracleMismatch("boundary maps are not equivariant".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn z2_torus() -> CoverSpec {
        let g = catalog::cyclic(2);
        let t = g.generators()[0];
        CoverSpec::closed(Arc::clone(&g), vec![(g.identity(), g.identity())], vec![t, t])
    }

    #[test]
    fn z2_torus_two_points() {
        let spec = z2_torus();
        let punctured = build_punctured_cover(&spec).unwrap();
        assert!(punctured.check_boundary_squared());
        assert!(punctured.check_equivariance());
        assert_eq!(punctured.betti_numbers()[1], 5);
        assert_eq!(h1_character(&punctured).unwrap().to_ints().unwrap(), vec![5, 1]);
        let filled = fill_cover(&spec, &punctured).unwrap();
        assert!(filled.check_boundary_squared());
        assert!(filled.check_equivariance());
        assert_eq!(filled.betti_numbers(), [1, 4, 1]);
        assert_eq!(h1_character(&filled).unwrap().to_ints().unwrap(), vec![4, 0]);
    }

    #[test]
    fn trivial_cover_of_punctured_torus() {
        let g = catalog::cyclic(1);
        let e = g.identity();
        let spec = CoverSpec::closed(Arc::clone(&g), vec![(e, e)], vec![e]);
        let c = build_punctured_cover(&spec).unwrap();
        assert_eq!(c.num_edges(), 3);
        assert_eq!(c.betti_numbers()[1], 2);
    }

    #[test]
    fn unramified_z3_over_genus_two() {
        let g = catalog::cyclic(3);
        let t = g.generators()[0];
        let e = g.identity();
        let spec = CoverSpec::closed(Arc::clone(&g), vec![(t, e), (e, e)], vec![]);
        let report = oracle_characters(&spec).unwrap();
        assert_eq!(report.closed_betti, Some(8));
        assert_eq!(report.closed.unwrap().to_ints().unwrap(), vec![8, 2, 2]);
    }

    #[test]
    fn disk_base_is_a_graph() {
        let g = catalog::symmetric(3);
        let spec = CoverSpec::disk(Arc::clone(&g), g.generators().to_vec());
        let c = build_punctured_cover(&spec).unwrap();
        assert_eq!(c.num_faces(), 0);
        assert_eq!(c.betti_numbers()[1], 7);
        assert!(fill_cover(&spec, &c).is_err());
    }

    #[test]
    fn sparse_dump_lists_every_entry() {
        let spec = z2_torus();
        let filled = fill_cover(&spec, &build_punctured_cover(&spec).unwrap()).unwrap();
        let dump = filled.sparse_dump();
        assert!(dump.starts_with("boundary1 2 8"));
        assert!(dump.contains("boundary2 8 4"));
    }
}
