//! Permutations of at most 64 points and their disjoint-cycle notation.
//!
//! Points are stored 0-based and printed 1-based. Products compose left to
//! right: `p.then(&q)` first applies `p`, then `q`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its image list (0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::ParseError {
                    line: 0,
                    column: 0,
                    message: format!("image list {images:?} is not a permutation"),
                });
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// Builds a permutation of `degree` points from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree || used[p - 1] {
                    return Err(Error::ParseError {
                        line: 0,
                        column: 0,
                        message: format!("bad point {p} in cycle {cycle:?}"),
                    });
                }
                used[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Perm { images }
    }

    /// Nontrivial cycles in 1-based notation, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Largest moved point (1-based), or 0 for the identity.
    pub fn largest_moved_point(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i != j as usize)
            .map(|(i, _)| i + 1)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Parses disjoint-cycle notation into 1-based cycles without fixing a degree.
///
/// Accepts `()`, `(1 2)(3 4 5)` and comma separated points such as `(1,2)`.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = |column: usize, message: String| Error::ParseError {
        line: 1,
        column,
        message,
    };
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut number = String::new();
    let mut number_start = 0;
    let flush = |number: &mut String, current: &mut Option<Vec<usize>>, start: usize| -> Result<()> {
        if number.is_empty() {
            return Ok(());
        }
        let p: usize = number
            .parse()
            .map_err(|_| err(start, format!("bad point '{number}'")))?;
        match current {
            Some(c) => c.push(p),
            None => return Err(err(start, "point outside of a cycle".into())),
        }
        number.clear();
        Ok(())
    };
    for (i, ch) in text.char_indices() {
        let col = i + 1;
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(err(col, "nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current, number_start)?;
                let c = current.take().ok_or_else(|| err(col, "unmatched ')'".into()))?;
                if c.len() > 1 {
                    cycles.push(c);
                } else if c.len() == 1 {
                    // a 1-cycle is a fixed point; harmless
                }
            }
            '0'..='9' => {
                if number.is_empty() {
                    number_start = col;
                }
                number.push(ch);
            }
            ' ' | ',' | '\t' => flush(&mut number, &mut current, number_start)?,
            _ => return Err(err(col, format!("unexpected character '{ch}'"))),
        }
    }
    if current.is_some() {
        return Err(err(text.len() + 1, "unterminated cycle".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for c in &cycles {
        for &p in c {
            if p == 0 {
                return Err(err(1, "points are numbered from 1".into()));
            }
            if !seen.insert(p) {
                return Err(err(1, format!("point {p} appears twice")));
            }
        }
    }
    Ok(cycles)
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses cycle notation; the degree is the largest point mentioned
    /// (at least 1).
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s.trim())?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Perm::from_cycles(degree, &cycles)
    }
}

/// Parses several permutations and pads them to a common degree.
pub fn parse_generators<S: AsRef<str>>(texts: &[S]) -> Result<Vec<Perm>> {
    let cycles = texts
        .iter()
        .map(|t| parse_cycles(t.as_ref().trim()))
        .collect::<Result<Vec<_>>>()?;
    let degree = cycles.iter().flatten().flatten().copied().max().unwrap_or(1);
    cycles.iter().map(|c| Perm::from_cycles(degree, c)).collect()
}
