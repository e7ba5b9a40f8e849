//! Cover specifications in the line-oriented text format and its JSON
//! equivalent.
//!
//! ```text
//! # Z/11 over the torus
//! group: (1 2 3 4 5 6 7 8 9 10 11)
//! base: closed g=1
//! hyperbolic: a1=e b1=e
//! parabolic: l1=s1^2 l2=s1^4 l3=s1^5
//! ```
//!
//! Generators on the `group:` line are separated by `;`, so
//! `(1 2 3); (1 2)` is `S_3` while `(1 2 3)(4 5)` is a single generator.
//! Words are products of `s1, s2, ...` (the generators, in order) and `e`,
//! joined by `*`, each factor optionally raised to an integer power `^k`.
//! `topological` inputs carry `stabilizer: <word> <word> ...` or
//! `character: <int> <int> ...` (one value per conjugacy class) instead of
//! branching data.

use std::collections::BTreeMap;
use std::sync::Arc;

use cw_core::perm::{parse_cycles, Perm};
use cw_core::{Base, CoverSpec, Elem, Error, FiniteGroup, Result};
use serde::Deserialize;

/// A parsed input file; every field but the group is optional.
#[derive(Clone, Debug)]
pub struct Input {
    pub group: Arc<FiniteGroup>,
    pub base: Option<Base>,
    pub hyperbolic: Vec<(Elem, Elem)>,
    pub parabolic: Vec<Elem>,
    pub stabilizer: Option<Vec<Elem>>,
    pub character: Option<Vec<i64>>,
}

impl Input {
    pub fn cover_spec(&self) -> Result<CoverSpec> {
        let base = self.base.ok_or_else(|| parse_error(0, 0, "missing 'base:' line"))?;
        CoverSpec::new(base, Arc::clone(&self.group), self.hyperbolic.clone(), self.parabolic.clone())
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn build_group(cycles: Vec<Vec<Vec<usize>>>, max_order: usize, line: usize, column: usize) -> Result<Arc<FiniteGroup>> {
    if cycles.is_empty() {
        return Err(Error::NoGenerators);
    }
    let degree = cycles.iter().flatten().flatten().copied().max().unwrap_or(1);
    let perms = cycles
        .iter()
        .map(|c| Perm::from_cycles(degree, c))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::ParseError { message, .. } => parse_error(line, column, message),
            other => other,
        })?;
    Ok(Arc::new(FiniteGroup::generate_with_limit(&perms, max_order)?))
}

/// Evaluates a word in the generators; `offset` is the column of its
/// first character.
pub fn eval_word(group: &FiniteGroup, word: &str, line: usize, offset: usize) -> Result<Elem> {
    let gens = group.generators();
    let mut acc = group.identity();
    let mut pos = 0;
    for factor in word.split('*') {
        let col = offset + pos;
        pos += factor.len() + 1;
        let lead = factor.len() - factor.trim_start().len();
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(parse_error(line, col, format!("empty factor in word '{word}'")));
        }
        let (atom, power) = match factor.split_once('^') {
            Some((a, p)) => {
                let p = p.trim().trim_start_matches('(').trim_end_matches(')');
                let k: i64 = p
                    .parse()
                    .map_err(|_| parse_error(line, col + lead, format!("bad exponent '{p}'")))?;
                (a.trim(), k)
            }
            None => (factor, 1),
        };
        let x = if atom == "e" {
            group.identity()
        } else if let Some(i) = atom.strip_prefix('s').and_then(|d| d.parse::<usize>().ok()) {
            if i == 0 || i > gens.len() {
                return Err(parse_error(
                    line,
                    col + lead,
                    format!("unknown generator '{atom}'; there are {} generators", gens.len()),
                ));
            }
            gens[i - 1]
        } else {
            return Err(parse_error(line, col + lead, format!("unknown symbol '{atom}'")));
        };
        acc = group.mul(acc, group.pow(x, power));
    }
    Ok(acc)
}

/// `name=word` assignments separated by whitespace.
fn parse_assignments(rest: &str, line: usize, offset: usize) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = rest.as_bytes();
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let token = &rest[start..i];
        let Some((name, word)) = token.split_once('=') else {
            return Err(parse_error(line, offset + start, format!("expected name=word, found '{token}'")));
        };
        out.push((name.to_string(), word.to_string(), offset + start + name.len() + 1));
    }
    Ok(out)
}

fn parse_base(rest: &str, line: usize, offset: usize) -> Result<Base> {
    let mut parts = rest.split_whitespace();
    match parts.next() {
        Some("disk") => match parts.next() {
            None => Ok(Base::Disk),
            Some(t) => Err(parse_error(line, offset, format!("unexpected '{t}' after 'disk'"))),
        },
        Some("closed") => {
            let spec = parts.next().unwrap_or("");
            let genus = spec
                .strip_prefix("g=")
                .and_then(|g| g.parse().ok())
                .ok_or_else(|| parse_error(line, offset, format!("expected 'g=<genus>', found '{spec}'")))?;
            Ok(Base::Closed { genus })
        }
        other => Err(parse_error(
            line,
            offset,
            format!("expected 'closed g=<n>' or 'disk', found '{}'", other.unwrap_or("")),
        )),
    }
}

/// Collects `prefix1, prefix2, ...`; every index must be present once.
fn indexed(
    items: &[(String, Elem, usize)],
    prefix: &str,
    line: usize,
) -> Result<BTreeMap<usize, Elem>> {
    let mut out = BTreeMap::new();
    for (name, x, col) in items {
        let Some(i) = name.strip_prefix(prefix).and_then(|d| d.parse::<usize>().ok()) else {
            continue;
        };
        if i == 0 || out.insert(i, *x).is_some() {
            return Err(parse_error(line, *col, format!("duplicate or invalid name '{name}'")));
        }
    }
    if let Some((&last, _)) = out.iter().next_back() {
        if last != out.len() {
            return Err(parse_error(line, 1, format!("{prefix}1..{prefix}{last} are not all given")));
        }
    }
    Ok(out)
}

pub fn parse_text(text: &str, max_order: usize) -> Result<Input> {
    let mut group: Option<Arc<FiniteGroup>> = None;
    let mut base = None;
    let mut pending: Vec<(usize, &str, usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(parse_error(line, col, "expected 'key: value'"));
        };
        let offset = key.len() + 2;
        match key.trim() {
            "group" => {
                if group.is_some() {
                    return Err(parse_error(line, 1, "duplicate 'group:' line"));
                }
                let mut cycles = Vec::new();
                let mut col = offset;
                for part in rest.split(';') {
                    if !part.trim().is_empty() {
                        let lead = part.len() - part.trim_start().len();
                        let c = parse_cycles(part.trim()).map_err(|e| match e {
                            Error::ParseError { column, message, .. } => {
                                parse_error(line, col + lead + column - 1, message)
                            }
                            other => other,
                        })?;
                        cycles.push(c);
                    }
                    col += part.len() + 1;
                }
                group = Some(build_group(cycles, max_order, line, offset)?);
            }
            "base" => {
                if base.is_some() {
                    return Err(parse_error(line, 1, "duplicate 'base:' line"));
                }
                base = Some(parse_base(rest, line, offset)?);
            }
            k @ ("hyperbolic" | "parabolic" | "stabilizer" | "character") => {
                if pending.iter().any(|(_, key, _, _)| *key == k) {
                    return Err(parse_error(line, 1, format!("duplicate '{k}:' line")));
                }
                pending.push((line, k, offset, rest));
            }
            other => {
                let col = content.len() - content.trim_start().len() + 1;
                return Err(parse_error(line, col, format!("unknown key '{other}'")));
            }
        }
    }
    let group = group.ok_or_else(|| parse_error(0, 0, "missing 'group:' line"))?;

    let mut input = Input {
        group: Arc::clone(&group),
        base,
        hyperbolic: Vec::new(),
        parabolic: Vec::new(),
        stabilizer: None,
        character: None,
    };
    for (line, key, offset, rest) in pending {
        match key {
            "hyperbolic" | "parabolic" => {
                let items = parse_assignments(rest, line, offset)?
                    .into_iter()
                    .map(|(name, word, col)| Ok((name, eval_word(&group, &word, line, col)?, col)))
                    .collect::<Result<Vec<_>>>()?;
                if key == "parabolic" {
                    if let Some((name, _, col)) = items.iter().find(|(n, _, _)| !n.starts_with('l')) {
                        return Err(parse_error(line, *col, format!("parabolic names are l1, l2, ...; found '{name}'")));
                    }
                    input.parabolic = indexed(&items, "l", line)?.into_values().collect();
                } else {
                    if let Some((name, _, col)) = items.iter().find(|(n, _, _)| !n.starts_with('a') && !n.starts_with('b')) {
                        return Err(parse_error(line, *col, format!("hyperbolic names are a1, b1, ...; found '{name}'")));
                    }
                    let a = indexed(&items, "a", line)?;
                    let b = indexed(&items, "b", line)?;
                    if a.len() != b.len() {
                        return Err(parse_error(line, 1, "every a_i needs a matching b_i"));
                    }
                    input.hyperbolic = a.into_values().zip(b.into_values()).collect();
                }
            }
            "stabilizer" => {
                let mut elems = Vec::new();
                let mut col = offset;
                for word in rest.split(' ') {
                    if !word.is_empty() {
                        elems.push(eval_word(&group, word, line, col)?);
                    }
                    col += word.len() + 1;
                }
                input.stabilizer = Some(elems);
            }
            "character" => {
                let mut values = Vec::new();
                let mut col = offset;
                for v in rest.split(' ') {
                    if !v.is_empty() {
                        let x = v
                            .trim()
                            .parse::<i64>()
                            .map_err(|_| parse_error(line, col, format!("bad integer '{v}'")))?;
                        values.push(x);
                    }
                    col += v.len() + 1;
                }
                input.character = Some(values);
            }
            _ => unreachable!(),
        }
    }
    Ok(input)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonInput {
    group: Vec<String>,
    #[serde(default)]
    base: Option<String>,
    #[serde(default)]
    genus: Option<usize>,
    #[serde(default)]
    hyperbolic: Vec<(String, String)>,
    #[serde(default)]
    parabolic: Vec<String>,
    #[serde(default)]
    stabilizer: Option<Vec<String>>,
    #[serde(default)]
    character: Option<Vec<i64>>,
}

/// The JSON equivalent of the text format:
/// `{"group": ["(1 2 3)"], "base": "closed", "genus": 1,
///   "hyperbolic": [["e", "e"]], "parabolic": ["s1", "s1^2"]}`.
/// Errors in words report line 0 and the column within the word.
pub fn parse_json(text: &str, max_order: usize) -> Result<Input> {
    let raw: JsonInput =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let cycles = raw
        .group
        .iter()
        .map(|g| parse_cycles(g.trim()))
        .collect::<Result<Vec<_>>>()?;
    let group = build_group(cycles, max_order, 0, 0)?;
    let base = match raw.base.as_deref() {
        None => None,
        Some("disk") => Some(Base::Disk),
        Some("closed") => Some(Base::Closed {
            genus: raw.genus.unwrap_or(raw.hyperbolic.len()),
        }),
        Some(other) => return Err(parse_error(0, 0, format!("unknown base '{other}'"))),
    };
    let word = |w: &str| eval_word(&group, w, 0, 1);
    Ok(Input {
        base,
        hyperbolic: raw
            .hyperbolic
            .iter()
            .map(|(a, b)| Ok((word(a)?, word(b)?)))
            .collect::<Result<_>>()?,
        parabolic: raw.parabolic.iter().map(|w| word(w)).collect::<Result<_>>()?,
        stabilizer: raw
            .stabilizer
            .map(|s| s.iter().map(|w| word(w)).collect::<Result<_>>())
            .transpose()?,
        character: raw.character,
        group,
    })
}
