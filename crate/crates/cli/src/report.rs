//! Command implementations. Each returns a human-readable report and the
//! equivalent JSON document.

use std::fmt::Write as _;
use std::sync::Arc;

use cw_core::chevalley_weil::{self, Orientation};
use cw_core::oracle::oracle_characters;
use cw_core::{
    hyperelliptic_obstruction, permutation_character, Base, CharacterTable, ClassFunction, CoverSpec, Error,
    HyperellipticCyclicCover, Result,
};
use serde_json::{json, Value};

use crate::input::Input;

pub struct Report {
    pub text: String,
    pub json: Value,
}

fn values(chi: &ClassFunction) -> Vec<String> {
    chi.rendered_values()
}

fn row(chi: &ClassFunction) -> String {
    format!("[{}]", values(chi).join(", "))
}

fn spec_echo(spec: &CoverSpec, out: &mut String) -> Value {
    let g = spec.group();
    let gens: Vec<String> = g.generator_perms().iter().map(|p| p.to_string()).collect();
    let show = |x| g.perm(x).to_string();
    let _ = writeln!(out, "group: order {}, generators {}", g.order(), gens.join("; "));
    let base = match spec.base() {
        Base::Closed { genus } => {
            let _ = writeln!(out, "base: closed, genus {genus}");
            json!({"kind": "closed", "genus": genus})
        }
        Base::Disk => {
            let _ = writeln!(out, "base: disk");
            json!({"kind": "disk"})
        }
    };
    let hyperbolic: Vec<(String, String)> = spec.hyperbolic().iter().map(|&(a, b)| (show(a), show(b))).collect();
    let parabolic: Vec<String> = spec.parabolic().iter().map(|&l| show(l)).collect();
    for (i, (a, b)) in hyperbolic.iter().enumerate() {
        let _ = writeln!(out, "a{} = {a}, b{} = {b}", i + 1, i + 1);
    }
    for (i, l) in parabolic.iter().enumerate() {
        let _ = writeln!(out, "l{} = {l}", i + 1);
    }
    json!({
        "group": {"order": g.order(), "generators": gens},
        "base": base,
        "hyperbolic": hyperbolic,
        "parabolic": parabolic,
    })
}

fn oracle_section(spec: &CoverSpec, out: &mut String) -> Result<Value> {
    let report = oracle_characters(spec)?;
    let mut doc = serde_json::Map::new();
    if spec.num_branch_points() > 0 {
        let formula = chevalley_weil::punctured_homology_character(spec)?;
        if formula != report.punctured {
            return Err(Error::OracleMismatch(format!(
                "punctured: formula {}, cell complex {}",
                row(&formula),
                row(&report.punctured)
            )));
        }
        let _ = writeln!(out, "punctured formula: {}", row(&formula));
        let _ = writeln!(out, "punctured oracle:  {}", row(&report.punctured));
        doc.insert("punctured".into(), json!({"formula": values(&formula), "oracle": values(&report.punctured), "betti": report.punctured_betti}));
    }
    if let Some(closed) = &report.closed {
        let formula = chevalley_weil::closed_homology_character(spec)?;
        if &formula != closed {
            return Err(Error::OracleMismatch(format!(
                "closed: formula {}, cell complex {}",
                row(&formula),
                row(closed)
            )));
        }
        let _ = writeln!(out, "closed formula: {}", row(&formula));
        let _ = writeln!(out, "closed oracle:  {}", row(closed));
        doc.insert("closed".into(), json!({"formula": values(&formula), "oracle": values(closed), "betti": report.closed_betti}));
    }
    let _ = writeln!(out, "oracle: MATCH");
    doc.insert("verdict".into(), json!("MATCH"));
    Ok(Value::Object(doc))
}

fn hodge_section(spec: &CoverSpec, orientation: Orientation, out: &mut String) -> Result<Value> {
    let pair = chevalley_weil::hodge_split(spec, orientation)?;
    let table = CharacterTable::of(spec.group());
    let m01 = table.decompose(&pair.chi_01)?;
    let m10 = table.decompose(&pair.chi_10)?;
    let _ = writeln!(out, "hodge orientation: {orientation}");
    let _ = writeln!(out, "chi_01: {}", row(&pair.chi_01));
    let _ = writeln!(out, "chi_10: {}", row(&pair.chi_10));
    let _ = writeln!(out, "H01 module: {m01}");
    let _ = writeln!(out, "H10 module: {m10}");
    let _ = writeln!(out, "hodge real: {}", pair.is_real());
    Ok(json!({
        "orientation": orientation,
        "chi_01": values(&pair.chi_01),
        "chi_10": values(&pair.chi_10),
        "module_01": m01.to_string(),
        "module_10": m10.to_string(),
        "real": pair.is_real(),
    }))
}

pub fn analyze(input: &Input, orientation: Orientation, oracle: bool) -> Result<Report> {
    let spec = input.cover_spec()?;
    spec.validate()?;
    let mut out = String::new();
    let mut doc = serde_json::Map::new();
    doc.insert("spec".into(), spec_echo(&spec, &mut out));
    let table = CharacterTable::of(spec.group());

    if spec.is_closed() {
        let genus = spec.cover_genus()?;
        let dim = spec.closed_h1_dim()?;
        let _ = writeln!(out, "cover genus: {genus}");
        let _ = writeln!(out, "closed H1 dimension: {dim}");
        doc.insert("cover_genus".into(), json!(genus));
        doc.insert("closed_h1_dim".into(), json!(dim));
    }
    if spec.num_branch_points() > 0 {
        let rank = spec.punctured_rank()?;
        let _ = writeln!(out, "punctured rank: {rank}");
        doc.insert("punctured_rank".into(), json!(rank));
    }
    let _ = writeln!(out, "character table:");
    out.push_str(&table.render());
    doc.insert("character_table".into(), serde_json::to_value(table.dump()).expect("serializable"));

    if spec.num_branch_points() > 0 {
        let chi = chevalley_weil::punctured_homology_character(&spec)?;
        let module = table.decompose(&chi)?;
        let _ = writeln!(out, "punctured H1 character: {}", row(&chi));
        let _ = writeln!(out, "punctured H1 module: {module}");
        doc.insert("punctured".into(), json!({"character": values(&chi), "module": module.to_string(), "multiplicities": module.multiplicities}));
    }
    if spec.is_closed() {
        let chi = chevalley_weil::closed_homology_character(&spec)?;
        let module = table.decompose(&chi)?;
        let _ = writeln!(out, "closed H1 character: {}", row(&chi));
        let _ = writeln!(out, "closed H1 module: {module}");
        doc.insert("closed".into(), json!({"character": values(&chi), "module": module.to_string(), "multiplicities": module.multiplicities}));
        doc.insert("hodge".into(), hodge_section(&spec, orientation, &mut out)?);
    }
    if oracle {
        doc.insert("oracle".into(), oracle_section(&spec, &mut out)?);
    }
    Ok(Report {
        text: out,
        json: Value::Object(doc),
    })
}

pub fn hodge(input: &Input, orientation: Orientation) -> Result<Report> {
    let spec = input.cover_spec()?;
    spec.validate()?;
    let mut out = String::new();
    let mut doc = serde_json::Map::new();
    doc.insert("spec".into(), spec_echo(&spec, &mut out));
    let genus = spec.cover_genus()?;
    let _ = writeln!(out, "cover genus: {genus}");
    doc.insert("cover_genus".into(), json!(genus));
    doc.insert("hodge".into(), hodge_section(&spec, orientation, &mut out)?);
    Ok(Report {
        text: out,
        json: Value::Object(doc),
    })
}

pub fn oracle_check(input: &Input) -> Result<Report> {
    let spec = input.cover_spec()?;
    spec.validate()?;
    let mut out = String::new();
    let mut doc = serde_json::Map::new();
    doc.insert("spec".into(), spec_echo(&spec, &mut out));
    doc.insert("oracle".into(), oracle_section(&spec, &mut out)?);
    Ok(Report {
        text: out,
        json: Value::Object(doc),
    })
}

pub fn topological(input: &Input) -> Result<Report> {
    let group = &input.group;
    let chi = match (&input.stabilizer, &input.character) {
        (Some(gens), None) => {
            let h = group.subgroup(gens);
            permutation_character(&group.coset_action(&h)?)
        }
        (None, Some(vals)) => {
            if vals.len() != group.num_classes() {
                return Err(Error::ParseError {
                    line: 0,
                    column: 0,
                    message: format!("character needs {} values, one per class, got {}", group.num_classes(), vals.len()),
                });
            }
            ClassFunction::from_ints(Arc::clone(group), vals)
        }
        _ => {
            return Err(Error::ParseError {
                line: 0,
                column: 0,
                message: "give exactly one of 'stabilizer:' or 'character:'".into(),
            })
        }
    };
    let verdict = chevalley_weil::is_topological_perm_rep(group, &chi)?;
    let mut out = String::new();
    let _ = writeln!(out, "group order: {}", group.order());
    let _ = writeln!(out, "character: {}", row(&chi));
    let witness = verdict.as_ref().map(|h| {
        let gens: Vec<String> = h.generators().iter().map(|&x| group.perm(x).to_string()).collect();
        json!({"order": h.order(), "generators": gens})
    });
    match &verdict {
        Some(h) => {
            let gen = h.generators().first().map(|&x| group.perm(x).to_string()).unwrap_or_else(|| "()".into());
            let _ = writeln!(out, "topological: true (cyclic stabilizer of order {} generated by {gen})", h.order());
        }
        None => {
            let _ = writeln!(out, "topological: false (no point stabilizer is cyclic)");
        }
    }
    Ok(Report {
        text: out,
        json: json!({"character": values(&chi), "topological": verdict.is_some(), "witness": witness}),
    })
}

pub fn hyperelliptic(genus: usize, degree: usize) -> Result<Report> {
    let cover = HyperellipticCyclicCover::generic(genus, degree)?;
    let table = CharacterTable::of(cover.group());
    let basis = cover.differential_basis();
    let h0k = cover.h0k_character();
    let h0k_module = table.decompose(&h0k)?;
    let kb = cover.h0k_minus_b();
    let kb_module = table.decompose(&kb.character)?;
    let mut out = String::new();
    let _ = writeln!(out, "base genus: {genus}, cyclic degree: {degree}, cover genus: {}", cover.genus());
    let _ = writeln!(out, "differential basis:");
    for b in &basis {
        let _ = writeln!(out, "  {b}");
    }
    let _ = writeln!(out, "H0(K) character: {}", row(&h0k));
    let _ = writeln!(out, "H0(K) module: {h0k_module}");
    let _ = writeln!(out, "H0(K-B) dimension: {}", kb.dimension);
    let _ = writeln!(out, "H0(K-B) character: {}", row(&kb.character));
    let _ = writeln!(out, "H0(K-B) module: {kb_module}");
    let _ = writeln!(out, "deg K = {}, deg B = {}, deg(K-B) = {}", kb.degree_k, kb.degree_b, kb.degree);
    Ok(Report {
        text: out,
        json: json!({
            "base_genus": genus,
            "cyclic_degree": degree,
            "cover_genus": cover.genus(),
            "basis": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "h0k": {"character": values(&h0k), "module": h0k_module.to_string()},
            "h0k_minus_b": {
                "dimension": kb.dimension,
                "character": values(&kb.character),
                "module": kb_module.to_string(),
                "degree_k": kb.degree_k,
                "degree_b": kb.degree_b,
                "degree": kb.degree,
            },
        }),
    })
}

pub fn obstruction(input: &Input) -> Result<Report> {
    let group = &input.group;
    let verdict = hyperelliptic_obstruction(group);
    let mut out = String::new();
    let _ = writeln!(out, "group order: {}", group.order());
    if let Some(rank) = group.abelian_rank() {
        let _ = writeln!(out, "abelian rank: {rank}");
    }
    let _ = writeln!(out, "{verdict}");
    Ok(Report {
        text: out,
        json: json!({"order": group.order(), "abelian_rank": group.abelian_rank(), "obstruction": verdict}),
    })
}

pub fn double_cover(genus: usize, branch: usize) -> Result<Report> {
    let r = chevalley_weil::pa_double_cover_module(genus, branch)?;
    let mut out = String::new();
    let _ = writeln!(out, "Z/2 cover of genus {genus} branched at {branch} points: cover genus {}", r.cover_genus);
    let _ = writeln!(out, "computed module: {} (dim {})", r.module, r.module.dim);
    let _ = writeln!(out, "printed expression: {} (dim {})", r.printed_expression, r.printed_module.dim);
    match &r.discrepancy {
        Some(d) => {
            let _ = writeln!(out, "discrepancy: {d}");
        }
        None => {
            let _ = writeln!(out, "discrepancy: none");
        }
    }
    Ok(Report {
        text: out,
        json: serde_json::to_value(&r).expect("serializable"),
    })
}
