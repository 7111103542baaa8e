use std::fmt::Write as _;

use gausslink::carter::ComponentGenus;
use gausslink::code_invariants::{associated_codes, paragraph_to_code_traced};
use gausslink::codec::{
    code_to_json, format_code, format_paragraph, format_presentation, paragraph_to_json, presentation_to_json,
};
use gausslink::diagram::{split_components, Component};
use gausslink::grouptools::FiniteGroupTable;
use gausslink::{
    abelianization_rank, build_graph, by_name, count_homomorphisms, diagram_to_paragraph, is_planar_carter,
    is_planar_code, realize, to_cyclic_form, to_simple_form, GaussCode, GaussParagraph, InvariantTable, Letter,
    WirtingerPresentation,
};
use serde_json::{json, Value};

use crate::input::{expect_paragraph, expect_presentation, kind_name, Parsed};
use crate::CliError;

/// What a subcommand prints, in both renderings.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Printed to stderr and turned into exit status 1 after the report.
    pub failure: Option<String>,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, failure: None }
    }
}

pub struct Options {
    pub verbose: bool,
    pub faces: bool,
    pub all_merges: bool,
}

fn label_lines(labels: &[u64]) -> String {
    let mut out = String::new();
    for (i, l) in labels.iter().enumerate() {
        if *l != i as u64 + 1 {
            let _ = writeln!(out, "# crossing {} was labeled {l}", i + 1);
        }
    }
    out
}

fn local_letter(part: &Component, l: Letter) -> Letter {
    match l {
        Letter::Over(i) => Letter::Over(part.crossings[i - 1]),
        Letter::Under(i, s) => Letter::Under(part.crossings[i - 1], s),
    }
}

/// Face boundary in the `(a b)±` notation, with the crossings numbered as in
/// the whole paragraph.
fn face_text(part: &Component, c: &ComponentGenus, face: usize) -> String {
    c.complex
        .face(face)
        .map(|arc| {
            let (a, b) = c.complex.edge(arc.edge);
            let (a, b) = (local_letter(part, a), local_letter(part, b));
            if arc.forward {
                format!("({a} {b})+")
            } else {
                format!("({b} {a})-")
            }
        })
        .collect()
}

pub fn parse(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let kind = kind_name(&input);
    let (body, json, labels) = match &input {
        Parsed::Paragraph { paragraph, labels } => {
            (format_paragraph(paragraph), paragraph_to_json(paragraph), labels.clone())
        }
        Parsed::Code { code, labels } => (format_code(code), code_to_json(code), labels.clone()),
        Parsed::Presentation(p) => (format_presentation(p), presentation_to_json(p), Vec::new()),
    };
    let mut text = String::new();
    if opts.verbose {
        let _ = writeln!(text, "# valid {kind}");
        text.push_str(&label_lines(&labels));
    }
    text.push_str(&body);
    Ok(Output::ok(text, json))
}

pub fn genus(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let (p, labels) = expect_paragraph(input)?;
    let report = is_planar_carter(&p);
    let parts = split_components(&p);
    let mut text = String::new();
    if opts.verbose {
        text.push_str(&label_lines(&labels));
    }
    let mut components = Vec::new();
    for (k, (part, c)) in parts.iter().zip(&report.components).enumerate() {
        let faces: Vec<String> = (0..c.complex.face_count()).map(|f| face_text(part, c, f)).collect();
        let _ = writeln!(
            text,
            "component {}: crossings [{}], genus {}, euler {}, faces {}",
            k + 1,
            join(&part.crossings),
            c.genus,
            c.euler,
            faces.len()
        );
        if opts.faces || opts.verbose {
            for (f, face) in faces.iter().enumerate() {
                let _ = writeln!(text, "  face {}: {face}", f + 1);
            }
        }
        components.push(json!({
            "crossings": part.crossings,
            "words": part.words,
            "vertices": c.complex.vertex_count(),
            "edges": c.complex.edge_count(),
            "euler": c.euler,
            "genus": c.genus,
            "face_count": faces.len(),
            "faces": faces,
        }));
    }
    let _ = write!(text, "total genus {}", report.total_genus());
    let json = json!({
        "paragraph": paragraph_to_json(&p),
        "components": components,
        "total_genus": report.total_genus(),
        "planar": report.planar(),
    });
    Ok(Output::ok(text, json))
}

fn verdict(planar: bool) -> &'static str {
    if planar {
        "planar"
    } else {
        "non-planar"
    }
}

/// First nonzero invariant, as `alpha_i` or `beta_ij`.
fn witness(t: &InvariantTable) -> Option<(String, i64)> {
    let m = t.index_count();
    (1..=m).find(|&i| t.alpha(i) != 0).map(|i| (format!("alpha_{i}"), t.alpha(i))).or_else(|| {
        (1..=m)
            .flat_map(|i| (1..=m).map(move |j| (i, j)))
            .find(|&(i, j)| t.beta(i, j) != 0)
            .map(|(i, j)| (format!("beta_{i},{j}"), t.beta(i, j)))
    })
}

fn witness_json(t: &InvariantTable) -> Value {
    match witness(t) {
        Some((name, value)) => json!({"invariant": name, "value": value}),
        None => Value::Null,
    }
}

pub fn planar(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    if let Parsed::Code { code, .. } = &input {
        let table = InvariantTable::new(code);
        let mut text = format!("code {}\n", code_text(code));
        if let Some((name, value)) = witness(&table) {
            let _ = writeln!(text, "{name} = {value}");
        }
        let _ = write!(text, "criterion: {}", verdict(table.vanishes()));
        let json = json!({
            "code": code_to_json(code),
            "criterion": table.vanishes(),
            "witness": witness_json(&table),
        });
        return Ok(Output::ok(text, json));
    }
    let (p, labels) = expect_paragraph(input)?;
    let carter = is_planar_carter(&p);
    let parts = split_components(&p);
    let mut text = String::new();
    if opts.verbose {
        text.push_str(&label_lines(&labels));
    }
    let mut components = Vec::new();
    let mut disagreements = Vec::new();
    for (k, (part, c)) in parts.iter().zip(&carter.components).enumerate() {
        let code = paragraph_to_code_traced(&part.paragraph).map_err(|e| CliError::Domain(e.to_string()))?.0;
        let table = InvariantTable::new(&code);
        let criterion = table.vanishes();
        let agree = criterion == (c.genus == 0);
        if !agree {
            disagreements.push(k + 1);
        }
        let _ = writeln!(
            text,
            "component {}: crossings [{}], genus {}, carter {}, criterion {}",
            k + 1,
            join(&part.crossings),
            c.genus,
            verdict(c.genus == 0),
            verdict(criterion)
        );
        if opts.verbose {
            let _ = writeln!(text, "  code {}", code_text(&code));
            if let Some((name, value)) = witness(&table) {
                let _ = writeln!(text, "  {name} = {value}");
            }
        }
        let mut entry = json!({
            "crossings": part.crossings,
            "genus": c.genus,
            "carter": c.genus == 0,
            "criterion": criterion,
            "code": code_to_json(&code),
            "witness": witness_json(&table),
        });
        if opts.all_merges {
            let merges = all_merges(&part.paragraph, criterion)?;
            if let Some((count, consistent)) = merges {
                let _ =
                    writeln!(text, "  merge orders: {count}, {}", if consistent { "all agree" } else { "DISAGREE" });
                if !consistent {
                    disagreements.push(k + 1);
                }
            } else {
                let _ = writeln!(text, "  merge orders: skipped, more than {MAX_MERGE_WORDS} words");
            }
            entry["merge_orders"] = merges.map_or(Value::Null, |(n, ok)| json!({"count": n, "consistent": ok}));
        }
        components.push(entry);
    }
    let agree = disagreements.is_empty();
    let _ = writeln!(text, "carter: {}", verdict(carter.planar()));
    let _ = writeln!(text, "criterion: {}", verdict(components.iter().all(|c| c["criterion"] == true)));
    let _ = write!(text, "verdicts {}", if agree { "agree" } else { "DISAGREE" });
    let json = json!({
        "paragraph": paragraph_to_json(&p),
        "components": components,
        "carter": carter.planar(),
        "criterion": components.iter().all(|c| c["criterion"] == true),
        "agree": agree,
    });
    let failure = (!agree).then(|| {
        format!(
            "internal inconsistency: the genus and the code criterion disagree on component(s) {} of {}",
            join(&disagreements),
            format_paragraph(&p)
        )
    });
    Ok(Output { text, json, failure })
}

const MAX_MERGE_WORDS: usize = 4;

fn all_merges(p: &GaussParagraph, expected: bool) -> Result<Option<(usize, bool)>, CliError> {
    if p.word_count() > MAX_MERGE_WORDS {
        return Ok(None);
    }
    let codes = associated_codes(p).map_err(|e| CliError::Domain(e.to_string()))?;
    let consistent = codes.iter().all(|c| is_planar_code(c) == expected);
    Ok(Some((codes.len(), consistent)))
}

fn single_code(p: &GaussParagraph) -> Result<(GaussCode, Vec<String>), CliError> {
    let (code, steps) = paragraph_to_code_traced(p).map_err(|e| CliError::Domain(e.to_string()))?;
    Ok((code, steps.iter().map(ToString::to_string).collect()))
}

pub fn to_code(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let (p, labels) = expect_paragraph(input)?;
    let (code, steps) = single_code(&p)?;
    let mut text = String::new();
    if opts.verbose {
        text.push_str(&label_lines(&labels));
        for s in &steps {
            let _ = writeln!(text, "# {s}");
        }
    }
    text.push_str(&format_code(&code));
    Ok(Output::ok(text, code_to_json(&code)))
}

pub fn invariants(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let mut text = String::new();
    let code = match input {
        Parsed::Code { code, .. } => code,
        other => {
            let (p, _) = expect_paragraph(other)?;
            let (code, steps) = single_code(&p)?;
            if opts.verbose {
                for s in &steps {
                    let _ = writeln!(text, "# {s}");
                }
            }
            code
        }
    };
    let t = InvariantTable::new(&code);
    let m = t.index_count();
    let alpha: Vec<i64> = (1..=m).map(|i| t.alpha(i)).collect();
    let beta: Vec<Vec<i64>> = (1..=m).map(|i| (1..=m).map(|j| t.beta(i, j)).collect()).collect();
    let width = beta
        .iter()
        .flatten()
        .chain(&alpha)
        .map(|v| v.to_string().len())
        .chain([m.to_string().len()])
        .max()
        .unwrap_or(1);
    let _ = writeln!(text, "code {}", code_text(&code));
    for (i, a) in alpha.iter().enumerate() {
        let _ = writeln!(text, "alpha_{} = {a}", i + 1);
    }
    let _ = write!(text, "beta {:>w$}", "", w = width);
    for j in 1..=m {
        let _ = write!(text, " {j:>width$}");
    }
    text.push('\n');
    for (i, row) in beta.iter().enumerate() {
        let _ = write!(text, "     {:>width$}", i + 1);
        for v in row {
            let _ = write!(text, " {v:>width$}");
        }
        text.push('\n');
    }
    let _ = write!(text, "criterion: {}", verdict(t.vanishes()));
    let json = json!({
        "code": code_to_json(&code),
        "alpha": alpha,
        "beta": beta,
        "planar": t.vanishes(),
    });
    Ok(Output::ok(text, json))
}

pub fn group(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let (p, labels) = expect_paragraph(input)?;
    let g = expect_presentation(Parsed::Paragraph { paragraph: p, labels: labels.clone() })?;
    let mut text = String::new();
    if opts.verbose {
        text.push_str(&label_lines(&labels));
        let _ = writeln!(
            text,
            "# generators {}, relators {}, rank {}",
            g.generator_count(),
            g.relator_count(),
            abelianization_rank(&g)
        );
    }
    text.push_str(&format_presentation(&g));
    Ok(Output::ok(text, presentation_to_json(&g)))
}

pub fn graph(input: Parsed, _opts: &Options) -> Result<Output, CliError> {
    let p = expect_presentation(input)?;
    let g = build_graph(&p);
    let mut text = format!("vertices {}, edges {}\n", g.vertex_count, g.edges.len());
    let mut components = Vec::new();
    for (k, c) in g.components.iter().enumerate() {
        let names: Vec<&str> = c.vertices.iter().map(|&v| p.name(v)).collect();
        let _ = writeln!(
            text,
            "component {}: generators [{}], relators {}, euler {}",
            k + 1,
            names.join(" "),
            c.edges.len(),
            c.euler()
        );
        components.push(json!({
            "generators": names,
            "relators": c.edges.iter().map(|q| q + 1).collect::<Vec<_>>(),
            "euler": c.euler(),
        }));
    }
    let rank = abelianization_rank(&p);
    let _ = writeln!(text, "abelianization rank {rank}");
    let _ = write!(text, "realizable {}", g.is_realizable());
    let json = json!({
        "vertices": g.vertex_count,
        "edges": g.edges.len(),
        "components": components,
        "abelianization_rank": rank,
        "realizable": g.is_realizable(),
    });
    Ok(Output::ok(text, json))
}

pub fn realize_cmd(input: Parsed, opts: &Options) -> Result<Output, CliError> {
    let p = expect_presentation(input)?;
    let d = realize(&p).map_err(|e| CliError::Domain(e.to_string()))?;
    let paragraph = diagram_to_paragraph(&d);
    let mut text = String::new();
    if opts.verbose {
        let simple = to_simple_form(&to_cyclic_form(&p).map_err(|e| CliError::Domain(e.to_string()))?);
        for step in simple.trace() {
            let _ = writeln!(text, "# {step}");
        }
        let _ = writeln!(text, "# circles {}, crossings {}", paragraph.word_count(), paragraph.crossing_count());
    }
    text.push_str(&format_paragraph(&paragraph));
    Ok(Output::ok(text, paragraph_to_json(&paragraph)))
}

fn class_names(p: &WirtingerPresentation, classes: &[std::ops::Range<usize>]) -> Vec<Vec<String>> {
    classes.iter().map(|r| r.clone().map(|g| p.name(g).to_string()).collect()).collect()
}

pub fn reduce(input: Parsed, _opts: &Options) -> Result<Output, CliError> {
    let p = expect_presentation(input)?;
    let cyclic = to_cyclic_form(&p).map_err(|e| CliError::Domain(e.to_string()))?;
    let simple = to_simple_form(&cyclic);
    let mut text = String::new();
    for step in cyclic.trace() {
        let _ = writeln!(text, "# {step}");
    }
    let _ = writeln!(text, "# cyclic form");
    let _ = writeln!(text, "{}", format_presentation(cyclic.presentation()));
    for step in simple.trace() {
        let _ = writeln!(text, "# {step}");
    }
    let _ = writeln!(text, "# simple form");
    text.push_str(&format_presentation(simple.presentation()));
    let json = json!({
        "cyclic": presentation_to_json(cyclic.presentation()),
        "simple": presentation_to_json(simple.presentation()),
        "cyclic_classes": class_names(cyclic.presentation(), cyclic.classes()),
        "simple_classes": class_names(simple.presentation(), simple.classes()),
        "trace": cyclic.trace().iter().chain(simple.trace()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

pub fn load_group(name: Option<&str>, table: Option<&str>) -> Result<FiniteGroupTable, CliError> {
    match (name, table) {
        (_, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
            FiniteGroupTable::from_json(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
        }
        (Some(n), None) => by_name(n).map_err(|e| CliError::Input(e.to_string())),
        (None, None) => Err(CliError::Input("homcount needs --group NAME or --table FILE".into())),
    }
}

pub fn homcount(input: Parsed, h: &FiniteGroupTable, opts: &Options) -> Result<Output, CliError> {
    let p = expect_presentation(input)?;
    let count = count_homomorphisms(&p, h).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut text = String::new();
    if opts.verbose {
        let _ = writeln!(
            text,
            "# {} generators, {} relators into {} of order {}",
            p.generator_count(),
            p.relator_count(),
            h.name(),
            h.order()
        );
    }
    let _ = write!(text, "{count}");
    let json = json!({"group": h.name(), "order": h.order(), "count": count});
    Ok(Output::ok(text, json))
}

fn code_text(c: &GaussCode) -> String {
    if c.is_empty() {
        "()".to_string()
    } else {
        format_code(c)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
