//! Text and JSON formats for paragraphs, codes and presentations.
//!
//! Paragraph text lists words separated by `/` or line breaks; letters are
//! `3` (over) and `3+`, `3-` (under). An empty word is written `()`, and `#`
//! starts a comment. A code is one line of signed symbols such as
//! `1+ 2- 1- 2+`. A presentation reads
//!
//! ```text
//! gens a b c;
//! rel b = a^-1 c a;
//! rel c = b a b^-1;
//! ```
//!
//! Each format also has a JSON mirror:
//! `{"words": [["1", "2+"], ["1-", "2"]]}`, `{"symbols": ["1+", "1-"]}` and
//! `{"generators": ["a"], "relators": [{"target": "a", "source": "a", "conjugator": ["a^-1"]}]}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code_invariants::{GaussCode, InvalidCode};
use crate::diagram::{GaussParagraph, Letter, ParagraphError, RawLetter, Sign};
use crate::wirtinger::{inverse_word, GenLetter, PresentationError, Relator, WirtingerPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("line {line}: `{token}` is not a letter; expected a positive integer, optionally followed by + or -")]
    MalformedLetter { line: usize, token: String },
    #[error("line {line}: `{token}` is not a symbol such as 3+ or 3-")]
    MalformedSymbol { line: usize, token: String },
    #[error("line {line}: `{token}` needs a superscript, `{token}+` or `{token}-`")]
    MissingSuperscript { line: usize, token: String },
    #[error(transparent)]
    Paragraph(#[from] ParagraphError),
    #[error("not a permutation of the symbols 1+ 1- .. m+ m-: {0}")]
    NotAPermutation(#[from] InvalidCode),
    #[error("statement {statement}: {message}")]
    Syntax { statement: usize, message: String },
    #[error("relator {relator}: {reason}")]
    MalformedRelator { relator: usize, reason: String },
    #[error("generator `{name}` is not declared")]
    UnknownGenerator { name: String },
    #[error("generator `{name}` is declared twice")]
    DuplicateGenerator { name: String },
    #[error("invalid JSON: {message}")]
    Json { message: String },
}

/// Every problem found in one input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{}", .errors.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))]
pub struct ParseError {
    pub errors: Vec<CodecError>,
}

impl From<CodecError> for ParseError {
    fn from(e: CodecError) -> Self {
        ParseError { errors: vec![e] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Paragraph,
    Code,
    Presentation,
}

impl FromStr for InputKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paragraph" => Ok(InputKind::Paragraph),
            "code" => Ok(InputKind::Code),
            "presentation" => Ok(InputKind::Presentation),
            _ => Err(format!("unknown input kind `{s}`")),
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n")
}

/// Guesses the format: JSON by its keys, `gens ...` as a presentation, a
/// single sequence of signed symbols as a code, anything else as a paragraph.
pub fn detect_kind(text: &str) -> InputKind {
    let text = strip_comments(text);
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return match serde_json::from_str::<serde_json::Value>(trimmed) {
            Ok(serde_json::Value::Object(map)) if map.contains_key("symbols") => InputKind::Code,
            Ok(serde_json::Value::Object(map)) if map.contains_key("generators") => InputKind::Presentation,
            _ => InputKind::Paragraph,
        };
    }
    if trimmed.split_whitespace().next() == Some("gens") {
        return InputKind::Presentation;
    }
    let mut tokens = trimmed.split_whitespace().peekable();
    if tokens.peek().is_some() && !trimmed.contains('/') && tokens.all(|t| parse_symbol(t).is_some()) {
        return InputKind::Code;
    }
    InputKind::Paragraph
}

fn parse_label(digits: &str) -> Option<u64> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&l| l > 0)
}

fn parse_letter(token: &str) -> Option<RawLetter> {
    if let Some(s) = parse_symbol(token) {
        return Some((s.0, Some(s.1)));
    }
    parse_label(token).map(|l| (l, None))
}

fn parse_symbol(token: &str) -> Option<(u64, Sign)> {
    let (digits, sign) = match token.strip_suffix('+') {
        Some(d) => (d, Sign::Positive),
        None => (token.strip_suffix('-')?, Sign::Negative),
    };
    parse_label(digits).map(|l| (l, sign))
}

fn letter_token(l: Letter) -> String {
    l.to_string()
}

#[derive(Serialize, Deserialize)]
struct ParagraphJson {
    words: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    symbols: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RelatorJson {
    target: String,
    source: String,
    #[serde(default)]
    conjugator: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    #[serde(default)]
    relators: Vec<RelatorJson>,
}

fn json_error(e: serde_json::Error) -> ParseError {
    CodecError::Json { message: e.to_string() }.into()
}

/// Parses a paragraph, keeping the original crossing labels; see
/// [`GaussParagraph::from_labels`] for the renumbering.
pub fn parse_paragraph_labeled(text: &str) -> Result<(GaussParagraph, Vec<u64>), ParseError> {
    let text = strip_comments(text);
    let mut errors = Vec::new();
    let mut words: Vec<Vec<RawLetter>> = Vec::new();
    if text.trim_start().starts_with('{') {
        let json: ParagraphJson = serde_json::from_str(&text).map_err(json_error)?;
        for w in json.words {
            let mut word = Vec::new();
            for token in w {
                match parse_letter(token.trim()) {
                    Some(l) => word.push(l),
                    None => errors.push(CodecError::MalformedLetter { line: 1, token }),
                }
            }
            words.push(word);
        }
    } else {
        for (n, line) in text.lines().enumerate() {
            for chunk in line.split('/') {
                let tokens: Vec<&str> = chunk.split_whitespace().collect();
                if tokens.is_empty() {
                    continue;
                }
                if tokens == ["()"] {
                    words.push(Vec::new());
                    continue;
                }
                let mut word = Vec::new();
                for token in tokens {
                    match parse_letter(token) {
                        Some(l) => word.push(l),
                        None => errors.push(CodecError::MalformedLetter { line: n + 1, token: token.to_string() }),
                    }
                }
                words.push(word);
            }
        }
    }
    if !errors.is_empty() {
        return Err(ParseError { errors });
    }
    GaussParagraph::from_labels(words)
        .map_err(|e| ParseError { errors: e.0.into_iter().map(CodecError::Paragraph).collect() })
}

pub fn parse_paragraph(text: &str) -> Result<GaussParagraph, ParseError> {
    parse_paragraph_labeled(text).map(|(p, _)| p)
}

/// Parses a signed Gauss code, keeping the original labels.
pub fn parse_code_labeled(text: &str) -> Result<(GaussCode, Vec<u64>), ParseError> {
    let text = strip_comments(text);
    let tokens: Vec<(usize, String)> = if text.trim_start().starts_with('{') {
        let json: CodeJson = serde_json::from_str(&text).map_err(json_error)?;
        json.symbols.into_iter().map(|s| (1, s.trim().to_string())).collect()
    } else {
        text.lines()
            .enumerate()
            .flat_map(|(n, line)| line.split_whitespace().map(move |t| (n + 1, t.to_string())))
            .collect()
    };
    let mut errors = Vec::new();
    let mut symbols = Vec::with_capacity(tokens.len());
    for (line, token) in tokens {
        match parse_symbol(&token) {
            Some(s) => symbols.push(s),
            None if parse_label(&token).is_some() => errors.push(CodecError::MissingSuperscript { line, token }),
            None => errors.push(CodecError::MalformedSymbol { line, token }),
        }
    }
    if !errors.is_empty() {
        return Err(ParseError { errors });
    }
    GaussCode::from_labels(symbols).map_err(|e| CodecError::NotAPermutation(e).into())
}

pub fn parse_code(text: &str) -> Result<GaussCode, ParseError> {
    parse_code_labeled(text).map(|(c, _)| c)
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_gen_letter(token: &str, index: &HashMap<String, usize>) -> Result<GenLetter, CodecError> {
    let (name, inverse) = match token.split_once('^') {
        Some((name, "-1")) => (name, true),
        Some((name, "1" | "+1")) => (name, false),
        Some(_) => {
            return Err(CodecError::Syntax { statement: 0, message: format!("bad exponent in `{token}`; use ^-1") })
        }
        None => (token, false),
    };
    index
        .get(name)
        .map(|&generator| GenLetter { generator, inverse })
        .ok_or_else(|| CodecError::UnknownGenerator { name: name.to_string() })
}

/// Splits `rhs = u⁻¹ s u` into source and conjugator.
fn split_conjugate(relator: usize, rhs: Vec<GenLetter>) -> Result<(usize, Vec<GenLetter>), CodecError> {
    let malformed = |reason: &str| CodecError::MalformedRelator { relator, reason: reason.to_string() };
    if rhs.len().is_multiple_of(2) {
        return Err(malformed("right side must be w^-1 x w with a single middle generator"));
    }
    let k = rhs.len() / 2;
    let middle = rhs[k];
    if middle.inverse {
        return Err(malformed("middle generator must appear without an exponent"));
    }
    let conjugator = rhs[k + 1..].to_vec();
    if rhs[..k] != inverse_word(&conjugator)[..] {
        return Err(malformed("left part is not the inverse of the right part"));
    }
    Ok((middle.generator, conjugator))
}

pub fn parse_presentation(text: &str) -> Result<WirtingerPresentation, ParseError> {
    let text = strip_comments(text);
    if text.trim_start().starts_with('{') {
        return presentation_from_json(&text);
    }
    let statements: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut errors = Vec::new();
    let Some(first) = statements.first() else {
        return Err(CodecError::Syntax { statement: 1, message: "expected `gens ...`".into() }.into());
    };
    let mut head = first.split_whitespace();
    if head.next() != Some("gens") {
        return Err(CodecError::Syntax { statement: 1, message: "presentation must start with `gens`".into() }.into());
    }
    let mut names = Vec::new();
    let mut index = HashMap::new();
    for name in head {
        if !is_name(name) {
            errors.push(CodecError::Syntax { statement: 1, message: format!("`{name}` is not a generator name") });
        } else if index.insert(name.to_string(), names.len()).is_some() {
            errors.push(CodecError::DuplicateGenerator { name: name.to_string() });
        } else {
            names.push(name.to_string());
        }
    }

    let mut relators = Vec::new();
    for (s, statement) in statements.iter().enumerate().skip(1) {
        let relator = relators.len() + 1;
        let mut tokens = statement.split_whitespace();
        if tokens.next() != Some("rel") {
            errors.push(CodecError::Syntax { statement: s + 1, message: "expected `rel`".into() });
            continue;
        }
        let rest: Vec<&str> = tokens.collect();
        let (Some(&target), Some(&"=")) = (rest.first(), rest.get(1)) else {
            errors.push(CodecError::Syntax { statement: s + 1, message: "expected `rel x = ...`".into() });
            continue;
        };
        let mut letters = Vec::new();
        let mut ok = true;
        for token in std::iter::once(target).chain(rest[2..].iter().copied()) {
            match parse_gen_letter(token, &index) {
                Ok(l) => letters.push(l),
                Err(CodecError::Syntax { message, .. }) => {
                    errors.push(CodecError::Syntax { statement: s + 1, message });
                    ok = false;
                }
                Err(e) => {
                    errors.push(e);
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        let target = letters.remove(0);
        if target.inverse {
            errors.push(CodecError::MalformedRelator { relator, reason: "left side must be a generator".into() });
            continue;
        }
        match split_conjugate(relator, letters) {
            Ok((source, conjugator)) => relators.push(Relator { target: target.generator, source, conjugator }),
            Err(e) => errors.push(e),
        }
    }
    if !errors.is_empty() {
        return Err(ParseError { errors });
    }
    WirtingerPresentation::new(names, relators).map_err(|e| presentation_error(e).into())
}

fn presentation_error(e: PresentationError) -> CodecError {
    match e {
        PresentationError::DuplicateName { name } => CodecError::DuplicateGenerator { name },
        PresentationError::UnknownGenerator { generator, .. } => {
            CodecError::UnknownGenerator { name: format!("#{generator}") }
        }
    }
}

fn presentation_from_json(text: &str) -> Result<WirtingerPresentation, ParseError> {
    let json: PresentationJson = serde_json::from_str(text).map_err(json_error)?;
    let mut errors = Vec::new();
    let mut index = HashMap::new();
    for (g, name) in json.generators.iter().enumerate() {
        if index.insert(name.clone(), g).is_some() {
            errors.push(CodecError::DuplicateGenerator { name: name.clone() });
        }
    }
    let mut relators = Vec::new();
    for (q, r) in json.relators.iter().enumerate() {
        let lookup = |name: &str| {
            index.get(name).copied().ok_or_else(|| CodecError::UnknownGenerator { name: name.to_string() })
        };
        let conjugator: Result<Vec<GenLetter>, CodecError> =
            r.conjugator.iter().map(|t| parse_gen_letter(t.trim(), &index)).collect();
        match (lookup(&r.target), lookup(&r.source), conjugator) {
            (Ok(target), Ok(source), Ok(conjugator)) => relators.push(Relator { target, source, conjugator }),
            (t, s, c) => {
                errors.extend(t.err());
                errors.extend(s.err());
                errors.extend(c.err().map(|e| match e {
                    CodecError::Syntax { message, .. } => {
                        CodecError::MalformedRelator { relator: q + 1, reason: message }
                    }
                    e => e,
                }));
            }
        }
    }
    if !errors.is_empty() {
        return Err(ParseError { errors });
    }
    WirtingerPresentation::new(json.generators, relators).map_err(|e| presentation_error(e).into())
}

/// Words separated by ` / `, empty words as `()`.
pub fn format_paragraph(p: &GaussParagraph) -> String {
    p.words()
        .iter()
        .map(|w| {
            if w.is_empty() {
                "()".to_string()
            } else {
                w.iter().map(|&l| letter_token(l)).collect::<Vec<_>>().join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn format_code(c: &GaussCode) -> String {
    c.symbols().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

/// One statement per line.
pub fn format_presentation(p: &WirtingerPresentation) -> String {
    let mut out = format!("gens {};", p.names().join(" "));
    for r in p.relators() {
        out.push_str(&format!("\nrel {};", p.format_relator(r)));
    }
    out
}

pub fn paragraph_to_json(p: &GaussParagraph) -> serde_json::Value {
    let words = p.words().iter().map(|w| w.iter().map(|&l| letter_token(l)).collect()).collect();
    serde_json::to_value(ParagraphJson { words }).expect("serializable")
}

pub fn code_to_json(c: &GaussCode) -> serde_json::Value {
    serde_json::to_value(CodeJson { symbols: c.symbols().iter().map(|s| s.to_string()).collect() })
        .expect("serializable")
}

pub fn presentation_to_json(p: &WirtingerPresentation) -> serde_json::Value {
    let names = p.names();
    let letter = |l: &GenLetter| {
        if l.inverse {
            format!("{}^-1", names[l.generator])
        } else {
            names[l.generator].clone()
        }
    };
    let relators = p
        .relators()
        .iter()
        .map(|r| RelatorJson {
            target: names[r.target].clone(),
            source: names[r.source].clone(),
            conjugator: r.conjugator.iter().map(letter).collect(),
        })
        .collect();
    serde_json::to_value(PresentationJson { generators: names.to_vec(), relators }).expect("serializable")
}

impl fmt::Display for GaussParagraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_paragraph(self))
    }
}

impl FromStr for GaussParagraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_paragraph(s)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_code(self))
    }
}

impl FromStr for GaussCode {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_code(s)
    }
}

impl fmt::Display for WirtingerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_presentation(self))
    }
}

impl FromStr for WirtingerPresentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}
