use std::io::Read;
use std::path::Path;

use gausslink::codec::{parse_code_labeled, parse_paragraph_labeled, parse_presentation, ParseError};
use gausslink::sample::{random_paragraph, random_realizable_presentation};
use gausslink::WirtingerPresentation;
use gausslink::{detect_kind, group_of_diagram, paragraph_to_diagram, GaussCode, GaussParagraph, InputKind};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::CliError;

/// Where the text comes from: stdin for `-` or no argument, a file when the
/// argument names one, the argument itself otherwise.
pub fn read_source(arg: Option<&str>) -> Result<String, CliError> {
    match arg {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
        Some(a) if !a.is_empty() && Path::new(a).is_file() => {
            std::fs::read_to_string(a).map_err(|e| CliError::Input(format!("cannot read {a}: {e}")))
        }
        Some(a) => Ok(a.to_string()),
    }
}

pub enum Parsed {
    Paragraph { paragraph: GaussParagraph, labels: Vec<u64> },
    Code { code: GaussCode, labels: Vec<u64> },
    Presentation(WirtingerPresentation),
}

fn input_error(e: ParseError) -> CliError {
    CliError::Input(e.to_string())
}

pub fn parse(text: &str, kind: Option<InputKind>) -> Result<Parsed, CliError> {
    match kind.unwrap_or_else(|| detect_kind(text)) {
        InputKind::Paragraph => {
            let (paragraph, labels) = parse_paragraph_labeled(text).map_err(input_error)?;
            Ok(Parsed::Paragraph { paragraph, labels })
        }
        InputKind::Code => {
            let (code, labels) = parse_code_labeled(text).map_err(input_error)?;
            Ok(Parsed::Code { code, labels })
        }
        InputKind::Presentation => parse_presentation(text).map(Parsed::Presentation).map_err(input_error),
    }
}

pub fn kind_name(p: &Parsed) -> &'static str {
    match p {
        Parsed::Paragraph { .. } => "paragraph",
        Parsed::Code { .. } => "code",
        Parsed::Presentation(_) => "presentation",
    }
}

/// Random input replayable from its seed.
pub struct RandomSpec {
    pub size: usize,
    pub words: usize,
    pub seed: u64,
}

impl RandomSpec {
    pub fn paragraph(&self) -> GaussParagraph {
        random_paragraph(&mut StdRng::seed_from_u64(self.seed), self.size, self.words)
    }

    pub fn presentation(&self) -> WirtingerPresentation {
        random_realizable_presentation(&mut StdRng::seed_from_u64(self.seed), self.size.max(1), 4)
    }
}

pub fn expect_paragraph(p: Parsed) -> Result<(GaussParagraph, Vec<u64>), CliError> {
    match p {
        Parsed::Paragraph { paragraph, labels } => Ok((paragraph, labels)),
        other => Err(CliError::Input(format!("expected a Gauss paragraph, got a {}", kind_name(&other)))),
    }
}

/// Presentations pass through; paragraphs are replaced by their group.
pub fn expect_presentation(p: Parsed) -> Result<WirtingerPresentation, CliError> {
    match p {
        Parsed::Presentation(w) => Ok(w),
        Parsed::Paragraph { paragraph, .. } => Ok(group_of_diagram(&paragraph_to_diagram(&paragraph))),
        Parsed::Code { .. } => Err(CliError::Input("expected a presentation or a Gauss paragraph, got a code".into())),
    }
}
