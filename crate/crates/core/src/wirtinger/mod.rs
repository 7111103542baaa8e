//! Wirtinger presentations: every relator says one generator is a conjugate
//! of another, `m_target = w⁻¹ m_source w`.
//!
//! This module holds the presentation types and the group of a Gauss
//! diagram. [`graph`] analyzes the conjugacy graph, [`reduce`] brings
//! realizable presentations to cyclic and simple form, and [`realize`] turns
//! a simple form back into a Gauss diagram.

pub mod graph;
pub mod realize;
pub mod reduce;

use std::collections::HashSet;

use thiserror::Error;

use crate::diagram::{GaussDiagram, Sign};

pub use graph::{abelianization_rank, build_graph, is_realizable, GraphComponent, PresentationGraph};
pub use realize::{realize, realize_canonical};
pub use reduce::{to_cyclic_form, to_simple_form, CanonicalForm, CyclicForm, ReduceError};

/// A generator or its inverse. Generators are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl GenLetter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        GenLetter { generator, inverse: sign == Sign::Negative }
    }

    pub fn sign(self) -> Sign {
        if self.inverse {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn inverted(self) -> Self {
        GenLetter { generator: self.generator, inverse: !self.inverse }
    }
}

pub type Word = Vec<GenLetter>;

pub fn inverse_word(w: &[GenLetter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

/// Cancels adjacent `x x⁻¹` pairs.
pub fn free_reduce(w: impl IntoIterator<Item = GenLetter>) -> Word {
    let mut out: Word = Vec::new();
    for l in w {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// `m_target = conjugator⁻¹ · m_source · conjugator`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relator {
    pub target: usize,
    pub source: usize,
    pub conjugator: Word,
}

impl Relator {
    /// The same relation solved for the source generator.
    pub fn flipped(&self) -> Relator {
        Relator { target: self.source, source: self.target, conjugator: inverse_word(&self.conjugator) }
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        [self.target, self.source].into_iter().chain(self.conjugator.iter().map(|l| l.generator))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relator {relator} refers to generator {generator}, but there are only {count}")]
    UnknownGenerator { relator: usize, generator: usize, count: usize },
    #[error("generator name `{name}` is declared twice")]
    DuplicateName { name: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WirtingerPresentation {
    names: Vec<String>,
    relators: Vec<Relator>,
}

impl WirtingerPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Relator>) -> Result<Self, PresentationError> {
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(PresentationError::DuplicateName { name: name.clone() });
            }
        }
        let count = names.len();
        for (q, r) in relators.iter().enumerate() {
            if let Some(generator) = r.generators().find(|&g| g >= count) {
                return Err(PresentationError::UnknownGenerator { relator: q, generator, count });
            }
        }
        Ok(WirtingerPresentation { names, relators })
    }

    /// Generators named `a`, `b`, ... (or `m1`, `m2`, ... past 26).
    pub fn with_default_names(count: usize, relators: Vec<Relator>) -> Result<Self, PresentationError> {
        Self::new(default_names(count), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    /// At least as many generators as relators.
    pub fn is_admissible(&self) -> bool {
        self.generator_count() >= self.relator_count()
    }

    /// Generator `g` becomes `perm[g]`.
    pub fn relabeled(&self, perm: &[usize]) -> WirtingerPresentation {
        let mut names = vec![String::new(); self.names.len()];
        for (g, name) in self.names.iter().enumerate() {
            names[perm[g]] = name.clone();
        }
        let relators = self
            .relators
            .iter()
            .map(|r| Relator {
                target: perm[r.target],
                source: perm[r.source],
                conjugator: r
                    .conjugator
                    .iter()
                    .map(|l| GenLetter { generator: perm[l.generator], inverse: l.inverse })
                    .collect(),
            })
            .collect();
        WirtingerPresentation { names, relators }
    }

    /// `b^-1 c b` style rendering of a word.
    pub fn format_word(&self, w: &[GenLetter]) -> String {
        format_word(&self.names, w)
    }

    /// `a = b^-1 c b`.
    pub fn format_relator(&self, r: &Relator) -> String {
        format_relator(&self.names, r)
    }
}

pub(crate) fn format_word(names: &[String], w: &[GenLetter]) -> String {
    w.iter()
        .map(|l| if l.inverse { format!("{}^-1", names[l.generator]) } else { names[l.generator].clone() })
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn format_relator(names: &[String], r: &Relator) -> String {
    let conj = format_word(names, &r.conjugator);
    let inv = format_word(names, &inverse_word(&r.conjugator));
    let mut rhs = Vec::new();
    if !inv.is_empty() {
        rhs.push(inv);
    }
    rhs.push(names[r.source].clone());
    if !conj.is_empty() {
        rhs.push(conj);
    }
    format!("{} = {}", names[r.target], rhs.join(" "))
}

pub(crate) fn default_names(count: usize) -> Vec<String> {
    if count <= 26 {
        (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=count).map(|i| format!("m{i}")).collect()
    }
}

/// Generators are the arcs between consecutive arrowheads; each arrow with
/// sign `ε`, tail on arc `a`, and head between arcs `b` (before) and `c`
/// (after) gives `c = a^-ε b a^ε`.
///
/// Arcs are numbered circle by circle; on a circle, arc `j` is the one ending
/// at the `j`-th arrowhead. A circle without arrowheads is a single arc.
pub fn group_of_diagram(d: &GaussDiagram) -> WirtingerPresentation {
    let mut heads: Vec<Vec<usize>> = vec![Vec::new(); d.circle_count()];
    for a in d.arrows() {
        heads[a.head.circle].push(a.head.position);
    }
    let mut first_arc = Vec::with_capacity(d.circle_count());
    let mut count = 0;
    for h in heads.iter_mut() {
        h.sort_unstable();
        first_arc.push(count);
        count += h.len().max(1);
    }
    // Arc holding a point at `position`: the first arc ending at or after it.
    let arc_at = |circle: usize, position: usize| {
        let h = &heads[circle];
        let j = h.partition_point(|&x| x < position);
        first_arc[circle] + if j == h.len() { 0 } else { j }
    };

    let relators = d
        .arrows()
        .iter()
        .map(|a| {
            let h = &heads[a.head.circle];
            let j = h.binary_search(&a.head.position).expect("head is listed");
            let before = first_arc[a.head.circle] + j;
            let after = first_arc[a.head.circle] + (j + 1) % h.len();
            let tail_arc = arc_at(a.tail.circle, a.tail.position);
            Relator { target: after, source: before, conjugator: vec![GenLetter::new(tail_arc, a.sign)] }
        })
        .collect();
    WirtingerPresentation::with_default_names(count, relators).expect("arc indices are in range")
}
