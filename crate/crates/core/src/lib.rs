//! Virtual links through Gauss paragraphs.
//!
//! * [`diagram`]: Gauss paragraphs and Gauss diagrams.
//! * [`carter`]: the Carter surface of a paragraph and its genus.
//! * [`code_invariants`]: signed Gauss codes, the α/β planarity criterion and
//!   the construction turning a paragraph into a single code.
//! * [`wirtinger`]: Wirtinger presentations, their conjugacy graph, reductions
//!   and realization by diagrams.
//! * [`grouptools`]: finite groups and homomorphism counts.
//! * [`codec`]: text and JSON formats.
//! * [`sample`]: random and exhaustive generators.

pub mod carter;
pub mod code_invariants;
pub mod codec;
pub mod diagram;
pub mod grouptools;
pub mod sample;
pub mod wirtinger;

pub use carter::{build_carter, genus, is_planar_carter, CarterComplex, CarterError, CarterReport};
pub use code_invariants::{
    alpha, beta, is_planar_code, is_planar_criterion, paragraph_to_code, CodeError, CodeSymbol, GaussCode,
    InvariantTable,
};
pub use codec::{detect_kind, parse_code, parse_paragraph, parse_presentation, CodecError, InputKind, ParseError};
pub use diagram::{
    diagram_to_paragraph, paragraph_to_diagram, split_components, Arrow, GaussDiagram, GaussParagraph, Letter, Sign,
    Slot,
};
pub use grouptools::{by_name, count_homomorphisms, symmetric_group, FiniteGroupTable, GroupError, HomError};
pub use wirtinger::{
    abelianization_rank, build_graph, group_of_diagram, is_realizable, realize, to_cyclic_form, to_simple_form,
    GenLetter, Relator, WirtingerPresentation,
};
