//! Gauss paragraphs, Gauss diagrams, and the conversions between them.
//!
//! A paragraph is an unordered collection of cyclic words. Each crossing `i`
//! contributes one over-letter `i` and one under-letter `i+` or `i-`, where
//! the superscript is the sign of the crossing. In the matching Gauss diagram
//! crossing `i` is an arrow from the over-occurrence (tail) to the
//! under-occurrence (head).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Which strand of a crossing a letter records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

/// A letter of a Gauss paragraph. Crossing indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// The plain letter `i`.
    Over(usize),
    /// The letter `i+` or `i-`; the superscript is the crossing sign.
    Under(usize, Sign),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Over(i) | Letter::Under(i, _) => i,
        }
    }

    pub fn role(self) -> Role {
        match self {
            Letter::Over(_) => Role::Over,
            Letter::Under(..) => Role::Under,
        }
    }

    pub fn is_over(self) -> bool {
        matches!(self, Letter::Over(_))
    }

    fn with_index(self, index: usize) -> Letter {
        match self {
            Letter::Over(_) => Letter::Over(index),
            Letter::Under(_, s) => Letter::Under(index, s),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Over(i) => write!(f, "{i}"),
            Letter::Under(i, s) => write!(f, "{i}{}", s.symbol()),
        }
    }
}

/// Position of a letter: word (circle) and offset inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub circle: usize,
    pub position: usize,
}

/// A single violation of the paragraph rules. Labels are the ones the caller
/// supplied, before any renumbering.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParagraphError {
    #[error("letter `{letter}` occurs more than once")]
    DuplicateLetter { letter: String },
    #[error("crossing {label} has no {missing:?} letter")]
    MissingPartner { label: u64, missing: Role },
    #[error("crossing {label} occurs with both `{label}+` and `{label}-`")]
    BothSigns { label: u64 },
    #[error("word {} has odd length {length}", .word + 1)]
    OddWordLength { word: usize, length: usize },
    #[error("crossing indices must be exactly 1..={crossings}, found {index}")]
    IndexOutOfRange { index: u64, crossings: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("invalid Gauss paragraph: {}", join_errors(.0))]
pub struct InvalidParagraph(pub Vec<ParagraphError>);

fn join_errors(errors: &[ParagraphError]) -> String {
    errors.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}

/// A letter before normalization: arbitrary positive label, `None` for the
/// over-letter.
pub type RawLetter = (u64, Option<Sign>);

#[derive(Default)]
struct LabelUse {
    over: usize,
    positive: usize,
    negative: usize,
}

/// Checks the paragraph rules on raw labels, returning every violation found.
/// Violations are grouped per label in order of first appearance, followed by
/// word-length violations.
pub fn check_labels(words: &[Vec<RawLetter>]) -> Vec<ParagraphError> {
    let mut order = Vec::new();
    let mut uses: BTreeMap<u64, LabelUse> = BTreeMap::new();
    for word in words {
        for &(label, sign) in word {
            let entry = uses.entry(label).or_insert_with(|| {
                order.push(label);
                LabelUse::default()
            });
            match sign {
                None => entry.over += 1,
                Some(Sign::Positive) => entry.positive += 1,
                Some(Sign::Negative) => entry.negative += 1,
            }
        }
    }

    let mut errors = Vec::new();
    for label in order {
        let u = &uses[&label];
        if u.over > 1 {
            errors.push(ParagraphError::DuplicateLetter { letter: label.to_string() });
        }
        if u.positive > 1 {
            errors.push(ParagraphError::DuplicateLetter { letter: format!("{label}+") });
        }
        if u.negative > 1 {
            errors.push(ParagraphError::DuplicateLetter { letter: format!("{label}-") });
        }
        if u.positive > 0 && u.negative > 0 {
            errors.push(ParagraphError::BothSigns { label });
        }
        if u.over == 0 {
            errors.push(ParagraphError::MissingPartner { label, missing: Role::Over });
        } else if u.positive + u.negative == 0 {
            errors.push(ParagraphError::MissingPartner { label, missing: Role::Under });
        }
    }
    for (w, word) in words.iter().enumerate() {
        if word.len() % 2 == 1 {
            errors.push(ParagraphError::OddWordLength { word: w, length: word.len() });
        }
    }
    errors
}

/// A validated Gauss paragraph on crossings `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussParagraph {
    words: Vec<Vec<Letter>>,
    signs: Vec<Sign>,
    over: Vec<Slot>,
    under: Vec<Slot>,
}

impl GaussParagraph {
    /// Validates words whose crossing indices are already dense (`1..=n`).
    pub fn new(words: Vec<Vec<Letter>>) -> Result<Self, InvalidParagraph> {
        let raw: Vec<Vec<RawLetter>> =
            words.iter().map(|w| w.iter().map(|l| (l.index() as u64, sign_of(*l))).collect()).collect();
        let mut errors = check_labels(&raw);
        let n = words.iter().map(Vec::len).sum::<usize>() / 2;
        for l in words.iter().flatten() {
            if l.index() == 0 || l.index() > n {
                let e = ParagraphError::IndexOutOfRange { index: l.index() as u64, crossings: n };
                if !errors.contains(&e) {
                    errors.push(e);
                }
            }
        }
        if !errors.is_empty() {
            return Err(InvalidParagraph(errors));
        }
        Ok(Self::assemble(words, n))
    }

    /// Validates words with arbitrary positive labels and renumbers them to
    /// `1..=n` preserving the numeric order of the labels. Also returns the
    /// original label of each crossing.
    pub fn from_labels(words: Vec<Vec<RawLetter>>) -> Result<(Self, Vec<u64>), InvalidParagraph> {
        let errors = check_labels(&words);
        if !errors.is_empty() {
            return Err(InvalidParagraph(errors));
        }
        let mut labels: Vec<u64> = words.iter().flatten().map(|&(l, _)| l).collect();
        labels.sort_unstable();
        labels.dedup();
        let rank: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i + 1)).collect();
        let words = words
            .into_iter()
            .map(|w| {
                w.into_iter()
                    .map(|(label, sign)| match sign {
                        None => Letter::Over(rank[&label]),
                        Some(s) => Letter::Under(rank[&label], s),
                    })
                    .collect()
            })
            .collect();
        let n = labels.len();
        Ok((Self::assemble(words, n), labels))
    }

    pub fn empty() -> Self {
        Self::assemble(Vec::new(), 0)
    }

    // Callers guarantee validity.
    fn assemble(words: Vec<Vec<Letter>>, n: usize) -> Self {
        let unset = Slot { circle: usize::MAX, position: usize::MAX };
        let mut signs = vec![Sign::Positive; n];
        let mut over = vec![unset; n];
        let mut under = vec![unset; n];
        for (c, word) in words.iter().enumerate() {
            for (p, &l) in word.iter().enumerate() {
                let slot = Slot { circle: c, position: p };
                match l {
                    Letter::Over(i) => over[i - 1] = slot,
                    Letter::Under(i, s) => {
                        under[i - 1] = slot;
                        signs[i - 1] = s;
                    }
                }
            }
        }
        GaussParagraph { words, signs, over, under }
    }

    pub fn words(&self) -> &[Vec<Letter>] {
        &self.words
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn letter_count(&self) -> usize {
        2 * self.signs.len()
    }

    /// Sign of crossing `i` (1-based).
    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i - 1]
    }

    pub fn over_slot(&self, i: usize) -> Slot {
        self.over[i - 1]
    }

    pub fn under_slot(&self, i: usize) -> Slot {
        self.under[i - 1]
    }

    pub fn letter_at(&self, slot: Slot) -> Letter {
        self.words[slot.circle][slot.position]
    }

    /// True if the words do not split into two non-empty groups sharing no
    /// crossing. The empty paragraph and a single word count as connected.
    pub fn is_connected(&self) -> bool {
        let k = self.words.len();
        if k <= 1 {
            return true;
        }
        let mut uf = UnionFind::<usize>::new(k);
        let mut merged = 0;
        for i in 0..self.signs.len() {
            if uf.union(self.over[i].circle, self.under[i].circle) {
                merged += 1;
            }
        }
        merged == k - 1
    }

    /// Checks whether `other` encodes the same paragraph up to word order,
    /// cyclic rotation of words, and renumbering of crossings. Exhaustive over
    /// word orders and rotations, so only meant for small paragraphs.
    pub fn is_isomorphic(&self, other: &GaussParagraph) -> bool {
        if self.crossing_count() != other.crossing_count() || self.word_count() != other.word_count() {
            return false;
        }
        let mut a_lens: Vec<usize> = self.words.iter().map(Vec::len).collect();
        let mut b_lens: Vec<usize> = other.words.iter().map(Vec::len).collect();
        a_lens.sort_unstable();
        b_lens.sort_unstable();
        if a_lens != b_lens {
            return false;
        }
        let mut used = vec![false; other.word_count()];
        let mut map = vec![0usize; self.crossing_count() + 1];
        let mut back = vec![0usize; self.crossing_count() + 1];
        match_words(self, other, 0, &mut used, &mut map, &mut back)
    }
}

fn sign_of(l: Letter) -> Option<Sign> {
    match l {
        Letter::Over(_) => None,
        Letter::Under(_, s) => Some(s),
    }
}

fn match_words(
    a: &GaussParagraph,
    b: &GaussParagraph,
    w: usize,
    used: &mut [bool],
    map: &mut Vec<usize>,
    back: &mut Vec<usize>,
) -> bool {
    if w == a.words.len() {
        return true;
    }
    let word = &a.words[w];
    for cand in 0..b.words.len() {
        if used[cand] || b.words[cand].len() != word.len() {
            continue;
        }
        let target = &b.words[cand];
        let rotations = target.len().max(1);
        for r in 0..rotations {
            let (saved_map, saved_back) = (map.clone(), back.clone());
            let ok = word.iter().enumerate().all(|(p, &la)| {
                let lb = target[(p + r) % target.len()];
                if la.role() != lb.role() || sign_of(la) != sign_of(lb) {
                    return false;
                }
                let (i, j) = (la.index(), lb.index());
                match (map[i], back[j]) {
                    (0, 0) => {
                        map[i] = j;
                        back[j] = i;
                        true
                    }
                    (x, y) => x == j && y == i,
                }
            });
            if ok {
                used[cand] = true;
                if match_words(a, b, w + 1, used, map, back) {
                    return true;
                }
                used[cand] = false;
            }
            *map = saved_map;
            *back = saved_back;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: Slot,
    pub head: Slot,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arrow {arrow} refers to slot {slot:?} outside its circle")]
    SlotOutOfRange { arrow: usize, slot: Slot },
    #[error("slot {slot:?} is used by more than one arrow end")]
    SlotReused { slot: Slot },
    #[error("slot {slot:?} is not the end of any arrow")]
    UncoveredSlot { slot: Slot },
}

/// Oriented circles carrying signed arrows. Every slot on a circle is
/// exactly one arrow end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    circles: Vec<usize>,
    arrows: Vec<Arrow>,
}

impl GaussDiagram {
    /// `circles[c]` is the number of arrow ends on circle `c`.
    pub fn new(circles: Vec<usize>, arrows: Vec<Arrow>) -> Result<Self, DiagramError> {
        let mut seen: Vec<Vec<bool>> = circles.iter().map(|&len| vec![false; len]).collect();
        for (a, arrow) in arrows.iter().enumerate() {
            for slot in [arrow.tail, arrow.head] {
                let cell = seen
                    .get_mut(slot.circle)
                    .and_then(|c| c.get_mut(slot.position))
                    .ok_or(DiagramError::SlotOutOfRange { arrow: a, slot })?;
                if *cell {
                    return Err(DiagramError::SlotReused { slot });
                }
                *cell = true;
            }
        }
        for (c, circle) in seen.iter().enumerate() {
            if let Some(p) = circle.iter().position(|&s| !s) {
                return Err(DiagramError::UncoveredSlot { slot: Slot { circle: c, position: p } });
            }
        }
        Ok(GaussDiagram { circles, arrows })
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circle_len(&self, c: usize) -> usize {
        self.circles[c]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
}

/// Arrow `i` runs from the over-letter of crossing `i + 1` to its
/// under-letter and carries the crossing sign.
pub fn paragraph_to_diagram(p: &GaussParagraph) -> GaussDiagram {
    let arrows = (1..=p.crossing_count())
        .map(|i| Arrow { tail: p.over_slot(i), head: p.under_slot(i), sign: p.sign(i) })
        .collect();
    GaussDiagram { circles: p.words.iter().map(Vec::len).collect(), arrows }
}

/// Reads each circle in its orientation; arrow `a` becomes crossing `a + 1`.
pub fn diagram_to_paragraph(d: &GaussDiagram) -> GaussParagraph {
    let mut words: Vec<Vec<Letter>> = d.circles.iter().map(|&len| vec![Letter::Over(0); len]).collect();
    for (a, arrow) in d.arrows.iter().enumerate() {
        words[arrow.tail.circle][arrow.tail.position] = Letter::Over(a + 1);
        words[arrow.head.circle][arrow.head.position] = Letter::Under(a + 1, arrow.sign);
    }
    GaussParagraph::assemble(words, d.arrows.len())
}

impl From<&GaussParagraph> for GaussDiagram {
    fn from(p: &GaussParagraph) -> Self {
        paragraph_to_diagram(p)
    }
}

impl From<&GaussDiagram> for GaussParagraph {
    fn from(d: &GaussDiagram) -> Self {
        diagram_to_paragraph(d)
    }
}

/// One connected part of a paragraph, renumbered to dense indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub paragraph: GaussParagraph,
    /// `crossings[i - 1]` is the index crossing `i` had in the source.
    pub crossings: Vec<usize>,
    /// Source word of each word of the part.
    pub words: Vec<usize>,
}

/// Partitions the words into minimal groups sharing no crossing. Parts are
/// ordered by their lowest crossing index; crossing-free words come last,
/// one part each, in word order.
pub fn split_components(p: &GaussParagraph) -> Vec<Component> {
    let k = p.word_count();
    let mut uf = UnionFind::<usize>::new(k);
    for i in 1..=p.crossing_count() {
        uf.union(p.over_slot(i).circle, p.under_slot(i).circle);
    }

    // Group words by representative, keyed by the lowest crossing in the group.
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut key_of_rep: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 1..=p.crossing_count() {
        let rep = uf.find(p.over_slot(i).circle);
        key_of_rep.entry(rep).or_insert(i);
    }
    let mut empties = Vec::new();
    for w in 0..k {
        match key_of_rep.get(&uf.find(w)) {
            Some(&key) => groups.entry(key).or_default().push(w),
            None => empties.push(w),
        }
    }

    if groups.len() == 1 && empties.is_empty() {
        return vec![Component {
            paragraph: p.clone(),
            crossings: (1..=p.crossing_count()).collect(),
            words: (0..k).collect(),
        }];
    }

    let mut parts = Vec::with_capacity(groups.len() + empties.len());
    let mut rename = vec![0usize; p.crossing_count() + 1];
    for (_, words) in groups {
        let mut crossings: Vec<usize> = words.iter().flat_map(|&w| p.words[w].iter().map(|l| l.index())).collect();
        crossings.sort_unstable();
        crossings.dedup();
        for (new, &old) in crossings.iter().enumerate() {
            rename[old] = new + 1;
        }
        let part_words =
            words.iter().map(|&w| p.words[w].iter().map(|&l| l.with_index(rename[l.index()])).collect()).collect();
        let paragraph = GaussParagraph::assemble(part_words, crossings.len());
        parts.push(Component { paragraph, crossings, words });
    }
    for w in empties {
        parts.push(Component {
            paragraph: GaussParagraph::assemble(vec![Vec::new()], 0),
            crossings: Vec::new(),
            words: vec![w],
        });
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> GaussParagraph {
        GaussParagraph::new(vec![
            vec![Letter::Over(1), Letter::Under(2, Sign::Positive)],
            vec![Letter::Under(1, Sign::Negative), Letter::Over(2)],
        ])
        .unwrap()
    }

    #[test]
    fn hopf_to_diagram() {
        let d = paragraph_to_diagram(&hopf());
        assert_eq!(d.circle_count(), 2);
        assert_eq!(d.arrows().len(), 2);
        let a1 = d.arrows()[0];
        assert_eq!(a1.tail.circle, 0);
        assert_eq!(a1.head.circle, 1);
        assert_eq!(a1.sign, Sign::Negative);
        assert_eq!(d.arrows()[1].sign, Sign::Positive);
        assert_eq!(diagram_to_paragraph(&d), hopf());
    }

    #[test]
    fn empty_and_curl() {
        let d = paragraph_to_diagram(&GaussParagraph::empty());
        assert_eq!((d.circle_count(), d.arrows().len()), (0, 0));

        let curl = GaussParagraph::new(vec![vec![Letter::Over(1), Letter::Under(1, Sign::Positive)]]).unwrap();
        let d = paragraph_to_diagram(&curl);
        assert_eq!(d.circle_count(), 1);
        assert_eq!(d.arrows()[0].tail.circle, d.arrows()[0].head.circle);
        assert_eq!(d.arrows()[0].sign, Sign::Positive);
    }

    #[test]
    fn lone_circle_reads_as_empty_word() {
        let d = GaussDiagram::new(vec![0], vec![]).unwrap();
        let p = diagram_to_paragraph(&d);
        assert_eq!(p.words(), &[Vec::<Letter>::new()]);
    }

    #[test]
    fn rejects_bad_diagrams() {
        let s = |c, p| Slot { circle: c, position: p };
        let arrow = |t, h| Arrow { tail: t, head: h, sign: Sign::Positive };
        assert!(matches!(
            GaussDiagram::new(vec![2], vec![arrow(s(0, 0), s(0, 2))]),
            Err(DiagramError::SlotOutOfRange { .. })
        ));
        assert!(matches!(
            GaussDiagram::new(vec![2], vec![arrow(s(0, 0), s(0, 0))]),
            Err(DiagramError::SlotReused { .. })
        ));
        assert!(matches!(
            GaussDiagram::new(vec![4], vec![arrow(s(0, 0), s(0, 1))]),
            Err(DiagramError::UncoveredSlot { .. })
        ));
    }

    #[test]
    fn validation_reports_each_violation() {
        let errs = check_labels(&[vec![(1, None), (1, None)], vec![(2, Some(Sign::Positive)), (2, None)]]);
        assert_eq!(
            errs,
            vec![
                ParagraphError::DuplicateLetter { letter: "1".into() },
                ParagraphError::MissingPartner { label: 1, missing: Role::Under },
            ]
        );
        let errs = check_labels(&[vec![(3, None), (3, Some(Sign::Positive)), (3, Some(Sign::Negative))]]);
        assert!(errs.contains(&ParagraphError::BothSigns { label: 3 }));
        assert!(errs.contains(&ParagraphError::OddWordLength { word: 0, length: 3 }));
    }

    #[test]
    fn new_requires_dense_indices() {
        let r = GaussParagraph::new(vec![vec![Letter::Over(2), Letter::Under(2, Sign::Positive)]]);
        assert!(matches!(r, Err(InvalidParagraph(ref e)) if matches!(e[0], ParagraphError::IndexOutOfRange { .. })));
    }

    #[test]
    fn relabeling_preserves_numeric_order() {
        let (p, labels) = GaussParagraph::from_labels(vec![vec![
            (40, None),
            (7, Some(Sign::Negative)),
            (7, None),
            (40, Some(Sign::Positive)),
        ]])
        .unwrap();
        assert_eq!(labels, vec![7, 40]);
        assert_eq!(p.words()[0][0], Letter::Over(2));
        assert_eq!(p.sign(1), Sign::Negative);
    }

    #[test]
    fn split_examples() {
        let parts = split_components(&hopf());
        assert_eq!(parts.len(), 1);

        let two_curls = GaussParagraph::new(vec![
            vec![Letter::Over(1), Letter::Under(1, Sign::Positive)],
            vec![Letter::Over(2), Letter::Under(2, Sign::Positive)],
        ])
        .unwrap();
        let parts = split_components(&two_curls);
        assert_eq!(parts.len(), 2);
        let curl = GaussParagraph::new(vec![vec![Letter::Over(1), Letter::Under(1, Sign::Positive)]]).unwrap();
        assert_eq!(parts[0].paragraph, curl);
        assert_eq!(parts[1].paragraph, curl);
        assert_eq!(parts[1].crossings, vec![2]);
    }

    #[test]
    fn empty_words_split_off() {
        let p = GaussParagraph::new(vec![vec![], vec![Letter::Over(1), Letter::Under(1, Sign::Negative)]]).unwrap();
        let parts = split_components(&p);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].words, vec![1]);
        assert_eq!(parts[1].words, vec![0]);
        assert_eq!(parts[1].paragraph.word_count(), 1);
        assert!(!p.is_connected());
    }

    #[test]
    fn isomorphism_up_to_rotation_and_relabeling() {
        let other = GaussParagraph::new(vec![
            vec![Letter::Over(1), Letter::Under(2, Sign::Negative)],
            vec![Letter::Under(1, Sign::Positive), Letter::Over(2)],
        ])
        .unwrap();
        // swap crossings and rotate the first word
        let relabeled = GaussParagraph::new(vec![
            vec![Letter::Under(1, Sign::Negative), Letter::Over(2)],
            vec![Letter::Under(2, Sign::Positive), Letter::Over(1)],
        ])
        .unwrap();
        assert!(other.is_isomorphic(&relabeled));
        let swapped = GaussParagraph::new(vec![
            vec![Letter::Over(1), Letter::Under(2, Sign::Positive)],
            vec![Letter::Under(1, Sign::Negative), Letter::Over(2)],
        ])
        .unwrap();
        assert!(hopf().is_isomorphic(&swapped));
        assert!(swapped.is_isomorphic(&other));
        let mirror = GaussParagraph::new(vec![
            vec![Letter::Over(1), Letter::Under(2, Sign::Negative)],
            vec![Letter::Under(1, Sign::Negative), Letter::Over(2)],
        ])
        .unwrap();
        assert!(!hopf().is_isomorphic(&mirror));
    }
}
