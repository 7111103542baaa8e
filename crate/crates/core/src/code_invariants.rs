//! Signed Gauss codes of single closed curves, their α/β invariants, and the
//! merge construction that turns a connected Gauss paragraph into a code.
//!
//! `S_i` is the part of the cyclic code strictly between `i+` and `i-`, read
//! forward from `i+`, and `S̄_i` adds the two symbols of `i` themselves.
//! `α_i` sums the superscripts over `S_i`. `β_ij` sums the superscripts of the
//! symbols in `S̄_i` whose reversed symbol (same index, opposite superscript)
//! lies in `S_j`, so it counts the chords running from `S̄_i` into `S_j`. A
//! code is planar exactly when every `α_i` and `β_ij` vanishes.
//!
//! Intersecting positions instead of chords (occurrences in both `S̄_i` and
//! `S_j`) looks similar but misjudges planar codes such as
//! `1- 3+ 2- 1+ 3- 2+`, the merged classical Hopf link.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{split_components, GaussParagraph, Letter, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeSymbol {
    /// 1-based.
    pub index: usize,
    pub sign: Sign,
}

impl fmt::Display for CodeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, self.sign.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvalidCode {
    #[error("symbol `{symbol}` occurs more than once")]
    Repeated { symbol: String },
    #[error("index {label} lacks its `{label}{missing}` symbol")]
    Unpaired { label: u64, missing: char },
    #[error("indices must be exactly 1..={count}, found {index}")]
    IndexOutOfRange { index: usize, count: usize },
}

/// A cyclic signed Gauss code in which every index `1..=m` appears once with
/// `+1` and once with `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    symbols: Vec<CodeSymbol>,
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl GaussCode {
    pub fn new(symbols: Vec<CodeSymbol>) -> Result<Self, InvalidCode> {
        let m = symbols.len() / 2;
        if let Some(s) = symbols.iter().find(|s| s.index == 0 || s.index > m) {
            return Err(InvalidCode::IndexOutOfRange { index: s.index, count: m });
        }
        let raw: Vec<(u64, Sign)> = symbols.iter().map(|s| (s.index as u64, s.sign)).collect();
        check_pairs(&raw)?;
        Ok(Self::assemble(symbols))
    }

    /// Accepts arbitrary positive labels and renumbers them to `1..=m`
    /// preserving their numeric order; returns the original labels too.
    pub fn from_labels(symbols: Vec<(u64, Sign)>) -> Result<(Self, Vec<u64>), InvalidCode> {
        check_pairs(&symbols)?;
        let mut labels: Vec<u64> = symbols.iter().map(|&(l, _)| l).collect();
        labels.sort_unstable();
        labels.dedup();
        let rank: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i + 1)).collect();
        let symbols = symbols.into_iter().map(|(l, sign)| CodeSymbol { index: rank[&l], sign }).collect();
        Ok((Self::assemble(symbols), labels))
    }

    fn assemble(symbols: Vec<CodeSymbol>) -> Self {
        let m = symbols.len() / 2;
        let mut plus = vec![0; m];
        let mut minus = vec![0; m];
        for (p, s) in symbols.iter().enumerate() {
            match s.sign {
                Sign::Positive => plus[s.index - 1] = p,
                Sign::Negative => minus[s.index - 1] = p,
            }
        }
        GaussCode { symbols, plus, minus }
    }

    pub fn symbols(&self) -> &[CodeSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of distinct indices `m`.
    pub fn index_count(&self) -> usize {
        self.plus.len()
    }

    /// The same cyclic code written from position `k`.
    pub fn rotated(&self, k: usize) -> GaussCode {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            let k = k % symbols.len();
            symbols.rotate_left(k);
        }
        Self::assemble(symbols)
    }

    /// Renames index `i` to `perm[i - 1]`; `perm` must be a permutation of
    /// `1..=m`.
    pub fn relabeled(&self, perm: &[usize]) -> GaussCode {
        let symbols = self.symbols.iter().map(|s| CodeSymbol { index: perm[s.index - 1], sign: s.sign }).collect();
        Self::assemble(symbols)
    }

    fn check_index(&self, i: usize) -> Result<(), InvariantError> {
        if i == 0 || i > self.index_count() {
            Err(InvariantError::IndexOutOfRange { index: i, count: self.index_count() })
        } else {
            Ok(())
        }
    }
}

fn check_pairs(symbols: &[(u64, Sign)]) -> Result<(), InvalidCode> {
    let mut seen: BTreeMap<u64, (bool, bool)> = BTreeMap::new();
    for &(label, sign) in symbols {
        let e = seen.entry(label).or_default();
        let slot = match sign {
            Sign::Positive => &mut e.0,
            Sign::Negative => &mut e.1,
        };
        if *slot {
            return Err(InvalidCode::Repeated { symbol: format!("{label}{}", sign.symbol()) });
        }
        *slot = true;
    }
    for (&label, &(p, m)) in &seen {
        if !p || !m {
            let missing = if p { '-' } else { '+' };
            return Err(InvalidCode::Unpaired { label, missing });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("index {index} outside 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
}

/// Cyclic prefix sums of per-position values, for O(1) sums over arcs.
struct ArcSums {
    prefix: Vec<i64>,
}

impl ArcSums {
    fn new(values: impl IntoIterator<Item = i64>) -> Self {
        let mut prefix = vec![0];
        let mut acc = 0;
        for v in values {
            acc += v;
            prefix.push(acc);
        }
        ArcSums { prefix }
    }

    fn of_signs(code: &GaussCode) -> Self {
        Self::new(code.symbols.iter().map(|s| s.sign.value()))
    }

    /// Sum over `len` consecutive positions starting at `start`, wrapping.
    fn arc(&self, start: usize, len: usize) -> i64 {
        let n = self.prefix.len() - 1;
        if len == 0 {
            return 0;
        }
        let end = start + len;
        if end <= n {
            self.prefix[end] - self.prefix[start]
        } else {
            (self.prefix[n] - self.prefix[start]) + self.prefix[end - n]
        }
    }
}

/// `S_i` as an arc: start position and length.
fn open_arc(code: &GaussCode, i: usize) -> (usize, usize) {
    let n = code.len();
    let (p, m) = (code.plus[i - 1], code.minus[i - 1]);
    ((p + 1) % n, (m + n - p - 1) % n)
}

/// Whether position `x` lies on the arc `(start, len)`.
fn on_arc(n: usize, (start, len): (usize, usize), x: usize) -> bool {
    (x + n - start) % n < len
}

impl GaussCode {
    fn partner(&self, x: usize) -> usize {
        let s = self.symbols[x];
        match s.sign {
            Sign::Positive => self.minus[s.index - 1],
            Sign::Negative => self.plus[s.index - 1],
        }
    }

    /// Superscript at each position whose partner lies in `S̄_i`, else 0.
    fn partner_weights(&self, i: usize) -> ArcSums {
        let n = self.len();
        let (start, len) = open_arc(self, i);
        let closed = ((start + n - 1) % n, len + 2);
        ArcSums::new((0..n).map(|q| {
            let x = self.partner(q);
            if on_arc(n, closed, x) {
                self.symbols[x].sign.value()
            } else {
                0
            }
        }))
    }
}

pub fn alpha(code: &GaussCode, i: usize) -> Result<i64, InvariantError> {
    code.check_index(i)?;
    let (start, len) = open_arc(code, i);
    Ok(ArcSums::of_signs(code).arc(start, len))
}

/// Sum of the superscripts of the symbols `x` in `S̄_i = S_i ∪ {i+, i-}`
/// whose reversed symbol lies in `S_j`.
pub fn beta(code: &GaussCode, i: usize, j: usize) -> Result<i64, InvariantError> {
    code.check_index(i)?;
    code.check_index(j)?;
    let (start, len) = open_arc(code, j);
    Ok(code.partner_weights(i).arc(start, len))
}

/// All `α_i` and `β_ij` of a code, computed in O(m²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    m: usize,
    alpha: Vec<i64>,
    beta: Vec<i64>,
}

impl InvariantTable {
    pub fn new(code: &GaussCode) -> Self {
        let m = code.index_count();
        let signs = ArcSums::of_signs(code);
        let opens: Vec<_> = (1..=m).map(|i| open_arc(code, i)).collect();
        let alpha = opens.iter().map(|&(s, l)| signs.arc(s, l)).collect();
        let mut beta = Vec::with_capacity(m * m);
        for i in 1..=m {
            let weights = code.partner_weights(i);
            beta.extend(opens.iter().map(|&(s, l)| weights.arc(s, l)));
        }
        InvariantTable { m, alpha, beta }
    }

    pub fn index_count(&self) -> usize {
        self.m
    }

    /// `α_i`, 1-based.
    pub fn alpha(&self, i: usize) -> i64 {
        self.alpha[i - 1]
    }

    /// `β_ij`, 1-based.
    pub fn beta(&self, i: usize, j: usize) -> i64 {
        self.beta[(i - 1) * self.m + (j - 1)]
    }

    pub fn vanishes(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(|&v| v == 0)
    }
}

pub fn is_planar_code(code: &GaussCode) -> bool {
    InvariantTable::new(code).vanishes()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("paragraph splits into {parts} disjoint parts; convert each part separately")]
    SplittableInput { parts: usize },
}

/// One doubling step of the merge construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeStep {
    /// Crossing whose over- and under-letters joined two words.
    pub crossing: usize,
    /// Index given to the doubled copy of `crossing` (the tilde crossing).
    pub fresh: usize,
    pub sign: Sign,
}

impl fmt::Display for MergeStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.sign.symbol();
        write!(
            f,
            "double crossing {c}: {c} -> {c} ~{c}{s}, {c}{s} -> {c}{s} ~{c}; ~{c} renamed {t}",
            c = self.crossing,
            t = self.fresh
        )
    }
}

struct MergeState {
    words: Vec<Vec<Letter>>,
    signs: Vec<Sign>,
}

impl MergeState {
    fn from_paragraph(p: &GaussParagraph) -> Self {
        let signs = (1..=p.crossing_count()).map(|i| p.sign(i)).collect();
        MergeState { words: p.words().to_vec(), signs }
    }

    /// Crossings whose over- and under-letters lie in different words, in
    /// increasing order.
    fn candidates(&self) -> Vec<usize> {
        let n = self.signs.len();
        let mut over_word = vec![0; n + 1];
        let mut under_word = vec![0; n + 1];
        for (w, word) in self.words.iter().enumerate() {
            for l in word {
                match l {
                    Letter::Over(i) => over_word[*i] = w,
                    Letter::Under(i, _) => under_word[*i] = w,
                }
            }
        }
        (1..=n).filter(|&i| over_word[i] != under_word[i]).collect()
    }

    fn merge(&mut self, i: usize) -> MergeStep {
        let find = |words: &[Vec<Letter>], want: &dyn Fn(Letter) -> bool| {
            words
                .iter()
                .enumerate()
                .find_map(|(w, word)| word.iter().position(|&l| want(l)).map(|p| (w, p)))
                .expect("crossing present")
        };
        let (host, at) = find(&self.words, &|l| l == Letter::Over(i));
        let (guest, under_at) = find(&self.words, &|l| matches!(l, Letter::Under(j, _) if j == i));
        debug_assert_ne!(host, guest);

        let eps = self.signs[i - 1];
        self.signs.push(eps);
        let fresh = self.signs.len();

        // Guest rotated so that the under-letter of `i` is last, followed by
        // the over-letter of the fresh crossing.
        let g = &self.words[guest];
        let mut inserted: Vec<Letter> = g[under_at + 1..].iter().chain(&g[..=under_at]).copied().collect();
        inserted.push(Letter::Over(fresh));

        let h = &self.words[host];
        let mut merged = Vec::with_capacity(h.len() + inserted.len() + 1);
        merged.extend_from_slice(&h[..=at]);
        merged.push(Letter::Under(fresh, eps));
        merged.extend(inserted);
        merged.extend_from_slice(&h[at + 1..]);

        self.words[host] = merged;
        self.words.remove(guest);
        MergeStep { crossing: i, fresh, sign: eps }
    }

    /// Over-letters take the opposite of their crossing sign.
    fn into_code(self) -> GaussCode {
        debug_assert!(self.words.len() <= 1);
        let signs = self.signs;
        let symbols = self
            .words
            .into_iter()
            .flatten()
            .map(|l| match l {
                Letter::Over(i) => CodeSymbol { index: i, sign: -signs[i - 1] },
                Letter::Under(i, s) => CodeSymbol { index: i, sign: s },
            })
            .collect();
        GaussCode::assemble(symbols)
    }
}

fn require_connected(p: &GaussParagraph) -> Result<(), CodeError> {
    if p.word_count() > 1 && !p.is_connected() {
        return Err(CodeError::SplittableInput { parts: split_components(p).len() });
    }
    Ok(())
}

/// The Gauss code associated to a connected paragraph, merging at the lowest
/// connecting crossing each time. Returns the merge steps alongside.
pub fn paragraph_to_code_traced(p: &GaussParagraph) -> Result<(GaussCode, Vec<MergeStep>), CodeError> {
    require_connected(p)?;
    let mut state = MergeState::from_paragraph(p);
    let mut steps = Vec::new();
    while state.words.len() > 1 {
        let i = state.candidates()[0];
        steps.push(state.merge(i));
    }
    Ok((state.into_code(), steps))
}

pub fn paragraph_to_code(p: &GaussParagraph) -> Result<GaussCode, CodeError> {
    paragraph_to_code_traced(p).map(|(code, _)| code)
}

/// Every code reachable by some order of merges: one per sequence of
/// connecting crossings. Exponential in the word count.
pub fn associated_codes(p: &GaussParagraph) -> Result<Vec<GaussCode>, CodeError> {
    require_connected(p)?;
    fn walk(state: MergeState, out: &mut Vec<GaussCode>) {
        if state.words.len() <= 1 {
            out.push(state.into_code());
            return;
        }
        for i in state.candidates() {
            let mut next = MergeState { words: state.words.clone(), signs: state.signs.clone() };
            next.merge(i);
            walk(next, out);
        }
    }
    let mut out = Vec::new();
    walk(MergeState::from_paragraph(p), &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeVerdict {
    pub code: GaussCode,
    pub planar: bool,
}

/// Per-component verdicts of the code criterion, in the order of
/// [`split_components`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub components: Vec<CodeVerdict>,
}

impl CriterionReport {
    pub fn planar(&self) -> bool {
        self.components.iter().all(|c| c.planar)
    }
}

pub fn is_planar_criterion(p: &GaussParagraph) -> CriterionReport {
    let components = split_components(p)
        .into_iter()
        .map(|part| {
            let code = paragraph_to_code(&part.paragraph).expect("components are connected");
            let planar = is_planar_code(&code);
            CodeVerdict { code, planar }
        })
        .collect();
    CriterionReport { components }
}
