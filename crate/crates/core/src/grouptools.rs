//! Finite groups given by multiplication tables, and counting homomorphisms
//! from a presented group into them.
//!
//! The count is a complete search over generator images. Relators whose
//! conjugator is already assigned determine their remaining end, so only a
//! few generators are actually branched on.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::wirtinger::{GenLetter, WirtingerPresentation};

/// Largest number of assignments the search may enumerate.
pub const SEARCH_LIMIT: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("the table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is not an element of a group of order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("no element acts as identity")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("({a} {b}) {c} differs from {a} ({b} {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("S{n} is not supported; use n from 1 to 5")]
    TooLarge { n: usize },
    #[error("unknown group `{name}`; expected S1..S5 or Z1..Z12")]
    UnknownGroup { name: String },
    #[error("cannot read group table: {message}")]
    Json { message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("search over {order}^{branches} assignments exceeds the limit of {limit}")]
    SearchTooLarge { order: usize, branches: usize, limit: u128 },
}

/// A finite group on elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    order: usize,
    mul: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum TableJson {
    Named {
        #[serde(default)]
        name: Option<String>,
        table: Vec<Vec<usize>>,
    },
    Bare(Vec<Vec<usize>>),
}

impl FiniteGroupTable {
    /// `table[a][b]` is the product `a b`. The group axioms are checked.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        let mut mul = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare { row, len: entries.len(), order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
                mul.push(value);
            }
        }
        let m = |a: usize, b: usize| mul[a * order + b];
        let identity =
            (0..order).find(|&e| (0..order).all(|x| m(e, x) == x && m(x, e) == x)).ok_or(GroupError::NoIdentity)?;
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| m(x, y) == identity && m(y, x) == identity)
                    .ok_or(GroupError::NoInverse { element: x })
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..order {
            for b in 0..order {
                let ab = m(a, b);
                for c in 0..order {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteGroupTable { name: name.into(), order, mul, inverse, identity })
    }

    /// Reads `{"name": ..., "table": [[...]]}` or a bare array of rows.
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let parsed: TableJson = serde_json::from_str(text).map_err(|e| GroupError::Json { message: e.to_string() })?;
        match parsed {
            TableJson::Named { name, table } => Self::new(name.unwrap_or_else(|| "table".into()), table),
            TableJson::Bare(table) => Self::new("table", table),
        }
    }

    pub fn to_json(&self) -> String {
        let table = (0..self.order).map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec()).collect();
        serde_json::to_string(&TableJson::Named { name: Some(self.name.clone()), table }).expect("serializable")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `b⁻¹ a b`.
    #[inline]
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// Product of a word under the assignment `images`.
    pub fn eval(&self, word: &[GenLetter], images: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, l| {
            let x = images[l.generator];
            self.mul(acc, if l.inverse { self.inv(x) } else { x })
        })
    }
}

/// The symmetric group on `n` points, elements in lexicographic order of
/// their one-line notation (element 0 is the identity), composed right to
/// left.
pub fn symmetric_group(n: usize) -> Result<FiniteGroupTable, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(GroupError::TooLarge { n });
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permutations(&mut current, 0, &mut perms);
    perms.sort();
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed under composition");
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                    index(&pq)
                })
                .collect()
        })
        .collect();
    FiniteGroupTable::new(format!("S{n}"), table)
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroupTable, GroupError> {
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroupTable::new(format!("Z{n}"), table)
}

/// `S1`..`S5` or `Z1`..`Z12`, case-insensitive.
pub fn by_name(name: &str) -> Result<FiniteGroupTable, GroupError> {
    let unknown = || GroupError::UnknownGroup { name: name.to_string() };
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    match kind {
        'S' => symmetric_group(n),
        'Z' | 'C' if (1..=12).contains(&n) => cyclic_group(n),
        _ => Err(unknown()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    /// Try every element for the generator.
    Branch(usize),
    /// Relator `q` determines its target from the source.
    ForceTarget(usize),
    /// Relator `q` determines its source from the target.
    ForceSource(usize),
    /// All generators of relator `q` are known; test it.
    Check(usize),
}

struct Plan {
    steps: Vec<Step>,
    branches: usize,
}

fn propagate(p: &WirtingerPresentation, assigned: &mut [bool], done: &mut [bool], steps: &mut Vec<Step>) -> usize {
    let mut forced = 0;
    loop {
        let mut changed = false;
        for (q, r) in p.relators().iter().enumerate() {
            if done[q] || !r.conjugator.iter().all(|l| assigned[l.generator]) {
                continue;
            }
            match (assigned[r.target], assigned[r.source]) {
                (true, true) => {
                    steps.push(Step::Check(q));
                    done[q] = true;
                }
                (false, true) => {
                    steps.push(Step::ForceTarget(q));
                    assigned[r.target] = true;
                    done[q] = true;
                    forced += 1;
                    changed = true;
                }
                (true, false) => {
                    steps.push(Step::ForceSource(q));
                    assigned[r.source] = true;
                    done[q] = true;
                    forced += 1;
                    changed = true;
                }
                (false, false) => {}
            }
        }
        if !changed {
            return forced;
        }
    }
}

fn build_plan(p: &WirtingerPresentation) -> Plan {
    let n = p.generator_count();
    let mut assigned = vec![false; n];
    let mut done = vec![false; p.relator_count()];
    let mut steps = Vec::new();
    let mut branches = 0;
    while let Some(first) = assigned.iter().position(|a| !a) {
        // Branch on the generator that forces the most others.
        let mut best = (first, 0);
        for g in first..n {
            if assigned[g] {
                continue;
            }
            let mut a = assigned.clone();
            let mut d = done.clone();
            a[g] = true;
            let forced = propagate(p, &mut a, &mut d, &mut Vec::new());
            if forced > best.1 {
                best = (g, forced);
            }
        }
        steps.push(Step::Branch(best.0));
        assigned[best.0] = true;
        branches += 1;
        propagate(p, &mut assigned, &mut done, &mut steps);
    }
    propagate(p, &mut assigned, &mut done, &mut steps);
    Plan { steps, branches }
}

fn run(p: &WirtingerPresentation, h: &FiniteGroupTable, steps: &[Step], images: &mut [usize]) -> u64 {
    let Some((&step, rest)) = steps.split_first() else { return 1 };
    let rels = p.relators();
    match step {
        Step::Branch(g) => {
            let mut total = 0;
            for x in 0..h.order() {
                images[g] = x;
                total += run(p, h, rest, images);
            }
            total
        }
        Step::ForceTarget(q) => {
            let r = &rels[q];
            images[r.target] = h.conjugate(images[r.source], h.eval(&r.conjugator, images));
            run(p, h, rest, images)
        }
        Step::ForceSource(q) => {
            let r = &rels[q];
            let w = h.eval(&r.conjugator, images);
            images[r.source] = h.conjugate(images[r.target], h.inv(w));
            run(p, h, rest, images)
        }
        Step::Check(q) => {
            let r = &rels[q];
            if images[r.target] == h.conjugate(images[r.source], h.eval(&r.conjugator, images)) {
                run(p, h, rest, images)
            } else {
                0
            }
        }
    }
}

/// Number of homomorphisms from the presented group to `h`, i.e. the number
/// of generator assignments satisfying every relator.
pub fn count_homomorphisms(p: &WirtingerPresentation, h: &FiniteGroupTable) -> Result<u64, HomError> {
    let plan = build_plan(p);
    let size = (h.order() as u128).checked_pow(plan.branches as u32);
    if size.is_none_or(|s| s > SEARCH_LIMIT) {
        return Err(HomError::SearchTooLarge { order: h.order(), branches: plan.branches, limit: SEARCH_LIMIT });
    }
    let n = p.generator_count();
    match plan.steps.split_first() {
        Some((&Step::Branch(g), rest)) => Ok((0..h.order())
            .into_par_iter()
            .map(|x| {
                let mut images = vec![0; n];
                images[g] = x;
                run(p, h, rest, &mut images)
            })
            .sum()),
        _ => Ok(run(p, h, &plan.steps, &mut vec![0; n])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wirtinger::Relator;

    fn l(generator: usize, inverse: bool) -> GenLetter {
        GenLetter { generator, inverse }
    }

    fn brute(p: &WirtingerPresentation, h: &FiniteGroupTable) -> u64 {
        let n = p.generator_count();
        let mut images = vec![0; n];
        let mut count = 0;
        loop {
            if p.relators()
                .iter()
                .all(|r| images[r.target] == h.conjugate(images[r.source], h.eval(&r.conjugator, &images)))
            {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return count;
                }
                images[k] += 1;
                if images[k] < h.order() {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn symmetric_orders() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let g = symmetric_group(n).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.identity(), 0);
        }
        assert_eq!(symmetric_group(6), Err(GroupError::TooLarge { n: 6 }));
        assert_eq!(symmetric_group(0), Err(GroupError::TooLarge { n: 0 }));
    }

    #[test]
    fn names() {
        assert_eq!(by_name("s3").unwrap().order(), 6);
        assert_eq!(by_name("Z5").unwrap().order(), 5);
        assert!(matches!(by_name("Q8"), Err(GroupError::UnknownGroup { .. })));
        assert!(matches!(by_name("S"), Err(GroupError::UnknownGroup { .. })));
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(FiniteGroupTable::new("x", vec![]), Err(GroupError::Empty));
        assert!(matches!(FiniteGroupTable::new("x", vec![vec![0, 1], vec![1]]), Err(GroupError::NotSquare { .. })));
        assert!(matches!(FiniteGroupTable::new("x", vec![vec![0, 0], vec![0, 0]]), Err(GroupError::NoIdentity)));
        assert!(matches!(
            FiniteGroupTable::new("x", vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]]),
            Err(GroupError::NoInverse { element: 1 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = symmetric_group(3).unwrap();
        let back = FiniteGroupTable::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(FiniteGroupTable::from_json("[[0,1],[1,0]]").unwrap().order(), 2);
        assert!(matches!(FiniteGroupTable::from_json("{"), Err(GroupError::Json { .. })));
    }

    #[test]
    fn hopf_into_s3() {
        // b = a b a^-1, a = b^-1 a b: commuting pairs
        let p = WirtingerPresentation::with_default_names(
            2,
            vec![
                Relator { target: 1, source: 1, conjugator: vec![l(0, true)] },
                Relator { target: 0, source: 0, conjugator: vec![l(1, false)] },
            ],
        )
        .unwrap();
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(count_homomorphisms(&p, &s3), Ok(18));
        assert_eq!(brute(&p, &s3), 18);
    }

    #[test]
    fn trefoil_into_s3() {
        let p = WirtingerPresentation::with_default_names(
            3,
            vec![
                Relator { target: 1, source: 2, conjugator: vec![l(0, false)] },
                Relator { target: 2, source: 0, conjugator: vec![l(1, false)] },
                Relator { target: 0, source: 1, conjugator: vec![l(2, false)] },
            ],
        )
        .unwrap();
        let s3 = symmetric_group(3).unwrap();
        // 6 with all generators equal, 6 onto
        assert_eq!(count_homomorphisms(&p, &s3), Ok(12));
        assert_eq!(brute(&p, &s3), 12);
    }

    #[test]
    fn free_group_counts() {
        let p = WirtingerPresentation::with_default_names(3, vec![]).unwrap();
        assert_eq!(count_homomorphisms(&p, &symmetric_group(4).unwrap()), Ok(24 * 24 * 24));
        let trivial = WirtingerPresentation::with_default_names(0, vec![]).unwrap();
        assert_eq!(count_homomorphisms(&trivial, &symmetric_group(3).unwrap()), Ok(1));
    }

    #[test]
    fn guard_counts_branches() {
        let p = WirtingerPresentation::with_default_names(6, vec![]).unwrap();
        assert!(matches!(
            count_homomorphisms(&p, &symmetric_group(5).unwrap()),
            Err(HomError::SearchTooLarge { branches: 6, .. })
        ));
        // a long chain is forced from one generator
        let chain = (1..30).map(|g| Relator { target: g, source: g - 1, conjugator: vec![l(0, false)] }).collect();
        let p = WirtingerPresentation::with_default_names(30, chain).unwrap();
        assert_eq!(count_homomorphisms(&p, &symmetric_group(5).unwrap()), Ok(120));
    }

    #[test]
    fn matches_brute_force_on_mixed() {
        let p = WirtingerPresentation::with_default_names(
            4,
            vec![
                Relator { target: 0, source: 1, conjugator: vec![l(2, false), l(3, true)] },
                Relator { target: 2, source: 2, conjugator: vec![l(0, false)] },
                Relator { target: 3, source: 1, conjugator: vec![] },
            ],
        )
        .unwrap();
        for h in [symmetric_group(3).unwrap(), cyclic_group(4).unwrap(), symmetric_group(2).unwrap()] {
            assert_eq!(count_homomorphisms(&p, &h).unwrap(), brute(&p, &h));
        }
    }
}
