//! Reductions of realizable presentations.
//!
//! Cyclic form: every conjugacy class is a simple cycle `m_1, ..., m_r` with
//! relators `m_t = w_t⁻¹ m_{t+1} w_t` (indices mod `r`). Simple form: the same,
//! with every conjugator a single letter.

use std::collections::HashSet;
use std::ops::Range;

use thiserror::Error;

use super::graph::build_graph;
use super::{format_relator, format_word, free_reduce, GenLetter, Relator, WirtingerPresentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("the class of generator `{generator}` has Euler characteristic {euler}; only 0 or 1 is realizable")]
    NotRealizable { generator: String, euler: i64 },
}

/// A presentation whose generators are grouped into cycles.
///
/// Generators of each class occupy a contiguous range, and relator `q` reads
/// `m_q = w⁻¹ m_next w` where `next` is the following generator of the same
/// class, wrapping around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicForm {
    presentation: WirtingerPresentation,
    classes: Vec<Range<usize>>,
    trace: Vec<String>,
}

/// Cyclic form in which every conjugator is a single generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    presentation: WirtingerPresentation,
    classes: Vec<Range<usize>>,
    trace: Vec<String>,
}

macro_rules! cycle_accessors {
    ($ty:ty) => {
        impl $ty {
            pub fn presentation(&self) -> &WirtingerPresentation {
                &self.presentation
            }

            pub fn into_presentation(self) -> WirtingerPresentation {
                self.presentation
            }

            /// Generator ranges, one per conjugacy class.
            pub fn classes(&self) -> &[Range<usize>] {
                &self.classes
            }

            /// Human-readable record of every rewrite performed.
            pub fn trace(&self) -> &[String] {
                &self.trace
            }

            pub fn class_of(&self, g: usize) -> usize {
                self.classes.iter().position(|c| c.contains(&g)).expect("generator belongs to a class")
            }

            /// The generator following `g` in its class cycle.
            pub fn next(&self, g: usize) -> usize {
                let c = &self.classes[self.class_of(g)];
                if g + 1 == c.end {
                    c.start
                } else {
                    g + 1
                }
            }
        }
    };
}

cycle_accessors!(CyclicForm);
cycle_accessors!(CanonicalForm);

impl CanonicalForm {
    /// The single conjugating letter of relator `q`.
    pub fn letter(&self, q: usize) -> GenLetter {
        self.presentation.relators()[q].conjugator[0]
    }
}

/// Orients `r` so that `at` is its source (the target for `want_target`).
fn oriented(r: &Relator, at: usize, want_target: bool) -> Relator {
    let ok = if want_target { r.target == at } else { r.source == at };
    if ok {
        r.clone()
    } else {
        r.flipped()
    }
}

fn other_end(r: &Relator, v: usize) -> usize {
    if r.target == v {
        r.source
    } else {
        r.target
    }
}

/// Pads tree classes with a loop, then pulls every tree vertex onto the
/// class cycle by composing conjugators, and finally renumbers generators
/// along the cycles.
pub fn to_cyclic_form(p: &WirtingerPresentation) -> Result<CyclicForm, ReduceError> {
    let graph = build_graph(p);
    if let Some(c) = graph.components.iter().find(|c| !matches!(c.euler(), 0 | 1)) {
        return Err(ReduceError::NotRealizable { generator: p.name(c.vertices[0]).to_string(), euler: c.euler() });
    }

    let names = p.names();
    let mut relators: Vec<Relator> = p.relators().to_vec();
    let mut trace = Vec::new();
    // Per class: vertices in cycle order and the relator linking each to the next.
    let mut cycles: Vec<(Vec<usize>, Vec<Relator>)> = Vec::new();

    for comp in &graph.components {
        let mut edges = comp.edges.clone();
        if comp.euler() == 1 {
            let v = comp.vertices[0];
            let pad = Relator { target: v, source: v, conjugator: vec![GenLetter { generator: v, inverse: false }] };
            trace.push(format!("pad tree class with loop {}", format_relator(names, &pad)));
            edges.push(relators.len());
            relators.push(pad);
        }

        // Strip leaves; whatever keeps positive degree is the cycle.
        let mut degree = std::collections::HashMap::new();
        for &e in &edges {
            *degree.entry(relators[e].target).or_insert(0usize) += 1;
            *degree.entry(relators[e].source).or_insert(0usize) += 1;
        }
        for &v in &comp.vertices {
            degree.entry(v).or_insert(0);
        }
        let mut on_cycle: HashSet<usize> = comp.vertices.iter().copied().collect();
        let mut tree_edges: HashSet<usize> = HashSet::new();
        let mut leaves: Vec<usize> = comp.vertices.iter().copied().filter(|v| degree[v] == 1).collect();
        while let Some(v) = leaves.pop() {
            let e = *edges
                .iter()
                .find(|&&e| !tree_edges.contains(&e) && (relators[e].target == v || relators[e].source == v))
                .expect("leaf has an edge");
            tree_edges.insert(e);
            on_cycle.remove(&v);
            *degree.get_mut(&v).unwrap() -= 1;
            let u = other_end(&relators[e], v);
            let d = degree.get_mut(&u).unwrap();
            *d -= 1;
            if *d == 1 {
                leaves.push(u);
            }
        }

        // Pull tree vertices onto the cycle one at a time.
        loop {
            let pick = edges.iter().copied().filter(|e| tree_edges.contains(e)).find_map(|e| {
                let r = &relators[e];
                match (on_cycle.contains(&r.target), on_cycle.contains(&r.source)) {
                    (true, false) => Some((e, r.target, r.source)),
                    (false, true) => Some((e, r.source, r.target)),
                    _ => None,
                }
            });
            let Some((t, j, k)) = pick else { break };
            let c = edges
                .iter()
                .copied()
                .filter(|e| !tree_edges.contains(e))
                .find(|&e| relators[e].target == j || relators[e].source == j)
                .expect("cycle vertex has a cycle edge");
            let cycle_rel = oriented(&relators[c], j, false);
            let tree_rel = oriented(&relators[t], j, true);
            let merged = Relator {
                target: cycle_rel.target,
                source: k,
                conjugator: free_reduce(tree_rel.conjugator.iter().chain(&cycle_rel.conjugator).copied()),
            };
            trace.push(format!(
                "replace {} using {}: {}",
                format_relator(names, &cycle_rel),
                format_relator(names, &tree_rel),
                format_relator(names, &merged)
            ));
            relators[c] = merged;
            tree_edges.remove(&t);
            on_cycle.insert(k);
        }
        debug_assert_eq!(on_cycle.len(), comp.vertices.len());

        // Walk the cycle from the lowest vertex.
        let v0 = comp.vertices[0];
        let mut order = vec![v0];
        let mut linked = Vec::new();
        if comp.vertices.len() == 1 {
            debug_assert_eq!(edges.len(), 1);
            linked.push(relators[edges[0]].clone());
        } else {
            let mut cur = v0;
            let mut prev: Option<usize> = None;
            loop {
                let e = edges
                    .iter()
                    .copied()
                    .filter(|&e| Some(e) != prev)
                    .find(|&e| relators[e].target == cur || relators[e].source == cur)
                    .expect("cycle continues");
                let next = other_end(&relators[e], cur);
                linked.push(oriented(&relators[e], cur, true));
                prev = Some(e);
                if next == v0 {
                    break;
                }
                order.push(next);
                cur = next;
            }
        }
        debug_assert_eq!(order.len(), linked.len());
        cycles.push((order, linked));
    }

    let mut perm = vec![0; p.generator_count()];
    let mut classes = Vec::with_capacity(cycles.len());
    let mut next_index = 0;
    for (order, _) in &cycles {
        let start = next_index;
        for &v in order {
            perm[v] = next_index;
            next_index += 1;
        }
        classes.push(start..next_index);
    }
    let mut new_names = vec![String::new(); p.generator_count()];
    for (g, name) in names.iter().enumerate() {
        new_names[perm[g]] = name.clone();
    }
    let remap = |w: &Word| -> Word {
        w.iter().map(|l| GenLetter { generator: perm[l.generator], inverse: l.inverse }).collect()
    };
    let relators = cycles
        .iter()
        .flat_map(|(_, linked)| linked.iter())
        .map(|r| Relator { target: perm[r.target], source: perm[r.source], conjugator: remap(&r.conjugator) })
        .collect();
    let presentation = WirtingerPresentation::new(new_names, relators).expect("renumbering stays in range");
    Ok(CyclicForm { presentation, classes, trace })
}

/// Splits long conjugators one letter at a time from the right: with
/// `w = u x`, the relator `m_i = w⁻¹ m_j w` becomes `m_i = x⁻¹ m x` and
/// `m = u⁻¹ m_j u` for a new generator `m` placed between `m_i` and `m_j` in
/// the class cycle. An empty conjugator becomes the source generator itself.
pub fn to_simple_form(c: &CyclicForm) -> CanonicalForm {
    let p = c.presentation();
    let mut names: Vec<String> = p.names().to_vec();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    let mut counter = 1;
    let mut fresh = |taken: &mut HashSet<String>| loop {
        let name = format!("m{counter}");
        counter += 1;
        if taken.insert(name.clone()) {
            return name;
        }
    };

    let mut trace = Vec::new();
    let mut class_entries: Vec<Vec<(usize, Word)>> = Vec::with_capacity(c.classes().len());
    for class in c.classes() {
        let mut entries: Vec<(usize, Word)> = Vec::new();
        for q in class.clone() {
            let r = &p.relators()[q];
            let mut target = r.target;
            let mut w = r.conjugator.clone();
            while w.len() >= 2 {
                let x = w.pop().expect("non-empty");
                let m = names.len();
                names.push(fresh(&mut taken));
                let head = Relator { target, source: m, conjugator: vec![x] };
                let rest = Relator { target: m, source: r.source, conjugator: w.clone() };
                trace.push(format!(
                    "split conjugator {}: new generator {} with {} and {}",
                    format_word(&names, &[w.clone(), vec![x]].concat()),
                    names[m],
                    format_relator(&names, &head),
                    format_relator(&names, &rest)
                ));
                entries.push((target, vec![x]));
                target = m;
            }
            entries.push((target, w));
        }
        let len = entries.len();
        for t in 0..len {
            if entries[t].1.is_empty() {
                let source = entries[(t + 1) % len].0;
                trace.push(format!(
                    "empty conjugator in {} = {}: conjugate by {}",
                    names[entries[t].0], names[source], names[source]
                ));
                entries[t].1 = vec![GenLetter { generator: source, inverse: false }];
            }
        }
        class_entries.push(entries);
    }

    let mut perm = vec![0; names.len()];
    let mut classes = Vec::with_capacity(class_entries.len());
    let mut next_index = 0;
    for entries in &class_entries {
        let start = next_index;
        for (g, _) in entries {
            perm[*g] = next_index;
            next_index += 1;
        }
        classes.push(start..next_index);
    }
    let mut new_names = vec![String::new(); names.len()];
    for (g, name) in names.into_iter().enumerate() {
        new_names[perm[g]] = name;
    }
    let mut relators = Vec::with_capacity(next_index);
    for entries in &class_entries {
        let len = entries.len();
        for t in 0..len {
            let (g, w) = &entries[t];
            let l = w[0];
            relators.push(Relator {
                target: perm[*g],
                source: perm[entries[(t + 1) % len].0],
                conjugator: vec![GenLetter { generator: perm[l.generator], inverse: l.inverse }],
            });
        }
    }
    let presentation = WirtingerPresentation::new(new_names, relators).expect("renumbering stays in range");
    CanonicalForm { presentation, classes, trace }
}
