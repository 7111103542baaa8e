//! The conjugacy graph of a presentation: one vertex per generator, one edge
//! per relator joining its target and source. Components are the conjugacy
//! classes of generators.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use super::WirtingerPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphComponent {
    /// Sorted generator indices.
    pub vertices: Vec<usize>,
    /// Relator indices, ascending.
    pub edges: Vec<usize>,
}

impl GraphComponent {
    /// `V - E`, loops and parallel edges included.
    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationGraph {
    pub vertex_count: usize,
    /// `(target, source)` of each relator.
    pub edges: Vec<(usize, usize)>,
    /// Ordered by lowest vertex.
    pub components: Vec<GraphComponent>,
}

impl PresentationGraph {
    /// Every component is a tree (χ = 1) or has exactly one cycle (χ = 0).
    pub fn is_realizable(&self) -> bool {
        self.components.iter().all(|c| matches!(c.euler(), 0 | 1))
    }
}

pub fn build_graph(p: &WirtingerPresentation) -> PresentationGraph {
    let n = p.generator_count();
    let edges: Vec<(usize, usize)> = p.relators().iter().map(|r| (r.target, r.source)).collect();
    let mut uf = UnionFind::<usize>::new(n);
    for &(a, b) in &edges {
        uf.union(a, b);
    }
    let mut by_root: BTreeMap<usize, GraphComponent> = BTreeMap::new();
    let mut root_order = Vec::new();
    for v in 0..n {
        let root = uf.find(v);
        by_root
            .entry(root)
            .or_insert_with(|| {
                root_order.push(root);
                GraphComponent { vertices: Vec::new(), edges: Vec::new() }
            })
            .vertices
            .push(v);
    }
    for (q, &(a, _)) in edges.iter().enumerate() {
        by_root.get_mut(&uf.find(a)).expect("vertex has a root").edges.push(q);
    }
    let components = root_order.into_iter().map(|r| by_root.remove(&r).expect("root present")).collect();
    PresentationGraph { vertex_count: n, edges, components }
}

pub fn is_realizable(p: &WirtingerPresentation) -> bool {
    build_graph(p).is_realizable()
}

/// Each relator abelianizes to `m_target = m_source`, so the abelianization
/// is free abelian on the components of the graph.
pub fn abelianization_rank(p: &WirtingerPresentation) -> usize {
    build_graph(p).components.len()
}
