//! The Carter surface of a Gauss paragraph and its genus.
//!
//! The 4-valent graph has one vertex per crossing and one edge per pair of
//! cyclically adjacent letters. Faces are traced by always turning left:
//! arriving at a letter of crossing `i`, the walk continues from the partner
//! letter of `i` in a direction fixed by the crossing sign. Every edge is
//! walked once in each direction, so the whole trace is linear in the number
//! of letters.

use std::fmt;

use thiserror::Error;

use crate::diagram::{split_components, GaussParagraph, Letter, Sign};

/// An edge walked in word order (`forward`) or against it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectedArc {
    pub edge: usize,
    pub forward: bool,
}

impl DirectedArc {
    /// `2 * edge`, plus one when walked backward.
    pub fn id(self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }

    pub fn from_id(id: usize) -> Self {
        DirectedArc { edge: id / 2, forward: id.is_multiple_of(2) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CarterError {
    #[error("paragraph splits into {parts} parts; build one surface per part")]
    Splittable { parts: usize },
    #[error("Euler characteristic {euler} is odd")]
    OddCharacteristic { euler: i64 },
}

/// Cell complex of a connected paragraph. Edge `e` joins the letter at
/// flattened position `e` to its cyclic successor in the same word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarterComplex {
    vertex_count: usize,
    letters: Vec<Letter>,
    successor: Vec<usize>,
    /// Arc ids of all faces, one face after another.
    arcs: Vec<u32>,
    /// Face `f` is `arcs[face_starts[f]..face_starts[f + 1]]`.
    face_starts: Vec<usize>,
}

impl CarterComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.letters.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_starts.len() - 1
    }

    /// Boundary of face `f`, in walking order.
    pub fn face(&self, f: usize) -> impl ExactSizeIterator<Item = DirectedArc> + '_ {
        self.arcs[self.face_starts[f]..self.face_starts[f + 1]].iter().map(|&id| DirectedArc::from_id(id as usize))
    }

    /// Endpoints of edge `e` as letters, in word order.
    pub fn edge(&self, e: usize) -> (Letter, Letter) {
        (self.letters[e], self.letters[self.successor[e]])
    }

    /// `V - E + F`; a paragraph without letters is a sphere by convention.
    pub fn euler_characteristic(&self) -> i64 {
        if self.letters.is_empty() {
            return 2;
        }
        self.vertex_count as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// A face boundary written as `(a b)+(b c)-...`: each arc lists the
    /// letter it leaves, the letter it reaches, and whether it runs in word
    /// order.
    pub fn face_notation(&self, face: usize) -> String {
        self.face(face).map(|arc| self.arc_notation(arc)).collect()
    }

    pub fn arc_notation(&self, arc: DirectedArc) -> String {
        let (a, b) = self.edge(arc.edge);
        if arc.forward {
            format!("({a} {b})+")
        } else {
            format!("({b} {a})-")
        }
    }
}

/// Traces the faces of a connected paragraph.
pub fn build_carter(p: &GaussParagraph) -> Result<CarterComplex, CarterError> {
    if !p.is_connected() {
        return Err(CarterError::Splittable { parts: split_components(p).len() });
    }

    let total = p.letter_count();
    assert!(2 * total < u32::MAX as usize, "paragraph too large to trace");
    let mut letters = Vec::with_capacity(total);
    let mut successor = Vec::with_capacity(total);
    for word in p.words() {
        let start = letters.len();
        let len = word.len();
        letters.extend_from_slice(word);
        successor.extend((0..len).map(|k| start + (k + 1) % len));
    }

    // Flat positions of the over- and under-letter of each crossing.
    let n = p.crossing_count();
    let mut over_at = vec![0u32; n + 1];
    let mut under_at = vec![0u32; n + 1];
    let mut turn_of = vec![false; n + 1];
    for (at, &l) in letters.iter().enumerate() {
        match l {
            Letter::Over(i) => over_at[i] = at as u32,
            Letter::Under(i, s) => {
                under_at[i] = at as u32;
                turn_of[i] = s == Sign::Positive;
            }
        }
    }

    // Arriving at a letter, the next arc leaves its partner letter, forward
    // when the arrival direction times `turn` is positive. `turn` is the
    // crossing sign at an over-letter and minus the sign at an under-letter.
    let mut partner = vec![0u32; total];
    let mut predecessor = vec![0u32; total];
    let mut turn = vec![false; total];
    for (at, &l) in letters.iter().enumerate() {
        let (to, t) = match l {
            Letter::Over(i) => (under_at[i], turn_of[i]),
            Letter::Under(i, _) => (over_at[i], !turn_of[i]),
        };
        partner[at] = to;
        turn[at] = t;
        predecessor[successor[at]] = at as u32;
    }
    drop((over_at, under_at, turn_of));
    let leave = |from: u32, forward: bool| {
        if forward {
            2 * from
        } else {
            2 * predecessor[from as usize] + 1
        }
    };
    // Arc ids: 2e walks edge e forward, 2e + 1 backward.
    let mut next = vec![0u32; 2 * total];
    for e in 0..total {
        let ahead = successor[e];
        next[2 * e] = leave(partner[ahead], turn[ahead]);
        next[2 * e + 1] = leave(partner[e], !turn[e]);
    }
    drop((partner, predecessor, turn));

    // Walked arcs are marked by overwriting their successor.
    const WALKED: u32 = u32::MAX;
    let mut arcs = Vec::with_capacity(2 * total);
    let mut face_starts = vec![0];
    for start in 0..2 * total {
        if next[start] == WALKED {
            continue;
        }
        let mut id = start;
        while next[id] != WALKED {
            arcs.push(id as u32);
            id = std::mem::replace(&mut next[id], WALKED) as usize;
        }
        assert_eq!(id, start, "face tracing revisited an arc");
        face_starts.push(arcs.len());
    }

    Ok(CarterComplex { vertex_count: p.crossing_count(), letters, successor, arcs, face_starts })
}

/// Least genus of an oriented surface carrying the paragraph.
pub fn genus(c: &CarterComplex) -> Result<u32, CarterError> {
    let euler = c.euler_characteristic();
    if euler % 2 != 0 {
        return Err(CarterError::OddCharacteristic { euler });
    }
    Ok(((2 - euler) / 2) as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGenus {
    pub complex: CarterComplex,
    pub euler: i64,
    pub genus: u32,
}

/// Per-component Carter surfaces, in the order of [`split_components`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarterReport {
    pub components: Vec<ComponentGenus>,
}

impl CarterReport {
    /// Sum of the component genera.
    pub fn total_genus(&self) -> u32 {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn planar(&self) -> bool {
        self.components.iter().all(|c| c.genus == 0)
    }
}

impl fmt::Display for CarterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            writeln!(f, "component {}: genus {}, euler {}, faces {}", k + 1, c.genus, c.euler, c.complex.face_count())?;
        }
        write!(f, "total genus {}", self.total_genus())
    }
}

pub fn is_planar_carter(p: &GaussParagraph) -> CarterReport {
    let components = split_components(p)
        .into_iter()
        .map(|part| {
            let complex = build_carter(&part.paragraph).expect("components are connected");
            let genus = genus(&complex).expect("traced surfaces have even characteristic");
            ComponentGenus { euler: complex.euler_characteristic(), complex, genus }
        })
        .collect();
    CarterReport { components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    const P: Sign = Sign::Positive;
    const N: Sign = Sign::Negative;

    fn para(words: &[&[Letter]]) -> GaussParagraph {
        GaussParagraph::new(words.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    #[test]
    fn hopf_is_a_torus() {
        let p = para(&[&[Over(1), Under(2, P)], &[Under(1, N), Over(2)]]);
        let c = build_carter(&p).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (2, 4, 2));
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(genus(&c), Ok(1));
        assert_eq!(c.face_notation(0), "(1 2+)+(2 1-)-(1 2+)-(2 1-)+");
        assert_eq!(c.face_notation(1), "(2+ 1)-(1- 2)+(2+ 1)+(1- 2)-");
    }

    #[test]
    fn curl_is_a_sphere() {
        let p = para(&[&[Over(1), Under(1, P)]]);
        let c = build_carter(&p).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (1, 2, 3));
        assert_eq!(genus(&c), Ok(0));
        let neg = para(&[&[Over(1), Under(1, N)]]);
        assert_eq!(genus(&build_carter(&neg).unwrap()), Ok(0));
    }

    #[test]
    fn virtual_trefoil_is_a_torus() {
        let p = para(&[&[Over(1), Over(2), Under(1, P), Under(2, P)]]);
        let c = build_carter(&p).unwrap();
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(genus(&c), Ok(1));
        assert!(!is_planar_carter(&p).planar());
    }

    #[test]
    fn classical_trefoil_is_planar() {
        let p = para(&[&[Over(1), Under(2, P), Over(3), Under(1, P), Over(2), Under(3, P)]]);
        assert_eq!(genus(&build_carter(&p).unwrap()), Ok(0));
        let mirror = para(&[&[Over(1), Under(2, N), Over(3), Under(1, N), Over(2), Under(3, N)]]);
        assert_eq!(genus(&build_carter(&mirror).unwrap()), Ok(0));
    }

    #[test]
    fn empty_paragraph_is_a_sphere() {
        let c = build_carter(&GaussParagraph::empty()).unwrap();
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(genus(&c), Ok(0));
        let lone = para(&[&[]]);
        assert_eq!(genus(&build_carter(&lone).unwrap()), Ok(0));
    }

    #[test]
    fn split_curls_are_planar() {
        let p = para(&[&[Over(1), Under(1, P)], &[Over(2), Under(2, N)]]);
        assert!(matches!(build_carter(&p), Err(CarterError::Splittable { parts: 2 })));
        let report = is_planar_carter(&p);
        assert_eq!(report.components.len(), 2);
        assert!(report.planar());
        assert_eq!(report.total_genus(), 0);
    }

    #[test]
    fn every_arc_used_once() {
        let p = para(&[&[Over(1), Under(2, P), Over(3), Under(1, N)], &[Over(2), Under(3, N)]]);
        let c = build_carter(&p).unwrap();
        let mut seen = vec![0; 2 * c.edge_count()];
        for f in 0..c.face_count() {
            for arc in c.face(f) {
                seen[arc.id()] += 1;
            }
        }
        assert!(seen.iter().all(|&k| k == 1));
        assert_eq!((0..c.face_count()).map(|f| c.face(f).len()).sum::<usize>(), 4 * p.crossing_count());
    }
}
