//! Independent reimplementations checked against the library.

use std::collections::HashSet;

use gausslink::code_invariants::{alpha, beta, InvariantTable};
use gausslink::diagram::{split_components, GaussParagraph, Letter, Sign};
use gausslink::grouptools::{count_homomorphisms, cyclic_group, symmetric_group, FiniteGroupTable};
use gausslink::sample::{for_each_paragraph, random_paragraph, random_realizable_presentation};
use gausslink::wirtinger::WirtingerPresentation;
use gausslink::{build_carter, genus, is_planar_carter, is_planar_criterion, paragraph_to_code, CodeSymbol, GaussCode};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Faces of the ribbon graph given by explicit rotations at each crossing,
/// counted as orbits of a permutation on half-edges.
fn ribbon_faces(p: &GaussParagraph) -> usize {
    let n = p.crossing_count();
    // Half-edge 4(i-1)+k: k = 0 over-out, 1 under-out, 2 over-in, 3 under-in.
    let h = |i: usize, k: usize| 4 * (i - 1) + k;
    let mut rotate = vec![0; 4 * n];
    for i in 1..=n {
        let order = match p.sign(i) {
            Sign::Positive => [0, 1, 2, 3],
            Sign::Negative => [0, 3, 2, 1],
        };
        for t in 0..4 {
            rotate[h(i, order[t])] = h(i, order[(t + 1) % 4]);
        }
    }
    let mut across = vec![usize::MAX; 4 * n];
    for word in p.words() {
        for t in 0..word.len() {
            let (a, b) = (word[t], word[(t + 1) % word.len()]);
            let out = h(a.index(), if a.is_over() { 0 } else { 1 });
            let inn = h(b.index(), if b.is_over() { 2 } else { 3 });
            across[out] = inn;
            across[inn] = out;
        }
    }
    let mut seen = vec![false; 4 * n];
    let mut faces = 0;
    for start in 0..4 * n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = rotate[across[x]];
        }
    }
    faces
}

fn oracle_genus(p: &GaussParagraph) -> u32 {
    split_components(p)
        .iter()
        .map(|c| {
            let q = &c.paragraph;
            if q.crossing_count() == 0 {
                return 0;
            }
            let euler = q.crossing_count() as i64 - 2 * q.crossing_count() as i64 + ribbon_faces(q) as i64;
            ((2 - euler) / 2) as u32
        })
        .sum()
}

fn positions(code: &GaussCode, i: usize) -> (usize, usize) {
    let plus = code.symbols().iter().position(|s| s.index == i && s.sign == Sign::Positive).unwrap();
    let minus = code.symbols().iter().position(|s| s.index == i && s.sign == Sign::Negative).unwrap();
    (plus, minus)
}

/// Positions strictly after `i+` up to but excluding `i-`, walking forward.
fn open_set(code: &GaussCode, i: usize) -> HashSet<usize> {
    let (p, m) = positions(code, i);
    let n = code.len();
    let mut out = HashSet::new();
    let mut x = (p + 1) % n;
    while x != m {
        out.insert(x);
        x = (x + 1) % n;
    }
    out
}

fn brute_alpha(code: &GaussCode, i: usize) -> i64 {
    open_set(code, i).iter().map(|&x| code.symbols()[x].sign.value()).sum()
}

/// Symbols of `S_i ∪ {i+, i-}` whose reversed symbol is in `S_j`.
fn brute_beta(code: &GaussCode, i: usize, j: usize) -> i64 {
    let (p, m) = positions(code, i);
    let mut closed: HashSet<CodeSymbol> = open_set(code, i).iter().map(|&x| code.symbols()[x]).collect();
    closed.insert(code.symbols()[p]);
    closed.insert(code.symbols()[m]);
    let reversed: HashSet<CodeSymbol> = open_set(code, j)
        .iter()
        .map(|&x| {
            let s = code.symbols()[x];
            CodeSymbol { index: s.index, sign: -s.sign }
        })
        .collect();
    closed.intersection(&reversed).map(|s| s.sign.value()).sum()
}

fn brute_homs(p: &WirtingerPresentation, h: &FiniteGroupTable) -> u64 {
    let n = p.generator_count();
    let total = h.order().pow(n as u32);
    let mut count = 0;
    for mut x in 0..total {
        let mut images = vec![0; n];
        for img in images.iter_mut() {
            *img = x % h.order();
            x /= h.order();
        }
        let ok = p.relators().iter().all(|r| {
            let w = h.eval(&r.conjugator, &images);
            images[r.target] == h.mul(h.mul(h.inv(w), images[r.source]), w)
        });
        count += u64::from(ok);
    }
    count
}

#[test]
fn carter_matches_ribbon_graph_exhaustively() {
    for n in 0..=3 {
        for k in 1..=2 {
            for_each_paragraph(n, k, |p| {
                let report = is_planar_carter(&p);
                assert_eq!(report.total_genus(), oracle_genus(&p), "{p}");
            });
        }
    }
}

#[test]
fn carter_matches_ribbon_graph_randomly() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..2000 {
        let p = random_paragraph(&mut rng, 9, 3);
        assert_eq!(is_planar_carter(&p).total_genus(), oracle_genus(&p), "{p}");
        for part in split_components(&p) {
            let c = build_carter(&part.paragraph).unwrap();
            assert!(genus(&c).is_ok());
        }
    }
}

#[test]
fn criterion_agrees_with_carter_exhaustively() {
    for n in 0..=3 {
        for k in 1..=3 {
            for_each_paragraph(n, k, |p| {
                assert_eq!(is_planar_criterion(&p).planar(), is_planar_carter(&p).planar(), "{p}");
            });
        }
    }
}

#[test]
fn criterion_agrees_with_carter_randomly() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..3000 {
        let p = random_paragraph(&mut rng, 8, 4);
        assert_eq!(is_planar_criterion(&p).planar(), is_planar_carter(&p).planar(), "{p}");
        let p = random_paragraph(&mut rng, 12, 6);
        assert_eq!(is_planar_criterion(&p).planar(), is_planar_carter(&p).planar(), "{p}");
    }
}

#[test]
fn invariant_table_matches_definition() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..500 {
        let p = random_paragraph(&mut rng, 7, 1);
        let code = paragraph_to_code(&p).unwrap();
        let table = InvariantTable::new(&code);
        for i in 1..=code.index_count() {
            assert_eq!(table.alpha(i), brute_alpha(&code, i));
            assert_eq!(alpha(&code, i).unwrap(), brute_alpha(&code, i));
            for j in 1..=code.index_count() {
                assert_eq!(table.beta(i, j), brute_beta(&code, i, j), "{code} {i} {j}");
                assert_eq!(beta(&code, i, j).unwrap(), table.beta(i, j));
            }
        }
    }
}

#[test]
fn hom_counts_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(3);
    let groups = [symmetric_group(3).unwrap(), cyclic_group(4).unwrap()];
    for _ in 0..150 {
        let p = random_realizable_presentation(&mut rng, 4, 3);
        for h in &groups {
            assert_eq!(count_homomorphisms(&p, h).unwrap(), brute_homs(&p, h), "{p}");
        }
    }
}

#[test]
fn letter_oracle_sanity() {
    let p = GaussParagraph::new(vec![vec![Letter::Over(1), Letter::Under(1, Sign::Positive)]]).unwrap();
    assert_eq!(ribbon_faces(&p), 3);
}
