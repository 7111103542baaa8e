use gausslink::code_invariants::{associated_codes, is_planar_code, paragraph_to_code, CodeSymbol, GaussCode};
use gausslink::codec::{format_code, parse_code, parse_paragraph, parse_presentation};
use gausslink::diagram::{diagram_to_paragraph, paragraph_to_diagram, split_components, GaussParagraph, Letter, Sign};
use gausslink::grouptools::{count_homomorphisms, cyclic_group, symmetric_group};
use gausslink::sample::random_realizable_presentation;
use gausslink::wirtinger::{
    abelianization_rank, build_graph, group_of_diagram, is_realizable, realize, to_cyclic_form, to_simple_form,
    GenLetter, Relator, WirtingerPresentation,
};
use gausslink::{is_planar_carter, is_planar_criterion};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn sign(b: bool) -> Sign {
    if b {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Paragraphs with up to `max_n` crossings and 1..=`max_k` words, some
/// possibly empty.
fn paragraph(max_n: usize, max_k: usize) -> impl Strategy<Value = GaussParagraph> {
    (0..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        (
            prop::collection::vec(any::<bool>(), n),
            Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(0..=n, k - 1),
        )
            .prop_map(move |(signs, order, mut cuts)| {
                let letters: Vec<Letter> =
                    (1..=n).flat_map(|i| [Letter::Over(i), Letter::Under(i, sign(signs[i - 1]))]).collect();
                cuts.sort_unstable();
                let mut words = Vec::new();
                let mut start = 0;
                for end in cuts.into_iter().map(|c| 2 * c).chain([2 * n]) {
                    words.push(order[start..end].iter().map(|&x| letters[x]).collect());
                    start = end;
                }
                GaussParagraph::new(words).unwrap()
            })
    })
}

fn connected_paragraph(max_n: usize, max_k: usize) -> impl Strategy<Value = GaussParagraph> {
    paragraph(max_n, max_k).prop_filter("connected", |p| {
        p.crossing_count() > 0 && p.is_connected() && p.words().iter().all(|w| !w.is_empty())
    })
}

/// Relabels crossings by `perm` (1-based images), rotates every word and
/// permutes the word order.
fn scramble(p: &GaussParagraph, perm: &[usize], rot: usize, word_shift: usize) -> GaussParagraph {
    let mut words: Vec<Vec<Letter>> = p
        .words()
        .iter()
        .map(|w| {
            let mut w: Vec<Letter> = w
                .iter()
                .map(|&l| match l {
                    Letter::Over(i) => Letter::Over(perm[i - 1]),
                    Letter::Under(i, s) => Letter::Under(perm[i - 1], s),
                })
                .collect();
            if !w.is_empty() {
                let r = rot % w.len();
                w.rotate_left(r);
            }
            w
        })
        .collect();
    if !words.is_empty() {
        let s = word_shift % words.len();
        words.rotate_left(s);
    }
    GaussParagraph::new(words).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn paragraph_text_round_trip(p in paragraph(8, 4)) {
        prop_assert_eq!(parse_paragraph(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn paragraph_diagram_round_trip(p in paragraph(8, 4)) {
        let d = paragraph_to_diagram(&p);
        prop_assert_eq!(d.arrows().len(), p.crossing_count());
        prop_assert_eq!(d.circle_count(), p.word_count());
        prop_assert_eq!(diagram_to_paragraph(&d), p);
    }

    #[test]
    fn split_partitions_crossings(p in paragraph(8, 5)) {
        let parts = split_components(&p);
        let mut seen: Vec<usize> = parts.iter().flat_map(|c| c.crossings.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (1..=p.crossing_count()).collect::<Vec<_>>());
        let mut words: Vec<usize> = parts.iter().flat_map(|c| c.words.clone()).collect();
        words.sort_unstable();
        prop_assert_eq!(words, (0..p.word_count()).collect::<Vec<_>>());
        for c in &parts {
            prop_assert!(c.paragraph.is_connected());
        }
    }

    #[test]
    fn split_recovers_factors(a in connected_paragraph(4, 2), b in connected_paragraph(4, 2), c in connected_paragraph(4, 2)) {
        let mut words = Vec::new();
        let mut offset = 0;
        for f in [&a, &b, &c] {
            for w in f.words() {
                words.push(w.iter().map(|&l| match l {
                    Letter::Over(i) => Letter::Over(i + offset),
                    Letter::Under(i, s) => Letter::Under(i + offset, s),
                }).collect::<Vec<_>>());
            }
            offset += f.crossing_count();
        }
        let union = GaussParagraph::new(words).unwrap();
        let parts = split_components(&union);
        prop_assert_eq!(parts.len(), 3);
        for (part, factor) in parts.iter().zip([&a, &b, &c]) {
            prop_assert!(part.paragraph.is_isomorphic(factor));
        }
    }

    #[test]
    fn genus_ignores_presentation(p in paragraph(7, 3), seed in any::<u64>(), rot in 0usize..8, shift in 0usize..4) {
        let mut perm: Vec<usize> = (1..=p.crossing_count()).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let q = scramble(&p, &perm, rot, shift);
        prop_assert_eq!(is_planar_carter(&p).total_genus(), is_planar_carter(&q).total_genus());
        prop_assert_eq!(is_planar_criterion(&p).planar(), is_planar_criterion(&q).planar());
    }

    #[test]
    fn carter_faces_cover_arcs(p in connected_paragraph(8, 3)) {
        let report = is_planar_carter(&p);
        let c = &report.components[0].complex;
        let total: usize = (0..c.face_count()).map(|f| c.face(f).len()).sum();
        prop_assert_eq!(total, 4 * p.crossing_count());
        prop_assert!(c.euler_characteristic() <= 2);
        prop_assert_eq!(c.euler_characteristic() % 2, 0);
    }

    #[test]
    fn code_length_law(p in connected_paragraph(8, 4)) {
        let code = paragraph_to_code(&p).unwrap();
        prop_assert_eq!(code.len(), 2 * p.crossing_count() + 2 * p.word_count() - 2);
    }

    #[test]
    fn every_merge_order_agrees(p in connected_paragraph(5, 4)) {
        let verdict = is_planar_code(&paragraph_to_code(&p).unwrap());
        for code in associated_codes(&p).unwrap() {
            prop_assert_eq!(is_planar_code(&code), verdict);
        }
        prop_assert_eq!(verdict, is_planar_carter(&p).planar());
    }

    #[test]
    fn code_planarity_invariant(p in connected_paragraph(7, 3), k in 0usize..40, seed in any::<u64>()) {
        let code = paragraph_to_code(&p).unwrap();
        let mut perm: Vec<usize> = (1..=code.index_count()).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let verdict = is_planar_code(&code);
        prop_assert_eq!(is_planar_code(&code.rotated(k)), verdict);
        prop_assert_eq!(is_planar_code(&code.relabeled(&perm)), verdict);
    }

    #[test]
    fn code_text_round_trip(p in connected_paragraph(7, 3)) {
        let code = paragraph_to_code(&p).unwrap();
        prop_assert_eq!(parse_code(&format_code(&code)).unwrap(), code);
    }

    #[test]
    fn code_sums_vanish(p in connected_paragraph(7, 3)) {
        let code = paragraph_to_code(&p).unwrap();
        let total: i64 = code.symbols().iter().map(|s: &CodeSymbol| s.sign.value()).sum();
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn diagram_groups_are_realizable(p in paragraph(7, 3)) {
        let g = group_of_diagram(&paragraph_to_diagram(&p));
        let graph = build_graph(&g);
        let heads_free = p.words().iter().filter(|w| w.iter().all(|l| l.is_over())).count();
        prop_assert_eq!(g.generator_count(), g.relator_count() + heads_free);
        for c in &graph.components {
            prop_assert!(c.euler() == 0 || (c.euler() == 1 && c.edges.is_empty()));
        }
        prop_assert!(is_realizable(&g));
    }

    #[test]
    fn presentation_text_round_trip(seed in any::<u64>()) {
        let p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 6, 4);
        prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_count_ignores_order(seed in any::<u64>(), pseed in any::<u64>()) {
        let p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 5, 3);
        let mut perm: Vec<usize> = (0..p.generator_count()).collect();
        use rand::seq::SliceRandom;
        let mut rng = StdRng::seed_from_u64(pseed);
        perm.shuffle(&mut rng);
        let mut q = p.relabeled(&perm);
        let mut rels = q.relators().to_vec();
        rels.shuffle(&mut rng);
        q = WirtingerPresentation::new(q.names().to_vec(), rels).unwrap();
        let s3 = symmetric_group(3).unwrap();
        prop_assert_eq!(count_homomorphisms(&p, &s3), count_homomorphisms(&q, &s3));
        prop_assert_eq!(is_realizable(&p), is_realizable(&q));
        prop_assert_eq!(abelianization_rank(&p), abelianization_rank(&q));
    }

    #[test]
    fn abelian_counts_follow_rank(seed in any::<u64>()) {
        let p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 6, 4);
        let rank = abelianization_rank(&p) as u32;
        for order in [2usize, 3] {
            let z = cyclic_group(order).unwrap();
            prop_assert_eq!(count_homomorphisms(&p, &z).unwrap(), (order as u64).pow(rank));
        }
    }

    #[test]
    fn reductions_preserve_invariants(seed in any::<u64>()) {
        let p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 5, 4);
        let cyclic = to_cyclic_form(&p).unwrap();
        let simple = to_simple_form(&cyclic);
        let s3 = symmetric_group(3).unwrap();
        let expected = count_homomorphisms(&p, &s3).unwrap();
        for q in [cyclic.presentation(), simple.presentation()] {
            prop_assert_eq!(count_homomorphisms(q, &s3).unwrap(), expected);
            prop_assert_eq!(abelianization_rank(q), abelianization_rank(&p));
            prop_assert_eq!(build_graph(q).components.len(), build_graph(&p).components.len());
            for (r, rel) in q.relators().iter().enumerate() {
                prop_assert_eq!(rel.target, r);
            }
        }
        for r in simple.presentation().relators() {
            prop_assert_eq!(r.conjugator.len(), 1);
        }
    }

    #[test]
    fn realize_round_trip(seed in any::<u64>()) {
        let p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 5, 3);
        let d = realize(&p).unwrap();
        let back = group_of_diagram(&d);
        let s3 = symmetric_group(3).unwrap();
        let z3 = cyclic_group(3).unwrap();
        prop_assert_eq!(count_homomorphisms(&back, &s3).unwrap(), count_homomorphisms(&p, &s3).unwrap());
        prop_assert_eq!(count_homomorphisms(&back, &z3).unwrap(), count_homomorphisms(&p, &z3).unwrap());
        prop_assert_eq!(d.circle_count(), build_graph(&p).components.len());
    }

    #[test]
    fn unrealizable_is_rejected(extra in 1usize..3, seed in any::<u64>()) {
        let mut p = random_realizable_presentation(&mut StdRng::seed_from_u64(seed), 4, 2);
        let mut rels = p.relators().to_vec();
        for _ in 0..=extra {
            rels.push(Relator { target: 0, source: 0, conjugator: vec![GenLetter { generator: 0, inverse: false }] });
        }
        p = WirtingerPresentation::new(p.names().to_vec(), rels).unwrap();
        prop_assert!(!is_realizable(&p));
        prop_assert!(to_cyclic_form(&p).is_err());
    }
}

#[test]
fn code_from_labels_keeps_order() {
    let (code, labels) = GaussCode::from_labels(vec![
        (9, Sign::Positive),
        (4, Sign::Negative),
        (9, Sign::Negative),
        (4, Sign::Positive),
    ])
    .unwrap();
    assert_eq!(labels, vec![4, 9]);
    assert_eq!(format_code(&code), "2+ 1- 2- 1+");
}
