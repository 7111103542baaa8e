//! Random and exhaustive generators, used by property tests, the acceptance
//! suite and `gausslink --random`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{paragraph_to_diagram, GaussDiagram, GaussParagraph, Letter, Sign};
use crate::wirtinger::{GenLetter, Relator, WirtingerPresentation, Word};

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// `n` crossings with random signs, shuffled and cut into `words` cyclic
/// words of even (possibly zero) length. `words` must be at least 1.
pub fn random_paragraph<R: Rng + ?Sized>(rng: &mut R, n: usize, words: usize) -> GaussParagraph {
    assert!(words >= 1, "a paragraph sample needs at least one word");
    let mut letters: Vec<Letter> =
        (1..=n).flat_map(|i| [Letter::Over(i), Letter::Under(i, random_sign(rng))]).collect();
    letters.shuffle(rng);
    // Cut points on even offsets.
    let mut cuts: Vec<usize> = (0..words - 1).map(|_| 2 * rng.gen_range(0..=n)).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(words);
    let mut start = 0;
    for cut in cuts.into_iter().chain([2 * n]) {
        out.push(letters[start..cut].to_vec());
        start = cut;
    }
    GaussParagraph::new(out).expect("sampled paragraphs are valid")
}

/// A paragraph with a random word count between 1 and `max_words`.
pub fn random_paragraph_upto<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_words: usize) -> GaussParagraph {
    let n = rng.gen_range(0..=max_n);
    let k = rng.gen_range(1..=max_words.max(1));
    random_paragraph(rng, n, k)
}

pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, n: usize, circles: usize) -> GaussDiagram {
    paragraph_to_diagram(&random_paragraph(rng, n, circles))
}

fn random_word<R: Rng + ?Sized>(rng: &mut R, generators: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| GenLetter { generator: rng.gen_range(0..generators), inverse: rng.gen_bool(0.5) }).collect()
}

/// A presentation whose conjugacy graph has only tree and unicyclic
/// components: up to `max_generators` generators, conjugators of up to
/// `max_conjugator` letters.
pub fn random_realizable_presentation<R: Rng + ?Sized>(
    rng: &mut R,
    max_generators: usize,
    max_conjugator: usize,
) -> WirtingerPresentation {
    let n = rng.gen_range(1..=max_generators.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut relators = Vec::new();
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=n - start);
        let class = &order[start..start + size];
        let mut edges: Vec<(usize, usize)> = (1..size).map(|t| (class[t], class[rng.gen_range(0..t)])).collect();
        if rng.gen_bool(0.6) {
            edges.push((class[rng.gen_range(0..size)], class[rng.gen_range(0..size)]));
        }
        for (a, b) in edges {
            let (target, source) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            relators.push(Relator { target, source, conjugator: random_word(rng, n, max_conjugator) });
        }
        start += size;
    }
    relators.shuffle(rng);
    WirtingerPresentation::with_default_names(n, relators).expect("generators in range")
}

/// Visits every paragraph on `n` crossings with exactly `words` words: all
/// sign choices, all orderings of the `2n` letters and all ways to cut the
/// ordering into words of even, possibly zero, length.
pub fn for_each_paragraph(n: usize, words: usize, mut visit: impl FnMut(GaussParagraph)) {
    assert!(words >= 1, "a paragraph needs at least one word");
    let compositions = even_compositions(2 * n, words);
    for mask in 0..(1u32 << n) {
        let letters: Vec<Letter> = (1..=n)
            .flat_map(|i| {
                let sign = if mask >> (i - 1) & 1 == 0 { Sign::Positive } else { Sign::Negative };
                [Letter::Over(i), Letter::Under(i, sign)]
            })
            .collect();
        let mut perm: Vec<usize> = (0..2 * n).collect();
        loop {
            for comp in &compositions {
                let mut out = Vec::with_capacity(words);
                let mut start = 0;
                for &len in comp {
                    out.push(perm[start..start + len].iter().map(|&p| letters[p]).collect());
                    start += len;
                }
                visit(GaussParagraph::new(out).expect("enumerated paragraphs are valid"));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
}

/// Ordered ways to write `total` as `parts` even non-negative summands.
pub fn even_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total).step_by(2) {
        for mut rest in even_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else { return false };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
