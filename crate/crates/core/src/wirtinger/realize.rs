//! Gauss diagrams realizing a presentation.
//!
//! Each conjugacy class of a simple form becomes one circle whose arcs are the
//! class generators in cycle order. Relator `m_q = x⁻¹ m_next x` becomes an
//! arrow whose head separates arc `q` from arc `next`, and whose tail sits on
//! the arc of the generator in `x`.

use super::reduce::{to_cyclic_form, to_simple_form, CanonicalForm, ReduceError};
use super::WirtingerPresentation;
use crate::diagram::{Arrow, GaussDiagram, Sign, Slot};

/// Reduces `p` to simple form and realizes it.
pub fn realize(p: &WirtingerPresentation) -> Result<GaussDiagram, ReduceError> {
    Ok(realize_canonical(&to_simple_form(&to_cyclic_form(p)?)))
}

/// Circles follow the classes; on a circle, arc `t` carries the tails of the
/// relators conjugating by `m_t` (in relator order), followed by the head of
/// relator `t`. A loop `m = m⁻¹ m m` on a one-generator class holds
/// trivially and is left out.
///
/// Reading the result back with [`super::group_of_diagram`] gives each
/// relator solved for its source, with generators numbered as in the form.
pub fn realize_canonical(c: &CanonicalForm) -> GaussDiagram {
    let p = c.presentation();
    let classes = c.classes();
    let trivial = |q: usize| {
        let r = &p.relators()[q];
        classes[c.class_of(q)].len() == 1 && r.conjugator[0].generator == q
    };

    let mut tails_on: Vec<Vec<usize>> = vec![Vec::new(); p.generator_count()];
    for (q, r) in p.relators().iter().enumerate() {
        if !trivial(q) {
            tails_on[r.conjugator[0].generator].push(q);
        }
    }

    let mut tail_slot = vec![None; p.relator_count()];
    let mut head_slot = vec![None; p.relator_count()];
    let mut circles = Vec::with_capacity(classes.len());
    for (k, class) in classes.iter().enumerate() {
        let mut position = 0;
        for t in class.clone() {
            for &q in &tails_on[t] {
                tail_slot[q] = Some(Slot { circle: k, position });
                position += 1;
            }
            if !trivial(t) {
                head_slot[t] = Some(Slot { circle: k, position });
                position += 1;
            }
        }
        circles.push(position);
    }

    let arrows = (0..p.relator_count())
        .filter(|&q| !trivial(q))
        .map(|q| {
            let sign = match p.relators()[q].conjugator[0].sign() {
                Sign::Positive => Sign::Negative,
                Sign::Negative => Sign::Positive,
            };
            Arrow { tail: tail_slot[q].expect("tail placed"), head: head_slot[q].expect("head placed"), sign }
        })
        .collect();
    GaussDiagram::new(circles, arrows).expect("every slot is used once")
}
