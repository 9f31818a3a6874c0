//! Stuttering order on words: `u ≤st v` when `v` embeds a word obtained
//! from `u` by replacing blocks of consecutive letters with a common upper
//! bound of each block.

use std::sync::Arc;

use crate::kernel::{canonize_up, intersect_up, Presentation};
use crate::transformers::{extend, ClosureFns, Extension};
use crate::value::{Atom, DownSet, Element, Ideal, UpSet};

use super::{higman, product, word, Higman};

/// Each `I + ε` becomes `[I]*`; stars are unchanged.
fn ideal_closure(h: &Higman, i: &Ideal) -> DownSet {
    let p = product(i)
        .iter()
        .map(|a| match a {
            Atom::One(j) => Atom::Star(DownSet::new(vec![j.clone()])),
            star => star.clone(),
        })
        .collect();
    DownSet::new(vec![Ideal::Product(h.reduce(p))])
}

/// Union over all cuts of `w` into consecutive pieces of `↑*(y₁⋯yₖ)`, with
/// `yⱼ` a minimal common upper bound of piece `j`.
fn filter_closure(h: &Higman, x: &Element) -> UpSet {
    let w = word(x);
    if w.is_empty() {
        return UpSet::new(vec![x.clone()]);
    }
    let base = &**h.base();
    let mut out = Vec::new();
    // bit k of `cuts` set: a piece ends after position k
    for cuts in 0u64..(1u64 << (w.len() - 1)) {
        let mut pieces: Vec<Vec<Element>> = vec![Vec::new()];
        let mut acc = UpSet::new(vec![w[0].clone()]);
        for (k, y) in w.iter().enumerate().skip(1) {
            if cuts >> (k - 1) & 1 == 1 {
                pieces = extend_all(&pieces, &acc);
                acc = UpSet::new(vec![y.clone()]);
            } else {
                acc = intersect_up(base, &acc, &UpSet::new(vec![y.clone()]));
            }
        }
        out.extend(extend_all(&pieces, &acc).into_iter().map(Element::Seq));
    }
    canonize_up(h, out)
}

fn extend_all(prefixes: &[Vec<Element>], choices: &UpSet) -> Vec<Vec<Element>> {
    let mut out = Vec::new();
    for p in prefixes {
        for c in &choices.generators {
            let mut q = p.clone();
            q.push(c.clone());
            out.push(q);
        }
    }
    out
}

/// Normalized letters, then every letter below a neighbour removed until
/// none is left.
fn normal_form(h: &Higman, x: &Element) -> Element {
    let base = &**h.base();
    let mut w: Vec<Element> = word(x).iter().map(|a| base.normal_form(a)).collect();
    while let Some(k) = (0..w.len()).find(|&k| {
        (k > 0 && base.leq(&w[k], &w[k - 1])) || (k + 1 < w.len() && base.leq(&w[k], &w[k + 1]))
    }) {
        w.remove(k);
    }
    Element::Seq(w)
}

/// `X*` under the stuttering order.
pub fn stuttering(base: Presentation) -> Extension {
    let name = format!("Stutter({})", base.name());
    let (h, hp) = higman(base);
    let (h1, h2, h3) = (h.clone(), h.clone(), h);
    extend(
        &name,
        hp,
        ClosureFns {
            ideal_closure: Arc::new(move |i| ideal_closure(&h1, i)),
            filter_closure: Arc::new(move |x| filter_closure(&h2, x)),
        },
    )
    .with_normal_form(Arc::new(move |x| normal_form(&h3, x)))
}
