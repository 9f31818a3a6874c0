//! Conjugacy order on words: `u ≤cj v` when some rotation of `u` embeds
//! into `v`.

use std::sync::Arc;

use crate::kernel::{canonize_down, canonize_up, Presentation, Wqo};
use crate::transformers::{quotient, ClosureFns, Extension};
use crate::value::{Atom, DownSet, Element, Ideal, UpSet};

use super::{higman, product, word, Higman};

fn rotations(x: &Element) -> UpSet {
    let w = word(x);
    let mut out = vec![x.clone()];
    for k in 1..w.len() {
        let mut r = w[k..].to_vec();
        r.extend_from_slice(&w[..k]);
        out.push(Element::Seq(r));
    }
    UpSet::new(out)
}

/// `⋃ᵢ (Aᵢ⋯Aₖ₋₁A₀⋯Aᵢ₋₁)·e(Aᵢ)`, where `e` keeps stars and turns `I+ε`
/// into `ε`.
fn ideal_closure(h: &Higman, i: &Ideal) -> DownSet {
    let p = product(i);
    if p.is_empty() {
        return DownSet::new(vec![i.clone()]);
    }
    let mut out = Vec::new();
    for k in 0..p.len() {
        let mut r = p[k..].to_vec();
        r.extend_from_slice(&p[..k]);
        if let Atom::Star(_) = &p[k] {
            r.push(p[k].clone());
        }
        out.push(Ideal::Product(h.reduce(r)));
    }
    canonize_down(h, out)
}

/// `X*` under the conjugacy order.
pub fn conjugacy(base: Presentation) -> Extension {
    let name = format!("Conj({})", base.name());
    let (h, hp) = higman(base);
    let (h1, h2, h3) = (h.clone(), h.clone(), h);
    quotient(
        &name,
        hp,
        ClosureFns {
            ideal_closure: Arc::new(move |i| ideal_closure(&h1, i)),
            filter_closure: Arc::new(move |x| canonize_up(&*h2, rotations(x).generators)),
        },
    )
    .with_normal_form(Arc::new(move |x| {
        let letters = h3.normal_form(x);
        rotations(&letters)
            .generators
            .into_iter()
            .min()
            .expect("a word has a rotation")
    }))
}
