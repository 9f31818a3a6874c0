//! Finite sequences under subword embedding, and two orders derived from it.
//!
//! Ideals of `X*` are atom products `A₁⋯Aₙ` where each atom is `D*` or
//! `I + ε`. Products are kept reduced, which makes their syntax a function
//! of their denotation.

pub mod conjugacy;
pub mod stutter;

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::WqoError;
use crate::kernel::{
    canonize_down, canonize_up, complement_down, intersect_down, subset_down, Presentation, Wqo,
};
use crate::value::{Atom, DownSet, Element, Ideal, UpSet};

pub use conjugacy::conjugacy;
pub use stutter::stuttering;

/// `X*` under Higman's subword embedding.
pub struct Higman {
    base: Presentation,
}

pub(crate) fn word(x: &Element) -> &[Element] {
    match x {
        Element::Seq(xs) => xs,
        _ => panic!("not a sequence: {x:?}"),
    }
}

pub(crate) fn product(i: &Ideal) -> &[Atom] {
    match i {
        Ideal::Product(p) => p,
        _ => panic!("not an atom product: {i:?}"),
    }
}

fn prepend<T: Clone>(head: &T, tails: &[Vec<T>]) -> Vec<Vec<T>> {
    tails
        .iter()
        .map(|t| {
            let mut v = Vec::with_capacity(t.len() + 1);
            v.push(head.clone());
            v.extend(t.iter().cloned());
            v
        })
        .collect()
}

impl Higman {
    pub fn new(base: Presentation) -> Self {
        Higman { base }
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    /// Greedy leftmost embedding of `u` into `v`.
    pub fn embeds(&self, u: &[Element], v: &[Element]) -> bool {
        let mut rest = v.iter();
        u.iter().all(|x| rest.any(|y| self.base.leq(x, y)))
    }

    pub fn atom_leq(&self, a: &Atom, b: &Atom) -> bool {
        match (a, b) {
            (Atom::One(i), Atom::One(j)) => self.base.ideal_leq(i, j),
            (Atom::One(i), Atom::Star(d)) => {
                subset_down(&*self.base, &DownSet::new(vec![i.clone()]), d)
            }
            (Atom::Star(d), Atom::Star(e)) => subset_down(&*self.base, d, e),
            (Atom::Star(d), Atom::One(_)) => d.is_empty(),
        }
    }

    /// Inclusion of atom products, by a single left-to-right scan.
    pub fn product_leq(&self, p: &[Atom], q: &[Atom]) -> bool {
        let (mut i, mut j) = (0, 0);
        loop {
            if i == p.len() {
                return true;
            }
            if j == q.len() {
                return p[i..]
                    .iter()
                    .all(|a| matches!(a, Atom::Star(d) if d.is_empty()));
            }
            let (a, b) = (&p[i], &q[j]);
            if !self.atom_leq(a, b) {
                j += 1;
            } else if matches!((a, b), (Atom::One(_), Atom::One(_))) {
                i += 1;
                j += 1;
            } else {
                i += 1;
            }
        }
    }

    /// Drops `∅*` and every atom absorbed by a neighbouring star, until
    /// nothing changes.
    pub fn reduce(&self, mut p: Vec<Atom>) -> Vec<Atom> {
        p.retain(|a| !matches!(a, Atom::Star(d) if d.is_empty()));
        'outer: loop {
            for i in 0..p.len() {
                let absorbed_by = |k: usize| matches!(p.get(k), Some(s @ Atom::Star(_)) if self.atom_leq(&p[i], s));
                if absorbed_by(i + 1) || (i > 0 && absorbed_by(i - 1)) {
                    p.remove(i);
                    continue 'outer;
                }
            }
            return p;
        }
    }

    fn ideal(&self, p: Vec<Atom>) -> Ideal {
        Ideal::Product(self.reduce(p))
    }

    fn canonical_products(&self, ps: Vec<Vec<Atom>>) -> Vec<Vec<Atom>> {
        let ideals = ps.into_iter().map(|p| self.ideal(p)).collect();
        canonize_down(self, ideals)
            .ideals
            .into_iter()
            .map(|i| match i {
                Ideal::Product(p) => p,
                _ => unreachable!(),
            })
            .collect()
    }

    fn canonical_words(&self, ws: Vec<Vec<Element>>) -> Vec<Vec<Element>> {
        let gens = ws.into_iter().map(Element::Seq).collect();
        canonize_up(self, gens)
            .generators
            .into_iter()
            .map(|w| match w {
                Element::Seq(xs) => xs,
                _ => unreachable!(),
            })
            .collect()
    }

    /// `X* ∖ ↑w = (X∖↑x)*·(X+ε)·(X* ∖ ↑v)` for `w = xv`.
    fn complement_word(&self, w: &[Element]) -> Vec<Vec<Atom>> {
        let Some((x, v)) = w.split_first() else {
            return Vec::new();
        };
        let head = Atom::Star(self.base.complement_filter(x));
        if v.is_empty() {
            return vec![self.reduce(vec![head])];
        }
        let rest = self.complement_word(v);
        let mut out = Vec::new();
        for i in self.base.ideal_decomposition().ideals {
            for q in &rest {
                let mut p = vec![head.clone(), Atom::One(i.clone())];
                p.extend(q.iter().cloned());
                out.push(p);
            }
        }
        self.canonical_products(out)
    }

    fn meet_words(
        &self,
        u: &[Element],
        v: &[Element],
        memo: &mut HashMap<(usize, usize), Vec<Vec<Element>>>,
    ) -> Vec<Vec<Element>> {
        if u.is_empty() {
            return vec![v.to_vec()];
        }
        if v.is_empty() {
            return vec![u.to_vec()];
        }
        let key = (u.len(), v.len());
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let mut out = prepend(&u[0], &self.meet_words(&u[1..], v, memo));
        out.extend(prepend(&v[0], &self.meet_words(u, &v[1..], memo)));
        let zs = self.base.intersect_filters(&u[0], &v[0]);
        if !zs.is_empty() {
            let rest = self.meet_words(&u[1..], &v[1..], memo);
            for z in &zs.generators {
                out.extend(prepend(z, &rest));
            }
        }
        let out = self.canonical_words(out);
        memo.insert(key, out.clone());
        out
    }

    fn meet_products(
        &self,
        p: &[Atom],
        q: &[Atom],
        memo: &mut HashMap<(usize, usize), Vec<Vec<Atom>>>,
    ) -> Vec<Vec<Atom>> {
        if p.is_empty() || q.is_empty() {
            return vec![Vec::new()];
        }
        let key = (p.len(), q.len());
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let base = &*self.base;
        let single = |i: &Ideal| DownSet::new(vec![i.clone()]);
        let mut out;
        // `heads` meets the two leading atoms; `tail` is the product they
        // prefix when the meet is taken as a `+ε` atom.
        let one_branch = |out: &mut Vec<Vec<Atom>>, heads: DownSet, tail: Vec<Vec<Atom>>| {
            if heads.is_empty() {
                out.extend(tail);
            } else {
                for k in heads.ideals {
                    out.extend(prepend(&Atom::One(k), &tail));
                }
            }
        };
        match (&p[0], &q[0]) {
            (Atom::Star(d1), Atom::Star(d2)) => {
                let d = intersect_down(base, d1, d2);
                let mut tails = self.meet_products(p, &q[1..], memo);
                tails.extend(self.meet_products(&p[1..], q, memo));
                out = prepend(&Atom::Star(d), &tails);
            }
            (Atom::One(a), Atom::One(b)) => {
                out = self.meet_products(p, &q[1..], memo);
                out.extend(self.meet_products(&p[1..], q, memo));
                let tail = self.meet_products(&p[1..], &q[1..], memo);
                one_branch(&mut out, base.intersect_ideals(a, b), tail);
            }
            (Atom::Star(d), Atom::One(b)) => {
                out = self.meet_products(&p[1..], q, memo);
                let tail = self.meet_products(p, &q[1..], memo);
                one_branch(&mut out, intersect_down(base, d, &single(b)), tail);
            }
            (Atom::One(a), Atom::Star(d)) => {
                out = self.meet_products(p, &q[1..], memo);
                let tail = self.meet_products(&p[1..], q, memo);
                one_branch(&mut out, intersect_down(base, &single(a), d), tail);
            }
        }
        let out = self.canonical_products(out);
        memo.insert(key, out.clone());
        out
    }

    /// Complement of a single atom, as words.
    fn complement_atom(&self, a: &Atom) -> Vec<Vec<Element>> {
        match a {
            Atom::Star(d) => complement_down(&*self.base, d)
                .generators
                .into_iter()
                .map(|x| vec![x])
                .collect(),
            Atom::One(i) => {
                let xf = self.base.filter_decomposition().generators;
                let mut out: Vec<Vec<Element>> = Vec::new();
                for x in &xf {
                    for y in &xf {
                        out.push(vec![x.clone(), y.clone()]);
                    }
                }
                out.extend(
                    self.base
                        .complement_ideal(i)
                        .generators
                        .into_iter()
                        .map(|b| vec![b]),
                );
                out
            }
        }
    }

    /// `U ⊙ V = X* ∖ ((X*∖U)·(X*∖V))`, for upward closed `U` and `V`.
    fn odot(&self, u: &[Vec<Element>], v: &[Vec<Element>]) -> Vec<Vec<Element>> {
        if u.iter().chain(v).any(Vec::is_empty) {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for f in u {
            for g in v {
                let (a, front) = f.split_last().expect("nonempty");
                let (b, back) = g.split_first().expect("nonempty");
                let mut w = f.clone();
                w.extend(g.iter().cloned());
                out.push(w);
                for z in self.base.intersect_filters(a, b).generators {
                    let mut w = front.to_vec();
                    w.push(z);
                    w.extend(back.iter().cloned());
                    out.push(w);
                }
            }
        }
        self.canonical_words(out)
    }

    /// Letters contributing weight `k` to a word's size.
    pub(crate) fn letters_of_weight(&self, k: usize) -> Option<Vec<Element>> {
        let mut out = self.base.elements_of_size(k)?;
        if k == 1 {
            out.extend(self.base.elements_of_size(0)?);
        }
        Some(out)
    }
}

impl Wqo for Higman {
    fn name(&self) -> String {
        format!("Star({})", self.base.name())
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Seq(xs) => xs.iter().try_for_each(|y| self.base.check_element(y)),
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        let Ideal::Product(p) = i else {
            return Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            });
        };
        for a in p {
            match a {
                Atom::Star(d) => d.ideals.iter().try_for_each(|j| self.base.check_ideal(j))?,
                Atom::One(j) => self.base.check_ideal(j)?,
            }
        }
        Ok(())
    }

    fn normal_form(&self, x: &Element) -> Element {
        Element::Seq(word(x).iter().map(|a| self.base.normal_form(a)).collect())
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.embeds(word(x), word(y))
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.product_leq(product(i), product(j))
    }

    fn principal(&self, x: &Element) -> Ideal {
        Ideal::Product(
            word(x)
                .iter()
                .map(|y| Atom::One(self.base.principal(y)))
                .collect(),
        )
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        DownSet::new(
            self.complement_word(word(x))
                .into_iter()
                .map(Ideal::Product)
                .collect(),
        )
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let ws = self.meet_words(word(x), word(y), &mut HashMap::new());
        UpSet::new(ws.into_iter().map(Element::Seq).collect())
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let p = product(i);
        let words = match p.split_first() {
            None => self
                .base
                .filter_decomposition()
                .generators
                .into_iter()
                .map(|x| vec![x])
                .collect(),
            Some((first, rest)) => {
                let mut acc = self.canonical_words(self.complement_atom(first));
                for a in rest {
                    acc = self.odot(&acc, &self.complement_atom(a));
                }
                self.canonical_words(acc)
            }
        };
        UpSet::new(words.into_iter().map(Element::Seq).collect())
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let ps = self.meet_products(product(i), product(j), &mut HashMap::new());
        DownSet::new(ps.into_iter().map(Ideal::Product).collect())
    }

    fn ideal_decomposition(&self) -> DownSet {
        DownSet::new(vec![
            self.ideal(vec![Atom::Star(self.base.ideal_decomposition())])
        ])
    }

    fn filter_decomposition(&self) -> UpSet {
        UpSet::new(vec![Element::Seq(Vec::new())])
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let mut levels: Vec<Vec<Vec<Element>>> = vec![vec![Vec::new()]];
        for m in 1..=n {
            let mut level = Vec::new();
            for k in 1..=m {
                let letters = self.letters_of_weight(k)?;
                for x in &letters {
                    level.extend(prepend(x, &levels[m - k]));
                }
            }
            levels.push(level);
        }
        let mut out: Vec<Element> = levels
            .swap_remove(n)
            .into_iter()
            .map(Element::Seq)
            .collect();
        out.sort();
        Some(out)
    }
}

/// `X*` as a presentation, keeping access to the concrete procedures.
pub fn higman(base: Presentation) -> (Arc<Higman>, Presentation) {
    let h = Arc::new(Higman::new(base));
    let p = Presentation::from_arc(h.clone());
    (h, p)
}
