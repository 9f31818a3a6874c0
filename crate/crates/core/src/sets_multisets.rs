//! Finite sets under the Hoare order and finite multisets under embedding.

use std::sync::Arc;

use crate::error::WqoError;
use crate::kernel::{
    canonize_down, canonize_up, complement_down, intersect_down, subset_down, union_down,
    Presentation, Wqo,
};
use crate::sequences::{higman, product, word, Higman};
use crate::transformers::{quotient, ClosureFns, Extension};
use crate::value::{Atom, DownSet, Element, Ideal, UpSet};

/// `Pf(X)`: `S ≤ T` when every member of `S` lies below some member of `T`.
/// Ideals are `Pf(D)`, the finite subsets of a downward closed `D`.
pub struct Powerset {
    base: Presentation,
}

impl Powerset {
    pub fn new(base: Presentation) -> Self {
        Powerset { base }
    }
}

fn members(x: &Element) -> &[Element] {
    match x {
        Element::Set(xs) => xs,
        _ => panic!("not a set: {x:?}"),
    }
}

fn pf(i: &Ideal) -> &DownSet {
    match i {
        Ideal::Pf(d) => d,
        _ => panic!("not a powerset ideal: {i:?}"),
    }
}

impl Wqo for Powerset {
    fn name(&self) -> String {
        format!("Pset({})", self.base.name())
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Set(xs) if xs.windows(2).all(|w| w[0] < w[1]) => {
                xs.iter().try_for_each(|y| self.base.check_element(y))
            }
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        match i {
            Ideal::Pf(d) => d.ideals.iter().try_for_each(|j| self.base.check_ideal(j)),
            _ => Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            }),
        }
    }

    /// The maximal members, each normalized.
    fn normal_form(&self, x: &Element) -> Element {
        let mut xs: Vec<Element> = members(x)
            .iter()
            .map(|a| self.base.normal_form(a))
            .collect();
        xs.sort();
        xs.dedup();
        let mut kept: Vec<Element> = Vec::new();
        for a in xs {
            if kept.iter().any(|b| self.base.leq(&a, b)) {
                continue;
            }
            kept.retain(|b| !self.base.leq(b, &a));
            kept.push(a);
        }
        Element::set(kept)
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        let ys = members(y);
        members(x)
            .iter()
            .all(|a| ys.iter().any(|b| self.base.leq(a, b)))
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        subset_down(&*self.base, pf(i), pf(j))
    }

    fn principal(&self, x: &Element) -> Ideal {
        let ideals = members(x).iter().map(|a| self.base.principal(a)).collect();
        Ideal::Pf(canonize_down(&*self.base, ideals))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let out = members(x)
            .iter()
            .map(|a| Ideal::Pf(self.base.complement_filter(a)))
            .collect();
        canonize_down(self, out)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let mut all = members(x).to_vec();
        all.extend_from_slice(members(y));
        canonize_up(self, vec![Element::set(all)])
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let out = complement_down(&*self.base, pf(i))
            .generators
            .into_iter()
            .map(|a| Element::Set(vec![a]))
            .collect();
        canonize_up(self, out)
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        DownSet::new(vec![Ideal::Pf(intersect_down(&*self.base, pf(i), pf(j)))])
    }

    fn ideal_decomposition(&self) -> DownSet {
        DownSet::new(vec![Ideal::Pf(self.base.ideal_decomposition())])
    }

    fn filter_decomposition(&self) -> UpSet {
        UpSet::new(vec![Element::Set(Vec::new())])
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let Some(budget) = n.checked_sub(1) else {
            return Some(Vec::new());
        };
        let mut candidates = Vec::new();
        for k in 0..=budget {
            candidates.extend(self.base.elements_of_size(k)?);
        }
        candidates.sort();
        let mut out = Vec::new();
        subsets_of_weight(&candidates, budget, &mut Vec::new(), &mut out);
        out.sort();
        Some(out)
    }
}

fn subsets_of_weight(
    candidates: &[Element],
    weight: usize,
    chosen: &mut Vec<Element>,
    out: &mut Vec<Element>,
) {
    if weight == 0 && candidates.iter().all(|c| c.size() > 0) {
        out.push(Element::set(chosen.clone()));
        return;
    }
    let Some((first, rest)) = candidates.split_first() else {
        if weight == 0 {
            out.push(Element::set(chosen.clone()));
        }
        return;
    };
    let s = first.size();
    if s <= weight {
        chosen.push(first.clone());
        subsets_of_weight(rest, weight - s, chosen, out);
        chosen.pop();
    }
    subsets_of_weight(rest, weight, chosen, out);
}

/// Bags drawn from `letters` (each with its weight) of total weight `weight`,
/// choosing letters in nondecreasing position.
fn bags_of_weight(
    letters: &[(Element, usize)],
    weight: usize,
    chosen: &mut Vec<Element>,
    out: &mut Vec<Element>,
) {
    if weight == 0 {
        out.push(Element::bag(chosen.clone()));
        return;
    }
    for (k, (x, w)) in letters.iter().enumerate() {
        if *w <= weight {
            chosen.push(x.clone());
            bags_of_weight(&letters[k..], weight - w, chosen, out);
            chosen.pop();
        }
    }
}

/// Distinct permutations of `v`, in lexicographic order.
pub(crate) fn distinct_permutations<T: Ord + Clone>(v: &[T]) -> Vec<Vec<T>> {
    let mut cur = v.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[i - 1] < cur[j])
            .expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `M(X)`: finite multisets, `M ≤ N` when the members of `M` can be sent
/// injectively to larger members of `N`. Built as a quotient of `X*` by
/// permutation.
pub struct Multisets {
    inner: Extension,
    higman: Arc<Higman>,
}

fn as_word(x: &Element) -> Element {
    match x {
        Element::Bag(xs) => Element::Seq(xs.clone()),
        _ => panic!("not a multiset: {x:?}"),
    }
}

fn as_bag(x: Element) -> Element {
    match x {
        Element::Seq(xs) => Element::bag(xs),
        _ => panic!("not a sequence: {x:?}"),
    }
}

/// `⋃_σ D*·I_σ(1)·D*⋯I_σ(p)·D*` where `D` gathers the stars of the product
/// and `I₁ … I_p` are its `+ε` atoms.
fn permutation_closure(h: &Higman, i: &Ideal) -> DownSet {
    let (d, ones) = split_product(h, product(i));
    let star = Atom::Star(d);
    let mut out = Vec::new();
    for perm in distinct_permutations(&ones) {
        let mut p = vec![star.clone()];
        for j in perm {
            p.push(Atom::One(j));
            p.push(star.clone());
        }
        out.push(Ideal::Product(h.reduce(p)));
    }
    canonize_down(h, out)
}

/// Union of the star contents, and the `+ε` ideals not already inside it.
fn split_product(h: &Higman, p: &[Atom]) -> (DownSet, Vec<Ideal>) {
    let base = &**h.base();
    let mut d = DownSet::empty();
    for a in p {
        if let Atom::Star(e) = a {
            d = union_down(base, &d, e);
        }
    }
    let mut ones: Vec<Ideal> = p
        .iter()
        .filter_map(|a| match a {
            Atom::One(j) if !subset_down(base, &DownSet::new(vec![j.clone()]), &d) => {
                Some(j.clone())
            }
            _ => None,
        })
        .collect();
    ones.sort();
    (d, ones)
}

impl Multisets {
    pub fn new(base: Presentation) -> Self {
        let name = format!("Mset({})", base.name());
        let (h, hp) = higman(base);
        let (h1, h2) = (h.clone(), h.clone());
        let inner = quotient(
            &name,
            hp,
            ClosureFns {
                ideal_closure: Arc::new(move |i| permutation_closure(&h1, i)),
                filter_closure: Arc::new(move |x| {
                    let perms = distinct_permutations(word(x));
                    canonize_up(&*h2, perms.into_iter().map(Element::Seq).collect())
                }),
            },
        );
        Multisets { inner, higman: h }
    }

    /// The representative `D*·I₁⋯I_p` with sorted `Iⱼ` not inside `D`. Two
    /// products denoting the same multiset ideal share it.
    fn normalize(&self, i: &Ideal) -> Ideal {
        let (d, ones) = split_product(&self.higman, product(i));
        let mut p = vec![Atom::Star(d)];
        p.extend(ones.into_iter().map(Atom::One));
        Ideal::Product(self.higman.reduce(p))
    }

    fn down(&self, d: DownSet) -> DownSet {
        let ideals = d.ideals.iter().map(|i| self.normalize(i)).collect();
        canonize_down(self, ideals)
    }

    fn up(&self, u: UpSet) -> UpSet {
        canonize_up(self, u.generators.into_iter().map(as_bag).collect())
    }
}

impl Wqo for Multisets {
    fn name(&self) -> String {
        self.inner.name()
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Bag(xs) if xs.windows(2).all(|w| w[0] <= w[1]) => {
                self.inner.check_element(&as_word(x))
            }
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.inner.check_ideal(i)
    }

    fn normal_form(&self, x: &Element) -> Element {
        let base = &**self.higman.base();
        Element::bag(
            word(&as_word(x))
                .iter()
                .map(|a| base.normal_form(a))
                .collect(),
        )
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.inner.leq(&as_word(x), &as_word(y))
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.inner.ideal_leq(i, j)
    }

    fn principal(&self, x: &Element) -> Ideal {
        self.normalize(&self.inner.principal(&as_word(x)))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        self.down(self.inner.complement_filter(&as_word(x)))
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        self.up(self.inner.intersect_filters(&as_word(x), &as_word(y)))
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        self.up(self.inner.complement_ideal(i))
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        self.down(self.inner.intersect_ideals(i, j))
    }

    fn ideal_decomposition(&self) -> DownSet {
        self.down(self.inner.ideal_decomposition())
    }

    fn filter_decomposition(&self) -> UpSet {
        UpSet::new(vec![Element::Bag(Vec::new())])
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let mut letters = Vec::new();
        for k in 1..=n {
            for x in self.higman.letters_of_weight(k)? {
                letters.push((x, k));
            }
        }
        letters.sort();
        let mut out = Vec::new();
        bags_of_weight(&letters, n, &mut Vec::new(), &mut out);
        out.sort();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{FiniteQo, Naturals};
    use crate::value::NatIdeal;

    fn nat() -> Presentation {
        Presentation::new(Naturals)
    }

    fn nats(xs: &[u64]) -> Vec<Element> {
        xs.iter().map(|&n| Element::Nat(n)).collect()
    }

    #[test]
    fn powerset_of_naturals() {
        let p = Powerset::new(nat());
        let s = |xs: &[u64]| Element::set(nats(xs));
        assert_eq!(
            p.intersect_filters(&s(&[2]), &s(&[5])),
            UpSet::new(vec![s(&[5])])
        );
        assert_eq!(
            p.complement_filter(&s(&[2])),
            DownSet::new(vec![Ideal::Pf(DownSet::new(vec![Ideal::Nat(
                NatIdeal::Finite(1)
            )]))])
        );
        assert!(p.complement_filter(&s(&[])).is_empty());
        assert!(p.leq(&s(&[1, 3]), &s(&[4])));
        assert!(!p.leq(&s(&[5]), &s(&[1, 4])));
    }

    #[test]
    fn powerset_levels_are_sized() {
        let p = Powerset::new(nat());
        for n in 0..7 {
            for x in p.elements_of_size(n).unwrap() {
                assert_eq!(x.size(), n);
            }
        }
        assert_eq!(p.elements_of_size(1).unwrap(), vec![Element::Set(vec![])]);
    }

    #[test]
    fn multiset_embedding() {
        let m = Multisets::new(nat());
        let b = |xs: &[u64]| Element::bag(nats(xs));
        assert!(m.leq(&b(&[1, 1, 1]), &b(&[2, 1, 1])));
        assert!(!m.leq(&b(&[1, 1, 1]), &b(&[5, 5])));
        assert!(m.leq(&b(&[3, 1]), &b(&[1, 4])));
    }

    #[test]
    fn distinct_permutations_of_repeats() {
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(distinct_permutations::<u8>(&[]), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn multiset_ideals_are_normalized() {
        let m = Multisets::new(Presentation::new(FiniteQo::discrete(&["a", "b"])));
        let one = |s: &str| Atom::One(Ideal::Principal(Element::sym(s)));
        let ab = Ideal::Product(vec![one("a"), one("b")]);
        let ba = Ideal::Product(vec![one("b"), one("a")]);
        assert!(m.ideal_leq(&ab, &ba) && m.ideal_leq(&ba, &ab));
        assert_eq!(m.normalize(&ab), m.normalize(&ba));
    }
}
