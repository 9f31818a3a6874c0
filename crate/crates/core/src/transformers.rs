//! New spaces from old ones: coarser orders on the same set (extensions and
//! quotients) and subsets (induced orders).
//!
//! An extension `≤'` of `≤` is described by two closure functions mapping a
//! base ideal to the base down-set it generates under `≤'`, and a base
//! element to the base up-set it generates under `≤'`. Every base ideal then
//! stands for the `≤'`-ideal it generates.

use std::sync::Arc;

use crate::error::WqoError;
use crate::kernel::{
    canonize_down, canonize_up, complement_down, complement_up, intersect_down, intersect_up,
    member_up, subset_down, Presentation, Wqo,
};
use crate::value::{DownSet, Element, Ideal, UpSet};

type IdealFn = Arc<dyn Fn(&Ideal) -> DownSet + Send + Sync>;
type ElementFn = Arc<dyn Fn(&Element) -> UpSet + Send + Sync>;

/// Downward and upward closures under the coarser order, as base sets.
#[derive(Clone)]
pub struct ClosureFns {
    pub ideal_closure: IdealFn,
    pub filter_closure: ElementFn,
}

type NormalFn = Arc<dyn Fn(&Element) -> Element + Send + Sync>;

/// A space ordered by an extension of the base order.
pub struct Extension {
    name: String,
    base: Presentation,
    fns: ClosureFns,
    normal: Option<NormalFn>,
    /// Whether `≤'` is a quotient, allowing one closure per intersection.
    quotient: bool,
}

/// `(X, ≤')` for an extension `≤'` of the order of `base`.
pub fn extend(name: &str, base: Presentation, fns: ClosureFns) -> Extension {
    Extension {
        name: name.to_string(),
        base,
        fns,
        normal: None,
        quotient: false,
    }
}

/// Like [`extend`], for a quotient: `↓'(S ∩ ↓'T) = ↓'S ∩ ↓'T` and likewise
/// for upward closures.
pub fn quotient(name: &str, base: Presentation, fns: ClosureFns) -> Extension {
    Extension {
        quotient: true,
        ..extend(name, base, fns)
    }
}

impl Extension {
    pub fn ideal_closure(&self, i: &Ideal) -> DownSet {
        (self.fns.ideal_closure)(i)
    }

    pub fn filter_closure(&self, x: &Element) -> UpSet {
        (self.fns.filter_closure)(x)
    }

    /// `↓'I ∩ ↓'J` computed from both closures, whatever the kind of
    /// extension.
    pub fn intersect_closed_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let meet = intersect_down(&*self.base, &self.ideal_closure(i), &self.ideal_closure(j));
        canonize_down(self, meet.ideals)
    }

    /// Representatives for the classes of the coarser equivalence. Without
    /// one, the base normal form is used.
    pub fn with_normal_form(mut self, f: NormalFn) -> Self {
        self.normal = Some(f);
        self
    }

    pub fn into_presentation(self) -> Presentation {
        Presentation::new(self)
    }
}

impl Wqo for Extension {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        self.base.check_element(x)
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.base.check_ideal(i)
    }

    fn normal_form(&self, x: &Element) -> Element {
        match &self.normal {
            Some(f) => f(x),
            None => self.base.normal_form(x),
        }
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        member_up(&*self.base, &self.filter_closure(x), y)
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        subset_down(
            &*self.base,
            &DownSet::new(vec![i.clone()]),
            &self.ideal_closure(j),
        )
    }

    fn principal(&self, x: &Element) -> Ideal {
        self.base.principal(x)
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let c = complement_up(&*self.base, &self.filter_closure(x));
        canonize_down(self, c.ideals)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let left = if self.quotient {
            UpSet::new(vec![x.clone()])
        } else {
            self.filter_closure(x)
        };
        let meet = intersect_up(&*self.base, &left, &self.filter_closure(y));
        canonize_up(self, meet.generators)
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let c = complement_down(&*self.base, &self.ideal_closure(i));
        canonize_up(self, c.generators)
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        if !self.quotient {
            return self.intersect_closed_ideals(i, j);
        }
        let meet = intersect_down(
            &*self.base,
            &DownSet::new(vec![i.clone()]),
            &self.ideal_closure(j),
        );
        canonize_down(self, meet.ideals)
    }

    fn ideal_decomposition(&self) -> DownSet {
        canonize_down(self, self.base.ideal_decomposition().ideals)
    }

    fn filter_decomposition(&self) -> UpSet {
        canonize_up(self, self.base.filter_decomposition().generators)
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        self.base.elements_of_size(n)
    }
}

type MemberFn = Arc<dyn Fn(&Element) -> bool + Send + Sync>;

/// Restrictions to a subset `Y` of the base space.
#[derive(Clone)]
pub struct SubspaceFns {
    pub member: MemberFn,
    /// Base down-set equal to `↓_X(I ∩ Y)`.
    pub restrict_ideal: IdealFn,
    /// Base up-set equal to `↑_X(↑x ∩ Y)`.
    pub restrict_filter: ElementFn,
}

/// `Y ⊆ X` with the induced order. Ideals of `Y` are represented by the base
/// ideals adherent to `Y`, those with `↓_X(I ∩ Y) = I`.
pub struct Induced {
    name: String,
    base: Presentation,
    fns: SubspaceFns,
}

pub fn induce(name: &str, base: Presentation, fns: SubspaceFns) -> Induced {
    Induced {
        name: name.to_string(),
        base,
        fns,
    }
}

impl Induced {
    /// Accepts `I` as an ideal of `Y` when it is adherent to `Y`.
    pub fn ideal(&self, i: Ideal) -> Result<Ideal, WqoError> {
        self.base.check_ideal(&i)?;
        let restricted = canonize_down(&*self.base, (self.fns.restrict_ideal)(&i).ideals);
        if restricted.ideals == [i.clone()] {
            Ok(i)
        } else {
            Err(WqoError::NotAdherent(i.to_string()))
        }
    }

    fn restrict_down(&self, d: DownSet) -> DownSet {
        let mut out = Vec::new();
        for i in &d.ideals {
            out.extend((self.fns.restrict_ideal)(i).ideals);
        }
        canonize_down(&*self.base, out)
    }

    /// Generators of `U ∩ Y`, each replaced by an equivalent member of `Y`.
    fn restrict_up(&self, u: UpSet) -> UpSet {
        let mut out = Vec::new();
        for x in &u.generators {
            out.extend((self.fns.restrict_filter)(x).generators);
        }
        let gens = canonize_up(&*self.base, out)
            .generators
            .into_iter()
            .map(|g| self.equivalent_member(g))
            .collect();
        canonize_up(self, gens)
    }

    fn equivalent_member(&self, g: Element) -> Element {
        if (self.fns.member)(&g) {
            return g;
        }
        let mut n = 0;
        loop {
            let level = self
                .base
                .elements_of_size(n)
                .unwrap_or_else(|| panic!("{} needs an enumerator", self.name));
            if let Some(y) = level
                .into_iter()
                .find(|y| (self.fns.member)(y) && self.base.leq(y, &g) && self.base.leq(&g, y))
            {
                return y;
            }
            n += 1;
        }
    }

    pub fn into_presentation(self) -> Presentation {
        Presentation::new(self)
    }
}

impl Wqo for Induced {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        self.base.check_element(x)?;
        if (self.fns.member)(x) {
            Ok(())
        } else {
            Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            })
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.ideal(i.clone()).map(|_| ())
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.base.leq(x, y)
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.base.ideal_leq(i, j)
    }

    fn principal(&self, x: &Element) -> Ideal {
        let d = self.restrict_down(DownSet::new(vec![self.base.principal(x)]));
        d.ideals.into_iter().next().expect("↓y is adherent")
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        self.restrict_down(self.base.complement_filter(x))
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        self.restrict_up(self.base.intersect_filters(x, y))
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        self.restrict_up(self.base.complement_ideal(i))
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        self.restrict_down(self.base.intersect_ideals(i, j))
    }

    fn ideal_decomposition(&self) -> DownSet {
        self.restrict_down(self.base.ideal_decomposition())
    }

    fn filter_decomposition(&self) -> UpSet {
        self.restrict_up(self.base.filter_decomposition())
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let level = self.base.elements_of_size(n)?;
        Some(level.into_iter().filter(|y| (self.fns.member)(y)).collect())
    }
}

/// `{0, …, bound}` as a subspace of ℕ.
pub fn naturals_up_to(bound: u64) -> Induced {
    use crate::value::NatIdeal;
    let cap = move |i: &Ideal| match i {
        Ideal::Nat(NatIdeal::Finite(n)) => Ideal::Nat(NatIdeal::Finite((*n).min(bound))),
        _ => Ideal::Nat(NatIdeal::Finite(bound)),
    };
    induce(
        &format!("Nat<={bound}"),
        Presentation::new(crate::base::Naturals),
        SubspaceFns {
            member: Arc::new(move |x| matches!(x, Element::Nat(n) if *n <= bound)),
            restrict_ideal: Arc::new(move |i| DownSet::new(vec![cap(i)])),
            restrict_filter: Arc::new(move |x| match x {
                Element::Nat(n) if *n <= bound => UpSet::new(vec![x.clone()]),
                _ => UpSet::empty(),
            }),
        },
    )
}
