//! Completing a short presentation into a full one.
//!
//! A short presentation knows ideal inclusion, principal ideals, the
//! complement of a filter, the intersection of two ideals, the ideal
//! decomposition of the space and an enumerator. The missing procedures
//! (order on elements, complement of an ideal, intersection of filters,
//! filter decomposition) are obtained by a search for the minimal elements
//! of a complement.

use crate::error::WqoError;
use crate::kernel::{
    canonize_up, complement_up, member_down, member_up, subset_down, Presentation, Wqo,
};
use crate::value::{DownSet, Element, Ideal, UpSet};

/// Hard bound on the size levels scanned for one witness. The search is
/// guaranteed to stop far below it on every well-formed input.
const SEARCH_CAP: usize = 10_000;

/// The procedures of a short presentation.
pub trait ShortWqo: Send + Sync {
    fn name(&self) -> String;
    fn check_element(&self, x: &Element) -> Result<(), WqoError>;
    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError>;
    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool;
    fn principal(&self, x: &Element) -> Ideal;
    fn complement_filter(&self, x: &Element) -> DownSet;
    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet;
    fn ideal_decomposition(&self) -> DownSet;
    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>>;
}

/// Restricts a full presentation to its short part.
pub struct Shortened(pub Presentation);

impl ShortWqo for Shortened {
    fn name(&self) -> String {
        self.0.name()
    }
    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        self.0.check_element(x)
    }
    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.0.check_ideal(i)
    }
    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.0.ideal_leq(i, j)
    }
    fn principal(&self, x: &Element) -> Ideal {
        self.0.principal(x)
    }
    fn complement_filter(&self, x: &Element) -> DownSet {
        self.0.complement_filter(x)
    }
    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        self.0.intersect_ideals(i, j)
    }
    fn ideal_decomposition(&self) -> DownSet {
        self.0.ideal_decomposition()
    }
    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        self.0.elements_of_size(n)
    }
}

struct Derived<S> {
    short: S,
}

/// Builds the full presentation. Fails when the short one cannot enumerate.
pub fn derive_full_presentation<S: ShortWqo + 'static>(short: S) -> Result<Presentation, WqoError> {
    if short.elements_of_size(0).is_none() {
        return Err(WqoError::MissingEnumerator(short.name()));
    }
    Ok(Presentation::new(Derived { short }))
}

impl<S: ShortWqo> Derived<S> {
    /// Minimal generators of `X ∖ D`: grow `U` by the first enumerated
    /// element outside `U ∪ D` until `X ∖ U ⊆ D`.
    fn complement_of(&self, d: &DownSet) -> UpSet {
        let mut u = UpSet::empty();
        loop {
            let outside = complement_up(self, &u);
            if subset_down(self, &outside, d) {
                return canonize_up(self, u.generators);
            }
            let x = self
                .first_outside(&u, d)
                .unwrap_or_else(|| panic!("no witness found in {}", self.short.name()));
            u.generators.push(x);
        }
    }

    fn first_outside(&self, u: &UpSet, d: &DownSet) -> Option<Element> {
        for n in 0..SEARCH_CAP {
            let level = self.short.elements_of_size(n)?;
            if let Some(x) = level
                .into_iter()
                .find(|x| !member_up(self, u, x) && !member_down(self, d, x))
            {
                return Some(x);
            }
        }
        None
    }
}

impl<S: ShortWqo> Wqo for Derived<S> {
    fn name(&self) -> String {
        self.short.name()
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        self.short.check_element(x)
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.short.check_ideal(i)
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.short
            .ideal_leq(&self.short.principal(x), &self.short.principal(y))
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.short.ideal_leq(i, j)
    }

    fn principal(&self, x: &Element) -> Ideal {
        self.short.principal(x)
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        self.short.complement_filter(x)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let mut d = self.short.complement_filter(x);
        d.ideals.extend(self.short.complement_filter(y).ideals);
        self.complement_of(&d)
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        self.complement_of(&DownSet::new(vec![i.clone()]))
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        self.short.intersect_ideals(i, j)
    }

    fn ideal_decomposition(&self) -> DownSet {
        self.short.ideal_decomposition()
    }

    fn filter_decomposition(&self) -> UpSet {
        self.complement_of(&DownSet::empty())
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        self.short.elements_of_size(n)
    }
}
