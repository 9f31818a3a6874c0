//! Presentations and the generic algorithms on closed sets.
//!
//! A space is handed around as a [`Presentation`]: the order on elements,
//! inclusion of ideals, principal ideals, and the four complement and
//! intersection procedures. Everything else (membership, inclusion, union,
//! intersection, complement of whole closed sets) is computed here from
//! those procedures alone.

pub mod derive;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::WqoError;
use crate::value::{DownSet, Element, Ideal, UpSet};

/// The procedures that make a well-quasi-order ideally effective.
///
/// Every procedure returning a union returns it in canonical form.
pub trait Wqo: Send + Sync {
    /// Type name, for messages.
    fn name(&self) -> String;

    fn check_element(&self, x: &Element) -> Result<(), WqoError>;

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError>;

    /// `x ≤ y`.
    fn leq(&self, x: &Element, y: &Element) -> bool;

    /// `I ⊆ J`.
    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool;

    /// `↓x`.
    fn principal(&self, x: &Element) -> Ideal;

    /// `X ∖ ↑x`.
    fn complement_filter(&self, x: &Element) -> DownSet;

    /// `↑x ∩ ↑y`.
    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet;

    /// `X ∖ I`.
    fn complement_ideal(&self, i: &Ideal) -> UpSet;

    /// `I ∩ J`.
    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet;

    /// The whole space as a union of ideals.
    fn ideal_decomposition(&self) -> DownSet;

    /// The whole space as a union of filters.
    fn filter_decomposition(&self) -> UpSet;

    /// A representative of the equivalence class of `x`, shared by every
    /// element equivalent to it. The identity suits partial orders.
    fn normal_form(&self, x: &Element) -> Element {
        x.clone()
    }

    /// All elements of the given structural size, in syntactic order.
    /// `None` when the space has no enumerator.
    fn elements_of_size(&self, _n: usize) -> Option<Vec<Element>> {
        None
    }
}

/// Shared handle on a space.
#[derive(Clone)]
pub struct Presentation(Arc<dyn Wqo>);

impl Presentation {
    pub fn new<W: Wqo + 'static>(w: W) -> Self {
        Presentation(Arc::new(w))
    }

    pub fn from_arc(w: Arc<dyn Wqo>) -> Self {
        Presentation(w)
    }

    pub fn has_enumerator(&self) -> bool {
        self.0.elements_of_size(0).is_some()
    }
}

impl Deref for Presentation {
    type Target = dyn Wqo;

    fn deref(&self) -> &Self::Target {
        &*self.0
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self.0.name())
    }
}

/// A closed set together with its polarity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedSet {
    Up(UpSet),
    Down(DownSet),
}

impl ClosedSet {
    pub fn is_empty(&self) -> bool {
        match self {
            ClosedSet::Up(u) => u.is_empty(),
            ClosedSet::Down(d) => d.is_empty(),
        }
    }
}

/// Normalizes generators, drops dominated ones and sorts the rest.
pub fn canonize_up(w: &dyn Wqo, gens: Vec<Element>) -> UpSet {
    let mut gens: Vec<Element> = gens.iter().map(|x| w.normal_form(x)).collect();
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Element> = Vec::with_capacity(gens.len());
    for x in gens {
        if kept.iter().any(|g| w.leq(g, &x)) {
            continue;
        }
        kept.retain(|g| !w.leq(&x, g));
        kept.push(x);
    }
    UpSet::new(kept)
}

/// Drops ideals contained in another one and sorts the rest.
pub fn canonize_down(w: &dyn Wqo, mut ideals: Vec<Ideal>) -> DownSet {
    ideals.sort();
    ideals.dedup();
    let mut kept: Vec<Ideal> = Vec::with_capacity(ideals.len());
    for i in ideals {
        if kept.iter().any(|k| w.ideal_leq(&i, k)) {
            continue;
        }
        kept.retain(|k| !w.ideal_leq(k, &i));
        kept.push(i);
    }
    DownSet::new(kept)
}

pub fn member_up(w: &dyn Wqo, u: &UpSet, x: &Element) -> bool {
    u.generators.iter().any(|g| w.leq(g, x))
}

pub fn member_down(w: &dyn Wqo, d: &DownSet, x: &Element) -> bool {
    let px = w.principal(x);
    d.ideals.iter().any(|i| w.ideal_leq(&px, i))
}

pub fn subset_up(w: &dyn Wqo, u: &UpSet, v: &UpSet) -> bool {
    u.generators.iter().all(|g| member_up(w, v, g))
}

pub fn subset_down(w: &dyn Wqo, d: &DownSet, e: &DownSet) -> bool {
    d.ideals
        .iter()
        .all(|i| e.ideals.iter().any(|j| w.ideal_leq(i, j)))
}

pub fn union_up(w: &dyn Wqo, u: &UpSet, v: &UpSet) -> UpSet {
    canonize_up(
        w,
        u.generators.iter().chain(&v.generators).cloned().collect(),
    )
}

pub fn union_down(w: &dyn Wqo, d: &DownSet, e: &DownSet) -> DownSet {
    canonize_down(w, d.ideals.iter().chain(&e.ideals).cloned().collect())
}

pub fn intersect_up(w: &dyn Wqo, u: &UpSet, v: &UpSet) -> UpSet {
    let mut out = Vec::new();
    for x in &u.generators {
        for y in &v.generators {
            out.extend(w.intersect_filters(x, y).generators);
        }
    }
    canonize_up(w, out)
}

pub fn intersect_down(w: &dyn Wqo, d: &DownSet, e: &DownSet) -> DownSet {
    let mut out = Vec::new();
    for i in &d.ideals {
        for j in &e.ideals {
            out.extend(w.intersect_ideals(i, j).ideals);
        }
    }
    canonize_down(w, out)
}

/// `X ∖ U` as the intersection of the complements of its filters.
pub fn complement_up(w: &dyn Wqo, u: &UpSet) -> DownSet {
    let mut gens = u.generators.iter();
    let Some(first) = gens.next() else {
        return w.ideal_decomposition();
    };
    let mut acc = w.complement_filter(first);
    for g in gens {
        if acc.is_empty() {
            break;
        }
        acc = intersect_down(w, &acc, &w.complement_filter(g));
    }
    acc
}

/// `X ∖ D` as the intersection of the complements of its ideals.
pub fn complement_down(w: &dyn Wqo, d: &DownSet) -> UpSet {
    let mut ideals = d.ideals.iter();
    let Some(first) = ideals.next() else {
        return w.filter_decomposition();
    };
    let mut acc = w.complement_ideal(first);
    for i in ideals {
        if acc.is_empty() {
            break;
        }
        acc = intersect_up(w, &acc, &w.complement_ideal(i));
    }
    canonize_up(w, acc.generators)
}

/// Validates every component of a closed set.
pub fn check_set(w: &dyn Wqo, s: &ClosedSet) -> Result<(), WqoError> {
    match s {
        ClosedSet::Up(u) => u.generators.iter().try_for_each(|g| w.check_element(g)),
        ClosedSet::Down(d) => d.ideals.iter().try_for_each(|i| w.check_ideal(i)),
    }
}

pub fn canonize(w: &dyn Wqo, s: &ClosedSet) -> Result<ClosedSet, WqoError> {
    check_set(w, s)?;
    Ok(match s {
        ClosedSet::Up(u) => ClosedSet::Up(canonize_up(w, u.generators.clone())),
        ClosedSet::Down(d) => ClosedSet::Down(canonize_down(w, d.ideals.clone())),
    })
}

pub fn member(w: &dyn Wqo, s: &ClosedSet, x: &Element) -> Result<bool, WqoError> {
    w.check_element(x)?;
    check_set(w, s)?;
    Ok(match s {
        ClosedSet::Up(u) => member_up(w, u, x),
        ClosedSet::Down(d) => member_down(w, d, x),
    })
}

pub fn subset(w: &dyn Wqo, s: &ClosedSet, t: &ClosedSet) -> Result<bool, WqoError> {
    check_set(w, s)?;
    check_set(w, t)?;
    match (s, t) {
        (ClosedSet::Up(u), ClosedSet::Up(v)) => Ok(subset_up(w, u, v)),
        (ClosedSet::Down(d), ClosedSet::Down(e)) => Ok(subset_down(w, d, e)),
        _ => Err(WqoError::PolarityMismatch),
    }
}

pub fn union(w: &dyn Wqo, s: &ClosedSet, t: &ClosedSet) -> Result<ClosedSet, WqoError> {
    check_set(w, s)?;
    check_set(w, t)?;
    match (s, t) {
        (ClosedSet::Up(u), ClosedSet::Up(v)) => Ok(ClosedSet::Up(union_up(w, u, v))),
        (ClosedSet::Down(d), ClosedSet::Down(e)) => Ok(ClosedSet::Down(union_down(w, d, e))),
        _ => Err(WqoError::PolarityMismatch),
    }
}

pub fn intersect(w: &dyn Wqo, s: &ClosedSet, t: &ClosedSet) -> Result<ClosedSet, WqoError> {
    check_set(w, s)?;
    check_set(w, t)?;
    match (s, t) {
        (ClosedSet::Up(u), ClosedSet::Up(v)) => Ok(ClosedSet::Up(intersect_up(w, u, v))),
        (ClosedSet::Down(d), ClosedSet::Down(e)) => Ok(ClosedSet::Down(intersect_down(w, d, e))),
        _ => Err(WqoError::PolarityMismatch),
    }
}

pub fn complement(w: &dyn Wqo, s: &ClosedSet) -> Result<ClosedSet, WqoError> {
    check_set(w, s)?;
    Ok(match s {
        ClosedSet::Up(u) => ClosedSet::Down(complement_up(w, u)),
        ClosedSet::Down(d) => ClosedSet::Up(complement_down(w, d)),
    })
}

/// Fair enumeration of a space up to a size bound, truncated to `limit`
/// elements.
pub fn enumerate(w: &dyn Wqo, max_size: usize, limit: usize) -> Result<Vec<Element>, WqoError> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        if out.len() >= limit {
            break;
        }
        let level = w
            .elements_of_size(n)
            .ok_or_else(|| WqoError::MissingEnumerator(w.name()))?;
        out.extend(level.into_iter().take(limit - out.len()));
    }
    Ok(out)
}
