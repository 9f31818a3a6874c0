//! Disjoint sums, lexicographic sums and cartesian products.

use crate::error::WqoError;
use crate::kernel::{canonize_down, canonize_up, Presentation, Wqo};
use crate::value::{DownSet, Element, Ideal, Side, UpSet};

fn sum_elem(x: &Element) -> (Side, &Element) {
    match x {
        Element::Sum(s, v) => (*s, v),
        _ => panic!("not a sum element: {x:?}"),
    }
}

fn sum_ideal(i: &Ideal) -> (Side, &Ideal) {
    match i {
        Ideal::Sum(s, v) => (*s, v),
        _ => panic!("not a sum ideal: {i:?}"),
    }
}

fn tag_down(side: Side, d: DownSet) -> Vec<Ideal> {
    d.ideals.into_iter().map(|i| Ideal::sum(side, i)).collect()
}

fn tag_up(side: Side, u: UpSet) -> Vec<Element> {
    u.generators
        .into_iter()
        .map(|x| Element::sum(side, x))
        .collect()
}

fn check_sum_element(
    name: String,
    left: &Presentation,
    right: &Presentation,
    x: &Element,
) -> Result<(), WqoError> {
    match x {
        Element::Sum(Side::Left, v) => left.check_element(v),
        Element::Sum(Side::Right, v) => right.check_element(v),
        _ => Err(WqoError::NotAnElement {
            value: x.to_string(),
            space: name,
        }),
    }
}

fn check_sum_ideal(
    name: String,
    left: &Presentation,
    right: &Presentation,
    i: &Ideal,
) -> Result<(), WqoError> {
    match i {
        Ideal::Sum(Side::Left, v) => left.check_ideal(v),
        Ideal::Sum(Side::Right, v) => right.check_ideal(v),
        _ => Err(WqoError::NotAnIdeal {
            value: i.to_string(),
            space: name,
        }),
    }
}

fn sum_level(left: &Presentation, right: &Presentation, n: usize) -> Option<Vec<Element>> {
    let mut out = tag_up(Side::Left, UpSet::new(left.elements_of_size(n)?));
    out.extend(tag_up(Side::Right, UpSet::new(right.elements_of_size(n)?)));
    out.sort();
    Some(out)
}

/// `X₁ ⊔ X₂`: the two sides are incomparable.
pub struct DisjointSum {
    left: Presentation,
    right: Presentation,
}

impl DisjointSum {
    pub fn new(left: Presentation, right: Presentation) -> Self {
        DisjointSum { left, right }
    }

    fn side(&self, s: Side) -> &Presentation {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

impl Wqo for DisjointSum {
    fn name(&self) -> String {
        format!("Sum({},{})", self.left.name(), self.right.name())
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        check_sum_element(self.name(), &self.left, &self.right, x)
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        check_sum_ideal(self.name(), &self.left, &self.right, i)
    }

    fn normal_form(&self, x: &Element) -> Element {
        let (s, a) = sum_elem(x);
        Element::sum(s, self.side(s).normal_form(a))
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        let ((s, a), (t, b)) = (sum_elem(x), sum_elem(y));
        s == t && self.side(s).leq(a, b)
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        let ((s, a), (t, b)) = (sum_ideal(i), sum_ideal(j));
        s == t && self.side(s).ideal_leq(a, b)
    }

    fn principal(&self, x: &Element) -> Ideal {
        let (s, a) = sum_elem(x);
        Ideal::sum(s, self.side(s).principal(a))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let (s, a) = sum_elem(x);
        let mut out = tag_down(s, self.side(s).complement_filter(a));
        out.extend(tag_down(
            s.other(),
            self.side(s.other()).ideal_decomposition(),
        ));
        canonize_down(self, out)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let ((s, a), (t, b)) = (sum_elem(x), sum_elem(y));
        if s != t {
            return UpSet::empty();
        }
        canonize_up(self, tag_up(s, self.side(s).intersect_filters(a, b)))
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let (s, a) = sum_ideal(i);
        let mut out = tag_up(s, self.side(s).complement_ideal(a));
        out.extend(tag_up(
            s.other(),
            self.side(s.other()).filter_decomposition(),
        ));
        canonize_up(self, out)
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let ((s, a), (t, b)) = (sum_ideal(i), sum_ideal(j));
        if s != t {
            return DownSet::empty();
        }
        canonize_down(self, tag_down(s, self.side(s).intersect_ideals(a, b)))
    }

    fn ideal_decomposition(&self) -> DownSet {
        let mut out = tag_down(Side::Left, self.left.ideal_decomposition());
        out.extend(tag_down(Side::Right, self.right.ideal_decomposition()));
        canonize_down(self, out)
    }

    fn filter_decomposition(&self) -> UpSet {
        let mut out = tag_up(Side::Left, self.left.filter_decomposition());
        out.extend(tag_up(Side::Right, self.right.filter_decomposition()));
        canonize_up(self, out)
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        sum_level(&self.left, &self.right, n)
    }
}

/// `X₁ ⊕ X₂`: every left element lies below every right element.
///
/// A right ideal `⟨R, J⟩` denotes `{L}×X₁ ∪ {R}×J`; a left ideal
/// `⟨L, I⟩` denotes `{L}×I`.
pub struct LexSum {
    left: Presentation,
    right: Presentation,
}

impl LexSum {
    pub fn new(left: Presentation, right: Presentation) -> Self {
        LexSum { left, right }
    }

    fn side(&self, s: Side) -> &Presentation {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// `{L}×X₁` as left ideals.
    fn whole_left(&self) -> Vec<Ideal> {
        tag_down(Side::Left, self.left.ideal_decomposition())
    }

    /// `{R}×X₂` as right filters.
    fn whole_right(&self) -> Vec<Element> {
        tag_up(Side::Right, self.right.filter_decomposition())
    }
}

impl Wqo for LexSum {
    fn name(&self) -> String {
        format!("LexSum({},{})", self.left.name(), self.right.name())
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        check_sum_element(self.name(), &self.left, &self.right, x)
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        check_sum_ideal(self.name(), &self.left, &self.right, i)
    }

    fn normal_form(&self, x: &Element) -> Element {
        let (s, a) = sum_elem(x);
        Element::sum(s, self.side(s).normal_form(a))
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        match (sum_elem(x), sum_elem(y)) {
            ((Side::Left, _), (Side::Right, _)) => true,
            ((s, a), (t, b)) if s == t => self.side(s).leq(a, b),
            _ => false,
        }
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        match (sum_ideal(i), sum_ideal(j)) {
            ((Side::Left, _), (Side::Right, _)) => true,
            ((s, a), (t, b)) if s == t => self.side(s).ideal_leq(a, b),
            _ => false,
        }
    }

    fn principal(&self, x: &Element) -> Ideal {
        let (s, a) = sum_elem(x);
        Ideal::sum(s, self.side(s).principal(a))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let out = match sum_elem(x) {
            (Side::Left, a) => tag_down(Side::Left, self.left.complement_filter(a)),
            (Side::Right, a) => {
                let rest = self.right.complement_filter(a);
                if rest.is_empty() {
                    self.whole_left()
                } else {
                    tag_down(Side::Right, rest)
                }
            }
        };
        canonize_down(self, out)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let out = match (sum_elem(x), sum_elem(y)) {
            ((Side::Left, _), (Side::Right, _)) => vec![y.clone()],
            ((Side::Right, _), (Side::Left, _)) => vec![x.clone()],
            ((Side::Right, a), (Side::Right, b)) => {
                tag_up(Side::Right, self.right.intersect_filters(a, b))
            }
            ((Side::Left, a), (Side::Left, b)) => {
                let meet = self.left.intersect_filters(a, b);
                if meet.is_empty() {
                    self.whole_right()
                } else {
                    tag_up(Side::Left, meet)
                }
            }
        };
        canonize_up(self, out)
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let out = match sum_ideal(i) {
            (Side::Right, a) => tag_up(Side::Right, self.right.complement_ideal(a)),
            (Side::Left, a) => {
                let rest = self.left.complement_ideal(a);
                if rest.is_empty() {
                    self.whole_right()
                } else {
                    tag_up(Side::Left, rest)
                }
            }
        };
        canonize_up(self, out)
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let out = match (sum_ideal(i), sum_ideal(j)) {
            ((Side::Left, _), (Side::Right, _)) => vec![i.clone()],
            ((Side::Right, _), (Side::Left, _)) => vec![j.clone()],
            ((Side::Left, a), (Side::Left, b)) => {
                tag_down(Side::Left, self.left.intersect_ideals(a, b))
            }
            ((Side::Right, a), (Side::Right, b)) => {
                let meet = self.right.intersect_ideals(a, b);
                if meet.is_empty() {
                    self.whole_left()
                } else {
                    tag_down(Side::Right, meet)
                }
            }
        };
        canonize_down(self, out)
    }

    fn ideal_decomposition(&self) -> DownSet {
        let right = self.right.ideal_decomposition();
        let out = if right.is_empty() {
            self.whole_left()
        } else {
            tag_down(Side::Right, right)
        };
        canonize_down(self, out)
    }

    fn filter_decomposition(&self) -> UpSet {
        let left = self.left.filter_decomposition();
        let out = if left.is_empty() {
            self.whole_right()
        } else {
            tag_up(Side::Left, left)
        };
        canonize_up(self, out)
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        sum_level(&self.left, &self.right, n)
    }
}

/// `X₁ × X₂` ordered componentwise.
pub struct Product {
    first: Presentation,
    second: Presentation,
}

impl Product {
    pub fn new(first: Presentation, second: Presentation) -> Self {
        Product { first, second }
    }
}

fn pair_elem(x: &Element) -> (&Element, &Element) {
    match x {
        Element::Pair(a, b) => (a, b),
        _ => panic!("not a pair: {x:?}"),
    }
}

fn pair_ideal(i: &Ideal) -> (&Ideal, &Ideal) {
    match i {
        Ideal::Pair(a, b) => (a, b),
        _ => panic!("not a pair ideal: {i:?}"),
    }
}

fn cross_down(d1: &DownSet, d2: &DownSet) -> Vec<Ideal> {
    let mut out = Vec::with_capacity(d1.ideals.len() * d2.ideals.len());
    for a in &d1.ideals {
        for b in &d2.ideals {
            out.push(Ideal::pair(a.clone(), b.clone()));
        }
    }
    out
}

fn cross_up(u1: &UpSet, u2: &UpSet) -> Vec<Element> {
    let mut out = Vec::with_capacity(u1.generators.len() * u2.generators.len());
    for a in &u1.generators {
        for b in &u2.generators {
            out.push(Element::pair(a.clone(), b.clone()));
        }
    }
    out
}

impl Wqo for Product {
    fn name(&self) -> String {
        format!("Prod({},{})", self.first.name(), self.second.name())
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Pair(a, b) => {
                self.first.check_element(a)?;
                self.second.check_element(b)
            }
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        match i {
            Ideal::Pair(a, b) => {
                self.first.check_ideal(a)?;
                self.second.check_ideal(b)
            }
            _ => Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            }),
        }
    }

    fn normal_form(&self, x: &Element) -> Element {
        let (a, b) = pair_elem(x);
        Element::pair(self.first.normal_form(a), self.second.normal_form(b))
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        let ((a1, b1), (a2, b2)) = (pair_elem(x), pair_elem(y));
        self.first.leq(a1, a2) && self.second.leq(b1, b2)
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        let ((a1, b1), (a2, b2)) = (pair_ideal(i), pair_ideal(j));
        self.first.ideal_leq(a1, a2) && self.second.ideal_leq(b1, b2)
    }

    fn principal(&self, x: &Element) -> Ideal {
        let (a, b) = pair_elem(x);
        Ideal::pair(self.first.principal(a), self.second.principal(b))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let (a, b) = pair_elem(x);
        let mut out = cross_down(
            &self.first.complement_filter(a),
            &self.second.ideal_decomposition(),
        );
        out.extend(cross_down(
            &self.first.ideal_decomposition(),
            &self.second.complement_filter(b),
        ));
        canonize_down(self, out)
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let ((a1, b1), (a2, b2)) = (pair_elem(x), pair_elem(y));
        let out = cross_up(
            &self.first.intersect_filters(a1, a2),
            &self.second.intersect_filters(b1, b2),
        );
        canonize_up(self, out)
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let (a, b) = pair_ideal(i);
        let mut out = cross_up(
            &self.first.complement_ideal(a),
            &self.second.filter_decomposition(),
        );
        out.extend(cross_up(
            &self.first.filter_decomposition(),
            &self.second.complement_ideal(b),
        ));
        canonize_up(self, out)
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let ((a1, b1), (a2, b2)) = (pair_ideal(i), pair_ideal(j));
        let out = cross_down(
            &self.first.intersect_ideals(a1, a2),
            &self.second.intersect_ideals(b1, b2),
        );
        canonize_down(self, out)
    }

    fn ideal_decomposition(&self) -> DownSet {
        canonize_down(
            self,
            cross_down(
                &self.first.ideal_decomposition(),
                &self.second.ideal_decomposition(),
            ),
        )
    }

    fn filter_decomposition(&self) -> UpSet {
        canonize_up(
            self,
            cross_up(
                &self.first.filter_decomposition(),
                &self.second.filter_decomposition(),
            ),
        )
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let mut out = Vec::new();
        for k in 0..=n {
            let firsts = self.first.elements_of_size(k)?;
            if firsts.is_empty() {
                continue;
            }
            let seconds = self.second.elements_of_size(n - k)?;
            for a in &firsts {
                for b in &seconds {
                    out.push(Element::pair(a.clone(), b.clone()));
                }
            }
        }
        out.sort();
        Some(out)
    }
}

/// Right-nested product `X₁ × (X₂ × (… × Xₙ))`.
pub fn product_of(mut factors: Vec<Presentation>) -> Presentation {
    let last = factors.pop().expect("at least one factor");
    factors
        .into_iter()
        .rev()
        .fold(last, |acc, f| Presentation::new(Product::new(f, acc)))
}
