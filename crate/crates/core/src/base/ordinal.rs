//! Ordinals below ε₀ in Cantor normal form, and the space of ordinals below
//! a fixed bound.

use std::cmp::Ordering;

use crate::error::WqoError;
use crate::kernel::Wqo;
use crate::value::{DownSet, Element, Ideal, UpSet};

/// `ω^e₁·c₁ + … + ω^eₖ·cₖ` with `e₁ > … > eₖ` and every `cᵢ > 0`.
/// Zero has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cnf {
    terms: Vec<(Cnf, u64)>,
}

impl Cnf {
    pub fn zero() -> Cnf {
        Cnf::default()
    }

    pub fn nat(n: u64) -> Cnf {
        if n == 0 {
            Cnf::zero()
        } else {
            Cnf {
                terms: vec![(Cnf::zero(), n)],
            }
        }
    }

    pub fn omega() -> Cnf {
        Cnf::omega_pow(Cnf::nat(1))
    }

    /// `ω^e`.
    pub fn omega_pow(e: Cnf) -> Cnf {
        Cnf {
            terms: vec![(e, 1)],
        }
    }

    /// Builds a normal form, rejecting non-decreasing exponents and zero
    /// coefficients.
    pub fn from_terms(terms: Vec<(Cnf, u64)>) -> Result<Cnf, WqoError> {
        for (k, (e, c)) in terms.iter().enumerate() {
            if *c == 0 {
                return Err(WqoError::MalformedOrdinal("zero coefficient".into()));
            }
            if k > 0 && terms[k - 1].0 <= *e {
                return Err(WqoError::MalformedOrdinal(
                    "exponents must strictly decrease".into(),
                ));
            }
        }
        Ok(Cnf { terms })
    }

    pub fn terms(&self) -> &[(Cnf, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a natural number, if finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    pub fn successor(&self) -> Cnf {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((e, c)) if e.is_zero() => *c += 1,
            _ => terms.push((Cnf::zero(), 1)),
        }
        Cnf { terms }
    }

    /// Zero has size one; otherwise the sum over terms of exponent size
    /// plus coefficient.
    pub fn size(&self) -> usize {
        if self.is_zero() {
            1
        } else {
            self.terms.iter().map(|(e, c)| e.size() + *c as usize).sum()
        }
    }

    /// All ordinals of the given size, ascending.
    pub fn of_size(n: usize) -> Vec<Cnf> {
        let mut out = if n == 0 {
            Vec::new()
        } else if n == 1 {
            vec![Cnf::zero()]
        } else {
            term_sequences(n, None)
                .into_iter()
                .map(|terms| Cnf { terms })
                .collect()
        };
        out.sort();
        out
    }

    /// The ordinals of the given size strictly below `bound`, ascending.
    pub fn of_size_below(n: usize, bound: &Cnf) -> Vec<Cnf> {
        let mut out = below(n, bound);
        out.sort();
        out
    }
}

fn exponents(size: usize, bound: Option<&Cnf>) -> Vec<Cnf> {
    match bound {
        None => Cnf::of_size(size),
        Some(b) => below(size, b),
    }
}

/// Term lists of total weight `w` whose exponents stay below `bound`.
fn term_sequences(w: usize, bound: Option<&Cnf>) -> Vec<Vec<(Cnf, u64)>> {
    let mut out = Vec::new();
    if w == 0 {
        out.push(Vec::new());
        return out;
    }
    for head in 1..=w {
        // exponent size es ≥ 1, coefficient c ≥ 1, es + c = head
        for es in 1..head {
            let c = (head - es) as u64;
            for e in exponents(es, bound) {
                for rest in term_sequences(w - head, Some(&e)) {
                    let mut terms = vec![(e.clone(), c)];
                    terms.extend(rest);
                    out.push(terms);
                }
            }
        }
    }
    out
}

/// Ordinals of size `n` strictly below `bound`, unsorted.
fn below(n: usize, bound: &Cnf) -> Vec<Cnf> {
    let Some(((f, d), tail)) = bound.terms.split_first() else {
        return Vec::new();
    };
    if n == 1 {
        return vec![Cnf::zero()];
    }
    let tail = Cnf {
        terms: tail.to_vec(),
    };
    let mut out = Vec::new();
    let mut push = |e: &Cnf, c: u64, rest: Vec<(Cnf, u64)>| {
        let mut terms = vec![(e.clone(), c)];
        terms.extend(rest);
        out.push(Cnf { terms });
    };
    for head in 2..=n {
        for es in 1..head {
            let c = (head - es) as u64;
            for e in below(es, f) {
                for rest in term_sequences(n - head, Some(&e)) {
                    push(&e, c, rest);
                }
            }
            if f.size() != es || c > *d {
                continue;
            }
            if c < *d {
                for rest in term_sequences(n - head, Some(f)) {
                    push(f, c, rest);
                }
            } else if n == head {
                if !tail.is_zero() {
                    push(f, c, Vec::new());
                }
            } else if n - head >= 2 {
                for rest in below(n - head, &tail) {
                    push(f, c, rest.terms);
                }
            }
        }
    }
    out
}

impl Ord for Cnf {
    /// Lexicographic comparison of the term lists, exponents first.
    fn cmp(&self, other: &Self) -> Ordering {
        for ((e1, c1), (e2, c2)) in self.terms.iter().zip(&other.terms) {
            match e1.cmp(e2).then(c1.cmp(c2)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Cnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn cnf_leq(a: &Cnf, b: &Cnf) -> bool {
    a <= b
}

/// The ordinals below `bound`, ordered as ordinals. Ideals are the strict
/// cuts `{β | β < γ}` for `0 < γ ≤ bound`.
pub struct Ordinals {
    bound: Cnf,
}

impl Ordinals {
    pub fn new(bound: Cnf) -> Self {
        Ordinals { bound }
    }

    fn ordinal<'a>(&self, x: &'a Element) -> &'a Cnf {
        match x {
            Element::Ord(b) => b,
            _ => panic!("not an ordinal: {x:?}"),
        }
    }

    fn cut<'a>(&self, i: &'a Ideal) -> &'a Cnf {
        match i {
            Ideal::Cut(g) => g,
            _ => panic!("not a cut: {i:?}"),
        }
    }
}

impl Wqo for Ordinals {
    fn name(&self) -> String {
        format!("Ord[{}]", self.bound)
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Ord(b) if *b < self.bound => Ok(()),
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        match i {
            Ideal::Cut(g) if !g.is_zero() && *g <= self.bound => Ok(()),
            _ => Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            }),
        }
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        cnf_leq(self.ordinal(x), self.ordinal(y))
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        cnf_leq(self.cut(i), self.cut(j))
    }

    fn principal(&self, x: &Element) -> Ideal {
        Ideal::Cut(self.ordinal(x).successor())
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let b = self.ordinal(x);
        if b.is_zero() {
            DownSet::empty()
        } else {
            DownSet::new(vec![Ideal::Cut(b.clone())])
        }
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        UpSet::new(vec![self.ordinal(x).max(self.ordinal(y)).clone().into()])
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let g = self.cut(i);
        if *g == self.bound {
            UpSet::empty()
        } else {
            UpSet::new(vec![Element::Ord(g.clone())])
        }
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        DownSet::new(vec![Ideal::Cut(self.cut(i).min(self.cut(j)).clone())])
    }

    fn ideal_decomposition(&self) -> DownSet {
        if self.bound.is_zero() {
            DownSet::empty()
        } else {
            DownSet::new(vec![Ideal::Cut(self.bound.clone())])
        }
    }

    fn filter_decomposition(&self) -> UpSet {
        if self.bound.is_zero() {
            UpSet::empty()
        } else {
            UpSet::new(vec![Element::Ord(Cnf::zero())])
        }
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        Some(
            Cnf::of_size_below(n, &self.bound)
                .into_iter()
                .map(Element::Ord)
                .collect(),
        )
    }
}

impl From<Cnf> for Element {
    fn from(b: Cnf) -> Element {
        Element::Ord(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ordinals below ω^ω as coefficient vectors, highest power first.
    fn as_vector(b: &Cnf, width: usize) -> Vec<u64> {
        let mut v = vec![0; width];
        for (e, c) in b.terms() {
            let k = e.as_nat().unwrap() as usize;
            v[width - 1 - k] = *c;
        }
        v
    }

    #[test]
    fn comparison_matches_coefficient_vectors() {
        let all: Vec<Cnf> = (1..=7)
            .flat_map(Cnf::of_size)
            .filter(|b| b.terms().iter().all(|(e, _)| e.as_nat().is_some()))
            .collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    a.cmp(b),
                    as_vector(a, 8).cmp(&as_vector(b, 8)),
                    "{a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn omega_omega_is_not_below_omega_times_five_plus_three() {
        let ww = Cnf::omega_pow(Cnf::omega());
        let w5_3 = Cnf::from_terms(vec![(Cnf::nat(1), 5), (Cnf::zero(), 3)]).unwrap();
        assert!(!cnf_leq(&ww, &w5_3));
        assert!(cnf_leq(&w5_3, &ww));
    }

    #[test]
    fn levels_are_disjoint_and_sized() {
        let mut seen = std::collections::HashSet::new();
        for n in 0..=8 {
            for b in Cnf::of_size(n) {
                assert_eq!(b.size(), n);
                assert!(seen.insert(b));
            }
        }
        assert_eq!(Cnf::of_size(3), vec![Cnf::nat(2), Cnf::omega()]);
    }

    #[test]
    fn bounded_levels_match_filtering() {
        let bounds = [
            Cnf::nat(4),
            Cnf::omega(),
            Cnf::omega().successor().successor(),
            Cnf::omega_pow(Cnf::nat(2)),
            Cnf::from_terms(vec![(Cnf::nat(2), 1), (Cnf::nat(1), 2), (Cnf::zero(), 1)]).unwrap(),
            Cnf::omega_pow(Cnf::omega()),
            Cnf::omega_pow(Cnf::omega_pow(Cnf::omega())),
        ];
        for b in &bounds {
            for n in 0..=9 {
                let want: Vec<Cnf> = Cnf::of_size(n).into_iter().filter(|x| x < b).collect();
                assert_eq!(Cnf::of_size_below(n, b), want, "size {n} below {b}");
            }
        }
    }

    #[test]
    fn rejects_non_normal_forms() {
        assert!(Cnf::from_terms(vec![(Cnf::zero(), 1), (Cnf::nat(1), 1)]).is_err());
        assert!(Cnf::from_terms(vec![(Cnf::nat(1), 0)]).is_err());
    }

    #[test]
    fn successor_and_cuts() {
        let w2 = Ordinals::new(Cnf::omega_pow(Cnf::nat(2)));
        let w = Element::Ord(Cnf::omega());
        assert_eq!(w2.principal(&w), Ideal::Cut(Cnf::omega().successor()));
        assert_eq!(
            w2.complement_filter(&w),
            DownSet::new(vec![Ideal::Cut(Cnf::omega())])
        );
        assert!(w2
            .complement_ideal(&Ideal::Cut(Cnf::omega_pow(Cnf::nat(2))))
            .is_empty());
        assert!(w2
            .check_element(&Element::Ord(Cnf::omega_pow(Cnf::nat(2))))
            .is_err());
    }
}
