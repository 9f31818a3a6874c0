use crate::error::WqoError;
use crate::kernel::Wqo;
use crate::value::{DownSet, Element, Ideal, NatIdeal, UpSet};

/// `(ℕ, ≤)`. Ideals are `↓n` and `ℕ` itself.
pub struct Naturals;

fn nat(x: &Element) -> u64 {
    match x {
        Element::Nat(n) => *n,
        _ => panic!("not a natural: {x:?}"),
    }
}

fn nat_ideal(i: &Ideal) -> NatIdeal {
    match i {
        Ideal::Nat(n) => *n,
        _ => panic!("not an ideal of ℕ: {i:?}"),
    }
}

impl Wqo for Naturals {
    fn name(&self) -> String {
        "Nat".into()
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Nat(_) => Ok(()),
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        match i {
            Ideal::Nat(_) => Ok(()),
            _ => Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            }),
        }
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        nat(x) <= nat(y)
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        nat_ideal(i) <= nat_ideal(j)
    }

    fn principal(&self, x: &Element) -> Ideal {
        Ideal::Nat(NatIdeal::Finite(nat(x)))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        match nat(x) {
            0 => DownSet::empty(),
            n => DownSet::new(vec![Ideal::Nat(NatIdeal::Finite(n - 1))]),
        }
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        UpSet::new(vec![Element::Nat(nat(x).max(nat(y)))])
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        match nat_ideal(i) {
            NatIdeal::Finite(n) => UpSet::new(vec![Element::Nat(n + 1)]),
            NatIdeal::Omega => UpSet::empty(),
        }
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        DownSet::new(vec![Ideal::Nat(nat_ideal(i).min(nat_ideal(j)))])
    }

    fn ideal_decomposition(&self) -> DownSet {
        DownSet::new(vec![Ideal::Nat(NatIdeal::Omega)])
    }

    fn filter_decomposition(&self) -> UpSet {
        UpSet::new(vec![Element::Nat(0)])
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        Some(match n {
            0 => vec![],
            n => vec![Element::Nat(n as u64 - 1)],
        })
    }
}
