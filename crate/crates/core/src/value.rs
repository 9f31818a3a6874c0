//! Elements, ideals and finite unions of them.
//!
//! Every type here derives `Ord`. That order is purely syntactic and has
//! nothing to do with the quasi-order of any space; it only fixes the order
//! in which canonical unions are listed.

use crate::base::ordinal::Cnf;

/// Tag of a sum component. `Left` is the first summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An element of some space, as a tagged tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Nat(u64),
    Ord(Cnf),
    Sym(String),
    Pair(Box<Element>, Box<Element>),
    Sum(Side, Box<Element>),
    Seq(Vec<Element>),
    /// Sorted and free of duplicates.
    Set(Vec<Element>),
    /// Sorted, duplicates kept.
    Bag(Vec<Element>),
}

impl Element {
    pub fn sym(name: &str) -> Element {
        Element::Sym(name.to_string())
    }

    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn sum(side: Side, x: Element) -> Element {
        Element::Sum(side, Box::new(x))
    }

    /// A word of symbols, one per character.
    pub fn word(s: &str) -> Element {
        Element::Seq(s.chars().map(|c| Element::Sym(c.to_string())).collect())
    }

    pub fn set(mut xs: Vec<Element>) -> Element {
        xs.sort();
        xs.dedup();
        Element::Set(xs)
    }

    pub fn bag(mut xs: Vec<Element>) -> Element {
        xs.sort();
        Element::Bag(xs)
    }

    /// Structural size used by the fair enumerators. Every space has
    /// finitely many elements of each size.
    pub fn size(&self) -> usize {
        match self {
            Element::Nat(n) => *n as usize + 1,
            Element::Ord(b) => b.size(),
            Element::Sym(_) => 1,
            Element::Pair(a, b) => a.size() + b.size(),
            Element::Sum(_, x) => x.size(),
            Element::Seq(xs) | Element::Bag(xs) => xs.iter().map(Element::size).sum(),
            Element::Set(xs) => 1 + xs.iter().map(Element::size).sum::<usize>(),
        }
    }
}

/// Ideal of the naturals: `↓n` or all of ℕ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NatIdeal {
    Finite(u64),
    Omega,
}

/// An ideal, encoded per constructor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ideal {
    Nat(NatIdeal),
    /// The strict cut `{β | β < γ}` of an ordinal, with `γ > 0`.
    Cut(Cnf),
    /// `↓x` in a finite quasi-order, `x` being the least name of its class.
    Principal(Element),
    Pair(Box<Ideal>, Box<Ideal>),
    Sum(Side, Box<Ideal>),
    /// Atom product over a sequence space. The empty product is `{ε}`.
    Product(Vec<Atom>),
    /// All finite sets whose members lie in the given downward closed set.
    Pf(DownSet),
}

impl Ideal {
    pub fn pair(a: Ideal, b: Ideal) -> Ideal {
        Ideal::Pair(Box::new(a), Box::new(b))
    }

    pub fn sum(side: Side, i: Ideal) -> Ideal {
        Ideal::Sum(side, Box::new(i))
    }
}

/// Factor of an atom product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `D*`: all words over the downward closed set `D`.
    Star(DownSet),
    /// `I + ε`: the empty word or one letter from `I`.
    One(Ideal),
}

/// Finite union of ideals.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DownSet {
    pub ideals: Vec<Ideal>,
}

impl DownSet {
    pub fn new(ideals: Vec<Ideal>) -> Self {
        DownSet { ideals }
    }

    pub fn empty() -> Self {
        DownSet::default()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

/// Finite union of principal filters `↑x`, stored by their generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpSet {
    pub generators: Vec<Element>,
}

impl UpSet {
    pub fn new(generators: Vec<Element>) -> Self {
        UpSet { generators }
    }

    pub fn empty() -> Self {
        UpSet::default()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}
