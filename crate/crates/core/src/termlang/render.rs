//! Textual form of values. Every `Display` here is inverted by the parser.

use std::fmt::{self, Display, Formatter, Write};

use crate::base::Cnf;
use crate::kernel::ClosedSet;
use crate::value::{Atom, DownSet, Element, Ideal, NatIdeal, Side, UpSet};

use super::{Query, SetExpr, TypeExpr};

fn side(s: Side) -> &'static str {
    match s {
        Side::Left => "L:",
        Side::Right => "R:",
    }
}

fn join<T: Display>(f: &mut Formatter<'_>, items: &[T], sep: &str) -> fmt::Result {
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl Display for Cnf {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                f.write_char('+')?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            f.write_char('w')?;
            match e.as_nat() {
                Some(1) => {}
                Some(n) => write!(f, "^{n}")?,
                None if *e == Cnf::omega() => f.write_str("^w")?,
                None => write!(f, "^({e})")?,
            }
            if *c > 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

/// Right-nested pairs flattened into one tuple.
fn tuple_items(x: &Element) -> Vec<&Element> {
    let mut items = Vec::new();
    let mut cur = x;
    while let Element::Pair(a, b) = cur {
        items.push(&**a);
        cur = b;
    }
    items.push(cur);
    items
}

impl Display for Element {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Ord(b) => write!(f, "{b}"),
            Element::Sym(s) => f.write_str(s),
            Element::Pair(..) => {
                f.write_char('(')?;
                join(f, &tuple_items(self), ",")?;
                f.write_char(')')
            }
            Element::Sum(s, x) => write!(f, "{}{x}", side(*s)),
            Element::Seq(xs) => {
                f.write_char('[')?;
                join(f, xs, ",")?;
                f.write_char(']')
            }
            Element::Set(xs) => {
                f.write_char('{')?;
                join(f, xs, ",")?;
                f.write_char('}')
            }
            Element::Bag(xs) => {
                f.write_str("{|")?;
                join(f, xs, ",")?;
                f.write_str("|}")
            }
        }
    }
}

/// The `dw(…)` spelling, available when the ideal is built from naturals,
/// finite principal ideals, pairs and sum tags only.
fn marking(i: &Ideal) -> Option<String> {
    Some(match i {
        Ideal::Nat(NatIdeal::Finite(n)) => n.to_string(),
        Ideal::Nat(NatIdeal::Omega) => "omega".into(),
        Ideal::Principal(x) => x.to_string(),
        Ideal::Sum(s, j) => format!("{}{}", side(*s), marking(j)?),
        Ideal::Pair(..) => {
            let items = ideal_tuple_items(i)
                .into_iter()
                .map(marking)
                .collect::<Option<Vec<_>>>()?;
            format!("({})", items.join(","))
        }
        _ => return None,
    })
}

fn ideal_tuple_items(i: &Ideal) -> Vec<&Ideal> {
    let mut items = Vec::new();
    let mut cur = i;
    while let Ideal::Pair(a, b) = cur {
        items.push(&**a);
        cur = b;
    }
    items.push(cur);
    items
}

impl Display for Ideal {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if let Some(m) = marking(self) {
            return write!(f, "dw({m})");
        }
        match self {
            Ideal::Cut(g) => write!(f, "cut({g})"),
            Ideal::Pair(..) => {
                f.write_char('(')?;
                join(f, &ideal_tuple_items(self), ",")?;
                f.write_char(')')
            }
            Ideal::Sum(s, j) => write!(f, "{}{j}", side(*s)),
            Ideal::Product(atoms) if atoms.is_empty() => f.write_str("star()"),
            Ideal::Product(atoms) => join(f, atoms, "."),
            Ideal::Pf(d) => {
                f.write_str("pf(")?;
                join(f, &d.ideals, " | ")?;
                f.write_char(')')
            }
            Ideal::Nat(_) | Ideal::Principal(_) => unreachable!("always marked"),
        }
    }
}

impl Display for Atom {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Star(d) => {
                f.write_str("star(")?;
                join(f, &d.ideals, " | ")?;
                f.write_char(')')
            }
            Atom::One(i) => write!(f, "one({i})"),
        }
    }
}

impl Display for DownSet {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        join(f, &self.ideals, " | ")
    }
}

impl Display for UpSet {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        for (k, x) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "up({x})")?;
        }
        Ok(())
    }
}

impl Display for ClosedSet {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            ClosedSet::Up(u) => write!(f, "{u}"),
            ClosedSet::Down(d) => write!(f, "{d}"),
        }
    }
}

fn type_tuple_items(t: &TypeExpr) -> Vec<&TypeExpr> {
    let mut items = Vec::new();
    let mut cur = t;
    while let TypeExpr::Prod(a, b) = cur {
        items.push(&**a);
        cur = b;
    }
    items.push(cur);
    items
}

impl Display for TypeExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            TypeExpr::Nat => f.write_str("Nat"),
            TypeExpr::Ord(a) => write!(f, "Ord[{a}]"),
            TypeExpr::Fin { symbols, pairs } => {
                write!(f, "Fin{{{}", symbols.join(","))?;
                if !pairs.is_empty() {
                    let ps: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                    write!(f, " | {}", ps.join(","))?;
                }
                f.write_char('}')
            }
            TypeExpr::Sum(a, b) => write!(f, "Sum({a},{b})"),
            TypeExpr::LexSum(a, b) => write!(f, "LexSum({a},{b})"),
            TypeExpr::Prod(..) => {
                f.write_str("Prod(")?;
                join(f, &type_tuple_items(self), ",")?;
                f.write_char(')')
            }
            TypeExpr::Star(a) => write!(f, "Star({a})"),
            TypeExpr::Stutter(a) => write!(f, "Stutter({a})"),
            TypeExpr::Conj(a) => write!(f, "Conj({a})"),
            TypeExpr::Pset(a) => write!(f, "Pset({a})"),
            TypeExpr::Mset(a) => write!(f, "Mset({a})"),
        }
    }
}

impl Display for SetExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Up(xs) => {
                f.write_str("up(")?;
                join(f, xs, ",")?;
                f.write_char(')')
            }
            SetExpr::Down(i) => write!(f, "{i}"),
            SetExpr::Full => f.write_str("full"),
            SetExpr::Empty => f.write_str("empty"),
            SetExpr::Complement(a) => write!(f, "comp({a})"),
            SetExpr::Intersection(a, b) => {
                for (k, e) in [a, b].into_iter().enumerate() {
                    if k > 0 {
                        f.write_str(" & ")?;
                    }
                    match **e {
                        SetExpr::Union(..) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            SetExpr::Union(a, b) => write!(f, "{a} | {b}"),
        }
    }
}

impl Display for Query {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Query::Set(e) => write!(f, "{e}"),
            Query::Member(x, e) => write!(f, "in({x}, {e})"),
            Query::Subset(a, b) => write!(f, "subset({a}, {b})"),
        }
    }
}
