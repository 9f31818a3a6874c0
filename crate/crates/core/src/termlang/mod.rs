//! A small textual language for types, values and closed-set expressions.
//! See GRAMMAR.md at the repository root.

mod parse;
mod render;

use std::fmt;

use thiserror::Error;

use crate::base::{Cnf, FiniteQo, Naturals, Ordinals};
use crate::error::WqoError;
use crate::kernel::{self, ClosedSet, Presentation, Wqo};
use crate::sequences::{conjugacy, higman, stuttering};
use crate::sets_multisets::{Multisets, Powerset};
use crate::sum_product::{DisjointSum, LexSum, Product};
use crate::value::{DownSet, Element, Ideal, UpSet};

use parse::Parser;

/// A type of the language. Products are binary; `Prod(A,B,C)` is read as
/// `Prod(A,Prod(B,C))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TypeExpr {
    Nat,
    /// Ordinals strictly below the bound.
    Ord(Cnf),
    /// `pairs` lists the declared `a < b`; the order is their reflexive
    /// transitive closure.
    Fin {
        symbols: Vec<String>,
        pairs: Vec<(String, String)>,
    },
    Sum(Box<TypeExpr>, Box<TypeExpr>),
    LexSum(Box<TypeExpr>, Box<TypeExpr>),
    Prod(Box<TypeExpr>, Box<TypeExpr>),
    Star(Box<TypeExpr>),
    Stutter(Box<TypeExpr>),
    Conj(Box<TypeExpr>),
    Pset(Box<TypeExpr>),
    Mset(Box<TypeExpr>),
}

impl TypeExpr {
    /// Right-nested product of at least one factor.
    pub fn product(mut factors: Vec<TypeExpr>) -> TypeExpr {
        let last = factors.pop().expect("at least one factor");
        factors
            .into_iter()
            .rev()
            .fold(last, |acc, f| TypeExpr::Prod(Box::new(f), Box::new(acc)))
    }

    pub fn presentation(&self) -> Result<Presentation, WqoError> {
        Ok(match self {
            TypeExpr::Nat => Presentation::new(Naturals),
            TypeExpr::Ord(a) => Presentation::new(Ordinals::new(a.clone())),
            TypeExpr::Fin { symbols, pairs } => {
                let syms: Vec<&str> = symbols.iter().map(String::as_str).collect();
                let ps: Vec<(&str, &str)> = pairs
                    .iter()
                    .map(|(a, b)| (a.as_str(), b.as_str()))
                    .collect();
                Presentation::new(FiniteQo::new(&syms, &ps)?)
            }
            TypeExpr::Sum(a, b) => {
                Presentation::new(DisjointSum::new(a.presentation()?, b.presentation()?))
            }
            TypeExpr::LexSum(a, b) => {
                Presentation::new(LexSum::new(a.presentation()?, b.presentation()?))
            }
            TypeExpr::Prod(a, b) => {
                Presentation::new(Product::new(a.presentation()?, b.presentation()?))
            }
            TypeExpr::Star(a) => higman(a.presentation()?).1,
            TypeExpr::Stutter(a) => stuttering(a.presentation()?).into_presentation(),
            TypeExpr::Conj(a) => conjugacy(a.presentation()?).into_presentation(),
            TypeExpr::Pset(a) => Presentation::new(Powerset::new(a.presentation()?)),
            TypeExpr::Mset(a) => Presentation::new(Multisets::new(a.presentation()?)),
        })
    }
}

/// Syntax error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// Closed-set expression. `Full` and `Empty` take the polarity their
/// context requires.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Up(Vec<Element>),
    Down(Ideal),
    Full,
    Empty,
    Complement(Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
}

/// A set expression or a predicate on set expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Set(SetExpr),
    Member(Element, SetExpr),
    Subset(SetExpr, SetExpr),
}

/// Result of evaluating a [`Query`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Set(ClosedSet),
    Bool(bool),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Set(s) => write!(f, "{s}"),
            Answer::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("`{0}` mixes upward and downward closed sets")]
    Polarity(String),
    #[error(transparent)]
    Space(#[from] WqoError),
}

pub fn parse_type(text: &str) -> Result<TypeExpr, ParseError> {
    let mut p = Parser::new(text);
    let t = p.type_expr()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_value(text: &str, t: &TypeExpr) -> Result<Element, ParseError> {
    let mut p = Parser::new(text);
    let x = p.element(t)?;
    p.finish()?;
    Ok(x)
}

pub fn parse_ideal(text: &str, t: &TypeExpr) -> Result<Ideal, ParseError> {
    let mut p = Parser::new(text);
    let i = p.ideal(t)?;
    p.finish()?;
    Ok(i)
}

pub fn parse_set_expr(text: &str, t: &TypeExpr) -> Result<SetExpr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.set_expr(t)?;
    p.finish()?;
    Ok(e)
}

pub fn parse_query(text: &str, t: &TypeExpr) -> Result<Query, ParseError> {
    let mut p = Parser::new(text);
    let q = p.query(t)?;
    p.finish()?;
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Polarity {
    Up,
    Down,
}

impl Polarity {
    fn flip(self) -> Polarity {
        match self {
            Polarity::Up => Polarity::Down,
            Polarity::Down => Polarity::Up,
        }
    }
}

/// Polarity forced by the expression, `None` when either one fits.
fn polarity(e: &SetExpr) -> Result<Option<Polarity>, EvalError> {
    Ok(match e {
        SetExpr::Up(_) => Some(Polarity::Up),
        SetExpr::Down(_) => Some(Polarity::Down),
        SetExpr::Full | SetExpr::Empty => None,
        SetExpr::Complement(a) => polarity(a)?.map(Polarity::flip),
        SetExpr::Intersection(a, b) | SetExpr::Union(a, b) => match (polarity(a)?, polarity(b)?) {
            (Some(x), Some(y)) if x != y => {
                return Err(EvalError::Polarity(e.to_string()));
            }
            (x, y) => x.or(y),
        },
    })
}

fn eval_set(w: &dyn Wqo, e: &SetExpr, want: Polarity) -> Result<ClosedSet, EvalError> {
    Ok(match e {
        SetExpr::Up(xs) => {
            for x in xs {
                w.check_element(x)?;
            }
            ClosedSet::Up(kernel::canonize_up(w, xs.clone()))
        }
        SetExpr::Down(i) => {
            w.check_ideal(i)?;
            ClosedSet::Down(kernel::canonize_down(w, vec![i.clone()]))
        }
        SetExpr::Empty => match want {
            Polarity::Up => ClosedSet::Up(UpSet::empty()),
            Polarity::Down => ClosedSet::Down(DownSet::empty()),
        },
        SetExpr::Full => match want {
            Polarity::Up => ClosedSet::Up(w.filter_decomposition()),
            Polarity::Down => ClosedSet::Down(w.ideal_decomposition()),
        },
        SetExpr::Complement(a) => kernel::complement(w, &eval_set(w, a, want.flip())?)?,
        SetExpr::Intersection(a, b) => {
            kernel::intersect(w, &eval_set(w, a, want)?, &eval_set(w, b, want)?)?
        }
        SetExpr::Union(a, b) => kernel::union(w, &eval_set(w, a, want)?, &eval_set(w, b, want)?)?,
    })
}

/// Evaluates a query in the given space.
pub fn eval(w: &Presentation, q: &Query) -> Result<Answer, EvalError> {
    let top = |e: &SetExpr, fallback: Polarity| -> Result<Polarity, EvalError> {
        Ok(polarity(e)?.unwrap_or(fallback))
    };
    let w = &**w;
    Ok(match q {
        Query::Set(e) => Answer::Set(eval_set(w, e, top(e, Polarity::Up)?)?),
        Query::Member(x, e) => {
            let s = eval_set(w, e, top(e, Polarity::Up)?)?;
            Answer::Bool(kernel::member(w, &s, x)?)
        }
        Query::Subset(a, b) => {
            let pa = polarity(a)?;
            let pb = polarity(b)?;
            let want = match (pa, pb) {
                (Some(x), Some(y)) if x != y => {
                    return Err(EvalError::Polarity(format!("subset({a}, {b})")));
                }
                (x, y) => x.or(y).unwrap_or(Polarity::Up),
            };
            let (sa, sb) = (eval_set(w, a, want)?, eval_set(w, b, want)?);
            Answer::Bool(kernel::subset(w, &sa, &sb)?)
        }
    })
}
