//! Backward coverability for Petri nets over `ℕ^k`.
//!
//! The set of markings from which the target can be covered is upward
//! closed. Starting from `↑target`, each round adds the minimal
//! predecessors of every generator; the ascending chain stabilizes because
//! `ℕ^k` is a well-quasi-order.

use std::collections::{HashMap, VecDeque};

use serde::Deserialize;
use thiserror::Error;

use wqo::kernel::{canonize_up, member_up, subset_up};
use wqo::termlang::TypeExpr;
use wqo::{Element, Presentation, UpSet};

#[derive(Debug, Error)]
pub enum NetError {
    #[error("malformed net: {0}")]
    Json(#[from] serde_json::Error),
    #[error("a net needs at least one place")]
    NoPlaces,
    #[error("{what} has {got} entries, the net has {places} places")]
    Dimension {
        what: String,
        got: usize,
        places: usize,
    },
    #[error("`{0}` is not a comma-separated list of naturals")]
    Marking(String),
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Transition {
    pub pre: Vec<u64>,
    pub post: Vec<u64>,
    #[serde(default)]
    pub name: Option<String>,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct PetriNet {
    pub places: usize,
    pub transitions: Vec<Transition>,
}

impl PetriNet {
    pub fn from_json(text: &str) -> Result<PetriNet, NetError> {
        let net: PetriNet = serde_json::from_str(text)?;
        net.validate()?;
        Ok(net)
    }

    pub fn validate(&self) -> Result<(), NetError> {
        if self.places == 0 {
            return Err(NetError::NoPlaces);
        }
        for (k, t) in self.transitions.iter().enumerate() {
            let label = t.name.clone().unwrap_or_else(|| format!("transition {k}"));
            self.check_len(&format!("pre of {label}"), &t.pre)?;
            self.check_len(&format!("post of {label}"), &t.post)?;
        }
        Ok(())
    }

    pub fn check_len(&self, what: &str, v: &[u64]) -> Result<(), NetError> {
        if v.len() == self.places {
            Ok(())
        } else {
            Err(NetError::Dimension {
                what: what.to_string(),
                got: v.len(),
                places: self.places,
            })
        }
    }

    /// The marking after firing `t` in `m`, if `t` is enabled.
    pub fn fire(&self, m: &[u64], t: &Transition) -> Option<Vec<u64>> {
        m.iter()
            .zip(&t.pre)
            .zip(&t.post)
            .map(|((&x, &p), &q)| x.checked_sub(p).map(|y| y + q))
            .collect()
    }

    /// Least marking from which `t` leads to a marking above `g`.
    pub fn predecessor(&self, g: &[u64], t: &Transition) -> Vec<u64> {
        g.iter()
            .zip(&t.pre)
            .zip(&t.post)
            .map(|((&x, &p), &q)| p + x.saturating_sub(q))
            .collect()
    }

    /// `ℕ^k` for this net.
    pub fn state_space(&self) -> Presentation {
        TypeExpr::product(vec![TypeExpr::Nat; self.places])
            .presentation()
            .expect("products of naturals are well formed")
    }

    /// `U` together with the minimal predecessors of its generators, in
    /// canonical form.
    pub fn step(&self, space: &Presentation, u: &UpSet) -> UpSet {
        let mut gens = u.generators.clone();
        for g in &u.generators {
            let v = to_vector(g);
            for t in &self.transitions {
                gens.push(marking(&self.predecessor(&v, t)));
            }
        }
        canonize_up(&**space, gens)
    }
}

/// Parses `1,0,2`.
pub fn parse_marking(text: &str) -> Result<Vec<u64>, NetError> {
    text.split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| NetError::Marking(text.to_string()))
}

/// A marking as a right-nested tuple.
pub fn marking(v: &[u64]) -> Element {
    let (last, init) = v.split_last().expect("at least one place");
    init.iter().rev().fold(Element::Nat(*last), |acc, &n| {
        Element::pair(Element::Nat(n), acc)
    })
}

pub fn to_vector(x: &Element) -> Vec<u64> {
    match x {
        Element::Nat(n) => vec![*n],
        Element::Pair(a, b) => {
            let mut v = to_vector(a);
            v.extend(to_vector(b));
            v
        }
        _ => panic!("not a marking: {x}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub coverable: bool,
    /// Markings from which the target can be covered.
    pub basis: UpSet,
    /// Rounds of the fixpoint, the last one adding nothing.
    pub iterations: usize,
}

pub fn coverability(net: &PetriNet, initial: &[u64], target: &[u64]) -> Result<Coverage, NetError> {
    net.validate()?;
    net.check_len("initial marking", initial)?;
    net.check_len("target marking", target)?;
    let space = net.state_space();
    let mut u = canonize_up(&*space, vec![marking(target)]);
    let mut iterations = 0;
    loop {
        iterations += 1;
        let next = net.step(&space, &u);
        if subset_up(&*space, &next, &u) {
            break;
        }
        u = next;
    }
    Ok(Coverage {
        coverable: member_up(&*space, &u, &marking(initial)),
        basis: u,
        iterations,
    })
}

/// Breadth-first search over markings with at most `bound` tokens per
/// place. Returns the names (or indices) of a firing sequence reaching a
/// marking above `target`.
pub fn forward_search(
    net: &PetriNet,
    initial: &[u64],
    target: &[u64],
    bound: u64,
) -> Option<Vec<String>> {
    let covers = |m: &[u64]| m.iter().zip(target).all(|(x, y)| x >= y);
    let mut parent: HashMap<Vec<u64>, Option<(Vec<u64>, usize)>> = HashMap::new();
    let mut queue = VecDeque::from([initial.to_vec()]);
    parent.insert(initial.to_vec(), None);
    while let Some(m) = queue.pop_front() {
        if covers(&m) {
            let mut path = Vec::new();
            let mut cur = m;
            while let Some(Some((prev, t))) = parent.get(&cur) {
                let tr = &net.transitions[*t];
                path.push(tr.name.clone().unwrap_or_else(|| format!("t{t}")));
                cur = prev.clone();
            }
            path.reverse();
            return Some(path);
        }
        for (k, t) in net.transitions.iter().enumerate() {
            if let Some(n) = net.fire(&m, t) {
                if n.iter().all(|&x| x <= bound) && !parent.contains_key(&n) {
                    parent.insert(n.clone(), Some((m.clone(), k)));
                    queue.push_back(n);
                }
            }
        }
    }
    None
}
