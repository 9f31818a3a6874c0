use std::collections::HashMap;

use crate::error::WqoError;
use crate::kernel::{canonize_down, canonize_up, Wqo};
use crate::value::{DownSet, Element, Ideal, UpSet};

/// A finite quasi-order on named symbols. Every ideal is principal.
pub struct FiniteQo {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
    /// `leq[a][b]` iff `a ≤ b`, reflexive and transitive.
    leq: Vec<Vec<bool>>,
}

impl FiniteQo {
    /// Builds the reflexive-transitive closure of the given pairs `a ≤ b`.
    pub fn new(symbols: &[&str], pairs: &[(&str, &str)]) -> Result<Self, WqoError> {
        let symbols: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
        let index: HashMap<String, usize> = symbols
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k))
            .collect();
        let n = symbols.len();
        let mut leq = vec![vec![false; n]; n];
        for (k, row) in leq.iter_mut().enumerate() {
            row[k] = true;
        }
        for (a, b) in pairs {
            let ia = *index
                .get(*a)
                .ok_or_else(|| WqoError::DanglingSymbol(a.to_string()))?;
            let ib = *index
                .get(*b)
                .ok_or_else(|| WqoError::DanglingSymbol(b.to_string()))?;
            leq[ia][ib] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    let row = leq[k].clone();
                    for (cell, &via) in leq[i].iter_mut().zip(&row) {
                        *cell |= via;
                    }
                }
            }
        }
        Ok(FiniteQo {
            symbols,
            index,
            leq,
        })
    }

    /// Discrete order on the given symbols.
    pub fn discrete(symbols: &[&str]) -> Self {
        FiniteQo::new(symbols, &[]).expect("no pairs")
    }

    fn idx(&self, x: &Element) -> usize {
        match x {
            Element::Sym(s) => self.index[s],
            _ => panic!("not a symbol: {x:?}"),
        }
    }

    fn ideal_idx(&self, i: &Ideal) -> usize {
        match i {
            Ideal::Principal(x) => self.idx(x),
            _ => panic!("not an ideal of a finite order: {i:?}"),
        }
    }

    /// Least name of the equivalence class of `k`.
    fn representative(&self, k: usize) -> Element {
        let name = (0..self.symbols.len())
            .filter(|&j| self.leq[j][k] && self.leq[k][j])
            .map(|j| &self.symbols[j])
            .min()
            .expect("reflexive");
        Element::Sym(name.clone())
    }

    fn down(&self, ks: impl Iterator<Item = usize>) -> DownSet {
        let ideals = ks
            .map(|k| Ideal::Principal(self.representative(k)))
            .collect();
        canonize_down(self, ideals)
    }

    fn up(&self, ks: impl Iterator<Item = usize>) -> UpSet {
        let gens = ks.map(|k| Element::Sym(self.symbols[k].clone())).collect();
        canonize_up(self, gens)
    }
}

impl Wqo for FiniteQo {
    fn name(&self) -> String {
        format!("Fin{{{}}}", self.symbols.join(","))
    }

    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        match x {
            Element::Sym(s) if self.index.contains_key(s) => Ok(()),
            _ => Err(WqoError::NotAnElement {
                value: x.to_string(),
                space: self.name(),
            }),
        }
    }

    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        match i {
            Ideal::Principal(x @ Element::Sym(s))
                if self.index.contains_key(s) && self.representative(self.idx(x)) == *x =>
            {
                Ok(())
            }
            _ => Err(WqoError::NotAnIdeal {
                value: i.to_string(),
                space: self.name(),
            }),
        }
    }

    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.leq[self.idx(x)][self.idx(y)]
    }

    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.leq[self.ideal_idx(i)][self.ideal_idx(j)]
    }

    fn principal(&self, x: &Element) -> Ideal {
        Ideal::Principal(self.representative(self.idx(x)))
    }

    fn complement_filter(&self, x: &Element) -> DownSet {
        let a = self.idx(x);
        self.down((0..self.symbols.len()).filter(|&k| !self.leq[a][k]))
    }

    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        let (a, b) = (self.idx(x), self.idx(y));
        self.up((0..self.symbols.len()).filter(|&k| self.leq[a][k] && self.leq[b][k]))
    }

    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        let a = self.ideal_idx(i);
        self.up((0..self.symbols.len()).filter(|&k| !self.leq[k][a]))
    }

    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        let (a, b) = (self.ideal_idx(i), self.ideal_idx(j));
        self.down((0..self.symbols.len()).filter(|&k| self.leq[k][a] && self.leq[k][b]))
    }

    fn ideal_decomposition(&self) -> DownSet {
        self.down(0..self.symbols.len())
    }

    fn filter_decomposition(&self) -> UpSet {
        self.up(0..self.symbols.len())
    }

    fn normal_form(&self, x: &Element) -> Element {
        self.representative(self.idx(x))
    }

    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        let mut out = Vec::new();
        if n == 1 {
            out = self
                .symbols
                .iter()
                .map(|s| Element::Sym(s.clone()))
                .collect();
            out.sort();
        }
        Some(out)
    }
}
