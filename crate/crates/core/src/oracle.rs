//! Brute-force cross-checking of a presentation.
//!
//! The oracle only trusts three things of the space under test: the order on
//! elements, principal ideals with ideal inclusion, and the enumerator. Every
//! symbolic result is compared pointwise, over a bounded enumeration, with
//! what those three say it should contain.

use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::WqoError;
use crate::kernel::{self, ClosedSet, Presentation, Wqo};
use crate::termlang::TypeExpr;
use crate::value::{DownSet, Element, Ideal, UpSet};

/// Bounds on brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_elements: usize,
    pub max_size: usize,
}

impl Budget {
    pub fn new(max_elements: usize, max_size: usize) -> Self {
        Budget {
            max_elements,
            max_size,
        }
    }

    /// More elements and a few more size levels, for witness searches.
    fn widened(&self) -> Budget {
        Budget::new(self.max_elements * 4, self.max_size + 4)
    }
}

/// Elements of `t` in order of size, then syntactically, within the budget.
pub fn enumerate(t: &TypeExpr, b: &Budget) -> Result<Vec<Element>, WqoError> {
    enumerate_space(&*t.presentation()?, b)
}

pub fn enumerate_space(w: &dyn Wqo, b: &Budget) -> Result<Vec<Element>, WqoError> {
    kernel::enumerate(w, b.max_size, b.max_elements)
}

/// Membership computed from the order and principal ideals alone.
pub fn contains(w: &dyn Wqo, s: &ClosedSet, x: &Element) -> bool {
    match s {
        ClosedSet::Up(u) => u.generators.iter().any(|g| w.leq(g, x)),
        ClosedSet::Down(d) => {
            let px = w.principal(x);
            d.ideals.iter().any(|i| w.ideal_leq(&px, i))
        }
    }
}

/// The members of `s` among `universe`.
pub fn extension_of(w: &dyn Wqo, s: &ClosedSet, universe: &[Element]) -> Vec<Element> {
    universe
        .iter()
        .filter(|x| contains(w, s, x))
        .cloned()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The budget was too small to find a witness either way.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub cases: usize,
    /// First counterexample, or the case that stayed undecided.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub space: String,
    pub seed: u64,
    pub universe: usize,
    pub checks: Vec<CheckResult>,
    pub millis: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn status_of(&self, check: &str) -> Option<Status> {
        self.checks
            .iter()
            .find(|c| c.check == check)
            .map(|c| c.status)
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "space {} seed {} universe {}\n",
            self.space, self.seed, self.universe
        );
        for c in &self.checks {
            out.push_str(&format!("{} {} ({} cases)", c.status, c.check, c.cases));
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
        }
        out
    }

    /// One JSON object per check.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let line = serde_json::json!({
                "space": self.space,
                "seed": self.seed,
                "check": c.check,
                "status": c.status,
                "cases": c.cases,
                "detail": c.detail,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

/// How many samples of each kind the checks draw.
const SAMPLES: usize = 24;
const POOL: usize = 40;

struct Checker<'a> {
    w: &'a dyn Wqo,
    universe: &'a [Element],
    wide: &'a [Element],
    principals: Vec<Ideal>,
    rng: ChaCha8Rng,
    results: Vec<CheckResult>,
}

/// Accumulates the cases of one check.
struct Tally {
    check: &'static str,
    cases: usize,
    failure: Option<String>,
    undecided: Option<String>,
}

impl Tally {
    fn new(check: &'static str) -> Self {
        Tally {
            check,
            cases: 0,
            failure: None,
            undecided: None,
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn undecided(&mut self, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if self.undecided.is_none() {
            self.undecided = Some(detail());
        }
    }

    fn finish(self) -> CheckResult {
        let (status, detail) = match (self.failure, self.undecided) {
            (Some(f), _) => (Status::Fail, Some(f)),
            (None, Some(u)) => (Status::Inconclusive, Some(u)),
            (None, None) => (Status::Pass, None),
        };
        CheckResult {
            check: self.check.to_string(),
            status,
            cases: self.cases,
            detail,
        }
    }
}

impl<'a> Checker<'a> {
    fn sample<T: Clone>(&mut self, xs: &[T], n: usize) -> Vec<T> {
        if xs.len() <= n {
            return xs.to_vec();
        }
        xs.choose_multiple(&mut self.rng, n).cloned().collect()
    }

    fn pairs<T: Clone>(&mut self, xs: &[T], n: usize) -> Vec<(T, T)> {
        if xs.is_empty() {
            return Vec::new();
        }
        (0..n)
            .map(|_| {
                let a = xs[self.rng.gen_range(0..xs.len())].clone();
                let b = xs[self.rng.gen_range(0..xs.len())].clone();
                (a, b)
            })
            .collect()
    }

    fn in_ideal(&self, k: usize, i: &Ideal) -> bool {
        self.w.ideal_leq(&self.principals[k], i)
    }

    fn down_ext(&self, d: &DownSet) -> Vec<bool> {
        (0..self.universe.len())
            .map(|k| d.ideals.iter().any(|i| self.in_ideal(k, i)))
            .collect()
    }

    fn up_ext(&self, u: &UpSet) -> Vec<bool> {
        self.universe
            .iter()
            .map(|x| u.generators.iter().any(|g| self.w.leq(g, x)))
            .collect()
    }

    fn set_ext(&self, s: &ClosedSet) -> Vec<bool> {
        match s {
            ClosedSet::Up(u) => self.up_ext(u),
            ClosedSet::Down(d) => self.down_ext(d),
        }
    }

    /// First universe element where the computed and expected extensions
    /// disagree.
    fn disagreement(&self, got: &[bool], want: impl Fn(usize) -> bool) -> Option<&Element> {
        (0..self.universe.len())
            .find(|&k| got[k] != want(k))
            .map(|k| &self.universe[k])
    }

    fn push(&mut self, t: Tally) {
        self.results.push(t.finish());
    }

    fn order_laws(&mut self) {
        let mut refl = Tally::new("order/reflexive");
        for x in self.universe {
            refl.case(self.w.leq(x, x), || format!("{x} is not below itself"));
        }
        self.push(refl);

        let mut trans = Tally::new("order/transitive");
        let xs = self.sample(self.universe, SAMPLES);
        let zs = self.sample(self.universe, SAMPLES);
        for x in &xs {
            for y in self.universe.iter().filter(|y| self.w.leq(x, y)) {
                for z in zs.iter().filter(|z| self.w.leq(y, z)) {
                    trans.case(self.w.leq(x, z), || format!("{x} ≤ {y} ≤ {z}"));
                }
            }
        }
        self.push(trans);

        let mut pi = Tally::new("principal/extensional");
        for x in &xs {
            let px = self.w.principal(x);
            for (k, u) in self.universe.iter().enumerate() {
                pi.case(self.in_ideal(k, &px) == self.w.leq(u, x), || {
                    format!("{u} in ↓{x} disagrees with the order")
                });
            }
        }
        self.push(pi);
    }

    fn canonical_up(&self, t: &mut Tally, what: &str, u: &UpSet) {
        let again = kernel::canonize_up(self.w, u.generators.clone());
        t.case(again == *u, || {
            format!("{what} returned {u}, canonical form is {again}")
        });
    }

    fn canonical_down(&self, t: &mut Tally, what: &str, d: &DownSet) {
        let again = kernel::canonize_down(self.w, d.ideals.clone());
        t.case(again == *d, || {
            format!("{what} returned {d}, canonical form is {again}")
        });
    }

    /// The seven procedures against their definitions. Returns the ideal pool
    /// gathered on the way.
    fn procedures(&mut self) -> Vec<Ideal> {
        let mut canon = Tally::new("canonical/forms");
        let xs = self.sample(self.universe, SAMPLES);
        let mut pool: Vec<Ideal> = xs.iter().map(|x| self.w.principal(x)).collect();

        let mut cf = Tally::new("complement-filter/extensional");
        for x in &xs {
            let d = self.w.complement_filter(x);
            let got = self.down_ext(&d);
            let bad = self.disagreement(&got, |k| !self.w.leq(x, &self.universe[k]));
            cf.case(bad.is_none(), || {
                format!("X∖↑{x} = {d} wrong at {}", bad.unwrap())
            });
            self.canonical_down(&mut canon, &format!("X∖↑{x}"), &d);
            pool.extend(d.ideals);
        }
        self.push(cf);

        let mut fi = Tally::new("intersect-filters/extensional");
        for (x, y) in self.pairs(self.universe, SAMPLES) {
            let u = self.w.intersect_filters(&x, &y);
            let got = self.up_ext(&u);
            let bad = self.disagreement(&got, |k| {
                let z = &self.universe[k];
                self.w.leq(&x, z) && self.w.leq(&y, z)
            });
            fi.case(bad.is_none(), || {
                format!("↑{x} ∩ ↑{y} = {u} wrong at {}", bad.unwrap())
            });
            self.canonical_up(&mut canon, &format!("↑{x} ∩ ↑{y}"), &u);
        }
        self.push(fi);

        let xi = self.w.ideal_decomposition();
        pool.extend(xi.ideals.iter().cloned());
        pool.sort();
        pool.dedup();
        let mut pool = self.sample(&pool, POOL);
        pool.sort();

        let mut ii = Tally::new("intersect-ideals/extensional");
        for (i, j) in self.pairs(&pool, SAMPLES) {
            let d = self.w.intersect_ideals(&i, &j);
            let got = self.down_ext(&d);
            let bad = self.disagreement(&got, |k| self.in_ideal(k, &i) && self.in_ideal(k, &j));
            ii.case(bad.is_none(), || {
                format!("{i} ∩ {j} = {d} wrong at {}", bad.unwrap())
            });
            self.canonical_down(&mut canon, &format!("{i} ∩ {j}"), &d);
            pool.extend(d.ideals);
        }
        self.push(ii);
        pool.sort();
        pool.dedup();

        let mut ci = Tally::new("complement-ideal/extensional");
        for i in &pool {
            let u = self.w.complement_ideal(i);
            let got = self.up_ext(&u);
            let bad = self.disagreement(&got, |k| !self.in_ideal(k, i));
            ci.case(bad.is_none(), || {
                format!("X∖{i} = {u} wrong at {}", bad.unwrap())
            });
            self.canonical_up(&mut canon, &format!("X∖{i}"), &u);
        }
        self.push(ci);

        let mut dec = Tally::new("decomposition/extensional");
        let got = self.down_ext(&xi);
        let bad = self.disagreement(&got, |_| true);
        dec.case(bad.is_none(), || {
            format!("ideal decomposition {xi} misses {}", bad.unwrap())
        });
        let xf = self.w.filter_decomposition();
        let got = self.up_ext(&xf);
        let bad = self.disagreement(&got, |_| true);
        dec.case(bad.is_none(), || {
            format!("filter decomposition {xf} misses {}", bad.unwrap())
        });
        self.canonical_down(&mut canon, "ideal decomposition", &xi);
        self.canonical_up(&mut canon, "filter decomposition", &xf);
        self.push(dec);
        self.push(canon);
        pool
    }

    fn ideal_inclusion(&mut self, pool: &[Ideal]) {
        let mut sound = Tally::new("ideal-inclusion/sound");
        let mut complete = Tally::new("ideal-inclusion/complete");
        let exts: Vec<Vec<bool>> = pool
            .iter()
            .map(|i| {
                (0..self.universe.len())
                    .map(|k| self.in_ideal(k, i))
                    .collect()
            })
            .collect();
        for (a, i) in pool.iter().enumerate() {
            for (b, j) in pool.iter().enumerate() {
                let inside = (0..self.universe.len()).all(|k| !exts[a][k] || exts[b][k]);
                if self.w.ideal_leq(i, j) {
                    sound.case(inside, || {
                        format!("{i} ⊆ {j} claimed, fails on the universe")
                    });
                } else if inside {
                    complete.undecided(|| format!("no witness for {i} ⊄ {j}"));
                } else {
                    complete.case(true, String::new);
                }
            }
        }
        self.push(sound);
        self.push(complete);
    }

    fn random_set(&mut self, pool: &[Ideal]) -> ClosedSet {
        let n = self.rng.gen_range(0..=3);
        if self.rng.gen_bool(0.5) || pool.is_empty() {
            let gens = self.sample(self.universe, n);
            ClosedSet::Up(kernel::canonize_up(self.w, gens))
        } else {
            let ideals = self.sample(pool, n);
            ClosedSet::Down(kernel::canonize_down(self.w, ideals))
        }
    }

    fn set_operations(&mut self, pool: &[Ideal]) {
        let sets: Vec<ClosedSet> = (0..SAMPLES).map(|_| self.random_set(pool)).collect();
        let exts: Vec<Vec<bool>> = sets.iter().map(|s| self.set_ext(s)).collect();
        let w = self.w;

        let mut member = Tally::new("member/extensional");
        let mut comp = Tally::new("complement/extensional");
        let mut invol = Tally::new("complement/involution");
        for (s, e) in sets.iter().zip(&exts) {
            for (k, x) in self.universe.iter().enumerate() {
                let m = kernel::member(w, s, x).expect("well-typed");
                member.case(m == e[k], || format!("member({x}, {s}) = {m}"));
            }
            let c = kernel::complement(w, s).expect("well-typed");
            let got = self.set_ext(&c);
            let bad = self.disagreement(&got, |k| !e[k]);
            comp.case(bad.is_none(), || {
                format!("comp({s}) = {c} wrong at {}", bad.unwrap())
            });
            let cc = kernel::complement(w, &c).expect("well-typed");
            let same = kernel::subset(w, &cc, s).unwrap() && kernel::subset(w, s, &cc).unwrap();
            invol.case(same, || format!("comp(comp({s})) = {cc}"));
        }
        self.push(member);
        self.push(comp);
        self.push(invol);

        let mut union = Tally::new("union/extensional");
        let mut inter = Tally::new("intersect/extensional");
        let mut sub_sound = Tally::new("subset/sound");
        let mut sub_complete = Tally::new("subset/complete");
        let idx: Vec<usize> = (0..sets.len()).collect();
        for (a, b) in self.pairs(&idx, SAMPLES * 2) {
            let (s, t) = (&sets[a], &sets[b]);
            if std::mem::discriminant(s) != std::mem::discriminant(t) {
                continue;
            }
            let u = kernel::union(w, s, t).unwrap();
            let got = self.set_ext(&u);
            let bad = self.disagreement(&got, |k| exts[a][k] || exts[b][k]);
            union.case(bad.is_none(), || {
                format!("{s} ∪ {t} = {u} wrong at {}", bad.unwrap())
            });
            let i = kernel::intersect(w, s, t).unwrap();
            let got = self.set_ext(&i);
            let bad = self.disagreement(&got, |k| exts[a][k] && exts[b][k]);
            inter.case(bad.is_none(), || {
                format!("{s} ∩ {t} = {i} wrong at {}", bad.unwrap())
            });
            let inside = (0..self.universe.len()).all(|k| !exts[a][k] || exts[b][k]);
            if kernel::subset(w, s, t).unwrap() {
                sub_sound.case(inside, || {
                    format!("{s} ⊆ {t} claimed, fails on the universe")
                });
            } else if inside {
                sub_complete.undecided(|| format!("no witness for {s} ⊄ {t}"));
            } else {
                sub_complete.case(true, String::new);
            }
        }
        self.push(union);
        self.push(inter);
        self.push(sub_sound);
        self.push(sub_complete);
    }

    /// Any two members of an ideal have a common upper bound in it, looked
    /// for in the widened universe.
    fn directedness(&mut self, pool: &[Ideal]) {
        let mut t = Tally::new("ideal/directed");
        let ideals = self.sample(pool, SAMPLES / 2);
        for i in &ideals {
            let members: Vec<Element> = self
                .universe
                .iter()
                .enumerate()
                .filter(|&(k, _)| self.in_ideal(k, i))
                .map(|(_, x)| x.clone())
                .collect();
            for (x, y) in self.pairs(&members, 4) {
                let pi = |z: &Element| self.w.ideal_leq(&self.w.principal(z), i);
                let found = self
                    .wide
                    .iter()
                    .any(|z| self.w.leq(&x, z) && self.w.leq(&y, z) && pi(z));
                if found {
                    t.case(true, String::new);
                } else {
                    t.undecided(|| format!("no bound of {x} and {y} found in {i}"));
                }
            }
        }
        self.push(t);
    }
}

/// Runs every check on `w` over the budgeted enumeration of `w` itself.
pub fn check_presentation(w: &Presentation, b: &Budget, seed: u64) -> Result<Report, WqoError> {
    let universe = enumerate_space(&**w, b)?;
    let wide = enumerate_space(&**w, &b.widened())?;
    Ok(check_over(w, &universe, &wide, seed))
}

/// Runs every check over the given universes. `wide` should extend
/// `universe`; it is only searched for upper bounds.
pub fn check_over(w: &Presentation, universe: &[Element], wide: &[Element], seed: u64) -> Report {
    let start = Instant::now();
    let w: &dyn Wqo = &**w;
    let mut c = Checker {
        w,
        universe,
        wide,
        principals: universe.iter().map(|x| w.principal(x)).collect(),
        rng: ChaCha8Rng::seed_from_u64(seed),
        results: Vec::new(),
    };
    c.order_laws();
    let pool = c.procedures();
    c.ideal_inclusion(&pool);
    c.set_operations(&pool);
    c.directedness(&pool);
    Report {
        space: w.name(),
        seed,
        universe: universe.len(),
        checks: c.results,
        millis: start.elapsed().as_millis(),
    }
}

/// Calls the same operations, with sampled arguments, on two presentations of
/// one space and returns every disagreement between canonical answers.
pub fn compare(
    a: &Presentation,
    b: &Presentation,
    budget: &Budget,
    calls: usize,
    seed: u64,
) -> Result<Vec<String>, WqoError> {
    let universe = enumerate_space(&**a, budget)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Ideal> = a.ideal_decomposition().ideals;
    pool.extend(universe.iter().take(8).map(|x| a.principal(x)));
    let mut mismatches = Vec::new();
    let mut note = |op: &str, args: String, x: String, y: String| {
        if x != y {
            mismatches.push(format!("{op}({args}): {x} vs {y}"));
        }
    };
    note(
        "XI",
        String::new(),
        a.ideal_decomposition().to_string(),
        b.ideal_decomposition().to_string(),
    );
    note(
        "XF",
        String::new(),
        a.filter_decomposition().to_string(),
        b.filter_decomposition().to_string(),
    );
    for call in 0..calls {
        let x = universe
            .choose(&mut rng)
            .expect("nonempty universe")
            .clone();
        let y = universe
            .choose(&mut rng)
            .expect("nonempty universe")
            .clone();
        let i = pool.choose(&mut rng).expect("nonempty pool").clone();
        let j = pool.choose(&mut rng).expect("nonempty pool").clone();
        let args2 = format!("{x}, {y}");
        match call % 7 {
            0 => note(
                "OD",
                args2,
                a.leq(&x, &y).to_string(),
                b.leq(&x, &y).to_string(),
            ),
            1 => note(
                "ID",
                format!("{i}, {j}"),
                a.ideal_leq(&i, &j).to_string(),
                b.ideal_leq(&i, &j).to_string(),
            ),
            2 => note(
                "PI",
                x.to_string(),
                a.principal(&x).to_string(),
                b.principal(&x).to_string(),
            ),
            3 => {
                let d = a.complement_filter(&x);
                note(
                    "CF",
                    x.to_string(),
                    d.to_string(),
                    b.complement_filter(&x).to_string(),
                );
                pool.extend(d.ideals);
            }
            4 => note(
                "IF",
                args2,
                a.intersect_filters(&x, &y).to_string(),
                b.intersect_filters(&x, &y).to_string(),
            ),
            5 => note(
                "CI",
                i.to_string(),
                a.complement_ideal(&i).to_string(),
                b.complement_ideal(&i).to_string(),
            ),
            _ => {
                let d = a.intersect_ideals(&i, &j);
                note(
                    "II",
                    format!("{i}, {j}"),
                    d.to_string(),
                    b.intersect_ideals(&i, &j).to_string(),
                );
                pool.extend(d.ideals);
            }
        }
        pool.sort();
        pool.dedup();
        pool.truncate(64);
    }
    Ok(mismatches)
}

/// Wraps a presentation so that the complement of a filter loses its first
/// ideal. Used to check that the oracle notices.
pub fn with_broken_complement(w: Presentation) -> Presentation {
    Presentation::new(BrokenComplement(w))
}

struct BrokenComplement(Presentation);

impl Wqo for BrokenComplement {
    fn name(&self) -> String {
        format!("broken {}", self.0.name())
    }
    fn check_element(&self, x: &Element) -> Result<(), WqoError> {
        self.0.check_element(x)
    }
    fn check_ideal(&self, i: &Ideal) -> Result<(), WqoError> {
        self.0.check_ideal(i)
    }
    fn leq(&self, x: &Element, y: &Element) -> bool {
        self.0.leq(x, y)
    }
    fn ideal_leq(&self, i: &Ideal, j: &Ideal) -> bool {
        self.0.ideal_leq(i, j)
    }
    fn principal(&self, x: &Element) -> Ideal {
        self.0.principal(x)
    }
    fn complement_filter(&self, x: &Element) -> DownSet {
        let mut d = self.0.complement_filter(x);
        if !d.ideals.is_empty() {
            d.ideals.remove(0);
        }
        d
    }
    fn intersect_filters(&self, x: &Element, y: &Element) -> UpSet {
        self.0.intersect_filters(x, y)
    }
    fn complement_ideal(&self, i: &Ideal) -> UpSet {
        self.0.complement_ideal(i)
    }
    fn intersect_ideals(&self, i: &Ideal, j: &Ideal) -> DownSet {
        self.0.intersect_ideals(i, j)
    }
    fn ideal_decomposition(&self) -> DownSet {
        self.0.ideal_decomposition()
    }
    fn filter_decomposition(&self) -> UpSet {
        self.0.filter_decomposition()
    }
    fn elements_of_size(&self, n: usize) -> Option<Vec<Element>> {
        self.0.elements_of_size(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::termlang::parse_type;

    fn report(ty: &str, b: Budget) -> Report {
        let t = parse_type(ty).unwrap();
        check_presentation(&t.presentation().unwrap(), &b, 7).unwrap()
    }

    #[test]
    fn naturals_pass() {
        let r = report("Nat", Budget::new(40, 64));
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn broken_complement_is_caught() {
        let t = parse_type("Prod(Nat,Nat)").unwrap();
        let broken = with_broken_complement(t.presentation().unwrap());
        let r = check_presentation(&broken, &Budget::new(60, 20), 7).unwrap();
        assert_eq!(r.status_of("complement/extensional"), Some(Status::Fail));
        assert_eq!(
            r.status_of("complement-filter/extensional"),
            Some(Status::Fail)
        );
    }

    #[test]
    fn enumeration_examples() {
        let b = Budget::new(4, 100);
        assert_eq!(
            enumerate(&parse_type("Nat").unwrap(), &b).unwrap(),
            (0..4).map(Element::Nat).collect::<Vec<_>>()
        );
        let words =
            enumerate(&parse_type("Star(Fin{a,b})").unwrap(), &Budget::new(100, 2)).unwrap();
        assert_eq!(words.len(), 7);
    }

    #[test]
    fn same_seed_same_report() {
        let a = report("Star(Fin{a,b})", Budget::new(30, 4));
        let b = report("Star(Fin{a,b})", Budget::new(30, 4));
        assert_eq!(a.to_json_lines(), b.to_json_lines());
    }
}
