//! Recursive-descent parser. Values are parsed against their type, so the
//! same text may denote different values at different types.

use crate::base::Cnf;
use crate::value::{Atom, DownSet, Element, Ideal, NatIdeal, Side};

use super::{ParseError, Query, SetExpr, TypeExpr};

pub(super) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    pub(super) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        self.error_at(self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn looking_at(&mut self, tok: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(tok)
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.looking_at(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{tok}`")))
        }
    }

    pub(super) fn finish(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let len = self
            .rest()
            .char_indices()
            .find(|&(k, c)| {
                !(c.is_ascii_alphabetic()
                    || c == '_'
                    || (k > 0 && (c.is_ascii_digit() || c == '\'')))
            })
            .map_or(self.rest().len(), |(k, _)| k);
        if len == 0 {
            return Err(self.error("expected an identifier"));
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    /// Consumes `word` only as a whole identifier.
    fn eat_keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let save = self.pos;
        match self.ident() {
            Ok(s) if s == word => true,
            _ => {
                self.pos = save;
                false
            }
        }
    }

    fn number(&mut self) -> PResult<u64> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.skip_ws();
        let start = self.pos;
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "number out of range"))
    }

    fn comma_list<T>(
        &mut self,
        close: &str,
        mut item: impl FnMut(&mut Self) -> PResult<T>,
    ) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    // ---- types ----

    pub(super) fn type_expr(&mut self) -> PResult<TypeExpr> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        let unary = |p: &mut Self| -> PResult<Box<TypeExpr>> {
            p.expect("(")?;
            let t = p.type_expr()?;
            p.expect(")")?;
            Ok(Box::new(t))
        };
        let binary = |p: &mut Self| -> PResult<(Box<TypeExpr>, Box<TypeExpr>)> {
            p.expect("(")?;
            let a = p.type_expr()?;
            p.expect(",")?;
            let b = p.type_expr()?;
            p.expect(")")?;
            Ok((Box::new(a), Box::new(b)))
        };
        Ok(match name.as_str() {
            "Nat" => TypeExpr::Nat,
            "Ord" => {
                self.expect("[")?;
                let a = self.ordinal()?;
                self.expect("]")?;
                TypeExpr::Ord(a)
            }
            "Fin" => self.fin_type()?,
            "Sum" => {
                let (a, b) = binary(self)?;
                TypeExpr::Sum(a, b)
            }
            "LexSum" => {
                let (a, b) = binary(self)?;
                TypeExpr::LexSum(a, b)
            }
            "Prod" => {
                self.expect("(")?;
                let items = self.comma_list(")", |p| p.type_expr())?;
                if items.len() < 2 {
                    return Err(self.error_at(start, "Prod needs at least two factors"));
                }
                TypeExpr::product(items)
            }
            "Star" => TypeExpr::Star(unary(self)?),
            "Stutter" => TypeExpr::Stutter(unary(self)?),
            "Conj" => TypeExpr::Conj(unary(self)?),
            "Pset" => TypeExpr::Pset(unary(self)?),
            "Mset" => TypeExpr::Mset(unary(self)?),
            other => return Err(self.error_at(start, format!("unknown type `{other}`"))),
        })
    }

    fn fin_type(&mut self) -> PResult<TypeExpr> {
        self.expect("{")?;
        let mut symbols: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        if !self.looking_at("}") && !self.looking_at("|") {
            loop {
                self.skip_ws();
                let at = self.pos;
                let s = self.ident()?;
                if symbols.contains(&s) {
                    return Err(self.error_at(at, format!("symbol `{s}` declared twice")));
                }
                symbols.push(s);
                if !self.eat(",") {
                    break;
                }
            }
        }
        if self.eat("|") {
            loop {
                self.skip_ws();
                let at = self.pos;
                let a = self.ident()?;
                self.expect("<")?;
                let b = self.ident()?;
                for s in [&a, &b] {
                    if !symbols.contains(s) {
                        return Err(self.error_at(at, format!("symbol `{s}` is not declared")));
                    }
                }
                pairs.push((a, b));
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect("}")?;
        Ok(TypeExpr::Fin { symbols, pairs })
    }

    // ---- ordinals ----

    pub(super) fn ordinal(&mut self) -> PResult<Cnf> {
        self.skip_ws();
        let start = self.pos;
        let mut terms = Vec::new();
        loop {
            if self.eat_keyword("w") {
                let e = if self.eat("^") {
                    self.exponent()?
                } else {
                    Cnf::nat(1)
                };
                let c = if self.eat("*") { self.number()? } else { 1 };
                terms.push((e, c));
            } else {
                let n = self.number()?;
                if n == 0 && terms.is_empty() && !self.looking_at("+") {
                    return Ok(Cnf::zero());
                }
                terms.push((Cnf::zero(), n));
            }
            if !self.eat("+") {
                break;
            }
        }
        Cnf::from_terms(terms).map_err(|e| self.error_at(start, e.to_string()))
    }

    fn exponent(&mut self) -> PResult<Cnf> {
        if self.eat("(") {
            let e = self.ordinal()?;
            self.expect(")")?;
            Ok(e)
        } else if self.eat_keyword("w") {
            Ok(Cnf::omega())
        } else {
            Ok(Cnf::nat(self.number()?))
        }
    }

    // ---- elements ----

    pub(super) fn element(&mut self, t: &TypeExpr) -> PResult<Element> {
        self.skip_ws();
        let start = self.pos;
        let x = self.element_unchecked(t)?;
        let p = t
            .presentation()
            .map_err(|e| self.error_at(start, e.to_string()))?;
        p.check_element(&x)
            .map_err(|e| self.error_at(start, e.to_string()))?;
        Ok(x)
    }

    fn element_unchecked(&mut self, t: &TypeExpr) -> PResult<Element> {
        match t {
            TypeExpr::Nat => Ok(Element::Nat(self.number()?)),
            TypeExpr::Ord(_) => Ok(Element::Ord(self.ordinal()?)),
            TypeExpr::Fin { symbols, .. } => {
                self.skip_ws();
                let at = self.pos;
                let s = self.ident()?;
                if symbols.contains(&s) {
                    Ok(Element::Sym(s))
                } else {
                    Err(self.error_at(at, format!("symbol `{s}` is not declared")))
                }
            }
            TypeExpr::Sum(a, b) | TypeExpr::LexSum(a, b) => {
                let side = self.side()?;
                let inner = if side == Side::Left { a } else { b };
                Ok(Element::sum(side, self.element_unchecked(inner)?))
            }
            TypeExpr::Prod(..) => {
                self.expect("(")?;
                self.tuple_body(t, Self::element_unchecked, Element::pair)
            }
            TypeExpr::Star(a) | TypeExpr::Stutter(a) | TypeExpr::Conj(a) => {
                self.expect("[")?;
                let xs = self.comma_list("]", |p| p.element_unchecked(a))?;
                Ok(Element::Seq(xs))
            }
            TypeExpr::Pset(a) => {
                self.expect("{")?;
                let xs = self.comma_list("}", |p| p.element_unchecked(a))?;
                Ok(Element::set(xs))
            }
            TypeExpr::Mset(a) => {
                self.expect("{|")?;
                let xs = self.comma_list("|}", |p| p.element_unchecked(a))?;
                Ok(Element::bag(xs))
            }
        }
    }

    /// The components of a tuple after its opening parenthesis. A tuple at
    /// `Prod(A, Prod(B, C))` may be written flat, `(a,b,c)`, or nested,
    /// `(a,(b,c))`.
    fn tuple_body<T>(
        &mut self,
        t: &TypeExpr,
        item: fn(&mut Self, &TypeExpr) -> PResult<T>,
        pair: fn(T, T) -> T,
    ) -> PResult<T> {
        let TypeExpr::Prod(a, rest) = t else {
            unreachable!("tuple bodies only exist at product types")
        };
        let x = item(self, a)?;
        self.expect(",")?;
        self.skip_ws();
        let save = self.pos;
        let flat_err = if matches!(**rest, TypeExpr::Prod(..)) {
            match self.tuple_body(rest, item, pair) {
                Ok(y) => return Ok(pair(x, y)),
                Err(e) => {
                    self.pos = save;
                    Some(e)
                }
            }
        } else {
            None
        };
        let nested = item(self, rest).and_then(|y| self.expect(")").map(|_| y));
        match (nested, flat_err) {
            (Ok(y), _) => Ok(pair(x, y)),
            (Err(e), Some(f)) => Err(furthest(e, f)),
            (Err(e), None) => Err(e),
        }
    }

    fn side(&mut self) -> PResult<Side> {
        if self.eat("L:") {
            Ok(Side::Left)
        } else if self.eat("R:") {
            Ok(Side::Right)
        } else {
            Err(self.error("expected `L:` or `R:`"))
        }
    }

    // ---- ideals ----

    pub(super) fn ideal(&mut self, t: &TypeExpr) -> PResult<Ideal> {
        self.skip_ws();
        let start = self.pos;
        let i = self.ideal_unchecked(t)?;
        let p = t
            .presentation()
            .map_err(|e| self.error_at(start, e.to_string()))?;
        p.check_ideal(&i)
            .map_err(|e| self.error_at(start, e.to_string()))?;
        Ok(i)
    }

    fn ideal_unchecked(&mut self, t: &TypeExpr) -> PResult<Ideal> {
        if self.eat_keyword("dw") {
            self.expect("(")?;
            let i = self.marking(t)?;
            self.expect(")")?;
            return Ok(i);
        }
        match t {
            TypeExpr::Ord(_) => {
                if !self.eat_keyword("cut") {
                    return Err(self.error("expected `dw(…)` or `cut(…)`"));
                }
                self.expect("(")?;
                let g = self.ordinal()?;
                self.expect(")")?;
                Ok(Ideal::Cut(g))
            }
            TypeExpr::Sum(a, b) | TypeExpr::LexSum(a, b) => {
                let side = self.side()?;
                let inner = if side == Side::Left { a } else { b };
                Ok(Ideal::sum(side, self.ideal_unchecked(inner)?))
            }
            TypeExpr::Prod(..) => {
                self.expect("(")?;
                self.tuple_body(t, Self::ideal_unchecked, Ideal::pair)
            }
            TypeExpr::Star(a) | TypeExpr::Stutter(a) | TypeExpr::Conj(a) | TypeExpr::Mset(a) => {
                let mut atoms = Vec::new();
                loop {
                    if self.eat_keyword("star") {
                        self.expect("(")?;
                        let d = self.ideal_list(a, ")")?;
                        atoms.push(Atom::Star(d));
                    } else if self.eat_keyword("one") {
                        self.expect("(")?;
                        atoms.push(Atom::One(self.ideal_unchecked(a)?));
                        self.expect(")")?;
                    } else {
                        return Err(self.error("expected `star(…)` or `one(…)`"));
                    }
                    if !self.eat(".") {
                        break;
                    }
                }
                atoms.retain(|a| !matches!(a, Atom::Star(d) if d.is_empty()));
                Ok(Ideal::Product(atoms))
            }
            TypeExpr::Pset(a) => {
                if !self.eat_keyword("pf") {
                    return Err(self.error("expected `dw(…)` or `pf(…)`"));
                }
                self.expect("(")?;
                Ok(Ideal::Pf(self.ideal_list(a, ")")?))
            }
            TypeExpr::Nat | TypeExpr::Fin { .. } => Err(self.error("expected `dw(…)`")),
        }
    }

    /// `|`-separated ideals up to `close`, canonized in the space `t`.
    fn ideal_list(&mut self, t: &TypeExpr, close: &str) -> PResult<DownSet> {
        self.skip_ws();
        let start = self.pos;
        let mut ideals = Vec::new();
        if !self.eat(close) {
            loop {
                ideals.push(self.ideal_unchecked(t)?);
                if self.eat(close) {
                    break;
                }
                self.expect("|")?;
            }
        }
        let p = t
            .presentation()
            .map_err(|e| self.error_at(start, e.to_string()))?;
        for i in &ideals {
            p.check_ideal(i)
                .map_err(|e| self.error_at(start, e.to_string()))?;
        }
        Ok(crate::kernel::canonize_down(&*p, ideals))
    }

    /// The inside of `dw(…)`: an element where `omega` may stand for a
    /// whole factor of naturals.
    fn marking(&mut self, t: &TypeExpr) -> PResult<Ideal> {
        match t {
            TypeExpr::Nat => {
                if self.eat_keyword("omega") {
                    Ok(Ideal::Nat(NatIdeal::Omega))
                } else {
                    Ok(Ideal::Nat(NatIdeal::Finite(self.number()?)))
                }
            }
            TypeExpr::Sum(a, b) | TypeExpr::LexSum(a, b) => {
                let side = self.side()?;
                let inner = if side == Side::Left { a } else { b };
                Ok(Ideal::sum(side, self.marking(inner)?))
            }
            TypeExpr::Prod(..) => {
                self.expect("(")?;
                self.tuple_body(t, Self::marking, Ideal::pair)
            }
            _ => {
                self.skip_ws();
                let start = self.pos;
                let x = self.element_unchecked(t)?;
                let p = t
                    .presentation()
                    .map_err(|e| self.error_at(start, e.to_string()))?;
                p.check_element(&x)
                    .map_err(|e| self.error_at(start, e.to_string()))?;
                Ok(p.principal(&x))
            }
        }
    }

    // ---- set expressions ----

    pub(super) fn query(&mut self, t: &TypeExpr) -> PResult<Query> {
        self.skip_ws();
        let save = self.pos;
        if self.eat_keyword("in") && self.eat("(") {
            let x = self.element(t)?;
            self.expect(",")?;
            let e = self.set_expr(t)?;
            self.expect(")")?;
            return Ok(Query::Member(x, e));
        }
        self.pos = save;
        if self.eat_keyword("subset") && self.eat("(") {
            let a = self.set_expr(t)?;
            self.expect(",")?;
            let b = self.set_expr(t)?;
            self.expect(")")?;
            return Ok(Query::Subset(a, b));
        }
        self.pos = save;
        Ok(Query::Set(self.set_expr(t)?))
    }

    pub(super) fn set_expr(&mut self, t: &TypeExpr) -> PResult<SetExpr> {
        let mut e = self.conjunction(t)?;
        while self.eat("|") {
            let rhs = self.conjunction(t)?;
            e = SetExpr::Union(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn conjunction(&mut self, t: &TypeExpr) -> PResult<SetExpr> {
        let mut e = self.set_atom(t)?;
        while self.eat("&") {
            let rhs = self.set_atom(t)?;
            e = SetExpr::Intersection(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn set_atom(&mut self, t: &TypeExpr) -> PResult<SetExpr> {
        self.skip_ws();
        let save = self.pos;
        if self.eat_keyword("up") {
            self.expect("(")?;
            let xs = self.comma_list(")", |p| p.element(t))?;
            if xs.is_empty() {
                return Err(self.error_at(save, "`up` needs at least one element"));
            }
            return Ok(SetExpr::Up(xs));
        }
        if self.eat_keyword("comp") {
            self.expect("(")?;
            let e = self.set_expr(t)?;
            self.expect(")")?;
            return Ok(SetExpr::Complement(Box::new(e)));
        }
        if self.eat_keyword("full") {
            return Ok(SetExpr::Full);
        }
        if self.eat_keyword("empty") {
            return Ok(SetExpr::Empty);
        }
        match self.ideal(t) {
            Ok(i) => Ok(SetExpr::Down(i)),
            Err(ideal_err) => {
                self.pos = save;
                if !self.eat("(") {
                    return Err(ideal_err);
                }
                match self.set_expr(t).and_then(|e| self.expect(")").map(|_| e)) {
                    Ok(e) => Ok(e),
                    Err(group_err) => Err(furthest(group_err, ideal_err)),
                }
            }
        }
    }
}

/// Of two failed readings, the one that got further.
fn furthest(a: ParseError, b: ParseError) -> ParseError {
    if (b.line, b.col) > (a.line, a.col) {
        b
    } else {
        a
    }
}
