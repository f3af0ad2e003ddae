//! Textual syntax for operators and expressions.
//!
//! Operator literals: `tilde[5]{(1,3),(2,2),(3,4)}`, `aref[5]{(1,4),(2,3)}`,
//! `aras[3]{(1,2)}`, `dt[5]({(1,3)},{(2,3)})`, `qoset[2]{(1,2),(2,1)}`
//! (diagonal implied), `poset[3]{(1,2),(2,4)}`. Whitespace is insignificant.
//! An expression is a literal followed by a leaf list such as `(a,b,_,c)`
//! where `_` denotes ∅ and a leaf may itself be a nested expression.

use std::fmt;

use crate::error::{Error, Result};
use crate::language::{Expression, Leaf};
use crate::operad::{DoubleTilde, OperadElement, PosetClass, QuasiOrder};
use crate::relation::{MultiTilde, PairSet, Relation};

struct Parser<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            bytes: input.as_bytes(),
            at: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.at < self.bytes.len() && self.bytes[self.at].is_ascii_whitespace() {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.at).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(Error::parse(self.at, format!("expected {:?}", c as char)))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.at;
        while self
            .bytes
            .get(self.at)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.at += 1;
        }
        if start == self.at {
            return Err(Error::parse(self.at, "expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.at])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    fn keyword(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.at;
        while self
            .bytes
            .get(self.at)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            self.at += 1;
        }
        if start == self.at {
            return Err(Error::parse(self.at, "expected an operator kind"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.at])
            .unwrap()
            .to_string())
    }

    fn pair_set(&mut self) -> Result<PairSet> {
        self.expect(b'{')?;
        let mut pairs = PairSet::new();
        if self.peek() == Some(b'}') {
            self.at += 1;
            return Ok(pairs);
        }
        loop {
            self.expect(b'(')?;
            let x = self.number()?;
            self.expect(b',')?;
            let y = self.number()?;
            self.expect(b')')?;
            pairs.insert(crate::relation::Pair::new(x, y));
            match self.peek() {
                Some(b',') => self.at += 1,
                Some(b'}') => {
                    self.at += 1;
                    return Ok(pairs);
                }
                _ => return Err(Error::parse(self.at, "expected ',' or '}'")),
            }
        }
    }

    fn operator(&mut self) -> Result<OperadElement> {
        let at_kind = self.at;
        let kind = self.keyword()?;
        self.expect(b'[')?;
        let arity = self.number()?;
        self.expect(b']')?;
        match kind.as_str() {
            "tilde" => Ok(OperadElement::MultiTilde(MultiTilde::new(
                arity,
                self.pair_set()?,
            )?)),
            "aref" => OperadElement::aref(Relation::new(arity, self.pair_set()?)?),
            "aras" => OperadElement::aras(Relation::new(arity, self.pair_set()?)?),
            "dt" => {
                self.expect(b'(')?;
                let left = self.pair_set()?;
                self.expect(b',')?;
                let right = self.pair_set()?;
                self.expect(b')')?;
                Ok(OperadElement::DoubleTilde(DoubleTilde::new(
                    MultiTilde::new(arity, left)?,
                    MultiTilde::new(arity, right)?,
                )?))
            }
            "qoset" => Ok(OperadElement::QuasiOrder(QuasiOrder::from_off_diagonal(
                &Relation::new(arity, self.pair_set()?)?,
            )?)),
            "poset" => Ok(OperadElement::PosetClass(PosetClass::from_aras(
                &Relation::new(arity, self.pair_set()?)?,
            )?)),
            other => Err(Error::parse(
                at_kind,
                format!("unknown operator kind {other:?}"),
            )),
        }
    }

    fn leaf(&mut self) -> Result<Leaf> {
        match self.peek() {
            Some(b'_') => {
                self.at += 1;
                Ok(Leaf::Empty)
            }
            Some(c) if c.is_ascii_alphanumeric() => {
                // A single alphanumeric is a letter unless it starts an
                // operator keyword followed by '['.
                let save = self.at;
                if c.is_ascii_alphabetic() {
                    if let Ok(kind) = self.keyword() {
                        if kind.len() > 1 && self.peek() == Some(b'[') {
                            self.at = save;
                            return Ok(Leaf::Sub(Box::new(self.expression()?)));
                        }
                    }
                    self.at = save;
                }
                self.at += 1;
                Ok(Leaf::Letter((c as char).to_string()))
            }
            _ => Err(Error::parse(self.at, "expected a leaf: letter, '_' or operator")),
        }
    }

    fn expression(&mut self) -> Result<Expression> {
        let at_op = self.at;
        let root = self.operator()?;
        self.expect(b'(')?;
        let mut leaves = Vec::new();
        if self.peek() == Some(b')') {
            self.at += 1;
        } else {
            loop {
                leaves.push(self.leaf()?);
                match self.peek() {
                    Some(b',') => self.at += 1,
                    Some(b')') => {
                        self.at += 1;
                        break;
                    }
                    _ => return Err(Error::parse(self.at, "expected ',' or ')'")),
                }
            }
        }
        Expression::new(root, leaves).map_err(|e| match e {
            Error::ArityMismatch { expected, got } => Error::parse(
                at_op,
                format!("operator of arity {expected} applied to {got} leaves"),
            ),
            other => other,
        })
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(Error::parse(self.at, "trailing input"))
        } else {
            Ok(())
        }
    }
}

/// Parse an operator literal.
pub fn parse_operator(input: &str) -> Result<OperadElement> {
    let mut p = Parser::new(input);
    let op = p.operator()?;
    p.finish()?;
    Ok(op)
}

/// Parse an expression (operator literal applied to leaves).
pub fn parse_expression(input: &str) -> Result<Expression> {
    let mut p = Parser::new(input);
    let e = p.expression()?;
    p.finish()?;
    Ok(e)
}

/// Parse a bare relation literal such as `{(1,4),(2,3)}`.
pub fn parse_pair_set(input: &str) -> Result<PairSet> {
    let mut p = Parser::new(input);
    let pairs = p.pair_set()?;
    p.finish()?;
    Ok(pairs)
}

/// Canonical literal of an operator (pairs in lexicographic order; the
/// quasiorder prints its off-diagonal part).
pub fn display_operator(op: &OperadElement) -> String {
    match op {
        OperadElement::MultiTilde(t) => format!("tilde[{}]{}", t.arity(), t.pairs()),
        OperadElement::Aras(r) => format!("aras[{}]{}", r.arity(), r.pairs()),
        OperadElement::ARef(r) => format!("aref[{}]{}", r.arity(), r.pairs()),
        OperadElement::DoubleTilde(d) => format!(
            "dt[{}]({},{})",
            d.arity(),
            d.left().pairs(),
            d.right().pairs()
        ),
        OperadElement::PosetClass(p) => {
            format!("poset[{}]{}", p.arity(), p.representative().pairs())
        }
        OperadElement::QuasiOrder(q) => {
            format!("qoset[{}]{}", q.arity(), q.off_diagonal().pairs())
        }
    }
}

/// Canonical rendering of an expression.
pub fn display_expression(e: &Expression) -> String {
    let mut out = display_operator(e.root());
    out.push('(');
    for (i, leaf) in e.leaves().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        match leaf {
            Leaf::Letter(l) => out.push_str(l),
            Leaf::Empty => out.push('_'),
            Leaf::Sub(sub) => out.push_str(&display_expression(sub)),
        }
    }
    out.push(')');
    out
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_operator(self))
    }
}
