//! Expressions over simplex literals.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := [integer '*'] atom
//! atom    := literal | 'star(' int ',' int ')' | '(' expr ')'
//! literal := ['-'] '<' int '>' ['_0' | '_10']
//! ```
//!
//! A `-` directly in front of `<` negates the literal (`-<3>`); `<-3>` is the
//! reflected literal. After a term, `-` is always subtraction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use solids_core::closed::{self, FormalCombination};
use solids_core::ring::{Sign, SimplexLiteral};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suffix {
    None,
    /// `_0`: the triangle with its boundary.
    Zero,
    /// `_10`: the closed segment.
    OneZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Literal {
    pub negated: bool,
    pub scale: i64,
    pub suffix: Suffix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Literal(Literal),
    Star(i64, i64),
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Option<BigInt>,
    pub atom: Atom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub first: Term,
    pub rest: Vec<(Op, Term)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("context error: {0}")]
    Context(String),
    #[error(transparent)]
    Eval(#[from] solids_core::Error),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos + 1).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.error(format!("expected '{s}'"))
        }
    }

    /// `['-'] digits`, no inner whitespace.
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        self.eat("-");
        let digits = self.src[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        self.pos += digits;
        Ok(self.src[start..self.pos].parse().expect("validated digits"))
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let v = self.integer()?;
        i64::try_from(v).map_err(|_| ParseError {
            offset: start,
            message: "integer out of range for a scale".into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let first = self.term()?;
        let mut rest = Vec::new();
        loop {
            self.skip_ws();
            let op = match self.peek() {
                Some(b'+') => Op::Add,
                Some(b'-') => Op::Sub,
                _ => break,
            };
            self.pos += 1;
            rest.push((op, self.term()?));
        }
        Ok(Expr { first, rest })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        let numeric = match (self.peek(), self.peek2()) {
            (Some(b'-'), Some(d)) | (Some(d), _) => d.is_ascii_digit(),
            _ => false,
        };
        let coeff = if numeric {
            let c = self.integer()?;
            self.skip_ws();
            self.expect("*")?;
            self.skip_ws();
            Some(c)
        } else {
            None
        };
        Ok(Term {
            coeff,
            atom: self.atom()?,
        })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some(b'<') => self.literal(false),
            Some(b'-') if self.peek2() == Some(b'<') => {
                self.pos += 1;
                self.literal(true)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                self.expect(")")?;
                Ok(Atom::Paren(Box::new(inner)))
            }
            _ if self.eat("star(") => {
                self.skip_ws();
                let n = self.small_integer()?;
                self.skip_ws();
                self.expect(",")?;
                self.skip_ws();
                let m = self.small_integer()?;
                self.skip_ws();
                self.expect(")")?;
                Ok(Atom::Star(n, m))
            }
            None => self.error("unexpected end of input"),
            Some(_) => self.error("expected a literal, 'star(' or '('"),
        }
    }

    fn literal(&mut self, negated: bool) -> Result<Atom, ParseError> {
        self.expect("<")?;
        let scale = self.small_integer()?;
        self.expect(">")?;
        let suffix = if self.eat("_10") {
            Suffix::OneZero
        } else if self.eat("_0") {
            Suffix::Zero
        } else {
            Suffix::None
        };
        Ok(Atom::Literal(Literal {
            negated,
            scale,
            suffix,
        }))
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "<{}>", self.scale)?;
        f.write_str(match self.suffix {
            Suffix::None => "",
            Suffix::Zero => "_0",
            Suffix::OneZero => "_10",
        })
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.coeff {
            write!(f, "{c}*")?;
        }
        match &self.atom {
            Atom::Literal(l) => write!(f, "{l}"),
            Atom::Star(n, m) => write!(f, "star({n},{m})"),
            Atom::Paren(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.first)?;
        for (op, t) in &self.rest {
            let s = if *op == Op::Add { "+" } else { "-" };
            write!(f, " {s} {t}")?;
        }
        Ok(())
    }
}

/// Dimension and family of plain literals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Context {
    pub dim: usize,
    pub extended: bool,
}

impl Default for Context {
    fn default() -> Self {
        Self {
            dim: 2,
            extended: false,
        }
    }
}

impl Expr {
    fn terms(&self) -> impl Iterator<Item = &Term> {
        std::iter::once(&self.first).chain(self.rest.iter().map(|(_, t)| t))
    }

    fn collect(&self, suffixes: &mut Vec<Suffix>, stars: &mut bool) {
        for t in self.terms() {
            match &t.atom {
                Atom::Literal(l) => suffixes.push(l.suffix),
                Atom::Star(..) => *stars = true,
                Atom::Paren(e) => e.collect(suffixes, stars),
            }
        }
    }

    /// The literal family this expression lives in, as `(dim, extended)`.
    pub fn family(&self, ctx: Context) -> Result<(usize, bool), ExprError> {
        let (mut suffixes, mut stars) = (Vec::new(), false);
        self.collect(&mut suffixes, &mut stars);
        suffixes.sort_by_key(|s| *s as u8);
        suffixes.dedup();
        let family = match suffixes.as_slice() {
            [] | [Suffix::None] => (ctx.dim, ctx.extended),
            [s] => {
                if ctx.dim != 2 {
                    return Err(ExprError::Context(format!(
                        "suffixed literals need the default dimension 2, not {}",
                        ctx.dim
                    )));
                }
                if *s == Suffix::Zero {
                    (2, true)
                } else {
                    (1, true)
                }
            }
            _ => {
                return Err(ExprError::Context(
                    "expression mixes literal families".into(),
                ))
            }
        };
        if stars && family != (2, false) {
            return Err(ExprError::Context(
                "star products exist only for plain triangles".into(),
            ));
        }
        Ok(family)
    }

    /// The formal combination the expression denotes, with parentheses and
    /// star products expanded.
    pub fn to_combination(&self, ctx: Context) -> Result<FormalCombination, ExprError> {
        let (dim, extended) = self.family(ctx)?;
        let mut out = FormalCombination::new(dim, extended);
        self.expand(&BigInt::one(), dim, extended, &mut out)?;
        Ok(out)
    }

    fn expand(
        &self,
        factor: &BigInt,
        dim: usize,
        extended: bool,
        out: &mut FormalCombination,
    ) -> Result<(), ExprError> {
        let signed =
            std::iter::once((Op::Add, &self.first)).chain(self.rest.iter().map(|(o, t)| (*o, t)));
        for (op, term) in signed {
            let mut f = term
                .coeff
                .clone()
                .map_or_else(|| factor.clone(), |c| c * factor);
            if op == Op::Sub {
                f = -f;
            }
            match &term.atom {
                Atom::Literal(l) => out.push_term(closed::Term {
                    coeff: f,
                    literal: SimplexLiteral {
                        dim,
                        scale: l.scale,
                        sign: if l.negated { Sign::Minus } else { Sign::Plus },
                        extended,
                    },
                })?,
                Atom::Star(n, m) => out.extend_scaled(&closed::star_mul(*n, *m)?, &f)?,
                Atom::Paren(e) => e.expand(&f, dim, extended, out)?,
            }
        }
        Ok(())
    }
}
