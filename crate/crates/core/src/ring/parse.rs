//! Recursive-descent parser for the ring-expression language.
//!
//! ```text
//! ring    := postfix ('x' postfix)*
//! postfix := atom ('/' '(' elems? ')')*
//! atom    := 'Z' '/' INT ('[' 'x' ']' '/' '(' elem ')')?
//!          | 'M' INT '(' ring ')' | 'T' INT '(' ring ')'
//!          | 'sub' '(' ring ';' elems ')' | 'corner' '(' ring ';' elem ')'
//!          | '(' ring ')'
//! elems   := elem (',' elem)*
//! elem    := term (('+' | '-') term)*
//! term    := unary (('*' unary) | implicit-x-factor)*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)?
//! primary := INT | '#' INT | 'x' | '(' elems ')' | '[' row (',' row)* ']'
//! row     := '[' elems ']'
//! ```
//!
//! Inside ring context `x` is the product operator; inside element brackets it
//! is the indeterminate.

use super::expr::{ElemLit, RingExpr};
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Z,
    M,
    T,
    X,
    Sub,
    Corner,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Hash,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let v = digits.parse::<u64>().map_err(|_| AlgebraError::OutOfRange {
                    pos: start,
                    message: format!("integer {digits} does not fit in 64 bits"),
                })?;
                out.push((Tok::Int(v), start));
                continue;
            }
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'#' => Tok::Hash,
            b'Z' => Tok::Z,
            b'M' => Tok::M,
            b'T' => Tok::T,
            b'x' => Tok::X,
            _ if text[i..].starts_with("sub") => {
                i += 3;
                out.push((Tok::Sub, start));
                continue;
            }
            _ if text[i..].starts_with("corner") => {
                i += 6;
                out.push((Tok::Corner, start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(AlgebraError::Syntax { pos: start, message: format!("unexpected character '{ch}'") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Syntax { pos: self.offset(), message: message.into() })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, usize)> {
        match self.toks.get(self.pos) {
            Some(&(Tok::Int(v), p)) => {
                self.pos += 1;
                Ok((v, p))
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let first = self.postfix()?;
        if self.peek() != Some(&Tok::X) {
            return Ok(first);
        }
        let mut factors = vec![first];
        while self.eat(&Tok::X) {
            factors.push(self.postfix()?);
        }
        Ok(RingExpr::Product(factors))
    }

    fn postfix(&mut self) -> Result<RingExpr> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Slash) {
            self.expect(Tok::LParen, "'(' after '/' to open the generator list")?;
            let gens = if self.peek() == Some(&Tok::RParen) { Vec::new() } else { self.elems()? };
            self.expect(Tok::RParen, "')' closing the generator list")?;
            base = RingExpr::Quotient(Box::new(base), gens);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingExpr> {
        match self.peek() {
            Some(Tok::Z) => {
                self.pos += 1;
                self.expect(Tok::Slash, "'/' after 'Z'")?;
                let (n, npos) = self.int("modulus after 'Z/'")?;
                if n == 0 {
                    return Err(AlgebraError::OutOfRange { pos: npos, message: "modulus must be >= 1".into() });
                }
                if self.peek() == Some(&Tok::LBracket) {
                    self.pos += 1;
                    self.expect(Tok::X, "'x' in polynomial ring")?;
                    self.expect(Tok::RBracket, "']'")?;
                    self.expect(Tok::Slash, "'/' before the modulus polynomial")?;
                    self.expect(Tok::LParen, "'(' around the modulus polynomial")?;
                    let mpos = self.offset();
                    let lit = self.elem()?;
                    self.expect(Tok::RParen, "')' after the modulus polynomial")?;
                    let modulus = modulus_coeffs(&lit, n, mpos)?;
                    return Ok(RingExpr::PolyQuotient(n, modulus));
                }
                Ok(RingExpr::ZMod(n))
            }
            Some(Tok::M) | Some(Tok::T) => {
                let triangular = self.peek() == Some(&Tok::T);
                self.pos += 1;
                let (k, kpos) = self.int("matrix size")?;
                if k == 0 || k > 64 {
                    return Err(AlgebraError::OutOfRange {
                        pos: kpos,
                        message: format!("matrix size {k} not in 1..=64"),
                    });
                }
                self.expect(Tok::LParen, "'(' after matrix size")?;
                let base = self.ring()?;
                self.expect(Tok::RParen, "')' closing the matrix base ring")?;
                let base = Box::new(base);
                Ok(if triangular {
                    RingExpr::UpperTriangular(k as usize, base)
                } else {
                    RingExpr::Matrix(k as usize, base)
                })
            }
            Some(Tok::Sub) => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after 'sub'")?;
                let base = self.ring()?;
                self.expect(Tok::Semi, "';' before subring generators")?;
                let gens = if self.peek() == Some(&Tok::RParen) { Vec::new() } else { self.elems()? };
                self.expect(Tok::RParen, "')' closing 'sub'")?;
                Ok(RingExpr::Subring(Box::new(base), gens))
            }
            Some(Tok::Corner) => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after 'corner'")?;
                let base = self.ring()?;
                self.expect(Tok::Semi, "';' before the idempotent")?;
                let e = self.elem()?;
                self.expect(Tok::RParen, "')' closing 'corner'")?;
                Ok(RingExpr::Corner(Box::new(base), e))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.ring()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => self.error("expected a ring: Z/n, Mk(..), Tk(..), sub(..), corner(..) or '('"),
        }
    }

    fn elems(&mut self) -> Result<Vec<ElemLit>> {
        let mut items = vec![self.elem()?];
        while self.eat(&Tok::Comma) {
            items.push(self.elem()?);
        }
        Ok(items)
    }

    fn elem(&mut self) -> Result<ElemLit> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = ElemLit::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = ElemLit::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ElemLit> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = ElemLit::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::X) {
                // implicit coefficient: 3x, 2x^2
                acc = ElemLit::Mul(Box::new(acc), Box::new(self.power()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ElemLit> {
        if self.eat(&Tok::Minus) {
            return Ok(ElemLit::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ElemLit> {
        let base = self.primary()?;
        if self.eat(&Tok::Caret) {
            let (e, epos) = self.int("exponent after '^'")?;
            let e = u32::try_from(e)
                .map_err(|_| AlgebraError::OutOfRange { pos: epos, message: format!("exponent {e} too large") })?;
            return Ok(ElemLit::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<ElemLit> {
        match self.peek() {
            Some(Tok::Int(_)) => Ok(ElemLit::Int(self.int("integer")?.0)),
            Some(Tok::Hash) => {
                self.pos += 1;
                let (v, p) = self.int("index after '#'")?;
                let idx = usize::try_from(v)
                    .map_err(|_| AlgebraError::OutOfRange { pos: p, message: format!("index {v} too large") })?;
                Ok(ElemLit::Index(idx))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(ElemLit::Var)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let mut items = self.elems()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(if items.len() == 1 { items.pop().unwrap() } else { ElemLit::Tuple(items) })
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let mut rows = Vec::new();
                loop {
                    self.expect(Tok::LBracket, "'[' opening a matrix row")?;
                    rows.push(self.elems()?);
                    self.expect(Tok::RBracket, "']' closing a matrix row")?;
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RBracket, "']' closing the matrix")?;
                Ok(ElemLit::Matrix(rows))
            }
            _ => self.error("expected an element: integer, #index, x, tuple or matrix"),
        }
    }
}

/// Integer-coefficient polynomial in `x` denoted by a literal, reduced mod `n`.
fn modulus_coeffs(lit: &ElemLit, n: u64, pos: usize) -> Result<Vec<u64>> {
    let bad = |message: String| AlgebraError::Syntax { pos, message };
    fn eval(lit: &ElemLit, n: u64) -> std::result::Result<Vec<u64>, String> {
        let n128 = n as u128;
        let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let len = a.len().max(b.len());
            (0..len)
                .map(|i| ((*a.get(i).unwrap_or(&0) as u128 + *b.get(i).unwrap_or(&0) as u128) % n128) as u64)
                .collect()
        };
        let neg = |a: &[u64]| -> Vec<u64> { a.iter().map(|&c| ((n128 - c as u128) % n128) as u64).collect() };
        let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % n128) as u64;
                }
            }
            out
        };
        Ok(match lit {
            ElemLit::Int(v) => vec![v % n],
            ElemLit::Var => vec![0, 1 % n],
            ElemLit::Neg(a) => neg(&eval(a, n)?),
            ElemLit::Add(a, b) => add(&eval(a, n)?, &eval(b, n)?),
            ElemLit::Sub(a, b) => add(&eval(a, n)?, &neg(&eval(b, n)?)),
            ElemLit::Mul(a, b) => mul(&eval(a, n)?, &eval(b, n)?),
            ElemLit::Pow(a, e) => {
                if *e > 64 {
                    return Err(format!("modulus degree {e} too large"));
                }
                let base = eval(a, n)?;
                let mut acc = vec![1 % n];
                for _ in 0..*e {
                    acc = mul(&acc, &base);
                }
                acc
            }
            other => return Err(format!("'{other}' is not an integer polynomial in x")),
        })
    }
    let mut coeffs = eval(lit, n).map_err(bad)?;
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(bad("modulus polynomial must have degree >= 1".into()));
    }
    if *coeffs.last().unwrap() != 1 % n {
        return Err(bad("modulus polynomial must be monic".into()));
    }
    Ok(coeffs)
}

/// Parses a ring expression.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let expr = p.ring()?;
    if p.pos != p.toks.len() {
        return p.error("trailing input");
    }
    Ok(expr)
}

/// Parses a standalone element literal such as `(1,2)` or `[[0,1],[1,1]]`.
pub fn parse_element(text: &str) -> Result<ElemLit> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let lit = p.elem()?;
    if p.pos != p.toks.len() {
        return p.error("trailing input");
    }
    Ok(lit)
}
