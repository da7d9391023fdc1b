//! Construction syntax for finite rings and element literals.
//!
//! Rendering is the inverse of [`parse_ring_expr`](super::parse::parse_ring_expr):
//! `parse(render(e)) == e` for every well-formed tree.

use std::fmt;

use serde::{Serialize, Serializer};

/// A ring construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// `Z/n`
    ZMod(u64),
    /// `E x E x ...`, at least two factors.
    Product(Vec<RingExpr>),
    /// `Mk(E)`
    Matrix(usize, Box<RingExpr>),
    /// `Tk(E)`
    UpperTriangular(usize, Box<RingExpr>),
    /// `Z/n[x]/(f)`; the modulus is stored low degree first, reduced mod n and monic.
    PolyQuotient(u64, Vec<u64>),
    /// `E / (g, ...)`: quotient by the two-sided ideal generated by the elements.
    Quotient(Box<RingExpr>, Vec<ElemLit>),
    /// `sub(E; g, ...)`: unital subring generated by the elements.
    Subring(Box<RingExpr>, Vec<ElemLit>),
    /// `corner(E; e)`
    Corner(Box<RingExpr>, ElemLit),
}

/// An element literal, resolved against a concrete ring at build time.
///
/// Integers denote multiples of the identity, `#k` is a raw carrier index,
/// `x` is the indeterminate of a polynomial quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElemLit {
    Int(u64),
    Index(usize),
    Var,
    Tuple(Vec<ElemLit>),
    Matrix(Vec<Vec<ElemLit>>),
    Neg(Box<ElemLit>),
    Add(Box<ElemLit>, Box<ElemLit>),
    Sub(Box<ElemLit>, Box<ElemLit>),
    Mul(Box<ElemLit>, Box<ElemLit>),
    Pow(Box<ElemLit>, u32),
}

impl ElemLit {
    fn is_atom(&self) -> bool {
        matches!(self, ElemLit::Int(_) | ElemLit::Index(_) | ElemLit::Var | ElemLit::Tuple(_) | ElemLit::Matrix(_))
    }

    fn is_additive(&self) -> bool {
        matches!(self, ElemLit::Add(..) | ElemLit::Sub(..))
    }

    /// Polynomial with the given coefficients (low degree first), zero terms dropped.
    pub fn polynomial(coeffs: &[u64]) -> ElemLit {
        let mut acc: Option<ElemLit> = None;
        for (deg, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match deg {
                0 => ElemLit::Int(c),
                _ => {
                    let mono = if deg == 1 { ElemLit::Var } else { ElemLit::Pow(Box::new(ElemLit::Var), deg as u32) };
                    if c == 1 {
                        mono
                    } else {
                        ElemLit::Mul(Box::new(ElemLit::Int(c)), Box::new(mono))
                    }
                }
            };
            acc = Some(match acc {
                None => term,
                Some(prev) => ElemLit::Add(Box::new(prev), Box::new(term)),
            });
        }
        acc.unwrap_or(ElemLit::Int(0))
    }
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(v) => write!(f, "{v}"),
            ElemLit::Index(i) => write!(f, "#{i}"),
            ElemLit::Var => f.write_str("x"),
            ElemLit::Tuple(items) => {
                f.write_str("(")?;
                write_list(f, items)?;
                f.write_str(")")
            }
            ElemLit::Matrix(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    write_list(f, row)?;
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
            ElemLit::Neg(inner) => {
                if inner.is_additive() || matches!(**inner, ElemLit::Mul(..)) {
                    write!(f, "-({inner})")
                } else {
                    write!(f, "-{inner}")
                }
            }
            ElemLit::Add(a, b) | ElemLit::Sub(a, b) => {
                let op = if matches!(self, ElemLit::Add(..)) { '+' } else { '-' };
                write!(f, "{a}{op}")?;
                if b.is_additive() || matches!(**b, ElemLit::Neg(_)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            ElemLit::Mul(a, b) => {
                if a.is_additive() {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str("*")?;
                if b.is_additive() || matches!(**b, ElemLit::Mul(..) | ElemLit::Neg(_)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            ElemLit::Pow(base, exp) => {
                if base.is_atom() {
                    write!(f, "{base}^{exp}")
                } else {
                    write!(f, "({base})^{exp}")
                }
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[ElemLit]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::ZMod(n) => write!(f, "Z/{n}"),
            RingExpr::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(factor, RingExpr::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            RingExpr::Matrix(k, base) => write!(f, "M{k}({base})"),
            RingExpr::UpperTriangular(k, base) => write!(f, "T{k}({base})"),
            RingExpr::PolyQuotient(n, modulus) => {
                write!(f, "Z/{n}[x]/({})", ElemLit::polynomial(modulus))
            }
            RingExpr::Quotient(base, gens) => {
                if matches!(**base, RingExpr::Product(_)) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                f.write_str(" / (")?;
                write_list(f, gens)?;
                f.write_str(")")
            }
            RingExpr::Subring(base, gens) => {
                write!(f, "sub({base}; ")?;
                write_list(f, gens)?;
                f.write_str(")")
            }
            RingExpr::Corner(base, e) => write!(f, "corner({base}; {e})"),
        }
    }
}

impl Serialize for RingExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
