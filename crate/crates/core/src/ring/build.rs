//! Materializing ring expressions.

use super::ideal::{quotient, Ideal};
use super::subring::{corner, subring_from_indices};
use super::{Arith, BuildOptions, FiniteRing, RingExpr};
use crate::error::{AlgebraError, Result};

/// Parses and builds in one step.
pub fn build_str(text: &str, options: &BuildOptions) -> Result<FiniteRing> {
    build(&super::parse::parse_ring_expr(text)?, options)
}

/// Builds the ring named by `expr`. Orders above `options.max_order` fail
/// with [`AlgebraError::OrderOverflow`] before any table is allocated.
pub fn build(expr: &RingExpr, options: &BuildOptions) -> Result<FiniteRing> {
    let guard = |order: u128| order_guard(order, options);
    match expr {
        RingExpr::ZMod(n) => {
            if *n == 0 {
                return Err(AlgebraError::MalformedExpr("Z/0 is not finite".into()));
            }
            let n = guard(*n as u128)?;
            Ok(FiniteRing::assemble(Arith::ZMod { n }, n, 0, 1 % n, expr.clone(), *options))
        }
        RingExpr::Product(items) => {
            if items.len() < 2 {
                return Err(AlgebraError::MalformedExpr("a product needs at least two factors".into()));
            }
            let factors: Vec<FiniteRing> = items.iter().map(|e| build(e, options)).collect::<Result<_>>()?;
            assemble_product(factors, expr.clone(), options)
        }
        RingExpr::Matrix(k, base) | RingExpr::UpperTriangular(k, base) => {
            let k = *k;
            if k == 0 {
                return Err(AlgebraError::MalformedExpr("matrix size must be at least 1".into()));
            }
            let triangular = matches!(expr, RingExpr::UpperTriangular(..));
            assemble_matrix(k, build(base, options)?, triangular, expr.clone(), options)
        }
        RingExpr::PolyQuotient(n, modulus) => {
            if *n == 0 {
                return Err(AlgebraError::MalformedExpr("Z/0 is not finite".into()));
            }
            let d = modulus.len().saturating_sub(1);
            if d == 0 || modulus[d] % n != 1 % n {
                return Err(AlgebraError::MalformedExpr("modulus must be monic of degree at least 1".into()));
            }
            let mut order: u128 = 1;
            for _ in 0..d {
                order = order.saturating_mul(*n as u128);
            }
            let order = guard(order)?;
            let one = if order == 1 { 0 } else { 1 };
            let arith = Arith::Poly { n: *n, modulus: modulus.clone() };
            Ok(FiniteRing::assemble(arith, order, 0, one, expr.clone(), *options))
        }
        RingExpr::Quotient(base, gens) => {
            let parent = build(base, options)?;
            let idx: Vec<usize> = gens.iter().map(|g| parent.resolve(g)).collect::<Result<_>>()?;
            let ideal = Ideal::generated_by(&parent, &idx);
            let mut q = quotient(&parent, &ideal)?.ring;
            relabel(&mut q, expr);
            Ok(q)
        }
        RingExpr::Subring(base, gens) => {
            let parent = build(base, options)?;
            let idx: Vec<usize> = gens.iter().map(|g| parent.resolve(g)).collect::<Result<_>>()?;
            let mut s = subring_from_indices(&parent, &idx, true)?.ring;
            relabel(&mut s, expr);
            Ok(s)
        }
        RingExpr::Corner(base, e) => {
            let parent = build(base, options)?;
            let e = parent.resolve(e)?;
            let mut c = corner(&parent, e)?.ring;
            relabel(&mut c, expr);
            Ok(c)
        }
    }
}

fn order_guard(order: u128, options: &BuildOptions) -> Result<usize> {
    if order > options.max_order as u128 {
        Err(AlgebraError::OrderOverflow { order, max: options.max_order })
    } else {
        Ok(order as usize)
    }
}

fn assemble_product(factors: Vec<FiniteRing>, expr: RingExpr, options: &BuildOptions) -> Result<FiniteRing> {
    let order = order_guard(factors.iter().fold(1u128, |acc, f| acc.saturating_mul(f.order() as u128)), options)?;
    let radices = || factors.iter().map(|f| f.order());
    let zero = super::encode_mixed(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>(), radices());
    let one = super::encode_mixed(&factors.iter().map(|f| f.one()).collect::<Vec<_>>(), radices());
    Ok(FiniteRing::assemble(Arith::Product { factors }, order, zero, one, expr, *options))
}

fn assemble_matrix(
    k: usize,
    base: FiniteRing,
    triangular: bool,
    expr: RingExpr,
    options: &BuildOptions,
) -> Result<FiniteRing> {
    let mut cells = Vec::new();
    let mut cell_of = vec![usize::MAX; k * k];
    for r in 0..k {
        for c in 0..k {
            if !triangular || c >= r {
                cell_of[r * k + c] = cells.len();
                cells.push((r, c));
            }
        }
    }
    let order = order_guard((base.order() as u128).saturating_pow(cells.len() as u32), options)?;
    let digits_one: Vec<usize> = cells.iter().map(|&(r, c)| if r == c { base.one() } else { base.zero() }).collect();
    let one = super::encode_uniform(&digits_one, base.order());
    let zero = super::encode_uniform(&vec![base.zero(); cells.len()], base.order());
    let arith = Arith::Matrix { k, base, triangular, cells, cell_of };
    Ok(FiniteRing::assemble(arith, order, zero, one, expr, *options))
}

/// `R^k` from an already built `R`.
pub fn power_of(ring: &FiniteRing, k: usize, options: &BuildOptions) -> Result<FiniteRing> {
    if k < 2 {
        return Err(AlgebraError::MalformedExpr("a power needs at least two factors".into()));
    }
    order_guard((ring.order() as u128).saturating_pow(k as u32), options)?;
    assemble_product(vec![ring.clone(); k], RingExpr::Product(vec![ring.expr().clone(); k]), options)
}

/// `Tk(R)` from an already built `R`.
pub fn triangular_over(ring: &FiniteRing, k: usize, options: &BuildOptions) -> Result<FiniteRing> {
    if k == 0 {
        return Err(AlgebraError::MalformedExpr("matrix size must be at least 1".into()));
    }
    let expr = RingExpr::UpperTriangular(k, Box::new(ring.expr().clone()));
    assemble_matrix(k, ring.clone(), true, expr, options)
}

/// Keeps the expression exactly as written (the derived constructors record
/// canonical generator lists).
fn relabel(ring: &mut FiniteRing, expr: &RingExpr) {
    if ring.expr() != expr {
        let inner = std::sync::Arc::get_mut(&mut ring.inner).expect("freshly built ring is unshared");
        inner.expr = expr.clone();
        inner.label = expr.to_string();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let o = BuildOptions::default();
        for (text, order) in [
            ("Z/7", 7),
            ("Z/2 x Z/3 x Z/4", 24),
            ("M2(Z/3)", 81),
            ("T3(Z/2)", 64),
            ("Z/5[x]/(x^2)", 25),
            ("Z/12 / (4)", 4),
            ("sub(M2(Z/2); [[0,1],[0,0]])", 4),
            ("corner(Z/6; 3)", 2),
        ] {
            assert_eq!(build_str(text, &o).unwrap().order(), order, "{text}");
        }
    }

    #[test]
    fn overflow_is_reported_before_building() {
        let o = BuildOptions::default();
        assert!(matches!(build_str("T3(Z/9)", &o), Err(AlgebraError::OrderOverflow { order: 531_441, .. })));
        assert!(matches!(build_str("M3(Z/4)", &o), Err(AlgebraError::OrderOverflow { .. })));
        let big = BuildOptions { max_order: 1 << 20, ..o };
        assert_eq!(build_str("T3(Z/9)", &big).unwrap().order(), 531_441);
    }

    #[test]
    fn labels_are_kept_verbatim() {
        let o = BuildOptions::default();
        let r = build_str("Z/12 / (8)", &o).unwrap();
        assert_eq!(r.label(), "Z/12 / (8)");
        assert_eq!(r.order(), 4);
    }

    #[test]
    fn small_rings_satisfy_axioms() {
        let o = BuildOptions::default();
        for text in
            ["Z/1", "Z/6", "Z/2 x Z/3", "T2(Z/3)", "M2(Z/2)", "Z/3[x]/(x^2+1)", "Z/4[x]/(x^2+2x+3)", "Z/8 / (4)"]
        {
            let r = build_str(text, &o).unwrap();
            assert_eq!(r.audit_axioms(), Ok(()), "{text}");
        }
    }
}
