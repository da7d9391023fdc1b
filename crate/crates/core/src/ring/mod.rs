//! Finite rings as enumerable carriers.
//!
//! Every ring is a set `{0, .., order-1}` of element indices with total
//! operations. Canonical enumeration per constructor:
//! - `Z/n`: integers ascending.
//! - products and matrices: row-major lexicographic, first component most significant.
//! - `Z/n[x]/(f)`: coefficient-lexicographic from the leading coefficient, so
//!   `c0 + c1 x + ...` has index `c0 + c1 n + ...`.
//! - quotients, subrings, corners: ascending order of the parent index of the
//!   canonical (smallest) representative.

pub mod build;
pub mod expr;
pub mod ideal;
pub mod iso;
pub mod parse;
pub mod span;
pub mod subring;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use smallvec::SmallVec;

use crate::element::{RadicalResult, SpecialElements};
use crate::error::{AlgebraError, Result};
pub use expr::{ElemLit, RingExpr};

type Digits = SmallVec<[usize; 16]>;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// Handle to an element of a specific ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingId,
    index: usize,
}

impl Element {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn ring_id(self) -> RingId {
        self.ring
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_order: usize,
    /// Operation tables are precomputed up to this order.
    pub dense_max: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_order: 65_536, dense_max: 4096 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DerivedKind {
    Quotient,
    Subring,
    Corner,
}

pub(crate) enum Arith {
    ZMod {
        n: usize,
    },
    Product {
        factors: Vec<FiniteRing>,
    },
    Matrix {
        k: usize,
        base: FiniteRing,
        triangular: bool,
        /// (row, col) of each stored cell, row-major.
        cells: Vec<(usize, usize)>,
        /// cell position for (row, col), or `usize::MAX` below the diagonal.
        cell_of: Vec<usize>,
    },
    Poly {
        n: u64,
        /// monic modulus, low degree first
        modulus: Vec<u64>,
    },
    Derived {
        parent: FiniteRing,
        kind: DerivedKind,
        to_parent: Vec<usize>,
        /// local index of the parent element (coset for quotients), `u32::MAX` if absent
        from_parent: Vec<u32>,
    },
}

struct Dense {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

struct Inner {
    id: RingId,
    order: usize,
    zero: usize,
    one: usize,
    label: String,
    expr: RingExpr,
    options: BuildOptions,
    arith: Arith,
    dense: Option<Dense>,
    additive_gens: OnceLock<Vec<usize>>,
    characteristic: OnceLock<u64>,
    special: OnceLock<SpecialElements>,
    radical: OnceLock<RadicalResult>,
}

/// An immutable finite ring with identity. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing").field("label", &self.inner.label).field("order", &self.inner.order).finish()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.label)
    }
}

impl FiniteRing {
    pub(crate) fn assemble(
        arith: Arith,
        order: usize,
        zero: usize,
        one: usize,
        expr: RingExpr,
        options: BuildOptions,
    ) -> FiniteRing {
        let label = expr.to_string();
        let mut inner = Inner {
            id: RingId::fresh(),
            order,
            zero,
            one,
            label,
            expr,
            options,
            arith,
            dense: None,
            additive_gens: OnceLock::new(),
            characteristic: OnceLock::new(),
            special: OnceLock::new(),
            radical: OnceLock::new(),
        };
        if order <= options.dense_max && order <= u16::MAX as usize + 1 {
            inner.dense = Some(Dense::tabulate(&inner.arith, order));
        }
        FiniteRing { inner: Arc::new(inner) }
    }

    pub fn id(&self) -> RingId {
        self.inner.id
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn zero(&self) -> usize {
        self.inner.zero
    }

    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn expr(&self) -> &RingExpr {
        &self.inner.expr
    }

    pub fn options(&self) -> BuildOptions {
        self.inner.options
    }

    pub fn is_dense(&self) -> bool {
        self.inner.dense.is_some()
    }

    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        self.inner.id == other.inner.id
    }

    pub(crate) fn special_cell(&self) -> &OnceLock<SpecialElements> {
        &self.inner.special
    }

    pub(crate) fn radical_cell(&self) -> &OnceLock<RadicalResult> {
        &self.inner.radical
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.order
    }

    /// Handle for index `i`.
    pub fn element(&self, i: usize) -> Result<Element> {
        if i < self.inner.order {
            Ok(Element { ring: self.inner.id, index: i })
        } else {
            Err(AlgebraError::BadElement {
                ring: self.inner.label.clone(),
                message: format!("index {i} out of range 0..{}", self.inner.order),
            })
        }
    }

    /// Index of a handle, rejecting handles from other rings.
    pub fn check(&self, e: Element) -> Result<usize> {
        if e.ring == self.inner.id && e.index < self.inner.order {
            Ok(e.index)
        } else {
            Err(AlgebraError::ForeignElement)
        }
    }

    pub fn checked_add(&self, a: Element, b: Element) -> Result<Element> {
        let r = self.add(self.check(a)?, self.check(b)?);
        self.element(r)
    }

    pub fn checked_mul(&self, a: Element, b: Element) -> Result<Element> {
        let r = self.mul(self.check(a)?, self.check(b)?);
        self.element(r)
    }

    /// Factor rings of a direct product construction.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        match &self.inner.arith {
            Arith::Product { factors } => Some(factors),
            _ => None,
        }
    }

    /// `(k, base)` for a `Tk(base)` construction.
    pub fn triangular_base(&self) -> Option<(usize, &FiniteRing)> {
        match &self.inner.arith {
            Arith::Matrix { k, base, triangular: true, .. } => Some((*k, base)),
            _ => None,
        }
    }

    /// Parent ring and index map of a quotient, subring or corner.
    pub fn parent_map(&self) -> Option<(&FiniteRing, &[usize])> {
        match &self.inner.arith {
            Arith::Derived { parent, to_parent, .. } => Some((parent, to_parent)),
            _ => None,
        }
    }

    // ---- arithmetic -------------------------------------------------------

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.inner.order && b < self.inner.order);
        match &self.inner.dense {
            Some(d) => d.add[a * self.inner.order + b] as usize,
            None => self.inner.arith.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.inner.order && b < self.inner.order);
        match &self.inner.dense {
            Some(d) => d.mul[a * self.inner.order + b] as usize,
            None => self.inner.arith.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.inner.dense {
            Some(d) => d.neg[a] as usize,
            None => self.inner.arith.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `k * a` by doubling.
    pub fn scalar(&self, k: i64, a: usize) -> usize {
        let mut m = k.unsigned_abs();
        let mut base = a;
        let mut acc = self.zero();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, base);
            }
            m >>= 1;
            if m > 0 {
                base = self.add(base, base);
            }
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// Image of the integer `k` (that is, `k * 1`).
    pub fn from_int(&self, k: i64) -> usize {
        self.scalar(k, self.one())
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Additive generators chosen greedily in ascending index order.
    pub fn additive_generators(&self) -> &[usize] {
        self.inner.additive_gens.get_or_init(|| {
            let mut span = span::AdditiveSpan::new(self);
            for i in self.elements() {
                if !span.contains(i) {
                    span.add_generator(i);
                }
                if span.len() == self.order() {
                    break;
                }
            }
            span.generators().to_vec()
        })
    }

    /// Smallest `c >= 1` with `c * 1 = 0`.
    pub fn characteristic(&self) -> u64 {
        *self.inner.characteristic.get_or_init(|| {
            let mut c = 1u64;
            let mut x = self.one();
            while x != self.zero() {
                x = self.add(x, self.one());
                c += 1;
            }
            c
        })
    }

    pub fn is_commutative(&self) -> bool {
        let gens = self.additive_generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// True when `e` commutes with every element.
    pub fn is_central(&self, e: usize) -> bool {
        self.additive_generators().iter().all(|&g| self.commute(e, g))
    }

    // ---- literals ----------------------------------------------------------

    /// Structured literal naming element `i`.
    pub fn element_literal(&self, i: usize) -> ElemLit {
        match &self.inner.arith {
            Arith::ZMod { .. } => ElemLit::Int(i as u64),
            Arith::Product { factors } => {
                let digits = decode_mixed(i, factors.iter().map(|f| f.order()));
                ElemLit::Tuple(factors.iter().zip(digits).map(|(f, d)| f.element_literal(d)).collect())
            }
            Arith::Matrix { k, base, cells, cell_of, .. } => {
                let digits = decode_uniform(i, base.order(), cells.len());
                let rows = (0..*k)
                    .map(|r| {
                        (0..*k)
                            .map(|c| match cell_of[r * k + c] {
                                usize::MAX => base.element_literal(base.zero()),
                                pos => base.element_literal(digits[pos]),
                            })
                            .collect()
                    })
                    .collect();
                ElemLit::Matrix(rows)
            }
            Arith::Poly { n, modulus } => {
                let coeffs = poly_coeffs(i, *n, modulus.len() - 1);
                ElemLit::polynomial(&coeffs)
            }
            Arith::Derived { parent, to_parent, .. } => parent.element_literal(to_parent[i]),
        }
    }

    pub fn render_element(&self, i: usize) -> String {
        self.element_literal(i).to_string()
    }

    /// Resolves a literal to an element index.
    pub fn resolve(&self, lit: &ElemLit) -> Result<usize> {
        let bad = |message: String| AlgebraError::BadElement { ring: self.inner.label.clone(), message };
        Ok(match lit {
            ElemLit::Int(v) => {
                let v = i64::try_from(*v).map_err(|_| bad(format!("integer {v} too large")))?;
                self.from_int(v)
            }
            ElemLit::Index(i) => {
                if *i >= self.order() {
                    return Err(bad(format!("index #{i} out of range 0..{}", self.order())));
                }
                *i
            }
            ElemLit::Neg(a) => self.neg(self.resolve(a)?),
            ElemLit::Add(a, b) => self.add(self.resolve(a)?, self.resolve(b)?),
            ElemLit::Sub(a, b) => self.sub(self.resolve(a)?, self.resolve(b)?),
            ElemLit::Mul(a, b) => self.mul(self.resolve(a)?, self.resolve(b)?),
            ElemLit::Pow(a, e) => self.pow(self.resolve(a)?, *e as u64),
            ElemLit::Var | ElemLit::Tuple(_) | ElemLit::Matrix(_) => self.resolve_structured(lit)?,
        })
    }

    fn resolve_structured(&self, lit: &ElemLit) -> Result<usize> {
        let bad = |message: String| AlgebraError::BadElement { ring: self.inner.label.clone(), message };
        match (&self.inner.arith, lit) {
            (Arith::Poly { n, modulus }, ElemLit::Var) => {
                let mut coeffs = vec![0u64; modulus.len() - 1];
                if coeffs.len() >= 2 {
                    coeffs[1] = 1 % n;
                    Ok(encode_poly(&coeffs, *n))
                } else {
                    // degree-1 modulus x + m0 makes x = -m0
                    Ok(((*n - modulus[0] % n) % n) as usize)
                }
            }
            (Arith::Product { factors }, ElemLit::Tuple(items)) => {
                if items.len() != factors.len() {
                    return Err(bad(format!(
                        "tuple has {} components, ring has {} factors",
                        items.len(),
                        factors.len()
                    )));
                }
                let digits: Digits = factors.iter().zip(items).map(|(f, it)| f.resolve(it)).collect::<Result<_>>()?;
                Ok(encode_mixed(&digits, factors.iter().map(|f| f.order())))
            }
            (Arith::Matrix { k, base, cells, cell_of, .. }, ElemLit::Matrix(rows)) => {
                if rows.len() != *k || rows.iter().any(|r| r.len() != *k) {
                    return Err(bad(format!("expected a {k}x{k} matrix")));
                }
                let mut digits: Digits = SmallVec::from_elem(0, cells.len());
                for (r, row) in rows.iter().enumerate() {
                    for (c, entry) in row.iter().enumerate() {
                        let v = base.resolve(entry)?;
                        match cell_of[r * k + c] {
                            usize::MAX if v != base.zero() => {
                                return Err(bad(format!("entry ({r},{c}) below the diagonal must be zero")))
                            }
                            usize::MAX => {}
                            pos => digits[pos] = v,
                        }
                    }
                }
                Ok(encode_uniform(&digits, base.order()))
            }
            (Arith::Derived { parent, kind, from_parent, .. }, _) => {
                let p = parent.resolve(lit)?;
                match from_parent[p] {
                    u32::MAX => Err(bad(format!(
                        "{} is not in this {}",
                        parent.render_element(p),
                        if *kind == DerivedKind::Corner { "corner" } else { "subring" }
                    ))),
                    local => Ok(local as usize),
                }
            }
            _ => Err(bad(format!("literal '{lit}' does not match the ring's construction"))),
        }
    }

    /// Exhaustive check of the ring axioms. Cubic in the order.
    pub fn audit_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order();
        let (z, o) = (self.zero(), self.one());
        if n > 1 && z == o {
            return Err("zero equals one in a nontrivial ring".into());
        }
        for a in 0..n {
            if self.add(a, z) != a || self.add(z, a) != a {
                return Err(format!("additive identity fails at {a}"));
            }
            if self.mul(a, o) != a || self.mul(o, a) != a {
                return Err(format!("multiplicative identity fails at {a}"));
            }
            if self.add(a, self.neg(a)) != z {
                return Err(format!("additive inverse fails at {a}"));
            }
            for b in 0..n {
                if self.add(a, b) >= n || self.mul(a, b) >= n {
                    return Err(format!("operation not closed at ({a},{b})"));
                }
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c))
                    {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

impl Dense {
    fn tabulate(arith: &Arith, order: usize) -> Dense {
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        match arith {
            // decode every index once instead of once per pair
            Arith::Product { factors } => {
                let digits: Vec<Digits> =
                    (0..order).map(|a| decode_mixed(a, factors.iter().map(|f| f.order()))).collect();
                for da in &digits {
                    for db in &digits {
                        add.push(componentwise_digits(factors, da, db, |f, x, y| f.add(x, y)) as u16);
                        mul.push(componentwise_digits(factors, da, db, |f, x, y| f.mul(x, y)) as u16);
                    }
                }
            }
            Arith::Matrix { k, base, cells, cell_of, .. } => {
                let digits: Vec<Digits> = (0..order).map(|a| decode_uniform(a, base.order(), cells.len())).collect();
                for da in &digits {
                    for db in &digits {
                        add.push(matrix_add_digits(base, da, db) as u16);
                        mul.push(matrix_mul_digits(*k, base, cells, cell_of, da, db) as u16);
                    }
                }
            }
            _ => {
                for a in 0..order {
                    for b in 0..order {
                        add.push(arith.add(a, b) as u16);
                        mul.push(arith.mul(a, b) as u16);
                    }
                }
            }
        }
        let neg = (0..order).map(|a| arith.neg(a) as u16).collect();
        Dense { add, mul, neg }
    }
}

impl Arith {
    fn add(&self, a: usize, b: usize) -> usize {
        match self {
            Arith::ZMod { n } => {
                let s = a + b;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            Arith::Product { factors } => componentwise(factors, a, b, |f, x, y| f.add(x, y)),
            Arith::Matrix { base, cells, .. } => {
                let m = base.order();
                matrix_add_digits(base, &decode_uniform(a, m, cells.len()), &decode_uniform(b, m, cells.len()))
            }
            Arith::Poly { n, modulus } => {
                let d = modulus.len() - 1;
                let ca = poly_coeffs(a, *n, d);
                let cb = poly_coeffs(b, *n, d);
                let out: SmallVec<[u64; 8]> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % n).collect();
                encode_poly(&out, *n)
            }
            Arith::Derived { parent, to_parent, from_parent, .. } => {
                from_parent[parent.add(to_parent[a], to_parent[b])] as usize
            }
        }
    }

    fn neg(&self, a: usize) -> usize {
        match self {
            Arith::ZMod { n } => (n - a) % n,
            Arith::Product { factors } => {
                let digits = decode_mixed(a, factors.iter().map(|f| f.order()));
                let out: Digits = factors.iter().zip(digits).map(|(f, x)| f.neg(x)).collect();
                encode_mixed(&out, factors.iter().map(|f| f.order()))
            }
            Arith::Matrix { base, cells, .. } => {
                let m = base.order();
                let out: Digits = decode_uniform(a, m, cells.len()).iter().map(|&x| base.neg(x)).collect();
                encode_uniform(&out, m)
            }
            Arith::Poly { n, modulus } => {
                let out: SmallVec<[u64; 8]> =
                    poly_coeffs(a, *n, modulus.len() - 1).iter().map(|&x| (n - x) % n).collect();
                encode_poly(&out, *n)
            }
            Arith::Derived { parent, to_parent, from_parent, .. } => from_parent[parent.neg(to_parent[a])] as usize,
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Arith::ZMod { n } => ((a as u64 * b as u64) % *n as u64) as usize,
            Arith::Product { factors } => componentwise(factors, a, b, |f, x, y| f.mul(x, y)),
            Arith::Matrix { k, base, cells, cell_of, .. } => {
                let m = base.order();
                let (da, db) = (decode_uniform(a, m, cells.len()), decode_uniform(b, m, cells.len()));
                matrix_mul_digits(*k, base, cells, cell_of, &da, &db)
            }
            Arith::Poly { n, modulus } => {
                let d = modulus.len() - 1;
                let ca = poly_coeffs(a, *n, d);
                let cb = poly_coeffs(b, *n, d);
                let nn = *n as u128;
                let mut prod: SmallVec<[u128; 16]> = SmallVec::from_elem(0, 2 * d - 1);
                for (i, &x) in ca.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x as u128 * y as u128) % nn;
                    }
                }
                for t in (d..prod.len()).rev() {
                    let c = prod[t];
                    if c == 0 {
                        continue;
                    }
                    // x^t = x^(t-d) * (x^d) and x^d = -(m_0 + ... + m_{d-1} x^{d-1})
                    for (i, &mi) in modulus[..d].iter().enumerate() {
                        let idx = t - d + i;
                        prod[idx] = (prod[idx] + (nn - c) * mi as u128) % nn;
                    }
                    prod[t] = 0;
                }
                let out: SmallVec<[u64; 8]> = prod[..d].iter().map(|&c| c as u64).collect();
                encode_poly(&out, *n)
            }
            Arith::Derived { parent, to_parent, from_parent, .. } => {
                from_parent[parent.mul(to_parent[a], to_parent[b])] as usize
            }
        }
    }
}

fn componentwise(factors: &[FiniteRing], a: usize, b: usize, op: impl Fn(&FiniteRing, usize, usize) -> usize) -> usize {
    let orders = || factors.iter().map(|f| f.order());
    componentwise_digits(factors, &decode_mixed(a, orders()), &decode_mixed(b, orders()), op)
}

fn componentwise_digits(
    factors: &[FiniteRing],
    da: &[usize],
    db: &[usize],
    op: impl Fn(&FiniteRing, usize, usize) -> usize,
) -> usize {
    factors.iter().zip(da.iter().zip(db)).fold(0, |acc, (f, (&x, &y))| acc * f.order() + op(f, x, y))
}

fn matrix_add_digits(base: &FiniteRing, da: &[usize], db: &[usize]) -> usize {
    let m = base.order();
    da.iter().zip(db).fold(0, |acc, (&x, &y)| acc * m + base.add(x, y))
}

fn matrix_mul_digits(
    k: usize,
    base: &FiniteRing,
    cells: &[(usize, usize)],
    cell_of: &[usize],
    da: &[usize],
    db: &[usize],
) -> usize {
    let entry = |d: &[usize], r: usize, c: usize| match cell_of[r * k + c] {
        usize::MAX => None,
        pos => Some(d[pos]),
    };
    cells.iter().fold(0, |out, &(r, c)| {
        let mut acc = base.zero();
        for l in 0..k {
            if let (Some(x), Some(y)) = (entry(da, r, l), entry(db, l, c)) {
                acc = base.add(acc, base.mul(x, y));
            }
        }
        out * base.order() + acc
    })
}

pub(crate) fn decode_mixed(mut idx: usize, radices: impl Iterator<Item = usize>) -> Digits {
    let radices: Digits = radices.collect();
    let mut out: Digits = SmallVec::from_elem(0, radices.len());
    for pos in (0..radices.len()).rev() {
        out[pos] = idx % radices[pos];
        idx /= radices[pos];
    }
    out
}

pub(crate) fn encode_mixed(digits: &[usize], radices: impl Iterator<Item = usize>) -> usize {
    digits.iter().zip(radices).fold(0, |acc, (&d, r)| acc * r + d)
}

fn decode_uniform(mut idx: usize, radix: usize, len: usize) -> Digits {
    let mut out: Digits = SmallVec::from_elem(0, len);
    for slot in out.iter_mut().rev() {
        *slot = idx % radix;
        idx /= radix;
    }
    out
}

pub(crate) fn encode_uniform(digits: &[usize], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

/// Coefficients `c0..c_{d-1}` of the element with index `idx`.
fn poly_coeffs(mut idx: usize, n: u64, d: usize) -> SmallVec<[u64; 8]> {
    let n = n as usize;
    (0..d)
        .map(|_| {
            let c = idx % n;
            idx /= n;
            c as u64
        })
        .collect()
}

fn encode_poly(coeffs: &[u64], n: u64) -> usize {
    coeffs.iter().rev().fold(0usize, |acc, &c| acc * n as usize + c as usize)
}

#[cfg(test)]
mod tests {
    use super::build::build;
    use super::parse::{parse_element, parse_ring_expr};
    use super::*;

    fn ring(text: &str) -> FiniteRing {
        build(&parse_ring_expr(text).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn element_handles_reject_foreign_rings() {
        let a = ring("Z/6");
        let b = ring("Z/6");
        let x = a.element(2).unwrap();
        let y = b.element(3).unwrap();
        assert_eq!(a.checked_mul(x, a.element(3).unwrap()).unwrap().index(), 0);
        assert_eq!(a.checked_add(x, y), Err(AlgebraError::ForeignElement));
        assert!(a.element(6).is_err());
    }

    #[test]
    fn literals_round_trip_through_indices() {
        for text in ["Z/6", "Z/2 x Z/3", "M2(Z/2)", "T2(Z/3)", "Z/4[x]/(x^2)", "Z/2[x]/(x^3+x+1)"] {
            let r = ring(text);
            for i in r.elements() {
                let lit = r.element_literal(i);
                assert_eq!(r.resolve(&lit).unwrap(), i, "{text}: {lit}");
            }
        }
    }

    #[test]
    fn product_and_matrix_enumeration_order() {
        let p = ring("Z/5 x Z/5");
        assert_eq!(p.resolve(&parse_element("(1,2)").unwrap()).unwrap(), 7);
        let m = ring("M2(Z/2)");
        // [[a,b],[c,d]] has index 8a + 4b + 2c + d
        assert_eq!(m.resolve(&parse_element("[[0,1],[1,1]]").unwrap()).unwrap(), 7);
        assert_eq!(m.one(), 9);
        let t = ring("T2(Z/2)");
        assert_eq!(t.render_element(t.one()), "[[1,0],[0,1]]");
        assert!(t.resolve(&parse_element("[[1,0],[1,1]]").unwrap()).is_err());
    }

    #[test]
    fn polynomial_arithmetic_reduces_by_modulus() {
        let r = ring("Z/2[x]/(x^2+x+1)");
        let x = r.resolve(&ElemLit::Var).unwrap();
        // x^2 = x + 1, x^3 = 1 in GF(4)
        assert_eq!(r.render_element(r.mul(x, x)), "x+1");
        assert_eq!(r.pow(x, 3), r.one());
        let s = ring("Z/4[x]/(x^2)");
        let two_x = s.resolve(&parse_element("2x").unwrap()).unwrap();
        assert_eq!(s.mul(two_x, two_x), s.zero());
        assert_eq!(s.mul(s.resolve(&ElemLit::Var).unwrap(), s.resolve(&ElemLit::Var).unwrap()), s.zero());
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(ring("Z/12").characteristic(), 12);
        assert_eq!(ring("M2(Z/2)").characteristic(), 2);
        assert_eq!(ring("Z/3 x Z/5").characteristic(), 15);
        assert_eq!(ring("Z/4 x Z/6").characteristic(), 12);
    }

    #[test]
    fn dense_and_on_demand_agree() {
        let expr = parse_ring_expr("T2(Z/4) x Z/3").unwrap();
        let dense = build(&expr, &BuildOptions::default()).unwrap();
        let lazy = build(&expr, &BuildOptions { dense_max: 0, ..BuildOptions::default() }).unwrap();
        assert!(dense.is_dense() && !lazy.is_dense());
        for a in dense.elements() {
            assert_eq!(dense.neg(a), lazy.neg(a));
            for b in dense.elements().step_by(7) {
                assert_eq!(dense.add(a, b), lazy.add(a, b));
                assert_eq!(dense.mul(a, b), lazy.mul(a, b));
            }
        }
    }

    #[test]
    fn commutativity_and_centrality() {
        assert!(ring("Z/4[x]/(x^2)").is_commutative());
        let m = ring("M2(Z/2)");
        assert!(!m.is_commutative());
        let centre: Vec<_> = m.elements().filter(|&e| m.is_central(e)).collect();
        assert_eq!(centre, vec![0, 9]);
    }
}
