//! Exact arithmetic in the Chow ring of the Grassmannian G(k,n), in the
//! Schubert basis.
//!
//! Elements are sparse integer combinations of Schubert classes indexed by
//! partitions inside the k x (n-k) box. The special classes are the Chern
//! classes of the dual tautological bundles: `special_s(i)` is the class of
//! a column of i boxes and `special_q(j)` is the signed class of a row of j
//! boxes. General products are computed by rewriting one factor through the
//! Jacobi-Trudi determinant into monomials in the special column classes and
//! applying the Pieri rule repeatedly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A weakly decreasing sequence of nonnegative integers with no trailing
/// zeros. The empty partition indexes the unit class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {:?}",
            parts
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The full k x cols rectangle; empty when either side is zero.
    pub fn rectangle(k: u32, cols: u32) -> Self {
        if k == 0 || cols == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![cols; k as usize],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes; the codimension of the Schubert class.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Whether the diagram fits in `rows` rows of width `cols`.
    pub fn fits_in(&self, rows: u32, cols: u32) -> bool {
        self.len() as u32 <= rows && self.part(0) <= cols
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions inside a k x cols box, in lexicographic order.
pub fn partitions_in_box(rows: u32, cols: u32) -> Vec<Partition> {
    fn rec(rows: u32, cols: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(acc.clone()));
        if rows == 0 {
            return;
        }
        let hi = acc.last().copied().unwrap_or(cols);
        for p in 1..=hi {
            acc.push(p);
            rec(rows - 1, cols, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The ambient ring data: G(k,n) with k = n - r the corank.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannContext {
    k: u32,
    n: u32,
}

impl GrassmannContext {
    pub fn new(k: u32, n: u32) -> Self {
        assert!(k <= n, "need k <= n, got k={} n={}", k, n);
        GrassmannContext { k, n }
    }

    /// Context for rank-r loci of n x n matrices: k = n - r.
    pub fn for_rank(n: u32, r: u32) -> Self {
        assert!(r <= n, "need r <= n, got r={} n={}", r, n);
        GrassmannContext { k: n - r, n }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Box width n - k, which is also the rank bound r.
    pub fn cols(&self) -> u32 {
        self.n - self.k
    }

    pub fn rank(&self) -> u32 {
        self.n - self.k
    }

    /// Dimension k(n-k) of the Grassmannian.
    pub fn dim(&self) -> u32 {
        self.k * (self.n - self.k)
    }
}

impl fmt::Debug for GrassmannContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("element is not invertible: constant term must be 1 or -1")]
    NotInvertible,
}

/// A sparse integer combination of Schubert classes in a fixed G(k,n).
///
/// Keys always fit in the k x (n-k) box and never map to zero; anything
/// outside the box is dropped on insertion, matching the vanishing of
/// classes of too-high codimension.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowElement {
    ctx: GrassmannContext,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowElement {
    pub fn zero(ctx: GrassmannContext) -> Self {
        ChowElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GrassmannContext) -> Self {
        ChowElement::schubert(ctx, Partition::empty())
    }

    /// The basis class for `lambda`; zero if `lambda` does not fit the box.
    pub fn schubert(ctx: GrassmannContext, lambda: Partition) -> Self {
        let mut e = ChowElement::zero(ctx);
        e.add_term(lambda, BigInt::one());
        e
    }

    pub fn context(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * sigma_lambda`, silently dropping out-of-box partitions.
    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() || !lambda.fits_in(self.ctx.k, self.ctx.cols()) {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ChowElement) -> ChowElement {
        let mut out = self.clone();
        out.accumulate(other);
        out
    }

    /// In-place sum; the workhorse behind the arithmetic.
    pub fn accumulate(&mut self, other: &ChowElement) {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &ChowElement) -> ChowElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChowElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> ChowElement {
        if c.is_zero() {
            return ChowElement::zero(self.ctx);
        }
        ChowElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Ring product. One factor is expanded through the Jacobi-Trudi
    /// determinant into monomials in the special column classes, which are
    /// then applied to the other factor by iterated Pieri steps.
    pub fn mul(&self, other: &ChowElement) -> ChowElement {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let ctx = self.ctx;
        // Expand the factor with fewer terms.
        let (expand, keep) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        // Group the signed monomials by multiset of column-class indices:
        // the same monomial shows up across many basis classes, and signs
        // cancel before any Pieri work happens.
        let mut monomials: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (lambda, c) in &expand.terms {
            for (sign, indices) in elementary_expansion(lambda, ctx.k).iter() {
                let mut key = indices.clone();
                key.sort_unstable();
                *monomials.entry(key).or_insert_with(BigInt::zero) += c * BigInt::from(*sign);
            }
        }
        let mut out = ChowElement::zero(ctx);
        for (indices, coeff) in monomials {
            if coeff.is_zero() {
                continue;
            }
            let mut cur = keep.scale(&coeff);
            for &i in &indices {
                cur = mul_by_column_class(&cur, i);
                if cur.is_zero() {
                    break;
                }
            }
            out.accumulate(&cur);
        }
        out
    }

    pub fn pow(&self, e: u32) -> ChowElement {
        let mut out = ChowElement::one(self.ctx);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse for elements with constant term +-1, via the
    /// finite geometric series (the positive-degree part is nilpotent).
    pub fn inverse(&self) -> Result<ChowElement, ChowError> {
        let unit = self.coefficient(&Partition::empty());
        if !unit.abs().is_one() {
            return Err(ChowError::NotInvertible);
        }
        // a = u(1 + u*m) with u = +-1, so 1/a = u * sum (-u*m)^t.
        let mut m = self.clone();
        m.terms.remove(&Partition::empty());
        let x = m.scale(&-&unit);
        let mut acc = ChowElement::one(self.ctx);
        let mut p = ChowElement::one(self.ctx);
        for _ in 0..self.ctx.dim() {
            p = p.mul(&x);
            if p.is_zero() {
                break;
            }
            acc.accumulate(&p);
        }
        Ok(acc.scale(&unit))
    }

    /// The Grassmannian integral: the coefficient of the full-box class.
    /// For k = 0 or k = n the box is empty and this reads the constant term.
    pub fn integral(&self) -> BigInt {
        let top = Partition::rectangle(self.ctx.k, self.ctx.cols());
        self.coefficient(&top)
    }

    /// Coefficient of the degree-zero (unit) class.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Partition::empty())
    }

    /// Terms sorted by codimension, then lexicographically.
    pub fn sorted_terms(&self) -> Vec<(Partition, BigInt)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| (a.0.size(), &a.0).cmp(&(b.0.size(), &b.0)));
        v
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if lambda.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "σ{}", lambda)?;
            } else {
                write!(f, "{}·σ{}", mag, lambda)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.ctx)
    }
}

impl std::ops::Add for &ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: &ChowElement) -> ChowElement {
        ChowElement::add(self, rhs)
    }
}

impl std::ops::Sub for &ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: &ChowElement) -> ChowElement {
        ChowElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: &ChowElement) -> ChowElement {
        ChowElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &ChowElement {
    type Output = ChowElement;
    fn neg(self) -> ChowElement {
        ChowElement::neg(self)
    }
}

/// i-th Chern class of the dual tautological subbundle: the column class
/// sigma_(1^i). Unit for i = 0, zero outside 0..=k.
pub fn special_s(ctx: GrassmannContext, i: i64) -> ChowElement {
    if i < 0 || i > ctx.k as i64 {
        return ChowElement::zero(ctx);
    }
    ChowElement::schubert(ctx, Partition::new(vec![1; i as usize]))
}

/// j-th Chern class of the dual tautological quotient: (-1)^j sigma_(j).
/// Unit for j = 0, zero outside 0..=(n-k).
pub fn special_q(ctx: GrassmannContext, j: i64) -> ChowElement {
    if j < 0 || j > ctx.cols() as i64 {
        return ChowElement::zero(ctx);
    }
    let sign = if j % 2 == 0 { 1 } else { -1 };
    ChowElement::schubert(ctx, Partition::new(vec![j as u32])).scale(&BigInt::from(sign))
}

/// Total Chern class of the dual subbundle: 1 + c_1 + ... + c_k.
pub fn total_s(ctx: GrassmannContext) -> ChowElement {
    let mut out = ChowElement::zero(ctx);
    for i in 0..=ctx.k as i64 {
        out.accumulate(&special_s(ctx, i));
    }
    out
}

/// Total Chern class of the dual quotient; the inverse of `total_s`.
pub fn total_q(ctx: GrassmannContext) -> ChowElement {
    let mut out = ChowElement::zero(ctx);
    for j in 0..=ctx.cols() as i64 {
        out.accumulate(&special_q(ctx, j));
    }
    out
}

/// Pieri rule for the row class sigma_(j): all partitions obtained from
/// `lambda` by adding a horizontal strip of j boxes inside the box.
pub fn pieri_row(ctx: GrassmannContext, lambda: &Partition, j: u32) -> Vec<Partition> {
    assert!(
        lambda.fits_in(ctx.k, ctx.cols()),
        "partition {} outside the {}x{} box",
        lambda,
        ctx.k,
        ctx.cols()
    );
    let k = ctx.k as usize;
    let mut out = Vec::new();
    if ctx.k == 0 {
        if j == 0 {
            out.push(lambda.clone());
        }
        return out;
    }
    // mu interleaves lambda: mu_1 >= l_1 >= mu_2 >= l_2 >= ...
    fn rec(
        lambda: &Partition,
        row: usize,
        k: usize,
        cols: u32,
        left: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == k {
            if left == 0 {
                out.push(Partition::new(acc.clone()));
            }
            return;
        }
        let lo = lambda.part(row);
        let cap = if row == 0 { cols } else { lambda.part(row - 1) };
        let hi = cap.min(lo + left);
        for m in lo..=hi {
            acc.push(m);
            rec(lambda, row + 1, k, cols, left - (m - lo), acc, out);
            acc.pop();
        }
    }
    rec(lambda, 0, k, ctx.cols(), j, &mut Vec::new(), &mut out);
    out
}

/// Dual Pieri rule for the column class sigma_(1^i): vertical strips.
pub fn pieri_col(ctx: GrassmannContext, lambda: &Partition, i: u32) -> Vec<Partition> {
    assert!(
        lambda.fits_in(ctx.k, ctx.cols()),
        "partition {} outside the {}x{} box",
        lambda,
        ctx.k,
        ctx.cols()
    );
    let k = ctx.k as usize;
    let mut out = Vec::new();
    if i == 0 {
        out.push(lambda.clone());
        return out;
    }
    // At most one box per row; mu stays weakly decreasing, so a box may go
    // in row t only if the result does not exceed the row above.
    #[allow(clippy::too_many_arguments)]
    fn rec(
        lambda: &Partition,
        row: usize,
        k: usize,
        cols: u32,
        left: u32,
        prev_grew: bool,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left as usize > k - row {
            return;
        }
        if row == k {
            if left == 0 {
                out.push(Partition::new(acc.clone()));
            }
            return;
        }
        let cur = lambda.part(row);
        // skip this row
        acc.push(cur);
        rec(lambda, row + 1, k, cols, left, false, acc, out);
        acc.pop();
        // grow this row by one
        if left > 0 {
            let above = if row == 0 { cols } else { lambda.part(row - 1) };
            let ok = if row == 0 {
                cur < cols
            } else {
                cur < above || (cur == above && prev_grew)
            };
            if ok {
                acc.push(cur + 1);
                rec(lambda, row + 1, k, cols, left - 1, true, acc, out);
                acc.pop();
            }
        }
    }
    rec(lambda, 0, k, ctx.cols(), i, false, &mut Vec::new(), &mut out);
    out
}

fn mul_by_column_class(e: &ChowElement, i: u32) -> ChowElement {
    if i == 0 {
        return e.clone();
    }
    let mut out = ChowElement::zero(e.ctx);
    for (lambda, c) in &e.terms {
        for mu in pieri_col(e.ctx, lambda, i) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// Signed monomials in the column classes whose sum is sigma_lambda, read
/// off the Jacobi-Trudi determinant det(e_{lambda'_i - i + j}).
/// Column-class indices outside 0..=k prune the branch. Expansions are
/// memoized process-wide; the map is behind a mutex so concurrent callers
/// stay safe.
fn elementary_expansion(lambda: &Partition, k: u32) -> std::sync::Arc<Vec<(i64, Vec<u32>)>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    type Memo = Mutex<HashMap<(Partition, u32), Arc<Vec<(i64, Vec<u32>)>>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = memo.lock().unwrap().get(&(lambda.clone(), k)) {
        return hit.clone();
    }
    let expansion = Arc::new(expand_determinant(lambda, k));
    memo.lock()
        .unwrap()
        .entry((lambda.clone(), k))
        .or_insert(expansion)
        .clone()
}

fn expand_determinant(lambda: &Partition, k: u32) -> Vec<(i64, Vec<u32>)> {
    if lambda.is_empty() {
        return vec![(1, Vec::new())];
    }
    let conj = lambda.conjugate();
    let m = conj.len();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; m];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        conj: &Partition,
        k: i64,
        m: usize,
        row: usize,
        inversions: u32,
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(i64, Vec<u32>)>,
    ) {
        if row == m {
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            let indices = chosen
                .iter()
                .enumerate()
                .filter_map(|(i, &col)| {
                    let idx = conj.part(i) as i64 - (i as i64 + 1) + (col as i64 + 1);
                    (idx > 0).then_some(idx as u32)
                })
                .collect();
            out.push((sign, indices));
            return;
        }
        for col in 0..m {
            if used[col] {
                continue;
            }
            let idx = conj.part(row) as i64 - (row as i64 + 1) + (col as i64 + 1);
            if idx < 0 || idx > k {
                continue;
            }
            let inv = chosen.iter().filter(|&&p| p > col).count() as u32;
            used[col] = true;
            chosen.push(col);
            rec(conj, k, m, row + 1, inversions + inv, used, chosen, out);
            chosen.pop();
            used[col] = false;
        }
    }
    rec(
        &conj,
        k as i64,
        m,
        0,
        0,
        &mut used,
        &mut chosen,
        &mut out,
    );
    out
}

/// Binomial coefficient with the conventions used throughout: zero for
/// b < 0 or b > a, and C(a,0) = 1.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..b {
        num *= a - t;
        den *= t + 1;
    }
    num / den
}

/// Degree of the locus of n x n matrices of corank >= k: the telescoping
/// binomial product prod_{i<k} C(n+i,k)/C(k+i,k). Zero when n < k.
pub fn deg_sigma(n: u32, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= binomial(n as i64 + i, k as i64);
        den *= binomial(k as i64 + i, k as i64);
    }
    if num.is_zero() {
        return BigInt::zero();
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(k: u32, n: u32) -> GrassmannContext {
        GrassmannContext::new(k, n)
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    fn sigma(c: GrassmannContext, p: &[u32]) -> ChowElement {
        ChowElement::schubert(c, part(p))
    }

    #[test]
    fn partition_normal_form() {
        assert_eq!(part(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(part(&[]).is_empty());
        assert_eq!(part(&[2, 2, 1]).size(), 5);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[]).conjugate(), part(&[]));
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn partition_rejects_increasing() {
        part(&[1, 2]);
    }

    #[test]
    fn special_s_examples() {
        let c = ctx(2, 3);
        assert_eq!(special_s(c, 0), ChowElement::one(c));
        assert!(special_s(c, 3).is_zero());
        assert!(special_s(c, -1).is_zero());
        assert_eq!(special_s(c, 1), sigma(c, &[1]));
    }

    #[test]
    fn special_q_examples() {
        let c = ctx(2, 3);
        assert_eq!(special_q(c, 0), ChowElement::one(c));
        assert_eq!(special_q(c, 2), sigma(c, &[2]));
        assert!(special_q(c, 3).is_zero());
        // On G(1,2): total_s = 1 + h forces c1 of the dual quotient = -h.
        let p1 = ctx(1, 2);
        assert_eq!(special_q(p1, 1), sigma(p1, &[1]).neg());
    }

    #[test]
    fn total_s_examples() {
        let c = ctx(1, 2);
        assert_eq!(total_s(c), ChowElement::one(c).add(&sigma(c, &[1])));
        let c = ctx(2, 3);
        let expect = ChowElement::one(c).add(&sigma(c, &[1])).add(&sigma(c, &[1, 1]));
        assert_eq!(total_s(c), expect);
        let c = ctx(0, 5);
        assert_eq!(total_s(c), ChowElement::one(c));
    }

    #[test]
    fn pieri_row_examples() {
        let c = ctx(2, 4);
        assert_eq!(
            pieri_row(c, &part(&[1]), 1),
            vec![part(&[1, 1]), part(&[2])]
        );
        assert_eq!(pieri_row(c, &part(&[2, 1]), 0), vec![part(&[2, 1])]);
        // Only (2,2) fits: (3,1) exceeds the box width.
        assert_eq!(pieri_row(c, &part(&[2, 1]), 1), vec![part(&[2, 2])]);
    }

    #[test]
    fn pieri_col_examples() {
        let c = ctx(2, 4);
        assert_eq!(
            pieri_col(c, &part(&[1]), 1),
            vec![part(&[1, 1]), part(&[2])]
        );
        assert_eq!(pieri_col(c, &part(&[1, 1]), 2), vec![part(&[2, 2])]);
        assert_eq!(pieri_col(c, &part(&[2]), 0), vec![part(&[2])]);
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn pieri_rejects_partition_outside_box() {
        pieri_row(ctx(2, 4), &part(&[3]), 1);
    }

    /// Brute-force strip oracle: checks containment and the strip condition
    /// directly against all candidate partitions in the box.
    fn strips_by_enumeration(
        c: GrassmannContext,
        lambda: &Partition,
        add: u32,
        horizontal: bool,
    ) -> Vec<Partition> {
        partitions_in_box(c.k(), c.cols())
            .into_iter()
            .filter(|mu| {
                if mu.size() != lambda.size() + add {
                    return false;
                }
                let rows = c.k() as usize;
                let contains = (0..rows).all(|i| mu.part(i) >= lambda.part(i));
                if !contains {
                    return false;
                }
                if horizontal {
                    // at most one new box per column
                    (0..rows).all(|i| i == 0 || mu.part(i) <= lambda.part(i - 1))
                } else {
                    // at most one new box per row
                    (0..rows).all(|i| mu.part(i) - lambda.part(i) <= 1)
                }
            })
            .collect()
    }

    #[test]
    fn pieri_matches_enumeration() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let c = ctx(k, n);
            for lambda in partitions_in_box(k, c.cols()) {
                for j in 0..=c.cols() {
                    let mut got = pieri_row(c, &lambda, j);
                    got.sort();
                    assert_eq!(got, strips_by_enumeration(c, &lambda, j, true));
                }
                for i in 0..=k {
                    let mut got = pieri_col(c, &lambda, i);
                    got.sort();
                    assert_eq!(got, strips_by_enumeration(c, &lambda, i, false));
                }
            }
        }
    }

    #[test]
    fn mul_examples() {
        let c = ctx(2, 4);
        let h = sigma(c, &[1]);
        assert_eq!(h.mul(&h), sigma(c, &[2]).add(&sigma(c, &[1, 1])));
        assert_eq!(sigma(c, &[2, 1]).mul(&h), sigma(c, &[2, 2]));
        let any = sigma(c, &[2, 1]).add(&sigma(c, &[1]).scale(&BigInt::from(5)));
        assert_eq!(any.mul(&ChowElement::one(c)), any);
    }

    #[test]
    fn mul_commutes_and_associates_exhaustively() {
        // exhaustive over the basis wherever the ring dimension is <= 8
        for (k, n) in [
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
        ] {
            let c = ctx(k, n);
            let basis: Vec<_> = partitions_in_box(k, c.cols())
                .into_iter()
                .map(|p| ChowElement::schubert(c, p))
                .collect();
            for a in &basis {
                for b in &basis {
                    assert_eq!(a.mul(b), b.mul(a));
                    for d in &basis {
                        assert_eq!(a.mul(b).mul(d), a.mul(&b.mul(d)));
                    }
                }
            }
        }
    }

    #[test]
    fn product_of_basis_classes_is_homogeneous() {
        for (k, n) in [(2, 5), (3, 6)] {
            let c = ctx(k, n);
            for a in partitions_in_box(k, c.cols()) {
                for b in partitions_in_box(k, c.cols()) {
                    let p = ChowElement::schubert(c, a.clone())
                        .mul(&ChowElement::schubert(c, b.clone()));
                    for (mu, _) in p.terms() {
                        assert_eq!(mu.size(), a.size() + b.size());
                        assert!(mu.size() <= c.dim());
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let c = ctx(1, 2);
        assert_eq!(
            ChowElement::one(c).inverse().unwrap(),
            ChowElement::one(c)
        );
        let a = ChowElement::one(c).add(&sigma(c, &[1]));
        assert_eq!(
            a.inverse().unwrap(),
            ChowElement::one(c).sub(&sigma(c, &[1]))
        );
        let bad = sigma(c, &[1]).scale(&BigInt::from(2));
        assert_eq!(bad.inverse(), Err(ChowError::NotInvertible));
    }

    #[test]
    fn inverse_of_total_s_is_total_q() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let c = ctx(k, n);
                assert_eq!(total_s(c).inverse().unwrap(), total_q(c));
            }
        }
    }

    #[test]
    fn whitney_identity() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let c = ctx(k, n);
                assert_eq!(total_s(c).mul(&total_q(c)), ChowElement::one(c));
            }
        }
    }

    #[test]
    fn integral_examples() {
        let c = ctx(1, 2);
        assert_eq!(sigma(c, &[1]).integral(), BigInt::from(1));
        let c = ctx(2, 3);
        assert_eq!(total_s(c).pow(3).integral(), BigInt::from(6));
        let c = ctx(2, 4);
        assert_eq!(ChowElement::one(c).integral(), BigInt::zero());
    }

    #[test]
    fn total_class_cube_on_the_projective_plane() {
        // G(2,3) is P^2: (1 + h + h^2)^3 = 1 + 3h + 6h^2
        let c = ctx(2, 3);
        let cube = total_s(c).pow(3);
        assert_eq!(cube.to_string(), "1 + 3·σ[1] + 6·σ[1,1]");
    }

    #[test]
    fn integral_of_total_s_power_matches_closed_form() {
        for n in 1..=8u32 {
            for k in 0..=n {
                let c = ctx(k, n);
                assert_eq!(
                    total_s(c).pow(n).integral(),
                    deg_sigma(n, k),
                    "k={} n={}",
                    k,
                    n
                );
            }
        }
    }

    #[test]
    fn deg_sigma_examples() {
        for n in 1..=9 {
            assert_eq!(deg_sigma(n, 1), BigInt::from(n));
        }
        assert_eq!(deg_sigma(3, 2), BigInt::from(6));
        assert_eq!(deg_sigma(7, 6), BigInt::from(924));
        assert_eq!(deg_sigma(4, 0), BigInt::one());
        assert_eq!(deg_sigma(2, 3), BigInt::zero());
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn mul_rejects_mismatched_contexts() {
        let a = ChowElement::one(ctx(2, 4));
        let b = ChowElement::one(ctx(2, 5));
        let _ = a.mul(&b);
    }

    #[test]
    fn elements_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ChowElement>();
        assert_send_sync::<Partition>();
        assert_send_sync::<GrassmannContext>();
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn display_is_sorted_by_degree_then_lex() {
        let c = ctx(2, 4);
        let e = sigma(c, &[2])
            .add(&sigma(c, &[1, 1]).scale(&BigInt::from(3)))
            .add(&sigma(c, &[1]).neg())
            .add(&ChowElement::one(c));
        assert_eq!(e.to_string(), "1 - σ[1] + 3·σ[1,1] + σ[2]");
        assert_eq!(ChowElement::zero(c).to_string(), "0");
    }

    fn arb_partition(k: u32, cols: u32) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0..=cols, 0..=k as usize).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #[test]
        fn prop_mul_commutes(
            (a, b) in (1u32..=3, 2u32..=6).prop_flat_map(|(k, n)| {
                let k = k.min(n);
                (arb_partition(k, n - k), arb_partition(k, n - k))
                    .prop_map(move |(a, b)| {
                        let c = GrassmannContext::new(k, n);
                        (ChowElement::schubert(c, a), ChowElement::schubert(c, b))
                    })
            })
        ) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn prop_mul_associates(
            (a, b, d) in (1u32..=3, 2u32..=6).prop_flat_map(|(k, n)| {
                let k = k.min(n);
                let cols = n - k;
                (arb_partition(k, cols), arb_partition(k, cols), arb_partition(k, cols))
                    .prop_map(move |(a, b, d)| {
                        let c = GrassmannContext::new(k, n);
                        (
                            ChowElement::schubert(c, a),
                            ChowElement::schubert(c, b),
                            ChowElement::schubert(c, d),
                        )
                    })
            })
        ) {
            prop_assert_eq!(a.mul(&b).mul(&d), a.mul(&b.mul(&d)));
        }
    }
}
