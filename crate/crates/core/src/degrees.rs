//! Projection degrees d(n, r, S): the master integral over the Grassmannian
//! and the closed-form evaluations for the special pattern families, plus
//! per-rank tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chow::{
    binomial, deg_sigma, special_q, special_s, total_s, ChowElement, GrassmannContext, Partition,
};
use crate::classes::one_minus_sigma_blocks;
use crate::patterns::{BlockShape, Pattern, PatternError};

/// Sum of the dual-subbundle Chern classes c_0 + ... + c_hi; zero when
/// hi < 0, the full total class when hi >= k.
fn chern_sum(ctx: GrassmannContext, hi: i64) -> ChowElement {
    let mut out = ChowElement::zero(ctx);
    for i in 0..=hi.min(ctx.k() as i64) {
        out.accumulate(&special_s(ctx, i));
    }
    out
}

fn assert_blocks_fit(n: u32, shapes: &[BlockShape]) {
    let (rows, cols) = shapes.iter().fold((0, 0), |(r, c), s| {
        let (h, w) = s.extent();
        (r + h, c + w)
    });
    assert!(
        rows <= n && cols <= n,
        "blocks need {} rows and {} columns, exceeding n = {}",
        rows,
        cols,
        n
    );
}

/// The master formula: d = integral of c(S dual)^n (1 - class of S), with
/// the class combined over the given blocks. The blocks must fit disjointly
/// in an n x n matrix.
pub fn degree_from_blocks(ctx: GrassmannContext, shapes: &[BlockShape]) -> BigInt {
    assert_blocks_fit(ctx.n(), shapes);
    let d = total_s(ctx)
        .pow(ctx.n())
        .mul(&one_minus_sigma_blocks(ctx, shapes))
        .integral();
    assert!(
        !d.is_negative(),
        "internal consistency: degree came out negative ({}) for {:?} {:?}",
        d,
        ctx,
        shapes
    );
    d
}

/// Degree for `len` entries in a single row, by the reduced integral
/// c^(n-1) (c_0 + ... + c_{k-len}); zero as soon as len > k.
pub fn d_onerow(n: u32, r: u32, len: u32) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    assert!(len <= n, "a row holds at most n={} entries", n);
    let ctx = GrassmannContext::for_rank(n, r);
    let k = ctx.k() as i64;
    total_s(ctx)
        .pow(n - 1)
        .mul(&chern_sum(ctx, k - len as i64))
        .integral()
}

/// Closed binomial form of `d_onerow`, valid for len <= k = n - r.
pub fn d_onerow_closed(n: u32, r: u32, len: u32) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    let k = (n - r) as i64;
    assert!(
        (len as i64) <= k,
        "closed form needs len <= n - r, got len={} k={}",
        len,
        k
    );
    let n = n as i64;
    let l = len as i64;
    let mut scale = BigRational::one();
    for j in 0..k {
        scale *= BigRational::new(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1));
    }
    let mut sum = BigRational::zero();
    for i in 0..=(n - k - 1) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let top = binomial(l - 1 + k + i, l - 1) * binomial(n - k - 1, i) * binomial(i + k - 1, i);
        sum += BigRational::new(top * BigInt::from(sign), binomial(2 * k + i, i));
    }
    let d = BigRational::from(deg_sigma(n as u32, k as u32)) - scale * sum;
    assert!(d.is_integer(), "closed form did not collapse to an integer");
    d.to_integer()
}

/// Degree for `len` entries in a single column, by the direct integral.
pub fn d_onecol(n: u32, r: u32, len: u32) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    assert!(len >= 1, "column needs at least one entry");
    assert!(len <= n, "a column holds at most n={} entries", n);
    let ctx = GrassmannContext::for_rank(n, r);
    let sigma = column_class(ctx, len);
    total_s(ctx)
        .pow(n)
        .mul(&ChowElement::one(ctx).sub(&sigma))
        .integral()
}

fn column_class(ctx: GrassmannContext, len: u32) -> ChowElement {
    let k = ctx.k() as i64;
    let m = len as i64;
    let ck = special_s(ctx, k);
    let mut out = ChowElement::zero(ctx);
    for i in 0..=ctx.rank() as i64 {
        out.accumulate(
            &special_q(ctx, i)
                .mul(&ck)
                .scale(&binomial(m - 1 + k + i, m - 1)),
        );
    }
    out
}

/// Degree when no two entries share a column, with `lens[i]` entries in the
/// i-th occupied row; rows not listed contribute full total-class factors.
pub fn d_rows(n: u32, r: u32, lens: &[u32]) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    assert!(
        lens.len() as u32 <= n,
        "more than n={} row lengths given",
        n
    );
    assert!(
        lens.iter().sum::<u32>() <= n,
        "entries in distinct columns cannot exceed n={}",
        n
    );
    let ctx = GrassmannContext::for_rank(n, r);
    let k = ctx.k() as i64;
    let mut acc = total_s(ctx).pow(n - lens.len() as u32);
    for &l in lens {
        acc = acc.mul(&chern_sum(ctx, k - l as i64));
        if acc.is_zero() {
            return BigInt::zero();
        }
    }
    acc.integral()
}

/// Closed form for s entries on the diagonal: the alternating binomial
/// combination of rank-locus degrees of shrinking matrices.
pub fn d_diag(n: u32, r: u32, s: u32) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    assert!(s <= n, "diagonal length s={} exceeds n={}", s, n);
    let k = n - r;
    let mut d = BigInt::zero();
    for j in 0..=s {
        let term = binomial(s as i64, j as i64) * deg_sigma(n - j, k);
        if j % 2 == 0 {
            d += term;
        } else {
            d -= term;
        }
    }
    d
}

/// Degree for row blocks of sizes `row_lens` and column blocks of sizes
/// `col_lens`, no block sharing rows or columns with another.
pub fn d_mix(n: u32, r: u32, row_lens: &[u32], col_lens: &[u32]) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    let a = row_lens.len() as u32;
    let rows_used = a + col_lens.iter().sum::<u32>();
    let cols_used = col_lens.len() as u32 + row_lens.iter().sum::<u32>();
    assert!(
        rows_used <= n && cols_used <= n,
        "blocks need {} rows and {} columns, exceeding n = {}",
        rows_used,
        cols_used,
        n
    );
    let ctx = GrassmannContext::for_rank(n, r);
    let k = ctx.k() as i64;
    let one = ChowElement::one(ctx);
    let mut acc = total_s(ctx).pow(n - a);
    for &l in row_lens {
        acc = acc.mul(&chern_sum(ctx, k - l as i64));
    }
    for &m in col_lens {
        acc = acc.mul(&one.sub(&column_class(ctx, m)));
    }
    acc.integral()
}

/// Degree for g disjoint corner blocks:
/// integral of c^(n-2g) (c^2 - (k c_k + c_{k-1}) c - (c_k^2 - sum i c_i c_k))^g.
pub fn d_corners(n: u32, r: u32, g: u32) -> BigInt {
    assert!(r <= n, "rank out of range: r={} n={}", r, n);
    assert!(2 * g <= n, "{} corners do not fit in an {}x{} matrix", g, n, n);
    let ctx = GrassmannContext::for_rank(n, r);
    let k = ctx.k() as i64;
    let c = total_s(ctx);
    let ck = special_s(ctx, k);
    let mut weighted = ChowElement::zero(ctx);
    for i in 0..=k {
        weighted.accumulate(&special_s(ctx, i).scale(&BigInt::from(i)));
    }
    let linear = special_s(ctx, k)
        .scale(&BigInt::from(k))
        .add(&special_s(ctx, k - 1));
    let factor = c
        .mul(&c)
        .sub(&linear.mul(&c))
        .sub(&ck.mul(&ck).sub(&weighted.mul(&ck)));
    c.pow(n - 2 * g).mul(&factor.pow(g)).integral()
}

/// Engine side of the reduction identity for single columns: the integral
/// of c(S dual)^n c_i(Q') over G(k, n-1), with Q' the quotient there.
pub fn reduced_quotient_integral(n: u32, k: u32, i: u32) -> BigInt {
    assert!(n >= 1 && k < n);
    let ctx = GrassmannContext::new(k, n - 1);
    let qi = ChowElement::schubert(ctx, Partition::new(vec![i]));
    total_s(ctx).pow(n).mul(&qi).integral()
}

/// Closed binomial side of the same identity.
pub fn reduced_quotient_integral_closed(n: u32, k: u32, i: u32) -> BigRational {
    let (n, k, i) = (n as i64, k as i64, i as i64);
    let mut out = BigRational::one();
    for j in 0..k {
        out *= BigRational::new(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1));
    }
    out * BigRational::new(
        binomial(n - k - 1, i) * binomial(i + k - 1, i),
        binomial(2 * k + i, i),
    )
}

/// Per-rank degrees of one pattern: d(n, r, S) for r = 1..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    n: u32,
    pattern: Pattern,
    entries: Vec<BigInt>,
}

impl DegreeTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Degree at rank r (1-based).
    pub fn degree(&self, r: u32) -> &BigInt {
        &self.entries[(r - 1) as usize]
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.entries.iter().enumerate().map(|(i, d)| (i as u32 + 1, d))
    }
}

/// Builds the full table for a pattern, decomposing and classifying it.
pub fn degree_table(n: u32, pattern: &Pattern) -> Result<DegreeTable, PatternError> {
    pattern.check_extent(n)?;
    let shapes = pattern.shapes()?;
    let entries = (1..=n)
        .map(|r| degree_from_blocks(GrassmannContext::for_rank(n, r), &shapes))
        .collect();
    Ok(DegreeTable {
        n,
        pattern: pattern.clone(),
        entries,
    })
}

/// Single degree for a pattern.
pub fn degree_of_pattern(n: u32, r: u32, pattern: &Pattern) -> Result<BigInt, PatternError> {
    pattern.check_extent(n)?;
    let shapes = pattern.shapes()?;
    Ok(degree_from_blocks(
        GrassmannContext::for_rank(n, r),
        &shapes,
    ))
}
