//! Grassmann classes of the elementary block shapes, and their combination
//! over several blocks.
//!
//! Each supported shape has a closed-form class in the Chow ring of G(k,n),
//! expressed through the special Chern classes. A pattern made of several
//! blocks combines multiplicatively: 1 - (class of S) is the product of the
//! 1 - (class of each block).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::chow::{binomial, special_q, special_s, total_q, total_s, ChowElement, GrassmannContext};
use crate::patterns::BlockShape;

/// The class of one block shape in a fixed G(k,n), with the shape kept for
/// diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannClass {
    shape: BlockShape,
    value: ChowElement,
}

impl GrassmannClass {
    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn value(&self) -> &ChowElement {
        &self.value
    }

    pub fn into_value(self) -> ChowElement {
        self.value
    }
}

/// Class of `len` entries in one row:
/// c(Q dual) * (c_{k-len+1} + ... + c_k) of the dual subbundle.
/// Indices below zero contribute nothing; for len > k the sum picks up
/// c_0 = 1, which is what forces the degree to vanish.
pub fn sigma_row(ctx: GrassmannContext, len: u32) -> GrassmannClass {
    assert!(len >= 1, "row block needs at least one entry");
    GrassmannClass {
        shape: BlockShape::Row(len),
        value: cached(ctx, BlockShape::Row(len), row_value),
    }
}

fn row_value(ctx: GrassmannContext, shape: BlockShape) -> ChowElement {
    let BlockShape::Row(len) = shape else { unreachable!() };
    let k = ctx.k() as i64;
    let mut tail = ChowElement::zero(ctx);
    for i in (k - len as i64 + 1)..=k {
        tail.accumulate(&special_s(ctx, i));
    }
    total_q(ctx).mul(&tail)
}

/// Class of `len` entries in one column:
/// sum_{i=0..r} C(len-1+k+i, len-1) c_i(Q dual) c_k(S dual).
pub fn sigma_col(ctx: GrassmannContext, len: u32) -> GrassmannClass {
    assert!(len >= 1, "column block needs at least one entry");
    GrassmannClass {
        shape: BlockShape::Col(len),
        value: cached(ctx, BlockShape::Col(len), col_value),
    }
}

fn col_value(ctx: GrassmannContext, shape: BlockShape) -> ChowElement {
    let BlockShape::Col(len) = shape else { unreachable!() };
    let k = ctx.k() as i64;
    let m = len as i64;
    let ck = special_s(ctx, k);
    let mut out = ChowElement::zero(ctx);
    for i in 0..=ctx.rank() as i64 {
        let coeff = binomial(m - 1 + k + i, m - 1);
        out.accumulate(&special_q(ctx, i).mul(&ck).scale(&coeff));
    }
    out
}

/// Class of the three-entry corner block:
/// (k c_k + c_{k-1}) / c + (c_k^2 - sum_i i c_i c_k) / c^2,
/// all Chern classes of the dual subbundle, divisions by the inverse of the
/// total class.
pub fn sigma_corner(ctx: GrassmannContext) -> GrassmannClass {
    GrassmannClass {
        shape: BlockShape::Corner,
        value: cached(ctx, BlockShape::Corner, corner_value),
    }
}

fn corner_value(ctx: GrassmannContext, _: BlockShape) -> ChowElement {
    let k = ctx.k() as i64;
    let c_inv = total_s(ctx).inverse().expect("total class is invertible");
    let ck = special_s(ctx, k);
    let first = special_s(ctx, k)
        .scale(&BigInt::from(k))
        .add(&special_s(ctx, k - 1))
        .mul(&c_inv);
    let mut weighted = ChowElement::zero(ctx);
    for i in 0..=k {
        weighted.accumulate(&special_s(ctx, i).scale(&BigInt::from(i)));
    }
    let second = ck.mul(&ck).sub(&weighted.mul(&ck)).mul(&c_inv).mul(&c_inv);
    first.add(&second)
}

/// Class of a full 2x2 square block, transcribed term by term; summation
/// bounds are 0..=r (and the inner index 0..=k), with out-of-range Chern
/// classes contributing zero.
pub fn sigma_square(ctx: GrassmannContext) -> GrassmannClass {
    GrassmannClass {
        shape: BlockShape::Square,
        value: cached(ctx, BlockShape::Square, square_value),
    }
}

fn square_value(ctx: GrassmannContext, _: BlockShape) -> ChowElement {
    let k = ctx.k() as i64;
    let r = ctx.rank() as i64;
    let ck = special_s(ctx, k);
    let ck2 = ck.mul(&ck);
    let ckm1 = special_s(ctx, k - 1);

    // - sum_{i,j} C(2k+i+j+3, 3) q_i q_j c_k^2
    let mut part1 = ChowElement::zero(ctx);
    for i in 0..=r {
        for j in 0..=r {
            let coeff = binomial(2 * k + i + j + 3, 3);
            part1.accumulate(
                &special_q(ctx, i)
                    .mul(&special_q(ctx, j))
                    .mul(&ck2)
                    .scale(&coeff),
            );
        }
    }

    // + sum_j q_j (2 c_k + (k+j) c_{k-1})
    let mut part2 = ChowElement::zero(ctx);
    for j in 0..=r {
        let inner = ck
            .scale(&BigInt::from(2))
            .add(&ckm1.scale(&BigInt::from(k + j)));
        part2.accumulate(&special_q(ctx, j).mul(&inner));
    }

    // + sum_{i,u,v,w} (2 C(i,3) - 2(k-u+v+w+1) C(i,2)
    //   + (k-u+v+w+2)(2k+v+w+1) C(i,1)) q_u q_v q_w c_{k-i} c_k^2
    let mut part3 = ChowElement::zero(ctx);
    for i in 0..=k {
        for u in 0..=r {
            for v in 0..=r {
                for w in 0..=r {
                    let coeff = BigInt::from(2) * binomial(i, 3)
                        - BigInt::from(2 * (k - u + v + w + 1)) * binomial(i, 2)
                        + BigInt::from((k - u + v + w + 2) * (2 * k + v + w + 1))
                            * binomial(i, 1);
                    if num_traits::Zero::is_zero(&coeff) {
                        continue;
                    }
                    let term = special_q(ctx, u)
                        .mul(&special_q(ctx, v))
                        .mul(&special_q(ctx, w))
                        .mul(&special_s(ctx, k - i))
                        .mul(&ck2)
                        .scale(&coeff);
                    part3.accumulate(&term);
                }
            }
        }
    }

    part2.sub(&part1).add(&part3)
}

/// Class of one shape.
pub fn sigma_shape(ctx: GrassmannContext, shape: BlockShape) -> GrassmannClass {
    match shape {
        BlockShape::Row(l) => sigma_row(ctx, l),
        BlockShape::Col(m) => sigma_col(ctx, m),
        BlockShape::Corner => sigma_corner(ctx),
        BlockShape::Square => sigma_square(ctx),
    }
}

/// The product prod_i (1 - class of block i); the unit element for an empty
/// shape list.
pub fn one_minus_sigma_blocks(ctx: GrassmannContext, shapes: &[BlockShape]) -> ChowElement {
    let one = ChowElement::one(ctx);
    let mut out = one.clone();
    for &shape in shapes {
        out = out.mul(&one.sub(sigma_shape(ctx, shape).value()));
    }
    out
}

/// Class of a whole pattern: 1 - prod (1 - class of block), which is zero
/// for the empty pattern.
pub fn sigma_pattern(ctx: GrassmannContext, shapes: &[BlockShape]) -> ChowElement {
    ChowElement::one(ctx).sub(&one_minus_sigma_blocks(ctx, shapes))
}

type Cache = Mutex<HashMap<(u32, u32, BlockShape), ChowElement>>;

/// Patterns are re-evaluated for every rank of a table, so the per-shape
/// classes are memoized by (k, n, shape).
fn cached(
    ctx: GrassmannContext,
    shape: BlockShape,
    build: fn(GrassmannContext, BlockShape) -> ChowElement,
) -> ChowElement {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (ctx.k(), ctx.n(), shape);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = build(ctx, shape);
    cache
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(value)
        .clone()
}
