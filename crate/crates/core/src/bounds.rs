//! Effective bounds built from the Ackermann function: the order bound for
//! characteristic sets, the regularity level `s0` and the domination level `s1`.
//!
//! Everything is exact big-integer arithmetic. Values that cannot be
//! materialized under [`Limits`] produce [`Error::ResourceLimit`] naming the
//! sub-expression that blew up.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::numpoly::{binomial, factorial};

/// Inputs of the bound functions. `d` is carried for reporting only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundInputs {
    pub r: u64,
    pub m: u64,
    pub n: u64,
    pub d: u64,
}

impl BoundInputs {
    pub fn new(r: u64, m: u64, n: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("m must be at least 1".into()));
        }
        if n == 0 {
            return Err(Error::Invalid("n must be at least 1".into()));
        }
        Ok(BoundInputs { r, m, n, d: 0 })
    }

    pub fn with_degree(mut self, d: u64) -> Self {
        self.d = d;
        self
    }
}

/// All bounds for one `(r, m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub inputs: BoundInputs,
    /// Order bound for characteristic sets.
    pub c: BigInt,
    /// `C * binom(C + m - 1, C)`.
    pub d: BigInt,
    pub s0: BigInt,
    pub s1: BigInt,
    /// Bound `n * D^m` on the standard coefficients of the Kolchin polynomials.
    pub coeff_bound: BigInt,
}

impl BoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.inputs.r,
            "m": self.inputs.m,
            "n": self.inputs.n,
            "d": self.inputs.d,
            "C": self.c.to_string(),
            "D": self.d.to_string(),
            "s0": self.s0.to_string(),
            "s1": self.s1.to_string(),
            "coeff_bound": self.coeff_bound.to_string(),
        })
    }
}

fn check_bits(value_bits: u64, what: impl FnOnce() -> String, limits: &Limits) -> Result<()> {
    if value_bits > limits.bound_bits() {
        Err(Error::ResourceLimit(format!(
            "{} exceeds {} decimal digits",
            what(),
            limits.bound_digits
        )))
    } else {
        Ok(())
    }
}

/// Rows 0 to 3 in closed form: `x + 1`, `x + 2`, `2x + 3`, `2^(x+3) - 3`.
fn low_row(i: u64, x: &BigInt, limits: &Limits) -> Result<BigInt> {
    let v = match i {
        0 => x + 1u32,
        1 => x + 2u32,
        2 => x * 2u32 + 3u32,
        3 => {
            let exp = x
                .to_u64()
                .filter(|e| *e <= limits.bound_bits())
                .ok_or_else(|| {
                    Error::ResourceLimit(format!(
                        "A(3, {}) = 2^({} + 3) - 3 exceeds {} decimal digits",
                        short(x),
                        short(x),
                        limits.bound_digits
                    ))
                })?;
            (BigInt::one() << (exp + 3)) - 3u32
        }
        _ => unreachable!("only rows 0..=3 have closed forms here"),
    };
    check_bits(v.bits(), || format!("A({i}, {})", short(x)), limits)?;
    Ok(v)
}

/// Decimal rendering that elides the middle of huge numbers.
fn short(x: &BigInt) -> String {
    let s = x.to_string();
    if s.len() <= 24 {
        s
    } else {
        format!("{}...{} ({} digits)", &s[..8], &s[s.len() - 8..], s.len())
    }
}

/// Ackermann-Peter function with default limits.
pub fn ackermann(i: u64, x: &BigInt) -> Result<BigInt> {
    ackermann_with(i, x, &Limits::default())
}

/// `A(0, x) = x + 1`, `A(i+1, 0) = A(i, 1)`, `A(i+1, x+1) = A(i, A(i+1, x))`.
///
/// Evaluated without call-stack recursion: `A(i+1, x)` is the `(x+1)`-fold
/// iterate of `A(i, .)` applied to 1, unrolled on an explicit frame stack.
/// Rows 0 to 3 use their closed forms.
pub fn ackermann_with(i: u64, x: &BigInt, limits: &Limits) -> Result<BigInt> {
    if x.is_negative() {
        return Err(Error::NegativeArgument(x.to_string()));
    }
    if i <= 3 {
        return low_row(i, x, limits);
    }
    // frame = (row to apply, applications left)
    let mut frames: Vec<(u64, BigInt)> = vec![(i - 1, x + 1u32)];
    let mut value = BigInt::one();
    let mut steps = 0u64;
    while let Some((row, left)) = frames.last_mut() {
        if left.is_zero() {
            frames.pop();
            continue;
        }
        *left -= 1u32;
        steps += 1;
        if steps > limits.bound_steps {
            return Err(Error::ResourceLimit(format!(
                "A({i}, {}) needs more than {} iteration steps",
                short(x),
                limits.bound_steps
            )));
        }
        let row = *row;
        if row <= 3 {
            value = low_row(row, &value, limits)?;
        } else {
            let count = &value + 1u32;
            frames.push((row - 1, count));
            value = BigInt::one();
        }
    }
    Ok(value)
}

/// `C^1_{r,m}`: the `r`-fold iterate of `A(m - 1, .)` starting from 0.
fn order_bound_single(r: &BigInt, m: u64, limits: &Limits) -> Result<BigInt> {
    // For m >= 3 the iterate is at least 2^r - 1, so huge r cannot fit.
    if m >= 3 && r.bits() > 0 && *r > BigInt::from(limits.bound_bits() + 2) {
        return Err(Error::ResourceLimit(format!(
            "C^1_{{r,{m}}} with r = {} exceeds {} decimal digits",
            short(r),
            limits.bound_digits
        )));
    }
    let count = r
        .to_u64()
        .filter(|c| *c <= limits.bound_steps)
        .ok_or_else(|| {
            Error::ResourceLimit(format!(
                "C^1_{{r,{m}}} with r = {} needs more than {} iteration steps",
                short(r),
                limits.bound_steps
            ))
        })?;
    let mut v = BigInt::zero();
    for _ in 0..count {
        v = ackermann_with(m - 1, &v, limits)?;
    }
    Ok(v)
}

/// Order bound `C^n_{r,m}`: `C^1_{0,m} = 0`, `C^1_{r,m} = A(m-1, C^1_{r-1,m})`,
/// `C^n_{r,m} = C^1_{C^{n-1}_{r,m}, m}`.
pub fn order_bound(r: u64, m: u64, n: u64) -> Result<BigInt> {
    order_bound_with(r, m, n, &Limits::default())
}

pub fn order_bound_with(r: u64, m: u64, n: u64, limits: &Limits) -> Result<BigInt> {
    BoundInputs::new(r, m, n)?;
    let mut c = BigInt::from(r);
    for _ in 0..n {
        c = order_bound_single(&c, m, limits)?;
    }
    Ok(c)
}

/// `C * binom(C + m - 1, C)` for a given order bound `C`.
fn order_sum_bound(c: &BigInt, m: u64, limits: &Limits) -> Result<BigInt> {
    let k = usize::try_from(m - 1)
        .map_err(|_| Error::ResourceLimit("m does not fit in memory".into()))?;
    let b = binomial(&(c + BigInt::from(m - 1)), k);
    let d = c * b;
    check_bits(d.bits(), || format!("D = C*binom(C+{},C)", m - 1), limits)?;
    Ok(d)
}

/// Regularity level `s0 = max(0, m * C * binom(C + m - 1, C) - m)`.
pub fn s0(r: u64, m: u64, n: u64) -> Result<BigInt> {
    s0_with(r, m, n, &Limits::default())
}

pub fn s0_with(r: u64, m: u64, n: u64, limits: &Limits) -> Result<BigInt> {
    let c = order_bound_with(r, m, n, limits)?;
    let d = order_sum_bound(&c, m, limits)?;
    let v = d * m - m;
    Ok(if v.is_negative() { BigInt::zero() } else { v })
}

/// Full report including the domination level `s1 = n 2^(m+1) m! D^m + 1`.
pub fn s1(r: u64, m: u64, n: u64) -> Result<BoundReport> {
    s1_with(r, m, n, &Limits::default())
}

pub fn s1_with(r: u64, m: u64, n: u64, limits: &Limits) -> Result<BoundReport> {
    let inputs = BoundInputs::new(r, m, n)?;
    let c = order_bound_with(r, m, n, limits)?;
    let d = order_sum_bound(&c, m, limits)?;
    let s0 = {
        let v = &d * m - m;
        if v.is_negative() {
            BigInt::zero()
        } else {
            v
        }
    };
    check_bits(d.bits().saturating_mul(m), || format!("D^{m}"), limits)?;
    let exp = u32::try_from(m).map_err(|_| Error::ResourceLimit(format!("D^{m}")))?;
    let d_pow = num_traits::pow::pow(d.clone(), exp as usize);
    let coeff_bound = &d_pow * n;
    let m_usize = usize::try_from(m).map_err(|_| Error::ResourceLimit(format!("{m}!")))?;
    let s1 = (BigInt::from(n) << (m + 1)) * factorial(m_usize) * &d_pow + 1u32;
    check_bits(s1.bits(), || "s1".into(), limits)?;
    Ok(BoundReport {
        inputs,
        c,
        d,
        s0,
        s1,
        coeff_bound,
    })
}
