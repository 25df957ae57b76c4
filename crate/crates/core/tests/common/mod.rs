//! Independent exact-arithmetic references built on `num` big integers only.

#![allow(dead_code)]

use chebexp::scalar::MpFloat;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Mantissa width kept by [`Dyadic`] products.
const P: u64 = 384;
/// Fixed-point fraction bits for the Taylor sums.
const F: u64 = P + 64;
/// Guaranteed relative accuracy of [`exp_bounds`], as a power of two.
pub const EXP_REL_BITS: u64 = 300;

/// `m * 2^e` with `m > 0`.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    fn trimmed(mut self) -> Self {
        let len = self.m.bits();
        if len > P {
            let s = len - P;
            self.m >>= s;
            self.e += s as i64;
        }
        self
    }

    fn mul(&self, o: &Self) -> Self {
        Dyadic {
            m: &self.m * &o.m,
            e: self.e + o.e,
        }
        .trimmed()
    }

    fn rational(&self) -> BigRational {
        pow2(self.e) * BigRational::from_integer(self.m.clone())
    }
}

pub fn pow2(e: i64) -> BigRational {
    let one = BigInt::one();
    if e >= 0 {
        BigRational::from_integer(one << e as u64)
    } else {
        BigRational::new(one.clone(), one << (-e) as u64)
    }
}

pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

pub fn mp_rational(v: &MpFloat) -> BigRational {
    let r = v.repr();
    let m: BigInt = r
        .significand()
        .to_string()
        .parse()
        .expect("decimal integer");
    pow2(r.exponent() as i64) * BigRational::from_integer(m)
}

/// `sum_k X^k / k!` in fixed point, where `X = r_fixed / 2^F` with `0 <= X < 1`.
fn exp_fixed(r_fixed: &BigInt) -> BigInt {
    let scale = BigInt::one() << F;
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut k = 1u32;
    loop {
        term = ((&term * r_fixed) >> F) / BigInt::from(k);
        if term.is_zero() {
            return sum;
        }
        sum += &term;
        k += 1;
    }
}

fn powi(base: &Dyadic, mut k: u64) -> Dyadic {
    let mut acc = Dyadic {
        m: BigInt::one(),
        e: 0,
    };
    let mut b = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        k >>= 1;
    }
    acc
}

/// Lower and upper rational bounds on `e^x`, `2^-EXP_REL_BITS` apart in relative terms.
///
/// Writes `x = m + r` with integer `m` and `0 <= r < 1`, then forms
/// `e^m e^r` from fixed-point Taylor sums and binary powering.
pub fn exp_bounds(x: f64) -> (BigRational, BigRational) {
    assert!(x.is_finite() && x.abs() <= 1e5);
    let xr = rational(x);
    let m = xr.floor();
    let r = &xr - &m;
    let r_fixed = (r * BigRational::from_integer(BigInt::one() << F))
        .floor()
        .to_integer();
    let er = Dyadic {
        m: exp_fixed(&r_fixed),
        e: -(F as i64),
    }
    .trimmed();
    let e = exp_fixed(&(BigInt::one() << F));
    let m = m.to_integer();
    let base = if m.is_negative() {
        Dyadic {
            m: (BigInt::one() << (2 * F)) / &e,
            e: -(F as i64),
        }
        .trimmed()
    } else {
        Dyadic {
            m: e,
            e: -(F as i64),
        }
        .trimmed()
    };
    let k: u64 = m.abs().try_into().expect("small exponent");
    let v = powi(&base, k).mul(&er).rational();
    let slack = pow2(-(EXP_REL_BITS as i64));
    let one = BigRational::one();
    (&v * (&one - &slack), &v * (&one + &slack))
}
