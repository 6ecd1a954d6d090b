//! Exact Laurent polynomials in a single parameter `q` with arbitrary-precision
//! integer coefficients, and the usual q-analogues of integers, factorials and
//! binomial coefficients.
//!
//! Every value is kept in canonical form: a nonzero polynomial never has a zero
//! coefficient at either end of its window, and zero is the empty window at
//! exponent 0.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    /// Builds `Σ coeffs[i] q^(min_exp + i)` and canonicalizes it.
    pub fn new<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = QLaurent {
            min_exp,
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `c · q^e`
    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        Self::new(e, [c.into()])
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// The polynomial `1 + q + … + q^(len-1)` scaled by nothing; helper for q-integers.
    fn all_ones(len: usize) -> Self {
        Self::new(0, std::iter::repeat_n(BigInt::one(), len))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` over the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// True for zero or when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.min_exp >= 0
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `q ↦ q⁻¹`.
    pub fn invert_q(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(max) => QLaurent {
                min_exp: -max,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact value at a rational point; `q0` must be nonzero if any exponent is negative.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q0.is_zero() && self.min_exp < 0 {
            return Err(Error::Pole);
        }
        // Horner from the top, then rescale by q0^min_exp.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        let scale = if self.min_exp >= 0 {
            pow_rat(q0, self.min_exp as u64)
        } else {
            pow_rat(q0, (-self.min_exp) as u64).recip()
        };
        Ok(acc * scale)
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &QLaurent) -> Result<QLaurent> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(QLaurent::new(self.min_exp - divisor.min_exp, quot))
    }
}

fn pow_rat(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

impl Zero for QLaurent {
    fn zero() -> Self {
        QLaurent {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QLaurent {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for QLaurent {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_into(acc: &mut QLaurent, other: &QLaurent, sign_neg: bool) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if sign_neg {
            -other.clone()
        } else {
            other.clone()
        };
        return;
    }
    let lo = acc.min_exp.min(other.min_exp);
    let hi = acc.max_exp().unwrap().max(other.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in acc.coeffs.drain(..).enumerate() {
        out[(acc.min_exp - lo) as usize + i] = c;
    }
    for (i, c) in other.coeffs.iter().enumerate() {
        let slot = &mut out[(other.min_exp - lo) as usize + i];
        if sign_neg {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    acc.min_exp = lo;
    acc.coeffs = out;
    acc.normalize();
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        add_into(self, rhs, false);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        add_into(self, rhs, true);
    }
}

impl MulAssign<&QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &QLaurent) {
        *self = &*self * rhs;
    }
}

impl<'a> Mul<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &'a QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QLaurent::new(self.min_exp + rhs.min_exp, out)
    }
}

impl<'a> Add<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &'a QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &'a QLaurent) -> QLaurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: QLaurent) {
        *self += &rhs;
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(mut self) -> QLaurent {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -self.clone()
    }
}

impl Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a QLaurent> for QLaurent {
    fn sum<I: Iterator<Item = &'a QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::one(), |acc, x| &acc * &x)
    }
}

/// Human-readable form, lowest exponent first: `q^-1 + 2 + q^3`, `1 - q`.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct QLaurentRepr {
    min_exp: i64,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
            .collect();
        QLaurentRepr {
            min_exp: self.min_exp,
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QLaurentRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QLaurent::new(repr.min_exp, coeffs))
    }
}

fn nonneg(n: i64, what: &str) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Domain(format!("{what} must be nonnegative, got {n}")))
}

/// `[n]_q = 1 + q + … + q^(n-1)`
pub fn q_int(n: i64) -> Result<QLaurent> {
    Ok(QLaurent::all_ones(nonneg(n, "n")?))
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`
pub fn q_factorial(n: i64) -> Result<QLaurent> {
    let n = nonneg(n, "n")?;
    Ok((1..=n).map(QLaurent::all_ones).product())
}

/// Gaussian binomial, by exact division of q-factorials.
pub fn q_binomial(n: i64, k: i64) -> Result<QLaurent> {
    nonneg(n, "n")?;
    nonneg(k, "k")?;
    if k > n {
        return Err(Error::Domain(format!("q_binomial: k={k} exceeds n={n}")));
    }
    let den = &q_factorial(k)? * &q_factorial(n - k)?;
    q_factorial(n)?.div_exact(&den)
}

/// `[alpha]_q [alpha-1]_q ⋯ [alpha-k+1]_q`; zero once a factor `[0]_q` appears.
pub fn q_falling(alpha: usize, k: usize) -> QLaurent {
    if k > alpha {
        return QLaurent::zero();
    }
    (0..k).map(|t| QLaurent::all_ones(alpha - t)).product()
}

/// `Π_i [m_i]_q!` over the given multiplicities.
pub fn q_factorial_product(mults: impl IntoIterator<Item = usize>) -> QLaurent {
    mults
        .into_iter()
        .map(|m| q_factorial(m as i64).expect("nonnegative"))
        .product()
}

/// Converts a coefficient that must fit in `i64` (test and display helper).
pub fn small(c: &BigInt) -> i64 {
    c.to_i64().expect("coefficient exceeds i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> QLaurent {
        QLaurent::new(min, c.iter().copied())
    }

    #[test]
    fn arithmetic_examples() {
        let one_q = p(0, &[1, 1]);
        assert_eq!(&one_q * &one_q, p(0, &[1, 2, 1]));
        assert_eq!(QLaurent::q_pow(-1) * QLaurent::q_pow(1), QLaurent::one());
        let t = p(0, &[1, 1, 1]);
        let z = &t - &t;
        assert!(z.is_zero());
        assert_eq!(z, QLaurent::zero());
        assert_eq!(z.min_exp(), 0);
    }

    #[test]
    fn canonical_trims_both_ends() {
        let a = p(-3, &[0, 0, 5, 0, 1, 0]);
        assert_eq!(a.min_exp(), -1);
        assert_eq!(a.coeffs().len(), 3);
        assert_eq!(a, p(-1, &[5, 0, 1]));
    }

    #[test]
    fn invert_q_examples() {
        assert_eq!(p(0, &[1, 1]).invert_q(), p(-1, &[1, 1]));
        assert_eq!(QLaurent::q_pow(2).invert_q(), QLaurent::q_pow(-2));
        let x = p(0, &[1, 2, 0, 1]);
        assert_eq!(x.invert_q().invert_q(), x);
    }

    #[test]
    fn q_numbers() {
        assert!(q_int(0).unwrap().is_zero());
        assert_eq!(q_factorial(3).unwrap(), p(0, &[1, 2, 2, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), p(0, &[1, 1, 2, 1, 1]));
        assert!(matches!(q_binomial(2, 3), Err(Error::Domain(_))));
        assert!(q_int(-1).is_err());
        assert!(q_factorial(-2).is_err());
    }

    #[test]
    fn q_falling_examples() {
        assert_eq!(q_falling(5, 0), QLaurent::one());
        assert_eq!(q_falling(0, 0), QLaurent::one());
        assert_eq!(q_falling(2, 2), p(0, &[1, 1]));
        assert!(q_falling(1, 2).is_zero());
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = p(0, &[1, 0, 1]);
        let b = p(0, &[1, 1]);
        assert_eq!(a.div_exact(&b), Err(Error::InexactDivision));
        let c = p(0, &[1, 2]);
        assert_eq!(p(0, &[1, 1]).div_exact(&c), Err(Error::InexactDivision));
    }

    #[test]
    fn display() {
        assert_eq!(p(-1, &[1, 2, 0, 0, 1]).to_string(), "q^-1 + 2 + q^3");
        assert_eq!(p(0, &[1, 2, 1]).to_string(), "1 + 2q + q^2");
        assert_eq!(p(0, &[1, -1]).to_string(), "1 - q");
        assert_eq!(p(1, &[-3]).to_string(), "-3q");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = p(-1, &[1, 2, 0, 0, 1]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"min_exp":-1,"coeffs":[1,2,0,0,1]}"#);
        let big = QLaurent::constant(BigInt::from(10).pow(40));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(
            s,
            format!(r#"{{"min_exp":0,"coeffs":[{}]}}"#, BigInt::from(10).pow(40))
        );
        let back: QLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn eval_rational() {
        let x = p(-1, &[1, 0, 1]); // q^-1 + q
        let h = BigRational::new(1.into(), 2.into());
        assert_eq!(x.eval(&h).unwrap(), BigRational::new(5.into(), 2.into()));
        assert_eq!(x.eval(&BigRational::zero()), Err(Error::Pole));
    }
}
