//! Real and complex scalars that stay exact while every input is rational and
//! fall back to MPFR floats otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real scalar: an exact rational (always in lowest terms) or an MPFR float
/// carrying its own binary precision.
///
/// Arithmetic between two exact values stays exact. Mixing in a float yields a
/// float at the float's precision.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BigValue {
    Exact(Rational),
    Float(Float),
}

impl BigValue {
    pub fn zero() -> Self {
        BigValue::Exact(Rational::new())
    }

    pub fn one() -> Self {
        BigValue::Exact(Rational::from(1))
    }

    pub fn from_int(n: i64) -> Self {
        BigValue::Exact(Rational::from(n))
    }

    /// `num/den` as an exact rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigValue::Exact(Rational::from((num, den)))
    }

    pub fn from_f64(x: f64, bits: u32) -> Self {
        BigValue::Float(Float::with_val(bits, x))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BigValue::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BigValue::Exact(r) => r.cmp0() == Ordering::Equal,
            BigValue::Float(f) => f.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            BigValue::Exact(r) => Some(r),
            BigValue::Float(_) => None,
        }
    }

    /// Sign of the value; NaN compares as equal to zero.
    pub fn signum(&self) -> Ordering {
        match self {
            BigValue::Exact(r) => r.cmp0(),
            BigValue::Float(f) => f.cmp0().unwrap_or(Ordering::Equal),
        }
    }

    /// Binary precision of a float value, `None` when exact.
    pub fn prec(&self) -> Option<u32> {
        match self {
            BigValue::Exact(_) => None,
            BigValue::Float(f) => Some(f.prec()),
        }
    }

    pub fn to_float(&self, bits: u32) -> Float {
        match self {
            BigValue::Exact(r) => Float::with_val(bits, r),
            BigValue::Float(f) => Float::with_val(bits, f),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BigValue::Exact(r) => r.to_f64(),
            BigValue::Float(f) => f.to_f64(),
        }
    }

    /// True for an integer-valued exact rational.
    pub fn is_integer(&self) -> bool {
        match self {
            BigValue::Exact(r) => r.is_integer(),
            BigValue::Float(f) => f.is_integer(),
        }
    }

    pub fn abs(&self) -> BigValue {
        match self {
            BigValue::Exact(r) => BigValue::Exact(r.clone().abs()),
            BigValue::Float(f) => BigValue::Float(f.clone().abs()),
        }
    }

    pub fn recip(&self) -> BigValue {
        BigValue::one() / self
    }

    pub fn powi(&self, e: i32) -> BigValue {
        match self {
            BigValue::Exact(r) => BigValue::Exact(Rational::from(r.pow(e))),
            BigValue::Float(f) => BigValue::Float(f.clone().pow(e)),
        }
    }

    /// Parses `"p/q"` as a rational and a decimal literal such as
    /// `"-0.3765268283"` or `"1.5e-3"` as the exact decimal it denotes.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        if let Some((n, d)) = s.split_once('/') {
            let num = parse_integer(n)?;
            let den = parse_integer(d)?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(BigValue::Exact(Rational::from((num, den))));
        }
        parse_decimal(s).map(BigValue::Exact)
    }

    /// Decimal rendering with at most `digits` significant digits; exact
    /// values are rounded through a float of matching precision.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
        format_decimal(&self.to_float(bits), digits)
    }

    fn binary(&self, rhs: &BigValue, op: Op) -> BigValue {
        use BigValue::{Exact, Float as F};
        match (self, rhs) {
            (Exact(a), Exact(b)) => Exact(match op {
                Op::Add => Rational::from(a + b),
                Op::Sub => Rational::from(a - b),
                Op::Mul => Rational::from(a * b),
                Op::Div => {
                    assert!(b.cmp0() != Ordering::Equal, "exact division by zero");
                    Rational::from(a / b)
                }
            }),
            (F(a), Exact(b)) => {
                let p = a.prec();
                F(match op {
                    Op::Add => Float::with_val(p, a + b),
                    Op::Sub => Float::with_val(p, a - b),
                    Op::Mul => Float::with_val(p, a * b),
                    Op::Div => Float::with_val(p, a / b),
                })
            }
            (Exact(a), F(b)) => {
                let p = b.prec();
                let a = Float::with_val(p, a);
                F(match op {
                    Op::Add => Float::with_val(p, &a + b),
                    Op::Sub => Float::with_val(p, &a - b),
                    Op::Mul => Float::with_val(p, &a * b),
                    Op::Div => Float::with_val(p, &a / b),
                })
            }
            (F(a), F(b)) => {
                let p = a.prec().max(b.prec());
                F(match op {
                    Op::Add => Float::with_val(p, a + b),
                    Op::Sub => Float::with_val(p, a - b),
                    Op::Mul => Float::with_val(p, a * b),
                    Op::Div => Float::with_val(p, a / b),
                })
            }
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn parse_integer(s: &str) -> Result<Integer> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    Integer::from_str_radix(s, 10).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a decimal number: {s:?}"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from(Integer::from_str_radix(&digits, 10).map_err(|_| bad())?);
    let shift = exponent - frac_part.len() as i32;
    let ten = Rational::from(10);
    value *= Rational::from((&ten).pow(shift));
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Formats a float with up to `digits` significant digits, '.' as the decimal
/// separator and scientific notation when `|x| < 1e-4` or `|x| >= 1e6`.
pub fn format_decimal(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, s, exp) = x.to_sign_string_exp(10, Some(digits.max(1)));
    let exp = exp.expect("finite nonzero float has an exponent");
    let s = s.trim_end_matches('0');
    let s = if s.is_empty() { "0" } else { s };
    let sign = if neg { "-" } else { "" };
    // value = 0.s * 10^exp
    if exp <= -4 || exp >= 7 {
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{}", exp - 1)
        } else {
            format!("{sign}{head}.{tail}e{}", exp - 1)
        }
    } else if exp <= 0 {
        format!("{sign}0.{}{s}", "0".repeat((-exp) as usize))
    } else if exp as usize >= s.len() {
        format!("{sign}{s}{}", "0".repeat(exp as usize - s.len()))
    } else {
        let (head, tail) = s.split_at(exp as usize);
        format!("{sign}{head}.{tail}")
    }
}

fn float_digits(f: &Float) -> usize {
    (f64::from(f.prec()) * std::f64::consts::LOG10_2)
        .floor()
        .max(1.0) as usize
}

impl fmt::Display for BigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigValue::Exact(r) => write!(f, "{r}"),
            BigValue::Float(x) => f.write_str(&format_decimal(x, float_digits(x))),
        }
    }
}

impl FromStr for BigValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BigValue::parse(s)
    }
}

impl TryFrom<String> for BigValue {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        BigValue::parse(&s)
    }
}

impl From<BigValue> for String {
    fn from(v: BigValue) -> String {
        v.to_string()
    }
}

impl From<Rational> for BigValue {
    fn from(r: Rational) -> Self {
        BigValue::Exact(r)
    }
}

impl From<Float> for BigValue {
    fn from(f: Float) -> Self {
        BigValue::Float(f)
    }
}

impl From<i64> for BigValue {
    fn from(n: i64) -> Self {
        BigValue::from_int(n)
    }
}

impl PartialEq for BigValue {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use BigValue::{Exact, Float as F};
        match (self, other) {
            (Exact(a), Exact(b)) => Some(a.cmp(b)),
            (F(a), Exact(b)) => a.partial_cmp(b),
            (Exact(a), F(b)) => b.partial_cmp(a).map(Ordering::reverse),
            (F(a), F(b)) => a.partial_cmp(b),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&BigValue> for &BigValue {
            type Output = BigValue;
            fn $method(self, rhs: &BigValue) -> BigValue {
                self.binary(rhs, $op)
            }
        }
        impl $trait<BigValue> for BigValue {
            type Output = BigValue;
            fn $method(self, rhs: BigValue) -> BigValue {
                self.binary(&rhs, $op)
            }
        }
        impl $trait<&BigValue> for BigValue {
            type Output = BigValue;
            fn $method(self, rhs: &BigValue) -> BigValue {
                self.binary(rhs, $op)
            }
        }
        impl $trait<BigValue> for &BigValue {
            type Output = BigValue;
            fn $method(self, rhs: BigValue) -> BigValue {
                self.binary(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, Op::Add);
forward_binop!(Sub, sub, Op::Sub);
forward_binop!(Mul, mul, Op::Mul);
forward_binop!(Div, div, Op::Div);

impl Neg for BigValue {
    type Output = BigValue;
    fn neg(self) -> BigValue {
        match self {
            BigValue::Exact(r) => BigValue::Exact(-r),
            BigValue::Float(f) => BigValue::Float(-f),
        }
    }
}

impl Neg for &BigValue {
    type Output = BigValue;
    fn neg(self) -> BigValue {
        -self.clone()
    }
}

/// A complex scalar whose parts are [`BigValue`]s, so a pole or residue with
/// rational parts stays exact through the pipeline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BigComplex {
    pub re: BigValue,
    pub im: BigValue,
}

impl BigComplex {
    pub fn new(re: BigValue, im: BigValue) -> Self {
        BigComplex { re, im }
    }

    pub fn real(re: BigValue) -> Self {
        BigComplex {
            re,
            im: BigValue::zero(),
        }
    }

    pub fn zero() -> Self {
        BigComplex::real(BigValue::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.re.is_exact() && self.im.is_exact()
    }

    /// True when the imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> BigValue {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self, bits: u32) -> Float {
        self.to_cfloat(bits).abs()
    }

    pub fn arg(&self, bits: u32) -> Float {
        self.to_cfloat(bits).arg()
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        BigComplex::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn powi(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().powi(-e);
        }
        let mut base = self.clone();
        let mut acc = BigComplex::real(BigValue::one());
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub(crate) fn to_cfloat(&self, bits: u32) -> CFloat {
        CFloat::new(self.re.to_float(bits), self.im.to_float(bits))
    }

    pub(crate) fn from_cfloat(z: CFloat) -> Self {
        BigComplex::new(BigValue::Float(z.re), BigValue::Float(z.im))
    }
}

impl From<BigValue> for BigComplex {
    fn from(v: BigValue) -> Self {
        BigComplex::real(v)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.signum() == Ordering::Less {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return BigComplex::real(&self.re * &rhs.re);
        }
        BigComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        if rhs.im.is_zero() {
            return BigComplex::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

/// MPFR complex arithmetic used inside the numerical kernels.
#[derive(Clone, Debug)]
pub(crate) struct CFloat {
    pub re: Float,
    pub im: Float,
}

impl CFloat {
    pub fn new(re: Float, im: Float) -> Self {
        CFloat { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        CFloat { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        CFloat::new(Float::new(bits), Float::new(bits))
    }

    pub fn one(bits: u32) -> Self {
        CFloat::new(Float::with_val(bits, 1), Float::new(bits))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// `e^{i pi num/den}`; exact at multiples of a quarter turn.
    pub fn unit(num: i64, den: i64, bits: u32) -> Self {
        if (2 * num) % den == 0 {
            let (re, im) = match ((2 * num) / den).rem_euclid(4) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            return CFloat::new(Float::with_val(bits, re), Float::with_val(bits, im));
        }
        let pi = Float::with_val(bits, Constant::Pi);
        let theta = Float::with_val(bits, &pi * num) / den;
        let (s, c) = theta.sin_cos(Float::new(bits));
        CFloat::new(c, s)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn conj(&self) -> Self {
        CFloat::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        CFloat::new(
            Float::with_val(p, &self.re * k),
            Float::with_val(p, &self.im * k),
        )
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        let p = self.prec();
        CFloat::new(
            Float::with_val(p, &self.re / &d),
            Float::with_val(p, &self.im / &d).neg(),
        )
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        CFloat::new(self.abs().ln(), self.arg())
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        CFloat::new(m.clone() * c, m * s)
    }

    /// Principal power `z^e` for real `e`; `0^e` is 0 for `e > 0` and 1 for `e = 0`.
    pub fn pow_real(&self, e: &Float) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return if e.is_zero() {
                CFloat::one(p)
            } else {
                CFloat::zero(p)
            };
        }
        if self.im.is_zero() && self.re.cmp0() == Some(Ordering::Greater) {
            let v = Float::with_val(p, &self.re).pow(e);
            return CFloat::from_real(v);
        }
        let r = self.abs().ln() * e;
        let theta = self.arg() * e;
        let m = r.exp();
        let (s, c) = theta.sin_cos(Float::new(p));
        CFloat::new(m.clone() * c, m * s)
    }

    pub fn powi(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().powi(-e);
        }
        let mut base = self.clone();
        let mut acc = CFloat::one(self.prec());
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &CFloat {
    type Output = CFloat;
    fn add(self, rhs: &CFloat) -> CFloat {
        let p = self.prec();
        CFloat::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl Sub for &CFloat {
    type Output = CFloat;
    fn sub(self, rhs: &CFloat) -> CFloat {
        let p = self.prec();
        CFloat::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl Mul for &CFloat {
    type Output = CFloat;
    fn mul(self, rhs: &CFloat) -> CFloat {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        CFloat::new(ac - bd, ad + bc)
    }
}

impl Div for &CFloat {
    type Output = CFloat;
    fn div(self, rhs: &CFloat) -> CFloat {
        if rhs.im.is_zero() {
            let p = self.prec();
            return CFloat::new(
                Float::with_val(p, &self.re / &rhs.re),
                Float::with_val(p, &self.im / &rhs.re),
            );
        }
        self * &rhs.recip()
    }
}

impl Neg for &CFloat {
    type Output = CFloat;
    fn neg(self) -> CFloat {
        let p = self.prec();
        CFloat::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }
}
