//! Gaussian rationals: `p/q + (r/s)i` with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An element of the field Q(i).
///
/// Both parts are kept in lowest terms with a positive denominator, so two
/// scalars are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn gaussian(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|s|^2 = re^2 + im^2`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }
}

/// Running sum of products, normalized once in [`DotSum::finish`].
///
/// Reducing every partial sum to lowest terms dominates the cost of exact
/// matrix products; here terms with equal denominators are added directly and
/// a single gcd is taken per part at the end.
#[derive(Default)]
pub(crate) struct DotSum {
    re: Fraction,
    im: Fraction,
}

struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction { num: BigInt::zero(), den: BigInt::one() }
    }
}

impl Fraction {
    fn add_product(&mut self, x: &BigRational, y: &BigRational, negate: bool) {
        if x.is_zero() || y.is_zero() {
            return;
        }
        let mut num = x.numer() * y.numer();
        if negate {
            num = -num;
        }
        let den = x.denom() * y.denom();
        if self.num.is_zero() {
            self.num = num;
            self.den = den;
        } else if den == self.den {
            self.num += num;
        } else {
            self.num = &self.num * &den + num * &self.den;
            self.den *= den;
        }
    }

    fn finish(self) -> BigRational {
        if self.den.is_one() {
            BigRational::from_integer(self.num)
        } else {
            BigRational::new(self.num, self.den)
        }
    }
}

impl From<BigRational> for Fraction {
    fn from(r: BigRational) -> Self {
        let (num, den) = r.into_raw();
        Fraction { num, den }
    }
}

impl DotSum {
    /// Starts the sum at `s`.
    pub(crate) fn starting_at(s: Scalar) -> Self {
        DotSum { re: s.re.into(), im: s.im.into() }
    }

    pub(crate) fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        self.accumulate(a, b, false);
    }

    pub(crate) fn sub_product(&mut self, a: &Scalar, b: &Scalar) {
        self.accumulate(a, b, true);
    }

    fn accumulate(&mut self, a: &Scalar, b: &Scalar, negate: bool) {
        self.re.add_product(&a.re, &b.re, negate);
        self.re.add_product(&a.im, &b.im, !negate);
        self.im.add_product(&a.re, &b.im, negate);
        self.im.add_product(&a.im, &b.re, negate);
    }

    pub(crate) fn finish(self) -> Scalar {
        Scalar { re: self.re.finish(), im: self.im.finish() }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the rational types underneath.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `-2`, `5i`, `1/2+3/4i`, `1-1i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_ratio(f, &self.re);
        }
        if !self.re.is_zero() {
            write_ratio(f, &self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        write_ratio(f, &self.im)?;
        f.write_str("i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(text: &str, whole: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("malformed scalar {whole:?}"));
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((p, q)) if digits(p) && digits(q) => (p, q),
        None if digits(body) => (body, "1"),
        _ => return Err(bad()),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {whole:?}")));
    }
    let r = BigRational::new(num, den);
    Ok(if negative { -r } else { r })
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `[-]p[/q][(+|-)r[/s]i]` and the pure-imaginary form `[-]r[/s]i`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || s.bytes().any(|b| b.is_ascii_whitespace()) {
            return Err(Error::Parse(format!("malformed scalar {s:?}")));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar { re: parse_ratio(s, s)?, im: BigRational::zero() });
        };
        // the sign that separates the two parts is the last one past index 0
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im_text = im_text.strip_prefix('+').unwrap_or(im_text);
        let im = match im_text {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_ratio(t, s)?,
        };
        Ok(Scalar { re: parse_ratio(re_text, s)?, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_grammar() {
        assert_eq!(Scalar::gaussian(1, 2, 3, 4).to_string(), "1/2+3/4i");
        assert_eq!(Scalar::from_int(-2).to_string(), "-2");
        assert_eq!(Scalar::gaussian(0, 1, 5, 1).to_string(), "5i");
        assert_eq!(Scalar::gaussian(1, 1, -1, 3).to_string(), "1-1/3i");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("1/2+3/4i".parse::<Scalar>().unwrap(), Scalar::gaussian(1, 2, 3, 4));
        assert_eq!("-2".parse::<Scalar>().unwrap(), Scalar::from_int(-2));
        assert_eq!("5i".parse::<Scalar>().unwrap(), Scalar::gaussian(0, 1, 5, 1));
        assert_eq!("-5/2i".parse::<Scalar>().unwrap(), Scalar::gaussian(0, 1, -5, 2));
        assert_eq!("-1-1i".parse::<Scalar>().unwrap(), Scalar::gaussian(-1, 1, -1, 1));
        assert_eq!("2/4".parse::<Scalar>().unwrap(), Scalar::from_ratio(1, 2));
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "1 + 2i", "a", "1/-2", "+1", "1//2", "1+2", "3/i", "--1"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn conj_and_inverse() {
        let s = Scalar::gaussian(3, 1, 4, 1);
        assert_eq!(s.conj().conj(), s);
        assert_eq!(&s * &s.inv().unwrap(), Scalar::one());
        assert_eq!((&s * &s.conj()).to_string(), "25");
        assert!(Scalar::zero().inv().is_none());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }
}
