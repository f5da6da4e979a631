//! Exact arithmetic in the field Q(i, sqrt2).
//!
//! Every scalar is stored on the rational basis {1, sqrt2, i, i*sqrt2}, which
//! is linearly independent over Q, so representations are unique and equality
//! is coordinate-wise. Inversion goes through the three nontrivial Galois
//! conjugates (i -> -i, sqrt2 -> -sqrt2, and their composition): the product
//! of an element with all of its conjugates is a rational number, so division
//! reduces to rational division.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator always positive.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// An element `a + b*sqrt2 + c*i + d*i*sqrt2` of Q(i, sqrt2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl FieldScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        FieldScalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn from_rat(a: Rational) -> Self {
        FieldScalar { a, b: Rational::zero(), c: Rational::zero(), d: Rational::zero() }
    }

    /// The element sqrt2.
    pub fn sqrt2() -> Self {
        FieldScalar { a: Rational::zero(), b: Rational::one(), c: Rational::zero(), d: Rational::zero() }
    }

    /// The imaginary unit i.
    pub fn unit_i() -> Self {
        FieldScalar { a: Rational::zero(), b: Rational::zero(), c: Rational::one(), d: Rational::zero() }
    }

    /// 1/sqrt2 = sqrt2/2.
    pub fn inv_sqrt2() -> Self {
        FieldScalar { a: Rational::zero(), b: ratio(1, 2), c: Rational::zero(), d: Rational::zero() }
    }

    /// i/sqrt2 = i*sqrt2/2.
    pub fn i_inv_sqrt2() -> Self {
        FieldScalar { a: Rational::zero(), b: Rational::zero(), c: Rational::zero(), d: ratio(1, 2) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True if the element lies in Q (the sqrt2 and i coordinates vanish).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Galois conjugation i -> -i.
    pub fn conj_i(&self) -> Self {
        FieldScalar { a: self.a.clone(), b: self.b.clone(), c: -self.c.clone(), d: -self.d.clone() }
    }

    /// Galois conjugation sqrt2 -> -sqrt2.
    pub fn conj_sqrt2(&self) -> Self {
        FieldScalar { a: self.a.clone(), b: -self.b.clone(), c: self.c.clone(), d: -self.d.clone() }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        FieldScalar { a: &self.a * r, b: &self.b * r, c: &self.c * r, d: &self.d * r }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // p = x * conj_sqrt2(x) is fixed by sqrt2 -> -sqrt2, so it lies in
        // Q(i); p * conj_i(p) is then fixed by everything, i.e. rational.
        let p = self * &self.conj_sqrt2();
        let q = p.conj_i();
        let norm = &p * &q;
        debug_assert!(norm.is_rational(), "norm must be rational");
        debug_assert!(!norm.a.is_zero(), "norm of a nonzero element is nonzero");
        let num = &self.conj_sqrt2() * &q;
        Ok(num.scale(&norm.a.recip()))
    }

    /// Exact division. Errors when `rhs` is zero.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Numerical image under the embedding sqrt2 -> 1.414..., i -> i, as
    /// (real, imaginary) doubles. Used for fidelity cross-checks.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        fn f(r: &Rational) -> f64 {
            // Good enough for bounded test inputs.
            let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        }
        let s = std::f64::consts::SQRT_2;
        (f(&self.a) + f(&self.b) * s, f(&self.c) + f(&self.d) * s)
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl Add for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        if self.is_zero() || rhs.is_zero() {
            return FieldScalar::zero();
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = rat(2);
        // (a1 + b1 r + c1 i + d1 ir)(a2 + b2 r + c2 i + d2 ir), r = sqrt2:
        // r*r = 2, i*i = -1, (ir)(ir) = -2.
        FieldScalar {
            a: a1 * a2 + &two * (b1 * b2) - c1 * c2 - &two * (d1 * d2),
            b: a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            c: a1 * c2 + c1 * a2 + &two * (b1 * d2) + &two * (d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self - rhs;
    }
}

/// Canonical text form: `a + b*r2 + c*i + d*i*r2` with reduced fractional
/// coefficients, zero terms omitted, and the zero element printed as `0`.
impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, suffix) in [
            (&self.a, ""),
            (&self.b, "*r2"),
            (&self.c, "*i"),
            (&self.d, "*i*r2"),
        ] {
            if coef.is_zero() {
                continue;
            }
            let mag = if coef < &Rational::zero() { -coef.clone() } else { coef.clone() };
            if first {
                if coef < &Rational::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coef < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{mag}{suffix}")?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p: BigInt = s.trim().parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(p))
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split into signed terms: a leading sign, then +/- separators.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut chars = compact.chars().peekable();
        if let Some(&ch) = chars.peek() {
            if ch == '+' || ch == '-' {
                neg = ch == '-';
                chars.next();
            }
        }
        for ch in chars {
            if ch == '+' || ch == '-' {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        terms.push((neg, cur));

        let mut out = FieldScalar::zero();
        for (is_neg, term) in terms {
            let (coef_str, basis) = match term.as_str() {
                "r2" => (None, 1),
                "i" => (None, 2),
                "i*r2" | "r2*i" => (None, 3),
                _ => {
                    if let Some(rest) = term.strip_suffix("*i*r2").or_else(|| term.strip_suffix("*r2*i")) {
                        (Some(rest), 3)
                    } else if let Some(rest) = term.strip_suffix("*r2") {
                        (Some(rest), 1)
                    } else if let Some(rest) = term.strip_suffix("*i") {
                        (Some(rest), 2)
                    } else {
                        (Some(term.as_str()), 0)
                    }
                }
            };
            let mut coef = match coef_str {
                None => Rational::one(),
                Some(cs) => parse_rational(cs)?,
            };
            if is_neg {
                coef = -coef;
            }
            match basis {
                0 => out.a += coef,
                1 => out.b += coef,
                2 => out.c += coef,
                _ => out.d += coef,
            }
        }
        Ok(out)
    }
}
