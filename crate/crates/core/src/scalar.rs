//! Exact scalar arithmetic over `Q` and real quadratic extensions `Q(sqrt(D))`.
//!
//! Every quantity produced by the constructions in this crate lies either in
//! the rationals or in a single quadratic field whose radicand comes from the
//! spectrum of one graph, so a two-component representation suffices; no
//! general algebraic-number tower is needed.  A float kind exists as a
//! fallback for exported values and for user-supplied floating-point Gram
//! matrices.  Exact kinds never silently degrade to floats: mixing a float
//! with an exact value coerces to float, but exact-only pipelines stay exact.
//!
//! Text grammar (used by all JSON/CSV emission and parsing):
//!
//! * rational: `p/q`, or plain `p` when the denominator is 1
//! * quadratic: `p/q+r/s*sqrt(D)` (minus signs where needed)
//! * float: a decimal string such as `0.25` or `1e-3`

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Comparison regime for verification routines.
///
/// `Exact` tolerates nothing.  `Float` compares with a relative tolerance and
/// an absolute floor, and only ever applies to values of float kind; exact
/// values compared under `Float` mode are still compared exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Exact,
    Float { rel_tol: f64, abs_tol: f64 },
}

impl Mode {
    /// Float mode with the given relative tolerance and the default
    /// absolute floor of 1e-12.
    pub fn float(rel_tol: f64) -> Mode {
        Mode::Float { rel_tol, abs_tol: 1e-12 }
    }

    /// Default float mode: relative 1e-9, absolute floor 1e-12.
    pub fn default_float() -> Mode {
        Mode::float(1e-9)
    }

    /// Equality of two scalars under this mode.
    pub fn eq(&self, x: &Scalar, y: &Scalar) -> bool {
        match (self, x.is_float() || y.is_float()) {
            (Mode::Float { rel_tol, abs_tol }, true) => {
                let (a, b) = (x.to_f64(), y.to_f64());
                (a - b).abs() <= abs_tol.max(rel_tol * a.abs().max(b.abs()))
            }
            // Exact kinds compare exactly even in float mode.
            _ => x == y,
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        self.eq(x, &Scalar::zero())
    }

    /// Integer value of a scalar under this mode: exact kinds must be
    /// integral rationals; float kinds round to the nearest integer when
    /// they sit within tolerance of it.
    pub fn to_integer(&self, x: &Scalar) -> Option<num::BigInt> {
        match (self, x) {
            (Mode::Float { .. }, Scalar::Float(v)) => {
                let rounded = v.round();
                self.eq(x, &Scalar::Float(rounded)).then(|| {
                    num::BigInt::from(rounded as i64)
                })
            }
            _ => x.to_integer(),
        }
    }
}

/// An exact field element: rational, quadratic `base + coef*sqrt(radicand)`,
/// or a 64-bit float fallback.
///
/// Invariants: rationals are reduced with positive denominator (enforced by
/// `BigRational`); a quadratic with zero radical coefficient normalizes to
/// the rational kind; radicands are square-free and at least 2.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic {
        base: BigRational,
        coef: BigRational,
        radicand: u64,
    },
    Float(f64),
}

/// Largest square divisor split: returns `(d, delta)` with `n = d^2 * delta`
/// and `delta` square-free.
fn square_free_split(n: u64) -> (u64, u64) {
    let mut d = 1u64;
    let mut delta = n;
    let mut p = 2u64;
    while p * p <= delta {
        while delta.is_multiple_of(p * p) {
            delta /= p * p;
            d *= p;
        }
        p += 1;
    }
    (d, delta)
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(big(n)))
    }

    /// Rational `p/q`.  Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::Rational(BigRational::new(big(p), big(q)))
    }

    pub fn from_big(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }

    /// `base + coef * sqrt(n)`, normalized: the square part of `n` is folded
    /// into `coef`, and a vanishing radical part collapses to a rational.
    pub fn quadratic(base: BigRational, coef: BigRational, n: u64) -> Scalar {
        if coef.is_zero() || n == 0 {
            return Scalar::Rational(base);
        }
        let (d, delta) = square_free_split(n);
        let coef = coef * BigRational::from_integer(BigInt::from(d));
        if delta == 1 {
            Scalar::Rational(base + coef)
        } else {
            Scalar::Quadratic { base, coef, radicand: delta }
        }
    }

    /// `sqrt(n)` as an exact scalar (rational when `n` is a perfect square).
    pub fn sqrt(n: u64) -> Scalar {
        Scalar::quadratic(BigRational::zero(), BigRational::one(), n)
    }

    pub fn float(x: f64) -> Scalar {
        Scalar::Float(x)
    }

    pub fn is_float(&self) -> bool {
        matches!(self, Scalar::Float(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quadratic { .. } => false, // coef != 0 and radicand square-free
            Scalar::Float(x) => *x == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Quadratic { .. } => false,
            Scalar::Float(x) => *x == 1.0,
        }
    }

    /// The radicand when this value is of quadratic kind.
    pub fn radicand(&self) -> Option<u64> {
        match self {
            Scalar::Quadratic { radicand, .. } => Some(*radicand),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Exact integer value, when the scalar is a rational with denominator 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Nearest 64-bit float.  Quadratic values use the correctly-rounded
    /// square root of the radicand.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quadratic { base, coef, radicand } => {
                base.to_f64().unwrap_or(f64::NAN)
                    + coef.to_f64().unwrap_or(f64::NAN) * (*radicand as f64).sqrt()
            }
            Scalar::Float(x) => *x,
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        use Scalar::*;
        match (self, rhs) {
            (Float(x), y) => Ok(Float(x + y.to_f64())),
            (x, Float(y)) => Ok(Float(x.to_f64() + y)),
            (Rational(x), Rational(y)) => Ok(Rational(x + y)),
            (Rational(x), Quadratic { base, coef, radicand }) => Ok(Scalar::Quadratic {
                base: x + base,
                coef: coef.clone(),
                radicand: *radicand,
            }),
            (Quadratic { .. }, Rational(_)) => rhs.try_add(self),
            (
                Quadratic { base: p, coef: r, radicand: d },
                Quadratic { base: p2, coef: r2, radicand: d2 },
            ) => {
                if d != d2 {
                    return Err(Error::IncompatibleRadicands(*d, *d2));
                }
                let coef = r + r2;
                Ok(if coef.is_zero() {
                    Rational(p + p2)
                } else {
                    Quadratic { base: p + p2, coef, radicand: *d }
                })
            }
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_add(&rhs.clone().negate())
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        use Scalar::*;
        match (self, rhs) {
            (Float(x), y) => Ok(Float(x * y.to_f64())),
            (x, Float(y)) => Ok(Float(x.to_f64() * y)),
            (Rational(x), Rational(y)) => Ok(Rational(x * y)),
            (Rational(x), Quadratic { base, coef, radicand }) => {
                if x.is_zero() {
                    return Ok(Scalar::zero());
                }
                Ok(Quadratic { base: x * base, coef: x * coef, radicand: *radicand })
            }
            (Quadratic { .. }, Rational(_)) => rhs.try_mul(self),
            (
                Quadratic { base: p, coef: r, radicand: d },
                Quadratic { base: p2, coef: r2, radicand: d2 },
            ) => {
                if d != d2 {
                    return Err(Error::IncompatibleRadicands(*d, *d2));
                }
                let delta = BigRational::from_integer(BigInt::from(*d));
                let base = p * p2 + r * r2 * delta;
                let coef = p * r2 + r * p2;
                Ok(if coef.is_zero() {
                    Rational(base)
                } else {
                    Quadratic { base, coef, radicand: *d }
                })
            }
        }
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_mul(&rhs.try_inverse()?)
    }

    pub fn try_inverse(&self) -> Result<Scalar> {
        use Scalar::*;
        match self {
            Rational(x) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Rational(x.recip()))
                }
            }
            Quadratic { base: p, coef: r, radicand: d } => {
                // 1/(p + r sqrt(d)) = (p - r sqrt(d)) / (p^2 - r^2 d); the
                // denominator vanishes only for the zero element because d is
                // square-free and at least 2.
                let delta = BigRational::from_integer(BigInt::from(*d));
                let denom = p * p - r * r * delta;
                if denom.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Quadratic {
                    base: p / &denom,
                    coef: -(r / &denom),
                    radicand: *d,
                })
            }
            Float(x) => {
                if *x == 0.0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Float(1.0 / x))
                }
            }
        }
    }

    pub fn negate(self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Quadratic { base, coef, radicand } => {
                Scalar::Quadratic { base: -base, coef: -coef, radicand }
            }
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }

    /// Exact sign: -1, 0 or +1.  The sign of a quadratic value is decided by
    /// rational arithmetic alone, never by float rounding.
    pub fn sign(&self) -> i8 {
        match self {
            Scalar::Rational(x) => {
                if x.is_zero() {
                    0
                } else if x.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Quadratic { base: p, coef: r, radicand: d } => {
                let sp = if p.is_zero() { 0 } else if p.is_positive() { 1 } else { -1 };
                let sr = if r.is_positive() { 1i8 } else { -1 }; // r != 0
                if sp == 0 {
                    return sr;
                }
                if sp == sr {
                    return sp;
                }
                // Opposite signs: compare p^2 against r^2 d.
                let delta = BigRational::from_integer(BigInt::from(*d));
                let diff = p * p - r * r * delta;
                let s = if diff.is_zero() { 0 } else if diff.is_positive() { 1 } else { -1 };
                // |p| > |r|sqrt(d) means the base term wins.
                if s == 0 {
                    0 // unreachable for square-free d >= 2, kept for safety
                } else {
                    sp * s
                }
            }
            Scalar::Float(x) => {
                if *x == 0.0 {
                    0
                } else if *x > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Exact comparison.  Fails when the two values live in different
    /// quadratic fields (their difference is not representable here).
    pub fn try_cmp(&self, rhs: &Scalar) -> Result<Ordering> {
        let diff = self.try_sub(rhs)?;
        Ok(match diff.sign() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        })
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            self.clone().negate()
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Scalar {
        self.try_mul(self).expect("squaring is always field-compatible")
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

// Scalars travel as strings in their text grammar.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar fields must be compatible")
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().negate()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt_rational(r, f),
            Scalar::Quadratic { base, coef, radicand } => {
                fmt_rational(base, f)?;
                write!(f, "{}", if coef.is_negative() { "-" } else { "+" })?;
                fmt_rational(&coef.abs(), f)?;
                write!(f, "*sqrt({radicand})")
            }
            Scalar::Float(x) => write!(f, "{x:?}"),
        }
    }
}

fn parse_big_rational(s: &str) -> Result<BigRational> {
    let err = |m: &str| Error::ScalarParse(s.to_string(), m.to_string());
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|e| err(&e.to_string()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|e| err(&e.to_string()))?;
            let q = BigInt::from_str(q).map_err(|e| err(&e.to_string()))?;
            if q <= BigInt::zero() {
                return Err(err("denominator must be positive"));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Scalar> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |m: &str| Error::ScalarParse(input.to_string(), m.to_string());
        if s.is_empty() {
            return Err(err("empty string"));
        }
        if let Some(pos) = s.find("sqrt(") {
            let inner = &s[pos + 5..];
            let close = inner.find(')').ok_or_else(|| err("missing ')'"))?;
            if pos + 5 + close + 1 != s.len() {
                return Err(err("trailing characters after sqrt(...)"));
            }
            let radicand: u64 =
                inner[..close].parse().map_err(|_| err("radicand must be a nonnegative integer"))?;
            let prefix = s[..pos].strip_suffix('*').unwrap_or(&s[..pos]);
            // Split "base±coef"; the separator is the first sign past index 0.
            let (base, coef) = match prefix.char_indices().skip(1).find(|(_, c)| *c == '+' || *c == '-')
            {
                Some((i, c)) => {
                    let coef_str = &prefix[i + 1..];
                    let coef = if coef_str.is_empty() {
                        BigRational::one()
                    } else {
                        parse_big_rational(coef_str)?
                    };
                    let coef = if c == '-' { -coef } else { coef };
                    (parse_big_rational(&prefix[..i])?, coef)
                }
                None => {
                    // No base part: the whole prefix (possibly empty or a
                    // bare sign) is the coefficient.
                    let coef = match prefix {
                        "" => BigRational::one(),
                        "-" => -BigRational::one(),
                        p => parse_big_rational(p)?,
                    };
                    (BigRational::zero(), coef)
                }
            };
            return Ok(Scalar::quadratic(base, coef, radicand));
        }
        if s.contains('.') || s.contains('e') || s.contains('E') {
            let x: f64 = s.parse().map_err(|_| err("invalid decimal"))?;
            if !x.is_finite() {
                return Err(err("not a finite value"));
            }
            return Ok(Scalar::Float(x));
        }
        Ok(Scalar::Rational(parse_big_rational(&s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, qd: i64) -> Scalar {
        Scalar::ratio(p, qd)
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(&q(1, 6) * &q(-2, 3), q(-1, 9));
        assert_eq!(&q(1, 3) + &q(-1, 3), Scalar::zero());
        assert_eq!(&q(3, 4) - &q(1, 4), q(1, 2));
        assert_eq!(&q(1, 2) / &q(1, 4), Scalar::int(2));
    }

    #[test]
    fn golden_ratio_conjugates_multiply_to_minus_one() {
        // (1+sqrt5)/2 * (1-sqrt5)/2 = (1-5)/4 = -1
        let phi = Scalar::quadratic(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5,
        );
        let psi = Scalar::quadratic(
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-1).into(), 2.into()),
            5,
        );
        assert_eq!(&phi * &psi, Scalar::int(-1));
    }

    #[test]
    fn quadratic_normalization() {
        // sqrt(8) = 2 sqrt(2)
        assert_eq!(
            Scalar::sqrt(8),
            Scalar::quadratic(BigRational::zero(), BigRational::from_integer(2.into()), 2)
        );
        // sqrt(9) = 3
        assert_eq!(Scalar::sqrt(9), Scalar::int(3));
        // zero coefficient collapses
        assert_eq!(Scalar::quadratic(BigRational::one(), BigRational::zero(), 5), Scalar::one());
    }

    #[test]
    fn incompatible_radicands_rejected() {
        let a = Scalar::sqrt(5);
        let b = Scalar::sqrt(13);
        assert!(matches!(a.try_add(&b), Err(Error::IncompatibleRadicands(5, 13))));
        assert!(matches!(a.try_mul(&b), Err(Error::IncompatibleRadicands(5, 13))));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(Scalar::one().try_div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn exact_sign_of_quadratics() {
        // (-1+sqrt5)/2 > 0, (-1-sqrt5)/2 < 0
        let r1 = Scalar::quadratic(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5,
        );
        let r2 = Scalar::quadratic(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new((-1).into(), 2.into()),
            5,
        );
        assert_eq!(r1.sign(), 1);
        assert_eq!(r2.sign(), -1);
        // 7/5 - sqrt(2) > 0 since 49/25 > 2
        let x = Scalar::quadratic(BigRational::new(7.into(), 5.into()), -BigRational::one(), 2);
        assert_eq!(x.sign(), -1); // 7/5 = 1.4 < sqrt(2) = 1.414...
        let y = Scalar::quadratic(BigRational::new(3.into(), 2.into()), -BigRational::one(), 2);
        assert_eq!(y.sign(), 1); // 3/2 > sqrt(2)
    }

    #[test]
    fn to_f64_matches_known_values() {
        assert!((q(1, 3).to_f64() - 0.333_333_333_333).abs() < 1e-9);
        let golden_conj = Scalar::quadratic(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5,
        );
        assert!((golden_conj.to_f64() - 0.618_033_988_75).abs() < 1e-9);
        assert!((q(-2, 3).to_f64() + 0.666_666_666_667).abs() < 1e-9);
    }

    #[test]
    fn display_and_parse_grammar() {
        assert_eq!(q(-2, 3).to_string(), "-2/3");
        assert_eq!(Scalar::int(7).to_string(), "7");
        let x = Scalar::quadratic(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5,
        );
        assert_eq!(x.to_string(), "-1/2+1/2*sqrt(5)");
        assert_eq!("-1/2+1/2*sqrt(5)".parse::<Scalar>().unwrap(), x);
        assert_eq!("1/2-1/3*sqrt(13)".parse::<Scalar>().unwrap().to_string(), "1/2-1/3*sqrt(13)");
        assert_eq!("0.25".parse::<Scalar>().unwrap(), Scalar::float(0.25));
        assert_eq!("-7".parse::<Scalar>().unwrap(), Scalar::int(-7));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn float_mode_comparisons() {
        let m = Mode::default_float();
        assert!(m.eq(&Scalar::float(1.0), &Scalar::float(1.0 + 1e-13)));
        assert!(!m.eq(&Scalar::float(1.0), &Scalar::float(1.0 + 1e-6)));
        // exact values stay exact even under float mode
        assert!(!m.eq(&q(1, 3), &q(33333, 100000)));
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Scalar::ratio(p, q))
    }

    fn arb_quadratic_in(d: u64) -> impl Strategy<Value = Scalar> {
        (-8i64..=8, 1i64..=6, -8i64..=8, 1i64..=6).prop_map(move |(p, q, r, s)| {
            Scalar::quadratic(BigRational::new(p.into(), q.into()), BigRational::new(r.into(), s.into()), d)
        })
    }

    fn arb_quadratic() -> impl Strategy<Value = Scalar> {
        prop::sample::select(vec![2u64, 5, 13]).prop_flat_map(arb_quadratic_in)
    }

    /// A triple drawn from a single quadratic field.
    fn arb_field_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        prop::sample::select(vec![2u64, 5, 13]).prop_flat_map(|d| {
            (arb_quadratic_in(d), arb_quadratic_in(d), arb_quadratic_in(d))
        })
    }

    proptest! {
        #[test]
        fn field_axioms_rational(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn field_axioms_quadratic((a, b, c) in arb_field_triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_round_trip(a in arb_quadratic()) {
            prop_assume!(!a.is_zero());
            let inv = a.try_inverse().unwrap();
            prop_assert_eq!(&a * &inv, Scalar::one());
        }

        #[test]
        fn display_parse_round_trip(a in prop_oneof![arb_rational(), arb_quadratic()]) {
            let s = a.to_string();
            let back: Scalar = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn sign_agrees_with_float(a in prop_oneof![arb_rational(), arb_quadratic()]) {
            let f = a.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(a.sign() as f64, f.signum());
            }
        }
    }
}
