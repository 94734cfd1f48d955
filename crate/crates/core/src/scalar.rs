//! Scalar fields and anti-involutions on their multiplicative groups.
//!
//! Three characteristic-zero fields are supported, each as its own Rust type
//! implementing [`Field`]:
//!
//! * [`Rational`]: exact fractions over arbitrary-precision integers.
//! * [`GaussianRational`]: exact `a + bi` with rational `a`, `b`.
//! * [`Complex64`]: binary64 complex numbers, compared with a tolerance.
//!
//! An [`AntiInvolution`] decides the gain of a reversed edge. Over an abelian
//! group every anti-involution is an involutive automorphism composed with
//! inversion, so the four catalog entries cover the exact domains.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
pub use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type GaussianRational = Complex<BigRational>;

/// Tolerance used when comparing values in the floating-point domain.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    GaussianRational,
    ComplexFloat,
}

impl Domain {
    pub fn is_exact(self) -> bool {
        !matches!(self, Domain::ComplexFloat)
    }

    pub fn has_conjugation(self) -> bool {
        !matches!(self, Domain::Rational)
    }

    /// Name used in graph files.
    pub fn wire_name(self) -> &'static str {
        match self {
            Domain::Rational => "rational",
            Domain::GaussianRational => "gaussian",
            Domain::ComplexFloat => "complex",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Domain::Rational),
            "gaussian" => Ok(Domain::GaussianRational),
            "complex" => Ok(Domain::ComplexFloat),
            other => Err(Error::UnknownDomain(other.to_string())),
        }
    }
}

/// Field arithmetic shared by every scalar domain.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Complex conjugate; the identity on real domains.
    fn conj(&self) -> Self;

    fn to_complex(&self) -> Complex64;

    /// Structural equality in exact domains, toleranced in the float domain.
    fn approx_eq(&self, other: &Self) -> bool;

    fn parse_literal(text: &str) -> Result<Self>;

    /// Literal in the graph-file grammar; `parse_literal` reads it back.
    fn to_literal(&self) -> String;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.clone() * inv)
    }

    fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl Field for Rational {
    const DOMAIN: Domain = Domain::Rational;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_rational(text.trim()).ok_or_else(|| bad_literal(text, Domain::Rational))
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl Field for GaussianRational {
    const DOMAIN: Domain = Domain::GaussianRational;

    fn zero() -> Self {
        Complex::new(Zero::zero(), Zero::zero())
    }

    fn one() -> Self {
        Complex::new(One::one(), Zero::zero())
    }

    fn from_i64(value: i64) -> Self {
        Complex::new(<Rational as Field>::from_i64(value), Zero::zero())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let norm = self.norm_sqr();
        Some(Complex::new(&self.re / &norm, -&self.im / &norm))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse_literal(text: &str) -> Result<Self> {
        let text = text.trim();
        let (re, im) = split_complex_literal(text)
            .ok_or_else(|| bad_literal(text, Domain::GaussianRational))?;
        let re = match re {
            "" => Zero::zero(),
            s => parse_rational(s).ok_or_else(|| bad_literal(text, Domain::GaussianRational))?,
        };
        let im = match im {
            None => Zero::zero(),
            Some("") | Some("+") => One::one(),
            Some("-") => -<Rational as One>::one(),
            Some(s) => parse_rational(s.strip_prefix('+').unwrap_or(s))
                .ok_or_else(|| bad_literal(text, Domain::GaussianRational))?,
        };
        Ok(Complex::new(re, im))
    }

    fn to_literal(&self) -> String {
        complex_literal(
            self.re.to_string(),
            Zero::is_zero(&self.re),
            &self.im,
            Zero::is_zero(&self.im),
            self.im.is_negative(),
            |im| {
                if im.is_one() {
                    String::new()
                } else {
                    im.to_string()
                }
            },
        )
    }
}

impl Field for Complex64 {
    const DOMAIN: Domain = Domain::ComplexFloat;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_i64(value: i64) -> Self {
        Complex64::new(value as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn inv(&self) -> Option<Self> {
        (!Field::is_zero(self)).then(|| Complex::inv(self))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= FLOAT_TOLERANCE * scale
    }

    fn parse_literal(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || bad_literal(text, Domain::ComplexFloat);
        let (re, im) = split_complex_literal(text).ok_or_else(bad)?;
        let re = match re {
            "" => 0.0,
            s => parse_float(s).ok_or_else(bad)?,
        };
        let im = match im {
            None => 0.0,
            Some("") | Some("+") => 1.0,
            Some("-") => -1.0,
            Some(s) => parse_float(s.strip_prefix('+').unwrap_or(s)).ok_or_else(bad)?,
        };
        Ok(Complex64::new(re, im))
    }

    fn to_literal(&self) -> String {
        // normalise -0.0 so literals are stable
        let re = self.re + 0.0;
        let im = self.im + 0.0;
        complex_literal(format!("{re}"), re == 0.0, &im, im == 0.0, im < 0.0, |im| {
            if *im == 1.0 {
                String::new()
            } else {
                format!("{im}")
            }
        })
    }
}

fn complex_literal<T: Clone + Neg<Output = T>>(
    re: String,
    re_zero: bool,
    im: &T,
    im_zero: bool,
    im_negative: bool,
    magnitude: impl Fn(&T) -> String,
) -> String {
    if im_zero {
        return re;
    }
    let abs = if im_negative { -im.clone() } else { im.clone() };
    let sign = if im_negative { "-" } else { "+" };
    if re_zero {
        let sign = if im_negative { "-" } else { "" };
        format!("{sign}{}i", magnitude(&abs))
    } else {
        format!("{re}{sign}{}i", magnitude(&abs))
    }
}

fn bad_literal(text: &str, domain: Domain) -> Error {
    Error::BadLiteral {
        literal: text.to_string(),
        domain,
    }
}

/// Splits `a+bi` style text into the real text and, if present, the signed
/// imaginary coefficient text (without the trailing `i`).
fn split_complex_literal(text: &str) -> Option<(&str, Option<&str>)> {
    if text.is_empty() {
        return None;
    }
    let Some(body) = text.strip_suffix('i') else {
        return Some((text, None));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    match split {
        Some(j) => Some((&body[..j], Some(&body[j..]))),
        None => Some(("", Some(body))),
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

fn parse_rational(text: &str) -> Option<Rational> {
    match text.split_once('/') {
        None => parse_integer(text).map(BigRational::from_integer),
        Some((num, den)) => {
            if den.starts_with(['-', '+']) {
                return None;
            }
            let num = parse_integer(num)?;
            let den = parse_integer(den)?;
            (!Zero::is_zero(&den)).then(|| BigRational::new(num, den))
        }
    }
}

fn parse_float(text: &str) -> Option<f64> {
    let ok = !text.is_empty()
        && text
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'-' | b'+' | b'e' | b'E'));
    if !ok {
        return None;
    }
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn rational_to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

/// The catalog of anti-involutions on `F^×`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AntiInvolution {
    /// Weighted graphs: both directions carry the same gain.
    Identity,
    /// Gain graphs: the reverse edge carries the inverse gain.
    Inverse,
    /// Complex conjugation; yields Hermitian adjacency matrices.
    Conjugate,
    /// Conjugate of the inverse.
    ConjugateInverse,
}

impl AntiInvolution {
    pub const ALL: [AntiInvolution; 4] = [
        AntiInvolution::Identity,
        AntiInvolution::Inverse,
        AntiInvolution::Conjugate,
        AntiInvolution::ConjugateInverse,
    ];

    pub fn wire_name(self) -> &'static str {
        match self {
            AntiInvolution::Identity => "identity",
            AntiInvolution::Inverse => "inverse",
            AntiInvolution::Conjugate => "conjugate",
            AntiInvolution::ConjugateInverse => "conjinverse",
        }
    }

    pub fn admits(self, domain: Domain) -> bool {
        match self {
            AntiInvolution::Identity | AntiInvolution::Inverse => true,
            AntiInvolution::Conjugate | AntiInvolution::ConjugateInverse => {
                domain.has_conjugation()
            }
        }
    }

    /// The catalog entries admissible over `domain`.
    pub fn admissible(domain: Domain) -> Vec<AntiInvolution> {
        Self::ALL.into_iter().filter(|f| f.admits(domain)).collect()
    }

    pub fn check_domain(self, domain: Domain) -> Result<()> {
        if self.admits(domain) {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                involution: self.wire_name(),
                domain,
            })
        }
    }

    pub fn apply<F: Field>(self, x: &F) -> Result<F> {
        self.check_domain(F::DOMAIN)?;
        if x.is_zero() {
            return Err(Error::ZeroGain);
        }
        Ok(self.apply_unchecked(x))
    }

    /// `f(x)` for a nonzero `x` in an admissible domain.
    pub(crate) fn apply_unchecked<F: Field>(self, x: &F) -> F {
        match self {
            AntiInvolution::Identity => x.clone(),
            AntiInvolution::Inverse => x.inv().expect("nonzero gain"),
            AntiInvolution::Conjugate => x.conj(),
            AntiInvolution::ConjugateInverse => x.inv().expect("nonzero gain").conj(),
        }
    }

    /// `g(x) = x f(x)`, the contribution of a single edge.
    pub fn gmap<F: Field>(self, x: &F) -> Result<F> {
        Ok(x.clone() * self.apply(x)?)
    }

    pub(crate) fn gmap_unchecked<F: Field>(self, x: &F) -> F {
        x.clone() * self.apply_unchecked(x)
    }
}

impl fmt::Display for AntiInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

impl FromStr for AntiInvolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.wire_name() == s)
            .ok_or_else(|| Error::UnknownInvolution(s.to_string()))
    }
}

/// Outcome of checking the anti-involution laws on a sample set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawReport {
    /// `f(f(x)) = x`
    pub involution: bool,
    /// `f(xy) = f(x) f(y)`
    pub anti_homomorphism: bool,
    /// `f(1) = 1`
    pub fixes_one: bool,
    /// `f(x^-1) = f(x)^-1`
    pub preserves_inverse: bool,
    /// `g(xy) = g(x) g(y)` for `g(x) = x f(x)`
    pub gmap_multiplicative: bool,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.laws().iter().all(|(_, ok)| *ok)
    }

    pub fn laws(&self) -> [(&'static str, bool); 5] {
        [
            ("involution", self.involution),
            ("anti-homomorphism", self.anti_homomorphism),
            ("fixes identity", self.fixes_one),
            ("preserves inverses", self.preserves_inverse),
            ("g multiplicative", self.gmap_multiplicative),
        ]
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in self.laws() {
            writeln!(f, "{} {name}", if ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Checks the unary laws on every sample and the binary laws on every
/// unordered pair of samples (including a sample with itself).
pub fn validate_anti_involution<F: Field>(f: AntiInvolution, samples: &[F]) -> Result<LawReport> {
    f.check_domain(F::DOMAIN)?;
    if samples.iter().any(Field::is_zero) {
        return Err(Error::ZeroGain);
    }
    let apply = |x: &F| f.apply_unchecked(x);
    let one = F::one();
    let mut report = LawReport {
        involution: true,
        anti_homomorphism: true,
        fixes_one: apply(&one).approx_eq(&one),
        preserves_inverse: true,
        gmap_multiplicative: true,
    };
    for (i, x) in samples.iter().enumerate() {
        let fx = apply(x);
        report.involution &= apply(&fx).approx_eq(x);
        let x_inv = x.inv().expect("nonzero sample");
        report.preserves_inverse &= apply(&x_inv).approx_eq(&fx.inv().expect("f(x) nonzero"));
        for y in &samples[i..] {
            let fy = apply(y);
            let xy = x.clone() * y.clone();
            let fxy = apply(&xy);
            report.anti_homomorphism &= fxy.approx_eq(&(fy.clone() * fx.clone()));
            let gxy = xy * fxy;
            let gx_gy = x.clone() * fx.clone() * y.clone() * fy;
            report.gmap_multiplicative &= gxy.approx_eq(&gx_gy);
        }
    }
    Ok(report)
}
