//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::scalar::{Complex64, Field};

/// Coefficients in ascending degree order, with no trailing (high-degree)
/// zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(value: F) -> Self {
        Self::new(vec![value])
    }

    /// `x^degree`
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = F::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == F::one())
    }

    /// Multiplicity of 0 as a root: the number of vanishing low coefficients.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k` for `k = trailing_zeros()`.
    pub fn strip_zero_roots(&self) -> Self {
        Self::new(self.coeffs[self.trailing_zeros()..].to_vec())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_complex())
    }

    pub fn to_complex(&self) -> Polynomial<Complex64> {
        Polynomial::new(self.coeffs.iter().map(Field::to_complex).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, factor: &F) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    /// `p(x^2)`
    pub fn substitute_square(&self) -> Self {
        let mut out = vec![F::zero(); 2 * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[2 * k] = c.clone();
        }
        Self::new(out)
    }

    /// `x^k p(x)`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead_inv = divisor
            .leading()
            .expect("division by the zero polynomial")
            .inv()
            .expect("leading coefficient is nonzero");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let factor = rem[k + d].clone() * lead_inv.clone();
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - factor.clone() * c.clone();
            }
            // exact cancellation of the leading term
            rem[k + d] = F::zero();
            quot[k] = factor;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor. Meaningful in exact domains only.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free factorisation `p = c · Π q_k^k` by Yun's algorithm, returning
    /// the nonconstant monic `q_k` with their multiplicities `k`.
    ///
    /// Exact domains only; floating-point cancellation defeats the gcds.
    pub fn square_free_factors(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let derivative = self.derivative();
        let common = self.gcd(&derivative);
        let mut w = self.div_rem(&common).0;
        let mut y = derivative.div_rem(&common).0;
        let mut z = y.sub(&w.derivative());
        let mut multiplicity = 1;
        while w.degree().unwrap_or(0) > 0 {
            let factor = w.gcd(&z);
            w = w.div_rem(&factor).0;
            y = z.div_rem(&factor).0;
            z = y.sub(&w.derivative());
            if factor.degree().unwrap_or(0) > 0 {
                out.push((factor, multiplicity));
            }
            multiplicity += 1;
        }
        out
    }

    /// Lagrange interpolation through `(x_k, y_k)` with distinct `x_k`, via
    /// Newton divided differences.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        let n = points.len();
        let mut table: Vec<F> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for k in (level..n).rev() {
                let dx = points[k].0.clone() - points[k - level].0.clone();
                table[k] = (table[k].clone() - table[k - 1].clone())
                    .div(&dx)
                    .expect("interpolation nodes must be distinct");
            }
        }
        // Horner on the Newton form
        let mut poly = Self::zero();
        for k in (0..n).rev() {
            let factor = Self::new(vec![-points[k].0.clone(), F::one()]);
            poly = poly.mul(&factor).add(&Self::constant(table[k].clone()));
        }
        poly
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|k| self.coeff(k).approx_eq(&other.coeff(k)))
    }

    /// Coefficients from the leading term down, as graph-file literals.
    pub fn to_descending_literals(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().rev().map(Field::to_literal).collect()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Space-separated coefficients in descending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_descending_literals().join(" "))
    }
}
