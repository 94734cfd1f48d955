//! Numeric polynomial roots: Durand-Kerner iteration with Newton polishing.
//!
//! Exact polynomials are first split into square-free factors, so the
//! iteration only ever sees simple roots and multiplicities stay exact.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::Field;

const MAX_ITERATIONS: usize = 5_000;
const STEP_TOLERANCE: f64 = 1e-15;
/// Bound on `|p(z)| / Σ |c_k| |z|^k` accepted as converged.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Relative size under which float-domain coefficients count as zero.
const FLOAT_COEFF_CUTOFF: f64 = 1e-12;

/// All roots of `poly` with multiplicities (exact multiplicities in exact
/// domains). The zero root, if any, comes last.
pub fn roots_with_multiplicity<F: Field>(poly: &Polynomial<F>) -> Result<Vec<(Complex64, usize)>> {
    if poly.is_zero() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let zero_roots;
    if F::DOMAIN.is_exact() {
        zero_roots = poly.trailing_zeros();
        let reduced = poly.strip_zero_roots();
        for (factor, multiplicity) in reduced.square_free_factors() {
            for root in durand_kerner(&factor.to_complex())? {
                out.push((root, multiplicity));
            }
        }
    } else {
        let cleaned = clean_float(&poly.to_complex());
        zero_roots = cleaned.trailing_zeros();
        for root in durand_kerner(&cleaned.strip_zero_roots())? {
            out.push((root, 1));
        }
    }
    if zero_roots > 0 {
        out.push((Complex64::new(0.0, 0.0), zero_roots));
    }
    Ok(out)
}

fn clean_float(poly: &Polynomial<Complex64>) -> Polynomial<Complex64> {
    let scale = poly.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
    Polynomial::new(
        poly.coeffs()
            .iter()
            .map(|c| {
                if c.norm() < FLOAT_COEFF_CUTOFF * scale {
                    Complex64::new(0.0, 0.0)
                } else {
                    *c
                }
            })
            .collect(),
    )
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let magnitude = z.norm();
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * magnitude + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        horner(coeffs, z).norm() / scale
    }
}

/// Simultaneous iteration for every root of `poly` (multiplicity ignored).
pub fn durand_kerner(poly: &Polynomial<Complex64>) -> Result<Vec<Complex64>> {
    let Some(degree) = poly.degree() else {
        return Ok(Vec::new());
    };
    let monic = poly.monic();
    let coeffs = monic.coeffs();
    match degree {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![-coeffs[0]]),
        _ => {}
    }

    // Fujiwara bound on root moduli
    let radius = (0..degree)
        .map(|k| {
            let c = coeffs[k].norm();
            let power = (degree - k) as f64;
            if k == 0 {
                (c / 2.0).powf(1.0 / power)
            } else {
                c.powf(1.0 / power)
            }
        })
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut largest_step: f64 = 0.0;
        for k in 0..degree {
            let z = roots[k];
            let denominator = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .fold(Complex64::new(1.0, 0.0), |acc, (_, r)| acc * (z - r));
            if denominator.norm() == 0.0 {
                // coincident estimates; nudge apart
                roots[k] = z + Complex64::new(1e-8 * radius, 1e-8 * radius);
                largest_step = f64::INFINITY;
                continue;
            }
            let step = horner(coeffs, z) / denominator;
            roots[k] = z - step;
            largest_step = largest_step.max(step.norm() / z.norm().max(1.0));
        }
        if largest_step <= STEP_TOLERANCE {
            break;
        }
    }

    let derivative = monic.derivative();
    for root in &mut roots {
        polish(coeffs, derivative.coeffs(), root);
    }
    if roots
        .iter()
        .all(|&z| z.is_finite() && relative_residual(coeffs, z) <= RESIDUAL_TOLERANCE)
    {
        Ok(roots)
    } else {
        Err(Error::ConvergenceFailure(MAX_ITERATIONS))
    }
}

fn polish(coeffs: &[Complex64], derivative: &[Complex64], root: &mut Complex64) {
    for _ in 0..3 {
        let slope = horner(derivative, *root);
        if slope.norm() == 0.0 {
            return;
        }
        let candidate = *root - horner(coeffs, *root) / slope;
        if candidate.is_finite() && horner(coeffs, candidate).norm() < horner(coeffs, *root).norm()
        {
            *root = candidate;
        } else {
            return;
        }
    }
}
