//! Spectra of skew gain graphs: a numeric backend on the exact characteristic
//! polynomial and closed forms for stars, double stars and `K_{m,n}`.
//!
//! Square roots of field elements leave the exact domains, so spectra are
//! always complex floats. Exact statements about the zero eigenvalue go
//! through [`Polynomial::trailing_zeros`] instead.

use std::fmt;

use num_complex::Complex64;

use crate::charpoly::{bipartite_gain_block, charpoly_direct, double_star_coefficients};
use crate::error::Result;
use crate::graph::SkewGainGraph;
use crate::polynomial::Polynomial;
use crate::roots::roots_with_multiplicity;
use crate::scalar::{Field, FLOAT_TOLERANCE};

/// Eigenvalues closer than this are reported as one entry.
pub const MERGE_TOLERANCE: f64 = 1e-7;

/// Eigenvalues with multiplicities, sorted by real then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(Complex64, usize)>,
}

impl Spectrum {
    /// Merges values within [`MERGE_TOLERANCE`] by closest-pair agglomeration
    /// (multiplicity-weighted means) and sorts the result.
    pub fn from_roots(roots: impl IntoIterator<Item = (Complex64, usize)>) -> Self {
        let mut entries: Vec<(Complex64, usize)> =
            roots.into_iter().filter(|&(_, m)| m > 0).collect();
        loop {
            let mut closest: Option<(usize, usize, f64)> = None;
            for i in 0..entries.len() {
                for j in i + 1..entries.len() {
                    let d = (entries[i].0 - entries[j].0).norm();
                    if d < MERGE_TOLERANCE && closest.is_none_or(|(_, _, best)| d < best) {
                        closest = Some((i, j, d));
                    }
                }
            }
            let Some((i, j, _)) = closest else { break };
            let (zj, mj) = entries.remove(j);
            let (zi, mi) = entries[i];
            let total = mi + mj;
            entries[i] = ((zi * mi as f64 + zj * mj as f64) / total as f64, total);
        }
        for (z, _) in &mut entries {
            *z = snap(*z);
        }
        entries.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
        Self { entries }
    }

    pub fn entries(&self) -> &[(Complex64, usize)] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Multiplicity of the entry within `tolerance` of `value` (0 if none).
    pub fn multiplicity_of(&self, value: Complex64, tolerance: f64) -> usize {
        self.entries
            .iter()
            .filter(|(z, _)| (z - value).norm() < tolerance)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Every eigenvalue repeated by multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.entries
            .iter()
            .flat_map(|&(z, m)| std::iter::repeat_n(z, m))
            .collect()
    }

    /// Same entries up to `tolerance`, matched regardless of order.
    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        if self.entries.len() != other.entries.len() {
            return false;
        }
        let mut taken = vec![false; other.entries.len()];
        self.entries.iter().all(|&(z, m)| {
            let found = other
                .entries
                .iter()
                .enumerate()
                .find(|&(k, &(w, n))| !taken[k] && n == m && (z - w).norm() < tolerance);
            match found {
                Some((k, _)) => {
                    taken[k] = true;
                    true
                }
                None => false,
            }
        })
    }
}

impl fmt::Display for Spectrum {
    /// One `value multiplicity` line per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(z, m) in &self.entries {
            writeln!(f, "{} {m}", format_eigenvalue(z))?;
        }
        Ok(())
    }
}

fn snap(z: Complex64) -> Complex64 {
    let scale = z.norm().max(1.0);
    let clean = |x: f64| {
        if x.abs() < 1e-12 * scale {
            0.0
        } else {
            x
        }
    };
    Complex64::new(clean(z.re), clean(z.im))
}

/// Fixed-point text with 12 significant digits; `0` for zero.
pub fn format_significant(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 24) as usize;
    format!("{x:.decimals$}")
}

/// Real values print as plain numbers; others as `a+bi`.
pub fn format_eigenvalue(z: Complex64) -> String {
    if z.im.abs() <= FLOAT_TOLERANCE {
        return format_significant(z.re);
    }
    let im = format_significant(z.im.abs());
    let sign = if z.im < 0.0 { "-" } else { "+" };
    if z.re.abs() <= FLOAT_TOLERANCE {
        let sign = if z.im < 0.0 { "-" } else { "" };
        format!("{sign}{im}i")
    } else {
        format!("{}{sign}{im}i", format_significant(z.re))
    }
}

/// Roots of the characteristic polynomial computed by [`charpoly_direct`].
pub fn spectrum_numeric<F: Field>(graph: &SkewGainGraph<F>) -> Result<Spectrum> {
    spectrum_of_polynomial(&charpoly_direct(graph))
}

pub fn spectrum_of_polynomial<F: Field>(poly: &Polynomial<F>) -> Result<Spectrum> {
    Ok(Spectrum::from_roots(roots_with_multiplicity(poly)?))
}

/// `K_{1,n}`: `±√(Σ_e g(φ(e)))` once each and 0 with multiplicity `n - 1`.
pub fn star_spectrum<F: Field>(graph: &SkewGainGraph<F>) -> Result<Spectrum> {
    graph.star_center()?;
    let root = graph.matching_weight_sum(1).to_complex().sqrt();
    Ok(Spectrum::from_roots([
        (-root, 1),
        (root, 1),
        (Complex64::new(0.0, 0.0), graph.order() - 2),
    ]))
}

/// Double star of order `n`: `±√((a_2 ± √(a_2² - 4a_4)) / 2)` once each and 0
/// with multiplicity `n - 4`.
pub fn double_star_spectrum<F: Field>(graph: &SkewGainGraph<F>) -> Result<Spectrum> {
    graph.double_star_centers()?;
    let (a2, a4) = double_star_coefficients(graph);
    let [s1, s2] = quadratic_roots(a2.to_complex(), a4.to_complex());
    let (r1, r2) = (s1.sqrt(), s2.sqrt());
    Ok(Spectrum::from_roots([
        (-r1, 1),
        (r1, 1),
        (-r2, 1),
        (r2, 1),
        (Complex64::new(0.0, 0.0), graph.order() - 4),
    ]))
}

/// Roots of `s^2 - sum·s + product`, computed without cancellation.
fn quadratic_roots(sum: Complex64, product: Complex64) -> [Complex64; 2] {
    let disc = (sum * sum - product * 4.0).sqrt();
    let plus = sum + disc;
    let minus = sum - disc;
    let big = if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    } / 2.0;
    if big.norm() == 0.0 {
        [big, big]
    } else {
        [big, product / big]
    }
}

/// Eigenvalues of `B B^#` with multiplicities, for the gain block `B`.
pub fn gain_block_eigenvalues<F: Field>(
    graph: &SkewGainGraph<F>,
) -> Result<Vec<(Complex64, usize)>> {
    let (block, _) = bipartite_gain_block(graph)?;
    let product = block.mul(&block.sharp(graph.involution())?);
    let zero = Complex64::new(0.0, 0.0);
    Ok(match product.rows() {
        1 => vec![(product[(0, 0)].to_complex(), 1)],
        2 => {
            let trace = product[(0, 0)].clone() + product[(1, 1)].clone();
            let det = product.det()?;
            let disc = trace.clone() * trace.clone() - det.clone() * F::from_i64(4);
            if disc.is_zero() {
                vec![(trace.to_complex() / 2.0, 2)]
            } else if det.is_zero() {
                vec![(trace.to_complex(), 1), (zero, 1)]
            } else {
                quadratic_roots(trace.to_complex(), det.to_complex())
                    .into_iter()
                    .map(|mu| (mu, 1))
                    .collect()
            }
        }
        _ => roots_with_multiplicity(&product.charpoly()?)?,
    })
}

/// `K_{m,n}` with `m ≤ n`: `±√μ` for each eigenvalue `μ` of `B B^#`, plus 0
/// with multiplicity `n - m`.
pub fn kmn_spectrum<F: Field>(graph: &SkewGainGraph<F>) -> Result<Spectrum> {
    let (left, right) = graph.complete_bipartite_parts()?;
    let zero = Complex64::new(0.0, 0.0);
    let mut roots = vec![(zero, right.len() - left.len())];
    for (mu, multiplicity) in gain_block_eigenvalues(graph)? {
        if mu == zero {
            roots.push((zero, 2 * multiplicity));
        } else {
            let lambda = mu.sqrt();
            roots.push((lambda, multiplicity));
            roots.push((-lambda, multiplicity));
        }
    }
    Ok(Spectrum::from_roots(roots))
}

/// Structural lower bound on the multiplicity of the eigenvalue 0:
/// `n - m` for `K_{m,n}`, `n - 2t` for a tree with matching number `t`,
/// otherwise 0.
pub fn zero_multiplicity_bound<F: Field>(graph: &SkewGainGraph<F>) -> usize {
    let mut bound = 0;
    if let Ok((left, right)) = graph.complete_bipartite_parts() {
        bound = bound.max(right.len() - left.len());
    }
    if graph.is_tree() {
        bound = bound.max(graph.order().saturating_sub(2 * graph.matching_number()));
    }
    bound
}
