//! Dense matrices over a [`Field`]: adjacency assembly, the `#` operator,
//! determinants and the block-determinant identities.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::graph::SkewGainGraph;
use crate::polynomial::Polynomial;
use crate::scalar::{AntiInvolution, Complex64, Field};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> F) -> Self {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| entry(i, j))
            .collect();
        Self { rows, cols, data }
    }

    /// Builds from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(F::zero(), |acc, k| {
                acc + self[(i, k)].clone() * other[(k, j)].clone()
            })
        })
    }

    pub fn scale(&self, factor: &F) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn to_complex(&self) -> Matrix<Complex64> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Field::to_complex).collect(),
        }
    }

    /// Entrywise `f` on nonzero entries, then transpose: `B^# = (B^f)^T`.
    pub fn sharp(&self, f: AntiInvolution) -> Result<Self> {
        f.check_domain(F::DOMAIN)?;
        Ok(Self::from_fn(self.cols, self.rows, |i, j| {
            let entry = &self[(j, i)];
            if entry.is_zero() {
                F::zero()
            } else {
                f.apply_unchecked(entry)
            }
        }))
    }

    /// Determinant: fraction-free (Bareiss) elimination in exact domains,
    /// partial-pivot Gaussian elimination in the float domain.
    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(if F::DOMAIN.is_exact() {
            bareiss_det(self.clone())
        } else {
            float_det(self.clone())
        })
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot = if F::DOMAIN.is_exact() {
                (k..n).find(|&r| !a[(r, k)].is_zero())
            } else {
                (k..n).filter(|&r| !a[(r, k)].is_zero()).max_by(|&r, &s| {
                    let nr = a[(r, k)].to_complex().norm();
                    let ns = a[(s, k)].to_complex().norm();
                    nr.total_cmp(&ns)
                })
            };
            let Some(p) = pivot else {
                return Ok(None);
            };
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let scale = a[(k, k)].inv().expect("pivot is nonzero");
            for j in 0..n {
                a[(k, j)] = a[(k, j)].clone() * scale.clone();
                inv[(k, j)] = inv[(k, j)].clone() * scale.clone();
            }
            for r in 0..n {
                if r == k || a[(r, k)].is_zero() {
                    continue;
                }
                let factor = a[(r, k)].clone();
                for j in 0..n {
                    a[(r, j)] = a[(r, j)].clone() - factor.clone() * a[(k, j)].clone();
                    inv[(r, j)] = inv[(r, j)].clone() - factor.clone() * inv[(k, j)].clone();
                }
            }
        }
        Ok(Some(inv))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `det(xI - M)` by evaluation at `0, 1, -1, 2, -2, ...` and interpolation.
    pub fn charpoly(&self) -> Result<Polynomial<F>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let points = interpolation_nodes(n + 1)
            .map(|x| {
                let shifted = Self::identity(n).scale(&F::from_i64(x)).sub(self);
                let value = shifted.det().expect("square");
                (F::from_i64(x), value)
            })
            .collect::<Vec<_>>();
        Ok(Polynomial::interpolate(&points))
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::ShapeMismatch(format!(
                "A {}x{}, B {}x{}, C {}x{}, D {}x{}",
                a.rows, a.cols, b.rows, b.cols, c.rows, c.cols, d.rows, d.cols
            )));
        }
        Ok(Self::from_fn(
            a.rows + c.rows,
            a.cols + b.cols,
            |i, j| match (i < a.rows, j < a.cols) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - a.cols)].clone(),
                (false, true) => c[(i - a.rows, j)].clone(),
                (false, false) => d[(i - a.rows, j - a.cols)].clone(),
            },
        ))
    }
}

/// `0, 1, -1, 2, -2, ...`
pub(crate) fn interpolation_nodes(count: usize) -> impl Iterator<Item = i64> {
    (0..count as i64).map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
}

fn bareiss_det<F: Field>(mut m: Matrix<F>) -> F {
    let n = m.rows;
    if n == 0 {
        return F::one();
    }
    let mut negate = false;
    let mut prev = F::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                Some(r) => {
                    m.swap_rows(k, r);
                    negate = !negate;
                }
                None => return F::zero(),
            }
        }
        let pivot = m[(k, k)].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let value =
                    pivot.clone() * m[(i, j)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                m[(i, j)] = value * prev_inv.clone();
            }
            m[(i, k)] = F::zero();
        }
        prev = pivot;
    }
    let det = m[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn float_det<F: Field>(mut m: Matrix<F>) -> F {
    let n = m.rows;
    let mut det = F::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&r, &s| {
                let nr = m[(r, k)].to_complex().norm();
                let ns = m[(s, k)].to_complex().norm();
                nr.total_cmp(&ns)
            })
            .expect("nonempty range");
        if m[(pivot_row, k)].is_zero() {
            return F::zero();
        }
        if pivot_row != k {
            m.swap_rows(k, pivot_row);
            det = -det;
        }
        let pivot = m[(k, k)].clone();
        let pivot_inv = pivot.inv().expect("nonzero pivot");
        for i in k + 1..n {
            let factor = m[(i, k)].clone() * pivot_inv.clone();
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                m[(i, j)] = m[(i, j)].clone() - factor.clone() * m[(k, j)].clone();
            }
        }
        det = det * pivot;
    }
    det
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `a_ij = φ(v_i -> v_j)` when adjacent, else 0.
pub fn adjacency_matrix<F: Field>(graph: &SkewGainGraph<F>) -> Matrix<F> {
    let n = graph.order();
    let mut m = Matrix::zeros(n, n);
    for edge in graph.edges() {
        m[(edge.u, edge.v)] = edge.gain.clone();
        m[(edge.v, edge.u)] = graph.involution().apply_unchecked(&edge.gain);
    }
    m
}

/// Which block-determinant identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockIdentity {
    /// `det M = det(AD - BC)` when `C` and `D` commute.
    Commuting,
    /// `det M = det(A) det(D - C A^-1 B)` for invertible `A`.
    SchurA,
    /// `det M = det(D) det(A - B D^-1 C)` for invertible `D`.
    SchurD,
}

/// Both sides of a block-determinant identity on a concrete instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCheck<F> {
    pub identity: BlockIdentity,
    /// `det` of the assembled block matrix.
    pub direct: F,
    /// The identity's right-hand side.
    pub reduced: F,
}

impl<F: Field> BlockCheck<F> {
    pub fn agrees(&self) -> bool {
        self.direct.approx_eq(&self.reduced)
    }
}

pub fn block_determinant_check<F: Field>(
    a: &Matrix<F>,
    b: &Matrix<F>,
    c: &Matrix<F>,
    d: &Matrix<F>,
    identity: BlockIdentity,
) -> Result<BlockCheck<F>> {
    let m = Matrix::from_blocks(a, b, c, d)?;
    if !a.is_square() || !d.is_square() {
        return Err(Error::ShapeMismatch(
            "diagonal blocks must be square".into(),
        ));
    }
    let direct = m.det()?;
    let reduced = match identity {
        BlockIdentity::Commuting => {
            if a.rows != d.rows {
                return Err(Error::ShapeMismatch(
                    "commuting identity needs equally sized blocks".into(),
                ));
            }
            if !c.mul(d).approx_eq(&d.mul(c)) {
                return Err(Error::NotCommuting);
            }
            a.mul(d).sub(&b.mul(c)).det()?
        }
        BlockIdentity::SchurA => {
            let a_inv = a.inverse()?.ok_or(Error::SingularBlock)?;
            a.det()? * d.sub(&c.mul(&a_inv).mul(b)).det()?
        }
        BlockIdentity::SchurD => {
            let d_inv = d.inverse()?.ok_or(Error::SingularBlock)?;
            d.det()? * a.sub(&b.mul(&d_inv).mul(c)).det()?
        }
    };
    Ok(BlockCheck {
        identity,
        direct,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, Rational};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn gi(text: &str) -> GaussianRational {
        GaussianRational::parse_literal(text).unwrap()
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn adjacency_examples() {
        let k2 = SkewGainGraph::new(2, [(0, 1, q(2))], AntiInvolution::Identity).unwrap();
        assert_eq!(adjacency_matrix(&k2), qm(&[&[0, 2], &[2, 0]]));

        let herm = SkewGainGraph::new(2, [(0, 1, gi("i"))], AntiInvolution::Conjugate).unwrap();
        let a = adjacency_matrix(&herm);
        assert_eq!(
            a,
            Matrix::from_rows(vec![vec![gi("0"), gi("i")], vec![gi("-i"), gi("0")]])
        );
        assert_eq!(a.det().unwrap(), gi("-1"));

        let empty = SkewGainGraph::<Rational>::new(3, [], AntiInvolution::Identity).unwrap();
        assert_eq!(adjacency_matrix(&empty), Matrix::zeros(3, 3));
    }

    #[test]
    fn sharp_examples() {
        let b = Matrix::from_rows(vec![vec![gi("i")]]);
        assert_eq!(
            b.sharp(AntiInvolution::Conjugate).unwrap(),
            Matrix::from_rows(vec![vec![gi("-i")]])
        );
        let r = qm(&[&[1, 2, 0], &[0, 3, 4]]);
        assert_eq!(r.sharp(AntiInvolution::Identity).unwrap(), r.transpose());
        let inv = r.sharp(AntiInvolution::Inverse).unwrap();
        assert_eq!(inv[(1, 0)], Rational::new(1.into(), 2.into()));
        assert_eq!(inv[(2, 0)], q(0));
        assert_eq!(inv.sharp(AntiInvolution::Inverse).unwrap(), r);
        assert!(matches!(
            r.sharp(AntiInvolution::Conjugate),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::<Rational>::identity(3).det().unwrap(), q(1));
        assert_eq!(
            qm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).det().unwrap(),
            q(2)
        );
        assert_eq!(qm(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1));
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).det().unwrap(), q(0));
        assert_eq!(Matrix::<Rational>::zeros(0, 0).det().unwrap(), q(1));
        assert_eq!(
            qm(&[&[1, 2, 3]]).det(),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        );
        let z = Matrix::from_rows(vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        ]);
        assert!(z.det().unwrap().approx_eq(&Complex64::new(-1.0, 0.0)));
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).inverse().unwrap(), None);
    }

    #[test]
    fn charpoly_of_triangle() {
        let m = qm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let p = m.charpoly().unwrap();
        assert_eq!(p, Polynomial::new(vec![q(-2), q(-3), q(0), q(1)]));
    }

    #[test]
    fn block_identities() {
        let zero = qm(&[&[0]]);
        let one = qm(&[&[1]]);
        let check =
            block_determinant_check(&zero, &zero, &zero, &one, BlockIdentity::Commuting).unwrap();
        assert_eq!(check.direct, q(0));
        assert_eq!(check.reduced, q(0));

        // K_{2,2} at x = 3: xI - M has blocks 3I, -J, -J, 3I.
        let three = qm(&[&[3, 0], &[0, 3]]);
        let minus_j = qm(&[&[-1, -1], &[-1, -1]]);
        for identity in [
            BlockIdentity::Commuting,
            BlockIdentity::SchurA,
            BlockIdentity::SchurD,
        ] {
            let check =
                block_determinant_check(&three, &minus_j, &minus_j, &three, identity).unwrap();
            assert_eq!((check.direct, check.reduced), (q(45), q(45)));
        }

        let c = qm(&[&[1, 2], &[3, 4]]);
        let a = qm(&[&[5, -1], &[0, 2]]);
        let b = qm(&[&[1, 1], &[-2, 7]]);
        let check = block_determinant_check(&a, &b, &c, &c, BlockIdentity::Commuting).unwrap();
        assert!(check.agrees());
        let check = block_determinant_check(&a, &b, &c, &c, BlockIdentity::SchurA).unwrap();
        assert!(check.agrees());
        let check = block_determinant_check(&a, &b, &c, &c, BlockIdentity::SchurD).unwrap();
        assert!(check.agrees());

        assert_eq!(
            block_determinant_check(&a, &b, &c, &a, BlockIdentity::Commuting),
            Err(Error::NotCommuting)
        );
        let singular = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            block_determinant_check(&singular, &b, &c, &a, BlockIdentity::SchurA),
            Err(Error::SingularBlock)
        );
        assert!(matches!(
            block_determinant_check(&a, &one, &c, &c, BlockIdentity::Commuting),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn nodes_alternate() {
        assert_eq!(
            interpolation_nodes(5).collect::<Vec<_>>(),
            vec![0, 1, -1, 2, -2]
        );
    }
}
