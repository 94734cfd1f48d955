//! Characteristic polynomials `Ψ(x) = det(xI - A)` of skew gain graphs.
//!
//! The general route sums over elementary subgraphs: the coefficient of
//! `x^(n-i)` is
//!
//! ```text
//! a_i = Σ_{L of order i} (-1)^{K(L)} Π_{K_2 ∈ L} g(φ(e)) Π_{C ∈ L} (φ(C) + f(φ(C)))
//! ```
//!
//! with `K(L)` the number of components and `g(x) = x f(x)`. The remaining
//! routes are closed forms for particular families, plus [`charpoly_direct`],
//! which never enumerates subgraphs and serves as the reference.
//!
//! Every route returns the same canonical form: the monic coefficient vector
//! of `det(xI - A)` in ascending degree.

use crate::error::Result;
use crate::graph::{Component, ElementaryWalker, SkewGainGraph};
use crate::matrix::{adjacency_matrix, Matrix};
pub use crate::polynomial::Polynomial;
use crate::scalar::Field;

/// Assembles `Σ_i a_i x^(n-i)` from codegree coefficients `a_0..=a_n`.
fn from_codegree<F: Field>(codegree: Vec<F>) -> Polynomial<F> {
    Polynomial::new(codegree.into_iter().rev().collect())
}

fn sign<F: Field>(value: F, negative: bool) -> F {
    if negative {
        -value
    } else {
        value
    }
}

fn component_product<F: Field>(graph: &SkewGainGraph<F>, components: &[Component]) -> F {
    components.iter().fold(F::one(), |acc, c| {
        acc * match c {
            Component::Edge(e) => graph.edge_weight(*e),
            Component::Cycle(vertices) => graph.cycle_weight(vertices),
        }
    })
}

/// Coefficients by the elementary-subgraph expansion.
pub fn charpoly_subgraphs<F: Field>(graph: &SkewGainGraph<F>) -> Polynomial<F> {
    let n = graph.order();
    let mut codegree = vec![F::zero(); n + 1];
    ElementaryWalker::run(graph, None, true, |components, order| {
        let term = component_product(graph, components);
        codegree[order] = codegree[order].clone() + sign(term, components.len() % 2 == 1);
    });
    from_codegree(codegree)
}

/// `det(xI - A)` by exact evaluation at `n + 1` integer points and
/// interpolation; no subgraph enumeration.
pub fn charpoly_direct<F: Field>(graph: &SkewGainGraph<F>) -> Polynomial<F> {
    adjacency_matrix(graph)
        .charpoly()
        .expect("adjacency matrices are square")
}

/// Matching-sum form for paths: `x^n + Σ_k (-1)^k a_{2k} x^(n-2k)` with
/// `a_{2k} = Σ_{M ∈ M_k} Π g(φ(e))`.
pub fn charpoly_path<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    graph.path_vertices()?;
    Ok(matching_polynomial(graph))
}

/// `x^n + Σ_k (-1)^k a_{2k} x^(n-2k) - (φ(C) + f(φ(C)))` for cycles.
pub fn charpoly_cycle<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    let cycle = graph.cycle_vertices()?;
    let matching = matching_polynomial(graph);
    let correction = Polynomial::constant(graph.cycle_weight(&cycle));
    Ok(matching.sub(&correction))
}

/// `Σ_k (-1)^k (Σ_{M ∈ M_k} Π g) x^(n-2k)`
fn matching_polynomial<F: Field>(graph: &SkewGainGraph<F>) -> Polynomial<F> {
    let n = graph.order();
    let mut codegree = vec![F::zero(); n + 1];
    for k in 0..=n / 2 {
        codegree[2 * k] = sign(graph.matching_weight_sum(k), k % 2 == 1);
    }
    from_codegree(codegree)
}

/// Closed-form `det A` for a path: 0 for odd order, otherwise
/// `(-1)^(n/2) Σ_{M ∈ M_{n/2}} Π g(φ(e))`.
pub fn det_path<F: Field>(graph: &SkewGainGraph<F>) -> Result<F> {
    graph.path_vertices()?;
    let n = graph.order();
    Ok(if n % 2 == 1 {
        F::zero()
    } else {
        sign(graph.matching_weight_sum(n / 2), (n / 2) % 2 == 1)
    })
}

/// Closed-form `det A` for a cycle: `φ(C) + f(φ(C))` for odd order, otherwise
/// `(-1)^(n/2) Σ_{M ∈ M_{n/2}} Π g(φ(e)) - (φ(C) + f(φ(C)))`.
pub fn det_cycle<F: Field>(graph: &SkewGainGraph<F>) -> Result<F> {
    let cycle = graph.cycle_vertices()?;
    let n = graph.order();
    let weight = graph.cycle_weight(&cycle);
    Ok(if n % 2 == 1 {
        weight
    } else {
        sign(graph.matching_weight_sum(n / 2), (n / 2) % 2 == 1) - weight
    })
}

/// Elementary-subgraph expansion restricted to even orders. Bipartite graphs
/// have no odd cycles, so every odd-codegree coefficient is zero.
pub fn charpoly_bipartite<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    graph.bipartition()?;
    let n = graph.order();
    let mut codegree = vec![F::zero(); n + 1];
    ElementaryWalker::run(graph, None, true, |components, order| {
        debug_assert!(
            order % 2 == 0,
            "odd elementary subgraph in a bipartite graph"
        );
        let term = component_product(graph, components);
        codegree[order] = codegree[order].clone() + sign(term, components.len() % 2 == 1);
    });
    Ok(from_codegree(codegree))
}

/// Unicyclic graphs with unique cycle `C_p`:
///
/// ```text
/// a_{2i}   = Σ_{M ∈ M_i(U)} (-1)^i Π g(φ(e))
/// b_{p+2i} = (φ(C) + f(φ(C))) Σ_{M ∈ M_i(U - C)} (-1)^(i+1) Π g(φ(e))
/// ```
///
/// `U - C` deletes the cycle's vertices. When `p` is even both families land
/// on the same codegrees and are added.
pub fn charpoly_unicyclic<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    let cycle = graph.unique_cycle()?;
    let n = graph.order();
    let p = cycle.len();
    let weight = graph.cycle_weight(&cycle);
    let rest = graph.delete_vertices(&cycle);

    let mut codegree = vec![F::zero(); n + 1];
    for i in 0..=n / 2 {
        codegree[2 * i] = sign(graph.matching_weight_sum(i), i % 2 == 1);
    }
    for i in 0..=(n - p) / 2 {
        let b = weight.clone() * sign(rest.matching_weight_sum(i), i % 2 == 0);
        codegree[p + 2 * i] = codegree[p + 2 * i].clone() + b;
    }
    Ok(from_codegree(codegree))
}

/// `x^(n+1) - (Σ_e g(φ(e))) x^(n-1)` for the star `K_{1,n}`.
pub fn charpoly_star<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    graph.star_center()?;
    let order = graph.order();
    let a2 = graph.matching_weight_sum(1);
    Ok(Polynomial::monomial(order).sub(&Polynomial::constant(a2).shift(order - 2)))
}

/// `x^n - a_2 x^(n-2) + a_4 x^(n-4)` for a double star, with `a_2` the sum of
/// edge weights and `a_4` the 2-matching sum.
pub fn charpoly_double_star<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    graph.double_star_centers()?;
    let (a2, a4) = double_star_coefficients(graph);
    let n = graph.order();
    let quartic = Polynomial::new(vec![a4, F::zero(), -a2, F::zero(), F::one()]);
    Ok(quartic.shift(n - 4))
}

pub(crate) fn double_star_coefficients<F: Field>(graph: &SkewGainGraph<F>) -> (F, F) {
    (graph.matching_weight_sum(1), graph.matching_weight_sum(2))
}

/// The gain block `B` of `K_{m,n}` (rows: smaller part) and the vertex order
/// putting the adjacency matrix in the form `[[0, B], [B^#, 0]]`.
pub fn bipartite_gain_block<F: Field>(graph: &SkewGainGraph<F>) -> Result<(Matrix<F>, Vec<usize>)> {
    let (left, right) = graph.complete_bipartite_parts()?;
    let block = Matrix::from_fn(left.len(), right.len(), |i, j| {
        graph.gain(left[i], right[j]).expect("complete bipartite")
    });
    let order = left.into_iter().chain(right).collect();
    Ok((block, order))
}

/// `x^(n-m) det(x^2 I - B B^#)` for `K_{m,n}`, `m ≤ n`.
pub fn charpoly_complete_bipartite<F: Field>(graph: &SkewGainGraph<F>) -> Result<Polynomial<F>> {
    let (block, _) = bipartite_gain_block(graph)?;
    let product = block.mul(&block.sharp(graph.involution())?);
    let m = block.rows();
    let n = block.cols();
    Ok(product.charpoly()?.substitute_square().shift(n - m))
}
