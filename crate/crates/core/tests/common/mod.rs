//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here calls the library's determinant,
//! interpolation or subgraph walker.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use skewgain::cli::RandomGain;
use skewgain::prelude::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gains<F: RandomGain>(rng: &mut ChaCha8Rng, count: usize) -> Vec<F> {
    (0..count).map(|_| F::random_gain(rng)).collect()
}

/// Random orientation per edge, so canonicalisation is exercised too.
fn build<F: RandomGain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    pairs: Vec<(usize, usize)>,
    f: AntiInvolution,
) -> SkewGainGraph<F> {
    let edges: Vec<(usize, usize, F)> = pairs
        .into_iter()
        .map(|(u, v)| {
            let gain = F::random_gain(rng);
            if rng.gen_bool(0.5) {
                (u, v, gain)
            } else {
                (v, u, gain)
            }
        })
        .collect();
    SkewGainGraph::new(n, edges, f).expect("generated graphs are valid")
}

/// Random labelled tree: each vertex attaches to an earlier one.
pub fn tree_pairs(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    (1..n)
        .map(|k| (perm[rng.gen_range(0..k)], perm[k]))
        .collect()
}

pub fn random_tree<F: RandomGain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    f: AntiInvolution,
) -> SkewGainGraph<F> {
    let pairs = tree_pairs(rng, n);
    build(rng, n, pairs, f)
}

/// Spanning tree plus each remaining pair with probability `density`.
pub fn random_connected<F: RandomGain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    f: AntiInvolution,
) -> SkewGainGraph<F> {
    let mut pairs = tree_pairs(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            let present = pairs
                .iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
            if !present && rng.gen_bool(density) {
                pairs.push((u, v));
            }
        }
    }
    build(rng, n, pairs, f)
}

/// Tree plus one chord, so exactly one cycle.
pub fn random_unicyclic<F: RandomGain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    f: AntiInvolution,
) -> SkewGainGraph<F> {
    assert!(n >= 3);
    let mut pairs = tree_pairs(rng, n);
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let present = pairs
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        if u != v && !present {
            pairs.push((u, v));
            return build(rng, n, pairs, f);
        }
    }
}

/// Random two-colouring, then each cross pair with probability `density`.
/// Not necessarily connected.
pub fn random_bipartite<F: RandomGain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    density: f64,
    f: AntiInvolution,
) -> SkewGainGraph<F> {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(density) {
                pairs.push((u, v));
            }
        }
    }
    build(rng, n, pairs, f)
}

/// Laplace expansion along the first row.
pub fn cofactor_det<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    if n == 0 {
        return F::one();
    }
    let mut total = F::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<F>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].clone() * cofactor_det(&minor);
        total = if j % 2 == 0 {
            total + term
        } else {
            total - term
        };
    }
    total
}

/// Dense adjacency from the edge list and the anti-involution, bypassing
/// the library's matrix builder.
pub fn adjacency_rows<F: Field>(graph: &SkewGainGraph<F>) -> Vec<Vec<F>> {
    let n = graph.order();
    let mut rows = vec![vec![F::zero(); n]; n];
    for e in graph.edges() {
        rows[e.u][e.v] = e.gain.clone();
        rows[e.v][e.u] = graph.involution().apply(&e.gain).unwrap();
    }
    rows
}

/// `det(xI - A)` by Laplace expansion over polynomial entries, coefficients
/// ascending.
pub fn cofactor_charpoly<F: Field>(graph: &SkewGainGraph<F>) -> Vec<F> {
    let a = adjacency_rows(graph);
    let n = a.len();
    let entries: Vec<Vec<Vec<F>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![-a[i][j].clone(), F::one()]
                    } else {
                        vec![-a[i][j].clone()]
                    }
                })
                .collect()
        })
        .collect();
    trim(poly_det(&entries))
}

fn poly_add<F: Field>(a: &[F], b: &[F], subtract: bool) -> Vec<F> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(F::zero);
            let y = b.get(k).cloned().unwrap_or_else(F::zero);
            if subtract {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_det<F: Field>(rows: &[Vec<Vec<F>>]) -> Vec<F> {
    let n = rows.len();
    if n == 0 {
        return vec![F::one()];
    }
    let mut total = vec![F::zero()];
    for j in 0..n {
        if rows[0][j].iter().all(F::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Vec<F>>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = poly_mul(&rows[0][j], &poly_det(&minor));
        total = poly_add(&total, &term, j % 2 == 1);
    }
    total
}

pub fn trim<F: Field>(mut coeffs: Vec<F>) -> Vec<F> {
    while coeffs.len() > 1 && coeffs.last().is_some_and(F::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Codegree coefficients by enumerating every edge subset and keeping those
/// whose components are single edges or cycles.
pub fn brute_force_codegree<F: Field>(graph: &SkewGainGraph<F>) -> Vec<F> {
    let n = graph.order();
    let edges = graph.edges();
    let m = edges.len();
    assert!(m <= 20, "edge subsets explode");
    let f = graph.involution();
    let mut codegree = vec![F::zero(); n + 1];
    for mask in 0u32..(1 << m) {
        let chosen: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 1).collect();
        let mut degree = vec![0usize; n];
        for &k in &chosen {
            degree[edges[k].u] += 1;
            degree[edges[k].v] += 1;
        }
        if degree.iter().any(|&d| d > 2) {
            continue;
        }
        let mut used = vec![false; m];
        let mut term = F::one();
        let mut components = 0;
        let mut covered = 0;
        let mut valid = true;
        for &start in &chosen {
            if used[start] {
                continue;
            }
            components += 1;
            let e = &edges[start];
            if degree[e.u] == 1 && degree[e.v] == 1 {
                used[start] = true;
                covered += 2;
                term = term * e.gain.clone() * f.apply(&e.gain).unwrap();
                continue;
            }
            if degree[e.u] != 2 || degree[e.v] != 2 {
                valid = false;
                break;
            }
            // Walk the cycle u -> v -> ... back to u, multiplying directed gains.
            let mut product = e.gain.clone();
            used[start] = true;
            let (origin, mut here) = (e.u, e.v);
            let mut length = 1;
            while here != origin {
                let next = chosen
                    .iter()
                    .copied()
                    .find(|&k| !used[k] && (edges[k].u == here || edges[k].v == here));
                let Some(k) = next else {
                    valid = false;
                    break;
                };
                used[k] = true;
                let ek = &edges[k];
                let (gain, to) = if ek.u == here {
                    (ek.gain.clone(), ek.v)
                } else {
                    (f.apply(&ek.gain).unwrap(), ek.u)
                };
                product = product * gain;
                here = to;
                length += 1;
            }
            if !valid {
                break;
            }
            covered += length;
            term = term * (product.clone() + f.apply(&product).unwrap());
        }
        if !valid {
            continue;
        }
        if components % 2 == 1 {
            term = -term;
        }
        codegree[covered] = codegree[covered].clone() + term;
    }
    codegree
}

/// Descending codegree list to ascending coefficients.
pub fn codegree_to_ascending<F: Field>(codegree: Vec<F>) -> Vec<F> {
    trim(codegree.into_iter().rev().collect())
}

/// Maximum matching size by trying every edge subset.
pub fn brute_matching_number<F: Field>(graph: &SkewGainGraph<F>) -> usize {
    let edges = graph.edges();
    let m = edges.len();
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let mut seen = vec![false; graph.order()];
        let mut ok = true;
        for k in (0..m).filter(|&k| mask >> k & 1 == 1) {
            let e = &edges[k];
            if seen[e.u] || seen[e.v] {
                ok = false;
                break;
            }
            seen[e.u] = true;
            seen[e.v] = true;
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

pub fn all_domains_exact() -> [(Domain, Vec<AntiInvolution>); 2] {
    [
        (
            Domain::Rational,
            AntiInvolution::admissible(Domain::Rational),
        ),
        (
            Domain::GaussianRational,
            AntiInvolution::admissible(Domain::GaussianRational),
        ),
    ]
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
