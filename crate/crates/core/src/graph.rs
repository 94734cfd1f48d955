//! Skew gain graphs, family generators, and the combinatorial enumerations
//! (matchings and elementary subgraphs) behind the coefficient formulas.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::{AntiInvolution, Domain, Field};

/// An undirected edge stored in its canonical orientation `u < v`.
///
/// `gain` is the gain of the oriented edge `u -> v`; the gain of `v -> u` is
/// always derived through the graph's anti-involution.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge<F> {
    pub u: usize,
    pub v: usize,
    pub gain: F,
}

impl<F> Edge<F> {
    pub fn touches(&self, vertex: usize) -> bool {
        self.u == vertex || self.v == vertex
    }

    pub fn other(&self, vertex: usize) -> usize {
        if self.u == vertex {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple graph with one stored gain per edge and an anti-involution
/// determining reverse gains. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewGainGraph<F> {
    order: usize,
    edges: Vec<Edge<F>>,
    involution: AntiInvolution,
    // (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl<F: Field> SkewGainGraph<F> {
    /// Builds a graph from oriented edge records `(u, v, gain of u -> v)`.
    ///
    /// Records given as `u > v` are flipped, applying the anti-involution to
    /// the gain so that the stored value is the gain of `v -> u`.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize, F)>,
        involution: AntiInvolution,
    ) -> Result<Self> {
        involution.check_domain(F::DOMAIN)?;
        let mut adjacency = vec![Vec::new(); order];
        let mut stored = Vec::new();
        let mut seen = HashSet::new();
        for (u, v, gain) in edges {
            for vertex in [u, v] {
                if vertex >= order {
                    return Err(Error::VertexOutOfRange { vertex, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if gain.is_zero() {
                return Err(Error::ZeroGain);
            }
            let edge = if u < v {
                Edge { u, v, gain }
            } else {
                Edge {
                    u: v,
                    v: u,
                    gain: involution.apply_unchecked(&gain),
                }
            };
            if !seen.insert((edge.u, edge.v)) {
                return Err(Error::DuplicateEdge(edge.u, edge.v));
            }
            let index = stored.len();
            adjacency[edge.u].push((edge.v, index));
            adjacency[edge.v].push((edge.u, index));
            stored.push(edge);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            order,
            edges: stored,
            involution,
            adjacency,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<F>] {
        &self.edges
    }

    pub fn involution(&self) -> AntiInvolution {
        self.involution
    }

    pub fn domain(&self) -> Domain {
        F::DOMAIN
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[vertex].iter().map(|&(w, _)| w)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|pos| list[pos].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Gain of the oriented edge `u -> v`, if the vertices are adjacent.
    pub fn gain(&self, u: usize, v: usize) -> Option<F> {
        let edge = &self.edges[self.edge_index(u, v)?];
        Some(if edge.u == u {
            edge.gain.clone()
        } else {
            self.involution.apply_unchecked(&edge.gain)
        })
    }

    /// `g(φ(e))` for the edge with the given index.
    pub fn edge_weight(&self, index: usize) -> F {
        self.involution.gmap_unchecked(&self.edges[index].gain)
    }

    /// Product of oriented gains along a closed walk `c[0] -> c[1] -> ... -> c[0]`.
    ///
    /// Panics if consecutive vertices are not adjacent.
    pub fn cycle_gain(&self, cycle: &[usize]) -> F {
        let len = cycle.len();
        (0..len).fold(F::one(), |acc, k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % len]);
            acc * self.gain(a, b).expect("cycle vertices must be adjacent")
        })
    }

    /// `φ(C) + f(φ(C))`, the contribution of a cycle component.
    pub fn cycle_weight(&self, cycle: &[usize]) -> F {
        let gain = self.cycle_gain(cycle);
        let image = self.involution.apply_unchecked(&gain);
        gain + image
    }

    /// Graph on the vertices not in `removed`, relabelled in increasing order.
    pub fn delete_vertices(&self, removed: &[usize]) -> SkewGainGraph<F> {
        let mut relabel = vec![None; self.order];
        let mut next = 0;
        for (vertex, slot) in relabel.iter_mut().enumerate() {
            if !removed.contains(&vertex) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some((relabel[e.u]?, relabel[e.v]?, e.gain.clone())));
        SkewGainGraph::new(next, edges, self.involution).expect("subgraph of a valid graph")
    }
}

/// Family generators with deterministic vertex numbering.
impl<F: Field> SkewGainGraph<F> {
    /// Path `0 - 1 - ... - (n-1)`; `gains[k]` is the gain of `k -> k+1`.
    pub fn path(n: usize, gains: Vec<F>, f: AntiInvolution) -> Result<Self> {
        if n == 0 {
            return Err(Error::FamilyTooSmall(
                "a path needs at least one vertex".into(),
            ));
        }
        check_gain_count(n - 1, &gains)?;
        Self::new(
            n,
            gains.into_iter().enumerate().map(|(k, g)| (k, k + 1, g)),
            f,
        )
    }

    /// Cycle `0 -> 1 -> ... -> (n-1) -> 0`; `gains[k]` is the gain of the
    /// k-th step, so the cycle gain is the product of `gains`.
    pub fn cycle(n: usize, gains: Vec<F>, f: AntiInvolution) -> Result<Self> {
        if n < 3 {
            return Err(Error::FamilyTooSmall(format!("cycle of length {n}")));
        }
        check_gain_count(n, &gains)?;
        Self::new(
            n,
            gains
                .into_iter()
                .enumerate()
                .map(|(k, g)| (k, (k + 1) % n, g)),
            f,
        )
    }

    /// Star `K_{1,leaves}` with center 0; `gains[k]` is the gain of `0 -> k+1`.
    pub fn star(leaves: usize, gains: Vec<F>, f: AntiInvolution) -> Result<Self> {
        if leaves == 0 {
            return Err(Error::FamilyTooSmall(
                "a star needs at least one leaf".into(),
            ));
        }
        check_gain_count(leaves, &gains)?;
        Self::new(
            leaves + 1,
            gains.into_iter().enumerate().map(|(k, g)| (0, k + 1, g)),
            f,
        )
    }

    /// Double star: adjacent centers 0 and 1 carrying `p` and `q` leaves.
    ///
    /// Gains are the center edge `0 -> 1` first, then `0 -> 2..2+p`, then
    /// `1 -> 2+p..2+p+q`.
    pub fn double_star(p: usize, q: usize, gains: Vec<F>, f: AntiInvolution) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::FamilyTooSmall(format!(
                "double star with {p} and {q} leaves"
            )));
        }
        check_gain_count(p + q + 1, &gains)?;
        let ends = std::iter::once((0, 1))
            .chain((0..p).map(|k| (0, 2 + k)))
            .chain((0..q).map(|k| (1, 2 + p + k)));
        Self::new(p + q + 2, ends.zip(gains).map(|((u, v), g)| (u, v, g)), f)
    }

    /// Complete bipartite `K_{m,n}` with left part `0..m`; gains are row-major,
    /// `gains[i*n + j]` being the gain of `i -> m+j`.
    pub fn complete_bipartite(
        m: usize,
        n: usize,
        gains: Vec<F>,
        f: AntiInvolution,
    ) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::FamilyTooSmall(format!("K_{{{m},{n}}}")));
        }
        check_gain_count(m * n, &gains)?;
        let ends = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j)));
        Self::new(m + n, ends.zip(gains).map(|((u, v), g)| (u, v, g)), f)
    }
}

fn check_gain_count<F>(expected: usize, gains: &[F]) -> Result<()> {
    if gains.len() == expected {
        Ok(())
    } else {
        Err(Error::BadGainCount {
            expected,
            got: gains.len(),
        })
    }
}

/// Structural recognition of the underlying simple graph.
impl<F: Field> SkewGainGraph<F> {
    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order > 0 && self.size() + 1 == self.order && self.is_connected()
    }

    /// A proper 2-colouring (`false`/`true` per vertex), colouring the smallest
    /// vertex of each component `false`.
    pub fn bipartition(&self) -> Result<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.order];
        for start in 0..self.order {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].expect("coloured on push");
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return Err(Error::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(colour
            .into_iter()
            .map(|c| c.expect("all coloured"))
            .collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Vertex sequence of the path, starting at the smaller endpoint.
    pub fn path_vertices(&self) -> Result<Vec<usize>> {
        if !self.is_tree() || (0..self.order).any(|v| self.degree(v) > 2) {
            return Err(Error::NotAPath);
        }
        let start = (0..self.order)
            .find(|&v| self.degree(v) <= 1)
            .ok_or(Error::NotAPath)?;
        Ok(self.walk_from(start, None))
    }

    /// Vertex sequence of the cycle in canonical orientation: vertex 0 first,
    /// then its smaller neighbor.
    pub fn cycle_vertices(&self) -> Result<Vec<usize>> {
        if self.order < 3
            || self.size() != self.order
            || (0..self.order).any(|v| self.degree(v) != 2)
            || !self.is_connected()
        {
            return Err(Error::NotACycle);
        }
        let second = self.adjacency[0][0].0;
        Ok(self.walk_from(0, Some(second)))
    }

    // follows a path or cycle of max degree two
    fn walk_from(&self, start: usize, second: Option<usize>) -> Vec<usize> {
        let mut seq = vec![start];
        let mut prev = start;
        let mut current = match second.or_else(|| self.neighbors(start).next()) {
            Some(v) => v,
            None => return seq,
        };
        while current != start {
            seq.push(current);
            match self.neighbors(current).find(|&w| w != prev) {
                Some(next) => {
                    prev = current;
                    current = next;
                }
                None => break,
            }
        }
        seq
    }

    /// Center of a star `K_{1,n}` (the smallest candidate for `K_2`).
    pub fn star_center(&self) -> Result<usize> {
        if self.order < 2 || !self.is_tree() {
            return Err(Error::NotAStar);
        }
        (0..self.order)
            .find(|&v| self.degree(v) == self.order - 1)
            .ok_or(Error::NotAStar)
    }

    /// The two adjacent centers of a double star, smaller first.
    pub fn double_star_centers(&self) -> Result<(usize, usize)> {
        if self.order < 4 || !self.is_tree() {
            return Err(Error::NotADoubleStar);
        }
        let inner: Vec<usize> = (0..self.order).filter(|&v| self.degree(v) >= 2).collect();
        match inner[..] {
            [a, b] if self.is_adjacent(a, b) => Ok((a, b)),
            _ => Err(Error::NotADoubleStar),
        }
    }

    /// The two parts of a complete bipartite graph, smaller part first
    /// (ties: the part containing vertex 0 first). Vertices ascend in each part.
    pub fn complete_bipartite_parts(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.order < 2 || !self.is_connected() {
            return Err(Error::NotCompleteBipartite);
        }
        let colour = self
            .bipartition()
            .map_err(|_| Error::NotCompleteBipartite)?;
        let (left, right): (Vec<usize>, Vec<usize>) = (0..self.order).partition(|&v| !colour[v]);
        if left.len() * right.len() != self.size() {
            return Err(Error::NotCompleteBipartite);
        }
        if right.len() < left.len() {
            Ok((right, left))
        } else {
            Ok((left, right))
        }
    }

    /// The unique cycle of a connected unicyclic graph, in canonical orientation
    /// (smallest vertex first, then its smaller cycle neighbor).
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if self.order < 3 || self.size() != self.order || !self.is_connected() {
            return Err(Error::NotUnicyclic);
        }
        // peel leaves until only the cycle remains
        let mut degree: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.order];
        let mut leaves: Vec<usize> = (0..self.order).filter(|&v| degree[v] == 1).collect();
        while let Some(leaf) = leaves.pop() {
            alive[leaf] = false;
            for w in self.neighbors(leaf) {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push(w);
                    }
                }
            }
        }
        let start = (0..self.order)
            .find(|&v| alive[v])
            .ok_or(Error::NotUnicyclic)?;
        let cycle_neighbors = |v: usize| self.neighbors(v).filter(|&w| alive[w]);
        let mut seq = vec![start];
        let mut prev = start;
        let mut current = cycle_neighbors(start).min().ok_or(Error::NotUnicyclic)?;
        while current != start {
            seq.push(current);
            let next = cycle_neighbors(current)
                .find(|&w| w != prev)
                .ok_or(Error::NotUnicyclic)?;
            prev = current;
            current = next;
        }
        Ok(seq)
    }
}

/// A set of pairwise non-adjacent edges, as ascending edge indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(Vec<usize>);

impl Matching {
    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A vertex-disjoint union of single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    /// Edge indices of the `K_2` components.
    pub k2_edges: Vec<usize>,
    /// Cycles in canonical orientation: smallest vertex first, then the
    /// smaller of its two cycle neighbors.
    pub cycles: Vec<Vec<usize>>,
}

impl ElementarySubgraph {
    pub fn order(&self) -> usize {
        2 * self.k2_edges.len() + self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    pub fn component_count(&self) -> usize {
        self.k2_edges.len() + self.cycles.len()
    }

    pub fn is_matching(&self) -> bool {
        self.cycles.is_empty()
    }

    pub(crate) fn from_components(components: &[Component]) -> Self {
        let mut k2_edges = Vec::new();
        let mut cycles = Vec::new();
        for component in components {
            match component {
                Component::Edge(e) => k2_edges.push(*e),
                Component::Cycle(c) => cycles.push(c.clone()),
            }
        }
        k2_edges.sort_unstable();
        Self { k2_edges, cycles }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Component {
    Edge(usize),
    Cycle(Vec<usize>),
}

/// Depth-first enumeration of elementary subgraphs.
///
/// The smallest undecided vertex is either left out, paired with a larger
/// free neighbor, or made the minimum of a cycle through larger free vertices.
/// Each subgraph is reached by exactly one decision sequence.
pub(crate) struct ElementaryWalker<'g, F, V> {
    graph: &'g SkewGainGraph<F>,
    target: Option<usize>,
    cycles: bool,
    used: Vec<bool>,
    stack: Vec<Component>,
    order: usize,
    visit: V,
}

impl<'g, F, V> ElementaryWalker<'g, F, V>
where
    F: Field,
    V: FnMut(&[Component], usize),
{
    /// `target` restricts to one order; `cycles = false` yields matchings only.
    pub(crate) fn run(graph: &'g SkewGainGraph<F>, target: Option<usize>, cycles: bool, visit: V) {
        let mut walker = Self {
            graph,
            target,
            cycles,
            used: vec![false; graph.order()],
            stack: Vec::new(),
            order: 0,
            visit,
        };
        walker.step(0);
    }

    fn step(&mut self, start: usize) {
        let n = self.graph.order();
        if let Some(target) = self.target {
            let free = (start..n).filter(|&v| !self.used[v]).count();
            if self.order > target || self.order + free < target {
                return;
            }
        }
        let Some(v) = (start..n).find(|&v| !self.used[v]) else {
            if self.target.is_none_or(|t| t == self.order) {
                (self.visit)(&self.stack, self.order);
            }
            return;
        };

        self.step(v + 1);

        self.used[v] = true;
        let graph = self.graph;
        for &(w, e) in &graph.adjacency[v] {
            if w > v && !self.used[w] {
                self.used[w] = true;
                self.stack.push(Component::Edge(e));
                self.order += 2;
                self.step(v + 1);
                self.order -= 2;
                self.stack.pop();
                self.used[w] = false;
            }
        }
        if self.cycles {
            let mut path = vec![v];
            self.grow_cycle(&mut path);
        }
        self.used[v] = false;
    }

    fn grow_cycle(&mut self, path: &mut Vec<usize>) {
        let root = path[0];
        let last = *path.last().expect("path starts at root");
        let graph = self.graph;
        for &(w, _) in &graph.adjacency[last] {
            if w == root && path.len() >= 3 && path[1] < last {
                let len = path.len();
                self.stack.push(Component::Cycle(path.clone()));
                self.order += len;
                self.step(root + 1);
                self.order -= len;
                self.stack.pop();
            } else if w > root && !self.used[w] {
                if let Some(target) = self.target {
                    if self.order + path.len() + 1 > target {
                        continue;
                    }
                }
                self.used[w] = true;
                path.push(w);
                self.grow_cycle(path);
                path.pop();
                self.used[w] = false;
            }
        }
    }
}

impl<F: Field> SkewGainGraph<F> {
    /// All matchings with exactly `k` edges, in lexicographic order.
    pub fn matchings(&self, k: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut used = vec![false; self.order];
        let mut current = Vec::with_capacity(k);
        self.collect_matchings(0, k, &mut used, &mut current, &mut out);
        out
    }

    fn collect_matchings(
        &self,
        first: usize,
        k: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Matching>,
    ) {
        if current.len() == k {
            out.push(Matching(current.clone()));
            return;
        }
        let needed = k - current.len();
        for index in first..self.edges.len() {
            if self.edges.len() - index < needed {
                break;
            }
            let Edge { u, v, .. } = self.edges[index];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            current.push(index);
            self.collect_matchings(index + 1, k, used, current, out);
            current.pop();
            used[u] = false;
            used[v] = false;
        }
    }

    /// `Σ_{M ∈ M_k} Π_{e ∈ M} g(φ(e))`
    pub fn matching_weight_sum(&self, k: usize) -> F {
        self.matchings(k).iter().fold(F::zero(), |acc, m| {
            acc + m
                .edges()
                .iter()
                .fold(F::one(), |p, &e| p * self.edge_weight(e))
        })
    }

    /// Size of a maximum matching, by exhaustive search.
    pub fn matching_number(&self) -> usize {
        fn best<F: Field>(g: &SkewGainGraph<F>, start: usize, used: &mut [bool]) -> usize {
            let Some(v) = (start..g.order).find(|&v| !used[v]) else {
                return 0;
            };
            let mut result = best(g, v + 1, used);
            used[v] = true;
            for &(w, _) in &g.adjacency[v] {
                if w > v && !used[w] {
                    used[w] = true;
                    result = result.max(1 + best(g, v + 1, used));
                    used[w] = false;
                }
            }
            used[v] = false;
            result
        }
        best(self, 0, &mut vec![false; self.order])
    }

    /// All elementary subgraphs of order exactly `order`, in the walker's
    /// deterministic order.
    pub fn elementary_subgraphs(&self, order: usize) -> Vec<ElementarySubgraph> {
        let mut out = Vec::new();
        if order > self.order {
            return out;
        }
        ElementaryWalker::run(self, Some(order), true, |components, _| {
            out.push(ElementarySubgraph::from_components(components));
        });
        out
    }
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

    fn ones(count: usize) -> Vec<Rational> {
        vec![q(1); count]
    }

    #[test]
    fn build_canonicalizes_orientation() {
        let g = SkewGainGraph::new(2, [(1, 0, q(2))], AntiInvolution::Identity).unwrap();
        assert_eq!(
            g.edges()[0],
            Edge {
                u: 0,
                v: 1,
                gain: q(2)
            }
        );

        let g = SkewGainGraph::new(2, [(1, 0, gi("i"))], AntiInvolution::Conjugate).unwrap();
        assert_eq!(g.edges()[0].gain, gi("-i"));
        assert_eq!(g.gain(1, 0).unwrap(), gi("i"));

        let g = SkewGainGraph::new(2, [(1, 0, q(4))], AntiInvolution::Inverse).unwrap();
        assert_eq!(g.gain(0, 1).unwrap(), Rational::new(1.into(), 4.into()));
        assert_eq!(g.gain(1, 0).unwrap(), q(4));
    }

    #[test]
    fn build_rejects_invalid_input() {
        let f = AntiInvolution::Identity;
        assert_eq!(
            SkewGainGraph::new(3, [(0, 1, q(1)), (0, 1, q(2))], f).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            SkewGainGraph::new(3, [(0, 1, q(1)), (1, 0, q(2))], f).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            SkewGainGraph::new(2, [(1, 1, q(1))], f).unwrap_err(),
            Error::LoopEdge(1)
        );
        assert_eq!(
            SkewGainGraph::new(2, [(0, 1, q(0))], f).unwrap_err(),
            Error::ZeroGain
        );
        assert_eq!(
            SkewGainGraph::new(2, [(0, 2, q(1))], f).unwrap_err(),
            Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            }
        );
        assert!(matches!(
            SkewGainGraph::<Rational>::new(2, [], AntiInvolution::Conjugate),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn family_generators() {
        let f = AntiInvolution::Identity;
        let triangle = SkewGainGraph::cycle(3, ones(3), f).unwrap();
        assert_eq!(triangle.size(), 3);
        assert_eq!(triangle.cycle_vertices().unwrap(), vec![0, 1, 2]);

        let star = SkewGainGraph::star(
            3,
            vec![gi("1"), gi("i"), gi("1+i")],
            AntiInvolution::Conjugate,
        )
        .unwrap();
        assert_eq!(star.star_center().unwrap(), 0);
        assert_eq!(star.order(), 4);

        assert!(matches!(
            SkewGainGraph::cycle(2, ones(2), f),
            Err(Error::FamilyTooSmall(_))
        ));
        assert!(matches!(
            SkewGainGraph::double_star(0, 2, ones(3), f),
            Err(Error::FamilyTooSmall(_))
        ));
        assert_eq!(
            SkewGainGraph::path(4, ones(2), f).unwrap_err(),
            Error::BadGainCount {
                expected: 3,
                got: 2
            }
        );

        let ds = SkewGainGraph::double_star(2, 1, ones(4), f).unwrap();
        assert_eq!(ds.double_star_centers().unwrap(), (0, 1));
        assert_eq!(ds.edges()[0].u, 0);
        assert_eq!(ds.edges()[0].v, 1);

        let k = SkewGainGraph::complete_bipartite(2, 3, ones(6), f).unwrap();
        assert_eq!(
            k.complete_bipartite_parts().unwrap(),
            (vec![0, 1], vec![2, 3, 4])
        );
    }

    #[test]
    fn cycle_generator_gain_is_product() {
        let g = SkewGainGraph::cycle(
            3,
            vec![gi("i"), gi("2"), gi("1+i")],
            AntiInvolution::Conjugate,
        )
        .unwrap();
        // 0 -> 1 -> 2 -> 0
        assert_eq!(g.cycle_gain(&[0, 1, 2]), gi("i") * gi("2") * gi("1+i"));
        // reverse traversal gives f(φ(C))
        assert_eq!(
            g.cycle_gain(&[0, 2, 1]),
            (gi("i") * gi("2") * gi("1+i")).conj()
        );
    }

    #[test]
    fn matchings_small_cases() {
        let f = AntiInvolution::Identity;
        let p4 = SkewGainGraph::path(4, ones(3), f).unwrap();
        assert_eq!(p4.matchings(0), vec![Matching(vec![])]);
        assert_eq!(p4.matchings(1).len(), 3);
        assert_eq!(p4.matchings(2), vec![Matching(vec![0, 2])]);
        assert!(p4.matchings(3).is_empty());

        let c4 = SkewGainGraph::cycle(4, ones(4), f).unwrap();
        assert_eq!(
            c4.matchings(2),
            vec![Matching(vec![0, 2]), Matching(vec![1, 3])]
        );
    }

    #[test]
    fn matching_numbers() {
        let f = AntiInvolution::Identity;
        assert_eq!(
            SkewGainGraph::path(5, ones(4), f)
                .unwrap()
                .matching_number(),
            2
        );
        assert_eq!(
            SkewGainGraph::star(4, ones(4), f)
                .unwrap()
                .matching_number(),
            1
        );
        assert_eq!(
            SkewGainGraph::cycle(6, ones(6), f)
                .unwrap()
                .matching_number(),
            3
        );
        assert_eq!(
            SkewGainGraph::<Rational>::new(3, [], f)
                .unwrap()
                .matching_number(),
            0
        );
    }

    #[test]
    fn elementary_subgraphs_small_cases() {
        let f = AntiInvolution::Identity;
        let c4 = SkewGainGraph::cycle(4, ones(4), f).unwrap();
        let top = c4.elementary_subgraphs(4);
        assert_eq!(top.len(), 3);
        assert_eq!(top.iter().filter(|l| l.is_matching()).count(), 2);
        let cycle = top.iter().find(|l| !l.is_matching()).unwrap();
        assert_eq!(cycle.cycles, vec![vec![0, 1, 2, 3]]);
        assert_eq!(cycle.component_count(), 1);

        let triangle = SkewGainGraph::cycle(3, ones(3), f).unwrap();
        let three = triangle.elementary_subgraphs(3);
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].cycles, vec![vec![0, 1, 2]]);
        assert!(triangle.elementary_subgraphs(1).is_empty());
        assert_eq!(triangle.elementary_subgraphs(0).len(), 1);
        assert!(triangle.elementary_subgraphs(7).is_empty());
    }

    #[test]
    fn cycle_canonical_form_uses_smaller_neighbor() {
        // cycle 0-3-1-2-0 given in a scrambled order
        let g = SkewGainGraph::new(
            4,
            [(0, 3, q(1)), (3, 1, q(1)), (1, 2, q(1)), (2, 0, q(1))],
            AntiInvolution::Identity,
        )
        .unwrap();
        let four = g.elementary_subgraphs(4);
        let cycle = four.iter().find(|l| !l.is_matching()).unwrap();
        assert_eq!(cycle.cycles, vec![vec![0, 2, 1, 3]]);
        assert_eq!(g.cycle_vertices().unwrap(), vec![0, 2, 1, 3]);
        assert_eq!(g.unique_cycle().unwrap(), vec![0, 2, 1, 3]);
    }

    #[test]
    fn recognizers() {
        let f = AntiInvolution::Identity;
        let paw = SkewGainGraph::new(
            4,
            [(0, 1, q(1)), (1, 2, q(1)), (2, 0, q(1)), (0, 3, q(1))],
            f,
        )
        .unwrap();
        assert_eq!(paw.unique_cycle().unwrap(), vec![0, 1, 2]);
        assert_eq!(paw.path_vertices(), Err(Error::NotAPath));
        assert_eq!(paw.cycle_vertices(), Err(Error::NotACycle));
        assert_eq!(paw.bipartition(), Err(Error::NotBipartite));

        let p = SkewGainGraph::new(3, [(2, 0, q(1)), (0, 1, q(1))], f).unwrap();
        assert_eq!(p.path_vertices().unwrap(), vec![1, 0, 2]);
        assert_eq!(p.star_center().unwrap(), 0);
        assert_eq!(p.unique_cycle(), Err(Error::NotUnicyclic));

        let p4 = SkewGainGraph::path(4, ones(3), f).unwrap();
        assert_eq!(p4.double_star_centers().unwrap(), (1, 2));
        assert_eq!(p4.star_center(), Err(Error::NotAStar));
        assert_eq!(
            SkewGainGraph::path(5, ones(4), f)
                .unwrap()
                .double_star_centers(),
            Err(Error::NotADoubleStar)
        );

        let c4 = SkewGainGraph::cycle(4, ones(4), f).unwrap();
        assert_eq!(
            c4.complete_bipartite_parts().unwrap(),
            (vec![0, 2], vec![1, 3])
        );
        assert!(SkewGainGraph::cycle(5, ones(5), f)
            .unwrap()
            .complete_bipartite_parts()
            .is_err());
    }

    #[test]
    fn delete_vertices_relabels() {
        let f = AntiInvolution::Identity;
        let g = SkewGainGraph::path(5, vec![q(1), q(2), q(3), q(4)], f).unwrap();
        let h = g.delete_vertices(&[1]);
        assert_eq!(h.order(), 4);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.gain(1, 2).unwrap(), q(3));
    }
}
