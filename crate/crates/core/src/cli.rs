//! Command implementations behind the `skewgain` binary.
//!
//! Every command takes file text (or generator parameters) and returns the
//! text to print, so the binary stays a thin argument parser.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::charpoly::{
    charpoly_bipartite, charpoly_complete_bipartite, charpoly_cycle, charpoly_direct,
    charpoly_double_star, charpoly_path, charpoly_star, charpoly_subgraphs, charpoly_unicyclic,
    det_cycle, det_path,
};
use crate::graph::SkewGainGraph;
use crate::io::{parse_graph_file, with_graph, write_graph_file, AnyGraph, ParseError};
use crate::matrix::adjacency_matrix;
use crate::polynomial::Polynomial;
use crate::scalar::{
    validate_anti_involution, AntiInvolution, Complex64, Domain, Field, GaussianRational, Rational,
};
use crate::spectra::{
    double_star_spectrum, kmn_spectrum, spectrum_numeric, star_spectrum, zero_multiplicity_bound,
    Spectrum, MERGE_TOLERANCE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

fn unknown(kind: &str, value: &str, choices: &[&str]) -> CliError {
    CliError::Usage(format!(
        "unknown {kind} `{value}` (expected one of: {})",
        choices.join(", ")
    ))
}

/// Characteristic polynomial routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Auto,
    Subgraphs,
    Direct,
    Path,
    Cycle,
    Star,
    DoubleStar,
    Kmn,
    Bipartite,
    Unicyclic,
}

impl Route {
    pub const NAMES: [&'static str; 10] = [
        "auto",
        "subgraphs",
        "direct",
        "path",
        "cycle",
        "star",
        "doublestar",
        "kmn",
        "bipartite",
        "unicyclic",
    ];

    /// Closed-form routes in `auto` preference order, most specific first.
    pub const SPECIFIC: [Route; 7] = [
        Route::Path,
        Route::Cycle,
        Route::Star,
        Route::DoubleStar,
        Route::Kmn,
        Route::Unicyclic,
        Route::Bipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Auto => "auto",
            Route::Subgraphs => "subgraphs",
            Route::Direct => "direct",
            Route::Path => "path",
            Route::Cycle => "cycle",
            Route::Star => "star",
            Route::DoubleStar => "doublestar",
            Route::Kmn => "kmn",
            Route::Bipartite => "bipartite",
            Route::Unicyclic => "unicyclic",
        }
    }
}

impl FromStr for Route {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        [
            Route::Auto,
            Route::Subgraphs,
            Route::Direct,
            Route::Path,
            Route::Cycle,
            Route::Star,
            Route::DoubleStar,
            Route::Kmn,
            Route::Bipartite,
            Route::Unicyclic,
        ]
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| unknown("route", s, &Route::NAMES))
    }
}

/// Runs one route; `Auto` resolves to the most specific applicable one.
pub fn run_route<F: Field>(graph: &SkewGainGraph<F>, route: Route) -> crate::Result<Polynomial<F>> {
    match route {
        Route::Auto => Ok(Route::SPECIFIC
            .into_iter()
            .find_map(|r| run_route(graph, r).ok())
            .unwrap_or_else(|| charpoly_subgraphs(graph))),
        Route::Subgraphs => Ok(charpoly_subgraphs(graph)),
        Route::Direct => Ok(charpoly_direct(graph)),
        Route::Path => charpoly_path(graph),
        Route::Cycle => charpoly_cycle(graph),
        Route::Star => charpoly_star(graph),
        Route::DoubleStar => charpoly_double_star(graph),
        Route::Kmn => charpoly_complete_bipartite(graph),
        Route::Bipartite => charpoly_bipartite(graph),
        Route::Unicyclic => charpoly_unicyclic(graph),
    }
}

/// Prints the descending coefficient list.
pub fn cmd_charpoly(text: &str, route: Route) -> Result<String, CliError> {
    let graph = parse_graph_file(text)?;
    with_graph!(&graph, g => Ok(format!("{}\n", run_route(g, route)?)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumMethod {
    Auto,
    Numeric,
    Star,
    DoubleStar,
    Kmn,
}

impl FromStr for SpectrumMethod {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "auto" => Ok(SpectrumMethod::Auto),
            "numeric" => Ok(SpectrumMethod::Numeric),
            "star" => Ok(SpectrumMethod::Star),
            "doublestar" => Ok(SpectrumMethod::DoubleStar),
            "kmn" => Ok(SpectrumMethod::Kmn),
            other => Err(unknown(
                "method",
                other,
                &["auto", "numeric", "star", "doublestar", "kmn"],
            )),
        }
    }
}

pub fn run_spectrum<F: Field>(
    graph: &SkewGainGraph<F>,
    method: SpectrumMethod,
) -> crate::Result<Spectrum> {
    match method {
        SpectrumMethod::Auto => star_spectrum(graph)
            .or_else(|_| double_star_spectrum(graph))
            .or_else(|_| kmn_spectrum(graph))
            .or_else(|_| spectrum_numeric(graph)),
        SpectrumMethod::Numeric => spectrum_numeric(graph),
        SpectrumMethod::Star => star_spectrum(graph),
        SpectrumMethod::DoubleStar => double_star_spectrum(graph),
        SpectrumMethod::Kmn => kmn_spectrum(graph),
    }
}

/// Prints `value multiplicity` lines.
pub fn cmd_spectrum(text: &str, method: SpectrumMethod) -> Result<String, CliError> {
    let graph = parse_graph_file(text)?;
    with_graph!(&graph, g => Ok(run_spectrum(g, method)?.to_string()))
}

/// Outcome of comparing every applicable computation route.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub checks: Vec<(String, bool)>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    fn record(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.checks {
            writeln!(f, "{} {name}", if *ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Every applicable characteristic polynomial route against the subgraph
/// expansion, the determinant closed forms against `det A`, and closed-form
/// spectra against the numeric roots.
pub fn crosscheck<F: Field>(graph: &SkewGainGraph<F>) -> crate::Result<CrosscheckReport> {
    let mut report = CrosscheckReport::default();
    let reference = charpoly_subgraphs(graph);
    let direct = charpoly_direct(graph);
    report.record("subgraphs == direct", reference.approx_eq(&direct));
    for route in Route::SPECIFIC {
        if let Ok(poly) = run_route(graph, route) {
            report.record(
                format!("{} == subgraphs", route.name()),
                poly.approx_eq(&reference),
            );
        }
    }

    let det = adjacency_matrix(graph).det()?;
    let n = graph.order();
    let constant = reference.coeff(0);
    let signed_constant = if n % 2 == 1 { -constant } else { constant };
    report.record(
        "det(A) == (-1)^n constant term",
        det.approx_eq(&signed_constant),
    );
    if let Ok(value) = det_path(graph) {
        report.record("det_path == det(A)", value.approx_eq(&det));
    }
    if let Ok(value) = det_cycle(graph) {
        report.record("det_cycle == det(A)", value.approx_eq(&det));
    }

    let numeric = spectrum_numeric(graph)?;
    report.record("numeric spectrum order", numeric.total_multiplicity() == n);
    let closed_forms = [
        ("star", star_spectrum(graph)),
        ("doublestar", double_star_spectrum(graph)),
        ("kmn", kmn_spectrum(graph)),
    ];
    for (name, spectrum) in closed_forms {
        if let Ok(spectrum) = spectrum {
            report.record(
                format!("{name} spectrum == numeric"),
                values_match(&spectrum, &numeric, MERGE_TOLERANCE),
            );
        }
    }

    let bound = zero_multiplicity_bound(graph);
    if bound > 0 {
        report.record(
            format!("zero multiplicity >= {bound}"),
            reference.trailing_zeros() >= bound,
        );
    }
    Ok(report)
}

/// Multisets of eigenvalues agree within `tolerance` under greedy matching.
pub fn values_match(a: &Spectrum, b: &Spectrum, tolerance: f64) -> bool {
    let left = a.values();
    let mut right = b.values();
    if left.len() != right.len() {
        return false;
    }
    left.iter().all(|z| {
        let closest = right
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| (*x - z).norm().total_cmp(&(*y - z).norm()));
        match closest {
            Some((k, w)) if (w - z).norm() < tolerance => {
                right.swap_remove(k);
                true
            }
            _ => false,
        }
    })
}

pub fn cmd_crosscheck(text: &str) -> Result<CrosscheckReport, CliError> {
    let graph = parse_graph_file(text)?;
    with_graph!(&graph, g => Ok(crosscheck(g)?))
}

/// Graph summary, structural classes and the anti-involution laws on the
/// graph's own gains.
pub fn cmd_validate(text: &str) -> Result<(String, bool), CliError> {
    let graph = parse_graph_file(text)?;
    with_graph!(&graph, g => validate_report(g))
}

fn validate_report<F: Field>(graph: &SkewGainGraph<F>) -> Result<(String, bool), CliError> {
    let mut out = String::new();
    out.push_str(&format!("domain {}\n", graph.domain()));
    out.push_str(&format!("antiinvolution {}\n", graph.involution()));
    out.push_str(&format!("vertices {}\n", graph.order()));
    out.push_str(&format!("edges {}\n", graph.size()));
    let classes: Vec<&str> = [
        ("path", graph.path_vertices().is_ok()),
        ("cycle", graph.cycle_vertices().is_ok()),
        ("star", graph.star_center().is_ok()),
        ("doublestar", graph.double_star_centers().is_ok()),
        ("kmn", graph.complete_bipartite_parts().is_ok()),
        ("unicyclic", graph.unique_cycle().is_ok()),
        ("tree", graph.is_tree()),
        ("bipartite", graph.is_bipartite()),
        ("connected", graph.is_connected()),
    ]
    .into_iter()
    .filter_map(|(name, holds)| holds.then_some(name))
    .collect();
    out.push_str(&format!("classes {}\n", classes.join(" ")));
    let mut samples: Vec<F> = graph.edges().iter().map(|e| e.gain.clone()).collect();
    samples.push(F::one());
    let laws = validate_anti_involution(graph.involution(), &samples)?;
    out.push_str(&laws.to_string());
    Ok((out, laws.all_pass()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Kmn,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::DoubleStar => "doublestar",
            Family::Kmn => "kmn",
        }
    }

    /// Number of size parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::DoubleStar | Family::Kmn => 2,
            _ => 1,
        }
    }

    /// Edge count for the given parameters.
    pub fn edge_count(self, params: &[usize]) -> usize {
        match (self, params) {
            (Family::Path, [n]) => n.saturating_sub(1),
            (Family::Cycle, [n]) | (Family::Star, [n]) => *n,
            (Family::DoubleStar, [p, q]) => p + q + 1,
            (Family::Kmn, [m, n]) => m * n,
            _ => 0,
        }
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "doublestar" => Ok(Family::DoubleStar),
            "kmn" => Ok(Family::Kmn),
            other => Err(unknown(
                "family",
                other,
                &["path", "cycle", "star", "doublestar", "kmn"],
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GainSpec {
    Ones,
    /// Reproducible from the seed.
    Random,
    /// Explicit literals in family edge order.
    List(Vec<String>),
}

impl FromStr for GainSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "ones" => GainSpec::Ones,
            "random" => GainSpec::Random,
            list => GainSpec::List(list.split(',').map(|t| t.trim().to_string()).collect()),
        })
    }
}

impl fmt::Display for GainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GainSpec::Ones => f.write_str("ones"),
            GainSpec::Random => f.write_str("random"),
            GainSpec::List(items) => f.write_str(&items.join(",")),
        }
    }
}

/// Parameters of `gen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenRequest {
    pub family: Family,
    pub params: Vec<usize>,
    pub gains: GainSpec,
    pub seed: u64,
    pub domain: Domain,
    pub involution: AntiInvolution,
}

/// Small random nonzero gains, reproducible per seed.
pub trait RandomGain: Field {
    fn random_gain(rng: &mut impl Rng) -> Self;
}

impl RandomGain for Rational {
    fn random_gain(rng: &mut impl Rng) -> Self {
        let mut numer = 0;
        while numer == 0 {
            numer = rng.gen_range(-5..=5);
        }
        let denom: i64 = rng.gen_range(1..=4);
        Rational::new(numer.into(), denom.into())
    }
}

impl RandomGain for GaussianRational {
    fn random_gain(rng: &mut impl Rng) -> Self {
        loop {
            let re = Rational::new(
                rng.gen_range(-3i64..=3).into(),
                rng.gen_range(1i64..=2).into(),
            );
            let im = Rational::new(
                rng.gen_range(-3i64..=3).into(),
                rng.gen_range(1i64..=2).into(),
            );
            let z = GaussianRational::new(re, im);
            if !z.is_zero() {
                return z;
            }
        }
    }
}

impl RandomGain for Complex64 {
    fn random_gain(rng: &mut impl Rng) -> Self {
        loop {
            let z = Complex64::new(
                rng.gen_range(-12i32..=12) as f64 / 4.0,
                rng.gen_range(-12i32..=12) as f64 / 4.0,
            );
            if !Field::is_zero(&z) {
                return z;
            }
        }
    }
}

fn build_family<F: RandomGain>(request: &GenRequest) -> Result<SkewGainGraph<F>, CliError> {
    let params = &request.params;
    if params.len() != request.family.arity() {
        return Err(CliError::Usage(format!(
            "family `{}` takes {} size parameter(s), got {}",
            request.family.name(),
            request.family.arity(),
            params.len()
        )));
    }
    let count = request.family.edge_count(params);
    let gains: Vec<F> = match &request.gains {
        GainSpec::Ones => vec![F::one(); count],
        GainSpec::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(request.seed);
            (0..count).map(|_| F::random_gain(&mut rng)).collect()
        }
        GainSpec::List(items) => items
            .iter()
            .map(|t| F::parse_literal(t))
            .collect::<crate::Result<_>>()?,
    };
    let f = request.involution;
    Ok(match (request.family, &params[..]) {
        (Family::Path, [n]) => SkewGainGraph::path(*n, gains, f)?,
        (Family::Cycle, [n]) => SkewGainGraph::cycle(*n, gains, f)?,
        (Family::Star, [n]) => SkewGainGraph::star(*n, gains, f)?,
        (Family::DoubleStar, [p, q]) => SkewGainGraph::double_star(*p, *q, gains, f)?,
        (Family::Kmn, [m, n]) => SkewGainGraph::complete_bipartite(*m, *n, gains, f)?,
        _ => unreachable!("arity checked above"),
    })
}

/// Builds the requested family graph in memory.
pub fn generate(request: &GenRequest) -> Result<AnyGraph, CliError> {
    request.involution.check_domain(request.domain)?;
    Ok(match request.domain {
        Domain::Rational => build_family::<Rational>(request)?.into(),
        Domain::GaussianRational => build_family::<GaussianRational>(request)?.into(),
        Domain::ComplexFloat => build_family::<Complex64>(request)?.into(),
    })
}

/// Emits a graph file for the requested family.
pub fn cmd_gen(request: &GenRequest) -> Result<String, CliError> {
    let graph = generate(request)?;
    let params: Vec<String> = request.params.iter().map(usize::to_string).collect();
    let mut comment = format!(
        "{} {} gains={}",
        request.family.name(),
        params.join(" "),
        request.gains
    );
    if request.gains == GainSpec::Random {
        comment.push_str(&format!(" seed={}", request.seed));
    }
    Ok(with_graph!(&graph, g => write_graph_file(g, &[comment])))
}
