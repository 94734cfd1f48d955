//! Every characteristic polynomial route on graphs where it applies.

use skewgain::cli::{run_route, Route};
use skewgain::prelude::*;

fn show<F: Field>(label: &str, graph: &SkewGainGraph<F>) {
    println!("{label}");
    for route in [Route::Subgraphs, Route::Direct]
        .into_iter()
        .chain(Route::SPECIFIC)
    {
        if let Ok(poly) = run_route(graph, route) {
            println!("  {:<10} {poly}", route.name());
        }
    }
}

fn main() -> skewgain::Result<()> {
    let q = |s: &str| Rational::parse_literal(s);
    let z = |s: &str| GaussianRational::parse_literal(s);

    show(
        "path 1/2, -3, 2 (identity)",
        &SkewGainGraph::path(
            4,
            vec![q("1/2")?, q("-3")?, q("2")?],
            AntiInvolution::Identity,
        )?,
    );
    show(
        "Hermitian triangle i, 1, 1",
        &SkewGainGraph::cycle(
            3,
            vec![z("i")?, z("1")?, z("1")?],
            AntiInvolution::Conjugate,
        )?,
    );
    show(
        "gain 4-cycle 2, i, 1+i, -1",
        &SkewGainGraph::cycle(
            4,
            vec![z("2")?, z("i")?, z("1+i")?, z("-1")?],
            AntiInvolution::Inverse,
        )?,
    );
    show(
        "double star 2+1",
        &SkewGainGraph::double_star(2, 1, vec![q("1")?; 4], AntiInvolution::Identity)?,
    );
    show(
        "K_{2,3}",
        &SkewGainGraph::complete_bipartite(2, 3, vec![q("1")?; 6], AntiInvolution::Identity)?,
    );
    Ok(())
}
