//! Generating, writing, parsing and cross-checking graph files.

use skewgain::cli::{cmd_crosscheck, cmd_gen, Family, GainSpec, GenRequest};
use skewgain::io::parse_graph_file;
use skewgain::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let request = GenRequest {
        family: Family::Kmn,
        params: vec![2, 3],
        gains: GainSpec::Random,
        seed: 7,
        domain: Domain::GaussianRational,
        involution: AntiInvolution::Conjugate,
    };
    let text = cmd_gen(&request)?;
    println!("{text}");

    let graph = parse_graph_file(&text)?;
    println!(
        "parsed a {} graph on {} vertices\n",
        graph.domain(),
        graph.order()
    );
    print!("{}", cmd_crosscheck(&text)?);

    match parse_graph_file("domain rational\nantiinvolution identity\nvertices 3\nedge 0 3 1\n") {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
