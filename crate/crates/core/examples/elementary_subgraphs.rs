//! Matchings and elementary subgraphs of the paw (a triangle with a pendant
//! vertex), and the coefficients they add up to.

use skewgain::prelude::*;

fn main() -> skewgain::Result<()> {
    let one = || Rational::from_i64(1);
    let paw = SkewGainGraph::new(
        4,
        vec![(0, 1, one()), (1, 2, one()), (2, 0, one()), (2, 3, one())],
        AntiInvolution::Identity,
    )?;

    for k in 0..=2 {
        let edges: Vec<_> = paw
            .matchings(k)
            .iter()
            .map(|m| m.edges().to_vec())
            .collect();
        println!("{k}-matchings: {edges:?}");
    }
    println!("matching number {}", paw.matching_number());

    for order in 0..=paw.order() {
        let subgraphs = paw.elementary_subgraphs(order);
        println!("order {order}: {} elementary subgraphs", subgraphs.len());
        for s in &subgraphs {
            println!("  {s:?} components={}", s.component_count());
        }
    }
    println!("charpoly {}", charpoly_subgraphs(&paw));
    Ok(())
}
