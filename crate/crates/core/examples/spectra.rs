//! Numeric spectra next to the star, double-star and complete bipartite
//! closed forms.

use skewgain::prelude::*;

fn compare<F: Field>(
    label: &str,
    graph: &SkewGainGraph<F>,
    closed: Spectrum,
) -> skewgain::Result<()> {
    println!(
        "{label}\n  closed form:\n{}  numeric:\n{}",
        indent(&closed),
        indent(&spectrum_numeric(graph)?)
    );
    Ok(())
}

fn indent(s: &Spectrum) -> String {
    s.to_string()
        .lines()
        .map(|l| format!("    {l}\n"))
        .collect()
}

fn main() -> skewgain::Result<()> {
    let z = |s: &str| GaussianRational::parse_literal(s).unwrap();

    let star = SkewGainGraph::star(3, vec![z("1"), z("i"), z("1+i")], AntiInvolution::Conjugate)?;
    compare(
        "K_{1,3} gains 1, i, 1+i (conjugate)",
        &star,
        star_spectrum(&star)?,
    )?;

    let ds = SkewGainGraph::double_star(
        2,
        2,
        vec![z("2"), z("1"), z("i"), z("-1"), z("1-i")],
        AntiInvolution::Conjugate,
    )?;
    compare(
        "double star 2+2 (conjugate)",
        &ds,
        double_star_spectrum(&ds)?,
    )?;

    let k23 = SkewGainGraph::complete_bipartite(
        2,
        3,
        vec![Rational::from_i64(1); 6],
        AntiInvolution::Identity,
    )?;
    compare("K_{2,3} all ones", &k23, kmn_spectrum(&k23)?)?;
    println!("zero multiplicity bound {}", zero_multiplicity_bound(&k23));

    let gains = vec![z("1+i"), z("2"), z("-i"), z("1/2"), z("3i"), z("-1")];
    let k23 = SkewGainGraph::complete_bipartite(2, 3, gains, AntiInvolution::Identity)?;
    compare(
        "K_{2,3} complex weights (identity)",
        &k23,
        kmn_spectrum(&k23)?,
    )?;
    Ok(())
}
