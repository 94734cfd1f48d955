//! The four anti-involutions, their g-maps, and the law checker.

use skewgain::prelude::*;

fn main() -> skewgain::Result<()> {
    let z = GaussianRational::parse_literal("1+2i")?;
    for f in AntiInvolution::ALL {
        println!(
            "{:<12} f(1+2i) = {:<12} g(1+2i) = {}",
            f.wire_name(),
            f.apply(&z)?.to_literal(),
            f.gmap(&z)?.to_literal()
        );
    }

    let samples: Vec<GaussianRational> = ["1+2i", "-3", "1/2i", "2-i"]
        .into_iter()
        .map(GaussianRational::parse_literal)
        .collect::<skewgain::Result<_>>()?;
    println!("\nconjugate on {} samples:", samples.len());
    print!(
        "{}",
        validate_anti_involution(AntiInvolution::Conjugate, &samples)?
    );

    match AntiInvolution::Conjugate.apply(&Rational::from_i64(3)) {
        Err(e) => println!("\nconjugate over the rationals: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
