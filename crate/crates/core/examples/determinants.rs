//! Closed-form determinants of paths and cycles, and the 2x2 block identities.

use skewgain::prelude::*;

fn main() -> skewgain::Result<()> {
    let ones = |k| vec![Rational::from_i64(1); k];
    for n in 2..=6 {
        let p = SkewGainGraph::path(n, ones(n - 1), AntiInvolution::Identity)?;
        let c = SkewGainGraph::cycle(n.max(3), ones(n.max(3)), AntiInvolution::Identity)?;
        println!(
            "n={n}  det P = {:>2} ({:>2})   det C = {:>2} ({:>2})",
            det_path(&p)?,
            adjacency_matrix(&p).det()?,
            det_cycle(&c)?,
            adjacency_matrix(&c).det()?
        );
    }

    let z = |s: &str| GaussianRational::parse_literal(s).unwrap();
    let hermitian =
        SkewGainGraph::cycle(3, vec![z("i"), z("1"), z("1")], AntiInvolution::Conjugate)?;
    println!(
        "Hermitian triangle det = {}",
        det_cycle(&hermitian)?.to_literal()
    );

    let m = |rows: [[i64; 2]; 2]| {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect())
                .collect(),
        )
    };
    // 3I - M for M the adjacency of K_{2,2}: det(9I - JJ) = 45 = 3^4 - 4 * 3^2.
    let (a, b) = (m([[3, 0], [0, 3]]), m([[-1, -1], [-1, -1]]));
    let (c, d) = (b.clone(), a.clone());
    for identity in [
        BlockIdentity::Commuting,
        BlockIdentity::SchurA,
        BlockIdentity::SchurD,
    ] {
        let check = block_determinant_check(&a, &b, &c, &d, identity)?;
        println!(
            "{identity:?}: direct {} reduced {} agree {}",
            check.direct,
            check.reduced,
            check.agrees()
        );
    }
    Ok(())
}
