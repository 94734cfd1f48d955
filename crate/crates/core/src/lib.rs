//! Exact characteristic polynomials and spectra of skew gain graphs.
//!
//! A skew gain graph labels each oriented edge `u -> v` with a nonzero field
//! element `φ(u -> v)`, and the reverse edge carries `f(φ(u -> v))` for a
//! fixed anti-involution `f`. Weighted graphs (`f = identity`), gain graphs
//! (`f = inverse`) and Hermitian complex-weighted graphs (`f = conjugate`) are
//! all special cases.
//!
//! The crate computes the characteristic polynomial `det(xI - A)` several
//! independent ways (an elementary-subgraph expansion, closed forms for
//! paths, cycles, bipartite, unicyclic, star, double-star and complete
//! bipartite graphs, and a determinant-based reference) over the rationals
//! and Gaussian rationals exactly, or over binary64 complex numbers.
//!
//! ```
//! use skewgain::prelude::*;
//!
//! let triangle = SkewGainGraph::cycle(3, vec![Rational::from_i64(1); 3], AntiInvolution::Identity)?;
//! assert_eq!(charpoly_subgraphs(&triangle).to_string(), "1 0 -3 -2");
//! assert_eq!(charpoly_subgraphs(&triangle), charpoly_direct(&triangle));
//! # Ok::<(), skewgain::Error>(())
//! ```

pub mod charpoly;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod polynomial;
pub mod roots;
pub mod scalar;
pub mod spectra;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::charpoly::{
        charpoly_bipartite, charpoly_complete_bipartite, charpoly_cycle, charpoly_direct,
        charpoly_double_star, charpoly_path, charpoly_star, charpoly_subgraphs, charpoly_unicyclic,
        det_cycle, det_path,
    };
    pub use crate::graph::{ElementarySubgraph, Matching, SkewGainGraph};
    pub use crate::matrix::{adjacency_matrix, block_determinant_check, BlockIdentity, Matrix};
    pub use crate::polynomial::Polynomial;
    pub use crate::scalar::{
        validate_anti_involution, AntiInvolution, Complex64, Domain, Field, GaussianRational,
        Rational,
    };
    pub use crate::spectra::{
        double_star_spectrum, kmn_spectrum, spectrum_numeric, star_spectrum,
        zero_multiplicity_bound, Spectrum,
    };
}
