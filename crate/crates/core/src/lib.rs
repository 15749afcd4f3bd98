//! Exact computations around the higher-order Jacobian matrix of a
//! hypersurface: singularity tests by rank, higher tangent spaces, the
//! ideal of maximal minors, and Gröbner-basis elimination for limits of
//! higher tangent spaces at singular points.

pub mod groebner;
pub mod hilbert;
pub mod hjac;
pub mod limits;
pub mod linalg;
pub mod multiindex;
pub mod parser;
pub mod polynomial;

pub use groebner::{
    eliminate, ideal_equal, ideal_membership, radical_membership, EliminationOrder, GbLimits,
    GroebnerBasis, GroebnerError, Ideal,
};
pub use hilbert::{HilbertError, MonomialIdeal};
pub use hjac::{HigherJacobian, HjacError, MinorIndex};
pub use limits::{LimitError, LimitIdealResult, LimitOptions};
pub use multiindex::{enumerate, MultiIndex, MultiIndexError};
pub use parser::{format_polynomial, parse_polynomial, ParseError};
pub use polynomial::{
    MonomialOrder, OrderKind, PolyError, Polynomial, Rational, RationalPoint, Ring,
};
