//! Standard monomials of monomial ideals and local embedding dimensions of
//! hypersurfaces.

use num_traits::Zero;
use thiserror::Error;

use crate::multiindex::{binomial_usize, enumerate, MultiIndex};
use crate::polynomial::{MonomialOrder, PolyError, Polynomial, RationalPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("the zero polynomial has no local ring")]
    ZeroPolynomial,
    #[error("polynomial does not vanish at the origin")]
    NotThroughOrigin,
    #[error("point {0} is not on the hypersurface")]
    NotOnHypersurface(RationalPoint),
    #[error("monomial ideal needs at least one variable")]
    NoVariables,
    #[error("generator has {found} exponents, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Monomial ideal in `s` variables, kept as its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<MultiIndex>,
}

impl MonomialIdeal {
    /// Drops generators that are multiples of others.
    pub fn new(nvars: usize, generators: Vec<MultiIndex>) -> Result<Self, HilbertError> {
        if nvars == 0 {
            return Err(HilbertError::NoVariables);
        }
        if let Some(g) = generators.iter().find(|g| g.len() != nvars) {
            return Err(HilbertError::LengthMismatch {
                expected: nvars,
                found: g.len(),
            });
        }
        let mut sorted = generators;
        sorted.sort_by(|a, b| a.canonical_cmp(b));
        sorted.dedup();
        let mut minimal: Vec<MultiIndex> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimal,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiIndex] {
        &self.generators
    }

    pub fn contains(&self, m: &MultiIndex) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Number of degree-`n` monomials outside the ideal.
    pub fn graded_dim(&self, n: u32) -> usize {
        if self.generators.is_empty() {
            return binomial_usize(n as usize + self.nvars - 1, self.nvars - 1);
        }
        enumerate(self.nvars, n, n)
            .expect("nvars is positive")
            .iter()
            .filter(|m| !self.contains(m))
            .count()
    }

    /// Whether every generator is a multiple of variable `var`.
    pub fn shares_variable(&self, var: usize) -> bool {
        !self.generators.is_empty() && self.generators.iter().all(|g| g.exponents()[var] > 0)
    }
}

pub fn graded_dim(ideal: &MonomialIdeal, n: u32) -> usize {
    ideal.graded_dim(n)
}

/// Initial ideal of `⟨F₀⟩` under grevlex, `F₀` the lowest-degree part of `F`.
pub fn tangent_cone_initial(f: &Polynomial) -> Result<MonomialIdeal, HilbertError> {
    if f.is_zero() {
        return Err(HilbertError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(HilbertError::NotThroughOrigin);
    }
    let lowest = f.lowest_homogeneous_component()?;
    let lead = lowest
        .leading_monomial(&MonomialOrder::grevlex(f.nvars()))
        .expect("nonzero component")
        .clone();
    MonomialIdeal::new(f.nvars(), vec![lead])
}

/// `dim m^n / m^{n+1}` for the local ring of `F = 0` at the origin.
pub fn local_hilbert(f: &Polynomial, n: u32) -> Result<usize, HilbertError> {
    Ok(tangent_cone_initial(f)?.graded_dim(n))
}

/// `dim m / m^{n+1}` at the origin, the sum of `local_hilbert` over `1..=n`.
pub fn local_dimension(f: &Polynomial, n: u32) -> Result<usize, HilbertError> {
    let initial = tangent_cone_initial(f)?;
    Ok((1..=n).map(|k| initial.graded_dim(k)).sum())
}

/// Compares `dim m_p / m_p^{n+1}` with its value at a smooth point.
pub fn nonsingular_by_dimension(
    f: &Polynomial,
    n: u32,
    p: &RationalPoint,
) -> Result<bool, HilbertError> {
    if !f.evaluate(p)?.is_zero() {
        return Err(HilbertError::NotOnHypersurface(p.clone()));
    }
    let shifted = f.translate(p)?;
    let s = f.nvars();
    let smooth = binomial_usize(n as usize + s - 1, s - 1) - 1;
    Ok(local_dimension(&shifted, n)? == smooth)
}
