//! Limits of higher tangent spaces at a singular point of a hypersurface.
//!
//! The graph of `p ↦ (Δ_J(p))_J` is cut out by `A = ⟨F, u_J − t·Δ_J⟩`;
//! eliminating `t` and restricting to `x = 0` leaves an ideal in the `u`
//! variables whose zero set is the cone over the limit points.

mod grassmann;
mod planes;

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::groebner::{
    elimination_basis, elimination_order, groebner_basis, normal_form, EliminationOrder, GbLimits,
    GroebnerBasis, GroebnerError, Ideal,
};
use crate::hjac::{self, HigherJacobian, HjacError, MinorIndex};
use crate::polynomial::{MonomialOrder, PolyError, Polynomial, RationalPoint, Ring};

pub use grassmann::{annihilator, pluecker_reconstruct, pluecker_vector};
pub use planes::{zero_set_planes, Plane};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error(transparent)]
    Hjac(#[from] HjacError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("expected a vector of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the zero vector has no Plücker interpretation")]
    ZeroVector,
    #[error("vector is not decomposable")]
    NotDecomposable,
    #[error("input vectors are linearly dependent")]
    DependentVectors,
}

/// The ideal `A` together with the bookkeeping needed to interpret it.
#[derive(Debug, Clone)]
pub struct GraphIdeal {
    /// `F(x + center)` in the original ring.
    pub shifted: Polynomial,
    pub n: u32,
    pub center: RationalPoint,
    /// Maximal minors of the shifted polynomial, in index order.
    pub minors: Vec<(MinorIndex, Polynomial)>,
    /// Ring `(t, x_1..x_s, u_1..u_L)`.
    pub ring: Arc<Ring>,
    pub ideal: Ideal,
}

impl GraphIdeal {
    pub fn minor_count(&self) -> usize {
        self.minors.len()
    }

    pub fn nvars_x(&self) -> usize {
        self.shifted.nvars()
    }

    pub fn t_index(&self) -> usize {
        0
    }

    pub fn x_indices(&self) -> Vec<usize> {
        (1..=self.nvars_x()).collect()
    }

    pub fn u_indices(&self) -> Vec<usize> {
        let s = self.nvars_x();
        (s + 1..s + 1 + self.minor_count()).collect()
    }
}

fn fresh_name(taken: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|v| v == &name) {
        name.push('_');
    }
    name
}

/// A prefix `p` such that no existing variable has the form `p<digits>`.
fn fresh_prefix(taken: &[String], base: &str) -> String {
    let mut prefix = base.to_string();
    loop {
        let clash = taken.iter().any(|v| {
            v.strip_prefix(prefix.as_str())
                .is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
        });
        if !clash {
            return prefix;
        }
        prefix.push('_');
    }
}

/// Names for the `u` variables, `u1..uL`, avoiding clashes with `vars`.
pub fn u_names(vars: &[String], count: usize) -> Vec<String> {
    let prefix = fresh_prefix(vars, "u");
    (1..=count).map(|i| format!("{}{}", prefix, i)).collect()
}

fn check_center(f: &Polynomial, n: u32, center: &RationalPoint) -> Result<(), LimitError> {
    let jac = HigherJacobian::build(f, n)?;
    if !f.evaluate(center)?.is_zero() {
        return Err(HjacError::NotOnHypersurface(center.clone()).into());
    }
    if jac.rank_at(center)? == jac.num_rows() {
        return Err(HjacError::NonSingularPoint(center.clone()).into());
    }
    Ok(())
}

/// `A = ⟨F, u_J − t·Δ_J⟩` for the polynomial moved so that `center` is the
/// origin.
pub fn build_graph_ideal(
    f: &Polynomial,
    n: u32,
    center: &RationalPoint,
) -> Result<GraphIdeal, LimitError> {
    check_center(f, n, center)?;
    let shifted = f.translate(center)?;
    let minors = hjac::maximal_minors(&shifted, n)?;
    let xs = f.ring().vars().to_vec();
    let t = fresh_name(&xs, "t");
    let mut names = vec![t];
    names.extend(xs.iter().cloned());
    names.extend(u_names(&xs, minors.len()));
    let ring = Ring::new(&names)?;
    let s = xs.len();
    let embed: Vec<usize> = (1..=s).collect();
    let tvar = Polynomial::var(&ring, 0);
    let mut gens = vec![shifted.rename_into(&ring, &embed)];
    for (k, (_, d)) in minors.iter().enumerate() {
        let u = Polynomial::var(&ring, s + 1 + k);
        gens.push(&u - &(&tvar * &d.rename_into(&ring, &embed)));
    }
    let ideal = Ideal::new(&ring, gens)?;
    Ok(GraphIdeal {
        shifted,
        n,
        center: center.clone(),
        minors,
        ring,
        ideal,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LimitOptions {
    pub order: EliminationOrder,
    pub limits: GbLimits,
}

#[derive(Debug, Clone)]
pub struct LimitIdealResult {
    pub f: Polynomial,
    pub n: u32,
    pub center: RationalPoint,
    pub minor_count: usize,
    pub minors: Vec<(MinorIndex, Polynomial)>,
    /// `F(x + center)`.
    pub shifted: Polynomial,
    /// Basis of `A ∩ ℚ[x, u]`, in the ring `(x, u)`.
    pub eliminant: Vec<Polynomial>,
    /// Generators after setting every `x` to zero, in the ring of `u`.
    pub generators: Vec<Polynomial>,
    pub u_ring: Arc<Ring>,
    pub order_used: MonomialOrder,
}

impl LimitIdealResult {
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.u_ring, self.generators.clone()).expect("generators live in the u ring")
    }
}

/// Eliminates `t` from `A`, then sets every `x` to zero.
pub fn limit_ideal(
    f: &Polynomial,
    n: u32,
    center: &RationalPoint,
    opts: LimitOptions,
) -> Result<LimitIdealResult, LimitError> {
    let graph = build_graph_ideal(f, n, center)?;
    limit_ideal_of(&graph, f, opts)
}

pub fn limit_ideal_of(
    graph: &GraphIdeal,
    f: &Polynomial,
    opts: LimitOptions,
) -> Result<LimitIdealResult, LimitError> {
    let s = graph.nvars_x();
    let big_n = graph.ring.nvars();
    let basis = elimination_basis(&graph.ideal, &[0], opts.order, opts.limits)?;

    let xu_ring = Ring::new(&graph.ring.vars()[1..])?;
    let mut drop_t = vec![0usize; big_n];
    for (i, slot) in drop_t.iter_mut().enumerate().skip(1) {
        *slot = i - 1;
    }
    let eliminant: Vec<Polynomial> = basis
        .iter()
        .map(|p| p.rename_into(&xu_ring, &drop_t))
        .collect();

    let u_ring = Ring::new(&graph.ring.vars()[s + 1..])?;
    let mut keep_u = vec![0usize; big_n];
    for (i, slot) in keep_u.iter_mut().enumerate().skip(s + 1) {
        *slot = i - s - 1;
    }
    let x_idx = graph.x_indices();
    let mut seen = HashSet::new();
    let mut generators = Vec::new();
    for p in &basis {
        let g = p.set_zero(&x_idx);
        if g.is_zero() {
            continue;
        }
        let g = g.rename_into(&u_ring, &keep_u);
        if seen.insert(g.to_string()) {
            generators.push(g);
        }
    }
    Ok(LimitIdealResult {
        f: f.clone(),
        n: graph.n,
        center: graph.center.clone(),
        minor_count: graph.minor_count(),
        minors: graph.minors.clone(),
        shifted: graph.shifted.clone(),
        eliminant,
        generators,
        u_ring,
        order_used: elimination_order(big_n, &[0], opts.order),
    })
}

/// Images `u_J ↦ Δ_J` for substitution into polynomials of the `u` ring.
fn minor_images(minors: &[(MinorIndex, Polynomial)]) -> Vec<Polynomial> {
    minors.iter().map(|(_, d)| d.clone()).collect()
}

/// Membership test for `g(u) ∈ A|_{x=0}`, the kernel of
/// `ℚ[u] → ⊕_d J^d / m·J^d` with `J = ⟨Δ_J⟩ + ⟨F⟩` and `m = ⟨x⟩`.
///
/// Each `u`-homogeneous piece `g_d` must satisfy `g_d(Δ) ∈ ⟨F⟩ + m·J^d`.
pub struct ContainmentOracle {
    shifted: Polynomial,
    images: Vec<Polynomial>,
    jacobian_basis: Vec<Polynomial>,
    by_degree: std::sync::Mutex<BTreeMap<u32, Arc<GroebnerBasis>>>,
}

impl ContainmentOracle {
    pub fn new(
        shifted: &Polynomial,
        minors: &[(MinorIndex, Polynomial)],
    ) -> Result<Self, LimitError> {
        let ring = shifted.ring();
        let mut gens = vec![shifted.clone()];
        gens.extend(minors.iter().map(|(_, d)| d.clone()));
        let gb = groebner_basis(
            ring,
            &gens,
            &MonomialOrder::grevlex(ring.nvars()),
            GbLimits::unlimited(),
        )?;
        Ok(ContainmentOracle {
            shifted: shifted.clone(),
            images: minor_images(minors),
            jacobian_basis: gb.polys().to_vec(),
            by_degree: std::sync::Mutex::new(BTreeMap::new()),
        })
    }

    pub fn for_result(result: &LimitIdealResult) -> Result<Self, LimitError> {
        Self::new(&result.shifted, &result.minors)
    }

    /// Gröbner basis of `⟨F⟩ + m·J^d`.
    fn target(&self, d: u32) -> Result<Arc<GroebnerBasis>, LimitError> {
        if let Some(gb) = self.by_degree.lock().unwrap().get(&d) {
            return Ok(gb.clone());
        }
        let ring = self.shifted.ring();
        let mut powers = vec![Polynomial::one(ring)];
        for _ in 0..d {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for p in &powers {
                for g in &self.jacobian_basis {
                    let q = p * g;
                    if seen.insert(q.to_string()) {
                        next.push(q);
                    }
                }
            }
            powers = next;
        }
        let mut gens = vec![self.shifted.clone()];
        for i in 0..ring.nvars() {
            let x = Polynomial::var(ring, i);
            gens.extend(powers.iter().map(|p| &x * p));
        }
        let gb = Arc::new(groebner_basis(
            ring,
            &gens,
            &MonomialOrder::grevlex(ring.nvars()),
            GbLimits::unlimited(),
        )?);
        self.by_degree.lock().unwrap().insert(d, gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool, LimitError> {
        if g.nvars() != self.images.len() {
            return Err(LimitError::LengthMismatch {
                expected: self.images.len(),
                found: g.nvars(),
            });
        }
        let all: Vec<usize> = (0..g.nvars()).collect();
        for (d, piece) in g.components_in(&all) {
            if d == 0 {
                if !piece.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            let image = piece.compose(&self.images)?;
            if !self.target(d)?.contains(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_all(&self, gens: &[Polynomial]) -> Result<bool, LimitError> {
        for g in gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks every generator of a limit ideal against the containment oracle.
pub fn containment_oracle(result: &LimitIdealResult) -> Result<bool, LimitError> {
    ContainmentOracle::for_result(result)?.contains_all(&result.generators)
}

/// Direct check that each element `g(x, u)` of the eliminant lies in `A`:
/// `g(x, t·Δ)` must vanish modulo `F` in `ℚ[x, t]`.
pub fn eliminant_containment(result: &LimitIdealResult) -> Result<bool, LimitError> {
    let xs = result.shifted.ring().vars().to_vec();
    let t = fresh_name(&xs, "t");
    let mut names = xs.clone();
    names.push(t);
    let xt = Ring::new(&names)?;
    let s = xs.len();
    let embed: Vec<usize> = (0..s).collect();
    let tvar = Polynomial::var(&xt, s);
    let mut images: Vec<Polynomial> = (0..s).map(|i| Polynomial::var(&xt, i)).collect();
    images.extend(
        result
            .minors
            .iter()
            .map(|(_, d)| &tvar * &d.rename_into(&xt, &embed)),
    );
    let f = [result.shifted.rename_into(&xt, &embed)];
    let ord = MonomialOrder::grevlex(s + 1);
    for g in &result.eliminant {
        let image = g.compose(&images)?;
        if !normal_form(&image, &f, &ord).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
