//! Zero sets of homogeneous ideals that split into linear subspaces.
//!
//! The search branches on monomial generators (some variable vanishes), on
//! common monomial factors, and on binary quadratic forms that factor over
//! ℚ; linear generators are solved and substituted. Anything else is
//! reported as unsupported.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::multiindex::MultiIndex;
use crate::polynomial::{Polynomial, Rational, Ring};

/// A linear subspace of ℚ^L given by a basis in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Plane {
    pub basis: Vec<Vec<Rational>>,
}

impl Plane {
    fn new(mut basis: Vec<Vec<Rational>>) -> Self {
        let pivots = linalg::rref(&mut basis);
        basis.truncate(pivots.len());
        Plane { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn contains(&self, other: &Plane) -> bool {
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        linalg::rank(&stacked) == self.dim()
    }
}

/// Variable `v` expressed as a linear form in the remaining variables.
type Solved = Vec<(usize, Vec<(usize, Rational)>)>;

struct Search {
    ring: Arc<Ring>,
    found: Vec<Plane>,
    budget: usize,
}

/// Components of the zero set of homogeneous generators, when the ideal has
/// one of the supported shapes; `None` otherwise.
pub fn zero_set_planes(gens: &[Polynomial]) -> Option<Vec<Plane>> {
    let ring = gens.first()?.ring().clone();
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return None;
    }
    let mut search = Search {
        ring,
        found: Vec::new(),
        budget: 1 << 16,
    };
    search.explore(gens.to_vec(), Vec::new())?;
    let mut planes = search.found;
    planes.sort();
    planes.dedup();
    let maximal: Vec<Plane> = planes
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            !planes
                .iter()
                .enumerate()
                .any(|(j, q)| *i != j && q.dim() > p.dim() && q.contains(p))
        })
        .map(|(_, p)| p.clone())
        .collect();
    Some(maximal)
}

impl Search {
    fn explore(&mut self, gens: Vec<Polynomial>, solved: Solved) -> Option<()> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().any(|g| g.is_constant()) {
            return Some(());
        }
        if let Some(k) = gens.iter().position(|g| g.total_degree() == Some(1)) {
            let lin = gens.swap_remove(k);
            let (v, expr) = solve_linear(&lin);
            let image = substitution(&self.ring, v, &expr);
            let rest = gens
                .iter()
                .map(|g| g.compose(&image).expect("same ring"))
                .collect();
            let mut solved = solved;
            for (_, e) in solved.iter_mut() {
                *e = substitute_form(e, v, &expr);
            }
            solved.push((v, expr));
            return self.explore(rest, solved);
        }
        let Some(g) = pick(&gens) else {
            self.found.push(self.plane(&solved));
            return Some(());
        };
        for factor in split(g)? {
            let mut next = gens.clone();
            next.push(factor);
            self.explore(next, solved.clone())?;
        }
        Some(())
    }

    fn plane(&self, solved: &Solved) -> Plane {
        let n = self.ring.nvars();
        let bound: Vec<usize> = solved.iter().map(|(v, _)| *v).collect();
        let basis = (0..n)
            .filter(|v| !bound.contains(v))
            .map(|free| {
                let mut vec = vec![Rational::zero(); n];
                vec[free] = Rational::one();
                for (v, expr) in solved {
                    vec[*v] = expr
                        .iter()
                        .filter(|(w, _)| *w == free)
                        .map(|(_, c)| c.clone())
                        .sum();
                }
                vec
            })
            .collect();
        Plane::new(basis)
    }
}

/// The generator to branch on: monomials first, then the shortest.
fn pick(gens: &[Polynomial]) -> Option<&Polynomial> {
    gens.iter()
        .min_by_key(|g| (g.num_terms(), g.total_degree()))
}

/// Polynomials whose vanishing, taken one at a time, covers the zero set of
/// `g`; `None` when `g` has no supported factorization.
fn split(g: &Polynomial) -> Option<Vec<Polynomial>> {
    let ring = g.ring();
    let n = ring.nvars();
    let mut common = vec![u32::MAX; n];
    for (m, _) in g.terms() {
        for (c, &e) in common.iter_mut().zip(m.exponents()) {
            *c = (*c).min(e);
        }
    }
    let common = MultiIndex::new(common);
    if !common.is_zero() {
        let mut out: Vec<Polynomial> = (0..n)
            .filter(|&v| common.exponents()[v] > 0)
            .map(|v| Polynomial::var(ring, v))
            .collect();
        let rest = g
            .div_exact(&Polynomial::monomial(ring, common, Rational::one()))
            .ok()?;
        if !rest.is_constant() {
            out.push(rest);
        }
        return Some(out);
    }
    binary_quadratic_factors(g)
}

/// Linear factors of `a·x² + b·xy + c·y²` when they are rational.
fn binary_quadratic_factors(g: &Polynomial) -> Option<Vec<Polynomial>> {
    if g.total_degree() != Some(2) {
        return None;
    }
    let ring = g.ring();
    let vars: Vec<usize> = (0..ring.nvars()).filter(|&v| g.depends_on(v)).collect();
    if vars.len() != 2 {
        return None;
    }
    let (x, y) = (vars[0], vars[1]);
    let coeff = |ex: u32, ey: u32| {
        let mut e = vec![0u32; ring.nvars()];
        e[x] = ex;
        e[y] = ey;
        g.coefficient(&MultiIndex::new(e))
    };
    let (a, b, c) = (coeff(2, 0), coeff(1, 1), coeff(0, 2));
    if a.is_zero() || c.is_zero() {
        // Handled by the common-factor branch.
        return None;
    }
    let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &c;
    let root = rational_sqrt(&disc)?;
    let two_a = Rational::from_integer(BigInt::from(2)) * &a;
    let mut roots = vec![(-&b + &root) / &two_a, (-&b - &root) / &two_a];
    roots.dedup();
    Some(
        roots
            .into_iter()
            .map(|r| &Polynomial::var(ring, x) - &Polynomial::var(ring, y).scale(&r))
            .collect(),
    )
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Solves a linear form for its first variable.
fn solve_linear(lin: &Polynomial) -> (usize, Vec<(usize, Rational)>) {
    let ring = lin.ring();
    let v = (0..ring.nvars())
        .find(|&v| lin.depends_on(v))
        .expect("non-constant");
    let lead = lin.coefficient(&MultiIndex::unit(ring.nvars(), v));
    let expr = (0..ring.nvars())
        .filter(|&w| w != v)
        .filter_map(|w| {
            let c = lin.coefficient(&MultiIndex::unit(ring.nvars(), w));
            (!c.is_zero()).then(|| (w, -c / &lead))
        })
        .collect();
    (v, expr)
}

fn substitution(ring: &Arc<Ring>, v: usize, expr: &[(usize, Rational)]) -> Vec<Polynomial> {
    (0..ring.nvars())
        .map(|w| {
            if w != v {
                return Polynomial::var(ring, w);
            }
            expr.iter().fold(Polynomial::zero(ring), |acc, (u, c)| {
                &acc + &Polynomial::var(ring, *u).scale(c)
            })
        })
        .collect()
}

fn substitute_form(
    form: &[(usize, Rational)],
    v: usize,
    expr: &[(usize, Rational)],
) -> Vec<(usize, Rational)> {
    let mut acc: std::collections::BTreeMap<usize, Rational> = std::collections::BTreeMap::new();
    for (w, c) in form {
        if *w == v {
            for (u, d) in expr {
                *acc.entry(*u).or_insert_with(Rational::zero) += c * d;
            }
        } else {
            *acc.entry(*w).or_insert_with(Rational::zero) += c.clone();
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
