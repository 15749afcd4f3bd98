//! Gröbner bases over ℚ: division, Buchberger's algorithm, elimination and
//! ideal comparisons.

mod engine;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::multiindex::MultiIndex;
use crate::polynomial::{Block, MonomialOrder, OrderKind, PolyError, Polynomial, Ring};
use engine::{Buchberger, Reducers, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Caps on the work a single basis computation may do.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct GbLimits {
    pub max_pairs: Option<usize>,
    pub max_reductions: Option<u64>,
}

impl GbLimits {
    pub fn unlimited() -> Self {
        GbLimits::default()
    }
}

/// A reduced Gröbner basis: monic, autoreduced, sorted by increasing leading
/// monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    terms: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<MultiIndex> {
        self.terms.iter().map(|t| t.lm().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let reducers = Reducers::new(self.terms.iter().collect());
        let r = engine::reduce(
            Terms::from_poly(f, &self.order),
            &reducers,
            &self.order,
            || Ok(()),
        )
        .expect("unbudgeted reduction");
        r.into_poly(&self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.polys.iter().map(|p| p.to_string()))
            .finish()
    }
}

/// An ideal given by generators, with a per-order cache of reduced bases.
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "⟩")
    }
}

impl Ideal {
    /// Zero generators are discarded; every generator must live in `ring`.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &generators {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal generated by these generators and `extra`.
    pub fn extended(
        &self,
        extra: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// Reduced Gröbner basis, cached per order.
    pub fn groebner(&self, ord: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        self.groebner_with(ord, GbLimits::unlimited())
    }

    pub fn groebner_with(
        &self,
        ord: &MonomialOrder,
        limits: GbLimits,
    ) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if let Some(gb) = self.cache.lock().unwrap().get(ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner_basis(&self.ring, &self.generators, ord, limits)?);
        self.cache.lock().unwrap().insert(ord.clone(), gb.clone());
        Ok(gb)
    }
}

/// Reduced Gröbner basis of the given generators.
pub fn groebner_basis(
    ring: &Arc<Ring>,
    generators: &[Polynomial],
    ord: &MonomialOrder,
    limits: GbLimits,
) -> Result<GroebnerBasis, GroebnerError> {
    if ord.nvars() != ring.nvars() {
        return Err(PolyError::DimensionMismatch {
            expected: ring.nvars(),
            found: ord.nvars(),
        }
        .into());
    }
    let mut inputs: Vec<Terms> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Terms::from_poly(g, ord))
        .collect();
    // Small leading monomials first keeps the intermediate basis tidy.
    inputs.sort_by(|a, b| {
        a.lm()
            .total_degree()
            .cmp(&b.lm().total_degree())
            .then_with(|| ord.compare(a.lm().exponents(), b.lm().exponents()))
            .then_with(|| a.0.len().cmp(&b.0.len()))
    });
    let mut run = Buchberger::new(ord, limits);
    for t in inputs {
        run.insert(t)?;
    }
    let terms = run.finish()?;
    let polys = terms.iter().map(|t| t.clone().into_poly(ring)).collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: ord.clone(),
        polys,
        terms,
    })
}

/// Convenience wrapper around [`Ideal::groebner`].
pub fn buchberger(ideal: &Ideal, ord: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
    ideal.groebner(ord)
}

/// Remainder of multivariate division of `f` by `divisors`, trying divisors
/// in list order at each step.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let terms: Vec<Terms> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Terms::from_poly(g, ord))
        .collect();
    let reducers = Reducers::new(terms.iter().collect());
    engine::reduce(Terms::from_poly(f, ord), &reducers, ord, || Ok(()))
        .expect("unbudgeted reduction")
        .into_poly(f.ring())
}

/// `S(f, g)` built from the monic versions of `f` and `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    assert!(!f.is_zero() && !g.is_zero(), "S-polynomial of zero");
    engine::spoly(&Terms::from_poly(f, ord), &Terms::from_poly(g, ord), ord).into_poly(f.ring())
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(polys: &[Polynomial], ord: &MonomialOrder) -> bool {
    let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Polynomial> = nonzero.iter().map(|p| (*p).clone()).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let s = s_polynomial(nonzero[i], nonzero[j], ord);
            if !normal_form(&s, &owned, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Checks the reduced-basis shape: monic, and no term of any element is
/// divisible by the leading monomial of another.
pub fn is_reduced(polys: &[Polynomial], ord: &MonomialOrder) -> bool {
    let lms: Vec<&MultiIndex> = match polys.iter().map(|p| p.leading_monomial(ord)).collect() {
        Some(v) => v,
        None => return false,
    };
    polys.iter().enumerate().all(|(i, p)| {
        p.leading_term(ord)
            .is_some_and(|(_, c)| num_traits::One::is_one(c))
            && p.terms()
                .all(|(m, _)| lms.iter().enumerate().all(|(j, l)| i == j || !l.divides(m)))
    })
}

/// How dropped variables are separated from the kept ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EliminationOrder {
    /// Dropped variables form a grevlex block above a grevlex block of kept ones.
    #[default]
    Block,
    /// Pure lex with dropped variables first, then the kept ones in ring order.
    Lex,
}

/// Order on `ring` where every monomial containing a dropped variable is
/// larger than every monomial free of them.
pub fn elimination_order(nvars: usize, drop: &[usize], kind: EliminationOrder) -> MonomialOrder {
    let kept: Vec<usize> = (0..nvars).filter(|v| !drop.contains(v)).collect();
    match kind {
        EliminationOrder::Block => MonomialOrder::block(vec![
            Block {
                vars: drop.to_vec(),
                kind: OrderKind::GrevLex,
            },
            Block {
                vars: kept,
                kind: OrderKind::GrevLex,
            },
        ])
        .expect("drop and kept partition the variables"),
        EliminationOrder::Lex => {
            let mut prec = drop.to_vec();
            prec.extend(kept);
            MonomialOrder::with_precedence(OrderKind::Lex, prec).expect("permutation")
        }
    }
}

/// Basis elements of `I ∩ ℚ[kept variables]`, still in the ring of `I`.
pub fn elimination_basis(
    ideal: &Ideal,
    drop: &[usize],
    kind: EliminationOrder,
    limits: GbLimits,
) -> Result<Vec<Polynomial>, GroebnerError> {
    let n = ideal.ring().nvars();
    if drop.is_empty() || drop.len() >= n || drop.iter().any(|&v| v >= n) {
        return Err(PolyError::InvalidOrder(
            "drop must be a proper subset of the variables".into(),
        )
        .into());
    }
    let ord = elimination_order(n, drop, kind);
    let gb = ideal.groebner_with(&ord, limits)?;
    Ok(gb
        .polys()
        .iter()
        .filter(|p| drop.iter().all(|&v| !p.depends_on(v)))
        .cloned()
        .collect())
}

/// `I ∩ ℚ[kept variables]` as an ideal of the ring on the kept variables.
pub fn eliminate(ideal: &Ideal, drop: &[&str]) -> Result<Ideal, GroebnerError> {
    eliminate_with(ideal, drop, EliminationOrder::Block, GbLimits::unlimited())
}

pub fn eliminate_with(
    ideal: &Ideal,
    drop: &[&str],
    kind: EliminationOrder,
    limits: GbLimits,
) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    let drop_idx: Vec<usize> = drop
        .iter()
        .map(|v| {
            ring.index_of(v)
                .ok_or_else(|| PolyError::UnknownVariable(v.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let kept: Vec<usize> = (0..ring.nvars())
        .filter(|v| !drop_idx.contains(v))
        .collect();
    let basis = elimination_basis(ideal, &drop_idx, kind, limits)?;
    let sub = Ring::new(&kept.iter().map(|&v| ring.var_name(v)).collect::<Vec<_>>())?;
    let mut var_map = vec![0usize; ring.nvars()];
    for (new, &old) in kept.iter().enumerate() {
        var_map[old] = new;
    }
    let gens = basis
        .iter()
        .map(|p| p.rename_into(&sub, &var_map))
        .collect();
    Ok(Ideal::new(&sub, gens)?)
}

fn grevlex_basis(ideal: &Ideal) -> Result<Arc<GroebnerBasis>, GroebnerError> {
    ideal.groebner(&MonomialOrder::grevlex(ideal.ring().nvars()))
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    if f.ring() != ideal.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(grevlex_basis(ideal)?.contains(f))
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    if a.ring() != b.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(grevlex_basis(a)?.polys() == grevlex_basis(b)?.polys())
}

/// Whether `f` vanishes on the zero set of `ideal`.
///
/// Small powers of `f` are tried against the cached basis first; otherwise
/// `1 − w·f` is adjoined to the basis and the result tested for the unit
/// ideal.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    if f.ring() != ideal.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let basis = grevlex_basis(ideal)?;
    let mut power = f.clone();
    for _ in 0..3 {
        if basis.contains(&power) {
            return Ok(true);
        }
        power = &power * f;
    }
    let ring = ideal.ring();
    let mut fresh = String::from("w");
    while ring.index_of(&fresh).is_some() {
        fresh.push('_');
    }
    let mut names: Vec<&str> = ring.vars().iter().map(String::as_str).collect();
    names.push(&fresh);
    let big = Ring::new(&names)?;
    let n = ring.nvars();
    let embed: Vec<usize> = (0..n).collect();
    let w = Polynomial::var(&big, n);
    let mut gens: Vec<Polynomial> = basis
        .polys()
        .iter()
        .map(|g| g.rename_into(&big, &embed))
        .collect();
    gens.push(&Polynomial::one(&big) - &(&w * &basis.normal_form(f).rename_into(&big, &embed)));
    let gb = groebner_basis(
        &big,
        &gens,
        &MonomialOrder::grevlex(n + 1),
        GbLimits::unlimited(),
    )?;
    Ok(gb.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    fn setup(vars: &[&str]) -> (Arc<Ring>, impl Fn(&str) -> Polynomial) {
        let r = Ring::new(vars).unwrap();
        let r2 = r.clone();
        (r, move |s: &str| parse_polynomial(s, &r2).unwrap())
    }

    #[test]
    fn division_examples() {
        let (_, p) = setup(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        assert_eq!(normal_form(&p("x^2"), &[p("x^2 - y")], &lex), p("y"));
        assert_eq!(normal_form(&p("y"), &[p("x^2 - y")], &lex), p("y"));
        let f = p("x^3*y - 2*x + 7");
        assert!(normal_form(&f, std::slice::from_ref(&f), &lex).is_zero());
    }

    #[test]
    fn s_polynomial_examples() {
        let (_, p) = setup(&["x", "y"]);
        let lex = MonomialOrder::lex(2);
        let s = s_polynomial(&p("x^2 - y"), &p("x*y - 1"), &lex);
        assert!(s == p("x - y^2") || s == p("y^2 - x"), "{}", s);
        let f = p("3*x^2 + y");
        assert!(s_polynomial(&f, &f, &lex).is_zero());
        let a = p("x^2 + 1");
        let b = p("y^2 + 1");
        let s = s_polynomial(&a, &b, &lex);
        assert!(normal_form(&s, &[a, b], &lex).is_zero());
    }

    #[test]
    fn twisted_cubic_eliminant() {
        let (r, p) = setup(&["x", "y", "z"]);
        let lex = MonomialOrder::lex(3);
        let gens = vec![p("x^2 - y"), p("x^3 - z")];
        let gb = groebner_basis(&r, &gens, &lex, GbLimits::unlimited()).unwrap();
        assert!(gb.polys().contains(&p("y^3 - z^2")), "{:?}", gb);
        assert!(is_groebner_basis(gb.polys(), &lex));
        assert!(is_reduced(gb.polys(), &lex));
        for g in &gens {
            assert!(gb.contains(g));
        }

        let ideal = Ideal::new(&r, gens).unwrap();
        let e = eliminate(&ideal, &["x"]).unwrap();
        let (r2, q) = setup(&["y", "z"]);
        assert_eq!(e.ring().as_ref(), r2.as_ref());
        assert!(ideal_equal(&e, &Ideal::new(e.ring(), vec![q("y^3 - z^2")]).unwrap()).unwrap());
        let e_lex =
            eliminate_with(&ideal, &["x"], EliminationOrder::Lex, GbLimits::unlimited()).unwrap();
        assert!(ideal_equal(&e, &e_lex).unwrap());
    }

    #[test]
    fn elimination_with_no_relation() {
        let (r, p) = setup(&["t", "x"]);
        let e = eliminate(&Ideal::new(&r, vec![p("t*x - 1")]).unwrap(), &["t"]).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn trivial_bases() {
        let (r, p) = setup(&["x", "y"]);
        for ord in [MonomialOrder::lex(2), MonomialOrder::grevlex(2)] {
            let gb = groebner_basis(&r, &[p("x")], &ord, GbLimits::unlimited()).unwrap();
            assert_eq!(gb.polys(), &[p("x")]);
        }
        let gb = groebner_basis(
            &r,
            &[p("x*y - 1"), p("x")],
            &MonomialOrder::grevlex(2),
            GbLimits::unlimited(),
        )
        .unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn membership_and_equality() {
        let (r, p) = setup(&["x", "y"]);
        let f = p("y^2 - x^3");
        let i = Ideal::new(&r, vec![f.clone(), p("x*y + 1")]).unwrap();
        assert!(ideal_membership(&f, &i).unwrap());
        assert!(!ideal_membership(&p("x"), &Ideal::new(&r, vec![p("y")]).unwrap()).unwrap());
        let a = Ideal::new(&r, vec![p("x"), p("y")]).unwrap();
        let b = Ideal::new(&r, vec![p("y"), p("x")]).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        let c = Ideal::new(&r, vec![p("x")]).unwrap();
        let d = Ideal::new(&r, vec![p("x^2")]).unwrap();
        assert!(!ideal_equal(&c, &d).unwrap());
    }

    #[test]
    fn radical_examples() {
        let (r, p) = setup(&["x", "y"]);
        let x2 = Ideal::new(&r, vec![p("x^2")]).unwrap();
        assert!(radical_membership(&p("x"), &x2).unwrap());
        assert!(!radical_membership(&p("y"), &x2).unwrap());
        let i = Ideal::new(&r, vec![p("x^2"), p("y^3")]).unwrap();
        assert!(radical_membership(&p("x*y"), &i).unwrap());
    }

    #[test]
    fn budget_aborts() {
        let (r, p) = setup(&["x", "y", "z"]);
        let gens = vec![p("x^2 - y"), p("x^3 - z"), p("y*z - x")];
        let limits = GbLimits {
            max_pairs: None,
            max_reductions: Some(2),
        };
        let err = groebner_basis(&r, &gens, &MonomialOrder::lex(3), limits).unwrap_err();
        assert!(matches!(err, GroebnerError::BudgetExceeded(_)));
    }

    #[test]
    fn permutation_invariance() {
        let (r, p) = setup(&["x", "y", "z"]);
        let gens = vec![p("x*y - z^2"), p("y^2 - x*z"), p("x^2 - y*z + 1")];
        let ord = MonomialOrder::grevlex(3);
        let base = groebner_basis(&r, &gens, &ord, GbLimits::unlimited()).unwrap();
        assert!(is_groebner_basis(base.polys(), &ord));
        let mut perm = gens.clone();
        perm.reverse();
        perm.push(gens[0].clone());
        let other = groebner_basis(&r, &perm, &ord, GbLimits::unlimited()).unwrap();
        assert_eq!(base.polys(), other.polys());
    }
}
