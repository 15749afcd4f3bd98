//! Sparse multivariate polynomials with exact rational coefficients.

mod order;
mod point;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::multiindex::MultiIndex;

pub use order::{Block, MonomialOrder, OrderKind};
pub use point::RationalPoint;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("division is not exact")]
    NotDivisible,
}

/// An ordered list of variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Arc<Ring>, PolyError> {
        if vars.is_empty() {
            return Err(PolyError::InvalidRing("no variables".into()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidRing(format!(
                    "`{}` is not an identifier",
                    v
                )));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!(
                    "duplicate variable `{}`",
                    v
                )));
            }
        }
        Ok(Arc::new(Ring { vars }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial over ℚ in the variables of `ring`. Zero coefficients are
/// never stored.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, MultiIndex::zero(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, MultiIndex::unit(ring.nvars(), i), Rational::one())
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<Ring>, exp: MultiIndex, c: Rational) -> Self {
        assert_eq!(
            exp.len(),
            ring.nvars(),
            "exponent length must match the ring"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from terms, summing repeated exponents.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut map: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != ring.nvars() {
                return Err(PolyError::DimensionMismatch {
                    expected: ring.nvars(),
                    found: exp.len(),
                });
            }
            *map.entry(exp).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ring: ring.clone(),
            terms: map,
        })
    }

    /// Terms that are already distinct and non-zero.
    pub(crate) fn from_map(ring: &Arc<Ring>, terms: BTreeMap<MultiIndex, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &MultiIndex) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zero(self.nvars()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[var] > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Terms sorted from largest to smallest under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&MultiIndex, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.compare(b.0.exponents(), a.0.exponents()));
        v
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&MultiIndex, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0.exponents(), b.0.exponents()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&MultiIndex> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// `self` divided by its leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, -c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut terms: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.add(m2);
                let c = c1 * c2;
                match terms.get_mut(&m) {
                    Some(acc) => *acc += c,
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c·x^exp`.
    pub fn mul_term(&self, exp: &MultiIndex, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.add(exp), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The iterated partial derivative `∂^α f`.
    pub fn derivative(&self, alpha: &MultiIndex) -> Polynomial {
        assert_eq!(
            alpha.len(),
            self.nvars(),
            "derivative index length must match the ring"
        );
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !alpha.divides(m) {
                continue;
            }
            let mut factor = BigInt::one();
            for (&e, &a) in m.exponents().iter().zip(alpha.exponents()) {
                for k in 0..a {
                    factor *= BigInt::from(e - k);
                }
            }
            terms.insert(m.sub_unchecked(alpha), c * Rational::from_integer(factor));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `∂f/∂x_var`.
    pub fn partial(&self, var: usize) -> Polynomial {
        self.derivative(&MultiIndex::unit(self.nvars(), var))
    }

    /// The Taylor coefficient `∂^α f / α!`.
    pub fn taylor_coeff(&self, alpha: &MultiIndex) -> Polynomial {
        let d = self.derivative(alpha);
        let fact = Rational::from_integer(BigInt::from(alpha.factorial()));
        d.scale(&fact.recip())
    }

    pub fn evaluate(&self, p: &RationalPoint) -> Result<Rational, PolyError> {
        if p.len() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                found: p.len(),
            });
        }
        let mut powers: Vec<Vec<Rational>> = p
            .coords()
            .iter()
            .map(|c| vec![Rational::one(), c.clone()])
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &table[1];
                    table.push(next);
                }
                t *= &table[e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images must
    /// share one (possibly different) target ring.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(PolyError::InvalidRing("no variables".into())),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &table[1];
                    table.push(next);
                }
                t = &t * &table[e as usize];
            }
            for (m2, c2) in t.terms {
                accumulate(&mut acc, &m2, c2);
            }
        }
        Ok(Polynomial {
            ring: target,
            terms: acc,
        })
    }

    /// Simultaneous substitution of the named variables; variables without
    /// an assignment stay unchanged.
    pub fn substitute(&self, assignments: &[(&str, Polynomial)]) -> Result<Polynomial, PolyError> {
        let mut images: Vec<Polynomial> = (0..self.nvars())
            .map(|i| Polynomial::var(&self.ring, i))
            .collect();
        for (name, image) in assignments {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            if !same_ring(&image.ring, &self.ring) {
                return Err(PolyError::RingMismatch);
            }
            images[i] = image.clone();
        }
        self.compose(&images)
    }

    /// Sets the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponents()[v] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `var_map[i]` of the target ring.
    pub fn rename_into(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.nvars());
        let n = target.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; n];
                    for (i, &x) in m.exponents().iter().enumerate() {
                        e[var_map[i]] += x;
                    }
                    (MultiIndex::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// `f(x + shift)`.
    pub fn translate(&self, shift: &RationalPoint) -> Result<Polynomial, PolyError> {
        if shift.len() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                found: shift.len(),
            });
        }
        let images: Vec<Polynomial> = shift
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Polynomial::var(&self.ring, i).try_add(&Polynomial::constant(&self.ring, c.clone()))
            })
            .collect::<Result<_, _>>()?;
        self.compose(&images)
    }

    /// Sum of the terms of minimal total degree.
    pub fn lowest_homogeneous_component(&self) -> Result<Polynomial, PolyError> {
        let d = self
            .terms
            .keys()
            .map(|m| m.total_degree())
            .min()
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree-`d` pieces with respect to the grading that only counts the
    /// listed variables.
    pub fn components_in(&self, vars: &[usize]) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d: u32 = vars.iter().map(|&v| m.exponents()[v]).sum();
            out.entry(d)
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor`, failing if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let ord = MonomialOrder::grevlex(self.nvars());
        let (lm, lc) = divisor.leading_term(&ord).unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term(&ord) {
            if !lm.divides(m) {
                return Err(PolyError::NotDivisible);
            }
            let q_exp = m.sub_unchecked(&lm);
            let q_c = c / &lc;
            rem = &rem - &divisor.mul_term(&q_exp, &q_c);
            quot.insert(q_exp, q_c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }
}

fn accumulate(terms: &mut BTreeMap<MultiIndex, Rational>, m: &MultiIndex, c: Rational) {
    match terms.get_mut(m) {
        Some(acc) => {
            *acc += c;
            if acc.is_zero() {
                terms.remove(m);
            }
        }
        None => {
            if !c.is_zero() {
                terms.insert(m.clone(), c);
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ord = MonomialOrder::grevlex(self.nvars());
        f.write_str(&crate::parser::format_polynomial(self, &ord))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$try(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(vars).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y", "a"]);
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
        assert_eq!(&p(&r, "x+y") + &Polynomial::zero(&r), p(&r, "x+y"));
        let cube = p(&r, "x-2").pow(3);
        assert_eq!(cube.coefficient(&MultiIndex::from([2, 0, 0])), rat(-6));
        assert_eq!(p(&r, "x-a").pow(3), p(&r, "x^3 - 3*a*x^2 + 3*a^2*x - a^3"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring(&["x"]);
        let r2 = ring(&["y"]);
        assert_eq!(
            p(&r1, "x").try_add(&p(&r2, "y")),
            Err(PolyError::RingMismatch)
        );
        // structurally equal rings are the same ring
        let r3 = ring(&["x"]);
        assert!(p(&r1, "x").try_add(&p(&r3, "x")).is_ok());
    }

    #[test]
    fn derivative_examples() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^3-y^2");
        assert_eq!(f.derivative(&MultiIndex::from([1, 0])), p(&r, "3*x^2"));
        assert_eq!(f.derivative(&MultiIndex::from([0, 2])), p(&r, "-2"));
        assert_eq!(f.derivative(&MultiIndex::from([0, 0])), f);
    }

    #[test]
    fn taylor_coeff_examples() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^3-y^2");
        assert_eq!(f.taylor_coeff(&MultiIndex::from([2, 0])), p(&r, "3*x"));
        assert_eq!(f.taylor_coeff(&MultiIndex::from([0, 2])), p(&r, "-1"));
        let r3 = ring(&["x", "y", "z"]);
        let g = p(&r3, "x*y-z^4");
        assert_eq!(
            g.taylor_coeff(&MultiIndex::from([0, 0, 2])),
            p(&r3, "-6*z^2")
        );
    }

    #[test]
    fn evaluate_examples() {
        let r = ring(&["x", "y"]);
        let cusp = p(&r, "x^3-y^2");
        assert_eq!(
            cusp.evaluate(&RationalPoint::from_ints(&[1, 1])).unwrap(),
            rat(0)
        );
        assert_eq!(cusp.evaluate(&RationalPoint::origin(2)).unwrap(), rat(0));
        let node = p(&r, "x^3+x^2-y^2");
        assert_eq!(node.evaluate(&RationalPoint::origin(2)).unwrap(), rat(0));
        assert_eq!(
            cusp.evaluate(&RationalPoint::from_ints(&[1, 2])).unwrap(),
            rat(-3)
        );
        assert!(matches!(
            cusp.evaluate(&RationalPoint::origin(3)),
            Err(PolyError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn substitute_examples() {
        let r = ring(&["t", "x", "u1"]);
        let f = p(&r, "u1 - t*x^2");
        assert_eq!(
            f.substitute(&[("x", Polynomial::zero(&r))]).unwrap(),
            p(&r, "u1")
        );
        let r2 = ring(&["x", "y"]);
        let cusp = p(&r2, "x^3-y^2");
        assert_eq!(
            cusp.substitute(&[("x", p(&r2, "x+1"))]).unwrap(),
            p(&r2, "x^3+3*x^2+3*x+1-y^2")
        );
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(
            p(&r3, "x*y-z^4")
                .substitute(&[("z", Polynomial::zero(&r3))])
                .unwrap(),
            p(&r3, "x*y")
        );
        assert_eq!(
            cusp.substitute(&[("w", Polynomial::zero(&r2))]),
            Err(PolyError::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn lowest_component_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            p(&r, "x^3-y^2").lowest_homogeneous_component().unwrap(),
            p(&r, "-y^2")
        );
        assert_eq!(
            p(&r, "x^3+x^2-y^2").lowest_homogeneous_component().unwrap(),
            p(&r, "x^2-y^2")
        );
        assert_eq!(
            p(&r, "x*y+y^2").lowest_homogeneous_component().unwrap(),
            p(&r, "x*y+y^2")
        );
        assert_eq!(
            Polynomial::zero(&r).lowest_homogeneous_component(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let a = p(&r, "x^2 - y^2");
        assert_eq!(a.div_exact(&p(&r, "x+y")).unwrap(), p(&r, "x-y"));
        assert_eq!(a.div_exact(&p(&r, "x+2")), Err(PolyError::NotDivisible));
    }
}
