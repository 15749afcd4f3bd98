//! Buchberger's algorithm on sorted sparse term lists.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree first) and
//! pruned with the Gebauer–Möller installation of Buchberger's two criteria.
//! Basis elements are kept monic.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{GbLimits, GroebnerError};
use crate::multiindex::MultiIndex;
use crate::polynomial::{MonomialOrder, Polynomial, Rational};

/// Terms sorted strictly decreasing under the active order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Terms(pub(crate) Vec<(MultiIndex, Rational)>);

impl Terms {
    pub(crate) fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        Terms(
            p.sorted_terms(ord)
                .into_iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    pub(crate) fn into_poly(self, ring: &std::sync::Arc<crate::Ring>) -> Polynomial {
        Polynomial::from_map(ring, self.0.into_iter().collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn lm(&self) -> &MultiIndex {
        &self.0[0].0
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, lc)) = self.0.first() {
            if lc.is_one() {
                return;
            }
            let inv = lc.recip();
            for (_, c) in self.0.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `a − c·x^shift·b`, where both inputs are sorted; the result stays sorted.
fn sub_mul(
    a: &[(MultiIndex, Rational)],
    c: &Rational,
    shift: &MultiIndex,
    b: &[(MultiIndex, Rational)],
    ord: &MonomialOrder,
) -> Vec<(MultiIndex, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<(MultiIndex, Rational)> = None;
    while i < a.len() || j < b.len() {
        if pending.is_none() && j < b.len() {
            let (m, bc) = &b[j];
            pending = Some((m.add(shift), -(c * bc)));
        }
        match (&pending, a.get(i)) {
            (Some((pm, _)), Some((am, ac))) => match ord.compare(am.exponents(), pm.exponents()) {
                Ordering::Greater => {
                    out.push((am.clone(), ac.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                Ordering::Equal => {
                    let (pm, pc) = pending.take().unwrap();
                    let s = ac + pc;
                    if !s.is_zero() {
                        out.push((pm, s));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(_), None) => {
                out.push(pending.take().unwrap());
                j += 1;
            }
            (None, Some((am, ac))) => {
                out.push((am.clone(), ac.clone()));
                i += 1;
            }
            (None, None) => break,
        }
    }
    out
}

/// Bitmask of variables with non-zero exponent, folded modulo 64.
#[inline]
fn support_mask(m: &MultiIndex) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

pub(crate) struct Reducers<'a> {
    pub(crate) polys: Vec<&'a Terms>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub(crate) fn new(polys: Vec<&'a Terms>) -> Self {
        let masks = polys.iter().map(|p| support_mask(p.lm())).collect();
        Reducers { polys, masks }
    }

    #[inline]
    fn find(&self, m: &MultiIndex) -> Option<usize> {
        let mm = support_mask(m);
        self.polys
            .iter()
            .zip(&self.masks)
            .position(|(g, &gm)| gm & !mm == 0 && g.lm().divides(m))
    }
}

/// Full reduction of `p` modulo `reducers`; returns the remainder and the
/// number of single reduction steps taken.
pub(crate) fn reduce(
    p: Terms,
    reducers: &Reducers<'_>,
    ord: &MonomialOrder,
    mut budget: impl FnMut() -> Result<(), GroebnerError>,
) -> Result<Terms, GroebnerError> {
    let mut work = p.0;
    let mut start = 0;
    let mut rem: Vec<(MultiIndex, Rational)> = Vec::new();
    while start < work.len() {
        let found = reducers.find(&work[start].0);
        match found {
            Some(gi) => {
                budget()?;
                let g = reducers.polys[gi];
                let (m, c) = &work[start];
                let (glm, glc) = &g.0[0];
                let shift = m.sub_unchecked(glm);
                let coeff = if glc.is_one() { c.clone() } else { c / glc };
                work = sub_mul(&work[start + 1..], &coeff, &shift, &g.0[1..], ord);
                start = 0;
            }
            None => {
                let t = std::mem::replace(
                    &mut work[start],
                    (MultiIndex::new(Vec::new()), Rational::zero()),
                );
                rem.push(t);
                start += 1;
            }
        }
    }
    Ok(Terms(rem))
}

/// S-polynomial of two non-zero sorted polynomials, using monic versions.
pub(crate) fn spoly(f: &Terms, g: &Terms, ord: &MonomialOrder) -> Terms {
    let lcm = f.lm().lcm(g.lm());
    let sf = lcm.sub_unchecked(f.lm());
    let sg = lcm.sub_unchecked(g.lm());
    let fc = f.0[0].1.recip();
    let gc = g.0[0].1.recip();
    let left: Vec<(MultiIndex, Rational)> = f.0[1..]
        .iter()
        .map(|(m, c)| (m.add(&sf), c * &fc))
        .collect();
    Terms(sub_mul(&left, &gc, &sg, &g.0[1..], ord))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: MultiIndex,
    deg: u32,
}

pub(crate) struct Buchberger<'a> {
    ord: &'a MonomialOrder,
    limits: GbLimits,
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    reductions: u64,
}

impl<'a> Buchberger<'a> {
    pub(crate) fn new(ord: &'a MonomialOrder, limits: GbLimits) -> Self {
        Buchberger {
            ord,
            limits,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            reductions: 0,
        }
    }

    fn reduce_against_active(&mut self, p: Terms) -> Result<Terms, GroebnerError> {
        let reducers = Reducers::new(
            self.polys
                .iter()
                .zip(&self.active)
                .filter(|(_, &a)| a)
                .map(|(p, _)| p)
                .collect(),
        );
        let limit = self.limits.max_reductions;
        let counter = &mut self.reductions;
        reduce(p, &reducers, self.ord, || {
            *counter += 1;
            match limit {
                Some(l) if *counter > l => Err(GroebnerError::BudgetExceeded(format!(
                    "more than {} reduction steps",
                    l
                ))),
                _ => Ok(()),
            }
        })
    }

    /// Adds a generator and completes the basis.
    pub(crate) fn insert(&mut self, p: Terms) -> Result<(), GroebnerError> {
        let mut h = self.reduce_against_active(p)?;
        if h.is_zero() {
            return Ok(());
        }
        h.make_monic();
        self.update(h)?;
        self.complete()
    }

    fn complete(&mut self) -> Result<(), GroebnerError> {
        while let Some(k) = self.select() {
            let pair = self.pairs.swap_remove(k);
            let s = spoly(&self.polys[pair.i], &self.polys[pair.j], self.ord);
            let mut h = self.reduce_against_active(s)?;
            if h.is_zero() {
                continue;
            }
            h.make_monic();
            self.update(h)?;
        }
        Ok(())
    }

    fn select(&self) -> Option<usize> {
        let ord = self.ord;
        self.pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.deg
                    .cmp(&b.deg)
                    .then_with(|| ord.compare(a.lcm.exponents(), b.lcm.exponents()))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)
    }

    /// Gebauer–Möller update for a new monic, reduced element `h`.
    fn update(&mut self, h: Terms) -> Result<(), GroebnerError> {
        let hidx = self.polys.len();
        let hlm = h.lm().clone();

        let mut candidates: Vec<Pair> = self
            .polys
            .iter()
            .enumerate()
            .filter(|(g, _)| self.active[*g])
            .map(|(g, p)| {
                let lcm = p.lm().lcm(&hlm);
                let deg = lcm.total_degree();
                Pair {
                    i: g,
                    j: hidx,
                    lcm,
                    deg,
                }
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs are kept here so
        // that they can eliminate others, then dropped.
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.polys[p.i].lm().is_coprime(&hlm);
            let dominated = candidates.iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.polys[p.i].lm().is_coprime(&hlm));

        // Old pairs made redundant by h.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm(&hlm);
            let l2 = polys[p.j].lm().lcm(&hlm);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(kept);

        for g in 0..self.polys.len() {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);

        if let Some(limit) = self.limits.max_pairs {
            if self.pairs.len() > limit {
                return Err(GroebnerError::BudgetExceeded(format!(
                    "pair queue exceeded {} entries",
                    limit
                )));
            }
        }
        Ok(())
    }

    /// The reduced basis, sorted by increasing leading monomial.
    pub(crate) fn finish(self) -> Result<Vec<Terms>, GroebnerError> {
        let ord = self.ord;
        let mut basis: Vec<Terms> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        basis.sort_by(|a, b| ord.compare(a.lm().exponents(), b.lm().exponents()));
        let mut out = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<&Terms> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p)
                .collect();
            let reducers = Reducers::new(others);
            let head = basis[k].0[0].clone();
            let tail = Terms(basis[k].0[1..].to_vec());
            let reduced = reduce(tail, &reducers, ord, || Ok(()))?;
            let mut terms = Vec::with_capacity(reduced.0.len() + 1);
            terms.push(head);
            terms.extend(reduced.0);
            out.push(Terms(terms));
        }
        Ok(out)
    }
}
