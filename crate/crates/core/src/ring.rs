//! Sparse multivariate polynomials over an explicit ring context.
//!
//! A [`RingContext`] fixes the variable names, their storage order, and a
//! strictly positive integer weight per variable. Polynomials hold an
//! `Arc` to their context and refuse mixed-context arithmetic, so a value
//! can never silently migrate between the coordinate ring, the ambient
//! presentation ring, and the extended ring with the tag variable.

use crate::field::Coeff;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different ring contexts")]
    ContextMismatch,
    #[error("variable `{0}` has no assigned image")]
    MissingImage(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

/// Ordered list of named variables with strictly positive weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
    weights: Vec<u64>,
}

impl RingContext {
    /// Builds a context from `(name, weight)` pairs. Names must be unique
    /// and nonempty, weights strictly positive.
    pub fn new(vars: &[(&str, u64)]) -> Arc<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, weight) in vars {
            assert!(!name.is_empty(), "empty variable name");
            assert!(seen.insert(*name), "duplicate variable `{name}`");
            assert!(*weight > 0, "variable `{name}` has weight zero");
        }
        Arc::new(RingContext {
            vars: vars.iter().map(|(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|(_, w)| *w).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// For a context whose variables (by name) all appear in `sup` with equal
    /// weights, returns the index of each of our variables inside `sup`.
    pub fn embedding_into(&self, sup: &RingContext) -> Option<Vec<usize>> {
        self.vars
            .iter()
            .zip(&self.weights)
            .map(|(name, w)| {
                let j = sup.index_of(name)?;
                (sup.weight(j) == *w).then_some(j)
            })
            .collect()
    }

    /// New context with the named variables removed (storage order kept).
    pub fn without(&self, drop: &[&str]) -> Arc<RingContext> {
        for name in drop {
            assert!(
                self.index_of(name).is_some(),
                "cannot drop unknown variable `{name}`"
            );
        }
        let pairs: Vec<(&str, u64)> = self
            .vars
            .iter()
            .zip(&self.weights)
            .filter(|(n, _)| !drop.contains(&n.as_str()))
            .map(|(n, w)| (n.as_str(), *w))
            .collect();
        RingContext::new(&pairs)
    }
}

/// Exponent vector aligned with a `RingContext`'s storage order.
///
/// The derived `Ord` is only the structural (storage) order used for map
/// keys; monomial orders live in the `order` module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree with respect to per-variable weights, optionally
    /// skipping one variable index (used for weight-of-the-residual-part).
    pub fn weighted_degree(&self, weights: &[u64], skip: Option<usize>) -> u128 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .map(|(i, &e)| e as u128 * weights[i] as u128)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`; `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Sparse polynomial: context handle plus `monomial -> coefficient` map
/// with no explicit zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coeff> {
    ctx: Arc<RingContext>,
    terms: BTreeMap<Monomial, C>,
}

/// The concrete instantiation used by the verification pipeline.
pub type QPoly = Polynomial<crate::field::Rat>;

impl<C: Coeff> Polynomial<C> {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Polynomial {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<RingContext>, c: C) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn from_i64(ctx: &Arc<RingContext>, n: i64) -> Self {
        Self::constant(ctx, C::from_i64(n))
    }

    pub fn var(ctx: &Arc<RingContext>, name: &str) -> Result<Self, AlgebraError> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_by_index(ctx, i, 1))
    }

    pub fn var_by_index(ctx: &Arc<RingContext>, i: usize, exp: u32) -> Self {
        let mut exps = vec![0u32; ctx.len()];
        exps[i] = exp;
        Self::monomial(ctx, Monomial::from_exps(exps), C::one())
    }

    pub fn monomial(ctx: &Arc<RingContext>, mono: Monomial, c: C) -> Self {
        assert_eq!(mono.nvars(), ctx.len(), "monomial arity mismatch");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn from_terms(
        ctx: &Arc<RingContext>,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_assign_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending structural order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&C> {
        self.terms.get(mono)
    }

    pub fn ensure_same_ctx(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    fn add_assign_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_assign_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg_ref();
        }
        out
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul_ref(c);
        }
        out
    }

    /// `self * c * mono` in one pass (the workhorse of division).
    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = Self::zero(&self.ctx);
        for (m, v) in &self.terms {
            out.terms.insert(m.mul(mono), v.mul_ref(c));
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_i64(&self.ctx, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).expect("same context");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.try_mul(&base).expect("same context");
            }
        }
        acc
    }

    /// Ring homomorphism given by a variable-by-name assignment. Every
    /// variable actually occurring in `self` must have an image, and all
    /// images must live in one shared target context.
    pub fn substitute(
        &self,
        images: &BTreeMap<String, Polynomial<C>>,
    ) -> Result<Polynomial<C>, AlgebraError> {
        let target: Arc<RingContext> = match images.values().next() {
            Some(p) => Arc::clone(&p.ctx),
            None => Arc::clone(&self.ctx),
        };
        for img in images.values() {
            if img.ctx != target {
                return Err(AlgebraError::ContextMismatch);
            }
        }
        let mut out = Polynomial::zero(&target);
        for (mono, coeff) in &self.terms {
            let mut term = Polynomial::constant(&target, coeff.clone());
            for i in mono.support() {
                let name = self.ctx.name(i);
                let img = images
                    .get(name)
                    .ok_or_else(|| AlgebraError::MissingImage(name.to_string()))?;
                term = term.try_mul(&img.pow(mono.exp(i)))?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, name: &str) -> Result<Polynomial<C>, AlgebraError> {
        let i = self
            .ctx
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut out = Polynomial::zero(&self.ctx);
        for (mono, coeff) in &self.terms {
            let e = mono.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = mono.exps().to_vec();
            exps[i] -= 1;
            out.add_assign_term(Monomial::from_exps(exps), coeff.mul_ref(&C::from_i64(e as i64)));
        }
        Ok(out)
    }

    /// Largest term under the given comparator on monomials.
    pub fn max_term_by(
        &self,
        mut cmp: impl FnMut(&Monomial, &Monomial) -> std::cmp::Ordering,
    ) -> Option<(&Monomial, &C)> {
        let mut best: Option<(&Monomial, &C)> = None;
        for (m, c) in &self.terms {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if cmp(m, bm) == std::cmp::Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best
    }

    /// Re-expresses the polynomial in a context containing all our
    /// variables (by name, with equal weights).
    pub fn lift_to(&self, sup: &Arc<RingContext>) -> Result<Polynomial<C>, AlgebraError> {
        let map = self
            .ctx
            .embedding_into(sup)
            .ok_or(AlgebraError::ContextMismatch)?;
        let mut out = Polynomial::zero(sup);
        for (mono, coeff) in &self.terms {
            let mut exps = vec![0u32; sup.len()];
            for (i, &e) in mono.exps().iter().enumerate() {
                exps[map[i]] = e;
            }
            out.terms.insert(Monomial::from_exps(exps), coeff.clone());
        }
        Ok(out)
    }

    /// Projects into a subcontext; fails with `UnknownVariable` when a term
    /// involves a variable missing from the subcontext.
    pub fn project_to(&self, sub: &Arc<RingContext>) -> Result<Polynomial<C>, AlgebraError> {
        let map = sub
            .embedding_into(&self.ctx)
            .ok_or(AlgebraError::ContextMismatch)?;
        let kept: std::collections::BTreeSet<usize> = map.iter().copied().collect();
        let mut out = Polynomial::zero(sub);
        for (mono, coeff) in &self.terms {
            for i in mono.support() {
                if !kept.contains(&i) {
                    return Err(AlgebraError::UnknownVariable(self.ctx.name(i).to_string()));
                }
            }
            let exps: Vec<u32> = map.iter().map(|&j| mono.exp(j)).collect();
            out.terms.insert(Monomial::from_exps(exps), coeff.clone());
        }
        Ok(out)
    }
}

macro_rules! ring_ops {
    ($trait:ident, $fn:ident, $checked:ident) => {
        impl<'a, C: Coeff> $trait<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $fn(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("ring context mismatch")
            }
        }
    };
}
ring_ops!(Add, add, try_add);
ring_ops!(Sub, sub, try_sub);
ring_ops!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.negated()
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    /// Fallback rendering in descending structural order; canonical,
    /// order-aware text lives in the `text` module.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos: Vec<&Monomial> = self.terms.keys().rev().collect();
        write!(f, "{}", crate::text::render_terms(self, monos.into_iter()))
    }
}
