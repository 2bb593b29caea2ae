//! Multivariate division, Buchberger's algorithm, Gröbner-basis
//! verification, elimination, ideal membership/equality, and the dimension
//! of a monomial ideal.
//!
//! Everything here is exact and deterministic: pair selection is a total
//! order (lcm under the active monomial order, then indices), additions to
//! the basis are monic, and every division re-checks its own contract
//! (`f = Σ qᵢgᵢ + r`, irreducible remainder, leading-monomial bounds)
//! before returning.

use crate::field::Coeff;
use crate::order::{leading_monomial, leading_term, OrderSpec};
use crate::ring::{Monomial, Polynomial, RingContext};
use std::cmp::Ordering;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroebnerError {
    #[error("operands live in different ring contexts")]
    ContextMismatch,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("the order does not eliminate the requested variables")]
    OrderNotEliminating,
    #[error("input set is not a Gr\u{f6}bner basis")]
    NotAGroebnerBasis,
    #[error(
        "resource limit exceeded after {steps} reduction steps \
         (basis size {basis_size}, pending pairs {pending_pairs})"
    )]
    ResourceLimit {
        steps: u64,
        basis_size: usize,
        pending_pairs: usize,
    },
}

/// Step budget for engine operations. One "step" is one leading-term
/// cancellation or one term moved to a remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 1_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_steps(max_steps: u64) -> Self {
        Limits { max_steps }
    }
}

/// Mutable step counter shared across one logical engine run.
#[derive(Debug)]
struct Budget {
    max_steps: u64,
    steps: u64,
}

impl Budget {
    fn new(limits: &Limits) -> Self {
        Budget {
            max_steps: limits.max_steps,
            steps: 0,
        }
    }

    fn tick(&mut self, basis_size: usize, pending_pairs: usize) -> Result<(), GroebnerError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            Err(GroebnerError::ResourceLimit {
                steps: self.steps,
                basis_size,
                pending_pairs,
            })
        } else {
            Ok(())
        }
    }
}

/// Generators plus the order they are to be read under.
#[derive(Debug, Clone)]
pub struct IdealPresentation<C: Coeff> {
    gens: Vec<Polynomial<C>>,
    order: OrderSpec,
}

impl<C: Coeff> IdealPresentation<C> {
    pub fn new(gens: Vec<Polynomial<C>>, order: OrderSpec) -> Result<Self, GroebnerError> {
        for g in &gens {
            if g.is_zero() {
                return Err(GroebnerError::ZeroPolynomial);
            }
            if g.ctx() != order.ctx() {
                return Err(GroebnerError::ContextMismatch);
            }
        }
        Ok(IdealPresentation { gens, order })
    }

    pub fn gens(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }
}

/// Outcome of one division: `f = Σ quotients[i]·basis[i] + remainder`.
#[derive(Debug, Clone)]
pub struct Division<C: Coeff> {
    pub quotients: Vec<Polynomial<C>>,
    pub remainder: Polynomial<C>,
    pub steps: u64,
}

/// Witness for one S-pair examined by `is_groebner_basis`.
#[derive(Debug, Clone)]
pub struct SPairCertificate<C: Coeff> {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub skipped_coprime: bool,
    pub remainder: Polynomial<C>,
    pub steps: u64,
}

impl<C: Coeff> SPairCertificate<C> {
    pub fn confirms(&self) -> bool {
        self.skipped_coprime || self.remainder.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Normal,
    Sugar,
}

/// Two-sided inclusion verdict between ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealEquality {
    /// Every generator of the first ideal lies in the second.
    pub forward: bool,
    /// Every generator of the second ideal lies in the first.
    pub backward: bool,
}

impl IdealEquality {
    pub fn holds(&self) -> bool {
        self.forward && self.backward
    }
}

fn divide_with_budget<C: Coeff>(
    f: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &OrderSpec,
    budget: &mut Budget,
) -> Result<Division<C>, GroebnerError> {
    if f.ctx() != order.ctx() {
        return Err(GroebnerError::ContextMismatch);
    }
    let mut lead: Vec<(Monomial, C)> = Vec::with_capacity(basis.len());
    for g in basis {
        if g.is_zero() {
            return Err(GroebnerError::ZeroPolynomial);
        }
        if g.ctx() != order.ctx() {
            return Err(GroebnerError::ContextMismatch);
        }
        let (m, c) = leading_term(g, order).expect("nonzero");
        lead.push((m.clone(), c.clone()));
    }

    let ctx = f.ctx();
    let mut quotients = vec![Polynomial::zero(ctx); basis.len()];
    let mut remainder = Polynomial::zero(ctx);
    let mut p = f.clone();
    let start_steps = budget.steps;
    let mut prev_lm: Option<Monomial> = None;

    while !p.is_zero() {
        budget.tick(basis.len(), 0)?;
        let (pm, pc) = p.max_term_by(|a, b| order.cmp(a, b)).expect("nonzero");
        let (pm, pc) = (pm.clone(), pc.clone());
        // Termination witness: the working leading monomial strictly falls.
        if let Some(prev) = &prev_lm {
            assert_eq!(
                order.cmp(&pm, prev),
                Ordering::Less,
                "division leading monomial failed to decrease"
            );
        }
        prev_lm = Some(pm.clone());
        match lead
            .iter()
            .position(|(lm, _)| lm.divides(&pm))
        {
            Some(k) => {
                let factor_mono = pm.div(&lead[k].0).expect("divisibility checked");
                let factor_coeff = pc.mul_ref(&lead[k].1.inv());
                quotients[k] = quotients[k]
                    .try_add(&Polynomial::monomial(ctx, factor_mono.clone(), factor_coeff.clone()))
                    .expect("same context");
                p = p
                    .try_sub(&basis[k].mul_term(&factor_mono, &factor_coeff))
                    .expect("same context");
            }
            None => {
                let term = Polynomial::monomial(ctx, pm.clone(), pc.clone());
                remainder = remainder.try_add(&term).expect("same context");
                p = p.try_sub(&term).expect("same context");
            }
        }
    }

    let steps = budget.steps - start_steps;
    let outcome = Division {
        quotients,
        remainder,
        steps,
    };
    check_division_contract(f, basis, order, &lead, &outcome);
    Ok(outcome)
}

/// The division contract, re-verified after every division.
fn check_division_contract<C: Coeff>(
    f: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &OrderSpec,
    lead: &[(Monomial, C)],
    out: &Division<C>,
) {
    for (m, _) in out.remainder.terms() {
        assert!(
            lead.iter().all(|(lm, _)| !lm.divides(m)),
            "remainder term is still reducible"
        );
    }
    let mut recombined = out.remainder.clone();
    for (q, g) in out.quotients.iter().zip(basis) {
        recombined = recombined.try_add(&q.try_mul(g).expect("ctx")).expect("ctx");
    }
    assert!(
        recombined == *f,
        "division identity f = sum(q*g) + r failed"
    );
    if let Ok(fm) = leading_monomial(f, order) {
        for (q, (gm, _)) in out.quotients.iter().zip(lead) {
            if q.is_zero() {
                continue;
            }
            let qm = leading_monomial(q, order).expect("nonzero");
            assert_ne!(
                order.cmp(&qm.mul(gm), &fm),
                Ordering::Greater,
                "quotient product exceeds the dividend's leading monomial"
            );
        }
    }
}

/// Divides `f` by the list, returning quotients and the irreducible
/// remainder. Divisor choice is first-match in list order (deterministic).
pub fn divide<C: Coeff>(
    f: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: &OrderSpec,
    limits: &Limits,
) -> Result<Division<C>, GroebnerError> {
    let mut budget = Budget::new(&Limits {
        max_steps: limits.max_steps,
    });
    divide_with_budget(f, basis, order, &mut budget)
}

/// The S-polynomial `lcm/LT(f)·f − lcm/LT(g)·g`.
pub fn s_polynomial<C: Coeff>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: &OrderSpec,
) -> Result<Polynomial<C>, GroebnerError> {
    let (fm, fc) = leading_term(f, order).map_err(|_| GroebnerError::ZeroPolynomial)?;
    let (gm, gc) = leading_term(g, order).map_err(|_| GroebnerError::ZeroPolynomial)?;
    let lcm = fm.lcm(gm);
    let left = f.mul_term(&lcm.div(fm).expect("lcm"), &fc.inv());
    let right = g.mul_term(&lcm.div(gm).expect("lcm"), &gc.inv());
    Ok(left.try_sub(&right).expect("same context"))
}

/// Normalizes to leading coefficient 1.
pub fn monic<C: Coeff>(f: &Polynomial<C>, order: &OrderSpec) -> Polynomial<C> {
    match leading_term(f, order) {
        Ok((_, c)) => {
            let inv = c.inv();
            f.scaled(&inv)
        }
        Err(_) => f.clone(),
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn pair_sugar<C: Coeff>(
    basis: &[Polynomial<C>],
    lms: &[Monomial],
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> u64 {
    let s = |k: usize| -> u64 {
        let total = basis[k]
            .terms()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0);
        total - lms[k].total_degree() + lcm.total_degree()
    };
    s(i).max(s(j))
}

fn select_pair(pairs: &[Pair], order: &OrderSpec, strategy: Strategy) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let better = match strategy {
            Strategy::Normal => match order.cmp(&pairs[k].lcm, &pairs[best].lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (pairs[k].i, pairs[k].j) < (pairs[best].i, pairs[best].j),
            },
            Strategy::Sugar => {
                let key_k = (pairs[k].sugar, &pairs[k].lcm, pairs[k].i, pairs[k].j);
                let key_b = (pairs[best].sugar, &pairs[best].lcm, pairs[best].i, pairs[best].j);
                match key_k.0.cmp(&key_b.0) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => match order.cmp(key_k.1, key_b.1) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => (key_k.2, key_k.3) < (key_b.2, key_b.3),
                    },
                }
            }
        };
        if better {
            best = k;
        }
    }
    best
}

/// Buchberger's algorithm. Inputs are kept verbatim; every polynomial the
/// run adds is monic. Coprime-leading-monomial pairs are skipped.
pub fn buchberger<C: Coeff>(
    pres: &IdealPresentation<C>,
    strategy: Strategy,
    limits: &Limits,
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    assert!(!pres.gens().is_empty(), "empty generating set");
    let order = pres.order();
    let mut basis: Vec<Polynomial<C>> = pres.gens().to_vec();
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| leading_monomial(g, order).expect("nonzero"))
        .collect();
    let mut budget = Budget::new(limits);

    let mut pairs: Vec<Pair> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            let lcm = lms[i].lcm(&lms[j]);
            let sugar = pair_sugar(&basis, &lms, i, j, &lcm);
            pairs.push(Pair { i, j, lcm, sugar });
        }
    }

    while !pairs.is_empty() {
        let k = select_pair(&pairs, order, strategy);
        let pair = pairs.swap_remove(k);
        if lms[pair.i].coprime_with(&lms[pair.j]) {
            continue; // Buchberger's first criterion.
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order)?;
        if s.is_zero() {
            continue;
        }
        let reduced = divide_with_budget(&s, &basis, order, &mut budget)
            .map_err(|e| enrich_limit(e, basis.len(), pairs.len()))?
            .remainder;
        if reduced.is_zero() {
            continue;
        }
        let new = monic(&reduced, order);
        let new_lm = leading_monomial(&new, order).expect("nonzero");
        let new_index = basis.len();
        for i in 0..new_index {
            let lcm = lms[i].lcm(&new_lm);
            let sugar = pair_sugar(&basis, &lms, i, i, &lcm)
                .max(new.terms().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
                    - new_lm.total_degree()
                    + lcm.total_degree());
            pairs.push(Pair {
                i,
                j: new_index,
                lcm,
                sugar,
            });
        }
        basis.push(new);
        lms.push(new_lm);
    }

    // The construction keeps every input generator, so the output ideal
    // contains the input; confirm the converse direction explicitly.
    for g in pres.gens() {
        let r = divide_with_budget(g, &basis, order, &mut budget)?.remainder;
        assert!(r.is_zero(), "input generator escaped its own basis");
    }
    Ok(basis)
}

fn enrich_limit(e: GroebnerError, basis_size: usize, pending_pairs: usize) -> GroebnerError {
    match e {
        GroebnerError::ResourceLimit { steps, .. } => GroebnerError::ResourceLimit {
            steps,
            basis_size,
            pending_pairs,
        },
        other => other,
    }
}

/// Checks Buchberger's criterion pair by pair, returning a certificate for
/// every pair (coprime skips included).
pub fn is_groebner_basis<C: Coeff>(
    basis: &[Polynomial<C>],
    order: &OrderSpec,
    limits: &Limits,
) -> Result<(bool, Vec<SPairCertificate<C>>), GroebnerError> {
    assert!(!basis.is_empty(), "empty basis");
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| leading_monomial(g, order).map_err(|_| GroebnerError::ZeroPolynomial))
        .collect::<Result<_, _>>()?;
    let mut budget = Budget::new(limits);
    let mut certs = Vec::new();
    let mut all_zero = true;
    for j in 1..basis.len() {
        for i in 0..j {
            let lcm = lms[i].lcm(&lms[j]);
            if lms[i].coprime_with(&lms[j]) {
                certs.push(SPairCertificate {
                    i,
                    j,
                    lcm,
                    skipped_coprime: true,
                    remainder: Polynomial::zero(basis[0].ctx()),
                    steps: 0,
                });
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            let div = divide_with_budget(&s, basis, order, &mut budget)?;
            if !div.remainder.is_zero() {
                all_zero = false;
            }
            certs.push(SPairCertificate {
                i,
                j,
                lcm,
                skipped_coprime: false,
                remainder: div.remainder,
                steps: div.steps,
            });
        }
    }
    Ok((all_zero, certs))
}

/// Minimal, fully reduced, monic Gröbner basis sorted by descending
/// leading monomial — the canonical form for the (ideal, order) pair.
pub fn minimalize_and_reduce<C: Coeff>(
    basis: &[Polynomial<C>],
    order: &OrderSpec,
    limits: &Limits,
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let (ok, _) = is_groebner_basis(basis, order, limits)?;
    if !ok {
        return Err(GroebnerError::NotAGroebnerBasis);
    }
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| leading_monomial(g, order).expect("nonzero"))
        .collect();
    // Minimal: keep an element only if no *other kept* leading monomial
    // divides its own. Processing in ascending LM order keeps the smallest
    // representative of duplicate leading monomials.
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&lms[a], &lms[b]).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for &k in &idx {
        if kept.iter().all(|&e| !lms[e].divides(&lms[k])) {
            kept.push(k);
        }
    }
    // Fully reduce each kept element against the others.
    let mut budget = Budget::new(limits);
    let mut out: Vec<Polynomial<C>> = Vec::new();
    for (pos, &k) in kept.iter().enumerate() {
        let others: Vec<Polynomial<C>> = kept
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, &e)| basis[e].clone())
            .collect();
        let reduced = if others.is_empty() {
            basis[k].clone()
        } else {
            divide_with_budget(&basis[k], &others, order, &mut budget)?.remainder
        };
        assert!(!reduced.is_zero(), "minimal element reduced to zero");
        out.push(monic(&reduced, order));
    }
    out.sort_by(|f, g| {
        let fm = leading_monomial(f, order).expect("nonzero");
        let gm = leading_monomial(g, order).expect("nonzero");
        order.cmp(&gm, &fm)
    });
    Ok(out)
}

/// Shrunk ring, surviving basis members, and the restricted order
/// produced by [`eliminate`].
pub type Elimination<C> = (Arc<RingContext>, Vec<Polynomial<C>>, OrderSpec);

/// Contraction of a Gröbner basis to the subring without `drop`.
///
/// Requires an order that eliminates exactly `drop`; the caller must pass a
/// genuine Gröbner basis (this is what makes the filtered subset a basis of
/// the elimination ideal).
pub fn eliminate<C: Coeff>(
    gb: &[Polynomial<C>],
    order: &OrderSpec,
    drop: &[&str],
) -> Result<Elimination<C>, GroebnerError> {
    if !order.eliminates(drop) {
        return Err(GroebnerError::OrderNotEliminating);
    }
    let sub = order.ctx().without(drop);
    let restricted = order
        .restricted_order(&sub)
        .expect("shrunk context is a subcontext");
    let mut kept = Vec::new();
    for g in gb {
        match g.project_to(&sub) {
            Ok(p) => kept.push(p),
            Err(crate::ring::AlgebraError::UnknownVariable(_)) => {}
            Err(_) => return Err(GroebnerError::ContextMismatch),
        }
    }
    Ok((sub, kept, restricted))
}

/// Normal-form membership test. `gb` must be a Gröbner basis.
pub fn ideal_membership<C: Coeff>(
    f: &Polynomial<C>,
    gb: &[Polynomial<C>],
    order: &OrderSpec,
    limits: &Limits,
) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(divide(f, gb, order, limits)?.remainder.is_zero())
}

/// Two-sided inclusion test between the ideals spanned by two presentations
/// over one context (the orders may differ; each side uses its own).
pub fn ideals_equal<C: Coeff>(
    a: &IdealPresentation<C>,
    b: &IdealPresentation<C>,
    strategy: Strategy,
    limits: &Limits,
) -> Result<IdealEquality, GroebnerError> {
    if a.order().ctx() != b.order().ctx() {
        return Err(GroebnerError::ContextMismatch);
    }
    let gb_a = buchberger(a, strategy, limits)?;
    let gb_b = buchberger(b, strategy, limits)?;
    let mut forward = true;
    for g in a.gens() {
        if !ideal_membership(g, &gb_b, b.order(), limits)? {
            forward = false;
        }
    }
    let mut backward = true;
    for g in b.gens() {
        if !ideal_membership(g, &gb_a, a.order(), limits)? {
            backward = false;
        }
    }
    Ok(IdealEquality { forward, backward })
}

/// Dimension of the variety of a monomial ideal: the largest variable
/// subset V such that no generator's support is contained in V, found by
/// exhaustive search (fine for ≤ 22 variables).
pub fn monomial_ideal_dimension(gens: &[Monomial], nvars: usize) -> usize {
    assert!(nvars <= 22, "exhaustive dimension search capped at 22 variables");
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| {
            m.support()
                .into_iter()
                .fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << nvars) {
        if supports.iter().any(|s| s & !mask == 0) {
            continue; // some generator survives on V: not independent
        }
        best = best.max(mask.count_ones() as usize);
    }
    best
}
