//! Monomial space curves with parameters in arithmetic progression.
//!
//! The curve is parametrized by `T ↦ (T^{m0}, T^{m1}, T^{m2}, T^{m3})`
//! with `m_i = m0 + i·d`, `gcd(m0, d) = 1`, and `m0 = 3a + b` for unique
//! `a ≥ 1`, `b ∈ {1, 2, 3}`. This module derives and validates those
//! parameters, builds the binomial generating set of the defining prime
//! ideal, and exposes the two substitution homomorphisms used as
//! independent oracles everywhere else:
//!
//! * `eta`: `X_i ↦ T^{m_i}` into `K[T]` (vanishing characterizes the
//!   defining ideal);
//! * the presentation-variable substitution `Φ(i,j) ↦ φ(i,j)·t`,
//!   `Ψ(b,j) ↦ ψ(b,j)·t`, `X_i ↦ X_i` into `K[X, t]` (vanishing
//!   characterizes the Rees relation ideal), implemented in this module so
//!   that it shares *no* code with the Gröbner pipeline it cross-checks.

use crate::field::Rat;
use crate::order::OrderSpec;
use crate::ring::{AlgebraError, QPoly, RingContext};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("m0 must be at least 4 and d at least 1 (got m0={m0}, d={d})")]
    OutOfRange { m0: u64, d: u64 },
    #[error("gcd(m0, d) must be 1 (got gcd {gcd})")]
    NotCoprime { gcd: u64 },
    #[error("m{index} lies in the semigroup generated by the other exponents")]
    NotMinimal { index: usize },
}

/// Validated curve parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveParams {
    pub m0: u64,
    pub d: u64,
    /// `m0 = 3a + b` with `a >= 1`, `1 <= b <= 3`.
    pub a: u64,
    pub b: u64,
    /// `(m0, m1, m2, m3)` with `m_i = m0 + i*d`.
    pub m: [u64; 4],
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// True when `target` is a non-negative integer combination of `gens`.
fn in_semigroup(target: u64, gens: &[u64]) -> bool {
    let mut reachable = vec![false; target as usize + 1];
    reachable[0] = true;
    for v in 1..=target {
        reachable[v as usize] = gens
            .iter()
            .any(|&g| g <= v && reachable[(v - g) as usize]);
    }
    reachable[target as usize]
}

/// Derives and fully validates the parameters for `(m0, d)`.
pub fn derive_params(m0: u64, d: u64) -> Result<CurveParams, CurveError> {
    if m0 < 4 || d < 1 {
        return Err(CurveError::OutOfRange { m0, d });
    }
    let g = gcd(m0, d);
    if g != 1 {
        return Err(CurveError::NotCoprime { gcd: g });
    }
    // m0 = 3a + b with b in {1,2,3}; m0 >= 4 forces a >= 1.
    let (mut a, mut b) = (m0 / 3, m0 % 3);
    if b == 0 {
        a -= 1;
        b = 3;
    }
    let m = [m0, m0 + d, m0 + 2 * d, m0 + 3 * d];
    // Minimal generation: no exponent is a combination of the other three.
    for i in 0..4 {
        let others: Vec<u64> = (0..4).filter(|&j| j != i).map(|j| m[j]).collect();
        if in_semigroup(m[i], &others) {
            return Err(CurveError::NotMinimal { index: i });
        }
    }
    Ok(CurveParams { m0, d, a, b, m })
}

/// `ε(i,j)`: the sum `i+j` capped at 3.
pub fn epsilon(i: i64, j: i64) -> i64 {
    if i + j < 3 {
        i + j
    } else {
        3
    }
}

/// The coordinate ring `R = K[X1, X2, X3, X0]`, weighted by the exponent
/// vector. The weight-minimal variable `X0` is listed last on purpose: the
/// reverse-lex tie-break depends on it.
pub fn coordinate_ring(params: &CurveParams) -> Arc<RingContext> {
    RingContext::new(&[
        ("X1", params.m[1]),
        ("X2", params.m[2]),
        ("X3", params.m[3]),
        ("X0", params.m[0]),
    ])
}

/// Weighted reverse-lex on `R` with sequence `(X1, X2, X3, X0)`.
pub fn coordinate_order(ctx: &Arc<RingContext>) -> OrderSpec {
    OrderSpec::weighted_revlex(ctx, &["X1", "X2", "X3", "X0"])
}

/// `X_i` as a polynomial of `ctx`, or zero when `i` is outside `[0,3]`.
/// `ctx` may be any context containing the `X` variables by name.
pub fn x_var(ctx: &Arc<RingContext>, i: i64) -> QPoly {
    if !(0..=3).contains(&i) {
        return QPoly::zero(ctx);
    }
    QPoly::var(ctx, &format!("X{i}")).expect("context carries X variables")
}

/// `X_i^k`, zero when `i` is out of range (and `k > 0`).
pub fn x_pow(ctx: &Arc<RingContext>, i: i64, k: u32) -> QPoly {
    if k == 0 {
        return QPoly::from_i64(ctx, 1);
    }
    x_var(ctx, i).pow(k)
}

/// `φ(i,j) = X_iX_j − X_{ε}X_{i+j−ε}` for `i, j ∈ [1,2]`; zero otherwise;
/// symmetric in `(i, j)`.
pub fn phi_gen(ctx: &Arc<RingContext>, i: i64, j: i64) -> QPoly {
    if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
        return QPoly::zero(ctx);
    }
    let e = epsilon(i, j);
    let main = &x_var(ctx, i) * &x_var(ctx, j);
    let folded = &x_var(ctx, e) * &x_var(ctx, i + j - e);
    &main - &folded
}

/// `ψ(b,j) = X_{b+j}X_3^a − X_jX_0^{a+d}` for `j ∈ [0, 3−b]`; zero
/// otherwise.
pub fn psi_gen(ctx: &Arc<RingContext>, params: &CurveParams, j: i64) -> QPoly {
    let b = params.b as i64;
    if !(0..=(3 - b)).contains(&j) {
        return QPoly::zero(ctx);
    }
    let a = params.a as u32;
    let ad = (params.a + params.d) as u32;
    let main = &x_var(ctx, b + j) * &x_pow(ctx, 3, a);
    let tail = &x_var(ctx, j) * &x_pow(ctx, 0, ad);
    &main - &tail
}

/// The generating set `G_b = {φ(1,1), φ(1,2), φ(2,2)} ∪ {ψ(b,j)}` of the
/// curve's defining ideal; `3 + (4 − b)` binomials.
pub fn patil_basis(ctx: &Arc<RingContext>, params: &CurveParams) -> Vec<QPoly> {
    let mut out = vec![
        phi_gen(ctx, 1, 1),
        phi_gen(ctx, 1, 2),
        phi_gen(ctx, 2, 2),
    ];
    for j in 0..=(3 - params.b as i64) {
        out.push(psi_gen(ctx, params, j));
    }
    debug_assert!(out.iter().all(|g| !g.is_zero()));
    let mut dedup: Vec<QPoly> = Vec::new();
    for g in out {
        if !dedup.contains(&g) {
            dedup.push(g);
        }
    }
    dedup
}

/// The ring `K[T]` for `eta` images.
pub fn power_ring() -> Arc<RingContext> {
    RingContext::new(&[("T", 1)])
}

/// `eta(f)`: substitute `X_i ↦ T^{m_i}`. `f` may live in any context whose
/// variables are all named `X0..X3`.
pub fn eta_image(f: &QPoly, params: &CurveParams) -> Result<QPoly, AlgebraError> {
    let t_ctx = power_ring();
    let images = eta_assignments(&t_ctx, params, f.ctx().names());
    f.substitute(&images)
}

fn eta_assignments(
    t_ctx: &Arc<RingContext>,
    params: &CurveParams,
    names: &[String],
) -> BTreeMap<String, QPoly> {
    let mut images = BTreeMap::new();
    for name in names {
        if let Some(i) = xi_index(name) {
            images.insert(
                name.clone(),
                QPoly::var_by_index(t_ctx, 0, params.m[i] as u32),
            );
        }
    }
    images
}

fn xi_index(name: &str) -> Option<usize> {
    match name {
        "X0" => Some(0),
        "X1" => Some(1),
        "X2" => Some(2),
        "X3" => Some(3),
        _ => None,
    }
}

/// Extended target `K[X1, X2, X3, X0, t]` of the presentation-variable
/// substitution (first oracle stage).
pub fn extended_coordinate_ring(params: &CurveParams) -> Arc<RingContext> {
    RingContext::new(&[
        ("X1", params.m[1]),
        ("X2", params.m[2]),
        ("X3", params.m[3]),
        ("X0", params.m[0]),
        ("t", 1),
    ])
}

/// Stage-one kernel oracle: substitutes `X_i ↦ X_i`, `t ↦ t`,
/// `F[i,j] ↦ φ(i,j)·t`, `P[b,j] ↦ ψ(b,j)·t` by *name* into `K[X, t]`.
/// Unrecognized variables in `f`'s context are an error. An element of the
/// Rees relation ideal must map to zero.
pub fn presentation_image(f: &QPoly, params: &CurveParams) -> Result<QPoly, AlgebraError> {
    let target = extended_coordinate_ring(params);
    let t = QPoly::var(&target, "t").expect("t present");
    let mut images: BTreeMap<String, QPoly> = BTreeMap::new();
    for name in f.ctx().names() {
        let image = if let Some(i) = xi_index(name) {
            x_var(&target, i as i64)
        } else if name == "t" {
            t.clone()
        } else if let Some((i, j)) = parse_bracketed(name, 'F') {
            &phi_gen(&target, i, j) * &t
        } else if let Some((b, j)) = parse_bracketed(name, 'P') {
            if b != params.b as i64 {
                return Err(AlgebraError::UnknownVariable(name.clone()));
            }
            &psi_gen(&target, params, j) * &t
        } else {
            return Err(AlgebraError::UnknownVariable(name.clone()));
        };
        images.insert(name.clone(), image);
    }
    f.substitute(&images)
}

/// Parses `"{letter}[i,j]"` into `(i, j)`.
fn parse_bracketed(name: &str, letter: char) -> Option<(i64, i64)> {
    let rest = name.strip_prefix(letter)?;
    let rest = rest.strip_prefix('[')?.strip_suffix(']')?;
    let (i, j) = rest.split_once(',')?;
    Some((i.trim().parse().ok()?, j.trim().parse().ok()?))
}

/// Both oracle stages for one polynomial of a presentation-ring context:
/// stage one substitutes the presentation variables; stage two further
/// sends `X_i ↦ T^{m_i}` (and keeps `t`) into `K[T, t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelWitness {
    pub stage_one: QPoly,
    pub stage_two: QPoly,
}

impl KernelWitness {
    pub fn vanishes(&self) -> bool {
        self.stage_one.is_zero() && self.stage_two.is_zero()
    }
}

/// Runs both oracle stages on `f`.
pub fn kernel_witness(f: &QPoly, params: &CurveParams) -> Result<KernelWitness, AlgebraError> {
    let stage_one = presentation_image(f, params)?;
    let tt_ctx = RingContext::new(&[("T", 1), ("t", 1)]);
    let mut images = eta_assignments(&tt_ctx, params, stage_one.ctx().names());
    images.insert("t".to_string(), QPoly::var(&tt_ctx, "t").expect("t present"));
    let stage_two = stage_one.substitute(&images)?;
    Ok(KernelWitness { stage_one, stage_two })
}

/// Checks that `G_b` is a Gröbner basis of the defining ideal under the
/// weighted reverse-lex order on `R`, returning the per-pair certificates.
pub fn verify_patil_groebner(
    params: &CurveParams,
    limits: &crate::groebner::Limits,
) -> Result<
    (bool, Vec<crate::groebner::SPairCertificate<Rat>>),
    crate::groebner::GroebnerError,
> {
    let ctx = coordinate_ring(params);
    let order = coordinate_order(&ctx);
    let basis = patil_basis(&ctx, params);
    crate::groebner::is_groebner_basis(&basis, &order, limits)
}
