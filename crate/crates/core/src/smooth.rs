//! Jacobian criterion at the distinguished fiber prime.
//!
//! The prime `𝔓_b` of the presentation ring is generated by every
//! variable except one (`θ_b`); the residue ring is the univariate
//! polynomial ring in `θ_b`. Regularity of the localized Rees ring at
//! `𝔓_b` is decided by comparing the rank of the Jacobian matrix of the
//! defining ideal, taken modulo `𝔓_b`, with the codimension of the ideal:
//! equality means regular, strict inequality means not regular. The rank
//! is computed twice — fraction-free symbolic elimination over the
//! function field `K(θ_b)`, and exact rational evaluation at seeded random
//! points — and the two must agree.

use crate::curve::CurveParams;
use crate::field::{rat, Rat};
use crate::groebner::{GroebnerError, Limits, Strategy};
use crate::order::leading_monomial;
use crate::rees::{build_ambient, compute_e_b, ReesContext};
use crate::ring::{Monomial, QPoly, RingContext};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SmoothError {
    #[error("generator {label} is not contained in the fiber prime")]
    NotContained { label: String },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// The variable-generated prime used for the regularity audit: every
/// presentation-ring variable except `theta`.
#[derive(Debug, Clone)]
pub struct FiberPrime {
    pub b: u64,
    /// Generator variables, in ring order.
    pub generators: Vec<String>,
    /// The one excluded variable (the residue ring is `K[theta]`).
    pub theta: String,
}

/// Builds `𝔓_b`: the excluded variable is `F[2,2]` for `b ∈ {1,2}` and
/// the single `Ψ`-variable `P[3,0]` for `b = 3`.
pub fn fiber_prime(rees: &ReesContext) -> FiberPrime {
    let b = rees.params.b;
    let theta = if b == 3 { "P[3,0]".to_string() } else { "F[2,2]".to_string() };
    let generators: Vec<String> = rees
        .ring_rb
        .names()
        .iter()
        .filter(|n| **n != theta)
        .cloned()
        .collect();
    assert_eq!(generators.len(), rees.ring_rb.len() - 1);
    FiberPrime { b, generators, theta }
}

/// Dense univariate polynomial in `θ_b` with exact rational coefficients
/// (index = exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rat>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![rat(1, 1)])
    }

    fn normalize(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        UniPoly(coeffs).normalize()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly(out).normalize()
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.0.get(k).cloned().unwrap_or_else(Rat::zero);
            let b = other.0.get(k).cloned().unwrap_or_else(Rat::zero);
            out.push(a - b);
        }
        UniPoly(out).normalize()
    }

    /// Exact division; panics if the remainder is nonzero (the callers'
    /// fraction-free elimination guarantees exactness).
    pub fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut rem = self.0.clone();
        let dd = divisor.0.len() - 1;
        let lead = divisor.0.last().unwrap().clone();
        assert!(rem.len() >= divisor.0.len(), "exact division underflow");
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.0.iter().enumerate() {
                    let idx = k - dd + j;
                    let delta = &c * d;
                    rem[idx] -= delta;
                }
            }
            quot[k - dd] = c;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "division was not exact (fraction-free invariant violated)"
        );
        UniPoly(quot).normalize()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Text form in the given variable name, descending exponents.
    pub fn text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (k, c)) in self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if pos == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_is_one = mag.is_one();
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if var_part.is_empty() {
                out.push_str(&crate::text::rational_text(&mag));
            } else if mag_is_one {
                out.push_str(&var_part);
            } else {
                out.push_str(&format!("{}*{}", crate::text::rational_text(&mag), var_part));
            }
        }
        out
    }
}

/// Extracts the residue of `f` modulo the prime as a univariate polynomial
/// in `θ`: keeps exactly the terms supported on `θ` alone.
fn residue_in_theta(f: &QPoly, theta_idx: usize) -> UniPoly {
    let mut coeffs: Vec<Rat> = Vec::new();
    for (m, c) in f.terms() {
        let pure = (0..f.ctx().len()).all(|k| k == theta_idx || m.exp(k) == 0);
        if pure {
            let e = m.exp(theta_idx) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rat::zero());
            }
            coeffs[e] += c;
        }
    }
    UniPoly::from_coeffs(coeffs)
}

/// Jacobian of `gens` with respect to the prime's generator variables,
/// reduced modulo the prime: entry `(i, ζ) = ∂gᵢ/∂ζ` with every generator
/// variable of the prime set to zero. Fails if some `gᵢ ∉ 𝔓_b` (a term
/// with no prime-generator variable: a constant or a pure power of `θ`).
pub fn jacobian_mod_prime(
    gens: &[QPoly],
    prime: &FiberPrime,
    ctx: &Arc<RingContext>,
) -> Result<Vec<Vec<UniPoly>>, SmoothError> {
    let theta_idx = ctx
        .index_of(&prime.theta)
        .expect("theta is a ring variable");
    for (gi, g) in gens.iter().enumerate() {
        for (m, _) in g.terms() {
            let in_prime = (0..ctx.len()).any(|k| k != theta_idx && m.exp(k) > 0);
            if !in_prime {
                return Err(SmoothError::NotContained {
                    label: format!("generator #{gi}"),
                });
            }
        }
    }
    let mut matrix = Vec::with_capacity(gens.len());
    for g in gens {
        let mut row = Vec::with_capacity(prime.generators.len());
        for zeta in &prime.generators {
            let deriv = g.partial_derivative(zeta).expect("zeta is a ring variable");
            row.push(residue_in_theta(&deriv, theta_idx));
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// Columns (prime-generator variables) with at least one nonzero entry.
pub fn nonzero_columns(matrix: &[Vec<UniPoly>], prime: &FiberPrime) -> Vec<String> {
    let mut out = Vec::new();
    for (j, name) in prime.generators.iter().enumerate() {
        if matrix.iter().any(|row| !row[j].is_zero()) {
            out.push(name.clone());
        }
    }
    out
}

/// Independent route to the nonzero-column set: a column `ζ` is nonzero
/// iff some generator has a term `k·ζ·θ^l` (exponent of `ζ` exactly one,
/// every other prime variable absent).
pub fn nonzero_columns_by_term_scan(
    gens: &[QPoly],
    prime: &FiberPrime,
    ctx: &Arc<RingContext>,
) -> Vec<String> {
    let theta_idx = ctx.index_of(&prime.theta).expect("theta is a ring variable");
    let mut out = Vec::new();
    for name in &prime.generators {
        let zi = ctx.index_of(name).expect("prime generator is a variable");
        let hit = gens.iter().any(|g| {
            g.terms().any(|(m, _)| {
                m.exp(zi) == 1
                    && (0..ctx.len())
                        .all(|k| k == zi || k == theta_idx || m.exp(k) == 0)
            })
        });
        if hit {
            out.push(name.clone());
        }
    }
    out
}

/// Rank over the function field `K(θ_b)` by fraction-free (Bareiss-style)
/// elimination: every intermediate entry stays a polynomial, each
/// elimination step divides exactly by the previous pivot.
pub fn rank_over_function_field(matrix: &[Vec<UniPoly>]) -> usize {
    let mut m: Vec<Vec<UniPoly>> = matrix.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = UniPoly::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let prod1 = m[row][col].mul(&m[r][c]);
                let prod2 = m[r][col].mul(&m[row][c]);
                m[r][c] = prod1.sub(&prod2).exact_div(&prev);
            }
            m[r][col] = UniPoly::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix by plain Gaussian elimination (independent
/// of the fraction-free route; used for the seeded-evaluation cross-check).
pub fn rational_rank(matrix: Vec<Vec<Rat>>) -> usize {
    let mut m = matrix;
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        let pivot = m[row][col].clone();
        let pivot_tail: Vec<Rat> = m[row][col..].to_vec();
        for below in m.iter_mut().skip(row + 1) {
            if below[col].is_zero() {
                continue;
            }
            let factor = &below[col] / &pivot;
            for (entry, p) in below[col..].iter_mut().zip(&pivot_tail) {
                let delta = &factor * p;
                *entry -= delta;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Codimension of the ideal presented by a reduced Gröbner basis:
/// number of ring variables minus the dimension of the leading-monomial
/// ideal's vanishing set.
pub fn codimension(
    reduced: &[QPoly],
    order: &crate::order::OrderSpec,
    ctx: &Arc<RingContext>,
) -> usize {
    let lms: Vec<Monomial> = reduced
        .iter()
        .map(|g| leading_monomial(g, order).expect("nonzero"))
        .collect();
    ctx.len() - crate::groebner::monomial_ideal_dimension(&lms, ctx.len())
}

/// Regularity verdict of the localized ring at the fiber prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    NotRegular,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Regular => "regular",
            Verdict::NotRegular => "not_regular",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        match s.trim().to_ascii_lowercase().as_str() {
            "regular" => Some(Verdict::Regular),
            "not_regular" | "not-regular" => Some(Verdict::NotRegular),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything the audit produces at one parameter point.
#[derive(Debug, Clone)]
pub struct JacobianReport {
    pub b: u64,
    pub params: CurveParams,
    pub theta: String,
    /// All prime-generator variables, in ring order (column labels).
    pub columns: Vec<String>,
    pub nonzero_columns: Vec<String>,
    /// Rank of the Jacobian of the computed reduced basis.
    pub rank: usize,
    /// Rank of the Jacobian of the printed tag-free family set (must
    /// equal `rank`: the rank at a prime depends only on the ideal).
    pub printed_set_rank: usize,
    pub codim: usize,
    pub verdict: Verdict,
    /// Seeds of the three evaluation streams.
    pub seeds: Vec<u64>,
    /// The sampled values of `θ_b`, as exact rationals.
    pub evaluation_points: Vec<String>,
    /// Residue matrix of the computed reduced basis (rows follow the
    /// basis, columns follow `columns`), entries as text in `θ_b`.
    pub residue_matrix: Vec<Vec<String>>,
    pub wall_time_ms: u128,
}

fn seeded_points(seed: u64) -> (Vec<u64>, Vec<Rat>) {
    let seeds: Vec<u64> = (0..3).map(|k| seed.wrapping_add(k)).collect();
    let points = seeds
        .iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(*s);
            let num: i64 = rng.gen_range(1..=10_000);
            let den: i64 = rng.gen_range(1..=97);
            rat(num, den)
        })
        .collect();
    (seeds, points)
}

fn matrix_rank_with_crosscheck(matrix: &[Vec<UniPoly>], points: &[Rat]) -> usize {
    let symbolic = rank_over_function_field(matrix);
    let numeric = points
        .iter()
        .map(|p| {
            let evaluated: Vec<Vec<Rat>> = matrix
                .iter()
                .map(|row| row.iter().map(|e| e.eval(p)).collect())
                .collect();
            rational_rank(evaluated)
        })
        .max()
        .unwrap_or(0);
    assert_eq!(
        symbolic, numeric,
        "fraction-free rank and max evaluated rank disagree"
    );
    symbolic
}

/// Full audit pipeline: compute the reduced basis of the defining ideal,
/// build the Jacobian modulo the fiber prime for both the computed basis
/// and the printed family set, compare ranks, compute the codimension,
/// and emit the verdict (`regular` iff rank equals codimension).
pub fn smoothness_verdict(
    params: &CurveParams,
    strategy: Strategy,
    limits: &Limits,
    seed: u64,
) -> Result<JacobianReport, SmoothError> {
    let start = Instant::now();
    let rees = build_ambient(params);
    let contraction = compute_e_b(&rees, strategy, limits)?;
    smoothness_verdict_for(&rees, &contraction.reduced, seed, start)
}

/// Same audit against a precomputed reduced basis of the defining ideal.
pub fn smoothness_verdict_with_basis(
    rees: &ReesContext,
    reduced: &[QPoly],
    seed: u64,
) -> Result<JacobianReport, SmoothError> {
    smoothness_verdict_for(rees, reduced, seed, Instant::now())
}

fn smoothness_verdict_for(
    rees: &ReesContext,
    reduced: &[QPoly],
    seed: u64,
    start: Instant,
) -> Result<JacobianReport, SmoothError> {
    let prime = fiber_prime(rees);
    let ctx = &rees.ring_rb;

    let matrix = jacobian_mod_prime(reduced, &prime, ctx)?;
    let cols_a = nonzero_columns(&matrix, &prime);
    let cols_b = nonzero_columns_by_term_scan(reduced, &prime, ctx);
    assert_eq!(
        cols_a, cols_b,
        "matrix route and term-scan route disagree on nonzero columns"
    );

    let (seeds, points) = seeded_points(seed);
    let rank = matrix_rank_with_crosscheck(&matrix, &points);

    // Second generating set: the printed tag-free families.
    let printed: Vec<QPoly> = rees
        .printed_contraction_families()
        .into_iter()
        .map(|(_, p)| rees.to_rb(&p))
        .collect();
    let printed_matrix = jacobian_mod_prime(&printed, &prime, ctx)?;
    let printed_set_rank = matrix_rank_with_crosscheck(&printed_matrix, &points);
    assert_eq!(
        rank, printed_set_rank,
        "Jacobian rank must not depend on the generating set"
    );

    let codim = codimension(reduced, &rees.order_rb, ctx);
    assert!(rank <= codim, "Jacobian rank exceeds the codimension");
    let verdict = if rank < codim {
        Verdict::NotRegular
    } else {
        Verdict::Regular
    };

    let residue_matrix = matrix
        .iter()
        .map(|row| row.iter().map(|e| e.text(&prime.theta)).collect())
        .collect();

    Ok(JacobianReport {
        b: rees.params.b,
        params: rees.params,
        theta: prime.theta.clone(),
        columns: prime.generators.clone(),
        nonzero_columns: cols_a,
        rank,
        printed_set_rank,
        codim,
        verdict,
        seeds,
        evaluation_points: points.iter().map(crate::text::rational_text).collect(),
        residue_matrix,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::derive_params;
    use crate::rees::Family;
    use crate::text::parse_polynomial;

    fn rc(m0: u64, d: u64) -> ReesContext {
        build_ambient(&derive_params(m0, d).unwrap())
    }

    #[test]
    fn fiber_prime_shapes() {
        let r1 = rc(4, 1);
        let p1 = fiber_prime(&r1);
        assert_eq!(p1.theta, "F[2,2]");
        assert_eq!(p1.generators.len(), 9);
        assert!(!p1.generators.contains(&"F[2,2]".to_string()));

        let r2 = rc(5, 1);
        let p2 = fiber_prime(&r2);
        assert_eq!(p2.theta, "F[2,2]");
        assert_eq!(p2.generators.len(), 8);

        let r3 = rc(6, 1);
        let p3 = fiber_prime(&r3);
        assert_eq!(p3.theta, "P[3,0]");
        assert_eq!(p3.generators.len(), 7);
        assert!(p3.generators.contains(&"F[2,2]".to_string()));
    }

    #[test]
    fn unipoly_arithmetic() {
        // (θ + 1)(θ − 1) = θ² − 1, and exact division recovers a factor.
        let a = UniPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let b = UniPoly::from_coeffs(vec![rat(-1, 1), rat(1, 1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, UniPoly::from_coeffs(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]));
        assert_eq!(prod.exact_div(&a), b);
        assert_eq!(prod.eval(&rat(3, 1)), rat(8, 1));
        assert_eq!(prod.text("F[2,2]"), "F[2,2]^2 - 1");
        assert_eq!(UniPoly::zero().text("F[2,2]"), "0");
        let c = UniPoly::from_coeffs(vec![rat(0, 1), rat(-3, 2)]);
        assert_eq!(c.text("t"), "-3/2*t");
    }

    #[test]
    #[should_panic(expected = "not exact")]
    fn inexact_division_panics() {
        // θ² + 1 is not divisible by θ + 1.
        let n = UniPoly::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
        let d = UniPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let _ = n.exact_div(&d);
    }

    #[test]
    fn jacobian_row_for_the_first_l_member() {
        // L(0) = X0*F[2,2] − X1*F[1,2] + X2*F[1,1] at b=1: after setting
        // all prime variables to zero, only ∂/∂X0 = F[2,2] = θ survives.
        let r = rc(4, 1);
        let prime = fiber_prime(&r);
        let l0 = r.to_rb(&r.family(Family::L(0)));
        let m = jacobian_mod_prime(&[l0], &prime, &r.ring_rb).unwrap();
        for (j, name) in prime.generators.iter().enumerate() {
            if name == "X0" {
                assert_eq!(m[0][j], UniPoly::from_coeffs(vec![rat(0, 1), rat(1, 1)]));
            } else {
                assert!(m[0][j].is_zero(), "column {name} should vanish");
            }
        }
        assert_eq!(nonzero_columns(&m, &prime), vec!["X0".to_string()]);
        assert_eq!(
            nonzero_columns_by_term_scan(&[r.to_rb(&r.family(Family::L(0)))], &prime, &r.ring_rb),
            vec!["X0".to_string()]
        );
    }

    #[test]
    fn polynomials_outside_the_prime_are_rejected() {
        let r = rc(4, 1);
        let prime = fiber_prime(&r);
        // A pure power of θ is not in the prime.
        let bad = parse_polynomial(&r.ring_rb, "F[2,2]^2").unwrap();
        assert!(matches!(
            jacobian_mod_prime(&[bad], &prime, &r.ring_rb),
            Err(SmoothError::NotContained { .. })
        ));
        // A constant term is not in the prime either.
        let bad2 = parse_polynomial(&r.ring_rb, "X1*X2 + 1").unwrap();
        assert!(matches!(
            jacobian_mod_prime(&[bad2], &prime, &r.ring_rb),
            Err(SmoothError::NotContained { .. })
        ));
        // Constant zero rows are fine for members of the prime.
        let ok = parse_polynomial(&r.ring_rb, "X1*X2*F[2,2]^3").unwrap();
        let m = jacobian_mod_prime(&[ok], &prime, &r.ring_rb).unwrap();
        assert!(m[0].iter().all(|e| e.is_zero()));
    }

    #[test]
    fn rank_routes_agree_on_a_known_matrix() {
        // [[θ, 1], [θ², θ]] has rank 1; [[θ, 1], [1, θ]] has rank 2.
        let theta = UniPoly::from_coeffs(vec![rat(0, 1), rat(1, 1)]);
        let one = UniPoly::one();
        let theta2 = theta.mul(&theta);
        let m1 = vec![
            vec![theta.clone(), one.clone()],
            vec![theta2.clone(), theta.clone()],
        ];
        assert_eq!(rank_over_function_field(&m1), 1);
        let m2 = vec![
            vec![theta.clone(), one.clone()],
            vec![one.clone(), theta.clone()],
        ];
        assert_eq!(rank_over_function_field(&m2), 2);
        let (_, points) = seeded_points(7);
        assert_eq!(matrix_rank_with_crosscheck(&m1, &points), 1);
        assert_eq!(matrix_rank_with_crosscheck(&m2, &points), 2);
        assert_eq!(rank_over_function_field(&[]), 0);
        assert_eq!(rational_rank(vec![]), 0);
    }

    #[test]
    fn verdict_at_6_1_matches_the_published_table() {
        let params = derive_params(6, 1).unwrap();
        let report = smoothness_verdict(&params, Strategy::Normal, &Limits::default(), 42).unwrap();
        assert_eq!(report.b, 3);
        assert_eq!(report.rank, 0);
        assert_eq!(report.printed_set_rank, 0);
        assert_eq!(report.codim, 3);
        assert_eq!(report.verdict, Verdict::NotRegular);
        assert!(report.nonzero_columns.is_empty());
        // Every residue entry is the zero polynomial.
        assert!(report
            .residue_matrix
            .iter()
            .all(|row| row.iter().all(|e| e == "0")));
    }

    #[test]
    fn verdict_at_4_1_finds_a_regular_point() {
        // At a = 1 the Jacobian picks up extra nonzero columns (the
        // X3^(a−1) factors become 1), the rank reaches the codimension,
        // and the localized ring is regular — unlike the published table,
        // which reports rank 3 for every b = 1 member of the family.
        let params = derive_params(4, 1).unwrap();
        let report = smoothness_verdict(&params, Strategy::Normal, &Limits::default(), 42).unwrap();
        assert_eq!(report.rank, 5);
        assert_eq!(report.codim, 5);
        assert_eq!(report.verdict, Verdict::Regular);
        assert_eq!(
            report.nonzero_columns,
            vec!["X1", "X3", "X0", "P[1,0]", "P[1,2]"]
        );
    }

    #[test]
    fn verdict_at_5_1_finds_a_regular_point() {
        let params = derive_params(5, 1).unwrap();
        let report = smoothness_verdict(&params, Strategy::Normal, &Limits::default(), 42).unwrap();
        assert_eq!(report.rank, 4);
        assert_eq!(report.codim, 4);
        assert_eq!(report.verdict, Verdict::Regular);
        assert_eq!(report.nonzero_columns, vec!["X1", "X3", "X0", "P[2,1]"]);
    }

    #[test]
    fn verdict_parsing() {
        assert_eq!(Verdict::parse("regular"), Some(Verdict::Regular));
        assert_eq!(Verdict::parse("NOT_REGULAR"), Some(Verdict::NotRegular));
        assert_eq!(Verdict::parse("not-regular"), Some(Verdict::NotRegular));
        assert_eq!(Verdict::parse("smooth"), None);
        assert_eq!(Verdict::NotRegular.to_string(), "not_regular");
    }
}
