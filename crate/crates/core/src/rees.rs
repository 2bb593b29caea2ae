//! Ambient rings and explicit polynomial families for the Rees algebra of
//! the curve ideal.
//!
//! The presentation ring is `R_b = K[X, Ψ_b, Φ]` with one fiber variable
//! per binomial generator, and `S = R_b[t]`. The relation ideal is
//! generated by `P(g) = t·g − (fiber variable of g)`; its contraction to
//! `R_b` is the defining ideal `E_b` of the Rees algebra. This module
//! builds those rings, the seven-tier elimination order on `S`, the
//! explicit families (`P`, `P(Ψ)`, `M`, `L`, `B`, `A`, `D`, `Q`), and the
//! two elimination pipelines (full relation ideal, and the subideal used
//! for the degree-one analysis).

use crate::curve::{self, CurveParams};
use crate::groebner::{
    buchberger, minimalize_and_reduce, GroebnerError, IdealPresentation, Limits, Strategy,
};
use crate::order::OrderSpec;
use crate::ring::{QPoly, RingContext};
use std::sync::Arc;

/// Immutable bundle of contexts and orders for one parameter choice.
#[derive(Debug, Clone)]
pub struct ReesContext {
    pub params: CurveParams,
    /// `R = K[X1, X2, X3, X0]`.
    pub ring_r: Arc<RingContext>,
    /// `R_b`: the `X` variables, then `P[b,0..3-b]`, then
    /// `F[2,2], F[1,2], F[1,1]` — `11 − b` variables.
    pub ring_rb: Arc<RingContext>,
    /// `S = R_b[t]` — `12 − b` variables, `t` last.
    pub ring_s: Arc<RingContext>,
    pub order_r: OrderSpec,
    pub order_rb: OrderSpec,
    pub order_s: OrderSpec,
    psi_names: Vec<String>,
    phi_names: Vec<String>,
}

/// Names of one explicit family member. Out-of-range indices give the zero
/// polynomial, mirroring the source conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// `P(i,j) = t·φ(i,j) − Φ(i,j)`, `1 ≤ i ≤ j ≤ 2`.
    P(i64, i64),
    /// `P(Ψ(b,l)) = t·ψ(b,l) − Ψ(b,l)`, `l ∈ [0, 3−b]`.
    PPsi(i64),
    /// Tag-degree-one quadratic family, `i ∈ [0, 2−b]`, absent at `b = 3`.
    M(i64),
    /// `L(i) = X_iΦ(2,2) − X_{i+1}Φ(1,2) + X_{i+2}Φ(1,1)`, `i ∈ [0,1]`.
    L(i64),
    /// `B(i,j) = φ(i,j)Ψ(b,3−b) − ψ(b,3−b)Φ(i,j)`, `1 ≤ i ≤ j ≤ 2`.
    B(i64, i64),
    /// `A(i; b, j)`, `i ∈ [1,3]`, `j ∈ [0, 2−b]`, absent at `b = 3`.
    A(i64, i64),
    /// The Koszul relation `φ(1,1)Φ(1,2) − φ(1,2)Φ(1,1)`.
    D,
    /// `Q(b,i)`: `i ∈ [1,2]` at `b = 1`, `i = 1` at `b = 2`, absent at 3.
    Q(i64),
}

impl Family {
    /// Human-readable label; `b` fills in the family parameter.
    pub fn label(&self, b: u64) -> String {
        match self {
            Family::P(i, j) => format!("P({i},{j})"),
            Family::PPsi(l) => format!("P(Psi({b},{l}))"),
            Family::M(i) => format!("M({b},{i})"),
            Family::L(i) => format!("L({i})"),
            Family::B(i, j) => format!("B({i},{j})"),
            Family::A(i, j) => format!("A({i};{b},{j})"),
            Family::D => "D".to_string(),
            Family::Q(i) => format!("Q({b},{i})"),
        }
    }
}

/// Builds the contexts and orders for validated parameters.
pub fn build_ambient(params: &CurveParams) -> ReesContext {
    let b = params.b;
    let a = params.a;
    let m = params.m;
    let mut vars: Vec<(String, u64)> = vec![
        ("X1".to_string(), m[1]),
        ("X2".to_string(), m[2]),
        ("X3".to_string(), m[3]),
        ("X0".to_string(), m[0]),
    ];
    let mut psi_names = Vec::new();
    for j in 0..=(3 - b) {
        let name = format!("P[{b},{j}]");
        vars.push((name.clone(), a * m[3] + m[(b + j) as usize]));
        psi_names.push(name);
    }
    let mut phi_names = Vec::new();
    for (i, j) in [(2usize, 2usize), (1, 2), (1, 1)] {
        let name = format!("F[{i},{j}]");
        vars.push((name.clone(), m[i] + m[j]));
        phi_names.push(name);
    }
    let rb_pairs: Vec<(&str, u64)> = vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let ring_rb = RingContext::new(&rb_pairs);
    let mut s_pairs = rb_pairs.clone();
    s_pairs.push(("t", 1));
    let ring_s = RingContext::new(&s_pairs);
    let ring_r = curve::coordinate_ring(params);

    let alpha = ["X1", "X2", "X3", "X0"];
    let beta: Vec<&str> = psi_names.iter().map(|s| s.as_str()).collect();
    let gamma: Vec<&str> = phi_names.iter().map(|s| s.as_str()).collect();
    let order_s = OrderSpec::elimination_seven(&ring_s, "t", &alpha, &beta, &gamma);
    let order_rb = order_s
        .restricted_order(&ring_rb)
        .expect("R_b embeds in S");
    let order_r = order_s.restricted_order(&ring_r).expect("R embeds in S");

    ReesContext {
        params: *params,
        ring_r,
        ring_rb,
        ring_s,
        order_r,
        order_rb,
        order_s,
        psi_names,
        phi_names,
    }
}

impl ReesContext {
    pub fn b(&self) -> i64 {
        self.params.b as i64
    }

    pub fn a(&self) -> u32 {
        self.params.a as u32
    }

    fn ad(&self) -> u32 {
        (self.params.a + self.params.d) as u32
    }

    pub fn psi_names(&self) -> &[String] {
        &self.psi_names
    }

    pub fn phi_names(&self) -> &[String] {
        &self.phi_names
    }

    /// Fiber variables of `R_b` (everything except the `X`'s).
    pub fn fiber_names(&self) -> Vec<String> {
        self.psi_names
            .iter()
            .chain(self.phi_names.iter())
            .cloned()
            .collect()
    }

    fn x(&self, i: i64) -> QPoly {
        curve::x_var(&self.ring_s, i)
    }

    fn xp(&self, i: i64, k: u32) -> QPoly {
        curve::x_pow(&self.ring_s, i, k)
    }

    fn t(&self) -> QPoly {
        QPoly::var(&self.ring_s, "t").expect("t present")
    }

    /// The fiber variable `Ψ(b,l)`, zero outside `[0, 3−b]`.
    pub fn psi_var(&self, l: i64) -> QPoly {
        if !(0..=(3 - self.b())).contains(&l) {
            return QPoly::zero(&self.ring_s);
        }
        QPoly::var(&self.ring_s, &self.psi_names[l as usize]).expect("psi var")
    }

    /// The fiber variable `Φ(i,j)`, symmetric, zero unless `i, j ∈ [1,2]`.
    pub fn phi_var(&self, i: i64, j: i64) -> QPoly {
        let (i, j) = (i.min(j), i.max(j));
        if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
            return QPoly::zero(&self.ring_s);
        }
        QPoly::var(&self.ring_s, &format!("F[{i},{j}]")).expect("phi var")
    }

    fn phi_low(&self, i: i64, j: i64) -> QPoly {
        curve::phi_gen(&self.ring_s, i, j)
    }

    fn psi_low(&self, j: i64) -> QPoly {
        curve::psi_gen(&self.ring_s, &self.params, j)
    }

    /// Constructs one family member in `ring_s` (zero when the indices are
    /// outside the family's declared range).
    pub fn family(&self, f: Family) -> QPoly {
        let b = self.b();
        let zero = QPoly::zero(&self.ring_s);
        match f {
            Family::P(i, j) => {
                let (i, j) = (i.min(j), i.max(j));
                if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
                    return zero;
                }
                &(&self.t() * &self.phi_low(i, j)) - &self.phi_var(i, j)
            }
            Family::PPsi(l) => {
                if !(0..=(3 - b)).contains(&l) {
                    return zero;
                }
                &(&self.t() * &self.psi_low(l)) - &self.psi_var(l)
            }
            Family::L(i) => {
                if !(0..=1).contains(&i) {
                    return zero;
                }
                let s1 = &self.x(i) * &self.phi_var(2, 2);
                let s2 = &self.x(i + 1) * &self.phi_var(1, 2);
                let s3 = &self.x(i + 2) * &self.phi_var(1, 1);
                &(&s1 - &s2) + &s3
            }
            Family::D => {
                let s1 = &self.phi_low(1, 1) * &self.phi_var(1, 2);
                let s2 = &self.phi_low(1, 2) * &self.phi_var(1, 1);
                &s1 - &s2
            }
            Family::B(i, j) => {
                let (i, j) = (i.min(j), i.max(j));
                if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
                    return zero;
                }
                let s1 = &self.phi_low(i, j) * &self.psi_var(3 - b);
                let s2 = &self.psi_low(3 - b) * &self.phi_var(i, j);
                &s1 - &s2
            }
            Family::A(i, j) => {
                if b == 3 || !(1..=3).contains(&i) || !(0..=(2 - b)).contains(&j) {
                    return zero;
                }
                let e = curve::epsilon(i, b + j);
                let s1 = &self.x(i) * &self.psi_var(j);
                let s2 = &self.x(b + i + j - e) * &self.psi_var(e - b);
                let s3 = &self.xp(3, self.a()) * &self.phi_var(i, b + j);
                let bracket = &self.phi_var(i, j) - &self.phi_var(b + i + j - 3, 3 - b);
                let s4 = &self.xp(0, self.ad()) * &bracket;
                &(&(&s1 - &s2) - &s3) + &s4
            }
            Family::M(i) => {
                if b == 3 || !(0..=(2 - b)).contains(&i) {
                    return zero;
                }
                let t = self.t();
                let s1 = &(&t * &self.xp(0, self.ad() + 1)) * &self.psi_var(i);
                let s2 = &self.psi_var(0) * &self.psi_var(i);
                let s3 = &(&(&t * &self.xp(3, self.a() - 1))
                    * &(&self.x(1 + b + i) * &self.x(b - 1)))
                    * &self.psi_var(3 - b);
                let s4 = &(&t * &self.xp(3, 2 * self.a())) * &self.phi_var(b, b + i);
                let s5 = &(&(&t * &(&self.xp(3, self.a() - 1) * &self.xp(0, self.ad())))
                    * &self.x(3 * b + 3 * i - 3))
                    * &self.phi_var(3 - b - i, 3 - b - i);
                let signed_s5 = if (i + 1) % 2 == 0 { s5 } else { s5.negated() };
                &(&(&(&s1 + &s2) - &s3) - &s4) + &signed_s5
            }
            Family::Q(i) => match (b, i) {
                (1, 1) => {
                    let s1 = &self.psi_var(0) * &self.phi_var(2, 2);
                    let s2 = &self.psi_var(2) * &self.phi_var(1, 1);
                    let s3 = &self.psi_var(1) * &self.phi_var(1, 2);
                    &(&s1 + &s2) - &s3
                }
                (1, 2) => {
                    let s1 = &self.psi_var(1) * &self.psi_var(1);
                    let s2 = &self.psi_var(2) * &self.psi_var(0);
                    let s3 = &(&self.xp(3, self.a() - 1) * &self.psi_var(2)) * &self.phi_var(2, 2);
                    let s4 = &(&self.xp(0, self.ad() - 1) * &self.psi_var(0)) * &self.phi_var(1, 1);
                    let disc = &(&self.phi_var(1, 2) * &self.phi_var(1, 2))
                        - &(&self.phi_var(2, 2) * &self.phi_var(1, 1));
                    let s5 = &(&self.xp(3, self.a() - 1) * &self.xp(0, self.ad() - 1)) * &disc;
                    &(&(&(&s1 - &s2) - &s3) + &s4) - &s5
                }
                (2, 1) => {
                    let s1 = &(&self.psi_var(0) * &self.psi_var(0)) * &self.phi_var(2, 2);
                    let s2 = &(&self.xp(3, self.a() - 1) * &self.psi_var(1))
                        * &(&self.phi_var(2, 2) * &self.phi_var(2, 2));
                    let s3 = &(&self.psi_var(1) * &self.psi_var(0)) * &self.phi_var(1, 2);
                    let s4 = &(&self.xp(3, self.a() - 1) * &self.xp(0, self.ad() - 1))
                        * &self.phi_var(1, 2).pow(3);
                    let s5 = &(&self.psi_var(1) * &self.psi_var(1)) * &self.phi_var(1, 1);
                    let s6 = &(&(&self.xp(3, self.a() - 1) * &self.xp(0, self.ad() - 1))
                        * &(&self.phi_var(2, 2) * &self.phi_var(1, 2)))
                        * &self.phi_var(1, 1);
                    let s7 = &(&self.xp(0, self.ad() - 1) * &self.psi_var(0))
                        * &self.phi_var(1, 1).pow(2);
                    &(&(&(&(&(&s1 - &s2) - &s3) - &s4) + &s5) + &s6) + &s7
                }
                _ => zero,
            },
        }
    }

    /// Generators of the relation ideal: one `P` per binomial generator.
    pub fn rees_generators(&self) -> Vec<(Family, QPoly)> {
        let mut out = vec![
            (Family::P(1, 1), self.family(Family::P(1, 1))),
            (Family::P(1, 2), self.family(Family::P(1, 2))),
            (Family::P(2, 2), self.family(Family::P(2, 2))),
        ];
        for l in 0..=(3 - self.b()) {
            out.push((Family::PPsi(l), self.family(Family::PPsi(l))));
        }
        out
    }

    /// The claimed Gröbner basis of the relation ideal: all nonzero family
    /// members over their declared ranges, in a fixed deterministic order.
    pub fn hat_a_b(&self) -> Vec<(Family, QPoly)> {
        let b = self.b();
        let mut names: Vec<Family> = vec![
            Family::P(1, 1),
            Family::P(1, 2),
            Family::P(2, 2),
        ];
        for l in 0..=(3 - b) {
            names.push(Family::PPsi(l));
        }
        for i in 0..=(2 - b) {
            names.push(Family::M(i));
        }
        names.push(Family::L(0));
        names.push(Family::L(1));
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            names.push(Family::B(i, j));
        }
        for i in 1..=3 {
            for j in 0..=(2 - b) {
                names.push(Family::A(i, j));
            }
        }
        names.push(Family::D);
        for i in 1..=2 {
            names.push(Family::Q(i));
        }
        let mut out: Vec<(Family, QPoly)> = Vec::new();
        for name in names {
            let poly = self.family(name);
            if poly.is_zero() {
                continue;
            }
            if out.iter().all(|(_, q)| *q != poly) {
                out.push((name, poly));
            }
        }
        out
    }

    /// The subideal generated by the three `P(i,j)` and `P(Ψ(b,3−b))`.
    pub fn q_generators(&self) -> Vec<(Family, QPoly)> {
        vec![
            (Family::P(1, 1), self.family(Family::P(1, 1))),
            (Family::P(1, 2), self.family(Family::P(1, 2))),
            (Family::P(2, 2), self.family(Family::P(2, 2))),
            (Family::PPsi(3 - self.b()), self.family(Family::PPsi(3 - self.b()))),
        ]
    }

    /// The printed Gröbner-basis claim for the subideal: its generators
    /// plus `{L(0), L(1), B(1,1), B(1,2), B(2,2), D}`.
    pub fn q_hat(&self) -> Vec<(Family, QPoly)> {
        let mut out = self.q_generators();
        for f in [
            Family::L(0),
            Family::L(1),
            Family::B(1, 1),
            Family::B(1, 2),
            Family::B(2, 2),
            Family::D,
        ] {
            out.push((f, self.family(f)));
        }
        out
    }

    /// The printed `t`-free families claimed to cut out the contraction:
    /// `{L, B, D}` always, plus `{A, Q}` when `b ≠ 3`.
    pub fn printed_contraction_families(&self) -> Vec<(Family, QPoly)> {
        let b = self.b();
        let mut names = vec![
            Family::L(0),
            Family::L(1),
            Family::B(1, 1),
            Family::B(1, 2),
            Family::B(2, 2),
            Family::D,
        ];
        if b != 3 {
            for i in 1..=3 {
                for j in 0..=(2 - b) {
                    names.push(Family::A(i, j));
                }
            }
            for i in 1..=2 {
                names.push(Family::Q(i));
            }
        }
        names
            .into_iter()
            .map(|f| (f, self.family(f)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    /// The expected leading monomial of a family member, as a polynomial
    /// with a single term (handy for comparisons); `None` out of range.
    pub fn expected_leading_monomial(&self, f: Family) -> Option<QPoly> {
        let poly = self.family(f);
        if poly.is_zero() {
            return None;
        }
        let b = self.b();
        let one = QPoly::from_i64(&self.ring_s, 1);
        let lm = match f {
            Family::P(i, j) => &(&self.t() * &self.x(i)) * &self.x(j),
            Family::PPsi(l) => &(&self.t() * &self.x(b + l)) * &self.xp(3, self.a()),
            Family::M(i) => &(&self.t() * &self.xp(0, self.ad() + 1)) * &self.psi_var(i),
            Family::L(i) => &self.x(i) * &self.phi_var(2, 2),
            Family::B(i, j) => &(&self.x(i) * &self.x(j)) * &self.psi_var(3 - b),
            Family::A(i, j) => &self.x(i) * &self.psi_var(j),
            Family::D => &(&self.x(1) * &self.x(1)) * &self.phi_var(1, 2),
            Family::Q(i) => match (b, i) {
                (1, 1) => &self.psi_var(0) * &self.phi_var(2, 2),
                (1, 2) => &self.psi_var(1) * &self.psi_var(1),
                (2, 1) => &(&self.psi_var(0) * &self.psi_var(0)) * &self.phi_var(2, 2),
                _ => return None,
            },
        };
        Some(&lm * &one)
    }

    /// Projects a `t`-free polynomial of `ring_s` into `ring_rb`.
    pub fn to_rb(&self, f: &QPoly) -> QPoly {
        f.project_to(&self.ring_rb)
            .expect("polynomial must be t-free")
    }

    /// Lifts a polynomial of `ring_rb` into `ring_s`.
    pub fn to_s(&self, f: &QPoly) -> QPoly {
        f.lift_to(&self.ring_s).expect("R_b embeds in S")
    }
}

/// Result of a full eliminate-then-reduce pipeline run.
#[derive(Debug, Clone)]
pub struct Contraction {
    /// Gröbner basis of the input ideal in `S` (Buchberger output).
    pub gb_s: Vec<QPoly>,
    /// Canonical reduced Gröbner basis of the contraction, in `ring_rb`.
    pub reduced: Vec<QPoly>,
}

/// Computes the contraction to `R_b` of the ideal spanned by `gens`
/// (elements of `ring_s`): Buchberger under the elimination order, drop
/// `t`-bearing members, then minimalize and reduce under the restricted
/// order.
pub fn contract_to_rb(
    rees: &ReesContext,
    gens: &[QPoly],
    strategy: Strategy,
    limits: &Limits,
) -> Result<Contraction, GroebnerError> {
    let pres = IdealPresentation::new(gens.to_vec(), rees.order_s.clone())?;
    let gb_s = buchberger(&pres, strategy, limits)?;
    let (sub, kept, sub_order) = crate::groebner::eliminate(&gb_s, &rees.order_s, &["t"])?;
    debug_assert_eq!(sub, rees.ring_rb);
    debug_assert_eq!(sub_order, rees.order_rb);
    let reduced = minimalize_and_reduce(&kept, &rees.order_rb, limits)?;
    Ok(Contraction { gb_s, reduced })
}

/// Reduced Gröbner basis of the full defining ideal `E_b`, with every
/// member certified by the independent substitution oracle.
pub fn compute_e_b(
    rees: &ReesContext,
    strategy: Strategy,
    limits: &Limits,
) -> Result<Contraction, GroebnerError> {
    let gens: Vec<QPoly> = rees.rees_generators().into_iter().map(|(_, p)| p).collect();
    let out = contract_to_rb(rees, &gens, strategy, limits)?;
    for g in &out.reduced {
        let wit = curve::kernel_witness(g, &rees.params).expect("known variables");
        assert!(
            wit.vanishes(),
            "computed defining-ideal member fails the substitution oracle: {g}"
        );
    }
    Ok(out)
}

/// Reduced Gröbner basis of the contraction of the `P(i,j)`/`P(Ψ(b,3−b))`
/// subideal (the "degree-one" part used by the linear-type analysis).
pub fn compute_q_b(
    rees: &ReesContext,
    strategy: Strategy,
    limits: &Limits,
) -> Result<Contraction, GroebnerError> {
    let gens: Vec<QPoly> = rees.q_generators().into_iter().map(|(_, p)| p).collect();
    let out = contract_to_rb(rees, &gens, strategy, limits)?;
    for g in &out.reduced {
        let wit = curve::kernel_witness(g, &rees.params).expect("known variables");
        assert!(
            wit.vanishes(),
            "computed subideal member fails the substitution oracle: {g}"
        );
    }
    Ok(out)
}

/// Total degree in the fiber variables (`Ψ`'s and `Φ`'s) of the largest
/// term of `f`; 0 for constants and `X`-only polynomials.
pub fn fiber_degree(rees: &ReesContext, f: &QPoly) -> u32 {
    let fiber: Vec<usize> = rees
        .fiber_names()
        .iter()
        .filter_map(|n| f.ctx().index_of(n))
        .collect();
    f.terms()
        .map(|(m, _)| fiber.iter().map(|&i| m.exp(i)).sum::<u32>())
        .max()
        .unwrap_or(0)
}
