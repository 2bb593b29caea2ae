//! Monomial orders: weighted reverse-lex and the seven-tier elimination
//! order on the presentation ring extended by the tag variable `t`.
//!
//! Both kinds run through one tiered comparator:
//!
//! 1. degree in `t` (skipped when the spec has no `t` block);
//! 2. weighted degree of the `t`-free part;
//! 3. total degree in the Ψ block, then
//! 4. reverse-lex inside the Ψ block;
//! 5. total degree in the Φ block, then
//! 6. reverse-lex inside the Φ block;
//! 7. reverse-lex inside the 𝕏 block (sequence X1, X2, X3, X0 — the
//!    weight-minimal variable deliberately last).
//!
//! "Reverse-lex" here means: take the exponent difference along the block
//! sequence; the monomial whose difference has a *negative* rightmost
//! nonzero entry is the greater one.

use crate::field::Coeff;
use crate::ring::{Monomial, Polynomial, RingContext};
use std::cmp::Ordering;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("monomial does not belong to the order's ring context")]
    ContextMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("not a subcontext of the order's ring context")]
    NotASubcontext,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    WeightedRevLex,
    EliminationSeven,
}

/// A fully specified monomial order on one ring context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpec {
    ctx: Arc<RingContext>,
    kind: OrderKind,
    t_var: Option<usize>,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    gamma: Vec<usize>,
}

/// Where a comparison resolved: `tier` is 1..=7, or 0 for equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonTrace {
    pub tier: u8,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
struct Resolution {
    ord: Ordering,
    tier: u8,
    left: i128,
    right: i128,
    /// Variable index for the rev-lex tiers; None for the degree tiers.
    position: Option<usize>,
}

impl OrderSpec {
    /// Weighted reverse-lex with an explicit variable sequence covering the
    /// whole context.
    pub fn weighted_revlex(ctx: &Arc<RingContext>, alpha: &[&str]) -> OrderSpec {
        let spec = OrderSpec {
            ctx: Arc::clone(ctx),
            kind: OrderKind::WeightedRevLex,
            t_var: None,
            alpha: resolve_names(ctx, alpha),
            beta: Vec::new(),
            gamma: Vec::new(),
        };
        spec.assert_partition();
        spec
    }

    /// The seven-tier elimination order. `alpha`, `beta`, `gamma` together
    /// with `t` must partition the context's variables.
    pub fn elimination_seven(
        ctx: &Arc<RingContext>,
        t: &str,
        alpha: &[&str],
        beta: &[&str],
        gamma: &[&str],
    ) -> OrderSpec {
        let spec = OrderSpec {
            ctx: Arc::clone(ctx),
            kind: OrderKind::EliminationSeven,
            t_var: Some(ctx.index_of(t).unwrap_or_else(|| panic!("unknown variable `{t}`"))),
            alpha: resolve_names(ctx, alpha),
            beta: resolve_names(ctx, beta),
            gamma: resolve_names(ctx, gamma),
        };
        spec.assert_partition();
        spec
    }

    fn assert_partition(&self) {
        let mut seen = vec![false; self.ctx.len()];
        let mut mark = |i: usize| {
            assert!(!seen[i], "variable `{}` listed twice", self.ctx.name(i));
            seen[i] = true;
        };
        if let Some(t) = self.t_var {
            mark(t);
        }
        for &i in self.beta.iter().chain(&self.gamma).chain(&self.alpha) {
            mark(i);
        }
        for (i, s) in seen.iter().enumerate() {
            assert!(*s, "variable `{}` missing from the order blocks", self.ctx.name(i));
        }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn t_var(&self) -> Option<usize> {
        self.t_var
    }

    /// True when dropping exactly `drop` keeps Gröbner bases contracting
    /// correctly: the order must weigh the dropped variables first. For this
    /// family that means: nothing dropped, or exactly the `t` variable of a
    /// seven-tier order.
    pub fn eliminates(&self, drop: &[&str]) -> bool {
        match drop {
            [] => true,
            [only] => self
                .t_var
                .is_some_and(|t| self.ctx.name(t) == *only),
            _ => false,
        }
    }

    fn resolve(&self, u: &Monomial, v: &Monomial) -> Resolution {
        debug_assert_eq!(u.nvars(), self.ctx.len());
        debug_assert_eq!(v.nvars(), self.ctx.len());
        // Tier 1: t-degree.
        if let Some(t) = self.t_var {
            let (du, dv) = (u.exp(t), v.exp(t));
            if du != dv {
                return Resolution {
                    ord: du.cmp(&dv),
                    tier: 1,
                    left: du as i128,
                    right: dv as i128,
                    position: None,
                };
            }
        }
        // Tier 2: weighted degree of the t-free part.
        let wu = u.weighted_degree(self.ctx.weights(), self.t_var);
        let wv = v.weighted_degree(self.ctx.weights(), self.t_var);
        if wu != wv {
            return Resolution {
                ord: wu.cmp(&wv),
                tier: 2,
                left: wu as i128,
                right: wv as i128,
                position: None,
            };
        }
        // Tiers 3-4 (Ψ block), 5-6 (Φ block), 7 (𝕏 block).
        for (block, deg_tier) in [(&self.beta, 3u8), (&self.gamma, 5), (&self.alpha, 7)] {
            if block.is_empty() {
                continue;
            }
            if deg_tier != 7 {
                let su: u64 = block.iter().map(|&i| u.exp(i) as u64).sum();
                let sv: u64 = block.iter().map(|&i| v.exp(i) as u64).sum();
                if su != sv {
                    return Resolution {
                        ord: su.cmp(&sv),
                        tier: deg_tier,
                        left: su as i128,
                        right: sv as i128,
                        position: None,
                    };
                }
            }
            // Reverse-lex inside the block: rightmost nonzero difference
            // negative => greater.
            for &i in block.iter().rev() {
                let (eu, ev) = (u.exp(i), v.exp(i));
                if eu != ev {
                    return Resolution {
                        ord: if eu < ev { Ordering::Greater } else { Ordering::Less },
                        tier: if deg_tier == 7 { 7 } else { deg_tier + 1 },
                        left: eu as i128,
                        right: ev as i128,
                        position: Some(i),
                    };
                }
            }
        }
        Resolution {
            ord: Ordering::Equal,
            tier: 0,
            left: 0,
            right: 0,
            position: None,
        }
    }

    /// Fast comparator for engine internals. Panics on arity mismatch.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        self.resolve(u, v).ord
    }

    /// Documented comparison with a resolution trace.
    pub fn compare(
        &self,
        u: &Monomial,
        v: &Monomial,
    ) -> Result<(Ordering, ComparisonTrace), OrderError> {
        if u.nvars() != self.ctx.len() || v.nvars() != self.ctx.len() {
            return Err(OrderError::ContextMismatch);
        }
        let r = self.resolve(u, v);
        let detail = match (r.tier, r.position) {
            (0, _) => "equal exponent vectors".to_string(),
            (1, _) => format!("t-degree {} vs {}", r.left, r.right),
            (2, _) => format!("weighted degree {} vs {}", r.left, r.right),
            (3, _) | (5, _) => format!("block degree {} vs {}", r.left, r.right),
            (_, Some(i)) => format!(
                "rev-lex at `{}`: exponent {} vs {}",
                self.ctx.name(i),
                r.left,
                r.right
            ),
            _ => unreachable!(),
        };
        Ok((r.ord, ComparisonTrace { tier: r.tier, detail }))
    }

    /// The induced order on a subcontext (same names and weights, any
    /// subset; dropped variables leave their blocks).
    pub fn restricted_order(&self, sub: &Arc<RingContext>) -> Result<OrderSpec, OrderError> {
        let map = sub
            .embedding_into(&self.ctx)
            .ok_or(OrderError::NotASubcontext)?;
        // Old index -> new index.
        let back: std::collections::BTreeMap<usize, usize> =
            map.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let remap = |block: &[usize]| -> Vec<usize> {
            block.iter().filter_map(|i| back.get(i).copied()).collect()
        };
        let t_var = self.t_var.and_then(|t| back.get(&t).copied());
        let alpha = remap(&self.alpha);
        let beta = remap(&self.beta);
        let gamma = remap(&self.gamma);
        let kind = if t_var.is_none() && beta.is_empty() && gamma.is_empty() {
            OrderKind::WeightedRevLex
        } else {
            OrderKind::EliminationSeven
        };
        let spec = OrderSpec {
            ctx: Arc::clone(sub),
            kind,
            t_var,
            alpha,
            beta,
            gamma,
        };
        spec.assert_partition();
        Ok(spec)
    }

    /// JSON fragment describing the order (embedded in reports).
    pub fn to_json(&self) -> serde_json::Value {
        let names = |block: &[usize]| -> Vec<&str> {
            block.iter().map(|&i| self.ctx.name(i)).collect()
        };
        serde_json::json!({
            "kind": match self.kind {
                OrderKind::WeightedRevLex => "weighted_revlex",
                OrderKind::EliminationSeven => "elimination_seven",
            },
            "t": self.t_var.map(|i| self.ctx.name(i)),
            "alpha": names(&self.alpha),
            "beta": names(&self.beta),
            "gamma": names(&self.gamma),
            "weights": self
                .ctx
                .names()
                .iter()
                .zip(self.ctx.weights())
                .map(|(n, w)| (n.clone(), serde_json::json!(w)))
                .collect::<serde_json::Map<String, serde_json::Value>>(),
        })
    }
}

fn resolve_names(ctx: &RingContext, names: &[&str]) -> Vec<usize> {
    names
        .iter()
        .map(|n| {
            ctx.index_of(n)
                .unwrap_or_else(|| panic!("unknown variable `{n}`"))
        })
        .collect()
}

/// Leading term of a nonzero polynomial under `spec`.
pub fn leading_term<'a, C: Coeff>(
    f: &'a Polynomial<C>,
    spec: &OrderSpec,
) -> Result<(&'a Monomial, &'a C), OrderError> {
    if f.ctx() != spec.ctx() {
        return Err(OrderError::ContextMismatch);
    }
    f.max_term_by(|a, b| spec.cmp(a, b))
        .ok_or(OrderError::ZeroPolynomial)
}

/// Leading monomial, cloned for convenience.
pub fn leading_monomial<C: Coeff>(
    f: &Polynomial<C>,
    spec: &OrderSpec,
) -> Result<Monomial, OrderError> {
    leading_term(f, spec).map(|(m, _)| m.clone())
}

/// Canonical text of `f` with terms descending under `spec`.
pub fn canonical_text<C: Coeff>(f: &Polynomial<C>, spec: &OrderSpec) -> String {
    crate::text::render_polynomial(f, |a, b| spec.cmp(a, b))
}
