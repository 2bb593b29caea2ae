//! Acceptance suite: nine criteria over the full parameter matrix
//! {(4,1), (7,2), (5,1), (8,1), (6,1), (9,2)}, one test per criterion,
//! each printing a single `ACCEPTANCE <n> ...: PASS|FAIL` line (run with
//! `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Two criteria assert reference values that the exact computation
//! contradicts; they fail by design and carry the diagnostics in their
//! output: criterion 3 (the five-leading-monomial claim at b = 3 — the
//! reduced basis keeps a sixth member — and the remainder-zero claim for
//! the Koszul member, which divides to itself) and criterion 6 (the
//! rank/verdict table — at the two a = 1 points the rank reaches the
//! codimension and the localized ring is regular).

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rees_core::curve::{derive_params, kernel_witness, CurveParams};
use rees_core::groebner::{
    buchberger, divide, ideals_equal, minimalize_and_reduce, IdealPresentation, Limits, Strategy,
};
use rees_core::order::leading_monomial;
use rees_core::rees::{fiber_degree, Contraction, Family, ReesContext};
use rees_core::ring::{Monomial, QPoly};
use rees_core::smooth::{smoothness_verdict_with_basis, JacobianReport, Verdict};
use rees_core::verify::{Target, TheoremOutcome, Verifier};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::LazyLock;
use std::time::{Duration, Instant};

const MATRIX: [(u64, u64); 6] = [(4, 1), (7, 2), (5, 1), (8, 1), (6, 1), (9, 2)];

struct Instance {
    m0: u64,
    d: u64,
    params: CurveParams,
    rees: ReesContext,
    outcomes: Vec<TheoremOutcome>,
    e_b: Contraction,
    q_b: Contraction,
    jacobian: JacobianReport,
    verify_wall: Duration,
}

static INSTANCES: LazyLock<Vec<Instance>> = LazyLock::new(|| {
    MATRIX
        .iter()
        .map(|&(m0, d)| {
            let params = derive_params(m0, d).expect("matrix parameters are valid");
            let start = Instant::now();
            let mut verifier = Verifier::new(&params);
            let outcomes = verifier.run_all().expect("verification must complete");
            let verify_wall = start.elapsed();
            let e_b = verifier.e_b().expect("pipeline").clone();
            let q_b = verifier.q_b().expect("pipeline").clone();
            let rees = verifier.rees().clone();
            let jacobian = smoothness_verdict_with_basis(&rees, &e_b.reduced, 42)
                .expect("audit must complete");
            Instance {
                m0,
                d,
                params,
                rees,
                outcomes,
                e_b,
                q_b,
                jacobian,
                verify_wall,
            }
        })
        .collect()
});

fn outcome(inst: &Instance, t: Target) -> Option<&TheoremOutcome> {
    inst.outcomes.iter().find(|o| o.target == t)
}

/// Prints the single status line for a criterion and returns `pass`.
fn announce(criterion: &str, pass: bool, detail: &str) -> bool {
    let status = if pass { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        println!("ACCEPTANCE {criterion}: {status}");
    } else {
        println!("ACCEPTANCE {criterion}: {status} — {detail}");
    }
    pass
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            return rest.trim().trim_end_matches("kB").trim().parse().ok();
        }
    }
    None
}

#[test]
fn criterion_1_parameter_matrix() {
    let mut problems = Vec::new();
    for inst in INSTANCES.iter() {
        for o in &inst.outcomes {
            if !o.pass {
                problems.push(format!(
                    "target {} fails at ({},{})",
                    o.target.id(),
                    inst.m0,
                    inst.d
                ));
            }
        }
        if inst.verify_wall >= Duration::from_secs(60) {
            problems.push(format!(
                "({},{}) took {:?} (budget 60 s)",
                inst.m0, inst.d, inst.verify_wall
            ));
        }
    }
    if let Some(kb) = peak_rss_kb() {
        if kb >= 1_048_576 {
            problems.push(format!("peak RSS {kb} kB exceeds 1 GB"));
        }
    }
    let detail = if problems.is_empty() {
        format!(
            "all targets pass at all 6 points; slowest instance {:?}",
            INSTANCES.iter().map(|i| i.verify_wall).max().unwrap()
        )
    } else {
        problems.join("; ")
    };
    let pass = announce("1 (parameter matrix: verify all targets)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_2_claimed_basis_is_groebner() {
    let mut problems = Vec::new();
    for inst in INSTANCES.iter() {
        let o = outcome(inst, Target::Thm51).expect("always applicable");
        if !o.pass {
            problems.push(format!("basis claim fails at ({},{})", inst.m0, inst.d));
        }
        for c in &o.certificates {
            if !c.skipped_coprime && !c.remainder_is_zero {
                problems.push(format!(
                    "S-pair ({}, {}) has nonzero remainder at ({},{})",
                    c.left, c.right, inst.m0, inst.d
                ));
            }
        }
        let excluded = o.notes.iter().any(|n| n.contains("excluded from the basis check"));
        if excluded {
            // Contingency: exclusion is only acceptable when the
            // elimination-ideal equality of the printed families still
            // holds at this point.
            let fallback = outcome(inst, Target::Thm56)
                .or_else(|| outcome(inst, Target::Cor54))
                .map(|o| o.pass)
                .unwrap_or(false);
            if !fallback {
                problems.push(format!(
                    "members excluded at ({},{}) without a passing ideal-equality fallback",
                    inst.m0, inst.d
                ));
            }
        }
    }
    let n_certs: usize = INSTANCES
        .iter()
        .map(|i| outcome(i, Target::Thm51).unwrap().certificates.len())
        .sum();
    let detail = if problems.is_empty() {
        format!("{n_certs} S-pair certificates across the matrix, all confirming")
    } else {
        problems.join("; ")
    };
    let pass = announce("2 (claimed relation basis is a Gröbner basis)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_3_five_leading_monomials_at_b3() {
    let mut problems = Vec::new();
    let limits = Limits::default();
    for inst in INSTANCES.iter().filter(|i| i.params.b == 3) {
        let rees = &inst.rees;
        let reduced = &inst.q_b.reduced;
        // Frozen cross-check: at b = 3 the subideal contraction is the
        // whole defining ideal.
        assert_eq!(reduced, &inst.e_b.reduced);

        let five = [
            Family::L(0),
            Family::L(1),
            Family::B(1, 1),
            Family::B(1, 2),
            Family::B(2, 2),
        ];
        let printed: Vec<QPoly> = five.iter().map(|f| rees.to_rb(&rees.family(*f))).collect();
        let claimed_lms: BTreeSet<Monomial> = printed
            .iter()
            .map(|p| leading_monomial(p, &rees.order_rb).unwrap())
            .collect();
        let computed_lms: BTreeSet<Monomial> = reduced
            .iter()
            .map(|p| leading_monomial(p, &rees.order_rb).unwrap())
            .collect();
        if computed_lms != claimed_lms {
            let extra: Vec<String> = computed_lms
                .difference(&claimed_lms)
                .map(|m| {
                    rees_core::order::canonical_text(
                        &QPoly::monomial(&rees.ring_rb, m.clone(), rees_core::field::rat(1, 1)),
                        &rees.order_rb,
                    )
                })
                .collect();
            problems.push(format!(
                "({},{}): reduced basis has {} leading monomials, not 5; extra: {}",
                inst.m0,
                inst.d,
                computed_lms.len(),
                extra.join(", ")
            ));
        }

        let pres_a = IdealPresentation::new(reduced.clone(), rees.order_rb.clone()).unwrap();
        let pres_b = IdealPresentation::new(printed.clone(), rees.order_rb.clone()).unwrap();
        let eq = ideals_equal(&pres_a, &pres_b, Strategy::Normal, &limits).unwrap();
        if !eq.holds() {
            problems.push(format!(
                "({},{}): ideal equality with the printed set fails",
                inst.m0, inst.d
            ));
        }

        let d_member = rees.to_rb(&rees.family(Family::D));
        let l0 = rees.to_rb(&rees.family(Family::L(0)));
        let l1 = rees.to_rb(&rees.family(Family::L(1)));
        let x0 = QPoly::var(&rees.ring_rb, "X0").unwrap();
        let x1 = QPoly::var(&rees.ring_rb, "X1").unwrap();
        assert_eq!(
            &(&x0 * &l1) - &(&x1 * &l0),
            d_member,
            "the exact identity behind the membership claim"
        );
        let div = divide(&d_member, &[l0, l1], &rees.order_rb, &limits).unwrap();
        if !div.remainder.is_zero() {
            problems.push(format!(
                "({},{}): D does not reduce to zero against {{L(0), L(1)}} — no term of D is \
                 divisible by either leading monomial, remainder equals D itself (membership \
                 holds only via the identity D = X0*L(1) - X1*L(0))",
                inst.m0, inst.d
            ));
        }
    }
    let detail = if problems.is_empty() {
        "reduced basis at b = 3 has exactly the five printed leading monomials".to_string()
    } else {
        problems.join("; ")
    };
    let pass = announce(
        "3 (five leading monomials and remainder-zero removal at b = 3)",
        problems.is_empty(),
        &detail,
    );
    assert!(pass, "{detail}");
}

#[test]
fn criterion_4_defining_ideal_equals_printed_families() {
    let mut problems = Vec::new();
    for inst in INSTANCES.iter().filter(|i| i.params.b == 1 || i.params.b == 2) {
        let o = outcome(inst, Target::Thm56).expect("applicable at b in {1,2}");
        let eq = o.ideal_equality.expect("equality computed");
        if !(eq.forward && eq.backward) {
            problems.push(format!(
                "({},{}): forward {}, backward {}",
                inst.m0, inst.d, eq.forward, eq.backward
            ));
        }
        if !o.pass {
            problems.push(format!("({},{}): target fails", inst.m0, inst.d));
        }
    }
    let detail = if problems.is_empty() {
        "both inclusion directions verified at all four b ∈ {1,2} points".to_string()
    } else {
        problems.join("; ")
    };
    let pass = announce("4 (defining ideal equals the printed families, both directions)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_5_linear_type_structure() {
    let mut problems = Vec::new();
    let mut checked = 0usize;
    for inst in INSTANCES.iter() {
        let o = outcome(inst, Target::LinearType).expect("always applicable");
        if !o.pass {
            problems.push(format!("linear-type target fails at ({},{})", inst.m0, inst.d));
        }
        // Direct structural re-check, independent of the target's own code
        // path: fiber degree of every member of the relevant contraction.
        let set = if inst.params.b == 3 {
            &inst.e_b.reduced
        } else {
            &inst.q_b.reduced
        };
        for g in set {
            checked += 1;
            let deg = fiber_degree(&inst.rees, g);
            if deg > 1 {
                problems.push(format!(
                    "({},{}): member with fiber degree {}",
                    inst.m0, inst.d, deg
                ));
            }
        }
    }
    let detail = if problems.is_empty() {
        format!("{checked} contraction members, all of fiber degree ≤ 1")
    } else {
        problems.join("; ")
    };
    let pass = announce("5 (contractions are linear in the fiber variables)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_6_jacobian_table() {
    let mut problems = Vec::new();
    for inst in INSTANCES.iter() {
        let b = inst.params.b;
        let r = &inst.jacobian;
        let expected_rank = match b {
            1 => 3,
            2 => 2,
            _ => 0,
        };
        let expected_codim = (6 - b) as usize;
        let expected_columns: BTreeSet<String> = match b {
            1 => ["X0", "X1", "P[1,0]"].iter().map(|s| s.to_string()).collect(),
            2 => ["X0", "X1"].iter().map(|s| s.to_string()).collect(),
            _ => BTreeSet::new(),
        };
        if r.rank != expected_rank {
            problems.push(format!(
                "({},{}): rank {} (table says {})",
                inst.m0, inst.d, r.rank, expected_rank
            ));
        }
        if r.codim != expected_codim {
            problems.push(format!(
                "({},{}): codim {} (table says {})",
                inst.m0, inst.d, r.codim, expected_codim
            ));
        }
        if r.verdict != Verdict::NotRegular {
            problems.push(format!(
                "({},{}): verdict {} (table says not_regular; rank reached the codimension)",
                inst.m0, inst.d, r.verdict
            ));
        }
        let columns: BTreeSet<String> = r.nonzero_columns.iter().cloned().collect();
        if columns != expected_columns {
            problems.push(format!(
                "({},{}): nonzero columns {{{}}} (table says {{{}}})",
                inst.m0,
                inst.d,
                r.nonzero_columns.join(", "),
                expected_columns.iter().cloned().collect::<Vec<_>>().join(", ")
            ));
        }
    }
    let detail = if problems.is_empty() {
        "ranks, codimensions, verdicts, and column sets match the table at all six points"
            .to_string()
    } else {
        problems.join("; ")
    };
    let pass = announce("6 (rank/codimension/verdict table)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_7_substitution_oracle_on_every_labeled_member() {
    let mut count = 0usize;
    let mut failures = Vec::new();
    for inst in INSTANCES.iter() {
        for g in &inst.e_b.reduced {
            count += 1;
            let wit = kernel_witness(g, &inst.params).expect("known variables");
            if !wit.stage_one.is_zero() || !wit.stage_two.is_zero() {
                failures.push(format!(
                    "member at ({},{}) fails: stage one {} terms, stage two {} terms",
                    inst.m0,
                    inst.d,
                    wit.stage_one.num_terms(),
                    wit.stage_two.num_terms()
                ));
            }
        }
    }
    let enough = count >= 30;
    let detail = if failures.is_empty() && enough {
        format!("{count} defining-ideal members, all map to the exact zero of both oracle stages")
    } else if !enough {
        format!("only {count} members labeled (need ≥ 30)")
    } else {
        failures.join("; ")
    };
    let pass = announce("7 (independent substitution oracle)", failures.is_empty() && enough, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_8_property_suite() {
    let mut problems = Vec::new();

    // Order axioms: 10^4 seeded random monomial pairs/triples in each of
    // the three elimination-order contexts (one per b).
    for (m0, d) in [(4u64, 1u64), (5, 1), (6, 1)] {
        let rees = rees_core::rees::build_ambient(&derive_params(m0, d).unwrap());
        let order = &rees.order_s;
        let nvars = rees.ring_s.len();
        let t_idx = rees.ring_s.index_of("t").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + m0 * 10 + d);
        let mut violations = 0usize;
        for _ in 0..10_000 {
            let sample = |rng: &mut ChaCha8Rng| {
                let exps: Vec<u32> = (0..nvars)
                    .map(|k| {
                        if k == t_idx {
                            rng.gen_range(0..3)
                        } else {
                            rng.gen_range(0..6)
                        }
                    })
                    .collect();
                Monomial::from_exps(exps)
            };
            let u = sample(&mut rng);
            let v = sample(&mut rng);
            let w = sample(&mut rng);
            let c_uv = order.cmp(&u, &v);
            // Totality with antisymmetry.
            if c_uv != order.cmp(&v, &u).reverse() {
                violations += 1;
            }
            if (c_uv == Ordering::Equal) != (u == v) {
                violations += 1;
            }
            // Multiplicativity.
            if order.cmp(&u.mul(&w), &v.mul(&w)) != c_uv {
                violations += 1;
            }
            // Transitivity.
            let c_vw = order.cmp(&v, &w);
            if c_uv != Ordering::Greater
                && c_vw != Ordering::Greater
                && order.cmp(&u, &w) == Ordering::Greater
            {
                violations += 1;
            }
            // The tag block dominates everything else.
            if u.exp(t_idx) > v.exp(t_idx) && c_uv != Ordering::Greater {
                violations += 1;
            }
        }
        if violations > 0 {
            problems.push(format!(
                "({m0},{d}): {violations} order-axiom violations in 10^4 samples"
            ));
        }
    }

    // Division invariant: the engine asserts the recombination identity on
    // every division it performs (always-on contract); exercise it here
    // explicitly once per instance on a nontrivial member.
    let limits = Limits::default();
    for inst in INSTANCES.iter() {
        let rees = &inst.rees;
        let basis = &inst.e_b.reduced;
        let probe = {
            let g0 = &basis[0];
            let g1 = basis.last().unwrap();
            let x1 = QPoly::var(&rees.ring_rb, "X1").unwrap();
            &(g0 * &x1) + g1
        };
        let div = divide(&probe, basis, &rees.order_rb, &limits).unwrap();
        let mut recombined = div.remainder.clone();
        for (q, g) in div.quotients.iter().zip(basis) {
            recombined = &recombined + &(q * g);
        }
        if recombined != probe {
            problems.push(format!(
                "({},{}): division recombination mismatch",
                inst.m0, inst.d
            ));
        }
        if !div.remainder.is_zero() {
            problems.push(format!(
                "({},{}): reduced-basis combination did not reduce to zero",
                inst.m0, inst.d
            ));
        }
    }

    // Canonicality: three seeded shuffles of each instance's generator
    // list produce the identical reduced basis.
    for inst in INSTANCES.iter() {
        let rees = &inst.rees;
        let gens: Vec<QPoly> = rees.rees_generators().into_iter().map(|(_, p)| p).collect();
        for shuffle in 0..3u64 {
            let mut shuffled = gens.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(0xCA40 + shuffle);
            shuffled.shuffle(&mut rng);
            let pres = IdealPresentation::new(shuffled, rees.order_s.clone()).unwrap();
            let gb = buchberger(&pres, Strategy::Normal, &limits).unwrap();
            let (_, kept, sub_order) =
                rees_core::groebner::eliminate(&gb, &rees.order_s, &["t"]).unwrap();
            let reduced = minimalize_and_reduce(&kept, &sub_order, &limits).unwrap();
            if reduced != inst.e_b.reduced {
                problems.push(format!(
                    "({},{}): shuffle {} changed the reduced basis",
                    inst.m0, inst.d, shuffle
                ));
            }
        }
    }

    let detail = if problems.is_empty() {
        "3×10^4 order samples clean; division recombination exact; 3 shuffles per instance \
         reproduce the canonical basis (the engine additionally asserts the division \
         invariant on every division it performs)"
            .to_string()
    } else {
        problems.join("; ")
    };
    let pass = announce("8 (property suite: order axioms, division invariant, canonicality)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}

#[test]
fn criterion_9_combination_identity_for_b() {
    let mut problems = Vec::new();
    for inst in INSTANCES.iter().filter(|i| i.params.b == 1 || i.params.b == 2) {
        let o = outcome(inst, Target::BIdentity).expect("applicable at b in {1,2}");
        if !o.pass {
            problems.push(format!("identity target fails at ({},{})", inst.m0, inst.d));
        }
        let exact = o
            .notes
            .iter()
            .filter(|n| n.ends_with("identity: exact"))
            .count();
        let discrepancy_reported = !o.term_diffs.is_empty();
        let both_sides_confirmed = o.notes.iter().any(|n| {
            n.contains("left side in the defining ideal: true")
                && n.contains("right side in the defining ideal: true")
        });
        // Of the four ordered pairs, three hold exactly; the fourth must
        // come with an itemized report plus oracle confirmation.
        if exact + 1 != 4 || !discrepancy_reported || !both_sides_confirmed {
            problems.push(format!(
                "({},{}): {} exact pairs, diff reported: {}, sides confirmed: {}",
                inst.m0, inst.d, exact, discrepancy_reported, both_sides_confirmed
            ));
        }
    }
    let detail = if problems.is_empty() {
        "three ordered pairs exact; the degenerate pair carries an itemized diff with both \
         sides oracle-confirmed in the defining ideal"
            .to_string()
    } else {
        problems.join("; ")
    };
    let pass = announce("9 (combination identity for the B family)", problems.is_empty(), &detail);
    assert!(pass, "{detail}");
}
