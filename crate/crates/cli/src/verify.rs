//! Randomised cross-validation. Trials run in parallel but are merged in
//! seed order, and nothing time-dependent is reported, so a seeded run is
//! byte-for-byte reproducible.

use std::fmt::Write as _;

use degtree::degree::{direct_formula_value, grouped_formula_value, nst_buckets};
use degtree::fpoly::{
    brute_force_edge_cover, brute_force_matching, brute_force_perfect_matchings, edge_cover_number_from_f,
    matching_number_from_f, perfect_matchings_from_f,
};
use degtree::identity::probe_identity;
use degtree::random::connected_suite;
use degtree::*;
use rayon::prelude::*;

use crate::commands::{error_outcome, to_json};
use crate::report::{CheckCounts, DisconnectedProbe, SuiteReport, Violation};
use crate::{GlobalOpts, Outcome, VerifyArgs, EXIT_VIOLATION};

/// Weight point `k` of the trial seeded with `seed`.
pub fn weight_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k)
}

/// Root used for the identity and grouping checks of a trial.
fn trial_root(seed: u64, n: usize) -> usize {
    (seed % n as u64) as usize
}

#[derive(Debug, Default)]
struct TrialOutcome {
    checks: CheckCounts,
    failures: Vec<(String, String)>,
}

impl TrialOutcome {
    fn fail(&mut self, check: &str, detail: String) {
        self.failures.push((check.to_string(), detail));
    }
}

/// All checks on one connected graph.
fn check_trial(g: &Multigraph, seed: u64, weight_points: usize, budget: usize) -> TrialOutcome {
    let mut out = TrialOutcome::default();
    let n = g.vertex_count();
    let m = g.edge_count();

    let mt = match tau_matrix_tree(g) {
        Ok(t) => t,
        Err(e) => {
            out.fail("matrix-tree", e.to_string());
            return out;
        }
    };
    let mut others = vec![
        ("del-con", tau_deletion_contraction_with(g, Pivot::MinDegree)),
        ("del-con-last-pair", tau_deletion_contraction_with(g, Pivot::LastPair)),
        ("enum", count_by_enumeration(g)),
    ];
    for u in 0..n {
        others.push(("degree", tau_via_grouped_formula(g, u)));
        others.push(("degree-direct", tau_via_direct_formula(g, u)));
    }
    out.checks.tau_methods += 1 + others.len();
    for (name, value) in others {
        match value {
            Ok(v) if v == mt => {}
            Ok(v) => out.fail("tau", format!("{name} gave {v}, matrix-tree gave {mt}")),
            Err(e) => out.fail("tau", format!("{name}: {e}")),
        }
    }

    for u in 0..n {
        out.checks.bound_roots += 1;
        match thomassen_bound(g, u) {
            Ok(b) if mt <= b => {}
            Ok(b) => out.fail("bound", format!("root {u}: bound {b} < tau {mt}")),
            Err(e) => out.fail("bound", e.to_string()),
        }
    }

    let root = trial_root(seed, n);
    for k in 0..weight_points as u64 {
        out.checks.identity_points += 1;
        let w = EdgeWeights::seeded(m, -1000, 1000, weight_seed(seed, k));
        match check_identity(g, root, &w) {
            Ok(r) if r.holds => {}
            Ok(r) => {
                out.fail("identity", format!("root {root} point {k}: lhs {} != {} + {}", r.lhs, r.tau_term, r.nst_sum))
            }
            Err(e) => out.fail("identity", e.to_string()),
        }
    }

    if !g.degrees().contains(&0) && n <= fpoly::DEFAULT_MAX_VERTICES {
        out.checks.fpoly_graphs += 1;
        if let Err(detail) = check_fpoly(g, budget) {
            out.fail("fpoly", detail);
        }
    }

    out.checks.grouping_roots += 1;
    match nst_buckets(g, root) {
        Ok(buckets) => {
            for (s, count) in buckets {
                let inside = g.induced(s).expect("nonempty").graph;
                let tau = tau_matrix_tree(&inside).expect("nonempty");
                if tau != BigUint::from(count) {
                    out.fail("grouping", format!("root {root} set {s}: {count} subtrees, tau {tau}"));
                }
            }
        }
        Err(e) => out.fail("grouping", e.to_string()),
    }
    out
}

fn check_fpoly(g: &Multigraph, budget: usize) -> std::result::Result<(), String> {
    let b = ExpansionBudget { max_vertices: fpoly::DEFAULT_MAX_VERTICES, max_terms: budget };
    let run = || -> Result<Option<String>> {
        let terms = expand_f(g, b)?;
        let (nu, nu_o) = (matching_number_from_f(&terms)?, brute_force_matching(g)?);
        let (rho, rho_o) = (edge_cover_number_from_f(&terms)?, brute_force_edge_cover(g)?);
        let mut pms = perfect_matchings_from_f(&terms)?;
        pms.sort();
        let pms_o = brute_force_perfect_matchings(g)?;
        Ok(if nu != nu_o {
            Some(format!("nu {nu} vs oracle {nu_o}"))
        } else if rho != rho_o {
            Some(format!("rho {rho} vs oracle {rho_o}"))
        } else if pms != pms_o {
            Some(format!("{} perfect matchings vs oracle {}", pms.len(), pms_o.len()))
        } else {
            None
        })
    };
    match run() {
        Ok(None) => Ok(()),
        Ok(Some(d)) => Err(d),
        Err(e) => Err(e.to_string()),
    }
}

/// Graphs of the connected suite in seed order.
fn suite(args: &VerifyArgs) -> Result<Vec<(RandomSpec, Multigraph)>> {
    if args.vary {
        return connected_suite(args.seed, args.trials, 1, args.n, args.m, args.p);
    }
    (0..args.trials as u64)
        .map(|i| {
            let spec = RandomSpec {
                n: args.n,
                m: args.m,
                parallel_prob: args.p,
                seed: args.seed.wrapping_add(i),
                connected: true,
            };
            random_multigraph(&spec).map(|g| (spec, g))
        })
        .collect()
}

/// Empirical status of the degree formula and identity on disconnected
/// inputs. Draws unconstrained graphs and keeps the disconnected ones.
fn probe_disconnected(args: &VerifyArgs) -> Result<DisconnectedProbe> {
    let graphs: Vec<(u64, Multigraph)> = (0..args.trials as u64)
        .map(|i| {
            let seed = args.seed.wrapping_add(i);
            let spec = RandomSpec { n: args.n, m: args.m, parallel_prob: args.p, seed, connected: false };
            random_multigraph(&spec).map(|g| (seed, g))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Result<DisconnectedProbe>> = graphs
        .par_iter()
        .filter(|(_, g)| !g.is_connected())
        .map(|(seed, g)| {
            let u = trial_root(*seed, g.vertex_count());
            let mut p = DisconnectedProbe { inputs: 1, ..Default::default() };
            p.direct_formula_zero += (direct_formula_value(g, u)?.sign() == num_bigint::Sign::NoSign) as usize;
            p.grouped_formula_zero += (grouped_formula_value(g, u)?.sign() == num_bigint::Sign::NoSign) as usize;
            for k in 0..args.weight_points as u64 {
                let w = EdgeWeights::seeded(g.edge_count(), -1000, 1000, weight_seed(*seed, k));
                p.identity_points += 1;
                p.identity_held += probe_identity(g, u, &w)?.holds as usize;
            }
            Ok(p)
        })
        .collect();
    let mut total = DisconnectedProbe::default();
    for r in rows {
        let r = r?;
        total.inputs += r.inputs;
        total.direct_formula_zero += r.direct_formula_zero;
        total.grouped_formula_zero += r.grouped_formula_zero;
        total.identity_points += r.identity_points;
        total.identity_held += r.identity_held;
    }
    Ok(total)
}

fn reproduce_line(spec: &RandomSpec, args: &VerifyArgs) -> String {
    format!(
        "degtree verify --n {} --m {} --p {} --trials 1 --seed {} --weight-points {}",
        spec.n, spec.m, spec.parallel_prob, spec.seed, args.weight_points
    )
}

/// Runs the whole suite.
pub fn run_suite(args: &VerifyArgs, budget: usize) -> Result<SuiteReport> {
    let graphs = suite(args)?;
    let outcomes: Vec<TrialOutcome> =
        graphs.par_iter().map(|(spec, g)| check_trial(g, spec.seed, args.weight_points, budget)).collect();

    let mut checks = CheckCounts::default();
    let mut violations = Vec::new();
    let mut agreements = 0;
    for ((spec, _), o) in graphs.iter().zip(outcomes) {
        checks.tau_methods += o.checks.tau_methods;
        checks.bound_roots += o.checks.bound_roots;
        checks.identity_points += o.checks.identity_points;
        checks.fpoly_graphs += o.checks.fpoly_graphs;
        checks.grouping_roots += o.checks.grouping_roots;
        if o.failures.is_empty() {
            agreements += 1;
        }
        for (check, detail) in o.failures {
            violations.push(Violation {
                trial_seed: spec.seed,
                n: spec.n,
                m: spec.m,
                check,
                detail,
                reproduce: reproduce_line(spec, args),
            });
        }
    }
    let disconnected = if args.allow_disconnected { Some(probe_disconnected(args)?) } else { None };
    Ok(SuiteReport {
        n: args.n,
        m: args.m,
        p: args.p,
        trials: args.trials,
        seed: args.seed,
        vary: args.vary,
        agreements,
        checks,
        violations,
        disconnected,
    })
}

pub fn render(r: &SuiteReport, quiet: bool) -> String {
    let mut s = String::new();
    if !quiet {
        let vary = if r.vary { " (varied)" } else { "" };
        let _ = writeln!(s, "verify: n={} m={}{vary} p={} trials={} seed={}", r.n, r.m, r.p, r.trials, r.seed);
        let c = &r.checks;
        let _ = writeln!(
            s,
            "checks: {} tau values, {} bound roots, {} identity points, {} fpoly graphs, {} grouping roots",
            c.tau_methods, c.bound_roots, c.identity_points, c.fpoly_graphs, c.grouping_roots
        );
    }
    for v in &r.violations {
        let _ = writeln!(s, "violation: seed {} (n={} m={}) {}: {}", v.trial_seed, v.n, v.m, v.check, v.detail);
        let _ = writeln!(s, "  reproduce: {}", v.reproduce);
    }
    let _ = writeln!(s, "{}/{} agreements, {} violations", r.agreements, r.trials, r.violations.len());
    if let Some(p) = &r.disconnected {
        let _ = writeln!(
            s,
            "disconnected probe: {} inputs; direct formula zero on {}, grouped formula zero on {}; identity held at {}/{} points",
            p.inputs, p.direct_formula_zero, p.grouped_formula_zero, p.identity_held, p.identity_points
        );
    }
    s
}

pub(crate) fn verify(opts: &GlobalOpts, args: &VerifyArgs) -> std::result::Result<Outcome, Outcome> {
    let report = run_suite(args, opts.budget).map_err(|e| error_outcome(&e))?;
    let stdout = if opts.json { to_json(&report) } else { render(&report, opts.quiet) };
    let code = if report.violations.is_empty() { 0 } else { EXIT_VIOLATION };
    Ok(Outcome { stdout, stderr: String::new(), code })
}
