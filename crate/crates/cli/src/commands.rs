use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use degtree::fpoly::{
    brute_force_edge_cover, brute_force_matching, brute_force_perfect_matchings, edge_cover_number_from_f,
    expansion_cost, matching_number_from_f, perfect_matchings_from_f,
};
use degtree::*;
use serde::Serialize;

use crate::report::*;
use crate::{
    BoundArgs, Cli, Command, CountArgs, FamilyArgs, FpolyArgs, GlobalOpts, IdentityArgs, Method, Outcome, EXIT_PARSE,
    EXIT_USAGE, EXIT_VIOLATION,
};

pub fn dispatch(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let result = match &cli.command {
        Command::Count(a) => count(g, a),
        Command::Family(a) => family(g, a),
        Command::Verify(a) => crate::verify::verify(g, a),
        Command::Identity(a) => identity(g, a),
        Command::Fpoly(a) => fpoly(g, a),
        Command::Bound(a) => bound(g, a),
    };
    result.unwrap_or_else(|e| e)
}

type CmdResult = std::result::Result<Outcome, Outcome>;

pub(crate) fn error_outcome(e: &Error) -> Outcome {
    let code = match e {
        Error::Parse { .. } => EXIT_PARSE,
        _ => EXIT_USAGE,
    };
    Outcome::fail(code, format!("error: {e}\n"))
}

fn core<T>(r: Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|e| error_outcome(&e))
}

fn read_text(path: &Path) -> std::result::Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {}: {e}\n", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<Multigraph, Outcome> {
    let text = read_text(path)?;
    // loops and out-of-range endpoints are malformed input too
    parse_graph(&text).map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: {}: {e}\n", path.display())))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn summary(g: &Multigraph) -> GraphSummary {
    GraphSummary { n: g.vertex_count(), m: g.edge_count(), connected: g.is_connected() }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::MatrixTree => "matrix-tree",
        Method::DelCon => "del-con",
        Method::Degree => "degree",
        Method::DegreeDirect => "degree-direct",
        Method::Enum => "enum",
        Method::All => "all",
    }
}

fn count(opts: &GlobalOpts, args: &CountArgs) -> CmdResult {
    let g = load_graph(&args.file)?;
    if g.vertex_count() == 0 {
        return Err(error_outcome(&Error::EmptyGraph));
    }
    if let Some(u) = args.root {
        core(g.check_vertex(u))?;
    }
    let methods: Vec<Method> = match args.method {
        Method::All => vec![Method::MatrixTree, Method::DelCon, Method::Degree, Method::DegreeDirect, Method::Enum],
        m => vec![m],
    };
    let uses_root = methods.iter().any(|m| matches!(m, Method::Degree | Method::DegreeDirect));
    let best = core(best_thomassen_bound(&g))?;
    let root = uses_root.then(|| args.root.unwrap_or(best.0));

    let mut results = Vec::new();
    for &m in &methods {
        let start = Instant::now();
        let value = match m {
            Method::MatrixTree => tau_matrix_tree(&g),
            Method::DelCon => tau_deletion_contraction(&g),
            Method::Degree => tau_via_grouped_formula(&g, root.expect("root set")),
            Method::DegreeDirect => tau_via_direct_formula(&g, root.expect("root set")),
            Method::Enum => count_by_enumeration(&g),
            Method::All => unreachable!(),
        };
        let micros = start.elapsed().as_micros() as u64;
        let (value, error) = match value {
            Ok(v) => (Some(v.to_string()), None),
            Err(e) => (None, Some(e.to_string())),
        };
        results.push(MethodResult { method: method_name(m).into(), value, error, micros });
    }
    let mut values = results.iter().filter_map(|r| r.value.as_ref());
    let first = values.next().cloned();
    let agreement = values.all(|v| Some(v) == first.as_ref());

    let bound = match root {
        Some(u) => Some(BoundValue { root: u, value: core(thomassen_bound(&g, u))?.to_string() }),
        None => None,
    };
    let report = RunReport {
        graph: summary(&g),
        root,
        methods: results,
        agreement,
        bound,
        best_bound: Some(BoundValue { root: best.0, value: best.1.to_string() }),
    };

    let stdout = if opts.json {
        to_json(&report)
    } else if opts.quiet {
        match (&first, agreement) {
            (Some(v), true) => format!("{v}\n"),
            _ => "disagreement\n".into(),
        }
    } else {
        render_count(&report)
    };
    let code = if agreement { 0 } else { EXIT_VIOLATION };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

fn render_count(r: &RunReport) -> String {
    let mut s = String::new();
    let g = &r.graph;
    let conn = if g.connected { "connected" } else { "disconnected" };
    let _ = writeln!(s, "graph: n={} m={} {conn}", g.n, g.m);
    if let Some(b) = &r.bound {
        let _ = writeln!(s, "root: {} (bound {})", b.root, b.value);
    }
    for m in &r.methods {
        match (&m.value, &m.error) {
            (Some(v), _) => {
                let _ = writeln!(s, "{:<14} {v}  ({} us)", m.method, m.micros);
            }
            (None, Some(e)) => {
                let _ = writeln!(s, "{:<14} error: {e}", m.method);
            }
            (None, None) => {}
        }
    }
    let _ = writeln!(s, "agreement: {}", if r.agreement { "yes" } else { "NO" });
    s
}

fn family(opts: &GlobalOpts, args: &FamilyArgs) -> CmdResult {
    let spec: FamilySpec = core(args.spec.join(" ").parse())?;
    let g = core(generate_family(&spec))?;
    let text = write_graph(&g);
    let closed = closed_form_tau(&spec).map(|t| t.to_string());
    let note = format!("closed form: {}", closed.as_deref().unwrap_or("unavailable"));
    if let Some(path) = &args.output {
        fs::write(path, &text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {}: {e}\n", path.display())))?;
    }
    let report = FamilyReport {
        family: spec.to_string(),
        n: g.vertex_count(),
        m: g.edge_count(),
        closed_form: closed,
        output: args.output.as_ref().map(|p| p.display().to_string()),
        graph: args.output.is_none().then(|| text.clone()),
    };
    let stdout = if opts.json {
        to_json(&report)
    } else if args.output.is_some() {
        if opts.quiet {
            format!("{note}\n")
        } else {
            format!("wrote {} (n={} m={})\n{note}\n", report.output.as_deref().unwrap_or_default(), report.n, report.m)
        }
    } else {
        format!("# {}\n# {note}\n{text}", report.family)
    };
    Ok(Outcome::ok(stdout))
}

/// Weight points for `identity`: one per trial for `random:<seed>`.
fn weight_points(args: &IdentityArgs, m: usize) -> std::result::Result<Vec<EdgeWeights>, Outcome> {
    let w = if let Some(path) = &args.weights_file {
        vec![core(EdgeWeights::parse_lines(&read_text(path)?))?]
    } else if args.weights == "ones" {
        vec![EdgeWeights::ones(m)]
    } else if let Some(seed) = args.weights.strip_prefix("random:") {
        let seed: u64 =
            seed.trim().parse().map_err(|_| Outcome::fail(EXIT_USAGE, format!("error: bad random seed {seed:?}\n")))?;
        (0..args.trials as u64).map(|t| EdgeWeights::seeded(m, -1000, 1000, seed.wrapping_add(t))).collect()
    } else {
        vec![core(args.weights.parse())?]
    };
    for p in &w {
        core(p.check_len(m))?;
    }
    Ok(w)
}

fn identity(opts: &GlobalOpts, args: &IdentityArgs) -> CmdResult {
    let g = load_graph(&args.file)?;
    let root = match args.root {
        Some(u) => u,
        None => core(best_thomassen_bound(&g))?.0,
    };
    let points = weight_points(args, g.edge_count())?;
    let mut lines = Vec::new();
    for w in &points {
        let r = core(check_identity(&g, root, w))?;
        lines.push(IdentityLine {
            weights: w.values().to_vec(),
            lhs: r.lhs.to_string(),
            tau_term: r.tau_term.to_string(),
            nst_sum: r.nst_sum.to_string(),
            holds: r.holds,
        });
    }
    let all_hold = lines.iter().all(|l| l.holds);
    let run = IdentityRun { root, points: lines, all_hold };
    let stdout = if opts.json {
        to_json(&run)
    } else {
        let mut s = String::new();
        if !opts.quiet {
            let _ = writeln!(s, "root: {root}");
        }
        for (i, l) in run.points.iter().enumerate() {
            let _ = writeln!(s, "point {i}: lhs {} = tau {} + nst {}  holds={}", l.lhs, l.tau_term, l.nst_sum, l.holds);
        }
        if !opts.quiet {
            let held = run.points.iter().filter(|l| l.holds).count();
            let _ = writeln!(s, "{held}/{} points hold", run.points.len());
        }
        s
    };
    Ok(Outcome { stdout, stderr: String::new(), code: if all_hold { 0 } else { EXIT_VIOLATION } })
}

fn fpoly(opts: &GlobalOpts, args: &FpolyArgs) -> CmdResult {
    let g = load_graph(&args.file)?;
    let budget = ExpansionBudget { max_vertices: args.max_vertices, max_terms: opts.budget };
    let terms = core(expand_f(&g, budget))?;
    let nu = core(matching_number_from_f(&terms))?;
    let rho = core(edge_cover_number_from_f(&terms))?;
    let mut pms = core(perfect_matchings_from_f(&terms))?;
    pms.sort();
    let nu_oracle = core(brute_force_matching(&g))?;
    let rho_oracle = core(brute_force_edge_cover(&g))?;
    let pms_oracle = core(brute_force_perfect_matchings(&g))?;
    let list = |v: &[EdgeSet]| v.iter().map(|e| e.as_slice().to_vec()).collect::<Vec<_>>();
    let report = FpolyReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        endpoint_picks: expansion_cost(&g).to_string(),
        terms: terms.len(),
        matching_number: nu,
        matching_oracle: nu_oracle,
        edge_cover_number: rho,
        edge_cover_oracle: rho_oracle,
        agreement: nu == nu_oracle && rho == rho_oracle && pms == pms_oracle,
        perfect_matchings: list(&pms),
        perfect_matchings_oracle: list(&pms_oracle),
        dump: args.dump.then(|| terms.iter().map(|t| t.to_string()).collect()),
    };
    let stdout = if opts.json { to_json(&report) } else { render_fpoly(&report, &pms, opts.quiet) };
    Ok(Outcome { stdout, stderr: String::new(), code: if report.agreement { 0 } else { EXIT_VIOLATION } })
}

fn render_fpoly(r: &FpolyReport, pms: &[EdgeSet], quiet: bool) -> String {
    let mut s = String::new();
    if !quiet {
        let _ = writeln!(s, "graph: n={} m={}", r.n, r.m);
        let _ = writeln!(s, "endpoint picks: {}", r.endpoint_picks);
        let _ = writeln!(s, "terms: {}", r.terms);
    }
    let _ = writeln!(s, "nu={} (oracle {})", r.matching_number, r.matching_oracle);
    let _ = writeln!(s, "rho={} (oracle {})", r.edge_cover_number, r.edge_cover_oracle);
    if pms.is_empty() {
        let _ = writeln!(s, "perfect matchings: none");
    } else {
        let shown: Vec<String> = pms.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(s, "perfect matchings: {}", shown.join(","));
    }
    if !quiet {
        let _ = writeln!(s, "oracle agreement: {}", if r.agreement { "yes" } else { "NO" });
    }
    if let Some(dump) = &r.dump {
        for line in dump {
            let _ = writeln!(s, "{line}");
        }
    }
    s
}

fn bound(opts: &GlobalOpts, args: &BoundArgs) -> CmdResult {
    let g = load_graph(&args.file)?;
    let (root, b) = match args.root {
        Some(u) => (u, core(thomassen_bound(&g, u))?),
        None => core(best_thomassen_bound(&g))?,
    };
    let tau = core(tau_matrix_tree(&g))?;
    let gap = BigInt::from(b.clone()) - BigInt::from(tau.clone());
    let report = BoundReport { root, bound: b.to_string(), tau: tau.to_string(), gap: gap.to_string() };
    let stdout = if opts.json {
        to_json(&report)
    } else if opts.quiet {
        format!("{}\n", report.bound)
    } else {
        format!("root: {}\nbound: {}\ntau: {}\ngap: {}\n", report.root, report.bound, report.tau, report.gap)
    };
    // a negative gap would contradict the bound
    let code = if gap.sign() == num_bigint::Sign::Minus { EXIT_VIOLATION } else { 0 };
    Ok(Outcome { stdout, stderr: String::new(), code })
}
