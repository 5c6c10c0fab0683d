//! The built-in check suite behind `regideal verify`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use regideal::graph::{build_digraph_for_zn, build_digraph_hom, build_digraph_pairwise};
use regideal::invariants::{counted_degrees, degree_formula, dense_colors, product_coloring, product_coloring_bound};
use regideal::reduced::{boolean_graph, minimal_primes_zn, reduced_invariants};
use regideal::solvers::{chromatic_number, edge_chromatic_number, is_proper_vertex_coloring, max_clique, Budget};
use regideal::{
    build_digraph, canonical_specs, factor_modulus, AnalyzeOptions, InvariantReport, LocalFactor, Quantity,
    RingSpec, SweepBounds,
};

use crate::sweep::{run_rows, thread_pool, Row};
use crate::{CliError, VerifyArgs};

pub const CHECKS: [&str; 10] = [
    "z36-figure",
    "omega-formula",
    "reduced-values",
    "degree-formulas",
    "beineke-class-one",
    "z36-discrepancy",
    "zn-oracle",
    "product-coloring",
    "composition-law",
    "structural",
];

/// Undirected edges of the Z_36 graph by divisor label.
const Z36_GOLDEN: [(u64, u64); 6] = [(3, 9), (3, 18), (9, 18), (2, 4), (2, 12), (4, 12)];

enum Status {
    Pass(String),
    Fail(String),
    Skipped(String),
}

struct Context {
    timeout: Option<Duration>,
    jobs: usize,
    sweep: Option<Vec<(RingSpec, InvariantReport)>>,
}

impl Context {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            timeout: self.timeout,
            ..AnalyzeOptions::default()
        }
    }

    fn sweep(&mut self) -> Result<&[(RingSpec, InvariantReport)], String> {
        if self.sweep.is_none() {
            let specs = canonical_specs(&SweepBounds::new(4, 4, 600).expect("positive bounds"));
            let pool = thread_pool(self.jobs).map_err(|e| e.to_string())?;
            let mut out = Vec::new();
            for (spec, row) in specs.iter().zip(run_rows(&specs, &self.options(), &pool)) {
                match row {
                    Row::Report(r) => out.push((spec.clone(), *r)),
                    Row::Failed { error, .. } => return Err(format!("{spec}: {error}")),
                }
            }
            self.sweep = Some(out);
        }
        Ok(self.sweep.as_deref().unwrap())
    }
}

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Status::Fail(format!($($msg)+));
        }
    };
}

macro_rules! sweep_or_fail {
    ($ctx:expr) => {
        match $ctx.sweep() {
            Ok(s) => s,
            Err(e) => return Status::Fail(e),
        }
    };
}

/// Skips the check when any sweep quantity is unresolved.
fn unresolved(sweep: &[(RingSpec, InvariantReport)], quantities: &[Quantity]) -> Option<Status> {
    let (spec, r) = sweep
        .iter()
        .find(|(_, r)| r.unresolved.iter().any(|q| quantities.contains(q)))?;
    let bounds = |b: Option<[usize; 2]>| b.map_or("-".to_string(), |[l, u]| format!("[{l}, {u}]"));
    Some(Status::Skipped(format!(
        "{spec}: unresolved, omega {}, chi {}, chi' {}",
        bounds(r.omega_bounds),
        bounds(r.chi_bounds),
        bounds(r.chi_prime_bounds)
    )))
}

fn z36_figure() -> Status {
    let ctx = factor_modulus(36).expect("36 is composite");
    let g = match build_digraph_for_zn(&ctx, 100) {
        Ok(g) => g,
        Err(e) => return Status::Fail(e.to_string()),
    };
    let label = |v: usize| g.labels()[v].parse::<u64>().unwrap_or(0);
    let edges: BTreeSet<(u64, u64)> = g
        .underlying()
        .edges()
        .into_iter()
        .map(|(a, b)| (label(a).min(label(b)), label(a).max(label(b))))
        .collect();
    let golden: BTreeSet<(u64, u64)> = Z36_GOLDEN.into_iter().collect();
    check!(g.vertex_count() == 7, "{} vertices", g.vertex_count());
    check!(edges == golden, "edges {edges:?}");
    Status::Pass("7 vertices, 6 edges, golden adjacency".into())
}

fn omega_formula(ctx: &mut Context) -> Status {
    let sweep = sweep_or_fail!(ctx);
    if let Some(s) = unresolved(sweep, &[Quantity::Omega, Quantity::Chi]) {
        return s;
    }
    for (spec, r) in sweep {
        let expected = 2 * spec.factor_count() - spec.field_count() - 1;
        check!(
            r.omega_exact == Some(expected) && r.chi_exact == Some(expected),
            "{spec}: omega {:?}, chi {:?}, expected {expected}",
            r.omega_exact,
            r.chi_exact
        );
    }
    Status::Pass(format!("omega = chi = 2n - f - 1 on {} specs", sweep.len()))
}

fn reduced_values(ctx: &Context) -> Status {
    for (n, modulus) in [(2, 6), (3, 30), (4, 210), (5, 2310)] {
        let primes = minimal_primes_zn(&factor_modulus(modulus).expect("composite")).unwrap_or_default();
        check!(primes.len() == n, "Z_{modulus}: {} minimal primes", primes.len());
        let b = match boolean_graph(n) {
            Ok(b) => b,
            Err(e) => return Status::Fail(e.to_string()),
        };
        check!(b.matches_structural().unwrap_or(false), "n = {n}: subset model differs");
        let expected = reduced_invariants(n).expect("n in range");
        let g = b.graph();
        let w = max_clique(g, &mut Budget::new(ctx.timeout));
        let chi = chromatic_number(g, &w.witness, &mut Budget::new(ctx.timeout));
        let cp = edge_chromatic_number(g, &mut Budget::new(ctx.timeout));
        match (w.exact(), chi.exact(), cp.exact()) {
            (Some(o), Some(c), Some(e)) => {
                check!(
                    o == expected.omega && c == expected.chi && e == expected.chi_prime,
                    "n = {n}: got ({o}, {c}, {e}), expected {expected:?}"
                );
            }
            _ => {
                return Status::Skipped(format!(
                    "n = {n}: omega [{}, {}], chi [{}, {}], chi' [{}, {}]",
                    w.lower, w.upper, chi.lower, chi.upper, cp.lower, cp.upper
                ))
            }
        }
    }
    Status::Pass("n = 2..5: omega = chi = n - 1, chi' = 0, 2, 6, 14".into())
}

fn degree_formulas() -> Status {
    let specs = canonical_specs(&SweepBounds::new(4, 4, 600).expect("positive bounds"));
    let mut vertices = 0;
    for spec in &specs {
        let g = match build_digraph_pairwise(spec, 600) {
            Ok(g) => g,
            Err(e) => return Status::Fail(e.to_string()),
        };
        for (v, counted) in g.vertices().iter().zip(counted_degrees(&g)) {
            let f = degree_formula(v, spec).expect("vertex of spec");
            check!(f == counted, "{spec}, {v}: formula {f:?}, counted {counted:?}");
        }
        vertices += g.vertex_count();
    }
    Status::Pass(format!("{} specs, {vertices} vertices", specs.len()))
}

fn beineke_class_one(ctx: &mut Context) -> Status {
    let sweep = sweep_or_fail!(ctx);
    if let Some(s) = unresolved(sweep, &[Quantity::ChiPrime]) {
        return s;
    }
    let mut holds = 0;
    for (spec, r) in sweep.iter().filter(|(_, r)| r.beineke) {
        check!(
            r.chi_prime_exact == Some(r.delta),
            "{spec}: chi' {:?} != delta {}",
            r.chi_prime_exact,
            r.delta
        );
        holds += 1;
    }
    Status::Pass(format!("chi' = delta on {holds} instances"))
}

fn z36_discrepancy(ctx: &Context) -> Status {
    let spec = RingSpec::from_profile(&[2, 2]).expect("valid profile");
    let r = match regideal::analyze(&spec, &ctx.options()) {
        Ok(r) => r,
        Err(e) => return Status::Fail(e.to_string()),
    };
    if r.chi_prime_exact.is_none() {
        return Status::Skipped(format!("chi' in {:?}", r.chi_prime_bounds));
    }
    check!(
        r.mismatches.len() == 1 && r.mismatch(Quantity::ChiPrime).is_some_and(|m| m.predicted == 2 && m.computed == 3),
        "mismatches {:?}",
        r.mismatches
    );
    Status::Pass("chi' = 3 = delta + 1 flagged against predicted 2".into())
}

fn zn_oracle() -> Status {
    let mut count = 0;
    for n in 4..=5000u64 {
        let Ok(ctx) = factor_modulus(n) else { continue };
        let divisors: u64 = ctx.factorization().iter().map(|&(_, k)| k as u64 + 1).product();
        if divisors > 64 {
            continue;
        }
        let (s, h) = match (build_digraph_for_zn(&ctx, 100), build_digraph_hom(&ctx, 100)) {
            (Ok(s), Ok(h)) => (s, h),
            (Err(e), _) | (_, Err(e)) => return Status::Fail(format!("Z_{n}: {e}")),
        };
        check!(s.arcs() == h.arcs(), "Z_{n}: digraphs differ");
        count += 1;
    }
    Status::Pass(format!("{count} moduli up to 5000"))
}

fn product_coloring_check(ctx: &mut Context) -> Status {
    let sweep = sweep_or_fail!(ctx);
    for (spec, _) in sweep {
        let g = build_digraph(spec).expect("within limit");
        let colors = dense_colors(&product_coloring(spec));
        let used = colors.iter().max().map_or(0, |c| c + 1);
        check!(is_proper_vertex_coloring(g.underlying(), &colors), "{spec}: improper");
        check!(used <= product_coloring_bound(spec), "{spec}: {used} colors over bound");
    }
    Status::Pass(format!("proper and within bound on {} specs", sweep.len()))
}

fn composition_law(ctx: &Context) -> Status {
    let omega = |s: &RingSpec| -> Result<usize, String> {
        let g = build_digraph(s).map_err(|e| e.to_string())?;
        let w = max_clique(g.underlying(), &mut Budget::new(ctx.timeout));
        w.exact().ok_or_else(|| format!("{s}: omega in [{}, {}]", w.lower, w.upper))
    };
    let bases = canonical_specs(&SweepBounds::new(3, 3, 100).expect("positive bounds"));
    let mut count = 0;
    for base in &bases {
        for t in 1..=3 {
            let grown = base.with_factor(LocalFactor::new(t).expect("positive"));
            if grown.vertex_count() > 600 {
                continue;
            }
            let step = if t == 1 { 1 } else { 2 };
            match (omega(base), omega(&grown)) {
                (Ok(a), Ok(b)) => check!(b == a + step, "{base} + t={t}: omega {a} -> {b}"),
                (Err(e), _) | (_, Err(e)) => return Status::Skipped(e),
            }
            count += 1;
        }
    }
    Status::Pass(format!("{count} extensions"))
}

fn structural(ctx: &mut Context) -> Status {
    let sweep = sweep_or_fail!(ctx);
    for (spec, r) in sweep {
        let g = build_digraph(spec).expect("within limit");
        check!(g.is_antisymmetric(), "{spec}: not antisymmetric");
        check!(g.topological_order().is_some(), "{spec}: has a cycle");
        if let Some(cp) = r.chi_prime_exact {
            check!(cp == r.delta || cp == r.delta + 1, "{spec}: chi' {cp} outside Vizing range");
        }
    }
    Status::Pass(format!("{} digraphs", sweep.len()))
}

pub fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.suite != "paper" {
        return Err(CliError::Input(format!("unknown suite `{}` (available: paper)", args.suite)));
    }
    for id in &args.only {
        if !CHECKS.contains(&id.as_str()) {
            return Err(CliError::Input(format!(
                "unknown check `{id}` (available: {})",
                CHECKS.join(", ")
            )));
        }
    }
    if !args.timeout.is_finite() || args.timeout < 0.0 {
        return Err(CliError::Input(format!("invalid timeout {}", args.timeout)));
    }
    let mut ctx = Context {
        timeout: (args.timeout > 0.0).then(|| Duration::from_secs_f64(args.timeout)),
        jobs: args.jobs,
        sweep: None,
    };
    let (mut failed, mut skipped) = (0, 0);
    for id in CHECKS.iter().filter(|id| args.only.is_empty() || args.only.iter().any(|o| o == *id)) {
        let start = Instant::now();
        let status = match *id {
            "z36-figure" => z36_figure(),
            "omega-formula" => omega_formula(&mut ctx),
            "reduced-values" => reduced_values(&ctx),
            "degree-formulas" => degree_formulas(),
            "beineke-class-one" => beineke_class_one(&mut ctx),
            "z36-discrepancy" => z36_discrepancy(&ctx),
            "zn-oracle" => zn_oracle(),
            "product-coloring" => product_coloring_check(&mut ctx),
            "composition-law" => composition_law(&ctx),
            _ => structural(&mut ctx),
        };
        let (tag, detail) = match status {
            Status::Pass(d) => ("PASS", d),
            Status::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Status::Skipped(d) => {
                skipped += 1;
                ("SKIP", d)
            }
        };
        println!("{tag}  {id:<18} {:>9.1?}  {detail}", start.elapsed());
    }
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} check(s) failed")));
    }
    if skipped > 0 {
        return Err(CliError::Unresolved(format!("{skipped} check(s) skipped on timeout")));
    }
    Ok(())
}
