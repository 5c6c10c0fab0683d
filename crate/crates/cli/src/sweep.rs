use rayon::prelude::*;
use regideal::{analyze, canonical_specs, AnalyzeOptions, InvariantReport, RingSpec, SweepBounds};

use crate::{write_output, CliError, SweepArgs};

pub enum Row {
    Report(Box<InvariantReport>),
    Failed { spec: RingSpec, error: String },
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start worker pool: {e}")))
}

/// Analyzes every spec on the pool; rows come back in spec order.
pub fn run_rows(specs: &[RingSpec], options: &AnalyzeOptions, pool: &rayon::ThreadPool) -> Vec<Row> {
    pool.install(|| {
        specs
            .par_iter()
            .map(|spec| match analyze(spec, options) {
                Ok(r) => Row::Report(Box::new(r)),
                Err(e) => Row::Failed {
                    spec: spec.clone(),
                    error: e.to_string(),
                },
            })
            .collect()
    })
}

fn error_record(spec: &RingSpec, error: &str) -> Vec<String> {
    let header = InvariantReport::CSV_HEADER;
    let mut rec = vec![String::new(); header.len()];
    rec[0] = spec.to_string();
    rec[1] = spec.to_string();
    rec[2] = spec.factor_count().to_string();
    rec[3] = spec.field_count().to_string();
    rec[4] = spec.is_reduced().to_string();
    rec[header.len() - 2] = "error".into();
    rec[header.len() - 1] = error.to_string();
    rec
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(InvariantReport::CSV_HEADER).expect("in-memory write");
    for row in rows {
        let rec = match row {
            Row::Report(r) => r.csv_record(),
            Row::Failed { spec, error } => error_record(spec, error),
        };
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let bounds = SweepBounds::new(args.max_factors, args.max_t, args.max_vertices)?;
    let options = AnalyzeOptions {
        timeout: args.solver.timeout()?,
        run_solvers: args.solver.exact,
        vertex_limit: args.max_vertices,
    };
    let specs = canonical_specs(&bounds);
    let pool = thread_pool(args.jobs)?;
    let rows = run_rows(&specs, &options, &pool);

    write_output(args.csv.as_deref(), &to_csv(&rows))?;
    if let Some(path) = &args.out {
        let reports: Vec<&InvariantReport> = rows
            .iter()
            .filter_map(|r| match r {
                Row::Report(r) => Some(r.as_ref()),
                Row::Failed { .. } => None,
            })
            .collect();
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
        write_output(Some(path), &format!("{json}\n"))?;
    }

    let (mut verified, mut mismatched, mut unresolved, mut failed) = (0, 0, 0, 0);
    for row in &rows {
        match row {
            Row::Report(r) => match r.status() {
                "mismatch" => mismatched += 1,
                "unresolved" => unresolved += 1,
                _ => verified += 1,
            },
            Row::Failed { .. } => failed += 1,
        }
    }
    eprintln!(
        "swept {} specs: {verified} verified, {mismatched} mismatched, {unresolved} unresolved, {failed} failed",
        rows.len()
    );
    if mismatched > 0 {
        return Err(CliError::Mismatch(format!("theorem mismatch in {mismatched} of {} specs", rows.len())));
    }
    Ok(())
}
