//! Closed-form invariants of the regular graph and their exact counterparts.
//!
//! Formula values are treated as predictions. Exact solvers are always run
//! (unless disabled) and every disagreement is recorded in the report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{build_digraph_for_zn, build_digraph_with_limit, RegDigraph, SimpleGraph, DEFAULT_VERTEX_LIMIT};
use crate::ring::{classify, enumerate_ideals, IdealClass, IdealVector, RingSpec};
use crate::solvers::{
    chromatic_number, edge_chromatic_number, is_proper_edge_coloring, is_proper_vertex_coloring, max_clique,
    Budget,
};
use crate::zn::ZnContext;

/// Out-degree, in-degree and total degree of a vertex of the digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTriple {
    pub d_plus: usize,
    pub d_minus: usize,
    pub d: usize,
}

fn radix_product(spec: &RingSpec, indices: &[usize]) -> usize {
    indices
        .iter()
        .fold(1usize, |acc, &k| acc.saturating_mul(spec.factors()[k].radix() as usize))
}

/// Degrees of `ideal` from the piecewise closed forms, without building
/// the graph. Out- and in-degree use their own three-case tables; the total
/// degree uses the five-case table.
pub fn degree_formula(ideal: &IdealVector, spec: &RingSpec) -> Result<DegreeTriple> {
    spec.check(ideal)?;
    let sets = classify(ideal);
    let n = spec.factor_count();
    let full = radix_product(spec, &sets.full);
    let zero = radix_product(spec, &sets.zero);
    let lam_empty = sets.nontrivial.is_empty();

    let d_plus = match (sets.full.is_empty(), lam_empty) {
        (true, _) => 0,
        (false, true) => full - 2,
        (false, false) => full - 1,
    };
    let d_minus = match (sets.zero.is_empty(), lam_empty) {
        (true, _) => 0,
        (false, true) => zero - 2,
        (false, false) => zero - 1,
    };
    let degree = if sets.nontrivial.len() == n {
        0
    } else if lam_empty {
        full + zero - 4
    } else if sets.full.is_empty() {
        zero - 1
    } else if sets.zero.is_empty() {
        full - 1
    } else {
        full + zero - 2
    };
    Ok(DegreeTriple {
        d_plus,
        d_minus,
        d: degree,
    })
}

/// Degrees counted directly from the arcs of a built digraph.
pub fn counted_degrees(g: &RegDigraph) -> Vec<DegreeTriple> {
    (0..g.vertex_count())
        .map(|v| {
            let d_plus = g.out_neighbors(v).len();
            let d_minus = g.in_neighbors(v).len();
            DegreeTriple {
                d_plus,
                d_minus,
                d: g.underlying().degree(v),
            }
        })
        .collect()
}

/// Maximum degree and the number of vertices attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxDegree {
    pub delta: usize,
    pub count: usize,
}

/// Scans [`degree_formula`] over every vertex.
pub fn max_degree(spec: &RingSpec) -> MaxDegree {
    let mut best = MaxDegree { delta: 0, count: 0 };
    for ideal in enumerate_ideals(spec) {
        let d = degree_formula(&ideal, spec).expect("enumerated ideals are valid").d;
        if d > best.delta || best.count == 0 {
            best = MaxDegree { delta: d, count: 1 };
        } else if d == best.delta {
            best.count += 1;
        }
    }
    best
}

/// Which closed form for `Δ` applies to a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeCase {
    /// One local factor: the graph is edgeless.
    Local,
    /// A product of fields.
    Reduced,
    /// Two factors, at least one not a field.
    TwoFactors,
    /// Three or more factors, none a field, not reduced.
    NoFieldFactor,
    /// Three or more factors, some but not all fields.
    WithFieldFactor,
}

pub fn degree_case(spec: &RingSpec) -> DegreeCase {
    let n = spec.factor_count();
    if n == 1 {
        DegreeCase::Local
    } else if spec.is_reduced() {
        DegreeCase::Reduced
    } else if n == 2 {
        DegreeCase::TwoFactors
    } else if spec.field_count() == 0 {
        DegreeCase::NoFieldFactor
    } else {
        DegreeCase::WithFieldFactor
    }
}

/// The closed-form value of `Δ` for the ring's case. Uses the t-vector
/// sorted non-increasingly.
pub fn predicted_delta(spec: &RingSpec) -> usize {
    let t = spec.sorted_profile();
    let n = t.len();
    let head: usize = t[..n - 1].iter().fold(1usize, |acc, &x| acc.saturating_mul(x as usize + 1));
    match degree_case(spec) {
        DegreeCase::Local => 0,
        DegreeCase::Reduced => (1usize << (n - 1)) - 2,
        DegreeCase::TwoFactors => (t[0] - 1 + t[1] - 1) as usize,
        DegreeCase::NoFieldFactor => head - 1,
        DegreeCase::WithFieldFactor => head - 2,
    }
}

/// The closed-form count of maximum-degree vertices, only where its case
/// hypotheses hold (three or more factors).
pub fn predicted_max_degree_count(spec: &RingSpec) -> Option<usize> {
    let n = spec.factor_count();
    if n < 3 {
        return None;
    }
    let t = spec.sorted_profile();
    let s = spec.multiplicities();
    match degree_case(spec) {
        DegreeCase::Reduced => Some(2 * n),
        DegreeCase::NoFieldFactor => Some(2 * s[n - 1] * (t[n - 1] as usize - 1)),
        DegreeCase::WithFieldFactor => Some(2 * spec.field_count()),
        _ => None,
    }
}

/// Sufficient condition for `χ' = Δ`: every maximum-degree vertex `u` has a
/// neighbor `v` with `Δ - d(v) + 2` larger than the number of
/// maximum-degree vertices. False for edgeless graphs.
pub fn beineke_condition(g: &SimpleGraph) -> bool {
    let delta = g.max_degree();
    if delta == 0 {
        return false;
    }
    let n = g.vertex_count();
    let count = (0..n).filter(|&v| g.degree(v) == delta).count();
    (0..n)
        .filter(|&u| g.degree(u) == delta)
        .all(|u| g.neighbors(u).iter().any(|&v| delta - g.degree(v) + 2 > count))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub omega: usize,
    pub chi: usize,
    pub chi_prime: usize,
}

/// `ω = χ = 2n - f - 1` and `χ' = Δ`, with `Δ` from [`max_degree`].
pub fn predictions(spec: &RingSpec) -> Predictions {
    let omega = 2 * spec.factor_count() - spec.field_count() - 1;
    Predictions {
        omega,
        chi: omega,
        chi_prime: max_degree(spec).delta,
    }
}

/// Product coloring: coordinate `0` for a zero component, `-1` for a full
/// one and `1` for a nontrivial one (each local graph is edgeless, so one
/// color per factor suffices). Indexed like [`enumerate_ideals`].
pub fn product_coloring(spec: &RingSpec) -> Vec<Vec<i8>> {
    enumerate_ideals(spec)
        .iter()
        .map(|ideal| {
            ideal
                .classes()
                .iter()
                .map(|c| match c {
                    IdealClass::Zero => 0,
                    IdealClass::Full => -1,
                    IdealClass::Nontrivial(_) => 1,
                })
                .collect()
        })
        .collect()
}

/// `prod c_i - 2` with `c_i = 2` for fields and `3` otherwise.
pub fn product_coloring_bound(spec: &RingSpec) -> usize {
    spec.factors()
        .iter()
        .fold(1usize, |acc, f| acc.saturating_mul(if f.is_field() { 2 } else { 3 }))
        - 2
}

/// Maps color tuples to dense color indices in first-seen order.
pub fn dense_colors(tuples: &[Vec<i8>]) -> Vec<usize> {
    let mut ids: BTreeMap<&[i8], usize> = BTreeMap::new();
    tuples
        .iter()
        .map(|t| {
            let next = ids.len();
            *ids.entry(t.as_slice()).or_insert(next)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Delta,
    MaxDegreeCount,
    DegreeFormula,
    Omega,
    Chi,
    ChiPrime,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Delta => "delta",
            Quantity::MaxDegreeCount => "max_degree_count",
            Quantity::DegreeFormula => "degree_formula",
            Quantity::Omega => "omega",
            Quantity::Chi => "chi",
            Quantity::ChiPrime => "chi_prime",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub quantity: Quantity,
    pub predicted: usize,
    pub computed: usize,
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Per-solver time budget; `None` waits for an exact answer.
    pub timeout: Option<Duration>,
    /// When false only the closed forms and degree scans are evaluated.
    pub run_solvers: bool,
    pub vertex_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            timeout: Some(Duration::from_secs(60)),
            run_solvers: true,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
        }
    }
}

/// Ground truth and predictions for one ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub ring: String,
    pub profile: Vec<u32>,
    pub factors: usize,
    pub fields: usize,
    pub reduced: bool,
    pub vertices: usize,
    pub edges: usize,
    pub delta: usize,
    pub max_degree_count: usize,
    pub delta_case: DegreeCase,
    pub delta_formula: usize,
    pub max_degree_count_formula: Option<usize>,
    pub degree_formula_ok: bool,
    pub omega_exact: Option<usize>,
    pub omega_bounds: Option<[usize; 2]>,
    pub omega_predicted: usize,
    pub chi_exact: Option<usize>,
    pub chi_bounds: Option<[usize; 2]>,
    pub chi_predicted: usize,
    pub chi_prime_exact: Option<usize>,
    pub chi_prime_bounds: Option<[usize; 2]>,
    pub chi_prime_predicted: usize,
    pub beineke: bool,
    pub product_coloring_colors: usize,
    pub product_coloring_bound: usize,
    pub product_coloring_proper: bool,
    pub certificates_ok: bool,
    pub mismatches: Vec<Mismatch>,
    pub unresolved: Vec<Quantity>,
    pub timings: BTreeMap<String, f64>,
}

impl InvariantReport {
    pub fn has_mismatch(&self) -> bool {
        !self.mismatches.is_empty()
    }

    pub fn mismatch(&self, q: Quantity) -> Option<&Mismatch> {
        self.mismatches.iter().find(|m| m.quantity == q)
    }

    /// `verified`, `mismatch` or `unresolved`.
    pub fn status(&self) -> &'static str {
        if self.has_mismatch() {
            "mismatch"
        } else if !self.unresolved.is_empty() {
            "unresolved"
        } else {
            "verified"
        }
    }

    pub const CSV_HEADER: [&'static str; 22] = [
        "ring",
        "profile",
        "factors",
        "fields",
        "reduced",
        "vertices",
        "edges",
        "delta",
        "max_degree_count",
        "omega_exact",
        "omega_predicted",
        "chi_exact",
        "chi_predicted",
        "chi_prime_exact",
        "chi_prime_lower",
        "chi_prime_upper",
        "chi_prime_predicted",
        "beineke",
        "degree_formula_ok",
        "mismatches",
        "status",
        "error",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let profile: Vec<String> = self.profile.iter().map(u32::to_string).collect();
        let mismatches: Vec<String> = self
            .mismatches
            .iter()
            .map(|m| format!("{}:{}!={}", m.quantity, m.predicted, m.computed))
            .collect();
        vec![
            self.ring.clone(),
            profile.join(","),
            self.factors.to_string(),
            self.fields.to_string(),
            self.reduced.to_string(),
            self.vertices.to_string(),
            self.edges.to_string(),
            self.delta.to_string(),
            self.max_degree_count.to_string(),
            opt(self.omega_exact),
            self.omega_predicted.to_string(),
            opt(self.chi_exact),
            self.chi_predicted.to_string(),
            opt(self.chi_prime_exact),
            opt(self.chi_prime_bounds.map(|b| b[0])),
            opt(self.chi_prime_bounds.map(|b| b[1])),
            self.chi_prime_predicted.to_string(),
            self.beineke.to_string(),
            self.degree_formula_ok.to_string(),
            mismatches.join(";"),
            self.status().to_string(),
            String::new(),
        ]
    }
}

pub fn analyze(spec: &RingSpec, options: &AnalyzeOptions) -> Result<InvariantReport> {
    let start = Instant::now();
    let g = build_digraph_with_limit(spec, options.vertex_limit)?;
    let build = start.elapsed();
    Ok(analyze_digraph(spec, spec.to_string(), &g, build, options))
}

pub fn analyze_zn(ctx: &ZnContext, options: &AnalyzeOptions) -> Result<InvariantReport> {
    let start = Instant::now();
    let g = build_digraph_for_zn(ctx, options.vertex_limit)?;
    let build = start.elapsed();
    Ok(analyze_digraph(
        ctx.spec(),
        format!("Z_{}", ctx.modulus()),
        &g,
        build,
        options,
    ))
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Fills a report for an already built digraph of `spec`.
pub fn analyze_digraph(
    spec: &RingSpec,
    ring: String,
    g: &RegDigraph,
    build_time: Duration,
    options: &AnalyzeOptions,
) -> InvariantReport {
    let mut timings = BTreeMap::new();
    timings.insert("build".to_string(), ms(build_time));
    let u = g.underlying();

    let t = Instant::now();
    let counted = counted_degrees(g);
    let mut degree_mismatch = None;
    for (ideal, c) in g.vertices().iter().zip(&counted) {
        let f = degree_formula(ideal, spec).expect("vertices of the digraph are valid");
        if f != *c && degree_mismatch.is_none() {
            degree_mismatch = Some(Mismatch {
                quantity: Quantity::DegreeFormula,
                predicted: f.d,
                computed: c.d,
            });
        }
    }
    let delta = u.max_degree();
    let max_degree_count = (0..u.vertex_count()).filter(|&v| u.degree(v) == delta).count();
    timings.insert("degrees".to_string(), ms(t.elapsed()));

    let pred = Predictions {
        omega: 2 * spec.factor_count() - spec.field_count() - 1,
        chi: 2 * spec.factor_count() - spec.field_count() - 1,
        chi_prime: delta,
    };
    let delta_formula = predicted_delta(spec);
    let count_formula = predicted_max_degree_count(spec);

    let coloring = product_coloring(spec);
    let dense = dense_colors(&coloring);
    let product_colors = dense.iter().max().map_or(0, |&c| c + 1);
    let product_proper = is_proper_vertex_coloring(u, &dense);

    let mut mismatches = Vec::new();
    if delta_formula != delta {
        mismatches.push(Mismatch {
            quantity: Quantity::Delta,
            predicted: delta_formula,
            computed: delta,
        });
    }
    if let Some(c) = count_formula.filter(|&c| c != max_degree_count) {
        mismatches.push(Mismatch {
            quantity: Quantity::MaxDegreeCount,
            predicted: c,
            computed: max_degree_count,
        });
    }
    mismatches.extend(degree_mismatch);

    let mut report = InvariantReport {
        ring,
        profile: spec.profile(),
        factors: spec.factor_count(),
        fields: spec.field_count(),
        reduced: spec.is_reduced(),
        vertices: u.vertex_count(),
        edges: u.edge_count(),
        delta,
        max_degree_count,
        delta_case: degree_case(spec),
        delta_formula,
        max_degree_count_formula: count_formula,
        degree_formula_ok: degree_mismatch.is_none(),
        omega_exact: None,
        omega_bounds: None,
        omega_predicted: pred.omega,
        chi_exact: None,
        chi_bounds: None,
        chi_predicted: pred.chi,
        chi_prime_exact: None,
        chi_prime_bounds: None,
        chi_prime_predicted: pred.chi_prime,
        beineke: beineke_condition(u),
        product_coloring_colors: product_colors,
        product_coloring_bound: product_coloring_bound(spec),
        product_coloring_proper: product_proper,
        certificates_ok: true,
        mismatches,
        unresolved: Vec::new(),
        timings,
    };
    if options.run_solvers {
        run_solvers(&mut report, u, options);
    }
    report
}

fn run_solvers(report: &mut InvariantReport, u: &SimpleGraph, options: &AnalyzeOptions) {
    let clique = max_clique(u, &mut Budget::new(options.timeout));
    let chi = chromatic_number(u, &clique.witness, &mut Budget::new(options.timeout));
    let chi_prime = edge_chromatic_number(u, &mut Budget::new(options.timeout));

    report.timings.insert("clique".into(), ms(clique.elapsed));
    report.timings.insert("chromatic".into(), ms(chi.elapsed));
    report.timings.insert("edge_chromatic".into(), ms(chi_prime.elapsed));

    report.certificates_ok = crate::solvers::clique::is_clique(u, &clique.witness)
        && clique.witness.len() == clique.lower
        && is_proper_vertex_coloring(u, &chi.witness)
        && chi.witness.iter().all(|&c| c < chi.upper.max(1))
        && is_proper_edge_coloring(u, &chi_prime.witness, chi_prime.upper);

    let checks = [
        (Quantity::Omega, clique.lower, clique.upper, report.omega_predicted),
        (Quantity::Chi, chi.lower, chi.upper, report.chi_predicted),
        (Quantity::ChiPrime, chi_prime.lower, chi_prime.upper, report.chi_prime_predicted),
    ];
    for (q, lower, upper, predicted) in checks {
        let exact = (lower == upper).then_some(lower);
        match q {
            Quantity::Omega => {
                report.omega_exact = exact;
                report.omega_bounds = Some([lower, upper]);
            }
            Quantity::Chi => {
                report.chi_exact = exact;
                report.chi_bounds = Some([lower, upper]);
            }
            _ => {
                report.chi_prime_exact = exact;
                report.chi_prime_bounds = Some([lower, upper]);
            }
        }
        match exact {
            Some(v) if v != predicted => report.mismatches.push(Mismatch {
                quantity: q,
                predicted,
                computed: v,
            }),
            Some(_) => {}
            None => report.unresolved.push(q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;
    use IdealClass::*;

    fn spec(p: &[u32]) -> RingSpec {
        RingSpec::from_profile(p).unwrap()
    }

    #[test]
    fn degree_examples() {
        let s = spec(&[2, 2]);
        let d = degree_formula(&IdealVector::new(&s, vec![Full, Zero]).unwrap(), &s).unwrap();
        assert_eq!(d.d, 2);
        let d = degree_formula(&IdealVector::new(&s, vec![Nontrivial(1), Nontrivial(1)]).unwrap(), &s).unwrap();
        assert_eq!(d, DegreeTriple { d_plus: 0, d_minus: 0, d: 0 });

        let s6 = spec(&[1; 6]);
        let i = IdealVector::new(&s6, vec![Full, Full, Full, Zero, Zero, Zero]).unwrap();
        assert_eq!(degree_formula(&i, &s6).unwrap().d, 12);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&spec(&[1; 6])).delta, 30);
        assert_eq!(max_degree(&spec(&[2, 2])), MaxDegree { delta: 2, count: 6 });
        for k in 2..6 {
            assert_eq!(max_degree(&spec(&[k])).delta, 0);
        }
    }

    #[test]
    fn prediction_examples() {
        assert_eq!(predictions(&spec(&[2, 2])).omega, 3);
        assert_eq!(predictions(&spec(&[1, 1, 1])).omega, 2);
        assert_eq!(predictions(&spec(&[3])).omega, 1);
        assert_eq!(predictions(&spec(&[1])).omega, 0);
    }

    #[test]
    fn beineke_examples() {
        let reduced6 = build_digraph(&spec(&[1; 6])).unwrap();
        assert!(beineke_condition(reduced6.underlying()));
        let triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!beineke_condition(&triangles));
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(beineke_condition(&star));
        assert!(!beineke_condition(&SimpleGraph::from_edges(2, []).unwrap()));
    }

    #[test]
    fn product_coloring_examples() {
        let s = spec(&[2, 2]);
        let col = product_coloring(&s);
        let ideals = enumerate_ideals(&s);
        let at = |c: Vec<IdealClass>| {
            let i = ideals.iter().position(|v| v.classes() == c.as_slice()).unwrap();
            col[i].clone()
        };
        assert_eq!(at(vec![Full, Zero]), vec![-1, 0]);
        assert_eq!(at(vec![Full, Nontrivial(1)]), vec![-1, 1]);
        assert_eq!(at(vec![Nontrivial(1), Zero]), vec![1, 0]);

        let s = spec(&[1, 1]);
        assert_eq!(product_coloring(&s), vec![vec![0, -1], vec![-1, 0]]);
        assert_eq!(product_coloring_bound(&spec(&[1, 1, 1])), 6);
    }

    #[test]
    fn z36_report() {
        let r = analyze(&spec(&[2, 2]), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.omega_exact, Some(3));
        assert_eq!(r.chi_exact, Some(3));
        assert_eq!(r.chi_prime_exact, Some(3));
        assert_eq!(r.chi_prime_predicted, 2);
        assert_eq!(
            r.mismatches,
            vec![Mismatch {
                quantity: Quantity::ChiPrime,
                predicted: 2,
                computed: 3
            }]
        );
        assert!(r.certificates_ok);
    }

    #[test]
    fn four_fields_report() {
        let r = analyze(&spec(&[1, 1, 1, 1]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.omega_exact, r.chi_exact, r.chi_prime_exact), (Some(3), Some(3), Some(6)));
        assert_eq!(r.delta, 6);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        assert_eq!(r.status(), "verified");
    }

    #[test]
    fn local_report_is_all_zero() {
        let r = analyze(&spec(&[4]), &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.delta, r.chi_prime_exact, r.edges), (0, Some(0), 0));
        assert_eq!(r.omega_exact, Some(1));
        assert!(r.mismatches.is_empty());
    }

    #[test]
    fn formulas_only() {
        let opts = AnalyzeOptions {
            run_solvers: false,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&spec(&[2, 2]), &opts).unwrap();
        assert_eq!(r.omega_exact, None);
        assert!(r.mismatches.is_empty());
        assert!(r.unresolved.is_empty());
    }

    #[test]
    fn formula_disagreements_are_flagged() {
        let r = analyze(&spec(&[3, 3, 3]), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.delta, 16);
        assert_eq!(
            r.mismatch(Quantity::Delta),
            Some(&Mismatch {
                quantity: Quantity::Delta,
                predicted: 15,
                computed: 16
            })
        );
        let r = analyze(&spec(&[2, 2, 2]), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.delta, 8);
        assert_eq!(r.max_degree_count, 12);
        assert_eq!(r.max_degree_count_formula, Some(6));
    }
}
