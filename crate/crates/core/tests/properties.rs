use proptest::prelude::*;
use regideal::graph::{build_digraph_for_zn, build_digraph_hom, build_digraph_pairwise};
use regideal::invariants::{counted_degrees, degree_formula, dense_colors, product_coloring, product_coloring_bound};
use regideal::solvers::{chromatic_number, edge_chromatic_number, is_proper_vertex_coloring, max_clique, Budget};
use regideal::*;

const LIMIT: usize = 600;

fn spec_strategy(max_n: usize, max_t: u32) -> impl Strategy<Value = RingSpec> {
    prop::collection::vec(1..=max_t, 1..=max_n)
        .prop_filter_map("within vertex limit", |p| {
            let s = RingSpec::from_profile(&p).ok()?;
            (s.vertex_count() <= LIMIT as u128).then_some(s)
        })
}

fn omega(spec: &RingSpec) -> usize {
    let g = build_digraph(spec).unwrap();
    max_clique(g.underlying(), &mut Budget::unlimited()).exact().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn digraph_is_antisymmetric_and_acyclic(spec in spec_strategy(4, 4)) {
        let g = build_digraph(&spec).unwrap();
        prop_assert!(g.is_antisymmetric());
        let order = g.topological_order();
        prop_assert!(order.is_some());
        let order = order.unwrap();
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (u, v) in g.arcs() {
            prop_assert!(pos[u] < pos[v]);
        }
    }

    #[test]
    fn generated_arcs_match_pairwise_rule(spec in spec_strategy(4, 3)) {
        let fast = build_digraph(&spec).unwrap();
        let slow = build_digraph_pairwise(&spec, LIMIT).unwrap();
        prop_assert_eq!(fast.arcs(), slow.arcs());
    }

    #[test]
    fn arcs_are_transitive(spec in spec_strategy(3, 3)) {
        let g = build_digraph(&spec).unwrap();
        for (u, v) in g.arcs() {
            for &w in g.out_neighbors(v) {
                prop_assert!(w == u || g.has_arc(u, w));
            }
        }
    }

    #[test]
    fn permuting_factors_gives_isomorphic_digraph(
        spec in spec_strategy(4, 4),
        seed in any::<u64>(),
    ) {
        let n = spec.factor_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let other = spec.permuted(&perm).unwrap();
        let g = build_digraph(&spec).unwrap();
        let h = build_digraph(&other).unwrap();
        // factor perm[k] of `spec` becomes factor k of `other`
        let map: Vec<usize> = g
            .vertices()
            .iter()
            .map(|v| {
                let classes = perm.iter().map(|&k| v.class(k)).collect();
                other.index_of(&IdealVector::from_classes(classes)).unwrap()
            })
            .collect();
        let mut mapped: Vec<(usize, usize)> = g.arcs().into_iter().map(|(a, b)| (map[a], map[b])).collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped, h.arcs());
    }

    #[test]
    fn degree_formula_matches_counted_degrees(spec in spec_strategy(4, 4)) {
        let g = build_digraph(&spec).unwrap();
        for (v, counted) in g.vertices().iter().zip(counted_degrees(&g)) {
            let f = degree_formula(v, &spec).unwrap();
            prop_assert_eq!(f.d, f.d_plus + f.d_minus);
            prop_assert_eq!(f, counted, "vertex {}", v);
        }
    }

    #[test]
    fn index_round_trip(spec in spec_strategy(5, 5)) {
        for (i, v) in enumerate_ideals(&spec).iter().enumerate() {
            prop_assert_eq!(spec.index_of(v).unwrap(), i);
            prop_assert_eq!(&spec.ideal_at(i).unwrap(), v);
        }
    }

    #[test]
    fn hom_criterion_matches_structure(n in 4u64..3000) {
        let Ok(ctx) = factor_modulus(n) else { return Ok(()); };
        let s = build_digraph_for_zn(&ctx, 10_000).unwrap();
        let h = build_digraph_hom(&ctx, 10_000).unwrap();
        prop_assert_eq!(s.arcs(), h.arcs());
    }

    #[test]
    fn divisor_map_round_trip(n in 4u64..100_000) {
        let Ok(ctx) = factor_modulus(n) else { return Ok(()); };
        for &d in ctx.nontrivial_divisors() {
            let ideal = ctx.divisor_to_ideal(d).unwrap();
            prop_assert_eq!(ctx.ideal_to_divisor(&ideal).unwrap(), d);
        }
    }

    #[test]
    fn solver_results_are_consistent(spec in spec_strategy(4, 3)) {
        let g = build_digraph(&spec).unwrap();
        let u = g.underlying();
        let mut b = Budget::unlimited();
        let w = max_clique(u, &mut b);
        let chi = chromatic_number(u, &w.witness, &mut b);
        let chi_prime = edge_chromatic_number(u, &mut b);
        let omega = w.exact().unwrap();
        prop_assert!(omega <= chi.exact().unwrap());
        prop_assert!(is_proper_vertex_coloring(u, &chi.witness));
        let cp = chi_prime.exact().unwrap();
        prop_assert!(cp == u.max_degree() || cp == u.max_degree() + 1);

        let colors = dense_colors(&product_coloring(&spec));
        let used = colors.iter().max().map_or(0, |c| c + 1);
        prop_assert!(is_proper_vertex_coloring(u, &colors));
        prop_assert!(used >= chi.exact().unwrap());
        prop_assert!(used <= product_coloring_bound(&spec));
    }

    #[test]
    fn appending_a_factor_raises_omega(spec in spec_strategy(3, 3), t in 1u32..=3) {
        let bigger = spec.with_factor(LocalFactor::new(t).unwrap());
        prop_assume!(bigger.vertex_count() <= LIMIT as u128);
        let step = if t == 1 { 1 } else { 2 };
        prop_assert_eq!(omega(&bigger), omega(&spec) + step);
    }
}

#[test]
fn witness_scan_agrees_with_hom_criterion() {
    for n in 4..=300u64 {
        let Ok(ctx) = factor_modulus(n) else { continue };
        let divs = ctx.nontrivial_divisors().to_vec();
        for &a in &divs {
            for &b in &divs {
                if a == b {
                    continue;
                }
                let witness = ctx.regular_element_witness(a, b).unwrap();
                assert_eq!(witness.is_some(), ctx.has_arc(a, b).unwrap(), "Z_{n}: ({a}) -> ({b})");
                if let Some(r) = witness {
                    assert_eq!(r % a, 0);
                    assert!((1..n / b).all(|j| r * j * b % n != 0));
                }
            }
        }
    }
}

#[test]
fn report_round_trips_through_json() {
    let spec = RingSpec::from_profile(&[2, 1, 1]).unwrap();
    let report = analyze(&spec, &AnalyzeOptions::default()).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    let back: InvariantReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in [
        "delta",
        "omega_exact",
        "omega_predicted",
        "chi_exact",
        "chi_predicted",
        "chi_prime_exact",
        "chi_prime_predicted",
        "beineke",
        "mismatches",
        "timings",
    ] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
}
