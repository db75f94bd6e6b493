//! Cross-module invariants: locality of charge, appearance transfer from
//! cartwheels to triangulations, desk-scale interpreter soundness, sampled
//! overcharge soundness, and proptest algebra for the numeric kernels.

use fourcolor::appearance::{appears_in_cartwheel, appears_in_triangulation};
use fourcolor::cartwheel::extract_cartwheel;
use fourcolor::config::{free_completion, ring_size_formula, validate_configuration, Configuration};
use fourcolor::generate::{random_configuration, random_i6c_triangulation, seeded, subdivide};
use fourcolor::graph::{second_neighborhood, shapes, RotationGraph};
use fourcolor::part::{Cartwheel, Part};
use fourcolor::rules::{known as rule_known, rule_transfer, vertex_charge, DischargingRule};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn internally_six_connected_implies_well_behaved_neighborhoods() {
    let mut rng = seeded(31);
    for i in 0..5 {
        let t = random_i6c_triangulation(&mut rng, 1 + i);
        for v in 0..t.vertex_count() {
            assert!(second_neighborhood(&t, v).unwrap().well_behaved, "vertex {v}");
        }
    }
}

#[test]
fn vertex_charge_is_local_to_the_second_neighborhood() {
    use fourcolor::generate::flip_edge;
    let t = subdivide(&shapes::icosahedron());
    let rules = vec![
        rule_known::triangle_rule(1),
        rule_known::edge_rule(2, 5, Some(5), 6, None),
    ];
    let u = 0usize;
    let dist = t.distances(u);
    let before = vertex_charge(&t, u, &rules);
    let mut flips = 0;
    for x in 0..t.vertex_count() {
        for &y in t.neighbors(x) {
            if x > y || dist[x] < 3 || dist[y] < 3 {
                continue;
            }
            if let Some(t2) = flip_edge(&t, x, y) {
                // both apexes must also lie outside the second neighborhood
                let touched: Vec<usize> = (0..t2.vertex_count())
                    .filter(|&v| t2.degree(v) != t.degree(v))
                    .collect();
                if touched.iter().any(|&v| dist[v] < 3) {
                    continue;
                }
                if !matches!(fourcolor::graph::is_triangulation(&t2), Ok(true)) {
                    continue;
                }
                assert_eq!(vertex_charge(&t2, u, &rules), before, "flip {x}-{y}");
                flips += 1;
            }
        }
    }
    assert!(flips > 3, "need several far flips to make the check meaningful, had {flips}");
}

#[test]
fn appearance_transfers_from_cartwheel_to_triangulation() {
    let single = |g: u32| {
        Configuration::new(format!("v{g}"), RotationGraph::new(vec![vec![]]), vec![g])
    };
    let edge = |a: u32, b: u32| {
        Configuration::new(
            format!("e{a}{b}"),
            RotationGraph::new(vec![vec![1], vec![0]]),
            vec![a, b],
        )
    };
    let pool = vec![
        single(5),
        single(6),
        single(7),
        edge(5, 5),
        edge(5, 6),
        edge(6, 6),
        fourcolor::config::known::birkhoff(),
    ];
    let mut rng = seeded(37);
    let mut transfers = 0;
    for i in 0..4 {
        let t = random_i6c_triangulation(&mut rng, 1 + i);
        for v in (0..t.vertex_count()).step_by(5) {
            let w = extract_cartwheel(&t, v).unwrap();
            for k in &pool {
                if appears_in_cartwheel(k, &w) {
                    assert!(appears_in_triangulation(k, &t), "{} via hub {v}", k.name);
                    transfers += 1;
                }
            }
        }
    }
    assert!(transfers > 10, "expected plenty of transfers, saw {transfers}");
}

/// After the toy degree-5 presentation succeeds, no enumerated cartwheel of
/// hub degree 5 carries positive charge without containing the unavoidable
/// configuration.
#[test]
fn interpreter_success_implies_no_uncovered_positive_cartwheel() {
    use fourcolor::cartwheel::cartwheel_charge;
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let rules = fourcolor::io::parse_rules(dir.join("toy.rules")).unwrap().rules;
    let configs = fourcolor::io::parse_configs(dir.join("unavoidable.conf")).unwrap();
    let script = fourcolor::io::parse_presentation(dir.join("present/degree5.pres")).unwrap();
    let uset = fourcolor::script::UnavoidableSet::new(configs, fourcolor::script::RadiusPolicy::Error).unwrap();
    fourcolor::script::run_presentation(5, &script, &uset, &rules, false).expect("fixture passes");

    // Exhaust spoke degrees 5..=8; far labels fixed at 7 so appearance can
    // only come from the spokes the charge analysis actually constrains.
    let mut degs = vec![5u32; 5];
    let mut positive = 0;
    loop {
        let w = Cartwheel::with_uniform_labels(degs.clone(), 7);
        if cartwheel_charge(&w, &rules) > 0 {
            positive += 1;
            let covered = uset.configs.iter().any(|k| appears_in_cartwheel(k, &w));
            assert!(covered, "positive cartwheel {degs:?} lacks an unavoidable configuration");
        }
        let mut i = 0;
        loop {
            if i == 5 {
                break;
            }
            degs[i] += 1;
            if degs[i] <= 8 {
                break;
            }
            degs[i] = 5;
            i += 1;
        }
        if i == 5 {
            break;
        }
    }
    assert!(positive > 0, "the check must not be vacuous");
}

#[test]
fn overcharge_bounds_dominate_sampled_triangulation_transfers() {
    use fourcolor::overcharge::verify_overcharge_bound;
    use fourcolor::script::{RadiusPolicy, UnavoidableSet};
    let rules = vec![
        rule_known::triangle_rule(2),
        rule_known::edge_rule(1, 5, Some(5), 6, None),
    ];
    let screen = UnavoidableSet::new(vec![], RadiusPolicy::Error).unwrap();
    let rep = verify_overcharge_bound(&rules, &screen, 100).unwrap();
    let bound_for = |d: usize| {
        rep.bounds
            .iter()
            .find(|b| b.source_degree == d)
            .map(|b| b.bound)
            .unwrap_or(0)
    };
    let mut rng = seeded(41);
    for i in 0..3 {
        let t = random_i6c_triangulation(&mut rng, 1 + i);
        for u in 0..t.vertex_count() {
            let du = t.degree(u);
            if !(5..=8).contains(&du) {
                continue;
            }
            for &v in t.neighbors(u) {
                let actual = rule_transfer(&t, u, v, &rules);
                assert!(
                    actual <= bound_for(du),
                    "edge ({u},{v}) with d(u)={du} carries {actual} > bound {}",
                    bound_for(du)
                );
            }
        }
    }
}

#[test]
fn sampled_configurations_validate_iff_completion_builds() {
    let mut rng = seeded(43);
    let t = random_i6c_triangulation(&mut rng, 3);
    let mut checked = 0;
    for round in 0..60 {
        let Some(k) = random_configuration(&mut rng, &t, 4) else { continue };
        // valid as sampled
        assert!(validate_configuration(&k).is_valid());
        let s = free_completion(&k).unwrap();
        assert_eq!(s.ring_len() as i64, ring_size_formula(&k));
        // perturbing gamma usually breaks validity and the report must
        // agree with completion behavior plus the ring formula cross-check
        let mut bad = k.clone();
        let v = round % bad.gamma.len();
        bad.gamma[v] += 3;
        let report_ok = validate_configuration(&bad).is_valid();
        let builds = free_completion(&bad).is_ok();
        let formula_ok = builds
            && free_completion(&bad).unwrap().ring_len() as i64 == ring_size_formula(&bad)
            && ring_size_formula(&bad) >= 2;
        assert_eq!(report_ok, builds && formula_ok && report_structurally(&bad));
        checked += 1;
    }
    assert!(checked > 10);
}

/// The structural part of configuration validity, mirrored here so the test
/// states the equivalence it checks.
fn report_structurally(k: &Configuration) -> bool {
    use fourcolor::config::ConfigViolation as V;
    let report = validate_configuration(k);
    !report.violations.iter().any(|v| {
        matches!(
            v,
            V::GammaBelowFive { .. }
                | V::InternalGammaMismatch { .. }
                | V::BoundaryGammaNotLarger { .. }
                | V::TooManyComponents { .. }
                | V::CutVertexGamma { .. }
                | V::NotNearTriangulation
                | V::NotConnected
        )
    })
}

#[test]
fn emitted_configuration_files_reparse_to_the_same_text() {
    let mut rng = seeded(47);
    let t = random_i6c_triangulation(&mut rng, 2);
    let mut pool = Vec::new();
    for _ in 0..30 {
        if let Some(mut k) = random_configuration(&mut rng, &t, 4) {
            k.name = format!("cfg{}", pool.len());
            pool.push(k);
        }
        if pool.len() == 8 {
            break;
        }
    }
    assert!(pool.len() >= 4);
    let text = fourcolor::io::emit_configs(&pool).unwrap();
    let back = fourcolor::io::parse_configs_str(&text, "mem").unwrap();
    assert_eq!(back.len(), pool.len());
    let again = fourcolor::io::emit_configs(&back).unwrap();
    assert_eq!(text, again);
}

proptest! {
    #[test]
    fn rank_unrank_is_a_bijection(ring in 2usize..=9, salt in any::<u64>()) {
        let count = fourcolor::coloring::coloring_count(ring);
        let idx = salt % count;
        let c = fourcolor::coloring::unrank(ring, idx);
        prop_assert_eq!(fourcolor::coloring::rank(&c), idx);
        prop_assert_eq!(c.len(), ring);
    }

    #[test]
    fn canonical_class_is_invariant_under_permutation(ring in 3usize..=7, salt in any::<u64>(), pidx in 0usize..24) {
        let count = fourcolor::coloring::coloring_count(ring);
        let c = fourcolor::coloring::unrank(ring, salt % count);
        let perm = fourcolor::coloring::all_color_permutations()[pidx];
        let d = c.permuted(&perm);
        prop_assert_eq!(c.canonical_class(), d.canonical_class());
    }

    #[test]
    fn part_transforms_compose(d in 5usize..=9, a in 0usize..9, b in 0usize..9, pin in 0usize..9) {
        let mut p = Part::trivial(d);
        let spoke = 1 + pin % d;
        p = p.refine(spoke, 7).unwrap().0;
        let (a, b) = (a % d, b % d);
        prop_assert_eq!(p.rotated(a).rotated(b), p.rotated((a + b) % d));
        prop_assert_eq!(p.reflected().reflected(), p.clone());
        let q = Part::trivial(d).refine(1 + (pin + 1) % d, 6).unwrap().0;
        prop_assert_eq!(p.and(&q).unwrap(), q.and(&p).unwrap());
    }

    #[test]
    fn colorings_count_matches_closed_form(ring in 2usize..=10) {
        let full = fourcolor::coloring::enumerate_colorings(ring).unwrap();
        prop_assert_eq!(full.len() as u64, fourcolor::coloring::coloring_count(ring));
    }
}

#[test]
fn generated_triangulations_satisfy_euler_charge() {
    let mut rng = seeded(53);
    for _ in 0..5 {
        let moves = rng.gen_range(1..6);
        let t = random_i6c_triangulation(&mut rng, moves);
        let total: i64 = (0..t.vertex_count()).map(|v| 6 - t.degree(v) as i64).sum();
        assert_eq!(total, 12);
        let faces = t.faces();
        let sum: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(sum, 2 * t.edge_count());
    }
}

#[test]
fn ring_eight_configuration_reduces_with_stable_fixed_point() {
    // 6-6 edge: ring 8. The stabilized remainder certifies non-reducibility
    // because it is a nonempty consistent subset of the non-extendable set.
    let k = Configuration::new(
        "edge66",
        RotationGraph::new(vec![vec![1], vec![0]]),
        vec![6, 6],
    );
    let s = free_completion(&k).unwrap();
    assert_eq!(s.ring_len(), 8);
    let remainder = fourcolor::kempe::extendable_colorings(&s.graph, &s.ring).complement();
    let fixed = fourcolor::kempe::max_consistent_subset(&remainder);
    assert!(!fixed.is_empty());
    assert!(fixed.is_subset(&remainder));
    // a fixed point of the shrinking operator is exactly a consistent set
    assert_eq!(fourcolor::kempe::max_consistent_subset(&fixed), fixed);
}

#[test]
fn screening_never_raises_the_overcharge_bound() {
    use fourcolor::overcharge::max_edge_transfer;
    use fourcolor::script::{RadiusPolicy, UnavoidableSet};
    let rules: Vec<DischargingRule> = vec![
        DischargingRule {
            lo: vec![6, 5, 6],
            hi: vec![Some(6), None, Some(6)],
            ..rule_known::triangle_rule(1)
        },
        rule_known::edge_rule(2, 6, Some(6), 5, None),
    ];
    let empty = UnavoidableSet::new(vec![], RadiusPolicy::Error).unwrap();
    let k66 = Configuration::new("edge66", RotationGraph::new(vec![vec![1], vec![0]]), vec![6, 6]);
    let screened = UnavoidableSet::new(vec![k66], RadiusPolicy::Error).unwrap();
    for d in 5..=8 {
        let open = max_edge_transfer(d, &rules, &empty, None).unwrap().bound;
        let tight = max_edge_transfer(d, &rules, &screened, None).unwrap().bound;
        assert!(tight <= open, "degree {d}: {tight} > {open}");
    }
}
