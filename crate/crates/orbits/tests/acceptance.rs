//! End-to-end acceptance checks. Each test covers one headline behaviour,
//! enforces a wall-clock budget, and prints a single PASS line with timings
//! when it succeeds.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{chain_oracle_type, upper_triangular_sample};
use orbits::{
    access_report, accessible, gl_move_i_witness, gl_move_ii_witness, gl_two_part_witness,
    hasse_diagram, nontransitivity_check, o_move1_example, o_move1_witness, one_accessible_status,
    ratio, run_suite, sp_move_witness, verify_witness, AlgebraKind, Cocharacter, Diagram, Error,
    ExactMatrix, FieldScalar, MoveWitness, Obstruction, OrderChoice, Partition, TriState,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(text: &str) -> Partition {
    text.parse().expect("valid partition literal")
}

fn finish(label: &str, detail: &str, started: Instant, budget_ms: u64) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_millis(budget_ms),
        "{label}: took {elapsed:?}, budget {budget_ms} ms"
    );
    println!("PASS  {label} — {detail} ({} ms)", elapsed.as_millis());
}

fn edge_set(diagram: &Diagram) -> BTreeSet<(String, String)> {
    diagram
        .edge_partitions()
        .iter()
        .map(|(upper, lower)| (upper.to_string(), lower.to_string()))
        .collect()
}

#[test]
fn gl6_accessibility_order_coincides_with_dominance() {
    let started = Instant::now();
    let kind = AlgebraKind::gl(6).expect("valid dimension");
    let acc = hasse_diagram(kind, OrderChoice::Accessibility).expect("diagram builds");
    let dom = hasse_diagram(kind, OrderChoice::Dominance).expect("diagram builds");
    assert_eq!(acc.nodes.len(), 11, "partitions of 6");
    assert_eq!(acc.nodes, dom.nodes);
    // Frozen covering relations of the dominance order on partitions of 6.
    let expected: BTreeSet<(String, String)> = [
        ("[6]", "[5,1]"),
        ("[5,1]", "[4,2]"),
        ("[4,2]", "[4,1^2]"),
        ("[4,2]", "[3^2]"),
        ("[4,1^2]", "[3,2,1]"),
        ("[3^2]", "[3,2,1]"),
        ("[3,2,1]", "[3,1^3]"),
        ("[3,2,1]", "[2^3]"),
        ("[3,1^3]", "[2^2,1^2]"),
        ("[2^3]", "[2^2,1^2]"),
        ("[2^2,1^2]", "[2,1^4]"),
        ("[2,1^4]", "[1^6]"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(edge_set(&acc), expected, "accessibility covering relations");
    assert_eq!(edge_set(&dom), expected, "dominance covering relations");
    finish(
        "gl6 order equality",
        "accessibility and dominance diagrams agree: 11 nodes, 12 identical edges",
        started,
        1_000,
    );
}

#[test]
fn sp8_dominance_and_accessibility_diverge() {
    let started = Instant::now();
    let kind = AlgebraKind::sp(8).expect("valid dimension");
    let top = p("[8]");
    let sub = p("[6,2]");
    assert!(sub.dominance_le(&top).expect("equal sizes"), "dominance holds");
    let report = access_report(kind, &top, &sub).expect("valid pair");
    assert!(report.dominated);
    assert!(!report.accessible, "the dominated pair is severed");
    let acc = hasse_diagram(kind, OrderChoice::Accessibility).expect("diagram builds");
    for (upper, lower) in [
        ("[8]", "[4^2]"),
        ("[8]", "[6,1^2]"),
        ("[6,2]", "[4^2]"),
        ("[6,2]", "[6,1^2]"),
    ] {
        assert!(
            acc.contains_edge(&p(upper), &p(lower)),
            "accessibility diagram must keep {upper} -> {lower}"
        );
    }
    assert!(
        !acc.contains_edge(&top, &sub),
        "accessibility diagram must omit [8] -> [6,2]"
    );
    finish(
        "sp8 divergence",
        "[8] dominates [6,2] yet cannot reach it; the four replacement edges are present",
        started,
        1_000,
    );
}

#[test]
fn witness_grids_all_verify() {
    let started = Instant::now();
    let mut verified = 0usize;
    let mut rejected = 0usize;
    let mut attempt = |witness: orbits::Result<MoveWitness>, must_exist: bool| {
        match witness {
            Ok(w) => {
                let report = verify_witness(&w);
                assert!(report.passed(), "witness failed verification: {}", w.provenance);
                verified += 1;
            }
            Err(Error::ParameterDomain(_)) if !must_exist => rejected += 1,
            Err(e) => panic!("constructor error: {e}"),
        }
    };
    for m in 2..=5 {
        attempt(sp_move_witness(1, &[m]), true);
    }
    for move_no in 2..=4 {
        for n in 2..=4 {
            for m in 1..=4 {
                attempt(sp_move_witness(move_no, &[n, m]), false);
            }
        }
    }
    for r in 1..=5 {
        for s in 1..=5 {
            for k in 1..=5 {
                attempt(gl_two_part_witness(r, s, k), false);
                attempt(gl_move_i_witness(&[r], &[k], s), false);
                attempt(gl_move_ii_witness(r, &[s], &[k]), false);
            }
        }
    }
    for m in 2..=4 {
        attempt(o_move1_witness(m), true);
    }
    let example = o_move1_example();
    assert!(verify_witness(&example).passed(), "fixed orthogonal example");
    verified += 1;
    assert_eq!(verified, VERIFIED_GRID_WITNESSES, "verified-witness tally drifted");
    finish(
        "witness grid",
        &format!("{verified} witnesses rank-verified, {rejected} parameter points outside template domains"),
        started,
        30_000,
    );
}

/// Frozen size of the admissible witness grid above.
const VERIFIED_GRID_WITNESSES: usize = 112;

#[test]
fn obstruction_classification_examples() {
    let started = Instant::now();
    let sp6 = AlgebraKind::sp(6).expect("valid dimension");
    let blocked = access_report(sp6, &p("[6]"), &p("[4,2]")).expect("valid pair");
    assert!(!blocked.accessible);
    assert_eq!(blocked.obstruction, Some(Obstruction::DistinguishedTarget));

    let sp10 = AlgebraKind::sp(10).expect("valid dimension");
    let direct = access_report(sp10, &p("[8,2]"), &p("[6,4]")).expect("valid pair");
    assert!(!direct.accessible);
    assert_eq!(direct.obstruction, Some(Obstruction::DirectType5));

    let open = access_report(sp10, &p("[8,2]"), &p("[5^2]")).expect("valid pair");
    assert!(open.accessible);
    assert_eq!(open.obstruction, None);
    finish(
        "obstruction classification",
        "sp6 [6]->[4,2] hits a distinguished target, sp10 [8,2]->[6,4] is the direct severed shape, [8,2]->[5^2] stays open",
        started,
        1_000,
    );
}

#[test]
fn nontransitivity_chain_and_family() {
    let started = Instant::now();
    let kind = AlgebraKind::sp(8).expect("valid dimension");
    let source = p("[6,1^2]");
    let target = p("[4,2,1^2]");
    let report = access_report(kind, &source, &target).expect("valid pair");
    assert!(report.accessible, "two-step route exists");
    let chain = report.witness_chain.expect("accessible pairs carry a chain");
    assert!(
        chain.iter().any(|(step, _)| *step == p("[4,2^2]")),
        "chain routes through [4,2^2]"
    );
    assert_eq!(chain.last().expect("nonempty").0, target);
    let verdict = one_accessible_status(kind, &source, &target).expect("valid pair");
    assert_eq!(verdict.status, TriState::No, "single-step reachability is refuted");
    let family = nontransitivity_check(200, 0x5EED_CAFE);
    assert!(family.passed(), "seeded family check");
    for item in &family.items {
        assert!(item.pass, "family item {} failed: {}", item.name, item.detail);
    }
    finish(
        "non-transitivity",
        "chain [6,1^2]->[4,2^2]->[4,2,1^2] found, single step refuted, 200-sample family check passed",
        started,
        5_000,
    );
}

#[test]
fn algebraic_property_suites() {
    let started = Instant::now();

    // (a) Jordan types from rank sequences agree with the independent
    // vector-sequence oracle on 500 random nilpotent matrices.
    let mut state = 0x0123_4567_89AB_CDEFu64;
    for round in 0..500 {
        let n = 2 + (round % 5) as usize; // sizes 2..=6
        let x = upper_triangular_sample(n, &mut state);
        assert_eq!(
            x.jordan_type().expect("nilpotent"),
            chain_oracle_type(&x),
            "oracle disagreement at round {round}"
        );
    }

    // (b) Shrinking commutes with transpose, the bilinear forms, and limits
    // on 200 random instances.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0_FFEE);
    let mut limits_taken = 0usize;
    for sample in 0..200usize {
        let n = rng.gen_range(4..=6usize);
        let structured = sample % 2 == 0;
        let x = ExactMatrix::from_fn(n, n, |i, j| {
            if structured && i > j {
                FieldScalar::zero()
            } else if rng.gen_range(0..3u8) == 0 {
                FieldScalar::from_rat(ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            } else {
                FieldScalar::zero()
            }
        });
        assert!(
            x.shrink(1).expect("large enough").transpose()
                == x.transpose().shrink(1).expect("large enough"),
            "transpose commutation failed at sample {sample}"
        );
        let mut weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        if structured {
            weights.sort_unstable_by(|a, b| b.cmp(a));
        }
        let lambda = Cocharacter::new(weights);
        if let Some(limit) = lambda.limit(&x).expect("square") {
            limits_taken += 1;
            let restricted = lambda
                .shrink(1)
                .expect("large enough")
                .limit(&x.shrink(1).expect("large enough"))
                .expect("square")
                .expect("kept entries keep nonnegative weight");
            assert!(
                restricted == limit.shrink(1).expect("large enough"),
                "limit commutation failed at sample {sample}"
            );
        }
    }
    assert!(limits_taken >= 100, "limit branch exercised {limits_taken} times");
    for (big, small, d) in [(6usize, 4usize, 1usize), (8, 6, 1), (10, 6, 2), (12, 8, 2)] {
        let outer = AlgebraKind::sp(big).expect("valid dimension");
        let inner = AlgebraKind::sp(small).expect("valid dimension");
        assert!(
            outer.omega().expect("form").shrink(d).expect("large enough")
                == inner.omega().expect("form"),
            "sp form on {big} strings does not restrict to {small}"
        );
    }
    for (big, small) in [(7usize, 5usize), (8, 6), (9, 7)] {
        let outer = AlgebraKind::o(big).expect("valid dimension");
        let inner = AlgebraKind::o(small).expect("valid dimension");
        assert!(
            outer.omega().expect("form").shrink(1).expect("large enough")
                == inner.omega().expect("form"),
            "o form on {big} strings does not restrict to {small}"
        );
    }

    // (c) Accessibility is contained in dominance and both behave as partial
    // orders, exhaustively over every family in the stated ranges.
    let mut kinds = Vec::new();
    for n in (2..=12).step_by(2) {
        kinds.push(AlgebraKind::sp(n).expect("valid dimension"));
    }
    for n in 1..=11 {
        kinds.push(AlgebraKind::o(n).expect("valid dimension"));
    }
    for n in 1..=8 {
        kinds.push(AlgebraKind::gl(n).expect("valid dimension"));
    }
    let mut pairs_checked = 0usize;
    for kind in kinds {
        let nodes = hasse_diagram(kind, OrderChoice::Dominance)
            .expect("diagram builds")
            .nodes;
        let count = nodes.len();
        let mut reach = vec![vec![false; count]; count];
        for i in 0..count {
            for j in 0..count {
                reach[i][j] = accessible(kind, &nodes[i], &nodes[j]).expect("valid pair");
                if reach[i][j] {
                    assert!(
                        nodes[j].dominance_le(&nodes[i]).expect("equal sizes"),
                        "{kind}: accessibility escapes dominance at {} -> {}",
                        nodes[i],
                        nodes[j]
                    );
                }
                pairs_checked += 1;
            }
        }
        for i in 0..count {
            assert!(reach[i][i], "{kind}: accessibility must be reflexive at {}", nodes[i]);
            for j in 0..count {
                if reach[i][j] && reach[j][i] {
                    assert_eq!(i, j, "{kind}: antisymmetry violated");
                }
                for l in 0..count {
                    if reach[i][j] && reach[j][l] {
                        assert!(
                            reach[i][l],
                            "{kind}: transitivity violated at {} -> {} -> {}",
                            nodes[i], nodes[j], nodes[l]
                        );
                    }
                }
            }
        }
    }

    // (d) Field axioms on 1000 random samples, through the library's own
    // deterministic check suite.
    let field = run_suite(7, Some("field-axioms")).expect("known item");
    assert!(field.passed(), "field axiom suite failed:\n{field}");

    finish(
        "algebraic property suites",
        &format!(
            "oracle agreement on 500 matrices, 200 commutation samples ({limits_taken} with limits), {pairs_checked} exhaustive order pairs, 1000 field samples"
        ),
        started,
        60_000,
    );
}

#[test]
fn sp_covering_pair_classification() {
    let started = Instant::now();
    let mut total = 0usize;
    let mut severed = Vec::new();
    for n in (2..=12).step_by(2) {
        let kind = AlgebraKind::sp(n).expect("valid dimension");
        let diagram = hasse_diagram(kind, OrderChoice::Dominance).expect("diagram builds");
        for (upper, lower) in diagram.edge_partitions() {
            let report = access_report(kind, upper, lower).expect("valid pair");
            let unreachable = !report.accessible;
            let classified = matches!(
                report.obstruction,
                Some(Obstruction::DistinguishedTarget) | Some(Obstruction::DirectType5)
            );
            assert_eq!(
                unreachable, classified,
                "sp_{n} covering pair {upper} -> {lower}: unreachable={unreachable} but classified={classified}"
            );
            total += 1;
            if unreachable {
                severed.push(format!("sp_{n} {upper} -> {lower}"));
            }
        }
    }
    assert_eq!(total, COVERING_PAIRS, "covering-pair tally drifted");
    assert_eq!(severed.len(), SEVERED_PAIRS, "severed-pair tally drifted: {severed:?}");
    finish(
        "covering-pair classification",
        &format!(
            "{total} dominance covering pairs across sp_2..sp_12; the {} severed ones are exactly the classified obstructions",
            severed.len()
        ),
        started,
        30_000,
    );
}

/// Frozen tallies for the sweep above.
const COVERING_PAIRS: usize = 120;
const SEVERED_PAIRS: usize = 9;
