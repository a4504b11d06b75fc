use rainbow_core::constructions::{gen_construction2, gen_extremal_thm10, gen_pc_bipartite, gen_rainbow_complete};
use rainbow_core::graph::ColoredGraph;
use rainbow_core::verifier::{
    check_conclusion, check_hypothesis, RandomCheck, TheoremId, VerifyError, Witness, ALL_THEOREMS,
};

#[test]
fn hypothesis_examples() {
    assert!(!check_hypothesis(&gen_pc_bipartite(10).unwrap(), TheoremId::T15, 1).unwrap());
    assert!(check_hypothesis(&gen_rainbow_complete(8).unwrap(), TheoremId::T11, 1).unwrap());
    assert!(check_hypothesis(&gen_extremal_thm10(5).unwrap(), TheoremId::T10, 1).unwrap());
    assert!(!check_hypothesis(&gen_rainbow_complete(7).unwrap(), TheoremId::T11, 1).unwrap());
    // T16 hypothesis is met by its own extremal graph
    assert!(check_hypothesis(&gen_pc_bipartite(6).unwrap(), TheoremId::T16, 1).unwrap());
}

#[test]
fn conclusion_examples() {
    let c = check_conclusion(&gen_rainbow_complete(6).unwrap(), TheoremId::T11, 1).unwrap();
    assert!(c.holds);
    match c.witness {
        Witness::Packing(Some(p)) => {
            assert_eq!(p.len(), 2);
            assert!(p.triangles[0].vertex_set().is_disjoint(p.triangles[1].vertex_set()));
        }
        w => panic!("unexpected witness {w:?}"),
    }

    let c = check_conclusion(&gen_construction2(4).unwrap(), TheoremId::T1, 1).unwrap();
    assert!(!c.holds);
    assert!(matches!(c.witness, Witness::VertexCounts(ref v) if v[0] == 0));

    let c = check_conclusion(&gen_extremal_thm10(5).unwrap(), TheoremId::T10, 1).unwrap();
    assert!(c.holds);
    assert!(matches!(c.witness, Witness::Certificate(Some(_))));

    let c = check_conclusion(&gen_pc_bipartite(6).unwrap(), TheoremId::T16, 1).unwrap();
    assert!(c.holds);

    let c = check_conclusion(&gen_rainbow_complete(5).unwrap(), TheoremId::T5, 1).unwrap();
    assert!(c.holds);
    assert!(check_conclusion(&gen_rainbow_complete(7).unwrap(), TheoremId::T6, 1).unwrap().holds);
}

#[test]
fn complete_scope_is_enforced() {
    let path = ColoredGraph::validate(3, &[(0, 1, 0), (1, 2, 1)]).unwrap();
    for id in ALL_THEOREMS {
        let r = check_hypothesis(&path, id, 1);
        match id {
            TheoremId::T14 | TheoremId::T15 | TheoremId::T16 => assert!(r.is_ok()),
            _ => assert_eq!(r, Err(VerifyError::ScopeMismatch(id))),
        }
    }
}

#[test]
fn ids_round_trip_through_text() {
    for id in ALL_THEOREMS {
        assert_eq!(id.to_string().parse::<TheoremId>(), Ok(id));
        assert_eq!(id.to_string().to_lowercase().parse::<TheoremId>(), Ok(id));
    }
    assert!("T9".parse::<TheoremId>().is_err());
}

#[test]
fn thresholds_use_exact_parity() {
    // 2δ ≥ n + 1 at n = 8 needs δ = 5 (4.5 rounds up)
    assert_eq!(TheoremId::T11.min_color_degree_required(8, 1), Some(5));
    assert_eq!(TheoremId::T8.min_color_degree_required(7, 1), Some(4));
    assert_eq!(TheoremId::F13.min_color_degree_required(9, 2), Some(6));
}

#[test]
fn random_samples_meet_the_hypothesis() {
    let check = RandomCheck::new(TheoremId::T3, 10, 2, 7).unwrap();
    let report = check.run_range(0..400);
    assert_eq!(report.hypothesis_count, 400);
    assert_eq!(report.counterexample_count, 0);
    for i in 0..20 {
        let s = check.sample(i);
        assert!(s.hypothesis_met && s.counterexample.is_none());
        assert_eq!(s, check.sample(i));
    }
}

#[test]
fn general_samples_hold_and_small_orders_are_vacuous() {
    let check = RandomCheck::new(TheoremId::T14, 9, 1, 3).unwrap();
    let report = check.run_range(0..60);
    assert_eq!((report.hypothesis_count, report.counterexample_count), (60, 0));
    assert!(report.examined >= 60);
    assert_eq!(
        RandomCheck::new(TheoremId::T11, 7, 1, 0).err(),
        Some(VerifyError::VacuousHypothesis(TheoremId::T11, 7))
    );
    assert!(RandomCheck::new(TheoremId::T14, 6, 1, 0).is_err());
}
