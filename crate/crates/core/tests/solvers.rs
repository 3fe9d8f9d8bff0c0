mod common;

use common::{mixed_instance, near_circulant};
use oriented_fas::bounded5::{claim_a_sequence, classify_partition, composite_step};
use oriented_fas::generators::{gen_d14, gen_d7, gen_random_regular5, gen_triangles};
use oriented_fas::reduce::{apply, ReductionKind};
use oriented_fas::regular5::{build_aux_graph, extend_ordering, q_set, QClass};
use oriented_fas::{
    backward_count, exact_fas, solve_bounded5, solve_regular5, verify_fas, FasError, Ordering,
    OrientedMultigraph, VertexId,
};

fn v(i: usize) -> VertexId {
    VertexId(i)
}

fn graph(n: usize, arcs: &[(usize, usize)]) -> OrientedMultigraph {
    OrientedMultigraph::from_arcs(n, arcs).unwrap()
}

#[test]
fn bounded5_guarantee_on_mixed_instances() {
    for seed in 0..300u64 {
        let g = mixed_instance(5 + (seed as usize % 56), seed);
        let s = solve_bounded5(&g).unwrap();
        assert!(verify_fas(&g, &s.fas).unwrap());
        assert!(s.fas.size() <= g.arc_count() / 3);
        assert_eq!(s.fas.size(), backward_count(&g, &s.ordering).unwrap());
    }
}

#[test]
fn never_below_the_optimum() {
    for seed in 0..60u64 {
        let g = mixed_instance(5 + (seed as usize % 10), seed);
        let s = solve_bounded5(&g).unwrap();
        let (opt, _) = exact_fas(&g, 24).unwrap();
        assert!(opt <= s.fas.size());
        assert!(opt <= g.arc_count() / 3);
    }
}

#[test]
fn trace_lifts_back_to_the_ordering() {
    for seed in 0..100u64 {
        let g = near_circulant(6 + (seed as usize % 30), seed);
        let s = solve_bounded5(&g).unwrap();
        assert_eq!(s.trace.lift_all().unwrap(), s.ordering);
        // each lift step adds at most its budget
        let states = s.trace.replay(&g).unwrap();
        let mut ord = Ordering::empty();
        let mut cost = 0;
        for (pre, r) in states.iter().zip(&s.trace.records).rev() {
            ord = oriented_fas::reduce::lift(r, &ord).unwrap();
            let now = backward_count(pre, &ord).unwrap();
            assert!(now <= cost + r.k);
            cost = now;
        }
        assert!(s.fas.size() <= s.trace.total_k());
    }
}

#[test]
fn named_instances() {
    assert_eq!(solve_bounded5(&gen_d7()).unwrap().fas.size(), 5);
    assert_eq!(solve_bounded5(&gen_triangles(7)).unwrap().fas.size(), 7);
    assert!(solve_bounded5(&OrientedMultigraph::new(0))
        .unwrap()
        .ordering
        .is_empty());
}

#[test]
fn irreducible_partitions_are_balanced() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let g = near_circulant(8 + (seed as usize % 30), seed);
        let s = solve_bounded5(&g).unwrap();
        for (state, r) in s.trace.replay(&g).unwrap().iter().zip(&s.trace.records) {
            if matches!(r.kind, ReductionKind::DelX5 | ReductionKind::Base4) {
                let p = classify_partition(state).unwrap();
                assert_eq!(p.x5_plus.len(), p.x5_minus.len());
                assert_eq!(
                    p.x5_plus.len() + p.x4.len() + p.x5_minus.len(),
                    state.vertex_count()
                );
                if r.kind == ReductionKind::DelX5 {
                    let block = composite_step(state, p.x5_minus[0]).unwrap();
                    let net: isize = block.iter().map(|r| r.net_removed()).sum();
                    let k: usize = block.iter().map(|r| r.k).sum();
                    assert!(net >= 3 * k as isize);
                    assert!(block.last().unwrap().kind.is_good());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn claim_a_pendant_neighbour() {
    // sub: q=0 -> a=1, q -> v=2, c=3 -> q, v -> w=4; in g, v also has 5 -> v, v -> 6
    let sub = graph(7, &[(0, 1), (0, 2), (3, 0), (2, 4)]);
    let g = graph(7, &[(0, 1), (0, 2), (3, 0), (2, 4), (5, 2), (2, 6)]);
    let c = claim_a_sequence(&g, &sub, v(0)).unwrap();
    assert_eq!(c.nice.len(), 1);
    assert_eq!(c.nice[0].kind, ReductionKind::N3);
    assert_eq!((c.good.kind, c.good.focus[0]), (ReductionKind::G1, v(2)));
}

#[test]
fn claim_a_clique_case() {
    // q=0, a=1, b=2, c=3 with q->a, q->b, c->q and the cycle a->b->c->a
    let clique = [(0, 1), (0, 2), (3, 0), (1, 2), (2, 3), (3, 1)];
    let sub = graph(10, &clique);
    let mut arcs = clique.to_vec();
    arcs.extend([(1, 4), (5, 1), (2, 6), (7, 3), (0, 8), (9, 0)]);
    let g = graph(10, &arcs);
    let c = claim_a_sequence(&g, &sub, v(0)).unwrap();
    assert_eq!(c.nice.len(), 1);
    assert_eq!((c.nice[0].kind, c.nice[0].focus[0]), (ReductionKind::N3, v(2)));
    assert_eq!((c.good.kind, c.good.focus[0]), (ReductionKind::G2B, v(0)));
    // the sequence applies in order
    let after = apply(&sub, &c.nice[0]).unwrap();
    apply(&after, &c.good).unwrap();
}

#[test]
fn composite_step_with_parallel_pair() {
    // x=0 => y=1 twice, 2,3,4 -> x, y -> 5, y -> 6
    let g = graph(7, &[(0, 1), (0, 1), (2, 0), (3, 0), (4, 0), (1, 5), (1, 6)]);
    let block = composite_step(&g, v(0)).unwrap();
    let kinds: Vec<ReductionKind> = block.iter().map(|r| r.kind).collect();
    assert_eq!(kinds, [ReductionKind::DelX5, ReductionKind::G2A]);
    let removed: isize = block.iter().map(|r| r.net_removed()).sum();
    assert_eq!(removed, 7);
    assert_eq!(block.iter().map(|r| r.k).sum::<usize>(), 2);
}

#[test]
fn composite_step_needs_a_degree_four_out_neighbour() {
    let mut arcs = vec![(0, 1), (0, 2), (3, 0), (4, 0), (5, 0)];
    for y in [1, 2] {
        arcs.extend([(y, 6), (y, 7), (8, y), (9, y)]);
    }
    let g = graph(10, &arcs);
    assert!(matches!(
        composite_step(&g, v(0)),
        Err(FasError::InternalInvariant(_))
    ));
}

#[test]
fn regular5_guarantees() {
    for seed in 0..40u64 {
        let n = 10 + 2 * (seed as usize % 60);
        let g = gen_random_regular5(n, seed).unwrap();
        let s = solve_regular5(&g).unwrap();
        let m = g.arc_count();
        assert!(verify_fas(&g, &s.fas).unwrap());
        assert!(s.aux_max_degree <= 57);
        assert!(s.independent.len() >= n.div_ceil(58));
        assert!(s.fas.size() <= (m - s.independent.len()) / 3);
        assert!(s.fas.size() <= 24 * n / 29);
    }
}

#[test]
fn single_s0_extension_meets_its_arithmetic() {
    let mut hits = 0;
    for seed in 0..30u64 {
        let g = gen_random_regular5(40, seed).unwrap();
        let Some(u) = g.vertices().find(|&u| q_set(&g, u).unwrap().class == QClass::S0) else {
            continue;
        };
        let q = q_set(&g, u).unwrap();
        let mut rest = g.clone();
        rest.remove_vertex(u).unwrap();
        let inner = solve_bounded5(&rest).unwrap();
        let ord = extend_ordering(&g, &inner.ordering, &[q]).unwrap();
        assert!(backward_count(&g, &ord).unwrap() <= (g.arc_count() - 1) / 3);
        hits += 1;
    }
    assert!(hits > 0);
}

#[test]
fn disjoint_copies_do_not_conflict() {
    let a = gen_d14();
    let mut arcs: Vec<(usize, usize)> = a.arcs().map(|(u, w, _)| (u.0, w.0)).collect();
    arcs.extend(a.arcs().map(|(u, w, _)| (u.0 + 14, w.0 + 14)));
    let g = graph(28, &arcs);
    let h = build_aux_graph(&g).unwrap();
    for u in 0..14 {
        assert!(h.neighbors(v(u)).iter().all(|w| w.0 < 14));
    }
    let one = solve_regular5(&a).unwrap().fas.size();
    let two = solve_regular5(&g).unwrap().fas.size();
    assert!(two <= 24 * 28 / 29);
    assert!(one <= 24 * 14 / 29);
}

#[test]
fn regular5_rejects_other_degrees() {
    assert!(matches!(
        solve_regular5(&gen_d7()),
        Err(FasError::NotRegular5(_, _))
    ));
}
