#![allow(dead_code)]

use itertools::Itertools;
use oriented_fas::generators::gen_random_with_arcs;
use oriented_fas::{Ordering, OrientedMultigraph, VertexId};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum backward-arc count over every permutation of the vertices.
pub fn brute_force_fas(g: &OrientedMultigraph) -> usize {
    let vs: Vec<VertexId> = g.vertices().collect();
    let arcs: Vec<(VertexId, VertexId, u32)> = g.arcs().collect();
    let mut pos = vec![0usize; g.id_bound()];
    let mut best = usize::MAX;
    for perm in vs.iter().permutations(vs.len()) {
        for (i, v) in perm.iter().enumerate() {
            pos[v.0] = i;
        }
        let cost: usize = arcs
            .iter()
            .filter(|(u, v, _)| pos[u.0] > pos[v.0])
            .map(|&(_, _, c)| c as usize)
            .sum();
        best = best.min(cost);
    }
    if vs.is_empty() {
        0
    } else {
        best
    }
}

/// Circulant on two steps plus random extra arcs under the degree cap. Dense
/// enough that irreducible graphs with degree-5 vertices show up often.
pub fn near_circulant(n: usize, seed: u64) -> OrientedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let s1 = rng.gen_range(1..n);
        let s2 = rng.gen_range(1..n);
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| [(i, (i + s1) % n), (i, (i + s2) % n)])
            .collect();
        let Ok(mut g) = OrientedMultigraph::from_arcs(n, &arcs) else {
            continue;
        };
        let extra = rng.gen_range(1..=n / 2 + 1);
        for _ in 0..4 * extra {
            let u = VertexId(rng.gen_range(0..n));
            let v = VertexId(rng.gen_range(0..n));
            if u != v && !g.has_arc(v, u) && g.degree(u) < 5 && g.degree(v) < 5 {
                g.add_arc(u, v, 1).unwrap();
            }
        }
        return g;
    }
}

/// Mix of sparse, dense and near-circulant instances with maximum degree 5.
pub fn mixed_instance(n: usize, seed: u64) -> OrientedMultigraph {
    match seed % 3 {
        0 => near_circulant(n.max(3), seed),
        1 => gen_random_with_arcs(n, 5, 5 * n / 2, seed),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
            let target = rng.gen_range(0..=5 * n / 2);
            gen_random_with_arcs(n, 5, target, seed)
        }
    }
}

pub fn random_ordering(g: &OrientedMultigraph, rng: &mut ChaCha8Rng) -> Ordering {
    let mut vs: Vec<VertexId> = g.vertices().collect();
    vs.shuffle(rng);
    Ordering::new(vs).unwrap()
}

/// Arbitrary oriented multigraph with `Δ ≤ max_deg` on up to `max_n` vertices.
pub fn arb_graph(max_n: usize, max_deg: u32) -> impl Strategy<Value = OrientedMultigraph> {
    (1..=max_n, any::<u64>(), 0.0..=1.0f64).prop_map(move |(n, seed, density)| {
        let target = (density * (max_deg as usize * n) as f64 / 2.0) as usize;
        gen_random_with_arcs(n, max_deg, target, seed)
    })
}
