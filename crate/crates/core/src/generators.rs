//! Named constructions and seeded random instances.
//!
//! Vertex `u_i` of the seven-vertex construction has id `i - 1`; the eighth
//! vertex of its extension has id 7. Random generators use `ChaCha8Rng`
//! seeded with `seed_from_u64`, so a seed fixes the instance on every
//! platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FasError, Result};
use crate::graph::{OrientedMultigraph, VertexId};

fn cycles(list: &[&[usize]]) -> Vec<Vec<VertexId>> {
    list.iter()
        .map(|c| c.iter().map(|&i| VertexId(i)).collect())
        .collect()
}

fn d7_arcs() -> Vec<(usize, usize)> {
    let mut arcs = Vec::with_capacity(16);
    arcs.extend((0..7).map(|i| (i, (i + 1) % 7)));
    arcs.extend((0..7).map(|i| ((i + 2) % 7, i)));
    arcs.extend([(0, 4), (1, 5)]);
    arcs
}

fn d8_arcs() -> Vec<(usize, usize)> {
    let mut arcs = d7_arcs();
    arcs.extend([(4, 7), (7, 0), (5, 7), (7, 1)]);
    arcs
}

/// Seven vertices, sixteen arcs, minimum feedback arc set 5.
pub fn gen_d7() -> OrientedMultigraph {
    OrientedMultigraph::from_arcs(7, &d7_arcs()).expect("valid construction")
}

/// Nine 3-cycles of the seven-vertex construction; every arc lies on at
/// most two of them.
pub fn family_t() -> Vec<Vec<VertexId>> {
    let mut family: Vec<Vec<VertexId>> = (0..7)
        .map(|i| vec![VertexId(i), VertexId((i + 1) % 7), VertexId((i + 2) % 7)])
        .collect();
    family.extend(cycles(&[&[0, 4, 2], &[1, 5, 3]]));
    family
}

/// The seven-vertex construction plus a vertex 7 with arcs 4→7, 7→0, 5→7
/// and 7→1.
pub fn gen_d8() -> OrientedMultigraph {
    OrientedMultigraph::from_arcs(8, &d8_arcs()).expect("valid construction")
}

/// [`family_t`] plus three 3-cycles and one 4-cycle through vertex 7;
/// every arc of the eight-vertex construction lies on exactly two.
pub fn family_t_star() -> Vec<Vec<VertexId>> {
    let mut family = family_t();
    family.extend(cycles(&[&[4, 7, 0], &[5, 7, 1], &[6, 4, 7, 1], &[0, 5, 7]]));
    family
}

/// Three copies of [`gen_d8`] (vertex `j` of copy `i` has id `8i + j`)
/// joined by a 3-cycle through the copies of each of the vertices 2, 3, 6
/// and 7. Every vertex has degree 6.
pub fn gen_d24() -> OrientedMultigraph {
    let mut arcs = Vec::with_capacity(72);
    for copy in 0..3 {
        arcs.extend(d8_arcs().into_iter().map(|(u, v)| (8 * copy + u, 8 * copy + v)));
    }
    for j in [2, 3, 6, 7] {
        arcs.extend([(j, 8 + j), (8 + j, 16 + j), (16 + j, j)]);
    }
    OrientedMultigraph::from_arcs(24, &arcs).expect("valid construction")
}

/// Two copies of [`gen_d7`] (ids 0..7 and 7..14) with the arcs 2→9, 10→3 and
/// 6→13 between the degree-4 vertices. Degree-5 and strongly connected.
pub fn gen_d14() -> OrientedMultigraph {
    let mut arcs = d7_arcs();
    arcs.extend(d7_arcs().into_iter().map(|(u, v)| (u + 7, v + 7)));
    arcs.extend([(2, 9), (10, 3), (6, 13)]);
    OrientedMultigraph::from_arcs(14, &arcs).expect("valid construction")
}

/// Two copies of `g` (compacted) with `k - d(u)` parallel arcs from each
/// vertex of the first copy to its twin in the second.
pub fn regularize(g: &OrientedMultigraph, k: u32) -> Result<OrientedMultigraph> {
    let degree = g.max_degree();
    if degree > k {
        return Err(FasError::DegreeExceedsK { degree, k });
    }
    let g = g.compacted();
    let n = g.vertex_count();
    let mut h = OrientedMultigraph::new(2 * n);
    for (u, v, c) in g.arcs() {
        h.add_arc(u, v, c)?;
        h.add_arc(VertexId(u.0 + n), VertexId(v.0 + n), c)?;
    }
    for u in g.vertices() {
        let gap = k - g.degree(u);
        if gap > 0 {
            h.add_arc(u, VertexId(u.0 + n), gap)?;
        }
    }
    Ok(h)
}

/// `t` vertex-disjoint 3-cycles.
pub fn gen_triangles(t: usize) -> OrientedMultigraph {
    let arcs: Vec<_> = (0..t)
        .flat_map(|i| {
            let b = 3 * i;
            [(b, b + 1), (b + 1, b + 2), (b + 2, b)]
        })
        .collect();
    OrientedMultigraph::from_arcs(3 * t, &arcs).expect("valid construction")
}

/// Random graph on `n` vertices aiming for `⌊max_deg·n/2⌋` arcs; see
/// [`gen_random_with_arcs`].
pub fn gen_random(n: usize, max_deg: u32, seed: u64) -> OrientedMultigraph {
    gen_random_with_arcs(n, max_deg, max_deg as usize * n / 2, seed)
}

/// Draws ordered pairs uniformly and keeps those that are not loops, do not
/// close a 2-cycle and respect the degree cap, until `target` arcs are
/// placed or the attempt budget runs out. Parallel arcs arise when a pair is
/// drawn twice.
pub fn gen_random_with_arcs(n: usize, max_deg: u32, target: usize, seed: u64) -> OrientedMultigraph {
    let mut g = OrientedMultigraph::new(n);
    if n < 2 {
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 20 * target + 100;
    for _ in 0..budget {
        if g.arc_count() >= target {
            break;
        }
        let u = VertexId(rng.gen_range(0..n));
        let v = VertexId(rng.gen_range(0..n));
        if u == v || g.has_arc(v, u) || g.degree(u) >= max_deg || g.degree(v) >= max_deg {
            continue;
        }
        g.add_arc(u, v, 1).expect("checked above");
    }
    g
}

/// Random degree-5 multigraph from a stub pairing. Loops are repaired by
/// swapping endpoints with a random other pair; each vertex pair then gets
/// one random direction for all of its copies, so no 2-cycle can form.
pub fn gen_random_regular5(n: usize, seed: u64) -> Result<OrientedMultigraph> {
    if (5 * n) % 2 == 1 {
        return Err(FasError::Infeasible(format!("5n = {} is odd", 5 * n)));
    }
    if n == 0 {
        return Ok(OrientedMultigraph::new(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v; 5]).collect();
    stubs.shuffle(&mut rng);
    let mut pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();

    let mut repaired = false;
    for _ in 0..100 * pairs.len() {
        let Some(i) = pairs.iter().position(|&(a, b)| a == b) else {
            repaired = true;
            break;
        };
        let j = rng.gen_range(0..pairs.len());
        if i == j {
            continue;
        }
        let (a, _) = pairs[i];
        let (c, d) = pairs[j];
        if c == a || d == a {
            continue;
        }
        pairs[i] = (a, c);
        pairs[j] = (a, d);
    }
    if !repaired {
        return Err(FasError::Infeasible(
            "loop repair exceeded its retry budget".into(),
        ));
    }

    let mut counts = std::collections::BTreeMap::new();
    for (a, b) in pairs {
        *counts.entry((a.min(b), a.max(b))).or_insert(0u32) += 1;
    }
    let mut g = OrientedMultigraph::new(n);
    for ((a, b), c) in counts {
        let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        g.add_arc(VertexId(u), VertexId(v), c)?;
    }
    Ok(g)
}
