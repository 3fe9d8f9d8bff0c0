//! Feedback arc sets of size at most `⌊m/3⌋` for maximum degree at most 5.
//!
//! The solver applies reductions until none is left. An irreducible graph
//! with a vertex of degree 5 and out-degree 2 gets the composite step: that
//! vertex is deleted at cost 2 and a chain of N2/N3 reductions ends in a good
//! reduction, so the block pays for itself like a nice reduction. An
//! irreducible graph without such a vertex is degree-4 and each component is
//! ordered exactly, or heuristically above the oracle cap when
//! [`SolveOptions::base_fallback`] is set. The final ordering comes from lifting the empty ordering
//! back through the trace.

use crate::error::{FasError, Result};
use crate::exact::DEFAULT_CAP;
use crate::graph::{backward_arcs, FeedbackArcSet, Ordering, OrientedMultigraph, VertexId};
use crate::reduce::{
    apply, apply_in_place, base_case_from_order, base_case_record, detect, good_reduction_at, reduction_at,
    ReductionKind::{self, *},
    ReductionRecord, ReductionTrace,
};

/// Vertex classes of an irreducible graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreePartition {
    /// Degree 5, out-degree 3.
    pub x5_plus: Vec<VertexId>,
    /// Degree 4, out-degree 2.
    pub x4: Vec<VertexId>,
    /// Degree 5, out-degree 2.
    pub x5_minus: Vec<VertexId>,
}

fn invariant(msg: impl Into<String>) -> FasError {
    FasError::InternalInvariant(msg.into())
}

/// Splits an irreducible graph into its three degree classes and checks
/// that the two degree-5 classes are independent, equally large and that no
/// arc leads from the out-degree-2 class to the out-degree-3 class.
pub fn classify_partition(g: &OrientedMultigraph) -> Result<DegreePartition> {
    if detect(g).is_some() {
        return Err(FasError::NotIrreducible);
    }
    let mut p = DegreePartition::default();
    let mut class = vec![0u8; g.id_bound()];
    for v in g.vertices() {
        match (g.degree(v), g.out_degree(v)) {
            (5, 3) => {
                p.x5_plus.push(v);
                class[v.0] = 1;
            }
            (4, 2) => p.x4.push(v),
            (5, 2) => {
                p.x5_minus.push(v);
                class[v.0] = 2;
            }
            (d, o) => return Err(invariant(format!("irreducible vertex {v} has d = {d}, d+ = {o}"))),
        }
    }
    for (u, v, _) in g.arcs() {
        match (class[u.0], class[v.0]) {
            (1, 1) | (2, 2) => return Err(invariant(format!("arc {u}->{v} inside a degree-5 class"))),
            (2, 1) => {
                return Err(invariant(format!(
                    "arc {u}->{v} from out-degree 2 to out-degree 3"
                )))
            }
            _ => {}
        }
    }
    if p.x5_plus.len() != p.x5_minus.len() {
        return Err(invariant(format!(
            "|X5+| = {} but |X5-| = {}",
            p.x5_plus.len(),
            p.x5_minus.len()
        )));
    }
    Ok(p)
}

/// Nice reductions followed by one good reduction, applicable in sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimA {
    pub nice: Vec<ReductionRecord>,
    pub good: ReductionRecord,
}

impl ClaimA {
    pub fn into_records(self) -> Vec<ReductionRecord> {
        let mut out = self.nice;
        out.push(self.good);
        out
    }
}

fn require_at(g: &OrientedMultigraph, kind: ReductionKind, x: VertexId) -> Result<ReductionRecord> {
    reduction_at(g, kind, &[x]).ok_or_else(|| invariant(format!("{kind} does not apply at {x}")))
}

fn degree3_good(g: &OrientedMultigraph, x: VertexId) -> Option<ReductionRecord> {
    reduction_at(g, G3A, &[x]).or_else(|| reduction_at(g, G3B, &[x]))
}

/// From a subgraph `sub` of the irreducible graph `g` and a vertex `q` of
/// degree 3 in `sub`, finds N2/N3 reductions after which a good reduction
/// applies.
pub fn claim_a_sequence(g: &OrientedMultigraph, sub: &OrientedMultigraph, q: VertexId) -> Result<ClaimA> {
    let mut nice = Vec::new();
    let mut cur = sub.clone();
    let mut q = q;
    loop {
        if !cur.is_active(q) || cur.degree(q) != 3 {
            return Err(invariant(format!("vertex {q} does not have degree 3")));
        }
        if let Some(good) = degree3_good(&cur, q) {
            return Ok(ClaimA { nice, good });
        }
        let n3q = require_at(&cur, N3, q)?;
        let nbrs = cur.neighbors(q);
        let v = *nbrs
            .iter()
            .find(|&&w| g.is_active(w) && g.degree(w) == 4)
            .ok_or_else(|| invariant(format!("no neighbour of {q} has degree 4")))?;
        let after_q = apply(&cur, &n3q)?;
        match after_q.degree(v) {
            3 => {
                nice.push(n3q);
                cur = after_q;
                q = v;
            }
            // v hangs off q alone
            0 => {
                let good = require_at(&cur, G1, v)?;
                return Ok(ClaimA { nice, good });
            }
            1 | 2 => {
                if let Some(good) = good_reduction_at(&after_q, v) {
                    nice.push(n3q);
                    return Ok(ClaimA { nice, good });
                }
                if let Some(good) = degree3_good(&cur, v) {
                    return Ok(ClaimA { nice, good });
                }
                let cycle = *after_q
                    .three_cycles_through(v)
                    .first()
                    .ok_or_else(|| invariant(format!("{v} is not on a 3-cycle")))?;
                let outside = cycle.iter().copied().filter(|w| !nbrs.contains(w)).min();
                if let Some(u) = outside {
                    // Removing v takes one arc from u, removing q and the
                    // cycle takes two; one of the two leaves u with odd degree.
                    if let Some(n3v) = reduction_at(&cur, N3, &[v]) {
                        let d1 = apply(&cur, &n3v)?;
                        match d1.degree(u) {
                            1 => {
                                nice.push(n3v);
                                let good = require_at(&d1, G1, u)?;
                                return Ok(ClaimA { nice, good });
                            }
                            3 => {
                                nice.push(n3v);
                                cur = d1;
                                q = u;
                                continue;
                            }
                            _ => {}
                        }
                    }
                    let n2v = require_at(&after_q, N2, v)?;
                    let d2 = apply(&after_q, &n2v)?;
                    match d2.degree(u) {
                        1 => {
                            nice.extend([n3q, n2v]);
                            let good = require_at(&d2, G1, u)?;
                            return Ok(ClaimA { nice, good });
                        }
                        3 => {
                            nice.extend([n3q, n2v]);
                            cur = d2;
                            q = u;
                        }
                        d => return Err(invariant(format!("{u} has degree {d} after both branches"))),
                    }
                } else {
                    let b = clique_apex(&cur, q, &cycle)?;
                    if after_q.degree(b) == 3 {
                        nice.push(n3q);
                        cur = after_q;
                        q = b;
                    } else {
                        let n3b = require_at(&cur, N3, b)?;
                        let without_b = apply(&cur, &n3b)?;
                        let good = require_at(&without_b, G2B, q)?;
                        nice.push(n3b);
                        return Ok(ClaimA { nice, good });
                    }
                }
            }
            d => {
                return Err(invariant(format!(
                    "neighbour {v} has degree {d} after deleting {q}"
                )))
            }
        }
    }
}

/// `q` together with the 3-cycle on its three neighbours forms a 4-clique.
/// Labels the cycle `a→b→c→a` with `q→a`, `q→b`, `c→q` (or the mirror
/// image when `q` has out-degree 1) and returns `b`.
fn clique_apex(g: &OrientedMultigraph, q: VertexId, cycle: &[VertexId; 3]) -> Result<VertexId> {
    let out_side = g.out_degree(q) == 2;
    let toward_q = |w: VertexId| {
        if out_side {
            g.has_arc(w, q)
        } else {
            g.has_arc(q, w)
        }
    };
    let c = *cycle
        .iter()
        .find(|&&w| toward_q(w))
        .ok_or_else(|| invariant(format!("clique at {q} has no apex")))?;
    let rest: Vec<VertexId> = cycle.iter().copied().filter(|&w| w != c).collect();
    // a follows c on the cycle (c→a), or precedes it in the mirror image.
    let a_first = if out_side {
        g.has_arc(c, rest[0])
    } else {
        g.has_arc(rest[0], c)
    };
    Ok(if a_first { rest[1] } else { rest[0] })
}

/// Deletes `x` (degree 5, out-degree 2) and continues with a good reduction
/// at a parallel out-neighbour or a Claim A sequence from a degree-4
/// out-neighbour. The whole block removes at least `3·Σk` arcs.
pub fn composite_step(g: &OrientedMultigraph, x: VertexId) -> Result<Vec<ReductionRecord>> {
    let del = require_at(g, DelX5, x)?;
    let gx = apply(g, &del)?;
    let mut records = vec![del];
    if let Some((y, _)) = g.out_arcs(x).find(|&(_, c)| c >= 2) {
        records.push(require_at(&gx, G2A, y)?);
    } else {
        let y = g
            .out_neighbors(x)
            .find(|&y| g.degree(y) == 4)
            .ok_or_else(|| invariant(format!("{x} has no out-neighbour of degree 4")))?;
        records.extend(claim_a_sequence(g, &gx, y)?.into_records());
    }
    let net: isize = records.iter().map(|r| r.net_removed()).sum();
    let k: usize = records.iter().map(|r| r.k).sum();
    if net < 3 * k as isize {
        return Err(invariant(format!(
            "composite step at {x} removes {net} arcs for budget {k}"
        )));
    }
    Ok(records)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest degree-4 component handed to the exact oracle.
    pub oracle_cap: usize,
    /// Order degree-4 components above the cap heuristically, accepting the
    /// result only when it has at most `⌊m_c/3⌋` backward arcs.
    pub base_fallback: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            oracle_cap: DEFAULT_CAP,
            base_fallback: false,
        }
    }
}

/// Sources to the front, sinks to the back, otherwise the vertex with the
/// largest out-minus-in degree to the front; then single-vertex moves while
/// they help. `g` must be compact.
fn heuristic_order(g: &OrientedMultigraph) -> Vec<VertexId> {
    let mut h = g.clone();
    let mut head = Vec::new();
    let mut tail = Vec::new();
    while !h.is_empty() {
        let peeled = h
            .vertices()
            .find(|&v| h.out_degree(v) == 0 || h.in_degree(v) == 0);
        let v = match peeled {
            Some(v) if h.out_degree(v) == 0 => {
                tail.push(v);
                v
            }
            Some(v) => {
                head.push(v);
                v
            }
            None => {
                let v = h
                    .vertices()
                    .max_by_key(|&v| {
                        (
                            h.out_degree(v) as i64 - h.in_degree(v) as i64,
                            std::cmp::Reverse(v),
                        )
                    })
                    .unwrap();
                head.push(v);
                v
            }
        };
        h.remove_vertex(v).unwrap();
    }
    head.extend(tail.into_iter().rev());

    let mut seq = head;
    let mut improved = true;
    let mut passes = 0;
    while improved && passes < 100 {
        improved = false;
        passes += 1;
        for v in g.vertices() {
            let at = seq.iter().position(|&w| w == v).unwrap();
            seq.remove(at);
            // cost of putting v before seq[p]
            let mut cost = g.in_degree(v) as i64;
            let mut best = (cost, 0);
            let mut current = None;
            for (p, &w) in seq.iter().enumerate() {
                if p == at {
                    current = Some(cost);
                }
                cost += g.multiplicity(v, w) as i64 - g.multiplicity(w, v) as i64;
                if cost < best.0 {
                    best = (cost, p + 1);
                }
            }
            let current = current.unwrap_or(cost);
            if best.0 < current {
                seq.insert(best.1, v);
                improved = true;
            } else {
                seq.insert(at, v);
            }
        }
    }
    seq
}

fn base_case(g: &OrientedMultigraph, comp: &[VertexId], opts: &SolveOptions) -> Result<ReductionRecord> {
    match base_case_record(g, comp, opts.oracle_cap) {
        Err(e @ FasError::BaseCaseTooLarge { .. }) if opts.base_fallback => {
            let order = heuristic_order(&g.induced(comp));
            let r = base_case_from_order(g, comp, order.iter().map(|v| comp[v.0]).collect())?;
            if r.budget_ok() {
                Ok(r)
            } else {
                Err(e)
            }
        }
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub ordering: Ordering,
    pub fas: FeedbackArcSet,
    pub trace: ReductionTrace,
}

pub fn solve_bounded5(g: &OrientedMultigraph) -> Result<Solution> {
    solve_bounded5_with(g, &SolveOptions::default())
}

pub fn solve_bounded5_with(g: &OrientedMultigraph, opts: &SolveOptions) -> Result<Solution> {
    let delta = g.max_degree();
    if delta > 5 {
        return Err(FasError::DegreeTooHigh(delta));
    }
    let mut cur = g.clone();
    let mut trace = ReductionTrace::default();
    while !cur.is_empty() {
        if let Some(r) = detect(&cur) {
            apply_in_place(&mut cur, &r)?;
            trace.records.push(r);
            continue;
        }
        let part = classify_partition(&cur)?;
        let block = match part.x5_minus.first() {
            Some(&x) => composite_step(&cur, x)?,
            None => cur
                .weakly_connected_components()
                .iter()
                .map(|comp| base_case(&cur, comp, opts))
                .collect::<Result<_>>()?,
        };
        for r in block {
            apply_in_place(&mut cur, &r)?;
            trace.records.push(r);
        }
    }
    let ordering = trace.lift_all()?;
    let fas = backward_arcs(g, &ordering)?;
    if fas.size() > g.arc_count() / 3 {
        return Err(invariant(format!(
            "{} backward arcs exceed m/3 for m = {}",
            fas.size(),
            g.arc_count()
        )));
    }
    Ok(Solution { ordering, fas, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_d7, gen_triangles};
    use crate::graph::verify_fas;

    fn graph(n: usize, arcs: &[(usize, usize)]) -> OrientedMultigraph {
        OrientedMultigraph::from_arcs(n, arcs).unwrap()
    }

    fn circulant(n: usize, steps: &[usize]) -> OrientedMultigraph {
        let arcs: Vec<_> = (0..n)
            .flat_map(|i| steps.iter().map(move |s| (i, (i + s) % n)))
            .collect();
        graph(n, &arcs)
    }

    #[test]
    fn empty_graph() {
        let s = solve_bounded5(&OrientedMultigraph::new(0)).unwrap();
        assert!(s.ordering.is_empty());
        assert_eq!(s.fas.size(), 0);
    }

    #[test]
    fn triangles_are_tight() {
        let s = solve_bounded5(&gen_triangles(5)).unwrap();
        assert_eq!(s.fas.size(), 5);
    }

    #[test]
    fn d7_hits_five() {
        let g = gen_d7();
        let s = solve_bounded5(&g).unwrap();
        assert_eq!(s.fas.size(), 5);
        assert!(verify_fas(&g, &s.fas).unwrap());
    }

    #[test]
    fn degree_four_partition() {
        let g = circulant(8, &[1, 3]);
        let p = classify_partition(&g).unwrap();
        assert_eq!(p.x4.len(), 8);
        assert!(p.x5_plus.is_empty() && p.x5_minus.is_empty());
        assert_eq!(
            classify_partition(&gen_triangles(1)),
            Err(FasError::NotIrreducible)
        );
    }

    #[test]
    fn parallel_pair_at_degree_three() {
        // q = 0 with 1 => 0 and 0 -> 2
        let g = graph(3, &[(1, 0), (1, 0), (0, 2)]);
        let c = claim_a_sequence(&g, &g, VertexId(0)).unwrap();
        assert!(c.nice.is_empty());
        assert_eq!(c.good.kind, G3B);
    }

    #[test]
    fn degree_six_rejected() {
        let g = circulant(13, &[1, 2, 3]);
        assert_eq!(solve_bounded5(&g), Err(FasError::DegreeTooHigh(6)));
    }
}
