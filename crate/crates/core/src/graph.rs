//! Oriented multigraphs: directed multigraphs without loops or 2-cycles.
//!
//! Parallel arcs are stored as a multiplicity per ordered pair and every
//! degree query counts multiplicity. Vertex ids are dense indices that stay
//! valid after deletions; a deleted vertex is inactive for the rest of the
//! graph value's life.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{FasError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientedMultigraph {
    active: Vec<bool>,
    out: Vec<BTreeMap<VertexId, u32>>,
    inc: Vec<BTreeMap<VertexId, u32>>,
    out_deg: Vec<u32>,
    in_deg: Vec<u32>,
    n_active: usize,
    m: usize,
}

impl OrientedMultigraph {
    /// Graph with `n` isolated vertices `0..n`.
    pub fn new(n: usize) -> Self {
        OrientedMultigraph {
            active: vec![true; n],
            out: vec![BTreeMap::new(); n],
            inc: vec![BTreeMap::new(); n],
            out_deg: vec![0; n],
            in_deg: vec![0; n],
            n_active: n,
            m: 0,
        }
    }

    /// Builds a graph from an arc list; a repeated pair adds multiplicity.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in arcs {
            g.add_arc(VertexId(u), VertexId(v), 1)?;
        }
        Ok(g)
    }

    /// One past the largest vertex id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.active.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n_active
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n_active == 0
    }

    pub fn is_active(&self, v: VertexId) -> bool {
        self.active.get(v.0).copied().unwrap_or(false)
    }

    /// Active vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.active
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i))
    }

    fn check_active(&self, v: VertexId) -> Result<()> {
        if self.is_active(v) {
            Ok(())
        } else {
            Err(FasError::InactiveVertex(v))
        }
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.out.get(u.0).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// True when an arc joins `u` and `v` in either direction.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// d⁺(v), counting multiplicity. Zero for inactive ids.
    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.out_deg.get(v.0).copied().unwrap_or(0)
    }

    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.in_deg.get(v.0).copied().unwrap_or(0)
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Distinct out-neighbours with multiplicities, ascending.
    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.out
            .get(v.0)
            .into_iter()
            .flat_map(|m| m.iter().map(|(&w, &c)| (w, c)))
    }

    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.inc
            .get(v.0)
            .into_iter()
            .flat_map(|m| m.iter().map(|(&w, &c)| (w, c)))
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_arcs(v).map(|(w, _)| w)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_arcs(v).map(|(w, _)| w)
    }

    /// |N⁺(v)|, which can be smaller than d⁺(v).
    pub fn out_neighbor_count(&self, v: VertexId) -> usize {
        self.out.get(v.0).map_or(0, |m| m.len())
    }

    pub fn in_neighbor_count(&self, v: VertexId) -> usize {
        self.inc.get(v.0).map_or(0, |m| m.len())
    }

    /// Distinct in- and out-neighbours, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = self.out_neighbors(v).chain(self.in_neighbors(v)).collect();
        ns.sort_unstable();
        ns
    }

    /// True when `v` has an arc of multiplicity at least two.
    pub fn has_parallel_arcs(&self, v: VertexId) -> bool {
        self.out_arcs(v).chain(self.in_arcs(v)).any(|(_, c)| c >= 2)
    }

    pub fn max_degree(&self) -> u32 {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Every vertex has degree exactly `k`.
    pub fn is_regular(&self, k: u32) -> bool {
        self.vertices().all(|v| self.degree(v) == k)
    }

    /// All arcs as `(tail, head, multiplicity)`, lexicographic by `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_arcs(u).map(move |(v, c)| (u, v, c)))
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId, mult: u32) -> Result<()> {
        self.check_active(u)?;
        self.check_active(v)?;
        if u == v {
            return Err(FasError::LoopArc(u));
        }
        if self.has_arc(v, u) {
            return Err(FasError::TwoCycle(u, v));
        }
        if mult == 0 {
            return Ok(());
        }
        *self.out[u.0].entry(v).or_insert(0) += mult;
        *self.inc[v.0].entry(u).or_insert(0) += mult;
        self.out_deg[u.0] += mult;
        self.in_deg[v.0] += mult;
        self.m += mult as usize;
        Ok(())
    }

    pub fn remove_arc(&mut self, u: VertexId, v: VertexId, mult: u32) -> Result<()> {
        self.check_active(u)?;
        self.check_active(v)?;
        let have = self.multiplicity(u, v);
        if have < mult || (mult == 0 && have == 0) {
            return Err(FasError::MissingArc {
                tail: u,
                head: v,
                needed: mult.max(1),
            });
        }
        if have == mult {
            self.out[u.0].remove(&v);
            self.inc[v.0].remove(&u);
        } else {
            *self.out[u.0].get_mut(&v).unwrap() -= mult;
            *self.inc[v.0].get_mut(&u).unwrap() -= mult;
        }
        self.out_deg[u.0] -= mult;
        self.in_deg[v.0] -= mult;
        self.m -= mult as usize;
        Ok(())
    }

    /// Deletes `x` with all incident arcs and returns those arcs.
    pub fn remove_vertex(&mut self, x: VertexId) -> Result<Vec<(VertexId, VertexId, u32)>> {
        self.check_active(x)?;
        let mut removed = Vec::new();
        let outs: Vec<_> = self.out_arcs(x).collect();
        let ins: Vec<_> = self.in_arcs(x).collect();
        for (w, c) in outs {
            self.remove_arc(x, w, c)?;
            removed.push((x, w, c));
        }
        for (w, c) in ins {
            self.remove_arc(w, x, c)?;
            removed.push((w, x, c));
        }
        self.active[x.0] = false;
        self.n_active -= 1;
        Ok(removed)
    }

    /// Directed cycles of length three through `x`, each as `[x, a, b]`
    /// with arcs x→a→b→x. A vertex set is reported once.
    pub fn three_cycles_through(&self, x: VertexId) -> Vec<[VertexId; 3]> {
        let mut cycles = Vec::new();
        for a in self.out_neighbors(x) {
            for b in self.out_neighbors(a) {
                if b != x && self.has_arc(b, x) {
                    cycles.push([x, a, b]);
                }
            }
        }
        cycles
    }

    pub fn on_three_cycle(&self, x: VertexId) -> bool {
        self.out_neighbors(x)
            .any(|a| self.out_neighbors(a).any(|b| b != x && self.has_arc(b, x)))
    }

    /// Every 3-cycle of the graph once, as the rotation starting at its
    /// smallest vertex.
    pub fn three_cycles(&self) -> Vec<[VertexId; 3]> {
        self.vertices()
            .flat_map(|x| self.three_cycles_through(x))
            .filter(|c| c[0] < c[1] && c[0] < c[2])
            .collect()
    }

    /// Transitive triangles `(x, y, z)` with arcs xy, xz, yz, ascending by `x`
    /// then `y` then `z`. Each triangle appears once with its transitive labels.
    pub fn transitive_triangles(&self) -> impl Iterator<Item = (VertexId, VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |x| {
            self.out_neighbors(x).flat_map(move |y| {
                self.out_neighbors(y)
                    .filter(move |&z| self.has_arc(x, z))
                    .map(move |z| (x, y, z))
            })
        })
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<u32> = (0..self.id_bound())
            .map(|i| self.in_neighbor_count(VertexId(i)) as u32)
            .collect();
        let mut queue: VecDeque<VertexId> = self.vertices().filter(|v| indeg[v.0] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for w in self.out_neighbors(v) {
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == self.n_active
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn weakly_connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.id_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s.0] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s.0] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for w in self.out_neighbors(v).chain(self.in_neighbors(v)) {
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn reach(&self, s: VertexId, forward: bool) -> usize {
        let mut seen = vec![false; self.id_bound()];
        let mut stack = vec![s];
        seen[s.0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            let next: Vec<VertexId> = if forward {
                self.out_neighbors(v).collect()
            } else {
                self.in_neighbors(v).collect()
            };
            for w in next {
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    pub fn is_strongly_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(s) => self.reach(s, true) == self.n_active && self.reach(s, false) == self.n_active,
        }
    }

    /// Subgraph induced by `vs`, relabelled so that `vs[i]` becomes `i`.
    pub fn induced(&self, vs: &[VertexId]) -> OrientedMultigraph {
        let mut index = vec![usize::MAX; self.id_bound()];
        for (i, v) in vs.iter().enumerate() {
            index[v.0] = i;
        }
        let mut g = OrientedMultigraph::new(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            for (w, c) in self.out_arcs(v) {
                let j = index[w.0];
                if j != usize::MAX {
                    g.add_arc(VertexId(i), VertexId(j), c)
                        .expect("induced subgraph of an oriented multigraph");
                }
            }
        }
        g
    }

    /// Copy with inactive ids squeezed out, preserving the relative order.
    pub fn compacted(&self) -> OrientedMultigraph {
        let vs: Vec<VertexId> = self.vertices().collect();
        self.induced(&vs)
    }
}

/// A linear order of vertices with its inverse position map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ordering {
    seq: Vec<VertexId>,
    pos: Vec<Option<usize>>,
}

impl Ordering {
    pub fn new(seq: Vec<VertexId>) -> Result<Self> {
        let bound = seq.iter().map(|v| v.0 + 1).max().unwrap_or(0);
        let mut pos = vec![None; bound];
        for (i, v) in seq.iter().enumerate() {
            if pos[v.0].replace(i).is_some() {
                return Err(FasError::OrderingMismatch(format!("vertex {v} appears twice")));
            }
        }
        Ok(Ordering { seq, pos })
    }

    pub fn empty() -> Self {
        Ordering::default()
    }

    /// Ascending ids of the active vertices.
    pub fn identity(g: &OrientedMultigraph) -> Self {
        Ordering::new(g.vertices().collect()).expect("distinct ids")
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.pos.get(v.0).copied().flatten()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.position(v).is_some()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Fails unless the ordering is a permutation of `g`'s active vertices.
    pub fn check_covers(&self, g: &OrientedMultigraph) -> Result<()> {
        if self.seq.len() != g.vertex_count() {
            return Err(FasError::OrderingMismatch(format!(
                "ordering has {} vertices, graph has {}",
                self.seq.len(),
                g.vertex_count()
            )));
        }
        if let Some(v) = self.seq.iter().find(|v| !g.is_active(**v)) {
            return Err(FasError::OrderingMismatch(format!(
                "vertex {v} is not in the graph"
            )));
        }
        Ok(())
    }
}

/// A multiset of arcs, keyed by `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArcMultiset {
    arcs: BTreeMap<(VertexId, VertexId), u32>,
    size: usize,
}

pub type FeedbackArcSet = ArcMultiset;

impl ArcMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId, count: u32) {
        if count == 0 {
            return;
        }
        *self.arcs.entry((u, v)).or_insert(0) += count;
        self.size += count as usize;
    }

    pub fn count(&self, u: VertexId, v: VertexId) -> u32 {
        self.arcs.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Total number of arcs, counting multiplicity.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// `(tail, head, count)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.arcs.iter().map(|(&(u, v), &c)| (u, v, c))
    }
}

impl FromIterator<(VertexId, VertexId, u32)> for ArcMultiset {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId, u32)>>(iter: I) -> Self {
        let mut s = ArcMultiset::new();
        for (u, v, c) in iter {
            s.insert(u, v, c);
        }
        s
    }
}

/// Arcs `(u, v)` with `u` placed after `v`, multiplicities included.
pub fn backward_arcs(g: &OrientedMultigraph, ord: &Ordering) -> Result<FeedbackArcSet> {
    ord.check_covers(g)?;
    Ok(g.arcs()
        .filter(|&(u, v, _)| ord.position(u) > ord.position(v))
        .collect())
}

/// Size of [`backward_arcs`] without materialising the set.
pub fn backward_count(g: &OrientedMultigraph, ord: &Ordering) -> Result<usize> {
    ord.check_covers(g)?;
    Ok(g.arcs()
        .filter(|&(u, v, _)| ord.position(u) > ord.position(v))
        .map(|(_, _, c)| c as usize)
        .sum())
}

/// Whether `g - fas` is acyclic. Errors if `fas` is not contained in `g`.
pub fn verify_fas(g: &OrientedMultigraph, fas: &FeedbackArcSet) -> Result<bool> {
    let mut h = g.clone();
    for (u, v, c) in fas.iter() {
        h.remove_arc(u, v, c)?;
    }
    Ok(h.is_acyclic())
}
