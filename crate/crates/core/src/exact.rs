//! Exact minimum feedback arc sets by dynamic programming over vertex subsets,
//! and lower bounds certified by families of arc-sharing cycles.
//!
//! `best[S]` is the fewest backward arcs of any ordering of `S`. Placing
//! `v` last costs the arcs from `v` into `S \ {v}`, so
//! `best[S] = min_v best[S \ {v}] + arcs(v → S \ {v})`. Each weakly
//! connected component is solved on its own; the table has `2^size` cells.

use std::collections::HashMap;

use crate::error::{FasError, Result};
use crate::graph::{Ordering, OrientedMultigraph, VertexId};

pub const DEFAULT_CAP: usize = 24;

/// Masks are 64 bits wide; anything near this is far beyond memory anyway.
const HARD_LIMIT: usize = 40;

trait Cell: Copy {
    const MAX: Self;
    fn get(self) -> usize;
    fn put(v: usize) -> Self;
}

macro_rules! cell {
    ($($t:ty),*) => {$(
        impl Cell for $t {
            const MAX: Self = <$t>::MAX;
            #[inline]
            fn get(self) -> usize {
                self as usize
            }
            #[inline]
            fn put(v: usize) -> Self {
                v as $t
            }
        }
    )*};
}

cell!(u8, u16, u32);

/// Out-adjacency split by multiplicity bit: bit `j` of `mult(v, w)` sets
/// bit `w` in `layers[v][j]`.
struct Layers {
    layers: Vec<Vec<u64>>,
}

impl Layers {
    fn new(g: &OrientedMultigraph) -> Self {
        let n = g.id_bound();
        let mut layers = vec![Vec::new(); n];
        for (u, v, c) in g.arcs() {
            let row = &mut layers[u.0];
            let width = (32 - c.leading_zeros()) as usize;
            if row.len() < width {
                row.resize(width, 0u64);
            }
            for (j, mask) in row.iter_mut().enumerate() {
                if c >> j & 1 == 1 {
                    *mask |= 1 << v.0;
                }
            }
        }
        Layers { layers }
    }

    #[inline]
    fn cost(&self, v: usize, set: u64) -> usize {
        self.layers[v]
            .iter()
            .enumerate()
            .map(|(j, &mask)| ((mask & set).count_ones() as usize) << j)
            .sum()
    }
}

fn table<T: Cell>(layers: &Layers, n: usize) -> Vec<T> {
    let size = 1usize << n;
    let mut best = vec![T::MAX; size];
    best[0] = T::put(0);
    for s in 1..size {
        let mut bits = s;
        let mut low = usize::MAX;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s ^ (1 << v);
            let c = best[rest].get() + layers.cost(v, rest as u64);
            low = low.min(c);
        }
        best[s] = T::put(low);
    }
    best
}

fn backtrack<T: Cell>(best: &[T], layers: &Layers, n: usize) -> (usize, Vec<usize>) {
    let full = (1usize << n) - 1;
    let mut s = full;
    let mut rev = Vec::with_capacity(n);
    while s != 0 {
        let mut bits = s;
        loop {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s ^ (1 << v);
            if best[rest].get() + layers.cost(v, rest as u64) == best[s].get() {
                rev.push(v);
                s = rest;
                break;
            }
            assert!(bits != 0, "subset table is inconsistent");
        }
    }
    rev.reverse();
    (best[full].get(), rev)
}

fn solve<T: Cell>(layers: &Layers, n: usize) -> (usize, Vec<usize>) {
    let best = table::<T>(layers, n);
    backtrack(&best, layers, n)
}

/// Optimum of a compact, weakly connected graph.
fn solve_component(g: &OrientedMultigraph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let layers = Layers::new(g);
    let m = g.arc_count();
    if m <= u8::MAX as usize {
        solve::<u8>(&layers, n)
    } else if m <= u16::MAX as usize {
        solve::<u16>(&layers, n)
    } else {
        solve::<u32>(&layers, n)
    }
}

/// Minimum feedback arc set size with an optimal ordering. Every weakly
/// connected component must have at most `cap` vertices.
pub fn exact_fas(g: &OrientedMultigraph, cap: usize) -> Result<(usize, Ordering)> {
    let comps = g.weakly_connected_components();
    if let Some(c) = comps.iter().find(|c| c.len() > cap.min(HARD_LIMIT)) {
        return Err(FasError::TooLarge {
            size: c.len(),
            cap: cap.min(HARD_LIMIT),
        });
    }
    let mut total = 0;
    let mut seq = Vec::with_capacity(g.vertex_count());
    for comp in comps {
        let (size, order) = solve_component(&g.induced(&comp));
        total += size;
        seq.extend(order.into_iter().map(|i| comp[i]));
    }
    Ok((total, Ordering::new(seq)?))
}

/// Lower bound `⌈|family| / r⌉` where `r` is the largest number of family
/// cycles sharing one arc. Each cycle lists its vertices in cyclic order.
pub fn cycle_family_bound(g: &OrientedMultigraph, family: &[Vec<VertexId>]) -> Result<usize> {
    let mut uses: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for cycle in family {
        let describe = || {
            let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            vs.join(" ")
        };
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if cycle.len() < 2 || sorted.len() != cycle.len() {
            return Err(FasError::NotACycle(describe()));
        }
        for (i, &u) in cycle.iter().enumerate() {
            let v = cycle[(i + 1) % cycle.len()];
            if !g.has_arc(u, v) {
                return Err(FasError::NotACycle(format!(
                    "{} (missing arc {u}->{v})",
                    describe()
                )));
            }
            *uses.entry((u, v)).or_insert(0) += 1;
        }
    }
    let r = uses.values().copied().max().unwrap_or(0);
    Ok(if r == 0 { 0 } else { family.len().div_ceil(r) })
}
