//! Closed-form upper bounds on the minimum feedback arc set and the table of
//! best known constants `c′_{≤k}` (per arc) and `c″_{≤k}` (per vertex) for
//! maximum degree `k`.

use num_rational::Ratio;

/// `√6 / 40`.
fn berger_coefficient() -> f64 {
    6f64.sqrt() / 40.0
}

/// `m/2 − (√6/40) Σ √d`, with `m = Σd / 2`.
pub fn berger_bound(degrees: &[u32]) -> f64 {
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    let roots: f64 = degrees.iter().map(|&d| (d as f64).sqrt()).sum();
    sum as f64 / 4.0 - berger_coefficient() * roots
}

/// `(1/2 − 1/(16√Δ))·m`; zero when there are no arcs.
pub fn alon_bound(m: usize, delta: u32) -> f64 {
    if m == 0 || delta == 0 {
        return 0.0;
    }
    (0.5 - 1.0 / (16.0 * (delta as f64).sqrt())) * m as f64
}

/// `(k/4 − (√6/40)√k)·n`.
pub fn eq2_bound(n: usize, k: u32) -> f64 {
    let k = k as f64;
    (k / 4.0 - berger_coefficient() * k.sqrt()) * n as f64
}

/// The smaller of [`eq2_bound`] and [`alon_bound`] with `Δ = k`.
pub fn combined_bound(n: usize, m: usize, k: u32) -> f64 {
    eq2_bound(n, k).min(alon_bound(m, k))
}

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    Exact(Rational),
    /// Known to lie in the closed interval.
    Range(Rational, Rational),
    AtLeast(Rational),
}

impl Coefficient {
    pub fn lower(&self) -> Rational {
        match *self {
            Coefficient::Exact(v) | Coefficient::Range(v, _) | Coefficient::AtLeast(v) => v,
        }
    }

    pub fn upper(&self) -> Option<Rational> {
        match *self {
            Coefficient::Exact(v) | Coefficient::Range(_, v) => Some(v),
            Coefficient::AtLeast(_) => None,
        }
    }

    pub fn exact(&self) -> Option<Rational> {
        match *self {
            Coefficient::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl std::fmt::Display for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::Exact(v) => write!(f, "{v}"),
            Coefficient::Range(lo, hi) => write!(f, "[{lo}, {hi}]"),
            Coefficient::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientRow {
    pub k: u32,
    /// `fas ≤ c′·m` over all oriented multigraphs with `Δ ≤ k`.
    pub per_arc: Coefficient,
    /// `fas ≤ c″·n` over the same class.
    pub per_vertex: Coefficient,
}

/// Rows for `k = 2..=6`.
pub fn coefficient_table() -> Vec<CoefficientRow> {
    use Coefficient::*;
    let r = |a, b| Rational::new(a, b);
    let third = Exact(r(1, 3));
    vec![
        CoefficientRow {
            k: 2,
            per_arc: third,
            per_vertex: third,
        },
        CoefficientRow {
            k: 3,
            per_arc: third,
            per_vertex: third,
        },
        CoefficientRow {
            k: 4,
            per_arc: third,
            per_vertex: Exact(r(2, 3)),
        },
        CoefficientRow {
            k: 5,
            per_arc: third,
            per_vertex: Range(r(5, 7), r(24, 29)),
        },
        CoefficientRow {
            k: 6,
            per_arc: AtLeast(r(25, 72)),
            per_vertex: AtLeast(r(75, 72)),
        },
    ]
}

pub fn coefficient_row(k: u32) -> Option<CoefficientRow> {
    coefficient_table().into_iter().find(|row| row.k == k)
}

/// `⌊m/3⌋`, the guarantee for maximum degree at most 5.
pub fn arc_guarantee(m: usize) -> usize {
    m / 3
}

/// `⌊24n/29⌋`, the guarantee for degree-5 graphs.
pub fn vertex_guarantee(n: usize) -> usize {
    24 * n / 29
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn berger_edge_cases() {
        assert_eq!(berger_bound(&[0, 0, 0]), 0.0);
        assert!(close(berger_bound(&[1, 1]), 0.5 - 6f64.sqrt() / 20.0));
    }

    #[test]
    fn alon_and_eq2() {
        assert!(close(alon_bound(16, 5), 8.0 - 1.0 / 5f64.sqrt()));
        assert_eq!(alon_bound(0, 0), 0.0);
        assert!(close(
            eq2_bound(7, 5),
            (1.25 - 6f64.sqrt() / 40.0 * 5f64.sqrt()) * 7.0
        ));
    }

    #[test]
    fn table_rows() {
        let t = coefficient_table();
        assert_eq!(t.len(), 5);
        assert_eq!(
            coefficient_row(4).unwrap().per_vertex,
            Coefficient::Exact(Rational::new(2, 3))
        );
        assert_eq!(coefficient_row(6).unwrap().per_arc.upper(), None);
        assert_eq!(coefficient_row(7), None);
    }

    #[test]
    fn guarantees() {
        assert_eq!(arc_guarantee(16), 5);
        assert_eq!(vertex_guarantee(58), 48);
    }
}
