//! Interpolation node grids.

use crate::{Error, Result};

/// Node distribution of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// Uniform spacing `start + j·step`.
    Equispaced,
    /// Chebyshev points of the second kind, `cos(jπ/N)` mapped affinely onto
    /// the same span `[start, start + (count−1)·step]` and stored in
    /// increasing order.
    Chebyshev2,
}

/// Ordered, strictly increasing interpolation nodes.
///
/// Equispaced nodes are always produced from the closed formula
/// `start + j·step` (never by repeated addition), so a query time that was
/// generated from the same formula matches a node bitwise. Node coincidence
/// checks rely on that exactness instead of epsilon comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeGrid {
    start: f64,
    step: f64,
    count: usize,
    kind: NodeKind,
    /// Node positions relative to `start`; `node(j) = start + offsets[j]`.
    offsets: Vec<f64>,
}

impl NodeGrid {
    /// Uniform grid with `count` nodes spaced `step` seconds apart.
    pub fn equispaced(start: f64, step: f64, count: usize) -> Result<Self> {
        Self::validate(step, count)?;
        let offsets = (0..count).map(|j| j as f64 * step).collect();
        Ok(Self {
            start,
            step,
            count,
            kind: NodeKind::Equispaced,
            offsets,
        })
    }

    /// Chebyshev nodes of the second kind over the span
    /// `[start, start + (count−1)·step]`.
    pub fn chebyshev2(start: f64, step: f64, count: usize) -> Result<Self> {
        Self::validate(step, count)?;
        let n = (count - 1) as f64;
        let half = n * step / 2.0;
        // cos(jπ/N) decreases with j; flip the sign so nodes increase.
        let offsets = (0..count)
            .map(|j| half * (1.0 - (j as f64 * std::f64::consts::PI / n).cos()))
            .collect();
        Ok(Self {
            start,
            step,
            count,
            kind: NodeKind::Chebyshev2,
            offsets,
        })
    }

    fn validate(step: f64, count: usize) -> Result<()> {
        if count < 2 {
            return Err(Error::DegreeRange {
                given: count,
                reason: "a grid needs at least two nodes",
            });
        }
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "grid step must be positive and finite, got {step}"
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    /// Polynomial degree supported by the grid, `count − 1`.
    #[inline]
    pub fn degree(&self) -> usize {
        self.count - 1
    }

    #[inline]
    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    #[inline]
    pub fn node(&self, j: usize) -> f64 {
        self.start + self.offsets[j]
    }

    /// Node positions relative to [`start`](Self::start).
    #[inline]
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    #[inline]
    pub fn first(&self) -> f64 {
        self.node(0)
    }

    #[inline]
    pub fn last(&self) -> f64 {
        self.node(self.count - 1)
    }

    /// Index of the node that `t` matches bitwise, if any.
    pub fn index_of_exact(&self, t: f64) -> Option<usize> {
        match self.kind {
            NodeKind::Equispaced => {
                let j = ((t - self.start) / self.step).round();
                if j < 0.0 || j >= self.count as f64 {
                    return None;
                }
                let j = j as usize;
                (self.node(j) == t).then_some(j)
            }
            NodeKind::Chebyshev2 => self
                .offsets
                .binary_search_by(|off| (self.start + off).partial_cmp(&t).unwrap())
                .ok(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equispaced_nodes_match_closed_formula() {
        let g = NodeGrid::equispaced(0.3, 0.01, 11).unwrap();
        for j in 0..11 {
            assert_eq!(g.node(j), 0.3 + j as f64 * 0.01);
        }
        assert_eq!(g.first(), 0.3);
        assert_eq!(g.last(), 0.3 + 10.0 * 0.01);
    }

    #[test]
    fn nodes_strictly_increase() {
        for g in [
            NodeGrid::equispaced(-1.0, 0.125, 9).unwrap(),
            NodeGrid::chebyshev2(-1.0, 0.125, 9).unwrap(),
        ] {
            for j in 1..g.count() {
                assert!(g.node(j) > g.node(j - 1));
            }
        }
    }

    #[test]
    fn chebyshev_span_matches_equispaced_span() {
        let g = NodeGrid::chebyshev2(2.0, 0.5, 21).unwrap();
        assert_eq!(g.first(), 2.0);
        assert!((g.last() - 12.0).abs() < 1e-12);
        // interior nodes cluster towards the boundary
        let first_gap = g.node(1) - g.node(0);
        let mid_gap = g.node(11) - g.node(10);
        assert!(first_gap < mid_gap);
    }

    #[test]
    fn exact_index_lookup_is_bitwise() {
        let g = NodeGrid::equispaced(0.1, 0.001, 100).unwrap();
        for j in [0usize, 1, 42, 99] {
            assert_eq!(g.index_of_exact(g.node(j)), Some(j));
        }
        assert_eq!(g.index_of_exact(g.node(5) + 1e-12), None);
        assert_eq!(g.index_of_exact(g.start - 1.0), None);

        let c = NodeGrid::chebyshev2(0.0, 0.01, 17).unwrap();
        for j in 0..17 {
            assert_eq!(c.index_of_exact(c.node(j)), Some(j));
        }
        assert_eq!(c.index_of_exact(0.5 * (c.node(3) + c.node(4))), None);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(NodeGrid::equispaced(0.0, 0.1, 1).is_err());
        assert!(NodeGrid::equispaced(0.0, 0.0, 5).is_err());
        assert!(NodeGrid::equispaced(0.0, -0.1, 5).is_err());
    }
}
