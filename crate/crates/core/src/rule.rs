//! Node sets for the truncated trapezium rule.

use std::f64::consts::PI;

use crate::error::{FresnelError, Result};

/// Midpoint node `(k - 1/2) h`.
#[inline]
pub(crate) fn node(k: usize, h: f64) -> f64 {
    (k as f64 - 0.5) * h
}

/// Per-node quantities that every evaluation needs: `t²`, `t⁴` and `e^{-t²}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct NodeData {
    pub t2: f64,
    pub t4: f64,
    pub et2: f64,
}

impl NodeData {
    #[inline]
    pub(crate) fn at(t: f64) -> Self {
        let t2 = t * t;
        NodeData {
            t2,
            t4: t2 * t2,
            et2: (-t2).exp(),
        }
    }
}

/// An `N`-point rule with step `h = sqrt(π/(N + 1/2))`, nodes
/// `t_k = (k - 1/2) h` and cutoff `A_N = π/h`, which is also the first
/// discarded node `t_{N+1}`.
///
/// Immutable once built; cheap to share between threads.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    n: usize,
    h: f64,
    cutoff: f64,
    nodes: Vec<f64>,
    data: Vec<NodeData>,
}

impl QuadratureRule {
    pub const MAX_NODES: usize = 1000;

    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX_NODES {
            return Err(FresnelError::InvalidParameter(format!(
                "node count N = {n} outside 1..={}",
                Self::MAX_NODES
            )));
        }
        let h = (PI / (n as f64 + 0.5)).sqrt();
        let nodes: Vec<f64> = (1..=n).map(|k| node(k, h)).collect();
        let data = nodes.iter().map(|&t| NodeData::at(t)).collect();
        Ok(QuadratureRule {
            n,
            h,
            cutoff: PI / h,
            nodes,
            data,
        })
    }

    /// Number of retained nodes `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Step length `h`.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// `A_N = π/h = sqrt((N + 1/2)π)`.
    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    /// Nodes `t_1 < ... < t_N`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub(crate) fn data(&self) -> &[NodeData] {
        &self.data
    }
}

/// Builds the rule for `N` nodes (`1 ≤ N ≤ 1000`).
pub fn make_rule(n: usize) -> Result<QuadratureRule> {
    QuadratureRule::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_counts() {
        assert!(matches!(make_rule(0), Err(FresnelError::InvalidParameter(_))));
        assert!(matches!(make_rule(1001), Err(FresnelError::InvalidParameter(_))));
        assert!(make_rule(1000).is_ok());
    }

    #[test]
    fn single_node_rule() {
        let r = make_rule(1).unwrap();
        assert!((r.h() - 1.447_202).abs() < 1e-6);
        assert!((r.nodes()[0] - 0.723_601).abs() < 1e-6);
        assert!((r.cutoff() - 2.170_804).abs() < 1e-6);
    }

    #[test]
    fn twelve_node_rule() {
        let r = make_rule(12).unwrap();
        assert_eq!(r.h(), (PI / 12.5).sqrt());
        assert!((r.h() - 0.501_325_7).abs() < 1e-7);
        assert!((r.cutoff() - 6.266_570_7).abs() < 1e-7);
        assert!((r.nodes()[0] - 0.250_662_8).abs() < 1e-7);
        assert_eq!(r.nodes()[11], 11.5 * r.h());
        assert!(r.nodes()[11] < r.cutoff());
    }

    #[test]
    fn invariants_hold_for_all_sizes() {
        for n in 1..=QuadratureRule::MAX_NODES {
            let r = make_rule(n).unwrap();
            assert_eq!(r.h(), (PI / (n as f64 + 0.5)).sqrt());
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
            let alt = (n as f64 + 0.5) * r.h();
            let ulp = f64::EPSILON * r.cutoff();
            assert!((alt - r.cutoff()).abs() <= 2.0 * ulp, "N={n}");
            assert!(*r.nodes().last().unwrap() < r.cutoff());
        }
    }
}
