//! Greedy L(2,1) labelling of interval instances.
//!
//! The clique containing the first interval is seeded with the even labels
//! `0, 2, …, 2(p-1)` in degree order; every remaining vertex is then given
//! the smallest label outside its forbidden set, which collects the labels
//! `f ± 1` of already-labelled neighbours and the exact labels of
//! already-labelled vertices at distance two.

use std::cmp::Reverse;

use crate::error::Error;
use crate::graph::Graph;

/// A closed interval on the unrolled line, tagged with the arc id it came
/// from (or any caller-chosen id for standalone instances).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub id: usize,
    pub left: u32,
    pub right: u32,
}

impl Interval {
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// Intervals sorted by left endpoint together with their overlap graph.
/// Local vertex `i` is the interval with the `i`-th smallest left end.
#[derive(Debug, Clone)]
pub struct IntervalInstance {
    intervals: Vec<Interval>,
    graph: Graph,
    host_degrees: Option<Vec<usize>>,
}

impl IntervalInstance {
    /// Sorts by left endpoint and builds the overlap graph. Endpoints must
    /// be pairwise distinct and every interval must satisfy `left < right`.
    pub fn new(mut intervals: Vec<Interval>) -> Result<IntervalInstance, Error> {
        let mut ends = Vec::with_capacity(2 * intervals.len());
        for iv in &intervals {
            if iv.left >= iv.right {
                return Err(Error::BadInterval {
                    id: iv.id,
                    left: iv.left,
                    right: iv.right,
                });
            }
            ends.push(iv.left);
            ends.push(iv.right);
        }
        ends.sort_unstable();
        for pair in ends.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateIntervalEndpoint { value: pair[0] });
            }
        }
        intervals.sort_by_key(|iv| iv.left);
        let n = intervals.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if intervals[i].overlaps(&intervals[j]) {
                    edges.push((i, j));
                }
            }
        }
        Ok(IntervalInstance {
            intervals,
            graph: Graph::from_edges(n, &edges),
            host_degrees: None,
        })
    }

    /// Degrees of the corresponding vertices in a host graph, used instead
    /// of the overlap-graph degrees when ordering the seed clique. The cut
    /// pipeline passes the degrees in the full circular-arc graph.
    pub fn set_host_degrees(&mut self, degrees: Vec<usize>) {
        assert_eq!(degrees.len(), self.intervals.len());
        self.host_degrees = Some(degrees);
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The maximal clique containing the first interval: every interval
    /// that covers the smallest right endpoint. With intervals sorted by
    /// left end this is always a prefix of the vertex order.
    pub fn first_maximal_clique(&self) -> Vec<usize> {
        let Some(min_right) = self.intervals.iter().map(|iv| iv.right).min() else {
            return Vec::new();
        };
        (0..self.len())
            .filter(|&i| self.intervals[i].left <= min_right)
            .collect()
    }

    /// Seed clique order: degree descending, smaller vertex index first on
    /// ties. Uses the host degrees when set.
    pub fn order_clique(&self, clique: &[usize]) -> Vec<usize> {
        let deg = |v: usize| match &self.host_degrees {
            Some(d) => d[v],
            None => self.graph.degree(v),
        };
        let mut ordered = clique.to_vec();
        ordered.sort_by_key(|&v| (Reverse(deg(v)), v));
        ordered
    }

    /// Runs the full labelling. `extra_dist2[i]` lists additional vertices
    /// to treat as distance-two constraints for vertex `i`; entries with an
    /// index at or above `i` are ignored, so callers may pass symmetric
    /// sets. Pass empty lists for the plain interval behaviour.
    pub fn label(&self, extra_dist2: &[Vec<usize>]) -> IntervalLabelling {
        let n = self.len();
        assert_eq!(extra_dist2.len(), n);
        let mut labels: Vec<Option<u32>> = vec![None; n];
        let clique = self.first_maximal_clique();
        for (pos, &v) in self.order_clique(&clique).iter().enumerate() {
            labels[v] = Some(2 * pos as u32);
        }
        let mut forbidden = vec![false; 4 * n + 4];
        for i in clique.len()..n {
            forbidden.fill(false);
            for &j in self.graph.neighbors(i) {
                if j < i {
                    let fj = labels[j].expect("smaller index already labelled");
                    if let Some(low) = fj.checked_sub(1) {
                        forbidden[low as usize] = true;
                    }
                    forbidden[fj as usize] = true;
                    forbidden[fj as usize + 1] = true;
                }
            }
            let (_, dist2) = self.graph.nbd_sets(i);
            for j in dist2.into_iter().chain(extra_dist2[i].iter().copied()) {
                if j < i {
                    let fj = labels[j].expect("smaller index already labelled");
                    forbidden[fj as usize] = true;
                }
            }
            let f = forbidden.iter().position(|&used| !used).unwrap() as u32;
            labels[i] = Some(f);
        }
        let labels: Vec<u32> = labels.into_iter().map(|l| l.unwrap()).collect();
        let highest = labels.iter().map(|&l| l as i64).max().unwrap_or(-2);
        IntervalLabelling { labels, highest }
    }
}

/// Labels over the interval vertices plus the highest label used; the
/// highest is -2 for an empty instance so that tail labels start at 0.
#[derive(Debug, Clone)]
pub struct IntervalLabelling {
    pub labels: Vec<u32>,
    pub highest: i64,
}
