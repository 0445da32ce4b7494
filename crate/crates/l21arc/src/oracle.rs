//! Ground truth for the rest of the crate: an independent validity check
//! for L(2,1) labellings and a small exact solver for the optimal span.

use std::fmt;

use crate::error::Error;
use crate::graph::{degeneracy_order, Graph, Labelling};

/// A broken pair: adjacent vertices whose labels are less than two apart,
/// or vertices at distance two sharing a label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub w: usize,
    pub kind: ViolationKind,
    pub labels: (u32, u32),
    /// For distance-two violations: every common neighbour of the pair
    /// lies in the supplied cut set. Left false until classified.
    pub through_c_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Dist1Gap,
    Dist2Equal,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Dist1Gap => write!(f, "dist1-gap"),
            ViolationKind::Dist2Equal => write!(f, "dist2-equal"),
        }
    }
}

/// Checks both labelling conditions and returns every violating pair,
/// ordered by vertex. An empty result means the labelling is valid.
pub fn verify_labelling(g: &Graph, lab: &Labelling) -> Result<Vec<Violation>, Error> {
    if lab.len() != g.n() {
        return Err(Error::LabelCountMismatch {
            got: lab.len(),
            expected: g.n(),
        });
    }
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            if w > u && lab.get(u).abs_diff(lab.get(w)) < 2 {
                out.push(Violation {
                    u,
                    w,
                    kind: ViolationKind::Dist1Gap,
                    labels: (lab.get(u), lab.get(w)),
                    through_c_only: false,
                });
            }
        }
        let (_, dist2) = g.nbd_sets(u);
        for w in dist2 {
            if w > u && lab.get(u) == lab.get(w) {
                out.push(Violation {
                    u,
                    w,
                    kind: ViolationKind::Dist2Equal,
                    labels: (lab.get(u), lab.get(w)),
                    through_c_only: false,
                });
            }
        }
    }
    out.sort_by_key(|v| (v.u, v.w, v.kind == ViolationKind::Dist2Equal));
    Ok(out)
}

/// Marks the distance-two violations whose endpoints lie outside `cut_set`
/// while every common neighbour lies inside it: exactly the pairs whose
/// distance-two relation survives only through removed arcs.
pub fn classify_violations(g: &Graph, cut_set: &[usize], violations: &mut [Violation]) {
    let mut in_c = vec![false; g.n()];
    for &v in cut_set {
        in_c[v] = true;
    }
    for viol in violations.iter_mut() {
        viol.through_c_only = viol.kind == ViolationKind::Dist2Equal
            && !in_c[viol.u]
            && !in_c[viol.w]
            && common_neighbors(g, viol.u, viol.w)
                .into_iter()
                .all(|x| in_c[x]);
    }
}

fn common_neighbors(g: &Graph, u: usize, w: usize) -> Vec<usize> {
    g.neighbors(u)
        .iter()
        .copied()
        .filter(|&x| g.has_edge(x, w))
        .collect()
}

/// Limits for the exact search.
#[derive(Debug, Clone)]
pub struct ExactConfig {
    /// Largest vertex count accepted.
    pub max_n: usize,
    /// Optional cap on the span to try; the search reports the proven
    /// lower bound when the cap is exhausted.
    pub max_span: Option<u32>,
}

impl Default for ExactConfig {
    fn default() -> ExactConfig {
        ExactConfig {
            max_n: 12,
            max_span: None,
        }
    }
}

/// Smallest span of any valid labelling, with a witness.
///
/// Feasibility is probed for increasing spans starting at the trivial
/// lower bound, backtracking over vertices in degeneracy order. The label
/// of the first branching vertex is capped at half the span: reflecting
/// every label through the span midpoint preserves validity, so the lower
/// half always contains a witness when one exists.
pub fn exact_lambda(g: &Graph, cfg: &ExactConfig) -> Result<(u32, Labelling), Error> {
    let n = g.n();
    if n > cfg.max_n {
        return Err(Error::ExactLimitExceeded {
            n,
            limit: cfg.max_n,
        });
    }
    if n == 0 {
        return Ok((0, Labelling::new(Vec::new())));
    }
    let start = if g.edge_count() > 0 {
        g.max_degree() as u32 + 1
    } else {
        0
    };
    // labels 0, 2, …, 2(n-1) are always valid, so the default cap is tight
    let cap = match cfg.max_span {
        Some(max_span) if max_span < start => {
            return Err(Error::SpanBudgetExhausted {
                max_span,
                lower_bound: start,
            })
        }
        Some(max_span) => max_span,
        None => 2 * (n as u32 - 1),
    };
    let mut order = degeneracy_order(g);
    order.reverse();
    let mut pos_of = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        pos_of[v] = pos;
    }
    // constraints against earlier positions in branch order
    let mut cons: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for v in 0..n {
        let (n1, n2) = g.nbd_sets(v);
        for &u in &n1 {
            if pos_of[u] < pos_of[v] {
                cons[pos_of[v]].push((pos_of[u], true));
            }
        }
        for u in n2 {
            if pos_of[u] < pos_of[v] {
                cons[pos_of[v]].push((pos_of[u], false));
            }
        }
    }
    let mut assign = vec![0u32; n];
    for span in start..=cap {
        if search(&cons, span, 0, &mut assign) {
            let mut labels = vec![0u32; n];
            for (pos, &v) in order.iter().enumerate() {
                labels[v] = assign[pos];
            }
            return Ok((span, Labelling::new(labels)));
        }
    }
    Err(Error::SpanBudgetExhausted {
        max_span: cap,
        lower_bound: cap + 1,
    })
}

fn search(cons: &[Vec<(usize, bool)>], span: u32, pos: usize, assign: &mut [u32]) -> bool {
    if pos == cons.len() {
        return true;
    }
    let hi = if pos == 0 { span / 2 } else { span };
    'labels: for label in 0..=hi {
        for &(earlier, adjacent) in &cons[pos] {
            let other = assign[earlier];
            let bad = if adjacent {
                other.abs_diff(label) < 2
            } else {
                other == label
            };
            if bad {
                continue 'labels;
            }
        }
        assign[pos] = label;
        if search(cons, span, pos + 1, assign) {
            return true;
        }
    }
    false
}
