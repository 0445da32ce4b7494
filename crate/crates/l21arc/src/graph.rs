//! Simple undirected graphs: adjacency and degree queries, depth-2
//! neighbourhoods, exact clique number, and vertex labellings.

use std::collections::BTreeSet;

use crate::error::Error;

/// Vertices above this count fall back from the exact clique search to the
/// point-load lower bound.
pub const DEFAULT_CLIQUE_LIMIT: usize = 64;

/// Undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            assert!(u != v, "self loop at vertex {u}");
            assert!(u < n && v < n, "edge ({u}, {v}) outside 0..{n}");
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Largest vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertices at distance exactly 1 and exactly 2 from `v`, found by a
    /// breadth-first sweep truncated at depth 2. Both lists are sorted.
    pub fn nbd_sets(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let n1 = self.adj[v].clone();
        let mut seen = vec![false; self.n()];
        seen[v] = true;
        for &u in &n1 {
            seen[u] = true;
        }
        let mut n2 = BTreeSet::new();
        for &u in &n1 {
            for &w in &self.adj[u] {
                if !seen[w] {
                    n2.insert(w);
                }
            }
        }
        (n1, n2.into_iter().collect())
    }

    /// True iff every pair in `s` is adjacent; vacuously true for at most
    /// one vertex.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        for (k, &u) in s.iter().enumerate() {
            for &w in &s[k + 1..] {
                if !self.has_edge(u, w) {
                    return false;
                }
            }
        }
        true
    }
}

/// Peeling order: repeatedly removes a vertex of minimum remaining degree.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// Exact clique number by branch and bound: vertices are seeded in
/// degeneracy order and candidate sets are pruned with a greedy colouring
/// bound. `lower_bound_hint` must be the size of some clique (the arc
/// pipeline passes the maximum point load); pass 0 when unknown.
pub fn clique_number(g: &Graph, lower_bound_hint: usize, limit: usize) -> Result<usize, Error> {
    let n = g.n();
    if n > limit {
        return Err(Error::CliqueLimitExceeded { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = lower_bound_hint.clamp(1, n);
    let seeds = colour_sort(g, degeneracy_order(g));
    expand(g, 0, seeds, &mut best);
    Ok(best)
}

fn expand(g: &Graph, r: usize, mut p: Vec<(usize, usize)>, best: &mut usize) {
    while let Some((v, colour)) = p.pop() {
        if r + colour <= *best {
            return;
        }
        let child: Vec<usize> = p
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| g.has_edge(u, v))
            .collect();
        if child.is_empty() {
            if r + 1 > *best {
                *best = r + 1;
            }
        } else {
            expand(g, r + 1, colour_sort(g, child), best);
        }
    }
}

// Greedy colour classes in the given order; vertices come back sorted by
// colour ascending, so popping from the end visits high colours first.
fn colour_sort(g: &Graph, vs: Vec<usize>) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &vs {
        match classes
            .iter_mut()
            .find(|cl| cl.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(cl) => cl.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut out = Vec::with_capacity(vs.len());
    for (ci, cl) in classes.iter().enumerate() {
        for &v in cl {
            out.push((v, ci + 1));
        }
    }
    out
}

/// A total assignment of non-negative labels to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelling {
    labels: Vec<u32>,
}

impl Labelling {
    pub fn new(labels: Vec<u32>) -> Labelling {
        Labelling { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.labels
    }

    pub fn max_label(&self) -> Option<u32> {
        self.labels.iter().copied().max()
    }

    /// Difference between the largest and smallest used label.
    pub fn span(&self) -> u32 {
        match (self.labels.iter().max(), self.labels.iter().min()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }
}

/// Parses the labels text format: one `v f_v` line per vertex, `#` comment
/// lines and blank lines skipped. Ids are returned as read.
pub fn parse_labels(text: &str) -> Result<Vec<(usize, u32)>, Error> {
    let mut out = Vec::new();
    for (k, row) in text.lines().enumerate() {
        let t = row.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u64, Error> {
            tok.ok_or(Error::Parse {
                line: k + 1,
                reason: "expected `vertex label`".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: k + 1,
                reason: format!("`{t}` is not a `vertex label` pair"),
            })
        };
        let v = parse(it.next())?;
        let f = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: k + 1,
                reason: "expected exactly two integers".into(),
            });
        }
        out.push((v as usize, f as u32));
    }
    Ok(out)
}
