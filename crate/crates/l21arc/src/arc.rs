//! Circular-arc instances on a discretized circle.
//!
//! Positions are the integers `0..m`, ordered clockwise `0 → 1 → … → m-1 → 0`.
//! An arc `[s, f]` covers the clockwise run of positions from its start `s`
//! to its finish `f`, both included; when `s > f` the arc wraps through
//! position 0. All `2n` endpoints of a family are pairwise distinct, so two
//! arcs never touch in a single shared endpoint only.

use crate::error::Error;
use crate::graph::{Graph, Labelling};

/// A closed arc, identified by its 1-based rank in start order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub id: usize,
    pub start: u32,
    pub finish: u32,
}

impl Arc {
    /// True iff the arc covers position `p`.
    pub fn contains(&self, p: u32) -> bool {
        if self.start <= self.finish {
            self.start <= p && p <= self.finish
        } else {
            p >= self.start || p <= self.finish
        }
    }

    /// True iff the arc spans the gap between `p` and `p + 1 (mod m)`,
    /// i.e. a cut line drawn in that gap would intersect the arc.
    pub fn crosses_gap(&self, p: u32, m: u32) -> bool {
        self.contains(p) && self.contains((p + 1) % m)
    }

    /// Clockwise step count from start to finish; the arc covers
    /// `length + 1` positions.
    pub fn length(&self, m: u32) -> u32 {
        (self.finish + m - self.start) % m
    }

    /// True iff the arc passes through the wrap point between `m - 1`
    /// and 0.
    pub fn wraps(&self) -> bool {
        self.start > self.finish
    }
}

/// Whether two arcs share at least one circle position.
///
/// Two arcs intersect exactly when one of them contains the other's
/// starting point, which makes the test O(1). The exhaustive point-set
/// sweep lives in the tests as the reference implementation.
pub fn arcs_intersect(a: &Arc, b: &Arc) -> bool {
    a.contains(b.start) || b.contains(a.start)
}

/// A validated family: arcs sorted by increasing start, ids `1..=n`
/// assigned in that order. The original input order is kept so labellings
/// can be reported against input ids.
#[derive(Debug, Clone)]
pub struct ArcFamily {
    m: u32,
    arcs: Vec<Arc>,
    /// `input_pos[i]` is the 0-based position of `arcs[i]` in the input.
    input_pos: Vec<usize>,
}

impl ArcFamily {
    /// Validates and sorts a raw list of `(start, finish)` pairs.
    ///
    /// Rejects empty input, coordinates outside `[0, m)`, arcs whose ends
    /// coincide, and any endpoint used by two arcs.
    pub fn normalize(raw: &[(u32, u32)], m: u32) -> Result<ArcFamily, Error> {
        if raw.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mut owner: Vec<Option<usize>> = vec![None; m as usize];
        for (k, &(s, f)) in raw.iter().enumerate() {
            for value in [s, f] {
                if value >= m {
                    return Err(Error::CoordinateOutOfRange {
                        arc: k + 1,
                        value,
                        m,
                    });
                }
            }
            if s == f {
                return Err(Error::DegenerateArc {
                    arc: k + 1,
                    value: s,
                });
            }
            for value in [s, f] {
                match owner[value as usize] {
                    Some(first) => {
                        return Err(Error::DuplicateEndpoint {
                            position: value,
                            first: first + 1,
                            second: k + 1,
                        })
                    }
                    None => owner[value as usize] = Some(k),
                }
            }
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&k| raw[k].0);
        let arcs = order
            .iter()
            .enumerate()
            .map(|(rank, &k)| Arc {
                id: rank + 1,
                start: raw[k].0,
                finish: raw[k].1,
            })
            .collect();
        Ok(ArcFamily {
            m,
            arcs,
            input_pos: order,
        })
    }

    /// Parses the instance text format and normalizes the result.
    pub fn from_text(text: &str) -> Result<ArcFamily, Error> {
        let (pairs, m) = parse_instance(text)?;
        ArcFamily::normalize(&pairs, m)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// 0-based input position of each sorted arc.
    pub fn input_positions(&self) -> &[usize] {
        &self.input_pos
    }

    /// Number of arcs covering position `p`.
    pub fn point_load(&self, p: u32) -> usize {
        self.arcs.iter().filter(|a| a.contains(p)).count()
    }

    /// Load of every position, computed in one sweep.
    pub fn load_profile(&self) -> Vec<u32> {
        let m = self.m as usize;
        let mut diff = vec![0i64; m + 1];
        for a in &self.arcs {
            let (s, f) = (a.start as usize, a.finish as usize);
            if s <= f {
                diff[s] += 1;
                diff[f + 1] -= 1;
            } else {
                diff[s] += 1;
                diff[m] -= 1;
                diff[0] += 1;
                diff[f + 1] -= 1;
            }
        }
        let mut load = Vec::with_capacity(m);
        let mut acc = 0i64;
        for d in &diff[..m] {
            acc += d;
            load.push(acc as u32);
        }
        load
    }

    /// Largest point load; arcs through a common point form a clique, so
    /// this is a lower bound on the clique number of the derived graph.
    pub fn max_point_load(&self) -> u32 {
        self.load_profile().into_iter().max().unwrap_or(0)
    }

    /// True iff every position of the circle lies on at least one arc.
    pub fn covers_circle(&self) -> bool {
        self.load_profile().into_iter().all(|l| l > 0)
    }

    /// Intersection graph: vertex `i` is arc `i + 1`, edges join
    /// intersecting arcs.
    pub fn build_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if arcs_intersect(&self.arcs[i], &self.arcs[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Instance text format: `n M` header then one `s f` line per arc,
    /// in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for a in &self.arcs {
            out.push_str(&format!("{} {}\n", a.start, a.finish));
        }
        out
    }

    /// Renders a labelling over the derived graph in the labels text
    /// format: one `v f_v` line per vertex, keyed and sorted by the
    /// 1-based input id.
    pub fn format_labels(&self, lab: &Labelling) -> String {
        let mut by_input: Vec<(usize, u32)> = self
            .input_pos
            .iter()
            .enumerate()
            .map(|(sorted, &input)| (input + 1, lab.get(sorted)))
            .collect();
        by_input.sort_unstable();
        let mut out = String::new();
        for (v, f) in by_input {
            out.push_str(&format!("{v} {f}\n"));
        }
        out
    }

    /// Builds a labelling over the derived graph from `(input id, label)`
    /// pairs, checking that every vertex is covered exactly once.
    pub fn labels_from_input(&self, pairs: &[(usize, u32)]) -> Result<Labelling, Error> {
        let n = self.n();
        if pairs.len() != n {
            return Err(Error::LabelCountMismatch {
                got: pairs.len(),
                expected: n,
            });
        }
        let mut by_input: Vec<Option<u32>> = vec![None; n];
        for &(v, f) in pairs {
            if v == 0 || v > n {
                return Err(Error::MissingLabel { vertex: v });
            }
            if by_input[v - 1].replace(f).is_some() {
                return Err(Error::DuplicateLabel { vertex: v });
            }
        }
        let mut labels = vec![0u32; n];
        for (sorted, &input) in self.input_pos.iter().enumerate() {
            labels[sorted] = by_input[input].ok_or(Error::MissingLabel { vertex: input + 1 })?;
        }
        Ok(Labelling::new(labels))
    }
}

/// Parses the instance text format: a `n M` header line followed by `n`
/// lines `s f`. Lines starting with `#` and blank lines are skipped.
pub fn parse_instance(text: &str) -> Result<(Vec<(u32, u32)>, u32), Error> {
    let mut rows = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (line, header) = rows.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing `n M` header".into(),
    })?;
    let (n, m) = parse_two(header, line + 1)?;
    let n = n as usize;
    let mut pairs = Vec::with_capacity(n);
    let mut last_line = line + 1;
    for (line, row) in rows {
        if pairs.len() == n {
            return Err(Error::Parse {
                line: line + 1,
                reason: format!("unexpected data after {n} arcs"),
            });
        }
        pairs.push(parse_two(row, line + 1)?);
        last_line = line + 1;
    }
    if pairs.len() != n {
        return Err(Error::Parse {
            line: last_line,
            reason: format!("expected {} arcs, found {}", n, pairs.len()),
        });
    }
    Ok((pairs, m))
}

fn parse_two(row: &str, line: usize) -> Result<(u32, u32), Error> {
    let mut it = row.split_whitespace();
    let mut next = || -> Result<u32, Error> {
        it.next()
            .ok_or(Error::Parse {
                line,
                reason: "expected two integers".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line,
                reason: format!("`{}` is not a non-negative integer", row.trim()),
            })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            reason: "expected exactly two integers".into(),
        });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn arc(start: u32, finish: u32) -> Arc {
        Arc {
            id: 0,
            start,
            finish,
        }
    }

    fn point_set(a: &Arc, m: u32) -> BTreeSet<u32> {
        (0..m).filter(|&p| a.contains(p)).collect()
    }

    fn brute_intersect(a: &Arc, b: &Arc, m: u32) -> bool {
        !point_set(a, m).is_disjoint(&point_set(b, m))
    }

    fn k3_family() -> ArcFamily {
        ArcFamily::normalize(&[(0, 3), (2, 5), (4, 1)], 6).unwrap()
    }

    fn c5_family() -> ArcFamily {
        ArcFamily::normalize(&[(0, 3), (2, 6), (5, 9), (8, 12), (11, 1)], 20).unwrap()
    }

    #[test]
    fn normalize_keeps_sorted_input_order() {
        let fam = ArcFamily::normalize(&[(0, 3), (2, 5)], 12).unwrap();
        assert_eq!(fam.n(), 2);
        assert_eq!(fam.arcs()[0].start, 0);
        assert_eq!(fam.arcs()[1].start, 2);
        assert_eq!(fam.input_positions(), &[0, 1]);
    }

    #[test]
    fn normalize_sorts_by_start() {
        let fam = ArcFamily::normalize(&[(2, 5), (0, 3)], 12).unwrap();
        assert_eq!(fam.arcs()[0].start, 0);
        assert_eq!(fam.arcs()[0].id, 1);
        assert_eq!(fam.arcs()[1].start, 2);
        assert_eq!(fam.input_positions(), &[1, 0]);
    }

    #[test]
    fn normalize_rejects_shared_endpoint() {
        let err = ArcFamily::normalize(&[(0, 3), (3, 7)], 12).unwrap_err();
        match err {
            Error::DuplicateEndpoint {
                position,
                first,
                second,
            } => {
                assert_eq!(position, 3);
                assert_eq!((first, second), (1, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn normalize_rejects_out_of_range_and_empty() {
        assert!(matches!(
            ArcFamily::normalize(&[(0, 12)], 12),
            Err(Error::CoordinateOutOfRange { value: 12, .. })
        ));
        assert!(matches!(
            ArcFamily::normalize(&[], 12),
            Err(Error::EmptyFamily)
        ));
        assert!(matches!(
            ArcFamily::normalize(&[(4, 4)], 12),
            Err(Error::DegenerateArc { value: 4, .. })
        ));
    }

    #[test]
    fn intersect_examples() {
        assert!(arcs_intersect(&arc(1, 5), &arc(3, 8)));
        assert!(!arcs_intersect(&arc(1, 3), &arc(5, 8)));
        // wrapping arc [10, 2] on m = 12 shares {1, 2} with [1, 4]
        assert!(arcs_intersect(&arc(10, 2), &arc(1, 4)));
        assert!(brute_intersect(&arc(10, 2), &arc(1, 4), 12));
    }

    #[test]
    fn covers_circle_examples() {
        assert!(k3_family().covers_circle());
        assert!(!ArcFamily::normalize(&[(0, 3), (2, 5)], 12)
            .unwrap()
            .covers_circle());
        assert!(ArcFamily::normalize(&[(0, 7)], 8).unwrap().covers_circle());
    }

    #[test]
    fn point_load_examples() {
        let fam = k3_family();
        assert_eq!(fam.point_load(2), 2);
        assert_eq!(fam.point_load(0), 2);
        let single = ArcFamily::normalize(&[(0, 3)], 8).unwrap();
        assert_eq!(single.point_load(5), 0);
    }

    #[test]
    fn load_profile_matches_point_load() {
        for fam in [k3_family(), c5_family()] {
            let profile = fam.load_profile();
            for p in 0..fam.m() {
                assert_eq!(profile[p as usize] as usize, fam.point_load(p));
            }
        }
    }

    #[test]
    fn build_graph_triangle() {
        let g = k3_family().build_graph();
        assert_eq!(g.n(), 3);
        for (u, w) in [(0, 1), (0, 2), (1, 2)] {
            assert!(g.has_edge(u, w));
        }
    }

    #[test]
    fn build_graph_isolated() {
        let g = ArcFamily::normalize(&[(0, 2), (4, 6)], 10)
            .unwrap()
            .build_graph();
        assert_eq!(g.n(), 2);
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn build_graph_five_cycle() {
        let g = c5_family().build_graph();
        let mut edges = Vec::new();
        for u in 0..5 {
            for w in u + 1..5 {
                if g.has_edge(u, w) {
                    edges.push((u, w));
                }
            }
        }
        assert_eq!(edges, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn parse_roundtrip_with_comments() {
        let text = "# sample instance\n3 6\n0 3\n2 5\n\n4 1\n";
        let fam = ArcFamily::from_text(text).unwrap();
        assert_eq!(fam.n(), 3);
        assert_eq!(fam.to_text(), "3 6\n0 3\n2 5\n4 1\n");
        let again = ArcFamily::from_text(&fam.to_text()).unwrap();
        assert_eq!(again.to_text(), fam.to_text());
    }

    #[test]
    fn parse_reports_offending_line() {
        let err = ArcFamily::from_text("2 6\n0 3\nx y\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            ArcFamily::from_text("2 6\n0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            ArcFamily::from_text("1 6\n0 3\n2 5\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn labels_roundtrip_against_input_order() {
        let fam = ArcFamily::normalize(&[(2, 5), (0, 3)], 12).unwrap();
        // sorted arc 0 = input arc 2, sorted arc 1 = input arc 1
        let lab = Labelling::new(vec![7, 9]);
        let text = fam.format_labels(&lab);
        assert_eq!(text, "1 9\n2 7\n");
        let parsed = crate::graph::parse_labels(&text).unwrap();
        let back = fam.labels_from_input(&parsed).unwrap();
        assert_eq!(back.as_slice(), lab.as_slice());
    }

    #[test]
    fn labels_from_input_rejects_gaps() {
        let fam = k3_family();
        assert!(matches!(
            fam.labels_from_input(&[(1, 0), (2, 2)]),
            Err(Error::LabelCountMismatch { .. })
        ));
        assert!(matches!(
            fam.labels_from_input(&[(1, 0), (1, 2), (3, 4)]),
            Err(Error::DuplicateLabel { vertex: 1 })
        ));
        assert!(matches!(
            fam.labels_from_input(&[(1, 0), (2, 2), (5, 4)]),
            Err(Error::MissingLabel { vertex: 5 })
        ));
    }

    fn family_strategy() -> impl Strategy<Value = (ArcFamily, u32)> {
        (2u32..=24)
            .prop_flat_map(|m| {
                let nmax = (m / 2).clamp(1, 6) as usize;
                (Just(m), 1..=nmax)
            })
            .prop_flat_map(|(m, n)| {
                let all: Vec<u32> = (0..m).collect();
                (
                    Just(m),
                    proptest::sample::subsequence(all, 2 * n).prop_shuffle(),
                )
            })
            .prop_map(|(m, ends)| {
                let pairs: Vec<(u32, u32)> = ends.chunks(2).map(|c| (c[0], c[1])).collect();
                (ArcFamily::normalize(&pairs, m).unwrap(), m)
            })
    }

    proptest! {
        #[test]
        fn intersection_matches_point_sets((fam, m) in family_strategy()) {
            for a in fam.arcs() {
                for b in fam.arcs() {
                    if a.id == b.id {
                        continue;
                    }
                    prop_assert_eq!(arcs_intersect(a, b), brute_intersect(a, b, m));
                    prop_assert_eq!(arcs_intersect(a, b), arcs_intersect(b, a));
                }
            }
        }

        // For non-wrapping arcs taken in start order the intersection test
        // coincides with the three endpoint orderings
        // s_i < s_j < f_i < f_j,  s_i < s_j < f_j < f_i,  s_j < s_i < f_i < f_j.
        #[test]
        fn nonwrapping_pairs_follow_endpoint_orderings((fam, _m) in family_strategy()) {
            let arcs = fam.arcs();
            for i in 0..arcs.len() {
                for j in i + 1..arcs.len() {
                    let (a, b) = (&arcs[i], &arcs[j]);
                    if a.wraps() || b.wraps() {
                        continue;
                    }
                    let (si, fi, sj, fj) = (a.start, a.finish, b.start, b.finish);
                    let cond = (si < sj && sj < fi && fi < fj)
                        || (si < sj && sj < fj && fj < fi)
                        || (sj < si && si < fi && fi < fj);
                    prop_assert_eq!(arcs_intersect(a, b), cond);
                }
            }
        }

        #[test]
        fn point_load_bounded_by_family_size((fam, m) in family_strategy()) {
            for p in 0..m {
                prop_assert!(fam.point_load(p) <= fam.n());
            }
            let degree_sum: usize = {
                let g = fam.build_graph();
                (0..g.n()).map(|v| g.degree(v)).sum()
            };
            prop_assert_eq!(degree_sum % 2, 0);
        }
    }
}
