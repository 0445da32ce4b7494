//! Cut-line reduction: choose a cut through a gap between two circle
//! positions, take the arcs crossing it out as the crossing set `C`, and
//! unroll the remaining arcs into intervals on a line.
//!
//! Cuts sit at half-integer points so they can never pass through an arc
//! endpoint; crossing is therefore unambiguous. Arcs crossing the cut
//! pairwise intersect there, so `C` is always a clique, and two surviving
//! arcs overlap as intervals exactly when they intersected on the circle.

use std::fmt;
use std::str::FromStr;

use crate::arc::ArcFamily;
use crate::error::Error;
use crate::interval::Interval;

/// A cut between position `after` and position `after + 1 (mod m)`,
/// displayed as the half-integer `after + 0.5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CutPos {
    after: u32,
}

impl CutPos {
    pub fn new(after: u32) -> CutPos {
        CutPos { after }
    }

    pub fn after(&self) -> u32 {
        self.after
    }

    /// Rotation that maps the cut onto the wrap point of the circle, so
    /// every surviving arc unrolls without wrapping.
    pub fn unroll_offset(&self, m: u32) -> u32 {
        (self.after + 1) % m
    }
}

impl fmt::Display for CutPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.5", self.after)
    }
}

/// How the cut is chosen: the candidate crossed by the fewest arcs, or a
/// fixed gap immediately clockwise of a given position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutPolicy {
    #[default]
    MinLoad,
    At(u32),
}

impl fmt::Display for CutPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutPolicy::MinLoad => write!(f, "min-load"),
            CutPolicy::At(p) => write!(f, "at:{p}"),
        }
    }
}

impl FromStr for CutPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<CutPolicy, String> {
        if s == "min-load" {
            return Ok(CutPolicy::MinLoad);
        }
        if let Some(rest) = s.strip_prefix("at:") {
            return rest
                .parse()
                .map(CutPolicy::At)
                .map_err(|_| format!("`{rest}` is not a position"));
        }
        Err(format!(
            "unknown cut policy `{s}`, expected min-load or at:<position>"
        ))
    }
}

/// Result of cutting a family: the crossing set in start order and the
/// surviving arcs as intervals in left-endpoint order.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub cut: CutPos,
    /// Arc ids crossing the cut, ascending by start position.
    pub crossing: Vec<usize>,
    /// One interval per surviving arc, sorted by left endpoint, tagged
    /// with the original arc id.
    pub intervals: Vec<Interval>,
    pub unroll_offset: u32,
}

impl CutResult {
    /// Debug text: `cut <position>`, `C <ids…>`, then `id left right`
    /// per interval.
    pub fn to_text(&self) -> String {
        let mut out = format!("cut {}\n", self.cut);
        out.push('C');
        for id in &self.crossing {
            out.push_str(&format!(" {id}"));
        }
        out.push('\n');
        for iv in &self.intervals {
            out.push_str(&format!("{} {} {}\n", iv.id, iv.left, iv.right));
        }
        out
    }
}

fn crossing_set(fam: &ArcFamily, cut: CutPos) -> Vec<usize> {
    fam.arcs()
        .iter()
        .filter(|a| a.crosses_gap(cut.after, fam.m()))
        .map(|a| a.id)
        .collect()
}

/// All candidate cuts with their loads, sorted by position. The crossing
/// set only changes at arc endpoints, so one candidate is placed in the
/// gap just clockwise of each endpoint and runs with identical crossing
/// sets are merged (including the run that wraps past position 0).
pub fn candidate_cuts(fam: &ArcFamily) -> Vec<(CutPos, usize)> {
    let mut ends: Vec<u32> = fam
        .arcs()
        .iter()
        .flat_map(|a| [a.start, a.finish])
        .collect();
    ends.sort_unstable();
    let mut cands: Vec<(CutPos, Vec<usize>)> = Vec::new();
    for e in ends {
        let cut = CutPos::new(e);
        let set = crossing_set(fam, cut);
        if cands.last().is_none_or(|(_, prev)| *prev != set) {
            cands.push((cut, set));
        }
    }
    if cands.len() > 1 && cands.first().map(|(_, s)| s) == cands.last().map(|(_, s)| s) {
        cands.remove(0);
    }
    cands
        .into_iter()
        .map(|(cut, set)| (cut, set.len()))
        .collect()
}

/// Picks the cut for a policy: the minimum-load candidate (ties to the
/// smallest position) or the gap just clockwise of a fixed position.
pub fn select_cut(fam: &ArcFamily, policy: CutPolicy) -> Result<CutPos, Error> {
    match policy {
        CutPolicy::MinLoad => Ok(candidate_cuts(fam)
            .into_iter()
            .min_by_key(|&(cut, load)| (load, cut))
            .map(|(cut, _)| cut)
            .expect("a family has at least one candidate")),
        CutPolicy::At(p) => {
            if p >= fam.m() {
                return Err(Error::CutOutOfRange {
                    position: p,
                    m: fam.m(),
                });
            }
            Ok(CutPos::new(p))
        }
    }
}

/// Removes the arcs crossing the cut and unrolls the rest: positions are
/// rotated so the cut lands just before 0, which leaves every surviving
/// arc with `left < right`. Intervals keep their arc ids and are re-sorted
/// by left endpoint.
pub fn cut_family(fam: &ArcFamily, cut: CutPos) -> CutResult {
    let m = fam.m();
    let offset = cut.unroll_offset(m);
    let rotate = |p: u32| (p + m - offset) % m;
    let mut crossing = Vec::new();
    let mut intervals = Vec::new();
    for a in fam.arcs() {
        if a.crosses_gap(cut.after, m) {
            crossing.push(a.id);
        } else {
            intervals.push(Interval {
                id: a.id,
                left: rotate(a.start),
                right: rotate(a.finish),
            });
        }
    }
    intervals.sort_by_key(|iv| iv.left);
    CutResult {
        cut,
        crossing,
        intervals,
        unroll_offset: offset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::arcs_intersect;
    use crate::gen::{random_covering_family, GenSpec};
    use crate::graph::clique_number;

    fn k3_family() -> ArcFamily {
        ArcFamily::normalize(&[(0, 3), (2, 5), (4, 1)], 6).unwrap()
    }

    #[test]
    fn candidate_loads_on_triangle() {
        let cands = candidate_cuts(&k3_family());
        let lookup = |after: u32| {
            cands
                .iter()
                .find(|(c, _)| c.after() == after)
                .map(|&(_, load)| load)
        };
        assert_eq!(lookup(3), Some(1));
        assert_eq!(lookup(0), Some(2));
        assert_eq!(lookup(1), Some(1));
        assert_eq!(cands.len(), 6);
    }

    #[test]
    fn uncovered_gap_gives_zero_load() {
        let fam = ArcFamily::normalize(&[(0, 3), (5, 8)], 12).unwrap();
        assert!(candidate_cuts(&fam).iter().any(|&(_, load)| load == 0));
    }

    #[test]
    fn wrapping_run_is_merged() {
        // a single full-circle arc crosses every gap; only one candidate
        // should survive the merge
        let fam = ArcFamily::normalize(&[(0, 7)], 8).unwrap();
        let cands = candidate_cuts(&fam);
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].1, 1);
    }

    #[test]
    fn min_load_breaks_ties_towards_smaller_position() {
        // loads on the triangle family are 1 at 1.5, 3.5, 5.5 and 2 elsewhere
        let cut = select_cut(&k3_family(), CutPolicy::MinLoad).unwrap();
        assert_eq!(cut, CutPos::new(1));
    }

    #[test]
    fn at_policy_is_forced() {
        assert_eq!(
            select_cut(&k3_family(), CutPolicy::At(0)).unwrap(),
            CutPos::new(0)
        );
        assert!(matches!(
            select_cut(&k3_family(), CutPolicy::At(6)),
            Err(Error::CutOutOfRange { position: 6, m: 6 })
        ));
    }

    #[test]
    fn cut_triangle_at_three_and_a_half() {
        let res = cut_family(&k3_family(), CutPos::new(3));
        assert_eq!(res.crossing, vec![2]);
        assert_eq!(res.unroll_offset, 4);
        let spans: Vec<(usize, u32, u32)> = res
            .intervals
            .iter()
            .map(|iv| (iv.id, iv.left, iv.right))
            .collect();
        assert_eq!(spans, vec![(3, 0, 3), (1, 2, 5)]);
        assert_eq!(res.to_text(), "cut 3.5\nC 2\n3 0 3\n1 2 5\n");
    }

    #[test]
    fn cut_where_every_arc_crosses() {
        let fam = ArcFamily::normalize(&[(0, 2), (1, 3)], 6).unwrap();
        let res = cut_family(&fam, CutPos::new(1));
        assert_eq!(res.crossing, vec![1, 2]);
        assert!(res.intervals.is_empty());
    }

    #[test]
    fn policy_strings_parse() {
        assert_eq!("min-load".parse::<CutPolicy>().unwrap(), CutPolicy::MinLoad);
        assert_eq!("at:27".parse::<CutPolicy>().unwrap(), CutPolicy::At(27));
        assert!("at:x".parse::<CutPolicy>().is_err());
        assert!("best".parse::<CutPolicy>().is_err());
        assert_eq!(CutPolicy::At(27).to_string(), "at:27");
    }

    // On random covering families every candidate cut must produce a
    // crossing clique and an overlap-faithful interval projection.
    #[test]
    fn cuts_preserve_intersections_and_clique_structure() {
        for seed in 0..60 {
            let spec = GenSpec {
                n: 4 + (seed as usize % 9),
                m: 36,
                seed,
                min_len: 2,
                max_len: 11,
                require_cover: true,
            };
            let fam = random_covering_family(&spec).unwrap();
            let g = fam.build_graph();
            let omega = clique_number(&g, fam.max_point_load() as usize, 64).unwrap();
            // the point load is a true lower bound: seeding must not
            // change the answer, and cliques fit under max degree + 1
            assert_eq!(clique_number(&g, 0, 64).unwrap(), omega);
            assert!(omega <= g.max_degree() + 1);
            let mut covered = vec![false; fam.n()];
            for (cut, load) in candidate_cuts(&fam) {
                let res = cut_family(&fam, cut);
                assert_eq!(res.crossing.len(), load);
                assert!(res.crossing.len() <= omega);
                let as_vertices: Vec<usize> = res.crossing.iter().map(|&id| id - 1).collect();
                assert!(g.is_clique(&as_vertices));
                for &id in &res.crossing {
                    covered[id - 1] = true;
                }
                assert_eq!(res.crossing.len() + res.intervals.len(), fam.n());
                for iv in &res.intervals {
                    assert!(iv.left < iv.right);
                }
                for (x, a) in res.intervals.iter().enumerate() {
                    for b in &res.intervals[x + 1..] {
                        let arc_a = fam.arcs()[a.id - 1];
                        let arc_b = fam.arcs()[b.id - 1];
                        assert_eq!(a.overlaps(b), arcs_intersect(&arc_a, &arc_b));
                    }
                }
            }
            // every arc crosses at least one candidate
            assert!(covered.iter().all(|&c| c));
        }
    }
}
