//! Seeded random generation of circular-arc families.
//!
//! Randomness comes from ChaCha8 keyed by the seed, so a spec generates
//! the same family on every platform and run. Covering families are built
//! by laying a chain of arcs around the whole circle first and placing any
//! remaining arcs uniformly; each placement is rejection-sampled until its
//! two endpoints are unused, so all `2n` endpoints come out distinct.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arc::ArcFamily;
use crate::error::Error;

const MAX_ATTEMPTS: usize = 1_000;
const PLACEMENT_TRIES: usize = 200;

/// Parameters for one generated family. Arc length is the clockwise step
/// count from start to finish, so an arc of length `l` covers `l + 1`
/// positions.
#[derive(Debug, Clone, Copy)]
pub struct GenSpec {
    pub n: usize,
    pub m: u32,
    pub seed: u64,
    pub min_len: u32,
    pub max_len: u32,
    pub require_cover: bool,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n == 0 {
            return Err(Error::InvalidGenSpec("need at least one arc".into()));
        }
        if self.m < 2 * self.n as u32 {
            return Err(Error::InvalidGenSpec(format!(
                "circle size {} below 2n = {}",
                self.m,
                2 * self.n
            )));
        }
        if self.min_len < 1 || self.min_len > self.max_len || self.max_len >= self.m {
            return Err(Error::InvalidGenSpec(format!(
                "need 1 <= min_len <= max_len < M, got {}..{} on circle {}",
                self.min_len, self.max_len, self.m
            )));
        }
        if self.require_cover && (self.n as u64) * (self.max_len as u64) < self.m as u64 {
            return Err(Error::InfeasibleCover {
                n: self.n,
                max_len: self.max_len,
                m: self.m,
            });
        }
        Ok(())
    }
}

/// Draws a family for the given parameters: deterministic in the seed,
/// endpoints all distinct, every arc length within bounds, and the circle
/// fully covered when requested.
///
/// Arc placements are rejection-sampled against the endpoints already
/// taken; when a placement cannot be found the whole attempt restarts.
pub fn random_covering_family(spec: &GenSpec) -> Result<ArcFamily, Error> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        match try_family(spec, &mut rng) {
            Some(pairs) => return ArcFamily::normalize(&pairs, spec.m),
            None => continue 'attempt,
        }
    }
    Err(Error::GenAttemptsExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

fn try_family(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Option<Vec<(u32, u32)>> {
    let m = spec.m as u64;
    let (lmin, lmax) = (spec.min_len as u64, spec.max_len as u64);
    let mut used = vec![false; spec.m as usize];
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(spec.n);
    if spec.require_cover {
        // lay a chain around the circle in unrolled coordinates, keeping
        // enough length budget for the arcs still to come
        let per_arc = lmax + 1;
        let needed0 = (m as i64 - 1 - (spec.n as i64 - 1) * per_arc as i64).max(lmin as i64) as u64;
        let (u0, len0) = sample(rng, |rng| {
            let u0 = rng.gen_range(0..m);
            let len0 = rng.gen_range(needed0..=lmax);
            claim_pair(&mut used, m, u0, u0 + len0).map(|_| (u0, len0))
        })?;
        pairs.push(((u0 % m) as u32, ((u0 + len0) % m) as u32));
        let target = u0 + m - 1;
        let mut end = u0 + len0;
        let mut last_start = u0;
        while end < target {
            let left = (spec.n - pairs.len()) as u64;
            if left == 0 {
                return None;
            }
            let gap = target - end;
            let needed = gap as i64 - ((left - 1) * per_arc) as i64;
            let mut o_max = (lmax - 1).min(end - last_start);
            if needed > 0 {
                o_max = o_max.min((lmax as i64 + 1 - needed).max(0) as u64);
            }
            let (start, len) = sample(rng, |rng| {
                let overlap = rng.gen_range(0..=o_max);
                let start = end + 1 - overlap;
                let len_lo = lmin.max(overlap + 1).max(if needed > 0 {
                    (needed - 1 + overlap as i64) as u64
                } else {
                    0
                });
                let len = rng.gen_range(len_lo..=lmax);
                claim_pair(&mut used, m, start, start + len).map(|_| (start, len))
            })?;
            pairs.push(((start % m) as u32, ((start + len) % m) as u32));
            last_start = start;
            end = start + len;
        }
    }
    while pairs.len() < spec.n {
        let pair = sample(rng, |rng| {
            let start = rng.gen_range(0..m);
            let len = rng.gen_range(lmin..=lmax);
            claim_pair(&mut used, m, start, start + len)
        })?;
        pairs.push(pair);
    }
    Some(pairs)
}

fn claim_pair(used: &mut [bool], m: u64, start: u64, finish: u64) -> Option<(u32, u32)> {
    let (s, f) = ((start % m) as usize, (finish % m) as usize);
    if used[s] || used[f] || s == f {
        return None;
    }
    used[s] = true;
    used[f] = true;
    Some((s as u32, f as u32))
}

fn sample<T>(
    rng: &mut ChaCha8Rng,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Option<T>,
) -> Option<T> {
    for _ in 0..PLACEMENT_TRIES {
        if let Some(v) = draw(rng) {
            return Some(v);
        }
    }
    None
}
