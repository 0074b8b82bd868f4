//! Return probabilities of the simple random walk on `G` and on `C2 wr Z`
//! with respect to the generating set `{s, s^-1, t, t^-1}`.
//!
//! Only raw desk-scale numbers are produced, either by exhaustive
//! enumeration of all `4^steps` walks or by Monte Carlo sampling.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{is_identity, quotient_image};
use crate::params::GroupParams;
use crate::parallel::in_pool;
use crate::word::{Letter, Word};

/// Largest walk length accepted by [`exact_return_prob`].
pub const EXACT_STEPS_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// The group `G` itself.
    G,
    /// The quotient `C2 wr Z`.
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkConfig {
    steps: usize,
    pub trials: u64,
    pub seed: u64,
    pub target: Target,
    /// Number of independent RNG streams. Results depend on `(seed, trials, steps, shards)` only.
    pub shards: usize,
    /// Worker threads; rayon's default when `None`.
    pub threads: Option<usize>,
}

impl WalkConfig {
    /// Odd lengths are rejected: both exponent sums must vanish at the
    /// identity, and each step changes their total by one.
    pub fn new(steps: usize, target: Target) -> Result<Self> {
        if !steps.is_multiple_of(2) {
            return Err(Error::WalkPrecondition(format!("steps must be even, got {steps}")));
        }
        Ok(Self { steps, trials: 1, seed: 0, target, shards: 1, threads: None })
    }

    pub fn with_trials(mut self, trials: u64, seed: u64) -> Self {
        self.trials = trials;
        self.seed = seed;
        self
    }

    pub fn with_shards(mut self, shards: usize, threads: Option<usize>) -> Self {
        self.shards = shards;
        self.threads = threads;
        self
    }

    pub fn steps(&self) -> usize {
        self.steps
    }
}

fn returns(letters: &[Letter], target: Target, gp: &GroupParams) -> Result<bool> {
    let w = Word::from_letters(letters.iter().copied());
    let (s_sum, t_sum) = w.exponent_sums();
    match target {
        Target::G if s_sum == 0 && t_sum == 0 => is_identity(&w, gp),
        // the image of s is an involution in C2 wr Z
        Target::Q if s_sum % 2 == 0 && t_sum == 0 => Ok(quotient_image(&w).is_identity()),
        _ => Ok(false),
    }
}

/// Number of the `4^len` words of length `len` that evaluate to the identity.
/// Any `len` is accepted, odd included.
pub fn count_returns(target: Target, gp: &GroupParams, len: usize, threads: Option<usize>) -> Result<u64> {
    if len > EXACT_STEPS_CAP {
        return Err(Error::WalkPrecondition(format!(
            "exact enumeration is capped at {EXACT_STEPS_CAP} steps, got {len}"
        )));
    }
    let head = len.min(2);
    let prefixes: Vec<Vec<Letter>> = (0..4usize.pow(head as u32))
        .map(|code| (0..head).map(|j| Letter::ALL[(code >> (2 * j)) & 3]).collect())
        .collect();
    let counts = in_pool(threads, || {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut buf = prefix.clone();
                let mut reduced = Word::from_letters(prefix.iter().copied()).reduce().letters().to_vec();
                let mut hits = 0u64;
                enumerate(&mut buf, &mut reduced, len, target, gp, &mut hits)?;
                Ok(hits)
            })
            .collect::<Result<Vec<u64>>>()
    })??;
    Ok(counts.into_iter().sum())
}

fn enumerate(
    buf: &mut Vec<Letter>,
    reduced: &mut Vec<Letter>,
    len: usize,
    target: Target,
    gp: &GroupParams,
    hits: &mut u64,
) -> Result<()> {
    if buf.len() == len {
        if reduced.is_empty() || returns(reduced, target, gp)? {
            *hits += 1;
        }
        return Ok(());
    }
    for l in Letter::ALL {
        buf.push(l);
        let cancelled = reduced.last() == Some(&l.inv());
        if cancelled {
            reduced.pop();
        } else {
            reduced.push(l);
        }
        enumerate(buf, reduced, len, target, gp, hits)?;
        if cancelled {
            reduced.push(l.inv());
        } else {
            reduced.pop();
        }
        buf.pop();
    }
    Ok(())
}

/// Exact return probability `count / 4^steps`.
pub fn exact_return_prob(cfg: &WalkConfig, gp: &GroupParams) -> Result<Ratio<u64>> {
    let hits = count_returns(cfg.target, gp, cfg.steps, cfg.threads)?;
    Ok(Ratio::new(hits, 4u64.pow(cfg.steps as u32)))
}

/// Monte Carlo estimate and its standard error `sqrt(p(1-p)/trials)`.
///
/// Shard `j` draws from a ChaCha8 stream `j` keyed by `seed` and runs
/// `trials / shards` walks (the first `trials % shards` shards run one more).
pub fn mc_return_prob(cfg: &WalkConfig, gp: &GroupParams) -> Result<(f64, f64)> {
    if cfg.trials == 0 || cfg.shards == 0 {
        return Err(Error::WalkPrecondition("trials and shards must be positive".into()));
    }
    let shards = cfg.shards as u64;
    let hits = in_pool(cfg.threads, || {
        (0..shards)
            .into_par_iter()
            .map(|j| {
                let n = cfg.trials / shards + u64::from(j < cfg.trials % shards);
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(j);
                let mut letters = Vec::with_capacity(cfg.steps);
                let mut hits = 0u64;
                for _ in 0..n {
                    letters.clear();
                    letters.extend((0..cfg.steps).map(|_| Letter::ALL[rng.gen_range(0..4)]));
                    if returns(&letters, cfg.target, gp)? {
                        hits += 1;
                    }
                }
                Ok(hits)
            })
            .collect::<Result<Vec<u64>>>()
    })??
    .into_iter()
    .sum::<u64>();
    let p = hits as f64 / cfg.trials as f64;
    Ok((p, (p * (1.0 - p) / cfg.trials as f64).sqrt()))
}

/// `steps<TAB>num/den`
pub fn format_exact_row(steps: usize, p: Ratio<u64>) -> String {
    format!("{steps}\t{}/{}", p.numer(), p.denom())
}

/// `steps<TAB>estimate<TAB>stderr`
pub fn format_mc_row(steps: usize, estimate: f64, stderr: f64) -> String {
    format!("{steps}\t{estimate:.6}\t{stderr:.6}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_steps_are_rejected() {
        assert!(matches!(WalkConfig::new(3, Target::Q), Err(Error::WalkPrecondition(_))));
    }

    #[test]
    fn exact_small_values() {
        let gp = GroupParams::paper();
        // G: only x x^-1 returns. Q: additionally s s and s^-1 s^-1.
        let g2 = exact_return_prob(&WalkConfig::new(2, Target::G).unwrap(), &gp).unwrap();
        assert_eq!(g2, Ratio::new(4, 16));
        let q2 = exact_return_prob(&WalkConfig::new(2, Target::Q).unwrap(), &gp).unwrap();
        assert_eq!(q2, Ratio::new(6, 16));
        let zero = exact_return_prob(&WalkConfig::new(0, Target::G).unwrap(), &gp).unwrap();
        assert_eq!(zero, Ratio::from_integer(1));
    }

    #[test]
    fn exact_rejects_long_walks() {
        let cfg = WalkConfig::new(14, Target::Q).unwrap();
        assert!(exact_return_prob(&cfg, &GroupParams::paper()).is_err());
    }

    #[test]
    fn odd_lengths_never_return() {
        let gp = GroupParams::paper();
        for len in [1, 3, 5, 7] {
            assert_eq!(count_returns(Target::G, &gp, len, Some(2)).unwrap(), 0);
            assert_eq!(count_returns(Target::Q, &gp, len, Some(2)).unwrap(), 0);
        }
    }

    #[test]
    fn quotient_dominates() {
        let gp = GroupParams::paper();
        for steps in [2, 4, 6, 8] {
            let g = count_returns(Target::G, &gp, steps, None).unwrap();
            let q = count_returns(Target::Q, &gp, steps, None).unwrap();
            assert!(g <= q, "steps={steps}: {g} > {q}");
        }
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let gp = GroupParams::paper();
        let cfg = WalkConfig::new(6, Target::G).unwrap().with_trials(20_000, 7).with_shards(3, Some(2));
        assert_eq!(mc_return_prob(&cfg, &gp).unwrap(), mc_return_prob(&cfg, &gp).unwrap());
        let zero = WalkConfig::new(0, Target::G).unwrap().with_trials(10, 1);
        assert_eq!(mc_return_prob(&zero, &gp).unwrap(), (1.0, 0.0));
    }

    #[test]
    fn rows() {
        assert_eq!(format_exact_row(2, Ratio::new(4, 16)), "2\t1/4");
        assert_eq!(format_mc_row(2, 0.25, 0.001), "2\t0.250000\t0.001000");
    }
}
