//! Stochastic minimization of the combined cost over lexical matrices:
//! Metropolis single-flip annealing with a geometric temperature schedule,
//! plus rank-frequency extraction and a descriptive power-law exponent fit.
//!
//! Runs are fully reproducible: all randomness flows from one 64-bit seed
//! through a SplitMix64 generator, and chain seeds are derived from the base
//! seed in closed form so chains can run in any order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::LexicalMatrix;
use crate::measures::{omega_cost, Lambda};

/// Small deterministic PRNG (Steele, Lea & Flood's SplitMix64). Chosen over
/// an external generator so the streams are bit-stable across platforms and
/// dependency upgrades.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n` via the multiply-shift bounded map.
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }
}

/// Parameters of one annealing experiment.
#[derive(Debug, Clone, Serialize)]
pub struct AnnealConfig {
    pub vs_max: usize,
    pub vr_max: usize,
    pub lambda: Lambda,
    /// Number of flip proposals per chain.
    pub steps: u64,
    /// Initial temperature, in bits.
    pub t_initial: f64,
    /// Geometric cooling factor applied after every proposal.
    pub cooling: f64,
    pub seed: u64,
    /// Independent restarts.
    pub chains: u32,
}

impl AnnealConfig {
    /// Config with the default schedule: `t_initial = 1` bit, `cooling =
    /// 0.999`, one chain.
    pub fn new(vs_max: usize, vr_max: usize, lambda: Lambda, steps: u64, seed: u64) -> Self {
        AnnealConfig {
            vs_max,
            vr_max,
            lambda,
            steps,
            t_initial: 1.0,
            cooling: 0.999,
            seed,
            chains: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vs_max == 0 || self.vr_max == 0 {
            return Err(Error::InvalidDimension {
                vs_max: self.vs_max,
                vr_max: self.vr_max,
            });
        }
        if self.steps == 0 {
            return Err(Error::InvalidConfig {
                message: "steps must be at least 1".into(),
            });
        }
        if !(self.t_initial.is_finite() && self.t_initial > 0.0) {
            return Err(Error::InvalidConfig {
                message: format!("t_initial must be positive, got {}", self.t_initial),
            });
        }
        if !(self.cooling.is_finite() && 0.0 < self.cooling && self.cooling < 1.0) {
            return Err(Error::InvalidConfig {
                message: format!("cooling must lie in (0, 1), got {}", self.cooling),
            });
        }
        if self.chains == 0 {
            return Err(Error::InvalidConfig {
                message: "chains must be at least 1".into(),
            });
        }
        Ok(())
    }
}

/// One accepted state along a chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub step: u64,
    pub temperature: f64,
    pub cost: f64,
    pub links: u64,
    pub linked_words: usize,
}

/// Outcome of one chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnealResult {
    pub best_matrix: LexicalMatrix,
    /// Cost of `best_matrix` at the configured lambda, in bits.
    pub best_cost: f64,
    /// The initial state followed by every accepted proposal.
    pub trajectory: Vec<TrajectoryPoint>,
    /// Word probabilities of the best matrix, descending.
    pub rank_freq: Vec<f64>,
    /// Fitted power-law exponent of `rank_freq`, absent when fewer than
    /// three words carry probability.
    pub zipf_exponent: Option<f64>,
}

/// Seed for chain `c`: successive outputs of a SplitMix64 stream seeded with
/// the base seed, so the mapping is closed-form and order-independent.
fn chain_seed(base: u64, chain: u32) -> u64 {
    let mut rng = SplitMix64::new(base);
    let mut seed = rng.next_u64();
    for _ in 0..chain {
        seed = rng.next_u64();
    }
    seed
}

/// Uniformly random matrix over all configurations with at least one link.
fn random_nonempty_matrix(vs_max: usize, vr_max: usize, rng: &mut SplitMix64) -> LexicalMatrix {
    loop {
        let mut mx = LexicalMatrix::new(vs_max, vr_max).expect("validated dims");
        for i in 0..vs_max {
            for j in 0..vr_max {
                if rng.next_u64() & 1 == 1 {
                    mx.add_link(i, j).expect("fresh cell");
                }
            }
        }
        if mx.link_count() > 0 {
            return mx;
        }
    }
}

fn point(step: u64, temperature: f64, cost: f64, mx: &LexicalMatrix) -> TrajectoryPoint {
    TrajectoryPoint {
        step,
        temperature,
        cost,
        links: mx.link_count(),
        linked_words: mx.linked_counts().0,
    }
}

fn anneal_seeded(config: &AnnealConfig, seed: u64) -> Result<AnnealResult> {
    config.validate()?;
    let mut rng = SplitMix64::new(seed);
    let cells = (config.vs_max * config.vr_max) as u64;

    let mut mx = random_nonempty_matrix(config.vs_max, config.vr_max, &mut rng);
    let mut cost = omega_cost(&mx, config.lambda)?;
    let mut best = mx.clone();
    let mut best_cost = cost;
    let mut temperature = config.t_initial;
    let mut trajectory = vec![point(0, temperature, cost, &mx)];

    for step in 1..=config.steps {
        let cell = rng.next_below(cells);
        let i = (cell / config.vr_max as u64) as usize;
        let j = (cell % config.vr_max as u64) as usize;
        let removing = mx.has_link(i, j);
        // flips that would empty the matrix are rejected outright but still
        // consume a step of the schedule
        if !(removing && mx.link_count() == 1) {
            if removing {
                mx.remove_link(i, j)?;
            } else {
                mx.add_link(i, j)?;
            }
            let proposed = omega_cost(&mx, config.lambda)?;
            let diff = proposed - cost;
            let accept = diff <= 0.0 || rng.next_f64() < (-diff / temperature).exp();
            if accept {
                cost = proposed;
                trajectory.push(point(step, temperature, cost, &mx));
                if cost < best_cost {
                    best_cost = cost;
                    best = mx.clone();
                }
            } else if removing {
                mx.add_link(i, j)?;
            } else {
                mx.remove_link(i, j)?;
            }
        }
        temperature *= config.cooling;
    }

    let rank_freq = rank_frequency(&best)?;
    let zipf = zipf_exponent(&rank_freq);
    Ok(AnnealResult {
        best_matrix: best,
        best_cost,
        trajectory,
        rank_freq,
        zipf_exponent: zipf,
    })
}

/// Runs a single chain. Equivalent to the first entry of `run_chains`.
pub fn anneal(config: &AnnealConfig) -> Result<AnnealResult> {
    anneal_seeded(config, chain_seed(config.seed, 0))
}

/// Runs `config.chains` independent chains. Results depend only on the
/// config, not on execution order.
pub fn run_chains(config: &AnnealConfig) -> Result<Vec<AnnealResult>> {
    config.validate()?;
    (0..config.chains)
        .map(|c| anneal_seeded(config, chain_seed(config.seed, c)))
        .collect()
}

/// Word probabilities `mu_i / M` of the linked words, sorted descending.
pub fn rank_frequency(mx: &LexicalMatrix) -> Result<Vec<f64>> {
    let m = mx.link_count();
    if m == 0 {
        return Err(Error::UndefinedMeasure);
    }
    let mut degrees: Vec<u32> = mx
        .word_degrees()
        .iter()
        .copied()
        .filter(|&d| d > 0)
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees
        .into_iter()
        .map(|d| f64::from(d) / m as f64)
        .collect())
}

/// Magnitude of the ordinary least squares slope of `log p` against
/// `log rank` over the nonzero entries of a descending probability
/// sequence. `None` when fewer than three ranks are available.
pub fn zipf_exponent(rank_freq: &[f64]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rank_freq
        .iter()
        .filter(|&&p| p > 0.0)
        .enumerate()
        .map(|(idx, &p)| (((idx + 1) as f64).ln(), p.ln()))
        .collect();
    if points.len() < 3 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points
        .iter()
        .map(|&(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let sxx: f64 = points.iter().map(|&(x, _)| (x - mean_x).powi(2)).sum();
    Some((sxy / sxx).abs())
}
