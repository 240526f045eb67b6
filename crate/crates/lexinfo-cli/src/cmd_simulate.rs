use std::fmt::Write as _;

use lexinfo::measures::{cond_entropy_words, entropy_words, mutual_info, omega_cost, Lambda};
use lexinfo::search::SplitMix64;
use lexinfo::LexicalMatrix;

use crate::output::{sig12, LogBase};
use crate::{CliError, Policy};

/// Grows a vocabulary one new word per step, each attached to a single
/// meaning chosen by the policy, and prints per-step measures as CSV.
///
/// On the first step nothing is linked yet, so every policy necessarily
/// targets an unlinked meaning.
#[allow(clippy::too_many_arguments)]
pub fn run(
    vs: usize,
    vr: usize,
    policy: Policy,
    lambda: f64,
    steps: usize,
    seed: u64,
    log_base: LogBase,
    _base_label: &str,
) -> Result<i32, CliError> {
    if steps == 0 {
        return Err(CliError::usage("steps must be at least 1"));
    }
    if steps > vs {
        return Err(CliError::usage(format!(
            "steps ({steps}) cannot exceed vs ({vs}): each step links one new word"
        )));
    }
    let lambda = Lambda::new(lambda)?;
    let mut mx = LexicalMatrix::new(vs, vr)?;
    let mut rng = SplitMix64::new(seed);
    let scale = log_base.scale();

    let mut csv = String::from("step,strategy_used,target_meaning,h_s,h_s_given_r,i_sr\n");
    for step in 1..=steps {
        let word = mx.next_unlinked_word()?;
        let target = choose_target(&mx, policy, lambda, &mut rng)?;
        let strategy = if mx.meaning_degree(target) == 0 {
            "a"
        } else {
            "b"
        };
        mx.add_link(word, target)?;
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            step,
            strategy,
            target,
            sig12(entropy_words(&mx)? * scale),
            sig12(cond_entropy_words(&mx)? * scale),
            sig12(mutual_info(&mx)? * scale),
        );
    }
    print!("{csv}");
    Ok(0)
}

fn choose_target(
    mx: &LexicalMatrix,
    policy: Policy,
    lambda: Lambda,
    rng: &mut SplitMix64,
) -> Result<usize, CliError> {
    let unlinked = mx.first_unlinked_meaning();
    let linked: Vec<usize> = (0..mx.vr_max())
        .filter(|&j| mx.meaning_degree(j) > 0)
        .collect();
    match policy {
        Policy::AlwaysA => unlinked
            .ok_or_else(|| CliError::usage("no unlinked meaning left; always-a cannot continue")),
        Policy::AlwaysBRandom => {
            if linked.is_empty() {
                // the first step of any policy targets an unlinked meaning
                unlinked.ok_or_else(|| CliError::usage("matrix has no meanings to target"))
            } else {
                Ok(linked[rng.next_below(linked.len() as u64) as usize])
            }
        }
        Policy::Random => Ok(rng.next_below(mx.vr_max() as u64) as usize),
        Policy::GreedyOmega => {
            let word = mx.next_unlinked_word()?;
            let mut best: Option<(usize, f64)> = None;
            for j in 0..mx.vr_max() {
                let mut candidate = mx.clone();
                candidate.add_link(word, j)?;
                let cost = omega_cost(&candidate, lambda)?;
                let better = match best {
                    None => true,
                    Some((_, best_cost)) => cost < best_cost,
                };
                if better {
                    best = Some((j, cost));
                }
            }
            Ok(best.expect("vr_max >= 1").0)
        }
    }
}
