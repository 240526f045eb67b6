//! New-word attachment: predicted and realized entropy changes when an
//! unlinked word is connected to a set of meanings, the comparison between
//! attaching to unlinked meanings (strategy a) and linked meanings
//! (strategy b), and recycling of already-linked words.
//!
//! Every predicted delta has a closed form in the target degrees; the public
//! reports instead carry values recomputed from the mutated matrix, and the
//! tests assert the two routes agree. That way a transcription slip in
//! either formula shows up immediately.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{degree_step, xlog2x, LexicalMatrix};
use crate::measures::{cond_entropy_words, entropy_words, mutual_info};

/// `delta(k) = (k+1) log2(k+1) - k log2(k)`: the conditional-entropy
/// increment contributed by raising a meaning's degree from `k` to `k + 1`.
/// Zero at `k = 0`, strictly positive and strictly increasing for `k >= 1`.
pub fn delta(k: u64) -> f64 {
    degree_step(k)
}

/// An attachment of one currently-unlinked word to `alpha` distinct
/// meanings. Degree information is captured from the matrix the plan was
/// built against; the operations below re-read degrees from the matrix they
/// are applied to, so a stale plan cannot smuggle in stale degrees.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttachmentPlan {
    pub word: usize,
    pub meanings: Vec<usize>,
    pub alpha: usize,
    /// How many targeted meanings were unlinked when the plan was built.
    pub alpha0: usize,
    pub target_degrees: Vec<u32>,
}

impl AttachmentPlan {
    pub fn new(mx: &LexicalMatrix, word: usize, meanings: &[usize]) -> Result<Self> {
        mx.check_word(word)?;
        if mx.word_degree(word) > 0 {
            return Err(Error::RecycleRequired { word });
        }
        validate_targets(mx, meanings)?;
        let target_degrees: Vec<u32> = meanings.iter().map(|&j| mx.meaning_degree(j)).collect();
        let alpha0 = target_degrees.iter().filter(|&&d| d == 0).count();
        Ok(AttachmentPlan {
            word,
            meanings: meanings.to_vec(),
            alpha: meanings.len(),
            alpha0,
            target_degrees,
        })
    }

    /// Pure strategy a: the `alpha` lowest-indexed unlinked meanings.
    pub fn strategy_a(mx: &LexicalMatrix, word: usize, alpha: usize) -> Result<Self> {
        let unlinked: Vec<usize> = (0..mx.vr_max())
            .filter(|&j| mx.meaning_degree(j) == 0)
            .take(alpha)
            .collect();
        if unlinked.len() < alpha {
            return Err(Error::StrategyAUnavailable);
        }
        AttachmentPlan::new(mx, word, &unlinked)
    }

    /// Pure strategy b with a single link to one linked meaning.
    pub fn strategy_b(mx: &LexicalMatrix, word: usize, meaning: usize) -> Result<Self> {
        mx.check_meaning(meaning)?;
        if mx.meaning_degree(meaning) == 0 {
            return Err(Error::NotStrategyB { meaning });
        }
        AttachmentPlan::new(mx, word, &[meaning])
    }
}

fn validate_targets(mx: &LexicalMatrix, meanings: &[usize]) -> Result<()> {
    if meanings.is_empty() {
        return Err(Error::InvalidPlan {
            message: "at least one target meaning is required".into(),
        });
    }
    for (pos, &j) in meanings.iter().enumerate() {
        mx.check_meaning(j)?;
        if meanings[..pos].contains(&j) {
            return Err(Error::InvalidPlan {
                message: format!("duplicate target meaning {j}"),
            });
        }
    }
    Ok(())
}

/// Re-checks a plan against the matrix it is about to be applied to.
fn validate_plan(mx: &LexicalMatrix, plan: &AttachmentPlan) -> Result<()> {
    mx.check_word(plan.word)?;
    if mx.word_degree(plan.word) > 0 {
        return Err(Error::InvalidPlan {
            message: format!("word {} is already linked", plan.word),
        });
    }
    validate_targets(mx, &plan.meanings)
}

/// Predicted conditional-entropy increase of a plan: the degree increments
/// of the targeted meanings, normalized by the new link total. Unlinked
/// targets contribute nothing.
pub fn predict_delta_cond_entropy(mx: &LexicalMatrix, plan: &AttachmentPlan) -> Result<f64> {
    if mx.link_count() == 0 {
        return Err(Error::UndefinedMeasure);
    }
    validate_plan(mx, plan)?;
    let m_after = (mx.link_count() + plan.alpha as u64) as f64;
    let sum: f64 = plan
        .meanings
        .iter()
        .map(|&j| delta(u64::from(mx.meaning_degree(j))))
        .sum();
    Ok(sum / m_after)
}

/// Measures of the matrix after an attachment, all recomputed from the
/// mutated state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttachmentReport {
    pub h_s_after: f64,
    pub h_s_given_r_after: f64,
    pub i_sr_after: f64,
    /// Realized conditional-entropy increase attributable to the plan's
    /// choice of targets.
    pub delta_h_s_given_r: f64,
}

/// Applies a plan to the matrix and reports the resulting measures.
///
/// For a fixed number of links `alpha`, the resulting word entropy does not
/// depend on which meanings were chosen: any two equal-`alpha` plans on the
/// same matrix produce bit-identical `h_s_after`.
pub fn attach_new_word(mx: &mut LexicalMatrix, plan: &AttachmentPlan) -> Result<AttachmentReport> {
    if mx.link_count() == 0 {
        return Err(Error::UndefinedMeasure);
    }
    mx.check_word(plan.word)?;
    if mx.word_degree(plan.word) > 0 {
        return Err(Error::RecycleRequired { word: plan.word });
    }
    validate_targets(mx, &plan.meanings)?;

    let m_after = (mx.link_count() + plan.alpha as u64) as f64;
    let base_omega_term = mx.sum_omega_log() / m_after;
    for &j in &plan.meanings {
        mx.add_link(plan.word, j)?;
    }
    let h_s_after = entropy_words(mx)?;
    let h_s_given_r_after = cond_entropy_words(mx)?;
    Ok(AttachmentReport {
        h_s_after,
        h_s_given_r_after,
        i_sr_after: mutual_info(mx)?,
        delta_h_s_given_r: h_s_given_r_after - base_omega_term,
    })
}

/// Mutual information after strategy a versus strategy b, plus the analytic
/// gap between them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategyComparison {
    pub i_a: f64,
    pub i_b: f64,
    /// `delta(k_R) / (M + 1)` where `k_R` is the degree of the strategy-b
    /// target. Strictly positive, so strategy a always wins.
    pub gap: f64,
}

/// Compares attaching the next new word to an unlinked meaning against
/// attaching it to the linked meaning `meaning_b`. The input matrix is not
/// modified.
pub fn compare_strategies(mx: &LexicalMatrix, meaning_b: usize) -> Result<StrategyComparison> {
    if mx.link_count() == 0 {
        return Err(Error::UndefinedMeasure);
    }
    mx.check_meaning(meaning_b)?;
    let word = mx.next_unlinked_word()?;
    let meaning_a = mx
        .first_unlinked_meaning()
        .ok_or(Error::StrategyAUnavailable)?;
    let k_r = mx.meaning_degree(meaning_b);
    if k_r == 0 {
        return Err(Error::NotStrategyB { meaning: meaning_b });
    }

    let mut after_a = mx.clone();
    after_a.add_link(word, meaning_a)?;
    let mut after_b = mx.clone();
    after_b.add_link(word, meaning_b)?;

    Ok(StrategyComparison {
        i_a: mutual_info(&after_a)?,
        i_b: mutual_info(&after_b)?,
        gap: delta(u64::from(k_r)) / (mx.link_count() + 1) as f64,
    })
}

/// Entropy effect of recycling: `alpha` fresh links added to an already
/// linked word.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecycleReport {
    /// Word entropy of the mutated matrix.
    pub h_s_after: f64,
    /// How much lower that entropy is than if the same `alpha` links had
    /// introduced a new word instead. Always positive: recycling is the
    /// cheaper option for word entropy.
    pub delta_h_s: f64,
}

/// Adds `alpha` links from the linked word `word` to `meanings`, none of
/// which may already be linked to it.
pub fn attach_old_word(
    mx: &mut LexicalMatrix,
    word: usize,
    meanings: &[usize],
) -> Result<RecycleReport> {
    mx.check_word(word)?;
    if mx.word_degree(word) == 0 {
        return Err(Error::WordUnlinked { word });
    }
    validate_targets(mx, meanings)?;
    for &j in meanings {
        if mx.has_link(word, j) {
            return Err(Error::InvalidPlan {
                message: format!("word {word} is already linked to meaning {j}"),
            });
        }
    }

    let alpha = meanings.len() as u64;
    let m_after = (mx.link_count() + alpha) as f64;
    // word entropy a new word attached with the same alpha would have produced
    let h_new_word = m_after.log2() - (mx.sum_mu_log() + xlog2x(alpha)) / m_after;

    for &j in meanings {
        mx.add_link(word, j)?;
    }
    let h_s_after = entropy_words(mx)?;
    Ok(RecycleReport {
        h_s_after,
        delta_h_s: h_new_word - h_s_after,
    })
}

/// Whether two equal-size plans for the same new word leave identical word
/// probability distributions, hence identical mean code lengths under any
/// fixed length assignment. True for every valid pair: the new word's
/// degree is `alpha` either way and no other word degree moves.
pub fn code_length_tie_check(
    mx: &LexicalMatrix,
    plan_a: &AttachmentPlan,
    plan_b: &AttachmentPlan,
) -> Result<bool> {
    if plan_a.word != plan_b.word {
        return Err(Error::InvalidComparison {
            message: format!(
                "plans attach different words {} and {}",
                plan_a.word, plan_b.word
            ),
        });
    }
    if plan_a.alpha != plan_b.alpha {
        return Err(Error::InvalidComparison {
            message: format!(
                "plans have different alpha {} and {}",
                plan_a.alpha, plan_b.alpha
            ),
        });
    }
    validate_plan(mx, plan_a)?;
    validate_plan(mx, plan_b)?;

    let degrees_after = |plan: &AttachmentPlan| -> Result<Vec<u32>> {
        let mut clone = mx.clone();
        for &j in &plan.meanings {
            clone.add_link(plan.word, j)?;
        }
        let mut degrees: Vec<u32> = clone
            .word_degrees()
            .iter()
            .copied()
            .filter(|&d| d > 0)
            .collect();
        degrees.sort_unstable();
        Ok(degrees)
    };
    Ok(degrees_after(plan_a)? == degrees_after(plan_b)?)
}
