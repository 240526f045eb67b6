//! Information-theoretic measures of a lexical matrix.
//!
//! All quantities derive from the joint distribution `p_ij = a_ij / M`, so
//! they are undefined on an empty matrix and every function here returns
//! `UndefinedMeasure` when `M = 0`. Everything is computed in bits; callers
//! that want nats multiply by `ln 2`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::LexicalMatrix;

/// The weight balancing word-entropy minimization against mutual-information
/// maximization in the combined cost. Valid values lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Lambda(f64);

impl Lambda {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Lambda(value))
        } else {
            Err(Error::InvalidLambda { value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Snapshot of all measures of one matrix. `l_s` is present only when code
/// lengths were requested, `omega_cost` and `lambda` only when a lambda was
/// supplied.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureReport {
    pub h_s: f64,
    pub h_s_given_r: f64,
    pub i_sr: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_cost: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

fn total_links(mx: &LexicalMatrix) -> Result<f64> {
    match mx.link_count() {
        0 => Err(Error::UndefinedMeasure),
        m => Ok(m as f64),
    }
}

/// Joint probability of word `i` and meaning `j`: `a_ij / M`.
pub fn joint_prob(mx: &LexicalMatrix, i: usize, j: usize) -> Result<f64> {
    let m = total_links(mx)?;
    mx.check_word(i)?;
    mx.check_meaning(j)?;
    Ok(if mx.has_link(i, j) { 1.0 / m } else { 0.0 })
}

/// Marginal probability of word `i`: `mu_i / M`.
pub fn word_prob(mx: &LexicalMatrix, i: usize) -> Result<f64> {
    let m = total_links(mx)?;
    mx.check_word(i)?;
    Ok(f64::from(mx.word_degree(i)) / m)
}

/// Word entropy `H(S) = log M - (1/M) sum mu_i log mu_i`, in bits.
pub fn entropy_words(mx: &LexicalMatrix) -> Result<f64> {
    let m = total_links(mx)?;
    Ok(m.log2() - mx.sum_mu_log() / m)
}

/// Conditional word entropy `H(S|R) = (1/M) sum omega_j log omega_j`, in
/// bits.
pub fn cond_entropy_words(mx: &LexicalMatrix) -> Result<f64> {
    let m = total_links(mx)?;
    Ok(mx.sum_omega_log() / m)
}

/// Mutual information `I(S,R) = log M - (1/M)(sum mu log mu + sum omega log
/// omega)`, in bits.
pub fn mutual_info(mx: &LexicalMatrix) -> Result<f64> {
    let m = total_links(mx)?;
    Ok(m.log2() - (mx.sum_mu_log() + mx.sum_omega_log()) / m)
}

/// Mean code length `L(S)` of an optimal binary prefix code over the linked
/// words, weighted by their probabilities.
///
/// The Huffman construction runs on the integer degrees, accumulating the
/// weight of every merge; that running total equals `sum mu_i * l_i`
/// exactly, so the only rounding happens in the final division by M. A lone
/// linked word is assigned length 1 rather than 0, keeping the code uniquely
/// decipherable; that puts `L(S)` exactly at the `H(S) + 1` boundary.
pub fn code_length(mx: &LexicalMatrix) -> Result<f64> {
    let m = total_links(mx)?;
    let mut heap: BinaryHeap<Reverse<(u64, u64)>> = mx
        .word_degrees()
        .iter()
        .filter(|&&d| d > 0)
        .enumerate()
        .map(|(order, &d)| Reverse((u64::from(d), order as u64)))
        .collect();
    if heap.len() == 1 {
        return Ok(1.0);
    }
    let mut tiebreak = heap.len() as u64;
    let mut weighted_total = 0u64;
    while heap.len() > 1 {
        let Reverse((w1, _)) = heap.pop().unwrap();
        let Reverse((w2, _)) = heap.pop().unwrap();
        weighted_total += w1 + w2;
        heap.push(Reverse((w1 + w2, tiebreak)));
        tiebreak += 1;
    }
    Ok(weighted_total as f64 / m)
}

/// Combined cost `(1 - 2*lambda) H(S) + lambda H(S|R)`, in bits.
pub fn omega_cost(mx: &LexicalMatrix, lambda: Lambda) -> Result<f64> {
    let l = lambda.value();
    Ok((1.0 - 2.0 * l) * entropy_words(mx)? + l * cond_entropy_words(mx)?)
}

/// One-stop report. Code length is optional because it is the only measure
/// that is not O(1).
pub fn report(
    mx: &LexicalMatrix,
    lambda: Option<Lambda>,
    with_code_length: bool,
) -> Result<MeasureReport> {
    let h_s = entropy_words(mx)?;
    let h_s_given_r = cond_entropy_words(mx)?;
    Ok(MeasureReport {
        h_s,
        h_s_given_r,
        i_sr: mutual_info(mx)?,
        l_s: if with_code_length {
            Some(code_length(mx)?)
        } else {
            None
        },
        omega_cost: match lambda {
            Some(l) => Some(omega_cost(mx, l)?),
            None => None,
        },
        lambda: lambda.map(Lambda::value),
    })
}
