//! Property tests: structural invariants under arbitrary edit sequences and
//! the algebraic identities the measures must satisfy on arbitrary
//! matrices.

use proptest::prelude::*;

use lexinfo::matrix::LexicalMatrix;
use lexinfo::measures::{
    code_length, cond_entropy_words, entropy_words, mutual_info, omega_cost, Lambda,
};
use lexinfo::search::rank_frequency;

const TOL: f64 = 1e-9;

/// Random dimensions plus a cell toggle sequence.
fn edit_script() -> impl Strategy<Value = (usize, usize, Vec<(usize, usize)>)> {
    (1..=6usize, 1..=6usize).prop_flat_map(|(vs, vr)| {
        let cells = proptest::collection::vec((0..vs, 0..vr), 0..80);
        (Just(vs), Just(vr), cells)
    })
}

/// Random non-empty matrix up to 5x5.
fn nonempty_matrix() -> impl Strategy<Value = LexicalMatrix> {
    (1..=5usize, 1..=5usize)
        .prop_flat_map(|(vs, vr)| {
            let mask = 1u64..(1u64 << (vs * vr));
            (Just(vs), Just(vr), mask)
        })
        .prop_map(|(vs, vr, mask)| LexicalMatrix::from_bits(vs, vr, mask).unwrap())
}

proptest! {
    /// Degrees, link totals and both accumulators stay consistent under any
    /// toggle sequence, and toggling twice is the identity.
    #[test]
    fn edits_preserve_invariants((vs, vr, script) in edit_script()) {
        let mut mx = LexicalMatrix::new(vs, vr).unwrap();
        for (i, j) in script {
            let before = mx.clone();
            if mx.has_link(i, j) {
                mx.remove_link(i, j).unwrap();
                mx.add_link(i, j).unwrap();
            } else {
                mx.add_link(i, j).unwrap();
                mx.remove_link(i, j).unwrap();
            }
            prop_assert_eq!(&mx, &before);
            prop_assert!((mx.sum_mu_log() - before.sum_mu_log()).abs() < TOL);

            // leave the toggle applied for the next round
            if mx.has_link(i, j) {
                mx.remove_link(i, j).unwrap();
            } else {
                mx.add_link(i, j).unwrap();
            }
            let (smu, som) = mx.recompute_accumulators();
            prop_assert!((mx.sum_mu_log() - smu).abs() < TOL);
            prop_assert!((mx.sum_omega_log() - som).abs() < TOL);
            let mu_total: u64 = mx.word_degrees().iter().map(|&d| u64::from(d)).sum();
            let om_total: u64 = mx.meaning_degrees().iter().map(|&d| u64::from(d)).sum();
            prop_assert_eq!(mu_total, mx.link_count());
            prop_assert_eq!(om_total, mx.link_count());
        }
    }

    /// Serialization round-trips bit-exactly on the adjacency.
    #[test]
    fn edge_list_round_trips(mx in nonempty_matrix()) {
        let parsed = LexicalMatrix::from_edge_list(&mx.to_edge_list()).unwrap();
        prop_assert_eq!(parsed, mx);
    }

    /// The information identity and both cost expressions agree everywhere.
    #[test]
    fn measure_identities(mx in nonempty_matrix(), lambda in 0.0..=1.0f64) {
        let h = entropy_words(&mx).unwrap();
        let hsr = cond_entropy_words(&mx).unwrap();
        let i = mutual_info(&mx).unwrap();
        prop_assert!((i - (h - hsr)).abs() < TOL);
        prop_assert!(h >= -TOL && hsr >= -TOL && i >= -TOL);
        prop_assert!(h <= (mx.vs_max() as f64).log2() + TOL);

        let lambda = Lambda::new(lambda).unwrap();
        let cost = omega_cost(&mx, lambda).unwrap();
        let alt = -lambda.value() * i + (1.0 - lambda.value()) * h;
        prop_assert!((cost - alt).abs() < TOL);
    }

    /// The coding chain holds on arbitrary matrices.
    #[test]
    fn code_length_chain(mx in nonempty_matrix()) {
        let h = entropy_words(&mx).unwrap();
        let i = mutual_info(&mx).unwrap();
        let l = code_length(&mx).unwrap();
        prop_assert!(i <= h + TOL);
        prop_assert!(h <= l + TOL);
        prop_assert!(l < h + 1.0 + TOL);
    }

    /// Rank frequencies are a descending probability distribution.
    #[test]
    fn rank_frequency_is_sorted_distribution(mx in nonempty_matrix()) {
        let rf = rank_frequency(&mx).unwrap();
        prop_assert!((rf.iter().sum::<f64>() - 1.0).abs() < TOL);
        prop_assert!(rf.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(rf.iter().all(|&p| p > 0.0));
    }
}
