//! The binary word-meaning matrix with incrementally maintained degree
//! counts and entropy accumulators.
//!
//! A `LexicalMatrix` is a bipartite adjacency over `vs_max` words and
//! `vr_max` meanings. Every mutation keeps four caches in sync: the word
//! degrees, the meaning degrees, the total link count, and the two
//! `sum k*log2(k)` accumulators that make all entropy measures O(1).

use std::fmt::Write as _;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// `k * log2(k)` with the convention `0 * log 0 = 0`.
pub(crate) fn xlog2x(k: u64) -> f64 {
    if k == 0 {
        0.0
    } else {
        let k = k as f64;
        k * k.log2()
    }
}

/// Change of `k * log2(k)` when a degree steps from `k` to `k + 1`.
pub(crate) fn degree_step(k: u64) -> f64 {
    xlog2x(k + 1) - xlog2x(k)
}

#[derive(Debug, Clone)]
pub struct LexicalMatrix {
    vs_max: usize,
    vr_max: usize,
    /// Row-major bitset, `words_per_row` u64 words per matrix row.
    bits: Vec<u64>,
    words_per_row: usize,
    mu: Vec<u32>,
    omega: Vec<u32>,
    m: u64,
    sum_mu_log: f64,
    sum_omega_log: f64,
}

/// Structural equality: dimensions and adjacency only. The float
/// accumulators are derived caches and deliberately excluded.
impl PartialEq for LexicalMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.vs_max == other.vs_max && self.vr_max == other.vr_max && self.bits == other.bits
    }
}

impl Eq for LexicalMatrix {}

impl LexicalMatrix {
    /// An empty matrix over `vs_max` potential words and `vr_max` potential
    /// meanings.
    pub fn new(vs_max: usize, vr_max: usize) -> Result<Self> {
        if vs_max == 0 || vr_max == 0 {
            return Err(Error::InvalidDimension { vs_max, vr_max });
        }
        let words_per_row = vr_max.div_ceil(64);
        Ok(LexicalMatrix {
            vs_max,
            vr_max,
            bits: vec![0; vs_max * words_per_row],
            words_per_row,
            mu: vec![0; vs_max],
            omega: vec![0; vr_max],
            m: 0,
            sum_mu_log: 0.0,
            sum_omega_log: 0.0,
        })
    }

    /// Builds a matrix from the low `vs_max * vr_max` bits of `bits`, cell
    /// `(i, j)` at bit `i * vr_max + j`. Degrees and accumulators are
    /// computed from scratch, which makes this the natural entry point for
    /// exhaustive enumeration. Requires `vs_max * vr_max <= 64`; higher bits
    /// are ignored.
    pub fn from_bits(vs_max: usize, vr_max: usize, bits: u64) -> Result<Self> {
        if vs_max == 0 || vr_max == 0 {
            return Err(Error::InvalidDimension { vs_max, vr_max });
        }
        let cells = vs_max * vr_max;
        if cells > 64 {
            return Err(Error::EnumerationTooLarge { cells, cap: 64 });
        }
        let mut mx = LexicalMatrix::new(vs_max, vr_max)?;
        for i in 0..vs_max {
            for j in 0..vr_max {
                if bits >> (i * vr_max + j) & 1 == 1 {
                    mx.set_bit(i, j);
                    mx.mu[i] += 1;
                    mx.omega[j] += 1;
                    mx.m += 1;
                }
            }
        }
        let (smu, som) = mx.recompute_accumulators();
        mx.sum_mu_log = smu;
        mx.sum_omega_log = som;
        Ok(mx)
    }

    pub fn vs_max(&self) -> usize {
        self.vs_max
    }

    pub fn vr_max(&self) -> usize {
        self.vr_max
    }

    /// Total number of links M.
    pub fn link_count(&self) -> u64 {
        self.m
    }

    /// Degree of word `i`.
    pub fn word_degree(&self, i: usize) -> u32 {
        self.mu[i]
    }

    /// Degree of meaning `j`.
    pub fn meaning_degree(&self, j: usize) -> u32 {
        self.omega[j]
    }

    pub fn word_degrees(&self) -> &[u32] {
        &self.mu
    }

    pub fn meaning_degrees(&self) -> &[u32] {
        &self.omega
    }

    /// Cached sum of `mu_i * log2(mu_i)` in bits.
    pub fn sum_mu_log(&self) -> f64 {
        self.sum_mu_log
    }

    /// Cached sum of `omega_j * log2(omega_j)` in bits.
    pub fn sum_omega_log(&self) -> f64 {
        self.sum_omega_log
    }

    fn bit_index(&self, i: usize, j: usize) -> (usize, u64) {
        (i * self.words_per_row + j / 64, 1u64 << (j % 64))
    }

    fn set_bit(&mut self, i: usize, j: usize) {
        let (w, b) = self.bit_index(i, j);
        self.bits[w] |= b;
    }

    fn clear_bit(&mut self, i: usize, j: usize) {
        let (w, b) = self.bit_index(i, j);
        self.bits[w] &= !b;
    }

    pub fn has_link(&self, i: usize, j: usize) -> bool {
        let (w, b) = self.bit_index(i, j);
        self.bits[w] & b != 0
    }

    pub(crate) fn check_word(&self, i: usize) -> Result<()> {
        if i >= self.vs_max {
            return Err(Error::WordOutOfRange {
                index: i,
                vs_max: self.vs_max,
            });
        }
        Ok(())
    }

    pub(crate) fn check_meaning(&self, j: usize) -> Result<()> {
        if j >= self.vr_max {
            return Err(Error::MeaningOutOfRange {
                index: j,
                vr_max: self.vr_max,
            });
        }
        Ok(())
    }

    /// Adds the link `(i, j)`, updating degrees and accumulators in O(1).
    pub fn add_link(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_word(i)?;
        self.check_meaning(j)?;
        if self.has_link(i, j) {
            return Err(Error::DuplicateLink {
                word: i,
                meaning: j,
            });
        }
        self.set_bit(i, j);
        self.sum_mu_log += degree_step(u64::from(self.mu[i]));
        self.sum_omega_log += degree_step(u64::from(self.omega[j]));
        self.mu[i] += 1;
        self.omega[j] += 1;
        self.m += 1;
        Ok(())
    }

    /// Removes the link `(i, j)`; exact inverse of `add_link` on degrees and
    /// the adjacency, and inverse on the accumulators up to float rounding.
    pub fn remove_link(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_word(i)?;
        self.check_meaning(j)?;
        if !self.has_link(i, j) {
            return Err(Error::MissingLink {
                word: i,
                meaning: j,
            });
        }
        self.clear_bit(i, j);
        self.mu[i] -= 1;
        self.omega[j] -= 1;
        self.m -= 1;
        self.sum_mu_log -= degree_step(u64::from(self.mu[i]));
        self.sum_omega_log -= degree_step(u64::from(self.omega[j]));
        Ok(())
    }

    /// `(V_S, V_R)`: how many words and meanings have at least one link.
    pub fn linked_counts(&self) -> (usize, usize) {
        let vs = self.mu.iter().filter(|&&d| d > 0).count();
        let vr = self.omega.iter().filter(|&&d| d > 0).count();
        (vs, vr)
    }

    /// Smallest index of an unlinked word, i.e. the slot where the next new
    /// word arrives.
    pub fn next_unlinked_word(&self) -> Result<usize> {
        self.mu
            .iter()
            .position(|&d| d == 0)
            .ok_or(Error::VocabularyFull {
                vs_max: self.vs_max,
            })
    }

    /// Smallest index of an unlinked meaning, if any.
    pub fn first_unlinked_meaning(&self) -> Option<usize> {
        self.omega.iter().position(|&d| d == 0)
    }

    /// From-scratch `(sum mu*log2(mu), sum omega*log2(omega))`. This is the
    /// oracle the incremental caches are tested against.
    pub fn recompute_accumulators(&self) -> (f64, f64) {
        let smu = self.mu.iter().map(|&d| xlog2x(u64::from(d))).sum();
        let som = self.omega.iter().map(|&d| xlog2x(u64::from(d))).sum();
        (smu, som)
    }

    /// All links in ascending `(word, meaning)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m as usize);
        for i in 0..self.vs_max {
            for j in 0..self.vr_max {
                if self.has_link(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Serializes to the plain text format: a `"<vs_max> <vr_max>"` header
    /// followed by one `"<i> <j>"` line per link in ascending order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vs_max, self.vr_max);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    /// Parses the text format produced by `to_edge_list`. Blank lines and
    /// lines starting with `#` are ignored; anything else malformed is
    /// reported with its line number.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut mx: Option<LexicalMatrix> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected two integers, got {line:?}"),
                    })
                }
            };
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid integer {s:?}"),
                })
            };
            let (a, b) = (parse(a)?, parse(b)?);
            match mx.as_mut() {
                None => {
                    mx = Some(LexicalMatrix::new(a, b).map_err(|e| Error::Parse {
                        line: line_no,
                        message: e.to_string(),
                    })?);
                }
                Some(mx) => {
                    mx.add_link(a, b).map_err(|e| Error::Parse {
                        line: line_no,
                        message: e.to_string(),
                    })?;
                }
            }
        }
        mx.ok_or(Error::Parse {
            line: 1,
            message: "missing \"<vs_max> <vr_max>\" header".into(),
        })
    }
}

impl Serialize for LexicalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LexicalMatrix", 3)?;
        st.serialize_field("vs_max", &self.vs_max)?;
        st.serialize_field("vr_max", &self.vr_max)?;
        st.serialize_field("links", &self.edges())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SplitMix64;

    const TOL: f64 = 1e-9;

    /// Fig. 1(a)-style 2x4 fixture: two words on two separate meanings.
    fn fig1a() -> LexicalMatrix {
        let mut mx = LexicalMatrix::new(2, 4).unwrap();
        mx.add_link(0, 0).unwrap();
        mx.add_link(1, 1).unwrap();
        mx
    }

    /// Fig. 1(b)-style 2x4 fixture: each word holds two meanings exclusively.
    fn fig1b() -> LexicalMatrix {
        let mut mx = LexicalMatrix::new(2, 4).unwrap();
        for (i, j) in [(0, 0), (0, 1), (1, 2), (1, 3)] {
            mx.add_link(i, j).unwrap();
        }
        mx
    }

    #[test]
    fn new_matrix_is_empty() {
        let mx = LexicalMatrix::new(2, 4).unwrap();
        assert_eq!(mx.link_count(), 0);
        assert_eq!(mx.word_degrees(), &[0, 0]);
        assert_eq!(mx.meaning_degrees(), &[0, 0, 0, 0]);
        assert_eq!(mx.sum_mu_log(), 0.0);
        assert_eq!(mx.sum_omega_log(), 0.0);

        assert_eq!(LexicalMatrix::new(1, 1).unwrap().link_count(), 0);

        // the codon-sized case: 64 words over 20 meanings
        let big = LexicalMatrix::new(64, 20).unwrap();
        assert_eq!(big.vs_max(), 64);
        assert_eq!(big.vr_max(), 20);
        assert_eq!(big.link_count(), 0);
    }

    #[test]
    fn new_matrix_rejects_zero_dimensions() {
        assert!(matches!(
            LexicalMatrix::new(0, 4),
            Err(Error::InvalidDimension { .. })
        ));
        assert!(matches!(
            LexicalMatrix::new(4, 0),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn add_link_updates_degrees() {
        let mx = fig1a();
        assert_eq!(mx.link_count(), 2);
        assert_eq!(mx.word_degrees(), &[1, 1]);
        assert_eq!(mx.meaning_degrees(), &[1, 1, 0, 0]);
    }

    #[test]
    fn add_link_on_one_by_one_keeps_accumulators_zero() {
        let mut mx = LexicalMatrix::new(1, 1).unwrap();
        mx.add_link(0, 0).unwrap();
        assert_eq!(mx.sum_mu_log(), 0.0);
        assert_eq!(mx.sum_omega_log(), 0.0);
    }

    #[test]
    fn two_more_links_reach_the_doubled_configuration() {
        let mut mx = fig1a();
        mx.add_link(0, 2).unwrap();
        mx.add_link(1, 3).unwrap();
        assert_eq!(mx.link_count(), 4);
        assert_eq!(mx.word_degrees(), &[2, 2]);
        assert_eq!(mx.meaning_degrees(), &[1, 1, 1, 1]);
    }

    #[test]
    fn add_link_errors() {
        let mut mx = fig1a();
        assert_eq!(
            mx.add_link(0, 0),
            Err(Error::DuplicateLink {
                word: 0,
                meaning: 0
            })
        );
        assert!(matches!(
            mx.add_link(2, 0),
            Err(Error::WordOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            mx.add_link(0, 4),
            Err(Error::MeaningOutOfRange { index: 4, .. })
        ));
    }

    #[test]
    fn remove_link_inverts_add() {
        let mut mx = fig1b();
        mx.remove_link(0, 1).unwrap();
        mx.remove_link(1, 3).unwrap();
        let plain = {
            let mut p = LexicalMatrix::new(2, 4).unwrap();
            p.add_link(0, 0).unwrap();
            p.add_link(1, 2).unwrap();
            p
        };
        assert_eq!(mx, plain);
        let (smu, som) = mx.recompute_accumulators();
        assert!((mx.sum_mu_log() - smu).abs() < TOL);
        assert!((mx.sum_omega_log() - som).abs() < TOL);
    }

    #[test]
    fn remove_last_link_restores_exact_zero() {
        let mut mx = LexicalMatrix::new(1, 1).unwrap();
        mx.add_link(0, 0).unwrap();
        mx.remove_link(0, 0).unwrap();
        assert_eq!(mx.link_count(), 0);
        assert_eq!(mx.sum_mu_log(), 0.0);
        assert_eq!(mx.sum_omega_log(), 0.0);
    }

    #[test]
    fn remove_link_requires_presence() {
        let mut mx = fig1a();
        assert_eq!(
            mx.remove_link(0, 3),
            Err(Error::MissingLink {
                word: 0,
                meaning: 3
            })
        );
    }

    #[test]
    fn add_then_remove_round_trips() {
        let mut mx = fig1b();
        let before = mx.clone();
        mx.add_link(0, 2).unwrap();
        mx.remove_link(0, 2).unwrap();
        assert_eq!(mx, before);
        assert!((mx.sum_mu_log() - before.sum_mu_log()).abs() < TOL);
        assert!((mx.sum_omega_log() - before.sum_omega_log()).abs() < TOL);
    }

    #[test]
    fn linked_counts_follow_degrees() {
        assert_eq!(fig1a().linked_counts(), (2, 2));
        assert_eq!(fig1b().linked_counts(), (2, 4));
        assert_eq!(LexicalMatrix::new(3, 3).unwrap().linked_counts(), (0, 0));
    }

    #[test]
    fn next_unlinked_word_scans_from_zero() {
        let mut mx = LexicalMatrix::new(3, 4).unwrap();
        mx.add_link(0, 0).unwrap();
        mx.add_link(1, 1).unwrap();
        assert_eq!(mx.next_unlinked_word().unwrap(), 2);

        assert_eq!(
            fig1a().next_unlinked_word(),
            Err(Error::VocabularyFull { vs_max: 2 })
        );

        let empty = LexicalMatrix::new(2, 4).unwrap();
        assert_eq!(empty.next_unlinked_word().unwrap(), 0);
    }

    #[test]
    fn recompute_matches_known_values() {
        let (smu, som) = fig1b().recompute_accumulators();
        assert!((smu - 4.0).abs() < TOL); // two words of degree 2
        assert!(som.abs() < TOL); // four meanings of degree 1

        let (smu, som) = LexicalMatrix::new(2, 2).unwrap().recompute_accumulators();
        assert_eq!((smu, som), (0.0, 0.0));
    }

    #[test]
    fn random_walk_keeps_caches_in_sync() {
        let mut rng = SplitMix64::new(0x5eed);
        let mut mx = LexicalMatrix::new(4, 4).unwrap();
        for _ in 0..50 {
            let i = rng.next_below(4) as usize;
            let j = rng.next_below(4) as usize;
            if mx.has_link(i, j) {
                mx.remove_link(i, j).unwrap();
            } else {
                mx.add_link(i, j).unwrap();
            }
            let (smu, som) = mx.recompute_accumulators();
            assert!((mx.sum_mu_log() - smu).abs() < TOL);
            assert!((mx.sum_omega_log() - som).abs() < TOL);
            let mu_total: u64 = mx.word_degrees().iter().map(|&d| u64::from(d)).sum();
            let om_total: u64 = mx.meaning_degrees().iter().map(|&d| u64::from(d)).sum();
            assert_eq!(mu_total, mx.link_count());
            assert_eq!(om_total, mx.link_count());
        }
    }

    #[test]
    fn edge_list_text_round_trips() {
        let mx = fig1a();
        assert_eq!(mx.to_edge_list(), "2 4\n0 0\n1 1\n");
        assert_eq!(
            LexicalMatrix::from_edge_list(&mx.to_edge_list()).unwrap(),
            mx
        );

        let commented = "# a comment\n2 4\n\n0 0\n# another\n1 1\n";
        assert_eq!(LexicalMatrix::from_edge_list(commented).unwrap(), mx);
    }

    #[test]
    fn parse_rejects_out_of_range_edges() {
        let err = LexicalMatrix::from_edge_list("2 4\n5 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_duplicates_and_garbage() {
        let err = LexicalMatrix::from_edge_list("2 4\n0 0\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");

        let err = LexicalMatrix::from_edge_list("2 4\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = LexicalMatrix::from_edge_list("2 4\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = LexicalMatrix::from_edge_list("").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn from_bits_matches_incremental_construction() {
        // mask 0b1001 on 2x2 is links (0,0) and (1,1)
        let mx = LexicalMatrix::from_bits(2, 2, 0b1001).unwrap();
        let mut inc = LexicalMatrix::new(2, 2).unwrap();
        inc.add_link(0, 0).unwrap();
        inc.add_link(1, 1).unwrap();
        assert_eq!(mx, inc);
        assert!((mx.sum_mu_log() - inc.sum_mu_log()).abs() < TOL);

        assert!(matches!(
            LexicalMatrix::from_bits(9, 9, 0),
            Err(Error::EnumerationTooLarge { cells: 81, cap: 64 })
        ));
    }
}
