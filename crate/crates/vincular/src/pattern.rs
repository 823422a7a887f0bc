//! Vincular (dashed) patterns: a reduced word plus an adjacency set.
//!
//! A pattern `(σ, X)` with `X ⊆ [m−1]` requires, in any occurrence, that the
//! letters matched at positions `j` and `j+1` be adjacent in the word for
//! every `j ∈ X`. Textual notation writes a dash where adjacency is *not*
//! required: `(1342, {2})` is `1-34-2`. Blocks between dashes are matched as
//! subfactors.
//!
//! Invariants enforced at construction:
//! - the letter sequence is a reduced word (every value in `[1, max]` occurs);
//! - the adjacency set only contains positions `1 ≤ j ≤ m−1`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern text is empty")]
    Empty,
    #[error("invalid character {found:?} at position {position} in pattern text")]
    InvalidChar { found: char, position: usize },
    #[error("dash at position {position} is not between two digits")]
    MisplacedDash { position: usize },
    #[error("letters {letters:?} do not form a reduced word (value {missing} is missing)")]
    NotReduced { letters: Vec<u32>, missing: u32 },
    #[error("adjacency position {position} is outside [1, {max}]")]
    AdjacencyOutOfRange { position: usize, max: usize },
}

/// A vincular pattern: reduced letters plus the set of adjacent positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    letters: Vec<u32>,
    adjacencies: BTreeSet<usize>,
}

impl Pattern {
    /// Builds a pattern, validating reducedness and the adjacency range.
    /// Non-reduced letter sequences are rejected rather than auto-reduced,
    /// so a caller passing `13-4` finds out immediately.
    pub fn new(letters: Vec<u32>, adjacencies: BTreeSet<usize>) -> Result<Self, PatternError> {
        if letters.is_empty() {
            return Err(PatternError::Empty);
        }
        let max = *letters.iter().max().unwrap();
        for v in 1..=max {
            if !letters.contains(&v) {
                return Err(PatternError::NotReduced {
                    letters,
                    missing: v,
                });
            }
        }
        for &j in &adjacencies {
            if j == 0 || j >= letters.len() {
                return Err(PatternError::AdjacencyOutOfRange {
                    position: j,
                    max: letters.len().saturating_sub(1),
                });
            }
        }
        Ok(Pattern {
            letters,
            adjacencies,
        })
    }

    /// A subword pattern: every position adjacent (no dashes).
    pub fn subword(letters: Vec<u32>) -> Result<Self, PatternError> {
        let m = letters.len();
        Pattern::new(letters, (1..m).collect())
    }

    /// Parses dash notation: digit blocks (digits 1–9) separated by single
    /// dashes, e.g. `1-34-2`.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        if text.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut letters = Vec::new();
        let mut adjacencies = BTreeSet::new();
        let mut prev_was_digit = false;
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '1'..='9' => {
                    if prev_was_digit {
                        adjacencies.insert(letters.len());
                    }
                    letters.push(ch.to_digit(10).unwrap());
                    prev_was_digit = true;
                }
                '-' => {
                    if !prev_was_digit {
                        return Err(PatternError::MisplacedDash { position: i + 1 });
                    }
                    prev_was_digit = false;
                }
                other => {
                    return Err(PatternError::InvalidChar {
                        found: other,
                        position: i + 1,
                    })
                }
            }
        }
        if !prev_was_digit {
            return Err(PatternError::MisplacedDash {
                position: text.chars().count(),
            });
        }
        Pattern::new(letters, adjacencies)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    /// Largest letter value (the ℓ of the reduced word).
    pub fn max_letter(&self) -> u32 {
        *self.letters.iter().max().unwrap()
    }

    pub fn adjacencies(&self) -> &BTreeSet<usize> {
        &self.adjacencies
    }

    /// True when all positions are adjacent (a subword pattern).
    pub fn is_subword(&self) -> bool {
        self.adjacencies.len() == self.len() - 1
    }

    /// Maximal adjacent blocks as (1-based start position, length) pairs.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for j in 1..self.len() {
            if !self.adjacencies.contains(&j) {
                out.push((start, j - start + 1));
                start = j + 1;
            }
        }
        out.push((start, self.len() - start + 1));
        out
    }

    /// The block-length composition (s1, …, sr) induced by the dashes.
    pub fn dash_type(&self) -> Vec<usize> {
        self.blocks().iter().map(|&(_, len)| len).collect()
    }

    /// Letters and dashes read together in reverse order: position `j` is
    /// adjacent in the image iff `m−j` is adjacent in the original.
    pub fn reverse(&self) -> Pattern {
        let m = self.len();
        let mut letters = self.letters.clone();
        letters.reverse();
        let adjacencies = self.adjacencies.iter().map(|&j| m - j).collect();
        Pattern {
            letters,
            adjacencies,
        }
    }

    /// Letter `v` replaced by `ℓ + 1 − v`; dash structure unchanged.
    pub fn complement(&self) -> Pattern {
        let l = self.max_letter();
        let letters = self.letters.iter().map(|v| l + 1 - v).collect();
        Pattern {
            letters,
            adjacencies: self.adjacencies.clone(),
        }
    }

    /// The pattern's letters as a word over `[ℓ]`.
    pub fn as_word(&self) -> Word {
        Word::new(self.letters.clone(), self.max_letter()).expect("pattern letters are in range")
    }
}

impl fmt::Display for Pattern {
    /// Dash notation; inverse of [`Pattern::parse`] for letters ≤ 9. Larger
    /// letters fall back to comma-separated blocks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single_digit = self.max_letter() <= 9;
        let mut first_block = true;
        for (start, len) in self.blocks() {
            if !first_block {
                write!(f, "-")?;
            }
            first_block = false;
            for (offset, &v) in self.letters[start - 1..start - 1 + len].iter().enumerate() {
                if single_digit {
                    write!(f, "{v}")?;
                } else {
                    if offset > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
            }
        }
        Ok(())
    }
}

/// Every pattern of length `m` whose adjacency set is determined by the
/// block-length composition `dash_type`: the letters range over all reduced
/// words of length m (every surjection image `[ℓ]`, ℓ ≤ m), in lexicographic
/// order.
pub fn all_patterns(m: usize, dash_type: &[usize]) -> Result<Vec<Pattern>, PatternError> {
    assert!(m >= 1, "pattern length must be at least 1");
    assert_eq!(
        dash_type.iter().sum::<usize>(),
        m,
        "composition parts must sum to the pattern length"
    );
    let mut adjacencies = BTreeSet::new();
    let mut boundary = 0;
    for &part in dash_type {
        for j in (boundary + 1)..(boundary + part) {
            adjacencies.insert(j);
        }
        boundary += part;
    }

    let mut out = Vec::new();
    let mut letters = vec![1u32; m];
    loop {
        if is_reduced(&letters) {
            out.push(Pattern {
                letters: letters.clone(),
                adjacencies: adjacencies.clone(),
            });
        }
        // next word over [m]^m in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if letters[i - 1] < m as u32 {
                letters[i - 1] += 1;
                for v in letters[i..].iter_mut() {
                    *v = 1;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn is_reduced(letters: &[u32]) -> bool {
    let max = *letters.iter().max().unwrap();
    (1..=max).all(|v| letters.contains(&v))
}
