//! k-ary words: finite sequences over the alphabet `[k] = {1, …, k}`.

use std::fmt;

use thiserror::Error;

/// Error raised when constructing or parsing a [`Word`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {letter} at position {position} is outside the alphabet [1, {k}]")]
    LetterOutOfRange {
        letter: u32,
        position: usize,
        k: u32,
    },
    #[error("invalid character {found:?} at position {position} in word text")]
    InvalidChar { found: char, position: usize },
    #[error("empty letter field at position {position} in word text")]
    EmptyField { position: usize },
}

/// A word over the alphabet `[k]`. Letters are 1-based; the empty word is a
/// member of every `[k]^0` (including k = 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    k: u32,
}

impl Word {
    /// Builds a word, checking every letter lies in `[1, k]`.
    pub fn new(letters: Vec<u32>, k: u32) -> Result<Self, WordError> {
        for (i, &a) in letters.iter().enumerate() {
            if a == 0 || a > k {
                return Err(WordError::LetterOutOfRange {
                    letter: a,
                    position: i + 1,
                    k,
                });
            }
        }
        Ok(Word { letters, k })
    }

    /// The empty word over `[k]`.
    pub fn empty(k: u32) -> Self {
        Word { letters: Vec::new(), k }
    }

    /// Parses CLI/file notation: a plain digit string for k ≤ 9, or
    /// comma-separated integers otherwise (`"2153"` or `"10,2,15"`).
    pub fn parse(text: &str, k: u32) -> Result<Self, WordError> {
        if text.is_empty() {
            return Ok(Word::empty(k));
        }
        let letters = if text.contains(',') {
            let mut out = Vec::new();
            let mut pos = 1;
            for field in text.split(',') {
                if field.is_empty() {
                    return Err(WordError::EmptyField { position: pos });
                }
                let v: u32 = field.parse().map_err(|_| WordError::InvalidChar {
                    found: field.chars().next().unwrap_or(','),
                    position: pos,
                })?;
                out.push(v);
                pos += field.len() + 1;
            }
            out
        } else {
            let mut out = Vec::new();
            for (i, ch) in text.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) if d >= 1 => out.push(d),
                    _ => {
                        return Err(WordError::InvalidChar {
                            found: ch,
                            position: i + 1,
                        })
                    }
                }
            }
            out
        };
        Word::new(letters, k)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Alphabet size k.
    pub fn alphabet_size(&self) -> u32 {
        self.k
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    /// The reduction: the i-th smallest letter value is relabelled i, giving
    /// a word over `[ℓ]` where ℓ is the number of distinct letters. The empty
    /// word reduces to the empty word over alphabet 0.
    pub fn reduce(&self) -> Word {
        let mut distinct: Vec<u32> = self.letters.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let letters = self
            .letters
            .iter()
            .map(|a| distinct.binary_search(a).unwrap() as u32 + 1)
            .collect();
        Word {
            letters,
            k: distinct.len() as u32,
        }
    }

    /// Letter order reversed; alphabet unchanged.
    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, k: self.k }
    }

    /// Each letter `v` replaced by `k + 1 − v`; alphabet unchanged.
    pub fn complement(&self) -> Word {
        let letters = self.letters.iter().map(|v| self.k + 1 - v).collect();
        Word { letters, k: self.k }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            for a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let fields: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", fields.join(","))
        }
    }
}
