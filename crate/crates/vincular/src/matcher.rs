//! Occurrence detection for vincular patterns.
//!
//! Matching works block-by-block: the maximal adjacent blocks of the pattern
//! are matched as subfactors, combined left to right with strictly increasing
//! positions (letters of distinct blocks may be adjacent in the word — only
//! positions inside a block are forced consecutive), and a joint
//! order-isomorphism check ties the blocks together.
//!
//! All positions in this module are 1-based, matching the conventions of the
//! notation the occurrences are reported in.

use std::fmt;

use thiserror::Error;

use crate::pattern::Pattern;
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("role position {position} is outside the pattern (length {len})")]
    RolePositionOutOfRange { position: usize, len: usize },
}

/// An index tuple `i_1 < … < i_m` (1-based) witnessing a pattern embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    indices: Vec<usize>,
}

impl Occurrence {
    /// The 1-based word positions, strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The word letters at this occurrence, in position order.
    pub fn letters(&self, w: &Word) -> Vec<u32> {
        self.indices.iter().map(|&i| w.letter(i)).collect()
    }

    /// The letter playing the given 1-based pattern position.
    pub fn letter_at_role(&self, w: &Word, position: usize) -> u32 {
        w.letter(self.indices[position - 1])
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", fields.join(","))
    }
}

/// A constraint pinning one pattern role to a concrete letter value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// The smallest letter of the occurrence.
    SmallestLetter,
    /// The largest letter of the occurrence.
    LargestLetter,
    /// The letter matched at a fixed 1-based pattern position.
    Position(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoleConstraint {
    pub role: Role,
    pub value: u32,
}

/// Visitor-driven block combination. `pinned_end`, when set, forces the last
/// pattern position onto that word index. The visitor returns `true` to stop
/// the search early.
fn combine<F>(w: &Word, p: &Pattern, pinned_end: Option<usize>, visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let n = w.len();
    let m = p.len();
    if m > n {
        return false;
    }
    let blocks = p.blocks();
    // chosen word indices so far, one entry per matched pattern position
    let mut indices: Vec<usize> = Vec::with_capacity(m);

    fn consistent(w: &Word, p: &Pattern, indices: &[usize], new_from: usize) -> bool {
        // pairwise order-isomorphism between fresh letters and everything
        // chosen so far (including pairs inside the fresh block)
        for b in new_from..indices.len() {
            let wb = w.letter(indices[b]);
            let pb = p.letter(b + 1);
            for a in 0..b {
                let wa = w.letter(indices[a]);
                let pa = p.letter(a + 1);
                if wa.cmp(&wb) != pa.cmp(&pb) {
                    return false;
                }
            }
        }
        true
    }

    fn rec<F>(
        w: &Word,
        p: &Pattern,
        blocks: &[(usize, usize)],
        bi: usize,
        pinned_end: Option<usize>,
        indices: &mut Vec<usize>,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if bi == blocks.len() {
            return visit(indices);
        }
        let (_, len) = blocks[bi];
        let lo = indices.last().map_or(1, |&last| last + 1);
        // remaining blocks after this one still need room on the right
        let reserve: usize = blocks[bi + 1..].iter().map(|&(_, l)| l).sum();
        let hi = w.len().saturating_sub(len + reserve - 1);
        let last_block = bi == blocks.len() - 1;
        let (lo, hi) = match (last_block, pinned_end) {
            (true, Some(end)) => {
                if end < len || end - len + 1 < lo || end > w.len() {
                    return false;
                }
                (end - len + 1, end - len + 1)
            }
            _ => (lo, hi),
        };
        for start in lo..=hi {
            let base = indices.len();
            for offset in 0..len {
                indices.push(start + offset);
            }
            if consistent(w, p, indices, base)
                && rec(w, p, blocks, bi + 1, pinned_end, indices, visit)
            {
                return true;
            }
            indices.truncate(base);
        }
        false
    }

    rec(w, p, &blocks, 0, pinned_end, &mut indices, visit)
}

/// True iff `w` contains an occurrence of `p`.
pub fn contains(w: &Word, p: &Pattern) -> bool {
    combine(w, p, None, &mut |_| true)
}

/// True iff some occurrence of `p` has its last index exactly at `end`.
/// This is the incremental check behind prefix-pruned enumeration: appending
/// a letter to an avoider can only create occurrences ending at the new
/// position.
pub fn has_occurrence_ending_at(w: &Word, p: &Pattern, end: usize) -> bool {
    combine(w, p, Some(end), &mut |_| true)
}

/// All occurrences of `p` in `w`, in lexicographic order of index tuples.
pub fn find_occurrences(w: &Word, p: &Pattern) -> Vec<Occurrence> {
    let mut out = Vec::new();
    combine(w, p, None, &mut |indices| {
        out.push(Occurrence {
            indices: indices.to_vec(),
        });
        false
    });
    out
}

/// The occurrences whose constrained role letter equals the given value.
pub fn find_role_occurrences(
    w: &Word,
    p: &Pattern,
    c: RoleConstraint,
) -> Result<Vec<Occurrence>, MatchError> {
    if let Role::Position(pos) = c.role {
        if pos == 0 || pos > p.len() {
            return Err(MatchError::RolePositionOutOfRange {
                position: pos,
                len: p.len(),
            });
        }
    }
    Ok(find_occurrences(w, p)
        .into_iter()
        .filter(|occ| role_letter(w, occ, c.role) == c.value)
        .collect())
}

fn role_letter(w: &Word, occ: &Occurrence, role: Role) -> u32 {
    let letters = occ.letters(w);
    match role {
        Role::SmallestLetter => *letters.iter().min().unwrap(),
        Role::LargestLetter => *letters.iter().max().unwrap(),
        Role::Position(pos) => letters[pos - 1],
    }
}

/// `|find_occurrences(w, p)|`.
pub fn count_occurrences(w: &Word, p: &Pattern) -> usize {
    let mut count = 0;
    combine(w, p, None, &mut |_| {
        count += 1;
        false
    });
    count
}
