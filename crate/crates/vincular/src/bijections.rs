//! Explicit bijections between avoidance sets of equivalent patterns.
//!
//! Three constructions are implemented, each with its inverse and a stage
//! trace:
//!
//! - [`thm21_map`]: lifts a subword equivalence τ ∼ ρ (realized by a string
//!   rewriter g) to τ-(σ+s) ∼ ρ-(σ+s) for a monotonic subword σ. Governing
//!   occurrences of σ are located right to left by decreasing least letter;
//!   g is applied to the maximal strings over the governed sub-alphabet in
//!   each region between them.
//! - [`thm25_map`]: realizes σ-r(r+1) ∼ σ-(r+1)r for any subword σ with
//!   largest letter r, by migrating copies of a stage value to the front of
//!   each maximal high-letter string right of the stage's leftmost governing
//!   occurrence. Stage values strictly increase, so at most k stages run.
//! - [`thm33_map_134`] / [`thm33_map_124`] / [`thm33_map_142`]: the three
//!   swap-based maps realizing 134-2 ∼ 143-2, 124-3 ∼ 214-3 and
//!   142-3 ∼ 241-3. Each works value class by value class, repeatedly
//!   swapping one letter of an offending occurrence with a neighbour until
//!   the class is clean; these preserve the letter multiset.
//!
//! Maps reject inputs outside their stated domain (the word must avoid the
//! source pattern) rather than extending arbitrarily. "Leftmost/rightmost
//! occurrence" always refers to the matcher's lexicographic order on full
//! index tuples.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::matcher::{contains, find_occurrences, find_role_occurrences, Role, RoleConstraint};
use crate::pattern::Pattern;
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectError {
    #[error("word contains the source pattern {pattern} at {occurrence}; the map is only defined on avoiders")]
    DomainViolation { pattern: String, occurrence: String },
    #[error("sigma must be a non-empty monotonic subword, got {sigma}")]
    NonMonotonicSigma { sigma: String },
    #[error("{role} must be a subword pattern (no dashes), got {pattern}")]
    NotASubword { role: &'static str, pattern: String },
    #[error("tau and rho must share their largest letter, got {tau_max} and {rho_max}")]
    LargestLetterMismatch { tau_max: u32, rho_max: u32 },
    #[error("rewriter {name} violates its contract: {detail}")]
    RewriterContract { name: String, detail: String },
    #[error("stage loop failed to terminate within {bound} steps (internal invariant)")]
    RunawayStageLoop { bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "forward"),
            Direction::Inverse => write!(f, "inverse"),
        }
    }
}

/// A length-preserving bijection on words over a bounded alphabet, used to
/// realize a subword equivalence τ ∼ ρ inside governed strings.
pub struct StringRewriter {
    name: String,
    forward: Box<dyn Fn(&Word) -> Word + Send + Sync>,
    inverse: Box<dyn Fn(&Word) -> Word + Send + Sync>,
}

impl fmt::Debug for StringRewriter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StringRewriter({})", self.name)
    }
}

impl StringRewriter {
    pub fn new<F, G>(name: &str, forward: F, inverse: G) -> Self
    where
        F: Fn(&Word) -> Word + Send + Sync + 'static,
        G: Fn(&Word) -> Word + Send + Sync + 'static,
    {
        StringRewriter {
            name: name.to_string(),
            forward: Box::new(forward),
            inverse: Box::new(inverse),
        }
    }

    /// String reversal; realizes the subword equivalence 12 ∼ 21.
    pub fn reversal() -> Self {
        StringRewriter::new("reversal", |w| w.reverse(), |w| w.reverse())
    }

    /// The identity map; realizes any equivalence of a subword with itself.
    pub fn identity() -> Self {
        StringRewriter::new("identity", Clone::clone, Clone::clone)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, w: &Word) -> Word {
        (self.forward)(w)
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        (self.inverse)(w)
    }

    /// Spot-checks the contract on all words of length ≤ 4 over alphabets
    /// ≤ 3: the map must preserve length and alphabet, invert, and carry
    /// τ-avoiders onto ρ-avoiders injectively.
    pub fn validate(&self, tau: &Pattern, rho: &Pattern) -> Result<(), BijectError> {
        let fail = |detail: String| BijectError::RewriterContract {
            name: self.name.clone(),
            detail,
        };
        for k in 1..=3u32 {
            for n in 0..=4usize {
                let mut avoider_images = BTreeSet::new();
                let mut avoiders = 0usize;
                for letters in words_of(n, k) {
                    let w = Word::new(letters, k).unwrap();
                    let image = self.apply(&w);
                    if image.len() != w.len() {
                        return Err(fail(format!("length changed on {w}")));
                    }
                    if image.letters().iter().any(|&a| a == 0 || a > k) {
                        return Err(fail(format!("image of {w} leaves the alphabet")));
                    }
                    if self.apply_inverse(&image) != w {
                        return Err(fail(format!("inverse fails on {w}")));
                    }
                    if !contains(&w, tau) {
                        avoiders += 1;
                        if contains(&image, rho) {
                            return Err(fail(format!(
                                "{w} avoids {tau} but its image {image} contains {rho}"
                            )));
                        }
                        avoider_images.insert(image);
                    }
                }
                if avoider_images.len() != avoiders {
                    return Err(fail(format!("not injective on avoiders at n={n}, k={k}")));
                }
            }
        }
        Ok(())
    }
}

fn words_of(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for a in 1..=k {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn require_subword(p: &Pattern, role: &'static str) -> Result<(), BijectError> {
    if p.len() > 1 && !p.is_subword() {
        return Err(BijectError::NotASubword {
            role,
            pattern: p.to_string(),
        });
    }
    Ok(())
}

fn require_avoids(w: &Word, p: &Pattern) -> Result<(), BijectError> {
    if let Some(occ) = find_occurrences(w, p).into_iter().next() {
        return Err(BijectError::DomainViolation {
            pattern: p.to_string(),
            occurrence: occ.to_string(),
        });
    }
    Ok(())
}

fn is_monotonic(letters: &[u32]) -> bool {
    letters.windows(2).all(|ab| ab[0] <= ab[1]) || letters.windows(2).all(|ab| ab[0] >= ab[1])
}

/// The pattern `left-right`: `left`'s letters, a dash, then the given raw
/// letters, each part fully adjacent internally. The combined letters must
/// form a reduced word.
fn dashed_concat(left: &Pattern, right_letters: &[u32]) -> Pattern {
    let mut letters = left.letters().to_vec();
    letters.extend_from_slice(right_letters);
    let mut adjacencies: BTreeSet<usize> = (1..left.len()).collect();
    adjacencies.extend(left.len() + 1..left.len() + right_letters.len());
    Pattern::new(letters, adjacencies).expect("combined letters form a reduced word")
}

/// Governing occurrences for [`thm21_map`]: start positions `ℓ_1 < … < ℓ_r`
/// of rightmost b-occurrences of σ with strictly decreasing least letters
/// `a_1 > … > a_r`, each chosen among occurrences starting right of the end
/// of the previous one.
fn thm21_governors(w: &Word, sigma: &Pattern, s: u32) -> Vec<(u32, usize)> {
    let c = sigma.len();
    let k = w.alphabet_size();
    let mut governors: Vec<(u32, usize)> = Vec::new();
    let mut upper = k;
    let mut min_start = 1;
    while upper >= s + 1 {
        let mut best: Option<(u32, usize)> = None;
        for occ in find_occurrences(w, sigma) {
            let start = occ.indices()[0];
            if start < min_start {
                continue;
            }
            let least = *occ.letters(w).iter().min().unwrap();
            if least < s + 1 || least > upper {
                continue;
            }
            let better = match best {
                None => true,
                Some((b, l)) => least > b || (least == b && start > l),
            };
            if better {
                best = Some((least, start));
            }
        }
        match best {
            Some((a, l)) => {
                governors.push((a, l));
                upper = a - 1;
                min_start = l + c;
            }
            None => break,
        }
    }
    governors
}

/// Applies `g` to each maximal run of letters ≤ `bound` within positions
/// `[lo, hi]` of `letters` (1-based, inclusive).
fn rewrite_region(
    letters: &mut [u32],
    lo: usize,
    hi: usize,
    bound: u32,
    g: &StringRewriter,
    direction: Direction,
) {
    if bound == 0 || lo > hi {
        return;
    }
    let mut run_start: Option<usize> = None;
    for i in lo..=hi + 1 {
        let in_run = i <= hi && letters[i - 1] <= bound;
        match (run_start, in_run) {
            (None, true) => run_start = Some(i),
            (Some(start), false) => {
                let slice = letters[start - 1..i - 1].to_vec();
                let word = Word::new(slice, bound).expect("run letters are ≤ bound");
                let image = match direction {
                    Direction::Forward => g.apply(&word),
                    Direction::Inverse => g.apply_inverse(&word),
                };
                assert_eq!(image.len(), i - start, "rewriter must preserve length");
                letters[start - 1..i - 1].copy_from_slice(image.letters());
                run_start = None;
            }
            _ => {}
        }
    }
}

/// The governed-region bijection between avoiders of τ-(σ+s) and ρ-(σ+s).
///
/// τ ∼ ρ must be subwords sharing largest letter s, realized by `g`; σ a
/// non-empty monotonic subword. Forward maps a τ-(σ+s) avoider to a
/// ρ-(σ+s) avoider by rewriting, with `g`, every maximal string over the
/// governed alphabet in each region: `[a_1−1]` before the first governor,
/// `[a_{j+1}−1]` between governors j and j+1; letters right of the last
/// governor are untouched. The inverse recomputes the same governors and
/// applies `g⁻¹` to the same strings. A word with no governing occurrence
/// maps to itself (in particular whenever s + t > k).
pub fn thm21_map(
    w: &Word,
    tau: &Pattern,
    rho: &Pattern,
    sigma: &Pattern,
    g: &StringRewriter,
    direction: Direction,
) -> Result<Word, BijectError> {
    require_subword(tau, "tau")?;
    require_subword(rho, "rho")?;
    require_subword(sigma, "sigma")?;
    if !is_monotonic(sigma.letters()) {
        return Err(BijectError::NonMonotonicSigma {
            sigma: sigma.to_string(),
        });
    }
    let s = tau.max_letter();
    if rho.max_letter() != s {
        return Err(BijectError::LargestLetterMismatch {
            tau_max: s,
            rho_max: rho.max_letter(),
        });
    }
    g.validate(tau, rho)?;

    let shifted: Vec<u32> = sigma.letters().iter().map(|&v| v + s).collect();
    let tau_ext = dashed_concat(tau, &shifted);
    let rho_ext = dashed_concat(rho, &shifted);
    let source = match direction {
        Direction::Forward => &tau_ext,
        Direction::Inverse => &rho_ext,
    };
    require_avoids(w, source)?;

    let governors = thm21_governors(w, sigma, s);
    if governors.is_empty() {
        return Ok(w.clone());
    }

    let c = sigma.len();
    let mut letters = w.letters().to_vec();
    // region before the first governor, alphabet [a_1 − 1]
    rewrite_region(
        &mut letters,
        1,
        governors[0].1 - 1,
        governors[0].0 - 1,
        g,
        direction,
    );
    // regions between consecutive governors, alphabet [a_{j+1} − 1]
    for pair in governors.windows(2) {
        let (_, l_prev) = pair[0];
        let (a_next, l_next) = pair[1];
        rewrite_region(&mut letters, l_prev + c, l_next - 1, a_next - 1, g, direction);
    }
    // everything right of the last governor's occurrence stays put
    Ok(Word::new(letters, w.alphabet_size()).expect("letters stay in range"))
}

/// Stage record: the stage's value class and the word after the stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub value: u32,
    pub word: Word,
}

/// The letter-migration bijection between avoiders of σ-r(r+1) and
/// σ-(r+1)r, with its stage trace.
///
/// Forward: repeatedly pick the smallest value s (above all previous stage
/// values) with an s-occurrence of σ — an occurrence whose largest letter is
/// s — locate the leftmost one, and inside every maximal string of letters
/// ≥ s to the right of it move all copies of s to the front of the string.
/// Inverse: the same with largest-first stage values, moving copies to the
/// back. Both preserve the letter multiset.
pub fn thm25_map_traced(
    w: &Word,
    sigma: &Pattern,
    direction: Direction,
) -> Result<Vec<Stage>, BijectError> {
    require_subword(sigma, "sigma")?;
    let r = sigma.max_letter();
    let tau = dashed_concat(sigma, &[r, r + 1]);
    let rho = dashed_concat(sigma, &[r + 1, r]);
    let source = match direction {
        Direction::Forward => &tau,
        Direction::Inverse => &rho,
    };
    require_avoids(w, source)?;

    let k = w.alphabet_size();
    let a = sigma.len();
    let mut current = w.clone();
    let mut stages = Vec::new();
    let mut lo = 1u32;
    let mut hi = k;
    // stage values strictly increase (forward) or decrease (inverse), so at
    // most k stages can run
    while lo <= hi {
        let mut stage: Option<(u32, usize)> = None;
        for occ in find_occurrences(&current, sigma) {
            let value = *occ.letters(&current).iter().max().unwrap();
            if value < lo || value > hi {
                continue;
            }
            let start = occ.indices()[0];
            let better = match (stage, direction) {
                (None, _) => true,
                (Some((v, l)), Direction::Forward) => value < v || (value == v && start < l),
                (Some((v, l)), Direction::Inverse) => value > v || (value == v && start < l),
            };
            if better {
                stage = Some((value, start));
            }
        }
        let Some((value, start)) = stage else {
            break;
        };
        let mut letters = current.letters().to_vec();
        migrate_in_strings(&mut letters, start + a, value, direction);
        current = Word::new(letters, k).expect("multiset preserved");
        stages.push(Stage {
            value,
            word: current.clone(),
        });
        match direction {
            Direction::Forward => lo = value + 1,
            Direction::Inverse => {
                if value == 1 {
                    break;
                }
                hi = value - 1;
            }
        }
        debug_assert!(stages.len() <= k as usize);
    }
    Ok(stages)
}

/// Within each maximal run of letters ≥ `value` starting at or right of
/// position `from`, moves all copies of `value` to the front (forward) or
/// back (inverse), keeping the other letters' order.
fn migrate_in_strings(letters: &mut [u32], from: usize, value: u32, direction: Direction) {
    let n = letters.len();
    let mut i = from;
    while i <= n {
        if letters[i - 1] < value {
            i += 1;
            continue;
        }
        let start = i;
        while i <= n && letters[i - 1] >= value {
            i += 1;
        }
        let run = &mut letters[start - 1..i - 1];
        let copies = run.iter().filter(|&&v| v == value).count();
        let others: Vec<u32> = run.iter().copied().filter(|&v| v != value).collect();
        match direction {
            Direction::Forward => {
                run[..copies].fill(value);
                run[copies..].copy_from_slice(&others);
            }
            Direction::Inverse => {
                run[..others.len()].copy_from_slice(&others);
                run[others.len()..].fill(value);
            }
        }
    }
}

/// [`thm25_map_traced`] without the trace.
pub fn thm25_map(w: &Word, sigma: &Pattern, direction: Direction) -> Result<Word, BijectError> {
    let stages = thm25_map_traced(w, sigma, direction)?;
    Ok(stages
        .last()
        .map(|s| s.word.clone())
        .unwrap_or_else(|| w.clone()))
}

/// Which of the three swap bijections to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapMap {
    /// 134-2 ∼ 143-2; the value class is the letter in the 4 role.
    M134,
    /// 124-3 ∼ 214-3; the value class is the letter in the 1 role.
    M124,
    /// 142-3 ∼ 241-3; the value class is the letter in the 2 role.
    M142,
}

struct SwapSpec {
    source: &'static str,
    target: &'static str,
    /// 1-based pattern position whose letter names the value class.
    role_pos: usize,
    /// process value classes high-to-low when true
    descending_values: bool,
    /// within a stage, clear the leftmost (true) or rightmost occurrence
    leftmost_first: bool,
    /// 1-based pattern positions whose letters are exchanged per step
    swap: (usize, usize),
    /// value classes run lo..=k−hi_off
    lo: u32,
    hi_off: u32,
}

impl SwapMap {
    fn spec(self, direction: Direction) -> SwapSpec {
        match (self, direction) {
            // clear v-occurrences of 143-2 for v = k down to 4, leftmost
            // first, swapping the 4-role letter with its successor
            (SwapMap::M134, Direction::Forward) => SwapSpec {
                source: "134-2",
                target: "143-2",
                role_pos: 2,
                descending_values: true,
                leftmost_first: true,
                swap: (2, 3),
                lo: 4,
                hi_off: 0,
            },
            // clear v-occurrences of 134-2 for v = 4 up to k, rightmost
            // first, swapping the 4-role letter with its predecessor
            (SwapMap::M134, Direction::Inverse) => SwapSpec {
                source: "143-2",
                target: "134-2",
                role_pos: 3,
                descending_values: false,
                leftmost_first: false,
                swap: (3, 2),
                lo: 4,
                hi_off: 0,
            },
            // clear j-occurrences of 214-3 for j = 1 up to k−3, rightmost
            // first, swapping the letters in the 1 and 2 roles
            (SwapMap::M124, Direction::Forward) => SwapSpec {
                source: "124-3",
                target: "214-3",
                role_pos: 2,
                descending_values: false,
                leftmost_first: false,
                swap: (1, 2),
                lo: 1,
                hi_off: 3,
            },
            (SwapMap::M124, Direction::Inverse) => SwapSpec {
                source: "214-3",
                target: "124-3",
                role_pos: 1,
                descending_values: true,
                leftmost_first: true,
                swap: (1, 2),
                lo: 1,
                hi_off: 3,
            },
            // clear i-occurrences of 241-3 for i = k−2 down to 2, leftmost
            // first, swapping the two smallest letters of the occurrence
            (SwapMap::M142, Direction::Forward) => SwapSpec {
                source: "142-3",
                target: "241-3",
                role_pos: 1,
                descending_values: true,
                leftmost_first: true,
                swap: (1, 3),
                lo: 2,
                hi_off: 2,
            },
            (SwapMap::M142, Direction::Inverse) => SwapSpec {
                source: "241-3",
                target: "142-3",
                role_pos: 3,
                descending_values: false,
                leftmost_first: false,
                swap: (1, 3),
                lo: 2,
                hi_off: 2,
            },
        }
    }
}

/// Runs a swap bijection, recording the word after each value-class stage.
/// The input must avoid the map's source pattern.
pub fn thm33_map_traced(
    map: SwapMap,
    w: &Word,
    direction: Direction,
) -> Result<Vec<Stage>, BijectError> {
    let spec = map.spec(direction);
    let source = Pattern::parse(spec.source).expect("static pattern");
    require_avoids(w, &source)?;
    thm33_stages_unchecked(map, w, direction)
}

/// The staged swap engine without the avoidance precondition. The rewriting
/// is well-defined on any word and still clears every occurrence of the
/// stage patterns; only on source-pattern avoiders is it the bijection.
pub fn thm33_stages_unchecked(
    map: SwapMap,
    w: &Word,
    direction: Direction,
) -> Result<Vec<Stage>, BijectError> {
    let spec = map.spec(direction);
    let target = Pattern::parse(spec.target).expect("static pattern");

    let k = w.alphabet_size();
    let n = w.len();
    if k < spec.lo + spec.hi_off {
        return Ok(Vec::new());
    }
    let hi = k - spec.hi_off;
    let values: Vec<u32> = if spec.descending_values {
        (spec.lo..=hi).rev().collect()
    } else {
        (spec.lo..=hi).collect()
    };

    let mut current = w.clone();
    let mut stages = Vec::new();
    // each swap shifts one letter one step; n² per class is a safe ceiling
    let bound = (n + 1) * (n + 1);
    for value in values {
        let mut steps = 0;
        loop {
            let occs = find_role_occurrences(
                &current,
                &target,
                RoleConstraint {
                    role: Role::Position(spec.role_pos),
                    value,
                },
            )
            .expect("role position is valid for these patterns");
            let Some(occ) = (if spec.leftmost_first {
                occs.first()
            } else {
                occs.last()
            }) else {
                break;
            };
            let (a, b) = spec.swap;
            let ia = occ.indices()[a - 1];
            let ib = occ.indices()[b - 1];
            let mut letters = current.letters().to_vec();
            letters.swap(ia - 1, ib - 1);
            current = Word::new(letters, k).expect("swap keeps letters");
            steps += 1;
            if steps > bound {
                return Err(BijectError::RunawayStageLoop { bound });
            }
        }
        stages.push(Stage {
            value,
            word: current.clone(),
        });
    }
    Ok(stages)
}

/// One of the three swap bijections, without the trace.
pub fn thm33_map(map: SwapMap, w: &Word, direction: Direction) -> Result<Word, BijectError> {
    let stages = thm33_map_traced(map, w, direction)?;
    Ok(stages
        .last()
        .map(|s| s.word.clone())
        .unwrap_or_else(|| w.clone()))
}

/// 134-2 ∼ 143-2.
pub fn thm33_map_134(w: &Word, direction: Direction) -> Result<Word, BijectError> {
    thm33_map(SwapMap::M134, w, direction)
}

/// 124-3 ∼ 214-3.
pub fn thm33_map_124(w: &Word, direction: Direction) -> Result<Word, BijectError> {
    thm33_map(SwapMap::M124, w, direction)
}

/// 142-3 ∼ 241-3.
pub fn thm33_map_142(w: &Word, direction: Direction) -> Result<Word, BijectError> {
    thm33_map(SwapMap::M142, w, direction)
}
