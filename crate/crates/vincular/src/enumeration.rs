//! Exact avoider counting and the Wilf-classification engine.
//!
//! Counting walks the tree of pattern-avoiding prefixes: appending a letter
//! to an avoider can only create occurrences that end at the new position,
//! so a single incremental matcher call per extension both prunes and keeps
//! the census exact. Counting cells (pattern, n, k) are independent pure
//! computations; with the `parallel` feature they are evaluated on a rayon
//! pool and merged in a fixed order.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::map_cells;
use crate::matcher::{contains, has_occurrence_ending_at};
use crate::pattern::Pattern;
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("cell n={n}, k={k} needs {needed} words, over the guardrail of {bound} (raise the cap to proceed)")]
    GuardrailExceeded {
        n: usize,
        k: u32,
        needed: u128,
        bound: u64,
    },
    #[error("prefix is longer than the word length requested ({prefix_len} > {n})")]
    PrefixTooLong { prefix_len: usize, n: usize },
    #[error("content multiset has size {size}, expected {n}")]
    ContentSizeMismatch { size: usize, n: usize },
    #[error("content letter {letter} is outside [1, {k}]")]
    ContentLetterOutOfRange { letter: u32, k: u32 },
}

/// Per-cell resource cap: a cell (n, k) is admitted only when k^n stays at or
/// under `max_words`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guardrail {
    pub max_words: u64,
}

impl Default for Guardrail {
    fn default() -> Self {
        Guardrail {
            max_words: 100_000_000,
        }
    }
}

impl Guardrail {
    pub fn check(&self, n: usize, k: u32) -> Result<(), EnumError> {
        let mut needed: u128 = 1;
        for _ in 0..n {
            needed = needed.saturating_mul(k as u128);
            if needed > self.max_words as u128 {
                return Err(EnumError::GuardrailExceeded {
                    n,
                    k,
                    needed,
                    bound: self.max_words,
                });
            }
        }
        Ok(())
    }
}

/// Walks avoiding extensions of `prefix` up to total length `n`; `at_leaf`
/// sees every full-length avoider.
fn dfs_avoiders<F>(
    prefix: &mut Vec<u32>,
    n: usize,
    k: u32,
    p: &Pattern,
    content_left: Option<&mut BTreeMap<u32, usize>>,
    at_leaf: &mut F,
) where
    F: FnMut(&[u32]),
{
    if prefix.len() == n {
        at_leaf(prefix);
        return;
    }
    let mut content = content_left;
    for a in 1..=k {
        if let Some(ref mut left) = content {
            match left.get_mut(&a) {
                Some(c) if *c > 0 => *c -= 1,
                _ => continue,
            }
        }
        prefix.push(a);
        let w = Word::new(prefix.clone(), k).expect("letters stay in range");
        if !has_occurrence_ending_at(&w, p, prefix.len()) {
            dfs_avoiders(prefix, n, k, p, content.as_deref_mut(), at_leaf);
        }
        prefix.pop();
        if let Some(ref mut left) = content {
            *left.get_mut(&a).unwrap() += 1;
        }
    }
}

/// `a_p(n, k)`: the number of words in `[k]^n` avoiding `p`.
pub fn count_avoiders(
    n: usize,
    k: u32,
    p: &Pattern,
    guardrail: &Guardrail,
) -> Result<u64, EnumError> {
    guardrail.check(n, k)?;
    if n == 0 {
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let per_first: Vec<u64> = map_cells((1..=k).collect(), |a| {
        let mut prefix = vec![a];
        let w = Word::new(prefix.clone(), k).expect("in range");
        let mut count = 0u64;
        if !has_occurrence_ending_at(&w, p, 1) {
            dfs_avoiders(&mut prefix, n, k, p, None, &mut |_| count += 1);
        }
        count
    });
    Ok(per_first.iter().sum())
}

/// Sequential reference implementation of [`count_avoiders`]; used by the
/// benches to measure the parallel speedup and by tests as a second route.
pub fn count_avoiders_seq(
    n: usize,
    k: u32,
    p: &Pattern,
    guardrail: &Guardrail,
) -> Result<u64, EnumError> {
    guardrail.check(n, k)?;
    if n == 0 {
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut prefix = Vec::new();
    dfs_avoiders(&mut prefix, n, k, p, None, &mut |_| count += 1);
    Ok(count)
}

/// `a_p(n, k; w)`: avoiders of length n whose first letters equal `prefix`.
pub fn count_avoiders_prefix(
    n: usize,
    k: u32,
    p: &Pattern,
    prefix: &Word,
    guardrail: &Guardrail,
) -> Result<u64, EnumError> {
    guardrail.check(n, k)?;
    if prefix.len() > n {
        return Err(EnumError::PrefixTooLong {
            prefix_len: prefix.len(),
            n,
        });
    }
    if contains(prefix, p) {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut stem = prefix.letters().to_vec();
    dfs_avoiders(&mut stem, n, k, p, None, &mut |_| count += 1);
    Ok(count)
}

/// Avoiders of length n that are rearrangements of the given multiset.
/// `content` maps letters to multiplicities.
pub fn count_avoiders_by_content(
    n: usize,
    k: u32,
    p: &Pattern,
    content: &BTreeMap<u32, usize>,
    guardrail: &Guardrail,
) -> Result<u64, EnumError> {
    guardrail.check(n, k)?;
    let size: usize = content.values().sum();
    if size != n {
        return Err(EnumError::ContentSizeMismatch { size, n });
    }
    for (&letter, _) in content.iter().filter(|&(_, &c)| c > 0) {
        if letter == 0 || letter > k {
            return Err(EnumError::ContentLetterOutOfRange { letter, k });
        }
    }
    let mut count = 0u64;
    let mut prefix = Vec::new();
    let mut left = content.clone();
    dfs_avoiders(&mut prefix, n, k, p, Some(&mut left), &mut |_| count += 1);
    Ok(count)
}

/// The avoider counts of one pattern over a rectangle of cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub pattern: Pattern,
    /// (n, k) → a_pattern(n, k)
    pub entries: BTreeMap<(usize, u32), u64>,
}

impl CountTable {
    /// One JSON object per cell:
    /// `{"pattern":"132-1","n":8,"k":4,"count":…}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (&(n, k), &count) in &self.entries {
            let line = serde_json::json!({
                "pattern": self.pattern.to_string(),
                "n": n,
                "k": k,
                "count": count,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }

    pub fn get(&self, n: usize, k: u32) -> Option<u64> {
        self.entries.get(&(n, k)).copied()
    }

    /// The flat count vector in cell order; equal tables ⇔ equal signatures.
    pub fn signature(&self) -> Vec<u64> {
        self.entries.values().copied().collect()
    }
}

/// Counts one pattern over all cells n ≤ n_max, k ≤ k_max. A single DFS per
/// k covers every n at once (each prefix of an avoider is an avoider).
pub fn count_table(
    p: &Pattern,
    n_max: usize,
    k_max: u32,
    guardrail: &Guardrail,
) -> Result<CountTable, EnumError> {
    for k in 0..=k_max {
        guardrail.check(n_max, k)?;
    }
    let per_k: Vec<Vec<u64>> = map_cells((0..=k_max).collect(), |k| {
        let mut by_n = vec![0u64; n_max + 1];
        by_n[0] = 1;
        if k > 0 {
            let mut prefix = Vec::new();
            count_all_depths(&mut prefix, n_max, k, p, &mut by_n);
        }
        by_n
    });
    let mut entries = BTreeMap::new();
    for (k, by_n) in per_k.into_iter().enumerate() {
        for (n, &count) in by_n.iter().enumerate() {
            entries.insert((n, k as u32), count);
        }
    }
    Ok(CountTable {
        pattern: p.clone(),
        entries,
    })
}

fn count_all_depths(prefix: &mut Vec<u32>, n_max: usize, k: u32, p: &Pattern, by_n: &mut [u64]) {
    if prefix.len() == n_max {
        return;
    }
    for a in 1..=k {
        prefix.push(a);
        let w = Word::new(prefix.clone(), k).expect("in range");
        if !has_occurrence_ending_at(&w, p, prefix.len()) {
            by_n[prefix.len()] += 1;
            count_all_depths(prefix, n_max, k, p, by_n);
        }
        prefix.pop();
    }
}

/// Refinement used by [`verify_equivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    None,
    FirstLetter,
    Content,
}

/// One compared cell in an equivalence report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComparison {
    pub n: usize,
    pub k: u32,
    /// Which refinement cell, e.g. the first letter or a content multiset;
    /// empty for unrefined totals.
    pub cell: String,
    pub count_a: u64,
    pub count_b: u64,
}

impl CellComparison {
    pub fn agrees(&self) -> bool {
        self.count_a == self.count_b
    }
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub pattern_a: Pattern,
    pub pattern_b: Pattern,
    pub refinement: Refinement,
    pub n_max: usize,
    pub k_max: u32,
    pub cells: Vec<CellComparison>,
}

impl EquivalenceReport {
    pub fn passes(&self) -> bool {
        self.cells.iter().all(CellComparison::agrees)
    }

    pub fn first_mismatch(&self) -> Option<&CellComparison> {
        self.cells.iter().find(|c| !c.agrees())
    }
}

/// Buckets avoiders of `[k]^n` by first letter or content; bucket keys are
/// rendered as strings so reports stay uniform.
fn refined_counts(n: usize, k: u32, p: &Pattern, refinement: Refinement) -> BTreeMap<String, u64> {
    let mut buckets: BTreeMap<String, u64> = BTreeMap::new();
    if n == 0 {
        if !matches!(refinement, Refinement::FirstLetter) {
            buckets.insert(String::new(), 1);
        }
        return buckets;
    }
    let mut prefix = Vec::new();
    dfs_avoiders(&mut prefix, n, k, p, None, &mut |word| {
        let key = match refinement {
            Refinement::None => String::new(),
            Refinement::FirstLetter => word[0].to_string(),
            Refinement::Content => {
                let mut sorted = word.to_vec();
                sorted.sort_unstable();
                sorted
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            }
        };
        *buckets.entry(key).or_insert(0) += 1;
    });
    buckets
}

/// Compares avoider counts of `p` and `q` over the whole rectangle, optionally
/// refined by first letter or by content. Passing means equality everywhere.
pub fn verify_equivalence(
    p: &Pattern,
    q: &Pattern,
    n_max: usize,
    k_max: u32,
    refinement: Refinement,
    guardrail: &Guardrail,
) -> Result<EquivalenceReport, EnumError> {
    for k in 0..=k_max {
        guardrail.check(n_max, k)?;
    }
    let cells: Vec<(usize, u32)> = (0..=n_max)
        .flat_map(|n| (1..=k_max).map(move |k| (n, k)))
        .collect();
    let compared: Vec<Vec<CellComparison>> = map_cells(cells, |(n, k)| {
        let a = refined_counts(n, k, p, refinement);
        let b = refined_counts(n, k, q, refinement);
        let mut keys: Vec<String> = a.keys().chain(b.keys()).cloned().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .map(|key| CellComparison {
                n,
                k,
                count_a: a.get(&key).copied().unwrap_or(0),
                count_b: b.get(&key).copied().unwrap_or(0),
                cell: key,
            })
            .collect()
    });
    Ok(EquivalenceReport {
        pattern_a: p.clone(),
        pattern_b: q.clone(),
        refinement,
        n_max,
        k_max,
        cells: compared.into_iter().flatten().collect(),
    })
}

/// One empirical Wilf class: patterns with identical count signatures over
/// the classified rectangle.
#[derive(Debug, Clone)]
pub struct WilfClass {
    pub patterns: Vec<Pattern>,
    /// True when the class contains a single symmetry orbit representative.
    pub singleton_up_to_symmetry: bool,
}

/// The result of classifying a pattern universe by count signatures.
///
/// Classes are *empirical*: equal counts over the finite rectangle. Evidence
/// can separate classes but never prove equivalence, so consumers cross-check
/// against known ground truth where available.
#[derive(Debug, Clone)]
pub struct WilfClassification {
    pub n_max: usize,
    pub k_max: u32,
    pub classes: Vec<WilfClass>,
    /// Orbits of the universe under reverse/complement, intersected with the
    /// universe (reversal may leave a fixed dash type).
    pub symmetry_orbits: Vec<Vec<Pattern>>,
    pub tables: Vec<CountTable>,
}

impl WilfClassification {
    /// The class index containing `p`, if classified.
    pub fn class_of(&self, p: &Pattern) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.patterns.iter().any(|q| q == p))
    }

    pub fn table_for(&self, p: &Pattern) -> Option<&CountTable> {
        self.tables.iter().find(|t| &t.pattern == p)
    }

    /// The smallest cell (n, k) whose counts separate `p` and `q`, if any.
    pub fn separating_witness(&self, p: &Pattern, q: &Pattern) -> Option<(usize, u32)> {
        let ta = self.table_for(p)?;
        let tb = self.table_for(q)?;
        ta.entries
            .iter()
            .find(|(cell, count)| tb.entries.get(cell) != Some(count))
            .map(|(&cell, _)| cell)
    }

    /// Canonical representative of a pattern's symmetry orbit within the
    /// universe: the lexicographically least of the in-universe images.
    pub fn canonical_rep(universe_type: &[usize], p: &Pattern) -> Pattern {
        symmetry_images_in_type(universe_type, p)
            .into_iter()
            .min_by_key(|q| q.to_string())
            .expect("identity image always present")
    }

    /// Classes document:
    /// `{"n_max":…,"k_max":…,"classes":[{"patterns":[…],"singleton_up_to_symmetry":…}],"symmetry_orbits":[[…]]}`.
    pub fn to_json(&self) -> String {
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "patterns": c.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "singleton_up_to_symmetry": c.singleton_up_to_symmetry,
                })
            })
            .collect();
        let orbits: Vec<Vec<String>> = self
            .symmetry_orbits
            .iter()
            .map(|orbit| orbit.iter().map(|p| p.to_string()).collect())
            .collect();
        serde_json::json!({
            "n_max": self.n_max,
            "k_max": self.k_max,
            "classes": classes,
            "symmetry_orbits": orbits,
        })
        .to_string()
    }
}

/// The images of `p` under {id, r, c, rc} that stay inside the dash type of
/// the universe being classified.
pub fn symmetry_images_in_type(universe_type: &[usize], p: &Pattern) -> Vec<Pattern> {
    let mut images = vec![
        p.clone(),
        p.reverse(),
        p.complement(),
        p.reverse().complement(),
    ];
    images.retain(|q| q.dash_type() == universe_type);
    images.sort();
    images.dedup();
    images
}

/// Partitions `universe` by equality of the full count vector over the
/// rectangle n ≤ n_max, k ≤ k_max, and computes symmetry orbits.
pub fn wilf_classify(
    universe: &[Pattern],
    n_max: usize,
    k_max: u32,
    guardrail: &Guardrail,
) -> Result<WilfClassification, EnumError> {
    for k in 0..=k_max {
        guardrail.check(n_max, k)?;
    }
    let tables: Vec<CountTable> = map_cells(universe.to_vec(), |p| {
        count_table(&p, n_max, k_max, guardrail).expect("guardrail pre-checked")
    });

    let mut by_signature: BTreeMap<Vec<u64>, Vec<Pattern>> = BTreeMap::new();
    for table in &tables {
        by_signature
            .entry(table.signature())
            .or_default()
            .push(table.pattern.clone());
    }

    let universe_type = universe.first().map(|p| p.dash_type()).unwrap_or_default();
    let mut orbits: Vec<Vec<Pattern>> = Vec::new();
    let mut seen: Vec<Pattern> = Vec::new();
    for p in universe {
        if seen.contains(p) {
            continue;
        }
        let orbit = symmetry_images_in_type(&universe_type, p);
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }

    let classes = by_signature
        .into_values()
        .map(|mut patterns| {
            patterns.sort();
            let mut reps: Vec<Pattern> = patterns
                .iter()
                .map(|p| WilfClassification::canonical_rep(&universe_type, p))
                .collect();
            reps.sort();
            reps.dedup();
            WilfClass {
                singleton_up_to_symmetry: reps.len() == 1,
                patterns,
            }
        })
        .collect();

    Ok(WilfClassification {
        n_max,
        k_max,
        classes,
        symmetry_orbits: orbits,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::all_patterns;

    fn p(text: &str) -> Pattern {
        Pattern::parse(text).unwrap()
    }

    fn g() -> Guardrail {
        Guardrail::default()
    }

    /// Independent oracle: full enumeration of [k]^n with the plain matcher,
    /// no pruning and no incremental check.
    fn naive_count(n: usize, k: u32, pat: &Pattern) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let mut count = 0;
        let mut word = vec![1u32; n];
        loop {
            let w = Word::new(word.clone(), k).unwrap();
            if !contains(&w, pat) {
                count += 1;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return count;
                }
                if word[i - 1] < k {
                    word[i - 1] += 1;
                    for v in word[i..].iter_mut() {
                        *v = 1;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn short_word_law() {
        assert_eq!(count_avoiders(3, 5, &p("1-34-2"), &g()).unwrap(), 125);
        assert_eq!(count_avoiders(0, 4, &p("132-1"), &g()).unwrap(), 1);
    }

    #[test]
    fn frozen_oracle_values() {
        // brute force over all 16 words of [2]^4: only 1112 contains 11-12,
        // only 1121 contains 11-21
        assert_eq!(naive_count(4, 2, &p("11-12")), 15);
        assert_eq!(naive_count(4, 2, &p("11-21")), 15);
        assert_eq!(count_avoiders(4, 2, &p("11-12"), &g()).unwrap(), 15);
        assert_eq!(count_avoiders(4, 2, &p("11-21"), &g()).unwrap(), 15);
    }

    #[test]
    fn pruned_dfs_agrees_with_naive_oracle() {
        let patterns = ["11-12", "132-1", "1-34-2", "12-21", "121", "11-2", "2-1-3"];
        for pat_text in patterns {
            let pat = p(pat_text);
            for k in 0..=3u32 {
                for n in 0..=6usize {
                    assert_eq!(
                        count_avoiders(n, k, &pat, &g()).unwrap(),
                        naive_count(n, k, &pat),
                        "pattern {pat_text}, n={n}, k={k}"
                    );
                    assert_eq!(
                        count_avoiders_seq(n, k, &pat, &g()).unwrap(),
                        naive_count(n, k, &pat),
                    );
                }
            }
        }
    }

    #[test]
    fn prefix_counts() {
        let pat = p("11-12");
        // no word starting with 2 contains the pattern at k=2
        assert_eq!(
            count_avoiders_prefix(4, 2, &pat, &Word::parse("2", 2).unwrap(), &g()).unwrap(),
            8
        );
        // prefix already containing the pattern contributes nothing
        assert_eq!(
            count_avoiders_prefix(6, 2, &pat, &Word::parse("1112", 2).unwrap(), &g()).unwrap(),
            0
        );
        // first-letter refinement partitions the avoiders
        for pat_text in ["11-12", "132-1"] {
            let pat = p(pat_text);
            for n in 1..=5 {
                let total: u64 = (1..=3u32)
                    .map(|a| {
                        count_avoiders_prefix(n, 3, &pat, &Word::new(vec![a], 3).unwrap(), &g())
                            .unwrap()
                    })
                    .sum();
                assert_eq!(total, count_avoiders(n, 3, &pat, &g()).unwrap());
            }
        }
    }

    #[test]
    fn content_counts() {
        let pat = p("11-12");
        let mut content = BTreeMap::new();
        content.insert(1u32, 3usize);
        content.insert(2u32, 1usize);
        // rearrangements of {1,1,1,2}: 1112 1121 1211 2111, minus 1112
        assert_eq!(
            count_avoiders_by_content(4, 2, &pat, &content, &g()).unwrap(),
            3
        );

        // constant content: one word, avoider or not
        let mut ones = BTreeMap::new();
        ones.insert(1u32, 4usize);
        assert_eq!(
            count_avoiders_by_content(4, 2, &p("11"), &ones, &g()).unwrap(),
            0
        );
        assert_eq!(
            count_avoiders_by_content(4, 2, &p("12"), &ones, &g()).unwrap(),
            1
        );

        // summing over all multisets of size n reproduces the total
        let pat = p("121");
        let n = 4;
        let k = 3u32;
        let mut total = 0;
        let mut composition = vec![0usize; k as usize];
        fn walk(
            composition: &mut Vec<usize>,
            idx: usize,
            left: usize,
            total: &mut u64,
            n: usize,
            k: u32,
            pat: &Pattern,
        ) {
            if idx == composition.len() - 1 {
                composition[idx] = left;
                let content: BTreeMap<u32, usize> = composition
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (i as u32 + 1, c))
                    .collect();
                *total +=
                    count_avoiders_by_content(n, k, pat, &content, &Guardrail::default()).unwrap();
                return;
            }
            for c in 0..=left {
                composition[idx] = c;
                walk(composition, idx + 1, left - c, total, n, k, pat);
            }
        }
        walk(&mut composition, 0, n, &mut total, n, k, &pat);
        assert_eq!(total, count_avoiders(n, k, &pat, &g()).unwrap());
    }

    #[test]
    fn degenerate_alphabets() {
        let pat = p("12");
        assert_eq!(count_avoiders(0, 0, &pat, &g()).unwrap(), 1);
        assert_eq!(count_avoiders(3, 0, &pat, &g()).unwrap(), 0);
    }

    #[test]
    fn guardrail_blocks_large_cells() {
        let tight = Guardrail { max_words: 100 };
        let err = count_avoiders(4, 4, &p("12"), &tight).unwrap_err();
        assert!(matches!(err, EnumError::GuardrailExceeded { bound: 100, .. }));
    }

    #[test]
    fn monotonicity_over_small_range() {
        for pat_text in ["11-12", "132-1", "12-21"] {
            let pat = p(pat_text);
            let table = count_table(&pat, 6, 4, &g()).unwrap();
            for n in 0..=6 {
                for k in 1..=3u32 {
                    assert!(table.get(n, k).unwrap() <= table.get(n, k + 1).unwrap());
                }
            }
            for n in 0..=5 {
                for k in 1..=4u32 {
                    assert!(table.get(n + 1, k).unwrap() <= k as u64 * table.get(n, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn verify_equivalence_examples() {
        // 132-1 and 132-2 agree everywhere in a small range
        let report =
            verify_equivalence(&p("132-1"), &p("132-2"), 6, 3, Refinement::None, &g()).unwrap();
        assert!(report.passes());

        // 131-2 and 121-3 agree even refined by first letter
        let report = verify_equivalence(
            &p("131-2"),
            &p("121-3"),
            6,
            3,
            Refinement::FirstLetter,
            &g(),
        )
        .unwrap();
        assert!(report.passes());

        // 11-12 and 11-23 separate somewhere in range
        let report =
            verify_equivalence(&p("11-12"), &p("11-23"), 6, 3, Refinement::None, &g()).unwrap();
        assert!(!report.passes());
        assert!(report.first_mismatch().is_some());
    }

    #[test]
    fn classify_single_pattern() {
        let classification = wilf_classify(&[p("11-12")], 5, 3, &g()).unwrap();
        assert_eq!(classification.classes.len(), 1);
        assert!(classification.classes[0].singleton_up_to_symmetry);
    }

    #[test]
    fn classify_small_universe_respects_symmetry() {
        let universe = all_patterns(3, &[2, 1]).unwrap();
        let classification = wilf_classify(&universe, 6, 3, &g()).unwrap();
        // complements always land in the same class
        for pat in &universe {
            let c = pat.complement();
            assert_eq!(
                classification.class_of(pat),
                classification.class_of(&c),
                "{pat} vs {c}"
            );
        }
        // orbits refine classes
        for orbit in &classification.symmetry_orbits {
            let class = classification.class_of(&orbit[0]);
            for q in orbit {
                assert_eq!(classification.class_of(q), class);
            }
        }
    }

    #[test]
    fn json_lines_round_trip() {
        let table = count_table(&p("132-1"), 3, 2, &g()).unwrap();
        for line in table.to_json_lines().lines() {
            let value: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(value["pattern"], "132-1");
            let n = value["n"].as_u64().unwrap() as usize;
            let k = value["k"].as_u64().unwrap() as u32;
            assert_eq!(value["count"].as_u64(), table.get(n, k));
        }
        let classification = wilf_classify(&[p("12-1"), p("12-2")], 5, 3, &g()).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&classification.to_json()).unwrap();
        assert!(doc["classes"].is_array());
    }
}
