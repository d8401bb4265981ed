//! Braid words and their word-level combinatorics: parsing, homogeneity,
//! subwords, seesaw numbers, Markov destabilization and closure statistics.

use std::fmt;

use thiserror::Error;

/// Sign of a generator letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One Artin generator occurrence: sigma_index^{+-1}, with 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub fn positive(index: usize) -> Letter {
        Letter::new(index, Sign::Positive)
    }

    pub fn negative(index: usize) -> Letter {
        Letter::new(index, Sign::Negative)
    }
}

/// A braid word: a strand count and a sequence of generator letters.
///
/// The empty word on one strand is allowed and closes to the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("letter index {index} out of range for {strands} strands")]
    LetterOutOfRange { index: usize, strands: usize },
    #[error("subword range {lo}..={hi} invalid for {strands} strands")]
    BadSubwordRange { lo: usize, hi: usize, strands: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("token {pos}: malformed token {token:?}")]
    Malformed { pos: usize, token: String },
    #[error("token {pos}: generator index may not be zero")]
    ZeroIndex { pos: usize },
    #[error("token {pos}: exponent may not be zero")]
    ZeroExponent { pos: usize },
    #[error("token {pos}: generator {index} needs at least {} strands, got {strands}", index + 1)]
    IndexTooLarge { pos: usize, index: usize, strands: usize },
}

/// Per-generator sign usage of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorUsage {
    OnlyPositive,
    OnlyNegative,
    Absent,
    Mixed,
}

/// Map index -> usage for all generator indices of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityProfile {
    usages: Vec<GeneratorUsage>, // usages[i-1] for generator i
}

impl HomogeneityProfile {
    pub fn usage(&self, index: usize) -> GeneratorUsage {
        self.usages[index - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, GeneratorUsage)> + '_ {
        self.usages.iter().enumerate().map(|(i, &u)| (i + 1, u))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.usages.iter().all(|&u| u != GeneratorUsage::Mixed)
    }
}

/// Seesaw numbers g_i for i in 2..=n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeesawProfile {
    values: Vec<(usize, usize)>, // (i, g_i) in increasing i
}

impl SeesawProfile {
    pub fn get(&self, i: usize) -> Option<usize> {
        self.values
            .iter()
            .find(|&&(j, _)| j == i)
            .map(|&(_, g)| g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Outcome of maximal Markov destabilization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestabilizationResult {
    pub reduced: BraidWord,
    /// Number of bottom (sigma_1) destabilizations.
    pub m_minus: usize,
    /// Number of top (sigma_{n-1}) destabilizations.
    pub m_plus: usize,
}

/// Entry-to-exit strand permutation of a word's underlying permutation braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPermutation {
    map: Vec<usize>, // map[p] = exit position of strand entering at p (0-based)
}

impl StrandPermutation {
    pub fn identity(n: usize) -> StrandPermutation {
        StrandPermutation {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Exit position (1-based) of the strand entering at 1-based position `p`.
    pub fn image(&self, p: usize) -> usize {
        self.map[p - 1] + 1
    }

    pub fn compose(&self, then: &StrandPermutation) -> StrandPermutation {
        assert_eq!(self.map.len(), then.map.len());
        StrandPermutation {
            map: self.map.iter().map(|&v| then.map[v]).collect(),
        }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.map[p];
            }
        }
        cycles
    }
}

/// Genus report attached to closure statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusReport {
    pub genus: u64,
    /// True when the word is homogeneous, so Seifert's algorithm realizes
    /// the Seifert genus and the value is minimal.
    pub minimal: bool,
    /// True when the value is a sum over split components.
    pub split_sum: bool,
}

/// Statistics of the closure of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureStats {
    pub components: usize,
    pub euler_char: i64,
    /// c - n + 1, reported only for non-split words.
    pub first_betti: Option<u64>,
    pub genus: GenusReport,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, WordError> {
        if strands == 0 {
            return Err(WordError::NoStrands);
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(WordError::LetterOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> BraidWord {
        BraidWord::new(strands, Vec::new()).expect("strand count")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence count of sigma_index (either sign).
    pub fn occurrences(&self, index: usize) -> usize {
        self.letters.iter().filter(|l| l.index == index).count()
    }

    /// Signed occurrence count of sigma_index; for homogeneous words this is
    /// the torus-block parameter k_index.
    pub fn signed_count(&self, index: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index == index)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    pub fn homogeneity_profile(&self) -> HomogeneityProfile {
        let mut usages = vec![GeneratorUsage::Absent; self.strands.saturating_sub(1)];
        for l in &self.letters {
            let slot = &mut usages[l.index - 1];
            *slot = match (*slot, l.sign) {
                (GeneratorUsage::Absent, Sign::Positive) => GeneratorUsage::OnlyPositive,
                (GeneratorUsage::Absent, Sign::Negative) => GeneratorUsage::OnlyNegative,
                (GeneratorUsage::OnlyPositive, Sign::Positive) => GeneratorUsage::OnlyPositive,
                (GeneratorUsage::OnlyNegative, Sign::Negative) => GeneratorUsage::OnlyNegative,
                _ => GeneratorUsage::Mixed,
            };
        }
        HomogeneityProfile { usages }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity_profile().is_homogeneous()
    }

    /// Generator indices that never occur; nonempty exactly for split words.
    pub fn unused_generators(&self) -> Vec<usize> {
        (1..self.strands)
            .filter(|&i| self.occurrences(i) == 0)
            .collect()
    }

    pub fn is_split(&self) -> bool {
        !self.unused_generators().is_empty()
    }

    /// Cut the strand interval at every unused generator; indices of each
    /// component are shifted to start at 1.
    pub fn split_components(&self) -> Vec<BraidWord> {
        let unused = self.unused_generators();
        if unused.is_empty() {
            return vec![self.clone()];
        }
        let mut components = Vec::new();
        let mut lo = 1usize; // first strand of the current interval
        for cut in unused.iter().copied().chain(std::iter::once(self.strands)) {
            // interval of strands lo..=cut
            let strands = cut - lo + 1;
            let letters: Vec<Letter> = self
                .letters
                .iter()
                .filter(|l| l.index >= lo && l.index < cut)
                .map(|l| Letter::new(l.index - lo + 1, l.sign))
                .collect();
            components.push(BraidWord::new(strands, letters).expect("component in range"));
            lo = cut + 1;
        }
        components
    }

    /// The word W_{ij}: delete all sigma_k with k < i or k > j, shift indices
    /// down by i-1; result lives on j-i+2 strands.
    pub fn subword(&self, i: usize, j: usize) -> Result<BraidWord, WordError> {
        if i < 1 || i > j || j + 1 > self.strands {
            return Err(WordError::BadSubwordRange {
                lo: i,
                hi: j,
                strands: self.strands,
            });
        }
        let letters: Vec<Letter> = self
            .letters
            .iter()
            .filter(|l| l.index >= i && l.index <= j)
            .map(|l| Letter::new(l.index - i + 1, l.sign))
            .collect();
        BraidWord::new(j - i + 2, letters)
    }

    /// Seesaw numbers g_i for interior strands i in 2..=n-1: the number of
    /// maximal same-generator blocks of W_{i-1,i}.
    pub fn seesaw_profile(&self) -> SeesawProfile {
        let mut values = Vec::new();
        for i in 2..self.strands {
            let mut blocks = 0usize;
            let mut prev: Option<usize> = None;
            for l in &self.letters {
                if l.index == i - 1 || l.index == i {
                    if prev != Some(l.index) {
                        blocks += 1;
                        prev = Some(l.index);
                    }
                }
            }
            values.push((i, blocks));
        }
        SeesawProfile { values }
    }

    /// Strand indices i with g_i in {2, 3}: the interior strands admitting a
    /// decomposition circle through the diagram.
    pub fn decomposition_strands(&self) -> Vec<usize> {
        self.seesaw_profile()
            .iter()
            .filter(|&(_, g)| g == 2 || g == 3)
            .map(|(i, _)| i)
            .collect()
    }

    fn destabilize_top(&self) -> Option<BraidWord> {
        if self.strands < 2 || self.occurrences(self.strands - 1) != 1 {
            return None;
        }
        let letters: Vec<Letter> = self
            .letters
            .iter()
            .filter(|l| l.index != self.strands - 1)
            .copied()
            .collect();
        Some(BraidWord::new(self.strands - 1, letters).expect("top destabilization"))
    }

    fn destabilize_bottom(&self) -> Option<BraidWord> {
        if self.strands < 2 || self.occurrences(1) != 1 {
            return None;
        }
        let letters: Vec<Letter> = self
            .letters
            .iter()
            .filter(|l| l.index != 1)
            .map(|l| Letter::new(l.index - 1, l.sign))
            .collect();
        Some(BraidWord::new(self.strands - 1, letters).expect("bottom destabilization"))
    }

    /// Destabilize as often as possible, alternating a top step and a bottom
    /// step (top first) until neither applies. The closure link type is
    /// invariant under every step.
    pub fn destabilize_fully(&self) -> DestabilizationResult {
        let mut word = self.clone();
        let mut m_plus = 0usize;
        let mut m_minus = 0usize;
        loop {
            let mut progressed = false;
            if let Some(next) = word.destabilize_top() {
                word = next;
                m_plus += 1;
                progressed = true;
            }
            if let Some(next) = word.destabilize_bottom() {
                word = next;
                m_minus += 1;
                progressed = true;
            }
            if !progressed {
                break;
            }
        }
        DestabilizationResult {
            reduced: word,
            m_minus,
            m_plus,
        }
    }

    /// Entry-to-exit permutation: composes the transposition (i, i+1) for
    /// each letter in word order, sign-independent.
    pub fn strand_permutation(&self) -> StrandPermutation {
        let mut map: Vec<usize> = (0..self.strands).collect();
        // map[p] = current position of the strand that entered at p
        for l in &self.letters {
            let a = l.index - 1;
            let b = l.index;
            for v in map.iter_mut() {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        StrandPermutation { map }
    }

    /// Closure component count, Euler characteristic of the Seifert surface,
    /// first Betti number (non-split words) and genus.
    pub fn closure_stats(&self) -> ClosureStats {
        let components = self.strand_permutation().cycle_count();
        let euler_char = self.strands as i64 - self.letters.len() as i64;
        let split = self.is_split();
        let first_betti = if split {
            None
        } else {
            Some((self.letters.len() as i64 - self.strands as i64 + 1) as u64)
        };
        let homogeneous = self.is_homogeneous();
        let genus = if split {
            let mut total = 0u64;
            for comp in self.split_components() {
                total += comp.closure_stats().genus.genus;
            }
            GenusReport {
                genus: total,
                minimal: homogeneous,
                split_sum: true,
            }
        } else {
            let twice = 2 - components as i64 - euler_char;
            assert!(twice >= 0 && twice % 2 == 0, "genus parity for {self:?}");
            GenusReport {
                genus: (twice / 2) as u64,
                minimal: homogeneous,
                split_sum: false,
            }
        };
        ClosureStats {
            components,
            euler_char,
            first_betti,
            genus,
        }
    }
}

/// Parse the textual grammar: whitespace/comma-separated tokens `k` or `k^e`
/// with k a nonzero signed generator and e a nonzero signed exponent.
/// `strands` defaults to max |k| + 1.
pub fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, ParseError> {
    let mut letters = Vec::new();
    let mut max_index = 0usize;
    for (pos, token) in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let pos = pos + 1;
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, Some(e)),
            None => (token, None),
        };
        let k: i64 = base.parse().map_err(|_| ParseError::Malformed {
            pos,
            token: token.to_string(),
        })?;
        let e: i64 = match exp {
            Some(e) => e.parse().map_err(|_| ParseError::Malformed {
                pos,
                token: token.to_string(),
            })?,
            None => 1,
        };
        if k == 0 {
            return Err(ParseError::ZeroIndex { pos });
        }
        if e == 0 {
            return Err(ParseError::ZeroExponent { pos });
        }
        let index = k.unsigned_abs() as usize;
        if let Some(n) = strands {
            if index >= n {
                return Err(ParseError::IndexTooLarge {
                    pos,
                    index,
                    strands: n,
                });
            }
        }
        max_index = max_index.max(index);
        let sign = if (k > 0) == (e > 0) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        for _ in 0..e.unsigned_abs() {
            letters.push(Letter::new(index, sign));
        }
    }
    let strands = strands.unwrap_or(max_index + 1);
    Ok(BraidWord::new(strands, letters).expect("indices checked during parse"))
}

/// Canonical rendering with exponent compaction; round-trips through
/// [`parse_word`].
pub fn render_word(word: &BraidWord) -> String {
    let mut out = String::new();
    let letters = word.letters();
    let mut i = 0usize;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1usize;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        match (l.sign, run) {
            (Sign::Positive, 1) => out.push_str(&l.index.to_string()),
            (Sign::Positive, e) => out.push_str(&format!("{}^{}", l.index, e)),
            (Sign::Negative, 1) => out.push_str(&format!("-{}", l.index)),
            (Sign::Negative, e) => out.push_str(&format!("{}^-{}", l.index, e)),
        }
        i += run;
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_word(self))
    }
}
