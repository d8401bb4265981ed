//! Primeness verdicts and connected-sum factorization for homogeneous braid
//! closures, driven by seesaw numbers of the fully destabilized word.

use thiserror::Error;

use crate::braid::{render_word, BraidWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrimenessError {
    #[error("word is not homogeneous")]
    NotHomogeneous,
    #[error("word is split")]
    SplitWord,
}

/// One recursion step of the factorization: `word` was cut at `strand`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitStep {
    pub word: BraidWord,
    pub strand: usize,
}

/// Connected-sum decomposition of a homogeneous closure into prime summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    /// Fully destabilized, non-split, index-shifted summand words, in
    /// recursion order. Each has at most 2 strands or all seesaw numbers >= 4.
    pub summands: Vec<BraidWord>,
    /// Split components whose closure is the unknot.
    pub unknot_components: usize,
    /// Recursion trace of the cuts performed.
    pub steps: Vec<SplitStep>,
}

impl PrimeFactorization {
    /// Canonical renderings of the summands, sorted, for multiset comparison.
    pub fn summand_multiset(&self) -> Vec<String> {
        let mut v: Vec<String> = self.summands.iter().map(render_word).collect();
        v.sort();
        v
    }
}

/// Outcome of the primeness decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimenessVerdict {
    Prime,
    Composite {
        /// Smallest strand of a reduced split component whose seesaw number
        /// lies in {2, 3}.
        witness_strand: usize,
        factorization: PrimeFactorization,
    },
    /// The decision procedure only applies to homogeneous words.
    InconclusiveNotHomogeneous,
}

/// Decide primeness of the closure of `w`.
///
/// Non-homogeneous words are inconclusive. Otherwise each split component is
/// fully destabilized; a component is prime when it has at most 2 strands or
/// all its seesaw numbers are at least 4, and the closure is prime when every
/// component is.
pub fn primeness_verdict(w: &BraidWord) -> PrimenessVerdict {
    if !w.is_homogeneous() {
        return PrimenessVerdict::InconclusiveNotHomogeneous;
    }
    for comp in w.split_components() {
        let reduced = comp.destabilize_fully().reduced;
        if reduced.strands() <= 2 {
            continue;
        }
        if let Some(&i) = reduced.decomposition_strands().first() {
            let factorization =
                prime_factorization(w).expect("homogeneity already checked");
            return PrimenessVerdict::Composite {
                witness_strand: i,
                factorization,
            };
        }
    }
    PrimenessVerdict::Prime
}

/// True iff the closure of a homogeneous non-split word is the unknot:
/// every generator index occurs exactly once.
pub fn is_unknot_homogeneous(w: &BraidWord) -> Result<bool, PrimenessError> {
    if !w.is_homogeneous() {
        return Err(PrimenessError::NotHomogeneous);
    }
    if w.is_split() {
        return Err(PrimenessError::SplitWord);
    }
    Ok((1..w.strands()).all(|i| w.occurrences(i) == 1))
}

/// Factor the closure of a homogeneous word into prime summands.
///
/// Recursion: split components, fully destabilize, and while some seesaw
/// number lies in {2, 3} cut at the smallest such strand i into the pieces
/// below and above strand i; components that destabilize to the empty word
/// are counted as unknot components.
pub fn prime_factorization(w: &BraidWord) -> Result<PrimeFactorization, PrimenessError> {
    if !w.is_homogeneous() {
        return Err(PrimenessError::NotHomogeneous);
    }
    let mut out = PrimeFactorization {
        summands: Vec::new(),
        unknot_components: 0,
        steps: Vec::new(),
    };
    for comp in w.split_components() {
        let reduced = comp.destabilize_fully().reduced;
        if reduced.is_empty() {
            out.unknot_components += 1;
        } else {
            factor_reduced(&reduced, &mut out);
        }
    }
    Ok(out)
}

/// Factor a non-empty, non-split, fully destabilized homogeneous word.
fn factor_reduced(w: &BraidWord, out: &mut PrimeFactorization) {
    debug_assert!(!w.is_split() && !w.is_empty());
    match w.decomposition_strands().first().copied() {
        None => out.summands.push(w.clone()),
        Some(i) => {
            out.steps.push(SplitStep {
                word: w.clone(),
                strand: i,
            });
            let lower = w.subword(1, i - 1).expect("lower piece in range");
            let upper = w.subword(i, w.strands() - 1).expect("upper piece in range");
            for piece in [lower, upper] {
                assert!(!piece.is_split(), "cut produced a split piece from {w}");
                let reduced = piece.destabilize_fully().reduced;
                assert!(!reduced.is_empty(), "cut produced an unknot piece from {w}");
                factor_reduced(&reduced, out);
            }
        }
    }
}
