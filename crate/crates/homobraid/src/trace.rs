//! Words up to partial commutation: equivalence and cyclic equivalence in a
//! trace monoid, decided via the lexicographic normal form.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error("letter {0} outside alphabet of size {1}")]
    LetterOutOfRange(usize, usize),
}

/// Symmetric dependence relation on the alphabet {0, …, n−1}. Letters
/// commute iff they are independent; every letter depends on itself.
#[derive(Debug, Clone)]
pub struct Dependence {
    n: usize,
    dependent: Vec<bool>, // row-major n x n
}

impl Dependence {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Dependence {
        let mut dependent = vec![false; n * n];
        for i in 0..n {
            dependent[i * n + i] = true;
        }
        for (a, b) in pairs {
            assert!(a < n && b < n, "dependence pair out of range");
            dependent[a * n + b] = true;
            dependent[b * n + a] = true;
        }
        Dependence { n, dependent }
    }

    /// All distinct letters dependent: the free monoid, nothing commutes.
    pub fn full(n: usize) -> Dependence {
        Dependence {
            n,
            dependent: vec![true; n * n],
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn depends(&self, a: usize, b: usize) -> bool {
        self.dependent[a * self.n + b]
    }

    fn check(&self, word: &[usize]) -> Result<(), TraceError> {
        match word.iter().find(|&&x| x >= self.n) {
            Some(&x) => Err(TraceError::LetterOutOfRange(x, self.n)),
            None => Ok(()),
        }
    }

    /// Lexicographically smallest word in the trace equivalence class:
    /// repeatedly extract the smallest letter some occurrence of which
    /// commutes past everything before it.
    pub fn normal_form(&self, word: &[usize]) -> Result<Vec<usize>, TraceError> {
        self.check(word)?;
        let mut rest: Vec<usize> = word.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<(usize, usize)> = None; // (letter, position)
            'scan: for (pos, &x) in rest.iter().enumerate() {
                for &y in &rest[..pos] {
                    if self.depends(x, y) {
                        continue 'scan;
                    }
                }
                if best.map_or(true, |(b, _)| x < b) {
                    best = Some((x, pos));
                }
            }
            let (_, pos) = best.expect("front letter is always extractable");
            out.push(rest.remove(pos));
        }
        Ok(out)
    }

    pub fn equivalent(&self, w1: &[usize], w2: &[usize]) -> Result<bool, TraceError> {
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    /// All words reachable from `word` by commuting adjacent independent
    /// letters and rotating: the cyclic trace equivalence class.
    pub fn cyclic_class(
        &self,
        word: &[usize],
    ) -> Result<std::collections::HashSet<Vec<usize>>, TraceError> {
        self.check(word)?;
        let start = word.to_vec();
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            let push = |v: Vec<usize>, seen: &mut std::collections::HashSet<Vec<usize>>,
                            queue: &mut std::collections::VecDeque<Vec<usize>>| {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            };
            if w.len() > 1 {
                let mut r = w.clone();
                r.rotate_left(1);
                push(r, &mut seen, &mut queue);
            }
            for i in 0..w.len().saturating_sub(1) {
                if !self.depends(w[i], w[i + 1]) {
                    let mut v = w.clone();
                    v.swap(i, i + 1);
                    push(v, &mut seen, &mut queue);
                }
            }
        }
        Ok(seen)
    }

    /// Smallest word reachable from `word` by commuting adjacent independent
    /// letters and rotating: a canonical form for cyclic trace equivalence.
    pub fn cyclic_canonical(&self, word: &[usize]) -> Result<Vec<usize>, TraceError> {
        Ok(self
            .cyclic_class(word)?
            .into_iter()
            .min()
            .expect("class contains the word itself"))
    }

    /// True iff `w1` and `w2` are related by rotations combined with
    /// commutations of independent letters.
    pub fn cyclic_equivalent(&self, w1: &[usize], w2: &[usize]) -> Result<bool, TraceError> {
        if w1.len() != w2.len() {
            self.check(w1)?;
            self.check(w2)?;
            return Ok(false);
        }
        Ok(self.cyclic_canonical(w1)? == self.cyclic_canonical(w2)?)
    }
}
