//! Freely reduced words with exponent run-length encoding.
//!
//! A word is a sequence of (generator index, nonzero exponent) runs with no
//! two adjacent runs sharing a generator. All constructors and operations
//! maintain free reduction.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A freely reduced word over numbered generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { runs: Vec::new() }
    }

    /// g^e as a word.
    pub fn generator(g: usize, e: i64) -> Self {
        if e == 0 {
            Word::identity()
        } else {
            Word { runs: vec![(g, e)] }
        }
    }

    /// Build from raw (generator, exponent) pairs, reducing as needed.
    pub fn from_runs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in pairs {
            w.push_run(g, e);
        }
        w
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total letter count (sum of |exponents|).
    pub fn len(&self) -> usize {
        self.runs.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    fn push_run(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((last_g, last_e)) if *last_g == g => {
                *last_e += e;
                if *last_e == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((g, e)),
        }
    }

    /// Concatenation followed by free reduction at the seam.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &other.runs {
            out.push_run(g, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word { runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// self^k (k may be negative).
    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// u w u^{-1}.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }

    /// Strip conjugating pairs from the ends (x w x^{-1} → w).
    pub fn cyclically_reduce(&self) -> Word {
        let mut w = self.clone();
        loop {
            let (Some(&(g0, e0)), Some(&(g1, e1))) = (w.runs.first(), w.runs.last()) else {
                return w;
            };
            if w.runs.len() == 1 || g0 != g1 || (e0 > 0) == (e1 > 0) {
                return w;
            }
            let strip = e0.abs().min(e1.abs());
            let mut runs = w.runs.clone();
            let last = runs.len() - 1;
            runs[0].1 -= strip * e0.signum();
            runs[last].1 -= strip * e1.signum();
            runs.retain(|&(_, e)| e != 0);
            // the two ends may now merge
            w = Word::from_runs(runs);
        }
    }

    /// Exponent sum per generator (the image in the free abelianization).
    pub fn exponent_sums(&self, n_generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n_generators];
        for &(g, e) in &self.runs {
            sums[g] += e;
        }
        sums
    }

    /// Expanded form: one signed entry per letter, generator g as ±(g+1).
    pub fn letters(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.runs {
            let letter = (g as i32 + 1) * e.signum() as i32;
            for _ in 0..e.unsigned_abs() {
                out.push(letter);
            }
        }
        out
    }

    pub fn from_letters(letters: &[i32]) -> Word {
        Word::from_runs(letters.iter().map(|&l| {
            debug_assert!(l != 0);
            ((l.unsigned_abs() as usize) - 1, l.signum() as i64)
        }))
    }

    /// Substitute each generator by its image word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for &(g, e) in &self.runs {
            out = out.concat(&images[g].power(e));
        }
        out
    }

    /// Render with the given generator names.
    pub fn display(&self, names: &[String]) -> String {
        if self.runs.is_empty() {
            return "1".to_string();
        }
        self.runs
            .iter()
            .map(|&(g, e)| {
                let name = names.get(g).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_at_seams() {
        let w = Word::from_runs([(0, 2), (1, 1), (1, -1), (0, -2), (2, 1)]);
        assert_eq!(w, Word::generator(2, 1));
        let u = Word::from_runs([(0, 3)]);
        assert_eq!(u.concat(&u.inverse()), Word::identity());
    }

    #[test]
    fn reduction_is_idempotent_and_length_monotone() {
        let raw = [(0, 2), (1, -3), (1, 3), (0, -1), (0, 4), (2, 1)];
        let w = Word::from_runs(raw);
        let again = Word::from_runs(w.runs().iter().copied());
        assert_eq!(w, again);
        let total: usize = raw.iter().map(|(_, e)| e.unsigned_abs() as usize).sum();
        assert!(w.len() <= total);
    }

    #[test]
    fn cyclic_reduction() {
        // x y x^{-1} -> y
        let w = Word::from_runs([(0, 1), (1, 2), (0, -1)]);
        assert_eq!(w.cyclically_reduce(), Word::generator(1, 2));
        // x^2 y x^{-1} strips one x
        let w = Word::from_runs([(0, 2), (1, 1), (0, -1)]);
        assert_eq!(w.cyclically_reduce(), Word::from_runs([(0, 1), (1, 1)]));
        // nested conjugation strips layer by layer: x y x^2 y^{-1} x^{-1} -> x^2
        let w = Word::from_runs([(0, 1), (1, 1), (0, 2), (1, -1), (0, -1)]);
        assert_eq!(w.cyclically_reduce(), Word::from_runs([(0, 2)]));
    }

    #[test]
    fn letters_round_trip() {
        let w = Word::from_runs([(0, 2), (1, -1), (2, 3)]);
        assert_eq!(w.letters(), vec![1, 1, -2, 3, 3, 3]);
        assert_eq!(Word::from_letters(&w.letters()), w);
    }

    #[test]
    fn substitution() {
        // w = a b, a -> xy, b -> y^{-1}z gives x z
        let images = [Word::from_runs([(0, 1), (1, 1)]), Word::from_runs([(1, -1), (2, 1)])];
        let w = Word::from_runs([(0, 1), (1, 1)]);
        assert_eq!(w.substitute(&images), Word::from_runs([(0, 1), (2, 1)]));
    }

    #[test]
    fn exponent_sums() {
        let w = Word::from_runs([(0, 2), (1, -1), (0, 3)]);
        assert_eq!(w.exponent_sums(3), vec![5, -1, 0]);
    }
}
