//! Letters and words. A letter packs a generator index and an inverse bit;
//! generator indices are assigned in rank order, so comparing letters
//! compares ranks.

use smallvec::SmallVec;
use std::cmp::Ordering;

pub type Letter = u16;

pub fn letter(gen: usize, inverse: bool) -> Letter {
    ((gen as u16) << 1) | inverse as u16
}

pub fn gen_of(l: Letter) -> usize {
    (l >> 1) as usize
}

pub fn is_inverse(l: Letter) -> bool {
    l & 1 == 1
}

pub fn inverse(l: Letter) -> Letter {
    l ^ 1
}

/// A word in the generators; the empty word is 1. Ordered graded
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub SmallVec<[Letter; 8]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(ls: &[Letter]) -> Self {
        let mut w = Word::one();
        for &l in ls {
            w.push(l);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Appends a letter, cancelling against a trailing inverse.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&inverse(l)) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in other.letters() {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| inverse(l)).collect())
    }

    /// Runs of equal letters as (letter, multiplicity).
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in self.letters() {
            match out.last_mut() {
                Some((x, n)) if *x == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pairs_cancel_on_push() {
        let x = letter(3, false);
        let w = Word::from_letters(&[x, inverse(x), x]);
        assert_eq!(w.letters(), &[x]);
        assert!(Word::from_letters(&[x]).concat(&Word::from_letters(&[inverse(x)])).is_empty());
    }

    #[test]
    fn graded_order() {
        let a = Word::from_letters(&[letter(5, false)]);
        let b = Word::from_letters(&[letter(0, false), letter(0, false)]);
        assert!(a < b);
    }
}
