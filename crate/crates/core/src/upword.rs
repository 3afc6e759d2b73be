use std::fmt;

use crate::alphabet::{words_of_length, Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// An ultimately periodic word `u·v^ω` given by one of its decompositions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    prefix: Word,
    period: Word,
}

/// A decomposition `(u, v)` of an ultimately periodic word.
pub type Decomposition = UpWord;

impl UpWord {
    pub fn new(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Precondition(
                "the period of an ultimately periodic word must be non-empty".into(),
            ));
        }
        Ok(UpWord { prefix, period })
    }

    pub fn parse(alphabet: &Alphabet, prefix: &str, period: &str) -> Result<Self> {
        UpWord::new(alphabet.parse_word(prefix)?, alphabet.parse_word(period)?)
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    /// The `i`-th letter of `u·v^ω`.
    pub fn letter(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `len` letters.
    pub fn take(&self, len: usize) -> Word {
        (0..len).map(|i| self.letter(i)).collect()
    }

    /// `(u·v, v)`, the same ω-word.
    pub fn unroll(&self) -> UpWord {
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&self.period);
        UpWord {
            prefix,
            period: self.period.clone(),
        }
    }

    /// `(u, v^k)` for `k >= 1`, the same ω-word.
    pub fn pump(&self, k: usize) -> UpWord {
        assert!(k >= 1);
        UpWord {
            prefix: self.prefix.clone(),
            period: self.period.repeat(k),
        }
    }

    /// The decomposition with the shortest prefix and shortest period. Every
    /// decomposition of the same ω-word has the form
    /// `(u·v^i·v[..t], rot_t(v)^j)` relative to this one.
    pub fn canonical(&self) -> UpWord {
        let n = self.period.len();
        let p = (1..=n)
            .find(|&p| n % p == 0 && self.period.chunks(p).all(|c| c == &self.period[..p]))
            .expect("p = n always works");
        let mut prefix = self.prefix.clone();
        let mut period = self.period[..p].to_vec();
        while prefix.last().is_some() && prefix.last() == period.last() {
            prefix.pop();
            period.rotate_right(1);
        }
        UpWord { prefix, period }
    }

    /// Whether both decompositions denote the same ω-word.
    pub fn same_word(&self, other: &UpWord) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a UpWord, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    "({}, {})",
                    self.1.format_word(&self.0.prefix),
                    self.1.format_word(&self.0.period)
                )
            }
        }
        D(self, alphabet)
    }
}

impl fmt::Debug for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.prefix, self.period)
    }
}

/// Every `(u, v)` with `|u| <= max_u` and `1 <= |v| <= max_v`, ordered by
/// `(|u|, u, |v|, v)` with words compared lexicographically in alphabet order.
pub fn enumerate_upwords(alphabet: &Alphabet, max_u: usize, max_v: usize) -> impl Iterator<Item = UpWord> {
    let k = alphabet.len();
    (0..=max_u)
        .flat_map(move |lu| words_of_length(k, lu))
        .flat_map(move |u| {
            (1..=max_v).flat_map(move |lv| {
                let u = u.clone();
                words_of_length(k, lv).map(move |v| UpWord {
                    prefix: u.clone(),
                    period: v,
                })
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn single_letter_corpus() {
        let a = Alphabet::new(["a"]).unwrap();
        let all: Vec<UpWord> = enumerate_upwords(&a, 1, 1).collect();
        assert_eq!(
            all,
            vec![
                UpWord::new(vec![], vec![0]).unwrap(),
                UpWord::new(vec![0], vec![0]).unwrap()
            ]
        );
    }

    #[test]
    fn two_letter_periods_only() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(enumerate_upwords(&ab, 0, 2).count(), 6);
    }

    #[test]
    fn duplicate_free_and_ordered() {
        let ab = Alphabet::new(["a", "b", "c"]).unwrap();
        let all: Vec<UpWord> = enumerate_upwords(&ab, 2, 2).collect();
        let set: HashSet<&UpWord> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all.len(), 13 * 12);
        let key = |w: &UpWord| (w.prefix.len(), w.prefix.clone(), w.period.len(), w.period.clone());
        assert!(all.windows(2).all(|p| key(&p[0]) < key(&p[1])));
    }

    #[test]
    fn canonical_form() {
        let w = UpWord::new(vec![0, 1, 0, 1], vec![0, 1, 0, 1]).unwrap();
        assert_eq!(w.canonical(), UpWord::new(vec![], vec![0, 1]).unwrap());
        let w = UpWord::new(vec![1, 1, 0], vec![1, 0]).unwrap();
        assert_eq!(w.canonical(), UpWord::new(vec![1], vec![1, 0]).unwrap());
        assert!(w.same_word(&w.unroll()) && w.same_word(&w.pump(3)));
        assert!(!w.same_word(&UpWord::new(vec![], vec![1, 0]).unwrap()));
    }

    #[test]
    fn empty_period_rejected() {
        assert!(UpWord::new(vec![0], vec![]).is_err());
    }
}
