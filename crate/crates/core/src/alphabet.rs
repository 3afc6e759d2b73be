use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`].
pub type Symbol = usize;

/// A finite word as a sequence of symbol indices.
pub type Word = Vec<Symbol>;

/// An ordered set of distinct symbol names. The declaration order fixes the
/// lexicographic order used by every canonical enumeration in the crate.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::semantic("alphabet is empty"));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if !is_token(s) || s == "ε" {
                return Err(Error::semantic(format!("invalid symbol name {s:?}")));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::semantic(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// The alphabet `{0, .., k-1}` with decimal symbol names.
    pub fn numeric(k: usize) -> Result<Self> {
        Alphabet::new((0..k).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, a: Symbol) -> &str {
        &self.symbols[a]
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word written either as whitespace-separated symbol names or,
    /// when every symbol is a single character, as a contiguous string.
    /// The empty string and `ε` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Vec::new());
        }
        let lookup = |tok: &str| {
            self.symbol(tok)
                .ok_or_else(|| Error::semantic(format!("unknown symbol {tok:?}")))
        };
        if text.split_whitespace().nth(1).is_some() {
            return text.split_whitespace().map(lookup).collect();
        }
        if let Some(a) = self.symbol(text) {
            return Ok(vec![a]);
        }
        if self.single_char() {
            let mut buf = [0u8; 4];
            return text.chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect();
        }
        Err(Error::semantic(format!("unknown symbol {text:?}")))
    }

    /// Formats a word so that [`Alphabet::parse_word`] reads it back.
    pub fn format_word(&self, w: &[Symbol]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char() { "" } else { " " };
        w.iter().map(|&a| self.name(a)).collect::<Vec<_>>().join(sep)
    }

    /// All words of exactly `len` symbols in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> {
        words_of_length(self.len(), len)
    }
}

pub(crate) fn words_of_length(k: usize, len: usize) -> impl Iterator<Item = Word> {
    let mut next = if k == 0 && len > 0 { None } else { Some(vec![0; len]) };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = len;
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < k {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '#')
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
    }

    #[test]
    fn word_round_trip() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(ab.parse_word("abba").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(ab.parse_word("a b").unwrap(), vec![0, 1]);
        assert_eq!(ab.parse_word("").unwrap(), Vec::<Symbol>::new());
        assert_eq!(ab.format_word(&[1, 0]), "ba");

        let long = Alphabet::new(["go", "stop"]).unwrap();
        let w = long.parse_word("go stop go").unwrap();
        assert_eq!(long.parse_word(&long.format_word(&w)).unwrap(), w);
        assert!(long.parse_word("gostop").is_err());
    }

    #[test]
    fn words_in_lex_order() {
        let all: Vec<Word> = words_of_length(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(words_of_length(3, 0).count(), 1);
        assert_eq!(words_of_length(3, 4).count(), 81);
    }
}
