//! Generator tokens and words.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    E,
    G,
}

/// A generator `g_i` or `e_i`, packed as `(index << 1) | kind` so that the
/// natural byte order is by index first, then `e < g`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenTok(u8);

impl GenTok {
    pub fn new(kind: Kind, index: usize) -> Self {
        assert!((1..128).contains(&index), "generator index out of range");
        GenTok(((index as u8) << 1) | kind as u8)
    }

    pub fn g(index: usize) -> Self {
        Self::new(Kind::G, index)
    }

    pub fn e(index: usize) -> Self {
        Self::new(Kind::E, index)
    }

    pub fn kind(self) -> Kind {
        if self.0 & 1 == 1 {
            Kind::G
        } else {
            Kind::E
        }
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn with_index(self, index: usize) -> Self {
        Self::new(self.kind(), index)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let kind = match s.as_bytes().first()? {
            b'g' => Kind::G,
            b'e' => Kind::E,
            _ => return None,
        };
        let idx: usize = s[1..].parse().ok()?;
        if (1..128).contains(&idx) {
            Some(Self::new(kind, idx))
        } else {
            None
        }
    }
}

impl fmt::Display for GenTok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind() {
            Kind::G => 'g',
            Kind::E => 'e',
        };
        write!(f, "{c}{}", self.index())
    }
}

impl fmt::Debug for GenTok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial in the generators; the empty word is the identity.
///
/// Words are ordered degree-lexicographically: shorter first, then by tokens.
/// This is the monomial order the rewriting kernel is oriented by.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<GenTok>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_tokens(t: Vec<GenTok>) -> Self {
        Word(t)
    }

    pub fn tokens(&self) -> &[GenTok] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, t: GenTok) {
        self.0.push(t);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|t| t.with_index(f(t.index()))).collect())
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|t| t.index()).max().unwrap_or(0)
    }

    pub fn has_e(&self) -> bool {
        self.0.iter().any(|t| t.kind() == Kind::E)
    }

    /// Position of the first occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&s| self.0[s..s + pat.len()] == pat.0[..])
    }

    /// Parses a whitespace- or `*`-separated list such as `"g1 e2*g1"`.
    pub fn parse(s: &str) -> Option<Word> {
        let mut v = Vec::new();
        for part in s.split(|c: char| c.is_whitespace() || c == '*').filter(|p| !p.is_empty()) {
            v.push(GenTok::parse(part)?);
        }
        Some(Word(v))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|t| alloc::format!("{t}")).collect()
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

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `g_from g_{from-1} ... g_to` (descending) or ascending when `from < to`;
/// empty when `len == 0`.
pub fn chain(kind: Kind, from: usize, len: usize, descending: bool) -> Word {
    let mut v = Vec::with_capacity(len);
    for j in 0..len {
        let idx = if descending { from - j } else { from + j };
        v.push(GenTok::new(kind, idx));
    }
    Word(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::parse("g2 g1 g2").unwrap();
        let b = Word::parse("g1 g2 g1").unwrap();
        assert!(a > b);
        assert!(Word::parse("e1 g2 g1").unwrap() > Word::parse("e1 e2").unwrap());
        assert!(Word::parse("g1 g2").unwrap() > Word::parse("e1 g2").unwrap());
        assert!(Word::parse("e1 e2 e3").unwrap() > Word::parse("g3 g3").unwrap());
    }

    #[test]
    fn parse_and_display() {
        let w = Word::parse("g1*e2 g3").unwrap();
        assert_eq!(alloc::format!("{w}"), "g1*e2*g3");
        assert_eq!(w.to_strings(), ["g1", "e2", "g3"]);
        assert!(Word::parse("x1").is_none());
        assert!(Word::parse("g0").is_none());
        assert_eq!(Word::parse("").unwrap(), Word::empty());
    }

    #[test]
    fn chains() {
        assert_eq!(chain(Kind::G, 3, 3, true), Word::parse("g3 g2 g1").unwrap());
        assert_eq!(chain(Kind::E, 1, 2, false), Word::parse("e1 e2").unwrap());
        assert!(chain(Kind::G, 4, 0, true).is_empty());
    }
}
