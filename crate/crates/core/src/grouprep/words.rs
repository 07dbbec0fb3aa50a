//! Words in the two generators, e.g. `ab^-1ab` or `a^-1bab^2`.

use std::fmt;

use super::GroupError;

/// Largest exponent magnitude accepted by the parser.
pub const MAX_EXPONENT: i32 = 1000;
/// Longest word accepted by the parser.
pub const MAX_LETTERS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    /// `(generator index, exponent)`; `a` is 0 and `b` is 1.
    pub syllables: Vec<(usize, i32)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { syllables: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let t = text.trim();
        if t == "id" || t.is_empty() {
            return Ok(Self::identity());
        }
        let bytes = t.as_bytes();
        let mut syllables = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let gen = match bytes[i] {
                b'a' => 0,
                b'b' => 1,
                _ => return Err(GroupError::BadWord(format!("unexpected {:?} in {t:?}", bytes[i] as char))),
            };
            i += 1;
            let mut exp = 1i32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let neg = i < bytes.len() && bytes[i] == b'-';
                if neg {
                    i += 1;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i || i - start > 4 {
                    return Err(GroupError::BadWord(format!("bad exponent in {t:?}")));
                }
                let v: i32 = t[start..i].parse().expect("ascii digits");
                if v > MAX_EXPONENT {
                    return Err(GroupError::BadWord(format!("exponent {v} too large")));
                }
                exp = if neg { -v } else { v };
            }
            syllables.push((gen, exp));
            if syllables.len() > MAX_LETTERS {
                return Err(GroupError::BadWord("word too long".into()));
            }
        }
        Ok(Word { syllables })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "id");
        }
        for &(g, e) in &self.syllables {
            let c = if g == 0 { 'a' } else { 'b' };
            if e == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_table_header_words() {
        assert_eq!(Word::parse("id").unwrap(), Word::identity());
        assert_eq!(Word::parse("ab^-1ab").unwrap().syllables, vec![(0, 1), (1, -1), (0, 1), (1, 1)]);
        assert_eq!(Word::parse("a^-1bab^2").unwrap().syllables, vec![(0, -1), (1, 1), (0, 1), (1, 2)]);
        for w in ["a", "ababab^2", "a^-1b", "ab"] {
            assert_eq!(Word::parse(w).unwrap().to_string(), w);
        }
    }

    #[test]
    fn rejects_garbage() {
        for w in ["c", "a^", "a^-", "a^99999", "a^x", "ab c"] {
            assert!(Word::parse(w).is_err(), "{w}");
        }
        assert!(Word::parse(&"a".repeat(300)).is_err());
    }
}
