use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An opaque token. Constructed limits and monad images nest atoms so that
/// every element has one canonical spelling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Int(i64),
    Sym(String),
    /// The adjoined point of the maybe monad.
    Bot,
    /// The "present" injection of the maybe monad.
    Just(Box<Atom>),
    Tup(Vec<Atom>),
    Word(Vec<Atom>),
}

impl Atom {
    pub fn sym(s: impl Into<String>) -> Atom {
        Atom::Sym(s.into())
    }

    pub fn int(n: i64) -> Atom {
        Atom::Int(n)
    }

    pub fn pair(a: Atom, b: Atom) -> Atom {
        Atom::Tup(vec![a, b])
    }

    pub fn just(a: Atom) -> Atom {
        Atom::Just(Box::new(a))
    }

    pub fn word(letters: Vec<Atom>) -> Atom {
        Atom::Word(letters)
    }

    pub fn as_tup(&self) -> Option<&[Atom]> {
        match self {
            Atom::Tup(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&[Atom]> {
        match self {
            Atom::Word(v) => Some(v),
            _ => None,
        }
    }

    /// Component `i` of a tuple atom.
    pub fn proj(&self, i: usize) -> Result<&Atom> {
        self.as_tup()
            .and_then(|v| v.get(i))
            .ok_or_else(|| Error::ty(format!("{self} has no component {i}")))
    }

    /// Size used to truncate the free-monoid monad: leaves and empty words
    /// count one each, so every finite truncation is closed under the monad
    /// structure maps.
    pub fn size(&self) -> usize {
        match self {
            Atom::Word(v) => v.iter().map(Atom::size).sum::<usize>().max(1),
            _ => 1,
        }
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Atom {
        s.parse().unwrap_or_else(|_| Atom::Sym(s.to_string()))
    }
}

impl From<i64> for Atom {
    fn from(n: i64) -> Atom {
        Atom::Int(n)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, open: char, close: char, v: &[Atom]) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, a) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    write!(f, "{close}")
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(n) => write!(f, "{n}"),
            Atom::Sym(s) => write!(f, "{s}"),
            Atom::Bot => write!(f, "_|_"),
            Atom::Just(a) => write!(f, "just({a})"),
            Atom::Tup(v) => write_list(f, '(', ')', v),
            Atom::Word(v) => write_list(f, '[', ']', v),
        }
    }
}

fn is_sym_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '*' | '.' | '-' | '#')
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: format!("{msg} in atom {:?}", self.src) }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn list(&mut self, close: char) -> Result<Vec<Atom>> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.atom()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err(&format!("expected ',' or '{close}'"))),
            }
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if rest.starts_with("_|_") {
            self.pos += 3;
            return Ok(Atom::Bot);
        }
        if rest.starts_with('⊥') {
            self.pos += '⊥'.len_utf8();
            return Ok(Atom::Bot);
        }
        if rest.starts_with("just(") {
            self.pos += 5;
            let inner = self.atom()?;
            self.expect(')')?;
            return Ok(Atom::just(inner));
        }
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                Ok(Atom::Tup(self.list(')')?))
            }
            Some('[') => {
                self.pos += 1;
                Ok(Atom::Word(self.list(']')?))
            }
            Some(c) if is_sym_char(c) => {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if is_sym_char(c) {
                        self.pos += c.len_utf8();
                    } else {
                        break;
                    }
                }
                let tok = &self.src[start..self.pos];
                match tok.parse::<i64>() {
                    Ok(n) => Ok(Atom::Int(n)),
                    Err(_) => Ok(Atom::Sym(tok.to_string())),
                }
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Atom> {
        let mut p = Parser { src: s, pos: 0 };
        let a = p.atom()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        let samples = vec![
            Atom::int(-3),
            Atom::sym("u"),
            Atom::Bot,
            Atom::just(Atom::just(Atom::Bot)),
            Atom::pair(Atom::sym("a"), Atom::word(vec![])),
            Atom::word(vec![Atom::word(vec![Atom::sym("x")]), Atom::Tup(vec![])]),
            Atom::sym("*"),
        ];
        for a in samples {
            let text = a.to_string();
            assert_eq!(text.parse::<Atom>().unwrap(), a, "{text}");
        }
    }

    #[test]
    fn size_counts_leaves_and_empty_words() {
        assert_eq!(Atom::word(vec![]).size(), 1);
        let w = Atom::word(vec![Atom::word(vec![]), Atom::word(vec![Atom::sym("a"), Atom::sym("b")])]);
        assert_eq!(w.size(), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!("(a,".parse::<Atom>().is_err());
        assert!("a b".parse::<Atom>().is_err());
    }
}
