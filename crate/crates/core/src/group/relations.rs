//! Group words and relation strings such as `a^8=b^2=1, bab=a^5`.
//!
//! Generators are single ASCII letters, `1` is the identity, parentheses
//! group, and `^` takes a (possibly negative) integer exponent. A relation
//! is a chain `w1=w2=...` asserting that all words are equal; relations are
//! separated by commas.

use std::collections::HashMap;

use super::GroupTable;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Generator(char),
    Identity,
    Group(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<Factor>);

/// One relation: every word in the chain evaluates to the same element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub text: String,
    pub words: Vec<Word>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut factors = Vec::new();
        loop {
            let atom = match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    self.pos += 1;
                    Atom::Generator(c as char)
                }
                Some(b'1') => {
                    self.pos += 1;
                    Atom::Identity
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.word()?;
                    if self.peek() != Some(b')') {
                        return Err(Error::parse(self.pos, "expected `)`"));
                    }
                    self.pos += 1;
                    Atom::Group(inner)
                }
                _ => break,
            };
            let exponent = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.integer()?
            } else {
                1
            };
            factors.push(Factor { atom, exponent });
        }
        if factors.is_empty() {
            return Err(Error::parse(self.pos, "expected a word"));
        }
        Ok(Word(factors))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(start, "expected an integer exponent"))
    }
}

/// Parses a comma-separated list of relation chains.
pub fn parse_relations(text: &str) -> Result<Vec<Relation>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut relations = Vec::new();
    loop {
        let start = parser.pos;
        let mut words = vec![parser.word()?];
        while parser.peek() == Some(b'=') {
            parser.pos += 1;
            words.push(parser.word()?);
        }
        if words.len() < 2 {
            return Err(Error::parse(parser.pos, "expected `=`"));
        }
        relations.push(Relation {
            text: text[start..parser.pos].trim().to_string(),
            words,
        });
        match parser.peek() {
            None => break,
            Some(b',') => parser.pos += 1,
            Some(_) => return Err(Error::parse(parser.pos, "expected `,` or end of input")),
        }
    }
    Ok(relations)
}

/// Evaluates a word with the given generator assignment.
pub fn evaluate(g: &GroupTable, names: &HashMap<char, usize>, word: &Word) -> Result<usize> {
    let mut acc = g.identity();
    for factor in &word.0 {
        let base = match &factor.atom {
            Atom::Generator(c) => *names
                .get(c)
                .ok_or_else(|| Error::Validation(format!("generator `{c}` is not assigned")))?,
            Atom::Identity => g.identity(),
            Atom::Group(inner) => evaluate(g, names, inner)?,
        };
        acc = g.mul(acc, g.pow(base, factor.exponent));
    }
    Ok(acc)
}

/// Checks every relation of `text`; the error names the first one that fails.
pub fn check_relations(g: &GroupTable, names: &HashMap<char, usize>, text: &str) -> Result<()> {
    for relation in parse_relations(text)? {
        let values = relation
            .words
            .iter()
            .map(|w| evaluate(g, names, w))
            .collect::<Result<Vec<_>>>()?;
        if values.windows(2).any(|p| p[0] != p[1]) {
            return Err(Error::Verification(format!(
                "relation `{}` does not hold",
                relation.text
            )));
        }
    }
    Ok(())
}
