//! Boolean patterns over classification flags, e.g. `b_irr and not irr`.
//!
//! ```text
//! expr := term ("or" term)*
//! term := factor ("and" factor)*
//! factor := "not" factor | "(" expr ")" | FLAG
//! ```

use crate::error::{Error, Result};
use crate::irreducible::{classify_ring, ClassificationRecord, Flag};
use crate::ring::{ElementId, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Flag(Flag),
    Not(Box<Pattern>),
    And(Box<Pattern>, Box<Pattern>),
    Or(Box<Pattern>, Box<Pattern>),
}

impl Pattern {
    pub fn parse(text: &str) -> Result<Pattern> {
        let tokens = tokenize(text)?;
        let mut parser = PatternParser {
            tokens,
            pos: 0,
            end: text.len(),
        };
        let pattern = parser.expr()?;
        if let Some((at, tok)) = parser.tokens.get(parser.pos) {
            return Err(Error::syntax(*at, format!("unexpected '{tok}'")));
        }
        Ok(pattern)
    }

    pub fn matches(&self, record: &ClassificationRecord) -> bool {
        match self {
            Pattern::Flag(f) => record.get(*f),
            Pattern::Not(p) => !p.matches(record),
            Pattern::And(a, b) => a.matches(record) && b.matches(record),
            Pattern::Or(a, b) => a.matches(record) || b.matches(record),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, String)>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' || c == ')' {
            tokens.push((i, c.to_string()));
            chars.next();
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push((i, word));
        } else {
            return Err(Error::syntax(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(tokens)
}

struct PatternParser {
    tokens: Vec<(usize, String)>,
    pos: usize,
    end: usize,
}

impl PatternParser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(|(_, t)| t.as_str())
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn expr(&mut self) -> Result<Pattern> {
        let mut left = self.term()?;
        while self.peek() == Some("or") {
            self.pos += 1;
            left = Pattern::Or(Box::new(left), Box::new(self.term()?));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Pattern> {
        let mut left = self.factor()?;
        while self.peek() == Some("and") {
            self.pos += 1;
            left = Pattern::And(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Pattern> {
        let at = self.here();
        match self.peek() {
            Some("not") => {
                self.pos += 1;
                Ok(Pattern::Not(Box::new(self.factor()?)))
            }
            Some("(") => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(")") {
                    return Err(Error::syntax(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(word) => match Flag::from_name(word) {
                Some(flag) => {
                    self.pos += 1;
                    Ok(Pattern::Flag(flag))
                }
                None => Err(Error::syntax(at, format!("unknown flag '{word}'"))),
            },
            None => Err(Error::syntax(at, "unexpected end of pattern")),
        }
    }
}

/// Elements whose classification matches `pattern`, ascending.
pub fn find_counterexamples(ring: &FiniteRing, pattern: &Pattern) -> Vec<ElementId> {
    classify_ring(ring)
        .into_iter()
        .filter(|c| pattern.matches(c))
        .map(|c| c.element)
        .collect()
}
