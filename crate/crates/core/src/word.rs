//! Outer commutator words: bracket trees whose leaves are `x1, ..., xt`,
//! each used once, in left-to-right order.
//!
//! Grammar: `word := "x" digits | "[" word "," word "]"`, whitespace
//! ignored. Two shorthand families are accepted as well:
//! `nilpotent:c` is the left-normed word `[[x1,x2],...,x(c+1)]` and
//! `solvable:d` is the derived word of weight `2^d`.
//!
//! The commutator convention is `[a, b] = a⁻¹b⁻¹ab`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OuterWord {
    /// The variable `x_i`, 1-based.
    Leaf(usize),
    Bracket(Box<OuterWord>, Box<OuterWord>),
}

impl OuterWord {
    pub fn bracket(left: OuterWord, right: OuterWord) -> OuterWord {
        OuterWord::Bracket(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn weight(&self) -> usize {
        match self {
            OuterWord::Leaf(_) => 1,
            OuterWord::Bracket(l, r) => l.weight() + r.weight(),
        }
    }

    /// Leaf indices read left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            OuterWord::Leaf(i) => out.push(*i),
            OuterWord::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Checks that the leaves read `1, 2, ..., t`.
    pub fn validate(&self) -> Result<()> {
        for (k, &i) in self.leaves().iter().enumerate() {
            if i != k + 1 {
                return Err(Error::VariableOrder {
                    expected: k + 1,
                    found: i,
                });
            }
        }
        Ok(())
    }

    /// Same shape with leaves renumbered `offset+1, offset+2, ...`.
    fn shifted(&self, offset: usize) -> OuterWord {
        match self {
            OuterWord::Leaf(i) => OuterWord::Leaf(i + offset),
            OuterWord::Bracket(l, r) => {
                OuterWord::bracket(l.shifted(offset), r.shifted(offset))
            }
        }
    }

    /// Left-normed `[x1, x2, ..., x(c+1)]`, the law of nilpotency class `c`.
    pub fn nilpotent(class: usize) -> OuterWord {
        (2..=class + 1).fold(OuterWord::Leaf(1), |w, i| {
            OuterWord::bracket(w, OuterWord::Leaf(i))
        })
    }

    /// `δ_d`: `δ_0 = x1`, `δ_d = [δ_(d-1), δ_(d-1)]` on fresh variables.
    pub fn solvable(length: usize) -> OuterWord {
        (0..length).fold(OuterWord::Leaf(1), |w, _| {
            let t = w.weight();
            OuterWord::bracket(w.clone(), w.shifted(t))
        })
    }

    pub fn parse(text: &str) -> Result<OuterWord> {
        let trimmed = text.trim();
        if let Some(rest) = trimmed.strip_prefix("nilpotent:") {
            return Ok(OuterWord::nilpotent(parse_shorthand_arg(text, rest)?));
        }
        if let Some(rest) = trimmed.strip_prefix("solvable:") {
            let d = parse_shorthand_arg(text, rest)?;
            if d > 16 {
                return Err(Error::WordSyntax {
                    position: 0,
                    message: "derived length too large".to_string(),
                });
            }
            return Ok(OuterWord::solvable(d));
        }
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let word = parser.word()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("trailing input"));
        }
        word.validate()?;
        Ok(word)
    }

    /// Evaluates the word on permutations, `args[i-1]` substituted for `x_i`.
    pub fn evaluate(&self, args: &[Permutation]) -> Result<Permutation> {
        if args.len() != self.weight() {
            return Err(Error::Arity {
                expected: self.weight(),
                found: args.len(),
            });
        }
        let degree = args[0].degree();
        if let Some(bad) = args.iter().find(|a| a.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        Ok(self.eval_at(args))
    }

    fn eval_at(&self, args: &[Permutation]) -> Permutation {
        match self {
            OuterWord::Leaf(i) => args[*i - 1].clone(),
            OuterWord::Bracket(l, r) => l.eval_at(args).commutator(&r.eval_at(args)),
        }
    }

    /// Canonical text form; `parse` inverts it.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn parse_shorthand_arg(text: &str, arg: &str) -> Result<usize> {
    arg.trim().parse().map_err(|_| Error::WordSyntax {
        position: text.find(':').map_or(0, |p| p + 1),
        message: "expected a non-negative integer".to_string(),
    })
}

impl fmt::Display for OuterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OuterWord::Leaf(i) => write!(f, "x{i}"),
            OuterWord::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl core::str::FromStr for OuterWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OuterWord::parse(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::WordSyntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(match c {
                b',' => "expected `,`",
                b']' => "expected `]`",
                _ => "unexpected character",
            }))
        }
    }

    fn word(&mut self) -> Result<OuterWord> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error("expected variable index after `x`"));
                }
                let digits = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
                let index: usize = digits.parse().map_err(|_| Error::WordSyntax {
                    position: start,
                    message: "variable index out of range".to_string(),
                })?;
                if index == 0 {
                    return Err(Error::WordSyntax {
                        position: start,
                        message: "variables start at x1".to_string(),
                    });
                }
                Ok(OuterWord::Leaf(index))
            }
            Some(b'[') => {
                self.pos += 1;
                let left = self.word()?;
                self.expect(b',')?;
                let right = self.word()?;
                self.expect(b']')?;
                Ok(OuterWord::bracket(left, right))
            }
            Some(_) => Err(self.error("expected `x` or `[`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
