//! Text grammar for signed words.
//!
//! ```text
//! word ::= "1" | atom ("*" atom)*
//! atom ::= "~" atom | identifier | "(" word ")"
//! ```
//!
//! An identifier denotes `η(identifier)`; `~` applies the involution of the
//! selected mode and binds tighter than `*`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Alphabet, Mode, SignedWord, WordError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {pos}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    One,
    Ident(String),
    Star,
    Tilde,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'~' => {
                out.push((i, Token::Tilde));
                i += 1;
            }
            b'(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            b'1' => {
                out.push((i, Token::One));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ParseError { pos: i, message: alloc::format!("unexpected character {:?}", c as char) })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    at: usize,
    end: usize,
    alphabet: Arc<Alphabet>,
    mode: Mode,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, message: &str) -> ParseError {
        ParseError { pos: self.pos(), message: message.into() }
    }

    fn word(&mut self) -> Result<SignedWord, ParseError> {
        if self.peek() == Some(&Token::One) {
            self.at += 1;
            return Ok(SignedWord::unit(&self.alphabet));
        }
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.at += 1;
            let next = self.atom()?;
            acc = acc.concat(&next).map_err(|e| self.err(&e.to_string()))?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<SignedWord, ParseError> {
        match self.peek().cloned() {
            Some(Token::Tilde) => {
                self.at += 1;
                Ok(self.atom()?.involve(self.mode))
            }
            Some(Token::Ident(name)) => {
                let pos = self.pos();
                self.at += 1;
                SignedWord::eta(&self.alphabet, &name).map_err(|e| match e {
                    WordError::UnknownSymbol(s) => {
                        ParseError { pos, message: alloc::format!("unknown symbol {s:?}") }
                    }
                    other => ParseError { pos, message: other.to_string() },
                })
            }
            Some(Token::Open) => {
                self.at += 1;
                let inner = self.word()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.err("expected ')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            Some(Token::One) => Err(self.err("'1' must stand alone or in parentheses")),
            Some(_) => Err(self.err("expected symbol, '~' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `text` into a word.
///
/// Without an explicit alphabet, the alphabet is the sorted set of
/// identifiers occurring in `text`.
pub fn parse_word(text: &str, alphabet: Option<&Arc<Alphabet>>, mode: Mode) -> Result<SignedWord, ParseError> {
    let tokens = tokenize(text)?;
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => {
            let names: BTreeSet<&str> = tokens
                .iter()
                .filter_map(|(_, t)| match t {
                    Token::Ident(n) => Some(n.as_str()),
                    _ => None,
                })
                .collect();
            Alphabet::new(names).expect("set has no duplicates")
        }
    };
    let mut p = Parser { tokens: &tokens, at: 0, end: text.len(), alphabet, mode };
    let w = p.word()?;
    if p.at != tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn show(text: &str, mode: Mode) -> String {
        format!("{}", parse_word(text, None, mode).unwrap())
    }

    #[test]
    fn involve_reversing() {
        assert_eq!(show("~(a * ~b)", Mode::Reversing), "b * ~a");
        assert_eq!(show("~(a * ~b)", Mode::NonReversing), "~a * b");
    }

    #[test]
    fn double_involution_normalizes() {
        assert_eq!(show("~(~a)", Mode::Reversing), "a");
        assert_eq!(show("~~a", Mode::NonReversing), "a");
        assert_eq!(show("~(1)", Mode::Reversing), "1");
        assert!(parse_word("~1", None, Mode::Reversing).is_err());
    }

    #[test]
    fn unit_and_parentheses() {
        assert_eq!(show("1", Mode::Reversing), "1");
        assert_eq!(show("(1) * a", Mode::Reversing), "a");
        assert_eq!(show("a * (b * c)", Mode::Reversing), "a * b * c");
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_word("a * ", None, Mode::Reversing).unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_word("a # b", None, Mode::Reversing).unwrap_err();
        assert_eq!(e.pos, 2);
        let e = parse_word("(a * b", None, Mode::Reversing).unwrap_err();
        assert_eq!(e.pos, 6);
        let e = parse_word("a b", None, Mode::Reversing).unwrap_err();
        assert_eq!(e.pos, 2);
        let alpha = Alphabet::standard(1);
        let e = parse_word("a * b", Some(&alpha), Mode::Reversing).unwrap_err();
        assert_eq!(e.pos, 4);
    }

    #[test]
    fn print_parse_roundtrip() {
        let alpha = Alphabet::standard(2);
        for w in super::super::all_words(&alpha, 3) {
            let back = parse_word(&format!("{w}"), Some(&alpha), Mode::Reversing).unwrap();
            assert_eq!(back, w);
        }
    }
}
