use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(u64),
    Ring,
    Cap,
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Star,
    Caret,
    Equals,
    Eof,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::Int(n) => format!("`{n}`"),
            Token::Ring => "`ring`".into(),
            Token::Cap => "`cap`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::Semi => "`;`".into(),
            Token::Plus => "`+`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Equals => "`=`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

/// A 1-based source position; columns count characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub fn error(self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub pos: Pos,
}

/// Splits `text` into tokens. `#` starts a comment running to the end of the
/// line, `∩` is accepted for `cap`, and the stream always ends with `Eof`.
pub fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |pos: &mut Pos, c: char| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(&mut pos, c);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                advance(&mut pos, c);
            }
            continue;
        }
        let token = if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                advance(&mut pos, d);
            }
            Token::Int(
                digits
                    .parse()
                    .map_err(|_| start.error(format!("integer `{digits}` is too large")))?,
            )
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                word.push(d);
                chars.next();
                advance(&mut pos, d);
            }
            match word.as_str() {
                "ring" => Token::Ring,
                "cap" => Token::Cap,
                _ => Token::Ident(word),
            }
        } else {
            chars.next();
            advance(&mut pos, c);
            match c {
                '(' => Token::LParen,
                ')' => Token::RParen,
                ',' => Token::Comma,
                ';' => Token::Semi,
                '+' => Token::Plus,
                '*' => Token::Star,
                '^' => Token::Caret,
                '=' => Token::Equals,
                '∩' => Token::Cap,
                other => return Err(start.error(format!("unexpected character `{other}`"))),
            }
        };
        out.push(Spanned { token, pos: start });
    }
    out.push(Spanned {
        token: Token::Eof,
        pos,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<Token> {
        tokenize(text).unwrap().into_iter().map(|s| s.token).collect()
    }

    #[test]
    fn tokens_and_keywords() {
        assert_eq!(
            kinds("ring x1,y; I = (x1^3) cap (y) ∩ I"),
            vec![
                Token::Ring,
                Token::Ident("x1".into()),
                Token::Comma,
                Token::Ident("y".into()),
                Token::Semi,
                Token::Ident("I".into()),
                Token::Equals,
                Token::LParen,
                Token::Ident("x1".into()),
                Token::Caret,
                Token::Int(3),
                Token::RParen,
                Token::Cap,
                Token::LParen,
                Token::Ident("y".into()),
                Token::RParen,
                Token::Cap,
                Token::Ident("I".into()),
                Token::Eof,
            ]
        );
    }

    #[test]
    fn positions_and_comments() {
        let toks = tokenize("ring x # note\n  (x)").unwrap();
        assert_eq!(toks[2].pos, Pos { line: 2, column: 3 });
        assert_eq!(toks[2].token, Token::LParen);
    }

    #[test]
    fn bad_characters_are_positioned() {
        let err = tokenize("ring x;\n (x) - (x)").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 6,
                message: "unexpected character `-`".into()
            }
        );
        assert!(tokenize("99999999999999999999999").is_err());
    }
}
