use num_bigint::BigInt;

use super::ast::Pos;
use super::Diagnostic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    /// `--name`
    Flag(String),
    Eq,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    PlusPlus,
    /// Statement separator: `;` or a newline outside brackets.
    Sep,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Flag(s) => format!("'--{s}'"),
            Tok::Eq => "'='".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Slash => "'/'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::PlusPlus => "'++'".into(),
            Tok::Sep => "end of statement".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut depth = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let peek = chars.get(i + 1).copied();
        let mut advance = 1;
        let tok = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                if depth == 0 {
                    out.push(Token { tok: Tok::Sep, pos });
                }
                continue;
            }
            c if c.is_whitespace() => None,
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                    col += 1;
                }
                continue;
            }
            ';' => Some(Tok::Sep),
            '=' => Some(Tok::Eq),
            '[' => {
                depth += 1;
                Some(Tok::LBracket)
            }
            ']' => {
                depth = depth.saturating_sub(1);
                Some(Tok::RBracket)
            }
            '(' => {
                depth += 1;
                Some(Tok::LParen)
            }
            ')' => {
                depth = depth.saturating_sub(1);
                Some(Tok::RParen)
            }
            ',' => Some(Tok::Comma),
            '/' => Some(Tok::Slash),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '+' if peek == Some('+') => {
                advance = 2;
                Some(Tok::PlusPlus)
            }
            '+' => Some(Tok::Plus),
            '-' if peek == Some('-')
                && chars.get(i + 2).is_some_and(|c| c.is_ascii_alphabetic()) =>
            {
                let start = i + 2;
                let mut j = start;
                while j < chars.len()
                    && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '-')
                {
                    j += 1;
                }
                advance = j - i;
                Some(Tok::Flag(chars[start..j].iter().collect()))
            }
            '-' => Some(Tok::Minus),
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().collect();
                advance = j - i;
                Some(Tok::Int(digits.parse().expect("ascii digits")))
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                advance = j - i;
                Some(Tok::Ident(chars[i..j].iter().collect()))
            }
            other => {
                return Err(Diagnostic::Syntax {
                    line,
                    col,
                    expected: vec!["a token".into()],
                    found: format!("'{other}'"),
                })
            }
        };
        if let Some(tok) = tok {
            out.push(Token { tok, pos });
        }
        i += advance;
        col += advance;
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}
