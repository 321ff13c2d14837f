use super::{Diagnostic, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Keyword(&'static str),
    Number(String),
    /// Normalized to the double-quoted printed form.
    Str(String),
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub const KEYWORDS: &[&str] = &[
    "var", "let", "const", "function", "return", "if", "else", "export", "true", "false",
];

// Longest first so that greedy matching works.
const PUNCTS: &[&str] = &[
    "===", "...", "?.", "=>", "&&", "||", "(", ")", "[", "]", "{", "}", "<", ">", ",", ";", ":",
    ".", "+", "-", "*", "/", "!", "=",
];

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

/// True when `s` lexes as exactly one identifier token.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if is_ident_start(c) => {}
        _ => return false,
    }
    chars.all(is_ident_char) && !is_keyword(s)
}

pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < src.len() {
        let c = src[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        if src[i..].starts_with("//") || src[i..].starts_with("/*") {
            return Err(Diagnostic::new(Span::new(i, i + 2), "comments are not supported"));
        }
        let start = i;
        if is_ident_start(c) {
            while i < src.len() && is_ident_char(bytes[i] as char) {
                i += 1;
            }
            let word = &src[start..i];
            let tok = match KEYWORDS.iter().find(|k| **k == word) {
                Some(k) => Tok::Keyword(k),
                None => Tok::Ident(word.to_string()),
            };
            out.push(Token { tok, span: Span::new(start, i) });
            continue;
        }
        if c.is_ascii_digit() {
            while i < src.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < src.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < src.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < src.len() && is_ident_start(bytes[i] as char) {
                return Err(Diagnostic::new(Span::new(start, i + 1), "invalid number literal"));
            }
            out.push(Token { tok: Tok::Number(src[start..i].to_string()), span: Span::new(start, i) });
            continue;
        }
        if c == '"' || c == '\'' {
            let (value, end) = lex_string(src, i, c)?;
            i = end;
            out.push(Token { tok: Tok::Str(quote(&value)), span: Span::new(start, i) });
            continue;
        }
        match PUNCTS.iter().find(|p| src[i..].starts_with(**p)) {
            Some(p) => {
                i += p.len();
                out.push(Token { tok: Tok::Punct(p), span: Span::new(start, i) });
            }
            None => {
                return Err(Diagnostic::new(
                    Span::new(start, start + c.len_utf8()),
                    format!("unexpected character '{c}'"),
                ))
            }
        }
    }
    out.push(Token { tok: Tok::Eof, span: Span::new(src.len(), src.len()) });
    Ok(out)
}

fn lex_string(src: &str, start: usize, q: char) -> Result<(String, usize), Diagnostic> {
    let mut value = String::new();
    let mut iter = src[start + 1..].char_indices();
    while let Some((off, c)) = iter.next() {
        let pos = start + 1 + off;
        match c {
            _ if c == q => return Ok((value, pos + 1)),
            '\n' => break,
            '\\' => {
                let Some((_, e)) = iter.next() else { break };
                value.push(match e {
                    'n' => '\n',
                    't' => '\t',
                    'r' => '\r',
                    '0' => '\0',
                    other => other,
                });
            }
            _ => value.push(c),
        }
    }
    Err(Diagnostic::new(Span::new(start, src.len()), "unterminated string literal"))
}

/// Renders a string value as a double-quoted literal.
pub fn quote(value: &str) -> String {
    let mut s = String::with_capacity(value.len() + 2);
    s.push('"');
    for c in value.chars() {
        match c {
            '"' => s.push_str("\\\""),
            '\\' => s.push_str("\\\\"),
            '\n' => s.push_str("\\n"),
            '\t' => s.push_str("\\t"),
            '\r' => s.push_str("\\r"),
            '\0' => s.push_str("\\0"),
            _ => s.push(c),
        }
    }
    s.push('"');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        lex(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn greedy_punctuation() {
        assert_eq!(
            toks("a?.b === ...c"),
            vec![
                Tok::Ident("a".into()),
                Tok::Punct("?."),
                Tok::Ident("b".into()),
                Tok::Punct("==="),
                Tok::Punct("..."),
                Tok::Ident("c".into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn strings_normalize_to_double_quotes() {
        assert_eq!(toks("'it''s'")[0], Tok::Str("\"it\"".into()));
        assert_eq!(toks(r#"'say "hi"'"#)[0], Tok::Str(r#""say \"hi\"""#.into()));
        assert_eq!(toks(r#""a\'b""#)[0], Tok::Str("\"a'b\"".into()));
    }

    #[test]
    fn comments_rejected() {
        let err = lex("a; // note").unwrap_err();
        assert_eq!(err.span, Span::new(3, 5));
        assert!(lex("/* x */").is_err());
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("$_"));
        assert!(is_identifier("old_x1"));
        assert!(!is_identifier("1x"));
        assert!(!is_identifier("var"));
        assert!(!is_identifier("a b"));
        assert!(!is_identifier(""));
    }

    #[test]
    fn numbers() {
        assert_eq!(toks("3.25")[0], Tok::Number("3.25".into()));
        assert_eq!(toks("1.x")[0], Tok::Number("1".into()));
        assert!(lex("12ab").is_err());
    }
}
