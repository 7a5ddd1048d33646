//! Byte-level Java lexing: comment removal and top-level declaration scanning.
//!
//! Neither routine builds a syntax tree. They only track enough lexical state
//! (string and char literals, comments, brace depth) to tell code from
//! non-code.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unterminated block comment starting at byte {offset}")]
    UnterminatedComment { offset: usize },
    #[error("unterminated string literal starting at byte {offset}")]
    UnterminatedString { offset: usize },
    #[error("unterminated char literal starting at byte {offset}")]
    UnterminatedChar { offset: usize },
    #[error("malformed package declaration at byte {offset}")]
    MalformedPackage { offset: usize },
}

impl LexError {
    pub fn offset(&self) -> usize {
        match *self {
            LexError::UnterminatedComment { offset }
            | LexError::UnterminatedString { offset }
            | LexError::UnterminatedChar { offset }
            | LexError::MalformedPackage { offset } => offset,
        }
    }
}

/// Scans a quoted literal that opens at `start` (which holds `quote`).
/// Returns the index one past the closing quote.
fn scan_literal(bytes: &[u8], start: usize, quote: u8) -> Result<usize, LexError> {
    let err = || {
        if quote == b'"' {
            LexError::UnterminatedString { offset: start }
        } else {
            LexError::UnterminatedChar { offset: start }
        }
    };
    let mut i = start + 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => i += 2,
            b'\n' => return Err(err()),
            b if b == quote => return Ok(i + 1),
            _ => i += 1,
        }
    }
    Err(err())
}

/// Removes `//` and `/* */` comments from Java source.
///
/// Literal contents and all other bytes are copied verbatim. A line comment's
/// terminating newline is kept.
pub fn strip_comments(source: &str) -> Result<String, LexError> {
    let bytes = source.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'"' | b'\'' => {
                let end = scan_literal(bytes, i, bytes[i])?;
                out.extend_from_slice(&bytes[i..end]);
                i = end;
            }
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                // stop before the newline so it is emitted as ordinary code
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'*') => {
                let start = i;
                i += 2;
                loop {
                    if i + 1 >= bytes.len() {
                        return Err(LexError::UnterminatedComment { offset: start });
                    }
                    if bytes[i] == b'*' && bytes[i + 1] == b'/' {
                        i += 2;
                        break;
                    }
                    i += 1;
                }
            }
            b => {
                out.push(b);
                i += 1;
            }
        }
    }
    // Only whole ASCII delimiters were removed, so UTF-8 boundaries survive.
    Ok(String::from_utf8(out).expect("comment removal preserves UTF-8"))
}

/// Package and top-level type names of one compilation unit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Declarations {
    pub package: String,
    pub type_names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str, usize),
    Punct(u8, usize),
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80
}

fn is_ident_part(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

/// Tokens at brace depth zero, with literals skipped.
fn top_level_tokens(source: &str) -> Result<Vec<Token<'_>>, LexError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut depth = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'"' | b'\'' => i = scan_literal(bytes, i, b)?,
            b'{' => {
                if depth == 0 {
                    tokens.push(Token::Punct(b, i));
                }
                depth += 1;
                i += 1;
            }
            b'}' => {
                depth = depth.saturating_sub(1);
                i += 1;
            }
            _ if is_ident_start(b) => {
                let start = i;
                while i < bytes.len() && is_ident_part(bytes[i]) {
                    i += 1;
                }
                if depth == 0 {
                    tokens.push(Token::Ident(&source[start..i], start));
                }
            }
            _ if b.is_ascii_whitespace() => i += 1,
            _ => {
                if depth == 0 {
                    tokens.push(Token::Punct(b, i));
                }
                i += 1;
            }
        }
    }
    Ok(tokens)
}

/// Reads the package declaration and top-level class, interface and enum
/// names from comment-free source.
pub fn extract_decls(source: &str) -> Result<Declarations, LexError> {
    let tokens = top_level_tokens(source)?;
    let mut decls = Declarations::default();
    let mut i = 0;
    while i < tokens.len() {
        match tokens[i] {
            Token::Ident("package", offset) if decls.package.is_empty() && decls.type_names.is_empty() => {
                let (name, next) = read_dotted(&tokens, i + 1).ok_or(LexError::MalformedPackage { offset })?;
                match tokens.get(next) {
                    Some(Token::Punct(b';', _)) => {}
                    _ => return Err(LexError::MalformedPackage { offset }),
                }
                decls.package = name;
                i = next + 1;
            }
            // `@interface` lands here too: the `@` is a separate token.
            Token::Ident("class" | "interface" | "enum", _) => {
                if let Some(Token::Ident(name, _)) = tokens.get(i + 1) {
                    decls.type_names.push((*name).to_string());
                    i += 2;
                } else {
                    i += 1;
                }
            }
            _ => i += 1,
        }
    }
    Ok(decls)
}

fn read_dotted(tokens: &[Token<'_>], mut i: usize) -> Option<(String, usize)> {
    let mut name = String::new();
    loop {
        match tokens.get(i) {
            Some(Token::Ident(part, _)) => name.push_str(part),
            _ => return None,
        }
        i += 1;
        match tokens.get(i) {
            Some(Token::Punct(b'.', _)) => {
                name.push('.');
                i += 1;
            }
            _ => return Some((name, i)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removes_line_comment_keeps_newline() {
        assert_eq!(strip_comments("int a; // x\nint b;").unwrap(), "int a; \nint b;");
    }

    #[test]
    fn string_literal_is_protected() {
        let src = r#"String s = "// not a comment";"#;
        assert_eq!(strip_comments(src).unwrap(), src);
    }

    #[test]
    fn removes_block_comments() {
        assert_eq!(strip_comments("/* a */int b;/* c */").unwrap(), "int b;");
    }

    #[test]
    fn escaped_quotes_and_char_literals() {
        let src = r#"char q = '"'; String s = "a\"/*b*/"; char e = '\''; // tail"#;
        assert_eq!(
            strip_comments(src).unwrap(),
            r#"char q = '"'; String s = "a\"/*b*/"; char e = '\''; "#
        );
    }

    #[test]
    fn javadoc_and_comment_at_eof() {
        assert_eq!(
            strip_comments("/** doc */\nclass A {}\n// end").unwrap(),
            "\nclass A {}\n"
        );
    }

    #[test]
    fn unterminated_block_comment_reports_offset() {
        let err = strip_comments("int a; /* open").unwrap_err();
        assert_eq!(err, LexError::UnterminatedComment { offset: 7 });
        assert_eq!(strip_comments("/*").unwrap_err().offset(), 0);
    }

    #[test]
    fn unterminated_string_reports_offset() {
        assert_eq!(
            strip_comments("String s = \"abc\n;").unwrap_err(),
            LexError::UnterminatedString { offset: 11 }
        );
        assert_eq!(
            strip_comments("x = \"abc\\\"").unwrap_err(),
            LexError::UnterminatedString { offset: 4 }
        );
    }

    #[test]
    fn decls_package_and_class() {
        let d = extract_decls("package junit.ui; public class TestRunner { void f() {} }").unwrap();
        assert_eq!(d.package, "junit.ui");
        assert_eq!(d.type_names, vec!["TestRunner"]);
    }

    #[test]
    fn decls_default_package_two_types() {
        let d = extract_decls("class A {} class B {}").unwrap();
        assert_eq!(d.package, "");
        assert_eq!(d.type_names, vec!["A", "B"]);
    }

    #[test]
    fn decls_enum_counts() {
        let d = extract_decls("package a.b; enum E {X}").unwrap();
        assert_eq!(
            (d.package.as_str(), d.type_names.clone()),
            ("a.b", vec!["E".to_string()])
        );
    }

    #[test]
    fn decls_ignore_nested_types_and_literals() {
        let src = "package p;\nimport java.util.List;\n@Deprecated(\"class Fake\")\npublic final class Outer extends Base implements I {\n  static class Inner {}\n  interface Cb {}\n  Object o = Outer.class;\n}\n@interface Marker {}\n";
        let d = extract_decls(src).unwrap();
        assert_eq!(d.type_names, vec!["Outer", "Marker"]);
    }

    #[test]
    fn decls_no_types_is_not_an_error() {
        let d = extract_decls("package only.pkg;").unwrap();
        assert!(d.type_names.is_empty());
    }

    #[test]
    fn malformed_package_is_rejected() {
        assert!(matches!(
            extract_decls("package ;"),
            Err(LexError::MalformedPackage { offset: 0 })
        ));
        assert!(matches!(
            extract_decls("package a.b class X {}"),
            Err(LexError::MalformedPackage { .. })
        ));
        assert!(matches!(
            extract_decls("package a..b;"),
            Err(LexError::MalformedPackage { .. })
        ));
    }
}
