//! Line-oriented `key = value` documents used by the algebra and module
//! file formats. Values are strings, bare scalars (`3`, `-1/2`), arrays and
//! inline tables. `#` starts a comment outside of strings.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Str(String),
    /// Unquoted scalar token such as `64` or `-3/4`.
    Bare(String),
    Array(Vec<Value>),
    Table(Vec<(String, Value)>),
}

impl Value {
    pub fn as_str(&self) -> Result<&str> {
        match self {
            Value::Str(s) | Value::Bare(s) => Ok(s),
            other => Err(Error::Syntax(format!("expected a string, found {other:?}"))),
        }
    }

    pub fn as_array(&self) -> Result<&[Value]> {
        match self {
            Value::Array(v) => Ok(v),
            other => Err(Error::Syntax(format!("expected an array, found {other:?}"))),
        }
    }

    pub fn as_usize(&self) -> Result<usize> {
        self.as_str()?.trim().parse().map_err(|_| Error::Syntax(format!("expected a nonnegative integer, found {self:?}")))
    }

    pub fn get(&self, key: &str) -> Result<&Value> {
        match self {
            Value::Table(entries) => entries.iter().find(|(k, _)| k == key).map(|(_, v)| v).ok_or_else(|| Error::Syntax(format!("missing key `{key}`"))),
            other => Err(Error::Syntax(format!("expected a table, found {other:?}"))),
        }
    }
}

/// Parses a document into `(line number, key, value)` entries in order.
/// Keys may repeat.
pub fn parse_document(text: &str) -> Result<Vec<(usize, String, Value)>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once('=').ok_or_else(|| Error::Syntax(format!("line {}: expected `key = value`", no + 1)))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::Syntax(format!("line {}: empty key", no + 1)));
        }
        let mut p = Parser { s: rest.as_bytes(), pos: 0 };
        let value = p.value().map_err(|e| Error::Syntax(format!("line {}: {e}", no + 1)))?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Syntax(format!("line {}: trailing characters", no + 1)));
        }
        out.push((no + 1, key.to_string(), value));
    }
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    let mut in_str = false;
    for (i, ch) in line.char_indices() {
        match ch {
            '"' => in_str = !in_str,
            '#' if !in_str => return &line[..i],
            _ => {}
        }
    }
    line
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, ch: u8) -> std::result::Result<(), String> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!("expected `{}`", ch as char))
        }
    }

    fn value(&mut self) -> std::result::Result<Value, String> {
        match self.peek() {
            Some(b'"') => self.string().map(Value::Str),
            Some(b'[') => {
                self.pos += 1;
                let mut items = Vec::new();
                if self.peek() == Some(b']') {
                    self.pos += 1;
                    return Ok(Value::Array(items));
                }
                loop {
                    items.push(self.value()?);
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            if self.peek() == Some(b']') {
                                self.pos += 1;
                                return Ok(Value::Array(items));
                            }
                        }
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Value::Array(items));
                        }
                        _ => return Err("unterminated array".into()),
                    }
                }
            }
            Some(b'{') => {
                self.pos += 1;
                let mut entries = Vec::new();
                if self.peek() == Some(b'}') {
                    self.pos += 1;
                    return Ok(Value::Table(entries));
                }
                loop {
                    let key = self.bare()?;
                    self.expect(b'=')?;
                    entries.push((key, self.value()?));
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b'}') => {
                            self.pos += 1;
                            return Ok(Value::Table(entries));
                        }
                        _ => return Err("unterminated table".into()),
                    }
                }
            }
            Some(_) => self.bare().map(Value::Bare),
            None => Err("missing value".into()),
        }
    }

    fn string(&mut self) -> std::result::Result<String, String> {
        self.expect(b'"')?;
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos] != b'"' {
            self.pos += 1;
        }
        if self.pos == self.s.len() {
            return Err("unterminated string".into());
        }
        let out = String::from_utf8(self.s[start..self.pos].to_vec()).map_err(|_| "invalid UTF-8".to_string())?;
        self.pos += 1;
        Ok(out)
    }

    fn bare(&mut self) -> std::result::Result<String, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() {
            let c = self.s[self.pos];
            if c.is_ascii_alphanumeric() || matches!(c, b'_' | b'-' | b'/' | b'+' | b'.') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err("expected a value".into());
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_algebra_like_lines() {
        let doc = parse_document(
            r#"
            field = "Q"   # comment
            vertices = ["1", "2"]
            arrow = { name = "a", source = "1", target = "2" }
            relations = []
            path_length_bound = 64
            "#,
        )
        .unwrap();
        assert_eq!(doc.len(), 5);
        assert_eq!(doc[0].2, Value::Str("Q".into()));
        assert_eq!(doc[2].2.get("source").unwrap().as_str().unwrap(), "1");
        assert_eq!(doc[3].2, Value::Array(vec![]));
        assert_eq!(doc[4].2.as_usize().unwrap(), 64);
    }

    #[test]
    fn nested_arrays_with_fractions() {
        let doc = parse_document("a = [[1, -1/2], [0, 3]]").unwrap();
        let rows = doc[0].2.as_array().unwrap();
        assert_eq!(rows[0].as_array().unwrap()[1].as_str().unwrap(), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_document("novalue").is_err());
        assert!(parse_document("x = [1, 2").is_err());
        assert!(parse_document("x = \"open").is_err());
        assert!(parse_document("x = 1 2").is_err());
    }
}
