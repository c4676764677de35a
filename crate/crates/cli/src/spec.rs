//! The ring-spec file format.
//!
//! ```text
//! # comment
//! p=2
//! vars=x,y,z
//! ideal=x*y, x*z, y*z
//! label=three coordinate axes
//! ```
//!
//! `p`, `vars` and `ideal` are required (an empty `ideal=` gives the
//! polynomial ring); `label` is optional. Each key appears once.

use fpi_core::gfpoly::{parse_polynomial, PolyParseErrorKind, PrimeField};
use fpi_core::ring::RingSpec;
use thiserror::Error;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Position {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("{at}: {message}")]
    Syntax { at: Position, message: String },
    #[error("{at}: {value} is not a prime below 2^31")]
    NonPrime { at: Position, value: u64 },
    #[error("{at}: generator {index} is not homogeneous")]
    NonHomogeneous { at: Position, index: usize },
    #[error("{at}: unknown variable `{name}`")]
    UnknownVariable { at: Position, name: String },
}

impl SpecError {
    pub fn position(&self) -> Position {
        match self {
            SpecError::Syntax { at, .. }
            | SpecError::NonPrime { at, .. }
            | SpecError::NonHomogeneous { at, .. }
            | SpecError::UnknownVariable { at, .. } => *at,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SpecError::Syntax { .. } => "Syntax",
            SpecError::NonPrime { .. } => "NonPrime",
            SpecError::NonHomogeneous { .. } => "NonHomogeneous",
            SpecError::UnknownVariable { .. } => "UnknownVariable",
        }
    }
}

struct Field<'a> {
    value: &'a str,
    line: usize,
    /// 1-based column of the first byte of `value`.
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax { at: Position { line, column }, message: message.into() }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Column (1-based, in characters) of byte offset `off` within `line`.
fn column_of(line: &str, off: usize) -> usize {
    line[..off.min(line.len())].chars().count() + 1
}

/// Parses and validates a ring spec.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p: Option<Field> = None;
    let mut vars: Option<Field> = None;
    let mut ideal: Option<Field> = None;
    let mut label: Option<Field> = None;
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let eq = match raw.find('=') {
            Some(i) => i,
            None => return Err(syntax(line_no, column_of(raw, raw.len() - trimmed.len()), "expected `key=value`")),
        };
        let key = raw[..eq].trim();
        let value_start = eq + 1;
        let value = &raw[value_start..];
        let lead = value.len() - value.trim_start().len();
        let field = Field { value: value.trim(), line: line_no, column: column_of(raw, value_start + lead) };
        let slot = match key {
            "p" => &mut p,
            "vars" => &mut vars,
            "ideal" => &mut ideal,
            "label" => &mut label,
            other => {
                return Err(syntax(
                    line_no,
                    column_of(raw, raw.find(other).unwrap_or(0)),
                    format!("unknown key `{}`", other),
                ))
            }
        };
        if slot.is_some() {
            return Err(syntax(line_no, 1, format!("duplicate key `{}`", key)));
        }
        *slot = Some(field);
    }
    let missing = |name: &str| syntax(last_line + 1, 1, format!("missing key `{}`", name));
    let p = p.ok_or_else(|| missing("p"))?;
    let vars = vars.ok_or_else(|| missing("vars"))?;
    let ideal = ideal.ok_or_else(|| missing("ideal"))?;

    let value: u64 =
        p.value.parse().map_err(|_| syntax(p.line, p.column, format!("`{}` is not an integer", p.value)))?;
    let field = PrimeField::new(value)
        .map_err(|_| SpecError::NonPrime { at: Position { line: p.line, column: p.column }, value })?;

    let mut names: Vec<String> = Vec::new();
    let mut offset = 0;
    for part in vars.value.split(',') {
        let name = part.trim();
        let col = vars.column + offset + (part.len() - part.trim_start().len());
        if !is_identifier(name) {
            return Err(syntax(vars.line, col, format!("`{}` is not a variable name", name)));
        }
        if names.iter().any(|n| n == name) {
            return Err(syntax(vars.line, col, format!("variable `{}` listed twice", name)));
        }
        names.push(name.to_string());
        offset += part.chars().count() + 1;
    }

    let mut gens = Vec::new();
    let mut offset = 0;
    if !ideal.value.is_empty() {
        for (index, part) in ideal.value.split(',').enumerate() {
            let col = ideal.column + offset;
            offset += part.chars().count() + 1;
            let g = parse_polynomial(part, &names, field).map_err(|e| {
                let at = Position { line: ideal.line, column: col + part[..e.offset.min(part.len())].chars().count() };
                match e.kind {
                    PolyParseErrorKind::UnknownVariable => {
                        let name: String = part[e.offset.min(part.len())..]
                            .chars()
                            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                            .collect();
                        SpecError::UnknownVariable { at, name }
                    }
                    PolyParseErrorKind::Syntax => SpecError::Syntax { at, message: e.message },
                }
            })?;
            if !g.is_homogeneous() {
                let lead = part.len() - part.trim_start().len();
                return Err(SpecError::NonHomogeneous { at: Position { line: ideal.line, column: col + lead }, index });
            }
            gens.push(g);
        }
    }
    let ring = RingSpec::new(field, names, gens).map_err(|e| syntax(ideal.line, ideal.column, e.to_string()))?;
    Ok(match label {
        Some(l) if !l.value.is_empty() => ring.with_label(l.value),
        _ => ring,
    })
}

/// Serializes a ring in the spec format; [`parse_ring_spec`] reads it back
/// to an equal ring.
pub fn print_ring_spec(r: &RingSpec) -> String {
    let gens: Vec<String> = r.ideal().generators().iter().map(|g| r.display_poly(g)).collect();
    let mut out = format!("p={}\nvars={}\nideal={}\n", r.p(), r.vars().join(","), gens.join(", "));
    if let Some(l) = r.label() {
        out.push_str(&format!("label={}\n", l));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_axes() {
        let r = parse_ring_spec("p=2\nvars=x,y,z\nideal=x*y, x*z, y*z").unwrap();
        assert_eq!(r.to_string(), "F_2[x,y,z]/(x*y, x*z, y*z)");
        assert_eq!(r.nvars(), 3);
    }

    #[test]
    fn rejects_composite_characteristic() {
        let e = parse_ring_spec("p=4\nvars=x\nideal=x").unwrap_err();
        assert_eq!(e, SpecError::NonPrime { at: Position { line: 1, column: 3 }, value: 4 });
    }

    #[test]
    fn rejects_mixed_degrees() {
        let e = parse_ring_spec("p=3\nvars=x\nideal=x^2+x").unwrap_err();
        assert_eq!(e.kind(), "NonHomogeneous");
        assert_eq!(e.position(), Position { line: 3, column: 7 });
    }

    #[test]
    fn unknown_variable_is_located() {
        let e = parse_ring_spec("p=3\nvars=x,y\nideal=x*y, x*w").unwrap_err();
        assert_eq!(e, SpecError::UnknownVariable { at: Position { line: 3, column: 14 }, name: "w".into() });
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_ring_spec("p=3\nvars=x,y\nideal=x*+y").unwrap_err();
        assert_eq!(e.kind(), "Syntax");
        assert_eq!(e.position().line, 3);
        assert!(parse_ring_spec("p=3\nvars=x\n").is_err());
        assert!(parse_ring_spec("p=3\nvars=x\nideal=x\np=5").is_err());
        assert!(parse_ring_spec("p=3\nvars=x,1y\nideal=x").is_err());
    }

    #[test]
    fn comments_label_and_empty_ideal() {
        let r = parse_ring_spec("# plane\np = 5\nvars = s, t\nideal =\nlabel = plane").unwrap();
        assert!(r.is_polynomial_ring());
        assert_eq!(r.label(), Some("plane"));
    }

    #[test]
    fn print_then_parse_is_identity() {
        let r = parse_ring_spec("p=3\nvars=x,y,z\nideal=y^2-x^2, z^2 - x^2\nlabel=ci").unwrap();
        assert_eq!(parse_ring_spec(&print_ring_spec(&r)).unwrap(), r);
    }
}
