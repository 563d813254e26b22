//! Parsers for coefficient lists (`-1,3,0,-2` is `-1 + 3x - 2x^3`) and
//! rational functions (`num ; den`).

use std::fmt;

use hankelforge::{Polynomial, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based column in the input.
    pub column: usize,
    pub message: String,
    pub input: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} at column {}", self.message, self.column)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(self.column.saturating_sub(1)))
    }
}

/// Comma-separated coefficients in ascending degree. Entries are integers
/// or fractions `p/q`; `\u{2212}` is accepted as a minus sign.
pub fn parse_coeffs(input: &str) -> Result<Polynomial, ParseError> {
    parse_coeffs_at(input, input, 0)
}

fn parse_coeffs_at(full: &str, part: &str, offset: usize) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut start = 0;
    for piece in part.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let column = offset + start + lead + 1;
        let text = piece.trim().replace('\u{2212}', "-");
        if text.is_empty() {
            return Err(error(full, column, "missing coefficient"));
        }
        let value: Rational = text.parse().map_err(|_| {
            error(
                full,
                column,
                &format!("`{}` is not an integer or fraction", piece.trim()),
            )
        })?;
        coeffs.push(value);
        start += piece.len() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

/// `num ; den` with both sides coefficient lists, or just `num`.
pub fn parse_rational_function(input: &str) -> Result<RationalFunction, ParseError> {
    let mut parts = input.splitn(3, ';');
    let num_text = parts.next().unwrap_or_default();
    let num = parse_coeffs_at(input, num_text, 0)?;
    let den = match parts.next() {
        None => Polynomial::one(),
        Some(den_text) => parse_coeffs_at(input, den_text, num_text.len() + 1)?,
    };
    if parts.next().is_some() {
        let column = input
            .match_indices(';')
            .nth(1)
            .map(|(i, _)| i + 1)
            .unwrap_or(1);
        return Err(error(input, column, "expected at most one `;`"));
    }
    if den.is_zero() {
        return Err(error(input, num_text.len() + 2, "denominator is zero"));
    }
    RationalFunction::new(num, den).map_err(|e| {
        error(
            input,
            num_text.len() + 2,
            &format!("denominator rejected: {e}"),
        )
    })
}

fn error(input: &str, column: usize, message: &str) -> ParseError {
    ParseError {
        column,
        message: message.to_string(),
        input: input.to_string(),
    }
}
