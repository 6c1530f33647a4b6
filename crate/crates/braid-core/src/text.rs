//! The braid text format `Bm:±k,±k,...` (e.g. `B2:-1,-1,-1`).
//!
//! `m` is the strand count; the comma-separated list after the colon is the
//! letter sequence and may be empty (`B3:` is the identity braid on three
//! strands).  Whitespace around tokens is accepted.  Parse errors carry the
//! byte offset of the offending token for CLI diagnostics.

use crate::{BraidError, BraidWord};

/// Parse failure with the byte position of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at byte {position}")]
pub struct ParseBraidError {
    pub message: String,
    pub position: usize,
}

impl ParseBraidError {
    fn new(message: impl Into<String>, position: usize) -> Self {
        Self {
            message: message.into(),
            position,
        }
    }
}

/// Parse `Bm:letters` into a [`BraidWord`].
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseBraidError> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let rest = trimmed
        .strip_prefix('B')
        .ok_or_else(|| ParseBraidError::new("expected leading 'B'", offset))?;
    let colon = rest
        .find(':')
        .ok_or_else(|| ParseBraidError::new("expected ':' after strand count", offset + 1))?;
    let (m_str, tail) = rest.split_at(colon);
    let strands: usize = m_str
        .trim()
        .parse()
        .map_err(|_| ParseBraidError::new(format!("invalid strand count {m_str:?}"), offset + 1))?;
    let tail = &tail[1..]; // skip ':'
    let mut letters = Vec::new();
    let tail_start = offset + 1 + colon + 1;
    if !tail.trim().is_empty() {
        let mut cursor = 0;
        for token in tail.split(',') {
            let position = tail_start + cursor + (token.len() - token.trim_start().len());
            let letter: i32 = token
                .trim()
                .parse()
                .map_err(|_| ParseBraidError::new(format!("invalid letter {:?}", token.trim()), position))?;
            if letter == 0 {
                return Err(ParseBraidError::new("letter 0 is not a generator", position));
            }
            if letter.unsigned_abs() as usize >= strands {
                return Err(ParseBraidError::new(
                    format!("letter {letter} out of range for {strands} strands"),
                    position,
                ));
            }
            letters.push(letter);
            cursor += token.len() + 1;
        }
    }
    BraidWord::new(strands, letters).map_err(|e| match e {
        BraidError::NoStrands => ParseBraidError::new("braid needs at least one strand", offset + 1),
        other => ParseBraidError::new(other.to_string(), tail_start),
    })
}

/// Render a braid word in the same format [`parse_braid`] accepts.
pub fn format_braid(b: &BraidWord) -> String {
    let letters: Vec<String> = b.letters().iter().map(|l| l.to_string()).collect();
    format!("B{}:{}", b.strands(), letters.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for text in ["B2:-1,-1,-1", "B1:", "B4:1,-2,3,-1", "B3:"] {
            let b = parse_braid(text).unwrap();
            assert_eq!(format_braid(&b), text);
        }
    }

    #[test]
    fn accepts_whitespace() {
        let b = parse_braid("  B3: 1 , -2 , 1 ").unwrap();
        assert_eq!(b.letters(), &[1, -2, 1]);
    }

    #[test]
    fn rejects_malformed_input_with_position() {
        assert!(parse_braid("2:-1").is_err());
        assert!(parse_braid("B2").is_err());
        assert!(parse_braid("Bx:1").is_err());
        let err = parse_braid("B2:1,x").unwrap_err();
        assert!(err.message.contains("invalid letter"));
        assert_eq!(err.position, 5);
        let err = parse_braid("B2:2").unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_braid("B2:0").unwrap_err();
        assert!(err.message.contains("not a generator"));
        assert!(parse_braid("B0:").is_err());
    }
}
