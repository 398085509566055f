//! Symbols and finite words.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

/// A letter of some alphabet. Letters are arbitrary strings so that labels
/// such as `"A"` or `"x1"` can be used directly.
pub type Symbol = Arc<str>;

/// A finite word over [`Symbol`]s.
pub type Word = Vec<Symbol>;

pub fn sym(s: &str) -> Symbol {
    Arc::from(s)
}

/// Splits a string into one-character symbols.
pub fn word_from_chars(s: &str) -> Word {
    let mut buf = [0u8; 4];
    s.chars().map(|c| sym(c.encode_utf8(&mut buf))).collect()
}

/// Concatenates the symbols; separates them with `.` if any symbol is longer
/// than one character, so that the rendering stays unambiguous.
pub fn word_to_string(w: &[Symbol]) -> String {
    let sep = if w.iter().all(|s| s.chars().count() == 1) {
        ""
    } else {
        "."
    };
    let mut out = String::new();
    for (i, s) in w.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        out.push_str(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let w = word_from_chars("babbab");
        assert_eq!(w.len(), 6);
        assert_eq!(word_to_string(&w), "babbab");
        let multi = alloc::vec![sym("x1"), sym("y")];
        assert_eq!(word_to_string(&multi), "x1.y");
    }
}
