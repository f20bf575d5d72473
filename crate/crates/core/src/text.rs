//! Immutable byte text with 1-based positions.

use std::fmt;

use crate::error::{Error, Result};

/// A text over the byte alphabet.
///
/// Positions exposed by this crate are 1-based: `T[i]` is valid for
/// `1 <= i <= n`, and `T[i..j]` is empty whenever `i > j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text {
            bytes: bytes.into(),
        }
    }

    /// Wraps raw input, optionally dropping exactly one trailing line feed.
    pub fn from_raw(raw: impl Into<Vec<u8>>, strip_trailing_newline: bool) -> Self {
        let mut bytes = raw.into();
        if strip_trailing_newline && bytes.last() == Some(&b'\n') {
            bytes.pop();
        }
        Text { bytes }
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    /// `T[i]`, 1-based.
    pub fn at(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|k| self.bytes.get(k).copied())
    }

    /// `T[i..j]`, 1-based and inclusive; empty for `i > j`.
    ///
    /// Panics if `i <= j` and the range leaves `1..=n`.
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        if i > j {
            return &[];
        }
        assert!(
            i >= 1 && j <= self.len(),
            "T[{i}..{j}] out of range for n = {}",
            self.len()
        );
        &self.bytes[i - 1..j]
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyText)
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text::new(s)
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text::new(v)
    }
}

/// Smallest `p >= 1` with `s[i] = s[i+p]` for every valid `i`.
///
/// Computed from the failure function: the smallest period is `|s|` minus
/// the length of the longest proper border.
pub fn smallest_period(s: &[u8]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyString);
    }
    let n = s.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    Ok(n - fail[n - 1])
}

/// Whether `p` satisfies the period equation on `s`.
pub fn is_period(s: &[u8], p: usize) -> bool {
    p >= 1 && (p >= s.len() || s[p..].iter().zip(s).all(|(a, b)| a == b))
}
