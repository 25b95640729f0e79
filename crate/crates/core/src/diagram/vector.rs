//! Symbolic virtual rational tangles `(a_1^e_1, ..., a_n^e_n)`.
//!
//! Entry `k` (1-based) is a horizontal twist region when `k` is odd and a
//! vertical one when `k` is even, counting from a horizontal first entry.
//! The tangle is the left fold
//! `((([a_1] * 1/[a_2]) + [a_3]) * 1/[a_4]) + ...`.
//!
//! Text form: comma-separated entries, each an optionally signed integer with
//! an optional `v` suffix marking a virtual crossing; `inf` may only appear
//! first. Whitespace is ignored, e.g. `2,-3v,1`, `inf,2`, `0v`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Axis, VectorError};

/// Number of classical half-twists in an entry, or `inf` for `[inf]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Finite(i64),
    Infinity,
}

/// One twist region `a^e`: `a` classical crossings, plus one virtual crossing
/// when `virtual_end` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub twist: Twist,
    pub virtual_end: bool,
}

impl Entry {
    pub fn new(a: i64, virtual_end: bool) -> Self {
        Self {
            twist: Twist::Finite(a),
            virtual_end,
        }
    }

    pub fn classical(a: i64) -> Self {
        Self::new(a, false)
    }

    pub fn virt(a: i64) -> Self {
        Self::new(a, true)
    }

    pub fn infinity() -> Self {
        Self {
            twist: Twist::Infinity,
            virtual_end: false,
        }
    }

    /// The integer part; `None` for `inf`.
    pub fn count(&self) -> Option<i64> {
        match self.twist {
            Twist::Finite(a) => Some(a),
            Twist::Infinity => None,
        }
    }

    pub fn epsilon(&self) -> u8 {
        u8::from(self.virtual_end)
    }

    pub fn toggled(&self) -> Self {
        Self {
            twist: self.twist,
            virtual_end: !self.virtual_end,
        }
    }

    fn is_trivial(&self) -> bool {
        self.twist == Twist::Finite(0) && !self.virtual_end
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.twist {
            Twist::Finite(a) => write!(f, "{a}")?,
            Twist::Infinity => f.write_str("inf")?,
        }
        if self.virtual_end {
            f.write_str("v")?;
        }
        Ok(())
    }
}

/// Axis of the first entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    #[default]
    HorizontalFirst,
    /// `(a_1, a_2, ...) = (1/[a_1] + [a_2]) * ...`; equivalent to the
    /// horizontal-first vector with `inf` prepended.
    VerticalFirst,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangleVector {
    entries: Vec<Entry>,
    orientation: Orientation,
}

impl TangleVector {
    /// Validates and builds a horizontal-first vector.
    pub fn new(entries: Vec<Entry>) -> Result<Self, VectorError> {
        Self::with_orientation(entries, Orientation::HorizontalFirst)
    }

    pub fn with_orientation(
        entries: Vec<Entry>,
        orientation: Orientation,
    ) -> Result<Self, VectorError> {
        let v = Self {
            entries,
            orientation,
        };
        v.validate()?;
        Ok(v)
    }

    /// All-classical vector from plain integers.
    pub fn classical(counts: &[i64]) -> Result<Self, VectorError> {
        Self::new(counts.iter().map(|&a| Entry::classical(a)).collect())
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.entries.iter().all(|e| !e.virtual_end)
    }

    pub fn virtual_count(&self) -> usize {
        self.entries.iter().filter(|e| e.virtual_end).count()
    }

    /// Axis of the entry at 0-based position `idx`.
    pub fn axis(&self, idx: usize) -> Axis {
        let first_vertical = self.orientation == Orientation::VerticalFirst;
        if (idx % 2 == 1) ^ first_vertical {
            Axis::Vertical
        } else {
            Axis::Horizontal
        }
    }

    /// Classical plus virtual crossings of the basic diagram.
    pub fn crossing_count(&self) -> usize {
        self.entries
            .iter()
            .map(|e| {
                e.count().map_or(0, |a| a.unsigned_abs() as usize) + usize::from(e.virtual_end)
            })
            .sum()
    }

    fn validate(&self) -> Result<(), VectorError> {
        let n = self.entries.len();
        if n == 0 {
            return Err(VectorError::Empty);
        }
        for (idx, e) in self.entries.iter().enumerate() {
            let position = idx + 1;
            if e.twist == Twist::Infinity {
                if idx != 0 {
                    return Err(VectorError::InfinityNotFirst { position });
                }
                if e.virtual_end {
                    return Err(VectorError::VirtualInfinity);
                }
                if self.orientation == Orientation::VerticalFirst {
                    return Err(VectorError::InfinityNotFirst { position: 2 });
                }
            }
            if idx > 0 && idx + 1 < n && e.is_trivial() {
                return Err(VectorError::TrivialInterior {
                    position,
                    axis: self.axis(idx),
                });
            }
        }
        if self.orientation == Orientation::VerticalFirst && n > 1 && self.entries[0].is_trivial() {
            // becomes an interior entry once `inf` is prepended
            return Err(VectorError::TrivialInterior {
                position: 1,
                axis: Axis::Vertical,
            });
        }
        Ok(())
    }

    /// The equivalent horizontal-first vector.
    pub fn normalized(&self) -> TangleVector {
        match self.orientation {
            Orientation::HorizontalFirst => self.clone(),
            Orientation::VerticalFirst => {
                let mut entries = Vec::with_capacity(self.entries.len() + 1);
                entries.push(Entry::infinity());
                entries.extend_from_slice(&self.entries);
                TangleVector {
                    entries,
                    orientation: Orientation::HorizontalFirst,
                }
            }
        }
    }

    /// Horizontal-first entries of odd length: a trailing `0` (a no-op
    /// horizontal entry) is appended to even-length vectors.
    pub fn odd_extended(&self) -> Vec<Entry> {
        let mut entries = self.normalized().entries;
        if entries.len().is_multiple_of(2) {
            entries.push(Entry::classical(0));
        }
        entries
    }
}

impl fmt::Display for TangleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for TangleVector {
    type Err = VectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_vector(s)
    }
}

/// Parses the comma-separated text form; syntax errors report the byte
/// offset into `text`.
pub fn parse_vector(text: &str) -> Result<TangleVector, VectorError> {
    let mut entries = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        entries.push(parse_entry(field, offset)?);
        offset += field.len() + 1;
    }
    TangleVector::new(entries)
}

fn parse_entry(field: &str, base: usize) -> Result<Entry, VectorError> {
    let compact: String = field.chars().filter(|c| !c.is_whitespace()).collect();
    let first_char = field
        .char_indices()
        .find(|(_, c)| !c.is_whitespace())
        .map_or(field.len(), |(i, _)| i);
    let at = base + first_char;
    if compact.is_empty() {
        return Err(VectorError::Syntax {
            offset: at,
            message: "empty entry",
        });
    }
    if compact.eq_ignore_ascii_case("inf") {
        return Ok(Entry::infinity());
    }
    let (body, virtual_end) = match compact.strip_suffix('v') {
        Some(b) => (b, true),
        None => (compact.as_str(), false),
    };
    if body.eq_ignore_ascii_case("inf") {
        return Err(VectorError::VirtualInfinity);
    }
    let digits = body.strip_prefix(['+', '-']).unwrap_or(body);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        let bad = field
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .find(|(i, c)| !(c.is_ascii_digit() || (*c == '-' || *c == '+') && *i == first_char))
            .map_or(first_char, |(i, _)| i);
        return Err(VectorError::Syntax {
            offset: base + bad,
            message: "expected integer, optional 'v' suffix, or 'inf'",
        });
    }
    let a = body.parse::<i64>().map_err(|_| VectorError::Syntax {
        offset: at,
        message: "integer out of range",
    })?;
    Ok(Entry::new(a, virtual_end))
}
