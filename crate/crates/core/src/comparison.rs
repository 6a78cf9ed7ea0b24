use core::cmp::Ordering;
use core::fmt;

/// Verdict of a (possibly partial) order on two values, read as "left vs right".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Greater,
    Less,
    Equivalent,
    Incomparable,
}

impl Comparison {
    /// `left >= right`.
    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equivalent)
    }

    /// `left <= right`.
    pub fn is_le(self) -> bool {
        matches!(self, Comparison::Less | Comparison::Equivalent)
    }

    /// The verdict with the operands exchanged.
    pub fn reverse(self) -> Self {
        match self {
            Comparison::Greater => Comparison::Less,
            Comparison::Less => Comparison::Greater,
            other => other,
        }
    }

    /// Combine two weak verdicts `ge` (left >= right) and `le` (left <= right).
    pub fn from_weak(ge: bool, le: bool) -> Self {
        match (ge, le) {
            (true, true) => Comparison::Equivalent,
            (true, false) => Comparison::Greater,
            (false, true) => Comparison::Less,
            (false, false) => Comparison::Incomparable,
        }
    }

    /// Componentwise (product) order of two verdicts.
    pub fn product(self, other: Self) -> Self {
        Self::from_weak(self.is_ge() && other.is_ge(), self.is_le() && other.is_le())
    }

    /// Single-letter code used by preference table files.
    pub fn code(self) -> char {
        match self {
            Comparison::Greater => 'G',
            Comparison::Less => 'L',
            Comparison::Equivalent => 'E',
            Comparison::Incomparable => 'I',
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "G" => Some(Comparison::Greater),
            "L" => Some(Comparison::Less),
            "E" => Some(Comparison::Equivalent),
            "I" => Some(Comparison::Incomparable),
            _ => None,
        }
    }
}

impl From<Ordering> for Comparison {
    fn from(ordering: Ordering) -> Self {
        match ordering {
            Ordering::Greater => Comparison::Greater,
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equivalent,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Greater => "GREATER",
            Comparison::Less => "LESS",
            Comparison::Equivalent => "EQUIVALENT",
            Comparison::Incomparable => "INCOMPARABLE",
        })
    }
}
