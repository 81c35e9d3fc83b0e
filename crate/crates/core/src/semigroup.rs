use std::fmt;
use std::hash::Hash;

/// A cancellative semigroup whose elements carry their own multiplication.
///
/// `Ord` is whatever total order the element type is naturally sorted by; it
/// fixes iteration order in maps and reports.
pub trait Semigroup: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display {
    fn op(&self, rhs: &Self) -> Self;
}

/// Marker for element types whose `Ord` is lower stable: every nonempty set
/// has a least element, and `u1 <= v1`, `u2 <= v2` imply `u1 u2 <= v1 v2`
/// with equality only when both pairs are equal.
pub trait LowerStable: Semigroup {}

/// Which side a translation or convolution operator acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(crate::Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

/// `g * x` or `x * g` depending on `side`.
pub fn translate_one<S: Semigroup>(g: &S, x: &S, side: Side) -> S {
    match side {
        Side::Left => g.op(x),
        Side::Right => x.op(g),
    }
}
