//! The semigroup generated by the integer matrices
//!
//! ```text
//!     A = [1 0]    B = [2 0]    C = [0 2]
//!         [0 2]        [0 1]        [3 0]
//! ```
//!
//! with relations `AB = BA`, `AC = CB`, `BC = CA`. Every element has a unique
//! normal form `A^a B^b C^c`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, Side};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TElement {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TGenerator {
    A,
    B,
    C,
}

impl TGenerator {
    pub const ALL: [TGenerator; 3] = [TGenerator::A, TGenerator::B, TGenerator::C];

    pub fn element(self) -> TElement {
        match self {
            TGenerator::A => TElement::new(1, 0, 0),
            TGenerator::B => TElement::new(0, 1, 0),
            TGenerator::C => TElement::new(0, 0, 1),
        }
    }

    pub fn matrix(self) -> IntMatrix2 {
        match self {
            TGenerator::A => IntMatrix2::from_i64([[1, 0], [0, 2]]),
            TGenerator::B => IntMatrix2::from_i64([[2, 0], [0, 1]]),
            TGenerator::C => IntMatrix2::from_i64([[0, 2], [3, 0]]),
        }
    }
}

impl fmt::Display for TGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TGenerator::A => "A",
            TGenerator::B => "B",
            TGenerator::C => "C",
        })
    }
}

impl FromStr for TGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(TGenerator::A),
            "B" => Ok(TGenerator::B),
            "C" => Ok(TGenerator::C),
            _ => Err(Error::Parse(format!("unknown generator `{s}` (expected A, B or C)"))),
        }
    }
}

impl TElement {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        TElement { a, b, c }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// Moving `C^c` past `A^a' B^b'` swaps the roles of `A` and `B` when `c`
    /// is odd.
    pub fn multiply(&self, y: &TElement) -> TElement {
        let (ya, yb) = if self.c.is_multiple_of(2) { (y.a, y.b) } else { (y.b, y.a) };
        TElement::new(self.a + ya, self.b + yb, self.c + y.c)
    }

    /// `A^a B^b C^c` by integer matrix products.
    pub fn to_matrix(&self) -> IntMatrix2 {
        TGenerator::A.matrix().pow(self.a)
            * TGenerator::B.matrix().pow(self.b)
            * TGenerator::C.matrix().pow(self.c)
    }

    /// `det(A^a B^b C^c) == 2^(a+b) (-6)^c`.
    pub fn det_identity_check(&self) -> bool {
        let expected: BigInt =
            Pow::pow(BigInt::from(2), self.a + self.b) * Pow::pow(BigInt::from(-6), self.c);
        self.to_matrix().det() == expected
    }
}

impl Semigroup for TElement {
    fn op(&self, rhs: &Self) -> Self {
        self.multiply(rhs)
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("A", self.a), ("B", self.b), ("C", self.c)]
            .iter()
            .filter(|(_, n)| *n > 0)
            .map(|(g, n)| if *n == 1 { g.to_string() } else { format!("{g}^{n}") })
            .collect();
        if parts.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Any product of `e`, `A`, `B`, `C` (optionally `^n`), separated by spaces
/// or `*`.
impl FromStr for TElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = TElement::identity();
        let mut any = false;
        for tok in s.split(|c: char| c.is_whitespace() || c == '*') {
            if tok.is_empty() {
                continue;
            }
            any = true;
            if tok == "e" {
                continue;
            }
            let (g, n) = match tok.split_once('^') {
                Some((g, n)) => {
                    let n: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (g, n)
                }
                None => (tok, 1),
            };
            let g: TGenerator = g.parse()?;
            for _ in 0..n {
                out = out.multiply(&g.element());
            }
        }
        if !any {
            return Err(Error::Parse("empty element".into()));
        }
        Ok(out)
    }
}

/// A 2×2 integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2(pub [[BigInt; 2]; 2]);

impl IntMatrix2 {
    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        IntMatrix2(m.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn pow(&self, mut n: u32) -> IntMatrix2 {
        let mut base = self.clone();
        let mut acc = IntMatrix2::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }
}

impl Mul for &IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, rhs: &IntMatrix2) -> IntMatrix2 {
        let (x, y) = (&self.0, &rhs.0);
        let entry = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
        IntMatrix2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, rhs: IntMatrix2) -> IntMatrix2 {
        &self * &rhs
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// The exponent box `F_N = { A^a B^b C^c : 0 <= a, b, c < N }`.
pub fn exponent_box(n: u32) -> Vec<TElement> {
    let mut out = Vec::with_capacity((n as usize).pow(3));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push(TElement::new(a, b, c));
            }
        }
    }
    out
}

fn in_box(x: &TElement, n: u32) -> bool {
    x.a < n && x.b < n && x.c < n
}

/// Translation counts for one generator against one box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFolnerCount {
    pub n: u32,
    /// `|gF_N ∩ F_N|` (or `|F_N g ∩ F_N|`).
    pub count: u64,
    /// `count / N^3`.
    pub ratio: Ratio<u64>,
    /// `|gF_N Δ F_N| / N^3`.
    pub symdiff_ratio: Ratio<u64>,
}

/// The elements of `gF_N ∩ F_N` (or `F_N g ∩ F_N`), in box order.
pub fn folner_intersection(g: TGenerator, n: u32, side: Side) -> Vec<TElement> {
    let g = g.element();
    exponent_box(n)
        .into_iter()
        .map(|x| match side {
            Side::Left => g.multiply(&x),
            Side::Right => x.multiply(&g),
        })
        .filter(|y| in_box(y, n))
        .collect()
}

pub fn folner_ratios(g: TGenerator, n: u32, side: Side) -> Result<TFolnerCount> {
    if n == 0 {
        return Err(Error::InvalidArgument("box size N must be >= 1".into()));
    }
    let size = u64::from(n).pow(3);
    let count = folner_intersection(g, n, side).len() as u64;
    Ok(TFolnerCount {
        n,
        count,
        ratio: Ratio::new(count, size),
        symdiff_ratio: Ratio::new(2 * (size - count), size),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication() {
        assert_eq!(
            TElement::new(0, 0, 1).multiply(&TElement::new(1, 0, 0)),
            TElement::new(0, 1, 1)
        );
        assert_eq!(
            TElement::new(1, 0, 0).multiply(&TElement::new(0, 1, 0)),
            TElement::new(1, 1, 0)
        );
        let y = TElement::new(3, 1, 4);
        assert_eq!(TElement::identity().multiply(&y), y);
    }

    #[test]
    fn matrices() {
        assert_eq!(TElement::new(1, 0, 0).to_matrix(), IntMatrix2::from_i64([[1, 0], [0, 2]]));
        assert_eq!(TElement::identity().to_matrix(), IntMatrix2::identity());
        assert_eq!(TElement::new(0, 0, 2).to_matrix(), IntMatrix2::from_i64([[6, 0], [0, 6]]));
    }

    #[test]
    fn generator_relations_hold_as_matrices() {
        let [a, b, c] = TGenerator::ALL.map(|g| g.matrix());
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &c, &c * &b);
        assert_eq!(&b * &c, &c * &a);
    }

    #[test]
    fn determinants() {
        assert!(TElement::new(1, 1, 0).det_identity_check());
        assert_eq!(TElement::new(1, 1, 0).to_matrix().det(), BigInt::from(4));
        assert!(TElement::new(0, 0, 1).det_identity_check());
        assert_eq!(TElement::new(0, 0, 1).to_matrix().det(), BigInt::from(-6));
        assert!(TElement::identity().det_identity_check());
    }

    #[test]
    fn folner_examples() {
        let r = folner_ratios(TGenerator::A, 2, Side::Left).unwrap();
        assert_eq!((r.count, r.ratio), (4, Ratio::new(1, 2)));
        assert_eq!(r.symdiff_ratio, Ratio::from_integer(1));
        let r = folner_ratios(TGenerator::C, 10, Side::Left).unwrap();
        assert_eq!((r.count, r.ratio), (900, Ratio::new(9, 10)));
        let r = folner_ratios(TGenerator::A, 1, Side::Left).unwrap();
        assert_eq!((r.count, r.ratio), (0, Ratio::from_integer(0)));
        assert!(folner_ratios(TGenerator::A, 0, Side::Left).is_err());
    }

    #[test]
    fn parse_and_display() {
        let x: TElement = "C A".parse().unwrap();
        assert_eq!(x, TElement::new(0, 1, 1));
        assert_eq!(x.to_string(), "B C");
        assert_eq!("A^2 * B^3 C".parse::<TElement>().unwrap(), TElement::new(2, 3, 1));
        assert_eq!("e".parse::<TElement>().unwrap().to_string(), "e");
        assert!("D".parse::<TElement>().is_err());
        assert!("".parse::<TElement>().is_err());
    }
}
