//! Thompson's semigroup `S = <x0, x1, ... | xj xi = xi x(j+1), j > i>`.
//!
//! Elements are kept in normal form: a run-length list of generator blocks
//! `x(i1)^a1 x(i2)^a2 ...` with `i1 < i2 < ...` and every `a >= 1`. The empty
//! list is the unit `e`. Because the normal form is unique, structural
//! equality on blocks is equality in the semigroup.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::{LowerStable, Semigroup};

/// One run `x(generator)^exponent` of a normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub generator: u32,
    pub exponent: u32,
}

/// An element of Thompson's semigroup in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThompsonElement {
    blocks: Vec<Block>,
}

/// An unreduced product of generators, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    pub letters: Vec<u32>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<u32>) -> Self {
        GeneratorWord { letters }
    }
}

impl ThompsonElement {
    pub fn identity() -> Self {
        ThompsonElement { blocks: Vec::new() }
    }

    pub fn generator(i: u32) -> Self {
        Self::generator_power(i, 1)
    }

    /// `x(i)^n`; `n = 0` gives the unit.
    pub fn generator_power(i: u32, n: u32) -> Self {
        if n == 0 {
            return Self::identity();
        }
        ThompsonElement {
            blocks: vec![Block {
                generator: i,
                exponent: n,
            }],
        }
    }

    /// Builds an element from `(generator, exponent)` pairs that are already
    /// canonical. Use [`ThompsonElement::from_word`] for arbitrary products.
    pub fn from_blocks<I>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let blocks: Vec<Block> = blocks
            .into_iter()
            .map(|(generator, exponent)| Block {
                generator,
                exponent,
            })
            .collect();
        for (k, b) in blocks.iter().enumerate() {
            if b.exponent == 0 {
                return Err(Error::NonCanonical(format!(
                    "zero exponent on x{}",
                    b.generator
                )));
            }
            if k > 0 && blocks[k - 1].generator >= b.generator {
                return Err(Error::NonCanonical(format!(
                    "generator x{} does not follow x{} in increasing order",
                    b.generator,
                    blocks[k - 1].generator
                )));
            }
        }
        Ok(ThompsonElement { blocks })
    }

    /// Normal form of an arbitrary product of generators.
    pub fn from_word(word: &GeneratorWord) -> Self {
        let mut out = Self::identity();
        for &l in &word.letters {
            out.push_generator_power(l, 1);
        }
        out
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of letters.
    pub fn ind(&self) -> u64 {
        self.blocks.iter().map(|b| u64::from(b.exponent)).sum()
    }

    /// Exponent of `x(i)` in the normal form (0 if absent).
    pub fn ind_at(&self, i: u32) -> u32 {
        self.blocks
            .iter()
            .find(|b| b.generator == i)
            .map_or(0, |b| b.exponent)
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.blocks.last().map(|b| b.generator)
    }

    /// True for the powers `x0^n`, `n >= 0`.
    pub fn is_x0_power(&self) -> bool {
        match self.blocks.as_slice() {
            [] => true,
            [b] => b.generator == 0,
            _ => false,
        }
    }

    /// The letters of the normal form, expanded.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.generator, b.exponent as usize))
    }

    pub fn to_word(&self) -> GeneratorWord {
        GeneratorWord::new(self.letters().collect())
    }

    /// Right multiplication by `x(l)^n` in place.
    ///
    /// Blocks with index `> l` move past the new letters and shift up by `n`;
    /// the letters merge into a trailing `x(l)` block of the prefix or open a
    /// new one.
    fn push_generator_power(&mut self, l: u32, n: u32) {
        if n == 0 {
            return;
        }
        let split = self.blocks.partition_point(|b| b.generator <= l);
        for b in &mut self.blocks[split..] {
            b.generator += n;
        }
        match split.checked_sub(1).map(|k| &mut self.blocks[k]) {
            Some(b) if b.generator == l => b.exponent += n,
            _ => self.blocks.insert(
                split,
                Block {
                    generator: l,
                    exponent: n,
                },
            ),
        }
    }

    pub fn multiply(&self, rhs: &ThompsonElement) -> ThompsonElement {
        let mut out = self.clone();
        for b in &rhs.blocks {
            out.push_generator_power(b.generator, b.exponent);
        }
        out
    }

    /// Removes a leading `x(l)`: on success `self` becomes `w` with
    /// `old self = x(l) w`.
    fn peel_left(&mut self, l: u32) -> bool {
        let mut target = l;
        for k in 0..self.blocks.len() {
            let b = self.blocks[k];
            match b.generator.cmp(&target) {
                Ordering::Less => target += b.exponent,
                Ordering::Equal => {
                    if b.exponent == 1 {
                        self.blocks.remove(k);
                    } else {
                        self.blocks[k].exponent -= 1;
                    }
                    return true;
                }
                Ordering::Greater => return false,
            }
        }
        false
    }

    /// Removes a trailing `x(l)`: on success `self` becomes `w` with
    /// `old self = w x(l)`. Inverse of `push_generator_power(l, 1)`.
    fn strip_right(&mut self, l: u32) -> bool {
        let Some(k) = self.blocks.iter().position(|b| b.generator == l) else {
            return false;
        };
        if self.blocks[k + 1..].iter().any(|b| b.generator < l + 2) {
            return false;
        }
        for b in &mut self.blocks[k + 1..] {
            b.generator -= 1;
        }
        if self.blocks[k].exponent == 1 {
            self.blocks.remove(k);
        } else {
            self.blocks[k].exponent -= 1;
        }
        true
    }

    /// Returns `w` with `v = self * w`, or `None` when `self` does not
    /// divide `v` on the left.
    pub fn left_divide(&self, v: &ThompsonElement) -> Option<ThompsonElement> {
        let mut rest = v.clone();
        for l in self.letters() {
            if !rest.peel_left(l) {
                return None;
            }
        }
        Some(rest)
    }

    /// Returns `w` with `self = w * u`, or `None` when no such `w` exists.
    pub fn right_divide(&self, u: &ThompsonElement) -> Option<ThompsonElement> {
        let mut rest = self.clone();
        for l in u.letters().rev() {
            if !rest.strip_right(l) {
                return None;
            }
        }
        Some(rest)
    }

    pub fn divides(&self, v: &ThompsonElement) -> bool {
        self.left_divide(v).is_some()
    }

    /// `x1^-n X x1^n` when it lies in the semigroup.
    pub fn conjugate_by_x1_down(&self, n: u32) -> Option<ThompsonElement> {
        let shift = Self::generator_power(1, n);
        shift.left_divide(&self.multiply(&shift))
    }

    /// `x1^n X x1^-n` when it lies in the semigroup.
    pub fn conjugate_by_x1_up(&self, n: u32) -> Option<ThompsonElement> {
        let shift = Self::generator_power(1, n);
        shift.multiply(self).right_divide(&shift)
    }

    /// The total order: smaller index first; on equal index the first
    /// position (from `x0` up) where the exponents differ decides, and the
    /// larger exponent ranks smaller.
    pub fn compare_total(&self, other: &ThompsonElement) -> Ordering {
        match self.ind().cmp(&other.ind()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.blocks.len() && j < other.blocks.len() {
            let (a, b) = (self.blocks[i], other.blocks[j]);
            match a.generator.cmp(&b.generator) {
                // a has a positive exponent where b has none.
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match a.exponent.cmp(&b.exponent) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord.reverse(),
                },
            }
        }
        // Equal index and one list is a prefix of the other forces equality.
        debug_assert_eq!(self.blocks.len() - i, other.blocks.len() - j);
        Ordering::Equal
    }
}

/// Normalizes by repeatedly rewriting the leftmost adjacent inversion
/// `xj xi -> xi x(j+1)` (`j > i`).
///
/// Each rewrite lowers the letter at the leftmost changed position and keeps
/// the length fixed, so the words form a strictly decreasing chain in the
/// lexicographic order on `N^len`, which is a well-order.
pub fn normalize_naive(word: &GeneratorWord) -> ThompsonElement {
    let mut w = word.letters.clone();
    while let Some(k) = w.windows(2).position(|p| p[0] > p[1]) {
        let (j, i) = (w[k], w[k + 1]);
        w[k] = i;
        w[k + 1] = j + 1;
    }
    let mut blocks: Vec<Block> = Vec::new();
    for l in w {
        match blocks.last_mut() {
            Some(b) if b.generator == l => b.exponent += 1,
            _ => blocks.push(Block {
                generator: l,
                exponent: 1,
            }),
        }
    }
    ThompsonElement { blocks }
}

/// All elements with `ind <= max_ind` and every generator `<= max_gen`,
/// ascending in the total order. Includes `e`.
pub fn enumerate_elements(max_ind: u32, max_gen: u32) -> Vec<ThompsonElement> {
    fn rec(
        pos: u32,
        max_gen: u32,
        budget: u32,
        cur: &mut Vec<Block>,
        out: &mut Vec<ThompsonElement>,
    ) {
        if pos > max_gen {
            out.push(ThompsonElement {
                blocks: cur.clone(),
            });
            return;
        }
        rec(pos + 1, max_gen, budget, cur, out);
        for e in 1..=budget {
            cur.push(Block {
                generator: pos,
                exponent: e,
            });
            rec(pos + 1, max_gen, budget - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max_gen, max_ind, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl Ord for ThompsonElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare_total(other)
    }
}

impl PartialOrd for ThompsonElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Semigroup for ThompsonElement {
    fn op(&self, rhs: &Self) -> Self {
        self.multiply(rhs)
    }
}

impl LowerStable for ThompsonElement {}

impl fmt::Display for ThompsonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("e");
        }
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", b.generator)?;
            if b.exponent != 1 {
                write!(f, "^{}", b.exponent)?;
            }
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("bad token `{tok}`"));
    let body = tok.strip_prefix('x').ok_or_else(bad)?;
    let (gen, exp) = match body.split_once('^') {
        Some((g, e)) => (g, Some(e)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    if !digits(gen) || !exp.is_none_or(digits) {
        return Err(bad());
    }
    let gen = gen.parse().map_err(|_| bad())?;
    let exp = match exp {
        Some(e) => e.parse().map_err(|_| bad())?,
        None => 1,
    };
    if exp == 0 {
        return Err(Error::Parse(format!("zero exponent in `{tok}`")));
    }
    Ok((gen, exp))
}

impl ThompsonElement {
    /// Accepts canonical text only: the exact string `Display` would print.
    pub fn parse_strict(s: &str) -> Result<Self> {
        let x: ThompsonElement = s.parse()?;
        if x.to_string() != s.trim() {
            return Err(Error::NonCanonical(format!(
                "`{}` is not in normal form (expected `{x}`)",
                s.trim()
            )));
        }
        Ok(x)
    }
}

/// Lenient parsing: any product of `e` and `x<i>[^<n>]` tokens separated by
/// spaces or `*`, normalized.
impl FromStr for ThompsonElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = ThompsonElement::identity();
        let mut any = false;
        for tok in s.split(|c: char| c.is_whitespace() || c == '*') {
            if tok.is_empty() {
                continue;
            }
            any = true;
            if tok == "e" {
                continue;
            }
            let (g, n) = parse_token(tok)?;
            out.push_generator_power(g, n);
        }
        if !any {
            return Err(Error::Parse("empty element".into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> ThompsonElement {
        s.parse().unwrap()
    }

    #[test]
    fn generators_print_and_have_index_one() {
        assert_eq!(ThompsonElement::generator(0).to_string(), "x0");
        assert_eq!(ThompsonElement::generator(7).to_string(), "x7");
        for i in 0..=100 {
            assert_eq!(ThompsonElement::generator(i).ind(), 1);
        }
    }

    #[test]
    fn defining_relation() {
        assert_eq!(el("x1").multiply(&el("x0")), el("x0 x2"));
        assert_eq!(el("x1 x0").to_string(), "x0 x2");
        assert_eq!(el("x0 x2").multiply(&el("x1")).to_string(), "x0 x1 x3");
        let u = el("x0^2 x3 x5");
        assert_eq!(ThompsonElement::identity().multiply(&u), u);
        assert_eq!(u.multiply(&ThompsonElement::identity()), u);
    }

    #[test]
    fn naive_normalizer() {
        assert_eq!(normalize_naive(&GeneratorWord::new(vec![1, 0])), el("x0 x2"));
        assert_eq!(
            normalize_naive(&GeneratorWord::new(vec![])),
            ThompsonElement::identity()
        );
        assert_eq!(
            normalize_naive(&GeneratorWord::new(vec![0, 2, 1])).to_string(),
            "x0 x1 x3"
        );
    }

    #[test]
    fn indices() {
        assert_eq!(ThompsonElement::identity().ind(), 0);
        assert_eq!(el("x0 x2 x1").ind_at(2), 0);
        assert_eq!(el("x0^2 x3").ind(), 3);
        assert_eq!(el("x0^2 x3").ind_at(0), 2);
    }

    #[test]
    fn total_order_examples() {
        assert_eq!(el("x0").compare_total(&el("x1")), Ordering::Less);
        assert_eq!(el("x0 x1").compare_total(&el("x0 x2")), Ordering::Less);
        let u = el("x1 x4^2");
        assert_eq!(u.compare_total(&u), Ordering::Equal);
        let chain: Vec<_> = ["x0", "x1", "x0 x1", "x0 x2", "x1 x2"]
            .iter()
            .map(|s| el(s))
            .collect();
        assert!(chain.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn left_division() {
        assert_eq!(el("x1").left_divide(&el("x0 x2")), Some(el("x0")));
        assert_eq!(el("x2").left_divide(&el("x0 x2")), None);
        let u = el("x0 x3^2");
        assert_eq!(u.left_divide(&u), Some(ThompsonElement::identity()));
        assert_eq!(ThompsonElement::identity().left_divide(&u), Some(u.clone()));
    }

    #[test]
    fn right_division() {
        assert_eq!(el("x0 x2").right_divide(&el("x0")), Some(el("x1")));
        assert_eq!(el("x0 x2").right_divide(&el("x2")), Some(el("x0")));
        assert_eq!(el("x0 x1").right_divide(&el("x0")), None);
        let u = el("x0 x3^2");
        assert_eq!(u.right_divide(&u), Some(ThompsonElement::identity()));
    }

    #[test]
    fn conjugation() {
        assert_eq!(el("x0 x2").conjugate_by_x1_down(1), Some(el("x0 x1")));
        assert_eq!(el("x0 x1").conjugate_by_x1_down(1), None);
        assert_eq!(el("x0 x1").conjugate_by_x1_up(1), Some(el("x0 x2")));
        assert_eq!(el("x0").conjugate_by_x1_up(1), None);
        let x = el("x0^2 x5");
        assert_eq!(x.conjugate_by_x1_down(0), Some(x.clone()));
        assert_eq!(x.conjugate_by_x1_up(0), Some(x.clone()));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_elements(0, 5), vec![ThompsonElement::identity()]);
        let got: Vec<String> = enumerate_elements(1, 2).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["e", "x0", "x1", "x2"]);
        let got: Vec<String> = enumerate_elements(2, 1).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["e", "x0", "x1", "x0^2", "x0 x1", "x1^2"]);
        // C(4 + 5, 5) exponent vectors of weight <= 4 over 5 positions
        assert_eq!(enumerate_elements(4, 4).len(), 126);
    }

    #[test]
    fn parsing() {
        assert_eq!(el("x3 * x0"), el("x0 x4"));
        assert_eq!(el("e"), ThompsonElement::identity());
        assert_eq!(el("x0^2 e x0"), el("x0^3"));
        assert!("".parse::<ThompsonElement>().is_err());
        assert!("x".parse::<ThompsonElement>().is_err());
        assert!("x1^0".parse::<ThompsonElement>().is_err());
        assert!("y2".parse::<ThompsonElement>().is_err());
        assert!("x-1".parse::<ThompsonElement>().is_err());
        assert!(ThompsonElement::parse_strict("x0 x2").is_ok());
        assert!(ThompsonElement::parse_strict("e").is_ok());
        assert!(ThompsonElement::parse_strict("x1 x0").is_err());
        assert!(ThompsonElement::parse_strict("x0^1").is_err());
        assert!(ThompsonElement::parse_strict("x0*x2").is_err());
    }

    #[test]
    fn from_blocks_validates() {
        assert!(ThompsonElement::from_blocks([(0, 1), (2, 3)]).is_ok());
        assert!(ThompsonElement::from_blocks([(2, 1), (2, 3)]).is_err());
        assert!(ThompsonElement::from_blocks([(0, 0)]).is_err());
    }
}
