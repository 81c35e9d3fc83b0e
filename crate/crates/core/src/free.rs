//! Free semigroups `F_n` on letters `a, b, c, ...`, ordered shortlex, and the
//! greedy construction of a unique factorization basis.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{LowerStable, Semigroup};

pub const MAX_RANK: usize = 26;

/// A word over the letters `1..=rank`. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<u8>,
}

fn check_rank(rank: usize) -> Result<()> {
    if (2..=MAX_RANK).contains(&rank) {
        Ok(())
    } else {
        Err(Error::InvalidRank(rank))
    }
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<u8>) -> Result<Self> {
        check_rank(rank)?;
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || usize::from(l) > rank) {
            return Err(Error::LetterOutOfRange {
                letter: l.into(),
                rank,
            });
        }
        Ok(FreeWord { rank, letters })
    }

    pub fn empty(rank: usize) -> Result<Self> {
        Self::new(rank, Vec::new())
    }

    /// Parses `a`–`z` as letters 1–26; `_` is the empty word.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "_" {
            return Self::empty(rank);
        }
        if s.is_empty() {
            return Err(Error::Parse("empty word (write `_`)".into()));
        }
        let letters = s
            .bytes()
            .map(|c| match c {
                b'a'..=b'z' => Ok(c - b'a' + 1),
                _ => Err(Error::Parse(format!("bad letter `{}` in `{s}`", c as char))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, rhs: &FreeWord) -> Result<FreeWord> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch(self.rank, rhs.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    /// Shorter words first, then letter by letter with `a < b < ...`.
    pub fn shortlex_compare(&self, other: &FreeWord) -> Result<Ordering> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(self
            .len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters)))
    }
}

/// Every word of length `<= max_len` over `rank` letters, in shortlex order.
pub fn words_up_to(rank: usize, max_len: usize) -> Result<Vec<FreeWord>> {
    check_rank(rank)?;
    let mut out = vec![FreeWord::empty(rank)?];
    let mut layer = vec![Vec::<u8>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=rank as u8).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| FreeWord {
            rank,
            letters: w.clone(),
        }));
    }
    Ok(out)
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Panics on rank mismatch; use [`FreeWord::concat`] for a checked product.
impl Semigroup for FreeWord {
    fn op(&self, rhs: &Self) -> Self {
        self.concat(rhs).expect("free words of different rank")
    }
}

impl LowerStable for FreeWord {}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("_");
        }
        let s: String = self.letters.iter().map(|&l| (b'a' + l - 1) as char).collect();
        f.write_str(&s)
    }
}

/// A unique factorization basis of `F_rank`, truncated at words of length
/// `max_len`. Members are ascending in shortlex and the first `rank` of them
/// are the letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UfBasis {
    pub rank: usize,
    pub max_len: usize,
    members: Vec<FreeWord>,
}

impl UfBasis {
    /// Greedy construction: start from the letters, then keep adjoining the
    /// shortlex-least word of length `<= max_len` that is not an
    /// increasing-order product of the members so far.
    ///
    /// A single shortlex sweep is enough: a member adjoined later is larger
    /// than every word already visited, so it never helps factor one of them.
    pub fn construct(rank: usize, max_len: usize) -> Result<Self> {
        let mut basis = UfBasis {
            rank,
            max_len,
            members: Vec::new(),
        };
        for w in words_up_to(rank, max_len.max(1))? {
            if w.is_empty() {
                continue;
            }
            if w.len() == 1 || basis.count_increasing_factorizations(&w) == 0 {
                basis.members.push(w);
            }
        }
        Ok(basis)
    }

    pub fn from_members(rank: usize, max_len: usize, members: Vec<FreeWord>) -> Result<Self> {
        check_rank(rank)?;
        if let Some(w) = members.iter().find(|w| w.rank != rank) {
            return Err(Error::RankMismatch(rank, w.rank));
        }
        Ok(UfBasis {
            rank,
            max_len,
            members,
        })
    }

    pub fn members(&self) -> &[FreeWord] {
        &self.members
    }

    /// Number of ways to write `w` as `X(i1)^a1 ... X(it)^at` with basis
    /// positions `i1 < ... < it` and every `a >= 1`.
    pub fn count_increasing_factorizations(&self, w: &FreeWord) -> u64 {
        let index: HashMap<&[u8], usize> = self
            .members
            .iter()
            .enumerate()
            .map(|(k, m)| (m.letters(), k))
            .collect();
        let mut memo = HashMap::new();
        count_from(w.letters(), 0, 0, &index, &mut memo)
    }
}

fn count_from(
    w: &[u8],
    pos: usize,
    min_member: usize,
    index: &HashMap<&[u8], usize>,
    memo: &mut HashMap<(usize, usize), u64>,
) -> u64 {
    if pos == w.len() {
        return 1;
    }
    if let Some(&c) = memo.get(&(pos, min_member)) {
        return c;
    }
    let mut total = 0;
    for end in pos + 1..=w.len() {
        let Some(&k) = index.get(&w[pos..end]) else {
            continue;
        };
        if k < min_member {
            continue;
        }
        let piece = &w[pos..end];
        let mut next = pos;
        while w[next..].starts_with(piece) {
            next += piece.len();
            total += count_from(w, next, k + 1, index, memo);
        }
    }
    memo.insert((pos, min_member), total);
    total
}
