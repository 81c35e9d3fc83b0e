//! Følner statistics `|gF ∩ F| / |F|` and `|gF Δ F| / |F|` for finite subsets
//! of a semigroup, and sweeps over parameterized set families.
//!
//! For Thompson's semigroup no Følner family is known, so sweeps over its
//! balls are exploratory data, not verdicts.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::free::{words_up_to, FreeWord};
use crate::semigroup::{translate_one, Semigroup, Side};
use crate::thompson::{enumerate_elements, ThompsonElement};
use crate::tsemigroup::{exponent_box, TElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubset<S: Semigroup> {
    elements: BTreeSet<S>,
}

impl<S: Semigroup> FiniteSubset<S> {
    pub fn new<I: IntoIterator<Item = S>>(elements: I) -> Self {
        FiniteSubset {
            elements: elements.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: &S) -> bool {
        self.elements.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.elements.iter()
    }

    /// `gF` or `Fg`.
    pub fn translate(&self, g: &S, side: Side) -> FiniteSubset<S> {
        FiniteSubset::new(self.elements.iter().map(|x| translate_one(g, x, side)))
    }

    /// Exact translation statistics of `g` against this set.
    pub fn folner_stats(&self, g: &S, side: Side) -> Result<FolnerStats> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let moved = self.translate(g, side);
        let intersect = moved.iter().filter(|x| self.contains(x)).count() as u64;
        let size = self.len() as u64;
        let symdiff = (moved.len() as u64 - intersect) + (size - intersect);
        Ok(FolnerStats {
            size,
            translated_size: moved.len() as u64,
            intersect,
            ratio: Ratio::new(intersect, size),
            symdiff: Ratio::new(symdiff, size),
        })
    }

    /// `(|gF ∩ F| / |F|, |gF Δ F| / |F|)`.
    pub fn folner_ratio(&self, g: &S, side: Side) -> Result<(Ratio<u64>, Ratio<u64>)> {
        self.folner_stats(g, side).map(|s| (s.ratio, s.symdiff))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FolnerStats {
    pub size: u64,
    pub translated_size: u64,
    pub intersect: u64,
    pub ratio: Ratio<u64>,
    pub symdiff: Ratio<u64>,
}

/// One `(generator, set)` measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolnerRow {
    pub gen: String,
    pub params: String,
    pub size: u64,
    pub intersect: u64,
    pub ratio: Ratio<u64>,
    pub symdiff: Ratio<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FolnerReport {
    pub rows: Vec<FolnerRow>,
}

pub const REPORT_HEADER: &str = "gen\tparams\tsize\tintersect\tratio\tsymdiff";

impl FolnerReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from(REPORT_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FolnerRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.gen, self.params, self.size, self.intersect, self.ratio, self.symdiff
        )
    }
}

/// A named member of a set family.
pub type FamilyMember<S> = (String, FiniteSubset<S>);

/// One row per `(generator, family member)`, generator-major, in input order.
/// Empty members are skipped.
pub fn sweep<S>(gens: &[S], family: &[FamilyMember<S>], side: Side) -> FolnerReport
where
    S: Semigroup + Send + Sync,
{
    let jobs: Vec<(&S, &FamilyMember<S>)> = gens
        .iter()
        .flat_map(|g| family.iter().map(move |m| (g, m)))
        .filter(|(_, (_, set))| !set.is_empty())
        .collect();
    let run = |(g, (params, set)): &(&S, &FamilyMember<S>)| {
        let st = set
            .folner_stats(g, side)
            .expect("empty sets are filtered out");
        FolnerRow {
            gen: g.to_string(),
            params: params.clone(),
            size: st.size,
            intersect: st.intersect,
            ratio: st.ratio,
            symdiff: st.symdiff,
        }
    };
    #[cfg(feature = "parallel")]
    let rows = {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows = jobs.iter().map(run).collect();
    FolnerReport { rows }
}

/// Index-and-generator balls `{x : ind(x) <= i, every generator <= g}`.
pub fn thompson_balls(params: &[(u32, u32)]) -> Vec<FamilyMember<ThompsonElement>> {
    params
        .iter()
        .map(|&(max_ind, max_gen)| {
            (
                format!("ind<={max_ind},gen<={max_gen}"),
                FiniteSubset::new(enumerate_elements(max_ind, max_gen)),
            )
        })
        .collect()
}

/// Exponent boxes `F_N`.
pub fn t_boxes<I: IntoIterator<Item = u32>>(sizes: I) -> Vec<FamilyMember<TElement>> {
    sizes
        .into_iter()
        .map(|n| (format!("N={n}"), FiniteSubset::new(exponent_box(n))))
        .collect()
}

/// Shortlex balls: all words of length `<= L`.
pub fn shortlex_balls<I: IntoIterator<Item = usize>>(
    rank: usize,
    lens: I,
) -> Result<Vec<FamilyMember<FreeWord>>> {
    lens.into_iter()
        .map(|l| Ok((format!("len<={l}"), FiniteSubset::new(words_up_to(rank, l)?))))
        .collect()
}
