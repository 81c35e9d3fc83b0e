//! Finitely supported functions on a semigroup with exact complex-rational
//! coefficients, their convolution, and finite compressions of the
//! convolution operators `L_f`, `R_f`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::norm;
use crate::semigroup::{LowerStable, Semigroup, Side};
use crate::thompson::ThompsonElement;

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coefficient {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coefficient {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coefficient { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coefficient::new(re, BigRational::zero())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Coefficient::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn pow(&self, n: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `|z|^2`, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Coefficient::real(BigRational::one())
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::new(-&self.re, -&self.im)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        Coefficient::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// `re<TAB>im`, each as `p/q` (or `p`).
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.re, self.im)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

/// A finitely supported function `S -> Q[i]`. Zero coefficients are never
/// stored, and iteration follows the element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupVector<S: Semigroup> {
    coeffs: BTreeMap<S, Coefficient>,
}

impl<S: Semigroup> Default for SemigroupVector<S> {
    fn default() -> Self {
        SemigroupVector {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<S: Semigroup> SemigroupVector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The point mass `δ_s`.
    pub fn delta(s: S) -> Self {
        let mut v = Self::zero();
        v.add_term(s, Coefficient::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (S, Coefficient)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (s, c) in terms {
            v.add_term(s, c);
        }
        v
    }

    /// Adds `c` to the coefficient at `s`, pruning a zero result.
    pub fn add_term(&mut self, s: S, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(s) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, s: &S) -> Coefficient {
        self.coeffs.get(s).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn support(&self) -> impl Iterator<Item = &S> {
        self.coeffs.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &Coefficient)> {
        self.coeffs.iter()
    }

    /// `(f * g)(s) = Σ_{uv = s} f(u) g(v)`.
    pub fn convolve(&self, g: &SemigroupVector<S>) -> SemigroupVector<S> {
        let mut out = SemigroupVector::zero();
        for (u, fu) in &self.coeffs {
            for (v, gv) in &g.coeffs {
                out.add_term(u.op(v), fu * gv);
            }
        }
        out
    }

    /// The `n`-fold convolution power, `n >= 1`.
    pub fn convolve_power(&self, n: u32) -> Result<SemigroupVector<S>> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "convolution power needs n >= 1 (no unit assumed)".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.convolve(self);
        }
        Ok(acc)
    }

    pub fn restrict<P: Fn(&S) -> bool>(&self, keep: P) -> SemigroupVector<S> {
        SemigroupVector {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// The compression of `L_f` (left) or `R_f` (right) to `basis`: entry
    /// `(r, c)` is the coefficient of `basis[r]` in `f * δ_basis[c]` (left)
    /// or `δ_basis[c] * f` (right). Products leaving the basis are dropped,
    /// so the norm of the result bounds the operator norm from below.
    pub fn compress_operator(&self, basis: &TruncationBasis<S>, side: Side) -> CompressedMatrix {
        let dim = basis.len();
        let mut entries = vec![Coefficient::zero(); dim * dim];
        for (c, col) in basis.elements().iter().enumerate() {
            for (u, fu) in &self.coeffs {
                let image = match side {
                    Side::Left => u.op(col),
                    Side::Right => col.op(u),
                };
                if let Some(r) = basis.position(&image) {
                    let cell = &mut entries[r * dim + c];
                    *cell = &*cell + fu;
                }
            }
        }
        CompressedMatrix { dim, entries }
    }
}

/// One line of a semisimplicity witness: `f^{*n}(X^n)` against `f(X)^n`
/// for the least support element `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRow<S> {
    pub n: u32,
    pub power: S,
    pub actual: Coefficient,
    pub expected: Coefficient,
}

impl<S> WitnessRow<S> {
    pub fn holds(&self) -> bool {
        self.actual == self.expected
    }
}

impl<S: LowerStable> SemigroupVector<S> {
    /// The least support element under the lower-stable order.
    pub fn min_support(&self) -> Result<&S> {
        self.coeffs.keys().next().ok_or(Error::ZeroVector)
    }

    pub fn semisimplicity_witness(&self, n_max: u32) -> Result<Vec<WitnessRow<S>>> {
        let x = self.min_support()?.clone();
        let fx = self.get(&x);
        let mut rows = Vec::with_capacity(n_max as usize);
        let mut power = self.clone();
        let mut xn = x.clone();
        for n in 1..=n_max {
            if n > 1 {
                power = power.convolve(self);
                xn = xn.op(&x);
            }
            rows.push(WitnessRow {
                n,
                actual: power.get(&xn),
                expected: fx.pow(n),
                power: xn.clone(),
            });
        }
        Ok(rows)
    }

    /// True iff `f^{*n}(X^n) = f(X)^n` for every `1 <= n <= n_max`, where
    /// `X` is the least element of the support.
    pub fn semisimplicity_witness_check(&self, n_max: u32) -> Result<bool> {
        Ok(self.semisimplicity_witness(n_max)?.iter().all(WitnessRow::holds))
    }
}

impl SemigroupVector<ThompsonElement> {
    /// Keeps only the coefficients on the powers `x0^n`.
    pub fn conditional_expectation(&self) -> Self {
        self.restrict(ThompsonElement::is_x0_power)
    }
}

impl<S: Semigroup + FromStr<Err = Error>> SemigroupVector<S> {
    /// Reads `element<TAB>re<TAB>im` lines. Blank lines and `#` comments are
    /// skipped, a missing imaginary part is zero, and repeated elements add.
    pub fn parse_tsv(text: &str) -> Result<Self> {
        let mut v = Self::zero();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let err = |m: String| Error::Parse(format!("line {}: {m}", k + 1));
            let (el, re, im) = match fields.as_slice() {
                [el, re] => (*el, *re, "0"),
                [el, re, im] => (*el, *re, *im),
                _ => return Err(err(format!("expected 2 or 3 tab-separated fields in `{line}`"))),
            };
            let s: S = el.parse().map_err(|e: Error| err(e.to_string()))?;
            let c = Coefficient::new(
                parse_rational(re).map_err(|e| err(e.to_string()))?,
                parse_rational(im).map_err(|e| err(e.to_string()))?,
            );
            v.add_term(s, c);
        }
        Ok(v)
    }
}

impl<S: Semigroup> SemigroupVector<S> {
    pub fn to_tsv(&self) -> String {
        self.coeffs
            .iter()
            .map(|(s, c)| format!("{s}\t{c}\n"))
            .collect()
    }
}

/// An ordered list of distinct elements fixing the rows and columns of a
/// compression.
#[derive(Clone, Debug)]
pub struct TruncationBasis<S: Semigroup> {
    elements: Vec<S>,
    index: HashMap<S, usize>,
}

impl<S: Semigroup> TruncationBasis<S> {
    pub fn new(elements: Vec<S>) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        for (k, s) in elements.iter().enumerate() {
            if index.insert(s.clone(), k).is_some() {
                return Err(Error::DuplicateBasisElement(s.to_string()));
            }
        }
        Ok(TruncationBasis { elements, index })
    }

    pub fn elements(&self) -> &[S] {
        &self.elements
    }

    pub fn position(&self, s: &S) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A dense square matrix of exact coefficients, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedMatrix {
    dim: usize,
    entries: Vec<Coefficient>,
}

impl CompressedMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Coefficient {
        &self.entries[row * self.dim + col]
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.entries.iter().map(Coefficient::to_complex64).collect()
    }

    /// Largest singular value by power iteration; see
    /// [`norm::largest_singular_value`].
    pub fn norm_estimate(&self, rel_tol: f64, max_iter: usize) -> Result<f64> {
        norm::largest_singular_value(&self.to_complex(), self.dim, rel_tol, max_iter)
    }
}
