//! `ufsg` command-line interface.
//!
//! Exit codes: 0 on success (including "none" answers for failed division),
//! 1 on domain errors, 2 on usage errors.

mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ufsg::folner::{self, FamilyMember, FiniteSubset};
use ufsg::free::{words_up_to, FreeWord, UfBasis};
use ufsg::norm::{DEFAULT_MAX_ITER, DEFAULT_REL_TOL};
use ufsg::thompson::enumerate_elements;
use ufsg::tsemigroup::{folner_ratios, TElement, TGenerator};
use ufsg::{Coefficient, Error, SemigroupVector, Side, ThompsonElement, TruncationBasis};

pub use output::{Format, Output};

#[derive(Debug, Parser)]
#[command(name = "ufsg", version, about = "Thompson's semigroup and unique factorization semigroups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Reject element arguments that are not already in normal form.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SemigroupArg {
    /// Thompson's semigroup
    S,
    /// the matrix semigroup generated by A, B, C
    T,
    /// a free semigroup (see --rank)
    Free,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of a product of generators.
    Normalize { element: String },
    /// Multiply elements left to right.
    Mul {
        #[arg(required = true, num_args = 1..)]
        elements: Vec<String>,
    },
    /// Divide DIVIDEND by DIVISOR; prints the quotient or `none`.
    #[command(group(ArgGroup::new("dir").required(true).args(["left", "right"])))]
    Divide {
        /// quotient w with DIVIDEND = DIVISOR * w
        #[arg(long)]
        left: bool,
        /// quotient w with DIVIDEND = w * DIVISOR
        #[arg(long)]
        right: bool,
        divisor: String,
        dividend: String,
    },
    /// Compare two elements in the total order; prints `<`, `=` or `>`.
    Order { u: String, v: String },
    /// List elements with bounded index and generators, ascending.
    Enumerate {
        #[arg(long)]
        max_ind: u32,
        #[arg(long)]
        max_gen: u32,
    },
    /// Conjugate by x1^n; prints the result or `none`.
    #[command(group(ArgGroup::new("dir").required(true).args(["up", "down"])))]
    Conjugate {
        /// x1^n X x1^-n
        #[arg(long)]
        up: bool,
        /// x1^-n X x1^n
        #[arg(long)]
        down: bool,
        #[arg(long)]
        n: u32,
        element: String,
    },
    /// Greedy unique factorization basis of a free semigroup.
    Ufbasis {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_len: usize,
        /// Check that every word up to --max-len factors exactly once.
        #[arg(long)]
        verify: bool,
    },
    /// Multiply elements of the matrix semigroup (grammar: `A^2 B C`).
    Tmul {
        #[arg(required = true, num_args = 1..)]
        elements: Vec<String>,
        /// Also print the integer matrix and the determinant check.
        #[arg(long)]
        matrix: bool,
    },
    /// Convolve two vector files.
    Convolve { f: String, g: String },
    /// Semisimplicity witness rows f^{*n}(X^n) against f(X)^n.
    Specrad {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        f: String,
    },
    /// Conditional expectation onto the x0 powers.
    Expect { f: String },
    /// Compressed convolution operator on a finite basis.
    Compress(CompressArgs),
    /// Følner ratio tables and sweeps.
    Folner(FolnerArgs),
}

#[derive(Debug, Args)]
struct CompressArgs {
    /// Vector file (`-` for stdin).
    f: String,
    #[arg(long, required_unless_present = "basis")]
    max_ind: Option<u32>,
    #[arg(long, required_unless_present = "basis")]
    max_gen: Option<u32>,
    /// Basis file, one element per line (instead of --max-ind/--max-gen).
    #[arg(long, conflicts_with_all = ["max_ind", "max_gen"])]
    basis: Option<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
    /// Print the estimated operator norm instead of the entries.
    #[arg(long)]
    norm: bool,
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    rel_tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
}

#[derive(Debug, Args)]
struct FolnerArgs {
    #[arg(long, value_enum, default_value_t = SemigroupArg::T)]
    semigroup: SemigroupArg,
    /// Translating element; repeat for several (defaults: A B C, x0 x1, a b).
    #[arg(long = "gen")]
    gens: Vec<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
    /// Largest box size N (semigroup t).
    #[arg(long, default_value_t = 40)]
    n_max: u32,
    /// Smallest box size N (semigroup t).
    #[arg(long, default_value_t = 2)]
    n_min: u32,
    /// Ball index bound, swept from 1 (semigroup s).
    #[arg(long, default_value_t = 4)]
    max_ind: u32,
    /// Ball generator bound, swept from 1 (semigroup s).
    #[arg(long, default_value_t = 4)]
    max_gen: u32,
    /// Rank (semigroup free).
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Word length bound, swept from 1 (semigroup free).
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// A custom set file, one element per line; replaces the built-in family.
    #[arg(long)]
    set: Option<String>,
    /// For semigroup t, emit the generic sweep report instead of the
    /// N/count/ratio table.
    #[arg(long)]
    report: bool,
}

struct Ctx {
    strict: bool,
}

impl Ctx {
    fn element(&self, s: &str) -> Result<ThompsonElement, Error> {
        if self.strict {
            ThompsonElement::parse_strict(s)
        } else {
            s.parse()
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidArgument(format!("cannot read `{path}`: {e}")))?;
    Ok(text)
}

fn read_vector(path: &str) -> Result<SemigroupVector<ThompsonElement>, Error> {
    SemigroupVector::parse_tsv(&read_input(path)?)
}

fn set_lines(path: &str) -> Result<Vec<String>, Error> {
    Ok(read_input(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

fn vector_output(v: &SemigroupVector<ThompsonElement>) -> Output {
    Output::Table {
        headers: vec!["element", "re", "im"],
        rows: v
            .iter()
            .map(|(s, c)| vec![s.to_string(), c.re.to_string(), c.im.to_string()])
            .collect(),
        tsv_header: false,
    }
}

fn optional(field: &'static str, x: Option<impl ToString>) -> Output {
    Output::Value {
        field,
        value: x.map_or_else(|| "none".to_string(), |x| x.to_string()),
    }
}

fn report_output(report: &folner::FolnerReport) -> Output {
    Output::Table {
        headers: vec!["gen", "params", "size", "intersect", "ratio", "symdiff"],
        rows: report
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.gen.clone(),
                    r.params.clone(),
                    r.size.to_string(),
                    r.intersect.to_string(),
                    r.ratio.to_string(),
                    r.symdiff.to_string(),
                ]
            })
            .collect(),
        tsv_header: true,
    }
}

fn folner_cmd(ctx: &Ctx, a: &FolnerArgs, notes: &mut Vec<String>) -> Result<Output, Error> {
    let side: Side = a.side.into();
    match a.semigroup {
        SemigroupArg::T => {
            let gens: Vec<TElement> = if a.gens.is_empty() {
                TGenerator::ALL.iter().map(|g| g.element()).collect()
            } else {
                a.gens.iter().map(|g| g.parse()).collect::<Result<_, _>>()?
            };
            if let Some(path) = &a.set {
                let set = set_lines(path)?
                    .iter()
                    .map(|l| l.parse::<TElement>())
                    .collect::<Result<Vec<_>, _>>()?;
                let fam = vec![(path.clone(), FiniteSubset::new(set))];
                return Ok(report_output(&folner::sweep(&gens, &fam, side)));
            }
            if a.n_min == 0 || a.n_min > a.n_max {
                return Err(Error::InvalidArgument(format!(
                    "need 1 <= --n-min <= --n-max, got {}..{}",
                    a.n_min, a.n_max
                )));
            }
            if a.report {
                let fam = folner::t_boxes(a.n_min..=a.n_max);
                return Ok(report_output(&folner::sweep(&gens, &fam, side)));
            }
            let [g] = gens.as_slice() else {
                return Err(Error::InvalidArgument(
                    "the N/count/ratio table takes exactly one --gen (use --report for several)"
                        .into(),
                ));
            };
            let g = TGenerator::ALL
                .into_iter()
                .find(|t| t.element() == *g)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("--gen must be A, B or C, got `{g}`"))
                })?;
            let rows = (a.n_min..=a.n_max)
                .map(|n| {
                    folner_ratios(g, n, side).map(|r| {
                        vec![
                            n.to_string(),
                            r.count.to_string(),
                            r.ratio.to_string(),
                            r.symdiff_ratio.to_string(),
                        ]
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(Output::Table {
                headers: vec!["N", "count", "ratio", "symdiff_ratio"],
                rows,
                tsv_header: true,
            })
        }
        SemigroupArg::S => {
            notes.push(
                "note: exploratory data; no Følner family is known for Thompson's semigroup"
                    .into(),
            );
            let gens: Vec<ThompsonElement> = if a.gens.is_empty() {
                vec![ThompsonElement::generator(0), ThompsonElement::generator(1)]
            } else {
                a.gens.iter().map(|g| ctx.element(g)).collect::<Result<_, _>>()?
            };
            let fam: Vec<FamilyMember<ThompsonElement>> = match &a.set {
                Some(path) => {
                    let set = set_lines(path)?
                        .iter()
                        .map(|l| ctx.element(l))
                        .collect::<Result<Vec<_>, _>>()?;
                    vec![(path.clone(), FiniteSubset::new(set))]
                }
                None => {
                    let params: Vec<(u32, u32)> = (1..=a.max_ind)
                        .flat_map(|i| (1..=a.max_gen).map(move |g| (i, g)))
                        .collect();
                    folner::thompson_balls(&params)
                }
            };
            Ok(report_output(&folner::sweep(&gens, &fam, side)))
        }
        SemigroupArg::Free => {
            let gens: Vec<FreeWord> = if a.gens.is_empty() {
                vec![FreeWord::parse(a.rank, "a")?, FreeWord::parse(a.rank, "b")?]
            } else {
                a.gens
                    .iter()
                    .map(|g| FreeWord::parse(a.rank, g))
                    .collect::<Result<_, _>>()?
            };
            let fam = match &a.set {
                Some(path) => {
                    let set = set_lines(path)?
                        .iter()
                        .map(|l| FreeWord::parse(a.rank, l))
                        .collect::<Result<Vec<_>, _>>()?;
                    vec![(path.clone(), FiniteSubset::new(set))]
                }
                None => folner::shortlex_balls(a.rank, 1..=a.max_len)?,
            };
            Ok(report_output(&folner::sweep(&gens, &fam, side)))
        }
    }
}

fn compress_cmd(ctx: &Ctx, a: &CompressArgs) -> Result<Output, Error> {
    let f = read_vector(&a.f)?;
    let elements = match (&a.basis, a.max_ind, a.max_gen) {
        (Some(path), _, _) => set_lines(path)?
            .iter()
            .map(|l| ctx.element(l))
            .collect::<Result<Vec<_>, _>>()?,
        (None, Some(i), Some(g)) => enumerate_elements(i, g),
        _ => return Err(Error::InvalidArgument("need --basis or --max-ind and --max-gen".into())),
    };
    let basis = TruncationBasis::new(elements)?;
    let m = f.compress_operator(&basis, a.side.into());
    if a.norm {
        let est = m.norm_estimate(a.rel_tol, a.max_iter)?;
        return Ok(Output::Value {
            field: "norm",
            value: format!("{est:.12}"),
        });
    }
    let zero = Coefficient::from_ints(0, 0);
    let mut rows = Vec::new();
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let z = m.get(r, c);
            if *z != zero {
                rows.push(vec![
                    basis.elements()[r].to_string(),
                    basis.elements()[c].to_string(),
                    z.re.to_string(),
                    z.im.to_string(),
                ]);
            }
        }
    }
    Ok(Output::Table {
        headers: vec!["row", "col", "re", "im"],
        rows,
        tsv_header: true,
    })
}

fn execute(cli: &Cli, notes: &mut Vec<String>) -> Result<Output, Error> {
    let ctx = Ctx { strict: cli.strict };
    Ok(match &cli.command {
        Command::Normalize { element } => Output::Value {
            field: "normal_form",
            value: ctx.element(element)?.to_string(),
        },
        Command::Mul { elements } => {
            let mut acc = ThompsonElement::identity();
            for e in elements {
                acc = acc.multiply(&ctx.element(e)?);
            }
            Output::Value {
                field: "product",
                value: acc.to_string(),
            }
        }
        Command::Divide {
            left,
            divisor,
            dividend,
            ..
        } => {
            let (d, v) = (ctx.element(divisor)?, ctx.element(dividend)?);
            let q = if *left {
                d.left_divide(&v)
            } else {
                v.right_divide(&d)
            };
            optional("quotient", q)
        }
        Command::Order { u, v } => {
            let o = ctx.element(u)?.compare_total(&ctx.element(v)?);
            Output::Value {
                field: "order",
                value: match o {
                    std::cmp::Ordering::Less => "<",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                }
                .into(),
            }
        }
        Command::Enumerate { max_ind, max_gen } => Output::List {
            field: "elements",
            items: enumerate_elements(*max_ind, *max_gen)
                .iter()
                .map(ToString::to_string)
                .collect(),
        },
        Command::Conjugate { up, n, element, .. } => {
            let x = ctx.element(element)?;
            let r = if *up {
                x.conjugate_by_x1_up(*n)
            } else {
                x.conjugate_by_x1_down(*n)
            };
            optional("conjugate", r)
        }
        Command::Ufbasis {
            rank,
            max_len,
            verify,
        } => {
            let basis = UfBasis::construct(*rank, *max_len)?;
            if *verify {
                let words = words_up_to(*rank, *max_len)?;
                if let Some(w) = words
                    .iter()
                    .find(|w| basis.count_increasing_factorizations(w) != 1)
                {
                    return Err(Error::InvalidArgument(format!(
                        "`{w}` has {} increasing factorizations",
                        basis.count_increasing_factorizations(w)
                    )));
                }
                notes.push(format!(
                    "verified: {} words of length <= {max_len} factor uniquely",
                    words.len()
                ));
            }
            Output::List {
                field: "basis",
                items: basis.members().iter().map(ToString::to_string).collect(),
            }
        }
        Command::Tmul { elements, matrix } => {
            let mut acc = TElement::identity();
            for e in elements {
                acc = acc.multiply(&e.parse()?);
            }
            if *matrix {
                let m = acc.to_matrix();
                Output::Table {
                    headers: vec!["normal_form", "matrix", "det", "det_identity"],
                    rows: vec![vec![
                        acc.to_string(),
                        m.to_string(),
                        m.det().to_string(),
                        acc.det_identity_check().to_string(),
                    ]],
                    tsv_header: true,
                }
            } else {
                Output::Value {
                    field: "product",
                    value: acc.to_string(),
                }
            }
        }
        Command::Convolve { f, g } => vector_output(&read_vector(f)?.convolve(&read_vector(g)?)),
        Command::Specrad { n_max, f } => {
            let rows = read_vector(f)?.semisimplicity_witness(*n_max)?;
            Output::Table {
                headers: vec!["n", "element", "re", "im", "expected_re", "expected_im", "holds"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.power.to_string(),
                            r.actual.re.to_string(),
                            r.actual.im.to_string(),
                            r.expected.re.to_string(),
                            r.expected.im.to_string(),
                            r.holds().to_string(),
                        ]
                    })
                    .collect(),
                tsv_header: true,
            }
        }
        Command::Expect { f } => vector_output(&read_vector(f)?.conditional_expectation()),
        Command::Compress(a) => compress_cmd(&ctx, a)?,
        Command::Folner(a) => folner_cmd(&ctx, a, notes)?,
    })
}

/// Honors `UFSG_THREADS` (0 or unset = automatic).
fn configure_threads() {
    if let Some(n) = std::env::var("UFSG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    let mut notes = Vec::new();
    match execute(&cli, &mut notes) {
        Ok(output) => {
            for n in notes {
                let _ = writeln!(err, "{n}");
            }
            if out.write_all(output.render(cli.format).as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
