//! `wreath`: exact representation combinatorics of free wreath products.

mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::One;

use source::{with_fusion, FusionSource};
use wreath_core::freeprob::{
    character_moments_wreath, classical_wreath_moments, partial_trace_moments, EpsWord,
};
use wreath_core::fusion::{
    central_char_poly, dim_wreath, fuse, parse_word, render_word, verify_fusion_dimensions,
    FusionData,
};
use wreath_core::homspaces::{dim_hom_g, enumerate_admissible, parse_decorations};
use wreath_core::linmaps::{verify_category_relations, verify_conjugate_equations};
use wreath_core::scalar::rational_to_f64;
use wreath_core::tl::{verify_phi, TLDiagram};
use wreath_core::weingarten::{verify_weingarten, wg_gram, wg_invert, Category};
use wreath_core::{caps, Error, QNum, Rational, Report};

#[derive(Parser)]
#[command(
    name = "wreath",
    version,
    about = "Exact fusion rules, Hom dimensions, laws and Weingarten calculus for free wreath products G ≀* S_N^+"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Fusion data of G: builtin:trivial, builtin:cyclic:S, builtin:integers,
    /// builtin:dual-s3, or file:PATH (JSON fusion table or group table)
    #[arg(long, global = true, default_value = "builtin:trivial")]
    fusion: FusionSource,
    /// Size N of S_N^+
    #[arg(long = "N", global = true, default_value_t = 4)]
    n: u64,
    /// Render numbers as floats with this many significant digits
    #[arg(long, global = true, value_name = "DIGITS")]
    float: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose ω(X) ⊗ ω(Y) into irreducibles
    Fuse { x: String, y: String },
    /// Dimension of ω(X) at the current N
    Dim { x: String },
    /// Central character polynomial of ω(X)
    CharPoly { x: String },
    /// dim Hom(r(α_1)⊗…, r(β_1)⊗…); `*` after a label conjugates it
    HomDim {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        up: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        down: String,
        /// Also list the admissible partitions with their block dimensions
        #[arg(long)]
        list: bool,
    },
    /// Moments of the character of r(α)
    CharLaw {
        /// Label α (defaults to the trivial representation)
        #[arg(long, allow_hyphen_values = true)]
        rep: Option<String>,
        /// A single colored word over 1 and *, e.g. 11*1
        #[arg(long, conflicts_with = "order")]
        eps: Option<String>,
        /// Print every colored word up to this length
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Moments of the character of α^n on the classical G ≀ S_n
    Classical {
        /// z2 (sign representation) or s3 (standard representation);
        /// otherwise --fusion and --rep are used
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rep: Option<String>,
        /// Number of copies n
        #[arg(long = "n")]
        copies: usize,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Limit moment of the truncated character with parameter t
    PartialTrace {
        /// t as p/q
        #[arg(long)]
        t: String,
        #[arg(long)]
        k: usize,
        /// Representation of G whose character law is used (default trivial)
        #[arg(long, allow_hyphen_values = true)]
        rep: Option<String>,
    },
    /// Gram and Weingarten matrices for G = S_s^+ (nc), S_s (all), or trivial G
    Weingarten {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        s: u64,
        /// nc, all, or trivial
        #[arg(long, default_value = "nc")]
        category: String,
        #[arg(long)]
        invert: bool,
        /// Haar state of w_{i j, k l}: four tuples "i,j,k,l", entries of each
        /// tuple separated by '.', e.g. 1.2,1.1,3.4,2.2
        #[arg(long)]
        haar: Option<String>,
    },
    /// Temperley-Lieb diagrams, e.g. "TL(2,2): (1,2)(3,4)"
    #[command(subcommand)]
    Tl(TlCommand),
    /// Run a verification suite
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum TlCommand {
    /// Markov trace at the current N
    Trace { diagram: String },
    /// Collapse pairs of points to get a partition
    Collapse { diagram: String },
    /// Image under the collapsing isomorphism
    Phi { diagram: String },
    /// Check that φ respects ⊗, ∘, * and traces
    Verify {
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// T_p relations on non-crossing partitions at the current N
    Category {
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// Conjugate equations for the nested pairing
    Conjugate {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Collapsing isomorphism between TL and NC
    Iso {
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// Fusion rules and dimensions for the chosen fusion data
    FusionDim {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Letters to build words from (default: all irreducibles)
        #[arg(long, allow_hyphen_values = true)]
        letters: Option<String>,
    },
    /// Weingarten inverses, projection formula, marginals, asymptotics
    Weingarten {
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
}

enum Outcome {
    Done,
    VerificationFailed,
}

struct Printer {
    float: Option<usize>,
}

impl Printer {
    fn qnum(&self, q: &QNum) -> String {
        match self.float {
            Some(d) => format_float(q.to_f64(), d),
            None => q.to_string(),
        }
    }

    fn rational(&self, r: &Rational) -> String {
        match self.float {
            Some(d) => format_float(rational_to_f64(r), d),
            None => r.to_string(),
        }
    }
}

/// `%g`-style: fixed notation for moderate exponents, scientific otherwise.
fn format_float(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if exp < -4 || exp >= digits as i32 {
        sci
    } else {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)
    }
}

fn report(r: Report) -> Outcome {
    print!("{r}");
    if r.passed() {
        Outcome::Done
    } else {
        Outcome::VerificationFailed
    }
}

fn label_or_trivial<F: FusionData>(fd: &F, rep: &Option<String>) -> wreath_core::Result<F::Label> {
    match rep {
        Some(s) => fd.parse_label(s.trim()),
        None => Ok(fd.trivial()),
    }
}

/// Power moments `m_j = dim Hom_G(1, α^{⊗j})`.
fn power_moments<'a, F: FusionData>(fd: &'a F, a: &F::Label) -> impl Fn(usize) -> Rational + 'a {
    let a = a.clone();
    move |j| Rational::from_integer(dim_hom_g(&[], &vec![(a.clone(), false); j], fd).into())
}

fn parse_tuple(s: &str) -> wreath_core::Result<Vec<u64>> {
    s.split(|c: char| c == '.' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("{t:?} is not an index")))
        })
        .collect()
}

fn run(cli: Cli) -> wreath_core::Result<Outcome> {
    let g = &cli.global;
    let out = Printer { float: g.float };
    let n = g.n;
    match cli.command {
        Command::Fuse { x, y } => with_fusion!(g.fusion.load()?, fd => {
            let (x, y) = (parse_word(&x, &fd)?, parse_word(&y, &fd)?);
            for (z, m) in fuse(&x, &y, &fd) {
                println!("{} ×{m}", render_word(&z, &fd));
            }
        }),
        Command::Dim { x } => with_fusion!(g.fusion.load()?, fd => {
            println!("{}", out.qnum(&dim_wreath(&parse_word(&x, &fd)?, &fd, n)?));
        }),
        Command::CharPoly { x } => with_fusion!(g.fusion.load()?, fd => {
            println!("{}", central_char_poly(&parse_word(&x, &fd)?, &fd));
        }),
        Command::HomDim { up, down, list } => with_fusion!(g.fusion.load()?, fd => {
            let (up, down) = (parse_decorations(&up, &fd)?, parse_decorations(&down, &fd)?);
            let adm = enumerate_admissible(&up, &down, &fd)?;
            if list {
                for d in &adm {
                    println!("{} dims {:?}", d.base, d.block_dims);
                }
            }
            println!("{}", adm.iter().map(|d| d.weight()).sum::<u64>());
        }),
        Command::CharLaw { rep, eps, order } => with_fusion!(g.fusion.load()?, fd => {
            let a = label_or_trivial(&fd, &rep)?;
            match eps {
                Some(e) => println!("{}", character_moments_wreath(&a, &fd, &EpsWord::parse(&e)?)?),
                None => {
                    for r in 1..=order {
                        for e in EpsWord::all(r) {
                            println!("{e}: {}", character_moments_wreath(&a, &fd, &e)?);
                        }
                    }
                }
            }
        }),
        Command::Classical {
            group,
            rep,
            copies,
            order,
        } => {
            let (source, default_rep) = match group.as_deref() {
                Some("z2") => (FusionSource::Cyclic(2), Some("g".to_string())),
                Some("s3") => (FusionSource::DualS3, Some("std".to_string())),
                Some(other) => {
                    return Err(Error::Invalid(format!("unknown group {other:?} (z2, s3)")))
                }
                None => (g.fusion.clone(), None),
            };
            let rep = rep.or(default_rep);
            with_fusion!(source.load()?, fd => {
                let a = label_or_trivial(&fd, &rep)?;
                let m = power_moments(&fd, &a);
                for k in 0..=order {
                    println!("{k}: {}", out.rational(&classical_wreath_moments(&m, copies, k)?));
                }
            })
        }
        Command::PartialTrace { t, k, rep } => {
            let t = QNum::parse(&t, 1)?
                .to_rational()
                .ok_or_else(|| Error::Parse("t must be rational".into()))?;
            if t <= Rational::from_integer(0.into()) || t > Rational::one() {
                return Err(Error::Invalid(format!("t = {t} is outside (0, 1]")));
            }
            with_fusion!(g.fusion.load()?, fd => {
                let a = label_or_trivial(&fd, &rep)?;
                println!("{}", out.rational(&partial_trace_moments(&t, power_moments(&fd, &a), k)?));
            })
        }
        Command::Weingarten {
            k,
            s,
            category,
            invert,
            haar,
        } => {
            let table = wg_gram(k, n, s, Category::parse(&category)?)?;
            println!("gram (k={k}, N={n}, s={s}):");
            print!("{}", table.render(&table.gram));
            if invert || haar.is_some() {
                let table = wg_invert(table)?;
                let inv = table.inverse.as_ref().expect("inverted");
                if invert {
                    println!("weingarten:");
                    print!("{}", table.render_with(inv, |x| out.rational(x)));
                }
                if let Some(h) = haar {
                    let parts: Vec<&str> = h.split(',').collect();
                    if parts.len() != 4 {
                        return Err(Error::Parse("--haar expects four tuples i,j,k,l".into()));
                    }
                    let t: Vec<Vec<u64>> = parts
                        .iter()
                        .map(|p| parse_tuple(p))
                        .collect::<Result<_, _>>()?;
                    let v = table.haar_state(&t[0], &t[1], &t[2], &t[3])?;
                    println!("h = {}", out.rational(&v));
                }
            }
        }
        Command::Tl(cmd) => match cmd {
            TlCommand::Trace { diagram } => println!(
                "{}",
                out.qnum(&TLDiagram::parse(&diagram)?.markov_trace(n)?)
            ),
            TlCommand::Collapse { diagram } => {
                println!("{}", TLDiagram::parse(&diagram)?.collapse()?)
            }
            TlCommand::Phi { diagram } => println!("{}", TLDiagram::parse(&diagram)?.phi()?),
            TlCommand::Verify { max_points } => return Ok(report(verify_phi(max_points)?)),
        },
        Command::Verify(cmd) => {
            let r = match cmd {
                VerifyCommand::Category { max_points } => verify_category_relations(n, max_points)?,
                VerifyCommand::Conjugate { k } => verify_conjugate_equations(k, n)?,
                VerifyCommand::Iso { max_points } => verify_phi(max_points)?,
                VerifyCommand::FusionDim { max_len, letters } => {
                    with_fusion!(g.fusion.load()?, fd => {
                        let letters = match letters {
                            Some(l) => l
                                .split(',')
                                .map(|x| fd.parse_label(x.trim()))
                                .collect::<wreath_core::Result<Vec<_>>>()?,
                            None => fd.irreps().ok_or_else(|| {
                                Error::Invalid("infinitely many irreducibles; pass --letters".into())
                            })?,
                        };
                        verify_fusion_dimensions(&fd, &letters, max_len, &[n])?
                    })
                }
                VerifyCommand::Weingarten { max_k } => verify_weingarten(&[n], max_k)?,
            };
            return Ok(report(r));
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = caps::load_env() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 2,
                _ => 1,
            })
        }
    }
}
