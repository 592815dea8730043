mod render;

use std::cmp::Ordering;
use std::process::ExitCode;

use braid_core::conjugacy::{centralizer_generators, sliding_circuits, slide_to_circuit, DEFAULT_MAX_VERTICES};
use braid_core::dehornoy::{compare_with_fuel, handle_reduce_with_fuel, sign_with_fuel, DEFAULT_FUEL};
use braid_core::{
    act, are_conjugate, comb, equal, gcd, is_braid_automorphism, is_central, is_periodic, lcm,
    normal_form, prefix_divides, remove_last_strand, torsion_witness, BraidError, BraidWord,
    FreeWord, PeriodicBase,
};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use serde_json::json;

use render::{yes_no, Output};

#[derive(Parser)]
#[command(name = "braid", version, about = "Computations in the Artin braid groups B_n")]
#[command(after_help = "Words are single arguments: signed generator indices separated by \
spaces or commas (\"1 -2 3\"), or letters a..y for σ_1..σ_25 with capitals for inverses.")]
struct Cli {
    /// Number of strands (required)
    #[arg(short = 'n', long = "strands", global = true)]
    strands: Option<usize>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Step bound for handle reduction
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: u64,

    /// Cap on the size of sliding circuit sets
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two words represent the same braid
    Eq {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Greatest common prefix
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Least common multiple for the prefix order
    Lcm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Whether A is a prefix of B (A^-1 B positive)
    Divides {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Conjugacy test; prints c with c^-1 X c = Y
    Conj {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Sliding circuit graph of the conjugacy class
    Sc {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Iterate cyclic sliding until a circuit is reached
    Slide {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Dehornoy sign: -, 0 or +
    Sign {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Dehornoy comparison: <, = or >
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Handle reduction
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Strand permutation in cycle notation
    Perm {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Exponent sum
    Expsum {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Conjugacy to a power of δ or ε
    Periodic {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Membership in the center
    Central {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Generators of the centralizer from the sliding circuit graph
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Combing coordinates of a pure braid
    Comb {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Delete the last strand
    Rmstrand {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Artin action of BRAID on the free word W
    ArtinAct {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Whether x_i -> (i-th image) satisfies both Artin conditions; IMAGES holds
    /// n free words separated by ';', e.g. "1 2 -1; 1; 3"
    IsBraidAut {
        #[arg(allow_hyphen_values = true)]
        images: String,
    },
    /// d = gcd(1, x, ..., x^(k-1)) and whether x d = d
    TorsionProbe {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Number of powers
        #[arg(short = 'k', long, default_value_t = 10)]
        k: i64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Nf { .. } => "nf",
            Command::Eq { .. } => "eq",
            Command::Gcd { .. } => "gcd",
            Command::Lcm { .. } => "lcm",
            Command::Divides { .. } => "divides",
            Command::Conj { .. } => "conj",
            Command::Sc { .. } => "sc",
            Command::Slide { .. } => "slide",
            Command::Sign { .. } => "sign",
            Command::Cmp { .. } => "cmp",
            Command::Reduce { .. } => "reduce",
            Command::Perm { .. } => "perm",
            Command::Expsum { .. } => "expsum",
            Command::Periodic { .. } => "periodic",
            Command::Central { .. } => "central",
            Command::Centralizer { .. } => "centralizer",
            Command::Comb { .. } => "comb",
            Command::Rmstrand { .. } => "rmstrand",
            Command::ArtinAct { .. } => "artin-act",
            Command::IsBraidAut { .. } => "is-braid-aut",
            Command::TorsionProbe { .. } => "torsion-probe",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(BraidError),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx {
    n: usize,
    fuel: u64,
    max_vertices: usize,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<BraidWord, Failure> {
        BraidWord::parse(text, self.n).map_err(|e| Failure::Usage(format!("bad word {text:?}: {e}")))
    }

    fn free_word(&self, text: &str) -> Result<FreeWord, Failure> {
        FreeWord::parse(text, self.n).map_err(|e| Failure::Usage(format!("bad free word {text:?}: {e}")))
    }
}

fn boolean(b: bool) -> Output {
    Output::new(b.to_string(), json!({ "result": b }))
}

fn word_output(w: &BraidWord) -> Output {
    Output::new(w.to_string(), json!({ "n": w.strands(), "word": render::word(w) }))
}

fn run(cmd: &Command, ctx: &Ctx) -> Result<Output, Failure> {
    let out = match cmd {
        Command::Nf { word } => {
            let nf = normal_form(&ctx.word(word)?);
            Output::new(nf.to_string(), render::normal_form(&nf))
        }
        Command::Eq { a, b } => boolean(equal(&ctx.word(a)?, &ctx.word(b)?)?),
        Command::Gcd { a, b } => word_output(&gcd(&ctx.word(a)?, &ctx.word(b)?)?),
        Command::Lcm { a, b } => word_output(&lcm(&ctx.word(a)?, &ctx.word(b)?)?),
        Command::Divides { a, b } => boolean(prefix_divides(&ctx.word(a)?, &ctx.word(b)?)?),
        Command::Conj { x, y } => {
            match are_conjugate(&ctx.word(x)?, &ctx.word(y)?, ctx.max_vertices)? {
                Some(c) => Output::new(
                    format!("yes\n{c}"),
                    json!({ "conjugate": true, "conjugator": render::word(&c) }),
                ),
                None => Output::new("no", json!({ "conjugate": false, "conjugator": null })),
            }
        }
        Command::Sc { word } => {
            let g = sliding_circuits(&ctx.word(word)?, ctx.max_vertices)?;
            Output::new(render::graph_text(&g), render::graph(&g))
        }
        Command::Slide { word } => {
            let s = slide_to_circuit(&ctx.word(word)?);
            let c = s.conjugator.to_word();
            Output::new(
                format!("element {}\nconjugator {c}\nperiod {}", s.element, s.period),
                json!({
                    "element": render::normal_form(&s.element),
                    "conjugator": render::word(&c),
                    "period": s.period,
                }),
            )
        }
        Command::Sign { word } => {
            let s = sign_with_fuel(&ctx.word(word)?, ctx.fuel)?;
            Output::new(s.to_string(), json!({ "sign": s.to_string() }))
        }
        Command::Cmp { a, b } => {
            let o = match compare_with_fuel(&ctx.word(a)?, &ctx.word(b)?, ctx.fuel)? {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Output::new(o, json!({ "order": o }))
        }
        Command::Reduce { word } => word_output(&handle_reduce_with_fuel(&ctx.word(word)?, ctx.fuel)?),
        Command::Perm { word } => {
            let p = ctx.word(word)?.permutation();
            Output::new(
                p.to_string(),
                json!({ "images": p.one_based(), "cycle_type": p.cycle_type() }),
            )
        }
        Command::Expsum { word } => {
            let s = ctx.word(word)?.exponent_sum();
            Output::new(s.to_string(), json!({ "exponent_sum": s }))
        }
        Command::Periodic { word } => match is_periodic(&ctx.word(word)?, ctx.max_vertices)? {
            Some(p) => {
                let base = match p.base {
                    PeriodicBase::Delta => "delta",
                    PeriodicBase::Epsilon => "epsilon",
                };
                Output::new(
                    p.to_string(),
                    json!({ "periodic": true, "base": base, "power": p.power }),
                )
            }
            None => Output::new("no", json!({ "periodic": false, "base": null, "power": null })),
        },
        Command::Central { word } => {
            let c = is_central(&ctx.word(word)?);
            Output::new(yes_no(c), json!({ "central": c }))
        }
        Command::Centralizer { word } => {
            let gens = centralizer_generators(&ctx.word(word)?, ctx.max_vertices)?;
            let text: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            let list: Vec<_> = gens.iter().map(render::word).collect();
            Output::new(text.join("\n"), json!({ "generators": list }))
        }
        Command::Comb { word } => {
            let c = comb(&ctx.word(word)?)?;
            Output::new(render::combing_text(&c), render::combing(&c))
        }
        Command::Rmstrand { word } => word_output(&remove_last_strand(&ctx.word(word)?)?),
        Command::ArtinAct { braid, w } => {
            let image = act(&ctx.word(braid)?, &ctx.free_word(w)?)?;
            Output::new(image.to_string(), render::free_word(&image))
        }
        Command::IsBraidAut { images } => {
            let images: Vec<&str> = images.split(';').map(str::trim).collect();
            if images.len() != ctx.n {
                return Err(Failure::Usage(format!(
                    "expected {} images (one per generator of F_{}), got {}",
                    ctx.n,
                    ctx.n,
                    images.len()
                )));
            }
            let images = images
                .iter()
                .map(|t| ctx.free_word(t))
                .collect::<Result<Vec<_>, _>>()?;
            boolean(is_braid_automorphism(&images))
        }
        Command::TorsionProbe { word, k } => {
            let x = ctx.word(word)?;
            let d = torsion_witness(&x, *k)?;
            let fixed = equal(&x.concat(&d)?, &d)?;
            Output::new(
                format!("witness {d}\nfixed {fixed}"),
                json!({ "k": k, "witness": render::word(&d), "fixed": fixed }),
            )
        }
    };
    Ok(out)
}

fn usage_error(kind: ErrorKind, message: String) -> ExitCode {
    let err = Cli::command().error(kind, message);
    let _ = err.print();
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.kind() == ErrorKind::InvalidSubcommand || e.kind() == ErrorKind::MissingSubcommand
            {
                let _ = e.print();
                let names: Vec<String> = Cli::command()
                    .get_subcommands()
                    .map(|s| s.get_name().to_string())
                    .collect();
                eprintln!("\nvalid subcommands: {}", names.join(", "));
                return ExitCode::from(2);
            }
            // help and version exit 0, real usage errors 2
            e.exit();
        }
    };
    let Some(n) = cli.strands else {
        return usage_error(
            ErrorKind::MissingRequiredArgument,
            "the strand count -n/--strands is required".into(),
        );
    };
    if n == 0 {
        return usage_error(ErrorKind::ValueValidation, "the strand count must be at least 1".into());
    }
    let ctx = Ctx {
        n,
        fuel: cli.fuel,
        max_vertices: cli.max_vertices,
    };
    match run(&cli.command, &ctx) {
        Ok(out) => {
            if cli.json {
                let doc = out.document(cli.command.name());
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => usage_error(ErrorKind::InvalidValue, msg),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
