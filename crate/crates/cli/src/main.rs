use std::io::{self, BufRead};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewres::deriv::{self, PointSeq};
use skewres::dlinalg::{self, DDetValue, DMatrix};
use skewres::extend;
use skewres::parse::{parse_elem, parse_matrix, parse_poly, parse_ring, parse_seq};
use skewres::resultant::{self, Side};
use skewres::rings::DEFAULT_SEED;
use skewres::skewpoly::{self, conj_left, conj_right, eval_left, eval_right};
use skewres::{Elem, Error, RingCtx, SkewPoly};

#[derive(Parser)]
#[command(
    name = "skewres",
    version,
    about = "Exact arithmetic and resultants in skew polynomial rings F[x; sigma, delta]"
)]
struct Cli {
    /// Coefficient ring: gf(p^m), ff(p,t), gauss or quat.
    #[arg(long, global = true, default_value = "gauss")]
    ring: String,
    /// Endomorphism: id, frob^j, conj or inner(<elem>).
    #[arg(long, global = true, default_value = "id")]
    sigma: String,
    /// Derivation: zero, inner(<elem>) or ddt.
    #[arg(long, global = true, default_value = "zero")]
    delta: String,
    /// Skip the axiom checks on sigma and delta.
    #[arg(long, global = true)]
    unchecked: bool,
    #[arg(long, global = true, value_enum, default_value = "right")]
    side: SideArg,
    /// Point sequence a1,a2,... for deriv, hasse and mult.
    #[arg(long, global = true)]
    seq: Option<String>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled validation and randomized factoring.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

/// Polynomial and element operands accept `-` to read the next stdin line.
#[derive(Subcommand)]
enum Cmd {
    /// Product f·g.
    Mul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Right division f = q·g + r.
    Divr {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Left division f = g·q + r.
    Divl {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Greatest common right divisor.
    Gcrd {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Greatest common left divisor.
    Gcld {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Least common right multiple.
    Lcrm {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Right evaluation f(a).
    Evalr {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Left evaluation f_L(a).
    Evall {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Conjugate of a by c on the chosen side.
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Sylvester matrix on the chosen side.
    Sylv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Resultant on the chosen side; exits 1 when it is nonzero.
    Res {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Left row rank of a matrix given as `a,b;c,d` or JSON.
    Rank {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Dieudonné determinant of a square matrix.
    Ddet {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// A, B with A·f + B·g = R, the right resultant.
    Bezout {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// The equivalent gcd criteria on the chosen side.
    Criteria {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Derivative polynomial along --seq.
    Deriv {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Hasse derivative along --seq.
    Hasse {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Multiplicity of a as a root, or divisibility by the --seq polynomial.
    Mult {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
    },
    /// Common root in the smallest finite field extension.
    Commonroot {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
}

/// A command failure and its exit status.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match &e {
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::DegreeTooSmall(_)
            | Error::CtxMismatch
            | Error::IncompatibleSpec(_)
            | Error::DivisionByZero => 2,
            Error::ZeroResultant | Error::SingularMatrix => 1,
            _ => 3,
        };
        Fail {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: &str) -> Fail {
    Fail {
        code: 2,
        msg: msg.to_string(),
    }
}

/// What a command prints, plus whether it answers a query negatively.
struct Output {
    text: String,
    json: Value,
    no: bool,
}

impl Output {
    fn yes(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            no: false,
        }
    }
}

struct Env {
    ctx: RingCtx,
    side: Side,
    seed: u64,
    seq: Option<String>,
    stdin: Option<Vec<String>>,
}

impl Env {
    /// The operand itself, or the next stdin line for `-`.
    fn operand(&mut self, s: &str) -> Result<String, Fail> {
        if s != "-" {
            return Ok(s.to_string());
        }
        let lines = self.stdin.get_or_insert_with(|| {
            let mut v: Vec<String> = io::stdin().lock().lines().map_while(Result::ok).collect();
            v.retain(|l| !l.trim().is_empty());
            v.reverse();
            v
        });
        lines
            .pop()
            .ok_or_else(|| usage("stdin has no operand left"))
    }

    fn poly(&mut self, s: &str) -> Result<SkewPoly, Fail> {
        let src = self.operand(s)?;
        Ok(parse_poly(&self.ctx, &src)?)
    }

    fn elem(&mut self, s: &str) -> Result<Elem, Fail> {
        let src = self.operand(s)?;
        Ok(parse_elem(&self.ctx, &src)?)
    }

    fn matrix(&mut self, s: &str) -> Result<DMatrix, Fail> {
        let src = self.operand(s)?;
        Ok(parse_matrix(&self.ctx, &src)?)
    }

    fn point_seq(&self) -> Result<PointSeq, Fail> {
        let src = self
            .seq
            .as_deref()
            .ok_or_else(|| usage("this command needs --seq a1,a2,..."))?;
        Ok(PointSeq::new(&self.ctx, parse_seq(&self.ctx, src)?)?)
    }

    fn pt(&self, f: &SkewPoly) -> String {
        f.to_text()
    }

    fn pj(&self, f: &SkewPoly) -> Value {
        json!({
            "text": f.to_text(),
            "coeffs": f.coeffs().iter().map(|c| self.ctx.fmt_elem(c)).collect::<Vec<_>>(),
        })
    }

    fn et(&self, a: &Elem) -> String {
        self.ctx.fmt_elem(a)
    }
}

fn ddet_text(ctx: &RingCtx, d: &DDetValue) -> String {
    match d {
        DDetValue::Zero => "zero".into(),
        DDetValue::Coset {
            rep,
            sign_ambiguous,
        } => {
            let mut s = ctx.fmt_elem(rep);
            if !ctx.is_commutative() {
                s.push_str(" mod [F*,F*]");
            }
            if *sign_ambiguous {
                s.push_str(" (up to sign)");
            }
            s
        }
    }
}

fn ddet_json(ctx: &RingCtx, d: &DDetValue) -> Value {
    match d {
        DDetValue::Zero => json!({"ddet": "zero"}),
        DDetValue::Coset {
            rep,
            sign_ambiguous,
        } => {
            json!({"ddet": {"rep": ctx.fmt_elem(rep), "sign_ambiguous": sign_ambiguous}})
        }
    }
}

fn matrix_json(m: &DMatrix) -> Value {
    json!(m.to_strings())
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Right => "right",
        Side::Left => "left",
    }
}

fn uses_left(cmd: &Cmd, side: Side) -> bool {
    match cmd {
        Cmd::Divl { .. } | Cmd::Gcld { .. } | Cmd::Evall { .. } => true,
        Cmd::Conj { .. }
        | Cmd::Sylv { .. }
        | Cmd::Res { .. }
        | Cmd::Criteria { .. }
        | Cmd::Deriv { .. }
        | Cmd::Hasse { .. }
        | Cmd::Mult { .. }
        | Cmd::Commonroot { .. } => side == Side::Left,
        _ => false,
    }
}

fn run(cmd: &Cmd, env: &mut Env) -> Result<Output, Fail> {
    if uses_left(cmd, env.side) {
        env.ctx.require_sigma_inverse()?;
    }
    let side = env.side;
    Ok(match cmd {
        Cmd::Mul { f, g } => {
            let p = env.poly(f)?.mul(&env.poly(g)?)?;
            Output::yes(env.pt(&p), json!({"product": env.pj(&p)}))
        }
        Cmd::Divr { f, g } | Cmd::Divl { f, g } => {
            let (f, g) = (env.poly(f)?, env.poly(g)?);
            let (q, r) = if matches!(cmd, Cmd::Divr { .. }) {
                f.divmod_right(&g)?
            } else {
                f.divmod_left(&g)?
            };
            Output::yes(
                format!("q = {}\nr = {}", env.pt(&q), env.pt(&r)),
                json!({"quotient": env.pj(&q), "remainder": env.pj(&r)}),
            )
        }
        Cmd::Gcrd { f, g } | Cmd::Gcld { f, g } | Cmd::Lcrm { f, g } => {
            let (f, g) = (env.poly(f)?, env.poly(g)?);
            let (key, p) = match cmd {
                Cmd::Gcrd { .. } => ("gcrd", skewpoly::gcrd(&f, &g)?),
                Cmd::Gcld { .. } => ("gcld", skewpoly::gcld(&f, &g)?),
                _ => ("lcrm", skewpoly::lcrm(&f, &g)?),
            };
            Output::yes(env.pt(&p), json!({ key: env.pj(&p) }))
        }
        Cmd::Evalr { f, a } | Cmd::Evall { f, a } => {
            let (f, a) = (env.poly(f)?, env.elem(a)?);
            let v = if matches!(cmd, Cmd::Evalr { .. }) {
                eval_right(&f, &a)?
            } else {
                eval_left(&f, &a)?
            };
            Output::yes(env.et(&v), json!({"value": env.et(&v)}))
        }
        Cmd::Conj { a, c } => {
            let (a, c) = (env.elem(a)?, env.elem(c)?);
            let v = match side {
                Side::Right => conj_right(&env.ctx, &a, &c)?,
                Side::Left => conj_left(&env.ctx, &a, &c)?,
            };
            Output::yes(
                env.et(&v),
                json!({"conjugate": env.et(&v), "side": side_name(side)}),
            )
        }
        Cmd::Sylv { f, g } => {
            let s = resultant::sylvester(&env.poly(f)?, &env.poly(g)?, side)?;
            Output::yes(
                s.to_text(),
                json!({"sylvester": matrix_json(&s), "side": side_name(side)}),
            )
        }
        Cmd::Res { f, g } => {
            let d = resultant::resultant(&env.poly(f)?, &env.poly(g)?, side)?;
            let mut j = ddet_json(&env.ctx, &d);
            j["side"] = json!(side_name(side));
            Output {
                text: ddet_text(&env.ctx, &d),
                json: j,
                no: !d.is_zero(),
            }
        }
        Cmd::Rank { m } => {
            let r = dlinalg::rank(&env.matrix(m)?);
            Output::yes(r.to_string(), json!({"rank": r}))
        }
        Cmd::Ddet { m } => {
            let d = dlinalg::ddet(&env.matrix(m)?)?;
            Output::yes(ddet_text(&env.ctx, &d), ddet_json(&env.ctx, &d))
        }
        Cmd::Bezout { f, g } => {
            let b = resultant::bezout_resultant(&env.poly(f)?, &env.poly(g)?)?;
            Output::yes(
                format!(
                    "A = {}\nB = {}\nR = {}",
                    env.pt(&b.a),
                    env.pt(&b.b),
                    env.et(&b.r)
                ),
                json!({"a": env.pj(&b.a), "b": env.pj(&b.b), "r": env.et(&b.r)}),
            )
        }
        Cmd::Criteria { f, g } => {
            let r = resultant::criteria(&env.poly(f)?, &env.poly(g)?, side)?;
            let text = format!(
                "side: {}\nresultant_zero: {}\ngcd_nonunit: {}\nno_bezout_unit: {}\nideal_proper: {}",
                side_name(side),
                r.resultant_zero,
                r.gcd_nonunit,
                r.no_bezout_unit,
                r.ideal_proper
            );
            let j = json!({
                "side": side_name(side),
                "resultant_zero": r.resultant_zero,
                "gcd_nonunit": r.gcd_nonunit,
                "no_bezout_unit": r.no_bezout_unit,
                "ideal_proper": r.ideal_proper,
            });
            Output::yes(text, j)
        }
        Cmd::Deriv { f } => {
            let f = env.poly(f)?;
            let d = deriv::delta_poly(&f, &env.point_seq()?, side)?;
            Output::yes(
                env.pt(&d),
                json!({"derivative": env.pj(&d), "side": side_name(side)}),
            )
        }
        Cmd::Hasse { f } => {
            let f = env.poly(f)?;
            let v = deriv::hasse(&f, &env.point_seq()?, side)?;
            Output::yes(
                env.et(&v),
                json!({"hasse": env.et(&v), "side": side_name(side)}),
            )
        }
        Cmd::Mult { f, a } => {
            let f = env.poly(f)?;
            match (a, &env.seq) {
                (Some(a), None) => {
                    let a = env.elem(a)?;
                    let r = deriv::multiplicity(&f, &a, side)?;
                    Output::yes(
                        r.to_string(),
                        json!({"multiplicity": r, "side": side_name(side)}),
                    )
                }
                (None, Some(_)) => {
                    let seq = env.point_seq()?;
                    let divides = deriv::multiplicity_via_sequence(&f, &seq, side)?;
                    let mut j = json!({"divisible": divides, "side": side_name(side)});
                    let mut text = format!("divisible: {divides}");
                    if env.ctx.elements().is_some() {
                        let ms = deriv::is_multiplicity_sequence(&env.ctx, &seq, side)?;
                        j["multiplicity_sequence"] = json!(ms);
                        text.push_str(&format!("\nmultiplicity_sequence: {ms}"));
                    }
                    Output {
                        text,
                        json: j,
                        no: !divides,
                    }
                }
                _ => return Err(usage("mult takes either a point a or --seq, not both")),
            }
        }
        Cmd::Commonroot { f, g } => {
            let (f, g) = (env.poly(f)?, env.poly(g)?);
            match extend::common_root_ext_seeded(&f, &g, side, env.seed)? {
                Some(r) => Output::yes(
                    format!(
                        "degree: {}\nmodulus: {}\nroot: {}",
                        r.ext_degree,
                        r.modulus,
                        r.root_text()
                    ),
                    json!({
                        "side": side_name(side),
                        "degree": r.ext_degree,
                        "modulus": r.modulus.to_text(),
                        "root": r.root_text(),
                    }),
                ),
                None => Output {
                    text: "no common root".into(),
                    json: json!({"side": side_name(side), "root": null}),
                    no: true,
                },
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = parse_ring(&cli.ring, &cli.sigma, &cli.delta, cli.unchecked, cli.seed)
        .map_err(Fail::from)
        .and_then(|ctx| {
            let mut env = Env {
                ctx,
                side: cli.side.into(),
                seed: cli.seed,
                seq: cli.seq.clone(),
                stdin: None,
            };
            run(&cli.cmd, &mut env)
        });
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.no { 1 } else { 0 })
        }
        Err(f) => {
            if cli.json {
                println!("{}", json!({"error": f.msg, "exit": f.code}));
            }
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
