//! `milnor` — total Milnor numbers of weighted-Le-Yomdin-at-infinity
//! polynomials, with exit codes: 0 success, 2 parse error, 3 not WLY,
//! 4 needs a branch hint, 5 unverified hypotheses without --allow-conjectural.

mod parse;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use milnor_core::apps::{
    monodromy_equivalence, tameness, thom_sebastiani, EquivalenceStrength, TamenessVerdict,
};
use milnor_core::branches::{find_branches, BranchData, EigenSign};
use milnor_core::euler::{
    oracle_total_milnor, total_milnor, total_milnor_abstract, MilnorOptions, MilnorReport,
    OracleMu,
};
use milnor_core::poly::{decompose, Polynomial, Rat, WeightSystem};
use milnor_core::wly::check_wly;
use milnor_core::Error;
use report::{render, report_value, Format};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "milnor", version, about = "Total Milnor numbers at infinity, exactly")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis: WLY check, branches, mu, tameness
    Analyze(Common),
    /// Compute the total Milnor number
    Milnor(Common),
    /// Decide the WLY-at-infinity property only
    CheckWly(Common),
    /// Tameness verdict by the N-k criterion
    Tame(Common),
    /// Certify monodromy-fibration equivalence of two polynomials
    Compare {
        f: String,
        h: String,
        #[command(flatten)]
        common: Common,
    },
    /// Thom-Sebastiani composition of two polynomials on disjoint variables
    Ts {
        f: String,
        h: String,
        /// weights for the second polynomial (defaults to usual weights)
        #[arg(long, value_delimiter = ',')]
        weights_h: Option<Vec<u64>>,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force Jacobian-quotient dimension (independent cross-check)
    Oracle(Common),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FmtArg {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Common {
    /// Polynomial expression; explicit '*' required, e.g. "x1^7*x2 + x3^3 + x2"
    poly: Option<String>,
    /// Read the polynomial expression from a file instead
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Weights, comma separated; default: usual weights (all 1)
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
    /// Fix the variable order; unknown variables become errors
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Rational representative of a singular branch, e.g. "0,-1,1,0"; repeatable
    #[arg(long = "branch-point")]
    branch_point: Vec<String>,
    /// Abstract mode: only the top form (--top) and the gap (--k) are known
    #[arg(long = "abstract")]
    abstract_mode: bool,
    /// Top weighted-homogeneous form for --abstract
    #[arg(long)]
    top: Option<String>,
    /// Degree gap k for --abstract
    #[arg(long)]
    k: Option<u64>,
    /// Eigenspace grading convention for the cyclic isotropy action
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    eigen_sign: SignArg,
    /// Accept values that rest on the unproven mu0 = tau0 reduction
    #[arg(long)]
    allow_conjectural: bool,
    /// RNG seed for the isolated-polynomial existence probe
    #[arg(long)]
    seed: Option<u64>,
    /// Random trials for the existence probe
    #[arg(long)]
    trials: Option<u32>,
    #[arg(long, value_enum, default_value_t = FmtArg::Text)]
    format: FmtArg,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

fn core_fail(e: Error) -> Failure {
    let code = match e {
        Error::NonRationalBranch => 4,
        Error::Conjectural => 5,
        Error::NotMixed | Error::DegenerateInput => 3,
        _ => 1,
    };
    let msg = match code {
        4 => format!("{e}; supply the branch with --branch-point"),
        5 => format!("{e}; re-run with --allow-conjectural to accept"),
        _ => e.to_string(),
    };
    fail(code, msg)
}

impl Common {
    fn format(&self) -> Format {
        match self.format {
            FmtArg::Text => Format::Text,
            FmtArg::Json => Format::Json,
        }
    }

    fn sign(&self) -> EigenSign {
        match self.eigen_sign {
            SignArg::Plus => EigenSign::Plus,
            SignArg::Minus => EigenSign::Minus,
        }
    }

    fn options(&self) -> MilnorOptions {
        let mut o = MilnorOptions::default();
        if let Some(s) = self.seed {
            o.seed = s;
        }
        if let Some(t) = self.trials {
            o.trials = t;
        }
        o.allow_conjectural = self.allow_conjectural;
        o
    }

    fn text(&self) -> Result<String, Failure> {
        if let Some(t) = &self.poly {
            return Ok(t.clone());
        }
        if let Some(path) = &self.input {
            return std::fs::read_to_string(path)
                .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())));
        }
        Err(fail(2, "no polynomial given (positional argument or --input)"))
    }

    fn parse(&self, text: &str) -> Result<Polynomial, Failure> {
        let (f, _) = parse::parse_polynomial(text, self.vars.as_deref())
            .map_err(|e| fail(2, e.to_string()))?;
        Ok(f)
    }

    fn weights_for(&self, nvars: usize) -> Result<WeightSystem, Failure> {
        let w = match &self.weights {
            Some(w) => w.clone(),
            None => vec![1; nvars],
        };
        if w.len() != nvars {
            return Err(fail(
                2,
                format!("{} weights given for {} variables", w.len(), nvars),
            ));
        }
        WeightSystem::new(w).map_err(|e| fail(2, e.to_string()))
    }

    fn hints(&self) -> Result<Vec<Vec<Rat>>, Failure> {
        self.branch_point
            .iter()
            .map(|s| parse::parse_rational_list(s).map_err(|e| fail(2, e.to_string())))
            .collect()
    }
}

fn branches_for(
    top: &Polynomial,
    w: &WeightSystem,
    common: &Common,
) -> Result<Vec<BranchData>, Failure> {
    match find_branches(top, w, &common.hints()?, common.sign()) {
        Ok(b) => Ok(b),
        Err(Error::NotCurve { dim }) if dim < 1 => Ok(vec![]),
        Err(e) => Err(core_fail(e)),
    }
}

/// Build the full report for analyze/milnor/tame; exit 3 when not WLY.
fn full_report(common: &Common) -> Result<(MilnorReport, TamenessVerdict, Vec<String>), Failure> {
    let opts = common.options();
    let mut notes = Vec::new();
    let report = if common.abstract_mode {
        let top_text = common
            .top
            .as_ref()
            .ok_or_else(|| fail(2, "--abstract requires --top"))?;
        let k = common
            .k
            .ok_or_else(|| fail(2, "--abstract requires --k"))?;
        let top = common.parse(top_text)?;
        let w = common.weights_for(top.nvars())?;
        let branches = branches_for(&top, &w, common)?;
        notes.push(
            "abstract mode: mu is determined by the top form and k alone".into(),
        );
        total_milnor_abstract(&top, &w, k, &branches, &opts).map_err(core_fail)?
    } else {
        let f = common.parse(&common.text()?)?;
        let w = common.weights_for(f.nvars())?;
        let dec = decompose(&f, &w).map_err(core_fail)?;
        let analysis = check_wly(&dec).map_err(core_fail)?;
        if !analysis.is_wly {
            return Err(fail(
                3,
                format!(
                    "not WLY at infinity for weights ({}): the singular locus of the \
                     top form meets the subtop level off the origin",
                    dec.w
                        .weights()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            ));
        }
        let branches = if analysis.sing_dim == 1 {
            branches_for(dec.top(), &w, common)?
        } else {
            vec![]
        };
        total_milnor(&analysis, &branches, &opts).map_err(core_fail)?
    };
    let tame = tameness(&report);
    Ok((report, tame, notes))
}

fn cmd_full(common: &Common) -> Result<(String, u8), Failure> {
    let (report, tame, notes) = full_report(common)?;
    let v = report_value(&report, &tame, &notes);
    Ok((render(&v, common.format()), 0))
}

fn cmd_check_wly(common: &Common) -> Result<(String, u8), Failure> {
    let f = common.parse(&common.text()?)?;
    let w = common.weights_for(f.nvars())?;
    let dec = decompose(&f, &w).map_err(core_fail)?;
    let analysis = check_wly(&dec).map_err(core_fail)?;
    let mut m = Map::new();
    m.insert("weights".into(), json!(dec.w.weights().iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    m.insert("N".into(), Value::String(dec.degree.to_string()));
    m.insert("k".into(), Value::String(dec.gap.to_string()));
    m.insert("wly".into(), Value::Bool(analysis.is_wly));
    m.insert("sing_dim".into(), Value::String(analysis.sing_dim.to_string()));
    m.insert("quasi_tame".into(), Value::Bool(analysis.quasi_tame));
    let out = render(&Value::Object(m), common.format());
    Ok((out, if analysis.is_wly { 0 } else { 3 }))
}

fn cmd_tame(common: &Common) -> Result<(String, u8), Failure> {
    let (_, tame, _) = full_report(common)?;
    let status = match tame.status {
        milnor_core::apps::TameStatus::Tame => "Tame",
        milnor_core::apps::TameStatus::CriterionNotMet => "CriterionNotMet",
        milnor_core::apps::TameStatus::NotTame(_) => "NotTame",
    };
    let mut m = Map::new();
    m.insert("tame".into(), Value::String(status.into()));
    m.insert("reason".into(), Value::String(tame.reason.clone()));
    Ok((render(&Value::Object(m), common.format()), 0))
}

fn cmd_oracle(common: &Common) -> Result<(String, u8), Failure> {
    let f = common.parse(&common.text()?)?;
    let mu = oracle_total_milnor(&f).map_err(core_fail)?;
    let s = match mu {
        OracleMu::Finite(v) => v.to_string(),
        OracleMu::Infinite => "infinite".into(),
    };
    let mut m = Map::new();
    m.insert("mu".into(), Value::String(s));
    Ok((render(&Value::Object(m), common.format()), 0))
}

fn union_vars(f_text: &str, h_text: &str, common: &Common) -> Result<Vec<String>, Failure> {
    if let Some(v) = &common.vars {
        return Ok(v.clone());
    }
    let (_, mut names) =
        parse::parse_polynomial(f_text, None).map_err(|e| fail(2, e.to_string()))?;
    let (_, h_names) =
        parse::parse_polynomial(h_text, None).map_err(|e| fail(2, e.to_string()))?;
    for n in h_names {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    Ok(names)
}

fn cmd_compare(f_text: &str, h_text: &str, common: &Common) -> Result<(String, u8), Failure> {
    let vars = union_vars(f_text, h_text, common)?;
    let (f, _) =
        parse::parse_polynomial(f_text, Some(&vars)).map_err(|e| fail(2, e.to_string()))?;
    let (h, _) =
        parse::parse_polynomial(h_text, Some(&vars)).map_err(|e| fail(2, e.to_string()))?;
    let w = common.weights_for(vars.len())?;
    let cert = monodromy_equivalence(&f, &h, &w, &common.options());
    let mut m = Map::new();
    m.insert("equivalent".into(), Value::Bool(cert.equivalent));
    m.insert(
        "strength".into(),
        match cert.strength {
            Some(EquivalenceStrength::Diffeomorphic) => Value::String("Diffeomorphic".into()),
            Some(EquivalenceStrength::FiberHomotopy) => Value::String("FiberHomotopy".into()),
            None => Value::Null,
        },
    );
    m.insert(
        "checks".into(),
        Value::Array(cert.checks.iter().map(|(n, ok)| json!([n, ok])).collect()),
    );
    Ok((render(&Value::Object(m), common.format()), 0))
}

fn cmd_ts(
    f_text: &str,
    h_text: &str,
    weights_h: &Option<Vec<u64>>,
    common: &Common,
) -> Result<(String, u8), Failure> {
    let mut common_f = common.clone();
    common_f.poly = Some(f_text.to_string());
    let (report_f, _, _) = full_report(&common_f)?;
    let mut common_h = common.clone();
    common_h.poly = Some(h_text.to_string());
    common_h.vars = None;
    common_h.weights = weights_h.clone();
    let (report_h, _, _) = full_report(&common_h)?;
    let ts = thom_sebastiani(&report_f, &report_h);
    let mut m = Map::new();
    m.insert("mu".into(), Value::String(ts.mu.to_string()));
    m.insert("sphere_dim".into(), Value::String(ts.sphere_dim.to_string()));
    m.insert("tame".into(), Value::Bool(ts.tame));
    m.insert(
        "certificate".into(),
        Value::Array(ts.certificate.iter().map(|s| json!(s)).collect()),
    );
    Ok((render(&Value::Object(m), common.format()), 0))
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    match &cli.cmd {
        Cmd::Analyze(c) | Cmd::Milnor(c) => cmd_full(c),
        Cmd::CheckWly(c) => cmd_check_wly(c),
        Cmd::Tame(c) => cmd_tame(c),
        Cmd::Compare { f, h, common } => cmd_compare(f, h, common),
        Cmd::Ts {
            f,
            h,
            weights_h,
            common,
        } => cmd_ts(f, h, weights_h, common),
        Cmd::Oracle(c) => cmd_oracle(c),
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            std::process::ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.msg);
            std::process::ExitCode::from(failure.code)
        }
    }
}
