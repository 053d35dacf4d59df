//! Command-line front end. [`run`] does all the work and returns the exit code
//! and output, so the binary only prints.
//!
//! Exit codes: 0 on success (or a true predicate), 1 when a predicate is false,
//! 2 on malformed input.

use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cocycles::{is_abelian, verify_3cocycle, Cochain3, CocycleParams};
use crate::fixtures::{self, Fixture};
use crate::genuine::genuineness_report;
use crate::groups::{invariant_factors_of, FiniteGroup};
use crate::morita::{describe_group, morita_report, verify_witness, MoritaWitness};
use crate::nichols::{
    analyze_triple, cartan_matrix, d8, diagonalize_braiding, is_braid_indecomposable, skeleton, BraidedSpace, ModuleSpec,
    YDModule, DEFAULT_CAP,
};
use crate::tqd::{grouplike_group, verify_quasi_hopf_with, Coverage, TqdAlgebra};

#[derive(Parser, Debug)]
#[command(name = "twisted-doubles", version, about = "Exact computations with twisted quantum doubles")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// 3-cocycles ω_ā on finite abelian groups.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// The quasi-Hopf algebra D^ω(G).
    #[command(subcommand)]
    Tqd(TqdCmd),
    /// Morita equivalence of D^ω(G) with an untwisted double.
    #[command(subcommand)]
    Morita(MoritaCmd),
    /// Whether D^{ω_a}(Z_m) is genuine.
    Genuine(GenuineArgs),
    /// Nichols algebras of Yetter-Drinfeld modules over D8.
    #[command(subcommand)]
    Nichols(NicholsCmd),
    /// The named fixtures.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

/// Cocycle parameters, inline or from a file, or a named fixture.
#[derive(Args, Debug, Clone)]
pub struct ParamsInput {
    /// Inline JSON such as {"group":[2,2,2],"a":[0,0,0],"a3":{"(1,2,3)":1}}, or a path to such a file.
    #[arg(long, conflicts_with = "fixture")]
    pub params: Option<String>,
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    /// Checks the 3-cocycle identity on every quadruple.
    Verify(ParamsInput),
    /// Whether ω_ā is an abelian cocycle (predicate).
    Abelian(ParamsInput),
}

#[derive(Subcommand, Debug)]
pub enum TqdCmd {
    /// Checks the quasi-Hopf axioms.
    Axioms {
        #[command(flatten)]
        input: ParamsInput,
        /// Use the untwisted double D(D8) instead of an abelian group.
        #[arg(long, conflicts_with_all = ["params", "fixture"])]
        d8: bool,
        /// Enumerate every basis tuple even for |G| >= 8.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 0x7d0)]
        seed: u64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// The group Γ^ω of group-likes of D^{ω_a}(Z_m).
    Grouplikes {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum MoritaCmd {
    /// Evaluates the sufficient condition (predicate).
    Check(ParamsInput),
    /// Builds the witness and the dual group G'.
    Construct(ParamsInput),
    /// Checks every equation a witness must satisfy (predicate).
    VerifyWitness {
        #[command(flatten)]
        input: ParamsInput,
        /// Witness JSON, inline or a file; defaults to the fixture's own witness.
        #[arg(long)]
        witness: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct GenuineArgs {
    #[arg(long, required_unless_present = "sweep")]
    pub m: Option<u64>,
    #[arg(long, required_unless_present = "sweep")]
    pub a: Option<u64>,
    /// Also run the explicit group-like computation (m <= 12).
    #[arg(long)]
    pub explicit: bool,
    /// Report every (m, a) with 2 <= m <= SWEEP.
    #[arg(long, conflicts_with_all = ["m", "a"])]
    pub sweep: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct ModulesInput {
    /// Comma-separated names (M1,M3,M5), or a JSON array of module specs inline or in a file.
    #[arg(long)]
    pub modules: String,
}

#[derive(Subcommand, Debug)]
pub enum NicholsCmd {
    /// Generalized Cartan matrix from adjoint powers.
    Cartan {
        #[command(flatten)]
        input: ModulesInput,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Braiding matrix and Dynkin diagram of the diagonal restriction.
    Diagram(ModulesInput),
    /// Skeleton graph from the Cartan matrix (predicate: a skeleton exists).
    Skeleton {
        #[command(flatten)]
        input: ModulesInput,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Whether every pair of summands has (id - c²)(M_i ⊗ M_j) ≠ 0 (predicate).
    Indecomposable(ModulesInput),
    /// Full infinite-dimensionality analysis of a collection of summands.
    Analyze(ModulesInput),
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    List,
    Show { name: String },
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    value: Value,
    verdict: Option<bool>,
}

fn reply<T: Serialize>(v: &T) -> Result<Reply, String> {
    Ok(Reply { value: serde_json::to_value(v).map_err(|e| e.to_string())?, verdict: None })
}

fn predicate<T: Serialize>(v: &T, verdict: bool) -> Result<Reply, String> {
    Ok(Reply { value: serde_json::to_value(v).map_err(|e| e.to_string())?, verdict: Some(verdict) })
}

fn read_json_arg(arg: &str) -> Result<String, String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| format!("cannot read {arg}: {e}"))
    }
}

fn load_fixture(name: &str) -> Result<Fixture, String> {
    fixtures::fixture(name).map_err(|e| e.to_string())
}

fn load_params(input: &ParamsInput) -> Result<CocycleParams, String> {
    match (&input.params, &input.fixture) {
        (Some(p), _) => serde_json::from_str(&read_json_arg(p)?).map_err(|e| format!("bad parameters: {e}")),
        (None, Some(f)) => load_fixture(f)?.params().map_err(|e| e.to_string()),
        (None, None) => Err("give --params or --fixture".into()),
    }
}

fn load_modules(input: &ModulesInput) -> Result<Vec<YDModule>, String> {
    let t = input.modules.trim();
    if t.starts_with('[') || Path::new(t).is_file() {
        let specs: Vec<ModuleSpec> = serde_json::from_str(&read_json_arg(t)?).map_err(|e| format!("bad module specs: {e}"))?;
        return specs
            .iter()
            .enumerate()
            .map(|(k, s)| Ok(s.build().map_err(|e| e.to_string())?.named(&format!("M{}", k + 1))))
            .collect();
    }
    d8::parse_list(t).map_err(|e| e.to_string())
}

fn dispatch(command: &Command) -> Result<Reply, String> {
    match command {
        Command::Cocycle(CocycleCmd::Verify(input)) => {
            let params = load_params(input)?;
            let check = verify_3cocycle(&Cochain3::omega(&params));
            let valid = check.is_valid();
            predicate(&json!({ "params": params, "check": check, "valid": valid }), valid)
        }
        Command::Cocycle(CocycleCmd::Abelian(input)) => {
            let params = load_params(input)?;
            let abelian = is_abelian(&params);
            predicate(&json!({ "params": params, "abelian": abelian }), abelian)
        }
        Command::Tqd(TqdCmd::Axioms { input, d8, full, seed, samples }) => {
            let alg = if *d8 {
                TqdAlgebra::drinfeld_double(Arc::new(FiniteGroup::dihedral8()))
            } else {
                TqdAlgebra::from_params(&load_params(input)?)
            };
            let order = alg.group().order();
            let cov = if *full || order < 8 { Coverage::Full } else { Coverage::Sampled { seed: *seed, samples: *samples } };
            let report = verify_quasi_hopf_with(&alg, cov);
            let pass = report.all_pass();
            predicate(&report, pass)
        }
        Command::Tqd(TqdCmd::Grouplikes { m, a }) => {
            let params = CocycleParams::cyclic(*m, *a).map_err(|e| e.to_string())?;
            let g = grouplike_group(&TqdAlgebra::from_params(&params)).map_err(|e| e.to_string())?;
            let factors = invariant_factors_of(&g.group).map_err(|e| e.to_string())?;
            reply(&json!({
                "m": m,
                "a": a,
                "order": g.group.order(),
                "invariant_factors": factors,
                "s": g.group.name(g.s),
                "t": g.group.name(g.t),
                "relations": g.relations,
            }))
        }
        Command::Morita(MoritaCmd::Check(input)) => {
            let report = morita_report(&load_params(input)?).map_err(|e| e.to_string())?;
            let holds = report.theorem12;
            predicate(&report, holds)
        }
        Command::Morita(MoritaCmd::Construct(input)) => {
            let report = morita_report(&load_params(input)?).map_err(|e| e.to_string())?;
            let built = report.dual_group.is_some();
            predicate(&report, built)
        }
        Command::Morita(MoritaCmd::VerifyWitness { input, witness }) => {
            let params = load_params(input)?;
            let w: MoritaWitness = match (witness, &input.fixture) {
                (Some(w), _) => serde_json::from_str(&read_json_arg(w)?).map_err(|e| format!("bad witness: {e}"))?,
                (None, Some(f)) => load_fixture(f)?.witness().map_err(|e| e.to_string())?,
                (None, None) => return Err("give --witness or a witness fixture".into()),
            };
            let report = verify_witness(params.group(), &Cochain3::omega(&params), &w).map_err(|e| e.to_string())?;
            let dual = w.dual_group().ok().map(|g| describe_group(&g));
            let holds = report.all_hold();
            predicate(&json!({ "report": report, "dual_group": dual }), holds)
        }
        Command::Genuine(args) => match args.sweep {
            Some(top) => {
                let reports = (2..=top)
                    .flat_map(|m| (1..m).map(move |a| (m, a)))
                    .map(|(m, a)| genuineness_report(m, a, args.explicit && m <= 12).map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                let consistent = reports.iter().all(|r| r.consistent());
                predicate(&json!({ "reports": reports, "consistent": consistent }), consistent)
            }
            None => {
                let (m, a) = (args.m.unwrap(), args.a.unwrap());
                let r = genuineness_report(m, a, args.explicit).map_err(|e| e.to_string())?;
                let g = r.genuine();
                predicate(&json!({ "report": r, "genuine": g, "consistent": r.consistent() }), g)
            }
        },
        Command::Nichols(cmd) => nichols(cmd),
        Command::Fixtures(FixturesCmd::List) => reply(
            &fixtures::catalog()
                .iter()
                .map(|f| json!({ "name": f.name, "version": f.version, "description": f.description }))
                .collect::<Vec<_>>(),
        ),
        Command::Fixtures(FixturesCmd::Show { name }) => reply(&load_fixture(name)?),
    }
}

fn nichols(cmd: &NicholsCmd) -> Result<Reply, String> {
    let space_of = |ms: &[YDModule]| BraidedSpace::from_modules(ms).map_err(|e| e.to_string());
    let names = |ms: &[YDModule]| ms.iter().map(|m| m.name.clone()).collect::<Vec<_>>();
    match cmd {
        NicholsCmd::Cartan { input, cap } => {
            let ms = load_modules(input)?;
            let a = cartan_matrix(&space_of(&ms)?, *cap).map_err(|e| e.to_string())?;
            reply(&json!({ "modules": names(&ms), "cap": cap, "cartan": a }))
        }
        NicholsCmd::Diagram(input) => {
            let ms = load_modules(input)?;
            let d = diagonalize_braiding(&ms).map_err(|e| e.to_string())?;
            reply(&json!({ "modules": names(&ms), "diagonal": d }))
        }
        NicholsCmd::Skeleton { input, cap } => {
            let ms = load_modules(input)?;
            let a = cartan_matrix(&space_of(&ms)?, *cap).map_err(|e| e.to_string())?;
            // A Cartan matrix without a skeleton is an answer, not an input error.
            match skeleton(&ms, &a) {
                Ok(sk) => predicate(&json!({ "modules": names(&ms), "cartan": a, "skeleton": sk }), true),
                Err(e) => predicate(&json!({ "modules": names(&ms), "cartan": a, "skeleton": null, "error": e.to_string() }), false),
            }
        }
        NicholsCmd::Indecomposable(input) => {
            let ms = load_modules(input)?;
            let r = is_braid_indecomposable(&space_of(&ms)?);
            let v = r.indecomposable;
            predicate(&json!({ "modules": names(&ms), "result": r }), v)
        }
        NicholsCmd::Analyze(input) => {
            let ms = load_modules(input)?;
            let r = analyze_triple(&ms).map_err(|e| e.to_string())?;
            let v = r.infinite_dimensional;
            predicate(&r, v)
        }
    }
}

/// Renders `value` as `path = value` lines.
fn render_text(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<String>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, out);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) && !is_matrix(items) => {
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            other => out.push(format!("{prefix} = {other}")),
        }
    }
    fn is_matrix(items: &[Value]) -> bool {
        items.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(|x| !x.is_object() && !x.is_array())))
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out.join("\n")
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&r.value).expect("JSON values serialize"),
                Format::Text => render_text(&r.value),
            };
            let code = match r.verdict {
                Some(false) => 1,
                _ => 0,
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(msg) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}") },
    }
}

/// Parses `args` (including the program name) and runs; clap errors give exit code 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}
