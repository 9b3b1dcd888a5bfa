//! Request parsing, dispatch and report rendering for the `grpcoh` binary.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grpcoh_core::algebra::HopfAxiom;
use grpcoh_core::cohomology::{
    ext_dims, lhs_strategy, ring_presentation, select_strategy, GradedRingPresentation, Strategy,
};
use grpcoh_core::group::{finite_type_predicate, sylow_subgroup};
use grpcoh_core::module::{
    are_isomorphic, derivations_h1, distinct_indecomposables, is_indecomposable, is_projective,
    klein_v_family, projective_census, syzygy,
};
use grpcoh_core::{build_group, Error, FiniteGroup, GroupAlgebra, ModuleRep, PrimeField};
use serde_json::{json, Map, Value};

mod checks;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "grpcoh",
    version,
    about = "Module theory and cohomology of finite group algebras over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structure of k[G]: locality, semisimplicity, radical, Hopf axioms.
    Info(Common),
    /// dim H^n(G, k) for n up to --maxdeg.
    Betti(Common),
    /// Generators, relations and Hilbert coefficients of H*(G, k).
    Ring(Common),
    /// Derivations modulo inner derivations with trivial coefficients.
    H1(Common),
    /// Indecomposable projective modules.
    Projectives(Common),
    /// The rank-2 family V_(a1,a2) and syzygy ranks over the Klein group.
    Klein(Common),
    /// Runs the consistency suites for one group and prime.
    Check(Common),
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_parser = parse_group)]
    group: String,
    #[arg(long = "char")]
    p: u32,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u16).range(0..=64))]
    maxdeg: u16,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_group(s: &str) -> Result<String, String> {
    build_group(s).map_err(|e| e.to_string())?;
    Ok(s.to_owned())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    Info,
    Betti,
    Ring,
    H1,
    Projectives,
    Klein,
    Check,
}

impl SubcommandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SubcommandKind::Info => "info",
            SubcommandKind::Betti => "betti",
            SubcommandKind::Ring => "ring",
            SubcommandKind::H1 => "h1",
            SubcommandKind::Projectives => "projectives",
            SubcommandKind::Klein => "klein",
            SubcommandKind::Check => "check",
        }
    }
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub subcommand: SubcommandKind,
    pub group: String,
    pub p: u32,
    pub maxdeg: usize,
    pub format: Format,
}

impl CommandRequest {
    /// Arguments that parse back to this request.
    pub fn to_args(&self) -> Vec<String> {
        vec![
            self.subcommand.as_str().into(),
            "--group".into(),
            self.group.clone(),
            "--char".into(),
            self.p.to_string(),
            "--maxdeg".into(),
            self.maxdeg.to_string(),
            "--format".into(),
            self.format.as_str().into(),
        ]
    }

    pub fn inputs_json(&self) -> Value {
        json!({
            "subcommand": self.subcommand.as_str(),
            "group": self.group,
            "char": self.p,
            "maxdeg": self.maxdeg,
            "format": self.format.as_str(),
        })
    }
}

/// A process exit with its code and message. Code 0 carries help or version
/// text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::TooLarge { .. } | Error::UnsupportedModulus(_) => EXIT_USAGE,
            Error::UnsupportedGroup(_)
            | Error::UnsupportedShape(_)
            | Error::NotCyclic
            | Error::NonCoprime { .. }
            | Error::TooLargeToDecide { .. }
            | Error::CutoffExceeded { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses and validates command-line tokens (without the program name).
pub fn parse_request<I, T>(args: I) -> Result<CommandRequest, Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("grpcoh")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| Failure {
        code: if e.use_stderr() { EXIT_USAGE } else { 0 },
        message: e.render().to_string(),
    })?;
    let (subcommand, c) = match cli.command {
        Command::Info(c) => (SubcommandKind::Info, c),
        Command::Betti(c) => (SubcommandKind::Betti, c),
        Command::Ring(c) => (SubcommandKind::Ring, c),
        Command::H1(c) => (SubcommandKind::H1, c),
        Command::Projectives(c) => (SubcommandKind::Projectives, c),
        Command::Klein(c) => (SubcommandKind::Klein, c),
        Command::Check(c) => (SubcommandKind::Check, c),
    };
    PrimeField::new(c.p).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("--char: {e}"),
    })?;
    Ok(CommandRequest {
        subcommand,
        group: c.group,
        p: c.p,
        maxdeg: usize::from(c.maxdeg),
        format: c.format,
    })
}

/// The result payload for a request.
pub fn run(req: &CommandRequest) -> Result<Value, Failure> {
    let group = Arc::new(build_group(&req.group)?);
    let alg = GroupAlgebra::new(group.clone(), req.p)?;
    match req.subcommand {
        SubcommandKind::Info => Ok(info(&alg)),
        SubcommandKind::Betti => betti(&group, req.p, req.maxdeg),
        SubcommandKind::Ring => ring(&group, req.p, req.maxdeg),
        SubcommandKind::H1 => Ok(h1(&alg)),
        SubcommandKind::Projectives => projectives(&alg),
        SubcommandKind::Klein => klein(&alg, req.maxdeg),
        SubcommandKind::Check => {
            let report = checks::run_checks(&alg, req.maxdeg);
            Ok(report)
        }
    }
}

/// Number of failed checks in a `check` payload.
pub fn failed_checks(result: &Value) -> u64 {
    result["counts"]["fail"].as_u64().unwrap_or(0)
}

fn strategy_name(s: &Strategy) -> &'static str {
    match s {
        Strategy::Coprime => "coprime",
        Strategy::Abelian => "abelian",
        Strategy::QuotientByCore { .. } => "quotient-by-core",
        Strategy::CyclicSylow { .. } => "cyclic-sylow",
    }
}

fn axiom_name(a: HopfAxiom) -> &'static str {
    match a {
        HopfAxiom::Multiplicative => "multiplicative",
        HopfAxiom::Coassociative => "coassociative",
        HopfAxiom::Counit => "counit",
        HopfAxiom::Antipode => "antipode",
        HopfAxiom::AntipodeCommutesWithDiagonal => "antipode_commutes_with_diagonal",
    }
}

fn info(alg: &GroupAlgebra) -> Value {
    let g = alg.group();
    let p = alg.p();
    let local = alg.is_local();
    let semisimple = alg.is_semisimple();
    let radical = alg.jacobson_radical().ok().map(|r| r.cols());
    let hopf = alg.hopf_axioms_check();
    let axioms: Map<String, Value> = hopf
        .results
        .iter()
        .map(|r| (axiom_name(r.axiom).to_owned(), Value::Bool(r.passed())))
        .collect();
    json!({
        "order": g.order(),
        "dim": alg.dim(),
        "abelian": g.is_abelian(),
        "local": local.local,
        "nilpotency_index": local.nilpotency_index,
        "semisimple": semisimple.semisimple,
        "radical_dim": radical,
        "sylow_order": sylow_subgroup(g, p).order(),
        "finite_type": finite_type_predicate(g, p),
        "hopf": axioms,
        "hopf_all_pass": hopf.all_pass(),
        "strategy": select_strategy(g, p).ok().as_ref().map(strategy_name),
    })
}

fn betti(group: &Arc<FiniteGroup>, p: u32, maxdeg: usize) -> Result<Value, Failure> {
    let dims = ext_dims(group, p, maxdeg)?;
    let method = if !group.order().is_multiple_of(p as usize) {
        "coprime"
    } else if group.is_p_group(p) {
        "resolution"
    } else {
        strategy_name(&select_strategy(group, p)?)
    };
    Ok(json!({ "dims": dims, "method": method }))
}

pub fn presentation_json(r: &GradedRingPresentation) -> Value {
    let generators: Vec<Value> = r
        .generators
        .iter()
        .map(|g| json!({ "name": g.name, "degree": g.degree, "kind": g.kind.as_str() }))
        .collect();
    json!({
        "generators": generators,
        "relations": r.relation_strings(),
        "hilbert": r.hilbert,
        "cutoff": r.cutoff,
        "stabilized": r.stabilized,
    })
}

fn ring(group: &Arc<FiniteGroup>, p: u32, maxdeg: usize) -> Result<Value, Failure> {
    let (r, method) = if group.is_p_group(p) && group.order() > 1 {
        (ring_presentation(group, p, maxdeg)?, "lifting")
    } else {
        (
            lhs_strategy(group, p, maxdeg)?,
            strategy_name(&select_strategy(group, p)?),
        )
    };
    let mut v = presentation_json(&r);
    v["method"] = Value::from(method);
    Ok(v)
}

fn h1(alg: &GroupAlgebra) -> Value {
    let d = derivations_h1(&ModuleRep::trivial(alg));
    json!({ "derivations": d.der_basis.cols(), "inner": d.inn_basis.cols(), "h1": d.h1_dim })
}

fn decided(r: Result<bool, Error>) -> Result<Option<bool>, Failure> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::TooLargeToDecide { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn projectives(alg: &GroupAlgebra) -> Result<Value, Failure> {
    let census = projective_census(alg)?;
    let sylow = sylow_subgroup(alg.group(), alg.p()).order();
    let mut entries = Vec::new();
    for e in &census {
        let report = is_projective(&e.module);
        let summands = e
            .summands
            .as_ref()
            .map(|s| s.iter().map(ModuleRep::dim).collect::<Vec<_>>());
        entries.push(json!({
            "rank": e.rank(),
            "source": e.source.as_str(),
            "indecomposable": e.indecomposable,
            "summand_ranks": summands,
            "projective": report.projective,
            "injective": report.injective,
            "invariant_dim": e.invariant_dim,
        }));
    }
    let distinct = match distinct_indecomposables(&census) {
        Ok(d) => Some(d),
        Err(Error::TooLargeToDecide { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let mut pairwise = Some(true);
    for (i, a) in census.iter().enumerate() {
        for b in &census[i + 1..] {
            match are_isomorphic(&a.module, &b.module) {
                Ok(iso) => pairwise = pairwise.map(|d| d && !iso),
                Err(Error::TooLargeToDecide { .. }) => pairwise = None,
                Err(e) => return Err(e.into()),
            }
        }
    }
    let ranks: Vec<usize> = census.iter().map(|e| e.rank()).collect();
    Ok(json!({
        "constructed": entries,
        "pairwise_non_isomorphic": pairwise,
        "ranks": ranks,
        "indecomposable_ranks": distinct.as_ref().map(|d| d.iter().map(ModuleRep::dim).collect::<Vec<_>>()),
        "sylow_order": sylow,
        "ranks_divisible_by_sylow": ranks.iter().all(|r| r % sylow == 0),
    }))
}

fn klein(alg: &GroupAlgebra, maxdeg: usize) -> Result<Value, Failure> {
    let params = [(1, 0), (0, 1), (1, 1)];
    let mut family = Vec::new();
    let mut modules = Vec::new();
    for &(a1, a2) in &params {
        let v = klein_v_family(alg, a1, a2)?;
        family
            .push(json!({ "alpha": [a1, a2], "indecomposable": decided(is_indecomposable(&v))? }));
        modules.push(v);
    }
    let mut distinct = true;
    for (i, a) in modules.iter().enumerate() {
        for b in &modules[i + 1..] {
            distinct &= !are_isomorphic(a, b)?;
        }
    }
    let mut ranks = Vec::with_capacity(maxdeg + 1);
    let mut omega = ModuleRep::trivial(alg);
    for n in 0..=maxdeg {
        if n > 0 {
            omega = syzygy(&omega, 1)?;
        }
        ranks.push(omega.dim());
    }
    Ok(json!({
        "v_family": family,
        "pairwise_non_isomorphic": distinct,
        "syzygy_ranks": ranks,
    }))
}

/// The full report object.
pub fn report(req: &CommandRequest, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "inputs": req.inputs_json(),
        "result": result,
        "timing_ms": Value::Null,
    })
}

/// Serializes a report: pretty JSON with sorted keys, or `key: value` lines.
pub fn emit(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            render_text(&report["inputs"], "", &mut out);
            render_text(&report["result"], "", &mut out);
            out
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(v: &Value, prefix: &str, out: &mut String) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_owned()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                render_text(x, &join(k), out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                render_text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        scalar => out.push_str(&format!("{prefix}: {}\n", scalar_text(scalar))),
    }
}
