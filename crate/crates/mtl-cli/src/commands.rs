use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use mtl_core::{Formula, Prop, Time};
use mtl_harness::{
    fuzz_equisat, separation_vectors, size_report, HarnessError, Method, Reduced, SeparationCase, VectorParams,
};
use mtl_semantics::{bounded_sat, eval, with_workers, SemanticsError};
use mtl_syntax::{is_valid_prop, parse_formula, parse_time, parse_timed_word, print_formula, SyntaxError};

use crate::cli::{Command, SigmaArg, Source};

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const USAGE: u8 = 2;
pub const INTERNAL: u8 = 3;

/// Result of a subcommand: text and JSON renderings plus the exit code.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: USAGE, message: message.into() }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        let code = match &e {
            HarnessError::Projection(_) | HarnessError::Core(_) => INTERNAL,
            _ => USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<SemanticsError> for CliError {
    fn from(e: SemanticsError) -> Self {
        Self::usage(e.to_string())
    }
}

pub fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Parse { input, word } => parse(&input, word),
        Command::Eval { formula, word, pos } => eval_cmd(&formula, &word, pos),
        Command::Reduce { formula, method, sigma, out } => reduce(&formula, &method, &sigma, out.as_deref()),
        Command::Fuzz { formula, method, sigma, trials, seed } => fuzz(&formula, &method, &sigma, trials, seed),
        Command::Sat { formula, sigma, max_len, grid, horizon } => sat(&formula, &sigma, max_len, &grid, &horizon),
        Command::Size { formula, sigma } => size(&formula, &sigma),
        Command::Vectors { case, n, delta, kappa, epsilon, index, out } => {
            let params = VectorParams {
                n,
                delta: time_flag("delta", &delta)?,
                kappa: time_flag("kappa", &kappa)?,
                epsilon: time_flag("epsilon", &epsilon)?,
                index,
            };
            vectors(&case, &params, out.as_deref())
        }
    }
}

fn read_path(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::usage(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn read_source(source: &Source) -> Result<(String, String), CliError> {
    match (&source.expr, &source.path) {
        (Some(text), _) => Ok(("<expr>".to_string(), text.clone())),
        (None, Some(path)) => Ok((path.display().to_string(), read_path(path)?)),
        (None, None) => Err(CliError::usage("no input given")),
    }
}

fn syntax_error(origin: &str, source: &str, e: &SyntaxError) -> CliError {
    CliError::usage(format!("{origin}: {}", e.render(source)))
}

fn load_formula(source: &Source) -> Result<Formula, CliError> {
    let (origin, text) = read_source(source)?;
    parse_formula(&text).map_err(|e| syntax_error(&origin, &text, &e))
}

fn sigma_of(phi: &Formula, arg: &SigmaArg) -> Result<BTreeSet<Prop>, CliError> {
    let Some(names) = &arg.sigma else {
        return Ok(phi.propositions());
    };
    let mut sigma = BTreeSet::new();
    for name in names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()) {
        if !is_valid_prop(name) {
            return Err(CliError::usage(format!("`{name}` is not a valid proposition name")));
        }
        sigma.insert(name.to_string());
    }
    Ok(sigma)
}

fn method_flag(text: &str) -> Result<Method, CliError> {
    text.parse::<Method>().map_err(CliError::from)
}

fn time_flag(name: &str, text: &str) -> Result<Time, CliError> {
    parse_time(text).map_err(|e| CliError::usage(format!("--{name}: {}", e.render(text))))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn parse(input: &Source, word: bool) -> Result<Report, CliError> {
    let (origin, text) = read_source(input)?;
    if word {
        let w = parse_timed_word(&text).map_err(|e| syntax_error(&origin, &text, &e))?;
        let mode = if w.is_strict() { "strict" } else { "weak" };
        return Ok(Report {
            text: format!("{w}\nlength: {}\nmonotonicity: {mode}\n", w.len()),
            json: json!({ "word": w.to_string(), "length": w.len(), "monotonicity": mode }),
            code: OK,
        });
    }
    let phi = parse_formula(&text).map_err(|e| syntax_error(&origin, &text, &e))?;
    let props: Vec<Prop> = phi.propositions().into_iter().collect();
    let mut out = String::new();
    let _ = writeln!(out, "{}", print_formula(&phi));
    let _ = writeln!(out, "fragment: {}", phi.fragment().tag());
    let _ = writeln!(out, "mitl: {}", phi.is_mitl());
    let _ = writeln!(out, "future-only: {}", phi.is_future_only());
    let _ = writeln!(out, "propositions: {}", props.join(","));
    let _ = writeln!(out, "modal operators: {}", phi.modal_count());
    Ok(Report {
        text: out,
        json: json!({
            "formula": print_formula(&phi),
            "fragment": phi.fragment().tag(),
            "mitl": phi.is_mitl(),
            "future_only": phi.is_future_only(),
            "propositions": props,
            "modal_count": phi.modal_count(),
            "node_count": phi.node_count(),
        }),
        code: OK,
    })
}

fn eval_cmd(formula: &Source, word: &Path, pos: usize) -> Result<Report, CliError> {
    let phi = load_formula(formula)?;
    let text = read_path(word)?;
    let w = parse_timed_word(&text).map_err(|e| syntax_error(&word.display().to_string(), &text, &e))?;
    let value = eval(&w, pos, &phi)?;
    Ok(Report {
        text: format!("{value}\n"),
        json: json!({ "value": value, "position": pos }),
        code: if value { OK } else { NEGATIVE },
    })
}

fn reduce(formula: &Source, method: &str, sigma: &SigmaArg, out: Option<&Path>) -> Result<Report, CliError> {
    let phi = load_formula(formula)?;
    let sigma = sigma_of(&phi, sigma)?;
    let method = method_flag(method)?;
    let reduced = Reduced::new(&phi, &sigma, method)?;
    let psi = reduced.formula();
    let printed = print_formula(psi);
    if !psi.is_future_only() {
        return Err(CliError { code: INTERNAL, message: "reduced formula is not future-only".to_string() });
    }
    let manifest = reduced.manifest();
    let fresh: Vec<Value> = reduced
        .fresh()
        .iter()
        .map(|p| json!({ "name": p.name, "role": p.role, "owner": p.owner }))
        .collect();
    let mut text = String::new();
    match out {
        Some(path) => {
            let mut manifest_path = path.as_os_str().to_owned();
            manifest_path.push(".manifest");
            let manifest_path = PathBuf::from(manifest_path);
            write_file(path, &format!("{printed}\n"))?;
            write_file(&manifest_path, &manifest)?;
            let _ = writeln!(text, "wrote {} and {}", path.display(), manifest_path.display());
            let _ = writeln!(text, "{} fresh propositions, {} modal operators", fresh.len(), psi.modal_count());
        }
        None => {
            let _ = writeln!(text, "{printed}");
            let _ = writeln!(text, "# manifest");
            text.push_str(&manifest);
        }
    }
    Ok(Report {
        text,
        json: json!({
            "method": method.name(),
            "sigma": sigma,
            "formula": printed,
            "fresh": fresh,
            "future_only": psi.is_future_only(),
            "mitl": psi.is_mitl(),
            "modal_count": psi.modal_count(),
        }),
        code: OK,
    })
}

fn fuzz(formula: &Source, method: &str, sigma: &SigmaArg, trials: usize, seed: u64) -> Result<Report, CliError> {
    let phi = load_formula(formula)?;
    let sigma = sigma_of(&phi, sigma)?;
    let method = method_flag(method)?;
    let report = with_workers(|| fuzz_equisat(&phi, &sigma, method, trials, seed))?;
    let json = serde_json::to_value(&report).map_err(|e| CliError { code: INTERNAL, message: e.to_string() })?;
    Ok(Report {
        text: report.to_string(),
        json,
        code: if report.failures() == 0 { OK } else { NEGATIVE },
    })
}

fn sat(formula: &Source, sigma: &SigmaArg, max_len: usize, grid: &str, horizon: &str) -> Result<Report, CliError> {
    let phi = load_formula(formula)?;
    let sigma = sigma_of(&phi, sigma)?;
    if sigma.is_empty() {
        return Err(CliError::usage("the alphabet is empty; pass --sigma"));
    }
    let grid = time_flag("grid", grid)?;
    let horizon = time_flag("horizon", horizon)?;
    let model = with_workers(|| bounded_sat(&phi, &sigma, max_len, &grid, &horizon))?;
    Ok(match model {
        Some(w) => Report { text: format!("SAT\n{w}\n"), json: json!({ "sat": true, "model": w.to_string() }), code: OK },
        None => Report {
            text: "UNSAT at scale\n".to_string(),
            json: json!({ "sat": false, "model": null }),
            code: NEGATIVE,
        },
    })
}

fn size(formula: &Source, sigma: &SigmaArg) -> Result<Report, CliError> {
    let phi = load_formula(formula)?;
    let sigma = sigma_of(&phi, sigma)?;
    let report = size_report(&phi, &sigma)?;
    let json = serde_json::to_value(&report).map_err(|e| CliError { code: INTERNAL, message: e.to_string() })?;
    Ok(Report { text: report.to_string(), json, code: OK })
}

fn vectors(case: &str, params: &VectorParams, out: Option<&Path>) -> Result<Report, CliError> {
    let case: SeparationCase = case.parse().map_err(CliError::from)?;
    let v = separation_vectors(case, params)?;
    let (got1, got2) = v.verdict()?;
    let (want1, want2) = case.expected();
    let reproduces = (got1, got2) == (want1, want2);
    let formula = print_formula(&v.formula);
    let mut text = String::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| CliError::usage(format!("cannot create {}: {e}", dir.display())))?;
        write_file(&dir.join("formula.mtl"), &format!("{formula}\n"))?;
        write_file(&dir.join("w1.word"), &format!("{}\n", v.w1))?;
        write_file(&dir.join("w2.word"), &format!("{}\n", v.w2))?;
        let _ = writeln!(text, "wrote formula.mtl, w1.word and w2.word to {}", dir.display());
    }
    let _ = writeln!(text, "case {}: {formula}", case.name());
    let _ = writeln!(text, "w1: {}", v.w1);
    let _ = writeln!(text, "w2: {}", v.w2);
    let _ = writeln!(text, "verdict: {got1}/{got2} (expected {want1}/{want2})");
    let _ = writeln!(text, "{}", if reproduces { "reproduced" } else { "not reproduced" });
    Ok(Report {
        text,
        json: json!({
            "case": case.name(),
            "formula": formula,
            "w1": v.w1.to_string(),
            "w2": v.w2.to_string(),
            "verdict": [got1, got2],
            "expected": [want1, want2],
            "reproduces": reproduces,
        }),
        code: if reproduces { OK } else { NEGATIVE },
    })
}
