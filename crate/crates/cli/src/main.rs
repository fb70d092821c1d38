use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use weylpoly::cache::load_or_build;
use weylpoly::polyring::MonomialOrder;
use weylpoly::reference::{dimension_formulas, table_errata};
use weylpoly::verify::{self, Suite, VerifyOptions};
use weylpoly::{
    cc_product, cs_product, derive_recursion, dim_irrep, inverse_character, orbit_size, ss_product,
    weight_multiplicities, weyl_orbit, AlgebraId, Error, Generator, Kind, MultiplicityReport, RootSystem, TableKind,
    VariableMode, Weight,
};

const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    /// Weyl orbit of a dominant weight.
    Orbit,
    /// Decompose a product of two orbit functions.
    Product,
    /// C-polynomial in the fundamental variables X_j.
    Cpoly,
    /// S-polynomial S_λ/S_ρ in the fundamental variables X_j.
    Spoly,
    /// Character as a sum of C-functions.
    Char,
    /// C-function as a sum of characters.
    Invchar,
    /// Recursion relation for X_j times an orbit function.
    Recursion,
    /// Run verification suites.
    Verify,
    /// Table of polynomials up to a coordinate-sum bound.
    Table,
    /// Dimensions, orbit sizes and multiplicity matrices.
    Dims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variables {
    Orbit,
    Character,
}

/// C- and S-polynomials, orbit products and characters of simple Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "weylpoly", version)]
struct Cli {
    #[arg(value_enum)]
    verb: Verb,
    /// Algebra, e.g. A2, C3, G2, E8.
    #[arg(long)]
    algebra: String,
    /// Weight in the basis of fundamental weights, e.g. 1,0,2. Repeatable.
    #[arg(long = "weight", allow_hyphen_values = true)]
    weights: Vec<String>,
    /// Index j of the fundamental variable X_j, 1-based.
    #[arg(long)]
    var: Option<usize>,
    /// C or S for `recursion`; C, S or char for `table`; CC, CS or SS for `product`.
    #[arg(long)]
    kind: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Polynomial cache file used by `table`.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Quadrature points for the orthogonality suite.
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    /// Absolute tolerance of numerical identities.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Coordinate-sum bound for tables and generated checks.
    #[arg(long = "max-weight")]
    max_weight: Option<u32>,
    #[arg(long, default_value = "all")]
    suite: String,
    /// Variables of `table` output: X_j = C_{ω_j} or Y_j = χ_{ω_j}.
    #[arg(long, value_enum, default_value_t = Variables::Orbit)]
    variables: Variables,
}

enum Failure {
    Domain(String),
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn weights(cli: &Cli, rs: &RootSystem) -> Result<Vec<Weight>, Failure> {
    cli.weights
        .iter()
        .map(|s| {
            let w: Weight = s.parse()?;
            rs.check_arity(&w)?;
            Ok(w)
        })
        .collect()
}

fn need_weights(cli: &Cli, rs: &RootSystem, n: usize) -> Result<Vec<Weight>, Failure> {
    let ws = weights(cli, rs)?;
    if ws.len() < n {
        return Err(Failure::Usage(
            format!("`{:?}` needs {n} --weight value(s)", cli.verb).to_lowercase(),
        ));
    }
    Ok(ws)
}

fn kind(cli: &Cli) -> Result<Kind, Failure> {
    cli.kind.as_deref().map_or(Ok(Kind::C), |k| {
        k.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
    })
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("JSON value serializes"))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let algebra: AlgebraId = cli.algebra.parse()?;
    let rs = RootSystem::new(algebra)?;
    match cli.verb {
        Verb::Orbit => orbit(cli, &rs),
        Verb::Product => product(cli, &rs),
        Verb::Cpoly | Verb::Spoly => polynomials(cli, &rs),
        Verb::Char => characters(cli, &rs),
        Verb::Invchar => inverse_characters(cli, &rs),
        Verb::Recursion => recursion(cli, &rs),
        Verb::Verify => verification(cli, &rs),
        Verb::Table => table(cli, &rs),
        Verb::Dims => dims(cli, &rs),
    }
}

fn orbit(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let mut out = String::new();
    let mut docs = Vec::new();
    for w in need_weights(cli, rs, 1)? {
        let o = weyl_orbit(rs, &w)?;
        match cli.format {
            Format::Json => docs.push(o.to_json()),
            Format::Text | Format::Latex => {
                out.push_str(&format!(
                    "W_{{{w}}}: {} points, stabilizer order {}\n",
                    o.len(),
                    o.stabilizer_order
                ));
                for (p, sign) in o.signed() {
                    out.push_str(&format!("{p}\t{}\n", if sign > 0 { "+" } else { "-" }));
                }
            }
        }
    }
    Ok(if cli.format == Format::Json {
        pretty(&Value::Array(docs))
    } else {
        out
    })
}

fn product(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let ws = need_weights(cli, rs, 2)?;
    let (a, b) = (&ws[0], &ws[1]);
    let which = cli.kind.as_deref().unwrap_or("CC").to_ascii_uppercase();
    let (comb, lhs) = match which.as_str() {
        "CC" | "C" => (cc_product(rs, a, b)?, format!("C_{{{a}}}C_{{{b}}}")),
        "CS" => {
            rs.check_strictly_dominant(b)?;
            (cs_product(rs, a, b)?, format!("C_{{{a}}}S_{{{b}}}"))
        }
        "SS" | "S" => {
            rs.check_strictly_dominant(a)?;
            rs.check_strictly_dominant(b)?;
            (ss_product(rs, a, b)?, format!("S_{{{a}}}S_{{{b}}}"))
        }
        other => return Err(Failure::Usage(format!("product kind `{other}` must be CC, CS or SS"))),
    };
    Ok(match cli.format {
        Format::Json => pretty(&json!({"lhs": lhs, "kind": comb.kind.to_string(), "rhs": comb.to_json(rs)})),
        _ => format!("{lhs} = {}\n", comb.render(rs)),
    })
}

fn polynomials(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let mut gen = Generator::new(rs.clone());
    let order = MonomialOrder::new(rs);
    let mut out = String::new();
    let mut docs = Vec::new();
    for w in need_weights(cli, rs, 1)? {
        let (label, p) = match cli.verb {
            Verb::Cpoly => (format!("C_{{{w}}}"), gen.c_polynomial(&w)?),
            _ => (format!("S_{{{w}}}/S"), gen.s_polynomial(&w)?),
        };
        match cli.format {
            Format::Text => out.push_str(&format!("{label} = {}\n", p.to_text(&order))),
            Format::Latex => out.push_str(&format!("{}\n", p.to_latex(&order))),
            Format::Json => docs.push(json!({"weight": w.0, "poly": p.to_json(&order)})),
        }
    }
    Ok(if cli.format == Format::Json {
        pretty(&Value::Array(docs))
    } else {
        out
    })
}

fn characters(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let mut out = String::new();
    let mut docs = Vec::new();
    for w in need_weights(cli, rs, 1)? {
        let table = weight_multiplicities(rs, &w)?;
        let dim = dim_irrep(rs, &w)?;
        let mut comb = weylpoly::OrbitCombination::new(Kind::C);
        for (mu, m) in &table.rows {
            comb.add(mu.clone(), *m as i64);
        }
        let rhs = comb.render(rs);
        match cli.format {
            Format::Text => out.push_str(&format!("chi_{{{w}}} = {rhs}\tdim {dim}\n")),
            Format::Latex => out.push_str(&format!("\\chi_{{{w}}} = {rhs}\n")),
            Format::Json => {
                let mut v = table.to_json(rs);
                v["dim"] = json!(dim as u64);
                docs.push(v);
            }
        }
    }
    Ok(if cli.format == Format::Json {
        pretty(&Value::Array(docs))
    } else {
        out
    })
}

fn render_characters(rs: &RootSystem, terms: &BTreeMap<Weight, i64>, latex: bool) -> String {
    let mut v: Vec<(&Weight, i64)> = terms.iter().map(|(w, &c)| (w, c)).collect();
    v.sort_by_cached_key(|(w, _)| std::cmp::Reverse(rs.order_key(w)));
    let chi = if latex { "\\chi" } else { "chi" };
    let mut out = String::new();
    for (i, (w, c)) in v.into_iter().enumerate() {
        if i > 0 {
            out.push_str(if c < 0 { " - " } else { " + " });
        } else if c < 0 {
            out.push('-');
        }
        let sym = if w.is_zero() {
            String::new()
        } else {
            format!("{chi}_{{{w}}}")
        };
        match (sym.is_empty(), c.unsigned_abs()) {
            (true, m) => out.push_str(&m.to_string()),
            (false, 1) => out.push_str(&sym),
            (false, m) => out.push_str(&format!("{m}{sym}")),
        }
    }
    out
}

fn inverse_characters(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let mut out = String::new();
    let mut docs = Vec::new();
    for w in need_weights(cli, rs, 1)? {
        let terms = inverse_character(rs, &w)?;
        match cli.format {
            Format::Text => out.push_str(&format!("C_{{{w}}} = {}\n", render_characters(rs, &terms, false))),
            Format::Latex => out.push_str(&format!("C_{{{w}}} = {}\n", render_characters(rs, &terms, true))),
            Format::Json => {
                let mut v: Vec<_> = terms.iter().collect();
                v.sort_by_cached_key(|(w, _)| std::cmp::Reverse(rs.order_key(w)));
                docs.push(json!({
                    "weight": w.0,
                    "characters": v.into_iter().map(|(w, c)| json!({"weight": w.0, "coeff": c})).collect::<Vec<_>>(),
                }));
            }
        }
    }
    Ok(if cli.format == Format::Json {
        pretty(&Value::Array(docs))
    } else {
        out
    })
}

fn recursion(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let kind = kind(cli)?;
    let vars: Vec<usize> = match cli.var {
        Some(0) => return Err(Failure::Domain("--var is 1-based".into())),
        Some(j) if j > rs.rank() => {
            return Err(Error::IndexOutOfRange {
                index: j,
                rank: rs.rank(),
            }
            .into());
        }
        Some(j) => vec![j - 1],
        None => (0..rs.rank()).collect(),
    };
    let ws = match (kind, weights(cli, rs)?) {
        (Kind::S, ws) if ws.is_empty() => vec![rs.rho()],
        (_, ws) if ws.is_empty() => return Err(Failure::Usage("`recursion` needs --weight".into())),
        (_, ws) => ws,
    };
    let mut out = String::new();
    let mut docs = Vec::new();
    for w in &ws {
        for &j in &vars {
            let r = derive_recursion(rs, j, w, kind)?;
            match cli.format {
                Format::Text => out.push_str(&format!("{}\n", r.to_text(rs))),
                Format::Latex => out.push_str(&format!("{}\n", r.to_latex(rs))),
                Format::Json => docs.push(r.to_json(rs)),
            }
        }
    }
    Ok(if cli.format == Format::Json {
        pretty(&Value::Array(docs))
    } else {
        out
    })
}

fn verification(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let suite: Suite = cli.suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let mut opts = VerifyOptions {
        seed: cli.seed,
        quadrature_samples: cli.samples,
        tolerance: cli.tolerance,
        ..VerifyOptions::default()
    };
    if let Some(m) = cli.max_weight {
        opts.max_weight = m;
    }
    if cli.samples == 0 || cli.tolerance <= 0.0 {
        return Err(Failure::Usage("--samples must be positive and --tolerance > 0".into()));
    }
    let report = verify::run(rs, suite, &opts)?;
    let out = match cli.format {
        Format::Json => pretty(&report.to_json()),
        _ => report.to_text(),
    };
    if report.pass() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn table(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let kind: TableKind = match cli.kind.as_deref() {
        None => TableKind::C,
        Some(k) => k.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?,
    };
    let mode = match cli.variables {
        Variables::Orbit => VariableMode::Orbit,
        Variables::Character => VariableMode::Character,
    };
    let max = cli.max_weight.unwrap_or(4);
    let mut gen = Generator::new(rs.clone());
    let table = match &cli.cache {
        Some(path) => {
            let (t, status) = load_or_build(path, &mut gen, kind, mode, max)?;
            if let Some(w) = status.warning() {
                eprintln!("warning: {w}");
            }
            t
        }
        None => gen.build_table(kind, mode, max)?,
    };
    let notes = if mode == VariableMode::Orbit {
        table_errata(&rs.algebra().to_string(), kind)?
            .into_iter()
            .filter(|(w, _)| table.entries.contains_key(w))
            .collect()
    } else {
        BTreeMap::new()
    };
    Ok(match cli.format {
        Format::Text => table.to_text_annotated(rs, &notes),
        Format::Latex => table.to_latex_annotated(rs, &notes),
        Format::Json => pretty(&table.to_json_annotated(rs, &notes)),
    })
}

fn dims(cli: &Cli, rs: &RootSystem) -> Result<String, Failure> {
    let ws = weights(cli, rs)?;
    if !ws.is_empty() {
        // Multiplicity matrix over everything dominated by the given weights.
        let mut below: Vec<Weight> = Vec::new();
        for w in &ws {
            for v in rs.dominant_weights_below(w) {
                if !below.contains(&v) {
                    below.push(v);
                }
            }
        }
        below.sort_by_cached_key(|w| rs.order_key(w));
        let report = MultiplicityReport::new(rs, &below)?;
        return Ok(match cli.format {
            Format::Json => pretty(&report.to_json()),
            Format::Latex => report.to_latex(),
            Format::Text => {
                let mut out = String::from("weights:");
                for w in &report.weights {
                    out.push_str(&format!(" {w}"));
                }
                out.push('\n');
                for (title, m) in [("multiplicities", &report.matrix), ("inverse", &report.inverse)] {
                    out.push_str(&format!("{title}:\n"));
                    for row in m.iter() {
                        let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
                        out.push_str(&format!("{}\n", cells.join("")));
                    }
                }
                let sizes: Vec<String> = report.orbit_sizes.iter().map(|s| s.to_string()).collect();
                let dims: Vec<String> = report.dims.iter().map(|d| d.to_string()).collect();
                out.push_str(&format!("orbit sizes: {}\n", sizes.join(" ")));
                out.push_str(&format!("dimensions: {}\n", dims.join(" ")));
                for j in 0..report.weights.len() {
                    out.push_str(&format!("{}: {}\n", report.weights[j], report.dimension_identity(j)));
                }
                out
            }
        });
    }
    let max = cli.max_weight.unwrap_or(3);
    let name = rs.algebra().to_string();
    let formula = dimension_formulas().into_iter().find(|f| f.algebra == name);
    let mut rows = Vec::new();
    for w in weylpoly::genpoly::table_weights(rs, TableKind::C, max) {
        let dim = dim_irrep(rs, &w)?;
        let size = orbit_size(rs, &w)?;
        let printed = formula.as_ref().map(|f| f.eval(&w));
        rows.push((w, dim, size, printed));
    }
    rows.sort_by_cached_key(|(w, ..)| rs.order_key(w));
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "algebra": name,
            "formula": formula.as_ref().map(|f| f.text),
            "formula_erratum": formula.as_ref().and_then(|f| f.erratum),
            "rows": rows.iter().map(|(w, d, s, p)| json!({
                "weight": w.0,
                "dim": *d as u64,
                "orbit_size": s,
                "formula": p.map(|v| v.map(|x| x as i64)),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = String::new();
            if let Some(f) = &formula {
                out.push_str(&format!("# printed formula {}\n", f.text));
                if let Some(e) = f.erratum {
                    out.push_str(&format!("# erratum: {e}\n"));
                }
            }
            for (w, d, s, p) in rows {
                out.push_str(&format!("{w}\tdim {d}\torbit {s}"));
                match p {
                    Some(Some(v)) if v == d as i128 => out.push_str("\tformula ok"),
                    Some(Some(v)) => out.push_str(&format!("\tformula gives {v}")),
                    Some(None) => out.push_str("\tformula gives a non-integer"),
                    None => {}
                }
                out.push('\n');
            }
            out
        }
    })
}
