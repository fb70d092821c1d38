//! Verification suites: published tables and recursions against the
//! generator, numerical orthogonality, and multiplicity cross-checks.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::genpoly::{table_weights, Generator, TableKind, VariableMode};
use crate::multiplicities::{dim_irrep, weight_multiplicities};
use crate::numeval::{
    character_by_division, orthogonality_integral, sample_fundamental_region, verify_substitution, EvalContext,
    OrbitFunction,
};
use crate::orbitalg::{cc_product, cs_product, cs_product_raw, derive_recursion, Kind, Relation};
use crate::orbits::orbit_size;
use crate::reference::{dimension_formulas, printed_tables, recursion_corpus};
use crate::rootsys::{AlgebraId, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    Recursions,
    Orthogonality,
    Multiplicities,
    All,
}

impl Suite {
    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Tables,
                Suite::Recursions,
                Suite::Orthogonality,
                Suite::Multiplicities,
            ],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Tables => "tables",
            Suite::Recursions => "recursions",
            Suite::Orthogonality => "orthogonality",
            Suite::Multiplicities => "multiplicities",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tables" => Ok(Suite::Tables),
            "recursions" => Ok(Suite::Recursions),
            "orthogonality" => Ok(Suite::Orthogonality),
            "multiplicities" => Ok(Suite::Multiplicities),
            "all" => Ok(Suite::All),
            other => Err(Error::ParsePoly {
                input: other.to_string(),
                reason: "suite must be tables, recursions, orthogonality, multiplicities or all".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Points per substitution or relation check.
    pub substitution_samples: usize,
    /// Points per orthogonality integral.
    pub quadrature_samples: usize,
    pub tolerance: f64,
    /// Relative tolerance of diagonal orthogonality integrals.
    pub quadrature_tolerance: f64,
    /// Coordinate-sum bound for generated tables and recursions.
    pub max_weight: u32,
    /// Dimension bound of the multiplicity sweep.
    pub max_dim: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            substitution_samples: 100,
            quadrature_samples: 1_000_000,
            tolerance: 1e-9,
            quadrature_tolerance: 0.02,
            max_weight: 3,
            max_dim: 1000,
        }
    }
}

// Brute-force Laurent division and full-group S sums are only attempted below
// these sizes.
const ORACLE_WEYL_LIMIT: u64 = 2000;
const S_EVAL_WEYL_LIMIT: u64 = 10_000;
const QUADRATURE_ORBIT_LIMIT: u64 = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub summary: String,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub algebra: AlgebraId,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Checks that were not run, with the reason.
    pub skipped: Vec<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.to_string(),
            "seed": self.seed,
            "pass": self.pass(),
            "checks": self.checks.iter().map(|c| json!({
                "suite": c.suite.to_string(),
                "name": c.name,
                "pass": c.pass,
                "summary": c.summary,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "skipped": self.skipped,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verification of {} (seed {})\n", self.algebra, self.seed);
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} [{}] {}: {}\n", c.suite, c.name, c.summary));
        }
        for s in &self.skipped {
            out.push_str(&format!("SKIP {s}\n"));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "{} {passed}/{} checks passed\n",
            if self.pass() { "PASS" } else { "FAIL" },
            self.checks.len()
        ));
        out
    }
}

pub fn run(rs: &RootSystem, suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        algebra: rs.algebra(),
        seed: opts.seed,
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    let mut gen = Generator::new(rs.clone());
    for s in suite.members() {
        match s {
            Suite::Tables => tables(&mut gen, opts, &mut report)?,
            Suite::Recursions => recursions(rs, opts, &mut report)?,
            Suite::Orthogonality => orthogonality(rs, opts, &mut report)?,
            Suite::Multiplicities => multiplicities(rs, opts, &mut report)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn substitution_ctx(opts: &VerifyOptions) -> EvalContext {
    EvalContext::new(opts.seed, opts.substitution_samples, opts.tolerance)
}

fn numeric_kind(kind: TableKind) -> Kind {
    match kind {
        TableKind::S => Kind::S,
        _ => Kind::C,
    }
}

fn tables(gen: &mut Generator, opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    let rs = gen.root_system().clone();
    let name = rs.algebra().to_string();
    let ctx = substitution_ctx(opts);
    let printed: Vec<_> = printed_tables()?.into_iter().filter(|t| t.algebra == name).collect();
    for table in &printed {
        let kind = numeric_kind(table.kind);
        let mut mismatches = Vec::new();
        let mut errata = Vec::new();
        let mut exact = 0usize;
        for e in &table.entries {
            let derived = gen.entry(table.kind, VariableMode::Orbit, &e.weight)?;
            match e.erratum {
                None if derived == e.poly => exact += 1,
                None => mismatches.push(json!({
                    "weight": e.weight.0,
                    "printed": e.poly.to_string(),
                    "derived": derived.to_string(),
                })),
                Some(reason) => {
                    let d = verify_substitution(&rs, kind, &e.weight, &derived, &ctx)?;
                    let p = verify_substitution(&rs, kind, &e.weight, &e.poly, &ctx)?;
                    errata.push(json!({
                        "weight": e.weight.0,
                        "reason": reason,
                        "printed": e.poly.to_string(),
                        "derived": derived.to_string(),
                        "derived_max_dev": d.max_dev,
                        "printed_max_dev": p.max_dev,
                        "pass": d.pass,
                    }));
                }
            }
        }
        let errata_pass = errata.iter().all(|e| e["pass"] == json!(true));
        report.checks.push(Check {
            suite: Suite::Tables,
            name: table.name.to_string(),
            pass: mismatches.is_empty() && errata_pass,
            summary: format!(
                "{exact}/{} exact, {} errata verified by substitution, {} mismatches",
                table.entries.len(),
                errata.len(),
                mismatches.len()
            ),
            detail: json!({"exact": exact, "errata": errata, "mismatches": mismatches}),
        });
    }
    if printed.is_empty() {
        for kind in [TableKind::C, TableKind::S] {
            if kind == TableKind::S && rs.weyl_order() > S_EVAL_WEYL_LIMIT {
                report.skipped.push(format!(
                    "S-table substitution: |W| = {} exceeds {S_EVAL_WEYL_LIMIT}",
                    rs.weyl_order()
                ));
                continue;
            }
            let table = gen.build_table(kind, VariableMode::Orbit, opts.max_weight)?;
            let reports = table
                .entries
                .iter()
                .map(|(w, p)| verify_substitution(&rs, numeric_kind(kind), w, p, &ctx))
                .collect::<Result<Vec<_>>>()?;
            let worst = reports.iter().map(|r| r.max_dev).fold(0.0, f64::max);
            report.checks.push(Check {
                suite: Suite::Tables,
                name: format!("generated {kind}-table, coordinate sum <= {}", opts.max_weight),
                pass: reports.iter().all(|r| r.pass),
                summary: format!("{} entries, max deviation {worst:.3e}", reports.len()),
                detail: serde_json::to_value(&reports).expect("serializable report"),
            });
        }
    }
    Ok(())
}

/// Largest `|X_j(x) F_λ(x) − Σ c_κ F_κ(x)|` over seeded points of the
/// fundamental region.
pub fn relation_deviation(rs: &RootSystem, rel: &Relation, seed: u64, samples: usize) -> Result<f64> {
    let x = OrbitFunction::new(rs, Kind::C, &Weight::fundamental(rs.rank(), rel.var))?;
    let lhs = OrbitFunction::new(rs, rel.kind, &rel.weight)?;
    let rhs = rel
        .rhs
        .terms
        .iter()
        .map(|(w, &c)| Ok((OrbitFunction::new(rs, rel.kind, w)?, c as f64)))
        .collect::<Result<Vec<_>>>()?;
    let points = sample_fundamental_region(rs, seed, samples);
    Ok(points
        .par_iter()
        .map(|p| {
            let sum = rhs
                .iter()
                .fold(num_complex::Complex::new(0.0, 0.0), |acc, (f, c)| acc + f.eval(p) * *c);
            (x.eval(p) * lhs.eval(p) - sum).norm()
        })
        .reduce(|| 0.0, f64::max))
}

/// Conservation and congruence violations of the products `C_λ C_μ` and,
/// for strictly dominant `λ`, `C_μ S_λ`. Empty when all hold.
pub fn product_invariant_violations(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let expected = rs.congruence_number(lambda).add(&rs.congruence_number(mu));
    let size = |w: &Weight| orbit_size(rs, w).map(|s| s as i64);
    let cc = cc_product(rs, lambda, mu)?;
    let count = cc.term_count(rs);
    if count != size(lambda)? * size(mu)? {
        out.push(format!(
            "C{lambda}·C{mu}: term count {count} != {}",
            size(lambda)? * size(mu)?
        ));
    }
    if cc.congruence_classes(rs) != HashSet::from([expected.clone()]) {
        out.push(format!("C{lambda}·C{mu}: terms span several congruence classes"));
    }
    if lambda.is_strictly_dominant() {
        let raw = cs_product_raw(rs, mu, lambda)?;
        if raw.len() as i64 != size(mu)? {
            out.push(format!(
                "C{mu}·S{lambda}: {} raw terms != |W_μ| = {}",
                raw.len(),
                size(mu)?
            ));
        }
        let cs = cs_product(rs, mu, lambda)?;
        if cs.terms.keys().any(|k| rs.congruence_number(k) != expected) {
            out.push(format!("C{mu}·S{lambda}: terms span several congruence classes"));
        }
    }
    Ok(out)
}

fn recursions(rs: &RootSystem, opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    let name = rs.algebra().to_string();
    let corpus: Vec<_> = recursion_corpus().into_iter().filter(|l| l.algebra == name).collect();
    if !corpus.is_empty() {
        let mut exact = 0usize;
        let mut mismatches = Vec::new();
        let mut errata = Vec::new();
        for l in &corpus {
            for text in l.instances() {
                let printed = Relation::parse(rs, &text)?;
                let derived = derive_recursion(rs, printed.var, &printed.weight, printed.kind)?;
                match l.erratum {
                    None if derived == printed => exact += 1,
                    None => mismatches.push(json!({"printed": text, "derived": derived.to_text(rs)})),
                    Some(reason) => {
                        let d = relation_deviation(rs, &derived, opts.seed, opts.substitution_samples)?;
                        let p = relation_deviation(rs, &printed, opts.seed, opts.substitution_samples)?;
                        errata.push(json!({
                            "template": l.template,
                            "reason": reason,
                            "printed": text,
                            "derived": derived.to_text(rs),
                            "derived_max_dev": d,
                            "printed_max_dev": p,
                            "pass": d < opts.tolerance,
                        }));
                    }
                }
            }
        }
        let errata_pass = errata.iter().all(|e| e["pass"] == json!(true));
        report.checks.push(Check {
            suite: Suite::Recursions,
            name: format!("printed {name} recursion relations"),
            pass: mismatches.is_empty() && errata_pass,
            summary: format!(
                "{exact} instances exact, {} erratum instances verified numerically, {} mismatches",
                errata.len(),
                mismatches.len()
            ),
            detail: json!({"exact": exact, "errata": errata, "mismatches": mismatches}),
        });
    }

    // Every relation X_j F_λ in range: invariants and numerical identity.
    let mut relations = Vec::new();
    let mut violations = Vec::new();
    for (kind, tk) in [(Kind::C, TableKind::C), (Kind::S, TableKind::S)] {
        if kind == Kind::S && rs.weyl_order() > S_EVAL_WEYL_LIMIT {
            report.skipped.push(format!(
                "S recursions: |W| = {} exceeds {S_EVAL_WEYL_LIMIT}",
                rs.weyl_order()
            ));
            continue;
        }
        for w in table_weights(rs, tk, opts.max_weight) {
            for j in 0..rs.rank() {
                let omega = Weight::fundamental(rs.rank(), j);
                violations.extend(product_invariant_violations(rs, &w, &omega)?);
                relations.push(derive_recursion(rs, j, &w, kind)?);
            }
        }
    }
    let mut worst = 0.0f64;
    for rel in &relations {
        worst = worst.max(relation_deviation(rs, rel, opts.seed, opts.substitution_samples)?);
    }
    report.checks.push(Check {
        suite: Suite::Recursions,
        name: format!("derived relations, coordinate sum <= {}", opts.max_weight),
        pass: violations.is_empty() && worst < opts.tolerance,
        summary: format!(
            "{} relations, {} invariant violations, max deviation {worst:.3e}",
            relations.len(),
            violations.len()
        ),
        detail: json!({"relations": relations.len(), "violations": violations, "max_dev": worst}),
    });
    Ok(())
}

fn orthogonality(rs: &RootSystem, opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    let ctx = EvalContext::new(opts.seed, opts.quadrature_samples, opts.quadrature_tolerance);
    let n = rs.rank();
    let mut c_weights = vec![Weight::zero(n)];
    c_weights.extend((0..n).map(|j| Weight::fundamental(n, j)));
    let rho = rs.rho();
    let s_weights = vec![rho.clone(), rho.add(&Weight::fundamental(n, 0))];
    let mut pairs = Vec::new();
    for (kind, ws) in [(Kind::C, &c_weights), (Kind::S, &s_weights)] {
        for (i, w) in ws.iter().enumerate() {
            pairs.push((kind, w.clone(), w.clone()));
            if let Some(next) = ws.get(i + 1) {
                pairs.push((kind, w.clone(), next.clone()));
            }
        }
    }
    for (kind, a, b) in pairs {
        let cost = match kind {
            Kind::C => orbit_size(rs, &a)? + orbit_size(rs, &b)?,
            Kind::S => 2 * rs.weyl_order(),
        };
        let label = |w: &Weight| format!("{kind}_{{{w}}}");
        if cost > 2 * QUADRATURE_ORBIT_LIMIT {
            report.skipped.push(format!(
                "<{}, {}>: orbits of {cost} points are too large for quadrature",
                label(&a),
                label(&b)
            ));
            continue;
        }
        let q = orthogonality_integral(rs, kind, &a, &b, &ctx)?;
        let summary = format!(
            "estimate {:.5}{:+.5}i, expected {:.5}, stderr {:.2e}",
            q.estimate[0], q.estimate[1], q.expected, q.stderr
        );
        report.checks.push(Check {
            suite: Suite::Orthogonality,
            name: format!("<{}, {}>", label(&a), label(&b)),
            pass: q.pass,
            summary,
            detail: serde_json::to_value(&q).expect("serializable report"),
        });
    }
    Ok(())
}

/// Dominant weights whose irreducible representation has dimension at most
/// `max_dim`.
pub fn weights_up_to_dim(rs: &RootSystem, max_dim: u128) -> Result<Vec<Weight>> {
    let n = rs.rank();
    let mut bounds = Vec::with_capacity(n);
    for j in 0..n {
        let mut k = 0;
        while dim_irrep(rs, &Weight::fundamental(n, j).scale(k + 1))? <= max_dim {
            k += 1;
        }
        bounds.push(k);
    }
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            let w = Weight(prefix);
            if dim_irrep(rs, &w)? <= max_dim {
                out.push(w);
            }
            continue;
        }
        for c in 0..=bounds[prefix.len()] {
            let mut p = prefix.clone();
            p.push(c);
            stack.push(p);
        }
    }
    out.sort_by_cached_key(|w| rs.order_key(w));
    Ok(out)
}

fn multiplicities(rs: &RootSystem, opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    let weights = weights_up_to_dim(rs, opts.max_dim)?;
    let use_oracle = rs.weyl_order() <= ORACLE_WEYL_LIMIT;
    if !use_oracle {
        report.skipped.push(format!(
            "Laurent-division oracle: |W| = {} exceeds {ORACLE_WEYL_LIMIT}",
            rs.weyl_order()
        ));
    }
    let mut oracle_failures = Vec::new();
    let mut dim_failures = Vec::new();
    for w in &weights {
        let table = weight_multiplicities(rs, w)?;
        let dim = dim_irrep(rs, w)?;
        let total: u128 = table
            .rows
            .iter()
            .map(|(mu, m)| Ok(*m as u128 * orbit_size(rs, mu)? as u128))
            .sum::<Result<u128>>()?;
        if total != dim {
            dim_failures.push(json!({"weight": w.0, "weyl": dim, "freudenthal": total}));
        }
        if use_oracle && character_by_division(rs, w)? != table.rows {
            oracle_failures.push(w.0.clone());
        }
    }
    let summary = if use_oracle {
        format!(
            "{} weights with dim <= {}: {} oracle disagreements, {} dimension disagreements",
            weights.len(),
            opts.max_dim,
            oracle_failures.len(),
            dim_failures.len()
        )
    } else {
        format!(
            "{} weights with dim <= {}: {} dimension disagreements",
            weights.len(),
            opts.max_dim,
            dim_failures.len()
        )
    };
    report.checks.push(Check {
        suite: Suite::Multiplicities,
        name: "Freudenthal multiplicities".into(),
        pass: oracle_failures.is_empty() && dim_failures.is_empty(),
        summary,
        detail: json!({
            "weights": weights.len(),
            "oracle": use_oracle,
            "oracle_failures": oracle_failures,
            "dimension_failures": dim_failures,
        }),
    });

    let name = rs.algebra().to_string();
    for f in dimension_formulas().into_iter().filter(|f| f.algebra == name) {
        let mut disagreements = Vec::new();
        let mut count = 0usize;
        for w in table_weights(rs, TableKind::C, 5 * rs.rank() as u32) {
            if w.0.iter().any(|&c| c > 5) {
                continue;
            }
            count += 1;
            let weyl = dim_irrep(rs, &w)? as i128;
            if f.eval(&w) != Some(weyl) {
                disagreements.push(w.0.clone());
            }
        }
        let pass = disagreements.is_empty() || f.erratum.is_some();
        let summary = match f.erratum {
            Some(reason) if !disagreements.is_empty() => format!(
                "{} of {count} weights disagree with the printed formula, a known misprint: {reason}",
                disagreements.len()
            ),
            _ => format!("{} of {count} weights disagree", disagreements.len()),
        };
        report.checks.push(Check {
            suite: Suite::Multiplicities,
            name: format!("dimension formula {}", f.text),
            pass,
            summary,
            detail: json!({
                "formula": f.text,
                "weights": count,
                "disagreements": disagreements.len(),
                "first": disagreements.iter().take(5).collect::<Vec<_>>(),
                "erratum": f.erratum,
            }),
        });
    }
    Ok(())
}
