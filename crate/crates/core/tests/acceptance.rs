//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with a
//! failure status if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylpoly::numeval::{character_by_division, orthogonality_integral, verify_substitution, EvalContext};
use weylpoly::reference::{dimension_formulas, printed_tables, recursion_corpus, PrintedTable};
use weylpoly::verify::{product_invariant_violations, weights_up_to_dim};
use weylpoly::{
    derive_recursion, dim_irrep, weight_multiplicities, Generator, Kind, MultiplicityReport, Relation, RootSystem,
    TableKind, VariableMode, Weight,
};

const SEED: u64 = 7;
const SUBSTITUTION_POINTS: usize = 100;
const SUBSTITUTION_TOL: f64 = 1e-9;
const QUADRATURE_POINTS: usize = 1_000_000;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn rs(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

fn tables_of(algebra: &str) -> Vec<PrintedTable> {
    printed_tables()
        .unwrap()
        .into_iter()
        .filter(|t| t.algebra == algebra)
        .collect()
}

fn numeric_kind(k: TableKind) -> Kind {
    if k == TableKind::S {
        Kind::S
    } else {
        Kind::C
    }
}

/// A1 tables exact, with the parity split of the congruence classes.
fn a1_tables(out: &mut Outcome) {
    let r = rs("A1");
    let mut gen = Generator::new(r.clone());
    let mut count = 0;
    for t in tables_of("A1") {
        for e in &t.entries {
            count += 1;
            let m = e.weight.0[0];
            let derived = gen.entry(t.kind, VariableMode::Orbit, &e.weight).unwrap();
            out.check(derived == e.poly, format!("{} {}: {derived} != {}", t.kind, m, e.poly));
            out.check(
                r.congruence_number(&e.weight).value() == Some((m % 2) as u32),
                format!("class of {m} is not {m} mod 2"),
            );
            // C_m has the parity of m; S_m/S_1 = χ_{m-1} that of m-1.
            let parity = if t.kind == TableKind::S { (m - 1) % 2 } else { m % 2 };
            let homogeneous = e.poly.terms().all(|(d, _)| d[0] % 2 == parity);
            out.check(homogeneous, format!("{} {m}: mixed parities", t.kind));
        }
    }
    out.check(count == 16, format!("expected 16 entries, found {count}"));
    out.note(format!("{count} entries"));
}

/// Rank 2 and 3 tables exact except known misprints, which must pass the
/// substitution identity.
fn rank2_rank3_tables(out: &mut Outcome) {
    let (mut exact, mut errata) = (0, 0);
    for name in ["A2", "C2", "G2", "A3", "B3", "C3"] {
        let r = rs(name);
        let mut gen = Generator::new(r.clone());
        let ctx = EvalContext::new(SEED, SUBSTITUTION_POINTS, SUBSTITUTION_TOL);
        for t in tables_of(name) {
            for e in &t.entries {
                let derived = gen.entry(t.kind, VariableMode::Orbit, &e.weight).unwrap();
                match e.erratum {
                    None => {
                        out.check(
                            derived == e.poly,
                            format!("{}: {} {} differs", t.name, t.kind, e.weight),
                        );
                        exact += 1;
                    }
                    Some(_) => {
                        let rep = verify_substitution(&r, numeric_kind(t.kind), &e.weight, &derived, &ctx).unwrap();
                        out.check(
                            rep.max_dev < SUBSTITUTION_TOL,
                            format!("{}: derived {} deviates by {:e}", t.name, e.weight, rep.max_dev),
                        );
                        errata += 1;
                    }
                }
            }
        }
    }
    out.note(format!(
        "{exact} exact, {errata} misprinted entries verified by substitution"
    ));
}

/// G2 multiplicity and inverse matrices for the five lowest weights.
fn g2_multiplicity_tables(out: &mut Outcome) {
    let r = rs("G2");
    let ws: Vec<Weight> = [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1]]
        .into_iter()
        .map(Weight::from)
        .collect();
    let rep = MultiplicityReport::new(&r, &ws).unwrap();
    let matrix = vec![
        vec![1, 1, 2, 3, 4],
        vec![0, 1, 1, 2, 4],
        vec![0, 0, 1, 1, 2],
        vec![0, 0, 0, 1, 2],
        vec![0, 0, 0, 0, 1],
    ];
    let inverse = vec![
        vec![1, -1, -1, 0, 2],
        vec![0, 1, -1, -1, 0],
        vec![0, 0, 1, -1, 0],
        vec![0, 0, 0, 1, -2],
        vec![0, 0, 0, 0, 1],
    ];
    out.check(rep.matrix == matrix, format!("multiplicities {:?}", rep.matrix));
    out.check(rep.inverse == inverse, format!("inverse {:?}", rep.inverse));
    out.check(rep.dims == vec![1, 7, 14, 27, 64], format!("dims {:?}", rep.dims));
    out.check(
        rep.orbit_sizes == vec![1, 6, 6, 6, 12],
        format!("orbit sizes {:?}", rep.orbit_sizes),
    );
    // χ_(1,1) = 4C_(0,0) + 4C_(0,1) + 2C_(1,0) + 2C_(0,2) + C_(1,1)
    let chi = weight_multiplicities(&r, &Weight::from([1, 1])).unwrap();
    let col: Vec<u64> = ws.iter().map(|w| chi.get(w)).collect();
    out.check(col == vec![4, 4, 2, 2, 1], format!("character expansion {col:?}"));
    // C_(1,1) = 2χ_(0,0) − 2χ_(0,2) + χ_(1,1)
    let inv = weylpoly::inverse_character(&r, &Weight::from([1, 1])).unwrap();
    let col: Vec<i64> = ws.iter().map(|w| inv.get(w).copied().unwrap_or(0)).collect();
    out.check(col == vec![2, 0, 0, -2, 1], format!("inverse expansion {col:?}"));
    let identity = rep.dimension_identity(4);
    out.check(identity == "4·1 + 4·6 + 2·6 + 2·6 + 1·12 = 64", identity.clone());
    out.check(rep.dimension_checks().iter().all(|&b| b), "dimension checks");
    out.note(identity);
}

/// Printed recursion relations reproduced verbatim.
fn recursion_relations(out: &mut Outcome) {
    let quoted = [
        ("A2", "X_1X_2 = C_{(1,1)} + 3"),
        ("G2", "X_2X_2 = C_{(0,2)} + 2X_1 + 2X_2 + 6"),
        ("C2", "X_2S_{(2,1)} = S_{(2,2)}"),
    ];
    for (name, line) in quoted {
        let r = rs(name);
        let p = Relation::parse(&r, line).unwrap();
        let d = derive_recursion(&r, p.var, &p.weight, p.kind).unwrap();
        out.check(d == p, format!("{name}: {line} vs {}", d.to_text(&r)));
    }
    let (mut lines, mut instances) = (0, 0);
    let mut algebras = std::collections::BTreeSet::new();
    for l in recursion_corpus().into_iter().filter(|l| l.erratum.is_none()) {
        let r = rs(l.algebra);
        lines += 1;
        algebras.insert(l.algebra);
        for text in l.instances() {
            let p = Relation::parse(&r, &text).unwrap();
            let d = derive_recursion(&r, p.var, &p.weight, p.kind).unwrap();
            out.check(d == p, format!("{}: {text} vs {}", l.algebra, d.to_text(&r)));
            instances += 1;
        }
    }
    out.check(lines >= 30, format!("only {lines} lines"));
    out.note(format!(
        "{lines} printed lines, {instances} instances over {}",
        algebras.into_iter().collect::<Vec<_>>().join(" ")
    ));
}

/// Term-count conservation and congruence homogeneity of random products.
fn product_invariants(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut violations = 0;
    for name in ["A1", "A2", "A3", "C2", "C3", "B3", "G2"] {
        let r = rs(name);
        let n = r.rank();
        for _ in 0..1000 {
            let mut draw = || Weight((0..n).map(|_| rng.random_range(0..=4)).collect());
            let (a, b) = (draw(), draw());
            let v = product_invariant_violations(&r, &a, &b).unwrap();
            violations += v.len();
            for msg in v.into_iter().take(3) {
                out.check(false, format!("{name}: {msg}"));
            }
        }
    }
    out.note(format!("7000 products, {violations} violations"));
}

/// Freudenthal against exact Laurent division for every weight with
/// dimension at most 1000.
fn multiplicity_oracle(out: &mut Outcome) {
    let mut total = 0;
    for name in ["A2", "C2", "G2", "A3"] {
        let r = rs(name);
        for w in weights_up_to_dim(&r, 1000).unwrap() {
            total += 1;
            let f = weight_multiplicities(&r, &w).unwrap().rows;
            let oracle = character_by_division(&r, &w).unwrap();
            out.check(f == oracle, format!("{name} {w}"));
        }
    }
    out.note(format!("{total} representations"));
}

/// Printed closed-form dimension formulas against the Weyl product, all
/// coordinates at most 5.
fn dimension_formula_check(out: &mut Outcome) {
    for f in dimension_formulas() {
        let r = rs(f.algebra);
        let n = r.rank();
        let mut bad = Vec::new();
        let mut count = 0;
        let mut idx = vec![0i32; n];
        loop {
            let w = Weight(idx.clone());
            count += 1;
            let weyl = dim_irrep(&r, &w).unwrap() as i128;
            if f.eval(&w) != Some(weyl) {
                bad.push(w);
            }
            let mut k = 0;
            while k < n && idx[k] == 5 {
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            idx[k] += 1;
        }
        if bad.is_empty() {
            out.note(format!("{} ok on {count} weights", f.algebra));
        } else {
            let first = &bad[0];
            let printed = f.eval(first).map_or("a non-integer".to_string(), |v| v.to_string());
            out.check(
                false,
                format!(
                    "{} {}: {} of {count} weights disagree, e.g. {first} gives {printed} instead of {}",
                    f.algebra,
                    f.text,
                    bad.len(),
                    dim_irrep(&r, first).unwrap()
                ),
            );
        }
    }
}

/// Monte Carlo orthogonality over the fundamental region.
fn orthogonality(out: &mut Outcome) {
    let a1 = rs("A1");
    let ctx = EvalContext::new(SEED, QUADRATURE_POINTS, 0.01);
    let q = orthogonality_integral(&a1, Kind::C, &Weight::from([1]), &Weight::from([1]), &ctx).unwrap();
    out.check(
        q.pass && (q.expected - 1.0).abs() < 1e-12,
        format!("A1 <C_1,C_1> = {:.5}", q.estimate[0]),
    );
    out.note(format!("A1 <C_1,C_1> = {:.5}", q.estimate[0]));
    let q = orthogonality_integral(&a1, Kind::C, &Weight::from([1]), &Weight::from([3]), &ctx).unwrap();
    out.check(
        q.pass,
        format!("A1 <C_1,C_3> = {:.2e} stderr {:.2e}", q.estimate[0], q.stderr),
    );

    let ctx = EvalContext::new(SEED, QUADRATURE_POINTS, 0.02);
    let mut worst: f64 = 0.0;
    for name in ["A2", "C2", "G2"] {
        let r = rs(name);
        let c: Vec<Weight> = [[0, 0], [1, 0], [0, 1], [1, 1]].into_iter().map(Weight::from).collect();
        let s: Vec<Weight> = [[1, 1], [2, 1], [1, 2]].into_iter().map(Weight::from).collect();
        for (kind, ws) in [(Kind::C, &c), (Kind::S, &s)] {
            for (i, a) in ws.iter().enumerate() {
                for b in &ws[i..] {
                    let q = orthogonality_integral(&r, kind, a, b, &ctx).unwrap();
                    if a == b {
                        worst = worst.max((q.estimate[0] - q.expected).abs() / q.expected);
                    }
                    out.check(
                        q.pass,
                        format!(
                            "{name} <{kind}{a},{kind}{b}> = {:.5}{:+.5}i expected {:.5} stderr {:.2e}",
                            q.estimate[0], q.estimate[1], q.expected, q.stderr
                        ),
                    );
                }
            }
        }
    }
    out.note(format!("worst diagonal relative error {:.3}%", 100.0 * worst));
}

/// S-polynomials from products with X_j against S_λ/S_ρ = χ_{λ−ρ}.
fn s_routes(out: &mut Outcome) {
    let mut count = 0;
    for name in ["A2", "C2"] {
        let r = rs(name);
        let mut gen = Generator::new(r.clone());
        for t in tables_of(name).into_iter().filter(|t| t.kind == TableKind::S) {
            for e in &t.entries {
                count += 1;
                let a = gen.s_polynomial(&e.weight).unwrap();
                let b = gen.s_polynomial_by_products(&e.weight).unwrap();
                out.check(a == b, format!("{name} {}", e.weight));
            }
        }
    }
    out.note(format!("{count} entries"));
}

/// Title, check and optional runtime limit.
type Criterion = (&'static str, fn(&mut Outcome), Option<Duration>);

fn main() {
    let criteria: [Criterion; 9] = [
        ("A1 C- and S-polynomials exact", a1_tables, Some(Duration::from_secs(1))),
        (
            "rank 2 and 3 polynomial tables",
            rank2_rank3_tables,
            Some(Duration::from_secs(60)),
        ),
        (
            "G2 multiplicity matrices and dimension identity",
            g2_multiplicity_tables,
            None,
        ),
        ("printed recursion relations", recursion_relations, None),
        ("product invariants on random weights", product_invariants, None),
        (
            "Freudenthal against Laurent division",
            multiplicity_oracle,
            Some(Duration::from_secs(300)),
        ),
        ("closed-form dimension formulas", dimension_formula_check, None),
        ("orthogonality integrals", orthogonality, Some(Duration::from_secs(300))),
        ("S-polynomials by products and by characters", s_routes, None),
    ];
    let mut failed = 0;
    for (i, (title, run, limit)) in criteria.into_iter().enumerate() {
        let mut out = Outcome::new();
        let start = Instant::now();
        run(&mut out);
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            out.check(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"));
        }
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {title} ({:.2} s)", i + 1, elapsed.as_secs_f64());
        for n in &out.notes {
            println!("    {n}");
        }
        if !out.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
