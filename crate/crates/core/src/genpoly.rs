//! Recursive construction of C-polynomials, S-polynomials (character
//! quotients `S_λ / S_ρ`), character polynomials and the character-variable
//! rewriting.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multiplicities::weight_multiplicities;
use crate::orbitalg::{cc_product, cs_product};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::rootsys::{RootSystem, Weight};
use crate::IntPoly;

/// What a [`PolyTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    /// `C_λ` as a polynomial in `X_j = C_{ω_j}`.
    C,
    /// `S_λ / S_ρ` as a polynomial in `X_j`.
    S,
    /// The character `χ_λ` as a polynomial in `X_j`.
    Char,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::C => "C",
            TableKind::S => "S",
            TableKind::Char => "char",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c" => Ok(TableKind::C),
            "s" => Ok(TableKind::S),
            "char" | "chi" => Ok(TableKind::Char),
            other => Err(Error::ParsePoly {
                input: other.to_string(),
                reason: "table kind must be C, S or char".into(),
            }),
        }
    }
}

/// Variables the polynomials are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableMode {
    /// `X_j = C_{ω_j}`.
    Orbit,
    /// `Y_j = χ_{ω_j}`.
    Character,
}

impl VariableMode {
    pub fn symbol(self) -> &'static str {
        match self {
            VariableMode::Orbit => "X",
            VariableMode::Character => "Y",
        }
    }
}

impl fmt::Display for VariableMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VariableMode::Orbit => "orbit",
            VariableMode::Character => "character",
        })
    }
}

/// Memoizing generator of the polynomial families of one root system.
#[derive(Debug, Clone)]
pub struct Generator {
    rs: RootSystem,
    c_memo: HashMap<Weight, IntPoly>,
    s_memo: HashMap<Weight, IntPoly>,
    char_subs: Option<Vec<IntPoly>>,
}

impl Generator {
    pub fn new(rs: RootSystem) -> Self {
        Generator {
            rs,
            c_memo: HashMap::new(),
            s_memo: HashMap::new(),
            char_subs: None,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::new(&self.rs)
    }

    fn n(&self) -> usize {
        self.rs.rank()
    }

    /// `C_λ` from `X_j C_{λ−ω_j} = C_λ + (lower terms)` with `j` the first
    /// nonzero coordinate of `λ`; `C_0 = 1`.
    pub fn c_polynomial(&mut self, lambda: &Weight) -> Result<IntPoly> {
        self.rs.check_dominant(lambda)?;
        if let Some(p) = self.c_memo.get(lambda) {
            return Ok(p.clone());
        }
        let n = self.n();
        let p = match lambda.0.iter().position(|&c| c > 0) {
            None => IntPoly::one(n),
            Some(j) => {
                let omega = Weight::fundamental(n, j);
                let prev = lambda.sub(&omega);
                let rel = cc_product(&self.rs, &prev, &omega)?;
                let mut p = &IntPoly::var(n, j) * &self.c_polynomial(&prev)?;
                for (nu, &c) in &rel.terms {
                    if nu != lambda {
                        let lower = self.c_polynomial(nu)?;
                        p.add_scaled(&lower, &BigInt::from(-c));
                    }
                }
                p
            }
        };
        self.c_memo.insert(lambda.clone(), p.clone());
        Ok(p)
    }

    /// `χ_λ = Σ_μ m_μ^λ C_μ`.
    pub fn character_polynomial(&mut self, lambda: &Weight) -> Result<IntPoly> {
        let table = weight_multiplicities(&self.rs, lambda)?;
        let mut p = IntPoly::zero(self.n());
        for (mu, &m) in &table.rows {
            let c = self.c_polynomial(mu)?;
            p.add_scaled(&c, &BigInt::from(m));
        }
        Ok(p)
    }

    /// `S_λ / S_ρ = χ_{λ−ρ}`.
    pub fn s_polynomial(&mut self, lambda: &Weight) -> Result<IntPoly> {
        self.rs.check_strictly_dominant(lambda)?;
        self.character_polynomial(&lambda.sub(&self.rs.rho()))
    }

    /// `S_λ / S_ρ` from the products `X_j S_{λ−ω_j}` instead of characters.
    pub fn s_polynomial_by_products(&mut self, lambda: &Weight) -> Result<IntPoly> {
        self.rs.check_strictly_dominant(lambda)?;
        if let Some(p) = self.s_memo.get(lambda) {
            return Ok(p.clone());
        }
        let n = self.n();
        let p = match lambda.0.iter().position(|&c| c > 1) {
            None => IntPoly::one(n),
            Some(j) => {
                let omega = Weight::fundamental(n, j);
                let prev = lambda.sub(&omega);
                let rel = cs_product(&self.rs, &omega, &prev)?;
                let mut p = &IntPoly::var(n, j) * &self.s_polynomial_by_products(&prev)?;
                for (nu, &c) in &rel.terms {
                    if nu != lambda {
                        let lower = self.s_polynomial_by_products(nu)?;
                        p.add_scaled(&lower, &BigInt::from(-c));
                    }
                }
                p
            }
        };
        self.s_memo.insert(lambda.clone(), p.clone());
        Ok(p)
    }

    /// `X_k` written in the character variables `Y_j = χ_{ω_j}`.
    pub fn character_substitution(&mut self) -> Result<Vec<IntPoly>> {
        if let Some(s) = &self.char_subs {
            return Ok(s.clone());
        }
        let n = self.n();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&k| self.rs.order_key(&Weight::fundamental(n, k)));
        // Variables not yet rewritten stay as themselves; lower C's only
        // involve variables of smaller height.
        let mut subs: Vec<IntPoly> = (0..n).map(|k| IntPoly::var(n, k)).collect();
        for k in idx {
            let omega = Weight::fundamental(n, k);
            let table = weight_multiplicities(&self.rs, &omega)?;
            let mut xk = IntPoly::var(n, k);
            for (mu, &m) in &table.rows {
                if *mu != omega {
                    let lower = self.c_polynomial(mu)?.compose(&subs)?;
                    xk.add_scaled(&lower, &BigInt::from(-(m as i64)));
                }
            }
            subs[k] = xk;
        }
        self.char_subs = Some(subs.clone());
        Ok(subs)
    }

    /// `C_λ` rewritten in the character variables `Y_j = χ_{ω_j}`.
    pub fn char_variable_polynomial(&mut self, lambda: &Weight) -> Result<IntPoly> {
        let subs = self.character_substitution()?;
        self.c_polynomial(lambda)?.compose(&subs)
    }

    pub fn entry(&mut self, kind: TableKind, mode: VariableMode, lambda: &Weight) -> Result<IntPoly> {
        let p = match kind {
            TableKind::C => self.c_polynomial(lambda)?,
            TableKind::S => self.s_polynomial(lambda)?,
            TableKind::Char => self.character_polynomial(lambda)?,
        };
        match mode {
            VariableMode::Orbit => Ok(p),
            VariableMode::Character => p.compose(&self.character_substitution()?),
        }
    }

    /// Every dominant (strictly dominant for S) weight with coordinate sum at
    /// most `max_weight`.
    pub fn build_table(&mut self, kind: TableKind, mode: VariableMode, max_weight: u32) -> Result<PolyTable> {
        let weights = table_weights(&self.rs, kind, max_weight);
        let mut entries = BTreeMap::new();
        for w in weights {
            let p = self.entry(kind, mode, &w)?;
            entries.insert(w, p);
        }
        Ok(PolyTable {
            algebra: self.rs.algebra(),
            kind,
            mode,
            max_weight,
            entries,
        })
    }
}

pub fn table_weights(rs: &RootSystem, kind: TableKind, max_weight: u32) -> Vec<Weight> {
    let n = rs.rank();
    let lo = if kind == TableKind::S { 1 } else { 0 };
    let mut out: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=max_weight as i32).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .filter(|v| v.iter().sum::<i32>() <= max_weight as i32)
            .collect();
    }
    let mut ws: Vec<Weight> = out.into_iter().map(Weight).collect();
    ws.sort_by_cached_key(|w| (rs.congruence_number(w), rs.order_key(w)));
    ws
}

/// A table of polynomials keyed by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTable {
    pub algebra: crate::AlgebraId,
    pub kind: TableKind,
    pub mode: VariableMode,
    pub max_weight: u32,
    pub entries: BTreeMap<Weight, IntPoly>,
}

impl PolyTable {
    /// Entries grouped by congruence class, ascending in the monomial order.
    pub fn ordered(&self, rs: &RootSystem) -> Vec<(&Weight, &IntPoly)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by_cached_key(|(w, _)| (rs.congruence_number(w), rs.order_key(w)));
        v
    }

    pub fn label(&self, w: &Weight) -> String {
        match self.kind {
            TableKind::C => format!("C_{{{w}}}"),
            TableKind::S => format!("S_{{{w}}}"),
            TableKind::Char => format!("\\chi_{{{w}}}"),
        }
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        self.to_json_annotated(rs, &BTreeMap::new())
    }

    /// JSON form with an `erratum` note on the listed entries.
    pub fn to_json_annotated(&self, rs: &RootSystem, notes: &BTreeMap<Weight, String>) -> Value {
        let order = MonomialOrder::new(rs);
        json!({
            "algebra": self.algebra.to_string(),
            "kind": self.kind.to_string(),
            "variables": self.mode.to_string(),
            "max_weight": self.max_weight,
            "entries": self.ordered(rs).into_iter().map(|(w, p)| {
                let mut e = json!({
                    "weight": w.0,
                    "class": rs.congruence_number(w).to_string(),
                    "poly": p.to_json(&order),
                });
                if let Some(note) = notes.get(w) {
                    e["erratum"] = json!(note);
                }
                e
            }).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(rs: &RootSystem, v: &Value) -> Result<Self> {
        let bad = |r: &str| Error::Cache(r.to_string());
        let algebra: crate::AlgebraId = v["algebra"].as_str().ok_or_else(|| bad("missing algebra"))?.parse()?;
        if algebra != rs.algebra() {
            return Err(bad("algebra mismatch"));
        }
        let kind: TableKind = v["kind"].as_str().ok_or_else(|| bad("missing kind"))?.parse()?;
        let mode = match v["variables"].as_str() {
            Some("orbit") => VariableMode::Orbit,
            Some("character") => VariableMode::Character,
            _ => return Err(bad("bad variables")),
        };
        let max_weight = v["max_weight"].as_u64().ok_or_else(|| bad("missing max_weight"))? as u32;
        let mut entries = BTreeMap::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("missing entries"))? {
            let w: Vec<i32> = serde_json::from_value(e["weight"].clone()).map_err(|_| bad("bad weight"))?;
            let w = Weight(w);
            rs.check_arity(&w)?;
            let p: IntPoly = Polynomial::from_json(&e["poly"])?;
            entries.insert(w, p);
        }
        Ok(PolyTable {
            algebra,
            kind,
            mode,
            max_weight,
            entries,
        })
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        self.to_text_annotated(rs, &BTreeMap::new())
    }

    pub fn to_text_annotated(&self, rs: &RootSystem, notes: &BTreeMap<Weight, String>) -> String {
        let order = MonomialOrder::new(rs);
        let var = self.mode.symbol();
        let mut s = String::new();
        let mut last = None;
        for (w, p) in self.ordered(rs) {
            let class = rs.congruence_number(w);
            if last.as_ref() != Some(&class) {
                s.push_str(&format!("# class {class}\n"));
                last = Some(class);
            }
            s.push_str(&format!("{}\t{}", self.label(w), p.render(&order, var, false)));
            if let Some(note) = notes.get(w) {
                s.push_str(&format!("\t[erratum: {note}]"));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_latex(&self, rs: &RootSystem) -> String {
        self.to_latex_annotated(rs, &BTreeMap::new())
    }

    /// Annotated rows get a dagger and a trailing LaTeX comment with the note.
    pub fn to_latex_annotated(&self, rs: &RootSystem, notes: &BTreeMap<Weight, String>) -> String {
        let order = MonomialOrder::new(rs);
        let var = self.mode.symbol();
        let mut s = String::from("\\begin{tabular}{ll}\n");
        let mut last = None;
        for (w, p) in self.ordered(rs) {
            let class = rs.congruence_number(w);
            if last.as_ref() != Some(&class) {
                s.push_str(&format!("\\multicolumn{{2}}{{l}}{{$\\# = {class}$}} \\\\\n\\hline\n"));
                last = Some(class);
            }
            let poly = p.render(&order, var, true);
            match notes.get(w) {
                Some(note) => s.push_str(&format!(
                    "${}^\\dagger$ & ${poly}$ \\\\ % erratum: {note}\n",
                    self.label(w)
                )),
                None => s.push_str(&format!("${}$ & ${poly}$ \\\\\n", self.label(w))),
            }
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

/// Leading monomial of `p` in the dominance-compatible order, if `p ≠ 0`.
pub fn leading_exponent(rs: &RootSystem, p: &IntPoly) -> Option<(Vec<i32>, BigInt)> {
    p.leading(&MonomialOrder::new(rs)).map(|(e, c)| (e.clone(), c.clone()))
}
