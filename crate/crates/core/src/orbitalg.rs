//! Products of orbit functions decomposed into orbit functions.
//!
//! `C_λ C_μ`, `C_μ S_λ` and `S_λ S_μ` are exponential sums over pairs of orbit
//! points; grouping the pair sums by their dominant representative gives an
//! integer combination of orbit functions. These decompositions generate
//! every recursion relation used to build the polynomials.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::orbits::{weyl_orbit, Orbit};
use crate::polyring::MonomialOrder;
use crate::rootsys::{Congruence, RootSystem, Weight};

/// Family of orbit functions: symmetric (C) or antisymmetric (S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    C,
    S,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::C => "C",
            Kind::S => "S",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "C" | "c" => Ok(Kind::C),
            "S" | "s" => Ok(Kind::S),
            other => Err(Error::ParsePoly {
                input: other.to_string(),
                reason: "kind must be C or S".into(),
            }),
        }
    }
}

/// Integer combination `Σ coeff · C_κ` (or `S_κ`) over dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCombination {
    pub kind: Kind,
    pub terms: BTreeMap<Weight, i64>,
}

impl OrbitCombination {
    pub fn new(kind: Kind) -> Self {
        OrbitCombination {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted descending in the dominance-compatible order.
    pub fn sorted(&self, rs: &RootSystem) -> Vec<(&Weight, i64)> {
        let order = MonomialOrder::new(rs);
        let mut v: Vec<_> = self.terms.iter().map(|(w, &c)| (w, c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0 .0, &a.0 .0));
        v
    }

    /// `Σ coeff · |W_κ|`.
    pub fn term_count(&self, rs: &RootSystem) -> i64 {
        self.terms
            .iter()
            .map(|(w, c)| c * (rs.weyl_order() / rs.stabilizer_order(w)) as i64)
            .sum()
    }

    pub fn congruence_classes(&self, rs: &RootSystem) -> HashSet<Congruence> {
        self.terms.keys().map(|w| rs.congruence_number(w)).collect()
    }

    pub fn render(&self, rs: &RootSystem) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.sorted(rs).into_iter().enumerate() {
            if i > 0 {
                out.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                out.push('-');
            }
            let sym = orbit_symbol(self.kind, w);
            let mag = c.unsigned_abs();
            match (sym.is_empty(), mag) {
                (true, _) => out.push_str(&mag.to_string()),
                (false, 1) => out.push_str(&sym),
                (false, _) => out.push_str(&format!("{mag}{sym}")),
            }
        }
        out
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        Value::Array(
            self.sorted(rs)
                .into_iter()
                .map(|(w, c)| json!({"weight": w.0, "coeff": c}))
                .collect(),
        )
    }
}

/// Symbol of a single orbit function in table notation: `C_{ω_k}` is `X_k`,
/// `C_0` is the empty string (a bare constant), `S_ρ` is `S`.
pub fn orbit_symbol(kind: Kind, w: &Weight) -> String {
    match kind {
        Kind::C if w.is_zero() => String::new(),
        Kind::C if w.0.iter().sum::<i32>() == 1 && w.is_dominant() => {
            let k = w.0.iter().position(|&c| c == 1).unwrap();
            format!("X_{}", k + 1)
        }
        Kind::S if w.0.iter().all(|&c| c == 1) => "S".into(),
        _ => format!("{kind}_{{{w}}}"),
    }
}

fn orbit_signs(orbit: &Orbit) -> HashMap<&Weight, i64> {
    orbit.signed().collect()
}

/// Groups the pair sums `a + b`, `a ∈ W_λ`, `b ∈ W_μ`, by dominant
/// representative, weighting each pair by `weight(a) · weight(b)`.
///
/// Every dominant `κ = a + b` is also `dom(λ + b')` for some `b' ∈ W_μ`, so
/// those are the only candidates; the coefficient of `κ` counts the pairs
/// landing on `κ` itself.
fn grouped_product(rs: &RootSystem, lambda: &Orbit, mu: &Orbit, signed: bool, kind: Kind) -> OrbitCombination {
    let lam_signs = orbit_signs(lambda);
    let mut candidates: HashSet<Weight> = HashSet::new();
    for b in mu.weights() {
        candidates.insert(rs.to_dominant(&lambda.seed.add(b)).weight);
    }
    let mut out = OrbitCombination::new(kind);
    for kappa in candidates {
        let mut c = 0i64;
        for (b, sb) in mu.signed() {
            if let Some(&sa) = lam_signs.get(&kappa.sub(b)) {
                c += if signed { sa * sb } else { 1 };
            }
        }
        out.add(kappa, c);
    }
    out
}

/// `C_λ · C_μ = Σ_κ n_κ C_κ` with `n_κ = #{(a, b) ∈ W_λ × W_μ : a + b = κ}`.
pub fn cc_product(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitCombination> {
    let ol = weyl_orbit(rs, lambda)?;
    let om = weyl_orbit(rs, mu)?;
    Ok(grouped_product(rs, &ol, &om, false, Kind::C))
}

/// Signed list of `λ + ν`, `ν ∈ W_μ`, each reduced to the dominant chamber,
/// before any cancellation.
pub fn cs_product_raw(
    rs: &RootSystem,
    mu: &Weight,
    lambda: &Weight,
) -> Result<Vec<(Weight, crate::rootsys::DominantForm)>> {
    rs.check_strictly_dominant(lambda)?;
    let om = weyl_orbit(rs, mu)?;
    Ok(om
        .weights()
        .map(|nu| {
            let kappa = lambda.add(nu);
            let d = rs.to_dominant(&kappa);
            (kappa, d)
        })
        .collect())
}

/// `C_μ · S_λ = Σ_{ν ∈ W_μ} S_{λ+ν}`, with wall terms dropped and the rest
/// folded to the dominant chamber with sign `(−1)^parity`.
pub fn cs_product(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> Result<OrbitCombination> {
    let mut out = OrbitCombination::new(Kind::S);
    for (_, d) in cs_product_raw(rs, mu, lambda)? {
        if !d.on_wall {
            out.add(d.weight, if d.parity == 0 { 1 } else { -1 });
        }
    }
    Ok(out)
}

/// `S_λ · S_μ` as a signed combination of C-functions.
pub fn ss_product(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<OrbitCombination> {
    rs.check_strictly_dominant(lambda)?;
    rs.check_strictly_dominant(mu)?;
    let ol = weyl_orbit(rs, lambda)?;
    let om = weyl_orbit(rs, mu)?;
    Ok(grouped_product(rs, &ol, &om, true, Kind::C))
}

/// A relation `X_j F_λ = Σ coeff · F_κ` with `F` of the given kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Zero-based index of the multiplying variable.
    pub var: usize,
    pub kind: Kind,
    pub weight: Weight,
    pub rhs: OrbitCombination,
}

impl Relation {
    /// Left-hand side in table notation, e.g. `X_2C_{(0,2)}`, `X_1X_2`, `X_1S`.
    pub fn lhs_text(&self) -> String {
        format!("X_{}{}", self.var + 1, orbit_symbol(self.kind, &self.weight))
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        format!("{} = {}", self.lhs_text(), self.rhs.render(rs))
    }

    pub fn to_latex(&self, rs: &RootSystem) -> String {
        self.to_text(rs)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        json!({
            "lhs": {"var": self.var + 1, "weight": self.weight.0, "kind": self.kind.to_string()},
            "rhs": self.rhs.to_json(rs),
        })
    }

    /// Parses a relation in table notation, for example
    /// `X_2C_{(0,2)} = C_{(0,3)} + C_{(1,1)} + 2X_1 + X_2`,
    /// `X_1X_2 = C_{(1,1)} + 3` or `X_2S = S_{(1,2)} - S`.
    pub fn parse(rs: &RootSystem, line: &str) -> Result<Relation> {
        let fail = |reason: &str| Error::ParsePoly {
            input: line.to_string(),
            reason: reason.to_string(),
        };
        let norm: String = line.replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = norm.split_once('=').ok_or_else(|| fail("missing `=`"))?;
        let n = rs.rank();
        let lhs = lhs
            .strip_prefix("X_")
            .ok_or_else(|| fail("left side must start with X_j"))?;
        let digits: String = lhs.chars().take_while(|c| c.is_ascii_digit()).collect();
        let var: usize = digits.parse().map_err(|_| fail("bad variable index"))?;
        if var == 0 || var > n {
            return Err(fail("variable index out of range"));
        }
        let rest = &lhs[digits.len()..];
        let (kind, weight) = if rest.is_empty() {
            (Kind::C, Weight::zero(n))
        } else {
            let (c, w, tail) = parse_symbol(rest, n).ok_or_else(|| fail("bad left factor"))?;
            if !tail.is_empty() {
                return Err(fail("trailing text on left side"));
            }
            (c, w)
        };
        let mut comb = OrbitCombination::new(kind);
        let mut s = rhs;
        while !s.is_empty() {
            let mut sign = 1i64;
            let mut had_sign = false;
            while let Some(t) = s
                .strip_prefix('+')
                .or_else(|| s.strip_prefix('-').inspect(|_| sign = -sign))
            {
                s = t;
                had_sign = true;
            }
            if !had_sign && s.len() != rhs.len() {
                return Err(fail("expected `+` or `-` between terms"));
            }
            let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
            s = &s[digits.len()..];
            let mag: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| fail("bad coefficient"))?
            };
            let (tk, w, tail) = match parse_symbol(s, n) {
                Some(t) => t,
                None if !digits.is_empty() => (kind, Weight::zero(n), s),
                None => return Err(fail("bad term")),
            };
            if tk != kind {
                return Err(fail("mixed C and S terms"));
            }
            comb.add(w, sign * mag);
            s = tail;
        }
        Ok(Relation {
            var: var - 1,
            kind,
            weight,
            rhs: comb,
        })
    }
}

/// Reads one orbit symbol (`C_{(..)}`, `S_{(..)}`, `S`, `X_k`) from the front
/// of `s`. Returns the kind, weight and the unread remainder.
fn parse_symbol(s: &str, n: usize) -> Option<(Kind, Weight, &str)> {
    if let Some(t) = s.strip_prefix("X_") {
        let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
        let k: usize = digits.parse().ok()?;
        if k == 0 || k > n {
            return None;
        }
        return Some((Kind::C, Weight::fundamental(n, k - 1), &t[digits.len()..]));
    }
    let kind = match s.chars().next()? {
        'C' => Kind::C,
        'S' => Kind::S,
        _ => return None,
    };
    let t = &s[1..];
    if let Some(u) = t.strip_prefix("_{(") {
        let close = u.find(")}")?;
        let w: Weight = u[..close].parse().ok()?;
        if w.rank() != n {
            return None;
        }
        return Some((kind, w, &u[close + 2..]));
    }
    (kind == Kind::S).then(|| (Kind::S, Weight::rho(n), t))
}

/// `X_j C_λ` (or `X_j S_λ`) decomposed, with the top term `λ + ω_j` first.
pub fn derive_recursion(rs: &RootSystem, j: usize, lambda: &Weight, kind: Kind) -> Result<Relation> {
    if j >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: j,
            rank: rs.rank(),
        });
    }
    let omega = Weight::fundamental(rs.rank(), j);
    let rhs = match kind {
        Kind::C => cc_product(rs, lambda, &omega)?,
        Kind::S => cs_product(rs, &omega, lambda)?,
    };
    Ok(Relation {
        var: j,
        kind,
        weight: lambda.clone(),
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn comb(kind: Kind, terms: &[(&[i32], i64)]) -> OrbitCombination {
        let mut c = OrbitCombination::new(kind);
        for (w, k) in terms {
            c.add(Weight(w.to_vec()), *k);
        }
        c
    }

    #[test]
    fn cc_examples() {
        let a1 = rs("A1");
        for m in 2..6 {
            assert_eq!(
                cc_product(&a1, &Weight::from([1]), &Weight::from([m])).unwrap(),
                comb(Kind::C, &[(&[m + 1], 1), (&[m - 1], 1)])
            );
        }
        // X² = C_2 + 2: both pairs (1,−1) and (−1,1) land on 0.
        assert_eq!(
            cc_product(&a1, &Weight::from([1]), &Weight::from([1])).unwrap(),
            comb(Kind::C, &[(&[2], 1), (&[0], 2)])
        );
        assert_eq!(
            cc_product(&rs("A2"), &Weight::from([1, 0]), &Weight::from([0, 1])).unwrap(),
            comb(Kind::C, &[(&[1, 1], 1), (&[0, 0], 3)])
        );
        assert_eq!(
            cc_product(&rs("G2"), &Weight::from([0, 1]), &Weight::from([0, 1])).unwrap(),
            comb(Kind::C, &[(&[0, 2], 1), (&[1, 0], 2), (&[0, 1], 2), (&[0, 0], 6)])
        );
        assert_eq!(
            cc_product(&rs("A3"), &Weight::from([1, 0, 0]), &Weight::from([0, 0, 1])).unwrap(),
            comb(Kind::C, &[(&[1, 0, 1], 1), (&[0, 0, 0], 4)])
        );
    }

    #[test]
    fn cs_examples() {
        assert_eq!(
            cs_product(&rs("A2"), &Weight::from([1, 0]), &Weight::from([1, 1])).unwrap(),
            comb(Kind::S, &[(&[2, 1], 1)])
        );
        let c2 = rs("C2");
        assert_eq!(
            cs_product(&c2, &Weight::from([0, 1]), &Weight::from([2, 1])).unwrap(),
            comb(Kind::S, &[(&[2, 2], 1)])
        );
        assert_eq!(
            cs_product(&c2, &Weight::from([0, 1]), &Weight::from([1, 1])).unwrap(),
            comb(Kind::S, &[(&[1, 2], 1), (&[1, 1], -1)])
        );
        assert!(matches!(
            cs_product(&c2, &Weight::from([0, 1]), &Weight::from([1, 0])),
            Err(Error::NotStrictlyDominant(_))
        ));
    }

    #[test]
    fn ss_examples() {
        assert_eq!(
            ss_product(&rs("A1"), &Weight::from([1]), &Weight::from([1])).unwrap(),
            comb(Kind::C, &[(&[2], 1), (&[0], -2)])
        );
        let a2 = rs("A2");
        assert_eq!(
            ss_product(&a2, &Weight::from([1, 1]), &Weight::from([1, 1])).unwrap(),
            comb(
                Kind::C,
                &[(&[2, 2], 1), (&[0, 3], -2), (&[3, 0], -2), (&[1, 1], 2), (&[0, 0], -6)]
            )
        );
        let generic = ss_product(&a2, &Weight::from([1, 1]), &Weight::from([4, 3])).unwrap();
        assert_eq!(generic.len(), 6);
    }

    #[test]
    fn relation_rendering() {
        let g2 = rs("G2");
        let r = derive_recursion(&g2, 1, &Weight::from([0, 2]), Kind::C).unwrap();
        assert_eq!(r.to_text(&g2), "X_2C_{(0,2)} = C_{(0,3)} + C_{(1,1)} + 2X_1 + X_2");
        let a2 = rs("A2");
        let r = derive_recursion(&a2, 0, &Weight::from([0, 1]), Kind::C).unwrap();
        assert_eq!(r.to_text(&a2), "X_1X_2 = C_{(1,1)} + 3");
        let r = derive_recursion(&a2, 0, &Weight::from([0, 0]), Kind::C).unwrap();
        assert_eq!(r.rhs, comb(Kind::C, &[(&[1, 0], 1)]));
        let c2 = rs("C2");
        let r = derive_recursion(&c2, 1, &Weight::from([1, 1]), Kind::S).unwrap();
        assert_eq!(r.to_text(&c2), "X_2S = S_{(1,2)} - S");
        let json = r.to_json(&c2);
        assert_eq!(json["lhs"]["var"], 2);
        assert_eq!(json["rhs"][1]["coeff"], -1);
    }

    #[test]
    fn relation_parsing_round_trips() {
        let g2 = rs("G2");
        let line = "X_2C_{(0,2)} = C_{(0,3)} + C_{(1,1)} + 2X_1 + X_2";
        let r = Relation::parse(&g2, line).unwrap();
        assert_eq!(r, derive_recursion(&g2, 1, &Weight::from([0, 2]), Kind::C).unwrap());
        let c2 = rs("C2");
        let r = Relation::parse(&c2, "X_2S = S_{(1,2)} − S").unwrap();
        assert_eq!(r.kind, Kind::S);
        assert_eq!(r.rhs, comb(Kind::S, &[(&[1, 2], 1), (&[1, 1], -1)]));
        let r = Relation::parse(&g2, "X_2X_2 = C_{(0,2)} + 2X_1 + 2X_2 + 6").unwrap();
        assert_eq!(r.weight, Weight::from([0, 1]));
        assert_eq!(r.rhs.coeff(&Weight::from([0, 0])), 6);
        assert!(Relation::parse(&g2, "X_3X_1 = C_{(1,1)}").is_err());
        assert!(Relation::parse(&g2, "X_1 C_{(1,1)} S").is_err());
    }

    fn check_product_invariants(r: &RootSystem, lam: &Weight, mu: &Weight) -> std::result::Result<(), TestCaseError> {
        let cc = cc_product(r, lam, mu).unwrap();
        let size = |w: &Weight| (r.weyl_order() / r.stabilizer_order(w)) as i64;
        prop_assert_eq!(cc.term_count(r), size(lam) * size(mu));
        prop_assert!(cc.terms.values().all(|&c| c > 0));
        prop_assert_eq!(cc.coeff(&lam.add(mu)), 1);
        let expected = r.congruence_number(lam).add(&r.congruence_number(mu));
        prop_assert_eq!(cc.congruence_classes(r), HashSet::from([expected.clone()]));
        for k in cc.terms.keys() {
            prop_assert!(r.dominates(&lam.add(mu), k));
        }
        if lam.is_strictly_dominant() {
            let cs = cs_product(r, mu, lam).unwrap();
            prop_assert_eq!(cs.coeff(&lam.add(mu)), 1);
            for k in cs.terms.keys() {
                prop_assert!(k.is_strictly_dominant());
                prop_assert_eq!(r.congruence_number(k), expected.clone());
            }
            let raw = cs_product_raw(r, mu, lam).unwrap();
            prop_assert_eq!(
                raw.len() as i64 * r.weyl_order() as i64,
                r.weyl_order() as i64 * size(mu)
            );
        }
        if lam.is_strictly_dominant() && mu.is_strictly_dominant() {
            let ss = ss_product(r, lam, mu).unwrap();
            for k in ss.terms.keys() {
                prop_assert_eq!(r.congruence_number(k), expected.clone());
                prop_assert!(cc.terms.contains_key(k));
            }
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn product_invariants_rank2(a in 0i32..4, b in 0i32..4, c in 0i32..4, d in 0i32..4) {
            for name in ["A2", "C2", "G2"] {
                check_product_invariants(&rs(name), &Weight::from([a, b]), &Weight::from([c, d]))?;
            }
        }

        #[test]
        fn product_invariants_rank3(a in 0i32..3, b in 0i32..3, c in 0i32..3, d in 0i32..3, e in 0i32..3, f in 0i32..3) {
            for name in ["A3", "B3", "C3"] {
                check_product_invariants(&rs(name), &Weight::from([a, b, c]), &Weight::from([d, e, f]))?;
            }
        }

        #[test]
        fn relation_text_round_trips(a in 0i32..4, b in 0i32..4, j in 0usize..2, s in proptest::bool::ANY) {
            for name in ["A2", "C2", "G2"] {
                let r = rs(name);
                let (kind, w) = if s { (Kind::S, Weight::from([a + 1, b + 1])) } else { (Kind::C, Weight::from([a, b])) };
                let rel = derive_recursion(&r, j, &w, kind).unwrap();
                prop_assert_eq!(Relation::parse(&r, &rel.to_text(&r)).unwrap(), rel);
            }
        }
    }
}
