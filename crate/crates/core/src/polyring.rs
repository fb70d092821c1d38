//! Sparse multivariate polynomials with exact coefficients.
//!
//! Exponent vectors may be negative, so the same type carries both the
//! polynomial form in `X_1..X_n` and the Laurent form in the exponential
//! variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Float, Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::Rational;

/// Coefficient ring of a [`Polynomial`].
pub trait Coeff: Signed + Clone + fmt::Debug + fmt::Display + Send + Sync {}

impl<T: Signed + Clone + fmt::Debug + fmt::Display + Send + Sync> Coeff for T {}

/// Total order on exponent vectors: the exponent vector is read as a weight,
/// compared by height first and lexicographically on ties. Extends the
/// dominance order of the root system.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialOrder {
    heights: Vec<Rational>,
}

impl MonomialOrder {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let heights = (0..n).map(|k| rs.inverse_cartan()[k].iter().copied().sum()).collect();
        MonomialOrder { heights }
    }

    /// Graded lexicographic order on `n` variables.
    pub fn graded(n: usize) -> Self {
        MonomialOrder {
            heights: vec![Rational::from_integer(1); n],
        }
    }

    pub fn height(&self, e: &[i32]) -> Rational {
        e.iter()
            .zip(&self.heights)
            .map(|(&k, h)| h * Rational::from_integer(k as i64))
            .sum()
    }

    pub fn cmp(&self, a: &[i32], b: &[i32]) -> Ordering {
        self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The variable `X_{j+1}`.
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exponent: Vec<i32>, c: C) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&k| k < 0))
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Vec<i32>, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Vec<i32>, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::PolyArity(self.nvars, other.nvars))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.nvars, other.nvars, "polynomial arity");
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x.clone() * c.clone());
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `subs[j]` for `X_{j+1}`. Exponents must be nonnegative.
    pub fn compose(&self, subs: &[Polynomial<C>]) -> Result<Polynomial<C>> {
        if subs.len() != self.nvars {
            return Err(Error::PolyArity(self.nvars, subs.len()));
        }
        let m = subs.first().map_or(0, |p| p.nvars);
        if let Some(bad) = subs.iter().find(|p| p.nvars != m) {
            return Err(Error::PolyArity(m, bad.nvars));
        }
        let mut powers: Vec<Vec<Polynomial<C>>> = vec![vec![Polynomial::one(m)]; self.nvars];
        let mut out = Polynomial::zero(m);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(m, c.clone());
            for (j, &k) in e.iter().enumerate() {
                assert!(k >= 0, "compose needs nonnegative exponents");
                while powers[j].len() <= k as usize {
                    let next = powers[j].last().unwrap() * &subs[j];
                    powers[j].push(next);
                }
                if k > 0 {
                    term = &term * &powers[j][k as usize];
                }
            }
            out.add_scaled(&term, &C::one());
        }
        Ok(out)
    }

    /// Renames variables: `X_{j+1}` becomes `X_{perm[j]+1}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = vec![0; self.nvars];
                    for (j, &k) in e.iter().enumerate() {
                        f[perm[j]] = k;
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Exact division of Laurent polynomials. Terms are eliminated from the
    /// lexicographically largest exponent downwards.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_arity(divisor)?;
        let (dl, dc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::InexactDivision)?;
        let dt = divisor.terms.keys().next().unwrap().clone();
        let Some(st) = self.terms.keys().next().cloned() else {
            return Ok(Self::zero(self.nvars));
        };
        // The lowest quotient exponent of an exact division.
        let floor: Vec<i32> = st.iter().zip(&dt).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Vec<i32> = e.iter().zip(&dl).map(|(a, b)| a - b).collect();
            let qc = c.clone() / dc.clone();
            if qe < floor || qc.clone() * dc.clone() != c {
                return Err(Error::InexactDivision);
            }
            let q = Self::monomial(qe, qc);
            rem = rem.checked_sub(&(&q * divisor))?;
            quot.add_scaled(&q, &C::one());
        }
        Ok(quot)
    }

    /// Direct sum of terms at a complex point.
    pub fn eval<F: Float>(&self, point: &[Complex<F>]) -> Complex<F>
    where
        C: ToPrimitive,
    {
        assert_eq!(point.len(), self.nvars, "point arity");
        self.terms
            .iter()
            .fold(Complex::new(F::zero(), F::zero()), |acc, (e, c)| {
                let mut m = Complex::new(F::from(c.clone()).expect("coefficient fits"), F::zero());
                for (&k, z) in e.iter().zip(point) {
                    if k != 0 {
                        m = m * z.powi(k);
                    }
                }
                acc + m
            })
    }

    /// Table-style rendering such as `X_1^2X_2 - 2X_2^2 - X_1`.
    pub fn render(&self, order: &MonomialOrder, var: &str, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(e, var, latex);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn to_text(&self, order: &MonomialOrder) -> String {
        self.render(order, "X", false)
    }

    pub fn to_latex(&self, order: &MonomialOrder) -> String {
        self.render(order, "X", true)
    }

    /// `{"nvars": n, "terms": [{"e": [...], "c": "<int>"}]}`, terms descending.
    pub fn to_json(&self, order: &MonomialOrder) -> Value {
        json!({
            "nvars": self.nvars,
            "terms": self
                .sorted_terms(order)
                .into_iter()
                .map(|(e, c)| json!({"e": e, "c": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self>
    where
        C: FromStr,
    {
        let bad = |reason: &str| Error::ParsePoly {
            input: v.to_string(),
            reason: reason.to_string(),
        };
        let nvars = v["nvars"].as_u64().ok_or_else(|| bad("missing nvars"))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
        let mut p = Self::zero(nvars);
        for t in terms {
            let e: Vec<i32> = serde_json::from_value(t["e"].clone()).map_err(|_| bad("bad exponent"))?;
            if e.len() != nvars {
                return Err(bad("exponent length"));
            }
            let c: C = t["c"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad coefficient"))?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parses table-style input: `-6 - 2X_1 - 2X_2 + X_2^2`, `X^2 - 2`,
    /// `u1^2u3`, `2*X_1*X_{2}^{3}`. Unicode minus signs are accepted; a bare
    /// `X` denotes `X_1`.
    pub fn parse(input: &str, nvars: usize) -> Result<Self> {
        let fail = |reason: String| Error::ParsePoly {
            input: input.to_string(),
            reason,
        };
        let norm: String = input
            .replace('−', "-")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '{' && *c != '}')
            .collect();
        if norm.is_empty() {
            return Err(fail("empty input".into()));
        }
        let chars: Vec<char> = norm.chars().collect();
        let mut pos = 0;
        let mut out = Self::zero(nvars);
        let read_int = |pos: &mut usize| -> Option<u64> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().ok())?
        };
        while pos < chars.len() {
            let mut negative = false;
            let mut signed = false;
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                negative ^= chars[pos] == '-';
                signed = true;
                pos += 1;
            }
            if !signed && pos > 0 {
                return Err(fail(format!("expected sign at offset {pos}")));
            }
            let coeff_digits = read_int(&mut pos);
            let mut e = vec![0i32; nvars];
            let mut saw_var = false;
            while pos < chars.len() && matches!(chars[pos], 'X' | 'x' | 'u') {
                pos += 1;
                saw_var = true;
                if pos < chars.len() && chars[pos] == '_' {
                    pos += 1;
                }
                let idx = match read_int(&mut pos) {
                    Some(i) => i as usize,
                    None => 1,
                };
                if idx == 0 || idx > nvars {
                    return Err(fail(format!("variable index {idx} out of range")));
                }
                let mut k = 1i32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let mut neg_exp = false;
                    if pos < chars.len() && chars[pos] == '-' {
                        neg_exp = true;
                        pos += 1;
                    }
                    k = read_int(&mut pos).ok_or_else(|| fail("missing exponent".into()))? as i32;
                    if neg_exp {
                        k = -k;
                    }
                }
                e[idx - 1] += k;
            }
            if coeff_digits.is_none() && !saw_var {
                return Err(fail(format!("unexpected character at offset {pos}")));
            }
            let mut c = C::from_str_radix(&coeff_digits.unwrap_or(1).to_string(), 10)
                .map_err(|_| fail("bad coefficient".into()))?;
            if negative {
                c = -c;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn render_monomial(e: &[i32], var: &str, latex: bool) -> String {
    let mut s = String::new();
    for (j, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        s.push_str(&format!("{var}_{}", j + 1));
        if k != 1 {
            if latex && !(0..10).contains(&k) {
                s.push_str(&format!("^{{{k}}}"));
            } else {
                s.push_str(&format!("^{k}"));
            }
        }
    }
    s
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&MonomialOrder::graded(self.nvars)))
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomial arity")
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomial arity")
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomial arity")
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn p(s: &str, n: usize) -> P {
        P::parse(s, n).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        assert!((&p("X_1", 2) + &p("-X_1", 2)).is_zero());
        assert_eq!(&p("X_1X_2 - 3", 2) + &P::constant(2, 3.into()), p("X_1X_2", 2));
        assert_eq!(p("X^2 - 2", 1).scale(&2.into()), p("2X^2 - 4", 1));
        assert_eq!(&p("X", 1) * &p("X", 1), p("X^2", 1));
        let c2 = p("X^2-2", 1);
        assert_eq!(&c2 * &c2, p("X^4 - 4X^2 + 4", 1));
        assert_eq!(&(&c2 * &c2) - &p("X^4 - 4X^2 + 2", 1), P::constant(1, 2.into()));
        assert_eq!(&c2 * &P::one(1), c2);
        assert!(matches!(
            p("X", 1).checked_add(&p("X_1", 2)),
            Err(Error::PolyArity(1, 2))
        ));
    }

    #[test]
    fn parsing_variants() {
        let a = p("−6 − 2X_1 − 2X_2 + X_2^2", 2);
        assert_eq!(a.coeff(&[0, 0]), BigInt::from(-6));
        assert_eq!(a.coeff(&[0, 2]), BigInt::from(1));
        assert_eq!(p("u1^2u3 - 3u2", 3), p("X_1^2X_3 - 3X_2", 3));
        assert_eq!(p("2*X_{1}*X_{2}^{3}", 2), p("2X_1X_2^3", 2));
        assert_eq!(p("X_1^-1 + X_1", 1).coeff(&[-1]), BigInt::from(1));
        assert!(P::parse("X_3", 2).is_err());
        assert!(P::parse("X_1 X_2 ?", 2).is_err());
        assert!(P::parse("", 2).is_err());
    }

    #[test]
    fn rendering_follows_table_style() {
        let a2 = RootSystem::from_name("A2").unwrap();
        let o = MonomialOrder::new(&a2);
        assert_eq!(p("X_1X_2-3", 2).to_latex(&o), "X_1X_2 - 3");
        assert_eq!(p("-X_1 - 2X_2^2 + X_1^2X_2", 2).to_text(&o), "X_1^2X_2 - 2X_2^2 - X_1");
        assert_eq!(P::zero(2).to_text(&o), "0");
        assert_eq!(p("-X^12", 1).to_latex(&MonomialOrder::graded(1)), "-X_1^{12}");
    }

    #[test]
    fn monomial_order_extends_dominance() {
        for name in ["A2", "C2", "G2", "A3", "B3", "C3"] {
            let rs = RootSystem::from_name(name).unwrap();
            let o = MonomialOrder::new(&rs);
            let n = rs.rank();
            let boxv: Vec<Vec<i32>> = (0..4i32.pow(n as u32))
                .map(|mut k| {
                    (0..n)
                        .map(|_| {
                            let d = k % 4;
                            k /= 4;
                            d
                        })
                        .collect()
                })
                .collect();
            for a in &boxv {
                assert_eq!(o.cmp(a, a), Ordering::Equal);
                for b in &boxv {
                    let ab = o.cmp(a, b);
                    assert_eq!(ab, o.cmp(b, a).reverse());
                    if a != b {
                        assert_ne!(ab, Ordering::Equal);
                    }
                    let (wa, wb) = (crate::Weight(a.clone()), crate::Weight(b.clone()));
                    if a != b && rs.dominates(&wa, &wb) {
                        assert_eq!(ab, Ordering::Greater, "{name} {a:?} {b:?}");
                    }
                }
            }
            let mut sorted = boxv.clone();
            sorted.sort_by(|a, b| o.cmp(a, b));
            for w in sorted.windows(3) {
                assert_eq!(o.cmp(&w[0], &w[2]), Ordering::Less);
            }
        }
    }

    #[test]
    fn laurent_division() {
        let z = p("X_1 - X_1^-1", 1);
        let num = p("X_1^3 - X_1^-3", 1);
        assert_eq!(num.div_exact(&z).unwrap(), p("X_1^2 + 1 + X_1^-2", 1));
        assert!(matches!(p("X_1^2 + 1", 1).div_exact(&z), Err(Error::InexactDivision)));
        assert!(matches!(
            p("2X_1", 1).div_exact(&p("3", 1)),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn composition() {
        let c = p("X_1^2 - 2X_2", 2);
        let subs = [p("X_1 + 1", 2), p("X_2 - 1", 2)];
        assert_eq!(c.compose(&subs).unwrap(), p("X_1^2 + 2X_1 + 1 - 2X_2 + 2", 2));
    }

    #[test]
    fn complex_evaluation() {
        let two = Complex::new(2.0f64, 0.0);
        assert_eq!(p("X^2 - 2", 1).eval(&[two]), Complex::new(2.0, 0.0));
        let z = Complex::new(0.0f64, 0.0);
        assert_eq!(p("X_1X_2 - 3", 2).eval(&[z, z]), Complex::new(-3.0, 0.0));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(-2i32..4, n), -20i64..20), 0..6)
            .prop_map(move |ts| P::from_terms(n, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn serialization_round_trip(a in arb_poly(3)) {
            let o = MonomialOrder::graded(3);
            prop_assert_eq!(P::from_json(&a.to_json(&o)).unwrap(), a.clone());
            prop_assert_eq!(P::parse(&a.to_text(&o), 3).unwrap(), a);
        }

        #[test]
        fn exact_division_recovers_factor(a in arb_poly(2), b in arb_poly(2)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
