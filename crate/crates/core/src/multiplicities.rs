//! Dominant-weight multiplicities (Freudenthal), the unit-triangular matrix
//! they form, its inverse, and Weyl's dimension formula.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::orbits::orbit_size;
use crate::rootsys::{RootSystem, Weight};
use crate::Rational;

/// Multiplicities `m_μ^λ` of the dominant weights `μ` of the irreducible
/// representation with highest weight `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub highest: Weight,
    pub rows: BTreeMap<Weight, u64>,
}

impl MultiplicityTable {
    pub fn get(&self, mu: &Weight) -> u64 {
        self.rows.get(mu).copied().unwrap_or(0)
    }

    /// `Σ m_μ · |W_μ|`, the number of weights counted with multiplicity.
    pub fn weight_count(&self, rs: &RootSystem) -> u64 {
        self.rows
            .iter()
            .map(|(mu, m)| m * orbit_size(rs, mu).expect("dominant"))
            .sum()
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let mut rows: Vec<(&Weight, &u64)> = self.rows.iter().collect();
        rows.sort_by_cached_key(|(w, _)| std::cmp::Reverse(rs.order_key(w)));
        json!({
            "highest": self.highest.0,
            "rows": rows.into_iter().map(|(w, m)| json!({"weight": w.0, "mult": m})).collect::<Vec<_>>(),
        })
    }
}

pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<MultiplicityTable> {
    rs.check_dominant(lambda)?;
    Ok(freudenthal(rs, lambda, |a, b| rs.inner(a, b)))
}

/// Freudenthal's recursion over the dominant weights below `λ`, from the top
/// down. `inner` is any invariant form; the result does not depend on its
/// normalization.
fn freudenthal(rs: &RootSystem, lambda: &Weight, inner: impl Fn(&Weight, &Weight) -> Rational) -> MultiplicityTable {
    let rho = rs.rho();
    let mut below = rs.dominant_weights_below(lambda);
    below.reverse();
    let lr = lambda.add(&rho);
    let top = inner(&lr, &lr);
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(below.len());
    mult.insert(lambda.clone(), 1);
    for mu in below.iter().skip(1) {
        let mr = mu.add(&rho);
        let denom = top - inner(&mr, &mr);
        let mut sum = Rational::zero();
        for alpha in rs.positive_roots() {
            let mut shifted = mu.add(alpha);
            loop {
                let dom = rs.to_dominant(&shifted).weight;
                let Some(&m) = mult.get(&dom) else { break };
                sum += Rational::from_integer(m as i64) * inner(&shifted, alpha);
                shifted = shifted.add(alpha);
            }
        }
        let m = Rational::from_integer(2) * sum / denom;
        debug_assert!(m.is_integer() && m > Rational::zero());
        mult.insert(mu.clone(), m.to_integer() as u64);
    }
    MultiplicityTable {
        highest: lambda.clone(),
        rows: mult.into_iter().collect(),
    }
}

/// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn dim_irrep(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    rs.check_dominant(lambda)?;
    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let big = |r: Rational| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let mut d = BigRational::one();
    for alpha in rs.positive_roots() {
        d *= big(rs.inner(&lr, alpha)) / big(rs.inner(&rho, alpha));
    }
    debug_assert!(d.is_integer());
    Ok(d.to_integer().to_u128().expect("dimension fits in u128"))
}

/// Square matrix `M[i][j] = m_{w_i}^{w_j}` over an ordered list of dominant
/// weights (lower weights first), so that `M` is unit upper triangular.
pub fn multiplicity_matrix(rs: &RootSystem, weights: &[Weight]) -> Result<Vec<Vec<i64>>> {
    let index: HashMap<&Weight, usize> = weights.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = weights.len();
    let mut m = vec![vec![0i64; n]; n];
    for (j, lam) in weights.iter().enumerate() {
        let table = weight_multiplicities(rs, lam)?;
        for (mu, &c) in &table.rows {
            let i = *index.get(mu).ok_or_else(|| Error::NotDominanceClosed(mu.clone()))?;
            if i > j {
                return Err(Error::WeightOrder(lam.clone(), mu.clone()));
            }
            m[i][j] = c as i64;
        }
    }
    Ok(m)
}

/// Exact inverse of the unit upper-triangular multiplicity matrix.
pub fn kostka_inverse(rs: &RootSystem, weights: &[Weight]) -> Result<Vec<Vec<i64>>> {
    let u = multiplicity_matrix(rs, weights)?;
    Ok(unit_upper_inverse(&u))
}

pub(crate) fn unit_upper_inverse(u: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = u.len();
    let mut x = vec![vec![0i64; n]; n];
    for i in 0..n {
        x[i][i] = 1;
        for j in i + 1..n {
            x[i][j] = -(i..j).map(|k| x[i][k] * u[k][j]).sum::<i64>();
        }
    }
    x
}

/// `C_μ = Σ_λ c_λ χ_λ`, returned as the map `λ ↦ c_λ`.
pub fn inverse_character(rs: &RootSystem, mu: &Weight) -> Result<BTreeMap<Weight, i64>> {
    rs.check_dominant(mu)?;
    let weights = rs.dominant_weights_below(mu);
    let inv = kostka_inverse(rs, &weights)?;
    let col = weights.len() - 1;
    Ok(weights
        .iter()
        .enumerate()
        .filter(|(i, _)| inv[*i][col] != 0)
        .map(|(i, w)| (w.clone(), inv[i][col]))
        .collect())
}

/// Multiplicity matrix, its inverse, orbit sizes and dimensions over a
/// dominance-closed list of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub weights: Vec<Weight>,
    pub matrix: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
    pub orbit_sizes: Vec<u64>,
    pub dims: Vec<u128>,
}

impl MultiplicityReport {
    pub fn new(rs: &RootSystem, weights: &[Weight]) -> Result<Self> {
        let matrix = multiplicity_matrix(rs, weights)?;
        let inverse = unit_upper_inverse(&matrix);
        let orbit_sizes = weights.iter().map(|w| orbit_size(rs, w)).collect::<Result<_>>()?;
        let dims = weights.iter().map(|w| dim_irrep(rs, w)).collect::<Result<_>>()?;
        Ok(MultiplicityReport {
            weights: weights.to_vec(),
            matrix,
            inverse,
            orbit_sizes,
            dims,
        })
    }

    /// For every column `λ`: `Σ_μ m_μ^λ |W_μ| = dim λ`.
    pub fn dimension_checks(&self) -> Vec<bool> {
        (0..self.weights.len())
            .map(|j| {
                let total: i128 = (0..self.weights.len())
                    .map(|i| self.matrix[i][j] as i128 * self.orbit_sizes[i] as i128)
                    .sum();
                total == self.dims[j] as i128
            })
            .collect()
    }

    /// The dimension check written out, e.g. `4·1 + 4·6 + 2·6 + 2·6 + 1·12 = 64`.
    pub fn dimension_identity(&self, j: usize) -> String {
        let parts: Vec<String> = (0..self.weights.len())
            .filter(|&i| self.matrix[i][j] != 0)
            .map(|i| format!("{}·{}", self.matrix[i][j], self.orbit_sizes[i]))
            .collect();
        format!("{} = {}", parts.join(" + "), self.dims[j])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weights": self.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "multiplicities": self.matrix,
            "inverse": self.inverse,
            "orbit_sizes": self.orbit_sizes,
            "dims": self.dims.iter().map(|d| *d as u64).collect::<Vec<_>>(),
            "dimension_checks": self.dimension_checks(),
        })
    }

    pub fn to_latex(&self) -> String {
        let n = self.weights.len();
        let header: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        let mut s = String::new();
        for (title, m) in [
            ("m_\\mu^\\lambda", &self.matrix),
            ("(m_\\mu^\\lambda)^{-1}", &self.inverse),
        ] {
            s.push_str(&format!("\\begin{{tabular}}{{c|{}|c}}\n", "c".repeat(n)));
            s.push_str(&format!(
                "${title}$ & {} & $|W_\\mu|$ \\\\\n\\hline\n",
                header.join(" & ")
            ));
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| {
                        if m[i][j] == 0 && i > j {
                            String::new()
                        } else {
                            m[i][j].to_string()
                        }
                    })
                    .collect();
                s.push_str(&format!(
                    "{} & {} & {} \\\\\n",
                    header[i],
                    row.join(" & "),
                    self.orbit_sizes[i]
                ));
            }
            s.push_str("\\hline\n");
            let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
            s.push_str(&format!("dim & {} & \\\\\n\\end{{tabular}}\n", dims.join(" & ")));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn w(c: &[i32]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn g2_adjoint_times_short() {
        let g2 = rs("G2");
        let t = weight_multiplicities(&g2, &w(&[1, 1])).unwrap();
        let expect: BTreeMap<Weight, u64> = [
            (w(&[0, 0]), 4),
            (w(&[0, 1]), 4),
            (w(&[1, 0]), 2),
            (w(&[0, 2]), 2),
            (w(&[1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.rows, expect);
        assert_eq!(t.weight_count(&g2), 64);
    }

    #[test]
    fn small_tables() {
        let a2 = rs("A2");
        let t = weight_multiplicities(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(t.rows, [(w(&[1, 1]), 1), (w(&[0, 0]), 2)].into_iter().collect());
        assert_eq!(weight_multiplicities(&a2, &w(&[0, 0])).unwrap().get(&w(&[0, 0])), 1);
        let t = weight_multiplicities(&a2, &w(&[2, 2])).unwrap();
        assert_eq!(t.get(&w(&[0, 0])), 3);
        assert_eq!(t.get(&w(&[1, 1])), 2);
        assert_eq!(t.get(&w(&[3, 0])), 1);
    }

    #[test]
    fn dimensions() {
        let g2 = rs("G2");
        let dims: Vec<u128> = [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1]]
            .iter()
            .map(|c| dim_irrep(&g2, &w(c)).unwrap())
            .collect();
        assert_eq!(dims, vec![1, 7, 14, 27, 64]);
        assert_eq!(dim_irrep(&rs("A3"), &w(&[1, 0, 1])).unwrap(), 15);
        assert_eq!(dim_irrep(&rs("E8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), 248);
        assert_eq!(dim_irrep(&rs("E6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap(), 27);
        assert_eq!(dim_irrep(&rs("F4"), &w(&[0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(dim_irrep(&rs("C2"), &w(&[1, 0])).unwrap(), 4);
        assert_eq!(dim_irrep(&rs("B3"), &w(&[0, 0, 1])).unwrap(), 8);
    }

    #[test]
    fn g2_matrices_and_inverse() {
        let g2 = rs("G2");
        let ws: Vec<Weight> = [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1]].iter().map(|c| w(c)).collect();
        let rep = MultiplicityReport::new(&g2, &ws).unwrap();
        assert_eq!(
            rep.matrix,
            vec![
                vec![1, 1, 2, 3, 4],
                vec![0, 1, 1, 2, 4],
                vec![0, 0, 1, 1, 2],
                vec![0, 0, 0, 1, 2],
                vec![0, 0, 0, 0, 1],
            ]
        );
        assert_eq!(
            rep.inverse,
            vec![
                vec![1, -1, -1, 0, 2],
                vec![0, 1, -1, -1, 0],
                vec![0, 0, 1, -1, 0],
                vec![0, 0, 0, 1, -2],
                vec![0, 0, 0, 0, 1],
            ]
        );
        assert_eq!(rep.orbit_sizes, vec![1, 6, 6, 6, 12]);
        assert!(rep.dimension_checks().iter().all(|&b| b));
        assert_eq!(rep.dimension_identity(4), "4·1 + 4·6 + 2·6 + 2·6 + 1·12 = 64");
    }

    #[test]
    fn inverse_characters() {
        let g2 = rs("G2");
        assert_eq!(
            inverse_character(&g2, &w(&[1, 1])).unwrap(),
            [(w(&[0, 0]), 2), (w(&[0, 2]), -2), (w(&[1, 1]), 1)]
                .into_iter()
                .collect()
        );
        assert_eq!(
            inverse_character(&rs("A2"), &w(&[0, 2])).unwrap(),
            [(w(&[0, 2]), 1), (w(&[1, 0]), -1)].into_iter().collect()
        );
        assert_eq!(
            inverse_character(&g2, &w(&[0, 0])).unwrap(),
            [(w(&[0, 0]), 1)].into_iter().collect()
        );
        assert_eq!(
            kostka_inverse(&rs("A2"), &[w(&[0, 0]), w(&[1, 1])]).unwrap(),
            vec![vec![1, -2], vec![0, 1]]
        );
        assert_eq!(kostka_inverse(&g2, &[w(&[0, 0])]).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn rejects_bad_weight_lists() {
        let g2 = rs("G2");
        assert!(matches!(
            kostka_inverse(&g2, &[w(&[0, 0]), w(&[1, 1])]),
            Err(Error::NotDominanceClosed(_))
        ));
        assert!(matches!(
            kostka_inverse(&g2, &[w(&[0, 1]), w(&[0, 0])]),
            Err(Error::WeightOrder(..))
        ));
    }

    proptest! {
        #[test]
        fn dimension_consistency(a in 0i32..4, b in 0i32..4) {
            for name in ["A2", "C2", "G2"] {
                let r = rs(name);
                let lam = w(&[a, b]);
                let t = weight_multiplicities(&r, &lam).unwrap();
                prop_assert_eq!(t.get(&lam), 1);
                prop_assert_eq!(t.weight_count(&r) as u128, dim_irrep(&r, &lam).unwrap());
                for mu in t.rows.keys() {
                    prop_assert!(r.dominates(&lam, mu));
                }
            }
        }

        #[test]
        fn dimension_consistency_rank3(a in 0i32..3, b in 0i32..3, c in 0i32..3) {
            for name in ["A3", "B3", "C3"] {
                let r = rs(name);
                let lam = w(&[a, b, c]);
                let t = weight_multiplicities(&r, &lam).unwrap();
                prop_assert_eq!(t.weight_count(&r) as u128, dim_irrep(&r, &lam).unwrap());
            }
        }

        #[test]
        fn rescaled_form_gives_same_multiplicities(a in 0i32..4, b in 0i32..4, k in 1i64..7) {
            for name in ["C2", "G2"] {
                let r = rs(name);
                let lam = w(&[a, b]);
                let scaled = freudenthal(&r, &lam, |x, y| r.inner(x, y) * Rational::new(k, 3));
                prop_assert_eq!(scaled, weight_multiplicities(&r, &lam).unwrap());
            }
        }

        #[test]
        fn matrix_times_inverse_is_identity(a in 0i32..4, b in 0i32..4) {
            let r = rs("G2");
            let ws = r.dominant_weights_below(&w(&[a, b]));
            let m = multiplicity_matrix(&r, &ws).unwrap();
            let inv = unit_upper_inverse(&m);
            let n = ws.len();
            for i in 0..n {
                for j in 0..n {
                    let p: i64 = (0..n).map(|k| m[i][k] * inv[k][j]).sum();
                    prop_assert_eq!(p, i64::from(i == j));
                }
            }
        }
    }
}
