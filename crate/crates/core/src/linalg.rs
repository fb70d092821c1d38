//! Exact dense linear algebra over small rational matrices.

use num_traits::{One, Signed, Zero};

use crate::Rational;

pub(crate) fn to_rational(m: &[Vec<i32>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x as i64)).collect())
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` for a singular matrix.
pub(crate) fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if !f.is_zero() {
                for j in col..n {
                    let v = a[col][j];
                    a[r][j] -= f * v;
                }
            }
        }
    }
    det
}

pub(crate) fn abs(r: Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let m = to_rational(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![r(2, 3), r(1, 3)], vec![r(1, 3), r(2, 3)]]);
        assert_eq!(determinant(&m), r(3, 1));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = to_rational(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&m).is_none());
        assert_eq!(determinant(&m), r(0, 1));
    }
}
