//! Weyl-group orbits of dominant weights with reflection parities.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Orbits larger than this are refused unless a larger cap is passed to
/// [`weyl_orbit_capped`]. Covers every orbit of E7.
pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPoint {
    pub w: Weight,
    /// Length of a shortest reflection word from the seed, modulo 2.
    pub p: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub seed: Weight,
    /// Sorted lexicographically by coordinates.
    pub points: Vec<OrbitPoint>,
    #[serde(skip)]
    pub stabilizer_order: u64,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.points.iter().map(|p| &p.w)
    }

    /// `(−1)^p` for each point.
    pub fn signed(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.points.iter().map(|p| (&p.w, if p.p == 0 { 1 } else { -1 }))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("orbit serializes")
    }
}

pub fn weyl_orbit(rs: &RootSystem, lambda: &Weight) -> Result<Orbit> {
    weyl_orbit_capped(rs, lambda, DEFAULT_ORBIT_CAP)
}

/// Breadth-first closure of a dominant weight under the simple reflections.
///
/// Only reflections `r_i` with `μ_i > 0` are applied; each such step lengthens
/// the shortest word by one, so the BFS depth is the word length.
pub fn weyl_orbit_capped(rs: &RootSystem, lambda: &Weight, cap: u64) -> Result<Orbit> {
    rs.check_dominant(lambda)?;
    let size = orbit_size(rs, lambda)?;
    if size > cap {
        return Err(Error::OrbitCap { order: size, cap });
    }
    let mut seen: HashSet<Weight> = HashSet::with_capacity(size as usize);
    seen.insert(lambda.clone());
    let mut points = vec![OrbitPoint {
        w: lambda.clone(),
        p: 0,
    }];
    let mut frontier = vec![lambda.clone()];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth ^= 1;
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..rs.rank() {
                if w.0[i] > 0 {
                    let v = rs.reflect_unchecked(i, w);
                    if seen.insert(v.clone()) {
                        points.push(OrbitPoint { w: v.clone(), p: depth });
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    points.sort_by(|a, b| a.w.cmp(&b.w));
    debug_assert_eq!(points.len() as u64, size);
    Ok(Orbit {
        seed: lambda.clone(),
        points,
        stabilizer_order: rs.stabilizer_order(lambda),
    })
}

/// `|W| / |Stab(λ)|` without enumerating the orbit.
pub fn orbit_size(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.check_dominant(lambda)?;
    Ok(rs.weyl_order() / rs.stabilizer_order(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn size(name: &str, w: &[i32]) -> usize {
        weyl_orbit(&rs(name), &Weight(w.to_vec())).unwrap().len()
    }

    #[test]
    fn orbit_sizes_from_the_size_table() {
        assert_eq!(size("A2", &[0, 0]), 1);
        assert_eq!(size("A2", &[1, 1]), 6);
        assert_eq!(size("A2", &[3, 0]), 3);
        assert_eq!(size("B3", &[1, 1, 1]), 48);
        assert_eq!(size("B3", &[0, 2, 0]), 12);
        assert_eq!(size("C2", &[1, 0]), 4);
        assert_eq!(size("G2", &[0, 1]), 6);
        assert_eq!(size("G2", &[1, 1]), 12);
        assert_eq!(size("A3", &[5, 0, 0]), 4);
        assert_eq!(size("E6", &[1, 0, 0, 0, 0, 0]), 27);
        assert_eq!(size("E7", &[0, 0, 0, 0, 0, 0, 1]), 56);
        assert_eq!(size("E8", &[0, 0, 0, 0, 0, 0, 0, 1]), 240);
        assert_eq!(size("F4", &[0, 0, 0, 1]), 24);
    }

    #[test]
    fn orbit_of_a1() {
        let o = weyl_orbit(&rs("A1"), &Weight::from([3])).unwrap();
        assert_eq!(
            o.points,
            vec![
                OrbitPoint {
                    w: Weight::from([-3]),
                    p: 1
                },
                OrbitPoint {
                    w: Weight::from([3]),
                    p: 0
                },
            ]
        );
    }

    #[test]
    fn rejects_bad_input() {
        let a2 = rs("A2");
        assert!(matches!(
            weyl_orbit(&a2, &Weight::from([-1, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(weyl_orbit(&a2, &Weight::from([1])), Err(Error::Arity { .. })));
        let e8 = rs("E8");
        assert!(matches!(
            weyl_orbit(&e8, &Weight::rho(8)),
            Err(Error::OrbitCap { order: 696_729_600, .. })
        ));
        assert!(matches!(
            weyl_orbit_capped(&a2, &Weight::from([1, 1]), 5),
            Err(Error::OrbitCap { order: 6, cap: 5 })
        ));
    }

    #[test]
    fn json_shape() {
        let o = weyl_orbit(&rs("A1"), &Weight::from([1])).unwrap();
        assert_eq!(
            serde_json::to_string(&o.to_json()).unwrap(),
            r#"{"points":[{"p":1,"w":[-1]},{"p":0,"w":[1]}],"seed":[1]}"#
        );
    }

    fn check_invariants(r: &RootSystem, lam: &Weight) -> std::result::Result<(), TestCaseError> {
        let o = weyl_orbit(r, lam).unwrap();
        let set: HashSet<&Weight> = o.weights().collect();
        prop_assert_eq!(set.len(), o.len());
        prop_assert_eq!(o.len() as u64 * o.stabilizer_order, r.weyl_order());
        let seed = o.points.iter().find(|p| &p.w == lam).unwrap();
        prop_assert_eq!(seed.p, 0);
        for p in &o.points {
            for i in 0..r.rank() {
                prop_assert!(set.contains(&r.reflect_unchecked(i, &p.w)));
            }
            let d = r.to_dominant(&p.w);
            prop_assert_eq!(&d.weight, lam);
            if lam.is_strictly_dominant() {
                prop_assert_eq!(d.parity, p.p);
            }
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn orbit_invariants_rank2(a in 0i32..5, b in 0i32..5) {
            for name in ["A2", "C2", "G2"] {
                check_invariants(&rs(name), &Weight::from([a, b]))?;
            }
        }

        #[test]
        fn orbit_invariants_rank3(a in 0i32..3, b in 0i32..3, c in 0i32..3) {
            for name in ["A3", "B3", "C3"] {
                check_invariants(&rs(name), &Weight::from([a, b, c]))?;
            }
        }

        #[test]
        fn a2_orbits_are_swapped_by_conjugation(a in 0i32..6, b in 0i32..6) {
            let r = rs("A2");
            let o = weyl_orbit(&r, &Weight::from([a, b])).unwrap();
            let t = weyl_orbit(&r, &Weight::from([b, a])).unwrap();
            let swapped: HashSet<Weight> = o.weights().map(|w| Weight::from([w.0[1], w.0[0]])).collect();
            let target: HashSet<Weight> = t.weights().cloned().collect();
            prop_assert_eq!(swapped, target);
        }
    }
}
