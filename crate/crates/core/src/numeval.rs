//! Floating-point evaluation of orbit functions, substitution checks,
//! Laurent and cosine forms, and Monte Carlo orthogonality integrals over
//! the fundamental region.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, FloatConst, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::orbitalg::{Kind, OrbitCombination};
use crate::orbits::weyl_orbit;
use crate::polyring::Polynomial;
use crate::rootsys::{RootSystem, Weight};
use crate::IntPoly;

/// Samples per independent random substream. Fixed so that results do not
/// depend on the number of worker threads.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalContext {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
}

impl EvalContext {
    pub fn new(seed: u64, samples: usize, tolerance: f64) -> Self {
        assert!(samples >= 1, "at least one sample");
        assert!(tolerance > 0.0, "tolerance must be positive");
        EvalContext {
            seed,
            samples,
            tolerance,
        }
    }
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext::new(0, 100, 1e-9)
    }
}

/// An orbit function with its orbit precomputed for repeated evaluation.
#[derive(Debug, Clone)]
pub struct OrbitFunction {
    pub kind: Kind,
    pub weight: Weight,
    points: Vec<(Vec<i32>, i8)>,
}

impl OrbitFunction {
    /// S-functions of weights on a wall are identically zero and carry no
    /// points.
    pub fn new(rs: &RootSystem, kind: Kind, lambda: &Weight) -> Result<Self> {
        rs.check_dominant(lambda)?;
        let points = if kind == Kind::S && !lambda.is_strictly_dominant() {
            Vec::new()
        } else {
            weyl_orbit(rs, lambda)?
                .points
                .into_iter()
                .map(|p| {
                    let s = match kind {
                        Kind::C => 1,
                        Kind::S => 1 - 2 * p.p as i8,
                    };
                    (p.w.0, s)
                })
                .collect()
        };
        Ok(OrbitFunction {
            kind,
            weight: lambda.clone(),
            points,
        })
    }

    pub fn vanishes_identically(&self) -> bool {
        self.points.is_empty()
    }

    /// `Σ ± e^{2πi ⟨μ, x⟩}` over the orbit.
    pub fn eval<F: Float + FloatConst>(&self, x: &[F]) -> Complex<F> {
        let two_pi = F::TAU();
        self.points
            .iter()
            .fold(Complex::new(F::zero(), F::zero()), |acc, (mu, s)| {
                let phase = mu
                    .iter()
                    .zip(x)
                    .fold(F::zero(), |a, (&m, &xi)| a + F::from(m).unwrap() * xi);
                let z = Complex::from_polar(F::one(), two_pi * phase);
                if *s > 0 {
                    acc + z
                } else {
                    acc - z
                }
            })
    }
}

pub fn eval_orbit_function<F: Float + FloatConst>(
    rs: &RootSystem,
    kind: Kind,
    lambda: &Weight,
    x: &[F],
) -> Result<Complex<F>> {
    Ok(OrbitFunction::new(rs, kind, lambda)?.eval(x))
}

/// `(C_{ω_1}(x), …, C_{ω_n}(x))`, the polynomial variables at `x`.
pub struct FundamentalVariables {
    functions: Vec<OrbitFunction>,
}

impl FundamentalVariables {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        FundamentalVariables {
            functions: (0..n)
                .map(|j| OrbitFunction::new(rs, Kind::C, &Weight::fundamental(n, j)).expect("dominant"))
                .collect(),
        }
    }

    pub fn at<F: Float + FloatConst>(&self, x: &[F]) -> Vec<Complex<F>> {
        self.functions.iter().map(|f| f.eval(x)).collect()
    }
}

/// Uniform random points of the fundamental region, from barycentric
/// coordinates given by the spacings of sorted uniforms. Deterministic in
/// `seed` regardless of thread count.
pub fn sample_fundamental_region(rs: &RootSystem, seed: u64, count: usize) -> Vec<Vec<f64>> {
    let verts = rs.fundamental_region().vertices_f64();
    let chunks = count.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let len = CHUNK.min(count - c * CHUNK);
            let mut rng = substream(seed, c);
            (0..len).map(|_| simplex_point(&verts, &mut rng)).collect::<Vec<_>>()
        })
        .collect()
}

fn substream(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn simplex_point(verts: &[Vec<f64>], rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = verts.len() - 1;
    let mut u: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    u.sort_by(f64::total_cmp);
    let mut x = vec![0.0; n];
    let mut prev = 0.0;
    for k in 0..=n {
        let next = if k < n { u[k] } else { 1.0 };
        let b = next - prev;
        prev = next;
        for (xi, vi) in x.iter_mut().zip(&verts[k]) {
            *xi += b * vi;
        }
    }
    x
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubstitutionReport {
    pub weight: Weight,
    pub kind: Kind,
    pub max_dev: f64,
    #[serde(rename = "N")]
    pub samples: usize,
    pub seed: u64,
    pub pass: bool,
}

/// Largest deviation between a polynomial in the fundamental variables and
/// the orbit function it should represent. For `kind = S` the polynomial is
/// the quotient `S_λ / S_ρ`.
pub fn verify_substitution(
    rs: &RootSystem,
    kind: Kind,
    lambda: &Weight,
    poly: &IntPoly,
    ctx: &EvalContext,
) -> Result<SubstitutionReport> {
    let target = OrbitFunction::new(rs, kind, lambda)?;
    let rho = OrbitFunction::new(rs, Kind::S, &rs.rho())?;
    let vars = FundamentalVariables::new(rs);
    let points = sample_fundamental_region(rs, ctx.seed, ctx.samples);
    let max_dev = points
        .par_iter()
        .map(|x| {
            let p = poly.eval(&vars.at(x));
            let lhs = match kind {
                Kind::C => p,
                Kind::S => p * rho.eval(x),
            };
            (lhs - target.eval(x)).norm()
        })
        .reduce(|| 0.0, f64::max);
    Ok(SubstitutionReport {
        weight: lambda.clone(),
        kind,
        max_dev,
        samples: ctx.samples,
        seed: ctx.seed,
        pass: max_dev < ctx.tolerance,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureReport {
    pub kind: Kind,
    pub left: Weight,
    pub right: Weight,
    pub estimate: [f64; 2],
    pub stderr: f64,
    pub expected: f64,
    #[serde(rename = "N")]
    pub samples: usize,
    pub seed: u64,
    pub pass: bool,
}

/// Monte Carlo estimate of `∫_F f conj(g) dx`. Diagonal integrals pass within
/// the relative tolerance of the context; off-diagonal ones pass when within
/// three standard errors of zero.
pub fn orthogonality_integral(
    rs: &RootSystem,
    kind: Kind,
    lambda: &Weight,
    lambda2: &Weight,
    ctx: &EvalContext,
) -> Result<QuadratureReport> {
    let f = OrbitFunction::new(rs, kind, lambda)?;
    let g = OrbitFunction::new(rs, kind, lambda2)?;
    let region = rs.fundamental_region();
    let verts = region.vertices_f64();
    let volume = region.volume_f64();
    let chunks = ctx.samples.div_ceil(CHUNK);
    let partials: Vec<[f64; 4]> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let len = CHUNK.min(ctx.samples - c * CHUNK);
            let mut rng = substream(ctx.seed, c);
            let mut acc = [0.0; 4];
            for _ in 0..len {
                let x = simplex_point(&verts, &mut rng);
                let v = f.eval(&x) * g.eval(&x).conj();
                acc[0] += v.re;
                acc[1] += v.im;
                acc[2] += v.re * v.re;
                acc[3] += v.im * v.im;
            }
            acc
        })
        .collect();
    let mut tot = [0.0; 4];
    for p in &partials {
        for k in 0..4 {
            tot[k] += p[k];
        }
    }
    let n = ctx.samples as f64;
    let (mre, mim) = (tot[0] / n, tot[1] / n);
    let var = (tot[2] / n - mre * mre) + (tot[3] / n - mim * mim);
    let stderr = volume * (var.max(0.0) / n).sqrt();
    let estimate = [volume * mre, volume * mim];
    let expected = if lambda == lambda2 && !f.vanishes_identically() {
        let count = match kind {
            Kind::C => rs.weyl_order() / rs.stabilizer_order(lambda),
            Kind::S => rs.weyl_order(),
        };
        count as f64 * volume
    } else {
        0.0
    };
    let err = Complex::new(estimate[0] - expected, estimate[1]).norm();
    let pass = if expected > 0.0 {
        err / expected <= ctx.tolerance
    } else {
        err <= 3.0 * stderr
    };
    Ok(QuadratureReport {
        kind,
        left: lambda.clone(),
        right: lambda2.clone(),
        estimate,
        stderr,
        expected,
        samples: ctx.samples,
        seed: ctx.seed,
        pass,
    })
}

/// The orbit function as a Laurent polynomial in `e^{2πi x_j}`: one monomial
/// per orbit point, coefficient `±1`.
pub fn laurent_form(rs: &RootSystem, kind: Kind, lambda: &Weight) -> Result<IntPoly> {
    let f = OrbitFunction::new(rs, kind, lambda)?;
    Ok(Polynomial::from_terms(
        rs.rank(),
        f.points.into_iter().map(|(mu, s)| (mu, BigInt::from(s))),
    ))
}

/// Reads a W-invariant (or anti-invariant) Laurent polynomial back as a
/// combination of orbit functions, from its coefficients at dominant
/// (resp. strictly dominant) exponents.
pub fn regroup(poly: &IntPoly, kind: Kind) -> OrbitCombination {
    let mut out = OrbitCombination::new(kind);
    for (e, c) in poly.terms() {
        let keep = match kind {
            Kind::C => e.iter().all(|&k| k >= 0),
            Kind::S => e.iter().all(|&k| k > 0),
        };
        if keep {
            out.add(Weight(e.clone()), c.to_i64().expect("coefficient fits"));
        }
    }
    out
}

/// Multiplicities of `λ` from the exact quotient `S_{λ+ρ} / S_ρ` of Laurent
/// polynomials.
pub fn character_by_division(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    rs.check_dominant(lambda)?;
    let rho = rs.rho();
    let num = laurent_form(rs, Kind::S, &lambda.add(&rho))?;
    let den = laurent_form(rs, Kind::S, &rho)?;
    let q = num.div_exact(&den)?;
    Ok(regroup(&q, Kind::C)
        .terms
        .into_iter()
        .map(|(w, c)| (w, c as u64))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Trig {
    /// `coeff · cos(2π⟨μ, x⟩)`
    Cos,
    /// `coeff · i · sin(2π⟨μ, x⟩)`
    ISin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrigTerm {
    pub coeff: i64,
    pub trig: Trig,
    pub freq: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CosineForm {
    Supported(Vec<TrigTerm>),
    /// The orbit is not closed under `μ ↦ −μ`.
    Unsupported,
}

impl CosineForm {
    pub fn eval(&self, x: &[f64]) -> Option<Complex<f64>> {
        let CosineForm::Supported(terms) = self else {
            return None;
        };
        Some(terms.iter().fold(Complex::new(0.0, 0.0), |acc, t| {
            let th = std::f64::consts::TAU * t.freq.pair(x);
            acc + match t.trig {
                Trig::Cos => Complex::new(t.coeff as f64 * th.cos(), 0.0),
                Trig::ISin => Complex::new(0.0, t.coeff as f64 * th.sin()),
            }
        }))
    }

    /// All terms are cosines, so the function is real.
    pub fn is_real(&self) -> bool {
        matches!(self, CosineForm::Supported(ts) if ts.iter().all(|t| t.trig == Trig::Cos))
    }
}

/// Pairs `μ` with `−μ` into cosine and sine terms when the orbit allows it.
pub fn cosine_form(rs: &RootSystem, kind: Kind, lambda: &Weight) -> Result<CosineForm> {
    let f = OrbitFunction::new(rs, kind, lambda)?;
    let signs: HashMap<&Vec<i32>, i8> = f.points.iter().map(|(m, s)| (m, *s)).collect();
    let mut terms = Vec::new();
    for (mu, s) in &f.points {
        let neg: Vec<i32> = mu.iter().map(|c| -c).collect();
        let Some(&t) = signs.get(&neg) else {
            return Ok(CosineForm::Unsupported);
        };
        if &neg == mu {
            terms.push(TrigTerm {
                coeff: *s as i64,
                trig: Trig::Cos,
                freq: Weight(mu.clone()),
            });
        } else if *mu > neg {
            let (coeff, trig) = if t == *s {
                (2 * *s as i64, Trig::Cos)
            } else {
                (2 * *s as i64, Trig::ISin)
            };
            terms.push(TrigTerm {
                coeff,
                trig,
                freq: Weight(mu.clone()),
            });
        }
    }
    Ok(CosineForm::Supported(terms))
}

/// Largest `|Im C_λ(x)|` over the given points.
pub fn max_imaginary_part(rs: &RootSystem, lambda: &Weight, points: &[Vec<f64>]) -> Result<f64> {
    let f = OrbitFunction::new(rs, Kind::C, lambda)?;
    Ok(points.iter().map(|x| f.eval(x).im.abs()).fold(0.0, f64::max))
}
