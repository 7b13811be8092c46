use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::krawtchouk::KrawtchoukContext;
use super::simplex::{LinearProgram, LpStatus, Relation, Sense};
use crate::bounds::floor_rational;
use crate::error::{Error, Result};
use crate::model::{checked_pow, DistanceDistribution};

type Q = BigRational;

fn int(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

fn qn(v: u128) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// B'_i = (1/|C|) Σ_j B_j K_i(j).
pub fn dual_distribution(dist: &DistanceDistribution, ctx: &KrawtchoukContext) -> Result<Vec<Q>> {
    if dist.length() != ctx.n() || dist.alphabet != ctx.q() {
        return Err(Error::Params(format!(
            "distribution over (n={}, q={}) used with Krawtchouk context (n={}, q={})",
            dist.length(),
            dist.alphabet,
            ctx.n(),
            ctx.q()
        )));
    }
    let size = qn(dist.code_size as u128);
    Ok((0..=ctx.n())
        .map(|i| {
            let s = dist
                .values
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (j, b)| acc + b * int(ctx.at(i, j)));
            s / &size
        })
        .collect())
}

/// An LP optimum over distance distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// B_0..B_n (empty unless optimal).
    pub b: Vec<Q>,
    pub objective: Q,
    /// B'_0..B'_n for the optimal B (empty unless optimal).
    pub dual: Vec<Q>,
}

impl LpSolution {
    fn from_outcome(status: LpStatus, b: Vec<Q>, objective: Q, ctx: &KrawtchoukContext, size: &Q) -> Self {
        let dual = if status == LpStatus::Optimal {
            (0..=ctx.n())
                .map(|i| {
                    b.iter()
                        .enumerate()
                        .fold(Q::zero(), |acc, (j, v)| acc + v * int(ctx.at(i, j)))
                        / size
                })
                .collect()
        } else {
            Vec::new()
        };
        LpSolution {
            status,
            b,
            objective,
            dual,
        }
    }
}

/// Adds Σ_{j in vars} B_j K_k(j) >= -K_k(0) for every k.
fn add_dual_rows(lp: &mut LinearProgram, ctx: &KrawtchoukContext, first: usize) {
    for k in 0..=ctx.n() {
        let coeffs = (first..=ctx.n()).map(|j| int(ctx.at(k, j))).collect();
        lp.add(coeffs, Relation::Ge, -int(ctx.at(k, 0)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelsarteBound {
    /// LP optimum of 1 + Σ_{i>=d} B_i.
    pub value: Q,
    pub bound: u128,
    pub solution: LpSolution,
}

/// Delsarte's LP bound on A_q(n, d).
pub fn delsarte_lp_max(n: usize, q: usize, d: usize) -> Result<DelsarteBound> {
    if d == 0 {
        return Err(Error::Params("minimum distance must be at least 1".into()));
    }
    let ctx = KrawtchoukContext::new(n, q)?;
    if d > n {
        let mut b = vec![Q::zero(); n + 1];
        b[0] = Q::one();
        let sol = LpSolution::from_outcome(LpStatus::Optimal, b, Q::one(), &ctx, &Q::one());
        return Ok(DelsarteBound {
            value: Q::one(),
            bound: 1,
            solution: sol,
        });
    }
    let vars = n + 1 - d;
    let mut lp = LinearProgram::new(Sense::Maximize, vec![Q::one(); vars]);
    add_dual_rows(&mut lp, &ctx, d);
    let out = lp.solve();
    if out.status != LpStatus::Optimal {
        return Err(Error::Invalid(format!(
            "Delsarte LP for (n={n}, q={q}, d={d}) ended with status {:?}",
            out.status
        )));
    }
    let value = Q::one() + &out.objective;
    let mut b = vec![Q::zero(); n + 1];
    b[0] = Q::one();
    b[d..].clone_from_slice(&out.x);
    let solution = LpSolution::from_outcome(LpStatus::Optimal, b, value.clone(), &ctx, &value);
    Ok(DelsarteBound {
        bound: floor_rational(&value),
        value,
        solution,
    })
}

fn min_b2_with(ctx: &KrawtchoukContext, m: u128) -> Result<LpSolution> {
    let n = ctx.n();
    if n < 2 {
        return Err(Error::Params(format!("min B_2 needs length >= 2, got {n}")));
    }
    if m == 0 {
        return Err(Error::Params("code size must be at least 1".into()));
    }
    let vars = n - 1;
    let mut obj = vec![Q::zero(); vars];
    obj[0] = Q::one();
    let mut lp = LinearProgram::new(Sense::Minimize, obj);
    lp.add(vec![Q::one(); vars], Relation::Eq, qn(m - 1));
    add_dual_rows(&mut lp, ctx, 2);
    let out = lp.solve();
    if out.status == LpStatus::Unbounded {
        return Err(Error::Invalid("min B_2 LP reported unbounded".into()));
    }
    let mut b = Vec::new();
    if out.status == LpStatus::Optimal {
        b = vec![Q::zero(); n + 1];
        b[0] = Q::one();
        b[2..].clone_from_slice(&out.x);
    }
    Ok(LpSolution::from_outcome(
        out.status,
        b,
        out.objective,
        ctx,
        &qn(m),
    ))
}

/// Minimum B_2 over distance distributions of length-n q-ary codes of size
/// M with B_1 = 0; `Infeasible` certifies that no such code exists.
pub fn min_b2(n: usize, q: usize, m: u128) -> Result<LpSolution> {
    let ctx = KrawtchoukContext::new(n, q)?;
    min_b2_with(&ctx, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LpBoundOptions {
    /// For s = 2, also use Λ >= M(M - a) from the length-3 Λ bound.
    pub s2_cut: bool,
    /// Round Λ = M·B_2 up to an even integer.
    pub integrality: bool,
}

impl Default for LpBoundOptions {
    fn default() -> Self {
        LpBoundOptions {
            s2_cut: true,
            integrality: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpBound {
    pub value: u64,
    /// Length of the tail code the LP runs over (s + 1).
    pub tail_length: usize,
    pub min_b2: Q,
    /// Λ lower bound used in the final check.
    pub lambda: Q,
    pub options: LpBoundOptions,
}

const MAX_LP_SCAN: u128 = 1 << 20;

/// Largest M for which some tail distribution (length s+1, B_1 = 0, size M)
/// passes |C| + M·B_2/(a(a-1)) <= a^s with B_2 minimized.
pub fn sigma_lp_bound(s: usize, a: usize, options: LpBoundOptions) -> Result<LpBound> {
    if s == 0 {
        return Err(Error::Params("s must be at least 1".into()));
    }
    let top = checked_pow(a, s)?;
    if top > MAX_LP_SCAN {
        return Err(Error::TooLarge(top));
    }
    let ctx = KrawtchoukContext::new(s + 1, a)?;
    let pairs = qn((a * (a - 1)) as u128);
    let cap = qn(top);
    let check = |m: u128| -> Option<(Q, Q)> {
        let sol = min_b2_with(&ctx, m).ok()?;
        if sol.status != LpStatus::Optimal {
            return None;
        }
        let mut lambda = qn(m) * &sol.objective;
        if options.s2_cut && s == 2 {
            let len3 = qn(m * m.saturating_sub(a as u128));
            if len3 > lambda {
                lambda = len3;
            }
        }
        if options.integrality {
            let mut l = lambda.ceil().to_integer();
            if &l % 2 != BigInt::zero() {
                l += 1;
            }
            lambda = Q::from_integer(l);
        }
        (qn(m) + &lambda / &pairs <= cap).then_some((sol.objective, lambda))
    };
    let top = top as usize;
    let value = (1..top + 1)
        .into_par_iter()
        .rev()
        .find_first(|&m| check(m as u128).is_some())
        .expect("M = 1 always passes") as u128;
    let (min_b2, lambda) = check(value).expect("rechecked");
    Ok(LpBound {
        value: value as u64,
        tail_length: s + 1,
        min_b2,
        lambda,
        options,
    })
}
