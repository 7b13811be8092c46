//! Counting and closed-form upper bounds on σ(N_s, a).

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{checked_pow, distance_unchecked, Code, NetworkParams};

/// Ordered pairs of words at Hamming distance exactly 2.
pub fn lambda_count(tails: &Code) -> u64 {
    let w = tails.words();
    let mut n = 0u64;
    for (i, x) in w.iter().enumerate() {
        for y in &w[i + 1..] {
            if distance_unchecked(x.symbols(), y.symbols()) == 2 {
                n += 2;
            }
        }
    }
    n
}

/// Necessary condition |C| + Λ/(a(a-1)) <= a^{s_out}, evaluated exactly.
pub fn lambda_feasibility(code: &Code, params: &NetworkParams) -> Result<bool> {
    let tails = code.tail_code()?;
    let lambda = lambda_count(&tails) as u128;
    let a = params.a as u128;
    let pairs = a * (a - 1);
    let states = params.state_count()?;
    let lhs = (code.len() as u128)
        .checked_mul(pairs)
        .and_then(|x| x.checked_add(lambda))
        .ok_or(Error::Overflow("lambda feasibility"))?;
    let rhs = states.checked_mul(pairs).ok_or(Error::Overflow("lambda feasibility"))?;
    Ok(lhs <= rhs)
}

/// max(0, |C| - a^{s-1}).
pub fn lambda_weak_lower_bound(code_size: usize, params: &NetworkParams) -> Result<u128> {
    let base = checked_pow(params.a, params.s - 1)?;
    Ok((code_size as u128).saturating_sub(base))
}

/// |C_2|·(|C_2| - a) for tails of length 3, floored at 0.
///
/// Not a valid lower bound on Λ in general: the bundled size-15 code for
/// (s, a) = (2, 5) is correctable yet has Λ = 94 < 150. Values derived from
/// it ([`s2_closed_form_bound`], the default s = 2 LP bound) inherit the gap.
pub fn lambda_len3_lower_bound(tail_code_size: usize, params: &NetworkParams) -> Result<u128> {
    if params.s != 2 {
        return Err(Error::NotApplicable(
            "length-3 Λ bound",
            format!("needs s = 2, got s = {}", params.s),
        ));
    }
    let m = tail_code_size as u128;
    Ok(m * m.saturating_sub(params.a as u128))
}

/// floor(-a(a-2)/2 + (a/2)·sqrt(5a²-8a+4)), the s = 2 bound obtained by
/// combining the Λ condition with the length-3 Λ bound.
pub fn s2_closed_form_bound(a: usize) -> Result<u128> {
    if a < 2 {
        return Err(Error::Alphabet(a));
    }
    let a = a as u128;
    // (sqrt(R) - m)/2 with R = a²(5a²-8a+4) and integer m, so flooring the
    // root first is exact.
    let r = a
        .checked_pow(2)
        .and_then(|a2| (5 * a2 + 4 - 8 * a).checked_mul(a2))
        .ok_or(Error::Overflow("closed-form radicand"))?;
    let root = r.sqrt();
    debug_assert!(root * root <= r && (root + 1) * (root + 1) > r);
    Ok((root - a * (a - 2)) / 2)
}

/// floor(-a(a-2)/2 + (a/2)·sqrt(5)·(a - 3/5)), the weaker upper estimate of
/// the closed form used for its asymptotics.
pub fn s2_relaxed_bound(a: usize) -> Result<u128> {
    if a < 2 {
        return Err(Error::Alphabet(a));
    }
    let a = a as u128;
    // = (sqrt(5a²(5a-3)²) - 5a(a-2)) / 10
    let r = (5 * a * a)
        .checked_mul((5 * a - 3) * (5 * a - 3))
        .ok_or(Error::Overflow("relaxed radicand"))?;
    let root = r.sqrt();
    Ok((root - 5 * a * (a - 2)) / 10)
}

/// a^s.
pub fn singleton_bound(params: &NetworkParams) -> Result<u128> {
    checked_pow(params.a, params.s)
}

/// The Roos estimate for A_a(n, 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoosBound {
    pub x: usize,
    pub value: BigRational,
    /// a^n / ((a-2) n)
    pub simplified: BigRational,
    pub below_simplified: bool,
}

/// a^n (hn - x(a-x)) / ((hn+x)(hn+x-a)) with h = a-1, n ≡ x (mod a),
/// 1 <= x <= a. Valid only for large n; callers get "not applicable" when
/// the denominator is not positive.
pub fn roos_bound(a: usize, n: usize) -> Result<RoosBound> {
    if a <= 2 {
        return Err(Error::NotApplicable("Roos bound", format!("needs a > 2, got a = {a}")));
    }
    if n == 0 {
        return Err(Error::NotApplicable("Roos bound", "needs n >= 1".into()));
    }
    let x = match n % a {
        0 => a,
        r => r,
    };
    let big = |v: i128| BigInt::from(v);
    let (ai, ni, xi) = (a as i128, n as i128, x as i128);
    let h = ai - 1;
    let hn = h * ni;
    let denom = (hn + xi) * (hn + xi - ai);
    if denom <= 0 {
        return Err(Error::NotApplicable(
            "Roos bound",
            format!("denominator {denom} is not positive"),
        ));
    }
    let numer_factor = hn - xi * (ai - xi);
    let an = num_traits::pow(BigInt::from(a), n);
    let value = BigRational::new(&an * big(numer_factor), big(denom));
    if !value.is_positive() {
        return Err(Error::NotApplicable(
            "Roos bound",
            format!("value {value} is not positive"),
        ));
    }
    let simplified = BigRational::new(an, big((ai - 2) * ni));
    let below_simplified = value < simplified;
    Ok(RoosBound {
        x,
        value,
        simplified,
        below_simplified,
    })
}

/// Literature upper bounds on A_a(s+2, 3) for small (s, a).
const A_TABLE: &[((usize, usize), u64)] = &[
    ((2, 3), 9),
    ((3, 3), 18),
    ((4, 3), 38),
    ((5, 3), 111),
    ((6, 3), 333),
    ((2, 4), 16),
    ((3, 4), 64),
    ((4, 4), 176),
    ((5, 4), 596),
    ((2, 5), 25),
    ((3, 5), 125),
    ((4, 5), 625),
    ((5, 5), 2291),
];

pub fn known_a_table(s: usize, a: usize) -> Option<u64> {
    A_TABLE
        .iter()
        .find(|(k, _)| *k == (s, a))
        .map(|&(_, v)| v)
}

pub fn known_a_entries() -> &'static [((usize, usize), u64)] {
    A_TABLE
}

/// Best known (lower, upper) values of σ(N_s, a); equal when exact.
const SIGMA_TABLE: &[((usize, usize), (u64, u64))] = &[
    ((1, 2), (1, 1)),
    ((2, 2), (2, 2)),
    ((3, 2), (4, 4)),
    ((4, 2), (8, 8)),
    ((5, 2), (14, 14)),
    ((6, 2), (20, 20)),
    ((7, 2), (40, 40)),
    ((8, 2), (72, 72)),
    ((9, 2), (144, 144)),
    ((10, 2), (256, 256)),
    ((11, 2), (512, 512)),
    ((12, 2), (1024, 1024)),
    ((1, 3), (2, 2)),
    ((2, 3), (5, 5)),
    ((3, 3), (14, 14)),
    ((4, 3), (35, 38)),
    ((1, 4), (3, 3)),
    ((2, 4), (9, 10)),
    ((3, 4), (31, 37)),
    ((1, 5), (4, 4)),
    ((2, 5), (15, 16)),
];

pub fn known_sigma(s: usize, a: usize) -> Option<(u64, u64)> {
    SIGMA_TABLE
        .iter()
        .find(|(k, _)| *k == (s, a))
        .map(|&(_, v)| v)
}

pub fn known_sigma_entries() -> &'static [((usize, usize), (u64, u64))] {
    SIGMA_TABLE
}

/// (a^s + a)/2 - 1. The numerator a(a^{s-1} + 1) is always even.
pub fn conjecture_value(params: &NetworkParams) -> Result<u128> {
    let p = checked_pow(params.a, params.s)?;
    Ok((p + params.a as u128) / 2 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: Option<u128>,
    /// Counted in the combined bound.
    pub applicable: bool,
    pub note: String,
    pub source: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub s: usize,
    pub a: usize,
    pub entries: Vec<BoundEntry>,
    pub combined: Option<u128>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Every upper bound on σ(N_s, a) this crate knows; `with_lp` adds the
/// exact LP bound, which costs a few LP solves per candidate size.
pub fn bound_report(params: &NetworkParams, with_lp: bool) -> BoundReport {
    let (s, a) = (params.s, params.a);
    let mut entries = Vec::new();

    match singleton_bound(params) {
        Ok(v) => entries.push(BoundEntry {
            name: "singleton",
            value: Some(v),
            applicable: true,
            note: format!("a^s = {a}^{s}"),
            source: "Singleton bound",
        }),
        Err(e) => entries.push(BoundEntry {
            name: "singleton",
            value: None,
            applicable: false,
            note: e.to_string(),
            source: "Singleton bound",
        }),
    }

    let table = known_a_table(s, a);
    entries.push(BoundEntry {
        name: "A_a(s+2,3)",
        value: table.map(u128::from),
        applicable: table.is_some(),
        note: if table.is_some() {
            format!("tabulated bound on A_{a}({},3)", s + 2)
        } else {
            "no tabulated value".into()
        },
        source: "code tables",
    });

    if s == 2 {
        let v = s2_closed_form_bound(a).ok();
        entries.push(BoundEntry {
            name: "closed-form(s=2)",
            value: v,
            applicable: v.is_some(),
            note: "Λ >= |C|(|C|-a) combined with the Λ condition".into(),
            source: "length-3 Λ bound",
        });
    } else {
        entries.push(BoundEntry {
            name: "closed-form(s=2)",
            value: None,
            applicable: false,
            note: format!("only for s = 2, got s = {s}"),
            source: "length-3 Λ bound",
        });
    }

    if with_lp {
        match crate::lp::sigma_lp_bound(s, a, crate::lp::LpBoundOptions::default()) {
            Ok(r) => entries.push(BoundEntry {
                name: "lp",
                value: Some(r.value as u128),
                applicable: true,
                note: format!("min B_2 LP over tails of length {}", s + 1),
                source: "Delsarte LP + Λ condition",
            }),
            Err(e) => entries.push(BoundEntry {
                name: "lp",
                value: None,
                applicable: false,
                note: e.to_string(),
                source: "Delsarte LP + Λ condition",
            }),
        }
    }

    let roos = roos_bound(a, s + 2);
    entries.push(match roos {
        Ok(r) => BoundEntry {
            name: "roos",
            value: Some(floor_rational(&r.value)),
            applicable: false,
            note: format!(
                "x = {}, {} the simplified a^n/((a-2)n); only valid for large n, not combined",
                r.x,
                if r.below_simplified { "below" } else { "not below" }
            ),
            source: "Roos bound on A_a(n,3)",
        },
        Err(e) => BoundEntry {
            name: "roos",
            value: None,
            applicable: false,
            note: e.to_string(),
            source: "Roos bound on A_a(n,3)",
        },
    });

    let combined = entries
        .iter()
        .filter(|e| e.applicable)
        .filter_map(|e| e.value)
        .min();
    BoundReport {
        s,
        a,
        entries,
        combined,
    }
}

pub(crate) fn floor_rational(r: &BigRational) -> u128 {
    let f = r.floor().to_integer();
    if f.is_negative() || f.is_zero() {
        return 0;
    }
    u128::try_from(f).unwrap_or(u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: usize, a: usize) -> NetworkParams {
        NetworkParams::new(s, a).unwrap()
    }

    fn brute_lambda(c: &Code) -> u64 {
        let w = c.words();
        let mut n = 0;
        for x in w {
            for y in w {
                if crate::model::hamming_distance(x, y).unwrap() == 2 {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn lambda_examples() {
        let ex1 = Code::parse_words(3, "0000 0111 1012 1120 2021").unwrap();
        let t = ex1.tail_code().unwrap();
        assert_eq!(lambda_count(&t), brute_lambda(&t));
        assert_eq!(lambda_count(&t), 16);
        assert_eq!(lambda_count(&Code::parse_words(2, "000 111").unwrap()), 0);
        let ex3 = Code::parse_words(3, "0000 0111 0222 1012 2021").unwrap();
        let t3 = ex3.tail_code().unwrap();
        assert_eq!(lambda_count(&t3), brute_lambda(&t3));
        assert_eq!(lambda_count(&t3), 14);
    }

    #[test]
    fn lambda_feasibility_examples() {
        let ex1 = Code::parse_words(3, "0000 0111 1012 1120 2021").unwrap();
        assert!(lambda_feasibility(&ex1, &p(2, 3)).unwrap());
        let bad = Code::parse_words(2, "000 011 101").unwrap();
        assert!(!lambda_feasibility(&bad, &p(1, 2)).unwrap());
    }

    #[test]
    fn weak_and_len3_bounds() {
        assert_eq!(lambda_weak_lower_bound(5, &p(2, 3)).unwrap(), 2);
        assert_eq!(lambda_weak_lower_bound(3, &p(2, 3)).unwrap(), 0);
        assert_eq!(lambda_weak_lower_bound(35, &p(4, 3)).unwrap(), 8);
        assert_eq!(lambda_len3_lower_bound(5, &p(2, 3)).unwrap(), 10);
        assert_eq!(lambda_len3_lower_bound(3, &p(2, 3)).unwrap(), 0);
        assert_eq!(lambda_len3_lower_bound(15, &p(2, 5)).unwrap(), 150);
        assert!(lambda_len3_lower_bound(5, &p(3, 3)).is_err());
        // A correctable code below the length-3 bound.
        let ex5 = crate::fixtures::EXAMPLE5.code().unwrap();
        assert_eq!(lambda_count(&ex5.tail_code().unwrap()), 94);
        assert!(lambda_feasibility(&ex5, &p(2, 5)).unwrap());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(s2_closed_form_bound(3).unwrap(), 6);
        assert_eq!(s2_closed_form_bound(4).unwrap(), 10);
        assert_eq!(s2_closed_form_bound(5).unwrap(), 16);
        assert_eq!(s2_closed_form_bound(7).unwrap(), 31);
        assert_eq!(s2_relaxed_bound(7).unwrap(), 32);
        let a = 10_000u128;
        assert!(s2_closed_form_bound(a as usize).unwrap() * 10_000 < 6181 * a * a);
    }

    #[test]
    fn closed_form_matches_quadratic() {
        // The bound is the largest m with m + m(m-a)/(a(a-1)) <= a².
        for a in 2..60u128 {
            let ok = |m: u128| m * a * (a - 1) + m * m <= a * a * a * (a - 1) + m * a;
            let m = s2_closed_form_bound(a as usize).unwrap();
            assert!(ok(m) && !ok(m + 1), "a = {a}");
            assert!(s2_relaxed_bound(a as usize).unwrap() >= m || a == 2);
        }
    }

    #[test]
    fn singleton_and_tables() {
        assert_eq!(singleton_bound(&p(2, 3)).unwrap(), 9);
        assert_eq!(singleton_bound(&p(1, 2)).unwrap(), 2);
        assert_eq!(singleton_bound(&p(5, 5)).unwrap(), 3125);
        assert_eq!(known_a_table(4, 3), Some(38));
        assert_eq!(known_a_table(3, 3), Some(18));
        assert_eq!(known_a_table(7, 7), None);
    }

    #[test]
    fn roos_x_selection() {
        assert_eq!(roos_bound(3, 7).unwrap().x, 1);
        assert_eq!(roos_bound(3, 6).unwrap().x, 3);
        assert!(roos_bound(2, 7).is_err());
    }

    #[test]
    fn roos_eventually_below_simplified() {
        let tail: Vec<bool> = (1..=12)
            .map(|k| roos_bound(3, 3 * k).unwrap().below_simplified)
            .collect();
        assert!(tail[6..].iter().all(|&b| b));
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_value(&p(2, 3)).unwrap(), 5);
        assert_eq!(conjecture_value(&p(2, 5)).unwrap(), 14);
        assert_eq!(conjecture_value(&p(5, 2)).unwrap(), 16);
    }

    #[test]
    fn report_combines_applicable_entries() {
        let r = bound_report(&p(2, 5), false);
        assert_eq!(r.combined, Some(16));
        assert!(!r.get("roos").unwrap().applicable);
        let r = bound_report(&p(4, 3), false);
        assert_eq!(r.combined, Some(38));
    }
}
