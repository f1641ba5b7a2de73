use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{integer, is_at_least_one, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRule {
    /// `max{a, b} >= 2 min{a, b}`: the bound collapses to `max{a, b}`.
    Collapse,
    /// Otherwise the bound is `2(a + b)/3`.
    TwoThirdsSum,
}

impl BoundRule {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundRule::Collapse => "collapse",
            BoundRule::TwoThirdsSum => "two-thirds-sum",
        }
    }
}

/// Upper bound for the resurgence of `I + J` from `a >= ρ(I)` and `b >= ρ(J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub a: Rational,
    pub b: Rational,
    pub bound: Rational,
    pub rule: BoundRule,
}

fn closed_form(a: &Rational, b: &Rational) -> Rational {
    let two_thirds = ratio(2, 3) * (a + b);
    a.max(b).clone().max(two_thirds)
}

/// `max{a, b, 2(a + b)/3}` for `a, b >= 1`.
pub fn sharp_sum_bound(a: &Rational, b: &Rational) -> Result<BoundReport> {
    if !is_at_least_one(a) || !is_at_least_one(b) {
        return Err(Error::InvalidArgument(format!(
            "resurgence values are at least 1, got a = {a}, b = {b}"
        )));
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let rule = if *hi >= integer(2) * lo {
        BoundRule::Collapse
    } else {
        BoundRule::TwoThirdsSum
    };
    Ok(BoundReport {
        a: a.clone(),
        b: b.clone(),
        bound: closed_form(a, b),
        rule,
    })
}

/// `(m a + n b)/(m + n - 1)`.
pub fn sup_term(a: &Rational, b: &Rational, m: u32, n: u32) -> Rational {
    let mq = integer(m.into());
    let nq = integer(n.into());
    (mq.clone() * a + nq.clone() * b) / (mq + nq - integer(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupEvaluation {
    pub enumerated_max: Rational,
    pub closed_form: Rational,
    /// First `(m, n)` in row-major order whose term equals the enumerated
    /// maximum; `None` when only `a` or `b` attains it.
    pub attained_at: Option<(u32, u32)>,
}

/// Enumerates `max{a, b, (m a + n b)/(m + n - 1) : 2 <= m, n <= nmax}` and
/// compares it with `max{a, b, 2(a + b)/3}`.
pub fn evaluate_max_sup(a: &Rational, b: &Rational, nmax: u32) -> Result<SupEvaluation> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::InvalidArgument("a and b must be non-negative".into()));
    }
    if nmax < 2 {
        return Err(Error::InvalidArgument("nmax must be at least 2".into()));
    }
    // Terms share the denominator q_a q_b, so they are compared as
    // unnormalized fractions (m p_a q_b + n p_b q_a) / (q_a q_b (m + n - 1)).
    let scaled_a = a.numer() * b.denom();
    let scaled_b = b.numer() * a.denom();
    let scale = a.denom() * b.denom();
    let floor = a.max(b).clone();
    let mut best_num = floor.numer() * &scale;
    let mut best_den = floor.denom().clone();
    let mut attained_at = None;
    for m in 2..=nmax {
        for n in 2..=nmax {
            let num = &scaled_a * m + &scaled_b * n;
            let den = BigInt::from(m + n - 1);
            let lhs = &num * &best_den;
            let rhs = &best_num * &den;
            if lhs > rhs || (attained_at.is_none() && lhs == rhs && !num.is_zero()) {
                best_num = num;
                best_den = den;
                attained_at = Some((m, n));
            }
        }
    }
    let best = Rational::new(best_num, best_den * scale);
    let closed = closed_form(a, b);
    if best > closed {
        return Err(Error::BoundViolation(format!(
            "enumerated {best} exceeds closed form {closed}"
        )));
    }
    Ok(SupEvaluation {
        enumerated_max: best,
        closed_form: closed,
        attained_at,
    })
}

/// Bounds for the iterated sums: `r_1 = a`, `r_{k+1} = max{a, r_k, 2(a + r_k)/3}`.
/// Every value is checked to stay strictly below `2a`.
pub fn iterated_sum_bound(a: &Rational, dmax: u32) -> Result<Vec<Rational>> {
    if !is_at_least_one(a) {
        return Err(Error::InvalidArgument(format!("a must be at least 1, got {a}")));
    }
    if dmax == 0 {
        return Err(Error::InvalidArgument("dmax must be at least 1".into()));
    }
    let ceiling = integer(2) * a;
    let mut values = vec![a.clone()];
    while values.len() < dmax as usize {
        let next = closed_form(a, values.last().unwrap());
        values.push(next);
    }
    if let Some((k, v)) = values.iter().enumerate().find(|(_, v)| **v >= ceiling) {
        return Err(Error::BoundViolation(format!(
            "iterated bound r_{} = {v} reaches 2a = {ceiling}",
            k + 1
        )));
    }
    Ok(values)
}

/// Asymptotic resurgence `m(d - m + 1)/d` of the star configuration `I_{m,d}`.
pub fn rho_a_star_configuration(m: u32, d: u32) -> Result<Rational> {
    if m == 0 || m > d {
        return Err(Error::InvalidArgument(format!("need 1 <= m <= d, got m = {m}, d = {d}")));
    }
    Ok(ratio(i64::from(m) * i64::from(d - m + 1), d.into()))
}

/// Asymptotic resurgence of a sum on disjoint variables: the maximum of the
/// summands' values.
pub fn rho_a_sum_reference(values: &[Rational]) -> Result<Rational> {
    values
        .iter()
        .max()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no summand values given".into()))
}

/// The resurgences realized by sums of two ideals of resurgence 1:
/// `{1} ∪ {(n + 1)/n : 3 <= n <= nmax}`.
pub fn res_set_11(nmax: u32) -> Result<BTreeSet<Rational>> {
    if nmax < 3 {
        return Err(Error::InvalidArgument("nmax must be at least 3".into()));
    }
    let mut set: BTreeSet<Rational> = (3..=nmax).map(|n| ratio(i64::from(n) + 1, n.into())).collect();
    set.insert(integer(1));
    Ok(set)
}
