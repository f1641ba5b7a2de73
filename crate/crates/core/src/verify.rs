//! The reproduction suite: every computational claim about the example ideal,
//! the `F_d` family, block sums, star configurations and the bound arithmetic,
//! checked at desk scale with exact arithmetic.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::decomposition::primary_decomposition;
use crate::error::{Error, Result};
use crate::families::{
    family_f, family_f_named, fd_symbolic_closed_form, iterated_sum, pm_ideal, star_ideal,
};
use crate::ideal::MonomialIdeal;
use crate::io::{parse_ideal, parse_monomial, Emit};
use crate::monomial::{Monomial, RingContext};
use crate::rational::{integer, ratio, Rational};
use crate::resurgence::{
    check_containment, evaluate_max_sup, iterated_sum_bound, product_witness, res_set_11,
    rho_a_star_configuration, rho_a_sum_reference, scan, sharp_sum_bound, BoundRule, ScanOptions,
    Verdict, WitnessPart,
};
use crate::symbolic::{detect_blocks, SymbolicCache};

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Replaces `(x^3, x*y^2, y^3*z)` in the example-ideal item, for negative
    /// controls.
    pub example_override: Option<MonomialIdeal>,
    /// Worker threads for running items; 0 or 1 means sequential.
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyItem {
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub items: Vec<VerifyItem>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl Emit for VerifyReport {
    fn emit_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let tag = if item.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}: {}\n", item.anchor, item.detail));
        }
        let passed = self.items.iter().filter(|i| i.passed).count();
        out.push_str(&format!("{passed}/{} items passed\n", self.items.len()));
        out
    }

    fn json_body(&self) -> Value {
        json!({
            "kind": "verify",
            "passed": self.all_passed(),
            "items": self.items.iter().map(|i| json!({
                "anchor": i.anchor,
                "passed": i.passed,
                "detail": i.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed: true,
        detail: detail.into(),
    })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed: false,
        detail: detail.into(),
    })
}

type Check = fn(&VerifyOptions) -> Result<Outcome>;

const ITEMS: &[(&str, Check)] = &[
    ("example ideal witness x^3y^3 in I^(2) minus I^2", example_witness),
    ("example ideal containment I^(3) in I^2", example_containment),
    ("F_d primary decomposition", fd_primary_decomposition),
    ("F_d symbolic power closed form", fd_closed_form),
    ("F_d corner witness (x^d y)^(2d+1)", fd_corner_witness),
    ("binomial expansion for block sums", binomial_expansion),
    ("sum of F_1 and a copy of F_2 reaches 5/4", remark_scan),
    ("F_d has no ratio above 1 on a 6x6 grid", fd_scan),
    ("product witnesses for two example copies", two_copy_product),
    ("product witnesses for P_m give ratio 3m/4", pm_product),
    ("star configuration equals the intersection of primes", star_intersection),
    ("x1...x_(2m-1) in I^(m) minus I^2 for star configurations", star_corollary),
    ("asymptotic resurgence reference values", rho_a_references),
    ("sharp bound for sums of ideals", sharp_bound),
    ("sup evaluation matches the closed form", sup_evaluation),
    ("iterated sums stay below 2a", iterated_bound),
    ("resurgence set for two ideals of resurgence 1", res_set),
    ("iterated sum construction", iterated_construction),
];

/// Runs every item; output order is fixed regardless of thread count.
pub fn verify_paper(options: &VerifyOptions) -> Result<VerifyReport> {
    let run = |(anchor, check): &(&'static str, Check)| {
        let (passed, detail) = match check(options) {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        VerifyItem {
            anchor,
            passed,
            detail,
        }
    };
    let items = if options.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start threads: {e}")))?
            .install(|| ITEMS.par_iter().map(run).collect())
    } else {
        ITEMS.iter().map(run).collect()
    };
    Ok(VerifyReport { items })
}

fn f1_plus_f2_copy() -> Result<MonomialIdeal> {
    MonomialIdeal::direct_sum(&[family_f(1)?, family_f_named(2, ["t", "u", "v"])?])
}

fn example_witness(options: &VerifyOptions) -> Result<Outcome> {
    let ideal = match &options.example_override {
        Some(i) => i.clone(),
        None => family_f(1)?,
    };
    let ring = ideal.ring().clone();
    let expected = parse_monomial(&ring, "x^3*y^3")?;
    let c = check_containment(&ideal, 2, 2)?;
    match &c.witness {
        Some(w) if *w == expected && c.recheck(&ideal, &SymbolicCache::new())? => {
            pass(format!("witness {} certified", ring.format(w)))
        }
        Some(w) => fail(format!("witness {} found instead of x^3*y^3", ring.format(w))),
        None => fail(format!("{ideal}: I^(2) is contained in I^2, no witness")),
    }
}

fn example_containment(_: &VerifyOptions) -> Result<Outcome> {
    let c = check_containment(&family_f(1)?, 3, 2)?;
    if c.is_contained() {
        pass("every generator of I^(3) lies in I^2")
    } else {
        fail("I^(3) is not contained in I^2")
    }
}

fn fd_primary_decomposition(_: &VerifyOptions) -> Result<Outcome> {
    for d in 1..=3u32 {
        let f = family_f(d)?;
        let (hi, lo) = (2 * d + 1, 2 * d - 1);
        let mut expected = vec![
            MonomialIdeal::from_exponents(f.ring().clone(), &[&[hi, 0, 0], &[lo, 2, 0], &[0, hi, 0]])?,
            MonomialIdeal::from_exponents(f.ring().clone(), &[&[lo, 0, 0], &[0, 0, 1]])?,
        ];
        let mut got = primary_decomposition(&f)?;
        expected.sort_by_key(ToString::to_string);
        got.sort_by_key(ToString::to_string);
        if got != expected {
            return fail(format!("d = {d}: got {got:?}"));
        }
    }
    pass("two primary components for d = 1, 2, 3")
}

fn fd_closed_form(_: &VerifyOptions) -> Result<Outcome> {
    let cache = SymbolicCache::new();
    for d in 1..=3 {
        let f = family_f(d)?;
        for n in 1..=6 {
            let direct = cache.symbolic_power(&f, n)?;
            if direct != fd_symbolic_closed_form(d, n)? {
                return fail(format!("d = {d}, n = {n}: closed form differs"));
            }
            if n <= d && direct != cache.power(&f, n)? {
                return fail(format!("d = {d}, n = {n}: symbolic and ordinary powers differ"));
            }
        }
    }
    pass("d = 1..3, n = 1..6")
}

fn corner(d: u32) -> Monomial {
    Monomial::from_exponents(vec![d * (2 * d + 1), 2 * d + 1, 0])
}

fn fd_corner_witness(_: &VerifyOptions) -> Result<Outcome> {
    for d in 1..=3 {
        let f = family_f(d)?;
        let c = check_containment(&f, d + 1, d + 1)?;
        let w = corner(d);
        let cache = SymbolicCache::new();
        if !cache.symbolic_power(&f, d + 1)?.contains_monomial(&w)? || f.power_contains(&w, d + 1)? {
            return fail(format!("d = {d}: {} does not separate", f.ring().format(&w)));
        }
        if c.is_contained() {
            return fail(format!("d = {d}: containment reported"));
        }
    }
    pass("d = 1..3")
}

fn binomial_expansion(_: &VerifyOptions) -> Result<Outcome> {
    let cache = SymbolicCache::new();
    let two_f1 = MonomialIdeal::direct_sum(&[family_f(1)?, family_f_named(1, ["u", "v", "w"])?])?;
    let cases = [(two_f1, 4), (f1_plus_f2_copy()?, 4), (pm_ideal(2)?, 3)];
    for (ideal, smax) in &cases {
        let blocks = detect_blocks(ideal)?;
        for s in 1..=*smax {
            if cache.symbolic_power_blockwise(&blocks, s)? != cache.symbolic_power(ideal, s)? {
                return fail(format!("{ideal}: s = {s} differs"));
            }
        }
    }
    pass("two 2-block sums up to s = 4, P_2 up to s = 3")
}

fn remark_scan(options: &VerifyOptions) -> Result<Outcome> {
    let p = f1_plus_f2_copy()?;
    let report = scan(
        &p,
        ScanOptions {
            threads: options.threads,
            ..ScanOptions::new(5, 4)
        },
    )?;
    if report.best_ratio != Some(ratio(5, 4)) {
        return fail(format!("best ratio {:?}", report.best_ratio));
    }
    let expected = parse_monomial(p.ring(), "x^3*y^3*t^10*u^5")?;
    if report.cell(5, 4).and_then(|c| c.witness.as_ref()) != Some(&expected) {
        return fail("unexpected witness at (5, 4)");
    }
    for n in 2..=4 {
        if !report.cell(n, n - 1).is_some_and(|c| c.verdict == Verdict::Contained) {
            return fail(format!("P^({n}) not contained in P^{}", n - 1));
        }
    }
    pass("best ratio 5/4 at (5, 4), witness x^3*y^3*t^10*u^5")
}

fn fd_scan(_: &VerifyOptions) -> Result<Outcome> {
    for d in 1..=2 {
        let report = scan(&family_f(d)?, ScanOptions::new(6, 6))?;
        if report.best_ratio != Some(integer(1)) {
            return fail(format!("d = {d}: best ratio {:?}", report.best_ratio));
        }
    }
    pass("best ratio exactly 1 for d = 1, 2")
}

fn two_copy_product(_: &VerifyOptions) -> Result<Outcome> {
    let ring = RingContext::new(["x", "y", "z", "u", "v", "w"])?;
    let left = parse_ideal(&ring, "(x^3, x*y^2, y^3*z)")?;
    let right = parse_ideal(&ring, "(u^3, u*v^2, v^3*w)")?;
    let c = product_witness(&[
        WitnessPart { ideal: left, m: 2, r: 2, witness: parse_monomial(&ring, "x^3*y^3")? },
        WitnessPart { ideal: right, m: 2, r: 2, witness: parse_monomial(&ring, "u^3*v^3")? },
    ])?;
    if (c.m, c.r) == (4, 3) {
        pass("P^(4) not in P^3, witness x^3*y^3*u^3*v^3")
    } else {
        fail(format!("certificate at ({}, {})", c.m, c.r))
    }
}

fn pm_parts(m: u32) -> Result<Vec<WitnessPart>> {
    let p = pm_ideal(m)?;
    let ring = p.ring().clone();
    let blocks = detect_blocks(&p)?;
    Ok(blocks
        .blocks()
        .iter()
        .map(|b| {
            let mut exps = vec![0; ring.dim()];
            for &v in &b.vars {
                exps[v] = 1;
            }
            WitnessPart {
                ideal: b.ideal.clone(),
                m,
                r: 2,
                witness: Monomial::from_exponents(exps),
            }
        })
        .collect())
}

fn pm_product(_: &VerifyOptions) -> Result<Outcome> {
    for m in 2..=3u32 {
        let c = product_witness(&pm_parts(m)?)?;
        if c.ratio() != ratio(3 * i64::from(m), 4) {
            return fail(format!("m = {m}: ratio {}", c.ratio()));
        }
    }
    pass("P_2^(6) not in P_2^4 and P_3^(9) not in P_3^4")
}

fn star_intersection(_: &VerifyOptions) -> Result<Outcome> {
    for (m, d) in [(2, 3), (2, 4), (3, 5)] {
        let star = star_ideal(m, d)?;
        let primes = crate::families::star_primes(m, d)?;
        let mut acc = primes[0].clone();
        for p in &primes[1..] {
            acc = acc.intersect(p)?;
        }
        if acc != star {
            return fail(format!("(m, d) = ({m}, {d})"));
        }
    }
    pass("(2,3), (2,4), (3,5)")
}

fn star_corollary(_: &VerifyOptions) -> Result<Outcome> {
    let cache = SymbolicCache::new();
    for m in 2..=3u32 {
        let star = star_ideal(m, 2 * m - 1)?;
        let w = Monomial::from_exponents(vec![1; star.ring().dim()]);
        if !cache.symbolic_power(&star, m)?.contains_monomial(&w)? || star.power_contains(&w, 2)? {
            return fail(format!("m = {m}"));
        }
    }
    pass("m = 2, 3")
}

fn rho_a_references(_: &VerifyOptions) -> Result<Outcome> {
    let a = rho_a_star_configuration(2, 3)?;
    let b = rho_a_star_configuration(3, 5)?;
    let pm3 = ratio(9, 5);
    if a == ratio(4, 3) && b == pm3 && rho_a_sum_reference(&[a, b.clone()])? == b {
        pass("4/3 and 9/5")
    } else {
        fail("reference constants differ")
    }
}

fn sharp_bound(_: &VerifyOptions) -> Result<Outcome> {
    let one = sharp_sum_bound(&integer(1), &integer(1))?;
    let collapse = sharp_sum_bound(&integer(2), &integer(1))?;
    if one.bound == ratio(4, 3) && collapse.bound == integer(2) && collapse.rule == BoundRule::Collapse {
        pass("(1,1) gives 4/3; (2,1) collapses to 2")
    } else {
        fail("bound values differ")
    }
}

fn sup_evaluation(_: &VerifyOptions) -> Result<Outcome> {
    for p in 1..=8i64 {
        for q in 1..=8i64 {
            let a = ratio(p, 2);
            let b = ratio(q, 3);
            let e = evaluate_max_sup(&a, &b, 12)?;
            let lo = a.clone().min(b.clone());
            let hi = a.max(b);
            if hi < integer(2) * lo && (e.enumerated_max != e.closed_form || e.attained_at != Some((2, 2))) {
                return fail(format!("a = {p}/2, b = {q}/3"));
            }
        }
    }
    pass("64 rational pairs")
}

fn iterated_bound(_: &VerifyOptions) -> Result<Outcome> {
    let seeds: [Rational; 4] = [integer(1), ratio(4, 3), integer(2), ratio(5, 2)];
    for a in &seeds {
        let values = iterated_sum_bound(a, 10)?;
        if values.iter().any(|v| *v >= integer(2) * a) {
            return fail(format!("a = {a}"));
        }
    }
    let first = iterated_sum_bound(&integer(1), 3)?;
    if first != [integer(1), ratio(4, 3), ratio(14, 9)] {
        return fail("a = 1 does not start 1, 4/3, 14/9");
    }
    pass("a = 1, 4/3, 2, 5/2 up to 10 summands")
}

fn res_set(_: &VerifyOptions) -> Result<Outcome> {
    let got = res_set_11(6)?;
    let expected = [integer(1), ratio(4, 3), ratio(5, 4), ratio(6, 5), ratio(7, 6)];
    if got.iter().eq(expected.iter().collect::<std::collections::BTreeSet<_>>()) {
        pass("{1, 4/3, 5/4, 6/5, 7/6}")
    } else {
        fail(format!("{got:?}"))
    }
}

fn iterated_construction(_: &VerifyOptions) -> Result<Outcome> {
    let ring = RingContext::new(["x", "y"])?;
    let i = parse_ideal(&ring, "(x^2, x*y)")?;
    let two = iterated_sum(&i, 2)?;
    if two.to_string() == "(x1^2, x1*y1, x2^2, x2*y2)" && iterated_sum(&i, 3)?.len() == 6 {
        pass("I^[2] = (x1^2, x1*y1, x2^2, x2*y2)")
    } else {
        fail(two.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_are_distinct() {
        let mut anchors: Vec<_> = ITEMS.iter().map(|(a, _)| *a).collect();
        anchors.sort_unstable();
        anchors.dedup();
        assert_eq!(anchors.len(), ITEMS.len());
        assert!(anchors.len() >= 10);
    }

    #[test]
    fn corrupted_example_fails_with_witness() {
        let ring = RingContext::new(["x", "y", "z"]).unwrap();
        let corrupted = parse_ideal(&ring, "(x^3, x*y^2, y^4*z)").unwrap();
        let outcome = example_witness(&VerifyOptions {
            example_override: Some(corrupted),
            threads: 1,
        })
        .unwrap();
        assert!(!outcome.passed);
        assert!(outcome.detail.contains("witness") || outcome.detail.contains("contained"));
    }
}
