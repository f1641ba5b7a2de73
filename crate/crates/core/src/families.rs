//! The ideal families used throughout: the three-generator family `F_d`, star
//! configurations `I_{m,d}`, their triple sums `P_m`, iterated sums, and the
//! closed forms known for `F_d`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// `F_d = (x^(2d+1), x^(2d-1) y^2, y^(2d+1) z)` over the given variable names.
pub fn family_f_named(d: u32, names: [&str; 3]) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::InvalidArgument("the family F_d starts at d = 1".into()));
    }
    let ring = RingContext::new(names)?;
    let hi = 2 * d + 1;
    let lo = 2 * d - 1;
    MonomialIdeal::from_exponents(ring, &[&[hi, 0, 0], &[lo, 2, 0], &[0, hi, 1]])
}

/// `F_d` over `x, y, z`.
pub fn family_f(d: u32) -> Result<MonomialIdeal> {
    family_f_named(d, ["x", "y", "z"])
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..=n - (k - acc.len()) {
            acc.push(i);
            go(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn squarefree(dim: usize, vars: &[usize]) -> Monomial {
    let mut exps = vec![0; dim];
    for &v in vars {
        exps[v] = 1;
    }
    Monomial::from_exponents(exps)
}

fn star_in(ring: RingContext, m: u32, d: u32) -> Result<MonomialIdeal> {
    if m == 0 || m > d {
        return Err(Error::InvalidArgument(format!("need 1 <= m <= d, got m = {m}, d = {d}")));
    }
    let dim = d as usize;
    let gens = subsets(dim, (d - m + 1) as usize)
        .into_iter()
        .map(|s| squarefree(dim, &s));
    MonomialIdeal::new(ring, gens)
}

/// The star configuration `I_{m,d}` over `x1, ..., xd`: all squarefree
/// monomials of degree `d - m + 1`.
pub fn star_ideal(m: u32, d: u32) -> Result<MonomialIdeal> {
    star_in(RingContext::new((1..=d).map(|i| format!("x{i}")))?, m, d)
}

/// All `m`-subsets of the variables, as prime ideals.
pub fn star_primes(m: u32, d: u32) -> Result<Vec<MonomialIdeal>> {
    let ring = RingContext::new((1..=d).map(|i| format!("x{i}")))?;
    subsets(d as usize, m as usize)
        .into_iter()
        .map(|s| MonomialIdeal::prime(ring.clone(), &s))
        .collect()
}

/// `P_m = I_1 + I_2 + I_3` with each `I_j` a copy of `I_{m,2m-1}` on the
/// variables `x{j}_1, ..., x{j}_{2m-1}`, blocks in order.
pub fn pm_ideal(m: u32) -> Result<MonomialIdeal> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("P_m needs m >= 2, got {m}")));
    }
    let d = 2 * m - 1;
    let copies = (1..=3)
        .map(|j| star_in(RingContext::new((1..=d).map(|i| format!("x{j}_{i}")))?, m, d))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::direct_sum(&copies)
}

/// `I^[k]`: `k` copies of `I` on disjoint variables, copy `j` renaming each
/// variable `v` to `v{j}` (or `v_{j}` when `v` already ends in a digit).
pub fn iterated_sum(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("iterated sums start at k = 1".into()));
    }
    let copies = (1..=k)
        .map(|j| {
            let names = ideal.ring().names().iter().map(|v| {
                if v.ends_with(|c: char| c.is_ascii_digit()) {
                    format!("{v}_{j}")
                } else {
                    format!("{v}{j}")
                }
            });
            let ring = RingContext::new(names)?;
            ideal.embed(&ring, &(0..ideal.ring().dim()).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::direct_sum(&copies)
}

/// Membership of `x^a y^b z^c` in `F_d^n` as an integer system in the number
/// `p` of factors `x^(2d+1)` and `q` of factors `x^(2d-1) y^2`:
/// `p, q >= 0`, `n - c <= p + q <= n`,
/// `(2d+1) n - b <= (2d+1) p + (2d-1) q <= a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FdMembershipSystem {
    pub d: u32,
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl FdMembershipSystem {
    pub fn new(d: u32, n: u32, mono: &Monomial) -> Result<Self> {
        if d == 0 || n == 0 {
            return Err(Error::InvalidArgument("d and n must be at least 1".into()));
        }
        match *mono.exponents() {
            [a, b, c] => Ok(Self { d, n, a, b, c }),
            _ => Err(Error::ContextMismatch(format!(
                "F_d lives in 3 variables, monomial has {}",
                mono.nvars()
            ))),
        }
    }

    pub fn is_satisfied(&self, p: i64, q: i64) -> bool {
        let (d, n) = (i64::from(self.d), i64::from(self.n));
        let (a, b, c) = (i64::from(self.a), i64::from(self.b), i64::from(self.c));
        let weight = (2 * d + 1) * p + (2 * d - 1) * q;
        p >= 0
            && q >= 0
            && n - c <= p + q
            && p + q <= n
            && (2 * d + 1) * n - b <= weight
            && weight <= a
    }

    /// A solution with the least `p`, then least `q`. Each `p` confines `q`
    /// to an interval, so only `p` is enumerated.
    pub fn solve(&self) -> Option<(u32, u32)> {
        let (d, n) = (i64::from(self.d), i64::from(self.n));
        let (a, b, c) = (i64::from(self.a), i64::from(self.b), i64::from(self.c));
        let (hi, lo) = (2 * d + 1, 2 * d - 1);
        (0..=n).find_map(|p| {
            let q_min = 0.max(n - c - p).max(ceil_div(hi * (n - p) - b, lo));
            let q_max = (n - p).min((a - hi * p).div_euclid(lo));
            (q_min <= q_max).then_some((p as u32, q_min as u32))
        })
    }
}

fn ceil_div(x: i64, k: i64) -> i64 {
    -(-x).div_euclid(k)
}

/// Decides `x^a y^b z^c ∈ F_d^n` through [`FdMembershipSystem`].
pub fn fd_membership_oracle(d: u32, n: u32, mono: &Monomial) -> Result<bool> {
    Ok(FdMembershipSystem::new(d, n, mono)?.solve().is_some())
}

/// `F_d^(n)` in closed form: `F_d^n` for `n <= d`, and
/// `F_d^n + (x^d y)^(2d+1) F_d^(n-d-1)` beyond, with `F_d^0 = (1)`.
pub fn fd_symbolic_closed_form(d: u32, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidArgument("symbolic powers start at n = 1".into()));
    }
    let f = family_f(d)?;
    let power = f.power(n)?;
    if n <= d {
        return Ok(power);
    }
    let corner = Monomial::from_exponents(vec![d * (2 * d + 1), 2 * d + 1, 0]);
    power.add(&f.power(n - d - 1)?.scale(&corner)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::primary_decomposition;
    use crate::symbolic::{detect_blocks, SymbolicCache};

    #[test]
    fn family_instances() {
        assert_eq!(family_f(1).unwrap().to_string(), "(x^3, x*y^2, y^3*z)");
        assert_eq!(family_f(2).unwrap().to_string(), "(x^5, x^3*y^2, y^5*z)");
        assert_eq!(family_f(3).unwrap().to_string(), "(x^7, x^5*y^2, y^7*z)");
        assert_eq!(
            family_f_named(2, ["t", "u", "v"]).unwrap().to_string(),
            "(t^5, t^3*u^2, u^5*v)"
        );
        assert!(family_f(0).is_err());
    }

    #[test]
    fn family_primary_decomposition() {
        for d in 1..=3 {
            let (hi, lo) = (2 * d + 1, 2 * d - 1);
            let got: Vec<String> = primary_decomposition(&family_f(d).unwrap())
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect();
            let ring = family_f(d).unwrap().ring().clone();
            let ideal = |gens: &[&[u32]]| {
                MonomialIdeal::from_exponents(ring.clone(), gens).unwrap().to_string()
            };
            let mut expected = vec![
                ideal(&[&[hi, 0, 0], &[lo, 2, 0], &[0, hi, 0]]),
                ideal(&[&[lo, 0, 0], &[0, 0, 1]]),
            ];
            let mut got_sorted = got.clone();
            got_sorted.sort();
            expected.sort();
            assert_eq!(got_sorted, expected, "d = {d}");
        }
    }

    #[test]
    fn star_configurations() {
        assert_eq!(star_ideal(2, 3).unwrap().to_string(), "(x1*x2, x1*x3, x2*x3)");
        assert_eq!(star_ideal(1, 3).unwrap().to_string(), "(x1*x2*x3)");
        let i35 = star_ideal(3, 5).unwrap();
        assert_eq!(i35.len(), 10);
        assert!(i35.generators().iter().all(|g| g.degree() == 3));
        assert!(star_ideal(4, 3).is_err());
        assert!(star_ideal(0, 3).is_err());
    }

    #[test]
    fn star_equals_intersection_of_primes() {
        for d in 1..=5 {
            for m in 1..=d.min(3) {
                let primes = star_primes(m, d).unwrap();
                let mut acc = primes[0].clone();
                for p in &primes[1..] {
                    acc = acc.intersect(p).unwrap();
                }
                assert_eq!(acc, star_ideal(m, d).unwrap(), "m = {m}, d = {d}");
            }
        }
    }

    #[test]
    fn pm_shape() {
        let p2 = pm_ideal(2).unwrap();
        assert_eq!((p2.ring().dim(), p2.len()), (9, 9));
        assert!(p2.generators().iter().all(|g| g.degree() == 2));
        let p3 = pm_ideal(3).unwrap();
        assert_eq!((p3.ring().dim(), p3.len()), (15, 30));
        assert_eq!(detect_blocks(&p2).unwrap().len(), 3);
        assert_eq!(detect_blocks(&p3).unwrap().len(), 3);
        assert_eq!(p2.ring().names()[3], "x2_1");
        assert!(pm_ideal(1).is_err());
    }

    #[test]
    fn iterated_sums() {
        let ring = RingContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::from_exponents(ring, &[&[2, 0], &[1, 1]]).unwrap();
        assert_eq!(iterated_sum(&i, 2).unwrap().to_string(), "(x1^2, x1*y1, x2^2, x2*y2)");
        let i3 = iterated_sum(&i, 3).unwrap();
        assert_eq!(i3.to_string(), "(x1^2, x1*y1, x2^2, x2*y2, x3^2, x3*y3)");
        let i1 = iterated_sum(&i, 1).unwrap();
        assert_eq!(i1.generators(), i.generators());
        assert!(iterated_sum(&i, 0).is_err());
        let twice = iterated_sum(&star_ideal(2, 3).unwrap(), 2).unwrap();
        assert_eq!(twice.ring().names()[0], "x1_1");
    }

    /// Exhaustive search over `(p, q, s)` with `p + q + s = n`.
    fn brute_member(d: u32, n: u32, e: [u32; 3]) -> bool {
        let (hi, lo) = (2 * d + 1, 2 * d - 1);
        (0..=n).any(|p| {
            (0..=n - p).any(|q| {
                let s = n - p - q;
                hi * p + lo * q <= e[0] && 2 * q + hi * s <= e[1] && s <= e[2]
            })
        })
    }

    #[test]
    fn membership_system_matches_brute_force() {
        for d in 1..=2 {
            for n in 1..=3 {
                let bound = (2 * d + 1) * n;
                for a in 0..=bound {
                    for b in 0..=bound {
                        for c in 0..=n {
                            let m = Monomial::from_exponents(vec![a, b, c]);
                            let sys = FdMembershipSystem::new(d, n, &m).unwrap();
                            let expected = brute_member(d, n, [a, b, c]);
                            assert_eq!(sys.solve().is_some(), expected, "{d} {n} {a} {b} {c}");
                            if let Some((p, q)) = sys.solve() {
                                assert!(sys.is_satisfied(p.into(), q.into()));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let m = |e: &[u32]| Monomial::from_exponents(e.to_vec());
        assert!(!fd_membership_oracle(1, 2, &m(&[3, 3, 0])).unwrap());
        assert!(fd_membership_oracle(1, 1, &m(&[3, 0, 0])).unwrap());
        assert!(!fd_membership_oracle(2, 3, &m(&[10, 5, 0])).unwrap());
        assert!(fd_membership_oracle(1, 1, &m(&[1, 1])).is_err());
        assert!(fd_membership_oracle(0, 1, &m(&[1, 1, 1])).is_err());
    }

    #[test]
    fn closed_form_small_cases() {
        let f1 = family_f(1).unwrap();
        let extra = MonomialIdeal::from_exponents(f1.ring().clone(), &[&[3, 3, 0]]).unwrap();
        assert_eq!(fd_symbolic_closed_form(1, 2).unwrap(), f1.power(2).unwrap().add(&extra).unwrap());
        let f2 = family_f(2).unwrap();
        assert_eq!(fd_symbolic_closed_form(2, 2).unwrap(), f2.power(2).unwrap());
        let extra = MonomialIdeal::from_exponents(f2.ring().clone(), &[&[10, 5, 0]]).unwrap();
        assert_eq!(fd_symbolic_closed_form(2, 3).unwrap(), f2.power(3).unwrap().add(&extra).unwrap());
    }

    #[test]
    fn corner_witness_separates_symbolic_from_ordinary() {
        let cache = SymbolicCache::new();
        for d in 1..=3 {
            let f = family_f(d).unwrap();
            let w = Monomial::from_exponents(vec![d * (2 * d + 1), 2 * d + 1, 0]);
            assert!(cache.symbolic_contains(&f, d + 1, &w).unwrap());
            assert!(!f.power_contains(&w, d + 1).unwrap());
            assert!(!fd_membership_oracle(d, d + 1, &w).unwrap());
        }
    }
}
