//! Monomial ideals in canonical form and their arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingContext};

/// Candidate counts above which pairwise products are generated in parallel.
const PAR_THRESHOLD: usize = 1 << 14;

/// A monomial ideal given by its minimal generators.
///
/// Every constructor returns the canonical form: minimal generators, sorted by
/// the canonical monomial order, without duplicates. The zero ideal has no
/// generators and the unit ideal has the single generator `1`. Equality of
/// ideals is therefore equality of generator lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingContext,
    gens: Arc<[Monomial]>,
}

/// Sorts, dedups and removes every monomial divisible by another one.
pub(crate) fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    if gens.first().is_some_and(Monomial::is_one) {
        gens.truncate(1);
        return gens;
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A proper divisor has strictly smaller degree, so it was visited earlier.
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(ring: RingContext, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::from_parts(ring, gens))
    }

    pub(crate) fn from_parts(ring: RingContext, gens: Vec<Monomial>) -> Self {
        Self {
            ring,
            gens: minimal_generators(gens).into(),
        }
    }

    /// Convenience constructor from exponent vectors in context order.
    pub fn from_exponents(ring: RingContext, gens: &[&[u32]]) -> Result<Self> {
        Self::new(
            ring,
            gens.iter().map(|e| Monomial::from_exponents(e.iter().copied())),
        )
    }

    pub fn zero(ring: RingContext) -> Self {
        Self {
            ring,
            gens: Arc::new([]),
        }
    }

    pub fn unit(ring: RingContext) -> Self {
        let one = ring.one();
        Self {
            ring,
            gens: Arc::new([one]),
        }
    }

    pub fn principal(ring: RingContext, m: Monomial) -> Result<Self> {
        Self::new(ring, [m])
    }

    /// The prime generated by the variables with the given indices.
    pub fn prime(ring: RingContext, vars: &[usize]) -> Result<Self> {
        for &v in vars {
            if v >= ring.dim() {
                return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
            }
        }
        let gens = vars.iter().map(|&v| ring.var(v)).collect();
        Ok(Self::from_parts(ring, gens))
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators. The zero ideal has none.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ImproperIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::ImproperIdeal("unit"))
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )))
        }
    }

    /// Largest exponent appearing in any generator.
    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.exponents().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Flags the variables that occur in some generator.
    pub fn used_variables(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.dim()];
        for g in self.gens.iter() {
            for i in g.support() {
                used[i] = true;
            }
        }
        used
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = pairwise(&self.gens, &other.gens, Monomial::mul_unchecked)?;
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    /// `n`-th power; `power(0)` is the unit ideal. Minimalizes after each factor.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies every generator by `m`.
    pub fn scale(&self, m: &Monomial) -> Result<Self> {
        self.ring.check(m)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul_unchecked(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = pairwise(&self.gens, &other.gens, |a, b| Ok(a.lcm_unchecked(b)))?;
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Result<Self> {
        self.ring.check(m)?;
        let gens = self.gens.iter().map(|g| g.colon_unchecked(m)).collect();
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let (first, rest) = other
            .gens
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("colon by the zero ideal".into()))?;
        let mut acc = self.colon(first)?;
        for g in rest {
            acc = acc.intersect(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    /// `I : w^∞` where `w` is the product of the variables in `vars`.
    ///
    /// Iterates `I <- I : w` to a fixpoint. Each step lowers the exponents of
    /// the chosen variables by one, so the fixpoint is reached within
    /// `1 + max_exponent` steps.
    pub fn saturate(&self, vars: &[usize]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("saturation needs at least one variable".into()));
        }
        let mut w = self.ring.one();
        for &v in vars {
            if v >= self.ring.dim() {
                return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
            }
            w = w.mul_unchecked(&self.ring.var(v))?;
        }
        let w = w.squarefree_support();
        let bound = 1 + self.max_exponent() as usize;
        let mut current = self.clone();
        for _ in 0..bound {
            let next = current.colon(&w)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
        if current.colon(&w)? == current {
            Ok(current)
        } else {
            Err(Error::SaturationDiverged(bound))
        }
    }

    /// The ideal generated by the squarefree supports of the generators.
    pub fn radical(&self) -> Self {
        let gens = self.gens.iter().map(Monomial::squarefree_support).collect();
        Self::from_parts(self.ring.clone(), gens)
    }

    /// Sets every variable outside `keep` to 1 (localization at a monomial prime).
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let gens = self.gens.iter().map(|g| g.restrict(keep)).collect();
        Self::from_parts(self.ring.clone(), gens)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.ring.check(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `J ⊆ I`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens == other.gens)
    }

    /// Canonically least generator of `self` that does not lie in `other`.
    pub fn first_generator_outside(&self, other: &Self) -> Result<Option<Monomial>> {
        self.same_ring(other)?;
        Ok(self
            .gens
            .iter()
            .find(|g| !other.contains_unchecked(g))
            .cloned())
    }

    /// Decides `m ∈ I^k` without expanding the power, by searching for `k`
    /// generators whose product divides `m`.
    pub fn power_contains(&self, m: &Monomial, k: u32) -> Result<bool> {
        self.ring.check(m)?;
        if k == 0 || self.is_unit() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let mut memo = HashMap::new();
        Ok(self.order_capped(m, k, &mut memo) >= k)
    }

    /// Largest `k <= cap` with `m ∈ I^k`.
    fn order_capped(&self, m: &Monomial, cap: u32, memo: &mut HashMap<Monomial, u32>) -> u32 {
        if cap == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(m) {
            return v;
        }
        let mut best = 0;
        for g in self.gens.iter() {
            if g.divides_unchecked(m) {
                let rest = m.colon_unchecked(g);
                best = best.max(1 + self.order_capped(&rest, cap - 1, memo));
                if best >= cap {
                    break;
                }
            }
        }
        memo.insert(m.clone(), best);
        best
    }

    /// Re-expresses the ideal in `target`, sending variable `i` to `var_map[i]`.
    pub fn embed(&self, target: &RingContext, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.ring.dim() {
            return Err(Error::ContextMismatch("variable map has the wrong length".into()));
        }
        let mut seen = vec![false; target.dim()];
        for &t in var_map {
            if t >= target.dim() || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidArgument("variable map is not injective".into()));
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0; target.dim()];
                for (i, &e) in g.exponents().iter().enumerate() {
                    exps[var_map[i]] = e;
                }
                Monomial::from_exponents(exps)
            })
            .collect();
        Ok(Self::from_parts(target.clone(), gens))
    }

    /// Sum of ideals living in distinct rings, in the concatenated ring.
    pub fn direct_sum(parts: &[MonomialIdeal]) -> Result<Self> {
        let ring = RingContext::concat(parts.iter().map(|p| p.ring()))?;
        let mut acc = Self::zero(ring.clone());
        let mut offset = 0;
        for part in parts {
            let map: Vec<usize> = (offset..offset + part.ring.dim()).collect();
            acc = acc.add(&part.embed(&ring, &map)?)?;
            offset += part.ring.dim();
        }
        Ok(acc)
    }
}

fn pairwise(
    left: &[Monomial],
    right: &[Monomial],
    op: impl Fn(&Monomial, &Monomial) -> Result<Monomial> + Sync,
) -> Result<Vec<Monomial>> {
    if left.len() * right.len() >= PAR_THRESHOLD {
        left.par_iter()
            .flat_map_iter(|a| right.iter().map(|b| op(a, b)).collect::<Vec<_>>())
            .collect()
    } else {
        left.iter()
            .flat_map(|a| right.iter().map(|b| op(a, b)))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.ring.format(g))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ring)
    }
}
