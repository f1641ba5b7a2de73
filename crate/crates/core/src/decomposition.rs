//! Irreducible and primary decompositions of monomial ideals.
//!
//! Irreducible components come from the splitting rule
//! `J + (u*v) = (J + (u)) ∩ (J + (v))` for coprime monomials `u`, `v`. Ideals
//! whose generators fall into several variable blocks are decomposed block by
//! block and the components combined, since the components of a sum in
//! disjoint variables are exactly the sums of components.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::{Monomial, RingContext};

/// An irreducible monomial ideal `(x_{i_1}^{a_1}, ..., x_{i_k}^{a_k})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    // Sorted by variable index; exponents positive. Field order gives the
    // canonical sort: by support first, then by exponents.
    vars: Vec<usize>,
    exps: Vec<u32>,
}

/// A monomial prime, identified by the variables generating it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    vars: Vec<usize>,
}

impl IrreducibleComponent {
    pub fn new(mut assignments: Vec<(usize, u32)>) -> Result<Self> {
        assignments.sort_unstable();
        if assignments.is_empty() {
            return Err(Error::InvalidArgument("irreducible component needs a generator".into()));
        }
        if assignments.windows(2).any(|w| w[0].0 == w[1].0) || assignments.iter().any(|a| a.1 == 0) {
            return Err(Error::InvalidArgument(
                "component assignments must be distinct variables with positive exponents".into(),
            ));
        }
        Ok(Self {
            vars: assignments.iter().map(|a| a.0).collect(),
            exps: assignments.iter().map(|a| a.1).collect(),
        })
    }

    pub fn assignments(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.vars.iter().copied().zip(self.exps.iter().copied())
    }

    pub fn radical(&self) -> PrimeSupport {
        PrimeSupport {
            vars: self.vars.clone(),
        }
    }

    /// `true` iff `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.assignments().all(|(v, b)| {
            self.vars
                .binary_search(&v)
                .is_ok_and(|k| self.exps[k] <= b)
        })
    }

    pub fn to_ideal(&self, ring: &RingContext) -> Result<MonomialIdeal> {
        let gens = self.assignments().map(|(v, e)| {
            let mut exps = vec![0; ring.dim()];
            if let Some(slot) = exps.get_mut(v) {
                *slot = e;
            }
            Monomial::from_exponents(exps)
        });
        if self.vars.last().is_some_and(|&v| v >= ring.dim()) {
            return Err(Error::ContextMismatch("component variable outside the ring".into()));
        }
        MonomialIdeal::new(ring.clone(), gens)
    }

    fn merge(&self, other: &Self) -> Self {
        let mut pairs: Vec<(usize, u32)> = self.assignments().chain(other.assignments()).collect();
        pairs.sort_unstable();
        Self {
            vars: pairs.iter().map(|p| p.0).collect(),
            exps: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            f.write_str("(")?;
            for (k, (v, e)) in self.assignments().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&ring.names()[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            f.write_str(")")
        })
    }
}

impl PrimeSupport {
    pub fn new(mut vars: Vec<usize>) -> Result<Self> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a monomial prime needs a variable".into()));
        }
        Ok(Self { vars })
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.vars.iter().all(|v| other.vars.binary_search(v).is_ok())
    }

    /// Variables of a `dim`-variable ring that are not in the prime.
    pub fn complement(&self, dim: usize) -> Vec<usize> {
        (0..dim).filter(|v| self.vars.binary_search(v).is_err()).collect()
    }

    pub fn mask(&self, dim: usize) -> Vec<bool> {
        let mut mask = vec![false; dim];
        for &v in &self.vars {
            mask[v] = true;
        }
        mask
    }

    pub fn to_ideal(&self, ring: &RingContext) -> Result<MonomialIdeal> {
        MonomialIdeal::prime(ring.clone(), &self.vars)
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        DisplayWith(move |f: &mut fmt::Formatter<'_>| {
            let names: Vec<&str> = self.vars.iter().map(|&v| ring.names()[v].as_str()).collect();
            write!(f, "({})", names.join(", "))
        })
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.assignments()).finish()
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vars)
    }
}

struct DisplayWith<F>(F);

impl<F: Fn(&mut fmt::Formatter<'_>) -> fmt::Result> fmt::Display for DisplayWith<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (self.0)(f)
    }
}

/// Connected components of the graph on the used variables in which two
/// variables are adjacent when they occur in a common generator.
/// Components are sorted by their smallest variable.
pub(crate) fn variable_blocks(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let dim = ideal.ring().dim();
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for g in ideal.generators() {
        let mut support = g.support();
        if let Some(first) = support.next() {
            for other in support {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let used = ideal.used_variables();
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..dim).filter(|&v| used[v]) {
        let root = find(&mut parent, v);
        blocks.entry(root).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

type Memo = HashMap<Vec<Monomial>, Vec<IrreducibleComponent>>;

fn split(gens: Vec<Monomial>, memo: &mut Memo) -> Vec<IrreducibleComponent> {
    let gens = minimal_generators(gens);
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    // Generator with the most variables; the first in canonical order on ties.
    let mut pick = 0;
    for (k, g) in gens.iter().enumerate() {
        if g.support_size() > gens[pick].support_size() {
            pick = k;
        }
    }
    let result = if gens[pick].support_size() <= 1 {
        let mut pairs = gens
            .iter()
            .filter_map(Monomial::as_pure_power)
            .collect::<Vec<_>>();
        pairs.sort_unstable();
        vec![IrreducibleComponent {
            vars: pairs.iter().map(|p| p.0).collect(),
            exps: pairs.iter().map(|p| p.1).collect(),
        }]
    } else {
        let g = &gens[pick];
        // Pivot on the largest exponent, lowest variable index on ties.
        let (pivot, exp) = g
            .exponents()
            .iter()
            .copied()
            .enumerate()
            .fold((0, 0), |best, (i, e)| if e > best.1 { (i, e) } else { best });
        let mut pure = vec![0; g.nvars()];
        pure[pivot] = exp;
        let pure = Monomial::from_exponents(pure);
        let cofactor = g.colon_unchecked(&pure);
        let rest: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != pick)
            .map(|(_, m)| m.clone())
            .collect();
        let mut left = rest.clone();
        left.push(pure);
        let mut right = rest;
        right.push(cofactor);
        let mut comps = split(left, memo);
        comps.extend(split(right, memo));
        prune(comps)
    };
    memo.insert(gens, result.clone());
    result
}

/// Dedups and drops every component containing another one. For irreducible
/// monomial ideals a component contains an intersection of others only if it
/// contains one of them, so the result is irredundant.
fn prune(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| !comps.iter().enumerate().any(|(j, d)| i != j && c.contains(d)))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Irredundant irreducible decomposition, sorted by support then exponents.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero()?;
    let mut memo = Memo::new();
    let mut combined: Vec<IrreducibleComponent> = Vec::new();
    for block in variable_blocks(ideal) {
        let gens: Vec<Monomial> = ideal
            .generators()
            .iter()
            .filter(|g| g.support().next().is_some_and(|v| block.binary_search(&v).is_ok()))
            .cloned()
            .collect();
        let comps = split(gens, &mut memo);
        combined = if combined.is_empty() {
            comps
        } else {
            combined
                .iter()
                .flat_map(|a| comps.iter().map(move |b| a.merge(b)))
                .collect()
        };
    }
    combined.sort();
    Ok(combined)
}

/// Re-intersects `components` and checks both that the result is `ideal` and
/// that no component contains the intersection of the others.
pub fn verify_decomposition(ideal: &MonomialIdeal, components: &[MonomialIdeal]) -> Result<bool> {
    let ring = ideal.ring().clone();
    let meet = |skip: Option<usize>| -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(ring.clone());
        for (k, c) in components.iter().enumerate() {
            if Some(k) != skip {
                acc = acc.intersect(c)?;
            }
        }
        Ok(acc)
    };
    if meet(None)? != *ideal {
        return Ok(false);
    }
    for (k, c) in components.iter().enumerate() {
        if c.contains_ideal(&meet(Some(k))?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deduplicated radicals of the irreducible components, sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    let mut primes: Vec<PrimeSupport> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

pub(crate) fn maximal_members(primes: &[PrimeSupport]) -> Vec<PrimeSupport> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect()
}

/// Associated primes not strictly contained in another associated prime.
pub fn maximal_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    Ok(maximal_members(&associated_primes(ideal)?))
}

/// Primary components paired with their radicals, sorted by radical.
pub fn primary_components(ideal: &MonomialIdeal) -> Result<Vec<(PrimeSupport, MonomialIdeal)>> {
    let mut groups: BTreeMap<PrimeSupport, Vec<IrreducibleComponent>> = BTreeMap::new();
    for comp in irreducible_decomposition(ideal)? {
        groups.entry(comp.radical()).or_default().push(comp);
    }
    let ring = ideal.ring();
    groups
        .into_iter()
        .map(|(prime, comps)| {
            let mut acc = MonomialIdeal::unit(ring.clone());
            for c in &comps {
                acc = acc.intersect(&c.to_ideal(ring)?)?;
            }
            Ok((prime, acc))
        })
        .collect()
}

/// Irredundant primary decomposition: the intersection of the irreducible
/// components sharing each radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    Ok(primary_components(ideal)?.into_iter().map(|(_, q)| q).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingContext {
        RingContext::new(names.iter().copied()).unwrap()
    }

    fn f1() -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring(&["x", "y", "z"]), &[&[3, 0, 0], &[1, 2, 0], &[0, 3, 1]])
            .unwrap()
    }

    fn shown(ideal: &MonomialIdeal, comps: &[IrreducibleComponent]) -> Vec<String> {
        comps.iter().map(|c| c.display(ideal.ring()).to_string()).collect()
    }

    #[test]
    fn irreducible_components_of_example_ideal() {
        let i = f1();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(shown(&i, &comps), ["(x, y^3)", "(x^3, y^2)", "(x, z)"]);
        let ideals: Vec<_> = comps.iter().map(|c| c.to_ideal(i.ring()).unwrap()).collect();
        assert!(verify_decomposition(&i, &ideals).unwrap());
    }

    #[test]
    fn irreducible_ideal_is_its_own_decomposition() {
        let i = MonomialIdeal::from_exponents(ring(&["x", "y"]), &[&[2, 0], &[0, 3]]).unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(shown(&i, &comps), ["(x^2, y^3)"]);
        assert_eq!(primary_decomposition(&i).unwrap(), vec![i]);
    }

    #[test]
    fn squarefree_pairs() {
        let r = ring(&["x1", "x2", "x3"]);
        let i = MonomialIdeal::from_exponents(r, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(shown(&i, &comps), ["(x1, x2)", "(x1, x3)", "(x2, x3)"]);
        let primes = associated_primes(&i).unwrap();
        assert_eq!(primes.len(), 3);
        assert_eq!(maximal_associated_primes(&i).unwrap(), primes);
    }

    #[test]
    fn associated_primes_of_example_ideal() {
        let i = f1();
        let shown: Vec<String> = associated_primes(&i)
            .unwrap()
            .iter()
            .map(|p| p.display(i.ring()).to_string())
            .collect();
        assert_eq!(shown, ["(x, y)", "(x, z)"]);
        let p = MonomialIdeal::from_exponents(ring(&["x"]), &[&[5]]).unwrap();
        assert_eq!(associated_primes(&p).unwrap(), vec![PrimeSupport::new(vec![0]).unwrap()]);
    }

    #[test]
    fn embedded_prime_is_not_maximal() {
        // (x^2, x*y) = (x) ∩ (x^2, y)
        let i = MonomialIdeal::from_exponents(ring(&["x", "y"]), &[&[2, 0], &[1, 1]]).unwrap();
        assert_eq!(associated_primes(&i).unwrap().len(), 2);
        let max = maximal_associated_primes(&i).unwrap();
        assert_eq!(max, vec![PrimeSupport::new(vec![0, 1]).unwrap()]);
    }

    #[test]
    fn primary_decomposition_of_family_members() {
        let i = f1();
        let shown: Vec<String> = primary_decomposition(&i).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(shown, ["(x^3, x*y^2, y^3)", "(x, z)"]);

        let f2 = MonomialIdeal::from_exponents(ring(&["x", "y", "z"]), &[&[5, 0, 0], &[3, 2, 0], &[0, 5, 1]])
            .unwrap();
        let shown: Vec<String> = primary_decomposition(&f2).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(shown, ["(x^5, x^3*y^2, y^5)", "(x^3, z)"]);
    }

    #[test]
    fn improper_ideals_are_rejected() {
        let r = ring(&["x"]);
        assert!(irreducible_decomposition(&MonomialIdeal::zero(r.clone())).is_err());
        assert!(associated_primes(&MonomialIdeal::unit(r)).is_err());
    }

    #[test]
    fn blocks_of_a_disjoint_sum() {
        let j = MonomialIdeal::from_exponents(ring(&["u", "v", "w"]), &[&[3, 0, 0], &[1, 2, 0], &[0, 3, 1]])
            .unwrap();
        let sum = MonomialIdeal::direct_sum(&[f1(), j]).unwrap();
        assert_eq!(variable_blocks(&sum), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let comps = irreducible_decomposition(&sum).unwrap();
        assert_eq!(comps.len(), 9);
        let ideals: Vec<_> = comps.iter().map(|c| c.to_ideal(sum.ring()).unwrap()).collect();
        assert!(verify_decomposition(&sum, &ideals).unwrap());
    }
}
