//! Symbolic powers defined through associated primes.
//!
//! `I^(n)` is the intersection, over the associated primes `p` of `I`, of the
//! contraction of `I^n` from the localization at `p`. For a monomial prime the
//! contraction is the saturation of `I^n` by the product of the variables
//! outside `p`. Contractions at smaller primes contain those at larger ones,
//! so only maximal associated primes are needed.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::decomposition::{maximal_associated_primes, variable_blocks, PrimeSupport};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// One block of a [`BlockPartition`]: an ideal supported on `vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vars: Vec<usize>,
    pub ideal: MonomialIdeal,
}

/// An ideal split into summands on pairwise disjoint variable sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    blocks: Vec<Block>,
}

impl BlockPartition {
    /// Builds a partition from summands sharing one ring. Each summand's
    /// generators must use variables no other summand uses.
    pub fn from_summands(summands: Vec<MonomialIdeal>) -> Result<Self> {
        let Some(ring) = summands.first().map(|s| s.ring().clone()) else {
            return Err(Error::InvalidArgument("empty block partition".into()));
        };
        let dim = ring.dim();
        let mut owner: Vec<Option<usize>> = vec![None; dim];
        let mut blocks = Vec::with_capacity(summands.len());
        for (k, ideal) in summands.into_iter().enumerate() {
            if *ideal.ring() != ring {
                return Err(Error::ContextMismatch("block summands in different rings".into()));
            }
            ideal.require_proper_nonzero()?;
            let vars: Vec<usize> = ideal
                .used_variables()
                .iter()
                .enumerate()
                .filter_map(|(v, &u)| u.then_some(v))
                .collect();
            for &v in &vars {
                if owner[v].replace(k).is_some() {
                    return Err(Error::InvalidArgument(format!(
                        "variable `{}` occurs in two blocks",
                        ring.names()[v]
                    )));
                }
            }
            blocks.push(Block { vars, ideal });
        }
        blocks.sort_by(|a, b| a.vars.cmp(&b.vars));
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sum of the block ideals.
    pub fn total(&self) -> Result<MonomialIdeal> {
        let mut iter = self.blocks.iter();
        let first = iter.next().expect("partition is never empty").ideal.clone();
        iter.try_fold(first, |acc, b| acc.add(&b.ideal))
    }
}

/// Splits `ideal` along the connected components of its generator-support graph.
pub fn detect_blocks(ideal: &MonomialIdeal) -> Result<BlockPartition> {
    ideal.require_proper_nonzero()?;
    let blocks = variable_blocks(ideal)
        .into_iter()
        .map(|vars| {
            let gens = ideal
                .generators()
                .iter()
                .filter(|g| g.support().next().is_some_and(|v| vars.binary_search(&v).is_ok()))
                .cloned();
            Ok(Block {
                ideal: MonomialIdeal::new(ideal.ring().clone(), gens)?,
                vars,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockPartition { blocks })
}

type PowerKey = (MonomialIdeal, u32);

/// Memo tables for ordinary powers, maximal associated primes and symbolic
/// powers, keyed by canonical ideals. Safe to share between threads; racing
/// writers for one key store identical values.
#[derive(Default)]
pub struct SymbolicCache {
    primes: RwLock<HashMap<MonomialIdeal, Arc<Vec<PrimeSupport>>>>,
    powers: RwLock<HashMap<PowerKey, MonomialIdeal>>,
    symbolic: RwLock<HashMap<PowerKey, MonomialIdeal>>,
}

impl SymbolicCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Maximal associated primes, in canonical order.
    pub fn maximal_primes(&self, ideal: &MonomialIdeal) -> Result<Arc<Vec<PrimeSupport>>> {
        if let Some(hit) = self.primes.read().unwrap().get(ideal) {
            return Ok(hit.clone());
        }
        let primes = Arc::new(maximal_associated_primes(ideal)?);
        self.primes
            .write()
            .unwrap()
            .insert(ideal.clone(), primes.clone());
        Ok(primes)
    }

    /// `I^n`, built on the largest cached lower power.
    pub fn power(&self, ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
        let (mut k, mut acc) = {
            let table = self.powers.read().unwrap();
            (0..=n)
                .rev()
                .find_map(|k| table.get(&(ideal.clone(), k)).map(|p| (k, p.clone())))
                .unwrap_or_else(|| (0, MonomialIdeal::unit(ideal.ring().clone())))
        };
        while k < n {
            acc = acc.mul(ideal)?;
            k += 1;
            self.powers
                .write()
                .unwrap()
                .insert((ideal.clone(), k), acc.clone());
        }
        Ok(acc)
    }

    pub fn symbolic_power(&self, ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
        ideal.require_proper_nonzero()?;
        if n == 0 {
            return Err(Error::InvalidArgument("symbolic powers start at n = 1".into()));
        }
        let key = (ideal.clone(), n);
        if let Some(hit) = self.symbolic.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let powered = self.power(ideal, n)?;
        let dim = ideal.ring().dim();
        let mut acc: Option<MonomialIdeal> = None;
        for prime in self.maximal_primes(ideal)?.iter() {
            let outside = prime.complement(dim);
            let local = if outside.is_empty() {
                powered.clone()
            } else {
                powered.saturate(&outside)?
            };
            acc = Some(match acc {
                None => local,
                Some(prev) => prev.intersect(&local)?,
            });
        }
        let result = acc.expect("a proper nonzero ideal has an associated prime");
        self.symbolic.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// `I^(i)` with the convention `I^(0) = (1)`.
    fn symbolic_or_unit(&self, ideal: &MonomialIdeal, i: u32) -> Result<MonomialIdeal> {
        if i == 0 {
            Ok(MonomialIdeal::unit(ideal.ring().clone()))
        } else {
            self.symbolic_power(ideal, i)
        }
    }

    /// `(I_1 + ... + I_p)^(s)` as the sum over compositions `i_1 + ... + i_p = s`
    /// of the products `I_1^(i_1) ... I_p^(i_p)`.
    pub fn symbolic_power_blockwise(&self, partition: &BlockPartition, s: u32) -> Result<MonomialIdeal> {
        if partition.len() < 2 {
            return Err(Error::SingleBlock);
        }
        if s == 0 {
            return Err(Error::InvalidArgument("symbolic powers start at s = 1".into()));
        }
        let ring = partition.blocks[0].ideal.ring().clone();
        let mut total = MonomialIdeal::zero(ring.clone());
        for parts in compositions(s, partition.len()) {
            let mut term = MonomialIdeal::unit(ring.clone());
            for (block, &i) in partition.blocks.iter().zip(&parts) {
                term = term.mul(&self.symbolic_or_unit(&block.ideal, i)?)?;
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }

    /// Decides `m ∈ I^(n)` without building the symbolic power: for each
    /// maximal associated prime the variables outside it are set to 1 and
    /// membership in the `n`-th power of the localized ideal is searched.
    pub fn symbolic_contains(&self, ideal: &MonomialIdeal, n: u32, m: &Monomial) -> Result<bool> {
        ideal.require_proper_nonzero()?;
        ideal.ring().check(m)?;
        let dim = ideal.ring().dim();
        for prime in self.maximal_primes(ideal)?.iter() {
            let mask = prime.mask(dim);
            if !ideal.restrict(&mask).power_contains(&m.restrict(&mask), n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All weak compositions of `total` into `parts` non-negative summands, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for i in 0..=left {
            prefix.push(i);
            go(left - i, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// `I^(n)` without a shared cache.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    SymbolicCache::new().symbolic_power(ideal, n)
}

/// Blockwise `P^(s)` without a shared cache.
pub fn symbolic_power_blockwise(partition: &BlockPartition, s: u32) -> Result<MonomialIdeal> {
    SymbolicCache::new().symbolic_power_blockwise(partition, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingContext;

    fn ring(names: &[&str]) -> RingContext {
        RingContext::new(names.iter().copied()).unwrap()
    }

    fn f1_in(names: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring(names), &[&[3, 0, 0], &[1, 2, 0], &[0, 3, 1]]).unwrap()
    }

    #[test]
    fn prime_powers_are_unchanged() {
        let m = MonomialIdeal::from_exponents(ring(&["x", "y"]), &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(symbolic_power(&m, 3).unwrap(), m.power(3).unwrap());
    }

    #[test]
    fn example_ideal_square() {
        let i = f1_in(&["x", "y", "z"]);
        let expect = i
            .power(2)
            .unwrap()
            .add(&MonomialIdeal::from_exponents(i.ring().clone(), &[&[3, 3, 0]]).unwrap())
            .unwrap();
        assert_eq!(symbolic_power(&i, 2).unwrap(), expect);
        assert_eq!(symbolic_power(&i, 1).unwrap(), i);
    }

    #[test]
    fn star_ideal_square_by_prime_intersection() {
        let r = ring(&["x1", "x2", "x3"]);
        let i = MonomialIdeal::from_exponents(r.clone(), &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        // Independent route: intersect (x_i, x_j)^2 over all pairs.
        let mut oracle = MonomialIdeal::unit(r.clone());
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let p = MonomialIdeal::prime(r.clone(), &[a, b]).unwrap();
            oracle = oracle.intersect(&p.power(2).unwrap()).unwrap();
        }
        let cube = MonomialIdeal::from_exponents(r, &[&[1, 1, 1]]).unwrap();
        assert_eq!(oracle, i.power(2).unwrap().add(&cube).unwrap());
        assert_eq!(symbolic_power(&i, 2).unwrap(), oracle);
    }

    #[test]
    fn improper_inputs() {
        let r = ring(&["x"]);
        assert!(symbolic_power(&MonomialIdeal::zero(r.clone()), 2).is_err());
        assert!(symbolic_power(&MonomialIdeal::unit(r.clone()), 2).is_err());
        let x = MonomialIdeal::prime(r, &[0]).unwrap();
        assert!(symbolic_power(&x, 0).is_err());
    }

    #[test]
    fn block_detection() {
        let i = f1_in(&["x", "y", "z"]);
        let j = f1_in(&["u", "v", "w"]);
        let sum = MonomialIdeal::direct_sum(&[i.clone(), j]).unwrap();
        let blocks = detect_blocks(&sum).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks.blocks()[0].vars, vec![0, 1, 2]);
        assert_eq!(blocks.total().unwrap(), sum);
        assert_eq!(detect_blocks(&i).unwrap().len(), 1);
        let single = detect_blocks(&i).unwrap();
        assert_eq!(symbolic_power_blockwise(&single, 2), Err(Error::SingleBlock));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(compositions(3, 3).len(), 10);
        assert!(compositions(3, 3).iter().all(|c| c.iter().sum::<u32>() == 3));
    }

    #[test]
    fn blockwise_example_witness() {
        let sum = MonomialIdeal::direct_sum(&[f1_in(&["x", "y", "z"]), f1_in(&["u", "v", "w"])]).unwrap();
        let blocks = detect_blocks(&sum).unwrap();
        let s4 = symbolic_power_blockwise(&blocks, 4).unwrap();
        let witness = Monomial::from_exponents([3, 3, 0, 3, 3, 0]);
        assert!(s4.contains_monomial(&witness).unwrap());
        assert_eq!(s4, symbolic_power(&sum, 4).unwrap());
    }

    #[test]
    fn overlapping_summands_are_rejected() {
        let r = ring(&["x", "y"]);
        let a = MonomialIdeal::from_exponents(r.clone(), &[&[1, 1]]).unwrap();
        let b = MonomialIdeal::from_exponents(r, &[&[0, 2]]).unwrap();
        assert!(BlockPartition::from_summands(vec![a, b]).is_err());
    }

    #[test]
    fn membership_route_agrees_with_saturation_route() {
        let i = f1_in(&["x", "y", "z"]);
        let cache = SymbolicCache::new();
        for n in 1..=3 {
            let s = cache.symbolic_power(&i, n).unwrap();
            for a in 0..10 {
                for b in 0..10 {
                    for c in 0..3 {
                        let m = Monomial::from_exponents([a, b, c]);
                        assert_eq!(
                            cache.symbolic_contains(&i, n, &m).unwrap(),
                            s.contains_monomial(&m).unwrap()
                        );
                    }
                }
            }
        }
    }
}
