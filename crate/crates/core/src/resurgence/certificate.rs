use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};
use crate::rational::{ratio, Rational};
use crate::symbolic::{BlockPartition, SymbolicCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Contained,
    NotContained,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Contained => "contained",
            Verdict::NotContained => "not-contained",
        }
    }
}

/// The outcome of comparing `I^(m)` with `I^r`. A not-contained certificate
/// carries a witness in `I^(m)` outside `I^r`; a contained one records that
/// every minimal generator of `I^(m)` was found in `I^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentCertificate {
    pub ring: RingContext,
    pub m: u32,
    pub r: u32,
    pub verdict: Verdict,
    pub witness: Option<Monomial>,
}

impl ContainmentCertificate {
    pub fn is_contained(&self) -> bool {
        self.verdict == Verdict::Contained
    }

    pub fn ratio(&self) -> Rational {
        ratio(self.m.into(), self.r.into())
    }

    /// Re-derives the verdict for `ideal` through routes independent of the
    /// ones that produced it: localized membership for the symbolic side and
    /// a divisor search for the ordinary power.
    pub fn recheck(&self, ideal: &MonomialIdeal, cache: &SymbolicCache) -> Result<bool> {
        if ideal.ring() != &self.ring {
            return Err(Error::ContextMismatch(format!(
                "certificate over {:?}, ideal over {:?}",
                self.ring,
                ideal.ring()
            )));
        }
        match (&self.verdict, &self.witness) {
            (Verdict::NotContained, Some(w)) => {
                Ok(cache.symbolic_contains(ideal, self.m, w)? && !ideal.power_contains(w, self.r)?)
            }
            (Verdict::Contained, None) => {
                let symbolic = cache.symbolic_power(ideal, self.m)?;
                for g in symbolic.generators() {
                    if !ideal.power_contains(g, self.r)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Ok(false),
        }
    }
}

pub(crate) fn check_with(
    cache: &SymbolicCache,
    ideal: &MonomialIdeal,
    m: u32,
    r: u32,
) -> Result<ContainmentCertificate> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidArgument(format!(
            "containment is checked for m, r >= 1, got ({m}, {r})"
        )));
    }
    let symbolic = cache.symbolic_power(ideal, m)?;
    let ordinary = cache.power(ideal, r)?;
    let witness = symbolic.first_generator_outside(&ordinary)?;
    Ok(ContainmentCertificate {
        ring: ideal.ring().clone(),
        m,
        r,
        verdict: if witness.is_some() {
            Verdict::NotContained
        } else {
            Verdict::Contained
        },
        witness,
    })
}

/// Decides `I^(m) ⊆ I^r`. The witness, when present, is the canonically least
/// minimal generator of `I^(m)` outside `I^r`.
pub fn check_containment(ideal: &MonomialIdeal, m: u32, r: u32) -> Result<ContainmentCertificate> {
    check_with(&SymbolicCache::new(), ideal, m, r)
}

/// A local non-containment witness `f ∈ I^(m) \ I^r` for one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPart {
    pub ideal: MonomialIdeal,
    pub m: u32,
    pub r: u32,
    pub witness: Monomial,
}

/// Combines local witnesses on pairwise disjoint blocks into a witness for the
/// sum `P = I_1 + ... + I_p`: the product of the `f_i` lies in
/// `P^(m_1+...+m_p)` but not in `P^(r_1+...+r_p-p+1)`.
pub fn product_witness(parts: &[WitnessPart]) -> Result<ContainmentCertificate> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("product_witness needs at least one part".into()));
    }
    let partition =
        BlockPartition::from_summands(parts.iter().map(|p| p.ideal.clone()).collect())?;
    let ring = parts[0].ideal.ring().clone();
    let cache = SymbolicCache::new();

    let mut owner: Vec<Option<usize>> = vec![None; ring.dim()];
    for (i, part) in parts.iter().enumerate() {
        for (v, used) in part.ideal.used_variables().into_iter().enumerate() {
            if used {
                owner[v] = Some(i);
            }
        }
    }

    let mut witness = ring.one();
    let (mut m, mut r) = (0u32, 0u32);
    for (index, part) in parts.iter().enumerate() {
        let reject = |reason: String| Error::LocalWitness { index, reason };
        ring.check(&part.witness).map_err(|e| reject(e.to_string()))?;
        if part.m == 0 || part.r == 0 {
            return Err(reject("m and r must be at least 1".into()));
        }
        if let Some(v) = part
            .witness
            .support()
            .find(|&v| owner[v].is_some_and(|o| o != index))
        {
            return Err(reject(format!(
                "uses variable {} of another block",
                ring.names()[v]
            )));
        }
        if !cache.symbolic_contains(&part.ideal, part.m, &part.witness)? {
            return Err(reject(format!(
                "{} is not in the symbolic power {}",
                ring.format(&part.witness),
                part.m
            )));
        }
        if part.ideal.power_contains(&part.witness, part.r)? {
            return Err(reject(format!(
                "{} lies in the ordinary power {}",
                ring.format(&part.witness),
                part.r
            )));
        }
        witness = witness.mul(&part.witness)?;
        m = m.checked_add(part.m).ok_or_else(|| reject("m overflows".into()))?;
        r = r.checked_add(part.r).ok_or_else(|| reject("r overflows".into()))?;
    }
    let r = r + 1 - parts.len() as u32;

    let total = partition.total()?;
    let certificate = ContainmentCertificate {
        ring,
        m,
        r,
        verdict: Verdict::NotContained,
        witness: Some(witness),
    };
    if !certificate.recheck(&total, &cache)? {
        return Err(Error::CertificateRejected(format!(
            "product witness failed direct verification at ({m}, {r})"
        )));
    }
    Ok(certificate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingContext {
        RingContext::new(names.iter().copied()).unwrap()
    }

    fn f1(ring: &RingContext, x: usize, y: usize, z: usize) -> MonomialIdeal {
        let mono = |e: &[(usize, u32)]| {
            let mut exps = vec![0; ring.dim()];
            for &(i, a) in e {
                exps[i] = a;
            }
            Monomial::from_exponents(exps)
        };
        MonomialIdeal::new(
            ring.clone(),
            [mono(&[(x, 3)]), mono(&[(x, 1), (y, 2)]), mono(&[(y, 3), (z, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn example_ideal_containment() {
        let r = ring(&["x", "y", "z"]);
        let i = f1(&r, 0, 1, 2);
        let c = check_containment(&i, 2, 2).unwrap();
        assert_eq!(c.verdict, Verdict::NotContained);
        assert_eq!(r.format(c.witness.as_ref().unwrap()), "x^3*y^3");
        assert!(c.recheck(&i, &SymbolicCache::new()).unwrap());
        let c = check_containment(&i, 3, 2).unwrap();
        assert!(c.is_contained());
        assert!(c.witness.is_none());
        assert!(c.recheck(&i, &SymbolicCache::new()).unwrap());
    }

    #[test]
    fn prime_is_contained_at_equal_powers() {
        let r = ring(&["x", "y"]);
        let p = MonomialIdeal::prime(r, &[0, 1]).unwrap();
        assert!(check_containment(&p, 4, 4).unwrap().is_contained());
        assert!(check_containment(&p, 0, 4).is_err());
    }

    #[test]
    fn two_copies_of_the_example_ideal() {
        let r = ring(&["x", "y", "z", "u", "v", "w"]);
        let parts = [
            WitnessPart {
                ideal: f1(&r, 0, 1, 2),
                m: 2,
                r: 2,
                witness: r.monomial(&[("x", 3), ("y", 3)]).unwrap(),
            },
            WitnessPart {
                ideal: f1(&r, 3, 4, 5),
                m: 2,
                r: 2,
                witness: r.monomial(&[("u", 3), ("v", 3)]).unwrap(),
            },
        ];
        let c = product_witness(&parts).unwrap();
        assert_eq!((c.m, c.r), (4, 3));
        assert_eq!(r.format(c.witness.as_ref().unwrap()), "x^3*y^3*u^3*v^3");
        assert_eq!(c.ratio(), ratio(4, 3));
    }

    #[test]
    fn bad_local_witness_names_its_index() {
        let r = ring(&["x", "y", "z", "u", "v", "w"]);
        let good = WitnessPart {
            ideal: f1(&r, 0, 1, 2),
            m: 2,
            r: 2,
            witness: r.monomial(&[("x", 3), ("y", 3)]).unwrap(),
        };
        let in_power = WitnessPart {
            ideal: f1(&r, 3, 4, 5),
            m: 2,
            r: 2,
            witness: r.monomial(&[("u", 6)]).unwrap(),
        };
        let err = product_witness(&[good.clone(), in_power]).unwrap_err();
        assert!(matches!(err, Error::LocalWitness { index: 1, .. }), "{err}");

        let not_symbolic = WitnessPart {
            witness: r.monomial(&[("x", 2)]).unwrap(),
            ..good.clone()
        };
        let other = WitnessPart {
            ideal: f1(&r, 3, 4, 5),
            m: 2,
            r: 2,
            witness: r.monomial(&[("u", 3), ("v", 3)]).unwrap(),
        };
        let err = product_witness(&[not_symbolic, other]).unwrap_err();
        assert!(matches!(err, Error::LocalWitness { index: 0, .. }), "{err}");

        let trespassing = WitnessPart {
            ideal: f1(&r, 3, 4, 5),
            m: 2,
            r: 2,
            witness: r.monomial(&[("x", 3), ("y", 3)]).unwrap(),
        };
        let err = product_witness(&[good.clone(), trespassing]).unwrap_err();
        assert!(matches!(err, Error::LocalWitness { index: 1, .. }), "{err}");

        let overlapping = product_witness(&[good.clone(), good]).unwrap_err();
        assert!(matches!(overlapping, Error::InvalidArgument(_)), "{overlapping}");
    }
}
