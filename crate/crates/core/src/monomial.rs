//! Exponent-vector monomials over an ordered variable context.
//!
//! A [`Monomial`] is a bare exponent vector; the [`RingContext`] it belongs to
//! is carried by the ideal that owns it. Binary operations check that both
//! operands have the same number of variables and report a
//! [`Error::ContextMismatch`] otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent storage; contexts up to 16 variables stay inline.
pub type Exponents = SmallVec<[u32; 16]>;

/// Keywords reserved by the expression grammar.
const RESERVED: &[&str] = &["ring", "cap"];

/// An ordered list of distinct variable names.
///
/// Cloning is cheap (the names are shared). Two contexts are equal when their
/// name lists are equal.
#[derive(Clone)]
pub struct RingContext {
    names: Arc<[String]>,
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidArgument(
                "a ring needs at least one variable".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || RESERVED.contains(&name.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!(
                    "variable `{name}` declared twice"
                )));
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    /// Concatenates several contexts, in order. Names must stay distinct.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a RingContext>) -> Result<Self> {
        let names: Vec<String> = parts
            .into_iter()
            .flat_map(|ctx| ctx.names.iter().cloned())
            .collect();
        Self::new(names)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.dim())
    }

    pub fn var(&self, index: usize) -> Monomial {
        Monomial::var(self.dim(), index)
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names add up.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Monomial> {
        let mut exps: Exponents = SmallVec::from_elem(0, self.dim());
        for &(name, e) in factors {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))?;
            exps[i] = exps[i]
                .checked_add(e)
                .ok_or(Error::ExponentOverflow { index: i })?;
        }
        Ok(Monomial { exps })
    }

    /// Checks that `m` has one exponent per variable of this context.
    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.dim() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "monomial has {} exponents, ring has {} variables",
                m.nvars(),
                self.dim()
            )))
        }
    }

    /// Renders `m` as `x^3*y^2*z`, or `1` for the unit monomial.
    pub fn format(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.names[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for RingContext {}

impl std::hash::Hash for RingContext {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.names.join(","))
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial `x_1^{e_1} ... x_d^{e_d}` stored as its exponent vector.
///
/// The `Ord` instance is the canonical order used for generator lists: the
/// lexicographically larger exponent vector comes first, reading variables
/// in context order (so `x^3` precedes `x*y^2`, which precedes `y^3*z`, and
/// `x^3` precedes `z`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        Self {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Product of the variables in the support.
    pub fn squarefree_support(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "monomials over {} and {} variables",
                self.nvars(),
                other.nvars()
            )))
        }
    }

    /// `true` iff `self` divides `other`, i.e. componentwise `<=`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        self.mul_unchecked(other)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.colon_unchecked(other))
    }

    /// Raises to the `n`-th power with overflow checking.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for (i, &e) in self.exps.iter().enumerate() {
            exps.push(e.checked_mul(n).ok_or(Error::ExponentOverflow { index: i })?);
        }
        Ok(Self { exps })
    }

    /// Keeps the exponents of the variables flagged in `keep`, zeroing the rest.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(keep)
                .map(|(&e, &k)| if k { e } else { 0 })
                .collect(),
        }
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    #[inline]
    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, u32::max)
    }

    #[inline]
    pub(crate) fn colon_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, u32::saturating_sub)
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for (i, (&a, &b)) in self.exps.iter().zip(&other.exps).enumerate() {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow { index: i })?);
        }
        Ok(Self { exps })
    }

    #[inline]
    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
