//! Euler factors `prod (1 - u X)^-m` with `X = q^-s`, stored as multisets of
//! inverse roots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::monoid::{parse_prefix, Monomial, Q};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct EulerFactor {
    roots: BTreeMap<Monomial, u32>,
}

impl EulerFactor {
    /// The constant factor 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// `1 / (1 - u X)`.
    pub fn tate(u: Monomial) -> Self {
        Self::with_root(u, 1)
    }

    pub fn with_root(u: Monomial, mult: u32) -> Self {
        let mut e = Self::one();
        e.insert(u, mult);
        e
    }

    pub fn from_roots<I: IntoIterator<Item = Monomial>>(roots: I) -> Self {
        let mut e = Self::one();
        for u in roots {
            e.insert(u, 1);
        }
        e
    }

    /// One simple root for each distinct monomial.
    pub fn simple<I: IntoIterator<Item = Monomial>>(roots: I) -> Self {
        let mut e = Self::one();
        for u in roots {
            e.roots.insert(u, 1);
        }
        e
    }

    pub fn insert(&mut self, u: Monomial, mult: u32) {
        if mult > 0 {
            *self.roots.entry(u).or_insert(0) += mult;
        }
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn multiplicity(&self, u: &Monomial) -> u32 {
        self.roots.get(u).copied().unwrap_or(0)
    }

    /// Distinct roots with multiplicities, in canonical order.
    pub fn roots(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.roots.iter().map(|(u, &m)| (u, m))
    }

    /// Roots listed with repetition.
    pub fn root_list(&self) -> Vec<Monomial> {
        self.roots.iter().flat_map(|(u, &m)| core::iter::repeat_n(u.clone(), m as usize)).collect()
    }

    /// Degree of the polynomial `P` in `1/P(X)`.
    pub fn degree(&self) -> u32 {
        self.roots.values().sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.roots.values().copied().max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (u, &m) in &other.roots {
            e.insert(u.clone(), m);
        }
        e
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (u, &m) in &other.roots {
            let slot = e.roots.entry(u.clone()).or_insert(0);
            *slot = (*slot).max(m);
        }
        e
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let roots = self
            .roots
            .iter()
            .filter_map(|(u, &m)| {
                let k = m.min(other.multiplicity(u));
                (k > 0).then(|| (u.clone(), k))
            })
            .collect();
        EulerFactor { roots }
    }

    /// `self` divides `other` when `1/P_self` divides `1/P_other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.roots.iter().all(|(u, &m)| m <= other.multiplicity(u))
    }

    /// The factor `self / other`, defined when `other` divides `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        if !other.divides(self) {
            return Err(Error::NotDivisible);
        }
        let roots = self
            .roots
            .iter()
            .filter_map(|(u, &m)| {
                let k = m - other.multiplicity(u);
                (k > 0).then(|| (u.clone(), k))
            })
            .collect();
        Ok(EulerFactor { roots })
    }

    /// Roots of `self` and `other` not shared with multiplicity:
    /// `(self - other, other - self)`.
    pub fn symmetric_difference(&self, other: &Self) -> (Self, Self) {
        let g = self.gcd(other);
        (self.div_exact(&g).unwrap(), other.div_exact(&g).unwrap())
    }

    /// Applies `f` to every root, keeping multiplicities.
    pub fn map_roots(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        let mut e = Self::one();
        for (u, &m) in &self.roots {
            e.insert(f(u), m);
        }
        e
    }

    /// Substitution `s -> s + c`.
    pub fn shift(&self, c: Q) -> Self {
        let t = Monomial::abs_pow(c);
        self.map_roots(|u| u * &t)
    }

    /// Substitution `s -> 2s`: each `1 - u X^2` splits as
    /// `(1 - sqrt(u) X)(1 + sqrt(u) X)`.
    pub fn dilate2(&self) -> Self {
        let mut e = Self::one();
        for (u, &m) in &self.roots {
            let r = u.sqrt();
            e.insert(Monomial::minus_one() * &r, m);
            e.insert(r, m);
        }
        e
    }

    /// Substitution `s -> d s`. Only `d = 1` and `d = 2` are supported.
    pub fn dilate(&self, d: u32) -> Result<Self> {
        match d {
            1 => Ok(self.clone()),
            2 => Ok(self.dilate2()),
            _ => Err(Error::Domain(format!("dilation by {d} is not supported, only 2"))),
        }
    }

    /// Substitution `X -> -X`.
    pub fn negate_variable(&self) -> Self {
        self.map_roots(|u| Monomial::minus_one() * u)
    }

    /// Common roots of `self` and `other`, ignoring multiplicity.
    pub fn shares_root_with(&self, other: &Self) -> bool {
        self.roots.keys().any(|u| other.roots.contains_key(u))
    }
}

impl core::iter::Product for EulerFactor {
    fn product<I: Iterator<Item = EulerFactor>>(iter: I) -> EulerFactor {
        iter.fold(EulerFactor::one(), |a, b| a.mul(&b))
    }
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (u, &m) in &self.roots {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "(1 - {u} X)^-{m}")?;
        }
        Ok(())
    }
}

impl FromStr for EulerFactor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut rest = s.trim();
        let mut e = Self::one();
        if rest == "1" {
            return Ok(e);
        }
        let bad = |what: &str| Error::Parse(format!("{what} in Euler factor {s:?}"));
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?.trim_start();
            rest = rest.strip_prefix('1').ok_or_else(|| bad("expected '1'"))?.trim_start();
            rest = rest.strip_prefix('-').ok_or_else(|| bad("expected '-'"))?.trim_start();
            let (u, used) = parse_prefix(rest)?;
            rest = rest[used..].trim_start();
            rest = rest.strip_prefix('X').ok_or_else(|| bad("expected 'X'"))?.trim_start();
            rest = rest.strip_prefix(")^-").ok_or_else(|| bad("expected ')^-'"))?;
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let m: u32 = rest[..end].parse().map_err(|_| bad("expected multiplicity"))?;
            if m.is_zero() {
                return Err(bad("zero multiplicity"));
            }
            e.insert(u, m);
            rest = rest[end..].trim_start();
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn multiset_algebra() {
        let u = EulerFactor::tate(m("z1"));
        let v = EulerFactor::tate(m("z2"));
        assert_eq!(u.mul(&u).multiplicity(&m("z1")), 2);
        assert_eq!(EulerFactor::one().mul(&u), u);
        assert_eq!(u.lcm(&u), u);
        assert_eq!(u.lcm(&v).degree(), 2);
        let uu = u.mul(&u);
        assert_eq!(uu.lcm(&u.mul(&v)), uu.mul(&v));
        assert!(EulerFactor::one().divides(&v));
        assert!(!uu.divides(&u));
        assert_eq!(uu.div_exact(&u).unwrap(), u);
        assert_eq!(u.div_exact(&v), Err(Error::NotDivisible));
    }

    #[test]
    fn substitutions() {
        let one = EulerFactor::tate(Monomial::one());
        assert_eq!(one.shift(Q::new(1, 2)), EulerFactor::tate(m("q^(-1/2)")));
        assert_eq!(one.shift(Q::new(1, 2)).shift(Q::new(-1, 2)), one);
        assert_eq!(EulerFactor::tate(m("z1")).shift(Q::from_integer(1)), EulerFactor::tate(m("z1 * q^(-1)")));
        assert_eq!(one.dilate2(), EulerFactor::from_roots(vec![m("1"), m("-1")]));
        assert_eq!(EulerFactor::tate(m("z1^2")).dilate2(), EulerFactor::from_roots(vec![m("z1"), m("-z1")]));
        assert_eq!(EulerFactor::tate(m("q")).dilate2(), EulerFactor::from_roots(vec![m("q^(1/2)"), m("-q^(1/2)")]));
        assert!(one.dilate(3).is_err());
        assert_eq!(one.dilate(1).unwrap(), one);
    }

    #[test]
    fn text_round_trip() {
        let e = EulerFactor::from_roots(vec![m("z1 * q^(-1/2)"), m("-1"), m("-1"), m("zeta(1/3)")]);
        let s = e.to_string();
        assert_eq!(s.parse::<EulerFactor>().unwrap(), e);
        assert_eq!("1".parse::<EulerFactor>().unwrap(), EulerFactor::one());
        assert_eq!(EulerFactor::one().to_string(), "1");
        assert!("(1 - z1 X)^-0".parse::<EulerFactor>().is_err());
        assert!("(1 + z1 X)^-1".parse::<EulerFactor>().is_err());
    }
}
