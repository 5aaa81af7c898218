//! Semisimple Weil-Deligne representations `sum phi(rho_i) (x) Sp(k_i)` and
//! their Artin factors.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::euler::EulerFactor;
use crate::monoid::{Monomial, Q};
use crate::reps::{Cuspidal, FormType, GLRep};
use crate::{Error, Result};

/// Multiset of summands `phi(rho) (x) Sp(k)`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct WDRep {
    summands: Vec<(Cuspidal, u32)>,
}

/// `Sp(a) (x) Sp(b) = sum_{j < min(a,b)} Sp(a + b - 1 - 2j)`.
pub fn clebsch_gordan(a: u32, b: u32) -> Vec<u32> {
    (0..a.min(b)).map(|j| a + b - 1 - 2 * j).collect()
}

/// `wedge^2 Sp(k) = Sp(2k-3) + Sp(2k-7) + ...`.
pub fn wedge2_sp(k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2 * k as i64 - 3;
    while d > 0 {
        out.push(d as u32);
        d -= 4;
    }
    out
}

/// `Sym^2 Sp(k) = Sp(2k-1) + Sp(2k-5) + ...`.
pub fn sym2_sp(k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2 * k as i64 - 1;
    while d > 0 {
        out.push(d as u32);
        d -= 4;
    }
    out
}

fn sp_shift(k: u32) -> Q {
    Q::new(k as i64 - 1, 2)
}

fn shifted(roots: &[Monomial], k: u32) -> EulerFactor {
    EulerFactor::from_roots(roots.iter().cloned()).shift(sp_shift(k))
}

fn atom_tensor(a: &Cuspidal, b: &Cuspidal) -> Result<Cuspidal> {
    if a.is_character() {
        b.twist_by_character(a)
    } else if b.is_character() {
        a.twist_by_character(b)
    } else {
        Err(Error::UndeclaredTensor(format!("{a} (x) {b}")))
    }
}

impl WDRep {
    pub fn new(mut summands: Vec<(Cuspidal, u32)>) -> Self {
        summands.retain(|s| s.1 > 0);
        summands.sort();
        WDRep { summands }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn summands(&self) -> &[(Cuspidal, u32)] {
        &self.summands
    }

    pub fn dim(&self) -> u32 {
        self.summands.iter().map(|(a, k)| a.r() * k).sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().cloned());
        Self::new(s)
    }

    pub fn dual(&self) -> Self {
        Self::new(self.summands.iter().map(|(a, k)| (a.dual(), *k)).collect())
    }

    /// `phi(pi)`: one summand `phi(center) (x) Sp(k)` per segment.
    pub fn langlands_param(pi: &GLRep) -> Self {
        Self::new(pi.segments.iter().map(|s| (s.center(), s.k())).collect())
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let mut out = Vec::new();
        for (a, k) in &self.summands {
            for (b, l) in &other.summands {
                let ab = atom_tensor(a, b)?;
                out.extend(clebsch_gordan(*k, *l).into_iter().map(|m| (ab.clone(), m)));
            }
        }
        Ok(Self::new(out))
    }

    fn require_characters(&self, what: &str) -> Result<()> {
        match self.summands.iter().find(|(a, _)| !a.is_character()) {
            Some((a, _)) => Err(Error::UndeclaredTensor(format!("{what} of {a}; use the L-factor form"))),
            None => Ok(()),
        }
    }

    fn square(&self, wedge: bool) -> Result<Self> {
        self.require_characters(if wedge { "wedge^2" } else { "Sym^2" })?;
        let s = &self.summands;
        let mut out = Vec::new();
        for (i, (a, k)) in s.iter().enumerate() {
            let a2 = atom_tensor(a, a)?;
            let parts = if wedge { wedge2_sp(*k) } else { sym2_sp(*k) };
            out.extend(parts.into_iter().map(|m| (a2.clone(), m)));
            for (b, l) in &s[i + 1..] {
                let ab = atom_tensor(a, b)?;
                out.extend(clebsch_gordan(*k, *l).into_iter().map(|m| (ab.clone(), m)));
            }
        }
        Ok(Self::new(out))
    }

    /// `wedge^2`, for parameters made of characters.
    pub fn wedge2(&self) -> Result<Self> {
        self.square(true)
    }

    /// `Sym^2`, for parameters made of characters.
    pub fn sym2(&self) -> Result<Self> {
        self.square(false)
    }

    /// `L(self, s)` with `L(tau (x) Sp(k), s) = L(tau, s + (k-1)/2)`.
    pub fn artin_l(&self) -> EulerFactor {
        self.summands.iter().map(|(a, k)| shifted(&a.standard_roots(), *k)).product()
    }

    fn square_l(&self, wedge: bool) -> EulerFactor {
        let s = &self.summands;
        let mut out = EulerFactor::one();
        for (i, (a, k)) in s.iter().enumerate() {
            let (w2, s2) = (a.wedge2_roots(), a.sym2_roots());
            let (with_w2, with_s2) = if wedge { (sym2_sp(*k), wedge2_sp(*k)) } else { (wedge2_sp(*k), sym2_sp(*k)) };
            for m in with_w2 {
                out = out.mul(&shifted(&w2, m));
            }
            for m in with_s2 {
                out = out.mul(&shifted(&s2, m));
            }
            for (b, l) in &s[i + 1..] {
                let ab = a.pair_roots(b);
                for m in clebsch_gordan(*k, *l) {
                    out = out.mul(&shifted(&ab, m));
                }
            }
        }
        out
    }

    /// `L(wedge^2 self, s)` from atom-level data; works for every atom.
    pub fn wedge2_l(&self) -> EulerFactor {
        self.square_l(true)
    }

    /// `L(Sym^2 self, s)` from atom-level data.
    pub fn sym2_l(&self) -> EulerFactor {
        self.square_l(false)
    }

    /// `L(self (x) self, s)` from atom-level data.
    pub fn tensor_square_l(&self) -> EulerFactor {
        let mut out = EulerFactor::one();
        for (a, k) in &self.summands {
            for (b, l) in &self.summands {
                let ab = a.pair_roots(b);
                for m in clebsch_gordan(*k, *l) {
                    out = out.mul(&shifted(&ab, m));
                }
            }
        }
        out
    }

    /// Whether the parameter preserves a nondegenerate symplectic form.
    ///
    /// Summands not isomorphic to their dual must occur as often as their
    /// dual; self-dual orthogonal summands must occur an even number of
    /// times; symplectic summands are free.
    pub fn fixes_symplectic_form(&self) -> bool {
        let s = &self.summands;
        let count = |x: &(Cuspidal, u32)| s.iter().filter(|y| *y == x).count();
        s.iter().all(|(a, k)| {
            let dual = (a.dual(), *k);
            if dual.0 != *a {
                return count(&(a.clone(), *k)) == count(&dual);
            }
            let summand_type = match a.form_type() {
                Some(t) if k % 2 == 0 => Some(t.opposite()),
                t => t,
            };
            match summand_type {
                Some(FormType::Symplectic) => true,
                _ => count(&(a.clone(), *k)) % 2 == 0,
            }
        })
    }
}

impl fmt::Display for WDRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, k)) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "({a})⊗Sp({k})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{CuspidalBase, Label, Segment, SelfDual};
    use alloc::sync::Arc;
    use alloc::vec;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn chi(s: &str) -> Cuspidal {
        Cuspidal::character(m(s))
    }

    fn wd(parts: &[(&str, u32)]) -> WDRep {
        WDRep::new(parts.iter().map(|(s, k)| (chi(s), *k)).collect())
    }

    #[test]
    fn clebsch_gordan_small() {
        assert_eq!(clebsch_gordan(2, 2), vec![3, 1]);
        assert_eq!(clebsch_gordan(3, 2), vec![4, 2]);
        assert_eq!(wedge2_sp(2), vec![1]);
        assert_eq!(wedge2_sp(3), vec![3]);
        assert_eq!(sym2_sp(3), vec![5, 1]);
        assert!(wedge2_sp(1).is_empty());
    }

    #[test]
    fn parameters_and_tensors() {
        let pi = GLRep::from(Segment::centered(chi("z1"), 2));
        assert_eq!(WDRep::langlands_param(&pi), wd(&[("z1", 2)]));
        assert_eq!(wd(&[("z1", 1)]).tensor(&wd(&[("z2", 1)])).unwrap(), wd(&[("z1 * z2", 1)]));
        assert_eq!(wd(&[("1", 2)]).tensor(&wd(&[("1", 2)])).unwrap(), wd(&[("1", 3), ("1", 1)]));
        assert_eq!(wd(&[("z1", 1), ("z2", 1)]).wedge2().unwrap(), wd(&[("z1 * z2", 1)]));
        assert_eq!(wd(&[("z1", 2)]).wedge2().unwrap(), wd(&[("z1^2", 1)]));
        assert_eq!(wd(&[("z1", 3)]).wedge2().unwrap(), wd(&[("z1^2", 3)]));
    }

    #[test]
    fn artin_factors() {
        assert_eq!(wd(&[("z1", 1)]).artin_l(), EulerFactor::tate(m("z1")));
        let ram = Cuspidal::character_labeled(m("z1"), Label::generator("eta", 2, 1).unwrap());
        assert!(WDRep::new(vec![(ram, 1)]).artin_l().is_one());
        assert_eq!(wd(&[("z1", 2)]).artin_l(), EulerFactor::tate(m("z1 * q^(-1/2)")));
        let a = wd(&[("z1", 2), ("z2", 3)]);
        assert_eq!(a.wedge2_l(), a.wedge2().unwrap().artin_l());
        assert_eq!(a.sym2_l(), a.sym2().unwrap().artin_l());
    }

    #[test]
    fn symplectic_forms() {
        assert!(wd(&[("z1", 1), ("z1^(-1)", 1)]).fixes_symplectic_form());
        assert!(!wd(&[("1", 1)]).fixes_symplectic_form());
        assert!(wd(&[("1", 2)]).fixes_symplectic_form());
        assert!(wd(&[("1", 1), ("1", 1)]).fixes_symplectic_form());
        assert!(!wd(&[("1", 1), ("-1", 1)]).fixes_symplectic_form());
        assert!(!wd(&[("z1", 1), ("z2", 1)]).fixes_symplectic_form());
        let base = CuspidalBase::new("rho", 2, 1, Some(SelfDual { kind: FormType::Symplectic, at: Monomial::one() }));
        let rho = Cuspidal::new(Arc::new(base.unwrap()), Label::trivial(), Monomial::one());
        assert!(WDRep::new(vec![(rho.clone(), 1)]).fixes_symplectic_form());
        assert!(!WDRep::new(vec![(rho, 2)]).fixes_symplectic_form());
    }
}
