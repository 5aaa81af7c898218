//! Distinguished generic representations.
//!
//! For a character `alpha` of `F^*`, `chi_alpha` is the character
//! `diag(g1, g2) -> alpha(det g1 / det g2)` of `H_n = GL(ceil(n/2)) x
//! GL(floor(n/2))`. For odd `n` the classifier answers the question for
//! `chi_alpha * delta^{-1/2}`, whose distinguished generic representations are
//! `pi' x alpha|.|^{-1/2}` with `pi'` distinguished by `chi_alpha`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::galois::WDRep;
use crate::monoid::{Monomial, Q};
use crate::reps::{Cuspidal, GLRep, Segment};
use crate::{Error, Result};

/// Which square carries the pole deciding distinction of a discrete series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Square {
    Wedge2,
    Sym2,
}

/// Why a segment left unpaired is distinguished.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evidence {
    /// `L(square phi(rho), s)` has a pole at 0, `k` of the matching parity.
    Pole { k: u32, square: Square },
    /// Supplied by a caller oracle.
    Oracle(String),
}

/// Pairing and per-segment records, indices into the segment list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DistinctionCertificate {
    pub pairing: Vec<(usize, usize)>,
    pub distinguished_rest: Vec<(usize, Evidence)>,
    pub odd_tail: Option<usize>,
}

impl fmt::Display for DistinctionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("pairing {")?;
        for (n, (i, j)) in self.pairing.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", i + 1, j + 1)?;
        }
        f.write_str("}")?;
        for (i, e) in &self.distinguished_rest {
            match e {
                Evidence::Pole { k, square } => {
                    let sq = if *square == Square::Wedge2 { "wedge^2" } else { "Sym^2" };
                    write!(f, "; segment {} distinguished: k = {k}, pole at 0 of {sq}", i + 1)?;
                }
                Evidence::Oracle(s) => write!(f, "; segment {} distinguished: {s}", i + 1)?,
            }
        }
        if let Some(i) = self.odd_tail {
            write!(f, "; odd tail segment {}", i + 1)?;
        }
        Ok(())
    }
}

/// Distinction data for discrete series of even dimension.
pub trait DiscreteOracle: Sync {
    /// Whether `seg` is `(H, chi_alpha)`-distinguished, with evidence.
    fn distinguished(&self, seg: &Segment, alpha: &Cuspidal) -> Result<Option<Evidence>>;

    /// Values `t` such that `chi_t seg` is `(H, chi_alpha)`-distinguished
    /// (a superset is allowed; every candidate is re-checked).
    fn distinguished_twists(&self, seg: &Segment, alpha: &Cuspidal) -> Result<Vec<Monomial>>;

    /// Inverse roots of the exceptional part of `L^lin(seg, chi_alpha, s)`.
    fn radex(&self, seg: &Segment, alpha: &Cuspidal) -> Result<crate::EulerFactor>;
}

/// Criterion for trivial `alpha`: an even-dimensional unitary discrete series
/// `St_k(rho)` is distinguished exactly when `L(wedge^2 phi(rho), s)` (k odd)
/// or `L(Sym^2 phi(rho), s)` (k even) has a pole at `s = 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShalikaCriterion;

impl ShalikaCriterion {
    fn square(k: u32) -> Square {
        if k % 2 == 1 {
            Square::Wedge2
        } else {
            Square::Sym2
        }
    }

    fn pole_roots(seg: &Segment) -> Vec<Monomial> {
        let c = seg.center();
        match Self::square(seg.k()) {
            Square::Wedge2 => c.wedge2_roots(),
            Square::Sym2 => c.sym2_roots(),
        }
    }

    fn require_trivial(alpha: &Cuspidal) -> Result<()> {
        if alpha.is_trivial_character() {
            Ok(())
        } else {
            Err(Error::MissingOracle(format!("{alpha}")))
        }
    }
}

impl DiscreteOracle for ShalikaCriterion {
    fn distinguished(&self, seg: &Segment, alpha: &Cuspidal) -> Result<Option<Evidence>> {
        Self::require_trivial(alpha)?;
        if seg.dim() % 2 == 1 || !seg.central_character().is_unitary() {
            return Ok(None);
        }
        let hit = Self::pole_roots(seg).iter().any(Monomial::is_one);
        Ok(hit.then(|| Evidence::Pole { k: seg.k(), square: Self::square(seg.k()) }))
    }

    fn distinguished_twists(&self, seg: &Segment, alpha: &Cuspidal) -> Result<Vec<Monomial>> {
        Self::require_trivial(alpha)?;
        if seg.dim() % 2 == 1 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for u in Self::pole_roots(seg) {
            let t = u.inv().sqrt();
            out.push(Monomial::minus_one() * &t);
            out.push(t);
        }
        Ok(out)
    }

    fn radex(&self, seg: &Segment, alpha: &Cuspidal) -> Result<crate::EulerFactor> {
        Self::require_trivial(alpha)?;
        if seg.k() == 1 && seg.r() == 1 {
            let h = Monomial::q_pow(-Q::new(1, 2));
            return Ok(crate::EulerFactor::from_roots(seg.start().standard_roots().iter().map(|u| u * &h)));
        }
        Ok(crate::EulerFactor::from_roots(Self::pole_roots(seg)).dilate2())
    }
}

/// Whether a discrete series is `(H, chi_alpha)`-distinguished.
pub fn is_distinguished_discrete(d: &Segment, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<bool> {
    Ok(oracle.distinguished(d, alpha)?.is_some())
}

/// `alpha |.|^{-1/2}`.
pub fn odd_tail_character(alpha: &Cuspidal) -> Cuspidal {
    alpha.twist_abs(-Q::new(1, 2))
}

fn check_alpha(alpha: &Cuspidal) -> Result<()> {
    if !alpha.is_character() {
        return Err(Error::Domain(format!("{alpha} is not a character")));
    }
    if alpha.real_part().abs() > Q::new(1, 2) {
        return Err(Error::Domain(format!("Re({alpha}) outside [-1/2, 1/2]")));
    }
    Ok(())
}

/// Searches for a certificate of `(H, chi_alpha)`-distinction (odd `n`:
/// `chi_alpha delta^{-1/2}`).
pub fn classify_generic(pi: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<Option<DistinctionCertificate>> {
    if !pi.is_generic() {
        return Err(Error::NotGeneric);
    }
    check_alpha(alpha)?;
    let segs = &pi.segments;
    if pi.n().is_multiple_of(2) {
        let mut used = alloc::vec![false; segs.len()];
        let mut cert = DistinctionCertificate::default();
        return Ok(search(segs, alpha, oracle, &mut used, &mut cert)?.then_some(cert));
    }
    let tail: Segment = Segment::centered(odd_tail_character(alpha), 1);
    for (i, s) in segs.iter().enumerate() {
        if *s != tail {
            continue;
        }
        let mut used = alloc::vec![false; segs.len()];
        used[i] = true;
        let mut cert = DistinctionCertificate { odd_tail: Some(i), ..Default::default() };
        if search(segs, alpha, oracle, &mut used, &mut cert)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn search(
    segs: &[Segment],
    alpha: &Cuspidal,
    oracle: &dyn DiscreteOracle,
    used: &mut [bool],
    cert: &mut DistinctionCertificate,
) -> Result<bool> {
    let Some(i) = used.iter().position(|u| !u) else {
        return Ok(true);
    };
    used[i] = true;
    if segs[i].dim().is_multiple_of(2) {
        if let Some(ev) = oracle.distinguished(&segs[i], alpha)? {
            cert.distinguished_rest.push((i, ev));
            if search(segs, alpha, oracle, used, cert)? {
                return Ok(true);
            }
            cert.distinguished_rest.pop();
        }
    }
    let dual = segs[i].dual();
    for j in i + 1..segs.len() {
        if used[j] || segs[j] != dual {
            continue;
        }
        used[j] = true;
        cert.pairing.push((i, j));
        if search(segs, alpha, oracle, used, cert)? {
            return Ok(true);
        }
        cert.pairing.pop();
        used[j] = false;
    }
    used[i] = false;
    Ok(false)
}

/// Agreement between distinction (trivial `alpha`) and the symplectic test
/// on the Langlands parameter.
pub fn symplectic_equivalence_check(pi: &GLRep) -> Result<bool> {
    if !pi.is_generic() {
        return Err(Error::NotGeneric);
    }
    if pi.n() % 2 == 1 {
        return Err(Error::Domain(format!("{pi} has odd dimension")));
    }
    if let Some(s) = pi.segments.iter().find(|s| !s.central_character().is_unitary()) {
        return Err(Error::Domain(format!("{s} is not unitary")));
    }
    let dist = classify_generic(pi, &Cuspidal::trivial_character(), &ShalikaCriterion)?.is_some();
    Ok(dist == WDRep::langlands_param(pi).fixes_symplectic_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn st(w: &str, k: u32) -> Segment {
        Segment::centered(Cuspidal::character(m(w)), k)
    }

    fn triv() -> Cuspidal {
        Cuspidal::trivial_character()
    }

    #[test]
    fn discrete_criterion() {
        let o = ShalikaCriterion;
        assert!(is_distinguished_discrete(&st("1", 2), &triv(), &o).unwrap());
        assert!(!is_distinguished_discrete(&st("z1", 2), &triv(), &o).unwrap());
        assert!(!is_distinguished_discrete(&st("1", 3), &triv(), &o).unwrap());
        assert!(!is_distinguished_discrete(&st("1", 1), &triv(), &o).unwrap());
        assert!(is_distinguished_discrete(&st("1", 2), &Cuspidal::character(m("z1")), &o).is_err());
    }

    #[test]
    fn generic_classification() {
        let o = ShalikaCriterion;
        let d = st("z1 * q^(-1/3)", 2);
        let pi = GLRep::new(vec![d.clone(), d.dual()]);
        let c = classify_generic(&pi, &triv(), &o).unwrap().unwrap();
        assert_eq!(c.pairing, vec![(0, 1)]);
        let pi = GLRep::new(vec![st("z1", 1), st("z2", 1)]);
        assert!(classify_generic(&pi, &triv(), &o).unwrap().is_none());
        let pi = GLRep::new(vec![st("1", 2), st("q^(1/2)", 1)]);
        let c = classify_generic(&pi, &triv(), &o).unwrap().unwrap();
        assert_eq!(c.odd_tail, Some(1));
        assert_eq!(c.distinguished_rest.len(), 1);
    }

    #[test]
    fn symplectic_agreement() {
        for pi in [
            GLRep::new(vec![st("z1", 1), st("z1^(-1)", 1)]),
            GLRep::from(st("1", 2)),
            GLRep::new(vec![st("z1", 1), st("z2", 1)]),
        ] {
            assert!(symplectic_equivalence_check(&pi).unwrap());
        }
    }
}
