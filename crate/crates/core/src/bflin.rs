//! Linear-period factors `L^lin(pi, chi_alpha, s)`.
//!
//! Two independent routes are provided. [`lin_l_langlands`] multiplies the
//! discrete-series factors and the dilated pair factors of a Langlands-type
//! product. [`lin_l_via_derivatives`] takes the lcm of the exceptional factors
//! of all derivative components, each obtained from the distinction
//! classifier. The Galois side is [`galois_side`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::distinction::{classify_generic, odd_tail_character, DiscreteOracle, ShalikaCriterion};
use crate::euler::EulerFactor;
use crate::galois::WDRep;
use crate::monoid::{Monomial, Q};
use crate::pairs::pair_l;
use crate::reps::{Cuspidal, GLRep, Segment};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinLResult {
    pub l: EulerFactor,
    pub l0: EulerFactor,
    pub lradex: EulerFactor,
    pub alpha: Cuspidal,
}

fn half() -> Q {
    Q::new(1, 2)
}

/// `L^lin(d, chi_alpha, s) = Lradex(d) * L^lin(d^(r))`.
pub fn lin_l_discrete(d: &Segment, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<LinLResult> {
    let lradex = oracle.radex(d, alpha)?;
    let l0 = if d.k() == 1 {
        EulerFactor::one()
    } else {
        let Ok(crate::reps::Derivative::Seg(next)) = d.derivative(d.r()) else {
            unreachable!("k > 1 leaves a segment")
        };
        lin_l_discrete(&next, alpha, oracle)?.l
    };
    Ok(LinLResult { l: l0.mul(&lradex), l0, lradex, alpha: alpha.clone() })
}

fn check_langlands_alpha(alpha: &Cuspidal) -> Result<()> {
    let re = alpha.real_part();
    if !alpha.is_character() || re.is_positive() || re < -half() {
        return Err(Error::Domain(format!("Re({alpha}) must lie in [-1/2, 0]")));
    }
    Ok(())
}

/// `prod_k L^lin(Delta_k) prod_{i<j} L(Delta_i, Delta_j, 2s)` on the
/// Langlands-sorted product. `Lradex` follows the general-position shape:
/// the discrete one for `t = 1`, the dilated pair one for `t = 2`, trivial
/// beyond.
pub fn lin_l_langlands(pi: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<LinLResult> {
    check_langlands_alpha(alpha)?;
    let pi = pi.langlands_sort();
    let s = &pi.segments;
    let mut l = EulerFactor::one();
    let mut lradex = EulerFactor::one();
    for d in s {
        let r = lin_l_discrete(d, alpha, oracle)?;
        if s.len() == 1 {
            lradex = r.lradex.clone();
        }
        l = l.mul(&r.l);
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let p = pair_l(&s[i], &s[j]);
            if s.len() == 2 {
                lradex = p.lradex.dilate2();
            }
            l = l.mul(&p.l.dilate2());
        }
    }
    let l0 = l.div_exact(&lradex)?;
    Ok(LinLResult { l, l0, lradex, alpha: alpha.clone() })
}

/// Candidate twists `t` for which `chi_t tau` may be distinguished for
/// `chi_beta` (odd size: `chi_beta delta^{-1/2}`).
fn twist_candidates(tau: &GLRep, beta: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<Vec<Monomial>> {
    let segs = &tau.segments;
    let mut out = Vec::new();
    if tau.n() % 2 == 1 {
        let tail = odd_tail_character(beta);
        for s in segs.iter().filter(|s| s.k() == 1 && s.start().is_character()) {
            if let Some((t, _)) = s.start().solve_twist(&tail) {
                out.push(t);
            }
        }
    }
    for (i, a) in segs.iter().enumerate() {
        for (j, b) in segs.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some((sq, f)) = b.solve_twist(&a.dual()) {
                for m in 0..f {
                    let t = (&sq * &Monomial::zeta(m as i64, f as i64)).sqrt();
                    out.push(Monomial::minus_one() * &t);
                    out.push(t);
                }
            }
        }
        if a.dim() % 2 == 0 {
            out.extend(oracle.distinguished_twists(a, beta)?);
        }
    }
    Ok(out)
}

/// Exceptional factor `L^lin_ex(tau, chi_alpha, s)` of an irreducible generic
/// representation: a simple root `q^{s0}` for each `s0` such that
/// `|.|^{s0} tau` is distinguished for `chi_alpha^{-1}` (odd size:
/// `chi_alpha^{-1} delta^{-1/2}`).
pub fn lin_l_ex(tau: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<EulerFactor> {
    if tau.is_empty() {
        return Ok(EulerFactor::one());
    }
    if !tau.is_generic() {
        return Err(Error::NotGeneric);
    }
    let beta = alpha.dual();
    let mut roots: Vec<Monomial> = Vec::new();
    for t in twist_candidates(tau, &beta, oracle)? {
        let u = t.inv();
        if roots.contains(&u) {
            continue;
        }
        if classify_generic(&tau.twist(&t), &beta, oracle)?.is_some() {
            roots.push(u);
        }
    }
    Ok(EulerFactor::simple(roots))
}

/// lcm of [`lin_l_ex`] over all derivative components of `pi`. Exceptional
/// roots are counted once, which is exact in general position.
pub fn lin_l_via_derivatives(pi: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<EulerFactor> {
    if !pi.is_generic() {
        return Err(Error::NotGeneric);
    }
    pi.check_completely_reducible()?;
    let mut l = EulerFactor::one();
    for level in 0..pi.n() {
        for c in pi.derivative_components(level)? {
            l = l.lcm(&lin_l_ex(&c.rep, alpha, oracle)?);
        }
    }
    Ok(l)
}

/// `L(phi, s + 1/2) L(wedge^2 phi, 2s)` for `phi = phi(pi)`, computed from
/// the sum expansion of the exterior square.
pub fn galois_side(pi: &GLRep) -> EulerFactor {
    galois_side_param(&WDRep::langlands_param(pi))
}

pub fn galois_side_param(phi: &WDRep) -> EulerFactor {
    phi.artin_l().shift(half()).mul(&phi.wedge2_l().dilate2())
}

/// Outcome of one condition of general position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condition {
    pub index: u8,
    /// `None` when the condition is not checked.
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralPositionReport {
    pub twisted: GLRep,
    pub conditions: Vec<Condition>,
}

impl GeneralPositionReport {
    /// Conditions 1 to 7 all hold.
    pub fn in_general_position(&self) -> bool {
        self.conditions.iter().all(|c| c.holds != Some(false))
    }

    pub fn violated(&self) -> Vec<u8> {
        self.conditions.iter().filter(|c| c.holds == Some(false)).map(|c| c.index).collect()
    }
}

impl fmt::Display for GeneralPositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "twisted: {}", self.twisted)?;
        for c in &self.conditions {
            let status = match c.holds {
                Some(true) => "ok",
                Some(false) => "VIOLATED",
                None => "unchecked",
            };
            write!(f, "condition {}: {status}", c.index)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "general position: {}", if self.in_general_position() { "yes" } else { "no" })
    }
}

/// Checks conditions 1 to 7 for `pi_u = (chi_{t_1} Delta_1) x ... x
/// (chi_{t_t} Delta_t)`; condition 8 is reported as unchecked.
pub fn is_general_position(
    pi: &GLRep,
    twists: &[Monomial],
    alpha: &Cuspidal,
    oracle: &dyn DiscreteOracle,
) -> Result<GeneralPositionReport> {
    if twists.len() != pi.len() {
        return Err(Error::Domain(format!("{} twists for {} segments", twists.len(), pi.len())));
    }
    let segs: Vec<Segment> = pi.segments.iter().zip(twists).map(|(s, t)| s.twist(t)).collect();
    let twisted = GLRep::new(segs.clone());
    let t = segs.len();
    let mut conditions = Vec::new();

    let mut c1 = (true, String::new());
    let mut c2 = (true, String::new());
    for level in 0..=twisted.n() {
        let comps = twisted.derivative_components(level)?;
        for c in &comps {
            if c1.0 && !c.rep.is_generic() {
                c1 = (false, format!("{} is reducible", c.rep));
            }
        }
        for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                if c2.0 && comps[i].rep.central_character() == comps[j].rep.central_character() {
                    c2 = (false, format!("{} and {} at level {level}", comps[i].rep, comps[j].rep));
                }
            }
        }
    }
    conditions.push(Condition { index: 1, holds: Some(c1.0), detail: c1.1 });
    conditions.push(Condition { index: 2, holds: Some(c2.0), detail: c2.1 });

    let lin: Vec<EulerFactor> = segs.iter().map(|d| lin_l_discrete(d, alpha, oracle).map(|r| r.l)).collect::<Result<_>>()?;
    let std_half: Vec<EulerFactor> = segs
        .iter()
        .map(|d| d.twist_by_character(alpha).map(|ad| WDRep::langlands_param(&ad.into()).artin_l().shift(half())))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            pairs.push(((i, j), pair_l(&segs[i], &segs[j]).l.dilate2()));
        }
    }

    let mut c3 = None;
    for i in 0..t {
        for j in i + 1..t {
            if c3.is_none() && lin[i].shares_root_with(&lin[j]) {
                c3 = Some(format!("L^lin of segments {} and {}", i + 1, j + 1));
            }
        }
    }
    let mut c4 = None;
    for (a, (ia, pa)) in pairs.iter().enumerate() {
        for (ib, pb) in &pairs[a + 1..] {
            if c4.is_none() && pa.shares_root_with(pb) {
                c4 = Some(format!("pairs {ia:?} and {ib:?}"));
            }
        }
    }
    let mut c5 = None;
    let mut c7 = None;
    for (ij, p) in &pairs {
        for k in 0..t {
            if c5.is_none() && p.shares_root_with(&lin[k]) {
                c5 = Some(format!("pair {ij:?} and L^lin of segment {}", k + 1));
            }
            if c7.is_none() && p.shares_root_with(&std_half[k]) {
                c7 = Some(format!("pair {ij:?} and L(alpha x segment {}, s+1/2)", k + 1));
            }
        }
    }
    let mut c6 = None;
    for i in 0..t {
        for j in 0..t {
            if i != j && c6.is_none() && lin[i].shares_root_with(&std_half[j]) {
                c6 = Some(format!("L^lin of segment {} and L(alpha x segment {}, s+1/2)", i + 1, j + 1));
            }
        }
    }
    for (index, c) in [(3u8, c3), (4, c4), (5, c5), (6, c6), (7, c7)] {
        conditions.push(Condition { index, holds: Some(c.is_none()), detail: c.unwrap_or_default() });
    }
    conditions.push(Condition { index: 8, holds: None, detail: "Hom-space dimension".into() });
    Ok(GeneralPositionReport { twisted, conditions })
}

/// Replaces `s` by `1/2 - s` up to a unit: `u -> q^{1/2} / u`.
pub fn reflect_half(e: &EulerFactor) -> EulerFactor {
    let h = Monomial::q_pow(half());
    e.map_roots(|u| &h / u)
}

/// The factor of the contragredient side, `L(phi(tau), s) L(wedge^2
/// phi(tau), 2s)` for `tau` the contragredient with the twisted character.
fn dual_side(pi: &GLRep) -> EulerFactor {
    let phi = WDRep::langlands_param(pi);
    phi.artin_l().mul(&phi.wedge2_l().dilate2())
}

/// Whether `L^lin(pi~, 1/2 - s) / L^lin(pi, s)` and the product of the
/// segment-level quotients differ by a unit (trivial `alpha`).
pub fn gamma_ratio_check(pi: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<bool> {
    if !alpha.is_trivial_character() {
        return Err(Error::MissingOracle(format!("{alpha} on the contragredient side")));
    }
    let pi = pi.langlands_sort();
    let s = &pi.segments;
    let units = alloc::vec![Monomial::one(); s.len()];
    let l_pi = if is_general_position(&pi, &units, alpha, oracle)?.in_general_position() {
        lin_l_via_derivatives(&pi, alpha, oracle)?
    } else {
        lin_l_langlands(&pi, alpha, oracle)?.l
    };
    let l_dual = dual_side(&pi.dual());
    let mut seg_num = EulerFactor::one();
    let mut seg_den = EulerFactor::one();
    for d in s {
        seg_den = seg_den.mul(&lin_l_discrete(d, alpha, oracle)?.l);
        seg_num = seg_num.mul(&dual_side(&d.dual().into()));
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            seg_den = seg_den.mul(&pair_l(&s[i], &s[j]).l.dilate2());
            seg_num = seg_num.mul(&pair_l(&s[j].dual(), &s[i].dual()).l.dilate2());
        }
    }
    let lhs = reflect_half(&l_dual).mul(&seg_den);
    let rhs = l_pi.mul(&reflect_half(&seg_num));
    Ok(lhs == rhs)
}

/// Both sides of `L^lin(pi, s) = L(phi(pi), s + 1/2) L(wedge^2 phi(pi), 2s)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MainTheoremReport {
    pub lhs: EulerFactor,
    pub rhs: EulerFactor,
    pub equal: bool,
    pub only_lhs: EulerFactor,
    pub only_rhs: EulerFactor,
}

/// Compares the linear-period factor (trivial character) with the Galois
/// side.
pub fn verify_main_theorem(pi: &GLRep) -> Result<MainTheoremReport> {
    if !pi.is_generic() {
        return Err(Error::NotGeneric);
    }
    let lhs = lin_l_langlands(pi, &Cuspidal::trivial_character(), &ShalikaCriterion)?.l;
    let rhs = galois_side(pi);
    let (only_lhs, only_rhs) = lhs.symmetric_difference(&rhs);
    Ok(MainTheoremReport { equal: lhs == rhs, lhs, rhs, only_lhs, only_rhs })
}

/// For each exceptional root of `L^lin(pi)`, the list of situations (1 to 6)
/// among segment-level factors that explain it.
pub fn translation_cases(pi: &GLRep, alpha: &Cuspidal, oracle: &dyn DiscreteOracle) -> Result<Vec<(Monomial, Vec<u8>)>> {
    check_langlands_alpha(alpha)?;
    let s = &pi.segments;
    let t = s.len();
    let radex: Vec<EulerFactor> = s.iter().map(|d| oracle.radex(d, alpha)).collect::<Result<_>>()?;
    let std_half: Vec<EulerFactor> = s
        .iter()
        .map(|d| d.twist_by_character(alpha).map(|ad| WDRep::langlands_param(&ad.into()).artin_l().shift(half())))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            pairs.push(pair_l(&s[i], &s[j]).lradex.dilate2());
        }
    }
    let mut out = Vec::new();
    for (u, _) in lin_l_ex(pi, alpha, oracle)?.roots() {
        let has = |e: &EulerFactor| e.multiplicity(u) > 0;
        let mut cases = Vec::new();
        if (0..t).any(|i| (0..t).any(|j| i != j && has(&radex[i]) && has(&radex[j]))) {
            cases.push(1);
        }
        if (0..pairs.len()).any(|a| (0..pairs.len()).any(|b| a != b && has(&pairs[a]) && has(&pairs[b]))) {
            cases.push(2);
        }
        if pairs.iter().any(has) && radex.iter().any(has) {
            cases.push(3);
        }
        if (0..t).any(|i| (0..t).any(|j| i != j && has(&radex[i]) && has(&std_half[j]))) {
            cases.push(4);
        }
        if pairs.iter().any(has) && std_half.iter().any(has) {
            cases.push(5);
        }
        if t == 2 && has(&pairs[0]) {
            cases.push(6);
        }
        out.push((u.clone(), cases));
    }
    Ok(out)
}

/// `u^n = c_pi alpha^{eps} q^{-eps/2}` for every root of `Lradex`, with
/// `eps = n mod 2`.
pub fn radex_bound_holds(pi: &GLRep, r: &LinLResult) -> bool {
    let n = pi.n() as i64;
    let eps = n % 2;
    let target = pi.central_character() * r.alpha.twist_value().pow(eps) * Monomial::q_pow(-Q::new(eps, 2));
    r.lradex.roots().all(|(u, m)| m == 1 && u.pow(n) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn chi(s: &str) -> Cuspidal {
        Cuspidal::character(m(s))
    }

    fn st(w: &str, k: u32) -> Segment {
        Segment::centered(chi(w), k)
    }

    fn triv() -> Cuspidal {
        Cuspidal::trivial_character()
    }

    #[test]
    fn discrete_factors() {
        let o = ShalikaCriterion;
        let r = lin_l_discrete(&st("z1", 1), &triv(), &o).unwrap();
        assert_eq!(r.l, EulerFactor::tate(m("z1 * q^(-1/2)")));
        let r = lin_l_discrete(&st("z1", 2), &triv(), &o).unwrap();
        assert_eq!(r.l0, EulerFactor::tate(m("z1 * q^(-1)")));
        assert_eq!(r.lradex, EulerFactor::tate(m("z1^2")).dilate2());
        assert!(lin_l_discrete(&st("z1", 2), &chi("z2"), &o).is_err());
    }

    #[test]
    fn langlands_products() {
        let o = ShalikaCriterion;
        let pi = GLRep::new(vec![st("z1", 1), st("z2", 1)]);
        let r = lin_l_langlands(&pi, &triv(), &o).unwrap();
        let want = EulerFactor::from_roots(vec![m("z1 * q^(-1/2)"), m("z2 * q^(-1/2)")])
            .mul(&EulerFactor::tate(m("z1 * z2")).dilate2());
        assert_eq!(r.l, want);
        let d = st("z1 * q^(-1/4)", 2);
        let pi = GLRep::new(vec![d.clone(), d.dual()]);
        let r = lin_l_langlands(&pi, &triv(), &o).unwrap();
        assert!(EulerFactor::tate(m("1")).dilate2().divides(&r.lradex));
        assert!(lin_l_langlands(&pi, &Cuspidal::abs(Q::new(1, 2)), &o).is_err());
    }

    #[test]
    fn derivative_route() {
        let o = ShalikaCriterion;
        let one: GLRep = st("1", 1).into();
        assert_eq!(lin_l_via_derivatives(&one, &triv(), &o).unwrap(), EulerFactor::tate(m("q^(-1/2)")));
        let pi = GLRep::new(vec![st("z1", 2), st("z2", 1)]);
        let a = lin_l_via_derivatives(&pi, &triv(), &o).unwrap();
        let b = lin_l_langlands(&pi, &triv(), &o).unwrap().l;
        assert_eq!(a, b);
    }

    #[test]
    fn general_position() {
        let o = ShalikaCriterion;
        let single: GLRep = st("z1", 2).into();
        assert!(is_general_position(&single, &[Monomial::one()], &triv(), &o).unwrap().in_general_position());
        let pi = GLRep::new(vec![st("z1", 1), st("z1", 1)]);
        let rep = is_general_position(&pi, &[Monomial::one(), Monomial::one()], &triv(), &o).unwrap();
        assert!(rep.violated().contains(&2));
        let rep = is_general_position(&pi, &[m("z3"), m("z4")], &triv(), &o).unwrap();
        assert!(rep.in_general_position(), "{rep}");
    }

    #[test]
    fn main_theorem_examples() {
        for pi in [GLRep::from(st("z1", 1)), st("z1", 2).into(), GLRep::new(vec![st("z1", 1), st("z2", 1)])] {
            let r = verify_main_theorem(&pi).unwrap();
            assert!(r.equal, "{pi}: {} vs {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn gamma_ratios() {
        let o = ShalikaCriterion;
        for pi in [
            GLRep::from(st("z1", 3)),
            GLRep::new(vec![st("z1", 1), st("z2", 1)]),
            GLRep::new(vec![st("z1", 2), st("z2", 1)]),
        ] {
            assert!(gamma_ratio_check(&pi, &triv(), &o).unwrap(), "{pi}");
        }
    }

    #[test]
    fn radex_bound() {
        let o = ShalikaCriterion;
        for d in [st("z1", 1), st("z1", 2), st("z1 * q^(1/2)", 3)] {
            let r = lin_l_discrete(&d, &triv(), &o).unwrap();
            assert!(radex_bound_holds(&d.clone().into(), &r), "{d}");
        }
    }
}
