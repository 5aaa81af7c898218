//! Rankin-Selberg factors `L(pi, pi', s)` from the derivative recursion.
//!
//! `L = L0 * Lradex`, where `L0` is the lcm of the exceptional factors of all
//! pairs of derivative components of equal size other than `(pi, pi')`, and
//! `Lradex` has one simple root `q^{s0}` for every `s0` with
//! `pi' = |.|^{-s0} pi^v`.

use alloc::format;
use alloc::vec::Vec;

use crate::euler::EulerFactor;
use crate::monoid::Monomial;
use crate::reps::{Component, GLRep, Segment};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairLResult {
    pub l: EulerFactor,
    pub l0: EulerFactor,
    pub lex: EulerFactor,
    pub lradex: EulerFactor,
}

/// Simple roots `q^{s0}` with `pip = |.|^{-s0} pi^v`, including the whole
/// pack of self-twists. Unequal sizes give 1.
pub fn exceptional_pole_roots(pi: &GLRep, pip: &GLRep) -> Result<EulerFactor> {
    if !pi.is_generic() || !pip.is_generic() {
        return Err(Error::NotGeneric);
    }
    Ok(exceptional_unchecked(pi, pip))
}

fn exceptional_unchecked(pi: &GLRep, pip: &GLRep) -> EulerFactor {
    if pi.n() != pip.n() || pi.len() != pip.len() || pi.is_empty() {
        return EulerFactor::one();
    }
    let dual = pi.dual();
    let first = &dual.segments[0];
    let mut roots = Vec::new();
    for target in &pip.segments {
        let Some((t, f)) = first.solve_twist(target) else { continue };
        for j in 0..f {
            let tj = &t * &Monomial::zeta(j as i64, f as i64);
            if !roots.contains(&tj) && dual.twist(&tj).same_multiset(pip) {
                roots.push(tj);
            }
        }
    }
    EulerFactor::simple(roots)
}

fn assemble(l0: EulerFactor, lex: EulerFactor) -> PairLResult {
    PairLResult { l: l0.mul(&lex), l0, lradex: lex.clone(), lex }
}

/// `L(a, b, s)` for two segments.
pub fn pair_l(a: &Segment, b: &Segment) -> PairLResult {
    let da = segment_derivatives(a);
    let db = segment_derivatives(b);
    let mut l0 = EulerFactor::one();
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            if (i, j) == (0, 0) || x.is_empty() || y.is_empty() {
                continue;
            }
            l0 = l0.lcm(&exceptional_unchecked(x, y));
        }
    }
    assemble(l0, exceptional_unchecked(&a.clone().into(), &b.clone().into()))
}

/// `a, a^(r), a^(2r), ...` down to the unit.
fn segment_derivatives(a: &Segment) -> Vec<GLRep> {
    (0..=a.k())
        .map(|i| match a.derivative(i * a.r()).expect("in range") {
            crate::reps::Derivative::Seg(s) => s.into(),
            _ => GLRep::unit(),
        })
        .collect()
}

fn all_components(pi: &GLRep) -> Result<Vec<Component>> {
    let mut out = Vec::new();
    for l in 0..=pi.n() {
        out.extend(pi.derivative_components(l)?);
    }
    Ok(out)
}

/// `L(pi, pip, s)` for products with completely reducible derivatives.
pub fn pair_l_rep(pi: &GLRep, pip: &GLRep) -> Result<PairLResult> {
    for x in [pi, pip] {
        if !x.is_generic() {
            return Err(Error::NotGeneric);
        }
        x.check_completely_reducible()?;
    }
    let ca = all_components(pi)?;
    let cb = all_components(pip)?;
    let mut l0 = EulerFactor::one();
    for x in &ca {
        for y in &cb {
            let top = x.rep.n() == pi.n() && y.rep.n() == pip.n();
            if top || x.rep.is_empty() || y.rep.is_empty() {
                continue;
            }
            l0 = l0.lcm(&exceptional_unchecked(&x.rep, &y.rep));
        }
    }
    Ok(assemble(l0, exceptional_unchecked(pi, pip)))
}

/// `prod_i L(Delta_i, Delta'_j, s)` over all segment pairs, the value of
/// `L(pi, pi', s)` for generic products.
pub fn pair_l_product(pi: &GLRep, pip: &GLRep) -> EulerFactor {
    pi.segments.iter().flat_map(|a| pip.segments.iter().map(move |b| pair_l(a, b).l)).product()
}

/// Renders a result as four labelled lines.
pub fn describe(r: &PairLResult) -> alloc::string::String {
    format!("L = {}\nL0 = {}\nLex = {}\nLradex = {}", r.l, r.l0, r.lex, r.lradex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Q;
    use crate::reps::Cuspidal;
    use alloc::vec;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn st(w: &str, k: u32) -> Segment {
        Segment::centered(Cuspidal::character(m(w)), k)
    }

    #[test]
    fn exceptional_roots() {
        let one: GLRep = st("1", 1).into();
        assert_eq!(exceptional_pole_roots(&one, &one).unwrap(), EulerFactor::tate(m("1")));
        let a: GLRep = st("z1", 1).into();
        let b: GLRep = st("z2", 1).into();
        assert_eq!(exceptional_pole_roots(&a, &b).unwrap(), EulerFactor::tate(m("z1 * z2")));
        assert!(exceptional_pole_roots(&st("z1", 2).into(), &st("z2", 3).into()).unwrap().is_one());
        let linked = GLRep::new(vec![st("1", 1), st("q^(-1)", 1)]);
        assert_eq!(exceptional_pole_roots(&linked, &a), Err(Error::NotGeneric));
    }

    #[test]
    fn self_twisted_products() {
        let pi = GLRep::new(vec![st("1", 1), st("-1", 1)]);
        let e = exceptional_pole_roots(&pi, &pi).unwrap();
        assert_eq!(e, EulerFactor::from_roots(vec![m("1"), m("-1")]));
    }

    #[test]
    fn segment_pairs() {
        let r = pair_l(&st("z1", 1), &st("z2", 1));
        assert_eq!(r.l, EulerFactor::tate(m("z1 * z2")));
        let r = pair_l(&st("z1", 2), &st("z2", 2));
        assert_eq!(r.l, EulerFactor::from_roots(vec![m("z1 * z2"), m("z1 * z2 * q^(-1)")]));
        assert_eq!(r.l0, EulerFactor::tate(m("z1 * z2 * q^(-1)")));
        let r = pair_l(&st("z1", 1), &st("z2", 2));
        assert_eq!(r.l, EulerFactor::tate(m("z1 * z2")).shift(Q::new(1, 2)));
        assert!(r.lex.is_one());
    }

    #[test]
    fn product_pairs() {
        let pi = GLRep::new(vec![st("z1", 1), st("z2", 1)]);
        let r = pair_l_rep(&pi, &st("z3", 1).into()).unwrap();
        assert_eq!(r.l, EulerFactor::from_roots(vec![m("z1 * z3"), m("z2 * z3")]));
        let same = GLRep::new(vec![st("z1", 1), st("z1", 1)]);
        assert!(matches!(pair_l_rep(&same, &pi), Err(Error::ReducibleDerivative(_))));
    }
}
