//! Cuspidal data, segments and products of segments.
//!
//! A cuspidal representation is an opaque base `B` (a fixed cuspidal of
//! GL(r)) twisted by a ramification label and by an unramified character
//! whose value at a uniformizer is the monomial `w`. Characters of GL(1) use
//! the reserved base [`CHAR_BASE_ID`].
//!
//! Conventions for a base `B`:
//!
//! * the central character of `(B, w)` at a uniformizer is `c_B * w^r`, with
//!   `c_B = at^-r` when `B` is self-dual at the twist `at`, and `1` otherwise;
//! * the contragredient of `(B, w)` is `(B^v, d_B / w)` with `d_B = at^2` for
//!   self-dual bases and `1` otherwise;
//! * twisting by `|.|^u` multiplies `w` by `q^-u`, and `w` is only defined up
//!   to the `f`-th roots of unity, `f` being the torsion of `B`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::monoid::{Monomial, Q};
use crate::{Error, Result};

/// Base id shared by all characters of GL(1).
pub const CHAR_BASE_ID: &str = "unramified-char";

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FormType {
    Symplectic,
    Orthogonal,
}

impl FormType {
    pub fn opposite(self) -> Self {
        match self {
            FormType::Symplectic => FormType::Orthogonal,
            FormType::Orthogonal => FormType::Symplectic,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Symplectic => "symplectic",
            FormType::Orthogonal => "orthogonal",
        })
    }
}

/// `B` twisted by `at` is self-dual with a pairing of the given type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SelfDual {
    pub kind: FormType,
    pub at: Monomial,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CuspidalBase {
    pub id: String,
    pub r: u32,
    /// Order `f` of the group of unramified self-twists.
    pub torsion: u32,
    pub selfdual: Option<SelfDual>,
    /// Id of the contragredient base; equal to `id` for self-dual bases.
    pub dual_id: String,
}

impl CuspidalBase {
    /// A base of GL(r). Non-self-dual bases get the dual id `id~`.
    pub fn new(id: &str, r: u32, torsion: u32, selfdual: Option<SelfDual>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Domain("cuspidal rank must be positive".into()));
        }
        if torsion == 0 || !r.is_multiple_of(torsion) {
            return Err(Error::Domain(format!("torsion {torsion} does not divide r = {r}")));
        }
        if r == 1 && id != CHAR_BASE_ID {
            return Err(Error::Domain("cuspidals of GL(1) must be declared as characters".into()));
        }
        if let Some(sd) = &selfdual {
            if sd.kind == FormType::Symplectic && r % 2 == 1 {
                return Err(Error::Domain(format!("symplectic base {id} needs even r, got {r}")));
            }
        }
        let dual_id = if selfdual.is_some() {
            id.to_string()
        } else if let Some(stem) = id.strip_suffix('~') {
            stem.to_string()
        } else {
            format!("{id}~")
        };
        Ok(CuspidalBase { id: id.to_string(), r, torsion, selfdual, dual_id })
    }

    pub fn character() -> Self {
        CuspidalBase {
            id: CHAR_BASE_ID.to_string(),
            r: 1,
            torsion: 1,
            selfdual: Some(SelfDual { kind: FormType::Orthogonal, at: Monomial::one() }),
            dual_id: CHAR_BASE_ID.to_string(),
        }
    }

    pub fn is_character(&self) -> bool {
        self.id == CHAR_BASE_ID
    }

    pub fn dual(&self) -> Self {
        if self.selfdual.is_some() {
            return self.clone();
        }
        CuspidalBase { id: self.dual_id.clone(), dual_id: self.id.clone(), ..self.clone() }
    }

    fn c(&self) -> Monomial {
        match &self.selfdual {
            Some(sd) => sd.at.pow(-(self.r as i64)),
            None => Monomial::one(),
        }
    }

    fn d(&self) -> Monomial {
        match &self.selfdual {
            Some(sd) => sd.at.pow(2),
            None => Monomial::one(),
        }
    }
}

/// Element of a finitely generated abelian group of ramification labels:
/// generator name to `(order, exponent)`, exponents reduced and nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Label(BTreeMap<String, (u32, u32)>);

impl Label {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// The element `gen^exp` in a cyclic group of the given order.
    pub fn generator(gen: &str, order: u32, exp: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain(format!("label generator {gen} needs positive order")));
        }
        let e = exp.rem_euclid(order as i64) as u32;
        let mut m = BTreeMap::new();
        if e != 0 {
            m.insert(gen.to_string(), (order, e));
        }
        Ok(Label(m))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (g, &(ord, e)) in &other.0 {
            let slot = m.entry(g.clone()).or_insert((ord, 0));
            slot.1 = (slot.1 + e) % ord;
            if slot.1 == 0 {
                m.remove(g);
            }
        }
        Label(m)
    }

    pub fn inv(&self) -> Self {
        Label(self.0.iter().map(|(g, &(ord, e))| (g.clone(), (ord, ord - e))).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, u32, u32)> {
        self.0.iter().map(|(g, &(o, e))| (g.as_str(), o, e))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, &(ord, e)) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{g}^{e}/{ord}")?;
        }
        Ok(())
    }
}

/// `(B, label, w)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cuspidal {
    base: Arc<CuspidalBase>,
    label: Label,
    w: Monomial,
}

impl Cuspidal {
    pub fn new(base: Arc<CuspidalBase>, label: Label, w: Monomial) -> Self {
        let w = w.reduce_mod_roots(base.torsion);
        Cuspidal { base, label, w }
    }

    /// Unramified character with Satake value `w`.
    pub fn character(w: Monomial) -> Self {
        Self::new(Arc::new(CuspidalBase::character()), Label::trivial(), w)
    }

    pub fn character_labeled(w: Monomial, label: Label) -> Self {
        Self::new(Arc::new(CuspidalBase::character()), label, w)
    }

    pub fn trivial_character() -> Self {
        Self::character(Monomial::one())
    }

    /// The character `|.|^u`.
    pub fn abs(u: Q) -> Self {
        Self::character(Monomial::abs_pow(u))
    }

    pub fn base(&self) -> &CuspidalBase {
        &self.base
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    /// Twist value `w`.
    pub fn twist_value(&self) -> &Monomial {
        &self.w
    }

    pub fn r(&self) -> u32 {
        self.base.r
    }

    pub fn is_character(&self) -> bool {
        self.base.is_character()
    }

    pub fn is_unramified_character(&self) -> bool {
        self.is_character() && self.label.is_trivial()
    }

    pub fn is_trivial_character(&self) -> bool {
        self.is_unramified_character() && self.w.is_one()
    }

    pub fn central_character(&self) -> Monomial {
        self.base.c() * self.w.pow(self.r() as i64)
    }

    /// Real part of the central character divided by `r`.
    pub fn real_part(&self) -> Q {
        self.central_character().real_part() / Q::from_integer(self.r() as i64)
    }

    pub fn dual(&self) -> Self {
        Cuspidal::new(Arc::new(self.base.dual()), self.label.inv(), self.base.d() * self.w.inv())
    }

    /// Twist by the unramified character with value `t` at a uniformizer.
    pub fn twist(&self, t: &Monomial) -> Self {
        Cuspidal::new(self.base.clone(), self.label.clone(), &self.w * t)
    }

    /// Twist by `|.|^u`.
    pub fn twist_abs(&self, u: Q) -> Self {
        self.twist(&Monomial::abs_pow(u))
    }

    /// Twist by a character (`chi * self`).
    pub fn twist_by_character(&self, chi: &Cuspidal) -> Result<Self> {
        if !chi.is_character() {
            return Err(Error::Domain(format!("{chi} is not a character")));
        }
        Ok(Cuspidal::new(self.base.clone(), self.label.mul(&chi.label), &self.w * &chi.w))
    }

    /// The representative `t` (unique up to `f`-th roots of unity, `f` the
    /// returned torsion) with `chi_t self = other`.
    pub fn solve_twist(&self, other: &Cuspidal) -> Option<(Monomial, u32)> {
        if self.base != other.base || self.label != other.label {
            return None;
        }
        Some(((&other.w / &self.w).reduce_mod_roots(self.base.torsion), self.base.torsion))
    }

    /// `i` with `other = |.|^i self`, if it exists.
    pub fn line_offset(&self, other: &Cuspidal) -> Option<i64> {
        let (t, f) = self.solve_twist(other)?;
        let i = -t.q_exp();
        let unit = &t * &Monomial::q_pow(i);
        (i.is_integer() && unit.is_root_of_order_dividing(f)).then(|| *i.numer())
    }

    /// Inverse roots of the atom-level factor `L(self x other, s)`, which is
    /// also `L(phi(self) (x) phi(other), s)`.
    pub fn pair_roots(&self, other: &Cuspidal) -> Vec<Monomial> {
        let dual = self.dual();
        match dual.solve_twist(other) {
            Some((t, f)) => (0..f).map(|j| &t * &Monomial::zeta(j as i64, f as i64)).collect(),
            None => Vec::new(),
        }
    }

    fn square_packs(&self) -> (Vec<Monomial>, Vec<Monomial>) {
        let (sd, lab2) = match &self.base.selfdual {
            Some(sd) => (sd, self.label.mul(&self.label)),
            None => return (Vec::new(), Vec::new()),
        };
        if !lab2.is_trivial() {
            return (Vec::new(), Vec::new());
        }
        let f = self.base.torsion;
        let u = self.w.pow(2) * sd.at.pow(-2);
        let (mut same, mut other) = (Vec::new(), Vec::new());
        for j in 0..f {
            let root = &u * &Monomial::zeta(j as i64, f as i64);
            if f.is_multiple_of(2) && j % 2 == 1 {
                other.push(root);
            } else {
                same.push(root);
            }
        }
        match sd.kind {
            FormType::Symplectic => (same, other),
            FormType::Orthogonal => (other, same),
        }
    }

    /// Inverse roots of `L(wedge^2 phi(self), s)`.
    pub fn wedge2_roots(&self) -> Vec<Monomial> {
        self.square_packs().0
    }

    /// Inverse roots of `L(Sym^2 phi(self), s)`.
    pub fn sym2_roots(&self) -> Vec<Monomial> {
        self.square_packs().1
    }

    /// Inverse roots of the standard factor `L(phi(self), s)`.
    pub fn standard_roots(&self) -> Vec<Monomial> {
        if self.is_unramified_character() {
            vec![self.w.clone()]
        } else {
            Vec::new()
        }
    }

    /// Type of the invariant pairing on `phi(self)`, if it is self-dual.
    pub fn form_type(&self) -> Option<FormType> {
        if *self != self.dual() {
            return None;
        }
        if self.wedge2_roots().iter().any(Monomial::is_one) {
            Some(FormType::Symplectic)
        } else if self.sym2_roots().iter().any(Monomial::is_one) {
            Some(FormType::Orthogonal)
        } else {
            None
        }
    }
}

impl fmt::Display for Cuspidal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_character() {
            f.write_str("chi")?;
        } else {
            f.write_str(&self.base.id)?;
        }
        if !self.label.is_trivial() {
            write!(f, "[{}]", self.label)?;
        }
        write!(f, "({})", self.w)
    }
}

/// `[rho, |.| rho, ..., |.|^{k-1} rho]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Segment {
    start: Cuspidal,
    k: u32,
}

/// Result of a derivative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Derivative {
    Zero,
    Unit,
    Seg(Segment),
}

impl Segment {
    /// `[|.|^e rho, ..., |.|^{e+k-1} rho]`.
    pub fn new(rho: Cuspidal, k: u32, e: Q) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("segment length must be positive".into()));
        }
        Ok(Segment { start: rho.twist_abs(e), k })
    }

    /// `St_k(rho)`, centered at `rho`.
    pub fn centered(rho: Cuspidal, k: u32) -> Self {
        Self::new(rho, k, -Q::new(k as i64 - 1, 2)).expect("k > 0")
    }

    pub fn from_start(start: Cuspidal, k: u32) -> Result<Self> {
        Self::new(start, k, Q::zero())
    }

    pub fn start(&self) -> &Cuspidal {
        &self.start
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.start.r()
    }

    pub fn dim(&self) -> u32 {
        self.k * self.r()
    }

    /// `|.|^i rho` for the `i`-th step.
    pub fn step(&self, i: u32) -> Cuspidal {
        self.start.twist_abs(Q::from_integer(i as i64))
    }

    /// The cuspidal `rho |.|^{(k-1)/2}` at the middle of the segment.
    pub fn center(&self) -> Cuspidal {
        self.start.twist_abs(Q::new(self.k as i64 - 1, 2))
    }

    pub fn top(&self) -> Cuspidal {
        self.step(self.k - 1)
    }

    pub fn central_character(&self) -> Monomial {
        (0..self.k).map(|i| self.step(i).central_character()).product()
    }

    /// Real part of the central character divided by the dimension.
    pub fn real_part(&self) -> Q {
        self.center().real_part()
    }

    pub fn dual(&self) -> Self {
        Segment { start: self.top().dual(), k: self.k }
    }

    pub fn twist(&self, t: &Monomial) -> Self {
        Segment { start: self.start.twist(t), k: self.k }
    }

    pub fn twist_abs(&self, u: Q) -> Self {
        self.twist(&Monomial::abs_pow(u))
    }

    pub fn twist_by_character(&self, chi: &Cuspidal) -> Result<Self> {
        Ok(Segment { start: self.start.twist_by_character(chi)?, k: self.k })
    }

    /// The `l`-th Bernstein-Zelevinsky derivative.
    pub fn derivative(&self, l: u32) -> Result<Derivative> {
        let r = self.r();
        if l > self.dim() {
            return Err(Error::Domain(format!("derivative order {l} exceeds dimension {}", self.dim())));
        }
        Ok(if !l.is_multiple_of(r) {
            Derivative::Zero
        } else if l == self.dim() {
            Derivative::Unit
        } else {
            let i = l / r;
            Derivative::Seg(Segment { start: self.step(i), k: self.k - i })
        })
    }

    /// `(chi_t self, t-equivalence torsion)` solving `chi_t self = other`.
    pub fn solve_twist(&self, other: &Segment) -> Option<(Monomial, u32)> {
        if self.k != other.k {
            return None;
        }
        self.start.solve_twist(&other.start)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "St_{}({})", self.k, self.center())
    }
}

/// `Delta_1 x ... x Delta_t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GLRep {
    pub segments: Vec<Segment>,
}

/// A subquotient `Delta_1^{(a_1)} x ... x Delta_t^{(a_t)}` of a derivative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub orders: Vec<u32>,
    pub rep: GLRep,
}

impl From<Segment> for GLRep {
    fn from(s: Segment) -> Self {
        GLRep { segments: vec![s] }
    }
}

/// Whether two segments are linked.
pub fn are_linked(a: &Segment, b: &Segment) -> bool {
    let Some(i) = a.start.line_offset(&b.start) else {
        return false;
    };
    let (la, lb) = (a.k as i64, b.k as i64);
    (1 <= i && i <= la && i + lb > la) || (1 <= -i && -i <= lb && -i + la > lb)
}

impl GLRep {
    pub fn new(segments: Vec<Segment>) -> Self {
        GLRep { segments }
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn n(&self) -> u32 {
        self.segments.iter().map(Segment::dim).sum()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn central_character(&self) -> Monomial {
        self.segments.iter().map(Segment::central_character).product()
    }

    pub fn dual(&self) -> Self {
        GLRep { segments: self.segments.iter().rev().map(Segment::dual).collect() }
    }

    pub fn twist(&self, t: &Monomial) -> Self {
        GLRep { segments: self.segments.iter().map(|s| s.twist(t)).collect() }
    }

    pub fn twist_abs(&self, u: Q) -> Self {
        self.twist(&Monomial::abs_pow(u))
    }

    pub fn is_generic(&self) -> bool {
        let s = &self.segments;
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !are_linked(&s[i], &s[j])))
    }

    /// Segments by decreasing real part; ties by decreasing length, then by
    /// canonical order.
    pub fn langlands_sort(&self) -> Self {
        let mut segs = self.segments.clone();
        segs.sort_by(langlands_cmp);
        GLRep { segments: segs }
    }

    /// Same multiset of segments.
    pub fn same_multiset(&self, other: &Self) -> bool {
        let mut a = self.segments.clone();
        let mut b = other.segments.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// All nonzero products `Delta_1^{(a_1)} x ... x Delta_t^{(a_t)}` with
    /// `sum a_i = l`.
    pub fn derivative_components(&self, l: u32) -> Result<Vec<Component>> {
        if l > self.n() {
            return Err(Error::Domain(format!("derivative order {l} exceeds n = {}", self.n())));
        }
        let mut out = Vec::new();
        let mut orders = Vec::with_capacity(self.len());
        self.collect_components(0, l, &mut orders, &mut out)?;
        Ok(out)
    }

    fn collect_components(&self, idx: usize, left: u32, orders: &mut Vec<u32>, out: &mut Vec<Component>) -> Result<()> {
        if idx == self.len() {
            if left == 0 {
                let mut segs = Vec::new();
                for (s, &a) in self.segments.iter().zip(orders.iter()) {
                    if let Derivative::Seg(d) = s.derivative(a)? {
                        segs.push(d);
                    }
                }
                out.push(Component { orders: orders.clone(), rep: GLRep { segments: segs } });
            }
            return Ok(());
        }
        let s = &self.segments[idx];
        for i in 0..=s.k {
            let a = i * s.r();
            if a > left {
                break;
            }
            orders.push(a);
            self.collect_components(idx + 1, left - a, orders, out)?;
            orders.pop();
        }
        Ok(())
    }

    /// Central characters of the components of the `k`-th derivative.
    pub fn exponents(&self, k: u32) -> Result<Vec<Monomial>> {
        if k == 0 || k > self.n() {
            return Err(Error::Domain(format!("exponent order {k} outside 1..={}", self.n())));
        }
        Ok(self.derivative_components(k)?.iter().map(|c| c.rep.central_character()).collect())
    }

    /// Every derivative component is irreducible and the components at each
    /// level have pairwise distinct central characters. Returns the first
    /// violation.
    pub fn check_completely_reducible(&self) -> Result<()> {
        for l in 0..=self.n() {
            let comps = self.derivative_components(l)?;
            for c in &comps {
                if !c.rep.is_generic() {
                    return Err(Error::ReducibleDerivative(format!("component {} of level {l} is reducible", c.rep)));
                }
            }
            for i in 0..comps.len() {
                for j in i + 1..comps.len() {
                    if comps[i].rep.central_character() == comps[j].rep.central_character() {
                        return Err(Error::ReducibleDerivative(format!(
                            "components {} and {} of level {l} share a central character",
                            comps[i].rep, comps[j].rep
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The order used by [`GLRep::langlands_sort`].
pub fn langlands_cmp(a: &Segment, b: &Segment) -> Ordering {
    b.real_part().cmp(&a.real_part()).then(b.k.cmp(&a.k)).then(a.cmp(b))
}

impl fmt::Display for GLRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn chi(s: &str) -> Cuspidal {
        Cuspidal::character(m(s))
    }

    fn abstract_rho(id: &str, r: u32, f: u32, sd: Option<FormType>) -> Cuspidal {
        let sd = sd.map(|kind| SelfDual { kind, at: Monomial::one() });
        Cuspidal::new(Arc::new(CuspidalBase::new(id, r, f, sd).unwrap()), Label::trivial(), Monomial::one())
    }

    #[test]
    fn central_characters() {
        assert_eq!(Segment::centered(chi("z1"), 1).central_character(), m("z1"));
        assert_eq!(Segment::new(chi("z1"), 2, Q::zero()).unwrap().central_character(), m("z1^2 * q^(-1)"));
        assert_eq!(Segment::centered(chi("z1"), 2).central_character(), m("z1^2"));
        let rho = abstract_rho("rho", 2, 1, None).twist(&m("z2"));
        assert_eq!(Segment::new(rho, 2, Q::zero()).unwrap().central_character(), m("z2^4 * q^(-2)"));
    }

    #[test]
    fn duals() {
        let s = Segment::new(chi("z1"), 3, Q::new(1, 2)).unwrap();
        assert_eq!(s.dual().dual(), s);
        assert_eq!(Segment::centered(chi("z1"), 2).dual(), Segment::centered(chi("z1^(-1)"), 2));
        assert_eq!(s.dual().central_character(), s.central_character().inv());
        let rho = abstract_rho("rho", 3, 3, None).twist(&m("z1 * zeta(1/2)"));
        assert_eq!(rho.dual().dual(), rho);
        assert_eq!(rho.dual().base().id, "rho~");
        let pi = GLRep::new(vec![s.clone(), Segment::centered(rho, 2)]);
        assert_eq!(pi.dual().dual(), pi);
        assert_eq!(pi.dual().segments[1], s.dual());
    }

    #[test]
    fn derivatives() {
        let s = Segment::new(chi("z1"), 2, Q::zero()).unwrap();
        assert_eq!(s.derivative(1).unwrap(), Derivative::Seg(Segment::new(chi("z1 * q^(-1)"), 1, Q::zero()).unwrap()));
        assert_eq!(s.derivative(2).unwrap(), Derivative::Unit);
        assert!(s.derivative(3).is_err());
        let st = Segment::centered(abstract_rho("rho", 2, 1, None), 2);
        assert_eq!(st.derivative(1).unwrap(), Derivative::Zero);
        assert_eq!(st.derivative(4).unwrap(), Derivative::Unit);
        let d = Segment::new(chi("z1"), 4, Q::zero()).unwrap();
        let Derivative::Seg(d1) = d.derivative(1).unwrap() else { panic!() };
        let Derivative::Seg(d12) = d1.derivative(2).unwrap() else { panic!() };
        assert_eq!(d.derivative(3).unwrap(), Derivative::Seg(d12));
    }

    #[test]
    fn components_and_exponents() {
        let pi = GLRep::new(vec![Segment::centered(chi("z1"), 1), Segment::centered(chi("z2"), 1)]);
        assert_eq!(pi.derivative_components(0).unwrap()[0].rep, pi);
        let c1: Vec<GLRep> = pi.derivative_components(1).unwrap().into_iter().map(|c| c.rep).collect();
        assert_eq!(c1.len(), 2);
        assert!(c1.contains(&Segment::centered(chi("z1"), 1).into()));
        assert!(c1.contains(&Segment::centered(chi("z2"), 1).into()));
        assert_eq!(pi.derivative_components(2).unwrap()[0].rep, GLRep::unit());
        let mut e = pi.exponents(1).unwrap();
        e.sort();
        assert_eq!(e, vec![m("z1"), m("z2")]);
        assert_eq!(GLRep::from(Segment::centered(chi("z1"), 1)).exponents(1).unwrap(), vec![Monomial::one()]);
        let rho: GLRep = Segment::centered(abstract_rho("rho", 2, 1, None), 1).into();
        assert!(rho.exponents(1).unwrap().is_empty());
    }

    #[test]
    fn linkage() {
        let a = Segment::centered(chi("z1"), 1);
        assert!(are_linked(&a, &a.twist_abs(Q::from_integer(1))));
        assert!(are_linked(&a.twist_abs(Q::from_integer(1)), &a));
        assert!(!are_linked(&a, &a.twist_abs(Q::from_integer(2))));
        assert!(!are_linked(&a, &a));
        assert!(GLRep::new(vec![a.clone(), a.clone()]).is_generic());
        let long = Segment::new(chi("z1"), 3, Q::zero()).unwrap();
        let inner = Segment::new(chi("z1 * q^(-1)"), 1, Q::zero()).unwrap();
        assert!(!are_linked(&long, &inner));
        let rho = abstract_rho("rho", 2, 2, None);
        let s = Segment::centered(rho.clone(), 1);
        assert!(are_linked(&s, &Segment::centered(rho.twist(&m("zeta(1/2) * q^(-1)")), 1)));
        assert!(!are_linked(&s, &Segment::centered(chi("q^(-1)"), 2)));
    }

    #[test]
    fn langlands_order() {
        let a = Segment::centered(chi("z1 * q^(-1)"), 1);
        let b = Segment::centered(chi("z2"), 2);
        let c = Segment::centered(chi("z3"), 1);
        let pi = GLRep::new(vec![c.clone(), b.clone(), a.clone()]);
        let sorted = pi.langlands_sort();
        assert_eq!(sorted.segments, vec![a, b, c]);
        assert_eq!(sorted.langlands_sort(), sorted);
    }

    #[test]
    fn square_packs() {
        assert_eq!(chi("z1").sym2_roots(), vec![m("z1^2")]);
        assert!(chi("z1").wedge2_roots().is_empty());
        let dihedral = abstract_rho("rho", 2, 2, Some(FormType::Symplectic));
        assert_eq!(dihedral.wedge2_roots(), vec![Monomial::one()]);
        assert_eq!(dihedral.sym2_roots(), vec![m("-1")]);
        assert_eq!(dihedral.form_type(), Some(FormType::Symplectic));
        assert_eq!(chi("-1").form_type(), Some(FormType::Orthogonal));
        assert_eq!(chi("z1").form_type(), None);
        let lab = Label::generator("eta", 2, 1).unwrap();
        assert_eq!(Cuspidal::character_labeled(m("1"), lab.clone()).form_type(), Some(FormType::Orthogonal));
        let lab3 = Label::generator("eps", 3, 1).unwrap();
        assert_eq!(Cuspidal::character_labeled(m("1"), lab3).form_type(), None);
    }

    #[test]
    fn pair_roots_of_atoms() {
        assert_eq!(chi("z1").pair_roots(&chi("z2")), vec![m("z1 * z2")]);
        let rho = abstract_rho("rho", 2, 2, None).twist(&m("z1"));
        let dual = rho.dual().twist(&m("z2"));
        assert_eq!(rho.pair_roots(&dual), vec![m("z2"), m("-z2")]);
        assert!(rho.pair_roots(&rho).is_empty());
        assert!(rho.pair_roots(&chi("z2")).is_empty());
    }
}
