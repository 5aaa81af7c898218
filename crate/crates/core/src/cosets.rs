//! Relevant subpartitions indexing `P \ G / H` and modulus characters on the
//! center of `M_s^{<theta_s>}`.
//!
//! Characters are exponent vectors: `lambda -> prod |lambda_c|^{e_c}` over
//! the center coordinates. Indices are 1-based in displays only.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::monoid::{fmt_q, Q};

/// An element of `I(nbar)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subpartition {
    nbar: Vec<u32>,
    /// Upper triangle `n_{i,j}`, `i < j`, symmetric.
    off: Vec<Vec<u32>>,
    plus: Vec<u32>,
    minus: Vec<u32>,
}

/// A center coordinate of `M_s^{<theta_s>}` (0-based), ordered by indices
/// and then `+` before `-`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Coord {
    Plus(usize),
    Minus(usize),
    /// `lambda_{i,j} = lambda_{j,i}`, stored with `i < j`.
    Off(usize, usize),
}

impl Coord {
    fn key(&self) -> (usize, usize, u8) {
        match *self {
            Coord::Plus(k) => (k, k, 0),
            Coord::Minus(k) => (k, k, 1),
            Coord::Off(i, j) => (i, j, 2),
        }
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Coord::Plus(k) => write!(f, "l{0},{0}+", k + 1),
            Coord::Minus(k) => write!(f, "l{0},{0}-", k + 1),
            Coord::Off(i, j) => write!(f, "l{},{}", i + 1, j + 1),
        }
    }
}

/// Positive character of the center, as exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TorusCharacter {
    exps: BTreeMap<Coord, Q>,
}

impl TorusCharacter {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn add_exp(&mut self, c: Coord, e: Q) {
        let v = self.exps.entry(c).or_insert_with(Q::zero);
        *v += e;
        if v.is_zero() {
            self.exps.remove(&c);
        }
    }

    pub fn exponent(&self, c: Coord) -> Q {
        self.exps.get(&c).copied().unwrap_or_else(Q::zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn scale(&self, a: Q) -> Self {
        let mut out = Self::trivial();
        for (c, e) in &self.exps {
            out.add_exp(*c, *e * a);
        }
        out
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Coord, Q)> + '_ {
        self.exps.iter().map(|(c, e)| (*c, *e))
    }
}

impl Add for &TorusCharacter {
    type Output = TorusCharacter;
    fn add(self, rhs: &TorusCharacter) -> TorusCharacter {
        let mut out = self.clone();
        for (c, e) in &rhs.exps {
            out.add_exp(*c, *e);
        }
        out
    }
}

impl Neg for &TorusCharacter {
    type Output = TorusCharacter;
    fn neg(self) -> TorusCharacter {
        self.scale(-Q::from_integer(1))
    }
}

impl Sub for &TorusCharacter {
    type Output = TorusCharacter;
    fn sub(self, rhs: &TorusCharacter) -> TorusCharacter {
        self + &(-rhs)
    }
}

impl fmt::Display for TorusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (c, e)) in self.exps.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "|{c}|^{}", fmt_q(*e))?;
        }
        Ok(())
    }
}

/// The subgroup whose modulus character is taken.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parabolic {
    P,
    Ps,
    PsTheta,
    PPrimeS,
}

#[derive(Clone, Copy, Debug)]
struct Piece {
    row: usize,
    /// Position of the Levi block of `P_s` containing the piece.
    block: usize,
    coord: Coord,
    /// Image under `theta_s`, as an index into the piece list.
    theta: usize,
    /// `+1` or `-1` on diagonal pieces, `0` elsewhere.
    sign: i8,
    dim: u32,
}

impl Subpartition {
    pub fn nbar(&self) -> &[u32] {
        &self.nbar
    }

    pub fn t(&self) -> usize {
        self.nbar.len()
    }

    pub fn n(&self) -> u32 {
        self.nbar.iter().sum()
    }

    /// `n_{i,j}`; for `i = j` this is `n_{i,i}^+ + n_{i,i}^-`.
    pub fn n_ij(&self, i: usize, j: usize) -> u32 {
        match i.cmp(&j) {
            core::cmp::Ordering::Less => self.off[i][j],
            core::cmp::Ordering::Greater => self.off[j][i],
            core::cmp::Ordering::Equal => self.plus[i] + self.minus[i],
        }
    }

    pub fn plus(&self, k: usize) -> u32 {
        self.plus[k]
    }

    pub fn minus(&self, k: usize) -> u32 {
        self.minus[k]
    }

    /// Checks row sums and balance.
    pub fn is_valid(&self) -> bool {
        let t = self.t();
        let rows = (0..t).all(|i| (0..t).map(|j| self.n_ij(i, j)).sum::<u32>() == self.nbar[i]);
        let p: u32 = self.plus.iter().sum();
        let m: u32 = self.minus.iter().sum();
        rows && p == m + self.n() % 2
    }

    /// Pieces of the Levi `M_s` in block order: `(1,1)^+, (1,1)^-, (1,2), ...,
    /// (t,t)^+, (t,t)^-`, dropping empty ones.
    fn pieces(&self) -> Vec<Piece> {
        let t = self.t();
        let mut raw: Vec<(usize, usize, i8, u32)> = Vec::new();
        for i in 0..t {
            for j in 0..t {
                if i == j {
                    raw.push((i, i, 1, self.plus[i]));
                    raw.push((i, i, -1, self.minus[i]));
                } else {
                    raw.push((i, j, 0, self.n_ij(i, j)));
                }
            }
        }
        raw.retain(|p| p.3 > 0);
        let find = |i: usize, j: usize, s: i8| raw.iter().position(|p| p.0 == i && p.1 == j && p.2 == s).unwrap();
        raw.iter()
            .map(|&(i, j, sign, dim)| Piece {
                row: i,
                block: i * t + j,
                coord: match sign {
                    1 => Coord::Plus(i),
                    -1 => Coord::Minus(i),
                    _ => Coord::Off(i.min(j), i.max(j)),
                },
                theta: if i == j { find(i, i, sign) } else { find(j, i, 0) },
                sign,
                dim,
            })
            .collect()
    }

    /// Center coordinates with nonzero size.
    pub fn coords(&self) -> Vec<Coord> {
        let mut c: Vec<Coord> = self.pieces().iter().map(|p| p.coord).collect();
        c.sort();
        c.dedup();
        c
    }
}

impl fmt::Display for Subpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.t();
        f.write_str("{")?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str(", ") };
            first = false;
            r
        };
        for i in 0..t {
            for j in i + 1..t {
                if self.off[i][j] > 0 {
                    sep(f)?;
                    write!(f, "n{},{}={}", i + 1, j + 1, self.off[i][j])?;
                }
            }
        }
        for k in 0..t {
            if self.plus[k] + self.minus[k] > 0 {
                sep(f)?;
                write!(f, "n{0},{0}=({1},{2})", k + 1, self.plus[k], self.minus[k])?;
            }
        }
        f.write_str("}")
    }
}

/// All of `I(nbar)`, ordered by off-diagonal entries (row-major, descending)
/// and then by the `n_{k,k}^+` (descending).
pub fn enumerate_relevant(nbar: &[u32]) -> Vec<Subpartition> {
    let t = nbar.len();
    let upper: Vec<(usize, usize)> = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut off = vec![vec![0u32; t]; t];
    let mut rest = nbar.to_vec();
    fill_off(&upper, 0, &mut off, &mut rest, nbar, &mut out);
    out
}

fn fill_off(
    upper: &[(usize, usize)],
    idx: usize,
    off: &mut Vec<Vec<u32>>,
    rest: &mut Vec<u32>,
    nbar: &[u32],
    out: &mut Vec<Subpartition>,
) {
    if idx == upper.len() {
        let n: u32 = nbar.iter().sum();
        let mut plus = vec![0u32; nbar.len()];
        fill_diag(0, rest, &mut plus, n, off, nbar, out);
        return;
    }
    let (i, j) = upper[idx];
    for v in (0..=rest[i].min(rest[j])).rev() {
        off[i][j] = v;
        rest[i] -= v;
        rest[j] -= v;
        fill_off(upper, idx + 1, off, rest, nbar, out);
        rest[i] += v;
        rest[j] += v;
    }
    off[i][j] = 0;
}

fn fill_diag(k: usize, diag: &[u32], plus: &mut Vec<u32>, n: u32, off: &[Vec<u32>], nbar: &[u32], out: &mut Vec<Subpartition>) {
    if k == diag.len() {
        let p: u32 = plus.iter().sum();
        let total: u32 = diag.iter().sum();
        if 2 * p == total + n % 2 {
            let minus = diag.iter().zip(plus.iter()).map(|(d, p)| d - p).collect();
            out.push(Subpartition { nbar: nbar.to_vec(), off: off.to_vec(), plus: plus.clone(), minus });
        }
        return;
    }
    for v in (0..=diag[k]).rev() {
        plus[k] = v;
        fill_diag(k + 1, diag, plus, n, off, nbar, out);
    }
    plus[k] = 0;
}

fn add_pair(ch: &mut TorusCharacter, hi: &Piece, lo: &Piece) {
    let d = Q::from_integer((hi.dim * lo.dim) as i64);
    ch.add_exp(hi.coord, d);
    ch.add_exp(lo.coord, -d);
}

/// Modulus character restricted to the center of `M_s^{<theta_s>}`, from the
/// adjoint action on the nilradical, one `Hom(b', b)` block at a time.
pub fn modulus_character(which: Parabolic, s: &Subpartition) -> TorusCharacter {
    let pieces = s.pieces();
    let mut ch = TorusCharacter::trivial();
    let in_ns = |a: &Piece, b: &Piece| a.block < b.block;
    for (x, a) in pieces.iter().enumerate() {
        for (y, b) in pieces.iter().enumerate() {
            let counted = match which {
                Parabolic::P => a.row < b.row,
                Parabolic::Ps => in_ns(a, b),
                Parabolic::PPrimeS => a.row == b.row && in_ns(a, b),
                Parabolic::PsTheta => {
                    if !in_ns(a, b) {
                        false
                    } else {
                        let (ta, tb) = (a.theta, b.theta);
                        if (ta, tb) == (x, y) {
                            a.sign == b.sign
                        } else {
                            // the orbit {(a, b), (theta a, theta b)} is counted once
                            in_ns(&pieces[ta], &pieces[tb]) && (x, y) < (ta, tb)
                        }
                    }
                }
            };
            if counted {
                add_pair(&mut ch, a, b);
            }
        }
    }
    ch
}

/// `delta_{P_s^{<theta_s>}} / delta_{P_s}^{1/2}` in closed form.
pub fn modulus_quotient_closed_form(s: &Subpartition) -> TorusCharacter {
    let t = s.t();
    let h = |a: u32, b: u32, c: u32| Q::new(a as i64 * (b as i64 - c as i64), 2);
    let mut ch = TorusCharacter::trivial();
    for i in 0..t {
        for j in i + 1..t {
            let (pi, mi, pj, mj) = (s.plus[i], s.minus[i], s.plus[j], s.minus[j]);
            ch.add_exp(Coord::Plus(i), h(pi, pj, mj));
            ch.add_exp(Coord::Minus(i), h(mi, mj, pj));
            ch.add_exp(Coord::Plus(j), h(pj, mi, pi));
            ch.add_exp(Coord::Minus(j), h(mj, pi, mi));
        }
    }
    ch
}

/// The same quotient from the adjoint counts.
pub fn modulus_quotient_direct(s: &Subpartition) -> TorusCharacter {
    let ps = modulus_character(Parabolic::Ps, s);
    &modulus_character(Parabolic::PsTheta, s) - &ps.scale(Q::new(1, 2))
}

/// `delta_{P_s} - delta_P - delta_{P'_s}` on the center; trivial when the
/// identity holds.
pub fn modulus_identity_defect(s: &Subpartition) -> TorusCharacter {
    let lhs = &modulus_character(Parabolic::P, s) + &modulus_character(Parabolic::PPrimeS, s);
    &modulus_character(Parabolic::Ps, s) - &lhs
}

/// Exponents of `alpha` in `chi_alpha^s` on the center: `+n^+` on each
/// `lambda^+`, `-n^-` on each `lambda^-`.
pub fn chi_alpha_restriction(s: &Subpartition) -> TorusCharacter {
    let mut ch = TorusCharacter::trivial();
    for k in 0..s.t() {
        ch.add_exp(Coord::Plus(k), Q::from_integer(s.plus[k] as i64));
        ch.add_exp(Coord::Minus(k), -Q::from_integer(s.minus[k] as i64));
    }
    ch
}

/// `delta_P` of a standard parabolic of type `nbar` on its center, one
/// exponent per block.
pub fn standard_modulus(nbar: &[u32]) -> Vec<i64> {
    (0..nbar.len())
        .map(|i| {
            let above: i64 = nbar[i + 1..].iter().map(|&x| x as i64).sum();
            let below: i64 = nbar[..i].iter().map(|&x| x as i64).sum();
            nbar[i] as i64 * (above - below)
        })
        .collect()
}

/// All compositions of `n`.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let two = enumerate_relevant(&[2]);
        assert_eq!(two.len(), 1);
        assert_eq!((two[0].plus(0), two[0].minus(0)), (1, 1));
        assert_eq!(enumerate_relevant(&[1, 1]).len(), 3);
        let one = enumerate_relevant(&[1]);
        assert_eq!((one[0].plus(0), one[0].minus(0)), (1, 0));
        assert!(enumerate_relevant(&[2, 1, 3]).iter().all(Subpartition::is_valid));
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn borel_modulus() {
        assert_eq!(standard_modulus(&[1, 1]), vec![1, -1]);
        assert_eq!(standard_modulus(&[1, 2, 1]), vec![3, 0, -3]);
    }

    #[test]
    fn quotient_example() {
        let s = enumerate_relevant(&[1, 1])
            .into_iter()
            .find(|s| s.plus(0) == 1 && s.minus(1) == 1)
            .unwrap();
        let mut want = TorusCharacter::trivial();
        want.add_exp(Coord::Plus(0), Q::new(-1, 2));
        want.add_exp(Coord::Minus(1), Q::new(1, 2));
        assert_eq!(modulus_quotient_closed_form(&s), want);
        assert_eq!(modulus_quotient_direct(&s), want);
    }

    #[test]
    fn identities_small() {
        for n in 1..=4 {
            for nbar in compositions(n) {
                for s in enumerate_relevant(&nbar) {
                    assert!(modulus_identity_defect(&s).is_trivial(), "{s}");
                    assert_eq!(modulus_quotient_direct(&s), modulus_quotient_closed_form(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn alpha_restriction() {
        let s = &enumerate_relevant(&[2])[0];
        let ch = chi_alpha_restriction(s);
        assert_eq!(ch.exponent(Coord::Plus(0)), Q::from_integer(1));
        assert_eq!(ch.exponent(Coord::Minus(0)), Q::from_integer(-1));
        assert!((&ch + &(-&ch)).is_trivial());
        let off = enumerate_relevant(&[1, 1]).into_iter().find(|s| s.n_ij(0, 1) == 1).unwrap();
        assert!(chi_alpha_restriction(&off).is_trivial());
    }
}
