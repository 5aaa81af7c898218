//! Reference computations that avoid the engine's own code paths.

use std::collections::BTreeSet;

use lff_core::cosets::{Coord, Subpartition, TorusCharacter};
use lff_core::{EulerFactor, Monomial, Q};
use num_complex::Complex64;

/// Weights of `Sp(k)` as an `SL(2)` module: `k-1, k-3, ..., 1-k`.
pub fn sl2_weights(k: u32) -> Vec<i64> {
    (0..k as i64).map(|i| k as i64 - 1 - 2 * i).collect()
}

/// Decomposes a weight multiset into irreducible dimensions, largest first,
/// by repeatedly removing the string of the highest weight.
pub fn sl2_decompose(mut weights: Vec<i64>) -> Vec<u32> {
    let mut out = Vec::new();
    while let Some(&top) = weights.iter().max() {
        for w in (-top..=top).step_by(2) {
            let pos = weights.iter().position(|&x| x == w).expect("weight multiset is a representation");
            weights.swap_remove(pos);
        }
        out.push(top as u32 + 1);
    }
    out
}

pub fn sl2_tensor(a: u32, b: u32) -> Vec<u32> {
    let (wa, wb) = (sl2_weights(a), sl2_weights(b));
    sl2_decompose(wa.iter().flat_map(|x| wb.iter().map(move |y| x + y)).collect())
}

pub fn sl2_wedge2(k: u32) -> Vec<u32> {
    let w = sl2_weights(k);
    sl2_decompose((0..w.len()).flat_map(|i| (i + 1..w.len()).map(|j| w[i] + w[j]).collect::<Vec<_>>()).collect())
}

pub fn sl2_sym2(k: u32) -> Vec<u32> {
    let w = sl2_weights(k);
    sl2_decompose((0..w.len()).flat_map(|i| (i..w.len()).map(|j| w[i] + w[j]).collect::<Vec<_>>()).collect())
}

/// `L(St_a(chi) x St_b(chi'), s) = prod_{i < min(a,b)} L(chi chi', s + (a+b)/2 - 1 - i)`
/// for unramified characters with Satake values `z`, `w`.
pub fn jps_pair_factor(z: &Monomial, w: &Monomial, a: u32, b: u32) -> EulerFactor {
    let zw = z * w;
    (0..a.min(b))
        .map(|i| EulerFactor::tate(&zw * &Monomial::q_pow(-(Q::new((a + b) as i64, 2) - 1 - i as i64))))
        .product()
}

/// Canonical content of a subpartition: upper off-diagonal entries
/// row-major, then the `(n^+, n^-)` pairs.
pub type SubpartitionKey = (Vec<u32>, Vec<(u32, u32)>);

pub fn key_of(s: &Subpartition) -> SubpartitionKey {
    let t = s.t();
    let off = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).map(|(i, j)| s.n_ij(i, j)).collect();
    (off, (0..t).map(|k| (s.plus(k), s.minus(k))).collect())
}

/// `I(nbar)` by scanning every matrix with entries `n_{i,j} <= min(n_i, n_j)`
/// and every diagonal splitting.
pub fn brute_force_relevant(nbar: &[u32]) -> BTreeSet<SubpartitionKey> {
    let t = nbar.len();
    let n: u32 = nbar.iter().sum();
    let upper: Vec<(usize, usize)> = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).collect();
    let bounds: Vec<u32> = upper.iter().map(|&(i, j)| nbar[i].min(nbar[j])).collect();
    let mut out = BTreeSet::new();
    let mut off = vec![0u32; upper.len()];
    loop {
        let mut diag: Vec<i64> = nbar.iter().map(|&x| x as i64).collect();
        for (v, &(i, j)) in off.iter().zip(&upper) {
            diag[i] -= *v as i64;
            diag[j] -= *v as i64;
        }
        if diag.iter().all(|&d| d >= 0) {
            let dbounds: Vec<u32> = diag.iter().map(|&d| d as u32).collect();
            let mut plus = vec![0u32; t];
            loop {
                let p: i64 = plus.iter().map(|&x| x as i64).sum();
                let m: i64 = diag.iter().sum::<i64>() - p;
                if p - m == (n % 2) as i64 {
                    let pm = plus.iter().zip(&dbounds).map(|(&x, &d)| (x, d - x)).collect();
                    out.insert((off.clone(), pm));
                }
                if !odometer(&mut plus, &dbounds) {
                    break;
                }
            }
        }
        if !odometer(&mut off, &bounds) {
            break;
        }
    }
    out
}

fn odometer(v: &mut [u32], max: &[u32]) -> bool {
    for (x, m) in v.iter_mut().zip(max) {
        if *x < *m {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

#[derive(Clone, Copy)]
struct Slot {
    row: usize,
    block: usize,
    coord: Coord,
    sign: i8,
    /// Index of the slot inside its piece.
    offset: u32,
    col: usize,
}

/// One slot per basis vector of `F^n`, in the order of the Levi blocks.
fn slots(s: &Subpartition) -> Vec<Slot> {
    let t = s.t();
    let mut out = Vec::new();
    for i in 0..t {
        for j in 0..t {
            let parts: Vec<(i8, u32)> = if i == j { vec![(1, s.plus(i)), (-1, s.minus(i))] } else { vec![(0, s.n_ij(i, j))] };
            for (sign, dim) in parts {
                let coord = match sign {
                    1 => Coord::Plus(i),
                    -1 => Coord::Minus(i),
                    _ => Coord::Off(i.min(j), i.max(j)),
                };
                for offset in 0..dim {
                    out.push(Slot { row: i, block: i * t + j, coord, sign, offset, col: j });
                }
            }
        }
    }
    out
}

/// `theta_s` on basis vectors: `(image index, sign)`.
fn theta(sl: &[Slot], a: usize) -> (usize, i8) {
    let x = sl[a];
    if x.sign != 0 {
        return (a, x.sign);
    }
    let b = sl
        .iter()
        .position(|y| y.row == x.col && y.col == x.row && y.offset == x.offset && y.sign == 0)
        .expect("swapped piece exists");
    (b, 1)
}

/// Modulus characters counted on matrix entries `E_{a,b}`: returns
/// `(delta_P, delta_{P_s}, delta_{P'_s}, delta_{P_s^{<theta_s>}})`.
pub fn entry_level_moduli(s: &Subpartition) -> [TorusCharacter; 4] {
    let sl = slots(s);
    let mut out: [TorusCharacter; 4] = Default::default();
    let one = Q::from_integer(1);
    let mut bump = |which: usize, a: usize, b: usize| {
        out[which].add_exp(sl[a].coord, one);
        out[which].add_exp(sl[b].coord, -one);
    };
    for a in 0..sl.len() {
        for b in 0..sl.len() {
            let in_ns = sl[a].block < sl[b].block;
            if sl[a].row < sl[b].row {
                bump(0, a, b);
            }
            if in_ns {
                bump(1, a, b);
                if sl[a].row == sl[b].row {
                    bump(2, a, b);
                }
                let (ta, sa) = theta(&sl, a);
                let (tb, sb) = theta(&sl, b);
                let fixed = if (ta, tb) == (a, b) {
                    sa * sb == 1
                } else {
                    sl[ta].block < sl[tb].block && (a, b) < (ta, tb)
                };
                if fixed {
                    bump(3, a, b);
                }
            }
        }
    }
    out
}

/// Numerical evaluation of monomials: `q = 3`, `z_i = exp(i theta_i)` for
/// fixed irrational-looking angles.
pub fn eval_monomial(m: &Monomial) -> Complex64 {
    let q = 3.0f64;
    let to_f = |x: Q| *x.numer() as f64 / *x.denom() as f64;
    let mut arg = std::f64::consts::TAU * to_f(m.angle());
    for (id, e) in m.symbols() {
        arg += (0.7 + 1.3 * (*id as f64).sqrt()) * to_f(*e);
    }
    Complex64::from_polar(q.powf(to_f(m.q_exp())), arg)
}

/// Coefficients of `prod (1 - u X)^m`.
pub fn expand(e: &EulerFactor) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for (u, m) in e.roots() {
        let u = eval_monomial(u);
        for _ in 0..m {
            let mut next = vec![Complex64::new(0.0, 0.0); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c * u;
            }
            p = next;
        }
    }
    p
}

pub fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `p(c X)`.
pub fn poly_scale(p: &[Complex64], c: Complex64) -> Vec<Complex64> {
    let mut f = Complex64::new(1.0, 0.0);
    p.iter()
        .map(|x| {
            let y = x * f;
            f *= c;
            y
        })
        .collect()
}

/// `p(X^2)`.
pub fn poly_square_var(p: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * p.len() - 1];
    for (i, x) in p.iter().enumerate() {
        out[2 * i] = *x;
    }
    out
}

/// Relative tolerance for comparing expanded polynomials.
pub const POLY_TOL: f64 = 1e-9;

pub fn poly_close(a: &[Complex64], b: &[Complex64]) -> bool {
    let n = a.len().max(b.len());
    let get = |p: &[Complex64], i: usize| p.get(i).copied().unwrap_or_default();
    let scale = (0..n).map(|i| get(a, i).norm().max(get(b, i).norm())).fold(1.0, f64::max);
    (0..n).all(|i| (get(a, i) - get(b, i)).norm() <= POLY_TOL * scale)
}
