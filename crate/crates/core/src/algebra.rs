//! Modular arithmetic and small dense linear algebra over prime fields.
//!
//! Residues are always stored reduced into `[0, m)`. Everything here works at
//! desk scale: square roots and roots of unity are found by exhaustive search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let ps = prime_factors(n);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

/// Inverse of `x` modulo `m`.
pub fn unit_inverse(x: u64, m: u64) -> Result<u64> {
    let x = x % m;
    let (mut old_r, mut r) = (x as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotAUnit { x, m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Smallest `λ` with `λ² ≡ 5 (mod p)`, if 5 is a square.
pub fn sqrt5(p: u64) -> Option<u64> {
    (0..p).find(|&x| mul_mod(x, x, p) == 5 % p)
}

/// Multiplicative order of a unit `x` modulo `m`, or `None` if `x` is not a unit.
pub fn multiplicative_order(x: u64, m: u64) -> Option<u64> {
    if m < 2 || gcd(x % m, m) != 1 {
        return None;
    }
    let mut acc = x % m;
    let mut k = 1;
    while acc != 1 % m {
        acc = mul_mod(acc, x, m);
        k += 1;
    }
    Some(k)
}

fn has_exact_order(x: u64, r: u64, m: u64) -> bool {
    if gcd(x, m) != 1 || pow_mod(x, r, m) != 1 % m {
        return false;
    }
    prime_factors(r).into_iter().all(|q| pow_mod(x, r / q, m) != 1 % m)
}

/// Smallest unit modulo `m` of multiplicative order exactly `r`.
pub fn element_of_order(r: u64, m: u64) -> Option<u64> {
    if r == 0 || m < 2 {
        return None;
    }
    (1..m).find(|&x| has_exact_order(x, r, m))
}

/// All units modulo `m` of multiplicative order exactly `r`, ascending.
pub fn elements_of_order(r: u64, m: u64) -> Vec<u64> {
    (1..m).filter(|&x| has_exact_order(x, r, m)).collect()
}

/// The abelian group `Z_{m_1} × … × Z_{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianSpec {
    moduli: Vec<u64>,
}

/// An element of an [`AbelianSpec`], one reduced residue per factor.
pub type AbVector = Vec<u64>;

impl AbelianSpec {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() || moduli.iter().any(|&m| m < 2) {
            return Err(Error::UnsupportedParameter(format!(
                "abelian group moduli must be non-empty and >= 2, got {moduli:?}"
            )));
        }
        Ok(Self { moduli })
    }

    /// `Z_p^n`.
    pub fn elementary(p: u64, n: usize) -> Result<Self> {
        Self::new(vec![p; n])
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// `Some(p)` when every factor is the same prime `p`.
    pub fn elementary_prime(&self) -> Option<u64> {
        let p = self.moduli[0];
        (is_prime(p) && self.moduli.iter().all(|&m| m == p)).then_some(p)
    }

    pub fn zero(&self) -> AbVector {
        vec![0; self.moduli.len()]
    }

    pub fn basis(&self, i: usize) -> AbVector {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    /// Reduce an integer vector into canonical form.
    pub fn vector(&self, comps: &[i64]) -> Result<AbVector> {
        if comps.len() != self.moduli.len() {
            return Err(Error::SpecMismatch);
        }
        Ok(comps
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| reduce(c, m))
            .collect())
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        v.len() == self.moduli.len() && v.iter().zip(&self.moduli).all(|(&c, &m)| c < m)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> AbVector {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> AbVector {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + m - y) % m)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> AbVector {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect()
    }

    pub fn scale(&self, k: u64, a: &[u64]) -> AbVector {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| mul_mod(k % m, x, m))
            .collect()
    }

    /// Mixed-radix index, first component most significant.
    pub fn index_of(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    pub fn vector_at(&self, mut index: usize) -> AbVector {
        let mut v = self.zero();
        for (slot, &m) in v.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        v
    }

    pub fn elements(&self) -> impl Iterator<Item = AbVector> + '_ {
        (0..self.order() as usize).map(|i| self.vector_at(i))
    }
}

/// Vector over `F_p`.
pub type FpVector = Vec<u64>;

/// Square matrix over a prime field, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u64,
    n: usize,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, n: usize) -> Self {
        Self {
            p,
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        m
    }

    pub fn scalar(p: u64, n: usize, c: u64) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.entries[i * n + i] = c % p;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            entries.extend(r.iter().map(|&x| x % p));
        }
        Self { p, n, entries }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(p: u64, cols: &[FpVector]) -> Self {
        let n = cols.len();
        let mut m = Self::zero(p, n);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "matrix must be square");
            for i in 0..n {
                m.entries[i * n + j] = c[i] % p;
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n.max(1)).map(<[u64]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> FpVector {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> FpVector {
        let (n, p) = (self.n, self.p);
        (0..n)
            .map(|i| {
                let row = &self.entries[i * n..(i + 1) * n];
                row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        let (n, p) = (self.n, self.p);
        let mut out = Self::zero(p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut out.entries[i * n + j];
                    *e = (*e + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn det(&self) -> u64 {
        let (n, p) = (self.n, self.p);
        let mut a = self.entries.clone();
        let mut det = 1 % p;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = mul_mod(det, pv, p);
            let inv = unit_inverse(pv, p).expect("nonzero element of a prime field");
            for r in col + 1..n {
                let f = mul_mod(a[r * n + col], inv, p);
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + p - mul_mod(f, a[col * n + j], p)) % p;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        let (n, p) = (self.n, self.p);
        let mut a = self.entries.clone();
        let mut inv = Self::identity(p, n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
            let s = unit_inverse(a[col * n + col], p).ok()?;
            for j in 0..n {
                a[col * n + j] = mul_mod(a[col * n + j], s, p);
                inv[col * n + j] = mul_mod(inv[col * n + j], s, p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + p - mul_mod(f, a[col * n + j], p)) % p;
                    inv[r * n + j] = (inv[r * n + j] + p - mul_mod(f, inv[col * n + j], p)) % p;
                }
            }
        }
        Some(Self { p, n, entries: inv })
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut acc = Self::identity(self.p, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Row-reduce `rows` in place to reduced row echelon form; returns pivot columns.
pub fn rref(p: u64, rows: &mut Vec<FpVector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = unit_inverse(rows[r][c], p).expect("nonzero");
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, s, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, *y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(p: u64, vectors: &[FpVector]) -> usize {
    let mut rows = vectors.to_vec();
    rref(p, &mut rows).len()
}

/// Indices of the first maximal linearly independent subsequence (greedy, in order).
pub fn greedy_independent(p: u64, vectors: &[FpVector]) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut basis: Vec<FpVector> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(p, &trial) > basis.len() {
            basis.push(v.clone());
            chosen.push(i);
        }
    }
    chosen
}

/// Find an invertible `M` over `F_p` with `M · sources[i] = targets[i]` for every `i`.
///
/// Returns `Ok(None)` when the prescribed map is inconsistent on the linear
/// dependencies among the sources, or when the forced matrix is singular.
pub fn solve_extension(
    p: u64,
    sources: &[FpVector],
    targets: &[FpVector],
) -> Result<Option<FpMatrix>> {
    if sources.len() != targets.len() {
        return Err(Error::DegreeMismatch(sources.len(), targets.len()));
    }
    let n = sources.first().map_or(0, Vec::len);
    let basis = greedy_independent(p, sources);
    if basis.len() < n {
        return Err(Error::SourcesDoNotSpan {
            rank: basis.len(),
            dim: n,
        });
    }
    let src = FpMatrix::from_columns(
        p,
        &basis.iter().map(|&i| sources[i].clone()).collect::<Vec<_>>(),
    );
    let tgt = FpMatrix::from_columns(
        p,
        &basis.iter().map(|&i| targets[i].clone()).collect::<Vec<_>>(),
    );
    let m = tgt.mul(&src.inverse().expect("basis columns are independent"));
    let consistent = sources
        .iter()
        .zip(targets)
        .all(|(s, t)| m.mul_vec(s) == *t);
    Ok((consistent && m.is_invertible()).then_some(m))
}

/// Every `k`-dimensional subspace of `F_p^n`, each given by its RREF basis.
pub fn subspaces(p: u64, n: usize, k: usize) -> Vec<Vec<FpVector>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(p, n, k, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(
    p: u64,
    n: usize,
    k: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Vec<FpVector>>,
) {
    if pivots.len() == k {
        // Free entries: row r, column c > pivots[r], c not a pivot column.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = pivots[r];
                let piv = pivots.clone();
                (pv + 1..n)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u64; n]; k];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (code % p as usize) as u64;
                code /= p as usize;
            }
            out.push(rows);
        }
        return;
    }
    for c in start..n {
        pivots.push(c);
        choose_pivots(p, n, k, c + 1, pivots, out);
        pivots.pop();
    }
}

/// Whether `v` lies in the row space of the RREF basis `basis`.
pub fn in_span(p: u64, basis: &[FpVector], v: &[u64]) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank(p, &rows) == rank(p, basis)
}

/// Invariant factors `d_1 | d_2 | …` (all > 1) and a matching generating set
/// for the finite abelian group `Z^k / L`, where `L` is spanned by `relations`
/// and must have full rank. The new generators are returned as integer
/// combinations of the `k` original ones.
pub fn abelian_invariants(k: usize, relations: &[Vec<i64>]) -> (Vec<u64>, Vec<Vec<i64>>) {
    // Hermite-style accumulation into a k×k lattice basis.
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let mut rows: Vec<Vec<i128>> = relations
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut h = vec![vec![0i128; k]; k];
    let mut have = vec![false; k];
    for row in rows.drain(..) {
        let mut row = row;
        for c in 0..k {
            if row[c] == 0 {
                continue;
            }
            if !have[c] {
                if row[c] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                h[c] = row;
                have[c] = true;
                break;
            }
            // gcd-combine row into h[c].
            let (mut a, mut b) = (h[c].clone(), row);
            while b[c] != 0 {
                let q = a[c].div_euclid(b[c]);
                for j in 0..k {
                    a[j] -= q * b[j];
                }
                std::mem::swap(&mut a, &mut b);
            }
            if a[c] < 0 {
                a.iter_mut().for_each(|x| *x = -*x);
            }
            h[c] = a;
            row = b;
        }
        // Keep entries small: reduce above-diagonal entries by lower rows.
        for c in (0..k).rev() {
            if !have[c] {
                continue;
            }
            for r in 0..c {
                if have[r] && h[c][c] != 0 {
                    let q = h[r][c].div_euclid(h[c][c]);
                    if q != 0 {
                        for j in 0..k {
                            h[r][j] -= q * h[c][j];
                        }
                    }
                }
            }
        }
    }
    basis.extend(h);
    assert!(have.iter().all(|&x| x), "relation lattice must have full rank");

    // Smith normal form D = U·B·V, tracking V^{-1} (rows give new generators).
    let mut a = basis;
    let mut vinv: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();
    for t in 0..k {
        loop {
            // Choose the smallest nonzero entry in the trailing block as pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..k {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in 0..k {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..k {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    // column op: col_j -= q col_t  => V^{-1}: row_t += q row_j
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for c in 0..k {
                        vinv[t][c] += q * vinv[j][c];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: pivot must divide the remaining block.
            let d = a[t][t];
            let bad = (t + 1..k).flat_map(|i| (t + 1..k).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % d != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..k {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    let mut invariants = Vec::new();
    let mut gens = Vec::new();
    for t in 0..k {
        let d = a[t][t].unsigned_abs() as u64;
        if d > 1 {
            invariants.push(d);
            gens.push(vinv[t].iter().map(|&x| x as i64).collect());
        }
    }
    (invariants, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_inverse_examples() {
        assert_eq!(unit_inverse(2, 5), Ok(3));
        assert_eq!(unit_inverse(3, 11), Ok(4));
        assert_eq!(unit_inverse(5, 10), Err(Error::NotAUnit { x: 5, m: 10 }));
    }

    #[test]
    fn unit_inverse_is_involutive() {
        for m in 2..60u64 {
            for x in 1..m {
                if gcd(x, m) == 1 {
                    let y = unit_inverse(x, m).unwrap();
                    assert_eq!(mul_mod(x, y, m), 1 % m);
                    assert_eq!(unit_inverse(y, m).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn sqrt5_examples() {
        assert_eq!(sqrt5(11), Some(4));
        assert_eq!(sqrt5(7), None);
        assert_eq!(sqrt5(19), Some(9));
    }

    #[test]
    fn sqrt5_exists_iff_p_is_plus_minus_one_mod_5() {
        for p in (3..200).filter(|&p| is_prime(p) && p != 5) {
            let brute = (0..p).any(|x| (x * x) % p == 5 % p);
            assert_eq!(sqrt5(p).is_some(), brute, "p = {p}");
            assert_eq!(brute, p % 5 == 1 || p % 5 == 4, "p = {p}");
        }
    }

    #[test]
    fn element_of_order_examples() {
        assert_eq!(element_of_order(5, 11), Some(3));
        assert_eq!(element_of_order(5, 7), None);
        assert!(element_of_order(5, 41).is_some());
        assert!(has_exact_order(10, 5, 41));
        assert_eq!(elements_of_order(5, 11), vec![3, 4, 5, 9]);
    }

    #[test]
    fn order_five_exists_iff_five_divides_p_minus_one() {
        for p in (2..200).filter(|&p| is_prime(p)) {
            let brute = (1..p).any(|x| multiplicative_order(x, p) == Some(5));
            assert_eq!(element_of_order(5, p).is_some(), brute);
            assert_eq!(brute, (p - 1) % 5 == 0, "p = {p}");
        }
    }

    #[test]
    fn solve_extension_swap() {
        let m = solve_extension(5, &[vec![1, 0], vec![0, 1]], &[vec![0, 1], vec![1, 0]])
            .unwrap()
            .unwrap();
        assert_eq!(m, FpMatrix::from_rows(5, &[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn solve_extension_inconsistent_dependency() {
        let r = solve_extension(
            5,
            &[vec![1, 0], vec![0, 1], vec![1, 1]],
            &[vec![1, 0], vec![0, 1], vec![1, 0]],
        );
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn solve_extension_requires_spanning_sources() {
        let r = solve_extension(3, &[vec![1, 1], vec![2, 2]], &[vec![1, 0], vec![0, 1]]);
        assert_eq!(r, Err(Error::SourcesDoNotSpan { rank: 1, dim: 2 }));
    }

    #[test]
    fn solve_extension_rejects_singular_forced_map() {
        let r = solve_extension(3, &[vec![1, 0], vec![0, 1]], &[vec![1, 0], vec![1, 0]]);
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn matrix_inverse_and_det() {
        let m = FpMatrix::from_rows(7, &[vec![2, 3], vec![1, 4]]);
        assert_eq!(m.det(), 5);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMatrix::identity(7, 2));
        assert!(FpMatrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        assert_eq!(subspaces(5, 2, 1).len(), 6);
        assert_eq!(subspaces(11, 2, 1).len(), 12);
        assert_eq!(subspaces(2, 4, 2).len(), 35);
        assert_eq!(subspaces(3, 3, 2).len(), 13);
        assert_eq!(subspaces(3, 3, 0).len(), 1);
    }

    #[test]
    fn abelian_invariants_of_small_groups() {
        // Z_4 x Z_6 = Z_2 x Z_12
        let (inv, gens) = abelian_invariants(2, &[vec![4, 0], vec![0, 6]]);
        assert_eq!(inv, vec![2, 12]);
        assert_eq!(gens.len(), 2);
        // Z^2 / <(2, 0), (1, 3)> has order 6 and is cyclic.
        let (inv, _) = abelian_invariants(2, &[vec![2, 0], vec![1, 3], vec![0, 6]]);
        assert_eq!(inv, vec![6]);
        // Z_5 x Z_5
        let (inv, _) = abelian_invariants(2, &[vec![5, 0], vec![0, 5], vec![5, 5]]);
        assert_eq!(inv, vec![5, 5]);
    }

    #[test]
    fn mixed_radix_roundtrip() {
        let spec = AbelianSpec::new(vec![3, 4, 5]).unwrap();
        for i in 0..60 {
            assert_eq!(spec.index_of(&spec.vector_at(i)), i);
        }
        assert_eq!(spec.vector_at(1), vec![0, 0, 1]);
    }
}
