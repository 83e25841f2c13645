//! Exact integer linear algebra: dense arbitrary-precision matrices, Smith
//! normal form with unimodular transforms, and finitely generated abelian
//! groups with tensor and Tor.
//!
//! Everything here is exact; there is no floating point and no overflow.
//! Matrices in this crate stay small (a few hundred rows at most), so the
//! dense representation and the classical reduction algorithm are adequate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZModuleError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chain condition violated: outgoing map composed with incoming map is nonzero")]
    ChainConditionViolated,
}

/// Dense row-major integer matrix. Entries are arbitrary-precision, so the
/// coefficient growth during elimination is safe, if not fast.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from a flat row-major slice of machine integers.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        IntegerMatrix {
            rows,
            cols,
            entries: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntegerMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.get(k, j);
                    let cur = out.get(i, j) + t;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Accumulate `scale * block` into the region with upper-left corner
    /// `(r0, c0)`. Used when assembling differentials from per-term blocks;
    /// repeated targets add up (and may cancel).
    pub fn add_scaled_block(&mut self, r0: usize, c0: usize, block: &IntegerMatrix, scale: i64) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        let s = BigInt::from(scale);
        for i in 0..block.rows {
            for j in 0..block.cols {
                let v = self.get(r0 + i, c0 + j) + &s * block.get(i, j);
                self.set(r0 + i, c0 + j, v);
            }
        }
    }

    /// Rows `from..to` as a new matrix.
    pub fn row_slice(&self, from: usize, to: usize) -> IntegerMatrix {
        assert!(from <= to && to <= self.rows);
        IntegerMatrix {
            rows: to - from,
            cols: self.cols,
            entries: self.entries[from * self.cols..to * self.cols].to_vec(),
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = t / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Inverse of a unimodular matrix, or `None` if the matrix is not square
    /// with determinant ±1. Computed from the Smith normal form transforms:
    /// if U·A·V = I then A⁻¹ = V·U.
    pub fn inverse_unimodular(&self) -> Option<IntegerMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let s = snf(self);
        if !s.d.is_identity() {
            return None;
        }
        Some(s.v.matmul(&s.u))
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for IntegerMatrix {
    /// Plain grid: one line per row, entries space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Smith normal form `U·A·V = D` with unimodular transforms and their
/// inverses. `D` is diagonal, non-negative, with a divisibility chain on the
/// nonzero diagonal.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows.min(self.d.cols);
        (0..n).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    /// The nonzero diagonal entries d₁ | d₂ | … | d_r.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

struct SnfWorker {
    d: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl SnfWorker {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols {
                m.entries.swap(i * m.cols + c, j * m.cols + c);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            m.entries.swap(r * m.cols + i, r * m.cols + j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for r in 0..m.rows {
                m.entries.swap(r * m.cols + i, r * m.cols + j);
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols {
            m.entries.swap(i * m.cols + c, j * m.cols + c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols {
                let v = -m.get(i, c).clone();
                m.set(i, c, v);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            let v = -m.get(r, i).clone();
            m.set(r, i, v);
        }
    }

    /// row_i += q · row_j  (on D and U; inverse op on U⁻¹ columns).
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols {
                let v = m.get(i, c) + q * m.get(j, c);
                m.set(i, c, v);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            let v = m.get(r, j) - q * m.get(r, i);
            m.set(r, j, v);
        }
    }

    /// col_j += q · col_k  (on D and V; inverse op on V⁻¹ rows).
    fn add_col(&mut self, j: usize, k: usize, q: &BigInt) {
        for m in [&mut self.d, &mut self.v] {
            for r in 0..m.rows {
                let v = m.get(r, j) + q * m.get(r, k);
                m.set(r, j, v);
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols {
            let v = m.get(k, c) - q * m.get(j, c);
            m.set(k, c, v);
        }
    }

    /// Nonzero entry of minimal absolute value in the trailing submatrix
    /// starting at (t, t); ties broken by smallest row, then column.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut best_abs = BigInt::zero();
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                if best.is_none() || a < best_abs {
                    best = Some((i, j));
                    best_abs = a;
                }
            }
        }
        best
    }
}

/// Quotient of `a / b` rounded to nearest (b > 0), so the remainder has
/// absolute value at most b/2.
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    let q0 = a.div_floor(b);
    let r0 = a - &q0 * b;
    if &r0 * 2 > *b {
        q0 + 1
    } else {
        q0
    }
}

/// Smith normal form of `a`. Deterministic: the pivot rule is fixed
/// (minimal absolute value, ties by smallest row then column).
pub fn snf(a: &IntegerMatrix) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut w = SnfWorker {
        d: a.clone(),
        u: IntegerMatrix::identity(m),
        u_inv: IntegerMatrix::identity(m),
        v: IntegerMatrix::identity(n),
        v_inv: IntegerMatrix::identity(n),
    };

    let mut t = 0;
    'outer: while t < m.min(n) {
        let Some((pi, pj)) = w.min_pivot(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        if w.d.get(t, t).is_negative() {
            w.negate_row(t);
        }

        // Clear row t and column t. Remainders smaller than the pivot get
        // swapped into the pivot position, so the pivot strictly shrinks
        // and the loop terminates by Euclid's argument.
        loop {
            let mut changed = false;
            for i in t + 1..m {
                while !w.d.get(i, t).is_zero() {
                    let q = div_rounded(w.d.get(i, t), w.d.get(t, t));
                    if !q.is_zero() {
                        w.add_row(i, t, &-q);
                    }
                    if w.d.get(i, t).is_zero() {
                        break;
                    }
                    w.swap_rows(t, i);
                    if w.d.get(t, t).is_negative() {
                        w.negate_row(t);
                    }
                    changed = true;
                }
            }
            for j in t + 1..n {
                while !w.d.get(t, j).is_zero() {
                    let q = div_rounded(w.d.get(t, j), w.d.get(t, t));
                    if !q.is_zero() {
                        w.add_col(j, t, &-q);
                    }
                    if w.d.get(t, j).is_zero() {
                        break;
                    }
                    w.swap_cols(t, j);
                    if w.d.get(t, t).is_negative() {
                        w.negate_row(t);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        // Divisibility: the pivot must divide every remaining entry. If it
        // does not, pull the offending row up and redo this position; the
        // pivot's absolute value strictly decreases each time.
        for i in t + 1..m {
            for j in t + 1..n {
                if !w.d.get(i, j).mod_floor(w.d.get(t, t)).is_zero() {
                    w.add_row(t, i, &BigInt::one());
                    continue 'outer;
                }
            }
        }
        t += 1;
    }

    SnfResult {
        d: w.d,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// A finitely generated abelian group in normal form:
/// Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_s with 2 ≤ d₁ | d₂ | … | d_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Normalizes an arbitrary multiset of cyclic orders into the canonical
    /// divisor chain (1s dropped, prime powers regrouped).
    pub fn new<I>(rank: usize, cyclic_orders: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        FgAbelianGroup {
            rank,
            torsion: normalize_torsion(cyclic_orders.into_iter().collect()),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [BigInt::from(order)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let orders = self
            .torsion
            .iter()
            .chain(other.torsion.iter())
            .cloned()
            .collect::<Vec<_>>();
        FgAbelianGroup::new(self.rank + other.rank, orders)
    }
}

impl fmt::Display for FgAbelianGroup {
    /// Canonical notation: "0", "Z", "Z^r", "Z^r + Z/d1 + Z/d2" with the
    /// divisors ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.mod_floor(&p).is_zero() {
            let mut e = 0u32;
            while n.mod_floor(&p).is_zero() {
                n = n.div_floor(&p);
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Regroup a multiset of cyclic orders into a divisor chain via primary
/// decomposition: for each prime take exponents in descending order and
/// multiply the level-wise contributions back together.
fn normalize_torsion(orders: Vec<BigInt>) -> Vec<BigInt> {
    let mut by_prime: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
    for o in orders {
        let o = o.abs();
        if o <= BigInt::one() {
            continue;
        }
        for (p, e) in factorize(&o) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    for exps in by_prime.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let levels = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut chain = Vec::with_capacity(levels);
    for level in 0..levels {
        let mut d = BigInt::one();
        for (p, exps) in &by_prime {
            if let Some(&e) = exps.get(level) {
                d *= p.pow(e);
            }
        }
        chain.push(d);
    }
    chain.reverse();
    chain
}

/// Homology ker(outgoing)/im(incoming) at a free module of the given rank.
///
/// `incoming` is the map into the position (ambient_rank × n), `outgoing`
/// the map out of it (k × ambient_rank); either may be absent, meaning the
/// zero map. The torsion is computed from the incoming map rewritten in a
/// basis adapted to ker(outgoing), which is a direct summand, so its
/// elementary divisors agree with those of the incoming map itself; both
/// routes are computed and compared.
pub fn homology_at(
    incoming: Option<&IntegerMatrix>,
    outgoing: Option<&IntegerMatrix>,
    ambient_rank: usize,
) -> Result<FgAbelianGroup, ZModuleError> {
    if let Some(a) = incoming {
        if a.rows != ambient_rank {
            return Err(ZModuleError::DimensionMismatch(format!(
                "incoming map has {} rows, ambient rank is {}",
                a.rows, ambient_rank
            )));
        }
    }
    if let Some(b) = outgoing {
        if b.cols != ambient_rank {
            return Err(ZModuleError::DimensionMismatch(format!(
                "outgoing map has {} columns, ambient rank is {}",
                b.cols, ambient_rank
            )));
        }
    }
    if let (Some(a), Some(b)) = (incoming, outgoing) {
        if !b.matmul(a).is_zero() {
            return Err(ZModuleError::ChainConditionViolated);
        }
    }

    let (kernel_rank, in_kernel_basis) = match outgoing {
        None => (ambient_rank, incoming.cloned()),
        Some(b) => {
            let sb = snf(b);
            let r = sb.rank();
            let rewritten = incoming.map(|a| {
                let p = sb.v_inv.matmul(a);
                debug_assert!(p.row_slice(0, r).is_zero());
                p.row_slice(r, ambient_rank)
            });
            (ambient_rank - r, rewritten)
        }
    };

    match in_kernel_basis {
        None => Ok(FgAbelianGroup::free(kernel_rank)),
        Some(m) => {
            let sm = snf(&m);
            if let Some(a) = incoming {
                debug_assert_eq!(snf(a).divisors(), sm.divisors());
            }
            let rank = kernel_rank - sm.rank();
            Ok(FgAbelianGroup::new(rank, sm.divisors()))
        }
    }
}

/// Tensor product of finitely generated abelian groups:
/// Z ⊗ A = A, Z/m ⊗ Z/n = Z/gcd(m,n), extended bilinearly.
pub fn tensor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut orders = Vec::new();
    for t in b.torsion() {
        for _ in 0..a.rank() {
            orders.push(t.clone());
        }
    }
    for s in a.torsion() {
        for _ in 0..b.rank() {
            orders.push(s.clone());
        }
    }
    for s in a.torsion() {
        for t in b.torsion() {
            orders.push(s.gcd(t));
        }
    }
    FgAbelianGroup::new(a.rank() * b.rank(), orders)
}

/// Tor of finitely generated abelian groups: free parts contribute nothing,
/// Tor(Z/m, Z/n) = Z/gcd(m,n), extended bilinearly.
pub fn tor(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let mut orders = Vec::new();
    for s in a.torsion() {
        for t in b.torsion() {
            orders.push(s.gcd(t));
        }
    }
    FgAbelianGroup::new(0, orders)
}
