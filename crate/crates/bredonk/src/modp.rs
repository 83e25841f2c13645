//! Small prime-field linear algebra used by the character-table lift:
//! arithmetic mod p, reduced row echelon form, nullspaces, and the prime
//! and primitive-root searches. Internal to the crate.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime p ≡ 1 (mod exponent) with p > 2·order and p > 2·√order.
/// The congruence puts the needed roots of unity in F_p; the size bounds
/// make the character lift unambiguous.
pub(crate) fn find_dixon_prime(exponent: u64, order: u64) -> Option<u64> {
    const BOUND: u64 = 100_000_000;
    let mut p = exponent + 1;
    while p <= BOUND {
        if p > 2 * order && p * p > 4 * order && is_prime(p) {
            return Some(p);
        }
        p += exponent;
    }
    None
}

/// Smallest primitive root mod p (p prime).
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fp = Fp::new(p);
    let mut q = p - 1;
    let mut prime_factors = Vec::new();
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            prime_factors.push(d);
            while q.is_multiple_of(d) {
                q /= d;
            }
        }
        d += 1;
    }
    if q > 1 {
        prime_factors.push(q);
    }
    (2..p)
        .find(|&g| prime_factors.iter().all(|&f| fp.pow(g, (p - 1) / f) != 1))
        .expect("every prime has a primitive root")
}

/// Dense matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        FpMatrix {
            rows,
            cols,
            p,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries = rows.iter().flatten().map(|&x| x % p).collect();
        FpMatrix {
            rows: nrows,
            cols: ncols,
            p,
            entries,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.p;
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn matmul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.p, rhs.p);
        let fp = Fp::new(self.p);
        let mut out = FpMatrix::zero(self.rows, rhs.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = fp.add(out.get(i, j), fp.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Subtract λ from the diagonal (square matrices).
    pub fn sub_scalar_diag(&self, lambda: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let fp = Fp::new(self.p);
        let mut out = self.clone();
        for i in 0..self.rows {
            out.set(i, i, fp.sub(self.get(i, i), lambda));
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let fp = Fp::new(self.p);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                self.entries.swap(row * self.cols + j, pr * self.cols + j);
            }
            let inv = fp.inv(self.get(row, col));
            for j in 0..self.cols {
                let v = fp.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col) == 0 {
                    continue;
                }
                let factor = self.get(r, col);
                for j in 0..self.cols {
                    let v = fp.sub(self.get(r, j), fp.mul(factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Kernel basis as matrix columns, in ascending free-column order.
    pub fn nullspace(&self) -> FpMatrix {
        let fp = Fp::new(self.p);
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FpMatrix::zero(self.cols, free.len(), self.p);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(fc, bi, 1);
            for (ri, &pc) in pivots.iter().enumerate() {
                basis.set(pc, bi, fp.sub(0, r.get(ri, fc)));
            }
        }
        basis
    }
}

/// Solve B·X = C where B has full column rank; returns `None` if the system
/// is inconsistent or B is rank-deficient.
pub(crate) fn solve_full_col_rank(b: &FpMatrix, c: &FpMatrix) -> Option<FpMatrix> {
    assert_eq!(b.rows, c.rows);
    assert_eq!(b.p, c.p);
    let m = b.cols;
    let mut aug = FpMatrix::zero(b.rows, m + c.cols, b.p);
    for i in 0..b.rows {
        for j in 0..m {
            aug.set(i, j, b.get(i, j));
        }
        for j in 0..c.cols {
            aug.set(i, m + j, c.get(i, j));
        }
    }
    let pivots = aug.rref();
    if pivots.len() < m || pivots[..m] != (0..m).collect::<Vec<_>>()[..] {
        return None;
    }
    for i in m..b.rows {
        for j in 0..c.cols {
            if aug.get(i, m + j) != 0 {
                return None;
            }
        }
    }
    let mut x = FpMatrix::zero(m, c.cols, b.p);
    for i in 0..m {
        for j in 0..c.cols {
            x.set(i, j, aug.get(i, m + j));
        }
    }
    Some(x)
}
