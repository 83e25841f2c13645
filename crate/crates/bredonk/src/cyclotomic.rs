//! Exact cyclotomic numbers: elements of Q(ζ_e) stored as rational
//! coefficient vectors of length e, kept reduced modulo the e-th cyclotomic
//! polynomial. Character values are sums of roots of unity, so this is all
//! the number-field arithmetic the tool needs.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients of the e-th cyclotomic polynomial, ascending degree, monic.
///
/// Computed by exact division: Φ_e = (x^e − 1) / Π_{d | e, d < e} Φ_d.
/// Results are memoized behind a lock; conductors stay tiny here.
pub fn cyclotomic_polynomial(e: usize) -> Vec<BigInt> {
    assert!(e >= 1, "conductor must be positive");
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }

    let mut computed: HashMap<usize, Vec<BigInt>> = HashMap::new();
    for d in 1..=e {
        if !e.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d + 1];
        num[0] = -BigInt::one();
        num[d] = BigInt::one();
        for (div, poly) in &computed {
            if d % div == 0 && *div < d {
                num = exact_poly_div(&num, poly);
            }
        }
        computed.insert(d, num);
    }
    let result = computed.remove(&e).unwrap();
    cache.lock().unwrap().insert(e, result.clone());
    result
}

/// Exact division of integer polynomials, divisor monic. Panics on a
/// nonzero remainder; callers only divide known factors out.
fn exact_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = deg(num).expect("nonzero numerator");
    let dd = deg(den).expect("nonzero divisor");
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

fn deg<T: Zero>(p: &[T]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// An element of Q(ζ_e). `coeffs[k]` is the coefficient of ζ_e^k; the
/// vector always has length e and is reduced modulo Φ_e, so equality of the
/// canonical form is equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: usize) -> Self {
        assert!(conductor >= 1);
        Cyclotomic {
            conductor,
            coeffs: vec![BigRational::zero(); conductor],
        }
    }

    pub fn one(conductor: usize) -> Self {
        Self::from_integer(1, conductor)
    }

    pub fn from_integer(n: impl Into<BigInt>, conductor: usize) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = BigRational::from_integer(n.into());
        c.reduce();
        c
    }

    pub fn from_rational(q: BigRational, conductor: usize) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = q;
        c.reduce();
        c
    }

    /// ζ_e^k, reduced.
    pub fn root_of_unity(conductor: usize, k: usize) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[k % conductor] = BigRational::one();
        c.reduce();
        c
    }

    /// Σ counts\[k\] · ζ_e^k. This is how lifted character values enter.
    pub fn from_counts(conductor: usize, counts: &[u64]) -> Self {
        assert_eq!(counts.len(), conductor);
        let mut c = Self::zero(conductor);
        for (k, &m) in counts.iter().enumerate() {
            c.coeffs[k] = BigRational::from_integer(BigInt::from(m));
        }
        c.reduce();
        c
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_polynomial(self.conductor);
        let dphi = deg(&phi).unwrap();
        let Some(d) = deg(&self.coeffs) else {
            return;
        };
        if d < dphi {
            return;
        }
        // long division remainder by the monic Φ_e
        for k in (0..=d - dphi).rev() {
            let c = self.coeffs[k + dphi].clone();
            if c.is_zero() {
                continue;
            }
            for (i, p) in phi.iter().enumerate() {
                let t = &c * BigRational::from_integer(p.clone());
                self.coeffs[k + i] -= t;
            }
        }
    }

    /// Reinterpret in Q(ζ_f) for e | f via ζ_e = ζ_f^{f/e}.
    pub fn lift_to(&self, conductor: usize) -> Cyclotomic {
        assert!(
            conductor.is_multiple_of(self.conductor),
            "can only lift to a multiple of the conductor"
        );
        if conductor == self.conductor {
            return self.clone();
        }
        let step = conductor / self.conductor;
        let mut out = Self::zero(conductor);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[k * step] = c.clone();
            }
        }
        out.reduce();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn rational_value(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_rational_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    pub fn integer_value(&self) -> Option<BigInt> {
        self.is_rational_integer().then(|| self.coeffs[0].to_integer())
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = common_conductor(self, other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            conductor: a.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = common_conductor(self, other);
        let e = a.conductor;
        let mut coeffs = vec![BigRational::zero(); e];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                coeffs[(i + j) % e] += x * y; // ζ^e = 1
            }
        }
        let mut out = Cyclotomic {
            conductor: e,
            coeffs,
        };
        out.reduce();
        out
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Equality as field elements: compare in a common conductor. Plain
    /// `==` is representational (same conductor, same coefficients).
    pub fn value_eq(&self, other: &Cyclotomic) -> bool {
        let (a, b) = common_conductor(self, other);
        a == b
    }
}

/// Lift both arguments to the lcm of their conductors.
pub fn common_conductor(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    if a.conductor == b.conductor {
        return (a.clone(), b.clone());
    }
    let l = num_integer::lcm(a.conductor, b.conductor);
    (a.lift_to(l), b.lift_to(l))
}

/// Total order: conductor first, then the coefficient vector
/// lexicographically. Used for the canonical ordering of characters.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cyclotomic {
    /// Integers print plainly, everything else as a polynomial in z{e}.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rational_value() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for k in (0..self.conductor).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let var = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, k),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}
