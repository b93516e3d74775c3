//! Prime and extension field arithmetic on integer-encoded elements, plus the
//! dense polynomial helpers used for moduli, factorization and quotient rings.
//!
//! An element of GF(p^k) is encoded as `sum c_j p^j` where `c_0 + c_1 a + ...`
//! is its residue modulo the defining polynomial. Index 0 is zero, index 1 is one.

use crate::numtheory::factorize;

pub(crate) trait FieldOps {
    fn size(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> u32;

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
}

#[derive(Debug, Clone)]
pub(crate) struct GaloisArith {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp/log tables for k > 1; prime fields multiply directly.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisArith {
    pub fn prime(p: u32) -> Self {
        GaloisArith {
            p,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            exp: Vec::new(),
            log: Vec::new(),
        }
    }

    /// Builds GF(p^k) from a monic irreducible `modulus` of degree `k` over F_p.
    pub fn extension(p: u32, modulus: &[u32]) -> Self {
        let k = (modulus.len() - 1) as u32;
        if k == 1 {
            return Self::prime(p);
        }
        let q = p.pow(k);
        let mut field = GaloisArith {
            p,
            k,
            q,
            modulus: modulus.to_vec(),
            exp: Vec::new(),
            log: Vec::new(),
        };
        let order = (q - 1) as u64;
        let prime_factors: Vec<u64> = factorize(order).into_iter().map(|(r, _)| r).collect();
        let generator = (2..q)
            .find(|&g| {
                prime_factors
                    .iter()
                    .all(|&r| field.slow_pow(g, order / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.slow_mul(x, generator);
        }
        field.exp = exp;
        field.log = log;
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// Schoolbook product reduced modulo the defining polynomial.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prime = GaloisArith::prime(self.p);
        let prod = poly_mul(&prime, &self.digits(a), &self.digits(b));
        let mut r = poly_rem(&prime, &prod, &self.modulus);
        r.resize(self.k as usize, 0);
        self.from_digits(&r)
    }

    fn slow_pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Human-readable form as a polynomial in `symbol` (plain integer for prime fields).
    pub fn format(&self, a: u32, symbol: &str) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        format_poly(&self.digits(a), symbol, |c| c.to_string(), |_| false)
    }
}

impl FieldOps for GaloisArith {
    fn size(&self) -> u32 {
        self.q
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut r, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            r += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        r
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        self.pow(a, self.q as u64 - 2)
    }
}

/// Lexicographically least monic irreducible polynomial of degree `k` over F_p,
/// comparing coefficient tuples from the highest non-leading degree down.
pub(crate) fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let prime = GaloisArith::prime(p);
    let count = (p as u64).pow(k);
    for x in 0..count {
        let mut f: Vec<u32> = (0..k)
            .map(|j| ((x / (p as u64).pow(j)) % p as u64) as u32)
            .collect();
        f.push(1);
        if is_irreducible(&prime, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of a trimmed polynomial; `None` for zero.
pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn poly_mul<F: FieldOps>(f: &F, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn poly_divmod<F: FieldOps>(f: &F, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    let mut q = vec![0; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn poly_rem<F: FieldOps>(f: &F, a: &[u32], b: &[u32]) -> Poly {
    poly_divmod(f, a, b).1
}

pub(crate) fn poly_gcd<F: FieldOps>(f: &F, a: &[u32], b: &[u32]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// The `idx`-th monic polynomial of degree `d` (lower coefficients in mixed radix).
pub(crate) fn monic_by_index<F: FieldOps>(f: &F, d: usize, mut idx: u64) -> Poly {
    let size = f.size() as u64;
    let mut out: Vec<u32> = (0..d)
        .map(|_| {
            let c = (idx % size) as u32;
            idx /= size;
            c
        })
        .collect();
    out.push(1);
    out
}

pub(crate) fn is_irreducible<F: FieldOps>(f: &F, poly: &[u32]) -> bool {
    let Some(n) = degree(poly) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let size = f.size() as u64;
    for d in 1..=n / 2 {
        for idx in 0..size.pow(d as u32) {
            let g = monic_by_index(f, d, idx);
            if poly_rem(f, poly, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Factorization of a monic polynomial into monic irreducibles with multiplicities,
/// ordered by degree then by enumeration index.
pub(crate) fn factor_monic<F: FieldOps>(f: &F, poly: &[u32]) -> Vec<(Poly, u32)> {
    let mut rest = trim(poly.to_vec());
    let mut out = Vec::new();
    let size = f.size() as u64;
    let mut d = 1;
    while degree(&rest).is_some_and(|n| n >= 2 * d) {
        for idx in 0..size.pow(d as u32) {
            let g = monic_by_index(f, d, idx);
            let mut mult = 0;
            loop {
                let (q, r) = poly_divmod(f, &rest, &g);
                if !r.is_empty() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        d += 1;
    }
    if degree(&rest).is_some_and(|n| n >= 1) {
        out.push((rest, 1));
    }
    out
}

/// Formats `sum c_j x^j` from highest degree down, e.g. `a^2 + 2a + 1`.
pub(crate) fn format_poly<C: Copy + PartialEq + Default>(
    coeffs: &[C],
    symbol: &str,
    show: impl Fn(C) -> String,
    compound: impl Fn(C) -> bool,
) -> String {
    let zero = C::default();
    let mut terms = Vec::new();
    for (j, &c) in coeffs.iter().enumerate().rev() {
        if c == zero {
            continue;
        }
        let text = show(c);
        let coeff = if compound(c) {
            format!("({text})")
        } else {
            text
        };
        let term = match j {
            0 => coeff,
            _ => {
                let mono = if j == 1 {
                    symbol.to_string()
                } else {
                    format!("{symbol}^{j}")
                };
                if coeff == "1" {
                    mono
                } else {
                    format!("{coeff}{mono}")
                }
            }
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
