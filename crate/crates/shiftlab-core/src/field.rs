//! Exact coefficient fields: the rationals, prime fields GF(p), and
//! extension fields GF(p^k) as polynomial residues.
//!
//! A [`FieldSpec`] is a runtime description of the field; scalars carry no
//! back-pointer, so all arithmetic goes through the spec. Two specs built
//! from the same descriptor are identical (the modulus search is seeded
//! deterministically from `(p, k)`).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Largest admissible prime characteristic (fits 64-bit products without
/// widening: a·b < 2^62 for a, b < 2^31).
pub const MAX_PRIME: u64 = 1 << 31;

/// Largest admissible extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// The requested characteristic is not prime.
    NonPrime(u64),
    /// The requested prime lies outside 2..=2^31.
    PrimeOutOfRange(u64),
    /// The requested extension degree lies outside 1..=16.
    DegreeOutOfRange(usize),
    /// An explicitly supplied modulus is not monic of the right degree,
    /// has coefficients outside GF(p), or is reducible.
    BadModulus,
    /// The descriptor string does not match `q | f:<p> | f:<p>^<k>`.
    BadDescriptor(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "NonPrime: {p} is not prime"),
            FieldError::PrimeOutOfRange(p) => {
                write!(f, "PrimeOutOfRange: {p} is not in 2..=2^31")
            }
            FieldError::DegreeOutOfRange(k) => {
                write!(f, "DegreeOutOfRange: extension degree {k} is not in 1..=16")
            }
            FieldError::BadModulus => write!(f, "BadModulus: modulus is not monic irreducible"),
            FieldError::BadDescriptor(s) => {
                write!(f, "BadDescriptor: {s:?} (expected q, f:<p>, or f:<p>^<k>)")
            }
        }
    }
}

impl core::error::Error for FieldError {}

/// One exact scalar. Which variant is valid depends on the [`FieldSpec`]
/// the value travels with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    /// Arbitrary-precision rational, always in lowest terms.
    Rational(BigRational),
    /// Residue mod p, always `< p`.
    Residue(u64),
    /// Residue in GF(p)[x]/(modulus): little-endian coefficients, length
    /// exactly the extension degree, entries `< p`.
    Poly(Vec<u64>),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue(a) => write!(f, "{a}"),
            Scalar::Poly(cs) => {
                let mut first = true;
                for (i, c) in cs.iter().enumerate() {
                    if *c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{c}")?,
                        1 if *c == 1 => write!(f, "t")?,
                        1 => write!(f, "{c}t")?,
                        _ if *c == 1 => write!(f, "t^{i}")?,
                        _ => write!(f, "{c}t^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

/// Runtime description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime {
        p: u64,
    },
    Extension {
        p: u64,
        degree: usize,
        /// Monic irreducible over GF(p), little-endian, length `degree + 1`.
        modulus: Vec<u64>,
    },
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        check_prime(p)?;
        Ok(FieldSpec::Prime { p })
    }

    /// Builds GF(p^k), finding a monic irreducible modulus by seeded search.
    /// The search is deterministic in `(p, k)`.
    pub fn extension(p: u64, k: usize) -> Result<Self, FieldError> {
        check_prime(p)?;
        if !(1..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5f1e_1d8a ^ p ^ ((k as u64) << 32));
        // an attempt succeeds with probability about 1/k, so this bound is
        // astronomically safe
        for _ in 0..4096 {
            let mut modulus: Vec<u64> = (0..k).map(|_| sample_mod(&mut rng, p)).collect();
            modulus.push(1);
            if poly_is_irreducible(&modulus, p) {
                return Ok(FieldSpec::Extension {
                    p,
                    degree: k,
                    modulus,
                });
            }
        }
        unreachable!("irreducible modulus search failed for p={p}, k={k}");
    }

    /// Builds GF(p^k) with a caller-supplied monic irreducible modulus.
    pub fn extension_with_modulus(p: u64, k: usize, modulus: Vec<u64>) -> Result<Self, FieldError> {
        check_prime(p)?;
        if !(1..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        if modulus.len() != k + 1
            || modulus[k] != 1
            || modulus.iter().any(|&c| c >= p)
            || !poly_is_irreducible(&modulus, p)
        {
            return Err(FieldError::BadModulus);
        }
        Ok(FieldSpec::Extension {
            p,
            degree: k,
            modulus,
        })
    }

    /// Canonical descriptor: `q`, `f:<p>`, or `f:<p>^<k>`.
    pub fn descriptor(&self) -> String {
        use alloc::format;
        match self {
            FieldSpec::Rationals => String::from("q"),
            FieldSpec::Prime { p } => format!("f:{p}"),
            FieldSpec::Extension { p, degree, .. } => format!("f:{p}^{degree}"),
        }
    }

    /// Field characteristic; 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => *p,
        }
    }

    /// Whether the field has at least `bound` elements.
    pub fn size_at_least(&self, bound: u64) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Prime { p } => *p >= bound,
            FieldSpec::Extension { p, degree, .. } => {
                let mut size: u128 = 1;
                for _ in 0..*degree {
                    size = size.saturating_mul(*p as u128);
                    if size >= bound as u128 {
                        return true;
                    }
                }
                size >= bound as u128
            }
        }
    }

    /// Checks that `s` is a well-formed element of this field.
    pub fn check(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime { p }, Scalar::Residue(a)) => a < p,
            (FieldSpec::Extension { p, degree, .. }, Scalar::Poly(cs)) => {
                cs.len() == *degree && cs.iter().all(|c| c < p)
            }
            _ => false,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime { .. } => Scalar::Residue(0),
            FieldSpec::Extension { degree, .. } => Scalar::Poly(vec![0; *degree]),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime { .. } => Scalar::Residue(1),
            FieldSpec::Extension { degree, .. } => {
                let mut cs = vec![0; *degree];
                cs[0] = 1;
                Scalar::Poly(cs)
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime { p } => Scalar::Residue(n.rem_euclid(*p as i64) as u64),
            FieldSpec::Extension { p, degree, .. } => {
                let mut cs = vec![0; *degree];
                cs[0] = n.rem_euclid(*p as i64) as u64;
                Scalar::Poly(cs)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(a) => *a == 0,
            Scalar::Poly(cs) => cs.iter().all(|&c| c == 0),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldSpec::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(add_mod(*x, *y, *p))
            }
            (FieldSpec::Extension { p, .. }, Scalar::Poly(xs), Scalar::Poly(ys)) => Scalar::Poly(
                xs.iter()
                    .zip(ys)
                    .map(|(&x, &y)| add_mod(x, y, *p))
                    .collect(),
            ),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime { p }, Scalar::Residue(x)) => Scalar::Residue(neg_mod(*x, *p)),
            (FieldSpec::Extension { p, .. }, Scalar::Poly(xs)) => {
                Scalar::Poly(xs.iter().map(|&x| neg_mod(x, *p)).collect())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldSpec::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(x * y % p)
            }
            (
                FieldSpec::Extension {
                    p,
                    degree,
                    modulus,
                },
                Scalar::Poly(xs),
                Scalar::Poly(ys),
            ) => {
                // schoolbook product then reduction by the monic modulus
                let mut prod = vec![0u64; 2 * degree - 1];
                for (i, &x) in xs.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in ys.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y % p) % p;
                    }
                }
                for i in (*degree..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &m) in modulus.iter().enumerate().take(*degree) {
                        let idx = i - degree + j;
                        prod[idx] = (prod[idx] + (p - m % p) % p * c % p) % p;
                    }
                }
                prod.truncate(*degree);
                Scalar::Poly(prod)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()).into(),
            (FieldSpec::Prime { p }, Scalar::Residue(x)) => {
                Some(Scalar::Residue(inv_mod(*x, *p)))
            }
            (
                FieldSpec::Extension {
                    p,
                    degree,
                    modulus,
                },
                Scalar::Poly(xs),
            ) => {
                let inv = poly_inv_mod(xs, modulus, *p);
                let mut cs = inv;
                cs.resize(*degree, 0);
                Some(Scalar::Poly(cs))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let binv = self.inv(b).expect("division by zero");
        self.mul(a, &binv)
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// A uniformly random element for the finite fields; for the rationals,
    /// a uniform integer in `[0, 2^16)`, which is plenty of room for the
    /// genericity arguments this library needs randomness for.
    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Rationals => {
                let n = rng.next_u64() & 0xffff;
                Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
            }
            FieldSpec::Prime { p } => Scalar::Residue(sample_mod(rng, *p)),
            FieldSpec::Extension { p, degree, .. } => {
                Scalar::Poly((0..*degree).map(|_| sample_mod(rng, *p)).collect())
            }
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let body = s
            .strip_prefix("f:")
            .ok_or_else(|| FieldError::BadDescriptor(String::from(s)))?;
        let bad = || FieldError::BadDescriptor(String::from(s));
        match body.split_once('^') {
            None => {
                let p: u64 = body.parse().map_err(|_| bad())?;
                FieldSpec::prime(p)
            }
            Some((ps, ks)) => {
                let p: u64 = ps.parse().map_err(|_| bad())?;
                let k: usize = ks.parse().map_err(|_| bad())?;
                FieldSpec::extension(p, k)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn check_prime(p: u64) -> Result<(), FieldError> {
    if !(2..=MAX_PRIME).contains(&p) {
        return Err(FieldError::PrimeOutOfRange(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NonPrime(p));
    }
    Ok(())
}

/// Deterministic Miller–Rabin; the bases 2, 3, 5, 7 decide primality for
/// everything below 3.2·10^9, which covers the admissible range.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn sample_mod<R: RngCore>(rng: &mut R, p: u64) -> u64 {
    // rejection from the smallest power-of-two window covering p, so every
    // draw accepts with probability above 1/2 even for tiny p
    let mask = p.next_power_of_two() - 1;
    loop {
        let x = rng.next_u64() & mask;
        if x < p {
            return x;
        }
    }
}

// --- dense polynomials over GF(p), little-endian, used for modulus checks ---
// these never run in inner loops, so clarity beats speed

fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b % p) % p;
        }
    }
    poly_trim(out)
}

fn poly_sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let n = core::cmp::max(f.len(), g.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = (a + p - b) % p;
    }
    poly_trim(out)
}

/// Quotient and remainder of `f` by nonzero `g`.
fn poly_divrem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = poly_trim(g.to_vec());
    let lead_inv = inv_mod(*g.last().expect("division by zero polynomial"), p);
    let dg = g.len() - 1;
    let mut r = poly_trim(f.to_vec());
    let mut q = vec![0u64; (r.len() + 1).saturating_sub(g.len())];
    while r.len() > dg {
        let c = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - dg;
        q[shift] = c;
        for (j, &gc) in g.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - gc * c % p) % p;
        }
        r = poly_trim(r);
    }
    (poly_trim(q), r)
}

fn poly_rem(f: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    poly_divrem(f, m, p).1
}

fn poly_pow_mod(f: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(f, m, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(f.to_vec());
    let mut b = poly_trim(g.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Extended Euclid: the inverse of `f` modulo the monic irreducible `m`.
fn poly_inv_mod(f: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // invariant: r_i ≡ s_i·f (mod m)
    let mut r0 = poly_trim(m.to_vec());
    let mut r1 = poly_rem(f, m, p);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1 = vec![1u64];
    while !r1.is_empty() {
        let (q, r2) = poly_divrem(&r0, &r1, p);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd, a nonzero constant since m is irreducible
    debug_assert_eq!(r0.len(), 1, "inverse of a non-unit");
    let c = inv_mod(r0[0], p);
    poly_trim(s0.iter().map(|&a| a * c % p).collect())
}

/// Monic `f` of degree k is irreducible iff it has no irreducible factor of
/// degree ≤ k/2; x^(p^i) − x is the product of all irreducibles of degree
/// dividing i, so k/2 gcds decide it.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    let mut frob = vec![0u64, 1]; // x
    for _ in 0..k / 2 {
        frob = poly_pow_mod(&frob, p, f, p);
        // frob - x
        let mut diff = frob.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let diff = poly_trim(diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
