//! Exact scalar fields: prime fields `F_p`, the rationals, and small
//! extensions `F_p[t]/(f)` used when a prime field is too small for random
//! sampling.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exactlin::LinError;

/// Names a field by its characteristic: `0` is the rationals, a prime `p`
/// is the prime field of order `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u32,
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u32 = 101;

    pub fn new(characteristic: u32) -> Result<Self, LinError> {
        let spec = FieldSpec { characteristic };
        spec.check()?;
        Ok(spec)
    }

    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn check(&self) -> Result<(), LinError> {
        let c = self.characteristic;
        if c == 0 || (c < (1u32 << 31) && is_prime(c as u64)) {
            Ok(())
        } else {
            Err(LinError::BadCharacteristic(c))
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { characteristic: Self::DEFAULT_PRIME }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact field arithmetic with a runtime context.
///
/// The dense kernels (`rref_in_place`, `reduce_by_echelon`, `matmul`) have
/// generic default implementations; [`Fp`] overrides them with lazily
/// reduced `u64` accumulation.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn characteristic(&self) -> u32;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u128>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Image of `num/den`; `None` if `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    /// Canonical integer pair for printing (residue for prime fields).
    fn to_ratio(&self, a: &Self::Elem) -> (BigInt, BigInt);

    /// Uniform sample from a subset of at least `min_size` elements (the
    /// whole field when the field is finite).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, min_size: u64) -> Self::Elem;

    /// Residue of a prime-field element, used to embed into extensions.
    fn as_residue(&self, _a: &Self::Elem) -> Option<u32> {
        None
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// In-place row reduction of a row-major `rows x cols` block. With
    /// `reduced`, produces the reduced row echelon form; otherwise only
    /// eliminates below pivots. Returns pivot columns.
    fn rref_in_place(&self, rows: usize, cols: usize, data: &mut [Self::Elem], reduced: bool) -> Vec<usize> {
        generic_rref(self, rows, cols, data, reduced)
    }

    /// Reduce `v` against echelon rows whose pivots (first nonzero entry,
    /// equal to one) are `pivots`, in insertion order.
    fn reduce_by_echelon(&self, basis: &[Vec<Self::Elem>], pivots: &[usize], v: &mut [Self::Elem]) {
        for (row, &c) in basis.iter().zip(pivots) {
            if self.is_zero(&v[c]) {
                continue;
            }
            let f = v[c].clone();
            for j in c..v.len() {
                if !self.is_zero(&row[j]) {
                    let t = self.mul(&f, &row[j]);
                    v[j] = self.sub(&v[j], &t);
                }
            }
        }
    }

    /// Row-major product of an `n x k` and a `k x m` block.
    fn matmul(&self, n: usize, k: usize, m: usize, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        let mut out = vec![self.zero(); n * m];
        for i in 0..n {
            for l in 0..k {
                let x = &a[i * k + l];
                if self.is_zero(x) {
                    continue;
                }
                for j in 0..m {
                    let y = &b[l * m + j];
                    if !self.is_zero(y) {
                        let t = self.mul(x, y);
                        out[i * m + j] = self.add(&out[i * m + j], &t);
                    }
                }
            }
        }
        out
    }

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let (n, d) = self.to_ratio(a);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{}/{}", n, d)
        }
    }

    fn elem_to_json(&self, a: &Self::Elem) -> serde_json::Value {
        let (n, d) = self.to_ratio(a);
        if d.is_one() {
            if let Some(v) = n.to_i64() {
                return serde_json::Value::from(v);
            }
        }
        serde_json::Value::from(self.elem_to_string(a))
    }

    fn elem_from_json(&self, v: &serde_json::Value) -> Result<Self::Elem, LinError> {
        match v {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| LinError::Parse(format!("non-integer number {}", n)))?;
                Ok(self.from_i64(i))
            }
            serde_json::Value::String(s) => self.parse_elem(s),
            other => Err(LinError::Parse(format!("expected scalar, found {}", other))),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, LinError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| LinError::Parse(format!("bad scalar '{}'", s)))?;
        let d: BigInt = den.parse().map_err(|_| LinError::Parse(format!("bad scalar '{}'", s)))?;
        self.from_ratio(&n, &d)
            .ok_or_else(|| LinError::Parse(format!("denominator of '{}' vanishes in the field", s)))
    }
}

fn generic_rref<F: Field + ?Sized>(
    field: &F,
    rows: usize,
    cols: usize,
    data: &mut [F::Elem],
    reduced: bool,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !field.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if i != r {
            for j in 0..cols {
                data.swap(i * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(&data[r * cols + c]).expect("nonzero pivot");
        for j in c..cols {
            data[r * cols + j] = field.mul(&data[r * cols + j], &inv);
        }
        let start = if reduced { 0 } else { r + 1 };
        for i in start..rows {
            if i == r || field.is_zero(&data[i * cols + c]) {
                continue;
            }
            let f = data[i * cols + c].clone();
            for j in c..cols {
                if !field.is_zero(&data[r * cols + j]) {
                    let t = field.mul(&f, &data[r * cols + j]);
                    data[i * cols + j] = field.sub(&data[i * cols + j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// The prime field of order `p`; elements are canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self, LinError> {
        if p < (1u32 << 31) && is_prime(p as u64) {
            Ok(Fp { p })
        } else {
            Err(LinError::BadCharacteristic(p))
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Number of multiply-adds of reduced operands a `u64` accumulator
    /// absorbs before it must be reduced.
    #[inline]
    fn lazy_budget(&self) -> u64 {
        let pm1 = (self.p as u64 - 1).max(1);
        (u64::MAX - self.p as u64) / (pm1 * pm1)
    }
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit");
    t.rem_euclid(p as i64) as u32
}

impl Field for Fp {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }
    fn order(&self) -> Option<u128> {
        Some(self.p as u128)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(inv_mod(*a, self.p))
        }
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let p = BigInt::from(self.p);
        let n = num.mod_floor(&p).to_u32().unwrap();
        let d = den.mod_floor(&p).to_u32().unwrap();
        if d == 0 {
            None
        } else {
            Some(self.mul(&n, &inv_mod(d, self.p)))
        }
    }
    fn to_ratio(&self, a: &u32) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, _min_size: u64) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn as_residue(&self, a: &u32) -> Option<u32> {
        Some(*a)
    }

    fn rref_in_place(&self, rows: usize, cols: usize, data: &mut [u32], reduced: bool) -> Vec<usize> {
        let p = self.p as u64;
        let budget = self.lazy_budget();
        let mut w: Vec<u64> = data.iter().map(|&x| x as u64).collect();
        let mut adds = vec![0u64; rows];
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let mut found = None;
            for i in r..rows {
                let v = w[i * cols + c] % p;
                w[i * cols + c] = v;
                if v != 0 {
                    found = Some(i);
                    break;
                }
            }
            let Some(i) = found else { continue };
            if i != r {
                let (lo, hi) = w.split_at_mut(i * cols);
                lo[r * cols..r * cols + cols].swap_with_slice(&mut hi[..cols]);
                adds.swap(i, r);
            }
            let inv = inv_mod(w[r * cols + c] as u32, self.p) as u64;
            for x in &mut w[r * cols + c..r * cols + cols] {
                *x = (*x % p) * inv % p;
            }
            adds[r] = 0;
            let start = if reduced { 0 } else { r + 1 };
            for j in start..rows {
                if j == r {
                    continue;
                }
                let f = w[j * cols + c] % p;
                if f == 0 {
                    w[j * cols + c] = 0;
                    continue;
                }
                if adds[j] >= budget {
                    for x in &mut w[j * cols + c..j * cols + cols] {
                        *x %= p;
                    }
                    adds[j] = 0;
                }
                let m = p - f;
                let (pivot_row, target) = if j < r {
                    let (lo, hi) = w.split_at_mut(r * cols);
                    (&hi[c..cols], &mut lo[j * cols + c..j * cols + cols])
                } else {
                    let (lo, hi) = w.split_at_mut(j * cols);
                    (&lo[r * cols + c..r * cols + cols], &mut hi[c..cols])
                };
                for (t, &s) in target.iter_mut().zip(pivot_row) {
                    *t += m * s;
                }
                adds[j] += 1;
                w[j * cols + c] = 0;
            }
            pivots.push(c);
            r += 1;
        }
        for (d, x) in data.iter_mut().zip(w) {
            *d = (x % p) as u32;
        }
        pivots
    }

    fn reduce_by_echelon(&self, basis: &[Vec<u32>], pivots: &[usize], v: &mut [u32]) {
        let p = self.p as u64;
        let budget = self.lazy_budget();
        let mut w: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        let mut adds = 0u64;
        for (row, &c) in basis.iter().zip(pivots) {
            let f = w[c] % p;
            if f == 0 {
                w[c] = 0;
                continue;
            }
            if adds >= budget {
                for x in &mut w[c..] {
                    *x %= p;
                }
                adds = 0;
            }
            let m = p - f;
            for (t, &s) in w[c..].iter_mut().zip(&row[c..]) {
                *t += m * s as u64;
            }
            adds += 1;
            w[c] = 0;
        }
        for (d, x) in v.iter_mut().zip(w) {
            *d = (x % p) as u32;
        }
    }

    fn matmul(&self, n: usize, k: usize, m: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let budget = self.lazy_budget().max(1);
        let mut out = vec![0u32; n * m];
        let mut acc = vec![0u64; m];
        for i in 0..n {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut count = 0u64;
            for l in 0..k {
                let x = a[i * k + l] as u64;
                if x == 0 {
                    continue;
                }
                if count >= budget {
                    acc.iter_mut().for_each(|v| *v %= p);
                    count = 0;
                }
                for (t, &y) in acc.iter_mut().zip(&b[l * m..l * m + m]) {
                    *t += x * y as u64;
                }
                count += 1;
            }
            for (o, t) in out[i * m..i * m + m].iter_mut().zip(&acc) {
                *o = (t % p) as u32;
            }
        }
        out
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u32 {
        0
    }
    fn order(&self) -> Option<u128> {
        None
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn to_ratio(&self, a: &BigRational) -> (BigInt, BigInt) {
        let mut n = a.numer().clone();
        let mut d = a.denom().clone();
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        (n, d)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, min_size: u64) -> BigRational {
        let bound = min_size.max(2) as i64;
        self.from_i64(rng.gen_range(0..bound))
    }
}

/// `F_p[t]/(f)` for a monic irreducible `f` of degree `k`; elements are
/// coefficient vectors of length `k`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: Fp,
    modulus: Vec<u32>,
}

impl ExtField {
    /// Smallest-degree extension of `F_p` with at least `min_order` elements.
    pub fn with_min_order(p: u32, min_order: u128) -> Result<Self, LinError> {
        let base = Fp::new(p)?;
        let mut k = 1u32;
        while (p as u128).pow(k) < min_order {
            k += 1;
        }
        Ok(ExtField { base, modulus: find_irreducible(base, k as usize) })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn embed(&self, a: u32) -> Vec<u32> {
        let mut v = vec![0; self.degree()];
        v[0] = a;
        v
    }

    fn reduce(&self, mut poly: Vec<u32>) -> Vec<u32> {
        let k = self.degree();
        let f = &self.base;
        while poly.len() > k {
            let lead = poly.pop().unwrap();
            if lead != 0 {
                let off = poly.len() - k;
                for i in 0..k {
                    let t = f.mul(&lead, &self.modulus[i]);
                    poly[off + i] = f.sub(&poly[off + i], &t);
                }
            }
        }
        poly.resize(k, 0);
        poly
    }

    fn pow(&self, a: &[u32], mut e: u128) -> Vec<u32> {
        let mut base = a.to_vec();
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
}

impl Field for ExtField {
    type Elem = Vec<u32>;

    fn characteristic(&self) -> u32 {
        self.base.p
    }
    fn order(&self) -> Option<u128> {
        Some((self.base.p as u128).pow(self.degree() as u32))
    }
    fn zero(&self) -> Vec<u32> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u32> {
        self.embed(1)
    }
    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&x| x == 0)
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let k = self.degree();
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = self.base.mul(x, y);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        self.reduce(prod)
    }
    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn inv(&self, a: &Vec<u32>) -> Option<Vec<u32>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order().unwrap() - 2))
    }
    fn from_i64(&self, v: i64) -> Vec<u32> {
        self.embed(self.base.from_i64(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Vec<u32>> {
        self.base.from_ratio(num, den).map(|x| self.embed(x))
    }
    fn to_ratio(&self, a: &Vec<u32>) -> (BigInt, BigInt) {
        // Only meaningful for embedded base elements.
        (BigInt::from(a[0]), BigInt::one())
    }
    fn elem_to_string(&self, a: &Vec<u32>) -> String {
        format!("{:?}", a)
    }
    fn elem_to_json(&self, a: &Vec<u32>) -> serde_json::Value {
        serde_json::Value::from(a.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, _min_size: u64) -> Vec<u32> {
        (0..self.degree()).map(|_| rng.gen_range(0..self.base.p)).collect()
    }
}

/// Polynomials over `F_p` as coefficient vectors, lowest degree first.
mod poly {
    use super::{Field, Fp};

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(f: Fp, a: &[u32], b: &[u32]) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = f.inv(b.last().unwrap()).unwrap();
        while r.len() >= b.len() {
            let c = f.mul(r.last().unwrap(), &lead_inv);
            let off = r.len() - b.len();
            for (i, y) in b.iter().enumerate() {
                let t = f.mul(&c, y);
                r[off + i] = f.sub(&r[off + i], &t);
            }
            r = trim(r);
        }
        r
    }

    pub fn mulmod(f: Fp, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = f.mul(x, y);
                prod[i + j] = f.add(&prod[i + j], &t);
            }
        }
        rem(f, &prod, m)
    }

    pub fn gcd(f: Fp, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(f, &a, &b);
            a = b;
            b = r;
        }
        a
    }

    /// `t^(p^i) mod m`, iterating the Frobenius.
    pub fn frobenius_power(f: Fp, m: &[u32], i: usize) -> Vec<u32> {
        let mut x = rem(f, &[0, 1], m);
        for _ in 0..i {
            let mut acc = vec![1u32];
            let mut base = x.clone();
            let mut e = f.modulus() as u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(f, &acc, &base, m);
                }
                base = mulmod(f, &base, &base, m);
                e >>= 1;
            }
            x = acc;
        }
        x
    }
}

/// Ben-Or irreducibility test: `f` of degree `k` is irreducible iff
/// `gcd(f, t^(p^i) - t) = 1` for all `i <= k/2`.
fn is_irreducible(f: Fp, m: &[u32]) -> bool {
    let k = m.len() - 1;
    if k <= 1 {
        return true;
    }
    for i in 1..=k / 2 {
        let mut x = poly::frobenius_power(f, m, i);
        x.resize(x.len().max(2), 0);
        x[1] = f.sub(&x[1], &1);
        let g = poly::gcd(f, m, &poly::trim(x));
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn find_irreducible(f: Fp, k: usize) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    let p = f.modulus() as u64;
    let mut counter = 0u64;
    loop {
        let mut m = vec![0u32; k + 1];
        m[k] = 1;
        let mut c = counter;
        for slot in m.iter_mut().take(k) {
            *slot = (c % p) as u32;
            c /= p;
        }
        if m[0] != 0 && is_irreducible(f, &m) {
            return m;
        }
        counter += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverses_round_trip() {
        for p in [2u32, 3, 5, 101, 65521] {
            let f = Fp::new(p).unwrap();
            for a in 1..p.min(500) {
                let b = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &b), 1, "p={} a={}", p, a);
            }
        }
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(101).is_ok());
        assert!(FieldSpec::new(100).is_err());
        assert!(FieldSpec::new(1).is_err());
    }

    #[test]
    fn rationals_are_exact() {
        let q = Rationals;
        let a = q.parse_elem("999983/1000000").unwrap();
        let b = q.parse_elem("-123457/999999").unwrap();
        let s = q.add(&a, &b);
        let back = q.sub(&s, &b);
        assert_eq!(back, a);
        let prod = q.mul(&a, &q.inv(&a).unwrap());
        assert!(q.is_one(&prod));
    }

    #[test]
    fn extension_field_inverses() {
        let e = ExtField::with_min_order(3, 20).unwrap();
        assert_eq!(e.degree(), 3);
        assert_eq!(e.order(), Some(27));
        let mut rng = rand::thread_rng();
        for _ in 0..50 {
            let a = e.random(&mut rng, 0);
            if e.is_zero(&a) {
                continue;
            }
            let b = e.inv(&a).unwrap();
            assert!(e.is_one(&e.mul(&a, &b)));
        }
    }

    #[test]
    fn ratio_maps_into_prime_field() {
        let f = Fp::new(5).unwrap();
        let x = f.parse_elem("3/2").unwrap();
        assert_eq!(f.mul(&x, &2), 3);
        assert!(f.parse_elem("1/5").is_err());
    }
}
