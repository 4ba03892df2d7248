//! Finite fields `GF(p^e)`.
//!
//! Elements are stored as the integer value of their coefficient vector in
//! base `p` (coefficient of `x^i` is the `i`-th base-`p` digit). This value is
//! also the canonical scalar ordering used everywhere else in the crate, and
//! the serialized form in the text formats.
//!
//! Multiplication goes through exp/log tables built from the least primitive
//! element; addition is digit-wise mod `p`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on the field order.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// An element of some [`Field`], identified by its base-`p` value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Caller guarantees `v < q` for the field in use.
    #[inline]
    pub(crate) const fn from_index(v: u32) -> Scalar {
        Scalar(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    /// `exp[i] = ω^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    primitive: Scalar,
}

/// A finite field `GF(p^e)`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // The modulus is a deterministic function of (p, e).
        self.0.p == other.0.p && self.0.e == other.0.e
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.e.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.e)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
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

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
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

/// Dense polynomials over `GF(p)`, lowest degree first, no trailing zeros.
mod poly {
    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        super::pow_mod(a, p - 2, p)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let coef = r[r.len() - 1] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                let t = coef * mi % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn pow_mod(base: &[u64], mut k: u64, m: &[u64], p: u64) -> Poly {
        let mut result = vec![1u64];
        let mut b = rem(base, m, p);
        while k > 0 {
            if k & 1 == 1 {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
            k >>= 1;
        }
        rem(&result, m, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's irreducibility test for a monic `f` of degree `e >= 1`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let e = f.len() - 1;
        if e == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        // x^(p^k) mod f for k = 0..=e, by repeated p-th powers.
        let mut frob = vec![rem(&x, f, p)];
        for k in 1..=e {
            let prev = &frob[k - 1];
            frob.push(pow_mod(prev, p, f, p));
        }
        if frob[e] != frob[0] {
            return false;
        }
        for l in super::prime_factors(e as u64) {
            let k = e / l as usize;
            let g = gcd(f, &sub(&frob[k], &x, p), p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

fn pow_mod(mut b: u64, mut k: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        k >>= 1;
    }
    r
}

fn digits(mut v: u64, p: u64, e: u32) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// The lexicographically least monic irreducible polynomial of degree `e`
/// over `GF(p)`, ordering candidates by the base-`p` value of their lower
/// coefficients (so `x^3 + x + 1` precedes `x^3 + x^2 + 1`).
pub fn least_irreducible(p: u64, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    for t in 0..count {
        let mut f = digits(t, p, e);
        f.push(1);
        if f[0] == 0 && e > 1 {
            continue;
        }
        if poly::is_irreducible(&f, p) {
            return f.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// `GF(p^e)` with the default size cap.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        Field::with_cap(p, e, DEFAULT_FIELD_CAP)
    }

    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Field> {
        let factors = prime_factors(q);
        match factors.as_slice() {
            [p] => {
                let mut e = 0;
                let mut r = q;
                while r > 1 {
                    r /= p;
                    e += 1;
                }
                Field::new(*p, e)
            }
            _ => Err(Error::BadParameters(format!("{q} is not a prime power"))),
        }
    }

    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if e == 0 || e > 64 {
            return Err(Error::DegreeOutOfRange(e));
        }
        let q = match p.checked_pow(e) {
            Some(q) if q <= cap && q <= u32::MAX as u64 => q,
            _ => return Err(Error::FieldTooLarge { p, e, cap }),
        };
        let modulus = (e > 1).then(|| least_irreducible(p, e));
        let modulus64: Option<Vec<u64>> = modulus
            .as_ref()
            .map(|m| m.iter().map(|&c| c as u64).collect());

        let slow_mul = |a: u64, b: u64| -> u64 {
            match &modulus64 {
                None => a * b % p,
                Some(m) => {
                    let r = poly::mul_mod(
                        &poly::trim(digits(a, p, e)),
                        &poly::trim(digits(b, p, e)),
                        m,
                        p,
                    );
                    undigits(&r, p)
                }
            }
        };
        let slow_pow = |a: u64, mut k: u64| -> u64 {
            let mut r = 1u64;
            let mut b = a;
            while k > 0 {
                if k & 1 == 1 {
                    r = slow_mul(r, b);
                }
                b = slow_mul(b, b);
                k >>= 1;
            }
            r
        };

        let group_order = q - 1;
        let factors = prime_factors(group_order);
        let primitive = (1..q)
            .find(|&x| factors.iter().all(|&l| slow_pow(x, group_order / l) != 1))
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(group_order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u64;
        for i in 0..group_order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = slow_mul(x, primitive);
        }
        debug_assert_eq!(x, 1);

        Ok(Field(Arc::new(Inner {
            p: p as u32,
            e,
            q: q as u32,
            modulus,
            exp,
            log,
            primitive: Scalar(primitive as u32),
        })))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, lowest degree first,
    /// including the leading 1. `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    /// The least generator of the multiplicative group.
    #[inline]
    pub fn primitive_element(&self) -> Scalar {
        self.0.primitive
    }

    /// Scalar with the given base-`p` value.
    pub fn element(&self, value: u32) -> Result<Scalar> {
        if value < self.0.q {
            Ok(Scalar(value))
        } else {
            Err(Error::OutOfRange {
                what: "scalar value",
                value: value as i64,
                range: "0..q",
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Scalar {
        Scalar(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Scalar> {
        if coeffs.len() != self.0.e as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::BadParameters(format!(
                "coefficient vector {coeffs:?} does not describe an element of {self}"
            )));
        }
        let v = coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.0.p + c);
        Ok(Scalar(v))
    }

    pub fn coefficients(&self, x: Scalar) -> Vec<u32> {
        digits(x.0 as u64, self.0.p as u64, self.0.e)
            .into_iter()
            .map(|d| d as u32)
            .collect()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.0.q).map(Scalar)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let p = self.0.p;
        if self.0.e == 1 {
            return Scalar((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut r, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Scalar(r)
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        let p = self.0.p;
        if self.0.e == 1 {
            return Scalar((p - a.0) % p);
        }
        let mut x = a.0;
        let (mut r, mut place) = (0u32, 1u32);
        while x > 0 {
            r += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Scalar(r)
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 == 0 || b.0 == 0 {
            return Scalar::ZERO;
        }
        let n = self.0.q - 1;
        let l = (self.0.log[a.0 as usize] as u64 + self.0.log[b.0 as usize] as u64) % n as u64;
        Scalar(self.0.exp[l as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        if a.0 == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Some(Scalar(self.0.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Scalar, k: u64) -> Scalar {
        if k == 0 {
            return Scalar::ONE;
        }
        if a.0 == 0 {
            return Scalar::ZERO;
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64 * (k % n) % n;
        Scalar(self.0.exp[l as usize])
    }

    /// `ω^k` for the primitive element `ω`.
    pub fn primitive_power(&self, k: u64) -> Scalar {
        let n = (self.0.q - 1) as u64;
        Scalar(self.0.exp[(k % n) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Scalar) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Some(n / num_integer::gcd(n, l))
    }
}
