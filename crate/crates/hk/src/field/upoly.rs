//! Dense univariate polynomials over a prime field `F_p`.
//!
//! Internal building block for extension-field elements (residues modulo the
//! minimal polynomial) and rational-function-field elements (reduced
//! numerator/denominator pairs). Coefficients are stored ascending with no
//! trailing zeros, each in `0..p`; the zero polynomial is the empty vector.
//! The modulus `p` is passed into every operation instead of being stored,
//! since the owning field descriptor already knows it.

use crate::error::{Error, Result};

/// Modular addition for residues `< p < 2^31`.
#[inline]
pub(crate) fn add_m(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

/// Modular subtraction.
#[inline]
pub(crate) fn sub_m(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Modular multiplication; safe because `p <= 2^31` keeps the product below
/// `2^62`.
#[inline]
pub(crate) fn mul_m(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

/// Modular exponentiation by squaring.
pub(crate) fn pow_m(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_m(acc, base, p);
        }
        base = mul_m(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p` (Fermat).
pub(crate) fn inv_m(a: u64, p: u64) -> Result<u64> {
    if a % p == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(pow_m(a, p - 2, p))
}

/// Dense univariate polynomial over `F_p`, canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UPoly {
    /// Ascending coefficients, no trailing zeros, entries in `0..p`.
    pub coeffs: Vec<u64>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { coeffs: vec![1] }
    }

    pub fn constant(c: u64, p: u64) -> Self {
        let c = c % p;
        if c == 0 {
            UPoly::zero()
        } else {
            UPoly { coeffs: vec![c] }
        }
    }

    /// The generator `x` of `F_p[x]`.
    pub fn x() -> Self {
        UPoly { coeffs: vec![0, 1] }
    }

    /// Build from raw coefficients (ascending), reducing mod `p` and trimming.
    pub fn from_coeffs(coeffs: Vec<u64>, p: u64) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|v| v % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &UPoly, p: u64) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out.push(add_m(a, b, p));
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        UPoly { coeffs: out }
    }

    pub fn sub(&self, other: &UPoly, p: u64) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out.push(sub_m(a, b, p));
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        UPoly { coeffs: out }
    }

    pub fn mul(&self, other: &UPoly, p: u64) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out[i + j] = add_m(out[i + j], mul_m(a, b, p), p);
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        UPoly { coeffs: out }
    }

    pub fn mul_scalar(&self, c: u64, p: u64) -> UPoly {
        let c = c % p;
        if c == 0 {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|&a| mul_m(a, c, p)).collect(),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divrem(&self, divisor: &UPoly, p: u64) -> Result<(UPoly, UPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lc_inv = inv_m(divisor.leading_coeff(), p)?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let lead = rem[k];
            if lead != 0 {
                let factor = mul_m(lead, lc_inv, p);
                quo[k - dd] = factor;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = sub_m(rem[idx], mul_m(factor, c, p), p);
                }
            }
            rem.pop();
        }
        while rem.last() == Some(&0) {
            rem.pop();
        }
        while quo.last() == Some(&0) {
            quo.pop();
        }
        Ok((UPoly { coeffs: quo }, UPoly { coeffs: rem }))
    }

    pub fn rem(&self, modulus: &UPoly, p: u64) -> Result<UPoly> {
        Ok(self.divrem(modulus, p)?.1)
    }

    /// Monic scalar multiple of `self` (zero stays zero).
    pub fn monic(&self, p: u64) -> Result<UPoly> {
        if self.is_zero() {
            return Ok(UPoly::zero());
        }
        Ok(self.mul_scalar(inv_m(self.leading_coeff(), p)?, p))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly, p: u64) -> Result<UPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, p)?;
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// Inverse of `self` modulo `modulus` (extended Euclid); fails with
    /// `DivisionByZero` when `gcd(self, modulus) != 1` or `self == 0`.
    pub fn inv_mod(&self, modulus: &UPoly, p: u64) -> Result<UPoly> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (modulus, self): track t-coefficients for self.
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus, p)?;
        let mut t0 = UPoly::zero();
        let mut t1 = UPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, p)?;
            let t = t0.sub(&q.mul(&t1, p), p);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        match r0.degree() {
            Some(0) => {
                let scale = inv_m(r0.leading_coeff(), p)?;
                Ok(t0.mul_scalar(scale, p).rem(modulus, p)?)
            }
            _ => Err(Error::DivisionByZero),
        }
    }

    /// `self(x)^p = self(x^p)` over `F_p` (Fermat on coefficients): stretch the
    /// exponents by `p`.
    pub fn frobenius_stretch(&self, p: u64) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![0u64; (self.coeffs.len() - 1) * p as usize + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * p as usize] = c;
        }
        UPoly { coeffs: out }
    }

    /// `self^exp mod modulus` by binary exponentiation.
    pub fn pow_mod(&self, mut exp: u64, modulus: &UPoly, p: u64) -> Result<UPoly> {
        let mut base = self.rem(modulus, p)?;
        let mut acc = UPoly::one().rem(modulus, p)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, p).rem(modulus, p)?;
            }
            base = base.mul(&base, p).rem(modulus, p)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Deterministic irreducibility test for a monic polynomial of degree
    /// `1..=16`.
    ///
    /// Small coefficient spaces get exhaustive trial division by every monic
    /// polynomial of degree up to `deg/2`; larger primes use the exact
    /// Frobenius-based test (`x^(p^k) == x mod f` and
    /// `gcd(x^(p^(k/l)) - x, f) == 1` for each prime `l | k`).
    pub fn is_irreducible(&self, p: u64) -> Result<bool> {
        let k = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            Some(k) => k,
        };
        let half = k / 2;
        // p^half fits comfortably when below 2^16; enumerate then.
        let mut enumerable = true;
        let mut count: u64 = 1;
        for _ in 0..half {
            count = match count.checked_mul(p) {
                Some(c) if c <= 1 << 16 => c,
                _ => {
                    enumerable = false;
                    break;
                }
            };
        }
        if enumerable {
            for d in 1..=half {
                // All monic polynomials of degree d: low coefficients count in
                // base p.
                let total = p.pow(d as u32);
                for idx in 0..total {
                    let mut coeffs = Vec::with_capacity(d + 1);
                    let mut v = idx;
                    for _ in 0..d {
                        coeffs.push(v % p);
                        v /= p;
                    }
                    coeffs.push(1);
                    let cand = UPoly { coeffs };
                    if self.rem(&cand, p)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        } else {
            // Rabin test. x^(p^j) mod f computed by iterating the p-th power.
            let x = UPoly::x();
            let mut frob = vec![x.rem(self, p)?]; // frob[j] = x^(p^j) mod f
            for _ in 0..k {
                let next = frob.last().unwrap().pow_mod(p, self, p)?;
                frob.push(next);
            }
            if frob[k].sub(&x, p).rem(self, p)?.is_zero() {
                for l in prime_divisors(k as u64) {
                    let j = k / l as usize;
                    let g = frob[j].sub(&x, p).gcd(self, p)?;
                    if !g.is_one() {
                        return Ok(false);
                    }
                }
                Ok(true)
            } else {
                Ok(false)
            }
        }
    }

    /// Render in the given symbol, descending powers, `*` between factors.
    pub fn format(&self, symbol: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (c, i) {
                (_, 0) => format!("{c}"),
                (1, 1) => symbol.to_string(),
                (1, _) => format!("{symbol}^{i}"),
                (_, 1) => format!("{c}*{symbol}"),
                (_, _) => format!("{c}*{symbol}^{i}"),
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// Distinct prime divisors of `n`.
fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// Trial-division primality check for moduli up to `2^31`.
pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
