//! Finite-field tower arithmetic.
//!
//! A [`FieldCtx`] is the field `F_{p^d} = Z_p[X]/(m(X))` together with a
//! primitive generator and an optional tower declaration
//! `F_q ⊆ F_{q^t} ⊆ F_{q^n}` with `q = p^e`, `n = t·t'` and `e·n = d`.
//!
//! Elements are stored packed: the prime-field coordinates `c_0 + c_1 X + …`
//! become the integer `Σ c_i p^i`. Multiplication, inversion and Frobenius
//! go through log/antilog tables, which also provide the canonical `g^k`
//! text form. Subfields are never separate contexts: `F_{q^m}` is the set of
//! elements fixed by `x ↦ x^{q^m}`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{gcd, is_prime, prime_factors};
use crate::linalg;

/// Largest field order a context may have.
pub const MAX_FIELD_SIZE: u64 = 1 << 23;

const NO_LOG: u32 = u32::MAX;

static NEXT_CTX_ID: AtomicU32 = AtomicU32::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus is reducible over Z_p")]
    ReducibleModulus,
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("no primitive generator found")]
    NoGeneratorFound,
    #[error("field order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("elements belong to different field contexts")]
    CtxMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{m} does not divide {n}")]
    NotDivisor { m: u32, n: u32 },
    #[error("element is not in the required subfield")]
    NotInSubfield,
    #[error("expected {expected} elements, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("not a subfield: {0}")]
    NotSubfield(String),
    #[error("no root of the small modulus found in the big field")]
    NoRootFound,
    #[error("invalid tower: {0}")]
    BadTower(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = GfError> = std::result::Result<T, E>;

/// Tower parameters `q = p^e`, `n = t·t'` inside a context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tower {
    pub q: u32,
    pub e: u32,
    pub t: u32,
    pub t_prime: u32,
    pub n: u32,
}

/// A field element bound to the context that created it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FElem {
    ctx: u32,
    raw: u32,
}

impl FElem {
    /// Packed prime-field coordinates `Σ c_i p^i`.
    pub fn raw(self) -> u32 {
        self.raw
    }

    pub fn ctx_id(self) -> u32 {
        self.ctx
    }

    pub fn is_zero(self) -> bool {
        self.raw == 0
    }
}

struct Tables {
    id: u32,
    p: u32,
    d: u32,
    size: u32,
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[k] = g^k`, doubled so that sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`; empty in characteristic 2.
    zech: Vec<u32>,
    /// `p^h mod (size - 1)` for `h < d`.
    ppow_mod: Vec<u64>,
}

/// An immutable finite field with a fixed modulus and generator.
#[derive(Clone)]
pub struct FieldCtx {
    tables: Arc<Tables>,
    tower: Option<Tower>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.tables.p)
            .field("d", &self.tables.d)
            .field("modulus", &self.tables.modulus)
            .field("tower", &self.tower)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.tables.id == other.tables.id && self.tower == other.tower
    }
}

impl Eq for FieldCtx {}

// ---------------------------------------------------------------------------
// Polynomials over Z_p, used only while building a context.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn zp_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = zp_inv(f[df], p) as u64;
    while r.len() > df && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] as u64 * lead_inv % p as u64;
        if c != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = dr - df + i;
                let sub = c * fc as u64 % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        r = trim(r);
        if r.len() <= df {
            break;
        }
    }
    trim(r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn poly_mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

fn poly_powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = *a.get(i).unwrap_or(&0);
            let y = *b.get(i).unwrap_or(&0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a monic polynomial by `gcd(X^{p^i} − X, f) = 1` for `i ≤ d/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = poly_powmod(&h, p as u64, f, p);
        let g = poly_gcd(f, &poly_sub(&h, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn unpack(raw: u32, p: u32, d: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(d as usize);
    let mut r = raw;
    for _ in 0..d {
        v.push(r % p);
        r /= p;
    }
    v
}

fn pack(coords: &[u32], p: u32) -> u32 {
    coords.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

fn digit_add(a: u32, b: u32, p: u32, d: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0u32;
    let mut scale = 1u32;
    let (mut x, mut y) = (a, b);
    for _ in 0..d {
        out += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

// ---------------------------------------------------------------------------

impl FieldCtx {
    /// Builds `F_{p^d}`. Without a modulus, the first monic irreducible of
    /// degree `d` in increasing packed order is used; the generator is the
    /// first primitive element in increasing packed order.
    pub fn make_field(p: u64, d: u32, modulus: Option<&[u32]>) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        if d == 0 {
            return Err(GfError::BadModulus("degree must be positive".into()));
        }
        let size = (p as u128).pow(d);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(GfError::TooLarge(size.min(u64::MAX as u128) as u64));
        }
        let p = p as u32;
        let size = size as u32;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != d as usize + 1 || m[d as usize] != 1 {
                    return Err(GfError::BadModulus(format!(
                        "expected a monic polynomial of degree {d}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(GfError::BadModulus("coefficient not reduced mod p".into()));
                }
                if !is_irreducible(m, p) {
                    return Err(GfError::ReducibleModulus);
                }
                m.to_vec()
            }
            None => Self::first_irreducible(p, d),
        };

        let order = size as u64 - 1;
        let factors = prime_factors(order);
        let generator = (1..size)
            .find(|&cand| {
                let c = unpack(cand, p, d);
                factors.iter().all(|&r| {
                    let v = poly_powmod(&c, order / r, &modulus, p);
                    !(v.len() == 1 && v[0] == 1)
                }) && order > 0
            })
            .or(if size == 2 { Some(1) } else { None })
            .ok_or(GfError::NoGeneratorFound)?;

        let n1 = (size - 1) as usize;
        let mut exp = vec![0u32; 2 * n1];
        let mut log = vec![NO_LOG; size as usize];
        let gen_poly = unpack(generator, p, d);
        let mut cur = vec![1u32];
        for k in 0..n1 {
            let mut coords = cur.clone();
            coords.resize(d as usize, 0);
            let raw = pack(&coords, p);
            if log[raw as usize] != NO_LOG {
                return Err(GfError::NoGeneratorFound);
            }
            exp[k] = raw;
            exp[k + n1] = raw;
            log[raw as usize] = k as u32;
            cur = poly_mulmod(&cur, &gen_poly, &modulus, p);
        }

        let zech = if p == 2 {
            Vec::new()
        } else {
            (0..n1)
                .map(|k| {
                    let s = digit_add(1, exp[k], p, d);
                    if s == 0 {
                        NO_LOG
                    } else {
                        log[s as usize]
                    }
                })
                .collect()
        };

        let ppow_mod = (0..d)
            .map(|h| {
                let m = n1 as u64;
                (0..h).fold(1u64 % m.max(1), |acc, _| acc * p as u64 % m.max(1))
            })
            .collect();

        let tables = Tables {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            p,
            d,
            size,
            modulus,
            generator,
            exp,
            log,
            zech,
            ppow_mod,
        };
        Ok(FieldCtx { tables: Arc::new(tables), tower: None })
    }

    fn first_irreducible(p: u32, d: u32) -> Vec<u32> {
        let count = p.pow(d);
        (0..count)
            .map(|low| {
                let mut m = unpack(low, p, d);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree")
    }

    /// Declares the tower `q = p^e`, `n = t·t'` with `e·n = d`.
    pub fn with_tower(&self, q: u64, t: u32, t_prime: u32) -> Result<FieldCtx> {
        let (qp, e) = crate::arith::prime_power(q)
            .ok_or_else(|| GfError::BadTower(format!("{q} is not a prime power")))?;
        if qp != self.tables.p as u64 {
            return Err(GfError::BadTower(format!(
                "q = {q} is not a power of p = {}",
                self.tables.p
            )));
        }
        if t == 0 || t_prime == 0 {
            return Err(GfError::BadTower("t and t' must be positive".into()));
        }
        let n = t * t_prime;
        if e * n != self.tables.d {
            return Err(GfError::BadTower(format!(
                "e·t·t' = {} does not match degree {}",
                e * n,
                self.tables.d
            )));
        }
        Ok(FieldCtx {
            tables: self.tables.clone(),
            tower: Some(Tower { q: q as u32, e, t, t_prime, n }),
        })
    }

    /// Convenience: `F_{q^{t·t'}}` with its tower declared.
    pub fn tower_field(q: u64, t: u32, t_prime: u32) -> Result<FieldCtx> {
        let (p, e) = crate::arith::prime_power(q)
            .ok_or_else(|| GfError::BadTower(format!("{q} is not a prime power")))?;
        FieldCtx::make_field(p, e * t * t_prime, None)?.with_tower(q, t, t_prime)
    }

    pub fn id(&self) -> u32 {
        self.tables.id
    }

    pub fn p(&self) -> u32 {
        self.tables.p
    }

    pub fn d(&self) -> u32 {
        self.tables.d
    }

    /// Field order `p^d`.
    pub fn size(&self) -> u32 {
        self.tables.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    pub fn tower(&self) -> Option<Tower> {
        self.tower
    }

    /// The tower `q`, or `p` when no tower is declared.
    pub fn q(&self) -> u32 {
        self.tower.map_or(self.tables.p, |t| t.q)
    }

    fn e(&self) -> u32 {
        self.tower.map_or(1, |t| t.e)
    }

    /// Degree of the field over `F_q`.
    pub fn n(&self) -> u32 {
        self.tables.d / self.e()
    }

    pub fn same_field(&self, other: &FieldCtx) -> bool {
        self.tables.id == other.tables.id
    }

    // -- element construction ------------------------------------------------

    pub(crate) fn wrap(&self, raw: u32) -> FElem {
        FElem { ctx: self.tables.id, raw }
    }

    pub fn zero(&self) -> FElem {
        self.wrap(0)
    }

    pub fn one(&self) -> FElem {
        self.wrap(1)
    }

    /// The integer `c` viewed in the prime field.
    pub fn from_int(&self, c: i64) -> FElem {
        let p = self.tables.p as i64;
        self.wrap(c.rem_euclid(p) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FElem> {
        if coords.len() != self.tables.d as usize {
            return Err(GfError::WrongLength { expected: self.tables.d as usize, got: coords.len() });
        }
        if coords.iter().any(|&c| c >= self.tables.p) {
            return Err(GfError::Parse("coordinate not reduced mod p".into()));
        }
        Ok(self.wrap(pack(coords, self.tables.p)))
    }

    pub fn from_raw(&self, raw: u32) -> Result<FElem> {
        if raw >= self.tables.size {
            return Err(GfError::Parse(format!("raw value {raw} out of range")));
        }
        Ok(self.wrap(raw))
    }

    pub fn coords(&self, x: FElem) -> Vec<u32> {
        unpack(x.raw, self.tables.p, self.tables.d)
    }

    /// `g^k` for the context generator `g`.
    pub fn gen_pow(&self, k: u64) -> FElem {
        let n1 = self.tables.size as u64 - 1;
        self.wrap(self.tables.exp[(k % n1) as usize])
    }

    /// Discrete logarithm to the base of the generator.
    pub fn log(&self, x: FElem) -> Option<u32> {
        if x.raw == 0 {
            None
        } else {
            Some(self.tables.log[x.raw as usize])
        }
    }

    /// Position in generator-power order: `0` first, then `g^0, g^1, …`.
    pub fn order_key(&self, x: FElem) -> u32 {
        self.log(x).map_or(0, |k| k + 1)
    }

    pub fn primitive_element(&self) -> FElem {
        self.wrap(self.tables.generator)
    }

    /// All elements in generator-power order.
    pub fn elements(&self) -> impl Iterator<Item = FElem> + '_ {
        std::iter::once(self.zero()).chain(self.nonzero())
    }

    /// Nonzero elements `g^0, g^1, …`.
    pub fn nonzero(&self) -> impl Iterator<Item = FElem> + '_ {
        let n1 = self.tables.size as usize - 1;
        self.tables.exp[..n1].iter().map(move |&r| self.wrap(r))
    }

    /// Elements of `F_{q^m}` in generator-power order.
    pub fn subfield_elements(&self, m: u32) -> Result<Vec<FElem>> {
        self.check_divides(m, self.n())?;
        let step = self.subfield_step(m);
        let count = (self.tables.size as u64 - 1) / step;
        let mut out = vec![self.zero()];
        out.extend((0..count).map(|k| self.gen_pow(k * step)));
        Ok(out)
    }

    /// `(p^d − 1)/(q^m − 1)`, the log step generating `F_{q^m}^*`.
    pub(crate) fn subfield_step(&self, m: u32) -> u64 {
        let sub = (self.q() as u64).pow(m) - 1;
        (self.tables.size as u64 - 1) / sub
    }

    pub fn check(&self, x: FElem) -> Result<FElem> {
        if x.ctx == self.tables.id {
            Ok(x)
        } else {
            Err(GfError::CtxMismatch)
        }
    }

    fn check_divides(&self, m: u32, n: u32) -> Result<()> {
        if m == 0 || !n.is_multiple_of(m) {
            Err(GfError::NotDivisor { m, n })
        } else {
            Ok(())
        }
    }

    // -- raw arithmetic ------------------------------------------------------

    #[inline]
    pub(crate) fn raw_add(&self, a: u32, b: u32) -> u32 {
        let t = &*self.tables;
        if t.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let n1 = t.size - 1;
        let la = t.log[a as usize];
        let lb = t.log[b as usize];
        let (lo, hi) = if la <= lb { (la, lb) } else { (lb, la) };
        let z = t.zech[(hi - lo) as usize];
        if z == NO_LOG {
            0
        } else {
            t.exp[((lo + z) % n1) as usize]
        }
    }

    #[inline]
    pub(crate) fn raw_neg(&self, a: u32) -> u32 {
        let t = &*self.tables;
        if t.p == 2 || a == 0 {
            return a;
        }
        let half = (t.size - 1) / 2;
        t.exp[(t.log[a as usize] + half) as usize]
    }

    #[inline]
    pub(crate) fn raw_sub(&self, a: u32, b: u32) -> u32 {
        self.raw_add(a, self.raw_neg(b))
    }

    #[inline]
    pub(crate) fn raw_mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.tables;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    #[inline]
    pub(crate) fn raw_inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let t = &*self.tables;
        let n1 = t.size - 1;
        t.exp[((n1 - t.log[a as usize]) % n1) as usize]
    }

    #[inline]
    pub(crate) fn raw_div(&self, a: u32, b: u32) -> u32 {
        self.raw_mul(a, self.raw_inv(b))
    }

    pub(crate) fn raw_pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.tables;
        let n1 = t.size as u64 - 1;
        let k = (t.log[a as usize] as u64 * (e % n1)) % n1;
        t.exp[k as usize]
    }

    /// `p^h mod (p^d − 1)` multiplier for `x ↦ x^{p^h}` in log space.
    #[inline]
    pub(crate) fn frob_multiplier(&self, h: u32) -> u64 {
        self.tables.ppow_mod[(h % self.tables.d) as usize]
    }

    /// `x^{p^h}` given the multiplier from [`Self::frob_multiplier`].
    #[inline]
    pub(crate) fn raw_frob_mult(&self, a: u32, mult: u64) -> u32 {
        if a == 0 {
            return 0;
        }
        let t = &*self.tables;
        let n1 = t.size as u64 - 1;
        t.exp[((t.log[a as usize] as u64 * mult) % n1) as usize]
    }

    /// `x^{q^i}` for the tower `q`.
    #[inline]
    pub(crate) fn raw_frob_q(&self, a: u32, i: u32) -> u32 {
        let h = (self.e() as u64 * i as u64 % self.tables.d as u64) as u32;
        self.raw_frob_mult(a, self.frob_multiplier(h))
    }

    #[inline]
    pub(crate) fn raw_log(&self, a: u32) -> u32 {
        self.tables.log[a as usize]
    }

    #[inline]
    pub(crate) fn raw_exp(&self, k: u64) -> u32 {
        let n1 = self.tables.size as u64 - 1;
        self.tables.exp[(k % n1) as usize]
    }

    // -- checked element arithmetic -----------------------------------------

    pub fn try_add(&self, a: FElem, b: FElem) -> Result<FElem> {
        Ok(self.wrap(self.raw_add(self.check(a)?.raw, self.check(b)?.raw)))
    }

    pub fn try_sub(&self, a: FElem, b: FElem) -> Result<FElem> {
        Ok(self.wrap(self.raw_sub(self.check(a)?.raw, self.check(b)?.raw)))
    }

    pub fn try_mul(&self, a: FElem, b: FElem) -> Result<FElem> {
        Ok(self.wrap(self.raw_mul(self.check(a)?.raw, self.check(b)?.raw)))
    }

    pub fn try_neg(&self, a: FElem) -> Result<FElem> {
        Ok(self.wrap(self.raw_neg(self.check(a)?.raw)))
    }

    pub fn inv(&self, a: FElem) -> Result<FElem> {
        let a = self.check(a)?;
        if a.raw == 0 {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.wrap(self.raw_inv(a.raw)))
    }

    pub fn div(&self, a: FElem, b: FElem) -> Result<FElem> {
        let b = self.inv(b)?;
        self.try_mul(a, b)
    }

    pub fn try_pow(&self, a: FElem, e: u64) -> Result<FElem> {
        Ok(self.wrap(self.raw_pow(self.check(a)?.raw, e)))
    }

    // Panicking shorthands for elements already known to belong to `self`.

    pub fn add(&self, a: FElem, b: FElem) -> FElem {
        self.try_add(a, b).expect("element context mismatch")
    }

    pub fn sub(&self, a: FElem, b: FElem) -> FElem {
        self.try_sub(a, b).expect("element context mismatch")
    }

    pub fn mul(&self, a: FElem, b: FElem) -> FElem {
        self.try_mul(a, b).expect("element context mismatch")
    }

    pub fn neg(&self, a: FElem) -> FElem {
        self.try_neg(a).expect("element context mismatch")
    }

    pub fn pow(&self, a: FElem, e: u64) -> FElem {
        self.try_pow(a, e).expect("element context mismatch")
    }

    // -- Frobenius, norm, trace ---------------------------------------------

    /// `x^{q^i}` for an explicit subfield order `q = p^e` with `e | d`.
    pub fn frobenius(&self, x: FElem, i: u64, q: u64) -> Result<FElem> {
        let x = self.check(x)?;
        let (qp, e) = crate::arith::prime_power(q)
            .ok_or_else(|| GfError::NotSubfield(format!("{q} is not a prime power")))?;
        if qp != self.tables.p as u64 || !self.tables.d.is_multiple_of(e) {
            return Err(GfError::NotSubfield(format!(
                "F_{q} is not a subfield of F_{}^{}",
                self.tables.p, self.tables.d
            )));
        }
        let h = ((e as u64 * (i % self.tables.d as u64)) % self.tables.d as u64) as u32;
        Ok(self.wrap(self.raw_frob_mult(x.raw, self.frob_multiplier(h))))
    }

    /// `x^{q^i}` for the context's tower `q`.
    pub fn frob_q(&self, x: FElem, i: u32) -> FElem {
        self.wrap(self.raw_frob_q(self.check(x).expect("element context mismatch").raw, i))
    }

    pub fn in_subfield(&self, x: FElem, m: u32) -> Result<bool> {
        let x = self.check(x)?;
        self.check_divides(m, self.n())?;
        Ok(self.raw_frob_q(x.raw, m) == x.raw)
    }

    /// `N_{q^n/q^m}(x) = x^{(q^n−1)/(q^m−1)}`.
    pub fn rel_norm(&self, x: FElem, n: u32, m: u32) -> Result<FElem> {
        let x = self.check(x)?;
        self.check_divides(n, self.n())?;
        self.check_divides(m, n)?;
        if !self.in_subfield(x, n)? {
            return Err(GfError::NotInSubfield);
        }
        let n1 = self.tables.size as u64 - 1;
        let q = self.q() as u64;
        let qm = crate::arith::checked_pow(q, m).expect("q^m fits");
        let mut exp = 0u64;
        let mut term = 1u64 % n1.max(1);
        for _ in 0..(n / m) {
            exp = (exp + term) % n1.max(1);
            term = (term as u128 * qm as u128 % n1.max(1) as u128) as u64;
        }
        let r = self.wrap(if x.raw == 0 { 0 } else { self.raw_pow(x.raw, exp.max(if n1 == 1 { 1 } else { 0 })) });
        debug_assert!(self.in_subfield(r, m).unwrap());
        Ok(r)
    }

    /// `Tr_{q^n/q^m}(x) = Σ_{i<n/m} x^{q^{mi}}`.
    pub fn rel_trace(&self, x: FElem, n: u32, m: u32) -> Result<FElem> {
        let x = self.check(x)?;
        self.check_divides(n, self.n())?;
        self.check_divides(m, n)?;
        if !self.in_subfield(x, n)? {
            return Err(GfError::NotInSubfield);
        }
        let mut acc = 0;
        for i in 0..(n / m) {
            acc = self.raw_add(acc, self.raw_frob_q(x.raw, m * i));
        }
        let r = self.wrap(acc);
        debug_assert!(self.in_subfield(r, m).unwrap());
        Ok(r)
    }

    /// Linear independence over `F_{q^m}` via the Moore determinant
    /// `det(x_i^{q^{m j}})`.
    pub fn is_basis_over(&self, elems: &[FElem], m: u32) -> Result<bool> {
        self.check_divides(m, self.n())?;
        let k = (self.n() / m) as usize;
        if elems.len() != k {
            return Err(GfError::WrongLength { expected: k, got: elems.len() });
        }
        let mut rows = Vec::with_capacity(k);
        for &x in elems {
            let x = self.check(x)?;
            rows.push((0..k as u32).map(|j| self.raw_frob_q(x.raw, m * j)).collect::<Vec<_>>());
        }
        Ok(linalg::det(self, rows) != 0)
    }

    // -- text forms ----------------------------------------------------------

    /// Canonical text: `0` or `g^k`.
    pub fn fmt_elem(&self, x: FElem) -> String {
        match self.log(x) {
            None => "0".to_string(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// Coordinate text `[c0,c1,…]`, low degree first.
    pub fn fmt_coords(&self, x: FElem) -> String {
        let c: Vec<String> = self.coords(x).iter().map(|c| c.to_string()).collect();
        format!("[{}]", c.join(","))
    }

    /// Parses `0`, `1`, `g`, `g^k` or `[c0,c1,…]`.
    pub fn parse_elem(&self, s: &str) -> Result<FElem> {
        let s = s.trim();
        if s == "0" {
            return Ok(self.zero());
        }
        if s == "1" {
            return Ok(self.one());
        }
        if s == "g" {
            return Ok(self.primitive_element());
        }
        if let Some(k) = s.strip_prefix("g^") {
            let k: u64 = k.trim().parse().map_err(|_| GfError::Parse(format!("bad exponent in {s:?}")))?;
            return Ok(self.gen_pow(k));
        }
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let coords = body
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| GfError::Parse(format!("bad coordinate in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coords(&coords);
        }
        Err(GfError::Parse(format!("unrecognized element {s:?}")))
    }
}

/// A field given as text: `p^d` or `p^d/c0,c1,…` (modulus coefficients, low
/// degree first; the leading 1 may be omitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub d: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        FieldCtx::make_field(self.p, self.d, self.modulus.as_deref())
    }
}

impl FromStr for FieldSpec {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self> {
        let (head, modulus) = match s.split_once('/') {
            Some((h, m)) => (h, Some(m)),
            None => (s, None),
        };
        let (p, d) = head
            .split_once('^')
            .ok_or_else(|| GfError::Parse(format!("field spec {s:?} is not p^d")))?;
        let p: u64 = p.trim().parse().map_err(|_| GfError::Parse(format!("bad prime in {s:?}")))?;
        let d: u32 = d.trim().parse().map_err(|_| GfError::Parse(format!("bad degree in {s:?}")))?;
        let modulus = match modulus {
            None => None,
            Some(m) => {
                let mut c = m
                    .split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| GfError::Parse(format!("bad modulus in {s:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                if c.len() == d as usize {
                    c.push(1);
                }
                Some(c)
            }
        };
        Ok(FieldSpec { p, d, modulus })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.d)?;
        if let Some(m) = &self.modulus {
            let c: Vec<String> = m.iter().map(|c| c.to_string()).collect();
            write!(f, "/{}", c.join(","))?;
        }
        Ok(())
    }
}

/// Ring embedding `F_{p^a} → F_{p^b}` (`a | b`), sending the class of `X`
/// to the first root of the small modulus in generator-power order.
#[derive(Clone)]
pub struct Embedding {
    small: FieldCtx,
    big: FieldCtx,
    table: Vec<u32>,
}

impl Embedding {
    pub fn build(small: &FieldCtx, big: &FieldCtx) -> Result<Embedding> {
        if small.p() != big.p() || !big.d().is_multiple_of(small.d()) {
            return Err(GfError::NotSubfield(format!(
                "F_{}^{} does not embed in F_{}^{}",
                small.p(),
                small.d(),
                big.p(),
                big.d()
            )));
        }
        if small.same_field(big) || (small.d() == big.d() && small.modulus() == big.modulus()) {
            let table = (0..small.size()).collect();
            return Ok(Embedding { small: small.clone(), big: big.clone(), table });
        }
        let modulus = small.modulus();
        let eval = |r: u32| {
            modulus
                .iter()
                .rev()
                .fold(0u32, |acc, &c| big.raw_add(big.raw_mul(acc, r), c))
        };
        let root = big
            .elements()
            .map(|x| x.raw)
            .find(|&r| eval(r) == 0)
            .ok_or(GfError::NoRootFound)?;
        let d = small.d();
        let powers: Vec<u32> = (0..d).map(|i| big.raw_pow(root, i as u64)).collect();
        let table: Vec<u32> = (0..small.size())
            .map(|raw| {
                unpack(raw, small.p(), d)
                    .iter()
                    .zip(&powers)
                    .fold(0u32, |acc, (&c, &pw)| big.raw_add(acc, big.raw_mul(c, pw)))
            })
            .collect();
        let emb = Embedding { small: small.clone(), big: big.clone(), table };
        // Homomorphism spot checks on the generator and X.
        let g = small.primitive_element();
        let x = small.wrap(if d > 1 { small.p() } else { small.generator_raw() });
        for (a, b) in [(g, g), (g, x), (x, x)] {
            let lhs = emb.apply(small.mul(a, b))?;
            let rhs = big.mul(emb.apply(a)?, emb.apply(b)?);
            if lhs != rhs {
                return Err(GfError::NoRootFound);
            }
        }
        Ok(emb)
    }

    pub fn apply(&self, x: FElem) -> Result<FElem> {
        let x = self.small.check(x)?;
        Ok(self.big.wrap(self.table[x.raw as usize]))
    }

    pub fn small(&self) -> &FieldCtx {
        &self.small
    }

    pub fn big(&self) -> &FieldCtx {
        &self.big
    }
}

impl FieldCtx {
    fn generator_raw(&self) -> u32 {
        self.tables.generator
    }
}

/// Coordinates of `F_{q^n}` over a subfield `F_{q^m}` with respect to the
/// basis `1, g, …, g^{k−1}` (`k = n/m`), computed through the trace-dual
/// basis so that every coordinate lies in `F_{q^m}`.
#[derive(Clone)]
pub struct SubfieldCoords {
    ctx: FieldCtx,
    m: u32,
    basis: Vec<u32>,
    dual: Vec<u32>,
}

impl SubfieldCoords {
    pub fn new(ctx: &FieldCtx, m: u32) -> Result<SubfieldCoords> {
        ctx.check_divides(m, ctx.n())?;
        let n = ctx.n();
        let k = (n / m) as usize;
        let g = ctx.generator_raw();
        let basis: Vec<u32> = (0..k).map(|j| ctx.raw_pow(g, j as u64)).collect();
        let trace = |x: u32| {
            (0..(n / m)).fold(0u32, |acc, i| ctx.raw_add(acc, ctx.raw_frob_q(x, m * i)))
        };
        let gram: Vec<Vec<u32>> = (0..k)
            .map(|i| (0..k).map(|j| trace(ctx.raw_mul(basis[i], basis[j]))).collect())
            .collect();
        let inv = linalg::inverse(ctx, gram).ok_or_else(|| {
            GfError::NotSubfield("power basis is degenerate over the subfield".into())
        })?;
        let dual = (0..k)
            .map(|j| {
                (0..k).fold(0u32, |acc, l| ctx.raw_add(acc, ctx.raw_mul(inv[l][j], basis[l])))
            })
            .collect();
        Ok(SubfieldCoords { ctx: ctx.clone(), m, basis, dual })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn subfield_degree(&self) -> u32 {
        self.m
    }

    pub(crate) fn raw_coords(&self, x: u32, out: &mut Vec<u32>) {
        let n = self.ctx.n();
        for &b in &self.dual {
            let y = self.ctx.raw_mul(x, b);
            let c = (0..(n / self.m))
                .fold(0u32, |acc, i| self.ctx.raw_add(acc, self.ctx.raw_frob_q(y, self.m * i)));
            out.push(c);
        }
    }

    pub fn coords(&self, x: FElem) -> Result<Vec<FElem>> {
        let x = self.ctx.check(x)?;
        let mut out = Vec::with_capacity(self.dim());
        self.raw_coords(x.raw, &mut out);
        Ok(out.into_iter().map(|c| self.ctx.wrap(c)).collect())
    }

    pub fn basis(&self) -> Vec<FElem> {
        self.basis.iter().map(|&b| self.ctx.wrap(b)).collect()
    }
}

/// `gcd` re-exported for callers working with tower exponents.
pub fn gcd_u32(a: u32, b: u32) -> u32 {
    gcd(a as u64, b as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldCtx {
        FieldCtx::make_field(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn f16() -> FieldCtx {
        FieldCtx::make_field(2, 4, None).unwrap().with_tower(2, 2, 2).unwrap()
    }

    #[test]
    fn f4_generator_relations() {
        let k = f4();
        let g = k.primitive_element();
        assert_eq!(k.mul(g, g), k.add(g, k.one()));
        assert_eq!(k.inv(g).unwrap(), k.add(g, k.one()));
        assert_eq!(k.pow(g, 0), k.one());
    }

    #[test]
    fn f16_modulus_is_first_irreducible() {
        // Brute force: the first degree-4 monic polynomial over Z_2 in
        // increasing packed order with no roots and no quadratic factor.
        let mut first = None;
        'outer: for low in 0u32..16 {
            let f: Vec<u32> = (0..4).map(|i| (low >> i) & 1).chain([1]).collect();
            // no roots
            let ev = |x: u32| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % 2);
            if ev(0) == 0 || ev(1) == 0 {
                continue;
            }
            // not divisible by x^2+x+1
            let prod = poly_mul(&[1, 1, 1], &[1, 1, 1], 2);
            if prod == f {
                continue 'outer;
            }
            first = Some(f);
            break;
        }
        assert_eq!(first.unwrap(), vec![1, 1, 0, 0, 1]);
        assert_eq!(f16().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(FieldCtx::make_field(4, 2, None).unwrap_err(), GfError::NonPrime(4));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(
            FieldCtx::make_field(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            GfError::ReducibleModulus
        );
    }

    #[test]
    fn frobenius_examples() {
        let k = f4();
        let g = k.primitive_element();
        assert_eq!(k.frobenius(g, 0, 2).unwrap(), g);
        assert_eq!(k.frobenius(g, 1, 2).unwrap(), k.add(g, k.one()));
        let k16 = f16();
        for x in k16.elements() {
            assert_eq!(k16.frobenius(x, 4, 2).unwrap(), x);
        }
    }

    #[test]
    fn norm_and_trace_examples() {
        let k = f4();
        let g = k.primitive_element();
        assert_eq!(k.rel_norm(g, 2, 1).unwrap(), k.one());
        assert_eq!(k.rel_trace(g, 2, 1).unwrap(), k.one());
        for x in k.elements() {
            assert_eq!(k.rel_norm(x, 2, 2).unwrap(), x);
            assert_eq!(k.rel_trace(x, 2, 2).unwrap(), x);
        }
        let k16 = f16();
        for x in k16.elements() {
            let n = k16.rel_norm(x, 4, 2).unwrap();
            assert_eq!(n, k16.pow(x, 5));
            assert!(k16.in_subfield(n, 2).unwrap());
        }
    }

    #[test]
    fn trace_of_subfield_element_is_multiple() {
        let k = FieldCtx::make_field(3, 4, None).unwrap();
        for x in k.subfield_elements(2).unwrap() {
            let tr = k.rel_trace(x, 4, 2).unwrap();
            assert_eq!(tr, k.add(x, x));
        }
    }

    #[test]
    fn subfield_membership() {
        let k = f16();
        let g = k.primitive_element();
        assert!(k.in_subfield(k.one(), 1).unwrap());
        assert!(k.in_subfield(k.pow(g, 5), 2).unwrap());
        assert!(!k.in_subfield(g, 2).unwrap());
        assert_eq!(k.in_subfield(g, 3).unwrap_err(), GfError::NotDivisor { m: 3, n: 4 });
        assert_eq!(k.subfield_elements(2).unwrap().len(), 4);
    }

    #[test]
    fn basis_examples() {
        let k = f16();
        let g = k.primitive_element();
        assert!(k.is_basis_over(&[k.one(), g], 2).unwrap());
        assert!(!k.is_basis_over(&[k.one(), k.one()], 2).unwrap());
        let lam = k.pow(g, 5);
        assert!(!k.is_basis_over(&[g, k.mul(lam, g)], 2).unwrap());
        assert!(matches!(k.is_basis_over(&[g], 2), Err(GfError::WrongLength { .. })));
    }

    #[test]
    fn primitive_elements_have_full_order() {
        let k2 = FieldCtx::make_field(2, 1, None).unwrap();
        assert_eq!(k2.primitive_element(), k2.one());
        let k = f16();
        let g = k.primitive_element();
        assert_eq!(k.pow(g, 15), k.one());
        assert_ne!(k.pow(g, 3), k.one());
        assert_ne!(k.pow(g, 5), k.one());
    }

    #[test]
    fn ctx_mismatch_is_an_error() {
        let a = f4();
        let b = f16();
        assert_eq!(a.try_add(a.one(), b.one()).unwrap_err(), GfError::CtxMismatch);
        assert_eq!(a.inv(a.zero()).unwrap_err(), GfError::DivisionByZero);
    }

    #[test]
    fn embedding_f4_into_f16() {
        let small = f4();
        let big = f16();
        let emb = Embedding::build(&small, &big).unwrap();
        let x = emb.apply(small.wrap(2)).unwrap();
        // X^2 + X + 1 = 0
        let v = big.add(big.add(big.mul(x, x), x), big.one());
        assert!(v.is_zero());
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(emb.apply(small.add(a, b)).unwrap(), big.add(emb.apply(a).unwrap(), emb.apply(b).unwrap()));
                assert_eq!(emb.apply(small.mul(a, b)).unwrap(), big.mul(emb.apply(a).unwrap(), emb.apply(b).unwrap()));
            }
            // N_{4/2} commutes with the embedding.
            let n = small.rel_norm(a, 2, 1).unwrap();
            assert_eq!(emb.apply(n).unwrap(), big.pow(emb.apply(a).unwrap(), 3));
        }
        let id = Embedding::build(&small, &small).unwrap();
        for a in small.elements() {
            assert_eq!(id.apply(a).unwrap(), a);
        }
    }

    #[test]
    fn element_text_round_trip() {
        let k = f16();
        for x in k.elements() {
            assert_eq!(k.parse_elem(&k.fmt_elem(x)).unwrap(), x);
            assert_eq!(k.parse_elem(&k.fmt_coords(x)).unwrap(), x);
        }
        assert!(k.parse_elem("h^2").is_err());
    }

    #[test]
    fn field_spec_parsing() {
        let s: FieldSpec = "2^2/1,1,1".parse().unwrap();
        assert_eq!(s.modulus.as_deref(), Some(&[1, 1, 1][..]));
        let s: FieldSpec = "2^2/1,1".parse().unwrap();
        assert_eq!(s.modulus.as_deref(), Some(&[1, 1, 1][..]));
        let s: FieldSpec = "3^4".parse().unwrap();
        assert_eq!((s.p, s.d, s.modulus), (3, 4, None));
        assert!("3".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn subfield_coords_reconstruct() {
        let k = FieldCtx::make_field(2, 6, None).unwrap();
        for m in [1, 2, 3] {
            let sc = SubfieldCoords::new(&k, m).unwrap();
            let basis = sc.basis();
            for x in k.elements() {
                let c = sc.coords(x).unwrap();
                assert!(c.iter().all(|&ci| k.in_subfield(ci, m).unwrap()));
                let back = c.iter().zip(&basis).fold(k.zero(), |acc, (&ci, &b)| k.add(acc, k.mul(ci, b)));
                assert_eq!(back, x);
            }
        }
    }
}
