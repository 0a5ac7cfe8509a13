//! `F_q`-linearized polynomials `Σ a_i x^{q^i}` over `F_{q^n}`.

use std::fmt;

use thiserror::Error;

use crate::gf::{FElem, FieldCtx, GfError};
use crate::linalg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinPolyError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("field context has no tower declared")]
    NoTower,
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("coefficient at index {index} is not compatible with base exponent {m}")]
    BaseMismatch { index: usize, m: u32 },
    #[error("rho must be nonzero")]
    ZeroRho,
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error("index {index} out of range for n = {n}")]
    BadIndex { index: u32, n: u32 },
    #[error("polynomial is not invertible")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = LinPolyError> = std::result::Result<T, E>;

/// A linearized polynomial with dense coefficients `a_0, …, a_{n−1}`.
#[derive(Clone)]
pub struct LinPoly {
    ctx: FieldCtx,
    coeffs: Vec<FElem>,
    base_exp: u32,
    /// Nonzero terms as `(log a_i, p-power multiplier of q^i)`.
    terms: Vec<(u32, u64)>,
}

impl PartialEq for LinPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl Eq for LinPoly {}

impl fmt::Debug for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinPoly({})", self.to_text())
    }
}

impl fmt::Display for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl LinPoly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<FElem>) -> Result<LinPoly> {
        let n = ctx.tower().ok_or(LinPolyError::NoTower)?.n as usize;
        if coeffs.len() != n {
            return Err(LinPolyError::WrongLength { expected: n, got: coeffs.len() });
        }
        for &c in &coeffs {
            ctx.check(c)?;
        }
        Ok(Self::build(ctx, coeffs, 1))
    }

    fn build(ctx: &FieldCtx, coeffs: Vec<FElem>, base_exp: u32) -> LinPoly {
        let e = ctx.tower().map_or(1, |t| t.e);
        let d = ctx.d();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let h = ((e as u64 * i as u64) % d as u64) as u32;
                (ctx.raw_log(c.raw()), ctx.frob_multiplier(h))
            })
            .collect();
        LinPoly { ctx: ctx.clone(), coeffs, base_exp, terms }
    }

    /// Builds from `(exponent, coefficient)` terms; exponents are reduced mod `n`
    /// and repeated exponents accumulate.
    pub fn from_terms(ctx: &FieldCtx, terms: &[(u32, FElem)]) -> Result<LinPoly> {
        let n = ctx.tower().ok_or(LinPolyError::NoTower)?.n;
        let mut coeffs = vec![ctx.zero(); n as usize];
        for &(i, c) in terms {
            let c = ctx.check(c)?;
            let slot = &mut coeffs[(i % n) as usize];
            *slot = ctx.add(*slot, c);
        }
        Ok(Self::build(ctx, coeffs, 1))
    }

    pub fn zero(ctx: &FieldCtx) -> Result<LinPoly> {
        Self::from_terms(ctx, &[])
    }

    pub fn identity(ctx: &FieldCtx) -> Result<LinPoly> {
        Self::from_terms(ctx, &[(0, ctx.one())])
    }

    /// `c · x^{q^i}`.
    pub fn monomial(ctx: &FieldCtx, i: u32, c: FElem) -> Result<LinPoly> {
        Self::from_terms(ctx, &[(i, c)])
    }

    /// Declares the polynomial `F_{q^m}`-linearized.
    pub fn with_base_exp(mut self, m: u32) -> Result<LinPoly> {
        let n = self.n();
        if m == 0 || !n.is_multiple_of(m) {
            return Err(GfError::NotDivisor { m, n }.into());
        }
        if let Some(index) = self.support().find(|&i| !(i as u32).is_multiple_of(m)) {
            return Err(LinPolyError::BaseMismatch { index, m });
        }
        self.base_exp = m;
        Ok(self)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn n(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn base_exp(&self) -> u32 {
        self.base_exp
    }

    pub fn coeffs(&self) -> &[FElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: u32) -> FElem {
        self.coeffs[(i % self.n()) as usize]
    }

    /// Indices with nonzero coefficient, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest index with a nonzero coefficient.
    pub fn q_degree(&self) -> Option<u32> {
        self.support().last().map(|i| i as u32)
    }

    /// Smallest index with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<u32> {
        self.support().next().map(|i| i as u32)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    #[inline]
    pub(crate) fn eval_raw(&self, x: u32) -> u32 {
        if x == 0 {
            return 0;
        }
        let ctx = &self.ctx;
        let n1 = ctx.size() as u64 - 1;
        let lx = ctx.raw_log(x) as u64;
        let mut acc = 0;
        for &(la, mult) in &self.terms {
            let k = la as u64 + lx * mult % n1;
            acc = ctx.raw_add(acc, ctx.raw_exp(k));
        }
        acc
    }

    pub fn eval(&self, x: FElem) -> Result<FElem> {
        let x = self.ctx.check(x)?;
        Ok(self.ctx.from_raw(self.eval_raw(x.raw()))?)
    }

    /// Coefficients of `f(h(x))` folded modulo `x^{q^n} − x`.
    pub fn compose(&self, h: &LinPoly) -> Result<LinPoly> {
        if !self.ctx.same_field(&h.ctx) || self.n() != h.n() {
            return Err(GfError::CtxMismatch.into());
        }
        let n = self.n() as usize;
        let ctx = &self.ctx;
        let mut out = vec![0u32; n];
        for i in self.support() {
            let a = self.coeffs[i].raw();
            for j in h.support() {
                let b = ctx.raw_frob_q(h.coeffs[j].raw(), i as u32);
                let slot = (i + j) % n;
                out[slot] = ctx.raw_add(out[slot], ctx.raw_mul(a, b));
            }
        }
        let coeffs = out.into_iter().map(|r| ctx.from_raw(r).unwrap()).collect();
        Ok(Self::build(ctx, coeffs, crate::gf::gcd_u32(self.base_exp, h.base_exp)))
    }

    /// `f̂ = Σ a_i^{q^{n−i}} x^{q^{n−i}}`.
    pub fn adjoint(&self) -> LinPoly {
        let n = self.n();
        let ctx = &self.ctx;
        let mut coeffs = vec![ctx.zero(); n as usize];
        for i in self.support() {
            let j = (n - i as u32) % n;
            coeffs[j as usize] = ctx.frob_q(self.coeffs[i], j);
        }
        Self::build(ctx, coeffs, self.base_exp)
    }

    /// `f_ρ(x) = f(ρx) − ρ f(x)`, with coefficients `a_i (ρ^{q^i} − ρ)`.
    pub fn f_rho(&self, rho: FElem) -> Result<LinPoly> {
        let rho = self.ctx.check(rho)?;
        if rho.is_zero() {
            return Err(LinPolyError::ZeroRho);
        }
        Ok(self.f_rho_unchecked(rho.raw()))
    }

    pub(crate) fn f_rho_unchecked(&self, rho: u32) -> LinPoly {
        let ctx = &self.ctx;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let diff = ctx.raw_sub(ctx.raw_frob_q(rho, i as u32), rho);
                ctx.wrap(ctx.raw_mul(a.raw(), diff))
            })
            .collect();
        Self::build(ctx, coeffs, self.base_exp)
    }

    /// `D[i][j] = a_{m·((j−i) mod k)}^{q^{m·i}}` with `k = n/m`.
    pub fn dickson_matrix(&self, m: u32) -> Result<Vec<Vec<FElem>>> {
        let raw = self.dickson_raw(m)?;
        Ok(raw
            .into_iter()
            .map(|row| row.into_iter().map(|r| self.ctx.wrap(r)).collect())
            .collect())
    }

    pub(crate) fn dickson_raw(&self, m: u32) -> Result<Vec<Vec<u32>>> {
        let n = self.n();
        if m == 0 || !n.is_multiple_of(m) {
            return Err(GfError::NotDivisor { m, n }.into());
        }
        if let Some(index) = self.support().find(|&i| !(i as u32).is_multiple_of(m)) {
            return Err(LinPolyError::BaseMismatch { index, m });
        }
        let k = (n / m) as usize;
        let ctx = &self.ctx;
        Ok((0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let idx = m as usize * ((j + k - i) % k);
                        ctx.raw_frob_q(self.coeffs[idx].raw(), m * i as u32)
                    })
                    .collect()
            })
            .collect())
    }

    /// Largest `m | n` for which the polynomial is `F_{q^m}`-linearized.
    pub fn linearity_degree(&self) -> u32 {
        let n = self.n();
        let g = self.support().fold(n, |acc, i| crate::gf::gcd_u32(acc, i as u32));
        if g == 0 {
            n
        } else {
            g
        }
    }

    /// Invertibility through the Dickson determinant.
    pub fn is_invertible(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_monomial() {
            return true;
        }
        let m = self.linearity_degree();
        let d = self.dickson_raw(m).expect("linearity degree is compatible");
        linalg::det(&self.ctx, d) != 0
    }

    /// Kernel elements in generator-power order, by exhaustive evaluation.
    pub fn kernel(&self) -> Vec<FElem> {
        self.ctx.elements().filter(|x| self.eval_raw(x.raw()) == 0).collect()
    }

    /// `dim_{F_q} ker f`, by exhaustive evaluation.
    pub fn kernel_dim(&self) -> u32 {
        let size = self.ctx.nonzero().filter(|x| self.eval_raw(x.raw()) == 0).count() as u64 + 1;
        let q = self.ctx.q() as u64;
        let mut dim = 0;
        let mut s = 1;
        while s < size {
            s *= q;
            dim += 1;
        }
        debug_assert_eq!(s, size);
        dim
    }

    /// `dim_{F_q} ker f` from the rank of the `n×n` Dickson matrix.
    pub fn kernel_dim_by_rank(&self) -> u32 {
        let d = self.dickson_raw(1).expect("base 1 is always compatible");
        self.n() - linalg::rank(&self.ctx, d) as u32
    }

    /// The compositional inverse, read off the first row of the inverse
    /// Dickson matrix.
    pub fn inverse(&self) -> Result<LinPoly> {
        let d = self.dickson_raw(1)?;
        let inv = linalg::inverse(&self.ctx, d).ok_or(LinPolyError::NotInvertible)?;
        let coeffs = inv[0].iter().map(|&r| self.ctx.wrap(r)).collect();
        Ok(Self::build(&self.ctx, coeffs, 1))
    }

    pub fn scale(&self, c: FElem) -> Result<LinPoly> {
        let c = self.ctx.check(c)?;
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect();
        Ok(Self::build(&self.ctx, coeffs, self.base_exp))
    }

    pub fn add(&self, other: &LinPoly) -> Result<LinPoly> {
        if !self.ctx.same_field(&other.ctx) || self.n() != other.n() {
            return Err(GfError::CtxMismatch.into());
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.ctx.add(a, b)).collect();
        Ok(Self::build(&self.ctx, coeffs, crate::gf::gcd_u32(self.base_exp, other.base_exp)))
    }

    /// `ℓ`-normal form: monic, zero coefficient at index `ℓ`, and for `ℓ > 0`
    /// shifted down by the minimal exponent `v` (index becomes `ℓ − v`).
    pub fn normalize(&self, ell: u32) -> Result<(LinPoly, u32)> {
        let n = self.n();
        if ell >= n {
            return Err(LinPolyError::BadIndex { index: ell, n });
        }
        if self.is_zero() {
            return Err(LinPolyError::ZeroPolynomial);
        }
        let ctx = &self.ctx;
        let monic = |f: &LinPoly| -> LinPoly {
            match f.q_degree() {
                Some(k) => f.scale(ctx.inv(f.coeff(k)).unwrap()).unwrap(),
                None => f.clone(),
            }
        };
        let mut f = monic(self);
        let mut coeffs = f.coeffs.clone();
        coeffs[ell as usize] = ctx.zero();
        f = monic(&Self::build(ctx, coeffs, 1));
        if f.is_zero() {
            return Ok((f, ell));
        }
        let v = f.min_exp().unwrap();
        if ell > 0 && v > 0 {
            let mut shifted = vec![ctx.zero(); n as usize];
            for i in f.support() {
                shifted[i - v as usize] = ctx.frob_q(f.coeffs[i], n - v);
            }
            let new_ell = (ell + n - v) % n;
            return Ok((Self::build(ctx, shifted, 1), new_ell));
        }
        Ok((f, ell))
    }

    /// Re-expresses the polynomial over a larger field via an embedding whose
    /// target carries a tower with the same `q`.
    pub fn embed(&self, emb: &crate::gf::Embedding) -> Result<LinPoly> {
        let big = emb.big();
        let nb = big.tower().ok_or(LinPolyError::NoTower)?.n as usize;
        let mut coeffs = vec![big.zero(); nb];
        for i in self.support() {
            coeffs[i] = emb.apply(self.coeffs[i])?;
        }
        Ok(Self::build(big, coeffs, 1))
    }

    /// Text form `i:elem,…` listing nonzero terms; `0` for the zero polynomial.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.support()
            .map(|i| format!("{i}:{}", self.ctx.fmt_elem(self.coeffs[i])))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<LinPoly> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Self::zero(ctx);
        }
        let mut terms = Vec::new();
        for part in split_top_level(s) {
            let (i, e) = part
                .split_once(':')
                .ok_or_else(|| LinPolyError::Parse(format!("term {part:?} is not i:elem")))?;
            let i: u32 = i
                .trim()
                .parse()
                .map_err(|_| LinPolyError::Parse(format!("bad exponent in {part:?}")))?;
            let n = ctx.tower().ok_or(LinPolyError::NoTower)?.n;
            if i >= n {
                return Err(LinPolyError::BadIndex { index: i, n });
            }
            terms.push((i, ctx.parse_elem(e)?));
        }
        Self::from_terms(ctx, &terms)
    }
}

/// Splits on commas outside square brackets.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldCtx {
        FieldCtx::tower_field(2, 2, 2).unwrap()
    }

    #[test]
    fn eval_examples() {
        let k = FieldCtx::tower_field(2, 1, 2).unwrap();
        let g = k.primitive_element();
        let f = LinPoly::monomial(&k, 1, k.one()).unwrap();
        assert_eq!(f.eval(g).unwrap(), k.add(g, k.one()));
        assert!(f.eval(k.zero()).unwrap().is_zero());
        let k = f16();
        let f = LinPoly::parse(&k, "0:g^0,2:g^0").unwrap();
        assert!(f.eval(k.gen_pow(5)).unwrap().is_zero());
    }

    #[test]
    fn compose_examples() {
        let k = f16();
        let g = k.primitive_element();
        let f = LinPoly::parse(&k, "1:g^3,3:g^7").unwrap();
        let id = LinPoly::identity(&k).unwrap();
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id.compose(&f).unwrap(), f);
        let a = LinPoly::monomial(&k, 3, k.one()).unwrap();
        let b = LinPoly::monomial(&k, 2, k.one()).unwrap();
        assert_eq!(a.compose(&b).unwrap(), LinPoly::monomial(&k, 1, k.one()).unwrap());
        // g_a = αx + x^{q^t}, φ = x^{q^s}
        let ga = LinPoly::from_terms(&k, &[(0, g), (2, k.one())]).unwrap();
        let phi = LinPoly::monomial(&k, 1, k.one()).unwrap();
        let expected = LinPoly::from_terms(&k, &[(1, g), (3, k.one())]).unwrap();
        assert_eq!(ga.compose(&phi).unwrap(), expected);
    }

    #[test]
    fn adjoint_examples() {
        let k = f16();
        let id = LinPoly::identity(&k).unwrap();
        assert_eq!(id.adjoint(), id);
        let f = LinPoly::parse(&k, "0:g^2,1:g^3,3:g^11").unwrap();
        assert_eq!(f.adjoint().adjoint(), f);
        // Σ a_i x^{q^{it+s}} with t=2, s=1 maps to shape it+1 again (s' = t − s = 1).
        let f = LinPoly::parse(&k, "1:g^3,3:g^7").unwrap();
        let support: Vec<usize> = f.adjoint().support().collect();
        assert!(support.iter().all(|&i| i % 2 == 1));
    }

    #[test]
    fn f_rho_examples() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^3,3:g^7").unwrap();
        assert!(f.f_rho(k.one()).unwrap().is_zero());
        let rho = k.gen_pow(4);
        let mono = LinPoly::monomial(&k, 2, k.one()).unwrap();
        let expected = k.sub(k.frob_q(rho, 2), rho);
        assert_eq!(mono.f_rho(rho).unwrap(), LinPoly::monomial(&k, 2, expected).unwrap());
        let id = LinPoly::identity(&k).unwrap();
        assert!(id.f_rho(rho).unwrap().is_zero());
        assert_eq!(f.f_rho(k.zero()).unwrap_err(), LinPolyError::ZeroRho);
    }

    #[test]
    fn dickson_examples() {
        let k = FieldCtx::tower_field(2, 2, 3).unwrap();
        let id = LinPoly::identity(&k).unwrap();
        let d = id.dickson_matrix(1).unwrap();
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { k.one() } else { k.zero() });
            }
        }
        let (a, b) = (k.gen_pow(5), k.gen_pow(17));
        let f = LinPoly::from_terms(&k, &[(0, a), (2, b), (4, k.one())]).unwrap();
        let d = f.dickson_matrix(2).unwrap();
        let fr = |x: FElem, i: u32| k.frob_q(x, i);
        let expected = vec![
            vec![a, b, k.one()],
            vec![k.one(), fr(a, 2), fr(b, 2)],
            vec![fr(b, 4), k.one(), fr(a, 4)],
        ];
        assert_eq!(d, expected);
        let cyc = LinPoly::monomial(&k, 2, k.one()).unwrap().dickson_matrix(2).unwrap();
        assert_eq!(cyc[0][1], k.one());
        assert_eq!(cyc[1][2], k.one());
        assert_eq!(cyc[2][0], k.one());
        assert!(matches!(f.dickson_matrix(4), Err(LinPolyError::Gf(GfError::NotDivisor { .. }))));
        let g = LinPoly::monomial(&k, 1, k.one()).unwrap();
        assert!(matches!(g.dickson_matrix(2), Err(LinPolyError::BaseMismatch { .. })));
    }

    #[test]
    fn invertibility_and_kernels() {
        let k = f16();
        let g = k.primitive_element();
        assert!(LinPoly::monomial(&k, 3, g).unwrap().is_invertible());
        let f4 = FieldCtx::tower_field(2, 1, 2).unwrap();
        let art = LinPoly::parse(&f4, "0:g^0,1:g^0").unwrap();
        assert!(!art.is_invertible());
        assert_eq!(art.kernel_dim(), 1);
        let f = LinPoly::from_terms(&k, &[(0, g), (2, k.one())]).unwrap();
        assert!(f.is_invertible());
        assert_eq!(f.kernel_dim(), 0);
        let tr = LinPoly::parse(&k, "0:g^0,1:g^0,2:g^0,3:g^0").unwrap();
        assert_eq!(tr.kernel_dim(), 3);
        assert_eq!(tr.kernel_dim_by_rank(), 3);
        assert_eq!(LinPoly::identity(&k).unwrap().kernel_dim(), 0);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let k = FieldCtx::tower_field(3, 2, 2).unwrap();
        let f = LinPoly::parse(&k, "1:g^3,3:g^0").unwrap();
        assert!(f.is_invertible());
        let inv = f.inverse().unwrap();
        let id = LinPoly::identity(&k).unwrap();
        assert_eq!(f.compose(&inv).unwrap(), id);
        assert_eq!(inv.compose(&f).unwrap(), id);
        let sing = LinPoly::parse(&k, "0:g^0,2:g^0").unwrap();
        assert!(!sing.is_invertible() || sing.inverse().is_ok());
    }

    #[test]
    fn normalize_examples() {
        let k = f16();
        let c = k.gen_pow(6);
        let (f, ell) = LinPoly::monomial(&k, 3, c).unwrap().normalize(0).unwrap();
        assert_eq!((f, ell), (LinPoly::monomial(&k, 3, k.one()).unwrap(), 0));
        let delta = k.gen_pow(3);
        let lp = LinPoly::from_terms(&k, &[(0, k.one()), (2, delta)]).unwrap();
        let (f, ell) = lp.normalize(1).unwrap();
        assert_eq!(ell, 1);
        assert_eq!(f, lp.scale(k.inv(delta).unwrap()).unwrap());
        let h = LinPoly::parse(&k, "1:g^0,3:g^0").unwrap();
        let (f, ell) = h.normalize(2).unwrap();
        assert_eq!(ell, 1);
        assert_eq!(f, LinPoly::parse(&k, "0:g^0,2:g^0").unwrap());
        assert_eq!(LinPoly::zero(&k).unwrap().normalize(0).unwrap_err(), LinPolyError::ZeroPolynomial);
    }

    #[test]
    fn text_round_trip() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^3,3:[1,0,0,0]").unwrap();
        assert_eq!(f.to_text(), "1:g^3,3:g^0");
        assert_eq!(LinPoly::parse(&k, &f.to_text()).unwrap(), f);
        assert!(LinPoly::parse(&k, "1g^3").is_err());
        assert!(LinPoly::parse(&k, "7:g^3").is_err());
    }
}
