//! Scattered, L-`q^t`- and R-`q^t`-partially scattered predicates.
//!
//! For `r(x) = f(x)/x^{q^ℓ}` on `F_{q^n}^*` the three properties say, for
//! `r(y) = r(z)`:
//!
//! * scattered: `y/z ∈ F_q`;
//! * L-partial: `y/z ∈ F_{q^t}`;
//! * R-partial: `y/z ∈ F_{q^t}` implies `y/z ∈ F_q`.
//!
//! The oracle groups `F_{q^n}^*` into fibers of `r`; the criterion form (index
//! 0) tests bijectivity of `f_ρ(x) = f(ρx) − ρf(x)` over the matching range of
//! `ρ`. Ratios are tested in log space: `y/z ∈ F_{q^m}` iff
//! `log y ≡ log z (mod (q^n−1)/(q^m−1))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::gf::{Embedding, FElem, FieldCtx, GfError};
use crate::linpoly::{LinPoly, LinPolyError};
use crate::par;

/// Default cap on `q^{nm}` for exceptionality probes.
pub const DEFAULT_PROBE_BUDGET: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScatterError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error("index {ell} out of range for n = {n}")]
    BadIndex { ell: u32, n: u32 },
    #[error("field of order {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
}

pub type Result<T, E = ScatterError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Scattered,
    LPartial,
    RPartial,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Scattered => "scattered",
            Property::LPartial => "L",
            Property::RPartial => "R",
        })
    }
}

impl FromStr for Property {
    type Err = ScatterError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scattered" | "S" => Ok(Property::Scattered),
            "L" | "l" | "L-partial" => Ok(Property::LPartial),
            "R" | "r" | "R-partial" => Ok(Property::RPartial),
            _ => Err(ScatterError::UnknownProperty(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Naive,
    Criterion,
    Curve,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Naive => "naive",
            Method::Criterion => "criterion",
            Method::Curve => "curve",
        })
    }
}

impl FromStr for Method {
    type Err = ScatterError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "naive" => Ok(Method::Naive),
            "criterion" => Ok(Method::Criterion),
            "curve" => Ok(Method::Curve),
            _ => Err(ScatterError::UnknownProperty(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatterReport {
    pub property: Property,
    pub t: u32,
    pub ell: u32,
    pub holds: bool,
    pub witness: Option<(FElem, FElem)>,
    pub method: Method,
}

impl ScatterReport {
    fn new(property: Property, t: u32, ell: u32, method: Method, witness: Option<(FElem, FElem)>) -> Self {
        ScatterReport { property, t, ell, holds: witness.is_none(), witness, method }
    }

    /// One-line record with a stable field order.
    pub fn to_record(&self, ctx: &FieldCtx) -> String {
        let witness = match self.witness {
            Some((y, z)) => format!("{},{}", ctx.fmt_elem(y), ctx.fmt_elem(z)),
            None => "none".to_string(),
        };
        format!(
            "property={} t={} ell={} method={} holds={} witness={}",
            self.property, self.t, self.ell, self.method, self.holds, witness
        )
    }
}

struct Keys {
    n1: u64,
    step_1: u64,
    step_t: u64,
}

impl Keys {
    fn new(ctx: &FieldCtx, t: u32) -> Keys {
        Keys { n1: ctx.size() as u64 - 1, step_1: ctx.subfield_step(1), step_t: ctx.subfield_step(t) }
    }

    fn in_sub(&self, ly: u64, lz: u64, step: u64) -> bool {
        (ly + self.n1 - lz).is_multiple_of(step)
    }
}

fn check_t(f: &LinPoly, t: u32) -> Result<()> {
    let n = f.n();
    if t == 0 || !n.is_multiple_of(t) {
        return Err(GfError::NotDivisor { m: t, n }.into());
    }
    Ok(())
}

fn check_ell(f: &LinPoly, ell: u32) -> Result<()> {
    if ell >= f.n() {
        return Err(ScatterError::BadIndex { ell, n: f.n() });
    }
    Ok(())
}

/// `r(x) = f(x)/x^{q^ℓ}` for `x = g^k`, `k = 0, …, q^n − 2`.
fn ratio_table(f: &LinPoly, ell: u32) -> Vec<u32> {
    let ctx = f.ctx();
    par::map(0..ctx.size() as u64 - 1, |k| {
        let x = ctx.raw_exp(k);
        let fx = f.eval_raw(x);
        if fx == 0 {
            0
        } else {
            ctx.raw_div(fx, ctx.raw_frob_q(x, ell))
        }
    })
}

/// Fibers of `r` as runs of logs, each run increasing.
fn fibers(ctx: &FieldCtx, r: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let size = ctx.size() as usize;
    let mut start = vec![0u32; size + 1];
    for &v in r {
        start[v as usize + 1] += 1;
    }
    for i in 0..size {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut order = vec![0u32; r.len()];
    for (k, &v) in r.iter().enumerate() {
        order[fill[v as usize] as usize] = k as u32;
        fill[v as usize] += 1;
    }
    (start, order)
}

fn oracle(f: &LinPoly, prop: Property, t: u32, ell: u32) -> Result<ScatterReport> {
    check_t(f, t)?;
    check_ell(f, ell)?;
    let ctx = f.ctx();
    let keys = Keys::new(ctx, t);
    let r = ratio_table(f, ell);
    let (start, order) = fibers(ctx, &r);
    let mut best: Option<(u32, u32)> = None;
    let mut consider = |y: u32, z: u32| {
        if best.is_none_or(|(by, bz)| (y, z) < (by, bz)) {
            best = Some((y, z));
        }
    };
    for v in 0..ctx.size() as usize {
        let fiber = &order[start[v] as usize..start[v + 1] as usize];
        if fiber.len() < 2 {
            continue;
        }
        match prop {
            Property::Scattered | Property::LPartial => {
                let step = if prop == Property::Scattered { keys.step_1 } else { keys.step_t };
                let y = fiber[0] as u64;
                if let Some(&z) = fiber[1..].iter().find(|&&z| !keys.in_sub(y, z as u64, step)) {
                    consider(y as u32, z);
                }
            }
            Property::RPartial => {
                // Group the fiber by class modulo F_{q^t}^*; a group with two
                // F_q^*-classes violates.
                let mut groups: Vec<(u64, u32, Option<u32>)> = Vec::new();
                for &z in fiber {
                    let key_t = z as u64 % keys.step_t;
                    match groups.iter_mut().find(|g| g.0 == key_t) {
                        None => groups.push((key_t, z, None)),
                        Some(g) => {
                            if g.2.is_none() && !keys.in_sub(g.1 as u64, z as u64, keys.step_1) {
                                g.2 = Some(z);
                            }
                        }
                    }
                }
                for (_, y, z) in groups {
                    if let Some(z) = z {
                        consider(y, z);
                    }
                }
            }
        }
    }
    let witness = best.map(|(y, z)| (ctx.gen_pow(y as u64), ctx.gen_pow(z as u64)));
    Ok(ScatterReport::new(prop, t, ell, Method::Oracle, witness))
}

pub fn is_scattered_oracle(f: &LinPoly, ell: u32) -> Result<ScatterReport> {
    oracle(f, Property::Scattered, 1, ell)
}

pub fn is_l_partial_oracle(f: &LinPoly, t: u32, ell: u32) -> Result<ScatterReport> {
    oracle(f, Property::LPartial, t, ell)
}

pub fn is_r_partial_oracle(f: &LinPoly, t: u32, ell: u32) -> Result<ScatterReport> {
    oracle(f, Property::RPartial, t, ell)
}

/// Dispatches to the oracle for any property; for scattered, `t` is recorded
/// but irrelevant.
pub fn oracle_report(f: &LinPoly, prop: Property, t: u32, ell: u32) -> Result<ScatterReport> {
    match prop {
        Property::Scattered => {
            check_t(f, t)?;
            let mut r = oracle(f, prop, 1, ell)?;
            r.t = t;
            Ok(r)
        }
        _ => oracle(f, prop, t, ell),
    }
}

/// Whether `(y, z)` violates the defining condition of `prop`.
pub fn violates(f: &LinPoly, prop: Property, t: u32, ell: u32, y: FElem, z: FElem) -> Result<bool> {
    let ctx = f.ctx();
    let (y, z) = (ctx.check(y)?, ctx.check(z)?);
    if y.is_zero() || z.is_zero() {
        return Ok(false);
    }
    let r = |x: FElem| ctx.raw_div(f.eval_raw(x.raw()), ctx.raw_frob_q(x.raw(), ell));
    if r(y) != r(z) {
        return Ok(false);
    }
    let ratio = ctx.div(y, z)?;
    Ok(match prop {
        Property::Scattered => !ctx.in_subfield(ratio, 1)?,
        Property::LPartial => !ctx.in_subfield(ratio, t)?,
        Property::RPartial => ctx.in_subfield(ratio, t)? && !ctx.in_subfield(ratio, 1)?,
    })
}

/// Replays a report's witness: `true` when a failing report's witness
/// violates the condition, or the report holds with no witness.
pub fn witness_replays(f: &LinPoly, report: &ScatterReport) -> Result<bool> {
    match report.witness {
        None => Ok(report.holds),
        Some((y, z)) => Ok(!report.holds && violates(f, report.property, report.t, report.ell, y, z)?),
    }
}

/// Ground-truth pair loop over all `(y, z)` in generator-power order.
pub fn naive_oracle(f: &LinPoly, prop: Property, t: u32, ell: u32) -> Result<ScatterReport> {
    check_t(f, t)?;
    check_ell(f, ell)?;
    let ctx = f.ctx();
    let mut witness = None;
    'outer: for y in ctx.nonzero() {
        for z in ctx.nonzero() {
            if violates(f, prop, t, ell, y, z)? {
                witness = Some((y, z));
                break 'outer;
            }
        }
    }
    Ok(ScatterReport::new(prop, t, ell, Method::Naive, witness))
}

// ---------------------------------------------------------------------------
// Criterion form (index 0).

fn criterion(f: &LinPoly, prop: Property, t: u32) -> Result<ScatterReport> {
    check_t(f, t)?;
    let ctx = f.ctx();
    let n = f.n();
    let (range_deg, excluded_deg) = match prop {
        Property::RPartial => (t, 1),
        Property::LPartial => (n, t),
        Property::Scattered => (n, 1),
    };
    let step = ctx.subfield_step(range_deg);
    let excl_step = ctx.subfield_step(excluded_deg);
    let count = (ctx.size() as u64 - 1) / step;
    let found = par::find_first(0..count, |i| {
        let log = i * step;
        if log.is_multiple_of(excl_step) {
            return None;
        }
        let rho = ctx.raw_exp(log);
        let fr = f.f_rho_unchecked(rho);
        if fr.is_invertible() {
            None
        } else {
            Some(rho)
        }
    });
    let witness = found.map(|(_, rho)| {
        let fr = f.f_rho_unchecked(rho);
        let x = ctx
            .nonzero()
            .find(|x| fr.eval_raw(x.raw()) == 0)
            .expect("a singular f_rho has a nonzero kernel element");
        (ctx.mul(ctx.wrap(rho), x), x)
    });
    Ok(ScatterReport::new(prop, t, 0, Method::Criterion, witness))
}

pub fn is_r_partial_criterion(f: &LinPoly, t: u32) -> Result<ScatterReport> {
    criterion(f, Property::RPartial, t)
}

pub fn is_l_partial_criterion(f: &LinPoly, t: u32) -> Result<ScatterReport> {
    criterion(f, Property::LPartial, t)
}

pub fn is_scattered_criterion(f: &LinPoly) -> Result<ScatterReport> {
    criterion(f, Property::Scattered, 1)
}

pub fn criterion_report(f: &LinPoly, prop: Property, t: u32) -> Result<ScatterReport> {
    match prop {
        Property::Scattered => {
            check_t(f, t)?;
            let mut r = criterion(f, prop, 1)?;
            r.t = t;
            Ok(r)
        }
        _ => criterion(f, prop, t),
    }
}

// ---------------------------------------------------------------------------
// Curve form.

/// `f(x)·y^{q^ℓ} − f(y)·x^{q^ℓ}`.
pub fn curve_numerator(f: &LinPoly, ell: u32, x: FElem, y: FElem) -> Result<FElem> {
    let ctx = f.ctx();
    let (x, y) = (ctx.check(x)?, ctx.check(y)?);
    let a = ctx.raw_mul(f.eval_raw(x.raw()), ctx.raw_frob_q(y.raw(), ell));
    let b = ctx.raw_mul(f.eval_raw(y.raw()), ctx.raw_frob_q(x.raw(), ell));
    Ok(ctx.wrap(ctx.raw_sub(a, b)))
}

/// L-partial status from the affine points of the curve: every point with
/// `x, y ≠ 0` and `y/x ∉ F_q` must have `y/x ∈ F_{q^t}`.
pub fn l_partial_via_curve(f: &LinPoly, t: u32, ell: u32) -> Result<ScatterReport> {
    check_t(f, t)?;
    check_ell(f, ell)?;
    let ctx = f.ctx();
    let keys = Keys::new(ctx, t);
    let n1 = ctx.size() as u64 - 1;
    let fx: Vec<u32> = (0..n1).map(|k| f.eval_raw(ctx.raw_exp(k))).collect();
    let xl: Vec<u32> = (0..n1).map(|k| ctx.raw_frob_q(ctx.raw_exp(k), ell)).collect();
    let found = par::find_first(0..n1, |a| {
        (0..n1).find(|&b| {
            !keys.in_sub(b, a, keys.step_1)
                && !keys.in_sub(b, a, keys.step_t)
                && ctx.raw_mul(fx[a as usize], xl[b as usize]) == ctx.raw_mul(fx[b as usize], xl[a as usize])
        })
    });
    let witness = found.map(|(a, b)| (ctx.gen_pow(a), ctx.gen_pow(b)));
    Ok(ScatterReport::new(Property::LPartial, t, ell, Method::Curve, witness))
}

// ---------------------------------------------------------------------------
// Extension probes.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeVerdict {
    pub m: u32,
    pub holds: bool,
}

impl ProbeVerdict {
    pub fn to_record(&self, prop: Property, t: u32) -> String {
        format!("verdict=probe property={prop} t={t} m={} holds={}", self.m, self.holds)
    }
}

/// Evaluates `prop` (criterion form, index 0) for `f` viewed over
/// `F_{q^{nm}}` for each `m`. All-true verdicts are evidence only.
pub fn exceptionality_probe(
    f: &LinPoly,
    t: u32,
    prop: Property,
    m_list: &[u32],
    budget: u64,
) -> Result<Vec<ProbeVerdict>> {
    check_t(f, t)?;
    let ctx = f.ctx();
    let tower = ctx.tower().ok_or(LinPolyError::NoTower)?;
    let q = tower.q as u128;
    let mut out = Vec::with_capacity(m_list.len());
    for &m in m_list {
        if m == 0 {
            return Err(ScatterError::HypothesisNotMet("m must be positive".into()));
        }
        let size = q.checked_pow(tower.n * m).unwrap_or(u128::MAX);
        if size > budget as u128 {
            return Err(ScatterError::BudgetExceeded { size, budget });
        }
        let holds = if m == 1 {
            criterion_report(f, prop, t)?.holds
        } else {
            let big = FieldCtx::tower_field(tower.q as u64, tower.t, tower.t_prime * m)?;
            let emb = Embedding::build(ctx, &big)?;
            let fb = f.embed(&emb)?;
            criterion_report(&fb, prop, t)?.holds
        };
        out.push(ProbeVerdict { m, holds });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Necessary conditions from point counting.

/// Which normalized shape an `ℓ ≥ 2` polynomial has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LShape {
    /// No shape constraint (used for `ℓ ∈ {0, 1}`).
    General,
    /// `a_0 x + a_1 x^q + Σ_{j>ℓ} a_j x^{q^j}`.
    WithLinearTerm,
    /// `a_0 x + Σ_{j>ℓ} a_j x^{q^j}`.
    Sparse,
}

fn big_pow(q: u64, e: u32) -> BigInt {
    num_bigint::BigInt::from(q).pow(e)
}

/// `a − b·√(q^n) − c ≤ 0` decided exactly, given `b ≥ 0`.
fn radical_le_zero(qn: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let lhs = qn - c;
    if lhs <= BigInt::from(0) {
        return true;
    }
    &lhs * &lhs <= b * b * qn
}

/// Whether the point-count inequality for an `ℓ`-normalized non-monomial
/// L-`q^t`-partially scattered polynomial of q-degree `k` and minimal
/// exponent `v` is satisfied.
pub fn check_l_inequality(q: u64, n: u32, k: u32, t: u32, ell: u32, v: u32, shape: LShape) -> Result<bool> {
    if v > k {
        return Err(ScatterError::HypothesisNotMet(format!("v = {v} exceeds k = {k}")));
    }
    if k >= n {
        return Err(ScatterError::HypothesisNotMet(format!("k = {k} is not below n = {n}")));
    }
    match ell {
        0 | 1 if shape != LShape::General => {
            return Err(ScatterError::HypothesisNotMet(format!("shape flags apply only for ell >= 2, got ell = {ell}")));
        }
        1 if k < 3 => {
            return Err(ScatterError::HypothesisNotMet(format!("ell = 1 needs k >= 3, got k = {k}")));
        }
        e if e >= 2 => {
            let degree_ok = if k.is_multiple_of(e) { k >= 3 * e } else { k + 1 >= 2 * e };
            if !degree_ok {
                return Err(ScatterError::HypothesisNotMet(format!("k = {k} too small for ell = {e}")));
            }
            match shape {
                LShape::General => {
                    return Err(ScatterError::HypothesisNotMet("ell >= 2 needs a shape flag".into()));
                }
                LShape::WithLinearTerm if k < e + 2 => {
                    return Err(ScatterError::HypothesisNotMet(format!("shape with x^q term needs k >= {}", e + 2)));
                }
                _ => {}
            }
        }
        _ => {}
    }
    let qn = big_pow(q, n);
    let qk = big_pow(q, k);
    let qt = big_pow(q, t);
    let qb = BigInt::from(q);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    Ok(if ell == 0 {
        let b = (&qk - &qb - &one) * (&qk - &qb - &two);
        let c = &qt * (&qk - &qb) + &two * (big_pow(q, k - v) - &one);
        radical_le_zero(&qn, &b, &c)
    } else {
        let ql = big_pow(q, ell);
        let s = &qk + &ql - &qb;
        let b = (&s - &two) * (&s - &three);
        let c = &qt * (&s - &one);
        radical_le_zero(&qn, &b, &c)
    })
}

/// `n/2 ≤ max{2k, 2ℓ, (k+t)/2, (ℓ+t)/2}`, compared after doubling.
pub fn check_l_degree_bound(n: u32, k: u32, t: u32, ell: u32) -> bool {
    let rhs = [4 * k as u64, 4 * ell as u64, (k + t) as u64, (ell + t) as u64];
    n as u64 <= *rhs.iter().max().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64, t: u32, tp: u32) -> FieldCtx {
        FieldCtx::tower_field(q, t, tp).unwrap()
    }

    fn poly(ctx: &FieldCtx, s: &str) -> LinPoly {
        LinPoly::parse(ctx, s).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let f4 = field(2, 1, 2);
        assert!(is_scattered_oracle(&poly(&f4, "1:g^0"), 0).unwrap().holds);
        let k = field(2, 2, 2);
        let id = poly(&k, "0:g^0");
        let r = is_scattered_oracle(&id, 0).unwrap();
        assert!(!r.holds);
        assert!(witness_replays(&id, &r).unwrap());
        let sq = poly(&k, "2:g^0");
        let r = is_scattered_oracle(&sq, 0).unwrap();
        let (y, z) = r.witness.unwrap();
        let ratio = k.div(y, z).unwrap();
        assert!(k.in_subfield(ratio, 2).unwrap() && !k.in_subfield(ratio, 1).unwrap());
        assert!(is_l_partial_oracle(&sq, 2, 0).unwrap().holds);
        assert!(is_l_partial_oracle(&poly(&k, "1:g^3,3:g^6"), 4, 0).unwrap().holds);
        assert!(!is_l_partial_oracle(&id, 2, 0).unwrap().holds);
        let r = is_r_partial_oracle(&sq, 2, 0).unwrap();
        assert!(!r.holds);
        assert!(witness_replays(&sq, &r).unwrap());
        assert!(is_r_partial_oracle(&id, 1, 0).unwrap().holds);
        assert!(is_r_partial_oracle(&poly(&k, "3:g^0"), 2, 0).unwrap().holds);
    }

    #[test]
    fn oracle_matches_naive_pair_loop_on_f16() {
        let k = field(2, 2, 2);
        for a in k.elements() {
            for b in k.elements().step_by(3) {
                let f = LinPoly::from_terms(&k, &[(1, a), (3, b)]).unwrap();
                for ell in [0, 1] {
                    for (prop, t) in [(Property::Scattered, 1), (Property::LPartial, 2), (Property::RPartial, 2)] {
                        let fast = oracle_report(&f, prop, t, ell).unwrap();
                        let slow = naive_oracle(&f, prop, t, ell).unwrap();
                        assert_eq!(fast.holds, slow.holds, "{f} {prop} ell={ell}");
                        assert_eq!(fast.witness, slow.witness, "{f} {prop} ell={ell}");
                    }
                }
            }
        }
    }

    #[test]
    fn criterion_examples() {
        let k = field(2, 2, 3);
        let mono = poly(&k, "1:g^0");
        assert!(is_r_partial_criterion(&mono, 2).unwrap().holds);
        assert!(is_r_partial_criterion(&poly(&k, "0:g^0"), 1).unwrap().holds);
        let f = poly(&k, "1:g^0,4:g^0");
        for prop in [Property::RPartial, Property::LPartial] {
            let c = criterion_report(&f, prop, 2).unwrap();
            let o = oracle_report(&f, prop, 2, 0).unwrap();
            assert_eq!(c.holds, o.holds);
            assert!(witness_replays(&f, &c).unwrap());
        }
        let k = field(2, 2, 2);
        let f = poly(&k, "1:g^0,3:g^1");
        assert_eq!(
            is_l_partial_criterion(&f, 2).unwrap().holds,
            is_l_partial_oracle(&f, 2, 0).unwrap().holds
        );
        assert!(is_l_partial_criterion(&f, 4).unwrap().holds);
        let s = is_scattered_criterion(&f).unwrap();
        assert_eq!(s.holds, is_scattered_oracle(&f, 0).unwrap().holds);
    }

    #[test]
    fn curve_numerator_examples() {
        let k = field(2, 2, 2);
        let f = poly(&k, "2:g^0");
        let g = k.primitive_element();
        assert!(curve_numerator(&f, 0, g, g).unwrap().is_zero());
        let y = k.mul(g, k.one());
        assert!(curve_numerator(&f, 0, g, y).unwrap().is_zero());
        let g2 = k.pow(g, 2);
        let direct = k.sub(k.mul(k.frob_q(g, 2), g2), k.mul(k.frob_q(g2, 2), g));
        assert_eq!(curve_numerator(&f, 0, g, g2).unwrap(), direct);
    }

    #[test]
    fn curve_examples() {
        let k = field(2, 2, 2);
        assert!(l_partial_via_curve(&poly(&k, "2:g^0"), 2, 0).unwrap().holds);
        let r = l_partial_via_curve(&poly(&k, "0:g^0"), 2, 0).unwrap();
        assert!(!r.holds);
        assert!(witness_replays(&poly(&k, "0:g^0"), &r).unwrap());
    }

    #[test]
    fn probe_examples() {
        let k = field(2, 2, 2);
        let mono = poly(&k, "1:g^0");
        let v = exceptionality_probe(&mono, 2, Property::RPartial, &[1, 3], DEFAULT_PROBE_BUDGET).unwrap();
        assert!(v.iter().all(|p| p.holds));
        let f4 = field(2, 1, 2);
        let v = exceptionality_probe(&poly(&f4, "0:g^0"), 1, Property::Scattered, &[1], DEFAULT_PROBE_BUDGET).unwrap();
        assert!(!v[0].holds);
        assert!(matches!(
            exceptionality_probe(&mono, 2, Property::RPartial, &[5], DEFAULT_PROBE_BUDGET),
            Err(ScatterError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn inequality_and_bound_examples() {
        assert!(check_l_degree_bound(4, 3, 2, 0));
        assert!(!check_l_degree_bound(20, 2, 2, 1));
        assert!(check_l_inequality(2, 4, 3, 2, 0, 1, LShape::General).unwrap());
        assert!(!check_l_inequality(2, 40, 2, 2, 0, 1, LShape::General).unwrap());
        assert!(matches!(
            check_l_inequality(2, 8, 2, 2, 1, 0, LShape::General),
            Err(ScatterError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn record_format_is_stable() {
        let k = field(2, 2, 2);
        let r = is_r_partial_oracle(&poly(&k, "1:g^0"), 2, 0).unwrap();
        assert_eq!(r.to_record(&k), "property=R t=2 ell=0 method=oracle holds=true witness=none");
    }
}
