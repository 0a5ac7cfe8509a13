//! Explicit families: monomials, LP polynomials, `Σ a_i x^{q^{it+s}}`,
//! binomials, trinomials, quadrinomials and the `g_a ∘ φ` construction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::gcd;
use crate::gf::{FElem, FieldCtx, GfError};
use crate::linpoly::{split_top_level, LinPoly, LinPolyError};
use crate::par;
use crate::scatter::{self, ScatterError};

/// Default cap on the number of coefficient vectors enumerated.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error(transparent)]
    Scatter(#[from] ScatterError),
    #[error("gcd condition violated: {0}")]
    GcdViolation(String),
    #[error("coefficient vector is zero")]
    ZeroVector,
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("exponent out of range: {0}")]
    ExponentRange(String),
    #[error("n = {0} is even")]
    EvenN(u32),
    #[error("wrong tower: {0}")]
    WrongTower(String),
    #[error("element is not primitive")]
    NotPrimitive,
    #[error("elements do not form a basis")]
    NotBasis,
    #[error("phi is not R-partially scattered")]
    PhiNotRPartial,
    #[error("enumeration of {size} vectors exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = FamilyError> = std::result::Result<T, E>;

fn tower_n(ctx: &FieldCtx) -> Result<u32> {
    Ok(ctx.tower().ok_or(LinPolyError::NoTower)?.n)
}

fn check_divides(t: u32, n: u32) -> Result<()> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(GfError::NotDivisor { m: t, n }.into());
    }
    Ok(())
}

fn g32(a: u32, b: u32) -> u32 {
    gcd(a as u64, b as u64) as u32
}

// ---------------------------------------------------------------------------
// Monomials.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialStatus {
    pub l_partial: bool,
    pub r_partial: bool,
    pub scattered: bool,
    /// `1 ≠ gcd(u,n) | t`.
    pub exceptional_l_not_scattered: bool,
    /// `1 = gcd(u,t) < gcd(u,n)`.
    pub exceptional_r_not_scattered: bool,
}

/// Status of `x^{q^u}` from gcd conditions alone.
pub fn monomial_status(u: u32, n: u32, t: u32) -> Result<MonomialStatus> {
    check_divides(t, n)?;
    if u == 0 {
        return Err(FamilyError::ExponentRange("u must be at least 1".into()));
    }
    let gn = g32(u, n);
    let gt = g32(u, t);
    Ok(MonomialStatus {
        l_partial: t.is_multiple_of(gn),
        r_partial: gt == 1,
        scattered: gn == 1,
        exceptional_l_not_scattered: gn != 1 && t.is_multiple_of(gn),
        exceptional_r_not_scattered: gt == 1 && gn > 1,
    })
}

// ---------------------------------------------------------------------------
// LP polynomials.

/// `x^{q^{s(n−1)}} + δ x^{q^s}`.
pub fn lp_poly(ctx: &FieldCtx, delta: FElem, s: u32) -> Result<LinPoly> {
    let n = tower_n(ctx)?;
    if g32(s, n) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, n={n}) != 1")));
    }
    Ok(LinPoly::from_terms(ctx, &[((s * (n - 1)) % n, ctx.one()), (s % n, delta)])?)
}

/// For odd `n`, `1 < t < n` and `N_{q^n/q}(δ) = 1` the LP polynomial is
/// neither L- nor R-partially scattered; otherwise the status is left open
/// (`None`). At `t = n` (L) and `t = 1` (R) the property is vacuous and the
/// other one reduces to scatteredness.
pub fn lp_status_odd_n(ctx: &FieldCtx, delta: FElem, s: u32, t: u32) -> Result<(Option<bool>, Option<bool>)> {
    let n = tower_n(ctx)?;
    check_divides(t, n)?;
    if n % 2 == 0 {
        return Err(FamilyError::EvenN(n));
    }
    if g32(s, n) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, n={n}) != 1")));
    }
    let norm_one = ctx.rel_norm(delta, n, 1)? == ctx.one();
    let l = if t == n {
        Some(true)
    } else if t == 1 {
        Some(!norm_one)
    } else {
        norm_one.then_some(false)
    };
    let r = if t == 1 {
        Some(true)
    } else if t == n {
        Some(!norm_one)
    } else {
        norm_one.then_some(false)
    };
    Ok((l, r))
}

/// `N_{q^n/q}(δ) ≠ 1`, the scatteredness condition for LP polynomials.
pub fn lp_scattered_by_norm(ctx: &FieldCtx, delta: FElem) -> Result<bool> {
    let n = tower_n(ctx)?;
    Ok(ctx.rel_norm(delta, n, 1)? != ctx.one())
}

// ---------------------------------------------------------------------------
// Σ a_i x^{q^{it+s}}.

fn check_form11(ctx: &FieldCtx, a: &[FElem], s: u32, t: u32) -> Result<u32> {
    let n = tower_n(ctx)?;
    check_divides(t, n)?;
    if g32(s, t) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, t={t}) != 1")));
    }
    let tp = n / t;
    if a.len() != tp as usize {
        return Err(GfError::WrongLength { expected: tp as usize, got: a.len() }.into());
    }
    if a.iter().all(|x| x.is_zero()) {
        return Err(FamilyError::ZeroVector);
    }
    Ok(n)
}

/// `g_a(x) = Σ a_i x^{q^{it}}`.
pub fn g_a(ctx: &FieldCtx, a: &[FElem], t: u32) -> Result<LinPoly> {
    let terms: Vec<(u32, FElem)> = a.iter().enumerate().map(|(i, &c)| (i as u32 * t, c)).collect();
    Ok(LinPoly::from_terms(ctx, &terms)?)
}

/// `Σ_{i<t'} a_i x^{q^{it+s}}`.
pub fn family11(ctx: &FieldCtx, a: &[FElem], s: u32, t: u32) -> Result<LinPoly> {
    check_form11(ctx, a, s, t)?;
    let terms: Vec<(u32, FElem)> = a.iter().enumerate().map(|(i, &c)| (i as u32 * t + s, c)).collect();
    Ok(LinPoly::from_terms(ctx, &terms)?)
}

/// R-partial status of `Σ a_i x^{q^{it+s}}` via invertibility of `g_a`.
pub fn family11_is_r_partial(ctx: &FieldCtx, a: &[FElem], s: u32, t: u32) -> Result<bool> {
    check_form11(ctx, a, s, t)?;
    Ok(g_a(ctx, a, t)?.is_invertible())
}

/// Recovers `(a, s)` when `f` has the form `Σ a_i x^{q^{it+s}}` with
/// `0 ≤ s < t`.
pub fn as_family11(f: &LinPoly, t: u32) -> Option<(Vec<FElem>, u32)> {
    let n = f.n();
    if t == 0 || !n.is_multiple_of(t) || f.is_zero() {
        return None;
    }
    let s = f.min_exp()? % t;
    if f.support().any(|i| i as u32 % t != s) {
        return None;
    }
    let a = (0..n / t).map(|i| f.coeff(i * t + s)).collect();
    Some((a, s))
}

/// `(g_a ∘ φ, g_a invertible)`; with `verify`, φ is first checked to be
/// R-partially scattered by the oracle.
pub fn compose_construct(ctx: &FieldCtx, a: &[FElem], phi: &LinPoly, t: u32, verify: bool) -> Result<(LinPoly, bool)> {
    let n = tower_n(ctx)?;
    check_divides(t, n)?;
    if a.len() != (n / t) as usize {
        return Err(GfError::WrongLength { expected: (n / t) as usize, got: a.len() }.into());
    }
    if verify && !scatter::is_r_partial_oracle(phi, t, 0)?.holds {
        return Err(FamilyError::PhiNotRPartial);
    }
    let ga = g_a(ctx, a, t)?;
    Ok((ga.compose(phi)?, ga.is_invertible()))
}

// ---------------------------------------------------------------------------
// Binomials and trinomials.

/// `x^{q^{kt+s}} + α x^{q^s}`.
pub fn binomial(ctx: &FieldCtx, alpha: FElem, k: u32, s: u32, t: u32) -> Result<LinPoly> {
    let n = tower_n(ctx)?;
    check_divides(t, n)?;
    if g32(s, t) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, t={t}) != 1")));
    }
    if k == 0 || s == 0 || k * t + s >= n {
        return Err(FamilyError::ExponentRange(format!("need k, s > 0 and kt+s < n, got k={k}, s={s}, t={t}, n={n}")));
    }
    if alpha.is_zero() {
        return Err(FamilyError::ZeroCoefficient);
    }
    Ok(LinPoly::from_terms(ctx, &[(k * t + s, ctx.one()), (s, alpha)])?)
}

/// `(N_{q^n/q^{t·gcd(k,t')}}(−α) ≠ 1, exceptional evidence)`; the second
/// component mirrors the first, since the condition persists over
/// infinitely many extensions.
pub fn binomial_is_r_partial(ctx: &FieldCtx, alpha: FElem, k: u32, s: u32, t: u32) -> Result<(bool, bool)> {
    binomial(ctx, alpha, k, s, t)?;
    let n = tower_n(ctx)?;
    let m = t * g32(k, n / t);
    let holds = ctx.rel_norm(ctx.neg(alpha), n, m)? != ctx.one();
    Ok((holds, holds))
}

/// `x^{q^{2t+s}} + β x^{q^{t+s}} + α x^{q^s}` over `F_{q^{3t}}`.
pub fn trinomial(ctx: &FieldCtx, alpha: FElem, beta: FElem, s: u32, t: u32) -> Result<LinPoly> {
    let n = tower_n(ctx)?;
    if n != 3 * t {
        return Err(FamilyError::WrongTower(format!("need n = 3t, got n = {n}, t = {t}")));
    }
    if g32(s, t) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, t={t}) != 1")));
    }
    Ok(LinPoly::from_terms(ctx, &[(2 * t + s, ctx.one()), (t + s, beta), (s, alpha)])?)
}

/// `N(α) + N(β) − Tr(αβ^{q^t}) + 1`, norms and trace from `F_{q^{3t}}` to `F_{q^t}`.
pub fn trinomial_expression(ctx: &FieldCtx, alpha: FElem, beta: FElem, t: u32) -> Result<FElem> {
    let n = tower_n(ctx)?;
    if n != 3 * t {
        return Err(FamilyError::WrongTower(format!("need n = 3t, got n = {n}, t = {t}")));
    }
    let na = ctx.rel_norm(alpha, n, t)?;
    let nb = ctx.rel_norm(beta, n, t)?;
    let tr = ctx.rel_trace(ctx.mul(alpha, ctx.frob_q(beta, t)), n, t)?;
    Ok(ctx.add(ctx.sub(ctx.add(na, nb), tr), ctx.one()))
}

pub fn trinomial_is_r_partial(ctx: &FieldCtx, alpha: FElem, beta: FElem, s: u32, t: u32) -> Result<bool> {
    trinomial(ctx, alpha, beta, s, t)?;
    Ok(!trinomial_expression(ctx, alpha, beta, t)?.is_zero())
}

// ---------------------------------------------------------------------------
// Invertible coefficient vectors and counting.

pub fn is_primitive(ctx: &FieldCtx, x: FElem) -> bool {
    match ctx.log(x) {
        None => false,
        Some(k) => gcd(k as u64, ctx.size() as u64 - 1) == 1,
    }
}

/// `a_i = Σ_j α^{j·q^{it}} b_j`, whose `g_a` is invertible.
pub fn invertible_from_basis(ctx: &FieldCtx, alpha: FElem, basis: &[FElem], t: u32) -> Result<Vec<FElem>> {
    let n = tower_n(ctx)?;
    check_divides(t, n)?;
    if !is_primitive(ctx, alpha) {
        return Err(FamilyError::NotPrimitive);
    }
    if !ctx.is_basis_over(basis, t)? {
        return Err(FamilyError::NotBasis);
    }
    let tp = n / t;
    let a: Vec<FElem> = (0..tp)
        .map(|i| {
            let ai = ctx.frob_q(alpha, i * t);
            basis
                .iter()
                .enumerate()
                .fold(ctx.zero(), |acc, (j, &b)| ctx.add(acc, ctx.mul(ctx.pow(ai, j as u64), b)))
        })
        .collect();
    debug_assert!(g_a(ctx, &a, t).unwrap().is_invertible());
    Ok(a)
}

/// `Π_{i<t'} (q^n − q^{it})`.
pub fn form11_count_formula(q: u64, t: u32, t_prime: u32) -> BigUint {
    let n = t * t_prime;
    let qb = BigUint::from(q);
    let qn = qb.pow(n);
    (0..t_prime).fold(BigUint::from(1u32), |acc, i| acc * (&qn - qb.pow(i * t)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form11Count {
    pub formula: BigUint,
    /// Number of coefficient vectors with invertible `g_a`.
    pub enumerated: Option<u64>,
    /// Among those, how many fail the R-criterion (checked when requested).
    pub criterion_failures: Option<u64>,
}

/// Decodes the `idx`-th coefficient vector (base `q^n` digits over raw values).
fn decode_vector(ctx: &FieldCtx, mut idx: u64, len: usize) -> Vec<FElem> {
    let size = ctx.size() as u64;
    (0..len)
        .map(|_| {
            let r = (idx % size) as u32;
            idx /= size;
            ctx.from_raw(r).unwrap()
        })
        .collect()
}

/// Formula and exhaustive count of invertible `g_a` over `F_{q^{tt'}}`;
/// with `check_members`, every counted `f = Σ a_i x^{q^{it+s}}` (`s = 1`)
/// is also run through the R-criterion.
pub fn count_r_partial_form11(q: u64, t: u32, t_prime: u32, budget: u64, check_members: bool) -> Result<Form11Count> {
    let formula = form11_count_formula(q, t, t_prime);
    let n = t * t_prime;
    let space = (q as u128).checked_pow(n * t_prime).unwrap_or(u128::MAX);
    if space > budget as u128 {
        return Err(FamilyError::BudgetExceeded { size: space, budget });
    }
    let ctx = FieldCtx::tower_field(q, t, t_prime)?;
    let s = 1;
    let results = par::map(0..space as u64, |idx| {
        let a = decode_vector(&ctx, idx, t_prime as usize);
        if a.iter().all(|x| x.is_zero()) {
            return (false, false);
        }
        let inv = g_a(&ctx, &a, t).unwrap().is_invertible();
        let crit_fail = if inv && check_members {
            let f = family11(&ctx, &a, s, t).unwrap();
            !scatter::is_r_partial_criterion(&f, t).unwrap().holds
        } else {
            false
        };
        (inv, crit_fail)
    });
    let enumerated = results.iter().filter(|r| r.0).count() as u64;
    let failures = results.iter().filter(|r| r.1).count() as u64;
    Ok(Form11Count {
        formula,
        enumerated: Some(enumerated),
        criterion_failures: check_members.then_some(failures),
    })
}

// ---------------------------------------------------------------------------
// R-partial but not scattered binomials.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RNotScattered {
    pub applies: bool,
    pub r_partial: bool,
    pub scattered: bool,
    /// `m` with `dim_{F_q} ker(f(x) − m x) = 2`, when found.
    pub kernel_witness: Option<FElem>,
}

/// The `n`-bound hypothesis for `δ x^{q^s} + x^{q^{t+s}}` with `n = 2t`.
pub fn r_not_scattered_bound(q: u64, n: u32, s: u32) -> bool {
    let need = if (q == 3 && s > 1) || (q == 2 && s > 2) { 4 * s + 2 } else { 4 * s + 1 };
    n >= need
}

/// Checks `f = δ x^{q^s} + x^{q^{t+s}}` over `F_{q^{2t}}`: whether the
/// hypothesis applies, its R-partial status (criterion), scatteredness
/// (oracle) and a kernel-dimension-2 witness `m`.
pub fn binomial_r_not_scattered(ctx: &FieldCtx, delta: FElem, s: u32, t: u32) -> Result<RNotScattered> {
    let n = tower_n(ctx)?;
    if n != 2 * t {
        return Err(FamilyError::WrongTower(format!("need n = 2t, got n = {n}, t = {t}")));
    }
    if g32(s, t) != 1 {
        return Err(FamilyError::GcdViolation(format!("gcd(s={s}, t={t}) != 1")));
    }
    let norm_ok = ctx.rel_norm(delta, n, t)? != ctx.one();
    let applies = norm_ok && r_not_scattered_bound(ctx.q() as u64, n, s);
    let f = LinPoly::from_terms(ctx, &[(s, delta), (t + s, ctx.one())])?;
    let r_partial = scatter::is_r_partial_criterion(&f, t)?.holds;
    let scattered = scatter::is_scattered_oracle(&f, 0)?.holds;
    let q = ctx.q() as u64;
    let target = (q * q - 1) as usize;
    let kernel_witness = ctx.nonzero().find(|&m| {
        let h = f.add(&LinPoly::monomial(ctx, 0, ctx.neg(m)).unwrap()).unwrap();
        ctx.nonzero().filter(|x| h.eval_raw(x.raw()) == 0).count() == target
    });
    Ok(RNotScattered { applies, r_partial, scattered, kernel_witness })
}

// ---------------------------------------------------------------------------
// Quadrinomials.

/// `x^{q^s} + x^{q^{t+s}} + x^{q^k} − x^{q^{t+k}}` over `F_{q^{2t}}`
/// (the sign is `+` in characteristic 2).
pub fn quadrinomial(ctx: &FieldCtx, s: u32, k: u32, t: u32) -> Result<LinPoly> {
    let n = tower_n(ctx)?;
    if n != 2 * t {
        return Err(FamilyError::WrongTower(format!("need n = 2t, got n = {n}, t = {t}")));
    }
    if g32(s, n) != 1 || g32(k, n) != 1 {
        return Err(FamilyError::GcdViolation(format!("need gcd(s, 2t) = gcd(k, 2t) = 1, got s={s}, k={k}")));
    }
    let one = ctx.one();
    Ok(LinPoly::from_terms(ctx, &[(s, one), (t + s, one), (k, one), (t + k, ctx.neg(one))])?)
}

// ---------------------------------------------------------------------------
// Text form `kind(param=value,…)`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Monomial { u: u32, c: String },
    Lp { delta: String, s: u32 },
    Form11 { a: Vec<String>, s: u32, t: u32 },
    Composed { a: Vec<String>, s: u32, t: u32 },
    Binomial { alpha: String, k: u32, s: u32, t: u32 },
    Trinomial { alpha: String, beta: String, s: u32, t: u32 },
    Quadrinomial { s: u32, k: u32, t: u32 },
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Monomial { .. } => "monomial",
            FamilySpec::Lp { .. } => "lp",
            FamilySpec::Form11 { .. } => "form11",
            FamilySpec::Composed { .. } => "composed",
            FamilySpec::Binomial { .. } => "binomial",
            FamilySpec::Trinomial { .. } => "trinomial",
            FamilySpec::Quadrinomial { .. } => "quadrinomial",
        }
    }

    pub fn build(&self, ctx: &FieldCtx) -> Result<LinPoly> {
        let el = |s: &str| ctx.parse_elem(s).map_err(FamilyError::from);
        let vec = |v: &[String]| v.iter().map(|s| el(s)).collect::<Result<Vec<_>>>();
        match self {
            FamilySpec::Monomial { u, c } => Ok(LinPoly::monomial(ctx, *u, el(c)?)?),
            FamilySpec::Lp { delta, s } => lp_poly(ctx, el(delta)?, *s),
            FamilySpec::Form11 { a, s, t } => family11(ctx, &vec(a)?, *s, *t),
            FamilySpec::Composed { a, s, t } => {
                let phi = LinPoly::monomial(ctx, *s, ctx.one())?;
                Ok(compose_construct(ctx, &vec(a)?, &phi, *t, false)?.0)
            }
            FamilySpec::Binomial { alpha, k, s, t } => binomial(ctx, el(alpha)?, *k, *s, *t),
            FamilySpec::Trinomial { alpha, beta, s, t } => trinomial(ctx, el(alpha)?, el(beta)?, *s, *t),
            FamilySpec::Quadrinomial { s, k, t } => quadrinomial(ctx, *s, *k, *t),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once('(')
            .ok_or_else(|| FamilyError::Parse(format!("{s:?} is not kind(param=value,...)")))?;
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| FamilyError::Parse(format!("missing ')' in {s:?}")))?;
        let mut params = std::collections::BTreeMap::new();
        if !body.trim().is_empty() {
            for part in split_top_level(body) {
                let (k, v) = part
                    .split_once('=')
                    .ok_or_else(|| FamilyError::Parse(format!("parameter {part:?} is not name=value")))?;
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let text = |name: &str| -> Result<String> {
            params.get(name).cloned().ok_or_else(|| FamilyError::Parse(format!("missing parameter {name}")))
        };
        let num = |name: &str| -> Result<u32> {
            text(name)?.parse().map_err(|_| FamilyError::Parse(format!("parameter {name} is not an integer")))
        };
        let list = |name: &str| -> Result<Vec<String>> {
            Ok(text(name)?.split('|').map(|x| x.trim().to_string()).collect())
        };
        match kind.trim() {
            "monomial" => Ok(FamilySpec::Monomial { u: num("u")?, c: params.get("c").cloned().unwrap_or_else(|| "1".into()) }),
            "lp" | "LP" => Ok(FamilySpec::Lp { delta: text("delta")?, s: num("s")? }),
            "form11" => Ok(FamilySpec::Form11 { a: list("a")?, s: num("s")?, t: num("t")? }),
            "composed" => Ok(FamilySpec::Composed { a: list("a")?, s: num("s")?, t: num("t")? }),
            "binomial" => Ok(FamilySpec::Binomial { alpha: text("alpha")?, k: num("k")?, s: num("s")?, t: num("t")? }),
            "trinomial" => Ok(FamilySpec::Trinomial { alpha: text("alpha")?, beta: text("beta")?, s: num("s")?, t: num("t")? }),
            "quadrinomial" => Ok(FamilySpec::Quadrinomial { s: num("s")?, k: num("k")?, t: num("t")? }),
            other => Err(FamilyError::Parse(format!("unknown family kind {other:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Monomial { u, c } => write!(f, "monomial(u={u},c={c})"),
            FamilySpec::Lp { delta, s } => write!(f, "lp(delta={delta},s={s})"),
            FamilySpec::Form11 { a, s, t } => write!(f, "form11(a={},s={s},t={t})", a.join("|")),
            FamilySpec::Composed { a, s, t } => write!(f, "composed(a={},s={s},t={t})", a.join("|")),
            FamilySpec::Binomial { alpha, k, s, t } => write!(f, "binomial(k={k},s={s},t={t},alpha={alpha})"),
            FamilySpec::Trinomial { alpha, beta, s, t } => write!(f, "trinomial(alpha={alpha},beta={beta},s={s},t={t})"),
            FamilySpec::Quadrinomial { s, k, t } => write!(f, "quadrinomial(s={s},k={k},t={t})"),
        }
    }
}
