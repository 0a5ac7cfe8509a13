//! Linear automorphism groups `𝒢(f)`, `ΓL(2, q^n)`-equivalence by exhaustive
//! scan, and constructive weak equivalence for `Σ a_i x^{q^{it+s}}`.

use std::fmt;

use thiserror::Error;

use crate::arith::totient;
use crate::families::{self, FamilyError};
use crate::gf::{gcd_u32, FElem, FieldCtx, GfError};
use crate::linalg;
use crate::linpoly::{LinPoly, LinPolyError};
use crate::par;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("matrix is singular")]
    Singular,
    #[error("brute force over GL(2, {size}) exceeds the field budget {budget}")]
    BudgetExceeded { size: u64, budget: u64 },
    #[error("polynomial is not invertible: {0}")]
    NotInvertible(String),
    #[error("class count undefined for t = {0} (needs t >= 3)")]
    SmallT(u32),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// Largest `q^n` for which `GL(2, q^n)` is scanned exhaustively.
pub const DEFAULT_GL_BUDGET: u64 = 64;

pub type Mat2 = [[FElem; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    FullField,
    Subfield(u32),
}

/// `w ↦ A · w^{p^h}` on `F_{q^n}^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearMap {
    ctx: FieldCtx,
    matrix: Mat2,
    frob: u32,
    scope: Scope,
}

impl SemilinearMap {
    pub fn new(ctx: &FieldCtx, matrix: Mat2, frob: u32) -> Result<SemilinearMap> {
        for row in &matrix {
            for &x in row {
                ctx.check(x)?;
            }
        }
        let det = ctx.sub(ctx.mul(matrix[0][0], matrix[1][1]), ctx.mul(matrix[0][1], matrix[1][0]));
        if det.is_zero() {
            return Err(GroupError::Singular);
        }
        Ok(SemilinearMap { ctx: ctx.clone(), matrix, frob: frob % ctx.d(), scope: Scope::FullField })
    }

    pub fn linear(ctx: &FieldCtx, matrix: Mat2) -> Result<SemilinearMap> {
        SemilinearMap::new(ctx, matrix, 0)
    }

    pub fn identity(ctx: &FieldCtx) -> SemilinearMap {
        SemilinearMap::linear(ctx, [[ctx.one(), ctx.zero()], [ctx.zero(), ctx.one()]]).unwrap()
    }

    pub fn diag(ctx: &FieldCtx, a: FElem, d: FElem) -> Result<SemilinearMap> {
        SemilinearMap::linear(ctx, [[a, ctx.zero()], [ctx.zero(), d]])
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn frob(&self) -> u32 {
        self.frob
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SemilinearMap) -> Result<SemilinearMap> {
        let ctx = &self.ctx;
        let mult = ctx.frob_multiplier(self.frob);
        let b = other.matrix.map(|row| row.map(|x| ctx.wrap(ctx.raw_frob_mult(x.raw(), mult))));
        let a = &self.matrix;
        let mut m = [[ctx.zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = ctx.add(ctx.mul(a[i][0], b[0][j]), ctx.mul(a[i][1], b[1][j]));
            }
        }
        SemilinearMap::new(ctx, m, self.frob + other.frob)
    }

    pub fn to_text(&self) -> String {
        let c = &self.ctx;
        let m = &self.matrix;
        format!(
            "[[{},{}],[{},{}]] frob={}",
            c.fmt_elem(m[0][0]),
            c.fmt_elem(m[0][1]),
            c.fmt_elem(m[1][0]),
            c.fmt_elem(m[1][1]),
            self.frob
        )
    }
}

pub fn apply_map(map: &SemilinearMap, w: (FElem, FElem)) -> Result<(FElem, FElem)> {
    let ctx = &map.ctx;
    let (x, y) = (ctx.check(w.0)?, ctx.check(w.1)?);
    Ok(ctx.wrap_pair(raw_apply(ctx, &raw_matrix(&map.matrix), ctx.frob_multiplier(map.frob), x.raw(), y.raw())))
}

fn raw_matrix(m: &Mat2) -> [[u32; 2]; 2] {
    m.map(|row| row.map(|x| x.raw()))
}

#[inline]
fn raw_apply(ctx: &FieldCtx, m: &[[u32; 2]; 2], mult: u64, x: u32, y: u32) -> (u32, u32) {
    let (x, y) = (ctx.raw_frob_mult(x, mult), ctx.raw_frob_mult(y, mult));
    (
        ctx.raw_add(ctx.raw_mul(m[0][0], x), ctx.raw_mul(m[0][1], y)),
        ctx.raw_add(ctx.raw_mul(m[1][0], x), ctx.raw_mul(m[1][1], y)),
    )
}

trait WrapPair {
    fn wrap_pair(&self, w: (u32, u32)) -> (FElem, FElem);
}

impl WrapPair for FieldCtx {
    fn wrap_pair(&self, w: (u32, u32)) -> (FElem, FElem) {
        (self.wrap(w.0), self.wrap(w.1))
    }
}

/// Raw `F_p`-basis `p^0, …, p^{d−1}` of the packed representation.
fn prime_basis(ctx: &FieldCtx) -> Vec<u32> {
    (0..ctx.d()).map(|i| ctx.p().pow(i)).collect()
}

/// `(x_i, f(x_i))` over the prime-field basis.
fn graph_basis(f: &LinPoly) -> Vec<(u32, u32)> {
    prime_basis(f.ctx()).into_iter().map(|x| (x, f.eval_raw(x))).collect()
}

fn stabilizes_raw(f: &LinPoly, basis: &[(u32, u32)], m: &[[u32; 2]; 2], mult: u64) -> bool {
    let ctx = f.ctx();
    basis.iter().all(|&(x, y)| {
        let (u, v) = raw_apply(ctx, m, mult, x, y);
        f.eval_raw(u) == v
    })
}

/// Whether every candidate maps `U_f` into itself.
pub fn aut_group_contains(f: &LinPoly, candidates: &[SemilinearMap]) -> bool {
    let basis = graph_basis(f);
    let ctx = f.ctx();
    candidates.iter().all(|c| {
        c.ctx.same_field(ctx) && stabilizes_raw(f, &basis, &raw_matrix(&c.matrix), ctx.frob_multiplier(c.frob))
    })
}

fn check_budget(ctx: &FieldCtx, budget: u64) -> Result<u64> {
    let size = ctx.size() as u64;
    if size > budget {
        return Err(GroupError::BudgetExceeded { size, budget });
    }
    Ok(size)
}

/// Exhaustive scan of `GL(2, q^n)` for matrices `A` with
/// `A · (x^σ, f(x)^σ) ∈ U_g` for all `x`, with `σ = x ↦ x^{p^h}`.
fn scan_gl(f: &LinPoly, g: &LinPoly, h: u32, first_only: bool) -> Vec<[[u32; 2]; 2]> {
    let ctx = f.ctx();
    let size = ctx.size() as u64;
    let mult = ctx.frob_multiplier(h);
    let basis: Vec<(u32, u32)> = graph_basis(f)
        .into_iter()
        .map(|(x, y)| (ctx.raw_frob_mult(x, mult), ctx.raw_frob_mult(y, mult)))
        .collect();
    let row_hits = |ab: u64| -> Vec<[[u32; 2]; 2]> {
        let (a, b) = ((ab / size) as u32, (ab % size) as u32);
        if a == 0 && b == 0 {
            return Vec::new();
        }
        let targets: Vec<u32> = basis
            .iter()
            .map(|&(x, y)| g.eval_raw(ctx.raw_add(ctx.raw_mul(a, x), ctx.raw_mul(b, y))))
            .collect();
        let mut out = Vec::new();
        for c in 0..size as u32 {
            for d in 0..size as u32 {
                if ctx.raw_mul(a, d) == ctx.raw_mul(b, c) {
                    continue;
                }
                let ok = basis
                    .iter()
                    .zip(&targets)
                    .all(|(&(x, y), &t)| ctx.raw_add(ctx.raw_mul(c, x), ctx.raw_mul(d, y)) == t);
                if ok {
                    out.push([[a, b], [c, d]]);
                    if first_only {
                        return out;
                    }
                }
            }
        }
        out
    };
    if first_only {
        par::find_first(0..size * size, |ab| row_hits(ab).into_iter().next())
            .map(|(_, m)| vec![m])
            .unwrap_or_default()
    } else {
        par::flat_map(0..size * size, row_hits)
    }
}

fn mat_key(ctx: &FieldCtx, m: &Mat2) -> [u32; 4] {
    [ctx.order_key(m[0][0]), ctx.order_key(m[0][1]), ctx.order_key(m[1][0]), ctx.order_key(m[1][1])]
}

/// All of `𝒢(f)`, sorted by entries in canonical element order.
pub fn aut_group_bruteforce(f: &LinPoly, budget: u64) -> Result<Vec<Mat2>> {
    let ctx = f.ctx();
    check_budget(ctx, budget)?;
    let mut out: Vec<Mat2> = scan_gl(f, f, 0, false)
        .into_iter()
        .map(|m| m.map(|row| row.map(|x| ctx.wrap(x))))
        .collect();
    out.sort_by_key(|m| mat_key(ctx, m));
    Ok(out)
}

/// Identity, inverses and closure on up to `samples²` pairs.
pub fn is_group_sampled(ctx: &FieldCtx, mats: &[Mat2], samples: usize) -> bool {
    let maps: Vec<SemilinearMap> = match mats.iter().map(|m| SemilinearMap::linear(ctx, *m)).collect() {
        Ok(v) => v,
        Err(_) => return false,
    };
    let keys: std::collections::HashSet<[u32; 4]> = mats.iter().map(|m| mat_key(ctx, m)).collect();
    let id = SemilinearMap::identity(ctx);
    if !keys.contains(&mat_key(ctx, &id.matrix)) {
        return false;
    }
    let step = (maps.len() / samples.max(1)).max(1);
    let picked: Vec<&SemilinearMap> = maps.iter().step_by(step).collect();
    for a in &picked {
        let m = a.matrix;
        let det = ctx.sub(ctx.mul(m[0][0], m[1][1]), ctx.mul(m[0][1], m[1][0]));
        let di = ctx.inv(det).unwrap();
        let inv = [
            [ctx.mul(m[1][1], di), ctx.neg(ctx.mul(m[0][1], di))],
            [ctx.neg(ctx.mul(m[1][0], di)), ctx.mul(m[0][0], di)],
        ];
        if !keys.contains(&mat_key(ctx, &inv)) {
            return false;
        }
        for b in &picked {
            if !keys.contains(&mat_key(ctx, &a.compose(b).unwrap().matrix)) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct EquivOutcome {
    pub witness: Option<SemilinearMap>,
    /// Group orders, when the order filter was consulted.
    pub orders: Option<(usize, usize)>,
    pub filtered: bool,
}

impl EquivOutcome {
    pub fn to_record(&self) -> String {
        let orders = self.orders.map_or("none".to_string(), |(a, b)| format!("{a},{b}"));
        match &self.witness {
            Some(w) => format!("equivalent=true orders={orders} witness={}", w.to_text()),
            None => format!("equivalent=false orders={orders} filtered={} witness=none", self.filtered),
        }
    }
}

/// First `(A, σ)` in scan order (`h`, then entries in packed order) with
/// `A · U_f^σ = U_g`. With `use_filter`, differing group orders end the
/// search early.
pub fn are_equivalent_bruteforce(f: &LinPoly, g: &LinPoly, budget: u64, use_filter: bool) -> Result<EquivOutcome> {
    let ctx = f.ctx();
    if !ctx.same_field(g.ctx()) {
        return Err(GfError::CtxMismatch.into());
    }
    check_budget(ctx, budget)?;
    let mut orders = None;
    if use_filter {
        let (a, b) = (aut_group_bruteforce(f, budget)?.len(), aut_group_bruteforce(g, budget)?.len());
        orders = Some((a, b));
        if a != b {
            return Ok(EquivOutcome { witness: None, orders, filtered: true });
        }
    }
    for h in 0..ctx.d() {
        if let Some(m) = scan_gl(f, g, h, true).into_iter().next() {
            let m = m.map(|row| row.map(|x| ctx.wrap(x)));
            return Ok(EquivOutcome { witness: Some(SemilinearMap::new(ctx, m, h)?), orders, filtered: false });
        }
    }
    Ok(EquivOutcome { witness: None, orders, filtered: false })
}

// ---------------------------------------------------------------------------
// Weak equivalence.

/// An additive map of `F_{q^n}^2` given by the images of the prime-field
/// basis `(p^i, 0)` then `(0, p^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveMap {
    ctx: FieldCtx,
    images: Vec<(u32, u32)>,
}

impl AdditiveMap {
    pub fn from_fn(ctx: &FieldCtx, mut f: impl FnMut(u32, u32) -> (u32, u32)) -> AdditiveMap {
        let basis = prime_basis(ctx);
        let mut images: Vec<(u32, u32)> = basis.iter().map(|&b| f(b, 0)).collect();
        images.extend(basis.iter().map(|&b| f(0, b)));
        AdditiveMap { ctx: ctx.clone(), images }
    }

    fn raw_apply(&self, x: u32, y: u32) -> (u32, u32) {
        let ctx = &self.ctx;
        let d = ctx.d() as usize;
        let (cx, cy) = (ctx.coords(ctx.wrap(x)), ctx.coords(ctx.wrap(y)));
        let mut out = (0u32, 0u32);
        for (i, &c) in cx.iter().chain(cy.iter()).enumerate() {
            if c == 0 {
                continue;
            }
            let (a, b) = self.images[i];
            let c = ctx.from_int(c as i64).raw();
            out = (ctx.raw_add(out.0, ctx.raw_mul(c, a)), ctx.raw_add(out.1, ctx.raw_mul(c, b)));
            debug_assert!(i < 2 * d);
        }
        out
    }

    pub fn apply(&self, w: (FElem, FElem)) -> Result<(FElem, FElem)> {
        let (x, y) = (self.ctx.check(w.0)?, self.ctx.check(w.1)?);
        Ok(self.ctx.wrap_pair(self.raw_apply(x.raw(), y.raw())))
    }

    /// Rank over `F_p` of the image.
    pub fn rank(&self) -> usize {
        pair_rank(&self.ctx, &self.images)
    }

    /// The `2d × 2d` matrix over `F_p`, one row per basis image.
    pub fn prime_matrix(&self) -> Vec<Vec<u32>> {
        self.images.iter().map(|&(a, b)| pair_prime_coords(&self.ctx, a, b)).collect()
    }
}

fn pair_prime_coords(ctx: &FieldCtx, a: u32, b: u32) -> Vec<u32> {
    let mut v = ctx.coords(ctx.wrap(a));
    v.extend(ctx.coords(ctx.wrap(b)));
    v
}

fn pair_rank(ctx: &FieldCtx, pairs: &[(u32, u32)]) -> usize {
    let rows: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(a, b)| pair_prime_coords(ctx, a, b).into_iter().map(|c| ctx.from_int(c as i64).raw()).collect())
        .collect();
    linalg::rank(ctx, rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakKind {
    /// `s ≡ s' (mod t)`: `(x, y) ↦ (x, g(f⁻¹(y)))`.
    Plus,
    /// `s ≡ −s' (mod t)`: `(x, y) ↦ (f⁻¹(y), g(x))`.
    Minus,
}

#[derive(Clone, Debug)]
pub struct WeakEquivVerdict {
    pub equivalent: bool,
    pub kind: Option<WeakKind>,
    pub witness: Option<AdditiveMap>,
    /// `c` with `F(λw) = λ^{q^c} F(w)` for `λ ∈ F_{q^t}`.
    pub companion: Option<u32>,
    pub verified: bool,
    pub by_theorem: bool,
}

impl WeakEquivVerdict {
    pub fn to_record(&self) -> String {
        let kind = match self.kind {
            Some(WeakKind::Plus) => "plus",
            Some(WeakKind::Minus) => "minus",
            None => "none",
        };
        let companion = self.companion.map_or("none".to_string(), |c| c.to_string());
        let source = if self.by_theorem { "by-theorem" } else { "constructed" };
        format!(
            "weak_equivalent={} kind={kind} companion={companion} verified={} source={source}",
            self.equivalent, self.verified
        )
    }
}

/// Constructive weak equivalence between `Σ a_i x^{q^{it+s}}` and
/// `Σ b_i x^{q^{it+s'}}`; negative verdicts come from the `s ≡ ±s'`
/// criterion and are labelled as such.
pub fn weak_equiv_family11(
    ctx: &FieldCtx,
    a_f: &[FElem],
    s: u32,
    a_g: &[FElem],
    s2: u32,
    t: u32,
) -> Result<WeakEquivVerdict> {
    let f = families::family11(ctx, a_f, s, t)?;
    let g = families::family11(ctx, a_g, s2, t)?;
    for (name, a, s) in [("f", a_f, s), ("g", a_g, s2)] {
        if !families::family11_is_r_partial(ctx, a, s, t)? {
            return Err(GroupError::NotInvertible(format!("{name}: g_a is not invertible")));
        }
    }
    let kind = if s % t == s2 % t {
        WeakKind::Plus
    } else if (s + s2).is_multiple_of(t) {
        WeakKind::Minus
    } else {
        return Ok(WeakEquivVerdict {
            equivalent: false,
            kind: None,
            witness: None,
            companion: None,
            verified: false,
            by_theorem: true,
        });
    };
    let f_inv = f.inverse()?;
    let map = match kind {
        WeakKind::Plus => AdditiveMap::from_fn(ctx, |x, y| (x, g.eval_raw(f_inv.eval_raw(y)))),
        WeakKind::Minus => AdditiveMap::from_fn(ctx, |x, y| (f_inv.eval_raw(y), g.eval_raw(x))),
    };
    let companion = match kind {
        WeakKind::Plus => 0,
        WeakKind::Minus => (t - s % t) % t,
    };
    let verified = verify_weak_map(&map, &f, &g, t, companion)?;
    Ok(WeakEquivVerdict {
        equivalent: true,
        kind: Some(kind),
        witness: Some(map),
        companion: Some(companion),
        verified,
        by_theorem: false,
    })
}

/// `map` is bijective, `F_{q^t}`-semilinear with companion `q^c`, and
/// sends `U_f` onto `U_g`.
pub fn verify_weak_map(map: &AdditiveMap, f: &LinPoly, g: &LinPoly, t: u32, companion: u32) -> Result<bool> {
    let ctx = f.ctx();
    let d = ctx.d() as usize;
    if map.rank() != 2 * d {
        return Ok(false);
    }
    let images: Vec<(u32, u32)> = graph_basis(f).into_iter().map(|(x, y)| map.raw_apply(x, y)).collect();
    if images.iter().any(|&(u, v)| g.eval_raw(u) != v) || pair_rank(ctx, &images) != d {
        return Ok(false);
    }
    if t == 0 || !ctx.n().is_multiple_of(t) {
        return Err(GfError::NotDivisor { m: t, n: ctx.n() }.into());
    }
    let lambda = ctx.raw_exp(ctx.subfield_step(t));
    let lambda_c = ctx.raw_frob_q(lambda, companion);
    let basis = prime_basis(ctx);
    let all: Vec<(u32, u32)> = basis.iter().map(|&b| (b, 0)).chain(basis.iter().map(|&b| (0, b))).collect();
    Ok(all.iter().all(|&(x, y)| {
        let lhs = map.raw_apply(ctx.raw_mul(lambda, x), ctx.raw_mul(lambda, y));
        let (u, v) = map.raw_apply(x, y);
        lhs == (ctx.raw_mul(lambda_c, u), ctx.raw_mul(lambda_c, v))
    }))
}

/// `φ(t)/2`.
pub fn count_weak_classes(t: u32) -> Result<u64> {
    if t <= 2 {
        return Err(GroupError::SmallT(t));
    }
    Ok(totient(t as u64) / 2)
}

// ---------------------------------------------------------------------------
// Stated groups.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `diag(a, a^{q^s})`, `a ∈ F_{q^m}^*`.
    Diagonal { m: u32, s: u32 },
    /// `(a, b; 0, a^{q^s})`, `a ∈ F_{q^m}^*`, `b ∈ F_{q^t}`.
    UpperTriangular { m: u32, s: u32, t: u32 },
    /// `(a, b; −4b, a)`, `a ∈ F_q`, `b^q = −b`, `a² + 4b² ≠ 0`.
    Lz2Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescription {
    pub kind: GroupKind,
    pub q: u64,
    pub order: u64,
}

impl fmt::Display for GroupDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Diagonal { m, s } => write!(f, "diag(a,a^(q^{s})) a in F_(q^{m})^* order={}", self.order),
            GroupKind::UpperTriangular { m, s, t } => write!(
                f,
                "[[a,b],[0,a^(q^{s})]] a in F_(q^{m})^* b in F_(q^{t}) order={}",
                self.order
            ),
            GroupKind::Lz2Odd => write!(f, "[[a,b],[-4b,a]] a in F_q b^q=-b a^2+4b^2!=0 order={}", self.order),
        }
    }
}

impl GroupDescription {
    /// Every element, as linear maps over `ctx`.
    pub fn elements(&self, ctx: &FieldCtx) -> Result<Vec<SemilinearMap>> {
        let z = ctx.zero();
        let mut out = Vec::new();
        match self.kind {
            GroupKind::Diagonal { m, s } => {
                for a in ctx.subfield_elements(m)?.into_iter().filter(|a| !a.is_zero()) {
                    out.push(SemilinearMap::diag(ctx, a, ctx.frob_q(a, s))?);
                }
            }
            GroupKind::UpperTriangular { m, s, t } => {
                let bs = ctx.subfield_elements(t)?;
                for a in ctx.subfield_elements(m)?.into_iter().filter(|a| !a.is_zero()) {
                    for &b in &bs {
                        out.push(SemilinearMap::linear(ctx, [[a, b], [z, ctx.frob_q(a, s)]])?);
                    }
                }
            }
            GroupKind::Lz2Odd => {
                let four = ctx.from_int(4);
                let bs: Vec<FElem> = ctx.elements().filter(|&b| ctx.frob_q(b, 1) == ctx.neg(b)).collect();
                for a in ctx.subfield_elements(1)? {
                    for &b in &bs {
                        let det = ctx.add(ctx.mul(a, a), ctx.mul(four, ctx.mul(b, b)));
                        if det.is_zero() {
                            continue;
                        }
                        out.push(SemilinearMap::linear(ctx, [[a, b], [ctx.neg(ctx.mul(four, b)), a]])?);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn qpow(q: u64, e: u32) -> u64 {
    q.pow(e)
}

/// `diag(a, a^{q^s})`, `a ∈ F_{q^t}^*`, contained in `𝒢` of every `Σ a_i x^{q^{it+s}}`
/// polynomial.
pub fn family11_group(q: u64, t: u32, s: u32) -> GroupDescription {
    GroupDescription { kind: GroupKind::Diagonal { m: t, s }, q, order: qpow(q, t) - 1 }
}

/// The group `G` attached to `x^{q^{kt+s}} + α x^{q^s}` over `F_{q^{tt'}}`.
pub fn binomial_group(q: u64, t: u32, t_prime: u32, k: u32, s: u32) -> GroupDescription {
    let m = t * gcd_u32(k, t_prime);
    GroupDescription { kind: GroupKind::Diagonal { m, s }, q, order: qpow(q, m) - 1 }
}

/// Whether `{0, s, t+s, k, t+k, 2s, t+2s, k+s, t+k+s, 2k, t+2k}` has 11
/// elements mod `2t`, together with the gcd conditions.
pub fn quadrinomial_hypothesis(s: u32, k: u32, t: u32) -> bool {
    let n = 2 * t;
    if t < 2 || gcd_u32(s, n) != 1 || gcd_u32(k, n) != 1 {
        return false;
    }
    let set: std::collections::BTreeSet<u32> =
        [0, s, t + s, k, t + k, 2 * s, t + 2 * s, k + s, t + k + s, 2 * k, t + 2 * k].iter().map(|x| x % n).collect();
    set.len() == 11
}

/// The smallest `(t, s, k)` (lexicographically, `s, k < 2t`) meeting
/// [`quadrinomial_hypothesis`].
pub fn smallest_quadrinomial_instance(t_max: u32) -> Option<(u32, u32, u32)> {
    (2..=t_max).find_map(|t| {
        (1..2 * t).find_map(|s| (1..2 * t).find(|&k| quadrinomial_hypothesis(s, k, t)).map(|k| (t, s, k)))
    })
}

pub fn quadrinomial_aut_expected(s: u32, k: u32, t: u32, q: u64) -> Result<GroupDescription> {
    if !quadrinomial_hypothesis(s, k, t) {
        return Err(GroupError::HypothesisNotMet(format!("quadrinomial exponent set for s={s}, k={k}, t={t}")));
    }
    let g = gcd_u32(t, k.abs_diff(s));
    Ok(if q % 2 == 1 {
        GroupDescription { kind: GroupKind::Diagonal { m: g, s }, q, order: qpow(q, g) - 1 }
    } else {
        GroupDescription { kind: GroupKind::UpperTriangular { m: g, s, t }, q, order: qpow(q, t) * (qpow(q, g) - 1) }
    })
}

/// The group of `x^{q^{t−k}} + x^{q^{2t−k}} + x^{q^k} − x^{q^{t+k}}`.
pub fn lz2_aut_expected(k: u32, t: u32, q: u64) -> Result<GroupDescription> {
    let ok = q % 2 == 1 && ((k == 1 && t >= 5) || (k > 1 && gcd_u32(k, 2 * t) == 1 && t > 2 * k));
    if !ok {
        return Err(GroupError::HypothesisNotMet(format!("q odd and k=1, t>=5 or gcd(k,2t)=1, t>2k; got q={q}, k={k}, t={t}")));
    }
    Ok(if t.is_multiple_of(2) {
        GroupDescription { kind: GroupKind::Diagonal { m: 2, s: 1 }, q, order: q * q - 1 }
    } else {
        let singular = if q % 4 == 3 { 2 * (q - 1) } else { 0 };
        GroupDescription { kind: GroupKind::Lz2Odd, q, order: q * q - 1 - singular }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldCtx {
        FieldCtx::tower_field(2, 2, 2).unwrap()
    }

    #[test]
    fn apply_map_examples() {
        let k = f16();
        let w = (k.gen_pow(3), k.gen_pow(7));
        assert_eq!(apply_map(&SemilinearMap::identity(&k), w).unwrap(), w);
        let f = LinPoly::parse(&k, "1:g^1,3:g^0").unwrap();
        let a = k.subfield_elements(2).unwrap()[2];
        let m = SemilinearMap::diag(&k, a, k.frob_q(a, 1)).unwrap();
        for x in k.elements() {
            let (u, v) = apply_map(&m, (x, f.eval(x).unwrap())).unwrap();
            assert_eq!(u, k.mul(a, x));
            assert_eq!(v, k.mul(k.frob_q(a, 1), f.eval(x).unwrap()));
        }
        let fr = SemilinearMap::new(&k, [[k.one(), k.zero()], [k.zero(), k.one()]], 1).unwrap();
        let twice = fr.compose(&fr).unwrap();
        assert_eq!(twice.frob(), 2);
        for x in k.elements() {
            let once = apply_map(&fr, apply_map(&fr, (x, x)).unwrap()).unwrap();
            assert_eq!(apply_map(&twice, (x, x)).unwrap(), once);
        }
        assert!(SemilinearMap::diag(&k, k.zero(), k.one()).is_err());
    }

    #[test]
    fn monomial_group_order() {
        let k = f16();
        for s in [1, 3] {
            let f = LinPoly::monomial(&k, s, k.one()).unwrap();
            let g = aut_group_bruteforce(&f, DEFAULT_GL_BUDGET).unwrap();
            assert_eq!(g.len(), 15);
            assert!(is_group_sampled(&k, &g, 15));
        }
    }

    #[test]
    fn identity_group_contains_scalars() {
        let k = f16();
        let f = LinPoly::identity(&k).unwrap();
        let g = aut_group_bruteforce(&f, DEFAULT_GL_BUDGET).unwrap();
        for a in k.nonzero() {
            assert!(g.contains(&[[a, k.zero()], [k.zero(), a]]));
        }
        assert!(is_group_sampled(&k, &g, 30));
    }

    #[test]
    fn containment_examples() {
        let k = f16();
        let f = families::family11(&k, &[k.gen_pow(1), k.one()], 1, 2).unwrap();
        let cands = family11_group(2, 2, 1).elements(&k).unwrap();
        assert_eq!(cands.len(), 3);
        assert!(aut_group_contains(&f, &cands));
        let g = aut_group_bruteforce(&f, 64).unwrap();
        let bad = [[g[0][0][0], k.one()], [g[0][1][0], g[0][1][1]]];
        if !g.contains(&bad) {
            if let Ok(m) = SemilinearMap::linear(&k, bad) {
                assert!(!aut_group_contains(&f, &[m]));
            }
        }
        let k4 = FieldCtx::tower_field(2, 7, 2).unwrap();
        let (t, s, kk) = smallest_quadrinomial_instance(8).unwrap();
        assert_eq!(t, 7);
        let qf = families::quadrinomial(&k4, s, kk, t).unwrap();
        let desc = quadrinomial_aut_expected(s, kk, t, 2).unwrap();
        let els = desc.elements(&k4).unwrap();
        assert_eq!(els.len() as u64, desc.order);
        assert!(aut_group_contains(&qf, &els));
    }

    #[test]
    fn equivalence_scan() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^1,3:g^0").unwrap();
        let out = are_equivalent_bruteforce(&f, &f, 64, false).unwrap();
        let w = out.witness.unwrap();
        assert_eq!(w.frob(), 0);
        let twisted = LinPoly::new(&k, f.coeffs().iter().map(|&c| k.frob_q(c, 1)).collect()).unwrap();
        let out = are_equivalent_bruteforce(&f, &twisted, 64, true).unwrap();
        assert!(out.witness.is_some());
        let mono = LinPoly::monomial(&k, 1, k.one()).unwrap();
        let id = LinPoly::identity(&k).unwrap();
        let out = are_equivalent_bruteforce(&mono, &id, 64, true).unwrap();
        assert!(out.filtered && out.witness.is_none());
        let small = FieldCtx::tower_field(2, 3, 3).unwrap();
        let big = LinPoly::monomial(&small, 1, small.one()).unwrap();
        assert!(matches!(aut_group_bruteforce(&big, 64), Err(GroupError::BudgetExceeded { .. })));
    }

    #[test]
    fn weak_equivalence_examples() {
        let k = FieldCtx::tower_field(2, 3, 2).unwrap();
        let a = [k.gen_pow(1), k.one()];
        let b = [k.gen_pow(5), k.one()];
        let v = weak_equiv_family11(&k, &a, 1, &b, 2, 3).unwrap();
        assert!(v.equivalent && v.verified, "{}", v.to_record());
        assert_eq!(v.kind, Some(WeakKind::Minus));
        let v = weak_equiv_family11(&k, &a, 1, &a, 1, 3).unwrap();
        assert!(v.equivalent && v.verified);
        assert_eq!(v.kind, Some(WeakKind::Plus));
        let k5 = FieldCtx::tower_field(2, 5, 2).unwrap();
        let one = [k5.zero(), k5.one()];
        let v = weak_equiv_family11(&k5, &one, 1, &one, 2, 5).unwrap();
        assert!(!v.equivalent && v.by_theorem);
    }

    #[test]
    fn weak_class_counts() {
        assert_eq!(count_weak_classes(3).unwrap(), 1);
        assert_eq!(count_weak_classes(5).unwrap(), 2);
        assert_eq!(count_weak_classes(12).unwrap(), 2);
        assert_eq!(count_weak_classes(2), Err(GroupError::SmallT(2)));
    }

    #[test]
    fn stated_group_orders() {
        let d = quadrinomial_aut_expected(1, 3, 7, 2).unwrap();
        assert_eq!(d.order, 128);
        assert!(quadrinomial_aut_expected(1, 1, 7, 3).is_err());
        let k = FieldCtx::tower_field(3, 5, 2).unwrap();
        let d = lz2_aut_expected(1, 5, 3).unwrap();
        let els = d.elements(&k).unwrap();
        assert_eq!(els.len() as u64, d.order);
        let (one, m1) = (k.one(), k.neg(k.one()));
        let f = LinPoly::from_terms(&k, &[(4, one), (9, one), (1, one), (6, m1)]).unwrap();
        assert!(aut_group_contains(&f, &els));
        assert!(lz2_aut_expected(1, 4, 3).is_err());
    }
}
