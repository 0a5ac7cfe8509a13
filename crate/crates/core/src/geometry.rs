//! `F_q`-subspaces of `F_{q^n} × F_{q^n}` and the linear sets they define
//! in `PG(2t'−1, q^t)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::gf::{FElem, FieldCtx, GfError, SubfieldCoords};
use crate::linalg::RowBasis;
use crate::linpoly::{LinPoly, LinPolyError};
use crate::par;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinPoly(#[from] LinPolyError),
    #[error("basis vectors are F_q-linearly dependent")]
    Dependent,
    #[error("enumeration exceeds the budget: {0}")]
    BudgetExceeded(String),
    #[error("tower mismatch: {0}")]
    TowerMismatch(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// Cap on `q^rank` for enumerating the vectors of a subspace.
pub const MAX_SUBSPACE_SIZE: u64 = 1 << 20;

/// An `F_q`-subspace given by an `F_q`-basis of pairs.
#[derive(Clone)]
pub struct SubspaceFq {
    ctx: FieldCtx,
    basis: Vec<(FElem, FElem)>,
    rows: RowBasis,
    coords: SubfieldCoords,
}

impl fmt::Debug for SubspaceFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self
            .basis
            .iter()
            .map(|&(u, v)| format!("({},{})", self.ctx.fmt_elem(u), self.ctx.fmt_elem(v)))
            .collect();
        write!(f, "SubspaceFq[{}]", b.join(" "))
    }
}

impl SubspaceFq {
    pub fn from_basis(ctx: &FieldCtx, basis: Vec<(FElem, FElem)>) -> Result<SubspaceFq> {
        let coords = SubfieldCoords::new(ctx, 1)?;
        let mut rows = RowBasis::new();
        for &(u, v) in &basis {
            ctx.check(u)?;
            ctx.check(v)?;
            if !rows.insert(ctx, pair_coords(&coords, u.raw(), v.raw())) {
                return Err(GeometryError::Dependent);
            }
        }
        Ok(SubspaceFq { ctx: ctx.clone(), basis, rows, coords })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(FElem, FElem)] {
        &self.basis
    }

    pub fn contains(&self, u: FElem, v: FElem) -> bool {
        self.rows.contains(&self.ctx, &pair_coords(&self.coords, u.raw(), v.raw()))
    }

    /// All vectors, as raw pairs, in `F_q`-combination order.
    pub(crate) fn raw_elements(&self) -> Result<Vec<(u32, u32)>> {
        let q = self.ctx.q() as u64;
        let size = q.checked_pow(self.rank() as u32).filter(|&s| s <= MAX_SUBSPACE_SIZE);
        let size = size.ok_or_else(|| GeometryError::BudgetExceeded(format!("q^{} vectors", self.rank())))?;
        let scalars: Vec<u32> = self.ctx.subfield_elements(1)?.iter().map(|x| x.raw()).collect();
        let ctx = &self.ctx;
        Ok(par::map(0..size, |mut idx| {
            let (mut u, mut v) = (0u32, 0u32);
            for &(bu, bv) in &self.basis {
                let c = scalars[(idx % q) as usize];
                idx /= q;
                u = ctx.raw_add(u, ctx.raw_mul(c, bu.raw()));
                v = ctx.raw_add(v, ctx.raw_mul(c, bv.raw()));
            }
            (u, v)
        }))
    }

    pub fn elements(&self) -> Result<Vec<(FElem, FElem)>> {
        Ok(self.raw_elements()?.into_iter().map(|(u, v)| (self.ctx.wrap(u), self.ctx.wrap(v))).collect())
    }

    /// `dim_{F_q}(U ∩ Z)` for `Z` spanned over `F_{q^t}` by `reps`.
    pub fn intersection_dim(&self, reps: &[(FElem, FElem)], t: u32) -> Result<usize> {
        let ctx = &self.ctx;
        check_divides(t, ctx.n())?;
        let sub_basis: Vec<u32> = subfield_basis(ctx, t)?;
        let mut z = RowBasis::new();
        for &(u, v) in reps {
            for &l in &sub_basis {
                z.insert(ctx, pair_coords(&self.coords, ctx.raw_mul(l, u.raw()), ctx.raw_mul(l, v.raw())));
            }
        }
        let mut sum = z.clone();
        for &(u, v) in &self.basis {
            sum.insert(ctx, pair_coords(&self.coords, u.raw(), v.raw()));
        }
        Ok(self.rank() + z.rank() - sum.rank())
    }
}

fn check_divides(t: u32, n: u32) -> Result<()> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(GfError::NotDivisor { m: t, n }.into());
    }
    Ok(())
}

fn pair_coords(coords: &SubfieldCoords, u: u32, v: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * coords.dim());
    coords.raw_coords(u, &mut out);
    coords.raw_coords(v, &mut out);
    out
}

/// An `F_q`-basis of `F_{q^t}` inside the context.
fn subfield_basis(ctx: &FieldCtx, t: u32) -> Result<Vec<u32>> {
    let coords = SubfieldCoords::new(ctx, 1)?;
    let mut rows = RowBasis::new();
    let mut out = Vec::new();
    for x in ctx.subfield_elements(t)? {
        let mut c = Vec::new();
        coords.raw_coords(x.raw(), &mut c);
        if rows.insert(ctx, c) {
            out.push(x.raw());
        }
        if out.len() == t as usize {
            break;
        }
    }
    Ok(out)
}

/// `U_f = {(x^{q^ℓ}, f(x))}`, with basis `(b^{q^ℓ}, f(b))` over the power
/// basis `b = g^0, …, g^{n−1}`.
pub fn graph_subspace(f: &LinPoly, ell: u32) -> Result<SubspaceFq> {
    let ctx = f.ctx();
    let coords = SubfieldCoords::new(ctx, 1)?;
    let basis = coords
        .basis()
        .into_iter()
        .map(|b| (ctx.frob_q(b, ell), f.eval(b).unwrap()))
        .collect();
    SubspaceFq::from_basis(ctx, basis)
}

// ---------------------------------------------------------------------------
// Projective points over F_{q^t}.

/// A point `⟨(u, v)⟩_{F_{q^t}}`, scaled so that its first nonzero
/// component has the least discrete log in its `F_{q^t}^*`-coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    u: u32,
    v: u32,
}

impl ProjPoint {
    pub fn rep(&self, ctx: &FieldCtx) -> (FElem, FElem) {
        (ctx.wrap(self.u), ctx.wrap(self.v))
    }

    pub fn to_text(&self, ctx: &FieldCtx) -> String {
        format!("({},{})", ctx.fmt_elem(ctx.wrap(self.u)), ctx.fmt_elem(ctx.wrap(self.v)))
    }
}

#[derive(Clone, Copy, Debug)]
struct Canon {
    step: u64,
}

impl Canon {
    fn new(ctx: &FieldCtx, t: u32) -> Canon {
        Canon { step: ctx.subfield_step(t) }
    }

    fn point(&self, ctx: &FieldCtx, u: u32, v: u32) -> ProjPoint {
        let lead = if u != 0 { u } else { v };
        debug_assert!(lead != 0);
        let l = ctx.raw_log(lead) as u64;
        let shift = l - l % self.step;
        let n1 = ctx.size() as u64 - 1;
        let lambda = ctx.raw_exp((n1 - shift) % n1);
        ProjPoint { u: ctx.raw_mul(lambda, u), v: ctx.raw_mul(lambda, v) }
    }
}

pub fn proj_point(ctx: &FieldCtx, u: FElem, v: FElem, t: u32) -> Result<ProjPoint> {
    check_divides(t, ctx.n())?;
    let (u, v) = (ctx.check(u)?, ctx.check(v)?);
    if u.is_zero() && v.is_zero() {
        return Err(GfError::DivisionByZero.into());
    }
    Ok(Canon::new(ctx, t).point(ctx, u.raw(), v.raw()))
}

/// Points of `L_U` with their weights `dim_{F_q}(U ∩ ⟨w⟩_{F_{q^t}})`.
pub fn linear_set_weights(u: &SubspaceFq, t: u32) -> Result<Vec<(ProjPoint, u32)>> {
    let ctx = u.ctx();
    check_divides(t, ctx.n())?;
    let canon = Canon::new(ctx, t);
    let mut counts: HashMap<ProjPoint, u64> = HashMap::new();
    for (a, b) in u.raw_elements()? {
        if a == 0 && b == 0 {
            continue;
        }
        *counts.entry(canon.point(ctx, a, b)).or_default() += 1;
    }
    let q = ctx.q() as u64;
    let mut out: Vec<(ProjPoint, u32)> = counts
        .into_iter()
        .map(|(p, c)| {
            let mut w = 0;
            let mut s = 1;
            while s < c + 1 {
                s *= q;
                w += 1;
            }
            debug_assert_eq!(s, c + 1);
            (p, w)
        })
        .collect();
    out.sort_by_key(|(p, _)| point_key(ctx, p));
    Ok(out)
}

fn point_key(ctx: &FieldCtx, p: &ProjPoint) -> (u32, u32) {
    (ctx.order_key(ctx.wrap(p.u)), ctx.order_key(ctx.wrap(p.v)))
}

pub fn linear_set_points(u: &SubspaceFq, t: u32) -> Result<Vec<ProjPoint>> {
    Ok(linear_set_weights(u, t)?.into_iter().map(|(p, _)| p).collect())
}

/// Whether every point of `L_U` has weight at most one over `F_{q^m}`; the
/// witness is the first point of larger weight.
pub fn is_scattered_subspace(u: &SubspaceFq, m: u32) -> Result<(bool, Option<ProjPoint>)> {
    let ctx = u.ctx();
    check_divides(m, ctx.n())?;
    let elems = u.raw_elements()?;
    let set: HashSet<(u32, u32)> = elems.iter().copied().collect();
    let lambdas: Vec<u32> = {
        let sub = ctx.subfield_elements(m)?;
        sub.into_iter()
            .filter(|&l| !ctx.in_subfield(l, 1).unwrap())
            .map(|l| l.raw())
            .collect()
    };
    let canon = Canon::new(ctx, m);
    let hit = elems.iter().find(|&&(a, b)| {
        (a != 0 || b != 0)
            && lambdas.iter().any(|&l| set.contains(&(ctx.raw_mul(l, a), ctx.raw_mul(l, b))))
    });
    Ok(match hit {
        None => (true, None),
        Some(&(a, b)) => (false, Some(canon.point(ctx, a, b))),
    })
}

/// `dim_{F_q}(U ∩ Z)` where `Z` is the `F_{q^t}`-span of the points.
pub fn weight(u: &SubspaceFq, points: &[ProjPoint], t: u32) -> Result<usize> {
    let reps: Vec<(FElem, FElem)> = points.iter().map(|p| p.rep(u.ctx())).collect();
    u.intersection_dim(&reps, t)
}

// ---------------------------------------------------------------------------
// Lines of PG(3, q^t) and pseudoreguli.

/// A line as its sorted list of `q^t + 1` points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    pub points: Vec<ProjPoint>,
}

impl ProjLine {
    pub fn to_text(&self, ctx: &FieldCtx) -> String {
        format!("{}-{}", self.points[0].to_text(ctx), self.points[1].to_text(ctx))
    }

    pub fn meets(&self, other: &ProjLine) -> bool {
        self.points.iter().any(|p| other.points.binary_search(p).is_ok())
    }
}

/// All points of `PG(F_{q^n}^2, F_{q^t})`, sorted.
pub fn all_points(ctx: &FieldCtx, t: u32) -> Result<Vec<ProjPoint>> {
    check_divides(t, ctx.n())?;
    let canon = Canon::new(ctx, t);
    let size = ctx.size() as u64;
    let mut set: Vec<ProjPoint> = (1..size * size)
        .map(|i| canon.point(ctx, (i / size) as u32, (i % size) as u32))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    set.sort();
    Ok(set)
}

/// The line through two distinct points.
pub fn line_through(ctx: &FieldCtx, t: u32, a: ProjPoint, b: ProjPoint) -> Result<ProjLine> {
    let canon = Canon::new(ctx, t);
    let mut pts = vec![b];
    for mu in ctx.subfield_elements(t)? {
        let m = mu.raw();
        pts.push(canon.point(ctx, ctx.raw_add(a.u, ctx.raw_mul(m, b.u)), ctx.raw_add(a.v, ctx.raw_mul(m, b.v))));
    }
    pts.sort();
    pts.dedup();
    Ok(ProjLine { points: pts })
}

/// All lines of `PG(3, q^t)` (requires `n = 2t`), sorted.
pub fn all_lines(ctx: &FieldCtx, t: u32) -> Result<Vec<ProjLine>> {
    let points = all_points(ctx, t)?;
    let np = points.len() as u64;
    let lines: BTreeSet<ProjLine> = par::flat_map(0..np, |i| {
        let a = points[i as usize];
        let mut out = Vec::new();
        for &b in &points[i as usize + 1..] {
            let l = line_through(ctx, t, a, b).unwrap();
            // Emit each line once: from its two smallest points.
            if l.points[0] == a && l.points[1] == b {
                out.push(l);
            }
        }
        out
    })
    .into_iter()
    .collect();
    Ok(lines.into_iter().collect())
}

/// `[k]_Q`-style count of lines of `PG(3, Q)`.
pub fn pg3_line_count(big_q: u64) -> u64 {
    let q4 = big_q.pow(4);
    (q4 - 1) * (q4 - big_q) / ((big_q * big_q - 1) * (big_q * big_q - big_q))
}

#[derive(Clone, Debug)]
pub struct PseudoregulusReport {
    pub scattered: bool,
    pub points: usize,
    pub m_expected: u64,
    pub m_found: usize,
    pub disjoint: bool,
    pub weight_t_lines: usize,
    pub families: usize,
    pub standard_transversals: bool,
    pub lines: Vec<ProjLine>,
    pub transversals: Vec<ProjLine>,
}

impl PseudoregulusReport {
    pub fn positive(&self) -> bool {
        self.scattered
            && self.m_found as u64 == self.m_expected
            && self.disjoint
            && self.transversals.len() == 2
    }

    pub fn to_record(&self, ctx: &FieldCtx) -> String {
        let lines: Vec<String> = self.lines.iter().map(|l| l.to_text(ctx)).collect();
        let trans: Vec<String> = self.transversals.iter().map(|l| l.to_text(ctx)).collect();
        format!(
            "pseudoregulus={} scattered={} points={} weight_t_lines={} families={} m_expected={} m_found={} disjoint={} standard_transversals={} transversals={} lines=[{}] transversal_lines=[{}]",
            self.positive(),
            self.scattered,
            self.points,
            self.weight_t_lines,
            self.families,
            self.m_expected,
            self.m_found,
            self.disjoint,
            self.standard_transversals,
            self.transversals.len(),
            lines.join(";"),
            trans.join(";")
        )
    }
}

/// Budget on `q^t` for line enumeration.
pub const MAX_LINE_FIELD: u64 = 8;

pub fn pseudoregulus_check(f: &LinPoly, t: u32) -> Result<PseudoregulusReport> {
    pseudoregulus_check_subspace(&graph_subspace(f, 0)?, t)
}

pub fn pseudoregulus_check_with_budget(f: &LinPoly, t: u32, max_qt: u64) -> Result<PseudoregulusReport> {
    pseudoregulus_check_subspace_with_budget(&graph_subspace(f, 0)?, t, max_qt)
}

pub fn pseudoregulus_check_subspace(u: &SubspaceFq, t: u32) -> Result<PseudoregulusReport> {
    pseudoregulus_check_subspace_with_budget(u, t, MAX_LINE_FIELD)
}

/// Pseudoregulus detection for a rank-`n` subspace in `PG(3, q^t)`.
pub fn pseudoregulus_check_subspace_with_budget(u: &SubspaceFq, t: u32, max_qt: u64) -> Result<PseudoregulusReport> {
    let ctx = u.ctx();
    let n = ctx.n();
    if t < 2 || n != 2 * t {
        return Err(GeometryError::TowerMismatch(format!("need t >= 2 and n = 2t, got t = {t}, n = {n}")));
    }
    let q = ctx.q() as u64;
    let qt = q.pow(t);
    if qt > max_qt {
        return Err(GeometryError::BudgetExceeded(format!("line enumeration over F_{qt}")));
    }
    let m_expected = (q.pow(n) - 1) / (qt - 1);
    let (scattered, _) = is_scattered_subspace(u, t)?;
    let weights = linear_set_weights(u, t)?;
    let total: u64 = weights.iter().map(|&(_, w)| q.pow(w) - 1).sum();
    assert_eq!(total, q.pow(u.rank() as u32) - 1, "weight distribution must account for every vector");
    if !scattered {
        return Ok(PseudoregulusReport {
            scattered,
            points: weights.len(),
            m_expected,
            m_found: 0,
            disjoint: false,
            weight_t_lines: 0,
            families: 0,
            standard_transversals: false,
            lines: Vec::new(),
            transversals: Vec::new(),
        });
    }
    assert_eq!(weights.len() as u64, (q.pow(u.rank() as u32) - 1) / (q - 1));
    let point_count: HashMap<ProjPoint, u64> = weights.iter().map(|&(p, w)| (p, q.pow(w) - 1)).collect();
    let lines = all_lines(ctx, t)?;
    assert_eq!(lines.len() as u64, pg3_line_count(qt));
    let target = q.pow(t) - 1;
    let heavy: Vec<ProjLine> = lines
        .iter()
        .filter(|l| l.points.iter().map(|p| point_count.get(p).copied().unwrap_or(0)).sum::<u64>() == target)
        .cloned()
        .collect();
    let outside: Vec<&ProjLine> =
        lines.iter().filter(|l| l.points.iter().all(|p| !point_count.contains_key(p))).collect();
    let standard = standard_transversals(ctx, t)?;
    let mut families = 0usize;
    let mut best: Option<(Vec<ProjLine>, Vec<ProjLine>)> = None;
    let mut found_standard = false;
    exact_covers(&weights.iter().map(|&(p, _)| p).collect::<Vec<_>>(), &heavy, MAX_FAMILIES, &mut |family| {
        families += 1;
        let trans: Vec<ProjLine> = outside
            .iter()
            .filter(|l| family.iter().all(|h| l.meets(h)))
            .map(|&l| l.clone())
            .collect();
        if trans.len() == 2 {
            let is_standard = trans == standard;
            if best.is_none() || is_standard {
                best = Some((family.to_vec(), trans));
            }
            if is_standard {
                found_standard = true;
                return false;
            }
        }
        true
    });
    let (lines, transversals, disjoint) = match best {
        Some((l, t)) => (l, t, true),
        None => (Vec::new(), Vec::new(), false),
    };
    Ok(PseudoregulusReport {
        scattered,
        points: weights.len(),
        m_expected,
        m_found: lines.len(),
        disjoint,
        weight_t_lines: heavy.len(),
        families,
        standard_transversals: found_standard,
        lines,
        transversals,
    })
}

/// Cap on the number of candidate line families examined.
pub const MAX_FAMILIES: usize = 1 << 16;

/// `PG(U_1)` and `PG(U_2)` for `U_1 = F × {0}` and `U_2 = {0} × F`, sorted.
pub fn standard_transversals(ctx: &FieldCtx, t: u32) -> Result<Vec<ProjLine>> {
    let canon = Canon::new(ctx, t);
    let g = ctx.gen_pow(1).raw();
    let t1 = line_through(ctx, t, canon.point(ctx, 1, 0), canon.point(ctx, g, 0))?;
    let t2 = line_through(ctx, t, canon.point(ctx, 0, 1), canon.point(ctx, 0, g))?;
    let mut v = vec![t1, t2];
    v.sort();
    Ok(v)
}

/// Calls `visit` on every partition of `points` into lines from `lines`,
/// until it returns `false` or `cap` partitions were seen.
fn exact_covers(points: &[ProjPoint], lines: &[ProjLine], cap: usize, visit: &mut dyn FnMut(&[ProjLine]) -> bool) {
    let index: HashMap<ProjPoint, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let members: Vec<Vec<usize>> = lines
        .iter()
        .map(|l| l.points.iter().filter_map(|p| index.get(p).copied()).collect())
        .collect();
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (li, m) in members.iter().enumerate() {
        for &p in m {
            through[p].push(li);
        }
    }
    struct St<'a> {
        lines: &'a [ProjLine],
        members: Vec<Vec<usize>>,
        through: Vec<Vec<usize>>,
        covered: Vec<bool>,
        chosen: Vec<ProjLine>,
        seen: usize,
        cap: usize,
    }
    fn go(st: &mut St, visit: &mut dyn FnMut(&[ProjLine]) -> bool) -> bool {
        let Some(p) = st.covered.iter().position(|&c| !c) else {
            st.seen += 1;
            return visit(&st.chosen) && st.seen < st.cap;
        };
        for k in 0..st.through[p].len() {
            let li = st.through[p][k];
            if st.members[li].iter().any(|&x| st.covered[x]) {
                continue;
            }
            for i in 0..st.members[li].len() {
                let x = st.members[li][i];
                st.covered[x] = true;
            }
            st.chosen.push(st.lines[li].clone());
            let go_on = go(st, visit);
            st.chosen.pop();
            for i in 0..st.members[li].len() {
                let x = st.members[li][i];
                st.covered[x] = false;
            }
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut st = St { lines, members, through, covered: vec![false; points.len()], chosen: Vec::new(), seen: 0, cap };
    go(&mut st, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldCtx {
        FieldCtx::tower_field(2, 2, 2).unwrap()
    }

    #[test]
    fn graph_subspace_examples() {
        let k = f16();
        let zero = LinPoly::zero(&k).unwrap();
        let u = graph_subspace(&zero, 0).unwrap();
        assert_eq!(u.rank(), 4);
        for x in k.elements() {
            assert!(u.contains(x, k.zero()));
        }
        let id = LinPoly::identity(&k).unwrap();
        let u = graph_subspace(&id, 0).unwrap();
        for x in k.elements() {
            assert!(u.contains(x, x));
        }
        assert!(!u.contains(k.one(), k.zero()));
        let f = LinPoly::parse(&k, "1:g^2,3:g^0").unwrap();
        for ell in 0..4 {
            let u = graph_subspace(&f, ell).unwrap();
            for a in k.elements() {
                for b in k.elements() {
                    let inside = b == f.eval(k.frob_q(a, 4 - ell)).unwrap();
                    assert_eq!(u.contains(a, b), inside);
                }
            }
        }
    }

    #[test]
    fn scattered_subspace_examples() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^0").unwrap();
        assert!(is_scattered_subspace(&graph_subspace(&f, 0).unwrap(), 2).unwrap().0);
        let sub: Vec<FElem> = k.subfield_elements(2).unwrap();
        let b = vec![(k.one(), k.one()), (sub[2], sub[2])];
        let u = SubspaceFq::from_basis(&k, b).unwrap();
        assert!(!is_scattered_subspace(&u, 2).unwrap().0);
        let bad = LinPoly::parse(&k, "0:g^0,2:g^0").unwrap();
        let (ok, w) = is_scattered_subspace(&graph_subspace(&bad, 0).unwrap(), 2).unwrap();
        assert!(!ok && w.is_some());
    }

    #[test]
    fn point_counts_and_weights() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^1,3:g^0").unwrap();
        let u = graph_subspace(&f, 0).unwrap();
        let pts = linear_set_points(&u, 2).unwrap();
        assert_eq!(pts.len(), 15);
        let single = SubspaceFq::from_basis(&k, vec![(k.one(), k.gen_pow(3))]).unwrap();
        assert_eq!(linear_set_points(&single, 2).unwrap().len(), 1);
        assert_eq!(weight(&u, &pts[..1], 2).unwrap(), 1);
        let outside = all_points(&k, 2).unwrap().into_iter().find(|p| !pts.contains(p)).unwrap();
        assert_eq!(weight(&u, &[outside], 2).unwrap(), 0);
    }

    #[test]
    fn pg3_over_f4_has_357_lines() {
        let k = f16();
        assert_eq!(all_points(&k, 2).unwrap().len(), 85);
        assert_eq!(all_lines(&k, 2).unwrap().len(), 357);
        assert_eq!(pg3_line_count(4), 357);
    }

    #[test]
    fn pseudoregulus_positive_and_negative() {
        let k = f16();
        let f = LinPoly::parse(&k, "1:g^1,3:g^0").unwrap();
        let r = pseudoregulus_check(&f, 2).unwrap();
        assert!(r.positive(), "{}", r.to_record(&k));
        assert_eq!(r.m_found, 5);
        let u = graph_subspace(&f, 0).unwrap();
        for line in &r.lines {
            assert_eq!(weight(&u, &line.points[..2], 2).unwrap(), 2);
        }
        assert!(r.standard_transversals);
        assert_eq!(r.transversals, standard_transversals(&k, 2).unwrap());
        for (i, a) in r.lines.iter().enumerate() {
            assert!(r.lines[i + 1..].iter().all(|b| !a.meets(b)));
        }
        let bad = LinPoly::parse(&k, "1:g^0,3:g^0").unwrap();
        assert!(!pseudoregulus_check(&bad, 2).unwrap().positive());
    }
}
