//! Named verification suites with pinned sizes, tolerances and time budgets.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{self, count_r_partial_form11, form11_count_formula, monomial_status};
use crate::geometry::{graph_subspace, is_scattered_subspace, pseudoregulus_check};
use crate::gf::{FElem, FieldCtx};
use crate::groups::{self, aut_group_bruteforce, aut_group_contains, is_group_sampled};
use crate::linpoly::LinPoly;
use crate::par;
use crate::scatter::{
    check_l_degree_bound, check_l_inequality, criterion_report, oracle_report, LShape, Property,
};

pub const DEFAULT_SEED: u64 = 20_211_018;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// `expected == got` on counts.
    fn count(name: impl Into<String>, expected: u64, got: u64) -> Check {
        Check::new(name, expected == got, format!("expected={expected} got={got}"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub criterion: u32,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl SuiteResult {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && !self.checks.is_empty() && self.checks.iter().all(|c| c.passed) && self.within_budget()
    }

    /// One line per check, then a summary record.
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .map(|c| format!("  [{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
            .collect();
        if let Some(e) = &self.error {
            out.push(format!("  [FAIL] error: {e}"));
        }
        out.push(self.summary());
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "suite={} criterion={} status={} checks={}/{} elapsed_ms={} budget_ms={}",
            self.name,
            self.criterion,
            if self.passed() { "pass" } else { "fail" },
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.elapsed.as_millis(),
            self.budget.as_millis()
        )
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

type SuiteFn = fn(&SuiteConfig) -> Result<Vec<Check>, String>;

pub struct Suite {
    pub name: &'static str,
    pub criterion: u32,
    pub budget: Duration,
    pub description: &'static str,
    run: SuiteFn,
}

impl Suite {
    pub fn run(&self, cfg: &SuiteConfig) -> SuiteResult {
        let start = Instant::now();
        let (checks, error) = match (self.run)(cfg) {
            Ok(c) => (c, None),
            Err(e) => (Vec::new(), Some(e)),
        };
        SuiteResult {
            name: self.name,
            criterion: self.criterion,
            checks,
            error,
            elapsed: start.elapsed(),
            budget: self.budget,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "criterion-equivalence",
        criterion: 1,
        budget: secs(10),
        description: "criterion agrees with the oracle on all a x^q + b x^(q^3) over F_16, t=2",
        run: criterion_equivalence,
    },
    Suite {
        name: "monomials",
        criterion: 2,
        budget: secs(30),
        description: "oracle verdicts on x^(q^u) equal the gcd conditions",
        run: monomials,
    },
    Suite {
        name: "form11-counts",
        criterion: 3,
        budget: secs(120),
        description: "invertible g_a counts equal the product formula; members pass the R-criterion",
        run: form11_counts,
    },
    Suite {
        name: "binomial-norm",
        criterion: 4,
        budget: secs(30),
        description: "norm condition for x^(q^(kt+s)) + alpha x^(q^s) agrees with the oracle",
        run: binomial_norm,
    },
    Suite {
        name: "trinomial",
        criterion: 5,
        budget: secs(120),
        description: "norm/trace expression agrees with the criterion on all trinomials over F_64",
        run: trinomial,
    },
    Suite {
        name: "geometric-equivalence",
        criterion: 6,
        budget: secs(120),
        description: "R-partial iff U_f is scattered over F_(q^t)",
        run: geometric_equivalence,
    },
    Suite {
        name: "adjoint",
        criterion: 7,
        budget: secs(60),
        description: "L and R statuses are preserved by the adjoint",
        run: adjoint,
    },
    Suite {
        name: "lp-odd",
        criterion: 8,
        budget: secs(60),
        description: "LP polynomials over F_512 with norm 1 are neither L- nor R-partial at t=3",
        run: lp_odd,
    },
    Suite {
        name: "lp-scattered-count",
        criterion: 9,
        budget: secs(60),
        description: "scattered LP polynomials over F_81 are exactly those with N(delta) != 1",
        run: lp_scattered_count,
    },
    Suite {
        name: "pseudoregulus",
        criterion: 10,
        budget: secs(120),
        description: "R-partial sums a_i x^(q^(2i+1)) give linear sets of pseudoregulus type in PG(3,4)",
        run: pseudoregulus,
    },
    Suite {
        name: "automorphism-groups",
        criterion: 11,
        budget: secs(900),
        description: "diagonal subgroup containment; full group of a binomial over F_64",
        run: automorphism_groups,
    },
    Suite {
        name: "weak-equivalence",
        criterion: 12,
        budget: secs(60),
        description: "constructed maps send U_f onto U_g for s=1, s'=2 over F_64, t=3",
        run: weak_equivalence,
    },
    Suite {
        name: "necessary-conditions",
        criterion: 13,
        budget: secs(120),
        description: "L-partial polynomials over F_16 satisfy the degree bound and the inequality",
        run: necessary_conditions,
    },
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteResult> {
    find_suite(name).map(|s| s.run(cfg))
}

// ---------------------------------------------------------------------------
// Helpers.

fn e<E: fmt::Display>(err: E) -> String {
    err.to_string()
}

fn field(q: u64, t: u32, tp: u32) -> Result<FieldCtx, String> {
    FieldCtx::tower_field(q, t, tp).map_err(e)
}

/// Nonzero polynomial with one to three terms, exponents below `n` and
/// nonzero coefficients.
pub fn random_poly(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> LinPoly {
    let n = ctx.n();
    let size = ctx.size();
    loop {
        let terms: Vec<(u32, FElem)> = (0..rng.gen_range(1..=3))
            .map(|_| (rng.gen_range(0..n), ctx.from_raw(rng.gen_range(1..size)).unwrap()))
            .collect();
        let f = LinPoly::from_terms(ctx, &terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn rng_for(cfg: &SuiteConfig, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    rng
}

/// All `a x^q + b x^{q^3}` over `F_16`.
fn f16_binomials(ctx: &FieldCtx) -> Vec<LinPoly> {
    let els: Vec<FElem> = ctx.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            out.push(LinPoly::from_terms(ctx, &[(1, a), (3, b)]).unwrap());
        }
    }
    out
}

/// `(label, f, ctx)` for `f = Σ a_i x^{q^{it+s}}` with `g_a` invertible (or
/// not), drawn from the seeded stream.
fn seeded_form11(
    ctx: &FieldCtx,
    rng: &mut ChaCha8Rng,
    s: u32,
    t: u32,
    want_invertible: bool,
    count: usize,
) -> Vec<(Vec<FElem>, LinPoly)> {
    let tp = (ctx.n() / t) as usize;
    let mut out = Vec::new();
    while out.len() < count {
        let a: Vec<FElem> = (0..tp).map(|_| ctx.from_raw(rng.gen_range(0..ctx.size())).unwrap()).collect();
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        if families::family11_is_r_partial(ctx, &a, s, t).unwrap() == want_invertible {
            let f = families::family11(ctx, &a, s, t).unwrap();
            out.push((a, f));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Suites.

fn criterion_equivalence(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 2, 2)?;
    let polys = f16_binomials(&ctx);
    let mut checks = Vec::new();
    for prop in [Property::LPartial, Property::RPartial, Property::Scattered] {
        let disagreements = par::count(0..polys.len() as u64, |i| {
            let f = &polys[i as usize];
            oracle_report(f, prop, 2, 0).unwrap().holds != criterion_report(f, prop, 2).unwrap().holds
        });
        checks.push(Check::new(
            format!("{prop} over {} binomials", polys.len()),
            disagreements == 0,
            format!("disagreements={disagreements}"),
        ));
    }
    Ok(checks)
}

fn monomials(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    for q in [2u64, 3] {
        for n in [4u32, 6] {
            let mut mismatches = Vec::new();
            let mut cases = 0;
            for t in (1..=n).filter(|t| n % t == 0) {
                let ctx = field(q, t, n / t)?;
                for u in 1..n {
                    let f = LinPoly::monomial(&ctx, u, ctx.one()).map_err(e)?;
                    let st = monomial_status(u, n, t).map_err(e)?;
                    let got = [
                        oracle_report(&f, Property::LPartial, t, 0).map_err(e)?.holds,
                        oracle_report(&f, Property::RPartial, t, 0).map_err(e)?.holds,
                        oracle_report(&f, Property::Scattered, t, 0).map_err(e)?.holds,
                    ];
                    cases += 1;
                    if got != [st.l_partial, st.r_partial, st.scattered] {
                        mismatches.push(format!("u={u},t={t}"));
                    }
                }
            }
            checks.push(Check::new(
                format!("q={q} n={n}"),
                mismatches.is_empty(),
                format!("cases={cases} mismatches=[{}]", mismatches.join(" ")),
            ));
        }
    }
    Ok(checks)
}

fn form11_counts(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    for (q, t, tp, expected) in [(2u64, 2u32, 2u32, 180u64), (3, 2, 2, 5760), (2, 3, 2, 3528), (2, 2, 3, 181_440)] {
        let formula = form11_count_formula(q, t, tp);
        let c = count_r_partial_form11(q, t, tp, families::DEFAULT_ENUM_BUDGET, true).map_err(e)?;
        let enumerated = c.enumerated.unwrap_or(0);
        let failures = c.criterion_failures.unwrap_or(u64::MAX);
        checks.push(Check::new(
            format!("(q,t,t')=({q},{t},{tp})"),
            formula == expected.into() && enumerated == expected && failures == 0,
            format!("formula={formula} enumerated={enumerated} expected={expected} criterion_failures={failures}"),
        ));
    }
    Ok(checks)
}

fn binomial_norm(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    for (q, t, tp, k, s, expected) in [(2u64, 2u32, 2u32, 1u32, 1u32, Some(10u64)), (2, 3, 2, 1, 1, None)] {
        let ctx = field(q, t, tp)?;
        let mut holds = 0;
        let mut disagreements = 0;
        let mut total = 0;
        for alpha in ctx.nonzero() {
            let (by_norm, _) = families::binomial_is_r_partial(&ctx, alpha, k, s, t).map_err(e)?;
            let f = families::binomial(&ctx, alpha, k, s, t).map_err(e)?;
            let oracle = oracle_report(&f, Property::RPartial, t, 0).map_err(e)?.holds;
            total += 1;
            holds += by_norm as u64;
            disagreements += (by_norm != oracle) as u64;
        }
        let n = t * tp;
        let count_ok = expected.is_none_or(|x| x == holds);
        checks.push(Check::new(
            format!("(q,n,t,k,s)=({q},{n},{t},{k},{s})"),
            count_ok && disagreements == 0,
            format!(
                "alphas={total} r_partial={holds}{} disagreements={disagreements}",
                expected.map_or(String::new(), |x| format!(" expected={x}"))
            ),
        ));
    }
    Ok(checks)
}

fn trinomial(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 2, 3)?;
    let size = ctx.size() as u64;
    let disagreements = par::count(0..size * size, |i| {
        let alpha = ctx.from_raw((i / size) as u32).unwrap();
        let beta = ctx.from_raw((i % size) as u32).unwrap();
        let by_expr = families::trinomial_is_r_partial(&ctx, alpha, beta, 1, 2).unwrap();
        let f = families::trinomial(&ctx, alpha, beta, 1, 2).unwrap();
        by_expr != criterion_report(&f, Property::RPartial, 2).unwrap().holds
    });
    Ok(vec![Check::new(
        format!("{} pairs (alpha, beta) over F_64, t=2", size * size),
        disagreements == 0,
        format!("disagreements={disagreements}"),
    )])
}

fn geometric_agrees(f: &LinPoly, t: u32) -> bool {
    let r = oracle_report(f, Property::RPartial, t, 0).unwrap().holds;
    let u = graph_subspace(f, 0).unwrap();
    r == is_scattered_subspace(&u, t).unwrap().0
}

fn geometric_equivalence(cfg: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    let ctx = field(2, 2, 2)?;
    let polys = f16_binomials(&ctx);
    let bad = par::count(0..polys.len() as u64, |i| !geometric_agrees(&polys[i as usize], 2));
    checks.push(Check::new("F_16 binomials, t=2", bad == 0, format!("polys={} disagreements={bad}", polys.len())));
    for (t, tp, stream) in [(2u32, 3u32, 61u64), (3, 2, 62)] {
        let ctx = field(2, t, tp)?;
        let mut rng = rng_for(cfg, stream);
        let polys: Vec<LinPoly> = (0..100).map(|_| random_poly(&ctx, &mut rng)).collect();
        let bad = par::count(0..polys.len() as u64, |i| !geometric_agrees(&polys[i as usize], t));
        checks.push(Check::new(
            format!("100 random over F_64, t={t}"),
            bad == 0,
            format!("disagreements={bad}"),
        ));
    }
    Ok(checks)
}

fn adjoint_agrees(f: &LinPoly, t: u32) -> bool {
    let g = f.adjoint();
    [Property::LPartial, Property::RPartial]
        .iter()
        .all(|&p| oracle_report(f, p, t, 0).unwrap().holds == oracle_report(&g, p, t, 0).unwrap().holds)
}

fn adjoint(cfg: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    let ctx = field(2, 2, 2)?;
    let polys = f16_binomials(&ctx);
    let bad = par::count(0..polys.len() as u64, |i| !adjoint_agrees(&polys[i as usize], 2));
    checks.push(Check::new("F_16 binomials, t=2", bad == 0, format!("polys={} disagreements={bad}", polys.len())));
    let mut rng = rng_for(cfg, 71);
    let ctx2 = field(2, 2, 3)?;
    let ctx3 = field(2, 3, 2)?;
    let polys: Vec<LinPoly> = (0..200).map(|_| random_poly(&ctx2, &mut rng)).collect();
    let bad = par::count(0..200, |i| {
        let f = &polys[i as usize];
        let f3 = LinPoly::new(&ctx3, f.coeffs().iter().map(|c| ctx3.from_raw(c.raw()).unwrap()).collect()).unwrap();
        !adjoint_agrees(f, 2) || !adjoint_agrees(&f3, 3)
    });
    checks.push(Check::new("200 random over F_64, t in {2,3}", bad == 0, format!("disagreements={bad}")));
    Ok(checks)
}

fn lp_odd(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 3, 3)?;
    let deltas: Vec<FElem> = ctx.nonzero().collect();
    let ok = par::count(0..deltas.len() as u64, |i| {
        let d = deltas[i as usize];
        let f = families::lp_poly(&ctx, d, 1).unwrap();
        let predicted = families::lp_status_odd_n(&ctx, d, 1, 3).unwrap() == (Some(false), Some(false));
        predicted
            && !criterion_report(&f, Property::LPartial, 3).unwrap().holds
            && !criterion_report(&f, Property::RPartial, 3).unwrap().holds
    });
    Ok(vec![Check::new(
        "q=2 n=9 t=3 s=1",
        ok == deltas.len() as u64,
        format!("neither={ok}/{}", deltas.len()),
    )])
}

fn lp_scattered_count(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(3, 2, 2)?;
    let mut by_norm = 0;
    let mut by_oracle = 0;
    let mut disagreements = 0;
    for d in ctx.nonzero() {
        let f = families::lp_poly(&ctx, d, 1).map_err(e)?;
        let a = families::lp_scattered_by_norm(&ctx, d).map_err(e)?;
        let b = oracle_report(&f, Property::Scattered, 1, 0).map_err(e)?.holds;
        by_norm += a as u64;
        by_oracle += b as u64;
        disagreements += (a != b) as u64;
    }
    Ok(vec![
        Check::count("delta with N(delta) != 1", 40, by_norm),
        Check::count("delta with scattered LP polynomial", 40, by_oracle),
        Check::count("per-delta disagreements", 0, disagreements),
    ])
}

fn pseudoregulus(cfg: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 2, 2)?;
    let mut rng = rng_for(cfg, 101);
    let positives = seeded_form11(&ctx, &mut rng, 1, 2, true, 20);
    let negatives = seeded_form11(&ctx, &mut rng, 1, 2, false, 5);
    let mut good = 0;
    let mut failures = Vec::new();
    for (a, f) in &positives {
        let r = pseudoregulus_check(f, 2).map_err(e)?;
        let ok = r.positive() && r.m_found == 5 && r.disjoint && r.transversals.len() == 2 && r.points == 15;
        if ok {
            good += 1;
        } else {
            let a: Vec<String> = a.iter().map(|&x| ctx.fmt_elem(x)).collect();
            failures.push(format!("a=({}) {}", a.join(","), r.to_record(&ctx)));
        }
    }
    let neg_ok = negatives.iter().filter(|(_, f)| !pseudoregulus_check(f, 2).unwrap().positive()).count();
    Ok(vec![
        Check::new(
            "R-partial members: 5 disjoint weight-2 lines, 2 transversals",
            good == positives.len(),
            format!("positive={good}/{} {}", positives.len(), failures.join(" | ")),
        ),
        Check::new(
            "non-R-partial members: negative",
            neg_ok == negatives.len(),
            format!("negative={neg_ok}/{}", negatives.len()),
        ),
    ])
}

fn automorphism_groups(cfg: &SuiteConfig) -> Result<Vec<Check>, String> {
    let mut checks = Vec::new();
    let mut rng = rng_for(cfg, 111);
    for (t, tp) in [(2u32, 2u32), (2, 3), (3, 2)] {
        let ctx = field(2, t, tp)?;
        let diag = groups::family11_group(2, t, 1).elements(&ctx).map_err(e)?;
        let members = seeded_form11(&ctx, &mut rng, 1, t, true, 20);
        let contained = members.iter().filter(|(_, f)| aut_group_contains(f, &diag)).count();
        let mut detail = format!("contained={contained}/{} subgroup_order={}", members.len(), diag.len());
        let mut ok = contained == members.len() && diag.len() as u64 == (1 << t) - 1;
        if ctx.size() <= 16 {
            let min = members
                .iter()
                .map(|(_, f)| aut_group_bruteforce(f, groups::DEFAULT_GL_BUDGET).unwrap().len())
                .min()
                .unwrap_or(0);
            ok &= min as u64 >= (1 << t) - 1;
            detail.push_str(&format!(" min_bruteforce_order={min}"));
        }
        checks.push(Check::new(format!("diagonal subgroup, (q,t,t')=(2,{t},{tp})"), ok, detail));
    }
    let ctx = field(2, 2, 3)?;
    let (k, s, t) = (2, 1, 2);
    let alpha = ctx
        .nonzero()
        .find(|&a| families::binomial_is_r_partial(&ctx, a, k, s, t).unwrap().0)
        .ok_or("no alpha passes the norm condition")?;
    let f = families::binomial(&ctx, alpha, k, s, t).map_err(e)?;
    let g = aut_group_bruteforce(&f, groups::DEFAULT_GL_BUDGET).map_err(e)?;
    let expected = groups::binomial_group(2, t, 3, k, s);
    let stated = expected.elements(&ctx).map_err(e)?;
    let same = stated.len() == g.len() && stated.iter().all(|m| g.contains(m.matrix()));
    checks.push(Check::new(
        "full group of x^(q^5) + alpha x^q over F_64",
        g.len() == 3 && same && is_group_sampled(&ctx, &g, 3),
        format!("alpha={} order={} expected={} equal_to_stated={same}", ctx.fmt_elem(alpha), g.len(), expected.order),
    ));
    Ok(checks)
}

fn weak_equivalence(cfg: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 3, 2)?;
    let mut rng = rng_for(cfg, 121);
    let fs = seeded_form11(&ctx, &mut rng, 1, 3, true, 10);
    let gs = seeded_form11(&ctx, &mut rng, 2, 3, true, 10);
    let mut verified = 0;
    for ((a, _), (b, _)) in fs.iter().zip(&gs) {
        let v = groups::weak_equiv_family11(&ctx, a, 1, b, 2, 3).map_err(e)?;
        if v.equivalent && v.verified && !v.by_theorem {
            verified += 1;
        }
    }
    Ok(vec![Check::count("verified witnesses for s=1, s'=2", 10, verified)])
}

fn necessary_conditions(_: &SuiteConfig) -> Result<Vec<Check>, String> {
    let ctx = field(2, 2, 2)?;
    let (q, n, t) = (2u64, 4u32, 2u32);
    let els: Vec<FElem> = ctx.elements().collect();
    let mut found = Vec::new();
    for k in 1..=3u32 {
        let free = (k - 1) as usize;
        let combos = (els.len() as u64).pow(free as u32);
        for idx in 0..combos {
            let mut rest = idx;
            let mut terms = vec![(k, ctx.one())];
            for j in 1..k {
                terms.push((j, els[(rest % els.len() as u64) as usize]));
                rest /= els.len() as u64;
            }
            let f = LinPoly::from_terms(&ctx, &terms).map_err(e)?;
            if f.is_monomial() {
                continue;
            }
            if oracle_report(&f, Property::LPartial, t, 0).map_err(e)?.holds {
                found.push((k, f));
            }
        }
    }
    let mut violations = Vec::new();
    for (k, f) in &found {
        let v = f.min_exp().unwrap();
        let bound = check_l_degree_bound(n, *k, t, 0);
        let ineq = check_l_inequality(q, n, *k, t, 0, v, LShape::General).map_err(e)?;
        if !bound || !ineq {
            violations.push(format!("{} (k={k} v={v} bound={bound} inequality={ineq})", f.to_text()));
        }
    }
    let by_k: Vec<String> =
        (1..=3).map(|k| format!("k{k}={}", found.iter().filter(|(kk, _)| *kk == k).count())).collect();
    Ok(vec![Check::new(
        "non-monomial 0-normalized L-partial over F_16, t=2, k<=3",
        violations.is_empty(),
        format!("found={} [{}] violations={} {}", found.len(), by_k.join(" "), violations.len(), violations.join("; ")),
    )])
}
