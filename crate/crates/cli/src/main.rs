use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use partscat::families::{self, FamilyError, FamilySpec};
use partscat::geometry::{self, GeometryError};
use partscat::gf::{FElem, FieldCtx, FieldSpec, GfError};
use partscat::groups::{self, GroupError, Mat2};
use partscat::linpoly::{LinPoly, LinPolyError};
use partscat::par;
use partscat::scatter::{self, LShape, Method, Property, ScatterError};
use partscat::suites::{self, SuiteConfig, SuiteResult, DEFAULT_SEED};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<LinPolyError> for CliError {
    fn from(e: LinPolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ScatterError> for CliError {
    fn from(e: ScatterError) -> Self {
        match e {
            ScatterError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            FamilyError::Scatter(inner) => inner.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            GroupError::Family(inner) => inner.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    General,
    Linear,
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Form11,
    Binomial,
    Trinomial,
    Lp,
    Monomial,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Field as p^d, optionally /c0,c1,...  (ascending modulus coefficients).
    #[arg(long, global = true, env = "PARTSCAT_FIELD")]
    field: Option<String>,
    /// Tower q,t,t' with n = t*t'.
    #[arg(long, global = true, env = "PARTSCAT_TOWER", default_value = "2,2,2")]
    tower: String,
    #[arg(long, global = true, env = "PARTSCAT_FORMAT", value_enum, default_value_t = Format::Records)]
    format: Format,
    #[arg(long, global = true, env = "PARTSCAT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest field order handed to an exhaustive oracle.
    #[arg(long, global = true, env = "PARTSCAT_BUDGET_ORACLE", default_value_t = 1 << 20,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_oracle: u64,
    /// Largest q^(nm) built by an exceptionality probe.
    #[arg(long, global = true, env = "PARTSCAT_BUDGET_PROBE", default_value_t = scatter::DEFAULT_PROBE_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_probe: u64,
    /// Largest q^n for GL(2, q^n) brute force.
    #[arg(long, global = true, env = "PARTSCAT_BUDGET_GL", default_value_t = groups::DEFAULT_GL_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_gl: u64,
    /// Largest q^t for line enumeration.
    #[arg(long, global = true, env = "PARTSCAT_BUDGET_LINES", default_value_t = geometry::MAX_LINE_FIELD,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_lines: u64,
    /// Largest number of coefficient vectors enumerated.
    #[arg(long, global = true, env = "PARTSCAT_BUDGET_ENUM", default_value_t = families::DEFAULT_ENUM_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget_enum: u64,
    /// Run without the thread pool.
    #[arg(long, global = true, env = "PARTSCAT_SEQUENTIAL")]
    sequential: bool,
}

#[derive(Parser, Debug)]
#[command(name = "partscat", version, about = "Partially scattered linearized polynomials")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct PolyArg {
    /// Terms "i:elem,..." or a family "kind(param=value,...)".
    #[arg(long, env = "PARTSCAT_POLY")]
    poly: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide scattered / L / R for one polynomial.
    Test {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "scattered", env = "PARTSCAT_PROPERTY")]
        property: String,
        #[arg(long, env = "PARTSCAT_T")]
        t: Option<u32>,
        #[arg(long, default_value_t = 0, env = "PARTSCAT_ELL")]
        ell: u32,
        #[arg(long, default_value = "oracle", env = "PARTSCAT_METHOD")]
        method: String,
    },
    /// Stream every member of a family with its verdicts.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// Run an acceptance suite by name, "all", or "list".
    Verify { suite: String },
    /// Criterion verdicts over extensions F_(q^(nm)).
    Probe {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "R")]
        property: String,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, default_value = "1,2", env = "PARTSCAT_M_LIST")]
        m_list: String,
    },
    /// ell-normal form.
    Normalize {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 0)]
        ell: u32,
    },
    Adjoint {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Linear automorphism group by brute force over GL(2, q^n).
    Aut {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Semilinear equivalence of U_f and U_g by brute force.
    Equiv {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        other: String,
        /// Compare automorphism group orders first.
        #[arg(long)]
        order_filter: bool,
    },
    /// Weak equivalence of two polynomials sum a_i x^(q^(it+s)).
    WeakEquiv {
        /// Coefficients a_0|a_1|...
        #[arg(long)]
        a: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        b: String,
        #[arg(long)]
        s2: u32,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Pseudoregulus detection in PG(3, q^t) for n = 2t.
    Pseudoregulus {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Count of invertible g_a against the product formula.
    Count {
        #[arg(long)]
        check_members: bool,
    },
    /// Point-count inequality and degree bound for L-partial polynomials.
    Bound {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, default_value_t = 0)]
        v: u32,
        #[arg(long, value_enum, default_value_t = Shape::General)]
        shape: Shape,
    },
}

struct Out {
    format: Format,
    lines: Vec<String>,
}

impl Out {
    fn push(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn render(&self) -> String {
        let mut s = String::new();
        for line in &self.lines {
            match self.format {
                Format::Records => {
                    s.push_str(line);
                    s.push('\n');
                }
                Format::Table => s.push_str(&table(line)),
            }
        }
        s
    }
}

/// A record `k=v k=v ...` as aligned rows; other lines pass through.
fn table(line: &str) -> String {
    let pairs: Vec<(&str, &str)> = line.split_whitespace().filter_map(|tok| tok.split_once('=')).collect();
    if pairs.is_empty() || pairs.len() != line.split_whitespace().count() {
        return format!("{line}\n");
    }
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in pairs {
        s.push_str(&format!("{k:<width$}  {v}\n"));
    }
    s.push('\n');
    s
}

fn parse_tower(s: &str) -> Result<(u64, u32, u32)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("tower {s:?} is not q,t,t'"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let q = parts[0].parse().map_err(|_| bad())?;
    let t = parts[1].parse().map_err(|_| bad())?;
    let tp = parts[2].parse().map_err(|_| bad())?;
    Ok((q, t, tp))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad integer list {s:?}"))))
        .collect()
}

impl RunConfig {
    fn ctx(&self) -> Result<FieldCtx> {
        let (q, t, tp) = parse_tower(&self.tower)?;
        match &self.field {
            Some(f) => {
                let spec: FieldSpec = f.parse()?;
                Ok(spec.build()?.with_tower(q, t, tp)?)
            }
            None => Ok(FieldCtx::tower_field(q, t, tp)?),
        }
    }

    fn tower_t(&self, t: Option<u32>) -> Result<u32> {
        match t {
            Some(t) => Ok(t),
            None => Ok(parse_tower(&self.tower)?.1),
        }
    }

    fn check_oracle(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.size() as u64 > self.budget_oracle {
            return Err(CliError::Budget(format!(
                "field of order {} exceeds the oracle budget {}",
                ctx.size(),
                self.budget_oracle
            )));
        }
        Ok(())
    }

    fn check_enum(&self, size: u128) -> Result<()> {
        if size > self.budget_enum as u128 {
            return Err(CliError::Budget(format!("{size} members exceed the enumeration budget {}", self.budget_enum)));
        }
        Ok(())
    }
}

fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<LinPoly> {
    if s.contains('(') {
        let spec: FamilySpec = s.parse()?;
        Ok(spec.build(ctx)?)
    } else {
        Ok(LinPoly::parse(ctx, s)?)
    }
}

fn parse_elems(ctx: &FieldCtx, s: &str) -> Result<Vec<FElem>> {
    s.split('|').map(|x| Ok(ctx.parse_elem(x.trim())?)).collect()
}

fn fmt_mat(ctx: &FieldCtx, m: &Mat2) -> String {
    format!(
        "[[{},{}],[{},{}]]",
        ctx.fmt_elem(m[0][0]),
        ctx.fmt_elem(m[0][1]),
        ctx.fmt_elem(m[1][0]),
        ctx.fmt_elem(m[1][1])
    )
}

fn field_record(ctx: &FieldCtx) -> String {
    let tw = ctx.tower().expect("contexts built here carry a tower");
    format!("field={}^{} q={} t={} tprime={}", ctx.p(), ctx.d(), tw.q, tw.t, tw.t_prime)
}

fn keep(filter: Filter, positive: bool) -> bool {
    match filter {
        Filter::All => true,
        Filter::Positive => positive,
        Filter::Negative => !positive,
    }
}

fn status(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn cmd_test(
    cfg: &RunConfig,
    out: &mut Out,
    poly: &str,
    property: &str,
    t: Option<u32>,
    ell: u32,
    method: &str,
) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let f = parse_poly(&ctx, poly)?;
    let prop: Property = property.parse()?;
    let method: Method = method.parse()?;
    let t = cfg.tower_t(t)?;
    let report = match method {
        Method::Oracle => {
            cfg.check_oracle(&ctx)?;
            scatter::oracle_report(&f, prop, t, ell)?
        }
        Method::Naive => {
            cfg.check_oracle(&ctx)?;
            scatter::naive_oracle(&f, prop, t, ell)?
        }
        Method::Criterion => {
            if ell != 0 {
                return Err(CliError::Usage("the criterion method works at --ell 0".into()));
            }
            scatter::criterion_report(&f, prop, t)?
        }
        Method::Curve => {
            if prop != Property::LPartial {
                return Err(CliError::Usage("the curve method decides the L property only".into()));
            }
            cfg.check_oracle(&ctx)?;
            scatter::l_partial_via_curve(&f, t, ell)?
        }
    };
    out.push(format!("{} poly={} {}", field_record(&ctx), f.to_text(), report.to_record(&ctx)));
    Ok(status(report.holds))
}

fn cmd_enumerate(cfg: &RunConfig, out: &mut Out, kind: Kind, t: Option<u32>, s: u32, k: u32, filter: Filter) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let tw = ctx.tower().expect("tower declared");
    let t = cfg.tower_t(t)?;
    let n = tw.n;
    let size = ctx.size() as u64;
    out.push(field_record(&ctx));
    let mut disagreements = 0u64;
    let mut positive = 0u64;
    let mut members = 0u64;
    match kind {
        Kind::Form11 => {
            let len = tw.t_prime;
            let space = (size as u128).checked_pow(len).unwrap_or(u128::MAX);
            cfg.check_enum(space)?;
            families::family11(&ctx, &vec![ctx.one(); len as usize], s, t)?;
            let rows = par::map(0..space as u64, |idx| {
                let mut i = idx;
                let a: Vec<FElem> = (0..len)
                    .map(|_| {
                        let r = (i % size) as u32;
                        i /= size;
                        ctx.from_raw(r).unwrap()
                    })
                    .collect();
                if a.iter().all(|x| x.is_zero()) {
                    return (a, false, false);
                }
                let inv = families::g_a(&ctx, &a, t).unwrap().is_invertible();
                let f = families::family11(&ctx, &a, s, t).unwrap();
                let crit = scatter::is_r_partial_criterion(&f, t).unwrap().holds;
                (a, inv, crit)
            });
            for (a, inv, crit) in rows {
                members += 1;
                positive += crit as u64;
                disagreements += (inv != crit) as u64;
                if keep(filter, crit) {
                    let a: Vec<String> = a.iter().map(|&x| ctx.fmt_elem(x)).collect();
                    out.push(format!("kind=form11 a={} s={s} t={t} invertible={inv} r_partial={crit}", a.join("|")));
                }
            }
            let formula = families::form11_count_formula(tw.q as u64, t, tw.t_prime);
            out.push(format!(
                "summary kind=form11 members={members} r_partial={positive} formula={formula} disagreements={disagreements}"
            ));
        }
        Kind::Binomial => {
            families::binomial(&ctx, ctx.one(), k, s, t)?;
            cfg.check_enum(size as u128)?;
            for alpha in ctx.nonzero() {
                let (norm, _) = families::binomial_is_r_partial(&ctx, alpha, k, s, t)?;
                let f = families::binomial(&ctx, alpha, k, s, t)?;
                let crit = scatter::is_r_partial_criterion(&f, t)?.holds;
                members += 1;
                positive += norm as u64;
                disagreements += (norm != crit) as u64;
                if keep(filter, norm) {
                    out.push(format!(
                        "kind=binomial alpha={} k={k} s={s} t={t} norm_condition={norm} r_partial={crit}",
                        ctx.fmt_elem(alpha)
                    ));
                }
            }
            out.push(format!(
                "summary kind=binomial members={members} r_partial={positive} disagreements={disagreements}"
            ));
        }
        Kind::Trinomial => {
            families::trinomial(&ctx, ctx.one(), ctx.one(), s, t)?;
            cfg.check_enum((size as u128) * (size as u128))?;
            let pairs: Vec<(FElem, FElem)> = ctx.nonzero().flat_map(|a| ctx.elements().map(move |b| (a, b))).collect();
            let rows = par::map(0..pairs.len() as u64, |i| {
                let (a, b) = pairs[i as usize];
                let expr = families::trinomial_is_r_partial(&ctx, a, b, s, t).unwrap();
                let f = families::trinomial(&ctx, a, b, s, t).unwrap();
                (a, b, expr, scatter::is_r_partial_criterion(&f, t).unwrap().holds)
            });
            for (a, b, expr, crit) in rows {
                members += 1;
                positive += expr as u64;
                disagreements += (expr != crit) as u64;
                if keep(filter, expr) {
                    out.push(format!(
                        "kind=trinomial alpha={} beta={} s={s} t={t} expression_nonzero={expr} r_partial={crit}",
                        ctx.fmt_elem(a),
                        ctx.fmt_elem(b)
                    ));
                }
            }
            out.push(format!(
                "summary kind=trinomial members={members} r_partial={positive} disagreements={disagreements}"
            ));
        }
        Kind::Lp => {
            cfg.check_oracle(&ctx)?;
            for delta in ctx.nonzero() {
                let norm = families::lp_scattered_by_norm(&ctx, delta)?;
                let (l, r) = families::lp_status_odd_n(&ctx, delta, s, t)?;
                let f = families::lp_poly(&ctx, delta, s)?;
                let scat = scatter::oracle_report(&f, Property::Scattered, t, 0)?.holds;
                let l_or = scatter::oracle_report(&f, Property::LPartial, t, 0)?.holds;
                let r_or = scatter::oracle_report(&f, Property::RPartial, t, 0)?.holds;
                let agree = norm == scat && l.is_none_or(|v| v == l_or) && r.is_none_or(|v| v == r_or);
                members += 1;
                positive += scat as u64;
                disagreements += !agree as u64;
                if keep(filter, scat) {
                    let show = |v: Option<bool>| v.map_or("open".to_string(), |b| b.to_string());
                    out.push(format!(
                        "kind=lp delta={} s={s} t={t} norm_condition={norm} scattered={scat} l_predicted={} l_partial={l_or} r_predicted={} r_partial={r_or}",
                        ctx.fmt_elem(delta),
                        show(l),
                        show(r)
                    ));
                }
            }
            out.push(format!(
                "summary kind=lp members={members} scattered={positive} disagreements={disagreements}"
            ));
        }
        Kind::Monomial => {
            cfg.check_oracle(&ctx)?;
            for u in 1..n {
                let st = families::monomial_status(u, n, t)?;
                let f = LinPoly::monomial(&ctx, u, ctx.one())?;
                let l = scatter::oracle_report(&f, Property::LPartial, t, 0)?.holds;
                let r = scatter::oracle_report(&f, Property::RPartial, t, 0)?.holds;
                let sc = scatter::oracle_report(&f, Property::Scattered, t, 0)?.holds;
                let agree = (l, r, sc) == (st.l_partial, st.r_partial, st.scattered);
                members += 1;
                positive += sc as u64;
                disagreements += !agree as u64;
                if keep(filter, sc) {
                    out.push(format!(
                        "kind=monomial u={u} t={t} l_predicted={} l_partial={l} r_predicted={} r_partial={r} scattered_predicted={} scattered={sc}",
                        st.l_partial, st.r_partial, st.scattered
                    ));
                }
            }
            out.push(format!(
                "summary kind=monomial members={members} scattered={positive} disagreements={disagreements}"
            ));
        }
    }
    Ok(status(disagreements == 0))
}

fn suite_summary(r: &SuiteResult) -> String {
    format!(
        "suite={} criterion={} status={} checks={}/{} within_budget={}",
        r.name,
        r.criterion,
        if r.passed() { "pass" } else { "fail" },
        r.checks.iter().filter(|c| c.passed).count(),
        r.checks.len(),
        r.within_budget()
    )
}

fn cmd_verify(cfg: &RunConfig, out: &mut Out, name: &str) -> Result<u8> {
    if name == "list" {
        for s in suites::SUITES {
            out.push(format!("suite={} criterion={} budget_ms={}", s.name, s.criterion, s.budget.as_millis()));
        }
        return Ok(0);
    }
    let chosen: Vec<_> = if name == "all" {
        suites::SUITES.iter().collect()
    } else {
        vec![suites::find_suite(name).ok_or_else(|| CliError::Usage(format!("unknown suite {name:?}")))?]
    };
    let scfg = SuiteConfig { seed: cfg.seed };
    let mut all = true;
    for s in chosen {
        let r = s.run(&scfg);
        eprintln!("suite={} elapsed_ms={} budget_ms={}", r.name, r.elapsed.as_millis(), r.budget.as_millis());
        for c in &r.checks {
            out.push(format!("  [{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
        }
        if let Some(e) = &r.error {
            out.push(format!("  [FAIL] error: {e}"));
        }
        out.push(suite_summary(&r));
        all &= r.passed();
    }
    Ok(status(all))
}

fn cmd_probe(cfg: &RunConfig, out: &mut Out, poly: &str, property: &str, t: Option<u32>, m_list: &str) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let f = parse_poly(&ctx, poly)?;
    let prop: Property = property.parse()?;
    let t = cfg.tower_t(t)?;
    let ms = parse_u32_list(m_list)?;
    let verdicts = scatter::exceptionality_probe(&f, t, prop, &ms, cfg.budget_probe)?;
    for v in &verdicts {
        out.push(format!("poly={} {}", f.to_text(), v.to_record(prop, t)));
    }
    Ok(status(verdicts.iter().all(|v| v.holds)))
}

fn cmd_aut(cfg: &RunConfig, out: &mut Out, poly: &str) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let f = parse_poly(&ctx, poly)?;
    let mats = groups::aut_group_bruteforce(&f, cfg.budget_gl)?;
    out.push(format!("{} poly={} order={}", field_record(&ctx), f.to_text(), mats.len()));
    for m in &mats {
        out.push(format!("element={}", fmt_mat(&ctx, m)));
    }
    Ok(0)
}

fn cmd_equiv(cfg: &RunConfig, out: &mut Out, poly: &str, other: &str, order_filter: bool) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let f = parse_poly(&ctx, poly)?;
    let g = parse_poly(&ctx, other)?;
    let r = groups::are_equivalent_bruteforce(&f, &g, cfg.budget_gl, order_filter)?;
    out.push(format!("f={} g={} {}", f.to_text(), g.to_text(), r.to_record()));
    Ok(status(r.witness.is_some()))
}

fn cmd_weak(cfg: &RunConfig, out: &mut Out, a: &str, s: u32, b: &str, s2: u32, t: Option<u32>) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let t = cfg.tower_t(t)?;
    let a = parse_elems(&ctx, a)?;
    let b = parse_elems(&ctx, b)?;
    let v = groups::weak_equiv_family11(&ctx, &a, s, &b, s2, t)?;
    out.push(format!("s={s} s2={s2} t={t} {}", v.to_record()));
    Ok(status(v.equivalent && (v.by_theorem || v.verified)))
}

fn cmd_pseudoregulus(cfg: &RunConfig, out: &mut Out, poly: &str, t: Option<u32>) -> Result<u8> {
    let ctx = cfg.ctx()?;
    let f = parse_poly(&ctx, poly)?;
    let t = cfg.tower_t(t)?;
    let r = geometry::pseudoregulus_check_with_budget(&f, t, cfg.budget_lines)?;
    out.push(format!("poly={} t={t} {}", f.to_text(), r.to_record(&ctx)));
    Ok(status(r.positive()))
}

fn cmd_count(cfg: &RunConfig, out: &mut Out, check_members: bool) -> Result<u8> {
    let (q, t, tp) = parse_tower(&cfg.tower)?;
    let c = families::count_r_partial_form11(q, t, tp, cfg.budget_enum, check_members)?;
    let show = |v: Option<u64>| v.map_or("none".to_string(), |x| x.to_string());
    let ok = c.enumerated.map(|e| e.to_string()) == Some(c.formula.to_string()) && c.criterion_failures.unwrap_or(0) == 0;
    out.push(format!(
        "q={q} t={t} tprime={tp} formula={} enumerated={} criterion_failures={} match={ok}",
        c.formula,
        show(c.enumerated),
        show(c.criterion_failures)
    ));
    Ok(status(ok))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bound(out: &mut Out, q: u64, n: u32, k: u32, t: u32, ell: u32, v: u32, shape: Shape) -> Result<u8> {
    let shape = match shape {
        Shape::General => LShape::General,
        Shape::Linear => LShape::WithLinearTerm,
        Shape::Sparse => LShape::Sparse,
    };
    let ineq = scatter::check_l_inequality(q, n, k, t, ell, v, shape)?;
    let deg = scatter::check_l_degree_bound(n, k, t, ell);
    out.push(format!("q={q} n={n} k={k} t={t} ell={ell} v={v} inequality={ineq} degree_bound={deg}"));
    Ok(status(ineq && deg))
}

fn run(cli: &Cli, out: &mut Out) -> Result<u8> {
    let cfg = &cli.cfg;
    match &cli.cmd {
        Command::Test { poly, property, t, ell, method } => cmd_test(cfg, out, &poly.poly, property, *t, *ell, method),
        Command::Enumerate { kind, t, s, k, filter } => cmd_enumerate(cfg, out, *kind, *t, *s, *k, *filter),
        Command::Verify { suite } => cmd_verify(cfg, out, suite),
        Command::Probe { poly, property, t, m_list } => cmd_probe(cfg, out, &poly.poly, property, *t, m_list),
        Command::Normalize { poly, ell } => {
            let ctx = cfg.ctx()?;
            let f = parse_poly(&ctx, &poly.poly)?;
            let (g, new_ell) = f.normalize(*ell)?;
            out.push(format!("poly={} ell={ell} normalized={} normalized_ell={new_ell}", f.to_text(), g.to_text()));
            Ok(0)
        }
        Command::Adjoint { poly } => {
            let ctx = cfg.ctx()?;
            let f = parse_poly(&ctx, &poly.poly)?;
            out.push(format!("poly={} adjoint={}", f.to_text(), f.adjoint().to_text()));
            Ok(0)
        }
        Command::Aut { poly } => cmd_aut(cfg, out, &poly.poly),
        Command::Equiv { poly, other, order_filter } => cmd_equiv(cfg, out, &poly.poly, other, *order_filter),
        Command::WeakEquiv { a, s, b, s2, t } => cmd_weak(cfg, out, a, *s, b, *s2, *t),
        Command::Pseudoregulus { poly, t } => cmd_pseudoregulus(cfg, out, &poly.poly, *t),
        Command::Count { check_members } => cmd_count(cfg, out, *check_members),
        Command::Bound { q, n, k, t, ell, v, shape } => cmd_bound(out, *q, *n, *k, *t, *ell, *v, *shape),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.cfg.sequential {
        par::set_parallel(false);
    }
    let mut out = Out { format: cli.cfg.format, lines: Vec::new() };
    let start = Instant::now();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            print!("{}", out.render());
            eprintln!("error: {e}");
            return ExitCode::from(e.code());
        }
    };
    print!("{}", out.render());
    if std::env::var_os("PARTSCAT_TIMING").is_some() {
        eprintln!("elapsed_ms={}", start.elapsed().as_millis());
    }
    ExitCode::from(code)
}
