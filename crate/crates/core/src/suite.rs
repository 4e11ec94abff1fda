//! The reproduction table: each row re-derives one published claim on
//! concrete instances. Rows contain only exact data (dimensions, counts,
//! booleans) so two runs produce identical reports; timings are returned
//! separately.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::constructions::*;
use crate::corpus::{self, TriangularEntry};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::slip::{self, SlipOptions};
use crate::zpd::{self, ZpdOptions};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriterionRow {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub passed: bool,
    pub criteria: Vec<CriterionRow>,
}

impl SuiteReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.criteria {
            s += &format!("[{}] {:2}. {}\n", if row.passed { "PASS" } else { "FAIL" }, row.id, row.title);
            for d in &row.details {
                s += &format!("        {d}\n");
            }
        }
        s += &format!("overall: {}\n", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}

struct Ctx {
    slip: SlipOptions,
    zpd: ZpdOptions,
}

impl Ctx {
    fn is_slip(&self, a: &Algebra) -> Result<bool> {
        Ok(slip::is_slip(a, self.slip)?.is_slip)
    }
    fn is_zpd(&self, a: &Algebra) -> Result<bool> {
        Ok(zpd::is_zpd(a, self.zpd)?.is_zpd)
    }
}

fn row(id: u32, title: &str, passed: bool, details: Vec<String>) -> CriterionRow {
    CriterionRow { id, title: title.to_string(), passed, details }
}

fn c1(ctx: &Ctx) -> Result<CriterionRow> {
    let mut ok = true;
    let mut details = Vec::new();
    for p in [2u64, 3, 5] {
        let u = u_dual_numbers(p)?;
        let r = slip::is_slip(&u, ctx.slip)?;
        let witness_ok = match &r.witness {
            Some(w) => slip::lip_check_full(&u, w, 1 << 12)? && !slip::is_left_multiplier(&u, w)?,
            None => false,
        };
        let pass = !r.is_slip && r.lip_dim == 3 && r.multiplier_dim == 2 && witness_ok;
        ok &= pass;
        details.push(format!(
            "U({p}): is_slip={} lip_dim={} multiplier_dim={} witness_verified={witness_ok}",
            r.is_slip, r.lip_dim, r.multiplier_dim
        ));
    }
    Ok(row(1, "U(p) is not SLIP and yields a verified witness", ok, details))
}

fn c2(ctx: &Ctx) -> Result<CriterionRow> {
    let f2 = scalar_field(2)?;
    let cases = [
        ("M2(GF(2))", matn(&f2, 2)?),
        ("M3(GF(2))", matn(&f2, 3)?),
        ("M2(GF(3))", matn(&scalar_field(3)?, 2)?),
        ("M2(U(2))", matn(&u_dual_numbers(2)?, 2)?),
    ];
    let mut ok = true;
    let mut details = Vec::new();
    for (name, a) in cases {
        let (s, z) = (ctx.is_slip(&a)?, ctx.is_zpd(&a)?);
        ok &= s && z;
        details.push(format!("{name}: dim={} is_slip={s} is_zpd={z}", a.dim()));
    }
    Ok(row(2, "matrix algebras are SLIP and zpd", ok, details))
}

struct CorpusFacts {
    slip: Vec<bool>,
    zpd: Vec<bool>,
}

fn c3(facts: &CorpusFacts) -> CriterionRow {
    let n = facts.slip.len();
    let zpd = facts.zpd.iter().filter(|&&z| z).count();
    let slip = facts.slip.iter().filter(|&&s| s).count();
    let bad = facts.zpd.iter().zip(&facts.slip).filter(|(&z, &s)| z && !s).count();
    row(
        3,
        "zpd implies SLIP across the corpus",
        n >= 30 && bad == 0,
        vec![format!("algebras={n} zpd={zpd} slip={slip} zpd_but_not_slip={bad}")],
    )
}

fn c4(ctx: &Ctx) -> Result<CriterionRow> {
    let u = u_dual_numbers(2)?;
    let (t, _) = triangular(&u, &scalar_right_bimodule(&u)?, &scalar_field(2)?)?;
    let (s, z) = (ctx.is_slip(&t)?, ctx.is_zpd(&t)?);
    Ok(row(
        4,
        "Tri(U(2), U(2), GF(2)) is SLIP but not zpd",
        s && !z,
        vec![format!("dim={} is_slip={s} is_zpd={z}", t.dim())],
    ))
}

/// SLIP data for one triangular triple.
struct TriFacts {
    slip_t: bool,
    slip_a: bool,
    slip_b: bool,
    local_b_m: bool,
    ann_zero: bool,
}

fn tri_facts(ctx: &Ctx, e: &TriangularEntry) -> Result<TriFacts> {
    Ok(TriFacts {
        slip_t: ctx.is_slip(&e.t)?,
        slip_a: ctx.is_slip(&e.a)?,
        slip_b: ctx.is_slip(&e.b)?,
        local_b_m: slip::local_equals_multiplier(&e.right_module(), ctx.slip)?,
        ann_zero: e.m.left_annihilator().dim() == 0,
    })
}

fn c5(entries: &[TriangularEntry], facts: &[TriFacts]) -> CriterionRow {
    let mut checked = 0;
    let mut violations = Vec::new();
    for (e, f) in entries.iter().zip(facts) {
        if f.slip_t {
            checked += 1;
            if !(f.slip_b && f.local_b_m) {
                violations.push(format!("violation: {}", e.name));
            }
        }
    }
    let mut details = vec![format!("triangular={} slip={checked} violations={}", entries.len(), violations.len())];
    let ok = violations.is_empty();
    details.extend(violations);
    row(5, "SLIP Tri(A,M,B) forces SLIP B and local = multiplier on M", ok, details)
}

fn c6(ctx: &Ctx, entries: &[TriangularEntry], facts: &[TriFacts]) -> Result<CriterionRow> {
    let mut hyp_ann = 0;
    let mut hyp_slip = 0;
    let mut violations = Vec::new();
    for (e, f) in entries.iter().zip(facts) {
        let by_ann = f.ann_zero && f.slip_b && f.local_b_m;
        let by_slip = f.slip_a && f.slip_b && f.local_b_m;
        hyp_ann += by_ann as usize;
        hyp_slip += by_slip as usize;
        if (by_ann || by_slip) && !f.slip_t {
            violations.push(format!("violation: {}", e.name));
        }
    }
    // Tri(A x A, A, A) with A = M2(GF(2)), dimension 16
    let m2 = matn(&scalar_field(2)?, 2)?;
    let ex = TriangularEntry::new("Tri(M2xM2, M2, M2)", e3_bimodule(&m2)?)?;
    let f = tri_facts(ctx, &ex)?;
    let ex_hyp = f.slip_a && f.slip_b && f.local_b_m;
    let ex_ok = ex_hyp && f.slip_t && !f.ann_zero;
    let mut details = vec![
        format!(
            "triples meeting l.ann=0 hypotheses={hyp_ann} meeting SLIP-A hypotheses={hyp_slip} violations={}",
            violations.len()
        ),
        format!(
            "Tri(M2(GF(2))xM2(GF(2)), M2(GF(2)), M2(GF(2))): dim={} hypotheses={ex_hyp} l.ann_zero={} is_slip={}",
            ex.t.dim(),
            f.ann_zero,
            f.slip_t
        ),
    ];
    let ok = violations.is_empty() && ex_ok;
    details.extend(violations);
    Ok(row(6, "either sufficient hypothesis set yields SLIP Tri(A,M,B)", ok, details))
}

fn c7(ctx: &Ctx) -> Result<CriterionRow> {
    let m2 = matn(&scalar_field(2)?, 2)?;
    let u = u_dual_numbers(2)?;
    let m = mixed_bimodule(&m2, &u)?;
    let (t, _) = triangular(m.left(), &m, &m2)?;
    let s = ctx.is_slip(&t)?;
    let ann = m.left_annihilator();
    let ab = m.left();
    let expected =
        Subspace::from_spanning(ab.field(), ab.dim(), &(4..6).map(|i| ab.basis_vector(i)).collect::<Vec<_>>())?;
    let ann_ok = ann == expected;
    Ok(row(
        7,
        "Tri(M2(GF(2)) x U(2), M2(GF(2)), M2(GF(2))) is not SLIP",
        !s && ann_ok,
        vec![format!("dim={} is_slip={s} l.ann_dim={} l.ann_equals_0xB={ann_ok}", t.dim(), ann.dim())],
    ))
}

fn c8(ctx: &Ctx) -> Result<CriterionRow> {
    let u = u_dual_numbers(2)?;
    let f2 = scalar_field(2)?;
    let cases = [("U(2)", &u, vec![1, 2], true), ("U(2)", &u, vec![2, 1], false), ("GF(2)", &f2, vec![2, 1], true)];
    let mut ok = true;
    let mut details = Vec::new();
    for (name, base, kbar, expected) in cases {
        let shape = BlockShape::new(kbar)?;
        let (b, _) = block_upper(base, &shape)?;
        let s = ctx.is_slip(&b)?;
        ok &= s == expected;
        details.push(format!("B3{shape}({name}): dim={} is_slip={s} expected={expected}", b.dim()));
    }
    Ok(row(8, "block upper triangular algebras", ok, details))
}

fn c9(ctx: &Ctx) -> Result<CriterionRow> {
    let mut ok = true;
    let mut details = Vec::new();
    for (name, a) in [("GF(2)", scalar_field(2)?), ("GF(3)", scalar_field(3)?), ("U(2)", u_dual_numbers(2)?)] {
        let base = ctx.is_slip(&a)?;
        for n in [2, 3] {
            let s = ctx.is_slip(&tn(&a, n)?)?;
            ok &= s == base;
            details.push(format!("T{n}({name}): is_slip={s} base_is_slip={base}"));
        }
    }
    Ok(row(9, "T_n(A) is SLIP exactly when A is", ok, details))
}

fn c10(ctx: &Ctx, entries: &[TriangularEntry]) -> Result<CriterionRow> {
    let mut maps = 0;
    let mut failures = Vec::new();
    let mut violations = 0;
    for e in entries {
        let dec = slip::TriangularDecomposer::new(&e.t, &e.e, ctx.slip)?;
        for psi in slip::lip_space(&e.t, ctx.slip)?.space.basis() {
            maps += 1;
            match dec.decompose(&psi) {
                Ok(d) if d.all_passed() => {}
                Ok(_) => failures.push(format!("check failed: {}", e.name)),
                Err(crate::Error::BlockStructureViolated { .. }) => {
                    violations += 1;
                    failures.push(format!("block structure violated: {}", e.name));
                }
                Err(err) => return Err(err),
            }
        }
    }
    let mut details = vec![format!(
        "triangular={} lip_basis_maps={maps} block_violations={violations} failures={}",
        entries.len(),
        failures.len()
    )];
    let ok = failures.is_empty();
    details.extend(failures);
    Ok(row(10, "LIP maps on Tri(A,M,B) have the four-block form", ok, details))
}

/// Corpus algebras small enough for the left-ideal lattice oracle.
pub fn oracle_scale(a: &Algebra) -> bool {
    a.dim() <= 6 && a.field().power_count(a.dim()).is_some_and(|n| n <= 1 << 10)
}

fn c11(ctx: &Ctx, algebras: &[corpus::Entry]) -> Result<CriterionRow> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for entry in algebras.iter().filter(|e| oracle_scale(&e.algebra)) {
        checked += 1;
        let a = &entry.algebra;
        let d = a.dim();
        let lip = slip::lip_space(a, SlipOptions { early_stop: false, ..ctx.slip })?.space;
        let full = slip::lip_space(a, SlipOptions { early_stop: false, projective: false, ..ctx.slip })?.space;
        let lattice = slip::lattice_lip_space(a, 1 << 20)?;
        let mut agree = lip == full && lip == lattice;
        for r in 0..d {
            for s in 0..d {
                let mut data = vec![0; d * d];
                data[r * d + s] = 1;
                let psi = slip::LinearMap::from_vectorized(a.field(), d, d, &data)?;
                agree &= lip.contains(&psi)? == slip::lip_check_full(a, &psi, 1 << 20)?;
            }
        }
        for psi in lip.basis() {
            agree &= slip::lip_check_full(a, &psi, 1 << 20)?;
        }
        if !agree {
            mismatches.push(format!("mismatch: {}", entry.name));
        }
    }
    let mut details = vec![format!("algebras={checked} mismatches={}", mismatches.len())];
    let ok = checked > 0 && mismatches.is_empty();
    details.extend(mismatches);
    Ok(row(11, "principal-ideal constraints match the left-ideal lattice", ok, details))
}

fn c12(ctx: &Ctx) -> Result<CriterionRow> {
    let mut ok = true;
    let mut details = Vec::new();
    for (name, x) in corpus::endomorphism_pairs()? {
        let end = x.endomorphism_algebra()?;
        let (t, _) = triangular(&end.algebra, &end.bimodule, x.base())?;
        let lhs = ctx.is_slip(&t)?;
        let rhs = ctx.is_slip(x.base())? && slip::local_equals_multiplier(&x, ctx.slip)?;
        ok &= lhs == rhs;
        details.push(format!(
            "{name}: End dim={} Tri is_slip={lhs} B SLIP and local=multiplier: {rhs}",
            end.algebra.dim()
        ));
    }
    Ok(row(12, "Tri(End_B(M), M, B) is SLIP iff B is and local = multiplier", ok, details))
}

fn c13(ctx: &Ctx) -> Result<CriterionRow> {
    let mut ok = true;
    let mut details = Vec::new();
    for (name, a) in [("GF(2)", scalar_field(2)?), ("M2(GF(2))", matn(&scalar_field(2)?, 2)?)] {
        for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let x = matrix_right_module(&a, r, s)?;
            let eq = slip::local_equals_multiplier(&x, ctx.slip)?;
            ok &= eq;
            details.push(format!("{name} into M{r}x{s}: local=multiplier {eq}"));
        }
    }
    Ok(row(13, "local multipliers into M_rxs(A) over SLIP A", ok, details))
}

/// Runs every row. The second component holds per-row wall times.
pub fn run_suite(slip_opts: SlipOptions) -> Result<(SuiteReport, Vec<Duration>)> {
    let ctx = Ctx { slip: slip_opts, zpd: ZpdOptions { cap: slip_opts.cap, early_stop: slip_opts.early_stop } };
    let mut rows = Vec::new();
    let mut times = Vec::new();
    let mut timed = |f: &mut dyn FnMut() -> Result<CriterionRow>| -> Result<()> {
        let start = Instant::now();
        rows.push(f()?);
        times.push(start.elapsed());
        Ok(())
    };
    let algebras = corpus::algebras()?;
    let entries = corpus::triangular_entries()?;
    timed(&mut || c1(&ctx))?;
    timed(&mut || c2(&ctx))?;
    timed(&mut || {
        let facts = CorpusFacts {
            slip: algebras.iter().map(|e| ctx.is_slip(&e.algebra)).collect::<Result<_>>()?,
            zpd: algebras.iter().map(|e| ctx.is_zpd(&e.algebra)).collect::<Result<_>>()?,
        };
        Ok(c3(&facts))
    })?;
    timed(&mut || c4(&ctx))?;
    let tri: Vec<TriFacts> = entries.iter().map(|e| tri_facts(&ctx, e)).collect::<Result<_>>()?;
    timed(&mut || Ok(c5(&entries, &tri)))?;
    timed(&mut || c6(&ctx, &entries, &tri))?;
    timed(&mut || c7(&ctx))?;
    timed(&mut || c8(&ctx))?;
    timed(&mut || c9(&ctx))?;
    timed(&mut || c10(&ctx, &entries))?;
    timed(&mut || c11(&ctx, &algebras))?;
    timed(&mut || c12(&ctx))?;
    timed(&mut || c13(&ctx))?;
    let passed = rows.iter().all(|r| r.passed);
    Ok((SuiteReport { passed, criteria: rows }, times))
}
