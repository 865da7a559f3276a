//! Subcommand implementations and their payloads.

use std::fmt::Write as _;

use frobkit_core::{
    apery_table, build_family, denumerant, enumerate_representations, frobenius_report, g_star,
    g_star_via_reduction, n_star, n_star_via_reduction, tripathi_g0, verify_theorem1,
    FrobError, Generators, SAperyTable, SearchConfig, Theorem1Report,
};
use serde::Serialize;

use crate::output::{exacts, join, Exact, Payload, Style, Table};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn exact_u128(v: u128) -> Result<Exact, FrobError> {
    i128::try_from(v)
        .map(Exact)
        .map_err(|_| FrobError::Overflow("count"))
}

#[derive(Serialize)]
pub struct ResidueRow {
    pub residue: Exact,
    pub n_js: Exact,
}

fn residue_rows(table: &SAperyTable) -> Vec<ResidueRow> {
    table
        .entries()
        .iter()
        .enumerate()
        .map(|(j, &n)| ResidueRow {
            residue: j.into(),
            n_js: n.into(),
        })
        .collect()
}

fn residue_csv(rows: &[ResidueRow]) -> Table {
    Table {
        header: vec!["residue", "n_js"],
        rows: rows
            .iter()
            .map(|r| vec![r.residue.to_string(), r.n_js.to_string()])
            .collect(),
    }
}

fn residue_text(out: &mut String, rows: &[ResidueRow]) {
    for r in rows {
        let _ = writeln!(out, "  j = {:>4}  n_j,s = {}", r.residue, r.n_js);
    }
}

// ---------------------------------------------------------------- denumerant

#[derive(Serialize)]
pub struct DenumerantInputs {
    pub gens: Vec<Exact>,
    pub x: Exact,
    pub enumerate: bool,
    pub cap: Exact,
}

#[derive(Serialize)]
pub struct DenumerantResult {
    pub count: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representations: Option<Vec<Vec<Exact>>>,
}

pub fn cmd_denumerant(
    gens: &Generators,
    x: u64,
    enumerate: bool,
    cap: u64,
) -> Result<DenumerantResult, FrobError> {
    let count = exact_u128(denumerant::<u128>(x, gens)?)?;
    let representations = if enumerate {
        let reps = enumerate_representations(x, gens, cap)?;
        Some(reps.iter().map(|r| exacts(&r.coeffs)).collect())
    } else {
        None
    };
    Ok(DenumerantResult {
        count,
        representations,
    })
}

impl Payload for DenumerantResult {
    fn text(&self, out: &mut String, _style: Style) {
        let _ = writeln!(out, "representations: {}", self.count);
        for r in self.representations.iter().flatten() {
            let _ = writeln!(out, "  ({})", join(r, ", "));
        }
    }

    fn csv(&self) -> Table {
        match &self.representations {
            None => Table {
                header: vec!["count"],
                rows: vec![vec![self.count.to_string()]],
            },
            Some(reps) => Table {
                header: vec!["index", "coefficients"],
                rows: reps
                    .iter()
                    .enumerate()
                    .map(|(i, r)| vec![i.to_string(), join(r, " ")])
                    .collect(),
            },
        }
    }
}

// ---------------------------------------------------------------- frobenius

#[derive(Serialize)]
pub struct FrobeniusInputs {
    pub gens: Vec<Exact>,
    pub s: Exact,
    pub modulus_index: Option<Exact>,
    pub ceiling: Option<Exact>,
    pub table: bool,
}

#[derive(Serialize)]
pub struct FrobeniusResult {
    pub modulus_index: Exact,
    pub modulus: Exact,
    pub g_star: Exact,
    pub g_exact: Option<Exact>,
    pub n_star: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<ResidueRow>>,
}

pub fn cmd_frobenius(
    gens: &Generators,
    s: u64,
    config: &SearchConfig,
    with_table: bool,
) -> Result<FrobeniusResult, FrobError> {
    let report = frobenius_report(gens, s, config)?;
    Ok(FrobeniusResult {
        modulus_index: report.table.modulus_index().into(),
        modulus: report.table.modulus().into(),
        g_star: report.g_star.into(),
        g_exact: report.g_exact.map(Exact::from),
        n_star: report.n_star.into(),
        table: with_table.then(|| residue_rows(&report.table)),
    })
}

impl Payload for FrobeniusResult {
    fn text(&self, out: &mut String, _style: Style) {
        let g_exact = self
            .g_exact
            .map_or_else(|| "none".to_string(), |g| g.to_string());
        let _ = writeln!(out, "g*_s = {}", self.g_star);
        let _ = writeln!(out, "g_s  = {g_exact}");
        let _ = writeln!(out, "n*_s = {}", self.n_star);
        if let Some(rows) = &self.table {
            let _ = writeln!(out, "residues mod {}:", self.modulus);
            residue_text(out, rows);
        }
    }

    fn csv(&self) -> Table {
        match &self.table {
            Some(rows) => residue_csv(rows),
            None => Table {
                header: vec!["g_star", "g_exact", "n_star"],
                rows: vec![vec![
                    self.g_star.to_string(),
                    self.g_exact.map(|g| g.to_string()).unwrap_or_default(),
                    self.n_star.to_string(),
                ]],
            },
        }
    }
}

// ---------------------------------------------------------------- apery

#[derive(Serialize)]
pub struct AperyInputs {
    pub gens: Vec<Exact>,
    pub s: Exact,
    pub modulus_index: Option<Exact>,
    pub ceiling: Option<Exact>,
}

#[derive(Serialize)]
pub struct AperyResult {
    pub modulus_index: Exact,
    pub modulus: Exact,
    pub entries: Vec<ResidueRow>,
    pub g_star: Exact,
    pub n_star: Exact,
}

pub fn cmd_apery(gens: &Generators, s: u64, config: &SearchConfig) -> Result<AperyResult, FrobError> {
    let table = frobkit_core::apery_table_with(gens, s, config)?;
    Ok(AperyResult {
        modulus_index: table.modulus_index().into(),
        modulus: table.modulus().into(),
        entries: residue_rows(&table),
        g_star: table.g_star()?.into(),
        n_star: table.n_star()?.into(),
    })
}

impl Payload for AperyResult {
    fn text(&self, out: &mut String, _style: Style) {
        let _ = writeln!(out, "residues mod {}:", self.modulus);
        residue_text(out, &self.entries);
        let _ = writeln!(out, "g*_s = {}", self.g_star);
        let _ = writeln!(out, "n*_s = {}", self.n_star);
    }

    fn csv(&self) -> Table {
        residue_csv(&self.entries)
    }
}

// ---------------------------------------------------------------- family

#[derive(Serialize)]
pub struct FamilyInputs {
    pub base: Vec<Exact>,
    pub t_max: Exact,
}

#[derive(Serialize)]
pub struct ClaimVerdicts {
    pub count: &'static str,
    pub canonical: &'static str,
    pub window: &'static str,
}

#[derive(Serialize)]
pub struct FamilyRow {
    pub t: Exact,
    pub value: Exact,
    pub expected_count: Exact,
    pub actual_count: Exact,
    pub canonical_ok: bool,
    pub window_min_count: Exact,
    pub window_bound: Exact,
    pub verdict: ClaimVerdicts,
}

impl From<&Theorem1Report> for FamilyRow {
    fn from(r: &Theorem1Report) -> Self {
        FamilyRow {
            t: r.t.into(),
            value: r.value.into(),
            expected_count: r.expected_count.into(),
            actual_count: r.actual_count.into(),
            canonical_ok: r.canonical_ok,
            window_min_count: r.window_min_count.into(),
            window_bound: r.window_bound.into(),
            verdict: ClaimVerdicts {
                count: verdict(r.count_ok()),
                canonical: verdict(r.canonical_ok),
                window: verdict(r.window_ok()),
            },
        }
    }
}

#[derive(Serialize)]
pub struct G0Check {
    pub closed_form: Exact,
    pub computed: Exact,
    pub verdict: &'static str,
}

#[derive(Serialize)]
pub struct FamilyResult {
    pub pi: Exact,
    pub generators: Vec<Exact>,
    pub sigma: Exact,
    /// Bases containing 1 are reported on but not asserted.
    pub degenerate: bool,
    pub tripathi_g0: G0Check,
    pub reports: Vec<FamilyRow>,
    pub verdict: &'static str,
}

impl FamilyResult {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

pub fn cmd_family(base: &Generators, t_max: u32) -> Result<FamilyResult, FrobError> {
    let family = build_family(base)?;
    let closed = tripathi_g0(&family);
    let computed = g_star(family.generators(), 0)?;
    let mut ok = closed == computed;
    let mut reports = Vec::new();
    for t in 1..=t_max {
        let report = verify_theorem1(&family, t)?;
        ok &= report.holds();
        reports.push(FamilyRow::from(&report));
    }
    Ok(FamilyResult {
        pi: family.pi().into(),
        generators: exacts(family.a()),
        sigma: family.sigma().into(),
        degenerate: family.is_degenerate(),
        tripathi_g0: G0Check {
            closed_form: closed.into(),
            computed: computed.into(),
            verdict: verdict(closed == computed),
        },
        reports,
        verdict: verdict(ok),
    })
}

impl Payload for FamilyResult {
    fn text(&self, out: &mut String, style: Style) {
        let _ = writeln!(
            out,
            "Π = {}, A = ({}), Σ = {}",
            self.pi,
            join(&self.generators, ", "),
            self.sigma
        );
        let _ = writeln!(
            out,
            "g_0 = (k-1)Π - Σ = {} (computed {})  {}",
            self.tripathi_g0.closed_form,
            self.tripathi_g0.computed,
            style.verdict(self.tripathi_g0.verdict == "pass")
        );
        for r in &self.reports {
            let _ = writeln!(
                out,
                "t = {}: value {}  count {}/{} {}  canonical {}  window min {} >= {} {}",
                r.t,
                r.value,
                r.actual_count,
                r.expected_count,
                style.verdict(r.verdict.count == "pass"),
                style.verdict(r.verdict.canonical == "pass"),
                r.window_min_count,
                r.window_bound,
                style.verdict(r.verdict.window == "pass"),
            );
        }
        if self.degenerate {
            let _ = writeln!(out, "base contains 1: results reported, not asserted");
        }
        let _ = writeln!(out, "overall: {}", style.verdict(self.passed()));
    }

    fn csv(&self) -> Table {
        Table {
            header: vec![
                "t",
                "value",
                "expected_count",
                "actual_count",
                "canonical_ok",
                "window_min_count",
                "window_bound",
                "verdict",
            ],
            rows: self
                .reports
                .iter()
                .map(|r| {
                    let ok = [r.verdict.count, r.verdict.canonical, r.verdict.window]
                        .iter()
                        .all(|v| *v == "pass");
                    vec![
                        r.t.to_string(),
                        r.value.to_string(),
                        r.expected_count.to_string(),
                        r.actual_count.to_string(),
                        r.canonical_ok.to_string(),
                        r.window_min_count.to_string(),
                        r.window_bound.to_string(),
                        verdict(ok).to_string(),
                    ]
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------- reduce

#[derive(Serialize)]
pub struct ReduceInputs {
    pub gens: Vec<Exact>,
    pub s: Exact,
}

#[derive(Serialize)]
pub struct IdentityCheck {
    pub direct: Exact,
    pub via_reduction: Exact,
    pub verdict: &'static str,
}

impl IdentityCheck {
    fn new(direct: Exact, via_reduction: Exact) -> Self {
        IdentityCheck {
            direct,
            via_reduction,
            verdict: verdict(direct == via_reduction),
        }
    }
}

#[derive(Serialize)]
pub struct MultisetCheck {
    pub direct: Vec<Exact>,
    pub scaled_reduced: Vec<Exact>,
    pub verdict: &'static str,
}

#[derive(Serialize)]
pub struct ReduceResult {
    pub reducible: bool,
    pub pivot: Exact,
    pub d: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<Exact>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_star: Option<IdentityCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_star: Option<IdentityCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apery_multiset: Option<MultisetCheck>,
    pub verdict: &'static str,
}

impl ReduceResult {
    pub fn failed(&self) -> bool {
        self.verdict == "fail"
    }
}

pub fn cmd_reduce(gens: &Generators, s: u64) -> Result<ReduceResult, FrobError> {
    let pivot = gens.values()[0];
    let Some(step) = gens.reduce_step() else {
        return Ok(ReduceResult {
            reducible: false,
            pivot: pivot.into(),
            d: Exact(1),
            reduced: None,
            g_star: None,
            n_star: None,
            apery_multiset: None,
            verdict: "no reduction",
        });
    };
    let g_check = IdentityCheck::new(g_star(gens, s)?.into(), g_star_via_reduction(&step, s)?.into());
    let n_check = IdentityCheck::new(n_star(gens, s)?.into(), n_star_via_reduction(&step, s)?.into());

    // Both tables use the pivot a_1 as modulus.
    let mut direct: Vec<u64> = apery_table(gens, s, 0)?.entries().to_vec();
    let mut scaled: Vec<u64> = apery_table(&step.reduced, s, 0)?
        .entries()
        .iter()
        .map(|&e| e.checked_mul(step.d).ok_or(FrobError::Overflow("d * n'_j,s")))
        .collect::<Result<_, _>>()?;
    direct.sort_unstable();
    scaled.sort_unstable();
    let multiset = MultisetCheck {
        verdict: verdict(direct == scaled),
        direct: exacts(&direct),
        scaled_reduced: exacts(&scaled),
    };
    let ok = g_check.verdict == "pass" && n_check.verdict == "pass" && multiset.verdict == "pass";
    Ok(ReduceResult {
        reducible: true,
        pivot: pivot.into(),
        d: step.d.into(),
        reduced: Some(exacts(step.reduced.values())),
        g_star: Some(g_check),
        n_star: Some(n_check),
        apery_multiset: Some(multiset),
        verdict: verdict(ok),
    })
}

impl Payload for ReduceResult {
    fn text(&self, out: &mut String, style: Style) {
        let Some(reduced) = &self.reduced else {
            let _ = writeln!(out, "no reduction: gcd of the non-pivot generators is 1");
            return;
        };
        let _ = writeln!(out, "pivot {}, d = {}, reduced ({})", self.pivot, self.d, join(reduced, ", "));
        if let Some(g) = &self.g_star {
            let _ = writeln!(
                out,
                "g*_s: direct {} vs reduced {}  {}",
                g.direct,
                g.via_reduction,
                style.verdict(g.verdict == "pass")
            );
        }
        if let Some(n) = &self.n_star {
            let _ = writeln!(
                out,
                "n*_s: direct {} vs reduced {}  {}",
                n.direct,
                n.via_reduction,
                style.verdict(n.verdict == "pass")
            );
        }
        if let Some(m) = &self.apery_multiset {
            let _ = writeln!(
                out,
                "residue minima {{{}}} vs d x reduced {{{}}}  {}",
                join(&m.direct, ", "),
                join(&m.scaled_reduced, ", "),
                style.verdict(m.verdict == "pass")
            );
        }
    }

    fn csv(&self) -> Table {
        let field = |c: &Option<IdentityCheck>, f: fn(&IdentityCheck) -> Exact| {
            c.as_ref().map(|c| f(c).to_string()).unwrap_or_default()
        };
        Table {
            header: vec![
                "d",
                "reduced",
                "g_star_direct",
                "g_star_via_reduction",
                "n_star_direct",
                "n_star_via_reduction",
                "verdict",
            ],
            rows: vec![vec![
                self.d.to_string(),
                self.reduced.as_ref().map(|r| join(r, " ")).unwrap_or_default(),
                field(&self.g_star, |c| c.direct),
                field(&self.g_star, |c| c.via_reduction),
                field(&self.n_star, |c| c.direct),
                field(&self.n_star, |c| c.via_reduction),
                self.verdict.to_string(),
            ]],
        }
    }
}
