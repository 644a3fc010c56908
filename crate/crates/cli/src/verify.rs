use std::fmt::Write;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use respoly::degen::verify_degeneration_theorem;
use respoly::exactla::{random_sti_collection, set_theoretic_checks, VectorCollection};
use respoly::graphcore::{
    enumerate_ordered_partitions, fixtures, random_level_graph, LevelStructure, Multigraph,
    RandomGraphParams,
};
use respoly::polymat::{
    base_polytope, gamma_table, verify_face_theorem, DEFAULT_TABLE_BOUND, DEFAULT_VERTEX_BOUND,
};
use respoly::residue::{build_flag, lemma_checks, per_component_report};
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{counts_json, load_input, Loaded, Outcome};
use crate::output::{partition_text, status};
use crate::RunConfig;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        ok,
        detail: detail.into(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
}

/// Flag identities, block table and relatedness lemmas at one level structure.
fn residue_checks(g: &Multigraph, l: &LevelStructure) -> (bool, bool, bool) {
    let flag = build_flag(g, l);
    let report = per_component_report(g, l, &flag);
    (
        flag.all_identities_hold(),
        report.totals_ok && report.predictions_ok,
        lemma_checks(g, l).all_ok(),
    )
}

/// Tallies of a sweep over many level structures.
#[derive(Default)]
struct Tally {
    cases: usize,
    flag_failures: Vec<String>,
    table_failures: Vec<String>,
    lemma_failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, g: &Multigraph, l: &LevelStructure, label: &str) {
        self.cases += 1;
        let (flag, table, lemmas) = residue_checks(g, l);
        let at = || format!("{label} {}", partition_text(g, l));
        if !flag {
            self.flag_failures.push(at());
        }
        if !table {
            self.table_failures.push(at());
        }
        if !lemmas {
            self.lemma_failures.push(at());
        }
    }

    fn checks(&self, prefix: &str, out: &mut Vec<Check>) {
        let describe = |fails: &[String]| {
            if fails.is_empty() {
                format!("{} level structures", self.cases)
            } else {
                format!(
                    "{} of {} failed, first: {}",
                    fails.len(),
                    self.cases,
                    fails[0]
                )
            }
        };
        out.push(check(
            format!("{prefix}flag identities"),
            self.flag_failures.is_empty(),
            describe(&self.flag_failures),
        ));
        out.push(check(
            format!("{prefix}component codimensions"),
            self.table_failures.is_empty(),
            describe(&self.table_failures),
        ));
        out.push(check(
            format!("{prefix}relatedness lemmas"),
            self.lemma_failures.is_empty(),
            describe(&self.lemma_failures),
        ));
    }
}

fn degeneration_check(
    g: &Multigraph,
    fine: &LevelStructure,
    coarse: &LevelStructure,
) -> Result<Option<String>> {
    let r = verify_degeneration_theorem(g, fine, coarse)?;
    Ok((!r.checks.passed()).then(|| {
        format!(
            "{} ⪯ {}: {:?}",
            partition_text(g, fine),
            partition_text(g, coarse),
            r.checks
        )
    }))
}

fn verify_document(input: &Loaded, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Section> {
    let (g, l) = (&input.graph, &input.levels);
    let mut checks = Vec::new();

    let flag = build_flag(g, l);
    checks.push(check("flag inclusions", flag.inclusions_hold(), ""));
    for c in flag.identities() {
        checks.push(check(c.name, c.ok, format!("{} vs {}", c.lhs, c.rhs)));
    }
    let report = per_component_report(g, l, &flag);
    checks.push(check(
        "component codimensions",
        report.totals_ok && report.predictions_ok,
        format!("{} blocks", report.components.len()),
    ));
    let lemmas = lemma_checks(g, l);
    checks.push(check(
        "relatedness lemmas",
        lemmas.all_ok(),
        format!(
            "{} level components, {} blocks",
            lemmas.level_components.len(),
            lemmas.components.len()
        ),
    ));

    let mut failures = Vec::new();
    let coarsenings = l.coarsenings();
    for coarse in &coarsenings {
        failures.extend(degeneration_check(g, l, coarse)?);
    }
    checks.push(check(
        "degeneration to the given structure",
        failures.is_empty(),
        failures
            .first()
            .cloned()
            .unwrap_or_else(|| format!("{} coarsenings", coarsenings.len())),
    ));

    let mut partitions = None;
    if g.vertex_count() <= cfg.max_vertices {
        let all = enumerate_ordered_partitions(g.vertex_count(), cfg.max_vertices)?;
        let mut tally = Tally::default();
        for p in &all {
            tally.add(g, p, "");
        }
        tally.checks("all partitions: ", &mut checks);

        let faces = verify_face_theorem(g, cfg.max_vertices)?;
        partitions = Some(faces.partitions);
        checks.push(check(
            "face theorem",
            faces.passed,
            match faces.violations.first() {
                Some(v) => v.clone(),
                None => format!(
                    "{} partitions, {} faces, orientation {}",
                    faces.partitions,
                    faces.distinct_faces,
                    faces.orientation.map_or("none", |o| o.name())
                ),
            },
        ));

        let mut failures = Vec::new();
        let mut pairs = 0;
        for _ in 0..all.len().min(20) {
            let fine = &all[rng.gen_range(0..all.len())];
            for coarse in fine.coarsenings() {
                pairs += 1;
                failures.extend(degeneration_check(g, fine, &coarse)?);
            }
        }
        checks.push(check(
            "degeneration over sampled pairs",
            failures.is_empty(),
            failures
                .first()
                .cloned()
                .unwrap_or_else(|| format!("{pairs} coarsening pairs")),
        ));
    }

    if let Ok(doc) = serde_json::from_str::<Value>(&input.source) {
        if let Some(exp) = doc.get("expectations") {
            expectation_checks(input, exp, partitions, &mut checks)?;
        }
    }
    Ok(Section {
        name: input.name.clone(),
        checks,
    })
}

fn expectation_checks(
    input: &Loaded,
    exp: &Value,
    partitions: Option<usize>,
    out: &mut Vec<Check>,
) -> Result<()> {
    let (g, l) = (&input.graph, &input.levels);
    let flag = build_flag(g, l);
    let Some(map) = exp.as_object() else {
        out.push(check("expectations", false, "not an object"));
        return Ok(());
    };
    for (key, want) in map {
        match key.as_str() {
            "counts" => {
                let have = counts_json(&flag.counts);
                for (k, v) in want.as_object().into_iter().flatten() {
                    let got = have.get(k).cloned().unwrap_or(Value::Null);
                    out.push(check(
                        format!("expected {k}"),
                        &got == v,
                        format!("expected {v}, found {got}"),
                    ));
                }
            }
            "flag_dims" => {
                let got = json!(flag.dims());
                out.push(check(
                    "expected flag dimensions",
                    &got == want,
                    format!("expected {want}, found {got}"),
                ));
            }
            "levels" => {
                let report = per_component_report(g, l, &flag);
                for row in want.as_array().into_iter().flatten() {
                    let n = row.get("level").and_then(Value::as_u64).unwrap_or(0) as usize;
                    let have = report
                        .levels
                        .iter()
                        .find(|r| r.level == n)
                        .map(|r| serde_json::to_value(r).expect("row"));
                    let ok = have.as_ref().is_some_and(|h| {
                        row.as_object()
                            .into_iter()
                            .flatten()
                            .all(|(k, v)| h.get(k) == Some(v))
                    });
                    let found = have.map_or("no such level".to_string(), |h| h.to_string());
                    out.push(check(
                        format!("expected level {n} table"),
                        ok,
                        format!("expected {row}, found {found}"),
                    ));
                }
            }
            "polytope_vertices" => {
                let p = base_polytope(
                    &gamma_table(g, l, DEFAULT_TABLE_BOUND)?,
                    DEFAULT_VERTEX_BOUND,
                )?;
                let got = json!(p.vertices.len());
                out.push(check(
                    "expected polytope vertices",
                    &got == want,
                    format!("expected {want}, found {got}"),
                ));
            }
            "partitions" => {
                let got = partitions.map_or(Value::Null, |p| json!(p));
                out.push(check(
                    "expected partition count",
                    &got == want,
                    format!("expected {want}, found {got}"),
                ));
            }
            other => out.push(check(
                format!("expectation {other}"),
                false,
                "unknown expectation key",
            )),
        }
    }
    Ok(())
}

fn random_suite(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Section> {
    let mut checks = Vec::new();
    let mut tally = Tally::default();
    let mut face_failures = Vec::new();
    let mut degen_failures = Vec::new();
    let mut triples = 0;
    let bound = cfg.max_vertices.min(5);
    let params = RandomGraphParams {
        max_vertices: bound.max(1),
        ..RandomGraphParams::default()
    };
    for case in 0..cfg.random_cases {
        let (g, _) = random_level_graph(rng, params);
        let label = format!("case {case}");
        let all = enumerate_ordered_partitions(g.vertex_count(), DEFAULT_VERTEX_BOUND)?;
        for p in &all {
            tally.add(&g, p, &label);
        }
        let faces = verify_face_theorem(&g, DEFAULT_VERTEX_BOUND)?;
        if !faces.passed {
            face_failures.push(format!("{label}: {}", faces.violations[0]));
        }
        for _ in 0..2 {
            let fine = &all[rng.gen_range(0..all.len())];
            let coarsenings = fine.coarsenings();
            let coarse = &coarsenings[rng.gen_range(0..coarsenings.len())];
            triples += 1;
            degen_failures
                .extend(degeneration_check(&g, fine, coarse)?.map(|f| format!("{label}: {f}")));
        }
    }
    tally.checks("", &mut checks);
    let first = |v: &[String], fallback: String| v.first().cloned().unwrap_or(fallback);
    checks.push(check(
        "face theorem",
        face_failures.is_empty(),
        first(&face_failures, format!("{} graphs", cfg.random_cases)),
    ));
    checks.push(check(
        "degeneration",
        degen_failures.is_empty(),
        first(&degen_failures, format!("{triples} triples")),
    ));

    let (mut cases, mut failures) = (0, Vec::new());
    for i in 0..cfg.random_cases * 40 {
        let n = rng.gen_range(1..=8);
        let c1 = random_sti_collection(rng, n, "a");
        let c2 = random_sti_collection(rng, n, "b");
        let r = set_theoretic_checks(&c1, &c2)?;
        let mut u = c1.clone();
        u.extend(&c2);
        cases += 1;
        if r.related == Some(false) && u.rank() != u.len() {
            failures.push(format!("pair {i}: unrelated but dependent"));
        }
        if r.properly_unrelated == Some(true) {
            for k in 0..c1.len() {
                let mut d: VectorCollection = c1.without(k);
                d.extend(&c2);
                if d.rank() != d.len() {
                    failures.push(format!(
                        "pair {i}: properly unrelated but dependent after dropping {k}"
                    ));
                }
            }
        }
    }
    checks.push(check(
        "independence of unrelated collections",
        failures.is_empty(),
        first(&failures, format!("{cases} pairs")),
    ));
    Ok(Section {
        name: "random".to_string(),
        checks,
    })
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let inputs = match load_input(cfg)? {
        Some(input) => vec![input],
        None => fixtures::ALL
            .iter()
            .map(|(name, _)| Loaded::fixture(name))
            .collect::<Result<_>>()?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sections = Vec::new();
    for input in &inputs {
        sections.push(verify_document(input, cfg, &mut rng)?);
    }
    if cfg.random_cases > 0 {
        sections.push(random_suite(cfg, &mut rng)?);
    }
    let passed = sections.iter().all(|s| s.checks.iter().all(|c| c.ok));

    let mut text = String::new();
    for s in &sections {
        let _ = writeln!(text, "{}", s.name);
        for c in &s.checks {
            let _ = writeln!(text, "  {} {}  {}", status(c.ok), c.name, c.detail);
        }
    }
    let _ = writeln!(
        text,
        "{}",
        if passed {
            "all checks passed"
        } else {
            "some checks FAILED"
        }
    );
    let json = json!({
        "seed": cfg.seed,
        "random_cases": cfg.random_cases,
        "max_vertices": cfg.max_vertices,
        "sections": sections,
        "passed": passed,
    });
    Ok(Outcome { json, text, passed })
}
