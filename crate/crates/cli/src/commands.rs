use std::fmt::Write;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use respoly::degen::verify_degeneration_theorem;
use respoly::graphcore::{
    classify_arrows, components_below, fixtures, load_level_graph, load_level_map, summits,
    ArrowKind, LevelStructure, Multigraph,
};
use respoly::polymat::{
    base_polytope, face_sweep, gamma_table, pi0_gamma_by_contraction, DEFAULT_TABLE_BOUND,
    DEFAULT_VERTEX_BOUND,
};
use respoly::residue::{build_flag, per_component_report, FlagCounts};
use serde_json::{json, Value};

use crate::output::{
    self, names, partition, partition_text, set_text, status, subspace, subspace_text,
};
use crate::{Command, RunConfig};

/// A command's result in both output formats.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

/// An input graph document, parsed.
pub struct Loaded {
    pub name: String,
    pub source: String,
    pub graph: Multigraph,
    pub levels: LevelStructure,
}

impl Loaded {
    pub fn parse(name: String, source: String) -> Result<Self> {
        let (graph, levels) =
            load_level_graph(&source).with_context(|| format!("reading {name}"))?;
        Ok(Self {
            name,
            source,
            graph,
            levels,
        })
    }

    pub fn fixture(name: &str) -> Result<Self> {
        let doc = fixtures::document(name).ok_or_else(|| anyhow!("no fixture named {name}"))?;
        Self::parse(name.to_uppercase(), doc.to_string())
    }
}

pub fn load_input(cfg: &RunConfig) -> Result<Option<Loaded>> {
    if let Some(name) = &cfg.fixture {
        return Loaded::fixture(name).map(Some);
    }
    let Some(path) = &cfg.input else {
        return Ok(None);
    };
    let source =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Loaded::parse(path.display().to_string(), source).map(Some)
}

fn require_input(cfg: &RunConfig) -> Result<Loaded> {
    load_input(cfg)?.ok_or_else(|| anyhow!("this command needs --input PATH or --fixture NAME"))
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Verify => crate::verify::run(cfg),
        Command::Info => info(&require_input(cfg)?),
        Command::Dims => dims(&require_input(cfg)?),
        Command::Basis => basis(&require_input(cfg)?),
        Command::Gamma => gamma(&require_input(cfg)?),
        Command::Polytope => polytope(&require_input(cfg)?),
        Command::Faces => faces(&require_input(cfg)?, cfg.max_vertices),
        Command::Degenerate => {
            let input = require_input(cfg)?;
            let path = cfg
                .fine
                .as_ref()
                .ok_or_else(|| anyhow!("degenerate needs --fine PATH"))?;
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let fine = load_level_map(&input.graph, &text)
                .with_context(|| format!("reading {}", path.display()))?;
            degenerate(&input, &fine)
        }
    }
}

pub fn counts_json(c: &FlagCounts) -> Value {
    serde_json::to_value(c).expect("serializable")
}

fn counts_text(out: &mut String, c: &FlagCounts) {
    let _ = writeln!(
        out,
        "|V| = {}  |E| = {}  c = {}  g = {}  r = {}  |E_vert| = {}  |E_hor| = {}",
        c.vertices, c.edges, c.components, c.genus, c.depth, c.vertical_edges, c.horizontal_edges
    );
    let _ = writeln!(
        out,
        "summits: s = {}  s_ir = {}  s_red = {}",
        c.summits, c.summits_irreducible, c.summits_reducible
    );
}

pub fn info(input: &Loaded) -> Result<Outcome> {
    let (g, l) = (&input.graph, &input.levels);
    let counts = FlagCounts::of(g, l);
    let s = summits(g, l);
    let mut levels = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "{}", input.name);
    counts_text(&mut text, &counts);
    for n in 1..=l.depth() {
        let comps = g.components_of(l.part(n));
        let special = if n >= 2 {
            components_below(g, l, n)?.special
        } else {
            Vec::new()
        };
        let _ = writeln!(
            text,
            "level {n}: {}  components {}  special below {}",
            set_text(g, l.part(n)),
            comps
                .iter()
                .map(|&c| set_text(g, c))
                .collect::<Vec<_>>()
                .join(" "),
            special
                .iter()
                .map(|&c| set_text(g, c))
                .collect::<Vec<_>>()
                .join(" "),
        );
        levels.push(json!({
            "level": n,
            "vertices": names(g, l.part(n)),
            "components": comps.iter().map(|&c| names(g, c)).collect::<Vec<_>>(),
            "special_below": special.iter().map(|&c| names(g, c)).collect::<Vec<_>>(),
        }));
    }
    let summit_json = |list: &[respoly::graphcore::LevelComponent]| -> Value {
        list.iter()
            .map(|c| json!({ "level": c.level, "vertices": names(g, c.vertices) }))
            .collect()
    };
    for (kind, list) in [("irreducible", &s.irreducible), ("reducible", &s.reducible)] {
        for c in list {
            let _ = writeln!(
                text,
                "{kind} summit at level {}: {}",
                c.level,
                set_text(g, c.vertices)
            );
        }
    }
    let json = json!({
        "name": input.name,
        "counts": counts_json(&counts),
        "levels": levels,
        "summits": { "irreducible": summit_json(&s.irreducible), "reducible": summit_json(&s.reducible) },
    });
    Ok(Outcome {
        json,
        text,
        passed: true,
    })
}

pub fn dims(input: &Loaded) -> Result<Outcome> {
    let (g, l) = (&input.graph, &input.levels);
    let flag = build_flag(g, l);
    let report = per_component_report(g, l, &flag);
    let identities = flag.identities();
    let inclusions = flag.inclusions_hold();
    let passed =
        inclusions && identities.iter().all(|c| c.ok) && report.totals_ok && report.predictions_ok;
    let [u, u0, r, gd] = flag.dims();

    let mut text = String::new();
    let _ = writeln!(text, "{}", input.name);
    counts_text(&mut text, &flag.counts);
    let _ = writeln!(text, "dims: U = {u}  U0 = {u0}  R = {r}  G = {gd}");
    let _ = writeln!(text, "{} inclusions G ⊆ R ⊆ U0 ⊆ U", status(inclusions));
    for c in &identities {
        let _ = writeln!(
            text,
            "{} {}  ({} vs {})",
            status(c.ok),
            c.name,
            c.lhs,
            c.rhs
        );
    }
    let _ = writeln!(
        text,
        "level  component                 |LRC| |Ros| |T|  codim R  codim G"
    );
    for row in &report.components {
        let _ = writeln!(
            text,
            "{:>5}  {:<24} {:>5} {:>5} {:>3}  {:>7}  {:>7}",
            row.level,
            format!("{{{}}}", row.component.join(",")),
            row.lrc,
            row.ros,
            row.tglob,
            row.codim_rosenlicht,
            row.codim_global
        );
    }
    for row in &report.levels {
        let _ = writeln!(
            text,
            "level {} total: {}/{}/{}  codim R {}  codim G {}",
            row.level, row.lrc, row.ros, row.tglob, row.codim_rosenlicht, row.codim_global
        );
    }
    let _ = writeln!(
        text,
        "{} block totals and predictions",
        status(report.totals_ok && report.predictions_ok)
    );

    let json = json!({
        "name": input.name,
        "counts": counts_json(&flag.counts),
        "dims": { "upsilon": u, "upsilon0": u0, "rosenlicht": r, "global": gd },
        "inclusions": inclusions,
        "identities": identities,
        "components": report,
        "passed": passed,
    });
    Ok(Outcome { json, text, passed })
}

pub fn basis(input: &Loaded) -> Result<Outcome> {
    let (g, l) = (&input.graph, &input.levels);
    let flag = build_flag(g, l);
    let class = classify_arrows(g, l);
    let kind = |k: ArrowKind| match k {
        ArrowKind::Upward => "upward",
        ArrowKind::Downward => "downward",
        ArrowKind::Horizontal => "horizontal",
    };
    let arrows: Vec<Value> = g
        .arrows()
        .iter()
        .map(|a| json!({ "index": a.id, "label": g.arrow_label(a.id), "kind": kind(class.kind(a.id)) }))
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "{}", input.name);
    let _ = writeln!(text, "arrow coordinates:");
    for a in g.arrows() {
        let _ = writeln!(
            text,
            "  {:>3} {:<16} {}",
            a.id,
            g.arrow_label(a.id),
            kind(class.kind(a.id))
        );
    }
    for (title, s) in [
        ("U", &flag.upsilon),
        ("U0", &flag.upsilon0),
        ("R", &flag.rosenlicht),
        ("G", &flag.global),
    ] {
        subspace_text(&mut text, title, s);
    }
    let json = json!({
        "name": input.name,
        "arrows": arrows,
        "upsilon": subspace(&flag.upsilon),
        "upsilon0": subspace(&flag.upsilon0),
        "rosenlicht": subspace(&flag.rosenlicht),
        "global": subspace(&flag.global),
    });
    Ok(Outcome {
        json,
        text,
        passed: true,
    })
}

pub fn gamma(input: &Loaded) -> Result<Outcome> {
    let (g, l) = (&input.graph, &input.levels);
    let t = gamma_table(g, l, DEFAULT_TABLE_BOUND)?;
    let properties = json!({
        "submodular": t.is_submodular(),
        "nondecreasing": t.is_nondecreasing(),
        "nonnegative": t.is_nonnegative(),
        "integer": t.is_integer_valued(),
    });
    let mut passed =
        t.is_submodular() && t.is_nondecreasing() && t.is_nonnegative() && t.is_integer_valued();
    let contraction = if l.is_trivial() {
        let agrees = pi0_gamma_by_contraction(g, DEFAULT_TABLE_BOUND)? == t;
        passed &= agrees;
        Some(agrees)
    } else {
        None
    };
    let mut text = String::new();
    let _ = writeln!(text, "{}  partition {}", input.name, partition_text(g, l));
    output::table_text(&mut text, g, &t);
    let _ = writeln!(
        text,
        "{} polymatroid rank function",
        status(t.is_submodular() && t.is_nondecreasing())
    );
    if let Some(ok) = contraction {
        let _ = writeln!(text, "{} agrees with g - g(complement)", status(ok));
    }
    let json = json!({
        "name": input.name,
        "partition": partition(g, l),
        "table": output::table(g, &t),
        "adjoint": output::table(g, &t.adjoint()),
        "properties": properties,
        "contraction_oracle": contraction,
        "passed": passed,
    });
    Ok(Outcome { json, text, passed })
}

pub fn polytope(input: &Loaded) -> Result<Outcome> {
    let (g, l) = (&input.graph, &input.levels);
    let t = gamma_table(g, l, DEFAULT_TABLE_BOUND)?;
    let p = base_polytope(&t, DEFAULT_VERTEX_BOUND)?;
    let inequalities: Vec<Value> = (1..1u64 << t.ground_size())
        .map(|bits| {
            let set = respoly::graphcore::VertexSet::from_bits(bits);
            json!({ "subset": names(g, set), "bound": output::rational(t.value(set)) })
        })
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "{}  partition {}", input.name, partition_text(g, l));
    let _ = writeln!(text, "coordinates: {}", g.vertex_names().join(", "));
    let _ = writeln!(text, "{} vertices:", p.vertices.len());
    for q in &p.vertices {
        let _ = writeln!(text, "  {}", output::vector_text(q));
    }
    let _ = writeln!(
        text,
        "inequalities q(I) <= gamma(I), equality on the full set:"
    );
    output::table_text(&mut text, g, &t);
    let json = json!({
        "name": input.name,
        "coordinates": g.vertex_names(),
        "vertices": p.vertices.iter().map(|q| output::vector(q)).collect::<Vec<_>>(),
        "inequalities": inequalities,
    });
    Ok(Outcome {
        json,
        text,
        passed: true,
    })
}

pub fn faces(input: &Loaded, bound: usize) -> Result<Outcome> {
    let g = &input.graph;
    let (report, faces) = face_sweep(g, bound)?;
    let orientation = report.orientation.map(|o| o.name());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{}: {} ordered partitions, {} vertices in the residue polytope, {} distinct faces",
        input.name, report.partitions, report.residue_polytope_vertices, report.distinct_faces
    );
    let _ = writeln!(text, "orientation: {}", orientation.unwrap_or("none"));
    for f in &faces {
        let _ = writeln!(text, "  {:<40} {:?}", partition_text(g, &f.level), f.face);
    }
    for v in &report.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    let _ = writeln!(text, "{} face theorem", status(report.passed));
    let list: Vec<Value> = faces
        .iter()
        .map(|f| json!({ "ordered_partition": partition(g, &f.level), "vertex_indices": f.face, "orientation": orientation }))
        .collect();
    let json = json!({ "name": input.name, "report": report, "faces": list });
    Ok(Outcome {
        json,
        text,
        passed: report.passed,
    })
}

pub fn degenerate(input: &Loaded, fine: &LevelStructure) -> Result<Outcome> {
    let (g, coarse) = (&input.graph, &input.levels);
    if fine.vertex_count() != g.vertex_count() {
        bail!("fine level map does not match the graph");
    }
    let report = verify_degeneration_theorem(g, fine, coarse)?;
    let c = report.checks;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{}: coarse {}  fine {}",
        input.name,
        partition_text(g, coarse),
        partition_text(g, fine)
    );
    let lines = [
        (
            "limit of the coarse space equals the fine space",
            c.limit_equals_fine,
        ),
        (
            "limit independent of the weight choice",
            c.limit_independent_of_weights,
        ),
        (
            "realization equals the fine space",
            c.realization_equals_fine,
        ),
        (
            "splitting of the coarse table equals the fine table",
            c.splitting_equals_fine,
        ),
    ];
    for (what, ok) in lines {
        let _ = writeln!(text, "{} {what}", status(ok));
    }
    match c.plucker_agrees {
        Some(ok) => {
            let _ = writeln!(text, "{} Plücker limit agrees", status(ok));
        }
        None => {
            let _ = writeln!(text, "SKIP Plücker limit (too many coordinates)");
        }
    }
    subspace_text(&mut text, "coarse", &report.coarse_space);
    subspace_text(&mut text, "fine", &report.fine_space);
    subspace_text(&mut text, "limit", &report.limit);
    let json = json!({
        "name": input.name,
        "coarse": partition(g, coarse),
        "fine": partition(g, fine),
        "checks": c,
        "coarse_space": subspace(&report.coarse_space),
        "fine_space": subspace(&report.fine_space),
        "limit": subspace(&report.limit),
        "realization": subspace(&report.realization),
        "passed": c.passed(),
    });
    Ok(Outcome {
        json,
        text,
        passed: c.passed(),
    })
}
