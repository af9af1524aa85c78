mod config;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopfchrom::characters::CharacterTable;
use hopfchrom::graphalg::{self, Method};
use hopfchrom::graphs::{automorphism_group, canonical_form, to_graph6, Graph};
use hopfchrom::permgroups::{conjugacy_classes, ConjClasses, PermGroup};
use hopfchrom::symfunc::{IntPolynomial, SymFunc};
use hopfchrom::verify::{run_suite, Suite, SCHEMA};
use hopfchrom::wreathhopf::{Coproduct, Instance};

use config::{Config, FileConfig, Format, Overrides};

#[derive(Parser)]
#[command(name = "hopfchrom", version, about = "Refined chromatic symmetric functions and Hopf algebras of automorphism-group representations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "HOPFCHROM_FORMAT")]
    format: Option<Format>,
    /// Optional TOML config file.
    #[arg(long, global = true, env = "HOPFCHROM_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, global = true, env = "HOPFCHROM_VERTEX_CAP")]
    vertex_cap: Option<usize>,
    #[arg(long, global = true, env = "HOPFCHROM_GROUP_ORDER_CAP")]
    group_order_cap: Option<usize>,
    #[arg(long, global = true, env = "HOPFCHROM_DEGREE_CAP")]
    degree_cap: Option<usize>,
    #[arg(long, global = true, env = "HOPFCHROM_ORACLE_CAP")]
    oracle_cap: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism group summary.
    Aut { graph: String },
    /// Character table of the automorphism group of the canonical form.
    Chartab { graph: String },
    /// Chromatic symmetric functions and polynomials.
    Chromsym {
        graph: String,
        /// One refinement X_{Γ,γ}, by index into the canonical table.
        #[arg(long, conflicts_with_all = ["all", "stanley", "orbital"])]
        irrep: Option<usize>,
        /// Every refinement (the default).
        #[arg(long, conflicts_with_all = ["stanley", "orbital"])]
        all: bool,
        /// Stanley's chromatic symmetric function.
        #[arg(long, conflicts_with = "orbital")]
        stanley: bool,
        /// The orbital chromatic polynomial.
        #[arg(long)]
        orbital: bool,
        #[arg(long, value_enum, default_value = "wreath")]
        method: MethodArg,
        /// Evaluate the polynomials at these numbers of colours.
        #[arg(long = "eval", value_name = "M")]
        eval: Vec<i64>,
    },
    /// Product or coproducts in ℳ_{Y,H}.
    Hopf {
        #[arg(value_enum)]
        op: HopfOp,
        /// Instance selector, e.g. young=subsets:2,H=Z2.
        #[arg(long)]
        instance: Option<String>,
        /// Elements as JSON arrays of {"F", "irrep", "coeff"}, inline or @file.
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Run verification suites; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Wreath,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum HopfOp {
    Product,
    #[value(name = "Delta")]
    BigDelta,
    #[value(name = "delta")]
    SmallDelta,
}

/// What a command produced: a JSON document, its text rendering, and
/// whether the run counts as a success.
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((out, fmt)) => {
            let body = match fmt {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON output") + "\n",
                Format::Text => out.text,
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let kind = e
                .chain()
                .find_map(|c| c.downcast_ref::<hopfchrom::Error>())
                .map(|h| h.kind())
                .unwrap_or("usage");
            let message = format!("{e:#}");
            match format.unwrap_or_default() {
                Format::Json => eprintln!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"schema": SCHEMA, "error": {"kind": kind, "message": message}}))
                        .expect("JSON output")
                ),
                Format::Text => eprintln!("error ({kind}): {message}"),
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(Output, Format)> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let instance_flag = match &cli.cmd {
        Command::Hopf { instance, .. } => instance.clone(),
        _ => None,
    };
    let cfg = Config::resolve(
        file,
        Overrides {
            format: cli.format,
            instance: instance_flag,
            vertex_cap: cli.vertex_cap,
            group_order_cap: cli.group_order_cap,
            degree_cap: cli.degree_cap,
            oracle_cap: cli.oracle_cap,
        },
    )?;
    hopfchrom::limits::set(cfg.limits)?;
    let out = match cli.cmd {
        Command::Aut { graph } => aut(&graph)?,
        Command::Chartab { graph } => chartab(&graph)?,
        Command::Chromsym {
            graph,
            irrep,
            all: _,
            stanley,
            orbital,
            method,
            eval,
        } => {
            let mode = match (irrep, stanley, orbital) {
                (Some(i), _, _) => Mode::Irrep(i),
                (_, true, _) => Mode::Stanley,
                (_, _, true) => Mode::Orbital,
                _ => Mode::All,
            };
            let method = match method {
                MethodArg::Wreath => Method::Wreath,
                MethodArg::Direct => Method::Direct,
            };
            chromsym(&graph, mode, method, &eval)?
        }
        Command::Hopf { op, elements, .. } => hopf(&cfg, op, &elements)?,
        Command::Verify { suite } => verify(&suite)?,
    };
    Ok((out, cfg.format))
}

fn envelope(command: &str, results: Vec<Value>) -> Value {
    json!({"schema": SCHEMA, "command": command, "results": results})
}

fn class_json(group: &PermGroup, classes: &ConjClasses) -> Vec<Value> {
    classes
        .summary()
        .into_iter()
        .map(|c| {
            json!({
                "representative": group.element(c.representative).to_string(),
                "size": c.size,
                "order": c.element_order,
            })
        })
        .collect()
}

fn aut(arg: &str) -> Result<Output> {
    let mut results = Vec::new();
    let mut text = String::new();
    for g in input::read_graphs(arg)? {
        let group = automorphism_group(&g)?;
        let classes = conjugacy_classes(&group)?;
        let gens: Vec<String> = group.generator_perms().iter().map(|p| p.to_string()).collect();
        text.push_str(&format!("graph {}  n={}  |Aut|={}\n", to_graph6(&g), g.n(), group.elements().len()));
        text.push_str(&format!("generators: {}\n", if gens.is_empty() { "none".into() } else { gens.join(" ") }));
        text.push_str(&format!("{:>16} {:>6} {:>6}\n", "class rep", "size", "order"));
        for c in classes.summary() {
            text.push_str(&format!("{:>16} {:>6} {:>6}\n", group.element(c.representative).to_string(), c.size, c.element_order));
        }
        results.push(json!({
            "graph6": to_graph6(&g),
            "n": g.n(),
            "order": group.elements().len(),
            "generators": gens,
            "classes": class_json(&group, &classes),
        }));
    }
    Ok(Output {
        json: envelope("aut", results),
        text,
        ok: true,
    })
}

struct CanonicalTable {
    graph: Graph,
    relabel: String,
    group: PermGroup,
    classes: std::sync::Arc<ConjClasses>,
    table: CharacterTable,
}

fn canonical_table(g: &Graph) -> Result<CanonicalTable> {
    let w = canonical_form(g)?;
    let (group, classes, table) = graphalg::aut_table(g)?;
    Ok(CanonicalTable {
        graph: w.canonical,
        relabel: format!("{:?}", w.relabel.images()),
        group,
        classes,
        table,
    })
}

fn table_json(c: &CanonicalTable) -> Value {
    json!({
        "classes": class_json(&c.group, &c.classes),
        "degrees": c.table.degrees(),
        "rows": c.table.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn table_text(c: &CanonicalTable) -> String {
    let reps: Vec<String> = c.classes.reps().iter().map(|&r| c.group.element(r).to_string()).collect();
    let cells: Vec<Vec<String>> = c.table.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let width = reps
        .iter()
        .chain(cells.iter().flatten())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1)
        .max(4);
    let mut s = format!("{:<6}", "");
    for r in &reps {
        s.push_str(&format!(" {r:>width$}"));
    }
    s.push('\n');
    s.push_str(&format!("{:<6}", "size"));
    for sz in c.classes.sizes() {
        s.push_str(&format!(" {sz:>width$}"));
    }
    s.push('\n');
    for (i, row) in cells.iter().enumerate() {
        s.push_str(&format!("{:<6}", format!("#{i}")));
        for v in row {
            s.push_str(&format!(" {v:>width$}"));
        }
        s.push('\n');
    }
    s
}

fn chartab(arg: &str) -> Result<Output> {
    let mut results = Vec::new();
    let mut text = String::new();
    for g in input::read_graphs(arg)? {
        let c = canonical_table(&g)?;
        text.push_str(&format!("canonical graph {}  relabel {}\n", to_graph6(&c.graph), c.relabel));
        text.push_str(&table_text(&c));
        results.push(json!({
            "graph6": to_graph6(&g),
            "canonical_graph6": to_graph6(&c.graph),
            "relabel": c.relabel,
            "table": table_json(&c),
        }));
    }
    Ok(Output {
        json: envelope("chartab", results),
        text,
        ok: true,
    })
}

#[derive(Clone, Copy)]
enum Mode {
    Irrep(usize),
    All,
    Stanley,
    Orbital,
}

fn sym_json(x: &SymFunc) -> Value {
    json!({"display": x.to_string(), "terms": x})
}

fn poly_json(p: &IntPolynomial, eval: &[i64]) -> Value {
    let mut v = json!({"display": p.to_string(), "coefficients": p});
    if !eval.is_empty() {
        let values: serde_json::Map<String, Value> =
            eval.iter().map(|&m| (m.to_string(), Value::String(p.eval(m).to_string()))).collect();
        v["values"] = Value::Object(values);
    }
    v
}

fn poly_text(name: &str, p: &IntPolynomial, eval: &[i64]) -> String {
    let mut s = format!("{name}(m) = {p}\n");
    for &m in eval {
        s.push_str(&format!("{name}({m}) = {}\n", p.eval(m)));
    }
    s
}

fn chromsym(arg: &str, mode: Mode, method: Method, eval: &[i64]) -> Result<Output> {
    let mut results = Vec::new();
    let mut text = String::new();
    for g in input::read_graphs(arg)? {
        let c = canonical_table(&g)?;
        let mut entry = json!({
            "graph6": to_graph6(&g),
            "canonical_graph6": to_graph6(&c.graph),
            "table": table_json(&c),
        });
        text.push_str(&format!("canonical graph {}\n", to_graph6(&c.graph)));
        text.push_str(&table_text(&c));
        match mode {
            Mode::Irrep(_) | Mode::All => {
                let irreps: Vec<usize> = match mode {
                    Mode::Irrep(i) => {
                        if i >= c.table.len() {
                            bail!("irrep {i} out of range; the table has {} rows", c.table.len());
                        }
                        vec![i]
                    }
                    _ => (0..c.table.len()).collect(),
                };
                let mut rows = Vec::new();
                for i in irreps {
                    let x = graphalg::x_gamma(&g, i, method)?;
                    let p = x.specialize_polynomial();
                    text.push_str(&format!("X_#{i} = {x}\n"));
                    text.push_str(&poly_text(&format!("chi_#{i}"), &p, eval));
                    rows.push(json!({
                        "irrep": i,
                        "degree": c.table.degree(i),
                        "X": sym_json(&x),
                        "chi": poly_json(&p, eval),
                    }));
                }
                entry["refinements"] = Value::Array(rows);
            }
            Mode::Stanley => {
                let x = graphalg::x_chromatic(&g)?;
                let p = x.specialize_polynomial();
                text.push_str(&format!("X = {x}\n"));
                text.push_str(&poly_text("chi", &p, eval));
                entry["stanley"] = json!({"X": sym_json(&x), "chi": poly_json(&p, eval)});
            }
            Mode::Orbital => {
                let p = graphalg::orbital_chromatic(&g)?;
                text.push_str(&poly_text("orbital", &p, eval));
                entry["orbital"] = poly_json(&p, eval);
            }
        }
        results.push(entry);
    }
    Ok(Output {
        json: envelope("chromsym", results),
        text,
        ok: true,
    })
}

fn hopf(cfg: &Config, op: HopfOp, elements: &[String]) -> Result<Output> {
    let inst = Instance::parse(&cfg.instance)?;
    let elems = elements
        .iter()
        .map(|e| input::read_element(&inst, e))
        .collect::<Result<Vec<_>>>()?;
    let (name, result) = match op {
        HopfOp::Product => {
            if elems.len() != 2 {
                bail!("product takes exactly two elements, got {}", elems.len());
            }
            ("product", serde_json::to_value(inst.hopf_product(&elems[0], &elems[1])?)?)
        }
        HopfOp::BigDelta | HopfOp::SmallDelta => {
            if elems.len() != 1 {
                bail!("coproducts take exactly one element, got {}", elems.len());
            }
            let (name, kind) = match op {
                HopfOp::BigDelta => ("Delta", Coproduct::Full),
                _ => ("delta", Coproduct::Restricted),
            };
            (name, serde_json::to_value(inst.coproduct(&elems[0], kind)?)?)
        }
    };
    let json = json!({
        "schema": SCHEMA,
        "command": "hopf",
        "operation": name,
        "instance": inst.descriptor(),
        "result": result,
    });
    let text = format!("{}\n", serde_json::to_string(&json["result"])?);
    Ok(Output { json, text, ok: true })
}

fn verify(suite: &str) -> Result<Output> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite)?;
    let mut text = String::new();
    for s in &report.suites {
        for c in &s.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            text.push_str(&format!("{mark} [{}] {}", s.suite, c.name));
            if let Some(d) = &c.detail {
                text.push_str(&format!(": {d}"));
            }
            text.push('\n');
        }
    }
    text.push_str(if report.passed { "all checks passed\n" } else { "some checks failed\n" });
    Ok(Output {
        ok: report.passed,
        json: serde_json::to_value(&report)?,
        text,
    })
}
