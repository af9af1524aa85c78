use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hopfchrom::graphs::{parse_graph6, Graph};
use hopfchrom::wreathhopf::{HopfElement, Instance};

fn graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).with_context(|| format!("line {}", i + 1))?);
    }
    Ok(out)
}

fn json_graphs(text: &str) -> Result<Vec<Graph>> {
    let v: serde_json::Value = serde_json::from_str(text).context("parsing edge-list JSON")?;
    if v.is_array() {
        Ok(serde_json::from_value(v).context("expected an array of {\"n\", \"edges\"} objects")?)
    } else {
        Ok(vec![serde_json::from_value(v).context("expected {\"n\", \"edges\"}")?])
    }
}

/// A graph argument: `-` for graph6 lines on stdin, a file of graph6 lines or
/// edge-list JSON, a name such as `butterfly` or `K4`, or a graph6 string.
pub fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    let graphs = if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        graph6_lines(&text)?
    } else if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        if arg.ends_with(".json") || text.trim_start().starts_with(['{', '[']) {
            json_graphs(&text)?
        } else {
            graph6_lines(&text)?
        }
    } else if let Ok(g) = Graph::named(arg) {
        vec![g]
    } else {
        vec![parse_graph6(arg).with_context(|| format!("'{arg}' is not a file, a graph name or a graph6 string"))?]
    };
    if graphs.is_empty() {
        bail!("no graphs in '{arg}'");
    }
    Ok(graphs)
}

/// A Hopf element argument: inline JSON or `@path`.
pub fn read_element(inst: &Instance, arg: &str) -> Result<HopfElement> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    let v: serde_json::Value = serde_json::from_str(&text).context("parsing Hopf element JSON")?;
    Ok(inst.element_from_json(&v)?)
}
