//! Text file formats. Graphs are edge lists with a `d=<int>` header and
//! 1-based vertex labels; weighted graphs append the weight as a third
//! column with 17 significant digits. Sample batches carry a
//! `n=.. d=.. seed=.. sampler=..` header followed by rows of `+1`/`-1`
//! entries.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use isingprop_core::{Graph, SampleBatch, SamplerTag, WeightedGraph};

/// Formats a float with 17 significant digits (round-trip exact for f64).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("d={}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn write_weighted_graph(wg: &WeightedGraph) -> String {
    let mut out = format!("d={}\n", wg.vertex_count());
    for ((u, v), w) in wg.weighted_edges() {
        let _ = writeln!(out, "{} {} {}", u + 1, v + 1, fmt_f64(w));
    }
    out
}

fn parse_header_d(line: &str) -> Result<usize> {
    let rest = line
        .trim()
        .strip_prefix("d=")
        .ok_or_else(|| anyhow!("graph file must start with a 'd=<int>' header"))?;
    rest.parse::<usize>().context("invalid vertex count in header")
}

/// Reads a graph; weights in a third column are accepted and ignored.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let d = parse_header_d(lines.next().ok_or_else(|| anyhow!("empty graph file"))?)?;
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .ok_or_else(|| anyhow!("edge line {} is empty", i + 2))?
            .parse()
            .with_context(|| format!("bad vertex on line {}", i + 2))?;
        let v: usize = parts
            .next()
            .ok_or_else(|| anyhow!("edge line {} lacks a second vertex", i + 2))?
            .parse()
            .with_context(|| format!("bad vertex on line {}", i + 2))?;
        if u == 0 || v == 0 {
            bail!("file vertices are 1-based; found 0 on line {}", i + 2);
        }
        edges.push((u - 1, v - 1));
    }
    Graph::new(d, edges.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }))
        .map_err(|e| anyhow!("{e}"))
}

/// Reads a weighted graph; a missing third column means unit weight.
pub fn read_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let d = parse_header_d(lines.next().ok_or_else(|| anyhow!("empty graph file"))?)?;
    let mut entries = Vec::new();
    for (i, line) in lines.enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() < 2 {
            bail!("edge line {} needs at least two vertices", i + 2);
        }
        let u: usize = parts[0].parse().with_context(|| format!("bad vertex on line {}", i + 2))?;
        let v: usize = parts[1].parse().with_context(|| format!("bad vertex on line {}", i + 2))?;
        if u == 0 || v == 0 {
            bail!("file vertices are 1-based; found 0 on line {}", i + 2);
        }
        let w: f64 = if parts.len() > 2 {
            parts[2].parse().with_context(|| format!("bad weight on line {}", i + 2))?
        } else {
            1.0
        };
        let e = if u < v { (u - 1, v - 1) } else { (v - 1, u - 1) };
        entries.push((e, w));
    }
    let g = Graph::new(d, entries.iter().map(|&(e, _)| e)).map_err(|e| anyhow!("{e}"))?;
    WeightedGraph::new(g, entries).map_err(|e| anyhow!("{e}"))
}

pub fn write_batch(batch: &SampleBatch) -> String {
    let tag = match batch.sampler() {
        SamplerTag::Exact => "exact",
        SamplerTag::Gibbs => "gibbs",
    };
    let mut out = format!(
        "n={} d={} seed={} sampler={}\n",
        batch.len(),
        batch.dimension(),
        batch.seed(),
        tag
    );
    for row in batch.rows() {
        let mut first = true;
        for &s in row {
            if !first {
                out.push(' ');
            }
            out.push_str(if s == 1 { "+1" } else { "-1" });
            first = false;
        }
        out.push('\n');
    }
    out
}

pub fn read_batch(text: &str) -> Result<SampleBatch> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| anyhow!("empty batch file"))?;
    let mut n = None;
    let mut d = None;
    let mut seed = None;
    let mut sampler = None;
    for field in header.split_whitespace() {
        let (key, value) =
            field.split_once('=').ok_or_else(|| anyhow!("malformed header field '{field}'"))?;
        match key {
            "n" => n = Some(value.parse::<usize>().context("bad n")?),
            "d" => d = Some(value.parse::<usize>().context("bad d")?),
            "seed" => seed = Some(value.parse::<u64>().context("bad seed")?),
            "sampler" => {
                sampler = Some(match value {
                    "exact" => SamplerTag::Exact,
                    "gibbs" => SamplerTag::Gibbs,
                    other => bail!("unknown sampler tag '{other}'"),
                })
            }
            other => bail!("unknown header field '{other}'"),
        }
    }
    let (n, d) = (
        n.ok_or_else(|| anyhow!("header lacks n"))?,
        d.ok_or_else(|| anyhow!("header lacks d"))?,
    );
    let seed = seed.ok_or_else(|| anyhow!("header lacks seed"))?;
    let sampler = sampler.ok_or_else(|| anyhow!("header lacks sampler"))?;
    let mut spins = Vec::with_capacity(n * d);
    for (i, line) in lines.enumerate() {
        for tok in line.split_whitespace() {
            match tok {
                "+1" | "1" => spins.push(1i8),
                "-1" => spins.push(-1i8),
                other => bail!("bad spin '{other}' on row {}", i + 1),
            }
        }
    }
    SampleBatch::new(n, d, spins, seed, sampler).map_err(|e| anyhow!("{e}"))
}
