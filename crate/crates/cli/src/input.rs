use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use vat_core::{io, FamilySpec, Graph};

/// Loads a graph from an edge-list file or, failing that, a family spec
/// string. Returns the graph id used in reports.
pub fn load(input: &str) -> Result<(String, Graph)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let g = io::parse_edge_list(&text).with_context(|| format!("parsing {input}"))?;
        let id = path.file_name().map_or(input.to_string(), |f| f.to_string_lossy().into_owned());
        return Ok((id, g));
    }
    let spec: FamilySpec = input
        .parse()
        .map_err(|e| anyhow!("{input:?} is neither a readable file nor a family spec ({e})"))?;
    let g = spec.build()?;
    Ok((spec.to_string(), g))
}

/// `A..B`, `A..=B` or a single integer; both ends inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad integer {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => parse(s).map(|x| x..=x),
    }
}

pub fn parse_alpha_beta(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected ALPHA,BETA")?;
    let a = a.trim().parse().map_err(|_| format!("bad alpha {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad beta {b:?}"))?;
    Ok((a, b))
}

/// Expands `--family NAME` over a size range into concrete specs. The
/// range runs over the family's primary parameter: vertex count for
/// cycle, complete, path, circulant and random_regular; leaves for star;
/// dimension for hypercube; part size for complete_bipartite.
pub fn expand_family(
    name: &str,
    range: &RangeInclusive<usize>,
    degree: Option<usize>,
    seed: u64,
    offsets: &[usize],
) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for x in range.clone() {
        let spec = match name {
            "cycle" => FamilySpec::Cycle(x),
            "complete" => FamilySpec::Complete(x),
            "star" => FamilySpec::Star(x),
            "path" => FamilySpec::Path(x),
            "hypercube" => FamilySpec::Hypercube(x),
            "complete_bipartite" => FamilySpec::CompleteBipartite(x),
            "petersen" => {
                out.push(FamilySpec::Petersen);
                break;
            }
            "circulant" => {
                if offsets.is_empty() {
                    bail!("--family circulant needs --offsets");
                }
                FamilySpec::Circulant { n: x, offsets: offsets.to_vec() }
            }
            "random_regular" => {
                let d = degree.ok_or_else(|| anyhow!("--family random_regular needs --degree"))?;
                if (x * d) % 2 == 1 {
                    continue;
                }
                FamilySpec::RandomRegular { n: x, d, seed }
            }
            other => bail!("unknown family {other:?}"),
        };
        out.push(spec);
    }
    Ok(out)
}
