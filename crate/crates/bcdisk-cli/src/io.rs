//! File and argument parsing helpers shared by the subcommands.
//!
//! Every error raised here is an input/output problem and maps to exit
//! code 2, distinct from domain verdicts (exit code 1).

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use bcdisk_core::hardy::RadialProfile;
use bcdisk_core::{Bicomplex, BoundaryData, PolyField};

/// Parses a bicomplex literal argument (`a+bi|c+di` Cartesian form or
/// `idem:p|q` idempotent form).
pub fn parse_bicomplex_arg(s: &str) -> Result<Bicomplex> {
    s.parse::<Bicomplex>()
        .map_err(|e| anyhow!("invalid bicomplex literal `{s}`: {e}"))
}

/// Loads a polynomial field from a file path, with `zero` accepted as the
/// literal zero field.
pub fn load_field(spec: &str) -> Result<PolyField> {
    if spec == "zero" {
        return Ok(PolyField::zero());
    }
    let text =
        fs::read_to_string(spec).with_context(|| format!("reading field file `{spec}`"))?;
    PolyField::parse_text(&text).map_err(|e| anyhow!("parsing field file `{spec}`: {e}"))
}

/// Loads boundary Fourier data from a file path.
pub fn load_boundary(path: &Path) -> Result<BoundaryData> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading boundary file `{}`", path.display()))?;
    BoundaryData::parse_text(&text)
        .map_err(|e| anyhow!("parsing boundary file `{}`: {e}", path.display()))
}

/// Parses a comma-separated radii list.
pub fn parse_radii(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| anyhow!("invalid radius `{part}` in `{s}`"))
        })
        .collect()
}

/// Parses a probe-grid spec of the form `64x256` into `(n_r, n_theta)`.
pub fn parse_probe_grid(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once('x')
        .ok_or_else(|| anyhow!("probe grid must look like `64x256`, got `{s}`"))?;
    let n_r: usize = a
        .parse()
        .map_err(|_| anyhow!("invalid radial count in probe grid `{s}`"))?;
    let n_theta: usize = b
        .parse()
        .map_err(|_| anyhow!("invalid angular count in probe grid `{s}`"))?;
    if n_r == 0 || n_theta == 0 {
        return Err(anyhow!("probe grid dimensions must be positive, got `{s}`"));
    }
    Ok((n_r, n_theta))
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing `{}`", p.display())),
        None => {
            println!("{}", text.trim_end_matches('\n'));
            Ok(())
        }
    }
}

/// Renders a radial profile as the `r, mean_p, gap_p` CSV.
pub fn profile_csv(prof: &RadialProfile) -> String {
    let mut out = String::from("r,mean_p,gap_p\n");
    for i in 0..prof.radii.len() {
        let gap = prof
            .gaps
            .as_ref()
            .map(|g| g[i].to_string())
            .unwrap_or_default();
        out.push_str(&format!("{},{},{gap}\n", prof.radii[i], prof.means[i]));
    }
    out
}
