//! Run configuration: a flat key=value text file, an environment fallback
//! (`BCDISK_CONFIG` names the file), and per-key overrides for CLI use.
//!
//! Every numerical knob used by the solvers and quadrature lives here so
//! that acceptance runs are reproducible from a single auditable file.
//! Unknown keys are errors (no silent typo-tolerance), and validation is
//! strict: the angular resolution must be a power of two of at least 64 so
//! that trapezoid exactness and DFT projections stay aligned across modules.

use std::path::Path;

use crate::error::{Error, Result};
use crate::quad::EpsilonPolicy;
use crate::tolerances::{
    DEFAULT_N_R, DEFAULT_N_THETA, EPS_FACTOR, EPS_FLOOR, SERIES_CAP, SERIES_TOL, SOLVABILITY_TOL,
};

/// Environment variable naming the default config file.
pub const ENV_VAR: &str = "BCDISK_CONFIG";

/// All run-level configuration, with one flat key per field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunConfig {
    /// Radial Gauss-Legendre points of the disk quadrature (`n_r`).
    pub n_r: usize,
    /// Angular resolution, a power of two `>= 64` (`n_theta`).
    pub n_theta: usize,
    /// Taper radius factor relative to the grid cell diameter (`eps_factor`).
    pub eps_factor: f64,
    /// Lower clamp of the taper radius (`eps_floor`).
    pub eps_floor: f64,
    /// Neumann-series tail tolerance (`series_tol`).
    pub series_tol: f64,
    /// Neumann-series hard cap (`series_cap`).
    pub series_cap: usize,
    /// Dirichlet solvability-gap threshold (`solvability_tol`).
    pub solvability_tol: f64,
    /// RNG seed for randomized checks (`seed`).
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_r: DEFAULT_N_R,
            n_theta: DEFAULT_N_THETA,
            eps_factor: EPS_FACTOR,
            eps_floor: EPS_FLOOR,
            series_tol: SERIES_TOL,
            series_cap: SERIES_CAP,
            solvability_tol: SOLVABILITY_TOL,
            seed: 7,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("invalid value {value:?} for key {key:?}")))
}

impl RunConfig {
    /// Sets one key from its text value. Unknown keys are errors.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key.trim() {
            "n_r" => self.n_r = parse_num(key, value)?,
            "n_theta" => self.n_theta = parse_num(key, value)?,
            "eps_factor" => self.eps_factor = parse_num(key, value)?,
            "eps_floor" => self.eps_floor = parse_num(key, value)?,
            "series_tol" => self.series_tol = parse_num(key, value)?,
            "series_cap" => self.series_cap = parse_num(key, value)?,
            "solvability_tol" => self.solvability_tol = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            other => {
                return Err(Error::Config(format!("unknown config key {other:?}")));
            }
        }
        Ok(())
    }

    /// Parses `key = value` lines (with `#` comments) on top of defaults.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            cfg.set(key, value)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads and parses a config file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_text(&text)
    }

    /// Resolves the effective config: an explicit path wins, else the file
    /// named by `BCDISK_CONFIG`, else defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        if let Some(p) = explicit {
            return Self::from_file(p);
        }
        if let Ok(p) = std::env::var(ENV_VAR) {
            if !p.trim().is_empty() {
                return Self::from_file(Path::new(&p));
            }
        }
        Ok(RunConfig::default())
    }

    /// Serializes back to the flat text format (stable key order).
    pub fn to_text(&self) -> String {
        format!(
            "n_r = {}\nn_theta = {}\neps_factor = {}\neps_floor = {}\n\
             series_tol = {}\nseries_cap = {}\nsolvability_tol = {}\nseed = {}\n",
            self.n_r,
            self.n_theta,
            self.eps_factor,
            self.eps_floor,
            self.series_tol,
            self.series_cap,
            self.solvability_tol,
            self.seed
        )
    }

    /// Strict validation of all fields.
    pub fn validate(&self) -> Result<()> {
        if self.n_r < 4 {
            return Err(Error::Config(format!("n_r = {} must be >= 4", self.n_r)));
        }
        if self.n_theta < 64 || !self.n_theta.is_power_of_two() {
            return Err(Error::Config(format!(
                "n_theta = {} must be a power of two >= 64",
                self.n_theta
            )));
        }
        if !(self.eps_factor > 0.0) {
            return Err(Error::Config("eps_factor must be positive".into()));
        }
        if !(0.0..=0.25).contains(&self.eps_floor) {
            return Err(Error::Config("eps_floor must lie in [0, 0.25]".into()));
        }
        if !(self.series_tol > 0.0 && self.series_tol < 1.0) {
            return Err(Error::Config("series_tol must lie in (0, 1)".into()));
        }
        if self.series_cap == 0 {
            return Err(Error::Config("series_cap must be >= 1".into()));
        }
        if !(self.solvability_tol > 0.0) {
            return Err(Error::Config("solvability_tol must be positive".into()));
        }
        Ok(())
    }

    /// The taper policy implied by this config.
    pub fn epsilon_policy(&self) -> EpsilonPolicy {
        EpsilonPolicy {
            factor: self.eps_factor,
            floor: self.eps_floor,
        }
    }

    /// Schwarz solver options implied by this config.
    pub fn schwarz_options(&self) -> crate::bvp::SchwarzOptions {
        crate::bvp::SchwarzOptions {
            series_tol: self.series_tol,
            series_cap: self.series_cap,
        }
    }

    /// Dirichlet solver options implied by this config.
    pub fn dirichlet_options(&self) -> crate::bvp::DirichletOptions {
        crate::bvp::DirichletOptions {
            kernel_constant: None,
            n_theta: self.n_theta,
            solvability_tol: self.solvability_tol,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn text_round_trip_preserves_everything() {
        let mut cfg = RunConfig::default();
        cfg.n_theta = 1024;
        cfg.seed = 99;
        cfg.series_tol = 1e-8;
        let back = RunConfig::parse_text(&cfg.to_text()).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let cfg = RunConfig::parse_text("# header\n\n n_theta = 128  # inline\n").unwrap();
        assert_eq!(cfg.n_theta, 128);
        assert_eq!(cfg.n_r, RunConfig::default().n_r);
    }

    #[test]
    fn unknown_keys_and_bad_values_error() {
        assert!(RunConfig::parse_text("n_thetaa = 128\n").is_err());
        assert!(RunConfig::parse_text("n_theta = many\n").is_err());
        assert!(RunConfig::parse_text("n_theta\n").is_err());
    }

    #[test]
    fn validation_rejects_non_power_of_two_angles() {
        assert!(RunConfig::parse_text("n_theta = 100\n").is_err());
        assert!(RunConfig::parse_text("n_theta = 32\n").is_err());
        assert!(RunConfig::parse_text("series_tol = 0\n").is_err());
        assert!(RunConfig::parse_text("eps_floor = 0.3\n").is_err());
    }

    #[test]
    fn from_file_reads_overrides() {
        let mut tmp = tempfile::NamedTempFile::new().unwrap();
        writeln!(tmp, "seed = 123\nn_r = 32").unwrap();
        let cfg = RunConfig::from_file(tmp.path()).unwrap();
        assert_eq!(cfg.seed, 123);
        assert_eq!(cfg.n_r, 32);
    }

    #[test]
    fn set_overrides_apply_after_load() {
        let mut cfg = RunConfig::default();
        cfg.set("seed", "5").unwrap();
        cfg.set(" series_cap ", " 12 ").unwrap();
        assert_eq!(cfg.seed, 5);
        assert_eq!(cfg.series_cap, 12);
        assert!(cfg.set("nope", "1").is_err());
    }
}
