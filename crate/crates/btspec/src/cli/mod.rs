//! Command-line front end: argument parsing, run configuration and the
//! table-producing commands.

mod commands;
mod table;

pub use commands::{
    cmd_asympt, cmd_convergence, cmd_field, cmd_nmr, cmd_spectrum, cmd_wkb, leading_expansion, offset_radius, rescale_signed,
};
pub use table::{fmt_f64, Cell, Table, SCHEMA};

use crate::airy1d::BoundaryCondition;
use crate::error::{Error, Result};
use crate::galerkin::{AssembleOptions, Coupling};
use crate::geometry::DomainSpec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "btspec", version, about = "Bloch-Torrey spectra: asymptotics, Galerkin eigenvalues, WKB profiles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Four- and three-term asymptotic expansion over the h grid.
    Asympt {
        #[command(flatten)]
        common: CommonArgs,
        /// one row per localization point instead of the leading one
        #[arg(long)]
        all_points: bool,
    },
    /// Galerkin eigenvalues over the h grid.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Eigenfunction on a polar grid at the first h of the grid.
    Field {
        #[command(flatten)]
        common: CommonArgs,
        /// 1-based eigenvalue index
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, default_value_t = 100)]
        nr: usize,
        #[arg(long, default_value_t = 180)]
        ntheta: usize,
    },
    /// Boundary trace of the first eigenfunction against the WKB decay (disk only).
    Wkb {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 0.3)]
        s_max: f64,
        #[arg(long, default_value_t = 61)]
        ns: usize,
    },
    /// Decay rate omega for D(-Laplacian) + i gamma g x1 over a gradient sweep.
    Nmr {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 1.0)]
        diffusivity: f64,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        /// START:STOP:COUNT, log-spaced
        #[arg(long, default_value = "0.01:1000:11")]
        g: String,
    },
    /// First eigenvalue against truncation size at the first h of the grid.
    Convergence {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        m_list: Vec<usize>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// disk:R0 | annulus:R1,R2 | twolayer:R1,R2
    #[arg(long, default_value = "disk:1")]
    pub domain: String,
    /// d | n | r:KAPPA | t:KAPPA per boundary component, outer first
    #[arg(long, default_value = "n")]
    pub bc: String,
    /// kappa = KHAT h^{2/3} on every Robin/transmission component
    #[arg(long)]
    pub scaled_kappa: Option<f64>,
    /// START:STOP:STEP, a comma list, or a single value
    #[arg(long, default_value = "0.3:0.45:0.05")]
    pub h13: String,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// truncation size M (default: smallest M meeting the criterion)
    #[arg(long)]
    pub trunc: Option<usize>,
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 4)]
    pub eigs: usize,
    #[arg(long)]
    pub vectors: bool,
    /// keep the sign of the imaginary part in rescaled values
    #[arg(long)]
    pub signed_im: bool,
    #[arg(long)]
    pub dump_matrix: Option<String>,
    /// run with a truncation that violates the criterion
    #[arg(long)]
    pub allow_under_resolved: bool,
    /// conjugate-pairing tolerance in rescaled units
    #[arg(long, default_value_t = 1e-6)]
    pub pair_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum CommandKind {
    Asympt { all_points: bool },
    Spectrum,
    Field { index: usize, nr: usize, ntheta: usize },
    Wkb { s_max: f64, ns: usize },
    Nmr { diffusivity: f64, gamma: f64, g: Vec<f64> },
    Convergence { m_list: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub domain: DomainSpec,
    pub scaled_kappa: Option<f64>,
    pub h13: Vec<f64>,
    pub n: usize,
    pub k: usize,
    pub trunc: Option<usize>,
    pub eigs: usize,
    pub vectors: bool,
    pub signed_im: bool,
    pub format: Format,
    pub out: Option<String>,
    pub dump_matrix: Option<String>,
    pub allow_under_resolved: bool,
    pub pair_tol: f64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let (kind, c) = match &cli.command {
            Command::Asympt { common, all_points } => (CommandKind::Asympt { all_points: *all_points }, common),
            Command::Spectrum { common } => (CommandKind::Spectrum, common),
            Command::Field { common, index, nr, ntheta } => {
                (CommandKind::Field { index: *index, nr: *nr, ntheta: *ntheta }, common)
            }
            Command::Wkb { common, s_max, ns } => (CommandKind::Wkb { s_max: *s_max, ns: *ns }, common),
            Command::Nmr { common, diffusivity, gamma, g } => {
                (CommandKind::Nmr { diffusivity: *diffusivity, gamma: *gamma, g: parse_log_grid(g)? }, common)
            }
            Command::Convergence { common, m_list } => (CommandKind::Convergence { m_list: m_list.clone() }, common),
        };
        let cfg = RunConfig {
            command: kind,
            domain: parse_domain(&c.domain, &c.bc, c.scaled_kappa)?,
            scaled_kappa: c.scaled_kappa,
            h13: parse_grid(&c.h13)?,
            n: c.n,
            k: c.k,
            trunc: c.trunc,
            eigs: c.eigs,
            vectors: c.vectors,
            signed_im: c.signed_im,
            format: c.format,
            out: c.out.clone(),
            dump_matrix: c.dump_matrix.clone(),
            allow_under_resolved: c.allow_under_resolved,
            pair_tol: c.pair_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.domain.validate()?;
        if self.h13.is_empty() || self.h13.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::Invalid("h^{1/3} grid must be nonempty and positive".into()));
        }
        if self.n == 0 || self.k == 0 || self.eigs == 0 {
            return Err(Error::Invalid("--n, --k and --eigs start at 1".into()));
        }
        if let Some(kh) = self.scaled_kappa {
            if !(kh >= 0.0 && kh.is_finite()) {
                return Err(Error::Invalid(format!("--scaled-kappa {kh} must be >= 0")));
            }
        }
        match &self.command {
            CommandKind::Field { index, nr, ntheta } if *index == 0 || *nr == 0 || *ntheta == 0 => {
                Err(Error::Invalid("field index and grid sizes start at 1".into()))
            }
            CommandKind::Wkb { s_max, ns } if !(*s_max > 0.0) || *ns < 2 => Err(Error::Invalid("need --s-max > 0 and --ns >= 2".into())),
            CommandKind::Nmr { diffusivity, gamma, g } if !(*diffusivity > 0.0 && *gamma > 0.0) || g.is_empty() => {
                Err(Error::Invalid("D, gamma and the g sweep must be positive".into()))
            }
            CommandKind::Convergence { m_list } if m_list.is_empty() || m_list.windows(2).any(|w| w[0] >= w[1]) => {
                Err(Error::Invalid("--m-list must be ascending".into()))
            }
            _ => Ok(()),
        }
    }

    /// Domain at a given h: in the scaled regime every Robin/transmission kappa is kappa_hat h^{2/3}.
    pub fn domain_at(&self, h: f64) -> DomainSpec {
        let Some(kh) = self.scaled_kappa else { return self.domain };
        let set = |c: BoundaryCondition| match c {
            BoundaryCondition::Robin { .. } | BoundaryCondition::Transmission { .. } => c.with_kappa(kh * h.powf(2.0 / 3.0)),
            _ => c,
        };
        DomainSpec { outer: set(self.domain.outer), inner: self.domain.inner.map(set), ..self.domain }
    }

    pub fn assemble_options(&self) -> AssembleOptions {
        AssembleOptions {
            coupling: self.scaled_kappa.map_or(Coupling::Fixed, |kh| Coupling::Scaled { kappa_hat: kh }),
            allow_under_resolved: self.allow_under_resolved,
        }
    }
}

pub fn parse_bc(s: &str) -> Result<BoundaryCondition> {
    let s = s.trim().to_ascii_lowercase();
    let (tag, arg) = match s.split_once(':') {
        Some((t, a)) => (t.to_string(), Some(a.to_string())),
        None => (s.clone(), None),
    };
    let kappa = || -> Result<f64> {
        let a = arg.as_deref().ok_or_else(|| Error::Invalid(format!("boundary condition `{s}` needs :KAPPA")))?;
        a.parse::<f64>().map_err(|_| Error::Invalid(format!("bad kappa in `{s}`")))
    };
    match tag.as_str() {
        "d" if arg.is_none() => Ok(BoundaryCondition::Dirichlet),
        "n" if arg.is_none() => Ok(BoundaryCondition::Neumann),
        "r" => Ok(BoundaryCondition::Robin { kappa: kappa()? }),
        "t" => Ok(BoundaryCondition::Transmission { kappa: kappa()? }),
        _ => Err(Error::Invalid(format!("unknown boundary condition `{s}`"))),
    }
}

fn parse_numbers(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Invalid(format!("bad number `{t}`"))))
        .collect()
}

/// `disk:R0`, `annulus:R1,R2` or `twolayer:R1,R2` with outer-first conditions.
pub fn parse_domain(domain: &str, bc: &str, scaled_kappa: Option<f64>) -> Result<DomainSpec> {
    let (kind, radii) = domain.split_once(':').ok_or_else(|| Error::Invalid(format!("bad domain `{domain}`")))?;
    let r = parse_numbers(radii)?;
    let bcs: Vec<BoundaryCondition> = bc.split(',').map(parse_bc).collect::<Result<_>>()?;
    let d = match (kind.trim().to_ascii_lowercase().as_str(), r.as_slice()) {
        ("disk", [r0]) => {
            if bcs.len() != 1 {
                return Err(Error::Invalid("a disk takes one boundary condition".into()));
            }
            DomainSpec::disk(*r0, bcs[0])
        }
        ("annulus", [r1, r2]) => match bcs.as_slice() {
            [o] => DomainSpec::annulus(*r1, *r2, *o, *o),
            [o, i] => DomainSpec::annulus(*r1, *r2, *o, *i),
            _ => return Err(Error::Invalid("an annulus takes one or two boundary conditions".into())),
        },
        ("twolayer", [r1, r2]) => match (bcs.as_slice(), scaled_kappa) {
            ([o], Some(kh)) => DomainSpec::two_layer(*r1, *r2, *o, kh),
            ([o, BoundaryCondition::Transmission { kappa }], _) => DomainSpec::two_layer(*r1, *r2, *o, *kappa),
            _ => return Err(Error::Invalid("two-layer domain takes `OUTER,t:KAPPA`".into())),
        },
        _ => return Err(Error::Invalid(format!("bad domain `{domain}`"))),
    };
    d.validate()?;
    Ok(d)
}

/// `start:stop:step` (inclusive), a comma list, or a single value.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, st] => {
            let (a, b, st): (f64, f64, f64) = (parse_one(a)?, parse_one(b)?, parse_one(st)?);
            if !(st > 0.0) || b < a {
                return Err(Error::Invalid(format!("bad grid `{s}`")));
            }
            let n = ((b - a) / st + 1e-9).floor() as usize + 1;
            Ok((0..n).map(|i| a + i as f64 * st).collect())
        }
        [_] => parse_numbers(s),
        _ => Err(Error::Invalid(format!("bad grid `{s}`"))),
    }
}

/// `start:stop:count`, log-spaced and inclusive.
pub fn parse_log_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, c] => {
            let (a, b) = (parse_one(a)?, parse_one(b)?);
            let n: usize = c.trim().parse().map_err(|_| Error::Invalid(format!("bad count in `{s}`")))?;
            if !(a > 0.0 && b >= a) || n == 0 {
                return Err(Error::Invalid(format!("bad sweep `{s}`")));
            }
            if n == 1 {
                return Ok(vec![a]);
            }
            let (la, lb) = (a.ln(), b.ln());
            Ok((0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect())
        }
        _ => parse_numbers(s),
    }
}

fn parse_one(t: &str) -> Result<f64> {
    t.trim().parse().map_err(|_| Error::Invalid(format!("bad number `{t}`")))
}

/// Runs the configured command inside a pool capped by `BTSPEC_THREADS`.
pub fn run(cfg: &RunConfig) -> Result<Table> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("BTSPEC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        b = b.num_threads(n.max(1));
    }
    let pool = b.build().map_err(|e| Error::Invalid(e.to_string()))?;
    pool.install(|| match cfg.command {
        CommandKind::Asympt { .. } => cmd_asympt(cfg),
        CommandKind::Spectrum => cmd_spectrum(cfg),
        CommandKind::Field { .. } => cmd_field(cfg),
        CommandKind::Wkb { .. } => cmd_wkb(cfg),
        CommandKind::Nmr { .. } => cmd_nmr(cfg),
        CommandKind::Convergence { .. } => cmd_convergence(cfg),
    })
}

pub fn write_table<W: Write>(cfg: &RunConfig, table: &Table, w: W) -> Result<()> {
    match cfg.format {
        Format::Csv => table.write_csv(cfg, w),
        Format::Json => table.write_json(cfg, w),
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let res = RunConfig::from_cli(&cli).and_then(|cfg| {
        let t = run(&cfg)?;
        let mut buf = Vec::new();
        write_table(&cfg, &t, &mut buf)?;
        match &cfg.out {
            Some(p) => std::fs::write(p, buf)?,
            None => std::io::stdout().lock().write_all(&buf)?,
        }
        Ok(())
    });
    match res {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("btspec: {e}");
            1
        }
    }
}
