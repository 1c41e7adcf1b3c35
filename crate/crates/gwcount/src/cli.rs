//! Command-line surface.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 internal-consistency
//! failure (never expected on a correct build).

use crate::error::{Error, Result};
use crate::genus1::{self, GenusOneReport};
use crate::gw0::{self, MemoTable};
use crate::lattice::{self, candidate_filter, parse_surface, CurveClass, SurfaceKind, SurfaceModel};
use crate::store::{self, TableFormat};
use crate::verify;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "gwcount",
    about = "Exact curve counts on del-Pezzo surfaces",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args, Debug)]
pub struct SurfaceClassArgs {
    /// Surface spec: p2, p2xK (K <= 8), or quadric.
    #[arg(long)]
    pub surface: String,
    /// Class in "d;m1,...,mk" form (blowups, "3;" for k = 0) or "a,b" (quadric).
    #[arg(long)]
    pub class: String,
}

#[derive(Args, Debug)]
pub struct CacheArgs {
    /// Cache file to load before and save after computing.
    /// Defaults to $GWCACHE_PATH when set.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the genus-0 count n0 of a class.
    N0 {
        #[command(flatten)]
        target: SurfaceClassArgs,
        #[command(flatten)]
        cache: CacheArgs,
        /// Skip Weyl normalization of memo keys (slower; for cross-checks).
        #[arg(long)]
        no_weyl: bool,
    },
    /// Print the full genus-1 fixed-j report of a class.
    Genus1 {
        #[command(flatten)]
        target: SurfaceClassArgs,
        /// Automorphism order: generic (2), j1728 (4), j0 (6), or an integer.
        #[arg(long, default_value = "generic")]
        aut: String,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Emit the genus-1 table over all candidate classes with c1.beta <= bound.
    Table {
        /// Surface spec: p2, p2xK, or quadric.
        #[arg(long)]
        surface: String,
        /// Upper bound on c1.beta for the enumerated classes.
        #[arg(long)]
        max_c1: i64,
        /// Automorphism order preset or integer.
        #[arg(long, default_value = "generic")]
        aut: String,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Run a named property suite: p2-oracle, wdvv-pairs, blowdown, weyl,
    /// quadric-bl2, pipeline-identity, or all.
    Verify {
        name: String,
    },
    /// Inspect or build a cache file for a surface.
    Cache {
        /// Surface spec: p2, p2xK, or quadric.
        #[arg(long)]
        surface: String,
        /// Cache file path. Defaults to $GWCACHE_PATH when set.
        #[arg(long)]
        path: Option<PathBuf>,
        /// Populate the cache with every candidate class up to this c1 bound.
        #[arg(long)]
        build_max_c1: Option<i64>,
    },
}

fn cache_path(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os("GWCACHE_PATH").map(PathBuf::from))
}

fn load_or_new(s: &SurfaceModel, path: Option<&PathBuf>) -> Result<MemoTable> {
    match path {
        Some(p) if p.exists() => store::load_cache(p, s),
        _ => Ok(MemoTable::new(s)),
    }
}

fn save_if_requested(memo: &MemoTable, s: &SurfaceModel, path: Option<&PathBuf>) -> Result<()> {
    if let Some(p) = path {
        store::save_cache(memo, s, p)?;
    }
    Ok(())
}

fn report_text(r: &GenusOneReport) -> String {
    format!(
        "class={} delta={} genus={} n0={} CR={} RT1={} aut={} n1j={}{}\n",
        r.class_string,
        r.delta,
        r.genus,
        r.n0,
        r.correction,
        r.rt1,
        r.aut_order,
        r.n1j_string(),
        if r.n1j_is_integral() {
            ""
        } else {
            " (non-integral)"
        }
    )
}

/// Enumerates candidate classes in Weyl normal form with 1 <= c1.beta <=
/// max_c1, ordered by (c1.beta, coordinates).
pub fn enumerate_normal_forms(s: &SurfaceModel, max_c1: i64) -> Vec<CurveClass> {
    let mut out = Vec::new();
    match s.kind {
        SurfaceKind::Quadric => {
            for a in 0..=max_c1 / 2 {
                for b in 0..=a {
                    let beta = CurveClass(vec![a, b]);
                    if candidate_filter(s, &beta) && 2 * (a + b) <= max_c1 {
                        out.push(beta);
                    }
                }
            }
        }
        SurfaceKind::P2Blowup(k) => {
            let k = k as usize;
            if k >= 1 {
                // The exceptional normal form (0; 0, ..., 0, -1).
                let mut e = vec![0i64; k + 1];
                e[k] = -1;
                out.push(CurveClass(e));
            }
            // c1.beta >= d/3 on normal forms, so d <= 3 * max_c1.
            for d in 1..=3 * max_c1 {
                let mut coords = vec![d];
                gen_multiplicities(s, k, d, max_c1, &mut coords, &mut out);
            }
        }
    }
    out.sort_by_key(|beta| (lattice::c1_pairing(s, beta).unwrap(), beta.clone()));
    out
}

fn gen_multiplicities(
    s: &SurfaceModel,
    k: usize,
    d: i64,
    max_c1: i64,
    coords: &mut Vec<i64>,
    out: &mut Vec<CurveClass>,
) {
    let filled = coords.len() - 1;
    if filled == k {
        // Normal form: top three multiplicities must not exceed d.
        if k >= 3 && coords[1] + coords[2] + coords[3] > d {
            return;
        }
        let beta = CurveClass(coords.clone());
        let c1 = lattice::c1_pairing(s, &beta).unwrap();
        if (1..=max_c1).contains(&c1) && candidate_filter(s, &beta) {
            out.push(beta);
        }
        return;
    }
    let upper = if filled == 0 { d } else { coords[filled] };
    let remaining = (k - filled) as i64;
    for m in (0..=upper).rev() {
        // c1 = 3d - sum(m) must stay >= 1 even after the cheapest completion.
        let sum_so_far: i64 = coords[1..].iter().sum::<i64>() + m;
        if 3 * d - sum_so_far - (remaining - 1) * m < 1 {
            continue;
        }
        coords.push(m);
        gen_multiplicities(s, k, d, max_c1, coords, out);
        coords.pop();
    }
}

/// Parses argv and runs the command, writing results to `stdout`.
/// Returns the process exit code.
pub fn dispatch<I, T>(argv: I, stdout: &mut impl std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own help/version output is a success, not a usage error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(stdout, "{e}");
            return code;
        }
    };
    match run(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli, stdout: &mut impl std::io::Write) -> Result<()> {
    match cli.cmd {
        Command::N0 {
            target,
            cache,
            no_weyl,
        } => {
            let s = parse_surface(&target.surface)?;
            let beta = s.parse_class(&target.class)?;
            let path = cache_path(cache.cache);
            let mut memo = load_or_new(&s, path.as_ref())?;
            let value = gw0::n0_opts(&s, &beta, &mut memo, !no_weyl)?;
            save_if_requested(&memo, &s, path.as_ref())?;
            writeln!(stdout, "{value}")?;
        }
        Command::Genus1 {
            target,
            aut,
            format,
            cache,
        } => {
            let s = parse_surface(&target.surface)?;
            let beta = s.parse_class(&target.class)?;
            let aut = genus1::aut_order(genus1::parse_aut(&aut)?)?;
            let path = cache_path(cache.cache);
            let mut memo = load_or_new(&s, path.as_ref())?;
            let report = genus1::n1j(&s, &beta, aut, &mut memo)?;
            save_if_requested(&memo, &s, path.as_ref())?;
            match format.as_str() {
                "text" => write!(stdout, "{}", report_text(&report))?,
                "json" => write!(
                    stdout,
                    "{}",
                    store::render_table(std::slice::from_ref(&report), TableFormat::Json)
                )?,
                other => {
                    return Err(Error::Parse(format!("unknown format {other:?}")));
                }
            }
        }
        Command::Table {
            surface,
            max_c1,
            aut,
            format,
            output,
            cache,
        } => {
            let s = parse_surface(&surface)?;
            let aut = genus1::aut_order(genus1::parse_aut(&aut)?)?;
            let format = TableFormat::parse(&format)?;
            let path = cache_path(cache.cache);
            let mut memo = load_or_new(&s, path.as_ref())?;
            let mut reports = Vec::new();
            for beta in enumerate_normal_forms(&s, max_c1) {
                reports.push(genus1::n1j(&s, &beta, aut, &mut memo)?);
            }
            save_if_requested(&memo, &s, path.as_ref())?;
            let rendered = store::render_table(&reports, format);
            match output {
                Some(p) => std::fs::write(p, rendered)?,
                None => write!(stdout, "{rendered}")?,
            }
        }
        Command::Verify { name } => {
            let names: Vec<&str> = if name == "all" {
                verify::SUITE_NAMES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let mut failed = false;
            for n in names {
                let report = verify::run_suite(n)?;
                writeln!(stdout, "{}", report.summary_line())?;
                for f in &report.failures {
                    writeln!(stdout, "  {f}")?;
                }
                failed |= !report.passed();
            }
            if failed {
                return Err(Error::Inconsistency("verify suite failed".into()));
            }
        }
        Command::Cache {
            surface,
            path,
            build_max_c1,
        } => {
            let s = parse_surface(&surface)?;
            let path = cache_path(path).ok_or_else(|| {
                Error::Validation("no cache path given (use --path or GWCACHE_PATH)".into())
            })?;
            let mut memo = load_or_new(&s, Some(&path))?;
            if let Some(bound) = build_max_c1 {
                for beta in enumerate_normal_forms(&s, bound) {
                    gw0::n0(&s, &beta, &mut memo)?;
                }
                store::save_cache(&memo, &s, &path)?;
            }
            writeln!(
                stdout,
                "surface={} entries={} path={}",
                s.surface_id(),
                memo.len(),
                path.display()
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::make_surface;

    fn run_cli(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("gwcount").chain(args.iter().copied());
        let code = dispatch(argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn n0_command() {
        let (code, out) = run_cli(&["n0", "--surface", "p2", "--class", "4;"]);
        assert_eq!(code, 0);
        assert_eq!(out, "620\n");
    }

    #[test]
    fn genus1_command() {
        let (code, out) = run_cli(&[
            "genus1", "--surface", "p2", "--class", "3;", "--aut", "generic",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("n1j=12"), "output was {out:?}");
    }

    #[test]
    fn del_pezzo_bound_is_exit_1() {
        let (code, _) = run_cli(&["n0", "--surface", "p2x9", "--class", "1;"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn unknown_flag_is_exit_1() {
        let (code, _) = run_cli(&["n0", "--surface", "p2", "--frobnicate"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn enumerate_p2_degrees() {
        let s = make_surface(SurfaceKind::P2Blowup(0)).unwrap();
        let classes = enumerate_normal_forms(&s, 15);
        assert_eq!(
            classes,
            (1..=5).map(|d| CurveClass(vec![d])).collect::<Vec<_>>()
        );
    }

    #[test]
    fn enumerate_includes_exceptional_and_respects_normal_form() {
        let s = make_surface(SurfaceKind::P2Blowup(3)).unwrap();
        let classes = enumerate_normal_forms(&s, 6);
        assert!(classes.contains(&CurveClass(vec![0, 0, 0, -1])));
        for beta in &classes {
            assert_eq!(crate::lattice::weyl_normalize(&s, beta), *beta);
            assert!(candidate_filter(&s, beta));
        }
        // Sorted by c1 pairing, then coordinates.
        let keys: Vec<i64> = classes
            .iter()
            .map(|b| lattice::c1_pairing(&s, b).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn table_csv_deterministic() {
        let (code, first) = run_cli(&["table", "--surface", "p2", "--max-c1", "12"]);
        assert_eq!(code, 0);
        let (_, second) = run_cli(&["table", "--surface", "p2", "--max-c1", "12"]);
        assert_eq!(first, second);
        assert!(first.starts_with("class,delta,genus,n0,CR,RT1,aut,n1j\n"));
        assert!(first.contains("3;,8,1,12,84,108,2,12\n"));
    }
}
