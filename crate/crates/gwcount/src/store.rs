//! Deterministic persistence: memo caches and result tables.
//!
//! Cache format, bit-exact:
//!   line 1:   "GWCACHE 1 <surface-id>\n"
//!   records:  "<class-string>=<decimal>\n", sorted by class string bytes,
//!             no duplicates, LF endings, no trailing whitespace.

use crate::error::{Error, Result};
use crate::genus1::GenusOneReport;
use crate::gw0::MemoTable;
use crate::lattice::SurfaceModel;
use num_bigint::BigInt;
use num_traits::Signed;
use std::fs;
use std::io::Write;
use std::path::Path;

pub const CACHE_MAGIC: &str = "GWCACHE";
pub const CACHE_VERSION: u32 = 1;

/// Renders a memo table in the cache format.
pub fn render_cache(memo: &MemoTable, s: &SurfaceModel) -> Result<String> {
    if memo.surface_id() != s.surface_id() {
        return Err(Error::Validation(format!(
            "memo table for {} saved with surface {}",
            memo.surface_id(),
            s.surface_id()
        )));
    }
    let mut records: Vec<(String, &BigInt)> = memo
        .iter()
        .map(|(class, value)| (s.class_string(class), value))
        .collect();
    records.sort_by(|a, b| a.0.as_bytes().cmp(b.0.as_bytes()));
    let mut out = format!("{CACHE_MAGIC} {CACHE_VERSION} {}\n", s.surface_id());
    for (class, value) in records {
        out.push_str(&format!("{class}={value}\n"));
    }
    Ok(out)
}

/// Writes the cache atomically (temp file + rename in the same directory).
pub fn save_cache(memo: &MemoTable, s: &SurfaceModel, path: &Path) -> Result<()> {
    let contents = render_cache(memo, s)?;
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parses cache text into a memo table for the given surface.
pub fn parse_cache(text: &str, s: &SurfaceModel, path: &Path) -> Result<MemoTable> {
    let err = |line: usize, msg: String| Error::CacheFormat {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut lines = text.split('\n');
    let header = lines
        .next()
        .ok_or_else(|| err(1, "empty file".to_string()))?;
    let parts: Vec<&str> = header.split(' ').collect();
    if parts.len() != 3 || parts[0] != CACHE_MAGIC {
        return Err(err(1, format!("bad header {header:?}")));
    }
    let version: u32 = parts[1]
        .parse()
        .map_err(|_| err(1, format!("bad version {:?}", parts[1])))?;
    if version != CACHE_VERSION {
        return Err(err(
            1,
            format!("unsupported cache version {version} (expected {CACHE_VERSION})"),
        ));
    }
    if parts[2] != s.surface_id() {
        return Err(err(
            1,
            format!(
                "cache is for surface {:?}, expected {:?}",
                parts[2],
                s.surface_id()
            ),
        ));
    }
    let mut memo = MemoTable::new(s);
    let mut prev_key: Option<String> = None;
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        if line.is_empty() {
            // Only legal as the trailing artifact of the final newline.
            if text.ends_with('\n') && idx == text.matches('\n').count() - 1 {
                continue;
            }
            return Err(err(line_no, "blank line".to_string()));
        }
        let (class_str, value_str) = line
            .split_once('=')
            .ok_or_else(|| err(line_no, format!("missing '=' in {line:?}")))?;
        let class = s
            .parse_class(class_str)
            .map_err(|e| err(line_no, e.to_string()))?;
        let value: BigInt = value_str
            .parse()
            .map_err(|_| err(line_no, format!("bad integer {value_str:?}")))?;
        if value.is_negative() {
            return Err(err(line_no, format!("negative count {value}")));
        }
        if let Some(prev) = &prev_key {
            if class_str.as_bytes() <= prev.as_bytes() {
                return Err(err(
                    line_no,
                    format!("record {class_str:?} out of order after {prev:?}"),
                ));
            }
        }
        prev_key = Some(class_str.to_string());
        memo.insert(class, value)
            .map_err(|e| err(line_no, e.to_string()))?;
    }
    Ok(memo)
}

pub fn load_cache(path: &Path, s: &SurfaceModel) -> Result<MemoTable> {
    let text = fs::read_to_string(path)?;
    parse_cache(&text, s, path)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(s: &str) -> Result<TableFormat> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

pub const TABLE_COLUMNS: [&str; 8] =
    ["class", "delta", "genus", "n0", "CR", "RT1", "aut", "n1j"];

/// Renders reports with the fixed column order. CSV rows and JSON object
/// keys follow [`TABLE_COLUMNS`]; every output is newline-terminated.
pub fn render_table(reports: &[GenusOneReport], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            out.push_str(&TABLE_COLUMNS.join(","));
            out.push('\n');
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.class_string,
                    r.delta,
                    r.genus,
                    r.n0,
                    r.correction,
                    r.rt1,
                    r.aut_order,
                    r.n1j_string()
                ));
            }
            out
        }
        TableFormat::Json => {
            let objs: Vec<String> = reports.iter().map(render_report_json).collect();
            format!("[{}]\n", objs.join(","))
        }
    }
}

/// One report as a JSON object, keys in [`TABLE_COLUMNS`] order. Hand-rolled
/// for deterministic key order; class strings contain no characters needing
/// JSON escapes.
pub fn render_report_json(r: &GenusOneReport) -> String {
    format!(
        "{{\"class\":\"{}\",\"delta\":{},\"genus\":{},\"n0\":\"{}\",\
         \"CR\":\"{}\",\"RT1\":\"{}\",\"aut\":{},\"n1j\":\"{}\"}}",
        r.class_string,
        r.delta,
        r.genus,
        r.n0,
        r.correction,
        r.rt1,
        r.aut_order,
        r.n1j_string()
    )
}

pub fn export_table(reports: &[GenusOneReport], format: TableFormat, path: &Path) -> Result<()> {
    let contents = render_table(reports, format);
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    fs::write(&tmp, contents.as_bytes())?;
    fs::rename(&tmp, path)?;
    Ok(())
}
