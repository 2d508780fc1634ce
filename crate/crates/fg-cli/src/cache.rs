//! Persistent character cache: one JSON document per weight, written with
//! an atomic rename so concurrent invocations never observe a torn file.
//! A cache hit must be byte-identical to a fresh recomputation; the
//! `verify cache` suite enforces that.

use anyhow::{Context, Result};
use fg_core::blocks::BlockWeight;
use fg_core::characters::CharContext;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const SCHEMA: u32 = 1;

pub struct CacheKey {
    algebra: String,
    /// doubled coordinates of lambda + rho
    shifted: Vec<i64>,
    method: &'static str,
}

impl CacheKey {
    pub fn of(ctx: &CharContext, bw: &BlockWeight, recursion: bool) -> CacheKey {
        let shifted = (&bw.lambda + &ctx.rs.rho).scaled().to_vec();
        CacheKey {
            algebra: ctx.algebra().name().to_ascii_lowercase(),
            shifted,
            method: if recursion { "rec" } else { "dir" },
        }
    }

    fn file_name(&self) -> String {
        let coords: Vec<String> = self
            .shifted
            .iter()
            .map(|x| if *x < 0 { format!("m{}", -x) } else { x.to_string() })
            .collect();
        format!("{}_v{}_{}_{}.json", self.algebra, SCHEMA, self.method, coords.join("_"))
    }
}

/// Cache directory: the flag wins, then FG_CACHE_DIR, then ~/.cache/fg.
pub fn resolve_dir(flag: Option<PathBuf>) -> Result<PathBuf> {
    if let Some(dir) = flag {
        return Ok(dir);
    }
    if let Ok(env) = std::env::var("FG_CACHE_DIR") {
        if !env.is_empty() {
            return Ok(PathBuf::from(env));
        }
    }
    let base = std::env::var("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|_| std::env::var("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .context("no cache directory; pass --cache-dir or set FG_CACHE_DIR")?;
    Ok(base.join("fg"))
}

pub fn lookup(dir: &Path, key: &CacheKey) -> Result<Option<Vec<u8>>> {
    let path = dir.join(key.file_name());
    match std::fs::read(&path) {
        Ok(bytes) => Ok(Some(bytes)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e).context(format!("reading cache file {}", path.display())),
    }
}

pub fn store(dir: &Path, key: &CacheKey, bytes: &[u8]) -> Result<()> {
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating cache directory {}", dir.display()))?;
    let path = dir.join(key.file_name());
    let mut tmp = tempfile::NamedTempFile::new_in(dir).context("creating cache temp file")?;
    tmp.write_all(bytes)?;
    tmp.persist(&path).with_context(|| format!("writing cache file {}", path.display()))?;
    Ok(())
}
