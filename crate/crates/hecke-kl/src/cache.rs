//! On-disk cache of KL tables.
//!
//! Rank `n` is stored as `kl-n{n}.bin` with a JSON manifest `kl-n{n}.json`. The binary file is a
//! sequence of records, each a little-endian `u32` byte length followed by the payload
//! `y: u32, w: u32, lowest exponent: i32, count: u32, count x i64 coefficients` (all little-endian).
//! Indices refer to the length-then-lexicographic numbering of [`crate::group::SymGroup`].

use std::fs;
use std::hash::Hasher;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use fnv::FnvHasher;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::{install_table, KlTable};
use crate::Laurent;

pub const CACHE_FORMAT_VERSION: u64 = 1;

/// Conventions a cached table depends on. Tables written under other conventions are ignored.
pub const CONVENTION_FINGERPRINT: &str =
    "(H_s+v)(H_s-v^-1)=0; b_s=H_s+v; b_w=sum h_yw H_y, h_yw in vZ[v]; index=length,lex(one-line)";

pub const CACHE_DIR_ENV: &str = "HECKE_KL_CACHE_DIR";

/// `$HECKE_KL_CACHE_DIR`, else `$XDG_DATA_HOME/hecke-kl`, else `~/.local/share/hecke-kl`.
pub fn default_cache_dir() -> Option<PathBuf> {
    let nonempty = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    if let Some(d) = nonempty(CACHE_DIR_ENV) {
        return Some(d);
    }
    if let Some(d) = nonempty("XDG_DATA_HOME") {
        return Some(d.join("hecke-kl"));
    }
    nonempty("HOME").map(|h| h.join(".local").join("share").join("hecke-kl"))
}

pub fn encode_table(table: &KlTable) -> (Vec<u8>, u64) {
    let mut out = Vec::new();
    let mut count = 0u64;
    for (y, w, p) in table.entries() {
        let terms = p.terms();
        let lo = terms.first().map(|t| t.0).unwrap_or(0);
        let hi = terms.last().map(|t| t.0).unwrap_or(0);
        let len = (hi - lo + 1) as usize;
        let mut payload = Vec::with_capacity(16 + 8 * len);
        payload.extend_from_slice(&y.to_le_bytes());
        payload.extend_from_slice(&w.to_le_bytes());
        payload.extend_from_slice(&lo.to_le_bytes());
        payload.extend_from_slice(&(len as u32).to_le_bytes());
        for e in lo..=hi {
            payload.extend_from_slice(&p.coeff(e).to_le_bytes());
        }
        out.extend_from_slice(&(payload.len() as u32).to_le_bytes());
        out.extend_from_slice(&payload);
        count += 1;
    }
    (out, count)
}

fn take<'a>(bytes: &mut &'a [u8], k: usize) -> Result<&'a [u8]> {
    if bytes.len() < k {
        return Err(Error::Cache("truncated record".into()));
    }
    let (a, b) = bytes.split_at(k);
    *bytes = b;
    Ok(a)
}

fn u32_at(b: &[u8]) -> u32 {
    u32::from_le_bytes(b.try_into().expect("4 bytes"))
}

pub fn decode_table(n: usize, mut bytes: &[u8]) -> Result<(KlTable, u64)> {
    let mut entries = Vec::new();
    while !bytes.is_empty() {
        let len = u32_at(take(&mut bytes, 4)?) as usize;
        let mut rec = take(&mut bytes, len)?;
        let y = u32_at(take(&mut rec, 4)?);
        let w = u32_at(take(&mut rec, 4)?);
        let lo = i32::from_le_bytes(take(&mut rec, 4)?.try_into().expect("4 bytes"));
        let k = u32_at(take(&mut rec, 4)?) as usize;
        if rec.len() != 8 * k {
            return Err(Error::Cache(format!("record ({}, {}) has inconsistent length", y, w)));
        }
        let coeffs = (0..k).map(|i| (lo + i as i32, i64::from_le_bytes(rec[8 * i..8 * i + 8].try_into().expect("8 bytes"))));
        let p = Laurent::from_terms(coeffs);
        if p.is_zero() {
            return Err(Error::Cache(format!("record ({}, {}) stores a zero polynomial", y, w)));
        }
        entries.push((y, w, p));
    }
    let count = entries.len() as u64;
    Ok((KlTable::from_entries(n, entries)?, count))
}

fn checksum(bytes: &[u8]) -> String {
    let mut h = FnvHasher::default();
    h.write(bytes);
    format!("{:016x}", h.finish())
}

/// A cache directory.
#[derive(Clone, Debug)]
pub struct KlCache {
    dir: PathBuf,
}

impl KlCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        KlCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        default_cache_dir().map(KlCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn table_path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("kl-n{}.bin", n))
    }

    pub fn manifest_path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("kl-n{}.json", n))
    }

    pub fn store(&self, table: &KlTable) -> Result<()> {
        let n = table.n();
        let (bytes, count) = encode_table(table);
        let manifest = json!({
            "format_version": CACHE_FORMAT_VERSION,
            "fingerprint": CONVENTION_FINGERPRINT,
            "n": n,
            "count": count,
            "bytes": bytes.len(),
            "checksum": checksum(&bytes),
        });
        let io = |e: std::io::Error| Error::Cache(format!("{}: {}", self.dir.display(), e));
        fs::create_dir_all(&self.dir).map_err(io)?;
        write_atomic(&self.table_path(n), &bytes).map_err(io)?;
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        write_atomic(&self.manifest_path(n), text.as_bytes()).map_err(io)?;
        Ok(())
    }

    /// The cached table for rank `n`. Missing or stale files give `Ok(None)`;
    /// a current manifest whose data does not check out is an error.
    pub fn load(&self, n: usize) -> Result<Option<KlTable>> {
        let Ok(text) = fs::read_to_string(self.manifest_path(n)) else { return Ok(None) };
        let Ok(manifest) = serde_json::from_str::<Value>(&text) else { return Ok(None) };
        if manifest["format_version"].as_u64() != Some(CACHE_FORMAT_VERSION)
            || manifest["fingerprint"].as_str() != Some(CONVENTION_FINGERPRINT)
            || manifest["n"].as_u64() != Some(n as u64)
        {
            return Ok(None);
        }
        let Ok(bytes) = fs::read(self.table_path(n)) else { return Ok(None) };
        if manifest["bytes"].as_u64() != Some(bytes.len() as u64) || manifest["checksum"].as_str() != Some(checksum(&bytes).as_str()) {
            return Err(Error::Cache(format!("{} does not match its manifest", self.table_path(n).display())));
        }
        let (table, count) = decode_table(n, &bytes)?;
        if manifest["count"].as_u64() != Some(count) {
            return Err(Error::Cache(format!("{} holds {} records, manifest says {}", self.table_path(n).display(), count, manifest["count"])));
        }
        Ok(Some(table))
    }

    /// Load from disk if possible, else compute and store. The table is installed in the
    /// process-wide registry either way.
    pub fn load_or_compute(&self, n: usize) -> Result<Arc<KlTable>> {
        if let Ok(Some(t)) = self.load(n) {
            return Ok(install_table(t));
        }
        let t = crate::hecke::kl_table(n);
        self.store(&t)?;
        Ok(t)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::kl_table;

    fn same(a: &KlTable, b: &KlTable) -> bool {
        a.n() == b.n() && a.entries().eq(b.entries())
    }

    #[test]
    fn round_trip_is_bit_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KlCache::new(dir.path());
        for n in 1..=5 {
            let t = kl_table(n);
            cache.store(&t).unwrap();
            let first = fs::read(cache.table_path(n)).unwrap();
            let loaded = cache.load(n).unwrap().unwrap();
            assert!(same(&t, &loaded));
            cache.store(&loaded).unwrap();
            assert_eq!(fs::read(cache.table_path(n)).unwrap(), first);
        }
    }

    #[test]
    fn stale_and_missing_files_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KlCache::new(dir.path());
        assert!(cache.load(3).unwrap().is_none());
        cache.store(&kl_table(3)).unwrap();
        let m = cache.manifest_path(3);
        let text = fs::read_to_string(&m).unwrap();
        fs::write(&m, text.replace("\"format_version\": 1", "\"format_version\": 0")).unwrap();
        assert!(cache.load(3).unwrap().is_none());
        fs::write(&m, text.replace("b_s=H_s+v", "b_s=H_s-v")).unwrap();
        assert!(cache.load(3).unwrap().is_none());
        fs::write(&m, &text).unwrap();
        let mut bytes = fs::read(cache.table_path(3)).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 1;
        fs::write(cache.table_path(3), &bytes).unwrap();
        assert!(cache.load(3).is_err());
        assert!(same(&cache.load_or_compute(3).unwrap(), &kl_table(3)));
        assert!(cache.load(3).unwrap().is_some());
    }

    #[test]
    fn truncated_records_are_rejected() {
        let (bytes, _) = encode_table(&kl_table(3));
        assert!(decode_table(3, &bytes[..bytes.len() - 3]).is_err());
    }
}
