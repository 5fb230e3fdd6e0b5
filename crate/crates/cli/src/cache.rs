//! On-disk cache of Jack expansions, one text file per degree.
//!
//! Each file starts with a header naming the format version and the hook
//! convention; a line per `λ` follows, keyed by `λ` in comma form (`3,2,1`)
//! and listing `μ=coefficient` pairs of `J_λ` in the monomial basis. Any
//! mismatch or unreadable line discards the whole degree, which is then
//! recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use jacklr_exact::{parse_poly, RatFunc};
use jacklr_partitions::{enumerate_partitions, Partition};
use jacklr_symfunc::{JackTable, SymFunc};

use crate::CliError;

pub const CACHE_HEADER: &str = "# jacklr jack cache v1 hookU=a(arm+1)+leg";
pub const CACHE_ENV: &str = "JACKLR_CACHE_DIR";

/// Cache key of a partition: its parts joined by commas.
pub fn cache_key(lam: &Partition) -> String {
    lam.to_string()
}

pub struct JackCache {
    dir: PathBuf,
    warnings: Vec<String>,
}

impl JackCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        JackCache { dir: dir.into(), warnings: Vec::new() }
    }

    /// `--cache-dir`, else `$JACKLR_CACHE_DIR`, else none.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(JackCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Problems met while loading; each one caused a degree to be skipped.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    fn path(&self, degree: u32) -> PathBuf {
        self.dir.join(format!("jack-{degree}.txt"))
    }

    pub fn encode(degree: u32, jacks: &BTreeMap<Partition, Arc<SymFunc>>) -> String {
        let mut out = format!("{CACHE_HEADER} degree={degree}\n");
        for (lam, j) in jacks {
            let terms: Vec<String> = j.terms().map(|(mu, c)| format!("{}={}", cache_key(mu), c)).collect();
            out.push_str(&format!("{}\t{}\n", cache_key(lam), terms.join(";")));
        }
        out
    }

    pub fn decode(degree: u32, text: &str) -> Result<BTreeMap<Partition, Arc<SymFunc>>, String> {
        let mut lines = text.lines();
        let header = lines.next().ok_or("empty file")?;
        if header != format!("{CACHE_HEADER} degree={degree}") {
            return Err(format!("header mismatch: {header:?}"));
        }
        let mut map = BTreeMap::new();
        for (n, line) in lines.enumerate() {
            let bad = |why: &str| format!("line {}: {why}", n + 2);
            let (key, body) = line.split_once('\t').ok_or_else(|| bad("missing key"))?;
            let lam: Partition = key.parse().map_err(|_| bad("bad key"))?;
            if lam.weight() != degree {
                return Err(bad("key has the wrong weight"));
            }
            let mut terms = Vec::new();
            for term in body.split(';').filter(|t| !t.is_empty()) {
                let (mu, c) = term.split_once('=').ok_or_else(|| bad("missing '='"))?;
                let mu: Partition = mu.parse().map_err(|_| bad("bad shape"))?;
                let c = parse_poly(c).map_err(|e| bad(&e.to_string()))?;
                terms.push((mu, RatFunc::from_poly(c)));
            }
            let j = SymFunc::from_terms(degree, terms).map_err(|e| bad(&e.to_string()))?;
            map.insert(lam, Arc::new(j));
        }
        // keys are distinct partitions of `degree`, so the count settles it
        if map.len() != enumerate_partitions(degree).len() {
            return Err("incomplete degree".to_string());
        }
        Ok(map)
    }

    /// Installs every readable degree up to the table's cap.
    pub fn preload(&mut self, table: &JackTable) -> Vec<u32> {
        let mut loaded = Vec::new();
        for degree in 1..=table.cap() {
            let path = self.path(degree);
            let Ok(text) = fs::read_to_string(&path) else { continue };
            match Self::decode(degree, &text) {
                Ok(map) => {
                    table.insert_degree(degree, map);
                    loaded.push(degree);
                }
                Err(why) => self.warnings.push(format!("ignoring {}: {why}", path.display())),
            }
        }
        loaded
    }

    /// Writes every degree the table holds that is not on disk yet.
    pub fn store(&self, table: &JackTable) -> Result<Vec<u32>, CliError> {
        fs::create_dir_all(&self.dir)?;
        let mut written = Vec::new();
        for degree in table.cached_degrees() {
            if degree == 0 {
                continue;
            }
            let path = self.path(degree);
            if let Ok(text) = fs::read_to_string(&path) {
                if Self::decode(degree, &text).is_ok() {
                    continue;
                }
            }
            let jacks = table.degree(degree)?;
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, Self::encode(degree, &jacks))?;
            fs::rename(&tmp, &path)?;
            written.push(degree);
        }
        Ok(written)
    }
}
