//! On-disk lattice cache. An entry is the lattice export; loading rebuilds
//! the lattice from the stored representatives, which re-checks
//! completeness, and then demands an identical export. Any failure falls
//! back to enumeration, so a stale or tampered entry costs time only.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::group::{format_group_file, subgroup_closure, FiniteGroup, Permutation, Subgroup};
use crate::lattice::{LatticeError, LatticeExport, SubgroupLattice};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SPHEX_CACHE_DIR";

const FORMAT_TAG: &str = "sphex-lattice-v1";

/// `$SPHEX_CACHE_DIR`, else `$XDG_CACHE_HOME/sphex`, else `~/.cache/sphex`.
pub fn cache_dir() -> Option<PathBuf> {
    let var = |name: &str| {
        std::env::var_os(name)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    };
    var(CACHE_ENV)
        .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("sphex")))
        .or_else(|| var("HOME").map(|d| d.join(".cache").join("sphex")))
}

/// Hex SHA-256 of the format tag and the canonical generator file.
pub fn lattice_cache_key(group: &FiniteGroup) -> String {
    let mut hasher = Sha256::new();
    hasher.update(FORMAT_TAG.as_bytes());
    hasher.update(b"\n");
    hasher.update(format_group_file(group.degree(), group.generators()).as_bytes());
    hex::encode(hasher.finalize())
}

/// Lattice of `group`, read from `dir` when a valid entry exists and
/// written back after enumeration otherwise. Write failures are ignored.
pub fn load_or_build_lattice(
    group: Arc<FiniteGroup>,
    cap: usize,
    dir: Option<&Path>,
) -> Result<SubgroupLattice, LatticeError> {
    let Some(dir) = dir else {
        return SubgroupLattice::enumerate(group, cap);
    };
    let path = dir.join(format!("lattice-{}.json", lattice_cache_key(&group)));
    if let Some(lattice) = read_entry(&path, &group, cap) {
        return Ok(lattice);
    }
    let lattice = SubgroupLattice::enumerate(group, cap)?;
    write_entry(dir, &path, &lattice.export());
    Ok(lattice)
}

fn read_entry(path: &Path, group: &Arc<FiniteGroup>, cap: usize) -> Option<SubgroupLattice> {
    let text = fs::read_to_string(path).ok()?;
    let stored: LatticeExport = serde_json::from_str(&text).ok()?;
    if stored.group_order != group.order() {
        return None;
    }
    let reps = stored
        .classes
        .iter()
        .map(|c| representative(group, &c.generators))
        .collect::<Option<Vec<Subgroup>>>()?;
    let lattice = SubgroupLattice::from_representatives(Arc::clone(group), &reps, cap).ok()?;
    (lattice.export() == stored).then_some(lattice)
}

fn representative(group: &FiniteGroup, generators: &[String]) -> Option<Subgroup> {
    let ids = generators
        .iter()
        .map(|s| {
            let p = Permutation::parse_cycles(s, group.degree()).ok()?;
            group.id_of(&p)
        })
        .collect::<Option<Vec<usize>>>()?;
    Some(subgroup_closure(group, &ids))
}

fn write_entry(dir: &Path, path: &Path, export: &LatticeExport) {
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let tmp = dir.join(format!(".lattice-{}.tmp", std::process::id()));
    let Ok(text) = serde_json::to_string(export) else {
        return;
    };
    if fs::write(&tmp, text).is_ok() && fs::rename(&tmp, path).is_err() {
        let _ = fs::remove_file(&tmp);
    }
}
