use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use carlitz_core::closed_form::GfTarget;
use carlitz_core::CODE_VERSION;

use crate::render::Payload;

pub const ENV_VAR: &str = "CARLITZ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    code_version: String,
    target: String,
    order: u32,
    payload: Payload,
}

/// Series cache on disk. Entries written by another code version, or that
/// fail to parse, are treated as misses and overwritten.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env(flag: Option<PathBuf>) -> Option<Cache> {
        flag.or_else(|| {
            std::env::var_os(ENV_VAR)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        })
        .map(|dir| Cache { dir })
    }

    fn path(&self, target: GfTarget, order: u32) -> PathBuf {
        self.dir.join(format!("{target}-{order}.json"))
    }

    pub fn load(&self, target: GfTarget, order: u32) -> Option<Payload> {
        let text = fs::read_to_string(self.path(target, order)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.code_version == CODE_VERSION
            && entry.target == target.name()
            && entry.order == order)
            .then_some(entry.payload)
    }

    pub fn store(&self, target: GfTarget, order: u32, payload: &Payload) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating {}", self.dir.display()))?;
        let entry = Entry {
            code_version: CODE_VERSION.to_string(),
            target: target.name().to_string(),
            order,
            payload: payload.clone(),
        };
        let path = self.path(target, order);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)
            .with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
