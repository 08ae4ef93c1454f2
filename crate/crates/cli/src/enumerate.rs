use anyhow::Result;
use rayon::prelude::*;

use carlitz_core::poly::{count_partition, Class, CountTable};

/// Counts by half-perimeter, one rayon task per first-column height. Tables
/// are merged in height order, so the result does not depend on scheduling.
pub fn count_parallel(bound: u32, class: Class, carlitz: bool, limit: u32) -> Result<CountTable> {
    let parts = (1..=bound.max(1))
        .into_par_iter()
        .map(|a| count_partition(bound, class, carlitz, a..=a, limit))
        .collect::<Result<Vec<_>, _>>()?;
    let mut parts = parts.into_iter();
    let mut table = parts.next().expect("at least one partition");
    for p in parts {
        table.merge(&p);
    }
    Ok(table)
}
