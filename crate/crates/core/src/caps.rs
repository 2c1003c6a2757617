//! Process-wide guards against accidental combinatorial blowup.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

/// Default bound on the number of ground points an enumeration may touch.
pub const DEFAULT_ENUM_POINTS: usize = 14;
/// Default bound on stored entries of a sparse map.
pub const DEFAULT_MAP_ENTRIES: usize = 10_000_000;

pub const ENV_ENUM_POINTS: &str = "WREATH_ENUM_CAP";
pub const ENV_MAP_ENTRIES: &str = "WREATH_MAP_CAP";

static ENUM_POINTS: AtomicUsize = AtomicUsize::new(DEFAULT_ENUM_POINTS);
static MAP_ENTRIES: AtomicUsize = AtomicUsize::new(DEFAULT_MAP_ENTRIES);

pub fn enum_points() -> usize {
    ENUM_POINTS.load(Ordering::Relaxed)
}

pub fn map_entries() -> usize {
    MAP_ENTRIES.load(Ordering::Relaxed)
}

pub fn set_enum_points(cap: usize) {
    ENUM_POINTS.store(cap, Ordering::Relaxed);
}

pub fn set_map_entries(cap: usize) {
    MAP_ENTRIES.store(cap, Ordering::Relaxed);
}

/// Reads overrides from the environment; malformed values are rejected.
pub fn load_env() -> Result<()> {
    for (var, set) in [
        (ENV_ENUM_POINTS, set_enum_points as fn(usize)),
        (ENV_MAP_ENTRIES, set_map_entries as fn(usize)),
    ] {
        if let Ok(v) = std::env::var(var) {
            let n = v
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("{var}={v} is not a non-negative integer")))?;
            set(n);
        }
    }
    Ok(())
}

pub(crate) fn check_points(what: &'static str, points: usize) -> Result<()> {
    let cap = enum_points();
    if points > cap {
        return Err(Error::CapExceeded {
            what,
            requested: points as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

pub(crate) fn check_entries(what: &'static str, entries: u128) -> Result<()> {
    let cap = map_entries() as u128;
    if entries > cap {
        return Err(Error::CapExceeded {
            what,
            requested: entries,
            cap,
        });
    }
    Ok(())
}
