use std::path::PathBuf;

use wreath_core::fusion::{
    group_from_json, GroupDualFusion, IntegersFusion, TableFusion, TrivialFusion,
};
use wreath_core::{Error, Result};

/// Where the fusion data of `G` comes from.
#[derive(Clone, Debug)]
pub enum FusionSource {
    Trivial,
    Cyclic(usize),
    Integers,
    DualS3,
    File(PathBuf),
}

impl std::str::FromStr for FusionSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(FusionSource::File(path.into()));
        }
        let rest = s
            .strip_prefix("builtin:")
            .ok_or_else(|| format!("{s:?}: expected builtin:NAME or file:PATH"))?;
        match rest.split_once(':') {
            Some(("cyclic", n)) => n
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .map(FusionSource::Cyclic)
                .ok_or_else(|| format!("{n:?} is not a positive cyclic order")),
            None => match rest {
                "trivial" => Ok(FusionSource::Trivial),
                "integers" => Ok(FusionSource::Integers),
                "dual-s3" => Ok(FusionSource::DualS3),
                _ => Err(format!(
                    "unknown builtin {rest:?} (trivial, cyclic:S, integers, dual-s3)"
                )),
            },
            _ => Err(format!("unknown builtin {rest:?}")),
        }
    }
}

/// Fusion data ready for use, one variant per label type.
pub enum Loaded {
    Trivial(TrivialFusion),
    Group(GroupDualFusion),
    Integers(IntegersFusion),
    Table(TableFusion),
}

impl FusionSource {
    pub fn load(&self) -> Result<Loaded> {
        Ok(match self {
            FusionSource::Trivial => Loaded::Trivial(TrivialFusion),
            FusionSource::Cyclic(s) => Loaded::Group(GroupDualFusion::cyclic(*s)?),
            FusionSource::Integers => Loaded::Integers(IntegersFusion),
            FusionSource::DualS3 => Loaded::Table(TableFusion::dual_s3()),
            FusionSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                // a group multiplication table or a full fusion table
                if text.contains("\"elements\"") {
                    Loaded::Group(GroupDualFusion::new(group_from_json(&text)?))
                } else {
                    Loaded::Table(TableFusion::from_json(&text)?)
                }
            }
        })
    }
}

/// Runs `$body` with `$fd` bound to the concrete fusion data.
macro_rules! with_fusion {
    ($loaded:expr, $fd:ident => $body:expr) => {
        match $loaded {
            $crate::source::Loaded::Trivial($fd) => $body,
            $crate::source::Loaded::Group($fd) => $body,
            $crate::source::Loaded::Integers($fd) => $body,
            $crate::source::Loaded::Table($fd) => $body,
        }
    };
}

pub(crate) use with_fusion;
