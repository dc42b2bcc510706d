//! Parameter grid specs: `3,5,8`, `START:STEP:END` (inclusive), or `auto` for γ.

use std::fmt;
use std::str::FromStr;

use crate::HarnessError;

/// Values in the order given; ranges expand inclusively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueList(pub Vec<i64>);

impl FromStr for ValueList {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| HarnessError::Config(format!("bad value list {s:?}: {why}"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            let [start, step, end] = parts.as_slice() else {
                return Err(bad("ranges are START:STEP:END"));
            };
            let num = |p: &str| p.trim().parse::<i64>().map_err(|_| bad("not an integer"));
            let (start, step, end) = (num(start)?, num(step)?, num(end)?);
            if step <= 0 {
                return Err(bad("step must be positive"));
            }
            if start > end {
                return Err(bad("start exceeds end"));
            }
            let values = (0..)
                .map(|k| start + k * step)
                .take_while(|&v| v <= end)
                .collect();
            return Ok(Self(values));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| bad("not an integer")))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

/// γ values: explicit, or increasing from 2 until a cell comes back empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaGrid {
    Values(Vec<usize>),
    Auto,
}

/// First γ tried by [`GammaGrid::Auto`].
pub const AUTO_GAMMA_START: usize = 2;

impl FromStr for GammaGrid {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("auto") {
            return Ok(Self::Auto);
        }
        let ValueList(values) = s.parse()?;
        values
            .into_iter()
            .map(|g| {
                usize::try_from(g).ok().filter(|&g| g >= 1).ok_or_else(|| {
                    HarnessError::Config(format!("gamma must be at least 1, got {g}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::Values)
    }
}

impl fmt::Display for GammaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Auto => write!(f, "auto"),
            Self::Values(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}
