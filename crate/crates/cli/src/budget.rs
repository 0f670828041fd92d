//! Budget resolution (flags over environment over defaults) and the
//! wall-clock interrupt that enforces time caps.

use std::time::{Duration, Instant};

use nsg_core::{EnumerationBudget, Interrupt};

use crate::error::{CliError, Result};

pub const ENV_MAX_N: &str = "NSG_MAX_N";
pub const ENV_TIME_CAP_SECS: &str = "NSG_TIME_CAP_SECS";

/// Raw budget flags as parsed from the command line; `time_cap_secs = 0`
/// disables the cap.
#[derive(Debug, Clone, Copy, Default)]
pub struct BudgetFlags {
    pub max_n: Option<u32>,
    pub node_cap: Option<u64>,
    pub time_cap_secs: Option<u64>,
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Result<Option<T>> {
    match std::env::var(key) {
        Ok(v) => v
            .parse::<T>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("invalid {key} value: {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// Flags beat environment variables beat defaults.
pub fn resolve(flags: BudgetFlags) -> Result<EnumerationBudget> {
    let mut budget = EnumerationBudget::default();
    if let Some(n) = env_parse::<u32>(ENV_MAX_N)? {
        budget.max_n = n;
    }
    if let Some(secs) = env_parse::<u64>(ENV_TIME_CAP_SECS)? {
        budget.time_cap = (secs > 0).then(|| Duration::from_secs(secs));
    }
    if let Some(n) = flags.max_n {
        budget.max_n = n;
    }
    if flags.node_cap.is_some() {
        budget.node_cap = flags.node_cap;
    }
    if let Some(secs) = flags.time_cap_secs {
        budget.time_cap = (secs > 0).then(|| Duration::from_secs(secs));
    }
    Ok(budget)
}

/// Deadline-based interrupt source; built from a budget's time cap.
pub struct TimeLimit {
    deadline: Option<Instant>,
}

impl TimeLimit {
    pub fn from_budget(budget: &EnumerationBudget) -> Self {
        TimeLimit { deadline: budget.time_cap.map(|cap| Instant::now() + cap) }
    }
}

impl Interrupt for TimeLimit {
    fn interrupted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
