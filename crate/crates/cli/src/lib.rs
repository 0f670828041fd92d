//! Standard-library companion to `nsg-core`: budget resolution with wall
//! clocks, rayon-parallel enumeration drivers, the sequence table with its
//! persistent cache, and per-semigroup output records. The `nsg` binary is a
//! thin clap layer over these modules.

pub mod budget;
pub mod commands;
pub mod cache;
pub mod error;
pub mod output;
pub mod parallel;
pub mod table;
pub mod verify;

/// Format a fraction to six significant digits for display next to the exact
/// rational; never used in comparisons.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}
