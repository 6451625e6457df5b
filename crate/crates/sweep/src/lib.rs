//! Parallel parameter sweeps over the scattering transform, the file
//! formats they produce, and the `faddeev` command line.

pub mod cache;
pub mod cli;
pub mod config;
pub mod detect;
pub mod error;
pub mod plot;
pub mod sweep;
pub mod table;

pub use cache::{compute_green_grid, GreenCache};
pub use detect::{detect_exceptional, Bracket};
pub use error::{Result, SweepError};
pub use plot::{emit_heatmap_svg, emit_profile_svg, heatmap_svg, profile_svg};
pub use sweep::{run_sweep, run_sweep_cached, SweepConfig, SweepReport};
pub use table::{emit_csv, load_csv, read_csv, write_csv};
