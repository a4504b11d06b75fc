//! File format, reports, parallel drivers and the `rainbow` command line
//! over `rainbow-core`.

pub mod app;
pub mod driver;
pub mod ecg;
pub mod report;

pub use app::cli_main;
pub use driver::{search_counterexample, verify_theorem, SearchResult, VerifyOptions};
pub use ecg::{parse_ecg, write_ecg, EcgDocument, EcgError};
