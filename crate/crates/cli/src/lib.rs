//! Command-line and file-format layer over `fxt-core`: WAV input, CSV and
//! SVG output, and a parallel period sweep.

pub mod config;
pub mod error;
pub mod run;
pub mod svg;
pub mod sweep;
pub mod table;
pub mod wav;

use std::ffi::OsString;

pub use config::{parse_args, Parsed, RunConfig};
pub use error::CliError;

/// Parses `args`, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(args).and_then(|parsed| match parsed {
        Parsed::Info(text) => {
            print!("{text}");
            Ok(())
        }
        Parsed::Run(config) => run::run(&config),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("fxt: {}", e.to_string().trim_end());
            e.exit_code()
        }
    }
}
