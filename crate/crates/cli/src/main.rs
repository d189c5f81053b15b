use std::io::Write;
use std::process::ExitCode;

use cameral_cli::{execute, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let format = cfg.format;
    match execute(cfg) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(format).as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run `cameral --help` for usage");
            ExitCode::from(2)
        }
    }
}
