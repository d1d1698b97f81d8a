use clap::Parser;

use kli_cli::{run, Cli};

fn main() {
    init_logging();
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

/// Configures stderr logging from `INTERP_LOG`; anything unrecognized falls
/// back to the default `info` level with a warning.
fn init_logging() {
    let level = match std::env::var("INTERP_LOG").ok().as_deref() {
        Some("debug") => log::LevelFilter::Debug,
        Some("quiet") => log::LevelFilter::Off,
        Some("info") | None => log::LevelFilter::Info,
        Some(other) => {
            eprintln!("warning: unknown INTERP_LOG value {other:?}, using info");
            log::LevelFilter::Info
        }
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .format_target(false)
        .init();
}
