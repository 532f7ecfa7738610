use clap::Parser;

fn main() {
    let cli = dsp_cli::Cli::parse();
    if let Err(err) = dsp_cli::run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
