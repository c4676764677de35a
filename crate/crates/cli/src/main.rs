use clap::Parser;

fn main() {
    let cli = fpi_cli::app::Cli::parse();
    std::process::exit(fpi_cli::app::run(cli));
}
