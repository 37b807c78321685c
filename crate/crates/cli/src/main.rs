use clap::Parser;

fn main() {
    let cli = hadamard_cycle_cli::Cli::parse();
    if let Err(err) = hadamard_cycle_cli::run(&cli) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
