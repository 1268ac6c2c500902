use clap::Parser;

fn main() {
    let cli = gdo::Cli::parse();
    std::process::exit(gdo::main_with(&cli));
}
