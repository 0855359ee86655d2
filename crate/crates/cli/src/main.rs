fn main() {
    std::process::exit(lme_cli::main_with_args(std::env::args().collect()));
}
