fn main() {
    std::process::exit(wildcard_diversity::cli::run(std::env::args_os()));
}
