fn main() {
    std::process::exit(cuspdim::cli::run(std::env::args()));
}
