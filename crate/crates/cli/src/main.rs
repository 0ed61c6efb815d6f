fn main() {
    std::process::exit(tpqr_cli::run(std::env::args().skip(1).collect()));
}
