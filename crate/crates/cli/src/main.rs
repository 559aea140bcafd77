fn main() {
    std::process::exit(rado_cli::run(std::env::args()));
}
