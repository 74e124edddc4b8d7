fn main() {
    std::process::exit(revan_cli::run());
}
