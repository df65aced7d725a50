fn main() {
    std::process::exit(isokit::cli::main());
}
