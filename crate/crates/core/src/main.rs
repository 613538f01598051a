fn main() {
    std::process::exit(rankloci::cli::run());
}
