fn main() {
    std::process::exit(thermograv::cli::run());
}
