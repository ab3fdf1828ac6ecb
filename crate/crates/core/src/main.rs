fn main() {
    std::process::exit(cuspcurve::cli::run(std::env::args_os()));
}
