fn main() {
    std::process::exit(kegraph::cli::run(std::env::args_os()));
}
