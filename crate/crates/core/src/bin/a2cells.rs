fn main() {
    std::process::exit(a2cells::cli::run(std::env::args_os()));
}
