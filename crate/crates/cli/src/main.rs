fn main() {
    std::process::exit(painleve_cli::run(std::env::args_os()));
}
