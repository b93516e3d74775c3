fn main() {
    std::process::exit(bzu_cli::run_cli(std::env::args_os()));
}
