fn main() {
    std::process::exit(topolab::cli::run_cli(std::env::args_os()));
}
