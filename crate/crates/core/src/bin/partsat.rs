fn main() {
    std::process::exit(partsat::cli::main_with_args(std::env::args_os()));
}
