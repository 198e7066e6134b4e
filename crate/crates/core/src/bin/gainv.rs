fn main() {
    std::process::exit(gainv::cli::main_with_args(std::env::args_os()));
}
