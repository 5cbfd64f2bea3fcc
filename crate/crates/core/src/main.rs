fn main() {
    std::process::exit(invsyn::cli::main_with_args(std::env::args_os()));
}
