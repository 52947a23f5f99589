fn main() {
    std::process::exit(walkbij::cli::main_with_args(std::env::args_os()));
}
