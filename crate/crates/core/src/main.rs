fn main() {
    std::process::exit(skewpbw::cli::main_with_args(std::env::args_os()));
}
