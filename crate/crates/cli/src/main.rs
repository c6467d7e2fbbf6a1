fn main() {
    std::process::exit(fxt_cli::main_with_args(std::env::args_os()));
}
