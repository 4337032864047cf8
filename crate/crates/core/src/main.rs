fn main() {
    std::process::exit(partalg::cli::main_with(std::env::args_os(), &mut std::io::stdout()));
}
