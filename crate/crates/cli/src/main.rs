fn main() {
    std::process::exit(kappatree_cli::run(std::env::args_os()));
}
