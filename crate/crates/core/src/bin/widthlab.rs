fn main() {
    std::process::exit(widthlab::cli::parse_and_dispatch(std::env::args_os()));
}
