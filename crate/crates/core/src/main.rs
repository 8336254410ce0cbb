fn main() {
    std::process::exit(phipade::cli::run(std::env::args_os()));
}
