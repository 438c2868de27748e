fn main() {
    std::process::exit(dedekind_sums::harness::cli::run(std::env::args_os()));
}
