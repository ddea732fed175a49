fn main() {
    std::process::exit(hitstab::cli::main_from_env());
}
