fn main() {
    std::process::exit(braidkit::cli::main_entry());
}
