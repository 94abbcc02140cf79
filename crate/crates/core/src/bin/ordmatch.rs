fn main() {
    std::process::exit(ordmatch::cli::main())
}
