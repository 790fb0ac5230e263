fn main() -> std::process::ExitCode {
    alt_tamari::cli::main()
}
