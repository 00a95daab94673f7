fn main() -> std::process::ExitCode {
    hermitian_codes::cli::run()
}
