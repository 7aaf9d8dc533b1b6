fn main() {
    std::process::exit(coxjsj::cli::run())
}
