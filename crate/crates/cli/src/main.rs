fn main() {
    std::process::exit(esnkit::app::main());
}
