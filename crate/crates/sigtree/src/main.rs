fn main() {
    std::process::exit(sigtree::run(std::env::args_os()));
}
