fn main() {
    std::process::exit(charvar::run(std::env::args_os()));
}
