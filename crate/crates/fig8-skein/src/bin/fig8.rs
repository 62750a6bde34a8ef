fn main() {
    std::process::exit(fig8_skein::cli::main_with_args(std::env::args_os()));
}
