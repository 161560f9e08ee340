fn main() {
    std::process::exit(kdvk::cli_main());
}
