use quadrank::cli;

fn main() {
    std::process::exit(cli::main_entry());
}
