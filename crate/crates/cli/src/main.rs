fn main() {
    let r = defekt_cli::run(std::env::args_os());
    print!("{}", r.stdout);
    std::process::exit(r.code);
}
