fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = symfunc::cli::run_command(&argv);
    if !out.is_empty() {
        if code == 0 || code == 1 {
            println!("{out}");
        } else {
            eprintln!("{out}");
        }
    }
    std::process::exit(code);
}
