fn main() {
    let (code, out) = polyreg::cli::run(std::env::args_os().skip(1));
    if code == 2 {
        eprint!("{out}");
        if !out.ends_with('\n') {
            eprintln!();
        }
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
