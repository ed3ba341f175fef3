use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let result = wpsing::cli::run(&argv);
    if !result.text.is_empty() {
        // a closed pipe is not worth a panic
        let _ = if result.exit_code == 0 {
            writeln!(std::io::stdout(), "{}", result.text)
        } else {
            writeln!(std::io::stderr(), "{}", result.text)
        };
    }
    std::process::exit(result.exit_code);
}
