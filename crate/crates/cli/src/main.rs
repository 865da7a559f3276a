use std::io::{IsTerminal, Write};

use frobkit::output::Style;

fn main() {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    let style = Style {
        color: !no_color && std::io::stdout().is_terminal(),
    };
    let outcome = frobkit::run(std::env::args_os(), style);
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
