use clap::Parser;
use qfunc::cli::{run, Cli, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let code = run(&cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
