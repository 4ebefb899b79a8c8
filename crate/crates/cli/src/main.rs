use clap::Parser;

use codepth3_cli::{pretty, run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if cli.pretty {
                pretty(&out.report)
            } else {
                match out.report.render() {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: malformed report: {e}");
                        std::process::exit(1);
                    }
                }
            };
            print!("{text}");
            if out.math_failure {
                eprintln!("error: consistency checks failed; see the report");
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
