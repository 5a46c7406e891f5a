use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use coeffbounds_cli::{output, run, Cli, ExitStatus, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ExitStatus::Usage as u8 } else { 0 });
        }
    };
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(ExitStatus::Usage as u8);
        }
    };

    let written = (|| -> io::Result<()> {
        let mut sink: Box<dyn Write> = match &cli.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        output::write_report(&outcome.report, cli.format, &mut *sink)?;
        if let Some(summary) = &outcome.summary {
            if cli.format == Format::Text {
                writeln!(sink, "{summary}")?;
            } else {
                eprintln!("{summary}");
            }
        }
        sink.flush()
    })();
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(ExitStatus::Usage as u8);
    }
    ExitCode::from(outcome.status as u8)
}
