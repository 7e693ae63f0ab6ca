use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use painleve_cli::args::{Cli, Command};
use painleve_cli::run::{run, RunConfig};
use painleve_cli::{dump, exit_status, export, json};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // Help and version requests are not errors; everything else is
            // a usage error.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// A closed downstream pipe (`| head`) ends output early without error.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn execute(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Verify(a) => {
            let cfg = RunConfig::from(&a);
            let rep = run(&cfg);
            json::write(&a.report, &cfg, &rep)?;
            if !a.quiet {
                let mut out = std::io::stdout().lock();
                for r in &rep.records {
                    writeln!(out, "{:<13} {} [{}] {:.3}s", r.status.as_str(), r.check_id, r.subject, r.wall_time.as_secs_f64())?;
                }
                let s = json::Report::new(&cfg, &rep).summary;
                writeln!(out, "{} pass, {} fail, {} indeterminate; report {}", s.pass, s.fail, s.indeterminate, a.report.display())?;
            }
            Ok(exit_status(&rep))
        }
        Command::Dump(a) => {
            let text = dump::dump(a.kind, &a.group.0);
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Integrate(a) => {
            let traj = export::integrate(&a)?;
            match &a.output {
                Some(p) => {
                    let mut f = std::io::BufWriter::new(std::fs::File::create(p)?);
                    export::write_csv(&mut f, &traj)?;
                    f.flush()?;
                }
                None => export::write_csv(&mut std::io::stdout().lock(), &traj)?,
            }
            Ok(0)
        }
    }
}
