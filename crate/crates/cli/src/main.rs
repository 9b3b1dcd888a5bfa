use std::io::Write;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use grpcoh::{emit, failed_checks, parse_request, report, run, SubcommandKind, EXIT_INTERNAL};

fn main() -> ExitCode {
    let req = match parse_request(std::env::args_os().skip(1)) {
        Ok(r) => r,
        Err(f) if f.code == 0 => {
            print!("{}", f.message);
            return ExitCode::SUCCESS;
        }
        Err(f) => {
            eprint!("{}", f.message);
            if !f.message.ends_with('\n') {
                eprintln!();
            }
            return ExitCode::from(f.code as u8);
        }
    };
    let start = Instant::now();
    let outcome = panic::catch_unwind(|| run(&req));
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    let result = match outcome {
        Ok(Ok(v)) => v,
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code as u8);
        }
        Err(_) => {
            eprintln!("error: internal consistency failure");
            return ExitCode::from(EXIT_INTERNAL as u8);
        }
    };
    let failed = req.subcommand == SubcommandKind::Check && failed_checks(&result) > 0;
    let text = emit(&report(&req, result), req.format);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(EXIT_INTERNAL as u8);
    }
    if failed {
        ExitCode::from(EXIT_INTERNAL as u8)
    } else {
        ExitCode::SUCCESS
    }
}
