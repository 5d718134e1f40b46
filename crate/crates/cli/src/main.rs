use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use frobenius_cli::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, stdout, stderr) = run(&cli, |path| {
        if path.as_os_str() == "-" {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        } else {
            std::fs::read_to_string(path)
        }
    });
    print!("{stdout}");
    eprint!("{stderr}");
    ExitCode::from(code as u8)
}
