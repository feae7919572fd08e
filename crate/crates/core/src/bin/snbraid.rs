use std::process::ExitCode;

fn main() -> ExitCode {
    let out = snbraid::cli::run_args(std::env::args_os());
    println!(
        "{}",
        serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
    );
    ExitCode::from(out.exit_code as u8)
}
