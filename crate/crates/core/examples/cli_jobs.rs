// Driving the command-line front end from code with a TOML job.

use artinian::cli::run_command;

pub fn run_example() -> std::io::Result<(i32, String)> {
    let dir = tempfile::tempdir()?;
    let job = dir.path().join("job.toml");
    std::fs::write(&job, "field = \"gfp:7\"\nperazzo = { m = 2, d = 3 }\nell = { \"a[2,0]\" = 1, b1 = 1 }\n")?;
    let job = job.to_string_lossy().into_owned();
    let outcome = run_command(["artinian", "jdt", "--spec", job.as_str(), "--out", "tsv"]);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    Ok((outcome.code, outcome.stdout))
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_jobs example");
}
