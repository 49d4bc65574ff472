//! Runs every crate example through its `run_example` entry point.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(hilbert_function);
example!(ideal_quotient);
example!(jordan_strings);
example!(perazzo_cases);
example!(verify_harness);
example!(dominance_chain);
example!(hankel);
example!(cli_jobs);

#[test]
fn hilbert_function_example() {
    assert_eq!(hilbert_function::run_example().unwrap().entries(), &[1, 3, 3, 1]);
}

#[test]
fn ideal_quotient_example() {
    let (h, p, jdt) = ideal_quotient::run_example().unwrap();
    assert_eq!(h, vec![1, 2, 3, 1]);
    assert_eq!(p.to_string(), "(4,2,1)");
    assert_eq!(jdt.to_string(), "4_0,2_1,1_2");
}

#[test]
fn jordan_strings_example() {
    assert!(jordan_strings::run_example().unwrap());
}

#[test]
fn perazzo_cases_example() {
    let rows = perazzo_cases::run_example().unwrap();
    let agree: Vec<bool> = rows.iter().map(|r| r.2).collect();
    // the last form is outside the literal hypotheses and takes the generic type
    assert_eq!(agree, vec![true, true, true, true, false]);
    assert_eq!(rows[4].1, rows[2].1);
}

#[test]
fn verify_harness_example() {
    let report = verify_harness::run_example().unwrap();
    assert!(report.ok());
    assert_eq!(report.samples.len(), 90);
}

#[test]
fn dominance_chain_example() {
    let chain: Vec<String> = dominance_chain::run_example().unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(chain, ["(2^3,1^6)", "(2^4,1^4)", "(3^2,2^2,1^2)", "(4,2^3,1^2)"]);
}

#[test]
fn hankel_example() {
    for (by_rank, direct) in hankel::run_example().unwrap() {
        assert_eq!(by_rank, direct);
    }
}

#[test]
fn cli_jobs_example() {
    let (code, out) = cli_jobs::run_example().unwrap();
    assert_eq!(code, 0);
    assert!(out.contains("payload.partition\t(4,2^3,1^2)"));
}
