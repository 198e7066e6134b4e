use gainv::cli::main_with_args;
use gainv::report::{from_json, Status};

fn run(args: &[&str]) -> i32 {
    main_with_args(std::iter::once("gainv").chain(args.iter().copied()))
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["roberts-invariants"]), 0);
    assert_eq!(run(&["roberts-an", "--n", "0"]), 1);
    assert_eq!(run(&["no-such-command"]), 2);
    assert_eq!(run(&["sl2", "--rep", "V[x]"]), 2);
    assert_eq!(run(&["kernel", "--ring", "nope", "--degree", "1"]), 2);
    assert_eq!(run(&["separating", "--trials", "0"]), 2);
}

#[test]
fn json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["--json", p, "example1"]), 1);
    let reports = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 3);
    let failing: Vec<&str> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect();
    assert_eq!(failing, ["example1-conductor"]);
}

#[test]
fn kernel_subcommand() {
    let out = gainv::cli::execute(&gainv::cli::Command::Kernel {
        ring: "roberts".into(),
        degree: "3,2,2".into(),
        restrict: None,
    })
    .unwrap();
    assert_eq!(out.artifacts[0], "dim = 2");
    assert!(out.passed());
    let sl2 = gainv::cli::execute(&gainv::cli::Command::Kernel {
        ring: "sl2:V[2]".into(),
        degree: "2,0".into(),
        restrict: None,
    })
    .unwrap();
    assert_eq!(sl2.artifacts, ["dim = 1", "x0*x2 - 1/4*x1^2"]);
}

#[test]
fn beta_subcommand_prints_the_polynomials() {
    let out = gainv::cli::execute(&gainv::cli::Command::RobertsBeta { n: 1 }).unwrap();
    assert_eq!(out.artifacts[0], "beta1_1 = x1*z - x2^2*x3^2*y1");
}
