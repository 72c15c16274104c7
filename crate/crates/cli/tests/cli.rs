use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn hullkit(args: &[&str]) -> Output {
    hullkit_stdin(args, "")
}

fn hullkit_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hullkit"))
        .args(args)
        .env_remove("HULLKIT_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn stat(stderr: &str, key: &str) -> u64 {
    stderr
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {stderr}"))
        .parse()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_n_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pts.txt");
    let o = hullkit(&["gen", "--dist", "square", "--n", "100", "--seed", "1", "-o", path_str(&out)]);
    assert!(o.status.success(), "{}", text(&o.stderr));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 100);
}

#[test]
fn gen_respects_cap() {
    let o = hullkit(&["gen", "--dist", "worst", "--n", "301", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o.stderr).contains("cap"));
}

#[test]
fn gen_seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_hullkit"))
            .args(["gen", "--dist", "circle", "--n", "5"])
            .env("HULLKIT_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    let flag = hullkit(&["gen", "--dist", "circle", "--n", "5", "--seed", "42"]).stdout;
    assert_eq!(run("42"), flag);
    assert_ne!(run("43"), flag);
}

#[test]
fn adversarial_file_has_h_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("adv.txt");
    let o = hullkit(&["gen", "--dist", "adversarial", "--h", "10", "--n", "100", "--seed", "2", "-o", path_str(&pts)]);
    assert!(o.status.success());
    let o = hullkit(&["hull", "--algo", "reference", path_str(&pts)]);
    assert_eq!(text(&o.stdout).lines().count(), 10);
    let o = hullkit(&["verify", path_str(&pts)]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
}

#[test]
fn square_corners_ccw_from_origin() {
    let input = "1 1\n0 1\n0.5 0.5\n0 0\n1 0\n";
    let det = hullkit_stdin(&["hull", "--algo", "det"], input);
    assert!(det.status.success());
    assert_eq!(text(&det.stdout), "0 0\n1 0\n1 1\n0 1\n");
    for seed in ["0", "7", "123456789"] {
        let rs = hullkit_stdin(&["hull", "--algo", "rs", "--seed", seed, "-"], input);
        assert_eq!(rs.stdout, det.stdout);
    }
}

#[test]
fn stats_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("adv.txt");
    hullkit(&["gen", "--dist", "adversarial", "--h", "50", "--n", "1000", "--seed", "4", "-o", path_str(&pts)]);
    let det = hullkit(&["hull", "--algo", "det", "--stats", path_str(&pts)]);
    let rs = hullkit(&["hull", "--algo", "rs", "--stats", path_str(&pts)]);
    assert_eq!(det.stdout, rs.stdout);
    let (d, r) = (text(&det.stderr), text(&rs.stderr));
    assert!(stat(&d, "orientation_tests") > stat(&r, "orientation_tests"));
    assert_eq!(stat(&d, "ray_shoot_calls"), 0);
    assert!(stat(&r, "ray_shoot_calls") > 0);
}

#[test]
fn gen_pipes_into_hull_bit_exact() {
    let g = hullkit(&["gen", "--dist", "oncircle", "--n", "50", "--seed", "3"]);
    let input = text(&g.stdout);
    let h = hullkit_stdin(&["hull", "--algo", "reference"], &input);
    // every input point is extreme, and the printed vertices are verbatim input lines
    let lines: Vec<&str> = input.lines().collect();
    let out = text(&h.stdout);
    assert_eq!(out.lines().count(), 50);
    assert!(out.lines().all(|l| lines.contains(&l)));
}

#[test]
fn verify_collinear_file() {
    let o = hullkit_stdin(&["verify", "-"], "0 0\n1 1\n2 2\n3 3\n4 4\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o.stdout).contains("hull of 2 vertices"));
}

#[test]
fn parse_errors_exit_2_with_line() {
    let o = hullkit_stdin(&["verify", "-"], "0 0\n1 NaN\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o.stderr).contains("line 2"));
    let o = hullkit_stdin(&["hull"], "# only a comment\n");
    assert_eq!(o.status.code(), Some(2));
    let o = hullkit(&["hull", "/no/such/file"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hullkit(&["hull", "--algo", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_rows_and_reproducible_counters() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for out in [&a, &b] {
        let o = hullkit(&[
            "bench", "--dist", "oncircle", "--sizes", "1024,2048", "--algos", "det,rs", "--trials", "5", "--seed", "9",
            "-o", path_str(out),
        ]);
        assert!(o.status.success(), "{}", text(&o.stderr));
    }
    let counters = |p: &Path| -> Vec<String> {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                format!("{} {} {} {} {}", f[0], f[1], f[2], f[6], f[7])
            })
            .collect()
    };
    let rows = counters(&a);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows, counters(&b));
}

#[test]
fn bench_worst_det_much_costlier() {
    let o = hullkit(&["bench", "--dist", "worst", "--sizes", "256", "--algos", "det,rs", "--trials", "20", "--seed", "9"]);
    assert!(o.status.success());
    let out = text(&o.stdout);
    let tests: Vec<f64> = out.lines().skip(1).map(|l| l.split(',').nth(6).unwrap().parse().unwrap()).collect();
    assert!(tests[0] / tests[1] > 4.0, "{out}");
    assert!(text(&o.stderr).contains("ChaCha8Rng"));
}
