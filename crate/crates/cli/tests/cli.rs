use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfcolor")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &TempDir, family: &str, n: usize, seed: u64) -> PathBuf {
    let p = dir.path().join(format!("{family}-{n}-{seed}.txt"));
    let out = run(&["gen", "--family", family, "--n", &n.to_string(), "--seed", &seed.to_string(), "--out", s(&p)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn color_figure2_picks_cactus() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "figure2", 0, 0);
    let col = dir.path().join("f2.col");
    let out = run(&["color", "--input", s(&g), "--out", s(&col)]);
    assert_eq!(code(&out), 0);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("class cactus") && err.contains("palette 3"), "{err}");
    assert_eq!(code(&run(&["verify", "--input", s(&g), "--coloring", s(&col)])), 0);
}

#[test]
fn color_c5_outerplanar_uses_three() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", C5);
    let out = run(&["color", "--input", s(&g), "--class", "outerplanar", "--variant", "complete"]);
    assert_eq!(code(&out), 0);
    let max = stdout(&out)
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().parse::<u32>().unwrap())
        .max();
    assert_eq!(max, Some(3));
}

#[test]
fn class_mismatch_exits_3() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.txt", K4);
    assert_eq!(code(&run(&["color", "--input", s(&g), "--class", "outerplanar"])), 3);
    assert_eq!(code(&run(&["color", "--input", s(&g), "--class", "cactus"])), 3);
    assert_eq!(code(&run(&["color", "--input", s(&g)])), 0);
    let full: String = {
        let mut t = String::from("5 10\n");
        for a in 0..5 {
            for b in a + 1..5 {
                t.push_str(&format!("{a} {b}\n"));
            }
        }
        t
    };
    let k5 = write(&dir, "k5.txt", &full);
    assert_eq!(code(&run(&["color", "--input", s(&k5)])), 3);
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "3 2\n0 1\n1 1\n");
    let out = run(&["color", "--input", s(&g)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let edge = write(&dir, "edge.txt", "2 1\n0 1\n");
    let col = write(&dir, "edge.col", "0 1\n1 2\n");
    assert_eq!(code(&run(&["verify", "--input", s(&edge), "--coloring", s(&col)])), 0);

    let c4 = write(&dir, "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let ones = write(&dir, "ones.col", "0 1\n1 1\n2 1\n3 1\n");
    let out = run(&["verify", "--input", s(&c4), "--coloring", s(&ones)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("vertex")).count(), 4);

    let zeros = write(&dir, "zeros.col", "0 1\n1 0\n2 2\n3 0\n");
    assert_eq!(code(&run(&["verify", "--input", s(&c4), "--coloring", s(&zeros), "--variant", "complete"])), 2);
    let short = write(&dir, "short.col", "0 1\n");
    assert_eq!(code(&run(&["verify", "--input", s(&c4), "--coloring", s(&short)])), 2);
}

#[test]
fn oracle_examples() {
    let dir = TempDir::new().unwrap();
    let f1 = gen(&dir, "figure1", 0, 0);
    let out = run(&["oracle", "--input", s(&f1), "--variant", "partial"]);
    assert_eq!((code(&out), stdout(&out).trim().to_string()), (0, "4".to_string()));
    let f2 = gen(&dir, "figure2", 0, 0);
    let out = run(&["oracle", "--input", s(&f2), "--variant", "partial"]);
    assert_eq!(stdout(&out).trim(), "3");
    let c5 = write(&dir, "c5.txt", C5);
    let out = run(&["oracle", "--input", s(&c5)]);
    assert_eq!(stdout(&out).trim(), "3");
    let big = gen(&dir, "cycle", 20, 0);
    assert_eq!(code(&run(&["oracle", "--input", s(&big)])), 2);
    assert_eq!(code(&run(&["oracle", "--input", s(&c5), "--max-colors", "2"])), 1);
}

#[test]
fn kneser_examples() {
    let out = run(&["kneser", "--n", "7", "--k", "2", "--neighborhood", "closed", "--bound-only"]);
    assert_eq!(stdout(&out).trim(), "3");

    let dir = TempDir::new().unwrap();
    let col = dir.path().join("k83.col");
    let out = run(&["kneser", "--n", "8", "--k", "3", "--neighborhood", "open", "--emit-coloring", "--out", s(&col)]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&col).unwrap();
    assert_eq!(text.lines().count(), 56);
    assert!(String::from_utf8_lossy(&out.stderr).contains("palette 5"));

    let mono: String = (0..171).map(|i| format!("{i} 1\n")).collect();
    let mono = write(&dir, "mono.col", &mono);
    let out = run(&["kneser", "--n", "19", "--k", "2", "--witness", s(&mono)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).trim().starts_with('{'));

    assert_eq!(code(&run(&["kneser", "--n", "4", "--k", "2", "--neighborhood", "closed"])), 2);
}

#[test]
fn export_dot() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", C5);
    let col = dir.path().join("c5.col");
    assert_eq!(code(&run(&["color", "--input", s(&g), "--out", s(&col)])), 0);
    let out = run(&["export", "--input", s(&g), "--coloring", s(&col), "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert_eq!(dot.lines().filter(|l| l.contains("fillcolor=")).count(), 5);
}

#[test]
fn gen_color_verify_round_trips() {
    let dir = TempDir::new().unwrap();
    for family in ["cactus", "outerplanar", "planar"] {
        for seed in 0..100 {
            let g = gen(&dir, family, 3 + (seed as usize % 25), seed);
            let col = dir.path().join("out.col");
            let out = run(&["color", "--input", s(&g), "--out", s(&col)]);
            assert_eq!(code(&out), 0, "{family} seed {seed}: {}", String::from_utf8_lossy(&out.stderr));
            let v = run(&["verify", "--input", s(&g), "--coloring", s(&col)]);
            assert_eq!(code(&v), 0, "{family} seed {seed}: {}", stdout(&v));
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = gen(&dir, "planar", 30, 5);
    let first = fs::read(&a).unwrap();
    let b = gen(&dir, "planar", 30, 5);
    assert_eq!(first, fs::read(&b).unwrap());
    let x = stdout(&run(&["color", "--input", s(&a), "--variant", "partial"]));
    let y = stdout(&run(&["color", "--input", s(&a), "--variant", "partial"]));
    assert_eq!(x, y);
}
