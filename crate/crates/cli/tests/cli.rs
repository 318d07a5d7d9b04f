use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use mereotopo::dsl::parse_scene;

fn mt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mt"))
}

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn scene(name: &str) -> String {
    dir("scenes").join(format!("{name}.scene")).display().to_string()
}

fn files(sub: &str) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir(sub))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "scene"))
        .collect();
    v.sort();
    v
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("terminated by signal")
}

fn eval(name: &str, query: &str) -> Output {
    mt().args(["eval", &scene(name), "-q", query]).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn corpus_is_large_enough() {
    assert!(files("scenes").len() >= 30);
    assert!(files("bad_scenes").len() >= 5);
}

#[test]
fn every_scene_parses_and_round_trips() {
    for path in files("scenes") {
        let o = mt().arg("parse").arg(&path).output().unwrap();
        assert_eq!(code(&o), 0, "{}: {}", path.display(), String::from_utf8_lossy(&o.stderr));
        let printed = stdout(&o);
        let original = parse_scene(&fs::read_to_string(&path).unwrap()).unwrap();
        let reparsed = parse_scene(&printed).unwrap();
        assert_eq!(original, reparsed, "{}", path.display());
        assert_eq!(reparsed.to_string(), printed, "printing is a fixed point");
    }
}

#[test]
fn bad_scenes_exit_three_with_position() {
    for path in files("bad_scenes") {
        let o = mt().arg("parse").arg(&path).output().unwrap();
        assert_eq!(code(&o), 3, "{}", path.display());
        let err = String::from_utf8(o.stderr).unwrap();
        let first = err.lines().next().unwrap();
        let mut parts = first.rsplitn(3, ':');
        let col: usize = parts.next().unwrap().parse().unwrap();
        let line: usize = parts.next().unwrap().parse().unwrap();
        assert!(line >= 1 && col >= 1, "{first}");
        assert!(err.contains("error:"), "{err}");
    }
}

#[test]
fn undeclared_member_points_at_token() {
    let p = dir("bad_scenes").join("undeclared_member.scene");
    let o = mt().arg("parse").arg(&p).output().unwrap();
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.lines().next().unwrap().ends_with(":2:17"), "{err}");
    assert!(err.contains("bX"));
}

#[test]
fn exit_codes_for_answers() {
    let cases = [
        ("single_ball", "concent? b1 b1", 0),
        ("separated_pair", "ext? a b", 0),
        ("overlap_pair", "ext? a b", 1),
        ("margin_cover", "pt? b Cover", 0),
        ("gap_cover", "pt? b Cover", 1),
        ("exact_cover_rotated", "pt? b1 R1", 2),
        ("exact_cover_axis", "pt? b Cover", 0),
        ("boundary_probe", "boundary? p R", 0),
        ("boundary_probe", "boundary? inside R", 1),
        ("boundary_probe", "interior-point? inside R", 0),
        ("boundary_probe", "closure? outside R", 1),
        ("tangency_point", "closure? touch R", 0),
        ("collinear_points", "between? a b c", 0),
        ("not_collinear", "between? a b c", 1),
        ("convex_duo", "convex? Disk", 0),
        ("convex_duo", "convex? Bump", 1),
        ("ring_of_six", "closure? hole Ring", 1),
        ("concentric_pair", "eta small large", 1),
        ("hausdorff_pair", "hausdorff p q", 0),
    ];
    for (s, q, want) in cases {
        let o = eval(s, q);
        assert_eq!(code(&o), want, "{s}: {q} -> {}", stdout(&o));
    }
}

#[test]
fn diagnostics_exit_three() {
    for (s, q) in [
        ("single_ball", "pt? b1 nowhere"),
        ("single_ball", "frobnicate b1"),
        ("single_ball", "pt? b1 b1 --budget 0"),
        ("two_regions", "concent? Left Right"),
        ("hausdorff_pair", "hausdorff p p"),
    ] {
        let o = eval(s, q);
        assert_eq!(code(&o), 3, "{s}: {q}");
        assert!(!o.stderr.is_empty());
    }
    let o = mt().args(["eval", &scene("single_ball"), "-q", "pt? b1 b1", "--budget", "0"]).output().unwrap();
    assert_eq!(code(&o), 3);
    let o = mt().args(["parse", "/nonexistent/x.scene"]).output().unwrap();
    assert_eq!(code(&o), 3);
    let o = mt().arg("bogus").output().unwrap();
    assert_eq!(code(&o), 3);
    let o = mt().args(["check", "nope"]).output().unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn unknown_is_reported_with_note() {
    let o = eval("exact_cover_rotated", "pt? b1 R1 --budget 6");
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).starts_with("unknown"), "{}", stdout(&o));
}

#[test]
fn hausdorff_radius_matches_formula() {
    // p=(0,0), q=(2,0): d^2 = 4, |dx|+|dy| = 2, radius 4 / 8
    let o = eval("hausdorff_pair", "hausdorff p q");
    assert_eq!(stdout(&o).trim(), "B((0, 0), 1/2) B((2, 0), 1/2)");
}

#[test]
fn render_is_byte_stable() {
    let tmp = tempfile::tempdir().unwrap();
    for path in files("scenes") {
        let a = tmp.path().join("a.svg");
        let b = tmp.path().join("b.svg");
        for out in [&a, &b] {
            let o = mt().arg("render").arg(&path).arg("-o").arg(out).output().unwrap();
            assert_eq!(code(&o), 0, "{}", path.display());
        }
        let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
        assert_eq!(x, y, "{}", path.display());
        let svg = String::from_utf8(x).unwrap();
        let balls = parse_scene(&fs::read_to_string(&path).unwrap()).unwrap().balls().len();
        assert_eq!(svg.matches("<circle").count(), balls, "{}", path.display());
    }
}

#[test]
fn render_to_stdout_matches_file() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("x.svg");
    let s = scene("two_regions");
    mt().args(["render", &s, "-o"]).arg(&out).status().unwrap();
    let o = mt().args(["render", &s]).output().unwrap();
    assert_eq!(o.stdout, fs::read(&out).unwrap());
    let bare = mt().args(["render", &s, "--no-labels"]).output().unwrap();
    assert!(!stdout(&bare).contains("<text"));
}

#[test]
fn repl_reads_stdin() {
    let mut child = mt()
        .args(["repl", &scene("boundary_probe")])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"boundary? p R\nnonsense\ninterior-point? outside R\n:quit\nboundary? p R\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "true");
    assert!(lines[1].starts_with("error:"));
    assert!(out.contains("\nfalse"));
    assert_eq!(out.matches("true").count(), 1, "input after :quit is ignored");
}

#[test]
fn check_small_suites_pass() {
    for suite in ["mereo", "regopen"] {
        let o = mt().args(["check", suite, "--cases", "20", "--seed", "3"]).output().unwrap();
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).contains("result: pass"));
    }
}
