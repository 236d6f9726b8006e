use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn quandles(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quandles"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn make_pipes_into_props() {
    let made = quandles(&["make", "alexander:5:2,1"], "");
    assert!(made.status.success());
    let props = quandles(&["props", "-"], &stdout(&made));
    assert_eq!(props.status.code(), Some(0));
    let text = stdout(&props);
    assert!(text.contains("latin = true\n"), "{text}");
    assert!(text.contains("aut order = 20\n"), "{text}");
    assert!(text.contains("N_p = 6\n"), "{text}");
}

#[test]
fn iso_on_files_prints_a_witness() {
    let a = temp_file(
        "cli_first.txt",
        "1 4 5 2 3\n3 2 1 5 4\n4 5 3 1 2\n5 3 2 4 1\n2 1 4 3 5\n",
    );
    let b = temp_file(
        "cli_second.txt",
        "1 5 4 3 2\n3 2 1 5 4\n5 4 3 2 1\n2 1 5 4 3\n4 3 2 1 5\n",
    );
    let out = quandles(&["iso", a.to_str().unwrap(), b.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(4 5)\n");
    let back = quandles(&["iso", b.to_str().unwrap(), a.to_str().unwrap()], "");
    assert_eq!(back.status.code(), Some(0));
}

#[test]
fn det_of_the_same_pair_differs() {
    let a = temp_file(
        "cli_det.txt",
        "1 4 5 2 3\n3 2 1 5 4\n4 5 3 1 2\n5 3 2 4 1\n2 1 4 3 5\n",
    );
    let out = quandles(&["det", a.to_str().unwrap()], "");
    assert_eq!(stdout(&out).trim(), "-825");
}

#[test]
fn enumerate_machine_output_has_one_pair_of_lines_per_class() {
    let out = quandles(&["enumerate", "4", "--machine", "--jobs", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 14);
    let sequential = quandles(&["enumerate", "4", "--machine"], "");
    assert_eq!(stdout(&sequential), text);
}

#[test]
fn exit_codes() {
    let invalid = quandles(&["verify", "-"], "1 2\n2 1\n");
    assert_eq!(invalid.status.code(), Some(1));
    assert!(
        stdout(&invalid).contains("diagonal"),
        "{}",
        stdout(&invalid)
    );
    let malformed = quandles(&["verify", "-"], "1 x\n2 2\n");
    assert_eq!(malformed.status.code(), Some(1));
    assert!(!malformed.stderr.is_empty());
    assert_eq!(quandles(&["enumerate"], "").status.code(), Some(2));
    let capped = quandles(&["enumerate", "5", "--max-placements", "10"], "");
    assert_eq!(capped.status.code(), Some(3));
}
