use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use graytts::base::BaseLibrary;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graytts")).args(args).env_remove("GRAYTTS_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares with a golden file; `UPDATE_GOLDEN=1` rewrites it instead.
fn golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(actual, expected, "output differs from {name}");
}

fn listing_file(v: u32, cycle: &[usize]) -> String {
    let mut s = format!("TTS v={v}\n");
    for b in BaseLibrary::listing(v).unwrap() {
        s += &format!("{} {} {}\n", b[0], b[1], b[2]);
    }
    let list: Vec<String> = cycle.iter().map(|i| i.to_string()).collect();
    s + &format!("# cycle: {}\n", list.join(" "))
}

/// Parses the text form by hand and checks pairs and consecutive intersections.
fn check_text_design(text: &str, v: u32) {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(format!("TTS v={v}").as_str()));
    let mut blocks = Vec::new();
    let mut cycle = Vec::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix("# cycle: ") {
            cycle = rest.split(' ').map(|w| w.parse::<usize>().unwrap()).collect();
        } else {
            let b: Vec<u32> = line.split(' ').map(|w| w.parse().unwrap()).collect();
            assert!(b[0] < b[1] && b[1] < b[2] && b[2] < v);
            blocks.push([b[0], b[1], b[2]]);
        }
    }
    assert!(blocks.windows(2).all(|w| w[0] < w[1]), "blocks are sorted and distinct");
    let mut pairs = BTreeMap::new();
    for b in &blocks {
        for (x, y) in [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] {
            *pairs.entry((x, y)).or_insert(0) += 1;
        }
    }
    assert_eq!(pairs.len() as u32, v * (v - 1) / 2);
    assert!(pairs.values().all(|&c| c == 2));
    let n = blocks.len();
    assert_eq!(cycle.len(), n);
    let meet = |a: &[u32; 3], b: &[u32; 3]| a.iter().filter(|x| b.contains(x)).count();
    assert!((0..n).all(|k| meet(&blocks[cycle[k]], &blocks[cycle[(k + 1) % n]]) == 2));
}

#[test]
fn build_writes_verified_files() {
    let o = run(&["build", "9", "--format", "txt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 26);
    check_text_design(&text, 9);
    golden("build_9.txt", &text);

    let o = run(&["build", "4"]);
    golden("build_4.txt", &stdout(&o));
    let o = run(&["build", "22", "--quiet"]);
    check_text_design(&stdout(&o), 22);
    assert!(o.stderr.is_empty());

    let o = run(&["build", "16", "--format", "json", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["v"], 16);
    assert_eq!(json["blocks"].as_array().unwrap().len(), 80);
    assert_eq!(json["trace"]["rule"], "2v+2");
    assert_eq!(json["trace"]["children"][0]["rule"], "base");
    golden("build_16_trace.json", &text);
}

#[test]
fn build_exit_codes() {
    let o = run(&["build", "6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("order 6"));
    assert_eq!(run(&["build", "3"]).status.code(), Some(3));
    assert_eq!(run(&["build", "5"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.txt");
    assert_eq!(run(&["build", "7", "-o", missing.to_str().unwrap()]).status.code(), Some(10));
    let fine = dir.path().join("out.txt");
    assert_eq!(run(&["build", "7", "-q", "-o", fine.to_str().unwrap()]).status.code(), Some(0));
    check_text_design(&fs::read_to_string(fine).unwrap(), 7);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let n = BaseLibrary::listing(18).unwrap().len();
    let listed: Vec<usize> = (0..n).collect();
    let good = dir.path().join("tts18.txt");
    fs::write(&good, listing_file(18, &listed)).unwrap();
    let o = run(&["verify", good.to_str().unwrap(), "--certificate"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["certificate"], "verified");
    assert_eq!(report["is_simple"], true);

    let mut swapped = listed.clone();
    swapped.swap(0, 1);
    let bad = dir.path().join("swapped.txt");
    fs::write(&bad, listing_file(18, &swapped)).unwrap();
    let o = run(&["verify", bad.to_str().unwrap(), "--certificate"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["certificate"], "rejected");
    // the design itself is still fine
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).status.code(), Some(0));

    let broken = dir.path().join("broken.txt");
    fs::write(&broken, "TTS v=4\n0 1 2\n0 1\n").unwrap();
    assert_eq!(run(&["verify", broken.to_str().unwrap()]).status.code(), Some(11));
    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["verify", missing.to_str().unwrap()]).status.code(), Some(11));

    let short = dir.path().join("short.txt");
    fs::write(&short, "TTS v=4\n0 1 2\n0 1 3\n0 2 3\n").unwrap();
    let o = run(&["verify", short.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn analyze_reports_graph_facts() {
    let dir = tempfile::tempdir().unwrap();
    let mut facts = Vec::new();
    for v in [4, 9, 10, 18] {
        let n = BaseLibrary::listing(v).unwrap().len();
        let path = dir.path().join(format!("tts{v}.txt"));
        fs::write(&path, listing_file(v, &(0..n).collect::<Vec<_>>())).unwrap();
        let o = run(&["analyze", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        facts.push(serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap());
    }
    assert_eq!((facts[0]["regularity"].as_u64(), facts[0]["girth"].as_u64()), (Some(3), Some(3)));
    assert_eq!(facts[1]["bipartite"], true);
    assert_eq!(facts[2]["girth"], 7);
    assert_eq!(facts[3]["girth"], 5);
    assert!(facts.iter().all(|f| f["connected"] == true));

    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{not json").unwrap();
    assert_eq!(run(&["analyze", junk.to_str().unwrap()]).status.code(), Some(11));
}

#[test]
fn decompose_and_search() {
    let o = run(&["decompose", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 5);
    golden("decompose_6.txt", &text);
    let o = run(&["decompose", "7", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["cycles"].as_array().unwrap().len(), 6);

    let o = run(&["search", "7", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    check_text_design(&stdout(&o), 7);
    let again = run(&["search", "7", "--seed", "7"]);
    assert_eq!(stdout(&again), stdout(&o));
    let env_seeded = Command::new(env!("CARGO_BIN_EXE_graytts")).args(["search", "7"]).env("GRAYTTS_SEED", "7").output().unwrap();
    assert_eq!(stdout(&env_seeded), stdout(&o));
    assert_eq!(run(&["search", "6"]).status.code(), Some(3));
    assert_eq!(run(&["search", "8"]).status.code(), Some(2));
}

#[test]
fn spectrum_table() {
    let o = run(&["spectrum", "3", "30", "-q"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 28);
    assert_eq!(text.lines().filter(|l| l.contains(" not_constructible ")).count(), 2);
    assert_eq!(text.lines().filter(|l| l.ends_with(" verified")).count(), 17);
    golden("spectrum_3_30.txt", &text);

    let o = run(&["spectrum", "6", "6", "-q"]);
    assert_eq!(stdout(&o), "6 not_constructible - - - -\n");
    let o = run(&["spectrum", "4", "4", "-q"]);
    assert_eq!(stdout(&o), "4 constructed base - 4 verified\n");
}
