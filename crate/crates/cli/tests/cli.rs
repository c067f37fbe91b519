use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use graphcover::graph::petersen;
use tempfile::TempDir;

struct Run {
    code: i32,
    fields: HashMap<String, String>,
    stdout: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_graphcover")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    // key: value lines end at the first blank line
    let fields = stdout
        .lines()
        .take_while(|l| !l.is_empty())
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    Run { code: out.status.code().unwrap_or(-1), fields, stdout }
}

fn p(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn gen(dir: &TempDir, name: &str, family: &[&str]) -> PathBuf {
    let path = p(dir, name);
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend(["-o", s(&path)]);
    assert_eq!(run(&args).code, 0, "gen {family:?}");
    path
}

#[test]
fn petersen_folded_cycles_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p.txt", &["petersen"]);
    let cert = p(&dir, "p.cert");
    let r = run(&["solve", s(&g), "--class", "cycle_collection", "--mode", "folded", "--cert", s(&cert)]);
    assert_eq!((r.code, r.fields["value"].as_str()), (0, "2"));
    let v = run(&["verify", s(&g), s(&cert), "--class", "cycle_collection", "--mode", "folded"]);
    assert_eq!((v.code, v.fields["valid"].as_str(), v.fields["max_preimage"].as_str()), (0, "true", "2"));
}

#[test]
fn lsa_on_petersen_is_three() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p.txt", &["petersen"]);
    let cert = p(&dir, "lsa.cert");
    let r = run(&["lsa", s(&g), "--cert", s(&cert)]);
    assert_eq!((r.code, r.fields["value"].as_str()), (0, "3"));
    let v = run(&["verify", s(&g), s(&cert), "--class", "star_forest", "--mode", "local"]);
    assert_eq!(v.fields["valid"], "true");
    assert_eq!(v.fields["max_preimage"], "3");
}

#[test]
fn gen_prints_the_graph_bit_exact() {
    let r = run(&["gen", "petersen"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, petersen().to_text());
}

#[test]
fn constructions_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "k5.txt", &["complete", "5"]);
    let flac = p(&dir, "flac.cert");
    let r = run(&["flac", s(&g), "--cert", s(&flac)]);
    assert_eq!((r.code, r.fields["max_preimage"].as_str()), (0, "3"));
    let v = run(&["verify", s(&g), s(&flac), "--class", "linear_forest", "--mode", "folded"]);
    assert_eq!(v.fields["valid"], "true");

    let (line, kc) = (p(&dir, "l.txt"), p(&dir, "krausz.cert"));
    let r = run(&["krausz", s(&g), "--line-graph", s(&line), "--cert", s(&kc)]);
    assert_eq!((r.code, r.fields["cliques"].as_str(), r.fields["max_preimage"].as_str()), (0, "5", "2"));
    let v = run(&["verify", s(&line), s(&kc), "--class", "clique_collection", "--mode", "local"]);
    assert_eq!((v.fields["valid"].as_str(), v.fields["injective"].as_str()), ("true", "true"));

    let seq = p(&dir, "kt.seq");
    let kt = p(&dir, "kt.txt");
    let r = run(&["gen", "ktree", "3", "25", "--seed", "7", "-o", s(&kt), "--sequence", s(&seq)]);
    assert_eq!((r.code, r.fields["seed"].as_str()), (0, "7"));
    let sc = p(&dir, "slug.cert");
    let r = run(&["slug", s(&kt), s(&seq), "--cert", s(&sc)]);
    assert_eq!(r.code, 0);
    assert!(r.fields["max_preimage"].parse::<usize>().unwrap() <= 3);
    let v = run(&["verify", s(&kt), s(&sc), "--class", "interval", "--mode", "local"]);
    assert_eq!(v.fields["valid"], "true");
}

#[test]
fn contacts_give_four_star_forests() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c4.txt", &["cycle", "4"]);
    let rep = p(&dir, "c4.rep");
    fs::write(
        &rep,
        "seg 0 h\nseg 1 v\nseg 2 h\nseg 3 v\ntouch 1 up 0\ntouch 1 down 2\ntouch 0 right 3\ntouch 2 left 3\n",
    )
    .unwrap();
    let cert = p(&dir, "c4.cert");
    let r = run(&["contacts", s(&g), s(&rep), "--cert", s(&cert)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = run(&["verify", s(&g), s(&cert), "--class", "star_forest", "--mode", "global"]);
    assert_eq!(v.fields["valid"], "true");
    assert!(v.fields["size"].parse::<usize>().unwrap() <= 4);
}

#[test]
fn lift_emits_a_simple_sequence() {
    let dir = TempDir::new().unwrap();
    let seq = p(&dir, "k2.seq");
    fs::write(&seq, "width 2\ninit 0 1 2\nstack 3 : 0 1 keep 3\nstack 4 : 0 1 keep 3\nstack 5 : 0 1 keep 3\n").unwrap();
    let out = p(&dir, "lifted.seq");
    let r = run(&["lift", s(&seq), "-o", s(&out)]);
    assert_eq!((r.code, r.fields["simple"].as_str(), r.fields["lifted_width"].as_str()), (0, "true", "3"));
    let again = run(&["lift", s(&out)]);
    assert_eq!(again.code, 0);
}

#[test]
fn packing_and_orientation_values() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "k4.txt", &["complete", "4"]);
    let cert = p(&dir, "pack.cert");
    let r = run(&["pack", s(&g), "--class", "matching", "--mode", "global", "--cert", s(&cert)]);
    assert_eq!((r.code, r.fields["value"].as_str()), (0, "6"));
    let a = run(&["arbor", s(&g)]);
    assert_eq!((a.fields["arboricity"].as_str(), a.fields["pseudoarboricity"].as_str()), ("2", "2"));
    let o = p(&dir, "k4.orient");
    let r = run(&["orient", s(&g), "-o", s(&o)]);
    assert_eq!((r.code, r.fields["max_out_degree"].as_str()), (0, "2"));
    assert_eq!(fs::read_to_string(&o).unwrap().lines().filter(|l| l.starts_with("a ")).count(), 6);
    let r = run(&["orient", s(&g), "--bound", "1"]);
    assert_eq!((r.code, r.fields["feasible"].as_str()), (1, "false"));
}

#[test]
fn gadget_generation_writes_sequences() {
    let dir = TempDir::new().unwrap();
    let (g, seq) = (p(&dir, "stw.txt"), p(&dir, "stw.seq"));
    let r = run(&["gen", "t_stw", "3", "-o", s(&g), "--sequence", s(&seq)]);
    assert_eq!((r.code, r.fields["vertices"].as_str()), (0, "288"));
    let r = run(&["slug", s(&g), s(&seq)]);
    assert_eq!(r.code, 0);
    assert_eq!(run(&["gen", "t_deg", "3"]).code, 2);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c5.txt", &["cycle", "5"]);
    assert_eq!(run(&["solve", "missing.txt", "--class", "forest", "--mode", "global"]).code, 2);
    assert_eq!(run(&["solve", s(&g), "--class", "trees", "--mode", "global"]).code, 2);
    assert_eq!(run(&["solve", s(&g), "--class", "forest", "--mode", "global", "--nodes", "0"]).code, 2);
    let bad = p(&dir, "bad.txt");
    fs::write(&bad, "n 3\ne 0 7\n").unwrap();
    assert_eq!(run(&["recognize", s(&bad), "--class", "forest"]).code, 2);

    let r = run(&["recognize", s(&g), "--class", "interval"]);
    assert_eq!((r.code, r.fields["member"].as_str()), (1, "false"));
    assert!(r.stdout.contains("chordless cycle"));

    let r = run(&["solve", s(&g), "--class", "star_forest", "--mode", "global"]);
    assert_eq!((r.code, r.fields["value"].as_str()), (0, "2"));
    let cert = p(&dir, "c5.cert");
    fs::write(&cert, "host 5\ncomponent\ntv 0 0\ntv 1 1\nte 0 1\n").unwrap();
    let v = run(&["verify", s(&g), s(&cert), "--class", "forest", "--mode", "global"]);
    assert_eq!((v.code, v.fields["valid"].as_str()), (1, "false"));

    let pet = gen(&dir, "p.txt", &["petersen"]);
    let r = run(&["solve", s(&pet), "--class", "caterpillar_forest", "--mode", "global", "--nodes", "1"]);
    assert_eq!((r.code, r.fields["status"].as_str()), (3, "unknown"));
}

#[test]
fn report_subset_passes() {
    let r = run(&["report", "--only", "1,8,9"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.fields["passed"], "3");
    assert_eq!(r.fields["seed"], "0");
    assert!(r.stdout.contains("[PASS]  9"));
}
