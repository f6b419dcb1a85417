mod common;

use common::*;
use lexorder_cli::exit;

fn analyze(inputs: &[&std::path::Path], out: &std::path::Path, extra: &[&str]) -> std::process::Output {
    let mut args = vec!["analyze".to_string()];
    args.extend(inputs.iter().map(|p| p.display().to_string()));
    args.push("--out".into());
    args.push(out.display().to_string());
    args.extend(extra.iter().map(|s| s.to_string()));
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    run(&refs)
}

#[test]
fn two_translations_six_books_three_replicates() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_corpus(dir.path(), "aaa-x", "aaa", &SIX, 1);
    let b = write_corpus(dir.path(), "bbb-x", "bbb", &SIX, 2);
    let out = dir.path().join("out");
    let o = analyze(&[&a, &b], &out, &["--replicates", "3", "--seed", "5"]);
    assert_eq!(code(&o), i32::from(exit::OK), "{}", stderr(&o));

    let rows = lines(&out.join("results.csv"));
    assert_eq!(
        rows[0],
        "translation_id,language,book_id,replicate,N,h_original,h_order,h_structure,d_order,d_structure"
    );
    assert_eq!(rows.len(), 1 + 36);
    assert!(rows[1].starts_with("aaa-x,aaa,40,0,"));
    assert!(rows[36].starts_with("bbb-x,bbb,66,2,"));

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["rows"], 36);
    assert_eq!(manifest["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(manifest["config"]["seed"], 5);
}

#[test]
fn rerun_is_byte_identical_and_manifest_replays() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_corpus(dir.path(), "aaa-x", "aaa", &SIX, 3);
    let out1 = dir.path().join("o1");
    let out2 = dir.path().join("o2");
    assert_eq!(code(&analyze(&[&a], &out1, &["--truncate", "token"])), 0);
    assert_eq!(code(&analyze(&[&a], &out2, &["--truncate", "token"])), 0);
    let r1 = std::fs::read(out1.join("results.csv")).unwrap();
    assert_eq!(r1, std::fs::read(out2.join("results.csv")).unwrap());

    // the manifest carries the full config; replaying it writes to its own out dir
    let replay = run(&["analyze", "--config", out1.join("manifest.json").to_str().unwrap()]);
    assert_eq!(code(&replay), 0, "{}", stderr(&replay));
    assert_eq!(r1, std::fs::read(out1.join("results.csv")).unwrap());
}

#[test]
fn missing_book_gives_empty_results_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let no_mark: Vec<u32> = SIX.iter().copied().filter(|&b| b != 41).collect();
    let a = write_corpus(dir.path(), "nomark", "aaa", &no_mark, 4);
    let out = dir.path().join("out");
    let o = analyze(&[&a], &out, &["--books", "41"]);
    assert_eq!(code(&o), i32::from(exit::PARTIAL));
    assert_eq!(lines(&out.join("results.csv")).len(), 1);
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["inputs"][0]["missing_books"], serde_json::json!([41]));
    assert_eq!(manifest["rows"], 0);
}

#[test]
fn book_names_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_corpus(dir.path(), "t", "aaa", &SIX, 5);
    let out = dir.path().join("out");
    let o = analyze(&[&a], &out, &["--books", "Mark,John", "--replicates", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = lines(&out.join("results.csv"));
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("t,aaa,41,0,"));
    assert!(rows[2].starts_with("t,aaa,43,0,"));
}

#[test]
fn fatal_input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "not a verse line\n").unwrap();
    let o = analyze(&[&bad], &dir.path().join("out"), &[]);
    assert_eq!(code(&o), i32::from(exit::FATAL));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let o = analyze(&[&dir.path().join("absent.txt")], &dir.path().join("out"), &[]);
    assert_eq!(code(&o), i32::from(exit::FATAL));

    let a = write_corpus(dir.path(), "x", "aaa", &SIX, 1);
    let o = analyze(&[&a], &dir.path().join("out"), &["--books", "99"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn stats_single_translation_skips_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_corpus(dir.path(), "solo", "aaa", &SIX, 6);
    let out = dir.path().join("out");
    assert_eq!(code(&analyze(&[&a], &out, &["--replicates", "1"])), 0);
    let s = run(&[
        "stats",
        out.join("results.csv").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&s), 0, "{}", stderr(&s));
    assert!(stderr(&s).contains("corr_matrix skipped"), "{}", stderr(&s));
    assert!(!out.join("corr_matrix.csv").exists());

    let ranks = lines(&out.join("ranks.csv"));
    assert_eq!(ranks.len(), 1 + 6);
    let mut order: Vec<u32> = ranks[1..]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    order.sort();
    assert_eq!(order, [1, 2, 3, 4, 5, 6]);

    // single translation: every marginal has one bin at 100%
    let hist = lines(&out.join("rank_hist.csv"));
    let full: Vec<&String> = hist.iter().filter(|l| l.contains(",order,") && l.contains(",1/1,")).collect();
    assert_eq!(full.len(), 6);
    assert!(full.iter().all(|l| l.ends_with(",100,100")));
    assert_eq!(lines(&out.join("interbook.csv")).len(), 2);
}

#[test]
fn stats_with_book_missing_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let five: Vec<u32> = SIX.iter().copied().filter(|&b| b != 66).collect();
    let inputs: Vec<_> = (0..3)
        .map(|i| write_corpus(dir.path(), &format!("t{i}"), &format!("l{i}"), &five, 10 + i))
        .collect();
    let refs: Vec<&std::path::Path> = inputs.iter().map(|p| p.as_path()).collect();
    let out = dir.path().join("out");
    let o = analyze(&refs, &out, &["--replicates", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let s = run(&[
        "stats",
        out.join("results.csv").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&s), 0, "{}", stderr(&s));
    assert_eq!(lines(&out.join("ranks.csv")).len(), 1);
    assert_eq!(lines(&out.join("rank_hist.csv")).len(), 1);
    let fits = lines(&out.join("fits.csv"));
    assert_eq!(fits[0], "book_id,beta0,beta1,r_squared,n,r_s");
    let ids: Vec<&str> = fits[1..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ids, ["40", "41", "42", "43", "44"]);
    assert!(fits[1..].iter().all(|l| l.split(',').nth(4) == Some("3")));
    assert!(stderr(&s).contains("book 66"), "{}", stderr(&s));
}

#[test]
fn stats_rejects_schema_violation() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("results.csv");
    std::fs::write(&bad, "translation_id,book_id,d_order\nx,40,0.1\n").unwrap();
    let s = run(&["stats", bad.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&s), i32::from(exit::FATAL));
    assert!(stderr(&s).contains("schema"), "{}", stderr(&s));
}

#[test]
fn oracle_check_default_and_vacuous() {
    let o = run(&["oracle-check"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("PASS: 1000 cases"));

    let o = run(&["oracle-check", "--count", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    assert!(String::from_utf8_lossy(&o.stdout).contains("vacuous"));
}

#[test]
fn synth_output_feeds_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let pos = dir.path().join("pos.tsv");
    let aff = dir.path().join("aff.tsv");
    for (kind, path) in [("positional", &pos), ("affixal", &aff)] {
        let o = run(&["synth", "--kind", kind, "--seed", "3", "--sentences", "300", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    let out = dir.path().join("out");
    let o = analyze(&[&pos, &aff], &out, &["--format", "tsv", "--books", "40", "--replicates", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = lines(&out.join("results.csv"));
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("aff,toy-aff,40,0,"));
    assert!(rows[2].starts_with("pos,toy-pos,40,0,"));

    let iid = run(&["synth", "--kind", "iid", "--length", "50"]);
    let text = String::from_utf8(iid.stdout).unwrap();
    assert!(text.contains("# entropy_rate_bpc: 2"));
}
