use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ringseg::io::{read_pgm, read_trace_csv, write_pgm};
use ringseg::{fixtures, GrayImage};

fn ringseg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringseg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn entropy_and_indices() {
    let dir = tempfile::tempdir().unwrap();
    let constant = dir.path().join("constant.pgm");
    write_pgm(&GrayImage::filled(8, 8, 256, 7).unwrap(), &constant).unwrap();
    let out = ringseg(&["entropy", p(&constant)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0.000000000000\n");

    let a = dir.path().join("a.pgm");
    write_pgm(&fixtures::seeded_random(16, 16, 256, 3), &a).unwrap();
    let out = ringseg(&["ned", p(&a), p(&a)]);
    assert_eq!(stdout(&out).trim().parse::<f64>().unwrap(), 0.0);

    let c = dir.path().join("c.pgm");
    let s = dir.path().join("s.pgm");
    write_pgm(&fixtures::checkerboard(64, 64, 8, 0, 255, 256), &c).unwrap();
    write_pgm(&fixtures::stripes(64, 64, 8, 0, 255, 256), &s).unwrap();
    assert_eq!(stdout(&ringseg(&["we", p(&c), p(&s)])), "0.000000000000\n");
    assert_eq!(stdout(&ringseg(&["ned", p(&c), p(&s)])), "1.500000000000\n");
}

#[test]
fn histogram_and_profile_csv() {
    let dir = tempfile::tempdir().unwrap();
    let img = dir.path().join("two.pgm");
    write_pgm(&fixtures::two_region(4, 2, 10, 90, 256), &img).unwrap();
    let out = ringseg(&["histogram", p(&img)]);
    assert_eq!(stdout(&out), "level,count\n10,4\n90,4\n");

    let csv = dir.path().join("profile.csv");
    let out = ringseg(&["profile", p(&img), "--row", "1", "--out", p(&csv)]);
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "col,value\n0,10\n1,10\n2,90\n3,90\n"
    );

    let out = ringseg(&["profile", p(&img), "--row", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn segment_writes_image_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let noisy = dir.path().join("noisy.pgm");
    let seg = dir.path().join("seg.pgm");
    let trace = dir.path().join("t.csv");
    write_pgm(&fixtures::noisy_two_region_64(), &noisy).unwrap();
    let out = ringseg(&[
        "segment",
        p(&noisy),
        p(&seg),
        "--criterion",
        "ned",
        "--trace",
        p(&trace),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let t = read_trace_csv(&trace).unwrap();
    assert!(t.last().unwrap().criterion_value <= 0.9);
    let segmented = read_pgm(&seg).unwrap();
    assert_eq!(segmented.modulus(), 256);
    assert!(stdout(&out).contains("hit_cap=false"));

    // Identical invocations give identical bytes.
    let seg2 = dir.path().join("seg2.pgm");
    let trace2 = dir.path().join("t2.csv");
    ringseg(&["segment", p(&noisy), p(&seg2), "--trace", p(&trace2)]);
    assert_eq!(fs::read(&seg).unwrap(), fs::read(&seg2).unwrap());
    assert_eq!(fs::read(&trace).unwrap(), fs::read(&trace2).unwrap());
}

#[test]
fn filter_and_we_segment_flags() {
    let dir = tempfile::tempdir().unwrap();
    let noisy = dir.path().join("noisy.pgm");
    let out_img = dir.path().join("f.pgm");
    write_pgm(
        &fixtures::two_region_noisy(20, 10, 40, 160, 3, 256, 1),
        &noisy,
    )
    .unwrap();
    let out = ringseg(&[
        "filter",
        p(&noisy),
        p(&out_img),
        "--hs",
        "5",
        "--hr",
        "12",
        "--profile",
        "epanechnikov",
    ]);
    assert!(out.status.success());
    let f = read_pgm(&out_img).unwrap();
    assert_eq!((f.width(), f.height()), (20, 10));

    let trace = dir.path().join("we.csv");
    let out = ringseg(&[
        "segment",
        p(&noisy),
        p(&out_img),
        "--criterion",
        "we",
        "--epsilon",
        "0.5",
        "--max-iter",
        "3",
        "--hs",
        "5",
        "--trace",
        p(&trace),
    ]);
    assert!(out.status.success());
    assert!(read_trace_csv(&trace).unwrap().len() <= 3);
}

#[test]
fn ringop_inverse_and_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.pgm");
    let b = dir.path().join("b.pgm");
    let c = dir.path().join("c.pgm");
    write_pgm(&fixtures::seeded_random(16, 16, 256, 5), &a).unwrap();

    assert!(
        ringseg(&["ringop", p(&a), p(&b), "--op", "add", "--scalar", "100"])
            .status
            .success()
    );
    assert!(
        ringseg(&["ringop", p(&b), p(&c), "--op", "sub", "--scalar", "100"])
            .status
            .success()
    );
    assert_eq!(fs::read(&a).unwrap(), fs::read(&c).unwrap());

    ringseg(&["ringop", p(&a), p(&b), "--op", "sat-add", "--scalar", "100"]);
    ringseg(&["ringop", p(&b), p(&c), "--op", "sat-sub", "--scalar", "100"]);
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());

    ringseg(&["ringop", p(&a), p(&b), "--op", "neg"]);
    ringseg(&["ringop", p(&a), p(&c), "--op", "add", "--other", p(&b)]);
    assert!(read_pgm(&c).unwrap().pixels().iter().all(|&v| v == 0));

    ringseg(&["ringop", p(&a), p(&c), "--op", "mul", "--scalar", "1"]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn modulus_override() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.pgm");
    let b = dir.path().join("b.pgm");
    write_pgm(&fixtures::seeded_random(4, 4, 16, 5), &a).unwrap();
    let out = ringseg(&[
        "ringop",
        p(&a),
        p(&b),
        "--op",
        "add",
        "--scalar",
        "20",
        "--modulus",
        "32",
    ]);
    assert!(out.status.success());
    assert_eq!(read_pgm(&b).unwrap().modulus(), 32);
    // Pixels up to 15 do not fit in Z_8.
    let out = ringseg(&["entropy", p(&a), "--modulus", "8"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.pgm");
    write_pgm(&fixtures::seeded_random(4, 4, 256, 5), &a).unwrap();
    let b = dir.path().join("b.pgm");

    assert_eq!(ringseg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        ringseg(&["entropy", p(&a), "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ringseg(&["filter", p(&a), p(&b), "--hs", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ringseg(&["segment", p(&a), p(&b), "--epsilon", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ringseg(&["segment", p(&a), p(&b), "--max-iter", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ringseg(&["ringop", p(&a), p(&b), "--op", "add"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ringseg(&["profile", p(&a)]).status.code(), Some(2));

    let missing = dir.path().join("missing.pgm");
    let out = ringseg(&["entropy", p(&missing)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let bad = dir.path().join("bad.pgm");
    fs::write(&bad, b"P5\n2 2\n255\n\x01").unwrap();
    assert_eq!(ringseg(&["entropy", p(&bad)]).status.code(), Some(1));

    let other = dir.path().join("other.pgm");
    write_pgm(&fixtures::seeded_random(5, 4, 256, 5), &other).unwrap();
    assert_eq!(ringseg(&["ned", p(&a), p(&other)]).status.code(), Some(1));
    assert_eq!(
        ringseg(&["ringop", p(&a), p(&b), "--op", "add", "--scalar", "256"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(ringseg(&["--help"]).status.code(), Some(0));
}
