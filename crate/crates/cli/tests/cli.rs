use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn enum_grassmannian_three() {
    let o = run(&["enum", "grassmannian", "--n", "3"]);
    assert_eq!(stdout(&o), "123\n132\n213\n231\n312\n");
    assert!(stderr(&o).contains("count: 5"));
}

#[test]
fn enum_involutions_six() {
    let out = ok(&["enum", "involutions", "--n", "6"]);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(out.lines().next(), Some("123456"));
}

#[test]
fn enum_finite_class_is_empty() {
    let o = run(&["enum", "avoiders", "--pattern", "123", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    assert!(stderr(&o).contains("count: 0"));
}

#[test]
fn enum_json_and_paths() {
    assert_eq!(
        ok(&["enum", "dyck", "--n", "2", "--format", "json"]).trim(),
        r#"["UUDD","UDUD"]"#
    );
    assert_eq!(ok(&["enum", "dyck-all", "--n", "4"]).lines().count(), 14);
    assert_eq!(ok(&["enum", "dyck", "--n", "4"]).lines().count(), 12);
    assert_eq!(ok(&["enum", "schroder", "--n", "3"]).lines().count(), 12);
    assert_eq!(
        ok(&["enum", "bigrassmannian", "--n", "5"]).lines().count(),
        21
    );
}

#[test]
fn enum_respects_cap() {
    assert_eq!(
        run(&["enum", "grassmannian", "--n", "12", "--cap", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enum", "dyck-all", "--n", "16"]).status.code(),
        Some(2)
    );
}

#[test]
fn count_avoiders_last_row() {
    let out = ok(&[
        "count",
        "avoiders",
        "--pattern",
        "2413",
        "--n",
        "1..10",
        "--oracle",
    ]);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "10,166,166,true");
    assert_eq!(out.lines().next(), Some("n,formula,oracle,agree"));
}

#[test]
fn count_union_inverse_sequence() {
    let out = ok(&["count", "union-inverse", "--n", "1..10", "--oracle"]);
    let formulas: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(
        formulas,
        ["1", "2", "5", "13", "33", "80", "185", "411", "885", "1862"]
    );
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn count_odd_sequence() {
    let out = ok(&["count", "odd", "--n", "1..10", "--format", "bfile"]);
    let values: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(
        values,
        ["0", "1", "2", "6", "12", "28", "56", "120", "240", "496"]
    );
}

#[test]
fn count_json_uses_decimal_strings() {
    let out = ok(&["count", "grassmannian", "--n", "70", "--format", "json"]);
    assert_eq!(
        out.trim(),
        r#"[{"family":"grassmannian","n":70,"formula":"1180591620717411303354","oracle":null,"agree":true}]"#
    );
}

#[test]
fn count_oracles_agree_for_every_family() {
    let cases: &[&[&str]] = &[
        &["count", "grassmannian", "--n", "1..9"],
        &["count", "bigrassmannian", "--n", "1..9"],
        &["count", "involutions", "--n", "1..9"],
        &["count", "increasing", "--k", "4", "--n", "1..9"],
        &["count", "descent-at", "--k", "3", "--n", "4..9"],
        &["count", "even", "--n", "1..9"],
        &["count", "schroder", "--n", "1..8"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.push("--oracle");
        let out = ok(&full);
        assert!(
            out.lines().skip(1).all(|l| l.ends_with(",true")),
            "{args:?}\n{out}"
        );
    }
}

#[test]
fn count_bad_input_exits_two() {
    for args in [
        &["count", "avoiders", "--n", "1..3"][..],
        &["count", "grassmannian", "--n", "0..3"],
        &["count", "grassmannian", "--n", "abc"],
        &["count", "descent-at", "--k", "5", "--n", "3"],
        &["count", "avoiders", "--pattern", "1223", "--n", "4"],
        &["count", "nosuch", "--n", "4"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn oeis_fixtures_match() {
    for (family, name) in [
        ("grassmannian", "A000325.txt"),
        ("union-inverse", "A088921.txt"),
        ("odd", "A122746.txt"),
    ] {
        let want = fixture(name);
        let terms = want.lines().count();
        assert!(terms >= 20, "{name}");
        let got = ok(&[
            "count",
            family,
            "--n",
            &format!("1..{terms}"),
            "--format",
            "bfile",
        ]);
        assert_eq!(got, want, "{family} vs {name}");
    }
}

#[test]
fn verify_targets_pass() {
    let o = run(&["verify", "weiner", "--kmax", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("weiner k=7,12,132,132,true"));
    assert!(out.contains("weiner k=8,14,429,429,true"));
    ok(&["verify", "theorem34", "--max-size", "5", "--max-n", "10"]);
    ok(&["verify", "prop53", "--max-n", "10"]);
    for t in [
        "prop21", "prop22", "prop23", "prop31", "prop41", "prop42", "prop43", "prop46", "thm51",
    ] {
        ok(&["verify", t, "--max-n", "7", "--kmax", "6"]);
    }
}

#[test]
fn verify_mismatch_exits_one() {
    // the doubled-Catalan identity does not hold at k = 2
    let o = run(&["verify", "prop31", "--kmin", "2", "--kmax", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("avoid 1..2,1,2,1,false"));
    assert!(stderr(&o).contains("avoid 1..2 at n=1: formula 2 but oracle 1"));
    assert_eq!(
        run(&["verify", "weiner", "--kmax", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "prop99"]).status.code(), Some(2));
}

#[test]
fn table_rows() {
    let t1 = ok(&["table", "table1", "--kmax", "7"]);
    assert_eq!(t1.lines().next(), Some("k,values"));
    assert_eq!(t1.lines().last(), Some("7,120,198,276,312,264,132"));
    let t2 = ok(&["table", "table2"]);
    let rows: Vec<&str> = t2.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[2], "5,1,2,5,12,26,51,92,155,247,376");
    assert_eq!(rows[0].split(',').nth(4), Some("7"));
    let json = ok(&["table", "table1", "--kmax", "3", "--format", "json"]);
    assert_eq!(
        json.trim(),
        r#"[{"key":2,"values":["1"]},{"key":3,"values":["4","2"]}]"#
    );
}

#[test]
fn map_directions() {
    let cases = [
        ("phi", "UUUDDDUUDUDUUDDD", "23174586"),
        ("phi-inverse", "23174586", "UUUDDDUUDUDUUDDD"),
        ("alpha", "UHDHUDH", "1,3,0,0,0,0"),
        ("alpha-inverse", "1,3,0,0,0,0", "UHDHUDH"),
        ("bin", "HUHHDH", "011100"),
        ("lehmer", "4671235", "3,4,4,0,0,0,0"),
        ("lehmer-decode", "3,4,4,0,0,0,0", "4671235"),
        ("xi", "351246", "4671235"),
        ("psi", "24513", "245613"),
        ("inverse", "35124", "34152"),
        ("rc", "35124", "24513"),
    ];
    for (dir, input, want) in cases {
        assert_eq!(ok(&["map", dir, input]).trim(), want, "{dir} {input}");
    }
}

#[test]
fn map_rejects_outside_domain() {
    for (dir, input) in [
        ("phi-inverse", "321"),
        ("phi", "UDD"),
        ("alpha", "UUDD"),
        ("xi", "12"),
        ("psi", "2143"),
        ("lehmer-decode", "3,0"),
    ] {
        let o = run(&["map", dir, input]);
        assert_eq!(o.status.code(), Some(2), "{dir} {input}");
        assert_eq!(stderr(&o).lines().count(), 1);
    }
}
