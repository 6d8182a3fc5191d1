use cubicff::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cubicff").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn invariants_of_t_squared() {
    let (code, out, _) = cli(&["invariants", "--q", "5", "--A", "t^2"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "I"), "1");
    assert_eq!(value(&out, "g"), "2");
    assert_eq!(value(&out, "R"), "4");
    assert_eq!(value(&out, "signature"), "(1,1;1,1;1,1)");
}

#[test]
fn exact_and_classno_agree() {
    let (code, out, _) = cli(&["exact", "--q", "7", "--A", "t^3+1"]);
    assert_eq!(code, 0);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(&row[row.len() - 2..], ["3969", "441"]);
    let (code, out, _) = cli(&["--out", "csv", "classno", "--q", "5", "--A", "t^2", "--trunc", "40000"]);
    assert_eq!(code, 0);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row.last(), Some(&"12"));
}

#[test]
fn census_and_signature() {
    let (code, out, _) = cli(&["census", "--q", "7", "--A", "t^2", "--trunc", "40000"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().contains("\t13350\t26648\t"), "{out}");
    let (code, out, _) = cli(&["psig", "--q", "5", "--A", "t^2", "--P", "t+1"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("split"));
}

#[test]
fn printed_polynomials_parse_back() {
    let (_, out, _) = cli(&["search-h1", "--q", "7"]);
    let found: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(2).unwrap()).collect();
    assert_eq!(found.len(), 21);
    for a in found {
        let (code, canon, _) = cli(&["canon", "--q", "7", "--A", a]);
        assert_eq!(code, 0);
        let row: Vec<&str> = canon.lines().nth(1).unwrap().split('\t').collect();
        assert_eq!(row[0], a);
        assert_eq!(row[1], a);
    }
}

#[test]
fn large_index_and_classification() {
    let (code, out, _) = cli(&["large-index", "--q", "7", "--deg-a", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("t^3+5\t"), "{out}");
    let (code, out, _) = cli(&["classify-params", "--q", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 + 6);
}

#[test]
fn survey_small_block() {
    let (code, out, _) = cli(&["survey", "--q", "7", "--deg-a", "2", "--deg-i", "0", "--trunc", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 + 105);
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(cli(&["invariants", "--q", "6", "--A", "t^2"]).0, 1);
    assert_eq!(cli(&["invariants", "--q", "5", "--A", "t^^2"]).0, 1);
    assert_eq!(cli(&["psig", "--q", "5", "--A", "t^2", "--P", "t^2+t"]).0, 1);
    assert_eq!(cli(&["classno", "--q", "5", "--A", "t^2", "--trunc", "5", "--lambda", "2"]).0, 1);
    assert_eq!(cli(&["no-such-command"]).0, 1);
}

#[test]
fn help_for_every_command() {
    for cmd in [
        "invariants", "psig", "census", "classno", "exact", "survey", "search-h1", "large-index",
        "classify-params", "canon",
    ] {
        let (code, out, err) = cli(&[cmd, "--help"]);
        assert_eq!(code, 0, "{cmd}: {err}");
        assert!(out.contains("Usage"), "{cmd}: {out}");
    }
}
