use std::process::{Command, Output};

use proptest::prelude::*;

use quatfact::arith::{int, RatPoly};
use quatfact::qpoly::QPoly;
use quatfact::quadform::{CertificateRecord, ZeroDivisorCertificate};
use quatfact::quatalg::QuaternionAlgebra;
use quatfact_cli::parse_poly;
use quatfact_cli::report::{poly_from_json, quat_from_json, Report};

const DEGREE8: [[i64; 4]; 9] = [
    [18, -36, -12, -6],
    [48, -90, -2, 8],
    [21, -50, 58, 53],
    [-44, 17, 49, 32],
    [-45, 10, -18, -27],
    [-6, 12, -6, -2],
    [9, 0, 0, 11],
    [-2, 1, -1, -2],
    [1, 0, 0, 1],
];

fn quatfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatfact")).args(args).output().expect("binary runs")
}

fn ham() -> QuaternionAlgebra {
    QuaternionAlgebra::new(int(-1), int(-1)).unwrap()
}

fn degree8_text() -> String {
    let a = ham();
    QPoly::new(&a, DEGREE8.iter().map(|c| a.from_ints(*c)).collect()).to_string()
}

fn certificate_file() -> std::path::PathBuf {
    let rec = CertificateRecord {
        alpha: int(-1),
        beta: int(-1),
        minpoly: RatPoly::from_ints(&[6, 16, 11, 0, 1]),
        certificate: ZeroDivisorCertificate::new(
            RatPoly::zero(),
            RatPoly::from_ints(&[154, 211, -12, 19]),
            RatPoly::from_ints(&[97, 136, -11, 13]),
            RatPoly::from_ints(&[53]),
        ),
    };
    let path = std::env::temp_dir().join(format!("quatfact-cert-{}.json", std::process::id()));
    std::fs::write(&path, rec.to_json()).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn factors_the_degree_eight_example() {
    let cert = certificate_file();
    let p = degree8_text();
    let o = quatfact(&["factor", "--verify", "--certificate", cert.to_str().unwrap(), &p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("leading: 1+k"), "{out}");
    assert!(out.contains("factors: 5"), "{out}");
    assert!(out.contains("verification: PASS"), "{out}");
}

#[test]
fn json_report_reverifies() {
    let cert = certificate_file();
    let p = degree8_text();
    let o = quatfact(&["factor", "--json", "--certificate", cert.to_str().unwrap(), &p]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Report = serde_json::from_str(&stdout(&o)).unwrap();
    let a = ham();
    let mut prod = QPoly::constant(&quat_from_json(&a, rep.leading.as_ref().unwrap()).unwrap());
    for f in rep.factors.as_ref().unwrap() {
        let f = poly_from_json(&a, f).unwrap();
        assert!(f.is_monic());
        prod = &prod * &f;
    }
    assert_eq!(prod, parse_poly(&p, &a).unwrap());
    assert_eq!(rep.seed, 0);
}

#[test]
fn no_roots_is_not_an_error() {
    let o = quatfact(&["roots", "x^2 - 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("roots: none"));
    let o = quatfact(&["roots", "--json", "x^2 - 2"]);
    let rep: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.roots, Some(vec![]));
}

#[test]
fn roots_are_verified() {
    let o = quatfact(&["roots", "--verify", "--alpha", "-1", "--beta", "-3", "x^2 + x + 1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("roots: 1") && out.contains("verification: PASS"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(quatfact(&["factor", "--alpha", "1", "--beta", "1", "x^2+1"]).status.code(), Some(2));
    let o = quatfact(&["factor", "x^4 + 11x^2 + 16x + 6", "--max-height", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--certificate"));
    assert_eq!(quatfact(&["factor", "x^2 + y"]).status.code(), Some(1));
    assert_eq!(quatfact(&["factor", "--alpha", "0", "x"]).status.code(), Some(1));
    assert_eq!(quatfact(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(quatfact(&["--help"]).status.code(), Some(0));
}

#[test]
fn other_commands() {
    let o = quatfact(&["irreducible", "--verify", "x^2 + i x - 2 - k"]);
    assert!(stdout(&o).contains("irreducible: true"));
    let o = quatfact(&["beck", "--verify", "(x - i)(x^2 + 1)"]);
    let out = stdout(&o);
    assert!(out.contains("central part: x^2 + 1") && out.contains("PASS"), "{out}");
    let o = quatfact(&["gcrd", "--verify", "(x - j)(x - i)", "(x + k)(x - i)"]);
    let out = stdout(&o);
    assert!(out.contains("gcrd: x + (-i)") && out.contains("PASS"), "{out}");
    let o = quatfact(&["eval", "--verify", "x^2 + 1", "i"]);
    let out = stdout(&o);
    assert!(out.contains("value: 0") && out.contains("PASS"), "{out}");
}

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (0u32..20).prop_map(|n| n.to_string()),
        Just("i".to_string()),
        Just("j".to_string()),
        Just("k".to_string()),
        Just("x".to_string()),
        (1u32..9).prop_map(|d| format!("(1/{d})")),
    ]
}

fn expr() -> impl Strategy<Value = String> {
    atom().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), 0u32..3).prop_map(|(a, e)| format!("({a})^{e}")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printing_round_trips(s in expr(), alpha in -5i64..0, beta in -5i64..0) {
        let a = QuaternionAlgebra::new(int(alpha), int(beta)).unwrap();
        let p = parse_poly(&s, &a).unwrap();
        let printed = p.to_string();
        let q = parse_poly(&printed, &a).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(q.to_string(), printed);
    }
}
