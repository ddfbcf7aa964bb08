use quatfact::arith::{int, RatPoly};
use quatfact::qpoly::{factor, qp_evaluate, roots, CertStore, QPoly};
use quatfact::quadform::{CertificateRecord, ZeroDivisorCertificate, DEFAULT_MAX_HEIGHT};
use quatfact::quatalg::QuaternionAlgebra;
use quatfact::Error;

fn ham() -> QuaternionAlgebra {
    QuaternionAlgebra::new(int(-1), int(-1)).unwrap()
}

fn record() -> CertificateRecord {
    CertificateRecord {
        alpha: int(-1),
        beta: int(-1),
        minpoly: RatPoly::from_ints(&[6, 16, 11, 0, 1]),
        certificate: ZeroDivisorCertificate::new(
            RatPoly::zero(),
            RatPoly::from_ints(&[154, 211, -12, 19]),
            RatPoly::from_ints(&[97, 136, -11, 13]),
            RatPoly::from_ints(&[53]),
        ),
    }
}

#[test]
fn certificate_file_drives_factorization() {
    let a = ham();
    let rec = CertificateRecord::from_json(&record().to_json()).unwrap();
    let mut store = CertStore::new();
    store.insert(rec);
    let p = QPoly::from_central(&a, &RatPoly::from_ints(&[6, 16, 11, 0, 1]));
    let f = factor(&p, Some(&store), 0, DEFAULT_MAX_HEIGHT).unwrap();
    assert_eq!(f.factors.len(), 2);
    assert_eq!(f.expand(), p);
}

#[test]
fn missing_certificate_names_the_factor() {
    let a = ham();
    let central = RatPoly::from_ints(&[6, 16, 11, 0, 1]);
    let p = &QPoly::linear(&a.i()) * &QPoly::from_central(&a, &central);
    match factor(&p, None, 0, 1) {
        Err(Error::SearchExhausted { factor }) => assert_eq!(factor, central),
        other => panic!("expected SearchExhausted, got {other:?}"),
    }
}

#[test]
fn several_central_factors() {
    let a = ham();
    let central = &RatPoly::from_ints(&[1, 0, 1]) * &RatPoly::from_ints(&[-2, 0, 0, 1]);
    let p = &QPoly::linear(&a.from_ints([1, 1, 0, 0])) * &QPoly::from_central(&a, &central);
    let f = factor(&p, None, 0, DEFAULT_MAX_HEIGHT).unwrap();
    assert_eq!(f.expand(), p);
    // x - 1 - i, then x - i and x + i from x^2 + 1, then x^3 - 2 intact
    assert_eq!(f.factors.len(), 4);
    assert_eq!(f.factors[3], QPoly::from_central(&a, &RatPoly::from_ints(&[-2, 0, 0, 1])));
    let r = roots(&p).unwrap();
    assert_eq!(r.len(), 2);
    for x in &r.representatives {
        assert!(qp_evaluate(&p, x).unwrap().is_zero());
    }
}

#[test]
fn repeated_factors() {
    let a = QuaternionAlgebra::new(int(-1), int(-3)).unwrap();
    let l = QPoly::linear(&a.from_ints([1, 0, 1, 0]));
    let p = &(&l * &l) * &QPoly::linear(&a.from_ints([0, 1, 1, 1]));
    let f = factor(&p, None, 0, DEFAULT_MAX_HEIGHT).unwrap();
    assert_eq!(f.factors.len(), 3);
    assert_eq!(f.expand(), p);
}
