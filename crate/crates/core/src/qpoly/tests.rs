use proptest::prelude::*;

use super::*;
use crate::quatalg::is_conjugate;
use crate::arith::{int, rat};
use crate::quadform::ZeroDivisorCertificate;

fn ham() -> QuaternionAlgebra {
    QuaternionAlgebra::new(int(-1), int(-1)).unwrap()
}

/// Coefficients lowest degree first.
fn qp(a: &QuaternionAlgebra, c: &[[i64; 4]]) -> QPoly {
    QPoly::new(a, c.iter().map(|v| a.from_ints(*v)).collect())
}

fn rp(c: &[i64]) -> RatPoly {
    RatPoly::from_ints(c)
}

fn lin(a: &QuaternionAlgebra, v: [i64; 4]) -> QPoly {
    QPoly::linear(&a.from_ints(v))
}

pub(crate) fn example_degree8(a: &QuaternionAlgebra) -> QPoly {
    qp(
        a,
        &[
            [18, -36, -12, -6],
            [48, -90, -2, 8],
            [21, -50, 58, 53],
            [-44, 17, 49, 32],
            [-45, 10, -18, -27],
            [-6, 12, -6, -2],
            [9, 0, 0, 11],
            [-2, 1, -1, -2],
            [1, 0, 0, 1],
        ],
    )
}

fn q0(a: &QuaternionAlgebra) -> QPoly {
    qp(a, &[[0, -2, 1, -1], [0, -3, 1, -1], [1, 0, 0, 0]])
}

fn example_certificate() -> ZeroDivisorCertificate {
    ZeroDivisorCertificate::new(
        RatPoly::zero(),
        rp(&[154, 211, -12, 19]),
        rp(&[97, 136, -11, 13]),
        rp(&[53]),
    )
}

#[test]
fn norms() {
    let a = ham();
    assert_eq!(qp_norm(&lin(&a, [0, 1, 0, 0])), rp(&[1, 0, 1]));
    assert_eq!(qp_norm(&lin(&a, [2, 0, 1, 0])), rp(&[5, -4, 1]));
    let q3 = qp(&a, &[[-2, 0, 0, -1], [0, 1, 0, 0], [1, 0, 0, 0]]);
    assert_eq!(qp_norm(&q3), rp(&[5, 0, -3, 0, 1]));
    let p = lin(&a, [1, 2, -1, 3]);
    let n = &p * &qp_conj(&p);
    assert_eq!(n, QPoly::from_central(&a, &qp_norm(&p)));
}

#[test]
fn right_division() {
    let a = ham();
    let p = QPoly::from_central(&a, &rp(&[1, 0, 1]));
    let (q, r) = qp_right_divmod(&p, &lin(&a, [0, 0, 1, 0])).unwrap();
    assert_eq!(q, lin(&a, [0, 0, -1, 0]));
    assert!(r.is_zero());

    let xi = lin(&a, [0, 1, 0, 0]);
    let xj = lin(&a, [0, 0, 1, 0]);
    let (_, r) = qp_right_divmod(&(&xi * &xj), &xi).unwrap();
    assert_eq!(r, QPoly::constant(&a.from_ints([0, 0, 0, 2])));

    let (q, r) = qp_right_divmod(&xi, &p).unwrap();
    assert!(q.is_zero());
    assert_eq!(r, xi);
    assert_eq!(qp_right_divmod(&xi, &QPoly::zero(&a)), Err(Error::DivisionByZero));
}

#[test]
fn gcrd_examples() {
    let a = ham();
    let xi = lin(&a, [0, 1, 0, 0]);
    let xj = lin(&a, [0, 0, 1, 0]);
    let c = QPoly::from_central(&a, &rp(&[1, 0, 1]));
    assert_eq!(qp_gcrd(&(&xi * &xj), &c).unwrap(), xj);
    let p = QPoly::new(&a, vec![a.from_ints([0, 2, 0, 0]), a.from_ints([0, 0, 3, 0])]);
    assert_eq!(qp_gcrd(&p, &QPoly::zero(&a)).unwrap(), p.monic().unwrap());
    assert!(qp_gcrd(&QPoly::zero(&a), &QPoly::zero(&a)).is_err());

    let b = beck_decompose(&example_degree8(&a)).unwrap();
    let q3 = QPoly::from_central(&a, &rp(&[5, 0, -3, 0, 1]));
    assert_eq!(
        qp_gcrd(&b.central_free, &q3).unwrap(),
        qp(&a, &[[-2, 0, 0, -1], [0, 1, 0, 0], [1, 0, 0, 0]])
    );
}

#[test]
fn lclm_examples() {
    let a = ham();
    let xi = lin(&a, [0, 1, 0, 0]);
    let xj = lin(&a, [0, 0, 1, 0]);
    let c = QPoly::from_central(&a, &rp(&[1, 0, 1]));
    assert_eq!(qp_lclm(&xi, &xj).unwrap(), c);
    assert_eq!(qp_lclm(&xi, &xi).unwrap(), xi);
    assert_eq!(qp_lclm(&xi, &lin(&a, [0, -1, 0, 0])).unwrap(), c);
    assert!(qp_lclm(&xi, &QPoly::zero(&a)).is_err());
}

#[test]
fn evaluation() {
    let a = ham();
    let c = QPoly::from_central(&a, &rp(&[1, 0, 1]));
    assert!(qp_evaluate(&c, &a.i()).unwrap().is_zero());
    let p = &lin(&a, [0, 1, 0, 0]) * &lin(&a, [0, 0, 1, 0]);
    assert_eq!(qp_evaluate(&p, &a.i()).unwrap(), a.from_ints([0, 0, 0, 2]));
    assert!(qp_evaluate(&p, &a.j()).unwrap().is_zero());
}

#[test]
fn beck() {
    let a = ham();
    let p = example_degree8(&a);
    let b = beck_decompose(&p).unwrap();
    assert_eq!(b.leading, a.from_ints([1, 0, 0, 1]));
    assert_eq!(b.central, rp(&[6, 16, 11, 0, 1]));
    assert_eq!(b.central_free.deg(), 4);
    assert_eq!(b.expand(), p);

    let c = beck_decompose(&QPoly::from_central(&a, &rp(&[1, 0, 1]))).unwrap();
    assert_eq!(c.leading, a.one());
    assert_eq!(c.central_free, QPoly::one(&a));
    assert_eq!(c.central, rp(&[1, 0, 1]));

    let lead = a.from_ints([1, 0, 0, 1]);
    let d = beck_decompose(&lin(&a, [0, 1, 0, 0]).scale_left(&lead)).unwrap();
    assert_eq!(d.leading, lead);
    assert_eq!(d.central_free, lin(&a, [0, 1, 0, 0]));
    assert_eq!(d.central, RatPoly::one());
    assert!(beck_decompose(&QPoly::zero(&a)).is_err());
}

#[test]
fn irreducibility() {
    let a = ham();
    assert!(!is_irreducible(&QPoly::from_central(&a, &rp(&[1, 0, 1]))).unwrap());
    assert!(is_irreducible(&QPoly::from_central(&a, &rp(&[-2, 0, 0, 1]))).unwrap());
    assert!(is_irreducible(&qp(&a, &[[-2, 0, 0, -1], [0, 1, 0, 0], [1, 0, 0, 0]])).unwrap());
    assert!(is_irreducible(&lin(&a, [1, 2, 3, 4])).unwrap());
    assert!(!is_irreducible(&(&lin(&a, [0, 1, 0, 0]) * &lin(&a, [0, 0, 1, 0]))).unwrap());
    assert!(is_irreducible(&QPoly::one(&a)).is_err());
}

#[test]
fn subfield_factorizations() {
    let a = ham();
    let (q, qb) = subfield_factor(&rp(&[1, 0, 1]), &a).unwrap().unwrap();
    assert_eq!(q, lin(&a, [0, 1, 0, 0]));
    assert_eq!(qb, lin(&a, [0, -1, 0, 0]));

    let p4 = rp(&[1, 0, 0, 0, 1]);
    let (q, qb) = subfield_factor(&p4, &a).unwrap().unwrap();
    assert_eq!(q.deg(), 2);
    assert_eq!(&q * &qb, QPoly::from_central(&a, &p4));
    assert_eq!(qb, qp_conj(&q));

    assert_eq!(subfield_factor(&rp(&[-2, 0, 0, 1]), &a).unwrap(), None);
    assert!(subfield_factor(&rp(&[-1, 0, 1]), &a).is_err());
    assert!(subfield_factor(&rp(&[1, 0, 2]), &a).is_err());
}

#[test]
fn degree_reduction_replays_the_certificate() {
    let a = ham();
    let p = rp(&[6, 16, 11, 0, 1]);
    let cert = example_certificate();
    let (f, trace) = factor_central_irreducible_traced(&p, &a, Some(&cert), 0, 0).unwrap();
    assert_eq!(trace.route, CentralRoute::ZeroDivisor);
    assert_eq!(trace.q_sequence[0], rp(&[5989, -742, 530]));
    assert_eq!(trace.q_sequence.len(), 2);
    assert_eq!(f.factors, vec![q0(&a), qp_conj(&q0(&a))]);
    assert_eq!(&f.factors[0] * &f.factors[1], QPoly::from_central(&a, &p));
}

#[test]
fn central_irreducible_routes() {
    let a = ham();
    let f = factor_central_irreducible(&rp(&[-2, 0, 0, 1]), &a, None, 0, 2).unwrap();
    assert_eq!(f.factors, vec![QPoly::from_central(&a, &rp(&[-2, 0, 0, 1]))]);
    let (f, t) = factor_central_irreducible_traced(&rp(&[1, 0, 1]), &a, None, 0, 2).unwrap();
    assert_eq!(t.route, CentralRoute::Subfield((-1).into()));
    assert_eq!(f.factors, vec![lin(&a, [0, 1, 0, 0]), lin(&a, [0, -1, 0, 0])]);
    let e = factor_central_irreducible(&rp(&[6, 16, 11, 0, 1]), &a, None, 0, 1);
    assert!(matches!(e, Err(Error::SearchExhausted { .. })));
}

#[test]
fn swapping() {
    let a = ham();
    let xi = lin(&a, [0, 1, 0, 0]);
    let x3 = lin(&a, [3, 0, 0, 0]);
    assert_eq!(swap_factors(&xi, &x3).unwrap(), (x3.clone(), xi.clone()));

    let y = lin(&a, [2, 0, 1, 0]);
    let (q1, p1) = swap_factors(&xi, &y).unwrap();
    assert_eq!(&q1 * &p1, &xi * &y);
    assert_eq!(qp_norm(&p1), rp(&[1, 0, 1]));
    assert_eq!(qp_norm(&q1), rp(&[5, -4, 1]));

    let xj = lin(&a, [0, 0, 1, 0]);
    assert!(matches!(swap_factors(&xi, &xj), Err(Error::PreconditionViolation(_))));
}

#[test]
fn complete_factorization() {
    let a = ham();
    let p = example_degree8(&a);
    let mut store = CertStore::new();
    store.insert(crate::quadform::CertificateRecord {
        alpha: int(-1),
        beta: int(-1),
        minpoly: rp(&[6, 16, 11, 0, 1]),
        certificate: example_certificate(),
    });
    let f = factor(&p, Some(&store), 0, 2).unwrap();
    assert_eq!(f.leading, a.from_ints([1, 0, 0, 1]));
    assert_eq!(
        f.factors,
        vec![
            lin(&a, [0, 1, 0, 0]),
            lin(&a, [2, 0, 1, 0]),
            qp(&a, &[[-2, 0, 0, -1], [0, 1, 0, 0], [1, 0, 0, 0]]),
            q0(&a),
            qp_conj(&q0(&a)),
        ]
    );
    assert_eq!(f.expand(), p);

    let c = QPoly::constant(&a.from_ints([1, 2, 0, 0]));
    let f = factor(&c, None, 0, 2).unwrap();
    assert_eq!(f.leading, a.from_ints([1, 2, 0, 0]));
    assert!(f.factors.is_empty());

    let prod = &lin(&a, [0, 1, 0, 0]) * &lin(&a, [0, 0, 1, 0]);
    let f = factor(&prod, None, 0, 2).unwrap();
    assert_eq!(f.factors.len(), 2);
    assert_eq!(f.expand(), prod);
    assert!(is_conjugate(&-f.factors[1].coeff(0), &a.j()).unwrap());

    assert!(factor(&QPoly::zero(&a), None, 0, 2).is_err());
    let split = QuaternionAlgebra::new_unchecked(int(1), int(1)).unwrap();
    assert!(matches!(
        factor(&QPoly::x(&split), None, 0, 2),
        Err(Error::SplitAlgebra { .. })
    ));
}

#[test]
fn root_finding() {
    let a = ham();
    let r = roots(&QPoly::from_central(&a, &rp(&[1, 0, 1]))).unwrap();
    assert_eq!(r.representatives.len(), 1);
    assert!(is_conjugate(&r.representatives[0], &a.i()).unwrap());
    assert!(roots(&QPoly::from_central(&a, &rp(&[-2, 0, 1]))).unwrap().is_empty());

    let prod = &lin(&a, [0, 1, 0, 0]) * &lin(&a, [0, 0, 1, 0]);
    let r = roots(&prod).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r.representatives[0].charpoly(), rp(&[1, 0, 1]));

    let p = example_degree8(&a);
    let r = roots(&p).unwrap();
    let mut cps: Vec<RatPoly> = r.representatives.iter().map(|x| x.charpoly()).collect();
    cps.sort_by(|x, y| x.canonical_cmp(y));
    assert_eq!(cps, vec![rp(&[1, 0, 1]), rp(&[5, -4, 1])]);
    for x in &r.representatives {
        assert!(qp_evaluate(&p, x).unwrap().is_zero());
    }

    let r = roots(&QPoly::from_central(&a, &rp(&[-6, 1, 1]))).unwrap();
    assert_eq!(r.representatives, vec![a.scalar(int(2)), a.scalar(int(-3))]);
}

#[test]
fn display() {
    let a = ham();
    assert_eq!(QPoly::from_central(&a, &rp(&[1, 0, 1])).to_string(), "x^2 + 1");
    assert_eq!(QPoly::from_central(&a, &rp(&[-3, -1, 2])).to_string(), "2*x^2 - x - 3");
    let p = QPoly::new(&a, vec![-a.j(), a.element(int(0), rat(3, 2), int(0), int(0))]);
    assert_eq!(p.to_string(), "(3/2i)*x + (-j)");
    assert_eq!(QPoly::zero(&a).to_string(), "0");
    assert!(example_degree8(&a).to_string().starts_with("(1+k)*x^8 + (-2+i-j-2k)*x^7"));
}

fn quat(a: &QuaternionAlgebra) -> impl Strategy<Value = Quaternion> {
    let a = a.clone();
    prop::array::uniform4(-5i64..=5).prop_map(move |c| a.from_ints(c))
}

fn poly(a: &QuaternionAlgebra, max_deg: usize) -> impl Strategy<Value = QPoly> {
    let a2 = a.clone();
    prop::collection::vec(quat(a), 0..=max_deg + 1).prop_map(move |c| QPoly::new(&a2, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn division_identity(p in poly(&ham(), 5), d in poly(&ham(), 3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = qp_right_divmod(&p, &d).unwrap();
        prop_assert!(r.is_zero() || r.deg() < d.deg());
        prop_assert_eq!(&(&q * &d) + &r, p.clone());
        let (q2, r2) = qp_right_divmod(&(&(&q * &d) + &r), &d).unwrap();
        prop_assert_eq!((q2, r2), (q, r));
    }

    #[test]
    fn norm_and_conj_are_multiplicative(p in poly(&ham(), 3), q in poly(&ham(), 3)) {
        let pq = &p * &q;
        prop_assert_eq!(qp_norm(&pq), &qp_norm(&p) * &qp_norm(&q));
        prop_assert_eq!(qp_conj(&pq), &qp_conj(&q) * &qp_conj(&p));
    }

    #[test]
    fn gcrd_certificate(p in poly(&ham(), 4), q in poly(&ham(), 4), g in poly(&ham(), 1)) {
        prop_assume!(!g.is_zero());
        let (p, q) = (&p * &g, &q * &g);
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (d, u, v) = qp_gcrd_bezout(&p, &q).unwrap();
        prop_assert!(d.is_monic());
        prop_assert_eq!(&(&u * &p) + &(&v * &q), d.clone());
        prop_assert!(qp_right_divmod(&p, &d).unwrap().1.is_zero());
        prop_assert!(qp_right_divmod(&q, &d).unwrap().1.is_zero());
        prop_assert!(qp_right_divmod(&d, &g.monic().unwrap()).unwrap().1.is_zero() || g.deg() == 0);
        let l = qp_lclm(&p, &q).unwrap();
        prop_assert!(l.is_monic());
        prop_assert!(qp_right_divmod(&l, &p).unwrap().1.is_zero());
        prop_assert!(qp_right_divmod(&l, &q).unwrap().1.is_zero());
        prop_assert_eq!(l.deg() + d.deg(), p.deg() + q.deg());
    }

    #[test]
    fn roots_are_right_factors(p in poly(&ham(), 4), a in quat(&ham()), b in quat(&ham())) {
        let planted = &p * &QPoly::linear(&a);
        prop_assert!(qp_evaluate(&planted, &a).unwrap().is_zero());
        let (_, r) = qp_right_divmod(&p, &QPoly::linear(&b)).unwrap();
        let v = qp_evaluate(&p, &b).unwrap();
        prop_assert_eq!(r, QPoly::new(&ham(), vec![v]));
    }

    #[test]
    fn beck_reconstructs(p in poly(&ham(), 3), c in prop::collection::vec(-3i64..=3, 1..4)) {
        prop_assume!(!p.is_zero());
        let central = RatPoly::from_ints(&c);
        prop_assume!(!central.is_zero());
        let input = p.mul_central(&central);
        let b = beck_decompose(&input).unwrap();
        prop_assert_eq!(b.expand(), input);
        let [c0, c1, c2, c3] = b.central_free.coords();
        let g = [c1, c2, c3].iter().fold(c0, |g, x| if x.is_zero() { g } else { rp_gcd(&g, x).unwrap() });
        prop_assert!(g.deg() == 0);
        prop_assert_eq!(beck_decompose(&b.expand()).unwrap(), b);
    }
}
