use brauer_fusion::fusion::{murphy_element, symmetrizer};
use brauer_fusion::report::Report;
use brauer_fusion::scalars::{int, rat, BigRational};
use brauer_fusion::tableau::{enumerate_updown, Partition, UpdownTableau};
use brauer_fusion::tensor::*;

fn t(s: &str) -> UpdownTableau {
    s.parse().unwrap()
}

fn metric(n: usize, kind: MetricKind) -> Metric {
    Metric::new(n, kind).unwrap()
}

fn assert_passed(r: &Report) {
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{} failed: {:#?}", r.suite, bad);
}

fn ybe(metric: &Metric, u: &BigRational, v: &BigRational) -> bool {
    let r12 = build_r(metric, u).unwrap().on(&[0, 1], 3).unwrap();
    let r13 = build_r(metric, &(u + v)).unwrap().on(&[0, 2], 3).unwrap();
    let r23 = build_r(metric, v).unwrap().on(&[1, 2], 3).unwrap();
    r12.mul(&r13).unwrap().mul(&r23).unwrap() == r23.mul(&r13).unwrap().mul(&r12).unwrap()
}

#[test]
fn eps_over_omega_is_q_over_three() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    let e = brauer_action(&murphy_element(&t("[1];[]")).unwrap(), &m).unwrap();
    assert_eq!(e, build_q(&m).scale(&rat(1, 3)));
    assert_eq!(e.matrix().rank(), 1);
    assert_eq!(e.mul(&e).unwrap(), e);
}

#[test]
fn symmetrizer_image_has_trace_five() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    let s = brauer_action(&symmetrizer(2).unwrap(), &m).unwrap();
    assert_eq!(s.trace(), int(5));
}

#[test]
fn ybe_at_fixed_point() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    assert!(ybe(&m, &rat(2, 3), &rat(5, 7)));
}

#[test]
fn pq_f_and_lemma_identities_all_kinds() {
    for n in 3..=5 {
        for kind in MetricKind::available(n) {
            let m = metric(n, kind);
            assert_passed(&verify_matrix_identities(&m, 11, 3).unwrap());
        }
    }
}

#[test]
fn symplectic_u_relations() {
    let m = metric(4, MetricKind::Symplectic);
    let r = check_lemma_identities(&m, 5, 2).unwrap();
    assert_passed(&r);
    assert!(r.checks.iter().any(|c| c.name == "PU = ±U"));
}

#[test]
fn rff_at_fixed_point() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    let kappa = m.kappa();
    let f = f_operator(&m);
    let (u, v) = (rat(1, 2), int(3));
    let r = build_r(&m, &(&u - &v)).unwrap().on(&[0, 1], 3).unwrap();
    let f1 = f.on(&[0, 2], 3).unwrap();
    let f2 = f.on(&[1, 2], 3).unwrap();
    let q = build_q(&m).on(&[0, 1], 3).unwrap();
    let (fu, fv) = (f1.shift(&u), f2.shift(&v));
    let lhs = r
        .mul(&fu)
        .unwrap()
        .mul(&fv)
        .unwrap()
        .sub(&fv.mul(&fu).unwrap().mul(&r).unwrap())
        .unwrap();
    let f1k = f1.shift(&kappa);
    let big_u = q
        .mul(&f1k)
        .unwrap()
        .mul(&f2)
        .unwrap()
        .sub(&f2.mul(&f1k).unwrap().mul(&q).unwrap())
        .unwrap();
    assert_eq!(lhs, big_u.scale(&(int(1) / (&u - &v - &kappa))));
}

#[test]
fn r_inverse_and_poles() {
    let m = metric(4, MetricKind::Symplectic);
    // kappa = 3 here, so u = 3 is a pole; the inverse is checked nearby
    assert_eq!(m.kappa(), int(3));
    let u = rat(7, 2);
    let r = build_r(&m, &u).unwrap();
    let prod = r.mul(&r_inverse(&m, &u).unwrap()).unwrap();
    assert_eq!(prod, TensorOperator::identity(4, 2));
    assert!(build_r(&m, &m.kappa()).is_err());
    assert!(build_r(&m, &int(0)).is_err());
}

#[test]
fn evaluation_unitarity_at_five_halves() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    let u = rat(5, 2);
    let s = evaluation_image_s(&m, 1, &u).unwrap();
    let sm = evaluation_image_s(&m, 1, &-&u).unwrap();
    assert_eq!(s.mul(&sm).unwrap(), TensorOperator::identity(3, 2));
}

fn refeq(m: &Metric, sites: usize, u: &BigRational, v: &BigRational) -> bool {
    let total = 2 + sites;
    let reps: Vec<usize> = (2..total).collect();
    let on =
        |aux: usize| -> Vec<usize> { std::iter::once(aux).chain(reps.iter().copied()).collect() };
    let s1 = evaluation_image_s(m, sites, u)
        .unwrap()
        .on(&on(0), total)
        .unwrap();
    let s2 = evaluation_image_s(m, sites, v)
        .unwrap()
        .on(&on(1), total)
        .unwrap();
    let rm = build_r(m, &(u - v)).unwrap().on(&[0, 1], total).unwrap();
    let rp = build_r(m, &(u + v)).unwrap().on(&[0, 1], total).unwrap();
    let lhs = rm.mul(&s1).unwrap().mul(&rp).unwrap().mul(&s2).unwrap();
    let rhs = s2.mul(&rp).unwrap().mul(&s1).unwrap().mul(&rm).unwrap();
    lhs == rhs
}

#[test]
fn reflection_equation_at_fixed_point() {
    let (u, v) = (rat(7, 3), rat(1, 5));
    for m in [
        metric(3, MetricKind::OrthogonalIdentity),
        metric(4, MetricKind::Symplectic),
    ] {
        for sites in 1..=2 {
            assert!(refeq(&m, sites, &u, &v), "{} sites={sites}", m.kind());
        }
    }
}

#[test]
fn reflection_and_embedding_suites() {
    for (n, kind) in [
        (3, MetricKind::OrthogonalAntidiagonal),
        (4, MetricKind::OrthogonalIdentity),
    ] {
        let m = metric(n, kind);
        assert_passed(&check_reflection(&m, 1, 3, 2).unwrap());
        assert_passed(&check_embedding(&m, 2, 3).unwrap());
    }
}

#[test]
fn brauer_action_is_a_homomorphism() {
    for m in [
        metric(3, MetricKind::OrthogonalIdentity),
        metric(4, MetricKind::Symplectic),
    ] {
        assert_passed(&check_brauer_action(&m, 2).unwrap());
    }
}

#[test]
fn projectors_transport_for_n_two() {
    for m in [
        metric(5, MetricKind::OrthogonalIdentity),
        metric(4, MetricKind::Symplectic),
    ] {
        assert_passed(&check_projector_transport(&m, 2).unwrap());
    }
}

#[test]
fn yangian_representation_example() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    assert_passed(&yangian_rep_check(&m, &[int(0), rat(1, 2)], 2, 1).unwrap());
    assert_passed(&yangian_rep_check(&m, &[int(0)], 2, 2).unwrap());
}

#[test]
fn invco_two_sites() {
    let cases = [
        (metric(5, MetricKind::OrthogonalIdentity), "[1];[2]"),
        (metric(5, MetricKind::OrthogonalAntidiagonal), "[1];[1,1]"),
        (metric(4, MetricKind::Symplectic), "[1];[2]"),
        (metric(4, MetricKind::Symplectic), "[1];[1,1]"),
        (metric(4, MetricKind::Symplectic), "[1];[]"),
    ];
    for (m, s) in cases {
        assert_passed(&check_prop_invco(&t(s), &m, 9, 2).unwrap());
    }
}

#[test]
fn invco_factor_pole_at_nine_quarters() {
    // N = 5: κ/2 = 3/4 and c₂ = 3, so R₀₂(u − c₂ + κ/2) has argument 0 at u = 9/4
    let m = metric(5, MetricKind::OrthogonalIdentity);
    assert!(matches!(
        check_prop_invco_at(&t("[1];[2]"), &m, &[rat(9, 4)]),
        Err(brauer_fusion::Error::Pole(_))
    ));
    let r = check_prop_invco_at(&t("[1];[2]"), &m, &[rat(9, 5), rat(-7, 3)]).unwrap();
    assert_passed(&r);
    assert_eq!(r.checks.last().unwrap().params["u"], "-7/3");
}

#[test]
fn invco_three_sites() {
    for m in [
        metric(7, MetricKind::OrthogonalIdentity),
        metric(6, MetricKind::Symplectic),
    ] {
        for tab in [
            "[1];[2];[1]",
            "[1];[1,1];[1]",
            "[1];[];[1]",
            "[1];[2];[3]",
            "[1];[1,1];[2,1]",
        ] {
            let r = check_prop_invco(&t(tab), &m, 9, 2).unwrap();
            assert_passed(&r);
        }
    }
}

#[test]
fn invco_rank_for_shape_one() {
    let m = metric(7, MetricKind::OrthogonalIdentity);
    let r = check_prop_invco(&t("[1];[2];[1]"), &m, 1, 1).unwrap();
    let rank = r
        .checks
        .iter()
        .find(|c| c.name.starts_with("rank"))
        .unwrap();
    assert_eq!(rank.params["rank"], 7);
    assert!(rank.passed);
}

#[test]
fn symplectic_rank_follows_the_conjugate_shape() {
    let m = metric(4, MetricKind::Symplectic);
    let e = brauer_action(&murphy_element(&t("[1];[2]")).unwrap(), &m).unwrap();
    // s ↦ −P puts the symmetric square on the antisymmetric side
    assert_eq!(e.trace(), int(5));
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(sp_dimension(4, &p(&[1, 1])), int(5));
    assert_eq!(expected_rank(&m, &p(&[2])), int(5));
}

#[test]
fn invco_gl_two_sites() {
    for s in ["[1];[2]", "[1];[1,1]"] {
        for omega in [int(9), rat(-5, 2)] {
            let r = check_prop_invcogl(&t(s), 3, &omega, 4, 2).unwrap();
            assert_passed(&r);
        }
    }
}

#[test]
fn invco_gl_at_four_thirds() {
    let r = check_prop_invcogl_at(&t("[1];[2]"), 3, &int(9), &[rat(4, 3)]).unwrap();
    assert_passed(&r);
    let rank = r
        .checks
        .iter()
        .find(|c| c.name.starts_with("rank"))
        .unwrap();
    assert_eq!(rank.params["rank"], 6);
    // the reciprocal normalization differs from the evaluation image by (u+ω/4)/(u−ω/4)
    let last = r.checks.last().unwrap();
    assert_eq!(last.params["reciprocal_prefactor_matches"], false);
}

#[test]
fn invcogl_rejects_non_standard_tableaux() {
    assert!(check_prop_invcogl(&t("[1];[]"), 3, &int(9), 1, 1).is_err());
}

#[test]
fn explicit_pole_is_reported() {
    // u = N/4 is a pole of the evaluation image prefactor
    let m = metric(4, MetricKind::OrthogonalIdentity);
    assert!(check_prop_invco_at(&t("[1];[2]"), &m, &[int(1)]).is_err());
}

#[test]
fn three_site_action_and_projectors() {
    for m in [
        metric(7, MetricKind::OrthogonalIdentity),
        metric(6, MetricKind::Symplectic),
    ] {
        assert_passed(&check_brauer_action(&m, 3).unwrap());
        assert_passed(&check_projector_transport(&m, 3).unwrap());
    }
}

#[test]
fn reflection_with_two_sites_symplectic() {
    assert_passed(&check_reflection(&metric(4, MetricKind::Symplectic), 2, 1, 2).unwrap());
}

#[test]
fn expected_ranks() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(gl_dimension(3, &p(&[2])), int(6));
    assert_eq!(
        expected_rank(&metric(7, MetricKind::OrthogonalIdentity), &p(&[1])),
        int(7)
    );
    assert_eq!(enumerate_updown(2, None).len(), 3);
}

#[test]
fn reports_are_deterministic() {
    let m = metric(3, MetricKind::OrthogonalIdentity);
    let a = serde_json::to_string(&check_reflection(&m, 1, 42, 2).unwrap()).unwrap();
    let b = serde_json::to_string(&check_reflection(&m, 1, 42, 2).unwrap()).unwrap();
    assert_eq!(a, b);
}
