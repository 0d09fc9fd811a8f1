use brauer_fusion::brauer::*;
use brauer_fusion::scalars::{int, OmegaRatFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn el(d: BrauerDiagram) -> BrauerElement {
    BrauerElement::from_diagram(d)
}

fn omega() -> OmegaRatFunc {
    OmegaRatFunc::omega()
}

#[test]
fn epsilon_squared_gives_one_loop() {
    let e = gen_eps(1, 2).unwrap();
    let (loops, d) = diagram_mul(&e, &e).unwrap();
    assert_eq!((loops, &d), (1, &e));
    assert_eq!(&el(e.clone()) * &el(e.clone()), el(e).scale(&omega()));
}

#[test]
fn epsilon_chain_collapses() {
    let e1 = gen_eps(1, 3).unwrap();
    let e2 = gen_eps(2, 3).unwrap();
    let (l1, d12) = diagram_mul(&e1, &e2).unwrap();
    let (l2, d) = diagram_mul(&d12, &e1).unwrap();
    assert_eq!((l1 + l2, d), (0, e1));
}

#[test]
fn small_products() {
    let s = el(gen_s(1, 2).unwrap());
    let e = el(gen_eps(1, 2).unwrap());
    let one = BrauerElement::identity(2);
    assert_eq!(&s * &s, one);
    assert_eq!(&s * &e, e);
    // (s + ε)(s − ε) = 1 − ωε
    let lhs = &(&s + &e) * &(&s - &e);
    let rhs = &one - &e.scale(&omega());
    assert_eq!(lhs, rhs);
}

#[test]
fn word_built_transposition() {
    let s1 = el(gen_s(1, 3).unwrap());
    let s2 = el(gen_s(2, 3).unwrap());
    assert_eq!(&(&s1 * &s2) * &s1, el(s_ij(1, 3, 3).unwrap()));
    // ε_13 = s_12 ε_2 s_12
    let e2 = el(gen_eps(2, 3).unwrap());
    assert_eq!(&(&s1 * &e2) * &s1, el(eps_ij(1, 3, 3).unwrap()));
}

#[test]
fn presentation_holds() {
    for n in 2..=5 {
        let report = check_presentation(n).unwrap();
        for r in &report {
            assert!(r.passed, "n={n}: {}", r.relation);
        }
    }
    assert!(check_presentation(1).is_err());
}

#[test]
fn diagram_counts() {
    let mut df = 1;
    for n in 1..=5 {
        df *= 2 * n - 1;
        assert_eq!(enumerate_diagrams(n).len(), df);
    }
}

#[test]
fn associativity_with_loops() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5 {
        let all = enumerate_diagrams(n);
        for _ in 0..200 {
            let pick = |rng: &mut ChaCha8Rng| all[rng.gen_range(0..all.len())].clone();
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let (l1, ab) = diagram_mul(&a, &b).unwrap();
            let (l2, ab_c) = diagram_mul(&ab, &c).unwrap();
            let (l3, bc) = diagram_mul(&b, &c).unwrap();
            let (l4, a_bc) = diagram_mul(&a, &bc).unwrap();
            assert_eq!((l1 + l2, ab_c), (l3 + l4, a_bc));
        }
    }
}

#[test]
fn jucys_murphy_commute() {
    let n = 4;
    let x: Vec<_> = (1..=n).map(|r| jucys_murphy(r, n).unwrap()).collect();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(&x[a] * &x[b], &x[b] * &x[a], "x_{} x_{}", a + 1, b + 1);
        }
    }
    let x2 = jucys_murphy(2, 2).unwrap();
    let expected = &(&BrauerElement::scalar(2, first_content()) + &el(gen_s(1, 2).unwrap()))
        - &el(gen_eps(1, 2).unwrap());
    assert_eq!(x2, expected);
}

#[test]
fn jm_centralizes_smaller_algebra() {
    for n in 2..=4 {
        let x = jucys_murphy(n, n).unwrap();
        for i in 1..n - 1 {
            for g in [gen_s(i, n).unwrap(), gen_eps(i, n).unwrap()] {
                let g = el(g);
                assert_eq!(&x * &g, &g * &x, "x_{n} vs generator {i}");
            }
        }
    }
}

#[test]
fn projection_examples() {
    let one = BrauerElement::identity(2);
    let s = el(gen_s(1, 2).unwrap());
    let e = el(gen_eps(1, 2).unwrap());
    assert_eq!(project_symmetric_group(&(&one + &e)).as_element(), &one);
    assert_eq!(project_symmetric_group(&s).as_element(), &s);
    let half = OmegaRatFunc::from_rat(1, 2);
    let eu1 = &(&one + &s).scale(&half) - &e.scale(&omega().inv().unwrap());
    assert_eq!(
        project_symmetric_group(&eu1).as_element(),
        &(&one + &s).scale(&half)
    );
}

fn random_element(rng: &mut ChaCha8Rng, all: &[BrauerDiagram]) -> BrauerElement {
    let n = all[0].n();
    let mut out = BrauerElement::zero(n);
    for _ in 0..4 {
        let d = all[rng.gen_range(0..all.len())].clone();
        let c = OmegaRatFunc::linear(int(rng.gen_range(-3i64..=3)), int(rng.gen_range(-3i64..=3)));
        let c = &c / &OmegaRatFunc::linear(int(1), int(rng.gen_range(1i64..=4)));
        out.add_term(d, &c);
    }
    out
}

#[test]
fn projection_is_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=4 {
        let all = enumerate_diagrams(n);
        for _ in 0..20 {
            let a = random_element(&mut rng, &all);
            let b = random_element(&mut rng, &all);
            let lhs = project_symmetric_group(&(&a * &b));
            let rhs = project_symmetric_group(&a).mul(&project_symmetric_group(&b));
            assert_eq!(lhs, rhs);
            assert!((&a * &b).is_pruned());
        }
    }
}

#[test]
fn element_json_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let all = enumerate_diagrams(3);
    for _ in 0..10 {
        let a = random_element(&mut rng, &all);
        let s = serde_json::to_string(&a).unwrap();
        let back: BrauerElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}

#[test]
fn embedding_and_direct_products_agree() {
    // n = 6 goes through the table-free product path.
    let n = 6;
    let lhs =
        &(&el(gen_s(4, n).unwrap()) * &el(gen_eps(5, n).unwrap())) * &el(gen_eps(4, n).unwrap());
    let rhs = &el(gen_s(5, n).unwrap()) * &el(gen_eps(4, n).unwrap());
    assert_eq!(lhs, rhs);
    let e5 = el(gen_eps(5, n).unwrap());
    let e4 = el(gen_eps(4, n).unwrap());
    assert_eq!(&(&e5 * &e4) * &e5, e5);
    let small = el(gen_eps(1, 3).unwrap());
    assert_eq!(small.embed(), el(gen_eps(1, 4).unwrap()));
}
