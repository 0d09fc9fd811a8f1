use brauer_fusion::brauer::enumerate_diagrams;
use brauer_fusion::scalars::{rat, BigRational, OmegaRatFunc};
use brauer_fusion::tableau::*;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn tab(s: &str) -> UpdownTableau {
    s.parse().unwrap()
}

fn lin(a: (i64, i64), b: (i64, i64)) -> OmegaRatFunc {
    OmegaRatFunc::linear(rat(a.0, a.1), rat(b.0, b.1))
}

#[test]
fn two_step_tableaux() {
    let all = enumerate_updown(2, None);
    let names: Vec<String> = all.iter().map(|t| t.to_string()).collect();
    assert_eq!(names, ["[1];[]", "[1];[1,1]", "[1];[2]"]);
}

#[test]
fn three_step_tableaux_ending_in_one_box() {
    let all = enumerate_updown(3, Some(&part(&[1])));
    let names: Vec<String> = all.iter().map(|t| t.to_string()).collect();
    assert_eq!(names, ["[1];[];[1]", "[1];[1,1];[1]", "[1];[2];[1]"]);
    assert!(enumerate_updown(3, Some(&part(&[2]))).is_empty());
    assert!(enumerate_updown(2, Some(&part(&[3]))).is_empty());
}

fn shapes_of_size(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn squares_of_counts_give_diagram_count() {
    for n in 1..=5 {
        let mut total = 0;
        let mut covered = 0;
        let mut f = n;
        loop {
            for lambda in shapes_of_size(f) {
                let c = enumerate_updown(n, Some(&lambda)).len();
                total += c * c;
                covered += c;
            }
            if f < 2 {
                break;
            }
            f -= 2;
        }
        assert_eq!(total, enumerate_diagrams(n).len(), "n = {n}");
        assert_eq!(covered, enumerate_updown(n, None).len());
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let all = enumerate_updown(4, None);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn contents_examples() {
    let half = lin((1, 2), (-1, 2));
    assert_eq!(
        tab("[1];[2]").contents(),
        vec![half.clone(), lin((1, 2), (1, 2))]
    );
    assert_eq!(tab("[1];[]").contents(), vec![half.clone(), -&half]);
    assert_eq!(
        tab("[1];[1,1];[1]").contents(),
        vec![half, lin((1, 2), (-3, 2)), lin((-1, 2), (3, 2))]
    );
}

#[test]
fn content_sign_rule_everywhere() {
    for t in enumerate_updown(4, None) {
        for (s, c) in t.steps().iter().zip(t.contents()) {
            let base = lin((1, 2), (2 * s.cell.diagonal() - 1, 2));
            assert_eq!(c, if s.added { base } else { -&base }, "{t}");
        }
    }
}

#[test]
fn branching_examples() {
    let half = lin((1, 2), (-1, 2));
    assert_eq!(
        branching_contents(&part(&[1]), Cell::new(1, 2)).unwrap(),
        vec![lin((1, 2), (-3, 2)), -&half]
    );
    assert!(branching_contents(&Partition::empty(), Cell::new(1, 1))
        .unwrap()
        .is_empty());
    assert_eq!(
        branching_contents(&part(&[2]), Cell::new(1, 2)).unwrap(),
        vec![lin((1, 2), (3, 2)), lin((1, 2), (-3, 2))]
    );
    assert!(branching_contents(&part(&[2]), Cell::new(2, 2)).is_err());
}

#[test]
fn diagonal_stats_examples() {
    let s = diagonal_stats(&tab("[1]"));
    assert_eq!(s.d(0), 1);
    assert_eq!((s.g(0), s.g(1), s.g(-1), s.g(2)), (-1, 1, 1, 0));
    let s = diagonal_stats(&tab("[1];[2]"));
    assert_eq!((s.d(0), s.d(1)), (1, 1));
    assert_eq!(s.g(1), -1);
    for t in enumerate_updown(4, None)
        .into_iter()
        .filter(UpdownTableau::is_standard)
    {
        assert!(diagonal_stats(&t).d_prime.is_empty());
    }
}

#[test]
fn g_matches_recount_from_boxes() {
    // Recompute d_k from the multiset of added boxes and compare.
    for t in enumerate_updown(5, None) {
        let s = diagonal_stats(&t);
        for k in -5..=5 {
            let adds = t
                .steps()
                .iter()
                .filter(|st| st.added && st.cell.diagonal() == k)
                .count() as i64;
            let rems = t
                .steps()
                .iter()
                .filter(|st| !st.added && st.cell.diagonal() == k)
                .count() as i64;
            assert_eq!((s.d(k), s.d_prime(k)), (adds, rems));
            let g = i64::from(k == 0) + s.d(k - 1) + s.d(k + 1) - 2 * s.d(k);
            assert_eq!(s.g(k), g);
        }
    }
}

#[test]
fn exponent_examples() {
    assert_eq!(exponents(&tab("[1];[]")), vec![0, 1]);
    assert_eq!(exponents(&tab("[1];[2]")), vec![0, 0]);
    for t in enumerate_updown(5, None)
        .into_iter()
        .filter(UpdownTableau::is_standard)
    {
        assert!(exponents(&t).iter().all(|&p| p == 0), "{t}");
    }
}

#[test]
fn h_examples() {
    let one = tab("[1]");
    assert_eq!(
        h_constant(&one, RemovalPrefactor::SixOmega).unwrap(),
        OmegaRatFunc::one()
    );
    let expected = &lin((2, 1), (8, 1)) / &lin((1, 1), (2, 1));
    assert_eq!(
        h_constant(&tab("[1];[2]"), RemovalPrefactor::SixOmega).unwrap(),
        expected
    );
    assert_eq!(standard_fusion_constant(&part(&[2])), expected);
}

#[test]
fn h_of_standard_tableau_is_hook_ratio_product() {
    for n in 1..=5 {
        for t in enumerate_updown(n, None)
            .into_iter()
            .filter(UpdownTableau::is_standard)
        {
            let sigma = t.classical_contents().unwrap();
            let mut h = OmegaRatFunc::one();
            for r in 2..=n {
                let (now, before) = (t.shape_at(r), t.shape_at(r - 1));
                let ratio = OmegaRatFunc::constant(BigRational::new(
                    now.hook_product(),
                    before.hook_product(),
                ));
                let s = sigma[r - 1];
                h = &(&h * &ratio) * &(&lin((1, 1), (4 * s, 1)) / &lin((1, 1), (2 * s, 1)));
            }
            assert_eq!(
                h_constant(&t, RemovalPrefactor::SixOmega).unwrap(),
                h,
                "{t}"
            );
            // the hook-ratio product telescopes to the closed form
            assert_eq!(standard_fusion_constant(t.shape()), h, "{t}");
        }
    }
}

#[test]
fn hooks_and_content_polynomials() {
    assert_eq!(part(&[2, 1]).hook_product(), 3.into());
    let z = OmegaRatFunc::omega();
    assert_eq!(
        part(&[2]).content_polynomial(&z),
        &z * &(&z + &OmegaRatFunc::one())
    );
}

#[test]
fn stats_record_serializes() {
    let st = TableauStats::compute(&tab("[1];[1,1];[1]")).unwrap();
    assert_eq!(st.steps.len(), 2);
    let v = serde_json::to_value(&st).unwrap();
    assert_eq!(v["tableau"], "[1];[1,1];[1]");
    assert_eq!(v["exponents"], serde_json::json!([0, 0, 1]));
}
