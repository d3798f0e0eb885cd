//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS line with its measured runtime (run with `--nocapture` to see them).
//!
//! The guarantees cover: regeneration of the known relation sets for the
//! three sample quivers, set-level agreement between the relation solutions
//! and exhaustive subrepresentation enumeration (including randomized
//! instances), the jumping Euler characteristic, the degree-6 del Pezzo
//! count, the non-polynomial elliptic count with its chart cubic, the
//! classical specialization of zeroth-order relations, higher-order
//! soundness, enumeration integrity, and bytewise CLI determinism.

use num_bigint::BigInt;
use num_rational::BigRational;
use qpr_core::samples;
use qpr_core::{
    all_relations, chart_basis, classical_relations, compare_sets, enumerate_subspaces,
    euler_characteristic, fit_counting_polynomial, gaussian_binomial, higher_order_relation,
    k_subsets, pluecker_of_subspace, subrep_points, variable_assignment, variety_points,
    DimensionVector, FitError, IndexSubset, LabeledRelation, Monomial, Path, PlueckerVariable,
    PrimeField, Quiver, RelationLabel, RelationPolynomial, Representation, Scalar, ScalarMatrix,
    SubspaceRREF, VertexIdx,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn no_params() -> BTreeMap<String, BigRational> {
    BTreeMap::new()
}

fn lam(v: i64) -> BTreeMap<String, BigRational> {
    let mut m = BTreeMap::new();
    m.insert(
        "lambda".to_string(),
        BigRational::from_integer(BigInt::from(v)),
    );
    m
}

fn subset(vertex: usize, members: &[u32]) -> IndexSubset {
    IndexSubset::new(VertexIdx(vertex), members.to_vec()).unwrap()
}

fn var(vertex: usize, members: &[u32]) -> PlueckerVariable {
    PlueckerVariable::new(subset(vertex, members))
}

fn pair(a: PlueckerVariable, b: PlueckerVariable, coeff: i64) -> (Monomial, Scalar) {
    (Monomial::from_vars(vec![a, b]), Scalar::from_integer(coeff))
}

fn report(criterion: u32, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} overran its budget: {elapsed:?} > {budget:?}"
    );
    println!("criterion {criterion}: PASS ({elapsed:?}) — {what}");
}

fn equal_up_to_sign(a: &RelationPolynomial, b: &RelationPolynomial) -> bool {
    a == b || *a == b.neg()
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn qpr() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qpr"))
}

/// Criterion 1: the three del Pezzo relations are regenerated; E(a) and E(b)
/// match the reference forms spelled out below up to overall sign, while for
/// E(c) the direct expansion gives *equal* relative signs on the two terms
/// (+- (Delta9 Delta12 + Delta8 Delta23)), and the finite-field oracle backs
/// that variant: the alternative with a relative minus sign cuts out a
/// different point set over F_3.
#[test]
fn criterion_01_del_pezzo_relation_regeneration() {
    let started = Instant::now();
    let (rep, sub) = samples::del_pezzo();
    let rels = all_relations(&rep, &sub, 1, true).unwrap();
    assert_eq!(rels.len(), 3);

    // vertex order: z=0, x=1, y=2, w=3; globals z:1-3, x:4-5, y:6-7, w:8-9
    let by_arrow = |id: &str| -> &LabeledRelation {
        rels.relations()
            .iter()
            .find(|r| match &r.label {
                RelationLabel::Path { path, .. } => path.label(rep.quiver()) == id,
                _ => false,
            })
            .unwrap()
    };
    let display_a = RelationPolynomial::from_terms(vec![
        pair(var(1, &[2]), var(0, &[1, 3]), 1),  // Delta5 * Delta13
        pair(var(1, &[1]), var(0, &[2, 3]), -1), // Delta4 * Delta23
    ]);
    let display_b = RelationPolynomial::from_terms(vec![
        pair(var(2, &[1]), var(0, &[1, 3]), 1),  // Delta6 * Delta13
        pair(var(2, &[2]), var(0, &[1, 2]), -1), // Delta7 * Delta12
    ]);
    assert!(equal_up_to_sign(&by_arrow("a").poly, &display_a));
    assert!(equal_up_to_sign(&by_arrow("b").poly, &display_b));

    // direct expansion of E(c): equal relative signs
    let expansion_c = RelationPolynomial::from_terms(vec![
        pair(var(3, &[2]), var(0, &[1, 2]), 1), // Delta9 * Delta12
        pair(var(3, &[1]), var(0, &[2, 3]), 1), // Delta8 * Delta23
    ]);
    assert!(equal_up_to_sign(&by_arrow("c").poly, &expansion_c));

    // the oracle confirms the expansion variant over F_2 and F_3
    for p in [2u64, 3] {
        let var_pts = variety_points(&rep, &rels, &no_params(), fp(p), 1).unwrap();
        let sub_pts = subrep_points(&rep, &sub, &no_params(), fp(p), 1).unwrap();
        assert!(compare_sets(&var_pts, &sub_pts).unwrap().equal());
    }
    // ... and rejects the relative-minus variant: over F_2 the signs collapse
    // (so it passes there), but over F_3 the point sets differ.
    let variant_c = RelationPolynomial::from_terms(vec![
        pair(var(3, &[2]), var(0, &[1, 2]), 1),  // Delta9 * Delta12
        pair(var(3, &[1]), var(0, &[2, 3]), -1), // - Delta8 * Delta23
    ]);
    let mut swapped: Vec<LabeledRelation> = rels.relations().to_vec();
    for r in &mut swapped {
        if let RelationLabel::Path { path, .. } = &r.label {
            if path.label(rep.quiver()) == "c" {
                r.poly = variant_c.clone();
            }
        }
    }
    let swapped = rels.with_relations(swapped);
    let var2 = variety_points(&rep, &swapped, &no_params(), fp(2), 1).unwrap();
    let sub2 = subrep_points(&rep, &sub, &no_params(), fp(2), 1).unwrap();
    assert!(compare_sets(&var2, &sub2).unwrap().equal());
    let var3 = variety_points(&rep, &swapped, &no_params(), fp(3), 1).unwrap();
    let sub3 = subrep_points(&rep, &sub, &no_params(), fp(3), 1).unwrap();
    assert!(!compare_sets(&var3, &sub3).unwrap().equal());

    // the CLI prints exactly three relations with global labels
    let out = qpr()
        .args(["relations", &fixture("del_pezzo.quiver")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("E(")).count(), 3);

    report(
        1,
        "del Pezzo relations regenerate; oracle fixes the E(c) sign variant",
        started,
        Duration::from_secs(1),
    );
}

/// Criterion 2: relation counts are 1 for the jumping family, 4 for the
/// elliptic sample, and the classical generator is silent on the del Pezzo
/// sample's Grassmannian factors.
#[test]
fn criterion_02_relation_counts() {
    let started = Instant::now();
    let (rep, sub) = samples::jumping_family();
    assert_eq!(all_relations(&rep, &sub, 1, false).unwrap().len(), 1);

    let (rep, sub) = samples::elliptic_lines();
    assert_eq!(all_relations(&rep, &sub, 1, false).unwrap().len(), 4);

    let (rep, sub) = samples::del_pezzo();
    for v in 0..rep.quiver().vertex_count() {
        assert!(classical_relations(&rep, &sub, VertexIdx(v))
            .unwrap()
            .is_empty());
    }
    // with classical generation enabled the count is still 3
    assert_eq!(all_relations(&rep, &sub, 1, true).unwrap().len(), 3);

    report(
        2,
        "relation counts: 1 (jumping family), 4 (elliptic), no classical (del Pezzo)",
        started,
        Duration::from_secs(1),
    );
}

struct RandomInstance {
    rep: Representation,
    sub: DimensionVector,
}

/// Random quiver with at most 3 arrows (loops and parallels allowed), total
/// dimension at most 8, and a candidate product small enough to enumerate.
fn random_instance(rng: &mut ChaCha8Rng) -> RandomInstance {
    loop {
        let nv = rng.gen_range(1..=3usize);
        let dims: Vec<usize> = (0..nv).map(|_| rng.gen_range(1..=4)).collect();
        if dims.iter().sum::<usize>() > 8 {
            continue;
        }
        let names: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
        let na = rng.gen_range(1..=3usize);
        let arrows: Vec<(String, String, String)> = (0..na)
            .map(|k| {
                (
                    format!("a{k}"),
                    names[rng.gen_range(0..nv)].clone(),
                    names[rng.gen_range(0..nv)].clone(),
                )
            })
            .collect();
        let quiver = Quiver::new(names, arrows).unwrap();
        let matrices: Vec<ScalarMatrix> = quiver
            .arrows()
            .map(|(_, a)| {
                let rows: Vec<Vec<i64>> = (0..dims[a.target.0])
                    .map(|_| {
                        (0..dims[a.source.0])
                            .map(|_| rng.gen_range(-2..=2))
                            .collect()
                    })
                    .collect();
                ScalarMatrix::from_integers(rows)
            })
            .collect();
        let sub: Vec<usize> = dims.iter().map(|&d| rng.gen_range(0..=d)).collect();
        // keep the F_3 candidate product enumerable at desk scale
        let total: u128 = dims
            .iter()
            .zip(&sub)
            .map(|(&d, &e)| gaussian_binomial(d, e, 3))
            .product();
        if total > 30_000 {
            continue;
        }
        let rep = Representation::new(quiver, DimensionVector::new(dims), matrices, vec![]);
        let sub = DimensionVector::new(sub);
        // require a nonempty relation set so the check has content
        if all_relations(&rep, &sub, 1, false).unwrap().is_empty() {
            continue;
        }
        return RandomInstance { rep, sub };
    }
}

/// Criterion 3: the relation solution set equals the enumerated
/// subrepresentation set, exactly, for the three samples (the family at
/// lambda in {0,1,2}) and 25 randomized instances, over p in {2,3}.
#[test]
fn criterion_03_oracle_equivalence() {
    let started = Instant::now();
    let check = |rep: &Representation,
                 sub: &DimensionVector,
                 params: &BTreeMap<String, BigRational>,
                 what: &str| {
        let rels = all_relations(rep, sub, 1, true).unwrap();
        for p in [2u64, 3] {
            let var_pts = variety_points(rep, &rels, params, fp(p), 1).unwrap();
            let sub_pts = subrep_points(rep, sub, params, fp(p), 1).unwrap();
            let report = compare_sets(&var_pts, &sub_pts).unwrap();
            assert!(
                report.equal(),
                "{what} over F_{p}: {} missing, {} extra",
                report.missing.len(),
                report.extra.len()
            );
        }
    };

    let (rep, sub) = samples::del_pezzo();
    check(&rep, &sub, &no_params(), "del_pezzo");
    let (rep, sub) = samples::jumping_family();
    for l in [0, 1, 2] {
        check(&rep, &sub, &lam(l), &format!("jumping_family lambda={l}"));
    }
    let (rep, sub) = samples::elliptic_lines();
    check(&rep, &sub, &no_params(), "elliptic_lines");

    let mut rng = ChaCha8Rng::seed_from_u64(20_260_811);
    for k in 0..25 {
        let inst = random_instance(&mut rng);
        check(
            &inst.rep,
            &inst.sub,
            &no_params(),
            &format!("random instance {k}"),
        );
    }

    report(
        3,
        "relation solutions = enumerated subrepresentations on samples + 25 random instances",
        started,
        Duration::from_secs(60),
    );
}

/// Criterion 4: the family's counting polynomials are q+1 at lambda=1
/// (Euler characteristic 2) and 2q+1 at lambda=0 (Euler characteristic 3).
#[test]
fn criterion_04_jumping_euler_characteristic() {
    let started = Instant::now();
    let (rep, sub) = samples::jumping_family();
    let counts = |params: &BTreeMap<String, BigRational>, primes: &[u64]| -> Vec<(u64, u64)> {
        primes
            .iter()
            .map(|&p| {
                let pts = subrep_points(&rep, &sub, params, fp(p), 1).unwrap();
                (p, pts.len() as u64)
            })
            .collect()
    };
    let cap = 2; // sum of e(d-e) over the three vertices

    let smooth = counts(&lam(1), &[2, 3, 5]);
    let held_out = counts(&lam(1), &[7]);
    let cp = fit_counting_polynomial(&smooth, &held_out, Some(cap)).unwrap();
    assert_eq!(cp.render(), "q + 1");
    assert_eq!(euler_characteristic(&cp).unwrap(), 2);

    let special = counts(&lam(0), &[2, 3, 5]);
    let held_out = counts(&lam(0), &[7]);
    let cp = fit_counting_polynomial(&special, &held_out, Some(cap)).unwrap();
    assert_eq!(cp.render(), "2*q + 1");
    assert_eq!(euler_characteristic(&cp).unwrap(), 3);

    report(
        4,
        "Euler characteristic jumps from 2 (lambda=1, q+1) to 3 (lambda=0, 2q+1)",
        started,
        Duration::from_secs(5),
    );
}

/// Criterion 5: del Pezzo counts fitted at q in {2,3,5,7} validate at 11 and
/// give Euler characteristic 6, the degree of the surface.
#[test]
fn criterion_05_del_pezzo_counting_polynomial() {
    let started = Instant::now();
    let (rep, sub) = samples::del_pezzo();
    let count = |p: u64| -> (u64, u64) {
        let pts = subrep_points(&rep, &sub, &no_params(), fp(p), 1).unwrap();
        (p, pts.len() as u64)
    };
    let samples: Vec<(u64, u64)> = [2, 3, 5, 7].into_iter().map(count).collect();
    assert_eq!(samples, vec![(2, 13), (3, 22), (5, 46), (7, 78)]);
    let held_out = vec![count(11)];
    assert_eq!(held_out, vec![(11, 166)]);
    let cap = 5;
    let cp = fit_counting_polynomial(&samples, &held_out, Some(cap)).unwrap();
    assert_eq!(cp.render(), "q^2 + 4*q + 1");
    assert_eq!(euler_characteristic(&cp).unwrap(), 6);

    report(
        5,
        "del Pezzo counts fit q^2+4q+1, validated at 11, Euler characteristic 6",
        started,
        Duration::from_secs(30),
    );
}

/// Criterion 6: the elliptic sample's counts are not polynomial in q (the
/// fit fails held-out validation), and on the chart where Delta[3] and
/// Delta[5,6,7] are invertible every enumerated point satisfies the cubic
///
///   Delta2^2 Delta3 - Delta1^3 - Delta1 Delta3^2 = 0,
///
/// whose last sign is fixed by the oracle: the variant with +Delta1 Delta3^2
/// (a relative sign flip, matching the E(c)-style display discrepancy) is
/// violated by enumerated points over F_5.
#[test]
fn criterion_06_elliptic_component() {
    let started = Instant::now();
    let (rep, sub) = samples::elliptic_lines();
    let count = |p: u64| -> (u64, u64) {
        let pts = subrep_points(&rep, &sub, &no_params(), fp(p), 2).unwrap();
        (p, pts.len() as u64)
    };
    let samples: Vec<(u64, u64)> = [2, 3, 5, 7, 11, 13].into_iter().map(count).collect();
    assert_eq!(
        samples,
        vec![(2, 7), (3, 10), (5, 14), (7, 22), (11, 34), (13, 46)]
    );
    let held_out = vec![count(17)];
    assert_eq!(held_out, vec![(17, 50)]);
    match fit_counting_polynomial(&samples, &held_out, Some(5)) {
        Err(FitError::NonPolynomialCount { prime: 17, .. }) => {}
        other => panic!("expected a non-polynomial-count failure, got {other:?}"),
    }

    // the cubic count at q=5 deviates from q+1 (trace of Frobenius 2), which
    // is what makes a polynomial count impossible
    let f5 = fp(5);
    let mut cubic_points = 0;
    for s in enumerate_subspaces(f5, 3, 1).unwrap() {
        let c = pluecker_of_subspace(&s, VertexIdx(0));
        let (x, y, z) = (c.coords()[0], c.coords()[1], c.coords()[2]);
        let lhs = f5.sub(
            f5.sub(f5.mul(f5.mul(y, y), z), f5.mul(f5.mul(x, x), x)),
            f5.mul(x, f5.mul(z, z)),
        );
        if lhs == 0 {
            cubic_points += 1;
        }
    }
    assert_eq!(cubic_points, 4);
    assert_ne!(cubic_points, 5 + 1);

    // chart cubic check over p in {3,5,7}, plus the sign-flip counterexample
    let mut flipped_violated = false;
    for p in [3u64, 5, 7] {
        let field = fp(p);
        let pts = subrep_points(&rep, &sub, &no_params(), field, 2).unwrap();
        let mut chart_pts = 0;
        for point in &pts {
            let src = point.vector(VertexIdx(0));
            let dst = point.vector(VertexIdx(1));
            let d1 = src.get(&subset(0, &[1])).unwrap();
            let d2 = src.get(&subset(0, &[2])).unwrap();
            let d3 = src.get(&subset(0, &[3])).unwrap();
            let d567 = dst.get(&subset(1, &[2, 3, 4])).unwrap();
            if d3 == 0 || d567 == 0 {
                continue;
            }
            chart_pts += 1;
            let cube = |x: u64| field.mul(field.mul(x, x), x);
            let lhs = field.sub(
                field.sub(field.mul(field.mul(d2, d2), d3), cube(d1)),
                field.mul(d1, field.mul(d3, d3)),
            );
            assert_eq!(lhs, 0, "chart cubic fails at p={p}");
            let flipped = field.add(
                field.sub(field.mul(field.mul(d2, d2), d3), cube(d1)),
                field.mul(d1, field.mul(d3, d3)),
            );
            if flipped != 0 {
                flipped_violated = true;
            }
        }
        assert!(chart_pts > 0, "no chart points over F_{p}");
    }
    assert!(
        flipped_violated,
        "the +Delta1*Delta3^2 sign variant should fail on some chart point"
    );

    report(
        6,
        "elliptic counts are non-polynomial; chart cubic holds with oracle-fixed signs",
        started,
        Duration::from_secs(30),
    );
}

/// Criterion 7: on a single 4-dimensional vertex with e = 2, the trivial-path
/// relations deduplicate to exactly the classical quadric.
#[test]
fn criterion_07_zeroth_order_is_classical() {
    let started = Instant::now();
    let quiver = Quiver::new(vec!["p".into()], vec![]).unwrap();
    let rep = Representation::new(quiver, DimensionVector::new(vec![4]), vec![], vec![]);
    let sub = DimensionVector::new(vec![2]);
    let path = Path::trivial(VertexIdx(0));
    let mut deduped: Vec<RelationPolynomial> = Vec::new();
    for i in k_subsets(VertexIdx(0), 4, 1).unwrap() {
        for j in k_subsets(VertexIdx(0), 4, 3).unwrap() {
            let poly = higher_order_relation(&rep, &sub, &path, &i, &j).unwrap();
            if poly.is_zero() || deduped.iter().any(|q| q.proportional_eq(&poly)) {
                continue;
            }
            deduped.push(poly);
        }
    }
    assert_eq!(deduped.len(), 1);
    let classical = RelationPolynomial::from_terms(vec![
        pair(var(0, &[1, 2]), var(0, &[3, 4]), 1),
        pair(var(0, &[1, 3]), var(0, &[2, 4]), -1),
        pair(var(0, &[1, 4]), var(0, &[2, 3]), 1),
    ]);
    assert!(equal_up_to_sign(&deduped[0], &classical));

    report(
        7,
        "trivial-path relations on Gr(2,4) reduce to the classical quadric",
        started,
        Duration::from_secs(1),
    );
}

/// Criterion 8: over F_5 and every parameter value, each enumerated
/// subrepresentation point annihilates every relation of order up to 3.
#[test]
fn criterion_08_higher_order_soundness() {
    let started = Instant::now();
    let (rep, sub) = samples::jumping_family();
    let field = fp(5);
    for l in 0..5i64 {
        let params = lam(l);
        let rels = all_relations(&rep, &sub, 3, true).unwrap();
        let pts = subrep_points(&rep, &sub, &params, field, 1).unwrap();
        assert!(!pts.is_empty());
        for point in &pts {
            let assignment = variable_assignment(point);
            for r in rels.relations() {
                let value = r.poly.evaluate_mod(&assignment, &params, field).unwrap();
                assert_eq!(value, 0, "relation {:?} nonzero at lambda={l}", r.label);
            }
        }
    }

    report(
        8,
        "all subrep points of the family annihilate every relation of order <= 3",
        started,
        Duration::from_secs(10),
    );
}

/// Criterion 9: subspace enumeration counts match Gaussian binomials for all
/// p in {2,3,5}, d <= 5; the Plücker map is injective there; and chart_basis
/// round-trips 1000 random subspaces over F_5.
#[test]
fn criterion_09_enumeration_integrity() {
    let started = Instant::now();
    for p in [2u64, 3, 5] {
        let field = fp(p);
        for d in 0..=5usize {
            for e in 0..=d {
                let mut plueckers = std::collections::BTreeSet::new();
                let mut count: u128 = 0;
                for s in enumerate_subspaces(field, d, e).unwrap() {
                    count += 1;
                    assert!(
                        plueckers.insert(pluecker_of_subspace(&s, VertexIdx(0))),
                        "Plücker collision at (p,d,e)=({p},{d},{e})"
                    );
                }
                assert_eq!(count, gaussian_binomial(d, e, p), "count at ({p},{d},{e})");
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let field = fp(5);
    let mut cached: BTreeMap<(usize, usize), Vec<SubspaceRREF>> = BTreeMap::new();
    for _ in 0..1000 {
        let d = rng.gen_range(1..=5usize);
        let e = rng.gen_range(0..=d);
        let list = cached
            .entry((d, e))
            .or_insert_with(|| enumerate_subspaces(field, d, e).unwrap().collect());
        let s = &list[rng.gen_range(0..list.len())];
        let coords = pluecker_of_subspace(s, VertexIdx(0));
        // any chart with nonzero pivot coordinate must reconstruct s
        let pivots: Vec<IndexSubset> = k_subsets(VertexIdx(0), d, e)
            .unwrap()
            .into_iter()
            .filter(|i0| coords.get(i0).unwrap() != 0)
            .collect();
        let pivot = &pivots[rng.gen_range(0..pivots.len())];
        let basis = chart_basis(&coords, pivot).unwrap();
        let rebuilt = SubspaceRREF::from_spanning_rows(field, basis, d);
        assert_eq!(&rebuilt, s);
    }

    report(
        9,
        "Gaussian-binomial counts, Plücker injectivity, 1000 chart round-trips",
        started,
        Duration::from_secs(30),
    );
}

/// Criterion 10: `verify` and `relations` output is byte-identical across
/// single- and multi-worker runs.
#[test]
fn criterion_10_determinism_across_workers() {
    let started = Instant::now();
    let run = |args: &[&str]| -> Vec<u8> {
        let out = qpr().args(args).output().unwrap();
        assert!(
            out.status.success(),
            "qpr {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    let del_pezzo = fixture("del_pezzo.quiver");
    let jumping = fixture("jumping_family.quiver");

    let single = run(&["verify", &del_pezzo, "--primes", "2,3", "--threads", "1"]);
    let multi = run(&["verify", &del_pezzo, "--primes", "2,3", "--threads", "4"]);
    assert_eq!(single, multi);

    let single = run(&[
        "verify",
        &jumping,
        "--primes",
        "2,3,5",
        "--set",
        "lambda=1",
        "--threads",
        "1",
    ]);
    let multi = run(&[
        "verify",
        &jumping,
        "--primes",
        "2,3,5",
        "--set",
        "lambda=1",
        "--threads",
        "7",
    ]);
    assert_eq!(single, multi);

    let single = run(&["relations", &del_pezzo, "--order", "2", "--threads", "1"]);
    let multi = run(&["relations", &del_pezzo, "--order", "2", "--threads", "4"]);
    assert_eq!(single, multi);

    report(
        10,
        "verify/relations output is byte-identical for 1 and N workers",
        started,
        Duration::from_secs(30),
    );
}
