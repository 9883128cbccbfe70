//! Acceptance suite. One test per criterion; each prints a PASS line with
//! the measured evidence, and every tolerance is pinned here in code.
//!
//! All thresholds are exact (zero tolerance) except where a criterion
//! explicitly names one: the float-oracle agreement bound (1e-10) and the
//! wall-clock budgets (5 s catalog, 100 ms largest check, 60 s generator
//! sweep).
//!
//! One check is expected to stay red: `criterion_6_never_tight_claim`
//! asserts, verbatim, that the one-third staircase family is never a tight
//! frame across its documented range. Exact arithmetic refutes that claim at
//! N=3 — the four staircase lines there have frame operator (4/3)·I₃, and
//! any four equiangular lines at 1/3 spanning ℝ³ are forced tight — so the
//! faithful test fails at that single size and the failure message carries
//! the counterexample. See README.md ("Known red acceptance check").

use std::process::Command;
use std::time::Instant;

use equiline::catalog;
use equiline::construct;
use equiline::exact::{Rational, Surd};
use equiline::frames::{self, NeumannStatus, Status};
use equiline::LineSet;

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Independent floating-point Gram oracle (entries converted first, Gram
/// computed purely in f64).
fn float_gram(ls: &LineSet) -> Vec<Vec<f64>> {
    let rows: Vec<Vec<f64>> = ls
        .rows()
        .map(|r| r.iter().map(Surd::to_f64).collect())
        .collect();
    rows.iter()
        .map(|a| {
            rows.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

fn assert_oracle_agreement(ls: &LineSet, what: &str) {
    let float = float_gram(ls);
    let exact = frames::gram_matrix(ls);
    for (i, row) in exact.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            assert!(
                (e.to_f64() - float[i][j]).abs() <= 1e-10,
                "{what}: float oracle disagrees at ({i},{j})"
            );
        }
    }
}

#[test]
fn criterion_1_catalog_soundness() {
    let start = Instant::now();
    for entry in catalog::entries() {
        if let Some(corrected) = &entry.corrected {
            let report = frames::verify_equiangular(corrected);
            assert!(
                entry.claim_holds(corrected, &report),
                "{}: corrected variant fails its claim",
                entry.id
            );
            assert_eq!(corrected.m(), entry.claimed_m, "{}", entry.id);
            assert_eq!(corrected.n(), entry.claimed_n, "{}", entry.id);
        }
    }
    let reports = catalog::verify_all();
    let total = start.elapsed();
    assert!(
        total.as_secs_f64() < 5.0,
        "catalog verification took {total:?}, budget is 5 s"
    );

    // the largest single check: 28 lines in R^7, 378 pairs
    let big = &catalog::get("III.B.9").unwrap().as_printed;
    let t = Instant::now();
    let rep = frames::verify_equiangular(big);
    let largest = t.elapsed();
    assert_eq!(rep.status, Status::Equiangular);
    assert!(
        largest.as_millis() < 100,
        "28×7 verification took {largest:?}, budget is 100 ms"
    );

    // and the CLI gate itself exits 0
    let out = Command::new(env!("CARGO_BIN_EXE_equiline"))
        .args(["catalog", "verify-all"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "catalog verify-all must exit 0");

    println!(
        "criterion 1: PASS — {} entries verified in {total:.2?}, largest check {largest:.2?}, verify-all exit 0",
        reports.len()
    );
}

#[test]
fn criterion_2_desk_scale_maxima() {
    let expected: [(&str, usize, usize, Surd); 6] = [
        ("I", 3, 2, Surd::ratio(1, 2)),
        ("II", 6, 3, Surd::radical(1, 5, 5).unwrap()),
        ("III.B.4", 10, 5, Surd::ratio(1, 3)),
        ("III.B.7", 16, 6, Surd::ratio(1, 3)),
        ("III.B.9", 28, 7, Surd::ratio(1, 3)),
        ("IV.B.3", 36, 15, Surd::ratio(1, 5)),
    ];
    for (id, m, n, angle) in &expected {
        let entry = catalog::get(id).unwrap();
        let ls = entry.best();
        assert_eq!((ls.m(), ls.n()), (*m, *n), "{id}");
        let rep = frames::verify_equiangular(ls);
        assert_eq!(rep.status, Status::Equiangular, "{id}");
        assert_eq!(rep.common_angle.as_ref(), Some(angle), "{id}");
    }
    println!("criterion 2: PASS — M = 3, 6, 10, 16, 28, 36 reproduced at N = 2, 3, 5, 6, 7, 15");
}

#[test]
fn criterion_3_welch_tightness_equivalence() {
    let mut checked = 0usize;
    for reports in catalog::verify_all() {
        for rep in std::iter::once(&reports.as_printed).chain(reports.corrected.as_ref()) {
            if rep.status == Status::Equiangular && rep.m >= 2 {
                assert_eq!(
                    rep.welch_equality, rep.is_tight,
                    "{}: Welch equality and tightness disagree",
                    reports.id
                );
                checked += 1;
            }
        }
    }
    let bounds: [(&str, Rational); 5] = [
        ("I", rational(3, 2)),
        ("II", rational(2, 1)),
        ("III.B.4", rational(2, 1)),
        ("III.B.7", rational(8, 3)),
        ("III.B.9", rational(4, 1)),
    ];
    for (id, bound) in &bounds {
        let rep = frames::verify_equiangular(catalog::get(id).unwrap().best());
        assert!(rep.is_tight && rep.welch_equality, "{id}");
        assert_eq!(rep.frame_bound.as_ref(), Some(bound), "{id}");
    }
    println!(
        "criterion 3: PASS — equivalence on {checked} verified variants; ETF bounds 3/2, 2, 2, 8/3, 4 exact"
    );
}

#[test]
fn criterion_4_gerzon_and_neumann() {
    let mut checked = 0usize;
    let mut check = |what: String, ls: &LineSet| {
        let rep = frames::verify_equiangular(ls);
        if rep.status == Status::Equiangular {
            assert!(rep.gerzon_slack >= 0, "{what}: count bound violated");
            assert_ne!(
                rep.neumann_status,
                NeumannStatus::Violation,
                "{what}: parity violated"
            );
            checked += 1;
        }
    };
    for entry in catalog::entries() {
        check(format!("{} as printed", entry.id), &entry.as_printed);
        if let Some(c) = &entry.corrected {
            check(format!("{} corrected", entry.id), c);
        }
    }
    for n in 2..=50 {
        check(format!("one_third({n})"), &construct::family_one_third(n).unwrap());
    }
    for n in 3..=50 {
        check(format!("one_fifth_a({n})"), &construct::family_one_fifth_a(n).unwrap());
        check(format!("one_fifth_b({n})"), &construct::family_one_fifth_b(n).unwrap());
    }
    for n in 1..=30 {
        check(format!("simplex({n})"), &construct::simplex(n).unwrap());
    }
    for k in 1..=20 {
        check(
            format!("three_n_plus_one({k})"),
            &construct::family_three_n_plus_one(k).unwrap(),
        );
    }
    for n in 3..=40 {
        check(format!("two_angle({n})"), &construct::two_angle(n).unwrap());
    }
    println!("criterion 4: PASS — bound and parity hold on {checked} verified sets");
}

#[test]
fn criterion_5_anomaly_detection() {
    // duplicated line pair in the 16-line page
    let b8 = &catalog::get("III.B.8").unwrap().as_printed;
    let rep = frames::verify_equiangular(b8);
    assert_eq!(rep.status, Status::ParallelLines);
    assert_eq!((rep.offending_pairs[0].i, rep.offending_pairs[0].j), (13, 15));
    let g = float_gram(b8);
    assert!((g[12][14].abs() - 1.0).abs() <= 1e-10);
    assert_oracle_agreement(b8, "III.B.8");

    // a 1/3-headed block that actually sits at 1/5
    let a4 = &catalog::get("III.A.4").unwrap().as_printed;
    let rep = frames::verify_equiangular(a4);
    assert_eq!(rep.status, Status::Equiangular);
    assert_eq!(rep.common_angle, Some(Surd::ratio(1, 5)));
    let g = float_gram(a4);
    assert!((g[0][1].abs() - 0.2).abs() <= 1e-10);
    assert_oracle_agreement(a4, "III.A.4");

    // the 1/7-headed page whose rows meet at 1/5
    let va2 = &catalog::get("V.A.2").unwrap().as_printed;
    let rep = frames::verify_equiangular(va2);
    assert_eq!(rep.common_angle, Some(Surd::ratio(1, 5)));
    let g = float_gram(va2);
    assert!((g[0][1].abs() - 0.2).abs() <= 1e-10);
    assert_oracle_agreement(va2, "V.A.2");

    // the chart carrying a √(2/3) cell where √(2/5) is forced
    let b3 = &catalog::get("IV.B.3").unwrap().as_printed;
    let rep = frames::verify_equiangular(b3);
    assert_eq!(rep.status, Status::NotUnitNorm);
    let bad_rows: Vec<usize> = rep.offending_pairs.iter().map(|p| p.i).collect();
    assert_eq!(bad_rows, vec![17, 18, 19, 20]);
    assert_eq!(rep.offending_pairs[0].value, Surd::ratio(19, 15));
    let g = float_gram(b3);
    for r in 16..20 {
        assert!((g[r][r] - 19.0 / 15.0).abs() <= 1e-10);
    }
    assert_oracle_agreement(b3, "IV.B.3");

    println!(
        "criterion 5: PASS — III.B.8 pair (13,15), III.A.4 at 1/5, V.A.2 at 1/5, IV.B.3 norm \
         defect all flagged and confirmed by the float oracle at 1e-10"
    );
}

#[test]
fn criterion_6_generator_properties() {
    let start = Instant::now();
    let third = Surd::ratio(1, 3);
    let fifth = Surd::ratio(1, 5);
    let inv_sqrt5 = Surd::radical(1, 5, 5).unwrap();

    for n in 2..=50 {
        let ls = construct::family_one_third(n).unwrap();
        assert_eq!((ls.m(), ls.n()), (2 * (n - 1), n));
        let rep = frames::verify_equiangular(&ls);
        assert_eq!(rep.status, Status::Equiangular, "one_third({n})");
        assert_eq!(rep.common_angle.as_ref(), Some(&third));
        assert_eq!(rep.rank, n, "one_third({n}) spans");
    }
    for n in 3..=50 {
        for (name, ls) in [
            ("a", construct::family_one_fifth_a(n).unwrap()),
            ("b", construct::family_one_fifth_b(n).unwrap()),
        ] {
            assert_eq!((ls.m(), ls.n()), (n - 1, n), "one_fifth_{name}({n})");
            let rep = frames::verify_equiangular(&ls);
            assert_eq!(rep.status, Status::Equiangular, "one_fifth_{name}({n})");
            assert_eq!(rep.common_angle.as_ref(), Some(&fifth));
            assert_eq!(rep.rank, n - 1);
        }
    }
    for n in 1..=30 {
        let ls = construct::simplex(n).unwrap();
        assert_eq!((ls.m(), ls.n()), (n + 1, n + 1));
        let rep = frames::verify_equiangular(&ls);
        assert_eq!(rep.rank, n, "simplex({n}) spans a hyperplane");
        if n == 1 {
            assert_eq!(rep.status, Status::ParallelLines);
        } else {
            assert_eq!(rep.status, Status::Equiangular, "simplex({n})");
            assert_eq!(rep.common_angle, Some(Surd::ratio(1, n as i64)));
            assert!(rep.is_tight && rep.welch_equality);
        }
    }
    for k in 1..=20 {
        let ls = construct::family_three_n_plus_one(k).unwrap();
        assert_eq!((ls.m(), ls.n()), (4 * k, 3 * k + 1));
        let rep = frames::verify_equiangular(&ls);
        assert_eq!(rep.status, Status::Equiangular, "three_n_plus_one({k})");
        assert_eq!(rep.common_angle.as_ref(), Some(&fifth));
        assert_eq!(rep.rank, 3 * k + 1);
    }
    for n in 3..=40 {
        let ls = construct::two_angle(n).unwrap();
        assert_eq!((ls.m(), ls.n()), (2 * n, n));
        let rep = frames::verify_equiangular(&ls);
        assert_eq!(rep.rank, n, "two_angle({n}) spans");
        for e in &rep.angle_spectrum {
            assert!(
                e.value.is_zero() || e.value == inv_sqrt5,
                "two_angle({n}): stray angle {}",
                e.value
            );
        }
        let (plus, minus) = construct::split_circulant(n).unwrap();
        assert!(construct::is_circulant(&plus) && construct::is_circulant(&minus));
        let mut union: Vec<String> = plus
            .rows()
            .chain(minus.rows())
            .map(|r| format!("{r:?}"))
            .collect();
        let mut all: Vec<String> = ls.rows().map(|r| format!("{r:?}")).collect();
        union.sort();
        all.sort();
        assert_eq!(union, all, "two_angle({n}) splits into the two halves");
    }
    let total = start.elapsed();
    assert!(
        total.as_secs_f64() < 60.0,
        "generator sweep took {total:?}, budget is 60 s"
    );
    println!("criterion 6 (counts/angles/rank): PASS — documented ranges swept in {total:.2?}");
}

/// The acceptance text requires the family's "never a tight frame" claim to
/// hold exactly across the documented range. Exact computation refutes the
/// claim at N=3 (and at no other size); this test states the criterion
/// verbatim and is therefore expected to fail. The counterexample is forced:
/// see the module docs and README.
#[test]
fn criterion_6_never_tight_claim() {
    let mut tight_sizes = Vec::new();
    for n in 2..=50usize {
        let ls = construct::family_one_third(n).unwrap();
        let (tight, bound) = frames::is_tight(&ls);
        if tight {
            // confirmed independently: the float-oracle Gram of the N=3
            // instance is (4/3)-diagonal to machine precision
            let g = float_gram(&ls);
            let s: f64 = g.iter().enumerate().map(|(i, r)| r[i]).sum::<f64>() / ls.n() as f64;
            tight_sizes.push((n, bound.expect("bound for tight"), s));
        }
    }
    assert!(
        tight_sizes.is_empty(),
        "the 'never a tight frame' claim fails: one_third({}) has frame operator ({})·I \
         (float check: mean diagonal {:.6}); every four-line equiangular set at 1/3 \
         spanning R^3 is necessarily tight, so no construction can satisfy this criterion",
        tight_sizes[0].0,
        tight_sizes[0].1,
        tight_sizes[0].2,
    );
    println!("criterion 6 (never tight): PASS");
}

#[test]
fn criterion_7_circulant_unitaries() {
    let start = Instant::now();
    let is_symmetric = |u: &LineSet| {
        (0..u.m()).all(|i| (0..u.n()).all(|j| u.entry(i, j) == u.entry(j, i)))
    };
    let is_involution = |u: &LineSet| {
        let n = u.m();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut acc = Surd::zero();
                for k in 0..n {
                    acc = acc + u.entry(i, k) * u.entry(k, j);
                }
                acc == if i == j { Surd::one() } else { Surd::zero() }
            })
        })
    };
    for n in 3..=64 {
        let u = construct::circ_sa_n(n).unwrap();
        assert!(is_symmetric(&u), "circ_sa_n({n}) symmetric");
        assert!(is_involution(&u), "circ_sa_n({n})² = I");
        let s = construct::circ_shift(n).unwrap();
        assert_eq!(frames::is_unitary(&s), Ok(true), "circ_shift({n})·Uᵀ = I");
    }
    for n in 2..=32 {
        let u = construct::circ_sa_2n(n).unwrap();
        assert_eq!(u.m(), 2 * n);
        assert!(is_symmetric(&u), "circ_sa_2n({n}) symmetric");
        assert!(is_involution(&u), "circ_sa_2n({n})² = I");
    }
    println!(
        "criterion 7: PASS — circulant unitaries exact up to 64×64 in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_composition() {
    let entry = catalog::get("III.B.11").unwrap();
    let plan = entry.plan.as_ref().expect("builtin plan");
    for d in construct::validate_plan(plan) {
        if let construct::Diagnostic::SharedCoordinates { coordinates, item_a, item_b } = d {
            assert_eq!(
                coordinates.len(),
                1,
                "items {item_a},{item_b} must share exactly one coordinate"
            );
        } else {
            panic!("unexpected structural diagnostic: {d:?}");
        }
    }
    let composed = construct::apply_plan(plan, |b| catalog::resolve_block(b)).unwrap();
    let report = frames::verify_equiangular(&composed);
    assert_eq!(report.status, Status::Equiangular);
    assert_eq!((report.m, report.n), (28, 7));
    assert!(report.is_tight && report.welch_equality);
    assert_eq!(report.frame_bound, Some(rational(4, 1)));
    assert_eq!(report, frames::verify_equiangular(&entry.as_printed));
    println!(
        "criterion 8: PASS — plan composes a 28-line ETF in R^7 (bound 4), report identical to III.B.11"
    );
}

#[test]
fn criterion_9_exact_kernel_properties() {
    // deterministic xorshift so the 10^4 cases are reproducible
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let radicands = [1u64, 2, 3, 5, 6, 7, 10, 30];
    let mut random_surd = {
        let next = &mut next;
        move || {
            let terms = (next() % 5) as usize;
            let mut acc = Surd::zero();
            for _ in 0..terms {
                let rad = radicands[(next() % 8) as usize];
                let num = (next() % 19) as i64 - 9;
                let den = (next() % 9) as i64 + 1;
                if num != 0 {
                    acc = acc + Surd::radical(num, den, rad).unwrap();
                }
            }
            acc
        }
    };
    for case in 0..10_000 {
        let (a, b, c) = (random_surd(), random_surd(), random_surd());
        assert_eq!(&a + &b, &b + &a, "case {case}");
        assert_eq!(&a * &b, &b * &a, "case {case}");
        assert_eq!((&a + &b) + &c, &a + (&b + &c), "case {case}");
        assert_eq!((&a * &b) * &c, &a * (&b * &c), "case {case}");
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c, "case {case}");
    }

    let mut next2 = {
        let mut s = 0xD1B5_4A32_D192_ED03u64;
        move || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            s
        }
    };
    for case in 0..1_000 {
        let num = (next2() % 100_000) as i64;
        let den = (next2() % 999) as i64 + 1;
        let q = rational(num, den);
        let root = Surd::sqrt_rational(&q).unwrap();
        assert_eq!(root.square().as_rational(), Some(q), "case {case}");
    }

    // No floating-point participates in any verdict: every check above and
    // every verifier verdict flows through exact term maps; f64 appears only
    // in the export path (to_f64 / CSV), which the oracle tests compare
    // against, never the other way around.
    println!(
        "criterion 9: PASS — 10⁴ ring-axiom cases, 10³ sqrt round-trips, verdicts are float-free by construction"
    );
}
