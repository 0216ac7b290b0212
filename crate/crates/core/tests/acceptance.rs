//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every expected value is pinned exactly; the stated wall-clock
//! budgets are asserted as upper bounds.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use dperm_core::cfrac::{classical_sequences, CfSpec, SequenceName};
use dperm_core::families::{build_polynomial, FamilyId};
use dperm_core::perm::class_counts;
use dperm_core::poly::{Poly, VarTable};
use dperm_core::verify::{run_check, CheckOptions, Status};

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: u64) -> Self {
        Criterion {
            name,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed();
        println!(
            "criterion {}: pass ({} ms, budget {} s)",
            self.name,
            elapsed.as_millis(),
            self.budget.as_secs()
        );
        assert!(
            elapsed <= self.budget,
            "criterion {} exceeded its {}-second budget ({} ms)",
            self.name,
            self.budget.as_secs(),
            elapsed.as_millis()
        );
    }
}

fn passing(id: &str, opts: &CheckOptions) {
    let c = run_check(id, opts).unwrap();
    assert_eq!(c.status, Status::Pass, "{id}: {:?}", c.details);
}

fn default_opts() -> CheckOptions {
    CheckOptions::default()
}

/// All-ones (or given) specialization of a family series, as integers.
fn sequence_of(family: FamilyId, n_max: usize, zeros: &[&str]) -> Vec<BigInt> {
    let mut vt = VarTable::new();
    let polys: Vec<Poly> = (0..=n_max)
        .map(|n| build_polynomial(family, n, &mut vt))
        .collect();
    let map: HashMap<usize, BigInt> = (0..vt.len())
        .map(|i| {
            let v = if zeros.contains(&vt.name(i)) {
                BigInt::from(0)
            } else {
                BigInt::from(1)
            };
            (i, v)
        })
        .collect();
    polys
        .iter()
        .map(|p| p.specialize(&map).as_constant().unwrap())
        .collect()
}

#[test]
fn criterion_01_sequence_reproduction() {
    let c = Criterion::new("1 (sequence reproduction)", 2);
    assert_eq!(
        classical_sequences(SequenceName::Genocchi, 7),
        ints(&[1, 1, 3, 17, 155, 2073, 38227, 929569])
    );
    assert_eq!(
        classical_sequences(SequenceName::Median, 7),
        ints(&[1, 1, 2, 8, 56, 608, 9440, 198272])
    );
    assert_eq!(
        classical_sequences(SequenceName::HFlat, 6),
        ints(&[1, 1, 5, 41, 493, 8161, 178469])
    );
    assert_eq!(
        classical_sequences(SequenceName::Euler, 9),
        ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936])
    );
    c.finish();
}

#[test]
fn criterion_02_class_count_table() {
    let c = Criterion::new("2 (class-count table)", 30);
    let table: [(u64, u64, u64, u64, u64, u64); 7] = [
        (0, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 2),
        (1, 2, 3, 4, 5, 8),
        (3, 8, 17, 26, 41, 56),
        (17, 56, 155, 254, 493, 608),
        (155, 608, 2073, 3538, 8161, 9440),
        (2073, 9440, 38227, 67014, 178469, 198272),
    ];
    for (n, want) in table.iter().enumerate() {
        assert_eq!(class_counts(n).as_tuple(), *want, "row n={n}");
    }
    passing("classcounts", &default_opts());
    c.finish();
}

#[test]
fn criterion_03_cross_identities() {
    let c = Criterion::new("3 (cross-identities)", 1);
    passing(
        "crossids",
        &CheckOptions {
            n_max: Some(8),
            ..default_opts()
        },
    );
    c.finish();
}

#[test]
fn criterion_04_first_t_fraction() {
    let c = Criterion::new("4 (first T-fraction, 12 variables)", 180);
    // symbolic n <= 4 plus five seeded specializations at n = 5
    passing("thm3.2", &default_opts());
    // the stated all-ones identifications
    let h = classical_sequences(SequenceName::Median, 6);
    let g = classical_sequences(SequenceName::Genocchi, 5);
    let hf = classical_sequences(SequenceName::HFlat, 5);
    let all_ones = sequence_of(FamilyId::Pn12, 5, &[]);
    for n in 0..=5usize {
        assert_eq!(all_ones[n], h[n + 1], "|D_2n| = h_n+1 at n={n}");
    }
    let no_rar = sequence_of(FamilyId::Pn12, 5, &["ze"]);
    for n in 0..=5usize {
        assert_eq!(no_rar[n], hf[n], "|Dpure_2n| = hflat_n+1 at n={n}");
    }
    let semider = sequence_of(FamilyId::Pn12, 5, &["ze", "we"]);
    for n in 0..=5usize {
        assert_eq!(semider[n], g[n], "|De_2n| = g_n at n={n}");
    }
    let derange = sequence_of(FamilyId::Pn12, 5, &["ze", "zo", "we", "wo"]);
    for n in 0..=5usize {
        assert_eq!(derange[n], h[n], "|Deo_2n| = h_n at n={n}");
    }
    c.finish();
}

#[test]
fn criterion_05_pq_and_master_first() {
    let c = Criterion::new("5 (22-variable and master first T-fractions)", 300);
    for id in ["thm3.4", "thm3.9", "thm3.11", "thm3.12"] {
        passing(id, &default_opts());
    }
    c.finish();
}

#[test]
fn criterion_06_first_corollaries() {
    let c = Criterion::new("6 (corollaries of the first T-fraction)", 120);
    for id in ["cor3.3", "cor3.4", "prop3.5", "cor3.6", "cor3.7", "cor3.8"] {
        passing(id, &default_opts());
    }
    // all-ones identifications: the augmented series gives the unshifted
    // median sequence, the restricted series the shifted h-flat one
    let h = classical_sequences(SequenceName::Median, 6);
    let all_ones = sequence_of(FamilyId::Pn12, 5, &[]);
    let mut augmented = vec![BigInt::from(1)];
    augmented.extend(all_ones.iter().take(5).cloned());
    assert_eq!(augmented[..], h[0..=5], "augmented all-ones = (h_n)");
    let hf = classical_sequences(SequenceName::HFlat, 6);
    let restricted = sequence_of(FamilyId::Pn12, 5, &["ze"]);
    for n in 0..=4usize {
        assert_eq!(restricted[n + 1], hf[n + 1], "restricted all-ones at n={n}");
    }
    // P*: all-ones gives shifted medians, we = 0 the Genocchi numbers
    let star_ones = sequence_of(FamilyId::PnStar, 5, &[]);
    for n in 0..=5usize {
        assert_eq!(star_ones[n], h[n + 1], "P* all-ones at n={n}");
    }
    let g = classical_sequences(SequenceName::Genocchi, 5);
    let star_no_we = sequence_of(FamilyId::PnStar, 5, &["we"]);
    for n in 0..=5usize {
        assert_eq!(star_no_we[n], g[n], "P* we=0 at n={n}");
    }
    c.finish();
}

#[test]
fn criterion_07_second_family() {
    let c = Criterion::new("7 (second T-fraction family)", 300);
    for id in [
        "thm4.2", "thm4.4", "thm4.6", "cor4.3", "cor4.6", "cor4.7", "cor4.8", "cor4.9",
    ] {
        passing(id, &default_opts());
    }
    // D-cycle corollary at all ones: |DC_2n| = g_{n-1}
    let g = classical_sequences(SequenceName::Genocchi, 5);
    let dc_ones = sequence_of(FamilyId::PdcHatHat, 6, &[]);
    for n in 1..=6usize {
        assert_eq!(dc_ones[n], g[n - 1], "|DC_2n| = g_n-1 at n={n}");
    }
    c.finish();
}

#[test]
fn criterion_08_conjectures() {
    let c = Criterion::new("8 (conjectures, report-only)", 600);
    for id in ["conj4.1", "conj4.1bis", "conj4.1bisbis", "conj4.5"] {
        passing(id, &default_opts());
    }
    c.finish();
}

#[test]
fn criterion_09_bijections() {
    let c = Criterion::new("9 (bijection roundtrips and lemma suites)", 120);
    // the class sizes summed over n <= 5
    let total: u64 = [1u64, 2, 8, 56, 608, 9440].iter().sum();
    assert_eq!(total, 10115);
    let check = run_check("bijections", &default_opts()).unwrap();
    assert_eq!(check.status, Status::Pass, "{:?}", check.details);
    assert_eq!(
        check.details.as_deref(),
        Some("10115 permutations checked")
    );
    c.finish();
}

#[test]
fn criterion_10_flajolet_oracle() {
    let c = Criterion::new("10 (labeled-path weight sums)", 60);
    passing("flajolet", &default_opts());
    c.finish();
}

#[test]
fn criterion_11_appendix() {
    let c = Criterion::new("11 (three-variable J-fraction data)", 60);
    let check = run_check(
        "appendix-a",
        &CheckOptions {
            n_max: Some(20), // evaluation points
            ..default_opts()
        },
    )
    .unwrap();
    assert_eq!(check.status, Status::Pass, "{:?}", check.details);
    c.finish();
}

#[test]
fn criterion_12_transform_identities() {
    let c = Criterion::new("12 (contraction and augmentation transforms)", 10);
    passing("transforms", &default_opts());
    // and the named coefficient laws survive the transform round on the
    // classical specs
    let genocchi = CfSpec::s_from_fn(10, |k| {
        let m = (k as u64 + 1) / 2;
        Poly::from_i64(if k % 2 == 1 { (m * m) as i64 } else { (m * (m + 1)) as i64 })
    });
    let restricted = dperm_core::cfrac::augment_restrict(
        &genocchi,
        dperm_core::cfrac::TransformDirection::Restrict,
    )
    .unwrap();
    let series = restricted.expand(5).unwrap();
    let g = classical_sequences(SequenceName::Genocchi, 6);
    for n in 0..=5usize {
        assert_eq!(series.coeff(n).as_constant().unwrap(), g[n + 1]);
    }
    c.finish();
}
