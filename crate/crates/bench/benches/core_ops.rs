//! Criterion benchmarks for the hot paths: class enumeration, statistic
//! profiles, symbolic T-fraction expansion, polynomial building, and the
//! bijection roundtrips.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use dperm_core::cfrac::CfSpec;
use dperm_core::families::{build_polynomial, FamilyId};
use dperm_core::paths::{biane_inverse, biane_labels, fz_inverse, fz_labels, fz_path, LabelVariant};
use dperm_core::perm::{enumerate_d_permutations, DClass};
use dperm_core::poly::{Poly, VarTable};
use dperm_core::stats::stat_profile;

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate D_10", |b| {
        b.iter(|| enumerate_d_permutations(5, DClass::All).count())
    });
    c.bench_function("class_counts n=4", |b| {
        b.iter(|| dperm_core::class_counts(4))
    });
}

fn bench_profiles(c: &mut Criterion) {
    let perms: Vec<_> = enumerate_d_permutations(4, DClass::All).collect();
    c.bench_function("stat_profile over D_8", |b| {
        b.iter(|| {
            perms
                .iter()
                .map(|p| stat_profile(p).inv as u64)
                .sum::<u64>()
        })
    });
}

fn bench_expansion(c: &mut Criterion) {
    c.bench_function("expand 12-var T-fraction to t^5", |b| {
        b.iter_batched(
            VarTable::new,
            |mut vt| {
                let x1 = vt.var("x1");
                let y1 = vt.var("y1");
                let u1 = vt.var("u1");
                let v1 = vt.var("v1");
                let spec = CfSpec::t_from_fn(5, Poly::one(), |i| {
                    let k = ((i + 1) / 2) as i64;
                    let a = x1.add(&u1.scale(&num_bigint::BigInt::from(k - 1)));
                    let b = y1.add(&v1.scale(&num_bigint::BigInt::from(k)));
                    a.mul(&b)
                });
                spec.expand(5).unwrap()
            },
            BatchSize::SmallInput,
        )
    });
}

fn bench_polynomials(c: &mut Criterion) {
    c.bench_function("build Pn12 at n=4", |b| {
        b.iter_batched(
            VarTable::new,
            |mut vt| build_polynomial(FamilyId::Pn12, 4, &mut vt),
            BatchSize::SmallInput,
        )
    });
}

fn bench_bijections(c: &mut Criterion) {
    let perms: Vec<_> = enumerate_d_permutations(4, DClass::All).collect();
    c.bench_function("fz roundtrip over D_8", |b| {
        b.iter(|| {
            for p in &perms {
                let path = fz_path(p);
                let labels = fz_labels(p, LabelVariant::Xi);
                assert_eq!(&fz_inverse(&path, &labels, LabelVariant::Xi).unwrap(), p);
            }
        })
    });
    c.bench_function("biane roundtrip over D_8", |b| {
        b.iter(|| {
            for p in &perms {
                let path = fz_path(p);
                let labels = biane_labels(p);
                assert_eq!(&biane_inverse(&path, &labels).unwrap().permutation, p);
            }
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_profiles,
    bench_expansion,
    bench_polynomials,
    bench_bijections
);
criterion_main!(benches);
