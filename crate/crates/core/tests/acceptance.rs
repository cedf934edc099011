//! Acceptance battery. Each test prints one PASS/FAIL line with its runtime;
//! all comparisons are exact.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use versal_core::free_algebra::{enumerate_monomials, series_of};
use versal_core::steenrod_dual::milnor_generator_degrees;
use versal_core::versal::{
    self, equivalence_count, homology_series, homotopy_series, hz_quotient_comparison,
    selfmap_first_nontrivial, structure_map_collision, taq_dimensions, thh_homology_series,
};
use versal_core::{dyer_lashof, Generator, GeneratorKind, GeneratorSet, Prime, TruncatedSeries};

fn run(id: u32, name: &str, limit: Duration, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, limit {limit:?}"))
        }
    });
    match &outcome {
        Ok(()) => println!("criterion {id:>2} PASS  {name} ({elapsed:.2?})"),
        Err(why) => println!("criterion {id:>2} FAIL  {name}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} ({name}) failed: {why}");
    }
}

fn prime(q: u32) -> Prime {
    Prime::new(q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(s: &TruncatedSeries) -> Vec<i64> {
    s.coefficients()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

const SECOND: Duration = Duration::from_secs(1);

#[test]
fn criterion_01_low_homotopy() {
    for q in [2, 3, 5, 7] {
        run(
            1,
            &format!("homotopy of S//{q} is 1 + t^(4(p-1))"),
            SECOND,
            || {
                let p = prime(q);
                let gap = p.gap_degree();
                let report = homotopy_series(p, gap).map_err(|e| e.to_string())?;
                let mut expected = vec![0i64; gap + 1];
                expected[0] = 1;
                expected[gap] = 1;
                ensure(ints(&report.homotopy_series) == expected, || {
                    format!("got {:?}", ints(&report.homotopy_series))
                })?;
                ensure(report.gap_verified, || "gap flag unset".into())
            },
        );
    }
}

#[test]
fn criterion_02_first_homology() {
    run(2, "dim H_1(S//p) = 1 for p = 2, 3, 5, 7", SECOND, || {
        for q in [2, 3, 5, 7] {
            let h = homology_series(prime(q), 4);
            ensure(*h.coefficient(1) == BigInt::from(1), || {
                format!("p = {q}: dim H_1 = {}", h.coefficient(1))
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_03_basis_lists_at_three() {
    run(3, "p = 3 bases through degree 8", SECOND, || {
        let p = prime(3);
        let dl = versal::homology_basis(p, 8);
        let mut dl_all: Vec<String> = (0..=8).flat_map(|d| dl.rendered_bucket(d)).collect();
        let mut expected = vec![
            "1",
            "a",
            "bQ^1 a",
            "a·bQ^1 a",
            "Q^1 a",
            "a·Q^1 a",
            "(bQ^1 a)^2",
            "bQ^2 a",
        ];
        dl_all.sort();
        expected.sort();
        ensure(dl_all == expected, || {
            format!("Dyer-Lashof side {dl_all:?}")
        })?;
        ensure(dl.bucket(8).len() == 2, || {
            "degree-8 dimension is not 2".into()
        })?;

        let st = versal::steenrod_basis(p, 8);
        let mut st_all: Vec<String> = (0..=8).flat_map(|d| st.rendered_bucket(d)).collect();
        let mut expected = vec![
            "1",
            "tau_0",
            "xi_1",
            "tau_0·xi_1",
            "tau_1",
            "tau_0·tau_1",
            "xi_1^2",
        ];
        st_all.sort();
        expected.sort();
        ensure(st_all == expected, || format!("Steenrod side {st_all:?}"))
    });
}

fn counts_match(set: &GeneratorSet, n: usize) -> Result<(), String> {
    let dims = enumerate_monomials(set, n).dimensions();
    let series = series_of(set, n);
    for (d, &count) in dims.iter().enumerate() {
        if BigInt::from(count) != *series.coefficient(d) {
            return Err(format!(
                "degree {d}: {count} monomials vs coefficient {}",
                series.coefficient(d)
            ));
        }
    }
    Ok(())
}

#[test]
fn criterion_04_oracle_equivalence() {
    run(
        4,
        "monomial counts equal series coefficients",
        Duration::from_secs(10),
        || {
            counts_match(&versal::homology_generators(prime(2), 30), 30)?;
            counts_match(&versal::homology_generators(prime(3), 24), 24)?;
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
            for case in 0..50 {
                let n = rng.gen_range(0..=20);
                let count = rng.gen_range(0..=8);
                let set = GeneratorSet::from_generators((0..count).map(|i| {
                    let kind = if rng.gen_bool(0.5) {
                        GeneratorKind::Exterior
                    } else {
                        GeneratorKind::Polynomial
                    };
                    Generator::new(format!("x{i}"), rng.gen_range(1..=10), kind).unwrap()
                }))
                .unwrap();
                counts_match(&set, n).map_err(|e| format!("random case {case}: {e}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_05_tensor_identity() {
    run(
        5,
        "homotopy x steenrod = homology, homotopy >= 0",
        Duration::from_secs(30),
        || {
            for (q, max) in [(2, 60), (3, 24)] {
                for n in 0..=max {
                    let r = homotopy_series(prime(q), n)
                        .map_err(|e| format!("p = {q}, N = {n}: {e}"))?;
                    let product = r
                        .homotopy_series
                        .mul(&r.steenrod_series)
                        .map_err(|e| e.to_string())?;
                    ensure(product == r.homology_series, || {
                        format!("p = {q}, N = {n}: identity fails")
                    })?;
                    ensure(r.homotopy_series.is_nonnegative(), || {
                        format!("p = {q}, N = {n}: negative coefficient")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_06_equivalences() {
    run(6, "equivalence counts 1, 2, 4", SECOND, || {
        for (q, expected) in [(2, 1), (3, 2), (5, 4)] {
            let c = equivalence_count(prime(q)).map_err(|e| e.to_string())?;
            ensure(c == expected, || format!("p = {q}: {c}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_selfmaps() {
    run(7, "first nontrivial self-map degree 4p - 5", SECOND, || {
        for q in [2u32, 3, 5] {
            let d = selfmap_first_nontrivial(prime(q)).map_err(|e| e.to_string())?;
            ensure(d == 4 * q as usize - 5, || format!("p = {q}: {d}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_08_thh() {
    run(8, "THH series at p = 2 through degree 4", SECOND, || {
        let p = prime(2);
        let thh = thh_homology_series(p, 4).map_err(|e| e.to_string())?;
        ensure(ints(&thh) == vec![1, 1, 2, 3, 5], || {
            format!("got {:?}", ints(&thh))
        })?;
        // direct enumeration of the tensor product basis
        let tensor = dyer_lashof::enumerate_generators(p, 1, 4)
            .unwrap()
            .union(&dyer_lashof::enumerate_generators_on(p, 2, 4, "u").unwrap())
            .map_err(|e| e.to_string())?;
        let dims = enumerate_monomials(&tensor, 4).dimensions();
        ensure(dims == vec![1, 1, 2, 3, 5], || {
            format!("enumeration gives {dims:?}")
        })
    });
}

#[test]
fn criterion_09_taq() {
    run(
        9,
        "TAQ is one class in degree 1; cotangent is t * homotopy",
        SECOND,
        || {
            for q in [2, 3, 5] {
                for n in [2usize, 5, 16] {
                    let taq = taq_dimensions(prime(q), n).map_err(|e| e.to_string())?;
                    let mut expected = vec![0i64; n + 1];
                    expected[1] = 1;
                    ensure(ints(&taq.dimensions) == expected, || {
                        format!("p = {q}, N = {n}")
                    })?;
                    let homotopy = homotopy_series(prime(q), n).unwrap().homotopy_series;
                    let mut shifted = vec![0i64];
                    shifted.extend(&ints(&homotopy)[..n]);
                    ensure(ints(&taq.cotangent_series) == shifted, || {
                        format!(
                            "p = {q}, N = {n}: cotangent {:?}",
                            ints(&taq.cotangent_series)
                        )
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_10_hz_comparison() {
    run(
        10,
        "HZ//p vs HZ/p first differ in degrees 2, 4, 8",
        SECOND,
        || {
            for (q, expected) in [(2u32, 2usize), (3, 4), (5, 8)] {
                let p = prime(q);
                let d = hz_quotient_comparison(p, p.gap_degree()).map_err(|e| e.to_string())?;
                ensure(d == expected, || format!("p = {q}: {d}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_collision() {
    run(11, "Q^3 a and a^4 both map to e_1^4", SECOND, || {
        let w = structure_map_collision().map_err(|e| e.to_string())?;
        ensure(
            w.source_monomials == ["Q^3 a".to_owned(), "a^4".to_owned()],
            || format!("sources {:?}", w.source_monomials),
        )?;
        ensure(w.image == "e_1^4", || format!("image {}", w.image))?;
        let basis = versal::homology_basis(prime(2), 4);
        let q3 = basis.find(4, "Q^3 a").ok_or("Q^3 a missing")?;
        let a4 = basis.find(4, "a^4").ok_or("a^4 missing")?;
        ensure(q3 != a4, || "sources coincide".into())
    });
}

fn random_series(rng: &mut ChaCha8Rng, n: usize, unit: bool) -> TruncatedSeries {
    let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-1000..=1000)).collect();
    if unit {
        c[0] = 1;
    }
    TruncatedSeries::from_coefficients(c, n).unwrap()
}

#[test]
fn criterion_12_series_laws() {
    run(
        12,
        "series commutativity, associativity, division",
        Duration::from_secs(5),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
            for case in 0..200 {
                let n = rng.gen_range(0..=64);
                let f = random_series(&mut rng, n, false);
                let g = random_series(&mut rng, n, false);
                ensure(f.mul(&g) == g.mul(&f), || {
                    format!("commutativity case {case}")
                })?;
            }
            for case in 0..200 {
                let n = rng.gen_range(0..=64);
                let f = random_series(&mut rng, n, false);
                let g = random_series(&mut rng, n, false);
                let h = random_series(&mut rng, n, false);
                let left = f.mul(&g).unwrap().mul(&h).unwrap();
                let right = f.mul(&g.mul(&h).unwrap()).unwrap();
                ensure(left == right, || format!("associativity case {case}"))?;
            }
            for case in 0..200 {
                let n = rng.gen_range(0..=64);
                let f = random_series(&mut rng, n, false);
                let g = random_series(&mut rng, n, true);
                let back = f.mul(&g).unwrap().div(&g).unwrap();
                ensure(back == f, || format!("round-trip case {case}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn steenrod_side_is_from_milnor_generators() {
    // guards criterion 3: the Steenrod basis is built from these generators
    let labels: Vec<String> = milnor_generator_degrees(prime(3), 8)
        .iter()
        .map(|g| g.label().to_owned())
        .collect();
    assert_eq!(labels, ["tau_0", "xi_1", "tau_1"]);
}
