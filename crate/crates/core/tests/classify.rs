mod common;

use common::*;
use z2fixed::classify::*;
use z2fixed::cobordism::{prime_tangent_set, tdks_batch, tdks_f_hat, TdksVerdict};
use z2fixed::f2algebra::{odd_sums, Character, F2Poly, SymFnExpr};
use z2fixed::skeleton::{builtin_rpn, enumerate_skeletons, FixedData};
use z2fixed::Limits;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn lower_bound_values() {
    for k in 2..=6 {
        assert_eq!(lower_bound(k, k).unwrap(), k + 1);
    }
    for k in 2..=5u32 {
        assert_eq!(lower_bound(1 << (k - 1), u64::from(k)).unwrap(), 3);
    }
    assert_eq!(lower_bound(6, 2).unwrap(), 3);
    assert!(lower_bound(2, 3).is_err());
}

#[test]
fn existence_examples() {
    assert!(exists_three(4, 3));
    assert!(!exists_three(6, 2));
    assert!(exists_four(3, 3));
    assert!(exists_four(6, 3));
    assert!((1..200).all(|n| !exists_four(n, 2)));
}

#[test]
fn existence_matches_enumerated_ranges() {
    for k in 1..=6u64 {
        for n in 1..=200u64 {
            let three = (0..8).any(|l| l + 1 >= k && n == 1 << l) && k >= 2;
            let four = k >= 3 && (0..8u64).any(|l| l + 3 >= k && 3 << l <= n && n <= 5 << l);
            assert_eq!(exists_three(n, k), three, "n = {n}, k = {k}");
            assert_eq!(exists_four(n, k), four, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn min_fixed_examples() {
    assert_eq!(min_fixed_points(4, 3).unwrap().value, Some(3));
    assert_eq!(min_fixed_points(4, 4).unwrap().value, Some(5));
    assert_eq!(min_fixed_points(6, 2).unwrap().value, Some(9));
    assert_eq!(min_fixed_points(3, 3).unwrap().value, Some(4));
    let unknown = min_fixed_points(9, 5).unwrap();
    assert_eq!(unknown.source, MinFixedSource::Unknown);
    assert_eq!(unknown.value, None);
    assert_eq!(unknown.lower_bound, lower_bound(9, 5).unwrap());
    for n in 2..=8 {
        let r = min_fixed_points(n, n).unwrap();
        assert_eq!(r.value, Some(n + 1), "n = {n}");
    }
    for n in 2..=64 {
        let r = min_fixed_points(n, 2).unwrap();
        if let Some(v) = r.value {
            assert!(v >= r.lower_bound);
        }
    }
}

#[test]
fn conner_floyd_counts() {
    assert_eq!(conner_floyd_count(1, &limits()).unwrap(), 3);
    assert_eq!(conner_floyd_count(3, &limits()).unwrap(), 9);
    assert_eq!(conner_floyd_count(4, &limits()).unwrap(), 3);
    let base = F2Poly::parse(3, "r1*r2+r2*r3+r1*r3").unwrap();
    let mut naive = F2Poly::one(3);
    for m in 1..=24u64 {
        naive = &naive * &base;
        assert_eq!(conner_floyd_count(m, &limits()).unwrap(), naive.len());
        assert_eq!(naive.len(), 3usize.pow(m.count_ones()));
    }
}

#[test]
fn lattice_examples_and_oracle() {
    for ell in 0..4 {
        for t in 0..=(2u64 << ell) {
            assert_eq!(lattice_i(3, ell, t, &limits()).unwrap().len(), 1);
        }
    }
    let mut two = lattice_i(4, 1, 1, &limits()).unwrap();
    two.sort();
    assert_eq!(two, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(lattice_i(4, 1, 2, &limits()).unwrap().len(), 3);

    for (k, ell) in [(4usize, 2usize), (5, 2), (5, 3)] {
        let len = 1u32 << (k - 3);
        let cap = 1u64 << (ell + 4 - k);
        for t in 0..=cap * u64::from(len) {
            let mut brute = Vec::new();
            let total = (cap + 1).pow(len);
            for code in 0..total {
                let v: Vec<u64> = (0..len)
                    .map(|i| code / (cap + 1).pow(len - 1 - i) % (cap + 1))
                    .collect();
                if v.iter().sum::<u64>() == t {
                    brute.push(v);
                }
            }
            assert_eq!(
                lattice_i(k, ell, t, &limits()).unwrap(),
                brute,
                "k = {k}, l = {ell}, t = {t}"
            );
        }
    }
}

#[test]
fn three_point_examples() {
    let rp2 = generate_three(&ThreePointStructure::standard(2, 1).unwrap()).unwrap();
    assert_eq!(rp2.family(), builtin_rpn(2).unwrap().0.family());
    let d = generate_three(&ThreePointStructure::standard(3, 2).unwrap()).unwrap();
    assert!((0..7).any(|row| seven_class(row).family() == d.family()));
    for (k, ell) in [(2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (5, 4)] {
        let d = generate_three(&ThreePointStructure::standard(k, ell).unwrap()).unwrap();
        assert!(d.vertices().iter().all(|v| v.chars.size() == 1 << ell));
        assert!(d.is_valid());
        assert_eq!(prime_tangent_set(&d).len(), 3);
    }
    assert!(ThreePointStructure::standard(3, 1).is_err());
}

fn three_structures() -> Vec<ThreePointStructure> {
    let mut out = Vec::new();
    for (k, ell) in [(2usize, 1u32), (2, 2), (3, 2), (3, 3), (4, 3)] {
        let std = ThreePointStructure::standard(k, ell).unwrap();
        out.push(std.clone());
        // a few other bases: shear the standard one
        for shift in 1..(1u32 << k) {
            let add = Character::new(k, shift).unwrap();
            let mut basis = std.basis().to_vec();
            basis[0] = basis[0] + add;
            if let Ok(s) = ThreePointStructure::new(k, ell, basis.clone()) {
                out.push(s);
            }
            basis.reverse();
            if let Ok(s) = ThreePointStructure::new(k, ell, basis) {
                out.push(s);
            }
        }
    }
    out
}

#[test]
fn three_point_roundtrip() {
    for s in three_structures() {
        let d = generate_three(&s).unwrap();
        let r = recognize_three(&d).unwrap();
        assert_eq!(r.order, vec![0, 1, 2]);
        assert_eq!(generate_three(&r.structure).unwrap(), d);
        // shuffled vertices are still recognized
        let shuffled = FixedData::new(
            d.k(),
            d.n(),
            vec![
                d.vertices()[2].clone(),
                d.vertices()[0].clone(),
                d.vertices()[1].clone(),
            ],
        )
        .unwrap();
        let r = recognize_three(&shuffled).unwrap();
        assert_eq!(generate_three(&r.structure).unwrap().family(), d.family());
    }
}

#[test]
fn three_point_rejections() {
    assert!(recognize_three(&builtin_rpn(3).unwrap().0).is_none());
    // replace one character of vertex p by an even sum of betas
    let d = generate_three(&ThreePointStructure::standard(3, 2).unwrap()).unwrap();
    let mut sets: Vec<_> = d.vertices().iter().map(|v| v.chars.to_vec()).collect();
    let odd = odd_sums(&[c("100"), c("010")]).unwrap();
    let pos = sets[0].iter().position(|x| odd.contains(x)).unwrap();
    sets[0][pos] = c("110");
    let broken = FixedData::from_multisets(
        3,
        4,
        "v",
        sets.into_iter()
            .map(|s| z2fixed::f2algebra::CharMultiset::from_chars(3, s).unwrap())
            .collect(),
    )
    .unwrap();
    assert!(recognize_three(&broken).is_none());
}

#[test]
fn three_point_skeletons() {
    for (k, ell) in [(2usize, 1u32), (2, 2), (3, 2), (3, 3), (4, 3)] {
        let d = generate_three(&ThreePointStructure::standard(k, ell).unwrap()).unwrap();
        let e = enumerate_skeletons(&d, &limits()).unwrap();
        assert_eq!(e.skeletons.len(), 1, "k = {k}, l = {ell}");
        let pairs = e.skeletons[0].pair_multiplicities();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.values().all(|&m| m == d.n() / 2));
    }
}

#[test]
fn four_point_examples() {
    let rp3 = generate_four(&FourPointStructure::standard(3, 0, vec![]).unwrap()).unwrap();
    let (expected, _) = builtin_rpn(3).unwrap();
    for i in 0..4 {
        assert_eq!(rp3.multiset(i), expected.multiset(i));
    }
    let four = generate_four(&FourPointStructure::standard(3, 0, vec![1]).unwrap()).unwrap();
    assert_eq!(four.family(), rp3_plus(1).family());
    assert!(FourPointStructure::standard(3, 0, vec![3]).is_err());
    assert!(FourPointStructure::standard(4, 1, vec![1]).is_err());
}

fn four_structures() -> Vec<FourPointStructure> {
    let mut out = Vec::new();
    for (k, ell) in [(3usize, 0u32), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let len = 1usize << (k - 3);
        let cap = 1u64 << (ell as usize + 4 - k);
        for t in 0..=cap * len as u64 {
            for v in lattice_i(k, ell as usize, t, &limits()).unwrap() {
                out.push(FourPointStructure::standard(k, ell, v.clone()).unwrap());
                let mut basis = out.last().unwrap().basis().to_vec();
                basis[k - 2] = basis[k - 2] + basis[0];
                basis.swap(k - 1, k - 2);
                out.push(FourPointStructure::new(k, ell, basis, v).unwrap());
            }
        }
    }
    out
}

#[test]
fn four_point_roundtrip_and_distinctness() {
    let structures = four_structures();
    for s in &structures {
        let d = generate_four(s).unwrap();
        assert!(d.is_valid());
        assert_eq!(prime_tangent_set(&d).len(), 4);
        let r = recognize_four(&d).unwrap();
        assert_eq!(r.order, vec![0, 1, 2, 3]);
        assert_eq!(generate_four(&r.structure).unwrap(), d);
    }
    for a in &structures {
        for b in &structures {
            if a.k() == b.k() && a.ell() == b.ell() && a.basis() == b.basis() && a.v() != b.v() {
                assert_ne!(
                    generate_four(a).unwrap().family(),
                    generate_four(b).unwrap().family()
                );
            }
        }
    }
    assert!(recognize_four(
        &generate_three(&ThreePointStructure::standard(3, 2).unwrap()).unwrap()
    )
    .is_none());
}

#[test]
fn four_point_unique_skeleton_without_omega() {
    for (k, ell) in [(3usize, 0u32), (3, 1), (4, 1)] {
        let d = generate_four(&FourPointStructure::standard(k, ell, vec![]).unwrap()).unwrap();
        assert_eq!(
            enumerate_skeletons(&d, &limits()).unwrap().skeletons.len(),
            1,
            "k = {k}, l = {ell}"
        );
    }
}

#[test]
fn four_point_divisibility() {
    for (k, ell) in [(3usize, 0u32), (3, 1), (4, 1)] {
        let s = FourPointStructure::standard(k, ell, vec![]).unwrap();
        let m = s.multiplicity();
        let d = generate_four(&s).unwrap();
        let a = m << (k - 2);
        let b = (3 * m) << (k - 3);
        let f: SymFnExpr = format!("e{a}*e{b}").parse().unwrap();
        let TdksVerdict::Polynomial(got) = tdks_f_hat(&d, &f).unwrap() else {
            panic!("f-hat is not a polynomial for k = {k}, l = {ell}");
        };
        let gd = s.basis()[k - 2] + s.basis()[k - 1];
        let betas = &s.basis()[..k - 2];
        let forms: Vec<(Character, usize)> = odd_sums(betas)
            .unwrap()
            .into_iter()
            .map(|b| (b + gd, 2 * m))
            .collect();
        assert_eq!(got, product_of_powers(k, &forms), "k = {k}, l = {ell}");
        for &(form, e) in &forms {
            assert!(vanishing_order(&got, form).unwrap() as usize >= e.min(2 * m));
        }
    }
}

#[test]
fn three_point_classes() {
    assert_eq!(
        enumerate_three_classes(2, 1, OrbitMethod::Auto, &limits())
            .unwrap()
            .len(),
        1
    );
    let classes = enumerate_three_classes(3, 2, OrbitMethod::Auto, &limits()).unwrap();
    let mut got: Vec<_> = classes.iter().map(|d| d.family()).collect();
    let mut want: Vec<_> = (0..7).map(|r| seven_class(r).family()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    assert!(classes.iter().all(|d| d.is_valid()));
    assert!(enumerate_three_classes(3, 1, OrbitMethod::Auto, &limits()).is_err());
}

/// Number of `j`-dimensional subspaces of `F_2^k`.
fn gaussian_binomial(k: u32, j: u32) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..j {
        num *= (1 << (k - i)) - 1;
        den *= (1 << (i + 1)) - 1;
    }
    num / den
}

#[test]
fn class_counts_match_subspace_counts() {
    for (k, ell) in [(3usize, 2u32), (4, 3), (5, 4)] {
        let generators =
            enumerate_three_classes(k, ell, OrbitMethod::Generators, &limits()).unwrap();
        assert_eq!(
            generators.len() as u64,
            gaussian_binomial(k as u32, k as u32 - 2),
            "k = {k}"
        );
        if k <= 4 {
            let brute =
                enumerate_three_classes(k, ell, OrbitMethod::BruteForce, &limits()).unwrap();
            let f = |v: &[FixedData]| v.iter().map(FixedData::family).collect::<Vec<_>>();
            assert_eq!(f(&brute), f(&generators));
        }
    }
    assert!(enumerate_three_classes(5, 4, OrbitMethod::BruteForce, &limits()).is_err());
}

#[test]
fn tdks_battery_on_generated_data() {
    let mut cases: Vec<FixedData> = Vec::new();
    for (k, ell) in [(2usize, 1u32), (2, 2), (3, 2), (3, 3), (4, 3)] {
        cases.push(generate_three(&ThreePointStructure::standard(k, ell).unwrap()).unwrap());
    }
    for ell in 0..=1u32 {
        for t in 0..=(2u64 << ell) {
            for v in lattice_i(3, ell as usize, t, &limits()).unwrap() {
                cases.push(
                    generate_four(&FourPointStructure::standard(3, ell, v).unwrap()).unwrap(),
                );
            }
        }
    }
    for d in cases {
        let r = tdks_batch(&d, None, &limits()).unwrap();
        assert!(r.passed(), "{d} failed at {:?}", r.failure);
    }
}
