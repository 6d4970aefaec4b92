//! Cross-route agreement and whole-pipeline properties on a fixed corpus of
//! knots presentable in several ways, plus randomized Markov-move invariance
//! of the Burau route.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use swforge_core::alexander::alexander;
use swforge_core::knot::{parse_presentation, BraidWord, KnotPresentation};
use swforge_core::laurent::LaurentPoly;

const CORPUS: &[(&str, &[&str])] = &[
    ("unknot", &["B(2: 1)", "U"]),
    (
        "trefoil",
        &["B(2: 1 1 1)", "T(2,3)", "K(3/1)", "(+ U (+ S(2) U))"],
    ),
    (
        "figure-eight",
        &["B(3: 1 -2 1 -2)", "K(5/3)", "(- U (+ S(2) U))"],
    ),
    ("T(2,5)", &["T(2,5)", "B(2: 1 1 1 1 1)", "K(5/1)"]),
    ("T(2,7)", &["T(2,7)", "B(2: 1 1 1 1 1 1 1)", "K(7/1)"]),
    ("T(3,4)", &["T(3,4)", "B(3: 1 2 1 2 1 2 1 2)"]),
    ("T(3,5)", &["T(3,5)", "B(3: 1 2 1 2 1 2 1 2 1 2)"]),
    (
        "K(7,3)",
        &["K(7/3)", "B(3: 1 1 1 2 -1 2)", "(+ U (+ (+ S(2) U) U))"],
    ),
];

fn delta_of(text: &str) -> LaurentPoly {
    alexander(&parse_presentation(text).unwrap())
        .unwrap_or_else(|e| panic!("alexander of `{text}` failed: {e}"))
}

#[test]
fn routes_agree_on_the_corpus() {
    for (name, forms) in CORPUS {
        let first = delta_of(forms[0]);
        for form in &forms[1..] {
            assert_eq!(delta_of(form), first, "{name}: `{form}` vs `{}`", forms[0]);
        }
        assert_eq!(first.coeff_sum(), BigInt::one(), "{name}: value at 1");
        assert_eq!(first.bar(), first, "{name}: bar symmetry");
        assert!(first.has_integer_exponents(), "{name}");
    }
}

#[test]
fn torus_degrees_match_genus_on_corpus() {
    for (p, q) in [(2i64, 5i64), (2, 7), (3, 4), (3, 5), (2, 3)] {
        let d = delta_of(&format!("T({p},{q})"));
        assert_eq!(
            d.degree("t").unwrap().as_integer().unwrap(),
            (p - 1) * (q - 1) / 2,
            "T({p},{q})"
        );
    }
}

fn random_knot_braid(rng: &mut ChaCha8Rng) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=4usize);
        let len = rng.gen_range(1..=8usize);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=(n - 1) as i32);
                if rng.gen() {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let b = BraidWord::new(n, letters).unwrap();
        if b.closure_components() == 1 {
            return b;
        }
    }
}

#[test]
fn every_braid_closure_delta_is_symmetric_with_value_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0050);
    for _ in 0..60 {
        let b = random_knot_braid(&mut rng);
        let d = alexander(&KnotPresentation::Braid(b.clone())).unwrap();
        assert_eq!(d.bar(), d, "braid {:?}", b.letters());
        assert_eq!(d.coeff_sum(), BigInt::one(), "braid {:?}", b.letters());
        assert!(d.has_integer_exponents());
    }
}

#[test]
fn delta_is_invariant_under_markov_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0051);
    for _ in 0..40 {
        let b = random_knot_braid(&mut rng);
        let d = alexander(&KnotPresentation::Braid(b.clone())).unwrap();

        // conjugation: w ↦ g w g^{-1}
        let g = {
            let x = rng.gen_range(1..=(b.strands() - 1) as i32);
            if rng.gen() {
                x
            } else {
                -x
            }
        };
        let mut conj = vec![g];
        conj.extend_from_slice(b.letters());
        conj.push(-g);
        let conj = BraidWord::new(b.strands(), conj).unwrap();
        assert_eq!(alexander(&KnotPresentation::Braid(conj)).unwrap(), d);

        // stabilization: w ↦ w σ_n^{±1} on one more strand
        let s = b.strands() as i32;
        let mut stab = b.letters().to_vec();
        stab.push(if rng.gen() { s } else { -s });
        let stab = BraidWord::new(b.strands() + 1, stab).unwrap();
        assert_eq!(alexander(&KnotPresentation::Braid(stab)).unwrap(), d);
    }
}
