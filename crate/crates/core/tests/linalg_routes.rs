//! The two solvers over finite abelian groups (Smith form over ℤ, and the
//! Howell elimination behind `Hom`) against plain enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use derring::linalg::{solve_mod, Hom};
use derring::{Ambient, IntMatrix};

/// Makes raw images well defined: the image of a generator of order `n`
/// must be killed by `n`.
fn well_defined(dom: &[i64], cod: &[i64], raw: &[Vec<i64>]) -> Vec<Vec<i64>> {
    dom.iter()
        .zip(raw)
        .map(|(&n, r)| cod.iter().zip(r).map(|(&m, &x)| (x * (m / n.gcd(&m))).rem_euclid(m)).collect())
        .collect()
}

fn apply(images: &[Vec<i64>], cod: &[i64], x: &[i64]) -> Vec<i64> {
    (0..cod.len()).map(|j| images.iter().zip(x).map(|(img, &xi)| img[j] * xi).sum::<i64>().rem_euclid(cod[j])).collect()
}

fn brute(dom: &Ambient, images: &[Vec<i64>], cod: &[i64], b: &[i64]) -> Vec<Vec<i64>> {
    dom.elements(1 << 16).unwrap().filter(|x| apply(images, cod, x) == b).collect()
}

fn orders() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop::sample::select(vec![2i64, 3, 4, 6, 8, 9, 12]), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_howell_and_enumeration_agree(
        dom in orders(),
        cod in orders(),
        raw in prop::collection::vec(prop::collection::vec(0i64..36, 3), 3),
        x0 in prop::collection::vec(0i64..36, 3),
        b_raw in prop::collection::vec(0i64..36, 3),
        consistent in any::<bool>(),
    ) {
        let images = well_defined(&dom, &cod, &raw[..dom.len()]);
        let b: Vec<i64> = if consistent {
            let x: Vec<i64> = dom.iter().zip(&x0).map(|(&n, &v)| v % n).collect();
            apply(&images, &cod, &x)
        } else {
            cod.iter().zip(&b_raw).map(|(&m, &v)| v % m).collect()
        };
        let domain = Ambient::new(dom.clone()).unwrap();
        let codomain = Ambient::new(cod.clone()).unwrap();
        let solutions = brute(&domain, &images, &cod, &b);

        let a = IntMatrix::from_i64_rows(dom.len(), &(0..cod.len()).map(|j| images.iter().map(|c| c[j]).collect()).collect::<Vec<_>>());
        let big_b: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
        let snf = solve_mod(&a, &big_b, &domain, &codomain).unwrap();
        let hom = Hom::new(domain.clone(), codomain, images.clone()).unwrap().solve(&b).unwrap();

        prop_assert_eq!(snf.is_some(), !solutions.is_empty());
        prop_assert_eq!(hom.is_some(), !solutions.is_empty());
        if let (Some(s), Some((x, k))) = (snf, hom) {
            prop_assert_eq!(&s.kernel, &k);
            prop_assert_eq!(&s.particular, &x);
            prop_assert_eq!(k.size(), Some(solutions.len() as u64));
            for sol in &solutions {
                prop_assert!(k.contains(&domain.sub(sol, &x)));
            }
        }
    }
}
