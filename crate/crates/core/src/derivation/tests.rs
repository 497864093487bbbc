use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::group::parse_group;
use crate::group_ring::GroupRing;
use crate::ring::parse_ring;

fn ring(s: &str) -> Arc<FiniteRing> {
    Arc::new(parse_ring(s).unwrap())
}

fn gr(r: &str, g: &str) -> GroupRing {
    GroupRing::new(&parse_ring(r).unwrap(), &parse_group(g).unwrap()).unwrap()
}

fn random_element<R: Rng>(ring: &FiniteRing, rng: &mut R) -> RingElement {
    ring.ambient().orders().iter().map(|&n| rng.gen_range(0..n)).collect()
}

#[test]
fn leibniz_checks() {
    let r = gr("Zmod(3)", "C2");
    let c = r.carrier_arc();
    assert!(is_derivation(&c, &vec![c.zero(); c.rank()]).unwrap());
    let a = r.group_element(1);
    assert!(is_derivation(&c, inner(&c, &a).images()).unwrap());
    // g ↦ 1, vanishing on R
    let bad = vec![c.zero(), r.scalar(&[1])];
    assert!(!is_derivation(&c, &bad).unwrap());
    assert!(Derivation::new(c.clone(), bad).is_err());
    assert!(is_derivation(&c, &[c.zero()]).is_err());
}

#[test]
fn der_of_residue_rings_is_zero() {
    for n in 1..=30 {
        assert!(der(&ring(&format!("Zmod({n})"))).unwrap().is_zero(), "n = {n}");
    }
}

#[test]
fn der_cardinalities() {
    assert_eq!(der(&gr("Zmod(2)", "C2").carrier_arc()).unwrap().size(), Some(4));
    let m = ring("Mat(2, Zmod(2))");
    let d = der(&m).unwrap();
    assert_eq!(d.size(), Some(8));
    // every derivation of a matrix ring over a field is inner
    assert_eq!(d, inner_space(&m));
}

#[test]
fn der_r_cardinalities() {
    assert!(der_r(&gr("Zmod(3)", "C2")).unwrap().is_zero());
    let z2c2 = gr("Zmod(2)", "C2");
    let d = der_r(&z2c2).unwrap();
    assert_eq!(d.size(), Some(4));
    for delta in d.elements(16).unwrap() {
        assert_eq!(is_inner(&delta).is_some(), delta.is_zero());
    }
    assert_eq!(der_r(&gr("Zmod(5)", "S3")).unwrap().size(), Some(125));
}

#[test]
fn der_r_is_der_vanishing_on_coefficients() {
    for (r, g) in [("Zmod(2)", "C2"), ("Zmod(4)", "C2"), ("Mat(2, Zmod(2))", "C2"), ("Zmod(2)", "S3"), ("Zmod(3)", "C3")] {
        let x = gr(r, g);
        let full = der(&x.carrier_arc()).unwrap();
        let k = x.block_size();
        let kc = x.carrier().rank();
        let amb = map_ambient(x.carrier());
        // maps that vanish on the first k generators
        let gens: Vec<Vec<i64>> = (k * kc..kc * kc).map(|i| amb.basis_vector(i)).collect();
        let vanish = Submodule::span(&amb, &gens).unwrap();
        let expected = full.module().intersection(&vanish).unwrap();
        assert_eq!(der_r(&x).unwrap().module(), &expected, "{r}[{g}]");
    }
}

#[test]
fn solver_matches_oracle() {
    let cap = 1 << 20;
    for r in ["Zmod(6)", "Zmod(8)", "Mat(2, Zmod(2))", "Prod(Zmod(2), Zmod(4))", "F4"] {
        let b = ring(r);
        let (o, count) = oracle_der(&b, cap).unwrap();
        let s = der(&b).unwrap();
        assert_eq!(o, s, "{r}");
        assert_eq!(Some(count), s.size());
    }
    for (r, g) in [("Zmod(2)", "C2"), ("Zmod(3)", "C2"), ("Zmod(2)", "C3"), ("Mat(2, Zmod(2))", "C2")] {
        let x = gr(r, g);
        let (o, count) = oracle_der_r(&x, cap).unwrap();
        let s = der_r(&x).unwrap();
        assert_eq!(o, s, "{r}[{g}]");
        assert_eq!(Some(count), s.size());
        if x.carrier().size().unwrap().checked_pow(x.carrier().rank() as u32).is_some_and(|t| t <= cap) {
            let (o, count) = oracle_der(&x.carrier_arc(), cap).unwrap();
            assert_eq!(o, der(&x.carrier_arc()).unwrap(), "{r}[{g}]");
            assert_eq!(Some(count), o.size());
        }
    }
}

#[test]
fn oracle_respects_cap() {
    assert!(oracle_der(&ring("Mat(2, Zmod(3))"), 1 << 20).is_err());
}

#[test]
fn inner_derivation_identities() {
    let m = ring("Mat(2, Zmod(2))");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let a = random_element(&m, &mut rng);
        let b = random_element(&m, &mut rng);
        let da = inner(&m, &a);
        assert!(m.is_zero(&da.apply(&a)));
        assert_eq!(da.bracket(&inner(&m, &b)).unwrap(), inner(&m, &m.bracket(&a, &b)));
        assert!(da.bracket(&da).unwrap().is_zero());
    }
    assert!(inner(&m, &m.one()).is_zero());
    // E12 and E21 are generators 1 and 2
    let e12 = m.generator(1);
    let e21 = m.generator(2);
    let br = inner(&m, &e12).bracket(&inner(&m, &e21)).unwrap();
    assert!(br.is_zero());
    assert_eq!(m.bracket(&e12, &e21), m.one());
}

#[test]
fn bracket_with_inner_is_inner() {
    let m = ring("Mat(2, Zmod(2))");
    let d = der(&m).unwrap();
    for delta in d.generators() {
        for g in m.generators() {
            let lhs = delta.bracket(&inner(&m, &g)).unwrap();
            assert_eq!(lhs, inner(&m, &delta.apply(&g)));
        }
    }
}

#[test]
fn innerness_witnesses() {
    let m = ring("Mat(2, Zmod(2))");
    assert_eq!(is_inner(&Derivation::zero(m.clone())), Some(m.zero()));
    let x = gr("Zmod(5)", "S3");
    let c = x.carrier_arc();
    for delta in der_r(&x).unwrap().generators() {
        let a = is_inner(&delta).expect("inner");
        assert_eq!(inner(&c, &a), delta);
    }
}

#[test]
fn averaging() {
    let x = gr("Zmod(5)", "S3");
    let c = x.carrier_arc();
    let g = x.group().whole();
    assert_eq!(averaging_witness(&x, &Derivation::zero(c.clone()), &g).unwrap(), c.zero());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_element(&c, &mut rng);
        let delta = inner(&c, &a);
        let w = averaging_witness(&x, &delta, &g).unwrap();
        assert_eq!(inner(&c, &c.neg(&w)), delta);
        assert!(c.is_central(&c.add(&w, &a)));
    }
    // a proper subgroup: agreement on R[H] only
    let h = x.group().generate(&[1]);
    let delta = inner(&c, &random_element(&c, &mut rng));
    let w = averaging_witness(&x, &delta, &h).unwrap();
    let on_h: Vec<RingElement> = h.elements().into_iter().map(|e| x.group_element(e)).collect();
    assert!(delta.agrees_on(&inner(&c, &c.neg(&w)), &on_h));

    let y = gr("Zmod(2)", "C2");
    let d = der_r(&y).unwrap().generators()[0].clone();
    assert!(matches!(averaging_witness(&y, &d, &y.group().whole()), Err(Error::NotInvertible(_))));
}

#[test]
fn averaging_rejects_non_r_derivations() {
    let x = gr("Mat(2, Zmod(3))", "C2");
    let c = x.carrier_arc();
    // ∂ of a non-central scalar does not vanish on R
    let delta = inner(&c, &x.scalar(&c_ring_generator(&x, 1)));
    assert!(matches!(averaging_witness(&x, &delta, &x.group().whole()), Err(Error::NotAnRDerivation)));
}

fn c_ring_generator(x: &GroupRing, i: usize) -> RingElement {
    x.ring().generator(i)
}

#[test]
fn central_derivations() {
    let b = gr("Zmod(4)", "C2").carrier_arc();
    assert_eq!(zder(&b).unwrap(), der(&b).unwrap());
    let y = gr("Zmod(2)", "C2");
    assert_eq!(zder_r(&y).unwrap().size(), Some(4));
    assert!(zder_r(&gr("Zmod(5)", "S3")).unwrap().is_zero());
    // Lie ideal of der
    let m = ring("Mat(2, Zmod(2))");
    let z = zder(&m).unwrap();
    let d = der(&m).unwrap();
    for a in z.generators() {
        for b in d.generators() {
            assert!(z.contains(&a.bracket(&b).unwrap()));
        }
    }
}

#[test]
fn l_map_and_coefficients() {
    let x = gr("Zmod(5)", "S3");
    let c = x.carrier_arc();
    let d = der_r(&x).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let delta = d.random(&mut rng);
        assert!(c.is_zero(&l_map(&x, &delta, 0).unwrap()));
    }
    for _ in 0..50 {
        let a = random_element(&c, &mut rng);
        let g = rng.gen_range(0..6);
        assert!(check_coefficient_vanishing(&x, &inner(&c, &a), g).unwrap());
    }
    assert!(check_coefficient_vanishing(&x, &Derivation::zero(c.clone()), 1).unwrap());
    let y = gr("Zmod(2)", "C2");
    let d = der_r(&y).unwrap().generators()[0].clone();
    assert!(matches!(check_coefficient_vanishing(&y, &d, 1), Err(Error::Precondition(_))));
}

#[test]
fn der_r_values_have_central_coefficients() {
    let x = gr("Mat(2, Zmod(3))", "S3");
    let zrg = x.central_coefficients();
    for delta in der_r(&x).unwrap().generators() {
        for g in 0..6 {
            assert!(zrg.contains(&delta.apply(&x.group_element(g))));
        }
    }
}

#[test]
fn spaces_are_lie_closed() {
    assert!(der(&ring("Mat(2, Zmod(2))")).unwrap().is_closed_under_bracket());
    assert!(der_r(&gr("Zmod(3)", "S3")).unwrap().is_closed_under_bracket());
}
