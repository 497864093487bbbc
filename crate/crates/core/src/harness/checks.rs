use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{CheckId, Ctx, Record, Verdict};
use crate::derivation::{
    averaging_witness, central_part, check_coefficient_vanishing, der, der_r, inner, inner_space, is_inner, l_map,
    oracle_der, oracle_der_r, Derivation, DerivationSpace,
};
use crate::error::{cap_exceeded, Error, Result};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::group_ring::GroupRing;
use crate::lie::{commutator_power_identity_check, der_as_lie, engel_scan, inner_der_lie, FiniteLieRing};
use crate::ring::{FiniteRing, RingElement};
use crate::solder::{check_solder_properties, enumerate_solders, is_solder};

const ANY: &str = "R is a ring and G is a group";
const INVERTIBLE: &str = "each prime p in pi(G) is invertible in R";
const COPRIME: &str = "G is a torsion group such that pi(F(R)) and pi(G) are disjoint";

/// FNV-1a of the instance key, mixed into the run seed.
pub(crate) fn instance_seed(seed: u64, key: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in key.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed ^ h
}

pub(crate) struct Found {
    verdict: Verdict,
    witness: Option<Value>,
    detail: Value,
}

fn judged(holds: bool, witness: impl FnOnce() -> Value, detail: Value) -> Found {
    if holds {
        Found { verdict: Verdict::Pass, witness: None, detail }
    } else {
        Found { verdict: Verdict::Fail, witness: Some(witness()), detail }
    }
}

fn is_cap(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. })
}

struct Out<'a> {
    check: CheckId,
    ring: String,
    group: Option<String>,
    records: &'a mut Vec<Record>,
}

impl Out<'_> {
    fn push(&mut self, claim: &str, hypothesis: &str, satisfied: bool, f: Found) {
        self.records.push(Record {
            check: self.check,
            claim: claim.into(),
            ring: self.ring.clone(),
            group: self.group.clone(),
            hypothesis: hypothesis.into(),
            hypothesis_satisfied: satisfied,
            verdict: f.verdict,
            witness: f.witness,
            detail: f.detail,
        });
    }

    /// Evaluates the hypothesis, then the claim when it holds. Cap hits in
    /// either become a CAPPED record for this claim only.
    fn claim(
        &mut self,
        claim: &str,
        hypothesis: &str,
        satisfied: Result<bool>,
        f: impl FnOnce() -> Result<Found>,
    ) -> Result<()> {
        let capped = |e: Error| Found { verdict: Verdict::Capped, witness: None, detail: json!({ "cap": e.to_string() }) };
        match satisfied {
            Err(e) if is_cap(&e) => self.push(claim, hypothesis, false, capped(e)),
            Err(e) => return Err(e),
            Ok(false) => {
                let f = Found { verdict: Verdict::Skipped, witness: None, detail: Value::Null };
                self.push(claim, hypothesis, false, f)
            }
            Ok(true) => match f() {
                Ok(found) => self.push(claim, hypothesis, true, found),
                Err(e) if is_cap(&e) => self.push(claim, hypothesis, true, capped(e)),
                Err(e) => return Err(e),
            },
        }
        Ok(())
    }
}

fn inverts_all(r: &FiniteRing, primes: &[u64]) -> bool {
    primes.iter().all(|&p| r.inverts(p))
}

fn coprime(r: &FiniteRing, g: &FiniteGroup) -> bool {
    let additive = r.pi_additive();
    g.pi().iter().all(|p| !additive.contains(p))
}

fn subgroup_label(h: &SubgroupSet) -> String {
    let e: Vec<String> = h.elements().iter().map(usize::to_string).collect();
    format!("{{{}}}", e.join(","))
}


/// Full derivation space of a ring, within the configured solver cap.
fn full_der(ctx: &Ctx<'_>, ring: &Arc<FiniteRing>) -> Result<DerivationSpace> {
    let k = ring.rank();
    if k * k > ctx.caps.solver {
        return Err(cap_exceeded(format!("derivation system of {}", ring.label()), k * k, ctx.caps.solver as u64));
    }
    let key = (ring.structure_hash(), ring.label());
    if let Some(hit) = ctx.memo.0.lock().expect("memo lock").get(&key) {
        return hit.clone();
    }
    let d = der(ring);
    ctx.memo.0.lock().expect("memo lock").insert(key, d.clone());
    d
}

/// Derivation spaces already solved for the instance at hand.
#[derive(Default)]
pub(crate) struct Memo(Mutex<HashMap<(u64, String), Result<DerivationSpace>>>);

fn random_element(ring: &FiniteRing, rng: &mut ChaCha8Rng) -> RingElement {
    ring.ambient().orders().iter().map(|&n| rng.gen_range(0..n)).collect()
}

fn images_json(gr: &GroupRing, d: &Derivation) -> Value {
    let n = gr.group().order();
    Value::Array((0..n).map(|g| Value::String(gr.format_element(&d.apply(&gr.group_element(g))))).collect())
}

fn lie_summary(l: &FiniteLieRing) -> Value {
    json!({
        "size": l.size(),
        "nilpotency_class": l.nilpotency_class(),
        "derived_length": l.derived_length(),
    })
}

pub(crate) fn run_group_ring(ctx: &Ctx<'_>, gr: &GroupRing, seed: u64) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    let mut out = Out { check: ctx.check, ring: gr.ring().label(), group: Some(gr.group().label()), records: &mut records };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match ctx.check {
        CheckId::T2 => t2(&mut out, gr)?,
        CheckId::C14 => c14(ctx, &mut out, gr)?,
        CheckId::GGC4 => ggc4(&mut out, gr)?,
        CheckId::C20 => c20(&mut out, gr)?,
        CheckId::P10 => p10(ctx, &mut out, gr)?,
        CheckId::P11 => p11(ctx, &mut out, gr)?,
        CheckId::P21 => p21(ctx, &mut out, gr)?,
        CheckId::P28 => p28(&mut out, gr)?,
        CheckId::L8 => l8(ctx, &mut out, gr, &mut rng)?,
        CheckId::L13 => l13(ctx, &mut out, gr)?,
        CheckId::L19 => l19(ctx, &mut out, gr, &mut rng)?,
        CheckId::L25 => l25(ctx, &mut out, gr, &mut rng)?,
        CheckId::L26 => l26(&mut out, gr)?,
        CheckId::ORACLE => oracle_group_ring(ctx, &mut out, gr)?,
        CheckId::L9 | CheckId::L23 | CheckId::T5SCAN => unreachable!("ring-level checks"),
    }
    Ok(records)
}

/// Ring-level checks. `gr` is set when the ring is the carrier of a group ring.
pub(crate) fn run_ring(ctx: &Ctx<'_>, ring: &Arc<FiniteRing>, gr: Option<&GroupRing>) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    let (r, g) = match gr {
        Some(gr) => (gr.ring().label(), Some(gr.group().label())),
        None => (ring.label(), None),
    };
    let mut out = Out { check: ctx.check, ring: r, group: g, records: &mut records };
    match ctx.check {
        CheckId::L9 => l9(ctx, &mut out, ring)?,
        CheckId::L23 => l23(ctx, &mut out, ring)?,
        CheckId::T5SCAN => t5(ctx, &mut out, ring)?,
        CheckId::ORACLE => oracle_ring(ctx, &mut out, ring)?,
        _ => unreachable!("group-ring checks"),
    }
    Ok(records)
}

fn t2(out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let hyp = "G is a torsion abelian group such that all primes p in pi(G) are invertible in R";
    out.claim("Der_R R[G] = 0", hyp, Ok(g.is_abelian() && inverts_all(r, &g.pi())), || {
        let d = der_r(gr)?;
        let detail = json!({ "der_r_size": d.cardinality().to_string() });
        Ok(judged(d.is_zero(), || images_json(gr, &d.generators()[0]), detail))
    })
}

fn c14(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let hyp = "G is a finite group such that each prime p in pi(G) is invertible in R";
    let c = gr.carrier_arc();
    out.claim("every R-derivation is inner; delta = partial_{-x_G}", hyp, Ok(inverts_all(r, &g.pi())), || {
        let d = der_r(gr)?;
        let whole = g.whole();
        let elems = c.elements(ctx.caps.enumeration).ok();
        let mut bad = None;
        for (i, delta) in d.generators().iter().enumerate() {
            let has_witness = is_inner(delta).is_some();
            let x = averaging_witness(gr, delta, &whole)?;
            let candidate = inner(&c, &c.neg(&x));
            let agrees = match &elems {
                Some(all) => all.iter().all(|y| candidate.apply(y) == delta.apply(y)),
                None => candidate.to_vector() == delta.to_vector(),
            };
            if !(has_witness && agrees) {
                bad = Some(json!({
                    "generator": i,
                    "images": images_json(gr, delta),
                    "x_G": gr.format_element(&x),
                    "inner_witness_found": has_witness,
                }));
                break;
            }
        }
        let detail = json!({
            "der_r_size": d.cardinality().to_string(),
            "generators": d.generators().len(),
            "compared_on": if elems.is_some() { "every element" } else { "additive generators" },
        });
        Ok(match bad {
            None => judged(true, || Value::Null, detail),
            Some(w) => judged(false, || w, detail),
        })
    })
}

fn ggc4(out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let g = gr.group();
    let idl = inner_der_lie(gr)?;
    let detail = json!({
        "quotient_side_size": idl.quotient_side.size(),
        "derivation_side_size": idl.lie().size(),
        "inside_der_r": idl.inside_der_r,
    });
    let iso = idl.is_isomorphism && idl.inside_der_r && idl.quotient_side.size() == idl.lie().size();
    out.claim("(Z(R)[G])^L / Z(Z(R)[G]) is isomorphic to IDer_R R[G]", ANY, Ok(true), || {
        Ok(judged(iso, || json!("the map x + Z -> partial_x is not a Lie isomorphism"), detail))
    })?;

    let abelian = idl.lie().is_abelian();
    let central = g.derived_subgroup().is_subset_of(&g.center());
    out.claim("IDer_R R[G] is abelian iff G' is central", ANY, Ok(true), || {
        let detail = json!({ "ider_abelian": abelian, "derived_subgroup_central": central });
        Ok(match (abelian, central) {
            (true, false) => judged(false, || json!("IDer_R R[G] abelian but G' is not central"), detail),
            (false, true) => Found {
                verdict: Verdict::Flagged,
                witness: Some(json!("G' is central but IDer_R R[G] is not abelian; the converse fails here")),
                detail,
            },
            _ => judged(true, || Value::Null, detail),
        })
    })
}

fn c20(out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let hyp = "G is a torsion FC-group such that each p in pi(G) is invertible in R";
    let sat = inverts_all(r, &g.pi());
    let c = gr.carrier_arc();
    let compute = || -> Result<(bool, Value, Option<Value>)> {
        let d = der_r(gr)?;
        let ds: Vec<Derivation> = gr.central_coefficients().generators().iter().map(|x| inner(&c, x)).collect();
        let inner_central = DerivationSpace::span(Arc::clone(&c), &ds)?;
        let holds = d.is_subspace_of(&inner_central)?;
        let witness = d.generators().into_iter().find(|x| !inner_central.contains(x)).map(|x| images_json(gr, &x));
        Ok((holds, json!({ "der_r_size": d.cardinality().to_string() }), witness))
    };
    out.claim("(i) delta is inner (x in Z(R)[G]) iff delta(G) is finite", hyp, Ok(sat), || {
        let (holds, detail, w) = compute()?;
        Ok(judged(holds, || w.unwrap_or(Value::Null), detail))
    })?;
    let hyp2 = "G is a centre-by-finite torsion FC-group such that each p in pi(G) is invertible in R";
    out.claim("(ii) every R-derivation of R[G] is inner", hyp2, Ok(sat), || {
        let (holds, detail, w) = compute()?;
        Ok(judged(holds, || w.unwrap_or(Value::Null), detail))
    })
}

fn p10(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let c = gr.carrier_arc();
    let spaces = || -> Result<(DerivationSpace, DerivationSpace)> {
        let d = full_der(ctx, &c)?;
        let z = central_part(&d)?;
        Ok((d, z))
    };
    let spaces = spaces();
    let get = || spaces.clone();
    out.claim("(i) ZDer B is an ideal of the Lie ring Der B, B = R[G]", ANY, Ok(true), || {
        let (d, z) = get()?;
        let mut bad = None;
        'outer: for a in z.generators() {
            for b in d.generators() {
                if !z.contains(&a.bracket(&b)?) {
                    bad = Some(json!({ "central": images_json(gr, &a), "other": images_json(gr, &b) }));
                    break 'outer;
                }
            }
        }
        let detail = json!({ "der_size": d.cardinality().to_string(), "zder_size": z.cardinality().to_string() });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    out.claim("(ii) delta([B,B]) = 0 for delta in ZDer B, B = R[G]", ANY, Ok(true), || {
        let (_, z) = get()?;
        let gens = c.generators();
        let mut bad = None;
        'outer: for a in z.generators() {
            for x in &gens {
                for y in &gens {
                    if !c.is_zero(&a.apply(&c.bracket(x, y))) {
                        bad = Some(json!({ "derivation": images_json(gr, &a), "x": x, "y": y }));
                        break 'outer;
                    }
                }
            }
        }
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), json!({})))
    })?;
    let n = g.exponent() as u64;
    let hyp = "R is n-torsion-free and the exponent exp(G) = n";
    out.claim("(iii) delta(G) = 0 for each delta in ZDer R[G]", hyp, Ok(r.is_torsion_free_for(n)), || {
        let (_, z) = get()?;
        let bad = z.generators().into_iter().find(|a| (0..g.order()).any(|x| !c.is_zero(&a.apply(&gr.group_element(x)))));
        let detail = json!({ "n": n, "zder_size": z.cardinality().to_string() });
        Ok(judged(bad.is_none(), || images_json(gr, bad.as_ref().unwrap()), detail))
    })
}

fn vanishes_on_group(gr: &GroupRing, d: &Derivation) -> bool {
    (0..gr.group().order()).all(|x| gr.carrier().is_zero(&d.apply(&gr.group_element(x))))
}

fn p11(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let c = gr.carrier_arc();
    let d = der_r(gr)?;
    let zr = central_part(&d)?;
    let zrg = gr.central_coefficients();
    out.claim("(i) delta(g) in Z(R)[G] for delta in Der_R R[G]", ANY, Ok(true), || {
        let bad = d
            .generators()
            .into_iter()
            .find(|a| (0..g.order()).any(|x| !zrg.contains(&a.apply(&gr.group_element(x)))));
        let detail = json!({ "der_r_size": d.cardinality().to_string() });
        Ok(judged(bad.is_none(), || images_json(gr, bad.as_ref().unwrap()), detail))
    })?;
    out.claim("(ii) ZDer_R R[G] is an ideal of the Lie ring Der_R R[G]", ANY, Ok(true), || {
        let mut bad = None;
        'outer: for a in zr.generators() {
            for b in d.generators() {
                if !zr.contains(&a.bracket(&b)?) {
                    bad = Some(json!({ "central": images_json(gr, &a), "other": images_json(gr, &b) }));
                    break 'outer;
                }
            }
        }
        let detail = json!({ "zder_r_size": zr.cardinality().to_string() });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    let sat = coprime(r, g);
    out.claim("(iii) ZDer_R R[G] = 0", COPRIME, Ok(sat), || {
        let detail = json!({ "zder_r_size": zr.cardinality().to_string() });
        Ok(judged(zr.is_zero(), || images_json(gr, &zr.generators()[0]), detail))
    })?;
    out.claim("(iv) delta(tau G) = 0 for delta in ZDer_R R[G]", COPRIME, Ok(sat), || {
        let bad = zr.generators().into_iter().find(|a| !vanishes_on_group(gr, a));
        Ok(judged(bad.is_none(), || images_json(gr, bad.as_ref().unwrap()), json!({})))
    })?;
    out.claim("(v) Der_R R[G] = 0 iff delta(G) = 0 for every delta in Der R[G]", COPRIME, Ok(sat), || {
        let full = full_der(ctx, &c)?;
        let lhs = d.is_zero();
        let rhs = full.generators().iter().all(|a| vanishes_on_group(gr, a));
        let detail = json!({ "der_r_zero": lhs, "der_vanishes_on_G": rhs, "der_size": full.cardinality().to_string() });
        Ok(judged(lhs == rhs, || json!("the two sides disagree"), detail))
    })
}

fn prime_power(n: u64) -> Option<u64> {
    match crate::scalar::prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// `H′` for a subgroup `H`.
fn derived_of(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    let e = h.elements();
    let comms: Vec<usize> = e.iter().flat_map(|&a| e.iter().map(move |&b| (a, b))).map(|(a, b)| g.commutator(a, b)).collect();
    g.generate(&comms)
}

fn is_p_group_order(n: usize, p: u64) -> bool {
    prime_power(n as u64).is_none_or(|q| q == p)
}

fn p21(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let idl = inner_der_lie(gr)?;
    let lie = idl.lie();
    let (nil, sol) = (lie.is_nilpotent(), lie.is_solvable());
    let base = lie_summary(lie);
    let detail = |extra: Value| {
        let mut d = base.clone();
        if let (Value::Object(m), Value::Object(e)) = (&mut d, extra) {
            m.extend(e);
        }
        d
    };
    let claim_i = "(i) IDer_R R[G] nilpotent (resp. solvable) implies G nilpotent (resp. solvable)";
    out.claim(claim_i, ANY, Ok(true), || {
        let holds = (!nil || g.is_nilpotent()) && (!sol || g.is_solvable());
        let d = detail(json!({ "group_nilpotent": g.is_nilpotent(), "group_solvable": g.is_solvable() }));
        Ok(judged(holds, || json!("IDer verdict not matched by the group"), d))
    })?;

    let hyp = "R is a division ring of characteristic p";
    let p = r.exponent() as u64;
    let division: Result<bool> = match r.size() {
        Some(n) if n > 1 => r.units(ctx.caps.enumeration).map(|u| u.len() as u64 + 1 == n),
        _ => Ok(false),
    };
    let sat = division.clone().map(|b| b && crate::scalar::prime_divisors(p) == vec![p]);
    out.claim("(ii)(a) IDer_R R[G] nilpotent iff G is p-abelian and nilpotent", hyp, sat.clone(), || {
        let expected = g.is_p_abelian(p) && g.is_nilpotent();
        let d = detail(json!({ "p": p, "p_abelian": g.is_p_abelian(p), "group_nilpotent": g.is_nilpotent() }));
        Ok(judged(nil == expected, || json!({ "ider_nilpotent": nil, "expected": expected }), d))
    })?;
    if p == 2 {
        out.claim("(ii)(c) IDer_R R[G] solvable iff G has a 2-abelian subgroup of index at most 2", hyp, sat, || {
            let witness = g.small_index_subgroups().into_iter().find(|h| is_p_group_order(derived_of(g, h).order(), 2));
            let expected = witness.is_some();
            let d = detail(json!({ "subgroup": witness.as_ref().map(subgroup_label) }));
            Ok(judged(sol == expected, || json!({ "ider_solvable": sol, "expected": expected }), d))
        })?;
    } else {
        out.claim("(ii)(b) IDer_R R[G] solvable iff G is p-abelian (p != 2)", hyp, sat, || {
            let expected = g.is_p_abelian(p);
            let d = detail(json!({ "p": p }));
            Ok(judged(sol == expected, || json!({ "ider_solvable": sol, "expected": expected }), d))
        })?;
    }

    // a finite Lie ring is hypercentral exactly when it is nilpotent
    let claim_iii = "(iii) IDer_R R[G] hypercentral iff G abelian, or char R = p^m and G nilpotent p-abelian";
    out.claim(claim_iii, ANY, Ok(true), || {
        let ch = r.exponent() as u64;
        let modular = prime_power(ch).is_some_and(|q| g.is_nilpotent() && g.is_p_abelian(q));
        let expected = g.is_abelian() || modular;
        let d = detail(json!({ "characteristic": ch }));
        Ok(judged(nil == expected, || json!({ "ider_hypercentral": nil, "expected": expected }), d))
    })
}

fn p28(out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let c = gr.carrier();
    let class = g.nilpotency_class();
    let hyp = "G is a torsion nilpotent group of class m >= 2 such that pi(G) and pi(F(R)) are disjoint";
    let sat = class.is_some_and(|m| m >= 2) && coprime(r, g);
    let upper = g.upper_central_series();
    let ideals = || -> Result<Vec<crate::linalg::Submodule>> {
        upper.iter().skip(1).map(|z| gr.augmentation_ideal(z)).collect()
    };
    out.claim("each I_R(Z_i) is a delta-ideal for delta in Der_R R[G]", hyp, Ok(sat), || {
        let d = der_r(gr)?;
        let ideals = ideals()?;
        let mut bad = None;
        'outer: for (i, ideal) in ideals.iter().enumerate() {
            for delta in d.generators() {
                for x in ideal.generators() {
                    if !ideal.contains(&delta.apply(&x)) {
                        bad = Some(json!({ "i": i + 1, "x": gr.format_element(&x), "delta": images_json(gr, &delta) }));
                        break 'outer;
                    }
                }
            }
        }
        let detail = json!({ "class": class, "terms": ideals.len() });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    out.claim("delta_1 ... delta_{m-1}(R[G]) is contained in I_R(Z_1)", hyp, Ok(sat), || {
        let m = class.expect("hypothesis holds");
        let d = der_r(gr)?;
        let z1 = gr.augmentation_ideal(&upper[1])?;
        let gens = d.generators();
        let tuples = gens.len().checked_pow((m - 1) as u32).unwrap_or(usize::MAX);
        if tuples > 100_000 {
            return Err(cap_exceeded("P28 derivation tuples", tuples, 100_000));
        }
        let mut bad = None;
        let mut idx = vec![0usize; m - 1];
        if !gens.is_empty() {
            'outer: loop {
                for x in c.generators() {
                    let y = idx.iter().rev().fold(x.clone(), |acc, &k| gens[k].apply(&acc));
                    if !z1.contains(&y) {
                        bad = Some(json!({ "tuple": idx.clone(), "x": gr.format_element(&x) }));
                        break 'outer;
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break 'outer;
                    }
                    idx[pos] += 1;
                    if idx[pos] < gens.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
        let detail = json!({ "class": m, "der_r_size": d.cardinality().to_string(), "tuples": tuples });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    let hyp_ab = "G is a torsion abelian group such that pi(G) and pi(F(R)) are disjoint";
    out.claim("Der_R R[G] = 0 (abelian case)", hyp_ab, Ok(g.is_abelian() && coprime(r, g)), || {
        let d = der_r(gr)?;
        let detail = json!({ "der_r_size": d.cardinality().to_string() });
        Ok(judged(d.is_zero(), || images_json(gr, &d.generators()[0]), detail))
    })
}

fn l8(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing, rng: &mut ChaCha8Rng) -> Result<()> {
    let c = gr.carrier_arc();
    let g = gr.group();
    let n = g.order();
    let d = der_r(gr)?;
    let zrg = gr.central_coefficients();
    let samples: Vec<Derivation> = (0..ctx.samples)
        .map(|i| if i % 2 == 0 { d.random(rng) } else { inner(&c, &random_element(&c, rng)) })
        .collect();
    let hyp = "U = G is a subgroup of U(R[G]) and delta in Der R[G]";
    out.claim("(iii) L_delta is a homomorphism on G iff [a^-1 delta(a), G] = 0", hyp, Ok(true), || {
        let mut homs = 0;
        let mut bad = None;
        for (i, delta) in samples.iter().enumerate() {
            let l: Vec<RingElement> = (0..n).map(|a| l_map(gr, delta, a)).collect::<Result<_>>()?;
            let hom = (0..n).all(|a| (0..n).all(|b| l[g.mul(a, b)] == c.add(&l[a], &l[b])));
            let commutes = (0..n).all(|a| (0..n).all(|b| c.is_zero(&c.bracket(&l[a], &gr.group_element(b)))));
            homs += usize::from(hom);
            if hom != commutes {
                bad = Some(json!({ "sample": i, "images": images_json(gr, delta), "hom": hom }));
                break;
            }
        }
        let detail = json!({ "samples": samples.len(), "homomorphisms": homs });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    out.claim("L_delta(g) and delta(g) lie in Z(R)[G] for delta in Der_R R[G]", "delta in Der_R R[G]", Ok(true), || {
        let mut bad = None;
        let mut checked = 0;
        for (i, delta) in samples.iter().enumerate().filter(|(i, _)| i % 2 == 0) {
            checked += 1;
            for a in 0..n {
                let l = l_map(gr, delta, a)?;
                if !zrg.contains(&l) || !zrg.contains(&delta.apply(&gr.group_element(a))) {
                    bad = Some(json!({ "sample": i, "g": a, "images": images_json(gr, delta) }));
                    break;
                }
            }
            if bad.is_some() {
                break;
            }
        }
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), json!({ "samples": checked })))
    })
}

fn l13(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let c = gr.carrier_arc();
    let full = full_der(ctx, &c);
    let d_r = der_r(gr)?;
    let cgens = c.generators();
    for h in g.all_subgroups() {
        let label = subgroup_label(&h);
        let sat = inverts_all(r, &crate::scalar::prime_divisors(h.order() as u64));
        let hyp = "H is a finite subgroup of G such that each prime p in pi(H) is invertible in R";
        out.claim(&format!("(i) delta(H) = partial_x(H) for some x, H = {label}"), hyp, Ok(sat), || {
            let full = full.clone()?;
            let hs: Vec<RingElement> = h.elements().iter().map(|&x| gr.group_element(x)).collect();
            let hom = c.stacked_hom(hs.len(), |i| hs.iter().flat_map(|y| c.bracket(&cgens[i], y)).collect());
            let mut bad = None;
            for delta in full.generators() {
                let target: Vec<i64> = hs.iter().flat_map(|y| delta.apply(y)).collect();
                if hom.solve(&target)?.is_none() {
                    bad = Some(images_json(gr, &delta));
                    break;
                }
            }
            let detail = json!({ "der_size": full.cardinality().to_string() });
            Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
        })?;
        if h.is_normal() {
            let hyp = "H is a normal torsion subgroup of G such that each prime p in pi(H) is invertible in R";
            out.claim(&format!("(ii) I_R(H) is a delta-ideal for delta in Der_R R[G], H = {label}"), hyp, Ok(sat), || {
                let ideal = gr.augmentation_ideal(&h)?;
                let mut bad = None;
                'outer: for delta in d_r.generators() {
                    for x in ideal.generators() {
                        if !ideal.contains(&delta.apply(&x)) {
                            bad = Some(json!({ "x": gr.format_element(&x), "delta": images_json(gr, &delta) }));
                            break 'outer;
                        }
                    }
                }
                Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), json!({ "ideal_size": ideal.cardinality().to_string() })))
            })?;
        }
    }
    Ok(())
}

fn l19(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing, rng: &mut ChaCha8Rng) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let c = gr.carrier_arc();
    let sat = inverts_all(r, &g.pi());
    let full = if sat { Some(full_der(ctx, &c)) } else { None };
    let space = || full.clone().expect("computed when the hypothesis holds");
    out.claim("(i) gt = tg implies alpha_{g,t} = 0 in delta(g), delta in Der R[G]", INVERTIBLE, Ok(sat), || {
        let d = space()?;
        let mut candidates = d.generators();
        let gens_count = candidates.len();
        if !d.is_zero() {
            candidates.extend((0..ctx.samples).map(|_| d.random(rng)));
        }
        let mut bad = None;
        'outer: for (i, delta) in candidates.iter().enumerate() {
            for x in 0..g.order() {
                if !check_coefficient_vanishing(gr, delta, x)? {
                    bad = Some(json!({ "candidate": i, "g": x, "images": images_json(gr, delta) }));
                    break 'outer;
                }
            }
        }
        let detail = json!({ "generators": gens_count, "samples": candidates.len() - gens_count });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })?;
    out.claim("(ii) delta(Z(G)) = 0 for delta in Der R[G]", INVERTIBLE, Ok(sat), || {
        let d = space()?;
        let center = g.center().elements();
        let bad = d
            .generators()
            .into_iter()
            .find(|delta| center.iter().any(|&z| !c.is_zero(&delta.apply(&gr.group_element(z)))));
        Ok(judged(bad.is_none(), || images_json(gr, bad.as_ref().unwrap()), json!({ "center_order": center.len() })))
    })
}

fn l25(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing, rng: &mut ChaCha8Rng) -> Result<()> {
    let c = gr.carrier();
    let max_k = 2 * gr.group().exponent().max(2) as u64;
    let mut pairs = Vec::new();
    let mut tries = 0;
    while pairs.len() < ctx.samples && tries < 20 * ctx.samples {
        tries += 1;
        let (x, y) = (random_element(c, rng), random_element(c, rng));
        if c.is_zero(&c.bracket(&c.bracket(&x, &y), &x)) {
            let k = rng.gen_range(1..=max_k);
            pairs.push((x, y, k));
        }
    }
    let hyp = "[[x, y], x] = 0 (rejection-sampled pairs)";
    out.claim("[x^k, y] = k x^(k-1) [x, y]", hyp, Ok(!pairs.is_empty()), || {
        let mut bad = None;
        for (x, y, k) in &pairs {
            if !commutator_power_identity_check(c, x, y, *k)? {
                bad = Some(json!({ "x": gr.format_element(x), "y": gr.format_element(y), "k": k }));
                break;
            }
        }
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), json!({ "accepted": pairs.len(), "tries": tries })))
    })
}

fn l26(out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let (r, g) = (gr.ring(), gr.group());
    let n = r.exponent() as usize;
    let divisible = n.gcd(&g.order()) == 1;
    let sat = inverts_all(r, &g.pi()) || divisible;
    let hyp = "G is a torsion group such that each p in pi(G) is invertible in R (respectively nR = 0 and G is n-divisible)";
    out.claim("G an Engel set in R[G] implies G abelian and Der_R R[G] = 0", hyp, Ok(sat), || {
        let report = engel_scan(gr);
        let detail = json!({ "engel": report.engel, "first_non_engel": report.first_non_engel });
        if !report.engel {
            return Ok(judged(true, || Value::Null, detail));
        }
        let d = der_r(gr)?;
        let holds = g.is_abelian() && d.is_zero();
        Ok(judged(holds, || json!({ "abelian": g.is_abelian(), "der_r_size": d.cardinality().to_string() }), detail))
    })
}

fn oracle_group_ring(ctx: &Ctx<'_>, out: &mut Out<'_>, gr: &GroupRing) -> Result<()> {
    let hyp = "candidate image space within the oracle cap";
    out.claim("der_R via the solver equals dense enumeration", hyp, Ok(true), || {
        let (o, count) = oracle_der_r(gr, ctx.caps.oracle)?;
        let s = der_r(gr)?;
        let holds = o.module() == s.module() && Some(count) == s.size();
        let detail = json!({ "solver_size": s.cardinality().to_string(), "oracle_count": count });
        Ok(judged(holds, || json!("solver and oracle disagree"), detail))
    })?;
    let c = gr.carrier_arc();
    out.claim("der of R[G] via the solver equals dense enumeration", hyp, Ok(true), || oracle_compare(ctx, &c))
}

fn oracle_compare(ctx: &Ctx<'_>, ring: &Arc<FiniteRing>) -> Result<Found> {
    let (o, count) = oracle_der(ring, ctx.caps.oracle)?;
    let s = full_der(ctx, ring)?;
    let holds = o.module() == s.module() && Some(count) == s.size();
    let detail = json!({ "solver_size": s.cardinality().to_string(), "oracle_count": count });
    Ok(judged(holds, || json!("solver and oracle disagree"), detail))
}

fn oracle_ring(ctx: &Ctx<'_>, out: &mut Out<'_>, ring: &Arc<FiniteRing>) -> Result<()> {
    let hyp = "candidate image space within the oracle cap";
    out.claim("der via the solver equals dense enumeration", hyp, Ok(true), || oracle_compare(ctx, ring))
}

fn l9(ctx: &Ctx<'_>, out: &mut Out<'_>, ring: &Arc<FiniteRing>) -> Result<()> {
    let hyp = "h is a solder of R";
    out.claim("solder consequences (i)-(vi) hold for every solder", hyp, Ok(true), || {
        let solders = enumerate_solders(ring, ctx.caps.solder)?;
        let mut bad = None;
        let mut checks = 0;
        let (mut central, mut derivations) = (0, 0);
        for (i, h) in solders.iter().enumerate() {
            if !is_solder(ring, h.values())? {
                bad = Some(json!({ "solder": i, "violations": ["enumerated map is not a solder"] }));
                break;
            }
            let rep = check_solder_properties(h)?;
            checks += rep.checks;
            central += usize::from(rep.central);
            derivations += usize::from(rep.delta_is_derivation);
            if !rep.is_clean() {
                bad = Some(json!({ "solder": i, "values": h.values(), "violations": rep.violations }));
                break;
            }
        }
        let detail = json!({ "solders": solders.len(), "central": central, "delta_derivations": derivations, "checks": checks });
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), detail))
    })
}

fn l23(ctx: &Ctx<'_>, out: &mut Out<'_>, b: &Arc<FiniteRing>) -> Result<()> {
    let cap = ctx.caps.enumeration;
    let structure = || -> Result<(DerivationSpace, crate::lie::DerivationLie, DerivationSpace)> {
        let d = full_der(ctx, b)?;
        let dl = der_as_lie(&d)?;
        let z = dl.subspace(&dl.lie.center());
        Ok((d, dl, z))
    };
    let st = structure();
    let get = || st.clone();
    let none = "B is a ring";
    out.claim("(i) delta in Z(Der B) implies delta(B) in Z(B)", none, Ok(true), || {
        let (_, _, z) = get()?;
        let bad = z.generators().into_iter().find(|d| d.images().iter().any(|v| !b.is_central(v)));
        Ok(judged(bad.is_none(), || json!(bad.unwrap().images()), json!({ "center_size": z.cardinality().to_string() })))
    })?;
    out.claim("(ii) delta in Z(Der B) implies delta(Z(B)) in ann Der B", none, Ok(true), || {
        let (d, _, z) = get()?;
        let gens = b.generators();
        let dg = d.generators();
        let mut bad = None;
        'outer: for zd in z.generators() {
            for a in b.center().generators() {
                let r = zd.apply(&a);
                if dg.iter().any(|e| gens.iter().any(|x| !b.is_zero(&b.mul(&r, &e.apply(x))))) {
                    bad = Some(json!({ "a": a, "delta_a": r }));
                    break 'outer;
                }
            }
        }
        Ok(judged(bad.is_none(), || bad.unwrap_or(Value::Null), json!({})))
    })?;
    let hyp_c = "B is commutative";
    out.claim("(iii)(a) a surjective delta in Z(Der B) forces B^2 = 0", hyp_c, Ok(b.is_commutative()), || {
        let (_, _, z) = get()?;
        let full = b.ambient().cardinality();
        let b_sq_zero = b.size() == Some(1);
        let surjective = z.elements(cap)?.into_iter().find(|d| {
            let hom = crate::linalg::Hom::new(b.ambient().clone(), b.ambient().clone(), d.images().to_vec());
            hom.map(|h| h.image().cardinality() == full).unwrap_or(false)
        });
        let holds = surjective.is_none() || b_sq_zero;
        Ok(judged(holds, || json!(surjective.map(|d| d.images().to_vec())), json!({})))
    })?;
    out.claim("(iii)(b) ann B = 0 implies Z(Der B) = 0", "B is commutative and ann B = 0", Ok(b.is_commutative()), || {
        let (_, _, z) = get()?;
        let detail = json!({ "center_size": z.cardinality().to_string() });
        // a unital commutative B has ann B = 0, yet derivations with values in a
        // square-zero ideal can all commute (ℤ/12[C2], δ(g) = 6)
        Ok(if z.is_zero() {
            judged(true, || Value::Null, detail)
        } else {
            Found {
                verdict: Verdict::Flagged,
                witness: Some(json!({ "central_derivation": z.generators()[0].images(), "note": "nonzero central derivation although ann B = 0" })),
                detail,
            }
        })
    })?;

    let assoc = FiniteLieRing::from_associative(b);
    let ider = || -> Result<FiniteLieRing> { Ok(der_as_lie(&inner_space(b))?.lie) };
    let ider = ider()?;
    out.claim("IDer B Lie nilpotent iff B Lie nilpotent; same for solvable", none, Ok(true), || {
        let holds = ider.is_nilpotent() == assoc.is_nilpotent() && ider.is_solvable() == assoc.is_solvable();
        let detail = json!({ "ider": lie_summary(&ider), "b_lie": lie_summary(&assoc) });
        Ok(judged(holds, || json!("verdicts differ"), detail))
    })?;
    out.claim("(iv) C(B) is contained in P(B)", "IDer B is Lie nilpotent", Ok(ider.is_nilpotent()), || {
        let radical = b.prime_radical(cap)?.radical;
        let comm = b.commutator_ideal();
        Ok(judged(comm.is_subset_of(&radical)?, || json!(comm.generators()), json!({})))
    })?;
    out.claim("(v) [B^(n), B] is contained in P(B) for some n", "IDer B is Lie solvable", Ok(ider.is_solvable()), || {
        let radical = b.prime_radical(cap)?.radical;
        let last = assoc.derived_series().pop().expect("series is nonempty");
        let br = assoc.bracket_span(&last, &assoc.full());
        Ok(judged(br.is_subset_of(&radical)?, || json!(br.generators()), json!({})))
    })?;
    let sat = b.is_semiprime(cap).map(|s| s && ider.is_solvable());
    out.claim("(vi) B is commutative", "B is semiprime and IDer B is solvable", sat, || {
        let ch = b.exponent();
        Ok(if b.is_commutative() {
            judged(true, || Value::Null, json!({}))
        } else if ch % 2 == 0 {
            Found {
                verdict: Verdict::Flagged,
                witness: Some(json!({ "characteristic": ch, "note": "noncommutative semiprime B with solvable IDer B in characteristic 2" })),
                detail: lie_summary(&ider),
            }
        } else {
            judged(false, || json!("B is not commutative"), lie_summary(&ider))
        })
    })
}

fn t5(ctx: &Ctx<'_>, out: &mut Out<'_>, b: &Arc<FiniteRing>) -> Result<()> {
    let hyp = "B is a semiprime ring";
    let sat = b.is_semiprime(ctx.caps.enumeration);
    let st = || -> Result<(bool, FiniteLieRing)> {
        let d = full_der(ctx, b)?;
        Ok((d.is_zero(), der_as_lie(&d)?.lie))
    };
    let computed = if matches!(sat, Ok(true)) { Some(st()) } else { None };
    let get = || computed.clone().expect("computed when semiprime");
    out.claim("Der B nilpotent implies Der B = 0", hyp, sat.clone(), || {
        let (zero, lie) = get()?;
        let holds = !lie.is_nilpotent() || zero;
        Ok(judged(holds, || lie_summary(&lie), lie_summary(&lie)))
    })?;
    out.claim("Der B solvable implies Der B = 0", hyp, sat, || {
        let (zero, lie) = get()?;
        let holds = !lie.is_solvable() || zero;
        let ch = b.exponent();
        Ok(if holds {
            judged(true, || Value::Null, lie_summary(&lie))
        } else if ch % 2 == 0 {
            Found {
                verdict: Verdict::Flagged,
                witness: Some(json!({ "characteristic": ch, "note": "nonzero solvable Der B in characteristic 2" })),
                detail: lie_summary(&lie),
            }
        } else {
            judged(false, || lie_summary(&lie), lie_summary(&lie))
        })
    })
}
