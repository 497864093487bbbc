//! Cyclic decompositions of quotients and submodules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::ambient::Ambient;
use super::hom::Hom;
use super::matrix::Matrix;
use super::snf::smith_normal_form;
use super::submodule::Submodule;

/// `source / sub ≅ ℤ/d₁ × … × ℤ/d_r`, computed by a Smith change of basis
/// of the relation lattice `sub + ⊕ nᵢℤ`.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: Ambient,
    target: Ambient,
    /// column `j` of the transform, reduced modulo `d_j`
    proj: Vec<Vec<i64>>,
    /// lift of each target generator, in source coordinates
    lifts: Vec<Vec<i64>>,
    sub: Submodule,
}

impl Quotient {
    pub fn new(sub: &Submodule) -> Self {
        let source = sub.ambient().clone();
        let k = source.rank();
        let mut rel: Vec<Vec<i64>> = sub.generators();
        for (i, &n) in source.orders().iter().enumerate() {
            let mut r = vec![0; k];
            r[i] = n;
            rel.push(r);
        }
        let s = smith_normal_form(&Matrix::<BigInt>::from_i64(k, &rel));
        let diag = s.d.diagonal();
        let mut orders = Vec::new();
        let mut proj = Vec::new();
        let mut lifts = Vec::new();
        for (j, dj) in diag.iter().enumerate() {
            if dj.is_one() {
                continue;
            }
            let d = dj.to_i64().expect("invariant factor divides the exponent");
            orders.push(d);
            proj.push(s.v.column(j).iter().map(|x| x.mod_floor(dj).to_i64().unwrap()).collect());
            let lift: Vec<i64> = s
                .v_inv
                .row(j)
                .iter()
                .zip(source.orders())
                .map(|(x, &n)| x.mod_floor(&BigInt::from(n)).to_i64().unwrap())
                .collect();
            lifts.push(lift);
        }
        let target = Ambient::new(orders).expect("invariant factors are valid orders");
        Quotient { source, target, proj, lifts, sub: sub.clone() }
    }

    pub fn source(&self) -> &Ambient {
        &self.source
    }

    pub fn target(&self) -> &Ambient {
        &self.target
    }

    pub fn kernel(&self) -> &Submodule {
        &self.sub
    }

    pub fn project(&self, x: &[i64]) -> Vec<i64> {
        self.proj
            .iter()
            .zip(self.target.orders())
            .map(|(col, &d)| x.iter().zip(col).fold(0i64, |acc, (a, b)| (acc + (a % d) * b).rem_euclid(d)))
            .collect()
    }

    pub fn lift(&self, y: &[i64]) -> Vec<i64> {
        let mut out = self.source.zero();
        for (&c, l) in y.iter().zip(&self.lifts) {
            self.source.add_scaled(&mut out, c, l);
        }
        out
    }

    pub fn lifts(&self) -> &[Vec<i64>] {
        &self.lifts
    }
}

/// A submodule viewed as a group in its own right: cyclic generators with
/// orders, and coordinates for each member.
#[derive(Clone, Debug)]
pub struct Presentation {
    sub: Submodule,
    relations: Quotient,
    gens: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn new(sub: &Submodule) -> Self {
        let amb = sub.ambient();
        let howell_gens = sub.generators();
        let gen_orders: Vec<i64> = howell_gens.iter().map(|g| amb.element_order(g)).collect();
        let free = Ambient::new(gen_orders).expect("element orders divide the exponent");
        let combine = Hom::new(free, amb.clone(), howell_gens.clone()).expect("orders annihilate generators");
        let relations = Quotient::new(&combine.kernel());
        let gens = relations.lifts().iter().map(|l| combine.apply(l)).collect();
        Presentation { sub: sub.clone(), relations, gens }
    }

    /// The abstract group `ℤ/d₁ × … × ℤ/d_r`.
    pub fn ambient(&self) -> &Ambient {
        self.relations.target()
    }

    pub fn submodule(&self) -> &Submodule {
        &self.sub
    }

    /// Generators of the submodule matching the cyclic factors.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.gens
    }

    pub fn coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let qs = self.sub.coefficients(v)?;
        let qs = self.relations.source().reduced(qs);
        Some(self.relations.project(&qs))
    }

    pub fn embed(&self, y: &[i64]) -> Vec<i64> {
        let amb = self.sub.ambient();
        let mut out = amb.zero();
        for (&c, g) in y.iter().zip(&self.gens) {
            amb.add_scaled(&mut out, c, g);
        }
        out
    }
}
