use std::collections::HashMap;
use std::hash::Hash;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Builds a Cayley table from an element list (identity first) and a product.
fn from_elements<T: Clone + Eq + Hash>(elems: &[T], op: impl Fn(&T, &T) -> T, name: String) -> Result<FiniteGroup> {
    let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in elems {
        for b in elems {
            let c = op(a, b);
            table.push(*index.get(&c).ok_or_else(|| Error::NotAGroup("product escapes the element list".into()))?);
        }
    }
    FiniteGroup::from_flat(n, table, name)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

#[allow(clippy::ptr_arg)]
fn compose(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
    // (ab)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group of order 0".into()));
        }
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        Self::from_flat(n, table, format!("C{n}"))
    }

    /// Dihedral group of order `2n`; element `rⁱsʲ` has index `i + n·j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("dihedral group needs n >= 2".into()));
        }
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
        from_elements(
            &elems,
            |&(a, b), &(c, d)| {
                let rot = if b == 0 { a + c } else { a + n - c };
                (rot % n, (b + d) % 2)
            },
            format!("D{n}"),
        )
    }

    /// Quaternion group `⟨a, b | a⁴ = 1, b² = a², b⁻¹ab = a⁻¹⟩`; `aⁱbʲ` has index `i + 4j`.
    pub fn quaternion8() -> Self {
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..4).map(move |i| (i, j))).collect();
        from_elements(
            &elems,
            |&(i, j), &(k, l)| {
                let (a, b) = if j == 0 { (i + k, l) } else { (i + 4 - k, 1 + l) };
                if b == 2 {
                    ((a + 2) % 4, 0)
                } else {
                    (a % 4, b)
                }
            },
            "Q8".into(),
        )
        .expect("Q8 table is a group")
    }

    /// Symmetric group on `n ≤ 5` points, permutations in lexicographic order.
    pub fn symmetric(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidParameter(format!("symmetric group on {n} points not supported")));
        }
        from_elements(&permutations(n), compose, format!("S{n}"))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidParameter(format!("alternating group on {n} points not supported")));
        }
        let even: Vec<_> = permutations(n).into_iter().filter(|p| is_even(p)).collect();
        from_elements(&even, compose, format!("A{n}"))
    }

    /// `(ℤ/p)^k`
    pub fn elementary_abelian(p: usize, k: usize) -> Result<Self> {
        if !crate::scalar::is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let mut g = Self::trivial();
        for _ in 0..k {
            g = Self::direct_product(&g, &Self::cyclic(p)?);
        }
        Ok(g.with_name(format!("E({p},{k})")))
    }

    /// Upper unitriangular 3×3 matrices over `ℤ/p`.
    pub fn heisenberg(p: usize) -> Result<Self> {
        if !crate::scalar::is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let elems: Vec<(usize, usize, usize)> =
            (0..p).flat_map(|c| (0..p).flat_map(move |b| (0..p).map(move |a| (a, b, c)))).collect();
        from_elements(
            &elems,
            |&(a, b, c), &(x, y, z)| ((a + x) % p, (b + y) % p, (c + z + a * y) % p),
            format!("Heis{p}"),
        )
    }

    /// `G × H`; the pair `(g, h)` has index `g·|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order(), h.order());
        let n = m * k;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(g.mul(a / k, b / k) * k + h.mul(a % k, b % k));
            }
        }
        let name = match (g.name.as_str(), h.name.as_str()) {
            ("C1", other) | (other, "C1") if !other.is_empty() => other.to_string(),
            (a, b) => format!("{a}x{b}"),
        };
        Self::from_flat(n, table, name).expect("product of groups is a group")
    }

    /// Product of cyclic groups of the given orders.
    pub fn abelian(orders: &[usize]) -> Result<Self> {
        let mut g = Self::trivial();
        for &n in orders {
            g = Self::direct_product(&g, &Self::cyclic(n)?);
        }
        Ok(g)
    }
}
