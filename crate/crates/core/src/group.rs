//! Finite abelian groups as explicit direct sums of cyclic factors.
//!
//! A group is a list of cyclic orders, kept exactly as the user gave them
//! (no silent normalization into invariant factors); elements are residue
//! vectors. Everything here is an immutable value and all operations are
//! pure, so concurrent use is unrestricted.

use crate::arith::{gcd, inv_mod, lcm};
use crate::config::Caps;
use crate::error::{Error, Result};
use std::fmt;

/// A finite abelian group `Z/n1 + ... + Z/nk`, each `ni >= 2`.
///
/// The empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

/// An element of a [`FinAbGroup`]: one residue per cyclic factor.
///
/// Elements carry no back-pointer to their group; all arithmetic goes
/// through group methods, which debug-check the rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FinAbGroup {
    /// Group with the given cyclic factor orders, in the given order.
    pub fn new(orders: Vec<u64>) -> Result<FinAbGroup> {
        let mut product: u64 = 1;
        for &n in &orders {
            if n < 2 {
                return Err(Error::InvalidInput(format!(
                    "cyclic factor order {n} must be at least 2"
                )));
            }
            product = product
                .checked_mul(n)
                .ok_or_else(|| Error::InvalidInput("group order overflows u64".into()))?;
        }
        Ok(FinAbGroup { orders })
    }

    /// The trivial group (order 1, no factors).
    pub fn trivial() -> FinAbGroup {
        FinAbGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// |A|, the product of the factor orders.
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// exponent(A) = lcm of the factor orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    /// |A/2A| = product of gcd(ni, 2).
    pub fn two_quotient_order(&self) -> u64 {
        self.orders.iter().map(|&n| gcd(n, 2)).product()
    }

    /// |S^2(A)|, computed from |S^2(Z/n)| = n and
    /// |S^2(A + B)| = |S^2(A)| |S^2(B)| |A x B| with |Z/m x Z/n| = gcd(m, n).
    pub fn sym_square_order(&self) -> u64 {
        let mut total: u64 = self.orders.iter().product();
        for i in 0..self.orders.len() {
            for j in i + 1..self.orders.len() {
                total *= gcd(self.orders[i], self.orders[j]);
            }
        }
        total
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.orders.len()],
        }
    }

    /// The i-th standard generator e_i.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.orders.len()];
        coords[i] = 1 % self.orders[i];
        GroupElement { coords }
    }

    /// Element from explicit coordinates, range-checked.
    pub fn element(&self, coords: Vec<u64>) -> Result<GroupElement> {
        if coords.len() != self.orders.len()
            || coords.iter().zip(&self.orders).any(|(&c, &n)| c >= n)
        {
            return Err(Error::InvalidElement);
        }
        Ok(GroupElement { coords })
    }

    /// Element from coordinates reduced modulo the factor orders.
    pub fn element_mod(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.orders.len() {
            return Err(Error::InvalidElement);
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.coords.len(), self.orders.len());
        debug_assert_eq!(b.coords.len(), self.orders.len());
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &n)| if x == 0 { 0 } else { n - x })
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupElement, m: i64) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &n)| {
                    let m = m.rem_euclid(n as i64) as u128;
                    ((x as u128 * m) % n as u128) as u64
                })
                .collect(),
        }
    }

    /// Order of an element: lcm over factors of ni / gcd(ni, xi).
    pub fn order_of(&self, a: &GroupElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &n)| lcm(acc, n / gcd(n, x)))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.coords.iter().all(|&x| x == 0)
    }

    /// Lexicographic index of an element (first coordinate most significant).
    pub fn index_of(&self, a: &GroupElement) -> usize {
        debug_assert_eq!(a.coords.len(), self.orders.len());
        let mut idx: usize = 0;
        for (&c, &n) in a.coords.iter().zip(&self.orders) {
            idx = idx * n as usize + c as usize;
        }
        idx
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0u64; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            let n = self.orders[i] as usize;
            coords[i] = (idx % n) as u64;
            idx /= n;
        }
        GroupElement { coords }
    }

    /// Index-level addition, avoiding element allocation in hot loops.
    pub fn index_add(&self, mut i: usize, mut j: usize) -> usize {
        let mut acc = 0usize;
        let mut weight = 1usize;
        for &n in self.orders.iter().rev() {
            let n = n as usize;
            acc += ((i % n) + (j % n)) % n * weight;
            i /= n;
            j /= n;
            weight *= n;
        }
        acc
    }

    /// All elements in lexicographic order; the identity comes first.
    pub fn enumerate_elements(&self, caps: &Caps) -> Result<Vec<GroupElement>> {
        caps.check("group order", self.order(), caps.max_group_order)?;
        let n = self.order() as usize;
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    /// Every automorphism of the group, each exactly once, in the
    /// deterministic order induced by lexicographic generator images.
    pub fn enumerate_automorphisms(&self, caps: &Caps) -> Result<Vec<GroupHom>> {
        caps.check("automorphism group order", self.order(), caps.max_aut_group_order)?;
        enumerate_isomorphisms_filtered(self, self, caps, &mut |_, _, _| true, false)
    }

    /// Every isomorphism onto `other` (empty when none exists), in the same
    /// deterministic order as automorphism enumeration.
    pub fn enumerate_isomorphisms(&self, other: &FinAbGroup, caps: &Caps) -> Result<Vec<GroupHom>> {
        caps.check("isomorphism group order", self.order(), caps.max_aut_group_order)?;
        enumerate_isomorphisms_filtered(self, other, caps, &mut |_, _, _| true, false)
    }

    /// The canonical split (A_2, A_odd) with |A_2| a 2-power and |A_odd| odd.
    pub fn decompose_two_odd(&self) -> (FinAbGroup, FinAbGroup) {
        let split = self.two_odd_split();
        (split.two, split.odd)
    }

    /// CRT split of every factor into its 2-part and odd part, together with
    /// the isomorphism from the split group (2-parts first) back onto self.
    pub fn two_odd_split(&self) -> TwoOddSplit {
        let mut two_orders = Vec::new();
        let mut odd_orders = Vec::new();
        let mut two_gens: Vec<GroupElement> = Vec::new();
        let mut odd_gens: Vec<GroupElement> = Vec::new();
        for (i, &n) in self.orders.iter().enumerate() {
            let mut a = 0u32;
            let mut m = n;
            while m % 2 == 0 {
                m /= 2;
                a += 1;
            }
            let two_part = n / m;
            if two_part > 1 {
                two_orders.push(two_part);
                // e in Z/n with e = 1 mod 2^a, e = 0 mod m
                let e = if m == 1 { 1 } else { m * inv_mod(m % two_part, two_part) % n };
                let mut coords = vec![0; self.orders.len()];
                coords[i] = e;
                two_gens.push(GroupElement { coords });
            }
            if m > 1 {
                odd_orders.push(m);
                let e = if two_part == 1 {
                    1
                } else {
                    two_part * inv_mod(two_part % m, m) % n
                };
                let mut coords = vec![0; self.orders.len()];
                coords[i] = e;
                odd_gens.push(GroupElement { coords });
            }
            let _ = a;
        }
        let two = FinAbGroup { orders: two_orders };
        let odd = FinAbGroup { orders: odd_orders };
        let mut split_orders = two.orders.clone();
        split_orders.extend_from_slice(&odd.orders);
        let split = FinAbGroup { orders: split_orders };
        let mut images = two_gens;
        images.extend(odd_gens);
        let iso = GroupHom::new(split.clone(), self.clone(), images)
            .expect("CRT generators have the right orders");
        TwoOddSplit { two, odd, split, iso }
    }

    /// For each prime p dividing |A|: the p-primary part as an abstract group
    /// together with its embedding into self.
    pub fn primary_parts(&self) -> Vec<PrimaryPart> {
        let mut primes: Vec<u64> = Vec::new();
        for &n in &self.orders {
            let mut m = n;
            let mut d = 2;
            while d * d <= m {
                if m % d == 0 {
                    if !primes.contains(&d) {
                        primes.push(d);
                    }
                    while m % d == 0 {
                        m /= d;
                    }
                }
                d += 1;
            }
            if m > 1 && !primes.contains(&m) {
                primes.push(m);
            }
        }
        primes.sort_unstable();
        primes
            .into_iter()
            .map(|p| {
                let mut orders = Vec::new();
                let mut images = Vec::new();
                for (i, &n) in self.orders.iter().enumerate() {
                    let mut pk = 1u64;
                    let mut m = n;
                    while m % p == 0 {
                        m /= p;
                        pk *= p;
                    }
                    if pk > 1 {
                        orders.push(pk);
                        // (n / p^k) * e_i has order exactly p^k
                        let mut coords = vec![0; self.orders.len()];
                        coords[i] = n / pk;
                        images.push(GroupElement { coords });
                    }
                }
                let part = FinAbGroup { orders };
                let embedding = GroupHom::new(part.clone(), self.clone(), images)
                    .expect("primary generators have the right orders");
                PrimaryPart { p, part, embedding }
            })
            .collect()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// Result of [`FinAbGroup::two_odd_split`].
#[derive(Debug, Clone)]
pub struct TwoOddSplit {
    /// The 2-part as an abstract group.
    pub two: FinAbGroup,
    /// The odd part as an abstract group.
    pub odd: FinAbGroup,
    /// two + odd, with the 2-part factors first.
    pub split: FinAbGroup,
    /// Isomorphism split -> original group.
    pub iso: GroupHom,
}

/// A p-primary part of a group with its embedding.
#[derive(Debug, Clone)]
pub struct PrimaryPart {
    pub p: u64,
    pub part: FinAbGroup,
    pub embedding: GroupHom,
}

/// A homomorphism between two finite abelian groups, stored as the images
/// of the standard generators of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    /// Well-defined iff order(images[i]) divides the i-th factor order.
    pub fn new(
        domain: FinAbGroup,
        codomain: FinAbGroup,
        images: Vec<GroupElement>,
    ) -> Result<GroupHom> {
        if images.len() != domain.rank() {
            return Err(Error::InvalidInput(
                "one generator image required per domain factor".into(),
            ));
        }
        for (i, img) in images.iter().enumerate() {
            if img.coords.len() != codomain.rank()
                || img.coords.iter().zip(codomain.orders()).any(|(&c, &n)| c >= n)
            {
                return Err(Error::InvalidElement);
            }
            if domain.orders[i] % codomain.order_of(img) != 0 {
                return Err(Error::NotAHomomorphism { index: i });
            }
        }
        Ok(GroupHom {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(group: &FinAbGroup) -> GroupHom {
        let images = (0..group.rank()).map(|i| group.generator(i)).collect();
        GroupHom {
            domain: group.clone(),
            codomain: group.clone(),
            images,
        }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.coords.len(), self.domain.rank());
        let mut acc = self.codomain.zero();
        for (&x, img) in a.coords.iter().zip(&self.images) {
            if x != 0 {
                acc = self.codomain.add(&acc, &self.codomain.scale(img, x as i64));
            }
        }
        acc
    }

    /// other after self (self: A->B, other: B->C).
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.codomain != other.domain {
            return Err(Error::GroupMismatch);
        }
        let images = self.images.iter().map(|im| other.apply(im)).collect();
        GroupHom::new(self.domain.clone(), other.codomain.clone(), images)
    }

    /// True iff the map hits every codomain element exactly once.
    pub fn is_bijective(&self) -> bool {
        if self.domain.order() != self.codomain.order() {
            return false;
        }
        let n = self.domain.order() as usize;
        let mut seen = vec![false; n];
        let mut count = 0usize;
        for i in 0..n {
            let img = self.apply(&self.domain.element_at(i));
            let k = self.codomain.index_of(&img);
            if !seen[k] {
                seen[k] = true;
                count += 1;
            }
        }
        count == n
    }

    /// Inverse of a bijective hom.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::InvalidInput("hom is not bijective".into()));
        }
        let n = self.domain.order() as usize;
        let mut preimage = vec![0usize; n];
        for i in 0..n {
            let img = self.apply(&self.domain.element_at(i));
            preimage[self.codomain.index_of(&img)] = i;
        }
        let images = (0..self.codomain.rank())
            .map(|i| {
                let gen_idx = self.codomain.index_of(&self.codomain.generator(i));
                self.domain.element_at(preimage[gen_idx])
            })
            .collect();
        GroupHom::new(self.codomain.clone(), self.domain.clone(), images)
    }

    /// Index-level table of the map: position i holds index_of(apply(element_at(i))).
    pub fn index_table(&self) -> Vec<usize> {
        let n = self.domain.order() as usize;
        (0..n)
            .map(|i| self.codomain.index_of(&self.apply(&self.domain.element_at(i))))
            .collect()
    }
}

/// Backtracking enumeration of isomorphisms domain -> codomain whose
/// generator images pass `level_filter`. Candidates are tried in element
/// index order, so results are deterministic and `stop_at_first` returns
/// the lexicographically first witness.
pub(crate) fn enumerate_isomorphisms_filtered(
    domain: &FinAbGroup,
    codomain: &FinAbGroup,
    _caps: &Caps,
    level_filter: &mut dyn FnMut(usize, &GroupElement, &[GroupElement]) -> bool,
    stop_at_first: bool,
) -> Result<Vec<GroupHom>> {
    if domain.order() != codomain.order() {
        return Ok(Vec::new());
    }
    let n = codomain.order() as usize;
    let elements: Vec<GroupElement> = (0..n).map(|i| codomain.element_at(i)).collect();
    // candidate images per generator: codomain elements of compatible order
    let candidates: Vec<Vec<usize>> = (0..domain.rank())
        .map(|i| {
            (0..n)
                .filter(|&k| domain.orders()[i] % codomain.order_of(&elements[k]) == 0)
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut chosen: Vec<GroupElement> = Vec::with_capacity(domain.rank());
    fn recurse(
        domain: &FinAbGroup,
        codomain: &FinAbGroup,
        elements: &[GroupElement],
        candidates: &[Vec<usize>],
        chosen: &mut Vec<GroupElement>,
        level_filter: &mut dyn FnMut(usize, &GroupElement, &[GroupElement]) -> bool,
        stop_at_first: bool,
        found: &mut Vec<GroupHom>,
    ) -> bool {
        let level = chosen.len();
        if level == domain.rank() {
            let hom = GroupHom::new(domain.clone(), codomain.clone(), chosen.clone())
                .expect("candidate orders were prefiltered");
            if hom.is_bijective() {
                found.push(hom);
                return stop_at_first;
            }
            return false;
        }
        for &k in &candidates[level] {
            if level_filter(level, &elements[k], chosen) {
                chosen.push(elements[k].clone());
                let stop = recurse(
                    domain,
                    codomain,
                    elements,
                    candidates,
                    chosen,
                    level_filter,
                    stop_at_first,
                    found,
                );
                chosen.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
    recurse(
        domain,
        codomain,
        &elements,
        &candidates,
        &mut chosen,
        level_filter,
        stop_at_first,
        &mut found,
    );
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn enumerate_z2() {
        let g = FinAbGroup::new(vec![2]).unwrap();
        let els = g.enumerate_elements(&caps()).unwrap();
        assert_eq!(els.len(), 2);
        assert_eq!(els[0].coords(), &[0]);
        assert_eq!(els[1].coords(), &[1]);
    }

    #[test]
    fn enumerate_z2z2_and_z3z4() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let els = g.enumerate_elements(&caps()).unwrap();
        assert_eq!(els.len(), 4);
        assert!(g.is_zero(&els[0]));

        let h = FinAbGroup::new(vec![3, 4]).unwrap();
        assert_eq!(h.enumerate_elements(&caps()).unwrap().len(), 12);
    }

    #[test]
    fn element_cap() {
        let g = FinAbGroup::new(vec![5000]).unwrap();
        assert!(matches!(
            g.enumerate_elements(&caps()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn index_roundtrip_and_add() {
        let g = FinAbGroup::new(vec![3, 4, 2]).unwrap();
        for i in 0..g.order() as usize {
            assert_eq!(g.index_of(&g.element_at(i)), i);
            for j in 0..g.order() as usize {
                let sum = g.add(&g.element_at(i), &g.element_at(j));
                assert_eq!(g.index_add(i, j), g.index_of(&sum));
            }
        }
    }

    #[test]
    fn orders_of_elements() {
        let g = FinAbGroup::new(vec![4, 6]).unwrap();
        assert_eq!(g.order_of(&g.zero()), 1);
        assert_eq!(g.order_of(&g.element(vec![2, 0]).unwrap()), 2);
        assert_eq!(g.order_of(&g.element(vec![1, 1]).unwrap()), 12);
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn automorphism_counts() {
        // (Z/3)^x has order 2
        let g = FinAbGroup::new(vec![3]).unwrap();
        assert_eq!(g.enumerate_automorphisms(&caps()).unwrap().len(), 2);
        // units mod 4
        let g = FinAbGroup::new(vec![4]).unwrap();
        assert_eq!(g.enumerate_automorphisms(&caps()).unwrap().len(), 2);
    }

    #[test]
    fn automorphisms_z2z2_match_bruteforce() {
        // independent oracle: all 16 maps (Z/2)^2 -> (Z/2)^2 given by generator
        // images, counting the bijective ones
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let els = g.enumerate_elements(&caps()).unwrap();
        let mut oracle = 0;
        for a in 0..4usize {
            for b in 0..4usize {
                let mut seen = [false; 4];
                for x0 in 0..2usize {
                    for x1 in 0..2usize {
                        let mut idx = 0;
                        if x0 == 1 {
                            idx = g.index_add(idx, a);
                        }
                        if x1 == 1 {
                            idx = g.index_add(idx, b);
                        }
                        seen[idx] = true;
                    }
                }
                if seen.iter().all(|&s| s) {
                    oracle += 1;
                }
            }
        }
        assert_eq!(oracle, 6);
        assert_eq!(g.enumerate_automorphisms(&caps()).unwrap().len(), oracle);
        let _ = els;
    }

    #[test]
    fn automorphisms_form_group_small() {
        for orders in [vec![2, 2], vec![4], vec![2, 4], vec![3, 3], vec![6]] {
            let g = FinAbGroup::new(orders).unwrap();
            let auts = g.enumerate_automorphisms(&caps()).unwrap();
            for a in &auts {
                assert!(auts.contains(&a.inverse().unwrap()));
                for b in &auts {
                    assert!(auts.contains(&a.then(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn sym_square_orders() {
        assert_eq!(FinAbGroup::new(vec![7]).unwrap().sym_square_order(), 7);
        assert_eq!(FinAbGroup::new(vec![2, 2]).unwrap().sym_square_order(), 8);
        assert_eq!(FinAbGroup::new(vec![3, 4]).unwrap().sym_square_order(), 12);
    }

    #[test]
    fn two_quotient_matches_direct_enumeration() {
        for orders in [vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4], vec![3, 3]] {
            let g = FinAbGroup::new(orders).unwrap();
            let els = g.enumerate_elements(&caps()).unwrap();
            // direct quotient count: |A| / |2A|
            let mut doubled: Vec<usize> = els.iter().map(|a| g.index_of(&g.scale(a, 2))).collect();
            doubled.sort_unstable();
            doubled.dedup();
            assert_eq!(g.two_quotient_order(), g.order() / doubled.len() as u64);
        }
    }

    #[test]
    fn two_odd_split_z6() {
        let g = FinAbGroup::new(vec![6]).unwrap();
        let (two, odd) = g.decompose_two_odd();
        assert_eq!(two.orders(), &[2]);
        assert_eq!(odd.orders(), &[3]);
        assert_eq!(two.order() * odd.order(), g.order());
        let split = g.two_odd_split();
        assert!(split.iso.is_bijective());
    }

    #[test]
    fn two_odd_split_mixed() {
        let g = FinAbGroup::new(vec![12, 5, 8]).unwrap();
        let split = g.two_odd_split();
        assert_eq!(split.two.orders(), &[4, 8]);
        assert_eq!(split.odd.orders(), &[3, 5]);
        assert!(split.iso.is_bijective());
        // the iso restricted to generators keeps orders
        for (i, img) in split.iso.images().iter().enumerate() {
            assert_eq!(g.order_of(img), split.split.orders()[i]);
        }
    }

    #[test]
    fn primary_parts_cover_group() {
        let g = FinAbGroup::new(vec![12, 45]).unwrap();
        let parts = g.primary_parts();
        let ps: Vec<u64> = parts.iter().map(|p| p.p).collect();
        assert_eq!(ps, vec![2, 3, 5]);
        let product: u64 = parts.iter().map(|p| p.part.order()).product();
        assert_eq!(product, g.order());
        for part in &parts {
            for (i, img) in part.embedding.images().iter().enumerate() {
                assert_eq!(g.order_of(img), part.part.orders()[i]);
            }
        }
    }

    #[test]
    fn hom_validation() {
        let d = FinAbGroup::new(vec![2]).unwrap();
        let c = FinAbGroup::new(vec![4]).unwrap();
        // 1 in Z/4 has order 4, which does not divide 2
        assert!(matches!(
            GroupHom::new(d.clone(), c.clone(), vec![c.element(vec![1]).unwrap()]),
            Err(Error::NotAHomomorphism { index: 0 })
        ));
        let ok = GroupHom::new(d, c.clone(), vec![c.element(vec![2]).unwrap()]).unwrap();
        assert!(!ok.is_bijective());
    }

    #[test]
    fn trivial_group() {
        let g = FinAbGroup::trivial();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.enumerate_elements(&caps()).unwrap().len(), 1);
        assert_eq!(g.enumerate_automorphisms(&caps()).unwrap().len(), 1);
    }
}
