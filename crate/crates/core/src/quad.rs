//! Quadratic forms q: A -> Q/Z, their bilinear polarizations, the trace of
//! an abelian 3-cocycle, and full enumeration.
//!
//! A quadratic form satisfies q(a) = q(-a) and the polarization identity,
//! equivalently b_q(a,b) = q(a+b) - q(a) - q(b) is symmetric biadditive.
//! The trace (omega, c) -> [a -> c(a,a)] identifies gauge classes of
//! abelian 3-cocycles with quadratic forms, which is why most classification
//! work in this crate happens at the form level.

use crate::cochain::AbelianThreeCocycle;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FinAbGroup, GroupElement, GroupHom};
use crate::qz::QZ;

/// A quadratic form stored as a total value table over the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    group: FinAbGroup,
    values: Vec<QZ>,
}

/// A symmetric biadditive form stored as a total table over A x A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    group: FinAbGroup,
    values: Vec<QZ>,
}

/// True iff the candidate value table satisfies both quadratic-form
/// identities on the whole group: q(a) = q(-a), and for all a, b, c
/// q(a+b+c) - q(b+c) - q(a+c) - q(a+b) + q(a) + q(b) + q(c) = 0.
pub fn is_quadratic(group: &FinAbGroup, values: &[QZ]) -> bool {
    let n = group.order() as usize;
    if values.len() != n {
        return false;
    }
    if !values[0].is_zero() {
        return false;
    }
    for i in 0..n {
        let neg = group.index_of(&group.neg(&group.element_at(i)));
        if values[i] != values[neg] {
            return false;
        }
    }
    let add = crate::cochain::add_table(group);
    for a in 0..n {
        for b in 0..n {
            let ab = add[a * n + b];
            for c in 0..n {
                let bc = add[b * n + c];
                let ac = add[a * n + c];
                let abc = add[ab * n + c];
                let s = values[abc] - values[bc] - values[ac] - values[ab]
                    + values[a]
                    + values[b]
                    + values[c];
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

impl QuadraticForm {
    /// Validate a value table as a quadratic form.
    pub fn try_new(group: FinAbGroup, values: Vec<QZ>) -> Result<QuadraticForm> {
        if is_quadratic(&group, &values) {
            Ok(QuadraticForm { group, values })
        } else {
            Err(Error::NotQuadratic)
        }
    }

    pub fn zero(group: FinAbGroup) -> QuadraticForm {
        let n = group.order() as usize;
        QuadraticForm {
            group,
            values: vec![QZ::zero(); n],
        }
    }

    /// Compact constructor from generator values and cross pairings:
    /// q(x) = sum_i x_i^2 g_i + sum_{i<j} x_i x_j f_ij on integer
    /// representatives. Generator values must satisfy the cyclic constraint
    /// (denominator dividing n_i for odd n_i, 2 n_i for even), cross terms
    /// must be gcd-torsion.
    pub fn from_spec(
        group: FinAbGroup,
        gen_values: &[QZ],
        cross: &[(usize, usize, QZ)],
    ) -> Result<QuadraticForm> {
        let k = group.rank();
        if gen_values.len() != k {
            return Err(Error::InvalidInput(format!(
                "expected {k} generator values, got {}",
                gen_values.len()
            )));
        }
        for (i, g) in gen_values.iter().enumerate() {
            let n = group.orders()[i];
            let bound = if n % 2 == 0 { 2 * n } else { n };
            if bound % g.denom() != 0 {
                return Err(Error::NotQuadratic);
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, f) in cross {
            if i >= j || j >= k {
                return Err(Error::InvalidInput(format!(
                    "cross pairing indices ({i},{j}) out of order or range"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidInput(format!(
                    "duplicate cross pairing ({i},{j})"
                )));
            }
            let g = crate::arith::gcd(group.orders()[i], group.orders()[j]);
            if g % f.denom() != 0 {
                return Err(Error::NotQuadratic);
            }
        }
        let n = group.order() as usize;
        let mut values = vec![QZ::zero(); n];
        for (idx, slot) in values.iter_mut().enumerate() {
            let e = group.element_at(idx);
            let x = e.coords();
            let mut acc = QZ::zero();
            for (i, &g) in gen_values.iter().enumerate() {
                acc += g.scale((x[i] * x[i]) as i64);
            }
            for &(i, j, f) in cross {
                acc += f.scale((x[i] * x[j]) as i64);
            }
            *slot = acc;
        }
        debug_assert!(is_quadratic(&group, &values));
        Ok(QuadraticForm { group, values })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn value(&self, a: &GroupElement) -> QZ {
        self.values[self.group.index_of(a)]
    }

    pub fn value_at_index(&self, i: usize) -> QZ {
        self.values[i]
    }

    pub fn values(&self) -> &[QZ] {
        &self.values
    }

    /// Pointwise sum; quadratic forms are a group under addition.
    pub fn add(&self, other: &QuadraticForm) -> Result<QuadraticForm> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(QuadraticForm {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &QuadraticForm) -> Result<QuadraticForm> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(QuadraticForm {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// The symmetric bilinear form b_q(a,b) = q(a+b) - q(a) - q(b).
    pub fn polarize(&self) -> BilinearForm {
        let n = self.group.order() as usize;
        let mut values = vec![QZ::zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                let ab = self.group.index_add(a, b);
                values[a * n + b] = self.values[ab] - self.values[a] - self.values[b];
            }
        }
        BilinearForm {
            group: self.group.clone(),
            values,
        }
    }

    /// True iff order(a) * q(a) = 0 for every element: membership in the
    /// subgroup corresponding to the kernel of the suspension.
    pub fn in_quad_zero(&self) -> bool {
        let n = self.group.order() as usize;
        (0..n).all(|i| {
            let o = self.group.order_of(&self.group.element_at(i));
            self.values[i].scale(o as i64).is_zero()
        })
    }

    /// Pull the form back along a homomorphism into its group.
    pub fn pullback(&self, hom: &GroupHom) -> Result<QuadraticForm> {
        if hom.codomain() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let map = hom.index_table();
        let values = map.iter().map(|&k| self.values[k]).collect();
        QuadraticForm::try_new(hom.domain().clone(), values)
    }
}

impl BilinearForm {
    /// Validate a table as a symmetric biadditive form.
    pub fn try_new(group: FinAbGroup, values: Vec<QZ>) -> Result<BilinearForm> {
        let n = group.order() as usize;
        if values.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "bilinear table has {} entries, group needs {}",
                values.len(),
                n * n
            )));
        }
        let form = BilinearForm { group, values };
        if !form.is_symmetric() || !form.is_biadditive() {
            return Err(Error::NotBiadditive);
        }
        Ok(form)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn value(&self, a: &GroupElement, b: &GroupElement) -> QZ {
        let n = self.group.order() as usize;
        self.values[self.group.index_of(a) * n + self.group.index_of(b)]
    }

    pub fn value_at_indices(&self, a: usize, b: usize) -> QZ {
        self.values[a * self.group.order() as usize + b]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.group.order() as usize;
        (0..n).all(|a| (0..n).all(|b| self.values[a * n + b] == self.values[b * n + a]))
    }

    pub fn is_biadditive(&self) -> bool {
        let n = self.group.order() as usize;
        let add = crate::cochain::add_table(&self.group);
        for a in 0..n {
            for b in 0..n {
                let ab = add[a * n + b];
                for c in 0..n {
                    let lhs = self.values[ab * n + c];
                    if lhs != self.values[a * n + c] + self.values[b * n + c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The radical {a : b(a, x) = 0 for all x}, as element indices.
    pub fn radical(&self) -> Vec<usize> {
        let n = self.group.order() as usize;
        (0..n)
            .filter(|&a| (0..n).all(|x| self.values[a * n + x].is_zero()))
            .collect()
    }

    /// Non-degeneracy: the radical is trivial.
    pub fn is_nondegenerate(&self) -> bool {
        self.radical() == [0]
    }
}

/// The trace of an abelian 3-cocycle: q(a) = c(a, a). By the trace
/// isomorphism this is always a quadratic form.
pub fn trace(t: &AbelianThreeCocycle) -> QuadraticForm {
    let group = t.group().clone();
    let n = group.order() as usize;
    let values: Vec<QZ> = (0..n)
        .map(|a| t.braiding().value_at_indices(&[a, a]))
        .collect();
    debug_assert!(is_quadratic(&group, &values));
    QuadraticForm { group, values }
}

/// Trace of raw tables; fails with [`Error::NotACocycle`] unless the pair
/// passes the pentagon and hexagon checks.
pub fn trace_of_tables(
    omega: crate::cochain::Cochain,
    c: crate::cochain::Cochain,
) -> Result<QuadraticForm> {
    let t = AbelianThreeCocycle::try_new(omega, c).map_err(|_| Error::NotACocycle)?;
    Ok(trace(&t))
}

/// All quadratic forms on the group, built factor by factor: cyclic
/// generator values m/n (odd n) or m/2n (even n) combined with one
/// gcd-torsion cross pairing per factor pair. Output order is lexicographic
/// in (generator choices, cross choices), so the zero form comes first and
/// the result is deterministic. The count always equals |A/2A| * |S^2(A)|.
pub fn enumerate_quadratic_forms(group: &FinAbGroup, caps: &Caps) -> Result<Vec<QuadraticForm>> {
    caps.check("group order", group.order(), caps.max_group_order)?;
    let k = group.rank();
    let gen_moduli: Vec<u64> = group
        .orders()
        .iter()
        .map(|&n| if n % 2 == 0 { 2 * n } else { n })
        .collect();
    let mut pairs = Vec::new();
    let mut pair_moduli = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j));
            pair_moduli.push(crate::arith::gcd(group.orders()[i], group.orders()[j]));
        }
    }
    let mut count: u64 = 1;
    for &m in gen_moduli.iter().chain(&pair_moduli) {
        count = count
            .checked_mul(m)
            .filter(|&c| c <= caps.max_table_entries)
            .ok_or(Error::CapExceeded {
                what: "quadratic form count",
                requested: u64::MAX,
                limit: caps.max_table_entries,
            })?;
    }
    debug_assert_eq!(count, group.two_quotient_order() * group.sym_square_order());

    let moduli: Vec<u64> = gen_moduli.iter().chain(&pair_moduli).copied().collect();
    let mut digits = vec![0u64; moduli.len()];
    let mut out = Vec::with_capacity(count as usize);
    loop {
        let gen_values: Vec<QZ> = (0..k)
            .map(|i| QZ::new(digits[i] as i64, gen_moduli[i] as i64))
            .collect();
        let cross: Vec<(usize, usize, QZ)> = pairs
            .iter()
            .enumerate()
            .map(|(t, &(i, j))| (i, j, QZ::new(digits[k + t] as i64, pair_moduli[t] as i64)))
            .collect();
        out.push(QuadraticForm::from_spec(group.clone(), &gen_values, &cross)?);
        // odometer, last digit fastest: lexicographic order overall
        let mut pos = moduli.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < moduli[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Cochain;

    fn caps() -> Caps {
        Caps::default()
    }

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::new(vec![n]).unwrap()
    }

    #[test]
    fn is_quadratic_examples() {
        let g = z(2);
        assert!(is_quadratic(&g, &[QZ::zero(), QZ::zero()]));
        assert!(is_quadratic(&g, &[QZ::zero(), QZ::new(1, 4)]));
        // 2n * q(1) = 4/3 != 0 violates the cyclic constraint
        assert!(!is_quadratic(&g, &[QZ::zero(), QZ::new(1, 3)]));
    }

    #[test]
    fn polarize_examples() {
        let g = z(2);
        let q = QuadraticForm::try_new(g.clone(), vec![QZ::zero(), QZ::new(1, 4)]).unwrap();
        let b = q.polarize();
        // b(1,1) = q(0) - 2 q(1) = 1/2
        assert_eq!(b.value_at_indices(1, 1), QZ::new(1, 2));
        assert!(b.is_symmetric() && b.is_biadditive());

        let g3 = z(3);
        let q3 = QuadraticForm::try_new(
            g3,
            vec![QZ::zero(), QZ::new(1, 3), QZ::new(4, 3)],
        )
        .unwrap();
        // b(1,1) = q(2) - 2 q(1) = 4/3 - 2/3 = 2/3
        assert_eq!(q3.polarize().value_at_indices(1, 1), QZ::new(2, 3));

        let zero = QuadraticForm::zero(z(5));
        assert!(zero.polarize().radical().len() == 5);
    }

    #[test]
    fn trace_examples() {
        // (0, bicharacter xy/3) on Z/3 has trace m^2/3
        let g = z(3);
        let omega = Cochain::zero(g.clone(), vec![3], &caps()).unwrap();
        let c = Cochain::from_fn(g.clone(), vec![1, 1], &caps(), |a| {
            QZ::new((a[0].coords()[0] * a[1].coords()[0]) as i64, 3)
        })
        .unwrap();
        let t = AbelianThreeCocycle::try_new(omega, c).unwrap();
        let q = trace(&t);
        assert_eq!(q.value_at_index(1), QZ::new(1, 3));
        assert_eq!(q.value_at_index(2), QZ::new(4, 3));

        // trivial pair has zero trace
        let t0 = AbelianThreeCocycle::zero(z(4), &caps()).unwrap();
        assert_eq!(trace(&t0), QuadraticForm::zero(z(4)));

        // raw-table path rejects non-cocycles
        let omega = Cochain::from_fn(z(2), vec![3], &caps(), |a| {
            if a.iter().all(|x| x.coords()[0] == 1) {
                QZ::half()
            } else {
                QZ::zero()
            }
        })
        .unwrap();
        let c0 = Cochain::zero(z(2), vec![1, 1], &caps()).unwrap();
        assert!(matches!(
            trace_of_tables(omega, c0),
            Err(Error::NotACocycle)
        ));
    }

    #[test]
    fn semion_trace_from_remark_pair() {
        let g = z(2);
        let omega = Cochain::from_fn(g.clone(), vec![3], &caps(), |a| {
            if a.iter().all(|x| x.coords()[0] == 1) {
                QZ::half()
            } else {
                QZ::zero()
            }
        })
        .unwrap();
        let c = Cochain::from_fn(g, vec![1, 1], &caps(), |a| {
            QZ::new((a[0].coords()[0] * a[1].coords()[0]) as i64, 4)
        })
        .unwrap();
        let q = trace(&AbelianThreeCocycle::try_new(omega, c).unwrap());
        assert_eq!(q.value_at_index(1), QZ::new(1, 4));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_quadratic_forms(&z(3), &caps()).unwrap().len(), 3);
        assert_eq!(enumerate_quadratic_forms(&z(2), &caps()).unwrap().len(), 4);
        let g22 = FinAbGroup::new(vec![2, 2]).unwrap();
        let forms = enumerate_quadratic_forms(&g22, &caps()).unwrap();
        assert_eq!(forms.len(), 32);
        assert_eq!(
            forms.len() as u64,
            g22.two_quotient_order() * g22.sym_square_order()
        );
    }

    #[test]
    fn enumeration_is_a_group_containing_zero() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        let forms = enumerate_quadratic_forms(&g, &caps()).unwrap();
        assert_eq!(forms[0], QuadraticForm::zero(g.clone()));
        let set: std::collections::HashSet<_> = forms.iter().map(|f| f.values().to_vec()).collect();
        assert_eq!(set.len(), forms.len(), "enumeration repeats a form");
        for f1 in forms.iter().take(8) {
            for f2 in forms.iter().take(8) {
                let sum = f1.add(f2).unwrap();
                assert!(set.contains(&sum.values().to_vec()));
            }
        }
    }

    #[test]
    fn quad_zero_examples() {
        let g = z(2);
        let fermion = QuadraticForm::try_new(g.clone(), vec![QZ::zero(), QZ::half()]).unwrap();
        assert!(fermion.in_quad_zero());
        let semion = QuadraticForm::try_new(g, vec![QZ::zero(), QZ::new(1, 4)]).unwrap();
        assert!(!semion.in_quad_zero());
        // every form on an odd group is in Quad_0
        for n in [3u64, 5] {
            for q in enumerate_quadratic_forms(&z(n), &caps()).unwrap() {
                assert!(q.in_quad_zero());
            }
        }
    }

    #[test]
    fn quad_zero_subgroup_index() {
        for orders in [vec![2], vec![4], vec![2, 2], vec![2, 4], vec![6]] {
            let g = FinAbGroup::new(orders).unwrap();
            let forms = enumerate_quadratic_forms(&g, &caps()).unwrap();
            let inside = forms.iter().filter(|q| q.in_quad_zero()).count();
            assert_eq!(
                forms.len(),
                inside * g.two_quotient_order() as usize,
                "Quad_0 index mismatch on {g}"
            );
        }
    }

    #[test]
    fn spec_constructor_validation() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        // toric code: q(e1) = q(e2) = 0, q(e1+e2) = 1/2
        let q = QuadraticForm::from_spec(
            g.clone(),
            &[QZ::zero(), QZ::zero()],
            &[(0, 1, QZ::half())],
        )
        .unwrap();
        assert_eq!(q.value_at_index(3), QZ::half());
        // cross pairing must be gcd-torsion
        assert!(matches!(
            QuadraticForm::from_spec(g.clone(), &[QZ::zero(), QZ::zero()], &[(0, 1, QZ::new(1, 4))]),
            Err(Error::NotQuadratic)
        ));
        // generator value beyond the 2n bound
        assert!(matches!(
            QuadraticForm::from_spec(g, &[QZ::new(1, 8), QZ::zero()], &[]),
            Err(Error::NotQuadratic)
        ));
    }
}
