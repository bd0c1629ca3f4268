//! Dense cochain tables over a finite abelian group, the bar-resolution
//! coboundary, the double-complex differentials, and the pentagon/hexagon
//! verifiers.
//!
//! A cochain of shape (p1,...,pr) is a total map A^{p1}|...|A^{pr} -> Q/Z.
//! Tables are normalized: the value is zero whenever any argument is the
//! identity. User-supplied tables violating this are rejected, not repaired.
//! All identities are stated and checked additively in Q/Z.

use crate::arith::lcm;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FinAbGroup, GroupElement, GroupHom};
use crate::qz::QZ;

/// A dense, normalized cochain table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    group: FinAbGroup,
    shape: Vec<usize>,
    table: Vec<QZ>,
}

impl Cochain {
    /// The zero cochain of the given shape.
    pub fn zero(group: FinAbGroup, shape: Vec<usize>, caps: &Caps) -> Result<Cochain> {
        let len = table_len(&group, &shape, caps)?;
        Ok(Cochain {
            group,
            shape,
            table: vec![QZ::zero(); len],
        })
    }

    /// Build a cochain by evaluating `f` on every argument tuple.
    ///
    /// `f` receives one group element per argument slot (blocks flattened).
    /// Fails with [`Error::NotNormalized`] if `f` is nonzero on a tuple
    /// containing the identity.
    pub fn from_fn<F>(group: FinAbGroup, shape: Vec<usize>, caps: &Caps, mut f: F) -> Result<Cochain>
    where
        F: FnMut(&[GroupElement]) -> QZ,
    {
        let len = table_len(&group, &shape, caps)?;
        let arity: usize = shape.iter().sum();
        let n = group.order() as usize;
        let mut table = vec![QZ::zero(); len];
        let mut digits = vec![0usize; arity];
        let mut args: Vec<GroupElement> = vec![group.zero(); arity];
        for (flat, slot) in table.iter_mut().enumerate() {
            decompose(flat, n, &mut digits);
            for (a, &d) in args.iter_mut().zip(digits.iter()) {
                *a = group.element_at(d);
            }
            let v = f(&args);
            if digits.iter().any(|&d| d == 0) && !v.is_zero() {
                return Err(Error::NotNormalized);
            }
            *slot = v;
        }
        Ok(Cochain { group, shape, table })
    }

    /// Wrap an explicit table; rejects wrong lengths and non-normalized data.
    pub fn try_new(
        group: FinAbGroup,
        shape: Vec<usize>,
        table: Vec<QZ>,
        caps: &Caps,
    ) -> Result<Cochain> {
        let len = table_len(&group, &shape, caps)?;
        if table.len() != len {
            return Err(Error::InvalidInput(format!(
                "table has {} entries, shape needs {len}",
                table.len()
            )));
        }
        let arity: usize = shape.iter().sum();
        let n = group.order() as usize;
        let mut digits = vec![0usize; arity];
        for (flat, v) in table.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            decompose(flat, n, &mut digits);
            if digits.iter().any(|&d| d == 0) {
                return Err(Error::NotNormalized);
            }
        }
        Ok(Cochain { group, shape, table })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    /// Value on a tuple of element indices (one per argument slot).
    pub fn value_at_indices(&self, args: &[usize]) -> QZ {
        debug_assert_eq!(args.len(), self.arity());
        let n = self.group.order() as usize;
        let mut flat = 0usize;
        for &a in args {
            debug_assert!(a < n);
            flat = flat * n + a;
        }
        self.table[flat]
    }

    /// Value on a tuple of elements.
    pub fn eval(&self, args: &[GroupElement]) -> QZ {
        let idx: Vec<usize> = args.iter().map(|a| self.group.index_of(a)).collect();
        self.value_at_indices(&idx)
    }

    pub(crate) fn set_at_indices(&mut self, args: &[usize], value: QZ) {
        let n = self.group.order() as usize;
        let mut flat = 0usize;
        for &a in args {
            flat = flat * n + a;
        }
        self.table[flat] = value;
    }

    pub(crate) fn table(&self) -> &[QZ] {
        &self.table
    }

    /// Pointwise sum; shapes and groups must match.
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape.clone(),
                found: other.shape.clone(),
            });
        }
        Ok(Cochain {
            group: self.group.clone(),
            shape: self.shape.clone(),
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    /// Pointwise integer multiple.
    pub fn scale(&self, m: i64) -> Cochain {
        Cochain {
            group: self.group.clone(),
            shape: self.shape.clone(),
            table: self.table.iter().map(|v| v.scale(m)).collect(),
        }
    }

    /// lcm of all denominators appearing in the table (1 for the zero cochain).
    pub fn lcm_denominator(&self) -> Result<u64> {
        let mut acc: u64 = 1;
        for v in &self.table {
            acc = lcm(acc, v.denom());
            if acc > (1 << 40) {
                return Err(Error::InvalidInput(
                    "cochain denominators too large to solve over".into(),
                ));
            }
        }
        Ok(acc)
    }

    /// Pullback along a homomorphism `hom: B -> A` of a cochain on A,
    /// yielding a cochain on B of the same shape.
    pub fn pullback(&self, hom: &GroupHom, caps: &Caps) -> Result<Cochain> {
        if hom.codomain() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let map = hom.index_table();
        let b = hom.domain().clone();
        let shape = self.shape.clone();
        let len = table_len(&b, &shape, caps)?;
        let arity = self.arity();
        let nb = b.order() as usize;
        let na = self.group.order() as usize;
        let mut table = vec![QZ::zero(); len];
        let mut digits = vec![0usize; arity];
        for (flat, slot) in table.iter_mut().enumerate() {
            decompose(flat, nb, &mut digits);
            let mut aflat = 0usize;
            for &d in &digits {
                aflat = aflat * na + map[d];
            }
            *slot = self.table[aflat];
        }
        Ok(Cochain { group: b, shape, table })
    }

    /// Bar-resolution coboundary for one-block shapes (n) -> (n+1), with the
    /// trivial action on coefficients.
    pub fn delta(&self, caps: &Caps) -> Result<Cochain> {
        if self.shape.len() > 1 {
            return Err(Error::ShapeMismatch {
                expected: vec![self.arity()],
                found: self.shape.clone(),
            });
        }
        let deg = self.arity();
        let group = self.group.clone();
        let len = table_len(&group, &[deg + 1], caps)?;
        let n = group.order() as usize;
        let mut table = vec![QZ::zero(); len];
        let mut digits = vec![0usize; deg + 1];
        let mut scratch = vec![0usize; deg.max(1)];
        for (flat, slot) in table.iter_mut().enumerate() {
            decompose(flat, n, &mut digits);
            if digits.iter().any(|&d| d == 0) {
                continue; // coboundary of a normalized cochain is normalized
            }
            let mut acc = self.value_at_indices(&digits[1..]);
            for i in 0..deg {
                scratch[..i].copy_from_slice(&digits[..i]);
                scratch[i] = group.index_add(digits[i], digits[i + 1]);
                scratch[i + 1..deg].copy_from_slice(&digits[i + 2..]);
                let term = self.value_at_indices(&scratch[..deg]);
                if i % 2 == 0 {
                    acc = acc - term;
                } else {
                    acc = acc + term;
                }
            }
            let last = self.value_at_indices(&digits[..deg]);
            if (deg + 1) % 2 == 0 {
                acc = acc + last;
            } else {
                acc = acc - last;
            }
            *slot = acc;
        }
        Ok(Cochain {
            group,
            shape: vec![deg + 1],
            table,
        })
    }

    /// Horizontal differential of the double complex: shape (p,q) -> (p+1,q).
    pub fn delta_h(&self, caps: &Caps) -> Result<Cochain> {
        self.block_delta(0, caps)
    }

    /// Vertical differential of the double complex: shape (p,q) -> (p,q+1).
    pub fn delta_v(&self, caps: &Caps) -> Result<Cochain> {
        self.block_delta(1, caps)
    }

    // Bar coboundary applied inside one block of a two-block cochain.
    fn block_delta(&self, block: usize, caps: &Caps) -> Result<Cochain> {
        if self.shape.len() != 2 {
            return Err(Error::ShapeMismatch {
                expected: vec![1, 1],
                found: self.shape.clone(),
            });
        }
        let (p, q) = (self.shape[0], self.shape[1]);
        let out_shape = if block == 0 { vec![p + 1, q] } else { vec![p, q + 1] };
        let group = self.group.clone();
        let len = table_len(&group, &out_shape, caps)?;
        let n = group.order() as usize;
        let arity_out = p + q + 1;
        let (bstart, bdeg) = if block == 0 { (0, p) } else { (p, q) };
        let mut table = vec![QZ::zero(); len];
        let mut digits = vec![0usize; arity_out];
        let mut scratch = vec![0usize; arity_out - 1];
        for (flat, slot) in table.iter_mut().enumerate() {
            decompose(flat, n, &mut digits);
            if digits.iter().any(|&d| d == 0) {
                continue;
            }
            // face 0: drop the first argument of the block
            scratch[..bstart].copy_from_slice(&digits[..bstart]);
            scratch[bstart..].copy_from_slice(&digits[bstart + 1..]);
            let mut acc = self.value_at_indices(&scratch);
            for i in 0..bdeg {
                scratch[..bstart + i].copy_from_slice(&digits[..bstart + i]);
                scratch[bstart + i] = group.index_add(digits[bstart + i], digits[bstart + i + 1]);
                scratch[bstart + i + 1..].copy_from_slice(&digits[bstart + i + 2..]);
                let term = self.value_at_indices(&scratch);
                if i % 2 == 0 {
                    acc = acc - term;
                } else {
                    acc = acc + term;
                }
            }
            // last face: drop the final argument of the block
            scratch[..bstart + bdeg].copy_from_slice(&digits[..bstart + bdeg]);
            scratch[bstart + bdeg..].copy_from_slice(&digits[bstart + bdeg + 1..]);
            let last = self.value_at_indices(&scratch);
            if (bdeg + 1) % 2 == 0 {
                acc = acc + last;
            } else {
                acc = acc - last;
            }
            *slot = acc;
        }
        Ok(Cochain {
            group,
            shape: out_shape,
            table,
        })
    }
}

fn table_len(group: &FinAbGroup, shape: &[usize], caps: &Caps) -> Result<usize> {
    if shape.iter().any(|&p| p == 0) {
        return Err(Error::InvalidInput("shape blocks must be positive".into()));
    }
    let arity: u32 = shape.iter().sum::<usize>() as u32;
    let len = group
        .order()
        .checked_pow(arity)
        .ok_or(Error::CapExceeded {
            what: "cochain table entries",
            requested: u64::MAX,
            limit: caps.max_table_entries,
        })?;
    caps.check("cochain table entries", len, caps.max_table_entries)?;
    Ok(len as usize)
}

fn decompose(mut flat: usize, base: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = flat % base;
        flat /= base;
    }
}

/// True iff the additive 3-cocycle identity holds on all of A^4, i.e. the
/// associator solves the pentagon equation.
pub fn pentagon_check(omega: &Cochain) -> Result<bool> {
    if omega.shape() != [3] {
        return Err(Error::ShapeMismatch {
            expected: vec![3],
            found: omega.shape().to_vec(),
        });
    }
    if omega.is_zero() {
        return Ok(true);
    }
    let n = omega.group().order() as usize;
    let add = add_table(omega.group());
    let w = |x: usize, y: usize, z: usize| omega.table[(x * n + y) * n + z];
    for x in 0..n {
        for y in 0..n {
            let xy = add[x * n + y];
            for z in 0..n {
                let yz = add[y * n + z];
                for t in 0..n {
                    let zt = add[z * n + t];
                    let lhs = w(y, z, t) - w(xy, z, t) + w(x, yz, t) - w(x, y, zt) + w(x, y, z);
                    if !lhs.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// True iff (omega, c) satisfies both hexagon equations, stated additively:
/// for all x, y, z both abelian-coboundary components vanish,
///
/// ```text
/// c(x|z) - c(x|y+z) + c(x|y) + w(x,y,z) - w(y,x,z) + w(y,z,x) = 0
/// c(y|z) - c(x+y|z) + c(x|z) - w(x,y,z) + w(x,z,y) - w(z,x,y) = 0
/// ```
///
/// Fails with [`Error::PentagonViolated`] when omega is not a 3-cocycle.
pub fn hexagon_check(omega: &Cochain, c: &Cochain) -> Result<bool> {
    if c.shape() != [1, 1] {
        return Err(Error::ShapeMismatch {
            expected: vec![1, 1],
            found: c.shape().to_vec(),
        });
    }
    if omega.group() != c.group() {
        return Err(Error::GroupMismatch);
    }
    if !pentagon_check(omega)? {
        return Err(Error::PentagonViolated);
    }
    Ok(hexagon_holds_unchecked(omega, c))
}

/// Hexagon conditions alone, without the pentagon precondition. Used by the
/// CLI `verify` report, which must grade each condition independently.
pub fn hexagon_holds_unchecked(omega: &Cochain, c: &Cochain) -> bool {
    let n = omega.group().order() as usize;
    let add = add_table(omega.group());
    let w = |x: usize, y: usize, z: usize| omega.table[(x * n + y) * n + z];
    let cc = |x: usize, y: usize| c.table[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let xy = add[x * n + y];
            for z in 0..n {
                let yz = add[y * n + z];
                let e1 = cc(x, z) - cc(x, yz) + cc(x, y) + w(x, y, z) - w(y, x, z) + w(y, z, x);
                if !e1.is_zero() {
                    return false;
                }
                let e2 = cc(y, z) - cc(xy, z) + cc(x, z) - w(x, y, z) + w(x, z, y) - w(z, x, y);
                if !e2.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Gauge transformation of an associator by a 2-cochain: omega + delta(u).
///
/// Gauge-equivalent associators have identical pentagon status and identical
/// braidability.
pub fn gauge_transform(omega: &Cochain, u: &Cochain, caps: &Caps) -> Result<Cochain> {
    if omega.shape() != [3] {
        return Err(Error::ShapeMismatch {
            expected: vec![3],
            found: omega.shape().to_vec(),
        });
    }
    if u.shape() != [2] {
        return Err(Error::ShapeMismatch {
            expected: vec![2],
            found: u.shape().to_vec(),
        });
    }
    omega.add(&u.delta(caps)?)
}

pub(crate) fn add_table(group: &FinAbGroup) -> Vec<usize> {
    let n = group.order() as usize;
    let mut add = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            add[i * n + j] = group.index_add(i, j);
        }
    }
    add
}

/// An associator-braiding pair satisfying the pentagon and hexagon
/// equations; validity is established at construction and re-checked after
/// every pointwise sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianThreeCocycle {
    omega: Cochain,
    c: Cochain,
}

impl AbelianThreeCocycle {
    /// Validate and wrap a pair of tables.
    pub fn try_new(omega: Cochain, c: Cochain) -> Result<AbelianThreeCocycle> {
        if omega.shape() != [3] {
            return Err(Error::ShapeMismatch {
                expected: vec![3],
                found: omega.shape().to_vec(),
            });
        }
        match hexagon_check(&omega, &c) {
            Ok(true) => Ok(AbelianThreeCocycle { omega, c }),
            Ok(false) => Err(Error::HexagonViolated),
            Err(e) => Err(e),
        }
    }

    /// The zero cocycle (trivial theory data) on a group.
    pub fn zero(group: FinAbGroup, caps: &Caps) -> Result<AbelianThreeCocycle> {
        Ok(AbelianThreeCocycle {
            omega: Cochain::zero(group.clone(), vec![3], caps)?,
            c: Cochain::zero(group, vec![1, 1], caps)?,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        self.omega.group()
    }

    /// The associator component (shape (3)).
    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    /// The braiding component (shape (1,1)).
    pub fn braiding(&self) -> &Cochain {
        &self.c
    }

    /// Pointwise sum of abelian 3-cocycles; validity is re-verified.
    pub fn add(&self, other: &AbelianThreeCocycle) -> Result<AbelianThreeCocycle> {
        AbelianThreeCocycle::try_new(self.omega.add(&other.omega)?, self.c.add(&other.c)?)
    }

    /// Pullback along a homomorphism into this cocycle's group.
    pub fn pullback(&self, hom: &GroupHom, caps: &Caps) -> Result<AbelianThreeCocycle> {
        Ok(AbelianThreeCocycle {
            omega: self.omega.pullback(hom, caps)?,
            c: self.c.pullback(hom, caps)?,
        })
    }

    pub fn into_parts(self) -> (Cochain, Cochain) {
        (self.omega, self.c)
    }

    // For constructions where validity is forced (block sums of valid
    // cocycles, transport along isomorphisms).
    pub(crate) fn from_parts_unchecked(omega: Cochain, c: Cochain) -> AbelianThreeCocycle {
        AbelianThreeCocycle { omega, c }
    }
}
