//! Explicit construction of an abelian 3-cocycle realizing a given
//! quadratic form, with associator values in {0, 1/2}.
//!
//! The construction splits the group into its 2-part and odd part. On the
//! odd part half the polarization is an honest bicharacter (2 is invertible
//! there). On the 2-part the form splits into a torsion piece realized by a
//! one-sided bicharacter and cyclic pieces of maximal denominator realized
//! by pullbacks of the even cyclic cocycle. The summed pair is re-verified
//! against the pentagon and hexagon equations, never assumed valid.

use crate::cochain::{AbelianThreeCocycle, Cochain};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{FinAbGroup, GroupHom};
use crate::quad::{trace, QuadraticForm};
use crate::qz::QZ;

/// The standard generator of associator classes on Z/n:
/// omega(a, b, c) = u * a * floor((b + c) / n) / n on representatives.
pub fn cyclic_carry_associator(n: u64, u: i64, caps: &Caps) -> Result<Cochain> {
    let group = FinAbGroup::new(vec![n])?;
    Cochain::from_fn(group, vec![3], caps, |args| {
        let (a, b, c) = (
            args[0].coords()[0],
            args[1].coords()[0],
            args[2].coords()[0],
        );
        let carry = ((b + c) / n) as i64;
        QZ::new(u * a as i64 * carry, n as i64)
    })
}

/// The abelian 3-cocycle on Z/n (n even) with braiding c(a,b) = u*a*b/(2n)
/// and associator 1/2 exactly when the first argument is odd and the last
/// two carry, i.e. the carry associator with multiplier n/2. Its trace is
/// the form m -> u * m^2 / 2n of maximal denominator.
pub fn even_cyclic_cocycle(n: u64, u: i64, caps: &Caps) -> Result<AbelianThreeCocycle> {
    if n % 2 != 0 {
        return Err(Error::OddModulus);
    }
    if u % 2 == 0 {
        return Err(Error::EvenMultiplier);
    }
    let group = FinAbGroup::new(vec![n])?;
    let omega = cyclic_carry_associator(n, (n / 2) as i64, caps)?;
    let c = Cochain::from_fn(group, vec![1, 1], caps, |args| {
        let (a, b) = (args[0].coords()[0], args[1].coords()[0]);
        QZ::new(u.wrapping_mul(a as i64 * b as i64), 2 * n as i64)
    })?;
    AbelianThreeCocycle::try_new(omega, c)
}

/// Wrap a biadditive (not necessarily symmetric) table as the abelian
/// 3-cocycle (0, c).
pub fn bicharacter_cocycle(c: Cochain, caps: &Caps) -> Result<AbelianThreeCocycle> {
    if c.shape() != [1, 1] {
        return Err(Error::ShapeMismatch {
            expected: vec![1, 1],
            found: c.shape().to_vec(),
        });
    }
    let group = c.group().clone();
    let n = group.order() as usize;
    for a in 0..n {
        for b in 0..n {
            let ab = group.index_add(a, b);
            for x in 0..n {
                if c.value_at_indices(&[ab, x])
                    != c.value_at_indices(&[a, x]) + c.value_at_indices(&[b, x])
                    || c.value_at_indices(&[x, ab])
                        != c.value_at_indices(&[x, a]) + c.value_at_indices(&[x, b])
                {
                    return Err(Error::NotBiadditive);
                }
            }
        }
    }
    let omega = Cochain::zero(group, vec![3], caps)?;
    AbelianThreeCocycle::try_new(omega, c)
}

/// Construct an abelian 3-cocycle whose trace is exactly `q` (not merely
/// cohomologous to it), with all associator values in {0, 1/2}.
pub fn build_from_quadratic(q: &QuadraticForm, caps: &Caps) -> Result<AbelianThreeCocycle> {
    let group = q.group().clone();
    let split = group.two_odd_split();
    let s = split.split.clone();
    let k2 = split.two.rank();
    let q_s = q.pullback(&split.iso)?;
    let b_s = q_s.polarize();

    // 2-part bookkeeping: which generators carry a maximal-denominator piece
    let mut torsion_gen = vec![QZ::zero(); k2]; // q0 on the 2-part generators
    let mut needs_cyclic = vec![false; k2];
    for j in 0..k2 {
        let e = s.generator(j);
        let order = s.orders()[j];
        let qe = q_s.value(&e);
        if !qe.scale(order as i64).is_zero() {
            needs_cyclic[j] = true;
            torsion_gen[j] = qe - QZ::new(1, 2 * order as i64);
        } else {
            torsion_gen[j] = qe;
        }
    }
    let odd_exponent = split.odd.exponent(); // odd, 1 when the odd part is trivial
    let half_scale = ((odd_exponent + 1) / 2) as i64;

    // a single bicharacter collecting the odd diagonal, the 2-part torsion
    // piece and the 2-odd cross pairing
    let n = s.order() as usize;
    let rank = s.rank();
    let gen_pair_b: Vec<Vec<QZ>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let ei = s.generator(i);
                    let ej = s.generator(j);
                    b_s.value(&ei, &ej)
                })
                .collect()
        })
        .collect();
    let mut c_total = Cochain::from_fn(s.clone(), vec![1, 1], caps, |args| {
        let x = args[0].coords();
        let y = args[1].coords();
        let mut acc = QZ::zero();
        // odd part: ((m+1)/2) * b(x_odd, y_odd)
        for i in k2..rank {
            for j in k2..rank {
                acc += gen_pair_b[i][j].scale(half_scale * (x[i] * y[j]) as i64);
            }
        }
        // 2-part torsion piece: one-sided expansion of q0
        for j in 0..k2 {
            acc += torsion_gen[j].scale((x[j] * y[j]) as i64);
        }
        for i in 0..k2 {
            for j in i + 1..k2 {
                acc += gen_pair_b[i][j].scale((x[i] * y[j]) as i64);
            }
        }
        // cross pairing between the 2-part and the odd part
        for i in 0..k2 {
            for j in k2..rank {
                acc += gen_pair_b[i][j].scale((x[i] * y[j]) as i64);
            }
        }
        acc
    })?;
    let mut omega_total = Cochain::zero(s.clone(), vec![3], caps)?;

    // cyclic maximal-denominator pieces, pulled back along the projections
    for j in 0..k2 {
        if !needs_cyclic[j] {
            continue;
        }
        let order = s.orders()[j];
        let piece = even_cyclic_cocycle(order, 1, caps)?;
        let cyclic = FinAbGroup::new(vec![order])?;
        let proj_images: Vec<_> = (0..rank)
            .map(|i| {
                if i == j {
                    cyclic.generator(0)
                } else {
                    cyclic.zero()
                }
            })
            .collect();
        let proj = GroupHom::new(s.clone(), cyclic, proj_images)?;
        omega_total = omega_total.add(&piece.omega().pullback(&proj, caps)?)?;
        c_total = c_total.add(&piece.braiding().pullback(&proj, caps)?)?;
    }

    // the summed pair is re-verified, then transported back along the CRT iso
    let on_split = AbelianThreeCocycle::try_new(omega_total, c_total)?;
    let back = split.iso.inverse()?;
    let result = on_split.pullback(&back, caps)?;
    debug_assert_eq!(&trace(&result), q);
    let _ = n;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::enumerate_quadratic_forms;

    fn caps() -> Caps {
        Caps::default()
    }

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::new(vec![n]).unwrap()
    }

    #[test]
    fn semion_from_even_cyclic() {
        let t = even_cyclic_cocycle(2, 1, &caps()).unwrap();
        let q = trace(&t);
        assert_eq!(q.value_at_index(1), QZ::new(1, 4));
        assert_eq!(t.omega().value_at_indices(&[1, 1, 1]), QZ::half());
    }

    #[test]
    fn even_cyclic_multiplier_three() {
        let t = even_cyclic_cocycle(2, 3, &caps()).unwrap();
        assert_eq!(trace(&t).value_at_index(1), QZ::new(3, 4));
    }

    #[test]
    fn even_cyclic_on_z4_associator_table() {
        let t = even_cyclic_cocycle(4, 1, &caps()).unwrap();
        // associator is 1/2 exactly when the first representative is odd and
        // the last two carry past 4 (exhaustively forced by the hexagon
        // equations together with c(a,b) = ab/8)
        for a in 0..4u64 {
            for b in 0..4u64 {
                for c in 0..4u64 {
                    let expected = if a % 2 == 1 && b + c >= 4 {
                        QZ::half()
                    } else {
                        QZ::zero()
                    };
                    assert_eq!(
                        t.omega().value_at_indices(&[a as usize, b as usize, c as usize]),
                        expected,
                        "omega({a},{b},{c})"
                    );
                }
            }
        }
        let q = trace(&t);
        for m in 0..4u64 {
            assert_eq!(q.value_at_index(m as usize), QZ::new((m * m) as i64, 8));
        }
    }

    #[test]
    fn even_cyclic_input_validation() {
        assert!(matches!(
            even_cyclic_cocycle(3, 1, &caps()),
            Err(Error::OddModulus)
        ));
        assert!(matches!(
            even_cyclic_cocycle(4, 2, &caps()),
            Err(Error::EvenMultiplier)
        ));
    }

    #[test]
    fn even_cyclic_larger_moduli() {
        for n in [6u64, 8] {
            for u in [1i64, 3] {
                let t = even_cyclic_cocycle(n, u, &caps()).unwrap();
                let q = trace(&t);
                for m in 0..n {
                    assert_eq!(
                        q.value_at_index(m as usize),
                        QZ::new(u * (m * m) as i64, 2 * n as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn bicharacter_cocycle_examples() {
        // trivial
        let c0 = Cochain::zero(z(4), vec![1, 1], &caps()).unwrap();
        let t0 = bicharacter_cocycle(c0, &caps()).unwrap();
        assert!(trace(&t0).values().iter().all(|v| v.is_zero()));

        // Z/3 with c(x,y) = 2xy/3
        let c = Cochain::from_fn(z(3), vec![1, 1], &caps(), |a| {
            QZ::new(2 * (a[0].coords()[0] * a[1].coords()[0]) as i64, 3)
        })
        .unwrap();
        let t = bicharacter_cocycle(c, &caps()).unwrap();
        assert_eq!(trace(&t).value_at_index(1), QZ::new(2, 3));
        assert_eq!(trace(&t).value_at_index(2), QZ::new(8, 3));

        // toric code: one-sided cross pairing on Z/2 + Z/2
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let c = Cochain::from_fn(g, vec![1, 1], &caps(), |a| {
            QZ::new((a[0].coords()[0] * a[1].coords()[1]) as i64, 2)
        })
        .unwrap();
        let q = trace(&bicharacter_cocycle(c, &caps()).unwrap());
        assert_eq!(q.value_at_index(1), QZ::zero());
        assert_eq!(q.value_at_index(2), QZ::zero());
        assert_eq!(q.value_at_index(3), QZ::half());
    }

    #[test]
    fn bicharacter_rejects_nonadditive_tables() {
        let c = Cochain::from_fn(z(4), vec![1, 1], &caps(), |a| {
            // quadratic in the first argument, not additive
            QZ::new((a[0].coords()[0] * a[0].coords()[0] * a[1].coords()[0]) as i64, 4)
        })
        .unwrap();
        assert!(matches!(
            bicharacter_cocycle(c, &caps()),
            Err(Error::NotBiadditive)
        ));
    }

    #[test]
    fn build_zero_form() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        let t = build_from_quadratic(&QuadraticForm::zero(g), &caps()).unwrap();
        assert!(t.omega().is_zero());
        assert!(t.braiding().is_zero());
    }

    #[test]
    fn build_semion_matches_even_cyclic() {
        let q = QuadraticForm::try_new(z(2), vec![QZ::zero(), QZ::new(1, 4)]).unwrap();
        let t = build_from_quadratic(&q, &caps()).unwrap();
        assert_eq!(trace(&t), q);
        assert_eq!(t.omega().value_at_indices(&[1, 1, 1]), QZ::half());
        assert_eq!(t.braiding().value_at_indices(&[1, 1]), QZ::new(1, 4));
    }

    #[test]
    fn build_round_trip_z2_z4() {
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let forms = enumerate_quadratic_forms(&g, &caps()).unwrap();
        assert_eq!(forms.len(), 64);
        for q in &forms {
            let t = build_from_quadratic(q, &caps()).unwrap();
            assert_eq!(&trace(&t), q, "trace round trip failed");
            assert!(t
                .omega()
                .table()
                .iter()
                .all(|v| v.is_zero() || *v == QZ::half()));
        }
    }

    #[test]
    fn build_round_trip_z6_uses_crt() {
        let g = z(6);
        let forms = enumerate_quadratic_forms(&g, &caps()).unwrap();
        assert_eq!(forms.len(), 12);
        for q in &forms {
            let t = build_from_quadratic(q, &caps()).unwrap();
            assert_eq!(&trace(&t), q);
        }
    }

    #[test]
    fn build_respects_addition_of_forms() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let forms = enumerate_quadratic_forms(&g, &caps()).unwrap();
        for q1 in forms.iter().step_by(5) {
            for q2 in forms.iter().step_by(7) {
                let sum_cocycle = build_from_quadratic(q1, &caps())
                    .unwrap()
                    .add(&build_from_quadratic(q2, &caps()).unwrap())
                    .unwrap();
                assert_eq!(trace(&sum_cocycle), q1.add(q2).unwrap());
            }
        }
    }
}
