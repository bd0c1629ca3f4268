//! Small integer helpers used throughout the crate.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
pub fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = xgcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, requires gcd(a, m) = 1.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (g, x, _) = xgcd(a as i128, m as i128);
    debug_assert_eq!(g, 1, "inv_mod of non-unit");
    (x.rem_euclid(m as i128)) as u64
}

/// A unit u modulo m with u*a = gcd(a, m) (mod m).
///
/// Standard stabilization: a/g is a unit modulo m/g; any lift of its inverse
/// that stays coprime to m works.
pub fn unit_scaling_to_gcd(a: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    let a = a % m;
    if a == 0 {
        return 1;
    }
    let g = gcd(a, m);
    let m1 = m / g;
    let v = inv_mod((a / g) % m1, m1);
    // lift v to a unit mod m
    let mut u = if v == 0 { m1 } else { v };
    while gcd(u, m) != 1 {
        u += m1;
    }
    u % m
}
