//! Linear systems over Z/M solved by integer elimination.
//!
//! Equations are folded into a Howell-normal echelon as they arrive. The
//! Howell completion (annihilator rows inserted behind every pivot) is what
//! makes back-substitution sound over a non-field modulus and makes the
//! returned solution the lexicographically least vector of the whole
//! solution coset, independent of equation order.

use crate::arith::{gcd, mul_mod, unit_scaling_to_gcd, xgcd};

pub(crate) struct LinearSystem {
    modulus: u64,
    cols: usize,
    // echelon rows, augmented with the right-hand side; pivots[j] is the row
    // whose leading entry sits at column j
    pivots: Vec<Option<Vec<u64>>>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(modulus: u64, cols: usize) -> LinearSystem {
        assert!(modulus >= 1);
        LinearSystem {
            modulus,
            cols,
            pivots: vec![None; cols],
            inconsistent: false,
        }
    }

    /// Add one equation `sum coeff * x_col = rhs (mod M)`; columns may repeat.
    pub fn equation(&mut self, terms: &[(usize, i64)], rhs: i64) {
        if self.inconsistent {
            return;
        }
        let m = self.modulus as i128;
        let mut row = vec![0u64; self.cols + 1];
        for &(col, coeff) in terms {
            debug_assert!(col < self.cols);
            row[col] = ((row[col] as i128 + coeff as i128).rem_euclid(m)) as u64;
        }
        row[self.cols] = (rhs as i128).rem_euclid(m) as u64;
        self.insert(row);
    }

    fn insert(&mut self, row: Vec<u64>) {
        let m = self.modulus;
        let mut queue = vec![row];
        while let Some(mut row) = queue.pop() {
            let mut placed = false;
            let mut col = 0;
            while col < self.cols {
                if row[col] == 0 {
                    col += 1;
                    continue;
                }
                if self.pivots[col].is_none() {
                    // new pivot: normalize so the pivot divides M
                    let u = unit_scaling_to_gcd(row[col], m);
                    if u != 1 {
                        for r in row.iter_mut() {
                            *r = mul_mod(u, *r, m);
                        }
                    }
                    debug_assert_eq!(m % row[col], 0);
                    self.pivots[col] = Some(std::mem::take(&mut row));
                    placed = true;
                    if let Some(ann) = self.annihilator(col) {
                        queue.push(ann);
                    }
                    break;
                }
                let pivot = self.pivots[col].take().expect("checked above");
                let p = pivot[col];
                let v = row[col];
                if v % p == 0 {
                    // plain reduction against the pivot row
                    let k = (v / p) % m;
                    for (r, pv) in row.iter_mut().zip(pivot.iter()) {
                        *r = (*r + m - mul_mod(k, *pv, m)) % m;
                    }
                    self.pivots[col] = Some(pivot);
                } else {
                    // combine to the gcd with a unimodular row operation
                    let (g, s, t) = xgcd(p as i128, v as i128);
                    let g = g as u64;
                    let (s, t) = (
                        s.rem_euclid(m as i128) as u64,
                        t.rem_euclid(m as i128) as u64,
                    );
                    let (pk, vk) = ((v / g) % m, (p / g) % m);
                    let mut newp = vec![0u64; self.cols + 1];
                    let mut newrow = vec![0u64; self.cols + 1];
                    for i in 0..=self.cols {
                        let a = pivot[i];
                        let b = row[i];
                        newp[i] = (mul_mod(s, a, m) + mul_mod(t, b, m)) % m;
                        newrow[i] = (mul_mod(pk, a, m) + m - mul_mod(vk, b, m)) % m;
                    }
                    debug_assert_eq!(newrow[col], 0);
                    let u = unit_scaling_to_gcd(newp[col], m);
                    if u != 1 {
                        for r in newp.iter_mut() {
                            *r = mul_mod(u, *r, m);
                        }
                    }
                    self.pivots[col] = Some(newp);
                    // the pivot value shrank: refresh its annihilator
                    if let Some(ann) = self.annihilator(col) {
                        queue.push(ann);
                    }
                    row = newrow;
                }
                col += 1;
            }
            if !placed && row[self.cols] != 0 {
                // fully reduced with a leftover right-hand side
                self.inconsistent = true;
                return;
            }
        }
    }

    // (M / pivot) * pivot_row, which has a zero at the pivot column; nonzero
    // tails must live in the echelon for Howell completeness
    fn annihilator(&self, col: usize) -> Option<Vec<u64>> {
        let pivot = self.pivots[col].as_ref()?;
        let k = self.modulus / pivot[col];
        let ann: Vec<u64> = pivot.iter().map(|&v| mul_mod(k, v, self.modulus)).collect();
        if ann.iter().any(|&v| v != 0) {
            Some(ann)
        } else {
            None
        }
    }

    /// The lexicographically least solution vector, or None when the system
    /// has no solution modulo M.
    pub fn solve_lex_least(&self) -> Option<Vec<u64>> {
        if self.inconsistent {
            return None;
        }
        let m = self.modulus;
        let mut x = vec![0u64; self.cols];
        // back-substitution over pivots, right to left, free variables zero
        for col in (0..self.cols).rev() {
            let Some(pivot) = &self.pivots[col] else {
                continue;
            };
            let g = pivot[col];
            let mut r = pivot[self.cols];
            for j in col + 1..self.cols {
                r = (r + m - mul_mod(pivot[j], x[j], m)) % m;
            }
            if r % g != 0 {
                // unreachable once the echelon is Howell-complete
                return None;
            }
            x[col] = (r / g) % (m / g);
        }
        // kernel of the coefficient part, then greedy lexicographic reduction
        let kernel = self.kernel();
        for row in &kernel {
            let p = row.iter().position(|&v| v != 0).expect("kernel rows are nonzero");
            let k = x[p] / row[p];
            if k != 0 {
                for (xi, ri) in x.iter_mut().zip(row.iter()) {
                    *xi = (*xi + m - mul_mod(k, *ri, m)) % m;
                }
            }
        }
        Some(x)
    }

    // Howell basis of {v : A v = 0 (mod M)}, rows sorted by leading column.
    // Computed by eliminating [A^T | I] over the first block: rows that die
    // on the A^T block carry kernel vectors in their identity block.
    fn kernel(&self) -> Vec<Vec<u64>> {
        let rows: Vec<&Vec<u64>> = self.pivots.iter().flatten().collect();
        let s = rows.len();
        let total = s + self.cols;
        let mut elim = LinearSystem::new(self.modulus, total);
        for v in 0..self.cols {
            let mut row = vec![0u64; total + 1];
            for (i, r) in rows.iter().enumerate() {
                row[i] = r[v];
            }
            row[s + v] = 1 % self.modulus;
            elim.insert(row);
        }
        let mut out: Vec<Vec<u64>> = elim
            .pivots
            .iter()
            .flatten()
            .filter(|r| r[..s].iter().all(|&v| v == 0))
            .map(|r| r[s..total].to_vec())
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        out.sort_by_key(|r| r.iter().position(|&v| v != 0));
        out
    }
}
