//! Structure constants of the split Clifford algebra of rank `2n+1`.
//!
//! Generators are indexed `0..=2n`; `e_n` is the anisotropic middle vector
//! with `e_n^2 = 1`, and `e_i`, `e_{2n-i}` (`i < n`) form a hyperbolic pair
//! with `e_i e_{2n-i} + e_{2n-i} e_i = 1`. Basis monomials `E_I` are products
//! of generators in increasing index order, encoded as bitmasks.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest supported `n`; the algebra has dimension `2^(2n+1)`.
pub const MAX_N: usize = 6;
/// Contexts up to this `n` keep the full monomial product table.
const FULL_TABLE_MAX_N: usize = 3;

/// Sparse integer combination of basis monomials.
pub type IntTerms = Vec<(u32, i64)>;

#[derive(Debug)]
pub struct CliffordContext {
    n: usize,
    /// `gen_table[I * dim_v + j]` expands `E_I * e_j`.
    gen_table: Vec<IntTerms>,
    /// `full_table[I * dim + J]` expands `E_I * E_J` (small `n` only).
    full_table: Option<Vec<IntTerms>>,
    /// `involution[I]` expands `E_I^*`.
    involution: Vec<IntTerms>,
    /// `spin_table[I * 2^n + S]`: image of the wedge basis vector `S` under `E_I`.
    spin_table: Vec<Option<(u32, i8)>>,
}

impl CliffordContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("Clifford rank needs n >= 1".into()));
        }
        if n > MAX_N {
            return Err(Error::Resource(format!(
                "Clifford algebra for n = {n} exceeds the cap n <= {MAX_N}"
            )));
        }
        let dim_v = 2 * n + 1;
        let dim = 1usize << dim_v;
        let mut ctx = Self {
            n,
            gen_table: Vec::with_capacity(dim * dim_v),
            full_table: None,
            involution: Vec::with_capacity(dim),
            spin_table: Vec::new(),
        };
        // Masks are processed in increasing order, so `E_{I'} e_j` with
        // `I' = I` minus its top bit is always available.
        for mask in 0..dim as u32 {
            for j in 0..dim_v {
                let t = ctx.compute_right_mul_gen(mask, j);
                ctx.gen_table.push(t);
            }
        }
        for mask in 0..dim as u32 {
            let inv = ctx.compute_involution(mask);
            ctx.involution.push(inv);
        }
        if n <= FULL_TABLE_MAX_N {
            let mut full = Vec::with_capacity(dim * dim);
            for i in 0..dim as u32 {
                for j in 0..dim as u32 {
                    full.push(ctx.expand_product(i, j));
                }
            }
            ctx.full_table = Some(full);
        }
        ctx.spin_table = ctx.compute_spin_table();
        Ok(ctx)
    }

    /// Process-wide shared context for `n`.
    pub fn shared(n: usize) -> Result<Arc<Self>> {
        static CACHE: [OnceLock<Arc<CliffordContext>>; MAX_N + 1] =
            [const { OnceLock::new() }; MAX_N + 1];
        if n == 0 || n > MAX_N {
            return Self::new(n).map(Arc::new);
        }
        if let Some(c) = CACHE[n].get() {
            return Ok(c.clone());
        }
        let built = Arc::new(Self::new(n)?);
        Ok(CACHE[n].get_or_init(|| built).clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `2n+1` of the quadratic space.
    pub fn dim_v(&self) -> usize {
        2 * self.n + 1
    }

    /// Dimension `2^(2n+1)` of the algebra.
    pub fn dim(&self) -> usize {
        1 << self.dim_v()
    }

    pub fn middle(&self) -> usize {
        self.n
    }

    /// Hyperbolic partner of generator `i` (`i != n`).
    pub fn partner(&self, i: usize) -> usize {
        2 * self.n - i
    }

    /// `Q(e_j)`.
    pub fn q_gen(&self, j: usize) -> i64 {
        i64::from(j == self.n)
    }

    /// Polar form `B(e_i, e_j) = Q(e_i + e_j) - Q(e_i) - Q(e_j)`.
    pub fn polar(&self, i: usize, j: usize) -> i64 {
        if i == self.n && j == self.n {
            2
        } else if i + j == 2 * self.n && i != j {
            1
        } else {
            0
        }
    }

    pub fn right_mul_gen(&self, mask: u32, j: usize) -> &[(u32, i64)] {
        &self.gen_table[mask as usize * self.dim_v() + j]
    }

    pub fn involution_of(&self, mask: u32) -> &[(u32, i64)] {
        &self.involution[mask as usize]
    }

    /// `E_I * E_J` as an integer combination.
    pub fn product(&self, i: u32, j: u32) -> std::borrow::Cow<'_, [(u32, i64)]> {
        match &self.full_table {
            Some(t) => std::borrow::Cow::Borrowed(&t[i as usize * self.dim() + j as usize]),
            None => std::borrow::Cow::Owned(self.expand_product(i, j)),
        }
    }

    /// Image of the wedge basis vector `s` under `E_I`, with sign.
    pub fn spin_monomial(&self, mask: u32, s: u32) -> Option<(u32, i8)> {
        self.spin_table[((mask as usize) << self.n) | s as usize]
    }

    fn compute_right_mul_gen(&self, mask: u32, j: usize) -> IntTerms {
        if mask == 0 {
            return vec![(1 << j, 1)];
        }
        let last = 31 - mask.leading_zeros() as usize;
        let rest = mask ^ (1 << last);
        if last < j {
            return vec![(mask | (1 << j), 1)];
        }
        if last == j {
            let q = self.q_gen(j);
            return if q == 0 { vec![] } else { vec![(rest, q)] };
        }
        // E_{I'} e_last e_j = B(last, j) E_{I'} - (E_{I'} e_j) e_last,
        // and every monomial of E_{I'} e_j has indices below `last`.
        let mut out: IntTerms = Vec::new();
        let b = self.polar(last, j);
        if b != 0 {
            out.push((rest, b));
        }
        for &(k, c) in self.right_mul_gen(rest, j) {
            out.push((k | (1 << last), -c));
        }
        normalize(out)
    }

    fn expand_product(&self, i: u32, j: u32) -> IntTerms {
        let mut cur: IntTerms = vec![(i, 1)];
        let mut bits = j;
        while bits != 0 {
            let g = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut next = Vec::new();
            for &(k, c) in &cur {
                for &(k2, c2) in self.right_mul_gen(k, g) {
                    next.push((k2, c * c2));
                }
            }
            cur = normalize(next);
        }
        cur
    }

    /// `(e_{i1} ... e_{ir})^* = (-1)^r e_{ir} ... e_{i1}`.
    fn compute_involution(&self, mask: u32) -> IntTerms {
        let r = mask.count_ones();
        let sign = if r.is_multiple_of(2) { 1 } else { -1 };
        let mut cur: IntTerms = vec![(0, sign)];
        let mut idx: Vec<usize> = (0..self.dim_v()).filter(|&b| mask >> b & 1 == 1).collect();
        idx.reverse();
        for g in idx {
            let mut next = Vec::new();
            for &(k, c) in &cur {
                for &(k2, c2) in self.right_mul_gen(k, g) {
                    next.push((k2, c * c2));
                }
            }
            cur = normalize(next);
        }
        cur
    }

    /// Generator actions on the wedge basis of `W = span(e_0..e_{n-1})`,
    /// with `P = (-1)^deg`: `e_i` acts as `wedge_i P`, the middle generator
    /// as `P`, and `e_{2n-i}` as `-contract_i P`.
    fn gen_spin(&self, g: usize, s: u32) -> Option<(u32, i8)> {
        let parity: i8 = if s.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let below = |i: usize| (s & ((1u32 << i) - 1)).count_ones();
        let sgn = |k: u32| if k.is_multiple_of(2) { 1i8 } else { -1 };
        let n = self.n;
        if g < n {
            if s >> g & 1 == 1 {
                return None;
            }
            Some((s | (1 << g), parity * sgn(below(g))))
        } else if g == n {
            Some((s, parity))
        } else {
            let i = 2 * n - g;
            if s >> i & 1 == 0 {
                return None;
            }
            Some((s ^ (1 << i), -parity * sgn(below(i))))
        }
    }

    fn compute_spin_table(&self) -> Vec<Option<(u32, i8)>> {
        let spin_dim = 1usize << self.n;
        let mut table = Vec::with_capacity(self.dim() * spin_dim);
        for mask in 0..self.dim() as u32 {
            let gens: Vec<usize> = (0..self.dim_v()).filter(|&b| mask >> b & 1 == 1).collect();
            for s in 0..spin_dim as u32 {
                // E_I = e_{i1} ... e_{ir}: the rightmost generator acts first.
                let mut cur = Some((s, 1i8));
                for &g in gens.iter().rev() {
                    cur =
                        cur.and_then(|(v, sg)| self.gen_spin(g, v).map(|(v2, sg2)| (v2, sg * sg2)));
                }
                table.push(cur);
            }
        }
        table
    }
}

/// Merge repeated monomials and drop zeros.
fn normalize(mut t: IntTerms) -> IntTerms {
    t.sort_unstable_by_key(|&(k, _)| k);
    let mut out: IntTerms = Vec::with_capacity(t.len());
    for (k, c) in t {
        match out.last_mut() {
            Some((k0, c0)) if *k0 == k => *c0 += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}
