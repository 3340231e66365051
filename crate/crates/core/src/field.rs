//! Exact arithmetic for GF(p^r) at desk scale: p <= 7, r <= 4, so q <= 2401.
//!
//! Elements are stored in the polynomial basis of the defining irreducible:
//! the code of `sum c_i g^i` is `sum c_i p^i` where `g` is the class of X.
//! Multiplication goes through log/antilog tables (q <= 4096 always holds
//! for the supported range); addition through a full q x q table. There is
//! no floating point anywhere in this module.

use std::fmt;
use std::sync::Arc;

use crate::budget::{pow_u128, Budget};
use crate::error::{Error, Result};

/// A field element, valid only together with the `FieldCtx` it came from.
/// The code is `sum c_i p^i` for coordinates `c_i` in the polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(pub(crate) u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// The field GF(p^r) as F_p[X]/(irr), with every per-element table the rest
/// of the crate needs precomputed at construction. Immutable afterwards.
pub struct FieldCtx {
    p: u64,
    r: u32,
    q: u64,
    irr: Vec<u64>,
    add: Vec<u16>,
    neg: Vec<u16>,
    log: Vec<u32>,
    exp: Vec<u16>,
    inv: Vec<u16>,
    frob: Vec<u16>,
    trace: Vec<u16>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx(p={}, r={}, irr={:?})", self.p, self.r, self.irr)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.irr == other.irr
    }
}
impl Eq for FieldCtx {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    /// Builds GF(p^r) from a monic irreducible of degree r, coefficients
    /// low-to-high. Irreducibility is verified exhaustively (root check,
    /// plus quadratic trial division when r = 4); parameters outside the
    /// supported range are rejected rather than trusted.
    pub fn new(p: u64, r: u32, irr: &[u64]) -> Result<Arc<FieldCtx>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > 7 || r == 0 || r > 4 {
            return Err(Error::UnsupportedField { p, r });
        }
        if irr.len() != r as usize + 1 {
            return Err(Error::DegreeMismatch { expected: r as usize + 1, got: irr.len() });
        }
        let irr: Vec<u64> = irr.iter().map(|c| c % p).collect();
        if irr[r as usize] != 1 {
            return Err(Error::Parse("defining polynomial must be monic".into()));
        }
        if r >= 2 {
            for x in 0..p {
                if poly_eval_mod_p(&irr, x, p) == 0 {
                    return Err(Error::NotIrreducible);
                }
            }
        }
        if r == 4 {
            // No roots rules out linear factors; a reducible quartic without
            // roots must split into two irreducible quadratics.
            for b in 0..p {
                for c in 0..p {
                    let quad = [c, b, 1];
                    if (0..p).any(|x| poly_eval_mod_p(&quad, x, p) == 0) {
                        continue;
                    }
                    if poly_divides_mod_p(&quad, &irr, p) {
                        return Err(Error::NotIrreducible);
                    }
                }
            }
        }

        let q = p.pow(r);
        let mut ctx = FieldCtx {
            p,
            r,
            q,
            irr,
            add: Vec::new(),
            neg: Vec::new(),
            log: Vec::new(),
            exp: Vec::new(),
            inv: Vec::new(),
            frob: Vec::new(),
            trace: Vec::new(),
        };
        ctx.build_add_tables();
        ctx.build_mul_tables()?;
        ctx.build_frobenius_and_trace();
        Ok(Arc::new(ctx))
    }

    /// Parses `p=<int>;r=<int>;irr=<c0,c1,...,cr>`.
    pub fn parse(spec: &str) -> Result<Arc<FieldCtx>> {
        let mut p = None;
        let mut r = None;
        let mut irr = None;
        for part in spec.trim().split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad field spec fragment `{part}`")))?;
            match key.trim() {
                "p" => p = Some(parse_u64(value)?),
                "r" => r = Some(parse_u64(value)? as u32),
                "irr" => {
                    let coeffs: Result<Vec<u64>> = value.split(',').map(parse_u64).collect();
                    irr = Some(coeffs?);
                }
                other => return Err(Error::Parse(format!("unknown field spec key `{other}`"))),
            }
        }
        match (p, r, irr) {
            (Some(p), Some(r), Some(irr)) => FieldCtx::new(p, r, &irr),
            _ => Err(Error::Parse("field spec needs p=, r=, irr=".into())),
        }
    }

    pub fn spec_string(&self) -> String {
        let irr: Vec<String> = self.irr.iter().map(u64::to_string).collect();
        format!("p={};r={};irr={}", self.p, self.r, irr.join(","))
    }

    fn build_add_tables(&mut self) {
        let q = self.q as usize;
        let p = self.p;
        self.add = vec![0; q * q];
        self.neg = vec![0; q];
        for a in 0..q as u64 {
            for b in 0..q as u64 {
                let mut code = 0u64;
                let mut mult = 1u64;
                let (mut x, mut y) = (a, b);
                for _ in 0..self.r {
                    code += ((x % p + y % p) % p) * mult;
                    mult *= p;
                    x /= p;
                    y /= p;
                }
                self.add[a as usize * q + b as usize] = code as u16;
            }
        }
        for a in 0..q as u64 {
            let mut code = 0u64;
            let mut mult = 1u64;
            let mut x = a;
            for _ in 0..self.r {
                code += ((p - x % p) % p) * mult;
                mult *= p;
                x /= p;
            }
            self.neg[a as usize] = code as u16;
        }
    }

    /// Schoolbook product in F_p[X]/(irr); used to build the log tables and
    /// kept as the independent reference path for tests.
    pub(crate) fn mul_schoolbook(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p;
        let r = self.r as usize;
        let da = digits(a.0 as u64, p, r);
        let db = digits(b.0 as u64, p, r);
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &ca) in da.iter().enumerate() {
            for (j, &cb) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ca * cb) % p;
            }
        }
        // reduce by the monic irr: X^r = -(irr_0 + irr_1 X + ... )
        for k in (r..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &ic) in self.irr.iter().take(r).enumerate() {
                let sub = (c * ic) % p;
                prod[k - r + j] = (prod[k - r + j] + p * p - sub) % p;
            }
        }
        let mut code = 0u64;
        for i in (0..r).rev() {
            code = code * p + prod[i];
        }
        FieldElem(code as u16)
    }

    fn build_mul_tables(&mut self) -> Result<()> {
        let q = self.q;
        self.log = vec![u32::MAX; q as usize];
        self.exp = vec![0; (q - 1) as usize];
        // Find a multiplicative generator by exhausting candidates.
        let mut found = false;
        'cand: for g in 1..q {
            let gen = FieldElem(g as u16);
            let mut x = FieldElem(1);
            for i in 0..(q - 1) {
                self.exp[i as usize] = x.0;
                x = self.mul_schoolbook(x, gen);
                if x.0 == 1 && i + 1 < q - 1 {
                    continue 'cand; // order divides i+1 < q-1
                }
            }
            if x.0 == 1 {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::InternalInconsistency("no multiplicative generator".into()));
        }
        for (i, &code) in self.exp.iter().enumerate() {
            self.log[code as usize] = i as u32;
        }
        self.inv = vec![0; q as usize];
        for a in 1..q as usize {
            let l = self.log[a] as u64;
            self.inv[a] = self.exp[((q - 1 - l) % (q - 1)) as usize];
        }
        Ok(())
    }

    fn build_frobenius_and_trace(&mut self) {
        let q = self.q as usize;
        self.frob = vec![0; q];
        self.trace = vec![0; q];
        for a in 0..q {
            let x = FieldElem(a as u16);
            self.frob[a] = self.pow(x, self.p).0;
        }
        for a in 0..q {
            let mut acc = FieldElem(a as u16);
            let mut term = FieldElem(a as u16);
            for _ in 1..self.r {
                term = FieldElem(self.frob[term.idx()]);
                acc = self.add(acc, term);
            }
            debug_assert!(acc.0 < self.p as u16, "trace landed outside the prime subfield");
            self.trace[a] = acc.0;
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn irr(&self) -> &[u64] {
        &self.irr
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }
    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The class of X modulo irr (for r = 1 this is the residue -irr_0).
    pub fn gen(&self) -> FieldElem {
        if self.r == 1 {
            self.neg(self.from_prime(self.irr[0]))
        } else {
            FieldElem(self.p as u16)
        }
    }

    /// Embeds a residue of F_p as a constant.
    pub fn from_prime(&self, c: u64) -> FieldElem {
        FieldElem((c % self.p) as u16)
    }

    /// Element with the given polynomial-basis coordinates (low to high).
    pub fn elem(&self, coords: &[u64]) -> Result<FieldElem> {
        if coords.len() != self.r as usize {
            return Err(Error::DimensionMismatch { expected: self.r as usize, got: coords.len() });
        }
        let mut code = 0u64;
        for &c in coords.iter().rev() {
            code = code * self.p + c % self.p;
        }
        Ok(FieldElem(code as u16))
    }

    pub fn coords(&self, x: FieldElem) -> Vec<u64> {
        digits(x.0 as u64, self.p, self.r as usize)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.idx() * self.q as usize + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let s = self.log[a.idx()] as u64 + self.log[b.idx()] as u64;
        FieldElem(self.exp[(s % (self.q - 1)) as usize])
    }

    /// Multiplicative inverse; zero maps to zero by convention (callers
    /// guard the zero case where it matters).
    #[inline]
    pub fn invert(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.inv[a.idx()])
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem(1);
        }
        if a.0 == 0 {
            return FieldElem(0);
        }
        if !self.exp.is_empty() && !self.log.is_empty() && self.log[a.idx()] != u32::MAX {
            let l = self.log[a.idx()] as u128 * e as u128;
            return FieldElem(self.exp[(l % (self.q as u128 - 1)) as usize]);
        }
        // Table-free path used during construction.
        let mut acc = FieldElem(1);
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, base);
            }
            base = self.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.frob[a.idx()])
    }

    /// Tr(x) = x + x^p + ... + x^{p^(r-1)}, an element of the prime subfield.
    #[inline]
    pub fn trace(&self, x: FieldElem) -> FieldElem {
        FieldElem(self.trace[x.idx()])
    }

    /// |Tr(x)|: the canonical integer representative in {0, ..., p-1}.
    #[inline]
    pub fn trace_int(&self, x: FieldElem) -> u64 {
        self.trace[x.idx()] as u64
    }

    pub fn in_prime_subfield(&self, x: FieldElem) -> bool {
        (x.0 as u64) < self.p
    }

    /// The canonical integer representative of a prime-subfield element.
    pub fn prime_repr(&self, x: FieldElem) -> Option<u64> {
        self.in_prime_subfield(x).then_some(x.0 as u64)
    }

    /// All q elements, zero first, in code order.
    pub fn elems(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u16).map(FieldElem)
    }

    /// wt_alpha(c) = sum_i |Tr(alpha_i c)|.
    pub fn weight(&self, basis: &Basis, c: FieldElem) -> u64 {
        basis.elems.iter().map(|&a| self.trace_int(self.mul(a, c))).sum()
    }

    /// The polynomial basis (1, g, g^2, ..., g^(r-1)).
    pub fn polynomial_basis(self: &Arc<Self>) -> Basis {
        let g = FieldElem(self.p as u16);
        let mut elems = vec![self.one()];
        for _ in 1..self.r {
            let last = *elems.last().unwrap();
            elems.push(self.mul(last, g));
        }
        Basis { elems }
    }

    /// Dual basis: beta with Tr(alpha_i beta_j) = delta_ij, therefore
    /// x = sum_i beta_i Tr(alpha_i x) for every x.
    pub fn dual_basis(&self, alpha: &Basis) -> Result<Basis> {
        let r = self.r as usize;
        if alpha.elems.len() != r {
            return Err(Error::NotABasis);
        }
        // Tr(alpha_i beta) is F_p-linear in beta's coordinates: the matrix
        // entry (i, k) is |Tr(alpha_i g^k)|.
        let mut mat = vec![vec![0u64; r]; r];
        for (i, &a) in alpha.elems.iter().enumerate() {
            for k in 0..r {
                let gk = FieldElem(self.p.pow(k as u32) as u16);
                mat[i][k] = self.trace_int(self.mul(a, gk));
            }
        }
        let inv = invert_matrix_mod_p(&mat, self.p).ok_or(Error::NotABasis)?;
        let mut betas = Vec::with_capacity(r);
        for j in 0..r {
            let coords: Vec<u64> = (0..r).map(|k| inv[k][j]).collect();
            betas.push(self.elem(&coords)?);
        }
        Ok(Basis { elems: betas })
    }

    /// Iterator over all q^n points of K^n; errors when q^n exceeds the budget.
    pub fn vectors(self: &Arc<Self>, n: usize, budget: Budget) -> Result<VecDomain> {
        let size = pow_u128(self.q, n as u32);
        budget.check(size)?;
        Ok(VecDomain { ctx: Arc::clone(self), n, size: size as u64 })
    }
}

/// r linearly independent field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    elems: Vec<FieldElem>,
}

impl Basis {
    pub fn new(ctx: &FieldCtx, elems: Vec<FieldElem>) -> Result<Basis> {
        let r = ctx.r as usize;
        if elems.len() != r {
            return Err(Error::NotABasis);
        }
        let rows: Vec<Vec<u64>> = elems.iter().map(|&e| ctx.coords(e)).collect();
        if rank_mod_p(&rows, ctx.p) != r {
            return Err(Error::NotABasis);
        }
        Ok(Basis { elems })
    }

    pub fn elems(&self) -> &[FieldElem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// The point set K^n with points addressed by their index in lexicographic
/// coordinate order: index = sum_i code(x_i) q^(i-1), so x_1 varies fastest
/// and index 0 is the origin.
#[derive(Debug, Clone)]
pub struct VecDomain {
    ctx: Arc<FieldCtx>,
    n: usize,
    size: u64,
}

impl VecDomain {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> {
        0..self.size
    }

    pub fn point(&self, index: u64) -> Vec<FieldElem> {
        let q = self.ctx.q;
        let mut x = index;
        (0..self.n)
            .map(|_| {
                let c = FieldElem((x % q) as u16);
                x /= q;
                c
            })
            .collect()
    }

    pub fn index(&self, point: &[FieldElem]) -> u64 {
        debug_assert_eq!(point.len(), self.n);
        let q = self.ctx.q;
        let mut idx = 0u64;
        for c in point.iter().rev() {
            idx = idx * q + c.0 as u64;
        }
        idx
    }

    pub fn coord(&self, index: u64, i: usize) -> FieldElem {
        let q = self.ctx.q;
        FieldElem(((index / q.pow(i as u32)) % q) as u16)
    }

    /// Pointwise sum of two points, by index.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let q = self.ctx.q;
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut x, mut y) = (a, b);
        for _ in 0..self.n {
            let s = self.ctx.add(FieldElem((x % q) as u16), FieldElem((y % q) as u16));
            out += s.0 as u64 * mult;
            mult *= q;
            x /= q;
            y /= q;
        }
        out
    }

    /// Scalar multiple c * x, by index.
    pub fn smul(&self, c: FieldElem, a: u64) -> u64 {
        let q = self.ctx.q;
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut x = a;
        for _ in 0..self.n {
            let s = self.ctx.mul(c, FieldElem((x % q) as u16));
            out += s.0 as u64 * mult;
            mult *= q;
            x /= q;
        }
        out
    }

    /// sum_i w_i x_i for point indices x_i.
    pub fn linear_combination(&self, weights: &[FieldElem], points: &[u64]) -> u64 {
        debug_assert_eq!(weights.len(), points.len());
        let mut acc = 0u64;
        for (&w, &x) in weights.iter().zip(points) {
            acc = self.add(acc, self.smul(w, x));
        }
        acc
    }
}

/// Element text form `[c0,...,c_{r-1}]`.
pub fn format_elem(ctx: &FieldCtx, x: FieldElem) -> String {
    let coords: Vec<String> = ctx.coords(x).iter().map(u64::to_string).collect();
    format!("[{}]", coords.join(","))
}

pub fn parse_elem(ctx: &FieldCtx, s: &str) -> Result<FieldElem> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("element must look like [c0,...]: `{s}`")))?;
    let coords: Result<Vec<u64>> = inner.split(',').map(parse_u64).collect();
    ctx.elem(&coords?)
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn digits(mut x: u64, p: u64, r: usize) -> Vec<u64> {
    (0..r)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn poly_eval_mod_p(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

/// Does the monic `div` divide the monic `poly` over F_p?
fn poly_divides_mod_p(div: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap() % p;
        let k = rem.len() - 1 - d;
        if lead != 0 {
            for (j, &dc) in div.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p * p - (lead * dc) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&c| c % p).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..ncols {
            m[rank][c] = (m[rank][c] * inv) % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for c in col..ncols {
                    m[i][c] = (m[i][c] + p * p - (f * m[rank][c]) % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn invert_matrix_mod_p(mat: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = mat.len();
    let mut a: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|&c| c % p).collect()).collect();
    let mut inv: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| a[i][col] != 0)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let f = mod_inverse(a[col][col], p);
        for c in 0..n {
            a[col][c] = (a[col][c] * f) % p;
            inv[col][c] = (inv[col][c] * f) % p;
        }
        for i in 0..n {
            if i != col && a[i][col] != 0 {
                let f = a[i][col];
                for c in 0..n {
                    a[i][c] = (a[i][c] + p * p - (f * a[col][c]) % p) % p;
                    inv[i][c] = (inv[i][c] + p * p - (f * inv[col][c]) % p) % p;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Arc<FieldCtx> {
        FieldCtx::new(2, 2, &[1, 1, 1]).unwrap()
    }

    fn gf8() -> Arc<FieldCtx> {
        FieldCtx::new(2, 3, &[1, 1, 0, 1]).unwrap()
    }

    fn gf9() -> Arc<FieldCtx> {
        FieldCtx::new(3, 2, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn construction_examples() {
        assert_eq!(gf4().q(), 4);
        assert_eq!(FieldCtx::new(2, 2, &[1, 0, 1]).unwrap_err(), Error::NotIrreducible);
        assert_eq!(gf9().q(), 9);
        assert_eq!(FieldCtx::new(4, 1, &[0, 1]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FieldCtx::new(11, 1, &[0, 1]).unwrap_err(),
            Error::UnsupportedField { .. }
        ));
    }

    #[test]
    fn quartic_without_roots_but_reducible_is_rejected() {
        // (X^2+X+1)^2 = X^4+2X^3+3X^2+2X+1 = X^4+X^2+1 over F_2: no roots.
        assert_eq!(FieldCtx::new(2, 4, &[1, 0, 1, 0, 1]).unwrap_err(), Error::NotIrreducible);
        // X^4+X+1 is irreducible over F_2.
        assert!(FieldCtx::new(2, 4, &[1, 1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn trace_examples() {
        let k = gf4();
        let w = k.gen();
        assert_eq!(k.trace(k.zero()), k.zero());
        assert_eq!(k.trace(w), k.one());
        assert_eq!(k.trace(k.one()), k.zero());
    }

    #[test]
    fn trace_linearity_and_fibers() {
        for ctx in [gf4(), gf8(), gf9()] {
            let p = ctx.p();
            for a in 0..p {
                for b in 0..p {
                    let (ea, eb) = (ctx.from_prime(a), ctx.from_prime(b));
                    for x in ctx.elems() {
                        for y in ctx.elems() {
                            let lhs = ctx.trace(ctx.add(ctx.mul(ea, x), ctx.mul(eb, y)));
                            let rhs = ctx.add(
                                ctx.mul(ea, ctx.trace(x)),
                                ctx.mul(eb, ctx.trace(y)),
                            );
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
            // surjectivity with equal fibers q/p
            for c in 0..p {
                let count = ctx.elems().filter(|&x| ctx.trace_int(x) == c).count() as u64;
                assert_eq!(count, ctx.q() / p);
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_fixing_prime_subfield() {
        for ctx in [gf4(), gf8(), gf9()] {
            for x in ctx.elems() {
                for y in ctx.elems() {
                    assert_eq!(
                        ctx.frobenius(ctx.mul(x, y)),
                        ctx.mul(ctx.frobenius(x), ctx.frobenius(y))
                    );
                    assert_eq!(
                        ctx.frobenius(ctx.add(x, y)),
                        ctx.add(ctx.frobenius(x), ctx.frobenius(y))
                    );
                }
                let fixed = ctx.frobenius(x) == x;
                assert_eq!(fixed, ctx.in_prime_subfield(x));
            }
        }
    }

    #[test]
    fn log_tables_match_schoolbook() {
        for ctx in [gf4(), gf8(), gf9(), FieldCtx::new(7, 1, &[0, 1]).unwrap()] {
            for a in ctx.elems() {
                for b in ctx.elems() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_schoolbook(a, b));
                }
                if a != ctx.zero() {
                    assert_eq!(ctx.mul(a, ctx.invert(a)), ctx.one());
                }
            }
        }
    }

    #[test]
    fn dual_basis_gf4() {
        let k = gf4();
        let w = k.gen();
        let alpha = Basis::new(&k, vec![k.one(), w]).unwrap();
        let beta = k.dual_basis(&alpha).unwrap();
        // omega^2 = omega + 1
        let w2 = k.mul(w, w);
        assert_eq!(beta.elems(), &[w2, k.one()]);
        for x in k.elems() {
            let mut acc = k.zero();
            for (a, b) in alpha.elems().iter().zip(beta.elems()) {
                acc = k.add(acc, k.mul(*b, k.trace(k.mul(*a, x))));
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn dual_basis_gf9_polynomial_basis() {
        let k = gf9();
        let alpha = k.polynomial_basis();
        let beta = k.dual_basis(&alpha).unwrap();
        for x in k.elems() {
            let mut acc = k.zero();
            for (a, b) in alpha.elems().iter().zip(beta.elems()) {
                acc = k.add(acc, k.mul(*b, k.trace(k.mul(*a, x))));
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn dependent_elements_rejected() {
        let k = gf4();
        assert_eq!(Basis::new(&k, vec![k.one(), k.one()]).unwrap_err(), Error::NotABasis);
    }

    #[test]
    fn weight_examples() {
        let k = gf4();
        let w = k.gen();
        let alpha = Basis::new(&k, vec![k.one(), w]).unwrap();
        assert_eq!(k.weight(&alpha, k.zero()), 0);
        assert_eq!(k.weight(&alpha, k.one()), 1);
        assert_eq!(k.weight(&alpha, w), 2);
        for c in k.elems() {
            let wt = k.weight(&alpha, c);
            assert!(wt <= k.r() as u64 * (k.p() - 1));
            assert_eq!(wt == 0, c == k.zero());
        }
    }

    #[test]
    fn enumeration() {
        let f2 = FieldCtx::new(2, 1, &[0, 1]).unwrap();
        let elems: Vec<FieldElem> = f2.elems().collect();
        assert_eq!(elems, vec![FieldElem(0), FieldElem(1)]);

        let k = gf4();
        let elems: Vec<FieldElem> = k.elems().collect();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], k.zero());

        let f3 = FieldCtx::new(3, 1, &[0, 1]).unwrap();
        let dom = f3.vectors(2, Budget::DEFAULT).unwrap();
        assert_eq!(dom.size(), 9);
        assert!(f3.vectors(40, Budget::DEFAULT).is_err());
    }

    #[test]
    fn vec_domain_roundtrip_and_ops() {
        let k = gf4();
        let dom = k.vectors(3, Budget::DEFAULT).unwrap();
        for idx in dom.indices() {
            assert_eq!(dom.index(&dom.point(idx)), idx);
        }
        let a = dom.index(&[FieldElem(1), FieldElem(2), FieldElem(3)]);
        let b = dom.index(&[FieldElem(3), FieldElem(2), FieldElem(1)]);
        let s = dom.add(a, b);
        let expect: Vec<FieldElem> = vec![
            k.add(FieldElem(1), FieldElem(3)),
            k.add(FieldElem(2), FieldElem(2)),
            k.add(FieldElem(3), FieldElem(1)),
        ];
        assert_eq!(dom.point(s), expect);
    }

    #[test]
    fn spec_string_roundtrip() {
        for ctx in [gf4(), gf8(), gf9()] {
            let spec = ctx.spec_string();
            let back = FieldCtx::parse(&spec).unwrap();
            assert_eq!(*back, *ctx);
        }
        let k = gf4();
        for x in k.elems() {
            assert_eq!(parse_elem(&k, &format_elem(&k, x)).unwrap(), x);
        }
    }
}
