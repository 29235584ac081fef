//! Factorization over Q: Yun squarefree decomposition, then Zassenhaus on
//! each squarefree part (Cantor-Zassenhaus mod a good prime, quadratic
//! multifactor Hensel lifting up to the Landau-Mignotte bound, subset
//! recombination with cheap early aborts).
//!
//! The mod-p prime is the smallest p >= 5 not dividing lc(f) * disc(f), and
//! the equal-degree splitting RNG is seeded with a fixed constant, so the
//! whole pipeline is deterministic.

use super::{poly_gcd, IntPoly, QPoly};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact factorization `f = content * prod factors[i].0 ^ factors[i].1` with
/// monic irreducible rational factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub content: BigRational,
    pub factors: Vec<(QPoly, u32)>,
}

impl QFactorization {
    /// Multiplies the factorization back together.
    pub fn product(&self) -> QPoly {
        let mut acc = QPoly::constant(self.content.clone());
        for (p, e) in &self.factors {
            acc = &acc * &p.pow(*e);
        }
        acc
    }
}

pub fn factor_rational(f: &QPoly) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::Precondition("factor_rational of zero polynomial"));
    }
    let content = f.leading().unwrap().clone();
    let monic = f.monic();
    let (xpow, body) = monic.split_power_of_x();
    let mut factors: Vec<(QPoly, u32)> = Vec::new();
    if xpow > 0 {
        factors.push((QPoly::x(), xpow as u32));
    }
    for (part, mult) in yun_squarefree(&body)? {
        for irr in factor_squarefree(&part)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs()))
    });
    let fact = QFactorization { content, factors };
    debug_assert_eq!(fact.product(), *f);
    Ok(fact)
}

/// Yun's algorithm; input monic, output monic squarefree parts with their
/// multiplicities (parts of degree zero are dropped).
fn yun_squarefree(f: &QPoly) -> Result<Vec<(QPoly, u32)>> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = poly_gcd(f, &df);
    let mut b = f.divrem(&a0)?.0.monic();
    let mut c = df.divrem(&a0)?.0;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&b, &d);
        b = b.divrem(&a)?.0.monic();
        c = d.divrem(&a)?.0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(f: &QPoly) -> Result<Vec<QPoly>> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let (_, fz) = f.primitive_integer_model();
    let lc = fz.leading().unwrap().clone();

    // Monic integer model: F(x) = lc^(n-1) * fz(x/lc). Its factorization maps
    // back through x -> lc*x, an invertible change of variable over Q.
    let mut fcoeffs = Vec::with_capacity(n + 1);
    for (i, a) in fz.coeffs().iter().enumerate().take(n) {
        fcoeffs.push(a * lc.pow((n - 1 - i) as u32));
    }
    fcoeffs.push(BigInt::one());
    let fmonic = IntPoly::new(fcoeffs);
    debug_assert!(fmonic.leading().unwrap().is_one());

    let p = select_prime(&fz);
    let mut result = Vec::new();
    let lc_rat = BigRational::from_integer(lc);
    for g in zassenhaus_monic(&fmonic, p) {
        let mapped = g.to_qpoly().compose_scale_arg(&lc_rat).monic();
        result.push(mapped);
    }
    debug_assert_eq!(
        result.iter().fold(QPoly::one(), |acc, g| &acc * g),
        *f
    );
    Ok(result)
}

/// Smallest prime p >= 5 with p not dividing lc(f) and f squarefree mod p
/// (equivalently p not dividing lc(f) * disc(f)).
fn select_prime(f: &IntPoly) -> u64 {
    let mut p = 5u64;
    loop {
        if is_prime(p) && !f.leading().unwrap().is_multiple_of(&BigInt::from(p)) {
            let fp = ZpPoly::from_intpoly(f, p);
            if fp.degree() == f.degree() && zp_gcd(&fp, &fp.derivative(p), p).degree() == Some(0) {
                return p;
            }
        }
        p += 2;
    }
}

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

/// Zassenhaus for a monic squarefree integer polynomial; returns monic
/// irreducible integer factors.
fn zassenhaus_monic(f: &IntPoly, p: u64) -> Vec<IntPoly> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.clone()];
    }
    let fp = ZpPoly::from_intpoly(f, p);
    let modular = cantor_zassenhaus(&fp, p);
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Landau-Mignotte: any monic divisor g of f has |g|_inf <= 2^n |f|_2.
    let norm2sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2sq.sqrt() + 1);
    let target = BigInt::from(2) * bound + 1;

    let lifted = hensel_lift(f, &modular, p, &target);
    recombine(f, lifted.factors, &lifted.modulus)
}

/// Subset recombination over the lifted modular factors.
fn recombine(f: &IntPoly, mut modular: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= modular.len() {
        let idxs: Vec<usize> = (0..modular.len()).collect();
        let mut chosen = vec![0usize; size];
        if try_subsets(&idxs, size, 0, &mut chosen, &mut |subset| {
            // Cheap abort: the symmetric constant term must divide f(0).
            let mut c0 = BigInt::one();
            for &i in subset {
                c0 = (c0 * &modular[i].coeffs()[0]) % modulus;
            }
            let c0 = symmetric(c0, modulus);
            let r0 = &remaining.coeffs()[0];
            if !c0.is_zero() && !r0.is_multiple_of(&c0) {
                return false;
            }
            let mut prod = IntPoly::new(vec![BigInt::one()]);
            for &i in subset {
                prod = mul_mod(&prod, &modular[i], modulus);
            }
            let cand = IntPoly::new(
                prod.coeffs()
                    .iter()
                    .map(|c| symmetric(c.clone(), modulus))
                    .collect(),
            );
            match monic_int_divrem(&remaining, &cand) {
                Some((q, r)) if r.is_zero() => {
                    found.push(cand);
                    remaining = q;
                    let mut del: Vec<usize> = subset.to_vec();
                    del.sort_unstable();
                    for &i in del.iter().rev() {
                        modular.remove(i);
                    }
                    true
                }
                _ => false,
            }
        }) {
            continue 'outer;
        }
        size += 1;
    }
    if remaining.degree().unwrap_or(0) >= 1 {
        found.push(remaining);
    }
    found
}

/// Visits size-`size` subsets in lexicographic index order; `visit` returns
/// true to stop the scan (a factor was extracted). Returns whether it stopped.
fn try_subsets(
    idxs: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        idxs: &[usize],
        size: usize,
        from: usize,
        depth: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == size {
            return visit(chosen);
        }
        for pos in from..idxs.len() {
            if idxs.len() - pos < size - depth {
                break;
            }
            chosen[depth] = idxs[pos];
            if go(idxs, size, pos + 1, depth + 1, chosen, visit) {
                return true;
            }
        }
        false
    }
    go(idxs, size, from, 0, chosen, visit)
}

fn symmetric(mut c: BigInt, m: &BigInt) -> BigInt {
    c = c.mod_floor(m);
    if &c + &c > *m {
        c -= m;
    }
    c
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    for c in out.iter_mut() {
        *c = c.mod_floor(m);
    }
    IntPoly::new(out)
}

fn sub_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push((x - y).mod_floor(m));
    }
    IntPoly::new(out)
}

fn add_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push((x + y).mod_floor(m));
    }
    IntPoly::new(out)
}

/// Division by a monic divisor, valid over Z and over Z/m alike.
fn monic_int_divrem(f: &IntPoly, g: &IntPoly) -> Option<(IntPoly, IntPoly)> {
    let dg = g.degree()?;
    if !g.leading().unwrap().is_one() {
        return None;
    }
    let mut rem = f.coeffs().to_vec();
    if rem.len() < dg + 1 {
        return Some((IntPoly::zero(), f.clone()));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dg];
    for i in (dg..rem.len()).rev() {
        let head = rem[i].clone();
        if head.is_zero() {
            continue;
        }
        for (j, gc) in g.coeffs().iter().enumerate() {
            rem[i - dg + j] -= gc * &head;
        }
        quo[i - dg] = head;
    }
    Some((IntPoly::new(quo), IntPoly::new(rem)))
}

fn divrem_mod(f: &IntPoly, g: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(g.leading().unwrap().is_one());
    let (q, r) = monic_int_divrem(f, g).unwrap();
    let q = IntPoly::new(q.coeffs().iter().map(|c| c.mod_floor(m)).collect());
    let r = IntPoly::new(r.coeffs().iter().map(|c| c.mod_floor(m)).collect());
    (q, r)
}

struct Lifted {
    factors: Vec<IntPoly>,
    modulus: BigInt,
}

/// Multifactor quadratic Hensel lifting via a balanced factor tree.
fn hensel_lift(f: &IntPoly, modular: &[ZpPoly], p: u64, target: &BigInt) -> Lifted {
    enum Node {
        Leaf(IntPoly),
        Pair {
            left: Box<Node>,
            right: Box<Node>,
            bezout_s: IntPoly,
            bezout_t: IntPoly,
        },
    }

    fn product(node: &Node, m: &BigInt) -> IntPoly {
        match node {
            Node::Leaf(g) => g.clone(),
            Node::Pair { left, right, .. } => {
                mul_mod(&product(left, m), &product(right, m), m)
            }
        }
    }

    fn build(factors: &[IntPoly], p: u64) -> Node {
        if factors.len() == 1 {
            return Node::Leaf(factors[0].clone());
        }
        let mid = factors.len() / 2;
        let left = build(&factors[..mid], p);
        let right = build(&factors[mid..], p);
        let pm = BigInt::from(p);
        let g = product(&left, &pm);
        let h = product(&right, &pm);
        let gp = ZpPoly::from_intpoly(&g, p);
        let hp = ZpPoly::from_intpoly(&h, p);
        let (s, t) = zp_bezout(&gp, &hp, p);
        Node::Pair {
            left: Box::new(left),
            right: Box::new(right),
            bezout_s: s.to_intpoly(),
            bezout_t: t.to_intpoly(),
        }
    }

    // One quadratic Hensel step at a node: mod m data -> mod m^2 data.
    fn step(node: &mut Node, f: &IntPoly, m: &BigInt) {
        let m2 = m * m;
        match node {
            Node::Leaf(g) => {
                *g = IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(&m2)).collect());
            }
            Node::Pair {
                left,
                right,
                bezout_s,
                bezout_t,
            } => {
                let g = product(left, &m2);
                let h = product(right, &m2);
                let s = bezout_s.clone();
                let t = bezout_t.clone();
                let e = sub_mod(f, &mul_mod(&g, &h, &m2), &m2);
                let (q, r) = divrem_mod(&mul_mod(&s, &e, &m2), &h, &m2);
                let g_star = add_mod(&add_mod(&g, &mul_mod(&t, &e, &m2), &m2), &mul_mod(&q, &g, &m2), &m2);
                let h_star = add_mod(&h, &r, &m2);
                let one = IntPoly::new(vec![BigInt::one()]);
                let b = sub_mod(
                    &add_mod(&mul_mod(&s, &g_star, &m2), &mul_mod(&t, &h_star, &m2), &m2),
                    &one,
                    &m2,
                );
                let (c, d) = divrem_mod(&mul_mod(&s, &b, &m2), &h_star, &m2);
                let s_star = sub_mod(&s, &d, &m2);
                let t_star = sub_mod(
                    &sub_mod(&t, &mul_mod(&t, &b, &m2), &m2),
                    &mul_mod(&c, &g_star, &m2),
                    &m2,
                );
                *bezout_s = s_star;
                *bezout_t = t_star;
                step(left, &g_star, m);
                step(right, &h_star, m);
            }
        }
    }

    fn leaves(node: Node, out: &mut Vec<IntPoly>) {
        match node {
            Node::Leaf(g) => out.push(g),
            Node::Pair { left, right, .. } => {
                leaves(*left, out);
                leaves(*right, out);
            }
        }
    }

    let ints: Vec<IntPoly> = modular.iter().map(|g| g.to_intpoly()).collect();
    let mut tree = build(&ints, p);
    let mut m = BigInt::from(p);
    while m < *target {
        let m2 = &m * &m;
        let f_red = IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(&m2)).collect());
        step(&mut tree, &f_red, &m);
        m = m2;
    }
    let mut out = Vec::new();
    leaves(tree, &mut out);
    Lifted {
        factors: out,
        modulus: m,
    }
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p a small odd prime.

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZpPoly {
    coeffs: Vec<u64>,
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invp(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulp(result, base, p);
        }
        base = mulp(base, base, p);
        e >>= 1;
    }
    result
}

impl ZpPoly {
    fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ZpPoly { coeffs }
    }

    fn from_intpoly(f: &IntPoly, p: u64) -> Self {
        let pm = BigInt::from(p);
        ZpPoly::new(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pm).to_u64().unwrap())
                .collect(),
            p,
        )
    }

    fn to_intpoly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn zero() -> Self {
        ZpPoly { coeffs: vec![] }
    }

    fn x() -> Self {
        ZpPoly { coeffs: vec![0, 1] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn monic(&self, p: u64) -> ZpPoly {
        match self.coeffs.last() {
            None => ZpPoly::zero(),
            Some(&lc) => {
                let inv = invp(lc, p);
                ZpPoly::new(self.coeffs.iter().map(|&c| mulp(c, inv, p)).collect(), p)
            }
        }
    }

    fn derivative(&self, p: u64) -> ZpPoly {
        if self.coeffs.len() <= 1 {
            return ZpPoly::zero();
        }
        ZpPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulp(i as u64 % p, c, p))
                .collect(),
            p,
        )
    }

    fn mul(&self, other: &ZpPoly, p: u64) -> ZpPoly {
        if self.is_zero() || other.is_zero() {
            return ZpPoly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulp(a, b, p)) % p;
            }
        }
        ZpPoly::new(out, p)
    }

    fn sub(&self, other: &ZpPoly, p: u64) -> ZpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out.push((a + p - b) % p);
        }
        ZpPoly::new(out, p)
    }

    fn divrem(&self, g: &ZpPoly, p: u64) -> (ZpPoly, ZpPoly) {
        let dg = g.degree().expect("division by zero in F_p[x]");
        let lc_inv = invp(*g.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() < dg + 1 {
            return (ZpPoly::zero(), self.clone());
        }
        let mut quo = vec![0u64; rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let head = mulp(rem[i], lc_inv, p);
            if head == 0 {
                continue;
            }
            for (j, &gc) in g.coeffs.iter().enumerate() {
                let idx = i - dg + j;
                rem[idx] = (rem[idx] + p - mulp(gc, head, p)) % p;
            }
            quo[i - dg] = head;
        }
        (ZpPoly::new(quo, p), ZpPoly::new(rem, p))
    }

    fn rem(&self, g: &ZpPoly, p: u64) -> ZpPoly {
        self.divrem(g, p).1
    }

    fn powmod(&self, e: &BigUint, modulus: &ZpPoly, p: u64) -> ZpPoly {
        let mut result = ZpPoly::new(vec![1], p);
        let mut base = self.rem(modulus, p);
        for bit in (0..e.bits()).map(|i| e.bit(i)) {
            if bit {
                result = result.mul(&base, p).rem(modulus, p);
            }
            base = base.mul(&base, p).rem(modulus, p);
        }
        result
    }
}

fn zp_gcd(a: &ZpPoly, b: &ZpPoly, p: u64) -> ZpPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(&b, p);
        a = b;
        b = r;
    }
    a.monic(p)
}

/// Extended Euclid: returns (s, t) with s*g + t*h = 1, deg s < deg h,
/// deg t < deg g. Requires gcd(g, h) = 1.
fn zp_bezout(g: &ZpPoly, h: &ZpPoly, p: u64) -> (ZpPoly, ZpPoly) {
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (ZpPoly::new(vec![1], p), ZpPoly::zero());
    let (mut t0, mut t1) = (ZpPoly::zero(), ZpPoly::new(vec![1], p));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1, p);
        let s = s0.sub(&q.mul(&s1, p), p);
        let t = t0.sub(&q.mul(&t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(r0.degree(), Some(0));
    let inv = invp(r0.coeffs[0], p);
    let scale = |f: &ZpPoly| ZpPoly::new(f.coeffs.iter().map(|&c| mulp(c, inv, p)).collect(), p);
    (scale(&s0), scale(&t0))
}

/// Cantor-Zassenhaus: distinct-degree splitting followed by equal-degree
/// splitting. Deterministically seeded.
fn cantor_zassenhaus(f: &ZpPoly, p: u64) -> Vec<ZpPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7467_2d68_6569_6774);
    let mut out = Vec::new();
    let mut v = f.monic(p);
    let mut h = ZpPoly::x();
    let mut d = 0usize;
    while v.degree().unwrap_or(0) >= 1 {
        d += 1;
        if 2 * d > v.degree().unwrap() {
            out.push((v.clone(), v.degree().unwrap()));
            break;
        }
        h = h.powmod(&BigUint::from(p), &v, p);
        let hx = h.sub(&ZpPoly::x(), p);
        let g = zp_gcd(&hx, &v, p);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            v = v.divrem(&g, p).0.monic(p);
            h = h.rem(&v, p);
        }
    }
    let mut factors = Vec::new();
    for (g, d) in out {
        equal_degree(&g, d, p, &mut rng, &mut factors);
    }
    factors.sort_by(|a, b| (a.coeffs.len(), &a.coeffs).cmp(&(b.coeffs.len(), &b.coeffs)));
    factors
}

fn equal_degree(g: &ZpPoly, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<ZpPoly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.monic(p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let r = ZpPoly::new(coeffs, p);
        if r.degree().is_none() {
            continue;
        }
        let h = r.powmod(&e, g, p);
        let h1 = h.sub(&ZpPoly::new(vec![1], p), p);
        let w = zp_gcd(&h1, g, p);
        let dw = w.degree().unwrap_or(0);
        if dw > 0 && dw < n {
            let rest = g.divrem(&w, p).0;
            equal_degree(&w, d, p, rng, out);
            equal_degree(&rest, d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::cyclotomic;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64(coeffs)
    }

    /// Irreducibility oracle for small degrees: no monic rational factor of
    /// degree 1 or 2 with bounded numerator/denominator divides f.
    fn no_small_factor(f: &QPoly, bound: i64) -> bool {
        for a in -bound..=bound {
            for den in 1..=2i64 {
                let lin = QPoly::new(vec![
                    BigRational::new(BigInt::from(a), BigInt::from(den)),
                    BigRational::one(),
                ]);
                if f.degree() > lin.degree() && lin.divides(f) {
                    return false;
                }
            }
        }
        for a in -bound..=bound {
            for b in -bound..=bound {
                let quad = qp(&[b, a, 1]);
                if f.degree() > quad.degree() && quad.divides(f) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factor_x4_minus_1() {
        let f = qp(&[-1, 0, 0, 0, 1]);
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.content, BigRational::one());
        assert_eq!(
            fact.factors,
            vec![
                (qp(&[-1, 1]), 1),
                (qp(&[1, 1]), 1),
                (qp(&[1, 0, 1]), 1)
            ]
        );
        assert_eq!(fact.product(), f);
        assert!(no_small_factor(&qp(&[1, 0, 1]), 6));
    }

    #[test]
    fn factor_irreducibles() {
        let f = qp(&[-2, 0, 1]);
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.factors, vec![(f.clone(), 1)]);
        let phi12 = cyclotomic(12);
        let fact = factor_rational(&phi12).unwrap();
        assert_eq!(fact.factors, vec![(phi12.clone(), 1)]);
        assert!(no_small_factor(&phi12, 8));
    }

    #[test]
    fn factor_with_multiplicities_and_content() {
        // 6 (x-1)^3 (x+2)
        let f = &qp(&[-1, 1]).pow(3).scale(&BigRational::from_integer(6.into()))
            * &qp(&[2, 1]);
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.content, BigRational::from_integer(6.into()));
        assert_eq!(fact.factors, vec![(qp(&[-1, 1]), 3), (qp(&[2, 1]), 1)]);
        assert_eq!(fact.product(), f);
    }

    #[test]
    fn factor_rational_roots() {
        // (x - 1/2)(x - 3), non-integer monic factors
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let f = &QPoly::new(vec![-half.clone(), BigRational::one()]) * &qp(&[-3, 1]);
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.product(), f);
        assert!(fact
            .factors
            .iter()
            .any(|(g, _)| *g == QPoly::new(vec![-half.clone(), BigRational::one()])));
    }

    #[test]
    fn factor_power_of_x() {
        let f = qp(&[0, 0, -4, 0, 4]); // 4x^2 (x-... ) = 4 x^2 (x^2 - 1)... actually 4x^4-4x^2 = 4x^2(x-1)(x+1)
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.product(), f);
        assert!(fact.factors.contains(&(QPoly::x(), 2)));
    }

    #[test]
    fn factor_cyclotomics_modest() {
        for m in [15u64, 24, 35, 48, 105] {
            let phi = cyclotomic(m);
            let fact = factor_rational(&phi).unwrap();
            assert_eq!(fact.factors, vec![(phi.clone(), 1)], "Phi_{} reducible?", m);
        }
    }

    #[test]
    fn factor_product_of_cyclotomics() {
        let f = &(&cyclotomic(7) * &cyclotomic(9)) * &cyclotomic(4);
        let fact = factor_rational(&f).unwrap();
        assert_eq!(fact.product(), f);
        assert_eq!(fact.factors.len(), 3);
    }
}
