use super::{PolyF2, MAX_RING_M};
use crate::error::{Error, Result};

/// `Y^m - 1 = δ · g_1 ⋯ g_s · h_1 h_1* ⋯ h_t h_t*` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub m: usize,
    /// Leading unit; always 1 over GF(2).
    pub delta: u8,
    /// Self-reciprocal irreducible factors, ascending.
    pub self_reciprocal: Vec<PolyF2>,
    /// Reciprocal pairs `(h, h*)` with `h < h*`, ascending by `h`.
    pub pairs: Vec<(PolyF2, PolyF2)>,
}

impl Factorization {
    pub fn s(&self) -> usize {
        self.self_reciprocal.len()
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// Factors in CRT order: `g_1, …, g_s, h_1, h_1*, …, h_t, h_t*`.
    pub fn factors(&self) -> Vec<PolyF2> {
        let mut out = self.self_reciprocal.clone();
        for &(h, hs) in &self.pairs {
            out.push(h);
            out.push(hs);
        }
        out
    }

    pub fn product(&self) -> PolyF2 {
        self.factors()
            .into_iter()
            .fold(PolyF2::ONE, |acc, f| acc.mul(f))
    }

    /// `(Y+1)(Y^2+Y+1)` style rendering.
    pub fn pretty(&self) -> String {
        self.factors()
            .into_iter()
            .map(|f| format!("({})", f.pretty()))
            .collect::<String>()
    }
}

/// Factors `Y^m - 1` over GF(2) for odd `m ≤ 63`.
///
/// Uses distinct-degree factorization followed by deterministic trace
/// splitting of each equal-degree part.
pub fn factor_cyclotomic(m: usize) -> Result<Factorization> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "m = {m} must be odd and positive"
        )));
    }
    if m > MAX_RING_M {
        return Err(Error::Precondition(format!("m = {m} exceeds {MAX_RING_M}")));
    }
    let mut irreducibles = Vec::new();
    let mut rest = PolyF2::x_m_minus_1(m);
    let mut frob = PolyF2::Y; // Y^(2^d) mod rest
    let mut d = 1u32;
    loop {
        let deg = rest.degree().unwrap();
        if deg == 0 {
            break;
        }
        if deg < 2 * d {
            irreducibles.push(rest);
            break;
        }
        frob = frob.mul_mod(frob, rest);
        let part = rest.gcd(frob + PolyF2::Y);
        if part.degree() != Some(0) {
            split_equal_degree(part, d, &mut irreducibles);
            rest = rest.div_rem(part).0;
            frob = frob.rem(rest);
        }
        d += 1;
    }
    irreducibles.sort();

    let mut self_reciprocal = Vec::new();
    let mut pairs = Vec::new();
    for &f in &irreducibles {
        let r = f.reciprocal()?;
        if r == f {
            self_reciprocal.push(f);
        } else if f < r {
            pairs.push((f, r));
        }
    }
    Ok(Factorization {
        m,
        delta: 1,
        self_reciprocal,
        pairs,
    })
}

/// Splits a product of distinct irreducibles, all of degree `d`.
fn split_equal_degree(g: PolyF2, d: u32, out: &mut Vec<PolyF2>) {
    let deg = g.degree().unwrap();
    if deg == d {
        out.push(g);
        return;
    }
    // The traces of 1, Y, Y^2, … cannot all agree on every component field,
    // so one of them separates g.
    for j in 0..deg {
        let a = PolyF2::monomial(j).rem(g);
        let mut trace = PolyF2::ZERO;
        let mut power = a;
        for _ in 0..d {
            trace = trace + power;
            power = power.mul_mod(power, g);
        }
        let s = g.gcd(trace);
        if let Some(sd) = s.degree() {
            if sd > 0 && sd < deg {
                split_equal_degree(s, d, out);
                split_equal_degree(g.div_rem(s).0, d, out);
                return;
            }
        }
    }
    unreachable!("trace splitting failed on {g}");
}
