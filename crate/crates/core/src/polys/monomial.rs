use std::fmt;

use serde::{Deserialize, Serialize};

/// A variable of the polynomial ring: `z_j` or its conjugate `zbar_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Z(usize),
    ZBar(usize),
}

/// `z^holo zbar^anti`. The derived ordering is lexicographic on the holomorphic
/// exponents, then on the antiholomorphic ones, which is a monomial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub holo: Vec<u32>,
    pub anti: Vec<u32>,
}

impl Monomial {
    pub fn new(holo: Vec<u32>, anti: Vec<u32>) -> Self {
        assert_eq!(holo.len(), anti.len(), "exponent vectors differ in length");
        Self { holo, anti }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n], vec![0; n])
    }

    pub fn holomorphic(holo: &[u32]) -> Self {
        Self::new(holo.to_vec(), vec![0; holo.len()])
    }

    pub fn var(n: usize, v: Var) -> Self {
        let mut m = Self::one(n);
        match v {
            Var::Z(j) => m.holo[j] = 1,
            Var::ZBar(j) => m.anti[j] = 1,
        }
        m
    }

    pub fn n(&self) -> usize {
        self.holo.len()
    }

    pub fn holo_degree(&self) -> u32 {
        self.holo.iter().sum()
    }

    pub fn anti_degree(&self) -> u32 {
        self.anti.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.holo_degree() + self.anti_degree()
    }

    pub fn fourier_degree(&self) -> i64 {
        self.holo_degree() as i64 - self.anti_degree() as i64
    }

    pub fn is_holomorphic(&self) -> bool {
        self.anti.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::Z(j) => self.holo[j],
            Var::ZBar(j) => self.anti[j],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            holo: self.holo.iter().zip(&other.holo).map(|(a, b)| a + b).collect(),
            anti: self.anti.iter().zip(&other.anti).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.holo.iter().zip(&other.holo).all(|(a, b)| a <= b) && self.anti.iter().zip(&other.anti).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Self {
            holo: other.holo.iter().zip(&self.holo).map(|(b, a)| b - a).collect(),
            anti: other.anti.iter().zip(&self.anti).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            holo: self.holo.iter().zip(&other.holo).map(|(a, b)| *a.min(b)).collect(),
            anti: self.anti.iter().zip(&other.anti).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            holo: self.anti.clone(),
            anti: self.holo.clone(),
        }
    }
}

fn factor(name: &str, j: usize, n: usize, e: u32) -> Option<String> {
    if e == 0 {
        return None;
    }
    let var = match (n, j) {
        (2, 0) => "z".to_string(),
        (2, 1) => "w".to_string(),
        _ => format!("z{}", j + 1),
    };
    let base = if name.is_empty() { var } else { format!("{name}({var})") };
    Some(if e == 1 { base } else { format!("{base}^{e}") })
}

impl fmt::Display for Monomial {
    /// Writes `z`, `w` (or `z1`, `z2`, ...) and `conj(...)` factors, `1` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let factors: Vec<String> = (self.holo.iter().enumerate().filter_map(|(j, &e)| factor("", j, n, e)))
            .chain(
                self.anti
                    .iter()
                    .enumerate()
                    .filter_map(|(j, &e)| factor("conj", j, n, e)),
            )
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in descending
/// lexicographic order: `z^d` first, `z_n^d` last.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Exponent vectors of total degree at most `d`, grouped by degree ascending.
pub fn exponents_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| exponents_of_degree(n, k)).collect()
}
