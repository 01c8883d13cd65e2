//! Permutations of `{1..n}` stored as image tables.
//!
//! Products are read left to right: `p.then(&q)` first applies `p`, then `q`,
//! so it maps `i` to `q(p(i))`. Points are 1-based in cycle notation and
//! 0-based in the image table. The derived ordering is lexicographic on the
//! image table, which fixes the element order of every group.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDegree);
        }
        let mut seen = alloc::vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize).ok_or(Error::NotBijection)?;
            if *slot {
                return Err(Error::NotBijection);
            }
            *slot = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&x| x.checked_sub(1).ok_or(Error::NotBijection))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(shifted)
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a as usize > degree || b == 0 || b as usize > degree {
                    return Err(Error::NotBijection);
                }
                if touched[a as usize - 1] {
                    return Err(Error::NotBijection);
                }
                touched[a as usize - 1] = true;
                images[a as usize - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right product. Degrees must agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `g⁻¹ · self · g`, the image of `self` under conjugation by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// The commutator `[self, other] = self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32 + 1);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation such as `(1 2)(3 4)` or `(1,2,3)`; `()` is the
    /// identity. Whitespace is ignored except as a point separator.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let err = |position: usize, message: &str| Error::CycleSyntax {
            position,
            message: message.to_string(),
        };
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(err(i, "nested `(`"));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                b')' => {
                    let cycle = current.take().ok_or_else(|| err(i, "unmatched `)`"))?;
                    // Fixed points such as `(3)` are allowed and dropped.
                    if cycle.len() > 1 {
                        cycles.push(cycle);
                    }
                    i += 1;
                }
                b',' => {
                    if current.is_none() {
                        return Err(err(i, "`,` outside a cycle"));
                    }
                    i += 1;
                }
                c if c.is_ascii_whitespace() => i += 1,
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let cycle = current
                        .as_mut()
                        .ok_or_else(|| err(start, "point outside a cycle"))?;
                    let point: u32 = text[start..i]
                        .parse()
                        .map_err(|_| err(start, "point out of range"))?;
                    if point == 0 || point as usize > degree {
                        return Err(err(start, "point out of range"));
                    }
                    if cycle.contains(&point) {
                        return Err(err(start, "point repeated in a cycle"));
                    }
                    cycle.push(point);
                }
                _ => return Err(err(i, "unexpected character")),
            }
        }
        if current.is_some() {
            return Err(err(bytes.len(), "unterminated cycle"));
        }
        let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
        // Cycles may not share points; from_cycles rejects overlaps.
        Permutation::from_cycles(degree, &refs).map_err(|_| err(0, "cycles share a point"))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Splits a generator list such as `(1 2)(3 4), (1 3)(2 4)` at top-level
/// commas or semicolons and parses each piece.
pub fn parse_generator_list(degree: usize, text: &str) -> Result<Vec<Permutation>> {
    let mut pieces: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut buf = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                buf.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                buf.push(c);
            }
            ',' | ';' if depth == 0 => pieces.push(core::mem::take(&mut buf)),
            _ => buf.push(c),
        }
    }
    pieces.push(buf);
    pieces
        .iter()
        .filter(|p| !p.trim().is_empty())
        .map(|p| Permutation::parse_cycles(degree, p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        assert_eq!(p(3, "(1 2)").compose(&p(3, "(2 3)")).unwrap(), p(3, "(1 3 2)"));
        let c = p(3, "(1 2 3)");
        assert_eq!(c.compose(&c).unwrap(), p(3, "(1 3 2)"));
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let e = p(3, "(1 2)").compose(&p(4, "(1 2)")).unwrap_err();
        assert_eq!(e, Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(p(3, "(1 2 3)").inverse(), p(3, "(1 3 2)"));
        let t = p(5, "(2 5)");
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn conjugation_and_commutator() {
        assert_eq!(p(3, "(1 2)").conjugate_by(&p(3, "(1 2 3)")), p(3, "(2 3)"));
        assert_eq!(p(3, "(1 2)").commutator(&p(3, "(1 3)")), p(3, "(1 3 2)"));
        let a = p(4, "(1 2)");
        let b = p(4, "(3 4)");
        assert!(a.commutator(&b).is_identity());
    }

    #[test]
    fn cycle_notation_roundtrip_and_errors() {
        assert_eq!(p(4, " ( 1 , 2 ) (3  4)").to_string(), "(1 2)(3 4)");
        assert_eq!(p(4, "()").to_string(), "()");
        assert_eq!(p(6, "(4 6 5)(2 1)").to_string(), "(1 2)(4 6 5)");
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
        assert_eq!(p(3, "(3)(1 2)"), p(3, "(1 2)"));
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 a)").is_err());
    }

    #[test]
    fn generator_lists() {
        let gens = parse_generator_list(4, "(1 2)(3 4), (1,3)(2,4)").unwrap();
        assert_eq!(gens, [p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]);
        assert!(parse_generator_list(4, "").unwrap().is_empty());
    }

    #[test]
    fn orders_and_powers() {
        assert_eq!(p(6, "(1 2)(3 4 5)").order(), 6);
        assert_eq!(Permutation::identity(3).order(), 1);
        assert!(p(6, "(1 2)(3 4 5)").pow(6).is_identity());
        assert_eq!(p(4, "(1 2 3 4)").pow(3), p(4, "(1 4 3 2)"));
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(Permutation::from_images(alloc::vec![0, 0]), Err(Error::NotBijection));
        assert_eq!(Permutation::from_images(alloc::vec![]), Err(Error::EmptyDegree));
        assert_eq!(
            Permutation::from_one_based(&[2, 3, 1]).unwrap(),
            p(3, "(1 2 3)")
        );
    }
}
