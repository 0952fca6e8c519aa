//! Cubic partitions `a(n)` and ordinary partitions `p(n)`.
//!
//! A cubic partition of `n` is a partition in which every even part comes
//! in two colours, written `2₁, 2₂, 4₁, 4₂, …`. Its generating function is
//! `1 / (E(x) E(x²))`. Tables are computed by two sparse divisions, first by
//! `E(x)` and then by `E(x²)`, each a pentagonal recurrence with `O(√n)`
//! terms per coefficient.
//!
//! [`enumerate_cubic`] lists the partitions explicitly; it is the
//! brute-force oracle for the tables and the playground for the injection
//! behind the convexity inequality `a(n+2) + a(n−2) > 2a(n)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::limits::{check_table_len, MAX_ENUMERATION_N};
use crate::qfunctions::{euler_e_in, pentagonal_terms, Sign};
use crate::ring::{Integers, ModInt, Residues, Ring};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    Two,
}

/// A part of a cubic partition. Odd parts always carry [`Label::One`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    value: u32,
    label: Label,
}

impl Part {
    pub fn new(value: u32, label: Label) -> Result<Self> {
        if value == 0 {
            return Err(Error::invalid("parts must be positive"));
        }
        if label == Label::Two && value % 2 == 1 {
            return Err(Error::invalid(format!("odd part {value} cannot carry label 2")));
        }
        Ok(Part { value, label })
    }

    /// An odd part, or an even part with label 1.
    pub fn plain(value: u32) -> Result<Self> {
        Self::new(value, Label::One)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn label(&self) -> Label {
        self.label
    }
}

/// Canonical order: larger value first, and `4₁` before `4₂`.
impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        other.value.cmp(&self.value).then(self.label.cmp(&other.label))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value % 2 == 1 {
            write!(f, "{}", self.value)
        } else {
            let sub = match self.label {
                Label::One => '₁',
                Label::Two => '₂',
            };
            write!(f, "{}{sub}", self.value)
        }
    }
}

/// A cubic partition, parts kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPartition {
    parts: Vec<Part>,
}

const TWO_ONE: Part = Part { value: 2, label: Label::One };

impl ColoredPartition {
    pub fn new(mut parts: Vec<Part>) -> Self {
        parts.sort();
        ColoredPartition { parts }
    }

    pub fn empty() -> Self {
        ColoredPartition { parts: Vec::new() }
    }

    /// `n` copies of the part 1.
    pub fn all_ones(n: usize) -> Self {
        ColoredPartition { parts: vec![Part { value: 1, label: Label::One }; n] }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    pub fn contains(&self, part: Part) -> bool {
        self.parts.contains(&part)
    }

    /// Whether the part `2₁` occurs.
    pub fn contains_two_one(&self) -> bool {
        self.contains(TWO_ONE)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All cubic partitions of `n` in canonical order, generated depth first so
/// each appears exactly once.
pub fn enumerate_cubic(n: usize) -> Result<Vec<ColoredPartition>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Resource { requested: n, cap: MAX_ENUMERATION_N });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let first = Part { value: n.max(1) as u32, label: Label::One };
    extend(n as u32, first, &mut stack, &mut out);
    Ok(out)
}

/// Appends every completion of `stack` by parts no larger than `bound` in canonical order.
fn extend(remaining: u32, bound: Part, stack: &mut Vec<Part>, out: &mut Vec<ColoredPartition>) {
    if remaining == 0 {
        out.push(ColoredPartition { parts: stack.clone() });
        return;
    }
    let top = bound.value.min(remaining);
    for value in (1..=top).rev() {
        let labels: &[Label] = if value % 2 == 1 { &[Label::One] } else { &[Label::One, Label::Two] };
        for &label in labels {
            let part = Part { value, label };
            if part < bound {
                continue;
            }
            stack.push(part);
            extend(remaining - value, part, stack, out);
            stack.pop();
        }
    }
}

/// Adds 2 to the largest part (label 1 preferred among equal values); the
/// grown part keeps its label.
///
/// Defined on cubic partitions without a `2₁`; the image is a partition of
/// `n + 2` without `2₁`, and the map is injective but misses, for example,
/// the all-ones partition.
pub fn injection_map(y: &ColoredPartition) -> Result<ColoredPartition> {
    if y.contains_two_one() {
        return Err(Error::Domain(format!("{y} contains the part 2₁")));
    }
    let Some(max) = y.parts.first() else {
        return Err(Error::Domain("the empty partition has no largest part".into()));
    };
    let mut parts = y.parts.clone();
    parts[0] = Part { value: max.value + 2, label: max.label };
    Ok(ColoredPartition::new(parts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Cubic,
    Classic,
}

impl TableKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableKind::Cubic => "cubic",
            TableKind::Classic => "classic",
        }
    }
}

/// `values[n]` is `a(n)` or `p(n)` for `0 <= n < len`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionTable<V = BigInt> {
    kind: TableKind,
    values: Vec<V>,
}

impl<V> PartitionTable<V> {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&V> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("table length must be at least 1"));
    }
    check_table_len(n)
}

/// `1 / (E(x) E(x²))` to `n` coefficients in any ring.
pub fn cubic_series_in<R: Ring>(ring: &R, n: usize) -> Result<TruncatedSeries<R>> {
    let one = TruncatedSeries::one(ring.clone(), n)?;
    one.div(&euler_e_in(ring, 1, n)?)?.div(&euler_e_in(ring, 2, n)?)
}

/// `a(0), …, a(n−1)`.
pub fn cubic_table(n: usize) -> Result<PartitionTable> {
    check_count(n)?;
    let values = cubic_series_in(&Integers, n)?.into_coeffs();
    Ok(PartitionTable { kind: TableKind::Cubic, values })
}

/// `a(0), …, a(n−1)` reduced modulo `m`.
pub fn cubic_table_mod(n: usize, m: u64) -> Result<PartitionTable<ModInt>> {
    check_count(n)?;
    let ring = Residues::new(m)?;
    let values = cubic_series_in(&ring, n)?.into_coeffs();
    Ok(PartitionTable { kind: TableKind::Cubic, values })
}

/// `p(0), …, p(n−1)` by `p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)]`.
pub fn classic_table(n: usize) -> Result<PartitionTable> {
    check_count(n)?;
    let pentagonal: Vec<(usize, Sign)> = pentagonal_terms(n).skip(1).collect();
    let mut values: Vec<BigInt> = Vec::with_capacity(n);
    values.push(BigInt::from(1));
    for i in 1..n {
        let mut acc = BigInt::from(0);
        for &(w, sign) in &pentagonal {
            if w > i {
                break;
            }
            // E(x)·P(x) = 1, so p(i) = −Σ_{w≥1} sign(w)·p(i − w)
            match sign {
                Sign::Minus => acc += &values[i - w],
                Sign::Plus => acc -= &values[i - w],
            }
        }
        values.push(acc);
    }
    Ok(PartitionTable { kind: TableKind::Classic, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> ColoredPartition {
        // "4b 3 1" = 4₂ + 3 + 1; a trailing 'b' marks label 2
        let parts = s
            .split_whitespace()
            .map(|t| match t.strip_suffix('b') {
                Some(v) => Part::new(v.parse().unwrap(), Label::Two).unwrap(),
                None => Part::plain(t.parse().unwrap()).unwrap(),
            })
            .collect();
        ColoredPartition::new(parts)
    }

    fn small(t: &PartitionTable) -> Vec<u64> {
        t.values().iter().map(|v| u64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn part_validation() {
        assert!(Part::new(3, Label::Two).is_err());
        assert!(Part::new(0, Label::One).is_err());
        assert!(Part::new(4, Label::Two).is_ok());
    }

    #[test]
    fn canonical_order_prefers_label_one() {
        let x = ColoredPartition::new(vec![
            Part::new(4, Label::Two).unwrap(),
            Part::plain(1).unwrap(),
            Part::plain(4).unwrap(),
        ]);
        assert_eq!(x.to_string(), "4₁ + 4₂ + 1");
        assert_eq!(x.total(), 9);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_cubic(0).unwrap(), vec![ColoredPartition::empty()]);
        let two: Vec<String> = enumerate_cubic(2).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(two, ["2₁", "2₂", "1 + 1"]);
        let three: Vec<String> = enumerate_cubic(3).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(three, ["3", "2₁ + 1", "2₂ + 1", "1 + 1 + 1"]);
        assert!(matches!(enumerate_cubic(31), Err(Error::Resource { .. })));
    }

    #[test]
    fn enumeration_has_no_duplicates_and_right_totals() {
        for n in 0..=16 {
            let all = enumerate_cubic(n).unwrap();
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for x in &all {
                assert_eq!(x.total(), n as u64);
                assert!(x.parts().windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn tables() {
        assert_eq!(small(&cubic_table(7).unwrap()), [1, 1, 3, 4, 9, 12, 23]);
        assert_eq!(small(&classic_table(6).unwrap()), [1, 1, 2, 3, 5, 7]);
        assert_eq!(small(&classic_table(1).unwrap()), [1]);
        assert!(cubic_table(0).is_err());
        let m = cubic_table_mod(7, 3).unwrap();
        assert_eq!(m.values().iter().map(|v| v.value()).collect::<Vec<_>>(), [1, 1, 0, 1, 0, 0, 2]);
        assert_eq!(cubic_table_mod(2, 2).unwrap().get(1).unwrap().value(), 1);
        assert!(cubic_table_mod(5, 1).is_err());
    }

    #[test]
    fn classic_table_matches_series_inverse() {
        let t = classic_table(300).unwrap();
        let inv = crate::qfunctions::euler_e(1, 300).unwrap().inverse().unwrap();
        assert_eq!(t.values(), inv.coeffs());
    }

    #[test]
    fn cubic_table_matches_dense_inverse() {
        let n = 300;
        let e = crate::qfunctions::euler_e(1, n).unwrap();
        let dense = e.mul(&e.substitute_power(2).unwrap()).unwrap().inverse().unwrap();
        assert_eq!(cubic_table(n).unwrap().values(), dense.coeffs());
    }

    #[test]
    fn mod_table_matches_reduced_exact_table() {
        let exact = cubic_table(200).unwrap();
        for m in [2, 3, 5, 7, 1_000_000_007] {
            let r = Residues::new(m).unwrap();
            let reduced: Vec<ModInt> = exact.values().iter().map(|v| r.from_int(v)).collect();
            assert_eq!(cubic_table_mod(200, m).unwrap().values(), reduced.as_slice());
        }
    }

    #[test]
    fn injection_examples() {
        assert_eq!(injection_map(&p("3")).unwrap(), p("5"));
        assert_eq!(injection_map(&p("2b 1")).unwrap(), p("4b 1"));
        assert_eq!(injection_map(&p("4 4b")).unwrap(), p("6 4b"));
        assert_eq!(injection_map(&p("4b 4b 1")).unwrap(), p("6b 4b 1"));
        assert!(matches!(injection_map(&p("2 1")), Err(Error::Domain(_))));
        assert!(matches!(injection_map(&ColoredPartition::empty()), Err(Error::Domain(_))));
    }

    #[test]
    fn all_ones_has_no_preimage() {
        let image: HashSet<_> = enumerate_cubic(3)
            .unwrap()
            .iter()
            .filter(|y| !y.contains_two_one())
            .map(|y| injection_map(y).unwrap())
            .collect();
        assert!(!image.contains(&ColoredPartition::all_ones(5)));
        assert!(!ColoredPartition::all_ones(5).contains_two_one());
    }
}
