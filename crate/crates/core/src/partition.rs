use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Rejects parts that increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(a)`.
    pub fn row(a: usize) -> Self {
        Self::from_sorted(vec![a])
    }

    /// The single-column partition `(1^i)`.
    pub fn column(i: usize) -> Self {
        Self::from_sorted(vec![1; i])
    }

    /// The full `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Self::from_sorted(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Complement inside the `rows x cols` box, read by rotating 180 degrees.
    pub fn complement(&self, rows: usize, cols: usize) -> Option<Partition> {
        if !self.fits(rows, cols) {
            return None;
        }
        Some(Self::from_sorted((0..rows).rev().map(|i| cols - self.part(i)).collect()))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Self::from_sorted((0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect())
    }

    /// All partitions fitting the `rows x cols` box, in increasing weight.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_sorted(prefix.clone()));
            if prefix.len() == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                rec(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
