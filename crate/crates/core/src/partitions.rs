//! Integer partitions with a deterministic enumeration order.

use std::fmt;

use serde::Serialize;

/// Weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Single row (w).
    pub fn row(w: u32) -> Self {
        Partition { parts: vec![w] }
    }

    /// Single column (1^w).
    pub fn column(w: u32) -> Self {
        Partition {
            parts: vec![1; w as usize],
        }
    }

    pub fn is_single_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let max = self.parts[0] as usize;
        let mut conj = vec![0u32; max];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of weights 1..=w, ordered by weight then lexicographically
/// descending.
pub fn partitions_up_to_weight(w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for weight in 1..=w {
        let mut bucket = Vec::new();
        collect(weight, weight, &mut Vec::new(), &mut bucket);
        out.extend(bucket);
    }
    out
}

fn collect(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    let hi = remaining.min(max_part);
    for part in (1..=hi).rev() {
        prefix.push(part);
        collect(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_up_to_weight(1), vec![p(&[1])]);
        assert_eq!(
            partitions_up_to_weight(3),
            vec![
                p(&[1]),
                p(&[2]),
                p(&[1, 1]),
                p(&[3]),
                p(&[2, 1]),
                p(&[1, 1, 1])
            ]
        );
        assert!(partitions_up_to_weight(0).is_empty());
    }

    #[test]
    fn counts_match_partition_function() {
        // p(1..8) = 1,2,3,5,7,11,15,22 -> cumulative 66
        assert_eq!(partitions_up_to_weight(8).len(), 66);
    }

    #[test]
    fn conjugation_is_involutive() {
        for lam in partitions_up_to_weight(7) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().weight(), lam.weight());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![]).is_none());
        assert!(Partition::new(vec![1, 2]).is_none());
        assert!(Partition::new(vec![2, 0]).is_none());
    }
}
