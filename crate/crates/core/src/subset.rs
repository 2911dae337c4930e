use std::fmt;

/// A subset of the simple-root index set, stored as a bit mask.
///
/// Indices are zero-based in the API and one-based in every text form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetJ(u32);

pub const MAX_RANK: usize = 31;

impl SubsetJ {
    pub fn empty() -> Self {
        SubsetJ(0)
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        SubsetJ(((1u64 << rank) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        SubsetJ(1 << i)
    }

    pub fn from_bits(bits: u32) -> Self {
        SubsetJ(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SubsetJ(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        SubsetJ(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        SubsetJ(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SubsetJ) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, in increasing bit-mask order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetJ> {
        let mask = self.0 as u64;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == mask {
                None
            } else {
                Some(((c | !mask).wrapping_add(1)) & mask)
            };
            Some(SubsetJ(c as u32))
        })
    }

    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
