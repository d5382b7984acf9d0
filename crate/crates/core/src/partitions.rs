//! Young diagrams: enumeration, hooks, quasi-homogeneous box weights and
//! `M`-core / `M`-quotient decomposition.
//!
//! A partition `b_0 >= b_1 >= ... >= b_{r-1} > 0` is drawn with row `j`
//! holding `b_j` boxes. The box in row `j`, column `a` stands for the monomial
//! `x^a y^j`, so partitions of `k` are the monomial ideals of colength `k` in
//! `C[x, y]`.

use std::fmt;

use crate::series::{LogSeries, MotivicSeries};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Zero parts at the end
    /// are dropped; returns `None` if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let size = parts.iter().sum();
        Some(Self { parts, size })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let cols = (0..width)
            .map(|c| self.parts.iter().take_while(|&&b| b > c).count())
            .collect();
        Partition::new(cols).expect("column lengths are weakly decreasing")
    }

    /// Boxes as `(row, column)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &b)| (0..b).map(move |col| (row, col)))
    }

    /// Hook length `arm + leg + 1` of every box, in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.boxes()
            .map(|(row, col)| {
                let arm = self.parts[row] - col - 1;
                let leg = conj.parts[col] - row - 1;
                arm + leg + 1
            })
            .collect()
    }

    /// Number of boxes whose hook length is divisible by `m`.
    pub fn hooks_divisible_by(&self, m: usize) -> usize {
        self.hook_lengths().into_iter().filter(|h| h % m == 0).count()
    }

    /// `counts[w]` = number of boxes `x^a y^j` with `(a + n j) mod m == w`.
    pub fn box_weights(&self, m: usize, n: usize) -> Vec<usize> {
        assert!(m >= 1, "modulus must be positive");
        let mut counts = vec![0; m];
        for (row, col) in self.boxes() {
            counts[(col + n * row) % m] += 1;
        }
        counts
    }

    /// True when all `m` weight classes hold the same number of boxes.
    pub fn is_equidistributed(&self, m: usize, n: usize) -> bool {
        let counts = self.box_weights(m, n);
        counts.iter().all(|&c| c == counts[0])
    }

    /// First-column hook lengths with `len` beads: `b_i + (len - 1 - i)`,
    /// padding with zero parts. Strictly decreasing.
    fn beta_numbers(&self, len: usize) -> Vec<usize> {
        debug_assert!(len >= self.len());
        (0..len)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + (len - 1 - i))
            .collect()
    }

    fn from_beta_numbers(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let len = beta.len();
        let parts = beta
            .into_iter()
            .enumerate()
            .map(|(i, b)| b - (len - 1 - i))
            .collect();
        Partition::new(parts).expect("distinct beta numbers give a partition")
    }

    /// `M`-core and `M`-quotient through the abacus with `M` runners.
    ///
    /// Beads sit at the beta numbers (bead count padded to a multiple of `m`).
    /// Sliding every bead as far up its runner as possible gives the core;
    /// the bead positions on runner `c` are the beta numbers of the `c`-th
    /// quotient partition.
    pub fn core_and_quotient(&self, m: usize) -> CoreQuotient {
        assert!(m >= 1, "modulus must be positive");
        let beads = self.len().div_ceil(m) * m;
        let beta = self.beta_numbers(beads);
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); m];
        for b in beta {
            runners[b % m].push(b / m);
        }
        let mut core_beta = Vec::with_capacity(beads);
        let mut quotient = Vec::with_capacity(m);
        for (c, levels) in runners.into_iter().enumerate() {
            core_beta.extend((0..levels.len()).map(|t| c + m * t));
            quotient.push(Partition::from_beta_numbers(levels));
        }
        CoreQuotient {
            core: Partition::from_beta_numbers(core_beta),
            quotient,
        }
    }

    /// Removes the rim hook hanging off box `(row, col)`: the boundary strip
    /// from the end of `row` down to the bottom of `col`.
    pub fn remove_rim_hook(&self, row: usize, col: usize) -> Partition {
        let conj = self.conjugate();
        let leg = conj.parts[col] - row - 1;
        let mut parts = self.parts.clone();
        for (dst, &below) in parts[row..row + leg].iter_mut().zip(&self.parts[row + 1..]) {
            *dst = below - 1;
        }
        parts[row + leg] = col;
        Partition::new(parts).expect("rim hook removal leaves a partition")
    }

    /// Boxes whose hook length equals `m`; each marks a removable rim `m`-hook.
    pub fn hooks_of_length(&self, m: usize) -> Vec<(usize, usize)> {
        self.boxes()
            .zip(self.hook_lengths())
            .filter(|&(_, h)| h == m)
            .map(|(b, _)| b)
            .collect()
    }

    /// `M`-core by repeatedly stripping rim `m`-hooks; `pick` chooses which
    /// of the available hooks to strip next (its argument is their count).
    pub fn core_by_hook_removal(&self, m: usize, mut pick: impl FnMut(usize) -> usize) -> Partition {
        let mut p = self.clone();
        loop {
            let hooks = p.hooks_of_length(m);
            if hooks.is_empty() {
                return p;
            }
            let (row, col) = hooks[pick(hooks.len()) % hooks.len()];
            p = p.remove_rim_hook(row, col);
        }
    }

    pub fn is_core(&self, m: usize) -> bool {
        self.hook_lengths().iter().all(|h| h % m != 0)
    }
}

/// Renders as `[b0,b1,...]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// An `M`-core together with the `M` quotient partitions.
///
/// `|core| + M * sum |quotient_i| = |p|`. Only the quotient sizes are
/// meaningful across versions; the runner labeling follows the abacus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }
}

/// Iterator over the partitions of `n` in lexicographically descending order.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self {
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: decrement the last part above 1 and refill the rest
        // greedily with parts no larger than it.
        let mut succ = current.clone();
        let mut freed = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let part = freed.min(cap);
                succ.push(part);
                freed -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition::new(current).expect("generator keeps parts sorted"))
    }
}

/// All partitions of `n`, lexicographically descending: `[3], [2,1], [1,1,1]`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// `prod_{i>=1} (1 - T^{m i})^m / (1 - T^i)`, whose `T^k` coefficient counts
/// the `m`-cores of size `k`.
pub fn core_counting_series(m: usize, order: usize) -> MotivicSeries {
    assert!(m >= 1, "modulus must be positive");
    let mut log = LogSeries::new(order);
    for i in 1..=order {
        log.add_term(i, 0, 1.into());
        log.add_term(m * i, 0, (-(m as i64)).into());
    }
    log.exp()
}
