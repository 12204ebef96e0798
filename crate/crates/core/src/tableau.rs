//! Tableaux on skew diagrams and lattice (Littlewood-Richardson) fillings.

use std::fmt;

use crate::shape::{Partition, SkewDiagram, WeakComposition};

/// A filling of a skew diagram, one positive integer per box, stored
/// row-major (top row first, left to right).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewDiagram,
    entries: Vec<usize>,
}

impl Tableau {
    /// Panics if the entry count does not match the number of boxes.
    pub fn new(shape: SkewDiagram, entries: Vec<usize>) -> Self {
        assert_eq!(shape.size(), entries.len(), "one entry per box");
        assert!(entries.iter().all(|&e| e >= 1), "entries are positive");
        Tableau { shape, entries }
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entries of each row, left to right.
    pub fn rows(&self) -> Vec<&[usize]> {
        let mut out = Vec::with_capacity(self.shape.height());
        let mut start = 0;
        for r in 0..self.shape.height() {
            let (a, b) = self.shape.row_span(r);
            out.push(&self.entries[start..start + (b - a)]);
            start += b - a;
        }
        out
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> ReadingWord {
        ReadingWord(
            self.rows()
                .into_iter()
                .flat_map(|row| row.iter().rev().copied())
                .collect(),
        )
    }

    /// `(#1s, #2s, ...)`.
    pub fn content(&self) -> WeakComposition {
        let max = self.entries.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &e in &self.entries {
            counts[e - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    pub fn is_semistandard(&self) -> bool {
        let rows = self.rows();
        let rows_ok = rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..rows.len()).all(|r| {
            let (a, b) = self.shape.row_span(r);
            let (pa, pb) = self.shape.row_span(r - 1);
            (a.max(pa)..b.min(pb)).all(|c| rows[r - 1][c - pa] < rows[r][c - a])
        });
        rows_ok && cols_ok
    }

    pub fn is_lattice(&self) -> bool {
        self.reading_word().is_lattice()
    }
}

/// Rows joined by `;`, entries by `,`; boxes of the inner shape are omitted.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().into_iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReadingWord(pub Vec<usize>);

impl ReadingWord {
    /// Every prefix contains at least as many `j`s as `(j+1)`s, for all `j`.
    pub fn is_lattice(&self) -> bool {
        let mut counts: Vec<usize> = Vec::new();
        for &v in &self.0 {
            if v == 0 {
                return false;
            }
            if counts.len() <= v {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
            if v > 1 && counts[v] > counts[v - 1] {
                return false;
            }
        }
        true
    }
}

/// Backtracking search over the lattice semistandard fillings of a skew
/// diagram, in reading order.
///
/// Boxes are filled right to left along each row, rows top to bottom, so the
/// lattice condition is checked on every prefix as it grows. An entry in row
/// `r` (0-based) never exceeds `r + 1`: a value `v > 1` needs a `v - 1`
/// strictly higher up. That bound is at most the number of rows.
pub(crate) struct LatticeSearch {
    /// Reading position -> position of the box directly above, if any.
    above: Vec<Option<usize>>,
    /// Reading position -> position of the box directly to the right.
    right: Vec<Option<usize>>,
    bound: Vec<usize>,
    cap: Option<Vec<usize>>,
    entries: Vec<usize>,
    counts: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl LatticeSearch {
    pub(crate) fn new(shape: &SkewDiagram, content: Option<&Partition>) -> Self {
        let h = shape.height();
        let mut index = vec![Vec::new(); h];
        let mut above = Vec::with_capacity(shape.size());
        let mut right = Vec::with_capacity(shape.size());
        let mut bound = Vec::with_capacity(shape.size());
        let mut next = 0;
        for r in 0..h {
            let (a, b) = shape.row_span(r);
            index[r] = vec![usize::MAX; b];
            for c in (a..b).rev() {
                index[r][c] = next;
                above.push(if r > 0 {
                    let (pa, pb) = shape.row_span(r - 1);
                    (pa <= c && c < pb).then(|| index[r - 1][c])
                } else {
                    None
                });
                right.push((c + 1 < b).then(|| index[r][c + 1]));
                bound.push(r + 1);
                next += 1;
            }
        }
        let max_value = h.max(content.map_or(0, |c| c.len()));
        let cap = content.map(|c| {
            let mut cap = vec![0; max_value + 2];
            for (i, &m) in c.parts().iter().enumerate() {
                cap[i + 1] = m;
            }
            cap
        });
        let n = shape.size();
        LatticeSearch {
            above,
            right,
            bound,
            cap,
            entries: vec![0; n],
            counts: vec![0; max_value + 2],
            pos: 0,
            started: false,
            done: false,
        }
    }

    /// Moves the box at `pos` to its next admissible value.
    fn advance(&mut self, pos: usize) -> bool {
        let current = self.entries[pos];
        if current > 0 {
            self.counts[current] -= 1;
        }
        let lower = match self.above[pos] {
            Some(a) => self.entries[a] + 1,
            None => 1,
        }
        .max(current + 1);
        let mut upper = self.bound[pos];
        if let Some(r) = self.right[pos] {
            upper = upper.min(self.entries[r]);
        }
        for v in lower..=upper {
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            if let Some(cap) = &self.cap {
                if self.counts[v] >= cap[v] {
                    continue;
                }
            }
            self.entries[pos] = v;
            self.counts[v] += 1;
            return true;
        }
        self.entries[pos] = 0;
        false
    }

    /// Steps to the next complete filling. Returns `false` once exhausted.
    pub(crate) fn next_filling(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.entries.len();
        if n == 0 {
            self.done = true;
            return !std::mem::replace(&mut self.started, true);
        }
        let mut pos = if self.started { n - 1 } else { 0 };
        self.started = true;
        loop {
            if self.advance(pos) {
                if pos + 1 == n {
                    self.pos = pos;
                    return true;
                }
                pos += 1;
            } else if pos == 0 {
                self.done = true;
                return false;
            } else {
                pos -= 1;
            }
        }
    }

    /// Content of the current filling, `counts[v]` for `v >= 1`.
    pub(crate) fn content(&self) -> Partition {
        let parts = self.counts[1..].to_vec();
        Partition::from_sorted(parts)
    }

    pub(crate) fn reading_entries(&self) -> &[usize] {
        debug_assert!(self.entries.is_empty() || self.pos + 1 == self.entries.len());
        &self.entries
    }
}

/// Lazily yields every semistandard filling of `shape` whose reading word
/// is lattice, each exactly once.
///
/// Order is fixed: lexicographic on the entries in reading order.
pub struct LatticeFillings {
    shape: SkewDiagram,
    search: LatticeSearch,
    /// Reading position for each row-major position.
    row_major: Vec<usize>,
}

impl LatticeFillings {
    pub fn new(shape: &SkewDiagram) -> Self {
        LatticeFillings::with_search(shape, LatticeSearch::new(shape, None))
    }

    /// Only fillings of the given content.
    pub fn with_content(shape: &SkewDiagram, content: &Partition) -> Self {
        let mut search = LatticeSearch::new(shape, Some(content));
        if shape.size() != content.size() {
            search.done = true;
        }
        LatticeFillings::with_search(shape, search)
    }

    fn with_search(shape: &SkewDiagram, search: LatticeSearch) -> Self {
        let mut row_major = Vec::with_capacity(shape.size());
        let mut offset = 0;
        for r in 0..shape.height() {
            let (a, b) = shape.row_span(r);
            let len = b - a;
            row_major.extend((0..len).map(|j| offset + len - 1 - j));
            offset += len;
        }
        LatticeFillings {
            shape: shape.clone(),
            search,
            row_major,
        }
    }
}

impl Iterator for LatticeFillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if !self.search.next_filling() {
            return None;
        }
        let reading = self.search.reading_entries();
        let entries = self.row_major.iter().map(|&i| reading[i]).collect();
        Some(Tableau {
            shape: self.shape.clone(),
            entries,
        })
    }
}

/// Shorthand for [`LatticeFillings::new`].
pub fn lattice_fillings(shape: &SkewDiagram) -> LatticeFillings {
    LatticeFillings::new(shape)
}

/// `c^lambda_{mu, nu}`: lattice fillings of `lambda/mu` with content `nu`.
/// Zero when `mu` does not fit in `lambda` or the sizes disagree.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewDiagram::new(lambda.clone(), mu.clone()).expect("containment checked");
    if nu.len() > shape.height() {
        return 0;
    }
    let mut search = LatticeSearch::new(&shape, Some(nu));
    let mut count = 0;
    while search.next_filling() {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewDiagram {
        SkewDiagram::new(p(o), p(i)).unwrap()
    }

    /// Every filling with entries in 1..=max, checked directly.
    fn brute_force(shape: &SkewDiagram, max: usize) -> Vec<Tableau> {
        let n = shape.size();
        let mut out = Vec::new();
        let mut entries = vec![1; n];
        loop {
            let t = Tableau::new(shape.clone(), entries.clone());
            if t.is_semistandard() && t.is_lattice() {
                out.push(t);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if entries[i] < max {
                    entries[i] += 1;
                    break;
                }
                entries[i] = 1;
            }
        }
    }

    #[test]
    fn reading_word_examples() {
        let row = Tableau::new(sk(&[3], &[]), vec![1, 2, 3]);
        assert_eq!(row.reading_word().0, vec![3, 2, 1]);
        let col = Tableau::new(sk(&[1, 1, 1], &[]), vec![1, 2, 3]);
        assert_eq!(col.reading_word().0, vec![1, 2, 3]);
    }

    #[test]
    fn reading_word_of_pictured_foundation_filling() {
        // Rotated (2,2,1) staircase with foundation (3,2), k = 2: the lattice
        // filling of the staircase columns plus foundation rows 1,1,6 and 2,7.
        let alpha = crate::shape::Composition::new(vec![2, 2, 1]).unwrap();
        let top = crate::shape::delta_rotated(&alpha);
        let shape = crate::shape::with_foundation(&p(&[3, 2]), &Partition::empty(), &top, 2).unwrap();
        let rows: Vec<Vec<usize>> = vec![
            vec![1],
            vec![2],
            vec![1, 3],
            vec![2, 4],
            vec![1, 3, 5],
            vec![1, 1, 6],
            vec![2, 7],
        ];
        let t = Tableau::new(shape, rows.concat());
        assert!(t.is_semistandard());
        assert!(t.is_lattice());
        assert_eq!(
            t.reading_word().0,
            vec![1, 2, 3, 1, 4, 2, 5, 3, 1, 6, 1, 1, 7, 2]
        );
    }

    #[test]
    fn lattice_examples() {
        assert!(ReadingWord(vec![1, 1, 2, 1, 2, 3]).is_lattice());
        assert!(!ReadingWord(vec![2, 1]).is_lattice());
        assert!(!ReadingWord(vec![1, 2, 2]).is_lattice());
        assert!(ReadingWord(vec![]).is_lattice());
    }

    #[test]
    fn content_examples() {
        let empty = Tableau::new(SkewDiagram::empty(), vec![]);
        assert_eq!(empty.content().parts(), &[] as &[usize]);
        let col = Tableau::new(sk(&[1, 1, 1], &[]), vec![1, 2, 3]);
        assert_eq!(col.content().parts(), &[1, 1, 1]);
        let fillings: Vec<_> = lattice_fillings(&sk(&[2, 2, 2, 2], &[1, 1])).collect();
        assert_eq!(fillings.len(), 1);
        assert_eq!(fillings[0].content(), p(&[2, 2, 1, 1]));
        assert_eq!(fillings[0].to_string(), "1;2;1,3;2,4");
    }

    #[test]
    fn text_form_drops_inner_boxes() {
        let t = Tableau::new(sk(&[3, 2], &[1]), vec![1, 1, 1, 2]);
        assert_eq!(t.to_string(), "1,1;1,2");
    }

    #[test]
    fn single_box() {
        let all: Vec<_> = lattice_fillings(&sk(&[1], &[])).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].entries(), &[1]);
    }

    #[test]
    fn empty_shape_has_one_filling() {
        assert_eq!(lattice_fillings(&SkewDiagram::empty()).count(), 1);
    }

    #[test]
    fn contents_of_worked_examples() {
        let contents: Vec<Partition> = lattice_fillings(&sk(&[2, 2, 2, 2, 1], &[1, 1]))
            .map(|t| t.content().to_partition().unwrap())
            .collect();
        assert_eq!(contents.len(), 2);
        assert!(contents.contains(&p(&[2, 2, 2, 1])));
        assert!(contents.contains(&p(&[2, 2, 1, 1, 1])));

        let mut contents: Vec<Partition> = lattice_fillings(&sk(&[3, 3, 2, 2, 1, 1], &[2]))
            .map(|t| t.content().to_partition().unwrap())
            .collect();
        contents.sort();
        assert_eq!(
            contents,
            vec![p(&[3, 2, 2, 1, 1, 1]), p(&[3, 2, 2, 2, 1]), p(&[3, 3, 2, 1, 1])]
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=5 {
            for shape in crate::enumerate::skew_diagrams_of_size(n) {
                let fast: Vec<Tableau> = lattice_fillings(&shape).collect();
                let mut slow = brute_force(&shape, shape.height().max(1) + 1);
                let mut sorted = fast.clone();
                sorted.sort_by(|a, b| a.entries().cmp(b.entries()));
                slow.sort_by(|a, b| a.entries().cmp(b.entries()));
                assert_eq!(sorted, slow, "{shape}");
                for t in &fast {
                    assert!(t.is_semistandard() && t.is_lattice());
                    // entries never exceed the row count
                    assert!(t.entries().iter().all(|&e| e <= shape.height()));
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let shape = sk(&[4, 3, 3, 2], &[2, 1]);
        let a: Vec<_> = lattice_fillings(&shape).collect();
        let b: Vec<_> = lattice_fillings(&shape).collect();
        assert_eq!(a, b);
        let words: Vec<Vec<usize>> = a.iter().map(|t| t.reading_word().0).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn lr_examples() {
        let empty = Partition::empty();
        for lam in [p(&[1]), p(&[3, 2, 1]), p(&[4, 4, 1])] {
            assert_eq!(lr_coefficient(&lam, &empty, &lam), 1);
        }
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[])), 0);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);

        let rho = p(&[4, 3, 3, 3, 3, 3, 3]);
        let kappa = p(&[2, 2, 2, 1, 1]);
        let ones = [p(&[4, 3, 2, 2, 1, 1, 1]), p(&[3, 3, 3, 2, 1, 1, 1]), p(&[3, 3, 2, 2, 2, 1, 1])];
        let mut tally = BTreeMap::new();
        for t in lattice_fillings(&SkewDiagram::new(rho.clone(), kappa.clone()).unwrap()) {
            *tally.entry(t.content().to_partition().unwrap()).or_insert(0u64) += 1;
        }
        assert_eq!(tally.len(), 3);
        for nu in &ones {
            assert_eq!(lr_coefficient(&rho, &kappa, nu), 1);
            assert_eq!(tally[nu], 1);
        }
        assert_eq!(lr_coefficient(&rho, &kappa, &p(&[3, 3, 3, 3, 1, 1])), 0);
    }
}
