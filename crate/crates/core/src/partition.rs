//! Integer partitions, bipartitions and the tableau combinatorics built on
//! them: dominance, Kostka numbers, Littlewood–Richardson coefficients and the
//! row-shifting construction of strict expansions into a rectangle.
//!
//! Partitions never carry trailing zeros, so derived equality is canonical.
//! The empty partition is an ordinary value of size zero.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is non-increasing and strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zeros; never fails.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Self { parts: (1..=k).rev().collect() }
    }

    /// `(cols^rows)`.
    pub fn rectangle(cols: u32, rows: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self { parts: vec![cols; rows] }
    }

    /// The hook `(n - m, 1^m)`.
    pub fn hook(n: u32, m: u32) -> Self {
        assert!(m < n || n == 0, "hook leg must be shorter than n");
        if n == 0 {
            return Self::empty();
        }
        let mut parts = vec![n - m];
        parts.extend(std::iter::repeat_n(1, m as usize));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let first = self.part(0);
        let parts = (1..=first).map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32).collect();
        Self { parts }
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiplicity of each part size, ascending by part.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let conj = self.transpose();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k as u64;
        }
        let mut den = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.part(j) as usize - i - 1;
                den *= (arm + leg + 1) as u64;
            }
        }
        num / den
    }

    /// Prefix sums padded with zeros to length `len`.
    pub(crate) fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i) as usize;
                acc
            })
            .collect()
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n as u32, n as u32, &mut cur, &mut out);
        out
    }

    /// Partitions whose diagram fits in `rows x cols`, any size.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in (1..=max).rev() {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.second.clone(), self.first.clone())
    }

    /// All bipartitions of `n`, ordered by `|first|` descending and then by
    /// the reverse-lexicographic order of each component.
    pub fn all(n: usize) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let firsts = Partition::all(a);
            let seconds = Partition::all(n - a);
            for f in &firsts {
                for s in &seconds {
                    out.push(BiPartition::new(f.clone(), s.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for BiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| Error::Parse(format!("bipartition {s:?} lacks '|'")))?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for BiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of comparing two partitions of the same size in dominance order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dominance {
    Equal,
    /// strictly below
    Leq,
    /// strictly above
    Geq,
    Incomparable,
}

impl Dominance {
    /// `true` for `Equal` or `Leq`.
    pub fn is_leq(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::Leq)
    }

    pub fn is_geq(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::Geq)
    }

    pub fn reversed(self) -> Self {
        match self {
            Dominance::Leq => Dominance::Geq,
            Dominance::Geq => Dominance::Leq,
            d => d,
        }
    }
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::Equal => "equal",
            Dominance::Leq => "leq",
            Dominance::Geq => "geq",
            Dominance::Incomparable => "incomparable",
        })
    }
}

/// Compares prefix sums of `lambda` and `mu`.
pub fn dominance(lambda: &Partition, mu: &Partition) -> Result<Dominance> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(dominance_unchecked(lambda, mu))
}

pub(crate) fn dominance_unchecked(lambda: &Partition, mu: &Partition) -> Dominance {
    if lambda == mu {
        return Dominance::Equal;
    }
    let len = lambda.len().max(mu.len());
    let (a, b) = (lambda.prefix_sums(len), mu.prefix_sums(len));
    let le = a.iter().zip(&b).all(|(x, y)| x <= y);
    let ge = a.iter().zip(&b).all(|(x, y)| x >= y);
    match (le, ge) {
        (true, _) => Dominance::Leq,
        (_, true) => Dominance::Geq,
        _ => Dominance::Incomparable,
    }
}

/// Every `inner` such that `outer / inner` is a horizontal strip of `size`
/// boxes.
fn horizontal_strips(outer: &Partition, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = outer.len();
    let mut cur = Vec::with_capacity(rows);
    fn rec(outer: &Partition, i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.iter().copied()));
            }
            return;
        }
        let hi = outer.part(i);
        let lo = outer.part(i + 1);
        for v in (lo..=hi).rev() {
            let removed = (hi - v) as usize;
            if removed > left {
                break;
            }
            cur.push(v);
            rec(outer, i + 1, left - removed, cur, out);
            cur.pop();
        }
    }
    rec(outer, 0, size, &mut cur, &mut out);
    out
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<u64> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch(shape.size(), content.size()));
    }
    let mut memo = HashMap::new();
    Ok(kostka_rec(shape, content.parts(), &mut memo))
}

fn kostka_rec(shape: &Partition, content: &[u32], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    // The largest label occupies a horizontal strip; the tableau cannot have
    // more rows than labels.
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let total = horizontal_strips(shape, last as usize).iter().map(|inner| kostka_rec(inner, rest, memo)).sum();
    memo.insert(key, total);
    total
}

/// Littlewood–Richardson coefficient `c^gamma_{alpha, beta}`: the number of LR
/// tableaux of skew shape `gamma / alpha` and content `beta`.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
    if alpha.size() + beta.size() != gamma.size() {
        return Err(Error::SizeMismatch(alpha.size() + beta.size(), gamma.size()));
    }
    if !gamma.contains(alpha) || !gamma.contains(beta) {
        return Ok(0);
    }
    let mut count = 0u64;
    LrSearch::new(alpha, beta, gamma).run(&mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// First LR tableau of shape `gamma / alpha` and content `beta`, as rows of
/// labels for the skew cells (left to right).
pub fn first_lr_tableau(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Option<Vec<Vec<u32>>> {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return None;
    }
    let mut found = None;
    LrSearch::new(alpha, beta, gamma).run(&mut |rows| {
        found = Some(rows.to_vec());
        false
    });
    found
}

/// Depth-first enumeration of LR tableaux row by row. Within a row the labels
/// are weakly increasing; the row's contribution to the reverse reading word
/// must keep every label count bounded by the count of the label below it.
struct LrSearch<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    content: Vec<u32>,
}

impl<'a> LrSearch<'a> {
    fn new(inner: &'a Partition, content: &'a Partition, outer: &'a Partition) -> Self {
        Self { inner, outer, content: content.parts().to_vec() }
    }

    fn run(&self, visit: &mut dyn FnMut(&[Vec<u32>]) -> bool) {
        let mut used = vec![0u32; self.content.len() + 1];
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.outer.len());
        self.row(0, &mut used, &mut rows, visit);
    }

    /// Returns `false` once the visitor asks to stop.
    fn row(
        &self,
        r: usize,
        used: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]) -> bool,
    ) -> bool {
        if r == self.outer.len() {
            if used[1..].iter().zip(&self.content).all(|(u, c)| u == c) {
                return visit(rows);
            }
            return true;
        }
        let start = self.inner.part(r) as usize;
        let end = self.outer.part(r) as usize;
        let mut cells = Vec::with_capacity(end - start);
        let before = used.clone();
        self.fill(r, start, end, 1, &before, used, &mut cells, rows, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        r: usize,
        pos: usize,
        end: usize,
        label: u32,
        before: &[u32],
        used: &mut Vec<u32>,
        cells: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]) -> bool,
    ) -> bool {
        if pos == end {
            rows.push(cells.clone());
            let go = self.row(r + 1, used, rows, visit);
            rows.pop();
            return go;
        }
        let max_label = self.content.len() as u32;
        if label > max_label {
            return true;
        }
        let l = label as usize;
        let room = (self.content[l - 1] - used[l]) as usize;
        // Lattice bound from the row above: label l's running total may not
        // exceed what label l-1 had before this row started.
        let lattice_room = if l == 1 { usize::MAX } else { (before[l - 1] as usize).saturating_sub(used[l] as usize) };
        let max_take = room.min(lattice_room).min(end - pos);
        let mut go = true;
        // Try the largest block first so the first tableau found is the
        // one filling rows with small labels.
        for take in (0..=max_take).rev() {
            // Column strictness against the previous row for the new cells.
            let ok = (pos..pos + take).all(|c| self.above_ok(r, c, label, rows));
            if !ok {
                continue;
            }
            for _ in 0..take {
                cells.push(label);
            }
            used[l] += take as u32;
            go = self.fill(r, pos + take, end, label + 1, before, used, cells, rows, visit);
            used[l] -= take as u32;
            cells.truncate(cells.len() - take);
            if !go {
                break;
            }
        }
        go
    }

    fn above_ok(&self, r: usize, c: usize, label: u32, rows: &[Vec<u32>]) -> bool {
        if r == 0 {
            return true;
        }
        let above_start = self.inner.part(r - 1) as usize;
        let above_end = self.outer.part(r - 1) as usize;
        if c < above_start || c >= above_end {
            // Above is an inner (alpha) cell, or there is no cell above.
            return c < above_end;
        }
        rows[r - 1][c - above_start] < label
    }
}

/// One box added by a strict expansion.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LabelledBox {
    /// 1-based row of the Young diagram (top row is 1).
    pub row: usize,
    /// 1-based column.
    pub column: usize,
    pub label: u32,
}

/// A strict `weight`-expansion of `source` to `target`: boxes added in label
/// order, each label a horizontal strip, reverse reading word a lattice word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkewExpansionWitness {
    pub source: Partition,
    pub target: Partition,
    pub weight: Partition,
    pub steps: Vec<LabelledBox>,
}

impl SkewExpansionWitness {
    /// Checks every witness invariant against its own data.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Mismatch(format!("witness {}->{}: {m}", self.source, self.target)));
        let mut rows: Vec<u32> = self.source.parts().to_vec();
        let mut grid: HashMap<(usize, usize), u32> = HashMap::new();
        let mut last_label = 0;
        for b in &self.steps {
            if b.label < last_label {
                return fail("labels out of order".into());
            }
            last_label = b.label;
            while rows.len() < b.row {
                rows.push(0);
            }
            if rows[b.row - 1] as usize + 1 != b.column {
                return fail(format!("box {b:?} is not at the end of its row"));
            }
            if b.row > 1 && rows[b.row - 2] < b.column as u32 {
                return fail(format!("box {b:?} has no box above it"));
            }
            rows[b.row - 1] += 1;
            grid.insert((b.row, b.column), b.label);
        }
        if Partition::from_unsorted(rows.iter().copied()) != self.target || rows.windows(2).any(|w| w[0] < w[1]) {
            return fail("final shape differs from target".into());
        }
        // Strictly increasing down columns, weakly along rows.
        for (&(r, c), &l) in &grid {
            if let Some(&a) = grid.get(&(r - 1, c)) {
                if a >= l {
                    return fail(format!("column {c} not strict at row {r}"));
                }
            }
            if let Some(&a) = grid.get(&(r, c.wrapping_sub(1))) {
                if a > l {
                    return fail(format!("row {r} decreases at column {c}"));
                }
            }
        }
        // Reverse reading word (rows top to bottom, right to left) is a
        // lattice word with the declared content.
        let mut cells: Vec<(usize, usize, u32)> = grid.iter().map(|(&(r, c), &l)| (r, c, l)).collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut counts = vec![0u32; self.weight.len() + 2];
        for &(_, _, l) in &cells {
            let l = l as usize;
            if l == 0 || l > self.weight.len() {
                return fail(format!("label {l} outside the weight"));
            }
            counts[l] += 1;
            if l > 1 && counts[l] > counts[l - 1] {
                return fail("reading word is not a lattice word".into());
            }
        }
        if counts[1..=self.weight.len()] != *self.weight.parts() {
            return fail("content differs from weight".into());
        }
        Ok(())
    }
}

/// Checks the staircase-offset condition shared by the type C and D family
/// descriptions: `alpha` with `a_len` components and `beta` with `b_len`
/// components (ascending, zero padded) give shifted values `alpha_i + i`,
/// `beta_j + j` that together are exactly `{0, ..., a_len + b_len - 1}`.
pub fn satisfies_offset_condition(alpha: &Partition, beta: &Partition, a_len: usize, b_len: usize) -> bool {
    if alpha.len() > a_len || beta.len() > b_len {
        return false;
    }
    let mut seen = vec![false; a_len + b_len];
    let shifted = ascending_padded(alpha, a_len)
        .into_iter()
        .enumerate()
        .chain(ascending_padded(beta, b_len).into_iter().enumerate())
        .map(|(i, v)| v as usize + i);
    for v in shifted {
        if v >= seen.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Parts in ascending order, left-padded with zeros to `len`.
pub(crate) fn ascending_padded(p: &Partition, len: usize) -> Vec<u32> {
    let mut v = vec![0; len.saturating_sub(p.len())];
    v.extend(p.parts().iter().rev());
    v
}

/// Builds a strict `beta^t`-expansion of `alpha` to `target`.
///
/// When `target` is a rectangle `(c^r)` and `(alpha, beta)` satisfy the
/// offset condition with `r` components for `alpha` and `c` (type C shape,
/// `r = c + 1`) or `r` (type D shape, `r = c`) components for `beta`, the
/// witness is produced by repeatedly shifting `alpha` up one slot (appending
/// `c`) and lowering every nonzero `beta` entry by one; the boxes gained in
/// step `x` carry label `x`. Otherwise the first LR tableau found by search is
/// returned. `None` when no expansion exists.
pub fn strict_expansion_witness(
    alpha: &Partition,
    beta: &Partition,
    target: &Partition,
) -> Option<SkewExpansionWitness> {
    let weight = beta.transpose();
    if alpha.size() + beta.size() != target.size() {
        return None;
    }
    if let Some(w) = rectangle_construction(alpha, beta, target) {
        return Some(w);
    }
    let rows = first_lr_tableau(alpha, &weight, target)?;
    let mut steps = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (i, &l) in row.iter().enumerate() {
            steps.push(LabelledBox { row: r + 1, column: alpha.part(r) as usize + i + 1, label: l });
        }
    }
    steps.sort_by_key(|b| (b.label, b.row, b.column));
    Some(SkewExpansionWitness { source: alpha.clone(), target: target.clone(), weight, steps })
}

fn rectangle_construction(alpha: &Partition, beta: &Partition, target: &Partition) -> Option<SkewExpansionWitness> {
    let rows = target.len();
    let cols = target.part(0);
    if rows == 0 || target.parts().iter().any(|&p| p != cols) {
        return None;
    }
    let b_len = if rows == cols as usize + 1 {
        cols as usize
    } else if rows == cols as usize {
        rows
    } else {
        return None;
    };
    if !satisfies_offset_condition(alpha, beta, rows, b_len) {
        return None;
    }
    let mut a = ascending_padded(alpha, rows);
    let mut b = ascending_padded(beta, b_len);
    let mut steps = Vec::new();
    let mut label = 0;
    while b.iter().any(|&v| v > 0) {
        label += 1;
        let next: Vec<u32> = (0..rows).map(|i| if i + 1 < rows { a[i + 1] } else { cols }).collect();
        // Ascending slot i is diagram row rows - i.
        for i in 0..rows {
            for col in a[i]..next[i] {
                steps.push(LabelledBox { row: rows - i, column: col as usize + 1, label });
            }
        }
        a = next;
        b.iter_mut().for_each(|v| *v = v.saturating_sub(1));
        if label as usize > target.size() + 1 {
            return None;
        }
    }
    if a.iter().any(|&v| v != cols) {
        return None;
    }
    steps.sort_by_key(|s| (s.label, s.row, s.column));
    Some(SkewExpansionWitness { source: alpha.clone(), target: target.clone(), weight: beta.transpose(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(p("4,3,2,1").transpose(), p("4,3,2,1"));
        assert_eq!(p("2,2,2").transpose(), p("3,3"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance(&p("1,1,1"), &p("3")).unwrap(), Dominance::Leq);
        assert_eq!(dominance(&p("2,2"), &p("3,1")).unwrap(), Dominance::Leq);
        assert_eq!(dominance(&p("3,1,1,1"), &p("2,2,2")).unwrap(), Dominance::Incomparable);
        assert_eq!(dominance(&p("3"), &p("2,1")).unwrap(), Dominance::Geq);
        assert!(matches!(dominance(&p("3"), &p("2")), Err(Error::SizeMismatch(3, 2))));
    }

    #[test]
    fn kostka_examples() {
        for lam in Partition::all(6) {
            assert_eq!(kostka(&lam, &lam).unwrap(), 1);
        }
        assert_eq!(kostka(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(kostka(&p("1,1"), &p("2")).unwrap(), 0);
        assert!(kostka(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p("1"), &p("1"), &p("1,1")).unwrap(), 1);
        assert_eq!(lr_coeff(&p("2,2,1"), &p("1"), &p("2,2,2")).unwrap(), 1);
        for g in Partition::all(4) {
            for a in Partition::all(4) {
                let want = u64::from(a == g);
                assert_eq!(lr_coeff(&a, &Partition::empty(), &g).unwrap(), want);
            }
        }
        // alpha not inside gamma is zero, not an error
        assert_eq!(lr_coeff(&p("3"), &p("1"), &p("2,2")).unwrap(), 0);
        assert!(lr_coeff(&p("1"), &p("1"), &p("3")).is_err());
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coeff(&p("2,1"), &p("2,1"), &p("3,2,1")).unwrap(), 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,3,2,1").to_string(), "4,3,2,1");
        assert_eq!(p("-"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        let bp: BiPartition = "2,1|-".parse().unwrap();
        assert_eq!(bp.first, p("2,1"));
        assert!(bp.second.is_empty());
        assert_eq!(bp.to_string(), "2,1|-");
    }

    #[test]
    fn witness_examples() {
        let w = strict_expansion_witness(&p("1"), &p("1"), &p("1,1")).unwrap();
        assert_eq!(w.steps, vec![LabelledBox { row: 2, column: 1, label: 1 }]);
        w.validate().unwrap();

        let w = strict_expansion_witness(&p("1,1"), &Partition::empty(), &p("1,1")).unwrap();
        assert!(w.steps.is_empty());
        w.validate().unwrap();

        let w = strict_expansion_witness(&p("2,2,1"), &p("1"), &p("2,2,2")).unwrap();
        assert_eq!(w.steps, vec![LabelledBox { row: 3, column: 2, label: 1 }]);
        w.validate().unwrap();

        assert!(strict_expansion_witness(&p("3"), &p("1"), &p("2,2")).is_none());
    }

    #[test]
    fn dimensions() {
        assert_eq!(p("2,1").dimension(), BigUint::from(2u32));
        assert_eq!(p("3,2,1").dimension(), BigUint::from(16u32));
        assert_eq!(Partition::empty().dimension(), BigUint::from(1u32));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(BiPartition::all(2).len(), 5);
        assert_eq!(BiPartition::all(6).len(), 65);
    }
}
