use alloc::vec;
use alloc::vec::Vec;

use super::bitvec::{words_for, BitMatrix, BitVector};
use crate::Error;

const NONE: u32 = u32::MAX;

/// A permutation of `0..n` read as "position `i` holds column `order[i]`".
///
/// Pivots are chosen at the earliest position, so the order decides which
/// columns end up as pivots and which survive into a quotient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnOrder {
    order: Vec<usize>,
    position: Vec<usize>,
    identity: bool,
}

impl ColumnOrder {
    #[must_use]
    pub fn natural(n: usize) -> Self {
        let order: Vec<usize> = (0..n).collect();
        Self { position: order.clone(), order, identity: true }
    }

    #[must_use]
    pub fn reversed(n: usize) -> Self {
        let order: Vec<usize> = (0..n).rev().collect();
        Self::new(order).expect("reversal is a permutation")
    }

    /// Fails unless `order` is a bijection on `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self, Error> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (p, &c) in order.iter().enumerate() {
            if c >= n || position[c] != usize::MAX {
                return Err(Error::NotPermutation);
            }
            position[c] = p;
        }
        let identity = order.iter().enumerate().all(|(p, &c)| p == c);
        Ok(Self { order, position, identity })
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.identity
    }

    #[inline]
    #[must_use]
    pub fn column_at(&self, pos: usize) -> usize {
        self.order[pos]
    }

    #[inline]
    #[must_use]
    pub fn position_of(&self, col: usize) -> usize {
        self.position[col]
    }

    #[must_use]
    pub fn to_positions(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.len(), "length mismatch");
        if self.identity {
            return v.clone();
        }
        BitVector::from_ones(v.len(), v.ones().map(|c| self.position[c]))
    }

    #[must_use]
    pub fn to_columns(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.len(), "length mismatch");
        if self.identity {
            return v.clone();
        }
        BitVector::from_ones(v.len(), v.ones().map(|p| self.order[p]))
    }
}

/// Row-echelon data over a fixed column order.
///
/// Rows are kept in position coordinates. Each row's lowest set position is
/// its pivot and no two rows share one. After [`EchelonForm::fully_reduce`]
/// each pivot position is set in exactly one row and rows are sorted by pivot.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    order: ColumnOrder,
    rows: Vec<BitVector>,
    leads: Vec<usize>,
    pivot_row: Vec<u32>,
    reduced: bool,
}

impl EchelonForm {
    #[must_use]
    pub fn new(order: ColumnOrder) -> Self {
        let n = order.len();
        Self { order, rows: Vec::new(), leads: Vec::new(), pivot_row: vec![NONE; n], reduced: true }
    }

    #[must_use]
    pub fn natural(ncols: usize) -> Self {
        Self::new(ColumnOrder::natural(ncols))
    }

    #[must_use]
    pub fn ncols(&self) -> usize {
        self.order.len()
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn order(&self) -> &ColumnOrder {
        &self.order
    }

    #[must_use]
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Adds a row given in column coordinates. Returns whether the rank grew.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let p = self.order.to_positions(v);
        self.insert_positioned(p)
    }

    /// Adds a row already in position coordinates. Returns whether the rank grew.
    pub fn insert_positioned(&mut self, mut v: BitVector) -> bool {
        assert_eq!(v.len(), self.ncols(), "length mismatch");
        self.reduce_positioned(&mut v);
        match v.first_one() {
            None => false,
            Some(lead) => {
                self.pivot_row[lead] = self.rows.len() as u32;
                self.rows.push(v);
                self.leads.push(lead);
                self.reduced = false;
                true
            }
        }
    }

    /// Clears every pivot position of `v` (position coordinates) in one ascending pass.
    pub fn reduce_positioned(&self, v: &mut BitVector) {
        assert_eq!(v.len(), self.ncols(), "length mismatch");
        let nwords = v.words().len();
        for w in 0..nwords {
            let mut skip = 0u64;
            loop {
                let word = v.words()[w] & !skip;
                if word == 0 {
                    break;
                }
                let b = word.trailing_zeros() as usize;
                let r = self.pivot_row[w * 64 + b];
                if r == NONE {
                    skip |= 1 << b;
                } else {
                    v.xor_from(&self.rows[r as usize], w);
                }
            }
        }
    }

    /// Remainder of `v` after reduction, in column coordinates.
    #[must_use]
    pub fn residual(&self, v: &BitVector) -> BitVector {
        let mut p = self.order.to_positions(v);
        self.reduce_positioned(&mut p);
        self.order.to_columns(&p)
    }

    #[must_use]
    pub fn in_span(&self, v: &BitVector) -> bool {
        let mut p = self.order.to_positions(v);
        self.reduce_positioned(&mut p);
        p.is_zero()
    }

    /// Pivot columns, listed by position.
    #[must_use]
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut leads = self.leads.clone();
        leads.sort_unstable();
        leads.into_iter().map(|p| self.order.column_at(p)).collect()
    }

    #[must_use]
    pub fn is_pivot_column(&self, col: usize) -> bool {
        self.pivot_row[self.order.position_of(col)] != NONE
    }

    /// Row `k` in column coordinates.
    #[must_use]
    pub fn row(&self, k: usize) -> BitVector {
        self.order.to_columns(&self.rows[k])
    }

    #[must_use]
    pub fn rows_positioned(&self) -> &[BitVector] {
        &self.rows
    }

    #[must_use]
    pub fn lead_position(&self, k: usize) -> usize {
        self.leads[k]
    }

    /// Row index whose pivot sits at `pos`.
    #[must_use]
    pub fn pivot_row_at(&self, pos: usize) -> Option<usize> {
        let r = self.pivot_row[pos];
        (r != NONE).then_some(r as usize)
    }

    /// Back-substitutes so that every pivot position is set in exactly one
    /// row, and sorts rows by pivot position.
    pub fn fully_reduce(&mut self) {
        if self.reduced {
            return;
        }
        let table = ClassTable::build(self);
        let ncols = self.ncols();
        let mut leads = self.leads.clone();
        leads.sort_unstable();
        let mut rows = Vec::with_capacity(leads.len());
        for (k, &lead) in leads.iter().enumerate() {
            let mut row = BitVector::zeros(ncols);
            row.set(lead, true);
            for f in table.class_ones(lead) {
                row.set(table.free[f], true);
            }
            self.pivot_row[lead] = k as u32;
            rows.push(row);
        }
        self.rows = rows;
        self.leads = leads;
        self.reduced = true;
    }

    /// Canonical basis of the quotient by the row span.
    #[must_use]
    pub fn quotient(&self) -> QuotientBasis {
        let table = ClassTable::build(self);
        QuotientBasis { order: self.order.clone(), rank: self.rank(), table }
    }

    /// Like [`EchelonForm::quotient`] but frees the rows first.
    #[must_use]
    pub fn into_quotient(self) -> QuotientBasis {
        let table = ClassTable::build(&self);
        let Self { order, rows, .. } = self;
        let rank = rows.len();
        drop(rows);
        QuotientBasis { order, rank, table }
    }

    /// Kernel of the linear map whose row space this is: vectors `v` with `r . v = 0`
    /// for every row. One vector per non-pivot column, in position order.
    #[must_use]
    pub fn null_space(&self) -> Vec<BitVector> {
        let table = ClassTable::build(self);
        let n = self.ncols();
        let mut out: Vec<BitVector> = table
            .free
            .iter()
            .map(|&p| BitVector::unit(n, self.order.column_at(p)))
            .collect();
        for &lead in &self.leads {
            let col = self.order.column_at(lead);
            for f in table.class_ones(lead) {
                out[f].set(col, true);
            }
        }
        out
    }
}

/// For every position, its class modulo the row span, written in the basis of
/// non-pivot positions (ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
struct ClassTable {
    free: Vec<usize>,
    free_index: Vec<u32>,
    stride: usize,
    words: Vec<u64>,
}

impl ClassTable {
    fn build(e: &EchelonForm) -> Self {
        let n = e.ncols();
        let free: Vec<usize> = (0..n).filter(|&p| e.pivot_row[p] == NONE).collect();
        let mut free_index = vec![NONE; n];
        for (i, &p) in free.iter().enumerate() {
            free_index[p] = i as u32;
        }
        let stride = words_for(free.len());
        let mut words = vec![0u64; n * stride];
        for (i, &p) in free.iter().enumerate() {
            words[p * stride + i / 64] |= 1 << (i % 64);
        }
        let mut order: Vec<usize> = (0..e.rank()).collect();
        order.sort_unstable_by_key(|&k| core::cmp::Reverse(e.leads[k]));
        let mut acc = vec![0u64; stride];
        for k in order {
            let lead = e.leads[k];
            acc.iter_mut().for_each(|w| *w = 0);
            let row = &e.rows[k];
            let mut next = row.first_one_from(lead + 1);
            while let Some(p) = next {
                let fi = free_index[p];
                if fi == NONE {
                    let src = &words[p * stride..(p + 1) * stride];
                    for (a, b) in acc.iter_mut().zip(src) {
                        *a ^= b;
                    }
                } else {
                    acc[fi as usize / 64] ^= 1 << (fi % 64);
                }
                next = row.first_one_from(p + 1);
            }
            words[lead * stride..(lead + 1) * stride].copy_from_slice(&acc);
        }
        Self { free, free_index, stride, words }
    }

    fn class_words(&self, pos: usize) -> &[u64] {
        &self.words[pos * self.stride..(pos + 1) * self.stride]
    }

    fn class_ones(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        BitVector::from_words(self.free.len(), self.class_words(pos).to_vec())
            .ones()
            .collect::<Vec<_>>()
            .into_iter()
    }
}

/// The quotient of `F2^n` by a subspace, with a canonical basis of non-pivot columns.
///
/// Reducing a vector is a table lookup per set bit, so it costs
/// `popcount(v) * dim / 64` word operations regardless of the subspace size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    order: ColumnOrder,
    rank: usize,
    table: ClassTable,
}

impl QuotientBasis {
    #[must_use]
    pub fn ambient_dim(&self) -> usize {
        self.order.len()
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the quotient.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.table.free.len()
    }

    #[must_use]
    pub fn order(&self) -> &ColumnOrder {
        &self.order
    }

    /// Non-pivot columns in position order; coordinate `i` of a reduced vector refers to entry `i`.
    #[must_use]
    pub fn selected_columns(&self) -> Vec<usize> {
        self.table.free.iter().map(|&p| self.order.column_at(p)).collect()
    }

    #[must_use]
    pub fn selected_positions(&self) -> &[usize] {
        &self.table.free
    }

    /// Coordinate index of a selected column, if it is one.
    #[must_use]
    pub fn selected_index(&self, col: usize) -> Option<usize> {
        let i = self.table.free_index[self.order.position_of(col)];
        (i != NONE).then_some(i as usize)
    }

    /// Class of `v` (column coordinates) in selected-column coordinates.
    #[must_use]
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.ambient_dim(), "length mismatch");
        self.reduce_positions(v.ones().map(|c| self.order.position_of(c)))
    }

    /// Class of a vector given by its set columns. Repeats cancel.
    #[must_use]
    pub fn reduce_columns(&self, cols: impl IntoIterator<Item = usize>) -> BitVector {
        self.reduce_positions(cols.into_iter().map(|c| self.order.position_of(c)))
    }

    /// Class of a vector given by its set positions. Repeats cancel.
    #[must_use]
    pub fn reduce_positions(&self, positions: impl IntoIterator<Item = usize>) -> BitVector {
        let stride = self.table.stride;
        let mut acc = vec![0u64; stride];
        for p in positions {
            for (a, b) in acc.iter_mut().zip(self.table.class_words(p)) {
                *a ^= b;
            }
        }
        BitVector::from_words(self.dim(), acc)
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The vector with ones at the selected columns named by `coords`.
    #[must_use]
    pub fn representative(&self, coords: &BitVector) -> BitVector {
        assert_eq!(coords.len(), self.dim(), "length mismatch");
        BitVector::from_ones(
            self.ambient_dim(),
            coords.ones().map(|i| self.order.column_at(self.table.free[i])),
        )
    }
}

/// Reduced echelon form of the rows of `m`, pivots chosen greedily along `order`.
#[must_use]
pub fn echelonize(m: &BitMatrix, order: &ColumnOrder) -> EchelonForm {
    assert_eq!(m.ncols(), order.len(), "order length mismatch");
    let mut e = EchelonForm::new(order.clone());
    for r in m.rows() {
        e.insert(r);
    }
    e.fully_reduce();
    e
}

/// Basis of `{v : m v = 0}`, `v` indexed by the columns of `m`.
#[must_use]
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVector> {
    echelonize(m, &ColumnOrder::natural(m.ncols())).null_space()
}

#[must_use]
pub fn quotient_basis(ambient_dim: usize, subspace: &BitMatrix, order: &ColumnOrder) -> QuotientBasis {
    assert_eq!(subspace.ncols(), ambient_dim, "subspace width mismatch");
    let mut e = EchelonForm::new(order.clone());
    for r in subspace.rows() {
        e.insert(r);
    }
    e.into_quotient()
}

/// Basis of `{c : sum_k c_k images[k] = 0}` for vectors of a common length.
#[must_use]
pub fn kernel_of_images(images: &[BitVector]) -> Vec<BitVector> {
    let k = images.len();
    let m = images.first().map_or(0, BitVector::len);
    let mut e = EchelonForm::natural(m + k);
    for (i, img) in images.iter().enumerate() {
        assert_eq!(img.len(), m, "image length mismatch");
        e.insert_positioned(img.concat(&BitVector::unit(k, i)));
    }
    e.fully_reduce();
    (0..e.rank())
        .filter(|&r| e.lead_position(r) >= m)
        .map(|r| e.rows_positioned()[r].slice(m, m + k))
        .collect()
}

/// Basis of `{c : sum_k c_k images[k] ∈ span(subspace)}`.
///
/// Several simultaneous conditions are expressed by concatenating each
/// unknown's images against a block-diagonal subspace; see
/// [`solve_modulo_quotients`] for the usual case.
#[must_use]
pub fn solve_modulo(images: &[BitVector], subspace: &EchelonForm) -> Vec<BitVector> {
    let residuals: Vec<BitVector> = images.iter().map(|v| subspace.residual(v)).collect();
    if residuals.is_empty() {
        return Vec::new();
    }
    kernel_of_images(&residuals)
}

/// Unknowns `c` with `sum_k c_k images[j][k]` trivial in the quotient `j`, for all `j`.
/// `images[j]` holds one already-reduced class per unknown.
#[must_use]
pub fn solve_modulo_quotients(unknowns: usize, images: &[Vec<BitVector>]) -> Vec<BitVector> {
    let stacked: Vec<BitVector> = (0..unknowns)
        .map(|k| {
            let mut ones = Vec::new();
            let mut offset = 0;
            for block in images {
                ones.extend(block[k].ones().map(|i| offset + i));
                offset += block[k].len();
            }
            BitVector::from_ones(offset, ones)
        })
        .collect();
    kernel_of_images(&stacked)
}

/// `Z / B` for subspaces `B ⊆ Z` of a common ambient space, with a fixed set of
/// class representatives taken from `Z`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: usize,
    boundary_rank: usize,
    reps: Vec<BitVector>,
    echelon: EchelonForm,
}

impl Subquotient {
    /// `boundaries` spans `B`; `cycles` spans `Z` and is assumed to contain `B`.
    #[must_use]
    pub fn new(
        ambient: usize,
        boundaries: impl IntoIterator<Item = BitVector>,
        cycles: impl IntoIterator<Item = BitVector>,
    ) -> Self {
        let mut bounds = EchelonForm::natural(ambient);
        for b in boundaries {
            bounds.insert_positioned(b);
        }
        let boundary_rank = bounds.rank();
        let mut reps = Vec::new();
        let mut probe = bounds.clone();
        for z in cycles {
            if probe.insert_positioned(z.clone()) {
                reps.push(z);
            }
        }
        let h = reps.len();
        let mut echelon = EchelonForm::natural(ambient + h);
        for r in bounds.rows_positioned() {
            echelon.insert_positioned(r.concat(&BitVector::zeros(h)));
        }
        for (t, z) in reps.iter().enumerate() {
            echelon.insert_positioned(z.concat(&BitVector::unit(h, t)));
        }
        Self { ambient, boundary_rank, reps, echelon }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    #[must_use]
    pub fn boundary_rank(&self) -> usize {
        self.boundary_rank
    }

    #[must_use]
    pub fn representatives(&self) -> &[BitVector] {
        &self.reps
    }

    /// Class coordinates of `v`, or `None` when `v ∉ Z`.
    #[must_use]
    pub fn coordinates(&self, v: &BitVector) -> Option<BitVector> {
        assert_eq!(v.len(), self.ambient, "length mismatch");
        let h = self.reps.len();
        let mut x = v.concat(&BitVector::zeros(h));
        self.echelon.reduce_positioned(&mut x);
        x.slice(0, self.ambient).is_zero().then(|| x.slice(self.ambient, self.ambient + h))
    }
}
