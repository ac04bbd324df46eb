//! Dominance and skyline extraction over distance rows. Smaller is better in
//! every coordinate; +inf is worse than any finite value and equal to itself.

use crate::distances::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::scalar::Scalar;

/// `a` dominates `b`: no coordinate worse and at least one strictly better.
pub fn dominates<T: PartialOrd>(a: &[T], b: &[T]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Argument(format!(
            "cannot compare vectors of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
fn dominates_unchecked<T: PartialOrd>(a: &[T], b: &[T]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

/// Non-dominated candidates of a distance matrix, in matrix row order.
#[derive(Debug, Clone, PartialEq)]
pub struct SkylineResult<S> {
    pub vertices: Vec<VertexId>,
    pub rows: Vec<Vec<S>>,
}

impl<S> SkylineResult<S> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn collect<S: Scalar>(matrix: &DistanceMatrix<S>, mut keep: Vec<usize>) -> SkylineResult<S> {
    keep.sort_unstable();
    SkylineResult {
        vertices: keep.iter().map(|&i| matrix.candidates()[i]).collect(),
        rows: keep.iter().map(|&i| matrix.row(i).to_vec()).collect(),
    }
}

/// Block-nested-loop skyline over row vectors; returns surviving row indices in
/// input order. Rows with identical vectors survive together.
pub fn bnl_indices<T: PartialOrd, R: AsRef<[T]>>(rows: &[R]) -> Vec<usize> {
    let mut window: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if window
            .iter()
            .any(|&w| dominates_unchecked(rows[w].as_ref(), row))
        {
            continue;
        }
        window.retain(|&w| !dominates_unchecked(row, rows[w].as_ref()));
        window.push(i);
    }
    window.sort_unstable();
    window
}

/// All-pairs skyline over row vectors.
pub fn naive_indices<T: PartialOrd, R: AsRef<[T]>>(rows: &[R]) -> Vec<usize> {
    (0..rows.len())
        .filter(|&i| {
            !rows
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && dominates_unchecked(other.as_ref(), rows[i].as_ref()))
        })
        .collect()
}

pub fn bnl_skyline<S: Scalar>(matrix: &DistanceMatrix<S>) -> SkylineResult<S> {
    let rows: Vec<&[S]> = matrix.rows().collect();
    collect(matrix, bnl_indices(&rows))
}

pub fn naive_skyline<S: Scalar>(matrix: &DistanceMatrix<S>) -> SkylineResult<S> {
    let rows: Vec<&[S]> = matrix.rows().collect();
    collect(matrix, naive_indices(&rows))
}
