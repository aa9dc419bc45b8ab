//! Exact sparse Gaussian elimination over the Gaussian rationals.
//!
//! Everything downstream (cohomology bases, membership witnesses, dual
//! certificates, harmonic spaces) reduces to the routines here. Pivoting
//! is lexicographic-first and fully deterministic, so bases and witnesses
//! are reproducible byte-for-byte across runs.

use crate::scalar::Scalar;

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type SVec = Vec<(usize, Scalar)>;

pub fn svec_is_zero(v: &SVec) -> bool {
    v.is_empty()
}

/// Leading (smallest) index of a sparse vector.
fn leading(v: &SVec) -> Option<usize> {
    v.first().map(|(i, _)| *i)
}

fn coeff_at(v: &SVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |(j, _)| *j)
        .ok()
        .map(|pos| &v[pos].1)
}

/// `target -= c * row`, keeping the sparse representation canonical.
fn axpy_sub(target: &SVec, c: &Scalar, row: &SVec) -> SVec {
    let mut out = Vec::with_capacity(target.len() + row.len());
    let mut a = target.iter().peekable();
    let mut b = row.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some((ia, _)), Some((ib, _))) if ia == ib => {
                let (_, ca) = a.next().unwrap();
                let (_, cb) = b.next().unwrap();
                let mut v = ca.clone();
                v -= &(c * cb);
                if !v.is_zero() {
                    out.push((*ia, v));
                }
            }
            (Some((ia, _)), Some((ib, _))) if ia < ib => {
                let (i, ca) = a.next().unwrap();
                out.push((*i, ca.clone()));
            }
            (Some(_), Some(_)) => {
                let (i, cb) = b.next().unwrap();
                out.push((*i, -(c * cb)));
            }
            (Some(_), None) => {
                let (i, ca) = a.next().unwrap();
                out.push((*i, ca.clone()));
            }
            (None, Some(_)) => {
                let (i, cb) = b.next().unwrap();
                out.push((*i, -(c * cb)));
            }
            (None, None) => break,
        }
    }
    out
}

fn scale_svec(v: &SVec, c: &Scalar) -> SVec {
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// Row-reduced echelon form. Rows are processed by ascending leading
/// index, first occurrence wins ties; pivots are normalized to 1 and
/// eliminated from every other row.
pub struct Rref {
    /// Nonzero reduced rows, sorted by pivot column.
    pub rows: Vec<SVec>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector modulo the row span (eliminate pivot coordinates).
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = coeff_at(&out, p) {
                let c = c.clone();
                out = axpy_sub(&out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SVec) -> bool {
        svec_is_zero(&self.reduce(v))
    }
}

pub fn rref(rows: impl IntoIterator<Item = SVec>) -> Rref {
    let mut pending: Vec<SVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut done: Vec<SVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    loop {
        // deterministic pivot: smallest leading index, first row on ties
        let mut best: Option<(usize, usize)> = None;
        for (i, r) in pending.iter().enumerate() {
            let l = leading(r).unwrap();
            if best.map_or(true, |(_, bl)| l < bl) {
                best = Some((i, l));
            }
        }
        let Some((idx, piv)) = best else { break };
        let row = pending.swap_remove(idx);
        let inv = coeff_at(&row, piv).unwrap().inv();
        let row = scale_svec(&row, &inv);
        for r in pending.iter_mut() {
            if let Some(c) = coeff_at(r, piv) {
                let c = c.clone();
                *r = axpy_sub(r, &c, &row);
            }
        }
        r_retain_nonzero(&mut pending);
        for (r, _) in done.iter_mut().zip(0..) {
            if let Some(c) = coeff_at(r, piv) {
                let c = c.clone();
                *r = axpy_sub(r, &c, &row);
            }
        }
        done.push(row);
        pivots.push(piv);
    }
    // sort by pivot for canonical output
    let mut order: Vec<usize> = (0..done.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    let rows = order.iter().map(|&i| done[i].clone()).collect();
    let pivots = order.into_iter().map(|i| pivots[i]).collect();
    Rref { rows, pivots }
}

fn r_retain_nonzero(rows: &mut Vec<SVec>) {
    rows.retain(|r| !r.is_empty());
}

/// Rank of a list of vectors.
pub fn rank(rows: impl IntoIterator<Item = SVec>) -> usize {
    rref(rows).rank()
}

/// Kernel of the linear map whose matrix rows (equations) are given, as a
/// canonical basis indexed by free columns in ascending order.
pub fn kernel_basis(ncols: usize, equations: impl IntoIterator<Item = SVec>) -> Vec<SVec> {
    let r = rref(equations);
    let mut is_pivot = vec![false; ncols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut v: SVec = Vec::new();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if let Some(c) = coeff_at(row, f) {
                v.push((p, -c));
            }
        }
        v.push((f, Scalar::one()));
        v.sort_by_key(|(i, _)| *i);
        basis.push(v);
    }
    basis
}

/// Transpose a list of columns into a list of equation rows.
pub fn columns_to_rows(nrows: usize, columns: &[SVec]) -> Vec<SVec> {
    let mut rows: Vec<SVec> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            rows[*i].push((j, c.clone()));
        }
    }
    rows
}

/// Outcome of an exact linear solve `Σ_j x_j · gen_j = target`.
pub enum SolveOutcome {
    /// Coefficients of the canonical (free-variables-zero) solution,
    /// listed as `(generator index, coefficient)`.
    Solved(Vec<(usize, Scalar)>),
    /// A dual functional `y` with `y · gen_j = 0` for every generator and
    /// `y · target = 1`, certifying non-membership.
    Inconsistent(SVec),
}

/// Solve for `target` in the span of `generators` (vectors over ambient
/// coordinates `0..nrows`). Deterministic; the witness uses the earliest
/// generators the elimination pivots on.
pub fn solve_in_span(nrows: usize, generators: &[SVec], target: &SVec) -> SolveOutcome {
    let ngen = generators.len();
    // Augmented rows: ambient equations [A | b] extended with the identity
    // to track row operations (the transform gives the dual functional).
    // Row i of the system: Σ_j A[i][j] x_j = b_i.
    struct Row {
        a: SVec,      // generator coefficients (columns 0..ngen, then target at ngen)
        e: SVec,      // transform part: combination of original ambient rows
    }
    let mut rows: Vec<Row> = Vec::new();
    {
        let mut a_rows: Vec<SVec> = vec![Vec::new(); nrows];
        for (j, g) in generators.iter().enumerate() {
            for (i, c) in g {
                a_rows[*i].push((j, c.clone()));
            }
        }
        for (i, c) in target {
            a_rows[*i].push((ngen, c.clone()));
        }
        for (i, a) in a_rows.into_iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            rows.push(Row {
                a,
                e: vec![(i, Scalar::one())],
            });
        }
    }

    // eliminate generator columns in ascending order
    let mut done: Vec<Row> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            let l = leading(&r.a).unwrap();
            if l >= ngen {
                continue; // only the target column left: inconsistency row
            }
            if best.map_or(true, |(_, bl)| l < bl) {
                best = Some((i, l));
            }
        }
        let Some((idx, piv)) = best else { break };
        let row = rows.swap_remove(idx);
        let inv = coeff_at(&row.a, piv).unwrap().inv();
        let row = Row {
            a: scale_svec(&row.a, &inv),
            e: scale_svec(&row.e, &inv),
        };
        let mut eliminate = |r: &mut Row| {
            if let Some(c) = coeff_at(&r.a, piv) {
                let c = c.clone();
                r.a = axpy_sub(&r.a, &c, &row.a);
                r.e = axpy_sub(&r.e, &c, &row.e);
            }
        };
        rows.iter_mut().for_each(&mut eliminate);
        done.iter_mut().for_each(&mut eliminate);
        rows.retain(|r| !r.a.is_empty());
        done.push(row);
        pivots.push(piv);
    }

    // any remaining row is supported on the target column alone
    if let Some(bad) = rows
        .iter()
        .min_by_key(|r| r.e.first().map(|(i, _)| *i).unwrap_or(usize::MAX))
    {
        let c = coeff_at(&bad.a, ngen).expect("leftover row must hit target");
        let inv = c.inv();
        return SolveOutcome::Inconsistent(scale_svec(&bad.e, &inv));
    }

    // consistent: pivot variables read off the target column, free ones 0
    let mut coeffs: Vec<(usize, Scalar)> = Vec::new();
    for (row, &p) in done.iter().zip(&pivots) {
        if let Some(c) = coeff_at(&row.a, ngen) {
            coeffs.push((p, c.clone()));
        }
    }
    coeffs.sort_by_key(|(j, _)| *j);
    SolveOutcome::Solved(coeffs)
}

/// Canonical basis of (span of `cocycles`) modulo (span of `boundaries`):
/// reduce the cocycles modulo the boundary echelon and re-eliminate. The
/// output rows are still cocycles (cocycle minus boundary combination).
pub fn quotient_basis(cocycles: &[SVec], boundaries: &[SVec]) -> Vec<SVec> {
    let b = rref(boundaries.iter().cloned());
    let reduced: Vec<SVec> = cocycles.iter().map(|v| b.reduce(v)).collect();
    rref(reduced).rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        // rows: [1 2 0], [2 4 0], [0 0 3]
        let rows = vec![
            vec![(0, s(1)), (1, s(2))],
            vec![(0, s(2)), (1, s(4))],
            vec![(2, s(3))],
        ];
        let r = rref(rows);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert!(r.contains(&vec![(0, s(3)), (1, s(6))]));
        assert!(!r.contains(&vec![(1, s(1))]));
    }

    #[test]
    fn kernel_of_simple_map() {
        // equations x0 + x1 = 0 over 3 columns: kernel = {(-1,1,0),(0,0,1)}
        let eqs = vec![vec![(0, s(1)), (1, s(1))]];
        let k = kernel_basis(3, eqs);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![(0, s(-1)), (1, s(1))]);
        assert_eq!(k[1], vec![(2, s(1))]);
    }

    #[test]
    fn solve_produces_witness_or_dual() {
        let gens = vec![vec![(0, s(1)), (1, s(1))], vec![(1, s(1))]];
        match solve_in_span(3, &gens, &vec![(0, s(2)), (1, s(5))]) {
            SolveOutcome::Solved(c) => {
                assert_eq!(c, vec![(0, s(2)), (1, s(3))]);
            }
            _ => panic!("expected solution"),
        }
        // target touches coordinate 2, unreachable
        match solve_in_span(3, &gens, &vec![(2, s(1))]) {
            SolveOutcome::Inconsistent(y) => {
                // y annihilates the generators and pairs to 1 with target
                for g in &gens {
                    let dot: Scalar = y
                        .iter()
                        .filter_map(|(i, c)| coeff_at(g, *i).map(|x| c * x))
                        .fold(Scalar::zero(), |acc, v| acc + v);
                    assert!(dot.is_zero());
                }
                let dot = coeff_at(&y, 2).cloned().unwrap_or_else(Scalar::zero);
                assert_eq!(dot, s(1));
            }
            _ => panic!("expected inconsistency"),
        }
    }

    #[test]
    fn quotient_dimension() {
        // span{e0,e1} / span{e0+e1}: dimension 1
        let cocycles = vec![vec![(0, s(1))], vec![(1, s(1))]];
        let boundaries = vec![vec![(0, s(1)), (1, s(1))]];
        let q = quotient_basis(&cocycles, &boundaries);
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn zero_target_is_member_with_empty_witness() {
        let gens = vec![vec![(0, s(1))]];
        match solve_in_span(2, &gens, &Vec::new()) {
            SolveOutcome::Solved(c) => assert!(c.is_empty()),
            _ => panic!("zero must be a member"),
        }
    }
}
