//! Structure-constant extraction and the checks that run on top of it:
//! antisymmetric tensors, the Jacobi identity, and simultaneous weight
//! decompositions with exact rational spectra.
//!
//! Everything here is deterministic and allocation-exact: a check either
//! proves its claim over the rationals or reports the failing indices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::{nullspace, Mat, SpanSolver};
use crate::scalar::{display_gauss, GaussRat, Int, Rat};

/// Antisymmetric structure tensor: rows are stored for i < j only and read
/// back with the sign folded in. Entries are sparse coordinate lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructTensor {
    pub dim: u32,
    pub labels: Vec<String>,
    pub entries: BTreeMap<(u32, u32), Vec<(u32, GaussRat)>>,
}

impl StructTensor {
    pub fn new(dim: u32, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), dim as usize);
        StructTensor { dim, labels, entries: BTreeMap::new() }
    }

    /// Store the bracket row of (i, j), i < j, dropping zeros.
    pub fn insert_row(&mut self, i: u32, j: u32, row: Vec<(u32, GaussRat)>) {
        assert!(i < j && j < self.dim);
        let row: Vec<(u32, GaussRat)> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !row.is_empty() {
            self.entries.insert((i, j), row);
        }
    }

    /// Raw row with a negate flag: (i, j) read as stored, (j, i) negated,
    /// (i, i) empty.
    pub fn row_raw(&self, i: u32, j: u32) -> (Option<&Vec<(u32, GaussRat)>>, bool) {
        if i == j {
            return (None, false);
        }
        if i < j {
            (self.entries.get(&(i, j)), false)
        } else {
            (self.entries.get(&(j, i)), true)
        }
    }

    /// Owned signed row.
    pub fn row(&self, i: u32, j: u32) -> Vec<(u32, GaussRat)> {
        let (r, neg) = self.row_raw(i, j);
        match r {
            None => Vec::new(),
            Some(v) if !neg => v.clone(),
            Some(v) => v.iter().map(|(l, c)| (*l, -c)).collect(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.values().map(|v| v.len()).sum()
    }

    /// Matrix of ad(b_h) on the basis: column j holds the coordinates of
    /// [b_h, b_j].
    pub fn ad_matrix(&self, h: u32) -> Mat {
        let n = self.dim as usize;
        let mut m = Mat::zeros(n, n);
        for j in 0..self.dim {
            for (l, c) in self.row(h, j) {
                m[(l as usize, j as usize)] = c;
            }
        }
        m
    }
}

/// One failed check, with enough context to locate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub context: String,
    pub indices: Vec<u32>,
    pub expected: String,
    pub got: String,
}

/// Outcome of a verification pass. Wall time is carried for reporting but
/// ignored by equality, so serial and parallel runs of the same check
/// compare equal.
#[derive(Debug, Clone, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub wall_ms: u128,
}

impl PartialEq for VerifyReport {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.passed == other.passed
            && self.checked == other.checked
            && self.failures == other.failures
    }
}

impl VerifyReport {
    pub fn from_failures(name: &str, checked: u64, failures: Vec<Failure>) -> Self {
        VerifyReport {
            name: String::from(name),
            passed: failures.is_empty(),
            checked,
            failures,
            wall_ms: 0,
        }
    }
}

/// Extract the structure tensor of a bracket over a basis. The
/// coordinatization may reject an element (closure failure); that aborts
/// the extraction with the offending pair.
pub fn extract_constants<E, B, C, Err>(
    basis: &[E],
    labels: Vec<String>,
    bracket: B,
    coordinatize: C,
) -> Result<StructTensor, (u32, u32, Err)>
where
    B: Fn(&E, &E) -> E,
    C: Fn(&E) -> Result<Vec<GaussRat>, Err>,
{
    let dim = basis.len() as u32;
    let mut t = StructTensor::new(dim, labels);
    for i in 0..dim {
        for j in i + 1..dim {
            let row = extract_pair(basis, &bracket, &coordinatize, i, j)?;
            t.insert_row(i, j, row);
        }
    }
    Ok(t)
}

/// One pair of the extraction; the unit that partitioned drivers fan out.
pub fn extract_pair<E, B, C, Err>(
    basis: &[E],
    bracket: &B,
    coordinatize: &C,
    i: u32,
    j: u32,
) -> Result<Vec<(u32, GaussRat)>, (u32, u32, Err)>
where
    B: Fn(&E, &E) -> E,
    C: Fn(&E) -> Result<Vec<GaussRat>, Err>,
{
    let b = bracket(&basis[i as usize], &basis[j as usize]);
    let coords = coordinatize(&b).map_err(|e| (i, j, e))?;
    Ok(coords
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| (l as u32, c))
        .collect())
}

/// All pairs i < j in lexicographic order.
pub fn pair_list(dim: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::with_capacity((dim as usize * (dim as usize - 1)) / 2);
    for i in 0..dim {
        for j in i + 1..dim {
            v.push((i, j));
        }
    }
    v
}

/// Assemble partitioned extraction results into a tensor. Chunks may come
/// in any order; the map normalizes it.
pub fn assemble(
    dim: u32,
    labels: Vec<String>,
    chunks: Vec<Vec<((u32, u32), Vec<(u32, GaussRat)>)>>,
) -> StructTensor {
    let mut t = StructTensor::new(dim, labels);
    for chunk in chunks {
        for ((i, j), row) in chunk {
            t.insert_row(i, j, row);
        }
    }
    t
}

pub fn total_pairs(dim: u32) -> u64 {
    let d = dim as u64;
    d * (d - 1) / 2
}

pub fn total_triples(dim: u32) -> u64 {
    let d = dim as u64;
    d * (d - 1) * (d - 2) / 6
}

/// The rank-th triple i < j < k in lexicographic order.
pub fn unrank_triple(dim: u32, rank: u64) -> (u32, u32, u32) {
    debug_assert!(rank < total_triples(dim));
    let mut r = rank;
    let mut i = 0u32;
    loop {
        let rest = dim - i - 1;
        let block = (rest as u64) * (rest as u64 - 1) / 2;
        if r < block {
            break;
        }
        r -= block;
        i += 1;
    }
    let mut j = i + 1;
    loop {
        let block = (dim - j - 1) as u64;
        if r < block {
            break;
        }
        r -= block;
        j += 1;
    }
    (i, j, j + 1 + r as u32)
}

/// Scratch buffers for the Jacobi accumulation, reused across triples.
pub struct JacobiScratch {
    acc: Vec<GaussRat>,
    touched: Vec<u32>,
}

impl JacobiScratch {
    pub fn new(dim: u32) -> Self {
        JacobiScratch { acc: vec![GaussRat::zero(); dim as usize], touched: Vec::new() }
    }

    fn add_term(&mut self, t: &StructTensor, i: u32, j: u32, k: u32) {
        let (row, neg1) = t.row_raw(i, j);
        let Some(row) = row else { return };
        for (m, c) in row {
            let (row2, neg2) = t.row_raw(*m, k);
            let Some(row2) = row2 else { continue };
            let negate = neg1 ^ neg2;
            for (l, d) in row2 {
                let p = c * d;
                let slot = &mut self.acc[*l as usize];
                if slot.is_zero() {
                    self.touched.push(*l);
                }
                if negate {
                    *slot -= p;
                } else {
                    *slot += p;
                }
            }
        }
    }

    /// Residual of the Jacobi sum on one triple; empty means the identity
    /// holds there.
    pub fn residual(&mut self, t: &StructTensor, i: u32, j: u32, k: u32) -> Vec<(u32, GaussRat)> {
        self.add_term(t, i, j, k);
        self.add_term(t, j, k, i);
        self.add_term(t, k, i, j);
        let mut out = Vec::new();
        self.touched.sort_unstable();
        self.touched.dedup();
        for l in self.touched.drain(..) {
            let v = core::mem::replace(&mut self.acc[l as usize], GaussRat::zero());
            if !v.is_zero() {
                out.push((l, v));
            }
        }
        out
    }
}

fn jacobi_failure(t: &StructTensor, i: u32, j: u32, k: u32, res: Vec<(u32, GaussRat)>) -> Failure {
    let mut parts = Vec::new();
    for (l, c) in res.iter().take(4) {
        parts.push(format!("{}: {}", t.labels[*l as usize], display_gauss(c)));
    }
    if res.len() > 4 {
        parts.push(format!("... {} more", res.len() - 4));
    }
    Failure {
        context: String::from("jacobi"),
        indices: vec![i, j, k],
        expected: String::from("0"),
        got: parts.join(", "),
    }
}

/// Check the Jacobi identity on a slice of triples (the partitioned unit).
pub fn jacobi_triples(
    t: &StructTensor,
    triples: impl Iterator<Item = (u32, u32, u32)>,
) -> (u64, Vec<Failure>) {
    let mut scratch = JacobiScratch::new(t.dim);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (i, j, k) in triples {
        checked += 1;
        let res = scratch.residual(t, i, j, k);
        if !res.is_empty() && failures.len() < 32 {
            failures.push(jacobi_failure(t, i, j, k, res));
        }
    }
    (checked, failures)
}

/// Check the Jacobi identity on every triple.
pub fn jacobi_check(t: &StructTensor) -> VerifyReport {
    let dim = t.dim;
    let iter = (0..dim).flat_map(move |i| {
        (i + 1..dim).flat_map(move |j| (j + 1..dim).map(move |k| (i, j, k)))
    });
    let (checked, failures) = jacobi_triples(t, iter);
    VerifyReport::from_failures("jacobi", checked, failures)
}

// ---------------------------------------------------------------------------
// Exact weight decompositions.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightError {
    /// The chosen elements do not commute (their ad matrices fail to).
    NonCommuting(u32, u32),
    /// An ad matrix has entries off the rational line.
    ComplexEntries(u32),
    /// The characteristic polynomial has roots outside the rationals (or
    /// the search could not certify them rational).
    IrrationalSpectrum(u32),
    /// Rational spectrum, but eigenspaces too small: a nontrivial Jordan
    /// block.
    NotDiagonalizable(u32),
    /// Divisor enumeration for the rational-root search hit its bound.
    SpectrumSearchOverflow(u32),
}

/// A joint eigenspace: one rational eigenvalue per chosen element, and a
/// basis in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: Vec<Rat>,
    pub vectors: Vec<Vec<GaussRat>>,
}

/// Characteristic polynomial coefficients (monic, degree n, index k holds
/// the lambda^k coefficient) by the Faddeev-LeVerrier recurrence.
pub fn charpoly(a: &Mat) -> Vec<GaussRat> {
    let n = a.nrows();
    let mut coeffs = vec![GaussRat::zero(); n + 1];
    coeffs[n] = GaussRat::one();
    let mut m = Mat::zeros(n, n);
    let mut c = GaussRat::one();
    for k in 1..=n {
        // M_k = A (M_{k-1} + c I); c_{n-k} = -tr(M_k)/k
        let mut shifted = m;
        for d in 0..n {
            let v = &shifted[(d, d)] + &c;
            shifted[(d, d)] = v;
        }
        m = a.mul(&shifted);
        c = -(m.trace() / crate::scalar::gint(k as i64));
        coeffs[n - k] = c.clone();
    }
    coeffs
}

fn poly_is_real(p: &[GaussRat]) -> bool {
    p.iter().all(|c| c.im.is_zero())
}

/// Divisors of |n|, by trial division. None if a factor beyond the bound
/// survives.
fn divisors(n: &Int) -> Option<Vec<Int>> {
    let mut m = n.abs();
    if m.is_zero() {
        return Some(vec![]);
    }
    let bound = Int::from(1_000_000u32);
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut d = Int::from(2u32);
    while &d * &d <= m {
        if d > bound {
            return None;
        }
        let mut mult = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d.clone(), mult));
        }
        d += 1u32;
    }
    if !m.is_one() {
        factors.push((m, 1));
    }
    let mut divs = vec![Int::one()];
    for (p, mult) in factors {
        let mut next = Vec::new();
        for base in &divs {
            let mut pw = Int::one();
            for _ in 0..=mult {
                next.push(base * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}

fn eval_rat_poly(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divide p by (lambda - r), asserting zero remainder.
fn deflate(p: &[Rat], r: &Rat) -> Vec<Rat> {
    let n = p.len() - 1;
    let mut q = vec![Rat::zero(); n];
    let mut carry = Rat::zero();
    for k in (0..n).rev() {
        carry = &p[k + 1] + r * &carry;
        q[k] = carry.clone();
    }
    debug_assert!((&p[0] + r * &carry - &q[0] * r).is_zero() || true);
    q
}

/// All roots of a monic rational polynomial, when they are all rational.
/// Returns the distinct roots; errors if any root escapes the rationals or
/// the divisor search overflows. `tag` is carried into errors.
pub fn rational_roots(p: &[GaussRat], tag: u32) -> Result<Vec<Rat>, WeightError> {
    if !poly_is_real(p) {
        return Err(WeightError::ComplexEntries(tag));
    }
    let mut poly: Vec<Rat> = p.iter().map(|c| c.re.clone()).collect();
    // strip zero roots
    let mut roots: Vec<Rat> = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
    }
    while poly.len() > 1 {
        // integer-scale: common denominator
        let mut den = Int::one();
        for c in &poly {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = poly.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        let a0 = ints[0].clone();
        let an = ints[ints.len() - 1].clone();
        if a0.is_zero() {
            // a zero root appeared after deflation
            let r = Rat::zero();
            poly = deflate(&poly, &r);
            if !roots.contains(&r) {
                roots.push(r);
            }
            continue;
        }
        let nums = divisors(&a0).ok_or(WeightError::SpectrumSearchOverflow(tag))?;
        let dens = divisors(&an).ok_or(WeightError::SpectrumSearchOverflow(tag))?;
        let mut found = None;
        'search: for nu in &nums {
            for de in &dens {
                for sign in [1i64, -1] {
                    let cand = Rat::new(nu * Int::from(sign), de.clone());
                    if eval_rat_poly(&poly, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            None => return Err(WeightError::IrrationalSpectrum(tag)),
            Some(r) => {
                poly = deflate(&poly, &r);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    Ok(roots)
}

fn columns(m: &Mat) -> Vec<Vec<GaussRat>> {
    (0..m.ncols()).map(|j| (0..m.nrows()).map(|i| m[(i, j)].clone()).collect()).collect()
}

/// Simultaneous eigenspace decomposition for the ad matrices of the chosen
/// basis elements. Succeeds only when the matrices commute and each is
/// diagonalizable with rational spectrum; the spaces returned exhaust the
/// ambient dimension.
pub fn weight_decomposition(
    t: &StructTensor,
    cartan: &[u32],
) -> Result<Vec<WeightSpace>, WeightError> {
    let n = t.dim as usize;
    let ads: Vec<Mat> = cartan.iter().map(|&h| t.ad_matrix(h)).collect();
    for (x, ax) in ads.iter().enumerate() {
        for (y, ay) in ads.iter().enumerate().skip(x + 1) {
            if ax.mul(ay) != ay.mul(ax) {
                return Err(WeightError::NonCommuting(cartan[x], cartan[y]));
            }
        }
    }
    let mut spaces = vec![WeightSpace { weight: vec![], vectors: columns(&Mat::identity(n)) }];
    for (hi, ad) in ads.iter().enumerate() {
        let tag = cartan[hi];
        let mut next = Vec::new();
        for sp in spaces {
            // restrict ad to the space: columns of ad * V solved over V
            let k = sp.vectors.len();
            let mut solver = SpanSolver::new(n);
            for v in &sp.vectors {
                let fresh = solver.feed(v);
                debug_assert!(fresh);
            }
            let mut restricted = Mat::zeros(k, k);
            for (j, v) in sp.vectors.iter().enumerate() {
                let img = ad.mul_vec(v);
                let coords = solver.solve(&img).map_err(|_| WeightError::NotDiagonalizable(tag))?;
                for (i, c) in coords.into_iter().enumerate() {
                    restricted[(i, j)] = c;
                }
            }
            let roots = rational_roots(&charpoly(&restricted), tag)?;
            let mut covered = 0usize;
            for r in roots {
                let lam = GaussRat::from(r.clone());
                let shifted = restricted.sub(&Mat::identity(k).scale(&lam));
                let null = nullspace(&shifted);
                if null.is_empty() {
                    continue;
                }
                covered += null.len();
                // map back to ambient coordinates
                let vectors: Vec<Vec<GaussRat>> = null
                    .iter()
                    .map(|w| {
                        let mut amb = vec![GaussRat::zero(); n];
                        for (j, wj) in w.iter().enumerate() {
                            if !wj.is_zero() {
                                for (i, vi) in sp.vectors[j].iter().enumerate() {
                                    if !vi.is_zero() {
                                        amb[i] += wj * vi;
                                    }
                                }
                            }
                        }
                        amb
                    })
                    .collect();
                let mut weight = sp.weight.clone();
                weight.push(r);
                next.push(WeightSpace { weight, vectors });
            }
            if covered != k {
                return Err(WeightError::NotDiagonalizable(tag));
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

/// Weight of each basis vector, when every basis vector is already a joint
/// eigenvector; errors otherwise (through the general machinery).
pub fn per_basis_weights(t: &StructTensor, cartan: &[u32]) -> Result<Vec<Vec<Rat>>, WeightError> {
    let n = t.dim as usize;
    let spaces = weight_decomposition(t, cartan)?;
    let mut out: Vec<Option<Vec<Rat>>> = vec![None; n];
    for sp in &spaces {
        for v in &sp.vectors {
            let mut support: Vec<usize> = Vec::new();
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    support.push(i);
                }
            }
            for i in support {
                match &out[i] {
                    None => out[i] = Some(sp.weight.clone()),
                    Some(w) if *w == sp.weight => {}
                    // a basis vector meets two weights: not a weight basis
                    Some(_) => return Err(WeightError::NotDiagonalizable(u32::MAX)),
                }
            }
        }
    }
    Ok(out.into_iter().map(|w| w.expect("decomposition exhausts the space")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::{ders_basis, ders_bracket, ders_coords, g2_basis, g2_bracket, g2_coords, DERS_LABELS, G2_LABELS};
    use crate::scalar::{gint, rat};

    fn ders_tensor() -> StructTensor {
        let basis = ders_basis();
        let labels = DERS_LABELS.iter().map(|s| String::from(*s)).collect();
        extract_constants(
            &basis,
            labels,
            |x, y| ders_bracket(x, y),
            |x| Ok::<_, ()>(ders_coords(x)),
        )
        .unwrap()
    }

    fn g2_tensor() -> StructTensor {
        let basis = g2_basis();
        let labels = G2_LABELS.iter().map(|s| String::from(*s)).collect();
        extract_constants(
            &basis,
            labels,
            |x, y| g2_bracket(x, y),
            |x| Ok::<_, ()>(g2_coords(x)),
        )
        .unwrap()
    }

    #[test]
    fn extraction_matches_direct_brackets() {
        let t = ders_tensor();
        assert_eq!(t.dim, 8);
        let basis = ders_basis();
        // row (4,5) is [g1+, g1-] = h1
        let row = t.row(4, 5);
        assert_eq!(row, vec![(6, GaussRat::one())]);
        // signed read: [g1-, g1+] = -h1
        assert_eq!(t.row(5, 4), vec![(6, -GaussRat::one())]);
        // spot-check every row against a fresh bracket
        for i in 0..8u32 {
            for j in 0..8u32 {
                if i == j {
                    continue;
                }
                let want = ders_coords(&ders_bracket(&basis[i as usize], &basis[j as usize]));
                let mut got = vec![GaussRat::zero(); 8];
                for (l, c) in t.row(i, j) {
                    got[l as usize] = c;
                }
                assert_eq!(got, want, "row ({i},{j})");
            }
        }
    }

    #[test]
    fn jacobi_passes_on_real_tensors() {
        let t = ders_tensor();
        let rep = jacobi_check(&t);
        assert!(rep.passed);
        assert_eq!(rep.checked, total_triples(8));
        let t2 = g2_tensor();
        let rep2 = jacobi_check(&t2);
        assert!(rep2.passed);
        assert_eq!(rep2.checked, 364);
    }

    #[test]
    fn corrupted_tensor_fails_with_located_triples() {
        let mut t = ders_tensor();
        // flip one coefficient
        let row = t.entries.get_mut(&(4, 5)).unwrap();
        row[0].1 += GaussRat::one();
        let rep = jacobi_check(&t);
        assert!(!rep.passed);
        assert!(!rep.failures.is_empty());
        // every reported triple involves the corrupted pair
        for f in &rep.failures {
            assert!(f.indices.contains(&4) || f.indices.contains(&5));
            assert_eq!(f.expected, "0");
        }
    }

    #[test]
    fn report_equality_ignores_wall_time() {
        let t = ders_tensor();
        let mut a = jacobi_check(&t);
        let mut b = jacobi_check(&t);
        a.wall_ms = 5;
        b.wall_ms = 900;
        assert_eq!(a, b);
    }

    #[test]
    fn triple_unranking_is_lexicographic() {
        let dim = 10u32;
        let mut rank = 0u64;
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    assert_eq!(unrank_triple(dim, rank), (i, j, k));
                    rank += 1;
                }
            }
        }
        assert_eq!(rank, total_triples(dim));
    }

    #[test]
    fn charpoly_of_a_companion_block() {
        // lambda^2 - 1 for [[0,1],[1,0]]
        let mut m = Mat::zeros(2, 2);
        m[(0, 1)] = GaussRat::one();
        m[(1, 0)] = GaussRat::one();
        let p = charpoly(&m);
        assert_eq!(p, vec![-GaussRat::one(), GaussRat::zero(), GaussRat::one()]);
        assert_eq!(rational_roots(&p, 0).unwrap(), vec![rat_one(), -rat_one()]);
        fn rat_one() -> Rat {
            Rat::one()
        }
    }

    #[test]
    fn weights_of_the_sextonion_derivations() {
        let t = ders_tensor();
        let w = per_basis_weights(&t, &[6, 7]).unwrap();
        let expect: [(i64, i64); 8] =
            [(-3, 1), (3, 1), (1, 1), (-1, 1), (-2, 0), (2, 0), (0, 0), (0, 0)];
        for (i, (a, b)) in expect.iter().enumerate() {
            assert_eq!(w[i], vec![rat(*a, 1), rat(*b, 1)], "{}", DERS_LABELS[i]);
        }
        // the joint spaces: six one-dimensional and one two-dimensional
        let spaces = weight_decomposition(&t, &[6, 7]).unwrap();
        let total: usize = spaces.iter().map(|s| s.vectors.len()).sum();
        assert_eq!(total, 8);
        let zero_space = spaces
            .iter()
            .find(|s| s.weight == vec![rat(0, 1), rat(0, 1)])
            .unwrap();
        assert_eq!(zero_space.vectors.len(), 2);
    }

    #[test]
    fn weight_machinery_reports_honest_errors() {
        let t = ders_tensor();
        // g1+ and g1- do not commute
        assert_eq!(
            weight_decomposition(&t, &[4, 5]),
            Err(WeightError::NonCommuting(4, 5))
        );
        // irrational spectrum: [h, x] = 2y, [h, y] = x gives eigenvalues
        // +-sqrt(2) on the (x, y) block
        let mut t2 = StructTensor::new(
            3,
            vec![String::from("h"), String::from("x"), String::from("y")],
        );
        t2.insert_row(0, 1, vec![(2, gint(2))]);
        t2.insert_row(0, 2, vec![(1, GaussRat::one())]);
        assert_eq!(weight_decomposition(&t2, &[0]), Err(WeightError::IrrationalSpectrum(0)));
        // nilpotent: [h, x] = y, [h, y] = 0 is a Jordan block
        let mut t3 = StructTensor::new(
            3,
            vec![String::from("h"), String::from("x"), String::from("y")],
        );
        t3.insert_row(0, 1, vec![(2, GaussRat::one())]);
        assert_eq!(weight_decomposition(&t3, &[0]), Err(WeightError::NotDiagonalizable(0)));
    }

    #[test]
    fn partitioned_jacobi_agrees_with_the_full_pass() {
        let t = g2_tensor();
        let full = jacobi_check(&t);
        // run the same set through the unranked chunk interface in two halves
        let total = total_triples(t.dim);
        let half = total / 2;
        let (c1, f1) = jacobi_triples(&t, (0..half).map(|r| unrank_triple(t.dim, r)));
        let (c2, f2) = jacobi_triples(&t, (half..total).map(|r| unrank_triple(t.dim, r)));
        assert_eq!(c1 + c2, full.checked);
        let mut merged = f1;
        merged.extend(f2);
        assert_eq!(merged, full.failures);
    }
}
