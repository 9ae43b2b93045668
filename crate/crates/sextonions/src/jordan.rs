//! Rank-3 Jordan algebras: 3x3 Hermitian matrices over a composition algebra
//! of dimension n in {1, 2, 4, 6, 8}, with the symmetrized product
//! x . y = (xy + yx)/2.
//!
//! Every composition algebra is realized inside the Zorn octonions, so one
//! multiplication routine serves all five cases:
//! n=1 is the span of the unit, n=2 is span{rho+, rho-}, n=4 is
//! span{rho+, rho-, eps1+, eps1-}, n=6 the sextonions, n=8 everything.
//! Off-diagonal products are therefore genuine octonion products for n >= 4;
//! nothing is special-cased on associativity. Subalgebra closure of each
//! product is asserted, never assumed.
//!
//! Flat coordinates order the entries (d1, d2, d3, o12..., o23..., o31...),
//! with each off-diagonal composition element in its Zorn coordinate order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::linalg::{Mat, SpanSolver};
use crate::octonion::{ZornOct, OCT_LABELS};
use crate::scalar::{grat, gzero, random_gauss, GaussRat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordanError {
    UnsupportedN(u8),
    NotInSubalgebra,
}

pub const VALID_N: [u8; 5] = [1, 2, 4, 6, 8];

pub fn valid_n(n: u8) -> bool {
    VALID_N.contains(&n)
}

/// Flat dimension 3(n + 1).
pub fn dim(n: u8) -> usize {
    assert!(valid_n(n), "unsupported composition dimension {n}");
    3 * (n as usize + 1)
}

/// Indices into the global octonion coordinate order spanning the
/// n-dimensional composition subalgebra (n >= 2).
fn comp_indices(n: u8) -> &'static [usize] {
    match n {
        2 => &[0, 1],
        4 => &[0, 1, 2, 3],
        6 => &[0, 1, 2, 3, 4, 7],
        8 => &[0, 1, 2, 3, 4, 5, 6, 7],
        _ => unreachable!(),
    }
}

/// Membership test for the composition subalgebra of dimension n.
pub fn comp_contains(n: u8, x: &ZornOct) -> bool {
    match n {
        1 => {
            x.aplus == x.aminus
                && x.vplus.iter().all(|z| z.is_zero())
                && x.vminus.iter().all(|z| z.is_zero())
        }
        2 => x.vplus.iter().all(|z| z.is_zero()) && x.vminus.iter().all(|z| z.is_zero()),
        4 => {
            x.vplus[1].is_zero()
                && x.vplus[2].is_zero()
                && x.vminus[1].is_zero()
                && x.vminus[2].is_zero()
        }
        6 => x.is_sextonion(),
        8 => true,
        _ => false,
    }
}

/// Coordinates of a subalgebra element (length n).
pub fn comp_coords(n: u8, x: &ZornOct) -> Vec<GaussRat> {
    debug_assert!(comp_contains(n, x));
    if n == 1 {
        return vec![x.aplus.clone()];
    }
    let all = x.coords();
    comp_indices(n).iter().map(|&i| all[i].clone()).collect()
}

pub fn comp_from_coords(n: u8, c: &[GaussRat]) -> ZornOct {
    assert_eq!(c.len(), n as usize);
    if n == 1 {
        return ZornOct::one().scale(&c[0]);
    }
    let mut all = [gzero(), gzero(), gzero(), gzero(), gzero(), gzero(), gzero(), gzero()];
    for (slot, &i) in comp_indices(n).iter().enumerate() {
        all[i] = c[slot].clone();
    }
    ZornOct::from_coords(&all)
}

/// Coordinate unit vectors of the subalgebra.
pub fn comp_unit(n: u8, i: usize) -> ZornOct {
    let mut c = vec![gzero(); n as usize];
    c[i] = GaussRat::one();
    comp_from_coords(n, &c)
}

fn comp_labels(n: u8) -> Vec<String> {
    if n == 1 {
        return vec![String::new()];
    }
    comp_indices(n).iter().map(|&i| String::from(OCT_LABELS[i])).collect()
}

fn random_comp(n: u8, rng: &mut impl Rng) -> ZornOct {
    let c: Vec<GaussRat> = (0..n).map(|_| random_gauss(rng)).collect();
    comp_from_coords(n, &c)
}

/// Hermitian 3x3 element: diagonal scalars d1..d3 and the off-diagonal
/// entries o = [x12, x23, x31]; the mirrored entries are their conjugates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanElem {
    pub n: u8,
    pub d: [GaussRat; 3],
    pub o: [ZornOct; 3],
}

impl JordanElem {
    pub fn new(n: u8, d: [GaussRat; 3], o: [ZornOct; 3]) -> Result<Self, JordanError> {
        if !valid_n(n) {
            return Err(JordanError::UnsupportedN(n));
        }
        if !o.iter().all(|x| comp_contains(n, x)) {
            return Err(JordanError::NotInSubalgebra);
        }
        Ok(JordanElem { n, d, o })
    }

    pub fn zero(n: u8) -> Self {
        assert!(valid_n(n));
        JordanElem { n, d: [gzero(), gzero(), gzero()], o: [ZornOct::zero(), ZornOct::zero(), ZornOct::zero()] }
    }

    pub fn identity(n: u8) -> Self {
        let mut x = JordanElem::zero(n);
        x.d = [GaussRat::one(), GaussRat::one(), GaussRat::one()];
        x
    }

    pub fn diag(n: u8, d: [GaussRat; 3]) -> Self {
        JordanElem { d, ..JordanElem::zero(n) }
    }

    /// Element with a single off-diagonal slot set (slot 0 = x12, 1 = x23,
    /// 2 = x31).
    pub fn off(n: u8, slot: usize, value: ZornOct) -> Result<Self, JordanError> {
        let mut x = JordanElem::zero(n);
        if !comp_contains(n, &value) {
            return Err(JordanError::NotInSubalgebra);
        }
        x.o[slot] = value;
        Ok(x)
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|z| z.is_zero()) && self.o.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, y: &JordanElem) -> JordanElem {
        assert_eq!(self.n, y.n, "mixed composition dimensions");
        JordanElem {
            n: self.n,
            d: [&self.d[0] + &y.d[0], &self.d[1] + &y.d[1], &self.d[2] + &y.d[2]],
            o: [self.o[0].add(&y.o[0]), self.o[1].add(&y.o[1]), self.o[2].add(&y.o[2])],
        }
    }

    pub fn sub(&self, y: &JordanElem) -> JordanElem {
        self.add(&y.neg())
    }

    pub fn neg(&self) -> JordanElem {
        self.scale(&-GaussRat::one())
    }

    pub fn scale(&self, c: &GaussRat) -> JordanElem {
        JordanElem {
            n: self.n,
            d: [c * &self.d[0], c * &self.d[1], c * &self.d[2]],
            o: [self.o[0].scale(c), self.o[1].scale(c), self.o[2].scale(c)],
        }
    }

    pub fn flat(&self) -> Vec<GaussRat> {
        let mut v = Vec::with_capacity(dim(self.n));
        v.extend(self.d.iter().cloned());
        for x in &self.o {
            v.extend(comp_coords(self.n, x));
        }
        v
    }

    pub fn from_flat(n: u8, v: &[GaussRat]) -> JordanElem {
        assert_eq!(v.len(), dim(n));
        let nn = n as usize;
        JordanElem {
            n,
            d: [v[0].clone(), v[1].clone(), v[2].clone()],
            o: [
                comp_from_coords(n, &v[3..3 + nn]),
                comp_from_coords(n, &v[3 + nn..3 + 2 * nn]),
                comp_from_coords(n, &v[3 + 2 * nn..3 + 3 * nn]),
            ],
        }
    }

    pub fn random(n: u8, rng: &mut impl Rng) -> JordanElem {
        JordanElem {
            n,
            d: [random_gauss(rng), random_gauss(rng), random_gauss(rng)],
            o: [random_comp(n, rng), random_comp(n, rng), random_comp(n, rng)],
        }
    }

    /// Full 3x3 matrix of octonion entries (diagonal embedded as scalar
    /// multiples of the unit).
    fn mat3(&self) -> [[ZornOct; 3]; 3] {
        let u = ZornOct::one();
        [
            [u.scale(&self.d[0]), self.o[0].clone(), self.o[2].conj()],
            [self.o[0].conj(), u.scale(&self.d[1]), self.o[1].clone()],
            [self.o[2].clone(), self.o[1].conj(), u.scale(&self.d[2])],
        ]
    }
}

/// Basis in flat-coordinate order, with labels.
pub fn basis(n: u8) -> Vec<JordanElem> {
    let mut out = Vec::with_capacity(dim(n));
    for i in 0..3 {
        let mut x = JordanElem::zero(n);
        x.d[i] = GaussRat::one();
        out.push(x);
    }
    for slot in 0..3 {
        for i in 0..n as usize {
            out.push(JordanElem::off(n, slot, comp_unit(n, i)).unwrap());
        }
    }
    out
}

pub fn basis_labels(n: u8) -> Vec<String> {
    let mut out = vec![String::from("d1"), String::from("d2"), String::from("d3")];
    let comp = comp_labels(n);
    for slot in ["o12", "o23", "o31"] {
        for c in &comp {
            if c.is_empty() {
                out.push(String::from(slot));
            } else {
                out.push(format!("{slot}.{c}"));
            }
        }
    }
    out
}

/// Basis of the trace-zero subspace: d1 - d3, d2 - d3 and every off-diagonal
/// unit.
pub fn traceless_basis(n: u8) -> Vec<JordanElem> {
    let mut out = Vec::with_capacity(dim(n) - 1);
    for i in 0..2 {
        let mut x = JordanElem::zero(n);
        x.d[i] = GaussRat::one();
        x.d[2] = -GaussRat::one();
        out.push(x);
    }
    out.extend(basis(n).into_iter().skip(3));
    out
}

pub fn traceless_labels(n: u8) -> Vec<String> {
    let mut out = vec![String::from("d1-d3"), String::from("d2-d3")];
    out.extend(basis_labels(n).into_iter().skip(3));
    out
}

/// The Jordan product (xy + yx)/2, computed entrywise on the full octonion
/// matrices. Panics if the operands carry different n; asserts that the
/// result is Hermitian with scalar diagonal and entries inside the
/// composition subalgebra.
pub fn jmul(x: &JordanElem, y: &JordanElem) -> JordanElem {
    assert_eq!(x.n, y.n, "mixed composition dimensions");
    let (xm, ym) = (x.mat3(), y.mat3());
    let half = grat(1, 2);
    let entry = |i: usize, j: usize| {
        let mut s = ZornOct::zero();
        for k in 0..3 {
            s = s.add(&xm[i][k].mul(&ym[k][j]));
            s = s.add(&ym[i][k].mul(&xm[k][j]));
        }
        s.scale(&half)
    };
    let mut d = [gzero(), gzero(), gzero()];
    for (i, di) in d.iter_mut().enumerate() {
        let e = entry(i, i);
        assert!(
            e.aplus == e.aminus
                && e.vplus.iter().all(|z| z.is_zero())
                && e.vminus.iter().all(|z| z.is_zero()),
            "diagonal of a symmetrized product must be scalar"
        );
        *di = e.aplus;
    }
    let o = [entry(0, 1), entry(1, 2), entry(2, 0)];
    debug_assert!(entry(1, 0) == o[0].conj() && entry(2, 1) == o[1].conj() && entry(0, 2) == o[2].conj());
    for e in &o {
        assert!(comp_contains(x.n, e), "product left the composition subalgebra");
    }
    JordanElem { n: x.n, d, o }
}

pub fn jtrace(x: &JordanElem) -> GaussRat {
    &x.d[0] + &x.d[1] + &x.d[2]
}

/// Trace bilinear form t(x . y), in closed form: the diagonal pairing plus
/// the polarized composition norm of each off-diagonal slot.
pub fn tform(x: &JordanElem, y: &JordanElem) -> GaussRat {
    assert_eq!(x.n, y.n, "mixed composition dimensions");
    let mut t = gzero();
    for i in 0..3 {
        t += &x.d[i] * &y.d[i];
    }
    for s in 0..3 {
        let (a, b) = (&x.o[s], &y.o[s]);
        t += &a.aplus * &b.aminus + &b.aplus * &a.aminus;
        for k in 0..3 {
            t += &a.vplus[k] * &b.vminus[k] + &b.vplus[k] * &a.vminus[k];
        }
    }
    t
}

/// Gram matrix of tform over the flat basis. Nondegenerate for
/// n in {1, 2, 4, 8}; at n = 6 it picks up the norm radical of the
/// sextonions (rank 15 of 21).
pub fn tform_gram(n: u8) -> Mat {
    let b = basis(n);
    Mat::from_fn(b.len(), b.len(), |i, j| tform(&b[i], &b[j]))
}

/// Freudenthal adjoint: x# = x.x - t(x) x - (t(x.x) - t(x)^2)/2 I.
/// Satisfies x# . x = det-like scalar times the identity (the cubic
/// identity), and doubles the classical adjugate for n = 1.
pub fn sharp(x: &JordanElem) -> JordanElem {
    let x2 = jmul(x, x);
    let tx = jtrace(x);
    let c = (jtrace(&x2) - &tx * &tx) * grat(1, 2);
    x2.sub(&x.scale(&tx)).sub(&JordanElem::identity(x.n).scale(&c))
}

/// Linearization x # y = (x + y)# - x# - y#, in closed bilinear form.
pub fn sharp_lin(x: &JordanElem, y: &JordanElem) -> JordanElem {
    let xy = jmul(x, y);
    let (tx, ty) = (jtrace(x), jtrace(y));
    let c = tform(x, y) - &tx * &ty;
    xy.scale(&crate::scalar::gint(2))
        .sub(&y.scale(&tx))
        .sub(&x.scale(&ty))
        .sub(&JordanElem::identity(x.n).scale(&c))
}

/// Does x# . x = (1/3) t(x#, x) I hold? (It always should; exposed as a
/// checkable predicate.)
pub fn cubic_identity_holds(x: &JordanElem) -> bool {
    let xs = sharp(x);
    let lhs = jmul(&xs, x);
    let c = tform(&xs, x) * grat(1, 3);
    lhs == JordanElem::identity(x.n).scale(&c)
}

/// Linear operator on the flat coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JOp {
    pub n: u8,
    pub m: Mat,
}

impl JOp {
    pub fn zero(n: u8) -> Self {
        JOp { n, m: Mat::zeros(dim(n), dim(n)) }
    }

    pub fn identity(n: u8) -> Self {
        JOp { n, m: Mat::identity(dim(n)) }
    }

    pub fn add(&self, o: &JOp) -> JOp {
        assert_eq!(self.n, o.n);
        JOp { n: self.n, m: self.m.add(&o.m) }
    }

    pub fn sub(&self, o: &JOp) -> JOp {
        assert_eq!(self.n, o.n);
        JOp { n: self.n, m: self.m.sub(&o.m) }
    }

    pub fn neg(&self) -> JOp {
        JOp { n: self.n, m: self.m.neg() }
    }

    pub fn scale(&self, c: &GaussRat) -> JOp {
        JOp { n: self.n, m: self.m.scale(c) }
    }

    pub fn compose(&self, o: &JOp) -> JOp {
        assert_eq!(self.n, o.n);
        JOp { n: self.n, m: self.m.mul(&o.m) }
    }

    pub fn commutator(&self, o: &JOp) -> JOp {
        assert_eq!(self.n, o.n);
        JOp { n: self.n, m: self.m.commutator(&o.m) }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn apply(&self, x: &JordanElem) -> JordanElem {
        assert_eq!(self.n, x.n);
        JordanElem::from_flat(self.n, &self.m.mul_vec(&x.flat()))
    }
}

/// Left-multiplication operator L_x as a matrix on flat coordinates.
pub fn lop(x: &JordanElem) -> JOp {
    let b = basis(x.n);
    let d = dim(x.n);
    let mut m = Mat::zeros(d, d);
    for (j, bj) in b.iter().enumerate() {
        let col = jmul(x, bj).flat();
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m[(i, j)] = v;
            }
        }
    }
    JOp { n: x.n, m }
}

/// Inner derivation [L_x, L_y].
pub fn fder(x: &JordanElem, y: &JordanElem) -> JOp {
    assert_eq!(x.n, y.n, "mixed composition dimensions");
    lop(x).commutator(&lop(y))
}

/// Precomputed per-n tables: basis, L-matrices of the basis, trace-form Gram.
/// Everything downstream that builds many operators goes through this.
pub struct JordanSpace {
    pub n: u8,
    pub dim: usize,
    pub basis: Vec<JordanElem>,
    pub labels: Vec<String>,
    lmats: Vec<Mat>,
    pub gram: Mat,
}

impl JordanSpace {
    pub fn new(n: u8) -> Self {
        assert!(valid_n(n), "unsupported composition dimension {n}");
        let b = basis(n);
        let lmats: Vec<Mat> = b.iter().map(|x| lop(x).m).collect();
        JordanSpace {
            n,
            dim: dim(n),
            labels: basis_labels(n),
            gram: tform_gram(n),
            basis: b,
            lmats,
        }
    }

    /// L_x assembled by linearity from the cached basis operators.
    pub fn lop(&self, x: &JordanElem) -> JOp {
        assert_eq!(self.n, x.n);
        let mut m = Mat::zeros(self.dim, self.dim);
        for (c, lb) in x.flat().iter().zip(&self.lmats) {
            m.add_scaled(c, lb);
        }
        JOp { n: self.n, m }
    }

    pub fn fder(&self, x: &JordanElem, y: &JordanElem) -> JOp {
        self.lop(x).commutator(&self.lop(y))
    }

    /// Greedy basis of span{[L_bi, L_bj] : i < j} in pair-lexicographic
    /// order, with labels.
    pub fn der_span(&self) -> (Vec<JOp>, Vec<String>) {
        let mut solver = SpanSolver::new(self.dim * self.dim);
        let mut ops = Vec::new();
        let mut labels = Vec::new();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let f = JOp { n: self.n, m: self.lmats[i].commutator(&self.lmats[j]) };
                if !f.is_zero() && solver.feed(&f.m.flatten()) {
                    labels.push(format!("F[{}|{}]", self.labels[i], self.labels[j]));
                    ops.push(f);
                }
            }
        }
        (ops, labels)
    }

    /// Greedy basis of the reduced structure algebra
    /// der + {L_x : t(x) = 0}: the derivation basis followed by the
    /// independent traceless L's.
    pub fn g0_span(&self) -> (Vec<JOp>, Vec<String>) {
        let (ops, labels, _) = self.g0_span_split();
        (ops, labels)
    }

    /// Like `g0_span`, also reporting how many leading elements are inner
    /// derivations (the rest are multiplication operators).
    pub fn g0_span_split(&self) -> (Vec<JOp>, Vec<String>, usize) {
        let (mut ops, mut labels) = self.der_span();
        let der_len = ops.len();
        let mut solver = SpanSolver::new(self.dim * self.dim);
        for f in &ops {
            solver.feed(&f.m.flatten());
        }
        for (x, l) in traceless_basis(self.n).iter().zip(traceless_labels(self.n)) {
            let lx = self.lop(x);
            if solver.feed(&lx.m.flatten()) {
                labels.push(format!("L[{l}]"));
                ops.push(lx);
            }
        }
        (ops, labels, der_len)
    }

    /// Cached multiplication matrices of the flat basis.
    pub fn lbasis(&self) -> &[Mat] {
        &self.lmats
    }

    /// Dimension of the full derivation algebra: all operators D obeying
    /// the Leibniz rule D(x.y) = D(x).y + x.D(y), cut out as the solution
    /// space of the rule on basis pairs. Agrees with the commutator span
    /// when the trace form is nondegenerate; at n = 6 one derivation is
    /// outer and this space is one dimension larger than the span.
    pub fn full_der_dim(&self) -> usize {
        let d = self.dim;
        let mut solver = SpanSolver::new(d * d);
        let mut rank = 0usize;
        // Unknown D laid out row-major: D[r'][c] at slot r'*d + c. The
        // pair (i, j) with output coordinate r constrains
        //   sum_k (bi.bj)_k D[r][k] - sum_s (bs.bj)_r D[s][i]
        //                          - sum_s (bi.bs)_r D[s][j] = 0,
        // with every product read off the cached L-matrices.
        for i in 0..d {
            for j in i..d {
                for r in 0..d {
                    let mut row = vec![gzero(); d * d];
                    for k in 0..d {
                        let c = &self.lmats[i][(k, j)];
                        if !c.is_zero() {
                            row[r * d + k] += c;
                        }
                    }
                    for s in 0..d {
                        let c = &self.lmats[s][(r, j)];
                        if !c.is_zero() {
                            row[s * d + i] -= c;
                        }
                        let c = &self.lmats[i][(r, s)];
                        if !c.is_zero() {
                            row[s * d + j] -= c;
                        }
                    }
                    if solver.feed(&row) {
                        rank += 1;
                    }
                }
            }
        }
        d * d - rank
    }
}

/// Basis of the inner-derivation span (see `JordanSpace::der_span`).
pub fn der_span(n: u8) -> Vec<JOp> {
    JordanSpace::new(n).der_span().0
}

/// Basis of the reduced structure algebra (see `JordanSpace::g0_span`).
pub fn g0_span(n: u8) -> Vec<JOp> {
    JordanSpace::new(n).g0_span().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gint, rat_int};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for &n in &VALID_N {
            let x = JordanElem::random(n, &mut rng);
            assert_eq!(jmul(&JordanElem::identity(n), &x), x);
            assert_eq!(jmul(&x, &JordanElem::identity(n)), x);
        }
    }

    #[test]
    fn diagonal_times_diagonal() {
        let x = JordanElem::diag(1, [gint(1), gint(2), gint(3)]);
        let y = JordanElem::diag(1, [gint(4), gint(5), gint(6)]);
        assert_eq!(jmul(&x, &y), JordanElem::diag(1, [gint(4), gint(10), gint(18)]));
    }

    #[test]
    fn off_diagonal_product_lands_in_the_third_slot() {
        // x12 = eps1+, y23 = eps2+: the symmetrized product has its whole
        // content in the 31 slot, value -(1/2) eps3- (the (1,3) entry is
        // (1/2) eps1+ eps2+ = (1/2) eps3-, stored conjugated).
        let x = JordanElem::off(8, 0, ZornOct::eps_plus(1)).unwrap();
        let y = JordanElem::off(8, 1, ZornOct::eps_plus(2)).unwrap();
        let p = jmul(&x, &y);
        let expect =
            JordanElem::off(8, 2, ZornOct::eps_minus(3).scale(&grat(-1, 2))).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn jordan_identity_samples() {
        // (x.y).(x.x) = x.(y.(x.x)) for all five n.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for &n in &VALID_N {
            for _ in 0..8 {
                let x = JordanElem::random(n, &mut rng);
                let y = JordanElem::random(n, &mut rng);
                let x2 = jmul(&x, &x);
                assert_eq!(jmul(&jmul(&x, &y), &x2), jmul(&x, &jmul(&y, &x2)));
            }
        }
    }

    #[test]
    fn tform_agrees_with_trace_of_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for &n in &VALID_N {
            for _ in 0..6 {
                let x = JordanElem::random(n, &mut rng);
                let y = JordanElem::random(n, &mut rng);
                assert_eq!(tform(&x, &y), jtrace(&jmul(&x, &y)));
            }
        }
        assert_eq!(tform(&JordanElem::identity(8), &JordanElem::identity(8)), gint(3));
    }

    #[test]
    fn sharp_of_a_diagonal_is_the_adjugate() {
        let x = JordanElem::diag(1, [gint(1), gint(2), gint(3)]);
        assert_eq!(sharp(&x), JordanElem::diag(1, [gint(6), gint(3), gint(2)]));
        let i = JordanElem::identity(1);
        assert_eq!(sharp(&i), i);
    }

    #[test]
    fn sharp_lin_is_the_polarization() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for &n in &VALID_N {
            for _ in 0..6 {
                let x = JordanElem::random(n, &mut rng);
                let y = JordanElem::random(n, &mut rng);
                let pol = sharp(&x.add(&y)).sub(&sharp(&x)).sub(&sharp(&y));
                assert_eq!(sharp_lin(&x, &y), pol);
                assert_eq!(sharp_lin(&y, &x), pol);
            }
        }
        let i = JordanElem::identity(2);
        assert_eq!(sharp_lin(&i, &i), i.scale(&gint(2)));
    }

    #[test]
    fn cubic_identity_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for &n in &VALID_N {
            for _ in 0..10 {
                assert!(cubic_identity_holds(&JordanElem::random(n, &mut rng)));
            }
        }
    }

    #[test]
    fn lop_is_linear_in_x_and_space_cache_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for &n in &[1u8, 4] {
            let js = JordanSpace::new(n);
            let x = JordanElem::random(n, &mut rng);
            assert_eq!(js.lop(&x), lop(&x));
            assert_eq!(lop(&JordanElem::identity(n)), JOp::identity(n));
        }
    }

    #[test]
    fn fder_kills_the_identity_and_derives_the_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &n in &VALID_N {
            let x = JordanElem::random(n, &mut rng);
            let y = JordanElem::random(n, &mut rng);
            let f = fder(&x, &y);
            assert!(f.apply(&JordanElem::identity(n)).is_zero());
            let (u, v) = (JordanElem::random(n, &mut rng), JordanElem::random(n, &mut rng));
            let lhs = f.apply(&jmul(&u, &v));
            let rhs = jmul(&f.apply(&u), &v).add(&jmul(&u, &f.apply(&v)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn operator_adjointness_under_the_trace_form() {
        // L_x is self-adjoint, [L_x, L_y] skew-adjoint, w.r.t. the Gram.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for &n in &[2u8, 8] {
            let js = JordanSpace::new(n);
            let x = JordanElem::random(n, &mut rng);
            let y = JordanElem::random(n, &mut rng);
            let l = js.lop(&x).m;
            assert_eq!(js.gram.mul(&l), l.transpose().mul(&js.gram));
            let f = js.fder(&x, &y).m;
            assert_eq!(js.gram.mul(&f), f.transpose().mul(&js.gram).neg());
        }
    }

    #[test]
    fn trace_gram_rank_and_inertia() {
        for (n, expect) in [(1, (6, 0, 0)), (2, (6, 3, 0)), (4, (9, 6, 0))] {
            assert_eq!(crate::linalg::inertia(&tform_gram(n)).unwrap(), expect);
        }
        // n = 6: the sextonion norm radical degenerates the form; recorded,
        // not assumed away.
        assert_eq!(crate::linalg::inertia(&tform_gram(6)).unwrap(), (9, 6, 6));
        assert_eq!(crate::linalg::inertia(&tform_gram(8)).unwrap(), (15, 12, 0));
    }

    #[test]
    fn small_span_ranks() {
        let js1 = JordanSpace::new(1);
        assert_eq!(js1.der_span().0.len(), 3);
        assert_eq!(js1.g0_span().0.len(), 8);
        assert_eq!(js1.full_der_dim(), 3);
        let js2 = JordanSpace::new(2);
        assert_eq!(js2.der_span().0.len(), 8);
        assert_eq!(js2.g0_span().0.len(), 16);
        assert_eq!(js2.full_der_dim(), 8);
    }

    #[test]
    fn sextonionic_jordan_algebra_has_one_outer_derivation() {
        // Every derivation of the nondegenerate algebras is a sum of
        // commutators [L_x, L_y]. The degenerate n = 6 algebra is not
        // semisimple and the commutator span comes up one short of the
        // full derivation algebra.
        let js = JordanSpace::new(6);
        assert_eq!(js.der_span().0.len(), 35);
        assert_eq!(js.full_der_dim(), 36);
        assert_eq!(js.g0_span().0.len(), 55);
    }

    #[test]
    fn flat_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for &n in &VALID_N {
            let x = JordanElem::random(n, &mut rng);
            assert_eq!(JordanElem::from_flat(n, &x.flat()), x);
            assert_eq!(x.flat().len(), dim(n));
            assert_eq!(basis(n).len(), dim(n));
            assert_eq!(basis_labels(n).len(), dim(n));
        }
    }

    #[test]
    fn subalgebra_constraints_are_enforced() {
        assert_eq!(
            JordanElem::off(6, 0, ZornOct::eps_minus(2)),
            Err(JordanError::NotInSubalgebra)
        );
        assert_eq!(
            JordanElem::new(3, [gint(0), gint(0), gint(0)], [ZornOct::zero(), ZornOct::zero(), ZornOct::zero()]),
            Err(JordanError::UnsupportedN(3))
        );
        let c = comp_from_coords(1, &[gauss_seven()]);
        assert!(comp_contains(1, &c));
        assert_eq!(comp_coords(1, &c), vec![gauss_seven()]);
    }

    fn gauss_seven() -> GaussRat {
        crate::scalar::gauss(rat_int(7), rat_int(0))
    }
}
