//! Intermediate Lie algebras over the rank-3 Jordan algebras.
//!
//! For n in {1, 2, 4, 8} the algebra has four pieces:
//!
//!   * a 3x3 matrix block a constrained to the same zero pattern as the
//!     sextonion derivations (zeros at (1,2), (2,3), (3,1), (3,2),
//!     1-indexed, trace zero; four free parameters),
//!   * an operator block a1 inside the reduced structure algebra
//!     g0 = der(J) + L(traceless J),
//!   * a column (s1+, s2+) and a row (s1-, s3-) of Jordan elements.
//!
//! Dimensions come out to 4 + dim g0 + 12(n+1): 36, 56, 99, 190.
//!
//! The bracket mirrors the sextonion-derivation bracket with matrix entries
//! replaced by Jordan elements: the matrix blocks act slotwise through the
//! zero pattern, the operator block acts componentwise (through its
//! trace-form adjoint on the row side), paired plus/minus slots produce
//! matrix and operator parts through the diamond contractions, and
//! like-signed slots cross into the opposite side through the Freudenthal
//! sharp.
//!
//! n = 6 is excluded here: its trace form is degenerate, and the
//! construction of the sextonion intermediate algebra is bookkeeping on
//! top of these (see the dimension tables in the command-line tool). The
//! adjoint machinery still covers n = 6 through the split route below.

use alloc::format;
use alloc::string::String;

use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::g2::{centerdot, pattern_ok};
use crate::jordan::{
    self, basis_labels, jmul, jtrace, sharp_lin, tform, JOp, JordanElem, JordanSpace,
};
use crate::linalg::{Mat, NotInSpan, SpanSolver};
use crate::scalar::{gint, grat, random_gauss, GaussRat};

pub const INTERMEDIATE_NS: [u8; 4] = [1, 2, 4, 8];

/// Basis of the matrix block, in coordinate order.
pub fn a_block_basis() -> [Mat; 4] {
    let mut h1 = Mat::zeros(3, 3);
    h1[(0, 0)] = GaussRat::one();
    h1[(1, 1)] = -GaussRat::one();
    let mut h2 = Mat::zeros(3, 3);
    h2[(1, 1)] = GaussRat::one();
    h2[(2, 2)] = -GaussRat::one();
    [h1, h2, Mat::unit(3, 0, 2), Mat::unit(3, 1, 0)]
}

pub const A_BLOCK_LABELS: [&str; 4] = ["a.E11-E22", "a.E22-E33", "a.E13", "a.E21"];

/// Coordinates of a pattern matrix over `a_block_basis`:
/// (a11, -a33, a13, a21).
pub fn a_block_coords(a: &Mat) -> [GaussRat; 4] {
    debug_assert!(pattern_ok(a));
    [a[(0, 0)].clone(), -a[(2, 2)].clone(), a[(0, 2)].clone(), a[(1, 0)].clone()]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntermediateElem {
    pub n: u8,
    pub a: Mat,
    pub a1: JOp,
    pub sp1: JordanElem,
    pub sp2: JordanElem,
    pub sm1: JordanElem,
    pub sm3: JordanElem,
}

impl IntermediateElem {
    pub fn zero(n: u8) -> Self {
        IntermediateElem {
            n,
            a: Mat::zeros(3, 3),
            a1: JOp::zero(n),
            sp1: JordanElem::zero(n),
            sp2: JordanElem::zero(n),
            sm1: JordanElem::zero(n),
            sm3: JordanElem::zero(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.a1.is_zero()
            && self.sp1.is_zero()
            && self.sp2.is_zero()
            && self.sm1.is_zero()
            && self.sm3.is_zero()
    }

    pub fn add(&self, o: &IntermediateElem) -> IntermediateElem {
        assert_eq!(self.n, o.n, "mixed composition dimensions");
        IntermediateElem {
            n: self.n,
            a: self.a.add(&o.a),
            a1: self.a1.add(&o.a1),
            sp1: self.sp1.add(&o.sp1),
            sp2: self.sp2.add(&o.sp2),
            sm1: self.sm1.add(&o.sm1),
            sm3: self.sm3.add(&o.sm3),
        }
    }

    pub fn sub(&self, o: &IntermediateElem) -> IntermediateElem {
        self.add(&o.scale(&-GaussRat::one()))
    }

    pub fn scale(&self, c: &GaussRat) -> IntermediateElem {
        IntermediateElem {
            n: self.n,
            a: self.a.scale(c),
            a1: self.a1.scale(c),
            sp1: self.sp1.scale(c),
            sp2: self.sp2.scale(c),
            sm1: self.sm1.scale(c),
            sm3: self.sm3.scale(c),
        }
    }
}

/// The adjoint of an operator with respect to the trace form, computed as
/// G^-1 A^T G. Needs the Gram matrix invertible, so n in {1, 2, 4, 8}.
pub fn dagger_with_gram(gram: &Mat, gram_inv: &Mat, op: &JOp) -> JOp {
    JOp { n: op.n, m: gram_inv.mul(&op.m.transpose()).mul(gram) }
}

/// The same adjoint through the direct-sum decomposition
/// span(L) + der(J): multiplication operators are self-adjoint, inner
/// derivations skew-adjoint, and the two spans intersect trivially (an
/// operator in both would be L_x with x = L_x(I) = 0). Works for every n
/// including the degenerate n = 6. Errors if the operator lies outside
/// span(L) + der.
pub fn dagger_split(js: &JordanSpace, ders: &[JOp], op: &JOp) -> Result<JOp, NotInSpan> {
    let mut solver = SpanSolver::new(js.dim * js.dim);
    for l in js.lbasis() {
        solver.feed(&l.flatten());
    }
    for f in ders {
        solver.feed(&f.m.flatten());
    }
    let coords = solver.solve(&op.m.flatten())?;
    let mut m = Mat::zeros(js.dim, js.dim);
    for (t, c) in coords.iter().take(js.dim).enumerate() {
        m.add_scaled(c, &js.lbasis()[t]);
    }
    for (u, c) in coords.iter().skip(js.dim).enumerate() {
        m.add_scaled(&-c, &ders[u].m);
    }
    Ok(JOp { n: op.n, m })
}

/// Operand of the structure-algebra star product, split into a
/// multiplication part and a derivation part.
pub enum StarOperand {
    L(JordanElem),
    F(JOp),
    Split(JordanElem, JOp),
}

impl StarOperand {
    fn parts(&self) -> (Option<&JordanElem>, Option<&JOp>) {
        match self {
            StarOperand::L(x) => (Some(x), None),
            StarOperand::F(f) => (None, Some(f)),
            StarOperand::Split(x, f) => (Some(x), Some(f)),
        }
    }
}

/// Star product on g0 + <Id>:
/// L_x * L_y = L_{x.y} + [L_x, L_y], and any derivation factor composes
/// with a factor of two.
pub fn star(js: &JordanSpace, x: &StarOperand, y: &StarOperand) -> JOp {
    let two = gint(2);
    let (xl, xf) = x.parts();
    let (yl, yf) = y.parts();
    let mut out = JOp::zero(js.n);
    if let (Some(a), Some(b)) = (xl, yl) {
        let (la, lb) = (js.lop(a), js.lop(b));
        out = out.add(&js.lop(&jmul(a, b))).add(&la.commutator(&lb));
    }
    if let (Some(f), Some(b)) = (xf, yl) {
        out = out.add(&f.compose(&js.lop(b)).scale(&two));
    }
    if let (Some(a), Some(g)) = (xl, yf) {
        out = out.add(&js.lop(a).compose(g).scale(&two));
    }
    if let (Some(f), Some(g)) = (xf, yf) {
        out = out.add(&f.compose(g).scale(&two));
    }
    out
}

/// V operator V_{x,y} = L_{x.y} + [L_x, L_y].
pub fn vop(js: &JordanSpace, x: &JordanElem, y: &JordanElem) -> JOp {
    star(js, &StarOperand::L(x.clone()), &StarOperand::L(y.clone()))
}

/// Per-n context: the Jordan space, the reduced structure algebra with its
/// span solver, and the inverse Gram for adjoints.
pub struct IntermediateAlgebra {
    pub n: u8,
    pub js: JordanSpace,
    pub g0: Vec<JOp>,
    pub g0_labels: Vec<String>,
    /// Leading `der_len` elements of `g0` are inner derivations.
    pub der_len: usize,
    solver: SpanSolver,
    gram_inv: Mat,
    pub dim: usize,
}

impl IntermediateAlgebra {
    pub fn new(n: u8) -> Self {
        assert!(
            INTERMEDIATE_NS.contains(&n),
            "intermediate algebra needs a nondegenerate trace form (n in {{1,2,4,8}})"
        );
        let js = JordanSpace::new(n);
        let (g0, g0_labels, der_len) = js.g0_span_split();
        let mut solver = SpanSolver::new(js.dim * js.dim);
        for op in &g0 {
            solver.feed(&op.m.flatten());
        }
        let gram_inv = js.gram.inverse().expect("trace form is nondegenerate");
        let dim = 4 + g0.len() + 4 * js.dim;
        IntermediateAlgebra { n, js, g0, g0_labels, der_len, solver, gram_inv, dim }
    }

    pub fn dagger(&self, op: &JOp) -> JOp {
        dagger_with_gram(&self.js.gram, &self.gram_inv, op)
    }

    /// Element with validated blocks: the matrix block must fit the zero
    /// pattern and the operator block must lie in g0.
    pub fn elem(
        &self,
        a: Mat,
        a1: JOp,
        sp1: JordanElem,
        sp2: JordanElem,
        sm1: JordanElem,
        sm3: JordanElem,
    ) -> Result<IntermediateElem, NotInSpan> {
        assert!(pattern_ok(&a), "matrix block violates the zero pattern");
        self.solver.solve(&a1.m.flatten())?;
        Ok(IntermediateElem { n: self.n, a, a1, sp1, sp2, sm1, sm3 })
    }

    /// Matrix-block diamond of a plus column against a minus row:
    /// a traceless pattern matrix built from the trace-form pairings of
    /// the populated slots, the (2,3) pairing excluded by the pattern.
    fn diamond_a(&self, sp: (&JordanElem, &JordanElem), sm: (&JordanElem, &JordanElem)) -> Mat {
        let (s1, s2) = sp;
        let (r1, r3) = sm;
        let mut out = Mat::zeros(3, 3);
        if !s1.is_zero() && !r1.is_zero() {
            let t11 = tform(s1, r1);
            let third = &t11 * grat(1, 3);
            out[(0, 0)] = &third - &t11;
            out[(1, 1)] = third.clone();
            out[(2, 2)] = third;
        }
        if !s1.is_zero() && !r3.is_zero() {
            out[(0, 2)] = -tform(s1, r3);
        }
        if !s2.is_zero() && !r1.is_zero() {
            out[(1, 0)] = -tform(s2, r1);
        }
        out
    }

    /// Operator-block diamond: only the slot-1 pairing contributes,
    /// -L_{(s.r)_0} - [L_s, L_r] with the traceless part of the product.
    fn diamond_op(&self, s: &JordanElem, r: &JordanElem) -> JOp {
        if s.is_zero() || r.is_zero() {
            return JOp::zero(self.n);
        }
        let p = jmul(s, r);
        let p0 = p.sub(&JordanElem::identity(self.n).scale(&(jtrace(&p) * grat(1, 3))));
        let (ls, lr) = (self.js.lop(s), self.js.lop(r));
        self.js.lop(&p0).neg().sub(&ls.commutator(&lr))
    }

    pub fn bracket(&self, x: &IntermediateElem, y: &IntermediateElem) -> IntermediateElem {
        assert_eq!(x.n, self.n);
        assert_eq!(y.n, self.n);
        let two = gint(2);

        let a = centerdot(&x.a, &y.a)
            .sub(&centerdot(&y.a, &x.a))
            .add(&self.diamond_a((&x.sp1, &x.sp2), (&y.sm1, &y.sm3)))
            .sub(&self.diamond_a((&y.sp1, &y.sp2), (&x.sm1, &x.sm3)));

        let a1 = x
            .a1
            .commutator(&y.a1)
            .scale(&two)
            .add(&self.diamond_op(&x.sp1, &y.sm1))
            .sub(&self.diamond_op(&y.sp1, &x.sm1));

        // plus column: the matrix block acts through its pattern, the
        // operator block componentwise, and the minus rows cross into
        // slot 2.
        let act_plus = |m: &Mat, op: &JOp, r1: &JordanElem, r2: &JordanElem| {
            let mut o1 = r1.scale(&m[(0, 0)]);
            let mut o2 = r1.scale(&m[(1, 0)]).add(&r2.scale(&m[(1, 1)]));
            if !op.is_zero() {
                if !r1.is_zero() {
                    o1 = o1.add(&op.apply(r1).scale(&two));
                }
                if !r2.is_zero() {
                    o2 = o2.add(&op.apply(r2).scale(&two));
                }
            }
            (o1, o2)
        };
        let (xp1, xp2) = act_plus(&x.a, &x.a1, &y.sp1, &y.sp2);
        let (yp1, yp2) = act_plus(&y.a, &y.a1, &x.sp1, &x.sp2);
        let mut sp1 = xp1.sub(&yp1);
        let mut sp2 = xp2.sub(&yp2);
        if !(x.sm3.is_zero() || y.sm1.is_zero()) {
            sp2 = sp2.add(&sharp_lin(&x.sm3, &y.sm1));
        }
        if !(x.sm1.is_zero() || y.sm3.is_zero()) {
            sp2 = sp2.sub(&sharp_lin(&x.sm1, &y.sm3));
        }
        let _ = &mut sp1;

        // minus row: mirrored with the adjoint operator, plus columns
        // cross into slot 3.
        let act_minus = |m: &Mat, op: &JOp, r1: &JordanElem, r3: &JordanElem| {
            let mut o1 = r1.scale(&m[(0, 0)]);
            let mut o3 = r1.scale(&m[(0, 2)]).add(&r3.scale(&m[(2, 2)]));
            if !op.is_zero() {
                let opd = self.dagger(op);
                if !r1.is_zero() {
                    o1 = o1.add(&opd.apply(r1).scale(&two));
                }
                if !r3.is_zero() {
                    o3 = o3.add(&opd.apply(r3).scale(&two));
                }
            }
            (o1, o3)
        };
        let (xm1, xm3) = act_minus(&x.a, &x.a1, &y.sm1, &y.sm3);
        let (ym1, ym3) = act_minus(&y.a, &y.a1, &x.sm1, &x.sm3);
        let mut sm1 = ym1.sub(&xm1);
        let mut sm3 = ym3.sub(&xm3);
        if !(x.sp1.is_zero() || y.sp2.is_zero()) {
            sm3 = sm3.add(&sharp_lin(&x.sp1, &y.sp2));
        }
        if !(x.sp2.is_zero() || y.sp1.is_zero()) {
            sm3 = sm3.sub(&sharp_lin(&x.sp2, &y.sp1));
        }
        let _ = &mut sm1;

        IntermediateElem { n: self.n, a, a1, sp1, sp2, sm1, sm3 }
    }

    /// Coordinates over `basis`. Errors if the operator block escapes g0,
    /// which is how closure failures would surface.
    pub fn coordinatize(&self, x: &IntermediateElem) -> Result<Vec<GaussRat>, NotInSpan> {
        assert_eq!(x.n, self.n);
        let mut c = Vec::with_capacity(self.dim);
        c.extend(a_block_coords(&x.a));
        c.extend(self.solver.solve(&x.a1.m.flatten())?);
        for s in [&x.sp1, &x.sp2, &x.sm1, &x.sm3] {
            c.extend(s.flat());
        }
        Ok(c)
    }

    pub fn from_coords(&self, c: &[GaussRat]) -> IntermediateElem {
        assert_eq!(c.len(), self.dim);
        let ab = a_block_basis();
        let mut a = Mat::zeros(3, 3);
        for (ci, bi) in c[..4].iter().zip(&ab) {
            a.add_scaled(ci, bi);
        }
        let mut a1 = JOp::zero(self.n);
        for (ci, op) in c[4..].iter().zip(&self.g0) {
            a1.m.add_scaled(ci, &op.m);
        }
        let jd = self.js.dim;
        let s0 = 4 + self.g0.len();
        let slot = |k: usize| JordanElem::from_flat(self.n, &c[s0 + k * jd..s0 + (k + 1) * jd]);
        IntermediateElem {
            n: self.n,
            a,
            a1,
            sp1: slot(0),
            sp2: slot(1),
            sm1: slot(2),
            sm3: slot(3),
        }
    }

    pub fn basis(&self) -> Vec<IntermediateElem> {
        let mut out = Vec::with_capacity(self.dim);
        for m in a_block_basis() {
            out.push(IntermediateElem { a: m, ..IntermediateElem::zero(self.n) });
        }
        for op in &self.g0 {
            out.push(IntermediateElem { a1: op.clone(), ..IntermediateElem::zero(self.n) });
        }
        let jb = jordan::basis(self.n);
        for k in 0..4 {
            for b in &jb {
                let mut e = IntermediateElem::zero(self.n);
                match k {
                    0 => e.sp1 = b.clone(),
                    1 => e.sp2 = b.clone(),
                    2 => e.sm1 = b.clone(),
                    _ => e.sm3 = b.clone(),
                }
                out.push(e);
            }
        }
        out
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = A_BLOCK_LABELS.iter().map(|s| String::from(*s)).collect();
        out.extend(self.g0_labels.iter().map(|l| format!("a1.{l}")));
        let jl = basis_labels(self.n);
        for slot in ["s+1", "s+2", "s-1", "s-3"] {
            out.extend(jl.iter().map(|l| format!("{slot}.{l}")));
        }
        out
    }

    pub fn random_elem(&self, rng: &mut impl Rng) -> IntermediateElem {
        let ab = a_block_basis();
        let mut a = Mat::zeros(3, 3);
        for bi in &ab {
            a.add_scaled(&random_gauss(rng), bi);
        }
        let mut a1 = JOp::zero(self.n);
        // a sparse random combination keeps the operator block honest
        // without flooding the matrices
        for _ in 0..4 {
            let t = rng.gen_range(0..self.g0.len());
            a1.m.add_scaled(&random_gauss(rng), &self.g0[t].m);
        }
        IntermediateElem {
            n: self.n,
            a,
            a1,
            sp1: JordanElem::random(self.n, rng),
            sp2: JordanElem::random(self.n, rng),
            sm1: JordanElem::random(self.n, rng),
            sm3: JordanElem::random(self.n, rng),
        }
    }
}

// ---------------------------------------------------------------------------
// Plain matrix model for n = 1.
//
// For symmetric 3x3 matrices the reduced structure algebra is sl(3) acting
// by x -> (mx + xm^T)/2, so the whole intermediate algebra has a model with
// an sl(3) block instead of an operator block. Building it independently
// (plain matrix arithmetic, adjugate-style sharp) and checking that the
// block-to-operator map intertwines the two brackets validates the operator
// route end to end.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainElem {
    pub a: Mat,
    pub m: Mat,
    pub sp1: Mat,
    pub sp2: Mat,
    pub sm1: Mat,
    pub sm3: Mat,
}

impl PlainElem {
    pub fn zero() -> Self {
        PlainElem {
            a: Mat::zeros(3, 3),
            m: Mat::zeros(3, 3),
            sp1: Mat::zeros(3, 3),
            sp2: Mat::zeros(3, 3),
            sm1: Mat::zeros(3, 3),
            sm3: Mat::zeros(3, 3),
        }
    }
}

pub fn sym_to_jordan(x: &Mat) -> JordanElem {
    assert!(x.is_symmetric());
    JordanElem::from_flat(
        1,
        &[
            x[(0, 0)].clone(),
            x[(1, 1)].clone(),
            x[(2, 2)].clone(),
            x[(0, 1)].clone(),
            x[(1, 2)].clone(),
            x[(2, 0)].clone(),
        ],
    )
}

pub fn jordan_to_sym(x: &JordanElem) -> Mat {
    assert_eq!(x.n, 1);
    let c = x.flat();
    let mut m = Mat::zeros(3, 3);
    for i in 0..3 {
        m[(i, i)] = c[i].clone();
    }
    for (k, (i, j)) in [(0, 1), (1, 2), (2, 0)].into_iter().enumerate() {
        m[(i, j)] = c[3 + k].clone();
        m[(j, i)] = c[3 + k].clone();
    }
    m
}

/// The operator x -> (mx + xm^T)/2 on flat coordinates of the n = 1 space.
pub fn mop(m: &Mat) -> JOp {
    let half = grat(1, 2);
    let mut out = Mat::zeros(6, 6);
    for (j, b) in jordan::basis(1).iter().enumerate() {
        let bs = jordan_to_sym(b);
        let img = m.mul(&bs).add(&bs.mul(&m.transpose())).scale(&half);
        for (i, v) in sym_to_jordan(&img).flat().into_iter().enumerate() {
            if !v.is_zero() {
                out[(i, j)] = v;
            }
        }
    }
    JOp { n: 1, m: out }
}

/// Adjugate linearization by plain matrix algebra:
/// x # y = xy + yx - t(x) y - t(y) x + (t(x) t(y) - t(xy)) I.
pub fn plain_sharp_lin(x: &Mat, y: &Mat) -> Mat {
    let (tx, ty) = (x.trace(), y.trace());
    let xy = x.mul(y);
    let c = &tx * &ty - xy.trace();
    xy.add(&y.mul(x))
        .sub(&y.scale(&tx))
        .sub(&x.scale(&ty))
        .add(&Mat::identity(3).scale(&c))
}

fn plain_diamond_a(sp: (&Mat, &Mat), sm: (&Mat, &Mat)) -> Mat {
    let (s1, s2) = sp;
    let (r1, r3) = sm;
    let mut out = Mat::zeros(3, 3);
    let t11 = s1.mul(r1).trace();
    let third = &t11 * grat(1, 3);
    out[(0, 0)] = &third - &t11;
    out[(1, 1)] = third.clone();
    out[(2, 2)] = third;
    out[(0, 2)] = -s1.mul(r3).trace();
    out[(1, 0)] = -s2.mul(r1).trace();
    out
}

/// sl(3) diamond: (1/3) t(s r) I - s r.
fn plain_diamond_m(s: &Mat, r: &Mat) -> Mat {
    let p = s.mul(r);
    Mat::identity(3).scale(&(p.trace() * grat(1, 3))).sub(&p)
}

pub fn plain_bracket(x: &PlainElem, y: &PlainElem) -> PlainElem {
    let a = centerdot(&x.a, &y.a)
        .sub(&centerdot(&y.a, &x.a))
        .add(&plain_diamond_a((&x.sp1, &x.sp2), (&y.sm1, &y.sm3)))
        .sub(&plain_diamond_a((&y.sp1, &y.sp2), (&x.sm1, &x.sm3)));

    let m = x
        .m
        .commutator(&y.m)
        .add(&plain_diamond_m(&x.sp1, &y.sm1))
        .sub(&plain_diamond_m(&y.sp1, &x.sm1));

    // 2 a1(r) becomes mr + rm^T; the adjoint becomes the transpose.
    let two_mop = |m: &Mat, r: &Mat| m.mul(r).add(&r.mul(&m.transpose()));
    let two_mop_t = |m: &Mat, r: &Mat| m.transpose().mul(r).add(&r.mul(m));

    let sp1 = y
        .sp1
        .scale(&x.a[(0, 0)])
        .add(&two_mop(&x.m, &y.sp1))
        .sub(&x.sp1.scale(&y.a[(0, 0)]))
        .sub(&two_mop(&y.m, &x.sp1));
    let sp2 = y
        .sp1
        .scale(&x.a[(1, 0)])
        .add(&y.sp2.scale(&x.a[(1, 1)]))
        .add(&two_mop(&x.m, &y.sp2))
        .sub(&x.sp1.scale(&y.a[(1, 0)]))
        .sub(&x.sp2.scale(&y.a[(1, 1)]))
        .sub(&two_mop(&y.m, &x.sp2))
        .add(&plain_sharp_lin(&x.sm3, &y.sm1))
        .sub(&plain_sharp_lin(&x.sm1, &y.sm3));

    let sm1 = x
        .sm1
        .scale(&y.a[(0, 0)])
        .add(&two_mop_t(&y.m, &x.sm1))
        .sub(&y.sm1.scale(&x.a[(0, 0)]))
        .sub(&two_mop_t(&x.m, &y.sm1));
    let sm3 = x
        .sm1
        .scale(&y.a[(0, 2)])
        .add(&x.sm3.scale(&y.a[(2, 2)]))
        .add(&two_mop_t(&y.m, &x.sm3))
        .sub(&y.sm1.scale(&x.a[(0, 2)]))
        .sub(&y.sm3.scale(&x.a[(2, 2)]))
        .sub(&two_mop_t(&x.m, &y.sm3))
        .add(&plain_sharp_lin(&x.sp1, &y.sp2))
        .sub(&plain_sharp_lin(&x.sp2, &y.sp1));

    PlainElem { a, m, sp1, sp2, sm1, sm3 }
}

/// Block-to-operator map into the n = 1 intermediate algebra.
pub fn phi(x: &PlainElem) -> IntermediateElem {
    IntermediateElem {
        n: 1,
        a: x.a.clone(),
        a1: mop(&x.m),
        sp1: sym_to_jordan(&x.sp1),
        sp2: sym_to_jordan(&x.sp2),
        sm1: sym_to_jordan(&x.sm1),
        sm3: sym_to_jordan(&x.sm3),
    }
}

/// 36-element basis of the plain model: the four pattern matrices, an
/// sl(3) basis, then symmetric matrix units in each of the four slots.
pub fn plain_basis() -> Vec<PlainElem> {
    let mut out = Vec::with_capacity(36);
    for m in a_block_basis() {
        out.push(PlainElem { a: m, ..PlainElem::zero() });
    }
    let mut sl3: Vec<Mat> = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
        sl3.push(Mat::unit(3, i, j));
    }
    let mut h1 = Mat::zeros(3, 3);
    h1[(0, 0)] = GaussRat::one();
    h1[(1, 1)] = -GaussRat::one();
    let mut h2 = Mat::zeros(3, 3);
    h2[(1, 1)] = GaussRat::one();
    h2[(2, 2)] = -GaussRat::one();
    sl3.push(h1);
    sl3.push(h2);
    for m in sl3 {
        out.push(PlainElem { m, ..PlainElem::zero() });
    }
    let mut syms: Vec<Mat> = Vec::new();
    for i in 0..3 {
        syms.push(Mat::unit(3, i, i));
    }
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        syms.push(Mat::unit(3, i, j).add(&Mat::unit(3, j, i)));
    }
    for k in 0..4 {
        for s in &syms {
            let mut e = PlainElem::zero();
            match k {
                0 => e.sp1 = s.clone(),
                1 => e.sp2 = s.clone(),
                2 => e.sm1 = s.clone(),
                _ => e.sm3 = s.clone(),
            }
            out.push(e);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dimensions() {
        for (n, d) in [(1u8, 36usize), (2, 56), (4, 99)] {
            let alg = IntermediateAlgebra::new(n);
            assert_eq!(alg.dim, d);
            assert_eq!(alg.basis().len(), d);
            assert_eq!(alg.labels().len(), d);
        }
    }

    #[test]
    fn basis_coordinatizes_to_unit_vectors() {
        let alg = IntermediateAlgebra::new(1);
        for (i, b) in alg.basis().iter().enumerate() {
            let c = alg.coordinatize(b).unwrap();
            for (j, cj) in c.iter().enumerate() {
                assert_eq!(*cj, if i == j { GaussRat::one() } else { crate::scalar::gzero() }, "({i},{j})");
            }
            assert_eq!(&alg.from_coords(&c), b);
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_closes() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for &n in &[1u8, 2] {
            let alg = IntermediateAlgebra::new(n);
            for _ in 0..4 {
                let x = alg.random_elem(&mut rng);
                let y = alg.random_elem(&mut rng);
                let b = alg.bracket(&x, &y);
                assert_eq!(alg.bracket(&y, &x), b.scale(&-GaussRat::one()));
                assert!(alg.coordinatize(&b).is_ok(), "bracket left the algebra");
                assert!(pattern_ok(&b.a));
            }
        }
    }

    #[test]
    fn jacobi_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for &n in &[1u8, 2] {
            let alg = IntermediateAlgebra::new(n);
            for _ in 0..3 {
                let x = alg.random_elem(&mut rng);
                let y = alg.random_elem(&mut rng);
                let z = alg.random_elem(&mut rng);
                let s = alg
                    .bracket(&alg.bracket(&x, &y), &z)
                    .add(&alg.bracket(&alg.bracket(&y, &z), &x))
                    .add(&alg.bracket(&alg.bracket(&z, &x), &y));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn adjoint_routes_agree_and_flip_signs_right() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for &n in &[1u8, 2, 4] {
            let alg = IntermediateAlgebra::new(n);
            let ders: Vec<JOp> = alg.g0[..alg.der_len].to_vec();
            let x = JordanElem::random(n, &mut rng);
            let y = JordanElem::random(n, &mut rng);
            let l = alg.js.lop(&x);
            let f = alg.js.fder(&x, &y);
            // multiplication operators are fixed, derivations negated
            assert_eq!(alg.dagger(&l), l);
            assert_eq!(alg.dagger(&f), f.neg());
            assert_eq!(dagger_split(&alg.js, &ders, &l).unwrap(), l);
            assert_eq!(dagger_split(&alg.js, &ders, &f).unwrap(), f.neg());
            // antihomomorphism on a composite (Gram route only: composites
            // leave span(L) + der)
            let ab = l.compose(&f);
            assert_eq!(alg.dagger(&ab), alg.dagger(&f).compose(&alg.dagger(&l)));
            // the two routes agree on a mixed span element
            let mixed = l.add(&f);
            assert_eq!(dagger_split(&alg.js, &ders, &mixed).unwrap(), alg.dagger(&mixed));
            assert!(dagger_split(&alg.js, &ders, &ab).is_err());
        }
    }

    #[test]
    fn adjoint_split_route_covers_the_degenerate_case() {
        // n = 6 has no inverse Gram; the L/der decomposition still works.
        let js = JordanSpace::new(6);
        let (ders, _) = js.der_span();
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let x = JordanElem::random(6, &mut rng);
        let y = JordanElem::random(6, &mut rng);
        let l = js.lop(&x);
        let f = js.fder(&x, &y);
        assert!(js.gram.inverse().is_none());
        assert_eq!(dagger_split(&js, &ders, &l).unwrap(), l);
        assert_eq!(dagger_split(&js, &ders, &f).unwrap(), f.neg());
    }

    #[test]
    fn star_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for &n in &[1u8, 2] {
            let js = JordanSpace::new(n);
            let x = JordanElem::random(n, &mut rng);
            let y = JordanElem::random(n, &mut rng);
            let (lx, ly) = (StarOperand::L(x.clone()), StarOperand::L(y.clone()));
            // symmetrized L * L recovers the product
            let sym = star(&js, &lx, &ly).add(&star(&js, &ly, &lx));
            assert_eq!(sym, js.lop(&jmul(&x, &y)).scale(&gint(2)));
            // a derivation factor brackets to the image
            let f = js.fder(&x, &y);
            let z = JordanElem::random(n, &mut rng);
            let lz = js.lop(&z);
            assert_eq!(f.commutator(&lz), js.lop(&f.apply(&z)));
            let olz = StarOperand::L(z.clone());
            let ofz = StarOperand::F(f.clone());
            let d = star(&js, &ofz, &olz).sub(&star(&js, &olz, &ofz));
            assert_eq!(d, js.lop(&f.apply(&z)).scale(&gint(2)));
            // split operands combine bilinearly
            let sp = StarOperand::Split(x.clone(), f.clone());
            let got = star(&js, &sp, &olz);
            let want = star(&js, &lx, &olz).add(&star(&js, &ofz, &olz));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn v_operator_stays_in_the_extended_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for &n in &[1u8, 2] {
            let alg = IntermediateAlgebra::new(n);
            let mut solver = SpanSolver::new(alg.js.dim * alg.js.dim);
            for op in &alg.g0 {
                solver.feed(&op.m.flatten());
            }
            solver.feed(&Mat::identity(alg.js.dim).flatten());
            for _ in 0..4 {
                let s = JordanElem::random(n, &mut rng);
                let r = JordanElem::random(n, &mut rng);
                assert!(solver.solve(&vop(&alg.js, &s, &r).m.flatten()).is_ok());
            }
        }
    }

    #[test]
    fn plain_model_operator_map_is_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        let alg = IntermediateAlgebra::new(1);
        // on symmetric matrices the operator is plain multiplication
        let x = JordanElem::random(1, &mut rng);
        assert_eq!(mop(&jordan_to_sym(&x)), alg.js.lop(&x));
        // adjoint is transpose
        let mut m = Mat::from_fn(3, 3, |_, _| random_gauss(&mut rng));
        let t = m.trace();
        let m22 = m[(2, 2)].clone();
        m[(2, 2)] = m22 - t;
        assert_eq!(alg.dagger(&mop(&m)), mop(&m.transpose()));
        // commutators match with the factor of two
        let mut m2 = Mat::from_fn(3, 3, |_, _| random_gauss(&mut rng));
        let t2 = m2.trace();
        let v22 = m2[(2, 2)].clone();
        m2[(2, 2)] = v22 - t2;
        assert_eq!(mop(&m).commutator(&mop(&m2)).scale(&gint(2)), mop(&m.commutator(&m2)));
    }

    #[test]
    fn plain_sharp_matches_the_jordan_sharp() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        for _ in 0..6 {
            let x = JordanElem::random(1, &mut rng);
            let y = JordanElem::random(1, &mut rng);
            let plain = plain_sharp_lin(&jordan_to_sym(&x), &jordan_to_sym(&y));
            assert_eq!(sym_to_jordan(&plain), sharp_lin(&x, &y));
        }
    }

    #[test]
    fn plain_and_operator_brackets_agree_on_sampled_pairs() {
        let alg = IntermediateAlgebra::new(1);
        let pb = plain_basis();
        assert_eq!(pb.len(), 36);
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..60 {
            let i = rng.gen_range(0..pb.len());
            let j = rng.gen_range(0..pb.len());
            let lhs = phi(&plain_bracket(&pb[i], &pb[j]));
            let rhs = alg.bracket(&phi(&pb[i]), &phi(&pb[j]));
            assert_eq!(lhs, rhs, "pair ({i},{j})");
        }
    }
}
