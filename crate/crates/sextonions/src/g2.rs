//! The derivation algebra of the octonions in vector-matrix coordinates,
//! and the derivation algebra of the sextonions built from it.
//!
//! A derivation of the Zorn algebra is a triple (a, A+, A-) with a a
//! traceless 3x3 matrix, A+ a column and A- a row vector. It acts on
//! x = (al+, v+; v-, al-) by
//!
//!   d(al+) = <A-, v+> - <A+, v->         d(al-) = -d(al+)
//!   d(v+)  = a v+ + (al- - al+) A+ - A- wedge v-
//!   d(v-)  = -v- a - (al- - al+) A- - A+ wedge v+
//!
//! and the bracket of two such triples closes on the same shape. The
//! sextonion case keeps only the triples whose action preserves the
//! six-dimensional subalgebra; the quotient by the one direction that acts
//! trivially (E23) is carried by modified matrix operations rather than by
//! coset bookkeeping.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::linalg::Mat;
use crate::octonion::{cross, dot, e3, zero3, ZornOct, SEXT_INDICES};
use crate::scalar::{gzero, random_gauss, vec_is_zero, GaussRat};

fn vec_add(u: &[GaussRat; 3], v: &[GaussRat; 3]) -> [GaussRat; 3] {
    core::array::from_fn(|k| &u[k] + &v[k])
}

fn vec_sub(u: &[GaussRat; 3], v: &[GaussRat; 3]) -> [GaussRat; 3] {
    core::array::from_fn(|k| &u[k] - &v[k])
}

fn vec_scale(c: &GaussRat, u: &[GaussRat; 3]) -> [GaussRat; 3] {
    core::array::from_fn(|k| c * &u[k])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Elem {
    /// Traceless 3x3 block.
    pub a: Mat,
    /// Column vector part.
    pub vplus: [GaussRat; 3],
    /// Row vector part.
    pub vminus: [GaussRat; 3],
}

pub const G2_DIM: usize = 14;

pub const G2_LABELS: [&str; 14] = [
    "d1+", "d1-", "d2+", "d2-", "d3+", "d3-", "h1", "h2", "g1+", "g1-", "g2+", "g2-", "g3+",
    "g3-",
];

impl G2Elem {
    pub fn new(a: Mat, vplus: [GaussRat; 3], vminus: [GaussRat; 3]) -> Self {
        assert!(a.is_square() && a.nrows() == 3, "matrix block must be 3x3");
        assert!(a.trace().is_zero(), "matrix block must be traceless");
        G2Elem { a, vplus, vminus }
    }

    pub fn zero() -> Self {
        G2Elem { a: Mat::zeros(3, 3), vplus: zero3(), vminus: zero3() }
    }

    pub fn from_mat(a: Mat) -> Self {
        G2Elem::new(a, zero3(), zero3())
    }

    pub fn gplus(k: usize) -> Self {
        G2Elem { vplus: e3(k), ..G2Elem::zero() }
    }

    pub fn gminus(k: usize) -> Self {
        G2Elem { vminus: e3(k), ..G2Elem::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && vec_is_zero(&self.vplus) && vec_is_zero(&self.vminus)
    }

    pub fn add(&self, o: &G2Elem) -> G2Elem {
        G2Elem {
            a: self.a.add(&o.a),
            vplus: vec_add(&self.vplus, &o.vplus),
            vminus: vec_add(&self.vminus, &o.vminus),
        }
    }

    pub fn sub(&self, o: &G2Elem) -> G2Elem {
        G2Elem {
            a: self.a.sub(&o.a),
            vplus: vec_sub(&self.vplus, &o.vplus),
            vminus: vec_sub(&self.vminus, &o.vminus),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> G2Elem {
        G2Elem {
            a: self.a.scale(c),
            vplus: vec_scale(c, &self.vplus),
            vminus: vec_scale(c, &self.vminus),
        }
    }

    pub fn random(rng: &mut impl Rng) -> G2Elem {
        let mut a = Mat::from_fn(3, 3, |_, _| random_gauss(rng));
        let t = a.trace();
        // push the trace onto the last diagonal entry
        let a22 = a[(2, 2)].clone();
        a[(2, 2)] = a22 - t;
        G2Elem {
            a,
            vplus: [random_gauss(rng), random_gauss(rng), random_gauss(rng)],
            vminus: [random_gauss(rng), random_gauss(rng), random_gauss(rng)],
        }
    }
}

fn col_times_row(c: &[GaussRat; 3], r: &[GaussRat; 3]) -> Mat {
    Mat::from_fn(3, 3, |i, j| &c[i] * &r[j])
}

/// A o B = tr(AB) I - 3 AB for a column A and row B.
fn ncirc_full(c: &[GaussRat; 3], r: &[GaussRat; 3]) -> Mat {
    let outer = col_times_row(c, r);
    let t = outer.trace();
    Mat::identity(3).scale(&t).sub(&outer.scale(&crate::scalar::gint(3)))
}

fn mat_times_col(a: &Mat, v: &[GaussRat; 3]) -> [GaussRat; 3] {
    let w = a.mul_vec(&v.to_vec());
    [w[0].clone(), w[1].clone(), w[2].clone()]
}

fn row_times_mat(v: &[GaussRat; 3], a: &Mat) -> [GaussRat; 3] {
    core::array::from_fn(|j| {
        let mut s = gzero();
        for (k, vk) in v.iter().enumerate() {
            if !vk.is_zero() {
                s += vk * &a[(k, j)];
            }
        }
        s
    })
}

/// The bracket of two derivations.
pub fn g2_bracket(x: &G2Elem, y: &G2Elem) -> G2Elem {
    let two = crate::scalar::gint(2);
    let a = x
        .a
        .commutator(&y.a)
        .add(&ncirc_full(&x.vplus, &y.vminus))
        .sub(&ncirc_full(&y.vplus, &x.vminus));
    let vplus = vec_add(
        &vec_sub(&mat_times_col(&x.a, &y.vplus), &mat_times_col(&y.a, &x.vplus)),
        &vec_scale(&two, &cross(&x.vminus, &y.vminus)),
    );
    let vminus = vec_add(
        &vec_sub(&row_times_mat(&x.vminus, &y.a), &row_times_mat(&y.vminus, &x.a)),
        &vec_scale(&two, &cross(&x.vplus, &y.vplus)),
    );
    G2Elem { a, vplus, vminus }
}

/// Apply a derivation to an octonion.
pub fn g2_act(g: &G2Elem, x: &ZornOct) -> ZornOct {
    let daplus = dot(&g.vminus, &x.vplus) - dot(&g.vplus, &x.vminus);
    let diff = &x.aminus - &x.aplus;
    let vplus = vec_sub(
        &vec_add(&mat_times_col(&g.a, &x.vplus), &vec_scale(&diff, &g.vplus)),
        &cross(&g.vminus, &x.vminus),
    );
    let vminus = vec_sub(
        &vec_sub(&row_times_mat(&x.vminus, &g.a).map(|z| -z), &vec_scale(&diff, &g.vminus)),
        &cross(&g.vplus, &x.vplus),
    );
    ZornOct { aplus: daplus.clone(), aminus: -daplus, vplus, vminus }
}

/// Basis in the order of `G2_LABELS`: the six off-diagonal matrix units,
/// two diagonal elements h1 = E11 - E22 and h2 = E11 + E22 - 2 E33, then the
/// six vector generators.
pub fn g2_basis() -> Vec<G2Elem> {
    let unit = |i: usize, j: usize| G2Elem::from_mat(Mat::unit(3, i, j));
    let mut h1 = Mat::zeros(3, 3);
    h1[(0, 0)] = GaussRat::one();
    h1[(1, 1)] = -GaussRat::one();
    let mut h2 = Mat::zeros(3, 3);
    h2[(0, 0)] = GaussRat::one();
    h2[(1, 1)] = GaussRat::one();
    h2[(2, 2)] = -crate::scalar::gint(2);
    vec![
        unit(1, 2),
        unit(2, 1),
        unit(2, 0),
        unit(0, 2),
        unit(0, 1),
        unit(1, 0),
        G2Elem::from_mat(h1),
        G2Elem::from_mat(h2),
        G2Elem::gplus(0),
        G2Elem::gminus(0),
        G2Elem::gplus(1),
        G2Elem::gminus(1),
        G2Elem::gplus(2),
        G2Elem::gminus(2),
    ]
}

/// Coordinates over `g2_basis`. The diagonal of the matrix block is
/// resolved as alpha h1 + beta h2 with alpha = (t1 - t2)/2, beta = -t3/2.
pub fn g2_coords(g: &G2Elem) -> Vec<GaussRat> {
    let half = crate::scalar::grat(1, 2);
    let alpha = (&g.a[(0, 0)] - &g.a[(1, 1)]) * &half;
    let beta = -&g.a[(2, 2)] * &half;
    let mut c = vec![
        g.a[(1, 2)].clone(),
        g.a[(2, 1)].clone(),
        g.a[(2, 0)].clone(),
        g.a[(0, 2)].clone(),
        g.a[(0, 1)].clone(),
        g.a[(1, 0)].clone(),
        alpha,
        beta,
    ];
    for k in 0..3 {
        c.push(g.vplus[k].clone());
        c.push(g.vminus[k].clone());
    }
    c
}

/// 8x8 matrix of the action on octonion coordinates.
pub fn g2_action_matrix(g: &G2Elem) -> Mat {
    let basis = ZornOct::basis();
    let mut m = Mat::zeros(8, 8);
    for (j, b) in basis.iter().enumerate() {
        let col = g2_act(g, b).coords();
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m[(i, j)] = v;
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Derivations of the sextonions.

/// A derivation of the sextonions: the matrix block is constrained to the
/// pattern with zeros at (1,2), (2,3), (3,1), (3,2) (1-indexed) and zero
/// trace; the column part has third component zero, the row part second
/// component zero. Eight dimensions in all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerSElem {
    pub a: Mat,
    pub splus: [GaussRat; 3],
    pub sminus: [GaussRat; 3],
}

pub const DERS_DIM: usize = 8;

pub const DERS_LABELS: [&str; 8] = ["d2-", "d3-", "g2+", "g3-", "g1+", "g1-", "h1", "h2"];

/// Matrix positions forced to zero (0-indexed).
const PATTERN_ZEROS: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 0), (2, 1)];

pub fn pattern_ok(a: &Mat) -> bool {
    a.is_square()
        && a.nrows() == 3
        && PATTERN_ZEROS.iter().all(|&(i, j)| a[(i, j)].is_zero())
        && a.trace().is_zero()
}

impl DerSElem {
    pub fn new(a: Mat, splus: [GaussRat; 3], sminus: [GaussRat; 3]) -> Self {
        assert!(pattern_ok(&a), "matrix block violates the sextonion pattern");
        assert!(splus[2].is_zero(), "column part must have third component zero");
        assert!(sminus[1].is_zero(), "row part must have second component zero");
        DerSElem { a, splus, sminus }
    }

    pub fn zero() -> Self {
        DerSElem { a: Mat::zeros(3, 3), splus: zero3(), sminus: zero3() }
    }

    pub fn from_mat(a: Mat) -> Self {
        DerSElem::new(a, zero3(), zero3())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && vec_is_zero(&self.splus) && vec_is_zero(&self.sminus)
    }

    pub fn add(&self, o: &DerSElem) -> DerSElem {
        DerSElem {
            a: self.a.add(&o.a),
            splus: vec_add(&self.splus, &o.splus),
            sminus: vec_add(&self.sminus, &o.sminus),
        }
    }

    pub fn sub(&self, o: &DerSElem) -> DerSElem {
        DerSElem {
            a: self.a.sub(&o.a),
            splus: vec_sub(&self.splus, &o.splus),
            sminus: vec_sub(&self.sminus, &o.sminus),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> DerSElem {
        DerSElem {
            a: self.a.scale(c),
            splus: vec_scale(c, &self.splus),
            sminus: vec_scale(c, &self.sminus),
        }
    }

    /// The same data viewed as an octonion derivation. The embedding is a
    /// section of the quotient map, not a homomorphism: brackets upstairs
    /// may differ by a multiple of E23, which acts trivially on the
    /// sextonions.
    pub fn embed(&self) -> G2Elem {
        G2Elem::new(self.a.clone(), self.splus.clone(), self.sminus.clone())
    }

    pub fn random(rng: &mut impl Rng) -> DerSElem {
        let mut a = Mat::zeros(3, 3);
        let (t1, t2) = (random_gauss(rng), random_gauss(rng));
        a[(2, 2)] = -(&t1 + &t2);
        a[(0, 0)] = t1;
        a[(1, 1)] = t2;
        a[(0, 2)] = random_gauss(rng);
        a[(1, 0)] = random_gauss(rng);
        DerSElem {
            a,
            splus: [random_gauss(rng), random_gauss(rng), gzero()],
            sminus: [random_gauss(rng), gzero(), random_gauss(rng)],
        }
    }
}

fn clear_23(m: Mat) -> Mat {
    let mut m = m;
    m[(1, 2)] = gzero();
    m
}

/// Pattern product: a . b = ab with the (2,3) entry removed. Working with
/// this product is what realizes the quotient by E23 on matrices.
pub fn centerdot(a: &Mat, b: &Mat) -> Mat {
    clear_23(a.mul(b))
}

/// A o B = tr(AB) I - 3 AB, with the (2,3) entry of AB removed.
pub fn ncirc(c: &[GaussRat; 3], r: &[GaussRat; 3]) -> Mat {
    let outer = clear_23(col_times_row(c, r));
    let t = outer.trace();
    Mat::identity(3).scale(&t).sub(&outer.scale(&crate::scalar::gint(3)))
}

/// Bracket of two sextonion derivations: the octonion formula with every
/// matrix product replaced by its pattern version.
pub fn ders_bracket(x: &DerSElem, y: &DerSElem) -> DerSElem {
    let two = crate::scalar::gint(2);
    let a = centerdot(&x.a, &y.a)
        .sub(&centerdot(&y.a, &x.a))
        .add(&ncirc(&x.splus, &y.sminus))
        .sub(&ncirc(&y.splus, &x.sminus));
    let splus = vec_add(
        &vec_sub(&mat_times_col(&x.a, &y.splus), &mat_times_col(&y.a, &x.splus)),
        &vec_scale(&two, &cross(&x.sminus, &y.sminus)),
    );
    let sminus = vec_add(
        &vec_sub(&row_times_mat(&x.sminus, &y.a), &row_times_mat(&y.sminus, &x.a)),
        &vec_scale(&two, &cross(&x.splus, &y.splus)),
    );
    DerSElem::new(a, splus, sminus)
}

/// Apply a sextonion derivation to a sextonion. Goes through the octonion
/// action of the embedded element; the result stays in the subalgebra.
pub fn ders_act(d: &DerSElem, x: &ZornOct) -> ZornOct {
    assert!(x.is_sextonion(), "argument must be a sextonion");
    let y = g2_act(&d.embed(), x);
    debug_assert!(y.is_sextonion());
    y
}

/// Basis in the order of `DERS_LABELS`: E13, E21, the two vector pairs, and
/// h1 = diag(-2,1,1), h2 = diag(0,1,-1).
pub fn ders_basis() -> Vec<DerSElem> {
    let mut h1 = Mat::zeros(3, 3);
    h1[(0, 0)] = -crate::scalar::gint(2);
    h1[(1, 1)] = GaussRat::one();
    h1[(2, 2)] = GaussRat::one();
    let mut h2 = Mat::zeros(3, 3);
    h2[(1, 1)] = GaussRat::one();
    h2[(2, 2)] = -GaussRat::one();
    vec![
        DerSElem::from_mat(Mat::unit(3, 0, 2)),
        DerSElem::from_mat(Mat::unit(3, 1, 0)),
        DerSElem { splus: e3(1), ..DerSElem::zero() },
        DerSElem { sminus: e3(2), ..DerSElem::zero() },
        DerSElem { splus: e3(0), ..DerSElem::zero() },
        DerSElem { sminus: e3(0), ..DerSElem::zero() },
        DerSElem::from_mat(h1),
        DerSElem::from_mat(h2),
    ]
}

/// Coordinates over `ders_basis`. The diagonal diag(t1, t2, t3) resolves as
/// alpha h1 + beta h2 with alpha = -t1/2, beta = t2 + t1/2.
pub fn ders_coords(d: &DerSElem) -> Vec<GaussRat> {
    let half = crate::scalar::grat(1, 2);
    let alpha = -&d.a[(0, 0)] * &half;
    let beta = &d.a[(1, 1)] + &d.a[(0, 0)] * &half;
    vec![
        d.a[(0, 2)].clone(),
        d.a[(1, 0)].clone(),
        d.splus[1].clone(),
        d.sminus[2].clone(),
        d.splus[0].clone(),
        d.sminus[0].clone(),
        alpha,
        beta,
    ]
}

/// 6x6 matrix of the action on sextonion coordinates.
pub fn ders_action_matrix(d: &DerSElem) -> Mat {
    let g = d.embed();
    let basis = crate::octonion::sextonion_basis();
    let mut m = Mat::zeros(6, 6);
    for (j, b) in basis.iter().enumerate() {
        let img = g2_act(&g, b);
        assert!(img.is_sextonion());
        let all = img.coords();
        for (i, &gi) in SEXT_INDICES.iter().enumerate() {
            if !all[gi].is_zero() {
                m[(i, j)] = all[gi].clone();
            }
        }
    }
    m
}

/// Octonion derivations that preserve the sextonions: a nine-dimensional
/// space whose action map onto derivations of the sextonions has rank eight
/// with kernel spanned by E23.
pub fn sext_preserving_basis() -> Vec<G2Elem> {
    let mut d1 = Mat::zeros(3, 3);
    d1[(0, 0)] = GaussRat::one();
    d1[(2, 2)] = -GaussRat::one();
    let mut d2 = Mat::zeros(3, 3);
    d2[(1, 1)] = GaussRat::one();
    d2[(2, 2)] = -GaussRat::one();
    vec![
        G2Elem::from_mat(d1),
        G2Elem::from_mat(d2),
        G2Elem::from_mat(Mat::unit(3, 0, 2)),
        G2Elem::from_mat(Mat::unit(3, 1, 0)),
        G2Elem::from_mat(Mat::unit(3, 1, 2)),
        G2Elem::gplus(0),
        G2Elem::gplus(1),
        G2Elem::gminus(0),
        G2Elem::gminus(2),
    ]
}

pub fn sext_preserving_labels() -> Vec<String> {
    ["E11-E33", "E22-E33", "E13", "E21", "E23", "g1+", "g2+", "g1-", "g3-"]
        .iter()
        .map(|s| String::from(*s))
        .collect()
}

/// Weight of a basis element under (h1, h2), read off the structure
/// constants of `ders_bracket`.
pub fn ders_weight(index: usize) -> (i64, i64) {
    let b = ders_basis();
    let x = &b[index];
    let mut w = [0i64; 2];
    for (slot, h) in [&b[6], &b[7]].iter().enumerate() {
        let br = ders_bracket(h, x);
        if br.is_zero() {
            continue;
        }
        let c = ders_coords(&br);
        let xc = ders_coords(x);
        // br must be a scalar multiple of x for a weight vector
        let mut lambda: Option<GaussRat> = None;
        for (ci, xi) in c.iter().zip(&xc) {
            if xi.is_zero() {
                assert!(ci.is_zero(), "not a weight vector");
            } else {
                let r = ci / xi;
                match &lambda {
                    None => lambda = Some(r),
                    Some(l) => assert_eq!(*l, r, "not a weight vector"),
                }
            }
        }
        let l = lambda.unwrap();
        assert!(l.im.is_zero() && l.re.is_integer());
        w[slot] = l.re.to_integer().to_i64().unwrap();
    }
    (w[0], w[1])
}
