//! Algebra selectors and the parallel extraction / Jacobi drivers shared by
//! the check suites and the exporters.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sextonions::g2::{
    ders_basis, ders_bracket, ders_coords, g2_basis, g2_bracket, g2_coords, DERS_LABELS,
    G2_LABELS,
};
use sextonions::intermediate::IntermediateAlgebra;
use sextonions::verify::{
    assemble, extract_pair, jacobi_triples, pair_list, total_triples, unrank_triple, Failure,
    StructTensor, VerifyReport,
};
use sextonions::GaussRat;
use std::time::Instant;

use crate::report::Usage;

/// Fixed work-unit sizes, independent of worker count, so failure lists and
/// error choices never depend on parallelism.
const PAIR_CHUNK: usize = 128;
const TRIPLE_CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    Oct,
    Sext,
    G2,
    Ders,
    C3h,
    A5h,
    D6h,
    E7h,
    J3,
}

impl Algebra {
    pub fn parse(s: &str) -> Result<Self, Usage> {
        Ok(match s {
            "oct" => Algebra::Oct,
            "sext" => Algebra::Sext,
            "g2" => Algebra::G2,
            "ders" => Algebra::Ders,
            "c3h" => Algebra::C3h,
            "a5h" => Algebra::A5h,
            "d6h" => Algebra::D6h,
            "e7h" => Algebra::E7h,
            "j3" => Algebra::J3,
            _ => {
                return Err(Usage(format!(
                    "unknown algebra '{s}' (expected one of oct, sext, g2, ders, c3h, a5h, d6h, e7h, j3)"
                )))
            }
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Oct => "oct",
            Algebra::Sext => "sext",
            Algebra::G2 => "g2",
            Algebra::Ders => "ders",
            Algebra::C3h => "c3h",
            Algebra::A5h => "a5h",
            Algebra::D6h => "d6h",
            Algebra::E7h => "e7h",
            Algebra::J3 => "j3",
        }
    }

    /// Composition dimension behind each intermediate algebra.
    pub fn intermediate_n(self) -> Option<u8> {
        match self {
            Algebra::C3h => Some(1),
            Algebra::A5h => Some(2),
            Algebra::D6h => Some(4),
            Algebra::E7h => Some(8),
            _ => None,
        }
    }

    pub fn is_lie(self) -> bool {
        matches!(
            self,
            Algebra::G2 | Algebra::Ders | Algebra::C3h | Algebra::A5h | Algebra::D6h | Algebra::E7h
        )
    }
}

/// Structure constants over the canonical basis, extracted in parallel.
/// A closure failure comes back as a failed report, not an error: it is a
/// mathematical finding.
pub fn lie_tensor(alg: Algebra) -> Result<StructTensor, VerifyReport> {
    match alg {
        Algebra::G2 => extract_parallel(
            &g2_basis(),
            G2_LABELS.iter().map(|s| s.to_string()).collect(),
            |x, y| g2_bracket(x, y),
            |e| Ok::<_, String>(g2_coords(e)),
        ),
        Algebra::Ders => extract_parallel(
            &ders_basis(),
            DERS_LABELS.iter().map(|s| s.to_string()).collect(),
            |x, y| ders_bracket(x, y),
            |e| Ok::<_, String>(ders_coords(e)),
        ),
        _ => {
            let n = alg.intermediate_n().expect("lie_tensor needs a Lie algebra selector");
            let ia = IntermediateAlgebra::new(n);
            extract_parallel(
                &ia.basis(),
                ia.labels(),
                |x, y| ia.bracket(x, y),
                |e| ia.coordinatize(e).map_err(|e| format!("{e:?}")),
            )
        }
    }
}

fn extract_parallel<E, B, C, Err>(
    basis: &[E],
    labels: Vec<String>,
    bracket: B,
    coords: C,
) -> Result<StructTensor, VerifyReport>
where
    E: Sync,
    B: Fn(&E, &E) -> E + Sync,
    C: Fn(&E) -> Result<Vec<GaussRat>, Err> + Sync,
    Err: std::fmt::Display + Send,
{
    let dim = basis.len() as u32;
    let pairs = pair_list(dim);
    let results: Vec<Result<Vec<((u32, u32), Vec<(u32, GaussRat)>)>, (u32, u32, String)>> = pairs
        .par_chunks(PAIR_CHUNK)
        .map(|chunk| {
            let mut rows = Vec::with_capacity(chunk.len());
            for &(i, j) in chunk {
                let row = extract_pair(basis, &bracket, &coords, i, j)
                    .map_err(|(i, j, e)| (i, j, e.to_string()))?;
                rows.push(((i, j), row));
            }
            Ok(rows)
        })
        .collect();
    let mut chunks = Vec::with_capacity(results.len());
    let mut worst: Option<(u32, u32, String)> = None;
    for r in results {
        match r {
            Ok(rows) => chunks.push(rows),
            Err(e) => {
                if worst.as_ref().map_or(true, |w| (e.0, e.1) < (w.0, w.1)) {
                    worst = Some(e);
                }
            }
        }
    }
    if let Some((i, j, e)) = worst {
        let f = Failure {
            context: format!("bracket of basis pair leaves the span: {e}"),
            indices: vec![i, j],
            expected: "coordinates over the basis".into(),
            got: "NotInSpan".into(),
        };
        return Err(VerifyReport::from_failures("closure", (i as u64) * dim as u64 + j as u64, vec![f]));
    }
    Ok(assemble(dim, labels, chunks))
}

/// Extraction as a closure report: the pair count checked, failures empty
/// exactly when every bracket landed back in the span.
pub fn closure_report(alg: Algebra) -> (VerifyReport, Option<StructTensor>) {
    let start = Instant::now();
    match lie_tensor(alg) {
        Ok(t) => {
            let pairs = (t.dim as u64) * (t.dim as u64 - 1) / 2;
            let mut r = VerifyReport::from_failures("closure", pairs, Vec::new());
            r.wall_ms = start.elapsed().as_millis();
            (r, Some(t))
        }
        Err(mut r) => {
            r.wall_ms = start.elapsed().as_millis();
            (r, None)
        }
    }
}

/// Exhaustive tensor-level Jacobi sweep, partitioned over fixed-size rank
/// ranges so the merged report is independent of the worker count.
pub fn jacobi_parallel(t: &StructTensor) -> VerifyReport {
    let start = Instant::now();
    let total = total_triples(t.dim);
    let nchunks = (total + TRIPLE_CHUNK - 1) / TRIPLE_CHUNK;
    let parts: Vec<(u64, Vec<Failure>)> = (0..nchunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * TRIPLE_CHUNK;
            let hi = total.min(lo + TRIPLE_CHUNK);
            jacobi_triples(t, (lo..hi).map(|r| unrank_triple(t.dim, r)))
        })
        .collect();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (c, fs) in parts {
        checked += c;
        for f in fs {
            if failures.len() < 32 {
                failures.push(f);
            }
        }
    }
    let mut r = VerifyReport::from_failures("jacobi-tensor", checked, failures);
    r.wall_ms = start.elapsed().as_millis();
    r
}

/// Element-level Jacobi on sampled basis triples, recomputed through the
/// actual brackets rather than the tensor. Guards the coordinatization.
pub fn element_jacobi_sampled(alg: Algebra, samples: u64, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let n = alg.intermediate_n().expect("sampled element Jacobi is for the intermediate algebras");
    let ia = IntermediateAlgebra::new(n);
    let basis = ia.basis();
    let dim = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(usize, usize, usize)> = (0..samples)
        .map(|_| loop {
            let i = rng.gen_range(0..dim);
            let j = rng.gen_range(0..dim);
            let k = rng.gen_range(0..dim);
            if i != j && j != k && i != k {
                break (i, j, k);
            }
        })
        .collect();
    let parts: Vec<Vec<Failure>> = triples
        .par_chunks(64)
        .map(|chunk| {
            let mut fs = Vec::new();
            for &(i, j, k) in chunk {
                let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                let r = ia
                    .bracket(&ia.bracket(x, y), z)
                    .add(&ia.bracket(&ia.bracket(y, z), x))
                    .add(&ia.bracket(&ia.bracket(z, x), y));
                if !r.is_zero() {
                    fs.push(Failure {
                        context: "element-level Jacobi residual".into(),
                        indices: vec![i as u32, j as u32, k as u32],
                        expected: "0".into(),
                        got: "nonzero element".into(),
                    });
                }
            }
            fs
        })
        .collect();
    let mut failures = Vec::new();
    for fs in parts {
        for f in fs {
            if failures.len() < 32 {
                failures.push(f);
            }
        }
    }
    let mut r = VerifyReport::from_failures("jacobi-element-sampled", samples, failures);
    r.wall_ms = start.elapsed().as_millis();
    r
}

/// Exhaustive element-level Jacobi for the two small algebras.
pub fn element_jacobi_exhaustive(alg: Algebra) -> VerifyReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let checked;
    match alg {
        Algebra::G2 => {
            let b = g2_basis();
            let mut count = 0u64;
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    for k in j + 1..b.len() {
                        count += 1;
                        let r = g2_bracket(&g2_bracket(&b[i], &b[j]), &b[k])
                            .add(&g2_bracket(&g2_bracket(&b[j], &b[k]), &b[i]))
                            .add(&g2_bracket(&g2_bracket(&b[k], &b[i]), &b[j]));
                        if !r.is_zero() && failures.len() < 32 {
                            failures.push(element_failure(i, j, k));
                        }
                    }
                }
            }
            checked = count;
        }
        Algebra::Ders => {
            let b = ders_basis();
            let mut count = 0u64;
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    for k in j + 1..b.len() {
                        count += 1;
                        let r = ders_bracket(&ders_bracket(&b[i], &b[j]), &b[k])
                            .add(&ders_bracket(&ders_bracket(&b[j], &b[k]), &b[i]))
                            .add(&ders_bracket(&ders_bracket(&b[k], &b[i]), &b[j]));
                        if !r.is_zero() && failures.len() < 32 {
                            failures.push(element_failure(i, j, k));
                        }
                    }
                }
            }
            checked = count;
        }
        _ => unreachable!("exhaustive element Jacobi is for g2 and ders"),
    }
    let mut r = VerifyReport::from_failures("jacobi-element", checked, failures);
    r.wall_ms = start.elapsed().as_millis();
    r
}

fn element_failure(i: usize, j: usize, k: usize) -> Failure {
    Failure {
        context: "element-level Jacobi residual".into(),
        indices: vec![i as u32, j as u32, k as u32],
        expected: "0".into(),
        got: "nonzero element".into(),
    }
}
