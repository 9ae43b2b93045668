//! Magic-square dimension bookkeeping: the classical third row, the
//! intermediate row between the third and fourth, and the sextonion column,
//! every number recomputed from the constructions rather than copied.

use serde::Serialize;
use sextonions::g2::DERS_DIM;
use sextonions::intermediate::IntermediateAlgebra;
use sextonions::jordan::JordanSpace;

#[derive(Serialize, Clone)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

impl Check {
    fn eq(name: &str, lhs: usize, rhs: usize) -> Self {
        Check {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            ok: lhs == rhs,
        }
    }
}

#[derive(Serialize)]
pub struct DimsOutcome {
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn run_dims() -> DimsOutcome {
    let mut checks = Vec::new();

    // One construction per column; everything below reads off these.
    let ias: Vec<IntermediateAlgebra> =
        [1u8, 2, 4, 8].iter().map(|&n| IntermediateAlgebra::new(n)).collect();
    let js6 = JordanSpace::new(6);
    let der_rank6 = js6.der_span().0.len();
    let full_der6 = js6.full_der_dim();
    let g0_rank6 = js6.g0_span().0.len();
    // The table's reduced structure algebra at n = 6 takes the full
    // derivation algebra plus the traceless multiplications. The commutator
    // span alone runs one short: one derivation of the degenerate algebra
    // is outer.
    let str6 = full_der6 + (js6.dim - 1);

    let g3_row = [21, 35, 66, 133];
    let g3h_row = [36, 56, 99, 190];
    let irrep_row = [14, 20, 32, 56];
    let g0_row = [8, 16, 35, 78];

    for (col, ia) in ias.iter().enumerate() {
        let n = ia.n as usize;
        let g0 = ia.g0.len();
        let jdim = ia.js.dim;
        // Conformal row: structure operators, a dilation, two Jordan copies.
        let g3 = g0 + 1 + 2 * jdim;
        checks.push(Check::eq(&format!("row three, n = {n}: g0 + 1 + 2 dim J"), g3, g3_row[col]));
        checks.push(Check::eq(
            &format!("row three and a half, n = {n}: constructed basis size"),
            ia.dim,
            g3h_row[col],
        ));
        checks.push(Check::eq(
            &format!("row three and a half, n = {n}: basis list length"),
            ia.basis().len(),
            ia.dim,
        ));
        let irrep = 6 * n + 8;
        checks.push(Check::eq(
            &format!("symplectic irrep, n = {n}: 6n + 8"),
            irrep,
            irrep_row[col],
        ));
        checks.push(Check::eq(
            &format!("gap, n = {n}: row three + (6n + 8) + 1"),
            g3 + irrep + 1,
            ia.dim,
        ));
    }

    for (k, &n) in [1u8, 2, 4, 8].iter().enumerate() {
        checks.push(Check::eq(
            &format!("reduced structure algebra rank, n = {n}"),
            ias.iter().find(|ia| ia.n == n).unwrap().g0.len(),
            g0_row[k],
        ));
    }
    checks.push(Check::eq("derivations of J at n = 6: full algebra", full_der6, 36));
    checks.push(Check::eq(
        "derivations of J at n = 6: commutator span",
        der_rank6,
        full_der6 - 1,
    ));
    checks.push(Check::eq(
        "reduced structure algebra, n = 6: full derivations + traceless L",
        str6,
        56,
    ));
    checks.push(Check::eq(
        "reduced structure algebra, n = 6: operator span",
        g0_rank6,
        str6 - 1,
    ));

    // Sextonion column, top to bottom: 36, 56, 99, 144, 190. The two
    // identities the column hangs on are recomputed from n = 6 data.
    let jdim6 = js6.dim;
    checks.push(Check::eq("sextonion column: dim J at n = 6", jdim6, 21));
    checks.push(Check::eq(
        "sextonion column: 190 = 8 + 56 + 6 * 21",
        DERS_DIM + str6 + 6 * jdim6,
        190,
    ));
    checks.push(Check::eq("sextonion column: 44 = 21 + 21 + 2", jdim6 + jdim6 + 2, 44));

    // Branching bookkeeping for the largest pair.
    let g3_n2 = {
        let ia = &ias[1];
        ia.g0.len() + 1 + 2 * ia.js.dim
    };
    checks.push(Check::eq("branching: 133 = 8 + 35 + 45 + 45", DERS_DIM + g3_n2 + 45 + 45, 133));
    checks.push(Check::eq("branching: 56 = 18 + 18 + 20", 18 + 18 + 20, 56));
    checks.push(Check::eq("branching: 20 is the n = 2 symplectic irrep", 6 * 2 + 8, 20));
    checks.push(Check::eq("branching: 56 is the n = 8 symplectic irrep", 6 * 8 + 8, 56));

    let passed = checks.iter().all(|c| c.ok);
    DimsOutcome { checks, passed }
}

impl DimsOutcome {
    pub fn to_text(&self) -> String {
        let mut s = String::from("magic square bookkeeping\n");
        s.push_str("  row three:          21  35  66  133   (n = 1, 2, 4, 8)\n");
        s.push_str("  row three and half: 36  56  99  190\n");
        s.push_str("  symplectic irreps:  14  20  32  56    (6n + 8)\n");
        s.push_str("  sextonion column:   36  56  99  144  190\n");
        for c in &self.checks {
            let mark = if c.ok { "ok " } else { "BAD" };
            s.push_str(&format!("  [{mark}] {}: {} = {}\n", c.name, c.lhs, c.rhs));
        }
        s.push_str(&format!("result: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dims serialization");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatches_are_caught() {
        let c = Check::eq("deliberately wrong", 2 + 2, 5);
        assert!(!c.ok);
        let outcome = DimsOutcome { checks: vec![c], passed: false };
        assert!(!outcome.passed);
        assert!(outcome.to_text().contains("BAD"));
    }
}
