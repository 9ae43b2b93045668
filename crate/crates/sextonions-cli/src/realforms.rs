//! The real-form obstruction report: the sextonion norm form has signature
//! (2, 2) with a two-dimensional radical, so no four-dimensional subspace is
//! positive definite and no quaternion division subalgebra fits. The split
//! quaternions do sit inside, spanned by the idempotents and the first
//! epsilon pair.

use serde::Serialize;
use sextonions::linalg::{inertia, nullspace};
use sextonions::octonion::{sextonion_norm_gram, ZornOct, SEXT_LABELS};
use sextonions::scalar::{display_gauss, Zero};

#[derive(Serialize)]
pub struct RealformsOutcome {
    pub gram: Vec<Vec<String>>,
    pub inertia: (usize, usize, usize),
    pub radical: Vec<String>,
    pub verdict: String,
    pub split_quaternion_basis: Vec<String>,
    pub split_quaternions_close: bool,
    pub passed: bool,
}

pub fn run_realforms() -> RealformsOutcome {
    let g = sextonion_norm_gram();
    let gram: Vec<Vec<String>> = (0..6)
        .map(|i| (0..6).map(|j| display_gauss(&g[(i, j)])).collect())
        .collect();

    let sig = inertia(&g).expect("the norm gram is real symmetric");

    // The radical comes out of the kernel; each kernel vector should be a
    // plain coordinate direction.
    let mut radical: Vec<String> = nullspace(&g)
        .iter()
        .map(|v| {
            let support: Vec<usize> =
                (0..6).filter(|&i| !v[i].is_zero()).collect();
            if support.len() == 1 {
                SEXT_LABELS[support[0]].to_string()
            } else {
                format!("mixed direction over {support:?}")
            }
        })
        .collect();
    radical.sort();
    let radical_ok = radical == ["eps2+", "eps3-"];

    let quat = [
        ZornOct::rho_plus(),
        ZornOct::rho_minus(),
        ZornOct::eps_plus(1),
        ZornOct::eps_minus(1),
    ];
    // Closure in the span of those four: global coordinates supported on
    // the first four basis directions.
    let close = quat.iter().all(|x| {
        quat.iter().all(|y| {
            let c = x.mul(y).coords();
            c[4..].iter().all(|v| v.is_zero())
        })
    });

    let positive_dim = sig.0;
    let verdict = if positive_dim < 4 {
        "no positive-definite 4-dimensional subspace \u{21d2} no divisional quaternion subalgebra"
            .to_string()
    } else {
        format!("positive index {positive_dim} leaves room for a definite quaternion subalgebra")
    };

    let passed = sig == (2, 2, 2) && radical_ok && close && positive_dim < 4;
    RealformsOutcome {
        gram,
        inertia: sig,
        radical,
        verdict,
        split_quaternion_basis: vec![
            "rho+".into(),
            "rho-".into(),
            "eps1+".into(),
            "eps1-".into(),
        ],
        split_quaternions_close: close,
        passed,
    }
}

impl RealformsOutcome {
    pub fn to_text(&self) -> String {
        let mut s = String::from("sextonion norm gram (basis rho+, rho-, eps1+, eps1-, eps2+, eps3-):\n");
        for row in &self.gram {
            s.push_str("  [");
            s.push_str(
                &row.iter().map(|v| format!("{v:>4}")).collect::<Vec<_>>().join(" "),
            );
            s.push_str(" ]\n");
        }
        let (p, m, z) = self.inertia;
        s.push_str(&format!("inertia: ({p}, {m}, {z})\n"));
        s.push_str(&format!("radical basis: {{{}}}\n", self.radical.join(", ")));
        s.push_str(&format!("verdict: {}\n", self.verdict));
        s.push_str(&format!(
            "split quaternions {{{}}} close: {}\n",
            self.split_quaternion_basis.join(", "),
            if self.split_quaternions_close { "yes" } else { "NO" }
        ));
        s.push_str(&format!("result: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("realforms serialization");
        s.push('\n');
        s
    }
}
