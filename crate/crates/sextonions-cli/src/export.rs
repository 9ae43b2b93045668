//! Deterministic exporters and their inverse parsers. Every format round
//! trips bit for bit: parse(bytes) followed by serialize gives the same
//! bytes back.

use serde::{Deserialize, Serialize};
use sextonions::g2::{DERS_LABELS, G2_LABELS};
use sextonions::octonion::{mul_table, OCT_LABELS};
use sextonions::scalar::{fmt_gauss, fmt_rat, parse_gauss};
use sextonions::verify::{per_basis_weights, StructTensor};

use crate::algebra::{lie_tensor, Algebra};
use crate::report::Usage;

pub const CONVENTIONS: &str = "entries are [i, j, k, re, im] with i < j and c[j][i][k] = -c[i][j][k] implied; \
     coefficients are exact Gaussian rationals written num/den; \
     the operator block of the intermediate algebras uses the doubled bracket 2[a1, b1] \
     matching the action x -> 2 a1(x)";

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct StructConstFile {
    pub algebra: String,
    pub dim: u32,
    pub labels: Vec<String>,
    pub conventions: String,
    pub entries: Vec<(u32, u32, u32, String, String)>,
}

impl StructConstFile {
    pub fn from_tensor(algebra: &str, t: &StructTensor) -> Self {
        let mut entries = Vec::with_capacity(t.nnz());
        for (&(i, j), row) in &t.entries {
            for (k, c) in row {
                let (re, im) = fmt_gauss(c);
                entries.push((i, j, *k, re, im));
            }
        }
        StructConstFile {
            algebra: algebra.into(),
            dim: t.dim,
            labels: t.labels.clone(),
            conventions: CONVENTIONS.into(),
            entries,
        }
    }

    pub fn to_tensor(&self) -> Result<StructTensor, String> {
        let mut t = StructTensor::new(self.dim, self.labels.clone());
        let mut row: Vec<(u32, sextonions::GaussRat)> = Vec::new();
        let mut at: Option<(u32, u32)> = None;
        for (i, j, k, re, im) in &self.entries {
            let c = parse_gauss(re, im).ok_or_else(|| format!("bad coefficient {re},{im}"))?;
            if at != Some((*i, *j)) {
                if let Some((pi, pj)) = at {
                    t.insert_row(pi, pj, std::mem::take(&mut row));
                }
                at = Some((*i, *j));
            }
            row.push((*k, c));
        }
        if let Some((pi, pj)) = at {
            t.insert_row(pi, pj, row);
        }
        Ok(t)
    }

    pub fn to_json(&self) -> Vec<u8> {
        let mut v = serde_json::to_vec_pretty(self).expect("structconst serialization");
        v.push(b'\n');
        v
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, String> {
        serde_json::from_slice(bytes).map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut s = String::new();
        s.push_str(&format!("# algebra,{}\n", self.algebra));
        s.push_str(&format!("# dim,{}\n", self.dim));
        s.push_str(&format!("# labels,{}\n", self.labels.join(",")));
        s.push_str("i,j,k,re,im\n");
        for (i, j, k, re, im) in &self.entries {
            s.push_str(&format!("{i},{j},{k},{re},{im}\n"));
        }
        s.into_bytes()
    }

    pub fn from_csv(bytes: &[u8]) -> Result<Self, String> {
        let text = std::str::from_utf8(bytes).map_err(|e| e.to_string())?;
        let mut algebra = None;
        let mut dim = None;
        let mut labels = None;
        let mut entries = Vec::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("# algebra,") {
                algebra = Some(rest.to_string());
            } else if let Some(rest) = line.strip_prefix("# dim,") {
                dim = Some(rest.parse::<u32>().map_err(|e| e.to_string())?);
            } else if let Some(rest) = line.strip_prefix("# labels,") {
                labels = Some(rest.split(',').map(String::from).collect::<Vec<_>>());
            } else if line == "i,j,k,re,im" || line.is_empty() {
                continue;
            } else {
                let parts: Vec<&str> = line.split(',').collect();
                if parts.len() != 5 {
                    return Err(format!("bad row: {line}"));
                }
                entries.push((
                    parts[0].parse().map_err(|_| format!("bad i in {line}"))?,
                    parts[1].parse().map_err(|_| format!("bad j in {line}"))?,
                    parts[2].parse().map_err(|_| format!("bad k in {line}"))?,
                    parts[3].to_string(),
                    parts[4].to_string(),
                ));
            }
        }
        Ok(StructConstFile {
            algebra: algebra.ok_or("missing # algebra header")?,
            dim: dim.ok_or("missing # dim header")?,
            labels: labels.ok_or("missing # labels header")?,
            conventions: CONVENTIONS.into(),
            entries,
        })
    }
}

pub fn export_structconst(alg: Algebra, format: &str) -> Result<Result<Vec<u8>, String>, Usage> {
    if !alg.is_lie() {
        return Err(Usage(format!(
            "structconst applies to the Lie algebras, not {}",
            alg.name()
        )));
    }
    let t = match lie_tensor(alg) {
        Ok(t) => t,
        Err(report) => {
            let what = report
                .failures
                .first()
                .map(|f| format!("{} at {:?}", f.context, f.indices))
                .unwrap_or_else(|| "closure failure".into());
            return Ok(Err(what));
        }
    };
    let file = StructConstFile::from_tensor(alg.name(), &t);
    match format {
        "json" => Ok(Ok(file.to_json())),
        "csv" => Ok(Ok(file.to_csv())),
        _ => Err(Usage(format!("structconst formats are json and csv, not {format}"))),
    }
}

// ---------------------------------------------------------------------------
// Octonion multiplication table.

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct MultableFile {
    pub algebra: String,
    pub basis: Vec<String>,
    /// table[i][j] is the coordinate vector of basis[i] * basis[j],
    /// each coefficient an exact (re, im) pair.
    pub table: Vec<Vec<Vec<(String, String)>>>,
}

pub fn export_multable(format: &str) -> Result<Vec<u8>, Usage> {
    if format != "json" {
        return Err(Usage(format!("multable is a json export, not {format}")));
    }
    let table = mul_table()
        .iter()
        .map(|row| {
            row.iter()
                .map(|coeffs| coeffs.iter().map(fmt_gauss).collect())
                .collect()
        })
        .collect();
    let file = MultableFile {
        algebra: "oct".into(),
        basis: OCT_LABELS.iter().map(|s| s.to_string()).collect(),
        table,
    };
    let mut v = serde_json::to_vec_pretty(&file).expect("multable serialization");
    v.push(b'\n');
    Ok(v)
}

// ---------------------------------------------------------------------------
// Weight diagrams.

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct WeightEntry {
    pub generator: String,
    pub weight: Vec<String>,
}

/// Joint ad-eigenvalues of each generator under the standard Cartan pair,
/// derived from the structure constants, as a plain JSON list.
pub fn export_weights(alg: Algebra, format: &str) -> Result<Result<Vec<u8>, String>, Usage> {
    if format != "json" {
        return Err(Usage(format!("weights is a json export, not {format}")));
    }
    let (labels, cartan): (Vec<String>, [u32; 2]) = match alg {
        Algebra::Ders => (DERS_LABELS.iter().map(|s| s.to_string()).collect(), [6, 7]),
        Algebra::G2 => (G2_LABELS.iter().map(|s| s.to_string()).collect(), [6, 7]),
        other => {
            return Err(Usage(format!(
                "weights applies to --algebra ders or g2, not {}",
                other.name()
            )))
        }
    };
    let t = match lie_tensor(alg) {
        Ok(t) => t,
        Err(_) => return Ok(Err("closure failure during extraction".into())),
    };
    let weights = match per_basis_weights(&t, &cartan) {
        Ok(w) => w,
        Err(e) => return Ok(Err(format!("weight decomposition failed: {e:?}"))),
    };
    let entries: Vec<WeightEntry> = labels
        .iter()
        .zip(&weights)
        .map(|(l, w)| WeightEntry {
            generator: l.clone(),
            weight: w.iter().map(fmt_rat).collect(),
        })
        .collect();
    let mut v = serde_json::to_vec_pretty(&entries).expect("weights serialization");
    v.push(b'\n');
    Ok(Ok(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structconst_roundtrips_both_formats() {
        let t = lie_tensor(Algebra::Ders).unwrap();
        let file = StructConstFile::from_tensor("ders", &t);
        assert_eq!(file.to_tensor().unwrap(), t);

        let json = file.to_json();
        let back = StructConstFile::from_json(&json).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_json(), json);

        let csv = file.to_csv();
        let back = StructConstFile::from_csv(&csv).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_csv(), csv);
    }

    #[test]
    fn format_validation() {
        assert!(export_structconst(Algebra::Oct, "json").is_err());
        assert!(export_structconst(Algebra::Ders, "toml").is_err());
        assert!(export_multable("csv").is_err());
        assert!(export_weights(Algebra::C3h, "json").is_err());
    }
}
