//! Serialisable classification reports and table formatting.
//!
//! Integer values that may exceed 64 bits (norms, Hermite entries, quotient
//! orders) are serialised as decimal strings to keep the JSON exact.

use serde::Serialize;

use crate::ideal::CycIdeal;
use crate::scalar::Scalar;
use crate::symmetry::Classification;

/// Serialised ideal: ring index, Hermite rows, norm, optional generator.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealJson {
    pub n: u64,
    pub hnf: Vec<Vec<String>>,
    pub norm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl IdealJson {
    pub fn from_ideal<T: Scalar>(ideal: &CycIdeal<T>) -> Self {
        let d = ideal.ring().degree();
        let hnf = (0..d)
            .map(|i| ideal.basis().row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        IdealJson {
            n: ideal.ring().n(),
            hnf,
            norm: ideal.norm().to_string(),
            generator: ideal.generators().map(|gs| {
                gs.iter()
                    .map(|g| g.coeff_string())
                    .collect::<Vec<_>>()
                    .join("; ")
            }),
        }
    }
}

/// One colouring classification, in the stable JSON schema.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportJson {
    pub n: u64,
    pub ideal: IdealJson,
    pub perfect: bool,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "S")]
    pub s: String,
    #[serde(rename = "K")]
    pub k: String,
    pub quotient_order: String,
}

impl ReportJson {
    pub fn from_classification<T: Scalar>(c: &Classification<T>) -> Self {
        let n = c.ideal.ring().n();
        let n_point = c.ideal.ring().point_order();
        let h = if c.perfect {
            format!("M{n}:D{n_point}")
        } else {
            format!("M{n}:C{n_point}")
        };
        let s = &c.stabiliser;
        let k = if s.is_dihedral() {
            format!("T:D_{}", s.rotation_order())
        } else {
            format!("T:C_{}", s.rotation_order())
        };
        ReportJson {
            n,
            ideal: IdealJson::from_ideal(&c.ideal),
            perfect: c.perfect,
            h,
            s: s.name(),
            k,
            quotient_order: c.quotient_order.to_string(),
        }
    }
}

/// `K` in the compact literature form: `T` for a trivial stabiliser,
/// else `T:C_r` / `T:D_r`.
pub fn preserving_symbol<T: Scalar>(c: &Classification<T>) -> String {
    let s = &c.stabiliser;
    if s.is_trivial() {
        "T".into()
    } else if s.is_dihedral() {
        format!("T:D_{}", s.rotation_order())
    } else {
        format!("T:C_{}", s.rotation_order())
    }
}

/// `H` in the classical two-symbol form: the full group or its
/// orientation-preserving half.
pub fn symmetry_symbol<T: Scalar>(c: &Classification<T>) -> &'static str {
    if c.perfect {
        "G"
    } else {
        "G'"
    }
}

/// One aggregated row of a colour-count table: all colourings with the same
/// norm and the same `(H, K)` shape.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TableGroup {
    pub ell: u64,
    pub j: usize,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "K")]
    pub k: String,
}

/// Groups a norm sweep into table rows; within one norm, perfect colourings
/// come first, then larger preserving groups.
pub fn table_groups<T: Scalar>(sweep: &[(u64, Vec<Classification<T>>)]) -> Vec<TableGroup> {
    let mut out = Vec::new();
    for (ell, classes) in sweep {
        let mut groups: Vec<(String, String, u64, usize)> = Vec::new();
        for c in classes {
            let h = symmetry_symbol(c).to_string();
            let k = preserving_symbol(c);
            match groups.iter_mut().find(|(gh, gk, ..)| gh == &h && gk == &k) {
                Some(g) => g.3 += 1,
                None => groups.push((h, k, c.stabiliser.order(), 1)),
            }
        }
        groups.sort_by(|a, b| {
            (a.0 != "G", std::cmp::Reverse(a.2)).cmp(&(b.0 != "G", std::cmp::Reverse(b.2)))
        });
        for (h, k, _, j) in groups {
            out.push(TableGroup { ell: *ell, j, h, k });
        }
    }
    out
}

/// Fixed-width text rendering of table rows.
pub fn format_table(n: u64, rows: &[TableGroup]) -> String {
    let mut s = String::new();
    s.push_str(&format!("n = {n}\n"));
    s.push_str(&format!("{:>6}  {:>3}  {:<4} {:<8}\n", "l", "j", "H", "K"));
    for row in rows {
        s.push_str(&format!(
            "{:>6}  {:>3}  {:<4} {:<8}\n",
            row.ell, row.j, row.h, row.k
        ));
    }
    s
}
