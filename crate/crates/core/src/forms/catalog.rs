//! Integer forms of class number one for which integer descent is supported.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{small_witness, witness_bound, QuadraticForm};
use crate::rings::Element;

pub const CATALOG_SCHEMA: &str = "quadrep.catalog/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignClass {
    /// Definite forms: the descent stops once `|m_s| = 1`.
    NegativeDefiniteLoop,
    /// Indefinite forms: the descent runs until `z_s = 0`.
    PositiveExtended,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormCatalogEntry {
    discriminant: i64,
    g: i64,
    h: i64,
    form: QuadraticForm,
    allowed_terminal_divisors: BTreeSet<i64>,
    sign_class: SignClass,
}

impl FormCatalogEntry {
    /// Builds an entry, checking that every divisor `d` divides `h` and that
    /// `d` or `−d` has a small proper representation.
    pub fn new(g: i64, h: i64, positive_divisors: &[i64]) -> Result<Self, String> {
        if g != 0 && g != 1 {
            return Err(format!("unsupported form shape g = {g}"));
        }
        let discriminant = g * g - 4 * h;
        let sign_class = match discriminant {
            d if d < 0 => SignClass::NegativeDefiniteLoop,
            d if d > 0 && (d as f64).sqrt().round().powi(2) as i64 != d => SignClass::PositiveExtended,
            d => return Err(format!("discriminant {d} is a square")),
        };
        let form = QuadraticForm::integer(g, h);
        let bound = witness_bound(&form);
        let mut allowed = BTreeSet::new();
        for &d in positive_divisors {
            if d <= 0 || h % d != 0 {
                return Err(format!("terminal divisor {d} does not divide h = {h}"));
            }
            let found = [d, -d].iter().any(|&t| small_witness(&form, &BigInt::from(t), bound).is_some());
            if !found {
                return Err(format!("no witness for ±{d} with bound {bound}"));
            }
            allowed.insert(d);
            allowed.insert(-d);
        }
        Ok(FormCatalogEntry { discriminant, g, h, form, allowed_terminal_divisors: allowed, sign_class })
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn allowed_terminal_divisors(&self) -> &BTreeSet<i64> {
        &self.allowed_terminal_divisors
    }

    pub fn allows(&self, d: &BigInt) -> bool {
        i64::try_from(d).map(|d| self.allowed_terminal_divisors.contains(&d)).unwrap_or(false)
    }

    pub fn sign_class(&self) -> SignClass {
        self.sign_class
    }

    /// The form as elements of ℤ, for callers that build inputs by hand.
    pub fn coefficients(&self) -> (Element, Element) {
        (Element::from(self.g), Element::from(self.h))
    }
}

const NEGATIVE: &[(i64, i64)] = &[(1, 1), (0, 1), (1, 2), (0, 2), (1, 3), (1, 5), (1, 11), (1, 17), (1, 41)];

const POSITIVE: &[(i64, i64, &[i64])] = &[
    (0, -2, &[1, 2]),
    (0, -3, &[1, 3]),
    (0, -6, &[1, 2, 3, 6]),
    (0, -7, &[1, 7]),
    (1, -1, &[1]),
    (1, -3, &[1, 3]),
    (1, -4, &[1, 2, 4]),
    (1, -7, &[1, 7]),
    (1, -9, &[1, 3, 9]),
    (1, -10, &[1, 2, 5, 10]),
    (1, -13, &[1, 13]),
    (1, -15, &[1, 3, 5, 15]),
];

/// Imaginary quadratic orders of class number one, ordered by `|Δ|`.
pub fn catalog_negative() -> &'static [FormCatalogEntry] {
    static CELL: OnceLock<Vec<FormCatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        NEGATIVE
            .iter()
            .map(|&(g, h)| FormCatalogEntry::new(g, h, &[1]).expect("negative catalog entry"))
            .collect()
    })
}

/// Real quadratic forms for which the extended descent is known to terminate,
/// with the terminal divisors it can produce.
pub fn catalog_positive() -> &'static [FormCatalogEntry] {
    static CELL: OnceLock<Vec<FormCatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        POSITIVE
            .iter()
            .map(|&(g, h, ds)| FormCatalogEntry::new(g, h, ds).expect("positive catalog entry"))
            .collect()
    })
}

pub fn lookup_discriminant(discriminant: i64) -> Option<&'static FormCatalogEntry> {
    catalog_negative()
        .iter()
        .chain(catalog_positive())
        .find(|e| e.discriminant == discriminant)
}

/// The principal form of a non-square discriminant `Δ ≡ 0, 1 (mod 4)` with
/// terminal divisors `{±1}`. Descent with it may fail; it is what the CLI
/// falls back to for discriminants outside the catalogs.
pub fn principal_entry(discriminant: i64) -> Option<FormCatalogEntry> {
    let (g, h) = match discriminant.rem_euclid(4) {
        0 => (0, -discriminant / 4),
        1 => (1, (1 - discriminant) / 4),
        _ => return None,
    };
    FormCatalogEntry::new(g, h, &[1]).ok()
}

/// The catalog entry for `discriminant`, or for positive discriminants
/// outside the catalog, the principal form with terminal divisors `{±1}`.
pub fn resolve_discriminant(discriminant: i64) -> Option<FormCatalogEntry> {
    lookup_discriminant(discriminant)
        .cloned()
        .or_else(|| if discriminant > 0 { principal_entry(discriminant) } else { None })
}

/// Like [`resolve_discriminant`], but only if `x² + gxy + hy²` is the form
/// the entry uses.
pub fn resolve_form(g: i64, h: i64) -> Option<FormCatalogEntry> {
    let disc = g.checked_mul(g)?.checked_sub(h.checked_mul(4)?)?;
    resolve_discriminant(disc).filter(|e| e.g == g && e.h == h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub discriminant: i64,
    pub g: i64,
    pub h: i64,
    pub allowed_terminal_divisors: Vec<i64>,
    pub sign_class: SignClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub schema: String,
    pub negative: Vec<CatalogEntryJson>,
    pub positive: Vec<CatalogEntryJson>,
}

impl From<&FormCatalogEntry> for CatalogEntryJson {
    fn from(e: &FormCatalogEntry) -> Self {
        CatalogEntryJson {
            discriminant: e.discriminant,
            g: e.g,
            h: e.h,
            allowed_terminal_divisors: e.allowed_terminal_divisors.iter().copied().collect(),
            sign_class: e.sign_class,
        }
    }
}

impl CatalogFile {
    pub fn builtin() -> Self {
        CatalogFile {
            schema: CATALOG_SCHEMA.to_string(),
            negative: catalog_negative().iter().map(Into::into).collect(),
            positive: catalog_positive().iter().map(Into::into).collect(),
        }
    }

    /// Rebuilds the entries, re-running the constructor checks.
    pub fn entries(&self) -> Result<Vec<FormCatalogEntry>, String> {
        self.negative
            .iter()
            .chain(&self.positive)
            .map(|j| {
                let positive: Vec<i64> = j.allowed_terminal_divisors.iter().copied().filter(|&d| d > 0).collect();
                let e = FormCatalogEntry::new(j.g, j.h, &positive)?;
                let listed: BTreeSet<i64> = j.allowed_terminal_divisors.iter().copied().collect();
                if e.discriminant != j.discriminant || e.sign_class != j.sign_class || e.allowed_terminal_divisors != listed {
                    return Err(format!("inconsistent entry for discriminant {}", j.discriminant));
                }
                Ok(e)
            })
            .collect()
    }
}

/// Pretty-printed JSON of the built-in catalogs.
pub fn catalog_json() -> String {
    serde_json::to_string_pretty(&CatalogFile::builtin()).expect("catalog serializes")
}

pub fn load_catalog_json(text: &str) -> Result<CatalogFile, String> {
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.schema != CATALOG_SCHEMA {
        return Err(format!("unsupported catalog schema {:?}", file.schema));
    }
    file.entries()?;
    Ok(file)
}
