//! Edge-functional topological indices.
//!
//! Sixteen invariants are covered: the four edge functionals `x+y`, `x·y`,
//! `x²+y²`, `√(x²+y²)` (first Zagreb, second Zagreb, forgotten, Sombor),
//! each evaluated on ordinary degrees or on Revan degrees, each summed or
//! multiplied over the edge set. Multiplicative indices are represented
//! exclusively by their natural logarithms: products over thousands of edges
//! overflow any fixed-width float, and ensemble statistics are taken on the
//! log anyway.
//!
//! A multiplicative index with a zero factor (possible only for Revan
//! variants when `δ = 0` and an edge endpoint attains `Δ`) is reported as
//! negative infinity with a `degenerate` flag, so ensemble code can exclude
//! and count it.

use crate::float;
use crate::graph::{DegreeProfile, Graph};
use crate::stats::CompensatedSum;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `F(x, y) = x + y`
    Zagreb1,
    /// `F(x, y) = x · y`
    Zagreb2,
    /// `F(x, y) = x² + y²`
    Forgotten,
    /// `F(x, y) = √(x² + y²)`
    Sombor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Ordinary vertex degrees `d_u`.
    Degree,
    /// Revan degrees `r_u = Δ + δ − d_u`.
    Revan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// Sum over edges.
    Sum,
    /// Product over edges, carried as a natural log.
    Product,
}

/// One of the sixteen `(family, variant, form)` index combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexKind {
    pub family: Family,
    pub variant: Variant,
    pub form: Form,
}

impl IndexKind {
    pub const fn new(family: Family, variant: Variant, form: Form) -> Self {
        Self {
            family,
            variant,
            form,
        }
    }

    /// Position within the 8-slot layout of its form: degree block first
    /// (Zagreb1, Zagreb2, Forgotten, Sombor), then the Revan block.
    pub fn slot(&self) -> usize {
        let family = match self.family {
            Family::Zagreb1 => 0,
            Family::Zagreb2 => 1,
            Family::Forgotten => 2,
            Family::Sombor => 3,
        };
        match self.variant {
            Variant::Degree => family,
            Variant::Revan => 4 + family,
        }
    }

    /// Conventional short name: `M1 M2 F SO / R1 R2 FR RSO` for sums,
    /// `Pi1 Pi2 FPi SOPi / R1Pi R2Pi FRPi RSOPi` for products.
    pub fn name(&self) -> &'static str {
        const SUM: [&str; 8] = ["M1", "M2", "F", "SO", "R1", "R2", "FR", "RSO"];
        const PRODUCT: [&str; 8] = [
            "Pi1", "Pi2", "FPi", "SOPi", "R1Pi", "R2Pi", "FRPi", "RSOPi",
        ];
        match self.form {
            Form::Sum => SUM[self.slot()],
            Form::Product => PRODUCT[self.slot()],
        }
    }

    /// Inverse of [`IndexKind::name`] (case-insensitive).
    pub fn from_name(name: &str) -> Option<IndexKind> {
        ALL_KINDS
            .iter()
            .copied()
            .find(|k| k.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const fn kinds_of_form(form: Form) -> [IndexKind; 8] {
    use Family::*;
    use Variant::*;
    [
        IndexKind::new(Zagreb1, Degree, form),
        IndexKind::new(Zagreb2, Degree, form),
        IndexKind::new(Forgotten, Degree, form),
        IndexKind::new(Sombor, Degree, form),
        IndexKind::new(Zagreb1, Revan, form),
        IndexKind::new(Zagreb2, Revan, form),
        IndexKind::new(Forgotten, Revan, form),
        IndexKind::new(Sombor, Revan, form),
    ]
}

/// The eight sum kinds, in slot order.
pub const SUM_KINDS: [IndexKind; 8] = kinds_of_form(Form::Sum);
/// The eight product kinds, in slot order.
pub const PRODUCT_KINDS: [IndexKind; 8] = kinds_of_form(Form::Product);
/// All sixteen kinds: sums first, then products.
pub const ALL_KINDS: [IndexKind; 16] = {
    let mut all = [SUM_KINDS[0]; 16];
    let mut i = 0;
    while i < 8 {
        all[i] = SUM_KINDS[i];
        all[8 + i] = PRODUCT_KINDS[i];
        i += 1;
    }
    all
};

/// All sixteen index values of one graph.
///
/// `sums` and `log_products` are laid out in slot order (see
/// [`IndexKind::slot`]). `log_products[i]` is negative infinity and
/// `degenerate[i]` is set when the product has a zero factor.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub sums: [f64; 8],
    pub log_products: [f64; 8],
    pub degenerate: [bool; 8],
}

impl IndexReport {
    /// Value of one index: the sum itself, or the log of the product.
    pub fn value(&self, kind: IndexKind) -> f64 {
        match kind.form {
            Form::Sum => self.sums[kind.slot()],
            Form::Product => self.log_products[kind.slot()],
        }
    }

    pub fn is_degenerate(&self, kind: IndexKind) -> bool {
        match kind.form {
            Form::Sum => false,
            Form::Product => self.degenerate[kind.slot()],
        }
    }
}

/// The six integer-valued edge sums, accumulated exactly in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSums {
    pub m1: u64,
    pub m2: u64,
    pub forgotten: u64,
    pub r1: u64,
    pub r2: u64,
    pub fr: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexError {
    /// The profile was not derived from the given graph.
    ProfileMismatch {
        graph_vertices: usize,
        profile_vertices: usize,
    },
    /// A sum was requested from a product kind or vice versa.
    WrongForm { expected: Form, got: Form },
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::ProfileMismatch {
                graph_vertices,
                profile_vertices,
            } => write!(
                f,
                "profile has {profile_vertices} vertices but graph has {graph_vertices}"
            ),
            IndexError::WrongForm { expected, got } => {
                write!(f, "expected a {expected:?}-form kind, got {got:?}")
            }
        }
    }
}

impl core::error::Error for IndexError {}

fn check_profile(g: &Graph, profile: &DegreeProfile) -> Result<(), IndexError> {
    if g.vertex_count() != profile.vertex_count() {
        return Err(IndexError::ProfileMismatch {
            graph_vertices: g.vertex_count(),
            profile_vertices: profile.vertex_count(),
        });
    }
    Ok(())
}

fn values_of(profile: &DegreeProfile, variant: Variant) -> &[u32] {
    match variant {
        Variant::Degree => profile.degrees(),
        Variant::Revan => profile.revan(),
    }
}

/// Integer edge functional for the non-Sombor families.
fn int_factor(family: Family, x: u64, y: u64) -> u64 {
    match family {
        Family::Zagreb1 => x + y,
        Family::Zagreb2 => x * y,
        Family::Forgotten => x * x + y * y,
        Family::Sombor => unreachable!("Sombor factor is not integer-valued"),
    }
}

/// Sum-form index `Σ_{uv∈E} F(x_u, x_v)`.
///
/// Integer families accumulate in `u64` and convert at the end; the Sombor
/// families use compensated floating-point summation.
pub fn edge_sum(g: &Graph, profile: &DegreeProfile, kind: IndexKind) -> Result<f64, IndexError> {
    if kind.form != Form::Sum {
        return Err(IndexError::WrongForm {
            expected: Form::Sum,
            got: kind.form,
        });
    }
    check_profile(g, profile)?;
    let values = values_of(profile, kind.variant);
    match kind.family {
        Family::Sombor => {
            let mut acc = CompensatedSum::new();
            for &(u, v) in g.edges() {
                let x = values[u as usize] as u64;
                let y = values[v as usize] as u64;
                acc.add(float::sqrt((x * x + y * y) as f64));
            }
            Ok(acc.total())
        }
        family => {
            let mut acc = 0u64;
            for &(u, v) in g.edges() {
                let x = values[u as usize] as u64;
                let y = values[v as usize] as u64;
                acc += int_factor(family, x, y);
            }
            Ok(acc as f64)
        }
    }
}

/// Log of the product-form index `Π_{uv∈E} F(x_u, x_v)`, with a degeneracy
/// flag raised when some factor is exactly zero (value is then `-inf`).
///
/// The empty product is 1, so the edgeless graph reports 0 and no
/// degeneracy. The Sombor log-product is computed as exactly half the
/// forgotten log-product, since each factor is the square root of the
/// other's.
pub fn edge_log_product(
    g: &Graph,
    profile: &DegreeProfile,
    kind: IndexKind,
) -> Result<(f64, bool), IndexError> {
    if kind.form != Form::Product {
        return Err(IndexError::WrongForm {
            expected: Form::Product,
            got: kind.form,
        });
    }
    check_profile(g, profile)?;
    let values = values_of(profile, kind.variant);
    let int_family = match kind.family {
        Family::Sombor => Family::Forgotten,
        other => other,
    };
    let mut acc = CompensatedSum::new();
    let mut degenerate = false;
    for &(u, v) in g.edges() {
        let x = values[u as usize] as u64;
        let y = values[v as usize] as u64;
        let factor = int_factor(int_family, x, y);
        if factor == 0 {
            degenerate = true;
        } else {
            acc.add(float::ln(factor as f64));
        }
    }
    if degenerate {
        return Ok((f64::NEG_INFINITY, true));
    }
    let total = acc.total();
    match kind.family {
        Family::Sombor => Ok((0.5 * total, false)),
        _ => Ok((total, false)),
    }
}

/// The six integer sums of one graph, exact in `u64`.
pub fn exact_sums(g: &Graph, profile: &DegreeProfile) -> Result<ExactSums, IndexError> {
    check_profile(g, profile)?;
    let d = profile.degrees();
    let r = profile.revan();
    let mut sums = ExactSums {
        m1: 0,
        m2: 0,
        forgotten: 0,
        r1: 0,
        r2: 0,
        fr: 0,
    };
    for &(u, v) in g.edges() {
        let (du, dv) = (d[u as usize] as u64, d[v as usize] as u64);
        let (ru, rv) = (r[u as usize] as u64, r[v as usize] as u64);
        sums.m1 += du + dv;
        sums.m2 += du * dv;
        sums.forgotten += du * du + dv * dv;
        sums.r1 += ru + rv;
        sums.r2 += ru * rv;
        sums.fr += ru * ru + rv * rv;
    }
    Ok(sums)
}

/// All sixteen indices in one pass over the edge list.
pub fn full_report(g: &Graph) -> IndexReport {
    let profile = g.degree_profile();
    full_report_with_profile(g, &profile).expect("profile derived from the same graph")
}

/// As [`full_report`], reusing an already-computed profile.
pub fn full_report_with_profile(
    g: &Graph,
    profile: &DegreeProfile,
) -> Result<IndexReport, IndexError> {
    check_profile(g, profile)?;
    let d = profile.degrees();
    let r = profile.revan();

    let mut int_sums = [0u64; 6]; // M1, M2, F, R1, R2, FR
    let mut so = CompensatedSum::new();
    let mut rso = CompensatedSum::new();
    // Log accumulators: Pi1, Pi2, FPi, R1Pi, R2Pi, FRPi. The Sombor product
    // logs are derived as half the forgotten ones after the pass.
    let mut logs = [CompensatedSum::new(); 6];
    let mut zero_factor = [false; 6];

    for &(u, v) in g.edges() {
        let (du, dv) = (d[u as usize] as u64, d[v as usize] as u64);
        let (ru, rv) = (r[u as usize] as u64, r[v as usize] as u64);

        let d_sum = du + dv;
        let d_prod = du * dv;
        let d_sq = du * du + dv * dv;
        let r_sum = ru + rv;
        let r_prod = ru * rv;
        let r_sq = ru * ru + rv * rv;

        int_sums[0] += d_sum;
        int_sums[1] += d_prod;
        int_sums[2] += d_sq;
        int_sums[3] += r_sum;
        int_sums[4] += r_prod;
        int_sums[5] += r_sq;

        so.add(float::sqrt(d_sq as f64));
        rso.add(float::sqrt(r_sq as f64));

        for (i, factor) in [d_sum, d_prod, d_sq, r_sum, r_prod, r_sq].into_iter().enumerate() {
            if factor == 0 {
                zero_factor[i] = true;
            } else {
                logs[i].add(float::ln(factor as f64));
            }
        }
    }

    let log_value = |i: usize, half: bool| -> f64 {
        if zero_factor[i] {
            f64::NEG_INFINITY
        } else if half {
            0.5 * logs[i].total()
        } else {
            logs[i].total()
        }
    };

    Ok(IndexReport {
        sums: [
            int_sums[0] as f64,
            int_sums[1] as f64,
            int_sums[2] as f64,
            so.total(),
            int_sums[3] as f64,
            int_sums[4] as f64,
            int_sums[5] as f64,
            rso.total(),
        ],
        log_products: [
            log_value(0, false),
            log_value(1, false),
            log_value(2, false),
            log_value(2, true),
            log_value(3, false),
            log_value(4, false),
            log_value(5, false),
            log_value(5, true),
        ],
        degenerate: [
            zero_factor[0],
            zero_factor[1],
            zero_factor[2],
            zero_factor[2],
            zero_factor[3],
            zero_factor[4],
            zero_factor[5],
            zero_factor[5],
        ],
    })
}
