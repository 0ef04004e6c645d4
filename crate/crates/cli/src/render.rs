//! Output rendering: text tables, JSON documents, and CSV rows (CSV values
//! rounded to 12 significant digits; JSON carries full doubles).

use hyperspectra::closed_form::{EigKind, SurdSign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// 12 significant digits, for CSV cells.
pub fn sig12(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let formatted = format!("{v:.11e}");
    // strip exponent when it round-trips cleanly as a plain decimal
    match formatted.parse::<f64>() {
        Ok(x) if x.abs() >= 1e-4 && x.abs() < 1e12 => {
            let s = format!("{x}");
            if s.len() <= 18 {
                s
            } else {
                formatted
            }
        }
        _ => formatted,
    }
}

/// Human-readable form of a closed-form eigenvalue descriptor.
pub fn describe_kind(kind: &EigKind) -> String {
    match kind {
        EigKind::Rational { num, den } => {
            if *den == 1 {
                format!("{num}")
            } else {
                format!("{num}/{den}")
            }
        }
        EigKind::Surd { a, d, c, sign } => {
            let op = match sign {
                SurdSign::Plus => '+',
                SurdSign::Minus => '-',
            };
            match (a, c) {
                (0, 1) => format!("{op}√{d}"),
                (_, 1) => format!("{a}{op}√{d}"),
                _ => format!("({a}{op}√{d})/{c}"),
            }
        }
        EigKind::PolyRoot { poly, index } => {
            format!("root {} of degree-{} polynomial", index, poly.degree())
        }
    }
}
