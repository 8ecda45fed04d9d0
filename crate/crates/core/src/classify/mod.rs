//! Which cluster-tilted family a quiver belongs to.

mod e6;
mod type_a;
mod type_d;

use std::fmt;

pub use e6::{match_e6, templates as e6_templates, E6Match, E6Template};
pub use type_a::{check_mutation_class_a, connecting_vertices, is_mutation_class_a, AViolation};
pub use type_d::{
    classify_d, detect_type_i, detect_type_ii, detect_type_iii, detect_type_iv, DSubtype,
    DWitness,
};

use crate::error::{Error, Result};
use crate::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    TypeA,
    TypeD(DWitness),
    TypeE6(E6Match),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub kind: ClassKind,
    /// No oriented cycle.
    pub hereditary: bool,
}

impl ClassLabel {
    /// `A`, `D_I` .. `D_IV`, `E6`, `unknown`.
    pub fn tag(&self) -> String {
        match &self.kind {
            ClassKind::TypeA => "A".into(),
            ClassKind::TypeD(w) => format!("D_{}", w.subtype()),
            ClassKind::TypeE6(_) => "E6".into(),
            ClassKind::Unknown => "unknown".into(),
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.kind == ClassKind::Unknown
    }
}

impl fmt::Display for ClassLabel {
    /// One line: tag, then the witness.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())?;
        match &self.kind {
            ClassKind::TypeD(DWitness::I { a, b, c }) => write!(f, " a={a} b={b} c={c}"),
            ClassKind::TypeD(DWitness::II { a, b, c, d } | DWitness::III { a, b, c, d }) => {
                write!(f, " a={a} b={b} c={c} d={d}")
            }
            ClassKind::TypeD(DWitness::IV { cycle, spikes }) => {
                let cyc: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                let sp: Vec<String> = spikes
                    .iter()
                    .map(|s| s.map_or("-".to_string(), |v| v.to_string()))
                    .collect();
                write!(f, " cycle={} spikes={}", cyc.join(","), sp.join(","))
            }
            ClassKind::TypeE6(m) => {
                let map: Vec<String> = m.map.iter().map(|(a, b)| format!("{a}>{b}")).collect();
                write!(f, " template={} map={}", m.template, map.join(","))
            }
            ClassKind::TypeA | ClassKind::Unknown => Ok(()),
        }
    }
}

/// Type A, else type D, else E6, else unknown.
pub fn classify(q: &Quiver) -> Result<ClassLabel> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let kind = if is_mutation_class_a(q)? {
        ClassKind::TypeA
    } else if let Some(w) = classify_d(q) {
        ClassKind::TypeD(w)
    } else if let Some(m) = match_e6(q) {
        ClassKind::TypeE6(m)
    } else {
        ClassKind::Unknown
    };
    Ok(ClassLabel {
        kind,
        hereditary: q.is_acyclic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32, pairs: &[(u32, u32)]) -> Quiver {
        Quiver::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn dispatcher_examples() {
        let a4 = classify(&q(4, &[(1, 2), (2, 3), (3, 4)])).unwrap();
        assert_eq!((a4.kind, a4.hereditary), (ClassKind::TypeA, true));

        let cyc = classify(&q(3, &[(1, 2), (2, 3), (3, 1)])).unwrap();
        assert_eq!((cyc.kind, cyc.hereditary), (ClassKind::TypeA, false));

        let t21 = classify(&q(6, &[(2, 3), (3, 4), (4, 5), (5, 6), (6, 2), (1, 2)])).unwrap();
        assert_eq!(t21.tag(), "E6");
        assert!(!t21.hereditary);
        assert!(matches!(t21.kind, ClassKind::TypeE6(ref m) if m.template == 21));
    }

    #[test]
    fn label_line() {
        let l = classify(&q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])).unwrap();
        assert_eq!(l.to_string(), "D_IV cycle=1,2,3,4 spikes=-,-,-,-");
    }

    #[test]
    fn disconnected_input() {
        assert_eq!(classify(&q(3, &[(1, 2)])).unwrap_err(), Error::Disconnected);
    }
}
