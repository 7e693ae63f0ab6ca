use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{GroupId, WeylError};

/// Coxeter orders of a six-node diagram. Double-edge arrow directions are
/// not encoded; only the orders `m_ij` matter for braid relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub group: GroupId,
    /// Invariant divisor drawn next to each node; empty where the node is
    /// unlabeled.
    pub labels: [&'static str; 6],
    pub order_matrix: [[u8; 6]; 6],
}

impl CoxeterDiagram {
    fn from_edges(group: GroupId, labels: [&'static str; 6], single: &[(usize, usize)], double: &[(usize, usize)]) -> Self {
        let mut m = [[2u8; 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j) in single {
            m[i][j] = 3;
            m[j][i] = 3;
        }
        for &(i, j) in double {
            m[i][j] = 4;
            m[j][i] = 4;
        }
        CoxeterDiagram { group, labels, order_matrix: m }
    }

    pub fn m(&self, i: usize, j: usize) -> u8 {
        self.order_matrix[i][j]
    }

    /// Edges `(i, j, m_ij)` with `i < j` and `m_ij > 2`.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if self.order_matrix[i][j] > 2 {
                    e.push((i, j, self.order_matrix[i][j]));
                }
            }
        }
        e
    }

    pub fn is_well_formed(&self) -> bool {
        (0..6).all(|i| {
            self.order_matrix[i][i] == 1
                && (0..6).all(|j| {
                    self.order_matrix[i][j] == self.order_matrix[j][i]
                        && (i == j || (2..=4).contains(&self.order_matrix[i][j]))
                })
        })
    }

    pub fn type_name(&self) -> &'static str {
        match self.group {
            GroupId::D5 => "D5(1)",
            GroupId::B5a | GroupId::B5b => "B5(1)",
            GroupId::D62 => "D6(2)",
            GroupId::A1 => "A1(1)",
        }
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.group.as_str(), self.type_name())?;
        for (i, l) in self.labels.iter().enumerate() {
            let label: String = if l.is_empty() { "-".to_string() } else { l.to_string() };
            writeln!(f, "  node {i}: {label}")?;
        }
        for i in 0..6 {
            for j in i + 1..6 {
                writeln!(f, "  m({i},{j}) = {}", self.order_matrix[i][j])?;
            }
        }
        Ok(())
    }
}

pub fn get_diagram(group: GroupId) -> Result<CoxeterDiagram, WeylError> {
    Ok(match group {
        GroupId::D5 => CoxeterDiagram::from_edges(
            group,
            ["x", "x+1", "yw+1", "zq-1", "p", "p-t"],
            &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)],
            &[],
        ),
        GroupId::B5a => CoxeterDiagram::from_edges(
            group,
            ["", "x", "y+w", "zq-1", "p", "p-t"],
            &[(1, 2), (2, 3), (3, 4), (3, 5)],
            &[(0, 1)],
        ),
        GroupId::B5b => CoxeterDiagram::from_edges(
            group,
            ["x", "x+1", "yw+1", "z-q", "p", ""],
            &[(0, 2), (1, 2), (2, 3), (3, 4)],
            &[(4, 5)],
        ),
        GroupId::D62 => CoxeterDiagram::from_edges(
            group,
            ["", "x", "y+w", "z-q", "p", ""],
            &[(1, 2), (2, 3), (3, 4)],
            &[(0, 1), (4, 5)],
        ),
        GroupId::A1 => return Err(WeylError::UnknownGroup(group.as_str().to_string())),
    })
}
