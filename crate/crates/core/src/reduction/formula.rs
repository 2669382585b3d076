//! 3-CNF formulas and assignments.

use std::fmt;

use super::ReductionError;

/// A literal over variable `var` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// Value under `b`; a variable outside `b` keeps its polarity bit.
    pub fn eval(&self, b: &[bool]) -> bool {
        match b.get(self.var.wrapping_sub(1)) {
            Some(&v) => v == self.positive,
            None => self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.var)
        } else {
            write!(f, "-{}", self.var)
        }
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Clause>) -> Result<Self, ReductionError> {
        if vars == 0 {
            return Err(ReductionError::NoVariables);
        }
        if clauses.is_empty() {
            return Err(ReductionError::NoClauses);
        }
        for lit in clauses.iter().flatten() {
            if lit.var == 0 || lit.var > vars {
                return Err(ReductionError::VariableOutOfRange { var: lit.var, vars });
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    /// No validation: literals may name variables beyond `vars`.
    pub(crate) fn unchecked(vars: usize, clauses: Vec<Clause>) -> Self {
        CnfFormula { vars, clauses }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn clause_values(&self, b: &[bool]) -> Vec<bool> {
        self.clauses.iter().map(|c| c.iter().any(|l| l.eval(b))).collect()
    }

    pub fn eval(&self, b: &[bool]) -> bool {
        self.clause_values(b).into_iter().all(|v| v)
    }

    /// First satisfying assignment in counting order, by brute force.
    pub fn satisfying_assignment(&self) -> Option<Vec<bool>> {
        all_assignments(self.vars).find(|b| self.eval(b))
    }

    pub fn is_satisfiable(&self) -> bool {
        self.satisfying_assignment().is_some()
    }

    pub(crate) fn check_assignment(&self, b: &[bool]) -> Result<(), ReductionError> {
        if b.len() != self.vars {
            return Err(ReductionError::AssignmentLength { expected: self.vars, got: b.len() });
        }
        Ok(())
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({} {} {})", c[0], c[1], c[2]))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All `2^m` assignments; bit `i` of the counter is variable `i + 1`.
pub fn all_assignments(m: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!(m < 32, "too many variables to enumerate");
    (0u32..1 << m).map(move |k| (0..m).map(|i| k >> i & 1 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CnfFormula::new(0, vec![]).is_err());
        assert!(CnfFormula::new(2, vec![]).is_err());
        let c = [Literal::pos(1), Literal::neg(3), Literal::pos(2)];
        assert_eq!(
            CnfFormula::new(2, vec![c]),
            Err(ReductionError::VariableOutOfRange { var: 3, vars: 2 })
        );
    }

    #[test]
    fn brute_force_sat() {
        let a = CnfFormula::new(1, vec![[Literal::pos(1); 3], [Literal::neg(1); 3]]).unwrap();
        assert!(!a.is_satisfiable());
        let b = CnfFormula::new(2, vec![[Literal::pos(1), Literal::neg(2), Literal::neg(2)]]).unwrap();
        assert_eq!(b.satisfying_assignment(), Some(vec![false, false]));
        assert_eq!(all_assignments(3).count(), 8);
    }
}
