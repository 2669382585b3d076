use std::fmt::Write as _;

use crate::reduction::{CnfFormula, Literal};

use super::{parse_num, syntax, IoError};

/// Parse a DIMACS `cnf` file whose clauses all have exactly three literals.
/// Clauses may span lines; a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, IoError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut start = 0;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        last = n;
        if l.starts_with('p') {
            if header.is_some() {
                return Err(syntax(n, "second problem line"));
            }
            let toks: Vec<&str> = l.split_whitespace().collect();
            let ["p", "cnf", v, c] = toks[..] else {
                return Err(syntax(n, "expected `p cnf <vars> <clauses>`"));
            };
            header = Some((parse_num(v, n, "variable count")?, parse_num(c, n, "clause count")?, n));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(syntax(n, "clause before problem line"));
        };
        for tok in l.split_whitespace() {
            let x: i64 = parse_num(tok, n, "literal")?;
            if x == 0 {
                if current.len() != 3 {
                    return Err(IoError::NotThreeSat { line: n, len: current.len() });
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
                continue;
            }
            let var = x.unsigned_abs() as usize;
            if var > vars {
                return Err(syntax(n, format!("variable {var} exceeds declared {vars}")));
            }
            if current.is_empty() {
                start = n;
            }
            current.push(Literal { var, positive: x > 0 });
        }
    }
    let (vars, count, hline) = header.ok_or_else(|| syntax(last.max(1), "missing problem line"))?;
    if !current.is_empty() {
        return Err(IoError::NotThreeSat { line: start, len: current.len() });
    }
    if clauses.len() != count {
        return Err(syntax(hline, format!("declared {count} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(vars, clauses).map_err(|e| syntax(hline, e.to_string()))
}

pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", phi.vars(), phi.clauses().len());
    for c in phi.clauses() {
        let _ = writeln!(s, "{} {} {} 0", c[0], c[1], c[2]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_clause() {
        let phi = parse_dimacs("p cnf 3 1\n1 -2 3 0").unwrap();
        assert_eq!(phi.vars(), 3);
        assert_eq!(phi.clauses(), &[[Literal::pos(1), Literal::neg(2), Literal::pos(3)]]);
    }

    #[test]
    fn comments_and_split_clauses() {
        let phi = parse_dimacs("c hello\np cnf 2 2\n1 2\n-1 0 c\n2 2 2 0\n%\n0\n");
        assert!(phi.is_err(), "a `c` token inside a clause line is a syntax error");
        let phi = parse_dimacs("c hello\np cnf 2 2\n1 2\n-1 0\n2 2 2 0\n%\n0\n").unwrap();
        assert_eq!(phi.clauses().len(), 2);
    }

    #[test]
    fn errors() {
        let e = parse_dimacs("p cnf 2 1\n1 2 0\n").unwrap_err();
        assert_eq!(e, IoError::NotThreeSat { line: 2, len: 2 });
        assert!(e.to_string().contains("not a 3SAT instance"));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 x 2 0\n"), Err(IoError::Syntax { line: 2, .. })));
        assert!(parse_dimacs("1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 2\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 1\n1 2 3\n").is_err());
        assert!(parse_dimacs("").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(vars in 1usize..6, raw in proptest::collection::vec((1usize..6, any::<bool>()), 3..18)) {
            let lits: Vec<Literal> = raw.into_iter().map(|(v, p)| Literal { var: (v - 1) % vars + 1, positive: p }).collect();
            let clauses: Vec<[Literal; 3]> = lits.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
            let phi = CnfFormula::new(vars, clauses).unwrap();
            let text = write_dimacs(&phi);
            prop_assert_eq!(parse_dimacs(&text).unwrap(), phi);
        }
    }
}
