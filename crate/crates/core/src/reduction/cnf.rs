//! Restricted CNF instances: validation, DIMACS I/O, brute-force
//! satisfiability and a seeded generator.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Largest variable count accepted by the exhaustive satisfiability routines.
pub const MAX_BRUTEFORCE_VARIABLES: usize = 12;

/// A variable (0-based) with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// Signed 1-based DIMACS integer.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// Total truth assignment; `values[i]` is the value of variable `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    /// Bit `i` of `mask` is the value of variable `i`.
    pub fn from_mask(variable_count: usize, mask: u64) -> Self {
        Assignment((0..variable_count).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "T" } else { "F" })?;
        }
        Ok(())
    }
}

/// A violated occurrence restriction. Indices are 0-based; `Display` is
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoVariables,
    EmptyClause { clause: usize },
    ClauseTooLarge { clause: usize, size: usize },
    VariableOutOfRange { clause: usize, var: usize },
    RepeatedVariable { clause: usize, var: usize },
    PositiveOccurrences { var: usize, count: usize },
    NegativeOccurrences { var: usize, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn plural(count: usize) -> &'static str {
            if count == 1 {
                ""
            } else {
                "s"
            }
        }
        match *self {
            Violation::NoVariables => write!(f, "instance has no variables"),
            Violation::EmptyClause { clause } => write!(f, "clause {} is empty", clause + 1),
            Violation::ClauseTooLarge { clause, size } => {
                write!(f, "clause size {size} > 3 (clause {})", clause + 1)
            }
            Violation::VariableOutOfRange { clause, var } => {
                write!(
                    f,
                    "clause {}: variable {} out of range",
                    clause + 1,
                    var + 1
                )
            }
            Violation::RepeatedVariable { clause, var } => write!(
                f,
                "clause {}: variable {} occurs more than once",
                clause + 1,
                var + 1
            ),
            Violation::PositiveOccurrences { var, count } => write!(
                f,
                "variable {}: {count} positive occurrence{}, expected 2",
                var + 1,
                plural(count)
            ),
            Violation::NegativeOccurrences { var, count } => write!(
                f,
                "variable {}: {count} negative occurrence{}, expected 1",
                var + 1,
                plural(count)
            ),
        }
    }
}

/// Clauses (0-based indices) holding the occurrences of one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrences {
    /// The two clauses with the positive literal, ascending.
    pub positive: [usize; 2],
    /// The clause with the negative literal.
    pub negative: usize,
}

/// CNF instance intended to satisfy the occurrence restriction: clauses of
/// at most three literals; each variable positive in exactly two clauses and
/// negative in exactly one other clause.
///
/// Construction does not validate; call [`RestrictedCnf::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedCnf {
    variable_count: usize,
    clauses: Vec<Vec<Literal>>,
}

impl RestrictedCnf {
    pub fn new(variable_count: usize, clauses: Vec<Vec<Literal>>) -> Self {
        RestrictedCnf {
            variable_count,
            clauses,
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Every violated restriction; empty when the instance is valid.
    ///
    /// A variable occurring twice in one clause (with either polarity) is
    /// reported and that clause then counts once per polarity.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.variable_count == 0 {
            out.push(Violation::NoVariables);
        }
        let mut positive = vec![0usize; self.variable_count];
        let mut negative = vec![0usize; self.variable_count];
        for (j, clause) in self.clauses.iter().enumerate() {
            if clause.is_empty() {
                out.push(Violation::EmptyClause { clause: j });
            }
            if clause.len() > 3 {
                out.push(Violation::ClauseTooLarge {
                    clause: j,
                    size: clause.len(),
                });
            }
            let mut seen_pos = Vec::new();
            let mut seen_neg = Vec::new();
            let mut repeated = Vec::new();
            for lit in clause {
                if lit.var >= self.variable_count {
                    out.push(Violation::VariableOutOfRange {
                        clause: j,
                        var: lit.var,
                    });
                    continue;
                }
                if (seen_pos.contains(&lit.var) || seen_neg.contains(&lit.var))
                    && !repeated.contains(&lit.var)
                {
                    repeated.push(lit.var);
                    out.push(Violation::RepeatedVariable {
                        clause: j,
                        var: lit.var,
                    });
                }
                let (seen, counts) = if lit.positive {
                    (&mut seen_pos, &mut positive)
                } else {
                    (&mut seen_neg, &mut negative)
                };
                if !seen.contains(&lit.var) {
                    seen.push(lit.var);
                    counts[lit.var] += 1;
                }
            }
        }
        for var in 0..self.variable_count {
            if positive[var] != 2 {
                out.push(Violation::PositiveOccurrences {
                    var,
                    count: positive[var],
                });
            }
            if negative[var] != 1 {
                out.push(Violation::NegativeOccurrences {
                    var,
                    count: negative[var],
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            return Ok(());
        }
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::InvalidInstance(text.join("; ")))
    }

    /// Clause positions of `var`. Meaningful only for valid instances.
    pub fn occurrences(&self, var: usize) -> Occurrences {
        let mut positive = Vec::with_capacity(2);
        let mut negative = None;
        for (j, clause) in self.clauses.iter().enumerate() {
            for lit in clause.iter().filter(|l| l.var == var) {
                if lit.positive {
                    positive.push(j);
                } else {
                    negative = Some(j);
                }
            }
        }
        assert!(
            positive.len() == 2,
            "variable {var} is not positive in two clauses"
        );
        Occurrences {
            positive: [positive[0], positive[1]],
            negative: negative.expect("variable has a negative occurrence"),
        }
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| a.value(l.var) == l.positive))
    }

    /// All satisfying assignments, ordered by their bitmask.
    pub fn satisfying_assignments(&self) -> Result<Vec<Assignment>> {
        let n = self.variable_count;
        if n > MAX_BRUTEFORCE_VARIABLES {
            return Err(Error::TooLarge {
                size: n,
                limit: MAX_BRUTEFORCE_VARIABLES,
            });
        }
        Ok((0..1u64 << n)
            .map(|mask| Assignment::from_mask(n, mask))
            .filter(|a| self.is_satisfied_by(a))
            .collect())
    }

    /// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then signed 1-based literals with each clause closed by `0`.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        let mut last_line = 0;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                let fields: Vec<&str> = line.split_whitespace().collect();
                let [_, "cnf", vars, count] = fields[..] else {
                    return Err(Error::parse(
                        line_no,
                        "expected `p cnf <variables> <clauses>`",
                    ));
                };
                let vars: usize = vars
                    .parse()
                    .map_err(|_| Error::parse(line_no, "bad variable count"))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| Error::parse(line_no, "bad clause count"))?;
                header = Some((vars, count));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(Error::parse(line_no, "clause before problem line"));
            };
            for token in line.split_whitespace() {
                let value: i64 = token
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("not a literal: {token:?}")))?;
                if value == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = value.unsigned_abs() as usize - 1;
                if var >= vars {
                    return Err(Error::parse(
                        line_no,
                        format!("variable {} exceeds declared count {vars}", var + 1),
                    ));
                }
                current.push(Literal {
                    var,
                    positive: value > 0,
                });
            }
        }
        let Some((vars, count)) = header else {
            return Err(Error::parse(last_line.max(1), "missing problem line"));
        };
        if !current.is_empty() {
            return Err(Error::parse(
                last_line,
                "last clause is not terminated by 0",
            ));
        }
        if clauses.len() != count {
            return Err(Error::parse(
                last_line.max(1),
                format!("declared {count} clauses, found {}", clauses.len()),
            ));
        }
        Ok(RestrictedCnf::new(vars, clauses))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Seeded random restricted instance with `n` variables.
///
/// The clause count is drawn from `max(n, 3)..=3n`. The `3n` literal
/// occurrences are shuffled and dealt round-robin over the clauses; a clause
/// is skipped when it is full or already mentions the variable. A deal that
/// gets stuck or leaves a clause empty is discarded and redrawn.
pub fn random_restricted_cnf(n: usize, seed: u64) -> RestrictedCnf {
    assert!(n >= 1, "at least one variable");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = rng.random_range(n.max(3)..=3 * n);
        let mut occurrences: Vec<Literal> = (0..n)
            .flat_map(|v| [Literal::pos(v), Literal::pos(v), Literal::neg(v)])
            .collect();
        occurrences.shuffle(&mut rng);
        if let Some(clauses) = deal(&occurrences, m) {
            return RestrictedCnf::new(n, clauses);
        }
    }
}

fn deal(occurrences: &[Literal], m: usize) -> Option<Vec<Vec<Literal>>> {
    let mut clauses: Vec<Vec<Literal>> = vec![Vec::new(); m];
    let mut cursor = 0;
    for &lit in occurrences {
        let slot = (0..m)
            .map(|k| (cursor + k) % m)
            .find(|&j| clauses[j].len() < 3 && clauses[j].iter().all(|l| l.var != lit.var))?;
        clauses[slot].push(lit);
        cursor = (slot + 1) % m;
    }
    if clauses.iter().any(Vec::is_empty) {
        return None;
    }
    for clause in &mut clauses {
        clause.sort();
    }
    Some(clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{sample_cnf, single_variable_cnf};

    #[test]
    fn sample_is_valid() {
        assert!(sample_cnf().validate().is_empty());
        assert!(single_variable_cnf().validate().is_empty());
        let occ = sample_cnf().occurrences(1);
        assert_eq!(
            occ,
            Occurrences {
                positive: [0, 1],
                negative: 2
            }
        );
    }

    #[test]
    fn reports_violations() {
        let cnf = RestrictedCnf::new(
            1,
            vec![
                vec![Literal::pos(0)],
                vec![Literal::neg(0)],
                vec![Literal::neg(0)],
            ],
        );
        let text: Vec<String> = cnf.validate().iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            vec![
                "variable 1: 1 positive occurrence, expected 2",
                "variable 1: 2 negative occurrences, expected 1",
            ]
        );

        let big = RestrictedCnf::new(
            4,
            vec![vec![
                Literal::pos(0),
                Literal::pos(1),
                Literal::pos(2),
                Literal::pos(3),
            ]],
        );
        assert!(big
            .validate()
            .iter()
            .any(|v| v.to_string().starts_with("clause size 4 > 3")));

        let empty = RestrictedCnf::new(1, vec![vec![]]);
        assert!(empty
            .validate()
            .contains(&Violation::EmptyClause { clause: 0 }));
        assert!(RestrictedCnf::new(0, vec![])
            .validate()
            .contains(&Violation::NoVariables));

        // x1 and not-x1 in the same clause: the three clauses are not distinct.
        let same = RestrictedCnf::new(
            1,
            vec![
                vec![Literal::pos(0), Literal::neg(0)],
                vec![Literal::pos(0)],
            ],
        );
        assert!(same
            .validate()
            .contains(&Violation::RepeatedVariable { clause: 0, var: 0 }));
        let oob = RestrictedCnf::new(1, vec![vec![Literal::pos(3)]]);
        assert!(oob
            .validate()
            .contains(&Violation::VariableOutOfRange { clause: 0, var: 3 }));
    }

    #[test]
    fn brute_force_sat() {
        let sat = sample_cnf().satisfying_assignments().unwrap();
        // Needs some true and some false variable: 8 - 2 = 6 assignments.
        assert_eq!(sat.len(), 6);
        assert!(sat.contains(&Assignment(vec![true, false, true])));
        assert!(!sample_cnf().is_satisfied_by(&Assignment(vec![false; 3])));
        let big = random_restricted_cnf(13, 0);
        assert!(matches!(
            big.satisfying_assignments(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dimacs() {
        let text = "c sample\np cnf 3 3\n1 2 3 0\n1 2\n3 0\n-1 -2 -3 0\n";
        let cnf = RestrictedCnf::from_dimacs(text).unwrap();
        assert_eq!(cnf, sample_cnf());
        assert_eq!(cnf.to_dimacs(), "p cnf 3 3\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n");
        assert_eq!(RestrictedCnf::from_dimacs(&cnf.to_dimacs()).unwrap(), cnf);

        for bad in [
            "",
            "1 2 0\n",
            "p cnf 2 1\n1 3 0\n",
            "p cnf 2 2\n1 2 0\n",
            "p cnf 2 1\n1 2\n",
            "p dnf 2 1\n1 0\n",
            "p cnf 2 1\n1 x 0\n",
        ] {
            assert!(
                matches!(RestrictedCnf::from_dimacs(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn generator() {
        for n in 1..=12 {
            for seed in 0..20 {
                let cnf = random_restricted_cnf(n, seed);
                assert_eq!(cnf.validate(), vec![], "n={n} seed={seed}");
                assert_eq!(cnf.variable_count(), n);
            }
        }
        assert_eq!(random_restricted_cnf(5, 1), random_restricted_cnf(5, 1));
        assert_ne!(random_restricted_cnf(5, 1), random_restricted_cnf(5, 2));
    }
}
