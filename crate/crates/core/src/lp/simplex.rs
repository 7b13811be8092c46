//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Variables are nonnegative. Sizes here are a handful of variables and
//! constraints, so the tableau is rebuilt and reduced costs recomputed
//! freely.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Primal values; empty unless optimal.
    pub x: Vec<Q>,
    pub objective: Q,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<Q>) -> Self {
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        assert_eq!(coeffs.len(), self.objective.len(), "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn value(&self, x: &[Q]) -> Q {
        dot(&self.objective, x)
    }

    /// Exact feasibility check of a point.
    pub fn is_feasible(&self, x: &[Q]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.num_vars();
        let mut tab = Tableau::build(self);

        // Phase 1: maximize minus the sum of artificials.
        if tab.first_artificial < tab.cols {
            let obj: Vec<Q> = (0..tab.cols)
                .map(|j| {
                    if j >= tab.first_artificial {
                        -Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect();
            let all = vec![true; tab.cols];
            // Phase 1 is bounded above by zero.
            let ok = tab.optimize(&obj, &all);
            debug_assert!(ok);
            if tab.basic_value(&obj).is_negative() {
                return LpOutcome {
                    status: LpStatus::Infeasible,
                    x: Vec::new(),
                    objective: Q::zero(),
                };
            }
            tab.drive_out_artificials();
        }

        let sign = match self.sense {
            Sense::Maximize => Q::one(),
            Sense::Minimize => -Q::one(),
        };
        let obj: Vec<Q> = (0..tab.cols)
            .map(|j| {
                if j < n {
                    &self.objective[j] * &sign
                } else {
                    Q::zero()
                }
            })
            .collect();
        let allowed: Vec<bool> = (0..tab.cols).map(|j| j < tab.first_artificial).collect();
        if !tab.optimize(&obj, &allowed) {
            return LpOutcome {
                status: LpStatus::Unbounded,
                x: Vec::new(),
                objective: Q::zero(),
            };
        }
        let mut x = vec![Q::zero(); n];
        for (i, &b) in tab.basis.iter().enumerate() {
            if b < n {
                x[b] = tab.rhs(i).clone();
            }
        }
        let objective = self.value(&x);
        LpOutcome {
            status: LpStatus::Optimal,
            x,
            objective,
        }
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (p, q)| acc + p * q)
}

struct Tableau {
    /// Each row holds `cols` coefficients followed by the right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars();
        // Flip rows so every right-hand side is nonnegative.
        let normalized: Vec<(Vec<Q>, Relation, Q)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let slacks = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::Eq)
            .count();
        let artificials = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::Le)
            .count();
        let first_artificial = n + slacks;
        let cols = first_artificial + artificials;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_art) = (n, first_artificial);
        for (coeffs, rel, rhs) in normalized {
            let mut row = vec![Q::zero(); cols + 1];
            row[..n].clone_from_slice(&coeffs);
            row[cols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = Q::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -Q::one();
                    next_slack += 1;
                    row[next_art] = Q::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Q::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        Tableau {
            rows,
            basis,
            cols,
            first_artificial,
        }
    }

    fn rhs(&self, i: usize) -> &Q {
        &self.rows[i][self.cols]
    }

    fn basic_value(&self, obj: &[Q]) -> Q {
        self.basis
            .iter()
            .enumerate()
            .fold(Q::zero(), |acc, (i, &b)| acc + &obj[b] * self.rhs(i))
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj` over the allowed columns. Returns false if unbounded.
    fn optimize(&mut self, obj: &[Q], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(obj, j).is_positive()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn reduced_cost(&self, obj: &[Q], j: usize) -> Q {
        self.basis
            .iter()
            .enumerate()
            .fold(obj[j].clone(), |acc, (i, &b)| acc - &obj[b] * &self.rows[i][j])
    }

    /// Pivots zero-level artificials out of the basis; rows with no
    /// structural entry left are redundant and dropped.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn r(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36.
        let mut lp = LinearProgram::new(Sense::Maximize, vec![q(3), q(5)]);
        lp.add(vec![q(1), q(0)], Relation::Le, q(4));
        lp.add(vec![q(0), q(2)], Relation::Le, q(12));
        lp.add(vec![q(3), q(2)], Relation::Le, q(18));
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.x, vec![q(2), q(6)]);
        assert_eq!(out.objective, q(36));
        assert!(lp.is_feasible(&out.x));
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x + 2y, x + y = 3, x - y >= -1, x <= 5/2 -> x = 5/2, y = 1/2.
        let mut lp = LinearProgram::new(Sense::Minimize, vec![q(1), q(2)]);
        lp.add(vec![q(1), q(1)], Relation::Eq, q(3));
        lp.add(vec![q(1), q(-1)], Relation::Ge, q(-1));
        lp.add(vec![q(1), q(0)], Relation::Le, r(5, 2));
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.x, vec![r(5, 2), r(1, 2)]);
        assert_eq!(out.objective, r(7, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![q(1)]);
        lp.add(vec![q(1)], Relation::Ge, q(2));
        lp.add(vec![q(1)], Relation::Le, q(1));
        assert_eq!(lp.solve().status, LpStatus::Infeasible);

        let mut lp = LinearProgram::new(Sense::Maximize, vec![q(1), q(1)]);
        lp.add(vec![q(1), q(-1)], Relation::Le, q(1));
        assert_eq!(lp.solve().status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![q(1), q(0)]);
        lp.add(vec![q(1), q(1)], Relation::Eq, q(2));
        lp.add(vec![q(2), q(2)], Relation::Eq, q(4));
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.objective, q(2));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook rule; Bland terminates.
        let mut lp = LinearProgram::new(
            Sense::Maximize,
            vec![r(3, 4), q(-150), r(1, 50), q(-6)],
        );
        lp.add(vec![r(1, 4), q(-60), r(-1, 25), q(9)], Relation::Le, q(0));
        lp.add(vec![r(1, 2), q(-90), r(-1, 50), q(3)], Relation::Le, q(0));
        lp.add(vec![q(0), q(0), q(1), q(0)], Relation::Le, q(1));
        let out = lp.solve();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.objective, r(1, 20));
    }
}
