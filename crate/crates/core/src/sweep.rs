//! Exhaustive parameter sweeps over prime fields.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{universal, AlgebraError, ParameterPoint};
use crate::group::{axis_involutions, bfs_closure, matrix_order, Analysis, GroupError};
use crate::linalg::{OrderOutcome, DEFAULT_ORDER_CUTOFF};
use crate::scalars::{is_prime_u64, ScalarError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error("unsupported characteristic {0}; sweeps need p >= 5")]
    UnsupportedCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for an exhaustive sweep")]
    TooLarge(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

impl From<ScalarError> for SweepError {
    fn from(e: ScalarError) -> Self {
        SweepError::Algebra(e.into())
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub p: u64,
    /// Fixed values for alpha, beta, gamma, psi; `None` ranges over F_p.
    pub fixed: [Option<u64>; 4],
    pub cutoff: usize,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl SweepOptions {
    pub fn new(p: u64, cutoff: usize) -> Self {
        SweepOptions { p, fixed: [None; 4], cutoff, jobs: 0 }
    }

    /// Parameter tuples in lexicographic order.
    pub fn points(&self) -> Vec<[u64; 4]> {
        let range = |k: usize| -> Vec<u64> {
            match self.fixed[k] {
                Some(v) => vec![v % self.p],
                None => (0..self.p).collect(),
            }
        };
        let mut out = Vec::new();
        for a in range(0) {
            for b in range(1) {
                for c in range(2) {
                    for d in range(3) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub p: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub psi: u64,
    pub ord_ab: OrderOutcome,
    pub ord_bc: OrderOutcome,
    pub ord_ac: OrderOutcome,
    pub ord_abc_conj: OrderOutcome,
    pub group: OrderOutcome,
    pub solvable: Option<bool>,
    pub perfect: Option<bool>,
    pub gram_rank: usize,
}

pub const CSV_HEADER: &str =
    "p,alpha,beta,gamma,psi,ord_ab,ord_bc,ord_ac,ord_abc_conj,group_outcome,group_order,solvable,perfect,gram_rank";

impl SweepRecord {
    pub fn csv_line(&self) -> String {
        let opt = |b: Option<bool>| b.map(|v| v.to_string()).unwrap_or_default();
        let (outcome, order) = match self.group {
            OrderOutcome::Order(n) => ("order".to_string(), n.to_string()),
            OrderOutcome::Exceeded(c) => (format!("exceeded({c})"), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.alpha,
            self.beta,
            self.gamma,
            self.psi,
            self.ord_ab,
            self.ord_bc,
            self.ord_ac,
            self.ord_abc_conj,
            outcome,
            order,
            opt(self.solvable),
            opt(self.perfect),
            self.gram_rank
        )
    }
}

pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}

fn check_prime(p: u64) -> Result<(), SweepError> {
    if p == 2 || p == 3 {
        return Err(SweepError::UnsupportedCharacteristic(p));
    }
    if !is_prime_u64(p) {
        return Err(SweepError::NotPrime(p));
    }
    if p >= 1 << 31 {
        return Err(SweepError::TooLarge(p));
    }
    Ok(())
}

/// Orders of the generator products, the group outcome and the Gram rank at one point.
pub fn sweep_point(p: u64, v: [u64; 4], cutoff: usize) -> Result<SweepRecord, SweepError> {
    check_prime(p)?;
    let point = ParameterPoint::prime_field(p, v.map(|x| x as i64))?;
    let table = point.specialize(universal())?;
    let t = axis_involutions(&point)?;
    let ord = |m| matrix_order(&m, DEFAULT_ORDER_CUTOFF);
    let report = bfs_closure(&t, cutoff, &Analysis { derived: true, center: false, histogram_samples: 0 })?;
    Ok(SweepRecord {
        p,
        alpha: v[0],
        beta: v[1],
        gamma: v[2],
        psi: v[3],
        ord_ab: ord(t[0].mul(&t[1])),
        ord_bc: ord(t[1].mul(&t[2])),
        ord_ac: ord(t[0].mul(&t[2])),
        ord_abc_conj: ord(t[0].mul(&t[2]).mul(&t[1]).mul(&t[2])),
        group: report.outcome(),
        solvable: report.solvable,
        perfect: report.perfect,
        gram_rank: table.gram_rank(),
    })
}

/// Runs every selected point on a pool of `jobs` workers; records come back
/// in lexicographic parameter order regardless of scheduling.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<SweepRecord>, SweepError> {
    check_prime(opts.p)?;
    let points = opts.points();
    let run = || points.par_iter().map(|&v| sweep_point(opts.p, v, opts.cutoff)).collect();
    if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| SweepError::Pool(e.to_string()))?
            .install(run)
    }
}

/// Orders of `tau_a tau_b` on the subalgebra `<a, b, ab>` for every alpha in F_p.
pub fn sweep_two_generated(p: u64) -> Result<Vec<OrderOutcome>, SweepError> {
    check_prime(p)?;
    crate::roots::finite_field_orders(p).map_err(|e| match e {
        crate::roots::RootsError::Algebra(a) => SweepError::Algebra(a),
        other => SweepError::Algebra(AlgebraError::ClosureFailure(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_rejected() {
        assert_eq!(sweep(&SweepOptions::new(3, 10)).unwrap_err(), SweepError::UnsupportedCharacteristic(3));
        assert_eq!(sweep(&SweepOptions::new(2, 10)).unwrap_err(), SweepError::UnsupportedCharacteristic(2));
        assert_eq!(sweep(&SweepOptions::new(9, 10)).unwrap_err(), SweepError::NotPrime(9));
    }

    #[test]
    fn filtered_points_are_lexicographic() {
        let mut o = SweepOptions::new(5, 10);
        o.fixed = [Some(3), None, Some(1), None];
        let pts = o.points();
        assert_eq!(pts.len(), 25);
        assert_eq!(pts[0], [3, 0, 1, 0]);
        assert_eq!(pts[1], [3, 0, 1, 1]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn psl27_point_record() {
        let r = sweep_point(5, [3, 3, 4, 4], 1000).unwrap();
        assert_eq!(r.group, OrderOutcome::Order(168));
        assert_eq!(r.gram_rank, 8);
        assert_eq!(r.perfect, Some(true));
        assert_eq!(
            r.csv_line().split(',').count(),
            CSV_HEADER.split(',').count()
        );
    }

    #[test]
    fn sweep_is_deterministic_across_job_counts() {
        let mut o = SweepOptions::new(5, 500);
        o.fixed = [Some(3), Some(3), None, None];
        o.jobs = 1;
        let a = to_csv(&sweep(&o).unwrap());
        o.jobs = 2;
        let b = to_csv(&sweep(&o).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 26);
    }

    #[test]
    fn two_generated_f7() {
        let orders: Vec<u64> = sweep_two_generated(7).unwrap().iter().map(|o| o.order().unwrap()).collect();
        assert_eq!(orders, crate::roots::F7_ORDERS.to_vec());
    }
}
