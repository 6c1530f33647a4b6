use crate::error::CombinatoricsError;
use crate::partition::Partition;

/// The real dimension `Σ ρ_j² − Σ π_j²` of the two-sided fiber attached to a
/// pair of nilpotent orbit types `π ≼ ρ` of the same total.  The formula is
/// evaluated for any pair with equal totals; it is nonnegative exactly when
/// `π` is dominated by `ρ`.
pub fn spaltenstein_dim(rho: &Partition, pi: &Partition) -> Result<i64, CombinatoricsError> {
    if rho.total() != pi.total() {
        return Err(CombinatoricsError::UnequalTotals {
            left: rho.total(),
            right: pi.total(),
        });
    }
    let square_sum = |q: &Partition| -> i64 { q.parts().iter().map(|&p| (p * p) as i64).sum() };
    Ok(square_sum(rho) - square_sum(pi))
}
