//! Superisolated, Le-Yomdin and weighted Le-Yomdin determinants.

use wpsing::exactmath::det_exact;
use wpsing::leyomdin::{ly_det, si_det, si_intersection_matrix, wly_det, wly_intersection_matrix, WlyCurveData};
use wpsing::wproj::Weight3;

fn main() -> wpsing::Result<()> {
    for deltas in [vec![4], vec![2, 2], vec![1, 1, 2], vec![1, 1, 1, 1]] {
        let m = si_intersection_matrix(4, &deltas)?;
        println!("d = 4, {deltas:?}: si_det = {}, det(-A) = {}", si_det(4, &deltas)?, det_exact(&m.neg())?);
    }
    println!("d = 4, k = 4, [2, 2]: ly_det = {}", ly_det(4, 4, &[2, 2], &[])?);

    let w = Weight3::new(1, 2, 3)?;
    let data = WlyCurveData::new(w, 1, 12, [false; 3], vec![6, 6], vec![])?;
    let a = wly_intersection_matrix(&data);
    println!("weight (1,2,3), k = 1, two sextics: wly_det = {}, det(-A) = {}", wly_det(&data)?, det_exact(&a.neg())?);
    Ok(())
}
