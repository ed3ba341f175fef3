//! The four-variable complete intersection family: graph determinants do not
//! depend on `dq` and equal `n2^(m-1)`.

use wpsing::bpfamily::{family4_analyze, Family4Input};

fn main() -> wpsing::Result<()> {
    for (n, b2) in [([2, 3, 5, 7], [1, 3]), ([2, 3, 5, 7], [2, 4]), ([3, 4, 5, 7], [3, 1]), ([2, 5, 7, 3], [2, 1])] {
        let a = family4_analyze(&Family4Input { n, b2, b3: [n[0], 0, 0] })?;
        let dets: Vec<String> = a.dq_scan(1..=6)?.into_iter().map(|(_, d)| d.to_string()).collect();
        println!("n = {n:?}, b2 = {b2:?}: m = {}, dets over dq = [{}], remark = {}, ZHS = {}", a.m, dets.join(","), a.det_remark, a.is_zhs);
    }
    Ok(())
}
