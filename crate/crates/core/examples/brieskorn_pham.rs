//! Brieskorn-Pham singularities `x^a + y^b + z^c` with small exponents.

use wpsing::bpfamily::{bp_analyze, pairwise_coprime};

fn main() -> wpsing::Result<()> {
    println!("{:>10} {:>8} {:>6} {:>5} {:>5}", "exponents", "det", "genus", "QHS", "ZHS");
    for n in [[2, 3, 5], [2, 3, 7], [2, 3, 6], [2, 4, 6], [3, 3, 3], [2, 2, 7], [4, 6, 9], [5, 7, 11]] {
        let a = bp_analyze(n[0], n[1], n[2])?;
        println!(
            "{:>10} {:>8} {:>6} {:>5} {:>5}{}",
            format!("{},{},{}", n[0], n[1], n[2]),
            a.det,
            a.exceptional_genus,
            a.is_qhs,
            a.is_zhs,
            if pairwise_coprime(&n) { "  (pairwise coprime)" } else { "" }
        );
    }
    Ok(())
}
