//! Quasi-polynomial behaviour of `k -> det(z^k = x^a + y^b)` and the bounded
//! search for determinant-one Le-Yomdin data.

use wpsing::leyomdin::{conjecture2_scan, conjecture_scan};

fn main() -> wpsing::Result<()> {
    for (a, b) in [(2, 3), (2, 5), (3, 4), (2, 2)] {
        let s = conjecture_scan(a, b, 60)?;
        let fits: Vec<String> = s
            .fits
            .iter()
            .map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        println!("({a},{b}): period {:?}, fits [{}], consistent {}", s.period, fits.join(" | "), s.consistent);
    }
    let r = conjecture2_scan(5)?;
    println!("bound 5: {} data examined, {} candidates", r.examined, r.candidates.len());
    Ok(())
}
