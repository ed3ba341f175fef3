//! Hirzebruch-Jung expansions and the resolution bamboos of `1/d(1,q)`.

use wpsing::exactmath::hj_expansion;
use wpsing::plumbing::det_rational;
use wpsing::quotientsing::{bamboo_weights, normalize, resolve_bamboo, CyclicQuotient};

fn main() -> wpsing::Result<()> {
    for (d, a, b) in [(5, 1, 2), (7, 2, 3), (12, 1, 5), (9, 2, 4)] {
        let s = CyclicQuotient::new(d, a, b)?;
        let n = normalize(&s);
        let bamboo = resolve_bamboo(&n)?;
        println!(
            "1/{d}({a},{b}) ~ 1/{}(1,{}): {:?}, dual weights {:?}, det = {}",
            n.d(),
            n.q(),
            hj_expansion(n.d() as i64, n.q() as i64)?,
            bamboo_weights(&n.dual())?,
            det_rational(&bamboo)?
        );
    }
    Ok(())
}
