//! Weighted Cremona push of the conic and the cubic `H_1`.

use wpsing::poly::{catalog, cremona_push, CatalogCurve, CubeRoot};
use wpsing::wproj::CremonaParams;

fn main() -> wpsing::Result<()> {
    let conic = catalog(&CatalogCurve::Conic)?;
    let cubic = catalog(&CatalogCurve::HLambda(CubeRoot::One))?;
    for (alpha, beta) in [([1, 1, 1], [1, 1]), ([1, 2, 3], [3, 1]), ([1, 1, 3], [2, 2])] {
        let p = CremonaParams::new(alpha, beta)?;
        let f = cremona_push(&conic, &p)?;
        let g = cremona_push(&cubic, &p)?;
        println!("alpha = {alpha:?}, beta = {beta:?}");
        println!("  conic -> {f}");
        println!("  degrees: conic {:?}, cubic {:?}", f.weighted_homogeneous_degree(&p.alpha)?, g.weighted_homogeneous_degree(&p.alpha)?);
    }
    Ok(())
}
