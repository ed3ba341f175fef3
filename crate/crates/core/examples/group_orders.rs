//! Coset enumeration, abelianizations and S3 counts for the built-in groups.

use wpsing::fpgroups::{
    abelianization, conic_quotient_order, count_epimorphisms_to_s3, group_order, Builder, DEFAULT_MAX_COSETS,
};
use wpsing::wproj::CremonaParams;

fn main() -> wpsing::Result<()> {
    let tri = Builder::Triangle(2, 3, 5).presentation()?;
    println!("{tri}: order {:?}", group_order(&tri, DEFAULT_MAX_COSETS)?.index());

    for (alpha, beta) in [([1, 1, 1], [1, 1]), ([1, 1, 3], [2, 2]), ([1, 2, 3], [3, 1])] {
        let p = CremonaParams::new(alpha, beta)?;
        let g = Builder::ConicQuotient(p).presentation()?;
        let order = group_order(&g, DEFAULT_MAX_COSETS)?.index();
        println!("conic quotient {alpha:?};{beta:?}: order {order:?} (expected {})", conic_quotient_order(&p));
        println!("  cubic quotient abelianization {}", abelianization(&Builder::CubicQuotient(p).presentation()?));
    }

    let a = 2;
    let odd = count_epimorphisms_to_s3(&Builder::PresOdd(a).presentation()?)?;
    let cyc = count_epimorphisms_to_s3(&Builder::Cyclic(3 * a).presentation()?)?;
    println!("A = {a}: epimorphisms onto S3 from pres_odd {odd}, from Z/{} {cyc}", 3 * a);
    Ok(())
}
