//! Normalization, singular points and Bezout numbers on weighted planes.

use wpsing::wproj::{bezout, normalize_weight, quasi_smooth_genus, stratify, vertex_singularities, Weight3};

fn main() -> wpsing::Result<()> {
    for e in [[1, 1, 1], [1, 2, 3], [2, 3, 5], [6, 10, 15], [4, 6, 9]] {
        let w = Weight3::new(e[0], e[1], e[2])?;
        let n = normalize_weight(&w);
        println!("weight {e:?}: d = {:?}, alpha = {:?}", n.d, n.alpha);
        let strata = stratify(&w);
        println!("  {} strata", strata.strata.len());
        if n.d == [1, 1, 1] {
            for (i, s) in vertex_singularities(e)?.iter().enumerate() {
                println!("  vertex {i}: {s}");
            }
            let deg = e.iter().product::<u64>();
            println!("  genus of a quasi-smooth curve of degree {deg}: {}", quasi_smooth_genus(deg as i64, e));
            println!("  Bezout({deg},{deg}) = {}", bezout(deg, deg, &w));
        }
    }
    Ok(())
}
