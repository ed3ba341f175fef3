//! The three axis tangency points of `H_lambda` are collinear only for `lambda = 1`.

use wpsing::poly::{are_collinear, flex_tangency_points, CubeRoot};

fn main() -> wpsing::Result<()> {
    for l in CubeRoot::ALL {
        let p = flex_tangency_points(l)?;
        let shown: Vec<String> = p.iter().map(|q| format!("[{}:{}:{}]", q[0], q[1], q[2])).collect();
        println!("{l:?}: {} collinear = {}", shown.join(" "), are_collinear(&p[0], &p[1], &p[2])?);
    }
    Ok(())
}
