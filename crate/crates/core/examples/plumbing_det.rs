//! Determinants of plumbing graphs: E8, a star with quotient points, and a
//! graph whose self-intersections are solved from multiplicities.

use wpsing::exactmath::{int, rat};
use wpsing::plumbing::{
    classify_link, det_rational, det_singularity, e8_graph, resolve_quotient_point, solve_self_intersections,
    PlumbingGraph, Vertex,
};

fn main() -> wpsing::Result<()> {
    let e8 = e8_graph();
    let link = classify_link(&e8)?;
    println!("E8: det = {}, rank H1 = {}, ZHS = {}", det_rational(&e8)?, link.rank_h1, link.is_zhs);

    let mut star = PlumbingGraph::default();
    star.add_vertex(Vertex::rational(-rat(1, 30)).with_points(&[2, 3, 5]));
    println!("star -1/30 with points 2,3,5: det = {}", det_singularity(&star)?);
    let spliced = resolve_quotient_point(&star, 0, 2, 1)?;
    println!("after resolving the order-5 point: {} vertices, det(-A) = {}", spliced.vertices.len(), det_rational(&spliced)?);

    let mut g = PlumbingGraph::default();
    g.add_vertex(Vertex::unknown(0, int(2), int(1)));
    g.add_vertex(Vertex::unknown(0, int(1), int(0)));
    g.add_edge(0, 1, int(1));
    let s = solve_self_intersections(&g)?;
    let selfs: Vec<String> = s.vertices.iter().map(|v| v.self_intersection.as_ref().unwrap().to_string()).collect();
    println!("solved self-intersections {selfs:?}, det = {}", det_rational(&s)?);
    Ok(())
}
