use super::word::GroupPresentation;
use crate::error::{Error, Result};

type Perm = [u8; 3];

const S3: [Perm; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
const ID: Perm = [0, 1, 2];

fn compose(p: &Perm, q: &Perm) -> Perm {
    [q[p[0] as usize], q[p[1] as usize], q[p[2] as usize]]
}

fn inverse(p: &Perm) -> Perm {
    let mut r = [0; 3];
    for i in 0..3 {
        r[p[i] as usize] = i as u8;
    }
    r
}

fn power(p: &Perm, e: i64) -> Perm {
    let base = if e < 0 { inverse(p) } else { *p };
    (0..e.unsigned_abs() % 6).fold(ID, |acc, _| compose(&acc, &base))
}

fn generates_s3(images: &[Perm]) -> bool {
    let mut group = vec![ID];
    let mut i = 0;
    while i < group.len() {
        for g in images {
            let h = compose(&group[i], g);
            if !group.contains(&h) {
                group.push(h);
            }
        }
        i += 1;
    }
    group.len() == 6
}

/// Number of surjective homomorphisms onto the symmetric group on three
/// letters, by trying all `6^n` generator images (`n <= 6`).
pub fn count_epimorphisms_to_s3(p: &GroupPresentation) -> Result<u64> {
    let n = p.ngens();
    if n > 6 {
        return Err(Error::arg(format!("at most 6 generators supported, got {n}")));
    }
    let mut count = 0;
    let mut images = vec![ID; n];
    for code in 0..6usize.pow(n as u32) {
        let mut c = code;
        for im in images.iter_mut() {
            *im = S3[c % 6];
            c /= 6;
        }
        let kills = p.relators().iter().all(|r| {
            r.pairs().iter().fold(ID, |acc, &(g, e)| compose(&acc, &power(&images[g], e))) == ID
        });
        if kills && generates_s3(&images) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::parse_presentation;

    fn count(text: &str) -> u64 {
        count_epimorphisms_to_s3(&parse_presentation(text).unwrap()).unwrap()
    }

    #[test]
    fn s3_itself() {
        // |Aut(S3)| = 6
        assert_eq!(count("<a, b | a^2, b^3, (a*b)^2>"), 6);
        assert_eq!(count("<a, b>"), 18);
        assert_eq!(count("<a | a^6>"), 0);
        assert_eq!(count("<a, b | a^2, b^3, (a*b)^5>"), 0);
    }

    #[test]
    fn too_many_generators() {
        let p = parse_presentation("<a,b,c,d,e,f,g>").unwrap();
        assert!(count_epimorphisms_to_s3(&p).is_err());
    }
}
