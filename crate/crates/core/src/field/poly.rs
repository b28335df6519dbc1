//! Dense polynomials over `F_p` as coefficient vectors, constant term first.
//! Only what modulus selection needs.

/// Remainder of `f` modulo the monic polynomial `g`.
fn rem_monic(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    while r.len() > dg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dg;
            for (k, &gk) in g[..dg].iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - lead) * gk) % p;
            }
        }
    }
    r
}

fn has_root(f: &[u64], p: u64) -> bool {
    (0..p).any(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `index`, constant term most significant.
fn monic_at(index: u64, deg: usize, p: u64) -> Vec<u64> {
    let mut c = vec![0; deg + 1];
    let mut n = index;
    for k in (0..deg).rev() {
        c[k] = n % p;
        n /= p;
    }
    c[deg] = 1;
    c
}

/// Irreducibility by trial division with every monic factor of degree at
/// most `deg / 2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    if has_root(f, p) {
        return false;
    }
    for k in 2..=deg / 2 {
        for n in 0..p.pow(k as u32) {
            let g = monic_at(n, k, p);
            if rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn smallest_irreducible(p: u64, deg: usize) -> Vec<u64> {
    (0..p.pow(deg as u32))
        .map(|n| monic_at(n, deg, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder() {
        // x^3 + 1 = (x + 1)(x^2 - x + 1) over any field
        assert_eq!(rem_monic(&[1, 0, 0, 1], &[1, 1], 5), vec![0]);
        assert_eq!(rem_monic(&[1, 0, 0, 1], &[0, 1], 5), vec![1]);
    }

    #[test]
    fn known_irreducibles() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // (x^2 + x + 1)^2 = x^4 + x^2 + 1 over F_2: no roots but reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert_eq!(smallest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }
}
