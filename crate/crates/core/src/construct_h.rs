//! Four-factor factorization of `H_2m = X(m, {±1}) ≀ K̄_2`.

use crate::digraph::{ensure_factorization, h_digraph, DirectedCycle, Factor, Factorization, Kind, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy)]
enum Dir {
    Up,
    Down,
}

// Layer of the vertex with index j on each of the eight cycles.
fn layer(cycle: usize, j: u32) -> u32 {
    let odd = j % 2 == 1;
    match cycle {
        0 => 0,
        1 => 1,
        2 => match j {
            0 => 0,
            1 | 2 => 1,
            _ => u32::from(!odd),
        },
        3 => 1 - layer(2, j),
        4 => match j {
            0 | 1 => 1,
            _ => u32::from(odd),
        },
        5 => 1 - layer(4, j),
        6 => u32::from(j != 1),
        7 => u32::from(j == 1),
        _ => unreachable!(),
    }
}

fn check_order(m: u32) -> Result<()> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::Unsupported { m, reason: "H construction needs odd m >= 5".into() });
    }
    Ok(())
}

/// The eight cycles `C^0..C^7`. Even-numbered cycles run through the indices in
/// increasing order, odd-numbered ones in decreasing order.
pub fn h_cycles(m: u32) -> Result<Vec<DirectedCycle>> {
    check_order(m)?;
    (0..8)
        .map(|c| {
            let dir = if c % 2 == 0 { Dir::Up } else { Dir::Down };
            let vs = (0..m)
                .map(|t| {
                    let j = match dir {
                        Dir::Up => t,
                        Dir::Down => (m - t) % m,
                    };
                    Vertex::new(layer(c, j), j, m)
                })
                .collect();
            DirectedCycle::new(vs)
        })
        .collect()
}

/// `{C^0 ∪ C^1, C^2 ∪ C^3, C^4 ∪ C^5, C^6 ∪ C^7}`, checked against `H_2m`.
pub fn h_factorization(m: u32) -> Result<Factorization> {
    let cycles = h_cycles(m)?;
    let factors = cycles.chunks(2).map(|pair| Factor::new(pair.to_vec())).collect();
    let fac = Factorization { kind: Kind::H, n: 2 * m as usize, cycle_length: m as usize, factors };
    ensure_factorization(&fac, &h_digraph(m)?)?;
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(c: &DirectedCycle) -> String {
        c.to_string()
    }

    #[test]
    fn printed_cycles_at_five() {
        let cs = h_cycles(5).unwrap();
        assert_eq!(tokens(&cs[0]), "x0 x1 x2 x3 x4");
        assert_eq!(tokens(&cs[2]), "x0 y1 y2 x3 y4");
        assert_eq!(tokens(&cs[1]), "y0 y4 y3 y2 y1");
    }

    #[test]
    fn printed_prefixes() {
        let m = 11;
        let cs = h_cycles(m).unwrap();
        let start = |c: &DirectedCycle, v: Vertex| {
            let p = c.vertices().iter().position(|w| *w == v).unwrap();
            let mut vs = c.vertices().to_vec();
            vs.rotate_left(p);
            vs.iter().take(5).map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        };
        assert_eq!(start(&cs[2], Vertex::x(0, m)), "x0 y1 y2 x3 y4");
        assert_eq!(start(&cs[3], Vertex::y(0, m)), "y0 x10 y9 x8 y7");
        assert_eq!(start(&cs[4], Vertex::y(0, m)), "y0 y1 x2 y3 x4");
        assert_eq!(start(&cs[5], Vertex::x(0, m)), "x0 y10 x9 y8 x7");
        assert_eq!(start(&cs[6], Vertex::y(0, m)), "y0 x1 y2 y3 y4");
        assert_eq!(start(&cs[7], Vertex::x(0, m)), "x0 x10 x9 x8 x7");
    }

    #[test]
    fn factor_counts() {
        let f = h_factorization(5).unwrap();
        assert_eq!(f.factors.len(), 4);
        assert_eq!(f.factors.iter().map(|f| f.arcs().len()).sum::<usize>(), 40);
        let f = h_factorization(49).unwrap();
        assert!(f.factors.iter().all(|f| f.cycles().iter().map(|c| c.len()).sum::<usize>() == 98));
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(h_cycles(4).is_err());
        assert!(h_cycles(3).is_err());
    }
}
