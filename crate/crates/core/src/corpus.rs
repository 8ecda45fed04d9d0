//! Built-in quiver families.

use crate::quiver::Quiver;

fn build(n: u32, pairs: &[(u32, u32)]) -> Quiver {
    Quiver::from_pairs(n, pairs).expect("generated quivers are valid")
}

/// `1 -> 2 -> ... -> n`.
pub fn linear_a(n: u32) -> Quiver {
    let pairs: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    build(n, &pairs)
}

/// The line on `n` vertices with arrow `i -- i+1` reversed iff bit `i - 1`
/// of `mask` is set.
pub fn oriented_a(n: u32, mask: u32) -> Quiver {
    let pairs: Vec<(u32, u32)> = (1..n)
        .map(|i| if mask >> (i - 1) & 1 == 0 { (i, i + 1) } else { (i + 1, i) })
        .collect();
    build(n, &pairs)
}

/// Every orientation of the line on `n` vertices.
pub fn all_orientations_a(n: u32) -> Vec<Quiver> {
    (0..1u32 << n.saturating_sub(1)).map(|m| oriented_a(n, m)).collect()
}

/// `D_n`: `1 -> ... -> n-1` with an extra arrow `n-2 -> n`.
pub fn d_seed(n: u32) -> Quiver {
    assert!(n >= 4, "D_n needs n >= 4");
    let mut pairs: Vec<(u32, u32)> = (1..n - 1).map(|i| (i, i + 1)).collect();
    pairs.push((n - 2, n));
    build(n, &pairs)
}

/// `E_6`: the line `1 -> ... -> 5` with `3 -> 6`.
pub fn e6_seed() -> Quiver {
    build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
}

/// A tail `1 -> ... -> n -> a` into the 3-cycle `a -> b -> c -> a`, with
/// `a, b, c = n+1, n+2, n+3`.
pub fn lineal_freecycle(n: u32) -> Quiver {
    let (a, b, c) = (n + 1, n + 2, n + 3);
    let mut pairs: Vec<(u32, u32)> = (1..=n).map(|i| (i, i + 1)).collect();
    pairs.extend([(a, b), (b, c), (c, a)]);
    build(n + 3, &pairs)
}

/// A 3-cycle `1 -> 2 -> 5 -> 1` with `2 -> 3 <- 4`.
pub fn sink_source_example() -> Quiver {
    build(5, &[(1, 2), (2, 5), (5, 1), (2, 3), (4, 3)])
}

/// The 3-cycle `2 -> 3 -> 5 -> 2` with `2 -> 1`, `3 -> 4`, `5 -> 6`.
pub fn mutation_pair_first() -> Quiver {
    build(6, &[(2, 1), (2, 3), (3, 5), (5, 2), (3, 4), (5, 6)])
}

/// The 3-cycle `1 -> 2 -> 5 -> 1` with the tail `2 -> 3 -> 4 -> 6`.
pub fn mutation_pair_second() -> Quiver {
    build(6, &[(1, 2), (2, 5), (5, 1), (2, 3), (3, 4), (4, 6)])
}

/// A 20-vertex quiver with four 3-cycles and vanishing Frobenius dimension.
pub fn big_example() -> Quiver {
    build(
        20,
        &[
            (2, 1),
            (2, 16),
            (3, 2),
            (4, 3),
            (5, 4),
            (5, 6),
            (6, 10),
            (6, 7),
            (7, 8),
            (8, 14),
            (8, 9),
            (16, 17),
            (16, 3),
            (10, 5),
            (10, 11),
            (14, 7),
            (11, 12),
            (15, 14),
            (19, 18),
            (18, 11),
            (20, 15),
            (12, 18),
            (12, 13),
        ],
    )
}

/// Vertex numbering shared by the type D_II and D_III families.
const A: u32 = 1;
const B: u32 = 2;
const C: u32 = 3;
const D: u32 = 4;

struct Builder {
    next: u32,
    pairs: Vec<(u32, u32)>,
}

impl Builder {
    fn new(pairs: &[(u32, u32)]) -> Self {
        Builder {
            next: 5,
            pairs: pairs.to_vec(),
        }
    }

    fn fresh(&mut self) -> u32 {
        let v = self.next;
        self.next += 1;
        v
    }

    /// `from -> v1 -> ... -> vlen`.
    fn chain(&mut self, from: u32, len: u32) {
        let mut prev = from;
        for _ in 0..len {
            let v = self.fresh();
            self.pairs.push((prev, v));
            prev = v;
        }
    }

    /// The 3-cycle `at -> x -> y -> at` with `x` and `y` extended by chains
    /// of `x_len` and `y_len` further arrows.
    fn triangle(&mut self, at: u32, x_len: u32, y_len: u32) {
        let x = self.fresh();
        let y = self.fresh();
        self.pairs.extend([(at, x), (x, y), (y, at)]);
        self.chain(x, x_len);
        self.chain(y, y_len);
    }

    fn finish(self) -> Quiver {
        build(self.next - 1, &self.pairs)
    }
}

/// The D_II core `c -> b -> d`, `c -> a -> d`, `d -> c` on `a, b, c, d = 1..4`
/// with the 3-cycle `c -> x1 -> y1 -> c`, the chain `x1 -> ... -> xm` and
/// the chain `y1 -> ... -> yn`.
pub fn d_ii_example(n: u32, m: u32) -> Quiver {
    assert!(n >= 1 && m >= 1, "chains have at least one vertex");
    let mut b = Builder::new(&[(C, B), (B, D), (C, A), (A, D), (D, C)]);
    let x1 = b.fresh();
    b.chain(x1, m - 1);
    let y1 = b.fresh();
    b.pairs.extend([(C, x1), (x1, y1), (y1, C)]);
    b.chain(y1, n - 1);
    b.finish()
}

/// The D_III square `c -> b -> d -> a -> c` on `a, b, c, d = 1..4`.
pub fn d_iii_square() -> Quiver {
    build(4, &[(C, B), (B, D), (D, A), (A, C)])
}

/// The square with a 3-cycle hanging at `c` and at `d`; `tails` gives the
/// extra chain lengths on the two far vertices of each 3-cycle.
pub fn d_iii_with_tails(tails: [u32; 4]) -> Quiver {
    let mut b = Builder::new(&[(C, B), (B, D), (D, A), (A, C)]);
    b.triangle(C, tails[0], tails[1]);
    b.triangle(D, tails[2], tails[3]);
    b.finish()
}

/// The square with 3-cycles at `c` and `d` each carrying one extra vertex on
/// both far corners.
pub fn d_iii_example() -> Quiver {
    d_iii_with_tails([1, 1, 1, 1])
}

/// Central cycle `1 -> 2 -> ... -> k -> 1`; bit `i` of `mask` adds a spike
/// on the arrow leaving vertex `i + 1`.
pub fn d_iv(k: u32, mask: u32) -> Quiver {
    let mut pairs: Vec<(u32, u32)> = (1..=k).map(|i| (i, i % k + 1)).collect();
    let mut next = k + 1;
    for i in 1..=k {
        if mask >> (i - 1) & 1 == 1 {
            let (x, y) = (i, i % k + 1);
            pairs.extend([(y, next), (next, x)]);
            next += 1;
        }
    }
    build(next - 1, &pairs)
}

/// `d -> c` with `c -> a`, `c -> b` (or `a -> c`, `b -> c` if `sources`),
/// and a chain of `tail` further arrows ending at `d`.
pub fn d_i_fork(tail: u32, sources: bool) -> Quiver {
    let (a, b, c, d) = (1, 2, 3, 4);
    let mut pairs = vec![(d, c)];
    if sources {
        pairs.extend([(a, c), (b, c)]);
    } else {
        pairs.extend([(c, a), (c, b)]);
    }
    let mut prev = d;
    for v in 5..5 + tail {
        pairs.push((v, prev));
        prev = v;
    }
    build(4 + tail, &pairs)
}
