//! Hand-constructed paths that seed the recursive constructions.
//!
//! Every sequence here is checked by `verify_path` in the unit tests, and the
//! complement column of the small-order table is checked against the left
//! column, so a typo in any row fails the build's test suite.

use crate::graph::Vertex;

/// A piece of a path template on `[1, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Piece {
    /// Literal vertices.
    Fixed(&'static [Vertex]),
    /// A Hamilton path of `[lo, n]` from `from` to `to`; one of the two
    /// endpoints is always `lo`.
    Sub {
        from: Vertex,
        to: Vertex,
        lo: Vertex,
    },
}

use Piece::{Fixed, Sub};

/// Seed paths from 1 to `m` on `[1, n]` for `m` in `[2, 6]`, keyed `(m, n)`.
pub(crate) const SEEDS_1_TO_M: &[(Vertex, Vertex, &[Vertex])] = &[
    (2, 6, &[1, 4, 6, 3, 5, 2]),
    (2, 7, &[1, 4, 6, 3, 5, 7, 2]),
    (3, 5, &[1, 4, 2, 5, 3]),
    (3, 6, &[1, 6, 4, 2, 5, 3]),
    (3, 7, &[1, 6, 4, 2, 7, 5, 3]),
    (3, 8, &[1, 4, 2, 7, 5, 8, 6, 3]),
    (3, 9, &[1, 4, 2, 5, 7, 9, 6, 8, 3]),
    (4, 5, &[1, 3, 5, 2, 4]),
    (4, 6, &[1, 6, 3, 5, 2, 4]),
    (4, 7, &[1, 6, 3, 5, 2, 7, 4]),
    (4, 8, &[1, 3, 6, 8, 5, 7, 2, 4]),
    (5, 6, &[1, 3, 6, 4, 2, 5]),
    (5, 7, &[1, 3, 6, 4, 2, 7, 5]),
    (5, 8, &[1, 8, 3, 6, 4, 2, 7, 5]),
    (5, 9, &[1, 4, 2, 7, 9, 6, 3, 8, 5]),
    (5, 10, &[1, 4, 2, 9, 6, 3, 8, 10, 7, 5]),
    (6, 6, &[1, 3, 5, 2, 4, 6]),
    (6, 7, &[1, 4, 7, 2, 5, 3, 6]),
    (6, 8, &[1, 8, 3, 5, 7, 2, 4, 6]),
    (6, 9, &[1, 4, 7, 9, 2, 5, 3, 8, 6]),
    (6, 10, &[1, 4, 2, 5, 3, 8, 10, 7, 9, 6]),
];

/// Recursive step for `m` in `[3, 6]`, applied above the largest seed.
/// The first field is the smallest order the step is used for.
pub(crate) const STEPS_1_TO_M: &[(Vertex, Vertex, &[Piece])] = &[
    (
        3,
        10,
        &[
            Fixed(&[1, 4, 2]),
            Sub {
                from: 5,
                to: 6,
                lo: 5,
            },
            Fixed(&[3]),
        ],
    ),
    (
        4,
        9,
        &[
            Fixed(&[1, 3]),
            Sub {
                from: 5,
                to: 7,
                lo: 5,
            },
            Fixed(&[2, 4]),
        ],
    ),
    (
        5,
        11,
        &[
            Fixed(&[1, 3]),
            Sub {
                from: 6,
                to: 9,
                lo: 6,
            },
            Fixed(&[4, 2, 5]),
        ],
    ),
    (
        6,
        11,
        &[
            Fixed(&[1, 3, 5, 2, 4]),
            Sub {
                from: 7,
                to: 6,
                lo: 6,
            },
        ],
    ),
];

/// Paths from 1 to `m` on `[1, n]` for `n, m` in `[7, 10]`, keyed `(n, m)`.
pub(crate) const LARGE_M_TABLE: &[(Vertex, Vertex, &[Vertex])] = &[
    (7, 7, &[1, 3, 6, 4, 2, 5, 7]),
    (8, 7, &[1, 8, 6, 3, 5, 2, 4, 7]),
    (8, 8, &[1, 3, 5, 7, 2, 4, 6, 8]),
    (9, 7, &[1, 3, 5, 8, 6, 9, 4, 2, 7]),
    (9, 8, &[1, 3, 5, 7, 9, 2, 4, 6, 8]),
    (9, 9, &[1, 3, 5, 8, 6, 4, 7, 2, 9]),
    (10, 7, &[1, 4, 2, 9, 6, 3, 5, 8, 10, 7]),
    (10, 8, &[1, 4, 2, 9, 7, 10, 5, 3, 6, 8]),
    (10, 9, &[1, 8, 3, 5, 10, 7, 2, 4, 6, 9]),
    (10, 10, &[1, 3, 5, 7, 9, 2, 4, 6, 8, 10]),
];

/// `(n, left path, complement path)`.
pub(crate) type SmallOrderRow = (Vertex, &'static [Vertex], Option<&'static [Vertex]>);

/// Designated-endpoint paths for orders 5 to 8, as printed: the left path
/// and, where listed, its complement. Orientation follows the printed order,
/// which is not always from the smaller endpoint.
pub(crate) const SMALL_ORDER_ROWS: &[SmallOrderRow] = &[
    (5, &[1, 4, 2, 5, 3], Some(&[5, 2, 4, 1, 3])),
    (5, &[1, 3, 5, 2, 4], Some(&[5, 3, 1, 4, 2])),
    (5, &[2, 5, 3, 1, 4], None),
    (6, &[2, 5, 3, 6, 1, 4], Some(&[5, 2, 4, 1, 6, 3])),
    (6, &[2, 4, 6, 1, 3, 5], None),
    (7, &[2, 5, 7, 4, 1, 6, 3], Some(&[6, 3, 1, 4, 7, 2, 5])),
    (7, &[2, 7, 5, 3, 6, 1, 4], Some(&[6, 1, 3, 5, 2, 7, 4])),
    (7, &[2, 7, 4, 6, 1, 3, 5], Some(&[6, 1, 4, 2, 7, 5, 3])),
    (7, &[2, 4, 7, 5, 3, 1, 6], None),
    (7, &[3, 1, 6, 4, 2, 7, 5], None),
    (
        8,
        &[2, 5, 7, 4, 1, 6, 8, 3],
        Some(&[7, 4, 2, 5, 8, 3, 1, 6]),
    ),
    (
        8,
        &[2, 7, 5, 3, 8, 6, 1, 4],
        Some(&[7, 2, 4, 6, 1, 3, 8, 5]),
    ),
    (
        8,
        &[2, 7, 4, 6, 1, 8, 3, 5],
        Some(&[7, 2, 5, 3, 8, 1, 6, 4]),
    ),
    (
        8,
        &[2, 4, 7, 5, 3, 1, 8, 6],
        Some(&[7, 5, 2, 4, 6, 8, 1, 3]),
    ),
    (8, &[2, 4, 1, 3, 6, 8, 5, 7], None),
    (
        8,
        &[3, 6, 1, 8, 5, 2, 7, 4],
        Some(&[6, 3, 8, 1, 4, 7, 2, 5]),
    ),
    (
        8,
        &[3, 1, 8, 6, 4, 2, 7, 5],
        Some(&[6, 8, 1, 3, 5, 7, 2, 4]),
    ),
    (8, &[3, 1, 4, 2, 7, 5, 8, 6], None),
];

/// Endpoint pairs with no Hamilton path, for orders 5 to 8.
pub(crate) const EXCEPTIONS: &[(Vertex, &[(Vertex, Vertex)])] = &[
    (5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    (6, &[(2, 3), (3, 4), (4, 5)]),
    (7, &[(3, 4), (4, 5)]),
    (8, &[(4, 5)]),
];

/// Orders a pattern row applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Orders {
    Exactly(Vertex),
    AtLeast(Vertex),
}

impl Orders {
    pub(crate) fn admits(self, n: Vertex) -> bool {
        match self {
            Orders::Exactly(k) => n == k,
            Orders::AtLeast(k) => n >= k,
        }
    }
}

/// Templates for `n1 <= 5`, `n2 <= 6` at orders 9 and above (after
/// complement reduction), keyed `(n1, n2)`.
pub(crate) const LOW_PAIR_PATTERNS: &[((Vertex, Vertex), Orders, &[Piece])] = &[
    (
        (2, 3),
        Orders::AtLeast(9),
        &[
            Fixed(&[2]),
            Sub {
                from: 4,
                to: 6,
                lo: 4,
            },
            Fixed(&[1, 3]),
        ],
    ),
    (
        (3, 4),
        Orders::AtLeast(9),
        &[
            Fixed(&[3, 1]),
            Sub {
                from: 8,
                to: 5,
                lo: 5,
            },
            Fixed(&[2, 4]),
        ],
    ),
    (
        (4, 5),
        Orders::Exactly(9),
        &[Fixed(&[4, 1, 3, 8, 6, 9, 7, 2, 5])],
    ),
    (
        (4, 5),
        Orders::AtLeast(10),
        &[
            Fixed(&[4, 1, 3]),
            Sub {
                from: 6,
                to: 9,
                lo: 6,
            },
            Fixed(&[2, 5]),
        ],
    ),
    (
        (5, 6),
        Orders::AtLeast(10),
        &[
            Fixed(&[5, 2, 4, 1, 3]),
            Sub {
                from: 8,
                to: 6,
                lo: 6,
            },
        ],
    ),
    (
        (2, 4),
        Orders::AtLeast(9),
        &[
            Fixed(&[2]),
            Sub {
                from: 5,
                to: 8,
                lo: 5,
            },
            Fixed(&[3, 1, 4]),
        ],
    ),
    (
        (3, 5),
        Orders::AtLeast(9),
        &[
            Fixed(&[3, 1, 4, 2]),
            Sub {
                from: 7,
                to: 5,
                lo: 5,
            },
        ],
    ),
    (
        (4, 6),
        Orders::Exactly(9),
        &[Fixed(&[4, 1, 3, 8, 5, 2, 7, 9, 6])],
    ),
    (
        (4, 6),
        Orders::AtLeast(10),
        &[
            Fixed(&[4, 1, 3, 5, 2]),
            Sub {
                from: 9,
                to: 6,
                lo: 6,
            },
        ],
    ),
    (
        (2, 5),
        Orders::AtLeast(9),
        &[
            Fixed(&[2, 4, 1, 3]),
            Sub {
                from: 8,
                to: 5,
                lo: 5,
            },
        ],
    ),
    (
        (3, 6),
        Orders::Exactly(9),
        &[Fixed(&[3, 1, 4, 2, 9, 7, 5, 8, 6])],
    ),
    (
        (3, 6),
        Orders::AtLeast(10),
        &[
            Fixed(&[3, 1, 4, 2]),
            Sub {
                from: 5,
                to: 6,
                lo: 5,
            },
        ],
    ),
    (
        (2, 6),
        Orders::Exactly(9),
        &[Fixed(&[2, 4, 1, 3, 8, 5, 7, 9, 6])],
    ),
    (
        (2, 6),
        Orders::AtLeast(10),
        &[
            Fixed(&[2, 4, 1, 3, 5]),
            Sub {
                from: 8,
                to: 6,
                lo: 6,
            },
        ],
    ),
];

/// Orders 9 and 10 with `n1 <= 5 < 7 <= n2`, where `[6, n]` is too short
/// (or hits the `(1, 2)` exception at order 5) for the split at vertex 6.
/// Keyed `(n, n1, n2)`.
pub(crate) const SPLIT_GAPS: &[(Vertex, Vertex, Vertex, &[Vertex])] = &[
    (9, 2, 7, &[2, 4, 1, 3, 5, 8, 6, 9, 7]),
    (9, 3, 7, &[3, 1, 4, 2, 5, 8, 6, 9, 7]),
    (9, 2, 8, &[2, 4, 1, 3, 5, 7, 9, 6, 8]),
    (10, 2, 7, &[2, 4, 1, 3, 5, 10, 8, 6, 9, 7]),
    (10, 3, 7, &[3, 1, 4, 2, 5, 10, 8, 6, 9, 7]),
    (10, 4, 7, &[4, 1, 3, 5, 2, 9, 6, 8, 10, 7]),
];
