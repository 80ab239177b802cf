//! Base 2-factors. Each block is a list of cycles on `[1, k]`, every cycle a
//! list of path pieces; `Sub` pieces make the interval-suffix patterns grow
//! with `k`.

#[cfg(test)]
use crate::graph::Vertex;
use crate::paths::Piece::{self, Fixed, Sub};

pub(crate) type Block = &'static [&'static [Piece]];

pub(crate) const C3_C4: Block = &[&[Fixed(&[1, 3, 6])], &[Fixed(&[2, 5, 7, 4])]];
pub(crate) const C3_C5: Block = &[&[Fixed(&[2, 5, 7])], &[Fixed(&[1, 3, 8, 6, 4])]];
pub(crate) const C3_C6: Block = &[&[Fixed(&[1, 3, 8])], &[Fixed(&[2, 5, 7, 9, 6, 4])]];
pub(crate) const C3_C7: Block = &[&[Fixed(&[1, 3, 8])], &[Fixed(&[2, 5, 10, 7, 9, 6, 4])]];
pub(crate) const C3_C8: Block = &[&[Fixed(&[1, 3, 8])], &[Fixed(&[2, 5, 10, 7, 9, 11, 6, 4])]];
/// `C3 + C(k - 3)` for `k >= 12`.
pub(crate) const C3_CL: Block = &[
    &[Fixed(&[1, 3, 6])],
    &[
        Fixed(&[5, 2, 4]),
        Sub {
            from: 7,
            to: 8,
            lo: 7,
        },
    ],
];

pub(crate) const C4_C5: Block = &[&[Fixed(&[1, 3, 8, 6])], &[Fixed(&[2, 5, 7, 9, 4])]];
pub(crate) const C4_C6: Block = &[&[Fixed(&[1, 3, 8, 6])], &[Fixed(&[2, 5, 10, 7, 9, 4])]];
pub(crate) const C4_C7: Block = &[&[Fixed(&[1, 3, 8, 6])], &[Fixed(&[2, 5, 10, 7, 9, 11, 4])]];
pub(crate) const C4_C8: Block = &[
    &[Fixed(&[1, 3, 8, 6])],
    &[Fixed(&[2, 5, 10, 7, 12, 9, 11, 4])],
];
/// `C4 + C(k - 4)` for `k >= 13`.
pub(crate) const C4_CL: Block = &[
    &[Fixed(&[2, 5, 7, 4])],
    &[
        Fixed(&[6, 1, 3]),
        Sub {
            from: 8,
            to: 9,
            lo: 8,
        },
    ],
];

pub(crate) const TWO_C4: Block = &[&[Fixed(&[1, 3, 8, 6])], &[Fixed(&[2, 5, 7, 4])]];
pub(crate) const THREE_C4: Block = &[
    &[Fixed(&[1, 3, 10, 8])],
    &[Fixed(&[2, 5, 12, 7])],
    &[Fixed(&[9, 11, 6, 4])],
];

pub(crate) const C3_TWO_C4: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[4, 6, 9, 11])],
    &[Fixed(&[2, 5, 10, 7])],
];

pub(crate) const TWO_C3_C4: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[4, 6, 9])],
    &[Fixed(&[2, 5, 10, 7])],
];
pub(crate) const TWO_C3_C5: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[5, 10, 7])],
    &[Fixed(&[2, 9, 11, 6, 4])],
];
/// `2 C3 + C(k - 6)` for `k >= 12`.
pub(crate) const TWO_C3_CL: Block = &[
    &[Fixed(&[1, 3, 6])],
    &[Fixed(&[2, 4, 7])],
    &[
        Fixed(&[5]),
        Sub {
            from: 8,
            to: 10,
            lo: 8,
        },
    ],
];

pub(crate) const THREE_C3: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[2, 5, 7])],
    &[Fixed(&[4, 6, 9])],
];
pub(crate) const FOUR_C3: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[2, 7, 9])],
    &[Fixed(&[4, 6, 11])],
    &[Fixed(&[5, 10, 12])],
];
pub(crate) const THREE_C3_C4: Block = &[
    &[Fixed(&[1, 3, 8])],
    &[Fixed(&[2, 7, 9])],
    &[Fixed(&[5, 10, 12])],
    &[Fixed(&[4, 6, 13, 11])],
];
pub(crate) const FIVE_C3: Block = &[
    &[Fixed(&[1, 3, 6])],
    &[Fixed(&[2, 4, 15])],
    &[Fixed(&[5, 7, 10])],
    &[Fixed(&[8, 11, 13])],
    &[Fixed(&[9, 12, 14])],
];

/// Every fixed block with its order, for table checks.
#[cfg(test)]
pub(crate) const FIXED_BLOCKS: &[(Vertex, &[usize], Block)] = &[
    (7, &[3, 4], C3_C4),
    (8, &[3, 5], C3_C5),
    (9, &[3, 6], C3_C6),
    (10, &[3, 7], C3_C7),
    (11, &[3, 8], C3_C8),
    (9, &[4, 5], C4_C5),
    (10, &[4, 6], C4_C6),
    (11, &[4, 7], C4_C7),
    (12, &[4, 8], C4_C8),
    (8, &[4, 4], TWO_C4),
    (12, &[4, 4, 4], THREE_C4),
    (11, &[3, 4, 4], C3_TWO_C4),
    (10, &[3, 3, 4], TWO_C3_C4),
    (11, &[3, 3, 5], TWO_C3_C5),
    (9, &[3, 3, 3], THREE_C3),
    (12, &[3, 3, 3, 3], FOUR_C3),
    (13, &[3, 3, 3, 4], THREE_C3_C4),
    (15, &[3, 3, 3, 3, 3], FIVE_C3),
];
