//! Operator tables as printed, entered once and cross-checked elsewhere.

/// Positive D5 root operators: the symbol E_{a,b} - E_{c,d} and its printed action.
pub const POSITIVE_OPS: [((usize, usize, usize, usize), &str); 20] = [
    ((1, 2, 7, 6), "x4*d7 + x6*d8 + x9*d10 + x11*d13"),
    ((2, 3, 8, 7), "x3*d4 + x5*d6 + x10*d12 + x13*d14"),
    ((3, 4, 9, 8), "-x2*d3 - x6*d9 - x8*d10 + x14*d15"),
    ((4, 5, 10, 9), "-x1*d2 + x9*d11 + x10*d13 + x12*d14"),
    ((4, 10, 5, 9), "-x3*d5 - x4*d6 - x7*d8 + x15*d16"),
    ((1, 3, 8, 6), "-x3*d7 - x5*d8 + x9*d12 + x11*d14"),
    ((2, 4, 9, 7), "x2*d4 - x5*d9 + x8*d12 + x13*d15"),
    ((3, 5, 10, 8), "-x1*d3 - x6*d11 - x8*d13 - x12*d15"),
    ((3, 10, 5, 8), "x2*d5 - x4*d9 - x7*d10 + x14*d16"),
    ((1, 4, 9, 6), "-x2*d7 + x5*d10 + x6*d12 + x11*d15"),
    ((2, 5, 10, 7), "x1*d4 - x5*d11 + x8*d14 - x10*d15"),
    ((2, 10, 5, 7), "-x2*d6 - x3*d9 + x7*d12 + x13*d16"),
    ((3, 9, 4, 8), "-x1*d5 + x4*d11 + x7*d13 + x12*d16"),
    ((1, 5, 10, 6), "-x1*d7 + x5*d13 + x6*d14 - x9*d15"),
    ((1, 10, 5, 6), "x2*d8 + x3*d10 + x4*d12 + x11*d16"),
    ((2, 9, 4, 7), "x1*d6 + x3*d11 - x7*d14 + x10*d16"),
    ((1, 9, 4, 6), "-x1*d8 - x4*d14 - x3*d13 + x9*d16"),
    ((2, 8, 3, 7), "x1*d9 - x2*d11 + x7*d15 - x8*d16"),
    ((1, 8, 3, 6), "-x1*d10 + x2*d13 + x4*d15 - x6*d16"),
    ((1, 7, 2, 6), "x1*d12 - x2*d14 + x3*d15 - x5*d16"),
];

/// Printed negative simple root operators.
pub const NEGATIVE_SIMPLE_OPS: [((usize, usize, usize, usize), &str); 5] = [
    ((2, 1, 6, 7), "x7*d4 + x8*d6 + x10*d9 + x13*d11"),
    ((3, 2, 7, 8), "x4*d3 + x6*d5 + x12*d10 + x14*d13"),
    ((4, 3, 8, 9), "-x3*d2 - x9*d6 - x10*d8 + x15*d14"),
    ((5, 4, 9, 10), "-x2*d1 + x11*d9 + x13*d10 + x14*d12"),
    ((10, 4, 9, 5), "-x5*d3 - x6*d4 - x8*d7 + x16*d15"),
];

/// a_{r,i}: (E_{r,r} - E_{5+r,5+r}) acts as sum (1/2 + a_{r,i}) x_i d_i.
pub const TABLE_A: [[i32; 16]; 5] = [
    [0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, -1, -1, -1, -1, -1],
    [0, 0, 0, -1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1, -1, -1],
    [0, 0, -1, 0, -1, 0, 0, 0, -1, -1, -1, 0, -1, 0, -1, -1],
    [0, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1, 0, -1, -1, 0, -1],
    [-1, 0, 0, 0, -1, -1, 0, -1, -1, -1, 0, -1, 0, 0, 0, -1],
];

/// b_{r,i}: the simple coroot alpha_r acts as sum b_{r,i} x_i d_i.
pub const TABLE_B: [[i32; 16]; 5] = [
    [0, 0, 0, 1, 0, 1, -1, -1, 1, -1, 1, 0, -1, 0, 0, 0],
    [0, 0, 1, 1, -1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 1, -1, 1, -1, 0, 0, 0, 1, 0, -1, 1, -1, 0, 0],
    [0, 1, -1, 0, 0, 1, 0, 1, -1, -1, 0, 0, 0, 1, -1, 0],
    [1, -1, 0, 0, 0, 0, 0, 0, 1, 1, -1, 1, -1, -1, 0, 0],
];

/// alpha_6 acts as this operator.
pub const ALPHA6_OP: &str =
    "-2*x1*d1 - x2*d2 - x3*d3 - x4*d4 - x5*d5 - x6*d6 - x7*d7 - x8*d8 - x9*d9 - x10*d10 - x12*d12";

/// zeta_1..zeta_10 as printed.
pub const ZETAS: [&str; 10] = [
    "x1*x11 + x2*x9 - x3*x6 + x4*x5",
    "x1*x13 + x2*x10 - x3*x8 + x5*x7",
    "x1*x14 + x2*x12 - x4*x8 + x6*x7",
    "x1*x15 - x3*x12 + x4*x10 - x7*x9",
    "-x2*x15 - x3*x14 + x4*x13 - x7*x11",
    "x7*x16 + x8*x15 + x10*x14 - x12*x13",
    "-x4*x16 - x6*x15 - x9*x14 + x11*x12",
    "x3*x16 + x5*x15 + x9*x13 - x10*x11",
    "x2*x16 - x5*x14 + x6*x13 - x8*x11",
    "x1*x16 + x5*x12 - x6*x10 + x8*x9",
];

/// zeta generation steps: (target, source, operator symbol E_{a,b} - E_{c,d}).
pub const ZETA_CHAIN: [(usize, usize, (usize, usize, usize, usize)); 9] = [
    (2, 1, (2, 1, 6, 7)),
    (3, 2, (3, 2, 7, 8)),
    (4, 3, (4, 3, 8, 9)),
    (5, 4, (5, 4, 9, 10)),
    (10, 4, (10, 4, 9, 5)),
    (9, 5, (9, 5, 10, 4)),
    (8, 9, (8, 9, 4, 3)),
    (7, 8, (7, 8, 3, 2)),
    (6, 7, (6, 7, 2, 1)),
];

/// P_i = x_i D + sum of sign * zeta_j * d_k, as (sign, j, k).
pub const P_TERMS: [[(i64, usize, usize); 5]; 16] = [
    [(-1, 1, 11), (-1, 2, 13), (-1, 3, 14), (-1, 4, 15), (-1, 10, 16)],
    [(-1, 1, 9), (-1, 2, 10), (-1, 3, 12), (1, 5, 15), (-1, 9, 16)],
    [(1, 1, 6), (1, 2, 8), (1, 4, 12), (1, 5, 14), (-1, 8, 16)],
    [(-1, 1, 5), (1, 3, 8), (-1, 4, 10), (-1, 5, 13), (1, 7, 16)],
    [(-1, 1, 4), (-1, 2, 7), (-1, 10, 12), (1, 9, 14), (-1, 8, 15)],
    [(1, 1, 3), (-1, 3, 7), (1, 10, 10), (-1, 9, 13), (1, 7, 15)],
    [(-1, 2, 5), (-1, 3, 6), (1, 4, 9), (1, 5, 11), (-1, 6, 16)],
    [(1, 2, 3), (1, 3, 4), (-1, 10, 9), (1, 9, 11), (-1, 6, 15)],
    [(-1, 1, 2), (1, 4, 7), (-1, 10, 8), (-1, 8, 13), (1, 7, 14)],
    [(-1, 2, 2), (-1, 4, 4), (1, 10, 6), (1, 8, 11), (-1, 6, 14)],
    [(-1, 1, 1), (1, 5, 7), (1, 9, 8), (1, 8, 10), (-1, 7, 12)],
    [(-1, 3, 2), (1, 4, 3), (-1, 10, 5), (-1, 7, 11), (1, 6, 13)],
    [(-1, 2, 1), (-1, 5, 4), (-1, 9, 6), (-1, 8, 9), (1, 6, 12)],
    [(-1, 3, 1), (1, 5, 3), (1, 9, 5), (1, 7, 9), (-1, 6, 10)],
    [(-1, 4, 1), (1, 5, 2), (-1, 8, 5), (1, 7, 6), (-1, 6, 8)],
    [(-1, 10, 1), (-1, 9, 2), (-1, 8, 3), (1, 7, 4), (-1, 6, 7)],
];

/// The same P_5 as it appears inside the operator identity expansion, with the
/// opposite sign on zeta_9 d_14.
pub const P5_ALTERNATE: [(i64, usize, usize); 5] = [(-1, 1, 4), (-1, 2, 7), (-1, 10, 12), (-1, 9, 14), (-1, 8, 15)];

/// Quadratic identities sum sign * x_i * zeta_j = sign * zeta_1 * x_k, with the
/// printed middle expansion.
pub struct ZetaIdentity {
    pub name: &'static str,
    pub lhs: [(i64, usize, usize); 4],
    pub expansion: [(i64, usize, &'static str); 4],
    pub rhs: (i64, usize),
}

pub const ZETA_IDENTITIES: [ZetaIdentity; 8] = [
    ZetaIdentity {
        name: "d7 coefficient",
        lhs: [(1, 1, 5), (1, 2, 4), (1, 3, 3), (-1, 4, 2)],
        expansion: [
            (1, 1, "-x2*x15 - x3*x14 + x4*x13 - x7*x11"),
            (1, 2, "x1*x15 - x3*x12 + x4*x10 - x7*x9"),
            (1, 3, "x1*x14 + x2*x12 - x4*x8 + x6*x7"),
            (-1, 4, "x1*x13 + x2*x10 - x3*x8 + x5*x7"),
        ],
        rhs: (-1, 7),
    },
    ZetaIdentity {
        name: "d8 coefficient",
        lhs: [(1, 1, 9), (-1, 2, 10), (-1, 6, 2), (1, 5, 3)],
        expansion: [
            (1, 1, "x2*x16 - x5*x14 + x6*x13 - x8*x11"),
            (-1, 2, "x1*x16 + x5*x12 - x6*x10 + x8*x9"),
            (-1, 6, "x1*x13 + x2*x10 - x3*x8 + x5*x7"),
            (1, 5, "x1*x14 + x2*x12 - x4*x8 + x6*x7"),
        ],
        rhs: (-1, 8),
    },
    ZetaIdentity {
        name: "d10 coefficient",
        lhs: [(1, 1, 8), (-1, 9, 2), (-1, 3, 10), (1, 5, 4)],
        expansion: [
            (1, 1, "x3*x16 + x5*x15 + x9*x13 - x10*x11"),
            (-1, 9, "x1*x13 + x2*x10 - x3*x8 + x5*x7"),
            (-1, 3, "x1*x16 + x5*x12 - x6*x10 + x8*x9"),
            (-1, 5, "x1*x15 - x3*x12 - x4*x10 - x7*x9"),
        ],
        rhs: (-1, 10),
    },
    ZetaIdentity {
        name: "d12 coefficient",
        lhs: [(1, 1, 7), (1, 9, 3), (1, 6, 4), (1, 4, 10)],
        expansion: [
            (1, 1, "-x4*x16 - x6*x15 - x9*x14 + x11*x12"),
            (1, 9, "x1*x14 + x2*x12 - x4*x8 + x6*x7"),
            (1, 6, "x1*x15 - x3*x12 + x4*x10 - x7*x9"),
            (1, 4, "x1*x16 + x5*x12 - x6*x10 + x8*x9"),
        ],
        rhs: (1, 12),
    },
    ZetaIdentity {
        name: "d13 coefficient",
        lhs: [(1, 11, 2), (1, 2, 8), (-1, 3, 9), (1, 5, 5)],
        expansion: [
            (1, 11, "x1*x13 + x2*x10 - x3*x8 + x5*x7"),
            (1, 2, "x3*x16 + x5*x15 + x9*x13 - x10*x11"),
            (-1, 3, "x2*x16 - x5*x14 + x6*x13 - x8*x11"),
            (1, 5, "-x2*x15 - x3*x14 + x4*x13 - x7*x11"),
        ],
        rhs: (1, 13),
    },
    ZetaIdentity {
        name: "d14 coefficient",
        lhs: [(1, 11, 3), (-1, 2, 7), (1, 6, 5), (-1, 4, 9)],
        expansion: [
            (1, 11, "x1*x14 + x2*x12 - x4*x8 + x6*x7"),
            (-1, 2, "-x4*x16 - x6*x15 - x9*x14 + x11*x12"),
            (1, 6, "-x2*x15 - x3*x14 + x4*x13 - x7*x11"),
            (-1, 4, "x2*x16 - x5*x14 + x6*x13 - x8*x11"),
        ],
        rhs: (1, 14),
    },
    ZetaIdentity {
        name: "d15 coefficient",
        lhs: [(1, 11, 4), (-1, 9, 5), (1, 3, 7), (1, 4, 8)],
        expansion: [
            (1, 11, "x1*x15 - x3*x12 + x4*x10 - x7*x9"),
            (-1, 9, "-x2*x15 - x3*x14 + x4*x13 - x7*x11"),
            (1, 3, "-x4*x16 - x6*x15 - x9*x14 + x11*x12"),
            (1, 4, "x3*x16 + x5*x15 + x9*x13 - x10*x11"),
        ],
        rhs: (1, 15),
    },
    ZetaIdentity {
        name: "d16 coefficient",
        lhs: [(1, 11, 10), (1, 9, 9), (-1, 6, 8), (-1, 5, 7)],
        expansion: [
            (1, 11, "x1*x16 + x5*x12 - x6*x10 + x8*x9"),
            (1, 9, "x2*x16 - x5*x14 + x6*x13 - x8*x11"),
            (-1, 6, "x3*x16 + x5*x15 + x9*x13 - x10*x11"),
            (-1, 5, "-x4*x16 - x6*x15 - x9*x14 + x11*x12"),
        ],
        rhs: (1, 16),
    },
];

/// The d10 identity's left side as it appears inside the operator expansion,
/// with -x5*zeta_4 in place of +x5*zeta_4.
pub const D10_ALTERNATE: [(i64, usize, usize); 4] = [(1, 1, 8), (-1, 9, 2), (-1, 3, 10), (-1, 5, 4)];
