//! Printed matrix parts of the operators attached to the negative generators.
//!
//! Entry i describes eta_{i+1}: the signs s_j in
//! (x_{i+1}/2)[sum_j s_j (E_{j,j} - E_{5+j,5+j}) - kappa], then the terms
//! (sign, r, symbol) meaning sign * x_r * (E_{a,b} - E_{c,d}).

pub type Sym = (usize, usize, usize, usize);

pub struct PrintedIota {
    pub cartan: [i64; 5],
    pub terms: &'static [(i64, usize, Sym)],
}

pub const PRINTED_IOTA: [PrintedIota; 16] = [
    PrintedIota {
        cartan: [1, 1, 1, 1, -1],
        terms: &[
            (-1, 2, (4, 5, 10, 9)),
            (-1, 3, (3, 5, 10, 8)),
            (1, 4, (2, 5, 10, 7)),
            (-1, 5, (3, 9, 4, 8)),
            (1, 6, (2, 9, 4, 7)),
            (-1, 7, (1, 5, 10, 6)),
            (-1, 8, (1, 9, 4, 6)),
            (1, 9, (2, 8, 3, 7)),
            (-1, 10, (1, 8, 3, 6)),
            (1, 12, (1, 7, 2, 6)),
        ],
    },
    PrintedIota {
        cartan: [1, 1, 1, -1, 1],
        terms: &[
            (-1, 1, (5, 4, 9, 10)),
            (-1, 3, (3, 4, 9, 8)),
            (1, 4, (2, 4, 9, 7)),
            (1, 5, (3, 10, 5, 8)),
            (-1, 6, (2, 10, 5, 7)),
            (-1, 7, (1, 4, 9, 6)),
            (1, 8, (1, 10, 5, 6)),
            (-1, 11, (2, 8, 3, 7)),
            (1, 13, (1, 8, 3, 6)),
            (-1, 14, (1, 7, 2, 6)),
        ],
    },
    PrintedIota {
        cartan: [1, 1, -1, 1, 1],
        terms: &[
            (-1, 1, (5, 3, 8, 10)),
            (-1, 2, (4, 3, 8, 9)),
            (1, 4, (2, 3, 8, 7)),
            (-1, 5, (4, 10, 5, 9)),
            (-1, 7, (1, 3, 8, 6)),
            (-1, 9, (2, 10, 5, 7)),
            (1, 10, (1, 10, 5, 6)),
            (1, 11, (2, 9, 4, 7)),
            (-1, 13, (1, 9, 4, 6)),
            (1, 15, (1, 7, 2, 6)),
        ],
    },
    PrintedIota {
        cartan: [1, -1, 1, 1, 1],
        terms: &[
            (1, 1, (5, 2, 7, 10)),
            (1, 2, (4, 2, 7, 9)),
            (1, 3, (3, 2, 7, 8)),
            (-1, 6, (4, 10, 5, 9)),
            (1, 7, (1, 2, 7, 6)),
            (-1, 9, (3, 10, 5, 8)),
            (1, 11, (3, 9, 4, 8)),
            (1, 12, (1, 10, 5, 6)),
            (-1, 14, (1, 9, 4, 6)),
            (1, 15, (1, 8, 3, 6)),
        ],
    },
    PrintedIota {
        cartan: [1, 1, -1, -1, -1],
        terms: &[
            (-1, 1, (9, 3, 8, 4)),
            (1, 2, (10, 3, 8, 5)),
            (-1, 3, (10, 4, 9, 5)),
            (1, 6, (2, 3, 8, 7)),
            (-1, 8, (1, 3, 8, 6)),
            (-1, 9, (2, 4, 9, 7)),
            (1, 10, (1, 4, 9, 6)),
            (-1, 11, (2, 5, 10, 7)),
            (1, 13, (1, 5, 10, 6)),
            (-1, 16, (1, 7, 2, 6)),
        ],
    },
    PrintedIota {
        cartan: [1, -1, 1, -1, -1],
        terms: &[
            (1, 1, (9, 2, 7, 4)),
            (-1, 2, (10, 2, 7, 5)),
            (-1, 4, (10, 4, 9, 5)),
            (1, 5, (3, 2, 7, 8)),
            (1, 8, (1, 2, 7, 6)),
            (-1, 9, (3, 4, 9, 8)),
            (-1, 11, (3, 5, 10, 8)),
            (1, 12, (1, 4, 9, 6)),
            (1, 14, (1, 5, 10, 6)),
            (-1, 16, (1, 8, 3, 6)),
        ],
    },
    PrintedIota {
        cartan: [-1, 1, 1, 1, 1],
        terms: &[
            (-1, 1, (5, 1, 6, 10)),
            (-1, 2, (4, 1, 6, 9)),
            (-1, 3, (3, 1, 6, 8)),
            (1, 4, (2, 1, 6, 7)),
            (-1, 8, (4, 10, 5, 9)),
            (-1, 10, (3, 10, 5, 8)),
            (1, 12, (2, 10, 5, 7)),
            (1, 13, (3, 9, 4, 8)),
            (-1, 14, (2, 9, 4, 7)),
            (1, 15, (2, 8, 3, 7)),
        ],
    },
    PrintedIota {
        cartan: [-1, 1, 1, -1, -1],
        terms: &[
            (-1, 1, (9, 1, 6, 4)),
            (1, 2, (10, 1, 6, 5)),
            (-1, 5, (3, 1, 6, 8)),
            (1, 6, (2, 1, 6, 7)),
            (-1, 7, (10, 4, 9, 5)),
            (-1, 10, (3, 4, 9, 8)),
            (1, 12, (2, 4, 9, 7)),
            (-1, 13, (3, 5, 10, 8)),
            (1, 14, (2, 5, 10, 7)),
            (-1, 16, (2, 8, 3, 7)),
        ],
    },
    PrintedIota {
        cartan: [1, -1, -1, 1, -1],
        terms: &[
            (1, 1, (8, 2, 7, 3)),
            (-1, 3, (10, 2, 7, 5)),
            (-1, 4, (10, 3, 8, 5)),
            (-1, 5, (4, 2, 7, 9)),
            (-1, 6, (4, 3, 8, 9)),
            (1, 10, (1, 2, 7, 6)),
            (1, 11, (4, 5, 10, 9)),
            (1, 12, (1, 3, 8, 6)),
            (-1, 15, (1, 5, 10, 6)),
            (1, 16, (1, 9, 4, 6)),
        ],
    },
    PrintedIota {
        cartan: [-1, 1, -1, 1, -1],
        terms: &[
            (-1, 1, (8, 1, 6, 3)),
            (1, 3, (10, 1, 6, 5)),
            (1, 5, (4, 1, 6, 9)),
            (-1, 7, (10, 3, 8, 5)),
            (-1, 8, (4, 3, 8, 9)),
            (1, 9, (2, 1, 6, 7)),
            (1, 12, (2, 3, 8, 7)),
            (1, 13, (4, 5, 10, 9)),
            (-1, 15, (2, 5, 10, 7)),
            (1, 16, (2, 9, 4, 7)),
        ],
    },
    PrintedIota {
        cartan: [1, -1, -1, -1, 1],
        terms: &[
            (-1, 2, (8, 2, 7, 3)),
            (1, 3, (9, 2, 7, 4)),
            (1, 4, (9, 3, 8, 4)),
            (-1, 5, (5, 2, 7, 10)),
            (-1, 6, (5, 3, 8, 10)),
            (1, 9, (5, 4, 9, 10)),
            (1, 13, (1, 2, 7, 6)),
            (1, 14, (1, 3, 8, 6)),
            (1, 15, (1, 4, 9, 6)),
            (1, 16, (1, 10, 5, 6)),
        ],
    },
    PrintedIota {
        cartan: [-1, -1, 1, 1, -1],
        terms: &[
            (1, 1, (7, 1, 6, 2)),
            (1, 4, (10, 1, 6, 5)),
            (1, 6, (4, 1, 6, 9)),
            (1, 7, (10, 2, 7, 5)),
            (1, 8, (4, 2, 7, 9)),
            (1, 9, (3, 1, 6, 8)),
            (1, 10, (3, 2, 7, 8)),
            (1, 14, (4, 5, 10, 9)),
            (-1, 15, (3, 5, 10, 8)),
            (1, 16, (3, 9, 4, 8)),
        ],
    },
    PrintedIota {
        cartan: [-1, 1, -1, -1, 1],
        terms: &[
            (1, 2, (8, 1, 6, 3)),
            (-1, 3, (9, 1, 6, 4)),
            (1, 5, (5, 1, 6, 10)),
            (1, 7, (9, 3, 8, 4)),
            (-1, 8, (5, 3, 8, 10)),
            (1, 10, (5, 4, 9, 10)),
            (1, 11, (2, 1, 6, 7)),
            (1, 14, (2, 3, 8, 7)),
            (1, 15, (2, 4, 9, 7)),
            (1, 16, (2, 10, 5, 7)),
        ],
    },
    PrintedIota {
        cartan: [-1, -1, 1, -1, 1],
        terms: &[
            (-1, 2, (7, 1, 6, 2)),
            (-1, 4, (9, 1, 6, 4)),
            (1, 6, (5, 1, 6, 10)),
            (-1, 7, (9, 2, 7, 4)),
            (1, 8, (5, 2, 7, 10)),
            (1, 11, (3, 1, 6, 8)),
            (1, 12, (5, 4, 9, 10)),
            (1, 13, (3, 2, 7, 8)),
            (1, 15, (3, 4, 9, 8)),
            (1, 16, (3, 10, 5, 8)),
        ],
    },
    PrintedIota {
        cartan: [-1, -1, -1, 1, 1],
        terms: &[
            (1, 3, (7, 1, 6, 2)),
            (1, 4, (8, 1, 6, 3)),
            (1, 7, (8, 2, 7, 3)),
            (-1, 9, (5, 1, 6, 10)),
            (-1, 10, (5, 2, 7, 10)),
            (1, 11, (4, 1, 6, 9)),
            (-1, 12, (5, 3, 8, 10)),
            (1, 13, (4, 2, 7, 9)),
            (1, 14, (4, 3, 8, 9)),
            (1, 16, (4, 10, 5, 9)),
        ],
    },
    PrintedIota {
        cartan: [-1, -1, -1, -1, -1],
        terms: &[
            (-1, 5, (7, 1, 6, 2)),
            (-1, 6, (8, 1, 6, 3)),
            (-1, 8, (8, 2, 7, 3)),
            (1, 9, (9, 1, 6, 4)),
            (1, 10, (9, 2, 7, 4)),
            (1, 11, (10, 1, 6, 5)),
            (1, 12, (9, 3, 8, 4)),
            (1, 13, (10, 2, 7, 5)),
            (1, 14, (10, 3, 8, 5)),
            (1, 15, (10, 4, 9, 5)),
        ],
    },
];

/// Generation of T_target = [iota(nu(B)), T_source] for the symbol of B.
pub const T_CHAIN: [(usize, usize, Sym); 9] = [
    (2, 1, (2, 1, 6, 7)),
    (3, 2, (3, 2, 7, 8)),
    (4, 3, (4, 3, 8, 9)),
    (5, 4, (5, 4, 9, 10)),
    (10, 4, (10, 4, 9, 5)),
    (9, 5, (10, 4, 9, 5)),
    (8, 9, (8, 9, 4, 3)),
    (7, 8, (7, 8, 3, 2)),
    (6, 7, (6, 7, 2, 1)),
];

/// (sign, eta index, x index) in the sum defining T_1.
pub const T1_TERMS: [(i64, usize, usize); 8] =
    [(1, 11, 1), (1, 1, 11), (1, 9, 2), (1, 2, 9), (-1, 6, 3), (-1, 3, 6), (1, 5, 4), (1, 4, 5)];
