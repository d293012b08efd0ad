//! The printed fractional transformations. Entry (i, j, sign, terms, d) reads
//! x_j + sign * b * (sum of terms) / (1 - b x_d) for the flow of index i;
//! every coordinate not listed maps to x_j / (1 - b x_i).

pub type Quad = [(i8, usize, usize); 3];

pub const PRINTED_FLOWS: [(usize, usize, i8, Quad, usize); 80] = [
    (1, 11, -1, [(1, 2, 9), (-1, 3, 6), (1, 4, 5)], 1),
    (1, 13, -1, [(1, 2, 10), (-1, 3, 8), (1, 5, 7)], 1),
    (1, 14, -1, [(1, 2, 12), (-1, 4, 8), (1, 6, 7)], 1),
    (1, 15, 1, [(1, 3, 12), (-1, 4, 10), (1, 7, 9)], 1),
    (1, 16, -1, [(1, 5, 12), (-1, 6, 10), (1, 8, 9)], 1),
    (2, 9, -1, [(1, 1, 11), (-1, 3, 6), (1, 4, 5)], 2),
    (2, 10, -1, [(1, 1, 13), (-1, 3, 8), (1, 5, 7)], 2),
    (2, 12, -1, [(1, 1, 14), (-1, 4, 8), (1, 6, 7)], 2),
    (2, 15, -1, [(1, 3, 14), (-1, 4, 13), (1, 7, 11)], 2),
    (2, 16, 1, [(1, 5, 14), (-1, 6, 13), (1, 8, 11)], 2),
    (3, 6, 1, [(1, 1, 11), (1, 2, 9), (1, 4, 5)], 3),
    (3, 8, 1, [(1, 1, 13), (1, 2, 10), (1, 5, 7)], 3),
    (3, 12, 1, [(1, 1, 15), (1, 4, 10), (-1, 7, 9)], 3),
    (3, 14, -1, [(1, 2, 15), (-1, 4, 13), (1, 7, 11)], 3),
    (3, 16, -1, [(1, 5, 15), (1, 9, 13), (-1, 10, 11)], 3),
    (4, 5, -1, [(1, 1, 11), (1, 2, 9), (-1, 3, 6)], 4),
    (4, 8, 1, [(1, 1, 14), (1, 2, 12), (1, 6, 7)], 4),
    (4, 10, -1, [(1, 1, 15), (-1, 3, 12), (-1, 7, 9)], 4),
    (4, 13, 1, [(1, 2, 15), (1, 3, 14), (1, 7, 11)], 4),
    (4, 16, -1, [(1, 6, 15), (1, 9, 14), (-1, 11, 12)], 4),
    (5, 4, -1, [(1, 1, 11), (1, 2, 9), (-1, 3, 6)], 5),
    (5, 7, -1, [(1, 1, 13), (1, 2, 10), (-1, 3, 8)], 5),
    (5, 12, -1, [(1, 1, 16), (-1, 6, 10), (1, 8, 9)], 5),
    (5, 14, 1, [(1, 2, 16), (1, 6, 13), (-1, 8, 11)], 5),
    (5, 15, -1, [(1, 3, 16), (1, 9, 13), (-1, 10, 11)], 5),
    (6, 3, 1, [(1, 1, 11), (1, 2, 9), (1, 4, 5)], 6),
    (6, 7, -1, [(1, 1, 14), (1, 2, 12), (-1, 4, 8)], 6),
    (6, 10, 1, [(1, 1, 16), (1, 5, 12), (1, 8, 9)], 6),
    (6, 13, -1, [(1, 2, 16), (-1, 5, 14), (-1, 8, 11)], 6),
    (6, 15, -1, [(1, 4, 16), (1, 9, 14), (-1, 11, 12)], 6),
    (7, 5, -1, [(1, 1, 13), (1, 2, 10), (-1, 3, 8)], 7),
    (7, 6, -1, [(1, 1, 14), (1, 2, 12), (-1, 4, 8)], 7),
    (7, 9, 1, [(1, 1, 15), (-1, 3, 12), (1, 4, 10)], 7),
    (7, 11, -1, [(1, 2, 15), (1, 3, 14), (-1, 4, 13)], 7),
    (7, 16, -1, [(1, 8, 15), (1, 10, 14), (-1, 12, 13)], 7),
    (8, 3, 1, [(1, 1, 13), (-1, 3, 8), (1, 5, 7)], 8),
    (8, 4, 1, [(1, 1, 14), (1, 2, 12), (1, 6, 7)], 8),
    (8, 9, -1, [(1, 1, 16), (1, 5, 12), (-1, 6, 10)], 8),
    (8, 11, 1, [(1, 2, 16), (-1, 5, 14), (1, 6, 13)], 8),
    (8, 15, -1, [(1, 7, 16), (1, 10, 14), (-1, 12, 13)], 8),
    (9, 2, -1, [(1, 1, 11), (-1, 3, 6), (1, 4, 5)], 9),
    (9, 7, 1, [(1, 1, 15), (-1, 3, 12), (1, 4, 10)], 9),
    (9, 8, -1, [(1, 1, 16), (1, 5, 12), (-1, 6, 10)], 9),
    (9, 13, -1, [(1, 3, 16), (1, 5, 15), (-1, 10, 11)], 9),
    (9, 14, -1, [(1, 4, 16), (1, 6, 15), (-1, 11, 12)], 9),
    (10, 2, -1, [(1, 1, 13), (-1, 3, 8), (1, 5, 7)], 10),
    (10, 4, -1, [(1, 1, 15), (-1, 3, 12), (-1, 7, 9)], 10),
    (10, 6, 1, [(1, 1, 16), (1, 5, 12), (1, 8, 9)], 10),
    (10, 11, 1, [(1, 3, 16), (1, 5, 15), (1, 9, 13)], 11),
    (10, 14, -1, [(1, 7, 16), (1, 8, 15), (-1, 12, 13)], 10),
    (11, 1, -1, [(1, 2, 9), (-1, 3, 6), (1, 4, 5)], 11),
    (11, 7, -1, [(1, 2, 15), (1, 3, 14), (-1, 4, 13)], 11),
    (11, 8, 1, [(1, 2, 16), (-1, 5, 14), (1, 6, 13)], 11),
    (11, 10, 1, [(1, 3, 16), (1, 5, 15), (1, 9, 13)], 11),
    (11, 12, 1, [(1, 4, 16), (1, 6, 15), (1, 9, 14)], 11),
    (12, 2, -1, [(1, 1, 14), (1, 6, 7), (-1, 4, 8)], 12),
    (12, 3, 1, [(1, 1, 15), (-1, 7, 9), (1, 4, 10)], 12),
    (12, 5, -1, [(1, 1, 16), (1, 8, 9), (-1, 6, 10)], 12),
    (12, 11, 1, [(1, 4, 16), (1, 6, 15), (1, 9, 14)], 12),
    (12, 13, 1, [(1, 7, 16), (1, 8, 15), (1, 10, 14)], 12),
    (13, 1, -1, [(1, 1, 13), (-1, 3, 8), (1, 5, 7)], 13),
    (13, 4, 1, [(1, 2, 15), (1, 3, 14), (1, 7, 11)], 13),
    (13, 6, -1, [(1, 2, 16), (-1, 5, 14), (-1, 8, 11)], 13),
    (13, 9, -1, [(1, 3, 16), (1, 5, 15), (-1, 10, 11)], 13),
    (13, 12, 1, [(1, 7, 16), (1, 8, 15), (1, 10, 14)], 13),
    (14, 1, -1, [(1, 2, 12), (-1, 4, 8), (1, 6, 7)], 14),
    (14, 3, -1, [(1, 2, 15), (-1, 4, 13), (1, 7, 11)], 14),
    (14, 5, 1, [(1, 2, 16), (1, 6, 13), (-1, 8, 11)], 14),
    (14, 9, -1, [(1, 4, 16), (1, 6, 15), (-1, 11, 12)], 14),
    (14, 10, -1, [(1, 7, 16), (1, 8, 15), (-1, 12, 13)], 14),
    (15, 1, 1, [(1, 3, 12), (-1, 4, 10), (1, 7, 9)], 15),
    (15, 2, -1, [(1, 3, 14), (-1, 4, 13), (1, 7, 11)], 15),
    (15, 5, -1, [(1, 3, 16), (1, 9, 13), (-1, 10, 11)], 15),
    (15, 6, -1, [(1, 4, 16), (1, 9, 14), (-1, 11, 12)], 15),
    (15, 8, -1, [(1, 7, 16), (1, 10, 14), (-1, 12, 13)], 15),
    (16, 1, -1, [(1, 5, 12), (-1, 6, 10), (1, 8, 9)], 16),
    (16, 2, 1, [(1, 5, 14), (-1, 6, 13), (1, 8, 11)], 16),
    (16, 3, -1, [(1, 5, 15), (1, 9, 13), (-1, 10, 11)], 16),
    (16, 4, -1, [(1, 6, 15), (1, 9, 14), (-1, 11, 12)], 16),
    (16, 7, -1, [(1, 8, 15), (1, 10, 14), (-1, 12, 13)], 16),
];
