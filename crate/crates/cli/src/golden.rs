//! Reference data transcribed from the published tables and examples.

/// `P*(b, x)` for `b = 3, 5, ..., 21`, compact rendering.
pub const TABLE1: [(u64, &str); 10] = [
    (3, "x-1"),
    (5, "x^2+(1-2ρ)x+1"),
    (7, "x^3+(3-2ρ^2)x^2+2ρx-1"),
    (9, "x^3-2ρx^2+(-3+2ρ^2)x-1"),
    (11, "x^5+(-1+6ρ^2-2ρ^4)x^4+(-4-2ρ+2ρ^2+2ρ^3)x^3+(1+8ρ-8ρ^2-4ρ^3+2ρ^4)x^2+(3+4ρ-12ρ^2-2ρ^3+4ρ^4)x-1"),
    (13, "x^6+(1-6ρ+8ρ^3-2ρ^5)x^5+(-3-2ρ-4ρ^2+2ρ^3+2ρ^4)x^4+(-6+14ρ+10ρ^2-12ρ^3-4ρ^4+2ρ^5)x^3+(2+16ρ-24ρ^3+6ρ^5)x^2+(1-14ρ+10ρ^3-2ρ^5)x+1"),
    (15, "x^4+(3-8ρ-2ρ^2+2ρ^3)x^3+(-18ρ+6ρ^3)x^2+(-2-10ρ+2ρ^3)x+1"),
    (17, "x^8+(1+8ρ-20ρ^3+12ρ^5-2ρ^7)x^7+(-7+4ρ+8ρ^2-6ρ^3-8ρ^4+2ρ^5+2ρ^6)x^6+(-26ρ-38ρ^2+60ρ^3+36ρ^4-30ρ^5-8ρ^6+4ρ^7)x^5+(9-46ρ+124ρ^3-6ρ^4-80ρ^5+2ρ^6+14ρ^7)x^4+(52ρ+32ρ^2-142ρ^3-24ρ^4+84ρ^5+4ρ^6-14ρ^7)x^3+(-12+8ρ+68ρ^2-52ρ^3-52ρ^4+36ρ^5+10ρ^6-6ρ^7)x^2+(-20ρ+6ρ^2+20ρ^3-2ρ^4-4ρ^5)x+1"),
    (19, "x^9+(-1+20ρ^2-30ρ^4+14ρ^6-2ρ^8)x^8+(-8-4ρ+8ρ^2+14ρ^3-8ρ^4-10ρ^5+2ρ^6+2ρ^7)x^7+(3+22ρ-78ρ^2-60ρ^3+96ρ^4+42ρ^5-36ρ^6-8ρ^7+4ρ^8)x^6+(29-14ρ-156ρ^2+38ρ^3+244ρ^4-30ρ^5-120ρ^6+6ρ^7+18ρ^8)x^5+(-17-8ρ+254ρ^2-8ρ^3-350ρ^4+8ρ^5+156ρ^6-2ρ^7-22ρ^8)x^4+(-20-30ρ+112ρ^2+90ρ^3-136ρ^4-56ρ^5+52ρ^6+10ρ^7-6ρ^8)x^3+(8+22ρ-90ρ^2-28ρ^3+84ρ^4+20ρ^5-24ρ^6-4ρ^7+2ρ^8)x^2+(5+10ρ-54ρ^2-10ρ^3+54ρ^4+2ρ^5-18ρ^6+2ρ^8)x-1"),
    (21, "x^6+(-1-12ρ+10ρ^3-2ρ^5)x^5+(-10-26ρ-2ρ^2+16ρ^3+2ρ^4-2ρ^5)x^4+(36ρ+16ρ^2-26ρ^3-6ρ^4+4ρ^5)x^3+(18+60ρ-10ρ^2-44ρ^3+2ρ^4+8ρ^5)x^2+(10+10ρ-18ρ^2-4ρ^3+4ρ^4)x+1"),
];

/// `MDS(b)` for `b = 3, 5, ..., 71`, cycles joined by `", "`.
pub const TABLE2: [(u64, &str); 35] = [
    (3, "[1]"),
    (5, "[2, 1]"),
    (7, "[2, 3, 1]"),
    (9, "[2, 4, 1]"),
    (11, "[2, 4, 3, 5, 1]"),
    (13, "[2, 4, 5, 3, 6, 1]"),
    (15, "[2, 4, 7, 1]"),
    (17, "[2, 4, 8, 1], [6, 5, 7, 3]"),
    (19, "[2, 4, 8, 3, 6, 7, 5, 9, 1]"),
    (21, "[2, 4, 8, 5, 10, 1]"),
    (23, "[2, 4, 8, 7, 9, 5, 10, 3, 6, 11, 1]"),
    (25, "[2, 4, 8, 9, 7, 11, 3, 6, 12, 1]"),
    (27, "[2, 4, 8, 11, 5, 10, 7, 13, 1]"),
    (29, "[2, 4, 8, 13, 3, 6, 12, 5, 10, 9, 11, 7, 14, 1]"),
    (31, "[2, 4, 8, 15, 1], [6, 12, 7, 14, 3], [10, 11, 9, 13, 5]"),
    (33, "[2, 4, 8, 16, 1], [10, 13, 7, 14, 5]"),
    (35, "[2, 4, 8, 16, 3, 6, 12, 11, 13, 9, 17, 1]"),
    (37, "[2, 4, 8, 16, 5, 10, 17, 3, 6, 12, 13, 11, 15, 7, 14, 9, 18, 1]"),
    (39, "[2, 4, 8, 16, 7, 14, 11, 17, 5, 10, 19, 1]"),
    (41, "[2, 4, 8, 16, 9, 18, 5, 10, 20, 1], [6, 12, 17, 7, 14, 13, 15, 11, 19, 3]"),
    (43, "[2, 4, 8, 16, 11, 21, 1], [6, 12, 19, 5, 10, 20, 3], [14, 15, 13, 17, 9, 18, 7]"),
    (45, "[2, 4, 8, 16, 13, 19, 7, 14, 17, 11, 22, 1]"),
    (47, "[2, 4, 8, 16, 15, 17, 13, 21, 5, 10, 20, 7, 14, 19, 9, 18, 11, 22, 3, 6, 12, 23, 1]"),
    (49, "[2, 4, 8, 16, 17, 15, 19, 11, 22, 5, 10, 20, 9, 18, 13, 23, 3, 6, 12, 24, 1]"),
    (51, "[2, 4, 8, 16, 19, 13, 25, 1], [10, 20, 11, 22, 7, 14, 23, 5]"),
    (53, "[2, 4, 8, 16, 21, 11, 22, 9, 18, 17, 19, 15, 23, 7, 14, 25, 3, 6, 12, 24, 5, 10, 20, 13, 26, 1]"),
    (55, "[2, 4, 8, 16, 23, 9, 18, 19, 17, 21, 13, 26, 3, 6, 12, 24, 7, 14, 27, 1]"),
    (57, "[2, 4, 8, 16, 25, 7, 14, 28, 1], [10, 20, 17, 23, 11, 22, 13, 26, 5]"),
    (59, "[2, 4, 8, 16, 27, 5, 10, 20, 19, 21, 17, 25, 9, 18, 23, 13, 26, 7, 14, 28, 3, 6, 12, 24, 11, 22, 15, 29, 1]"),
    (61, "[2, 4, 8, 16, 29, 3, 6, 12, 24, 13, 26, 9, 18, 25, 11, 22, 17, 27, 7, 14, 28, 5, 10, 20, 21, 19, 23, 15, 30, 1]"),
    (63, "[2, 4, 8, 16, 31, 1], [10, 20, 23, 17, 29, 5], [22, 19, 25, 13, 26, 11]"),
    (65, "[2, 4, 8, 16, 32, 1], [6, 12, 24, 17, 31, 3], [14, 28, 9, 18, 29, 7], [22, 21, 23, 19, 27, 11]"),
    (67, "[2, 4, 8, 16, 32, 3, 6, 12, 24, 19, 29, 9, 18, 31, 5, 10, 20, 27, 13, 26, 15, 30, 7, 14, 28, 11, 22, 23, 21, 25, 17, 33, 1]"),
    (69, "[2, 4, 8, 16, 32, 5, 10, 20, 29, 11, 22, 25, 19, 31, 7, 14, 28, 13, 26, 17, 34, 1]"),
    (71, "[2, 4, 8, 16, 32, 7, 14, 28, 15, 30, 11, 22, 27, 17, 34, 3, 6, 12, 24, 23, 25, 21, 29, 13, 26, 19, 33, 5, 10, 20, 31, 9, 18, 35, 1]"),
];
/// Upper rows of the coach system of 65.
pub const SIGMA_65_A: [&[u64]; 4] = [&[1], &[3, 31, 17], &[7, 29, 9], &[11, 27, 19, 23, 21]];

/// Lower rows of the coach system of 65.
pub const SIGMA_65_K: [&[u32]; 4] = [&[6], &[1, 1, 4], &[1, 2, 3], &[1, 1, 1, 1, 2]];

/// Signed Schick cycles of 65.
pub const SBB_SIGNED_65: [[i64; 6]; 4] = [
    [-1, 63, -61, -57, -49, -33],
    [3, 59, -53, -41, -17, 31],
    [7, 51, -37, -9, 47, -29],
    [11, 43, -21, 23, 19, 27],
];

/// The Euler tour `ET(7, 1)`.
pub const ET_7_1: [u64; 42] = [
    0, 1, 6, 9, 10, 1, 4, 5, 10, 13, 0, 5, 8, 9, 0, 3, 4, 9, 12, 13, 4, 7, 8, 13, 2, 3, 8, 11, 12,
    3, 6, 7, 12, 1, 2, 7, 10, 11, 2, 5, 6, 11,
];

/// Coefficients of `Psi^re_65(x)`, ascending.
pub const PSI_RE_65: [i64; 25] = [
    1, -12, -180, -101, 2085, 1802, -9126, -7168, 20886, 13653, -28667, -15001, 25284, 10282,
    -14822, -4540, 5832, 1292, -1521, -229, 252, 23, -24, -1, 1,
];

/// `IcoS(17, 1)` and `IcoS(17, 3)` as `(sign, residue)`.
pub const ICOS_17: [[(i8, u64); 4]; 2] = [
    [(1, 2), (1, 4), (1, 8), (-1, 1)],
    [(1, 6), (-1, 5), (-1, 7), (-1, 3)],
];

/// Ten-digit values of the first cycle of 17.
pub const ICOS_17_FINE: [f64; 4] = [1.864944459, 1.478017835, 0.1845367190, -1.965946199];

/// Truncated four-digit values of both cycles of 17.
pub const ICOS_17_TRUNCATED: [[f64; 4]; 2] = [
    [1.8649, 1.4780, 0.1845, -1.9659],
    [0.8914, -1.2052, -0.5473, -1.7004],
];
