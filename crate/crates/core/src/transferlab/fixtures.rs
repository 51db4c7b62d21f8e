//! Explicit elements used by the verification suites, stored as printed.
//!
//! Monomials and dual monomials are exponent tuples over four variables;
//! lambda monomials are index tuples.

/// Admissible basis of `Q_9` in four variables, `a_{1,1} .. a_{1,46}`.
pub const ADMISSIBLE_9: [[u32; 4]; 46] = [
    [0, 1, 1, 7], [0, 1, 7, 1], [0, 7, 1, 1], [1, 0, 1, 7], [1, 0, 7, 1], [1, 1, 0, 7],
    [1, 1, 7, 0], [1, 7, 0, 1], [1, 7, 1, 0], [7, 0, 1, 1], [7, 1, 0, 1], [7, 1, 1, 0],
    [0, 1, 3, 5], [0, 3, 1, 5], [0, 3, 5, 1], [1, 0, 3, 5], [1, 3, 0, 5], [1, 3, 5, 0],
    [3, 0, 1, 5], [3, 0, 5, 1], [3, 1, 0, 5], [3, 1, 5, 0], [3, 5, 0, 1], [3, 5, 1, 0],
    [0, 3, 3, 3], [3, 0, 3, 3], [3, 3, 0, 3], [3, 3, 3, 0],
    [1, 1, 1, 6], [1, 1, 6, 1], [1, 6, 1, 1], [1, 1, 2, 5], [1, 2, 1, 5], [1, 2, 5, 1],
    [1, 2, 3, 3], [1, 3, 2, 3], [1, 3, 3, 2], [3, 1, 2, 3], [3, 1, 3, 2], [3, 3, 1, 2],
    [1, 1, 3, 4], [1, 3, 1, 4], [1, 3, 4, 1], [3, 1, 1, 4], [3, 1, 4, 1], [3, 4, 1, 1],
];

/// 1-based indices into [`ADMISSIBLE_9`] summed by `q_{1,1} .. q_{1,4}`.
pub const Q_SIGMA_9: [&[usize]; 4] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
    &[13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24],
    &[25, 26, 27, 28],
    &[29, 30, 31, 44, 45, 46],
];

/// Admissible basis of `Q_17` in four variables, `b_{1,1} .. b_{1,87}`.
///
/// Entries 13 to 40 are printed with misplaced or missing factors; they are
/// stored as the admissible arrangements of each printed exponent pattern
/// (see the orbit descriptions next to the table).
pub const ADMISSIBLE_17: [[u32; 4]; 87] = [
    [0, 3, 7, 7], [0, 7, 3, 7], [0, 7, 7, 3], [3, 0, 7, 7], [7, 0, 3, 7], [7, 0, 7, 3],
    [3, 7, 0, 7], [7, 3, 0, 7], [7, 7, 0, 3], [3, 7, 7, 0], [7, 3, 7, 0], [7, 7, 3, 0],
    [1, 1, 15, 0], [1, 15, 1, 0], [15, 1, 1, 0], [0, 1, 1, 15], [0, 1, 15, 1], [0, 15, 1, 1],
    [1, 0, 1, 15], [1, 0, 15, 1], [15, 0, 1, 1], [1, 1, 0, 15], [1, 15, 0, 1], [15, 1, 0, 1],
    [1, 3, 13, 0], [3, 1, 13, 0], [3, 13, 1, 0], [0, 1, 3, 13], [0, 3, 1, 13], [0, 3, 13, 1],
    [1, 0, 3, 13], [3, 0, 1, 13], [3, 0, 13, 1], [1, 3, 0, 13], [3, 1, 0, 13], [3, 13, 0, 1],
    [3, 5, 9, 0], [0, 3, 5, 9], [3, 0, 5, 9], [3, 5, 0, 9],
    [1, 1, 1, 14], [1, 1, 14, 1], [1, 14, 1, 1], [1, 1, 2, 13], [1, 2, 1, 13], [1, 2, 13, 1],
    [1, 2, 5, 9], [1, 2, 7, 7], [1, 7, 2, 7], [1, 7, 7, 2], [7, 1, 2, 7], [7, 1, 7, 2],
    [7, 7, 1, 2], [1, 3, 6, 7], [1, 3, 7, 6], [1, 6, 3, 7], [1, 6, 7, 3], [1, 7, 3, 6],
    [1, 7, 6, 3], [3, 1, 6, 7], [3, 1, 7, 6], [3, 7, 1, 6], [7, 1, 3, 6], [7, 1, 6, 3],
    [7, 3, 1, 6], [3, 5, 2, 7], [3, 5, 7, 2], [3, 7, 5, 2], [7, 3, 5, 2], [3, 3, 5, 6],
    [3, 5, 3, 6], [3, 5, 6, 3],
    [3, 3, 4, 7], [3, 3, 7, 4], [3, 7, 3, 4], [7, 3, 3, 4], [1, 1, 3, 12], [1, 3, 1, 12],
    [1, 3, 12, 1], [3, 1, 1, 12], [3, 1, 12, 1], [1, 3, 4, 9], [3, 1, 4, 9], [1, 3, 5, 8],
    [3, 1, 5, 8], [3, 5, 1, 8], [3, 5, 8, 1],
];

/// Kernel of the Kameko map out of `Q_4`, `c_{1,1} .. c_{1,20}`.
pub const KAMEKO_KERNEL_4: [[u32; 4]; 20] = [
    [0, 0, 1, 3], [0, 0, 3, 1], [0, 1, 0, 3], [0, 1, 3, 0], [0, 3, 0, 1], [0, 3, 1, 0],
    [1, 0, 0, 3], [1, 0, 3, 0], [1, 3, 0, 0], [3, 0, 0, 1], [3, 0, 1, 0], [3, 1, 0, 0],
    [0, 1, 1, 2], [0, 1, 2, 1], [1, 0, 1, 2], [1, 0, 2, 1], [1, 1, 0, 2], [1, 1, 2, 0],
    [1, 2, 0, 1], [1, 2, 1, 0],
];

/// The primitive `zeta_1` of degree 9.
pub const ZETA_9: [[u32; 4]; 4] = [[1, 3, 3, 2], [1, 3, 4, 1], [1, 5, 2, 1], [1, 6, 1, 1]];

/// The 44-term primitive of degree 17.
pub const ZETA_17: [[u32; 4]; 44] = [
    [5, 5, 5, 2], [5, 5, 6, 1], [3, 5, 8, 1], [5, 3, 8, 1], [3, 6, 7, 1], [5, 7, 4, 1],
    [7, 5, 4, 1], [3, 9, 4, 1], [9, 3, 4, 1], [3, 9, 3, 2], [9, 3, 3, 2], [5, 9, 2, 1],
    [9, 5, 2, 1], [5, 10, 1, 1], [9, 6, 1, 1], [3, 11, 2, 1], [11, 3, 2, 1], [5, 5, 3, 4],
    [5, 3, 5, 4], [3, 5, 5, 4], [3, 12, 1, 1], [11, 4, 1, 1], [7, 8, 1, 1], [7, 7, 1, 2],
    [13, 2, 1, 1], [14, 1, 1, 1], [6, 5, 3, 3], [5, 3, 6, 3], [3, 6, 5, 3], [6, 3, 3, 5],
    [3, 3, 6, 5], [3, 6, 3, 5], [5, 3, 3, 6], [3, 5, 3, 6], [3, 3, 5, 6], [3, 3, 3, 8],
    [3, 3, 4, 7], [3, 5, 2, 7], [3, 6, 1, 7], [3, 3, 9, 2], [3, 3, 10, 1], [5, 3, 7, 2],
    [5, 7, 3, 2], [7, 5, 3, 2],
];

/// `psi_4` of single dual monomials, as printed (not in admissible form).
pub const PSI_IDENTITIES: [([u32; 4], &[[u32; 4]]); 4] = [
    ([1, 3, 3, 2], &[[1, 3, 3, 2], [1, 3, 4, 1], [1, 4, 3, 1]]),
    ([1, 3, 4, 1], &[[1, 3, 4, 1], [1, 4, 3, 1], [1, 5, 2, 1]]),
    ([1, 5, 2, 1], &[[1, 5, 2, 1], [1, 6, 1, 1]]),
    ([1, 6, 1, 1], &[[1, 6, 1, 1]]),
];

/// Cycle representing `h_1 c_0` in `Ext^{4,13}`.
pub const H1C0: [[u32; 4]; 1] = [[1, 3, 3, 2]];

/// Cycle representing `c_0` in `Ext^{3,11}`.
pub const C0: [[u32; 3]; 1] = [[3, 3, 2]];

/// Cycle representing `e_0` in `Ext^{4,21}`.
pub const E0_BAR: [[u32; 4]; 5] = [[3, 3, 3, 8], [3, 5, 5, 4], [3, 3, 7, 4], [7, 5, 3, 2], [3, 3, 5, 6]];

/// `psi_4(zeta_17) = E0_BAR + d(E0_PREIMAGE)`.
pub const E0_PREIMAGE: [[u32; 3]; 4] = [[3, 5, 10], [3, 12, 3], [4, 7, 7], [0, 11, 7]];

/// `a_1^(1) a_2^(1) a_3^(31) a_4^(31)`, generating the coinvariants in degree 64.
pub const ZETA_64: [u32; 4] = [1, 1, 31, 31];

/// `a_1^(0) a_2^(3) a_3^(31) a_4^(31)`, generating the coinvariants in degree 65.
pub const ZETA_65: [u32; 4] = [0, 3, 31, 31];
