//! Reference values for the twelve-node worked example: raw decision
//! matrix, intermediate matrices, scores and ranking.

pub const X: [[f64; 2]; 12] = [
    [1.22, 0.3465],
    [1.82, 0.3662],
    [2.71, 0.3342],
    [1.82, 0.3662],
    [2.71, 0.3218],
    [1.82, 0.3662],
    [1.49, 0.3465],
    [1.49, 0.3465],
    [1.82, 0.3665],
    [1.49, 0.3662],
    [1.22, 0.0],
    [1.49, 0.3465],
];

pub const WEIGHTS: [f64; 2] = [0.7, 0.3];

pub const X_STAR: [[f64; 2]; 12] = [
    [0.0, 0.9454],
    [0.4026, 0.9991],
    [1.0, 0.9118],
    [0.4026, 0.9991],
    [1.0, 0.8780],
    [0.4026, 0.9991],
    [0.1812, 0.9454],
    [0.1812, 0.9454],
    [0.4026, 1.0],
    [0.1812, 0.9991],
    [0.0, 0.0],
    [0.1812, 0.9454],
];

/// Row 10 column 2 is 0.3 * 0.9991 from `X_STAR`.
pub const R: [[f64; 2]; 12] = [
    [0.0, 0.2836],
    [0.2818, 0.2997],
    [0.7, 0.2735],
    [0.2818, 0.2997],
    [0.7, 0.2634],
    [0.2818, 0.2997],
    [0.1268, 0.2836],
    [0.1268, 0.2836],
    [0.2818, 0.3],
    [0.1268, 0.2997],
    [0.0, 0.0],
    [0.1268, 0.2836],
];

pub const C: [[f64; 12]; 12] = [
    [0.0, 0.0, 0.3, 0.0, 0.3, 0.0, 0.3, 0.3, 0.0, 0.0, 1.0, 0.3],
    [1.0, 0.0, 0.3, 1.0, 0.3, 1.0, 1.0, 1.0, 0.7, 1.0, 1.0, 1.0],
    [0.7, 0.7, 0.0, 0.7, 1.0, 0.7, 0.7, 0.7, 0.7, 0.7, 1.0, 0.7],
    [1.0, 1.0, 0.3, 0.0, 0.3, 1.0, 1.0, 1.0, 0.7, 1.0, 1.0, 1.0],
    [0.7, 0.7, 0.7, 0.7, 0.0, 0.7, 0.7, 0.7, 0.7, 0.7, 1.0, 0.7],
    [1.0, 1.0, 0.3, 1.0, 0.3, 0.0, 1.0, 1.0, 0.7, 1.0, 1.0, 1.0],
    [1.0, 0.0, 0.3, 0.0, 0.3, 0.0, 0.0, 1.0, 0.0, 0.7, 1.0, 1.0],
    [1.0, 0.0, 0.3, 0.0, 0.3, 0.0, 1.0, 0.0, 0.0, 0.7, 1.0, 1.0],
    [1.0, 1.0, 0.3, 1.0, 0.3, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0],
    [1.0, 0.3, 0.3, 0.3, 0.3, 0.3, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0],
    [0.7, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 0.0, 0.3, 0.0, 0.3, 0.0, 1.0, 1.0, 0.0, 0.7, 1.0, 0.0],
];

pub const D: [[f64; 12]; 12] = [
    [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0],
    [0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [
        0.01, 0.06, 0.0, 0.06, 0.0, 0.06, 0.01, 0.01, 0.06, 0.04, 0.0, 0.01,
    ],
    [0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [
        0.02, 0.08, 1.0, 0.08, 0.0, 0.08, 0.03, 0.03, 0.08, 0.06, 0.0, 0.03,
    ],
    [0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
    [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0],
    [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
];

pub const U: [[f64; 12]; 12] = [
    [
        0.0, -1.0, -0.7, -1.0, -0.7, -1.0, -0.7, -0.7, -1.0, -1.0, 1.0, -0.7,
    ],
    [
        1.0, 0.0, -0.7, 1.0, -0.7, 1.0, 1.0, 1.0, -0.3, 1.0, 1.0, 1.0,
    ],
    [
        0.68, 0.63, 0.0, 0.63, 1.0, 0.63, 0.68, 0.68, 0.63, 0.65, 1.0, 0.68,
    ],
    [
        1.0, 1.0, -0.7, 0.0, -0.7, 1.0, 1.0, 1.0, -0.3, 1.0, 1.0, 1.0,
    ],
    [
        0.67, 0.61, -0.3, 0.61, 0.0, 0.61, 0.66, 0.66, 0.61, 0.63, 1.0, 0.66,
    ],
    [
        1.0, 1.0, -0.7, 1.0, -0.7, 0.0, 1.0, 1.0, -0.3, 1.0, 1.0, 1.0,
    ],
    [
        1.0, -1.0, -0.7, -1.0, -0.7, -1.0, 0.0, 1.0, -1.0, -0.3, 1.0, 1.0,
    ],
    [
        1.0, -1.0, -0.7, -1.0, -0.7, -1.0, 1.0, 0.0, -1.0, -0.3, 1.0, 1.0,
    ],
    [1.0, 1.0, -0.7, 1.0, -0.7, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0],
    [
        1.0, -0.7, -0.7, -0.7, -0.7, -0.7, 1.0, 1.0, -1.0, 0.0, 1.0, 1.0,
    ],
    [
        -0.3, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, 0.0, -1.0,
    ],
    [
        1.0, -1.0, -0.7, -1.0, -0.7, -1.0, 1.0, 1.0, -1.0, -0.3, 1.0, 0.0,
    ],
];

pub const ZETA: [f64; 12] = [
    -16.55, 7.74, 15.53, 7.74, 13.25, 7.74, -8.34, -8.34, 12.75, -1.89, -21.3, -8.34,
];

/// One-based node labels, best first.
pub const RANKING: [usize; 12] = [3, 5, 9, 2, 4, 6, 10, 7, 8, 12, 1, 11];
