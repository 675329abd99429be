//! The 22 raw case r-matrices, entry by entry as bosonic and fermionic 4x4 blocks.
//!
//! Square roots are avoided by parametrizing cases 14 and 15 through `sJ` and `sN`
//! with `J = sJ^2` and `N = sN^2`.

pub(super) struct RawCase {
    pub case: u32,
    pub r_b: [[&'static str; 4]; 4],
    pub r_f: [[&'static str; 4]; 4],
}

pub(super) const RAW_CASES: &[RawCase] = &[
    RawCase {
        case: 1,
        r_b: [
            ["0", "J/2", "-2*K*L/J", "K+L"],
            ["-J/2", "0", "-(K+L)/2", "J/2"],
            ["2*K*L/J", "(K+L)/2", "0", "2*K*L/J"],
            ["-(K+L)", "-J/2", "-2*K*L/J", "0"],
        ],
        r_f: [
            ["U*J/(2*L)", "U", "0", "(K-L)/2"],
            ["U", "2*U*L/J", "(-K+L)/2", "0"],
            ["0", "(-K+L)/2", "0", "0"],
            ["(K-L)/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 2,
        r_b: [
            ["0", "0", "L*N/(2*(2*K+L))", "2*K+L"],
            ["0", "0", "-L/2", "0"],
            ["-L*N/(2*(2*K+L))", "L/2", "0", "-N/2"],
            ["-2*K-L", "0", "N/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "-L/2"],
            ["0", "0", "L/2", "0"],
            ["0", "L/2", "0", "0"],
            ["-L/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 3,
        r_b: [
            ["0", "Y", "L*(-2*K-L)/Y", "0"],
            ["-Y", "0", "-(K+L)", "0"],
            ["L*(2*K+L)/Y", "K+L", "0", "0"],
            ["0", "0", "0", "0"],
        ],
        r_f: [
            ["0", "0", "0", "K"],
            ["0", "0", "-K", "0"],
            ["0", "-K", "0", "0"],
            ["K", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 4,
        r_b: [
            ["0", "J*L/M", "M*(K^2-L^2)/(J*L)", "M"],
            ["-J*L/M", "0", "-L", "J/2"],
            ["M*(-K^2+L^2)/(J*L)", "L", "0", "M^2*(-K^2+L^2)/(2*J*L^2)"],
            ["-M", "-J/2", "M^2*(K^2-L^2)/(2*J*L^2)", "0"],
        ],
        r_f: [
            ["0", "0", "0", "K"],
            ["0", "0", "-K", "0"],
            ["0", "-K", "0", "0"],
            ["K", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 5,
        r_b: [
            ["0", "0", "N/2", "L"],
            ["0", "0", "-L/2", "0"],
            ["-N/2", "L/2", "0", "-N/2"],
            ["-L", "0", "N/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "-L/2"],
            ["0", "B", "L/2", "0"],
            ["0", "L/2", "0", "0"],
            ["-L/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 6,
        r_b: [
            ["0", "0", "-2*Z", "0"],
            ["0", "0", "M", "0"],
            ["2*Z", "-M", "0", "0"],
            ["0", "0", "0", "0"],
        ],
        r_f: [
            ["-M*U/Z", "U", "0", "0"],
            ["U", "-U*Z/M", "M", "-Z"],
            ["0", "M", "0", "0"],
            ["0", "-Z", "0", "-M*Z/U"],
        ],
    },
    RawCase {
        case: 7,
        r_b: [
            ["0", "0", "-N/2", "M"],
            ["0", "0", "M/2", "0"],
            ["N/2", "-M/2", "0", "-N/2"],
            ["-M", "0", "N/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "-M/2"],
            ["0", "0", "M/2", "0"],
            ["0", "M/2", "0", "0"],
            ["-M/2", "0", "0", "T"],
        ],
    },
    RawCase {
        case: 8,
        r_b: [
            ["0", "-X", "-Z", "-S"],
            ["X", "0", "S/2", "-X"],
            ["Z", "-S/2", "0", "Z"],
            ["S", "X", "-Z", "0"],
        ],
        r_f: [
            ["0", "0", "X", "S/2"],
            ["0", "0", "S/2", "-Z"],
            ["X", "S/2", "P", "C"],
            ["S/2", "-Z", "C", "T"],
        ],
    },
    RawCase {
        case: 9,
        r_b: [
            ["0", "-2*X", "0", "0"],
            ["2*X", "0", "M", "0"],
            ["0", "-M", "0", "0"],
            ["0", "0", "0", "0"],
        ],
        r_f: [
            ["X*M/C", "0", "X", "0"],
            ["0", "0", "M", "0"],
            ["X", "M", "X*C/M", "C"],
            ["0", "0", "C", "M*C/X"],
        ],
    },
    RawCase {
        case: 10,
        r_b: [
            ["0", "-X", "-Z", "0"],
            ["X", "0", "0", "J/2"],
            ["Z", "0", "0", "-Z*J/(2*X)"],
            ["0", "-J/2", "Z*J/(2*X)", "0"],
        ],
        r_f: [
            ["0", "0", "X", "0"],
            ["0", "0", "0", "-Z"],
            ["X", "0", "0", "0"],
            ["0", "-Z", "0", "0"],
        ],
    },
    RawCase {
        case: 11,
        r_b: [
            ["0", "0", "-2*Z", "0"],
            ["0", "0", "K", "0"],
            ["2*Z", "-K", "0", "0"],
            ["0", "0", "0", "0"],
        ],
        r_f: [
            ["0", "0", "0", "K"],
            ["0", "-K*Z/C", "0", "-Z"],
            ["0", "0", "-K*C/Z", "C"],
            ["K", "-Z", "C", "-Z*C/K"],
        ],
    },
    RawCase {
        case: 12,
        r_b: [
            ["0", "0", "-N/2", "K"],
            ["0", "0", "K/2", "0"],
            ["N/2", "-K/2", "0", "-N/2"],
            ["-K", "0", "N/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "K/2"],
            ["0", "0", "-K/2", "0"],
            ["0", "-K/2", "-2*K*C/N", "C"],
            ["K/2", "0", "C", "-N*C/(2*K)"],
        ],
    },
    RawCase {
        case: 13,
        r_b: [
            ["0", "-J/2", "2*M*K/J", "M+K"],
            ["J/2", "0", "(M+K)/2", "J/2"],
            ["-2*M*K/J", "-(M+K)/2", "0", "2*M*K/J"],
            ["-(M+K)", "-J/2", "-2*M*K/J", "0"],
        ],
        r_f: [
            ["0", "0", "0", "(-M+K)/2"],
            ["0", "0", "(M-K)/2", "0"],
            ["0", "(M-K)/2", "J*C/(2*M)", "C"],
            ["(-M+K)/2", "0", "C", "2*M*C/J"],
        ],
    },
    RawCase {
        case: 14,
        r_b: [
            ["0", "sJ*G/sN", "G*sN/sJ", "0"],
            ["-sJ*G/sN", "0", "0", "sJ^2/2"],
            ["-G*sN/sJ", "0", "0", "-sN^2/2"],
            ["0", "-sJ^2/2", "sN^2/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "G"],
            ["0", "0", "-G", "0"],
            ["0", "-G", "0", "0"],
            ["G", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 15,
        r_b: [
            ["0", "-sJ*G/sN", "-G*sN/sJ", "0"],
            ["sJ*G/sN", "0", "0", "sJ^2/2"],
            ["G*sN/sJ", "0", "0", "-sN^2/2"],
            ["0", "-sJ^2/2", "sN^2/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "G"],
            ["0", "0", "-G", "0"],
            ["0", "-G", "0", "0"],
            ["G", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 16,
        r_b: [
            ["0", "-J/2", "0", "K"],
            ["J/2", "0", "K/2", "J/2"],
            ["0", "-K/2", "0", "0"],
            ["-K", "-J/2", "0", "0"],
        ],
        r_f: [
            ["0", "0", "0", "K/2"],
            ["0", "0", "-K/2", "0"],
            ["0", "-K/2", "P", "0"],
            ["K/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 17,
        r_b: [
            ["0", "-2*X", "2*U*C/X", "0"],
            ["2*X", "0", "(U*C+K^2)/K", "0"],
            ["-2*U*C/X", "-(U*C+K^2)/K", "0", "0"],
            ["0", "0", "0", "0"],
        ],
        r_f: [
            ["X*U/K", "U", "X", "K"],
            ["U", "U*K/X", "U*C/K", "U*C/X"],
            ["X", "U*C/K", "X*K/U", "C"],
            ["K", "U*C/X", "C", "U*C^2/(X*K)"],
        ],
    },
    RawCase {
        case: 18,
        r_b: [
            ["0", "0", "N/2", "K"],
            ["0", "0", "-K/2", "0"],
            ["-N/2", "K/2", "0", "-N/2"],
            ["-K", "0", "N/2", "0"],
        ],
        r_f: [
            ["-2*U*K/N", "U", "0", "K/2"],
            ["U", "-U*N/(2*K)", "-K/2", "0"],
            ["0", "-K/2", "0", "0"],
            ["K/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 19,
        r_b: [
            ["0", "J/2", "0", "K"],
            ["-J/2", "0", "-K/2", "J/2"],
            ["0", "K/2", "0", "0"],
            ["-K", "-J/2", "0", "0"],
        ],
        r_f: [
            ["F", "0", "0", "K/2"],
            ["0", "0", "-K/2", "0"],
            ["0", "-K/2", "0", "0"],
            ["K/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 20,
        r_b: [
            ["0", "0", "N*(-M+K)/(2*(M+K))", "M+K"],
            ["0", "0", "(M-K)/2", "0"],
            ["N*(M-K)/(2*(M+K))", "(-M+K)/2", "0", "-N/2"],
            ["-(M+K)", "0", "N/2", "0"],
        ],
        r_f: [
            ["0", "0", "0", "(-M+K)/2"],
            ["0", "0", "(M-K)/2", "0"],
            ["0", "(M-K)/2", "0", "0"],
            ["(-M+K)/2", "0", "0", "0"],
        ],
    },
    RawCase {
        case: 21,
        r_b: [
            ["0", "-X", "-Z", "K-S"],
            ["X", "0", "(K+S)/2", "X*(K-S)/(K+S)"],
            ["Z", "-(K+S)/2", "0", "Z*(-K+S)/(K+S)"],
            ["-K+S", "X*(-K+S)/(K+S)", "Z*(K-S)/(K+S)", "0"],
        ],
        r_f: [
            ["0", "0", "X", "(K+S)/2"],
            ["0", "0", "(K+S)/2", "-Z"],
            ["X", "(K+S)/2", "0", "0"],
            ["(K+S)/2", "-Z", "0", "0"],
        ],
    },
    RawCase {
        case: 22,
        r_b: [
            ["0", "-X", "-Z", "K"],
            ["X", "0", "K/2", "X"],
            ["Z", "-K/2", "0", "-Z"],
            ["-K", "-X", "Z", "0"],
        ],
        r_f: [
            ["F", "U", "X", "K/2"],
            ["U", "B", "K/2", "-Z"],
            ["X", "K/2", "0", "0"],
            ["K/2", "-Z", "0", "0"],
        ],
    },
];
