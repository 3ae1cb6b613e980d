"""Hand-transcribed reference objects: small complete lists and worked examples."""


def M(*rows):
    return tuple(tuple(int(c) for c in r) for r in rows)


SEQUENCES_TO_4 = {
    1: [(0,)],
    2: [(0, 0), (0, 1)],
    3: [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)],
    4: [
        (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 0, 0, 3), (0, 0, 1, 0), (0, 0, 1, 1),
        (0, 0, 1, 2), (0, 0, 1, 3), (0, 0, 2, 0), (0, 0, 2, 1), (0, 0, 2, 2), (0, 0, 2, 3),
        (0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 0, 2), (0, 1, 1, 0), (0, 1, 1, 1), (0, 1, 1, 2),
        (0, 1, 1, 3), (0, 1, 2, 0), (0, 1, 2, 1), (0, 1, 2, 2), (0, 1, 2, 3),
    ],
}

MATRICES_TO_4 = {
    1: [M("1")],
    2: [M("11", "00"), M("10", "01")],
    3: [
        M("11", "01"), M("111", "000", "000"), M("110", "001", "000"),
        M("110", "000", "001"), M("100", "011", "000"), M("100", "010", "001"),
    ],
    4: [
        M("111", "001", "000"), M("111", "000", "001"), M("110", "001", "001"),
        M("111", "010", "000"), M("110", "011", "000"), M("110", "010", "001"),
        M("101", "011", "000"), M("101", "010", "001"), M("100", "011", "001"),
        M("1111", "0000", "0000", "0000"), M("1110", "0001", "0000", "0000"),
        M("1110", "0000", "0001", "0000"), M("1110", "0000", "0000", "0001"),
        M("1100", "0011", "0000", "0000"), M("1100", "0010", "0001", "0000"),
        M("1100", "0010", "0000", "0001"), M("1100", "0000", "0011", "0000"),
        M("1100", "0000", "0010", "0001"), M("1000", "0111", "0000", "0000"),
        M("1000", "0110", "0001", "0000"), M("1000", "0110", "0000", "0001"),
        M("1000", "0100", "0011", "0000"), M("1000", "0100", "0010", "0001"),
    ],
}

EXAMPLE_SEQ = (0, 0, 2, 1, 1, 0, 1, 5)
EXAMPLE_PERM = (6, 2, 7, 5, 4, 1, 3, 8)

# the 6x6 matrix A, shared by the matrix and poset examples
A = M("110100", "001110", "001000", "000000", "000000", "000001")

# the matrix used to illustrate expand (differs from A at (4, 6))
EXPAND_SOURCE = M("110100", "001110", "001000", "000001", "000000", "000001")
EXPAND_2 = M("110100", "001110", "001001", "000001", "000000", "000001")
EXPAND_4 = M(
    "1101000", "0011100", "0010000", "0000010", "0000001", "0000010", "0000000"
)

# Omega chain from [1] along EXAMPLE_SEQ
OMEGA_CHAIN = [
    M("1"),
    M("11", "00"),
    M("110", "000", "001"),
    M("110", "001", "001"),
    M("1100", "0011", "0010", "0000"),
    M("1101", "0011", "0010", "0000"),
    M("11010", "00111", "00100", "00000", "00000"),
    A,
]

C = M("110100", "011110", "001000", "000000", "000000", "000001")
MERGE_C_24 = M("11100", "01110", "00100", "00000", "00000")
D = M("110011", "001110", "000101", "000000", "000000", "000000")
D1 = M("10011", "01110", "00101", "00000", "00000")
D2 = M("1011", "0110", "0011", "0000")

# the poset psi(A)
EXAMPLE_POSET_RELATIONS = (
    [(1, b) for b in (3, 4, 5, 7, 8)]
    + [(2, 3), (2, 8)]
    + [(a, 8) for a in (3, 4, 5, 6, 7)]
)
EXAMPLE_POSET_DOWNSETS = (0, 0, 2, 1, 1, 0, 1, 7)

# the labelled intermediate matrix B of Psi(A)
PSI_LABELS = (
    (1, 2, 0, 6, 0, 0),
    (0, 0, 4, 5, 7, 0),
    (0, 0, 3, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 8),
)

# set-valued matrix C of phi(psi(A)); cells below the diagonal are empty
PHI_PARTITION_MATRIX = [
    [[1], [2], [6], []],
    [[], [], [4, 5, 7], []],
    [[], [], [3], []],
    [[], [], [], [8]],
]

COUNTS = [1, 2, 6, 23, 106, 567, 3440, 23286]
FISHBURN = [1, 2, 5, 15, 53, 217, 1014, 5335]
