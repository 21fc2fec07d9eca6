"""Constant tables shared by both kernel backends."""

# Every prime below 1000. The parameter search walks these before switching
# to plain integers at 998.
PRIMES_BELOW_1000 = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
    211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277,
    281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359,
    367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439,
    443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521,
    523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607,
    613, 617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683,
    691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773,
    787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863,
    877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953, 967,
    971, 977, 983, 991, 997,
)

# Deterministic Miller-Rabin witnesses for all n < 2**64.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_LIMIT = 10_000

U64_LIMIT = 1 << 64

# Reason codes exchanged with the kernels.
PASSED = 0
DIVISIBLE_BY_3 = 1
SMALL_FACTOR = 2
NO_NONCUBE_FOUND = 3
COND_X = 4
COND_Y = 5
COND_Z = 6
COND_QUADRATIC = 7
FERMAT_BASE2 = 8

# Test modes.
MODE_LINEAR = 0
MODE_STRONG = 1
MODE_DROP_FOURTH = 2
