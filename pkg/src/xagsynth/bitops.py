# Bit-column helpers. A "column" is a Python int whose bit t holds the value
# of some signal at sample/point t; wide ints give cheap bit-parallel logic.


def full_mask(width: int) -> int:
    return (1 << width) - 1


def variable_column(arity: int, var: int) -> int:
    """Column of input x_var over all 2^arity points.

    Point x is an integer; bit j-1 of x is the value of x_j. So bit x of the
    returned column is (x >> (var-1)) & 1.
    """
    if not 1 <= var <= arity:
        raise ValueError(f"variable index {var} out of range 1..{arity}")
    block = 1 << (var - 1)
    full = full_mask(1 << arity)
    # full // (2^block + 1) has ones exactly where bit (var-1) is clear
    return (full // ((1 << block) + 1)) << block


def mobius_transform(bits: int, arity: int) -> int:
    """GF(2) subset-sum butterfly on a 2^arity-bit column; an involution.

    Maps a truth table to its ANF coefficient vector (coefficient of the
    monomial with variable set S lands at index S) and back.
    """
    full = full_mask(1 << arity)
    for j in range(arity):
        block = 1 << j
        low = full // ((1 << block) + 1)  # positions with bit j clear
        bits ^= (bits & low) << block
    return bits


def iter_one_bits(x: int, limit: int | None = None):
    """Yield positions of set bits of x, lowest first, up to limit."""
    n = 0
    while x:
        if limit is not None and n >= limit:
            return
        lsb = x & -x
        yield lsb.bit_length() - 1
        x ^= lsb
        n += 1
