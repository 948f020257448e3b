"""Boolean functions on n variables: truth tables, Walsh spectra, algebraic
normal form, and a hex file format.

A TruthTable stores f as 2^n bits indexed by the integer encoding of the
input vector.  The Walsh coefficient at w is

    W(w) = sum_x (-1)^(f(x) + <w, x>)

with <w, x> the XOR of the bits of w & x; walsh_spectrum computes all 2^n
coefficients with the fast butterfly transform, and walsh_at / the
field-trace variant walsh_at_trace recompute single coefficients directly
as independent checks (the trace pairing is just a change of basis, so the
trace-indexed values are the same multiset).

f is bent when |W(w)| = 2^(n/2) for every w — only possible for even n, and
the flat spectrum is exactly Parseval's identity sum W^2 = 2^(2n) spread as
thin as it goes.

The same butterfly skeleton with XOR in place of +/- is the Mobius
transform, an involution between truth table and ANF coefficients; the
algebraic degree reads off the heaviest monomial index.

File format: the bits packed 8 per byte, bit b of byte j = f(8j + b), as one
line of lowercase hex; lines starting with `#` are comments (writers put
`m=.. family=..` provenance there) and are skipped on load.
"""

import numpy as np

from .field import FieldCtx

MAX_N = 26


class TruthTable:
    """An n-variable Boolean function as a read-only uint8 0/1 array."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be in [1, {MAX_N}]")
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.shape != (1 << n,):
            raise ValueError(f"need exactly 2^{n} bits, got shape {bits.shape}")
        if bits.max(initial=0) > 1:
            raise ValueError("truth-table entries must be 0 or 1")
        bits = bits.copy()
        bits.setflags(write=False)
        self.n = n
        self.bits = bits

    def __repr__(self):
        return f"TruthTable(n={self.n}, weight={self.weight()})"

    def __eq__(self, other):
        return (isinstance(other, TruthTable) and self.n == other.n
                and np.array_equal(self.bits, other.bits))

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __call__(self, x: int) -> int:
        return int(self.bits[x])

    def weight(self) -> int:
        return int(self.bits.sum())

    def is_balanced(self) -> bool:
        return self.weight() == 1 << (self.n - 1)

    def complement(self) -> "TruthTable":
        return TruthTable(self.n, self.bits ^ 1)


def walsh_spectrum(tt: TruthTable) -> np.ndarray:
    """All 2^n Walsh coefficients, int32, index = mask w."""
    v = 1 - 2 * tt.bits.astype(np.int32)
    h = 1
    size = v.shape[0]
    while h < size:
        V = v.reshape(-1, 2 * h)
        a = V[:, :h]
        b = V[:, h:]
        diff = a - b
        a += b
        b[:] = diff
        h *= 2
    return v


def walsh_at(tt: TruthTable, w: int) -> int:
    """One Walsh coefficient by direct summation (independent of the
    butterfly path)."""
    x = np.arange(1 << tt.n)
    inner = (np.bitwise_count(x & w) & 1).astype(np.uint8)
    return int((1 - 2 * (tt.bits ^ inner).astype(np.int64)).sum())


def walsh_at_trace(tt: TruthTable, ctx: FieldCtx, u: int, v: int) -> int:
    """Walsh coefficient in the field-trace pairing: for f on pairs
    (x, y) packed as (y << m) | x,

        W(u, v) = sum (-1)^(f(x,y) + tr(u x) + tr(v y)).
    """
    m = ctx.m
    if tt.n != 2 * m:
        raise ValueError(f"need n = 2m = {2 * m}, got n = {tt.n}")
    idx = np.arange(1 << tt.n)
    x = idx & (ctx.order - 1)
    y = idx >> m
    e = ctx.vtrace(ctx.vmul(u, x)) ^ ctx.vtrace(ctx.vmul(v, y)) ^ tt.bits
    return int((1 - 2 * e.astype(np.int64)).sum())


def is_bent(tt: TruthTable, spectrum=None) -> bool:
    """Flat absolute spectrum |W| = 2^(n/2) everywhere; even n only."""
    if tt.n % 2:
        raise ValueError("bent functions exist only for even n")
    s = walsh_spectrum(tt) if spectrum is None else spectrum
    return bool((np.abs(s) == 1 << (tt.n // 2)).all())


def mobius_transform(bits: np.ndarray) -> np.ndarray:
    """XOR-butterfly Mobius transform (an involution): truth table <-> ANF
    coefficient vector."""
    v = np.array(bits, dtype=np.uint8)
    h = 1
    size = v.shape[0]
    while h < size:
        V = v.reshape(-1, 2 * h)
        V[:, h:] ^= V[:, :h]
        h *= 2
    return v


def anf(tt: TruthTable) -> np.ndarray:
    """ANF coefficients: entry S is 1 iff the monomial prod_{i in S} x_i
    appears in f."""
    return mobius_transform(tt.bits)


def degree(tt: TruthTable) -> int:
    """Algebraic degree: heaviest monomial in the ANF (0 for constants)."""
    nz = np.flatnonzero(anf(tt))
    if nz.size == 0:
        return 0
    return int(np.bitwise_count(nz.astype(np.uint64)).max())


def save_tt(tt: TruthTable, path, header: str | None = None):
    """Write the hex format; `header` (if any) goes first as a `#` line."""
    if tt.n < 3:
        raise ValueError("file format needs n >= 3 (whole bytes)")
    data = np.packbits(tt.bits, bitorder="little").tobytes().hex()
    with open(path, "w") as fh:
        if header is not None:
            fh.write(f"# {header}\n")
        fh.write(data + "\n")


def load_tt(path) -> TruthTable:
    """Read the hex format, skipping `#` comment lines."""
    with open(path) as fh:
        payload = "".join(line.strip() for line in fh
                          if line.strip() and not line.lstrip().startswith("#"))
    raw = bytes.fromhex(payload)
    size = len(raw) * 8
    n = size.bit_length() - 1
    if size == 0 or 1 << n != size:
        raise ValueError(f"file holds {size} bits; need a power of two")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return TruthTable(n, bits)
