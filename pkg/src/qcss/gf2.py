"""Bit-packed GF(2) vectors and matrices.

A vector of length ``n`` is a Python int whose bit ``i`` is the value at
column ``i``; bits at or above ``n`` are always zero.  All row reduction,
nullspace and inner-product work in the package is built on these two types.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidInput

_WORD_MASK = (1 << 64) - 1


def _check_bits(n: int, bits: int) -> int:
    if n < 0:
        raise InvalidInput(f"negative length {n}")
    if bits < 0 or bits >> n:
        raise InvalidInput(f"value has bits beyond length {n}")
    return bits


@dataclass(frozen=True)
class BitVector:
    """Immutable GF(2) vector; bit ``i`` of ``bits`` is column ``i``."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_bits(self.n, self.bits)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a 0/1 string; the first character is column 0."""
        if set(text) - {"0", "1"}:
            raise InvalidInput(f"not a 0/1 string: {text!r}")
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
        return cls(len(text), bits)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for j in support:
            if not 0 <= j < n:
                raise InvalidInput(f"coordinate {j} out of range for length {n}")
            bits |= 1 << j
        return cls(n, bits)

    def to_string(self) -> str:
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.n))

    def to_hex(self) -> str:
        return hex(self.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def bit(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise InvalidInput(f"index {j} out of range for length {self.n}")
        return self.bits >> j & 1

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.bits >> j & 1)

    def _same_length(self, other: "BitVector") -> None:
        if self.n != other.n:
            raise InvalidInput(f"length mismatch: {self.n} != {other.n}")

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._same_length(other)
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._same_length(other)
        return BitVector(self.n, self.bits & other.bits)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._same_length(other)
        return BitVector(self.n, self.bits | other.bits)

    def dot(self, other: "BitVector") -> int:
        self._same_length(other)
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | other.bits << self.n)

    def delete(self, columns: Iterable[int]) -> "BitVector":
        drop = set(columns)
        bits = 0
        pos = 0
        for j in range(self.n):
            if j in drop:
                continue
            bits |= (self.bits >> j & 1) << pos
            pos += 1
        return BitVector(pos, bits)

    def __str__(self) -> str:
        return self.to_string()


def dot(u: BitVector, v: BitVector) -> int:
    """Parity of the overlap of two equal-length vectors."""
    return u.dot(v)


class BitMatrix:
    """Row-major GF(2) matrix; rows are packed ints like BitVector."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, cols: int, row_bits: Sequence[int]):
        self.cols = cols
        self._data = [_check_bits(cols, r) for r in row_bits]
        self.rows = len(self._data)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> "BitMatrix":
        if not vectors:
            raise InvalidInput("cannot infer width from an empty vector list")
        n = vectors[0].n
        for v in vectors:
            if v.n != n:
                raise InvalidInput("rows of differing lengths")
        return cls(n, [v.bits for v in vectors])

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        vecs = [BitVector.from_string(r) for r in rows]
        return cls.from_vectors(vecs)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, [1 << i for i in range(n)])

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self._data[i])

    def row_bits(self) -> list[int]:
        """Rows as raw ints (fresh list; the matrix itself stays immutable)."""
        return list(self._data)

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(self.cols, r) for r in self._data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.cols, tuple(self._data)))

    def get(self, i: int, j: int) -> int:
        return self._data[i] >> j & 1

    def column_bits(self, j: int) -> int:
        """Column ``j`` packed as an int with bit ``i`` = entry in row ``i``."""
        out = 0
        for i, r in enumerate(self._data):
            out |= (r >> j & 1) << i
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.rows, [self.column_bits(j) for j in range(self.cols)])

    def mul_vector(self, v: BitVector) -> BitVector:
        """M @ v over GF(2); result length = number of rows."""
        if v.n != self.cols:
            raise InvalidInput(f"length mismatch: {v.n} != {self.cols}")
        out = 0
        for i, r in enumerate(self._data):
            out |= ((r & v.bits).bit_count() & 1) << i
        return BitVector(self.rows, out)

    def to_text(self) -> str:
        """Repo matrix format: 'rows cols' header then one 0/1 string per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [BitVector(self.cols, r).to_string() for r in self._data]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise InvalidInput("empty matrix text")
        try:
            rows, cols = map(int, lines[0].split())
        except ValueError as exc:
            raise InvalidInput(f"bad matrix header: {lines[0]!r}") from exc
        if len(lines) - 1 != rows:
            raise InvalidInput(f"expected {rows} rows, found {len(lines) - 1}")
        vecs = []
        for ln in lines[1:]:
            if len(ln) != cols:
                raise InvalidInput(f"row of width {len(ln)}, expected {cols}")
            vecs.append(BitVector.from_string(ln).bits)
        return cls(cols, vecs)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form over GF(2), zero rows dropped.

    Pivot choice: leftmost nonzero column, topmost available row, no column
    permutation; this fixes the pivot/non-pivot column split used by the
    meet-in-the-middle distance search.
    """
    data = list(m.row_bits())
    nrows = len(data)
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        mask = 1 << c
        piv = next((i for i in range(r, nrows) if data[i] & mask), None)
        if piv is None:
            continue
        data[r], data[piv] = data[piv], data[r]
        for i in range(nrows):
            if i != r and data[i] & mask:
                data[i] ^= data[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return BitMatrix(m.cols, data[:r]), tuple(pivots)


def rank(m: BitMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {v : M v = 0}, one row per non-pivot column, in column order."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    data = red.row_bits()
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, p in enumerate(pivots):
            if data[i] >> f & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(m.cols, basis)


def solve(m: BitMatrix, rhs: BitVector) -> BitVector | None:
    """One solution x of M x = rhs, or None if the system is inconsistent."""
    if rhs.n != m.rows:
        raise InvalidInput(f"rhs length {rhs.n} != row count {m.rows}")
    data = list(m.row_bits())
    b = [rhs.bits >> i & 1 for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        mask = 1 << c
        piv = next((i for i in range(r, len(data)) if data[i] & mask), None)
        if piv is None:
            continue
        data[r], data[piv] = data[piv], data[r]
        b[r], b[piv] = b[piv], b[r]
        for i in range(len(data)):
            if i != r and data[i] & mask:
                data[i] ^= data[r]
                b[i] ^= b[r]
        pivots.append(c)
        r += 1
        if r == len(data):
            break
    if any(b[i] for i in range(r, len(data))):
        return None
    x = 0
    for i, p in enumerate(pivots):
        if b[i]:
            x |= 1 << p
    return BitVector(m.cols, x)


def in_rowspace(m_rref: BitMatrix, pivots: Sequence[int], v: BitVector) -> bool:
    """Membership test against a precomputed rref basis."""
    if v.n != m_rref.cols:
        raise InvalidInput(f"length mismatch: {v.n} != {m_rref.cols}")
    acc = v.bits
    data = m_rref.row_bits()
    for i, p in enumerate(pivots):
        if acc >> p & 1:
            acc ^= data[i]
    return acc == 0


def pack_rows(row_bits: Sequence[int], cols: int) -> np.ndarray:
    """Rows as a (len, words) uint64 array, 64 columns per word, little-endian."""
    words = max(1, (cols + 63) // 64)
    arr = np.zeros((len(row_bits), words), dtype=np.uint64)
    for i, r in enumerate(row_bits):
        for w in range(words):
            arr[i, w] = (r >> (64 * w)) & _WORD_MASK
    return arr
