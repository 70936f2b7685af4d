"""Reed-Muller codes and majority-vote decoding.

Evaluation points are indexed 0..2^m-1; point j assigns variable i the bit
j >> i & 1, so variable 0 follows the least significant bit.  Generator rows
are the evaluation vectors of the monomials of degree <= r, lowest degree
first and combinations in lexicographic order within a degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import LinearCode
from .errors import DecodingFailure, InvalidInput
from .gf2 import BitMatrix, BitVector


def _monomial_row(m: int, variables: tuple[int, ...]) -> int:
    n = 1 << m
    bits = 0
    for j in range(n):
        if all(j >> i & 1 for i in variables):
            bits |= 1 << j
    return bits


@dataclass(frozen=True)
class RmCode:
    m: int
    r: int
    code: LinearCode
    monomials: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return self.code.k

    def design_distance(self) -> int:
        return 1 << (self.m - self.r)


def rm_generator(m: int, r: int) -> RmCode:
    """The order-r Reed-Muller code over 2^m points."""
    if m < 1:
        raise InvalidInput(f"need m >= 1, got {m}")
    if not 0 <= r < m:
        raise InvalidInput(f"order must satisfy 0 <= r < m, got r={r}, m={m}")
    monomials: list[tuple[int, ...]] = []
    rows: list[int] = []
    for deg in range(r + 1):
        for variables in combinations(range(m), deg):
            monomials.append(variables)
            rows.append(_monomial_row(m, variables))
    code = LinearCode(BitMatrix(1 << m, rows))
    return RmCode(m=m, r=r, code=code, monomials=tuple(monomials))


def _vote_masks(m: int, variables: tuple[int, ...]) -> list[int]:
    """Characteristic sets of one monomial: for each assignment of the
    complementary variables, the 2^deg points where they take that value."""
    others = [i for i in range(m) if i not in variables]
    masks = []
    for assign in range(1 << len(others)):
        bits = 0
        for j in range(1 << m):
            ok = True
            for pos, i in enumerate(others):
                if (j >> i & 1) != (assign >> pos & 1):
                    ok = False
                    break
            if ok:
                bits |= 1 << j
        masks.append(bits)
    return masks


@dataclass(frozen=True)
class ReedDecodeResult:
    coefficients: tuple[int, ...]  # one per monomial, matching RmCode order
    codeword: BitVector
    error_estimate: BitVector


class ReedDecoder:
    """Majority-vote decoder; corrects up to (2^(m-r) - 1) // 2 errors."""

    def __init__(self, rm: RmCode):
        self.rm = rm
        self.radius = (rm.design_distance() - 1) // 2
        self._masks = [_vote_masks(rm.m, s) for s in rm.monomials]

    def decode(self, received: BitVector) -> ReedDecodeResult:
        rm = self.rm
        if received.n != rm.n:
            raise InvalidInput(f"received length {received.n} != {rm.n}")
        rows = rm.code.generator.row_bits()
        by_degree: dict[int, list[int]] = {}
        for idx, s in enumerate(rm.monomials):
            by_degree.setdefault(len(s), []).append(idx)

        residual = received.bits
        codeword = 0
        coeffs = [0] * len(rm.monomials)
        for deg in range(rm.r, -1, -1):
            layer = 0
            for idx in by_degree.get(deg, []):
                ones = 0
                masks = self._masks[idx]
                for mask in masks:
                    ones += (residual & mask).bit_count() & 1
                if 2 * ones == len(masks):
                    raise DecodingFailure(
                        f"tied majority vote on a degree-{deg} coefficient"
                    )
                if 2 * ones > len(masks):
                    coeffs[idx] = 1
                    layer ^= rows[idx]
            residual ^= layer
            codeword ^= layer
        return ReedDecodeResult(
            coefficients=tuple(coeffs),
            codeword=BitVector(rm.n, codeword),
            error_estimate=BitVector(rm.n, residual),
        )

    def decode_word(self, bits: int) -> int:
        return self.decode(BitVector(self.rm.n, bits)).codeword.bits


def reed_decode(rm: RmCode, received: BitVector) -> ReedDecodeResult:
    return ReedDecoder(rm).decode(received)
