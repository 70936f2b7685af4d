"""CSS code assembly, symplectic Pauli errors, syndromes, and decoding.

A Pauli operator is kept as its symplectic pair (x_bits, z_bits); the global
phase never influences syndromes or logical-error analysis and is dropped.
Decoding runs the classical decoder of each constituent's dual on a word with
the observed syndrome: x-type stabilizer syndromes determine the z-type error
component and vice versa.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from .bch import BchDecoder, CyclicCodeSpec, spec_from_zero_set, zero_set_of_polynomial
from .codes import LinearCode
from .errors import DecodingFailure, InternalConsistencyError, InvalidInput, PreconditionError
from .gf2 import BitMatrix, BitVector, in_rowspace

_PAULI_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class PauliError:
    """n-qubit Pauli operator as (x_bits, z_bits); Y sets both bits."""

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if self.x_bits >> self.n or self.z_bits >> self.n or self.x_bits < 0 or self.z_bits < 0:
            raise InvalidInput("component bits outside the qubit range")

    @classmethod
    def identity(cls, n: int) -> "PauliError":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str) -> "PauliError":
        if not 0 <= qubit < n:
            raise InvalidInput(f"qubit {qubit} out of range")
        x, z = _PAULI_BITS[kind]
        return cls(n, x << qubit, z << qubit)

    @classmethod
    def from_string(cls, text: str) -> "PauliError":
        x = z = 0
        for i, ch in enumerate(text):
            if ch not in _PAULI_BITS:
                raise InvalidInput(f"not a Pauli letter: {ch!r}")
            xb, zb = _PAULI_BITS[ch]
            x |= xb << i
            z |= zb << i
        return cls(len(text), x, z)

    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    def __mul__(self, other: "PauliError") -> "PauliError":
        if self.n != other.n:
            raise InvalidInput(f"size mismatch: {self.n} != {other.n}")
        return PauliError(self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def kind(self, qubit: int) -> str:
        x = self.x_bits >> qubit & 1
        z = self.z_bits >> qubit & 1
        return {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}[(x, z)]

    def __str__(self) -> str:
        return "".join(self.kind(i) for i in range(self.n))


def symplectic_dot(e: PauliError, f: PauliError) -> int:
    """0 when the operators commute, 1 when they anticommute."""
    if e.n != f.n:
        raise InvalidInput(f"size mismatch: {e.n} != {f.n}")
    a = (e.x_bits & f.z_bits).bit_count() & 1
    b = (e.z_bits & f.x_bits).bit_count() & 1
    return a ^ b


@dataclass(frozen=True)
class Syndrome:
    """Anticommutation bits against the x-type and z-type stabilizer rows."""

    s_x: BitVector
    s_z: BitVector

    def is_zero(self) -> bool:
        return self.s_x.bits == 0 and self.s_z.bits == 0


class WordDecoder(Protocol):
    """Classical decoder interface: nearest codeword for a received word."""

    radius: int

    def decode_word(self, bits: int) -> int: ...


class LookupDecoder:
    """Coset-leader table decoder for small codes.

    ``parity`` is a generator matrix of the dual of the decoded code (its rows
    are the parity checks).  Leaders are filled in order of increasing weight,
    ties resolved by enumeration order, so the table is deterministic.
    """

    def __init__(self, parity: LinearCode, max_weight: int | None = None):
        self.parity = parity
        n = parity.n
        rows = parity.generator.row_bits()
        size = 1 << len(rows)
        table: dict[int, int] = {0: 0}
        cap = max_weight if max_weight is not None else n
        weight = 1
        import itertools

        while len(table) < size and weight <= cap:
            for support in itertools.combinations(range(n), weight):
                e = 0
                for p in support:
                    e |= 1 << p
                s = 0
                for i, row in enumerate(rows):
                    s |= ((row & e).bit_count() & 1) << i
                if s not in table:
                    table[s] = e
            weight += 1
        self._table = table
        self._rows = rows
        self.n = n
        self.radius = max((e.bit_count() for e in table.values()), default=0)

    def decode_word(self, bits: int) -> int:
        s = 0
        for i, row in enumerate(self._rows):
            s |= ((row & bits).bit_count() & 1) << i
        e = self._table.get(s)
        if e is None:
            raise DecodingFailure("syndrome outside the coset-leader table")
        return bits ^ e


class CssCode:
    """CSS pair (C1, C2) with C2 inside the dual of C1.

    x-type stabilizers carry the rows of C1's generator, z-type stabilizers
    the rows of C2's.  ``decoder1`` decodes the dual of C1 (recovers z-type
    error components from s_x) and ``decoder2`` the dual of C2.
    """

    def __init__(
        self,
        c1: LinearCode,
        c2: LinearCode,
        decoder1: WordDecoder | None = None,
        decoder2: WordDecoder | None = None,
        distance: int | None = None,
    ):
        if c1.n != c2.n:
            raise PreconditionError(f"length mismatch: {c1.n} != {c2.n}")
        for a in c1.generator.row_bits():
            for b in c2.generator.row_bits():
                if (a & b).bit_count() & 1:
                    raise PreconditionError("the two codes are not mutually orthogonal")
        self.c1 = c1
        self.c2 = c2
        self.n = c1.n
        self.quantum_k = self.n - c1.k - c2.k
        self.decoder1 = decoder1
        self.decoder2 = decoder2
        self.distance = distance
        self._solver1 = _SyndromeSolver(c1)
        self._solver2 = _SyndromeSolver(c2)

    @classmethod
    def from_self_orthogonal(
        cls,
        code: LinearCode,
        decoder: WordDecoder | None = None,
        distance: int | None = None,
    ) -> "CssCode":
        if not code.is_self_orthogonal():
            raise PreconditionError("code is not self-orthogonal")
        return cls(code, code, decoder1=decoder, decoder2=decoder, distance=distance)

    def parameters(self) -> tuple[int, int, int | None]:
        return self.n, self.quantum_k, self.distance

    def stabilizer(self, kind: str, index: int) -> PauliError:
        if kind == "x":
            return PauliError(self.n, self.c1.generator.row(index).bits, 0)
        if kind == "z":
            return PauliError(self.n, 0, self.c2.generator.row(index).bits)
        raise InvalidInput(f"stabilizer kind must be 'x' or 'z', got {kind!r}")

    def syndrome(self, error: PauliError) -> Syndrome:
        if error.n != self.n:
            raise InvalidInput(f"error size {error.n} != {self.n}")
        s_x = 0
        for i, row in enumerate(self.c1.generator.row_bits()):
            s_x |= ((row & error.z_bits).bit_count() & 1) << i
        s_z = 0
        for i, row in enumerate(self.c2.generator.row_bits()):
            s_z |= ((row & error.x_bits).bit_count() & 1) << i
        return Syndrome(s_x=BitVector(self.c1.k, s_x), s_z=BitVector(self.c2.k, s_z))

    def decode(self, syndrome: Syndrome) -> PauliError:
        z_hat = self._decode_side(syndrome.s_x, self._solver1, self.decoder1, "z")
        x_hat = self._decode_side(syndrome.s_z, self._solver2, self.decoder2, "x")
        return PauliError(self.n, x_hat, z_hat)

    def _decode_side(self, s: BitVector, solver, decoder, side: str) -> int:
        if s.bits == 0:
            return 0
        if decoder is None:
            raise DecodingFailure(f"no decoder attached for the {side} component", side=side)
        word = solver.preimage(s.bits)
        try:
            codeword = decoder.decode_word(word)
        except DecodingFailure as exc:
            raise DecodingFailure(f"{side}-component decoding failed: {exc}", side=side) from exc
        return word ^ codeword

    def residual_is_logical(self, error: PauliError, estimate: PauliError) -> bool:
        """True when error and estimate differ by more than a stabilizer.

        A nonzero residual syndrome means the estimate was not syndrome
        consistent, which only a broken decoder produces.
        """
        residual = error * estimate
        if not self.syndrome(residual).is_zero():
            raise InternalConsistencyError("estimate does not match the observed syndrome")
        in_stab = in_rowspace(
            self.c1.rref_matrix, self.c1.pivots, BitVector(self.n, residual.x_bits)
        ) and in_rowspace(
            self.c2.rref_matrix, self.c2.pivots, BitVector(self.n, residual.z_bits)
        )
        return not in_stab


class _SyndromeSolver:
    """Produces one word with a prescribed parity pattern against a code's rows.

    With R = rref(G) and pivots p_i, the word sum_i y_i e_{p_i} has parity y_i
    against row i of R; U maps R-coordinates back to G-coordinates.
    """

    def __init__(self, code: LinearCode):
        self.code = code
        g_rows = code.generator.row_bits()
        pivots = code.pivots
        k = code.k
        u_rows = []
        for row in g_rows:
            u_rows.append(sum((row >> p & 1) << j for j, p in enumerate(pivots)))
        self._u_inv = _invert_bit_matrix(u_rows, k)
        self._pivots = pivots
        self.k = k

    def preimage(self, s_bits: int) -> int:
        # y = U^-1 s, evaluated row by row
        y = 0
        for j, row in enumerate(self._u_inv):
            if (row & s_bits).bit_count() & 1:
                y |= 1 << j
        word = 0
        for j, p in enumerate(self._pivots):
            if y >> j & 1:
                word |= 1 << p
        return word


def _invert_bit_matrix(rows: list[int], k: int) -> list[int]:
    """Rows of the inverse of a k x k invertible matrix over GF(2)."""
    work = list(rows)
    inv = [1 << i for i in range(k)]
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, k) if work[i] >> c & 1), None)
        if piv is None:
            raise InternalConsistencyError("generator rows were not independent")
        work[r], work[piv] = work[piv], work[r]
        inv[r], inv[piv] = inv[piv], inv[r]
        for i in range(k):
            if i != r and work[i] >> c & 1:
                work[i] ^= work[r]
                inv[i] ^= inv[r]
        r += 1
    return inv


# -- assembly helpers ----------------------------------------------------------


def css_from_self_orthogonal_cyclic(spec: CyclicCodeSpec, distance: int | None = None) -> CssCode:
    """CSS code of a self-orthogonal cyclic code, decoded by Berlekamp-Massey
    on its dual."""
    code = spec.to_code()
    dual_spec = spec.dual_spec()
    decoder = BchDecoder(dual_spec)
    return CssCode.from_self_orthogonal(
        code, decoder=decoder, distance=distance if distance is not None else dual_spec.delta
    )


def css_from_reed_muller(m: int, r: int) -> CssCode:
    """CSS code of a self-orthogonal RM(m, r), Reed-decoded on the dual."""
    from .reedmuller import ReedDecoder, rm_generator

    rm = rm_generator(m, r)
    if not rm.code.is_self_orthogonal():
        raise PreconditionError(f"order {r} in {m} variables is not self-orthogonal")
    dual = rm_generator(m, m - r - 1)
    return CssCode.from_self_orthogonal(
        rm.code, decoder=ReedDecoder(dual), distance=1 << (r + 1)
    )


def css_from_projective_geometry(
    k: int, q: int, l: int, distance: int | None = None
) -> CssCode:
    """CSS code of a projective-geometry configuration with two-pass
    majority-logic decoding."""
    from .projgeom import RudolphDecoder, build_so_code, enumerate_spaces, ProjGeometry

    cfg = enumerate_spaces(ProjGeometry(k, q), l)
    code = build_so_code(cfg)
    extended = code.n == cfg.v + 1
    radius = None
    if distance is not None:
        decoder_default = RudolphDecoder(cfg, extended=extended)
        radius = min((distance - 1) // 2, decoder_default.two_pass_bound)
    decoder = RudolphDecoder(cfg, extended=extended, radius=radius)
    return CssCode.from_self_orthogonal(code, decoder=decoder, distance=distance)


def css_with_lookup(code: LinearCode, distance: int | None = None) -> CssCode:
    """CSS code of a small self-orthogonal code with table-lookup decoding."""
    return CssCode.from_self_orthogonal(code, decoder=LookupDecoder(code), distance=distance)
