"""Combinations of self-orthogonal codes.

Each operation returns a ConstructionReport holding the built code together
with the dimensions and dual-distance claim of the underlying theorem, so the
theorems themselves can serve as test oracles: ``report.verify()`` re-measures
everything the claim pins down.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bch import Gf2mField, default_field
from .codes import DEFAULT_BUDGET, LinearCode, dual_distance_via_transform, extend_with_parity
from .errors import InvalidInput, PreconditionError, ResourceLimit
from .gf2 import BitMatrix, BitVector

_PREDICT_BUDGET = 1 << 24


@dataclass(frozen=True)
class ConstructionReport:
    code: LinearCode
    predicted_n: int
    predicted_k: int
    predicted_dual_distance: int | None = None
    # how the measured dual distance relates to the prediction: the theorem
    # gives equality ("=="), a lower bound (">="), or only an upper bound ("<=")
    dual_distance_relation: str = "=="
    warning: str | None = None

    def verify(self, budget: int = DEFAULT_BUDGET) -> list[str]:
        """Re-measure the claims; returns human-readable violations (none = pass)."""
        problems = []
        if self.code.n != self.predicted_n:
            problems.append(f"length {self.code.n} != predicted {self.predicted_n}")
        if self.code.k != self.predicted_k:
            problems.append(f"dimension {self.code.k} != predicted {self.predicted_k}")
        if not self.code.is_self_orthogonal():
            problems.append("result is not self-orthogonal")
        if self.predicted_dual_distance is not None and self.code.k < self.code.n:
            try:
                d = dual_min_distance(self.code, budget)
            except ResourceLimit:
                d = None
            if d is not None:
                p = self.predicted_dual_distance
                if self.dual_distance_relation == "==" and d != p:
                    problems.append(f"dual distance {d} != predicted {p}")
                elif self.dual_distance_relation == ">=" and d < p:
                    problems.append(f"dual distance {d} below bound {p}")
                elif self.dual_distance_relation == "<=" and d > p:
                    problems.append(f"dual distance {d} above bound {p}")
        return problems

    def quantum_parameters(self, budget: int = DEFAULT_BUDGET) -> tuple[int, int, int | None]:
        """[[n, n-2k, d]] of the CSS code built from the result with C1 = C2."""
        d = self.predicted_dual_distance
        if d is None:
            try:
                d = dual_min_distance(self.code, budget)
            except ResourceLimit:
                d = None
        return self.code.n, self.code.n - 2 * self.code.k, d


def dual_min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """d_min of the dual, enumerating whichever side is smaller."""
    if code.n - code.k <= code.k:
        return code.dual().min_distance(budget)
    return dual_distance_via_transform(code, budget)


def _predicted_dual(code: LinearCode) -> int | None:
    if code.k == code.n:  # the dual is zero-dimensional
        return None
    try:
        return dual_min_distance(code, _PREDICT_BUDGET)
    except ResourceLimit:
        return None


def _require_self_orthogonal(*codes: LinearCode) -> None:
    for c in codes:
        if not c.is_self_orthogonal():
            raise PreconditionError(f"{c!r} is not self-orthogonal")


def _require_mutually_orthogonal(c1: LinearCode, c2: LinearCode) -> None:
    if c1.n != c2.n:
        raise PreconditionError(f"length mismatch: {c1.n} != {c2.n}")
    for a in c1.generator.row_bits():
        for b in c2.generator.row_bits():
            if (a & b).bit_count() & 1:
                raise PreconditionError("second code is not inside the dual of the first")


def _coset_leader_basis(sub: LinearCode, sup: LinearCode) -> list[int]:
    """Deterministic basis of sup/sub: sup's rref rows reduced against sub."""
    if sub.n != sup.n:
        raise PreconditionError(f"length mismatch: {sub.n} != {sup.n}")
    if not sub.is_subcode_of(sup):
        raise PreconditionError("first code is not a subcode of the second")
    table: dict[int, int] = {}  # lowest set bit -> reduced row

    def reduce(v: int) -> int:
        while v:
            low = v & -v
            if low not in table:
                return v
            v ^= table[low]
        return 0

    for row in sub.rref_matrix.row_bits():
        v = reduce(row)
        table[v & -v] = v
    leaders: list[int] = []
    for row in sup.rref_matrix.row_bits():
        v = reduce(row)
        if v:
            leaders.append(v)
            table[v & -v] = v
    if len(leaders) != sup.k - sub.k:
        raise PreconditionError("coset reduction lost rank")
    return leaders


# -- lengthening constructions ----------------------------------------------


def augment(code: LinearCode) -> ConstructionReport:
    """Adjoin the all-ones word to a self-orthogonal code of even length."""
    _require_self_orthogonal(code)
    if code.n % 2:
        raise PreconditionError(f"length {code.n} is odd")
    ones = BitVector.ones(code.n)
    if code.contains(ones):
        raise PreconditionError("code already contains the all-ones word")
    rows = code.generator.row_bits() + [ones.bits]
    out = LinearCode(BitMatrix(code.n, rows))
    return ConstructionReport(
        code=out,
        predicted_n=code.n,
        predicted_k=code.k + 1,
        predicted_dual_distance=_predicted_dual(code),
        dual_distance_relation=">=",
    )


def shorten(code: LinearCode, i: int) -> ConstructionReport:
    """Keep the codewords vanishing at coordinate i, then delete it."""
    _require_self_orthogonal(code)
    if not 0 <= i < code.n:
        raise InvalidInput(f"coordinate {i} out of range for length {code.n}")
    rows = list(code.rref_matrix.row_bits())
    mask = 1 << i
    pivot_row = next((r for r in rows if r & mask), None)
    warning = None
    if pivot_row is None:
        warning = f"column {i} is identically zero; dimension does not drop"
        kept = rows
    else:
        kept = [r ^ pivot_row if r & mask else r for r in rows if r is not pivot_row]
    new_rows = [BitVector(code.n, r).delete([i]).bits for r in kept]
    out = LinearCode.from_spanning(BitMatrix(code.n - 1, new_rows))
    d = _predicted_dual(code)
    return ConstructionReport(
        code=out,
        predicted_n=code.n - 1,
        predicted_k=code.k if pivot_row is None else code.k - 1,
        predicted_dual_distance=None if d is None else max(1, d - 1),
        dual_distance_relation=">=",
        warning=warning,
    )


def plotkin(c1: LinearCode, c2: LinearCode) -> ConstructionReport:
    """(u | u+v) combination; dual distance is exactly min(2*d2, d1)."""
    _require_self_orthogonal(c1, c2)
    _require_mutually_orthogonal(c1, c2)
    n = c1.n
    rows = [g | g << n for g in c1.generator.row_bits()]
    rows += [h << n for h in c2.generator.row_bits()]
    out = LinearCode(BitMatrix(2 * n, rows))
    d1 = _predicted_dual(c1)
    d2 = _predicted_dual(c2)
    predicted = min(2 * d2, d1) if (d1 is not None and d2 is not None) else None
    return ConstructionReport(
        code=out,
        predicted_n=2 * n,
        predicted_k=c1.k + c2.k,
        predicted_dual_distance=predicted,
        dual_distance_relation="==",
    )


def triple_sum(c1: LinearCode, c2: LinearCode) -> ConstructionReport:
    """(u+w | v+w | u+v+w) combination; no dual-distance estimate exists."""
    _require_self_orthogonal(c1, c2)
    _require_mutually_orthogonal(c1, c2)
    n = c1.n
    rows = [g | g << (2 * n) for g in c1.generator.row_bits()]
    rows += [g << n | g << (2 * n) for g in c1.generator.row_bits()]
    rows += [h | h << n | h << (2 * n) for h in c2.generator.row_bits()]
    out = LinearCode(BitMatrix(3 * n, rows))
    return ConstructionReport(code=out, predicted_n=3 * n, predicted_k=2 * c1.k + c2.k)


def _kron(a: int, na: int, b: int, nb: int) -> int:
    out = 0
    aa = a
    while aa:
        low = aa & -aa
        out |= b << ((low.bit_length() - 1) * nb)
        aa ^= low
    return out


def nebe(c: LinearCode, d: LinearCode, e: LinearCode) -> ConstructionReport:
    """Tensor combination C (x) E + D (x) E_dual of length n*m.

    The dimension claim k*m needs E + E_dual to span the full space; when the
    hull of E is nontrivial the measured dimension is smaller and the report
    says so instead of overclaiming.
    """
    _require_self_orthogonal(c, d)
    if c.n != d.n:
        raise PreconditionError(f"length mismatch: {c.n} != {d.n}")
    if c.k != d.k:
        raise PreconditionError(f"dimension mismatch: {c.k} != {d.k}")
    m = e.n
    e_dual = e.dual()
    rows = [
        _kron(g, c.n, h, m)
        for g in c.generator.row_bits()
        for h in e.generator.row_bits()
    ]
    rows += [
        _kron(g, d.n, h, m)
        for g in d.generator.row_bits()
        for h in e_dual.generator.row_bits()
    ]
    out = LinearCode.from_spanning(BitMatrix(c.n * m, rows))
    warning = None
    predicted_k = c.k * m
    if out.k != predicted_k:
        warning = (
            f"hull of the length-{m} code is nontrivial: dimension {out.k} < {predicted_k}"
        )
        predicted_k = out.k
    return ConstructionReport(
        code=out, predicted_n=c.n * m, predicted_k=predicted_k, warning=warning
    )


def product(c1: LinearCode, c2: LinearCode) -> ConstructionReport:
    """Product code; dual distance is exactly min(d1, d2)."""
    if not (c1.is_self_orthogonal() or c2.is_self_orthogonal()):
        raise PreconditionError("neither factor is self-orthogonal")
    rows = [
        _kron(g, c1.n, h, c2.n)
        for g in c1.generator.row_bits()
        for h in c2.generator.row_bits()
    ]
    out = LinearCode(BitMatrix(c1.n * c2.n, rows))
    d1 = _predicted_dual(c1)
    d2 = _predicted_dual(c2)
    predicted = min(d1, d2) if (d1 is not None and d2 is not None) else None
    return ConstructionReport(
        code=out,
        predicted_n=c1.n * c2.n,
        predicted_k=c1.k * c2.k,
        predicted_dual_distance=predicted,
        dual_distance_relation="==",
    )


# -- concatenation -----------------------------------------------------------


@dataclass(frozen=True)
class OuterCode:
    """An [n, k] code over GF(2^m); symbols are ints in poly representation."""

    field: Gf2mField
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.n:
                raise InvalidInput(f"outer row of length {len(row)}, expected {self.n}")
            if any(sym >> self.field.m for sym in row):
                raise InvalidInput(f"outer symbol outside GF(2^{self.field.m})")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def repetition(cls, field: Gf2mField, n: int) -> "OuterCode":
        return cls(field=field, n=n, rows=((1,) * n,))

    @classmethod
    def identity(cls, field: Gf2mField, n: int) -> "OuterCode":
        rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(field=field, n=n, rows=rows)

    def encode(self, message: tuple[int, ...]) -> tuple[int, ...]:
        if len(message) != self.k:
            raise InvalidInput(f"message length {len(message)} != k = {self.k}")
        out = [0] * self.n
        for sym, row in zip(message, self.rows):
            if sym:
                for j, coef in enumerate(row):
                    out[j] ^= self.field.mul(sym, coef)
        return tuple(out)


def concatenate(inner: LinearCode, outer: OuterCode) -> ConstructionReport:
    """Concatenation: outer symbols live in GF(2^k1) and expand to inner words.

    The symbol-to-bits map is the coefficient vector with respect to the fixed
    primitive polynomial for the inner dimension; inner information bits sit
    on the rref pivot columns.

    The inner dual distance is only an upper bound on the dual distance of the
    result.  A word of the inner dual placed in one column block is orthogonal
    to every codeword, which gives the bound; the reverse direction fails, for
    example, when the outer code is a repetition code: (e|e|0...) with e a unit
    vector is orthogonal to every (w|w|w|...), so the dual distance drops to 2.
    """
    _require_self_orthogonal(inner)
    k1 = inner.k
    if outer.field.m != k1:
        raise PreconditionError(
            f"outer symbols are GF(2^{outer.field.m}) but the inner dimension is {k1}"
        )
    inner_rows = inner.rref_matrix.row_bits()
    rows = []
    for j in range(outer.k):
        for i in range(k1):
            message = tuple(1 << i if jj == j else 0 for jj in range(outer.k))
            symbols = outer.encode(message)
            bits = 0
            for col, sym in enumerate(symbols):
                word = 0
                for bit in range(k1):
                    if sym >> bit & 1:
                        word ^= inner_rows[bit]
                bits |= word << (col * inner.n)
            rows.append(bits)
    out = LinearCode(BitMatrix(inner.n * outer.n, rows))
    return ConstructionReport(
        code=out,
        predicted_n=inner.n * outer.n,
        predicted_k=k1 * outer.k,
        predicted_dual_distance=_predicted_dual(inner),
        dual_distance_relation="<=",
    )


def outer_field(k1: int) -> Gf2mField:
    return default_field(k1)


# -- X-family ------------------------------------------------------------------


def construction_x(c1: LinearCode, c2: LinearCode, c3: LinearCode) -> ConstructionReport:
    """(c2 | image of its coset) for a chain c1 < c2; dual d = min(d2, d3).

    Besides words of the two pure forms (u|0), u in the dual of c2, and (0|v),
    v in the dual of c3, the dual contains mixed words whose left part lies in
    dual(c1) \\ dual(c2); their weight is at least d(dual(c1)) + 1.  The
    min(d2, d3) claim is therefore an equality whenever it does not exceed
    that floor, and only an upper bound otherwise.
    """
    _require_self_orthogonal(c1, c2, c3)
    leaders = _coset_leader_basis(c1, c2)
    if c3.k != c2.k - c1.k:
        raise PreconditionError(
            f"tail dimension {c3.k} != coset count {c2.k - c1.k}"
        )
    c3_rows = c3.generator.row_bits()
    rows = [g for g in c1.generator.row_bits()]
    rows += [lead | c3_rows[i] << c2.n for i, lead in enumerate(leaders)]
    out = LinearCode(BitMatrix(c2.n + c3.n, rows))
    d2 = _predicted_dual(c2)
    d3 = _predicted_dual(c3)
    predicted = min(d2, d3) if (d2 is not None and d3 is not None) else None
    relation = "=="
    warning = None
    if predicted is not None:
        d1 = _predicted_dual(c1)
        if d1 is None or predicted > d1 + 1:
            relation = "<="
            warning = (
                f"mixed dual words may weigh as little as {None if d1 is None else d1 + 1};"
                " the min(d2, d3) value is only an upper bound here"
            )
    return ConstructionReport(
        code=out,
        predicted_n=c2.n + c3.n,
        predicted_k=c2.k,
        predicted_dual_distance=predicted,
        dual_distance_relation=relation,
        warning=warning,
    )


def construction_x3(
    c1: LinearCode,
    c2: LinearCode,
    c3: LinearCode,
    c4: LinearCode,
    c5: LinearCode,
) -> ConstructionReport:
    """(c3 | coset of c2 over c1 | coset of c3 over c2); dual d = min(d3,d4,d5)."""
    _require_self_orthogonal(c1, c2, c3, c4, c5)
    leaders2 = _coset_leader_basis(c1, c2)
    leaders3 = _coset_leader_basis(c2, c3)
    if c4.k != c2.k - c1.k:
        raise PreconditionError(f"first tail dimension {c4.k} != {c2.k - c1.k}")
    if c5.k != c3.k - c2.k:
        raise PreconditionError(f"second tail dimension {c5.k} != {c3.k - c2.k}")
    n1, n4, n5 = c3.n, c4.n, c5.n
    c4_rows = c4.generator.row_bits()
    c5_rows = c5.generator.row_bits()
    rows = [g for g in c1.generator.row_bits()]
    rows += [lead | c4_rows[i] << n1 for i, lead in enumerate(leaders2)]
    rows += [lead | c5_rows[i] << (n1 + n4) for i, lead in enumerate(leaders3)]
    out = LinearCode(BitMatrix(n1 + n4 + n5, rows))
    ds = [_predicted_dual(c3), _predicted_dual(c4), _predicted_dual(c5)]
    predicted = min(ds) if all(d is not None for d in ds) else None
    relation = "=="
    warning = None
    if predicted is not None:
        d1 = _predicted_dual(c1)  # mixed dual words weigh at least d1 + 1
        if d1 is None or predicted > d1 + 1:
            relation = "<="
            warning = "min(d3, d4, d5) exceeds the mixed-word floor: upper bound only"
    return ConstructionReport(
        code=out,
        predicted_n=n1 + n4 + n5,
        predicted_k=c3.k,
        predicted_dual_distance=predicted,
        dual_distance_relation=relation,
        warning=warning,
    )


def construction_x4(
    c1: LinearCode, c2: LinearCode, c3: LinearCode, c4: LinearCode
) -> ConstructionReport:
    """(c2 | coset image + c3) gluing two chains; dual d = min(d2, d4)."""
    _require_self_orthogonal(c1, c2, c3, c4)
    leaders2 = _coset_leader_basis(c1, c2)
    leaders4 = _coset_leader_basis(c3, c4)
    if len(leaders2) != len(leaders4):
        raise PreconditionError(
            f"coset counts differ: {len(leaders2)} != {len(leaders4)}"
        )
    n1, n3 = c2.n, c4.n
    rows = [g for g in c1.generator.row_bits()]
    rows += [lead | leaders4[i] << n1 for i, lead in enumerate(leaders2)]
    rows += [h << n1 for h in c3.generator.row_bits()]
    out = LinearCode(BitMatrix(n1 + n3, rows))
    d2 = _predicted_dual(c2)
    d4 = _predicted_dual(c4)
    predicted = min(d2, d4) if (d2 is not None and d4 is not None) else None
    relation = "=="
    warning = None
    if predicted is not None:
        # mixed dual words pair something in dual(c1) \ dual(c2) with
        # something in dual(c3) \ dual(c4)
        d1 = _predicted_dual(c1)
        d3 = _predicted_dual(c3)
        floor = None if (d1 is None or d3 is None) else d1 + d3
        if floor is None or predicted > floor:
            relation = "<="
            warning = "min(d2, d4) exceeds the mixed-word floor: upper bound only"
    return ConstructionReport(
        code=out,
        predicted_n=n1 + n3,
        predicted_k=c2.k + c3.k,
        predicted_dual_distance=predicted,
        dual_distance_relation=relation,
        warning=warning,
    )


# -- Y-family (shortening on dual supports) -----------------------------------


def _dual_words(code: LinearCode, budget: int) -> list[int]:
    dual = code.dual()
    if 1 << dual.k > budget:
        raise ResourceLimit(
            f"dual has 2^{dual.k} words, beyond the search budget of {budget}"
        )
    words = [0]
    for g in dual.generator.row_bits():
        words += [w ^ g for w in words]
    return words


def _remove_support(code: LinearCode, support: tuple[int, ...]) -> LinearCode:
    rows = list(code.rref_matrix.row_bits())
    for s in support:
        mask = 1 << s
        pivot_row = next((r for r in rows if r & mask), None)
        if pivot_row is None:
            continue
        rows = [r ^ pivot_row if r & mask else r for r in rows if r is not pivot_row]
    trimmed = [BitVector(code.n, r).delete(support).bits for r in rows]
    return LinearCode.from_spanning(BitMatrix(code.n - len(support), trimmed))


def construction_y1(code: LinearCode, budget: int = 1 << 24) -> ConstructionReport:
    """Shorten on the support of a minimum-weight dual word."""
    _require_self_orthogonal(code)
    words = _dual_words(code, budget)
    best_w = code.n + 1
    best_support: tuple[int, ...] | None = None
    for w in words:
        if not w:
            continue
        ww = w.bit_count()
        if ww > best_w:
            continue
        support = BitVector(code.n, w).support()
        if ww < best_w or support < best_support:
            best_w, best_support = ww, support
    if best_support is None:
        raise PreconditionError("dual code is zero-dimensional")
    out = _remove_support(code, best_support)
    return ConstructionReport(
        code=out,
        predicted_n=code.n - best_w,
        predicted_k=code.k - best_w + 1,
    )


def construction_y4(code: LinearCode, max_dual_words: int = 1 << 13) -> ConstructionReport:
    """Shorten on the union support of the best pair of distinct dual words.

    The pair search is quadratic in the dual size, hence the tighter budget.
    """
    _require_self_orthogonal(code)
    words = _dual_words(code, 1 << 26)
    if len(words) > max_dual_words:
        raise ResourceLimit(
            f"{len(words)} dual words exceed the pair-search budget of {max_dual_words}"
        )
    nonzero = [w for w in words if w]
    if len(nonzero) < 2:
        raise PreconditionError("dual code has fewer than two nonzero words")
    best_w = code.n + 1
    best_support: tuple[int, ...] | None = None
    for i, u in enumerate(nonzero):
        for v in nonzero[i + 1 :]:
            both = u | v
            bw = both.bit_count()
            if bw > best_w:
                continue
            support = BitVector(code.n, both).support()
            if bw < best_w or support < best_support:
                best_w, best_support = bw, support
    out = _remove_support(code, best_support)
    return ConstructionReport(
        code=out,
        predicted_n=code.n - best_w,
        predicted_k=code.k - best_w + 2,
    )


def extend_parity_dual(code: LinearCode) -> ConstructionReport:
    """Zero-pad the code and adjoin the all-ones word of even length n+1.

    This realizes the dual of the extended dual for odd-length self-orthogonal
    cyclic codes (the parity-bit route to even-distance table rows).
    """
    _require_self_orthogonal(code)
    if code.n % 2 == 0:
        raise PreconditionError(f"length {code.n} is even; extension needs odd length")
    rows = [g for g in code.generator.row_bits()]  # high bit (column n) stays 0
    rows.append((1 << (code.n + 1)) - 1)
    out = LinearCode(BitMatrix(code.n + 1, rows))
    return ConstructionReport(code=out, predicted_n=code.n + 1, predicted_k=code.k + 1)
