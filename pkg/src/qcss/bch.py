"""Cyclic and BCH codes over GF(2), with GF(2^m) log-table arithmetic.

Polynomials over GF(2) are ints with bit i = coefficient of x^i, so the hex
rendering of a generator polynomial is its value at x = 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .codes import LinearCode
from .errors import DecodingFailure, InvalidInput, PreconditionError
from .gf2 import BitMatrix, BitVector

# One fixed primitive polynomial per extension degree (lowest-weight standard
# choices).  Primitivity is re-verified at table construction time.
PRIMITIVE_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
}


# -- GF(2)[x] helpers -------------------------------------------------------


def poly_deg(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise InvalidInput("division by the zero polynomial")
    db = poly_deg(b)
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_divides(a: int, b: int) -> bool:
    """True when a | b."""
    return poly_mod(b, a) == 0


# -- GF(2^m) ---------------------------------------------------------------


class Gf2mField:
    """GF(2^m) with exp/log tables; elements are ints in poly representation."""

    def __init__(self, m: int, primitive_poly: int | None = None):
        if m < 1:
            raise InvalidInput(f"extension degree must be positive, got {m}")
        poly = PRIMITIVE_POLYS.get(m) if primitive_poly is None else primitive_poly
        if poly is None:
            raise InvalidInput(f"no primitive polynomial on record for m={m}")
        if poly_deg(poly) != m:
            raise InvalidInput(f"polynomial 0x{poly:x} does not have degree {m}")
        self.m = m
        self.poly = poly
        self.order = (1 << m) - 1
        exp = [0] * (self.order + 1)
        log = [0] * (1 << m)
        x = 1
        for i in range(self.order):
            exp[i] = x
            if x == 1 and i > 0:
                raise InvalidInput(f"0x{poly:x} is not primitive of degree {m}")
            log[x] = i
            x <<= 1
            if x >> m & 1:
                x ^= poly
        if x != 1:
            raise InvalidInput(f"0x{poly:x} is not primitive of degree {m}")
        exp[self.order] = 1
        self._exp = exp
        self._log = log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InvalidInput("zero has no inverse")
        return self._exp[(self.order - self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def alpha_pow(self, e: int) -> int:
        return self._exp[e % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise InvalidInput("log of zero")
        return self._log[a]

    def eval_poly(self, p: int, x: int) -> int:
        """Evaluate a GF(2)-coefficient polynomial at a field element."""
        acc = 0
        for d in range(p.bit_length() - 1, -1, -1):
            acc = self.mul(acc, x)
            if p >> d & 1:
                acc ^= 1
        return acc

    def __repr__(self) -> str:
        return f"Gf2mField(m={self.m}, poly=0x{self.poly:x})"


@lru_cache(maxsize=None)
def default_field(m: int) -> Gf2mField:
    return Gf2mField(m)


def multiplicative_order_of_two(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise InvalidInput(f"length must be odd and positive, got {n}")
    m, x = 1, 2 % n
    while x != 1:
        x = (x * 2) % n
        m += 1
    return m


def cyclotomic_coset(e: int, n: int) -> tuple[int, ...]:
    """Orbit of e under doubling mod n, sorted."""
    seen = set()
    x = e % n
    while x not in seen:
        seen.add(x)
        x = (x * 2) % n
    return tuple(sorted(seen))


def minimal_polynomial(field: Gf2mField, e: int) -> int:
    """Binary minimal polynomial of alpha^e: product of (x - alpha^i) over the
    cyclotomic coset of e mod 2^m - 1."""
    n = field.order
    if not 0 <= e < n:
        raise InvalidInput(f"exponent {e} out of range for order {n}")
    coset = cyclotomic_coset(e, n)
    # coefficients in GF(2^m), low degree first
    coeffs = [1]
    for i in coset:
        root = field.alpha_pow(i)
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] ^= c
            nxt[d] ^= field.mul(c, root)
        coeffs = nxt
    bits = 0
    for d, c in enumerate(coeffs):
        if c == 1:
            bits |= 1 << d
        elif c != 0:
            raise InvalidInput("coset product did not collapse to GF(2)")
    return bits


# -- cyclic code specifications --------------------------------------------


@dataclass(frozen=True)
class CyclicCodeSpec:
    """A length-n binary cyclic code pinned down by its zero set.

    ``zero_set`` holds the exponents i with g(beta^i) = 0 where
    beta = alpha^((2^m-1)/n); it is closed under doubling mod n.  The decoding
    window is a run of delta-1 zeros of the relabeled root beta^step:
    step*(b+j) mod n lies in the zero set for j = 0..delta-2.  ``delta`` is
    the designed distance; re-choosing the root (any unit step) is what makes
    the sharpest window reachable.
    """

    n: int
    m: int
    b: int
    delta: int
    zero_set: tuple[int, ...]
    generator: int
    step: int = 1
    field: Gf2mField = field(repr=False, compare=False, default=None)

    @property
    def dimension(self) -> int:
        return self.n - len(self.zero_set)

    def generator_hex(self) -> str:
        return hex(self.generator)

    def beta_exponent(self) -> int:
        return ((1 << self.m) - 1) // self.n

    def to_code(self) -> LinearCode:
        k = self.dimension
        rows = [self.generator << j for j in range(k)]
        return LinearCode(BitMatrix(self.n, rows))

    def dual_spec(self) -> "CyclicCodeSpec":
        dz = dual_zero_set(self)
        return spec_from_zero_set(self.n, dz, self.field)


def _closure(exponents, n: int) -> tuple[int, ...]:
    out: set[int] = set()
    for e in exponents:
        out.update(cyclotomic_coset(e, n))
    return tuple(sorted(out))


def _generator_from_zeros(n: int, zeros, fld: Gf2mField) -> int:
    s = fld.order // n
    bits_by_coset: dict[tuple[int, ...], int] = {}
    for e in zeros:
        coset = cyclotomic_coset(e, n)
        if coset not in bits_by_coset:
            bits_by_coset[coset] = minimal_polynomial(fld, (s * coset[0]) % fld.order)
    g = 1
    for p in bits_by_coset.values():
        g = poly_mul(g, p)
    return g


def longest_zero_run(zero_set, n: int) -> tuple[int, int]:
    """(start, length) of the longest cyclic run of consecutive exponents."""
    zeros = set(zero_set)
    if len(zeros) >= n:
        return 0, n
    best_start, best_len = 0, 0
    for start in zeros:
        if (start - 1) % n in zeros:
            continue  # not the beginning of a run
        length = 0
        while (start + length) % n in zeros:
            length += 1
        if length > best_len:
            best_start, best_len = start, length
    return best_start, best_len


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def best_window(zero_set, n: int) -> tuple[int, int, int]:
    """(step, start, length) of the longest run of consecutive exponents of
    any relabeled root beta^step; the exponents step*(start+j) all lie in the
    zero set for j < length."""
    zs = set(zero_set)
    best = (1, 0, 0)
    for u in units(n):
        scaled = {u * i % n for i in zs}
        start, run = longest_zero_run(scaled, n)
        if run > best[2]:
            best = (pow(u, -1, n), start, run)
    return best


def bch_bound(zero_set, n: int) -> int:
    """Sharpest BCH-bound distance over all unit relabelings of the roots."""
    return best_window(zero_set, n)[2] + 1


def spec_from_zero_set(n: int, zero_set, fld: Gf2mField | None = None) -> CyclicCodeSpec:
    if fld is None:
        fld = default_field(multiplicative_order_of_two(n))
    zero_set = _closure(zero_set, n)
    g = _generator_from_zeros(n, zero_set, fld) if zero_set else 1
    step, start, length = best_window(zero_set, n)
    return CyclicCodeSpec(
        n=n, m=fld.m, b=start, delta=length + 1, zero_set=zero_set, generator=g,
        step=step, field=fld,
    )


def bch_generator(n: int, b: int, delta: int, fld: Gf2mField | None = None) -> CyclicCodeSpec:
    """BCH code with zeros beta^k for b <= k <= b + delta - 2."""
    if n < 1 or n % 2 == 0:
        raise InvalidInput(f"BCH length must be odd, got {n}")
    if delta < 2:
        raise InvalidInput(f"designed distance must be >= 2, got {delta}")
    if fld is None:
        fld = default_field(multiplicative_order_of_two(n))
    if fld.order % n:
        raise InvalidInput(f"{n} does not divide 2^{fld.m}-1")
    window = range(b, b + delta - 1)
    zero_set = _closure(window, n)
    if len(zero_set) >= n:
        raise PreconditionError(
            f"window (b={b}, delta={delta}) closes over all residues: empty code"
        )
    g = _generator_from_zeros(n, zero_set, fld)
    spec = CyclicCodeSpec(
        n=n, m=fld.m, b=b, delta=delta, zero_set=zero_set, generator=g, field=fld
    )
    if not poly_divides(g, (1 << n) | 1):
        raise InvalidInput("generator does not divide x^n + 1")
    return spec


def dual_zero_set(spec: CyclicCodeSpec) -> tuple[int, ...]:
    """Zero set of the dual code: { i : n - i not in the zero set }."""
    zeros = set(spec.zero_set)
    return tuple(sorted(i for i in range(spec.n) if (spec.n - i) % spec.n not in zeros))


def is_self_orthogonal_cyclic(spec: CyclicCodeSpec) -> bool:
    """g(beta^(n-i)) != 0 implies g(beta^i) = 0, for every exponent i."""
    zeros = set(spec.zero_set)
    return all(
        i in zeros for i in range(spec.n) if (spec.n - i) % spec.n not in zeros
    )


def zero_set_of_polynomial(n: int, g: int, fld: Gf2mField | None = None) -> tuple[int, ...]:
    """Exponents i with g(beta^i) = 0, by direct evaluation."""
    if fld is None:
        fld = default_field(multiplicative_order_of_two(n))
    s = fld.order // n
    return tuple(
        i for i in range(n) if fld.eval_poly(g, fld.alpha_pow(s * i)) == 0
    )


# -- Berlekamp-Massey decoding ----------------------------------------------


def bm_decode(spec: CyclicCodeSpec, received: BitVector) -> set[int]:
    """Error positions for up to floor((delta-1)/2) errors, via syndromes,
    Berlekamp-Massey and a Chien search.  Raises DecodingFailure beyond that.
    """
    if received.n != spec.n:
        raise InvalidInput(f"received length {received.n} != n = {spec.n}")
    fld = spec.field
    s = (fld.order // spec.n) * spec.step  # exponent of the decoding root
    nsyn = spec.delta - 1
    syndromes = []
    r = received.bits
    for j in range(nsyn):
        e = (spec.b + j) % spec.n
        acc = 0
        rr = r
        while rr:
            low = rr & -rr
            acc ^= fld.alpha_pow(s * e * (low.bit_length() - 1))
            rr ^= low
        syndromes.append(acc)
    if not any(syndromes):
        return set()

    # Berlekamp-Massey over GF(2^m); coefficient lists are low-degree-first
    lam = [1]
    prev = [1]
    lfsr_len = 0
    shift = 1
    prev_disc = 1
    for step in range(1, nsyn + 1):
        disc = syndromes[step - 1]
        for i in range(1, lfsr_len + 1):
            if i < len(lam) and lam[i]:
                disc ^= fld.mul(lam[i], syndromes[step - 1 - i])
        if disc == 0:
            shift += 1
            continue
        scale = fld.div(disc, prev_disc)
        update = lam.copy()
        grow = len(prev) + shift - len(update)
        if grow > 0:
            update += [0] * grow
        for i, c in enumerate(prev):
            update[i + shift] ^= fld.mul(scale, c)
        if 2 * lfsr_len <= step - 1:
            prev = lam
            lfsr_len = step - lfsr_len
            prev_disc = disc
            shift = 1
        else:
            shift += 1
        lam = update

    degree = len(lam) - 1
    while degree > 0 and lam[degree] == 0:
        degree -= 1
    t_max = (spec.delta - 1) // 2
    if lfsr_len > t_max or degree != lfsr_len:
        raise DecodingFailure(
            f"error weight exceeds the designed radius {t_max}"
        )

    # Chien search: position p is in error iff lambda(beta^-p) = 0
    beta_exp = s % fld.order
    positions = set()
    for p in range(spec.n):
        x = fld.alpha_pow(-beta_exp * p % fld.order)
        acc = 0
        xp = 1
        for c in lam[: lfsr_len + 1]:
            if c:
                acc ^= fld.mul(c, xp)
            xp = fld.mul(xp, x)
        if acc == 0:
            positions.add(p)
    if len(positions) != lfsr_len:
        raise DecodingFailure(
            f"locator of degree {lfsr_len} has {len(positions)} roots"
        )
    corrected = received.bits
    for p in positions:
        corrected ^= 1 << p
    s0 = fld.order // spec.n
    for i in spec.zero_set:
        acc = 0
        rr = corrected
        while rr:
            low = rr & -rr
            acc ^= fld.alpha_pow(s0 * i * (low.bit_length() - 1))
            rr ^= low
        if acc:
            raise DecodingFailure("corrected word fails the zero-set check")
    return positions


class BchDecoder:
    """Word decoder for a cyclic code, pluggable into the CSS pipeline."""

    def __init__(self, spec: CyclicCodeSpec):
        self.spec = spec
        self.radius = (spec.delta - 1) // 2

    def decode_word(self, bits: int) -> int:
        received = BitVector(self.spec.n, bits)
        positions = bm_decode(self.spec, received)
        out = bits
        for p in positions:
            out ^= 1 << p
        return out


# -- search over designed windows -------------------------------------------


@dataclass(frozen=True)
class BchSearchHit:
    """A self-orthogonal cyclic code whose dual is a BCH code."""

    code_spec: CyclicCodeSpec  # the self-orthogonal code
    dual_spec: CyclicCodeSpec  # the decodable BCH dual
    quantum_n: int
    quantum_k: int
    designed_distance: int


def search_self_orthogonal_bch(n: int) -> list[BchSearchHit]:
    """All (b, delta) BCH windows whose dual is self-orthogonal, deduplicated
    by zero set and sorted by (dimension, zero set)."""
    if n < 3 or n % 2 == 0:
        raise InvalidInput(f"length must be odd and >= 3, got {n}")
    fld = default_field(multiplicative_order_of_two(n))
    seen: dict[tuple[int, ...], BchSearchHit] = {}
    for b in range(n):
        closure: set[int] = set()
        for delta in range(2, n + 1):
            closure.update(cyclotomic_coset(b + delta - 2, n))
            if len(closure) >= n:
                break
            dual_zeros = tuple(sorted(closure))
            code_zeros = tuple(
                sorted(i for i in range(n) if (n - i) % n not in closure)
            )
            if not set(dual_zeros) <= set(code_zeros):
                continue  # dual candidate is not a superset code
            if code_zeros in seen:
                continue
            code_spec = spec_from_zero_set(n, code_zeros, fld)
            dual_spec = spec_from_zero_set(n, dual_zeros, fld)
            k = code_spec.dimension
            seen[code_zeros] = BchSearchHit(
                code_spec=code_spec,
                dual_spec=dual_spec,
                quantum_n=n,
                quantum_k=n - 2 * k,
                designed_distance=dual_spec.delta,
            )
    return sorted(
        seen.values(), key=lambda h: (h.code_spec.dimension, h.code_spec.zero_set)
    )


@dataclass(frozen=True)
class SearchMatch:
    hit: BchSearchHit
    unit: int
    alternate_primitive_poly: int | None


def match_polynomial_against_search(
    n: int, g: int, hits: list[BchSearchHit] | None = None
) -> SearchMatch | None:
    """Locate a search hit whose code equals the one generated by g, up to the
    coordinate relabeling induced by re-choosing the primitive element.

    unit == 1 means the hex is reproduced verbatim by the default field.  For
    prime-order lengths the primitive polynomial that reproduces g exactly is
    also returned (the minimal polynomial of the relabeled root).
    """
    fld = default_field(multiplicative_order_of_two(n))
    zeros = set(zero_set_of_polynomial(n, g, fld))
    if len(zeros) != poly_deg(g):
        return None
    if hits is None:
        hits = search_self_orthogonal_bch(n)
    by_zeros = {frozenset(h.code_spec.zero_set): h for h in hits}
    for u in units(n):
        scaled = frozenset(u * i % n for i in zeros)
        hit = by_zeros.get(scaled)
        if hit is None:
            continue
        alt = None
        if n == fld.order and u != 1:
            # beta' = alpha^v with v*u = 1 mod n turns the scaled set back
            # into the zero set of g, so its minimal polynomial defines the
            # field in which the search reproduces the hex verbatim.
            v = pow(u, -1, n)
            alt = minimal_polynomial(fld, v)
        return SearchMatch(hit=hit, unit=u, alternate_primitive_poly=alt)
    return None
