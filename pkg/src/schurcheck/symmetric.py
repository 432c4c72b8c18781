"""Sparse integer polynomials, Schur polynomials, Schur-basis decomposition
and plethysm by monomial substitution.

Coefficients are Python ints kept inside the signed 64-bit range; any result
outside it raises :class:`OverflowError`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ArityMismatch, NotHomogeneous, NotSymmetric
from .partitions import Partition, format_partition, partition_from_parts
from .tableaux import ssyt_fillings

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1

Exponent = tuple[int, ...]


def _checked(c: int) -> int:
    if not I64_MIN <= c <= I64_MAX:
        raise OverflowError(f"coefficient {c} does not fit in 64 bits")
    return c


class MonomialPolynomial:
    """A polynomial in ``x1..x_nvars`` stored as ``{exponent tuple: coefficient}``.

    Treat instances as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if nvars < 1:
            raise ValueError(f"nvars must be positive, got {nvars}")
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {nvars} variables")
            acc[e] = _checked(acc.get(e, 0) + int(c))
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "MonomialPolynomial":
        return cls(nvars)

    @classmethod
    def variable(cls, nvars: int, idx: int) -> "MonomialPolynomial":
        """The variable ``x_idx`` (1-based)."""
        e = [0] * nvars
        e[idx - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def __eq__(self, other):
        if not isinstance(other, MonomialPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MonomialPolynomial({self.nvars}, {dict(sorted(self.terms.items(), reverse=True))!r})"

    def __str__(self):
        return format_polynomial(self)

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self):
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MonomialPolynomial(self.nvars, {(0,) * self.nvars: 1})
        for _ in range(n):
            out = poly_mul(out, self)
        return out

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self.terms.values())

    def leading(self) -> tuple[Exponent, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def permute(self, perm) -> "MonomialPolynomial":
        """Substitute ``x_{i+1} -> x_{perm[i]+1}`` (``perm`` is 0-based)."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return MonomialPolynomial(self.nvars, out)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exponents": list(e), "coeff": c} for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, d: dict) -> "MonomialPolynomial":
        return cls(int(d["nvars"]), [(tuple(t["exponents"]), int(t["coeff"])) for t in d["terms"]])


def _same_arity(p: MonomialPolynomial, q: MonomialPolynomial) -> None:
    if p.nvars != q.nvars:
        raise ArityMismatch(f"{p.nvars} variables vs {q.nvars}")


def poly_add(p: MonomialPolynomial, q: MonomialPolynomial) -> MonomialPolynomial:
    _same_arity(p, q)
    out = dict(p.terms)
    for e, c in q.terms.items():
        out[e] = _checked(out.get(e, 0) + c)
    return MonomialPolynomial(p.nvars, out)


def poly_scale(p: MonomialPolynomial, c: int) -> MonomialPolynomial:
    return MonomialPolynomial(p.nvars, {e: _checked(c * v) for e, v in p.terms.items()})


def poly_mul(p: MonomialPolynomial, q: MonomialPolynomial) -> MonomialPolynomial:
    _same_arity(p, q)
    out: dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = _checked(out.get(e, 0) + _checked(c1 * c2))
    return MonomialPolynomial(p.nvars, out)


def format_polynomial(p: MonomialPolynomial) -> str:
    """One term per line, lex-descending: ``c * x1^a1 x2^a2``; exponent 1 is elided."""
    if not p.terms:
        return "0"
    lines = []
    for e, c in sorted(p.terms.items(), reverse=True):
        mono = " ".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a)
        lines.append(f"{c} * {mono}" if mono else str(c))
    return "\n".join(lines)


def parse_polynomial(text: str, nvars: int) -> MonomialPolynomial:
    """Inverse of :func:`format_polynomial`."""
    terms = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line == "0":
            continue
        coeff, _, mono = line.partition("*")
        e = [0] * nvars
        for factor in mono.split():
            var, _, power = factor.partition("^")
            if not var.startswith("x"):
                raise ValueError(f"bad factor {factor!r}")
            idx = int(var[1:])
            if not 1 <= idx <= nvars:
                raise ValueError(f"variable {var} outside x1..x{nvars}")
            e[idx - 1] += int(power) if power else 1
        terms.append((tuple(e), int(coeff)))
    return MonomialPolynomial(nvars, terms)


class SchurExpansion:
    """A finite integer combination of Schur functions, ``{Partition: coefficient}``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Mapping[Partition, int] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[Partition, int] = {}
        for lam, c in items:
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            acc[lam] = _checked(acc.get(lam, 0) + int(c))
        self.coefficients = {lam: c for lam, c in acc.items() if c}

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{lam.parts}: {c}" for lam, c in self.items())
        return f"SchurExpansion({{{inner}}})"

    def __str__(self):
        return format_expansion(self)

    def __len__(self):
        return len(self.coefficients)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in lex-descending partition order."""
        return sorted(self.coefficients.items(), reverse=True)

    def is_homogeneous(self) -> bool:
        return len({lam.size for lam in self.coefficients}) <= 1

    def to_polynomial(self, nvars: int) -> MonomialPolynomial:
        out = MonomialPolynomial.zero(nvars)
        for lam, c in self.coefficients.items():
            out = out + poly_scale(schur_polynomial(lam, nvars), c)
        return out

    def to_json(self) -> dict:
        return {"terms": [{"partition": list(lam.parts), "coeff": c} for lam, c in self.items()]}

    @classmethod
    def from_json(cls, d: dict) -> "SchurExpansion":
        return cls([(Partition(t["partition"]), t["coeff"]) for t in d["terms"]])


def format_expansion(s: SchurExpansion) -> str:
    if not s.coefficients:
        return "0"
    return "\n".join(f"{c} s[{format_partition(lam)}]" for lam, c in s.items())


@lru_cache(maxsize=512)
def _schur_terms(parts: tuple[int, ...], nvars: int) -> tuple[tuple[Exponent, int], ...]:
    counts: Counter = Counter()
    for flat in ssyt_fillings(Partition(parts), nvars):
        e = [0] * nvars
        for v in flat:
            e[v - 1] += 1
        counts[tuple(e)] += 1
    return tuple(counts.items())


def schur_polynomial(shape: Partition, nvars: int) -> MonomialPolynomial:
    """``s_shape(x1..x_nvars)``: the sum of ``x^T`` over SSYT ``T`` with entries <= nvars."""
    if nvars < 1:
        raise ValueError(f"nvars must be positive, got {nvars}")
    return MonomialPolynomial(nvars, _schur_terms(tuple(shape.parts), nvars))


def is_symmetric(p: MonomialPolynomial) -> bool:
    """Invariance under every adjacent transposition, which generate the symmetric group."""
    terms = p.terms
    for i in range(p.nvars - 1):
        for e, c in terms.items():
            if e[i] == e[i + 1]:
                continue
            f = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
            if terms.get(f) != c:
                return False
    return True


def schur_decompose(p: MonomialPolynomial) -> SchurExpansion:
    """Write a symmetric homogeneous polynomial in the Schur basis.

    Repeatedly peel off the lex-largest monomial ``c x^lam``: for a symmetric
    polynomial its exponent is weakly decreasing, and ``s_lam`` has the same
    leading monomial with coefficient 1, so subtracting ``c s_lam`` strictly
    lowers the leading term.
    """
    if not p.is_homogeneous():
        raise NotHomogeneous(f"degrees {sorted(p.degrees())}")
    if not is_symmetric(p):
        raise NotSymmetric("polynomial is not invariant under adjacent transpositions")
    nvars = p.nvars
    rest = dict(p.terms)
    out: dict[Partition, int] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        if any(lead[i] < lead[i + 1] for i in range(nvars - 1)):
            raise NotSymmetric(f"leading exponent {lead} is not weakly decreasing")
        lam = partition_from_parts(lead)
        out[lam] = c
        for e, v in _schur_terms(lam.parts, nvars):
            r = _checked(rest.get(e, 0) - c * v)
            if r:
                rest[e] = r
            else:
                rest.pop(e, None)
    return SchurExpansion(out)


def monomial_multiset(p: MonomialPolynomial) -> list[Exponent]:
    """Monomials of ``p`` repeated by coefficient, lex-descending (duplicates adjacent).

    Requires non-negative coefficients.
    """
    out = []
    for e, c in sorted(p.terms.items(), reverse=True):
        if c < 0:
            raise ValueError(f"negative coefficient {c} cannot be a multiplicity")
        out.extend([e] * c)
    return out


def plethysm(outer: Partition, inner: Partition, nvars: int) -> MonomialPolynomial:
    """``s_outer(s_inner)`` in ``x1..x_nvars``.

    ``s_outer`` is evaluated at the multiset of monomials of
    ``s_inner(x1..x_nvars)``: each SSYT of shape ``outer`` with entries up to
    the multiset size picks one monomial per cell, and the picks multiply.
    Tableaux are streamed; the intermediate polynomial in the large variable
    set is never built.
    """
    monos = monomial_multiset(schur_polynomial(inner, nvars))
    if not outer:
        return MonomialPolynomial(nvars, {(0,) * nvars: 1})
    m = len(monos)
    acc: Counter = Counter()
    for flat in ssyt_fillings(outer, m):
        e = [0] * nvars
        for v in flat:
            for i, x in enumerate(monos[v - 1]):
                e[i] += x
        acc[tuple(e)] += 1
    return MonomialPolynomial(nvars, acc)
