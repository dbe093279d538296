"""f- and h-polynomials, Hilbert series, closed forms for J(K_n), cut polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

import numpy as np

from ._bits import iter_bits
from .core import MonomialIdeal, SimplicialComplex, count_components, sr_complex
from .errors import CrossCheckError, SizeLimitError
from .resolutions import BettiTable

INCLUSION_EXCLUSION_CAP = 16
MAX_CUT_SWEEP_VERTICES = 26


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[k]`` multiplies the k-th power."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            if k < 0:
                raise ValueError("negative exponent")
            c[k] += v
        return cls(tuple(c))

    @classmethod
    def one_minus_t(cls, power: int = 1) -> IntPolynomial:
        return cls(tuple((-1) ** k * comb(power, k) for k in range(power + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t^k``."""
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def compose_shift(self, a: int) -> IntPolynomial:
        """``p(x + a)``."""
        result = IntPolynomial(())
        step = IntPolynomial((a, 1))
        for c in reversed(self.coeffs):
            result = result * step + IntPolynomial((c,))
        return result

    def reversed(self, length: int) -> IntPolynomial:
        """Coefficients read backwards across ``length`` slots."""
        return IntPolynomial(tuple(self[length - 1 - k] for k in range(length)))

    def divide_one_minus_t(self) -> IntPolynomial | None:
        """Exact quotient by ``1 - t``, or ``None`` when it does not divide."""
        if self(1) != 0:
            return None
        # p = (1 - t) q  gives  q_k = sum_{i <= k} p_i
        q, acc = [], 0
        for c in self.coeffs[:-1]:
            acc += c
            q.append(acc)
        return IntPolynomial(tuple(q))

    def format(self, var: str = "t", descending: bool = False, spaced: bool = False) -> str:
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        if descending:
            terms.reverse()
        parts = []
        for n, (k, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if n == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}" if spaced else f"{sign}{body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class HilbertSeries:
    """The rational function ``numerator(t) / (1 - t)^denominator_power``."""

    numerator: IntPolynomial
    denominator_power: int

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        lhs = self.numerator * IntPolynomial.one_minus_t(other.denominator_power)
        rhs = other.numerator * IntPolynomial.one_minus_t(self.denominator_power)
        return lhs == rhs

    def __hash__(self):
        r = self.reduced()
        return hash((r.numerator, r.denominator_power))

    def reduced(self) -> HilbertSeries:
        """Cancel every common factor ``1 - t``."""
        num, power = self.numerator, self.denominator_power
        while power > 0:
            q = num.divide_one_minus_t()
            if q is None:
                break
            num, power = q, power - 1
        return HilbertSeries(num, power)

    def with_denominator(self, power: int) -> HilbertSeries:
        """Same function written over ``(1 - t)^power``; raises if impossible."""
        num = self.numerator
        if power >= self.denominator_power:
            return HilbertSeries(num * IntPolynomial.one_minus_t(power - self.denominator_power), power)
        for _ in range(self.denominator_power - power):
            num = num.divide_one_minus_t()
            if num is None:
                raise CrossCheckError(
                    f"numerator not divisible down to (1-t)^{power}: {self}"
                )
        return HilbertSeries(num, power)

    def coefficients(self, upto: int) -> list[int]:
        """Power-series coefficients of degrees ``0..upto``."""
        p = self.denominator_power
        out = []
        for k in range(upto + 1):
            if p == 0:
                out.append(self.numerator[k])
            else:
                out.append(sum(c * comb(k - i + p - 1, p - 1) for i, c in enumerate(self.numerator.coeffs) if i <= k))
        return out

    def __str__(self) -> str:
        return f"{self.numerator.format('t')} over (1-t)^{self.denominator_power}"


# ---------------------------------------------------------------- f and h


def f_vector(cx: SimplicialComplex) -> list[int]:
    """``[f_{-1}, f_0, ..., f_dim]`` face counts.

    Counted by inclusion-exclusion over the facets or over the minimal
    non-faces, whichever family is smaller; falls back to enumeration.
    """
    dim = cx.dim
    facets = cx.facets
    if cx.is_empty_complex:
        return [1]
    if len(facets) <= INCLUSION_EXCLUSION_CAP:
        return _f_by_facets(facets, dim)
    nonfaces = cx.minimal_nonfaces
    if len(nonfaces) <= INCLUSION_EXCLUSION_CAP:
        return _f_by_nonfaces(nonfaces, cx.vertices.bit_count(), dim)
    return f_vector_by_enumeration(cx)


def _f_by_facets(facets: tuple[int, ...], dim: int) -> list[int]:
    counts = [0] * (dim + 2)
    r = len(facets)
    # union of the facets' power sets; the empty face is counted once below
    for size in range(1, r + 1):
        sign = 1 if size % 2 else -1
        for combo in combinations(facets, size):
            inter = -1
            for f in combo:
                inter &= f
            k = inter.bit_count()
            for s in range(1, k + 1):
                counts[s] += sign * comb(k, s)
    counts[0] = 1
    return counts


def _f_by_nonfaces(nonfaces: tuple[int, ...], nverts: int, dim: int) -> list[int]:
    counts = [0] * (dim + 2)
    r = len(nonfaces)
    for size in range(0, r + 1):
        sign = -1 if size % 2 else 1
        for combo in combinations(nonfaces, size):
            union = 0
            for g in combo:
                union |= g
            u = union.bit_count()
            for s in range(u, dim + 2):
                counts[s] += sign * comb(nverts - u, s - u)
    return counts


def f_vector_by_enumeration(cx: SimplicialComplex) -> list[int]:
    counts = [0] * (cx.dim + 2)
    for face in cx.faces():
        counts[face.bit_count()] += 1
    return counts


def f_polynomial(cx: SimplicialComplex) -> IntPolynomial:
    """``f(D, x) = sum_i f_{i-1} x^{dim D + 1 - i}``."""
    f = f_vector(cx)
    top = cx.dim + 1
    return IntPolynomial.from_terms({top - i: f[i] for i in range(top + 1)})


def f_formula_Kn(n: int) -> IntPolynomial:
    """Closed form of the f-polynomial of the Stanley-Reisner complex of J(K_n)."""
    if n < 3:
        raise ValueError("n >= 3 required")
    terms = {n - 1: 1}
    for i in range(1, n):
        terms[n - 1 - i] = terms.get(n - 1 - i, 0) + n * comb(n - 1, i)
    terms[n - 2] -= comb(n, 2)
    return IntPolynomial.from_terms(terms)


def h_polynomial(cx: SimplicialComplex) -> IntPolynomial:
    """``h(D, x) = f(D, x - 1)``."""
    return f_polynomial(cx).compose_shift(-1)


def hilbert_numerator(cx: SimplicialComplex) -> HilbertSeries:
    """Hilbert series of the Stanley-Reisner ring: reversed h-vector over ``(1-t)^(dim+1)``."""
    top = cx.dim + 1
    return HilbertSeries(h_polynomial(cx).reversed(top + 1), top)


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    return hilbert_numerator(sr_complex(ideal))


def standard_monomial_count(ideal: MonomialIdeal, degree: int) -> int:
    """Monomials of the given degree outside ``ideal``, counted by brute force."""
    n = ideal.n
    count = 0
    for combo in combinations_with_replacement(range(n), degree):
        support = 0
        for v in combo:
            support |= 1 << v
        if not ideal.contains(support):
            count += 1
    return count


def kn_hilbert_closed_form(n: int) -> HilbertSeries:
    """``n + (1-n)(1-t)^(n-1) - C(n,2) t (1-t)^(n-2)`` over ``(1-t)^(n-1)``."""
    if n < 3:
        raise ValueError("n >= 3 required")
    num = (
        IntPolynomial((n,))
        + IntPolynomial.one_minus_t(n - 1) * (1 - n)
        - IntPolynomial.one_minus_t(n - 2).shift(1) * comb(n, 2)
    )
    return HilbertSeries(num, n - 1)


def kn_dual_kpoly_closed_form(n: int) -> HilbertSeries:
    """K-polynomial of ``S/J(K_n)^dual`` over ``(1-t)^C(n,2)``, one power per variable."""
    if n < 3:
        raise ValueError("n >= 3 required")
    e = comb(n, 2)
    terms = {0: 1}
    for k, v in ((comb(n - 1, 2), -n), (e - 1, e), (e, -comb(n - 1, 2))):
        terms[k] = terms.get(k, 0) + v
    return HilbertSeries(IntPolynomial.from_terms(terms), e)


def k_polynomial_from_betti(table: BettiTable, target_power: int | None = None) -> HilbertSeries:
    """``sum (-1)^i b_{i,j}(S/I) t^j`` over ``(1-t)^n``, optionally reduced.

    With ``target_power`` the numerator is divided by ``(1-t)`` until the
    denominator has that power; a non-divisible numerator raises
    ``CrossCheckError``.
    """
    quotient = table.to_quotient()
    terms: dict[int, int] = {}
    for (i, j), b in quotient.graded.items():
        terms[j] = terms.get(j, 0) + (-1) ** i * b
    series = HilbertSeries(IntPolynomial.from_terms(terms), table.n)
    if target_power is not None:
        series = series.with_denominator(target_power)
    return series


# ---------------------------------------------------------------- cut polynomial


def _edge_skeleton(cx: SimplicialComplex | MonomialIdeal) -> tuple[list[int], list[int]]:
    """Vertices of ``cx`` and the adjacency masks of its 1-skeleton.

    An edge ideal may be passed in place of its Stanley-Reisner complex; the
    skeleton is then read off the generators without building any facets.
    """
    if isinstance(cx, MonomialIdeal):
        nonfaces = cx.gens
        vertices = cx.ground.full & ~sum(g for g in nonfaces if g.bit_count() == 1)
    else:
        nonfaces = cx.minimal_nonfaces
        vertices = cx.vertices
    bad = [g for g in nonfaces if g.bit_count() != 2]
    if bad:
        raise ValueError(
            "cut polynomial needs an edge ideal: found minimal non-faces of degree "
            + ", ".join(str(g.bit_count()) for g in bad[:3])
        )
    verts = list(iter_bits(vertices))
    pos = {v: k for k, v in enumerate(verts)}
    adj = [0] * len(verts)
    missing = set(nonfaces)
    for a, b in combinations(verts, 2):
        if (1 << a | 1 << b) not in missing:
            adj[pos[a]] |= 1 << pos[b]
            adj[pos[b]] |= 1 << pos[a]
    return verts, adj


def all_subset_components(adj: list[int]) -> np.ndarray:
    """Component counts of every induced subgraph, indexed by subset bitmask.

    Vectorised over all ``2^n`` subsets: repeatedly peel off the component of
    each subset's lowest vertex, growing it by neighbourhood unions.
    """
    n = len(adj)
    if n > MAX_CUT_SWEEP_VERTICES:
        raise SizeLimitError(f"full subset sweep over {n} vertices refused")
    dtype = np.int64
    size = 1 << n
    nbr = np.zeros(size, dtype=dtype)
    for b in range(n):
        lo, hi = 1 << b, 1 << (b + 1)
        nbr[lo:hi] = nbr[0:lo] | adj[b]
    rest = np.arange(size, dtype=dtype)
    comps = np.zeros(size, dtype=np.int32)
    while True:
        live = rest != 0
        if not live.any():
            break
        comp = rest & -rest
        while True:
            grown = (comp | nbr[comp]) & rest
            if np.array_equal(grown, comp):
                break
            comp = grown
        rest = rest & ~comp
        comps += live
    return comps


def _popcounts(size: int) -> np.ndarray:
    counts = np.zeros(size, dtype=np.int32)
    bit = 1
    while bit < size:
        counts[bit : 2 * bit] = counts[0:bit] + 1
        bit *= 2
    return counts


def cut_polynomial(cx: SimplicialComplex | MonomialIdeal) -> IntPolynomial:
    """``sum_j c_j t^j``, ``c_j = sum_{|W|=j} (components of the 1-skeleton on W - 1)``.

    ``cx`` must be the Stanley-Reisner complex of an edge ideal; the graph
    used is its 1-skeleton, i.e. the complement of the edge-ideal graph.
    """
    _, adj = _edge_skeleton(cx)
    comps = all_subset_components(adj)
    sizes = _popcounts(len(comps))
    excess = np.where(comps > 0, comps - 1, 0).astype(np.int64)
    c = np.bincount(sizes, weights=excess, minlength=len(adj) + 1)
    return IntPolynomial(tuple(int(round(x)) for x in c))


def cut_coefficient(cx: SimplicialComplex | MonomialIdeal, j: int) -> int:
    """The single coefficient ``c_j``, by enumerating ``j``-subsets."""
    _, adj = _edge_skeleton(cx)
    total = 0
    for combo in combinations(range(len(adj)), j):
        subset = 0
        for v in combo:
            subset |= 1 << v
        if subset:
            total += count_components(adj, subset) - 1
    return total


def linear_strand(ideal: MonomialIdeal) -> dict[int, int]:
    """``j -> b_{j,j+1}(S/I)`` for an edge ideal, read off the cut polynomial."""
    q = cut_polynomial(ideal)
    return {j: q[j + 1] for j in range(1, q.degree) if q[j + 1]}


def _multinomial(n: int, parts: tuple[int, ...]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def kn_cut_c2(n: int) -> int:
    return 3 * comb(n, 4)


def kn_cut_c3(n: int) -> int:
    value = 3 * _multinomial(n, (2, 3, n - 5)) + Fraction(1, 3) * _multinomial(n, (2, 2, 2, n - 6))
    if value.denominator != 1:
        raise CrossCheckError(f"c_3 formula gave a non-integer {value} for n={n}")
    return int(value)


__all__ = [
    "HilbertSeries",
    "IntPolynomial",
    "all_subset_components",
    "cut_coefficient",
    "cut_polynomial",
    "f_formula_Kn",
    "f_polynomial",
    "f_vector",
    "h_polynomial",
    "hilbert_numerator",
    "hilbert_series",
    "k_polynomial_from_betti",
    "linear_strand",
    "kn_cut_c2",
    "kn_cut_c3",
    "standard_monomial_count",
    "kn_dual_kpoly_closed_form",
    "kn_hilbert_closed_form",
]
