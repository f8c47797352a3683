"""
Integer bilinear forms of rank at most 4: pairings, determinants, unimodular
basis changes, the normal form of a rank-3 lattice containing -A2, and box
searches for isotropic vectors and hyperbolic planes.

Coordinates of rank-3 vectors are in the ordered basis (l1, l2, tau), where
<l1, l2> carries -A2.
"""
from __future__ import annotations

import logging
from itertools import groupby, product
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from cubicdisc.model.errors import DomainError, TheoryViolation
from cubicdisc.model.models import CanonicalForm, GramMatrix, LatticeVector, normal_shape
from cubicdisc.services.integer_kernel import gcd, is_perfect_square

logger = logging.getLogger(__name__)

VectorLike = Union[LatticeVector, Sequence[int]]

MINUS_A2 = GramMatrix.of(((-2, 1), (1, -2)), even=True)
HYPERBOLIC_PLANE = GramMatrix.of(((0, 1), (1, 0)), even=True)


def _coords(v: VectorLike) -> tuple[int, ...]:
    return v.coords if isinstance(v, LatticeVector) else tuple(int(c) for c in v)


def _form(rows: Sequence[Sequence[int]], u: Sequence[int], v: Sequence[int]) -> int:
    return sum(u[i] * rows[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])


def pairing(G: GramMatrix, u: VectorLike, v: VectorLike) -> int:
    cu, cv = _coords(u), _coords(v)
    if len(cu) != G.rank or len(cv) != G.rank:
        raise DomainError(f"vectors of length {len(cu)} and {len(cv)} do not match a rank-{G.rank} form")
    return _form(G.entries, cu, cv)


def _det(rows: Sequence[Sequence[int]]) -> int:
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += (-1) ** j * entry * _det(minor)
    return total


def det(G: GramMatrix) -> int:
    return _det([list(row) for row in G.entries])


def canonical_gram(k: int, c: int) -> GramMatrix:
    if c not in (0, 1):
        raise DomainError(f"c must be 0 or 1, got {c}")
    return GramMatrix.of(normal_shape(k, c), even=True)


def transform_gram(G: GramMatrix, T: Sequence[Sequence[int]]) -> GramMatrix:
    """T^T * G * T, the Gram matrix in the basis given by the columns of T."""
    t = np.array(T, dtype=object)
    if t.shape != (G.rank, G.rank):
        raise DomainError(f"transform of shape {t.shape} does not fit a rank-{G.rank} form")
    g = np.array(G.entries, dtype=object)
    return GramMatrix.of((t.T @ g @ t).tolist(), even=G.even)


def twist(G: GramMatrix) -> GramMatrix:
    """The same lattice with the pairing negated."""
    return GramMatrix.of([[-v for v in row] for row in G.entries], even=G.even)


def canonicalize_rank3(G: GramMatrix) -> CanonicalForm:
    if G.rank != 3:
        raise DomainError(f"expected a rank-3 form, got rank {G.rank}")
    if not G.is_even():
        raise DomainError("form has an odd diagonal entry")
    if (G.entries[0][:2], G.entries[1][:2]) != MINUS_A2.entries:
        raise DomainError(f"top-left block {G.entries[0][:2]}, {G.entries[1][:2]} is not -A2")

    # tau -> tau - a*l2 clears <l1, tau>
    a = G.entries[0][2]
    tau = [0, -a, 1]
    e = G.entries[1][2] + 2 * a

    # tau -> tau + b*(l1 + 2 l2) shifts <l2, tau> by -3b; e = 3b + c with c in {-1, 0, 1}
    c = (e + 1) % 3 - 1
    b = (e - c) // 3
    tau = [tau[0] + b, tau[1] + 2 * b, tau[2]]
    if c == -1:
        tau = [-x for x in tau]
        c = 1

    T = [[1, 0, tau[0]], [0, 1, tau[1]], [0, 0, tau[2]]]
    gram = transform_gram(G, T)
    k = gram.entries[2][2] // 2
    if abs(_det(T)) != 1 or det(gram) != det(G) or gram.entries != normal_shape(k, c):
        raise TheoryViolation(f"canonicalization of {G.entries} produced {gram.entries}")
    logger.debug("canonicalized %s: a=%d b=%d c=%d k=%d", G.entries, a, b, c, k)
    return CanonicalForm(gram=GramMatrix.of(gram.entries, even=True), k=k, c=c, transform=tuple(map(tuple, T)))


def _order_key(w: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return max((abs(x) for x in w), default=0), w


def _integer_roots(A: int, B: int, C: int, bound: int) -> list[int]:
    """Integers t in [-bound, bound] with A t^2 + B t + C = 0."""
    if A == 0:
        if B == 0:
            return list(range(-bound, bound + 1)) if C == 0 else []
        return [-C // B] if C % B == 0 and abs(C // B) <= bound else []
    r = is_perfect_square(B * B - 4 * A * C)
    if r is None:
        return []
    out = set()
    for num in (-B + r, -B - r):
        if num % (2 * A) == 0 and abs(num // (2 * A)) <= bound:
            out.add(num // (2 * A))
    return sorted(out)


def _shell(dim: int, s: int) -> Iterator[tuple[int, ...]]:
    """Points of sup-norm exactly s in dimension dim, in lexicographic order."""
    if s == 0:
        yield (0,) * dim
        return
    if dim == 0:
        return
    for x in range(-s, s + 1):
        if abs(x) == s:
            for rest in product(range(-s, s + 1), repeat=dim - 1):
                yield (x,) + rest
        else:
            for rest in _shell(dim - 1, s):
                yield (x,) + rest


def box_in_order(dim: int, bound: int) -> Iterator[tuple[int, ...]]:
    """The box [-bound, bound]^dim, lazily, by sup-norm then coordinates."""
    if dim == 0:
        yield ()
        return
    for s in range(bound + 1):
        yield from _shell(dim, s)


def _check_bound(bound: int) -> None:
    if bound < 0:
        raise DomainError(f"search bound must be non-negative, got {bound}")


def isotropic_vectors(G: GramMatrix, bound: int) -> list[LatticeVector]:
    """Every w with |w_i| <= bound and <w, w> = 0, zero included, ordered by sup-norm then coordinates."""
    _check_bound(bound)
    rows, r = G.entries, G.rank
    last = r - 1
    head = [row[:last] for row in rows[:last]]
    found = []
    # <w, w> = G_ll t^2 + 2 (sum_i G_il w_i) t + <prefix, prefix> in the last coordinate t
    for prefix in product(range(-bound, bound + 1), repeat=last):
        lin = 2 * sum(rows[i][last] * prefix[i] for i in range(last))
        const = _form(head, prefix, prefix)
        for t in _integer_roots(rows[last][last], lin, const, bound):
            found.append(prefix + (t,))
    found.sort(key=_order_key)
    return [LatticeVector(coords=w) for w in found]


def _paired_solutions(
    G: GramMatrix, g: Sequence[int], target: int, bound: int
) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    """
    (shell, ws) for each shell of the freely enumerated coordinates, ws being
    the w in the box with <w, w> = 0 and sum g_i w_i = target, g != 0.

    shell is the sup-norm of the free coordinates of w, a lower bound for its
    sup-norm; shells come in increasing order and empty ones are reported too.
    """
    rows, r = G.entries, G.rank
    p = next(i for i in range(r) if g[i])
    if r == 1:
        ws = []
        if target % g[0] == 0:
            w = (target // g[0],)
            if abs(w[0]) <= bound and rows[0][0] * w[0] * w[0] == 0:
                ws.append(w)
        yield 0, ws
        return

    # with g_p * w = u + t*s, u and s integral, <w, w> = 0 becomes a quadratic in t
    q = next(i for i in range(r) if i != p)
    others = [i for i in range(r) if i not in (p, q)]
    s = [0] * r
    s[p], s[q] = -g[q], g[p]
    A = _form(rows, s, s)
    for shell, group in groupby(box_in_order(len(others), bound), key=lambda vals: _order_key(vals)[0]):
        ws = []
        for vals in group:
            u = [0] * r
            rest = target
            for i, x in zip(others, vals):
                u[i] = g[p] * x
                rest -= g[i] * x
            u[p] = rest
            for t in _integer_roots(A, 2 * _form(rows, s, u), _form(rows, u, u), bound):
                num = rest - g[q] * t
                if num % g[p]:
                    continue
                w = [0] * r
                for i, x in zip(others, vals):
                    w[i] = x
                w[q], w[p] = t, num // g[p]
                if abs(w[p]) <= bound:
                    ws.append(tuple(w))
        yield shell, ws


def find_isotropic_paired(G: GramMatrix, v: VectorLike, target: int, bound: int) -> Optional[LatticeVector]:
    """
    The first w (by sup-norm, then coordinates) in the box |w_i| <= bound with
    <w, w> = 0 and <v, w> = target; None when the box holds none.
    """
    _check_bound(bound)
    cv = _coords(v)
    if len(cv) != G.rank:
        raise DomainError(f"vector of length {len(cv)} does not match a rank-{G.rank} form")
    if target == 0:
        return LatticeVector(coords=(0,) * G.rank)
    g = [sum(cv[i] * G.entries[i][j] for i in range(G.rank)) for j in range(G.rank)]
    if not any(g):
        return None

    best = None
    for shell, ws in _paired_solutions(G, g, target, bound):
        for w in ws:
            if best is None or _order_key(w) < _order_key(best):
                best = w
        # later shells only hold vectors of sup-norm above shell
        if best is not None and shell >= _order_key(best)[0]:
            break
    if best is None:
        return None
    w = LatticeVector(coords=best)
    if pairing(G, w, w) != 0 or pairing(G, v, w) != target:
        raise TheoryViolation(f"search returned {w}, which fails its defining equations")
    return w


def _normalize_pair(e: LatticeVector, f: LatticeVector) -> tuple[LatticeVector, LatticeVector]:
    lead = next(x for x in e.coords if x)
    return (e, f) if lead > 0 else (-e, -f)


def find_hyperbolic_plane(G: GramMatrix, bound: int) -> Optional[tuple[LatticeVector, LatticeVector]]:
    """
    Isotropic e, f in the box with <e, f> = 1, e taken first in the search
    order; the pair is returned with the leading nonzero coordinate of e positive.
    None does not prove that G contains no hyperbolic plane.
    """
    _check_bound(bound)
    for e in isotropic_vectors(G, bound):
        if e.is_zero():
            continue
        ge = [sum(e.coords[i] * G.entries[i][j] for i in range(G.rank)) for j in range(G.rank)]
        content = 0
        for x in ge:
            content = gcd(content, x)
        if content != 1:
            continue
        f = find_isotropic_paired(G, e, 1, bound)
        if f is None:
            continue
        e, f = _normalize_pair(e, f)
        if (pairing(G, e, e), pairing(G, f, f), pairing(G, e, f)) != (0, 0, 1):
            raise TheoryViolation(f"pair {e}, {f} does not span a hyperbolic plane")
        return e, f
    logger.debug("no hyperbolic plane in box %d for %s", bound, G.entries)
    return None
