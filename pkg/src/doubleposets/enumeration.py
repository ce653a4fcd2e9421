"""Exhaustive generation of isoclasses by size, plus counting oracles.

Plane posets are generated incrementally: a new top of the total order
is attached to a canonical (n-1)-class by choosing which old vertices
sit below it in the first order (that set must be down-closed there,
its complement down-closed in the second).  The result is canonical as
labeled, so no relabeling pass is needed.  General double posets pair
a canonical single poset with a second order taken up to the first's
automorphisms, then get canonicalized.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass

from .core import (
    EMPTY,
    BudgetExceededError,
    DoublePoset,
    canonical_form,
    canonical_key,
    induced_subposet,
    is_connected,
    _add_closed_edge,
    _bits,
    _down_rows,
    _forbidden_wn_keys,
    _lambda_key,
)


class PosetFamily(enum.Enum):
    DP = "dp"
    PP = "pp"
    WNP = "wn"
    WNP_H = "wnh"
    WNP_R = "wnr"
    PF = "pf"


BUDGETS = {
    PosetFamily.DP: 5,
    PosetFamily.PP: 7,
    PosetFamily.WNP: 7,
    PosetFamily.WNP_H: 7,
    PosetFamily.WNP_R: 7,
    PosetFamily.PF: 9,
}


def _check_budget(family, n):
    if n < 0:
        raise BudgetExceededError(f"negative size {n}")
    if n > BUDGETS[family]:
        raise BudgetExceededError(
            f"{family.value} enumeration capped at n={BUDGETS[family]}, got {n}"
        )


def _plane_extensions(p):
    """All one-vertex extensions of a canonical plane poset.

    The new vertex is the top of the total order; a subset H of old
    vertices goes below it in the first order, the rest in the second.
    Validity: H down-closed for order one, complement down-closed for
    order two.  The extension is closed and canonical as built.
    """
    n = p.n
    full = (1 << n) - 1
    bit_new = 1 << n
    out = []
    for h in range(full + 1):
        rest = full ^ h
        ok = True
        for v in _bits(h):
            if p.dn1[v] & ~h:
                ok = False
                break
        if ok:
            for v in _bits(rest):
                if p.dn2[v] & ~rest:
                    ok = False
                    break
        if not ok:
            continue
        up1 = [p.up1[v] | (bit_new if h >> v & 1 else 0) for v in range(n)]
        up2 = [p.up2[v] | (bit_new if rest >> v & 1 else 0) for v in range(n)]
        up1.append(0)
        up2.append(0)
        out.append(DoublePoset._from_rows(n + 1, up1, up2))
    return out


def _new_vertex_avoids(p, bad_keys, subset_size):
    """No induced subposet of given size containing the new top vertex
    has a canonical key in bad_keys."""
    n = p.n
    if n < subset_size:
        return True
    for rest in itertools.combinations(range(1, n), subset_size - 1):
        sub = induced_subposet(p, rest + (n,))
        if canonical_key(sub) in bad_keys:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _plane_classes(n):
    if n == 0:
        return (EMPTY,)
    out = []
    for p in _plane_classes(n - 1):
        out.extend(_plane_extensions(p))
    out.sort(key=lambda p: p.identity_key())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _wn_classes(n):
    if n == 0:
        return (EMPTY,)
    bad = _forbidden_wn_keys()
    out = []
    for p in _wn_classes(n - 1):
        for q in _plane_extensions(p):
            if _new_vertex_avoids(q, bad, 4):
                out.append(q)
    out.sort(key=lambda p: p.identity_key())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _forest_classes(n):
    if n == 0:
        return (EMPTY,)
    bad = frozenset((_lambda_key(),))
    out = []
    for p in _forest_classes(n - 1):
        for q in _plane_extensions(p):
            if _new_vertex_avoids(q, bad, 3):
                out.append(q)
    out.sort(key=lambda p: p.identity_key())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _labeled_single_posets(n):
    """All strict-closure row tuples of partial orders on 1..n."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []

    def dfs(idx, rows, dns, none_pairs):
        if idx == len(pairs):
            out.append(tuple(rows))
            return
        a, b = pairs[idx]
        if rows[a] >> b & 1 or rows[b] >> a & 1:
            # Already forced by closure of earlier choices.
            dfs(idx + 1, rows, dns, none_pairs)
            return
        dfs(idx + 1, rows, dns, none_pairs + ((a, b),))
        for x, y in ((a, b), (b, a)):
            r2, d2 = rows.copy(), dns.copy()
            if not _add_closed_edge(r2, d2, x, y):
                continue
            # Pairs already decided incomparable must stay that way.
            if any(r2[i] >> j & 1 or r2[j] >> i & 1 for i, j in none_pairs):
                continue
            dfs(idx + 1, r2, d2, none_pairs)

    dfs(0, [0] * n, [0] * n, ())
    return tuple(out)


def _relabel_rows(rows, perm):
    n = len(rows)
    out = [0] * n
    for i in range(n):
        m = 0
        for j in _bits(rows[i]):
            m |= 1 << perm[j]
        out[perm[i]] = m
    return tuple(out)


def _poset_automorphisms(rows):
    """All permutations (0-based tuples) preserving one strict order."""
    n = len(rows)
    dns = _down_rows(n, rows)
    profile = [(rows[v].bit_count(), dns[v].bit_count()) for v in range(n)]
    perms = []
    image = [0] * n
    used = [False] * n

    def dfs(v):
        if v == n:
            perms.append(tuple(image))
            return
        for w in range(n):
            if used[w] or profile[v] != profile[w]:
                continue
            ok = True
            for u in range(v):
                if (rows[v] >> u & 1) != (rows[w] >> image[u] & 1) or (
                    rows[u] >> v & 1
                ) != (rows[image[u]] >> w & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                dfs(v + 1)
                used[w] = False

    dfs(0)
    return perms


@functools.lru_cache(maxsize=None)
def _single_poset_classes(n):
    """Canonical row tuples of unlabeled posets on n vertices."""
    seen = {}
    for rows in _labeled_single_posets(n):
        p = DoublePoset._from_rows(n, list(rows), [0] * n)
        canon, key = canonical_form(p)
        if key not in seen:
            seen[key] = canon.up1
    return tuple(seen[k] for k in sorted(seen))


@functools.lru_cache(maxsize=None)
def _dp_classes(n):
    out = []
    seen = set()
    for rows1 in _single_poset_classes(n):
        auts = _poset_automorphisms(rows1)
        orbit_seen = set()
        for rows2 in _labeled_single_posets(n):
            rep = min(_relabel_rows(rows2, perm) for perm in auts)
            if rep in orbit_seen:
                continue
            orbit_seen.add(rep)
            p = DoublePoset._from_rows(n, list(rows1), list(rep))
            canon, key = canonical_form(p)
            assert key not in seen, "duplicate isoclass from orbit transversal"
            seen.add(key)
            out.append(canon)
    out.sort(key=lambda p: p.identity_key())
    return tuple(out)


def enumerate_family(family, n):
    """Every isoclass of the family at size n, canonical, key-sorted."""
    family = PosetFamily(family)
    _check_budget(family, n)
    if family is PosetFamily.DP:
        return _dp_classes(n)
    if family is PosetFamily.PP:
        return _plane_classes(n)
    if family is PosetFamily.WNP:
        return _wn_classes(n)
    if family is PosetFamily.WNP_H:
        return tuple(p for p in _wn_classes(n) if is_connected(p, 1))
    if family is PosetFamily.WNP_R:
        return tuple(p for p in _wn_classes(n) if is_connected(p, 2))
    if family is PosetFamily.PF:
        return _forest_classes(n)
    raise AssertionError(family)


def count_family(family, n):
    return len(enumerate_family(family, n))


def schroeder_coefficients(n):
    """Coefficients 0..n of the h-connected WN series, by recurrence.

    (k+1) S_{k+1} = 3 (2k-1) S_k - (k-2) S_{k-1}, S_1 = S_2 = 1; the
    constant term is 0.  Exactness of the integer division is asserted.
    """
    if n < 0:
        raise BudgetExceededError(f"negative size {n}")
    coeffs = [0, 1, 1]
    for k in range(2, n):
        s_k = coeffs[k]
        s_km1 = coeffs[k - 1]
        num = 3 * (2 * k - 1) * s_k - (k - 2) * s_km1
        assert num % (k + 1) == 0, "recurrence left a remainder"
        coeffs.append(num // (k + 1))
    return coeffs[: n + 1]


def catalan_numbers(n):
    """Catalan numbers C_0..C_n by the convolution recurrence."""
    if n < 0:
        raise BudgetExceededError(f"negative size {n}")
    cats = [1]
    for k in range(n):
        cats.append(sum(cats[i] * cats[k - i] for i in range(k + 1)))
    return cats


def wnp_reference_counts(n):
    """Expected WNP counts 0..n: 1, 1, then twice the Schroeder numbers."""
    s = schroeder_coefficients(n)
    out = []
    for k in range(n + 1):
        if k == 0 or k == 1:
            out.append(1)
        else:
            out.append(2 * s[k])
    return out


def _expected_counts(family, max_n):
    if family is PosetFamily.PP:
        out = [1]
        for k in range(1, max_n + 1):
            out.append(out[-1] * k)
        return out
    if family is PosetFamily.WNP:
        return wnp_reference_counts(max_n)
    if family in (PosetFamily.WNP_H, PosetFamily.WNP_R):
        s = schroeder_coefficients(max_n)
        return [0] + s[1 : max_n + 1]
    if family is PosetFamily.PF:
        return catalan_numbers(max_n)
    raise ValueError(f"no reference sequence for {family.value}")


@dataclass(frozen=True)
class SequenceReport:
    family: PosetFamily
    rows: tuple  # (n, counted, expected)
    ok: bool


def sequence_check(family, max_n):
    """Compare enumeration counts with the independent counting oracles."""
    family = PosetFamily(family)
    _check_budget(family, max_n)
    expected = _expected_counts(family, max_n)
    rows = []
    ok = True
    for n in range(max_n + 1):
        counted = count_family(family, n)
        rows.append((n, counted, expected[n]))
        if counted != expected[n]:
            ok = False
    return SequenceReport(family=family, rows=tuple(rows), ok=ok)
