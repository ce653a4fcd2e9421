"""The dual product, the pairing isomorphism, brackets, and the operad.

star(P, Q) realizes the coproduct-dual product on plane posets by
enumerating cross-relation extensions of the disjoint union: every
pair (x in P, y in Q) receives exactly one of {x below y in order one,
x before y in order two, y before x in order two}, closures validated.
The operad on indexed WN posets substitutes decorated blocks for the
vertices of a pattern and evaluates the pattern through the two
products; a cached word expansion gives an independent second route.
"""

from __future__ import annotations

from .core import (
    DoublePoset,
    EmptyListError,
    LabelError,
    NotHConnectedError,
    NotPlaneError,
    NotWNError,
    RangeError,
    SizeMismatchError,
    canonical_form,
    canonical_key,
    induced_subposet,
    is_connected,
    is_plane,
    is_wn,
    _add_closed_edge,
    _bits,
    _canonical_order_map,
)
from .enumeration import PosetFamily, enumerate_family
from .hopf import LinComb
from .pairing import pictures_count
from .products import compose_many, factor_blocks, _compose_raw


class IndexedWNPoset:
    """A WN poset whose vertices carry distinct integer decorations.

    base is stored canonical; labels[i] decorates canonical vertex
    i+1.  Plane posets are rigid, so (base, labels) is a complete
    isomorphism invariant of the decorated object.
    """

    __slots__ = ("base", "labels", "_hash")

    def __init__(self, base, labels, _checked=False):
        labels = tuple(labels)
        if not _checked:
            if len(labels) != base.n or len(set(labels)) != base.n:
                raise LabelError(
                    f"need {base.n} distinct labels, got {labels!r}"
                )
            base, pos = _canonical_order_map(base)
            moved = [0] * base.n
            for old, lab in enumerate(labels):
                moved[pos[old]] = lab
            labels = tuple(moved)
            if not is_wn(base):
                raise NotWNError("indexed posets must have a WN base")
        self.base = base
        self.labels = labels
        self._hash = hash((base, labels))

    def __eq__(self, other):
        if not isinstance(other, IndexedWNPoset):
            return NotImplemented
        return self.base == other.base and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.base.identity_key(), self.labels)

    @property
    def n(self):
        return self.base.n

    def __repr__(self):
        return f"<IndexedWNPoset {self.base!r} labels={self.labels}>"


def indexed_poset(p, labels):
    """Decorate a poset (any labeling) and canonicalize the pair."""
    return IndexedWNPoset(p, labels)


def shift_labels(ip, k):
    return IndexedWNPoset(
        ip.base, tuple(lab + k for lab in ip.labels), _checked=True
    )


def b_mn(m, n):
    """The two stacked antichains: the (m, n) bracket's representing poset.

    m lower vertices chained in order two, n upper vertices likewise,
    every lower below every upper in order one; labels 1..m then
    m+1..m+n following the chains.
    """
    if m < 1 or n < 1:
        raise RangeError("b_mn needs m, n >= 1")
    total = m + n
    upper_mask = ((1 << n) - 1) << m
    up1 = [upper_mask] * m + [0] * n
    up2 = []
    for i in range(m):
        up2.append(((1 << m) - 1) ^ ((1 << (i + 1)) - 1))
    for j in range(n):
        up2.append((upper_mask ^ ((1 << (m + j + 1)) - 1)) & upper_mask)
    base = DoublePoset._from_rows(total, up1, up2)
    canon, _ = canonical_form(base)
    assert canon == base, "stacked antichains should be canonical as built"
    return IndexedWNPoset(base, tuple(range(1, total + 1)), _checked=True)


def _cross_extensions(p, q):
    """Yield closed (rows1, rows2) for every valid cross assignment.

    Parts keep their own relations; each cross pair ends related
    exactly once, with order-one allowed only from the p side to the
    q side.  Closure is maintained incrementally and branches that
    relate any pair in both orders are cut.
    """
    raw = _compose_raw(p, q, "g")
    n = raw.n
    base1 = [raw.up1[i] for i in range(n)]
    base2 = [p.up2[i] for i in range(p.n)] + [
        raw.up2[i] for i in range(p.n, n)
    ]
    from .core import _down_rows

    pairs = [(x, p.n + y) for x in range(p.n) for y in range(q.n)]

    def clash(r1, d1, r2, d2):
        for i in range(n):
            if (r1[i] | d1[i]) & (r2[i] | d2[i]):
                return True
        return False

    def gen(idx, r1, d1, r2, d2):
        if idx == len(pairs):
            yield tuple(r1), tuple(r2)
            return
        x, y = pairs[idx]
        if (r1[x] >> y & 1) or (r2[x] >> y & 1) or (r2[y] >> x & 1):
            yield from gen(idx + 1, r1, d1, r2, d2)
            return
        for which, a, b in ((1, x, y), (2, x, y), (2, y, x)):
            nr1, nd1, nr2, nd2 = r1.copy(), d1.copy(), r2.copy(), d2.copy()
            rows, dns = (nr1, nd1) if which == 1 else (nr2, nd2)
            if not _add_closed_edge(rows, dns, a, b):
                continue
            if clash(nr1, nd1, nr2, nd2):
                continue
            yield from gen(idx + 1, nr1, nd1, nr2, nd2)

    d1 = _down_rows(n, base1)
    d2 = _down_rows(n, base2)
    yield from gen(0, base1, d1, base2, d2)


def star(p, q):
    """Sum over plane posets refining the disjoint union of p and q.

    The coefficient of an isoclass R equals the number of up-closed
    subsets I of R with (R minus I, I) isomorphic to (p, q); plane
    rigidity makes labeled-extension counting equal that ideal count.
    """
    if not (is_plane(p) and is_plane(q)):
        raise NotPlaneError("star is defined on plane posets")
    n = p.n + q.n
    acc = {}
    for rows1, rows2 in _cross_extensions(p, q):
        canon, _ = canonical_form(DoublePoset._from_rows(n, list(rows1), list(rows2)))
        acc[canon] = acc.get(canon, 0) + 1
    return LinComb(acc)


def _star_indexed(a, b, wn_only=True):
    """Decorated star: dict IndexedWNPoset -> int multiplicity."""
    pa, pb = a.base, b.base
    labels = a.labels + b.labels
    n = pa.n + pb.n
    acc = {}
    for rows1, rows2 in _cross_extensions(pa, pb):
        poset = DoublePoset._from_rows(n, list(rows1), list(rows2))
        if wn_only and not is_wn(poset):
            continue
        canon, pos = _canonical_order_map(poset)
        moved = [0] * n
        for old, lab in enumerate(labels):
            moved[pos[old]] = lab
        ip = IndexedWNPoset(canon, tuple(moved), _checked=True)
        acc[ip] = acc.get(ip, 0) + 1
    return acc


def _indexed_g(a, b):
    """Decorated composition in the second order."""
    raw = _compose_raw(a.base, b.base, "g")
    labels = a.labels + b.labels
    canon, pos = _canonical_order_map(raw)
    moved = [0] * raw.n
    for old, lab in enumerate(labels):
        moved[pos[old]] = lab
    return IndexedWNPoset(canon, tuple(moved), _checked=True)


def phi(p):
    """Pairing-weighted expansion over the WN basis of the same degree."""
    if not is_wn(p):
        raise NotWNError("phi is defined on WN posets")
    p = canonical_form(p)[0]
    acc = {}
    for q in enumerate_family(PosetFamily.WNP, p.n):
        c = pictures_count(p, q)
        if c:
            acc[q] = c
    return LinComb(acc)


def binfty_bracket(left, right):
    """Bracket of two lists of h-connected WN posets.

    Computes the star of the two stacked lists and keeps the terms
    lying in the h-connected WN span.
    """
    left, right = tuple(left), tuple(right)
    if not left or not right:
        raise EmptyListError("bracket needs nonempty argument lists")
    for x in left + right:
        if not is_wn(x):
            raise NotWNError(f"bracket arguments must be WN: {x!r}")
        if not is_connected(x, 1):
            raise NotHConnectedError(
                f"bracket arguments must be connected in order one: {x!r}"
            )
    s = star(compose_many(left, "g"), compose_many(right, "g"))
    return s.filter_keys(lambda t: is_connected(t, 1) and is_wn(t))


def count_q_families(pattern, parts, host):
    """Number of ways host splits into blocks shaped like parts along pattern.

    Blocks must be complete (interval-closed in both orders); for every
    ordered pattern pair (i, j): i below j in order one iff some cross
    pair is, and i before j in order two iff every cross pair is.
    """
    k = pattern.n
    parts = tuple(parts)
    if len(parts) != k:
        raise SizeMismatchError(f"pattern has {k} vertices, got {len(parts)} parts")
    if sum(q.n for q in parts) != host.n:
        raise SizeMismatchError("part sizes must add up to the host size")
    part_keys = [canonical_key(q) for q in parts]
    n = host.n
    full = (1 << n) - 1

    def complete(mask):
        for z in range(n):
            if mask >> z & 1:
                continue
            if host.dn1[z] & mask and host.up1[z] & mask:
                return False
            if host.dn2[z] & mask and host.up2[z] & mask:
                return False
        return True

    def pair_ok(i, j, bi, bj):
        want_h = pattern.lt1(i + 1, j + 1)
        want_r = pattern.lt2(i + 1, j + 1)
        exists_h = any(host.up1[x] & bj for x in _bits(bi))
        all_r = all(host.up2[x] & bj == bj for x in _bits(bi))
        return exists_h == want_h and all_r == want_r

    import itertools

    count = 0
    blocks = [0] * k

    def dfs(i, remaining):
        nonlocal count
        if i == k:
            count += 1
            return
        size = parts[i].n
        for combo in itertools.combinations(
            [b for b in range(n) if remaining >> b & 1], size
        ):
            mask = 0
            for b in combo:
                mask |= 1 << b
            if not complete(mask):
                continue
            verts = [b + 1 for b in combo]
            if canonical_key(induced_subposet(host, verts)) != part_keys[i]:
                continue
            ok = True
            for j in range(i):
                if not (pair_ok(i, j, mask, blocks[j]) and pair_ok(j, i, blocks[j], mask)):
                    ok = False
                    break
            if not ok:
                continue
            blocks[i] = mask
            dfs(i + 1, remaining ^ mask)
        return

    dfs(0, full)
    return count


def _validate_operad_args(pattern, args):
    k = pattern.base.n
    if sorted(pattern.labels) != list(range(1, k + 1)):
        raise LabelError(f"pattern labels must be 1..{k}, got {pattern.labels!r}")
    args = tuple(args)
    if len(args) != k:
        raise SizeMismatchError(f"pattern needs {k} arguments, got {len(args)}")
    for a in args:
        if sorted(a.labels) != list(range(1, a.base.n + 1)):
            raise LabelError(
                f"argument labels must be 1..{a.base.n}, got {a.labels!r}"
            )
    return args


def _substitute(ip, blocks, memo):
    """Value of the decorated pattern ip on blocks[label] per vertex.

    g-split patterns multiply their parts blockwise.  Otherwise the
    first h-factor L is peeled with Q = L star rest - (other star
    terms), each correction substituted recursively; corrections carry
    strictly more order-two pairs, so the recursion terminates.
    """
    got = memo.get(ip)
    if got is not None:
        return got
    if ip.base.n == 1:
        out = {blocks[ip.labels[0]]: 1}
        memo[ip] = out
        return out
    gblocks = factor_blocks(ip.base, "g")
    if len(gblocks) > 1:
        left = _substitute(_indexed_restrict(ip, gblocks[0]), blocks, memo)
        rest = [v for b in gblocks[1:] for v in b]
        right = _substitute(_indexed_restrict(ip, rest), blocks, memo)
        out = {}
        for ia, ca in left.items():
            for ib, cb in right.items():
                key = _indexed_g(ia, ib)
                out[key] = out.get(key, 0) + ca * cb
    else:
        hblocks = factor_blocks(ip.base, "h")
        assert len(hblocks) > 1, "a nontrivial WN poset splits under some product"
        left_ip = _indexed_restrict(ip, hblocks[0])
        rest = [v for b in hblocks[1:] for v in b]
        right_ip = _indexed_restrict(ip, rest)
        pattern_star = _star_indexed(left_ip, right_ip, wn_only=True)
        assert pattern_star.get(ip) == 1, "poset must appear once in its own star"
        left = _substitute(left_ip, blocks, memo)
        right = _substitute(right_ip, blocks, memo)
        out = {}
        for ia, ca in left.items():
            for ib, cb in right.items():
                for key, c in _star_indexed(ia, ib, wn_only=True).items():
                    out[key] = out.get(key, 0) + ca * cb * c
        for term, mult in pattern_star.items():
            if term == ip:
                continue
            for key, c in _substitute(term, blocks, memo).items():
                out[key] = out.get(key, 0) - mult * c
    out = {key: c for key, c in out.items() if c}
    memo[ip] = out
    return out


def operad_compose(pattern, args):
    """Composition of indexed WN posets by block substitution.

    Pattern vertex labeled i inflates to args[i-1] with labels shifted
    past the earlier arguments, and the pattern is evaluated on those
    blocks through the two products.  Peeling h-factors through star
    subtracts every other star term after its own substitution, so the
    signs of nested corrections cancel all multiplicities above one.
    """
    args = _validate_operad_args(pattern, args)
    k = pattern.base.n
    offsets = []
    acc = 0
    for a in args:
        offsets.append(acc)
        acc += a.base.n
    blocks = {i + 1: shift_labels(args[i], offsets[i]) for i in range(k)}
    return LinComb(_substitute(pattern, blocks, {}))


# Expansion oracle.  Every indexed WN poset unfolds into a formal
# (star, g)-expression on its decorated singletons: g-split when the
# base splits, otherwise peel the first h-factor L and use
# Q = L star rest - (all other decorated WN star terms); corrections
# carry strictly more order-two pairs, so the recursion terminates.

_EXPANSION_CACHE = {}


def _indexed_restrict(ip, vertices):
    sub = induced_subposet(ip.base, vertices)
    labels = tuple(ip.labels[v - 1] for v in sorted(vertices))
    return IndexedWNPoset(sub, labels)


def _tree_mul(op, e1, e2):
    out = {}
    for t1, c1 in e1.items():
        for t2, c2 in e2.items():
            key = (op, t1, t2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _expansion(ip):
    cached = _EXPANSION_CACHE.get(ip)
    if cached is not None:
        return cached
    base = ip.base
    if base.n == 1:
        result = {("leaf", ip.labels[0]): 1}
        _EXPANSION_CACHE[ip] = result
        return result
    gblocks = factor_blocks(base, "g")
    if len(gblocks) > 1:
        left = _indexed_restrict(ip, gblocks[0])
        rest = [v for b in gblocks[1:] for v in b]
        right = _indexed_restrict(ip, rest)
        result = _tree_mul("g", _expansion(left), _expansion(right))
        _EXPANSION_CACHE[ip] = result
        return result
    hblocks = factor_blocks(base, "h")
    assert len(hblocks) > 1, "a nontrivial WN poset splits under some product"
    left = _indexed_restrict(ip, hblocks[0])
    rest = [v for b in hblocks[1:] for v in b]
    right = _indexed_restrict(ip, rest)
    prod = _star_indexed(left, right, wn_only=True)
    assert prod.get(ip) == 1, "poset must appear once in its own star"
    result = _tree_mul("star", _expansion(left), _expansion(right))
    for term, mult in prod.items():
        if term == ip:
            continue
        sub = _expansion(term)
        for t, c in sub.items():
            result[t] = result.get(t, 0) - mult * c
    result = {t: c for t, c in result.items() if c}
    _EXPANSION_CACHE[ip] = result
    return result


def _eval_tree(tree, leaf_map, memo):
    got = memo.get(tree)
    if got is not None:
        return got
    if tree[0] == "leaf":
        out = {leaf_map[tree[1]]: 1}
    else:
        op, t1, t2 = tree
        a = _eval_tree(t1, leaf_map, memo)
        b = _eval_tree(t2, leaf_map, memo)
        out = {}
        for ia, ca in a.items():
            for ib, cb in b.items():
                if op == "g":
                    ip = _indexed_g(ia, ib)
                    out[ip] = out.get(ip, 0) + ca * cb
                else:
                    for ip, c in _star_indexed(ia, ib, wn_only=True).items():
                        out[ip] = out.get(ip, 0) + ca * cb * c
        out = {k: c for k, c in out.items() if c}
    memo[tree] = out
    return out


def compose_by_expansion(pattern, args):
    """Oracle route for operad_compose via the free two-product expansion."""
    args = _validate_operad_args(pattern, args)
    k = pattern.base.n
    sizes = [a.base.n for a in args]
    offsets = [0] * k
    acc_off = 0
    for i in range(k):
        offsets[i] = acc_off
        acc_off += sizes[i]
    leaf_map = {i + 1: shift_labels(args[i], offsets[i]) for i in range(k)}
    expr = _expansion(pattern)
    memo = {}
    total = {}
    for tree, coeff in expr.items():
        for ip, c in _eval_tree(tree, leaf_map, memo).items():
            total[ip] = total.get(ip, 0) + coeff * c
    return LinComb(total)
