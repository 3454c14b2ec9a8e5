"""Buchberger engine producing unique reduced Groebner bases.

Pair selection follows the normal strategy (smallest lcm in the active
order first). Two classical discards keep the pair queue short: coprime
leading monomials, and the chain criterion in the form that requires both
linking pairs to have left the queue already. The final basis is
minimalized, tail-reduced and sorted, so equal ideals always produce
identical output under the same order.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Sequence, Tuple

from .order import MonomialOrder
from .poly import Polynomial

Terms = Dict[Tuple[int, ...], object]
Entry = Tuple[Tuple[int, ...], Terms]  # (leading monomial, monic term dict)


def _nf_dict(work: Terms, basis: Sequence[Entry], field, keyf) -> Terms:
    """Full remainder of `work` modulo monic `basis`; consumes `work`."""
    remainder: Terms = {}
    zero = field.zero
    sub = field.sub
    mul = field.mul
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        for lm, terms in basis:
            if all(a <= b for a, b in zip(lm, m)):
                shift = tuple(b - a for a, b in zip(lm, m))
                for e, ce in terms.items():
                    if e == lm:
                        continue  # the lead cancels against the popped term
                    k = tuple(a + b for a, b in zip(e, shift))
                    s = sub(work.get(k, zero), mul(c, ce))
                    if s == zero:
                        work.pop(k, None)
                    else:
                        work[k] = s
                break
        else:
            remainder[m] = c
    return remainder


def _spoly_dict(f: Entry, g: Entry, field) -> Terms:
    """S-polynomial of two monic entries; the lcm terms cancel by construction."""
    (flm, fterms), (glm, gterms) = f, g
    lcm = tuple(max(a, b) for a, b in zip(flm, glm))
    fs = tuple(l - a for l, a in zip(lcm, flm))
    gs = tuple(l - a for l, a in zip(lcm, glm))
    out: Terms = {}
    zero = field.zero
    add = field.add
    sub = field.sub
    for e, c in fterms.items():
        k = tuple(a + b for a, b in zip(e, fs))
        s = add(out.get(k, zero), c)
        if s == zero:
            out.pop(k, None)
        else:
            out[k] = s
    for e, c in gterms.items():
        k = tuple(a + b for a, b in zip(e, gs))
        s = sub(out.get(k, zero), c)
        if s == zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _buchberger(seeds: List[Terms], field, keyf) -> List[Entry]:
    G: List[Entry] = []

    def append(terms: Terms) -> None:
        lm = max(terms, key=keyf)
        lc = terms[lm]
        if lc != field.one:
            inv = field.inv(lc)
            mul = field.mul
            terms = {e: mul(c, inv) for e, c in terms.items()}
        G.append((lm, terms))

    for terms in seeds:
        append(terms)

    heap: list = []
    pending = set()

    def push_pairs(j: int) -> None:
        lmj = G[j][0]
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(G[i][0], lmj))
            heapq.heappush(heap, (keyf(lcm), i, j))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi = G[i][0]
        lmj = G[j][0]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
        settled = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if all(a <= b for a, b in zip(G[k][0], lcm)):
                p1 = (i, k) if i < k else (k, i)
                p2 = (j, k) if j < k else (k, j)
                if p1 not in pending and p2 not in pending:
                    settled = True
                    break
        if settled:
            continue
        s = _spoly_dict(G[i], G[j], field)
        r = _nf_dict(s, G, field, keyf)
        if r:
            append(r)
            push_pairs(len(G) - 1)
    return G


def _reduce_basis(G: List[Entry], field, keyf) -> List[Entry]:
    kept: List[Entry] = []
    for idx in sorted(range(len(G)), key=lambda i: keyf(G[i][0])):
        lm = G[idx][0]
        if any(all(a <= b for a, b in zip(klm, lm)) for klm, _ in kept):
            continue
        kept.append(G[idx])
    out: List[Entry] = []
    for i, (lm, terms) in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        red = _nf_dict(dict(terms), others, field, keyf)
        out.append((lm, red))
    out.sort(key=lambda entry: keyf(entry[0]))
    return out


def groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder) -> Tuple[Polynomial, ...]:
    """Reduced Groebner basis of the ideal generated by `gens`."""
    polys = [g for g in gens if g.terms]
    if not polys:
        return ()
    field = polys[0].field
    nvars = polys[0].nvars
    for g in polys:
        if g.field != field or g.nvars != nvars:
            raise ValueError("generators live in different rings")
    keyf = order.key
    G = _buchberger([dict(g.terms) for g in polys], field, keyf)
    reduced = _reduce_basis(G, field, keyf)
    return tuple(Polynomial(field, nvars, terms) for _, terms in reduced)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f under multivariate division by `basis`.

    Against a Groebner basis the remainder is canonical and vanishes exactly
    for ideal members; against an arbitrary family only divisibility of the
    result is guaranteed.
    """
    entries: List[Entry] = []
    for g in basis:
        if not g.terms:
            continue
        if g.field != f.field or g.nvars != f.nvars:
            raise ValueError("basis element lives in a different ring")
        monic = g.monic(order)
        entries.append((max(monic.terms, key=order.key), monic.terms))
    red = _nf_dict(dict(f.terms), entries, f.field, order.key)
    return Polynomial(f.field, f.nvars, red)


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    f._check_ring(g)
    fm = f.monic(order)
    gm = g.monic(order)
    out = _spoly_dict(
        (max(fm.terms, key=order.key), fm.terms),
        (max(gm.terms, key=order.key), gm.terms),
        f.field,
    )
    return Polynomial(f.field, f.nvars, out)
