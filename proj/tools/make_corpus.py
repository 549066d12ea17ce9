#!/usr/bin/env python3
"""Writes the group corpus used by the tests and the corpus runner.

corpus/soluble/    every group of order <= 24 as a Cayley table (found by
                   searching cyclic extensions of abelian groups plus direct
                   products, then deduplicated up to isomorphism and checked
                   against the known counts), dihedral and dicyclic groups
                   of order <= 100, and Sym3, Sym4, Alt4 by generators.
corpus/nonsoluble/ Alt5, Sym5, Alt5 x C2, Alt5 wr C2 by generators.
"""

import argparse
import itertools
import math
import pathlib
import sys

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5,
                19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15}
MAX_ORDER = 24


class Group:
    """Finite group as a Cayley table on 0..n-1 with identity 0."""

    def __init__(self, table, name):
        self.table = table
        self.name = name
        self.n = len(table)

    def mul(self, a, b):
        return self.table[a][b]


def from_elements(elements, mul, name):
    """Cayley table from a list of hashable elements (identity first)."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return Group(table, name)


def closure(gens, mul, identity):
    seen = {identity}
    order = [identity]
    for x in order:
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def perm_group(degree, gens, name):
    def mul(p, q):
        return tuple(q[p[i]] for i in range(degree))
    identity = tuple(range(degree))
    return from_elements(closure(gens, mul, identity), mul, name)


def is_group(g):
    n = g.n
    t = g.table
    for a in range(n):
        if t[0][a] != a or t[a][0] != a:
            return False
        if len(set(t[a])) != n or len({t[b][a] for b in range(n)}) != n:
            return False
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[a][t[b][c]]:
                    return False
    return True


def direct_product(g, h):
    elements = [(a, b) for a in range(g.n) for b in range(h.n)]
    return from_elements(elements, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
                         f"{g.name} x {h.name}")


def cyclic_extensions(order):
    """Groups N.C_k with N = Z_m1 x Z_m2 abelian, x^-1 v x = M v, x^k = c.

    Elements are (v, j) meaning v x^j; (v, j)(w, l) = (v + M^-j... ) is
    avoided by writing x^j w = (M^j w) x^j.
    """
    found = []
    for m1 in range(1, order + 1):
        for m2 in range(1, order // m1 + 1):
            if m2 > 1 and m1 > 1 and m1 % m2 != 0 and m2 % m1 != 0:
                continue
            if order % (m1 * m2) != 0:
                continue
            k = order // (m1 * m2)
            mods = (m1, m2)
            found.extend(_extensions(mods, k))
    return found


def _extensions(mods, k):
    m1, m2 = mods
    vectors = [(a, b) for a in range(m1) for b in range(m2)]

    def add(v, w):
        return ((v[0] + w[0]) % m1, (v[1] + w[1]) % m2)

    def scale(v, s):
        return ((v[0] * s) % m1, (v[1] * s) % m2)

    def order_of(v):
        return math.lcm(m1 // math.gcd(v[0], m1), m2 // math.gcd(v[1], m2))

    # Endomorphisms send the generators e1, e2 to images of dividing order.
    e1_images = [v for v in vectors if m1 % order_of(v) == 0]
    e2_images = [v for v in vectors if m2 % order_of(v) == 0]
    results = []
    for i1 in e1_images:
        for i2 in e2_images:
            def apply(v, i1=i1, i2=i2):
                return add(scale(i1, v[0]), scale(i2, v[1]))
            images = {apply(v) for v in vectors}
            if len(images) != len(vectors):
                continue
            powers = [dict((v, v) for v in vectors)]
            for _ in range(k):
                powers.append({v: apply(powers[-1][v]) for v in vectors})
            if any(powers[k][v] != v for v in vectors):
                continue
            for c in vectors:
                if apply(c) != c:
                    continue
                if k == 1 and c != (0, 0):
                    continue

                def mul(x, y, powers=powers, c=c):
                    (v, j), (w, l) = x, y
                    u = add(v, powers[j][w])
                    s = j + l
                    if s >= k:
                        u = add(u, c)
                        s -= k
                    return (u, s)
                elements = [(v, j) for j in range(k) for v in vectors]
                name = f"Z{m1}xZ{m2}.C{k}[{i1},{i2};{c}]"
                g = from_elements(elements, mul, name)
                if is_group(g):
                    results.append(g)
    return results


def named_groups():
    """Groups that are not cyclic extensions of abelian groups."""
    s4 = perm_group(4, [(1, 0, 2, 3), (1, 2, 3, 0)], "Sym4")

    def mat_mul(a, b, p=3):
        return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(2)) % p for j in range(2))
                     for i in range(2))
    ident = ((1, 0), (0, 1))
    sl23 = from_elements(closure([((1, 1), (0, 1)), ((1, 0), (1, 1))], mat_mul, ident),
                         mat_mul, "SL(2,3)")
    return [s4, sl23]


# --- isomorphism -----------------------------------------------------------

def element_orders(g):
    orders = []
    for a in range(g.n):
        x, k = a, 1
        while x != 0:
            x = g.mul(x, a)
            k += 1
        orders.append(k)
    return orders


def invariant(g):
    orders = element_orders(g)
    center = sum(1 for a in range(g.n) if all(g.mul(a, b) == g.mul(b, a) for b in range(g.n)))
    commutators = {g.mul(g.mul(a, b), inverse(g, g.mul(b, a))) for a in range(g.n)
                   for b in range(g.n)}
    derived = len(closure_ranks(g, list(commutators)))
    squares = len({g.mul(a, a) for a in range(g.n)})
    return (g.n, tuple(sorted(orders)), center, derived, squares)


def inverse(g, a):
    return next(b for b in range(g.n) if g.mul(a, b) == 0)


def closure_ranks(g, gens):
    seen = {0}
    queue = [0]
    for x in queue:
        for s in gens:
            y = g.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def generating_set(g):
    gens = []
    span = {0}
    orders = element_orders(g)
    # Prefer high-order generators: fewer of them.
    for a in sorted(range(g.n), key=lambda x: -orders[x]):
        if a in span:
            continue
        gens.append(a)
        span = closure_ranks(g, gens)
        if len(span) == g.n:
            break
    return gens


def isomorphic(g, h):
    if g.n != h.n:
        return False
    gens = generating_set(g)
    og, oh = element_orders(g), element_orders(h)
    candidates = [[b for b in range(h.n) if oh[b] == og[a]] for a in gens]
    # Express every element of g as a word: parent[x] = (y, generator index).
    parent = {0: None}
    queue = [0]
    for x in queue:
        for i, s in enumerate(gens):
            y = g.mul(x, s)
            if y not in parent:
                parent[y] = (x, i)
                queue.append(y)
    for images in itertools.product(*candidates):
        phi = {0: 0}
        for x in queue[1:]:
            y, i = parent[x]
            phi[x] = h.mul(phi[y], images[i])
        if len(set(phi.values())) != g.n:
            continue
        if all(phi[g.mul(a, b)] == h.mul(phi[a], phi[b]) for a in range(g.n) for b in range(g.n)):
            return True
    return False


def classify(groups):
    classes = []
    buckets = {}
    for g in groups:
        key = invariant(g)
        bucket = buckets.setdefault(key, [])
        if any(isomorphic(g, rep) for rep in bucket):
            continue
        bucket.append(g)
        classes.append((key, g))
    classes.sort(key=lambda kg: kg[0])
    return [g for _, g in classes]


def is_soluble(g):
    current = set(range(g.n))
    while len(current) > 1:
        elems = list(current)
        comm = {g.mul(g.mul(a, b), inverse(g, g.mul(b, a))) for a in elems for b in elems}
        nxt = closure_ranks(g, list(comm))
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


# --- families ------------------------------------------------------------------

def dihedral(n):
    # a^i x^j, x a x = a^-1
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mul(u, v):
        (i, j), (k, l) = u, v
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)
    return from_elements(elements, mul, f"D{2 * n}")


def dicyclic(n):
    m = 2 * n
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(u, v):
        (i, j), (k, l) = u, v
        if j == 0:
            return ((i + k) % m, l)
        e = (i - k) % m
        if l == 0:
            return (e, 1)
        return ((e + n) % m, 0)
    return from_elements(elements, mul, f"Dic{4 * n}")


def write_cayley(path, g, ident, meta):
    lines = [f"# id: {ident}"]
    lines += [f"# {k}: {v}" for k, v in meta.items()]
    lines.append(f"cayley {g.n}")
    lines += [" ".join(str(x + 1) for x in row) for row in g.table]
    path.write_text("\n".join(lines) + "\n")


def write_generators(path, ident, degree, gens, meta):
    lines = [f"# id: {ident}"]
    lines += [f"# {k}: {v}" for k, v in meta.items()]
    lines.append(f"degree {degree}")
    lines += gens
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", type=pathlib.Path, help="corpus root directory")
    args = parser.parse_args()
    soluble = args.out / "soluble"
    nonsoluble = args.out / "nonsoluble"
    soluble.mkdir(parents=True, exist_ok=True)
    nonsoluble.mkdir(parents=True, exist_ok=True)

    pool = {n: [] for n in range(1, MAX_ORDER + 1)}
    for n in range(1, MAX_ORDER + 1):
        pool[n].extend(cyclic_extensions(n))
    for g in named_groups():
        pool[g.n].append(g)
    for n in range(1, MAX_ORDER + 1):
        base = classify(pool[n])
        pool[n] = base
        for a in range(2, n):
            if n % a == 0 and 2 <= n // a <= a:
                for g in pool[a]:
                    for h in pool[n // a]:
                        pool[n].append(direct_product(g, h))
        pool[n] = classify(pool[n])

    total = 0
    for n in range(1, MAX_ORDER + 1):
        groups = pool[n]
        if len(groups) != KNOWN_COUNTS[n]:
            sys.exit(f"order {n}: found {len(groups)} groups, expected {KNOWN_COUNTS[n]}")
        for i, g in enumerate(groups, 1):
            assert is_soluble(g), f"order {n} group {i} is not soluble"
            ident = f"order{n:02d}_{i:02d}"
            write_cayley(soluble / f"{ident}.grp", g, ident,
                         {"order": n, "construction": g.name})
            total += 1

    for n in range(3, 51):
        ident = f"dihedral{2 * n:03d}"
        write_cayley(soluble / f"{ident}.grp", dihedral(n), ident,
                     {"order": 2 * n, "construction": f"D{2 * n}"})
    for n in range(2, 26):
        ident = f"dicyclic{4 * n:03d}"
        write_cayley(soluble / f"{ident}.grp", dicyclic(n), ident,
                     {"order": 4 * n, "construction": f"Dic{4 * n}"})

    write_generators(soluble / "sym3.grp", "sym3", 3, ["(1 2)", "(1 2 3)"], {"order": 6})
    write_generators(soluble / "sym4.grp", "sym4", 4, ["(1 2)", "(1 2 3 4)"], {"order": 24})
    write_generators(soluble / "alt4.grp", "alt4", 4, ["(1 2 3)", "(2 3 4)"], {"order": 12})

    write_generators(nonsoluble / "alt5.grp", "alt5", 5, ["(1 2 3 4 5)", "(1 2 3)"],
                     {"order": 60})
    write_generators(nonsoluble / "sym5.grp", "sym5", 5, ["(1 2)", "(1 2 3 4 5)"],
                     {"order": 120})
    write_generators(nonsoluble / "alt5xc2.grp", "alt5xc2", 7,
                     ["(1 2 3 4 5)", "(1 2 3)", "(6 7)"], {"order": 120})
    write_generators(nonsoluble / "alt5wrc2.grp", "alt5wrc2", 10,
                     ["(1 2 3 4 5)", "(1 2 3)", "(1 6)(2 7)(3 8)(4 9)(5 10)"],
                     {"order": 7200})
    print(f"wrote {total} small groups plus families to {args.out}")


if __name__ == "__main__":
    main()
