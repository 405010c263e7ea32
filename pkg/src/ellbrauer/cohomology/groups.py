"""Small finite groups given by multiplication tables."""

from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteGroup:
    """Elements are the indices 0..order-1; index 0 is the identity."""

    name: str
    labels: tuple
    table: tuple
    generators: tuple  # (name, index) pairs

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        row = self.table[g]
        return row.index(0)

    def gen(self, name: str) -> int:
        return dict(self.generators)[name]

    def element(self, label: str) -> int:
        return self.labels.index(label)

    def word(self, *names) -> int:
        g = 0
        for n in names:
            g = self.mul(g, self.gen(n))
        return g

    def closure(self, elems) -> tuple:
        H = {0}
        frontier = [0]
        while frontier:
            new = []
            for h in frontier:
                for g in elems:
                    x = self.mul(h, g)
                    if x not in H:
                        H.add(x)
                        new.append(x)
            frontier = new
        return tuple(sorted(H))


def _from_permutations(name, gens):
    """Group generated by permutations (tuples), labelled by shortest words."""
    n = len(gens[0][1])
    ident = tuple(range(n))

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(n))

    elems = [ident]
    labels = ["1"]
    frontier = [(ident, "")]
    seen = {ident}
    while frontier:
        new = []
        for perm, word in frontier:
            for gname, g in gens:
                x = compose(perm, g)
                if x not in seen:
                    seen.add(x)
                    w = word + ("*" if word else "") + gname
                    elems.append(x)
                    labels.append(w)
                    new.append((x, w))
        frontier = new
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(index[compose(p, q)] for q in elems) for p in elems)
    gen_idx = tuple((gname, index[g]) for gname, g in gens)
    return FiniteGroup(name, tuple(labels), table, gen_idx)


def symmetric_group_3() -> FiniteGroup:
    """S3 with sigma of order 3 and tau of order 2."""
    return _from_permutations("S3", [("sigma", (1, 2, 0)), ("tau", (1, 0, 2))])


def cyclic_group(n: int) -> FiniteGroup:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(n))
    return FiniteGroup(f"C{n}", labels, table, (("g", 1),) if n > 1 else ())


def subgroup(G: FiniteGroup, gens: dict, name: str):
    """Subgroup generated by the given elements of G.

    Returns (H, embedding) where embedding[i] is the index in G of the i-th
    element of H.
    """
    elems = G.closure(list(gens.values()))
    # order elements so that the identity stays first
    elems = sorted(elems)
    pos = {g: i for i, g in enumerate(elems)}
    table = tuple(tuple(pos[G.mul(a, b)] for b in elems) for a in elems)
    labels = tuple(G.labels[g] for g in elems)
    H = FiniteGroup(name, labels, table, tuple((k, pos[v]) for k, v in gens.items()))
    return H, tuple(elems)


def right_cosets(G: FiniteGroup, H_elems) -> list:
    """Representatives g_c of the right cosets H g_c (first rep is the identity)."""
    reps = []
    covered = set()
    for g in range(G.order):
        if g in covered:
            continue
        reps.append(g)
        covered |= {G.mul(h, g) for h in H_elems}
    return reps
