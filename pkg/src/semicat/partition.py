"""Partitions of ``range(n)`` as canonical class-id tuples, plus union-find."""


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        """Merge the classes of x and y; False if they were already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def labels(self):
        return canonical([self.find(x) for x in range(len(self.parent))])


def canonical(keys):
    """Relabel arbitrary hashable keys to 0, 1, ... in order of first appearance.

    Class ids therefore follow the least element of each class.
    """
    seen = {}
    out = []
    for k in keys:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


def meet(*labelings):
    return canonical(zip(*labelings))


def join(a, b):
    uf = UnionFind(len(a))
    for labels in (a, b):
        first = {}
        for x, c in enumerate(labels):
            if c in first:
                uf.union(first[c], x)
            else:
                first[c] = x
    return uf.labels()


def refines(a, b):
    """True iff every class of ``a`` lies inside a class of ``b``."""
    image = {}
    for ca, cb in zip(a, b):
        if image.setdefault(ca, cb) != cb:
            return False
    return True


def classes(labels):
    out = [[] for _ in range(max(labels) + 1 if labels else 0)]
    for x, c in enumerate(labels):
        out[c].append(x)
    return out
