"""
Merge-only disjoint-set forest over vertex ids 0..n-1.

Only activated vertices belong to the structure; union by rank with path
halving keeps finds near-constant.
"""


class DisjointSet:
    """Components of an induced subgraph that only ever grows."""

    __slots__ = ("parent", "rank", "active")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n
        self.active = 0

    def add(self, v: int) -> None:
        self.active |= 1 << v

    def __contains__(self, v: int) -> bool:
        return bool(self.active >> v & 1)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1

    def same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)
