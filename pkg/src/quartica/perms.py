"""Permutations of {1..n} and fully enumerated permutation groups."""

from __future__ import annotations

class Permutation:
    """Bijection of {1..n}, stored 0-indexed as an image tuple."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation like ``(1,2,3)(4,5)`` on 1-based points."""
        image = list(range(n))
        s = text.replace(" ", "")
        if not s:
            return cls(image)
        i = 0
        while i < len(s):
            if s[i] != "(":
                raise ValueError(f"bad cycle notation {text!r}")
            j = s.index(")", i)
            pts = [int(tok) for tok in s[i + 1 : j].split(",") if tok]
            for k in pts:
                if not 1 <= k <= n:
                    raise ValueError(f"point {k} outside 1..{n}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                image[a - 1] = b - 1
            i = j + 1
        return cls(image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self * other)(i) = self(other(i))."""
        if other.n != self.n:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(self.image[other.image[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(inv)

    def cycle_type(self):
        """Sorted tuple of cycle lengths (including fixed points)."""
        seen = [False] * self.n
        lengths = []
        for i in range(self.n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.image == self.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        seen = [False] * self.n
        cycles = []
        for i in range(self.n):
            if seen[i] or self.image[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(str(j + 1))
                j = self.image[j]
            cycles.append("(" + ",".join(cyc) + ")")
        return "".join(cycles) if cycles else "id"


class PermGroup:
    """Subgroup of S_n given by generators, with full element enumeration."""

    def __init__(self, generators, n: int | None = None):
        generators = list(generators)
        if n is None:
            if not generators:
                raise ValueError("need n for a trivial group")
            n = generators[0].n
        for g in generators:
            if g.n != n:
                raise ValueError("generators of different degrees")
        self.n = n
        self.generators = tuple(generators)
        self.elements = self._close()

    def _close(self):
        ident = Permutation.identity(self.n)
        seen = {ident.image: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for s in self.generators:
                    h = s * g
                    if h.image not in seen:
                        seen[h.image] = h
                        nxt.append(h)
            frontier = nxt
        return tuple(sorted(seen.values(), key=lambda p: p.image))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm: Permutation):
        return any(perm == g for g in self.elements)

    @classmethod
    def cyclic(cls, cycles: str, n: int) -> "PermGroup":
        return cls([Permutation.from_cycles(cycles, n)], n)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n == 1:
            return cls([], n=1)
        gens = [
            Permutation.from_cycles("(1,2)", n),
            Permutation.from_cycles("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n),
        ]
        return cls(gens, n)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls([], n=n)

    @classmethod
    def parse(cls, text: str, n: int) -> "PermGroup":
        """Parse "S4" or generator cycles separated by ';'."""
        s = text.strip()
        if s.upper() in (f"S{n}", "SN", "SYM"):
            return cls.symmetric(n)
        gens = [Permutation.from_cycles(part, n) for part in s.split(";") if part.strip()]
        return cls(gens, n)

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators) or "id"
        return f"<{gens}> of order {self.order} on {self.n} points"


def symmetric_subgroup_types(n: int = 4):
    """Representative cyclic subgroups of S_4 by generator cycle type, plus S_4."""
    return {
        "transposition": PermGroup.cyclic("(1,2)", n),
        "double_transposition": PermGroup.cyclic("(1,2)(3,4)", n),
        "three_cycle": PermGroup.cyclic("(1,2,3)", n),
        "four_cycle": PermGroup.cyclic("(1,2,3,4)", n),
        "full": PermGroup.symmetric(n),
    }
