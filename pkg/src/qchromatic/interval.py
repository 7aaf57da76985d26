"""Unit interval graphs encoded by reverse Hessenberg functions.

A reverse Hessenberg function is a weakly increasing e: [n] -> {0..n-1}
with e(i) < i.  It carries three equivalent pictures used throughout:

* a Dyck word of West/South steps from (n, n) to (0, 0),
* the graph on [n] with edges { ij : e(j) < i < j },
* two relations on vertices: i "prec" j  iff ij is an edge with i < j,
  and the unit interval order i << j iff i <= e(j).
"""

from __future__ import annotations


class Hessenberg(tuple):
    """A reverse Hessenberg function; index 1-based via at(i)."""

    def __new__(cls, values):
        values = tuple(int(v) for v in values)
        if not values:
            raise ValueError("a Hessenberg function needs length at least 1")
        for i, v in enumerate(values, start=1):
            if not 0 <= v < i:
                raise ValueError(
                    f"value e({i})={v} violates 0 <= e(i) < i")
        for a, b in zip(values, values[1:]):
            if a > b:
                raise ValueError(f"values {values} are not weakly increasing")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return self[i - 1]

    def prec(self, i: int, j: int) -> bool:
        """The edge relation: e(j) < i < j."""
        if not (1 <= i < j <= self.n):
            raise ValueError(f"prec needs 1 <= i < j <= n, got ({i}, {j})")
        return self.at(j) < i

    def interval_less(self, i: int, j: int) -> bool:
        """The unit interval order: i << j iff i <= e(j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"vertices ({i}, {j}) out of range 1..{self.n}")
        return i <= self.at(j)

    def edges(self) -> set[tuple[int, int]]:
        return {(i, j) for j in range(1, self.n + 1)
                for i in range(self.at(j) + 1, j)}

    def predecessors(self, j: int) -> range:
        """The vertices i with i prec j, which form the run e(j)+1 .. j-1."""
        return range(self.at(j) + 1, j)

    def to_dyck(self) -> "DyckWord":
        steps = []
        prev = 0
        for i in range(1, self.n + 1):
            steps.append("S" * (self.at(i) - prev))
            steps.append("W")
            prev = self.at(i)
        steps.append("S" * (self.n - prev))
        return DyckWord("".join(steps))

    def __repr__(self):
        return f"Hessenberg{tuple(self)}"


class DyckWord:
    """A word in W/S with every prefix having at least as many W as S."""

    __slots__ = ("word",)

    def __init__(self, word: str):
        word = str(word).upper()
        bad = set(word) - {"W", "S"}
        if bad:
            raise ValueError(f"Dyck word may only contain W and S, got {sorted(bad)}")
        height = 0
        for ch in word:
            height += 1 if ch == "W" else -1
            if height < 0:
                raise ValueError(f"prefix of {word} has more S than W steps")
        if height != 0:
            raise ValueError(f"word {word} has unequal numbers of W and S steps")
        if not word:
            raise ValueError("empty Dyck word")
        self.word = word

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def runs(self) -> list[tuple[int, int]]:
        """Maximal (W-run, S-run) pairs (a_1, b_1), ..., (a_l, b_l)."""
        out = []
        i = 0
        word = self.word
        while i < len(word):
            a = 0
            while i < len(word) and word[i] == "W":
                a += 1
                i += 1
            b = 0
            while i < len(word) and word[i] == "S":
                b += 1
                i += 1
            out.append((a, b))
        return out

    def __eq__(self, other):
        if isinstance(other, DyckWord):
            return self.word == other.word
        if isinstance(other, str):
            return self.word == other
        return NotImplemented

    def __hash__(self):
        return hash(self.word)

    def __str__(self):
        return self.word

    def __repr__(self):
        return f"DyckWord({self.word})"


def from_dyck(dyck: DyckWord | str) -> Hessenberg:
    """e(i) = number of South steps before the i-th West step."""
    if not isinstance(dyck, DyckWord):
        dyck = DyckWord(dyck)
    values = []
    south = 0
    for ch in dyck.word:
        if ch == "W":
            values.append(south)
        else:
            south += 1
    return Hessenberg(values)


def enumerate_hessenberg(n: int) -> list[Hessenberg]:
    """All Catalan(n) reverse Hessenberg functions on [n], lexicographically."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[Hessenberg] = []

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(Hessenberg(prefix))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, i):
            rec(prefix + [v])

    rec([])
    return out


def e_sum(e: Hessenberg) -> int:
    return sum(e)


def dyck_ascii(e: Hessenberg) -> str:
    """Draw the cells between the Dyck path and the diagonal; cosmetic only.

    Row j (top to bottom for j = n..2) marks the edge cells ij with # so the
    staircase shape of the path is visible.
    """
    rows = []
    for j in range(e.n, 1, -1):
        rows.append("".join("#" if e.at(j) < i else "." for i in range(1, j)))
    return "\n".join(rows)
