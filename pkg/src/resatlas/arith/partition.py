from __future__ import annotations

from typing import Iterable


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accepts '3+2+1', '5=3+2' or '2+1+...+1' is not supported (explicit parts only)."""
        if "=" in text:
            text = text.split("=", 1)[1]
        return cls(int(p) for p in text.replace(" ", "").split("+") if p)

    @classmethod
    def from_dual_counts(cls, counts: Iterable[int]) -> "Partition":
        """Partition whose dual has the given (non-increasing) column lengths."""
        return cls(counts).dual()

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def dual(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(sum(1 for p in self.parts if p > k) for k in range(self.parts[0]))

    def multiplicities(self) -> list[tuple[int, int]]:
        """[(c_1, a_1), (c_2, a_2), ...] with c_1 > c_2 > ... and a_k = count of c_k."""
        out: list[tuple[int, int]] = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({str(self)!r})"
