from dataclasses import dataclass

from models.words import Word


@dataclass(frozen=True)
class CentralElement:
    """h^m · section(q): an element of a central extension of a free product of cyclics."""

    m: int
    q: Word

    @property
    def is_identity(self) -> bool:
        return self.m == 0 and self.q.is_identity

    def __str__(self) -> str:
        if self.m == 0:
            return str(self.q)
        head = "h" if self.m == 1 else f"h^{self.m}"
        return head if self.q.is_identity else f"{head} {self.q}"
