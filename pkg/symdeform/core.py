"""
Core data structures for symdeform.

Defines BlockSpec and CanonicalStructure, the description of a direct sum of
canonical summands H_n(λ), K_n and L_n.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from symdeform.errors import InputError, ParseError
from symdeform.exact.scalar import GaussianRational


class BlockKind(str, Enum):
    """Type of a canonical summand."""

    H = "H"
    K = "K"
    L = "L"


@dataclass(frozen=True)
class BlockSpec:
    """One canonical summand. ``lam`` is set for H blocks only."""

    kind: BlockKind
    n: int
    lam: Optional[GaussianRational] = None

    def __post_init__(self):
        kind = self.kind
        if not isinstance(kind, BlockKind):
            try:
                kind = BlockKind(str(kind).upper())
            except ValueError as e:
                raise InputError(f"Unknown block kind {self.kind!r} (expected H, K or L)") from e
            object.__setattr__(self, "kind", kind)
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InputError(f"Block size must be an integer, got {self.n!r}")
        minimum = 0 if kind is BlockKind.L else 1
        if self.n < minimum:
            raise InputError(f"{kind.value} block needs n >= {minimum}, got {self.n}")
        if kind is BlockKind.H:
            if self.lam is None:
                raise InputError("H block needs an eigenvalue lambda")
            object.__setattr__(self, "lam", GaussianRational.coerce(self.lam))
        elif self.lam is not None:
            raise InputError(f"{kind.value} block takes no lambda")

    @classmethod
    def h(cls, n: int, lam: object) -> "BlockSpec":
        return cls(BlockKind.H, n, GaussianRational.coerce(lam))

    @classmethod
    def k(cls, n: int) -> "BlockSpec":
        return cls(BlockKind.K, n)

    @classmethod
    def l(cls, n: int) -> "BlockSpec":
        return cls(BlockKind.L, n)

    @property
    def size(self) -> int:
        """Realized matrix size: n for H/K, 2n+1 for L."""
        return 2 * self.n + 1 if self.kind is BlockKind.L else self.n

    @property
    def label(self) -> str:
        if self.kind is BlockKind.H:
            return f"H({self.n},{self.lam})"
        return f"{self.kind.value}({self.n})"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value, "n": self.n}
        if self.lam is not None:
            data["lambda"] = str(self.lam)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BlockSpec":
        """Build from a structure-file entry ``{"kind", "n", "lambda"?}``."""
        if not isinstance(data, dict):
            raise InputError(f"Block entry must be a mapping, got {type(data).__name__}")
        missing = [k for k in ("kind", "n") if k not in data]
        if missing:
            raise InputError(f"Block entry missing field(s): {', '.join(missing)}")
        lam = data.get("lambda")
        if lam is not None and not isinstance(lam, GaussianRational):
            lam = GaussianRational.parse(str(lam))
        return cls(data["kind"], data["n"], lam)

    def __str__(self) -> str:
        return self.label


_BLOCK_RE = re.compile(r"\s*([HKLhkl])\(\s*([0-9]+)\s*(?:,\s*([^()\s]+)\s*)?\)\s*")


@dataclass(frozen=True)
class CanonicalStructure:
    """Ordered direct sum of canonical summands; order is preserved as given."""

    blocks: Tuple[BlockSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.blocks, tuple):
            object.__setattr__(self, "blocks", tuple(self.blocks))

    @classmethod
    def of(cls, *blocks: BlockSpec) -> "CanonicalStructure":
        return cls(tuple(blocks))

    @property
    def size(self) -> int:
        return sum(b.size for b in self.blocks)

    def offsets(self) -> List[int]:
        """Start index of every block in the assembled matrix."""
        result = []
        start = 0
        for block in self.blocks:
            result.append(start)
            start += block.size
        return result

    @property
    def label(self) -> str:
        return ",".join(b.label for b in self.blocks) if self.blocks else "[]"

    def permuted(self, order: Sequence[int]) -> "CanonicalStructure":
        if sorted(order) != list(range(len(self.blocks))):
            raise InputError(f"{list(order)} is not a permutation of the block indices")
        return CanonicalStructure(tuple(self.blocks[i] for i in order))

    def __add__(self, other: "CanonicalStructure") -> "CanonicalStructure":
        if not isinstance(other, CanonicalStructure):
            return NotImplemented
        return CanonicalStructure(self.blocks + other.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def to_dict(self) -> Dict[str, Any]:
        return {"blocks": [b.to_dict() for b in self.blocks]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CanonicalStructure":
        if not isinstance(data, dict) or "blocks" not in data:
            raise InputError("Structure must be a mapping with a 'blocks' list")
        if not isinstance(data["blocks"], list):
            raise InputError("'blocks' must be a list")
        return cls(tuple(BlockSpec.from_dict(b) for b in data["blocks"]))

    @classmethod
    def from_text(cls, text: str) -> "CanonicalStructure":
        """
        Parse the inline notation, e.g. ``H(2,1/2),K(1),L(0)``.

        ``[]``, ``[...]`` wrappers and the empty string are accepted.

        Raises:
            ParseError: on malformed input, with the character position
        """
        body = text.strip()
        offset = text.find(body) if body else 0
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
            offset += 1
        if not body.strip():
            return cls(())

        blocks: List[BlockSpec] = []
        pos = 0
        while True:
            match = _BLOCK_RE.match(body, pos)
            if not match:
                raise ParseError(
                    f"Expected a block like H(n,lambda), K(n) or L(n) in {text!r}",
                    position=offset + pos,
                )
            kind, n, lam = match.group(1).upper(), int(match.group(2)), match.group(3)
            try:
                if kind == "H":
                    if lam is None:
                        raise InputError("H block needs an eigenvalue lambda")
                    blocks.append(BlockSpec.h(n, GaussianRational.parse(lam)))
                else:
                    parsed = None if lam is None else GaussianRational.parse(lam)
                    blocks.append(BlockSpec(BlockKind(kind), n, parsed))
            except ParseError as e:
                raise ParseError(
                    f"Bad lambda {lam!r} in {text!r}", position=offset + match.start(3)
                ) from e
            except InputError as e:
                raise ParseError(str(e), position=offset + match.start(1)) from e
            pos = match.end()
            if pos == len(body):
                break
            if body[pos] != ",":
                raise ParseError(f"Expected ',' between blocks in {text!r}", position=offset + pos)
            pos += 1
        return cls(tuple(blocks))

    def __str__(self) -> str:
        return self.label
