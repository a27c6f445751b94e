"""The equation 2^a 3^b + 2^c 3^d = 2^e 3^f + 2^g 3^h and its seven reduced forms.

A tuple is stored as eight exponents in the fixed order a..h.  Normalizing
removes the common factor ``2**min(a,c,e,g) * 3**min(b,d,f,h)``; a normalized
tuple that holds always has at least two zero exponents in each family, and
``classify`` maps it to one of seven case equations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Union

Term = tuple[int, int]  # (exponent of 2, exponent of 3)
# template slot: the constant 0 or the name of a free variable
Slot = Union[int, str]


class EquationError(ValueError):
    pass


class ExponentTuple(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    h: int

    @classmethod
    def parse(cls, text: str) -> "ExponentTuple":
        parts = text.split(",")
        if len(parts) != 8 or not all(p.isdigit() for p in parts):
            raise EquationError(f"expected eight comma-separated naturals, got {text!r}")
        return cls(*map(int, parts))

    @classmethod
    def from_terms(cls, left: tuple[Term, Term], right: tuple[Term, Term]) -> "ExponentTuple":
        (a, b), (c, d) = left
        (e, f), (g, h) = right
        return cls(a, b, c, d, e, f, g, h)

    def format(self) -> str:
        return ",".join(map(str, self))

    @property
    def left(self) -> tuple[Term, Term]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def right(self) -> tuple[Term, Term]:
        return (self.e, self.f), (self.g, self.h)


def _term_value(t: Term) -> int:
    return 2 ** t[0] * 3 ** t[1]


def evaluate(t: ExponentTuple) -> tuple[int, int]:
    return (
        sum(_term_value(x) for x in t.left),
        sum(_term_value(x) for x in t.right),
    )


def holds(t: ExponentTuple) -> bool:
    lhs, rhs = evaluate(t)
    return lhs == rhs


def normalize(t: ExponentTuple) -> ExponentTuple:
    m2 = min(t.a, t.c, t.e, t.g)
    m3 = min(t.b, t.d, t.f, t.h)
    return ExponentTuple(*(x - (m3 if i % 2 else m2) for i, x in enumerate(t)))


def is_normalized(t: ExponentTuple) -> bool:
    return min(t.a, t.c, t.e, t.g) == 0 and min(t.b, t.d, t.f, t.h) == 0


def zero_pattern(t: ExponentTuple) -> tuple[int, int]:
    """Number of zero exponents among (a, c, e, g) and among (b, d, f, h)."""
    if not is_normalized(t):
        raise EquationError(f"tuple {t.format()} is not normalized")
    return (
        sum(x == 0 for x in (t.a, t.c, t.e, t.g)),
        sum(x == 0 for x in (t.b, t.d, t.f, t.h)),
    )


def canonical_form(t: ExponentTuple) -> ExponentTuple:
    """Sort terms within each side, then order the sides."""
    left = tuple(sorted(t.left))
    right = tuple(sorted(t.right))
    if right < left:
        left, right = right, left
    return ExponentTuple.from_terms(left, right)


def symmetric_images(t: ExponentTuple) -> set[ExponentTuple]:
    """All tuples reachable by swapping terms within a side and swapping sides."""
    out = set()
    for l_swap, r_swap, s_swap in product((False, True), repeat=3):
        left = t.left[::-1] if l_swap else t.left
        right = t.right[::-1] if r_swap else t.right
        if s_swap:
            left, right = right, left
        out.add(ExponentTuple.from_terms(left, right))
    return out


class CaseId(enum.Enum):
    """The seven reduced equations, in the order they are usually listed.

    Each value is (label, variables, left template, right template); a
    template term is a pair of slots for the exponents of 2 and 3.
    """

    CASE_1PLUS1 = ("1plus1", "efgh", ((0, 0), (0, 0)), (("e", "f"), ("g", "h")))
    CASE_1_3D = ("1_3d", "degh", ((0, 0), (0, "d")), (("e", 0), ("g", "h")))
    CASE_3B_3D = ("3b3d", "bdeg", ((0, "b"), (0, "d")), (("e", 0), ("g", 0)))
    CASE_1_2C = ("1_2c", "cfgh", ((0, 0), ("c", 0)), ((0, "f"), ("g", "h")))
    CASE_IDENTITY = ("identity", "cdgh", ((0, 0), ("c", "d")), ((0, 0), ("g", "h")))
    CASE_3B_2C_MIXED = ("3b2c_mixed", "bcgh", ((0, "b"), ("c", 0)), ((0, 0), ("g", "h")))
    CASE_3B_2C_SPLIT = ("3b2c_split", "bcfg", ((0, "b"), ("c", 0)), ((0, "f"), ("g", 0)))

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.value[1])

    @property
    def arity(self) -> int:
        return len(self.value[1])

    @property
    def template(self) -> tuple[Slot, ...]:
        (l1, l2), (r1, r2) = self.value[2], self.value[3]
        return (*l1, *l2, *r1, *r2)

    @property
    def display(self) -> str:
        def term(slot2: Slot, slot3: Slot) -> str:
            parts = [f"2^{slot2}" if slot2 else "", f"3^{slot3}" if slot3 else ""]
            return "".join(parts) or "1"

        s = self.template
        return (
            f"{term(s[0], s[1])} + {term(s[2], s[3])} = "
            f"{term(s[4], s[5])} + {term(s[6], s[7])}"
        )

    @classmethod
    def from_label(cls, label: str) -> "CaseId":
        for c in cls:
            if label in (c.label, c.name):
                return c
        raise EquationError(f"unknown case {label!r}")

    def instantiate(self, binding: tuple[int, ...]) -> ExponentTuple:
        if len(binding) != self.arity:
            raise EquationError(f"{self.name} takes {self.arity} values, got {len(binding)}")
        env = dict(zip(self.variables, binding))
        return ExponentTuple(*(env[s] if isinstance(s, str) else s for s in self.template))

    def match(self, t: ExponentTuple) -> tuple[int, ...] | None:
        """Binding that instantiates exactly to ``t`` (no symmetry), if any."""
        env: dict[str, int] = {}
        for slot, x in zip(self.template, t):
            if isinstance(slot, str):
                env[slot] = x
            elif x != slot:
                return None
        return tuple(env[v] for v in self.variables)


@dataclass(frozen=True)
class CaseInstance:
    case_id: CaseId
    binding: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.binding) != self.case_id.arity:
            raise EquationError(f"binding {self.binding} does not fit {self.case_id.name}")

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return _CASE_ORDER[self.case_id], self.binding

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.case_id.variables, self.binding))

    def to_tuple(self) -> ExponentTuple:
        return self.case_id.instantiate(self.binding)

    def holds(self) -> bool:
        return holds(self.to_tuple())


_CASE_ORDER = {c: i for i, c in enumerate(CaseId)}


def case_matches(t: ExponentTuple, case_id: CaseId) -> list[tuple[int, ...]]:
    """Every binding of ``case_id`` that equals ``t`` up to summand permutation."""
    found = {case_id.match(img) for img in symmetric_images(t)}
    found.discard(None)
    return sorted(found)  # type: ignore[arg-type]


def representative(case_id: CaseId, t: ExponentTuple) -> tuple[int, ...] | None:
    matches = case_matches(t, case_id)
    return max(matches) if matches else None


def classify(t: ExponentTuple) -> CaseInstance | None:
    """Map a normalized tuple to its case equation, or ``None`` (no case).

    Cases overlap when free variables are zero; the first case in listing
    order wins, and within it the lexicographically greatest binding.
    """
    count2, count3 = zero_pattern(t)
    if count2 < 2 or count3 < 2:
        return None
    for case_id in CaseId:
        binding = representative(case_id, t)
        if binding is not None:
            return CaseInstance(case_id, binding)
    return None
