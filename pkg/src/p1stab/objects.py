"""Objects of D(P^1) as normalized direct sums of shifted indecomposables.

Every object of D(P^1) splits as a sum of shifted line bundles ``O(n)[k]``
and shifted torsion sheaves ``T(x, l)[k]`` (the skyscraper at ``x``
thickened ``l`` times). Literal syntax::

    O(3)[1] + 2*O(-2) + T(x0,2)[-1]

``O`` alone is ``O(0)``; ``0`` is the zero object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from .errors import ParseError


@dataclass(frozen=True)
class LineBundle:
    twist: int
    shift: int = 0

    @property
    def sort_key(self):
        return (self.shift, 0, self.twist, "", 0)

    def __str__(self):
        s = f"O({self.twist})"
        return s + f"[{self.shift}]" if self.shift else s


@dataclass(frozen=True)
class Torsion:
    point: str
    length: int = 1
    shift: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"torsion length must be >= 1, got {self.length}")

    @property
    def sort_key(self):
        return (self.shift, 1, 0, self.point, self.length)

    def __str__(self):
        s = f"T({self.point},{self.length})"
        return s + f"[{self.shift}]" if self.shift else s


Indecomposable = Union[LineBundle, Torsion]


def shifted(ind: Indecomposable, k: int) -> Indecomposable:
    if isinstance(ind, LineBundle):
        return LineBundle(ind.twist, ind.shift + k)
    return Torsion(ind.point, ind.length, ind.shift + k)


@dataclass(frozen=True)
class DecomposedObject:
    """Normalized formal direct sum; build with :meth:`of`, not the constructor."""

    summands: Tuple[Tuple[Indecomposable, int], ...] = ()

    @classmethod
    def of(cls, terms: Iterable) -> "DecomposedObject":
        """Normalize ``(indecomposable, multiplicity)`` pairs or bare indecomposables."""
        counts = {}
        for term in terms:
            if isinstance(term, (LineBundle, Torsion)):
                ind, mult = term, 1
            else:
                ind, mult = term
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            if mult:
                counts[ind] = counts.get(ind, 0) + mult
        items = sorted(counts.items(), key=lambda kv: kv[0].sort_key)
        return cls(tuple(items))

    @property
    def is_zero(self):
        return not self.summands

    def __bool__(self):
        return bool(self.summands)

    def __add__(self, other):
        return DecomposedObject.of(self.summands + other.summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __str__(self):
        return format_object(self)

    def shift(self, k):
        return act_object(self, 0, k)

    def twist(self, m):
        return act_object(self, m, 0)


def act_object(obj: DecomposedObject, twist_by: int, shift_by: int) -> DecomposedObject:
    """Apply ``- (x) O(twist_by)`` then ``[shift_by]``. Torsion ignores the twist."""
    out = []
    for ind, mult in obj.summands:
        if isinstance(ind, LineBundle):
            out.append((LineBundle(ind.twist + twist_by, ind.shift + shift_by), mult))
        else:
            out.append((Torsion(ind.point, ind.length, ind.shift + shift_by), mult))
    return DecomposedObject.of(out)


def format_object(obj: DecomposedObject) -> str:
    if not obj.summands:
        return "0"
    parts = []
    for ind, mult in obj.summands:
        parts.append(f"{mult}*{ind}" if mult > 1 else str(ind))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<label>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()\[\],*+-]))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                if text[pos:].strip() == "":
                    break
                stripped = len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[pos + stripped]!r}", text, pos + stripped)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", self.text, tok[2])
        self.i += 1
        return tok

    def integer(self):
        sign = 1
        if self.peek()[:2] in (("sym", "-"), ("sym", "+")):
            sign = -1 if self.take("sym")[1] == "-" else 1
        return sign * int(self.take("int")[1])

    def parse(self):
        if len(self.tokens) == 1 and self.tokens[0][:2] == ("int", "0"):
            return DecomposedObject()
        terms = [self.term()]
        while self.peek()[:2] == ("sym", "+"):
            self.i += 1
            terms.append(self.term())
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return DecomposedObject.of(terms)

    def term(self):
        mult = 1
        tok = self.peek()
        if tok[0] == "int":
            mult = self.integer()
            if mult < 1:
                raise ParseError("multiplicity must be >= 1", self.text, tok[2])
            self.take("sym", "*")
        return self.atom(), mult

    def shift(self):
        if self.peek()[:2] == ("sym", "["):
            self.i += 1
            k = self.integer()
            self.take("sym", "]")
            return k
        return 0

    def atom(self):
        tok = self.take("label")
        if tok[1] == "O":
            twist = 0
            if self.peek()[:2] == ("sym", "("):
                self.i += 1
                twist = self.integer()
                self.take("sym", ")")
            return LineBundle(twist, self.shift())
        if tok[1] == "T":
            self.take("sym", "(")
            point_tok = self.peek()
            if point_tok[0] not in ("label", "int"):
                raise ParseError("expected point label", self.text, point_tok[2])
            self.i += 1
            self.take("sym", ",")
            len_tok = self.peek()
            length = self.integer()
            if length < 1:
                raise ParseError("torsion length must be >= 1", self.text, len_tok[2])
            self.take("sym", ")")
            return Torsion(point_tok[1], length, self.shift())
        raise ParseError(f"unknown atom {tok[1]!r}", self.text, tok[2])


def parse_object(text: str) -> DecomposedObject:
    """Parse an object literal into a normalized :class:`DecomposedObject`."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty object literal", text, 0)
    return parser.parse()


def line(twist: int, shift: int = 0, mult: int = 1) -> DecomposedObject:
    return DecomposedObject.of([(LineBundle(twist, shift), mult)])


def torsion(point: str = "x", length: int = 1, shift: int = 0, mult: int = 1) -> DecomposedObject:
    return DecomposedObject.of([(Torsion(point, length, shift), mult)])
