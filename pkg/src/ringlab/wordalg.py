"""Free algebras over Z_p modulo pattern ideals.

A pattern ideal is described by three rule kinds: forbidden subwords, gap
patterns (letter a anywhere before letter b, the ideal generated by aRb) and
collapse letters with l*l = l.  Words are plain strings of one-character
letters; the empty word is the identity.

Quantification over the infinite algebra is bounded by the middle-word
length.  A nonzero product is an exact witness, an all-zero scan is a claim
up to the bound.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import ParseError
from .predicates import PropertyVerdict

ZERO = None


@dataclass(frozen=True)
class PatternIdeal:
    alphabet: tuple[str, ...]
    kill_subwords: frozenset[str] = frozenset()
    kill_gaps: frozenset[tuple[str, str]] = frozenset()
    collapse_letters: frozenset[str] = frozenset()
    char: int = 2
    name: str = "P"

    def __post_init__(self):
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        letters = set(self.alphabet)
        if any(len(c) != 1 for c in letters):
            raise ValueError("letters must be single characters")
        used = set("".join(self.kill_subwords)) | {c for g in self.kill_gaps for c in g}
        used |= set(self.collapse_letters)
        if not used <= letters:
            raise ValueError(f"rules mention letters outside the alphabet: {sorted(used - letters)}")
        if any(not w for w in self.kill_subwords):
            raise ValueError("the empty word cannot be killed")
        if self.char < 2 or any(self.char % d == 0 for d in range(2, int(self.char ** 0.5) + 1)):
            raise ValueError(f"characteristic {self.char} is not prime")

    def __str__(self):
        parts = [f"letters {' '.join(self.alphabet)}"]
        if self.kill_subwords:
            parts.append("kill " + " ".join(sorted(self.kill_subwords)))
        parts += [f"gap {a} {b}" for a, b in sorted(self.kill_gaps)]
        if self.collapse_letters:
            parts.append("collapse " + " ".join(sorted(self.collapse_letters)))
        parts.append(f"char {self.char}")
        return "; ".join(parts)


def parse_pattern_ideal(text: str, name: str = "P") -> PatternIdeal:
    """Parse ``letters a b; kill aa; gap a b; collapse x; char 2``.

    Statements are separated by ';' or newlines, '#' starts a comment.
    """
    alphabet, kills, gaps, collapse, char = None, set(), set(), set(), 2
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        col = 1
        for stmt in line.split(";"):
            words = stmt.split()
            here = col + len(stmt) - len(stmt.lstrip())
            col += len(stmt) + 1
            if not words:
                continue
            head, args = words[0], words[1:]
            if head == "letters":
                alphabet = tuple(args)
            elif head == "kill":
                kills.update(args)
            elif head == "gap":
                if len(args) != 2:
                    raise ParseError("gap takes exactly two letters", lineno, here)
                gaps.add((args[0], args[1]))
            elif head == "collapse":
                collapse.update(args)
            elif head == "char":
                if len(args) != 1 or not args[0].isdigit():
                    raise ParseError("char takes one integer", lineno, here)
                char = int(args[0])
            else:
                raise ParseError(f"unknown statement {head!r}", lineno, here)
    if alphabet is None:
        raise ParseError("missing 'letters' statement", 1, 1)
    try:
        return PatternIdeal(alphabet, frozenset(kills), frozenset(gaps), frozenset(collapse), char, name)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


PRESETS = {
    # a R b and a^2 killed
    "free_ab": "letters a b; gap a b; kill aa",
    # ideal generated by YX
    "free_yx": "letters x y; kill yx",
    # X^3, Y^3, XY, YX^2, Y^2X
    "free_cubic": "letters x y; kill xxx yyy xy yxx yyx",
    # XAY and X^2 - X, over Z_p instead of characteristic zero
    "free_gap_collapse": "letters x y z; gap x y; collapse x",
}


def preset(name: str, char: int = 2) -> PatternIdeal:
    return parse_pattern_ideal(PRESETS[name] + f"; char {char}", name)


def _check_letters(w, P):
    bad = set(w) - set(P.alphabet)
    if bad:
        raise ValueError(f"letters {sorted(bad)} are not in the alphabet")


def collapse(w: str, P: PatternIdeal) -> str:
    if not P.collapse_letters:
        return w
    out = []
    for c in w:
        if not (out and out[-1] == c and c in P.collapse_letters):
            out.append(c)
    return "".join(out)


def is_killed(w: str, P: PatternIdeal) -> bool:
    if any(k in w for k in P.kill_subwords):
        return True
    for a, b in P.kill_gaps:
        i = w.find(a)
        if i >= 0 and w.rfind(b) > i:
            return True
    return False


def normal_form(w: str, P: PatternIdeal):
    """Collapsed word, or ZERO (None) when it lies in the ideal."""
    _check_letters(w, P)
    c = collapse(w, P)
    return ZERO if is_killed(c, P) else c


def normal_words(P: PatternIdeal, max_len: int) -> list[str]:
    """All surviving normal words reachable from words of length <= max_len."""
    seen = {""}
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in P.alphabet:
                nf = normal_form(w + c, P)
                if nf is not ZERO and nf not in seen:
                    seen.add(nf)
                    nxt.append(nf)
        frontier = nxt
    return sorted(seen, key=lambda w: (len(w), w))


@dataclass(frozen=True)
class AlgebraElement:
    """Finite Z_p-combination of normal words."""

    ideal: PatternIdeal
    terms: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_dict(cls, P, d):
        acc = {}
        for w, k in d.items():
            nf = normal_form(w, P)
            if nf is ZERO:
                continue
            acc[nf] = (acc.get(nf, 0) + k) % P.char
        return cls(P, tuple(sorted((w, k) for w, k in acc.items() if k)))

    @classmethod
    def word(cls, P, w, coeff=1):
        return cls.from_dict(P, {w: coeff})

    @classmethod
    def scalar(cls, P, k):
        return cls.from_dict(P, {"": k})

    @classmethod
    def zero(cls, P):
        return cls(P)

    def is_zero(self):
        return not self.terms

    def support(self):
        return [w for w, _ in self.terms]

    def _same(self, other):
        if self.ideal != other.ideal:
            raise ValueError("elements belong to different pattern ideals")

    def __add__(self, other):
        self._same(other)
        d = dict(self.terms)
        for w, k in other.terms:
            d[w] = d.get(w, 0) + k
        return AlgebraElement.from_dict(self.ideal, d)

    def __neg__(self):
        return AlgebraElement.from_dict(self.ideal, {w: -k for w, k in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same(other)
        d = {}
        for (u, a), (v, b) in iproduct(self.terms, other.terms):
            d[u + v] = d.get(u + v, 0) + a * b
        return AlgebraElement.from_dict(self.ideal, d)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w, k in self.terms:
            body = w or "1"
            out.append(body if k == 1 else f"{k}{'' if not w else '*'}{w}" if w else str(k))
        return " + ".join(out)


def mul(u: AlgebraElement, v: AlgebraElement, P: PatternIdeal | None = None) -> AlgebraElement:
    if P is not None and u.ideal != P:
        raise ValueError("element does not belong to the given pattern ideal")
    return u * v


_TERM = re.compile(r"^\s*(\d*)\s*\*?\s*([A-Za-z]*)\s*$")


def parse_element(text: str, P: PatternIdeal) -> AlgebraElement:
    """Parse ``x``, ``1``, ``x + 2*yx``, ``0``."""
    acc = AlgebraElement.zero(P)
    for col, chunk in _chunks(text):
        m = _TERM.match(chunk)
        if m is None or not (m.group(1) or m.group(2)):
            raise ParseError(f"cannot read term {chunk.strip()!r}", 1, col)
        k = int(m.group(1)) if m.group(1) else 1
        w = m.group(2)
        try:
            acc = acc + AlgebraElement.word(P, w, k)
        except ValueError as exc:
            raise ParseError(str(exc), 1, col) from None
    return acc


def _chunks(text):
    col = 1
    for piece in text.split("+"):
        yield col, piece
        col += len(piece) + 1


def _as_element(x, P):
    return x if isinstance(x, AlgebraElement) else parse_element(str(x), P)


def check_orthogonality(u, v, P: PatternIdeal, max_middle: int) -> PropertyVerdict:
    """Is u w v = 0 for every word w of length <= max_middle?

    By bilinearity monomial middles suffice.  Middles are enumerated by normal
    form, and a prefix w with u w = 0 is not extended further.
    """
    if max_middle < 0:
        raise ValueError("max_middle must be nonnegative")
    t0 = time.perf_counter()
    u, v = _as_element(u, P), _as_element(v, P)
    checked = 0
    seen = {""}
    frontier = [""]
    witness = None
    for length in range(max_middle + 1):
        nxt = []
        for w in frontier:
            uw = u * AlgebraElement.word(P, w)
            checked += 1
            if uw.is_zero():
                continue
            if not (uw * v).is_zero():
                witness = w
                break
            if length < max_middle:
                for c in P.alphabet:
                    nf = normal_form(w + c, P)
                    if nf is not ZERO and nf not in seen:
                        seen.add(nf)
                        nxt.append(nf)
        if witness is not None:
            break
        frontier = sorted(nxt)
    w = None if witness is None else {"w": witness, "product": str(u * AlgebraElement.word(P, witness) * v)}
    return PropertyVerdict(
        "orthogonal", f"{P.name}: ({u}) * ? * ({v})", witness is None, w,
        time.perf_counter() - t0, bounds={"max_middle": max_middle},
        details={"middles_checked": checked},
    )


def nilpotency_index(w, P: PatternIdeal, power_cap: int):
    """Least k <= power_cap with w^k = 0, or None."""
    x = _as_element(w, P)
    p = x
    for k in range(1, power_cap + 1):
        if p.is_zero():
            return k
        p = p * x
    return None


def nilpotency_of_word(w, P: PatternIdeal, power_cap: int = 8) -> bool:
    if power_cap < 2:
        raise ValueError("power_cap must be at least 2")
    return nilpotency_index(w, P, power_cap) is not None


def is_idempotent(w, P: PatternIdeal) -> bool:
    x = _as_element(w, P)
    return x * x == x


# -- 3x3 matrices over the quotient -----------------------------------------------

def _matrix(rows, P):
    return [[_as_element(x, P) for x in row] for row in rows]


def mat_mul(A, B):
    n = len(A)
    P = A[0][0].ideal
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = AlgebraElement.zero(P)
            for k in range(n):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def _mat_zero(A):
    return all(x.is_zero() for row in A for x in row)


def _mat_str(A):
    return "[" + "; ".join(", ".join(str(x) for x in row) for row in A) + "]"


DEFAULT_A = [["a", "1", "1"], ["0", "a", "0"], ["0", "0", "a"]]
DEFAULT_B = [["0", "b", "b"], ["0", "0", "0"], ["0", "0", "0"]]


def s1_basis(P: PatternIdeal, max_middle: int):
    """Monomial spanning set of {[[x, y, z], [0, x, 0], [0, 0, x]]} up to the bound."""
    words = normal_words(P, max_middle)
    for w in words:
        W = w or "1"
        yield w, "diag", [[W, "0", "0"], ["0", W, "0"], ["0", "0", W]]
        yield w, "e12", [["0", W, "0"], ["0", "0", "0"], ["0", "0", "0"]]
        yield w, "e13", [["0", "0", W], ["0", "0", "0"], ["0", "0", "0"]]


def embed_in_S1(P: PatternIdeal, A=None, B=None, max_middle: int = 4) -> dict:
    """Check A S B = 0 (bounded) and B A != 0 inside S1 over the quotient.

    S is spanned by w*I, w*e12 and w*e13 for words w, so it suffices to try
    those generators with |w| <= max_middle.
    """
    t0 = time.perf_counter()
    A = _matrix(A or DEFAULT_A, P)
    B = _matrix(B or DEFAULT_B, P)
    asb_witness = None
    checked = 0
    for w, slot, C in s1_basis(P, max_middle):
        checked += 1
        prod = mat_mul(mat_mul(A, _matrix(C, P)), B)
        if not _mat_zero(prod):
            asb_witness = {"w": w, "slot": slot, "product": _mat_str(prod)}
            break
    BA = mat_mul(B, A)
    power, nil_a = A, None
    for k in range(1, 5):
        if _mat_zero(power):
            nil_a = k
            break
        power = mat_mul(power, A)
    return {
        "ideal": str(P),
        "A": _mat_str(A),
        "B": _mat_str(B),
        "asb_zero": asb_witness is None,
        "asb_witness": asb_witness,
        "ba_zero": _mat_zero(BA),
        "BA": _mat_str(BA),
        "a_nilpotency_index": nil_a,
        "bounds": {"max_middle": max_middle},
        "generators_checked": checked,
        "elapsed": time.perf_counter() - t0,
    }
