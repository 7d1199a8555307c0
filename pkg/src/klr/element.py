"""Integer linear combinations of thin diagrams over a fixed coloured boundary.

A term is a word of factors read top to bottom. An `int` factor j is the
crossing psi_j; a tuple factor is a dot exponent vector x^a. Adjacent dot
factors are merged, so a word in basis form is `(j1, ..., jr, a)` with the
crossings spelling the lexicographically least reduced word of their
permutation and the dots at the bottom.
"""

from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.klr.cartan import pairing
from src.klr.permutations import Word, canonical_word, perm_of_word, shift_word
from src.utils.errors import BoundaryMismatchError, DegreeMismatchError

Factor = Union[int, Tuple[int, ...]]
TermWord = Tuple[Factor, ...]
Colors = Tuple[int, ...]


def normalize_word(word: Sequence[Factor], strands: int) -> TermWord:
    """Merge neighbouring dot factors, drop empty ones and check positions."""
    out = []
    for factor in word:
        if isinstance(factor, int):
            if not 1 <= factor < strands:
                raise BoundaryMismatchError(f"crossing position {factor} outside 1..{strands - 1}")
            out.append(factor)
            continue
        dots = tuple(int(e) for e in factor)
        if len(dots) != strands or any(e < 0 for e in dots):
            raise BoundaryMismatchError(f"dot vector {dots} does not fit {strands} strands")
        if not any(dots):
            continue
        if out and not isinstance(out[-1], int):
            dots = tuple(p + q for p, q in zip(out.pop(), dots))
        out.append(dots)
    return tuple(out)


def word_top(word: TermWord, bottom: Colors) -> Colors:
    colors = list(bottom)
    for factor in reversed(word):
        if isinstance(factor, int):
            colors[factor - 1], colors[factor] = colors[factor], colors[factor - 1]
    return tuple(colors)


def word_degree(word: TermWord, bottom: Colors) -> int:
    """2 per dot, minus the pairing of the two colours entering each crossing."""
    colors = list(bottom)
    degree = 0
    for factor in reversed(word):
        if isinstance(factor, int):
            degree -= pairing(colors[factor - 1], colors[factor])
            colors[factor - 1], colors[factor] = colors[factor], colors[factor - 1]
        else:
            degree += 2 * sum(factor)
    return degree


def crossing_count(word: TermWord) -> int:
    return sum(1 for factor in word if isinstance(factor, int))


def basis_word(crossings: Word, dots: Tuple[int, ...]) -> TermWord:
    return tuple(crossings) + ((dots,) if any(dots) else ())


def split_basis(word: TermWord, strands: int) -> Optional[Tuple[Word, Tuple[int, ...]]]:
    """(crossings, dots) when word is in basis form, else None."""
    dots = (0,) * strands
    crossings = word
    if word and not isinstance(word[-1], int):
        dots = word[-1]
        crossings = word[:-1]
    if any(not isinstance(factor, int) for factor in crossings):
        return None
    if canonical_word(perm_of_word(crossings, strands)) != crossings:
        return None
    return crossings, dots


def term_sort_key(word: TermWord) -> Tuple:
    """Deterministic basis order: fewer crossings first, then crossing letters, then larger dots first."""
    encoded = tuple((0, (f,)) if isinstance(f, int) else (1, tuple(-e for e in f)) for f in word)
    return (crossing_count(word), encoded)


class ThinElement:
    """A homogeneous Z-linear combination of thin diagrams from `bottom` to `top`.

    Equality with `==` is structural (same boundary, same stored terms); use
    `reduction.equal` for equality in the algebra.
    """

    __slots__ = ("bottom", "top", "terms", "reduced", "degree")

    def __init__(
        self,
        bottom: Sequence[int],
        terms: Optional[Mapping[TermWord, int]] = None,
        top: Optional[Sequence[int]] = None,
        reduced: bool = False,
    ):
        bottom = tuple(bottom)
        strands = len(bottom)
        collected: Dict[TermWord, int] = {}
        for word, coeff in (terms or {}).items():
            if not coeff:
                continue
            key = normalize_word(word, strands) if strands else ()
            collected[key] = collected.get(key, 0) + int(coeff)
        collected = {word: coeff for word, coeff in collected.items() if coeff}

        tops = {word_top(word, bottom) for word in collected}
        if top is not None:
            tops.add(tuple(top))
        if len(tops) > 1:
            raise BoundaryMismatchError(f"terms over {bottom} end on different colour sequences {sorted(tops)}")
        degrees = {word_degree(word, bottom) for word in collected}
        if len(degrees) > 1:
            raise DegreeMismatchError(f"terms over {bottom} have degrees {sorted(degrees)}")

        self.bottom: Colors = bottom
        self.top: Colors = tops.pop() if tops else bottom
        self.terms = MappingProxyType(dict(sorted(collected.items(), key=lambda item: term_sort_key(item[0]))))
        self.reduced = reduced
        self.degree: Optional[int] = degrees.pop() if degrees else None

    @property
    def strands(self) -> int:
        return len(self.bottom)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[TermWord, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def _check_same_boundary(self, other: "ThinElement") -> None:
        if self.bottom != other.bottom or (self.terms and other.terms and self.top != other.top):
            raise BoundaryMismatchError(
                f"cannot combine {self.bottom}->{self.top} with {other.bottom}->{other.top}"
            )

    def __add__(self, other: "ThinElement") -> "ThinElement":
        self._check_same_boundary(other)
        merged = dict(self.terms)
        for word, coeff in other.terms.items():
            merged[word] = merged.get(word, 0) + coeff
        top = self.top if self.terms else other.top
        return ThinElement(self.bottom, merged, top, self.reduced and other.reduced)

    def __neg__(self) -> "ThinElement":
        return self.scale(-1)

    def __sub__(self, other: "ThinElement") -> "ThinElement":
        return self + (-other)

    def scale(self, factor: int) -> "ThinElement":
        return ThinElement(self.bottom, {w: c * factor for w, c in self.terms.items()}, self.top, self.reduced)

    def __mul__(self, factor: int) -> "ThinElement":
        if not isinstance(factor, int):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThinElement):
            return NotImplemented
        return self.bottom == other.bottom and self.top == other.top and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.bottom, self.top, tuple(self.terms.items())))

    def __reduce__(self):
        return (ThinElement, (self.bottom, dict(self.terms), self.top, self.reduced))

    def __repr__(self) -> str:
        from src.klr.serialize import format_element

        return f"ThinElement({format_element(self)!r})"


def zero(bottom: Sequence[int], top: Optional[Sequence[int]] = None) -> ThinElement:
    return ThinElement(bottom, {}, top, reduced=True)


def identity(colors: Sequence[int]) -> ThinElement:
    """e(i): straight strands."""
    return ThinElement(colors, {(): 1}, reduced=True)


def dot(k: int, colors: Sequence[int], power: int = 1) -> ThinElement:
    """x_k^power on strand k (1-based)."""
    colors = tuple(colors)
    exps = tuple(power if p == k else 0 for p in range(1, len(colors) + 1))
    return ThinElement(colors, {(exps,): 1}, reduced=True)


def dots(exps: Sequence[int], colors: Sequence[int]) -> ThinElement:
    """x^a with a given exponent per strand."""
    return ThinElement(colors, {(tuple(exps),): 1}, reduced=True)


def crossing(k: int, colors: Sequence[int]) -> ThinElement:
    """psi_k between strands k and k+1."""
    return ThinElement(colors, {(k,): 1}, reduced=True)


def permutation_element(perm: Tuple[int, ...], colors: Sequence[int], exps: Optional[Sequence[int]] = None) -> ThinElement:
    """psi_w x^a for the canonical reduced word of w."""
    colors = tuple(colors)
    exps = tuple(exps) if exps is not None else (0,) * len(colors)
    return ThinElement(colors, {basis_word(canonical_word(perm), exps): 1}, reduced=True)


def compose(f: ThinElement, g: ThinElement) -> ThinElement:
    """f ∘ g: g below, f on top; requires top(g) = bottom(f)."""
    if g.top != f.bottom:
        raise BoundaryMismatchError(f"cannot stack {f.bottom}->{f.top} on top of {g.bottom}->{g.top}")
    terms: Dict[TermWord, int] = {}
    for fw, fc in f.terms.items():
        for gw, gc in g.terms.items():
            word = fw + gw
            terms[word] = terms.get(word, 0) + fc * gc
    return ThinElement(g.bottom, terms, f.top)


def _pad_word(word: TermWord, left: int, right: int) -> TermWord:
    out = []
    for factor in word:
        if isinstance(factor, int):
            out.append(factor + left)
        else:
            out.append((0,) * left + tuple(factor) + (0,) * right)
    return tuple(out)


def tensor(f: ThinElement, g: ThinElement) -> ThinElement:
    """f placed to the left of g."""
    nf, ng = f.strands, g.strands
    both_reduced = f.reduced and g.reduced
    terms: Dict[TermWord, int] = {}
    for fw, fc in f.terms.items():
        for gw, gc in g.terms.items():
            if both_reduced:
                f_cross, f_dots = split_basis(fw, nf) if nf else ((), ())
                g_cross, g_dots = split_basis(gw, ng) if ng else ((), ())
                word = basis_word(f_cross + shift_word(g_cross, nf), tuple(f_dots) + tuple(g_dots))
            else:
                word = _pad_word(fw, 0, ng) + _pad_word(gw, nf, 0)
            terms[word] = terms.get(word, 0) + fc * gc
    return ThinElement(f.bottom + g.bottom, terms, f.top + g.top, both_reduced)
