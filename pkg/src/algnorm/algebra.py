"""Element representation and multiplication for the supported algebra families.

Every family shares one element type: a finitely supported coefficient
vector over a canonical basis indexed by naturals starting at 1.  The
family then fixes what a product of basis vectors is:

  - StructureConstants: finite dimension d, e_i e_j = sum_k c(i,j,k) e_k
  - MaskedPointwise: sequence algebra, (ab)_k = a_k b_k on a designated
    index set, 0 elsewhere
  - TruncatedPolyIdeal: monomials x^n .. x^N, polynomial product with
    degrees above N discarded
  - TrivialExtension: inner algebra plus one adjoined coordinate that every
    product annihilates: (a, alpha)(b, beta) = (ab, 0)
  - ZeroProduct: all products are zero

For TrivialExtension the adjoined coordinate lives at index 1 and inner
index k maps to k + 1 (an infinite-dimensional inner algebra leaves no
index after all of its own).
"""
from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from .errors import IndexOutOfRange, MalformedTable, NotAssociative, ParseError
from .scalars import GR_ONE, GR_ZERO, GaussianRational, gr


# ---------------------------------------------------------------------------
# Index sets
# ---------------------------------------------------------------------------

class IndexSetBase:
    """A decidable set of basis indices (naturals >= 1).

    Provides O(1)-ish membership, counting and enumeration, and decides
    whether the set and its complement are infinite.
    """

    def member(self, k: int) -> bool:
        raise NotImplementedError

    def count_upto(self, k: int) -> int:
        """Number of members in [1, k]."""
        raise NotImplementedError

    def nth(self, m: int) -> int:
        """The m-th smallest member (m >= 1)."""
        raise NotImplementedError

    def size(self) -> Optional[int]:
        """Number of members, None when infinite."""
        raise NotImplementedError

    def is_infinite(self) -> bool:
        return self.size() is None

    def complement_is_infinite(self) -> bool:
        raise NotImplementedError

    def complement_size(self) -> Optional[int]:
        """Number of naturals >= 1 outside the set, None when infinite."""
        return None if self.complement_is_infinite() else 0

    def complement_members(self) -> tuple:
        """The complement, increasing; only valid when it is finite."""
        if self.complement_is_infinite():
            raise ValueError("complement is infinite")
        return ()

    def shift(self, offset: int) -> "IndexSet":
        """The set {k + offset : k member}, normalized where possible."""
        if offset == 0:
            return self
        return Shifted(self, offset)

    def describe(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class All(IndexSetBase):
    def member(self, k):
        return k >= 1

    def count_upto(self, k):
        return max(k, 0)

    def nth(self, m):
        return m

    def size(self):
        return None

    def complement_is_infinite(self):
        return False

    def shift(self, offset):
        if offset == 0:
            return self
        return ComplementOfFiniteList(tuple(range(1, offset + 1)))

    def describe(self):
        return "all indices"

    def to_json(self):
        return {"kind": "all"}


@dataclass(frozen=True)
class Evens(IndexSetBase):
    def member(self, k):
        return k >= 1 and k % 2 == 0

    def count_upto(self, k):
        return max(k, 0) // 2

    def nth(self, m):
        return 2 * m

    def size(self):
        return None

    def complement_is_infinite(self):
        return True

    def describe(self):
        return "even indices"

    def to_json(self):
        return {"kind": "evens"}


@dataclass(frozen=True)
class Odds(IndexSetBase):
    def member(self, k):
        return k >= 1 and k % 2 == 1

    def count_upto(self, k):
        return (max(k, 0) + 1) // 2

    def nth(self, m):
        return 2 * m - 1

    def size(self):
        return None

    def complement_is_infinite(self):
        return True

    def shift(self, offset):
        # odds + 1 is exactly the evens
        if offset == 1:
            return Evens()
        if offset == 0:
            return self
        return Shifted(self, offset)

    def describe(self):
        return "odd indices"

    def to_json(self):
        return {"kind": "odds"}


@dataclass(frozen=True)
class Residue(IndexSetBase):
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ParseError(f"bad residue class {self.residue} mod {self.modulus}")

    def member(self, k):
        return k >= 1 and k % self.modulus == self.residue

    def count_upto(self, k):
        if k < 1:
            return 0
        first = self.residue if self.residue >= 1 else self.modulus
        if k < first:
            return 0
        return (k - first) // self.modulus + 1

    def nth(self, m):
        first = self.residue if self.residue >= 1 else self.modulus
        return first + (m - 1) * self.modulus

    def size(self):
        return None

    def complement_is_infinite(self):
        return self.modulus >= 2

    def describe(self):
        return f"indices == {self.residue} (mod {self.modulus})"

    def to_json(self):
        return {"kind": "residue", "modulus": self.modulus, "residue": self.residue}


@dataclass(frozen=True)
class FiniteList(IndexSetBase):
    indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if any(i < 1 for i in idx):
            raise ParseError("indices must be >= 1")
        object.__setattr__(self, "indices", idx)

    def member(self, k):
        return k in self._set

    @cached_property
    def _set(self):
        return frozenset(self.indices)

    def count_upto(self, k):
        return bisect_right(self.indices, k)

    def nth(self, m):
        if not 1 <= m <= len(self.indices):
            raise IndexOutOfRange(f"finite index set has {len(self.indices)} members")
        return self.indices[m - 1]

    def size(self):
        return len(self.indices)

    def complement_is_infinite(self):
        return True

    def shift(self, offset):
        if offset == 0:
            return self
        return FiniteList(tuple(i + offset for i in self.indices))

    def describe(self):
        return "{" + ", ".join(map(str, self.indices)) + "}"

    def to_json(self):
        return {"kind": "finite_list", "indices": list(self.indices)}


@dataclass(frozen=True)
class ComplementOfFiniteList(IndexSetBase):
    excluded: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.excluded)))
        if any(i < 1 for i in idx):
            raise ParseError("indices must be >= 1")
        object.__setattr__(self, "excluded", idx)

    @cached_property
    def _set(self):
        return frozenset(self.excluded)

    def member(self, k):
        return k >= 1 and k not in self._set

    def count_upto(self, k):
        return max(k, 0) - bisect_right(self.excluded, k)

    def nth(self, m):
        n = m
        for e in self.excluded:
            if e <= n:
                n += 1
        return n

    def size(self):
        return None

    def complement_is_infinite(self):
        return False

    def complement_size(self):
        return len(self.excluded)

    def complement_members(self):
        return self.excluded

    def shift(self, offset):
        if offset == 0:
            return self
        ex = tuple(range(1, offset + 1)) + tuple(i + offset for i in self.excluded)
        return ComplementOfFiniteList(ex)

    def describe(self):
        return "all except {" + ", ".join(map(str, self.excluded)) + "}"

    def to_json(self):
        return {"kind": "complement_of_finite_list", "indices": list(self.excluded)}


@dataclass(frozen=True)
class Shifted(IndexSetBase):
    """An index set translated by a positive offset.

    Not part of the user-facing vocabulary; it arises when a trivial
    extension embeds an inner span whose shifted image has no simpler form
    (e.g. evens + 1).
    """

    base: "IndexSet"
    offset: int

    def __post_init__(self):
        if self.offset < 1:
            raise ParseError("shift offset must be >= 1")

    def member(self, k):
        return k > self.offset and self.base.member(k - self.offset)

    def count_upto(self, k):
        return self.base.count_upto(k - self.offset) if k > self.offset else 0

    def nth(self, m):
        return self.base.nth(m) + self.offset

    def size(self):
        return self.base.size()

    def complement_is_infinite(self):
        return self.base.complement_is_infinite()

    def complement_size(self):
        inner = self.base.complement_size()
        return None if inner is None else inner + self.offset

    def complement_members(self):
        inner = self.base.complement_members()
        return tuple(range(1, self.offset + 1)) + tuple(m + self.offset for m in inner)

    def shift(self, offset):
        if offset == 0:
            return self
        return self.base.shift(self.offset + offset)

    def describe(self):
        return f"({self.base.describe()}) shifted by +{self.offset}"

    def to_json(self):
        return {"kind": "shifted", "base": self.base.to_json(), "offset": self.offset}


IndexSet = Union[All, Evens, Odds, Residue, FiniteList, ComplementOfFiniteList, Shifted]

_INDEX_SET_KINDS = {
    "all": lambda o: All(),
    "evens": lambda o: Evens(),
    "odds": lambda o: Odds(),
    "residue": lambda o: Residue(int(o["modulus"]), int(o["residue"])),
    "finite_list": lambda o: FiniteList(tuple(o["indices"])),
    "complement_of_finite_list": lambda o: ComplementOfFiniteList(tuple(o["indices"])),
    "shifted": lambda o: Shifted(index_set_from_json(o["base"]), int(o["offset"])),
}


def index_set_from_json(obj) -> IndexSet:
    try:
        return _INDEX_SET_KINDS[obj["kind"]](obj)
    except NotAssociative:
        raise
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad index set: {obj!r}") from exc


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class Element:
    """A finitely supported vector: basis index -> nonzero Gaussian rational."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                k = int(k)
                if k < 1:
                    raise IndexOutOfRange(f"basis index {k} < 1")
                if not isinstance(v, GaussianRational):
                    v = gr(v)
                if not v.is_zero():
                    clean[k] = v
        self.coeffs = clean

    def support(self):
        return tuple(sorted(self.coeffs))

    def get(self, k) -> GaussianRational:
        return self.coeffs.get(k, GR_ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        e = Element.__new__(Element)
        e.coeffs = out
        return e

    def __sub__(self, other):
        return self + other.scale(gr(-1))

    def scale(self, z) -> "Element":
        if not isinstance(z, GaussianRational):
            z = gr(z)
        if z.is_zero():
            return Element()
        e = Element.__new__(Element)
        e.coeffs = {k: v * z for k, v in self.coeffs.items()}
        return e

    def __eq__(self, other):
        return isinstance(other, Element) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "Element({})"
        parts = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.coeffs.items()))
        return "Element({" + parts + "})"

    def to_json(self) -> dict:
        return {"coeffs": {str(k): v.to_json() for k, v in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, obj) -> "Element":
        try:
            raw = obj["coeffs"]
            return cls({int(k): GaussianRational.from_json(v) for k, v in raw.items()})
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"bad element object: {obj!r}") from exc


def element(coeffs) -> Element:
    return Element(coeffs)


def basis_vector(k: int) -> Element:
    return Element({k: GR_ONE})


# ---------------------------------------------------------------------------
# Algebra families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureConstants:
    dim: int
    table: tuple  # entries (i, j, k, GaussianRational)

    def __post_init__(self):
        if self.dim < 1:
            raise MalformedTable("dimension must be >= 1")
        seen = set()
        clean = []
        for entry in self.table:
            try:
                i, j, k, c = entry
            except (TypeError, ValueError):
                raise MalformedTable(f"bad table entry {entry!r}")
            if not all(1 <= t <= self.dim for t in (i, j, k)):
                raise MalformedTable(f"table entry {entry!r} out of range 1..{self.dim}")
            if (i, j, k) in seen:
                raise MalformedTable(f"duplicate table entry for ({i}, {j}, {k})")
            seen.add((i, j, k))
            if not isinstance(c, GaussianRational):
                c = gr(c)
            if not c.is_zero():
                clean.append((i, j, k, c))
        object.__setattr__(self, "table", tuple(clean))

    @cached_property
    def products(self):
        """(i, j) -> tuple of (k, c) with e_i e_j = sum c e_k."""
        out = {}
        for i, j, k, c in self.table:
            out.setdefault((i, j), []).append((k, c))
        return {ij: tuple(terms) for ij, terms in out.items()}


@dataclass(frozen=True)
class MaskedPointwise:
    mask: IndexSet


@dataclass(frozen=True)
class TruncatedPolyIdeal:
    n: int
    N: int

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("lowest degree n must be >= 1")
        if self.N < 2 * self.n:
            raise ParseError("truncation N must be >= 2n so the square is nontrivial")

    def degree_of_index(self, idx: int) -> int:
        return self.n + idx - 1

    def index_of_degree(self, d: int) -> int:
        return d - self.n + 1

    @property
    def dim(self) -> int:
        return self.N - self.n + 1


@dataclass(frozen=True)
class TrivialExtension:
    inner: "AlgebraSpec"

    ADJOINED_INDEX = 1


@dataclass(frozen=True)
class ZeroProduct:
    pass


AlgebraSpec = Union[StructureConstants, MaskedPointwise, TruncatedPolyIdeal,
                    TrivialExtension, ZeroProduct]


def family_name(spec: AlgebraSpec) -> str:
    return {
        StructureConstants: "structure_constants",
        MaskedPointwise: "masked_pointwise",
        TruncatedPolyIdeal: "truncated_poly_ideal",
        TrivialExtension: "trivial_extension",
        ZeroProduct: "zero_product",
    }[type(spec)]


def index_bound(spec: AlgebraSpec) -> Optional[int]:
    """Largest valid basis index, None for the infinite-dimensional families."""
    if isinstance(spec, StructureConstants):
        return spec.dim
    if isinstance(spec, TruncatedPolyIdeal):
        return spec.dim
    if isinstance(spec, TrivialExtension):
        inner = index_bound(spec.inner)
        return None if inner is None else inner + 1
    return None


def check_index(spec: AlgebraSpec, k: int):
    bound = index_bound(spec)
    if k < 1 or (bound is not None and k > bound):
        raise IndexOutOfRange(
            f"index {k} outside 1..{bound if bound is not None else 'inf'}"
        )


def check_support(spec: AlgebraSpec, a: Element):
    bound = index_bound(spec)
    if bound is not None:
        for k in a.coeffs:
            if k > bound:
                raise IndexOutOfRange(f"index {k} outside 1..{bound}")


def basis_label(spec: AlgebraSpec, k: int) -> str:
    if isinstance(spec, TruncatedPolyIdeal):
        return f"x^{spec.degree_of_index(k)}"
    if isinstance(spec, TrivialExtension):
        if k == TrivialExtension.ADJOINED_INDEX:
            return "u"
        return basis_label(spec.inner, k - 1)
    return f"e{k}"


def format_element(spec: AlgebraSpec, a: Element) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for k in a.support():
        z = a.coeffs[k]
        label = basis_label(spec, k)
        if z == GR_ONE:
            parts.append(label)
        elif z.im == 0:
            parts.append(f"({z.re})*{label}")
        else:
            parts.append(f"({z.re}{'+' if z.im > 0 else ''}{z.im}i)*{label}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------

def multiply(spec: AlgebraSpec, a: Element, b: Element) -> Element:
    """Exact product of a and b under the family's rule."""
    check_support(spec, a)
    check_support(spec, b)
    out = {}
    if isinstance(spec, ZeroProduct):
        pass
    elif isinstance(spec, MaskedPointwise):
        x, y = a.coeffs, b.coeffs
        if len(y) < len(x):
            x, y = y, x
        member = spec.mask.member
        for k, za in x.items():
            zb = y.get(k)
            if zb is not None and member(k):
                out[k] = za * zb
    elif isinstance(spec, TruncatedPolyIdeal):
        n, N = spec.n, spec.N
        for i, za in a.coeffs.items():
            for j, zb in b.coeffs.items():
                # degree(i) + degree(j) = 2n + i + j - 2; index of that degree
                idx = n + i + j - 1
                if n + idx - 1 <= N:
                    s = out.get(idx)
                    p = za * zb
                    out[idx] = p if s is None else s + p
    elif isinstance(spec, StructureConstants):
        prods = spec.products
        for i, za in a.coeffs.items():
            for j, zb in b.coeffs.items():
                terms = prods.get((i, j))
                if not terms:
                    continue
                zab = za * zb
                for k, c in terms:
                    s = out.get(k)
                    p = zab * c
                    out[k] = p if s is None else s + p
    elif isinstance(spec, TrivialExtension):
        inner_a = Element({k - 1: v for k, v in a.coeffs.items() if k != 1})
        inner_b = Element({k - 1: v for k, v in b.coeffs.items() if k != 1})
        inner_prod = multiply(spec.inner, inner_a, inner_b)
        out = {k + 1: v for k, v in inner_prod.coeffs.items()}
    else:
        raise TypeError(f"unknown algebra family {spec!r}")
    e = Element.__new__(Element)
    e.coeffs = {k: v for k, v in out.items() if not v.is_zero()}
    return e


def canonical_basis_element(spec: AlgebraSpec, k: int) -> Element:
    check_index(spec, k)
    return basis_vector(k)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    family: str
    mode: str       # "exhaustive" or "sampled"
    checks: int
    ok: bool = True

    def to_json(self):
        return {"family": self.family, "mode": self.mode,
                "checks": self.checks, "ok": self.ok}


def _random_element(rng: random.Random, spec: AlgebraSpec, max_index=50, max_support=4) -> Element:
    bound = index_bound(spec)
    hi = min(max_index, bound) if bound is not None else max_index
    coeffs = {}
    for _ in range(rng.randint(1, max_support)):
        k = rng.randint(1, hi)
        z = gr(rng.randint(-3, 3), rng.randint(-3, 3))
        if not z.is_zero():
            coeffs[k] = z
    return Element(coeffs)


_VALIDATE_SEED = 20240901


def validate(spec: AlgebraSpec, seed: int = _VALIDATE_SEED, triples: int = 1000) -> ValidationReport:
    """Confirm associativity and table well-formedness.

    StructureConstants tables are checked exhaustively over all d^3 basis
    triples; the sequence families are associative by construction and get a
    seeded random spot-check to guard implementation bugs.  Raises
    NotAssociative (with a witness triple) or MalformedTable.
    """
    name = family_name(spec)
    if isinstance(spec, StructureConstants):
        d = spec.dim
        basis = [basis_vector(k) for k in range(1, d + 1)]
        prods = [[multiply(spec, basis[i], basis[j]) for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(d):
                for l in range(d):
                    left = multiply(spec, prods[i][j], basis[l])
                    right = multiply(spec, basis[i], prods[j][l])
                    if left != right:
                        raise NotAssociative((i + 1, j + 1, l + 1))
        return ValidationReport(name, "exhaustive", d ** 3)
    if isinstance(spec, TrivialExtension):
        validate(spec.inner, seed=seed, triples=triples)
    rng = random.Random(seed)
    for t in range(triples):
        a = _random_element(rng, spec)
        b = _random_element(rng, spec)
        c = _random_element(rng, spec)
        if multiply(spec, multiply(spec, a, b), c) != multiply(spec, a, multiply(spec, b, c)):
            raise NotAssociative((a, b, c), "associativity spot-check failed")
    return ValidationReport(name, "sampled", triples)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def spec_to_json(spec: AlgebraSpec) -> dict:
    if isinstance(spec, StructureConstants):
        return {
            "family": "structure_constants",
            "dim": spec.dim,
            "table": [[i, j, k, c.to_json()] for i, j, k, c in spec.table],
        }
    if isinstance(spec, MaskedPointwise):
        return {"family": "masked_pointwise", "mask": spec.mask.to_json()}
    if isinstance(spec, TruncatedPolyIdeal):
        return {"family": "truncated_poly_ideal", "n": spec.n, "N": spec.N}
    if isinstance(spec, TrivialExtension):
        return {"family": "trivial_extension", "inner": spec_to_json(spec.inner)}
    if isinstance(spec, ZeroProduct):
        return {"family": "zero_product"}
    raise TypeError(f"unknown algebra family {spec!r}")


def spec_from_json(obj) -> AlgebraSpec:
    if not isinstance(obj, dict) or "family" not in obj:
        raise ParseError(f"algebra spec must be an object with a 'family' key")
    fam = obj["family"]
    try:
        if fam == "structure_constants":
            table = tuple(
                (int(i), int(j), int(k), GaussianRational.from_json(c))
                for i, j, k, c in obj["table"]
            )
            return StructureConstants(int(obj["dim"]), table)
        if fam == "masked_pointwise":
            return MaskedPointwise(index_set_from_json(obj["mask"]))
        if fam == "truncated_poly_ideal":
            return TruncatedPolyIdeal(int(obj["n"]), int(obj["N"]))
        if fam == "trivial_extension":
            return TrivialExtension(spec_from_json(obj["inner"]))
        if fam == "zero_product":
            return ZeroProduct()
    except (MalformedTable, ParseError):
        raise
    except Exception as exc:
        raise ParseError(f"bad {fam} spec: {exc}") from exc
    raise ParseError(f"unknown algebra family {fam!r}")
