"""Finite commutative rings on a dense index domain.

Every ring here lives on the index set ``0 .. order-1``; ``add`` and ``mul``
are total functions on that domain.  Constructors cover modular integers,
prime fields and their extensions, boolean rings, direct products, and
arbitrary rings given by explicit Cayley tables.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

DEFAULT_ORDER_CAP = 4096


class RingError(Exception):
    """Base class for ring construction and usage errors."""


class RingSpecError(RingError):
    """A ring family spec string or parameter set is invalid."""


class OrderCapError(RingError):
    """Requested ring order exceeds the configured cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"ring order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class RingAxiomError(RingError):
    """A Cayley-table ring violates a ring axiom.

    Carries the name of the first failed axiom and a witness tuple of
    element indices.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...]):
        super().__init__(f"axiom violated: {axiom} at witness {witness}")
        self.axiom = axiom
        self.witness = witness


class NoUnityError(RingError):
    """The ring has no multiplicative identity, so units are undefined."""

    def __init__(self, label: str):
        super().__init__(f"ring {label} has no unity element")
        self.label = label


@dataclass(frozen=True)
class FiniteRing:
    """A finite commutative ring with elements indexed 0 .. order-1.

    ``unity`` is None for rings without a multiplicative identity; such
    rings can be built and inspected but have no unit group.
    """

    order: int
    add: Callable[[int, int], int]
    mul: Callable[[int, int], int]
    zero: int
    unity: int | None
    label: str
    element_names: tuple[str, ...]

    def element_name(self, x: int) -> str:
        return self.element_names[x]

    def neg(self, x: int) -> int:
        """Additive inverse, found by scan."""
        for y in range(self.order):
            if self.add(x, y) == self.zero:
                return y
        raise RingAxiomError("additive-inverse", (x,))


@dataclass(frozen=True)
class UnitGroup:
    """The units of a ring, ordered by element index.

    ``inverse_of`` maps each unit's element index to the index of its
    multiplicative inverse.
    """

    ring: FiniteRing
    units: tuple[int, ...]
    inverse_of: Mapping[int, int]

    def inverse(self, x: int) -> int:
        return self.inverse_of[x]

    def __len__(self) -> int:
        return len(self.units)


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapError(order, cap)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def zmod(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Integers modulo n.  Rejects n < 1."""
    if n < 1:
        raise RingSpecError(f"zmod: modulus must be positive, got {n}")
    _check_cap(n, order_cap)
    return FiniteRing(
        order=n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        zero=0,
        unity=1 % n,
        label=f"Z/{n}",
        element_names=tuple(str(i) for i in range(n)),
    )


def _poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of num / den over GF(p); den must be nonzero."""
    num = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        factor = (num[i] * lead_inv) % p
        if factor == 0:
            continue
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - factor * den[j]) % p
    return _poly_trim(num)


def _monic_polys(p: int, degree: int):
    """Yield all monic polynomials of the given degree, low coeffs first."""
    for m in range(p**degree):
        coeffs = []
        v = m
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield tuple(coeffs)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if _poly_mod(f, g, p) == (0,):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p).

    Candidates are ordered by the coefficient tuple (c_{k-1}, ..., c_0)
    read most-significant first.
    """
    for m in range(p**k):
        low = []
        v = m
        for _ in range(k):
            low.append(v % p)
            v //= p
        f = tuple(low) + (1,)
        if _is_irreducible(f, p):
            return f
    raise RingSpecError(f"no irreducible polynomial of degree {k} over GF({p})")


def _poly_name(digits: Sequence[int]) -> str:
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return "+".join(terms) if terms else "0"


def gf(p: int, k: int = 1, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Galois field GF(p^k), elements encoded as base-p digit strings.

    Index sum(c_i * p^i) stands for the polynomial sum(c_i * x^i) in the
    quotient by the lexicographically smallest monic irreducible of
    degree k.  For k = 1 this is arithmetic mod p.
    """
    if not is_prime(p):
        raise RingSpecError(f"gf: {p} is not prime")
    if k < 1:
        raise RingSpecError(f"gf: extension degree must be >= 1, got {k}")
    order = p**k
    _check_cap(order, order_cap)
    if k == 1:
        return replace(zmod(p, order_cap=order_cap), label=f"GF({p})")

    modulus = _smallest_irreducible(p, k)
    # reduction[j] = digits of x^(k+j) mod modulus, for j = 0 .. k-2
    reduction: list[tuple[int, ...]] = []
    for j in range(k - 1):
        xs = [0] * (k + j) + [1]
        rem = _poly_mod(xs, modulus, p)
        reduction.append(tuple(rem) + (0,) * (k - len(rem)))

    def digits(x: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return out

    def encode(ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * p + d
        return v

    def add(a: int, b: int) -> int:
        da, db = digits(a), digits(b)
        return encode([(da[i] + db[i]) % p for i in range(k)])

    def mul(a: int, b: int) -> int:
        da, db = digits(a), digits(b)
        conv = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca == 0:
                continue
            for j, cb in enumerate(db):
                conv[i + j] = (conv[i + j] + ca * cb) % p
        out = conv[:k]
        for j in range(k - 1):
            c = conv[k + j]
            if c == 0:
                continue
            row = reduction[j]
            for i in range(k):
                out[i] = (out[i] + c * row[i]) % p
        return encode(out)

    names = tuple(_poly_name(digits(x)) for x in range(order))
    return FiniteRing(
        order=order,
        add=add,
        mul=mul,
        zero=0,
        unity=1,
        label=f"GF({order})",
        element_names=names,
    )


def direct_product(
    components: Sequence[FiniteRing], *, order_cap: int = DEFAULT_ORDER_CAP
) -> FiniteRing:
    """Componentwise product ring; indices are mixed-radix encodings.

    The first component is most significant.  Unity exists iff every
    component has one.
    """
    if not components:
        raise RingSpecError("direct product needs at least one component")
    comps = tuple(components)
    order = math.prod(r.order for r in comps)
    _check_cap(order, order_cap)

    def decode(x: int) -> list[int]:
        out = []
        for r in reversed(comps):
            out.append(x % r.order)
            x //= r.order
        out.reverse()
        return out

    def encode(parts: Sequence[int]) -> int:
        v = 0
        for r, x in zip(comps, parts):
            v = v * r.order + x
        return v

    def add(a: int, b: int) -> int:
        da, db = decode(a), decode(b)
        return encode([r.add(x, y) for r, x, y in zip(comps, da, db)])

    def mul(a: int, b: int) -> int:
        da, db = decode(a), decode(b)
        return encode([r.mul(x, y) for r, x, y in zip(comps, da, db)])

    zero = encode([r.zero for r in comps])
    if all(r.unity is not None for r in comps):
        unity = encode([r.unity for r in comps])
    else:
        unity = None

    def wrap(lbl: str) -> str:
        return f"({lbl})" if " × " in lbl else lbl

    label = " × ".join(wrap(r.label) for r in comps)
    names = tuple(
        "(" + ",".join(r.element_name(x) for r, x in zip(comps, decode(v))) + ")"
        for v in range(order)
    )
    return FiniteRing(
        order=order, add=add, mul=mul, zero=zero, unity=unity, label=label,
        element_names=names,
    )


def boolean_ring(n_copies: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Product of n_copies copies of Z/2; every element is idempotent."""
    if n_copies < 1:
        raise RingSpecError(f"bool: copy count must be >= 1, got {n_copies}")
    _check_cap(2**n_copies, order_cap)
    if n_copies == 1:
        return zmod(2, order_cap=order_cap)
    return direct_product([zmod(2) for _ in range(n_copies)], order_cap=order_cap)


def validate_ring_axioms(ring: FiniteRing) -> None:
    """Exhaustively check the commutative-ring axioms.

    Raises RingAxiomError naming the first failed axiom, in a fixed check
    order, with a witness tuple.  O(order^3): intended for table rings.
    """
    n = ring.order
    rng = range(n)
    for a in rng:
        for b in rng:
            if not 0 <= ring.add(a, b) < n:
                raise RingAxiomError("add-closure", (a, b))
            if not 0 <= ring.mul(a, b) < n:
                raise RingAxiomError("mul-closure", (a, b))
    for a in rng:
        for b in rng:
            if ring.add(a, b) != ring.add(b, a):
                raise RingAxiomError("add-commutative", (a, b))
    for a in rng:
        for b in rng:
            for c in rng:
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
                    raise RingAxiomError("add-associative", (a, b, c))
    for a in rng:
        if ring.add(a, ring.zero) != a:
            raise RingAxiomError("zero-identity", (a,))
    for a in rng:
        if all(ring.add(a, b) != ring.zero for b in rng):
            raise RingAxiomError("additive-inverse", (a,))
    for a in rng:
        for b in rng:
            if ring.mul(a, b) != ring.mul(b, a):
                raise RingAxiomError("mul-commutative", (a, b))
    for a in rng:
        for b in rng:
            for c in rng:
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
                    raise RingAxiomError("mul-associative", (a, b, c))
    for a in rng:
        for b in rng:
            for c in rng:
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
                    raise RingAxiomError("distributive", (a, b, c))
    if ring.unity is not None:
        for a in rng:
            if ring.mul(ring.unity, a) != a:
                raise RingAxiomError("unity-identity", (ring.unity, a))


def _find_unity(ring: FiniteRing) -> int | None:
    for u in range(ring.order):
        if all(ring.mul(u, a) == a for a in range(ring.order)):
            return u
    return None


def table_ring(
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    zero: int,
    *,
    label: str | None = None,
    element_names: Sequence[str] | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteRing:
    """Ring given by explicit row-major Cayley tables.

    Axioms are validated exhaustively; unity is located by scan and left
    None when absent.
    """
    n = len(add_table)
    if n < 1:
        raise RingSpecError("table: empty addition table")
    _check_cap(n, order_cap)
    for name, tbl in (("add", add_table), ("mul", mul_table)):
        if len(tbl) != n or any(len(row) != n for row in tbl):
            raise RingSpecError(f"table: {name} table is not {n}x{n}")
        for i, row in enumerate(tbl):
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise RingSpecError(f"table: {name}[{i}][{j}] = {v!r} out of range")
    if not 0 <= zero < n:
        raise RingSpecError(f"table: zero index {zero} out of range")
    add_rows = tuple(tuple(row) for row in add_table)
    mul_rows = tuple(tuple(row) for row in mul_table)
    if element_names is None:
        names = tuple(str(i) for i in range(n))
    else:
        if len(element_names) != n:
            raise RingSpecError("table: element name count does not match order")
        names = tuple(element_names)
    # labels must stay comma free, CSV output relies on it
    ring = FiniteRing(
        order=n,
        add=lambda a, b: add_rows[a][b],
        mul=lambda a, b: mul_rows[a][b],
        zero=zero,
        unity=None,
        label=label.replace(",", ";") if label is not None else f"table({n})",
        element_names=names,
    )
    validate_ring_axioms(ring)
    return replace(ring, unity=_find_unity(ring))


def units(ring: FiniteRing) -> UnitGroup:
    """The unit group; raises NoUnityError when the ring has no unity."""
    if ring.unity is None:
        raise NoUnityError(ring.label)
    e = ring.unity
    inverse_of: dict[int, int] = {}
    for x in range(ring.order):
        if x in inverse_of:
            continue
        for y in range(ring.order):
            if ring.mul(x, y) == e:
                inverse_of[x] = y
                inverse_of[y] = x
                break
    members = tuple(sorted(inverse_of))
    return UnitGroup(ring=ring, units=members, inverse_of=inverse_of)


def self_inverse_count(ug: UnitGroup) -> int:
    """Number of units equal to their own inverse."""
    return sum(1 for x in ug.units if ug.inverse_of[x] == x)


def inverse_pair_count(ug: UnitGroup) -> int:
    """Number of unordered pairs {x, y}, x != y, with x * y = unity."""
    return (len(ug.units) - self_inverse_count(ug)) // 2


def characteristic(ring: FiniteRing) -> int:
    """Least n >= 1 with n.x = 0 for all x; additive order of unity if present."""
    if ring.unity is not None:
        return _additive_order(ring, ring.unity)
    result = 1
    for x in range(ring.order):
        result = math.lcm(result, _additive_order(ring, x))
    return result


def _additive_order(ring: FiniteRing, x: int) -> int:
    acc = x
    n = 1
    while acc != ring.zero:
        acc = ring.add(acc, x)
        n += 1
    return n


def is_boolean(ring: FiniteRing) -> bool:
    """True when the ring has unity and every element is idempotent."""
    if ring.unity is None:
        return False
    return all(ring.mul(x, x) == x for x in range(ring.order))


def cyclic_residues(ring: FiniteRing) -> tuple[int, ...] | None:
    """Residue map for rings isomorphic to Z/order, else None.

    When the additive orbit of unity covers the ring, every element is
    k.unity for a unique k in 0 .. order-1; the result maps element index
    to that k.
    """
    if ring.unity is None:
        return None
    residue = [-1] * ring.order
    acc = ring.zero
    for k in range(ring.order):
        if residue[acc] != -1:
            return None
        residue[acc] = k
        acc = ring.add(acc, ring.unity)
    if acc != ring.zero:
        return None
    return tuple(residue)


def is_cyclic(ring: FiniteRing) -> bool:
    """True when the ring is isomorphic to Z/order."""
    return cyclic_residues(ring) is not None


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RingSpecError(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise RingSpecError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return parts


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise RingSpecError(f"{what}: expected an integer, got {text!r}") from None


def parse_ring_spec(text: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Parse a ring family spec string.

    Grammar: ``zmod:N``, ``gf:P^K`` (or ``gf:P``), ``bool:N``,
    ``prod:(spec,spec,...)`` with nesting, and ``table:@file.json``.
    """
    spec = text.strip()
    if ":" not in spec:
        raise RingSpecError(f"malformed ring spec {text!r}")
    family, _, arg = spec.partition(":")
    family = family.strip()
    arg = arg.strip()
    if family == "zmod":
        return zmod(_parse_int(arg, "zmod"), order_cap=order_cap)
    if family == "gf":
        if "^" in arg:
            p_text, _, k_text = arg.partition("^")
            p = _parse_int(p_text, "gf")
            k = _parse_int(k_text, "gf")
        else:
            p, k = _parse_int(arg, "gf"), 1
        return gf(p, k, order_cap=order_cap)
    if family == "bool":
        return boolean_ring(_parse_int(arg, "bool"), order_cap=order_cap)
    if family == "prod":
        if not (arg.startswith("(") and arg.endswith(")")):
            raise RingSpecError(f"prod: expected parenthesized component list in {text!r}")
        inner = arg[1:-1]
        if not inner.strip():
            raise RingSpecError("prod: empty component list")
        comps = [parse_ring_spec(c, order_cap=order_cap) for c in _split_top_level(inner)]
        return direct_product(comps, order_cap=order_cap)
    if family == "table":
        if not arg.startswith("@"):
            raise RingSpecError("table: expected @<path to json file>")
        path = arg[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise RingSpecError(f"table: cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise RingSpecError(f"table: invalid JSON in {path}: {exc}") from None
        return table_ring_from_json(doc, order_cap=order_cap)
    raise RingSpecError(f"unknown ring family {family!r}")


def table_ring_from_json(doc: object, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Build a table ring from a parsed JSON document.

    Required keys: order, add, mul (row-major matrices), zero.  Optional:
    label, element_names.
    """
    if not isinstance(doc, dict):
        raise RingSpecError("table: document must be a JSON object")
    for key in ("order", "add", "mul", "zero"):
        if key not in doc:
            raise RingSpecError(f"table: missing key {key!r}")
    order = doc["order"]
    if not isinstance(order, int) or order < 1:
        raise RingSpecError(f"table: order must be a positive integer, got {order!r}")
    if not isinstance(doc["add"], list) or not isinstance(doc["mul"], list):
        raise RingSpecError("table: add and mul must be matrices")
    if len(doc["add"]) != order or len(doc["mul"]) != order:
        raise RingSpecError("table: matrix size does not match order")
    if not isinstance(doc["zero"], int):
        raise RingSpecError("table: zero must be an element index")
    return table_ring(
        doc["add"],
        doc["mul"],
        doc["zero"],
        label=doc.get("label"),
        element_names=doc.get("element_names"),
        order_cap=order_cap,
    )
