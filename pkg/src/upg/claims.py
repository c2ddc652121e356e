"""Registry of finite-ring claims about unity product graphs.

Each claim binds a hypothesis (``applicable``) and a conclusion
(``check``) over one ring.  Sweeps evaluate claims across ring families
and report pass/fail/not_applicable/hypothesis_gap verdicts; fails and
gaps always carry a witness.  The harness computes graph truth and
compares: a false conclusion is reported as fail, never suppressed.

Trichotomy-style claims (the K1/K2 structure splits on the count of
square roots of unity) emit hypothesis_gap for rings outside every
stated branch, as do the girth statements at exactly three units and
the hamiltonicity equivalence at exactly three units.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Mapping, Sequence

from . import invariants as inv
from .graphs import (
    SimpleGraph,
    complement,
    component_masks,
    decompose_matching_structure,
    is_complete,
    recognize_complete_multipartite,
    unity_product_graph,
)
from .rings import (
    DEFAULT_ORDER_CAP,
    FiniteRing,
    UnitGroup,
    boolean_ring,
    cyclic_residues,
    gf,
    is_boolean,
    is_prime,
    parse_ring_spec,
    units,
    zmod,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"
HYPOTHESIS_GAP = "hypothesis_gap"
SKIPPED = "skipped"

Witness = Mapping[str, object]


class UnknownClaimError(KeyError):
    """A claim id filter referenced an unregistered id."""

    def __init__(self, claim_id: str):
        super().__init__(claim_id)
        self.claim_id = claim_id


class RingContext:
    """Lazy per-ring computation cache shared by all claim checks.

    Claims touch only the quantities they need, so cheap structural
    claims never trigger the NP-hard solvers.
    """

    def __init__(
        self,
        ring: FiniteRing,
        *,
        planarity_limit: int = inv.DEFAULT_PLANARITY_LIMIT,
        hamiltonian_limit: int = inv.DEFAULT_HAMILTONIAN_LIMIT,
    ):
        self.ring = ring
        self.planarity_limit = planarity_limit
        self.hamiltonian_limit = hamiltonian_limit

    @cached_property
    def unit_group(self) -> UnitGroup:
        return units(self.ring)

    @property
    def unit_count(self) -> int:
        return len(self.unit_group.units)

    @cached_property
    def upg(self) -> SimpleGraph:
        return unity_product_graph(self.unit_group)

    @cached_property
    def comp(self) -> SimpleGraph:
        return complement(self.upg)

    @cached_property
    def decomposition(self):
        return decompose_matching_structure(self.upg)

    @property
    def isolated(self) -> int:
        return self.decomposition.isolated

    @property
    def pairs(self) -> int:
        return self.decomposition.pairs

    @cached_property
    def residues(self) -> tuple[int, ...] | None:
        return cyclic_residues(self.ring)

    @property
    def cyclic(self) -> bool:
        return self.residues is not None

    @cached_property
    def boolean(self) -> bool:
        return is_boolean(self.ring)

    @cached_property
    def upg_components(self) -> int:
        return len(component_masks(self.upg))

    @cached_property
    def comp_connected(self) -> bool:
        return len(component_masks(self.comp)) <= 1

    @cached_property
    def comp_complete(self) -> bool:
        return is_complete(self.comp)

    @cached_property
    def upg_girth(self):
        return inv.girth(self.upg)

    @cached_property
    def comp_girth(self):
        return inv.girth(self.comp)

    @cached_property
    def upg_diameter_radius(self):
        diameter, radius, _ = inv.eccentricity_profile(self.upg)
        return diameter, radius

    @cached_property
    def comp_diameter_radius(self):
        diameter, radius, _ = inv.eccentricity_profile(self.comp)
        return diameter, radius

    @cached_property
    def upg_domination(self) -> int:
        return inv.domination_number(self.upg)

    @cached_property
    def comp_domination(self) -> int:
        return inv.domination_number(self.comp)

    @cached_property
    def upg_clique(self) -> int:
        return inv.clique_number(self.upg)

    @cached_property
    def comp_clique(self) -> int:
        return inv.clique_number(self.comp)

    @cached_property
    def upg_chromatic(self) -> int:
        return inv.chromatic_number(self.upg)

    @cached_property
    def comp_chromatic(self) -> int:
        return inv.chromatic_number(self.comp)

    @cached_property
    def upg_planar(self) -> bool:
        return inv.is_planar(self.upg, search_limit=self.planarity_limit)

    @cached_property
    def comp_planar(self) -> bool:
        return inv.is_planar(self.comp, search_limit=self.planarity_limit)

    @cached_property
    def upg_hamiltonian(self) -> bool:
        return inv.is_hamiltonian(self.upg, search_limit=self.hamiltonian_limit)

    @cached_property
    def comp_hamiltonian(self) -> bool:
        return inv.is_hamiltonian(self.comp, search_limit=self.hamiltonian_limit)

    def unit_residues(self) -> tuple[int, ...]:
        """Canonical residues of the units, for rings isomorphic to Z/n."""
        assert self.residues is not None
        return tuple(self.residues[x] for x in self.unit_group.units)


@dataclass(frozen=True)
class Claim:
    """One verifiable statement over a single finite ring.

    ``applicable`` decides whether the hypothesis covers the ring (it may
    also admit known boundary rings so ``check`` can report a gap);
    ``check`` is only invoked when applicable and returns an outcome with
    an optional witness.
    """

    claim_id: str
    statement: str
    applicable: Callable[[RingContext], bool]
    check: Callable[[RingContext], "tuple[str, Witness | None]"]


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    ring_label: str
    outcome: str
    witness: Witness | None

    def __post_init__(self):
        if self.outcome in (FAIL, HYPOTHESIS_GAP, SKIPPED):
            assert self.witness is not None


def _divides_24(n: int) -> bool:
    return n >= 1 and 24 % n == 0


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _composite(k: int) -> bool:
    return k >= 4 and not is_prime(k)


def _has_unity(ctx: RingContext) -> bool:
    return ctx.ring.unity is not None


def _fail(expected: object, computed: object, **extra: object):
    witness: dict[str, object] = {"expected": expected, "computed": computed}
    witness.update(extra)
    return FAIL, witness


def _check_boolean_trivial(ctx: RingContext):
    if ctx.upg.n == 1 and ctx.upg.edge_count == 0:
        return PASS, None
    return _fail("trivial graph K1", f"{ctx.upg.n} vertices {ctx.upg.edge_count} edges")


def _check_upg_disconnected(ctx: RingContext):
    if ctx.upg_components >= 2:
        return PASS, None
    return _fail("disconnected", "connected", components=ctx.upg_components)


def _check_comp_connected(ctx: RingContext):
    if ctx.comp_connected:
        return PASS, None
    return _fail("connected", "disconnected")


def _check_two_isolated(ctx: RingContext):
    if ctx.isolated == 2:
        return PASS, None
    return _fail(2, ctx.isolated, quantity="isolated vertices")


def _check_four_isolated(ctx: RingContext):
    if ctx.isolated == 4:
        return PASS, None
    return _fail(4, ctx.isolated, quantity="isolated vertices")


def _check_trichotomy(ctx: RingContext):
    deco = ctx.decomposition
    if not deco.valid:
        return _fail("disjoint union of K1 and K2", "vertex of degree above 1")
    if deco.pairs == 0:
        return PASS, None
    if deco.isolated in (2, 4):
        return PASS, None
    return HYPOTHESIS_GAP, {
        "isolated": deco.isolated,
        "pairs": deco.pairs,
        "detail": "no stated branch covers this square-root-of-unity count",
    }


def _check_multipartite_form(ctx: RingContext):
    profile = recognize_complete_multipartite(ctx.comp)
    expected = tuple(sorted([1] * ctx.isolated + [2] * ctx.pairs))
    if not profile.valid or profile.part_sizes != expected:
        return _fail(
            f"complete multipartite with parts {expected}",
            f"parts {profile.part_sizes}" if profile.valid else "not complete multipartite",
        )
    if ctx.pairs == 0:
        return PASS, None
    if ctx.isolated in (2, 4):
        return PASS, None
    return HYPOTHESIS_GAP, {
        "isolated": ctx.isolated,
        "pairs": ctx.pairs,
        "detail": "no stated multipartite shape covers this part profile",
    }


def _check_self_inverse_units(ctx: RingContext):
    if ctx.pairs == 0:
        return PASS, None
    ug = ctx.unit_group
    for x in ug.units:
        y = ug.inverse_of[x]
        if y != x:
            return _fail(
                "every unit self-inverse",
                f"{ctx.ring.element_name(x)} inverse is {ctx.ring.element_name(y)}",
            )
    return PASS, None


def _check_upg_edgeless(ctx: RingContext):
    if ctx.upg.edge_count == 0:
        return PASS, None
    u, v = ctx.upg.edges()[0]
    return _fail("edgeless", f"edge {ctx.upg.labels[u]}-{ctx.upg.labels[v]}")


def _check_comp_complete(ctx: RingContext):
    if ctx.comp_complete:
        return PASS, None
    return _fail("complete graph", f"{ctx.comp.edge_count} edges on {ctx.comp.n} vertices")


def _check_upg_girth_inf(ctx: RingContext):
    if ctx.upg_girth == inv.INFINITY:
        return PASS, None
    return _fail("inf", inv.fmt_extended(ctx.upg_girth), quantity="girth")


def _gap_three_units(ctx: RingContext):
    return HYPOTHESIS_GAP, {
        "units": 3,
        "complement_girth": inv.fmt_extended(ctx.comp_girth),
        "detail": "no girth statement covers rings with exactly three units",
    }


def _check_comp_girth_inf(ctx: RingContext):
    if ctx.unit_count == 3:
        return _gap_three_units(ctx)
    if ctx.comp_girth == inv.INFINITY:
        return PASS, None
    return _fail("inf", inv.fmt_extended(ctx.comp_girth), quantity="complement girth")


def _check_comp_girth_three(ctx: RingContext):
    if ctx.unit_count == 3:
        return _gap_three_units(ctx)
    if ctx.comp_girth == 3:
        return PASS, None
    return _fail(3, inv.fmt_extended(ctx.comp_girth), quantity="complement girth")


def _check_upg_diam_rad_inf(ctx: RingContext):
    diameter, radius = ctx.upg_diameter_radius
    if diameter == inv.INFINITY and radius == inv.INFINITY:
        return PASS, None
    return _fail(
        "diameter inf and radius inf",
        f"diameter {inv.fmt_extended(diameter)} radius {inv.fmt_extended(radius)}",
    )


def _check_comp_diam2_rad1(ctx: RingContext):
    diameter, radius = ctx.comp_diameter_radius
    if diameter == 2 and radius == 1:
        return PASS, None
    return _fail(
        "diameter 2 and radius 1",
        f"diameter {inv.fmt_extended(diameter)} radius {inv.fmt_extended(radius)}",
    )


def _check_diam_rad_one_iff_cyclic_24(ctx: RingContext):
    diameter, radius = ctx.comp_diameter_radius
    metric_one = diameter == 1 and radius == 1
    family = ctx.cyclic and ctx.ring.order > 2 and _divides_24(ctx.ring.order)
    if family and not metric_one:
        return _fail(
            "diameter 1 and radius 1",
            f"diameter {inv.fmt_extended(diameter)} radius {inv.fmt_extended(radius)}",
            direction="forward",
        )
    if metric_one and not family:
        return _fail(
            "ring isomorphic to Z/n with n over 2 dividing 24",
            ctx.ring.label,
            direction="converse",
        )
    return PASS, None


def _check_upg_domination(ctx: RingContext):
    expected = ctx.isolated + ctx.pairs
    if ctx.upg_domination == expected:
        return PASS, None
    return _fail(expected, ctx.upg_domination, quantity="domination number")


def _check_comp_domination_one(ctx: RingContext):
    if ctx.comp_domination == 1:
        return PASS, None
    return _fail(1, ctx.comp_domination, quantity="complement domination number")


def _check_upg_clique(ctx: RingContext):
    if ctx.pairs >= 1:
        if ctx.upg_clique == 2:
            return PASS, None
        return _fail(2, ctx.upg_clique, quantity="clique number")
    # edgeless case: every vertex is its own 1-clique; the stated count m
    # tallies those cliques, while the standard clique number is 1
    if ctx.upg_clique == 1 and ctx.upg_components == ctx.unit_count:
        return PASS, None
    return _fail(
        f"clique number 1 with {ctx.unit_count} one-cliques",
        f"clique number {ctx.upg_clique} with {ctx.upg_components} components",
    )


def _check_upg_chromatic(ctx: RingContext):
    expected = 1 if ctx.pairs == 0 else 2
    if ctx.upg_chromatic == expected:
        return PASS, None
    return _fail(expected, ctx.upg_chromatic, quantity="chromatic number")


def _check_prop_52(ctx: RingContext):
    m = ctx.unit_count
    if m not in (2, 4, 8):
        return _fail("unit count in {2 4 8}", m, quantity="unit count")
    if ctx.comp_chromatic == m and ctx.comp_clique == m:
        return PASS, None
    return _fail(
        f"complement chromatic {m} and clique {m}",
        f"chromatic {ctx.comp_chromatic} clique {ctx.comp_clique}",
    )


def _check_prime_field_comp_coloring(ctx: RingContext):
    expected_chromatic = ctx.unit_count - ctx.pairs
    expected_clique = (ctx.ring.order + 1) // 2
    if ctx.comp_chromatic == expected_chromatic and ctx.comp_clique == expected_clique:
        return PASS, None
    return _fail(
        f"complement chromatic {expected_chromatic} and clique {expected_clique}",
        f"chromatic {ctx.comp_chromatic} clique {ctx.comp_clique}",
    )


def _check_upg_planar(ctx: RingContext):
    if ctx.upg_planar:
        return PASS, None
    return _fail("planar", "nonplanar")


def _check_comp_planar_iff(ctx: RingContext):
    small = ctx.unit_count <= 4
    planar = ctx.comp_planar
    if small and not planar:
        return _fail("planar", "nonplanar", direction="forward", units=ctx.unit_count)
    if planar and not small:
        return _fail("at most 4 units", ctx.unit_count, direction="converse")
    return PASS, None


def _check_upg_not_hamiltonian(ctx: RingContext):
    if not ctx.upg_hamiltonian:
        return PASS, None
    return _fail("not hamiltonian", "hamiltonian")


def _check_comp_hamiltonian_iff(ctx: RingContext):
    many = ctx.unit_count > 2
    ham = ctx.comp_hamiltonian
    if many and not ham:
        witness: dict[str, object] = {
            "expected": "hamiltonian",
            "computed": "not hamiltonian",
            "direction": "forward",
            "units": ctx.unit_count,
        }
        if ctx.isolated == 1 and ctx.pairs == 1:
            witness["structure"] = "complement is the path P3 which has no hamiltonian cycle"
        return FAIL, witness
    if ham and not many:
        return _fail("more than 2 units", ctx.unit_count, direction="converse")
    return PASS, None


def builtin_claims() -> tuple[Claim, ...]:
    """All registered claims, in registry order; ids are stable."""
    return _CLAIMS


def claims_by_id() -> dict[str, Claim]:
    return {c.claim_id: c for c in _CLAIMS}


def lookup(claim_id: str) -> Claim:
    try:
        return claims_by_id()[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


_CLAIMS: tuple[Claim, ...] = (
    Claim(
        "thm-3.1",
        "The unity product graph of a boolean ring (every element idempotent) "
        "is the trivial graph on one vertex.",
        lambda ctx: ctx.boolean,
        _check_boolean_trivial,
    ),
    Claim(
        "thm-3.2",
        "A unity product graph with at least two vertices is disconnected.",
        lambda ctx: _has_unity(ctx) and ctx.unit_count >= 2,
        _check_upg_disconnected,
    ),
    Claim(
        "thm-3.3",
        "A complement unity product graph with at least two vertices is connected.",
        lambda ctx: _has_unity(ctx) and ctx.unit_count >= 2,
        _check_comp_connected,
    ),
    Claim(
        "thm-3.4",
        "Over a ring of odd prime order, the unity product graph has exactly "
        "two isolated vertices.",
        lambda ctx: _has_unity(ctx)
        and ctx.ring.order % 2 == 1
        and is_prime(ctx.ring.order),
        _check_two_isolated,
    ),
    Claim(
        "thm-3.5",
        "Over the integers modulo 2^m with m at least 3, the unity product "
        "graph has exactly four isolated vertices.",
        lambda ctx: ctx.cyclic
        and ctx.ring.order >= 8
        and _is_power_of_two(ctx.ring.order),
        _check_four_isolated,
    ),
    Claim(
        "thm-3.6",
        "The unity product graph is 2K1 + (m-2)K2, or 4K1 + (m-4)K2, or mK1, "
        "where m counts the mutual-inverse sets.",
        _has_unity,
        _check_trichotomy,
    ),
    Claim(
        "thm-3.7",
        "The complement unity product graph is complete multipartite with "
        "parts of size 2 and either two or four parts of size 1, or is the "
        "complete graph when every unit is self-inverse.",
        _has_unity,
        _check_multipartite_form,
    ),
    Claim(
        "prop-3.1",
        "If a ring isomorphic to Z/n has no composite canonical residue "
        "among its units, every unit is its own inverse.",
        lambda ctx: ctx.cyclic
        and not any(_composite(k) for k in ctx.unit_residues()),
        _check_self_inverse_units,
    ),
    Claim(
        "prop-3.2-2",
        "Over Z/n with n above 1 dividing 24, the unity product graph is "
        "edgeless.",
        lambda ctx: ctx.cyclic and ctx.ring.order > 1 and _divides_24(ctx.ring.order),
        _check_upg_edgeless,
    ),
    Claim(
        "prop-3.3-2",
        "Over Z/n with n above 2 dividing 24, the complement unity product "
        "graph is complete.",
        lambda ctx: ctx.cyclic and ctx.ring.order > 2 and _divides_24(ctx.ring.order),
        _check_comp_complete,
    ),
    Claim(
        "thm-4.1",
        "The unity product graph is acyclic: its girth is infinite.",
        _has_unity,
        _check_upg_girth_inf,
    ),
    Claim(
        "thm-4.2",
        "With at most two units the complement unity product graph has "
        "infinite girth (boundary: exactly three units is not covered).",
        lambda ctx: _has_unity(ctx) and ctx.unit_count <= 3,
        _check_comp_girth_inf,
    ),
    Claim(
        "thm-4.3",
        "With more than three units the complement unity product graph has "
        "girth 3 (boundary: exactly three units is not covered).",
        lambda ctx: _has_unity(ctx) and ctx.unit_count >= 3,
        _check_comp_girth_three,
    ),
    Claim(
        "thm-4.4",
        "With at least two units, the unity product graph has infinite "
        "diameter and infinite radius.",
        lambda ctx: _has_unity(ctx) and ctx.unit_count >= 2,
        _check_upg_diam_rad_inf,
    ),
    Claim(
        "thm-4.5",
        "When the complement unity product graph is not complete, its "
        "diameter is 2 and its radius is 1.",
        lambda ctx: _has_unity(ctx) and not ctx.comp_complete,
        _check_comp_diam2_rad1,
    ),
    Claim(
        "prop-4.1-2",
        "The complement unity product graph has diameter 1 and radius 1 "
        "exactly when the ring is isomorphic to Z/n with n above 2 dividing "
        "24 (restricted to finite rings).",
        _has_unity,
        _check_diam_rad_one_iff_cyclic_24,
    ),
    Claim(
        "thm-5.1",
        "The domination number of the unity product graph equals the number "
        "of mutual-inverse sets (self-inverse units plus inverse pairs).",
        _has_unity,
        _check_upg_domination,
    ),
    Claim(
        "prop-5.2",
        "Over Z/n with n above 2 dividing 24, the complement unity product "
        "graph has chromatic and clique number equal to the unit count, one "
        "of 2, 4 or 8.",
        lambda ctx: ctx.cyclic and ctx.ring.order > 2 and _divides_24(ctx.ring.order),
        _check_prop_52,
    ),
    Claim(
        "thm-5.3",
        "The complement unity product graph has domination number 1.",
        _has_unity,
        _check_comp_domination_one,
    ),
    Claim(
        "thm-5.4",
        "The clique number of the unity product graph is 2 when an inverse "
        "pair exists; in the edgeless case every vertex is a 1-clique (the "
        "stated value m counts those cliques; the standard clique number is 1).",
        _has_unity,
        _check_upg_clique,
    ),
    Claim(
        "thm-5.5",
        "The chromatic number of the unity product graph is 1 when edgeless "
        "and 2 otherwise.",
        _has_unity,
        _check_upg_chromatic,
    ),
    Claim(
        "thm-5.7",
        "Over a field of prime order at least 5, the complement unity "
        "product graph has chromatic number equal to its vertex count minus "
        "the number of size-2 parts, and clique number (p+1)/2.",
        lambda ctx: _has_unity(ctx)
        and ctx.ring.order >= 5
        and is_prime(ctx.ring.order),
        _check_prime_field_comp_coloring,
    ),
    Claim(
        "thm-6.1",
        "The unity product graph is planar.",
        _has_unity,
        _check_upg_planar,
    ),
    Claim(
        "thm-6.2",
        "The complement unity product graph is planar exactly when the ring "
        "has at most four units.",
        _has_unity,
        _check_comp_planar_iff,
    ),
    Claim(
        "thm-6.3",
        "The unity product graph is never hamiltonian.",
        _has_unity,
        _check_upg_not_hamiltonian,
    ),
    Claim(
        "thm-6.4",
        "The complement unity product graph is hamiltonian exactly when the "
        "ring has more than two units.",
        _has_unity,
        _check_comp_hamiltonian_iff,
    ),
)


_DEFAULT_PRODUCT_SPECS = (
    "prod:(zmod:2,zmod:3)",
    "prod:(zmod:2,zmod:4)",
    "prod:(zmod:3,zmod:3)",
    "prod:(zmod:2,zmod:2,zmod:3)",
    "prod:(zmod:4,zmod:4)",
    "prod:(gf:2^2,zmod:2)",
)

_DEFAULT_GF_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)

DEFAULT_ZMOD_MAX = 60
DEFAULT_BOOL_MAX = 6


def default_rings(
    *,
    zmod_max: int = DEFAULT_ZMOD_MAX,
    order_cap: int = DEFAULT_ORDER_CAP,
    include: Sequence[str] = (),
) -> list[FiniteRing]:
    """The default sweep families plus any extra ring specs.

    Modular rings 2..zmod_max, fields of order up to 16, boolean rings up
    to 2^6, and a fixed selection of direct products.  Duplicate labels
    are dropped, first occurrence wins.
    """
    rings: list[FiniteRing] = []
    rings.extend(zmod(n, order_cap=order_cap) for n in range(2, zmod_max + 1))
    for q in _DEFAULT_GF_ORDERS:
        p, k = _prime_power(q)
        rings.append(gf(p, k, order_cap=order_cap))
    rings.extend(boolean_ring(n, order_cap=order_cap) for n in range(1, DEFAULT_BOOL_MAX + 1))
    rings.extend(parse_ring_spec(s, order_cap=order_cap) for s in _DEFAULT_PRODUCT_SPECS)
    rings.extend(parse_ring_spec(s, order_cap=order_cap) for s in include)
    seen: set[str] = set()
    unique = []
    for ring in rings:
        if ring.label not in seen:
            seen.add(ring.label)
            unique.append(ring)
    return unique


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def run_sweep(
    claims: Sequence[Claim],
    rings: Sequence[FiniteRing],
    *,
    planarity_limit: int = inv.DEFAULT_PLANARITY_LIMIT,
    hamiltonian_limit: int = inv.DEFAULT_HAMILTONIAN_LIMIT,
) -> list[ClaimVerdict]:
    """Evaluate every claim against every ring.

    Rings without unity and solver refusals (vertex bounds) yield skipped
    verdicts with a reason; everything else is pass, fail, hypothesis_gap
    or not_applicable.  Result is sorted by (claim id, ring label).
    """
    verdicts: list[ClaimVerdict] = []
    for ring in rings:
        ctx = RingContext(
            ring,
            planarity_limit=planarity_limit,
            hamiltonian_limit=hamiltonian_limit,
        )
        for claim in claims:
            verdicts.append(_evaluate(claim, ctx))
    verdicts.sort(key=lambda v: (v.claim_id, v.ring_label))
    return verdicts


def _evaluate(claim: Claim, ctx: RingContext) -> ClaimVerdict:
    label = ctx.ring.label
    if ctx.ring.unity is None:
        return ClaimVerdict(
            claim.claim_id, label, SKIPPED, {"reason": "ring has no unity element"}
        )
    try:
        if not claim.applicable(ctx):
            return ClaimVerdict(claim.claim_id, label, NOT_APPLICABLE, None)
        outcome, witness = claim.check(ctx)
    except inv.VertexBoundError as exc:
        return ClaimVerdict(
            claim.claim_id,
            label,
            SKIPPED,
            {"reason": f"{exc.invariant} refused beyond {exc.bound} vertices"},
        )
    return ClaimVerdict(claim.claim_id, label, outcome, witness)


_OUTCOME_ORDER = (PASS, FAIL, HYPOTHESIS_GAP, NOT_APPLICABLE, SKIPPED)


def _witness_text(witness: Witness | None) -> str:
    if not witness:
        return ""
    parts = [f"{key}={witness[key]}" for key in witness]
    return "; ".join(parts).replace(",", ";")


def summarize(verdicts: Sequence[ClaimVerdict]) -> dict[str, int]:
    counts = {outcome: 0 for outcome in _OUTCOME_ORDER}
    for v in verdicts:
        counts[v.outcome] += 1
    return counts


def render_text(verdicts: Sequence[ClaimVerdict]) -> str:
    """Grouped plain-text report: per-claim counts, then non-pass detail."""
    registry = claims_by_id()
    lines = []
    by_claim: dict[str, list[ClaimVerdict]] = {}
    for v in verdicts:
        by_claim.setdefault(v.claim_id, []).append(v)
    for claim_id in sorted(by_claim):
        rows = by_claim[claim_id]
        counts = summarize(rows)
        count_text = "  ".join(f"{o} {counts[o]}" for o in _OUTCOME_ORDER)
        lines.append(f"{claim_id}: {count_text}")
        claim = registry.get(claim_id)
        if claim is not None:
            lines.append(f"  {claim.statement}")
        for v in rows:
            if v.outcome in (FAIL, HYPOTHESIS_GAP, SKIPPED):
                lines.append(f"  {v.outcome} {v.ring_label}: {_witness_text(v.witness)}")
    totals = summarize(verdicts)
    total_text = "  ".join(f"{o} {totals[o]}" for o in _OUTCOME_ORDER)
    lines.append(f"summary: verdicts {len(verdicts)}  {total_text}")
    return "\n".join(lines) + "\n"


def render_json(verdicts: Sequence[ClaimVerdict]) -> str:
    registry = claims_by_id()
    by_claim: dict[str, list[ClaimVerdict]] = {}
    for v in verdicts:
        by_claim.setdefault(v.claim_id, []).append(v)
    claims_doc = []
    for claim_id in sorted(by_claim):
        rows = by_claim[claim_id]
        claim = registry.get(claim_id)
        claims_doc.append(
            {
                "claim_id": claim_id,
                "statement": claim.statement if claim else "",
                "counts": summarize(rows),
                "verdicts": [
                    {
                        "ring": v.ring_label,
                        "outcome": v.outcome,
                        "witness": dict(v.witness) if v.witness else None,
                    }
                    for v in rows
                ],
            }
        )
    doc = {"summary": summarize(verdicts), "claims": claims_doc}
    return json.dumps(doc, indent=2) + "\n"


def render_csv(verdicts: Sequence[ClaimVerdict]) -> str:
    """Flat CSV: claim_id,ring,outcome,witness with comma-free fields."""
    lines = ["claim_id,ring,outcome,witness"]
    for v in verdicts:
        lines.append(
            f"{v.claim_id},{v.ring_label},{v.outcome},{_witness_text(v.witness)}"
        )
    return "\n".join(lines) + "\n"
