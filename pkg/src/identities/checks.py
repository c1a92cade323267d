"""Theorem-level checks over any lattice backend.

Distributive lattices are exactly those where L = U; modular ones satisfy
L <= U. The checks here turn those statements, their supporting identities
and the lattice axioms themselves into reports with reproducible
counterexamples.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from src.lattices.backends import ChainLattice, DivisorIntervalLattice
from src.lattices.base import Element, LatticeDescriptor, require_quintuple
from src.quintary.chain import chain_closed_form
from src.quintary.symmetry import KLEIN_GROUP, apply_symmetry
from src.quintary.terms import (
    L_TERMS,
    U_TERMS,
    TermId,
    big_l,
    big_u,
    eval_term,
    eval_terms,
    median_term,
)
from src.shared.errors import DomainError

from .report import CheckReport, combine_reports, point_report
from .search import (
    CLOSED_FORMS,
    LU_EQUALITY,
    LU_INCLUSION,
    QUINTUPLE_LABELS,
    SearchParameters,
    carrier_or_sampler,
    pairs_differ,
    resolve_parameters,
    search_quintuples,
    search_tuples,
)

logger = logging.getLogger(__name__)

Antitone = Callable[[Element], Element]


def check_LU_equality(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """L = U on every quintuple; holds exactly on distributive lattices."""
    return search_quintuples(lattice, LU_EQUALITY, params)


def check_LU_inclusion(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """L <= U on every quintuple; fails on lattices containing a pentagon."""
    return search_quintuples(lattice, LU_INCLUSION, params)


def check_closed_forms(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """L and U agree with both four-term closed forms."""
    return search_quintuples(lattice, CLOSED_FORMS, params)


def _triple_law(
    check: str,
    lattice: LatticeDescriptor,
    predicate: Callable[[Element, Element, Element], Optional[Dict[str, Any]]],
    params: Optional[SearchParameters],
    labels: Sequence[str] = ("u", "v", "w"),
) -> CheckReport:
    params = params or resolve_parameters()
    domain = carrier_or_sampler(lattice, params.window)
    return search_tuples(check, lattice.name, domain, 3, predicate, params, labels)


def check_distributive_law(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """u ^ (v v w) = (u ^ v) v (u ^ w)."""
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(u: Element, v: Element, w: Element) -> Optional[Dict[str, Any]]:
        return pairs_differ([("distributive", m(u, j(v, w)), j(m(u, v), m(u, w)))])

    return _triple_law("distributive law", lattice, predicate, params)


def check_modular_law(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """u <= w implies u v (v ^ w) = (u v v) ^ w."""
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(u: Element, v: Element, w: Element) -> Optional[Dict[str, Any]]:
        if not lattice.raw_leq(u, w):
            return None
        return pairs_differ([("modular", j(u, m(v, w)), m(j(u, v), w))])

    return _triple_law("modular law", lattice, predicate, params)


def check_median_law(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """(u v v) ^ (v v w) ^ (w v u) = (u ^ v) v (v ^ w) v (w ^ u)."""
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(u: Element, v: Element, w: Element) -> Optional[Dict[str, Any]]:
        dual = j(j(m(u, v), m(v, w)), m(w, u))
        return pairs_differ([("median", median_term(m, j, u, v, w), dual)])

    return _triple_law("median law", lattice, predicate, params)


def check_lattice_axioms(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """Semilattice laws, absorption, and that leq is an order with meet/join
    as glb/lub."""
    m, j, leq = lattice.raw_meet, lattice.raw_join, lattice.raw_leq

    def predicate(u: Element, v: Element, w: Element) -> Optional[Dict[str, Any]]:
        differing = pairs_differ(
            [
                ("meet commutativity", m(u, v), m(v, u)),
                ("join commutativity", j(u, v), j(v, u)),
                ("meet associativity", m(m(u, v), w), m(u, m(v, w))),
                ("join associativity", j(j(u, v), w), j(u, j(v, w))),
                ("meet idempotence", m(u, u), u),
                ("join idempotence", j(u, u), u),
                ("absorption u v (u ^ v)", j(u, m(u, v)), u),
                ("absorption u ^ (u v v)", m(u, j(u, v)), u),
            ]
        )
        if differing is not None:
            return differing
        if leq(u, v) and leq(v, u) and u != v:
            return {"antisymmetry": (u, v)}
        if leq(u, v) and leq(v, w) and not leq(u, w):
            return {"transitivity": (u, v, w)}
        if not (leq(m(u, v), u) and leq(m(u, v), v) and leq(u, j(u, v)) and leq(v, j(u, v))):
            return {"bounds": (m(u, v), j(u, v))}
        if leq(w, u) and leq(w, v) and not leq(w, m(u, v)):
            return {"greatest lower bound": (w, m(u, v))}
        if leq(u, w) and leq(v, w) and not leq(j(u, v), w):
            return {"least upper bound": (w, j(u, v))}
        return None

    return _triple_law("lattice axioms", lattice, predicate, params)


def _quintuple_law(
    check: str,
    lattice: LatticeDescriptor,
    predicate: Callable[..., Optional[Dict[str, Any]]],
    params: Optional[SearchParameters],
) -> CheckReport:
    params = params or resolve_parameters()
    domain = carrier_or_sampler(lattice, params.window)
    return search_tuples(
        check, lattice.name, domain, 5, predicate, params, QUINTUPLE_LABELS
    )


def check_klein_invariance(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """L and U are unchanged by every Klein four-group slot permutation."""
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(*q: Element) -> Optional[Dict[str, Any]]:
        base_l, base_u = big_l(m, j, *q), big_u(m, j, *q)
        for s in KLEIN_GROUP[1:]:
            moved = apply_symmetry(q, s)
            differing = pairs_differ(
                [
                    (f"L under {s.perm}", base_l, big_l(m, j, *moved)),
                    (f"U under {s.perm}", base_u, big_u(m, j, *moved)),
                ]
            )
            if differing is not None:
                return differing
        return None

    return _quintuple_law("Klein invariance", lattice, predicate, params)


def check_sandwich(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """L_i <= L and U <= U_i; on bounded lattices also L5 <= L and U <= U5."""
    bounded = lattice.bounds() is not None
    leq = lattice.raw_leq

    def predicate(*q: Element) -> Optional[Dict[str, Any]]:
        values = eval_terms(lattice, q)
        lower = [(t, TermId.L) for t in L_TERMS] + [(TermId.U, t) for t in U_TERMS]
        if bounded:
            lower += [(TermId.L5_3, TermId.L), (TermId.U, TermId.U5_2)]
        for small, large in lower:
            if not leq(values[small], values[large]):
                return {small.value: values[small], large.value: values[large]}
        return None

    return _quintuple_law("sandwich bounds", lattice, predicate, params)


def check_monotonicity(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """q <= q' slotwise implies L(q) <= L(q') and U(q) <= U(q').

    Comparable pairs are built as ``q'_i = q_i v r_i`` from ten elements.
    """
    m, j, leq = lattice.raw_meet, lattice.raw_join, lattice.raw_leq

    def predicate(*args: Element) -> Optional[Dict[str, Any]]:
        q, r = args[:5], args[5:]
        upper = tuple(j(qi, ri) for qi, ri in zip(q, r))
        for name, f in (("L", big_l), ("U", big_u)):
            if not leq(f(m, j, *q), f(m, j, *upper)):
                return {f"{name}(q)": f(m, j, *q), f"{name}(q')": f(m, j, *upper)}
        return None

    params = params or resolve_parameters()
    domain = carrier_or_sampler(lattice, params.window)
    labels = QUINTUPLE_LABELS + tuple(f"r_{s}" for s in QUINTUPLE_LABELS)
    return search_tuples(
        "monotonicity", lattice.name, domain, 10, predicate, params, labels
    )


def check_chain_closed_forms(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> CheckReport:
    """Whenever a chain case applies, its value equals L and U."""
    if not isinstance(lattice, ChainLattice):
        raise DomainError(f"chain closed forms need a chain, got {lattice.name}")
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(*q: Element) -> Optional[Dict[str, Any]]:
        closed = chain_closed_form(*q)
        if not closed.applies:
            return None
        return pairs_differ(
            [
                (f"case {closed.case} vs L", closed.value, big_l(m, j, *q)),
                (f"case {closed.case} vs U", closed.value, big_u(m, j, *q)),
            ]
        )

    return _quintuple_law("chain closed forms", lattice, predicate, params)


def diagonal_identities(
    lattice: LatticeDescriptor, q: Sequence[Element]
) -> List[Tuple[str, Element, Element]]:
    """``(name, lhs, rhs)`` for every diagonal identity instantiated from q."""
    x, a, y, b, z = require_quintuple(lattice, q)
    m, j = lattice.raw_meet, lattice.raw_join

    def lu(*args: Element) -> Tuple[Element, Element]:
        return big_l(m, j, *args), big_u(m, j, *args)

    checks: List[Tuple[str, Element, Element]] = []
    for name, args, expected in (
        ("L(x,z,y,x,z) = z ^ x", (x, z, y, x, z), m(z, x)),
        ("L(x,x,y,z,z) = x v z", (x, x, y, z, z), j(x, z)),
        ("L(x,y,y,y,z) = y", (x, y, y, y, z), y),
    ):
        lv, uv = lu(*args)
        checks += [(name, lv, expected), (name.replace("L(", "U(", 1), uv, expected)]

    extremes = lattice.bounds()
    if extremes is not None:
        zero, one = extremes
        for name, args, expected in (
            ("L(x,1,0,1,z) = x v z", (x, one, zero, one, z), j(x, z)),
            ("L(x,0,1,0,z) = x ^ z", (x, zero, one, zero, z), m(x, z)),
            ("L(x,1,1,0,z) = x", (x, one, one, zero, z), x),
            ("L(x,0,0,1,z) = z", (x, zero, zero, one, z), z),
        ):
            lv, uv = lu(*args)
            checks += [(name, lv, expected), (name.replace("L(", "U(", 1), uv, expected)]
        checks += [
            ("L(x,a,0,b,z) = L5", lu(x, a, zero, b, z)[0], j(m(b, z), m(a, x))),
            ("U(x,a,1,b,z) = U5", lu(x, a, one, b, z)[1], m(j(a, z), j(b, x))),
            ("L(x,0,y,b,z) = L2", lu(x, zero, y, b, z)[0], m(z, j(b, m(x, y)))),
            ("U(x,1,y,b,z) = U2", lu(x, one, y, b, z)[1], j(x, m(b, j(z, y)))),
        ]
    return checks


def verify_diagonal_identities(
    lattice: LatticeDescriptor, q: Sequence[Element]
) -> CheckReport:
    """Diagonal values where L and U agree in every lattice."""
    q = require_quintuple(lattice, q)
    checks = diagonal_identities(lattice, q)
    differing = pairs_differ(checks)
    return point_report(
        "diagonal identities", lattice.name, QUINTUPLE_LABELS, q, differing, len(checks)
    )


def cube_nodes(
    lattice: LatticeDescriptor, x: Element, a: Element, b: Element, z: Element
) -> Dict[str, Element]:
    """The three L5 and three U5 pairings of (x, a, b, z)."""
    q = (x, a, x, b, z)
    return {
        t.value: eval_term(lattice, q, t)
        for t in (
            TermId.L5_1,
            TermId.L5_2,
            TermId.L5_3,
            TermId.U5_1,
            TermId.U5_2,
            TermId.U5_3,
        )
    }


def verify_cube(
    lattice: LatticeDescriptor, x: Element, a: Element, b: Element, z: Element
) -> CheckReport:
    """The eight-element cube spanned by the L5 and U5 pairings.

    For ``{i, j, k} = {1, 2, 3}``: ``U_i ^ U_j = L_k`` and ``L_i v L_j = U_k``;
    all pairwise meets of the L's agree (bottom), all pairwise joins of the
    U's agree (top), and the eight nodes are closed under meet and join.
    """
    m, j = lattice.raw_meet, lattice.raw_join
    nodes = cube_nodes(lattice, x, a, b, z)
    lower = [nodes["L5_1"], nodes["L5_2"], nodes["L5_3"]]
    upper = [nodes["U5_1"], nodes["U5_2"], nodes["U5_3"]]
    checks: List[Tuple[str, Element, Element]] = []
    for i, k_ in ((0, 2), (1, 0), (2, 1)):
        jj = 3 - i - k_
        checks.append((f"U{i+1} ^ U{jj+1} = L{k_+1}", m(upper[i], upper[jj]), lower[k_]))
        checks.append((f"L{i+1} v L{jj+1} = U{k_+1}", j(lower[i], lower[jj]), upper[k_]))
    bottom = m(lower[0], lower[1])
    top = j(upper[0], upper[1])
    checks += [
        ("bottom L1 ^ L3", m(lower[0], lower[2]), bottom),
        ("bottom L2 ^ L3", m(lower[1], lower[2]), bottom),
        ("top U1 v U3", j(upper[0], upper[2]), top),
        ("top U2 v U3", j(upper[1], upper[2]), top),
    ]
    cube = lower + upper + [bottom, top]
    closed = all(m(u, v) in cube and j(u, v) in cube for u in cube for v in cube)
    differing = pairs_differ(checks)
    if differing is None and not closed:
        differing = {"closure": "cube is not closed under meet and join"}
    return point_report(
        "cube",
        lattice.name,
        ("x", "a", "b", "z"),
        (x, a, b, z),
        differing,
        len(checks) + len(cube) ** 2,
    )


def builtin_antitone(lattice: LatticeDescriptor) -> Antitone:
    """Complement on Boolean lattices, ``d -> KN/d`` on divisor intervals.

    Raises:
        DomainError: If the lattice has no built-in anti-automorphism
    """
    if lattice.is_boolean:
        return lattice.complement
    if isinstance(lattice, DivisorIntervalLattice):
        return lattice.conjugate
    raise DomainError(f"{lattice.name} has no built-in antitone map")


def check_antitone(
    lattice: LatticeDescriptor,
    phi: Antitone,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """phi(u v v) = phi(u) ^ phi(v) and phi(u ^ v) = phi(u) v phi(v)."""
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(u: Element, v: Element) -> Optional[Dict[str, Any]]:
        return pairs_differ(
            [
                ("phi(u v v)", phi(j(u, v)), m(phi(u), phi(v))),
                ("phi(u ^ v)", phi(m(u, v)), j(phi(u), phi(v))),
            ]
        )

    params = params or resolve_parameters()
    domain = carrier_or_sampler(lattice, params.window)
    return search_tuples(
        "antitone", lattice.name, domain, 2, predicate, params, ("u", "v")
    )


def transport_antitone(
    lattice: LatticeDescriptor,
    phi: Antitone,
    q: Optional[Sequence[Element]] = None,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """phi L(x,a,y,b,z) = U(phi x, phi b, phi y, phi a, phi z), and dually.

    phi is first verified to be antitone; a failure there is the report.
    Without ``q`` the transport identity is checked over all quintuples
    (or samples).
    """
    antitone = check_antitone(lattice, phi, params)
    if not antitone.holds:
        return antitone
    m, j = lattice.raw_meet, lattice.raw_join

    def predicate(*args: Element) -> Optional[Dict[str, Any]]:
        x, a, y, b, z = args
        image = (phi(x), phi(b), phi(y), phi(a), phi(z))
        return pairs_differ(
            [
                ("phi L = U(phi ...)", phi(big_l(m, j, *args)), big_u(m, j, *image)),
                ("phi U = L(phi ...)", phi(big_u(m, j, *args)), big_l(m, j, *image)),
            ]
        )

    if q is not None:
        q = require_quintuple(lattice, q)
        transport = point_report(
            "antitone transport", lattice.name, QUINTUPLE_LABELS, q, predicate(*q), 2
        )
    else:
        transport = _quintuple_law("antitone transport", lattice, predicate, params)
    return combine_reports("antitone transport", lattice.name, [antitone, transport])


class ExperimentReport(BaseModel):
    """Side-by-side evidence on modularity, distributivity and L <= U."""

    lattice: str
    modular: CheckReport
    distributive: CheckReport
    inclusion: CheckReport
    equality: CheckReport

    @property
    def contradicts_modular_inclusion(self) -> bool:
        """True if this lattice is modular yet L <= U fails."""
        return self.modular.holds and not self.inclusion.holds


def experiment_modular_inclusion(
    lattice: LatticeDescriptor, params: Optional[SearchParameters] = None
) -> ExperimentReport:
    """Collect evidence on whether modularity implies L <= U; asserts nothing."""
    report = ExperimentReport(
        lattice=lattice.name,
        modular=check_modular_law(lattice, params),
        distributive=check_distributive_law(lattice, params),
        inclusion=check_LU_inclusion(lattice, params),
        equality=check_LU_equality(lattice, params),
    )
    logger.info(
        f"Experiment on {lattice.name}: modular={report.modular.verdict}, "
        f"L<=U={report.inclusion.verdict}"
    )
    return report
