"""Exhaustive and sampled counter-model search.

Quintuple laws run vectorized: the carrier is encoded through the lattice's
``VectorOps``, the (a, y, b, z) grid is built once with ``np.meshgrid`` and
the outermost slot x is processed chunk by chunk. The reported
counterexample is always the first violation in enumeration order, with or
without worker threads. Spaces larger than the budget, and infinite
lattices, are sampled with a seeded ``random.Random``.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import (
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from src.lattices.base import Element, LatticeDescriptor, Window
from src.quintary.terms import big_l, big_u, l_dist_closed, u_dist_closed
from src.shared.config import get_settings
from src.shared.errors import EnumerationError

from .report import CheckReport, Counterexample

logger = logging.getLogger(__name__)

QUINTUPLE_LABELS = ("x", "a", "y", "b", "z")

Sampler = Callable[[random.Random], Element]
Domain = Union[Sequence[Element], Sampler]
Predicate = Callable[..., Optional[Dict[str, Any]]]


class QuintupleLaw(NamedTuple):
    """Named values of a quintuple and the pairs that must be related.

    ``relation`` is ``"eq"`` or ``"leq"``; ``sides(meet, join, x, a, y, b, z)``
    returns every named value and works on scalars and numpy arrays alike.
    """

    name: str
    relation: str
    sides: Callable[..., Dict[str, Any]]
    pairs: Tuple[Tuple[str, str], ...]


def _l_and_u(m: Any, j: Any, x: Any, a: Any, y: Any, b: Any, z: Any) -> Dict[str, Any]:
    return {"L": big_l(m, j, x, a, y, b, z), "U": big_u(m, j, x, a, y, b, z)}


def _closed_forms(m: Any, j: Any, x: Any, a: Any, y: Any, b: Any, z: Any) -> Dict[str, Any]:
    values = _l_and_u(m, j, x, a, y, b, z)
    values["LDistClosed"] = l_dist_closed(m, j, x, a, y, b, z)
    values["UDistClosed"] = u_dist_closed(m, j, x, a, y, b, z)
    return values


LU_EQUALITY = QuintupleLaw("L = U", "eq", _l_and_u, (("L", "U"),))
LU_INCLUSION = QuintupleLaw("L <= U", "leq", _l_and_u, (("L", "U"),))
CLOSED_FORMS = QuintupleLaw(
    "L = LDistClosed = UDistClosed = U",
    "eq",
    _closed_forms,
    (("L", "LDistClosed"), ("LDistClosed", "UDistClosed"), ("UDistClosed", "U")),
)


class SearchParameters(NamedTuple):
    budget: int
    seed: int
    samples: int
    window: Window
    workers: int


def resolve_parameters(
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    window: Optional[Window] = None,
    workers: Optional[int] = None,
) -> SearchParameters:
    """Fill unset search parameters from the runtime settings."""
    settings = get_settings()
    return SearchParameters(
        budget=settings.budget if budget is None else budget,
        seed=settings.seed if seed is None else seed,
        samples=settings.samples if samples is None else samples,
        window=settings.window if window is None else window,
        workers=settings.workers if workers is None else workers,
    )


def _violated(law: QuintupleLaw, values: Dict[str, Any], leq: Callable[[Any, Any], Any]) -> Any:
    """Boolean (or boolean array) marking where some pair fails."""
    bad: Any = False
    for left, right in law.pairs:
        lhs, rhs = values[left], values[right]
        holds = (lhs == rhs) if law.relation == "eq" else leq(lhs, rhs)
        bad = bad | ~np.asarray(holds)
    return bad


def _counterexample(
    lattice: LatticeDescriptor, law: QuintupleLaw, q: Tuple[Element, ...], index: Optional[int]
) -> Counterexample:
    values = law.sides(lattice.raw_meet, lattice.raw_join, *q)
    return Counterexample(
        labels=QUINTUPLE_LABELS, arguments=tuple(q), values=values, index=index
    )


def first_hit(
    task: Callable[[int], Optional[int]], count: int, workers: int = 1
) -> Optional[Tuple[int, int]]:
    """Run ``task(0..count-1)`` and return ``(i, task(i))`` for the first non-None.

    With several workers the tasks run concurrently, but results are read in
    index order. Tasks not yet started when a hit is found are cancelled.
    """
    if workers <= 1:
        for i in range(count):
            hit = task(i)
            if hit is not None:
                return i, hit
        return None

    executor = ThreadPoolExecutor(max_workers=workers)
    try:
        futures = [executor.submit(task, i) for i in range(count)]
        for i, future in enumerate(futures):
            hit = future.result()
            if hit is not None:
                return i, hit
        return None
    finally:
        executor.shutdown(wait=True, cancel_futures=True)


def _exhaustive_quintuples(
    lattice: LatticeDescriptor, law: QuintupleLaw, params: SearchParameters
) -> CheckReport:
    carrier = lattice.enumerate()
    ops = lattice.vector_ops()
    n = len(carrier)
    codes = ops.codes
    grid = np.meshgrid(codes, codes, codes, codes, indexing="ij")

    def vector_leq(u: Any, v: Any) -> Any:
        return ops.join(u, v) == v

    def first_violation(xi: int) -> Optional[int]:
        values = law.sides(ops.meet, ops.join, codes[xi], *grid)
        hits = np.flatnonzero(_violated(law, values, vector_leq))
        return int(hits[0]) if hits.size else None

    chunk = n**4
    found = first_hit(first_violation, n, params.workers)
    evaluations = chunk * (n if found is None else found[0] + 1)

    if found is None:
        logger.info(f"{law.name} holds on {lattice.name}: {evaluations} quintuples")
        return CheckReport(
            check=law.name,
            lattice=lattice.name,
            verdict="holds",
            mode="exhaustive",
            evaluations=evaluations,
        )
    xi, hit = found
    ai, yi, bi, zi = np.unravel_index(hit, (n, n, n, n))
    q = tuple(carrier[int(i)] for i in (xi, ai, yi, bi, zi))
    counterexample = _counterexample(lattice, law, q, xi * chunk + hit)
    logger.warning(f"{law.name} fails on {lattice.name} at {q}")
    return CheckReport(
        check=law.name,
        lattice=lattice.name,
        verdict="fails",
        mode="exhaustive",
        evaluations=evaluations,
        counterexample=counterexample,
    )


def _sampled_quintuples(
    lattice: LatticeDescriptor, law: QuintupleLaw, params: SearchParameters
) -> CheckReport:
    rng = random.Random(params.seed)
    m, j = lattice.raw_meet, lattice.raw_join
    for i in range(params.samples):
        q = tuple(lattice.sample(rng, params.window) for _ in range(5))
        values = law.sides(m, j, *q)
        if bool(_violated(law, values, lattice.raw_leq)):
            logger.warning(f"{law.name} fails on {lattice.name} at sample {i}: {q}")
            return CheckReport(
                check=law.name,
                lattice=lattice.name,
                verdict="fails",
                mode="sampled",
                seed=params.seed,
                evaluations=i + 1,
                counterexample=_counterexample(lattice, law, q, i),
            )
    logger.info(
        f"{law.name} holds on {lattice.name}: {params.samples} samples, seed {params.seed}"
    )
    return CheckReport(
        check=law.name,
        lattice=lattice.name,
        verdict="holds",
        mode="sampled",
        seed=params.seed,
        evaluations=params.samples,
    )


def search_quintuples(
    lattice: LatticeDescriptor,
    law: QuintupleLaw,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """Check ``law`` over all quintuples, or over seeded samples.

    The search is exhaustive when the lattice is finite and
    ``size**5 <= params.budget``; otherwise it samples.
    """
    params = params or resolve_parameters()
    size = lattice.size()
    if size is not None and size**5 <= params.budget:
        try:
            return _exhaustive_quintuples(lattice, law, params)
        except EnumerationError as e:
            logger.info(f"Falling back to sampling on {lattice.name}: {e}")
    return _sampled_quintuples(lattice, law, params)


def carrier_or_sampler(lattice: LatticeDescriptor, window: Window) -> Domain:
    """The finite carrier, or a window sampler for infinite lattices."""
    if lattice.is_finite:
        return lattice.enumerate()
    return lambda rng: lattice.sample(rng, window)


def search_tuples(
    check: str,
    lattice_name: str,
    domain: Domain,
    arity: int,
    predicate: Predicate,
    params: Optional[SearchParameters] = None,
    labels: Optional[Sequence[str]] = None,
) -> CheckReport:
    """Scalar law search over ``domain**arity``.

    ``predicate(*args)`` returns None when the law holds and a dict of the
    disagreeing values otherwise. A sequence domain is searched
    exhaustively when ``len(domain)**arity <= budget``; a callable domain is
    a sampler and always sampled.
    """
    params = params or resolve_parameters()
    labels = tuple(labels) if labels else tuple(f"v{i}" for i in range(arity))

    exhaustive = not callable(domain) and len(domain) ** arity <= params.budget
    if exhaustive:
        points: Iterator[Tuple[Element, ...]] = product(domain, repeat=arity)
    else:
        rng = random.Random(params.seed)
        if callable(domain):
            draw: Sampler = domain
        else:
            pool = list(domain)
            draw = lambda r: r.choice(pool)  # noqa: E731
        points = (
            tuple(draw(rng) for _ in range(arity)) for _ in range(params.samples)
        )

    mode = "exhaustive" if exhaustive else "sampled"
    seed = None if exhaustive else params.seed
    evaluations = 0
    for index, args in enumerate(points):
        evaluations += 1
        values = predicate(*args)
        if values is not None:
            logger.warning(f"{check} fails on {lattice_name} at {args}")
            return CheckReport(
                check=check,
                lattice=lattice_name,
                verdict="fails",
                mode=mode,
                seed=seed,
                evaluations=evaluations,
                counterexample=Counterexample(
                    labels=labels, arguments=args, values=values, index=index
                ),
            )
    logger.info(f"{check} holds on {lattice_name}: {evaluations} {mode} evaluations")
    return CheckReport(
        check=check,
        lattice=lattice_name,
        verdict="holds",
        mode=mode,
        seed=seed,
        evaluations=evaluations,
    )


def pairs_differ(pairs: List[Tuple[str, Any, Any]]) -> Optional[Dict[str, Any]]:
    """Predicate helper: values of the first unequal ``(name, lhs, rhs)``."""
    for name, lhs, rhs in pairs:
        if lhs != rhs:
            return {f"{name} lhs": lhs, f"{name} rhs": rhs}
    return None
