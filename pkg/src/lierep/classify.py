"""Reductive subalgebras of gl_n: enumeration and alpha-pruning.

enumerate_gln lists every nonzero reductive algebra with mu <= n in a
canonical, diffable order.  embeddability_check replays the maximal
subalgebra route: project modulo the one-dimensional center of gl_n,
compare alpha against the known maximal reductive subalgebras of
A_{n-1}, and combine with the centralizer-based embedding certificate.
The maximal subalgebra tables are data, not computed: exactly the two
transcribed host tables ship (A3 and A10), further hosts come from
user-supplied JSON files.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .expr import parse_expr
from .invariants import (
    ReductiveAlgebra,
    SimpleType,
    alpha,
    alpha_embedding_bound,
    dim_of,
    mu,
    mu_simple,
    simple_types_with_mu_at_most,
)

__all__ = [
    "HostTable",
    "PruneOutcome",
    "PruneRecord",
    "PruneVerdict",
    "AlphaUnavailable",
    "MissingTable",
    "SHIPPED_HOST_TABLES",
    "enumerate_gln",
    "enumeration_to_json",
    "mod_center_candidates",
    "alpha_prune",
    "embeddability_check",
    "parse_host",
    "load_host_tables",
    "load_alpha_table",
]


class AlphaUnavailable(Exception):
    """alpha of the pruning candidate is unknown, so nothing can be excluded."""


class MissingTable(Exception):
    """No maximal-subalgebra table for the required host."""

    def __init__(self, host: str):
        super().__init__(f"no host table for {host}")
        self.host = host


def parse_host(name: str) -> ReductiveAlgebra:
    """Host designator: an expression, the degenerate "A0", or "gl<n>"."""
    name = name.strip()
    if name == "A0":
        return ReductiveAlgebra()
    if name.startswith("gl") and name[2:].isdigit():
        n = int(name[2:])
        if n < 1:
            raise ValueError(f"bad gl designator {name!r}")
        if n == 1:
            return ReductiveAlgebra((), 1)
        return ReductiveAlgebra((SimpleType("A", n - 1),), 1)
    return parse_expr(name)


@dataclass(frozen=True)
class HostTable:
    """A host algebra together with its maximal reductive subalgebras (data)."""

    name: str
    host: ReductiveAlgebra
    maximals: tuple[ReductiveAlgebra, ...]

    def __post_init__(self) -> None:
        a_host = alpha(self.host)
        for m in self.maximals:
            a_m = alpha(m)
            if a_host is not None and a_m is not None and a_m > a_host:
                raise ValueError(
                    f"host table {self.name}: alpha({m}) = {a_m} exceeds alpha(host) = {a_host}"
                )


def _table(name: str, maximal_exprs: Sequence[str]) -> HostTable:
    return HostTable(
        name, parse_host(name), tuple(parse_expr(e) for e in maximal_exprs)
    )


# Transcribed maximal reductive subalgebra data for the two worked hosts.
SHIPPED_HOST_TABLES: dict[str, HostTable] = {
    "A3": _table("A3", ["B2", "A2+C^1", "A1+A1", "A1+A1+C^1"]),
    "A10": _table(
        "A10",
        ["A9+C^1", "A1+A8+C^1", "A2+A7+C^1", "A3+A6+C^1", "A4+A5+C^1", "B5"],
    ),
}


def enumerate_gln(n: int) -> list[ReductiveAlgebra]:
    """All nonzero reductive algebras with mu <= n, canonically sorted.

    Simple multisets range over all types with total mu <= n; for each,
    the center k runs while mu_abelian(k - l) fits the slack r = n - mu:
    k <= l for r = 0 and k <= l + floor(r^2/4) + 1 for r >= 1.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    types = simple_types_with_mu_at_most(n)
    found: list[ReductiveAlgebra] = []

    def emit(chosen: tuple[SimpleType, ...], used: int) -> None:
        ell = len(chosen)
        r = n - used
        k_max = ell + ((r * r) // 4 + 1 if r >= 1 else 0)
        k_min = 0 if chosen else 1
        for k in range(k_min, k_max + 1):
            found.append(ReductiveAlgebra(chosen, k))

    def rec(start: int, chosen: tuple[SimpleType, ...], used: int) -> None:
        emit(chosen, used)
        for i in range(start, len(types)):
            m = mu_simple(types[i])
            if used + m <= n:
                rec(i, chosen + (types[i],), used + m)

    rec(0, (), 0)
    found.sort(key=ReductiveAlgebra.sort_key)
    return found


def enumeration_to_json(algebras: Sequence[ReductiveAlgebra]) -> str:
    """Canonical JSON serialization of an enumeration (golden-file format)."""
    return json.dumps([str(g) for g in algebras], indent=2) + "\n"


def mod_center_candidates(g: ReductiveAlgebra) -> set[ReductiveAlgebra]:
    """Images of g modulo the one-dimensional center of gl_n.

    The center of gl_n meets g in a subspace of dimension at most one, so
    the projection is either g itself or g with one center line absorbed.
    """
    out = {g}
    if g.center_dim >= 1:
        out.add(g.with_center(g.center_dim - 1))
    return out


class PruneOutcome(enum.Enum):
    PROVEN_IMPOSSIBLE = "ProvenImpossible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class PruneRecord:
    candidate: ReductiveAlgebra
    host: str
    reason: str  # "alpha" | "dim" | "alpha-unknown" | "compatible" | ...
    excluded: bool


@dataclass(frozen=True)
class PruneVerdict:
    outcome: PruneOutcome
    trace: tuple[PruneRecord, ...]

    def excluded_hosts(self, candidate: ReductiveAlgebra) -> set[str]:
        return {r.host for r in self.trace if r.candidate == candidate and r.excluded}


def alpha_prune(
    candidate: ReductiveAlgebra,
    hosts: Sequence[ReductiveAlgebra],
    extra_alpha: Optional[Mapping[SimpleType, int]] = None,
) -> tuple[list[ReductiveAlgebra], list[PruneRecord]]:
    """Drop hosts that cannot contain the candidate, by alpha or dimension.

    A host is excluded when its alpha is known and strictly below the
    candidate's, or when it is plainly too small; hosts with unknown
    alpha survive with reason "alpha-unknown".
    """
    a_cand = alpha(candidate, extra_alpha)
    if a_cand is None:
        raise AlphaUnavailable(f"alpha({candidate}) is unavailable, cannot prune")
    survivors: list[ReductiveAlgebra] = []
    trace: list[PruneRecord] = []
    for host in hosts:
        a_host = alpha(host, extra_alpha)
        if a_host is not None and a_host < a_cand:
            trace.append(PruneRecord(candidate, str(host), "alpha", True))
        elif dim_of(host) < dim_of(candidate):
            trace.append(PruneRecord(candidate, str(host), "dim", True))
        elif a_host is None:
            survivors.append(host)
            trace.append(PruneRecord(candidate, str(host), "alpha-unknown", False))
        else:
            survivors.append(host)
            trace.append(PruneRecord(candidate, str(host), "compatible", False))
    return survivors, trace


def embeddability_check(
    g: ReductiveAlgebra,
    n: int,
    tables: Optional[Mapping[str, HostTable]] = None,
    extra_alpha: Optional[Mapping[SimpleType, int]] = None,
) -> PruneVerdict:
    """One level of the maximal-subalgebra route for g inside gl_n.

    When mu(g) <= n the embedding exists outright (the minimal
    representation is a witness), so the route reports Inconclusive
    immediately; this also keeps the verdict sound for inputs whose
    projections evade the depth-1 tables.  Otherwise each candidate
    modulo the gl_n center is tested against every maximal reductive
    subalgebra of A_{n-1} (alpha and dimension) and against the
    centralizer-based embedding certificate for gl_n itself;
    ProvenImpossible requires every candidate to be fully excluded.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if tables is None:
        tables = SHIPPED_HOST_TABLES
    if mu(g) <= n:
        record = PruneRecord(g, f"gl{n}", "mu-admits-embedding", False)
        return PruneVerdict(PruneOutcome.INCONCLUSIVE, (record,))
    key = f"A{n - 1}"
    if key not in tables:
        raise MissingTable(key)
    table = tables[key]
    trace: list[PruneRecord] = []
    all_excluded = True
    candidates = sorted(mod_center_candidates(g), key=lambda c: -c.center_dim)
    for cand in candidates:
        cand_excluded = False
        if not alpha_embedding_bound(cand, n):
            trace.append(PruneRecord(cand, f"gl{n}", "embedding-bound", True))
            cand_excluded = True
        survivors, sub = alpha_prune(cand, table.maximals, extra_alpha)
        trace.extend(sub)
        if not survivors:
            cand_excluded = True
        if not cand_excluded:
            all_excluded = False
    outcome = PruneOutcome.PROVEN_IMPOSSIBLE if all_excluded else PruneOutcome.INCONCLUSIVE
    return PruneVerdict(outcome, tuple(trace))


# ---------------------------------------------------------------------------
# user-supplied data files


def _host_table_from_obj(obj: dict) -> HostTable:
    if not isinstance(obj, dict) or "host" not in obj or "maximals" not in obj:
        raise ValueError('host table objects need "host" and "maximals" fields')
    name = str(obj["host"])
    return HostTable(name, parse_host(name), tuple(parse_expr(e) for e in obj["maximals"]))


def load_host_tables(path: Union[str, Path]) -> dict[str, HostTable]:
    """Load host tables from a JSON file (object or list) or a directory."""
    path = Path(path)
    tables: dict[str, HostTable] = {}
    if path.is_dir():
        for child in sorted(path.glob("*.json")):
            tables.update(load_host_tables(child))
        return tables
    data = json.loads(path.read_text())
    items = data if isinstance(data, list) else [data]
    for obj in items:
        table = _host_table_from_obj(obj)
        tables[table.name] = table
    return tables


def tables_from_env(env: Optional[Mapping[str, str]] = None) -> dict[str, HostTable]:
    """Shipped tables plus any found under $LIEREP_TABLES."""
    env = os.environ if env is None else env
    tables = dict(SHIPPED_HOST_TABLES)
    directory = env.get("LIEREP_TABLES")
    if directory:
        tables.update(load_host_tables(directory))
    return tables


def load_alpha_table(path: Union[str, Path]) -> dict[SimpleType, int]:
    """Extra alpha values: a JSON object mapping type names to integers.

    Example: {"B3": 5, "D4": 7}.  Used to extend invariants.alpha beyond
    the shipped values without editing the package.
    """
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ValueError("alpha table must be a JSON object")
    out: dict[SimpleType, int] = {}
    for name, value in data.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"alpha values must be positive integers, got {name}: {value!r}")
        out[SimpleType.from_name(name)] = value
    return out
